fn main() {
    println!("pursuit");
}
