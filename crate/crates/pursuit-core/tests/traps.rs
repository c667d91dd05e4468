//! Exhaustive verification of the trap fragments: on every maximal conflux
//! of the k-regular test grids, every legal activation ends in capture or
//! with the confinement flag set, for all robber plays (robber forced to
//! move, as the trap arguments assume).

use pursuit_core::coord::{Coord, Dir};
use pursuit_core::decomp::{Conflux, Decomposition};
use pursuit_core::engine::{verify_controller, Verdict, VerifyOptions};
use pursuit_core::grid::{Axis, OrientedGrid};
use pursuit_core::strat::{StreamTrapController, Trap1Controller, Trap2Controller, Trap3Controller};

fn forced() -> VerifyOptions {
    VerifyOptions { allow_stay: false, max_product_states: 5_000_000 }
}

/// Entry-line vertices of a conflux: those with an in-neighbour outside.
fn entry_starts(g: &OrientedGrid, k: &Conflux) -> Vec<usize> {
    k.vertices()
        .into_iter()
        .filter(|v| {
            let (px, py) = k.progress(*v);
            px == 0 || py == 0
        })
        .map(|v| g.id(v))
        .collect()
}

#[test]
fn trap1_captures_on_square_confluxes() {
    // Square confluxes leave no escape: every activation ends in capture.
    let g = OrientedGrid::kregular(8, 2).unwrap();
    let d = Decomposition::new(&g);
    for k in d.confluxes(&g).collect::<Vec<_>>() {
        let proto = Trap1Controller::new(k);
        let starts = entry_starts(&g, &k);
        let report = verify_controller(&g, &proto, &starts, &forced()).unwrap();
        assert!(
            matches!(report.verdict, Verdict::AllCaptured { .. }),
            "conflux at ({},{}): {:?}",
            k.x0,
            k.y0,
            report.verdict
        );
        assert!(report.refused.is_empty());
    }
}

#[test]
fn trap1_confines_on_oblong_confluxes() {
    // Stream widths 2 and 4: the 4x2 confluxes admit confinement endings
    // (escape toward the long side), never escapes.
    let dirs = |s: &str| s.chars().map(|c| Dir::from_char(c).unwrap()).collect();
    let g = OrientedGrid::make(6, dirs("++----"), dirs("++----")).unwrap();
    let d = Decomposition::new(&g);
    let mut saw_confined = false;
    for k in d.confluxes(&g).collect::<Vec<_>>() {
        let proto = Trap1Controller::new(k);
        let starts = entry_starts(&g, &k);
        let report = verify_controller(&g, &proto, &starts, &forced()).unwrap();
        match report.verdict {
            Verdict::AllCaptured { .. } => {}
            Verdict::AllSettled { .. } => saw_confined = true,
            v => panic!("conflux at ({},{}): {:?}", k.x0, k.y0, v),
        }
    }
    assert!(saw_confined, "some oblong conflux must end in confinement");
}

#[test]
fn trap1_refuses_interior_starts() {
    let g = OrientedGrid::kregular(8, 2).unwrap();
    let d = Decomposition::new(&g);
    let k = d.confluxes(&g).next().unwrap();
    // The exit corner has both in-neighbours inside the conflux.
    let bad = g.id(k.exit_corner());
    let proto = Trap1Controller::new(k);
    let report = verify_controller(&g, &proto, &[bad], &forced()).unwrap();
    assert_eq!(report.refused.len(), 1);
}

#[test]
fn trap2_settles_all_starts_on_kregular() {
    for (n, kk) in [(8usize, 2usize), (12, 2), (12, 3)] {
        let g = OrientedGrid::kregular(n, kk).unwrap();
        let d = Decomposition::new(&g);
        for k in d.confluxes(&g).collect::<Vec<_>>() {
            let proto = Trap2Controller::new(k);
            let starts: Vec<usize> = k.vertices().iter().map(|v| g.id(*v)).collect();
            let report = verify_controller(&g, &proto, &starts, &forced()).unwrap();
            assert!(
                report.verdict.is_pass(),
                "conflux at ({},{}): {:?}",
                k.x0,
                k.y0,
                report.verdict
            );
            assert!(report.refused.is_empty());
        }
    }
}

#[test]
fn trap3_settles_all_starts_on_kregular() {
    for (n, kk) in [(8usize, 2usize), (12, 2), (12, 3)] {
        let g = OrientedGrid::kregular(n, kk).unwrap();
        let d = Decomposition::new(&g);
        for k in d.confluxes(&g).collect::<Vec<_>>() {
            let proto = Trap3Controller::at_posts(&g, k).unwrap();
            let starts: Vec<usize> = k.vertices().iter().map(|v| g.id(*v)).collect();
            let report = verify_controller(&g, &proto, &starts, &forced()).unwrap();
            assert!(
                report.verdict.is_pass(),
                "conflux at ({},{}): {:?}",
                k.x0,
                k.y0,
                report.verdict
            );
            assert!(report.refused.is_empty());
        }
    }
}

#[test]
fn stream_trap_confines_every_start() {
    let g = OrientedGrid::kregular(8, 2).unwrap();
    let d = Decomposition::new(&g);
    for axis in [Axis::Horizontal, Axis::Vertical] {
        let streams =
            if axis == Axis::Horizontal { d.h_streams().to_vec() } else { d.v_streams().to_vec() };
        for s in streams {
            for line_off in 0..s.width {
                for along in 0..8 {
                    let v = match axis {
                        Axis::Horizontal => Coord::new((s.first_line + line_off) % 8, along),
                        Axis::Vertical => Coord::new(along, (s.first_line + line_off) % 8),
                    };
                    // Cops start on the robber's projections (m_i = 0).
                    let last = (s.first_line + s.width - 1) % 8;
                    let (ca, cb) = match axis {
                        Axis::Horizontal => {
                            (Coord::new(s.first_line, v.y), Coord::new(last, v.y))
                        }
                        Axis::Vertical => (Coord::new(v.x, s.first_line), Coord::new(v.x, last)),
                    };
                    let proto = StreamTrapController::new(axis, s.first_line, s.width, ca, cb);
                    let report = verify_controller(&g, &proto, &[g.id(v)], &forced()).unwrap();
                    assert!(report.verdict.is_pass(), "start {v}: {:?}", report.verdict);
                    assert!(report.refused.is_empty(), "start {v} refused");
                }
            }
        }
    }
}
