//! Game-loop and verifier behaviour on small boards.

use pursuit_core::engine::{
    play, replay_matches, verify_controller, ActivationError, AdjDigraph, Controller, Digraph,
    GameConfig, KeyWriter, Outcome, RobberPolicy, StationaryController, Verdict, VerifyOptions,
};
use pursuit_core::grid::OrientedGrid;
use pursuit_core::strat::{chase_step, ChaserController};

#[derive(Clone)]
struct ParkAndChase {
    park: usize,
    chaser: usize,
}

impl ParkAndChase {
    fn new(park: usize, chaser_start: usize) -> ParkAndChase {
        ParkAndChase { park, chaser: chaser_start }
    }
}

impl<G: Digraph> Controller<G> for ParkAndChase {
    fn name(&self) -> &'static str {
        "park-and-chase"
    }

    fn cop_count(&self) -> usize {
        2
    }

    fn place(&mut self, _g: &G) -> Vec<usize> {
        vec![self.park, self.chaser]
    }

    fn observe(&mut self, _g: &G, _robber: usize) -> Result<(), ActivationError> {
        Ok(())
    }

    fn step(&mut self, g: &G, robber: usize) -> Vec<usize> {
        self.chaser = chase_step(g, self.chaser, robber);
        vec![self.park, self.chaser]
    }

    fn write_state_key(&self, out: &mut Vec<u8>) {
        KeyWriter::usize(out, self.chaser);
    }

    fn clone_box(&self) -> Box<dyn Controller<G>> {
        Box::new(self.clone())
    }
}

#[test]
fn cop_on_robber_start_is_captured_at_step_zero() {
    let g = AdjDigraph::directed_cycle(5);
    let mut c = StationaryController::new(vec![3]);
    let mut robber = RobberPolicy::scripted(3, vec![], None);
    let t = play(&g, &mut c, &mut robber, &GameConfig::default()).unwrap();
    assert_eq!(t.outcome, Outcome::Captured { step: 0 });
}

#[test]
fn lone_stationary_cop_never_wins_on_a_cycle() {
    let g = AdjDigraph::directed_cycle(5);
    let mut c = StationaryController::new(vec![0]);
    let mut robber = RobberPolicy::Greedy;
    let t = play(&g, &mut c, &mut robber, &GameConfig::default()).unwrap();
    assert!(matches!(t.outcome, Outcome::NonCapture { .. } | Outcome::Escaped { .. }));
}

#[test]
fn verifier_returns_replayable_escape_cycle() {
    let g = OrientedGrid::uniform(4);
    let proto = StationaryController::new(vec![0]);
    let starts: Vec<usize> = (1..g.order()).collect();
    let report =
        verify_controller(&g, &proto, &starts, &VerifyOptions::default()).unwrap();
    let (start, moves) = match report.verdict {
        Verdict::Escape { start, moves, .. } => (start, moves),
        v => panic!("expected escape, got {v:?}"),
    };
    // Replay the witness as a scripted robber: the play must loop.
    let mut c = StationaryController::new(vec![0]);
    let mut robber = RobberPolicy::scripted(start, moves[1..].to_vec(), Some(0));
    let t = play(&g, &mut c, &mut robber, &GameConfig::default()).unwrap();
    assert!(matches!(t.outcome, Outcome::NonCapture { .. }), "{:?}", t.outcome);
}

#[test]
fn park_and_chase_wins_directed_cycles() {
    for n in 3..=12 {
        let g = AdjDigraph::directed_cycle(n);
        let proto = ParkAndChase::new(0, 1);
        let starts: Vec<usize> = (0..n).collect();
        let report =
            verify_controller(&g, &proto, &starts, &VerifyOptions::default()).unwrap();
        assert!(
            matches!(report.verdict, Verdict::AllCaptured { .. }),
            "C_{n}: {:?}",
            report.verdict
        );
    }
}

#[test]
fn lone_chaser_loses_on_uniform_grid_with_witness() {
    let g = OrientedGrid::uniform(5);
    let proto = ChaserController::new(0);
    let starts: Vec<usize> = (1..g.order()).collect();
    let report = verify_controller(&g, &proto, &starts, &VerifyOptions::default()).unwrap();
    assert!(matches!(report.verdict, Verdict::Escape { .. }));
}

#[test]
fn chaser_strictly_approaches_a_stationary_robber() {
    let g = OrientedGrid::uniform(6);
    let mut c = ChaserController::new(0);
    let robber_at = g.order() - 1;
    let mut cop = 0usize;
    let mut last = g.directed_distances_to(robber_at)[cop];
    let ctrl: &mut dyn Controller<OrientedGrid> = &mut c;
    ctrl.place(&g);
    ctrl.observe(&g, robber_at).unwrap();
    for _ in 0..100 {
        let cops = ctrl.step(&g, robber_at);
        cop = cops[0];
        if cop == robber_at {
            return; // captured
        }
        let d = g.directed_distances_to(robber_at)[cop];
        assert!(d < last, "chaser distance must strictly decrease");
        last = d;
    }
    panic!("chaser never reached a stationary robber");
}

#[test]
fn greedy_robber_is_forced_to_move_by_chaser() {
    // Over a long simulation the robber can never stay put for more than
    // n^2 consecutive steps without being captured.
    let g = OrientedGrid::uniform(6);
    let mut c = ChaserController::new(0);
    let mut robber = RobberPolicy::Greedy;
    let config = GameConfig { max_steps: 10_000, forced_robber: false, detect_cycles: false };
    let t = play(&g, &mut c, &mut robber, &config).unwrap();
    assert!(matches!(t.outcome, Outcome::Escaped { .. }), "{:?}", t.outcome);
    let mut still = 0usize;
    let mut prev = t.initial_robber;
    let mut longest = 0usize;
    for s in &t.steps {
        if s.robber == prev {
            still += 1;
        } else {
            longest = longest.max(still);
            still = 0;
        }
        prev = s.robber;
    }
    assert!(longest.max(still) < 36, "robber stalled too long: {longest}");
}

#[test]
fn traces_replay_deterministically() {
    let g = OrientedGrid::random(6, 11);
    let mut c = ChaserController::new(0);
    let mut robber = RobberPolicy::random(99);
    let config = GameConfig { max_steps: 300, forced_robber: false, detect_cycles: false };
    let t = play(&g, &mut c, &mut robber, &config).unwrap();
    let ok = replay_matches(&g, &|| Box::new(ChaserController::new(0)), &t).unwrap();
    assert!(ok, "replay must reproduce the outcome");
}
