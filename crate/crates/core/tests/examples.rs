mod bell_states {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bell_states.rs"));
}

mod prisoners_dilemma_transition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/prisoners_dilemma_transition.rs"));
}

mod stag_hunt_shift {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stag_hunt_shift.rs"));
}

mod classical_embedding {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classical_embedding.rs"));
}

mod cross_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cross_check.rs"));
}

mod entanglement_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/entanglement_sweep.rs"));
}

mod custom_angles {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_angles.rs"));
}

#[test]
fn bell_states_runs() {
    bell_states::run_example().expect("bell_states example should run");
}

#[test]
fn prisoners_dilemma_transition_runs() {
    prisoners_dilemma_transition::run_example().expect("prisoners_dilemma_transition example should run");
}

#[test]
fn stag_hunt_shift_runs() {
    stag_hunt_shift::run_example().expect("stag_hunt_shift example should run");
}

#[test]
fn classical_embedding_runs() {
    classical_embedding::run_example().expect("classical_embedding example should run");
}

#[test]
fn cross_check_runs() {
    cross_check::run_example().expect("cross_check example should run");
}

#[test]
fn entanglement_sweep_runs() {
    entanglement_sweep::run_example().expect("entanglement_sweep example should run");
}

#[test]
fn custom_angles_runs() {
    custom_angles::run_example().expect("custom_angles example should run");
}
