//! Clifford geometric algebra for one and two qubits.

mod multivector;
mod rotor;
mod two_particle;

pub use multivector::Multivector3;
pub use rotor::{rotor_from_euler, EulerAngles, Rotor, Spinor};
pub use two_particle::{
    iota_sigma_on, measurement_spinors, measurement_state, observables_ej, probability_ga,
    psi_e_psi, psi_j_psi, two_particle_state, StateObservables, TwoParticleMultivector,
    PROBABILITY_TOL,
};
