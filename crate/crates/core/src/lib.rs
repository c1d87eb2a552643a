//! Two-player games played through an EPR-type entangled pair, modelled in
//! the geometric algebra of three-dimensional space.
//!
//! Each player holds one qubit of
//! `|ψ⟩ = cos(γ/2)|00⟩ + i sin(γ/2)|11⟩`, applies a local rotation given by
//! three Euler angles and measures along one of two directions in the x–z
//! plane. The measured bits select an entry of a 2×2 payoff matrix.
//!
//! * [`ga`]: Cl(3,0) multivectors, rotors and the two-particle product space.
//! * [`epr`]: closed-form outcome probabilities.
//! * [`game`]: expected payoffs, Nash equilibria, the classical embedding.
//! * [`oracle`]: a plain complex state-vector model used for cross-checks.
//! * [`cli`]: the `eprgame` command set.
//!
//! ```
//! use epr_games::{find_equilibria, EntanglementAngle, PayoffMatrix};
//!
//! let pd = PayoffMatrix::prisoners_dilemma();
//! let report = find_equilibria(&pd, EntanglementAngle::MAXIMAL);
//! assert!(report.contains(1.0, 1.0, 0.0));
//! ```

pub mod cli;
pub mod epr;
pub mod error;
pub mod ga;
pub mod game;
pub mod oracle;

pub use epr::{
    outcome_distribution, outcome_probability, Direction, DirectionPair, DirectionTerms, EntanglementAngle,
    EprConfig, Outcome, OutcomeDistribution, PlayerParams,
};
pub use error::{Error, Result};
pub use ga::{rotor_from_euler, EulerAngles, Multivector3, Rotor, StateObservables, TwoParticleMultivector};
pub use game::{
    embedded_payoff, embedding_solver, expected_payoff_alice, expected_payoff_bob, find_equilibria,
    find_equilibria_general, pd_transition, pd_transition_angle, sh_mixed_ne, EmbeddingSolution, Equilibrium,
    EquilibriumKind, EquilibriumReport, PayoffMatrix, StrategyProfile,
};
