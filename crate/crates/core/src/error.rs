use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("entanglement angle {0} lies outside [0, π/2]")]
    GammaOutOfRange(f64),

    #[error("probability {value} for outcome ({m},{n}) lies outside [0, 1] beyond tolerance; sign or angle convention mismatch")]
    ProbabilityOutOfRange { m: u8, n: u8, value: f64 },

    #[error("strategy probability {name} = {value} lies outside [0, 1]")]
    StrategyOutOfRange { name: &'static str, value: f64 },

    #[error("direction index {0} is not 1 or 2")]
    DirectionIndex(usize),

    #[error("outcome bit {0} is not 0 or 1")]
    OutcomeBit(usize),

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("non-finite angle {0}")]
    NonFiniteAngle(f64),

    #[error("not a prisoners' dilemma type game: {0}")]
    NotPrisonersDilemma(String),

    #[error("no transition in [0, π/2]: cos γ would have to be {0}")]
    NoTransition(f64),

    #[error("stag hunt conditions violated: {0}")]
    NotStagHunt(String),

    #[error("asymmetric game: Bob's matrix must be the transpose of Alice's")]
    AsymmetricGame,

    #[error("configuration error: {0}")]
    Config(String),
}
