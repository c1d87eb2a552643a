//! Closed-form outcome probabilities for the EPR arrangement.
//!
//! Each player holds one qubit of
//! `(A ⊗ B)(cos γ/2 |00⟩ + sin γ/2 |11⟩)` and measures it along one of two
//! directions in the σ₃σ₁ plane. A direction is given by its Bloch angle κ,
//! i.e. the unit vector `(sin κ, 0, cos κ)`. With
//!
//! ```text
//! X = cos α₁ cos κ¹ + cos α₃ sin α₁ sin κ¹            (Alice, likewise Y for Bob)
//! F = cos α₂ (cos κ sin α₁ − cos α₃ sin κ cos α₁) + sin κ sin α₂ sin α₃
//! U = −sin α₂ (cos κ sin α₁ − cos α₃ sin κ cos α₁) + sin κ cos α₂ sin α₃
//! Z = F G − U V
//! ```
//!
//! the probability of outcome bits `(m, n)` on direction pair `(i, j)` is
//!
//! ```text
//! P_mn = ¼ [1 + cos γ ((−1)^m X_i + (−1)^n Y_j) + (−1)^{m+n} (X_i Y_j + sin γ Z_ij)]
//! ```
//!
//! X is the component of the player's rotated σ₃ along the measurement
//! direction, and −F, −U are the components of the rotated σ₁ and σ₂.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::ga::EulerAngles;

/// Euler angles of one player's local rotor.
pub type PlayerParams = EulerAngles;

/// A player's two measurement directions (Bloch angles, radians).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionPair {
    pub first: f64,
    pub second: f64,
}

impl DirectionPair {
    pub const fn new(first: f64, second: f64) -> Self {
        Self { first, second }
    }

    pub fn get(&self, direction: Direction) -> f64 {
        match direction {
            Direction::First => self.first,
            Direction::Second => self.second,
        }
    }
}

/// Which of a player's two directions is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    First,
    Second,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::First, Direction::Second];

    /// 1-based index as used in `κ₁`, `κ₂`.
    pub fn from_index(index: usize) -> Result<Self> {
        match index {
            1 => Ok(Self::First),
            2 => Ok(Self::Second),
            other => Err(Error::DirectionIndex(other)),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Self::First => 1,
            Self::Second => 2,
        }
    }
}

/// Measurement result on one arm; `Zero` is the `|0⟩` (+1) outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Zero,
    One,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Zero, Outcome::One];

    pub fn from_bit(bit: usize) -> Result<Self> {
        match bit {
            0 => Ok(Self::Zero),
            1 => Ok(Self::One),
            other => Err(Error::OutcomeBit(other)),
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
        }
    }

    /// `(−1)^m`
    pub fn sign(self) -> f64 {
        match self {
            Self::Zero => 1.0,
            Self::One => -1.0,
        }
    }
}

/// Entanglement angle γ ∈ [0, π/2]; 0 is a product state, π/2 maximal.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntanglementAngle(f64);

impl EntanglementAngle {
    pub const NONE: Self = Self(0.0);
    pub const MAXIMAL: Self = Self(FRAC_PI_2);

    pub fn new(gamma: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_2).contains(&gamma) {
            Ok(Self(gamma))
        } else {
            Err(Error::GammaOutOfRange(gamma))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Everything that fixes the quantum side of a game.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EprConfig {
    pub alice: PlayerParams,
    pub bob: PlayerParams,
    pub alice_directions: DirectionPair,
    pub bob_directions: DirectionPair,
    pub gamma: EntanglementAngle,
}

impl EprConfig {
    /// Exchange the roles of the two players.
    pub fn swapped(&self) -> Self {
        Self {
            alice: self.bob,
            bob: self.alice,
            alice_directions: self.bob_directions,
            bob_directions: self.alice_directions,
            gamma: self.gamma,
        }
    }

    pub fn with_gamma(&self, gamma: EntanglementAngle) -> Self {
        Self { gamma, ..*self }
    }
}

/// `X(κ)` for Alice or `Y(κ)` for Bob: `cos e₁ cos κ + cos e₃ sin e₁ sin κ`.
pub fn alignment(kappa: f64, p: &PlayerParams) -> f64 {
    p.polar.cos() * kappa.cos() + p.azimuth.cos() * p.polar.sin() * kappa.sin()
}

/// `(F, U)` for Alice, or `(G, V)` when given Bob's angles.
pub fn transverse_components(kappa: f64, p: &PlayerParams) -> (f64, f64) {
    let (s1, c1) = p.polar.sin_cos();
    let (s2, c2) = p.twist.sin_cos();
    let (s3, c3) = p.azimuth.sin_cos();
    let (sk, ck) = kappa.sin_cos();
    let tilt = ck * s1 - c3 * sk * c1;
    let f = c2 * tilt + sk * s2 * s3;
    let u = -s2 * tilt + sk * c2 * s3;
    (f, u)
}

/// `Z(κ¹, κ²) = F(κ¹) G(κ²) − U(κ¹) V(κ²)`.
pub fn correlation_term(kappa1: f64, kappa2: f64, alice: &PlayerParams, bob: &PlayerParams) -> f64 {
    let (f, u) = transverse_components(kappa1, alice);
    let (g, v) = transverse_components(kappa2, bob);
    f * g - u * v
}

/// The direction-dependent quantities `X_i`, `Y_j` and `Z_ij` of a config.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionTerms {
    pub x: [f64; 2],
    pub y: [f64; 2],
    /// `z[i][j]` with 0-based direction indices.
    pub z: [[f64; 2]; 2],
}

impl DirectionTerms {
    pub fn new(cfg: &EprConfig) -> Self {
        let ka = [cfg.alice_directions.first, cfg.alice_directions.second];
        let kb = [cfg.bob_directions.first, cfg.bob_directions.second];
        let x = ka.map(|k| alignment(k, &cfg.alice));
        let y = kb.map(|k| alignment(k, &cfg.bob));
        let z = ka.map(|k1| kb.map(|k2| correlation_term(k1, k2, &cfg.alice, &cfg.bob)));
        Self { x, y, z }
    }

    pub fn x(&self, i: Direction) -> f64 {
        self.x[i.index() - 1]
    }

    pub fn y(&self, j: Direction) -> f64 {
        self.y[j.index() - 1]
    }

    pub fn z(&self, i: Direction, j: Direction) -> f64 {
        self.z[i.index() - 1][j.index() - 1]
    }
}

/// Probabilities of the four outcomes for one direction pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeDistribution {
    pub p00: f64,
    pub p01: f64,
    pub p10: f64,
    pub p11: f64,
}

impl OutcomeDistribution {
    pub fn get(&self, m: Outcome, n: Outcome) -> f64 {
        match (m, n) {
            (Outcome::Zero, Outcome::Zero) => self.p00,
            (Outcome::Zero, Outcome::One) => self.p01,
            (Outcome::One, Outcome::Zero) => self.p10,
            (Outcome::One, Outcome::One) => self.p11,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.p00, self.p01, self.p10, self.p11]
    }

    pub fn sum(&self) -> f64 {
        self.as_array().iter().sum()
    }
}

/// Slack below zero that is treated as rounding and clamped.
pub const NEGATIVE_CLAMP_TOL: f64 = 1e-12;

/// Unclamped value of the closed-form probability.
pub fn outcome_probability_raw(m: Outcome, n: Outcome, i: Direction, j: Direction, cfg: &EprConfig) -> f64 {
    let terms = DirectionTerms::new(cfg);
    raw_from_terms(m, n, i, j, &terms, cfg.gamma)
}

fn raw_from_terms(m: Outcome, n: Outcome, i: Direction, j: Direction, terms: &DirectionTerms, gamma: EntanglementAngle) -> f64 {
    let (sg, cg) = gamma.radians().sin_cos();
    let (x, y, z) = (terms.x(i), terms.y(j), terms.z(i, j));
    0.25 * (1.0 + cg * (m.sign() * x + n.sign() * y) + m.sign() * n.sign() * (x * y + sg * z))
}

fn checked(m: Outcome, n: Outcome, p: f64) -> Result<f64> {
    if p < 0.0 {
        if p >= -NEGATIVE_CLAMP_TOL {
            log::debug!("clamping probability {p:e} for outcome ({},{}) to zero", m.bit(), n.bit());
            return Ok(0.0);
        }
    } else if p <= 1.0 + NEGATIVE_CLAMP_TOL {
        return Ok(p);
    }
    Err(Error::ProbabilityOutOfRange { m: m.bit(), n: n.bit(), value: p })
}

/// Probability of outcome `(m, n)` when Alice measures direction `i` and Bob
/// direction `j`.
pub fn outcome_probability(m: Outcome, n: Outcome, i: Direction, j: Direction, cfg: &EprConfig) -> Result<f64> {
    checked(m, n, outcome_probability_raw(m, n, i, j, cfg))
}

pub fn outcome_distribution(i: Direction, j: Direction, cfg: &EprConfig) -> Result<OutcomeDistribution> {
    let terms = DirectionTerms::new(cfg);
    distribution_from_terms(i, j, &terms, cfg.gamma)
}

pub(crate) fn distribution_from_terms(i: Direction, j: Direction, terms: &DirectionTerms, gamma: EntanglementAngle) -> Result<OutcomeDistribution> {
    let p = |m, n| checked(m, n, raw_from_terms(m, n, i, j, terms, gamma));
    Ok(OutcomeDistribution {
        p00: p(Outcome::Zero, Outcome::Zero)?,
        p01: p(Outcome::Zero, Outcome::One)?,
        p10: p(Outcome::One, Outcome::Zero)?,
        p11: p(Outcome::One, Outcome::One)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const EPS: f64 = 1e-15;

    fn player(a1: f64, a2: f64, a3: f64) -> PlayerParams {
        PlayerParams::new(a1, a2, a3)
    }

    fn cfg(alice: PlayerParams, bob: PlayerParams, ka: DirectionPair, kb: DirectionPair, gamma: f64) -> EprConfig {
        EprConfig {
            alice,
            bob,
            alice_directions: ka,
            bob_directions: kb,
            gamma: EntanglementAngle::new(gamma).unwrap(),
        }
    }

    fn embedded(gamma: f64) -> EprConfig {
        let k = DirectionPair::new(0.0, PI);
        cfg(player(0.0, 0.3, 1.1), player(0.0, -0.8, 2.0), k, k, gamma)
    }

    #[test]
    fn alignment_examples() {
        assert!((alignment(0.0, &player(0.0, 0.4, 1.7)) - 1.0).abs() < EPS);
        assert!((alignment(PI, &player(0.0, 0.0, 0.0)) + 1.0).abs() < EPS);
        assert!((alignment(FRAC_PI_2, &player(FRAC_PI_2, 0.0, 0.0)) - 1.0).abs() < EPS);
    }

    #[test]
    fn transverse_examples() {
        // polar = 0: twist and azimuth combine into a single z rotation
        for k in [0.0, 0.7, -2.5] {
            let (f, u) = transverse_components(k, &player(0.0, 0.4, 0.5));
            assert!((f + k.sin() * 0.9f64.cos()).abs() < EPS, "κ={k}");
            assert!((u - k.sin() * 0.9f64.sin()).abs() < EPS, "κ={k}");
        }
        let (f, u) = transverse_components(0.0, &player(FRAC_PI_2, 0.0, 0.0));
        assert!((f - 1.0).abs() < EPS && u.abs() < EPS);
        for k in [0.0, PI] {
            let (f, u) = transverse_components(k, &player(0.0, 1.3, 0.9));
            assert!(f.abs() < EPS && u.abs() < EPS);
        }
    }

    #[test]
    fn correlation_term_without_twist_or_azimuth() {
        // hand-expanded: F = sin(α₁−κ¹), U = 0, so Z = sin(α₁−κ¹) sin(β₁−κ²)
        for &(a1, b1, k1, k2) in &[(0.3, 1.2, -0.4, 2.2), (2.9, -1.0, 0.5, 0.1), (1.0, 1.0, 1.0, -1.0)] {
            let z = correlation_term(k1, k2, &player(a1, 0.0, 0.0), &player(b1, 0.0, 0.0));
            assert!((z - (a1 - k1).sin() * (b1 - k2).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn embedded_correlation_terms_vanish() {
        let t = DirectionTerms::new(&embedded(0.4));
        assert_eq!(t.x, [1.0, -1.0]);
        assert_eq!(t.y, [1.0, -1.0]);
        for row in t.z {
            for z in row {
                assert!(z.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn aligned_product_state_is_certain() {
        let c = cfg(PlayerParams::IDENTITY, PlayerParams::IDENTITY, DirectionPair::new(0.0, 1.0), DirectionPair::new(0.0, 1.0), 0.0);
        let d = outcome_distribution(Direction::First, Direction::First, &c).unwrap();
        assert_eq!(d.as_array(), [1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn product_state_factorizes() {
        let c = cfg(player(0.4, 1.0, -0.3), player(2.0, 0.2, 0.8), DirectionPair::new(0.3, 1.9), DirectionPair::new(-0.7, 2.5), 0.0);
        let t = DirectionTerms::new(&c);
        for i in Direction::BOTH {
            for j in Direction::BOTH {
                for m in Outcome::BOTH {
                    for n in Outcome::BOTH {
                        let p = outcome_probability(m, n, i, j, &c).unwrap();
                        let f = 0.5 * (1.0 + m.sign() * t.x(i)) * 0.5 * (1.0 + n.sign() * t.y(j));
                        assert!((p - f).abs() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn embedded_distributions() {
        let d = outcome_distribution(Direction::First, Direction::First, &embedded(FRAC_PI_2)).unwrap();
        for (a, b) in d.as_array().iter().zip([0.5, 0.0, 0.0, 0.5]) {
            assert!((a - b).abs() < 1e-15);
        }
        let d = outcome_distribution(Direction::Second, Direction::Second, &embedded(FRAC_PI_2)).unwrap();
        for (a, b) in d.as_array().iter().zip([0.5, 0.0, 0.0, 0.5]) {
            assert!((a - b).abs() < 1e-15);
        }
        let d = outcome_distribution(Direction::First, Direction::Second, &embedded(0.0)).unwrap();
        for (a, b) in d.as_array().iter().zip([0.0, 1.0, 0.0, 0.0]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn index_and_bit_validation() {
        assert_eq!(Direction::from_index(2).unwrap(), Direction::Second);
        assert_eq!(Direction::from_index(3), Err(Error::DirectionIndex(3)));
        assert_eq!(Outcome::from_bit(1).unwrap().sign(), -1.0);
        assert_eq!(Outcome::from_bit(2), Err(Error::OutcomeBit(2)));
        assert!(EntanglementAngle::new(-1e-9).is_err());
        assert!(EntanglementAngle::new(FRAC_PI_2 + 1e-9).is_err());
    }

    #[test]
    fn clamping_policy() {
        assert_eq!(checked(Outcome::Zero, Outcome::Zero, -5e-13), Ok(0.0));
        assert!(checked(Outcome::Zero, Outcome::One, -1e-9).is_err());
        assert!(checked(Outcome::One, Outcome::One, 1.0 + 1e-9).is_err());
        assert_eq!(checked(Outcome::One, Outcome::Zero, 0.25), Ok(0.25));
    }
}
