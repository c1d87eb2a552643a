//! Payoffs, Nash equilibria and the classical embedding for symmetric 2×2
//! games played in the EPR arrangement.
//!
//! Alice picks her first direction with probability `x`, Bob his with
//! probability `y`. With `Δ₁ = G₁₀ − G₀₀`, `Δ₂ = G₁₁ − G₀₁`, `Δ₃ = Δ₂ − Δ₁`
//! and `Δ₄ = G₀₀ − G₀₁ + G₁₀ − G₁₁`, Alice's expected payoff is
//!
//! ```text
//! Π_A(x,y) = ¼ [ ΣG
//!     + Δ₃ { x((X₁−X₂)Y₂ + (Z₁₂−Z₂₂) sin γ) + y((Y₁−Y₂)X₂ + (Z₂₁−Z₂₂) sin γ)
//!           + xy((X₁−X₂)(Y₁−Y₂) + sin γ (Z₁₁+Z₂₂−Z₁₂−Z₂₁)) + X₂Y₂ + Z₂₂ sin γ }
//!     − cos γ { (Δ₁+Δ₂)((X₁−X₂)x + X₂) − Δ₄((Y₁−Y₂)y + Y₂) } ]
//! ```
//!
//! Both players' unilateral payoff gaps are linear in the deviation, so every
//! equilibrium question reduces to the sign of a "response line"
//! `c(t) = slope · t + offset` in the opponent's mixing probability.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::epr::{DirectionPair, DirectionTerms, EntanglementAngle, EprConfig, PlayerParams};
use crate::error::{Error, Result};

/// Alice's payoffs `G_mn`; Bob's matrix is the transpose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffMatrix {
    pub g00: f64,
    pub g01: f64,
    pub g10: f64,
    pub g11: f64,
}

impl PayoffMatrix {
    pub const fn new(g00: f64, g01: f64, g10: f64, g11: f64) -> Self {
        Self { g00, g01, g10, g11 }
    }

    /// Prisoners' dilemma with payoffs (3, 0, 4, 2).
    pub const fn prisoners_dilemma() -> Self {
        Self::new(3.0, 0.0, 4.0, 2.0)
    }

    /// Stag hunt with payoffs (10, 0, 8, 7).
    pub const fn stag_hunt() -> Self {
        Self::new(10.0, 0.0, 8.0, 7.0)
    }

    /// `G_mn` for outcome bits `m` (Alice) and `n` (Bob).
    pub fn entry(&self, m: u8, n: u8) -> f64 {
        match (m, n) {
            (0, 0) => self.g00,
            (0, 1) => self.g01,
            (1, 0) => self.g10,
            _ => self.g11,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.g00, self.g10, self.g01, self.g11)
    }

    pub fn sum(&self) -> f64 {
        self.g00 + self.g01 + self.g10 + self.g11
    }

    pub fn deltas(&self) -> Deltas {
        let delta1 = self.g10 - self.g00;
        let delta2 = self.g11 - self.g01;
        Deltas {
            delta1,
            delta2,
            delta3: delta2 - delta1,
            delta4: self.g00 - self.g01 + self.g10 - self.g11,
        }
    }

    pub fn is_finite(&self) -> bool {
        [self.g00, self.g01, self.g10, self.g11].iter().all(|g| g.is_finite())
    }
}

/// Payoff differences that govern the equilibrium structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deltas {
    /// `G₁₀ − G₀₀`
    pub delta1: f64,
    /// `G₁₁ − G₀₁`
    pub delta2: f64,
    /// `Δ₂ − Δ₁`
    pub delta3: f64,
    /// `G₀₀ − G₀₁ + G₁₀ − G₁₁`
    pub delta4: f64,
}

/// Mixing probabilities: `x` for Alice's first direction, `y` for Bob's.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyProfile {
    pub x: f64,
    pub y: f64,
}

impl StrategyProfile {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        check_probability("x", x)?;
        check_probability("y", y)?;
        Ok(Self { x, y })
    }

    pub fn swapped(&self) -> Self {
        Self { x: self.y, y: self.x }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::StrategyOutOfRange { name, value })
    }
}

/// Alice's expected payoff from the expanded closed form.
pub fn expected_payoff_alice(profile: StrategyProfile, cfg: &EprConfig, game: &PayoffMatrix) -> f64 {
    let t = DirectionTerms::new(cfg);
    let d = game.deltas();
    let (sg, cg) = cfg.gamma.radians().sin_cos();
    let (x, y) = (profile.x, profile.y);
    let (x1, x2, y1, y2) = (t.x[0], t.x[1], t.y[0], t.y[1]);
    let [[z11, z12], [z21, z22]] = t.z;

    let correlated = x * ((x1 - x2) * y2 + (z12 - z22) * sg)
        + y * ((y1 - y2) * x2 + (z21 - z22) * sg)
        + x * y * ((x1 - x2) * (y1 - y2) + sg * (z11 + z22 - z12 - z21))
        + x2 * y2
        + z22 * sg;
    let local = (d.delta1 + d.delta2) * ((x1 - x2) * x + x2) - d.delta4 * ((y1 - y2) * y + y2);
    0.25 * (game.sum() + d.delta3 * correlated - cg * local)
}

/// Bob's expected payoff: Alice's formula with the players' roles exchanged.
/// For configurations where both players use the same angles this is
/// `Π_A(y, x)`.
pub fn expected_payoff_bob(profile: StrategyProfile, cfg: &EprConfig, game: &PayoffMatrix) -> f64 {
    expected_payoff_alice(profile.swapped(), &cfg.swapped(), game)
}

/// A player's payoff gap is `(t* − t) · line(opponent)`, where `line` is
/// affine in the opponent's mixing probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseLine {
    pub slope: f64,
    pub offset: f64,
}

impl ResponseLine {
    pub fn at(&self, opponent: f64) -> f64 {
        self.slope * opponent + self.offset
    }

    /// Gap `Π(t*, ·) − Π(t, ·)` against deviation `t`.
    pub fn gap(&self, own_star: f64, own: f64, opponent: f64) -> f64 {
        (own_star - own) * self.at(opponent)
    }

    fn is_zero(&self, tol: f64) -> bool {
        self.slope.abs() <= tol && self.offset.abs() <= tol
    }

    /// Root of the line, if it is not flat.
    fn root(&self, tol: f64) -> Option<f64> {
        (self.slope.abs() > tol).then(|| -self.offset / self.slope)
    }

    /// Sub-interval of [0, 1] on which the line is ≥ −tol (`nonneg`) or
    /// ≤ tol (otherwise).
    fn interval(&self, nonneg: bool, tol: f64) -> Option<(f64, f64)> {
        let (slope, offset) = if nonneg { (self.slope, self.offset) } else { (-self.slope, -self.offset) };
        if slope.abs() <= tol {
            return (offset >= -tol).then_some((0.0, 1.0));
        }
        let root = (-tol - offset) / slope;
        let (lo, hi) = if slope > 0.0 { (root.max(0.0), 1.0) } else { (0.0, root.min(1.0)) };
        (lo <= hi).then_some((lo, hi))
    }
}

/// Response lines of both players.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseLines {
    /// Alice's line, a function of Bob's `y`.
    pub alice: ResponseLine,
    /// Bob's line, a function of Alice's `x`.
    pub bob: ResponseLine,
}

impl ResponseLines {
    /// From the general payoff relation, valid for any configuration.
    pub fn general(cfg: &EprConfig, game: &PayoffMatrix) -> Self {
        let t = DirectionTerms::new(cfg);
        let d = game.deltas();
        let (sg, cg) = cfg.gamma.radians().sin_cos();
        let (x1, x2, y1, y2) = (t.x[0], t.x[1], t.y[0], t.y[1]);
        let [[z11, z12], [z21, z22]] = t.z;
        let slope = 0.25 * d.delta3 * ((x1 - x2) * (y1 - y2) + sg * (z11 + z22 - z12 - z21));
        let alice = ResponseLine {
            slope,
            offset: 0.25 * (d.delta3 * ((x1 - x2) * y2 + (z12 - z22) * sg) - cg * (d.delta1 + d.delta2) * (x1 - x2)),
        };
        let bob = ResponseLine {
            slope,
            offset: 0.25 * (d.delta3 * ((y1 - y2) * x2 + (z21 - z22) * sg) - cg * (d.delta1 + d.delta2) * (y1 - y2)),
        };
        Self { alice, bob }
    }

    /// Under the classical embedding: `½[Δ₃(2t − 1) − cos γ (Δ₁ + Δ₂)]` for both.
    pub fn embedded(game: &PayoffMatrix, gamma: EntanglementAngle) -> Self {
        let d = game.deltas();
        let line = ResponseLine {
            slope: d.delta3,
            offset: 0.5 * (-d.delta3 - gamma.radians().cos() * (d.delta1 + d.delta2)),
        };
        Self { alice: line, bob: line }
    }
}

/// `Π_A(x*, y*) − Π_A(x, y*)`; nonnegative for every `x` iff `x*` is a best response.
pub fn ne_gap_alice(x_star: f64, x: f64, y_star: f64, cfg: &EprConfig, game: &PayoffMatrix) -> Result<f64> {
    check_probability("x*", x_star)?;
    check_probability("x", x)?;
    check_probability("y*", y_star)?;
    Ok(ResponseLines::general(cfg, game).alice.gap(x_star, x, y_star))
}

/// `Π_B(x*, y*) − Π_B(x*, y)`.
pub fn ne_gap_bob(y_star: f64, y: f64, x_star: f64, cfg: &EprConfig, game: &PayoffMatrix) -> Result<f64> {
    check_probability("y*", y_star)?;
    check_probability("y", y)?;
    check_probability("x*", x_star)?;
    Ok(ResponseLines::general(cfg, game).bob.gap(y_star, y, x_star))
}

/// The two families of angle choices that make `X₁ = Y₁ = 1`, `X₂ = Y₂ = −1`
/// and every correlation term vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EmbeddingClass {
    /// `α₁ = 0`, directions `(0, π)`; twist and azimuth are free.
    FreeAzimuth { twist: f64, azimuth: f64 },
    /// `α₃ = 0`, directions `(α₁, α₁ − π)`; polar angle and twist are free.
    ZeroAzimuth { polar: f64, twist: f64 },
}

impl EmbeddingClass {
    pub fn params(&self) -> PlayerParams {
        match *self {
            Self::FreeAzimuth { twist, azimuth } => PlayerParams::new(0.0, twist, azimuth),
            Self::ZeroAzimuth { polar, twist } => PlayerParams::new(polar, twist, 0.0),
        }
    }

    pub fn directions(&self) -> DirectionPair {
        match *self {
            Self::FreeAzimuth { .. } => DirectionPair::new(0.0, std::f64::consts::PI),
            Self::ZeroAzimuth { polar, .. } => DirectionPair::new(polar, polar - std::f64::consts::PI),
        }
    }
}

/// Angle choices for both players that embed the classical game.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingSolution {
    pub alice: EmbeddingClass,
    pub bob: EmbeddingClass,
}

impl EmbeddingSolution {
    /// `α₁ = β₁ = 0`, directions `(0, π)`, free angles zero.
    pub const CANONICAL: Self = Self {
        alice: EmbeddingClass::FreeAzimuth { twist: 0.0, azimuth: 0.0 },
        bob: EmbeddingClass::FreeAzimuth { twist: 0.0, azimuth: 0.0 },
    };

    pub fn config(&self, gamma: EntanglementAngle) -> EprConfig {
        EprConfig {
            alice: self.alice.params(),
            bob: self.bob.params(),
            alice_directions: self.alice.directions(),
            bob_directions: self.bob.directions(),
            gamma,
        }
    }
}

/// The canonical embedding. The constraints do not depend on the payoffs.
pub fn embedding_solver(_game: &PayoffMatrix) -> EmbeddingSolution {
    EmbeddingSolution::CANONICAL
}

/// Whether a configuration satisfies the embedding constraints to `tol`.
pub fn is_embedded(cfg: &EprConfig, tol: f64) -> bool {
    let t = DirectionTerms::new(cfg);
    let near = |a: f64, b: f64| (a - b).abs() <= tol;
    near(t.x[0], 1.0)
        && near(t.y[0], 1.0)
        && near(t.x[1], -1.0)
        && near(t.y[1], -1.0)
        && t.z.iter().flatten().all(|z| z.abs() <= tol)
}

/// Alice's payoff in the embedded game:
/// `½[G₀₀ + G₁₁ − cos γ (G₀₀ − G₁₁) + 2xyΔ₃ − x{Δ₃ + cos γ (Δ₁+Δ₂)} − y{Δ₃ − cos γ Δ₄}]`.
pub fn embedded_payoff(profile: StrategyProfile, gamma: EntanglementAngle, game: &PayoffMatrix) -> f64 {
    let d = game.deltas();
    let cg = gamma.radians().cos();
    let (x, y) = (profile.x, profile.y);
    0.5 * (game.g00 + game.g11 - cg * (game.g00 - game.g11) + 2.0 * x * y * d.delta3
        - x * (d.delta3 + cg * (d.delta1 + d.delta2))
        - y * (d.delta3 - cg * d.delta4))
}

/// Bob's payoff in the embedded game, `Π_A(y, x)`.
pub fn embedded_payoff_bob(profile: StrategyProfile, gamma: EntanglementAngle, game: &PayoffMatrix) -> f64 {
    embedded_payoff(profile.swapped(), gamma, game)
}

/// Outcome probability in the embedded game for bits `m, n` and 1-based
/// direction indices `i, j`:
/// `¼[1 + cos γ((−1)^{m+i+1} + (−1)^{n+j+1}) + (−1)^{m+n+i+j}]`.
pub fn embedded_probability(m: u8, n: u8, i: usize, j: usize, gamma: EntanglementAngle) -> Result<f64> {
    for bit in [m, n] {
        if bit > 1 {
            return Err(Error::OutcomeBit(bit as usize));
        }
    }
    for index in [i, j] {
        if !(1..=2).contains(&index) {
            return Err(Error::DirectionIndex(index));
        }
    }
    let sign = |e: usize| if e.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (m, n) = (m as usize, n as usize);
    let cg = gamma.radians().cos();
    Ok(0.25 * (1.0 + cg * (sign(m + i + 1) + sign(n + j + 1)) + sign(m + n + i + j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    Pure,
    Mixed,
}

impl fmt::Display for EquilibriumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Self::Pure => "pure",
            Self::Mixed => "mixed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    pub profile: StrategyProfile,
    pub payoff_a: f64,
    pub payoff_b: f64,
    pub kind: EquilibriumKind,
    /// Every unilateral deviation strictly loses.
    pub strict: bool,
}

/// A straight piece of the equilibrium set, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub from: StrategyProfile,
    pub to: StrategyProfile,
}

/// Equilibria that are not isolated points.
#[derive(Debug, Clone, PartialEq)]
pub enum Continuum {
    /// Every profile is an equilibrium: both players are indifferent everywhere.
    Everywhere,
    Segments(Vec<Segment>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub gamma: EntanglementAngle,
    pub equilibria: Vec<Equilibrium>,
    pub continuum: Option<Continuum>,
    pub notes: Vec<String>,
}

impl EquilibriumReport {
    pub fn contains(&self, x: f64, y: f64, tol: f64) -> bool {
        let p = StrategyProfile { x, y };
        self.equilibria.iter().any(|e| e.profile.distance(&p) <= tol)
    }

    pub fn profiles(&self) -> Vec<StrategyProfile> {
        self.equilibria.iter().map(|e| e.profile).collect()
    }
}

/// Default slack for sign decisions on response lines, in payoff units.
pub const NE_TOL: f64 = 1e-12;

/// Enumerate equilibria given both response lines. `payoffs` supplies
/// `(Π_A, Π_B)` at a profile.
pub fn enumerate_equilibria(
    lines: &ResponseLines,
    gamma: EntanglementAngle,
    tol: f64,
    payoffs: impl Fn(StrategyProfile) -> (f64, f64),
) -> EquilibriumReport {
    let ResponseLines { alice, bob } = *lines;
    let mut equilibria = Vec::new();
    let mut notes = Vec::new();

    let mut push = |profile: StrategyProfile, kind, strict| {
        let (payoff_a, payoff_b) = payoffs(profile);
        equilibria.push(Equilibrium { profile, payoff_a, payoff_b, kind, strict });
    };

    // A pure choice t ∈ {0, 1} is a best response when (t − s)·c ≥ 0 for all s.
    let best = |t: f64, c: f64| if t == 1.0 { c >= -tol } else { c <= tol };
    for (x, y) in [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)] {
        let (ca, cb) = (alice.at(y), bob.at(x));
        if best(x, ca) && best(y, cb) {
            let strict = ca.abs() > tol && cb.abs() > tol;
            push(StrategyProfile { x, y }, EquilibriumKind::Pure, strict);
        }
    }

    if let (Some(y0), Some(x0)) = (alice.root(tol), bob.root(tol)) {
        let interior = |t: f64| t > tol && t < 1.0 - tol;
        if interior(x0) && interior(y0) {
            push(StrategyProfile { x: x0, y: y0 }, EquilibriumKind::Mixed, false);
        } else if (0.0..=1.0).contains(&x0) && (0.0..=1.0).contains(&y0) {
            notes.push(format!("interior candidate ({x0}, {y0}) sits on the boundary and coincides with a pure profile"));
        } else {
            notes.push(format!("interior candidate ({x0}, {y0}) lies outside [0,1]², omitted"));
        }
    }

    let continuum = if alice.is_zero(tol) && bob.is_zero(tol) {
        notes.push("both players are indifferent everywhere; every profile is an equilibrium".into());
        Some(Continuum::Everywhere)
    } else {
        let segments = continuum_segments(&alice, &bob, tol);
        if segments.is_empty() {
            None
        } else {
            Some(Continuum::Segments(segments))
        }
    };

    EquilibriumReport { gamma, equilibria, continuum, notes }
}

fn continuum_segments(alice: &ResponseLine, bob: &ResponseLine, tol: f64) -> Vec<Segment> {
    const MIN_LENGTH: f64 = 1e-9;
    let mut segments = Vec::new();
    // Alice indifferent at a pure y: every x is a best response, so the
    // equilibria are the x for which that y is Bob's best response.
    for y in [0.0, 1.0] {
        if alice.at(y).abs() <= tol {
            if let Some((lo, hi)) = bob.interval(y == 1.0, tol) {
                if hi - lo > MIN_LENGTH {
                    segments.push(Segment { from: StrategyProfile { x: lo, y }, to: StrategyProfile { x: hi, y } });
                }
            }
        }
    }
    for x in [0.0, 1.0] {
        if bob.at(x).abs() <= tol {
            if let Some((lo, hi)) = alice.interval(x == 1.0, tol) {
                if hi - lo > MIN_LENGTH {
                    segments.push(Segment { from: StrategyProfile { x, y: lo }, to: StrategyProfile { x, y: hi } });
                }
            }
        }
    }
    // A player indifferent everywhere adds the opponent's interior switch point.
    if alice.is_zero(tol) {
        if let Some(x0) = bob.root(tol).filter(|x| (0.0..=1.0).contains(x)) {
            segments.push(Segment { from: StrategyProfile { x: x0, y: 0.0 }, to: StrategyProfile { x: x0, y: 1.0 } });
        }
    }
    if bob.is_zero(tol) {
        if let Some(y0) = alice.root(tol).filter(|y| (0.0..=1.0).contains(y)) {
            segments.push(Segment { from: StrategyProfile { x: 0.0, y: y0 }, to: StrategyProfile { x: 1.0, y: y0 } });
        }
    }
    segments
}

/// Equilibria of the embedded game at entanglement `gamma`.
pub fn find_equilibria(game: &PayoffMatrix, gamma: EntanglementAngle) -> EquilibriumReport {
    find_equilibria_with_tol(game, gamma, NE_TOL)
}

pub fn find_equilibria_with_tol(game: &PayoffMatrix, gamma: EntanglementAngle, tol: f64) -> EquilibriumReport {
    let lines = ResponseLines::embedded(game, gamma);
    let mut report = enumerate_equilibria(&lines, gamma, tol, |p| {
        (embedded_payoff(p, gamma, game), embedded_payoff_bob(p, gamma, game))
    });
    if game.deltas().delta3.abs() <= tol {
        report.notes.push("Δ₃ = 0: best responses do not depend on the opponent".into());
    }
    report
}

/// Equilibria for an arbitrary configuration, from the general gap relations.
pub fn find_equilibria_general(cfg: &EprConfig, game: &PayoffMatrix) -> EquilibriumReport {
    let lines = ResponseLines::general(cfg, game);
    enumerate_equilibria(&lines, cfg.gamma, NE_TOL, |p| {
        (expected_payoff_alice(p, cfg, game), expected_payoff_bob(p, cfg, game))
    })
}

/// Transition angle computed two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    /// `arccos(Δ₃ / (Δ₁ + Δ₂))`
    pub analytic: f64,
    /// Boundary of the region where (1, 1) is an equilibrium, by bisection.
    pub bisected: f64,
    pub iterations: u32,
}

impl Transition {
    pub fn discrepancy(&self) -> f64 {
        (self.analytic - self.bisected).abs()
    }
}

/// Largest number of halvings used by the bisection.
pub const BISECTION_MAX_ITER: u32 = 60;
const BISECTION_WIDTH: f64 = 1e-12;
/// Sign slack for the bisection predicate; just above the size of cos(π/2) in f64.
const BISECTION_NE_TOL: f64 = 1e-15;

fn transition_ratio(game: &PayoffMatrix) -> Result<f64> {
    let d = game.deltas();
    if d.delta1 < 0.0 || d.delta2 < 0.0 || d.delta1 + d.delta2 <= 0.0 {
        return Err(Error::NotPrisonersDilemma(format!(
            "need Δ₁ ≥ 0, Δ₂ ≥ 0, Δ₁ + Δ₂ > 0; got Δ₁ = {}, Δ₂ = {}",
            d.delta1, d.delta2
        )));
    }
    let ratio = d.delta3 / (d.delta1 + d.delta2);
    if !(0.0..=1.0).contains(&ratio) {
        return Err(Error::NoTransition(ratio));
    }
    Ok(ratio)
}

/// Entanglement angle at which the quantum equilibrium (1, 1) appears in a
/// prisoners' dilemma type game: `arccos(Δ₃ / (Δ₁ + Δ₂))`.
pub fn pd_transition_angle(game: &PayoffMatrix) -> Result<f64> {
    transition_ratio(game).map(f64::acos)
}

/// Locate the same angle by bisecting on whether (1, 1) is in the embedded
/// game's equilibrium set.
pub fn bisect_transition(game: &PayoffMatrix) -> Result<(f64, u32)> {
    let ratio = transition_ratio(game)?;
    let has_cooperation = |gamma: f64| {
        let gamma = EntanglementAngle::new(gamma).expect("bisection stays in range");
        find_equilibria_with_tol(game, gamma, BISECTION_NE_TOL).contains(1.0, 1.0, 0.0)
    };
    if has_cooperation(0.0) {
        return Ok((0.0, 0));
    }
    if !has_cooperation(FRAC_PI_2) {
        return Err(Error::NoTransition(ratio));
    }
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    let mut iterations = 0;
    while hi - lo > BISECTION_WIDTH && iterations < BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if has_cooperation(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    Ok((0.5 * (lo + hi), iterations))
}

pub fn pd_transition(game: &PayoffMatrix) -> Result<Transition> {
    let analytic = pd_transition_angle(game)?;
    let (bisected, iterations) = bisect_transition(game)?;
    Ok(Transition { analytic, bisected, iterations })
}

/// Interior equilibrium of a stag hunt:
/// `x* = y* = [cos γ (Δ₁ + Δ₂) + Δ₂ − Δ₁] / (2Δ₃)`.
pub fn sh_mixed_ne(game: &PayoffMatrix, gamma: EntanglementAngle) -> Result<StrategyProfile> {
    let d = game.deltas();
    let ok = d.delta3 > d.delta2 && d.delta2 > 0.0 && d.delta1 + d.delta2 > 0.0 && d.delta3 > d.delta1 + d.delta2;
    if !ok {
        return Err(Error::NotStagHunt(format!(
            "need Δ₃ > Δ₂ > 0, Δ₁ + Δ₂ > 0 and Δ₃ > Δ₁ + Δ₂; got Δ₁ = {}, Δ₂ = {}, Δ₃ = {}",
            d.delta1, d.delta2, d.delta3
        )));
    }
    let t = (gamma.radians().cos() * (d.delta1 + d.delta2) + d.delta2 - d.delta1) / (2.0 * d.delta3);
    StrategyProfile::new(t, t)
}
