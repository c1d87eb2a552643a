//! Seeded three-way comparison of the probability pipelines.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::epr::{outcome_probability_raw, Direction, DirectionPair, EntanglementAngle, EprConfig, Outcome, PlayerParams};
use crate::ga::{two_particle_state, Rotor, StateObservables};
use crate::oracle::{build_state, joint_probability};

/// One random draw: state parameters and a pair of measurement directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub index: usize,
    pub gamma: f64,
    pub alice: PlayerParams,
    pub bob: PlayerParams,
    pub kappa1: f64,
    pub kappa2: f64,
}

impl Sample {
    pub fn draw(index: usize, rng: &mut impl Rng) -> Self {
        let mut angle = || rng.random_range(0.0..TAU);
        let alice = PlayerParams::new(angle(), angle(), angle());
        let bob = PlayerParams::new(angle(), angle(), angle());
        let (kappa1, kappa2) = (angle(), angle());
        let gamma = rng.random_range(0.0..=FRAC_PI_2);
        Self { index, gamma, alice, bob, kappa1, kappa2 }
    }

    fn config(&self) -> EprConfig {
        EprConfig {
            alice: self.alice,
            bob: self.bob,
            alice_directions: DirectionPair::new(self.kappa1, self.kappa1),
            bob_directions: DirectionPair::new(self.kappa2, self.kappa2),
            gamma: EntanglementAngle::new(self.gamma).expect("drawn inside [0, π/2]"),
        }
    }

    /// `[ga, closed form, oracle]` for each outcome `(m, n)` in order 00, 01, 10, 11.
    /// A pipeline that rejects its result yields NaN.
    pub fn evaluate(&self) -> [[f64; 3]; 4] {
        let cfg = self.config();
        let observables = two_particle_state(
            &Rotor::from_euler(self.alice),
            &Rotor::from_euler(self.bob),
            self.gamma,
        )
        .map(|psi| StateObservables::new(&psi));
        let ket = build_state(self.gamma, self.alice, self.bob);

        let mut out = [[f64::NAN; 3]; 4];
        for (k, row) in out.iter_mut().enumerate() {
            let (m, n) = ((k / 2) as u8, (k % 2) as u8);
            if let Ok(obs) = &observables {
                row[0] = obs.outcome_probability(self.kappa1, self.kappa2, m, n).unwrap_or(f64::NAN);
            }
            let (om, on) = (Outcome::BOTH[m as usize], Outcome::BOTH[n as usize]);
            row[1] = outcome_probability_raw(om, on, Direction::First, Direction::First, &cfg);
            if let Ok(ket) = &ket {
                row[2] = joint_probability(ket, m, n, self.kappa1, self.kappa2).unwrap_or(f64::NAN);
            }
        }
        out
    }

    /// Largest pairwise disagreement over all outcomes; NaN propagates as infinity.
    pub fn max_deviation(&self) -> f64 {
        self.evaluate()
            .iter()
            .flat_map(|[a, b, c]| [(a - b).abs(), (a - c).abs(), (b - c).abs()])
            .map(|d| if d.is_nan() { f64::INFINITY } else { d })
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.alice.as_array();
        let b = self.bob.as_array();
        writeln!(f, "sample {}", self.index)?;
        writeln!(f, "  gamma  = {:e}", self.gamma)?;
        writeln!(f, "  alice  = [{:e}, {:e}, {:e}]", a[0], a[1], a[2])?;
        writeln!(f, "  bob    = [{:e}, {:e}, {:e}]", b[0], b[1], b[2])?;
        writeln!(f, "  kappa1 = {:e}", self.kappa1)?;
        write!(f, "  kappa2 = {:e}", self.kappa2)?;
        for (k, [ga, closed, oracle]) in self.evaluate().iter().enumerate() {
            write!(f, "\n  P{}{}: ga {ga:e}  closed {closed:e}  oracle {oracle:e}", k / 2, k % 2)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub samples: usize,
    pub tol: f64,
    pub max_deviation: f64,
    pub first_failure: Option<Sample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Draw `samples` configurations from a ChaCha8 stream seeded with `seed`.
pub fn verify(samples: usize, seed: u64, tol: f64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_deviation: f64 = 0.0;
    let mut first_failure = None;
    for index in 0..samples {
        let sample = Sample::draw(index, &mut rng);
        let deviation = sample.max_deviation();
        max_deviation = max_deviation.max(deviation);
        if deviation > tol && first_failure.is_none() {
            first_failure = Some(sample);
        }
    }
    VerifyReport { samples, tol, max_deviation, first_failure }
}
