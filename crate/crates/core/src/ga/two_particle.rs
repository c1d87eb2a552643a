//! Two-particle extension of Cl(3,0).
//!
//! An element is a real combination of pure tensors `e_i¹ e_j²` where the
//! first factor lives in particle 1's copy of Cl(3,0) and the second in
//! particle 2's. The two copies commute with each other, so products act
//! factorwise. The quantum correlator `E` identifies the two particles'
//! `ισ₃`, and with it the probability of finding state ψ in the separable
//! state φ is `⟨ψEψ†φEφ†⟩₀ − ⟨ψJψ†φJφ†⟩₀`.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::multivector::{Multivector3, PRODUCT_TABLE, SLOT_GRADE};
use super::rotor::{Rotor, Spinor};
use crate::error::{Error, Result};

/// Dense element of Cl(3,0) ⊗ Cl(3,0); coefficient `[8 * i + j]` multiplies
/// `e_i¹ e_j²`.
#[derive(Clone, Copy, PartialEq)]
pub struct TwoParticleMultivector {
    coefficients: [f64; 64],
}

impl Default for TwoParticleMultivector {
    fn default() -> Self {
        Self::ZERO
    }
}

impl std::fmt::Debug for TwoParticleMultivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<_> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(k, c)| format!("{c}·e{}⊗e{}", k / 8, k % 8))
            .collect();
        write!(f, "TwoParticleMultivector[{}]", terms.join(" + "))
    }
}

impl TwoParticleMultivector {
    pub const ZERO: Self = Self { coefficients: [0.0; 64] };
    pub const ONE: Self = Self::scalar(1.0);

    pub const fn scalar(value: f64) -> Self {
        let mut coefficients = [0.0; 64];
        coefficients[0] = value;
        Self { coefficients }
    }

    pub fn from_coefficients(coefficients: [f64; 64]) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[f64; 64] {
        &self.coefficients
    }

    /// The pure tensor `a¹ b²`.
    pub fn tensor(a: &Multivector3, b: &Multivector3) -> Self {
        let mut coefficients = [0.0; 64];
        for (i, &ai) in a.coefficients().iter().enumerate() {
            for (j, &bj) in b.coefficients().iter().enumerate() {
                coefficients[8 * i + j] = ai * bj;
            }
        }
        Self { coefficients }
    }

    /// `a` acting on particle 1 only.
    pub fn particle1(a: &Multivector3) -> Self {
        Self::tensor(a, &Multivector3::ONE)
    }

    /// `b` acting on particle 2 only.
    pub fn particle2(b: &Multivector3) -> Self {
        Self::tensor(&Multivector3::ONE, b)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coefficients[0]
    }

    pub fn geometric_product(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 64];
        for (k, &a) in self.coefficients.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let (i1, i2) = (k / 8, k % 8);
            for (l, &b) in rhs.coefficients.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let (j1, j2) = (l / 8, l % 8);
                let (s1, r1) = table_entry(i1, j1);
                let (s2, r2) = table_entry(i2, j2);
                out[8 * r1 + r2] += s1 * s2 * a * b;
            }
        }
        Self { coefficients: out }
    }

    /// Scalar part of `self * rhs` without forming the full product.
    pub fn scalar_product(&self, rhs: &Self) -> f64 {
        let mut acc = 0.0;
        for (k, &a) in self.coefficients.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            // e_i e_j is scalar only for j = i, with sign e_i².
            let (i1, i2) = (k / 8, k % 8);
            let (s1, _) = table_entry(i1, i1);
            let (s2, _) = table_entry(i2, i2);
            acc += s1 * s2 * a * rhs.coefficients[k];
        }
        acc
    }

    /// Reversion applied to each particle's factor.
    pub fn reverse(&self) -> Self {
        let mut out = self.coefficients;
        for (k, c) in out.iter_mut().enumerate() {
            let flips = usize::from(grade(k / 8) >= 2) + usize::from(grade(k % 8) >= 2);
            if flips % 2 == 1 {
                *c = -*c;
            }
        }
        Self { coefficients: out }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coefficients: self.coefficients.map(|c| c * factor),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Ket over `|00⟩, |01⟩, |10⟩, |11⟩` for an element of the even ⊗ even
    /// subalgebra, mapping each factor through the one-qubit spinor map.
    /// Odd-grade parts are ignored.
    pub fn to_ket(&self) -> [Complex64; 4] {
        const EVEN: [usize; 4] = [0, 4, 5, 6];
        let mut ket = [Complex64::new(0.0, 0.0); 4];
        for &i in &EVEN {
            for &j in &EVEN {
                let c = self.coefficients[8 * i + j];
                if c == 0.0 {
                    continue;
                }
                let a = Spinor::from_multivector(&Multivector3::basis(i)).to_ket();
                let b = Spinor::from_multivector(&Multivector3::basis(j)).to_ket();
                for (p, ap) in a.iter().enumerate() {
                    for (q, bq) in b.iter().enumerate() {
                        ket[2 * p + q] += ap * bq * c;
                    }
                }
            }
        }
        ket
    }
}

fn grade(slot: usize) -> u8 {
    SLOT_GRADE[slot]
}

fn table_entry(i: usize, j: usize) -> (f64, usize) {
    PRODUCT_TABLE[i][j]
}

impl Add for TwoParticleMultivector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.coefficients;
        for (o, r) in out.iter_mut().zip(rhs.coefficients) {
            *o += r;
        }
        Self { coefficients: out }
    }
}

impl Sub for TwoParticleMultivector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TwoParticleMultivector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for TwoParticleMultivector {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

/// `ισ_k` on the given particle (1 or 2).
pub fn iota_sigma_on(particle: u8, k: usize) -> TwoParticleMultivector {
    let m = Multivector3::iota_sigma(k);
    match particle {
        1 => TwoParticleMultivector::particle1(&m),
        2 => TwoParticleMultivector::particle2(&m),
        _ => panic!("particle must be 1 or 2"),
    }
}

/// `ψ = A B (cos γ/2 + sin γ/2 · ισ₂¹ ισ₂²)`.
pub fn two_particle_state(a: &Rotor, b: &Rotor, gamma: f64) -> Result<TwoParticleMultivector> {
    if !(0.0..=FRAC_PI_2).contains(&gamma) {
        return Err(Error::GammaOutOfRange(gamma));
    }
    let (s, c) = (gamma / 2.0).sin_cos();
    let schmidt = TwoParticleMultivector::scalar(c) + (iota_sigma_on(1, 2) * iota_sigma_on(2, 2)).scale(s);
    let ab = TwoParticleMultivector::tensor(a.value(), b.value());
    Ok(ab * schmidt)
}

/// The observables `E = ½(1 − ισ₃¹ισ₃²)` and `J = ½(ισ₃¹ + ισ₃²)`.
pub fn observables_ej() -> (TwoParticleMultivector, TwoParticleMultivector) {
    let e = (TwoParticleMultivector::ONE - iota_sigma_on(1, 3) * iota_sigma_on(2, 3)).scale(0.5);
    let j = (iota_sigma_on(1, 3) + iota_sigma_on(2, 3)).scale(0.5);
    (e, j)
}

/// `ψ E ψ†` by direct multiplication.
pub fn psi_e_psi(psi: &TwoParticleMultivector) -> TwoParticleMultivector {
    let (e, _) = observables_ej();
    *psi * e * psi.reverse()
}

/// `ψ J ψ†` by direct multiplication.
pub fn psi_j_psi(psi: &TwoParticleMultivector) -> TwoParticleMultivector {
    let (_, j) = observables_ej();
    *psi * j * psi.reverse()
}

/// `φ = R S` with `R = e^{−ικ¹σ₂¹}` and `S = e^{−ικ²σ₂²}`.
///
/// The exponent carries the full angle, so `κ` is half of the Bloch-sphere
/// rotation it produces. Game directions use the Bloch angle; see
/// [`measurement_state`].
pub fn measurement_spinors(kappa1: f64, kappa2: f64) -> TwoParticleMultivector {
    let r = Multivector3::half_angle_exp(2, 2.0 * kappa1);
    let s = Multivector3::half_angle_exp(2, 2.0 * kappa2);
    TwoParticleMultivector::tensor(&r, &s)
}

/// Separable state selecting outcome `(m, n)` when Alice measures along the
/// direction at Bloch angle `κ¹` in the σ₃σ₁ plane and Bob along `κ²`.
///
/// Outcome 0 is the rotated `|0⟩`; outcome 1 is the rotated `|1⟩ ↔ −ισ₂`,
/// which is the same as measuring outcome 0 along `κ + π`.
pub fn measurement_state(kappa1: f64, kappa2: f64, m: u8, n: u8) -> TwoParticleMultivector {
    let flip = |bit: u8| {
        if bit == 0 {
            Multivector3::ONE
        } else {
            -Multivector3::iota_sigma(2)
        }
    };
    let phi = measurement_spinors(kappa1 / 2.0, kappa2 / 2.0);
    phi * TwoParticleMultivector::tensor(&flip(m), &flip(n))
}

/// Tolerance outside `[0, 1]` tolerated before a probability is treated as a
/// convention error.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// `⟨ψEψ†φEφ†⟩₀ − ⟨ψJψ†φJφ†⟩₀` for two particles.
pub fn probability_ga(psi: &TwoParticleMultivector, phi: &TwoParticleMultivector) -> Result<f64> {
    let observables = StateObservables::new(psi);
    observables.probability(phi)
}

/// `ψEψ†` and `ψJψ†` cached for repeated projections of the same state.
#[derive(Debug, Clone)]
pub struct StateObservables {
    pub e: TwoParticleMultivector,
    pub j: TwoParticleMultivector,
}

impl StateObservables {
    pub fn new(psi: &TwoParticleMultivector) -> Self {
        Self { e: psi_e_psi(psi), j: psi_j_psi(psi) }
    }

    pub fn probability(&self, phi: &TwoParticleMultivector) -> Result<f64> {
        let p = self.e.scalar_product(&psi_e_psi(phi)) - self.j.scalar_product(&psi_j_psi(phi));
        if !(-PROBABILITY_TOL..=1.0 + PROBABILITY_TOL).contains(&p) {
            return Err(Error::ProbabilityOutOfRange { m: 0, n: 0, value: p });
        }
        Ok(p)
    }

    /// Probability of outcome `(m, n)` for directions `κ¹, κ²` (Bloch angles).
    pub fn outcome_probability(&self, kappa1: f64, kappa2: f64, m: u8, n: u8) -> Result<f64> {
        self.probability(&measurement_state(kappa1, kappa2, m, n))
            .map_err(|e| match e {
                Error::ProbabilityOutOfRange { value, .. } => Error::ProbabilityOutOfRange { m, n, value },
                other => other,
            })
    }
}
