//! Conventional state-vector model of the same experiment, kept independent
//! of the geometric-algebra code so it can serve as ground truth.
//!
//! Direction convention: a measurement direction κ is the Bloch vector
//! `(sin κ, 0, cos κ)` and outcome `m` projects with
//! `½(I + (−1)^m n̂·σ⃗)`. The alternative reading `(sin 2κ, 0, cos 2κ)` is
//! kept only so calibration tests can show it disagrees with the closed form.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ga::EulerAngles;

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);
const I: C = C::new(0.0, 1.0);

/// Tolerance for the unit-norm check on kets.
pub const NORM_TOL: f64 = 1e-12;

/// Two-qubit ket over `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ket2(pub [C; 4]);

impl Ket2 {
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Ket2) -> C {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn max_abs_diff(&self, other: &Ket2) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitUnitary(pub [[C; 2]; 2]);

impl SingleQubitUnitary {
    pub const IDENTITY: Self = Self([[ONE, ZERO], [ZERO, ONE]]);

    /// `exp(−iθ/2 · P)` for a Pauli matrix `P` (which squares to I).
    fn pauli_exp(theta: f64, pauli: [[C; 2]; 2]) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        let mut m = [[ZERO; 2]; 2];
        for r in 0..2 {
            for k in 0..2 {
                let id = if r == k { c } else { 0.0 };
                m[r][k] = C::new(id, 0.0) - I * s * pauli[r][k];
            }
        }
        Self(m)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn matmul(&self, rhs: &Self) -> Self {
        let mut m = [[ZERO; 2]; 2];
        for r in 0..2 {
            for k in 0..2 {
                m[r][k] = self.0[r][0] * rhs.0[0][k] + self.0[r][1] * rhs.0[1][k];
            }
        }
        Self(m)
    }

    pub fn adjoint(&self) -> Self {
        let a = &self.0;
        Self([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])
    }

    pub fn determinant(&self) -> C {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn apply(&self, ket: [C; 2]) -> [C; 2] {
        [
            self.0[0][0] * ket[0] + self.0[0][1] * ket[1],
            self.0[1][0] * ket[0] + self.0[1][1] * ket[1],
        ]
    }

    /// `max |U U^H − I|` over entries.
    pub fn unitarity_error(&self) -> f64 {
        let p = self.matmul(&self.adjoint());
        let mut err: f64 = 0.0;
        for r in 0..2 {
            for k in 0..2 {
                let id = if r == k { ONE } else { ZERO };
                err = err.max((p.0[r][k] - id).norm());
            }
        }
        err
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut err: f64 = 0.0;
        for r in 0..2 {
            for k in 0..2 {
                err = err.max((self.0[r][k] - other.0[r][k]).norm());
            }
        }
        err
    }
}

const PAULI_X: [[C; 2]; 2] = [[ZERO, ONE], [ONE, ZERO]];
const PAULI_Y: [[C; 2]; 2] = [[ZERO, C::new(0.0, -1.0)], [I, ZERO]];
const PAULI_Z: [[C; 2]; 2] = [[ONE, ZERO], [ZERO, C::new(-1.0, 0.0)]];

/// `exp(−iθ₃Z/2) · exp(−iθ₁Y/2) · exp(−iθ₂Z/2)`.
pub fn unitary_from_euler(angles: EulerAngles) -> SingleQubitUnitary {
    let outer = SingleQubitUnitary::pauli_exp(angles.azimuth, PAULI_Z);
    let tilt = SingleQubitUnitary::pauli_exp(angles.polar, PAULI_Y);
    let inner = SingleQubitUnitary::pauli_exp(angles.twist, PAULI_Z);
    outer.matmul(&tilt).matmul(&inner)
}

/// `(U_A ⊗ U_B)(cos γ/2 |00⟩ + sin γ/2 |11⟩)`.
pub fn build_state(gamma: f64, a: EulerAngles, b: EulerAngles) -> Result<Ket2> {
    if !(0.0..=FRAC_PI_2).contains(&gamma) {
        return Err(Error::GammaOutOfRange(gamma));
    }
    let ua = unitary_from_euler(a);
    let ub = unitary_from_euler(b);
    let (s, c) = (gamma / 2.0).sin_cos();
    let schmidt = [C::new(c, 0.0), ZERO, ZERO, C::new(s, 0.0)];
    let mut out = [ZERO; 4];
    for p in 0..2 {
        for q in 0..2 {
            for r in 0..2 {
                for t in 0..2 {
                    out[2 * p + q] += ua.0[p][r] * ub.0[q][t] * schmidt[2 * r + t];
                }
            }
        }
    }
    Ok(Ket2(out))
}

/// How a direction angle maps to a Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionConvention {
    /// `(sin κ, 0, cos κ)`; the convention the closed-form probabilities use.
    BlochAngle,
    /// `(sin 2κ, 0, cos 2κ)`, as produced by the rotor `e^{−ικσ₂}`.
    DoubledAngle,
}

impl DirectionConvention {
    fn bloch_vector(self, kappa: f64) -> [f64; 3] {
        let angle = match self {
            Self::BlochAngle => kappa,
            Self::DoubledAngle => 2.0 * kappa,
        };
        [angle.sin(), 0.0, angle.cos()]
    }
}

/// `½(I + sign · n̂·σ⃗)`
fn projector(n: [f64; 3], sign: f64) -> [[C; 2]; 2] {
    let mut m = [[ZERO; 2]; 2];
    for r in 0..2 {
        for k in 0..2 {
            let id = if r == k { ONE } else { ZERO };
            let dot = PAULI_X[r][k] * n[0] + PAULI_Y[r][k] * n[1] + PAULI_Z[r][k] * n[2];
            m[r][k] = (id + dot * sign) * 0.5;
        }
    }
    m
}

/// `⟨ψ| P_m(n̂₁) ⊗ P_n(n̂₂) |ψ⟩` under the given convention.
#[allow(clippy::needless_range_loop)]
pub fn joint_probability_with(
    convention: DirectionConvention,
    psi: &Ket2,
    m: u8,
    n: u8,
    kappa1: f64,
    kappa2: f64,
) -> Result<f64> {
    for bit in [m, n] {
        if bit > 1 {
            return Err(Error::OutcomeBit(bit as usize));
        }
    }
    let norm = psi.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(norm));
    }
    let sign = |bit: u8| if bit == 0 { 1.0 } else { -1.0 };
    let pa = projector(convention.bloch_vector(kappa1), sign(m));
    let pb = projector(convention.bloch_vector(kappa2), sign(n));
    let mut acc = ZERO;
    for p in 0..2 {
        for q in 0..2 {
            for r in 0..2 {
                for t in 0..2 {
                    acc += psi.0[2 * p + q].conj() * pa[p][r] * pb[q][t] * psi.0[2 * r + t];
                }
            }
        }
    }
    Ok(acc.re)
}

/// Joint probability of outcome `(m, n)` along Bloch angles `κ¹`, `κ²`.
pub fn joint_probability(psi: &Ket2, m: u8, n: u8, kappa1: f64, kappa2: f64) -> Result<f64> {
    joint_probability_with(DirectionConvention::BlochAngle, psi, m, n, kappa1, kappa2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn zero_angles_give_identity() {
        let u = unitary_from_euler(EulerAngles::IDENTITY);
        assert!(u.max_abs_diff(&SingleQubitUnitary::IDENTITY) < 1e-15);
    }

    #[test]
    fn polar_pi_flips() {
        // exp(−iπY/2) = −iY = [[0, −1], [1, 0]]
        let u = unitary_from_euler(EulerAngles::new(PI, 0.0, 0.0));
        let expect = SingleQubitUnitary([[ZERO, -ONE], [ONE, ZERO]]);
        assert!(u.max_abs_diff(&expect) < 1e-15);
        let one = u.apply([ONE, ZERO]);
        assert!((one[1] - ONE).norm() < 1e-15);
    }

    #[test]
    fn unitaries_are_unitary() {
        let u = unitary_from_euler(EulerAngles::new(0.3, -2.0, 4.1));
        assert!(u.unitarity_error() < 1e-15);
        assert!((u.determinant().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bell_singlet_and_product_states() {
        let h = FRAC_1_SQRT_2;
        let bell = build_state(FRAC_PI_2, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        assert!(bell.max_abs_diff(&Ket2([C::new(h, 0.0), ZERO, ZERO, C::new(h, 0.0)])) < 1e-15);
        let singlet = build_state(FRAC_PI_2, EulerAngles::IDENTITY, EulerAngles::new(PI, 0.0, 0.0)).unwrap();
        assert!(singlet.max_abs_diff(&Ket2([ZERO, C::new(h, 0.0), C::new(-h, 0.0), ZERO])) < 1e-15);
        let zero = build_state(0.0, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        assert_eq!(zero, Ket2([ONE, ZERO, ZERO, ZERO]));
        assert_eq!(build_state(2.0, EulerAngles::IDENTITY, EulerAngles::IDENTITY), Err(Error::GammaOutOfRange(2.0)));
    }

    #[test]
    fn joint_probability_examples() {
        let zero = build_state(0.0, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        assert!((joint_probability(&zero, 0, 0, 0.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        let bell = build_state(FRAC_PI_2, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        assert!((joint_probability(&bell, 0, 0, 0.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(joint_probability(&bell, 0, 1, 0.0, 0.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn conventions_differ_off_axis() {
        let zero = build_state(0.0, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        let half = joint_probability_with(DirectionConvention::BlochAngle, &zero, 0, 0, PI, 0.0).unwrap();
        let doubled = joint_probability_with(DirectionConvention::DoubledAngle, &zero, 0, 0, PI, 0.0).unwrap();
        assert!(half.abs() < 1e-15);
        assert!((doubled - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        let ket = Ket2([ONE, ONE, ZERO, ZERO]);
        assert_eq!(joint_probability(&ket, 0, 0, 0.0, 0.0), Err(Error::NotNormalized(2.0)));
        let zero = build_state(0.0, EulerAngles::IDENTITY, EulerAngles::IDENTITY).unwrap();
        assert_eq!(joint_probability(&zero, 2, 0, 0.0, 0.0), Err(Error::OutcomeBit(2)));
    }
}
