//! Rotors and one-qubit spinors in the even subalgebra of Cl(3,0).

use num_complex::Complex64;

use super::multivector::Multivector3;

/// Euler angles `(θ₁, θ₂, θ₃)` of the rotor
/// `R = e^{−θ₃ισ₃/2} e^{−θ₁ισ₂/2} e^{−θ₂ισ₃/2}`, in radians.
///
/// On the Bloch sphere `θ₁` is the polar tilt about σ₂, `θ₃` the final
/// azimuthal turn about σ₃ and `θ₂` an initial turn about σ₃ that only
/// changes the phase reference. Angles are kept as given; no range reduction.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerAngles {
    pub polar: f64,
    pub twist: f64,
    pub azimuth: f64,
}

impl EulerAngles {
    pub const IDENTITY: Self = Self { polar: 0.0, twist: 0.0, azimuth: 0.0 };

    /// Angles in the order `(θ₁, θ₂, θ₃)`.
    pub const fn new(polar: f64, twist: f64, azimuth: f64) -> Self {
        Self { polar, twist, azimuth }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.polar, self.twist, self.azimuth]
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|a| a.is_finite())
    }
}

/// A unit element of the even subalgebra `{1, ισ₁, ισ₂, ισ₃}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotor {
    value: Multivector3,
    angles: Option<EulerAngles>,
}

impl Rotor {
    pub const IDENTITY: Self = Self { value: Multivector3::ONE, angles: None };

    pub fn from_euler(angles: EulerAngles) -> Self {
        let outer = Multivector3::half_angle_exp(3, angles.azimuth);
        let tilt = Multivector3::half_angle_exp(2, angles.polar);
        let inner = Multivector3::half_angle_exp(3, angles.twist);
        Self {
            value: outer * tilt * inner,
            angles: Some(angles),
        }
    }

    /// Wrap an even multivector, checking `R R† = 1` to `tol`.
    pub fn from_multivector(value: Multivector3, tol: f64) -> Option<Self> {
        let rotor = Self { value, angles: None };
        (value.is_even() && rotor.normalization_error() <= tol).then_some(rotor)
    }

    pub fn value(&self) -> &Multivector3 {
        &self.value
    }

    pub fn angles(&self) -> Option<EulerAngles> {
        self.angles
    }

    pub fn reverse(&self) -> Multivector3 {
        self.value.reverse()
    }

    /// `max |R R† − 1|` over coefficients.
    pub fn normalization_error(&self) -> f64 {
        (self.value * self.value.reverse()).max_abs_diff(&Multivector3::ONE)
    }

    /// The sandwich `R x R†`.
    pub fn apply(&self, x: &Multivector3) -> Multivector3 {
        self.value * *x * self.value.reverse()
    }

    pub fn to_spinor(&self) -> Spinor {
        Spinor::from_multivector(&self.value)
    }
}

/// `R(θ₁, θ₂, θ₃)`, each factor evaluated as `cos(θ/2) − sin(θ/2)·ισ_k`.
pub fn rotor_from_euler(theta1: f64, theta2: f64, theta3: f64) -> Rotor {
    Rotor::from_euler(EulerAngles::new(theta1, theta2, theta3))
}

/// One-qubit state `a₀ + a₁ισ₁ + a₂ισ₂ + a₃ισ₃`, which corresponds to the ket
/// `(a₀ + i a₃, −a₂ + i a₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl Spinor {
    pub const fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Self { a0, a1, a2, a3 }
    }

    /// Reads the even part of `m`; odd-grade coefficients are ignored.
    pub fn from_multivector(m: &Multivector3) -> Self {
        let c = m.coefficients();
        // ισ₁ = σ₂σ₃ (slot 6), ισ₂ = −σ₁σ₃ (slot 5), ισ₃ = σ₁σ₂ (slot 4)
        Self { a0: c[0], a1: c[6], a2: -c[5], a3: c[4] }
    }

    pub fn to_multivector(&self) -> Multivector3 {
        Multivector3::from_coefficients([0.0, 0.0, 0.0, 0.0, self.a3, -self.a2, self.a1, 0.0])
            + Multivector3::scalar(self.a0)
    }

    pub fn to_ket(&self) -> [Complex64; 2] {
        [
            Complex64::new(self.a0, self.a3),
            Complex64::new(-self.a2, self.a1),
        ]
    }

    pub fn from_ket(ket: [Complex64; 2]) -> Self {
        Self {
            a0: ket[0].re,
            a3: ket[0].im,
            a2: -ket[1].re,
            a1: ket[1].im,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zero_angles_give_identity() {
        assert_eq!(*rotor_from_euler(0.0, 0.0, 0.0).value(), Multivector3::ONE);
    }

    #[test]
    fn polar_pi_is_minus_iota_sigma2() {
        let r = rotor_from_euler(PI, 0.0, 0.0);
        assert!(r.value().max_abs_diff(&-Multivector3::iota_sigma(2)) < 1e-15);
    }

    #[test]
    fn full_turn_is_minus_one() {
        let r = rotor_from_euler(0.0, 2.0 * PI, 0.0);
        assert!(r.value().max_abs_diff(&-Multivector3::ONE) < 1e-15);
    }

    #[test]
    fn rotor_reverse_inverts() {
        let r = rotor_from_euler(0.4, -1.3, 2.9);
        assert!((r.reverse() * *r.value()).max_abs_diff(&Multivector3::ONE) < 1e-15);
        assert!(r.normalization_error() < 1e-15);
        assert!(r.value().is_even());
    }

    #[test]
    fn rotor_rotates_sigma3_to_bloch_direction() {
        // R σ₃ R† points along (sin θ₁ cos θ₃, sin θ₁ sin θ₃, cos θ₁).
        let (t1, t2, t3) = (0.7, 1.9, -0.4);
        let v = rotor_from_euler(t1, t2, t3).apply(&Multivector3::SIGMA3);
        let expect = Multivector3::SIGMA1.scale(t1.sin() * t3.cos())
            + Multivector3::SIGMA2.scale(t1.sin() * t3.sin())
            + Multivector3::SIGMA3.scale(t1.cos());
        assert!(v.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn from_multivector_rejects_non_rotors() {
        assert!(Rotor::from_multivector(Multivector3::scalar(2.0), 1e-12).is_none());
        assert!(Rotor::from_multivector(Multivector3::SIGMA1, 1e-12).is_none());
        assert!(Rotor::from_multivector(-Multivector3::iota_sigma(1), 1e-12).is_some());
    }

    #[test]
    fn minus_iota_sigma2_maps_to_ket_one() {
        let s = Spinor::from_multivector(&-Multivector3::iota_sigma(2));
        let ket = s.to_ket();
        assert_eq!(ket, [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn spinor_multivector_round_trip() {
        let s = Spinor::new(0.1, -0.2, 0.3, -0.4);
        assert_eq!(Spinor::from_multivector(&s.to_multivector()), s);
        assert_eq!(Spinor::from_ket(s.to_ket()), s);
        assert!(!s.is_normalized(1e-12));
    }
}
