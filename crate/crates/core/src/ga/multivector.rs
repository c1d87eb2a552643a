//! Real Clifford algebra Cl(3,0).
//!
//! Elements are stored densely over the canonical basis
//!
//! ```text
//! index:  0   1    2    3    4      5      6      7
//! blade:  1   σ₁   σ₂   σ₃   σ₁σ₂   σ₁σ₃   σ₂σ₃   ι = σ₁σ₂σ₃
//! ```
//!
//! The geometric product is driven by a table built at compile time from the
//! bitmask form of each blade, so a product is a fixed 64 multiply-adds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Bitmask (σ₁ = 1, σ₂ = 2, σ₃ = 4) of each canonical basis slot.
const SLOT_MASK: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

const fn slot_of_mask(mask: u8) -> usize {
    let mut i = 0;
    while i < 8 {
        if SLOT_MASK[i] == mask {
            return i;
        }
        i += 1;
    }
    panic!("mask outside Cl(3,0)");
}

/// Sign picked up when reordering the concatenation of two ascending blades
/// into canonical order (Euclidean metric, so squares contribute +1).
const fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

const fn build_table() -> [[(f64, usize); 8]; 8] {
    let mut table = [[(0.0, 0usize); 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let (a, b) = (SLOT_MASK[i], SLOT_MASK[j]);
            table[i][j] = (reorder_sign(a, b), slot_of_mask(a ^ b));
            j += 1;
        }
        i += 1;
    }
    table
}

/// `PRODUCT_TABLE[i][j] = (sign, k)` with `e_i e_j = sign · e_k`.
pub(crate) const PRODUCT_TABLE: [[(f64, usize); 8]; 8] = build_table();

/// Grade of each canonical slot.
pub(crate) const SLOT_GRADE: [u8; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// A general element of Cl(3,0).
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Multivector3 {
    coefficients: [f64; 8],
}

impl Multivector3 {
    pub const ZERO: Self = Self { coefficients: [0.0; 8] };
    pub const ONE: Self = Self::basis(0);
    pub const SIGMA1: Self = Self::basis(1);
    pub const SIGMA2: Self = Self::basis(2);
    pub const SIGMA3: Self = Self::basis(3);
    /// The trivector σ₁σ₂σ₃, which squares to −1 and commutes with everything.
    pub const IOTA: Self = Self::basis(7);

    pub const fn from_coefficients(coefficients: [f64; 8]) -> Self {
        Self { coefficients }
    }

    /// Unit blade at canonical slot `index`.
    pub const fn basis(index: usize) -> Self {
        let mut coefficients = [0.0; 8];
        coefficients[index] = 1.0;
        Self { coefficients }
    }

    pub const fn scalar(value: f64) -> Self {
        let mut coefficients = [0.0; 8];
        coefficients[0] = value;
        Self { coefficients }
    }

    /// Basis vector σ_k for `k` in 1..=3.
    pub fn sigma(k: usize) -> Self {
        assert!((1..=3).contains(&k), "σ index must be 1, 2 or 3");
        Self::basis(k)
    }

    /// The bivector ισ_k (k in 1..=3). ισ₁ = σ₂σ₃, ισ₂ = σ₃σ₁, ισ₃ = σ₁σ₂.
    pub fn iota_sigma(k: usize) -> Self {
        Self::IOTA * Self::sigma(k)
    }

    pub fn coefficients(&self) -> &[f64; 8] {
        &self.coefficients
    }

    pub fn scalar_part(&self) -> f64 {
        self.coefficients[0]
    }

    /// Keep only the parts of the given grade.
    pub fn grade(&self, grade: u8) -> Self {
        let mut out = Self::ZERO;
        for (slot, &g) in SLOT_GRADE.iter().enumerate() {
            if g == grade {
                out.coefficients[slot] = self.coefficients[slot];
            }
        }
        out
    }

    /// True when every odd-grade coefficient is exactly zero.
    pub fn is_even(&self) -> bool {
        SLOT_GRADE
            .iter()
            .zip(&self.coefficients)
            .all(|(g, c)| g % 2 == 0 || *c == 0.0)
    }

    pub fn geometric_product(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 8];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                let (sign, k) = PRODUCT_TABLE[i][j];
                out[k] += sign * a * b;
            }
        }
        Self { coefficients: out }
    }

    /// Clifford reversion: reverses the order of basis vectors in every blade,
    /// which flips the sign of the grade-2 and grade-3 parts.
    pub fn reverse(&self) -> Self {
        let mut out = self.coefficients;
        for (slot, c) in out.iter_mut().enumerate() {
            if SLOT_GRADE[slot] >= 2 {
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

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `exp(−θ/2 · ισ_k)` for a unit bivector ισ_k.
    pub fn half_angle_exp(k: usize, theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self::scalar(c) - Self::iota_sigma(k).scale(s)
    }
}

impl Add for Multivector3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.coefficients;
        for (o, r) in out.iter_mut().zip(rhs.coefficients) {
            *o += r;
        }
        Self { coefficients: out }
    }
}

impl Sub for Multivector3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Multivector3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Multivector3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

impl Mul<f64> for Multivector3 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

const BLADE_NAMES: [&str; 8] = ["", "σ1", "σ2", "σ3", "σ1σ2", "σ1σ3", "σ2σ3", "ι"];

impl fmt::Debug for Multivector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Multivector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, name) in self.coefficients.iter().zip(BLADE_NAMES) {
            if *c == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if *c < 0.0 { '-' } else { '+' })?;
                write!(f, "{}", c.abs())?;
            } else {
                write!(f, "{c}")?;
            }
            if !name.is_empty() {
                write!(f, "·{name}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: usize) -> Multivector3 {
        Multivector3::sigma(k)
    }

    #[test]
    fn basis_vectors_square_to_one() {
        for k in 1..=3 {
            assert_eq!(s(k) * s(k), Multivector3::ONE);
        }
    }

    #[test]
    fn sigma1_sigma2_is_iota_sigma3() {
        assert_eq!(s(1) * s(2), Multivector3::iota_sigma(3));
        assert_eq!(s(2) * s(3), Multivector3::iota_sigma(1));
        assert_eq!(s(3) * s(1), Multivector3::iota_sigma(2));
    }

    #[test]
    fn iota_squares_to_minus_one_and_is_central() {
        assert_eq!(Multivector3::IOTA * Multivector3::IOTA, -Multivector3::ONE);
        for i in 0..8 {
            let e = Multivector3::basis(i);
            assert_eq!(Multivector3::IOTA * e, e * Multivector3::IOTA);
        }
    }

    #[test]
    fn pauli_identity_holds_coefficientwise() {
        // σᵢσⱼ = δᵢⱼ + ι ε_ijk σ_k
        let eps = |i: usize, j: usize, k: usize| -> f64 {
            match (i, j, k) {
                (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
                (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1.0,
                _ => 0.0,
            }
        };
        for i in 1..=3 {
            for j in 1..=3 {
                let mut rhs = Multivector3::scalar(if i == j { 1.0 } else { 0.0 });
                for k in 1..=3 {
                    rhs = rhs + Multivector3::iota_sigma(k).scale(eps(i, j, k));
                }
                assert_eq!(s(i) * s(j), rhs, "σ{i}σ{j}");
                if i != j {
                    assert_eq!(s(i) * s(j) + s(j) * s(i), Multivector3::ZERO);
                }
            }
        }
    }

    #[test]
    fn reverse_flips_bivector_and_trivector() {
        let a = Multivector3::ONE + Multivector3::iota_sigma(2);
        assert_eq!(a.reverse(), Multivector3::ONE - Multivector3::iota_sigma(2));
        assert_eq!(Multivector3::IOTA.reverse(), -Multivector3::IOTA);
        assert_eq!(s(3) * s(2) * s(1), -Multivector3::IOTA);
    }

    #[test]
    fn reverse_is_an_anti_automorphism() {
        let a = Multivector3::from_coefficients([0.3, -1.0, 2.0, 0.5, 0.1, -0.7, 1.2, 0.9]);
        let b = Multivector3::from_coefficients([1.1, 0.2, -0.4, 0.0, 2.2, 0.6, -0.3, -1.5]);
        let lhs = (a * b).reverse();
        let rhs = b.reverse() * a.reverse();
        assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn grade_selection_and_evenness() {
        let a = Multivector3::from_coefficients([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(a.grade(0), Multivector3::scalar(1.0));
        assert_eq!(a.grade(3), Multivector3::IOTA.scale(8.0));
        assert!(!a.is_even());
        assert!((a.grade(0) + a.grade(2)).is_even());
    }

    #[test]
    fn display_lists_nonzero_blades() {
        let a = Multivector3::ONE - Multivector3::IOTA.scale(2.0);
        assert_eq!(a.to_string(), "1 - 2·ι");
        assert_eq!(Multivector3::ZERO.to_string(), "0");
    }
}
