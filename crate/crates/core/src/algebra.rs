//! Involutive real algebras and their elements.
//!
//! Every algebra is stored in a fixed basis and multiplied through a
//! structure-constant table:
//!
//! | algebra | basis            | relations                         |
//! |---------|------------------|-----------------------------------|
//! | `R`     | 1                |                                   |
//! | `C`     | 1, i             | i² = −1                           |
//! | `D`     | 1, ε             | ε² = 0                            |
//! | `Cs`    | 1, j             | j² = 1                            |
//! | `H`     | 1, i, j, k       | i² = j² = k² = −1, ij = k         |
//! | `Hs`    | 1, i, j, k       | i² = −1, j² = k² = 1, ij = k      |
//! | `CxC`   | (1,0), (i,0), (0,1), (0,i) | componentwise complex   |
//! | `Kt(t)` | 1, σ(t)          | σ(t)² = −(1−t)² + t²              |
//!
//! The involution negates every imaginary generator. For `CxC` it is
//! componentwise complex conjugation, so the self-adjoint elements are
//! ℝ×ℝ rather than ℝ.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};

use crate::float::sqrt;
use crate::error::{Error, Result};
use crate::linalg;

/// Relative threshold for unit detection: `|det T_a| > UNIT_TOL · (1 + ‖a‖²)`.
pub const UNIT_TOL: f64 = 1e-9;

/// Identifier of one of the supported algebras.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AlgebraId {
    R,
    C,
    D,
    Cs,
    H,
    Hs,
    CxC,
    /// Transition subalgebra ℝ + σ(t)ℝ of the split-quaternions.
    Kt(f64),
}

impl AlgebraId {
    /// Real dimension.
    pub fn dim(self) -> usize {
        match self {
            AlgebraId::R => 1,
            AlgebraId::C | AlgebraId::D | AlgebraId::Cs | AlgebraId::Kt(_) => 2,
            AlgebraId::H | AlgebraId::Hs | AlgebraId::CxC => 4,
        }
    }

    /// Whether the self-adjoint elements are exactly the reals.
    pub fn has_real_self_adjoint(self) -> bool {
        !matches!(self, AlgebraId::CxC)
    }

    /// Isomorphism class of `K_t`: ℂ below 1/2, 𝔻 at 1/2, ℂₛ above.
    pub fn kt_class(t: f64) -> AlgebraId {
        let s = sigma_square(t);
        if s.abs() < 1e-15 {
            AlgebraId::D
        } else if s < 0.0 {
            AlgebraId::C
        } else {
            AlgebraId::Cs
        }
    }

    /// Parses the tags used on the command line (`R`, `C`, `D`, `Cs`, `H`,
    /// `Hs`, `CxC`, `Kt:<t>`).
    pub fn parse(tag: &str) -> Option<AlgebraId> {
        Some(match tag {
            "R" => AlgebraId::R,
            "C" => AlgebraId::C,
            "D" => AlgebraId::D,
            "Cs" => AlgebraId::Cs,
            "H" => AlgebraId::H,
            "Hs" => AlgebraId::Hs,
            "CxC" => AlgebraId::CxC,
            _ => {
                let t: f64 = tag.strip_prefix("Kt:")?.parse().ok()?;
                if !(0.0..=1.0).contains(&t) {
                    return None;
                }
                AlgebraId::Kt(t)
            }
        })
    }

    /// Product of two basis elements as `(index, coefficient)`.
    fn basis_product(self, i: usize, j: usize) -> (usize, f64) {
        // quaternion-type tables for i, j, k at indices 1, 2, 3
        const H: [[(usize, f64); 4]; 4] = [
            [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
            [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)],
            [(2, 1.0), (3, -1.0), (0, -1.0), (1, 1.0)],
            [(3, 1.0), (2, 1.0), (1, -1.0), (0, -1.0)],
        ];
        const HS: [[(usize, f64); 4]; 4] = [
            [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
            [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)],
            [(2, 1.0), (3, -1.0), (0, 1.0), (1, -1.0)],
            [(3, 1.0), (2, 1.0), (1, 1.0), (0, 1.0)],
        ];
        let square = |s: f64| if i == 0 { (j, 1.0) } else if j == 0 { (i, 1.0) } else { (0, s) };
        match self {
            AlgebraId::R => (0, 1.0),
            AlgebraId::C => square(-1.0),
            AlgebraId::D => square(0.0),
            AlgebraId::Cs => square(1.0),
            AlgebraId::Kt(t) => square(sigma_square(t)),
            AlgebraId::H => H[i][j],
            AlgebraId::Hs => HS[i][j],
            AlgebraId::CxC => {
                // two copies of ℂ at indices {0,1} and {2,3}
                if i / 2 != j / 2 {
                    return (0, 0.0);
                }
                let base = 2 * (i / 2);
                match (i % 2, j % 2) {
                    (0, 0) => (base, 1.0),
                    (0, 1) | (1, 0) => (base + 1, 1.0),
                    _ => (base, -1.0),
                }
            }
        }
    }

    fn conj_signs(self) -> [f64; 4] {
        match self {
            AlgebraId::R => [1.0, 0.0, 0.0, 0.0],
            AlgebraId::C | AlgebraId::D | AlgebraId::Cs | AlgebraId::Kt(_) => [1.0, -1.0, 0.0, 0.0],
            AlgebraId::H | AlgebraId::Hs => [1.0, -1.0, -1.0, -1.0],
            AlgebraId::CxC => [1.0, -1.0, 1.0, -1.0],
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::R => f.write_str("R"),
            AlgebraId::C => f.write_str("C"),
            AlgebraId::D => f.write_str("D"),
            AlgebraId::Cs => f.write_str("Cs"),
            AlgebraId::H => f.write_str("H"),
            AlgebraId::Hs => f.write_str("Hs"),
            AlgebraId::CxC => f.write_str("CxC"),
            AlgebraId::Kt(t) => write!(f, "Kt:{t}"),
        }
    }
}

/// σ(t)² as a real number.
pub fn sigma_square(t: f64) -> f64 {
    -(1.0 - t) * (1.0 - t) + t * t
}

/// An element of an algebra, stored as coefficients in the canonical basis.
/// Unused trailing slots are kept at zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scalar {
    alg: AlgebraId,
    c: [f64; 4],
}

impl Scalar {
    pub fn new(alg: AlgebraId, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != alg.dim() {
            return Err(Error::CoefficientCount { expected: alg.dim(), found: coeffs.len() });
        }
        let mut c = [0.0; 4];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Scalar { alg, c })
    }

    pub fn zero(alg: AlgebraId) -> Self {
        Scalar { alg, c: [0.0; 4] }
    }

    pub fn one(alg: AlgebraId) -> Self {
        Self::real(alg, 1.0)
    }

    /// The real number `x` embedded as `x·1`.
    pub fn real(alg: AlgebraId, x: f64) -> Self {
        let mut c = [0.0; 4];
        c[0] = x;
        if alg == AlgebraId::CxC {
            c[2] = x;
        }
        Scalar { alg, c }
    }

    /// The `k`-th basis element.
    pub fn basis(alg: AlgebraId, k: usize) -> Self {
        assert!(k < alg.dim(), "basis index out of range");
        let mut c = [0.0; 4];
        c[k] = 1.0;
        Scalar { alg, c }
    }

    /// The complex number `re + i·im`.
    pub fn complex(re: f64, im: f64) -> Self {
        Scalar { alg: AlgebraId::C, c: [re, im, 0.0, 0.0] }
    }

    /// The ℂ×ℂ element `(a, b)` from two complex scalars.
    pub fn cxc(a: Scalar, b: Scalar) -> Self {
        Scalar { alg: AlgebraId::CxC, c: [a.c[0], a.c[1], b.c[0], b.c[1]] }
    }

    /// The two complex components of a ℂ×ℂ element.
    pub fn cxc_parts(&self) -> (Scalar, Scalar) {
        (Self::complex(self.c[0], self.c[1]), Self::complex(self.c[2], self.c[3]))
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c[..self.alg.dim()]
    }

    /// Product checked for matching algebras.
    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        if self.alg != rhs.alg {
            return Err(Error::AlgebraMismatch { left: self.alg, right: rhs.alg });
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Scalar) -> Scalar {
        let d = self.alg.dim();
        let mut out = [0.0; 4];
        for i in 0..d {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..d {
                let (k, s) = self.alg.basis_product(i, j);
                out[k] += s * self.c[i] * rhs.c[j];
            }
        }
        Scalar { alg: self.alg, c: out }
    }

    /// The involution `a ↦ a*`.
    pub fn conj(&self) -> Scalar {
        let s = self.alg.conj_signs();
        Scalar { alg: self.alg, c: [self.c[0] * s[0], self.c[1] * s[1], self.c[2] * s[2], self.c[3] * s[3]] }
    }

    /// `N(a) = a a*`.
    pub fn norm_form(&self) -> Scalar {
        self.mul_unchecked(&self.conj())
    }

    /// Self-adjoint part `(a + a*)/2`.
    pub fn re(&self) -> Scalar {
        (*self + self.conj()).scale(0.5)
    }

    /// Real value of a self-adjoint element; for ℂ×ℂ the sum of the two
    /// real components, which is how the metric is read off there.
    pub fn real_sum(&self) -> f64 {
        match self.alg {
            AlgebraId::CxC => self.c[0] + self.c[2],
            _ => self.c[0],
        }
    }

    /// Magnitude of the part that must be invertible for a self-adjoint
    /// element to be a unit (for ℂ×ℂ the smaller of the two components).
    pub fn self_adjoint_magnitude(&self) -> f64 {
        match self.alg {
            AlgebraId::CxC => self.c[0].abs().min(self.c[2].abs()),
            _ => self.c[0].abs(),
        }
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        sqrt(self.c.iter().map(|x| x * x).sum::<f64>())
    }

    pub fn scale(&self, k: f64) -> Scalar {
        Scalar { alg: self.alg, c: self.c.map(|x| x * k) }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    /// Distance to the nearest real multiple of 1.
    pub fn non_real_residual(&self) -> f64 {
        let mut r = *self;
        match self.alg {
            AlgebraId::CxC => {
                let mean = 0.5 * (self.c[0] + self.c[2]);
                r.c[0] -= mean;
                r.c[2] -= mean;
            }
            _ => r.c[0] = 0.0,
        }
        r.norm()
    }

    /// Distance of `a` from the self-adjoint subspace.
    pub fn anti_self_adjoint_residual(&self) -> f64 {
        (*self - self.conj()).norm() * 0.5
    }

    /// Matrix of `x ↦ a x` in the canonical basis.
    pub fn left_mult_matrix(&self) -> DMatrix<f64> {
        let d = self.alg.dim();
        let mut m = DMatrix::zeros(d, d);
        for j in 0..d {
            let col = self.mul_unchecked(&Scalar::basis(self.alg, j));
            for i in 0..d {
                m[(i, j)] = col.c[i];
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.is_unit_with(UNIT_TOL)
    }

    pub fn is_unit_with(&self, tol: f64) -> bool {
        let n2 = self.norm() * self.norm();
        self.left_mult_matrix().determinant().abs() > tol * (1.0 + n2)
    }

    /// Inverse computed by solving `T_a x = 1`.
    pub fn inverse(&self) -> Result<Scalar> {
        self.inverse_with(UNIT_TOL)
    }

    pub fn inverse_with(&self, tol: f64) -> Result<Scalar> {
        if !self.is_unit_with(tol) {
            return Err(Error::NotAUnit);
        }
        let one = Scalar::one(self.alg);
        let rhs = DVector::from_column_slice(one.coeffs());
        let x = self.left_mult_matrix().lu().solve(&rhs).ok_or(Error::NotAUnit)?;
        Scalar::new(self.alg, x.as_slice())
    }

    /// A unit-norm `b` with `a b ≈ 0`, witnessing that `a` is a zero divisor.
    pub fn annihilator(&self) -> Option<Scalar> {
        if self.is_unit() {
            return None;
        }
        let v = linalg::null_direction(&self.left_mult_matrix());
        Scalar::new(self.alg, v.as_slice()).ok()
    }

    /// Split-complex coordinates `x + jy ↦ (x + y, x − y)`.
    pub fn cs_split(&self) -> Result<(f64, f64)> {
        if self.alg != AlgebraId::Cs {
            return Err(Error::AlgebraMismatch { left: self.alg, right: AlgebraId::Cs });
        }
        Ok((self.c[0] + self.c[1], self.c[0] - self.c[1]))
    }

    /// Inverse of [`Scalar::cs_split`].
    pub fn cs_join(a: f64, b: f64) -> Scalar {
        Scalar { alg: AlgebraId::Cs, c: [0.5 * (a + b), 0.5 * (a - b), 0.0, 0.0] }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.alg, rhs.alg, "algebra mismatch");
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x += y;
        }
        Scalar { alg: self.alg, c }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(-1.0)
    }
}

/// Panics on algebra mismatch; use [`Scalar::try_mul`] for a checked product.
impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.alg, rhs.alg, "algebra mismatch");
        self.mul_unchecked(&rhs)
    }
}

/// `σ(t) = (1 − t) i + t j` in the split-quaternions.
pub fn sigma(t: f64) -> Result<Scalar> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange(t));
    }
    Scalar::new(AlgebraId::Hs, &[0.0, 1.0 - t, t, 0.0])
}

/// Embeds `x + y σ(t)` from `K_t` into the split-quaternions.
pub fn kt_embed(t: f64, a: &Scalar) -> Result<Scalar> {
    match a.algebra() {
        AlgebraId::Kt(s) if s == t => {
            let sig = sigma(t)?;
            Ok(Scalar::real(AlgebraId::Hs, a.c[0]) + sig.scale(a.c[1]))
        }
        AlgebraId::Kt(s) => Err(Error::ParameterMismatch { algebra: s, requested: t }),
        other => Err(Error::AlgebraMismatch { left: other, right: AlgebraId::Kt(t) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(alg: AlgebraId, c: &[f64]) -> Scalar {
        Scalar::new(alg, c).unwrap()
    }

    fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
        (*a - *b).norm() <= tol
    }

    #[test]
    fn split_quaternion_products() {
        let i = Scalar::basis(AlgebraId::Hs, 1);
        let j = Scalar::basis(AlgebraId::Hs, 2);
        let k = Scalar::basis(AlgebraId::Hs, 3);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(i * i, Scalar::real(AlgebraId::Hs, -1.0));
        assert_eq!(j * j, Scalar::one(AlgebraId::Hs));
        assert_eq!(k * k, Scalar::one(AlgebraId::Hs));
        let eps = i + j;
        assert_eq!(eps * eps, Scalar::zero(AlgebraId::Hs));
    }

    #[test]
    fn dual_epsilon_squares_to_zero() {
        let e = Scalar::basis(AlgebraId::D, 1);
        assert_eq!(e * e, Scalar::zero(AlgebraId::D));
    }

    #[test]
    fn mismatch_is_error() {
        let a = Scalar::one(AlgebraId::C);
        let b = Scalar::one(AlgebraId::D);
        assert!(matches!(a.try_mul(&b), Err(Error::AlgebraMismatch { .. })));
        assert!(Scalar::new(AlgebraId::H, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(s(AlgebraId::Hs, &[1.0, 2.0, 3.0, 4.0]).conj(), s(AlgebraId::Hs, &[1.0, -2.0, -3.0, -4.0]));
        assert_eq!(s(AlgebraId::R, &[5.0]).conj(), s(AlgebraId::R, &[5.0]));
        assert_eq!(
            s(AlgebraId::CxC, &[0.0, 1.0, 1.0, 1.0]).conj(),
            s(AlgebraId::CxC, &[0.0, -1.0, 1.0, -1.0])
        );
    }

    #[test]
    fn norm_form_examples() {
        assert_eq!(s(AlgebraId::Hs, &[1.0, 0.0, 0.0, 2.0]).norm_form(), Scalar::real(AlgebraId::Hs, -3.0));
        assert_eq!(s(AlgebraId::D, &[3.0, 5.0]).norm_form(), Scalar::real(AlgebraId::D, 9.0));
        assert_eq!(s(AlgebraId::C, &[0.0, 1.0]).norm_form(), Scalar::one(AlgebraId::C));
    }

    #[test]
    fn left_mult_matrix_examples() {
        let j = Scalar::basis(AlgebraId::Cs, 1).left_mult_matrix();
        assert_eq!(j, DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]));
        let e = Scalar::basis(AlgebraId::D, 1).left_mult_matrix();
        assert_eq!(e, DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]));
        for alg in [AlgebraId::R, AlgebraId::H, AlgebraId::CxC, AlgebraId::Kt(0.3)] {
            assert_eq!(Scalar::one(alg).left_mult_matrix(), DMatrix::identity(alg.dim(), alg.dim()));
        }
    }

    #[test]
    fn unit_examples() {
        assert!(!s(AlgebraId::Cs, &[1.0, 1.0]).is_unit());
        assert!(s(AlgebraId::D, &[1.0, 5.0]).is_unit());
        assert!(!s(AlgebraId::Hs, &[0.0, 1.0, 1.0, 0.0]).is_unit());
        assert!(!Scalar::zero(AlgebraId::C).is_unit());
    }

    #[test]
    fn inverse_examples() {
        let inv = s(AlgebraId::Cs, &[2.0, 1.0]).inverse().unwrap();
        assert!(close(&inv, &s(AlgebraId::Cs, &[2.0 / 3.0, -1.0 / 3.0]), 1e-14));
        let inv = s(AlgebraId::D, &[1.0, 5.0]).inverse().unwrap();
        assert!(close(&inv, &s(AlgebraId::D, &[1.0, -5.0]), 1e-14));
        let inv = Scalar::basis(AlgebraId::Hs, 1).inverse().unwrap();
        assert!(close(&inv, &-Scalar::basis(AlgebraId::Hs, 1), 1e-14));
        assert_eq!(s(AlgebraId::Cs, &[1.0, 1.0]).inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn annihilator_of_zero_divisor() {
        let a = s(AlgebraId::Hs, &[0.0, 1.0, 1.0, 0.0]);
        let b = a.annihilator().unwrap();
        assert!((a * b).norm() < 1e-12);
        assert!((b.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_part_examples() {
        assert_eq!(s(AlgebraId::Hs, &[1.0, 2.0, 0.0, 0.0]).re(), Scalar::one(AlgebraId::Hs));
        assert_eq!(s(AlgebraId::CxC, &[1.0, 1.0, 2.0, -1.0]).re(), s(AlgebraId::CxC, &[1.0, 0.0, 2.0, 0.0]));
        assert_eq!(Scalar::basis(AlgebraId::D, 1).re(), Scalar::zero(AlgebraId::D));
    }

    #[test]
    fn sigma_examples() {
        let hs = AlgebraId::Hs;
        let s0 = sigma(0.0).unwrap();
        assert_eq!(s0, Scalar::basis(hs, 1));
        assert_eq!(s0 * s0, Scalar::real(hs, -1.0));
        let sh = sigma(0.5).unwrap();
        assert_eq!(sh, s(hs, &[0.0, 0.5, 0.5, 0.0]));
        assert_eq!(sh * sh, Scalar::zero(hs));
        let s1 = sigma(1.0).unwrap();
        assert_eq!(s1, Scalar::basis(hs, 2));
        assert_eq!(s1 * s1, Scalar::one(hs));
        assert_eq!(sigma(1.5), Err(Error::ParameterOutOfRange(1.5)));
        assert_eq!(AlgebraId::kt_class(0.2), AlgebraId::C);
        assert_eq!(AlgebraId::kt_class(0.5), AlgebraId::D);
        assert_eq!(AlgebraId::kt_class(0.9), AlgebraId::Cs);
    }

    #[test]
    fn kt_embed_examples() {
        for t in [0.0, 0.3, 0.5, 1.0] {
            assert_eq!(kt_embed(t, &Scalar::one(AlgebraId::Kt(t))).unwrap(), Scalar::one(AlgebraId::Hs));
        }
        assert_eq!(kt_embed(0.0, &Scalar::basis(AlgebraId::Kt(0.0), 1)).unwrap(), Scalar::basis(AlgebraId::Hs, 1));
        assert_eq!(
            kt_embed(1.0, &s(AlgebraId::Kt(1.0), &[2.0, 3.0])).unwrap(),
            s(AlgebraId::Hs, &[2.0, 0.0, 3.0, 0.0])
        );
        assert!(matches!(kt_embed(0.2, &Scalar::one(AlgebraId::Kt(0.3))), Err(Error::ParameterMismatch { .. })));
    }

    #[test]
    fn cs_split_examples() {
        assert_eq!(Scalar::one(AlgebraId::Cs).cs_split().unwrap(), (1.0, 1.0));
        assert_eq!(Scalar::basis(AlgebraId::Cs, 1).cs_split().unwrap(), (1.0, -1.0));
        assert_eq!(s(AlgebraId::Cs, &[1.0, 1.0]).cs_split().unwrap(), (2.0, 0.0));
        let x = s(AlgebraId::Cs, &[0.3, -1.7]);
        let (a, b) = x.cs_split().unwrap();
        assert!(close(&Scalar::cs_join(a, b), &x, 1e-15));
    }

    #[test]
    fn parse_tags() {
        assert_eq!(AlgebraId::parse("Hs"), Some(AlgebraId::Hs));
        assert_eq!(AlgebraId::parse("Kt:0.25"), Some(AlgebraId::Kt(0.25)));
        assert_eq!(AlgebraId::parse("Kt:2"), None);
        assert_eq!(AlgebraId::parse("O"), None);
    }
}
