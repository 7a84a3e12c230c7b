//! The bidisc as the ball `B−−` of the ℂ×ℂ projective line with form `−u₁v₁* + u₂v₂*`.

use core::fmt;

use nalgebra::{Complex, Matrix2};
use rand::Rng;

use crate::float::{cos, cosh, sin, sinh, sq, sqrt};
use crate::algebra::{AlgebraId, Scalar};
use crate::error::{Error, Result};
use crate::hermitian::{HermitianSpace, ModuleVector};
use crate::projective::{MetricConvention, ProjPoint, Tangent};

pub type C64 = Complex<f64>;

/// ℂ×ℂ² with signature `−+`.
pub fn bidisc_space() -> HermitianSpace {
    HermitianSpace::new(AlgebraId::CxC, alloc::vec![-1.0, 1.0]).expect("valid signature")
}

/// ℂ² with signature `−+`, the ambient space of each disc factor.
pub fn factor_space() -> HermitianSpace {
    HermitianSpace::new(AlgebraId::C, alloc::vec![-1.0, 1.0]).expect("valid signature")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ball {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
    Singular,
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ball::PlusPlus => "B++",
            Ball::PlusMinus => "B+-",
            Ball::MinusPlus => "B-+",
            Ball::MinusMinus => "B--",
            Ball::Singular => "Singular",
        })
    }
}

fn require_bidisc(space: &HermitianSpace) -> Result<()> {
    if space.algebra() != AlgebraId::CxC {
        return Err(Error::AlgebraMismatch { left: space.algebra(), right: AlgebraId::CxC });
    }
    if space.rank() != 2 {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

/// Ball of a good vector, by the signs of the two components of `⟨u,u⟩`.
pub fn classify_ball(space: &HermitianSpace, u: &ModuleVector) -> Result<Ball> {
    require_bidisc(space)?;
    space.check(u)?;
    if !space.is_good(u) {
        return Err(Error::NotGood);
    }
    let uu = space.form(u, u)?;
    let c = uu.coeffs();
    let cut = space.tol() * sq(u.norm());
    if c[0].abs() <= cut || c[2].abs() <= cut {
        return Ok(Ball::Singular);
    }
    Ok(match (c[0] > 0.0, c[2] > 0.0) {
        (true, true) => Ball::PlusPlus,
        (true, false) => Ball::PlusMinus,
        (false, true) => Ball::MinusPlus,
        (false, false) => Ball::MinusMinus,
    })
}

pub fn ball_of(p: &ProjPoint) -> Result<Ball> {
    classify_ball(p.space(), p.rep())
}

/// `λ_j`: the `j`-th complex component of every entry.
fn lambda(v: &ModuleVector, j: usize) -> ModuleVector {
    v.map_entries(|e| {
        let (a, b) = e.cxc_parts();
        if j == 0 {
            a
        } else {
            b
        }
    })
}

/// `Λ[(a₁,b₁):(a₂,b₂)] = ([a₁:a₂], [b₁:b₂])`.
pub fn lambda_split(u: &ProjPoint) -> Result<(ProjPoint, ProjPoint)> {
    require_bidisc(u.space())?;
    let f = factor_space().with_tolerance(u.space().tol());
    let first = ProjPoint::new(&f, lambda(u.rep(), 0))?;
    let second = ProjPoint::new(&f, lambda(u.rep(), 1))?;
    Ok((first, second))
}

/// Inverse of [`lambda_split`].
pub fn lambda_join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    let space = bidisc_space().with_tolerance(p.space().tol());
    let entries = p.rep().entries().iter().zip(q.rep().entries()).map(|(a, b)| Scalar::cxc(*a, *b)).collect();
    ProjPoint::new(&space, space.vector(entries)?)
}

/// The images `(s₁, s₂)` of a tangent vector under `Λ`.
pub fn split_tangent(t: &Tangent) -> Result<(Tangent, Tangent)> {
    let (p1, p2) = lambda_split(t.base())?;
    Ok((Tangent::new(&p1, lambda(t.vec(), 0))?, Tangent::new(&p2, lambda(t.vec(), 1))?))
}

/// `g_𝔹⁴`: real parts of `−⟨t(p),t'(p)⟩/⟨p,p⟩`, summed over both components.
pub fn bidisc_metric(t1: &Tangent, t2: &Tangent) -> Result<f64> {
    if ball_of(t1.base())? != Ball::MinusMinus {
        return Err(Error::OutsideBall);
    }
    t1.g_metric(t2, MetricConvention::Minus)
}

/// `g_H(s₁,s₁') + g_H(s₂,s₂')` through the two disc factors.
pub fn split_metric(t1: &Tangent, t2: &Tangent) -> Result<f64> {
    if ball_of(t1.base())? != Ball::MinusMinus {
        return Err(Error::OutsideBall);
    }
    let t2 = t2.rebased(t1.base())?;
    let (a1, b1) = split_tangent(t1)?;
    let (a2, b2) = split_tangent(&t2)?;
    Ok(a1.g_metric(&a2, MetricConvention::Minus)? + b1.g_metric(&b2, MetricConvention::Minus)?)
}

/// `τ[(a₁,b₁):(a₂,b₂)] = [(b₁,a₁):(b₂,a₂)]`.
pub fn tau(u: &ProjPoint) -> Result<ProjPoint> {
    require_bidisc(u.space())?;
    let v = u.rep().map_entries(|e| {
        let (a, b) = e.cxc_parts();
        Scalar::cxc(b, a)
    });
    ProjPoint::new(u.space(), v)
}

/// The two real components of the ℂ×ℂ-valued tance.
pub fn tance_pair(u: &ProjPoint, v: &ProjPoint) -> Result<(f64, f64)> {
    require_bidisc(u.space())?;
    let t = u.tance(v)?;
    Ok((t.coeffs()[0], t.coeffs()[2]))
}

/// Representative with `⟨u,u⟩ = (±1, ±1)`.
pub fn normalized(u: &ProjPoint) -> Result<ProjPoint> {
    require_bidisc(u.space())?;
    let c = u.self_product();
    let c = c.coeffs();
    if c[0] == 0.0 || c[2] == 0.0 {
        return Err(Error::SingularPoint);
    }
    let nu = Scalar::new(AlgebraId::CxC, &[1.0 / sqrt(c[0].abs()), 0.0, 1.0 / sqrt(c[2].abs()), 0.0])?;
    u.rescaled(&nu)
}

/// A 2×2 matrix with ℂ×ℂ entries, stored as its two complex components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CxCMatrix2 {
    pub a: Matrix2<C64>,
    pub b: Matrix2<C64>,
}

impl CxCMatrix2 {
    pub fn from_components(a: Matrix2<C64>, b: Matrix2<C64>) -> Self {
        CxCMatrix2 { a, b }
    }

    pub fn identity() -> Self {
        CxCMatrix2 { a: Matrix2::identity(), b: Matrix2::identity() }
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        let (x, y) = (self.a[(i, j)], self.b[(i, j)]);
        Scalar::cxc(Scalar::complex(x.re, x.im), Scalar::complex(y.re, y.im))
    }

    /// `(Mu)ᵢ = Σⱼ Mᵢⱼ uⱼ`.
    pub fn apply(&self, u: &ModuleVector) -> ModuleVector {
        let e = u.entries();
        let row = |i: usize| self.entry(i, 0) * e[0] + self.entry(i, 1) * e[1];
        ModuleVector::new(alloc::vec![row(0), row(1)]).expect("non-empty")
    }

    pub fn mul(&self, other: &CxCMatrix2) -> CxCMatrix2 {
        CxCMatrix2 { a: self.a * other.a, b: self.b * other.b }
    }

    pub fn act(&self, u: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new(u.space(), self.apply(u.rep()))
    }
}

fn polar(r: f64, theta: f64) -> C64 {
    C64::new(r * cos(theta), r * sin(theta))
}

fn preserves_j(m: &Matrix2<C64>, tol: f64) -> bool {
    let j = Matrix2::new(C64::new(-1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    let d = m.adjoint() * j * m - j;
    d.iter().all(|z| sqrt(z.re * z.re + z.im * z.im) <= tol)
}

/// Both components satisfy `M†JM = J`, `J = diag(−1, 1)`.
pub fn unitary_check(m: &CxCMatrix2) -> bool {
    preserves_j(&m.a, 1e-9) && preserves_j(&m.b, 1e-9)
}

/// A random element of U(1,1): diagonal phases times a boost.
pub fn random_u11<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<C64> {
    let alpha = rng.gen_range(0.0..core::f64::consts::TAU);
    let beta = rng.gen_range(0.0..core::f64::consts::TAU);
    let phi = rng.gen_range(0.0..core::f64::consts::TAU);
    let r: f64 = rng.gen_range(-1.5..1.5);
    let phases = Matrix2::new(polar(1.0, alpha), C64::new(0.0, 0.0), C64::new(0.0, 0.0), polar(1.0, beta));
    let (c, s) = (C64::new(cosh(r), 0.0), sinh(r));
    let boost = Matrix2::new(c, polar(s, phi), polar(s, -phi), c);
    phases * boost
}

pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> CxCMatrix2 {
    CxCMatrix2 { a: random_u11(rng), b: random_u11(rng) }
}
