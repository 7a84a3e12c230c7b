//! Projective points, tangent vectors and metrics on ℙ(𝔽ⁿ).

use alloc::vec::Vec;
use core::fmt;

use nalgebra::DMatrix;
use rand::Rng;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::hermitian::{HermitianSpace, ModuleVector};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    Singular,
}

/// Overall sign of the Hermitian metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MetricConvention {
    #[default]
    Plus,
    Minus,
}

impl MetricConvention {
    pub fn sign(self) -> f64 {
        match self {
            MetricConvention::Plus => 1.0,
            MetricConvention::Minus => -1.0,
        }
    }
}

/// Regular iff `⟨v,v⟩` is a unit; accepts vectors that are not good.
/// Judged by the distance of `⟨v,v⟩/‖v‖²` to the zero divisors.
pub fn regularity_of(space: &HermitianSpace, v: &ModuleVector) -> Regularity {
    let n = v.norm();
    if n > 0.0 && linalg::min_singular_value(&space.ip(v, v).scale(1.0 / (n * n)).left_mult_matrix()) > space.tol() {
        Regularity::Regular
    } else {
        Regularity::Singular
    }
}

/// A good vector taken up to left multiplication by units.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    space: HermitianSpace,
    rep: ModuleVector,
}

impl ProjPoint {
    pub fn new(space: &HermitianSpace, rep: ModuleVector) -> Result<Self> {
        space.check(&rep)?;
        if !space.is_good(&rep) {
            return Err(Error::NotGood);
        }
        Ok(ProjPoint { space: space.clone(), rep })
    }

    pub fn from_coeffs(space: &HermitianSpace, coeffs: &[f64]) -> Result<Self> {
        Self::new(space, space.vector_from_coeffs(coeffs)?)
    }

    pub fn rep(&self) -> &ModuleVector {
        &self.rep
    }

    pub fn space(&self) -> &HermitianSpace {
        &self.space
    }

    /// `⟨p,p⟩` for the stored representative.
    pub fn self_product(&self) -> Scalar {
        self.space.ip(&self.rep, &self.rep)
    }

    pub fn classify(&self) -> Regularity {
        regularity_of(&self.space, &self.rep)
    }

    pub fn is_regular(&self) -> bool {
        self.classify() == Regularity::Regular
    }

    fn require_regular(&self) -> Result<Scalar> {
        if !self.is_regular() {
            return Err(Error::SingularPoint);
        }
        self.self_product().inverse_with(0.0)
    }

    /// Same point with representative `α·rep`.
    pub fn rescaled(&self, alpha: &Scalar) -> Result<Self> {
        if !alpha.is_unit_with(self.space.tol()) {
            return Err(Error::NotAUnit);
        }
        Ok(ProjPoint { space: self.space.clone(), rep: self.rep.scaled(alpha) })
    }

    /// The unit `α` with `α·other.rep = self.rep`, if there is one.
    pub fn unit_between(&self, other: &ProjPoint) -> Option<Scalar> {
        if self.space != other.space {
            return None;
        }
        let one = Scalar::one(self.space.algebra());
        let h = self.space.solve_pairing(&other.rep, &one)?;
        let alpha = self.space.ip(&self.rep, &h);
        let (np, nq) = (self.rep.norm(), other.rep.norm());
        if !alpha.scale(nq / np).is_unit_with(self.space.tol()) {
            return None;
        }
        let residual = (&other.rep.scaled(&alpha) - &self.rep).norm();
        (residual <= self.space.tol() * np).then_some(alpha)
    }

    pub fn equal(&self, other: &ProjPoint) -> bool {
        self.unit_between(other).is_some()
    }

    /// `(π'[p]v, π[p]v)` with `π'[p]v = ⟨v,p⟩⟨p,p⟩⁻¹ p`.
    pub fn project(&self, v: &ModuleVector) -> Result<(ModuleVector, ModuleVector)> {
        self.space.check(v)?;
        let inv = self.require_regular()?;
        let parallel = self.rep.scaled(&(self.space.ip(v, &self.rep) * inv));
        let perp = v - &parallel;
        Ok((parallel, perp))
    }

    /// Tangent vector whose value on the representative is `π[p]w`.
    pub fn tangent(&self, w: &ModuleVector) -> Result<Tangent> {
        let (_, perp) = self.project(w)?;
        Ok(Tangent { base: self.clone(), vec: perp })
    }

    /// `⟨p,q⟩⟨q,p⟩ (⟨p,p⟩⟨q,q⟩)⁻¹`.
    pub fn tance(&self, q: &ProjPoint) -> Result<Scalar> {
        if self.space != q.space {
            return Err(Error::SpaceMismatch);
        }
        self.require_regular()?;
        q.require_regular()?;
        let s = &self.space;
        let num = s.ip(&self.rep, &q.rep) * s.ip(&q.rep, &self.rep);
        let den = (self.self_product() * q.self_product()).inverse_with(0.0)?;
        Ok(num * den)
    }
}

/// An 𝔽-linear map `𝔽p → p^⊥`, stored as its value on the representative.
#[derive(Clone, Debug)]
pub struct Tangent {
    base: ProjPoint,
    vec: ModuleVector,
}

impl Tangent {
    pub fn new(base: &ProjPoint, vec: ModuleVector) -> Result<Self> {
        base.space.check(&vec)?;
        base.require_regular()?;
        let overlap = base.space.ip(&vec, &base.rep).norm();
        if overlap > base.space.tol() * (1.0 + vec.norm() * base.rep.norm()) {
            return Err(Error::NotTangent);
        }
        Ok(Tangent { base: base.clone(), vec })
    }

    pub fn base(&self) -> &ProjPoint {
        &self.base
    }

    /// `t(p)` for the stored representative `p`.
    pub fn vec(&self) -> &ModuleVector {
        &self.vec
    }

    pub fn is_zero(&self) -> bool {
        self.vec.norm() <= self.base.space.tol() * self.base.rep.norm()
    }

    /// `t(x) = ⟨x,p⟩⟨p,p⟩⁻¹ t(p)`.
    pub fn apply(&self, x: &ModuleVector) -> Result<ModuleVector> {
        let inv = self.base.require_regular()?;
        self.base.space.check(x)?;
        Ok(self.vec.scaled(&(self.base.space.ip(x, &self.base.rep) * inv)))
    }

    /// `t*v = ⟨v,t(p)⟩⟨p,p⟩⁻¹ p`.
    pub fn adjoint_apply(&self, v: &ModuleVector) -> Result<ModuleVector> {
        let inv = self.base.require_regular()?;
        self.base.space.check(v)?;
        Ok(self.base.rep.scaled(&(self.base.space.ip(v, &self.vec) * inv)))
    }

    /// The same map expressed on another representative of the base point.
    pub fn rebased(&self, base: &ProjPoint) -> Result<Tangent> {
        if !self.base.equal(base) {
            return Err(Error::BaseMismatch);
        }
        if self.base.rep == base.rep {
            return Ok(self.clone());
        }
        Ok(Tangent { base: base.clone(), vec: self.apply(&base.rep)? })
    }

    /// Tangent `x ↦ t(x)·`-side scaling: new value `α·t(p)` on the representative.
    pub fn left_mul(&self, alpha: &Scalar) -> Tangent {
        Tangent { base: self.base.clone(), vec: self.vec.scaled(alpha) }
    }

    pub fn scaled_real(&self, k: f64) -> Tangent {
        Tangent { base: self.base.clone(), vec: self.vec.scaled_real(k) }
    }

    pub fn add(&self, other: &Tangent) -> Result<Tangent> {
        let o = other.rebased(&self.base)?;
        Ok(Tangent { base: self.base.clone(), vec: &self.vec + &o.vec })
    }

    /// `±⟨t₁(p), t₂(p)⟩⟨p,p⟩⁻¹`.
    pub fn herm_metric(&self, other: &Tangent, conv: MetricConvention) -> Result<Scalar> {
        let o = other.rebased(&self.base)?;
        let inv = self.base.require_regular()?;
        Ok((self.base.space.ip(&self.vec, &o.vec) * inv).scale(conv.sign()))
    }

    /// Real part of the Hermitian metric (ℂ×ℂ: sum of both real parts).
    pub fn g_metric(&self, other: &Tangent, conv: MetricConvention) -> Result<f64> {
        Ok(self.herm_metric(other, conv)?.real_sum())
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.plus {
            f.write_str("+")?;
        }
        for _ in 0..self.minus {
            f.write_str("-")?;
        }
        for _ in 0..self.zero {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Signature {
    /// Sign pattern of a symmetric matrix, with cutoff `tol·max(1, max|λ|)`.
    pub fn of_matrix(m: &DMatrix<f64>, tol: f64) -> Signature {
        let ev = linalg::symmetric_eigenvalues(m);
        let cut = tol * ev.iter().fold(1.0f64, |a, &x| a.max(x.abs()));
        let mut s = Signature { plus: 0, minus: 0, zero: 0 };
        for x in ev {
            if x > cut {
                s.plus += 1;
            } else if x < -cut {
                s.minus += 1;
            } else {
                s.zero += 1;
            }
        }
        s
    }
}

/// Real basis `{e_α·b_k}` of the tangent space at `p`, as tangent vectors.
pub fn tangent_real_basis(p: &ProjPoint) -> Result<Vec<Tangent>> {
    let alg = p.space.algebra();
    let perp = p.space.perp_basis(&p.rep)?;
    let mut out = Vec::with_capacity(perp.len() * alg.dim());
    for b in &perp {
        for a in 0..alg.dim() {
            out.push(Tangent { base: p.clone(), vec: b.scaled(&Scalar::basis(alg, a)) });
        }
    }
    Ok(out)
}

/// Matrix of `g` on the real tangent basis at `p`.
pub fn metric_gram(p: &ProjPoint, conv: MetricConvention) -> Result<DMatrix<f64>> {
    let basis = tangent_real_basis(p)?;
    let k = basis.len();
    let mut g = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = basis[i].g_metric(&basis[j], conv)?;
        }
    }
    Ok(g)
}

/// A random good, regular point with coefficients uniform in `[-1, 1]`.
pub fn random_regular_point<R: Rng + ?Sized>(space: &HermitianSpace, rng: &mut R) -> Result<ProjPoint> {
    let len = space.rank() * space.algebra().dim();
    for _ in 0..1000 {
        let coeffs: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let v = space.vector_from_coeffs(&coeffs)?;
        let n = v.norm();
        // stay clear of the singular set so the sampled metric is well conditioned
        let pp = space.ip(&v, &v).scale(1.0 / (n * n));
        if pp.left_mult_matrix().determinant().abs() < 1e-3 {
            continue;
        }
        if let Ok(p) = ProjPoint::new(space, v) {
            if p.is_regular() {
                return Ok(p);
            }
        }
    }
    Err(Error::SamplingFailed)
}

/// Signature of `g` at `samples` random regular points; must agree everywhere.
pub fn signature_of_metric<R: Rng + ?Sized>(
    space: &HermitianSpace,
    conv: MetricConvention,
    samples: usize,
    rng: &mut R,
) -> Result<Signature> {
    let mut found: Option<Signature> = None;
    for _ in 0..samples.max(1) {
        let p = random_regular_point(space, rng)?;
        let sig = Signature::of_matrix(&metric_gram(&p, conv)?, space.tol());
        match found {
            None => found = Some(sig),
            Some(s) if s != sig => return Err(Error::SignatureVaries),
            _ => {}
        }
    }
    Ok(found.expect("at least one sample"))
}
