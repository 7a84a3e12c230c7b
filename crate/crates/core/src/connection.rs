//! Levi-Civita connection, geodesics and curvature on the regular region.
//!
//! A tangent vector `t` at `p` acts on the module by `t(x) = ⟨x,p⟩⟨p,p⟩⁻¹ t(p)`.
//! Spread vector fields `T_x = π[x] ∘ t ∘ π'[x]` carry it to nearby points.

use alloc::vec::Vec;

use crate::float::{cos, cosh, sin, sinh, sq, sqrt};
use crate::algebra::{AlgebraId, Scalar};
use crate::error::{Error, Result};
use crate::hermitian::ModuleVector;
use crate::projective::{MetricConvention, ProjPoint, Tangent};

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

/// Threshold on `|⟨tp,tp⟩| / ‖tp‖²` below which a direction counts as null.
pub const NULL_TOL: f64 = 1e-10;

fn par(x: &ProjPoint, v: &ModuleVector) -> Result<ModuleVector> {
    Ok(x.project(v)?.0)
}

fn perp(x: &ProjPoint, v: &ModuleVector) -> Result<ModuleVector> {
    Ok(x.project(v)?.1)
}

fn at(x: &ProjPoint, vec: ModuleVector) -> Tangent {
    Tangent::new(x, vec).expect("projected vector is tangent")
}

/// The spread of `t` evaluated at `x`.
pub fn spread_at(t: &Tangent, x: &ProjPoint) -> Result<Tangent> {
    let v = perp(x, &t.apply(x.rep())?)?;
    Ok(at(x, v))
}

/// `∇_T S(x) = [s π[x] t − t π'[x] s]_x` for the spreads of `t` and `s`.
pub fn nabla_spread(t: &Tangent, s: &Tangent, x: &ProjPoint) -> Result<Tangent> {
    if x.rep() == t.base().rep() {
        // s maps p^⊥ into the line of p, so s(t(p)) has no normal part
        return Ok(at(x, ModuleVector::zeros(x.space().algebra(), x.space().rank())));
    }
    let s = s.rebased(t.base())?;
    let first = s.apply(&perp(x, &t.apply(x.rep())?)?)?;
    let second = t.apply(&par(x, &s.apply(x.rep())?)?)?;
    Ok(at(x, perp(x, &(&first - &second))?))
}

fn check_step(step: f64) -> Result<()> {
    if step.is_finite() && step > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidStep)
    }
}

fn shifted(p: &ProjPoint, v: &ModuleVector, eps: f64) -> Result<ProjPoint> {
    ProjPoint::new(p.space(), p.rep() + &v.scaled_real(eps))
}

/// `∇_t X(p)` by central differences of `X` along `p + ε t(p)`.
pub fn nabla_numeric<F>(field: F, t: &Tangent, step: f64) -> Result<Tangent>
where
    F: Fn(&ProjPoint) -> Result<Tangent>,
{
    check_step(step)?;
    let p = t.base();
    let plus = field(&shifted(p, t.vec(), step)?)?;
    let minus = field(&shifted(p, t.vec(), -step)?)?;
    let diff = (&plus.apply(p.rep())? - &minus.apply(p.rep())?).scaled_real(0.5 / step);
    Ok(at(p, perp(p, &diff)?))
}

/// Finite-difference and analytic values of `d/dε π'[p + ε tp]` on a probe vector.
pub fn proj_derivative(t: &Tangent, probe: &ModuleVector, step: f64) -> Result<(ModuleVector, ModuleVector)> {
    check_step(step)?;
    let p = t.base();
    let plus = par(&shifted(p, t.vec(), step)?, probe)?;
    let minus = par(&shifted(p, t.vec(), -step)?, probe)?;
    let numeric = (&plus - &minus).scaled_real(0.5 / step);
    let analytic = &t.apply(probe)? + &t.adjoint_apply(probe)?;
    Ok((numeric, analytic))
}

/// `Tn(t)(x) = T_x / ta(p,x)`.
pub fn tn_at(t: &Tangent, x: &ProjPoint) -> Result<Tangent> {
    let ta = t.base().tance(x)?;
    if !ta.is_unit_with(x.space().tol()) {
        return Err(Error::ZeroTance);
    }
    let spread = spread_at(t, x)?;
    Ok(spread.left_mul(&ta.inverse()?))
}

/// Bracket of two vector fields at `x`, via their horizontal lifts `y ↦ X([y])(y)`.
pub fn lie_bracket_numeric<F, G>(x_field: F, y_field: G, x: &ProjPoint, step: f64) -> Result<Tangent>
where
    F: Fn(&ProjPoint) -> Result<Tangent>,
    G: Fn(&ProjPoint) -> Result<Tangent>,
{
    check_step(step)?;
    let lift = |f: &dyn Fn(&ProjPoint) -> Result<Tangent>, y: &ModuleVector| -> Result<ModuleVector> {
        let q = ProjPoint::new(x.space(), y.clone())?;
        f(&q)?.apply(y)
    };
    let deriv = |f: &dyn Fn(&ProjPoint) -> Result<Tangent>, dir: &ModuleVector| -> Result<ModuleVector> {
        let a = lift(f, &(x.rep() + &dir.scaled_real(step)))?;
        let b = lift(f, &(x.rep() - &dir.scaled_real(step)))?;
        Ok((&a - &b).scaled_real(0.5 / step))
    };
    let xh = lift(&x_field, x.rep())?;
    let yh = lift(&y_field, x.rep())?;
    let bracket = &deriv(&y_field, &xh)? - &deriv(&x_field, &yh)?;
    Ok(at(x, perp(x, &bracket)?))
}

/// `‖∇_T S − ∇_S T − [T,S]‖` at `x` for the spreads of `t` and `s`.
pub fn torsion_defect(t: &Tangent, s: &Tangent, x: &ProjPoint, step: f64) -> Result<f64> {
    let ts = nabla_spread(t, s, x)?;
    let st = nabla_spread(s, t, x)?;
    let br = lie_bracket_numeric(|y| spread_at(t, y), |y| spread_at(s, y), x, step)?;
    Ok((&(ts.vec() - st.vec()) - br.vec()).norm())
}

/// `|S g(T₁,T₂) − g(∇_S T₁,T₂) − g(T₁,∇_S T₂)|` at `x` for spread fields.
pub fn metric_compat_defect(
    s: &Tangent,
    t1: &Tangent,
    t2: &Tangent,
    x: &ProjPoint,
    conv: MetricConvention,
    step: f64,
) -> Result<f64> {
    check_step(step)?;
    let g_at = |y: &ProjPoint| -> Result<f64> { spread_at(t1, y)?.g_metric(&spread_at(t2, y)?, conv) };
    let dir = spread_at(s, x)?;
    let plus = g_at(&shifted(x, dir.vec(), step)?)?;
    let minus = g_at(&shifted(x, dir.vec(), -step)?)?;
    let numeric = (plus - minus) * 0.5 / step;
    let a = nabla_spread(s, t1, x)?.g_metric(&spread_at(t2, x)?, conv)?;
    let b = spread_at(t1, x)?.g_metric(&nabla_spread(s, t2, x)?, conv)?;
    Ok((numeric - a - b).abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeodesicFamily {
    Circular,
    Hyperbolic,
    Null,
}

/// Sign of `⟨t,t⟩` relative to `⟨p,p⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeodesicSign {
    Positive,
    Negative,
    Null,
}

/// Real components of a self-adjoint scalar (two for ℂ×ℂ, one otherwise).
fn sa_parts(s: &Scalar) -> Vec<f64> {
    let c = s.coeffs();
    if s.algebra() == AlgebraId::CxC {
        alloc::vec![c[0], c[2]]
    } else {
        alloc::vec![c[0]]
    }
}

fn sa_scalar(alg: AlgebraId, parts: &[f64]) -> Scalar {
    if alg == AlgebraId::CxC {
        Scalar::new(alg, &[parts[0], 0.0, parts[1], 0.0]).expect("dim 4")
    } else {
        Scalar::real(alg, parts[0])
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Component {
    family: GeodesicFamily,
    sign: GeodesicSign,
    speed: f64,
}

/// `θ ↦ [f(θ)p + g(θ)tp]` with `p`, `tp` normalized; ℂ×ℂ is handled per component.
#[derive(Clone, Debug)]
pub struct Geodesic {
    base: ProjPoint,
    dir: Tangent,
    parts: Vec<Component>,
}

impl Geodesic {
    pub fn new(t: &Tangent) -> Result<Self> {
        let p0 = t.base();
        if t.is_zero() {
            return Err(Error::ZeroTangent);
        }
        let alg = p0.space().algebra();
        let pp = p0.self_product();
        let pp_parts = sa_parts(&pp);
        let nu: Vec<f64> = pp_parts.iter().map(|a| 1.0 / sqrt(a.abs())).collect();
        let base = p0.rescaled(&sa_scalar(alg, &nu))?;
        let dir = t.rebased(&base)?;
        let space = base.space();
        let tt = space.form(dir.vec(), dir.vec())?;
        if tt.anti_self_adjoint_residual() > NULL_TOL * (1.0 + tt.norm()) {
            return Err(Error::NonRealSpanForm);
        }
        let scale = sq(dir.vec().norm());
        let mut parts = Vec::new();
        for (k, b) in sa_parts(&tt).into_iter().enumerate() {
            let a = pp_parts[k].signum();
            if b.abs() < NULL_TOL * scale {
                if space.form(dir.vec(), base.rep())?.norm() > space.tol() {
                    return Err(Error::DegenerateNullDirection);
                }
                parts.push(Component { family: GeodesicFamily::Null, sign: GeodesicSign::Null, speed: 1.0 });
            } else {
                let same = a * b > 0.0;
                parts.push(Component {
                    family: if same { GeodesicFamily::Circular } else { GeodesicFamily::Hyperbolic },
                    sign: if same { GeodesicSign::Positive } else { GeodesicSign::Negative },
                    speed: sqrt(b.abs()),
                });
            }
        }
        Ok(Geodesic { base, dir, parts })
    }

    /// Family of the first component (the only one outside ℂ×ℂ).
    pub fn family(&self) -> GeodesicFamily {
        self.parts[0].family
    }

    pub fn families(&self) -> Vec<GeodesicFamily> {
        self.parts.iter().map(|c| c.family).collect()
    }

    pub fn sign(&self) -> GeodesicSign {
        self.parts[0].sign
    }

    pub fn signs(&self) -> Vec<GeodesicSign> {
        self.parts.iter().map(|c| c.sign).collect()
    }

    /// Base point with `|⟨p,p⟩| = 1`.
    pub fn base(&self) -> &ProjPoint {
        &self.base
    }

    /// Initial velocity on the normalized representative.
    pub fn direction(&self) -> &Tangent {
        &self.dir
    }

    fn coefficients(&self, theta: f64, derivative: bool) -> (Scalar, Scalar) {
        let alg = self.base.space().algebra();
        let mut f = Vec::new();
        let mut g = Vec::new();
        for c in &self.parts {
            let s = c.speed;
            let x = s * theta;
            let (fv, gv) = match (c.family, derivative) {
                (GeodesicFamily::Circular, false) => (cos(x), sin(x) / s),
                (GeodesicFamily::Circular, true) => (-s * sin(x), cos(x)),
                (GeodesicFamily::Hyperbolic, false) => (cosh(x), sinh(x) / s),
                (GeodesicFamily::Hyperbolic, true) => (s * sinh(x), cosh(x)),
                (GeodesicFamily::Null, false) => (1.0, theta),
                (GeodesicFamily::Null, true) => (0.0, 1.0),
            };
            f.push(fv);
            g.push(gv);
        }
        (sa_scalar(alg, &f), sa_scalar(alg, &g))
    }

    /// The lift `c̃(θ) = f(θ)p + g(θ)tp`.
    pub fn lift(&self, theta: f64) -> ModuleVector {
        let (f, g) = self.coefficients(theta, false);
        &self.base.rep().scaled(&f) + &self.dir.vec().scaled(&g)
    }

    pub fn lift_derivative(&self, theta: f64) -> ModuleVector {
        let (f, g) = self.coefficients(theta, true);
        &self.base.rep().scaled(&f) + &self.dir.vec().scaled(&g)
    }

    pub fn point(&self, theta: f64) -> Result<ProjPoint> {
        ProjPoint::new(self.base.space(), self.lift(theta))
    }

    /// Velocity `c'(θ)`, as a tangent vector on the lift.
    pub fn velocity(&self, theta: f64) -> Result<Tangent> {
        self.point(theta)?.tangent(&self.lift_derivative(theta))
    }
}

pub fn make_geodesic(t: &Tangent) -> Result<Geodesic> {
    Geodesic::new(t)
}

/// `R(t₁,t₂)s = −s(t₁*t₂ − t₂*t₁) + (t₁t₂* − t₂t₁*)s`.
pub fn curvature(t1: &Tangent, t2: &Tangent, s: &Tangent) -> Result<Tangent> {
    let p = t1.base();
    let t2 = t2.rebased(p)?;
    let s = s.rebased(p)?;
    let inner = &t1.adjoint_apply(t2.vec())? - &t2.adjoint_apply(t1.vec())?;
    let first = s.apply(&inner)?;
    let sx = s.vec();
    let second = &t1.apply(&t2.adjoint_apply(sx)?)? - &t2.apply(&t1.adjoint_apply(sx)?)?;
    Ok(at(p, perp(p, &(&second - &first))?))
}

/// `g(R(t₁,t₂)t₂,t₁) / (g₁₁g₂₂ − g₁₂²)`; any nondegenerate plane.
pub fn sectional_tensor(t1: &Tangent, t2: &Tangent, conv: MetricConvention) -> Result<f64> {
    let t2 = t2.rebased(t1.base())?;
    let g11 = t1.g_metric(t1, conv)?;
    let g22 = t2.g_metric(&t2, conv)?;
    let g12 = t1.g_metric(&t2, conv)?;
    let den = g11 * g22 - g12 * g12;
    let scale = sq(t1.vec().norm()) * sq(t2.vec().norm()) / sq(sq(t1.base().rep().norm()));
    if den.abs() <= t1.base().space().tol() * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::DegeneratePlane);
    }
    let r = curvature(t1, &t2, &t2)?;
    Ok(r.g_metric(t1, conv)? / den)
}

/// `±(1 − 3b²/(a₁a₂))` for a `g`-orthonormal pair, with `aᵢ = ⟨tᵢ,tᵢ⟩`, `b = ⟨t₁,t₂⟩`.
pub fn sectional_closed_form(t1: &Tangent, t2: &Tangent, conv: MetricConvention) -> Result<f64> {
    let t2 = t2.rebased(t1.base())?;
    let plus = MetricConvention::Plus;
    let a1 = t1.herm_metric(t1, plus)?;
    let a2 = t2.herm_metric(&t2, plus)?;
    let b = t1.herm_metric(&t2, plus)?;
    let tol = 1e-9;
    for a in [a1, a2] {
        if a.non_real_residual() > tol || (a.coeffs()[0].abs() - 1.0).abs() > tol {
            return Err(Error::NotOrthonormal);
        }
    }
    if b.re().norm() > tol {
        return Err(Error::NotOrthonormal);
    }
    let b2 = b * b;
    let residual = b2.non_real_residual();
    if residual > 1e-10 {
        return Err(Error::NonRealQuantity(residual));
    }
    let k = 1.0 - 3.0 * b2.coeffs()[0] / (a1.coeffs()[0] * a2.coeffs()[0]);
    Ok(conv.sign() * k)
}

/// Both evaluations of the sectional curvature of an orthonormal plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sectional {
    pub tensor: f64,
    pub closed_form: f64,
}

pub fn sectional(t1: &Tangent, t2: &Tangent, conv: MetricConvention) -> Result<Sectional> {
    Ok(Sectional { tensor: sectional_tensor(t1, t2, conv)?, closed_form: sectional_closed_form(t1, t2, conv)? })
}

/// Gram–Schmidt for `g` on a pair of tangent vectors.
pub fn g_orthonormalize(t1: &Tangent, t2: &Tangent, conv: MetricConvention) -> Result<(Tangent, Tangent)> {
    let t2 = t2.rebased(t1.base())?;
    let tol = t1.base().space().tol();
    let g11 = t1.g_metric(t1, conv)?;
    if g11.abs() <= tol * sq(t1.vec().norm()) {
        return Err(Error::DegeneratePlane);
    }
    let e1 = t1.scaled_real(1.0 / sqrt(g11.abs()));
    let a = e1.g_metric(&e1, conv)?;
    let r = t2.add(&e1.scaled_real(-t2.g_metric(&e1, conv)? / a))?;
    let g22 = r.g_metric(&r, conv)?;
    if g22.abs() <= tol * sq(t2.vec().norm()) {
        return Err(Error::DegeneratePlane);
    }
    Ok((e1, r.scaled_real(1.0 / sqrt(g22.abs()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::HermitianSpace;

    fn space(alg: AlgebraId, sig: &str) -> HermitianSpace {
        HermitianSpace::with_signature_str(alg, sig).unwrap()
    }

    fn pt(s: &HermitianSpace, c: &[f64]) -> ProjPoint {
        ProjPoint::from_coeffs(s, c).unwrap()
    }

    fn tan(p: &ProjPoint, c: &[f64]) -> Tangent {
        Tangent::new(p, p.space().vector_from_coeffs(c).unwrap()).unwrap()
    }

    #[test]
    fn spread_examples() {
        let r3 = space(AlgebraId::R, "+++");
        let p = pt(&r3, &[1.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 1.0, 0.0]);
        assert_eq!(spread_at(&t, &p).unwrap().vec(), t.vec());
        let x = pt(&r3, &[1.0, 1.0, 0.0]);
        let v = spread_at(&t, &x).unwrap();
        assert!((v.vec() - &r3.vector_from_coeffs(&[-0.5, 0.5, 0.0]).unwrap()).norm() < 1e-15);
        let y = pt(&r3, &[0.0, 0.3, 1.0]);
        assert!(spread_at(&t, &y).unwrap().is_zero());
    }

    #[test]
    fn nabla_spread_vanishes_at_base() {
        let c3 = space(AlgebraId::C, "-++");
        let p = pt(&c3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.5, 0.0, -1.0]);
        let s = tan(&p, &[0.0, 0.0, 0.2, 0.0, 0.7, 0.3]);
        assert!(nabla_spread(&t, &s, &p).unwrap().is_zero());
        let x = pt(&c3, &[0.0, 0.0, 1.0, 0.0, 0.0, 1.0]);
        assert!(nabla_spread(&t, &s, &x).unwrap().is_zero());
    }

    #[test]
    fn nabla_numeric_matches_analytic() {
        let c3 = space(AlgebraId::C, "-++");
        let p = pt(&c3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.5, 0.0, -1.0]);
        let s = tan(&p, &[0.0, 0.0, 0.2, 0.0, 0.7, 0.3]);
        let x = pt(&c3, &[1.2, 0.1, 0.3, -0.2, 0.1, 0.4]);
        let tx = spread_at(&t, &x).unwrap();
        let numeric = nabla_numeric(|y| spread_at(&s, y), &tx, 1e-5).unwrap();
        let analytic = nabla_spread(&t, &s, &x).unwrap();
        assert!((numeric.vec() - analytic.vec()).norm() < 1e-8);
        assert_eq!(nabla_numeric(|y| spread_at(&s, y), &tx, 0.0).unwrap_err(), Error::InvalidStep);
    }

    #[test]
    fn proj_derivative_examples() {
        let r3 = space(AlgebraId::R, "+++");
        let p = pt(&r3, &[1.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 1.0, 0.0]);
        let (n, a) = proj_derivative(&t, p.rep(), 1e-5).unwrap();
        assert!((&n - &a).norm() < 1e-9);
        assert!((&a - t.vec()).norm() < 1e-15);
        let (n, a) = proj_derivative(&t, &r3.basis_vector(2), 1e-5).unwrap();
        assert!(n.norm() < 1e-12 && a.norm() == 0.0);
        let (_, a) = proj_derivative(&t, t.vec(), 1e-5).unwrap();
        assert_eq!(&a, p.rep());
    }

    #[test]
    fn tn_examples() {
        let c2 = space(AlgebraId::C, "++");
        let p = pt(&c2, &[1.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.0]);
        assert_eq!(tn_at(&t, &p).unwrap().vec(), t.vec());
        let q = pt(&c2, &[0.0, 0.0, 1.0, 0.0]);
        assert_eq!(tn_at(&t, &q).unwrap_err(), Error::ZeroTance);
    }

    #[test]
    fn geodesic_examples() {
        let r2 = space(AlgebraId::R, "++");
        let p = pt(&r2, &[1.0, 0.0]);
        let g = make_geodesic(&tan(&p, &[0.0, 1.0])).unwrap();
        assert_eq!(g.family(), GeodesicFamily::Circular);
        assert!(g.point(core::f64::consts::FRAC_PI_2).unwrap().equal(&pt(&r2, &[0.0, 1.0])));

        let h = space(AlgebraId::R, "-+");
        let p = pt(&h, &[1.0, 0.0]);
        let g = make_geodesic(&tan(&p, &[0.0, 1.0])).unwrap();
        assert_eq!(g.family(), GeodesicFamily::Hyperbolic);
        assert_eq!(g.lift(0.7).coeffs(), [cosh(0.7), sinh(0.7)]);

        let d2 = space(AlgebraId::D, "++");
        let p = pt(&d2, &[1.0, 0.0, 0.0, 0.0]);
        let g = make_geodesic(&tan(&p, &[0.0, 0.0, 0.0, 1.0])).unwrap();
        assert_eq!(g.family(), GeodesicFamily::Null);
        assert_eq!(g.lift(0.3).coeffs(), [1.0, 0.0, 0.0, 0.3]);

        assert_eq!(make_geodesic(&tan(&p, &[0.0, 0.0, 0.0, 0.0])).unwrap_err(), Error::ZeroTangent);
    }

    #[test]
    fn geodesic_velocity_follows_tn() {
        let cs2 = space(AlgebraId::Cs, "++");
        let p = pt(&cs2, &[1.0, 0.2, 0.3, -0.1]);
        let t = p.tangent(&cs2.vector_from_coeffs(&[0.0, 0.0, 0.5, 0.9]).unwrap()).unwrap();
        let g = make_geodesic(&t).unwrap();
        let t0 = g.direction();
        for theta in [0.0, 0.3, 0.8] {
            let c = g.point(theta).unwrap();
            let v = g.velocity(theta).unwrap();
            let tn = tn_at(t0, &c).unwrap();
            assert!((v.vec() - tn.vec()).norm() < 1e-12);
        }
    }

    #[test]
    fn curvature_antisymmetry() {
        let c3 = space(AlgebraId::C, "+++");
        let p = pt(&c3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let t1 = tan(&p, &[0.0, 0.0, 1.0, 0.5, 0.0, -1.0]);
        let t2 = tan(&p, &[0.0, 0.0, 0.2, 0.0, 0.7, 0.3]);
        let s = tan(&p, &[0.0, 0.0, 0.4, 0.1, 0.1, 0.3]);
        let a = curvature(&t1, &t2, &s).unwrap();
        let b = curvature(&t2, &t1, &s).unwrap();
        assert!((a.vec() + b.vec()).norm() == 0.0);
        assert!(curvature(&t1, &t1, &s).unwrap().is_zero());
    }

    #[test]
    fn sphere_sectional_is_four() {
        let c2 = space(AlgebraId::C, "++");
        let p = pt(&c2, &[1.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.0]);
        let it = t.left_mul(&Scalar::complex(0.0, 1.0));
        let k = sectional(&t, &it, MetricConvention::Plus).unwrap();
        assert!((k.tensor - 4.0).abs() < 1e-12 && (k.closed_form - 4.0).abs() < 1e-12);
    }

    #[test]
    fn split_line_sectional_is_four() {
        let cs2 = space(AlgebraId::Cs, "++");
        let p = pt(&cs2, &[1.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.0]);
        let jt = t.left_mul(&Scalar::basis(AlgebraId::Cs, 1));
        let k = sectional(&t, &jt, MetricConvention::Plus).unwrap();
        assert!((k.tensor - 4.0).abs() < 1e-12 && (k.closed_form - 4.0).abs() < 1e-12);
    }

    #[test]
    fn dual_line_plane_is_degenerate() {
        let d2 = space(AlgebraId::D, "++");
        let p = pt(&d2, &[1.0, 0.0, 0.0, 0.0]);
        let t = tan(&p, &[0.0, 0.0, 1.0, 0.0]);
        let et = t.left_mul(&Scalar::basis(AlgebraId::D, 1));
        assert_eq!(sectional_tensor(&t, &et, MetricConvention::Plus).unwrap_err(), Error::DegeneratePlane);
    }
}
