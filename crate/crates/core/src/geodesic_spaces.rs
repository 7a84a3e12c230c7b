//! Projective lines as spaces of oriented geodesics of S², E² and H².
//!
//! * ℙ¹_ℂ: a point is the pole of an oriented great circle (Hopf map).
//! * ℙ¹_𝔻 over `V = ℂ + εℂ`: `[e + kεie] ↦ (e², 2k)` on the cylinder `S¹ × ℝ`.
//! * ℙ¹_ℂₛ: `[(a,a'):(b,b')]` is the geodesic of H² from `B(a',b')` to `A(a,b)`,
//!   and `f = A × B` is a double cover of dS².

use crate::float::{acos, atan2, cos, sin, sqrt};
use crate::algebra::{kt_embed, AlgebraId, Scalar};
use crate::error::{Error, Result};
use crate::hermitian::{HermitianSpace, ModuleVector};
use crate::projective::{MetricConvention, ProjPoint, Tangent};

pub type Vec3 = [f64; 3];

fn require(p: &ProjPoint, alg: AlgebraId) -> Result<()> {
    let space = p.space();
    if space.algebra() != alg {
        return Err(Error::AlgebraMismatch { left: space.algebra(), right: alg });
    }
    if space.rank() != 2 {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

fn dot(u: &Vec3, v: &Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// `[z₀:z₁] ↦ (2Re z₀z̄₁, 2Im z₀z̄₁, |z₀|² − |z₁|²) / (|z₀|² + |z₁|²)`.
pub fn hopf(p: &ProjPoint) -> Result<Vec3> {
    require(p, AlgebraId::C)?;
    let c = p.rep().coeffs();
    let (x0, y0, x1, y1) = (c[0], c[1], c[2], c[3]);
    // z₀ z̄₁
    let re = x0 * x1 + y0 * y1;
    let im = y0 * x1 - x0 * y1;
    let n0 = x0 * x0 + y0 * y0;
    let n1 = x1 * x1 + y1 * y1;
    let s = n0 + n1;
    Ok([2.0 * re / s, 2.0 * im / s, (n0 - n1) / s])
}

/// Inverse of [`hopf`] on the unit sphere.
pub fn from_hopf(space: &HermitianSpace, n: &Vec3) -> Result<ProjPoint> {
    let len = sqrt(dot(n, n));
    if !(len > 0.0) {
        return Err(Error::InvalidBoundary);
    }
    let [x, y, z] = [n[0] / len, n[1] / len, n[2] / len];
    // [1 + z : x − iy] for the upper hemisphere, [x + iy : 1 − z] otherwise
    let coeffs = if z >= 0.0 { [1.0 + z, 0.0, x, -y] } else { [x, y, 1.0 - z, 0.0] };
    ProjPoint::from_coeffs(space, &coeffs)
}

/// An oriented great circle of S², described by its pole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedGreatCircle {
    pub pole: Vec3,
}

pub fn circle_of(p: &ProjPoint) -> Result<OrientedGreatCircle> {
    Ok(OrientedGreatCircle { pole: hopf(p)? })
}

/// Angle between the poles, in `(0, π)`.
pub fn circle_angle(c1: &OrientedGreatCircle, c2: &OrientedGreatCircle) -> Result<f64> {
    let d = dot(&c1.pole, &c2.pole).clamp(-1.0, 1.0);
    if (d.abs() - 1.0).abs() < 1e-12 {
        return Err(Error::DegenerateAngle);
    }
    Ok(acos(d))
}

/// The oriented line `t ↦ s·iE + E·t` of the Euclidean plane, `|E| = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedLineE2 {
    pub e: (f64, f64),
    pub s: f64,
}

impl OrientedLineE2 {
    pub fn point_at(&self, t: f64) -> (f64, f64) {
        let (ex, ey) = self.e;
        (-self.s * ey + ex * t, self.s * ex + ey * t)
    }
}

/// Reads `a + εb ∈ ℂ + εℂ` from a 𝔻² vector `(x₁ + εy₁, x₂ + εy₂)`.
fn dual_parts(v: &ModuleVector) -> ((f64, f64), (f64, f64)) {
    let c = v.coeffs();
    ((c[0], c[2]), (c[1], c[3]))
}

fn e2_coords(v: &ModuleVector) -> Result<(f64, f64, f64)> {
    let ((ax, ay), (bx, by)) = dual_parts(v);
    let n2 = ax * ax + ay * ay;
    if n2 <= 0.0 {
        return Err(Error::NotGood);
    }
    let n = sqrt(n2);
    let (ex, ey) = (ax / n, ay / n);
    // k = Im(b ā) / |a|²
    let k = (by * ax - bx * ay) / n2;
    Ok((ex * ex - ey * ey, 2.0 * ex * ey, 2.0 * k))
}

/// `[e + kεie] ↦ (E, s) = (e², 2k)`.
pub fn line_from_pd1(u: &ProjPoint) -> Result<OrientedLineE2> {
    require(u, AlgebraId::D)?;
    let (x, y, s) = e2_coords(u.rep())?;
    Ok(OrientedLineE2 { e: (x, y), s })
}

/// Inverse of [`line_from_pd1`].
pub fn pd1_from_line(space: &HermitianSpace, line: &OrientedLineE2) -> Result<ProjPoint> {
    let (ex, ey) = line.e;
    let r = sqrt(ex * ex + ey * ey);
    if !(r > 0.0) {
        return Err(Error::InvalidBoundary);
    }
    let half = atan2(ey, ex) / 2.0;
    let (cx, cy) = (cos(half), sin(half));
    let k = line.s / 2.0;
    // b = k·i·e
    let (bx, by) = (-k * cy, k * cx);
    ProjPoint::from_coeffs(space, &[cx, bx, cy, by])
}

/// `s − (b·Re E − a·Im E)`; zero iff the line passes through `a + ib`.
pub fn pencil_residual(a: f64, b: f64, line: &OrientedLineE2) -> f64 {
    line.s - (b * line.e.0 - a * line.e.1)
}

pub fn lines_through_point(a: f64, b: f64, line: &OrientedLineE2) -> bool {
    pencil_residual(a, b, line).abs() <= 1e-9 * (1.0 + a.abs() + b.abs())
}

/// The line of the pencil through `a + ib` with direction `e^{iθ}`.
pub fn pencil_line(a: f64, b: f64, theta: f64) -> OrientedLineE2 {
    OrientedLineE2 { e: (cos(theta), sin(theta)), s: -a * sin(theta) + b * cos(theta) }
}

/// Minkowski product of signature `−++`.
pub fn mink_dot(u: &Vec3, v: &Vec3) -> f64 {
    -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Cross product with `e₁ × e₂ = e₃`, `e₂ × e₃ = −e₁`, `e₃ × e₁ = e₂`.
pub fn mink_cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [-(u[1] * v[2] - u[2] * v[1]), u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

/// ℝ³ with the form `−++`.
pub fn minkowski_space() -> HermitianSpace {
    HermitianSpace::new(AlgebraId::R, alloc::vec![-1.0, 1.0, 1.0]).expect("valid signature")
}

/// An oriented geodesic of H², running from `b` to `a` on the boundary.
#[derive(Clone, Debug)]
pub struct OrientedGeodesicH2 {
    pub a: Vec3,
    pub b: Vec3,
    pub ds: Vec3,
}

fn split_coords(u: &ProjPoint) -> Result<((f64, f64), (f64, f64))> {
    require(u, AlgebraId::Cs)?;
    let (a, a2) = u.rep().entry(0).cs_split()?;
    let (b, b2) = u.rep().entry(1).cs_split()?;
    if !u.is_regular() {
        return Err(Error::SingularPoint);
    }
    Ok(((a, a2), (b, b2)))
}

pub fn boundary_a(a: f64, b: f64) -> Vec3 {
    [a * a + b * b, a * a - b * b, 2.0 * a * b]
}

pub fn boundary_b(a2: f64, b2: f64) -> Vec3 {
    [a2 * a2 + b2 * b2, -a2 * a2 + b2 * b2, -2.0 * a2 * b2]
}

pub fn h2_from_pcs1(u: &ProjPoint) -> Result<OrientedGeodesicH2> {
    let ((a, a2), (b, b2)) = split_coords(u)?;
    let pa = boundary_a(a, b);
    let pb = boundary_b(a2, b2);
    Ok(OrientedGeodesicH2 { ds: mink_cross(&pa, &pb), a: pa, b: pb })
}

/// `f = [ab' − a'b : ab' + a'b : −aa' + bb']`.
fn f_vector(v: &ModuleVector) -> Result<Vec3> {
    let (a, a2) = v.entry(0).cs_split()?;
    let (b, b2) = v.entry(1).cs_split()?;
    Ok([a * b2 - a2 * b, a * b2 + a2 * b, -a * a2 + b * b2])
}

pub fn double_cover_f(u: &ProjPoint) -> Result<ProjPoint> {
    split_coords(u)?;
    let f = f_vector(u.rep())?;
    ProjPoint::from_coeffs(&minkowski_space(), &f)
}

/// Orientation reversal `[(a,a'):(b,b')] ↦ [(b',b):(−a',−a)]`.
pub fn rev(u: &ProjPoint) -> Result<ProjPoint> {
    let ((a, a2), (b, b2)) = split_coords(u)?;
    let v = u.space().vector(alloc::vec![Scalar::cs_join(b2, b), Scalar::cs_join(-a2, -a)])?;
    ProjPoint::new(u.space(), v)
}

fn boundary_root(p: &Vec3, sign: f64) -> Result<(f64, f64)> {
    let n = p[0].abs() + p[1].abs() + p[2].abs();
    if !(n > 0.0) || mink_dot(p, p).abs() > 1e-9 * n * n {
        return Err(Error::InvalidBoundary);
    }
    let s = if p[0] < 0.0 { -1.0 / p[0] } else { 1.0 / p[0] };
    let (x0, x1, x2) = (p[0] * s, sign * p[1] * s, sign * p[2] * s);
    // x = (a² + b², a² − b², 2ab) with x₀ = 1
    let a = sqrt(((1.0 + x1) / 2.0).max(0.0));
    let b = sqrt(((x0 - x1) / 2.0).max(0.0));
    Ok(if a > b { (a, x2 / (2.0 * a)) } else { (x2 / (2.0 * b), b) })
}

/// The point of ℙ¹_ℂₛ whose geodesic runs from `b` to `a`.
pub fn pcs1_from_boundary(space: &HermitianSpace, a: &Vec3, b: &Vec3) -> Result<ProjPoint> {
    let (x, y) = boundary_root(a, 1.0)?;
    let (x2, y2) = boundary_root(b, -1.0)?;
    let v = space.vector(alloc::vec![Scalar::cs_join(x, x2), Scalar::cs_join(y, y2)])?;
    let p = ProjPoint::new(space, v).map_err(|_| Error::InvalidBoundary)?;
    if !p.is_regular() {
        return Err(Error::InvalidBoundary);
    }
    Ok(p)
}

/// The point of ℙ¹_ℂₛ lying over a de Sitter point, with the given orientation
/// (`false` for one sheet of the cover, `true` for the other).
pub fn pcs1_from_ds(space: &HermitianSpace, ds: &Vec3, reversed: bool) -> Result<ProjPoint> {
    if !(mink_dot(ds, ds) > 0.0) {
        return Err(Error::InvalidBoundary);
    }
    // boundary points of the geodesic ds^⊥: unit spacelike directions ±w in the plane
    let e0 = [1.0, 0.0, 0.0];
    let h = {
        let c = mink_dot(&e0, ds) / mink_dot(ds, ds);
        [e0[0] - c * ds[0], e0[1] - c * ds[1], e0[2] - c * ds[2]]
    };
    let hn = sqrt(-mink_dot(&h, &h)) * h[0].signum();
    let h = [h[0] / hn, h[1] / hn, h[2] / hn];
    let w = mink_cross(ds, &h);
    let wn = sqrt(mink_dot(&w, &w));
    let w = [w[0] / wn, w[1] / wn, w[2] / wn];
    let p = [h[0] + w[0], h[1] + w[1], h[2] + w[2]];
    let q = [h[0] - w[0], h[1] - w[1], h[2] - w[2]];
    // choose the order making A × B a positive multiple of ds
    let c = mink_cross(&p, &q);
    let (a, b) = if dot(&c, ds) * if reversed { -1.0 } else { 1.0 } > 0.0 { (p, q) } else { (q, p) };
    pcs1_from_boundary(space, &a, &b)
}

/// Which explicit map a pushforward check runs through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushforwardMap {
    /// ℙ¹_ℂₛ → dS², expected ratio −4.
    H2Cover,
    /// ℙ¹_𝔻 → S¹ × ℝ, expected ratio 4.
    E2Cylinder,
}

impl PushforwardMap {
    pub fn expected_ratio(self) -> f64 {
        match self {
            PushforwardMap::H2Cover => -4.0,
            PushforwardMap::E2Cylinder => 4.0,
        }
    }
}

/// `(df*g_target(t₁,t₂), g_source(t₁,t₂))`, with `df` from central differences
/// along the lifts `u + θ tᵢ(u)`.
pub fn pushforward_metric_check(map: PushforwardMap, t1: &Tangent, t2: &Tangent, step: f64) -> Result<(f64, f64)> {
    if !(step > 0.0) {
        return Err(Error::InvalidStep);
    }
    let u = t1.base();
    let t2 = t2.rebased(u)?;
    let source = t1.g_metric(&t2, MetricConvention::Plus)?;
    let central = |f: &dyn Fn(&ModuleVector) -> Result<Vec3>, v: &ModuleVector, h: f64| -> Result<Vec3> {
        let a = f(&(u.rep() + &v.scaled_real(h)))?;
        let b = f(&(u.rep() - &v.scaled_real(h)))?;
        Ok([(a[0] - b[0]) / (2.0 * h), (a[1] - b[1]) / (2.0 * h), (a[2] - b[2]) / (2.0 * h)])
    };
    // one Richardson step on top of the central difference
    let diff = |f: &dyn Fn(&ModuleVector) -> Result<Vec3>, v: &ModuleVector| -> Result<Vec3> {
        let (a, b) = (central(f, v, step)?, central(f, v, 0.5 * step)?);
        Ok([(4.0 * b[0] - a[0]) / 3.0, (4.0 * b[1] - a[1]) / 3.0, (4.0 * b[2] - a[2]) / 3.0])
    };
    let pulled = match map {
        PushforwardMap::H2Cover => {
            require(u, AlgebraId::Cs)?;
            let mink = minkowski_space();
            let q = ProjPoint::from_coeffs(&mink, &f_vector(u.rep())?)?;
            let w1 = diff(&f_vector, t1.vec())?;
            let w2 = diff(&f_vector, t2.vec())?;
            let d1 = q.tangent(&mink.vector_from_coeffs(&w1)?)?;
            let d2 = q.tangent(&mink.vector_from_coeffs(&w2)?)?;
            d1.g_metric(&d2, MetricConvention::Minus)?
        }
        PushforwardMap::E2Cylinder => {
            require(u, AlgebraId::D)?;
            let w1 = diff(&e2_coords_vec, t1.vec())?;
            let w2 = diff(&e2_coords_vec, t2.vec())?;
            w1[0] * w2[0] + w1[1] * w2[1]
        }
    };
    Ok((pulled, source))
}

fn e2_coords_vec(v: &ModuleVector) -> Result<Vec3> {
    let (x, y, s) = e2_coords(v)?;
    Ok([x, y, s])
}

/// Coefficient-wise inclusion of `K_tⁿ` into `ℍₛⁿ`, same signature.
pub fn transition_embed(t: f64, u: &ProjPoint) -> Result<ProjPoint> {
    let space = u.space();
    match space.algebra() {
        AlgebraId::Kt(s) if s == t => {}
        AlgebraId::Kt(s) => return Err(Error::ParameterMismatch { algebra: s, requested: t }),
        other => return Err(Error::AlgebraMismatch { left: other, right: AlgebraId::Kt(t) }),
    }
    let target = HermitianSpace::new(AlgebraId::Hs, space.signature().to_vec())?.with_tolerance(space.tol());
    let entries = u.rep().entries().iter().map(|e| kt_embed(t, e)).collect::<Result<alloc::vec::Vec<_>>>()?;
    ProjPoint::new(&target, target.vector(entries)?)
}

/// Coefficient-wise inclusion of a tangent vector at `u`.
pub fn transition_embed_tangent(t: f64, v: &Tangent) -> Result<Tangent> {
    let base = transition_embed(t, v.base())?;
    let entries = v.vec().entries().iter().map(|e| kt_embed(t, e)).collect::<Result<alloc::vec::Vec<_>>>()?;
    Tangent::new(&base, base.space().vector(entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn space(alg: AlgebraId) -> HermitianSpace {
        HermitianSpace::standard(alg, 2)
    }

    fn pt(alg: AlgebraId, c: &[f64]) -> ProjPoint {
        ProjPoint::from_coeffs(&space(alg), c).unwrap()
    }

    fn cs(pairs: [(f64, f64); 2]) -> ProjPoint {
        let s = space(AlgebraId::Cs);
        let v = s.vector(alloc::vec![Scalar::cs_join(pairs[0].0, pairs[0].1), Scalar::cs_join(pairs[1].0, pairs[1].1)]).unwrap();
        ProjPoint::new(&s, v).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    fn proj_eq(a: &Vec3, b: &Vec3) -> bool {
        let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
        sqrt(dot(&c, &c)) <= 1e-12 * sqrt(dot(a, a)) * sqrt(dot(b, b))
    }

    #[test]
    fn hopf_examples() {
        assert!(close(&hopf(&pt(AlgebraId::C, &[1.0, 0.0, 0.0, 0.0])).unwrap(), &[0.0, 0.0, 1.0]));
        assert!(close(&hopf(&pt(AlgebraId::C, &[0.0, 0.0, 1.0, 0.0])).unwrap(), &[0.0, 0.0, -1.0]));
        assert!(close(&hopf(&pt(AlgebraId::C, &[1.0, 0.0, 1.0, 0.0])).unwrap(), &[1.0, 0.0, 0.0]));
        let p = pt(AlgebraId::C, &[0.3, -0.2, 0.5, 0.9]);
        let q = from_hopf(&space(AlgebraId::C), &hopf(&p).unwrap()).unwrap();
        assert!(p.equal(&q));
    }

    #[test]
    fn circle_angle_examples() {
        let c0 = circle_of(&pt(AlgebraId::C, &[1.0, 0.0, 0.0, 0.0])).unwrap();
        let c1 = circle_of(&pt(AlgebraId::C, &[0.0, 0.0, 1.0, 0.0])).unwrap();
        let c2 = circle_of(&pt(AlgebraId::C, &[1.0, 0.0, 1.0, 0.0])).unwrap();
        assert_eq!(c0.pole, [0.0, 0.0, 1.0]);
        assert_eq!(circle_angle(&c0, &c1), Err(Error::DegenerateAngle));
        assert!((circle_angle(&c0, &c2).unwrap() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn e2_examples() {
        let l = line_from_pd1(&pt(AlgebraId::D, &[1.0, 0.0, 0.0, 2.0])).unwrap();
        assert!(close(&[l.e.0, l.e.1, l.s], &[1.0, 0.0, 4.0]));
        let l = line_from_pd1(&pt(AlgebraId::D, &[0.0, 0.0, 1.0, 0.0])).unwrap();
        assert!(close(&[l.e.0, l.e.1, l.s], &[-1.0, 0.0, 0.0]));
        // e + εie with e = e^{iπ/4}
        let (c, s) = (cos(FRAC_PI_4), sin(FRAC_PI_4));
        let l = line_from_pd1(&pt(AlgebraId::D, &[c, -s, s, c])).unwrap();
        assert!(close(&[l.e.0, l.e.1, l.s], &[0.0, 1.0, 2.0]));
        let back = pd1_from_line(&space(AlgebraId::D), &l).unwrap();
        assert!(back.equal(&pt(AlgebraId::D, &[c, -s, s, c])));
    }

    #[test]
    fn pencil_examples() {
        assert!(lines_through_point(0.0, 0.0, &OrientedLineE2 { e: (0.6, 0.8), s: 0.0 }));
        let l = OrientedLineE2 { e: (1.0, 0.0), s: 1.0 };
        assert!(lines_through_point(0.0, 1.0, &l));
        assert!(close(&[l.point_at(0.0).0, l.point_at(0.0).1], &[0.0, 1.0]));
        assert!(lines_through_point(1.0, 0.0, &OrientedLineE2 { e: (0.0, 1.0), s: -1.0 }));
        for k in 0..10 {
            assert!(lines_through_point(0.4, -1.3, &pencil_line(0.4, -1.3, k as f64 * 0.7)));
        }
    }

    #[test]
    fn cross_examples() {
        let e = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert_eq!(mink_cross(&e[0], &e[1]), e[2]);
        assert_eq!(mink_cross(&e[1], &e[2]), [-1.0, 0.0, 0.0]);
        assert_eq!(mink_cross(&e[2], &e[0]), e[1]);
        let u = [0.3, -1.0, 2.0];
        assert_eq!(mink_cross(&u, &u), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn h2_examples() {
        let g = h2_from_pcs1(&cs([(1.0, 1.0), (0.0, 0.0)])).unwrap();
        assert_eq!(g.a, [1.0, 1.0, 0.0]);
        assert_eq!(g.b, [1.0, -1.0, 0.0]);
        assert!(proj_eq(&g.ds, &[0.0, 0.0, 1.0]));
        assert_eq!(h2_from_pcs1(&cs([(1.0, 0.0), (0.0, 1.0)])).unwrap_err(), Error::SingularPoint);
        let g = h2_from_pcs1(&cs([(0.0, 0.0), (1.0, 1.0)])).unwrap();
        assert_eq!(g.a, [1.0, -1.0, 0.0]);
        assert_eq!(g.b, [1.0, 1.0, 0.0]);
        assert!(proj_eq(&g.ds, &[0.0, 0.0, 1.0]));
    }

    #[test]
    fn double_cover_examples() {
        let u = cs([(1.0, 1.0), (0.0, 0.0)]);
        assert_eq!(double_cover_f(&u).unwrap().rep().coeffs(), [0.0, 0.0, -1.0]);
        let r = rev(&u).unwrap();
        assert!(r.equal(&cs([(0.0, 0.0), (-1.0, -1.0)])));
        assert!(!r.equal(&u));
        assert!(double_cover_f(&r).unwrap().equal(&double_cover_f(&u).unwrap()));
        assert!(rev(&r).unwrap().equal(&u));
        assert_eq!(double_cover_f(&cs([(1.0, 1.0), (1.0, 1.0)])).unwrap().rep().coeffs(), [0.0, 2.0, 0.0]);
    }

    #[test]
    fn boundary_round_trip() {
        let u = cs([(0.7, -1.2), (0.4, 0.9)]);
        let g = h2_from_pcs1(&u).unwrap();
        assert!(pcs1_from_boundary(&space(AlgebraId::Cs), &g.a, &g.b).unwrap().equal(&u));
        let s = pcs1_from_ds(&space(AlgebraId::Cs), &g.ds, false).unwrap();
        let t = pcs1_from_ds(&space(AlgebraId::Cs), &g.ds, true).unwrap();
        assert!(s.equal(&u) != t.equal(&u));
        assert!(s.equal(&rev(&t).unwrap()));
    }

    #[test]
    fn pushforward_standard_frame() {
        // aa' + bb' = 1, t₁ = ⟨·,p⟩v, t₂ = ⟨·,p⟩(1,−1)v with v = ((b',b),(−a',−a))
        let (a, a2, b, b2) = (0.8, 0.5, 1.5, 0.4);
        let u = cs([(a, a2), (b, b2)]);
        let sp = space(AlgebraId::Cs);
        let v = sp.vector(alloc::vec![Scalar::cs_join(b2, b), Scalar::cs_join(-a2, -a)]).unwrap();
        let t1 = Tangent::new(&u, v.clone()).unwrap();
        let t2 = Tangent::new(&u, v.scaled(&Scalar::cs_join(1.0, -1.0))).unwrap();
        let check = |x: &Tangent, y: &Tangent| pushforward_metric_check(PushforwardMap::H2Cover, x, y, 1e-5).unwrap();
        let (p11, s11) = check(&t1, &t1);
        let (p22, s22) = check(&t2, &t2);
        let (p12, s12) = check(&t1, &t2);
        assert!((s11 - 1.0).abs() < 1e-12 && (p11 + 4.0).abs() < 1e-8);
        assert!((s22 + 1.0).abs() < 1e-12 && (p22 - 4.0).abs() < 1e-8);
        assert!(s12.abs() < 1e-12 && p12.abs() < 1e-8);
    }

    #[test]
    fn pushforward_e2() {
        let u = pt(AlgebraId::D, &[0.6, 0.1, -0.3, 0.7]);
        let t = u.tangent(&space(AlgebraId::D).vector_from_coeffs(&[0.2, 0.5, 0.9, -0.4]).unwrap()).unwrap();
        let (pulled, source) = pushforward_metric_check(PushforwardMap::E2Cylinder, &t, &t, 1e-5).unwrap();
        assert!((pulled / source - 4.0).abs() < 1e-8);
    }

    #[test]
    fn transition_examples() {
        let k = HermitianSpace::standard(AlgebraId::Kt(0.5), 2);
        let u = ProjPoint::from_coeffs(&k, &[1.0, 0.0, 1.0, 1.0]).unwrap();
        let e = transition_embed(0.5, &u).unwrap();
        assert_eq!(e.rep().coeffs(), [1.0, 0.0, 0.0, 0.0, 1.0, 0.5, 0.5, 0.0]);
        assert!(matches!(transition_embed(0.25, &u), Err(Error::ParameterMismatch { .. })));
    }
}
