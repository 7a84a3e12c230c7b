use std::io::Write;

use algebrae_core::bidisc::{ball_of, bidisc_space, lambda_split, tance_pair, tau, Ball};
use algebrae_core::connection::{g_orthonormalize, make_geodesic, sectional, sectional_tensor, GeodesicFamily};
use algebrae_core::geodesic_spaces::{
    from_hopf, h2_from_pcs1, hopf, line_from_pd1, mink_dot, pcs1_from_ds, pd1_from_line, transition_embed,
    OrientedLineE2, Vec3,
};
use algebrae_core::projective::{metric_gram, random_regular_point};
use algebrae_core::{
    AlgebraId, Error, HermitianSpace, MetricConvention, ModuleVector, ProjPoint, Scalar, Signature, Tangent, DEFAULT_TOL,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::output::{coords, num, Sink};
use crate::parse;
use crate::{AlgebraOp, BidiscCmd, Cli, CliError, Cmd, Conv, ConvertCmd, CurvatureArgs, SignatureArgs, SpaceArgs};

type Record = Map<String, Value>;

fn record<const N: usize>(fields: [(&str, Value); N]) -> Record {
    fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

struct Ctx<'a> {
    cli: &'a Cli,
    tol: f64,
}

impl Ctx<'_> {
    fn conv_or(&self, default: MetricConvention) -> MetricConvention {
        match self.cli.conv {
            Some(Conv::Plus) => MetricConvention::Plus,
            Some(Conv::Minus) => MetricConvention::Minus,
            None => default,
        }
    }

    fn space(&self, alg: AlgebraId, sig: &str) -> Result<HermitianSpace, CliError> {
        Ok(HermitianSpace::new(alg, parse::signature(sig)?)?.with_tolerance(self.tol))
    }

    /// Space sized by a coefficient count, with an optional signature.
    fn space_for(&self, args: &SpaceArgs, coeffs: usize) -> Result<HermitianSpace, CliError> {
        let alg = parse::algebra(&args.alg)?;
        if coeffs == 0 || coeffs % alg.dim() != 0 {
            return Err(CliError::Parse(format!("{coeffs} coefficients do not fit algebra {alg}")));
        }
        let n = coeffs / alg.dim();
        let sig = args.sig.clone().unwrap_or_else(|| "+".repeat(n));
        if sig.chars().count() != n {
            return Err(CliError::Parse(format!("signature {sig:?} has the wrong length for {n} entries")));
        }
        self.space(alg, &sig)
    }

    /// `n` independent samples; sample `i` draws from its own stream, so the
    /// result does not depend on the thread count.
    fn sample<T, F>(&self, n: usize, f: F) -> Result<Vec<T>, CliError>
    where
        T: Send,
        F: Fn(&mut ChaCha8Rng) -> Result<T, Error> + Sync,
    {
        let run = || {
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(self.cli.seed);
                    rng.set_stream(i as u64);
                    f(&mut rng)
                })
                .collect::<Result<Vec<T>, Error>>()
        };
        let out = match self.cli.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| CliError::Io(e.to_string()))?
                .install(run),
            None => run(),
        };
        Ok(out?)
    }
}

pub fn run<W: Write>(cli: &Cli, out: W) -> Result<(), CliError> {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Parse(format!("tolerance must be positive, got {tol}")));
    }
    let ctx = Ctx { cli, tol };
    let mut sink = Sink::new(cli.format, out);
    let records = match &cli.cmd {
        Cmd::Algebra(op) => vec![algebra(op, tol)?],
        Cmd::Tance(a) => {
            let (p, q) = (parse::list(&a.p)?, parse::list(&a.q)?);
            let space = ctx.space_for(&a.space, p.len())?;
            let p = ProjPoint::from_coeffs(&space, &p)?;
            let q = ProjPoint::from_coeffs(&space, &q)?;
            vec![record([("tance", coords(p.tance(&q)?.coeffs()))])]
        }
        Cmd::GeodesicTrace(a) => trace(&ctx, a)?,
        Cmd::Curvature(a) => vec![curvature(&ctx, a)?],
        Cmd::Signature(a) => vec![signature(&ctx, a)?],
        Cmd::Convert(c) => vec![convert(&ctx, c)?],
        Cmd::Transition(a) => transition(&ctx, a)?,
        Cmd::Bidisc(c) => vec![bidisc(&ctx, c)?],
    };
    for r in records {
        sink.emit(r)?;
    }
    Ok(())
}

fn scalar(alg: AlgebraId, text: &str) -> Result<Scalar, CliError> {
    Ok(Scalar::new(alg, &parse::list(text)?)?)
}

fn algebra(op: &AlgebraOp, tol: f64) -> Result<Record, CliError> {
    let (AlgebraOp::Mul(a) | AlgebraOp::Conj(a) | AlgebraOp::Inv(a) | AlgebraOp::Unit(a) | AlgebraOp::Norm(a)) = op;
    let alg = parse::algebra(&a.alg)?;
    let x = scalar(alg, &a.a)?;
    Ok(match op {
        AlgebraOp::Mul(_) => {
            let b = a.b.as_deref().ok_or_else(|| CliError::Parse("mul needs --b".into()))?;
            record([("result", coords(x.try_mul(&scalar(alg, b)?)?.coeffs()))])
        }
        AlgebraOp::Conj(_) => record([("result", coords(x.conj().coeffs()))]),
        AlgebraOp::Inv(_) => record([("result", coords(x.inverse_with(tol)?.coeffs()))]),
        AlgebraOp::Unit(_) => record([("unit", Value::Bool(x.is_unit_with(tol)))]),
        AlgebraOp::Norm(_) => record([("result", coords(x.norm_form().coeffs()))]),
    })
}

/// Homogeneous coordinates with the first unit entry scaled to 1, else of norm 1.
pub fn canonical(p: &ProjPoint) -> Vec<f64> {
    let rep = p.rep();
    let tol = p.space().tol();
    let scaled = match rep.entries().iter().find(|e| e.is_unit_with(tol)) {
        Some(e) => e.inverse_with(0.0).map(|inv| rep.scaled(&inv)).unwrap_or_else(|_| rep.clone()),
        None => rep.scaled_real(1.0 / rep.norm()),
    };
    scaled.coeffs()
}

fn family_name(f: GeodesicFamily) -> &'static str {
    match f {
        GeodesicFamily::Circular => "Circular",
        GeodesicFamily::Hyperbolic => "Hyperbolic",
        GeodesicFamily::Null => "Null",
    }
}

/// Torus with radii 2 and 1 for ℙ¹_ℂₛ = ℙ¹_ℝ × ℙ¹_ℝ.
pub const TORUS: (f64, f64) = (2.0, 1.0);

/// Embedding of a projective line into ℝ³ where one is known.
fn chart(p: &ProjPoint) -> Option<Vec3> {
    if p.space().rank() != 2 {
        return None;
    }
    match p.space().algebra() {
        AlgebraId::C => hopf(p).ok(),
        AlgebraId::D => line_from_pd1(p).ok().map(|l| [l.e.0, l.e.1, l.s]),
        AlgebraId::Cs => {
            let (a, a2) = p.rep().entry(0).cs_split().ok()?;
            let (b, b2) = p.rep().entry(1).cs_split().ok()?;
            let (u, v) = (2.0 * b.atan2(a), 2.0 * b2.atan2(a2));
            let (big, small) = TORUS;
            let w = big + small * v.cos();
            Some([w * u.cos(), w * u.sin(), small * v.sin()])
        }
        _ => None,
    }
}

fn trace(ctx: &Ctx, a: &crate::TraceArgs) -> Result<Vec<Record>, CliError> {
    let (pc, tc) = (parse::list(&a.p)?, parse::list(&a.tp)?);
    let space = ctx.space_for(&a.space, pc.len())?;
    let p = ProjPoint::from_coeffs(&space, &pc)?;
    let t = p.tangent(&space.vector_from_coeffs(&tc)?)?;
    let g = make_geodesic(&t)?;
    let (start, end) = parse::range(&a.range)?;
    if a.steps == 0 {
        return Err(CliError::Parse("--steps must be positive".into()));
    }
    let family = if space.algebra() == AlgebraId::CxC {
        Value::Array(g.families().into_iter().map(|f| Value::from(family_name(f))).collect())
    } else {
        Value::from(family_name(g.family()))
    };
    let sign = Value::from(format!("{:?}", g.sign()));
    (0..a.steps)
        .map(|k| {
            let theta = match a.steps {
                1 => end,
                n => start + (end - start) * k as f64 / (n - 1) as f64,
            };
            let c = g.point(theta)?;
            Ok(record([
                ("theta", num(theta)),
                ("point", coords(&canonical(&c))),
                ("family", family.clone()),
                ("sign", sign.clone()),
                ("chart", chart(&c).map_or(Value::Null, |x| coords(&x))),
            ]))
        })
        .collect()
}

fn e(alg: AlgebraId, n: usize, k: usize) -> ModuleVector {
    ModuleVector::unit(alg, n, k)
}

/// A named plane at `e₀`: (space, t₁, t₂, natural convention).
fn named_plane(ctx: &Ctx, name: &str, theta: f64) -> Result<(Tangent, Tangent, MetricConvention), CliError> {
    use AlgebraId::*;
    let plus = MetricConvention::Plus;
    let unit_mul = |alg: AlgebraId, sig: &str, k: usize, conv| -> Result<_, CliError> {
        let space = ctx.space(alg, sig)?;
        let p = ProjPoint::new(&space, e(alg, 2, 0))?;
        let t = Tangent::new(&p, e(alg, 2, 1))?;
        let u = t.left_mul(&Scalar::basis(alg, k));
        Ok((t, u, conv))
    };
    let flat = |alg: AlgebraId| -> Result<_, CliError> {
        let space = ctx.space(alg, "+++")?;
        let p = ProjPoint::new(&space, e(alg, 3, 0))?;
        Ok((Tangent::new(&p, e(alg, 3, 1))?, Tangent::new(&p, e(alg, 3, 2))?, plus))
    };
    let family = |f: &dyn Fn(&Scalar, &ModuleVector, &ModuleVector) -> ModuleVector| -> Result<_, CliError> {
        let space = ctx.space(Cs, "+++")?;
        let p = ProjPoint::new(&space, e(Cs, 3, 0))?;
        let (e1, e2) = (e(Cs, 3, 1), e(Cs, 3, 2));
        let j = Scalar::basis(Cs, 1);
        Ok((Tangent::new(&p, e1.clone())?, Tangent::new(&p, f(&j, &e1, &e2))?, plus))
    };
    let (s, c) = (theta.sinh(), theta.cosh());
    match name {
        "ps1-split" | "pcs1" => unit_mul(Cs, "++", 1, plus),
        "ps1-hs" | "phs1" => unit_mul(Hs, "++", 2, plus),
        "pc1" => unit_mul(C, "++", 1, plus),
        "hc1" => unit_mul(C, "-+", 1, MetricConvention::Minus),
        "pr2" => flat(R),
        "pd2" => flat(D),
        "family-sinh" => family(&|j, e1, e2| &e1.scaled(j).scaled_real(s) + &e2.scaled_real(c)),
        "family-cosh" => family(&|j, e1, e2| &e1.scaled(j).scaled_real(c) + &e2.scaled_real(s)),
        "family-cos" => family(&|j, e1, e2| (&e1.scaled_real(theta.cos()) + &e2.scaled_real(theta.sin())).scaled(j)),
        other => Err(CliError::Parse(format!("unknown space {other:?}"))),
    }
}

fn curvature(ctx: &Ctx, a: &CurvatureArgs) -> Result<Record, CliError> {
    let theta = parse::real(&a.theta)?;
    match a.space.as_deref() {
        Some("hc2") => {
            let conv = ctx.conv_or(MetricConvention::Minus);
            let space = ctx.space(AlgebraId::C, "-++")?;
            let ks = ctx.sample(a.samples, |rng| {
                // the ball ⟨p,p⟩ < 0
                let p = loop {
                    let p = random_regular_point(&space, rng)?;
                    if p.self_product().coeffs()[0] < 0.0 {
                        break p;
                    }
                };
                let mut draw = || -> Result<Tangent, Error> {
                    let c: Vec<f64> = (0..6).map(|_| rand::Rng::gen_range(rng, -1.0..1.0)).collect();
                    p.tangent(&space.vector_from_coeffs(&c)?)
                };
                let (t1, t2) = (draw()?, draw()?);
                let (e1, e2) = g_orthonormalize(&t1, &t2, conv)?;
                sectional_tensor(&e1, &e2, conv)
            })?;
            let min = ks.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = ks.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            Ok(record([("K_min", num(min)), ("K_max", num(max)), ("samples", Value::from(ks.len()))]))
        }
        Some(name) => {
            let (t1, t2, conv) = named_plane(ctx, name, theta)?;
            Ok(record([("K", num(sectional_tensor(&t1, &t2, ctx.conv_or(conv))?))]))
        }
        None => {
            let missing = || CliError::Parse("give --space, or --alg, --p, --t1 and --t2".into());
            let pc = parse::list(a.p.as_deref().ok_or_else(missing)?)?;
            let args = SpaceArgs { alg: a.alg.clone().ok_or_else(missing)?, sig: a.sig.clone() };
            let space = ctx.space_for(&args, pc.len())?;
            let p = ProjPoint::from_coeffs(&space, &pc)?;
            let t1 = p.tangent(&space.vector_from_coeffs(&parse::list(a.t1.as_deref().ok_or_else(missing)?)?)?)?;
            let t2 = p.tangent(&space.vector_from_coeffs(&parse::list(a.t2.as_deref().ok_or_else(missing)?)?)?)?;
            let conv = ctx.conv_or(MetricConvention::Plus);
            let (e1, e2) = g_orthonormalize(&t1, &t2, conv)?;
            let k = sectional(&e1, &e2, conv)?;
            Ok(record([("K", num(k.tensor)), ("K_closed", num(k.closed_form))]))
        }
    }
}

fn named_space(ctx: &Ctx, name: &str) -> Result<HermitianSpace, CliError> {
    let alg = match name {
        "pr1" => AlgebraId::R,
        "pc1" => AlgebraId::C,
        "ph1" => AlgebraId::H,
        "pd1" => AlgebraId::D,
        "pcs1" => AlgebraId::Cs,
        "phs1" => AlgebraId::Hs,
        "bidisc" => return Ok(bidisc_space().with_tolerance(ctx.tol)),
        other => return Err(CliError::Parse(format!("unknown space {other:?}"))),
    };
    ctx.space(alg, "++")
}

fn signature(ctx: &Ctx, a: &SignatureArgs) -> Result<Record, CliError> {
    let space = match (&a.space, &a.alg) {
        (Some(name), _) => named_space(ctx, name)?,
        (None, Some(alg)) => {
            let sig = a.sig.clone().unwrap_or_else(|| "++".into());
            ctx.space(parse::algebra(alg)?, &sig)?
        }
        (None, None) => return Err(CliError::Parse("give --space or --alg".into())),
    };
    let conv = ctx.conv_or(MetricConvention::Plus);
    let tol = ctx.tol;
    let found = ctx.sample(a.samples.max(1), |rng| {
        let p = random_regular_point(&space, rng)?;
        let ball = if space.algebra() == AlgebraId::CxC { Some(ball_of(&p)?) } else { None };
        Ok((ball, Signature::of_matrix(&metric_gram(&p, conv)?, tol)))
    })?;
    if space.algebra() == AlgebraId::CxC {
        let mut rec = Record::new();
        for ball in [Ball::PlusPlus, Ball::PlusMinus, Ball::MinusPlus, Ball::MinusMinus] {
            let mut sigs = found.iter().filter(|(b, _)| *b == Some(ball)).map(|(_, s)| *s);
            if let Some(first) = sigs.next() {
                if sigs.any(|s| s != first) {
                    return Err(Error::SignatureVaries.into());
                }
                rec.insert(ball.to_string(), Value::from(first.to_string()));
            }
        }
        return Ok(rec);
    }
    let first = found[0].1;
    if found.iter().any(|(_, s)| *s != first) {
        return Err(Error::SignatureVaries.into());
    }
    Ok(record([("signature", Value::from(first.to_string()))]))
}

/// Scale a real projective vector so that `⟨v,v⟩ = ±1` (when not null) and its first nonzero entry is positive.
fn canonical_real(v: &Vec3) -> Vec3 {
    let q = mink_dot(v, v).abs();
    let n = if q > 1e-12 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) { q.sqrt() } else { v[0].abs() };
    let lead = v.iter().find(|x| x.abs() > 1e-12).copied().unwrap_or(1.0);
    let k = lead.signum() / n;
    [v[0] * k, v[1] * k, v[2] * k]
}

fn cs_pairs(p: &ProjPoint) -> Result<Value, CliError> {
    let c = canonical(p);
    let rep = ModuleVector::from_coeffs(AlgebraId::Cs, &c)?;
    let pairs = rep
        .entries()
        .iter()
        .map(|e| e.cs_split().map(|(a, b)| coords(&[a, b])))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Value::Array(pairs))
}

fn convert(ctx: &Ctx, c: &ConvertCmd) -> Result<Record, CliError> {
    match c {
        ConvertCmd::S2 { point: Some(text), .. } => {
            let p = ProjPoint::from_coeffs(&ctx.space(AlgebraId::C, "++")?, &parse::list_of_len(text, 4)?)?;
            Ok(record([("pole", coords(&hopf(&p)?))]))
        }
        ConvertCmd::S2 { pole, .. } => {
            let n = parse::vec3(pole.as_deref().unwrap_or_default())?;
            let p = from_hopf(&ctx.space(AlgebraId::C, "++")?, &n)?;
            Ok(record([("point", coords(&canonical(&p)))]))
        }
        ConvertCmd::E2 { point: Some(text), .. } => {
            let p = ProjPoint::from_coeffs(&ctx.space(AlgebraId::D, "++")?, &parse::list_of_len(text, 4)?)?;
            let l = line_from_pd1(&p)?;
            Ok(record([("E", coords(&[l.e.0, l.e.1])), ("s", num(l.s))]))
        }
        ConvertCmd::E2 { line, .. } => {
            let v = parse::vec3(line.as_deref().unwrap_or_default())?;
            let r = v[0].hypot(v[1]);
            if r == 0.0 {
                return Err(CliError::Parse("line direction must be nonzero".into()));
            }
            let l = OrientedLineE2 { e: (v[0] / r, v[1] / r), s: v[2] };
            let p = pd1_from_line(&ctx.space(AlgebraId::D, "++")?, &l)?;
            Ok(record([("point", coords(&canonical(&p)))]))
        }
        ConvertCmd::H2 { point: Some(text), .. } => {
            let space = ctx.space(AlgebraId::Cs, "++")?;
            let p = ProjPoint::new(&space, space.vector(parse::cs_entries(text)?)?)?;
            let g = h2_from_pcs1(&p)?;
            let null = |v: &Vec3| coords(&[1.0, v[1] / v[0], v[2] / v[0]]);
            Ok(record([("A", null(&g.a)), ("B", null(&g.b)), ("ds", coords(&canonical_real(&g.ds)))]))
        }
        ConvertCmd::H2 { ds, reversed, .. } => {
            let v = parse::vec3(ds.as_deref().unwrap_or_default())?;
            let p = pcs1_from_ds(&ctx.space(AlgebraId::Cs, "++")?, &v, *reversed)?;
            Ok(record([("point", cs_pairs(&p)?)]))
        }
    }
}

fn transition(ctx: &Ctx, a: &crate::TransitionArgs) -> Result<Vec<Record>, CliError> {
    if a.grid < 2 {
        return Err(CliError::Parse("--grid needs at least 2 points".into()));
    }
    let (pc, qc) = (parse::list(&a.p)?, parse::list(&a.q)?);
    (0..a.grid)
        .map(|k| {
            let t = k as f64 / (a.grid - 1) as f64;
            let args = SpaceArgs { alg: format!("Kt:{t}"), sig: a.sig.clone() };
            let space = ctx.space_for(&args, pc.len())?;
            let p = ProjPoint::from_coeffs(&space, &pc)?;
            let q = ProjPoint::from_coeffs(&space, &qc)?;
            let inner = algebrae_core::kt_embed(t, &p.tance(&q)?)?;
            let (ep, eq) = (transition_embed(t, &p)?, transition_embed(t, &q)?);
            let outer = ep.tance(&eq)?;
            Ok(record([
                ("t", num(t)),
                ("class", Value::from(AlgebraId::kt_class(t).to_string())),
                ("sigma_sq", num(algebrae_core::algebra::sigma_square(t))),
                ("p", coords(&ep.rep().coeffs())),
                ("tance_kt", coords(inner.coeffs())),
                ("tance_hs", coords(outer.coeffs())),
                ("residual", num((inner - outer).norm())),
            ]))
        })
        .collect()
}

fn bidisc_point(ctx: &Ctx, text: &str) -> Result<ProjPoint, CliError> {
    let space = bidisc_space().with_tolerance(ctx.tol);
    Ok(ProjPoint::new(&space, space.vector(parse::cxc_entries(text)?)?)?)
}

fn bidisc(ctx: &Ctx, c: &BidiscCmd) -> Result<Record, CliError> {
    match c {
        BidiscCmd::Classify { point } => {
            let space = bidisc_space().with_tolerance(ctx.tol);
            let ball = algebrae_core::bidisc::classify_ball(&space, &space.vector(parse::cxc_entries(point)?)?)?;
            Ok(record([("ball", Value::from(ball.to_string()))]))
        }
        BidiscCmd::Split { point } => {
            let (p, q) = lambda_split(&bidisc_point(ctx, point)?)?;
            Ok(record([("lambda1", coords(&canonical(&p))), ("lambda2", coords(&canonical(&q)))]))
        }
        BidiscCmd::Tau { point } => Ok(record([("point", coords(&tau(&bidisc_point(ctx, point)?)?.rep().coeffs()))])),
        BidiscCmd::TancePair { point, other } => {
            let (x, y) = tance_pair(&bidisc_point(ctx, point)?, &bidisc_point(ctx, other)?)?;
            Ok(record([("tance", Value::Array(vec![num(x), num(y)]))]))
        }
    }
}
