//! Free modules 𝔽ⁿ with diagonal Hermitian forms `⟨u,v⟩ = Σ cᵢ uᵢ vᵢ*`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use nalgebra::{DMatrix, DVector};

use crate::float::sqrt;
use crate::algebra::{AlgebraId, Scalar};
use crate::error::{Error, Result};
use crate::linalg;
use crate::DEFAULT_TOL;

/// A vector of `n` algebra elements.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    alg: AlgebraId,
    entries: Vec<Scalar>,
}

impl ModuleVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        let alg = entries.first().ok_or(Error::SpaceMismatch)?.algebra();
        if let Some(bad) = entries.iter().find(|e| e.algebra() != alg) {
            return Err(Error::AlgebraMismatch { left: alg, right: bad.algebra() });
        }
        Ok(ModuleVector { alg, entries })
    }

    /// Builds a vector of `coeffs.len() / dim` entries from flattened coefficients.
    pub fn from_coeffs(alg: AlgebraId, coeffs: &[f64]) -> Result<Self> {
        let d = alg.dim();
        if coeffs.is_empty() || coeffs.len() % d != 0 {
            return Err(Error::CoefficientCount { expected: d, found: coeffs.len() });
        }
        let entries = coeffs.chunks(d).map(|c| Scalar::new(alg, c)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleVector { alg, entries })
    }

    pub fn zeros(alg: AlgebraId, n: usize) -> Self {
        ModuleVector { alg, entries: vec![Scalar::zero(alg); n] }
    }

    /// The `k`-th standard basis vector.
    pub fn unit(alg: AlgebraId, n: usize, k: usize) -> Self {
        let mut v = Self::zeros(alg, n);
        v.entries[k] = Scalar::one(alg);
        v
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> Scalar {
        self.entries[i]
    }

    /// Flattened real coefficients.
    pub fn coeffs(&self) -> Vec<f64> {
        self.entries.iter().flat_map(|e| e.coeffs().iter().copied()).collect()
    }

    /// Left scalar multiple `α·u`.
    pub fn scaled(&self, alpha: &Scalar) -> Self {
        ModuleVector { alg: self.alg, entries: self.entries.iter().map(|e| *alpha * *e).collect() }
    }

    pub fn scaled_real(&self, k: f64) -> Self {
        ModuleVector { alg: self.alg, entries: self.entries.iter().map(|e| e.scale(k)).collect() }
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let entries: Vec<Scalar> = self.entries.iter().map(f).collect();
        let alg = entries[0].algebra();
        ModuleVector { alg, entries }
    }

    /// Euclidean norm of the flattened coefficients.
    pub fn norm(&self) -> f64 {
        sqrt(self.entries.iter().map(|e| e.norm() * e.norm()).sum::<f64>())
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| *a + *b).collect();
        ModuleVector { alg: self.alg, entries }
    }
}

impl Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| *a - *b).collect();
        ModuleVector { alg: self.alg, entries }
    }
}

impl Neg for &ModuleVector {
    type Output = ModuleVector;
    fn neg(self) -> ModuleVector {
        self.scaled_real(-1.0)
    }
}

/// 𝔽ⁿ with the form `⟨u,v⟩ = Σ cᵢ uᵢ vᵢ*`, `cᵢ ∈ {−1, +1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianSpace {
    alg: AlgebraId,
    sig: Vec<f64>,
    tol: f64,
}

impl HermitianSpace {
    pub fn new(alg: AlgebraId, signature: Vec<f64>) -> Result<Self> {
        if signature.is_empty() || signature.iter().any(|&c| c != 1.0 && c != -1.0) {
            return Err(Error::InvalidSignature);
        }
        Ok(HermitianSpace { alg, sig: signature, tol: DEFAULT_TOL })
    }

    /// All-plus signature of rank `n`.
    pub fn standard(alg: AlgebraId, n: usize) -> Self {
        Self::new(alg, vec![1.0; n.max(1)]).expect("valid signature")
    }

    /// Parses a signature string such as `"-++"`.
    pub fn with_signature_str(alg: AlgebraId, sig: &str) -> Result<Self> {
        let signs = sig
            .chars()
            .map(|c| match c {
                '+' => Ok(1.0),
                '-' => Ok(-1.0),
                _ => Err(Error::InvalidSignature),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alg, signs)
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg
    }

    pub fn rank(&self) -> usize {
        self.sig.len()
    }

    pub fn signature(&self) -> &[f64] {
        &self.sig
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn check(&self, u: &ModuleVector) -> Result<()> {
        if u.algebra() != self.alg {
            return Err(Error::AlgebraMismatch { left: self.alg, right: u.algebra() });
        }
        if u.len() != self.rank() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    pub fn vector(&self, entries: Vec<Scalar>) -> Result<ModuleVector> {
        let v = ModuleVector::new(entries)?;
        self.check(&v)?;
        Ok(v)
    }

    pub fn vector_from_coeffs(&self, coeffs: &[f64]) -> Result<ModuleVector> {
        let v = ModuleVector::from_coeffs(self.alg, coeffs)?;
        self.check(&v)?;
        Ok(v)
    }

    pub fn basis_vector(&self, k: usize) -> ModuleVector {
        ModuleVector::unit(self.alg, self.rank(), k)
    }

    pub fn form(&self, u: &ModuleVector, v: &ModuleVector) -> Result<Scalar> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.ip(u, v))
    }

    pub(crate) fn ip(&self, u: &ModuleVector, v: &ModuleVector) -> Scalar {
        let mut acc = Scalar::zero(self.alg);
        for ((a, b), c) in u.entries.iter().zip(&v.entries).zip(&self.sig) {
            acc = acc + (*a * b.conj()).scale(*c);
        }
        acc
    }

    /// Real matrix of `h ↦ ⟨u,h⟩`, of shape `dim 𝔽 × n·dim 𝔽`.
    fn pairing_matrix(&self, u: &ModuleVector) -> DMatrix<f64> {
        let d = self.alg.dim();
        let n = self.rank();
        let mut m = DMatrix::zeros(d, n * d);
        for i in 0..n {
            for k in 0..d {
                let val = (u.entries[i] * Scalar::basis(self.alg, k).conj()).scale(self.sig[i]);
                for r in 0..d {
                    m[(r, i * d + k)] = val.coeffs()[r];
                }
            }
        }
        m
    }

    /// A point is good when `h ↦ ⟨u,h⟩` is onto 𝔽.
    pub fn is_good(&self, u: &ModuleVector) -> bool {
        self.check(u).is_ok() && linalg::real_rank(&self.pairing_matrix(u), self.tol) == self.alg.dim()
    }

    /// Minimum-norm `h` with `⟨u,h⟩ = target`, if `u` is good.
    pub fn solve_pairing(&self, u: &ModuleVector, target: &Scalar) -> Option<ModuleVector> {
        if !self.is_good(u) {
            return None;
        }
        let a = self.pairing_matrix(u);
        let h = linalg::least_norm_solve(&a, &DVector::from_column_slice(target.coeffs()))?;
        ModuleVector::from_coeffs(self.alg, h.as_slice()).ok()
    }

    /// Orthonormal vectors (`⟨bᵢ,bᵢ⟩ = ±1`, pairwise orthogonal) spanning the
    /// same 𝔽-submodule as `vectors`, which must be linearly independent over ℝ.
    ///
    /// Pivots on the largest self-product; when everything left is isotropic
    /// the pair `p, q` with non-trivial pairing is replaced by `p + αq`.
    pub fn orthonormalize(&self, vectors: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
        if vectors.is_empty() {
            return Ok(Vec::new());
        }
        for v in vectors {
            self.check(v)?;
        }
        let cols = self.rank() * self.alg.dim();
        let rows: Vec<f64> = vectors.iter().flat_map(|v| v.coeffs()).collect();
        let stacked = DMatrix::from_row_slice(vectors.len(), cols, &rows);
        if linalg::real_rank(&stacked, self.tol) < vectors.len() {
            return Err(Error::NotIndependent);
        }
        self.orthonormal_from_generators(vectors.to_vec(), vectors.len())
    }

    /// Up to `want` orthonormal vectors built from a generating set.
    pub(crate) fn orthonormal_from_generators(
        &self,
        gens: Vec<ModuleVector>,
        want: usize,
    ) -> Result<Vec<ModuleVector>> {
        let scale = gens.iter().map(ModuleVector::norm).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::DegenerateSpan);
        }
        let drop_below = self.tol * scale;
        let mut work = gens;
        let mut out = Vec::with_capacity(want);
        let score = |v: &ModuleVector| {
            let n = v.norm();
            if n == 0.0 {
                0.0
            } else {
                self.ip(v, v).self_adjoint_magnitude() / (n * n)
            }
        };

        while out.len() < want {
            work.retain(|w| w.norm() > drop_below);
            if work.is_empty() {
                return Err(Error::DegenerateSpan);
            }
            let (idx, best) = work
                .iter()
                .enumerate()
                .map(|(i, w)| (i, score(w)))
                .fold((0, -1.0), |acc, x| if x.1 > acc.1 + 1e-12 { x } else { acc });

            if best > self.tol {
                let v = work.remove(idx);
                let b = v.scaled(&normalizer(&self.ip(&v, &v)));
                let bb_inv = self.ip(&b, &b).inverse_with(self.tol)?;
                for w in work.iter_mut() {
                    let coef = self.ip(w, &b) * bb_inv;
                    *w = &*w - &b.scaled(&coef);
                }
                out.push(b);
                continue;
            }

            // every remaining vector is isotropic: look for p + αq that is not
            let mut best_pair: Option<(usize, ModuleVector, f64)> = None;
            for i in 0..work.len() {
                for j in 0..work.len() {
                    if i == j {
                        continue;
                    }
                    let x = self.ip(&work[j], &work[i]);
                    let mut candidates: Vec<Scalar> = (0..self.alg.dim()).map(|k| Scalar::basis(self.alg, k)).collect();
                    candidates.push(x.conj());
                    for alpha in candidates {
                        let c = &work[i] + &work[j].scaled(&alpha);
                        let s = score(&c);
                        if best_pair.as_ref().map_or(true, |b| s > b.2) {
                            best_pair = Some((i, c, s));
                        }
                    }
                }
            }
            match best_pair {
                Some((i, c, s)) if s > self.tol => work[i] = c,
                _ => return Err(Error::DegenerateSpan),
            }
        }
        Ok(out)
    }

    /// Orthonormal basis of `p^⊥ = {v : ⟨v,p⟩ = 0}`; needs `⟨p,p⟩` invertible.
    pub fn perp_basis(&self, p: &ModuleVector) -> Result<Vec<ModuleVector>> {
        self.check(p)?;
        let pp = self.ip(p, p);
        let pp_inv = pp.inverse_with(self.tol).map_err(|_| Error::IsotropicBasePoint)?;
        let gens = (0..self.rank())
            .map(|k| {
                let e = self.basis_vector(k);
                let coef = self.ip(&e, p) * pp_inv;
                &e - &p.scaled(&coef)
            })
            .collect();
        self.orthonormal_from_generators(gens, self.rank() - 1)
    }

    /// Real Gram matrix `sign · Re⟨vᵢ,vⱼ⟩` (ℂ×ℂ: both real components summed).
    pub fn gram_real(&self, vectors: &[ModuleVector], sign: f64) -> Result<DMatrix<f64>> {
        for v in vectors {
            self.check(v)?;
        }
        let k = vectors.len();
        Ok(DMatrix::from_fn(k, k, |i, j| sign * self.ip(&vectors[i], &vectors[j]).real_sum()))
    }
}

/// Self-adjoint `ν` with `ν² |⟨v,v⟩| = 1` componentwise.
fn normalizer(vv: &Scalar) -> Scalar {
    let alg = vv.algebra();
    match alg {
        AlgebraId::CxC => {
            let c = vv.coeffs();
            Scalar::new(alg, &[1.0 / sqrt(c[0].abs()), 0.0, 1.0 / sqrt(c[2].abs()), 0.0]).expect("dim 4")
        }
        _ => Scalar::real(alg, 1.0 / sqrt(vv.coeffs()[0].abs())),
    }
}
