//! Argument translation on the dual of a Lie algebra.
//!
//! The dual `g*` carries the linear Poisson structure
//! `c1(x)^{ij} = sum_k c^{ij}_k x_k` built from the structure constants,
//! and for a fixed covector `a` the constant structure `c2 = c1(a)`.
//! The two are always compatible, so every point yields a pencil of skew
//! forms. Translating a Casimir `g` through `a` expands it as
//!
//! ```text
//! g(x + t a) = g^0(x) + t g^1(x) + ... + t^m g^m(x) + t^{m+1} g(a)
//! ```
//!
//! and differentiating the Casimir identity `c1(y) grad g(y) = 0` along
//! `y = x + t a` gives, identically in `x`,
//!
//! ```text
//! c1(x) grad g^s + c1(a) grad g^{s-1} = 0,
//! ```
//!
//! so the differentials of one translated family form a polynomial
//! kernel chain of the pencil. For `sl(n)` with the trace-power Casimirs
//! `g_j = tr X^{j+1}` the chain degrees are the exponents `1..n-1`; at a
//! regular point the pencil is complete with exactly those minimal
//! indices, the translated family is independent and in involution, and
//! the induced web has type `(1, ..., n-1)`. All of that is what
//! `verify_theorem` certifies, exactly, at a given point.

use serde::Serialize;

use crate::forms::PolyBivector;
use crate::matrix::Mat;
use crate::pencil::{KernelChain, PencilError, SkewPencil};
use crate::poly::{MultiPoly, Vars};
use crate::scalar::Scalar;
use crate::web::build_infinitesimal_web;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("structure constant index out of range")]
    BadIndex,
    #[error("structure constant entries must have i < j")]
    NotUpperTriple,
    #[error("duplicate structure constant entry")]
    DuplicateEntry,
    #[error("expected {expected} labels, got {got}")]
    BadLabels { expected: usize, got: usize },
    #[error("Jacobi identity fails at basis triple ({i}, {j}, {k}), component {l}")]
    JacobiFails { i: usize, j: usize, k: usize, l: usize },
    #[error("candidate Casimir {0} is not invariant")]
    CasimirNotInvariant(usize),
    #[error("candidate Casimir {0} is constant or zero")]
    TrivialCasimir(usize),
    #[error("Casimir uses a different coordinate set")]
    VarsMismatch,
    #[error("vector has wrong dimension")]
    WrongDimension,
    #[error("the algebra is abelian, no translation pencil exists")]
    DependentPair,
    #[error("the shift evaluates the bracket to zero")]
    ZeroShift,
    #[error("the pencil is incomplete at this point")]
    IncompletePoint,
    #[error("translated family of Casimir {0} violates its chain relations")]
    GeneratorCertification(usize),
    #[error("no witness found in {0} attempts")]
    WitnessSearchExhausted(usize),
}

/// Deterministic splittable generator for witness sampling; the library
/// keeps its randomness reproducible and dependency-free.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn vector(&mut self, dim: usize, bound: i64) -> Vec<Scalar> {
        (0..dim).map(|_| Scalar::int(self.int_in(-bound, bound))).collect()
    }
}

/// Structure constants `[e_i, e_j] = sum_k c^{ij}_k e_k` with named
/// basis elements; the names double as coordinates on the dual.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    labels: Vec<String>,
    vars: Vars,
    /// Dense `c[i][j][k]`, antisymmetric in `(i, j)`.
    c: Vec<Scalar>,
}

impl StructureConstants {
    /// Builds from upper entries `(i, j, k, c^{ij}_k)` with `i < j`,
    /// 0-based. Empty `labels` defaults to `x1..xdim`.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, LieError> {
        let labels = if labels.is_empty() {
            (1..=dim).map(|i| format!("x{i}")).collect()
        } else {
            labels
        };
        if labels.len() != dim {
            return Err(LieError::BadLabels {
                expected: dim,
                got: labels.len(),
            });
        }
        let vars: Vars = labels.clone().into();
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        let at = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for &(i, j, k, ref v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(LieError::BadIndex);
            }
            if i >= j {
                return Err(LieError::NotUpperTriple);
            }
            if !c[at(i, j, k)].is_zero() {
                return Err(LieError::DuplicateEntry);
            }
            c[at(i, j, k)] = v.clone();
            c[at(j, i, k)] = -v;
        }
        Ok(StructureConstants {
            dim,
            labels,
            vars,
            c,
        })
    }

    fn from_basis_matrices(mats: &[Mat], labels: Vec<String>) -> Self {
        let dim = mats.len();
        let coords = |m: &Mat| coords_sl(m);
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let br = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
                for (k, v) in coords(&br).into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        StructureConstants::new(dim, labels, &entries).expect("bracket table is well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates on the dual, named after the basis.
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Verifies the Jacobi identity, naming the first failing quadruple.
    pub fn jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut acc = Scalar::zero();
                        for m in 0..n {
                            acc += &(self.c(i, j, m) * self.c(m, k, l));
                            acc += &(self.c(j, k, m) * self.c(m, i, l));
                            acc += &(self.c(k, i, m) * self.c(m, j, l));
                        }
                        if !acc.is_zero() {
                            return Err(LieError::JacobiFails { i, j, k, l });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The linear bivector `c1(x)^{ij} = sum_k c^{ij}_k x_k`.
    pub fn lie_poisson(&self) -> PolyBivector {
        let n = self.dim;
        let mut parts = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut p = MultiPoly::zero(self.vars.clone());
                for k in 0..n {
                    let ck = self.c(i, j, k);
                    if !ck.is_zero() {
                        p = p.add(&MultiPoly::var(self.vars.clone(), k).scale(ck));
                    }
                }
                if !p.is_zero() {
                    parts.push((i, j, p));
                }
            }
        }
        PolyBivector::new(self.vars.clone(), &parts).expect("indices in range")
    }

    /// The constant skew matrix `c(a)`.
    pub fn eval_at(&self, a: &[Scalar]) -> Result<Mat, LieError> {
        if a.len() != self.dim {
            return Err(LieError::WrongDimension);
        }
        let mut m = Mat::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let mut acc = Scalar::zero();
                for (k, ak) in a.iter().enumerate() {
                    acc += &(self.c(i, j, k) * ak);
                }
                if !acc.is_zero() {
                    m.set(j, i, -&acc);
                    m.set(i, j, acc);
                }
            }
        }
        Ok(m)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }
}

/// Coordinates of a traceless `n x n` matrix in the `sl(n)` basis
/// `h_1..h_{n-1}, e_{ij}` used here: `h_a = E_aa - E_{a+1,a+1}`,
/// off-diagonal entries map to themselves, and the `h`-coordinates are
/// the partial sums of the diagonal.
fn coords_sl(m: &Mat) -> Vec<Scalar> {
    let n = m.rows();
    let mut out = Vec::with_capacity(n * n - 1);
    let mut acc = Scalar::zero();
    for a in 0..n - 1 {
        acc += m.get(a, a);
        out.push(acc.clone());
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(m.get(i, j).clone());
            }
        }
    }
    out
}

fn sl_basis(n: usize) -> (Vec<Mat>, Vec<String>) {
    assert!(n >= 2, "sl(n) needs n >= 2");
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for a in 0..n - 1 {
        let mut h = Mat::zero(n, n);
        h.set(a, a, Scalar::one());
        h.set(a + 1, a + 1, -Scalar::one());
        mats.push(h);
        labels.push(format!("h{}", a + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut e = Mat::zero(n, n);
                e.set(i, j, Scalar::one());
                mats.push(e);
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
    }
    (mats, labels)
}

/// Structure constants of `sl(n)` in the basis above.
pub fn sl_structure(n: usize) -> StructureConstants {
    let (mats, labels) = sl_basis(n);
    StructureConstants::from_basis_matrices(&mats, labels)
}

/// The trace-power Casimirs `g_j = tr X(x)^{j+1}`, `j = 1..n-1`, where
/// `X(x)` is the matrix whose trace pairings recover the coordinates:
/// `x_i = tr(X B_i)` for the basis `B_i`.
pub fn sl_casimirs(n: usize) -> Vec<MultiPoly> {
    let (mats, labels) = sl_basis(n);
    let dim = mats.len();
    let vars: Vars = labels.into();
    // Gram matrix of the trace form and its inverse columns give X(x)
    // as a matrix of linear polynomials.
    let gram = Mat::from_fn(dim, dim, |i, j| {
        trace_of(&(&mats[i] * &mats[j]))
    });
    // solve G xi = x symbolically: xi = G^{-1} x, one solve per unit x
    let mut xi = vec![vec![Scalar::zero(); dim]; dim];
    for col in 0..dim {
        let mut rhs = vec![Scalar::zero(); dim];
        rhs[col] = Scalar::one();
        let sol = gram.solve(&rhs).expect("trace form of sl(n) is invertible");
        for (r, v) in sol.into_iter().enumerate() {
            xi[r][col] = v;
        }
    }
    let zero = MultiPoly::zero(vars.clone());
    let mut x_mat = vec![vec![zero.clone(); n]; n];
    for (b, mat) in mats.iter().enumerate() {
        let mut coeff = MultiPoly::zero(vars.clone());
        for (col, xv) in xi[b].iter().enumerate() {
            if !xv.is_zero() {
                coeff = coeff.add(&MultiPoly::var(vars.clone(), col).scale(xv));
            }
        }
        if coeff.is_zero() {
            continue;
        }
        for r in 0..n {
            for c in 0..n {
                let entry = mat.get(r, c);
                if !entry.is_zero() {
                    x_mat[r][c] = x_mat[r][c].add(&coeff.scale(entry));
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n - 1);
    let mut power = x_mat.clone();
    for _ in 1..n {
        power = poly_mat_mul(&power, &x_mat, &vars);
        let mut tr = MultiPoly::zero(vars.clone());
        for (r, row) in power.iter().enumerate() {
            tr = tr.add(&row[r]);
        }
        out.push(tr);
    }
    out
}

fn trace_of(m: &Mat) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..m.rows() {
        acc += m.get(i, i);
    }
    acc
}

fn poly_mat_mul(
    a: &[Vec<MultiPoly>],
    b: &[Vec<MultiPoly>],
    vars: &Vars,
) -> Vec<Vec<MultiPoly>> {
    let n = a.len();
    let mut out = vec![vec![MultiPoly::zero(vars.clone()); n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = MultiPoly::zero(vars.clone());
            for (k, ark) in a[r].iter().enumerate() {
                if !ark.is_zero() && !b[k][c].is_zero() {
                    acc = acc.add(&ark.mul(&b[k][c]));
                }
            }
            out[r][c] = acc;
        }
    }
    out
}

/// A certified Casimir: `c1(x) grad g = 0`, verified symbolically when
/// the degree allows and on 20 sampled points always.
#[derive(Debug, Clone, PartialEq)]
pub struct Casimir {
    pub poly: MultiPoly,
    /// `m_j = deg g_j - 1`, the degree of its kernel chain.
    pub exponent: usize,
    /// False when the degree gate skipped the symbolic identity and
    /// only the sampled check ran.
    pub symbolic_certified: bool,
}

const SYMBOLIC_DEGREE_GATE: u32 = 8;

/// Structure constants bundled with a certified Casimir family.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub sc: StructureConstants,
    pub casimirs: Vec<Casimir>,
}

impl LieAlgebra {
    /// Validates the Jacobi identity and certifies every Casimir against
    /// the linear structure before accepting the family.
    pub fn new(sc: StructureConstants, casimirs: Vec<MultiPoly>) -> Result<Self, LieError> {
        LieAlgebra::with_degree_gate(sc, casimirs, SYMBOLIC_DEGREE_GATE)
    }

    /// Like `new`, with an explicit bound on the Casimir degree up to
    /// which the invariance identity is expanded symbolically; above it
    /// only the sampled check runs.
    pub fn with_degree_gate(
        sc: StructureConstants,
        casimirs: Vec<MultiPoly>,
        gate: u32,
    ) -> Result<Self, LieError> {
        sc.jacobi()?;
        let c1 = sc.lie_poisson();
        let n = sc.dim();
        let mut rng = SplitMix64::new(0x5EED_CA51_AB1E_0001);
        let sample_points: Vec<Vec<Scalar>> = (0..20).map(|_| rng.vector(n, 7)).collect();
        let mut certified = Vec::with_capacity(casimirs.len());
        for (idx, g) in casimirs.into_iter().enumerate() {
            if g.vars() != sc.vars() {
                return Err(LieError::VarsMismatch);
            }
            let deg = g.degree().ok_or(LieError::TrivialCasimir(idx))?;
            if deg == 0 {
                return Err(LieError::TrivialCasimir(idx));
            }
            let grad = g.gradient();
            let symbolic = deg <= gate;
            if symbolic {
                for a in 0..n {
                    let mut acc = MultiPoly::zero(sc.vars().clone());
                    for (b, gb) in grad.iter().enumerate() {
                        let pab = c1.component(a, b);
                        if !pab.is_zero() && !gb.is_zero() {
                            acc = acc.add(&pab.mul(gb));
                        }
                    }
                    if !acc.is_zero() {
                        return Err(LieError::CasimirNotInvariant(idx));
                    }
                }
            }
            for pt in &sample_points {
                let m = c1.eval(pt).expect("point has algebra dimension");
                let gv: Vec<Scalar> = grad.iter().map(|p| p.eval(pt)).collect();
                if m.mat_vec(&gv).iter().any(|s| !s.is_zero()) {
                    return Err(LieError::CasimirNotInvariant(idx));
                }
            }
            certified.push(Casimir {
                poly: g,
                exponent: (deg - 1) as usize,
                symbolic_certified: symbolic,
            });
        }
        Ok(LieAlgebra { sc, casimirs: certified })
    }

    /// `sl(n)` with its trace-power Casimirs.
    pub fn sl(n: usize) -> LieAlgebra {
        LieAlgebra::new(sl_structure(n), sl_casimirs(n))
            .expect("trace powers are Casimirs of sl(n)")
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    /// Sorted chain degrees `m_1 <= ... <= m_r` of the family.
    pub fn exponents(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.casimirs.iter().map(|c| c.exponent).collect();
        e.sort_unstable();
        e
    }

    /// Builds the translation pencil data for a fixed shift covector.
    pub fn translation_pair(&self, a: &[Scalar]) -> Result<TranslationPair, LieError> {
        if a.len() != self.dim() {
            return Err(LieError::WrongDimension);
        }
        if self.sc.is_abelian() {
            return Err(LieError::DependentPair);
        }
        let frozen = self.sc.eval_at(a)?;
        if frozen.is_zero() {
            return Err(LieError::ZeroShift);
        }
        // full Taylor expansion of each Casimir along a; the top entry
        // is the constant g(a)
        let table: Vec<Vec<MultiPoly>> = self
            .casimirs
            .iter()
            .map(|c| taylor_in_direction(&c.poly, a))
            .collect();
        Ok(TranslationPair {
            algebra: self.clone(),
            shift: a.to_vec(),
            linear: self.sc.lie_poisson(),
            frozen,
            table,
        })
    }

    /// Seeded search for `(a, x)` certifying the theorem. Shift and
    /// point entries are sampled from a small integer box; the search
    /// reports the witness together with its full verification.
    pub fn witness_search(&self, seed: u64, attempts: usize) -> Result<Witness, LieError> {
        let mut rng = SplitMix64::new(seed);
        let n = self.dim();
        let mut tried = 0usize;
        while tried < attempts {
            let a = rng.vector(n, 5);
            let pair = match self.translation_pair(&a) {
                Ok(p) => p,
                Err(LieError::ZeroShift) => {
                    tried += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            for _ in 0..4 {
                if tried >= attempts {
                    break;
                }
                tried += 1;
                let x = rng.vector(n, 9);
                match pair.verify_theorem(&x) {
                    Ok(report) if report.ok => {
                        return Ok(Witness {
                            shift: a,
                            point: x,
                            attempts_used: tried,
                            report,
                        });
                    }
                    Ok(_) | Err(LieError::IncompletePoint) => continue,
                    Err(e) => return Err(e),
                }
            }
        }
        Err(LieError::WitnessSearchExhausted(attempts))
    }
}

/// Taylor coefficients of `g(x + t a)` in `t`, each over the original
/// variables; the last entry is the constant `g(a)`.
fn taylor_in_direction(g: &MultiPoly, a: &[Scalar]) -> Vec<MultiPoly> {
    let vs = g.vars().clone();
    let n = vs.len();
    let mut tname = "t".to_string();
    while vs.iter().any(|v| *v == tname) {
        tname.push('t');
    }
    let mut ext_names: Vec<String> = vs.to_vec();
    ext_names.push(tname);
    let ext: Vars = ext_names.into();
    let args: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::var(ext.clone(), i)
                .add(&MultiPoly::var(ext.clone(), n).scale(&a[i]))
        })
        .collect();
    let expanded = g.substitute(&args);
    let deg = g.degree().unwrap_or(0) as usize;
    let mut out = vec![MultiPoly::zero(vs.clone()); deg + 1];
    for (mono, coeff) in expanded.terms() {
        let e = mono.exps();
        let t_pow = e[n] as usize;
        let stripped = MultiPoly::monomial(vs.clone(), e[..n].to_vec(), coeff.clone());
        out[t_pow] = out[t_pow].add(&stripped);
    }
    out
}

/// The pencil data of one shift: the linear structure, the frozen
/// matrix `c(a)`, and the translated Casimir families.
#[derive(Debug, Clone)]
pub struct TranslationPair {
    algebra: LieAlgebra,
    pub shift: Vec<Scalar>,
    pub linear: PolyBivector,
    /// `c(a)` as a constant skew matrix.
    pub frozen: Mat,
    /// `table[j][i] = g_j^i`; row length `m_j + 2`, last entry constant.
    pub table: Vec<Vec<MultiPoly>>,
}

impl TranslationPair {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Translated functions that enter all checks: `g_j^i`, `i <= m_j`.
    pub fn family(&self) -> impl Iterator<Item = (usize, usize, &MultiPoly)> {
        self.table
            .iter()
            .enumerate()
            .flat_map(|(j, row)| {
                row[..row.len() - 1]
                    .iter()
                    .enumerate()
                    .map(move |(i, g)| (j, i, g))
            })
    }

    /// The constant top coefficient `g_j(a)`.
    pub fn casimir_at_shift(&self, j: usize) -> Scalar {
        self.table[j].last().expect("table rows are nonempty").constant_term()
    }

    /// The skew pencil `(c1(x), c(a))` at a point.
    pub fn pencil_at(&self, x: &[Scalar]) -> Result<SkewPencil, LieError> {
        if x.len() != self.algebra.dim() {
            return Err(LieError::WrongDimension);
        }
        let c1 = self.linear.eval(x).expect("dimension checked");
        match SkewPencil::poisson_pair(c1, self.frozen.clone()) {
            Ok(p) => Ok(p),
            Err(PencilError::DependentForms) => Err(LieError::IncompletePoint),
            Err(_) => unreachable!("both matrices are skew of equal dimension"),
        }
    }

    fn differentials_at(&self, x: &[Scalar]) -> Result<Vec<Vec<Vec<Scalar>>>, LieError> {
        if x.len() != self.algebra.dim() {
            return Err(LieError::WrongDimension);
        }
        Ok(self
            .table
            .iter()
            .map(|row| {
                row[..row.len() - 1]
                    .iter()
                    .map(|g| g.gradient().iter().map(|p| p.eval(x)).collect())
                    .collect()
            })
            .collect())
    }

    /// Ranks the differentials of the translated family at `x` against
    /// the full count `sum (m_j + 1)`.
    pub fn independence_check(&self, x: &[Scalar]) -> Result<bool, LieError> {
        let diffs = self.differentials_at(x)?;
        let rows: Vec<Vec<Scalar>> = diffs.into_iter().flatten().collect();
        let expected = rows.len();
        Ok(Mat::from_rows(rows).rank() == expected)
    }

    /// Pairwise involutivity `d1^T c_lambda(x) d2 = 0` of the family at
    /// `x`, for the sampled parameters (1,0), (0,1), (1,1), (1,2), (2,1).
    pub fn involutivity_check(&self, x: &[Scalar]) -> Result<bool, LieError> {
        let diffs = self.differentials_at(x)?;
        let rows: Vec<Vec<Scalar>> = diffs.into_iter().flatten().collect();
        let c1 = self.linear.eval(x).expect("dimension checked");
        let two = Scalar::int(2);
        let mats = [
            c1.clone(),
            self.frozen.clone(),
            &c1 + &self.frozen,
            &c1 + &self.frozen.scale(&two),
            &c1.scale(&two) + &self.frozen,
        ];
        for m in &mats {
            let images: Vec<Vec<Scalar>> = rows.iter().map(|d| m.mat_vec(d)).collect();
            for d1 in &rows {
                for im in &images {
                    let dot: Scalar = d1
                        .iter()
                        .zip(im)
                        .map(|(u, v)| u * v)
                        .fold(Scalar::zero(), |acc, t| acc + t);
                    if !dot.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Differential chains of the translated families at `x`, certified
    /// exactly against the chain relations
    /// `c1(x) d_0 = 0`, `c1(x) d_s + c(a) d_{s-1} = 0`, `c(a) d_m = 0`,
    /// which make each `sum lambda_1^{m-i} lambda_2^i d_i` a kernel
    /// covector of `c_lambda(x)` for every parameter.
    pub fn web_generators(&self, x: &[Scalar]) -> Result<Vec<KernelChain>, LieError> {
        let diffs = self.differentials_at(x)?;
        let c1 = self.linear.eval(x).expect("dimension checked");
        let mut out = Vec::with_capacity(diffs.len());
        for (j, chain) in diffs.into_iter().enumerate() {
            let m = chain.len() - 1;
            let zero = vec![Scalar::zero(); self.algebra.dim()];
            for s in 0..=m + 1 {
                let head = if s <= m { c1.mat_vec(&chain[s]) } else { zero.clone() };
                let tail = if s > 0 {
                    self.frozen.mat_vec(&chain[s - 1])
                } else {
                    zero.clone()
                };
                let ok = head
                    .iter()
                    .zip(&tail)
                    .all(|(u, v)| (u + v).is_zero());
                if !ok {
                    return Err(LieError::GeneratorCertification(j));
                }
            }
            out.push(KernelChain {
                degree: m,
                coeffs: chain,
            });
        }
        Ok(out)
    }

    /// The full certificate at one point: completeness with indices
    /// equal to the exponents, the dimension identity, independence,
    /// involutivity, generator chains, and the induced web.
    pub fn verify_theorem(&self, x: &[Scalar]) -> Result<TheoremReport, LieError> {
        let pencil = self.pencil_at(x)?;
        let an = pencil.analyze();
        if !an.complete {
            return Err(LieError::IncompletePoint);
        }
        let exponents = self.algebra.exponents();
        let dim = self.algebra.dim();
        let indices_match_exponents = an.minimal_indices == exponents;
        let dimension_identity =
            exponents.iter().map(|m| 2 * m + 1).sum::<usize>() == dim;
        let independent = self.independence_check(x)?;
        let involutive = self.involutivity_check(x)?;
        let generators_certified = self.web_generators(x).is_ok();
        let (web_type, web_certified) = match build_infinitesimal_web(&pencil) {
            Ok(web) => {
                let cert = web.certified();
                (Some(web.web_type), cert)
            }
            Err(_) => (None, false),
        };
        let ok = indices_match_exponents
            && dimension_identity
            && independent
            && involutive
            && generators_certified
            && web_certified;
        Ok(TheoremReport {
            dim,
            exponents,
            minimal_indices: an.minimal_indices,
            indices_match_exponents,
            dimension_identity,
            independent,
            involutive,
            generators_certified,
            web_type,
            web_certified,
            ok,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub dim: usize,
    pub exponents: Vec<usize>,
    pub minimal_indices: Vec<usize>,
    pub indices_match_exponents: bool,
    pub dimension_identity: bool,
    pub independent: bool,
    pub involutive: bool,
    pub generators_certified: bool,
    pub web_type: Option<Vec<usize>>,
    pub web_certified: bool,
    pub ok: bool,
}

/// A successful witness of the theorem found by seeded search.
#[derive(Debug, Clone)]
pub struct Witness {
    pub shift: Vec<Scalar>,
    pub point: Vec<Scalar>,
    pub attempts_used: usize,
    pub report: TheoremReport,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::pair_check;
    use crate::scalar::q;

    fn p(src: &str, vs: &Vars) -> MultiPoly {
        MultiPoly::parse(src, vs.clone()).unwrap()
    }

    #[test]
    fn sl2_structure_matches_hand_table() {
        let sc = sl_structure(2);
        assert_eq!(sc.dim(), 3);
        assert_eq!(sc.labels(), &["h1", "e12", "e21"]);
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h
        assert_eq!(sc.c(0, 1, 1), &q(2));
        assert_eq!(sc.c(0, 2, 2), &q(-2));
        assert_eq!(sc.c(1, 2, 0), &q(1));
        assert_eq!(sc.c(1, 0, 1), &q(-2));
        assert!(sc.jacobi().is_ok());
        assert!(sl_structure(3).jacobi().is_ok());
    }

    #[test]
    fn jacobi_failure_names_a_witness() {
        // [x, y] = z, [x, z] = x is not a Lie bracket
        let sc = StructureConstants::new(
            3,
            vec![],
            &[(0, 1, 2, q(1)), (0, 2, 0, q(1))],
        )
        .unwrap();
        assert_eq!(
            sc.jacobi().unwrap_err(),
            LieError::JacobiFails { i: 0, j: 1, k: 2, l: 2 }
        );
        // the linear bivector fails its Jacobi check too
        assert!(!sc.lie_poisson().jacobi_check());
    }

    #[test]
    fn sl2_casimir_is_the_trace_quadratic() {
        let cs = sl_casimirs(2);
        assert_eq!(cs.len(), 1);
        let vs = cs[0].vars().clone();
        assert_eq!(cs[0], p("1/2*h1^2 + 2*e12*e21", &vs));
        let alg = LieAlgebra::sl(2);
        assert_eq!(alg.exponents(), vec![1]);
        assert!(alg.casimirs[0].symbolic_certified);
    }

    #[test]
    fn sl3_casimir_degrees_and_certification() {
        let alg = LieAlgebra::sl(3);
        assert_eq!(alg.dim(), 8);
        let degs: Vec<u32> = alg.casimirs.iter().map(|c| c.poly.degree().unwrap()).collect();
        assert_eq!(degs, vec![2, 3]);
        assert_eq!(alg.exponents(), vec![1, 2]);
    }

    #[test]
    fn non_casimir_is_rejected() {
        let sc = sl_structure(2);
        let vs = sc.vars().clone();
        let bogus = vec![p("e12", &vs)];
        assert_eq!(
            LieAlgebra::new(sc, bogus).unwrap_err(),
            LieError::CasimirNotInvariant(0)
        );
    }

    #[test]
    fn translation_pair_edge_cases() {
        let abelian = StructureConstants::new(2, vec![], &[]).unwrap();
        let vs = abelian.vars().clone();
        let alg = LieAlgebra::new(abelian, vec![p("x1", &vs)]).unwrap();
        assert_eq!(
            alg.translation_pair(&[q(1), q(0)]).unwrap_err(),
            LieError::DependentPair
        );
        let sl2 = LieAlgebra::sl(2);
        assert_eq!(
            sl2.translation_pair(&[q(0), q(0), q(0)]).unwrap_err(),
            LieError::ZeroShift
        );
        assert_eq!(
            sl2.translation_pair(&[q(1)]).unwrap_err(),
            LieError::WrongDimension
        );
    }

    #[test]
    fn translated_family_expansion_sl2() {
        let alg = LieAlgebra::sl(2);
        let a = [q(0), q(1), q(1)];
        let pair = alg.translation_pair(&a).unwrap();
        let vs = alg.sc.vars().clone();
        // g(x + t a) = g + t (2 e12 + 2 e21) + 2 t^2
        assert_eq!(pair.table[0].len(), 3);
        assert_eq!(pair.table[0][0], p("1/2*h1^2 + 2*e12*e21", &vs));
        assert_eq!(pair.table[0][1], p("2*e12 + 2*e21", &vs));
        assert_eq!(pair.casimir_at_shift(0), q(2));
        assert_eq!(pair.family().count(), 2);
    }

    #[test]
    fn lie_poisson_pair_is_compatible() {
        let alg = LieAlgebra::sl(2);
        let a = [q(1), q(2), q(-1)];
        let c1 = alg.sc.lie_poisson();
        // the frozen structure as a constant-coefficient bivector
        let frozen = alg.sc.eval_at(&a).unwrap();
        let vs = alg.sc.vars().clone();
        let mut parts = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let v = frozen.get(i, j);
                if !v.is_zero() {
                    parts.push((i, j, MultiPoly::constant(vs.clone(), v.clone())));
                }
            }
        }
        let c2 = PolyBivector::new(vs, &parts).unwrap();
        let report = pair_check(&c1, &c2).unwrap();
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn sl2_theorem_holds_at_a_regular_point() {
        let alg = LieAlgebra::sl(2);
        let a = [q(0), q(1), q(1)];
        let pair = alg.translation_pair(&a).unwrap();
        let x = [q(1), q(1), q(2)];
        assert!(pair.independence_check(&x).unwrap());
        assert!(pair.involutivity_check(&x).unwrap());
        let chains = pair.web_generators(&x).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].degree, 1);
        let report = pair.verify_theorem(&x).unwrap();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.minimal_indices, vec![1]);
        assert_eq!(report.web_type, Some(vec![1]));
    }

    #[test]
    fn sl2_collinear_point_is_incomplete() {
        let alg = LieAlgebra::sl(2);
        let a = [q(0), q(1), q(1)];
        let pair = alg.translation_pair(&a).unwrap();
        let x = [q(0), q(2), q(2)];
        assert_eq!(pair.pencil_at(&x).unwrap_err(), LieError::IncompletePoint);
        assert!(!pair.independence_check(&x).unwrap());
    }

    #[test]
    fn witness_search_is_deterministic_and_succeeds() {
        let alg = LieAlgebra::sl(2);
        let w1 = alg.witness_search(7, 64).unwrap();
        let w2 = alg.witness_search(7, 64).unwrap();
        assert!(w1.report.ok);
        assert_eq!(w1.shift, w2.shift);
        assert_eq!(w1.point, w2.point);
    }

    #[test]
    fn sl3_witness_has_exponent_indices() {
        let alg = LieAlgebra::sl(3);
        let w = alg.witness_search(11, 64).unwrap();
        assert!(w.report.ok, "{:?}", w.report);
        assert_eq!(w.report.minimal_indices, vec![1, 2]);
        assert_eq!(w.report.web_type, Some(vec![1, 2]));
        assert_eq!(w.report.dim, 8);
    }
}
