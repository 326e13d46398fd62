//! Polynomial multivectors and differential forms.
//!
//! Both live in the exterior algebra over the coordinate covectors (or
//! vectors) with polynomial coefficients, so they share one container:
//! an `Alternating` table keyed by strictly increasing index tuples.
//! Bivector fields get the Schouten bracket and the pointwise matrix;
//! forms get the wedge product, the exterior derivative, and the
//! Frobenius integrability test.

use std::collections::BTreeMap;

use crate::matrix::Mat;
use crate::poly::{MultiPoly, Vars};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("operands use different variable sets")]
    VarsMismatch,
    #[error("operands have different grades")]
    GradeMismatch,
    #[error("index {0} out of range for {1} variables")]
    IndexOutOfRange(usize, usize),
    #[error("repeated index in alternating component")]
    RepeatedIndex,
    #[error("expected a form of grade {expected}, got {got}")]
    WrongGrade { expected: usize, got: usize },
    #[error("point has wrong dimension")]
    PointDimMismatch,
    #[error("generators are linearly dependent")]
    DependentGenerators,
}

/// Sorts `idx`, returning the permutation parity; `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// Merges two disjoint increasing tuples, counting the interleave parity;
/// `None` if they share an index.
fn merge_with_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut odd = false;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, odd))
}

/// A homogeneous alternating tensor with polynomial coefficients,
/// stored as `component -> coefficient` over strictly increasing index
/// tuples. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Alternating {
    vars: Vars,
    grade: usize,
    comps: BTreeMap<Vec<usize>, MultiPoly>,
}

impl Alternating {
    pub fn zero(vars: Vars, grade: usize) -> Self {
        Alternating {
            vars,
            grade,
            comps: BTreeMap::new(),
        }
    }

    /// Builds from `(indices, coefficient)` pairs; indices may come in
    /// any order and are normalized with the permutation sign, repeated
    /// entries in one tuple are rejected.
    pub fn from_components(
        vars: Vars,
        grade: usize,
        parts: &[(Vec<usize>, MultiPoly)],
    ) -> Result<Self, FormsError> {
        let n = vars.len();
        let mut out = Alternating::zero(vars.clone(), grade);
        for (idx, coeff) in parts {
            if idx.len() != grade {
                return Err(FormsError::GradeMismatch);
            }
            if coeff.vars() != &vars {
                return Err(FormsError::VarsMismatch);
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
                return Err(FormsError::IndexOutOfRange(bad, n));
            }
            let mut sorted = idx.clone();
            let odd = sort_with_sign(&mut sorted).ok_or(FormsError::RepeatedIndex)?;
            let signed = if odd { coeff.neg() } else { coeff.clone() };
            out.add_to(sorted, signed);
        }
        Ok(out)
    }

    fn add_to(&mut self, key: Vec<usize>, coeff: MultiPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.comps.get_mut(&key) {
            Some(c) => {
                *c = c.add(&coeff);
                if c.is_zero() {
                    self.comps.remove(&key);
                }
            }
            None => {
                self.comps.insert(key, coeff);
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Stored components, keys strictly increasing.
    pub fn components(&self) -> impl Iterator<Item = (&[usize], &MultiPoly)> {
        self.comps.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient at an arbitrary index tuple, permutation sign applied.
    pub fn get(&self, idx: &[usize]) -> MultiPoly {
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            None => MultiPoly::zero(self.vars.clone()),
            Some(odd) => match self.comps.get(&sorted) {
                None => MultiPoly::zero(self.vars.clone()),
                Some(c) => {
                    if odd {
                        c.neg()
                    } else {
                        c.clone()
                    }
                }
            },
        }
    }

    pub fn add(&self, other: &Alternating) -> Result<Alternating, FormsError> {
        if self.vars != other.vars {
            return Err(FormsError::VarsMismatch);
        }
        if self.grade != other.grade {
            return Err(FormsError::GradeMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_to(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Alternating {
        let mut out = self.clone();
        for v in out.comps.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Alternating {
        if s.is_zero() {
            return Alternating::zero(self.vars.clone(), self.grade);
        }
        let mut out = self.clone();
        for v in out.comps.values_mut() {
            *v = v.scale(s);
        }
        out
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> Alternating {
        let mut out = Alternating::zero(self.vars.clone(), self.grade);
        for (k, v) in &self.comps {
            out.add_to(k.clone(), v.mul(p));
        }
        out
    }

    pub fn wedge(&self, other: &Alternating) -> Result<Alternating, FormsError> {
        if self.vars != other.vars {
            return Err(FormsError::VarsMismatch);
        }
        let mut out = Alternating::zero(self.vars.clone(), self.grade + other.grade);
        for (ka, va) in &self.comps {
            for (kb, vb) in &other.comps {
                if let Some((key, odd)) = merge_with_sign(ka, kb) {
                    let prod = va.mul(vb);
                    out.add_to(key, if odd { prod.neg() } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `point`.
    pub fn eval_coeffs(&self, point: &[Scalar]) -> Result<BTreeMap<Vec<usize>, Scalar>, FormsError> {
        if point.len() != self.n_vars() {
            return Err(FormsError::PointDimMismatch);
        }
        Ok(self
            .comps
            .iter()
            .map(|(k, v)| (k.clone(), v.eval(point)))
            .collect())
    }
}

/// A bivector field `sum_{i<j} P^{ij} d/dx_i ^ d/dx_j` with polynomial
/// components.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyBivector {
    table: Alternating,
}

impl PolyBivector {
    pub fn zero(vars: Vars) -> Self {
        PolyBivector {
            table: Alternating::zero(vars, 2),
        }
    }

    /// Builds from `(i, j, P^{ij})` triples, `i != j` in any order.
    pub fn new(vars: Vars, parts: &[(usize, usize, MultiPoly)]) -> Result<Self, FormsError> {
        let comps: Vec<(Vec<usize>, MultiPoly)> = parts
            .iter()
            .map(|(i, j, p)| (vec![*i, *j], p.clone()))
            .collect();
        Ok(PolyBivector {
            table: Alternating::from_components(vars, 2, &comps)?,
        })
    }

    pub fn vars(&self) -> &Vars {
        self.table.vars()
    }

    pub fn n_vars(&self) -> usize {
        self.table.n_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn table(&self) -> &Alternating {
        &self.table
    }

    /// `P^{ij}` for arbitrary `i, j`, antisymmetry applied.
    pub fn component(&self, i: usize, j: usize) -> MultiPoly {
        self.table.get(&[i, j])
    }

    pub fn add(&self, other: &PolyBivector) -> Result<PolyBivector, FormsError> {
        Ok(PolyBivector {
            table: self.table.add(&other.table)?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> PolyBivector {
        PolyBivector {
            table: self.table.scale(s),
        }
    }

    /// The skew matrix `[P^{ij}(point)]`.
    pub fn eval(&self, point: &[Scalar]) -> Result<Mat, FormsError> {
        let n = self.n_vars();
        if point.len() != n {
            return Err(FormsError::PointDimMismatch);
        }
        let mut m = Mat::zero(n, n);
        for (k, v) in self.table.components() {
            let val = v.eval(point);
            if !val.is_zero() {
                m.set(k[0], k[1], val.clone());
                m.set(k[1], k[0], -val);
            }
        }
        Ok(m)
    }

    /// Schouten bracket with another bivector field: the trivector with
    ///
    /// ```text
    /// [P,Q]^{ijk} = sum_l  P^{il} d_l Q^{jk} + Q^{il} d_l P^{jk}
    ///             + cyclic in (i, j, k)
    /// ```
    ///
    /// `[P,P]` is twice the Jacobiator of `P`, so `[P,P] = 0` is exactly
    /// the Jacobi identity and `[P,Q] = 0` is compatibility.
    pub fn schouten(&self, other: &PolyBivector) -> Result<Alternating, FormsError> {
        if self.vars() != other.vars() {
            return Err(FormsError::VarsMismatch);
        }
        let n = self.n_vars();
        let vars = self.vars().clone();
        let mut out = Alternating::zero(vars.clone(), 3);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = MultiPoly::zero(vars.clone());
                    for l in 0..n {
                        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                            let pa = self.component(a, l);
                            if !pa.is_zero() {
                                acc = acc.add(&pa.mul(&other.component(b, c).partial(l)));
                            }
                            let qa = other.component(a, l);
                            if !qa.is_zero() {
                                acc = acc.add(&qa.mul(&self.component(b, c).partial(l)));
                            }
                        }
                    }
                    out.add_to(vec![i, j, k], acc);
                }
            }
        }
        Ok(out)
    }

    /// Jacobi identity, exactly: `[P,P] = 0`.
    pub fn jacobi_check(&self) -> bool {
        self.schouten(self).expect("same vars").is_zero()
    }
}

/// Result of checking a candidate compatible pair.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PairCheck {
    pub jacobi_first: bool,
    pub jacobi_second: bool,
    pub compatible: bool,
}

impl PairCheck {
    pub fn ok(&self) -> bool {
        self.jacobi_first && self.jacobi_second && self.compatible
    }
}

/// Checks both Jacobi identities and the vanishing of the mixed bracket.
pub fn pair_check(p: &PolyBivector, q: &PolyBivector) -> Result<PairCheck, FormsError> {
    let mixed = p.schouten(q)?;
    Ok(PairCheck {
        jacobi_first: p.jacobi_check(),
        jacobi_second: q.jacobi_check(),
        compatible: mixed.is_zero(),
    })
}

/// A differential form with polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyForm {
    table: Alternating,
}

impl PolyForm {
    pub fn zero(vars: Vars, grade: usize) -> Self {
        PolyForm {
            table: Alternating::zero(vars, grade),
        }
    }

    pub fn from_components(
        vars: Vars,
        grade: usize,
        parts: &[(Vec<usize>, MultiPoly)],
    ) -> Result<Self, FormsError> {
        Ok(PolyForm {
            table: Alternating::from_components(vars, grade, parts)?,
        })
    }

    /// The 1-form `sum_i coeffs[i] dx_i`.
    pub fn one_form(vars: Vars, coeffs: &[MultiPoly]) -> Result<Self, FormsError> {
        if coeffs.len() != vars.len() {
            return Err(FormsError::PointDimMismatch);
        }
        let parts: Vec<(Vec<usize>, MultiPoly)> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i], c.clone()))
            .collect();
        PolyForm::from_components(vars, 1, &parts)
    }

    /// A constant-coefficient 1-form from a covector.
    pub fn covector(vars: Vars, row: &[Scalar]) -> Result<Self, FormsError> {
        let coeffs: Vec<MultiPoly> = row
            .iter()
            .map(|c| MultiPoly::constant(vars.clone(), c.clone()))
            .collect();
        PolyForm::one_form(vars, &coeffs)
    }

    pub fn table(&self) -> &Alternating {
        &self.table
    }

    pub fn vars(&self) -> &Vars {
        self.table.vars()
    }

    pub fn grade(&self) -> usize {
        self.table.grade()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn get(&self, idx: &[usize]) -> MultiPoly {
        self.table.get(idx)
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm, FormsError> {
        Ok(PolyForm {
            table: self.table.add(&other.table)?,
        })
    }

    pub fn neg(&self) -> PolyForm {
        PolyForm {
            table: self.table.neg(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolyForm {
        PolyForm {
            table: self.table.scale(s),
        }
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> PolyForm {
        PolyForm {
            table: self.table.scale_poly(p),
        }
    }

    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm, FormsError> {
        Ok(PolyForm {
            table: self.table.wedge(&other.table)?,
        })
    }

    /// Exterior derivative: `d(f dx_I) = sum_k (d_k f) dx_k ^ dx_I`.
    pub fn exterior_d(&self) -> PolyForm {
        let vars = self.vars().clone();
        let n = vars.len();
        let mut out = Alternating::zero(vars, self.grade() + 1);
        for (idx, f) in self.table.components() {
            for k in 0..n {
                let df = f.partial(k);
                if df.is_zero() {
                    continue;
                }
                if let Some((key, odd)) = merge_with_sign(&[k], idx) {
                    out.add_to(key, if odd { df.neg() } else { df });
                }
            }
        }
        PolyForm { table: out }
    }

    /// Coefficient row of a 1-form evaluated at a point.
    pub fn eval_covector(&self, point: &[Scalar]) -> Result<Vec<Scalar>, FormsError> {
        if self.grade() != 1 {
            return Err(FormsError::WrongGrade {
                expected: 1,
                got: self.grade(),
            });
        }
        if point.len() != self.vars().len() {
            return Err(FormsError::PointDimMismatch);
        }
        let mut row = vec![Scalar::zero(); point.len()];
        for (idx, f) in self.table.components() {
            row[idx[0]] = f.eval(point);
        }
        Ok(row)
    }
}

/// How generator independence is certified in `frobenius_check`.
#[derive(Debug, Clone, Copy)]
pub enum Independence<'a> {
    /// Evaluate coefficients at the point and check the rows have full
    /// rank there.
    AtPoint(&'a [Scalar]),
    /// Require the wedge of all generators to be nonzero as a form.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FrobeniusReport {
    pub integrable: bool,
    /// Generator positions whose `d alpha_i ^ alpha_1 ^ ... ^ alpha_s`
    /// failed to vanish.
    pub failures: Vec<usize>,
}

/// Frobenius integrability of the codistribution spanned by 1-forms:
/// after certifying the generators independent, checks
/// `d alpha_i ^ alpha_1 ^ ... ^ alpha_s = 0` for every `i`.
pub fn frobenius_check(
    forms: &[PolyForm],
    mode: Independence,
) -> Result<FrobeniusReport, FormsError> {
    let first = forms.first().ok_or(FormsError::DependentGenerators)?;
    let vars = first.vars().clone();
    for f in forms {
        if f.vars() != &vars {
            return Err(FormsError::VarsMismatch);
        }
        if f.grade() != 1 {
            return Err(FormsError::WrongGrade {
                expected: 1,
                got: f.grade(),
            });
        }
    }
    let mut total = PolyForm::from_components(
        vars.clone(),
        0,
        &[(vec![], MultiPoly::constant(vars.clone(), Scalar::one()))],
    )?;
    for f in forms {
        total = total.wedge(f)?;
    }
    match mode {
        Independence::Generic => {
            if total.is_zero() {
                return Err(FormsError::DependentGenerators);
            }
        }
        Independence::AtPoint(pt) => {
            let rows: Result<Vec<Vec<Scalar>>, FormsError> =
                forms.iter().map(|f| f.eval_covector(pt)).collect();
            if Mat::from_rows(rows?).rank() != forms.len() {
                return Err(FormsError::DependentGenerators);
            }
        }
    }
    let mut failures = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        if !f.exterior_d().wedge(&total)?.is_zero() {
            failures.push(i);
        }
    }
    Ok(FrobeniusReport {
        integrable: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::scalar::q;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(src: &str, vs: &Vars) -> MultiPoly {
        MultiPoly::parse(src, vs.clone()).unwrap()
    }

    fn one(vs: &Vars) -> MultiPoly {
        MultiPoly::constant(vs.clone(), q(1))
    }

    #[test]
    fn index_normalization_applies_permutation_sign() {
        let vs = vars(&["x", "y", "z"]);
        let a = Alternating::from_components(vs.clone(), 2, &[(vec![2, 0], one(&vs))]).unwrap();
        let b = Alternating::from_components(vs.clone(), 2, &[(vec![0, 2], one(&vs).neg())]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.get(&[2, 0]), one(&vs));
        assert!(a.get(&[1, 1]).is_zero());
        assert_eq!(
            Alternating::from_components(vs.clone(), 2, &[(vec![1, 1], one(&vs))]).unwrap_err(),
            FormsError::RepeatedIndex
        );
    }

    #[test]
    fn wedge_signs_match_hand_computation() {
        let vs = vars(&["x", "y", "z"]);
        let dx = PolyForm::covector(vs.clone(), &[q(1), q(0), q(0)]).unwrap();
        let dy = PolyForm::covector(vs.clone(), &[q(0), q(1), q(0)]).unwrap();
        let dz = PolyForm::covector(vs.clone(), &[q(0), q(0), q(1)]).unwrap();
        let xy = dx.wedge(&dy).unwrap();
        let yx = dy.wedge(&dx).unwrap();
        assert_eq!(xy.neg(), yx);
        assert!(dx.wedge(&dx).unwrap().is_zero());
        // (dx ^ dz) ^ dy = -dx ^ dy ^ dz
        let v = dx.wedge(&dz).unwrap().wedge(&dy).unwrap();
        assert_eq!(v.get(&[0, 1, 2]), one(&vs).neg());
        // associativity sample
        let a = dx.add(&dy).unwrap();
        let lhs = a.wedge(&dy).unwrap().wedge(&dz).unwrap();
        let rhs = a.wedge(&dy.wedge(&dz).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exterior_d_hand_example_and_leibniz() {
        let vs = vars(&["x", "y", "z"]);
        // d(x*y dz) = y dx^dz + x dy^dz
        let form =
            PolyForm::from_components(vs.clone(), 1, &[(vec![2], p("x*y", &vs))]).unwrap();
        let d = form.exterior_d();
        assert_eq!(d.get(&[0, 2]), p("y", &vs));
        assert_eq!(d.get(&[1, 2]), p("x", &vs));
        assert!(d.get(&[0, 1]).is_zero());
        // Leibniz with a 0-form: d(f ^ g) = df ^ g + f d(g)
        let f = PolyForm::from_components(vs.clone(), 0, &[(vec![], p("x^2 - z", &vs))]).unwrap();
        let lhs = f.wedge(&form).unwrap().exterior_d();
        let rhs = f
            .exterior_d()
            .wedge(&form)
            .unwrap()
            .add(&form.exterior_d().scale_poly(&p("x^2 - z", &vs)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_squared_is_zero() {
        let vs = vars(&["x", "y", "z", "w"]);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..12 {
            let grade = rng.random_range(0..=2usize);
            let mut parts = Vec::new();
            for _ in 0..rng.random_range(1..=3) {
                let mut idx: Vec<usize> = Vec::new();
                while idx.len() < grade {
                    let c = rng.random_range(0..4);
                    if !idx.contains(&c) {
                        idx.push(c);
                    }
                }
                let exps: Vec<u32> = (0..4).map(|_| rng.random_range(0..=2)).collect();
                let coeff = MultiPoly::monomial(vs.clone(), exps, q(rng.random_range(-3..=3)));
                parts.push((idx, coeff));
            }
            let form = PolyForm::from_components(vs.clone(), grade, &parts).unwrap();
            assert!(form.exterior_d().exterior_d().is_zero());
        }
    }

    /// Independent Jacobiator oracle through iterated Poisson brackets
    /// of coordinate functions.
    fn jacobiator(pv: &PolyBivector, i: usize, j: usize, k: usize) -> MultiPoly {
        let vs = pv.vars().clone();
        let n = vs.len();
        let bracket = |f: &MultiPoly, g: &MultiPoly| {
            let mut acc = MultiPoly::zero(vs.clone());
            for a in 0..n {
                for b in 0..n {
                    let c = pv.component(a, b);
                    if !c.is_zero() {
                        acc = acc.add(&c.mul(&f.partial(a)).mul(&g.partial(b)));
                    }
                }
            }
            acc
        };
        let (xi, xj, xk) = (
            MultiPoly::var(vs.clone(), i),
            MultiPoly::var(vs.clone(), j),
            MultiPoly::var(vs.clone(), k),
        );
        bracket(&xi, &bracket(&xj, &xk))
            .add(&bracket(&xj, &bracket(&xk, &xi)))
            .add(&bracket(&xk, &bracket(&xi, &xj)))
    }

    #[test]
    fn schouten_self_bracket_is_twice_the_jacobiator() {
        let vs = vars(&["x1", "x2", "x3"]);
        // a non-Jacobi table and the so(3) linear structure
        let bad = PolyBivector::new(
            vs.clone(),
            &[(0, 1, p("x1", &vs)), (0, 2, p("x2", &vs))],
        )
        .unwrap();
        let so3 = PolyBivector::new(
            vs.clone(),
            &[
                (0, 1, p("x3", &vs)),
                (1, 2, p("x1", &vs)),
                (2, 0, p("x2", &vs)),
            ],
        )
        .unwrap();
        for pv in [&bad, &so3] {
            let self_bracket = pv.schouten(pv).unwrap();
            let twice = jacobiator(pv, 0, 1, 2).scale(&q(2));
            assert_eq!(self_bracket.get(&[0, 1, 2]), twice);
        }
        assert_eq!(jacobiator(&bad, 0, 1, 2), p("-x2", &vs));
        assert!(!bad.jacobi_check());
        assert!(so3.jacobi_check());
    }

    #[test]
    fn compatible_pair_passes_pair_check() {
        // vars (pp, x, y, z): c1 = d/dpp ^ d/dx, c2 = d/dpp ^ (d/dy + x d/dz)
        let vs = vars(&["pp", "x", "y", "z"]);
        let c1 = PolyBivector::new(vs.clone(), &[(0, 1, one(&vs))]).unwrap();
        let c2 = PolyBivector::new(
            vs.clone(),
            &[(0, 2, one(&vs)), (0, 3, p("x", &vs))],
        )
        .unwrap();
        let report = pair_check(&c1, &c2).unwrap();
        assert!(report.ok(), "{report:?}");
        // breaking compatibility: d/dx ^ (y d/dz) against c2
        let c3 = PolyBivector::new(vs.clone(), &[(1, 3, p("y", &vs))]).unwrap();
        let report = pair_check(&c3, &c2).unwrap();
        assert!(report.jacobi_first && report.jacobi_second);
        assert!(!report.compatible);
    }

    #[test]
    fn eval_bivector_gives_skew_matrix() {
        let vs = vars(&["x", "y", "z"]);
        let pv = PolyBivector::new(
            vs.clone(),
            &[(0, 1, p("x + y", &vs)), (1, 2, p("x*z", &vs))],
        )
        .unwrap();
        let m = pv.eval(&[q(2), q(3), q(5)]).unwrap();
        assert!(m.is_skew());
        assert_eq!(m.get(0, 1), &q(5));
        assert_eq!(m.get(2, 1), &q(-10));
        assert_eq!(m.get(0, 2), &q(0));
        assert_eq!(
            pv.eval(&[q(1)]).unwrap_err(),
            FormsError::PointDimMismatch
        );
    }

    #[test]
    fn frobenius_flags_the_standard_contact_form() {
        let vs = vars(&["x", "y", "z"]);
        // alpha = x dy - dz: d(alpha) ^ alpha = -dx ^ dy ^ dz
        let alpha = PolyForm::one_form(
            vs.clone(),
            &[
                MultiPoly::zero(vs.clone()),
                p("x", &vs),
                p("-1", &vs),
            ],
        )
        .unwrap();
        let d = alpha.exterior_d();
        let top = d.wedge(&alpha).unwrap();
        assert_eq!(top.get(&[0, 1, 2]), p("-1", &vs));
        let report = frobenius_check(&[alpha.clone()], Independence::Generic).unwrap();
        assert!(!report.integrable);
        assert_eq!(report.failures, vec![0]);
        // adding dx to the system makes it integrable
        let dx = PolyForm::covector(vs.clone(), &[q(1), q(0), q(0)]).unwrap();
        let report = frobenius_check(&[dx, alpha], Independence::Generic).unwrap();
        assert!(report.integrable);
    }

    #[test]
    fn frobenius_rejects_dependent_generators() {
        let vs = vars(&["x", "y", "z"]);
        let dx = PolyForm::covector(vs.clone(), &[q(1), q(0), q(0)]).unwrap();
        assert_eq!(
            frobenius_check(&[dx.clone(), dx.scale(&q(2))], Independence::Generic).unwrap_err(),
            FormsError::DependentGenerators
        );
        // {dx, x dy} degenerates exactly on the hyperplane x = 0
        let xdy = PolyForm::one_form(
            vs.clone(),
            &[MultiPoly::zero(vs.clone()), p("x", &vs), MultiPoly::zero(vs.clone())],
        )
        .unwrap();
        let sys = [dx, xdy];
        let origin = [q(0), q(0), q(0)];
        let generic = [q(1), q(0), q(0)];
        assert_eq!(
            frobenius_check(&sys, Independence::AtPoint(&origin)).unwrap_err(),
            FormsError::DependentGenerators
        );
        assert!(frobenius_check(&sys, Independence::AtPoint(&generic))
            .unwrap()
            .integrable);
    }
}
