//! The canonical filtration of a complete pencil and its graded
//! Veronese curves.
//!
//! For `i >= 1` let `Phi_i` be the span of all `i`-fold intersections of
//! generic images `im c_lambda` (and `Phi_0` the whole space). The chain
//! `Phi_0 >= Phi_1 >= ...` is computed from a deterministic parameter
//! pool and declared stable once three consecutive parameters change
//! nothing. For a complete pencil with indices `n_1 <= ... <= n_k` the
//! dimensions obey
//!
//! ```text
//! dim Phi_i = sum_{n_l >= i} (2 n_l + 1) + sum_{n_l < i} n_l
//! ```
//!
//! so the chain drops exactly at the minimal indices and ends at the
//! common isotropic subspace. When the indices are distinct the dual
//! filtration `F_j = ann(Phi_{n_j + 1})` has jumps `n_j + 1`, and in
//! each graded piece `F_j / F_{j-1}` the kernel chain of degree `n_j`
//! traces a rational normal curve of degree `n_j`: the coefficient
//! classes form a basis. Verifying all of that is what certifies an
//! infinitesimal Veronese web of type `(n_1, ..., n_k)`.
//!
//! Covectors are identified with coordinate rows throughout; under that
//! identification `ann(im c_lambda)` and `ker c_lambda` have the same
//! coordinates because the forms are skew.

use serde::Serialize;

use crate::matrix::Mat;
use crate::pencil::{Lambda, SkewPencil};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WebError {
    #[error("pencil is not complete")]
    NotComplete,
    #[error("pencil is not simple, indices {0:?} repeat")]
    NotSimple(Vec<usize>),
}

/// Deterministic parameter pool: (1,0), (0,1), (1,1), (1,2), ...
fn pool(m: usize) -> Lambda {
    match m {
        0 => Lambda::of(1, 0),
        1 => Lambda::of(0, 1),
        _ => Lambda::of(1, m as i64 - 1),
    }
}

/// The stabilized chain `Phi_0 >= Phi_1 >= ... >= Phi_{n_k + 1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiChain {
    /// `spaces[i]` is `Phi_i`; the last entry is `Phi_{n_k + 1}`
    /// (`Phi_1` when there are no minimal indices).
    pub spaces: Vec<Subspace>,
    pub params_used: usize,
}

impl PhiChain {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// Smallest `i` with `Phi_i` equal to the final entry.
    pub fn stabilized_at(&self) -> usize {
        let last = self.spaces.last().expect("chain is never empty");
        self.spaces.iter().position(|s| s == last).unwrap()
    }
}

/// Computes the chain by accumulating `i`-fold image intersections over
/// the pool. Layer `i` keeps every distinct `i`-fold intersection seen
/// so far; a new parameter extends layer `i` by intersecting its image
/// with layer `i - 1`.
pub fn phi_chain(p: &SkewPencil) -> PhiChain {
    let n = p.dim();
    let top = p.minimal_indices().last().map_or(1, |nk| nk + 1);
    let mut phis: Vec<Subspace> = Vec::with_capacity(top + 1);
    phis.push(Subspace::full(n));
    phis.extend((1..=top).map(|_| Subspace::zero(n)));
    let mut layers: Vec<Vec<Subspace>> = vec![Vec::new(); top + 1];
    let mut stable = 0usize;
    let mut m = 0usize;
    loop {
        let im = p.image(&pool(m));
        let mut news: Vec<Vec<Subspace>> = vec![Vec::new(); top + 1];
        news[1].push(im.clone());
        for i in 2..=top {
            for x in &layers[i - 1] {
                let y = x.intersect(&im).expect("same ambient");
                if !news[i].contains(&y) {
                    news[i].push(y);
                }
            }
        }
        let mut changed = false;
        for i in 1..=top {
            for y in news[i].drain(..) {
                let s = phis[i].sum(&y).expect("same ambient");
                if s != phis[i] {
                    phis[i] = s;
                    changed = true;
                }
                if !layers[i].contains(&y) {
                    layers[i].push(y);
                }
            }
        }
        stable = if changed { 0 } else { stable + 1 };
        m += 1;
        if m >= top + 3 && stable >= 3 {
            return PhiChain {
                spaces: phis,
                params_used: m,
            };
        }
    }
}

/// Dimension pattern of the chain checked against a pencil's indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub minimal_indices: Vec<usize>,
    pub observed_dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    pub nested: bool,
    pub ends_at_bilagrangian: bool,
    pub ok: bool,
}

/// Certifies the dimension theorem for a complete pencil: the chain is
/// nested, its dimensions match the index pattern, and it terminates at
/// the common isotropic subspace.
pub fn verify_phi_theorem(p: &SkewPencil) -> Result<PhiReport, WebError> {
    let an = p.analyze();
    if !an.complete {
        return Err(WebError::NotComplete);
    }
    let chain = phi_chain(p);
    let expected_dims: Vec<usize> = (0..chain.spaces.len())
        .map(|i| {
            an.minimal_indices
                .iter()
                .map(|&nl| if nl >= i { 2 * nl + 1 } else { nl })
                .sum()
        })
        .collect();
    let observed_dims = chain.dims();
    let nested = chain
        .spaces
        .windows(2)
        .all(|w| w[0].contains(&w[1]));
    let ends_at_bilagrangian = chain.spaces.last() == Some(&an.bilagrangian);
    let ok = nested && ends_at_bilagrangian && observed_dims == expected_dims;
    Ok(PhiReport {
        minimal_indices: an.minimal_indices,
        observed_dims,
        expected_dims,
        nested,
        ends_at_bilagrangian,
        ok,
    })
}

/// The dual filtration `F_1 < F_2 < ... < F_k`, `F_j = ann(Phi_{n_j+1})`,
/// of a complete simple pencil; `dim F_j = (n_1+1) + ... + (n_j+1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsotypicFiltration {
    pub indices: Vec<usize>,
    /// `levels[j]` is `F_{j+1}`, a space of covectors.
    pub levels: Vec<Subspace>,
}

pub fn isotypic_filtration(p: &SkewPencil) -> Result<IsotypicFiltration, WebError> {
    let an = p.analyze();
    if !an.complete {
        return Err(WebError::NotComplete);
    }
    if !an.simple {
        return Err(WebError::NotSimple(an.minimal_indices));
    }
    let chain = phi_chain(p);
    let levels: Vec<Subspace> = an
        .minimal_indices
        .iter()
        .map(|&nj| chain.spaces[nj + 1].annihilator())
        .collect();
    Ok(IsotypicFiltration {
        indices: an.minimal_indices,
        levels,
    })
}

/// The degree-`n_j` kernel chain written in the graded piece
/// `F_j / F_{j-1}`: one row per coefficient class, in the coordinates
/// carried by the complement pivots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GradedCurve {
    /// 1-based level `j`.
    pub level: usize,
    /// The minimal index `n_j` of this level.
    pub index: usize,
    /// Pivot columns of the canonical complement of `F_{j-1}` in `F_j`.
    pub pivots: Vec<usize>,
    /// Rows are the classes of `v_0, ..., v_{n_j}`.
    pub coeff_classes: Mat,
}

fn curves_for(p: &SkewPencil, filt: &IsotypicFiltration) -> Vec<GradedCurve> {
    let n = p.dim();
    let chains = p.kernel_chains();
    let mut prev = Subspace::zero(n);
    let mut out = Vec::with_capacity(chains.len());
    for (j, (fj, ch)) in filt.levels.iter().zip(&chains).enumerate() {
        // pivot sets of nested subspaces nest, so the leftover rows of
        // RREF(F_j) form a complement of F_{j-1}
        let prev_pivots = prev.pivots();
        let pivots: Vec<usize> = fj
            .pivots()
            .into_iter()
            .filter(|c| !prev_pivots.contains(c))
            .collect();
        let rows: Vec<Vec<Scalar>> = ch
            .coeffs
            .iter()
            .map(|v| {
                debug_assert!(fj.contains_vec(v), "chain coefficient escapes its level");
                let red = prev.reduce(v);
                pivots.iter().map(|&c| red[c].clone()).collect()
            })
            .collect();
        out.push(GradedCurve {
            level: j + 1,
            index: ch.degree,
            pivots,
            coeff_classes: Mat::from_rows(rows),
        });
        prev = fj.clone();
    }
    out
}

/// Graded coefficient classes for every level of a complete simple
/// pencil. The classes are canonical: any other minimal kernel basis
/// differs by contributions that land in the lower level.
pub fn graded_curves(p: &SkewPencil) -> Result<Vec<GradedCurve>, WebError> {
    let filt = isotypic_filtration(p)?;
    Ok(curves_for(p, &filt))
}

/// A curve is Veronese iff its coefficient classes form a basis of the
/// graded piece; the sampled points give an independent second witness.
pub fn veronese_check(curve: &GradedCurve) -> bool {
    let d = curve.index;
    let m = &curve.coeff_classes;
    if m.rows() != d + 1 || m.cols() != d + 1 || m.rank() != d + 1 {
        return false;
    }
    // d + 1 distinct points lambda = (1, t) on a degree-d rational
    // normal curve are independent
    let pts: Vec<Vec<Scalar>> = (0..=d as i64)
        .map(|t| {
            let tt = Scalar::int(t);
            let mut acc = vec![Scalar::zero(); d + 1];
            let mut w = Scalar::one();
            for i in 0..=d {
                for (a, b) in acc.iter_mut().zip(m.row(i)) {
                    *a += &(&w * b);
                }
                w = &w * &tt;
            }
            acc
        })
        .collect();
    Mat::from_rows(pts).rank() == d + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WebChecks {
    /// Filtration is nested with jumps `n_j + 1`.
    pub jumps_ok: bool,
    /// `dim(F_j  ∩ ker c_lambda) = j` at every sampled parameter.
    pub kernel_slices_ok: bool,
    /// Every graded curve is Veronese.
    pub veronese_ok: bool,
}

/// The full certificate: filtration, curves, and the three structural
/// checks of an infinitesimal Veronese web of type `(n_1, ..., n_k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfinitesimalWeb {
    pub web_type: Vec<usize>,
    pub filtration: IsotypicFiltration,
    pub curves: Vec<GradedCurve>,
    pub checks: WebChecks,
}

impl InfinitesimalWeb {
    pub fn certified(&self) -> bool {
        self.checks.jumps_ok && self.checks.kernel_slices_ok && self.checks.veronese_ok
    }
}

pub fn build_infinitesimal_web(p: &SkewPencil) -> Result<InfinitesimalWeb, WebError> {
    let filt = isotypic_filtration(p)?;
    let curves = curves_for(p, &filt);

    let mut jumps_ok = true;
    let mut prev_dim = 0usize;
    let mut prev: Option<&Subspace> = None;
    for (fj, &nj) in filt.levels.iter().zip(&filt.indices) {
        jumps_ok &= fj.dim() == prev_dim + nj + 1;
        if let Some(lower) = prev {
            jumps_ok &= fj.contains(lower);
        }
        prev_dim = fj.dim();
        prev = Some(fj);
    }

    let nk = *filt.indices.last().expect("simple pencil has indices");
    let mut kernel_slices_ok = true;
    for m in 0..nk + 3 {
        let ker = Subspace::kernel(&p.eval(&pool(m)));
        for (j, fj) in filt.levels.iter().enumerate() {
            kernel_slices_ok &=
                fj.intersect(&ker).expect("same ambient").dim() == j + 1;
        }
    }

    let veronese_ok = curves.iter().all(veronese_check);

    Ok(InfinitesimalWeb {
        web_type: filt.indices.clone(),
        filtration: filt,
        curves,
        checks: WebChecks {
            jumps_ok,
            kernel_slices_ok,
            veronese_ok,
        },
    })
}
