//! Linear subspaces of Q^n with a canonical representative.
//!
//! A `Subspace` stores the reduced row-echelon basis of its row space, so
//! two subspaces are equal as sets iff they are equal as values. Sums,
//! intersections and annihilators all land back in canonical form, which
//! is what lets the pencil and web layers compare filtrations verbatim.

use serde::Serialize;

use crate::matrix::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubspaceError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// A subspace of Q^ambient, basis rows in RREF with zero rows dropped.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        Self::row_space(&Mat::from_rows(vectors.to_vec()))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Mat) -> Self {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Mat::from_rows(rows),
        }
    }

    /// Column space of a matrix.
    pub fn col_space(m: &Mat) -> Self {
        Self::row_space(&m.transpose())
    }

    /// Kernel `{ v : m v = 0 }`.
    pub fn kernel(m: &Mat) -> Self {
        let ns = m.nullspace();
        Subspace::span(m.cols(), &ns)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .row_vecs()
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("no zero basis rows"))
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Ok(Subspace::span(self.ambient, &rows))
    }

    /// Intersection computed through annihilators:
    /// `U cap W = ann(ann(U) + ann(W))`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        let a = self.annihilator();
        let b = other.annihilator();
        Ok(a.sum(&b)?.annihilator())
    }

    /// `{ phi : phi(v) = 0 for all v in self }` in the dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace::kernel(&self.basis)
    }

    /// Eliminates the pivot coordinates of `self` from `v`; the result is
    /// zero iff `v` lies in `self`, and is the canonical representative of
    /// `v` modulo `self` otherwise.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length != ambient dimension");
        let mut out = v.to_vec();
        for (row, &p) in self.pivots().iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(row)) {
                *x = &*x - &(&f * b);
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && other.basis.row_vecs().iter().all(|v| self.contains_vec(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of Q^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_i64;
    use crate::scalar::q;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_subspace(rng: &mut ChaCha8Rng, ambient: usize, gens: usize) -> Subspace {
        let rows: Vec<Vec<Scalar>> = (0..gens)
            .map(|_| (0..ambient).map(|_| q(rng.random_range(-4..=4))).collect())
            .collect();
        Subspace::span(ambient, &rows)
    }

    #[test]
    fn canonical_representation_gives_syntactic_equality() {
        let u = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(2), q(2)]]);
        let w = Subspace::span(3, &[vec![q(2), q(4), q(2)], vec![q(1), q(3), q(2)]]);
        assert_eq!(u, w);
        assert_eq!(u.dim(), 2);
    }

    #[test]
    fn double_annihilator_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xD0D0);
        for _ in 0..20 {
            let gens = rng.random_range(0..=5);
            let u = rand_subspace(&mut rng, 5, gens);
            assert_eq!(u.annihilator().annihilator(), u);
            assert_eq!(u.dim() + u.annihilator().dim(), 5);
        }
    }

    #[test]
    fn grassmann_dimension_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9A55);
        for _ in 0..25 {
            let (gu, gw) = (rng.random_range(0..=4), rng.random_range(0..=4));
            let u = rand_subspace(&mut rng, 6, gu);
            let w = rand_subspace(&mut rng, 6, gw);
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            assert!(s.contains(&u) && s.contains(&w));
            assert!(u.contains(&i) && w.contains(&i));
        }
    }

    #[test]
    fn intersection_hand_example() {
        // xy-plane cap yz-plane = y-axis.
        let xy = Subspace::span(3, &[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let yz = Subspace::span(3, &[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
        let axis = xy.intersect(&yz).unwrap();
        assert_eq!(axis, Subspace::span(3, &[vec![q(0), q(1), q(0)]]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2);
        let w = Subspace::full(3);
        assert_eq!(u.sum(&w), Err(SubspaceError::AmbientMismatch(2, 3)));
        assert!(u.intersect(&w).is_err());
    }

    #[test]
    fn reduce_gives_membership_and_class_representatives() {
        let u = Subspace::span(3, &[vec![q(1), q(0), q(1)]]);
        assert!(u.contains_vec(&[q(3), q(0), q(3)]));
        assert!(!u.contains_vec(&[q(1), q(0), q(0)]));
        // representative has the pivot coordinate cleared
        assert_eq!(u.reduce(&[q(5), q(2), q(0)]), vec![q(0), q(2), q(-5)]);
    }

    #[test]
    fn col_space_of_skew_equals_row_space() {
        let a = mat_i64(&[&[0, 1, 0], &[-1, 0, 2], &[0, -2, 0]]);
        assert!(a.is_skew());
        assert_eq!(Subspace::col_space(&a), Subspace::row_space(&a));
    }
}
