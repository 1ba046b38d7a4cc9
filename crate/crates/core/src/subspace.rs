//! Subspaces in canonical reduced column-echelon basis form, plus the
//! sum / intersection / kernel operations the decomposition machinery needs.
//!
//! The basis of a subspace is the transpose of the reduced row echelon form
//! of any spanning set, so two equal subspaces always carry bit-identical
//! bases and subspace equality is plain `==`.

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<T> {
    ambient: usize,
    /// ambient x dim matrix, columns in reduced column-echelon form:
    /// pivot rows strictly increasing, pivot entries 1, pivot rows zero
    /// in every other column.
    basis: Matrix<T>,
    /// Pivot row of each basis column.
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical subspace spanned by the given vectors.
    pub fn from_spanning(ambient: usize, vectors: &[Vec<T>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (rref, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let cols: Vec<Vec<T>> = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        Subspace {
            ambient,
            basis: Matrix::from_cols(ambient, &cols),
            pivots,
        }
    }

    /// Canonical subspace spanned by the columns of a matrix.
    pub fn from_columns(m: &Matrix<T>) -> Self {
        Self::from_spanning(m.rows(), &m.col_vecs())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_columns(&self) -> Vec<Vec<T>> {
        self.basis.col_vecs()
    }

    /// Membership by reduction against the echelon basis; equivalent to the
    /// rank of the adjoined matrix not increasing.
    pub fn contains_vector(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (x, b) in w.iter_mut().zip(self.basis.col(j)) {
                    *x = x.clone() - f.clone() * b;
                }
            }
        }
        w.iter().all(T::is_zero)
    }

    pub fn contains(&self, other: &Subspace<T>) -> bool {
        other
            .basis_columns()
            .iter()
            .all(|c| self.contains_vector(c))
    }

    /// Image of this subspace under a linear map, as a canonical subspace.
    pub fn image_under(&self, m: &Matrix<T>) -> Subspace<T> {
        let cols: Vec<Vec<T>> = self.basis_columns().iter().map(|c| m.apply(c)).collect();
        Subspace::from_spanning(m.rows(), &cols)
    }
}

/// Canonical basis of { v : m v = 0 }.
pub fn kernel<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let n = m.cols();
    let (rref, pivots) = m.rref();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| pivot_of_col[*c].is_none()) {
        let mut v = vec![T::zero(); n];
        v[free] = T::one();
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                v[c] = -rref[(*r, free)].clone();
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(n, &basis)
}

/// Canonical basis of the theta-eigenspace of a square matrix; may be zero.
pub fn eigenspace<T: Field>(m: &Matrix<T>, theta: &T) -> Subspace<T> {
    assert!(m.is_square(), "eigenspace needs a square matrix");
    kernel(&m.shift(theta))
}

/// Canonical basis of the span of all the given subspaces.
pub fn subspace_sum<T: Field>(ws: &[&Subspace<T>]) -> Subspace<T> {
    assert!(!ws.is_empty());
    let ambient = ws[0].ambient_dim();
    assert!(ws.iter().all(|w| w.ambient_dim() == ambient));
    let cols: Vec<Vec<T>> = ws.iter().flat_map(|w| w.basis_columns()).collect();
    Subspace::from_spanning(ambient, &cols)
}

/// Canonical basis of w1 ∩ w2, via the kernel of the concatenated bases:
/// [B1 | B2] (x, y)^T = 0 forces B1 x = -B2 y, and B1 x runs over the
/// intersection.
pub fn subspace_intersect<T: Field>(w1: &Subspace<T>, w2: &Subspace<T>) -> Subspace<T> {
    assert_eq!(w1.ambient_dim(), w2.ambient_dim());
    let ambient = w1.ambient_dim();
    if w1.is_zero() || w2.is_zero() {
        return Subspace::zero(ambient);
    }
    let concat = w1.basis().hcat(w2.basis());
    let null = kernel(&concat);
    let d1 = w1.dim();
    let vectors: Vec<Vec<T>> = null
        .basis_columns()
        .iter()
        .map(|xy| w1.basis().apply(&xy[..d1]))
        .collect();
    Subspace::from_spanning(ambient, &vectors)
}

/// True iff the subspace dimensions add up to the ambient dimension and the
/// concatenated bases are linearly independent, i.e. the list is a direct sum
/// decomposition of the whole space.
pub fn direct_sum_check<T: Field>(ws: &[&Subspace<T>]) -> bool {
    if ws.is_empty() {
        return false;
    }
    let ambient = ws[0].ambient_dim();
    if !ws.iter().all(|w| w.ambient_dim() == ambient) {
        return false;
    }
    let total: usize = ws.iter().map(|w| w.dim()).sum();
    if total != ambient {
        return false;
    }
    let cols: Vec<Vec<T>> = ws.iter().flat_map(|w| w.basis_columns()).collect();
    Matrix::from_cols(ambient, &cols).rank() == total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{mat, rat, vecr, Mat, Rat};
    use num::Zero;
    use proptest::prelude::*;

    fn span(ambient: usize, vs: &[&[i64]]) -> Subspace<Rat> {
        let vectors: Vec<Vec<Rat>> = vs.iter().map(|v| vecr(v)).collect();
        Subspace::from_spanning(ambient, &vectors)
    }

    #[test]
    fn kernel_examples() {
        // coordinate projection
        let k = kernel(&mat(&[&[1, 0], &[0, 0]]));
        assert_eq!(k, span(2, &[&[0, 1]]));
        // injective map
        assert!(kernel(&Mat::identity(3)).is_zero());
        // rank-1 symmetric
        let k = kernel(&mat(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, span(2, &[&[1, -1]]));
    }

    #[test]
    fn eigenspace_examples() {
        let m = Mat::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ]);
        assert_eq!(eigenspace(&m, &rat(2, 1)), span(2, &[&[0, 1]]));
        // (1, -2/3), i.e. span{(3, -2)} after normalization
        let e = eigenspace(&m, &rat(1, 2));
        assert_eq!(e, span(2, &[&[3, -2]]));
        assert_eq!(e.basis().col(0), vec![rat(1, 1), rat(-2, 3)]);
        assert!(eigenspace(&Mat::identity(2), &rat(0, 1)).is_zero());
    }

    #[test]
    fn eigenspace_columns_satisfy_the_eigen_equation() {
        let m = Mat::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ]);
        for theta in [rat(1, 2), rat(2, 1)] {
            for v in eigenspace(&m, &theta).basis_columns() {
                let mv = m.apply(&v);
                let tv: Vec<Rat> = v.iter().map(|x| x.clone() * theta.clone()).collect();
                assert_eq!(mv, tv);
            }
        }
    }

    #[test]
    fn sum_examples() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        assert_eq!(subspace_sum(&[&e1, &e2]), Subspace::full(2));
        let w = span(2, &[&[1, 1]]);
        assert_eq!(subspace_sum(&[&w, &w]), w);
        let u = span(2, &[&[1, -1]]);
        assert_eq!(subspace_sum(&[&w, &u]), Subspace::full(2));
    }

    #[test]
    fn intersect_examples() {
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(subspace_intersect(&a, &b), span(3, &[&[0, 1, 0]]));
        let w = span(3, &[&[1, 2, 3]]);
        assert_eq!(subspace_intersect(&w, &Subspace::full(3)), w);
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        assert!(subspace_intersect(&e1, &e2).is_zero());
    }

    #[test]
    fn direct_sum_examples() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        assert!(direct_sum_check(&[&e1, &e2]));
        assert!(!direct_sum_check(&[&e1, &e1]));
        let w = span(2, &[&[1, 1]]);
        let u = span(2, &[&[1, -1]]);
        assert!(direct_sum_check(&[&w, &u]));
        // dimensions short of the ambient space
        assert!(!direct_sum_check(&[&e1]));
    }

    #[test]
    fn membership() {
        let w = span(3, &[&[1, 0, 2], &[0, 1, 1]]);
        assert!(w.contains_vector(&vecr(&[1, 1, 3])));
        assert!(!w.contains_vector(&vecr(&[0, 0, 1])));
        assert!(w.contains(&span(3, &[&[1, 1, 3]])));
        assert!(w.contains_vector(&vecr(&[0, 0, 0])));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    fn vectors(ambient: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
        proptest::collection::vec(
            proptest::collection::vec(small_rat(), ambient),
            1..=count,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // Random spanning sets of the same subspace canonicalize identically.
        #[test]
        fn canonical_bases(vs in vectors(4, 3), coeffs in proptest::collection::vec(
            proptest::collection::vec(small_rat(), 3), 4))
        {
            let w = Subspace::from_spanning(4, &vs);
            // New spanning set: random combinations of the original vectors,
            // plus the originals to keep the span equal.
            let mut gens = vs.clone();
            for cs in &coeffs {
                let mut v = vec![rat(0, 1); 4];
                for (c, orig) in cs.iter().zip(&vs) {
                    for i in 0..4 {
                        v[i] = v[i].clone() + c.clone() * orig[i].clone();
                    }
                }
                gens.push(v);
            }
            let w2 = Subspace::from_spanning(4, &gens);
            prop_assert_eq!(w.basis(), w2.basis());
            prop_assert_eq!(w.pivots.clone(), w2.pivots.clone());
        }

        // dim(w1) + dim(w2) = dim(w1 + w2) + dim(w1 ∩ w2)
        #[test]
        fn dimension_formula(v1 in vectors(5, 3), v2 in vectors(5, 3)) {
            let w1 = Subspace::from_spanning(5, &v1);
            let w2 = Subspace::from_spanning(5, &v2);
            let s = subspace_sum(&[&w1, &w2]);
            let i = subspace_intersect(&w1, &w2);
            prop_assert_eq!(w1.dim() + w2.dim(), s.dim() + i.dim());
            // and the intersection lies in both
            prop_assert!(w1.contains(&i));
            prop_assert!(w2.contains(&i));
            prop_assert!(s.contains(&w1));
            prop_assert!(s.contains(&w2));
        }

        // Every kernel column really solves m v = 0.
        #[test]
        fn kernel_columns_annihilate(rows in vectors(4, 4)) {
            let m = Mat::from_rows(rows);
            let k = kernel(&m);
            prop_assert_eq!(k.dim(), m.cols() - m.rank());
            for v in k.basis_columns() {
                prop_assert!(m.apply(&v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
