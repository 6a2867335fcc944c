//! Exact linear algebra: reduced row echelon form, kernels, solving,
//! canonical subspaces, complements, and quotients with sections.
//!
//! Subspaces are always stored in reduced row-echelon form with strictly
//! increasing pivot columns, so equal subspaces have equal representations.

use crate::matrix::{unit_vec, zero_vec, Matrix};
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

/// Row-reduce `m` in place to reduced row echelon form.
/// Returns the pivot columns in order.
pub fn rref_in_place(m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..m.cols {
        if pivot_row >= m.rows {
            break;
        }
        let Some(sel) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if sel != pivot_row {
            for j in 0..m.cols {
                let a = m.get(sel, j).clone();
                let b = m.get(pivot_row, j).clone();
                m.set(sel, j, b);
                m.set(pivot_row, j, a);
            }
        }
        let inv = m.get(pivot_row, col).inv();
        for j in 0..m.cols {
            let v = m.get(pivot_row, j) * &inv;
            m.set(pivot_row, j, v);
        }
        for r in 0..m.rows {
            if r == pivot_row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for j in 0..m.cols {
                let v = m.get(r, j) - &(&factor * m.get(pivot_row, j));
                m.set(r, j, v);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut c = m.clone();
    rref_in_place(&mut c).len()
}

/// A linear subspace of k^n in canonical (RREF) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// Rows form the canonical basis; no zero rows.
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given row vectors, canonicalized.
    pub fn span(field: FieldSpec, ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        let mut m = if rows.is_empty() {
            Matrix::zero(field, 0, ambient_dim)
        } else {
            Matrix::from_rows(field, rows).expect("span rows")
        };
        let pivots = rref_in_place(&mut m);
        let kept: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| m.row(i)).collect();
        let basis = if kept.is_empty() {
            Matrix::zero(field, 0, ambient_dim)
        } else {
            Matrix::from_rows(field, kept).unwrap()
        };
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace::span(field, ambient_dim, vec![])
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        let rows = (0..ambient_dim)
            .map(|i| unit_vec(field, ambient_dim, i))
            .collect();
        Subspace::span(field, ambient_dim, rows)
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Reduce `v` modulo the subspace; returns the residual.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for j in 0..self.ambient_dim {
                r[j] = &r[j] - &(&c * self.basis.get(k, j));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.contains(v) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.basis.row(i)).collect();
        rows.extend((0..other.dim()).map(|i| other.basis.row(i)));
        Subspace::span(self.field(), self.ambient_dim, rows)
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let field = self.field();
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return Subspace::zero(field, self.ambient_dim);
        }
        // Solve a^T alpha = b^T beta: kernel of [A^T | -B^T].
        let stacked = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().neg());
        let ker = kernel(&stacked);
        let rows: Vec<Vec<Scalar>> = (0..ker.dim())
            .map(|i| {
                let coeffs = ker.basis.row(i);
                let alpha = &coeffs[0..k];
                let mut v = zero_vec(field, self.ambient_dim);
                for (rk, c) in alpha.iter().enumerate() {
                    for j in 0..self.ambient_dim {
                        v[j] = &v[j] + &(c * self.basis.get(rk, j));
                    }
                }
                v
            })
            .collect();
        Subspace::span(field, self.ambient_dim, rows)
    }
}

/// Canonical basis of `{v : m v = 0}` (v a column vector).
pub fn kernel(m: &Matrix) -> Subspace {
    let field = m.field;
    let n = m.cols;
    let mut r = m.clone();
    let pivots = rref_in_place(&mut r);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut rows = Vec::new();
    for j in 0..n {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut v = zero_vec(field, n);
        v[j] = field.one();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(k, j);
        }
        rows.push(v);
    }
    Subspace::span(field, n, rows)
}

/// Column space of `m` as a subspace of k^rows.
pub fn image(m: &Matrix) -> Subspace {
    let rows: Vec<Vec<Scalar>> = (0..m.cols).map(|j| m.col(j)).collect();
    Subspace::span(m.field, m.rows, rows)
}

/// One solution of `m v = b`, or None when inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!(
            "solve: rhs length {} vs {} rows",
            b.len(),
            m.rows
        )));
    }
    if b.iter().any(|s| s.field() != m.field) {
        return Err(Error::MixedFields);
    }
    let rhs = Matrix::from_cols(m.field, m.rows, &[b.to_vec()]);
    let mut aug = m.hstack(&rhs);
    let pivots = rref_in_place(&mut aug);
    if pivots.contains(&m.cols) {
        return Ok(None);
    }
    let mut v = zero_vec(m.field, m.cols);
    for (k, &p) in pivots.iter().enumerate() {
        v[p] = aug.get(k, m.cols).clone();
    }
    Ok(Some(v))
}

/// Deterministic complement: standard basis vectors at the non-pivot
/// columns of the canonical basis of `u`.
pub fn complement(u: &Subspace) -> Subspace {
    let field = u.field();
    let pivot_set: std::collections::HashSet<usize> = u.pivots.iter().copied().collect();
    let rows = (0..u.ambient_dim)
        .filter(|j| !pivot_set.contains(j))
        .map(|j| unit_vec(field, u.ambient_dim, j))
        .collect();
    Subspace::span(field, u.ambient_dim, rows)
}

/// A second deterministic complement, preferring standard vectors with
/// the highest index first. May coincide with `complement` on easy inputs.
pub fn complement_alt(u: &Subspace) -> Subspace {
    let field = u.field();
    let mut acc = u.clone();
    let mut chosen = Vec::new();
    for j in (0..u.ambient_dim).rev() {
        let e = unit_vec(field, u.ambient_dim, j);
        if !acc.contains(&e) {
            acc = acc.sum(&Subspace::span(field, u.ambient_dim, vec![e.clone()]));
            chosen.push(e);
        }
    }
    Subspace::span(field, u.ambient_dim, chosen)
}

/// A quotient k^n / u with a projection and a linear section.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub subspace: Subspace,
    /// (n - dim u) x n; kernel = u.
    pub projection: Matrix,
    /// n x (n - dim u); projection * section = identity.
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.projection.rows
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(q)
    }
}

/// Quotient by `u` with section supported on the non-pivot coordinates.
pub fn quotient(ambient_dim: usize, u: &Subspace) -> QuotientSpace {
    assert_eq!(u.ambient_dim, ambient_dim);
    let field = u.field();
    let pivot_set: std::collections::HashSet<usize> = u.pivots.iter().copied().collect();
    let non_pivots: Vec<usize> = (0..ambient_dim).filter(|j| !pivot_set.contains(j)).collect();
    let q = non_pivots.len();
    let mut projection = Matrix::zero(field, q, ambient_dim);
    for (a, &j) in non_pivots.iter().enumerate() {
        projection.set(a, j, field.one());
        for (k, &p) in u.pivots.iter().enumerate() {
            projection.set(a, p, -u.basis.get(k, j));
        }
    }
    let mut section = Matrix::zero(field, ambient_dim, q);
    for (a, &j) in non_pivots.iter().enumerate() {
        section.set(j, a, field.one());
    }
    QuotientSpace {
        ambient_dim,
        subspace: u.clone(),
        projection,
        section,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_from_i64;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn kernel_identity_and_zero() {
        let id = Matrix::identity(Q, 2);
        assert_eq!(kernel(&id).dim(), 0);
        let z = Matrix::zero(Q, 2, 2);
        assert_eq!(kernel(&z), Subspace::full(Q, 2));
    }

    #[test]
    fn kernel_rank_one() {
        // [[1,2],[2,4]] -> kernel span{(-2,1)}
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        // oracle: every basis vector is annihilated, and rank + nullity = cols
        for i in 0..k.dim() {
            let v = k.basis.row(i);
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(rank(&m) + k.dim(), m.cols);
        assert!(k.contains(&vec_from_i64(Q, &[-2, 1])));
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::identity(Q, 2);
        let b = vec_from_i64(Q, &[3, 4]);
        assert_eq!(solve(&id, &b).unwrap().unwrap(), b);

        let z = Matrix::zero(Q, 2, 2);
        assert!(solve(&z, &vec_from_i64(Q, &[1, 0])).unwrap().is_none());

        let m = Matrix::from_i64(Q, &[&[1, 1], &[0, 0]]);
        let b = vec_from_i64(Q, &[2, 0]);
        let v = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&v), b);

        assert!(matches!(
            solve(&id, &vec_from_i64(Q, &[1])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn complement_cases() {
        let u = Subspace::span(Q, 2, vec![vec_from_i64(Q, &[1, 0])]);
        let t = complement(&u);
        assert_eq!(t.basis.row(0), vec_from_i64(Q, &[0, 1]));

        let full = Subspace::full(Q, 3);
        assert_eq!(complement(&full).dim(), 0);

        let u = Subspace::span(Q, 2, vec![vec_from_i64(Q, &[1, 1])]);
        let t = complement(&u);
        assert_eq!(t.basis.row(0), vec_from_i64(Q, &[0, 1]));
        assert_eq!(u.dim() + t.dim(), 2);
        assert_eq!(u.intersect(&t).dim(), 0);
    }

    #[test]
    fn quotient_cases() {
        let z = Subspace::zero(Q, 3);
        let q = quotient(3, &z);
        assert_eq!(q.projection, Matrix::identity(Q, 3));

        let full = Subspace::full(Q, 2);
        assert_eq!(quotient(2, &full).dim(), 0);

        let u = Subspace::span(Q, 2, vec![vec_from_i64(Q, &[1, 1])]);
        let q = quotient(2, &u);
        assert_eq!(q.dim(), 1);
        assert!(q.project(&vec_from_i64(Q, &[1, 1])).iter().all(|x| x.is_zero()));
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(Q, 1));
    }

    #[test]
    fn canonicalization_idempotent() {
        let u = Subspace::span(
            Q,
            3,
            vec![vec_from_i64(Q, &[2, 4, 6]), vec_from_i64(Q, &[1, 1, 1])],
        );
        let rows = (0..u.dim()).map(|i| u.basis.row(i)).collect();
        let again = Subspace::span(Q, 3, rows);
        assert_eq!(u, again);
    }
}
