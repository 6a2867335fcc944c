//! Finite-dimensional Lie algebras given by structure constants, Lie
//! modules, actions on Lie algebras, centres, stabilizers and quotients.
//!
//! Every axiom is checked on basis tuples only; multilinearity extends
//! the checks to all elements.

use crate::linalg::{kernel, quotient, QuotientSpace, Subspace};
use crate::matrix::{unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix};
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;
use std::fmt;

/// What failed, on which basis tuple, and by how much.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Antisymmetry,
    Jacobi,
    ModuleLaw,
    DerivationLaw,
    BoundaryNotHom,
    Equivariance,
    Peiffer,
    PeifferSymmetry,
    BracketMismatch,
    Braid20,
    Braid21,
    Braid22,
    Braid23,
    Braid24,
    Braid26,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Antisymmetry => "antisymmetry",
            ViolationKind::Jacobi => "jacobi",
            ViolationKind::ModuleLaw => "module_law",
            ViolationKind::DerivationLaw => "derivation_law",
            ViolationKind::BoundaryNotHom => "boundary_not_hom",
            ViolationKind::Equivariance => "equivariance",
            ViolationKind::Peiffer => "peiffer",
            ViolationKind::PeifferSymmetry => "peiffer_symmetry",
            ViolationKind::BracketMismatch => "bracket_mismatch",
            ViolationKind::Braid20 => "braid_boundary_bracket",
            ViolationKind::Braid21 => "braid_boundary_pair",
            ViolationKind::Braid22 => "braid_mixed_symmetry",
            ViolationKind::Braid23 => "braid_jacobi",
            ViolationKind::Braid24 => "braid_diagonal",
            ViolationKind::Braid26 => "braid_inner_jacobi",
        };
        f.write_str(s)
    }
}

pub(crate) fn push_defect(
    out: &mut Vec<Violation>,
    kind: ViolationKind,
    indices: &[usize],
    defect: Vec<Scalar>,
) {
    if !vec_is_zero(&defect) {
        out.push(Violation {
            kind,
            indices: indices.to_vec(),
            defect,
        });
    }
}

/// A Lie algebra on a labeled basis, defined by its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    /// structure[i][j] = coefficient vector of [x_i, x_j].
    structure: Vec<Vec<Vec<Scalar>>>,
}

impl LieAlgebra {
    /// Build from brackets given on pairs i < j; antisymmetry fills the rest.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<Scalar>)],
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut structure = vec![vec![zero_vec(field, dim); dim]; dim];
        for (i, j, v) in brackets {
            if *i >= *j {
                return Err(Error::InvalidInput(format!(
                    "bracket entries require i < j, got ({i},{j})"
                )));
            }
            if *j >= dim {
                return Err(Error::Dimension(format!("bracket index {j} out of range")));
            }
            if v.len() != dim {
                return Err(Error::Dimension(format!(
                    "bracket value length {} != dim {dim}",
                    v.len()
                )));
            }
            if v.iter().any(|s| s.field() != field) {
                return Err(Error::MixedFields);
            }
            structure[*i][*j] = v.clone();
            structure[*j][*i] = v.iter().map(|s| -s).collect();
        }
        Ok(LieAlgebra {
            field,
            dim,
            labels,
            structure,
        })
    }

    /// Build from a full structure tensor without symmetry filling.
    /// Shape-checked only; `validate` reports broken axioms.
    pub fn from_structure(
        field: FieldSpec,
        labels: Vec<String>,
        structure: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        if structure.len() != dim
            || structure
                .iter()
                .any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
        {
            return Err(Error::Dimension("structure tensor shape".into()));
        }
        Ok(LieAlgebra {
            field,
            dim,
            labels,
            structure,
        })
    }

    pub fn structure_tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.structure.clone()
    }

    pub fn abelian(field: FieldSpec, labels: Vec<String>) -> Self {
        LieAlgebra::new(field, labels, &[]).unwrap()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    /// Bilinear bracket of coefficient vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                out = vec_add(&out, &vec_scale(&c, &self.structure[i][j]));
            }
        }
        out
    }

    /// Antisymmetry and Jacobi on all basis tuples. Never fails; it reports.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = vec_add(&self.structure[i][j], &self.structure[j][i]);
                push_defect(&mut out, ViolationKind::Antisymmetry, &[i, j], d);
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = unit_vec(self.field, self.dim, i);
                    let ej = unit_vec(self.field, self.dim, j);
                    let ek = unit_vec(self.field, self.dim, k);
                    let mut d = self.bracket(&ei, &self.bracket(&ej, &ek));
                    d = vec_add(&d, &self.bracket(&ek, &self.bracket(&ei, &ej)));
                    d = vec_add(&d, &self.bracket(&ej, &self.bracket(&ek, &ei)));
                    push_defect(&mut out, ViolationKind::Jacobi, &[i, j, k], d);
                }
            }
        }
        out
    }

    /// Centre {c : [c, x] = 0 for all x} as a canonical subspace.
    pub fn centre(&self) -> Subspace {
        // rows: (j, coord); cols: i; entry structure[i][j][coord]
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for coord in 0..self.dim {
                let row: Vec<Scalar> = (0..self.dim)
                    .map(|i| self.structure[i][j][coord].clone())
                    .collect();
                rows.push(row);
            }
        }
        let m = if rows.is_empty() {
            Matrix::zero(self.field, 0, self.dim)
        } else {
            Matrix::from_rows(self.field, rows).unwrap()
        };
        kernel(&m)
    }

    /// The adjoint operator ad_x as a matrix, x a coefficient vector.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.field, self.dim, j)))
            .collect();
        Matrix::from_cols(self.field, self.dim, &cols)
    }
}

/// A left module over a Lie algebra, given by its action tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule {
    pub algebra: LieAlgebra,
    pub dim: usize,
    /// action[i][j] = coefficient vector of x_i . v_j.
    action: Vec<Vec<Vec<Scalar>>>,
}

impl LieModule {
    pub fn new(
        algebra: LieAlgebra,
        dim: usize,
        action: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, Error> {
        if action.len() != algebra.dim || action.iter().any(|row| row.len() != dim) {
            return Err(Error::Dimension("action tensor shape".into()));
        }
        for row in &action {
            for v in row {
                if v.len() != dim {
                    return Err(Error::Dimension("action value length".into()));
                }
                if v.iter().any(|s| s.field() != algebra.field) {
                    return Err(Error::MixedFields);
                }
            }
        }
        Ok(LieModule {
            algebra,
            dim,
            action,
        })
    }

    pub fn trivial(algebra: LieAlgebra, dim: usize) -> Self {
        let field = algebra.field;
        let action = vec![vec![zero_vec(field, dim); dim]; algebra.dim];
        LieModule::new(algebra, dim, action).unwrap()
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim;
        let action = (0..n)
            .map(|i| (0..n).map(|j| algebra.structure[i][j].clone()).collect())
            .collect();
        LieModule::new(algebra.clone(), n, action).unwrap()
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.action[i][j]
    }

    /// Bilinear action of a coefficient vector on a module vector.
    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let field = self.algebra.field;
        let mut out = zero_vec(field, self.dim);
        for i in 0..self.algebra.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &v[j];
                out = vec_add(&out, &vec_scale(&c, &self.action[i][j]));
            }
        }
        out
    }

    /// The action of x as a dim x dim matrix on the module.
    pub fn operator(&self, x: &[Scalar]) -> Matrix {
        let field = self.algebra.field;
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.act(x, &unit_vec(field, self.dim, j)))
            .collect();
        Matrix::from_cols(field, self.dim, &cols)
    }

    /// Module law on basis tuples; with `target` present, also the
    /// derivation law x.[m,n] = [x.m,n] + [m,x.n].
    pub fn validate_action(&self, target: Option<&LieAlgebra>) -> Vec<Violation> {
        let field = self.algebra.field;
        let n = self.algebra.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for v in 0..self.dim {
                    let ev = unit_vec(field, self.dim, v);
                    let lhs = self.act(self.algebra.bracket_basis(i, j), &ev);
                    let xi = unit_vec(field, n, i);
                    let xj = unit_vec(field, n, j);
                    let rhs = vec_sub(
                        &self.act(&xi, &self.act(&xj, &ev)),
                        &self.act(&xj, &self.act(&xi, &ev)),
                    );
                    push_defect(
                        &mut out,
                        ViolationKind::ModuleLaw,
                        &[i, j, v],
                        vec_sub(&lhs, &rhs),
                    );
                }
            }
        }
        if let Some(m) = target {
            for i in 0..n {
                let xi = unit_vec(field, n, i);
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        let ea = unit_vec(field, self.dim, a);
                        let eb = unit_vec(field, self.dim, b);
                        let lhs = self.act(&xi, m.bracket_basis(a, b));
                        let rhs = vec_add(
                            &m.bracket(&self.act(&xi, &ea), &eb),
                            &m.bracket(&ea, &self.act(&xi, &eb)),
                        );
                        push_defect(
                            &mut out,
                            ViolationKind::DerivationLaw,
                            &[i, a, b],
                            vec_sub(&lhs, &rhs),
                        );
                    }
                }
            }
        }
        out
    }

    /// Stabilizer {x : x.k = 0 for all k} as a canonical subspace of the algebra.
    pub fn stabilizer(&self) -> Subspace {
        let field = self.algebra.field;
        let n = self.algebra.dim;
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for coord in 0..self.dim {
                let row: Vec<Scalar> = (0..n).map(|i| self.action[i][j][coord].clone()).collect();
                rows.push(row);
            }
        }
        let m = if rows.is_empty() {
            Matrix::zero(field, 0, n)
        } else {
            Matrix::from_rows(field, rows).unwrap()
        };
        kernel(&m)
    }
}

/// (Z(L), st_K(L), Z_K(L)) for an L-module K.
pub fn restricted_centre(l: &LieAlgebra, k: &LieModule) -> (Subspace, Subspace, Subspace) {
    let z = l.centre();
    let st = k.stabilizer();
    let zk = z.intersect(&st);
    (z, st, zk)
}

/// Quotient Lie algebra L/I with its projection data.
/// Fails with a witness pair when I is not an ideal.
pub fn quotient_lie(l: &LieAlgebra, ideal: &Subspace) -> Result<(LieAlgebra, QuotientSpace), Error> {
    let field = l.field;
    for i in 0..l.dim {
        let ei = unit_vec(field, l.dim, i);
        for r in 0..ideal.dim() {
            let v = l.bracket(&ei, &ideal.basis.row(r));
            if !ideal.contains(&v) {
                return Err(Error::NotAnIdeal {
                    algebra_index: i,
                    ideal_index: r,
                });
            }
        }
    }
    let q = quotient(l.dim, ideal);
    let qd = q.dim();
    let mut labels = Vec::with_capacity(qd);
    for a in 0..qd {
        // section columns are standard vectors; name the class by its representative
        let col = q.section.col(a);
        let j = col.iter().position(|s| s.is_one()).unwrap_or(a);
        labels.push(format!("cl({})", l.labels[j]));
    }
    let mut brackets = Vec::new();
    for a in 0..qd {
        for b in (a + 1)..qd {
            let v = q.project(&l.bracket(&q.lift(&unit_vec(field, qd, a)), &q.lift(&unit_vec(field, qd, b))));
            brackets.push((a, b, v));
        }
    }
    let quot = LieAlgebra::new(field, labels, &brackets)?;
    // projection must be a Lie homomorphism on basis pairs
    for i in 0..l.dim {
        for j in 0..l.dim {
            let lhs = q.project(l.bracket_basis(i, j));
            let rhs = quot.bracket(
                &q.project(&unit_vec(field, l.dim, i)),
                &q.project(&unit_vec(field, l.dim, j)),
            );
            debug_assert!(vec_is_zero(&vec_sub(&lhs, &rhs)), "projection not a hom");
        }
    }
    Ok((quot, q))
}

// ---- standard examples used throughout the tests and catalog ----

fn lbls(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h (basis order h, e, f).
pub fn sl2(field: FieldSpec) -> LieAlgebra {
    let v = |a: &[i64]| a.iter().map(|&n| field.from_i64(n)).collect::<Vec<_>>();
    LieAlgebra::new(
        field,
        lbls(&["h", "e", "f"]),
        &[
            (0, 1, v(&[0, 2, 0])),
            (0, 2, v(&[0, 0, -2])),
            (1, 2, v(&[1, 0, 0])),
        ],
    )
    .unwrap()
}

/// Heisenberg h3: [e,f] = z (basis order e, f, z).
pub fn heisenberg(field: FieldSpec) -> LieAlgebra {
    let v = |a: &[i64]| a.iter().map(|&n| field.from_i64(n)).collect::<Vec<_>>();
    LieAlgebra::new(field, lbls(&["e", "f", "z"]), &[(0, 1, v(&[0, 0, 1]))]).unwrap()
}

/// The 2-dimensional nonabelian algebra b2: [e,f] = f.
pub fn borel2(field: FieldSpec) -> LieAlgebra {
    let v = |a: &[i64]| a.iter().map(|&n| field.from_i64(n)).collect::<Vec<_>>();
    LieAlgebra::new(field, lbls(&["e", "f"]), &[(0, 1, v(&[0, 1]))]).unwrap()
}

/// Upper-triangular 2x2 matrices t2: basis d1, d2, n with
/// [d1,n] = n, [d2,n] = -n.
pub fn upper_triangular2(field: FieldSpec) -> LieAlgebra {
    let v = |a: &[i64]| a.iter().map(|&n| field.from_i64(n)).collect::<Vec<_>>();
    LieAlgebra::new(
        field,
        lbls(&["d1", "d2", "n"]),
        &[(0, 2, v(&[0, 0, 1])), (1, 2, v(&[0, 0, -1]))],
    )
    .unwrap()
}

pub fn abelian_n(field: FieldSpec, n: usize) -> LieAlgebra {
    let labels = (0..n).map(|i| format!("a{i}")).collect();
    LieAlgebra::abelian(field, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_from_i64;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn validate_examples() {
        assert!(abelian_n(Q, 4).validate().is_empty());
        assert!(sl2(Q).validate().is_empty());
        assert!(heisenberg(Q).validate().is_empty());
        assert!(borel2(Q).validate().is_empty());
        assert!(upper_triangular2(Q).validate().is_empty());

        // perturb the (e,f) entry of sl2 to h + e: Jacobi breaks
        let v = |a: &[i64]| vec_from_i64(Q, a);
        let bad = LieAlgebra::new(
            Q,
            vec!["h".into(), "e".into(), "f".into()],
            &[
                (0, 1, v(&[0, 2, 0])),
                (0, 2, v(&[0, 0, -2])),
                (1, 2, v(&[1, 1, 0])),
            ],
        )
        .unwrap();
        let violations = bad.validate();
        assert!(violations
            .iter()
            .any(|v| v.kind == ViolationKind::Jacobi && v.indices == vec![0, 1, 2]));
    }

    #[test]
    fn validate_actions() {
        let l = sl2(Q);
        assert!(LieModule::trivial(l.clone(), 2)
            .validate_action(None)
            .is_empty());
        let adj = LieModule::adjoint(&l);
        // module law for the adjoint action is the Jacobi identity
        assert!(adj.validate_action(Some(&l)).is_empty());

        // flip one sign in the adjoint action
        let mut tensor: Vec<Vec<Vec<Scalar>>> = (0..3)
            .map(|i| (0..3).map(|j| adj.act_basis(i, j).to_vec()).collect())
            .collect();
        tensor[0][1] = vec_from_i64(Q, &[0, -2, 0]);
        let bad = LieModule::new(l.clone(), 3, tensor).unwrap();
        assert!(!bad.validate_action(Some(&l)).is_empty());
    }

    #[test]
    fn restricted_centre_examples() {
        // abelian L, trivial K: all three full
        let l = abelian_n(Q, 3);
        let k = LieModule::trivial(l.clone(), 2);
        let (z, st, zk) = restricted_centre(&l, &k);
        assert_eq!((z.dim(), st.dim(), zk.dim()), (3, 3, 3));

        // sl2, adjoint: all zero
        let l = sl2(Q);
        let k = LieModule::adjoint(&l);
        let (z, st, zk) = restricted_centre(&l, &k);
        assert_eq!((z.dim(), st.dim(), zk.dim()), (0, 0, 0));

        // heisenberg, trivial module: Z = span{z}, st = L
        let l = heisenberg(Q);
        let k = LieModule::trivial(l.clone(), 1);
        let (z, st, zk) = restricted_centre(&l, &k);
        assert_eq!((z.dim(), st.dim(), zk.dim()), (1, 3, 1));
        assert!(z.contains(&vec_from_i64(Q, &[0, 0, 1])));
    }

    #[test]
    fn zk_two_routes_agree() {
        // intersection of kernels vs kernel of the stacked system
        for l in [sl2(Q), heisenberg(Q), borel2(Q)] {
            let k = LieModule::adjoint(&l);
            let (_, _, zk) = restricted_centre(&l, &k);
            // stacked: centre rows then stabilizer rows
            let n = l.dim;
            let mut rows = Vec::new();
            for j in 0..n {
                for coord in 0..n {
                    rows.push(
                        (0..n)
                            .map(|i| l.bracket_basis(i, j)[coord].clone())
                            .collect::<Vec<_>>(),
                    );
                }
            }
            for j in 0..k.dim {
                for coord in 0..k.dim {
                    rows.push((0..n).map(|i| k.act_basis(i, j)[coord].clone()).collect());
                }
            }
            let m = Matrix::from_rows(Q, rows).unwrap();
            assert_eq!(zk, kernel(&m));
        }
    }

    #[test]
    fn quotient_lie_examples() {
        let l = sl2(Q);
        let zero = Subspace::zero(Q, 3);
        let (q, _) = quotient_lie(&l, &zero).unwrap();
        assert_eq!(q.dim, 3);
        assert!(q.validate().is_empty());

        // h3 / span{z} is 2-dim abelian
        let h = heisenberg(Q);
        let z = Subspace::span(Q, 3, vec![vec_from_i64(Q, &[0, 0, 1])]);
        let (q, proj) = quotient_lie(&h, &z).unwrap();
        assert_eq!(q.dim, 2);
        assert!(q.validate().is_empty());
        for i in 0..2 {
            for j in 0..2 {
                assert!(vec_is_zero(q.bracket_basis(i, j)));
            }
        }
        assert!(vec_is_zero(&proj.project(&vec_from_i64(Q, &[0, 0, 5]))));

        // span{e} is not an ideal of sl2
        let e = Subspace::span(Q, 3, vec![vec_from_i64(Q, &[0, 1, 0])]);
        assert!(matches!(
            quotient_lie(&l, &e),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn multilinearity_spot_check() {
        // bracket of combinations agrees with bilinear expansion from basis values
        let l = sl2(Q);
        let u = vec_from_i64(Q, &[1, 2, -1]);
        let v = vec_from_i64(Q, &[0, 3, 5]);
        let mut expect = zero_vec(Q, 3);
        for i in 0..3 {
            for j in 0..3 {
                let c = &u[i] * &v[j];
                expect = vec_add(&expect, &vec_scale(&c, l.bracket_basis(i, j)));
            }
        }
        assert_eq!(l.bracket(&u, &v), expect);
    }
}
