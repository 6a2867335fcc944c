//! Crossed and braided crossed modules of Lie algebras, their validators
//! (both axiom systems of each), and the homotopy invariants π₀, π₁.

use crate::lie::{push_defect, quotient_lie, LieAlgebra, LieModule, Violation, ViolationKind};
use crate::linalg::{image, kernel, QuotientSpace, Subspace};
use crate::matrix::{unit_vec, vec_add, vec_is_zero, vec_sub, zero_vec, Matrix};
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

/// A crossed module ∂ : L1 -> L0 with an action of L0 on L1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub l0: LieAlgebra,
    pub l1: LieAlgebra,
    /// dim L0 x dim L1; column j is the image of the j-th L1 basis vector.
    pub boundary: Matrix,
    /// action[i][j] = coefficients of x_i . a_j in the L1 basis.
    action: Vec<Vec<Vec<Scalar>>>,
}

impl CrossedModule {
    pub fn new(
        l0: LieAlgebra,
        l1: LieAlgebra,
        boundary: Matrix,
        action: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, Error> {
        if l0.field != l1.field || boundary.field != l0.field {
            return Err(Error::MixedFields);
        }
        if boundary.rows != l0.dim || boundary.cols != l1.dim {
            return Err(Error::Dimension(format!(
                "boundary is {}x{}, expected {}x{}",
                boundary.rows, boundary.cols, l0.dim, l1.dim
            )));
        }
        if action.len() != l0.dim || action.iter().any(|r| r.len() != l1.dim) {
            return Err(Error::Dimension("action tensor shape".into()));
        }
        for row in &action {
            for v in row {
                if v.len() != l1.dim {
                    return Err(Error::Dimension("action value length".into()));
                }
                if v.iter().any(|s| s.field() != l0.field) {
                    return Err(Error::MixedFields);
                }
            }
        }
        Ok(CrossedModule {
            l0,
            l1,
            boundary,
            action,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.l0.field
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.action[i][j]
    }

    /// Bilinear action of x in L0 on a in L1.
    pub fn act(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = zero_vec(field, self.l1.dim);
        for i in 0..self.l0.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.l1.dim {
                if a[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &a[j];
                out = vec_add(&out, &crate::matrix::vec_scale(&c, &self.action[i][j]));
            }
        }
        out
    }

    pub fn boundary_of(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.boundary.mul_vec(a)
    }

    pub fn action_tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.action.clone()
    }

    /// The action as an abstract L0-module structure on L1.
    pub fn action_module(&self) -> LieModule {
        LieModule::new(self.l0.clone(), self.l1.dim, self.action.clone()).unwrap()
    }

    /// The primary axiom system: ∂ a Lie homomorphism, equivariance (the
    /// boundary of x.a is [x, ∂a]) and the Peiffer identity ∂(a).b = [a,b].
    pub fn validate_primary(&self) -> Vec<Violation> {
        let field = self.field();
        let n1 = self.l1.dim;
        let mut out = Vec::new();
        for a in 0..n1 {
            for b in (a + 1)..n1 {
                let lhs = self.boundary_of(self.l1.bracket_basis(a, b));
                let rhs = self.l0.bracket(&self.boundary.col(a), &self.boundary.col(b));
                push_defect(
                    &mut out,
                    ViolationKind::BoundaryNotHom,
                    &[a, b],
                    vec_sub(&lhs, &rhs),
                );
            }
        }
        for i in 0..self.l0.dim {
            for a in 0..n1 {
                let lhs = self.boundary_of(&self.action[i][a]);
                let xi = unit_vec(field, self.l0.dim, i);
                let rhs = self.l0.bracket(&xi, &self.boundary.col(a));
                push_defect(
                    &mut out,
                    ViolationKind::Equivariance,
                    &[i, a],
                    vec_sub(&lhs, &rhs),
                );
            }
        }
        for a in 0..n1 {
            for b in 0..n1 {
                let eb = unit_vec(field, n1, b);
                let lhs = self.act(&self.boundary.col(a), &eb);
                let rhs = self.l1.bracket_basis(a, b).to_vec();
                push_defect(
                    &mut out,
                    ViolationKind::Peiffer,
                    &[a, b],
                    vec_sub(&lhs, &rhs),
                );
            }
        }
        out
    }

    /// The alternative axiom system: equivariance, the symmetric Peiffer
    /// identity ∂(a).b + ∂(b).a = 0, and agreement of the stored L1
    /// bracket with the one reconstructed as [a,b] := ∂(a).b.
    pub fn validate_alternative(&self) -> Vec<Violation> {
        let field = self.field();
        let n1 = self.l1.dim;
        let mut out = Vec::new();
        for i in 0..self.l0.dim {
            for a in 0..n1 {
                let lhs = self.boundary_of(&self.action[i][a]);
                let xi = unit_vec(field, self.l0.dim, i);
                let rhs = self.l0.bracket(&xi, &self.boundary.col(a));
                push_defect(
                    &mut out,
                    ViolationKind::Equivariance,
                    &[i, a],
                    vec_sub(&lhs, &rhs),
                );
            }
        }
        for a in 0..n1 {
            for b in a..n1 {
                let ea = unit_vec(field, n1, a);
                let eb = unit_vec(field, n1, b);
                let d = vec_add(
                    &self.act(&self.boundary.col(a), &eb),
                    &self.act(&self.boundary.col(b), &ea),
                );
                push_defect(&mut out, ViolationKind::PeifferSymmetry, &[a, b], d);
            }
        }
        for a in 0..n1 {
            for b in 0..n1 {
                let eb = unit_vec(field, n1, b);
                let reconstructed = self.act(&self.boundary.col(a), &eb);
                let d = vec_sub(&reconstructed, self.l1.bracket_basis(a, b));
                push_defect(&mut out, ViolationKind::BracketMismatch, &[a, b], d);
            }
        }
        out
    }

    /// Full validation: component axioms plus both crossed-module systems.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.l0.validate();
        out.extend(self.l1.validate());
        out.extend(self.action_module().validate_action(Some(&self.l1)));
        out.extend(self.validate_primary());
        out.extend(self.validate_alternative());
        out
    }

    /// π₀ = Coker ∂ (a Lie algebra), π₁ = Ker ∂ with its induced π₀-action.
    pub fn homotopy(&self) -> Result<HomotopyInvariants, Error> {
        let field = self.field();
        let im = image(&self.boundary);
        let (pi0, pi0_proj) = quotient_lie(&self.l0, &im)?;
        let pi1 = kernel(&self.boundary);
        // well-definedness: Im ∂ acts trivially on Ker ∂
        for r in 0..im.dim() {
            for v in 0..pi1.dim() {
                let w = self.act(&im.basis.row(r), &pi1.basis.row(v));
                if !vec_is_zero(&w) {
                    return Err(Error::InvalidInput(
                        "Im(boundary) does not annihilate Ker(boundary); induced action ill-defined"
                            .into(),
                    ));
                }
            }
        }
        // π₁ must be central in L1 (hence abelian)
        for a in 0..self.l1.dim {
            let ea = unit_vec(field, self.l1.dim, a);
            for v in 0..pi1.dim() {
                let w = self.l1.bracket(&ea, &pi1.basis.row(v));
                if !vec_is_zero(&w) {
                    return Err(Error::InvalidInput(
                        "Ker(boundary) is not central in L1".into(),
                    ));
                }
            }
        }
        let q1 = pi1.dim();
        let mut action = vec![vec![zero_vec(field, q1); q1]; pi0.dim];
        for a in 0..pi0.dim {
            let lift = pi0_proj.lift(&unit_vec(field, pi0.dim, a));
            for v in 0..q1 {
                let w = self.act(&lift, &pi1.basis.row(v));
                let coords = pi1.coordinates(&w).ok_or_else(|| {
                    Error::InvalidInput("action does not preserve Ker(boundary)".into())
                })?;
                action[a][v] = coords;
            }
        }
        let induced = LieModule::new(pi0.clone(), q1, action)?;
        Ok(HomotopyInvariants {
            pi0,
            pi0_proj,
            pi1,
            induced,
        })
    }

    /// Componentwise direct sum of two crossed modules.
    pub fn direct_sum(&self, other: &CrossedModule) -> CrossedModule {
        let field = self.field();
        assert_eq!(field, other.field());
        let l0 = direct_sum_algebra(&self.l0, &other.l0);
        let l1 = direct_sum_algebra(&self.l1, &other.l1);
        let mut boundary = Matrix::zero(field, l0.dim, l1.dim);
        for i in 0..self.boundary.rows {
            for j in 0..self.boundary.cols {
                boundary.set(i, j, self.boundary.get(i, j).clone());
            }
        }
        for i in 0..other.boundary.rows {
            for j in 0..other.boundary.cols {
                boundary.set(
                    self.boundary.rows + i,
                    self.boundary.cols + j,
                    other.boundary.get(i, j).clone(),
                );
            }
        }
        let (n0a, n1a) = (self.l0.dim, self.l1.dim);
        let mut action = vec![vec![zero_vec(field, l1.dim); l1.dim]; l0.dim];
        for i in 0..n0a {
            for j in 0..n1a {
                for (c, s) in self.action[i][j].iter().enumerate() {
                    action[i][j][c] = s.clone();
                }
            }
        }
        for i in 0..other.l0.dim {
            for j in 0..other.l1.dim {
                for (c, s) in other.action[i][j].iter().enumerate() {
                    action[n0a + i][n1a + j][n1a + c] = s.clone();
                }
            }
        }
        CrossedModule::new(l0, l1, boundary, action).unwrap()
    }
}

fn direct_sum_algebra(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let field = a.field;
    let dim = a.dim + b.dim;
    let mut labels = Vec::with_capacity(dim);
    labels.extend(a.labels.iter().map(|l| format!("{l}'")));
    labels.extend(b.labels.iter().map(|l| format!("{l}''")));
    let mut brackets = Vec::new();
    for i in 0..a.dim {
        for j in (i + 1)..a.dim {
            let mut v = zero_vec(field, dim);
            for (c, s) in a.bracket_basis(i, j).iter().enumerate() {
                v[c] = s.clone();
            }
            brackets.push((i, j, v));
        }
    }
    for i in 0..b.dim {
        for j in (i + 1)..b.dim {
            let mut v = zero_vec(field, dim);
            for (c, s) in b.bracket_basis(i, j).iter().enumerate() {
                v[a.dim + c] = s.clone();
            }
            brackets.push((a.dim + i, a.dim + j, v));
        }
    }
    LieAlgebra::new(field, labels, &brackets).unwrap()
}

/// π₀ with its projection, π₁ with its inclusion, and the induced action.
#[derive(Debug, Clone)]
pub struct HomotopyInvariants {
    pub pi0: LieAlgebra,
    /// cl : L0 -> π₀.
    pub pi0_proj: QuotientSpace,
    /// Ker ∂ as a subspace of L1.
    pub pi1: Subspace,
    /// π₀-module structure on π₁ (coordinates in the π₁ basis).
    pub induced: LieModule,
}

/// A braided crossed module: ∂ : L1 -> L0 with a braiding {x,y} in L1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedCrossedModule {
    pub l0: LieAlgebra,
    pub l1: LieAlgebra,
    pub boundary: Matrix,
    /// braiding[i][j] = coefficients of {x_i, x_j} in the L1 basis.
    braiding: Vec<Vec<Vec<Scalar>>>,
}

impl BraidedCrossedModule {
    pub fn new(
        l0: LieAlgebra,
        l1: LieAlgebra,
        boundary: Matrix,
        braiding: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, Error> {
        if l0.field != l1.field || boundary.field != l0.field {
            return Err(Error::MixedFields);
        }
        if boundary.rows != l0.dim || boundary.cols != l1.dim {
            return Err(Error::Dimension("boundary shape".into()));
        }
        if braiding.len() != l0.dim
            || braiding
                .iter()
                .any(|r| r.len() != l0.dim || r.iter().any(|v| v.len() != l1.dim))
        {
            return Err(Error::Dimension("braiding tensor shape".into()));
        }
        Ok(BraidedCrossedModule {
            l0,
            l1,
            boundary,
            braiding,
        })
    }

    /// The alternative presentation: only ∂ and the braiding are given;
    /// the brackets are installed as [x,y] := ∂{x,y} and [a,b] := {∂a, ∂b}.
    pub fn from_boundary_braiding(
        field: FieldSpec,
        l0_labels: Vec<String>,
        l1_labels: Vec<String>,
        boundary: Matrix,
        braiding: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, Error> {
        let n0 = l0_labels.len();
        let n1 = l1_labels.len();
        if braiding.len() != n0
            || braiding
                .iter()
                .any(|r| r.len() != n0 || r.iter().any(|v| v.len() != n1))
        {
            return Err(Error::Dimension("braiding tensor shape".into()));
        }
        let mut l0_brackets = Vec::new();
        for i in 0..n0 {
            for j in (i + 1)..n0 {
                l0_brackets.push((i, j, boundary.mul_vec(&braiding[i][j])));
            }
        }
        let l0 = LieAlgebra::new(field, l0_labels, &l0_brackets)?;
        let braid =
            |x: &[Scalar], y: &[Scalar]| bilinear_eval(field, n1, &braiding, x, y);
        let mut l1_brackets = Vec::new();
        for a in 0..n1 {
            for b in (a + 1)..n1 {
                l1_brackets.push((a, b, braid(&boundary.col(a), &boundary.col(b))));
            }
        }
        let l1 = LieAlgebra::new(field, l1_labels, &l1_brackets)?;
        BraidedCrossedModule::new(l0, l1, boundary, braiding)
    }

    pub fn field(&self) -> FieldSpec {
        self.l0.field
    }

    pub fn braid_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.braiding[i][j]
    }

    pub fn braid(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        bilinear_eval(self.field(), self.l1.dim, &self.braiding, x, y)
    }

    /// The four defining identities: ∂{x,y} = [x,y], {∂a,∂b} = [a,b],
    /// {∂a,x} + {x,∂a} = 0, and the braiding Jacobi identity.
    pub fn validate_defining(&self) -> Vec<Violation> {
        let field = self.field();
        let n0 = self.l0.dim;
        let n1 = self.l1.dim;
        let mut out = Vec::new();
        for i in 0..n0 {
            for j in 0..n0 {
                let d = vec_sub(
                    &self.boundary.mul_vec(&self.braiding[i][j]),
                    self.l0.bracket_basis(i, j),
                );
                push_defect(&mut out, ViolationKind::Braid20, &[i, j], d);
            }
        }
        for a in 0..n1 {
            for b in 0..n1 {
                let d = vec_sub(
                    &self.braid(&self.boundary.col(a), &self.boundary.col(b)),
                    self.l1.bracket_basis(a, b),
                );
                push_defect(&mut out, ViolationKind::Braid21, &[a, b], d);
            }
        }
        for a in 0..n1 {
            for i in 0..n0 {
                let xi = unit_vec(field, n0, i);
                let d = vec_add(
                    &self.braid(&self.boundary.col(a), &xi),
                    &self.braid(&xi, &self.boundary.col(a)),
                );
                push_defect(&mut out, ViolationKind::Braid22, &[a, i], d);
            }
        }
        for x in 0..n0 {
            for y in 0..n0 {
                for z in 0..n0 {
                    let ex = unit_vec(field, n0, x);
                    let ey = unit_vec(field, n0, y);
                    let ez = unit_vec(field, n0, z);
                    let mut d = self.braid(&ex, self.l0.bracket_basis(y, z));
                    d = vec_add(&d, &self.braid(&ez, self.l0.bracket_basis(x, y)));
                    d = vec_add(&d, &self.braid(&ey, self.l0.bracket_basis(z, x)));
                    push_defect(&mut out, ViolationKind::Braid23, &[x, y, z], d);
                }
            }
        }
        out
    }

    /// The reduced system: mixed symmetry, ∂{x,x} = 0, and the inner
    /// Jacobi identity {u,∂{v,w}} + {w,∂{u,v}} + {v,∂{w,u}} = 0.
    pub fn validate_reduced(&self) -> Vec<Violation> {
        let field = self.field();
        let n0 = self.l0.dim;
        let n1 = self.l1.dim;
        let mut out = Vec::new();
        for a in 0..n1 {
            for i in 0..n0 {
                let xi = unit_vec(field, n0, i);
                let d = vec_add(
                    &self.braid(&self.boundary.col(a), &xi),
                    &self.braid(&xi, &self.boundary.col(a)),
                );
                push_defect(&mut out, ViolationKind::Braid22, &[a, i], d);
            }
        }
        // ∂{x,x} = 0 for all x: on basis diagonals and polarized pairs
        for i in 0..n0 {
            for j in i..n0 {
                let d = if i == j {
                    self.boundary.mul_vec(&self.braiding[i][i])
                } else {
                    self.boundary
                        .mul_vec(&vec_add(&self.braiding[i][j], &self.braiding[j][i]))
                };
                push_defect(&mut out, ViolationKind::Braid24, &[i, j], d);
            }
        }
        for u in 0..n0 {
            for v in 0..n0 {
                for w in 0..n0 {
                    let eu = unit_vec(field, n0, u);
                    let ev = unit_vec(field, n0, v);
                    let ew = unit_vec(field, n0, w);
                    let mut d =
                        self.braid(&eu, &self.boundary.mul_vec(&self.braid(&ev, &ew)));
                    d = vec_add(
                        &d,
                        &self.braid(&ew, &self.boundary.mul_vec(&self.braid(&eu, &ev))),
                    );
                    d = vec_add(
                        &d,
                        &self.braid(&ev, &self.boundary.mul_vec(&self.braid(&ew, &eu))),
                    );
                    push_defect(&mut out, ViolationKind::Braid26, &[u, v, w], d);
                }
            }
        }
        out
    }

    /// Both braided axiom systems plus the component Lie axioms.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.l0.validate();
        out.extend(self.l1.validate());
        out.extend(self.validate_defining());
        out.extend(self.validate_reduced());
        out
    }

    /// The underlying crossed module, with action x.a = {x, ∂a}.
    pub fn underlying_crossed(&self) -> Result<CrossedModule, Error> {
        if !self.validate().is_empty() {
            return Err(Error::InvalidInput(
                "braided crossed module fails its axioms".into(),
            ));
        }
        let field = self.field();
        let n0 = self.l0.dim;
        let n1 = self.l1.dim;
        let mut action = vec![vec![zero_vec(field, n1); n1]; n0];
        for i in 0..n0 {
            let xi = unit_vec(field, n0, i);
            for (j, slot) in action[i].iter_mut().enumerate() {
                *slot = self.braid(&xi, &self.boundary.col(j));
            }
        }
        CrossedModule::new(self.l0.clone(), self.l1.clone(), self.boundary.clone(), action)
    }
}

pub(crate) fn bilinear_eval(
    field: FieldSpec,
    out_dim: usize,
    tensor: &[Vec<Vec<Scalar>>],
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let mut out = zero_vec(field, out_dim);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            out = vec_add(&out, &crate::matrix::vec_scale(&c, &tensor[i][j]));
        }
    }
    out
}
