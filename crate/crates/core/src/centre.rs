//! The centre of a crossed module: the carrier Z0(L*) of pairs (x, ξ),
//! the braided crossed module δ : L1 -> Z0, the Lie structure on Z0, the
//! L0-action making z0 : Z0 -> L0 a crossed module, and the six-term
//! homotopy sequence tying everything together.

use crate::crossed::{BraidedCrossedModule, CrossedModule};
use crate::lie::{quotient_lie, LieAlgebra};
use crate::linalg::{image, kernel, quotient, QuotientSpace, Subspace};
use crate::matrix::{unit_vec, vec_neg, zero_vec, Matrix};
use crate::scalar::Scalar;
use crate::Error;

/// A pair (x, ξ) with x in L0 and ξ : L0 -> L1 linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreElement {
    pub x: Vec<Scalar>,
    /// dim L1 x dim L0; column t is ξ(e_t).
    pub xi: Matrix,
}

/// The solution space of ZE1-ZE3 inside L0 ⊕ Hom(L0, L1).
///
/// Coordinates: the x part first, then the ξ entries column-major
/// (all of ξ(e_0), then ξ(e_1), ...).
#[derive(Debug, Clone)]
pub struct CentreCarrier {
    pub n0: usize,
    pub n1: usize,
    pub basis: Subspace,
}

impl CentreCarrier {
    pub fn ambient_dim(&self) -> usize {
        self.n0 + self.n0 * self.n1
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn decode(&self, coords: &[Scalar]) -> CentreElement {
        assert_eq!(coords.len(), self.ambient_dim());
        let field = self.basis.field();
        let x = coords[0..self.n0].to_vec();
        let mut xi = Matrix::zero(field, self.n1, self.n0);
        for t in 0..self.n0 {
            for r in 0..self.n1 {
                xi.set(r, t, coords[self.n0 + t * self.n1 + r].clone());
            }
        }
        CentreElement { x, xi }
    }

    pub fn encode(&self, e: &CentreElement) -> Vec<Scalar> {
        assert_eq!(e.x.len(), self.n0);
        assert_eq!((e.xi.rows, e.xi.cols), (self.n1, self.n0));
        let mut out = e.x.clone();
        for t in 0..self.n0 {
            for r in 0..self.n1 {
                out.push(e.xi.get(r, t).clone());
            }
        }
        out
    }

    pub fn contains(&self, e: &CentreElement) -> bool {
        self.basis.contains(&self.encode(e))
    }

    /// Coordinates in the canonical carrier basis; None if not a member.
    pub fn coordinates(&self, e: &CentreElement) -> Option<Vec<Scalar>> {
        self.basis.coordinates(&self.encode(e))
    }

    pub fn basis_element(&self, k: usize) -> CentreElement {
        self.decode(&self.basis.basis.row(k))
    }
}

/// Defects of the three defining identities for a single pair, evaluated
/// directly (used for membership errors and as an independent check).
pub fn element_defects(x: &CrossedModule, e: &CentreElement) -> Vec<Vec<Scalar>> {
    let field = x.field();
    let n0 = x.l0.dim;
    let n1 = x.l1.dim;
    let mut out = Vec::new();
    for t in 0..n0 {
        let et = unit_vec(field, n0, t);
        let d = crate::matrix::vec_sub(&x.boundary_of(&e.xi.col(t)), &x.l0.bracket(&e.x, &et));
        out.push(d);
    }
    for a in 0..n1 {
        let ea = unit_vec(field, n1, a);
        let d = crate::matrix::vec_sub(
            &e.xi.mul_vec(&x.boundary.col(a)),
            &x.act(&e.x, &ea),
        );
        out.push(d);
    }
    for s in 0..n0 {
        for t in (s + 1)..n0 {
            let es = unit_vec(field, n0, s);
            let et = unit_vec(field, n0, t);
            let lhs = e.xi.mul_vec(x.l0.bracket_basis(s, t));
            let rhs = crate::matrix::vec_sub(&x.act(&es, &e.xi.col(t)), &x.act(&et, &e.xi.col(s)));
            out.push(crate::matrix::vec_sub(&lhs, &rhs));
        }
    }
    out.retain(|d| !crate::matrix::vec_is_zero(d));
    out
}

/// Canonical basis of Z0(L*): one stacked kernel of the linear system
/// ZE1 (per basis t), ZE2 (per L1 basis a) and ZE3 (per pair s < t).
pub fn centre_carrier(x: &CrossedModule) -> CentreCarrier {
    pair_carrier(x, true)
}

/// Solution space of ZE1 and ZE3, optionally also ZE2.
pub(crate) fn pair_carrier(x: &CrossedModule, with_ze2: bool) -> CentreCarrier {
    let field = x.field();
    let n0 = x.l0.dim;
    let n1 = x.l1.dim;
    let unknowns = n0 + n0 * n1;
    let xi_idx = |t: usize, r: usize| n0 + t * n1 + r;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // ZE1: ∂ξ(t) - [x, t] = 0, one row per (t, L0 coordinate)
    for t in 0..n0 {
        for c in 0..n0 {
            let mut row = zero_vec(field, unknowns);
            for r in 0..n1 {
                row[xi_idx(t, r)] = x.boundary.get(c, r).clone();
            }
            for i in 0..n0 {
                row[i] = &row[i] - &x.l0.bracket_basis(i, t)[c];
            }
            rows.push(row);
        }
    }
    // ZE2: ξ(∂a) - x.a = 0, one row per (a, L1 coordinate)
    if with_ze2 {
        for a in 0..n1 {
            for r in 0..n1 {
                let mut row = zero_vec(field, unknowns);
                for t in 0..n0 {
                    row[xi_idx(t, r)] = &row[xi_idx(t, r)] + x.boundary.get(t, a);
                }
                for i in 0..n0 {
                    row[i] = &row[i] - &x.act_basis(i, a)[r];
                }
                rows.push(row);
            }
        }
    }
    // ZE3: ξ([s,t]) - s.ξ(t) + t.ξ(s) = 0, pairs s < t only
    for s in 0..n0 {
        for t in (s + 1)..n0 {
            for r in 0..n1 {
                let mut row = zero_vec(field, unknowns);
                let st = x.l0.bracket_basis(s, t);
                for w in 0..n0 {
                    row[xi_idx(w, r)] = &row[xi_idx(w, r)] + &st[w];
                }
                for rp in 0..n1 {
                    row[xi_idx(t, rp)] = &row[xi_idx(t, rp)] - &x.act_basis(s, rp)[r];
                    row[xi_idx(s, rp)] = &row[xi_idx(s, rp)] + &x.act_basis(t, rp)[r];
                }
                rows.push(row);
            }
        }
    }
    let m = if rows.is_empty() {
        Matrix::zero(field, 0, unknowns)
    } else {
        Matrix::from_rows(field, rows).unwrap()
    };
    CentreCarrier {
        n0,
        n1,
        basis: kernel(&m),
    }
}

/// δ(c) = (∂c, ξ_c) with ξ_c(t) = -t.c.
pub fn delta(x: &CrossedModule, c: &[Scalar]) -> CentreElement {
    let field = x.field();
    let n0 = x.l0.dim;
    let cols: Vec<Vec<Scalar>> = (0..n0)
        .map(|t| vec_neg(&x.act(&unit_vec(field, n0, t), c)))
        .collect();
    CentreElement {
        x: x.boundary_of(c),
        xi: Matrix::from_cols(field, x.l1.dim, &cols),
    }
}

/// The structural braiding {(x,ξ),(y,η)} = ξ(y).
pub fn braiding(
    x: &CrossedModule,
    carrier: &CentreCarrier,
    p: &CentreElement,
    q: &CentreElement,
) -> Result<Vec<Scalar>, Error> {
    let _ = x;
    if !carrier.contains(p) || !carrier.contains(q) {
        return Err(Error::ElementNotInCentre);
    }
    Ok(p.xi.mul_vec(&q.x))
}

/// [(x,ξ),(y,η)] = ([x,y], t -> -t.ξ(y)). The result is in Z0, and the
/// three equivalent expressions for the second component agree.
pub fn z0_bracket(
    x: &CrossedModule,
    carrier: &CentreCarrier,
    p: &CentreElement,
    q: &CentreElement,
) -> Result<CentreElement, Error> {
    if !carrier.contains(p) || !carrier.contains(q) {
        return Err(Error::ElementNotInCentre);
    }
    let field = x.field();
    let n0 = x.l0.dim;
    let xi_y = p.xi.mul_vec(&q.x);
    let cols: Vec<Vec<Scalar>> = (0..n0)
        .map(|t| vec_neg(&x.act(&unit_vec(field, n0, t), &xi_y)))
        .collect();
    let out = CentreElement {
        x: x.l0.bracket(&p.x, &q.x),
        xi: Matrix::from_cols(field, x.l1.dim, &cols),
    };
    debug_assert!(carrier.contains(&out), "bracket left the centre");
    Ok(out)
}

/// The three expressions of the bracket lemma at basis direction t:
/// -t.ξ(y), ξ([y,t]) - η([x,t]), t.η(x).
pub fn lemma_triple(
    x: &CrossedModule,
    p: &CentreElement,
    q: &CentreElement,
    t: usize,
) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    let field = x.field();
    let et = unit_vec(field, x.l0.dim, t);
    let first = vec_neg(&x.act(&et, &p.xi.mul_vec(&q.x)));
    let second = crate::matrix::vec_sub(
        &p.xi.mul_vec(&x.l0.bracket(&q.x, &et)),
        &q.xi.mul_vec(&x.l0.bracket(&p.x, &et)),
    );
    let third = x.act(&et, &q.xi.mul_vec(&p.x));
    (first, second, third)
}

/// Everything derived from the centre of one crossed module.
#[derive(Debug, Clone)]
pub struct CentreSuite {
    pub carrier: CentreCarrier,
    /// Z0 with the bracket [(x,ξ),(y,η)] = ([x,y], -t.ξ(y)), in carrier coords.
    pub z0_algebra: LieAlgebra,
    /// δ : L1 -> Z0 in carrier coordinates (dim Z0 x dim L1).
    pub delta_matrix: Matrix,
    /// The braided crossed module δ : L1 -> Z0.
    pub bcm: BraidedCrossedModule,
    /// z0 : Z0 -> L0 with the action y.(x,ξ) = ([y,x], t.ξ(y)).
    pub quotient_xm: CrossedModule,
    /// z0 as a matrix (dim L0 x dim Z0).
    pub z0_matrix: Matrix,
    /// π₁(Z*) = Ker δ, a subspace of L1.
    pub pi1z: Subspace,
    /// π₀(Z*) = Z0 / Im δ with the induced bracket.
    pub pi0z_algebra: LieAlgebra,
    pub pi0z_proj: QuotientSpace,
}

/// Assemble the full centre package. Input must be a valid crossed module.
pub fn centre_suite(x: &CrossedModule) -> Result<CentreSuite, Error> {
    let field = x.field();
    let carrier = centre_carrier(x);
    let m = carrier.dim();
    let elems: Vec<CentreElement> = (0..m).map(|k| carrier.basis_element(k)).collect();

    // Lie structure on Z0 in carrier coordinates
    let mut brackets = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            let e = z0_bracket(x, &carrier, &elems[a], &elems[b])?;
            let coords = carrier
                .coordinates(&e)
                .ok_or_else(|| Error::InvalidInput("Z0 bracket not closed".into()))?;
            brackets.push((a, b, coords));
        }
    }
    let labels = (0..m).map(|k| format!("zeta{k}")).collect();
    let z0_algebra = LieAlgebra::new(field, labels, &brackets)?;

    // δ in carrier coordinates
    let delta_cols: Vec<Vec<Scalar>> = (0..x.l1.dim)
        .map(|a| {
            let d = delta(x, &unit_vec(field, x.l1.dim, a));
            carrier
                .coordinates(&d)
                .ok_or_else(|| Error::InvalidInput("δ image misses Z0".into()))
        })
        .collect::<Result<_, _>>()?;
    let delta_matrix = Matrix::from_cols(field, m, &delta_cols);

    // braiding tensor on the Z0 basis
    let braid_tensor: Vec<Vec<Vec<Scalar>>> = (0..m)
        .map(|a| (0..m).map(|b| elems[a].xi.mul_vec(&elems[b].x)).collect())
        .collect();
    let bcm = BraidedCrossedModule::new(
        z0_algebra.clone(),
        x.l1.clone(),
        delta_matrix.clone(),
        braid_tensor,
    )?;

    // z0 : Z0 -> L0 with the quotient action
    let z0_cols: Vec<Vec<Scalar>> = elems.iter().map(|e| e.x.clone()).collect();
    let z0_matrix = Matrix::from_cols(field, x.l0.dim, &z0_cols);
    let mut action = vec![vec![zero_vec(field, m); m]; x.l0.dim];
    for j in 0..x.l0.dim {
        let y = unit_vec(field, x.l0.dim, j);
        for (a, elem) in elems.iter().enumerate() {
            let xi_y = elem.xi.mul_vec(&y);
            let cols: Vec<Vec<Scalar>> = (0..x.l0.dim)
                .map(|t| x.act(&unit_vec(field, x.l0.dim, t), &xi_y))
                .collect();
            let acted = CentreElement {
                x: x.l0.bracket(&y, &elem.x),
                xi: Matrix::from_cols(field, x.l1.dim, &cols),
            };
            action[j][a] = carrier
                .coordinates(&acted)
                .ok_or_else(|| Error::InvalidInput("L0 action leaves Z0".into()))?;
        }
    }
    let quotient_xm = CrossedModule::new(x.l0.clone(), z0_algebra.clone(), z0_matrix.clone(), action)?;

    let pi1z = kernel(&delta_matrix);
    let im_delta = image(&delta_matrix);
    let (pi0z_algebra, pi0z_proj) = quotient_lie(&z0_algebra, &im_delta)?;

    Ok(CentreSuite {
        carrier,
        z0_algebra,
        delta_matrix,
        bcm,
        quotient_xm,
        z0_matrix,
        pi1z,
        pi0z_algebra,
        pi0z_proj,
    })
}

/// One node of an exactness report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceNode {
    pub name: String,
    pub dim: usize,
    /// 0 means Im(incoming) = Ker(outgoing) at this node.
    pub defect: usize,
}

#[derive(Debug, Clone)]
pub struct ExactnessReport {
    pub nodes: Vec<SequenceNode>,
    /// Kernel dimension of the first map (0 = injective).
    pub start_kernel_dim: usize,
    /// Codimension of the last map's image (0 = surjective).
    pub end_cokernel_dim: usize,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.start_kernel_dim == 0
            && self.end_cokernel_dim == 0
            && self.nodes.iter().all(|n| n.defect == 0)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.dim).collect()
    }
}

/// Defect between Im(f) and Ker(g): 0 iff they are equal subspaces.
pub fn exactness_defect(im_f: &Subspace, ker_g: &Subspace) -> usize {
    let inter = im_f.intersect(ker_g);
    (im_f.dim() - inter.dim()) + (ker_g.dim() - inter.dim())
}

/// Verify the six-term sequence
/// 0 -> π₁(Z) -> π₁(L) -> π₁(L//Z) -> π₀(Z) -> π₀(L) -> π₀(L//Z) -> 0.
pub fn six_term_report(x: &CrossedModule) -> Result<ExactnessReport, Error> {
    let field = x.field();
    let suite = centre_suite(x)?;
    let h = x.homotopy()?;
    let pi1l = &h.pi1; // Ker ∂ in L1
    let pi0l = &h.pi0_proj; // L0 / Im ∂
    let pi1_lz = kernel(&suite.z0_matrix); // Ker z0 in Z0 coords
    let im_z0 = image(&suite.z0_matrix);
    let pi0_lz = quotient(x.l0.dim, &im_z0); // L0 / Im z0

    // each map as a matrix between the objects' coordinate spaces
    let m1 = map_matrix(field, suite.pi1z.dim(), pi1l.dim(), |k| {
        pi1l.coordinates(&suite.pi1z.basis.row(k))
            .ok_or_else(|| Error::InvalidInput("π₁(Z) not inside π₁(L)".into()))
    })?;
    let m2 = map_matrix(field, pi1l.dim(), pi1_lz.dim(), |k| {
        let d = delta(x, &pi1l.basis.row(k));
        let coords = suite
            .carrier
            .coordinates(&d)
            .ok_or_else(|| Error::InvalidInput("δ image misses Z0".into()))?;
        pi1_lz
            .coordinates(&coords)
            .ok_or_else(|| Error::InvalidInput("δ(π₁L) misses Ker z0".into()))
    })?;
    let m3 = map_matrix(field, pi1_lz.dim(), suite.pi0z_proj.dim(), |k| {
        Ok(suite.pi0z_proj.project(&pi1_lz.basis.row(k)))
    })?;
    let m4 = map_matrix(field, suite.pi0z_proj.dim(), pi0l.dim(), |k| {
        let z0_coords = suite.pi0z_proj.lift(&unit_vec(field, suite.pi0z_proj.dim(), k));
        Ok(pi0l.project(&suite.z0_matrix.mul_vec(&z0_coords)))
    })?;
    let m5 = map_matrix(field, pi0l.dim(), pi0_lz.dim(), |k| {
        Ok(pi0_lz.project(&pi0l.lift(&unit_vec(field, pi0l.dim(), k))))
    })?;

    let node = |name: &str, dim: usize, f: &Matrix, g: &Matrix| SequenceNode {
        name: name.to_string(),
        dim,
        defect: exactness_defect(&image(f), &kernel(g)),
    };
    let nodes = vec![
        SequenceNode {
            name: "pi1(Z)".into(),
            dim: suite.pi1z.dim(),
            defect: 0,
        },
        node("pi1(L)", pi1l.dim(), &m1, &m2),
        node("pi1(L//Z)", pi1_lz.dim(), &m2, &m3),
        node("pi0(Z)", suite.pi0z_proj.dim(), &m3, &m4),
        node("pi0(L)", pi0l.dim(), &m4, &m5),
        SequenceNode {
            name: "pi0(L//Z)".into(),
            dim: pi0_lz.dim(),
            defect: 0,
        },
    ];
    Ok(ExactnessReport {
        nodes,
        start_kernel_dim: kernel(&m1).dim(),
        end_cokernel_dim: pi0_lz.dim() - crate::linalg::rank(&m5),
    })
}

fn map_matrix<F>(
    field: crate::scalar::FieldSpec,
    domain_dim: usize,
    codomain_dim: usize,
    mut col: F,
) -> Result<Matrix, Error>
where
    F: FnMut(usize) -> Result<Vec<Scalar>, Error>,
{
    let mut cols = Vec::with_capacity(domain_dim);
    for k in 0..domain_dim {
        cols.push(col(k)?);
    }
    Ok(Matrix::from_cols(field, codomain_dim, &cols))
}
