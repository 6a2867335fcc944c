//! The Lie 2-algebra attached to a crossed module: the category whose
//! objects are L0 and whose morphisms (x, a) : x -> ∂a + x compose by
//! addition in L1, together with its bracket bifunctor, the natural
//! families τ_y = -2ξ(y) attached to centre elements, and the
//! centre-category bracket and braiding laws.

use crate::centre::{z0_bracket, CentreCarrier, CentreElement};
use crate::crossed::CrossedModule;
use crate::matrix::{unit_vec, vec_add, vec_scale, vec_sub, Matrix};
use crate::scalar::Scalar;
use crate::Error;

/// A morphism (x, a) : x -> ∂a + x of the category attached to ∂ : L1 -> L0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatMorphism {
    pub source: Vec<Scalar>,
    pub label: Vec<Scalar>,
}

impl CatMorphism {
    pub fn target(&self, x: &CrossedModule) -> Vec<Scalar> {
        vec_add(&x.boundary_of(&self.label), &self.source)
    }
}

pub fn identity(x: &CrossedModule, object: &[Scalar]) -> CatMorphism {
    CatMorphism {
        source: object.to_vec(),
        label: crate::matrix::zero_vec(x.field(), x.l1.dim),
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Composition: (x, a) then (∂a + x, b) is (x, a + b).
pub fn compose(x: &CrossedModule, f: &CatMorphism, g: &CatMorphism) -> Result<CatMorphism, Error> {
    let t = f.target(x);
    if t != g.source {
        return Err(Error::NonComposable {
            lhs_target: fmt_vec(&t),
            rhs_source: fmt_vec(&g.source),
        });
    }
    Ok(CatMorphism {
        source: f.source.clone(),
        label: vec_add(&f.label, &g.label),
    })
}

/// [(x, a), (x', a')] = ([x, x'], ∂(a).a' - x'.a + x.a').
pub fn bracket_morphisms(x: &CrossedModule, f: &CatMorphism, g: &CatMorphism) -> CatMorphism {
    let da = x.boundary_of(&f.label);
    let label = vec_add(
        &vec_sub(&x.act(&da, &g.label), &x.act(&g.source, &f.label)),
        &x.act(&f.source, &g.label),
    );
    CatMorphism {
        source: x.l0.bracket(&f.source, &g.source),
        label,
    }
}

/// The scalar endofunctor: (x, a) ↦ (kx, ka).
pub fn scale_morphism(k: &Scalar, f: &CatMorphism) -> CatMorphism {
    CatMorphism {
        source: vec_scale(k, &f.source),
        label: vec_scale(k, &f.label),
    }
}

/// Addition of morphisms (the vector space structure of the category).
pub fn add_morphisms(f: &CatMorphism, g: &CatMorphism) -> CatMorphism {
    CatMorphism {
        source: vec_add(&f.source, &g.source),
        label: vec_add(&f.label, &g.label),
    }
}

pub fn sub_morphisms(f: &CatMorphism, g: &CatMorphism) -> CatMorphism {
    CatMorphism {
        source: vec_sub(&f.source, &g.source),
        label: vec_sub(&f.label, &g.label),
    }
}

/// τ_y = -2ξ(y) as a morphism [x, y] -> [y, x], for each basis object y.
pub fn tau_family(x: &CrossedModule, p: &CentreElement) -> Vec<CatMorphism> {
    let field = x.field();
    let minus_two = field.from_i64(-2);
    (0..x.l0.dim)
        .map(|y| {
            let ey = unit_vec(field, x.l0.dim, y);
            CatMorphism {
                source: x.l0.bracket(&p.x, &ey),
                label: vec_scale(&minus_two, &p.xi.mul_vec(&ey)),
            }
        })
        .collect()
}

/// Verdicts for the laws a τ-family must satisfy.
#[derive(Debug, Clone)]
pub struct TauLawReport {
    /// Every τ_y has source [x, y] and target [y, x].
    pub source_target_ok: bool,
    /// Naturality against every basis morphism (y, a).
    pub naturality_ok: bool,
    /// τ_{[y,z]} = y.τ_z - z.τ_y on all basis pairs.
    pub tau_bracket_ok: bool,
    /// τ_{[y,z]} = [id_y, τ_z] - [id_z, τ_y] as morphisms.
    pub taufr_ok: bool,
}

impl TauLawReport {
    pub fn all_pass(&self) -> bool {
        self.source_target_ok && self.naturality_ok && self.tau_bracket_ok && self.taufr_ok
    }
}

/// The τ laws for an arbitrary pair (x, ξ), without a centre-membership
/// gate; used both for centre elements and for negative tests.
pub fn tau_report(xm: &CrossedModule, x: &[Scalar], xi: &Matrix) -> TauLawReport {
    let field = xm.field();
    let n0 = xm.l0.dim;
    let n1 = xm.l1.dim;
    let p = CentreElement {
        x: x.to_vec(),
        xi: xi.clone(),
    };
    let tau = tau_family(xm, &p);
    let minus_two = field.from_i64(-2);

    let mut source_target_ok = true;
    for (y, t) in tau.iter().enumerate() {
        let ey = unit_vec(field, n0, y);
        if t.source != xm.l0.bracket(x, &ey) || t.target(xm) != xm.l0.bracket(&ey, x) {
            source_target_ok = false;
        }
    }

    // naturality: for a basis morphism (e_y, e_a) with z = ∂e_a + e_y,
    // [id_x, a] ; τ_z = τ_y ; [a, id_x], where τ at a non-basis object is
    // the linear extension of the family
    let tau_at = |v: &[Scalar]| -> CatMorphism {
        CatMorphism {
            source: xm.l0.bracket(x, v),
            label: vec_scale(&minus_two, &xi.mul_vec(v)),
        }
    };
    let mut naturality_ok = true;
    for y in 0..n0 {
        let ey = unit_vec(field, n0, y);
        for a in 0..n1 {
            let ea = unit_vec(field, n1, a);
            let f = CatMorphism {
                source: ey.clone(),
                label: ea.clone(),
            };
            let z = f.target(xm);
            let idx = identity(xm, x);
            let left = compose(xm, &bracket_morphisms(xm, &idx, &f), &tau_at(&z));
            let right = compose(xm, &tau_at(&ey), &bracket_morphisms(xm, &f, &idx));
            match (left, right) {
                (Ok(l), Ok(r)) if l == r => {}
                _ => naturality_ok = false,
            }
        }
    }

    // τ_{[y,z]} = y.τ_z - z.τ_y on labels
    let mut tau_bracket_ok = true;
    let mut taufr_ok = true;
    for y in 0..n0 {
        for z in 0..n0 {
            let ey = unit_vec(field, n0, y);
            let ez = unit_vec(field, n0, z);
            let yz = xm.l0.bracket(&ey, &ez);
            let lhs = tau_at(&yz);
            let rhs_label = vec_sub(&xm.act(&ey, &tau_at(&ez).label), &xm.act(&ez, &tau_at(&ey).label));
            if lhs.label != rhs_label {
                tau_bracket_ok = false;
            }
            // the same law in bracket form, as a morphism identity
            let rhs = sub_morphisms(
                &bracket_morphisms(xm, &identity(xm, &ey), &tau_at(&ez)),
                &bracket_morphisms(xm, &identity(xm, &ez), &tau_at(&ey)),
            );
            if lhs != rhs {
                taufr_ok = false;
            }
        }
    }

    TauLawReport {
        source_target_ok,
        naturality_ok,
        tau_bracket_ok,
        taufr_ok,
    }
}

/// The τ laws for a centre element; errors if (x, ξ) is not in Z0.
pub fn verify_tau_laws(
    xm: &CrossedModule,
    carrier: &CentreCarrier,
    p: &CentreElement,
) -> Result<TauLawReport, Error> {
    if !carrier.contains(p) {
        return Err(Error::ElementNotInCentre);
    }
    Ok(tau_report(xm, &p.x, &p.xi))
}

/// Strict category and bifunctor laws, checked on basis-generated data.
#[derive(Debug, Clone)]
pub struct CategoryLawReport {
    pub identity_laws_ok: bool,
    pub associativity_ok: bool,
    /// [id_x, id_y] = id_{[x,y]}.
    pub bracket_identities_ok: bool,
    /// interchange of the bracket bifunctor with composition.
    pub interchange_ok: bool,
    /// λ_k preserves composition and bracket (k = 3).
    pub scalar_functor_ok: bool,
}

impl CategoryLawReport {
    pub fn all_pass(&self) -> bool {
        self.identity_laws_ok
            && self.associativity_ok
            && self.bracket_identities_ok
            && self.interchange_ok
            && self.scalar_functor_ok
    }
}

pub fn verify_category_laws(xm: &CrossedModule) -> CategoryLawReport {
    let field = xm.field();
    let n0 = xm.l0.dim;
    let n1 = xm.l1.dim;
    let objects: Vec<Vec<Scalar>> = (0..n0).map(|i| unit_vec(field, n0, i)).collect();
    let labels: Vec<Vec<Scalar>> = (0..n1).map(|a| unit_vec(field, n1, a)).collect();

    let mut identity_laws_ok = true;
    let mut associativity_ok = true;
    for x in &objects {
        for a in &labels {
            let f = CatMorphism {
                source: x.clone(),
                label: a.clone(),
            };
            let idl = compose(xm, &identity(xm, x), &f).unwrap();
            let idr = compose(xm, &f, &identity(xm, &f.target(xm))).unwrap();
            if idl != f || idr != f {
                identity_laws_ok = false;
            }
            for b in &labels {
                let g = CatMorphism {
                    source: f.target(xm),
                    label: b.clone(),
                };
                for c in &labels {
                    let h = CatMorphism {
                        source: g.target(xm),
                        label: c.clone(),
                    };
                    let left = compose(xm, &compose(xm, &f, &g).unwrap(), &h).unwrap();
                    let right = compose(xm, &f, &compose(xm, &g, &h).unwrap()).unwrap();
                    if left != right {
                        associativity_ok = false;
                    }
                }
            }
        }
    }

    let mut bracket_identities_ok = true;
    for x in &objects {
        for y in &objects {
            let br = bracket_morphisms(xm, &identity(xm, x), &identity(xm, y));
            if br != identity(xm, &xm.l0.bracket(x, y)) {
                bracket_identities_ok = false;
            }
        }
    }

    // interchange: [f1;f2, g1;g2] = [f1,g1] ; [f2,g2]
    let mut interchange_ok = true;
    for x in &objects {
        for y in &objects {
            for a in &labels {
                for b in &labels {
                    for c in &labels {
                        for d in &labels {
                            let f1 = CatMorphism {
                                source: x.clone(),
                                label: a.clone(),
                            };
                            let f2 = CatMorphism {
                                source: f1.target(xm),
                                label: b.clone(),
                            };
                            let g1 = CatMorphism {
                                source: y.clone(),
                                label: c.clone(),
                            };
                            let g2 = CatMorphism {
                                source: g1.target(xm),
                                label: d.clone(),
                            };
                            let lhs = bracket_morphisms(
                                xm,
                                &compose(xm, &f1, &f2).unwrap(),
                                &compose(xm, &g1, &g2).unwrap(),
                            );
                            let rhs = compose(
                                xm,
                                &bracket_morphisms(xm, &f1, &g1),
                                &bracket_morphisms(xm, &f2, &g2),
                            );
                            match rhs {
                                Ok(r) if r == lhs => {}
                                _ => interchange_ok = false,
                            }
                        }
                    }
                }
            }
        }
    }

    let mut scalar_functor_ok = true;
    let k = field.from_i64(3);
    for x in &objects {
        for a in &labels {
            let f = CatMorphism {
                source: x.clone(),
                label: a.clone(),
            };
            for b in &labels {
                let g = CatMorphism {
                    source: f.target(xm),
                    label: b.clone(),
                };
                let lhs = scale_morphism(&k, &compose(xm, &f, &g).unwrap());
                let rhs = compose(xm, &scale_morphism(&k, &f), &scale_morphism(&k, &g));
                match rhs {
                    Ok(r) if r == lhs => {}
                    _ => scalar_functor_ok = false,
                }
            }
        }
    }

    CategoryLawReport {
        identity_laws_ok,
        associativity_ok,
        bracket_identities_ok,
        interchange_ok,
        scalar_functor_ok,
    }
}

/// Laws of the centre category: the bracket of τ-pairs, its θ-family,
/// the bracket-decomposition identities in L0, and the braiding.
#[derive(Debug, Clone)]
pub struct CentreCategoryReport {
    /// θ_z = τ_{[y,z]} - η_{[x,z]} equals the τ-family of the Z0 bracket.
    pub theta_matches_bracket_tau: bool,
    /// θ_z : [[x,y], z] -> [z, [x,y]] is correctly typed.
    pub theta_typing_ok: bool,
    /// [[x,y],z] = [x,[y,z]] - [y,[x,z]] and [z,[x,y]] = [[y,z],x] - [[x,z],y].
    pub decomposition_identities_ok: bool,
    /// The braiding morphism of a pair is τ'_{x''} and is typed
    /// [x', x''] -> [x'', x'].
    pub braiding_typing_ok: bool,
    /// τ'_{x''} = -2 {p, q} where {p, q} = ξ'(x'') is the structural braiding.
    pub braiding_matches_structural: bool,
}

impl CentreCategoryReport {
    pub fn all_pass(&self) -> bool {
        self.theta_matches_bracket_tau
            && self.theta_typing_ok
            && self.decomposition_identities_ok
            && self.braiding_typing_ok
            && self.braiding_matches_structural
    }
}

pub fn verify_centre_category(
    xm: &CrossedModule,
    carrier: &CentreCarrier,
) -> Result<CentreCategoryReport, Error> {
    let field = xm.field();
    let n0 = xm.l0.dim;
    let minus_two = field.from_i64(-2);

    let mut decomposition_identities_ok = true;
    for x in 0..n0 {
        for y in 0..n0 {
            for z in 0..n0 {
                let ex = unit_vec(field, n0, x);
                let ey = unit_vec(field, n0, y);
                let ez = unit_vec(field, n0, z);
                let lhs = xm.l0.bracket(&xm.l0.bracket(&ex, &ey), &ez);
                let rhs = vec_sub(
                    &xm.l0.bracket(&ex, &xm.l0.bracket(&ey, &ez)),
                    &xm.l0.bracket(&ey, &xm.l0.bracket(&ex, &ez)),
                );
                if lhs != rhs {
                    decomposition_identities_ok = false;
                }
                let lhs = xm.l0.bracket(&ez, &xm.l0.bracket(&ex, &ey));
                let rhs = vec_sub(
                    &xm.l0.bracket(&xm.l0.bracket(&ey, &ez), &ex),
                    &xm.l0.bracket(&xm.l0.bracket(&ex, &ez), &ey),
                );
                if lhs != rhs {
                    decomposition_identities_ok = false;
                }
            }
        }
    }

    let mut theta_matches_bracket_tau = true;
    let mut theta_typing_ok = true;
    let mut braiding_typing_ok = true;
    let mut braiding_matches_structural = true;
    for a in 0..carrier.dim() {
        for b in 0..carrier.dim() {
            let p = carrier.basis_element(a); // (x, ξ)
            let q = carrier.basis_element(b); // (y, η)
            let br = z0_bracket(xm, carrier, &p, &q)?;
            let br_tau = tau_family(xm, &br);
            for z in 0..n0 {
                let ez = unit_vec(field, n0, z);
                // θ_z = τ_{[y,z]} - η_{[x,z]} evaluated through the families
                let theta_label = vec_scale(
                    &minus_two,
                    &vec_sub(
                        &p.xi.mul_vec(&xm.l0.bracket(&q.x, &ez)),
                        &q.xi.mul_vec(&xm.l0.bracket(&p.x, &ez)),
                    ),
                );
                if theta_label != br_tau[z].label {
                    theta_matches_bracket_tau = false;
                }
                // typing: source [[x,y],z], target [z,[x,y]]
                let theta = CatMorphism {
                    source: xm.l0.bracket(&br.x, &ez),
                    label: theta_label,
                };
                if theta.target(xm) != xm.l0.bracket(&ez, &br.x) {
                    theta_typing_ok = false;
                }
            }
            // braiding: τ'_{x''} for the pair (p, q) with x'' = q.x
            let braid = CatMorphism {
                source: xm.l0.bracket(&p.x, &q.x),
                label: vec_scale(&minus_two, &p.xi.mul_vec(&q.x)),
            };
            if braid.target(xm) != xm.l0.bracket(&q.x, &p.x) {
                braiding_typing_ok = false;
            }
            let structural = p.xi.mul_vec(&q.x);
            if braid.label != vec_scale(&minus_two, &structural) {
                braiding_matches_structural = false;
            }
        }
    }

    Ok(CentreCategoryReport {
        theta_matches_bracket_tau,
        theta_typing_ok,
        decomposition_identities_ok,
        braiding_typing_ok,
        braiding_matches_structural,
    })
}
