//! Acceptance suite: one test per top-level guarantee, each printing a
//! single pass line (visible with `--nocapture`).

use liecm::catalog::{self, corpus, mutations};
use liecm::centre::{centre_carrier, centre_suite, delta, lemma_triple, six_term_report};
use liecm::cohomology::{
    ce_differential, pi1_centre_iso, verify_comparison, CorollaryContext, ObstructionChoice,
};
use liecm::crossed::CrossedModule;
use liecm::guin::{verify_guin_diagram, SignMode};
use liecm::lie2cat::{tau_report, verify_category_laws, verify_centre_category, verify_tau_laws};
use liecm::matrix::{unit_vec, vec_is_zero, vec_sub, zero_vec};
use liecm::{FieldSpec, Scalar};

const Q: FieldSpec = FieldSpec::Rationals;

fn f5() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

fn f3() -> FieldSpec {
    FieldSpec::prime(3).unwrap()
}

fn pass(n: usize, what: &str) {
    println!("criterion {n:02} ({what}): pass");
}

/// 1. The two crossed-module axiom systems agree, and the two braided
/// axiom systems agree, on the catalog plus 50 seeded random instances
/// over Q and F5.
#[test]
fn c01_axiom_systems_agree() {
    for field in [Q, f5()] {
        for (name, xm) in corpus(field, 50) {
            let primary = xm.validate_primary();
            let alternative = xm.validate_alternative();
            assert!(primary.is_empty(), "{name}: primary system fails");
            assert!(alternative.is_empty(), "{name}: alternative system fails");
            // braided systems, exercised on the centre of each instance
            let bcm = centre_suite(&xm).unwrap().bcm;
            assert!(bcm.validate_defining().is_empty(), "{name}: defining eqs");
            assert!(bcm.validate_reduced().is_empty(), "{name}: reduced eqs");
        }
    }
    pass(1, "axiom systems agree");
}

/// 2. The centre is a valid braided crossed module and the image of
/// delta lies inside the centre carrier.
#[test]
fn c02_centre_is_braided_crossed_module() {
    for (name, xm) in corpus(Q, 50) {
        let s = centre_suite(&xm).unwrap();
        assert!(s.bcm.validate().is_empty(), "{name}");
        for a in 0..xm.l1.dim {
            let d = delta(&xm, &unit_vec(Q, xm.l1.dim, a));
            assert!(s.carrier.contains(&d), "{name}: delta image escapes Z0");
        }
    }
    pass(2, "centre is a braided crossed module");
}

/// 3. The three expressions -t.xi(y), xi([y,t]) - eta([x,t]) and
/// t.eta(x) agree coordinate-exactly for all carrier basis pairs.
#[test]
fn c03_triple_identity() {
    for (name, xm) in corpus(Q, 50) {
        let carrier = centre_carrier(&xm);
        for a in 0..carrier.dim() {
            for b in 0..carrier.dim() {
                let p = carrier.basis_element(a);
                let q = carrier.basis_element(b);
                for t in 0..xm.l0.dim {
                    let (first, second, third) = lemma_triple(&xm, &p, &q, t);
                    assert_eq!(first, second, "{name} ({a},{b},{t})");
                    assert_eq!(second, third, "{name} ({a},{b},{t})");
                }
            }
        }
    }
    pass(3, "triple identity");
}

/// 4. The quotient by the centre is a valid crossed module.
#[test]
fn c04_quotient_is_crossed_module() {
    for (name, xm) in corpus(Q, 50) {
        let s = centre_suite(&xm).unwrap();
        assert!(s.quotient_xm.validate().is_empty(), "{name}");
    }
    pass(4, "quotient by centre is a crossed module");
}

/// 5. pi1 of the centre coincides with H0(pi0, pi1), via the identity
/// map on L1. Fixed values: XM_AB1 -> 1, XM_ID_SL2 -> 0, XM_MOD -> 2.
#[test]
fn c05_pi1_isomorphism() {
    for (name, xm) in corpus(Q, 50) {
        let r = pi1_centre_iso(&xm).unwrap();
        assert!(r.bijective, "{name}");
        assert_eq!(r.pi1z_dim, r.h0_dim, "{name}");
    }
    for (name, expect) in [("XM_AB1", 1), ("XM_ID_SL2", 0), ("XM_MOD", 2)] {
        let xm = catalog::builtin(name, Q).unwrap().xm;
        assert_eq!(pi1_centre_iso(&xm).unwrap().pi1z_dim, expect, "{name}");
    }
    pass(5, "pi1 of centre is H0");
}

/// Count solutions of a predicate over all F3 vectors of length n and
/// return the log base 3 (the dimension of the solution space, which
/// must be linear for this to be exact).
fn f3_log_count(n: usize, mut check: impl FnMut(&[Scalar]) -> bool) -> usize {
    let field = f3();
    let total: usize = 3usize.pow(n as u32);
    let mut count = 0usize;
    for code in 0..total {
        let mut c = code;
        let v: Vec<Scalar> = (0..n)
            .map(|_| {
                let d = (c % 3) as i64;
                c /= 3;
                field.from_i64(d)
            })
            .collect();
        if check(&v) {
            count += 1;
        }
    }
    let mut dim = 0;
    let mut pow = 1usize;
    while pow < count {
        pow *= 3;
        dim += 1;
    }
    assert_eq!(pow, count, "solution count {count} is not a power of 3");
    dim
}

/// 6. The four-term sequence H1 -> pi0(Z) -> Z_pi1(pi0) -> H2 is exact
/// with injective first map, over Q and F5; XM_AB1 has dims
/// (1, 2, 1, 0), reproduced independently by F3 enumeration of the
/// defining equations.
#[test]
fn c06_comparison_sequence() {
    for field in [Q, f5()] {
        for (name, xm) in corpus(field, 50) {
            let r = verify_comparison(&xm).unwrap();
            assert!(r.is_exact(), "{name}: {:?}", r);
            assert_eq!(r.start_kernel_dim, 0, "{name}: first map not injective");
        }
    }
    let xm = catalog::builtin("XM_AB1", Q).unwrap().xm;
    let r = verify_comparison(&xm).unwrap();
    assert_eq!(r.dims(), vec![1, 2, 1, 0]);

    // independent F3 enumeration on the same model
    let field = f3();
    let xm3 = catalog::builtin("XM_AB1", field).unwrap().xm;
    let h = xm3.homotopy().unwrap();
    let (g, module) = (&h.pi0, &h.induced);
    let (n, m) = (g.dim, module.dim);

    // H1: 1-cochains phi with s.phi(t) - t.phi(s) - phi([s,t]) = 0,
    // modulo phi(t) = t.a
    let act_on = |i: usize, v: &[Scalar]| module.act(&unit_vec(field, n, i), v);
    let phi_at = |phi: &[Scalar], t: usize| phi[t * m..(t + 1) * m].to_vec();
    let z1 = f3_log_count(n * m, |phi| {
        (0..n).all(|s| {
            (s + 1..n).all(|t| {
                let mut lhs = vec_sub(&act_on(s, &phi_at(phi, t)), &act_on(t, &phi_at(phi, s)));
                let br = g.bracket_basis(s, t);
                let mut phibr = zero_vec(field, m);
                for (u, c) in br.iter().enumerate() {
                    let term = phi_at(phi, u);
                    for k in 0..m {
                        phibr[k] = &phibr[k] + &(&term[k] * c);
                    }
                }
                lhs = vec_sub(&lhs, &phibr);
                vec_is_zero(&lhs)
            })
        })
    });
    // coboundaries are t -> t.a; their count is m minus the a killed by
    // every t
    let ker_d0 = f3_log_count(m, |a| (0..n).all(|t| vec_is_zero(&act_on(t, a))));
    let h1_dim = z1 - (m - ker_d0);
    assert_eq!(h1_dim, 1, "F3 H1");

    // pi0(Z): ZE solutions modulo delta images
    let (n0, n1) = (xm3.l0.dim, xm3.l1.dim);
    let carrier_check = |v: &[Scalar]| ze_holds(&xm3, v);
    let z0 = f3_log_count(n0 + n0 * n1, carrier_check);
    let im_delta = f3_log_count(n1, |c| {
        // count Ker delta; dim Im = n1 - that
        let d = delta(&xm3, c);
        vec_is_zero(&d.x) && d.xi.is_zero()
    });
    assert_eq!(z0 - (n1 - im_delta), 2, "F3 pi0(Z)");

    // Z_pi1(pi0): central classes acting trivially on pi1
    let restricted = f3_log_count(n, |v| {
        (0..n).all(|i| vec_is_zero(&g.bracket(v, &unit_vec(field, n, i))))
            && (0..m).all(|j| vec_is_zero(&module.act(v, &unit_vec(field, m, j))))
    });
    assert_eq!(restricted, 1, "F3 restricted centre");

    // H2: with dim pi0 = 1 there are no 2-cochains
    assert_eq!(n * n.saturating_sub(1) / 2, 0);
    pass(6, "comparison sequence exact, F3 enumeration agrees");
}

/// The defining membership equations for a centre candidate, evaluated
/// elementwise from the raw structure data.
fn ze_holds(xm: &CrossedModule, v: &[Scalar]) -> bool {
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);
    let x = &v[..n0];
    let xi_of = |w: &[Scalar]| -> Vec<Scalar> {
        // column-major storage: entry (r, t) at n0 + t*n1 + r
        let mut out = zero_vec(field, n1);
        for t in 0..n0 {
            for r in 0..n1 {
                out[r] = &out[r] + &(&v[n0 + t * n1 + r] * &w[t]);
            }
        }
        out
    };
    for t in 0..n0 {
        let et = unit_vec(field, n0, t);
        if xm.boundary_of(&xi_of(&et)) != xm.l0.bracket(x, &et) {
            return false;
        }
    }
    for a in 0..n1 {
        let ea = unit_vec(field, n1, a);
        if xi_of(&xm.boundary_of(&ea)) != xm.act(x, &ea) {
            return false;
        }
    }
    for s in 0..n0 {
        for t in (s + 1)..n0 {
            let es = unit_vec(field, n0, s);
            let et = unit_vec(field, n0, t);
            let lhs = xi_of(xm.l0.bracket_basis(s, t));
            let rhs = vec_sub(&xm.act(&es, &xi_of(&et)), &xm.act(&et, &xi_of(&es)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// 7. The obstruction class is independent of the choice of complement
/// and of kernel perturbations, and every intermediate table passes the
/// antisymmetry / pi1-valuedness / boundary-vanishing / cocycle checks.
#[test]
fn c07_obstruction_well_defined() {
    for (name, xm) in corpus(Q, 20) {
        let ctx = CorollaryContext::new(&xm).unwrap();
        let d2 = ce_differential(&ctx.homotopy.pi0, &ctx.homotopy.induced, 2);
        for k in 0..ctx.restricted.dim() {
            let cl = ctx.restricted.basis.row(k);
            let x0 = ctx.homotopy.pi0_proj.lift(&cl);
            let mut choices = vec![
                ObstructionChoice::default(),
                ObstructionChoice {
                    alt_complement: true,
                    perturb_kernel: None,
                },
            ];
            if ctx.homotopy.pi1.dim() > 0 {
                choices.push(ObstructionChoice {
                    alt_complement: false,
                    perturb_kernel: Some(0),
                });
            }
            let datas: Vec<_> = choices
                .iter()
                .map(|c| ctx.obstruction(&x0, *c).unwrap())
                .collect();
            for d in &datas[1..] {
                assert_eq!(d.class, datas[0].class, "{name}: class depends on choices");
            }
            let d = &datas[0];
            let n0 = xm.l0.dim;
            for s in 0..n0 {
                for t in 0..n0 {
                    // antisymmetric and pi1-valued
                    let neg: Vec<Scalar> =
                        d.theta_bar[t][s].iter().map(|c| -c).collect();
                    assert_eq!(d.theta_bar[s][t], neg, "{name}: not antisymmetric");
                    assert!(
                        ctx.homotopy.pi1.contains(&d.theta_bar[s][t]),
                        "{name}: value escapes pi1"
                    );
                }
            }
            // vanishes against boundaries
            for a in 0..xm.l1.dim {
                let da = xm.boundary_of(&unit_vec(Q, xm.l1.dim, a));
                for t in 0..n0 {
                    let mut acc = zero_vec(Q, xm.l1.dim);
                    for (s, c) in da.iter().enumerate() {
                        for r in 0..xm.l1.dim {
                            acc[r] = &acc[r] + &(&d.theta_bar[s][t][r] * c);
                        }
                    }
                    assert!(vec_is_zero(&acc), "{name}: does not vanish on boundaries");
                }
            }
            // the descended cochain is a 2-cocycle
            assert!(
                vec_is_zero(&d2.mul_vec(&d.theta_tilde)),
                "{name}: not a cocycle"
            );
        }
    }
    pass(7, "obstruction class well defined");
}

/// 8. The six-term sequence is exact for every corpus instance;
/// pinned dims: XM_ID_SL2 (0,0,0,0,0,0), XM_AB1 (1,1,1,2,1,0),
/// XM_HEIS (0,0,0,2,2,0).
#[test]
fn c08_six_term_sequence() {
    for (name, xm) in corpus(Q, 50) {
        let r = six_term_report(&xm).unwrap();
        assert!(r.is_exact(), "{name}: {:?}", r);
    }
    for (name, dims) in [
        ("XM_ID_SL2", vec![0, 0, 0, 0, 0, 0]),
        ("XM_AB1", vec![1, 1, 1, 2, 1, 0]),
        ("XM_HEIS", vec![0, 0, 0, 2, 2, 0]),
    ] {
        let xm = catalog::builtin(name, Q).unwrap().xm;
        assert_eq!(six_term_report(&xm).unwrap().dims(), dims, "{name}");
    }
    pass(8, "six-term sequence exact");
}

/// 9. The derivation-pair comparison diagram: carrier contains the
/// centre, brackets agree there, the comparison ideal is an ideal
/// inside the carrier, rows are exact, squares commute, and the kernel
/// of pi0(Z) -> H1 is exactly accounted for by the ideal.
#[test]
fn c09_derivation_comparison() {
    for (name, xm) in corpus(Q, 50) {
        let r = verify_guin_diagram(&xm, SignMode::DeltaCompatible).unwrap();
        assert!(r.all_pass(), "{name}: {:?}", r);
    }
    pass(9, "derivation comparison diagram");
}

/// 10. Over F3, exhaustive enumeration of centre candidates reproduces
/// the kernel-computed carrier exactly, for every catalog entry with at
/// most 8 unknowns.
#[test]
fn c10_brute_force_centre() {
    let field = f3();
    let mut checked = 0;
    for entry in catalog::all(field) {
        let xm = entry.xm;
        let ambient = xm.l0.dim + xm.l0.dim * xm.l1.dim;
        if ambient > 8 {
            continue;
        }
        checked += 1;
        let carrier = centre_carrier(&xm);
        let enumerated = f3_log_count(ambient, |v| {
            let ok = ze_holds(&xm, v);
            if ok {
                // set inclusion: every elementwise solution has carrier coords
                assert!(
                    carrier
                        .coordinates(&carrier.decode(v))
                        .is_some(),
                    "{}: enumerated solution outside kernel",
                    entry.name
                );
            }
            ok
        });
        assert_eq!(enumerated, carrier.dim(), "{}", entry.name);
        for k in 0..carrier.dim() {
            let coords = carrier.encode(&carrier.basis_element(k));
            assert!(ze_holds(&xm, &coords), "{}: kernel vector fails", entry.name);
        }
    }
    assert!(checked >= 3, "too few entries within the size bound");
    pass(10, "brute-force centre enumeration agrees");
}

/// 11. The categorical layer: category laws, bifunctor interchange,
/// tau naturality and compatibility, and the centre-category typing all
/// hold; corrupting the linear part of a centre element breaks the tau
/// compatibility laws.
#[test]
fn c11_categorical_layer() {
    for (name, xm) in corpus(Q, 20) {
        assert!(verify_category_laws(&xm).all_pass(), "{name}");
        let carrier = centre_carrier(&xm);
        for k in 0..carrier.dim() {
            let p = carrier.basis_element(k);
            assert!(verify_tau_laws(&xm, &carrier, &p).unwrap().all_pass(), "{name}");
        }
        assert!(verify_centre_category(&xm, &carrier).unwrap().all_pass(), "{name}");
    }
    // negative control
    let xm = catalog::builtin("XM_ID_SL2", Q).unwrap().xm;
    let carrier = centre_carrier(&xm);
    let mut p = carrier.basis_element(0);
    p.xi.set(0, 1, Q.one());
    let r = tau_report(&xm, &p.x, &p.xi);
    assert!(!r.tau_bracket_ok || !r.taufr_ok, "corrupted element not caught");
    pass(11, "categorical layer laws");
}

/// 12. Mutation coverage: each of 20 single-entry mutations of the
/// structure data is flagged by at least one validator.
#[test]
fn c12_mutation_coverage() {
    let xm = catalog::builtin("XM_ID_SL2", Q).unwrap().xm;
    let muts = mutations(&xm, 20);
    assert_eq!(muts.len(), 20);
    for (k, m) in muts.iter().enumerate() {
        assert!(!m.validate().is_empty(), "mutation {k} accepted silently");
    }
    pass(12, "mutation coverage");
}
