//! Built-in example crossed modules and seeded random families.
//!
//! Random instances are never produced from raw random structure constants
//! (Jacobi would almost never hold); only closed families with provable
//! axioms are generated, so every instance is valid by construction.

use crate::crossed::CrossedModule;
use crate::lie::{abelian_n, borel2, heisenberg, sl2, upper_triangular2, LieAlgebra, LieModule};
use crate::matrix::{zero_vec, Matrix};
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Expected invariant dimensions; `None` means not pinned for this entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpectedDims {
    pub pi0: Option<usize>,
    pub pi1: Option<usize>,
    pub z0: Option<usize>,
    /// dim H0(pi0, pi1)
    pub h0: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub xm: CrossedModule,
    pub expected: ExpectedDims,
}

pub const NAMES: &[&str] = &[
    "XM_ID_SL2",
    "XM_ZERO_SL2",
    "XM_AB1",
    "XM_HEIS",
    "XM_MOD",
    "XM_IDEAL_B2",
    "XM_ID_HEIS",
    "XM_IDEAL_T2",
];

fn adjoint_tensor(l: &LieAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let adj = LieModule::adjoint(l);
    (0..l.dim)
        .map(|i| (0..l.dim).map(|j| adj.act_basis(i, j).to_vec()).collect())
        .collect()
}

fn identity_module(l: &LieAlgebra) -> CrossedModule {
    CrossedModule::new(
        l.clone(),
        l.clone(),
        Matrix::identity(l.field, l.dim),
        adjoint_tensor(l),
    )
    .unwrap()
}

/// Inclusion of an ideal (spanned by the given basis indices of `g`)
/// with the adjoint action.
fn ideal_inclusion(g: &LieAlgebra, ideal_indices: &[usize]) -> CrossedModule {
    let field = g.field;
    let n1 = ideal_indices.len();
    let labels: Vec<String> = ideal_indices
        .iter()
        .map(|&j| g.labels[j].clone())
        .collect();
    // restricted bracket and action, expressed in the ideal coordinates
    let coord = |v: &[Scalar]| -> Vec<Scalar> {
        // v must be supported on the ideal coordinates
        let mut out = zero_vec(field, n1);
        for (a, &j) in ideal_indices.iter().enumerate() {
            out[a] = v[j].clone();
        }
        for (j, s) in v.iter().enumerate() {
            if !ideal_indices.contains(&j) {
                assert!(s.is_zero(), "not an ideal spanned by basis vectors");
            }
        }
        out
    };
    let mut brackets = Vec::new();
    for a in 0..n1 {
        for b in (a + 1)..n1 {
            brackets.push((
                a,
                b,
                coord(g.bracket_basis(ideal_indices[a], ideal_indices[b])),
            ));
        }
    }
    let l1 = LieAlgebra::new(field, labels, &brackets).unwrap();
    let mut boundary = Matrix::zero(field, g.dim, n1);
    for (a, &j) in ideal_indices.iter().enumerate() {
        boundary.set(j, a, field.one());
    }
    let action: Vec<Vec<Vec<Scalar>>> = (0..g.dim)
        .map(|i| {
            ideal_indices
                .iter()
                .map(|&j| coord(g.bracket_basis(i, j)))
                .collect()
        })
        .collect();
    CrossedModule::new(g.clone(), l1, boundary, action).unwrap()
}

/// Zero boundary A -> g with A abelian and a trivial g-module structure.
fn zero_boundary_trivial(g: LieAlgebra, module_dim: usize) -> CrossedModule {
    let field = g.field;
    let labels = (0..module_dim).map(|i| format!("m{i}")).collect();
    let l1 = LieAlgebra::abelian(field, labels);
    let action = vec![vec![zero_vec(field, module_dim); module_dim]; g.dim];
    CrossedModule::new(g.clone(), l1, Matrix::zero(field, g.dim, module_dim), action).unwrap()
}

pub fn builtin(name: &str, field: FieldSpec) -> Result<CatalogEntry, Error> {
    let entry = match name {
        "XM_ID_SL2" => CatalogEntry {
            name: "XM_ID_SL2",
            description: "identity crossed module on sl2 with the adjoint action",
            xm: identity_module(&sl2(field)),
            expected: ExpectedDims {
                pi0: Some(0),
                pi1: Some(0),
                z0: Some(3),
                h0: Some(0),
            },
        },
        "XM_ZERO_SL2" => CatalogEntry {
            name: "XM_ZERO_SL2",
            description: "zero algebra into sl2",
            xm: CrossedModule::new(
                sl2(field),
                LieAlgebra::abelian(field, vec![]),
                Matrix::zero(field, 3, 0),
                vec![vec![]; 3],
            )?,
            expected: ExpectedDims {
                pi0: Some(3),
                pi1: Some(0),
                z0: Some(0),
                h0: Some(0),
            },
        },
        "XM_AB1" => CatalogEntry {
            name: "XM_AB1",
            description: "zero boundary k -> k, both abelian, trivial action",
            xm: zero_boundary_trivial(abelian_n(field, 1), 1),
            expected: ExpectedDims {
                pi0: Some(1),
                pi1: Some(1),
                z0: Some(2),
                h0: Some(1),
            },
        },
        "XM_HEIS" => CatalogEntry {
            name: "XM_HEIS",
            description: "central line into the Heisenberg algebra, trivial action",
            xm: {
                let h = heisenberg(field);
                let l1 = LieAlgebra::abelian(field, vec!["z'".into()]);
                let mut boundary = Matrix::zero(field, 3, 1);
                boundary.set(2, 0, field.one());
                CrossedModule::new(h, l1, boundary, vec![vec![zero_vec(field, 1)]; 3])?
            },
            expected: ExpectedDims {
                pi0: Some(2),
                pi1: Some(0),
                z0: Some(3),
                h0: Some(0),
            },
        },
        "XM_MOD" => CatalogEntry {
            name: "XM_MOD",
            description: "k^2 over the zero algebra, everything trivial",
            xm: zero_boundary_trivial(abelian_n(field, 0), 2),
            expected: ExpectedDims {
                pi0: Some(0),
                pi1: Some(2),
                z0: Some(0),
                h0: Some(2),
            },
        },
        "XM_IDEAL_B2" => CatalogEntry {
            name: "XM_IDEAL_B2",
            description: "ideal span{f} inside b2 ([e,f] = f) with the adjoint action",
            xm: ideal_inclusion(&borel2(field), &[1]),
            expected: ExpectedDims {
                pi0: Some(1),
                pi1: Some(0),
                z0: Some(2),
                h0: Some(0),
            },
        },
        "XM_ID_HEIS" => CatalogEntry {
            name: "XM_ID_HEIS",
            description: "identity crossed module on the Heisenberg algebra",
            xm: identity_module(&heisenberg(field)),
            expected: ExpectedDims {
                pi0: Some(0),
                pi1: Some(0),
                z0: Some(3),
                h0: Some(0),
            },
        },
        "XM_IDEAL_T2" => CatalogEntry {
            name: "XM_IDEAL_T2",
            description: "nilradical span{n} inside upper-triangular 2x2 matrices",
            xm: ideal_inclusion(&upper_triangular2(field), &[2]),
            expected: ExpectedDims {
                pi0: Some(2),
                pi1: Some(0),
                z0: None,
                h0: Some(0),
            },
        },
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(entry)
}

pub fn all(field: FieldSpec) -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| builtin(n, field).unwrap()).collect()
}

/// The closed generation families; every instance is valid by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Zero boundary with a chosen module.
    ZeroBoundary,
    /// Identity crossed module with the adjoint action.
    Identity,
    /// Ideal inclusion with the adjoint action.
    IdealInclusion,
    /// Direct sum of two catalog entries.
    DirectSum,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::ZeroBoundary,
        Family::Identity,
        Family::IdealInclusion,
        Family::DirectSum,
    ];
}

/// Deterministic-in-seed generator over the chosen family.
pub fn random_family(seed: u64, family: Family, field: FieldSpec) -> CrossedModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::ZeroBoundary => {
            let g = match rng.gen_range(0..5) {
                0 => abelian_n(field, rng.gen_range(1..=3)),
                1 => borel2(field),
                2 => heisenberg(field),
                3 => sl2(field),
                _ => upper_triangular2(field),
            };
            let m = rng.gen_range(1..=2);
            zero_boundary_trivial(g, m)
        }
        Family::Identity => {
            let g = match rng.gen_range(0..5) {
                0 => abelian_n(field, rng.gen_range(1..=3)),
                1 => borel2(field),
                2 => heisenberg(field),
                3 => sl2(field),
                _ => upper_triangular2(field),
            };
            identity_module(&g)
        }
        Family::IdealInclusion => match rng.gen_range(0..5) {
            0 => ideal_inclusion(&borel2(field), &[1]),
            1 => ideal_inclusion(&heisenberg(field), &[2]),
            2 => ideal_inclusion(&heisenberg(field), &[0, 2]),
            3 => ideal_inclusion(&upper_triangular2(field), &[2]),
            _ => ideal_inclusion(&sl2(field), &[0, 1, 2]),
        },
        Family::DirectSum => {
            let entries = all(field);
            let a = &entries[rng.gen_range(0..entries.len())].xm;
            let b = &entries[rng.gen_range(0..entries.len())].xm;
            a.direct_sum(b)
        }
    }
}

/// All catalog entries plus `extra` seeded random-family instances.
pub fn corpus(field: FieldSpec, extra: usize) -> Vec<(String, CrossedModule)> {
    let mut out: Vec<(String, CrossedModule)> = all(field)
        .into_iter()
        .map(|e| (e.name.to_string(), e.xm))
        .collect();
    for seed in 0..extra as u64 {
        let family = Family::ALL[(seed % 4) as usize];
        out.push((
            format!("random:{family:?}:{seed}"),
            random_family(seed, family, field),
        ));
    }
    out
}

/// Single-entry mutations of an instance's structure constants, boundary
/// and action tensor, cycling deterministically through positions.
pub fn mutations(xm: &CrossedModule, count: usize) -> Vec<CrossedModule> {
    let field = xm.field();
    let one = field.one();
    let n0 = xm.l0.dim;
    let n1 = xm.l1.dim;
    // enumerate every mutable scalar position
    enum Site {
        L0(usize, usize, usize),
        L1(usize, usize, usize),
        Boundary(usize, usize),
        Action(usize, usize, usize),
    }
    let mut sites = Vec::new();
    for i in 0..n0 {
        for j in 0..n0 {
            for c in 0..n0 {
                sites.push(Site::L0(i, j, c));
            }
        }
    }
    for i in 0..n1 {
        for j in 0..n1 {
            for c in 0..n1 {
                sites.push(Site::L1(i, j, c));
            }
        }
    }
    for i in 0..n0 {
        for j in 0..n1 {
            sites.push(Site::Boundary(i, j));
        }
    }
    for i in 0..n0 {
        for j in 0..n1 {
            for c in 0..n1 {
                sites.push(Site::Action(i, j, c));
            }
        }
    }
    let mut out = Vec::new();
    if sites.is_empty() {
        return out;
    }
    let stride = (sites.len() / count.max(1)).max(1);
    for k in 0..count {
        let site = &sites[(k * stride) % sites.len()];
        let mut l0s = xm.l0.structure_tensor();
        let mut l1s = xm.l1.structure_tensor();
        let mut boundary = xm.boundary.clone();
        let mut action = xm.action_tensor();
        match site {
            Site::L0(i, j, c) => l0s[*i][*j][*c] = &l0s[*i][*j][*c] + &one,
            Site::L1(i, j, c) => l1s[*i][*j][*c] = &l1s[*i][*j][*c] + &one,
            Site::Boundary(i, j) => {
                let v = boundary.get(*i, *j) + &one;
                boundary.set(*i, *j, v);
            }
            Site::Action(i, j, c) => action[*i][*j][*c] = &action[*i][*j][*c] + &one,
        }
        let l0 = LieAlgebra::from_structure(field, xm.l0.labels.clone(), l0s).unwrap();
        let l1 = LieAlgebra::from_structure(field, xm.l1.labels.clone(), l1s).unwrap();
        out.push(CrossedModule::new(l0, l1, boundary, action).unwrap());
    }
    out
}
