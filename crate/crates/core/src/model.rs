//! JSON wire format for Lie algebras and (braided) crossed modules.
//!
//! Scalars are strings: integers ("3", "-2") or fractions ("3/7") over Q,
//! canonical representatives in [0, p) over Fp. Lie algebras list only
//! their i < j bracket entries; omitted pairs are zero. A crossed module
//! carries the boundary as one L0-vector per L1 basis vector, the action
//! as act[i][j] ∈ L1, and optionally a braiding; when a braiding is given
//! the brackets and action may be omitted and are derived from it.

use serde::{Deserialize, Serialize};

use crate::crossed::{BraidedCrossedModule, CrossedModule};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieAlgebraModel {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<BracketEntry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossedModuleModel {
    pub field: String,
    #[serde(rename = "L0")]
    pub l0: LieAlgebraModel,
    #[serde(rename = "L1")]
    pub l1: LieAlgebraModel,
    /// boundary[a] = ∂(e_a) as an L0 vector.
    pub boundary: Vec<Vec<String>>,
    /// action[i][j] = e_i . e_j as an L1 vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<String>>>>,
    /// braiding[i][j] = {e_i, e_j} as an L1 vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<Vec<Vec<String>>>>,
}

/// A parsed model: plain crossed module, or braided with its derived
/// underlying crossed module.
#[derive(Debug, Clone)]
pub enum ParsedModel {
    Crossed(CrossedModule),
    Braided(BraidedCrossedModule, CrossedModule),
}

impl ParsedModel {
    pub fn crossed(&self) -> &CrossedModule {
        match self {
            ParsedModel::Crossed(x) => x,
            ParsedModel::Braided(_, x) => x,
        }
    }

    pub fn braided(&self) -> Option<&BraidedCrossedModule> {
        match self {
            ParsedModel::Crossed(_) => None,
            ParsedModel::Braided(b, _) => Some(b),
        }
    }
}

fn parse_vec(field: FieldSpec, v: &[String], dim: usize, what: &str) -> Result<Vec<Scalar>, Error> {
    if v.len() != dim {
        return Err(Error::Dimension(format!(
            "{what}: expected {dim} entries, got {}",
            v.len()
        )));
    }
    v.iter().map(|s| Scalar::parse(field, s)).collect()
}

fn render_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl LieAlgebraModel {
    pub fn to_algebra(&self, field: FieldSpec) -> Result<LieAlgebra, Error> {
        if self.basis.len() != self.dim {
            return Err(Error::Dimension(format!(
                "basis has {} labels for dim {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut entries = Vec::new();
        for e in self.brackets.as_deref().unwrap_or(&[]) {
            if e.i >= e.j || e.j >= self.dim {
                return Err(Error::InvalidInput(format!(
                    "bracket entry ({}, {}) is not an i < j pair within dim {}",
                    e.i, e.j, self.dim
                )));
            }
            entries.push((
                e.i,
                e.j,
                parse_vec(field, &e.value, self.dim, "bracket value")?,
            ));
        }
        LieAlgebra::new(field, self.basis.clone(), &entries)
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let mut brackets = Vec::new();
        for i in 0..l.dim {
            for j in (i + 1)..l.dim {
                let v = l.bracket_basis(i, j);
                if !crate::matrix::vec_is_zero(v) {
                    brackets.push(BracketEntry {
                        i,
                        j,
                        value: render_vec(v),
                    });
                }
            }
        }
        LieAlgebraModel {
            dim: l.dim,
            basis: l.labels.clone(),
            brackets: if brackets.is_empty() {
                None
            } else {
                Some(brackets)
            },
        }
    }

    fn has_brackets(&self) -> bool {
        self.brackets.is_some()
    }
}

fn parse_tensor(
    field: FieldSpec,
    t: &[Vec<Vec<String>>],
    rows: usize,
    cols: usize,
    dim: usize,
    what: &str,
) -> Result<Vec<Vec<Vec<Scalar>>>, Error> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!(
            "{what}: expected {rows} x {cols} entries"
        )));
    }
    t.iter()
        .map(|r| {
            r.iter()
                .map(|v| parse_vec(field, v, dim, what))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

impl CrossedModuleModel {
    /// Build the model into validated-shape structures. `field_override`
    /// replaces the file's field spec when given.
    pub fn to_model(&self, field_override: Option<FieldSpec>) -> Result<ParsedModel, Error> {
        let field = match field_override {
            Some(f) => f,
            None => FieldSpec::parse(&self.field)?,
        };
        let n0 = self.l0.dim;
        let n1 = self.l1.dim;
        if self.boundary.len() != n1 {
            return Err(Error::Dimension(format!(
                "boundary lists {} columns for dim L1 = {n1}",
                self.boundary.len()
            )));
        }
        let cols: Vec<Vec<Scalar>> = self
            .boundary
            .iter()
            .map(|c| parse_vec(field, c, n0, "boundary column"))
            .collect::<Result<_, _>>()?;
        let boundary = Matrix::from_cols(field, n0, &cols);

        if let Some(braiding) = &self.braiding {
            let br = parse_tensor(field, braiding, n0, n0, n1, "braiding")?;
            let bcm = if self.l0.has_brackets() || self.l1.has_brackets() {
                BraidedCrossedModule::new(
                    self.l0.to_algebra(field)?,
                    self.l1.to_algebra(field)?,
                    boundary,
                    br,
                )?
            } else {
                BraidedCrossedModule::from_boundary_braiding(
                    field,
                    self.l0.basis.clone(),
                    self.l1.basis.clone(),
                    boundary,
                    br,
                )?
            };
            let xm = bcm.underlying_crossed()?;
            if let Some(action) = &self.action {
                let act = parse_tensor(field, action, n0, n1, n1, "action")?;
                if act != xm.action_tensor() {
                    return Err(Error::InvalidInput(
                        "given action disagrees with the one induced by the braiding".into(),
                    ));
                }
            }
            Ok(ParsedModel::Braided(bcm, xm))
        } else {
            let action = self.action.as_ref().ok_or_else(|| {
                Error::InvalidInput("a crossed module needs an action or a braiding".into())
            })?;
            let act = parse_tensor(field, action, n0, n1, n1, "action")?;
            let xm = CrossedModule::new(
                self.l0.to_algebra(field)?,
                self.l1.to_algebra(field)?,
                boundary,
                act,
            )?;
            Ok(ParsedModel::Crossed(xm))
        }
    }

    pub fn from_crossed(x: &CrossedModule) -> Self {
        let n1 = x.l1.dim;
        CrossedModuleModel {
            field: x.field().to_string(),
            l0: LieAlgebraModel::from_algebra(&x.l0),
            l1: LieAlgebraModel::from_algebra(&x.l1),
            boundary: (0..n1).map(|a| render_vec(&x.boundary.col(a))).collect(),
            action: Some(
                (0..x.l0.dim)
                    .map(|i| (0..n1).map(|j| render_vec(x.act_basis(i, j))).collect())
                    .collect(),
            ),
            braiding: None,
        }
    }

    pub fn from_braided(b: &BraidedCrossedModule) -> Self {
        let n0 = b.l0.dim;
        let n1 = b.l1.dim;
        CrossedModuleModel {
            field: b.field().to_string(),
            l0: LieAlgebraModel::from_algebra(&b.l0),
            l1: LieAlgebraModel::from_algebra(&b.l1),
            boundary: (0..n1).map(|a| render_vec(&b.boundary.col(a))).collect(),
            action: None,
            braiding: Some(
                (0..n0)
                    .map(|i| (0..n0).map(|j| render_vec(b.braid_basis(i, j))).collect())
                    .collect(),
            ),
        }
    }
}

/// Parse a JSON document into a model.
pub fn parse_model(json: &str, field_override: Option<FieldSpec>) -> Result<ParsedModel, Error> {
    let m: CrossedModuleModel =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("bad model JSON: {e}")))?;
    m.to_model(field_override)
}

/// Render a crossed module as pretty JSON.
pub fn dump_crossed(x: &CrossedModule) -> String {
    serde_json::to_string_pretty(&CrossedModuleModel::from_crossed(x)).expect("serialization")
}

pub fn dump_braided(b: &BraidedCrossedModule) -> String {
    serde_json::to_string_pretty(&CrossedModuleModel::from_braided(b)).expect("serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn roundtrip_catalog() {
        for name in crate::catalog::NAMES {
            let xm = builtin(name, Q).unwrap().xm;
            let json = dump_crossed(&xm);
            let parsed = parse_model(&json, None).unwrap();
            assert_eq!(parsed.crossed(), &xm, "{name}");
        }
    }

    #[test]
    fn roundtrip_fp() {
        let f = FieldSpec::prime(5).unwrap();
        let xm = builtin("XM_ID_SL2", f).unwrap().xm;
        let parsed = parse_model(&dump_crossed(&xm), None).unwrap();
        assert_eq!(parsed.crossed(), &xm);
    }

    #[test]
    fn braided_input_without_brackets() {
        // identity sl2 presented by boundary + braiding only
        let xm = builtin("XM_ID_SL2", Q).unwrap().xm;
        let braid: Vec<Vec<Vec<String>>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| render_vec(xm.l0.bracket_basis(i, j)))
                    .collect()
            })
            .collect();
        let model = CrossedModuleModel {
            field: "Q".into(),
            l0: LieAlgebraModel {
                dim: 3,
                basis: vec!["h".into(), "e".into(), "f".into()],
                brackets: None,
            },
            l1: LieAlgebraModel {
                dim: 3,
                basis: vec!["h".into(), "e".into(), "f".into()],
                brackets: None,
            },
            boundary: (0..3).map(|a| render_vec(&xm.boundary.col(a))).collect(),
            action: None,
            braiding: Some(braid),
        };
        let parsed = model.to_model(None).unwrap();
        assert_eq!(parsed.crossed(), &xm);
        assert!(parsed.braided().unwrap().validate().is_empty());
    }

    #[test]
    fn errors_are_located() {
        assert!(matches!(
            parse_model("{", None),
            Err(Error::Parse(_))
        ));
        let xm = builtin("XM_AB1", Q).unwrap().xm;
        let mut m = CrossedModuleModel::from_crossed(&xm);
        m.boundary.push(vec!["0".into()]);
        assert!(matches!(m.to_model(None), Err(Error::Dimension(_))));
        m = CrossedModuleModel::from_crossed(&xm);
        m.field = "Fp:2".into();
        assert!(matches!(m.to_model(None), Err(Error::CharacteristicTwo)));
        // field override wins
        m = CrossedModuleModel::from_crossed(&xm);
        m.field = "Fp:2".into();
        assert!(m.to_model(Some(FieldSpec::prime(7).unwrap())).is_ok());
    }
}
