//! Command-line front end: parse crossed-module model files (or catalog
//! entries), run any analysis, and emit deterministic JSON or text.
//!
//! Exit codes: 0 = success with all verifications passing, 1 = analysis ran
//! but found defects, 2 = input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use liecm::catalog;
use liecm::centre::{centre_suite, six_term_report, ExactnessReport};
use liecm::cohomology::{cohomology, CorollaryContext};
use liecm::guin::{guin_h, verify_guin_diagram, SignMode};
use liecm::lie::Violation;
use liecm::lie2cat::{verify_category_laws, verify_centre_category, verify_tau_laws};
use liecm::model::{dump_crossed, parse_model, ParsedModel};
use liecm::{FieldSpec, Matrix, Scalar};

#[derive(Parser)]
#[command(name = "liecm", version, about = "Exact analyses of crossed modules of Lie algebras")]
struct Cli {
    /// Override the model's coefficient field: Q or Fp:<p>
    #[arg(long, global = true)]
    field: Option<String>,
    /// Emit plain text instead of JSON
    #[arg(long, global = true)]
    text: bool,
    /// Use the literal printed sign for the Guin comparison ideal
    #[arg(long = "strict-paper-signs", global = true)]
    strict_signs: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every axiom of the model; list violations
    Validate { model: String },
    /// π₀ and π₁ of the crossed module
    Homotopy { model: String },
    /// The centre as a braided crossed module δ : L1 -> Z0
    Centre { model: String },
    /// The quotient-by-centre crossed module z0 : Z0 -> L0
    Quotient { model: String },
    /// Chevalley-Eilenberg cohomology of π₀ with coefficients in π₁
    Cohomology {
        model: String,
        #[arg(long, default_value_t = 1)]
        deg: usize,
    },
    /// The sequence 0 -> H¹ -> π₀(Z) -> Z_{π₁}(π₀) -> H²
    ExactSeq { model: String },
    /// The six-term homotopy sequence of L, Z and L//Z
    SixTerm { model: String },
    /// Derivation pairs, H⁰/H¹ and the comparison diagram
    Guin { model: String },
    /// Category, bracket-bifunctor and τ-family laws
    Cat2 { model: String },
    /// Built-in examples
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Run every analysis and aggregate the verdicts
    Report { model: String },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Names and expected dimensions of the built-in models
    List,
    /// Print a built-in model as JSON
    Dump { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, passed)) => {
            let rendered = if cli.text {
                let mut out = String::new();
                render_text(&value, 0, &mut out);
                out
            } else {
                format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
            };
            // ignore broken pipes (e.g. piping into `head`)
            let _ = std::io::Write::write_all(&mut std::io::stdout(), rendered.as_bytes());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn field_override(cli: &Cli) -> Result<Option<FieldSpec>, liecm::Error> {
    cli.field.as_deref().map(FieldSpec::parse).transpose()
}

fn load(cli: &Cli, spec: &str) -> Result<(ParsedModel, String), liecm::Error> {
    let field = field_override(cli)?;
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog::builtin(name, field.unwrap_or(FieldSpec::Rationals))?;
        let text = dump_crossed(&entry.xm);
        return Ok((ParsedModel::Crossed(entry.xm), text));
    }
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| liecm::Error::Parse(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| liecm::Error::Parse(format!("cannot read {spec}: {e}")))?
    };
    Ok((parse_model(&text, field)?, text))
}

fn fnv1a(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in data {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn envelope(command: &str, input: &str, results: Value) -> Value {
    json!({
        "command": command,
        "input_digest": format!("{:016x}", fnv1a(input.as_bytes())),
        "results": results,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows).map(|i| vec_json(&m.row(i))).collect())
}

fn violations_json(vs: &[Violation]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| {
                json!({
                    "kind": v.kind.to_string(),
                    "indices": v.indices,
                    "defect": vec_json(&v.defect),
                })
            })
            .collect(),
    )
}

fn exactness_json(r: &ExactnessReport) -> Value {
    json!({
        "nodes": r.nodes.iter().map(|n| json!({
            "name": n.name,
            "dim": n.dim,
            "defect": n.defect,
        })).collect::<Vec<_>>(),
        "start_kernel_dim": r.start_kernel_dim,
        "end_cokernel_dim": r.end_cokernel_dim,
        "exact": r.is_exact(),
    })
}

fn validate_model(model: &ParsedModel) -> Vec<Violation> {
    let mut vs = model.crossed().validate();
    if let Some(b) = model.braided() {
        vs.extend(b.validate());
    }
    vs
}

fn run(cli: &Cli) -> Result<(Value, bool), liecm::Error> {
    match &cli.command {
        Cmd::Validate { model } => {
            let (m, input) = load(cli, model)?;
            let vs = validate_model(&m);
            let passed = vs.is_empty();
            Ok((
                envelope(
                    "validate",
                    &input,
                    json!({ "valid": passed, "violations": violations_json(&vs) }),
                ),
                passed,
            ))
        }
        Cmd::Homotopy { model } => {
            let (m, input) = load(cli, model)?;
            let h = m.crossed().homotopy()?;
            Ok((
                envelope(
                    "homotopy",
                    &input,
                    json!({
                        "pi0_dim": h.pi0.dim,
                        "pi1_dim": h.pi1.dim(),
                        "pi1_basis": matrix_json(&h.pi1.basis),
                    }),
                ),
                true,
            ))
        }
        Cmd::Centre { model } => {
            let (m, input) = load(cli, model)?;
            let xm = m.crossed();
            let s = centre_suite(xm)?;
            let vs = s.bcm.validate();
            let basis: Vec<Value> = (0..s.carrier.dim())
                .map(|k| {
                    let e = s.carrier.basis_element(k);
                    json!({ "x": vec_json(&e.x), "xi": matrix_json(&e.xi) })
                })
                .collect();
            let braiding: Vec<Value> = (0..s.carrier.dim())
                .map(|a| {
                    Value::Array(
                        (0..s.carrier.dim())
                            .map(|b| vec_json(s.bcm.braid_basis(a, b)))
                            .collect(),
                    )
                })
                .collect();
            let passed = vs.is_empty();
            Ok((
                envelope(
                    "centre",
                    &input,
                    json!({
                        "dim": s.carrier.dim(),
                        "basis": basis,
                        "braiding": braiding,
                        "delta": matrix_json(&s.delta_matrix),
                        "bracket": s.z0_algebra.structure_tensor().iter().map(|row| {
                            Value::Array(row.iter().map(|v| vec_json(v)).collect())
                        }).collect::<Vec<_>>(),
                        "valid": passed,
                        "violations": violations_json(&vs),
                    }),
                ),
                passed,
            ))
        }
        Cmd::Quotient { model } => {
            let (m, input) = load(cli, model)?;
            let s = centre_suite(m.crossed())?;
            let vs = s.quotient_xm.validate();
            let passed = vs.is_empty();
            Ok((
                envelope(
                    "quotient",
                    &input,
                    json!({
                        "z0_dim": s.z0_algebra.dim,
                        "boundary": matrix_json(&s.z0_matrix),
                        "valid": passed,
                        "violations": violations_json(&vs),
                    }),
                ),
                passed,
            ))
        }
        Cmd::Cohomology { model, deg } => {
            if *deg > 2 {
                return Err(liecm::Error::InvalidInput(format!(
                    "degree {deg} out of range 0..=2"
                )));
            }
            let (m, input) = load(cli, model)?;
            let h = m.crossed().homotopy()?;
            let g = cohomology(&h.pi0, &h.induced, *deg);
            Ok((
                envelope(
                    "cohomology",
                    &input,
                    json!({
                        "degree": deg,
                        "dim": g.dim(),
                        "cocycle_dim": g.cocycles.dim(),
                        "coboundary_dim": g.coboundaries.dim(),
                        "cocycle_basis": matrix_json(&g.cocycles.basis),
                    }),
                ),
                true,
            ))
        }
        Cmd::ExactSeq { model } => {
            let (m, input) = load(cli, model)?;
            let r = CorollaryContext::new(m.crossed())?.verify()?;
            let passed = r.is_exact();
            Ok((envelope("exact-seq", &input, exactness_json(&r)), passed))
        }
        Cmd::SixTerm { model } => {
            let (m, input) = load(cli, model)?;
            let r = six_term_report(m.crossed())?;
            let passed = r.is_exact();
            Ok((envelope("six-term", &input, exactness_json(&r)), passed))
        }
        Cmd::Guin { model } => {
            let (m, input) = load(cli, model)?;
            let mode = if cli.strict_signs {
                SignMode::Literal
            } else {
                SignMode::DeltaCompatible
            };
            let xm = m.crossed();
            let data = guin_h(xm, mode);
            let r = verify_guin_diagram(xm, mode)?;
            let passed = r.all_pass();
            Ok((
                envelope(
                    "guin",
                    &input,
                    json!({
                        "mode": format!("{:?}", mode),
                        "carrier_dim": data.carrier.dim(),
                        "ideal_dim": data.ideal.dim(),
                        "h0_dim": data.h0.dim(),
                        "h1_dim": data.h1_dim(),
                        "diagram": {
                            "centre_in_carrier": r.centre_in_carrier,
                            "bracket_agrees_on_centre": r.bracket_agrees_on_centre,
                            "ideal_is_ideal": r.ideal_is_ideal,
                            "ideal_in_carrier": r.ideal_in_carrier,
                            "pi1_equals_h0": r.pi1_equals_h0,
                            "top_row_defects": [r.top_row_defects.0, r.top_row_defects.1],
                            "bottom_row_defects": [r.bottom_row_defects.0, r.bottom_row_defects.1],
                            "pi0z_map_defined": r.pi0z_map_defined,
                            "pi0z_injects": r.pi0z_injects,
                            "pi0z_kernel_dim": r.pi0z_kernel_dim,
                            "pi0z_kernel_explained": r.pi0z_kernel_explained,
                            "middle_square_commutes": r.middle_square_commutes,
                        },
                        "all_pass": passed,
                    }),
                ),
                passed,
            ))
        }
        Cmd::Cat2 { model } => {
            let (m, input) = load(cli, model)?;
            let xm = m.crossed();
            let laws = verify_category_laws(xm);
            let carrier = liecm::centre::centre_carrier(xm);
            let mut tau_all = true;
            let mut tau_entries = Vec::new();
            for k in 0..carrier.dim() {
                let p = carrier.basis_element(k);
                let r = verify_tau_laws(xm, &carrier, &p)?;
                tau_all &= r.all_pass();
                tau_entries.push(json!({
                    "basis_index": k,
                    "source_target_ok": r.source_target_ok,
                    "naturality_ok": r.naturality_ok,
                    "tau_bracket_ok": r.tau_bracket_ok,
                    "taufr_ok": r.taufr_ok,
                }));
            }
            let cc = verify_centre_category(xm, &carrier)?;
            let passed = laws.all_pass() && tau_all && cc.all_pass();
            Ok((
                envelope(
                    "cat2",
                    &input,
                    json!({
                        "category_laws": {
                            "identity_laws_ok": laws.identity_laws_ok,
                            "associativity_ok": laws.associativity_ok,
                            "bracket_identities_ok": laws.bracket_identities_ok,
                            "interchange_ok": laws.interchange_ok,
                            "scalar_functor_ok": laws.scalar_functor_ok,
                        },
                        "tau_families": tau_entries,
                        "centre_category": {
                            "theta_matches_bracket_tau": cc.theta_matches_bracket_tau,
                            "theta_typing_ok": cc.theta_typing_ok,
                            "decomposition_identities_ok": cc.decomposition_identities_ok,
                            "braiding_typing_ok": cc.braiding_typing_ok,
                            "braiding_matches_structural": cc.braiding_matches_structural,
                        },
                        "all_pass": passed,
                    }),
                ),
                passed,
            ))
        }
        Cmd::Catalog { action } => match action {
            CatalogCmd::List => {
                let field = field_override(cli)?.unwrap_or(FieldSpec::Rationals);
                let entries: Vec<Value> = catalog::all(field)
                    .into_iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "description": e.description,
                            "pi0_dim": e.expected.pi0,
                            "pi1_dim": e.expected.pi1,
                            "z0_dim": e.expected.z0,
                        })
                    })
                    .collect();
                Ok((json!({ "catalog": entries }), true))
            }
            CatalogCmd::Dump { name } => {
                let field = field_override(cli)?.unwrap_or(FieldSpec::Rationals);
                let entry = catalog::builtin(name, field)?;
                let text = dump_crossed(&entry.xm);
                let value: Value = serde_json::from_str(&text).unwrap();
                Ok((value, true))
            }
        },
        Cmd::Report { model } => {
            let (m, input) = load(cli, model)?;
            let xm = m.crossed();
            let vs = validate_model(&m);
            let valid = vs.is_empty();
            let mut verdicts = serde_json::Map::new();
            verdicts.insert("valid".into(), Value::Bool(valid));
            if valid {
                let s = centre_suite(xm)?;
                verdicts.insert("centre_bcm_valid".into(), Value::Bool(s.bcm.validate().is_empty()));
                verdicts.insert(
                    "quotient_valid".into(),
                    Value::Bool(s.quotient_xm.validate().is_empty()),
                );
                let six = six_term_report(xm)?;
                verdicts.insert("six_term_exact".into(), Value::Bool(six.is_exact()));
                let cmp = CorollaryContext::new(xm)?.verify()?;
                verdicts.insert("comparison_exact".into(), Value::Bool(cmp.is_exact()));
                let guin = verify_guin_diagram(xm, SignMode::DeltaCompatible)?;
                verdicts.insert("guin_diagram_ok".into(), Value::Bool(guin.all_pass()));
                let laws = verify_category_laws(xm);
                let carrier = liecm::centre::centre_carrier(xm);
                let mut tau_all = laws.all_pass();
                for k in 0..carrier.dim() {
                    let p = carrier.basis_element(k);
                    tau_all &= verify_tau_laws(xm, &carrier, &p)?.all_pass();
                }
                tau_all &= verify_centre_category(xm, &carrier)?.all_pass();
                verdicts.insert("lie2_laws_ok".into(), Value::Bool(tau_all));
            }
            let passed = verdicts.values().all(|v| v == &Value::Bool(true));
            Ok((
                envelope(
                    "report",
                    &input,
                    json!({ "verdicts": Value::Object(verdicts), "violations": violations_json(&vs) }),
                ),
                passed,
            ))
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    use std::fmt::Write;
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_text(val, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {val}");
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}-");
                        render_text(item, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}- {item}");
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{v}");
        }
    }
}
