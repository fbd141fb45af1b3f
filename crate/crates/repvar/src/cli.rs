//! Command-line front end: parse inputs, dispatch computations, emit
//! text or JSON reports.
//!
//! Exit codes distinguish three situations: 0 for a computed positive
//! verdict, 1 for a computed negative verdict (relation violated,
//! obstruction hit, reducible, not regular, not a root, failed catalog
//! assertion), and 2 for inputs that could not be processed at all.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::alexander::{
    alexander_polynomials, deformation_condition_general, deformation_condition_n2,
};
use crate::catalog;
use crate::cohomology::{
    check_infinitesimal_regularity, cocycle_space, cohomology_dims, obstruction_step,
    ModuleSpec, ObstructionOutcome, TruncatedDeformation,
};
use crate::linalg::Matrix;
use crate::numbers::{parse_field_element, CyclotomicNumber, LaurentPoly};
use crate::reps::{
    build_metabelian, metabelian_sl, solve_metabelian_cocycles, Irreducibility, Representation,
};
use crate::words::{parse_presentation, Presentation, Word};

pub const SCHEMA_VERSION: u32 = 1;

const EXIT_OK: i32 = 0;
const EXIT_VERDICT: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "repvar",
    about = "exact computations on representation varieties of finitely presented groups"
)]
struct Cli {
    /// Cyclotomic context order N: all field elements live in Q(zeta_N).
    #[arg(long, global = true, default_value_t = crate::numbers::DEFAULT_FIELD_ORDER)]
    field_order: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct RepInputs {
    /// Presentation file in the `gens ...; rel ...; ab ...;` grammar.
    #[arg(long)]
    presentation: PathBuf,
    /// Representation file: `gen <name> = [[...],[...]];` blocks.
    #[arg(long)]
    rep: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify that generator images satisfy the relators and the
    /// determinant gate.
    CheckRep(RepInputs),
    /// Basis and dimension of the cocycle space Z^1 for a module.
    Cocycles {
        #[command(flatten)]
        inputs: RepInputs,
        /// ad-sl | ad-gl | one-dim:EXPR | hom:A.rep,B.rep | metabelian:EXPR,N
        #[arg(long, default_value = "ad-sl")]
        module: String,
    },
    /// Dimension report h0, z1, b1, h1, h2_complex for a module.
    Cohomology {
        #[command(flatten)]
        inputs: RepInputs,
        #[arg(long, default_value = "ad-sl")]
        module: String,
    },
    /// Infinitesimal regularity: h1 against k(n-1) boundary tori.
    Regularity {
        #[command(flatten)]
        inputs: RepInputs,
        #[arg(long, default_value_t = 1)]
        boundary_tori: usize,
    },
    /// Twisted Alexander polynomials, optionally evaluated at lambda.
    Alexander {
        #[command(flatten)]
        inputs: RepInputs,
        /// Evaluation points (field-element expressions).
        #[arg(long)]
        lambda: Vec<String>,
    },
    /// Root conditions for deforming diagonal or block-twist
    /// representations.
    DeformCondition {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        lambda: String,
        /// hom:A.rep,B.rep switches to the two-block condition.
        #[arg(long)]
        module: Option<String>,
    },
    /// Iterate obstruction steps from a first-order deformation.
    Obstruction {
        #[command(flatten)]
        inputs: RepInputs,
        /// Cocycle file: `gen <name> = [[...]];` trace-zero blocks.
        #[arg(long)]
        cocycle: PathBuf,
        /// Target order to extend to.
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Burnside irreducibility test with certificates.
    Irreducible(RepInputs),
    /// Exact traces over a list of words.
    Character {
        #[command(flatten)]
        inputs: RepInputs,
        /// Comma-separated word expressions, e.g. "x, y, x y^-1".
        #[arg(long)]
        words: String,
    },
    /// Solve metabelian cocycles and build the block representation.
    Metabelian {
        #[arg(long)]
        presentation: PathBuf,
        /// The torsion parameter alpha (field-element expression).
        #[arg(long)]
        alpha: String,
        /// Target rank n of the block representation.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Optional n-th root of alpha for the SL normalization.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// The executable example library.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List entry ids and summaries.
    List,
    /// Run one entry's assertion suite.
    Run { id: String },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exit codes
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.rendered);
            if outcome.verdict_positive {
                EXIT_OK
            } else {
                EXIT_VERDICT
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

struct Outcome {
    rendered: String,
    verdict_positive: bool,
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    let order = cli.field_order;
    if order == 0 {
        return Err("field order must be at least 1".into());
    }
    match &cli.command {
        Command::CheckRep(inputs) => {
            let p = load_presentation(&inputs.presentation)?;
            let parsed = load_rep_file(&inputs.rep, order)?;
            match build_rep(&p, parsed) {
                Ok(rep) => {
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "check-rep",
                        "valid": true,
                        "rank": rep.rank(),
                        "determinant_target": rep.determinant_target().to_string(),
                    });
                    Ok(render(cli, payload, true, |payload, out| {
                        let _ = writeln!(out, "representation verified: rank {}", payload["rank"]);
                    }))
                }
                Err(e) => {
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "check-rep",
                        "valid": false,
                        "diagnostic": e.to_string(),
                    });
                    Ok(render(cli, payload, false, |payload, out| {
                        let _ = writeln!(out, "invalid: {}", payload["diagnostic"]);
                    }))
                }
            }
        }
        Command::Cocycles { inputs, module } => {
            let (rep, spec) = load_rep_and_module(inputs, module, order)?;
            let space = cocycle_space(&rep, &spec).map_err(|e| e.to_string())?;
            let basis: Vec<Value> = space
                .basis()
                .iter()
                .map(|v| Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect()))
                .collect();
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "cocycles",
                "module": space.module().description(),
                "module_dim": space.module_dim(),
                "z1": space.dim(),
                "witnesses": basis,
            });
            Ok(render(cli, payload, true, |payload, out| {
                let _ = writeln!(
                    out,
                    "module {} of dimension {}: dim Z1 = {}",
                    payload["module"], payload["module_dim"], payload["z1"]
                );
            }))
        }
        Command::Cohomology { inputs, module } => {
            let (rep, spec) = load_rep_and_module(inputs, module, order)?;
            let report = cohomology_dims(&rep, &spec).map_err(|e| e.to_string())?;
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "cohomology",
                "module": report.module_description,
                "module_dim": report.module_dim,
                "h0": report.h0,
                "z1": report.z1,
                "b1": report.b1,
                "h1": report.h1,
                "h2_complex": report.h2_complex,
            });
            Ok(render(cli, payload, true, |payload, out| {
                let _ = writeln!(
                    out,
                    "h0 = {}, z1 = {}, b1 = {}, h1 = {}, h2_complex = {}",
                    payload["h0"], payload["z1"], payload["b1"], payload["h1"],
                    payload["h2_complex"]
                );
            }))
        }
        Command::Regularity {
            inputs,
            boundary_tori,
        } => {
            let (rep, _) = load_rep_and_module(inputs, "ad-sl", order)?;
            let verdict = check_infinitesimal_regularity(&rep, *boundary_tori)
                .map_err(|e| e.to_string())?;
            let regular = verdict.regular;
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "regularity",
                "regular": verdict.regular,
                "h1": verdict.h1,
                "expected_h1": verdict.expected_h1,
                "predicted_component_dim": verdict.predicted_component_dim,
                "h0": verdict.report.h0,
                "z1": verdict.report.z1,
                "b1": verdict.report.b1,
                "h2_complex": verdict.report.h2_complex,
            });
            Ok(render(cli, payload, regular, |payload, out| {
                let _ = writeln!(
                    out,
                    "regular: {} (h1 = {}, expected {}, predicted component dim {})",
                    payload["regular"], payload["h1"], payload["expected_h1"],
                    payload["predicted_component_dim"]
                );
            }))
        }
        Command::Alexander { inputs, lambda } => {
            let p = load_presentation(&inputs.presentation)?;
            let rep = build_rep(&p, load_rep_file(&inputs.rep, order)?)
                .map_err(|e| format!("representation does not verify: {e}"))?;
            let data = alexander_polynomials(&rep).map_err(|e| e.to_string())?;
            let mut evaluations = vec![];
            for expr in lambda {
                let x = parse_field_element(expr, order).map_err(|e| e.to_string())?;
                let value = data.delta1.eval(&x).map_err(|e| e.to_string())?;
                let derivative = data
                    .delta1
                    .derivative()
                    .eval(&x)
                    .map_err(|e| e.to_string())?;
                evaluations.push(json!({
                    "lambda": expr,
                    "value": value.to_string(),
                    "is_root": value.is_zero(),
                    "is_simple": value.is_zero() && !derivative.is_zero(),
                }));
            }
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "alexander",
                "delta0": poly_json(&data.delta0),
                "delta1": poly_json(&data.delta1),
                "delta1_display": data.delta1.to_string(),
                "column_deleted": data.column_deleted,
                "evaluations": evaluations,
            });
            Ok(render(cli, payload, true, |payload, out| {
                let _ = writeln!(out, "delta1 = {}", payload["delta1_display"]);
                if let Some(evals) = payload["evaluations"].as_array() {
                    for e in evals {
                        let _ = writeln!(
                            out,
                            "  at {}: value {} (root: {}, simple: {})",
                            e["lambda"], e["value"], e["is_root"], e["is_simple"]
                        );
                    }
                }
            }))
        }
        Command::DeformCondition {
            presentation,
            lambda,
            module,
        } => {
            let p = load_presentation(presentation)?;
            let lam = parse_field_element(lambda, order).map_err(|e| e.to_string())?;
            if lam.is_zero() {
                return Err("lambda must be nonzero".into());
            }
            match module.as_deref() {
                None => {
                    let verdict = deformation_condition_n2(&p, &lam).map_err(|e| e.to_string())?;
                    let positive = verdict.is_root;
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "deform-condition",
                        "delta1": poly_json(&verdict.delta1),
                        "value_at_lambda_sq": verdict.value.to_string(),
                        "is_root": verdict.is_root,
                        "is_simple_root": verdict.is_simple_root,
                    });
                    Ok(render(cli, payload, positive, |payload, out| {
                        let _ = writeln!(
                            out,
                            "Delta(lambda^2) = {} (root: {}, simple: {})",
                            payload["value_at_lambda_sq"], payload["is_root"],
                            payload["is_simple_root"]
                        );
                    }))
                }
                Some(spec) => {
                    let (alpha, beta) = match spec.strip_prefix("hom:") {
                        Some(rest) => {
                            let (a, b) = rest
                                .split_once(',')
                                .ok_or("hom module needs two rep files: hom:A,B")?;
                            let alpha = build_rep(&p, load_rep_file(&PathBuf::from(a), order)?)
                                .map_err(|e| format!("alpha does not verify: {e}"))?;
                            let beta = build_rep(&p, load_rep_file(&PathBuf::from(b), order)?)
                                .map_err(|e| format!("beta does not verify: {e}"))?;
                            (alpha, beta)
                        }
                        None => return Err(format!("deform-condition supports hom:A,B, got `{spec}`")),
                    };
                    let verdict = deformation_condition_general(&alpha, &beta, &lam)
                        .map_err(|e| e.to_string())?;
                    let positive = verdict.deformable_necessary;
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "deform-condition",
                        "delta_plus": poly_json(&verdict.delta_plus),
                        "delta_minus": poly_json(&verdict.delta_minus),
                        "value_plus": verdict.value_plus.to_string(),
                        "value_minus": verdict.value_minus.to_string(),
                        "is_root_plus": verdict.is_root_plus,
                        "is_root_minus": verdict.is_root_minus,
                        "duality_holds": verdict.duality_holds,
                        "deformable_necessary": verdict.deformable_necessary,
                    });
                    Ok(render(cli, payload, positive, |payload, out| {
                        let _ = writeln!(
                            out,
                            "necessary condition: {} (duality holds: {})",
                            payload["deformable_necessary"], payload["duality_holds"]
                        );
                    }))
                }
            }
        }
        Command::Obstruction {
            inputs,
            cocycle,
            order: target_order,
        } => {
            let p = load_presentation(&inputs.presentation)?;
            let rep = build_rep(&p, load_rep_file(&inputs.rep, order)?)
                .map_err(|e| format!("representation does not verify: {e}"))?;
            let assignment = load_assignment(&p, cocycle, order, rep.rank())?;
            let mut deformation = TruncatedDeformation::new(rep, vec![assignment])
                .map_err(|e| format!("cocycle file is not a first-order deformation: {e}"))?;
            let mut steps = vec![];
            let mut obstructed_at = None;
            while deformation.order() < *target_order {
                match obstruction_step(&deformation).map_err(|e| e.to_string())? {
                    ObstructionOutcome::Extended { extension } => {
                        deformation = deformation
                            .extend(extension)
                            .map_err(|e| format!("extension failed to verify: {e}"))?;
                        steps.push(json!({
                            "order": deformation.order(),
                            "extended": true,
                        }));
                    }
                    ObstructionOutcome::Obstructed { defects } => {
                        obstructed_at = Some(deformation.order() + 1);
                        steps.push(json!({
                            "order": deformation.order() + 1,
                            "extended": false,
                            "defects": defects
                                .iter()
                                .map(matrix_json)
                                .collect::<Vec<_>>(),
                        }));
                        break;
                    }
                }
            }
            let positive = obstructed_at.is_none();
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "obstruction",
                "reached_order": deformation.order(),
                "obstructed_at": obstructed_at,
                "steps": steps,
            });
            Ok(render(cli, payload, positive, |payload, out| {
                match payload["obstructed_at"].as_u64() {
                    Some(k) => {
                        let _ = writeln!(out, "obstructed at order {k}");
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "extended to order {}",
                            payload["reached_order"]
                        );
                    }
                }
            }))
        }
        Command::Irreducible(inputs) => {
            let p = load_presentation(&inputs.presentation)?;
            let rep = build_rep(&p, load_rep_file(&inputs.rep, order)?)
                .map_err(|e| format!("representation does not verify: {e}"))?;
            let verdict = rep.is_irreducible();
            let (positive, payload) = match &verdict {
                Irreducibility::Irreducible { spanning_words } => (
                    true,
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "irreducible",
                        "verdict": "irreducible",
                        "certificate": spanning_words
                            .iter()
                            .map(|w| p.word_to_string(w))
                            .collect::<Vec<_>>(),
                    }),
                ),
                Irreducibility::Reducible { invariant_subspace } => (
                    false,
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "irreducible",
                        "verdict": "reducible",
                        "invariant_subspace": invariant_subspace
                            .iter()
                            .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    }),
                ),
                Irreducibility::Undetermined { span_dim, reason } => (
                    false,
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "irreducible",
                        "verdict": "undetermined",
                        "span_dim": span_dim,
                        "reason": reason,
                    }),
                ),
            };
            Ok(render(cli, payload, positive, |payload, out| {
                let _ = writeln!(out, "verdict: {}", payload["verdict"]);
            }))
        }
        Command::Character { inputs, words } => {
            let p = load_presentation(&inputs.presentation)?;
            let rep = build_rep(&p, load_rep_file(&inputs.rep, order)?)
                .map_err(|e| format!("representation does not verify: {e}"))?;
            let word_list = parse_word_list(&p, words)?;
            let character = rep.character_of(&word_list);
            let values: Vec<Value> = word_list
                .iter()
                .zip(character.values())
                .map(|(w, v)| {
                    json!({
                        "word": p.word_to_string(w),
                        "trace": v.to_string(),
                    })
                })
                .collect();
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "character",
                "values": values,
            });
            Ok(render(cli, payload, true, |payload, out| {
                if let Some(values) = payload["values"].as_array() {
                    for v in values {
                        let _ = writeln!(out, "tr({}) = {}", v["word"], v["trace"]);
                    }
                }
            }))
        }
        Command::Metabelian {
            presentation,
            alpha,
            rank,
            lambda,
        } => {
            let p = load_presentation(presentation)?;
            let alpha = parse_field_element(alpha, order).map_err(|e| e.to_string())?;
            if alpha.is_zero() {
                return Err("alpha must be nonzero".into());
            }
            if *rank < 2 {
                return Err("rank must be at least 2".into());
            }
            let basis = solve_metabelian_cocycles(&p, &alpha, *rank).map_err(|e| e.to_string())?;
            let basis_json: Vec<Value> = basis
                .iter()
                .map(|assignment| {
                    Value::Array(
                        assignment
                            .iter()
                            .map(|row| {
                                Value::Array(
                                    row.iter().map(|c| Value::String(c.to_string())).collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect();
            let mut built = Value::Null;
            if let Some(z) = basis.first() {
                let gl = build_metabelian(&p, &alpha, *rank, z).map_err(|e| e.to_string())?;
                let images: Vec<Value> = gl.images().iter().map(matrix_json).collect();
                let sl = match lambda {
                    Some(expr) => {
                        let lam = parse_field_element(expr, order).map_err(|e| e.to_string())?;
                        let rep = metabelian_sl(&p, &alpha, *rank, z, &lam)
                            .map_err(|e| e.to_string())?;
                        json!({
                            "lambda": expr,
                            "images": rep.images().iter().map(matrix_json).collect::<Vec<_>>(),
                        })
                    }
                    None => Value::Null,
                };
                built = json!({ "gl_images": images, "sl": sl });
            }
            let payload = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "metabelian",
                "solution_dim": basis.len(),
                "basis": basis_json,
                "first_solution_rep": built,
            });
            Ok(render(cli, payload, true, |payload, out| {
                let _ = writeln!(
                    out,
                    "cocycle solution space has dimension {}",
                    payload["solution_dim"]
                );
            }))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries: Vec<Value> = catalog::entry_ids()
                    .iter()
                    .map(|id| {
                        let e = catalog::entry(id).expect("listed ids exist");
                        json!({
                            "id": e.id,
                            "summary": e.summary,
                            "field_order": e.field_order,
                        })
                    })
                    .collect();
                let payload = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "catalog-list",
                    "entries": entries,
                });
                Ok(render(cli, payload, true, |payload, out| {
                    if let Some(entries) = payload["entries"].as_array() {
                        for e in entries {
                            let _ = writeln!(
                                out,
                                "{:<16} {}",
                                e["id"].as_str().unwrap_or(""),
                                e["summary"].as_str().unwrap_or("")
                            );
                        }
                    }
                }))
            }
            CatalogAction::Run { id } => {
                let e = catalog::entry(id).map_err(|e| e.to_string())?;
                let results = e.run();
                let all_passed = results.iter().all(|r| r.passed);
                let assertions: Vec<Value> = results
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "passed": r.passed,
                            "detail": r.detail,
                        })
                    })
                    .collect();
                let payload = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "catalog-run",
                    "id": e.id,
                    "passed": all_passed,
                    "assertions": assertions,
                });
                Ok(render(cli, payload, all_passed, |payload, out| {
                    if let Some(assertions) = payload["assertions"].as_array() {
                        for a in assertions {
                            let mark = if a["passed"].as_bool().unwrap_or(false) {
                                "ok"
                            } else {
                                "FAIL"
                            };
                            let _ = writeln!(
                                out,
                                "[{mark}] {}",
                                a["name"].as_str().unwrap_or("")
                            );
                        }
                    }
                    let _ = writeln!(out, "entry result: {}", payload["passed"]);
                }))
            }
        },
    }
}

fn render(
    cli: &Cli,
    payload: Value,
    verdict_positive: bool,
    text: impl Fn(&Value, &mut String),
) -> Outcome {
    let rendered = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            let mut out = String::new();
            text(&payload, &mut out);
            out
        }
    };
    Outcome {
        rendered,
        verdict_positive,
    }
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::String(m[(i, j)].to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Polynomials serialize as coefficient maps exponent -> field element.
fn poly_json(p: &LaurentPoly) -> Value {
    let mut map = serde_json::Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), Value::String(c.to_string()));
    }
    Value::Object(map)
}

fn load_presentation(path: &PathBuf) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
}

struct RepFile {
    determinant: Option<CyclotomicNumber>,
    generators: Vec<(String, Matrix)>,
}

/// Parse a rep/cocycle file: optional `det <expr>;` then one
/// `gen <name> = [[...],[...]];` per generator.
fn load_rep_file(path: &PathBuf, order: u32) -> Result<RepFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut determinant = None;
    let mut generators = vec![];
    for raw in text.split(';') {
        let stripped: String = raw
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        let stmt = stripped.trim();
        if stmt.is_empty() {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("det") {
            let value = parse_field_element(rest.trim(), order)
                .map_err(|e| format!("{}: det: {e}", path.display()))?;
            determinant = Some(value);
        } else if let Some(rest) = stmt.strip_prefix("gen") {
            let (name, matrix_src) = rest
                .split_once('=')
                .ok_or_else(|| format!("{}: gen statement needs `=`", path.display()))?;
            let m = parse_matrix(matrix_src.trim(), order)
                .map_err(|e| format!("{}: gen {}: {e}", path.display(), name.trim()))?;
            generators.push((name.trim().to_string(), m));
        } else {
            return Err(format!(
                "{}: expected `det` or `gen`, found `{}`",
                path.display(),
                stmt.lines().next().unwrap_or("")
            ));
        }
    }
    if generators.is_empty() {
        return Err(format!("{}: no generator images", path.display()));
    }
    Ok(RepFile {
        determinant,
        generators,
    })
}

/// `[[a, b], [c, d]]` with field-element expressions as entries.
fn parse_matrix(src: &str, order: u32) -> Result<Matrix, String> {
    let src = src.trim();
    let inner = src
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or("matrix must be wrapped in [ ... ]")?;
    let mut rows: Vec<Vec<CyclotomicNumber>> = vec![];
    let mut depth = 0usize;
    let mut row_src = String::new();
    let mut in_row = false;
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 {
                    in_row = true;
                    row_src.clear();
                    continue;
                }
            }
            ']' => {
                if depth == 0 {
                    return Err("unbalanced brackets".into());
                }
                depth -= 1;
                if depth == 0 {
                    let mut row = vec![];
                    for entry in row_src.split(',') {
                        row.push(
                            parse_field_element(entry.trim(), order).map_err(|e| e.to_string())?,
                        );
                    }
                    rows.push(row);
                    in_row = false;
                    continue;
                }
            }
            ',' if depth == 0 => continue,
            c if depth == 0 && c.is_whitespace() => continue,
            c if depth == 0 => return Err(format!("unexpected `{c}` between rows")),
            _ => {}
        }
        if in_row {
            row_src.push(ch);
        }
    }
    if depth != 0 {
        return Err("unbalanced brackets".into());
    }
    if rows.is_empty() {
        return Err("empty matrix".into());
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err("ragged matrix rows".into());
    }
    Ok(Matrix::from_rows(rows))
}

fn build_rep(p: &Presentation, file: RepFile) -> Result<Representation, crate::reps::RepError> {
    let mut images = vec![Matrix::identity(1); p.generator_count()];
    let mut seen = vec![false; p.generator_count()];
    for (name, m) in file.generators {
        match p.generator_index(&name) {
            Some(i) => {
                images[i] = m;
                seen[i] = true;
            }
            None => {
                return Err(crate::reps::RepError::BadImageShape);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(crate::reps::RepError::BadImageShape);
    }
    match file.determinant {
        Some(d) if !d.is_one() => Representation::with_determinant(p, images, d),
        _ => Representation::new(p, images),
    }
}

/// A generator assignment of trace-zero matrices, from the rep-file
/// format.
fn load_assignment(
    p: &Presentation,
    path: &PathBuf,
    order: u32,
    rank: usize,
) -> Result<Vec<Matrix>, String> {
    let file = load_rep_file(path, order)?;
    let mut values = vec![Matrix::zeros(rank, rank); p.generator_count()];
    for (name, m) in file.generators {
        let i = p
            .generator_index(&name)
            .ok_or_else(|| format!("unknown generator `{name}` in {}", path.display()))?;
        if m.rows() != rank || m.cols() != rank {
            return Err(format!("cocycle value for `{name}` must be {rank} x {rank}"));
        }
        values[i] = m;
    }
    Ok(values)
}

fn parse_word_list(p: &Presentation, src: &str) -> Result<Vec<Word>, String> {
    // reuse the presentation grammar by parsing a synthetic rel clause
    let mut words = vec![];
    for item in src.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let synthetic = format!(
            "gens {}; rel {};",
            p.generator_names().join(", "),
            item
        );
        let parsed =
            parse_presentation(&synthetic).map_err(|e| format!("word `{item}`: {e}"))?;
        words.push(parsed.relators()[0].clone());
    }
    if words.is_empty() {
        return Err("empty word list".into());
    }
    Ok(words)
}

fn load_rep_and_module(
    inputs: &RepInputs,
    module: &str,
    order: u32,
) -> Result<(Representation, ModuleSpec), String> {
    let p = load_presentation(&inputs.presentation)?;
    let rep = build_rep(&p, load_rep_file(&inputs.rep, order)?)
        .map_err(|e| format!("representation does not verify: {e}"))?;
    let spec = parse_module_spec(&p, module, order)?;
    Ok((rep, spec))
}

fn parse_module_spec(
    p: &Presentation,
    module: &str,
    order: u32,
) -> Result<ModuleSpec, String> {
    if module == "ad-sl" {
        return Ok(ModuleSpec::AdjointSl);
    }
    if module == "ad-gl" {
        return Ok(ModuleSpec::AdjointGl);
    }
    if let Some(expr) = module.strip_prefix("one-dim:") {
        let lambda = parse_field_element(expr, order).map_err(|e| e.to_string())?;
        return ModuleSpec::one_dim_twist(p, &lambda).map_err(|e| e.to_string());
    }
    if let Some(rest) = module.strip_prefix("hom:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or("hom module needs two rep files: hom:A,B")?;
        let alpha = build_rep(p, load_rep_file(&PathBuf::from(a.trim()), order)?)
            .map_err(|e| format!("alpha does not verify: {e}"))?;
        let beta = build_rep(p, load_rep_file(&PathBuf::from(b.trim()), order)?)
            .map_err(|e| format!("beta does not verify: {e}"))?;
        return ModuleSpec::hom_module(&alpha, &beta).map_err(|e| e.to_string());
    }
    if let Some(rest) = module.strip_prefix("metabelian:") {
        let (expr, n) = rest
            .split_once(',')
            .ok_or("metabelian module needs alpha and n: metabelian:ALPHA,N")?;
        let alpha = parse_field_element(expr.trim(), order).map_err(|e| e.to_string())?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| "metabelian rank must be an integer")?;
        return ModuleSpec::metabelian(p, &alpha, n).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown module `{module}`; expected ad-sl, ad-gl, one-dim:EXPR, hom:A,B or metabelian:ALPHA,N"
    ))
}
