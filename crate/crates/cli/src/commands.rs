use std::fs;
use std::io::{self, Read};
use std::path::Path;

use interval_monge::generate::{Generator, InstanceKind};
use interval_monge::json::{self, IntervalMatrixJson, RealMatrixJson};
use interval_monge::permutation::{permute_general, permute_special, PermutationPair};
use interval_monge::rational::{self, Rational};
use interval_monge::real::{self, MongeDecomposition};
use interval_monge::strong;
use interval_monge::weak::{self, closure, closure::ClosureOp};
use interval_monge::{IntervalMatrix, MongeError, Position};
use serde::Serialize;

use crate::cli::{ClosureArgs, Command, StrongMethod};

pub enum Failure {
    Input(String),
    Internal(String),
}

impl From<MongeError> for Failure {
    fn from(e: MongeError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// Result of a command: whether the verdict was positive, the JSON document
/// and its plain-text rendering.
pub struct Outcome {
    pub positive: bool,
    pub json: serde_json::Value,
    pub human: String,
}

impl Outcome {
    fn new(positive: bool, doc: &impl Serialize, human: String) -> Result<Self, Failure> {
        let json = serde_json::to_value(doc).map_err(|e| Failure::Internal(e.to_string()))?;
        Ok(Self { positive, json, human })
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let read = if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        fs::read_to_string(path)
    };
    read.map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<IntervalMatrix, Failure> {
    let text = read_input(path)?;
    json::parse_interval_matrix(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn one_based(p: Position) -> [usize; 2] {
    [p.row + 1, p.col + 1]
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn dispatch(command: &Command, seed: u64) -> Result<Outcome, Failure> {
    match command {
        Command::CheckStrong { input, method } => check_strong(&load(input)?, *method),
        Command::CheckWeak { input, conditions_only } => check_weak(&load(input)?, *conditions_only),
        Command::Residual { input } => residual(&load(input)?),
        Command::Permute { input, special } => permute(&load(input)?, *special),
        Command::Decompose { input } => decompose(input),
        Command::Closure(args) => closure_command(args),
        Command::Gen { kind, rows, cols } => generate(kind, *rows, *cols, seed),
    }
}

#[derive(Serialize)]
struct StrongReport {
    strong_monge: bool,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<[usize; 2]>,
}

fn check_strong(m: &IntervalMatrix, method: StrongMethod) -> Result<Outcome, Failure> {
    let (verdict, name) = match method {
        StrongMethod::Adjacent => (strong::is_strong_monge(m), "adjacent"),
        StrongMethod::Quadruple => (strong::is_strong_monge_quadruples(m), "quadruple"),
        StrongMethod::Corners => (strong::is_strong_monge_corners(m), "corners"),
        StrongMethod::Submodular => (strong::is_interval_submodular(m), "submodular"),
    };
    let violation = match method {
        StrongMethod::Adjacent => strong::first_strong_violation(m).map(one_based),
        _ => None,
    };
    let mut human = format!("strongly Monge: {} ({name})", yes_no(verdict));
    if let Some([r, c]) = violation {
        human.push_str(&format!("\nfirst violated block at ({r}, {c})"));
    }
    let report = StrongReport {
        strong_monge: verdict,
        method: name,
        violation,
    };
    Outcome::new(verdict, &report, human)
}

#[derive(Serialize)]
struct Conditions {
    zero_containment: bool,
    row_col_intersection: bool,
    residual_sum: bool,
    four_block_pivot: Option<[usize; 2]>,
    necessary_nonneg_residual: Option<bool>,
}

#[derive(Serialize)]
struct WeakReport {
    /// `null` when only conditions were evaluated and none decided.
    weak_monge: Option<bool>,
    decided_by: &'static str,
    witness: Option<RealMatrixJson>,
    conditions: Conditions,
}

fn check_weak(m: &IntervalMatrix, conditions_only: bool) -> Result<Outcome, Failure> {
    let report = weak::evaluate_conditions(m)?;
    let conditions = Conditions {
        zero_containment: report.zero_containment,
        row_col_intersection: report.row_col_intersection,
        residual_sum: report.residual_sum,
        four_block_pivot: report.four_block_pivot.map(one_based),
        necessary_nonneg_residual: report.necessary_nonneg_residual,
    };
    let (verdict, decided_by, witness) = if conditions_only {
        if let Some(w) = report.witness.clone() {
            (Some(true), "sufficient-condition", Some(w))
        } else if report.necessary_nonneg_residual == Some(false) {
            (Some(false), "necessary-condition", None)
        } else {
            (None, "inconclusive", None)
        }
    } else {
        let lp = weak::is_weak_monge(m)?;
        (Some(lp.feasible), "lp", lp.witness)
    };
    let mut human = match verdict {
        Some(v) => format!("weakly Monge: {} ({decided_by})", yes_no(v)),
        None => "weakly Monge: inconclusive (no condition applies)".to_string(),
    };
    human.push_str(&format!(
        "\nconditions: zero containment {}, row/column intersection {}, residual sum {}, four-block {}, nonnegative residual {}",
        yes_no(conditions.zero_containment),
        yes_no(conditions.row_col_intersection),
        yes_no(conditions.residual_sum),
        conditions
            .four_block_pivot
            .map_or_else(|| "no".to_string(), |[r, c]| format!("pivot ({r}, {c})")),
        conditions.necessary_nonneg_residual.map_or("n/a", yes_no),
    ));
    if let Some(w) = &witness {
        human.push_str(&format!("\nwitness:\n{w}"));
    }
    let doc = WeakReport {
        weak_monge: verdict,
        decided_by,
        witness: witness.as_ref().map(json::real_matrix_json),
        conditions,
    };
    Outcome::new(verdict == Some(true), &doc, human)
}

fn residual(m: &IntervalMatrix) -> Result<Outcome, Failure> {
    let r = weak::interval_residual(m)?;
    Outcome::new(true, &json::interval_matrix_json(&r), r.to_string())
}

#[derive(Serialize)]
struct PermuteReport {
    sigma: Vec<usize>,
    pi: Vec<usize>,
    permuted: IntervalMatrixJson,
}

#[derive(Serialize)]
struct NotPermutable {
    permutable: bool,
}

fn permute(m: &IntervalMatrix, special: bool) -> Result<Outcome, Failure> {
    let found = if special { permute_special(m)? } else { permute_general(m)? };
    match found {
        Some((PermutationPair { sigma, pi, .. }, permuted)) => {
            if !strong::is_strong_monge(&permuted) {
                return Err(Failure::Internal("permuted matrix is not strongly Monge".into()));
            }
            let shift = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
            let (sigma, pi) = (shift(&sigma), shift(&pi));
            let human = format!(
                "Monge permutable: yes\nrow order: {sigma:?}\ncolumn order: {pi:?}\npermuted:\n{permuted}"
            );
            let doc = PermuteReport {
                sigma,
                pi,
                permuted: json::interval_matrix_json(&permuted),
            };
            Outcome::new(true, &doc, human)
        }
        None => Outcome::new(false, &NotPermutable { permutable: false }, "Monge permutable: no".into()),
    }
}

#[derive(Serialize)]
struct DecompositionReport {
    kappa: Vec<String>,
    lambda: Vec<String>,
    mu: Vec<Vec<String>>,
    nu: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct NotMonge {
    monge: bool,
}

fn decompose(path: &Path) -> Result<Outcome, Failure> {
    let text = read_input(path)?;
    let m = json::parse_real_matrix(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let d: MongeDecomposition = match real::decompose(&m) {
        Ok(d) => d,
        Err(MongeError::NotMonge) => {
            return Outcome::new(false, &NotMonge { monge: false }, "Monge: no".into());
        }
        Err(e) => return Err(e.into()),
    };
    if real::reconstruct(&d, m.rows(), m.cols())? != m {
        return Err(Failure::Internal("decomposition does not reconstruct the input".into()));
    }
    let list = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>();
    let doc = DecompositionReport {
        kappa: list(&d.kappa),
        lambda: list(&d.lambda),
        mu: d.mu.iter().map(|r| list(r)).collect(),
        nu: d.nu.iter().map(|r| list(r)).collect(),
    };
    let human = format!(
        "kappa (rows): {}\nlambda (columns): {}\nmu (lower-left blocks): {:?}\nnu (upper-right blocks): {:?}",
        doc.kappa.join(" "),
        doc.lambda.join(" "),
        doc.mu,
        doc.nu
    );
    Outcome::new(true, &doc, human)
}

#[derive(Serialize)]
struct ClosureReport {
    operation: String,
    weak_monge: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual_criterion: Option<bool>,
    result: IntervalMatrixJson,
    witness: Option<RealMatrixJson>,
}

fn closure_command(args: &ClosureArgs) -> Result<Outcome, Failure> {
    let op: ClosureOp = args.op.parse().map_err(Failure::Input)?;
    let first = load(&args.first)?;
    let outcome = if op.is_scalar() {
        if args.second.is_some() {
            return Err(Failure::Input(format!("{op} takes one matrix")));
        }
        let alpha = args
            .alpha
            .as_deref()
            .ok_or_else(|| Failure::Input(format!("{op} needs --alpha")))?;
        match op {
            ClosureOp::Scale => closure::scale(&rational::parse(alpha)?, &first)?,
            _ => closure::interval_scale(&json::parse_interval(alpha)?, &first)?,
        }
    } else {
        let second_path = args
            .second
            .as_ref()
            .ok_or_else(|| Failure::Input(format!("{op} takes two matrices")))?;
        let second = load(second_path)?;
        match op {
            ClosureOp::AddWeakWeak => closure::add_weak_weak(&first, &second)?,
            ClosureOp::AddWeakAny => closure::add_weak_any(&first, &second)?,
            ClosureOp::EnvelopeUnion => closure::envelope_union(&first, &second)?,
            ClosureOp::MixedAdd => closure::mixed_add(&first, &second)?,
            ClosureOp::MixedIntersection => closure::mixed_intersection(&first, &second)?,
            ClosureOp::MixedEnvelope => closure::mixed_envelope(&first, &second)?,
            ClosureOp::Scale | ClosureOp::IntervalScale => unreachable!("scalar operations handled above"),
        }
    };
    let mut human = format!("{op}: weakly Monge {}", yes_no(outcome.weak_monge));
    if let Some(c) = outcome.criterion {
        human.push_str(&format!(" (residual criterion {})", yes_no(c)));
    }
    human.push_str(&format!("\nresult:\n{}", outcome.result));
    if let Some(w) = &outcome.witness {
        human.push_str(&format!("\nwitness:\n{w}"));
    }
    let doc = ClosureReport {
        operation: op.to_string(),
        weak_monge: outcome.weak_monge,
        residual_criterion: outcome.criterion,
        result: json::interval_matrix_json(&outcome.result),
        witness: outcome.witness.as_ref().map(json::real_matrix_json),
    };
    Outcome::new(outcome.weak_monge, &doc, human)
}

fn generate(kind: &str, rows: usize, cols: usize, seed: u64) -> Result<Outcome, Failure> {
    let kind: InstanceKind = kind.parse().map_err(Failure::Input)?;
    let m = Generator::new(seed).generate(kind, rows, cols)?;
    Outcome::new(true, &json::interval_matrix_json(&m), m.to_string())
}
