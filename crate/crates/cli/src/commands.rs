use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use skewloci::lie::{self, LieAlgebra};
use skewloci::strata::{self, BoundKind, BoundQuery, CertifyMode, SearchOutcome, SkewLinearSpace, Verdict};
use skewloci::weyl::{self, BettiVector, ExponentList, QPolynomial};
use skewloci::{parse_rational, Error, Execution, Rational};

use crate::{
    BettiArgs, BoundsArgs, Cli, Command, ConstrankAction, FiberKind, KindArg, LieAction, LieArgs, Mode, PoincareArgs,
    PoincareKind,
};

/// Why a command could not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input or parameters (exit 2).
    Input(String),
    /// A mathematical precondition does not hold (exit 3).
    Precondition { message: String, details: Option<Value> },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Jacobi(f) => Failure::Precondition {
                message: f.to_string(),
                details: Some(serde_json::to_value(&f).expect("serialisable")),
            },
            e if e.is_input_error() || matches!(e, Error::DependentBasis | Error::WrongDimension { .. }) => {
                Failure::Input(e.to_string())
            }
            e => Failure::Precondition {
                message: e.to_string(),
                details: None,
            },
        }
    }
}

pub struct Report {
    pub result: Value,
    /// Set when a proved bound is violated.
    pub falsified: Option<String>,
}

impl Report {
    fn ok(result: Value) -> Self {
        Self {
            result,
            falsified: None,
        }
    }
}

pub struct Outcome {
    pub command: String,
    pub inputs: Value,
    pub report: Result<Report, Failure>,
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let (command, inputs, report) = match &cli.command {
        Command::Poincare(a) => (
            format!("poincare {}", poincare_name(a.kind)),
            poincare_inputs(a),
            poincare(a),
        ),
        Command::Betti(a) => (
            "betti".into(),
            json!({"base": a.base, "base_file": a.base_file, "r": a.r}),
            betti(a),
        ),
        Command::Constrank { action } => match action {
            ConstrankAction::Verify { file, r, mode } => (
                "constrank verify".into(),
                json!({"file": file, "r": r, "mode": mode_name(*mode), "samples": g.samples}),
                verify(file, *r, *mode, g.seed, g.samples),
            ),
            ConstrankAction::Search { n, r, m } => (
                "constrank search".into(),
                json!({"N": n, "r": r, "m": m, "budget": g.budget}),
                search(*n, *r, *m, g.seed, g.budget),
            ),
            ConstrankAction::Profile { file } => (
                "constrank profile".into(),
                json!({"file": file, "samples": g.samples}),
                profile(file, g.seed, g.samples),
            ),
        },
        Command::Lie(a) => (
            format!("lie {}", lie_name(a.action)),
            json!({"algebra": a.algebra, "lambda": a.lambda, "samples": g.samples}),
            lie_cmd(a, g.seed, g.samples),
        ),
        Command::Bounds(a) => (
            "bounds".into(),
            json!({"kind": kind(a.kind), "N": a.n, "r": a.r, "e": a.e}),
            bounds(a),
        ),
    };
    Outcome {
        command,
        inputs,
        report,
    }
}

fn poincare_name(k: PoincareKind) -> &'static str {
    match k {
        PoincareKind::Grass2 => "grass2",
        PoincareKind::Isotropic => "isotropic",
        PoincareKind::Flag => "flag",
        PoincareKind::Quotient => "quotient",
        PoincareKind::Bundle => "bundle",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Auto => "auto",
        Mode::Exact => "exact",
        Mode::Probabilistic => "probabilistic",
    }
}

fn lie_name(a: LieAction) -> &'static str {
    match a {
        LieAction::Validate => "validate",
        LieAction::Orbit => "orbit",
        LieAction::Minorbit => "minorbit",
        LieAction::Histogram => "histogram",
        LieAction::Bound => "bound",
    }
}

fn kind(k: KindArg) -> BoundKind {
    match k {
        KindArg::Skew => BoundKind::Skew,
        KindArg::Symmetric => BoundKind::Symmetric,
    }
}

/// Small integers as JSON numbers, anything larger as a decimal string.
fn big(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn polynomial(p: &QPolynomial) -> Value {
    let one = 1.into();
    json!({
        "variable": "q",
        "coefficients": p.coeffs().iter().map(big).collect::<Vec<_>>(),
        "degree": p.degree(),
        "palindromic": p.is_palindromic(),
        "euler_characteristic": big(&p.eval(&one)),
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn group_list(s: Option<&String>, flag: &str) -> Result<Vec<ExponentList>, Failure> {
    let s = s.ok_or_else(|| Failure::Input(format!("missing --{flag}")))?;
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse::<ExponentList>().map_err(Failure::from))
        .collect()
}

fn int_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Input(format!("not an integer: {t:?}")))
        })
        .collect()
}

fn poincare_inputs(a: &PoincareArgs) -> Value {
    json!({
        "kind": poincare_name(a.kind),
        "r": a.r,
        "group": a.group,
        "levi": a.levi,
        "base": a.base,
        "fiber": match a.fiber { FiberKind::Grass2 => "grass2", FiberKind::Isotropic => "isotropic" },
    })
}

fn poincare(a: &PoincareArgs) -> Result<Report, Failure> {
    let p = match a.kind {
        PoincareKind::Grass2 => weyl::poincare_grass2(need(a.r, "r")?)?,
        PoincareKind::Isotropic => weyl::poincare_isotropic_grass2(need(a.r, "r")?)?,
        PoincareKind::Flag => weyl::poincare_full_flag(&group_list(a.group.as_ref(), "group")?),
        PoincareKind::Quotient => weyl::poincare_parabolic_quotient(
            &group_list(a.group.as_ref(), "group")?,
            &group_list(a.levi.as_ref(), "levi")?,
        )?,
        PoincareKind::Bundle => {
            let base = a
                .base
                .as_deref()
                .ok_or_else(|| Failure::Input("missing --base".into()))?;
            let base = QPolynomial::from_ints(&int_list(base)?);
            let r = need(a.r, "r")?;
            let fiber = match a.fiber {
                FiberKind::Grass2 => weyl::poincare_grass2(r)?,
                FiberKind::Isotropic => weyl::poincare_isotropic_grass2(r)?,
            };
            weyl::poincare_bundle(&base, &fiber)
        }
    };
    Ok(Report::ok(polynomial(&p)))
}

fn betti(a: &BettiArgs) -> Result<Report, Failure> {
    let base: Option<BettiVector> = match (&a.base, &a.base_file) {
        (Some(s), None) => {
            let b = int_list(s)?;
            if b.is_empty() {
                None
            } else {
                if b.len() % 2 == 0 {
                    return Err(Failure::Input(format!(
                        "a base of complex dimension d has 2d + 1 Betti numbers, got {}",
                        b.len()
                    )));
                }
                let b = b
                    .into_iter()
                    .map(|x| u64::try_from(x).map_err(|_| Failure::Input("Betti numbers are nonnegative".into())))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(BettiVector::new((b.len() - 1) / 2, b)?)
            }
        }
        (None, Some(path)) => {
            let v: BettiVector =
                serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("malformed Betti file: {e}")))?;
            if v.b.len() != 2 * v.d + 1 {
                return Err(Failure::Input(format!(
                    "expected {} Betti numbers, got {}",
                    2 * v.d + 1,
                    v.b.len()
                )));
            }
            Some(v)
        }
        _ => return Err(Failure::Input("give exactly one of --base and --base-file".into())),
    };
    // validates r even for the empty base as well
    weyl::poincare_isotropic_grass2(a.r)?;
    let Some(base) = base else {
        return Ok(Report::ok(json!({
            "d": null,
            "grass2_top": 0,
            "isotropic_top": 0,
            "difference": 0,
            "b_2d": 0,
            "difference_equals_b_2d": true,
        })));
    };
    let g = weyl::top_betti_grass2_bundle(&base, a.r)?;
    let z = weyl::top_betti_isotropic_bundle(&base, a.r)?;
    let diff = &g - &z;
    let b2d = base.get(2 * base.d as i64);
    let holds = diff == b2d.into();
    let d = base.d;
    Ok(Report {
        result: json!({
            "d": d,
            "grass2_top_degree": 2 * d + 2 * a.r - 4,
            "isotropic_top_degree": 2 * d + 2 * a.r - 6,
            "grass2_top": big(&g),
            "isotropic_top": big(&z),
            "difference": big(&diff),
            "b_2d": b2d,
            "difference_equals_b_2d": holds,
        }),
        falsified: (!holds).then(|| "top Betti difference differs from b_2d".into()),
    })
}

fn load_space(path: &Path) -> Result<SkewLinearSpace, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("malformed space file: {e}")))
}

fn bound_checks(u: &SkewLinearSpace, r: usize, verdict: &Verdict) -> Result<(Vec<Value>, Option<String>), Failure> {
    if !verdict.is_constant_rank() {
        return Ok((vec![], None));
    }
    let reports = [
        strata::verify_constant_rank_bound(u, r, verdict)?,
        strata::projectivized_family_check(u, r, verdict)?,
    ];
    let broken = reports
        .iter()
        .find(|b| !b.holds)
        .map(|b| format!("violated: {}", b.statement));
    let values = reports
        .iter()
        .map(|b| serde_json::to_value(b).expect("serialisable"))
        .collect();
    Ok((values, broken))
}

fn verdict_report(u: &SkewLinearSpace, r: usize, verdict: &Verdict) -> Result<Report, Failure> {
    let bound = 2 * (u.n() as i64 - r as i64) + 1;
    let (checks, falsified) = bound_checks(u, r, verdict)?;
    Ok(Report {
        result: json!({
            "verdict": verdict.name(),
            "witnesses": verdict.witness().map(|w| vec![w.to_vec()]).unwrap_or_default(),
            "confidence": verdict.confidence(),
            "bound": bound,
            "slack": bound - u.dim() as i64,
            "N": u.n(),
            "m": u.dim(),
            "bound_checks": checks,
            "certificate": verdict,
        }),
        falsified,
    })
}

fn verify(file: &Path, r: usize, mode: Mode, seed: u64, samples: usize) -> Result<Report, Failure> {
    let u = load_space(file)?;
    let trials = samples;
    let mode = match mode {
        Mode::Auto => CertifyMode::Auto { seed, trials },
        Mode::Exact => CertifyMode::ExactSmall { seed, trials },
        Mode::Probabilistic => CertifyMode::Probabilistic { seed, trials },
    };
    let verdict = strata::is_constant_rank(&u, r, mode, Execution::default())?;
    verdict_report(&u, r, &verdict)
}

fn search(n: usize, r: usize, m: usize, seed: u64, budget: usize) -> Result<Report, Failure> {
    let outcome = strata::search_constant_rank(n, r, m, seed, budget, Execution::default())?;
    let bound = 2 * (n as i64 - r as i64) + 1;
    match outcome {
        SearchOutcome::Found {
            restart,
            space,
            verdict,
        } => {
            let (checks, falsified) = bound_checks(&space, r, &verdict)?;
            Ok(Report {
                result: json!({
                    "outcome": "Found",
                    "restart": restart,
                    "space": space,
                    "verdict": verdict.name(),
                    "confidence": verdict.confidence(),
                    "bound": bound,
                    "slack": bound - m as i64,
                    "bound_checks": checks,
                }),
                falsified,
            })
        }
        SearchOutcome::NotFound { budget } => Ok(Report::ok(json!({
            "outcome": "NotFound",
            "budget": budget,
            "bound": bound,
            "note": format!(
                "no verified space within the budget; constant-rank spaces satisfy dim U <= 2(N - r) + 1 = {bound}; a failed search is not a proof of nonexistence"
            ),
        }))),
    }
}

fn profile(file: &Path, seed: u64, samples: usize) -> Result<Report, Failure> {
    let u = load_space(file)?;
    let p = strata::rank_profile(&u, seed, samples, Execution::default());
    Ok(Report::ok(json!({"N": u.n(), "m": u.dim(), "profile": p})))
}

fn load_algebra(name_or_path: &str, checked: bool) -> Result<LieAlgebra, Failure> {
    if let Some(alg) = lie::lookup(name_or_path) {
        return Ok(alg);
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(Failure::Input(format!(
            "{name_or_path:?} is neither a catalog algebra nor a readable file"
        )));
    }
    let text = read(path)?;
    Ok(if checked {
        LieAlgebra::from_json(&text)?
    } else {
        LieAlgebra::from_json_unchecked(&text)?
    })
}

fn lie_cmd(a: &LieArgs, seed: u64, samples: usize) -> Result<Report, Failure> {
    let exec = Execution::default();
    if a.action == LieAction::Validate {
        let alg = load_algebra(&a.algebra, false)?;
        alg.validate().map_err(Error::Jacobi)?;
        return Ok(Report::ok(
            json!({"name": alg.name(), "N": alg.dim(), "jacobi": "holds"}),
        ));
    }
    let alg = load_algebra(&a.algebra, true)?;
    let base = json!({"name": alg.name(), "N": alg.dim()});
    let mut result = match a.action {
        LieAction::Validate => unreachable!(),
        LieAction::Orbit => {
            let lambda = a
                .lambda
                .as_deref()
                .ok_or_else(|| Failure::Input("missing --lambda".into()))?;
            let lambda = lambda
                .split(',')
                .map(|t| parse_rational(t).map_err(Failure::from))
                .collect::<Result<Vec<Rational>, _>>()?;
            json!({"orbit_dimension": lie::orbit_dimension(&alg, &lambda)?})
        }
        LieAction::Minorbit => json!({"min_orbit": lie::min_nonzero_orbit_dim(&alg, seed, samples, exec)?}),
        LieAction::Histogram => {
            let h = lie::rank_stratification_histogram(&alg, seed, samples, exec);
            let odd: Vec<usize> = h.keys().into_iter().filter(|k| k % 2 == 1).collect();
            let value = json!({"histogram": h, "all_even": odd.is_empty()});
            if !odd.is_empty() {
                return Ok(Report {
                    result: merge(base, value),
                    falsified: Some(format!("odd orbit dimensions {odd:?}")),
                });
            }
            value
        }
        LieAction::Bound => {
            let min = lie::min_nonzero_orbit_dim(&alg, seed, samples, exec)?;
            let report = lie::check_min_orbit_bound(&alg, min.r);
            let falsified = (!report.holds).then(|| format!("violated: {}", report.statement));
            return Ok(Report {
                result: merge(
                    base,
                    json!({
                        "r": min.r,
                        "bound": report.bound,
                        "tight": report.tight,
                        "holds": report.holds,
                        "witness": min.witness,
                        "check": report,
                    }),
                ),
                falsified,
            });
        }
    };
    result = merge(base, result);
    Ok(Report::ok(result))
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

fn bounds(a: &BoundsArgs) -> Result<Report, Failure> {
    let q = BoundQuery {
        kind: kind(a.kind),
        n: a.n,
        r: a.r,
        e: a.e,
    };
    let bound = strata::degeneracy_bound(&q)?;
    let next = match q.kind {
        BoundKind::Skew => a.r.saturating_sub(2),
        BoundKind::Symmetric => a.r.saturating_sub(1),
    };
    let formula = match q.kind {
        BoundKind::Skew => "2(N - r) + e",
        BoundKind::Symmetric => "N - r + e",
    };
    Ok(Report::ok(json!({
        "query": q,
        "formula": formula,
        "bound": bound,
        "statement": format!(
            "a family of {} forms of rank {} over a base of dimension d with defect {} meets the rank <= {} locus whenever d > {}",
            q.kind, a.r, a.e, next, bound
        ),
    })))
}
