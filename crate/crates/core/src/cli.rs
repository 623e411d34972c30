//! Batch command surface. [`run`] is pure: it takes a parsed request with the
//! input document already read and returns an exit status and a report.
//! Exit status 0 means success, 1 a failed verification, 2 invalid input.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::census::{
    case_linearization, census, classify_wall, picard_expected, wall_crossing_diff, CensusReport,
};
use crate::chambers::{sample_chambers, wall_enumerate, Linearization, Side};
use crate::comb::{act_on_comb, contract, unique_handle, Comb, DegreeTree};
use crate::equivariance::{act_on_configuration, projectively_equal_vectors, rho_matrix, veronese};
use crate::error::Error;
use crate::geometry::projectively_equal;
use crate::random;
use crate::rational::parse_rational;
use crate::stability::{hm_oracle, stability_status, Configuration};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "stablemap-git",
    about = "Exact GIT for (P^1)^n x P^r_d and combs"
)]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// Input document, `-` for stdin.
    #[arg(long, short)]
    pub input: String,
    /// Document text, filled in by the caller after reading `input`.
    #[arg(skip)]
    pub document: String,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Stability of a configuration: {"configuration": ..., "linearization": ...}.
    Stability {
        #[command(flatten)]
        input: InputArg,
        /// Also run the Hilbert-Mumford oracle and fail on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// One representative per chamber found by seeded sampling.
    Chambers {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 4000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Boundary divisor census.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated weights k_1..k_{n+1}; defaults to the case vector.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<String>>,
    },
    /// Compare the census Picard number with the closed formula.
    Picard {
        #[arg(long, required_unless_present = "sweep")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "sweep")]
        d: Option<usize>,
        #[arg(long, required_unless_present = "sweep")]
        r: Option<usize>,
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
    },
    /// Walls and how crossing each one changes the quotient.
    Walls {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Also compare censuses across walls between sampled chambers.
        #[arg(long)]
        crossings: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Givental contraction of a comb.
    Contract {
        #[command(flatten)]
        input: InputArg,
    },
    /// Unique handle of a degree tree with odd total degree.
    Handle {
        #[command(flatten)]
        input: InputArg,
    },
    /// Randomized checks of the group action, rho and the contraction.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        rounds: usize,
    },
}

impl Command {
    pub fn input_mut(&mut self) -> Option<&mut InputArg> {
        match self {
            Command::Stability { input, .. }
            | Command::Contract { input }
            | Command::Handle { input } => Some(input),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub status: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            status: 0,
            text,
            json,
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        let message = message.into();
        Report {
            status: 2,
            text: format!("error: {message}"),
            json: json!({ "error": message }),
        }
    }

    /// The report as printed: text, or pretty JSON with `--json`.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("reports serialize")
        } else {
            self.text.clone()
        }
    }
}

impl From<Error> for Report {
    fn from(e: Error) -> Self {
        Report::invalid(e.to_string())
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StabilityRequest {
    configuration: Configuration,
    linearization: Linearization,
}

fn parse_document<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Report> {
    serde_json::from_str(text).map_err(|e| Report::invalid(format!("invalid input document: {e}")))
}

pub fn run(request: &CommandRequest) -> Report {
    let result = match &request.command {
        Command::Stability { input, oracle } => run_stability(&input.document, *oracle),
        Command::Chambers {
            n,
            d,
            samples,
            seed,
        } => Ok(run_chambers(*n, *d, *samples, *seed)),
        Command::Census { n, d, r, weights } => run_census(*n, *d, *r, weights.as_deref()),
        Command::Picard {
            n,
            d,
            r,
            sweep,
            max_n,
            max_d,
            max_r,
        } => {
            if *sweep {
                Ok(run_picard_sweep(*max_n, *max_d, *max_r))
            } else {
                run_picard(n.unwrap_or(0), d.unwrap_or(0), r.unwrap_or(0))
            }
        }
        Command::Walls {
            n,
            d,
            r,
            crossings,
            seed,
        } => run_walls(*n, *d, *r, *crossings, *seed),
        Command::Contract { input } => run_contract(&input.document),
        Command::Handle { input } => run_handle(&input.document),
        Command::Selftest { seed, rounds } => Ok(run_selftest(*seed, *rounds)),
    };
    result.unwrap_or_else(|report| report)
}

/// Parses `args`, reads the input document if any, and runs the command.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut request = match CommandRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            return (status, e.to_string());
        }
    };
    if let Some(input) = request.command.input_mut() {
        let read = if input.input == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(&input.input)
        };
        match read {
            Ok(text) => input.document = text,
            Err(e) => {
                let report = Report::invalid(format!("cannot read {}: {e}", input.input));
                return (report.status, report.render(request.json));
            }
        }
    }
    let report = run(&request);
    (report.status, report.render(request.json))
}

fn run_stability(document: &str, oracle: bool) -> Result<Report, Report> {
    let req: StabilityRequest = parse_document(document)?;
    let status = stability_status(&req.configuration, &req.linearization)?;
    let mut json = to_value(&status);
    let mut text = status.to_string();
    if !oracle {
        return Ok(Report::ok(text, json));
    }
    let integral = req.linearization.integral_multiple();
    let verdict = hm_oracle(&req.configuration, &integral)?;
    let agree = verdict.status == status.status;
    json["oracle"] = to_value(&verdict.status);
    write!(
        text,
        "\noracle {} ({})",
        verdict.status,
        if agree { "agrees" } else { "DISAGREES" }
    )
    .unwrap();
    Ok(Report {
        status: if agree { 0 } else { 1 },
        text,
        json,
    })
}

fn signature_string(sig: &[Side]) -> String {
    sig.iter()
        .map(|s| match s {
            Side::Below => '-',
            Side::On => '0',
            Side::Above => '+',
        })
        .collect()
}

fn run_chambers(n: usize, d: usize, samples: usize, seed: u64) -> Report {
    let chambers = sample_chambers(n, d, samples, seed);
    let mut text = format!(
        "{} chambers for n={n} d={d} ({} walls)\n",
        chambers.len(),
        wall_enumerate(n, d).len()
    );
    let mut rows = Vec::new();
    for (sig, k) in &chambers {
        writeln!(
            text,
            "  {}  k = {}{}",
            signature_string(sig),
            k,
            if k.has_stable_points() {
                ""
            } else {
                "  (no stable points)"
            }
        )
        .unwrap();
        rows.push(json!({ "signature": signature_string(sig), "linearization": to_value(k), "has_stable_points": k.has_stable_points() }));
    }
    Report::ok(
        text.trim_end().to_string(),
        json!({ "n": n, "d": d, "walls": to_value(&wall_enumerate(n, d)), "chambers": rows }),
    )
}

fn run_census(n: usize, d: usize, r: usize, weights: Option<&[String]>) -> Result<Report, Report> {
    let k = match weights {
        None => case_linearization(n, d),
        Some(ws) => {
            let parsed = ws
                .iter()
                .map(|w| parse_rational(w.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Linearization::new(n, d, parsed)?
        }
    };
    let report = census(n, d, r, &k)?;
    Ok(Report::ok(report.to_string(), to_value(&report)))
}

enum PicardOutcome {
    Match,
    Mismatch,
    Skipped(String),
}

fn picard_case(n: usize, d: usize, r: usize) -> (PicardOutcome, Option<CensusReport>, Option<i64>) {
    let expected = match picard_expected(n, d, r) {
        Ok(e) => e,
        Err(e) => return (PicardOutcome::Skipped(e.to_string()), None, None),
    };
    let report = census(n, d, r, &case_linearization(n, d)).expect("case vector matches (n, d)");
    let outcome = match (report.rho_qprime, &report.withheld) {
        (Some(got), _) if got == expected => PicardOutcome::Match,
        (Some(_), _) => PicardOutcome::Mismatch,
        (None, reason) => PicardOutcome::Skipped(reason.clone().unwrap_or_default()),
    };
    (outcome, Some(report), Some(expected))
}

fn run_picard(n: usize, d: usize, r: usize) -> Result<Report, Report> {
    let expected = picard_expected(n, d, r)?;
    let (outcome, report, _) = picard_case(n, d, r);
    let report = report.expect("expected value exists");
    let (status, verdict) = match &outcome {
        PicardOutcome::Match => (0, "OK".to_string()),
        PicardOutcome::Mismatch => (1, "MISMATCH".to_string()),
        PicardOutcome::Skipped(reason) => (1, format!("NOT VERIFIED ({reason})")),
    };
    let got = report
        .rho_qprime
        .map_or("withheld".to_string(), |v| v.to_string());
    let text = format!("census ρ(Q′)={got}, expected {expected}, {verdict}");
    let json = json!({ "n": n, "d": d, "r": r, "census": to_value(&report), "expected": expected, "verdict": verdict });
    Ok(Report { status, text, json })
}

fn run_picard_sweep(max_n: usize, max_d: usize, max_r: usize) -> Report {
    let mut text = String::new();
    let mut rows = Vec::new();
    let (mut ok, mut bad, mut skipped) = (0, 0, 0);
    for r in 0..=max_r {
        for n in 0..=max_n {
            for d in 0..=max_d {
                if r == 0 && d > 0 {
                    continue;
                }
                let (outcome, report, expected) = picard_case(n, d, r);
                let got = report.as_ref().and_then(|c| c.rho_qprime);
                let verdict = match &outcome {
                    PicardOutcome::Match => {
                        ok += 1;
                        "OK".to_string()
                    }
                    PicardOutcome::Mismatch => {
                        bad += 1;
                        "MISMATCH".to_string()
                    }
                    PicardOutcome::Skipped(reason) => {
                        skipped += 1;
                        format!("skipped: {reason}")
                    }
                };
                let show = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
                writeln!(
                    text,
                    "n={n} d={d} r={r}: census {} expected {} {verdict}",
                    show(got),
                    show(expected)
                )
                .unwrap();
                rows.push(json!({ "n": n, "d": d, "r": r, "census": got, "expected": expected, "verdict": verdict }));
            }
        }
    }
    write!(text, "{ok} OK, {bad} MISMATCH, {skipped} skipped").unwrap();
    let json = json!({ "cases": rows, "ok": ok, "mismatch": bad, "skipped": skipped });
    Report {
        status: if bad > 0 { 1 } else { 0 },
        text,
        json,
    }
}

fn run_walls(n: usize, d: usize, r: usize, crossings: bool, seed: u64) -> Result<Report, Report> {
    let walls = wall_enumerate(n, d);
    let mut text = format!("{} walls for n={n} d={d} r={r}\n", walls.len());
    let mut rows = Vec::new();
    for w in &walls {
        let kind = classify_wall(n, d, r, w);
        writeln!(text, "  {w}: {kind}").unwrap();
        rows.push(json!({ "wall": to_value(w), "kind": to_value(&kind) }));
    }
    let mut json = json!({ "n": n, "d": d, "r": r, "walls": rows });
    let mut status = 0;
    if crossings {
        let chambers = sample_chambers(n, d, 4000, seed);
        let reps: Vec<(&Vec<Side>, &Linearization)> = chambers.iter().collect();
        let mut found = Vec::new();
        for (i, (sa, ka)) in reps.iter().enumerate() {
            for (sb, kb) in &reps[i + 1..] {
                let diff: Vec<usize> = (0..walls.len()).filter(|&j| sa[j] != sb[j]).collect();
                if let [j] = diff[..] {
                    let (below, above) = if sa[j] == Side::Below {
                        (ka, kb)
                    } else {
                        (kb, ka)
                    };
                    let x = wall_crossing_diff(n, d, r, &walls[j], below, above)?;
                    if x.identity_holds == Some(false) {
                        status = 1;
                    }
                    writeln!(text, "  crossing {x}").unwrap();
                    found.push(to_value(&x));
                }
            }
        }
        json["crossings"] = Value::Array(found);
    }
    Ok(Report {
        status,
        text: text.trim_end().to_string(),
        json,
    })
}

fn run_contract(document: &str) -> Result<Report, Report> {
    let comb: Comb = parse_document(document)?;
    let image = contract(&comb);
    Ok(Report::ok(image.to_string(), to_value(&image)))
}

fn run_handle(document: &str) -> Result<Report, Report> {
    let tree: DegreeTree = parse_document(document)?;
    let node = unique_handle(&tree)?;
    let text = format!("handle: node {node} (degree {})", tree.degrees()[node]);
    Ok(Report::ok(
        text,
        json!({ "node": node, "degree": tree.degrees()[node] }),
    ))
}

fn run_selftest(seed: u64, rounds: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures: Vec<String> = Vec::new();
    let mut counts = serde_json::Map::new();

    let mut checked = 0;
    for k in 1..=6 {
        for _ in 0..rounds {
            let g = random::mobius(&mut rng, 6);
            let h = random::mobius(&mut rng, 6);
            if rho_matrix(&g.compose(&h), k) != &rho_matrix(&g, k) * &rho_matrix(&h, k) {
                failures.push(format!("rho homomorphism k={k} g={g:?} h={h:?}"));
            }
            let p = random::point(&mut rng, 6);
            if !projectively_equal_vectors(
                &veronese(&g.apply(&p), k),
                &rho_matrix(&g, k).apply(&veronese(&p, k)),
            ) {
                failures.push(format!("veronese k={k} p={p}"));
            }
            checked += 1;
        }
    }
    counts.insert("rho".into(), checked.into());

    for _ in 0..rounds {
        let c = random::configuration(&mut rng, 2, 3, 1, 5);
        let g = random::mobius(&mut rng, 5);
        let h = random::mobius(&mut rng, 5);
        if act_on_configuration(&g, &act_on_configuration(&h, &c))
            != act_on_configuration(&g.compose(&h), &c)
        {
            failures.push(format!("left action on {c}"));
        }
    }
    counts.insert("action".into(), rounds.into());

    for _ in 0..rounds {
        let comb = random::comb(&mut rng, 3, 5, 2, 3, 5);
        let g = random::mobius(&mut rng, 5);
        let lhs = contract(&act_on_comb(&g, &comb));
        let rhs = act_on_configuration(&g, &contract(&comb));
        if lhs.points() != rhs.points() || !projectively_equal(lhs.forms(), rhs.forms()) {
            failures.push(format!("contraction equivariance on {comb}"));
        }
    }
    counts.insert("contraction".into(), rounds.into());

    for _ in 0..rounds {
        let c = random::configuration(&mut rng, 2, 3, 1, 4);
        let k = random::integer_linearization(&mut rng, 2, 3, 4);
        let (Ok(a), Ok(b)) = (stability_status(&c, &k), hm_oracle(&c, &k)) else {
            failures.push(format!("stability error on {c}"));
            continue;
        };
        if a.status != b.status {
            failures.push(format!("oracle {} vs {} on {c} k={k}", b.status, a.status));
        }
    }
    counts.insert("oracle".into(), rounds.into());

    let mut text = format!("selftest seed {seed}:");
    for (name, count) in &counts {
        write!(text, " {name} {count}").unwrap();
    }
    if failures.is_empty() {
        text.push_str(", all passed");
    } else {
        write!(text, ", {} FAILED", failures.len()).unwrap();
        for f in &failures {
            write!(text, "\n  {f}").unwrap();
        }
    }
    let json = json!({ "seed": seed, "checks": counts, "failures": failures });
    Report {
        status: if failures.is_empty() { 0 } else { 1 },
        text,
        json,
    }
}
