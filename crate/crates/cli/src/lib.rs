//! `pconj` command dispatcher.
//!
//! Every command produces a [`Report`]. In `--json` mode the report is the
//! only thing written to stdout; otherwise a human-readable rendering is
//! printed. Diagnostics always go to stderr. Exit statuses: 0 success,
//! 1 the checked property is false, 2 bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use pconj_core::algebra::text::{format_table, parse_table, ParseError};
use pconj_core::conjugacy::{compose_witnesses_detailed, nontransitive_triple, CompositionCase};
use pconj_core::enumeration::goldens::{self, Goldens};
use pconj_core::enumeration::{
    collect_tables, find_nontransitive_with_jobs, verify_theorem_with_jobs, EnumerationConfig,
    EnumerationError, Filter,
};
use pconj_core::{
    adjoin_identity, find_identity, is_commutative, p_related, p_relation, satisfies_condition,
    smallest_condition_n, transitive_closure, CayleyTable, Magma,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pconj", version, about = "Primary conjugacy on finite semigroups")]
pub struct Cli {
    /// Emit one structured JSON object on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a table and test xy ∈ {yx, (xy)ⁿ}.
    Check {
        file: PathBuf,
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Print ~p, whether it is transitive, and the classes of its closure.
    Classes { file: PathBuf },
    /// Compose witnesses for a ~p b and b ~p c into one for a ~p c.
    Witness {
        file: PathBuf,
        a: usize,
        b: usize,
        c: usize,
        #[arg(long)]
        n: u32,
    },
    /// Exhaustively verify transitivity over all small semigroups.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Rewrite the golden fixture from this run instead of comparing.
        #[arg(long)]
        regen_goldens: bool,
        /// Golden fixture to compare against or regenerate.
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
    /// Find the smallest semigroups on which ~p is not transitive.
    FindNontransitive {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List semigroups of one order (up to isomorphism unless --labeled).
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        /// Emit every labeled table rather than one per isomorphism class.
        #[arg(long)]
        labeled: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Commutative,
    Condition,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub results: Value,
    pub exit_status: i32,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(e.code(), e.to_string())
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        Failure::new(e.code(), e.to_string())
    }
}

/// What a command hands back: the structured payload, its exit status, and
/// the human rendering.
struct Outcome {
    results: Value,
    exit: i32,
    text: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(err) => {
            let exit = if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = err.render().to_string();
            let (stdout, stderr) = if err.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            Output { exit, stdout, stderr }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    let (name, input) = describe(&cli.command);
    let outcome = match &cli.command {
        Command::Check { file, n, n_max } => cmd_check(file, *n, *n_max),
        Command::Classes { file } => cmd_classes(file),
        Command::Witness { file, a, b, c, n } => cmd_witness(file, *a, *b, *c, *n),
        Command::Verify {
            max_order,
            n_max,
            jobs,
            regen_goldens,
            goldens,
        } => cmd_verify(*max_order, *n_max, *jobs, *regen_goldens, goldens.as_deref()),
        Command::FindNontransitive { max_order, jobs } => cmd_find_nontransitive(*max_order, *jobs),
        Command::Enumerate {
            order,
            filter,
            n,
            n_max,
            labeled,
            jobs,
        } => cmd_enumerate(*order, *filter, *n, *n_max, *labeled, *jobs),
    };
    let (outcome, stderr) = match outcome {
        Ok(o) => (o, String::new()),
        Err(f) => {
            let stderr = format!("error: {}\n", f.message);
            (
                Outcome {
                    results: json!({ "error": { "code": f.code, "message": f.message } }),
                    exit: EXIT_INPUT,
                    text: String::new(),
                },
                stderr,
            )
        }
    };
    let report = Report {
        command: name.to_string(),
        input,
        results: outcome.results,
        exit_status: outcome.exit,
    };
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        outcome.text
    };
    Output {
        exit: outcome.exit,
        stdout,
        stderr,
    }
}

fn describe(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Check { file, n, n_max } => ("check", json!({ "file": file, "n": n, "n_max": n_max })),
        Command::Classes { file } => ("classes", json!({ "file": file })),
        Command::Witness { file, a, b, c, n } => {
            ("witness", json!({ "file": file, "a": a, "b": b, "c": c, "n": n }))
        }
        Command::Verify {
            max_order,
            n_max,
            regen_goldens,
            ..
        } => (
            "verify",
            // jobs is left out so output is identical across worker counts
            json!({ "max_order": max_order, "n_max": n_max, "regen_goldens": regen_goldens }),
        ),
        Command::FindNontransitive { max_order, .. } => {
            ("find-nontransitive", json!({ "max_order": max_order }))
        }
        Command::Enumerate {
            order,
            filter,
            n,
            n_max,
            labeled,
            ..
        } => (
            "enumerate",
            json!({
                "order": order,
                "filter": format!("{filter:?}").to_lowercase(),
                "n": n,
                "n_max": n_max,
                "labeled": labeled,
            }),
        ),
    }
}

fn load(file: &Path) -> Result<CayleyTable, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::new("IO_ERROR", format!("{}: {e}", file.display())))?;
    Ok(parse_table(&text)?)
}

fn exponent(n: u32) -> Result<u32, Failure> {
    if n < 2 {
        Err(Failure::new("BAD_EXPONENT", format!("BAD_EXPONENT: n = {n}, expected n > 1")))
    } else {
        Ok(n)
    }
}

fn cmd_check(file: &Path, n: Option<u32>, n_max: Option<u32>) -> Result<Outcome, Failure> {
    let s = load(file)?;
    let commutative = is_commutative(&s);
    let identity = find_identity(&s);
    let mut text = format!(
        "valid semigroup of order {}\ncommutative: {commutative}\nidentity: {}\n",
        s.order(),
        identity.map_or("none".to_string(), |e| e.to_string())
    );
    let (condition, holds) = match n {
        Some(n) => {
            let report = satisfies_condition(&s, exponent(n)?).expect("exponent checked");
            let _ = writeln!(text, "condition xy in {{yx, (xy)^{n}}}: {}", verdict(report.holds));
            if let Some((x, y)) = report.first_failure {
                let _ = writeln!(text, "first failing pair: x = {x}, y = {y}");
            }
            (
                json!({ "mode": "fixed", "n": n, "holds": report.holds, "first_failure": report.first_failure }),
                report.holds,
            )
        }
        None => {
            let n_max = n_max.unwrap_or(6);
            if n_max < 2 {
                return Err(Failure::new("BAD_EXPONENT", format!("BAD_EXPONENT: n_max = {n_max}, expected at least 2")));
            }
            let found = smallest_condition_n(&s, n_max).expect("n_max checked");
            match found {
                Some(n) => {
                    let _ = writeln!(text, "smallest n <= {n_max} satisfying the condition: {n}");
                }
                None => {
                    let _ = writeln!(text, "no n in 2..={n_max} satisfies the condition");
                }
            }
            (
                json!({ "mode": "search", "n_max": n_max, "smallest_n": found, "holds": found.is_some() }),
                found.is_some(),
            )
        }
    };
    Ok(Outcome {
        results: json!({
            "valid": true,
            "order": s.order(),
            "commutative": commutative,
            "identity": identity,
            "condition": condition,
        }),
        exit: if holds { EXIT_OK } else { EXIT_FALSE },
        text,
    })
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn cmd_classes(file: &Path) -> Result<Outcome, Failure> {
    let s = load(file)?;
    let relation = p_relation(&s);
    let closure = transitive_closure(&relation);
    let transitive = closure == relation;
    let classes = closure.partition().classes();
    let triple = nontransitive_triple(&relation);

    let mut text = String::from("~p pairs:");
    if relation.pairs().is_empty() {
        text.push_str(" none besides a ~p a");
    }
    for (a, b) in relation.pairs() {
        let _ = write!(text, " {a}~{b}");
    }
    let _ = writeln!(text, "\n~p transitive: {transitive}");
    if let Some((a, b, c)) = triple {
        let _ = writeln!(text, "violating triple: {a} ~p {b}, {b} ~p {c}, not {a} ~p {c}");
    }
    let rendered: Vec<String> = classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    let _ = writeln!(text, "~p* classes: {}", rendered.join(" "));
    Ok(Outcome {
        results: json!({
            "order": s.order(),
            "pairs": relation.pairs(),
            "transitive": transitive,
            "violating_triple": triple,
            "classes": classes,
        }),
        exit: EXIT_OK,
        text,
    })
}

fn cmd_witness(file: &Path, a: usize, b: usize, c: usize, n: u32) -> Result<Outcome, Failure> {
    let s = load(file)?;
    let k = s.order();
    for (name, id) in [("a", a), ("b", b), ("c", c)] {
        if id >= k {
            return Err(Failure::new("INVALID_ELEMENT", format!("{name} = {id} is not in 0..{k}")));
        }
    }
    let n = exponent(n)?;
    let view = adjoin_identity(&s);
    let identity = json!({ "id": view.identity(), "adjoined": view.is_adjoined() });
    let w_ab = p_related(&s, a, b);
    let w_bc = p_related(&s, b, c);
    let fail = |code: &str, message: String, text: String| Outcome {
        results: json!({
            "identity": identity,
            "witness_ab": w_ab,
            "witness_bc": w_bc,
            "error": { "code": code, "message": message },
        }),
        exit: EXIT_FALSE,
        text,
    };
    let (Some(wab), Some(wbc)) = (w_ab, w_bc) else {
        let missing = if w_ab.is_none() { format!("{a} ~p {b}") } else { format!("{b} ~p {c}") };
        let message = format!("no witness for {missing}");
        return Ok(fail("NO_WITNESS", message.clone(), format!("{message}\n")));
    };
    let mut text = format!(
        "S¹ identity: {}{}\n{a} ~p {b} via (u, v) = ({}, {})\n{b} ~p {c} via (u, v) = ({}, {})\n",
        view.identity(),
        if view.is_adjoined() { " (adjoined)" } else { "" },
        wab.u,
        wab.v,
        wbc.u,
        wbc.v
    );
    match compose_witnesses_detailed(&s, n, wab, wbc) {
        Ok(comp) => {
            let (x, y) = (comp.witness.u, comp.witness.v);
            let xy = view.product(x, y);
            let yx = view.product(y, x);
            let case = match comp.case {
                CompositionCase::AEqualsB => "a = b, reusing the b ~p c witness".to_string(),
                CompositionCase::BEqualsC => "b = c, reusing the a ~p b witness".to_string(),
                CompositionCase::Constructed { middle } => {
                    format!("x = a1·b1, y = b2·b^{}·a2 with b^{} = {middle}", n - 2, n - 2)
                }
            };
            let checks = vec![format!("x·y = {xy} = a"), format!("y·x = {yx} = c")];
            let _ = writeln!(text, "{case}\nx = {x}, y = {y}\n{}\n{}", checks[0], checks[1]);
            Ok(Outcome {
                results: json!({
                    "identity": identity,
                    "witness_ab": wab,
                    "witness_bc": wbc,
                    "composition": comp,
                    "checks": checks,
                }),
                exit: EXIT_OK,
                text,
            })
        }
        Err(e) => {
            let _ = writeln!(text, "{e}");
            Ok(fail(e.code(), e.to_string(), text))
        }
    }
}

fn cmd_verify(
    max_order: usize,
    n_max: u32,
    jobs: usize,
    regen: bool,
    goldens_path: Option<&Path>,
) -> Result<Outcome, Failure> {
    let report = verify_theorem_with_jobs(max_order, 2..=n_max, jobs)?;
    let (goldens, regenerated) = if regen {
        let fresh = goldens::generate(max_order, n_max, jobs)?;
        let path = goldens_path.map_or_else(|| PathBuf::from(goldens::FIXTURE_PATH), Path::to_path_buf);
        std::fs::write(&path, fresh.render())
            .map_err(|e| Failure::new("IO_ERROR", format!("{}: {e}", path.display())))?;
        (fresh, true)
    } else {
        let g = match goldens_path {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::new("IO_ERROR", format!("{}: {e}", path.display())))?;
                Goldens::parse(&text).map_err(|e| Failure::new("BAD_GOLDENS", e.to_string()))?
            }
            None => Goldens::committed(),
        };
        (g, false)
    };
    let mismatches = goldens.compare(&report);
    let ok = report.theorem_holds() && mismatches.is_empty();

    let mut text = String::new();
    for c in &report.semigroups_enumerated {
        let sat: Vec<String> = report
            .condition_satisfiers
            .iter()
            .filter(|s| s.order == c.order)
            .map(|s| format!("n={}:{}", s.n, s.count))
            .collect();
        let _ = writeln!(text, "order {}: {} semigroups; satisfying the condition {}", c.order, c.count, sat.join(" "));
    }
    let _ = writeln!(
        text,
        "transitivity failures among satisfiers: {}\nwitness compositions: {} checked, {} failed",
        report.transitivity_failures_among_satisfiers, report.witness_compositions_checked, report.witness_compositions_failed
    );
    for m in &mismatches {
        let _ = writeln!(
            text,
            "golden mismatch: order {} {}: expected {}, got {}",
            m.order,
            m.filter,
            m.expected.map_or("nothing".to_string(), |e| e.to_string()),
            m.actual
        );
    }
    if regenerated {
        text.push_str("goldens regenerated\n");
    }
    let _ = writeln!(text, "{}", if ok { "verified" } else { "FAILED" });
    Ok(Outcome {
        results: json!({
            "report": report,
            "goldens": { "regenerated": regenerated, "matched": mismatches.is_empty(), "mismatches": mismatches },
        }),
        exit: if ok { EXIT_OK } else { EXIT_FALSE },
        text,
    })
}

fn cmd_find_nontransitive(max_order: usize, jobs: usize) -> Result<Outcome, Failure> {
    let search = find_nontransitive_with_jobs(max_order, jobs)?;
    let mut text = String::new();
    match search.smallest_order {
        None => {
            let _ = writeln!(text, "none found: ~p is transitive on every semigroup of order <= {max_order}");
        }
        Some(order) => {
            let _ = writeln!(
                text,
                "smallest order with non-transitive ~p: {order} ({} semigroup(s) up to isomorphism)",
                search.examples.len()
            );
            for (idx, ex) in search.examples.iter().enumerate() {
                let (a, b, c) = ex.triple;
                let _ = writeln!(
                    text,
                    "# example {}: {a} ~p {b} via ({}, {}), {b} ~p {c} via ({}, {}), not {a} ~p {c}",
                    idx + 1,
                    ex.witness_ab.u,
                    ex.witness_ab.v,
                    ex.witness_bc.u,
                    ex.witness_bc.v
                );
                text.push_str(&format_table(&ex.table));
            }
        }
    }
    let examples: Vec<Value> = search
        .examples
        .iter()
        .map(|ex| {
            json!({
                "table": ex.table.to_rows(),
                "triple": ex.triple,
                "witness_ab": ex.witness_ab,
                "witness_bc": ex.witness_bc,
            })
        })
        .collect();
    Ok(Outcome {
        results: json!({
            "orders_scanned": search.orders_scanned,
            "none_found": search.none_found(),
            "smallest_order": search.smallest_order,
            "examples": examples,
        }),
        exit: EXIT_OK,
        text,
    })
}

fn cmd_enumerate(
    order: usize,
    filter: FilterArg,
    n: Option<u32>,
    n_max: Option<u32>,
    labeled: bool,
    jobs: usize,
) -> Result<Outcome, Failure> {
    let filter = match filter {
        FilterArg::All => Filter::All,
        FilterArg::Commutative => Filter::Commutative,
        FilterArg::Condition => match n {
            Some(n) => Filter::Condition(n),
            None => Filter::ConditionAny(n_max.unwrap_or(6)),
        },
    };
    let tables = collect_tables(&EnumerationConfig::new(order, filter, !labeled), jobs)?;
    let mut text = String::new();
    for (idx, t) in tables.iter().enumerate() {
        let _ = writeln!(text, "# semigroup {}", idx + 1);
        text.push_str(&format_table(t));
    }
    let _ = writeln!(text, "# {} table(s)", tables.len());
    let rows: Vec<Vec<Vec<usize>>> = tables.iter().map(CayleyTable::to_rows).collect();
    Ok(Outcome {
        results: json!({ "count": tables.len(), "tables": rows }),
        exit: EXIT_OK,
        text,
    })
}
