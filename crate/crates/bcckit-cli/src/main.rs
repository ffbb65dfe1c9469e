//! Command line front end for the matroid toolkit.
//!
//! Matroid input is resolved in three steps: an existing file path is read
//! as matroid JSON, text starting with `{` is parsed as inline JSON, and
//! anything else goes through the construction expression parser in
//! [`expr`].
//!
//! Exit codes are fixed for CI use: 0 on success, 1 when `verify` finds a
//! violated property, 2 on malformed input, 3 when a size cap is hit, and
//! 4 when the input is well-formed but outside an operation's domain.

mod expr;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use bcckit::classify::{
    classify_matroid, exhaustive_order_sweep, equivalence_panel, DecompositionTree, Verdict,
};
use bcckit::complex::ElementOrder;
use bcckit::corpus::{default_spec, CorpusSpec};
use bcckit::error::Error;
use bcckit::invariants::beta;
use bcckit::matroid::Matroid;
use bcckit::orlik_terao::ArrangementMatrix;
use bcckit::suite::{run_suite, SuiteReport};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bcckit", version, about = "Broken circuit complex toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one matroid: circuits, h-vector, symmetry tests,
    /// decomposition, synthesized order, and the six-condition panel
    Analyze {
        /// Matroid JSON file, inline JSON, or a construction expression
        input: String,
        /// Comma-separated element ids; the panel runs under this order
        /// (of the simplification, when simplification occurs)
        #[arg(long)]
        order: Option<String>,
        /// Sweep every ordering of the ground set (at most 7 elements)
        #[arg(long)]
        all_orders: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the parallel-connection decomposition, one tree per component
    Decompose {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Synthesize an ordering whose minimal broken circuits are pairwise
    /// disjoint, when one exists
    Order {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the whole property suite over a generated corpus
    Verify {
        /// Corpus spec JSON (file or inline); defaults to the built-in corpus
        spec: Option<String>,
        /// Worker threads; defaults to available parallelism
        #[arg(long)]
        jobs: Option<usize>,
        /// Corrupt one comparison to prove failures are caught and reported
        #[arg(long)]
        inject_fault: bool,
        #[arg(long)]
        json: bool,
    },
    /// Circuit relations of an arrangement matrix, lead-term check, and
    /// the algebra verdict
    Ot {
        /// Matrix JSON: an array of columns of rational strings, or an
        /// object with a "matrix" field
        input: String,
        /// Comma-separated element ids for the lead-term order
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a construction expression and print canonical matroid JSON
    Construct { input: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_)
        | Error::InvalidUniform { .. }
        | Error::InvalidCircuits(_)
        | Error::LengthMismatch(_)
        | Error::BadOrdering
        | Error::UnknownElement(_) => 2,
        Error::CapExceeded(_) | Error::IdTooLarge(_) | Error::SweepTooLarge { .. } => 3,
        _ => 4,
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Analyze {
            input,
            order,
            all_orders,
            json,
        } => cmd_analyze(&input, order.as_deref(), all_orders, json),
        Command::Decompose { input, json } => cmd_decompose(&input, json),
        Command::Order { input, json } => cmd_order(&input, json),
        Command::Verify {
            spec,
            jobs,
            inject_fault,
            json,
        } => cmd_verify(spec.as_deref(), jobs, inject_fault, json),
        Command::Ot { input, order, json } => cmd_ot(&input, order.as_deref(), json),
        Command::Construct { input } => {
            let m = load_matroid(&input)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&m.to_json()).expect("wire form serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_matroid(input: &str) -> Result<Matroid, Error> {
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input)
            .map_err(|e| Error::Schema(format!("cannot read {input}: {e}")))?;
        return Matroid::from_json_str(&text);
    }
    if input.trim_start().starts_with('{') {
        return Matroid::from_json_str(input);
    }
    expr::parse(input)
}

fn parse_order(text: &str) -> Result<ElementOrder, Error> {
    let ids: Vec<u32> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Schema(format!("bad element id '{}' in order", p.trim())))
        })
        .collect::<Result<_, _>>()?;
    ElementOrder::from_ids(&ids)
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::CiAndGorenstein => "ci_and_gorenstein",
        Verdict::Neither => "neither",
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_tree(t: &DecompositionTree) -> String {
    match t {
        DecompositionTree::Leaf { elements } => format!(
            "U({},{}) on {elements}",
            elements.len() - 1,
            elements.len()
        ),
        DecompositionTree::Coloop { element } => format!("coloop {element}"),
        DecompositionTree::Parallel {
            left,
            right,
            basepoint,
        } => format!(
            "P({}, {}; {basepoint})",
            render_tree(left),
            render_tree(right)
        ),
    }
}

fn cmd_analyze(
    input: &str,
    order: Option<&str>,
    all_orders: bool,
    json: bool,
) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let report = classify_matroid(&m)?;
    // the panel and sweeps need a loop-free matroid, so they run on what
    // the classifier ran on
    let target = if m.is_simple() {
        m.clone()
    } else {
        m.simplify().0
    };
    let ord = match order {
        Some(text) => parse_order(text)?,
        None => ElementOrder::ground_order(target.ground()),
    };
    let panel = equivalence_panel(&target, &ord)?;
    let sweep = if all_orders {
        Some(exhaustive_order_sweep(&target)?)
    } else {
        None
    };

    if json {
        let doc = json!({
            "classification": report,
            "order": ord.ids(),
            "panel": panel,
            "sweep": sweep,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(ExitCode::SUCCESS);
    }

    println!("elements: {} ({})", m.size(), m.ground());
    println!("rank: {}", m.rank_full());
    let circuits = m.circuits();
    println!("circuits ({}): {}", circuits.len(), join(circuits.iter()));
    if let Some(note) = &report.simplified {
        println!("note: {note}");
    }
    println!("h: ({}), s = {}", join(report.h.iter()), report.s);
    match beta(&target) {
        Ok(b) => println!("beta: {b}"),
        Err(Error::RankZero) => println!("beta: undefined (rank 0)"),
        Err(e) => return Err(e),
    }
    println!("components: {}", report.components);
    println!(
        "full symmetry: {}   outer pair: {}",
        yes_no(report.dehn_sommerville),
        yes_no(report.last_two)
    );
    match &report.decomposition {
        Some(trees) => {
            for t in trees {
                println!("decomposition: {}", render_tree(t));
            }
        }
        None => println!("decomposition: none"),
    }
    match &report.ci_order {
        Some(ids) => println!("ci order: {}", join(ids.iter())),
        None => println!("ci order: none"),
    }
    println!("verdict: {}", verdict_str(report.verdict));
    println!(
        "panel under {}: gorenstein {}, locally gorenstein {}, links gorenstein {}, links ci {}, locally ci {}, ci {}",
        join(ord.ids()),
        yes_no(panel.gorenstein),
        yes_no(panel.locally_gorenstein),
        yes_no(panel.links_gorenstein),
        yes_no(panel.links_ci),
        yes_no(panel.locally_ci),
        yes_no(panel.ci)
    );
    if let Some(s) = sweep {
        let least = match &s.lex_least_ci {
            Some(ids) => format!(", least {}", join(ids.iter())),
            None => String::new(),
        };
        println!(
            "sweep: {} orders tried, {} give disjoint minimal broken circuits{least}",
            s.orders_tried, s.ci_orders
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(input: &str, json: bool) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let report = classify_matroid(&m)?;
    if json {
        let doc = json!({
            "decomposition": report.decomposition,
            "simplified": report.simplified,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("trees serialize"));
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(note) = &report.simplified {
        println!("note: {note}");
    }
    match &report.decomposition {
        Some(trees) => {
            for (i, t) in trees.iter().enumerate() {
                println!("component {}: {}", i + 1, render_tree(t));
            }
        }
        None => println!(
            "no decomposition: some component is neither a coloop nor an \
             iterated parallel connection of single-circuit blocks"
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_order(input: &str, json: bool) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let report = classify_matroid(&m)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "order": report.ci_order }))
                .expect("order serializes")
        );
        return Ok(ExitCode::SUCCESS);
    }
    match &report.ci_order {
        Some(ids) => println!("{}", join(ids.iter())),
        None => println!("no ordering gives pairwise-disjoint minimal broken circuits"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    spec_input: Option<&str>,
    jobs: Option<usize>,
    inject_fault: bool,
    json: bool,
) -> Result<ExitCode, Error> {
    let mut spec: CorpusSpec = match spec_input {
        Some(input) => {
            let text = if Path::new(input).is_file() {
                fs::read_to_string(input)
                    .map_err(|e| Error::Schema(format!("cannot read {input}: {e}")))?
            } else {
                input.to_string()
            };
            serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?
        }
        None => default_spec(),
    };
    if let Ok(text) = std::env::var("BCCKIT_SEED") {
        let seed: u64 = text
            .parse()
            .map_err(|_| Error::Schema("BCCKIT_SEED must be an unsigned integer".to_string()))?;
        if let Some(f) = spec.sp_random.as_mut() {
            f.seed = seed;
        }
        if let Some(f) = spec.parallel_um.as_mut() {
            f.seed = seed.wrapping_add(1);
        }
    }
    let report = run_suite(&spec, jobs, inject_fault)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_suite_report(&report);
    }
    Ok(if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_suite_report(report: &SuiteReport) {
    println!("corpus: {} instances", report.corpus_size);
    for o in &report.outcomes {
        println!(
            "criterion {:02} {}: {} ({} checks, {} ms)",
            o.id,
            if o.passed { "pass" } else { "FAIL" },
            o.name,
            o.instances,
            o.elapsed_ms
        );
        for f in o.failures.iter().take(3) {
            println!("    {}: {}", f.instance, f.detail);
            if !f.replay.is_null() {
                println!("    replay: {}", f.replay);
            }
        }
        if o.failures.len() > 3 {
            println!("    ... and {} more", o.failures.len() - 3);
        }
    }
    if report.all_passed {
        println!("all criteria passed");
    } else {
        println!("{} failure(s)", report.total_failures);
    }
}

fn cmd_ot(input: &str, order: Option<&str>, json: bool) -> Result<ExitCode, Error> {
    let a = load_arrangement(input)?;
    let m = a.underlying_matroid()?;
    let ord = match order {
        Some(text) => parse_order(text)?,
        None => ElementOrder::ground_order(m.ground()),
    };
    let relations: Vec<_> = m
        .circuits()
        .into_iter()
        .map(|c| a.circuit_relation(c).map(|r| r.to_json(&ord)))
        .collect::<Result<_, _>>()?;
    let lead_ok = a.lead_term_check(&ord)?;
    let classification = bcckit::orlik_terao::ot_classification(&a)?;

    if json {
        let doc = json!({
            "columns": a.column_ids(),
            "note": a.notice(),
            "relations": relations,
            "order": ord.ids(),
            "lead_terms_match": lead_ok,
            "classification": classification.report,
            "notes": classification.notes,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(ExitCode::SUCCESS);
    }

    println!("columns: {} (ids {})", a.column_ids().len(), join(a.column_ids().iter()));
    if let Some(note) = a.notice() {
        println!("note: {note}");
    }
    for r in &relations {
        println!(
            "relation on {{{}}}: coeffs {}; lead {{{}}}",
            join(r.circuit.iter()),
            join(r.coeffs.iter()),
            join(r.lead_monomial.iter())
        );
    }
    println!(
        "lead terms match broken circuit monomials under {}: {}",
        join(ord.ids()),
        yes_no(lead_ok)
    );
    println!(
        "h: ({}), verdict: {}",
        join(classification.report.h.iter()),
        verdict_str(classification.report.verdict)
    );
    // the arrangement notice was already printed with the columns
    for note in classification.notes.iter().filter(|n| Some(n.as_str()) != a.notice()) {
        println!("note: {note}");
    }
    Ok(ExitCode::SUCCESS)
}

fn load_arrangement(input: &str) -> Result<ArrangementMatrix, Error> {
    let text = if Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| Error::Schema(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
    let columns = match &value {
        serde_json::Value::Array(_) => &value,
        serde_json::Value::Object(map) => map
            .get("matrix")
            .ok_or_else(|| Error::Schema("expected a \"matrix\" field".to_string()))?,
        _ => return Err(Error::Schema("expected an array or object".to_string())),
    };
    let mut cols: Vec<Vec<String>> = Vec::new();
    let rows = columns
        .as_array()
        .ok_or_else(|| Error::Schema("matrix must be an array of columns".to_string()))?;
    for col in rows {
        let entries = col
            .as_array()
            .ok_or_else(|| Error::Schema("each column must be an array".to_string()))?;
        let mut out = Vec::new();
        for v in entries {
            match v {
                serde_json::Value::String(s) => out.push(s.clone()),
                serde_json::Value::Number(x) => out.push(x.to_string()),
                _ => {
                    return Err(Error::Schema(
                        "matrix entries must be rational strings or integers".to_string(),
                    ))
                }
            }
        }
        cols.push(out);
    }
    ArrangementMatrix::from_string_columns(&cols)
}
