//! Command-line front end.
//!
//! Exit codes: 0 all requested checks pass, 2 a check failed (witness
//! printed), 3 bad input, 4 unsupported pair/size.

use clap::{Args, Parser, Subcommand};
use sphmin::claims::{self, HypothesisScan};
use sphmin::minors::{parse_rational_matrix, Realization};
use sphmin::pair::{catalog, Family, Pair};
use sphmin::report::{ReportDocument, VerificationReport};
use sphmin::stars::star_diagram;
use sphmin::suite;
use sphmin::weyl::{TypeLabel, WeylElem};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CHECK_FAILED: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;

#[derive(Parser)]
#[command(name = "sphmin", version, about = "exact generalised spherical minors")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the verification reports as JSON to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Seed for all randomised trials (default: $SPHMIN_SEED or 7).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Fan independent work units out over this many threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct PairSel {
    /// Pair family: slsp | spinspin | e6f4 | b3g2 | diag.
    #[arg(long)]
    pair: String,
    /// Size parameter for slsp / spinspin.
    #[arg(long)]
    n: Option<usize>,
    /// Factor type for diag, e.g. A2, B2, D4, E6, F4, G2.
    #[arg(long = "type")]
    type_name: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the cataloged pair families.
    Pairs,
    /// Print the spherical basis and the pair dossier.
    Basis {
        #[command(flatten)]
        sel: PairSel,
    },
    /// Print the infinitesimal action tables.
    Tables {
        #[command(flatten)]
        sel: PairSel,
        /// Basis weight name (w2, w6, b1, ...); all when omitted.
        #[arg(long)]
        b: Option<String>,
        /// `--expect golden` diffs against the embedded tables.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run the combinatorial claim suite for a pair.
    Claims {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        b: Option<String>,
    },
    /// Verify the exchange identity numerically.
    Identity {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        b: Option<String>,
        /// Basis index k for slsp (selects w2k).
        #[arg(long)]
        k: Option<usize>,
        /// Twist element, e.g. `e`, `t2.t3.t1.t2`, or `s2*s3`;
        /// scans hypothesis-passing elements when omitted.
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value_t = 50)]
        trials: u64,
    },
    /// Compute the exchange sign and compare with the parity rule.
    Epsilon {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evaluate one minor on a matrix read from file.
    Minor {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "e")]
        w: String,
        /// File with one matrix row per line, entries `p/q`.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Render the exchange identity as a star diagram (slsp).
    Stars {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// Run the full verification suite.
    Selfcheck,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or_else(|| {
        std::env::var("SPHMIN_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(suite::DEFAULT_SEED)
    });
    let mut reports: Vec<VerificationReport> = Vec::new();
    let code = dispatch(&cli, seed, &mut reports);
    if let Some(path) = &cli.json {
        let doc = ReportDocument::new(seed, reports);
        match serde_json::to_string_pretty(&doc) {
            Ok(body) => {
                if let Err(err) = std::fs::write(path, body + "\n") {
                    eprintln!("cannot write {}: {err}", path.display());
                    return ExitCode::from(EXIT_BAD_INPUT);
                }
            }
            Err(err) => {
                eprintln!("cannot serialize reports: {err}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        }
    }
    code
}

fn dispatch(cli: &Cli, seed: u64, reports: &mut Vec<VerificationReport>) -> ExitCode {
    match &cli.cmd {
        Cmd::Pairs => cmd_pairs(),
        Cmd::Basis { sel } => with_pair(sel, |pair| cmd_basis(&pair)),
        Cmd::Tables { sel, b, expect } => with_pair(sel, |pair| {
            cmd_tables(&pair, b.as_deref(), expect.as_deref(), reports)
        }),
        Cmd::Claims { sel, b } => with_pair(sel, |pair| cmd_claims(&pair, b.as_deref(), reports)),
        Cmd::Identity {
            sel,
            b,
            k,
            w,
            trials,
        } => with_pair(sel, |pair| {
            cmd_identity(
                &pair,
                b.as_deref(),
                *k,
                w.as_deref(),
                *trials,
                seed,
                cli.jobs,
                reports,
            )
        }),
        Cmd::Epsilon { sel, b, k } => {
            with_pair(sel, |pair| cmd_epsilon(&pair, b.as_deref(), *k, reports))
        }
        Cmd::Minor {
            sel,
            b,
            k,
            w,
            matrix,
        } => with_pair(sel, |pair| cmd_minor(&pair, b.as_deref(), *k, w, matrix)),
        Cmd::Stars { n, k, w } => cmd_stars(*n, *k, w),
        Cmd::Selfcheck => cmd_selfcheck(),
    }
}

fn parse_type(name: &str) -> Option<TypeLabel> {
    let name = name.to_uppercase();
    let (letter, rank) = name.split_at(1);
    let rank: usize = rank.parse().ok()?;
    match (letter, rank) {
        ("A", m) if m >= 1 => Some(TypeLabel::A(m)),
        ("B", m) if m >= 2 => Some(TypeLabel::B(m)),
        ("C", m) if m >= 2 => Some(TypeLabel::C(m)),
        ("D", m) if m >= 3 => Some(TypeLabel::D(m)),
        ("E", 6) => Some(TypeLabel::E6),
        ("F", 4) => Some(TypeLabel::F4),
        ("G", 2) => Some(TypeLabel::G2),
        _ => None,
    }
}

fn with_pair(sel: &PairSel, f: impl FnOnce(Pair) -> ExitCode) -> ExitCode {
    let family = match sel.pair.as_str() {
        "slsp" => match sel.n {
            Some(n) => Family::SlSp { n },
            None => {
                eprintln!("slsp needs --n");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        "spinspin" => match sel.n {
            Some(n) => Family::SpinSpin { n },
            None => {
                eprintln!("spinspin needs --n");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        "e6f4" => Family::E6F4,
        "b3g2" => Family::B3G2,
        "diag" | "diagonal" => match sel.type_name.as_deref().and_then(parse_type) {
            Some(t) => Family::Diagonal(t),
            None => {
                eprintln!("diag needs --type, e.g. --type A2");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        other => {
            eprintln!("unknown pair family {other}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    match catalog(family) {
        Ok(pair) => f(pair),
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(EXIT_UNSUPPORTED)
        }
    }
}

/// Parses `e`, a τ-word `t2.t3.t1.t2`, or an s-word `s2*s3`.
fn parse_w(pair: &Pair, text: &str) -> Result<WeylElem, String> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(WeylElem::identity(&pair.big));
    }
    let tokens: Vec<&str> = text
        .split(|c| c == '.' || c == '*' || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let mut letters = std::collections::HashSet::new();
    let mut indices = Vec::new();
    for tok in &tokens {
        let (letter, idx) = tok.split_at(1);
        letters.insert(letter);
        let i: usize = idx.parse().map_err(|_| format!("bad generator {tok}"))?;
        if !(1..=pair.big.rank).contains(&i) {
            return Err(format!("generator index {i} out of range"));
        }
        indices.push(i);
    }
    if letters.len() != 1 {
        return Err("cannot mix t- and s-generators in one word".into());
    }
    match *letters.iter().next().unwrap() {
        "t" => Ok(pair.tau_product(&indices)),
        "s" => Ok(WeylElem::from_word(&pair.big, &indices)),
        other => Err(format!("unknown generator letter {other}")),
    }
}

fn resolve_b(pair: &Pair, b: Option<&str>, k: Option<usize>) -> Result<usize, String> {
    match (b, k) {
        (Some(name), _) => pair.basis_index_by_name(name).map_err(|e| e.to_string()),
        (None, Some(k)) => {
            if matches!(pair.family, Family::SlSp { .. }) {
                pair.basis_index_by_name(&format!("w{}", 2 * k))
                    .map_err(|e| e.to_string())
            } else {
                Err("--k only selects basis weights for slsp".into())
            }
        }
        (None, None) if pair.spherical_basis().len() == 1 => Ok(0),
        (None, None) => Err(format!(
            "pair has several basis weights ({}); pick one with --b",
            pair.basis_names().join(", ")
        )),
    }
}

fn cmd_pairs() -> ExitCode {
    println!("cataloged spherical pairs of minimal rank:");
    println!("  slsp --n N       SL_2N / Sp_2N        (2 <= N <= 8)");
    println!("  spinspin --n N   SO_2N / SO_2N-1      (4 <= N <= 10, root data of the spin pair)");
    println!("  e6f4             E6 / F4");
    println!("  b3g2             B3 (Spin_7) / G2");
    println!("  diag --type T    T x T / diagonal T   (rank <= 6)");
    println!("matrix realizations: slsp, spinspin (vector model), diag --type A*");
    ExitCode::SUCCESS
}

fn cmd_basis(pair: &Pair) -> ExitCode {
    println!("pair {}", pair.family);
    println!(
        "  z = {:?}  (length {})",
        pair.z,
        pair.z.reduced_word().len()
    );
    for (w, name) in pair.spherical_basis().iter().zip(pair.basis_names()) {
        println!("  {name} = {w:?}");
    }
    match serde_json::to_string_pretty(&pair.dossier()) {
        Ok(body) => println!("{body}"),
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_tables(
    pair: &Pair,
    b: Option<&str>,
    expect: Option<&str>,
    reports: &mut Vec<VerificationReport>,
) -> ExitCode {
    let indices: Vec<usize> = match b {
        Some(name) => match pair.basis_index_by_name(name) {
            Ok(i) => vec![i],
            Err(err) => {
                eprintln!("{err}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        None => (0..pair.spherical_basis().len()).collect(),
    };
    let mut failed = false;
    for b_index in indices {
        let table = claims::build_action_table(pair, b_index);
        println!("infinitesimal action table for {}:", table.b_name);
        println!("{}", table.render_text());
        let mut rb = sphmin::report::ReportBuilder::new(format!(
            "table/{}/{}",
            pair.family, table.b_name
        ));
        rb.trial();
        rb.witness(table.to_json());
        let status = match expect {
            Some("golden") => match claims::table_matches_golden(pair, b_index) {
                Ok(()) => {
                    println!("  matches the embedded table");
                    sphmin::report::Status::Pass
                }
                Err(err) => {
                    println!("  MISMATCH: {err}");
                    failed = true;
                    rb.witness(serde_json::json!({ "diff": err }));
                    sphmin::report::Status::Fail
                }
            },
            Some(other) => {
                eprintln!("unknown --expect mode {other}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
            None => sphmin::report::Status::Recorded,
        };
        reports.push(rb.finish(status));
    }
    if failed {
        ExitCode::from(EXIT_CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_claims(pair: &Pair, b: Option<&str>, reports: &mut Vec<VerificationReport>) -> ExitCode {
    let indices: Vec<usize> = match b {
        Some(name) => match pair.basis_index_by_name(name) {
            Ok(i) => vec![i],
            Err(err) => {
                eprintln!("{err}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        None => (0..pair.spherical_basis().len()).collect(),
    };
    let mut ok = true;
    for b_index in indices {
        let name = &pair.basis_names()[b_index];
        let checks: Vec<(&str, Result<(), String>)> = vec![
            (
                "weight-identity",
                claims::verify_claim2(pair, b_index).map_err(|(l, r)| format!("{l:?} != {r:?}")),
            ),
            (
                "restricted-weights-nonzero",
                claims::verify_claim3(pair, b_index)
                    .then_some(())
                    .ok_or_else(|| "a restricted weight pair vanishes".into()),
            ),
            (
                "stabilizer-inclusion",
                claims::verify_stabilizer(pair, b_index)
                    .then_some(())
                    .ok_or_else(|| "U_b does not stabilise".into()),
            ),
            (
                "twist-in-small-weyl",
                pair.in_small_weyl(&pair.exchange_by_index(b_index).hw)
                    .then_some(())
                    .ok_or_else(|| "hw not in the small Weyl group".into()),
            ),
            (
                "shift-closure",
                claims::verify_assertion(pair, b_index)
                    .then_some(())
                    .ok_or_else(|| "assertion fails".into()),
            ),
            (
                "formal-derivation-vanishes",
                claims::verify_claim1_formal(pair, b_index)
                    .map_err(|terms| format!("surviving terms {terms:?}")),
            ),
            (
                "table-matches-golden",
                match claims::golden_table(pair, b_index) {
                    Some(_) => claims::table_matches_golden(pair, b_index),
                    None => Ok(()),
                },
            ),
        ];
        for (what, outcome) in checks {
            let mut rb =
                sphmin::report::ReportBuilder::new(format!("{what}/{}/{name}", pair.family));
            rb.trial();
            match outcome {
                Ok(()) => {
                    println!("[PASS] {what} {} {name}", pair.family);
                    reports.push(rb.finish(sphmin::report::Status::Pass));
                }
                Err(err) => {
                    println!("[FAIL] {what} {} {name}: {err}", pair.family);
                    ok = false;
                    reports.push(rb.fail_with(serde_json::json!({ "witness": err })));
                }
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_identity(
    pair: &Pair,
    b: Option<&str>,
    k: Option<usize>,
    w: Option<&str>,
    trials: u64,
    seed: u64,
    jobs: usize,
    reports: &mut Vec<VerificationReport>,
) -> ExitCode {
    let b_index = match resolve_b(pair, b, k) {
        Ok(i) => i,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let real = match Realization::new(pair) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_UNSUPPORTED);
        }
    };
    let ws: Vec<WeylElem> = match w {
        Some(text) => match parse_w(pair, text) {
            Ok(w) => vec![w],
            Err(err) => {
                eprintln!("{err}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
        },
        None => {
            let scan = if pair.big.label.weyl_order() <= 1000 {
                HypothesisScan::Exhaustive { cap: 1000 }
            } else {
                HypothesisScan::Sampled { count: 20, seed }
            };
            match claims::hypothesis_ws(pair, b_index, scan) {
                Ok(ws) => ws,
                Err(err) => {
                    eprintln!("{err}");
                    return ExitCode::from(EXIT_UNSUPPORTED);
                }
            }
        }
    };

    let eps = real.epsilon(b_index);
    let outcome: Result<Vec<VerificationReport>, String> = std::thread::scope(|scope| {
        let chunks: Vec<Vec<WeylElem>> = split_chunks(&ws, jobs.max(1));
        let mut handles = Vec::new();
        for chunk in chunks {
            let real = &real;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                for w in chunk {
                    match sphmin::minors::verify_exchange(real, b_index, &w, trials, seed) {
                        Ok(rep) => out.push(rep),
                        Err(err) => return Err(format!("{w:?}: {err}")),
                    }
                }
                Ok(out)
            }));
        }
        let mut merged = Vec::new();
        for handle in handles {
            merged.extend(handle.join().expect("worker panicked")?);
        }
        Ok(merged)
    });
    let mut new_reports = match outcome {
        Ok(r) => r,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    new_reports.sort_by(|a, b| a.statement_id.cmp(&b.statement_id));
    let mut ok = true;
    for rep in &new_reports {
        if rep.passed() {
            println!("[PASS] {} ({} trials)", rep.statement_id, rep.trials);
        } else {
            ok = false;
            println!(
                "[FAIL] {}: {}",
                rep.statement_id,
                serde_json::to_string(&rep.witnesses).unwrap_or_default()
            );
        }
    }
    println!(
        "epsilon = {} (parity rule predicts {}, {})",
        eps.value,
        eps.predicted,
        if eps.matches { "match" } else { "MISMATCH" }
    );
    reports.extend(new_reports);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn split_chunks(ws: &[WeylElem], jobs: usize) -> Vec<Vec<WeylElem>> {
    let n = jobs.min(ws.len()).max(1);
    let mut chunks: Vec<Vec<WeylElem>> = vec![Vec::new(); n];
    for (i, w) in ws.iter().enumerate() {
        chunks[i % n].push(w.clone());
    }
    chunks
}

fn cmd_epsilon(
    pair: &Pair,
    b: Option<&str>,
    k: Option<usize>,
    reports: &mut Vec<VerificationReport>,
) -> ExitCode {
    let b_index = match resolve_b(pair, b, k) {
        Ok(i) => i,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let real = match Realization::new(pair) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_UNSUPPORTED);
        }
    };
    let eps = real.epsilon(b_index);
    println!(
        "epsilon({}, {}) = {}  parity rule (-1)^|U| = {}  [{}]",
        pair.family,
        pair.basis_names()[b_index],
        eps.value,
        eps.predicted,
        if eps.matches { "match" } else { "mismatch" }
    );
    let mut rb = sphmin::report::ReportBuilder::new(format!(
        "epsilon/{}/{}",
        pair.family,
        pair.basis_names()[b_index]
    ));
    rb.trial();
    rb.witness(serde_json::json!({
        "epsilon": eps.value,
        "parity_rule": eps.predicted,
        "matches": eps.matches,
    }));
    reports.push(rb.finish(sphmin::report::Status::Recorded));
    ExitCode::SUCCESS
}

fn cmd_minor(
    pair: &Pair,
    b: Option<&str>,
    k: Option<usize>,
    w: &str,
    matrix: &PathBuf,
) -> ExitCode {
    let b_index = match resolve_b(pair, b, k) {
        Ok(i) => i,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let real = match Realization::new(pair) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_UNSUPPORTED);
        }
    };
    let w = match parse_w(pair, w) {
        Ok(w) => w,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let text = match std::fs::read_to_string(matrix) {
        Ok(t) => t,
        Err(err) => {
            eprintln!("cannot read {}: {err}", matrix.display());
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    let g = match parse_rational_matrix(&text, real.dim) {
        Ok(g) => g,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    if !real.in_group(&g) {
        eprintln!("matrix is not an element of the realized group");
        return ExitCode::from(EXIT_BAD_INPUT);
    }
    let form = real.minor(b_index, &w);
    println!(
        "minor({}, {}, w={:?}) = {}",
        pair.family,
        pair.basis_names()[b_index],
        w,
        form.eval(&real, &g)
    );
    ExitCode::SUCCESS
}

fn cmd_stars(n: usize, k: usize, w: &str) -> ExitCode {
    let pair = match catalog(Family::SlSp { n }) {
        Ok(p) => p,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_UNSUPPORTED);
        }
    };
    let w = match parse_w(&pair, w) {
        Ok(w) => w,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    match star_diagram(n, k, &w) {
        Ok(d) => {
            println!("{}", d.render_ascii());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(EXIT_UNSUPPORTED)
        }
    }
}

fn cmd_selfcheck() -> ExitCode {
    let results = suite::run_all();
    for r in &results {
        println!("{}", r.line());
    }
    if results.iter().all(|r| r.pass) {
        println!("selfcheck: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("selfcheck: FAILURES PRESENT");
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}
