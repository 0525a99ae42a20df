//! Command-line front end: enumeration, statistics, predicate checks,
//! bijection application, identity verification, and SVG rendering.
//!
//! Word literals are digit strings when every value fits in one digit
//! (`3532521414`) and comma-separated otherwise (`10,1,2,...`); paths are
//! E/N strings; position sets are comma-separated (`2,5,6,8`). Output is
//! deterministic: identical invocations produce identical bytes on stdout
//! (timings go to stderr).

mod svg;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use canon::bijection as bj;
use canon::enumerate::{self, Cap};
use canon::error::Error;
use canon::poly::BivariatePoly;
use canon::verify::{check_identity, VerifyOptions};
use canon::word::parse_index_set;
use canon::{DyckPath, Multipermutation, Permutation};

#[derive(Parser)]
#[command(
    name = "canon",
    about = "Exact combinatorics of nonnesting (canon) multiset permutations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Descent, plateau, and weak-descent statistics of a word.
    Stats {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a membership predicate on a word. Exit code 0 when it
    /// holds, 1 when it does not.
    Check {
        /// nonnesting | in-a | in-b | canon | contains | avoids
        predicate: String,
        word: String,
        /// Pattern word for the contains/avoids predicates, e.g. 1221.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Apply a bijection to a word or path literal.
    Map {
        /// rho | rho-inv | lk | lk-rho (paths); reverse | lkc | f-k |
        /// f-sigma | f-sigma-inv | g-step | g-s | g-s-inv | phi-sigma |
        /// phi-sigma-inv | big-phi | psi | big-phi-bar | psi-bar (words)
        bijection: String,
        input: String,
        /// Value k for the f-k cell flip.
        #[arg(long)]
        val: Option<u32>,
        /// Target underlying permutation for f-sigma-inv / phi-sigma-inv.
        #[arg(long)]
        sigma: Option<String>,
        /// Descent set for g-s-inv, e.g. 2,5,6,8.
        #[arg(long)]
        set: Option<String>,
    },
    /// Print a named polynomial.
    Poly {
        /// eulerian | narayana | narayana-closed | c | c-class | a |
        /// a-closed | b | ck | ck-class
        family: String,
        n: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Verify a named identity over a size or range of sizes. Exit code 0
    /// only if every point passes.
    Verify {
        /// main | refined | eq6 | eq7 | eq12 | eq13 | cor23 | cor24 |
        /// cor25 | cor26 | crev | thm51 | acount | b_count | eq34 |
        /// b_asymmetry | count | inclusions | involutions
        identity: String,
        /// Size or inclusive range, e.g. --n 4 or --n 1..6.
        #[arg(long, default_value = "1..4")]
        n: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Render a labeled decorated grid with one or two paths to SVG. The
    /// second path is drawn reflected along the diagonal.
    Render {
        sigma: String,
        path: String,
        second_path: Option<String>,
        #[arg(long, default_value = "grid.svg")]
        out: String,
    },
    /// Stream objects one per line in deterministic order.
    Enumerate {
        /// perms | dyck | nonnesting | multiset | avoiders | arc-nonnesting
        /// | canon | canon-class
        what: String,
        n: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Copies per value for the k-generalizations (default 3 where needed).
    #[arg(long)]
    k: Option<usize>,
    /// Underlying permutation parameter.
    #[arg(long)]
    sigma: Option<String>,
    /// Descent set parameter, e.g. 2,5,6,8.
    #[arg(long)]
    set: Option<String>,
    /// Enumeration cap (number of objects a single call may visit).
    #[arg(long, default_value_t = enumerate::DEFAULT_CAP.0)]
    cap: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Stats { word, json } => stats(&word, json),
        Command::Check { predicate, word, pattern } => check(&predicate, &word, pattern.as_deref()),
        Command::Map { bijection, input, val, sigma, set } => {
            map(&bijection, &input, val, sigma.as_deref(), set.as_deref())
        }
        Command::Poly { family, n, params, json } => poly(&family, n, &params, json),
        Command::Verify { identity, n, params, json } => verify(&identity, &n, &params, json),
        Command::Render { sigma, path, second_path, out } => {
            render(&sigma, &path, second_path.as_deref(), &out)
        }
        Command::Enumerate { what, n, params } => enumerate_cmd(&what, n, &params),
    }
}

fn stats(word: &str, json: bool) -> Result<ExitCode, Error> {
    let w: Multipermutation = word.parse()?;
    let s = w.statistics();
    if json {
        let value = serde_json::json!({
            "word": w.to_string(),
            "n": w.n(),
            "k": w.k(),
            "des": s.des,
            "plat": s.plat,
            "wdes": s.wdes,
            "descent_set": s.descent_set,
        });
        println!("{value}");
    } else {
        let set: Vec<String> = s.descent_set.iter().map(|i| i.to_string()).collect();
        println!(
            "des={} plat={} wdes={} descent_set={{{}}}",
            s.des,
            s.plat,
            s.wdes,
            set.join(",")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn check(predicate: &str, word: &str, pattern: Option<&str>) -> Result<ExitCode, Error> {
    let w: Multipermutation = word.parse()?;
    let holds = match predicate {
        "nonnesting" => w.is_nonnesting()?,
        "in-a" => canon::general::is_avoider(&w),
        "in-b" => canon::general::is_nonnesting_partition(&w),
        "canon" => canon::general::is_canon(&w),
        "contains" | "avoids" => {
            let p = pattern
                .ok_or_else(|| Error::Unsupported("--pattern required".into()))
                .and_then(canon::word::parse_word_literal)?;
            let contains = canon::word::contains_pattern(w.entries(), &p);
            if predicate == "contains" {
                contains
            } else {
                !contains
            }
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown predicate {other:?}; expected nonnesting, in-a, in-b, canon, contains, avoids"
            )))
        }
    };
    println!("{holds}");
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn map(
    verb: &str,
    input: &str,
    val: Option<u32>,
    sigma: Option<&str>,
    set: Option<&str>,
) -> Result<ExitCode, Error> {
    // Path-level verbs.
    match verb {
        "rho" | "rho-inv" | "lk" | "lk-rho" => {
            let d: DyckPath = input.parse()?;
            let image = match verb {
                "rho" => bj::rho(&d),
                "rho-inv" => bj::rho_inv(&d),
                "lk" => bj::lalanne_kreweras(&d),
                _ => bj::lk_rho(&d),
            };
            println!("{image}");
            return Ok(ExitCode::SUCCESS);
        }
        _ => {}
    }
    let w: Multipermutation = input.parse()?;
    let parse_sigma = |flag: Option<&str>| -> Result<Permutation, Error> {
        flag.ok_or_else(|| Error::Unsupported("--sigma required for this verb".into()))
            .and_then(|s| Permutation::from_str(s))
    };
    let image = match verb {
        "reverse" => w.reverse(),
        "lkc" => bj::lalanne_kreweras_word(&w)?,
        "f-k" => {
            let k = val.ok_or_else(|| Error::Unsupported("--val required for f-k".into()))?;
            bj::swap_value_pair(&w, k)?
        }
        "f-sigma" => bj::to_layered_class(&w)?,
        "f-sigma-inv" => bj::from_layered_class(&parse_sigma(sigma)?, &w)?,
        "g-step" => bj::drop_top_descent(&w)?,
        "g-s" => bj::drop_all_descents(&w)?,
        "g-s-inv" => {
            let set: BTreeSet<usize> = parse_index_set(
                set.ok_or_else(|| Error::Unsupported("--set required for g-s-inv".into()))?,
            )?;
            bj::restore_descents(&set, &w)?
        }
        "phi-sigma" => bj::to_identity_class(&w)?,
        "phi-sigma-inv" => bj::from_identity_class(&parse_sigma(sigma)?, &w)?,
        "big-phi" => bj::wdes_involution(&w)?,
        "psi" => bj::wdes_global_involution(&w)?,
        "big-phi-bar" => bj::des_involution(&w)?,
        "psi-bar" => bj::des_global_involution(&w)?,
        other => {
            return Err(Error::Unsupported(format!("unknown bijection {other:?}")));
        }
    };
    println!("{image}");
    Ok(ExitCode::SUCCESS)
}

fn parse_sigma_or_set(params: &ParamArgs, n: usize) -> Result<Option<Permutation>, Error> {
    if let Some(s) = &params.sigma {
        return Ok(Some(s.parse()?));
    }
    if let Some(s) = &params.set {
        let set = parse_index_set(s)?;
        return Ok(Some(bj::reverse_layered(&set, n)?));
    }
    Ok(None)
}

fn poly(family: &str, n: usize, params: &ParamArgs, json: bool) -> Result<ExitCode, Error> {
    let cap = Cap(params.cap);
    let k = params.k.unwrap_or(3);
    let guard = |needed: canon::num_bigint::BigUint| cap.ensure(&needed);
    let poly: BivariatePoly = match family {
        "eulerian" => {
            canon::families::eulerian(n)
        }
        "narayana" => {
            guard(enumerate::catalan(n))?;
            canon::families::narayana(n)
        }
        "narayana-closed" => canon::families::narayana_closed(n),
        "c" => {
            guard(enumerate::factorial(n) * enumerate::catalan(n))?;
            canon::families::nonnesting_distribution(n)
        }
        "c-class" => {
            let sigma = parse_sigma_or_set(params, n)?
                .ok_or_else(|| Error::Unsupported("--sigma or --set required".into()))?;
            guard(enumerate::catalan(sigma.n()))?;
            canon::families::class_distribution(&sigma)
        }
        "a" => {
            guard(avoider_count(n))?;
            canon::general::avoider_distribution(n, k)
        }
        "a-closed" => canon::general::avoider_distribution_closed(n, k)?,
        "b" => {
            guard(canon::general::nonnesting_partition_count(n, k))?;
            canon::general::nonnesting_partition_distribution(n, k)
        }
        "ck" => {
            guard(enumerate::multinomial_count(n, k))?;
            canon::general::canon_distribution(n, k)
        }
        "ck-class" => {
            let sigma = parse_sigma_or_set(params, n)?
                .ok_or_else(|| Error::Unsupported("--sigma or --set required".into()))?;
            guard(enumerate::multinomial_count(sigma.n(), k))?;
            canon::general::canon_class_distribution(&sigma, k)
        }
        other => {
            return Err(Error::Unsupported(format!("unknown polynomial family {other:?}")));
        }
    };
    if json {
        println!("{}", poly_json(family, n, &poly));
    } else {
        println!("{poly}");
    }
    Ok(ExitCode::SUCCESS)
}

fn avoider_count(n: usize) -> canon::num_bigint::BigUint {
    canon::num_bigint::BigUint::from(2u32).pow(n.max(1) as u32 - 1) * enumerate::factorial(n)
}

fn poly_json(family: &str, n: usize, poly: &BivariatePoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = poly
        .terms()
        .map(|(&(i, j), c)| {
            serde_json::json!({ "t": i, "u": j, "coeff": c.to_string() })
        })
        .collect();
    serde_json::json!({
        "family": family,
        "n": n,
        "terms": terms,
        "text": poly.to_string(),
    })
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    if let Some((a, b)) = s.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad range start {a:?}"),
        })?;
        let hi: usize = b.trim().trim_start_matches('=').parse().map_err(|_| Error::Parse {
            pos: a.len() + 2,
            msg: format!("bad range end {b:?}"),
        })?;
        if lo > hi {
            return Err(Error::Unsupported(format!("empty range {s:?}")));
        }
        Ok((lo, hi))
    } else {
        let v: usize = s.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad size {s:?}"),
        })?;
        Ok((v, v))
    }
}

fn verify(identity: &str, range: &str, params: &ParamArgs, json: bool) -> Result<ExitCode, Error> {
    let (lo, hi) = parse_range(range)?;
    let opts = VerifyOptions {
        k: params.k,
        sigma: match &params.sigma {
            Some(s) => Some(s.parse()?),
            None => None,
        },
        cap: Cap(params.cap),
    };
    let mut all_pass = true;
    let mut reports = Vec::new();
    for n in lo..=hi {
        let report = check_identity(identity, n, &opts)?;
        all_pass &= report.pass;
        if json {
            reports.push(serde_json::json!({
                "identity": report.identity,
                "params": report.params,
                "pass": report.pass,
                "witness": report.witness,
                "detail": report.detail,
            }));
        } else {
            let status = if report.pass { "PASS" } else { "FAIL" };
            match (&report.witness, &report.detail) {
                (Some(w), _) => println!("{} {}: {status} ({w})", report.identity, report.params),
                (None, Some(d)) => {
                    println!("{} {}: {status}", report.identity, report.params);
                    println!("  {d}");
                }
                (None, None) => println!("{} {}: {status}", report.identity, report.params),
            }
        }
        eprintln!("# {} {} took {} ms", report.identity, report.params, report.millis);
    }
    if json {
        println!("{}", serde_json::Value::Array(reports));
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn render(sigma: &str, path: &str, second: Option<&str>, out: &str) -> Result<ExitCode, Error> {
    let sigma: Permutation = sigma.parse()?;
    let d: DyckPath = path.parse()?;
    if sigma.n() != d.n() {
        return Err(Error::SizeMismatch { sigma: sigma.n(), path: d.n() });
    }
    let companion = match second {
        Some(s) => {
            let c: DyckPath = s.parse()?;
            if c.n() != d.n() {
                return Err(Error::SizeMismatch { sigma: sigma.n(), path: c.n() });
            }
            Some(c)
        }
        None => None,
    };
    let svg = svg::render(&sigma, &d, companion.as_ref());
    std::fs::write(out, svg)
        .map_err(|e| Error::Unsupported(format!("cannot write {out}: {e}")))?;
    println!("wrote {out}");
    Ok(ExitCode::SUCCESS)
}

fn enumerate_cmd(what: &str, n: usize, params: &ParamArgs) -> Result<ExitCode, Error> {
    let cap = Cap(params.cap);
    let k = params.k.unwrap_or(3);
    match what {
        "perms" => {
            cap.ensure(&enumerate::factorial(n))?;
            for p in enumerate::permutations(n) {
                println!("{p}");
            }
        }
        "dyck" => {
            cap.ensure(&enumerate::catalan(n))?;
            for d in enumerate::dyck_paths(n) {
                println!("{d}");
            }
        }
        "nonnesting" => {
            cap.ensure(&(enumerate::factorial(n) * enumerate::catalan(n)))?;
            for w in enumerate::nonnesting(n) {
                println!("{w}");
            }
        }
        "multiset" => {
            cap.ensure(&enumerate::multinomial_count(n, k))?;
            for w in enumerate::multiset_permutations(n, k) {
                println!("{w}");
            }
        }
        "avoiders" => {
            cap.ensure(&avoider_count(n))?;
            for w in canon::general::avoiders(n, k) {
                println!("{w}");
            }
        }
        "arc-nonnesting" => {
            cap.ensure(&canon::general::nonnesting_partition_count(n, k))?;
            for w in canon::general::nonnesting_partitions(n, k) {
                println!("{w}");
            }
        }
        "canon" => {
            // The multiset count bounds the number of canon words.
            cap.ensure(&enumerate::multinomial_count(n, k))?;
            for w in canon::general::canon_words(n, k) {
                println!("{w}");
            }
        }
        "canon-class" => {
            let sigma = parse_sigma_or_set(params, n)?
                .ok_or_else(|| Error::Unsupported("--sigma or --set required".into()))?;
            for w in canon::general::canon_class(&sigma, k) {
                println!("{w}");
            }
        }
        other => {
            return Err(Error::Unsupported(format!("unknown enumeration {other:?}")));
        }
    }
    Ok(ExitCode::SUCCESS)
}
