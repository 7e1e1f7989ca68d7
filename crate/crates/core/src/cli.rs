//! The `hypermaps` command line.
//!
//! Exit codes: 0 success, 1 a verification mismatch, 2 usage or resource
//! errors (including the oracle cap).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::curve::{verify_ctilde_shifts, verify_f_identities, verify_fftmt, verify_tcfin, XCurve};
use crate::engine::checks::{
    check_pole_cancellation, check_structure, dual_genus, dual_one_point, dual_two_point,
    dual_y_entries, special_two_point_series, verify_psib_wave, zagier_y_check,
};
use crate::engine::count::{genus_map_json, poly_pairs};
use crate::engine::{count_poly, k_point, one_point, CountResult};
use crate::error::{Error, Result};
use crate::exact::{format_rational, rat, ratio, Rational};
use crate::oracle::{brute_count, check_duality, hurwitz_suite, oracle_equivalence, DEFAULT_CAP};
use crate::report::Report;

/// Largest `b·k` the table command accepts.
const TABLE_GUARD: u64 = 60;

#[derive(Parser, Debug)]
#[command(
    name = "hypermaps",
    version,
    about = "Exact enumeration of l-hypermaps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// M^[l]_k(b; n) and its genus split.
    Count(CountArgs),
    /// M^[l]_{g,k}(b, …, b) for k ≤ kmax, g ≤ gmax.
    Table(TableArgs),
    /// Raw coefficients of the 1-point or k-point function.
    Series(SeriesArgs),
    /// Runs a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub l: usize,
    /// Face degrees, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub b: Vec<u64>,
    #[arg(long)]
    pub genus: Option<u32>,
    /// Also run the brute-force enumeration and compare.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub oracle_cap: usize,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub b: u64,
    #[arg(long)]
    pub kmax: usize,
    #[arg(long)]
    pub gmax: u32,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long)]
    pub l: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Lowest power of λ kept is λ^{-order} (per variable).
    #[arg(long)]
    pub order: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tcfin,
    FIdentities,
    Fftmt,
    CtildeShifts,
    Dualpath,
    Special,
    Zagier,
    Psib,
    Hurwitz,
    Duality,
    Oracle,
    Structure,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub lmax: Option<usize>,
    #[arg(long)]
    pub smax: Option<usize>,
    #[arg(long)]
    pub bmax: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub genus: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub oracle_cap: usize,
    /// Seed for the sampled part of the structure suite.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 24)]
    pub samples: usize,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let outcome = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Error::InvalidArgument(format!(
                "cannot start {j} workers: {e}"
            ))),
        },
        None => dispatch(&cli, &mut buf),
    };
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Count(a) => cmd_count(a, cli.format, out),
        Command::Table(a) => cmd_table(a, cli.format, out),
        Command::Series(a) => cmd_series(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, cli.format, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("cannot write output: {e}"))
}

fn cmd_count(a: &CountArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let mut res = count_poly(a.l, &a.b)?;
    let oracle = if a.oracle {
        Some(brute_count(a.l, &a.b, a.oracle_cap)?)
    } else {
        None
    };
    let matched = oracle.as_ref().map(|o| *o == res.by_genus);
    let mut oracle_shown = oracle.clone();
    if let Some(g) = a.genus {
        res.by_genus.retain(|&h, _| h == g);
        if let Some(o) = oracle_shown.as_mut() {
            o.retain(|&h, _| h == g);
        }
    }
    let status = |m: bool| if m { "MATCH" } else { "MISMATCH" };
    match fmt {
        Format::Json => {
            let mut v = res.to_json();
            if let (Some(o), Some(m)) = (&oracle_shown, matched) {
                v["oracle"] = json!({ "by_genus": genus_map_json(o), "status": status(m) });
            }
            writeln!(out, "{v}").map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "g,value").map_err(io)?;
            for (g, c) in &res.by_genus {
                writeln!(out, "{g},{}", format_rational(c)).map_err(io)?;
            }
            if let Some(m) = matched {
                writeln!(out, "# oracle {}", status(m)).map_err(io)?;
            }
        }
        Format::Plain => {
            let b: Vec<String> = res.b.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "M^[{}]_{}({}; n) = {}",
                res.l,
                res.k(),
                b.join(","),
                res.poly_n
            )
            .map_err(io)?;
            for (g, c) in &res.by_genus {
                writeln!(out, "g={g}: {}", format_rational(c)).map_err(io)?;
            }
            if let (Some(o), Some(m)) = (&oracle_shown, matched) {
                let shown: Vec<String> = o
                    .iter()
                    .map(|(g, c)| format!("{g}: {}", format_rational(c)))
                    .collect();
                writeln!(out, "oracle {{{}}} {}", shown.join(", "), status(m)).map_err(io)?;
            }
        }
    }
    Ok(if matched == Some(false) { 1 } else { 0 })
}

fn table_rows(a: &TableArgs) -> Result<Vec<CountResult>> {
    if a.kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    if a.b * a.kmax as u64 > TABLE_GUARD {
        return Err(Error::InvalidArgument(format!(
            "b·kmax = {} exceeds the table guard {TABLE_GUARD}",
            a.b * a.kmax as u64
        )));
    }
    (1..=a.kmax)
        .map(|k| count_poly(a.l, &vec![a.b; k]))
        .collect()
}

fn cmd_table(a: &TableArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let rows = table_rows(a)?;
    let cells = |r: &CountResult| -> Vec<String> {
        (0..=a.gmax).map(|g| format_rational(&r.genus(g))).collect()
    };
    match fmt {
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let obj: serde_json::Map<String, serde_json::Value> = (0..=a.gmax)
                        .map(|g| (g.to_string(), json!(format_rational(&r.genus(g)))))
                        .collect();
                    json!({ "k": r.k(), "by_genus": obj })
                })
                .collect();
            writeln!(out, "{}", json!({ "l": a.l, "b": a.b, "rows": rows })).map_err(io)?;
        }
        Format::Csv => {
            let head: Vec<String> = (0..=a.gmax).map(|g| format!("g{g}")).collect();
            writeln!(out, "k,{}", head.join(",")).map_err(io)?;
            for r in &rows {
                writeln!(out, "{},{}", r.k(), cells(r).join(",")).map_err(io)?;
            }
        }
        Format::Plain => {
            let table: Vec<Vec<String>> = rows.iter().map(cells).collect();
            let mut width = vec![1usize; a.gmax as usize + 1];
            for (g, w) in width.iter_mut().enumerate() {
                *w = table
                    .iter()
                    .map(|row| row[g].len())
                    .max()
                    .unwrap_or(1)
                    .max(format!("g={g}").len());
            }
            let head: Vec<String> = width
                .iter()
                .enumerate()
                .map(|(g, w)| format!("{:>w$}", format!("g={g}")))
                .collect();
            writeln!(out, "M^[{}]_{{g,k}}({}, …, {})", a.l, a.b, a.b).map_err(io)?;
            writeln!(out, "{:>3}  {}", "k", head.join("  ")).map_err(io)?;
            for (r, row) in rows.iter().zip(&table) {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&width)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{:>3}  {}", r.k(), cells.join("  ")).map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn cmd_series(a: &SeriesArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    if a.k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let floor = -(a.order as i64);
    // (exponents, coefficient) in a fixed order
    let terms: Vec<(Vec<i64>, crate::exact::Poly)> = if a.k == 1 {
        one_point(a.l, a.order)?
            .terms()
            .map(|(e, p)| (vec![e], p.clone()))
            .collect()
    } else {
        if a.order < 2 {
            return Err(Error::InvalidArgument(
                "order must be at least 2 for k >= 2".into(),
            ));
        }
        k_point(a.l, a.k, a.order - 1)?
            .terms()
            .map(|(e, p)| (e.clone(), p.clone()))
            .collect()
    };
    let mut terms = terms;
    terms.sort_by(|x, y| y.0.cmp(&x.0));
    match fmt {
        Format::Json => {
            let list: Vec<serde_json::Value> = terms
                .iter()
                .map(|(e, p)| json!({ "exp": e, "poly_n": poly_pairs(p) }))
                .collect();
            writeln!(
                out,
                "{}",
                json!({ "l": a.l, "k": a.k, "floor": floor, "terms": list })
            )
            .map_err(io)?;
        }
        Format::Csv => {
            let head: Vec<String> = (1..=a.k).map(|v| format!("e{v}")).collect();
            writeln!(out, "{},coefficient", head.join(",")).map_err(io)?;
            for (e, p) in &terms {
                let es: Vec<String> = e.iter().map(i64::to_string).collect();
                writeln!(out, "{},\"{p}\"", es.join(",")).map_err(io)?;
            }
        }
        Format::Plain => {
            for (e, p) in &terms {
                let mono: Vec<String> = if a.k == 1 {
                    vec![format!("λ^{}", e[0])]
                } else {
                    e.iter()
                        .enumerate()
                        .map(|(v, x)| format!("λ{}^{x}", v + 1))
                        .collect()
                };
                writeln!(out, "{}: {p}", mono.join(" ")).map_err(io)?;
            }
            writeln!(out, "(truncated below λ^{floor})").map_err(io)?;
        }
    }
    Ok(0)
}

/// Reports for the named suite. Ranges default to the acceptance grids.
pub fn suite_reports(a: &VerifyArgs) -> Result<Vec<Report>> {
    let ls = |default_max: usize| -> Vec<usize> {
        match a.l {
            Some(l) => vec![l],
            None => (2..=a.lmax.unwrap_or(default_max)).collect(),
        }
    };
    let mut reps = Vec::new();
    match a.suite {
        Suite::Tcfin => {
            let s_max = a.smax.unwrap_or(6);
            for l in ls(5) {
                reps.push(verify_tcfin(
                    l as i64,
                    s_max,
                    6,
                    &(-3..=6).collect::<Vec<_>>(),
                )?);
            }
        }
        Suite::FIdentities => {
            let t_max = a.order.unwrap_or(6);
            for r in [rat(1), rat(2), rat(3), rat(4), ratio(1, 2), ratio(5, 3)] {
                for j in [
                    rat(-2),
                    rat(-1),
                    rat(0),
                    rat(1),
                    rat(2),
                    rat(3),
                    ratio(1, 2),
                    ratio(-4, 3),
                ] {
                    reps.push(verify_f_identities(&r, &j, t_max)?);
                }
            }
        }
        Suite::Fftmt => {
            let s_max = a.smax.unwrap_or(5);
            let vals: Vec<Rational> = vec![
                rat(-2),
                rat(-1),
                rat(0),
                rat(1),
                rat(2),
                ratio(1, 2),
                ratio(-3, 2),
            ];
            for r in 1..=4 {
                for i in &vals {
                    for j in &vals {
                        reps.push(verify_fftmt(&rat(r), i, j, s_max)?);
                    }
                }
            }
        }
        Suite::CtildeShifts => {
            let s_max = a.smax.unwrap_or(8);
            for r in 1..=4u32 {
                let curve = XCurve::new(r, s_max)?;
                for i in -4..=4 {
                    for j in -4..=4 {
                        reps.push(verify_ctilde_shifts(&curve, i, j));
                    }
                }
            }
        }
        Suite::Dualpath => {
            let b_max = a.bmax.unwrap_or(10);
            reps.push(dual_one_point(
                a.lmax.unwrap_or(5).max(a.l.unwrap_or(2)),
                5,
            )?);
            for l in ls(4) {
                reps.push(dual_y_entries(l, 3)?);
                reps.push(dual_two_point(l, b_max)?);
                reps.push(dual_genus(l, 20)?);
                reps.push(special_two_point_series(l, (b_max as usize).max(l) + 3)?);
                for m in 1..=3 {
                    reps.push(zagier_y_check(l, m, 6)?);
                }
            }
        }
        Suite::Special => {
            for l in ls(4) {
                reps.push(special_two_point_series(
                    l,
                    a.order.unwrap_or(11).max(l + 3),
                )?);
            }
        }
        Suite::Zagier => {
            for l in ls(4) {
                reps.push(dual_genus(l, 20)?);
                for m in 1..=3 {
                    reps.push(zagier_y_check(l, m, 6)?);
                }
            }
        }
        Suite::Psib => {
            for l in ls(4) {
                reps.push(verify_psib_wave(l, a.order.unwrap_or(4))?);
            }
        }
        Suite::Hurwitz => reps.push(hurwitz_suite(a.bmax.unwrap_or(6))?),
        Suite::Duality => {
            let cases: Vec<(usize, u64, usize)> = match (a.l, a.b, a.k) {
                (Some(l), Some(b), Some(k)) => vec![(l, b, k)],
                (None, None, None) => vec![(3, 2, 3), (5, 2, 5), (2, 3, 2)],
                _ => {
                    return Err(Error::InvalidArgument(
                        "duality needs all of --l, --b, --k or none".into(),
                    ))
                }
            };
            for (l, b, k) in cases {
                let top = crate::engine::max_genus(l, &vec![b; k]).unwrap_or(0);
                let genera: Vec<u32> = match a.genus {
                    Some(g) => vec![g],
                    None => (0..=top).collect(),
                };
                for g in genera {
                    reps.push(check_duality(l, b, k, g, a.oracle_cap)?);
                }
            }
        }
        Suite::Oracle => {
            let d_max = a.bmax.unwrap_or(a.oracle_cap as u64);
            for l in ls(6) {
                reps.push(oracle_equivalence(l, d_max, a.oracle_cap)?);
            }
        }
        Suite::Structure => {
            let b_max = a.bmax.unwrap_or(9);
            for l in ls(5) {
                for d in 1..=b_max {
                    for b in crate::oracle::partitions(d)
                        .into_iter()
                        .filter(|b| b.len() <= 4)
                    {
                        reps.push(check_structure(l, &b)?);
                    }
                }
                for k in 2..=3 {
                    reps.push(check_pole_cancellation(l, k, 6)?);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let mut sampled = Report::new(format!("sampled structure seed={}", a.seed));
            for _ in 0..a.samples {
                let l = rng.gen_range(2..=6usize);
                let k = rng.gen_range(1..=4usize);
                let b: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=5u64)).collect();
                sampled.absorb(check_structure(l, &b)?);
            }
            reps.push(sampled);
        }
    }
    Ok(reps)
}

fn cmd_verify(a: &VerifyArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let reps = suite_reports(a)?;
    let passed = reps.iter().all(Report::passed);
    match fmt {
        Format::Json => {
            writeln!(out, "{}", json!({ "passed": passed, "reports": reps })).map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "name,checks,failures").map_err(io)?;
            for r in &reps {
                writeln!(out, "\"{}\",{},{}", r.name, r.checks, r.failures.len()).map_err(io)?;
            }
        }
        Format::Plain => {
            for r in &reps {
                writeln!(out, "{r}").map_err(io)?;
            }
            let checks: usize = reps.iter().map(|r| r.checks).sum();
            writeln!(
                out,
                "{} ({} reports, {checks} checks)",
                if passed { "ALL PASS" } else { "FAILURES" },
                reps.len()
            )
            .map_err(io)?;
        }
    }
    Ok(if passed { 0 } else { 1 })
}
