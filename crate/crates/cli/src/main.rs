//! Command-line front end for the bound computations.
//!
//! Subcommands map one-to-one onto library entry points; every output is
//! deterministic, and JSON renders all integers as decimal strings so that
//! consumers never face 64-bit overflow.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use autbound::{
    deck_bound, factorize, gl_bound_general, gl_bound_hypersurface, multiplier, n_value,
    n_value_closed, n_value_staircase_oracle, pgl_bound, reference_table, stratum_degree,
    BoundReport, Factorization, Multidegree,
};

#[derive(Parser)]
#[command(
    name = "autbound",
    version,
    about = "Exact divisibility bounds for automorphism groups of smooth \
             hypersurfaces and complete intersections in complex projective space"
)]
struct Cli {
    /// Output format (table --check always reports plain text)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Append the prime factorization to single-value text output
    #[arg(long, global = true)]
    factorize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundChoice {
    /// Stabiliser in the general linear group
    Gl,
    /// Projective automorphisms
    Pgl,
    /// Deck transformations of the induced covering
    Deck,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursion,
    Closed,
    Oracle,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a divisibility bound for given degree(s) and dimension
    Bound {
        #[arg(value_enum)]
        kind: BoundChoice,
        /// Degree, or comma-separated multidegree (gl only)
        #[arg(short, long = "degrees", value_delimiter = ',', required = true)]
        d: Vec<u64>,
        /// Ambient projective dimension
        #[arg(short)]
        n: u32,
    },
    /// Grid of projective bounds over ranges of n and d
    Table {
        /// Inclusive dimension range A..B (or a single value)
        #[arg(long, default_value = "2..4", value_parser = parse_range)]
        n_range: InclusiveRange,
        /// Inclusive degree range A..B (or a single value)
        #[arg(long, default_value = "3..10", value_parser = parse_range)]
        d_range: InclusiveRange,
        /// Verify cells against the embedded golden values; exit 1 on mismatch
        #[arg(long)]
        check: bool,
    },
    /// Discriminant count N for a multidegree, by one or all methods
    Ndn {
        #[arg(short, long = "degrees", value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// A single linking multiplier m_i
    Mult {
        #[arg(short, long = "degrees", value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        i: u32,
    },
    /// Degree of the singular stratum swept along a linear subspace
    Stratum {
        #[arg(short)]
        d: u64,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
    },
    /// Prime factorization of an integer
    Factor {
        /// Decimal integer >= 2
        value: String,
    },
}

#[derive(Clone, Copy, Debug)]
struct InclusiveRange {
    lo: u64,
    hi: u64,
}

impl InclusiveRange {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

fn parse_range(s: &str) -> Result<InclusiveRange, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let lo = a
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound {:?}", a.trim()))?;
    let hi = b
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound {:?}", b.trim()))?;
    Ok(InclusiveRange { lo, hi })
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<autbound::Error> for CliError {
    fn from(e: autbound::Error) -> Self {
        match e {
            autbound::Error::NonIntegralBound(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    out: String,
    code: i32,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { out, code: 0 }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.out);
            std::process::exit(outcome.code);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = Render {
        format: cli.format,
        factorize: cli.factorize,
    };
    match cli.command {
        Command::Bound { kind, d, n } => cmd_bound(kind, d, n, opts),
        Command::Table {
            n_range,
            d_range,
            check,
        } => cmd_table(n_range, d_range, check, opts),
        Command::Ndn { d, n, method } => cmd_ndn(d, n, method, opts),
        Command::Mult { d, n, i } => cmd_mult(d, n, i, opts),
        Command::Stratum { d, n, m } => cmd_stratum(d, n, m, opts),
        Command::Factor { value } => cmd_factor(&value, opts),
    }
}

#[derive(Clone, Copy)]
struct Render {
    format: Format,
    factorize: bool,
}

fn pairs_of(f: &Factorization) -> Vec<(String, String)> {
    f.factors()
        .iter()
        .map(|(p, e)| (p.to_string(), e.to_string()))
        .collect()
}

fn degree_strings(md: &Multidegree) -> Vec<String> {
    md.degrees().iter().map(|d| d.to_string()).collect()
}

/// `930 = 2 · 3 · 5 · 31` when factorization is requested, else `930`.
/// Values below 2 are never factored.
fn render_value(v: &BigInt, opts: Render) -> Result<String, CliError> {
    let wants = opts.factorize && *v >= BigInt::from(2);
    Ok(match opts.format {
        Format::Text | Format::Csv => {
            if wants {
                format!("{v} = {}", factorize(v)?.format_spaced())
            } else {
                v.to_string()
            }
        }
        Format::Latex => {
            if wants {
                format!("${v} = {}$", factorize(v)?.format_latex())
            } else {
                format!("${v}$")
            }
        }
        Format::Json => unreachable!("json rendering is per-command"),
    })
}

#[derive(Serialize)]
struct BoundJson {
    kind: String,
    n: String,
    degrees: Vec<String>,
    value: String,
    factorization: Vec<(String, String)>,
    factors: Vec<String>,
}

fn cmd_bound(kind: BoundChoice, d: Vec<u64>, n: u32, opts: Render) -> Result<Outcome, CliError> {
    let md = Multidegree::new(d)?;
    let report: BoundReport = match kind {
        BoundChoice::Gl => {
            if md.k() == 1 {
                gl_bound_hypersurface(md.degrees()[0], n)?
            } else {
                gl_bound_general(&md, n)?
            }
        }
        BoundChoice::Pgl => {
            let d = single_degree(&md, "pgl")?;
            pgl_bound(d, n)?
        }
        BoundChoice::Deck => {
            let d = single_degree(&md, "deck")?;
            deck_bound(d, n)?
        }
    };
    let out = match opts.format {
        Format::Json => json_line(&BoundJson {
            kind: report.kind.name().to_string(),
            n: report.n.to_string(),
            degrees: degree_strings(&report.degrees),
            value: report.value.to_string(),
            factorization: pairs_of(&report.factorization),
            factors: report
                .factor_breakdown
                .iter()
                .map(|f| f.to_string())
                .collect(),
        }),
        Format::Csv => format!(
            "kind,n,degrees,value,factorization\n{},{},{},{},{}\n",
            report.kind.name(),
            report.n,
            csv_field(&report.degrees.to_string()),
            report.value,
            report.factorization.format_compact()
        ),
        Format::Text | Format::Latex => {
            let mut line = render_value(&report.value, opts)?;
            line.push('\n');
            line
        }
    };
    Ok(Outcome::ok(out))
}

fn single_degree(md: &Multidegree, kind: &str) -> Result<u64, CliError> {
    if md.k() != 1 {
        return Err(CliError::Usage(format!(
            "the {kind} bound takes a single degree, got {md}"
        )));
    }
    Ok(md.degrees()[0])
}

#[derive(Serialize)]
struct CellJson {
    n: String,
    d: String,
    value: String,
    factorization: Vec<(String, String)>,
}

#[derive(Serialize)]
struct TableJson {
    cells: Vec<CellJson>,
}

fn cmd_table(
    n_range: InclusiveRange,
    d_range: InclusiveRange,
    check: bool,
    opts: Render,
) -> Result<Outcome, CliError> {
    if n_range.lo <= n_range.hi && n_range.lo < 1 {
        return Err(CliError::Usage("table requires n >= 1".into()));
    }
    if d_range.lo <= d_range.hi && d_range.lo < 3 {
        return Err(CliError::Usage("table requires d >= 3".into()));
    }
    // (n, d) -> report, in (n, d) order
    let mut cells: Vec<(u32, u64, BoundReport)> = Vec::new();
    for n in n_range.iter() {
        let n = u32::try_from(n).map_err(|_| CliError::Usage(format!("n = {n} is too large")))?;
        for d in d_range.iter() {
            cells.push((n, d, pgl_bound(d, n)?));
        }
    }

    if check {
        return Ok(check_report(&cells));
    }

    let out = match opts.format {
        Format::Json => json_line(&TableJson {
            cells: cells
                .iter()
                .map(|(n, d, r)| CellJson {
                    n: n.to_string(),
                    d: d.to_string(),
                    value: r.value.to_string(),
                    factorization: pairs_of(&r.factorization),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut s = String::from("n,d,value,factorization\n");
            for (n, d, r) in &cells {
                s.push_str(&format!(
                    "{n},{d},{},{}\n",
                    r.value,
                    r.factorization.format_compact()
                ));
            }
            s
        }
        Format::Text => text_grid(&cells, n_range, d_range, |r| {
            r.factorization.format_compact()
        }),
        Format::Latex => latex_grid(&cells, n_range, d_range),
    };
    Ok(Outcome::ok(out))
}

/// Rows are d, columns are n, matching the usual presentation.
fn text_grid(
    cells: &[(u32, u64, BoundReport)],
    n_range: InclusiveRange,
    d_range: InclusiveRange,
    render: impl Fn(&BoundReport) -> String,
) -> String {
    if cells.is_empty() {
        return String::new();
    }
    let find = |n: u64, d: u64| {
        cells
            .iter()
            .find(|(cn, cd, _)| *cn as u64 == n && *cd == d)
            .map(|(_, _, r)| render(r))
            .unwrap_or_default()
    };
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["d\\n".to_string()];
    header.extend(n_range.iter().map(|n| n.to_string()));
    grid.push(header);
    for d in d_range.iter() {
        let mut row = vec![d.to_string()];
        row.extend(n_range.iter().map(|n| find(n, d)));
        grid.push(row);
    }
    let ncols = grid[0].len();
    let widths: Vec<usize> = (0..ncols)
        .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>width$}", width = *w))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn latex_grid(
    cells: &[(u32, u64, BoundReport)],
    n_range: InclusiveRange,
    d_range: InclusiveRange,
) -> String {
    if cells.is_empty() {
        return String::new();
    }
    let find = |n: u64, d: u64| {
        cells
            .iter()
            .find(|(cn, cd, _)| *cn as u64 == n && *cd == d)
            .map(|(_, _, r)| format!("${}$", r.factorization.format_latex()))
            .unwrap_or_default()
    };
    let cols = n_range.iter().count();
    let mut out = format!("\\begin{{tabular}}{{|c|{}}}\n\\hline\n", "c|".repeat(cols));
    let header: Vec<String> = std::iter::once("$d\\backslash n$".to_string())
        .chain(n_range.iter().map(|n| format!("${n}$")))
        .collect();
    out.push_str(&header.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for d in d_range.iter() {
        let row: Vec<String> = std::iter::once(format!("${d}$"))
            .chain(n_range.iter().map(|n| find(n, d)))
            .collect();
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Compares computed cells against the golden grid; cells outside it are
/// skipped. One line per checked cell, then a summary line.
fn check_report(cells: &[(u32, u64, BoundReport)]) -> Outcome {
    let reference = reference_table();
    let mut out = String::new();
    let mut checked = 0usize;
    let mut passed = 0usize;
    for (n, d, report) in cells {
        let Some(row) = reference.iter().find(|r| r.n == *n && r.d == *d) else {
            continue;
        };
        checked += 1;
        let good = row.value == report.value
            && row.factorization.factors() == report.factorization.factors();
        if good {
            passed += 1;
            out.push_str(&format!("n={n} d={d} PASS\n"));
        } else {
            out.push_str(&format!(
                "n={n} d={d} FAIL expected {} = {} got {} = {}\n",
                row.value,
                row.factorization.format_compact(),
                report.value,
                report.factorization.format_compact()
            ));
        }
    }
    out.push_str(&format!("{passed}/{checked} PASS\n"));
    Outcome {
        out,
        code: if passed == checked { 0 } else { 1 },
    }
}

#[derive(Serialize)]
struct NdnJson {
    degrees: Vec<String>,
    n: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    recursion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
}

fn cmd_ndn(d: Vec<u64>, n: u32, method: Method, opts: Render) -> Result<Outcome, CliError> {
    let md = Multidegree::new(d)?;
    let recursion = match method {
        Method::Recursion | Method::All => Some(n_value(&md, n)?),
        _ => None,
    };
    let closed = match method {
        Method::Closed | Method::All => Some(n_value_closed(&md, n)?),
        _ => None,
    };
    let oracle = match method {
        Method::Oracle | Method::All => Some(n_value_staircase_oracle(&md, n)?),
        _ => None,
    };
    let named = [
        ("recursion", &recursion),
        ("closed", &closed),
        ("oracle", &oracle),
    ];
    let out = match opts.format {
        Format::Json => json_line(&NdnJson {
            degrees: degree_strings(&md),
            n: n.to_string(),
            recursion: recursion.as_ref().map(BigInt::to_string),
            closed: closed.as_ref().map(BigInt::to_string),
            oracle: oracle.as_ref().map(BigInt::to_string),
        }),
        Format::Csv => {
            let mut s = String::from("method,value\n");
            for (name, v) in named.iter() {
                if let Some(v) = v {
                    s.push_str(&format!("{name},{v}\n"));
                }
            }
            s
        }
        Format::Text | Format::Latex => {
            let parts: Vec<String> = named
                .iter()
                .filter_map(|(name, v)| v.as_ref().map(|v| format!("{name}={v}")))
                .collect();
            let line = if parts.len() == 1 {
                let single = named.iter().find_map(|(_, v)| v.as_ref()).unwrap();
                render_value(single, opts)?
            } else if opts.format == Format::Latex {
                format!(
                    "${}$",
                    named
                        .iter()
                        .filter_map(|(name, v)| {
                            v.as_ref().map(|v| format!("\\mathrm{{{name}}}={v}"))
                        })
                        .collect::<Vec<_>>()
                        .join(",\\ ")
                )
            } else {
                parts.join(" ")
            };
            format!("{line}\n")
        }
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct MultJson {
    degrees: Vec<String>,
    n: String,
    i: String,
    value: String,
}

fn cmd_mult(d: Vec<u64>, n: u32, i: u32, opts: Render) -> Result<Outcome, CliError> {
    let md = Multidegree::new(d)?;
    let value = multiplier(&md, n, i)?;
    let out = match opts.format {
        Format::Json => json_line(&MultJson {
            degrees: degree_strings(&md),
            n: n.to_string(),
            i: i.to_string(),
            value: value.to_string(),
        }),
        Format::Csv => format!(
            "degrees,n,i,value\n{},{n},{i},{value}\n",
            csv_field(&md.to_string())
        ),
        Format::Text | Format::Latex => format!("{}\n", render_value(&value, opts)?),
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct StratumJson {
    d: String,
    n: String,
    m: String,
    value: String,
}

fn cmd_stratum(d: u64, n: u32, m: u32, opts: Render) -> Result<Outcome, CliError> {
    let value = stratum_degree(d, n, m)?;
    let out = match opts.format {
        Format::Json => json_line(&StratumJson {
            d: d.to_string(),
            n: n.to_string(),
            m: m.to_string(),
            value: value.to_string(),
        }),
        Format::Csv => format!("d,n,m,value\n{d},{n},{m},{value}\n"),
        Format::Text | Format::Latex => format!("{}\n", render_value(&value, opts)?),
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct FactorJson {
    value: String,
    factorization: Vec<(String, String)>,
}

fn cmd_factor(value: &str, opts: Render) -> Result<Outcome, CliError> {
    let v: BigInt = value
        .parse()
        .map_err(|_| CliError::Usage(format!("not a decimal integer: {value:?}")))?;
    let f = factorize(&v)?;
    let out = match opts.format {
        Format::Json => json_line(&FactorJson {
            value: v.to_string(),
            factorization: pairs_of(&f),
        }),
        Format::Csv => {
            let mut s = String::from("prime,exponent\n");
            for (p, e) in f.factors() {
                s.push_str(&format!("{p},{e}\n"));
            }
            s
        }
        Format::Text => format!("{v} = {}\n", f.format_spaced()),
        Format::Latex => format!("${v} = {}$\n", f.format_latex()),
    };
    Ok(Outcome::ok(out))
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serialization is infallible");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
