use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use addtable::cyclotomic::{cyclotomic, factorize_c, factorize_unity};
use addtable::dice::{standard_die, sum_distribution};
use addtable::geometry::{self, decompose};
use addtable::oracle::{self, SearchLimits, DEFAULT_BRUTEFORCE_CAP};
use addtable::output::Envelope;
use addtable::render::{self, View};
use addtable::report::{self, ReportOptions};
use addtable::splitter::{self, solution_polynomials, Limits, DEFAULT_CELL_CAP};
use addtable::{Error, Poly, Splitting};

// Write to stdout, ignoring a closed pipe (e.g. `addtable oracle 8 8 | head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outp {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "addtable", version, about = "Addition tables whose cells are exactly 0..r*c-1")]
struct Cli {
    /// Omit timings so JSON output is byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct Labels {
    /// Row labels, comma separated, or @FILE.
    #[arg(long = "A", value_parser = parse_labels, allow_hyphen_values = true)]
    a: LabelList,
    /// Column labels, comma separated, or @FILE.
    #[arg(long = "B", value_parser = parse_labels, allow_hyphen_values = true)]
    b: LabelList,
}

#[derive(Subcommand)]
enum Command {
    /// Print the d-th cyclotomic polynomial.
    Cyclotomic {
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Factor x^m - 1 into cyclotomic polynomials.
    Factor {
        m: usize,
        /// Factor c(x) = (x^m - 1)/(x - 1) instead.
        #[arg(long)]
        interval: bool,
        #[arg(long)]
        json: bool,
    },
    /// All labelings of an r x c table, via cyclotomic factor splitting.
    /// `solve r c` and `solve c r` are mirrored problems: A always has r labels.
    Solve {
        rows: usize,
        cols: usize,
        #[command(flatten)]
        format: Format,
        /// Also print a(x) and b(x).
        #[arg(long)]
        polys: bool,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// All labelings by exhaustive backtracking.
    Oracle {
        rows: usize,
        cols: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        max_seconds: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
        max_cells: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Check that a labeling covers 0..r*c-1 exactly once.
    Verify {
        #[arg(long = "A", value_parser = parse_labels, allow_hyphen_values = true,
              required_unless_present = "from_json")]
        a: Option<LabelList>,
        #[arg(long = "B", value_parser = parse_labels, allow_hyphen_values = true,
              required_unless_present = "from_json")]
        b: Option<LabelList>,
        /// Defaults to the number of A labels.
        #[arg(long)]
        rows: Option<usize>,
        /// Defaults to the number of B labels.
        #[arg(long)]
        cols: Option<usize>,
        /// Verify every solution of a `solve --json` document (`-` for stdin).
        #[arg(long, conflicts_with_all = ["a", "b"])]
        from_json: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// All labelings from nested block partitions (mixed-radix schemes).
    Geometry {
        rows: usize,
        cols: usize,
        /// Only the single-level block patterns; square tables only.
        #[arg(long)]
        flat_only: bool,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Draw a labeled table.
    Render {
        #[command(flatten)]
        labels: Labels,
        #[arg(long, group = "view")]
        values: bool,
        #[arg(long, group = "view")]
        path: bool,
        #[arg(long, group = "view")]
        blocks: bool,
        /// Also write the view as SVG.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
    },
    /// Sum distribution of two dice.
    Dice {
        #[arg(long, value_parser = parse_labels)]
        die1: LabelList,
        #[arg(long, value_parser = parse_labels)]
        die2: LabelList,
        /// Compare against two standard dice with the same face counts;
        /// exit 1 when the distributions differ.
        #[arg(long)]
        compare_standard: bool,
        #[arg(long)]
        json: bool,
    },
    /// Predicted solution count (p-2)(p-1)+1 for an n x n table.
    Predict {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Predicted versus actual counts for a range of square tables.
    Report {
        #[arg(long = "from")]
        from: usize,
        #[arg(long = "to")]
        to: usize,
        #[arg(long)]
        skip_oracle_above: Option<usize>,
        /// Oracle time budget per row.
        #[arg(long, default_value_t = 60.0)]
        max_seconds: f64,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Debug, Clone)]
struct LabelList(Vec<i64>);

fn parse_labels(raw: &str) -> Result<LabelList, String> {
    let text = match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
        None => raw.to_string(),
    };
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(LabelList)
}

/// Failures that map onto exit codes.
enum Failure {
    /// A verification or comparison came out negative.
    Negative,
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Overflow { .. }
        | Error::EvalOverflow { .. }
        | Error::CellCapExceeded { .. }
        | Error::BipartitionLimitExceeded { .. }
        | Error::TimeBudgetExceeded { .. } => 3,
        Error::InvalidArgument(_) | Error::InvalidScheme(_) => 2,
        _ => 1,
    }
}

fn unsigned(labels: &[i64], side: &str) -> Result<Vec<usize>, Failure> {
    labels
        .iter()
        .map(|&x| usize::try_from(x).map_err(|_| Failure::Usage(format!("{side} label {x} is negative"))))
        .collect()
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Serialize)]
struct Solutions<'a> {
    rows: usize,
    cols: usize,
    count: usize,
    solutions: Vec<Pair<'a>>,
}

#[derive(Serialize)]
struct Pair<'a> {
    #[serde(rename = "A")]
    a: &'a [usize],
    #[serde(rename = "B")]
    b: &'a [usize],
}

fn print_solutions(
    command: &str,
    rows: usize,
    cols: usize,
    sols: &[Splitting],
    format: &Format,
    timings: BTreeMap<String, f64>,
    deterministic: bool,
    polys: bool,
) {
    if format.json {
        let env = Envelope::new(
            command,
            json!({"rows": rows, "cols": cols}),
            Solutions {
                rows,
                cols,
                count: sols.len(),
                solutions: sols.iter().map(|s| Pair { a: &s.a, b: &s.b }).collect(),
            },
        )
        .with_timings(timings, deterministic);
        out!("{}", env.to_json());
    } else if format.csv {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        w.write_record(["index", "A", "B"]).unwrap();
        for (k, s) in sols.iter().enumerate() {
            let list = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            w.write_record([(k + 1).to_string(), list(&s.a), list(&s.b)])
                .unwrap();
        }
        w.flush().unwrap();
    } else {
        out!("{rows} x {cols} table: {} solution(s)", sols.len());
        for (k, s) in sols.iter().enumerate() {
            out!("Solution {}: {s}", k + 1);
            if polys {
                let (a, b) = solution_polynomials(s);
                out!("  a(x) = {}", a.to_ascending_string());
                out!("  b(x) = {}", b.to_ascending_string());
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let det = cli.deterministic;
    match cli.command {
        Command::Cyclotomic { d, json } => {
            if d == 0 {
                return Err(Failure::Usage("d must be at least 1".into()));
            }
            let phi = cyclotomic(d)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    d: usize,
                    degree: Option<usize>,
                    coeffs: Poly,
                    text: String,
                }
                let out = Out {
                    d,
                    degree: phi.degree(),
                    text: phi.to_string(),
                    coeffs: phi,
                };
                out!("{}", Envelope::new("cyclotomic", json!({"d": d}), out).to_json());
            } else {
                out!("Phi_{d}(x) = {phi}");
            }
        }
        Command::Factor { m, interval, json } => {
            let fact = if interval {
                factorize_c(m)?
            } else {
                factorize_unity(m)?
            };
            let lhs = if interval {
                Poly::interval(m).to_string()
            } else {
                Poly::x_pow_minus_one(m).to_string()
            };
            if json {
                out!(
                    "{}",
                    Envelope::new("factor", json!({"m": m, "interval": interval}), &fact).to_json()
                );
            } else {
                out!("{lhs} = {fact}");
                for f in &fact.factors {
                    out!("Phi_{} = {}", f.d, f.phi);
                }
            }
        }
        Command::Solve {
            rows,
            cols,
            format,
            polys,
            max_cells,
        } => {
            let start = Instant::now();
            let limits = Limits {
                cell_cap: max_cells,
                ..Limits::default()
            };
            let sols = splitter::enumerate_cyclotomic_with(rows, cols, &limits)?;
            let timings = BTreeMap::from([("cyclotomic".to_string(), millis(start))]);
            print_solutions("solve", rows, cols, &sols, &format, timings, det, polys);
        }
        Command::Oracle {
            rows,
            cols,
            count_only,
            max_seconds,
            max_cells,
            format,
        } => {
            let limits = SearchLimits {
                cell_cap: max_cells,
                max_time: max_seconds.map(Duration::from_secs_f64),
            };
            let start = Instant::now();
            if count_only {
                let count = oracle::count_bruteforce_with(rows, cols, &limits)?;
                if format.json {
                    let env = Envelope::new(
                        "oracle",
                        json!({"rows": rows, "cols": cols, "count_only": true}),
                        json!({"rows": rows, "cols": cols, "count": count}),
                    )
                    .with_timings(BTreeMap::from([("oracle".into(), millis(start))]), det);
                    out!("{}", env.to_json());
                } else {
                    out!("{rows} x {cols} table: {count} solution(s)");
                }
            } else {
                let sols = oracle::enumerate_bruteforce_with(rows, cols, &limits)?;
                let timings = BTreeMap::from([("oracle".to_string(), millis(start))]);
                print_solutions("oracle", rows, cols, &sols, &format, timings, det, false);
            }
        }
        Command::Verify {
            a,
            b,
            rows,
            cols,
            from_json,
            json,
        } => return verify(a, b, rows, cols, from_json, json),
        Command::Geometry {
            rows,
            cols,
            flat_only,
            max_cells,
            format,
        } => {
            let start = Instant::now();
            let sols = if flat_only {
                if rows != cols {
                    return Err(Failure::Usage("--flat-only needs a square table".into()));
                }
                geometry::flat_patterns(rows)?
            } else {
                geometry::enumerate_schemes_with(rows, cols, max_cells)?
            };
            let timings = BTreeMap::from([("geometry".to_string(), millis(start))]);
            let command = if flat_only { "geometry --flat-only" } else { "geometry" };
            if !format.json && !format.csv {
                out!("{rows} x {cols} table: {} solution(s)", sols.len());
                for (k, s) in sols.iter().enumerate() {
                    let scheme = decompose(s).map(|sc| sc.to_string()).unwrap_or_default();
                    out!("Solution {}: {s}  scheme {scheme}", k + 1);
                }
            } else {
                print_solutions(command, rows, cols, &sols, &format, timings, det, false);
            }
        }
        Command::Render {
            labels,
            values: _,
            path,
            blocks,
            svg,
        } => {
            let a = unsigned(&labels.a.0, "A")?;
            let b = unsigned(&labels.b.0, "B")?;
            let s = Splitting::new(a, b);
            let verdict = oracle::verify(&s);
            if !verdict.valid {
                eprintln!(
                    "error: not a valid table: {}",
                    verdict.defect.map(|d| d.to_string()).unwrap_or_default()
                );
                return Err(Failure::Negative);
            }
            let view = if path {
                View::Path
            } else if blocks {
                View::Blocks
            } else {
                View::Values
            };
            outp!("{}", render::render(&s, view));
            if let Some(file) = svg {
                std::fs::write(&file, render::render_svg(&s, view))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            }
        }
        Command::Dice {
            die1,
            die2,
            compare_standard,
            json,
        } => {
            let d1 = unsigned(&die1.0, "die1")?.into_iter().map(|x| x as u64).collect::<Vec<_>>();
            let d2 = unsigned(&die2.0, "die2")?.into_iter().map(|x| x as u64).collect::<Vec<_>>();
            let dist = sum_distribution(&d1, &d2)?;
            let standard = compare_standard
                .then(|| sum_distribution(&standard_die(d1.len() as u64), &standard_die(d2.len() as u64)))
                .transpose()?;
            let equal = standard.as_ref().map(|s| *s == dist);
            if json {
                let out = json!({
                    "distribution": dist.counts,
                    "standard": standard.as_ref().map(|s| &s.counts),
                    "equal": equal,
                });
                let params = json!({"die1": d1, "die2": d2, "compare_standard": compare_standard});
                out!("{}", Envelope::new("dice", params, out).to_json());
            } else {
                let line = |d: &addtable::dice::SumDistribution| {
                    d.counts
                        .iter()
                        .map(|(s, c)| format!("{s}:{c}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                out!("given    {}", line(&dist));
                if let Some(std) = &standard {
                    out!("standard {}", line(std));
                    out!("{}", if equal == Some(true) { "EQUAL" } else { "DIFFERENT" });
                }
            }
            if equal == Some(false) {
                return Err(Failure::Negative);
            }
        }
        Command::Predict { n, json } => {
            if n < 2 {
                return Err(Failure::Usage("n must be at least 2".into()));
            }
            let divs = addtable::cyclotomic::divisors(n);
            let predicted = report::predict(n);
            if json {
                let out = json!({"n": n, "divisors": divs, "p": divs.len(), "predicted": predicted});
                out!("{}", Envelope::new("predict", json!({"n": n}), out).to_json());
            } else {
                out!("n = {n}, divisors = {divs:?}, p = {}, predicted N = {predicted}", divs.len());
            }
        }
        Command::Report {
            from,
            to,
            skip_oracle_above,
            max_seconds,
            format,
        } => {
            let options = ReportOptions {
                skip_oracle_above,
                oracle_budget: Some(Duration::from_secs_f64(max_seconds)),
            };
            let report = report::build_report(from, to, &options)?;
            if format.json {
                let env = Envelope::new(
                    "report",
                    json!({"from": from, "to": to, "skip_oracle_above": skip_oracle_above}),
                    &report,
                )
                .with_timings(
                    BTreeMap::from([("total".into(), report.elapsed.as_secs_f64() * 1e3)]),
                    det,
                );
                out!("{}", env.to_json());
            } else if format.csv {
                outp!("{}", report.to_csv());
            } else {
                outp!("{}", report.to_text());
            }
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct SolveDoc {
    solutions: Vec<LabelPair>,
}

#[derive(Deserialize)]
struct LabelPair {
    #[serde(rename = "A")]
    a: Vec<i64>,
    #[serde(rename = "B")]
    b: Vec<i64>,
}

fn verify(
    a: Option<LabelList>,
    b: Option<LabelList>,
    rows: Option<usize>,
    cols: Option<usize>,
    from_json: Option<String>,
    json: bool,
) -> Outcome {
    let pairs = match from_json {
        Some(src) => {
            let mut text = String::new();
            if src == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            } else {
                text = std::fs::read_to_string(&src).map_err(|e| Failure::Usage(format!("{src}: {e}")))?;
            }
            let doc: SolveDoc =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad solution document: {e}")))?;
            doc.solutions
        }
        None => vec![LabelPair {
            a: a.map(|l| l.0).unwrap_or_default(),
            b: b.map(|l| l.0).unwrap_or_default(),
        }],
    };
    let mut all_valid = true;
    let mut verdicts = Vec::new();
    for pair in &pairs {
        let r = rows.unwrap_or(pair.a.len());
        let c = cols.unwrap_or(pair.b.len());
        let verdict = oracle::verify_splitting(&pair.a, &pair.b, r, c);
        all_valid &= verdict.valid;
        verdicts.push(verdict);
    }
    if json {
        let out = json!({"valid": all_valid, "verdicts": verdicts});
        out!("{}", Envelope::new("verify", json!({"count": pairs.len()}), out).to_json());
    } else {
        for (k, v) in verdicts.iter().enumerate() {
            match &v.defect {
                None => out!("#{}: valid", k + 1),
                Some(d) => out!("#{}: invalid ({d})", k + 1),
            }
        }
    }
    if all_valid {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
