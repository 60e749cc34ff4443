//! Argument handling and rendering for the `perfdim` binary.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive
//! it with in-memory streams.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use perfdim::braided::{cohomology, euler, h0, hn_top, kunneth};
use perfdim::cech::verify_theorems;
use perfdim::enumeration::{enumerate_h0_monomials, enumerate_hn_monomials, GradedPiece};
use perfdim::exponents::check_prime;
use perfdim::geometry::{bezout_chi, bezout_line, blowup_origin, blowup_plane_charts, veronese};
use perfdim::intersect::braided_multiplicity;
use perfdim::{BraidedDim, Error, ExtInt, FracPoly, LineBundle, PAdicFrac};
use serde_json::{json, Value};

/// Monomials listed per table row before eliding the rest.
const TABLE_MONOMIALS: usize = 8;
/// Pieces larger than this are not enumerated for display.
const TABLE_ENUMERATION_LIMIT: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "perfdim",
    version,
    about = "Graded dimensions over Z[1/p] with exact arithmetic"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// The prime p.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,
    /// Number of grades to print.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    grades: u32,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Count only what first appears at each grade.
    #[arg(long, global = true)]
    reduced: bool,
}

#[derive(Args, Debug)]
struct BundleArgs {
    /// Dimension of projective space.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Degree, as "a", "a/b" or "a/p^b".
    #[arg(long, allow_hyphen_values = true)]
    deg: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Global sections of O(deg) on P^n.
    H0(BundleArgs),
    /// Top cohomology of O(deg) on P^n.
    Hn(BundleArgs),
    /// Euler characteristic of O(deg) on P^n.
    Euler(BundleArgs),
    /// h1 O(-s-t) - h1 O(-s) - h1 O(-t) on P^1, degrees divided by p^k.
    BezoutLine {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Intersection count of plane curves from graded dimensions.
    BezoutChi {
        /// Ambient degree, at least deg-f + deg-g.
        #[arg(long)]
        d: String,
        #[arg(long)]
        deg_f: u64,
        #[arg(long)]
        deg_g: u64,
    },
    /// Cohomology of O(a, b) on P^n x P^m.
    Kunneth {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Coordinates of the degree-d Veronese map of P^n at each grade.
    Veronese {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        d: u64,
    },
    /// Graded intersection multiplicities at the origin.
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Blow-up charts of a plane curve at the origin.
    Blowup {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "plane")]
        f: Option<String>,
        /// Print the chart maps of the blown-up plane instead.
        #[arg(long)]
        plane: bool,
    },
    /// Compare sign classification with exact Cech ranks on every weight.
    CechCheck {
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Comma-separated degrees.
        #[arg(
            long,
            allow_hyphen_values = true,
            value_delimiter = ',',
            required = true
        )]
        deg: Vec<String>,
        /// Grade: weights have denominators dividing p^i.
        #[arg(long, default_value_t = 1)]
        i: u32,
    },
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Computation(e.to_string())
        }
    }
}

/// Output of a successful command: JSON and a plain-text table.
struct Output {
    json: Value,
    table: String,
}

/// Runs the program on `argv` (program name first) and returns the exit code:
/// 0 on success, 1 for usage errors, 2 for failed computations.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json_requested = argv.iter().any(|a| a == "--json");
    let result = match Cli::try_parse_from(&argv) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                let _ = write!(out, "{e}");
                return 0;
            }
            _ => Err(Failure::Usage(first_line(&e.to_string()))),
        },
    };
    match result {
        Ok(o) => {
            let text = if json_requested {
                format!("{}\n", o.json)
            } else {
                o.table
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let (kind, reason, code) = match f {
                Failure::Usage(r) => ("usage", r, 1),
                Failure::Computation(r) => ("computation", r, 2),
            };
            let line = if json_requested {
                json!({ "error": kind, "reason": reason }).to_string()
            } else {
                format!("{kind} error: {reason}")
            };
            let _ = writeln!(err, "{line}");
            code
        }
    }
}

fn first_line(msg: &str) -> String {
    let line = msg
        .lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("invalid arguments");
    line.trim_start_matches("error: ").trim().to_string()
}

fn degree(text: &str, p: u64) -> Result<PAdicFrac, Failure> {
    Ok(PAdicFrac::parse(text, p)?)
}

fn poly(text: &str, p: u64) -> Result<FracPoly, Failure> {
    Ok(FracPoly::parse(text, 2, p)?)
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.config;
    check_prime(c.p)?;
    let grades = c.grades as usize;
    match &cli.command {
        Command::H0(b) => {
            let bundle = LineBundle::new(b.n, degree(&b.deg, c.p)?);
            let dim = h0(&bundle, grades)?;
            tuple_output(c, &dim, |g| piece(b.n, &bundle.degree, g, false, c.reduced))
        }
        Command::Hn(b) => {
            let bundle = LineBundle::new(b.n, degree(&b.deg, c.p)?);
            let dim = hn_top(&bundle, grades)?;
            tuple_output(c, &dim, |g| piece(b.n, &bundle.degree, g, true, c.reduced))
        }
        Command::Euler(b) => {
            let bundle = LineBundle::new(b.n, degree(&b.deg, c.p)?);
            tuple_output(c, &euler(&bundle, grades)?, |_| None)
        }
        Command::BezoutLine { s, t, k } => {
            tuple_output(c, &bezout_line(*s, *t, *k, grades, c.p)?, |_| None)
        }
        Command::BezoutChi { d, deg_f, deg_g } => {
            let dim = bezout_chi(&degree(d, c.p)?, *deg_f, *deg_g, grades)?;
            tuple_output(c, &dim, |_| None)
        }
        Command::Kunneth { n, a, m, b } => {
            let ha = cohomology(&LineBundle::new(*n, degree(a, c.p)?), grades)?;
            let hb = cohomology(&LineBundle::new(*m, degree(b, c.p)?), grades)?;
            let prod = kunneth(&ha, &hb)?;
            let mut rows = Vec::new();
            let mut table = String::from("index | offset | dims\n");
            for (i, d) in prod.iter().enumerate() {
                let d = maybe_reduced(d, c.reduced)?;
                rows.push(json!({ "index": i, "offset": d.offset(), "grades": d.values() }));
                table.push_str(&format!("H^{i} | {} | {}\n", d.offset(), join(d.values())));
            }
            Ok(Output {
                json: json!({ "p": c.p, "cohomology": rows }),
                table,
            })
        }
        Command::Veronese { n, d } => {
            let mut tower = Vec::new();
            let mut table = String::from("power of p | target | map\n");
            let mut previous: Option<perfdim::geometry::VeroneseMap> = None;
            for g in 0..c.grades {
                let v = veronese(*n, *d, g, c.p)?;
                let included = previous.as_ref().map(|prev| prev.included_in(&v));
                let coords = v.coordinates();
                tower.push(json!({
                    "grade": g,
                    "target_dim": v.target_dim,
                    "coordinates": coords,
                    "contains_previous": included,
                }));
                table.push_str(&format!(
                    "{g} | P^{} | [{}]\n",
                    v.target_dim,
                    elide(&coords, ":")
                ));
                previous = Some(v);
            }
            Ok(Output {
                json: json!({ "p": c.p, "n": n, "d": d, "tower": tower }),
                table,
            })
        }
        Command::Mult { f, g } => {
            let (f, g) = (poly(f, c.p)?, poly(g, c.p)?);
            let t = braided_multiplicity(&f, &g, grades + 1)?;
            let rows: Vec<Vec<ExtInt>> = (0..=grades).map(|i| t.flat_row(i)).collect();
            let mut table = format!(
                "diagonal (from power {}) | {}\n",
                t.diagonal.offset(),
                join(t.diagonal.values())
            );
            table.push_str("power of p | mixed\n");
            for (i, r) in rows.iter().enumerate() {
                table.push_str(&format!("{i} | ({})\n", join(r)));
            }
            let json = json!({
                "p": c.p,
                "diagonal": { "offset": t.diagonal.offset(), "grades": t.diagonal.values() },
                "mixed": rows,
            });
            Ok(Output { json, table })
        }
        Command::Blowup { f, plane } => {
            if *plane {
                let pc = blowup_plane_charts(c.p)?;
                let rules = pc.describe();
                let ok = pc.self_check(3)?;
                let table = format!(
                    "{}\ninverse gluing check: {}\n",
                    rules.join("\n"),
                    if ok { "ok" } else { "FAILED" }
                );
                return Ok(Output {
                    json: json!({ "maps": rules, "self_check": ok }),
                    table,
                });
            }
            let text = f.as_deref().expect("clap requires --f without --plane");
            let (u, v) = blowup_origin(&poly(text, c.p)?)?;
            let mut table = String::new();
            for ch in [&u, &v] {
                table.push_str(&format!(
                    "{}-chart ({}): {} = 0, removed power {}, over origin: {}\n",
                    ch.chart,
                    ch.substitution(),
                    ch.transformed_text(),
                    ch.power,
                    describe_exceptional(&ch.exceptional)
                ));
            }
            let json = json!({ "charts": [serde_json::to_value(&u).unwrap(), serde_json::to_value(&v).unwrap()] });
            Ok(Output { json, table })
        }
        Command::CechCheck { n, deg, i } => {
            let degrees = deg
                .iter()
                .map(|d| degree(d, c.p))
                .collect::<Result<Vec<_>, _>>()?;
            let report = verify_theorems(*n, &degrees, *i)?;
            if !report.ok() {
                let first = report
                    .counterexamples
                    .first()
                    .map(|ce| format!("weight {} disagrees", ce.weight))
                    .unwrap_or_else(|| "totals differ from the closed forms".to_string());
                return Err(Failure::Computation(first));
            }
            let mut table = String::from("degree | weights | ranks | expected\n");
            for d in &report.degrees {
                table.push_str(&format!(
                    "{} | {} | ({}) | ({})\n",
                    d.degree,
                    d.weights,
                    d.totals
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    d.expected.join(", ")
                ));
            }
            table.push_str(&format!(
                "{} weights, no disagreements\n",
                report.weights_checked()
            ));
            Ok(Output {
                json: serde_json::to_value(&report).unwrap(),
                table,
            })
        }
    }
}

fn describe_exceptional(e: &perfdim::geometry::Exceptional) -> String {
    use perfdim::geometry::Exceptional::*;
    match e {
        Empty { witness } => format!("nothing ({witness} has no solution)"),
        Point { point, constraint } => format!("the point {point} ({constraint})"),
        Constraint { constraint } => format!("points solving {constraint}"),
    }
}

fn maybe_reduced(d: &BraidedDim, reduced: bool) -> Result<BraidedDim, Failure> {
    if reduced {
        Ok(d.reduced()?)
    } else {
        Ok(d.clone())
    }
}

fn tuple_output(
    c: &Config,
    dim: &BraidedDim,
    monomials: impl Fn(u32) -> Option<GradedPiece>,
) -> Result<Output, Failure> {
    let dim = maybe_reduced(dim, c.reduced)?;
    let json = json!({ "p": c.p, "offset": dim.offset(), "grades": dim.values() });
    let mut table = String::new();
    let pieces: Vec<Option<GradedPiece>> = (0..dim.values().len() as u32)
        .map(|j| monomials(dim.offset() + j))
        .collect();
    let with_monomials = pieces.iter().any(Option::is_some);
    table.push_str(if with_monomials {
        "power of p | monomials | dim\n"
    } else {
        "power of p | dim\n"
    });
    for (j, (v, piece)) in dim.values().iter().zip(&pieces).enumerate() {
        let g = dim.offset() + j as u32;
        if with_monomials {
            let list = match piece {
                Some(pc) => {
                    let items: Vec<String> = pc.scaled().iter().map(|v| render_scaled(v)).collect();
                    if items.is_empty() {
                        "(none)".to_string()
                    } else {
                        elide(&items, " ")
                    }
                }
                None => "...".to_string(),
            };
            table.push_str(&format!("{g} | {list} | {v}\n"));
        } else {
            table.push_str(&format!("{g} | {v}\n"));
        }
    }
    Ok(Output { json, table })
}

/// Monomials of one grade for display, with denominators cleared.
fn piece(n: usize, d: &PAdicFrac, grade: u32, top: bool, reduced: bool) -> Option<GradedPiece> {
    let count = if top {
        if !d.is_negative() {
            return None;
        }
        perfdim::enumeration::count_hn_monomials(n, &-d, grade).ok()?
    } else {
        perfdim::enumeration::count_h0_monomials(n, d, grade).ok()?
    };
    if count > TABLE_ENUMERATION_LIMIT.into() {
        return None;
    }
    let pc = if top {
        enumerate_hn_monomials(n, &-d, grade).ok()?
    } else {
        enumerate_h0_monomials(n, d, grade).ok()?
    };
    Some(if reduced { pc.reduced() } else { pc })
}

fn render_scaled(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn elide(items: &[String], sep: &str) -> String {
    if items.len() <= TABLE_MONOMIALS {
        items.join(sep)
    } else {
        format!("{}{sep}...", items[..TABLE_MONOMIALS].join(sep))
    }
}

fn join(values: &[ExtInt]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
