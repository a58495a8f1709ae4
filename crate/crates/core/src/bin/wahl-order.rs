use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use wahl_order::deform::{check_point, def0_generators, deformed_table_unchecked, diff_at, CochainSpec};
use wahl_order::iso::{find_isomorphism, solve_signs};
use wahl_order::kk::{gauss_word, kk_json, kk_table, self_intersection_count, young_diagram};
use wahl_order::order::{build_order, fiber_at, infinity_fiber, zero_fiber};
use wahl_order::render::{diff_grid, diff_text, gauss_text, young_svg};
use wahl_order::verify::{run_suite, Bounds};
use wahl_order::{Error, SingularityParams, WahlParams};

#[derive(Parser)]
#[command(name = "wahl-order", version, about = "Kalck-Karmazyn algebras, their deformations, and Wahl matrix orders")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of worker threads.
    #[arg(long, env = "WAHL_ORDER_THREADS", hide = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Svg,
    Paper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fiber {
    Zero,
    Generic,
    Infinity,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table and Young diagram of R_{r,a}.
    Kk {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        a: i64,
    },
    /// Gauss word and continued fractions of 1/r(1,a).
    Gauss {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        a: i64,
    },
    /// The differential matrix, the Def0 ideal, or a deformed table.
    Deform {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        a: i64,
        /// Cochain spec file (`t_i = ...`, `s = ...`).
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Print the generators of the Def0 ideal.
        #[arg(long, conflicts_with = "table")]
        ideal: bool,
        /// Print the deformed multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// The matrix order of the Wahl singularity 1/n^2(1, nq-1).
    Order {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
        /// Specialise at t = tau.
        #[arg(long, conflicts_with = "fiber")]
        at: Option<i64>,
        #[arg(long, value_enum)]
        fiber: Option<Fiber>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["kk", "deform", "order", "cross", "all"])]
        suite: String,
        #[arg(long)]
        max_r: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
    },
}

/// A failed check (exit 1) or bad input (exit 2).
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInDef0 { .. } | Error::GoldenMismatch { .. } | Error::InfinityDegree { .. } => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn unsupported(f: Format) -> Failure {
    let name = match f {
        Format::Table => "table",
        Format::Json => "json",
        Format::Svg => "svg",
        Format::Paper => "paper",
    };
    Failure::Input(format!("--format {name} is not available for this command"))
}

fn cmd_kk(r: i64, a: i64, format: Format) -> Outcome {
    let p = SingularityParams::new(r, a)?;
    let d = young_diagram(&p);
    Ok(match format {
        Format::Table => {
            let body = kk_table(&p).render_text(false);
            format!(
                "R_{{{r},{a}}} (b = {}), nontrivial products:\n{}",
                p.b,
                if body.is_empty() { "none\n".into() } else { body }
            )
        }
        Format::Json => to_json(&kk_json(&p)),
        Format::Svg => {
            let extent = d.column_heights.len().max(d.column_heights.iter().copied().max().unwrap_or(0) as usize) + 1;
            young_svg(&p, &d, extent as u32)
        }
        Format::Paper => {
            // boxes drawn top row first, labelled by gamma
            let height = d.column_heights.iter().copied().max().unwrap_or(0) as usize;
            let mut s = String::new();
            for y in (0..height).rev() {
                let row: Vec<String> = (0..d.column_heights.len())
                    .filter(|&x| (y as u32) < d.column_heights[x])
                    .map(|x| format!("{:>3}", d.labels[x][y]))
                    .collect();
                s.push_str(&format!("{}\n", row.join(" ")));
            }
            s
        }
    })
}

fn cmd_gauss(r: i64, a: i64, format: Format) -> Outcome {
    let p = SingularityParams::new(r, a)?;
    let word = gauss_word(&p);
    let count = self_intersection_count(&p);
    let frac = p.resolution_fraction();
    let dual = p.dual_fraction();
    Ok(match format {
        Format::Table | Format::Paper => format!(
            "gauss word: {}\nself-intersections: {count}\n{r}/{} = {frac:?}\n{r}/{a} = {dual:?}\n",
            gauss_text(&word),
            r - a
        ),
        Format::Json => to_json(&json!({
            "r": r, "a": a, "b": p.b, "word": word, "self_intersections": count,
            "resolution_fraction": frac, "dual_fraction": dual,
        })),
        Format::Svg => return Err(unsupported(format)),
    })
}

fn cmd_deform(r: i64, a: i64, spec: Option<PathBuf>, ideal: bool, table: bool, format: Format) -> Outcome {
    let p = SingularityParams::new(r, a)?;
    let spec = match spec {
        Some(path) => {
            let src = std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            CochainSpec::parse(&src, p.r)?
        }
        None => CochainSpec::generic(p.r),
    };
    if format == Format::Svg {
        return Err(unsupported(format));
    }
    if ideal {
        let gens = def0_generators(&p);
        return Ok(match format {
            Format::Json => to_json(&json!({ "r": r, "a": a, "generators": gens })),
            _ => gens.iter().map(|g| format!("{g}\n")).collect(),
        });
    }
    if table {
        check_point(&p, &spec)?;
        let t = deformed_table_unchecked(&p, &spec);
        return Ok(match format {
            Format::Json => to_json(&t.to_json()),
            _ => t.render_text(false),
        });
    }
    let d = diff_at(&p, &spec);
    Ok(match format {
        Format::Json => to_json(&json!({ "r": r, "a": a, "entries": d.upper_entries().iter()
            .map(|(i, j, v)| json!({ "i": i, "j": j, "value": v })).collect::<Vec<_>>() })),
        Format::Paper => diff_grid(&d),
        _ => diff_text(&d),
    })
}

fn cmd_order(n: i64, q: i64, at: Option<i64>, fiber: Option<Fiber>, format: Format) -> Outcome {
    let w = WahlParams::new(n, q)?;
    let order = build_order(&w);
    if format == Format::Svg {
        return Err(unsupported(format));
    }
    let kk = kk_table(&w.singularity()).map(|&x| BigInt::from(x));
    let dim = order.rank();
    let json_mode = format == Format::Json;
    let tau = match (at, fiber) {
        (Some(t), _) => Some(t),
        (None, Some(Fiber::Generic)) => Some(1),
        _ => None,
    };
    if let Some(tau) = tau {
        let tau = BigRational::from_integer(tau.into());
        let t = fiber_at(order.structure_constants()?, &tau);
        let det = order.span_determinant(&tau);
        if json_mode {
            return Ok(to_json(
                &json!({ "n": n, "q": q, "t": tau.to_string(), "span_determinant": det.to_string(), "table": t.to_json() }),
            ));
        }
        let verdict =
            if det == BigRational::from_integer(0.into()) { "basis matrices dependent" } else { "fiber is Mat_n" };
        return Ok(format!("{}span determinant at t = {tau}: {det} ({verdict})\n", t.render_text(false)));
    }
    match fiber {
        Some(Fiber::Zero) => {
            let t = zero_fiber(order.structure_constants()?);
            let map = find_isomorphism(&t, &kk)
                .ok_or_else(|| Failure::Check("t = 0 fiber is not isomorphic to R_{r,a}".into()))?;
            if json_mode {
                return Ok(to_json(&json!({ "n": n, "q": q, "table": t.to_json(), "map_to_kk": map })));
            }
            let p = w.singularity();
            Ok(format!("{}isomorphic to R_{{{},{}}}: {}\n", t.render_text(false), p.r, p.a, map.describe(dim)))
        }
        Some(Fiber::Infinity) => {
            let zero = zero_fiber(order.structure_constants()?);
            let t = infinity_fiber(order.structure_constants()?, w.n)?;
            let negation = solve_signs(&t, &zero, dim - 1, false)
                .ok_or_else(|| Failure::Check("limit at infinity is not w~_i -> w_{-i} of the t = 0 fiber".into()))?;
            let to_kk = find_isomorphism(&t, &kk)
                .ok_or_else(|| Failure::Check("limit at infinity is not isomorphic to R_{r,a}".into()))?;
            if json_mode {
                return Ok(to_json(
                    &json!({ "n": n, "q": q, "table": t.to_json(), "map_to_zero_fiber": negation, "map_to_kk": to_kk }),
                ));
            }
            let p = w.singularity();
            Ok(format!(
                "{}onto the t = 0 fiber: {}\nonto R_{{{},{}}}: {}\n",
                t.render_text(false),
                negation.describe(dim),
                p.r,
                p.a,
                to_kk.describe(dim)
            ))
        }
        _ => Ok(match format {
            Format::Json => {
                let cells: Vec<Vec<String>> = (0..order.n())
                    .map(|i| (0..order.n()).map(|j| order.cell_poly(i, j).to_string()).collect())
                    .collect();
                to_json(&json!({ "n": n, "q": q, "cells": cells }))
            }
            Format::Table => order.structure_constants()?.render_text(false),
            _ => order.render_paper(),
        }),
    }
}

fn cmd_verify(suite: &str, max_r: Option<u32>, max_n: Option<u32>, format: Format) -> Outcome {
    let bounds = Bounds::default().with_limits(max_r, max_n);
    let report = run_suite(suite, &bounds).ok_or_else(|| Failure::Input(format!("unknown suite {suite}")))?;
    let text = match format {
        Format::Json => to_json(&report),
        Format::Svg => return Err(unsupported(format)),
        _ => report.render_text(),
    };
    if report.passed() {
        Ok(text)
    } else {
        // the report is still printed before exiting with status 1
        print!("{text}");
        Err(Failure::Check(format!("suite {suite} failed")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let f = cli.format;
    let outcome = match cli.command {
        Command::Kk { r, a } => cmd_kk(r, a, f),
        Command::Gauss { r, a } => cmd_gauss(r, a, f),
        Command::Deform { r, a, spec, ideal, table } => cmd_deform(r, a, spec, ideal, table, f),
        Command::Order { n, q, at, fiber } => cmd_order(n, q, at, fiber, f),
        Command::Verify { suite, max_r, max_n } => cmd_verify(&suite, max_r, max_n, f),
    };
    match outcome {
        Ok(text) => match &cli.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    ExitCode::from(2)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
