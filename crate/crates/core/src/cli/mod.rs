//! Command-line front end. Exit codes: 0 success, 1 failed checks, 2 usage errors.

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::characters::{character_by_index, characters, Parity};
use crate::coeffs::{coeff_a, coeff_b, laurent_c};
use crate::combinatorics::{bernoulli_numbers, secant_numbers, EulerianTable};
use crate::error::{Error, Result};
use crate::exactnum::rational::from_bigint;
use crate::exactnum::Rational;
use crate::lvalues::{
    dirichlet_l_closed, dirichlet_l_leopoldt, l_from_graph, mean_l_closed_form, spectral_sum,
    verlinde_zagier, SpecialValue, SpectralSumSpec,
};
use output::{character_to_json, json_cell, rational_to_json, special_value_to_json, ReportEntry};
use verify::{run_suite, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Closed,
    Leopoldt,
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclozeta",
    version,
    about = "Exact special values of L-functions and cycle-graph zeta functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Add floating-point columns (CSV only).
    #[arg(long, global = true)]
    pub numeric: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eulerian numbers A(n, l), or circular ones Ā(n, l).
    Eulerian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        circular: bool,
    },
    /// Bernoulli numbers B_0..B_k.
    Bernoulli {
        #[arg(long)]
        upto: usize,
    },
    /// Secant numbers E_0..E_{2k}.
    Secant {
        #[arg(long)]
        upto: usize,
    },
    /// Coefficient rows a_{n,i}, b_{n,i} or c_{n,s}.
    Coeffs {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Verlinde number V_g(N).
    Verlinde {
        #[arg(long)]
        g: u32,
        #[arg(long = "N")]
        modulus: u64,
    },
    /// Dirichlet characters modulo N with their enumeration indices.
    Characters {
        #[arg(long)]
        modulus: u64,
    },
    /// L(n, χ) for the character with the given index modulo N.
    Lvalue {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        modulus: u64,
        #[arg(long = "char")]
        index: usize,
        #[arg(long, value_enum, default_value = "closed")]
        route: Route,
    },
    /// Σ_k (2kπ + α)^{-n} at α = 2πp/q.
    SpectralSum {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Character-averaged L-value over one parity.
    Mean {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        modulus: u64,
        #[arg(long, value_enum)]
        parity: ParityArg,
    },
    /// Cross-route verification sweep.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 12)]
        max_modulus: u64,
        #[arg(long, default_value_t = 1_000_000)]
        mc_samples: u64,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Report elapsed_ms as 0 so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
}

/// A rendered result: a JSON document and the equivalent CSV table.
struct Rendered {
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    /// One numeric column per row, shown with `--numeric`.
    numeric: Option<Vec<String>>,
}

impl Rendered {
    fn table(json: Value, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        Rendered {
            json,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            numeric: None,
        }
    }
}

fn numeric_cell(v: &SpecialValue) -> String {
    let z = v.numeric();
    if z.im == 0.0 {
        format!("{:.17e}", z.re)
    } else {
        format!("{:.17e}{:+.17e}i", z.re, z.im)
    }
}

fn rational_numeric(q: &Rational) -> String {
    use num_traits::ToPrimitive;
    format!("{:.17e}", q.to_f64().unwrap_or(f64::NAN))
}

fn special_value_rendered(v: SpecialValue, row_prefix: Vec<String>, header: &[&str]) -> Rendered {
    let json = special_value_to_json(&v);
    let mut row = row_prefix;
    row.push(v.pi_power.to_string());
    row.push(json_cell(&json["coeff"]));
    let mut r = Rendered::table(json, header, vec![row]);
    r.numeric = Some(vec![numeric_cell(&v)]);
    r
}

fn rational_list(values: &[Rational], key: &str) -> Rendered {
    let json = Value::Array(values.iter().map(rational_to_json).collect());
    let rows = values
        .iter()
        .enumerate()
        .map(|(k, v)| vec![k.to_string(), v.to_string()])
        .collect();
    let mut r = Rendered::table(json, &[key, "value"], rows);
    r.numeric = Some(values.iter().map(rational_numeric).collect());
    r
}

fn character_for(modulus: u64, index: usize) -> Result<crate::characters::DirichletCharacter> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be ≥ 1".into()));
    }
    character_by_index(modulus, index)
        .ok_or_else(|| Error::InvalidArgument(format!("no character {index} modulo {modulus}")))
}

fn lvalue(n: u32, modulus: u64, index: usize, route: Route) -> Result<SpecialValue> {
    let chi = character_for(modulus, index)?;
    match route {
        Route::Closed => dirichlet_l_closed(n, &chi),
        Route::Leopoldt => dirichlet_l_leopoldt(n, &chi),
        Route::Graph => {
            if chi.parity() != Parity::of_integer(n as i64) {
                return Err(Error::ParityMismatch {
                    n,
                    chi_minus_one: chi.parity().sign() as i32,
                });
            }
            if n < 2 {
                return Err(Error::InvalidArgument("the graph route needs n ≥ 2".into()));
            }
            l_from_graph(n / 2, &chi)
        }
    }
}

fn render(command: &Command) -> Result<Rendered> {
    Ok(match *command {
        Command::Eulerian { n, circular } => {
            let table = EulerianTable::build(n, circular)?;
            let json = json!({
                "n": n,
                "circular": circular,
                "values": table.values.iter().map(|(l, v)| (l.to_string(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            });
            let rows = table
                .values
                .iter()
                .map(|(l, v)| vec![l.to_string(), v.to_string()])
                .collect();
            Rendered::table(json, &["l", "value"], rows)
        }
        Command::Bernoulli { upto } => rational_list(&bernoulli_numbers(upto), "k"),
        Command::Secant { upto } => {
            let values: Vec<Rational> = secant_numbers(upto).into_iter().map(from_bigint).collect();
            rational_list(&values, "k")
        }
        Command::Coeffs { n, family } => {
            let (row, first) = match family {
                Family::A => (coeff_a(n)?.as_ref().clone(), 1),
                Family::B => (coeff_b(n)?.as_ref().clone(), 1),
                Family::C => (laurent_c(n)?.as_ref().clone(), 0),
            };
            let json = Value::Array(row.iter().map(rational_to_json).collect());
            let rows = row
                .iter()
                .enumerate()
                .map(|(i, v)| vec![n.to_string(), (i + first).to_string(), v.to_string()])
                .collect();
            let mut r = Rendered::table(json, &["n", "index", "value"], rows);
            r.numeric = Some(row.iter().map(rational_numeric).collect());
            r
        }
        Command::Verlinde { g, modulus } => {
            let v = verlinde_zagier(g, modulus)?;
            let mut r = Rendered::table(
                rational_to_json(&v),
                &["g", "N", "value"],
                vec![vec![g.to_string(), modulus.to_string(), v.to_string()]],
            );
            r.numeric = Some(vec![rational_numeric(&v)]);
            r
        }
        Command::Characters { modulus } => {
            if modulus == 0 {
                return Err(Error::InvalidArgument("modulus must be ≥ 1".into()));
            }
            let chars = characters(modulus);
            let json = Value::Array(
                chars
                    .iter()
                    .enumerate()
                    .map(|(i, c)| character_to_json(i, c))
                    .collect(),
            );
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            let rows = chars
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    vec![
                        i.to_string(),
                        modulus.to_string(),
                        join(c.generators()),
                        join(c.exponents()),
                        c.order().to_string(),
                        c.parity().to_string(),
                        c.conductor().to_string(),
                    ]
                })
                .collect();
            Rendered::table(
                json,
                &[
                    "index",
                    "modulus",
                    "generator_residues",
                    "exponents",
                    "order",
                    "parity",
                    "conductor",
                ],
                rows,
            )
        }
        Command::Lvalue {
            n,
            modulus,
            index,
            route,
        } => special_value_rendered(
            lvalue(n, modulus, index, route)?,
            vec![
                n.to_string(),
                modulus.to_string(),
                index.to_string(),
                format!("{route:?}").to_lowercase(),
            ],
            &["n", "modulus", "char", "route", "pi_power", "coeff"],
        ),
        Command::SpectralSum { p, q, n } => special_value_rendered(
            spectral_sum(SpectralSumSpec::new(p, q, n)?)?,
            vec![p.to_string(), q.to_string(), n.to_string()],
            &["p", "q", "n", "pi_power", "coeff"],
        ),
        Command::Mean { n, modulus, parity } => {
            let parity = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            special_value_rendered(
                mean_l_closed_form(n, modulus, parity)?,
                vec![n.to_string(), modulus.to_string(), parity.to_string()],
                &["n", "modulus", "parity", "pi_power", "coeff"],
            )
        }
        Command::Verify { .. } => unreachable!("verify is rendered line by line"),
    })
}

fn write_csv(out: &mut dyn Write, header: &[String], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn emit_report(
    entries: &[ReportEntry],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for e in entries {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(e).expect("report entries serialize")
                )?;
            }
            Ok(())
        }
        Format::Csv => {
            let header: Vec<String> = ReportEntry::CSV_HEADER
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = entries.iter().map(|e| e.csv_row().to_vec()).collect();
            write_csv(out, &header, &rows)
        }
    }
}

/// Parses `argv` (program name first) and writes results to `out`, diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if cli.numeric && cli.format != Format::Csv {
        let _ = writeln!(err, "error: --numeric requires --format csv");
        return 2;
    }
    if let Command::Verify {
        max_n,
        max_modulus,
        mc_samples,
        seed,
        no_timing,
    } = cli.command
    {
        let cfg = VerifyConfig {
            max_n,
            max_modulus,
            mc_samples,
            seed,
            timing: !no_timing,
            ..VerifyConfig::default()
        };
        let entries = run_suite(&cfg);
        if emit_report(&entries, cli.format, out).is_err() {
            return 2;
        }
        return if entries.iter().all(ReportEntry::passed) {
            0
        } else {
            1
        };
    }
    let rendered = match render(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match cli.format {
        Format::Json => writeln!(out, "{}", rendered.json),
        Format::Csv => {
            let mut header = rendered.header.clone();
            let mut rows = rendered.rows.clone();
            if cli.numeric {
                if let Some(numeric) = &rendered.numeric {
                    header.push("numeric".into());
                    for (row, v) in rows.iter_mut().zip(numeric) {
                        row.push(v.clone());
                    }
                }
            }
            write_csv(out, &header, &rows)
        }
    };
    if written.is_err() {
        return 2;
    }
    0
}

/// Entry point for the binary: runs against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();

    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
