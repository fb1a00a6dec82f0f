//! Command-line front end: counting, tables, sequences, classification,
//! codes, combinatorial models, arrangement computations, and the
//! cross-check suite.

mod verify;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, One};

use altacyclic::arrangement::{
    characteristic_polynomial, direct_point_count_capped, region_count, DEFAULT_POINT_CAP,
};
use altacyclic::bijections::{
    ds_decode, ds_encode, dumont_pair_count, dumont_pairs, median_excedant_count,
    median_excedant_model, nm_model, nm_model_count, pair_vector_count, pair_vector_model,
    ExcedantFunction,
};
use altacyclic::enumeration::count_report_capped;
use altacyclic::forest::{largest_maximal_representation, reduce, type_of, BiorderedCode};
use altacyclic::numbers::{
    eulerian, genocchi_first, median_genocchi, normalized_median_genocchi, semiacyclic_count,
    type_table,
};
use altacyclic::perm::Permutation;
use altacyclic::series::{alpha_coefficient, genocchi_first_series, median_genocchi_series};
use altacyclic::tournament::{
    has_alternating_closed_walk, is_alt_acyclic, is_semiacyclic, Tournament,
};

#[derive(Parser)]
#[command(
    name = "altacyclic",
    version,
    about = "Exact combinatorics of alternation-acyclic tournaments"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads for enumeration subcommands (default: all cores).
    /// Results are identical for any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CountClass {
    /// Tournaments with no alternating cycle.
    AltAcyclic,
    /// Alt-acyclic tournaments where every vertex but the top starts an ascent.
    Ascending,
    /// Tournaments with no ascending cycle.
    Semiacyclic,
    /// All tournaments.
    Total,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    /// Exhaustive enumeration.
    Brute,
    /// Closed form or recurrence.
    Formula,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    /// Median Genocchi numbers H_1, H_3, H_5, ...
    Median,
    /// Unsigned Genocchi numbers of the first kind.
    First,
    /// Normalized median Genocchi numbers h_n.
    Normalized,
    /// One row of Eulerian numbers (requires --n).
    Eulerian,
    /// Semiacyclic tournament counts.
    Semiacyclic,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    /// Pairs of vectors with entries in 1..=k covering {1..n}.
    Dumont,
    /// Excedant functions on {1..2n-1} onto the evens plus the top value.
    Median,
    /// Pairs of vectors of length n-1 with zeros allowed, covering {1..n-1}.
    Pairvec,
    /// Sequences of one- or two-element subsets of {1..k} covering {1..n}.
    Nm,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CodeScheme {
    /// Descent-sensitive permutation code.
    Ds,
}

#[derive(Subcommand)]
enum Command {
    /// Count tournaments in a class.
    Count {
        #[arg(value_enum)]
        class: CountClass,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
        method: CountMethod,
        /// Enumeration cap for --method brute.
        #[arg(long, default_value_t = altacyclic::enumeration::DEFAULT_MAX_N)]
        cap: usize,
    },
    /// Emit the A(n,i,j) triangle (rows j descending).
    Table {
        /// Table kind; only `anij` exists.
        kind: String,
        #[arg(long)]
        n: usize,
        /// Divide each cell by j!.
        #[arg(long)]
        normalized: bool,
    },
    /// Emit a sequence prefix.
    Seq {
        #[arg(value_enum)]
        kind: SeqKind,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        /// Row size for `eulerian`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Classify one tournament.
    Classify {
        #[command(flatten)]
        input: TournamentInput,
    },
    /// Largest-maximal representation of one tournament.
    Lmax {
        #[command(flatten)]
        input: TournamentInput,
    },
    /// Reduce a largest-maximal code to one fewer element.
    Reduce {
        /// Code as JSON `{"n":..,"pi":[..],"p":[..]}` (0 = infinity in "p").
        #[arg(long)]
        json: String,
    },
    /// Encode a permutation.
    Encode {
        #[arg(value_enum)]
        scheme: CodeScheme,
        /// Permutation word, e.g. "6 1 5 3 4 2".
        #[arg(long)]
        perm: String,
    },
    /// Decode an excedant function back to a permutation.
    Decode {
        #[arg(value_enum)]
        scheme: CodeScheme,
        /// Function values, e.g. "5 4 4 6 6 6".
        #[arg(long)]
        f: String,
    },
    /// Enumerate a combinatorial model as JSON lines.
    Model {
        #[arg(value_enum)]
        kind: ModelKind,
        #[arg(long)]
        n: usize,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
        /// Slice: for `median`, arguments mapped to the top value; for
        /// `pairvec`, zero entries of the a-vector.
        #[arg(long)]
        fix_i: Option<usize>,
    },
    /// Characteristic polynomial of the homogenized arrangement.
    Charpoly {
        #[arg(long)]
        n: usize,
    },
    /// Region count of the homogenized arrangement.
    Regions {
        #[arg(long)]
        n: usize,
    },
    /// Brute-force off-hyperplane point count over F_q.
    Pointcount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
        cap: u128,
    },
    /// Generating-function series.
    Series {
        #[command(subcommand)]
        which: SeriesCommand,
    },
    /// Run the full cross-check suite; exits nonzero on any failure.
    Verify {
        /// Enumeration ceiling for the exhaustive checks.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Seed for the random-sample checks.
        #[arg(long, default_value_t = 20260811)]
        seed: u64,
        /// Random tournaments sampled at n = 8.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Median Genocchi numbers from the generating function.
    Median {
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// First-kind Genocchi numbers from the generating function.
    First {
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// The coefficient map (i,j) -> A(n,i,j)/j! extracted from the series.
    Alpha {
        #[arg(long)]
        n: usize,
    },
}

#[derive(clap::Args)]
struct TournamentInput {
    /// Tournament as JSON `{"n":..,"ascents":[[i,j],..]}`.
    #[arg(long, conflicts_with_all = ["hex", "n"])]
    json: Option<String>,
    /// Orientation mask as hex (most significant bit = pair (1,2)).
    #[arg(long, requires = "n")]
    hex: Option<String>,
    /// Vertex count for --hex.
    #[arg(long)]
    n: Option<usize>,
}

impl TournamentInput {
    fn parse(&self) -> Result<Tournament> {
        match (&self.json, &self.hex) {
            (Some(json), None) => serde_json::from_str(json).context("parsing tournament JSON"),
            (None, Some(hex)) => {
                let n = self.n.ok_or_else(|| anyhow!("--hex requires --n"))?;
                Ok(Tournament::from_hex(n, hex)?)
            }
            _ => bail!("provide exactly one of --json or --hex/--n"),
        }
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<usize>()
                .with_context(|| format!("bad number {tok:?}"))
        })
        .collect()
}

fn print_scalar(format: Format, fields: &[(&str, String)]) {
    match format {
        Format::Plain => println!("{}", fields.last().expect("fields nonempty").1),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
                .collect();
            println!("{}", serde_json::Value::Object(map));
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
            println!("{}", header.join(","));
            println!("{}", row.join(","));
        }
    }
}

fn print_sequence(format: Format, label: &str, values: &[BigInt]) {
    let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    match format {
        Format::Plain => println!("{}", strings.join(" ")),
        Format::Json => println!("{}", serde_json::to_string(&strings).expect("serializable")),
        Format::Csv => {
            println!("index,{label}");
            for (idx, v) in strings.iter().enumerate() {
                println!("{},{v}", idx + 1);
            }
        }
    }
}

fn run_count(
    format: Format,
    class: CountClass,
    n: usize,
    method: CountMethod,
    cap: usize,
) -> Result<()> {
    let count = match method {
        CountMethod::Brute => {
            let report = count_report_capped(n, cap)?;
            match class {
                CountClass::AltAcyclic => report.alt_acyclic,
                CountClass::Ascending => report.ascending,
                CountClass::Semiacyclic => report.semiacyclic,
                CountClass::Total => report.total,
            }
        }
        CountMethod::Formula => match class {
            CountClass::AltAcyclic => median_genocchi(n),
            CountClass::Ascending => genocchi_first(n),
            CountClass::Semiacyclic => semiacyclic_count(n)?,
            CountClass::Total => BigInt::one() << (n * (n - 1) / 2),
        },
    };
    let class_name = match class {
        CountClass::AltAcyclic => "alt-acyclic",
        CountClass::Ascending => "ascending",
        CountClass::Semiacyclic => "semiacyclic",
        CountClass::Total => "total",
    };
    let method_name = match method {
        CountMethod::Brute => "brute",
        CountMethod::Formula => "formula",
    };
    print_scalar(
        format,
        &[
            ("class", class_name.to_string()),
            ("n", n.to_string()),
            ("method", method_name.to_string()),
            ("count", count.to_string()),
        ],
    );
    Ok(())
}

fn run_table(format: Format, kind: &str, n: usize, normalized: bool) -> Result<()> {
    if kind != "anij" {
        bail!("unknown table kind {kind:?}; only `anij` exists");
    }
    let table = type_table(n);
    let cell = |i: usize, j: usize| {
        if normalized {
            table.normalized(i, j)
        } else {
            table.a(i, j)
        }
    };
    match format {
        Format::Json => {
            let cells: Vec<serde_json::Value> = (0..n)
                .rev()
                .flat_map(|j| (1..=n - j).map(move |i| (i, j)))
                .map(|(i, j)| serde_json::json!({"i": i, "j": j, "value": cell(i, j).to_string()}))
                .collect();
            println!(
                "{}",
                serde_json::json!({"n": n, "normalized": normalized, "cells": cells})
            );
        }
        Format::Csv => {
            let header: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            println!("j/i,{}", header.join(","));
            for j in (0..n).rev() {
                let row: Vec<String> = (1..=n)
                    .map(|i| {
                        if i + j <= n {
                            cell(i, j).to_string()
                        } else {
                            String::new()
                        }
                    })
                    .collect();
                println!("{j},{}", row.join(","));
            }
        }
        Format::Plain => {
            let width = (1..=n)
                .flat_map(|i| (0..=n - i).map(move |j| cell(i, j).to_string().len()))
                .max()
                .unwrap_or(1)
                .max(3);
            print!("j\\i");
            for i in 1..=n {
                print!(" {:>width$}", i);
            }
            println!();
            for j in (0..n).rev() {
                print!("{j:>3}");
                for i in 1..=n - j {
                    print!(" {:>width$}", cell(i, j));
                }
                println!();
            }
        }
    }
    Ok(())
}

fn run_seq(format: Format, kind: SeqKind, terms: usize, n: Option<usize>) -> Result<()> {
    let (label, values): (&str, Vec<BigInt>) = match kind {
        SeqKind::Median => (
            "median_genocchi",
            (1..=terms).map(median_genocchi).collect(),
        ),
        SeqKind::First => ("genocchi_first", (1..=terms).map(genocchi_first).collect()),
        SeqKind::Normalized => (
            "normalized_median_genocchi",
            (1..=terms)
                .map(|m| normalized_median_genocchi(m).map_err(Into::into))
                .collect::<Result<_>>()?,
        ),
        SeqKind::Semiacyclic => (
            "semiacyclic",
            (1..=terms)
                .map(|m| semiacyclic_count(m).map_err(Into::into))
                .collect::<Result<_>>()?,
        ),
        SeqKind::Eulerian => {
            let n = n.ok_or_else(|| anyhow!("seq eulerian requires --n"))?;
            (
                "eulerian",
                (0..n)
                    .map(|j| eulerian(n, j).map_err(Into::into))
                    .collect::<Result<_>>()?,
            )
        }
    };
    print_sequence(format, label, &values);
    Ok(())
}

fn run_classify(format: Format, t: &Tournament) -> Result<()> {
    let alt = is_alt_acyclic(t);
    let ty = if alt { Some(type_of(t)?) } else { None };
    let fields = [
        ("n", t.n().to_string()),
        ("hex", t.to_hex()),
        ("alt_acyclic", alt.to_string()),
        (
            "has_alternating_closed_walk",
            has_alternating_closed_walk(t).to_string(),
        ),
        ("semiacyclic", is_semiacyclic(t).to_string()),
        (
            "ascending",
            (alt && altacyclic::forest::is_ascending(t)).to_string(),
        ),
        (
            "type",
            ty.map_or("none".to_string(), |t| format!("({},{},{})", t.n, t.i, t.j)),
        ),
    ];
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
                .collect();
            println!("{}", serde_json::Value::Object(map));
        }
        _ => {
            for (k, v) in fields {
                println!("{k}: {v}");
            }
        }
    }
    Ok(())
}

fn print_code(format: Format, code: &BiorderedCode) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(code)?),
        _ => {
            println!("pi: {}", code.pi());
            let parents: Vec<String> = code
                .p()
                .to_compact()
                .iter()
                .map(|v| v.to_string())
                .collect();
            println!("p: {}", parents.join(" "));
        }
    }
    Ok(())
}

fn run_model(
    format: Format,
    kind: ModelKind,
    n: usize,
    count_only: bool,
    fix_i: Option<usize>,
) -> Result<()> {
    if fix_i.is_some() && !matches!(kind, ModelKind::Median | ModelKind::Pairvec) {
        bail!("--fix-i applies only to the median and pairvec models");
    }
    if count_only {
        let count = match kind {
            ModelKind::Dumont => dumont_pair_count(n),
            ModelKind::Median => median_excedant_count(n, fix_i),
            ModelKind::Pairvec => pair_vector_count(n, fix_i),
            ModelKind::Nm => nm_model_count(n),
        };
        print_scalar(
            format,
            &[("n", n.to_string()), ("count", count.to_string())],
        );
        return Ok(());
    }
    match kind {
        ModelKind::Dumont => {
            for pv in dumont_pairs(n) {
                println!("{}", serde_json::to_string(&pv)?);
            }
        }
        ModelKind::Median => {
            for f in median_excedant_model(n, fix_i) {
                println!("{}", serde_json::json!({ "f": f.values() }));
            }
        }
        ModelKind::Pairvec => {
            for pv in pair_vector_model(n, fix_i) {
                println!("{}", serde_json::to_string(&pv)?);
            }
        }
        ModelKind::Nm => {
            for s in nm_model(n) {
                println!("{}", serde_json::to_string(&s)?);
            }
        }
    }
    Ok(())
}

fn run_charpoly(format: Format, n: usize) -> Result<()> {
    let poly = characteristic_polynomial(n);
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        Format::Plain => println!("{poly}"),
        Format::Json => println!("{}", serde_json::to_string(&coeffs)?),
        Format::Csv => {
            println!("power,coefficient");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},{c}");
            }
        }
    }
    Ok(())
}

fn run_series(format: Format, which: SeriesCommand) -> Result<()> {
    match which {
        SeriesCommand::Median { terms } => {
            let values = median_genocchi_series(terms)?;
            print_sequence(format, "median_genocchi", &values);
        }
        SeriesCommand::First { terms } => {
            let values = genocchi_first_series(terms)?;
            print_sequence(format, "genocchi_first", &values);
        }
        SeriesCommand::Alpha { n } => {
            let cells: Vec<(usize, usize, BigInt)> = (0..n)
                .rev()
                .flat_map(|j| (1..=n - j).map(move |i| (i, j)))
                .map(|(i, j)| {
                    let v = alpha_coefficient(n, i, j);
                    anyhow::ensure!(v.is_integer(), "alpha({n},{i},{j}) not an integer");
                    Ok((i, j, v.to_integer()))
                })
                .collect::<Result<_>>()?;
            match format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = cells
                        .iter()
                        .map(
                            |(i, j, v)| serde_json::json!({"i": i, "j": j, "value": v.to_string()}),
                        )
                        .collect();
                    println!("{}", serde_json::json!({"n": n, "cells": entries}));
                }
                Format::Csv => {
                    println!("i,j,value");
                    for (i, j, v) in &cells {
                        println!("{i},{j},{v}");
                    }
                }
                Format::Plain => {
                    for (i, j, v) in &cells {
                        println!("{i} {j} {v}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring thread pool")?;
    }
    let format = cli.format;
    match cli.command {
        Command::Count {
            class,
            n,
            method,
            cap,
        } => run_count(format, class, n, method, cap)?,
        Command::Table {
            kind,
            n,
            normalized,
        } => run_table(format, &kind, n, normalized)?,
        Command::Seq { kind, terms, n } => run_seq(format, kind, terms, n)?,
        Command::Classify { input } => run_classify(format, &input.parse()?)?,
        Command::Lmax { input } => {
            let code = largest_maximal_representation(&input.parse()?)?;
            print_code(format, &code)?;
        }
        Command::Reduce { json } => {
            let code: BiorderedCode = serde_json::from_str(&json).context("parsing code JSON")?;
            print_code(format, &reduce(&code)?)?;
        }
        Command::Encode { scheme: _, perm } => {
            let word = parse_usize_list(&perm)?;
            let pi = Permutation::new(word)?;
            let f = ds_encode(&pi);
            let values: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
            match format {
                Format::Json => println!("{}", serde_json::to_string(&f)?),
                _ => println!("{}", values.join(" ")),
            }
        }
        Command::Decode { scheme: _, f } => {
            let values = parse_usize_list(&f)?;
            let f = ExcedantFunction::new(values)?;
            let pi = ds_decode(&f);
            match format {
                Format::Json => println!("{}", serde_json::to_string(pi.word())?),
                _ => println!("{pi}"),
            }
        }
        Command::Model {
            kind,
            n,
            count_only,
            fix_i,
        } => run_model(format, kind, n, count_only, fix_i)?,
        Command::Charpoly { n } => run_charpoly(format, n)?,
        Command::Regions { n } => {
            print_scalar(
                format,
                &[
                    ("n", n.to_string()),
                    ("regions", region_count(n).to_string()),
                ],
            );
        }
        Command::Pointcount { n, q, cap } => {
            let count = direct_point_count_capped(n, q, cap)?;
            print_scalar(
                format,
                &[
                    ("n", n.to_string()),
                    ("q", q.to_string()),
                    ("count", count.to_string()),
                ],
            );
        }
        Command::Series { which } => run_series(format, which)?,
        Command::Verify {
            max_n,
            seed,
            samples,
        } => {
            let config = verify::VerifyConfig {
                max_n,
                seed,
                samples,
            };
            let results = verify::run_suite(&config);
            let failed = verify::report(&results, format == Format::Json);
            return Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // die quietly when a pipe consumer (e.g. `head`) closes stdout early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
