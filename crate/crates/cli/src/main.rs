use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use unital2d::catalog::{enumerate_catalog, find_family, CatalogKind, CharClass};
use unital2d::checks::{run_suite, Suite, DEFAULT_SEED};
use unital2d::isomorphism::{find_isomorphism_bruteforce, orbit_census};
use unital2d::{find_units, transform, Field, Mat2, Msc, Side};

#[derive(Parser)]
#[command(
    name = "unital2d",
    version,
    about = "Exact computations with two-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left, right and two-sided units of an MSC.
    Analyze {
        /// `q` or `gfP`.
        #[arg(long, default_value = "q")]
        field: Field,
        /// Eight comma-separated entries `α1,α2,α3,α4,β1,β2,β3,β4`.
        #[arg(long)]
        msc: String,
    },
    /// Structure constants after the change of basis `g`.
    Transform {
        #[arg(long, default_value = "q")]
        field: Field,
        #[arg(long)]
        msc: String,
        /// Four comma-separated entries `a11,a12,a21,a22`.
        #[arg(long)]
        g: String,
    },
    /// Brute-force isomorphism search between two MSC files.
    Iso {
        #[arg(long)]
        field: Field,
        a: PathBuf,
        b: PathBuf,
    },
    /// List a catalog, or instantiate one family with `--family` and `--params`.
    Catalog {
        /// `not23`, `2`, `3` or `real`.
        #[arg(long = "char")]
        char_class: CharClass,
        /// `all`, `left`, `right` or `unital`.
        #[arg(long, default_value = "all")]
        kind: CatalogKind,
        #[arg(long)]
        family: Option<String>,
        /// Comma-separated parameters; empty for constant families.
        #[arg(long, requires = "family")]
        params: Option<String>,
        /// Field for `--family`; defaults to the class's own.
        #[arg(long)]
        field: Option<Field>,
    },
    /// Run verification suites and print a PASS/FAIL table.
    Verify {
        /// `tables`, `corollaries`, `oracle`, `census` or `all`.
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Orbit census of all MSCs over GF(p).
    Census {
        #[arg(long)]
        p: Option<u32>,
        /// Opt in to a larger prime (5).
        #[arg(long, value_name = "P")]
        allow_large: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_msc(field: Field, path: &PathBuf) -> anyhow::Result<Msc> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    Msc::parse(field, line).with_context(|| format!("parsing {}", path.display()))
}

fn mat_text(g: &Mat2) -> String {
    g.entries()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Analyze { field, msc } => {
            let a = Msc::parse(field, &msc)?;
            let parts: Vec<String> = [Side::Left, Side::Right, Side::TwoSided]
                .into_iter()
                .map(|side| format!("{side}: {}", find_units(&a, side)))
                .collect();
            writeln!(out, "{}", parts.join("; "))?;
        }
        Command::Transform { field, msc, g } => {
            let a = Msc::parse(field, &msc)?;
            let g = Mat2::parse(field, &g)?;
            writeln!(out, "{}", transform(&a, &g)?)?;
        }
        Command::Iso { field, a, b } => {
            let a = read_msc(field, &a)?;
            let b = read_msc(field, &b)?;
            match find_isomorphism_bruteforce(&a, &b)? {
                Some(g) => writeln!(out, "{}", mat_text(&g))?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Catalog {
            char_class,
            kind,
            family,
            params,
            field,
        } => {
            let field = field.unwrap_or(char_class.default_field());
            if let Some(id) = family {
                let spec = find_family(&id, char_class)?;
                let text = params.unwrap_or_default();
                let values = if text.trim().is_empty() {
                    Vec::new()
                } else {
                    text.split(',')
                        .map(|s| field.parse(s))
                        .collect::<Result<Vec<_>, _>>()?
                };
                writeln!(out, "{}", spec.instantiate(field, &values)?)?;
                return Ok(ExitCode::SUCCESS);
            }
            for spec in enumerate_catalog(char_class, kind) {
                let mut line = format!("{}\t{}", spec.label, spec.template);
                if !spec.constraint.is_empty() {
                    line.push_str(&format!("\t[{}]", spec.constraint));
                }
                if let Some(u) = spec.left_formula() {
                    line.push_str(&format!("\tleft unit {u}"));
                }
                if let Some(u) = spec.right_formula() {
                    line.push_str(&format!("\tright unit {u}"));
                }
                writeln!(out, "{line}")?;
            }
        }
        Command::Verify { suite, seed } => {
            let results = run_suite(suite, seed);
            let failed = results.iter().filter(|r| !r.passed).count();
            for r in &results {
                writeln!(out, "{r}")?;
            }
            writeln!(out, "{} checks, {failed} failed", results.len())?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Census {
            p,
            allow_large,
            out: path,
        } => {
            let (p, large) = match (p, allow_large) {
                (Some(p), Some(q)) if p != q => bail!("--p {p} conflicts with --allow-large {q}"),
                (_, Some(q)) => (q, true),
                (Some(p), None) => (p, false),
                (None, None) => bail!("give --p 2|3 or --allow-large 5"),
            };
            let progress = |done: u64, total: u64| eprintln!("census GF({p}): {done}/{total}");
            let report = orbit_census(p, large, if large { Some(&progress) } else { None })?;
            writeln!(
                out,
                "GF({p}): {} MSCs, |GL| = {}, {} orbits (Burnside {})",
                report.total_msc_count,
                report.group_order,
                report.orbit_count,
                report.burnside_orbit_count
            )?;
            if let Some(path) = path {
                let json = serde_json::to_string_pretty(&report)?;
                fs::write(&path, json + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
