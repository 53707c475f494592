//! The `klein-tc` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bar::nu_power_factors;
use crate::error::Result;
use crate::f2::{render_action_table, Gf2Space};
use crate::fox::{klein_resolution, surface_resolution};
use crate::group::{KleinElement, PairGenerator};
use crate::klein::algebra::{j_space, oracle_j_action};
use crate::klein::golden::{render_factor, render_omega};
use crate::klein::pipeline::{build_cube_quotient, omega_terms};
use crate::klein::{certify_surface, CertifyOptions};
use crate::selftest;

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "klein-tc", version, about = "Certify TC >= 4 for the Klein bottle and non-orientable surfaces")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Run every checkpoint and emit a JSON certificate.
    Certify {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the checkpoint log on standard error.
        #[arg(long)]
        verbose: bool,
        /// Corrupt one reference entry first: T<n>, omega<n>, jtable:<r>:<c>, cubetable:<r>:<c>.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Print one of the tables, recomputed.
    Show {
        table: Table,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
    },
    /// Run the seeded randomized property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Omega,
    Tterms,
    Jtable,
    Cubetable,
    Resolution,
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit status.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_CERTIFIED };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match &config.command {
        Command::Certify { genus, output, verbose, mutate } => {
            run_certify(*genus as usize, output.as_ref(), *verbose, mutate.clone(), out, err)
        }
        Command::Show { table, genus } => match render_table(*table, *genus as usize) {
            Ok(text) => out.write_all(text.as_bytes()).map(|_| EXIT_CERTIFIED).map_err(Into::into),
            Err(e) => Err(e.into()),
        },
        Command::Selftest { seed, iterations } => run_selftest(*seed, *iterations as usize, out),
    };
    outcome.unwrap_or_else(|e: CliError| {
        let _ = writeln!(err, "error: {}", e.message);
        e.code
    })
}

struct CliError {
    code: i32,
    message: String,
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_FAILURE, message: e.to_string() }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        let code = match e {
            crate::Error::UnknownMutation(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError { code, message: e.to_string() }
    }
}

fn run_certify(
    genus: usize,
    output: Option<&PathBuf>,
    verbose: bool,
    mutation: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    let cert = certify_surface(genus, &CertifyOptions { mutation })?;
    if verbose {
        write!(err, "{cert}")?;
    }
    let json = cert.to_json();
    match output {
        Some(path) => {
            fs::write(path, format!("{json}\n"))?;
            writeln!(out, "{}", cert.summary.verdict)?;
        }
        None => writeln!(out, "{json}")?,
    }
    Ok(if cert.certified() { EXIT_CERTIFIED } else { EXIT_FAILURE })
}

fn run_selftest(seed: u64, iterations: usize, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    let start = Instant::now();
    let reports = selftest::run_all(seed, iterations);
    writeln!(out, "selftest seed={seed} iterations={iterations}")?;
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        writeln!(out, "{status} {:<26} {:>5} cases", r.name, r.cases)?;
        for f in &r.failures {
            writeln!(out, "    counterexample: {f}")?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} suites, {failed} failed, {:.2}s", reports.len(), start.elapsed().as_secs_f64())?;
    Ok(if failed == 0 { EXIT_CERTIFIED } else { EXIT_FAILURE })
}

/// Renders a table from the computation, in the syntax of the files under
/// `data/` without their comment lines.
pub fn render_table(table: Table, genus: usize) -> Result<String> {
    match table {
        Table::Omega => Ok(render_omega(&omega_terms())),
        Table::Tterms => Ok(render_tterms()),
        Table::Jtable => Ok(render_action_table(&j_space(), &oracle_j_action()?)),
        Table::Cubetable => render_cubetable(),
        Table::Resolution if genus == 2 => Ok(render_klein_resolution()),
        Table::Resolution => Ok(surface_resolution(genus)?.to_string()),
    }
}

fn render_tterms() -> String {
    omega_terms()
        .iter()
        .enumerate()
        .map(|(i, (sign, t))| {
            let (xi, factors) = nu_power_factors::<KleinElement, i64>(t);
            let f: Vec<String> = factors.iter().map(render_factor).collect();
            format!("T{} {} : {}\n", i + 1, if sign * xi > 0 { '+' } else { '-' }, f.join(" | "))
        })
        .collect()
}

fn render_cubetable() -> Result<String> {
    let cube = build_cube_quotient(&oracle_j_action()?)?;
    let names: Vec<String> = (0..cube.quotient.space.dim()).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let space = Gf2Space::new(names.clone());
    let mut out = format!("basis: {}\n", names.join(" "));
    for (name, label) in names.iter().zip(cube.quotient.space.labels()) {
        out.push_str(&format!("{name} = {label}\n"));
    }
    let y_row = cube.quotient.action.iter().find(|(g, _)| *g == PairGenerator::Y1).map(|(_, m)| m.clone());
    let mut same = Vec::new();
    let mut rows = Vec::new();
    for (g, m) in &cube.quotient.action {
        if *g != PairGenerator::Y1 && g.label().contains('y') && Some(m) == y_row.as_ref() {
            same.push(g.label());
        } else {
            rows.push((*g, m.clone()));
        }
    }
    let table = render_action_table(&space, &rows);
    out.push_str(table.split_once('\n').map_or("", |(_, rest)| rest));
    if !same.is_empty() {
        out.push_str(&format!("same-as {}: {}\n", PairGenerator::Y1.label(), same.join(" ")));
    }
    Ok(out)
}

fn render_klein_resolution() -> String {
    let r = klein_resolution();
    let mut out = String::new();
    for (label, entry) in r.labels.1.iter().zip(&r.d1) {
        out.push_str(&format!("d1({label}) = {}\n", render_factor(entry)));
    }
    let d2: Vec<String> = r.d2.iter().map(render_factor).collect();
    out.push_str(&format!("d2({}) = {}\n", r.labels.2, d2.join(" | ")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden_body(text: &str) -> String {
        text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
    }

    #[test]
    fn rendered_tables_match_data_files() {
        let files = [
            (Table::Omega, include_str!("../data/omega.txt")),
            (Table::Tterms, include_str!("../data/tterms.txt")),
            (Table::Jtable, include_str!("../data/jtable.txt")),
            (Table::Cubetable, include_str!("../data/cubetable.txt")),
            (Table::Resolution, include_str!("../data/resolution.txt")),
        ];
        for (table, text) in files {
            assert_eq!(render_table(table, 2).unwrap(), golden_body(text), "{table:?}");
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run_from_args(["klein-tc", "show", "nonsense"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run_from_args(["klein-tc", "certify", "--genus", "1"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run_from_args(["klein-tc", "certify", "--mutate", "Q9"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run_from_args(["klein-tc", "selftest", "--iterations", "0"], &mut out, &mut err), EXIT_USAGE);
    }
}
