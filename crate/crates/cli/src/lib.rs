//! Command-line front end: classify shapes, tabulate classifications by size,
//! export DIMACS instances, and render witness patches as SVG.

pub mod render;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use isoform_core::decide::{classify_with_stats, read_witness, write_witness, DecideConfig};
use isoform_core::encoder::{add_isohedral_clauses, build_surround_formula};
use isoform_core::grid::{format_cell, GridKind};
use isoform_core::placement::candidate_neighbors;
use isoform_core::polyform::{enumerate_free, read_polyform};
use isoform_core::solver::{export_dimacs, SolverConfig};
use isoform_core::Error;
use rayon::prelude::*;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "isoform",
    version,
    about = "Decide whether a polyform tiles the plane isohedrally"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct SolverArgs {
    /// SAT backend: `embedded` or `dimacs-pipe:<command>`.
    #[arg(long, default_value = "embedded")]
    pub solver: String,

    /// Emit the optional clauses that narrow the isohedral search. They never
    /// change a verdict.
    #[arg(long, value_parser = ["on", "off"], default_value = "on")]
    pub opt_clauses: String,

    /// Branching seed for the embedded solver; pins witness selection.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Conflict budget per solver call.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget_conflicts: u64,

    /// Wall-clock budget per solver call, in seconds.
    #[arg(long, default_value_t = 60.0)]
    pub budget_seconds: f64,
}

impl SolverArgs {
    pub fn decide_config(&self) -> Result<DecideConfig, Error> {
        Ok(DecideConfig {
            solver: SolverConfig {
                backend: SolverConfig::parse_backend(&self.solver)?,
                max_conflicts: self.budget_conflicts,
                max_seconds: self.budget_seconds,
                seed: self.seed,
            },
            opt_clauses: self.opt_clauses == "on",
        })
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Classify the shape in a polyform file.
    Classify {
        /// Polyform file: a `grid=<kind>` line, then cell tokens.
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the witness surround here, when one exists.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Classify every free polyform of a given size; print a CSV table.
    Count {
        #[arg(long)]
        grid: String,
        #[arg(long)]
        size: usize,
        /// Also write the CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Export a shape's CNF in DIMACS format, with a variable-map sidecar.
    ExportDimacs {
        #[arg(long = "in")]
        input: PathBuf,
        /// Which formula: `surround` or `isohedral`.
        #[arg(long, value_parser = ["surround", "isohedral"])]
        which: String,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Render a witness file as an SVG figure.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Map an error chain to the documented exit code: 2 for parse errors, 3 for
/// exhausted budgets, 1 otherwise.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. })
        | Some(Error::EmptyInput)
        | Some(Error::DisconnectedCells) => 2,
        Some(Error::ResourceLimit(_)) => 3,
        _ => 1,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Classify { input, out, solver } => cmd_classify(&input, out.as_deref(), &solver),
        Command::Count {
            grid,
            size,
            out,
            solver,
        } => cmd_count(&grid, size, out.as_deref(), &solver),
        Command::ExportDimacs {
            input,
            which,
            out,
            solver,
        } => cmd_export_dimacs(&input, &which, &out, &solver),
        Command::Render { input, out } => cmd_render(&input, &out),
    }
}

fn read_shape(path: &Path) -> Result<isoform_core::polyform::Polyform> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(read_polyform(&text)?)
}

fn cmd_classify(input: &Path, out: Option<&Path>, solver: &SolverArgs) -> Result<()> {
    let t = read_shape(input)?;
    let cfg = solver.decide_config()?;
    let (classification, stats) = classify_with_stats(&t, &cfg)?;
    println!("classification: {}", classification.tag());
    println!("cells: {}", t.len());
    println!("candidates: {}", stats.candidates);
    println!("variables: {}", stats.variables);
    println!(
        "clauses: {} (surround {}, isohedral {})",
        stats.surround_clauses + stats.isohedral_clauses,
        stats.surround_clauses,
        stats.isohedral_clauses
    );
    println!("solve iterations: {}", stats.iterations);
    println!("hole rejections: {}", stats.hole_rejections);
    println!("verification rejections: {}", stats.extendability_rejections);
    if let Some(path) = out {
        match classification.witness() {
            Some(w) => {
                fs::write(path, write_witness(w))
                    .with_context(|| format!("cannot write {}", path.display()))?;
                println!("witness: {}", path.display());
            }
            None => println!("witness: none"),
        }
    }
    Ok(())
}

fn cmd_count(grid: &str, size: usize, out: Option<&Path>, solver: &SolverArgs) -> Result<()> {
    anyhow::ensure!(size >= 1, "--size must be at least 1");
    let grid = grid.parse::<GridKind>()?;
    let cfg = solver.decide_config()?;
    let shapes = enumerate_free(grid, size);
    let results: Vec<Result<&'static str, Error>> = shapes
        .par_iter()
        .map(|t| classify_with_stats(t, &cfg).map(|(c, _)| c.tag()))
        .collect();

    let header = "size,total,not_surroundable,isohedral,surroundable_not_isohedral";
    let (mut ns, mut iso, mut sni) = (0usize, 0usize, 0usize);
    let mut done = 0usize;
    let mut limit: Option<Error> = None;
    for r in results {
        match r {
            Ok("not-surroundable") => ns += 1,
            Ok("isohedral") => iso += 1,
            Ok(_) => sni += 1,
            Err(e) => {
                limit = Some(e);
                break;
            }
        }
        done += 1;
    }
    if let Some(e) = limit {
        let table = format!(
            "{header}\n# partial: {e}; classified {done} of {} shapes\n",
            shapes.len()
        );
        print!("{table}");
        if let Some(path) = out {
            fs::write(path, &table)?;
        }
        return Err(e.into());
    }
    let table = format!("{header}\n{size},{},{ns},{iso},{sni}\n", shapes.len());
    print!("{table}");
    if let Some(path) = out {
        fs::write(path, &table).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn cmd_export_dimacs(input: &Path, which: &str, out: &Path, solver: &SolverArgs) -> Result<()> {
    let t = read_shape(input)?;
    let cfg = solver.decide_config()?;
    let cs = candidate_neighbors(&t);
    let mut formula = build_surround_formula(&t, &cs);
    if which == "isohedral" {
        formula = add_isohedral_clauses(formula, &t, &cs, cfg.opt_clauses);
    }
    fs::write(out, export_dimacs(&formula))
        .with_context(|| format!("cannot write {}", out.display()))?;

    let grid = t.grid();
    let vars: Vec<serde_json::Value> = formula
        .motions
        .iter()
        .enumerate()
        .map(|(i, m)| {
            serde_json::json!({
                "var": i + 1,
                "point": m.point,
                "translation": [m.translation.0, m.translation.1],
            })
        })
        .collect();
    let sidecar = serde_json::json!({
        "grid": grid.to_string(),
        "which": which,
        "center": t.cells().iter().map(|&c| format_cell(grid, c)).collect::<Vec<String>>(),
        "vars": vars,
    });
    let sidecar_path = out.with_extension("vars.json");
    fs::write(&sidecar_path, serde_json::to_string_pretty(&sidecar)?)?;

    println!(
        "dimacs: {} (p cnf {} {})",
        out.display(),
        formula.num_vars,
        formula.clauses.len()
    );
    println!("variable map: {}", sidecar_path.display());
    if formula.unsat_by_construction {
        println!("note: some halo cell has no covering candidate; the formula is trivially unsatisfiable");
    }
    Ok(())
}

fn cmd_render(input: &Path, out: &Path) -> Result<()> {
    let text =
        fs::read_to_string(input).with_context(|| format!("cannot read {}", input.display()))?;
    let witness = read_witness(&text)?;
    let svg = render::witness_svg(&witness);
    fs::write(out, svg).with_context(|| format!("cannot write {}", out.display()))?;
    println!(
        "rendered {} tiles to {}",
        witness.members().len() + 1,
        out.display()
    );
    Ok(())
}
