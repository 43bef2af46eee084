//! Command-line front end: quantity evaluation, suite runs, violation
//! search, and reference-case reproduction.
//!
//! Exit codes: 0 when all expectations are met, 1 when a run finds
//! unexpected violations (or a reproduction row misses its target), 2 for
//! usage and domain errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::cases;
use crate::error::{Error, Result};
use crate::inequalities::{run_suite, GapInputs, GapReport, InequalityId, SuiteConfig};
use crate::io::MatrixFile;
use crate::matrix::HermMatrix;
use crate::quantities::{self, DensityMatrix};
use crate::sample::SampleSpec;
use crate::search::{default_kind, minimize_gap, ParamGrid};

#[derive(Parser)]
#[command(
    name = "tracegap",
    version,
    about = "Deformed relative entropies, skew informations, and their trace inequalities as checkable gaps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one quantity on matrices loaded from files.
    Eval {
        /// Quantity name; see the catalog in the long help of this command.
        quantity: String,
        #[arg(long)]
        x: Option<PathBuf>,
        #[arg(long)]
        y: Option<PathBuf>,
        #[arg(long)]
        rho: Option<PathBuf>,
        #[arg(long)]
        a: Option<PathBuf>,
        #[arg(long)]
        b: Option<PathBuf>,
        #[arg(long)]
        h: Option<PathBuf>,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        t: Option<f64>,
    },
    /// Run one inequality (or `all`) over reference cases and seeded samples.
    Check {
        /// Inequality id, a unique prefix of one, or `all`.
        id: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Dimensions cycled across samples (repeatable).
        #[arg(long = "dim")]
        dims: Vec<usize>,
        /// Deformation grid (repeatable); defaults to 0.1, ..., 1.0.
        #[arg(long = "nu")]
        nus: Vec<f64>,
        /// Index-parameter grid (repeatable); defaults to 0, 0.1, ..., 1.
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Tolerance override for every report.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Run registered reference cases only (same as --samples 0).
        #[arg(long)]
        paper_cases: bool,
    },
    /// Search for a violation of one inequality, minimizing its gap.
    Search {
        id: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Deformation grid scored per proposal (repeatable).
        #[arg(long = "nu")]
        nus: Vec<f64>,
        /// Index-parameter grid scored per proposal (repeatable).
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 20_000)]
        budget: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Directory receiving the record and the best input matrices.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute registered reference values and compare against targets.
    Reproduce {
        /// Case name or `all`.
        case: String,
    },
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.cmd {
        Cmd::Eval {
            quantity,
            x,
            y,
            rho,
            a,
            b,
            h,
            nu,
            alpha,
            t,
        } => {
            let args = EvalArgs {
                x,
                y,
                rho,
                a,
                b,
                h,
                nu,
                alpha,
                t,
            };
            cmd_eval(&quantity, &args, out)
        }
        Cmd::Check {
            id,
            seed,
            samples,
            dims,
            nus,
            alphas,
            scale,
            tol,
            format,
            paper_cases,
        } => {
            let defaults = SuiteConfig::default();
            let config = SuiteConfig {
                seed,
                samples: if paper_cases { 0 } else { samples },
                dims: if dims.is_empty() { defaults.dims } else { dims },
                nu_grid: if nus.is_empty() {
                    defaults.nu_grid
                } else {
                    nus
                },
                alpha_grid: if alphas.is_empty() {
                    defaults.alpha_grid
                } else {
                    alphas
                },
                scale,
                tol_override: tol,
                ids: resolve_ids(&id)?,
                include_reference_cases: true,
            };
            cmd_check(&config, format, out)
        }
        Cmd::Search {
            id,
            dim,
            nus,
            alphas,
            budget,
            seed,
            scale,
            out: out_dir,
        } => {
            let id = resolve_id(&id)?;
            let defaults = ParamGrid::default();
            let grid = ParamGrid {
                nus: if nus.is_empty() { defaults.nus } else { nus },
                alphas: if alphas.is_empty() {
                    defaults.alphas
                } else {
                    alphas
                },
                fg_pairs: defaults.fg_pairs,
            };
            cmd_search(id, dim, budget, seed, scale, &grid, out_dir.as_deref(), out)
        }
        Cmd::Reproduce { case } => cmd_reproduce(&case, out),
    }
}

fn resolve_id(name: &str) -> Result<InequalityId> {
    if let Ok(id) = InequalityId::from_name(name) {
        return Ok(id);
    }
    let matches: Vec<InequalityId> = InequalityId::ALL
        .into_iter()
        .filter(|id| id.name().starts_with(name))
        .collect();
    match matches.as_slice() {
        [id] => Ok(*id),
        [] => Err(Error::UnknownInequality(name.to_string())),
        many => Err(Error::UnknownInequality(format!(
            "{name} is ambiguous: {}",
            many.iter()
                .map(|id| id.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

fn resolve_ids(name: &str) -> Result<Vec<InequalityId>> {
    if name == "all" {
        Ok(InequalityId::ALL.to_vec())
    } else {
        Ok(vec![resolve_id(name)?])
    }
}

struct EvalArgs {
    x: Option<PathBuf>,
    y: Option<PathBuf>,
    rho: Option<PathBuf>,
    a: Option<PathBuf>,
    b: Option<PathBuf>,
    h: Option<PathBuf>,
    nu: Option<f64>,
    alpha: Option<f64>,
    t: Option<f64>,
}

impl EvalArgs {
    fn herm(&self, slot: &Option<PathBuf>, flag: &'static str) -> Result<HermMatrix> {
        let path = slot.as_ref().ok_or(Error::MissingInput(flag))?;
        MatrixFile::load(path)?.to_herm()
    }

    fn x(&self) -> Result<HermMatrix> {
        self.herm(&self.x, "--x")
    }

    fn y(&self) -> Result<HermMatrix> {
        self.herm(&self.y, "--y")
    }

    fn rho(&self) -> Result<DensityMatrix> {
        let path = self.rho.as_ref().ok_or(Error::MissingInput("--rho"))?;
        DensityMatrix::new(MatrixFile::load(path)?.to_herm()?)
    }

    fn a(&self) -> Result<HermMatrix> {
        self.herm(&self.a, "--a")
    }

    fn b(&self) -> Result<HermMatrix> {
        self.herm(&self.b, "--b")
    }

    /// Observable slot: `--h`, falling back to `--a`.
    fn observable(&self) -> Result<HermMatrix> {
        if self.h.is_some() {
            self.herm(&self.h, "--h")
        } else {
            self.herm(&self.a, "--h")
        }
    }

    fn nu(&self) -> Result<crate::deformed::Deformation> {
        crate::deformed::Deformation::new(self.nu.ok_or(Error::MissingInput("--nu"))?)
    }

    fn alpha(&self) -> Result<f64> {
        self.alpha.ok_or(Error::MissingInput("--alpha"))
    }

    fn t(&self) -> Result<f64> {
        self.t.ok_or(Error::MissingInput("--t"))
    }
}

enum EvalOutput {
    Scalar(f64),
    Complex(Complex64),
    Matrix(HermMatrix),
}

/// Quantity catalog; names are kebab-case.
fn eval_quantity(quantity: &str, args: &EvalArgs) -> Result<EvalOutput> {
    use EvalOutput::{Complex, Matrix, Scalar};
    Ok(match quantity {
        "tsallis" => Scalar(quantities::tsallis_rel_entropy(
            &args.x()?,
            &args.y()?,
            args.nu()?,
        )?),
        "umegaki" => Scalar(quantities::umegaki_rel_entropy(&args.x()?, &args.y()?)?),
        "op-entropy" => Matrix(quantities::tsallis_rel_operator_entropy(
            &args.x()?,
            &args.y()?,
            args.nu()?,
        )?),
        "variance" => Scalar(quantities::variance(&args.rho()?, &args.observable()?)?),
        "covariance" => Complex(quantities::covariance(
            &args.rho()?,
            &args.a()?,
            &args.b()?,
        )?),
        "wy-skew" => Scalar(quantities::wy_skew(&args.rho()?, &args.observable()?)?),
        "wyd-skew" => Scalar(quantities::wyd_skew(
            &args.rho()?,
            &args.observable()?,
            args.alpha()?,
        )?),
        "j-quantity" => Scalar(quantities::j_quantity(&args.rho()?, &args.observable()?)?),
        "u-quantity" => Scalar(quantities::u_quantity(&args.rho()?, &args.observable()?)?),
        "u-quantity-alpha" => Scalar(quantities::u_quantity_alpha(
            &args.rho()?,
            &args.observable()?,
            args.alpha()?,
        )?),
        "corr" => Complex(quantities::corr(
            &args.rho()?,
            args.a()?.as_matrix(),
            args.b()?.as_matrix(),
        )?),
        "corr-alpha" => Complex(quantities::corr_alpha(
            &args.rho()?,
            args.a()?.as_matrix(),
            args.b()?.as_matrix(),
            args.alpha()?,
        )?),
        "k-skew" => Scalar(quantities::k_skew(
            &args.rho()?,
            &args.observable()?,
            args.alpha()?,
        )?),
        "k-corr" => Complex(quantities::corr_k(
            &args.rho()?,
            args.a()?.as_matrix(),
            args.b()?.as_matrix(),
            args.alpha()?,
        )?),
        "l-quantity" => Scalar(quantities::l_quantity(
            &args.x()?,
            &args.y()?,
            &args.observable()?,
            args.t()?,
        )?),
        other => return Err(Error::UnknownQuantity(other.to_string())),
    })
}

fn cmd_eval(quantity: &str, args: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    match eval_quantity(quantity, args)? {
        EvalOutput::Scalar(v) => writeln!(out, "{v:.11e}")?,
        EvalOutput::Complex(z) => writeln!(out, "{:.11e} {:+.11e}i", z.re, z.im)?,
        EvalOutput::Matrix(m) => {
            let file = MatrixFile::from_herm(quantity, &m, None);
            writeln!(out, "{}", serde_json::to_string_pretty(&file)?)?;
        }
    }
    Ok(0)
}

/// Machine-format record: exactly these six fields, one JSON object per line.
#[derive(Serialize)]
struct MachineRecord<'a> {
    id: &'a str,
    case: &'a str,
    lhs: f64,
    rhs: f64,
    gap: f64,
    holds: bool,
}

fn write_report(r: &GapReport, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{} {} {:.11e} {}", r.id, r.case, r.gap, r.holds)?,
        Format::Machine => {
            let record = MachineRecord {
                id: r.id.name(),
                case: &r.case,
                lhs: r.lhs,
                rhs: r.rhs,
                gap: r.gap,
                holds: r.holds,
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
    }
    Ok(())
}

fn cmd_check(config: &SuiteConfig, format: Format, out: &mut dyn Write) -> Result<i32> {
    let suite = run_suite(config)?;
    for r in &suite.reports {
        write_report(r, format, out)?;
    }
    let violations = suite.unexpected().len();
    if format == Format::Text {
        writeln!(
            out,
            "summary: {} reports, {} unexpected violations",
            suite.reports.len(),
            violations
        )?;
    }
    Ok(if violations == 0 { 0 } else { 1 })
}

/// File slots of the best inputs, named for replay through `eval`.
fn input_files(inputs: &GapInputs, note: &str) -> Vec<(&'static str, MatrixFile)> {
    let file =
        |slot: &'static str, m: &HermMatrix| (slot, MatrixFile::from_herm(slot, m, Some(note)));
    match inputs {
        GapInputs::Pair { x, y, .. } => vec![file("x", x), file("y", y)],
        GapInputs::State { rho, a, b, .. } => {
            vec![file("rho", rho.matrix()), file("a", a), file("b", b)]
        }
        GapInputs::FnPair { rho, a, b, .. } => {
            vec![file("rho", rho.matrix()), file("a", a), file("b", b)]
        }
        GapInputs::VariationalI { a, y, .. } => vec![file("a", a), file("y", y)],
        GapInputs::VariationalIi { x, b, .. } => vec![file("x", x), file("b", b)],
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    id: InequalityId,
    dim: usize,
    budget: u64,
    seed: u64,
    scale: f64,
    grid: &ParamGrid,
    out_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let spec = SampleSpec {
        dim,
        kind: default_kind(id),
        scale,
        seed,
    };
    let record = minimize_gap(id, &spec, budget, grid)?;
    writeln!(out, "id: {}", record.id)?;
    writeln!(out, "evaluations: {}", record.evaluations)?;
    writeln!(out, "best_gap: {:.11e}", record.best_gap)?;
    if !record.best_case.is_empty() {
        writeln!(out, "best_case: {}", record.best_case)?;
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        let record_path = dir.join("record.json");
        std::fs::write(&record_path, serde_json::to_string_pretty(&record)? + "\n")?;
        writeln!(out, "wrote {}", record_path.display())?;
        let note = format!("best inputs for {} (seed {seed})", record.id);
        for (slot, file) in input_files(&record.best_inputs, &note) {
            let path = dir.join(format!("{slot}.json"));
            file.save(&path)?;
            writeln!(out, "wrote {}", path.display())?;
        }
    } else {
        writeln!(out, "record: {}", serde_json::to_string(&record)?)?;
    }
    Ok(0)
}

fn cmd_reproduce(case: &str, out: &mut dyn Write) -> Result<i32> {
    let rows = cases::reproduce(case)?;
    writeln!(
        out,
        "{:<22} {:<28} {:<24} {:<12} status",
        "case", "target", "computed", "difference"
    )?;
    let mut all_pass = true;
    for row in &rows {
        let difference = row
            .difference
            .map_or_else(|| "-".to_string(), |d| format!("{d:.3e}"));
        writeln!(
            out,
            "{:<22} {:<28} {:<24.16e} {:<12} {}",
            row.case,
            row.target,
            row.observed,
            difference,
            if row.pass { "pass" } else { "FAIL" }
        )?;
        all_pass &= row.pass;
    }
    Ok(if all_pass { 0 } else { 1 })
}
