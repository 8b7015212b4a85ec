//! Command-line surface: relations, classification, moduli scans, axis data,
//! locus maps, and the discreteness certificate.
//!
//! Exit codes: 0 success (and certificate PASS), 1 certificate INDETERMINATE
//! or failed relation check, 2 certificate FAIL, 64 usage errors, 70 numeric
//! failures. Scans parallelize over grid rows but buffer and emit output in
//! row-major order, so identical configurations produce byte-identical output
//! regardless of thread count.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::certificate::{
    a0_axis, certify, two_eigenvalue_residual, tstar, AxisCase, CertificateError, Verdict,
    DEFAULT_MARGIN, DEFAULT_SAMPLES, LOCUS_BAND,
};
use crate::isometry::{classify, trace_data, Classification, UNITARITY_TOL};
use crate::linalg::HermitianForm;
use crate::moduli::{build_generators, evaluate_word, verify_relations, Family, ModuliPoint, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INDETERMINATE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NUMERIC: i32 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "pu31",
    about = "Modular-group representations into PU(3,1): relations, classification, \
             moduli scans, and discreteness certificates",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "012")]
    Std012,
    #[value(name = "122")]
    Std122,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Std012 => Family::Std012,
            FamilyArg::Std122 => Family::Std122,
        }
    }
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Moduli family (012 or 122).
    #[arg(long, default_value = "012")]
    pub family: FamilyArg,
    /// First moduli parameter, in radians unless --degrees is set.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Second moduli parameter, in radians unless --degrees is set.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: f64,
    /// Interpret --alpha/--beta in degrees.
    #[arg(long)]
    pub degrees: bool,
}

impl PointArgs {
    fn point(&self) -> Result<ModuliPoint, String> {
        let scale = if self.degrees {
            std::f64::consts::PI / 180.0
        } else {
            1.0
        };
        ModuliPoint::new(self.family.into(), self.alpha * scale, self.beta * scale)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the defining relations of the generator matrices at one point.
    VerifyRelations {
        #[command(flatten)]
        point: PointArgs,
        /// Largest admissible residual.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Output path (defaults to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the image of a word at one moduli point.
    Classify {
        #[command(flatten)]
        point: PointArgs,
        /// Word as run-length pairs "m1,n1;m2,n2;…".
        #[arg(long, default_value = "1,1")]
        word: String,
        /// Admissible unitarity defect of the evaluated matrix.
        #[arg(long, default_value_t = UNITARITY_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a word's trace data over a grid on the moduli square; CSV output.
    Scan {
        /// Moduli family (012 or 122).
        #[arg(long, default_value = "012")]
        family: FamilyArg,
        /// Word as run-length pairs "m1,n1;m2,n2;…".
        #[arg(long, default_value = "1,1")]
        word: String,
        /// Grid points per axis (inclusive endpoints).
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Admissible unitarity defect during classification.
        #[arg(long, default_value_t = UNITARITY_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Axis data of the parabolic generator at one 012-family point.
    Axis {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the sampled discreteness certificate at one 012-family point.
    Certify {
        #[command(flatten)]
        point: PointArgs,
        /// Samples per parameter axis (endpoints plus Chebyshev interior).
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Margin demanded beyond each strict inequality.
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV map of the two-eigenvalue locus residual over the moduli square.
    Locus {
        /// Grid points per axis (inclusive endpoints).
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parse argv and dispatch; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are successful output, not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("numeric failure: {msg}");
            EXIT_NUMERIC
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            EXIT_NUMERIC
        }
    }
}

enum Failure {
    Usage(String),
    Numeric(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// 17 significant digits, enough to round-trip any f64.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::VerifyRelations { point, tol, out } => {
            if tol <= 0.0 {
                return Err(Failure::Usage("tol must be positive".into()));
            }
            let point = point.point().map_err(Failure::Usage)?;
            let gen = build_generators(&point).map_err(|e| Failure::Numeric(e.to_string()))?;
            let report = verify_relations(&gen, tol);
            let mut w = open_sink(&out)?;
            writeln!(
                w,
                "family={} alpha={} beta={}",
                point.family, point.alpha, point.beta
            )?;
            for (name, residual) in &report.residuals {
                writeln!(w, "{name} {}", fmt17(*residual))?;
            }
            if let Some(note) = report.note {
                writeln!(w, "note: {note}")?;
            }
            writeln!(w, "max_residual {}", fmt17(report.max_residual()))?;
            writeln!(w, "verdict {}", if report.pass { "PASS" } else { "FAIL" })?;
            w.flush()?;
            Ok(if report.pass { EXIT_OK } else { EXIT_INDETERMINATE })
        }
        Command::Classify {
            point,
            word,
            tol,
            out,
        } => {
            if tol <= 0.0 {
                return Err(Failure::Usage("tol must be positive".into()));
            }
            let point = point.point().map_err(Failure::Usage)?;
            let word = Word::parse(&word).map_err(|e| Failure::Usage(e.to_string()))?;
            let gen = build_generators(&point).map_err(|e| Failure::Numeric(e.to_string()))?;
            let matrix = evaluate_word(&gen, &word);
            let class = classify(&matrix, HermitianForm::Siegel, tol)
                .map_err(|e| Failure::Numeric(e.to_string()))?;
            let mut w = open_sink(&out)?;
            writeln!(w, "{}", class.label())?;
            if let Classification::RegularElliptic { angles } = &class {
                writeln!(
                    w,
                    "angles {} {} {}",
                    fmt17(angles.0),
                    fmt17(angles.1),
                    fmt17(angles.2)
                )?;
            }
            let td = trace_data(&matrix).map_err(|e| Failure::Numeric(e.to_string()))?;
            writeln!(
                w,
                "trace {} {} sigma {} holy {}",
                fmt17(td.tau.re),
                fmt17(td.tau.im),
                fmt17(td.sigma),
                fmt17(td.holy)
            )?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            family,
            word,
            grid,
            tol,
            out,
        } => {
            if grid < 2 {
                return Err(Failure::Usage("grid must be at least 2".into()));
            }
            if tol <= 0.0 {
                return Err(Failure::Usage("tol must be positive".into()));
            }
            let word = Word::parse(&word).map_err(|e| Failure::Usage(e.to_string()))?;
            let family: Family = family.into();
            let step = std::f64::consts::FRAC_PI_2 / (grid - 1) as f64;
            let rows: Vec<String> = (0..grid)
                .into_par_iter()
                .map(|i| {
                    let alpha = step * i as f64;
                    let mut row = String::new();
                    for j in 0..grid {
                        let beta = step * j as f64;
                        row.push_str(&scan_cell(family, alpha, beta, &word, tol));
                        row.push('\n');
                    }
                    row
                })
                .collect();
            let mut w = open_sink(&out)?;
            writeln!(w, "alpha,beta,trace_re,trace_im,sigma,holy,class")?;
            for row in rows {
                w.write_all(row.as_bytes())?;
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Command::Axis { point, out } => {
            let point = point.point().map_err(Failure::Usage)?;
            let mut w = open_sink(&out)?;
            writeln!(
                w,
                "family={} alpha={} beta={}",
                point.family, point.alpha, point.beta
            )?;
            match a0_axis(&point) {
                Ok(axis) => {
                    writeln!(w, "locus_residual={}", fmt17(axis.locus_residual))?;
                    match axis.case {
                        AxisCase::InvariantLine { y1, x2 } => {
                            writeln!(w, "case=invariant-line")?;
                            writeln!(w, "y1={}", fmt17(y1))?;
                            writeln!(w, "x2={}", fmt17(x2))?;
                            let ts = tstar(&point).map_err(|e| Failure::Numeric(e.to_string()))?;
                            writeln!(w, "tstar={}", fmt17(ts))?;
                        }
                        AxisCase::InvariantPlane { polar } => {
                            writeln!(w, "case=invariant-plane")?;
                            for (i, z) in polar.iter().enumerate() {
                                writeln!(w, "polar{i}={},{}", fmt17(z.re), fmt17(z.im))?;
                            }
                        }
                        AxisCase::NotParabolic => {
                            writeln!(w, "case=not-parabolic")?;
                        }
                    }
                    w.flush()?;
                    Ok(EXIT_OK)
                }
                Err(CertificateError::NotParabolic) => {
                    writeln!(w, "case=not-parabolic")?;
                    w.flush()?;
                    Ok(EXIT_OK)
                }
                Err(e) => Err(Failure::Numeric(e.to_string())),
            }
        }
        Command::Certify {
            point,
            samples,
            margin,
            out,
        } => {
            if samples < 9 {
                return Err(Failure::Usage("samples must be at least 9".into()));
            }
            if margin <= 0.0 {
                return Err(Failure::Usage("margin must be positive".into()));
            }
            let point = point.point().map_err(Failure::Usage)?;
            if point.family != Family::Std012 {
                return Err(Failure::Usage(
                    "the certificate covers family 012 only".into(),
                ));
            }
            let report = certify(&point, samples, margin);
            let mut w = open_sink(&out)?;
            writeln!(w, "family={}", report.point.family)?;
            writeln!(w, "alpha={}", report.point.alpha)?;
            writeln!(w, "beta={}", report.point.beta)?;
            writeln!(w, "samples={}", report.samples_per_axis)?;
            writeln!(w, "margin={}", report.margin)?;
            writeln!(w, "locus_band={LOCUS_BAND}")?;
            writeln!(w, "locus_residual={}", fmt17(report.locus_residual))?;
            if let Some((y1, x2)) = report.axis {
                writeln!(w, "y1={}", fmt17(y1))?;
                writeln!(w, "x2={}", fmt17(x2))?;
            }
            if let Some(a) = report.pairing_a {
                writeln!(w, "a={}", fmt17(a))?;
            }
            if let Some(ts) = report.tstar {
                writeln!(w, "tstar={}", fmt17(ts))?;
            }
            for check in &report.checks {
                let name = check.name;
                match check.min_margin {
                    Some(m) => writeln!(w, "check.{name}.min_margin={}", fmt17(m))?,
                    None => writeln!(w, "check.{name}.min_margin=skipped")?,
                }
                if let Some((l, mu)) = check.arg_min {
                    writeln!(w, "check.{name}.arg_min={l},{mu}")?;
                }
                writeln!(w, "check.{name}.samples={}", check.samples)?;
                if let Some(dev) = check.closed_form_dev {
                    writeln!(w, "check.{name}.closed_form_dev={}", fmt17(dev))?;
                }
            }
            for note in &report.notes {
                writeln!(w, "note: {note}")?;
            }
            writeln!(w, "verdict={}", report.verdict.label())?;
            w.flush()?;
            Ok(match report.verdict {
                Verdict::Pass => EXIT_OK,
                Verdict::Indeterminate => EXIT_INDETERMINATE,
                Verdict::Fail => EXIT_FAIL,
            })
        }
        Command::Locus { grid, out } => {
            if grid < 2 {
                return Err(Failure::Usage("grid must be at least 2".into()));
            }
            let step = std::f64::consts::FRAC_PI_2 / (grid - 1) as f64;
            let mut w = open_sink(&out)?;
            writeln!(w, "alpha,beta,residual")?;
            for i in 0..grid {
                let alpha = step * i as f64;
                for j in 0..grid {
                    let beta = step * j as f64;
                    let r = two_eigenvalue_residual(alpha, beta);
                    writeln!(w, "{},{},{}", fmt17(alpha), fmt17(beta), fmt17(r))?;
                }
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
    }
}

/// One CSV cell of the scan; classification failures become the literal
/// "indeterminate" so the table never carries NaN.
fn scan_cell(family: Family, alpha: f64, beta: f64, word: &Word, tol: f64) -> String {
    let cell_err = || format!("{},{},,,,,indeterminate", fmt17(alpha), fmt17(beta));
    let Ok(point) = ModuliPoint::new(family, alpha, beta) else {
        return cell_err();
    };
    let Ok(gen) = build_generators(&point) else {
        return cell_err();
    };
    let matrix = evaluate_word(&gen, word);
    let Ok(td) = trace_data(&matrix) else {
        return cell_err();
    };
    let label = classify(&matrix, HermitianForm::Siegel, tol)
        .map(|c| c.label())
        .unwrap_or_else(|_| "indeterminate".to_string());
    format!(
        "{},{},{},{},{},{},{label}",
        fmt17(alpha),
        fmt17(beta),
        fmt17(td.tau.re),
        fmt17(td.tau.im),
        fmt17(td.sigma),
        fmt17(td.holy)
    )
}
