//! Command-line front end: `solve`, `verify` and `sweep`.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 computation failure, 2 invalid input, 3 failed residual check,
//! 4 oracle mismatch.

mod report;
mod sweep;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{Checks, ComplexValue, FamilyReport, OracleSummary, SolveReport};
pub use sweep::{parse_range, run_sweep, sweep_csv, SweepRow, SWEEP_HEADER};

use crate::engine::quantization_check;
use crate::error::Error;
use crate::models::{qes_condition, KhareMandalParams, Model, ModelSpectrum, ScarfParams, DEFAULT_N_MAX};
use crate::oracle::{discretize, match_spectra, residual_check, Grid, DEFAULT_HALF_WIDTH, DEFAULT_MATCH_TOLERANCE, DEFAULT_POINTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESIDUAL: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;

/// Radius floor for the argument-principle contour.
const CONTOUR_RADIUS: f64 = 4.0;

pub const NON_NORMALIZABLE_NOTE: &str = "spectrum matching skipped: non-normalizable";

#[derive(Debug, Parser)]
#[command(name = "qhj", version, about = "Quantum Hamilton-Jacobi spectra of PT-symmetric potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a model and check each eigenpair.
    Solve {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Solve, then compare with a finite-difference spectrum.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "grid-n", default_value_t = DEFAULT_POINTS)]
        grid_n: usize,
        #[arg(long = "half-width", default_value_t = DEFAULT_HALF_WIDTH, allow_hyphen_values = true)]
        half_width: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Solve over a parameter grid; any parameter may be `from:to:steps`.
    Sweep {
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    KhareMandal,
    Scarf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Parameters are kept as text so that `sweep` can accept ranges.
#[derive(Clone, Debug, Args)]
pub struct ModelArgs {
    #[arg(value_enum)]
    pub model: ModelKind,
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<String>,
    #[arg(long = "M", allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub nmax: usize,
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, Error> {
    value
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter(format!("missing --{flag}")))
}

fn parse_f64(text: &str, flag: &str) -> Result<f64, Error> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::InvalidParameter(format!("--{flag}: expected a finite number, got '{text}'")))
}

pub(crate) fn parse_m(value: f64) -> Result<u32, Error> {
    if value.fract() != 0.0 || value < 1.0 || value > u32::MAX as f64 {
        return Err(Error::InvalidParameter(format!("--M must be a positive integer, got {value}")));
    }
    Ok(value as u32)
}

pub(crate) fn build_model(kind: ModelKind, params: &BTreeMap<String, f64>) -> Result<Model, Error> {
    Ok(match kind {
        ModelKind::KhareMandal => Model::KhareMandal(KhareMandalParams::new(params["zeta"], parse_m(params["M"])?)?),
        ModelKind::Scarf2 => Model::Scarf2(ScarfParams::new(params["A"], params["B"])?),
    })
}

impl ModelArgs {
    /// `(flag, raw value)` for each parameter of the chosen model.
    pub(crate) fn raw_params(&self) -> Result<Vec<(&'static str, &str)>, Error> {
        let km = [("zeta", &self.zeta), ("M", &self.m)];
        let scarf = [("A", &self.a), ("B", &self.b)];
        let (wanted, unwanted) = match self.model {
            ModelKind::KhareMandal => (km, scarf),
            ModelKind::Scarf2 => (scarf, km),
        };
        if let Some((flag, _)) = unwanted.iter().find(|(_, v)| v.is_some()) {
            return Err(Error::InvalidParameter(format!("--{flag} does not apply to this model")));
        }
        wanted.iter().map(|(flag, v)| Ok((*flag, required(v, flag)?))).collect()
    }

    /// Single-point parameters.
    pub fn params(&self) -> Result<BTreeMap<String, f64>, Error> {
        self.raw_params()?
            .into_iter()
            .map(|(flag, text)| Ok((flag.to_string(), parse_f64(text, flag)?)))
            .collect()
    }

    pub fn to_model(&self) -> Result<Model, Error> {
        build_model(self.model, &self.params()?)
    }
}

pub fn model_params(model: &Model) -> BTreeMap<String, f64> {
    match model {
        Model::KhareMandal(p) => BTreeMap::from([("zeta".into(), p.zeta), ("M".into(), p.m as f64)]),
        Model::Scarf2(p) => BTreeMap::from([("A".into(), p.a), ("B".into(), p.b)]),
    }
}

/// Solve a model and run the residual and contour checks on every level.
pub fn solve_report(model: &Model, n_max: usize) -> crate::Result<SolveReport> {
    let spectrum = model.solve(n_max)?;
    report_from_spectrum(model, &spectrum)
}

fn report_from_spectrum(model: &Model, spectrum: &ModelSpectrum) -> crate::Result<SolveReport> {
    let potential = |x: f64| model.potential(x);
    let mut families: Vec<FamilyReport> = Vec::new();
    let mut family_ids: Vec<(Vec<num_complex::Complex64>, usize)> = Vec::new();
    let mut passed = true;
    for (solution, label) in spectrum.solutions.iter().zip(&spectrum.pt.labels) {
        let family = solution.family();
        let key = (family.residues.clone(), family.n);
        let id = match family_ids.iter().position(|k| k.0 == key.0 && k.1 == key.1) {
            Some(i) => i,
            None => {
                family_ids.push(key);
                family_ids.len() - 1
            }
        };
        let samples = solution.wavefunction.default_samples()?;
        let residual = residual_check(&solution.wavefunction, solution.energy(), &potential, &samples)?;
        let polynomial = &solution.eigenpair.moving_polynomial;
        let quantization = quantization_check(polynomial, spectrum.problem.fixed_poles(), CONTOUR_RADIUS).ok();
        passed &= residual.passes() && quantization == Some(family.n);
        let [b1, b1p] = family.residues[..] else {
            return Err(Error::UnsupportedStructure("expected two fixed poles".into()));
        };
        families.push(FamilyReport {
            family: id,
            b1: b1.into(),
            b1p: b1p.into(),
            n: family.n,
            kind: family.kind,
            energy: solution.energy().into(),
            polynomial_coeffs: polynomial.coeffs().iter().map(|&c| c.into()).collect(),
            pt_class: *label,
            qes_condition: matches!(model, Model::KhareMandal(_)).then(|| qes_condition(family)),
            checks: Checks {
                ode_residual: residual.max_relative,
                quantization_n: quantization,
                oracle_match_distance: None,
            },
        });
    }
    let mut notes = Vec::new();
    if spectrum.pt.anomaly {
        notes.push("complex energy without a conjugate partner".to_string());
    }
    let (case, n_bound) = match &spectrum.scarf_selection {
        Some(sel) => (Some(sel.case.number()), Some(sel.n_bound)),
        None => (None, None),
    };
    if let Some(sel) = &spectrum.scarf_selection {
        if sel.b1.is_empty() || sel.b1p.is_empty() || sel.n_bound <= 0.0 {
            notes.push("no decaying solutions: empty spectrum".to_string());
        }
    }
    Ok(SolveReport {
        model: model.name().to_string(),
        params: model_params(model),
        case,
        n_bound,
        pt_class: spectrum.pt.class,
        pt_anomaly: spectrum.pt.anomaly,
        families,
        oracle: None,
        notes,
        checks_passed: passed,
    })
}

/// `solve_report` plus the finite-difference comparison for Scarf-II.
/// Khare-Mandal eigenfunctions are not normalizable on the real line, so only
/// the residual checks run.
pub fn verify_report(model: &Model, n_max: usize, grid: Grid) -> crate::Result<SolveReport> {
    let mut report = solve_report(model, n_max)?;
    if let Model::KhareMandal(_) = model {
        report.notes.push(NON_NORMALIZABLE_NOTE.to_string());
        return Ok(report);
    }
    let oracle = discretize(|x| model.potential(x), grid)?;
    let matching = match_spectra(&report.energies(), &oracle.spectrum, DEFAULT_MATCH_TOLERANCE);
    for (family, entry) in report.families.iter_mut().zip(&matching.entries) {
        family.checks.oracle_match_distance = entry.distance;
    }
    for entry in matching.unmatched() {
        let found = entry.numeric.map_or("none".to_string(), |z| format!("{z}"));
        report
            .notes
            .push(format!("unmatched: E = {} nearest grid value {found}", entry.analytic));
    }
    report.oracle = Some(OracleSummary {
        grid_points: grid.points(),
        half_width: grid.half_width(),
        spacing: grid.spacing(),
        method: oracle.method,
        tolerance: matching.tolerance,
        matched: matching.matched,
        max_distance: matching.max_distance(),
    });
    Ok(report)
}

const CSV_HEADER: [&str; 13] = [
    "model", "family", "b1_re", "b1_im", "b1p_re", "b1p_im", "n", "kind", "re_E", "im_E", "pt_class", "ode_residual",
    "quantization_n",
];

/// One row per energy; model parameters lead as extra columns.
pub fn report_csv(report: &SolveReport) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = report.params.keys().cloned().collect();
    header.extend(CSV_HEADER.iter().map(|s| s.to_string()));
    w.write_record(&header).map_err(csv_error)?;
    for f in &report.families {
        let mut row: Vec<String> = report.params.values().map(|v| v.to_string()).collect();
        row.extend([
            report.model.clone(),
            f.family.to_string(),
            f.b1.re.to_string(),
            f.b1.im.to_string(),
            f.b1p.re.to_string(),
            f.b1p.im.to_string(),
            f.n.to_string(),
            kind_label(f.kind).to_string(),
            f.energy.re.to_string(),
            f.energy.im.to_string(),
            pt_label(f.pt_class),
            f.checks.ode_residual.to_string(),
            f.checks.quantization_n.map_or(String::new(), |q| q.to_string()),
        ]);
        w.write_record(&row).map_err(csv_error)?;
    }
    into_string(w)
}

pub(crate) fn csv_error(e: csv::Error) -> Error {
    Error::InvalidParameter(format!("csv: {e}"))
}

pub(crate) fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, Error> {
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidParameter(format!("csv: {e}")))
}

pub(crate) fn kind_label(kind: crate::engine::FamilyKind) -> &'static str {
    match kind {
        crate::engine::FamilyKind::Qes => "qes",
        crate::engine::FamilyKind::Es => "es",
    }
}

pub(crate) fn pt_label(label: crate::models::PtLabel) -> String {
    match label {
        crate::models::PtLabel::Real => "real".into(),
        crate::models::PtLabel::Paired(j) => format!("paired:{j}"),
        crate::models::PtLabel::Unpaired => "unpaired".into(),
    }
}

fn emit(report: &SolveReport, format: Format, out: &mut dyn Write) -> Result<(), Error> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(report).map_err(|e| Error::InvalidParameter(format!("json: {e}")))? + "\n",
        Format::Csv => report_csv(report)?,
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::InvalidParameter(format!("write: {e}")))
}

fn usage_error(e: Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn failure(e: Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_FAILURE
}

/// Run a parsed command, writing data to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Solve { model, format } => {
            let m = match model.to_model() {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            let report = match solve_report(&m, model.nmax) {
                Ok(r) => r,
                Err(e) => return failure(e),
            };
            if let Err(e) = emit(&report, *format, out) {
                return failure(e);
            }
            if report.checks_passed {
                EXIT_OK
            } else {
                eprintln!("residual or contour check failed");
                EXIT_RESIDUAL
            }
        }
        Command::Verify {
            model,
            grid_n,
            half_width,
            format,
        } => {
            let m = match model.to_model() {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            let grid = match Grid::new(*half_width, *grid_n) {
                Ok(g) => g,
                Err(e) => return usage_error(e),
            };
            let report = match verify_report(&m, model.nmax, grid) {
                Ok(r) => r,
                Err(e) => return failure(e),
            };
            if let Err(e) = emit(&report, *format, out) {
                return failure(e);
            }
            for note in &report.notes {
                eprintln!("{note}");
            }
            if report.oracle.as_ref().is_some_and(|o| !o.matched) {
                EXIT_ORACLE
            } else if !report.checks_passed {
                EXIT_RESIDUAL
            } else {
                EXIT_OK
            }
        }
        Command::Sweep { model } => {
            let rows = match run_sweep(model) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let text = match sweep_csv(model.model, &rows) {
                Ok(t) => t,
                Err(e) => return failure(e),
            };
            match out.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => failure(Error::InvalidParameter(format!("write: {e}"))),
            }
        }
    }
}
