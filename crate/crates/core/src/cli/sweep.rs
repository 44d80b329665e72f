use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{build_model, csv_error, into_string, kind_label, parse_m, pt_label, solve_report, ModelArgs, ModelKind};
use crate::error::Error;

/// Columns after the model parameters.
pub const SWEEP_HEADER: [&str; 13] = [
    "case", "n_bound", "family", "n", "b1_re", "b1_im", "b1p_re", "b1p_im", "kind", "re_E", "im_E", "pt_class", "error",
];

/// Parse `from:to:steps` (inclusive, evenly spaced) or a single number.
pub fn parse_range(text: &str) -> Result<Vec<f64>, Error> {
    let bad = || Error::InvalidParameter(format!("expected a number or from:to:steps, got '{text}'"));
    let number = |s: &str| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    let parts: Vec<&str> = text.split(':').collect();
    match parts[..] {
        [single] => Ok(vec![number(single)?]),
        [from, to, steps] => {
            let (from, to) = (number(from)?, number(to)?);
            let steps: usize = steps.trim().parse().map_err(|_| bad())?;
            match steps {
                0 => Err(bad()),
                1 => Ok(vec![from]),
                _ => Ok((0..steps)
                    .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
                    .collect()),
            }
        }
        _ => Err(bad()),
    }
}

/// One output line: a level, or a parameter point with no levels or an error.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub params: BTreeMap<String, f64>,
    pub case: Option<u8>,
    pub n_bound: Option<f64>,
    pub level: Option<super::FamilyReport>,
    pub error: Option<String>,
}

fn evaluate(kind: ModelKind, params: BTreeMap<String, f64>, n_max: usize) -> Vec<SweepRow> {
    let failed = |params: BTreeMap<String, f64>, e: Error| {
        vec![SweepRow {
            params,
            case: None,
            n_bound: None,
            level: None,
            error: Some(e.to_string()),
        }]
    };
    let report = match build_model(kind, &params).and_then(|m| solve_report(&m, n_max)) {
        Ok(r) => r,
        Err(e) => return failed(params, e),
    };
    if report.families.is_empty() {
        return vec![SweepRow {
            params,
            case: report.case,
            n_bound: report.n_bound,
            level: None,
            error: None,
        }];
    }
    let error = (!report.checks_passed).then(|| "residual or contour check failed".to_string());
    report
        .families
        .into_iter()
        .map(|f| SweepRow {
            params: params.clone(),
            case: report.case,
            n_bound: report.n_bound,
            level: Some(f),
            error: error.clone(),
        })
        .collect()
}

/// Evaluate every parameter combination in parallel. Rows come back in
/// parameter order (first parameter outermost), whatever the completion order.
pub fn run_sweep(args: &ModelArgs) -> Result<Vec<SweepRow>, Error> {
    let axes: Vec<(&str, Vec<f64>)> = args
        .raw_params()?
        .into_iter()
        .map(|(flag, text)| {
            let values = parse_range(text).map_err(|e| Error::InvalidParameter(format!("--{flag}: {e}")))?;
            if flag == "M" {
                values.iter().try_for_each(|&v| parse_m(v).map(|_| ()))?;
            }
            Ok((flag, values))
        })
        .collect::<Result<_, Error>>()?;
    let mut points: Vec<BTreeMap<String, f64>> = vec![BTreeMap::new()];
    for (flag, values) in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.insert(flag.to_string(), v);
                    q
                })
            })
            .collect();
    }
    let kind = args.model;
    let n_max = args.nmax;
    let rows: Vec<Vec<SweepRow>> = points.into_par_iter().map(|p| evaluate(kind, p, n_max)).collect();
    Ok(rows.into_iter().flatten().collect())
}

fn parameter_names(kind: ModelKind) -> [&'static str; 2] {
    match kind {
        ModelKind::KhareMandal => ["zeta", "M"],
        ModelKind::Scarf2 => ["A", "B"],
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

pub fn sweep_csv(kind: ModelKind, rows: &[SweepRow]) -> Result<String, Error> {
    let names = parameter_names(kind);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(names.iter().chain(SWEEP_HEADER.iter())).map_err(csv_error)?;
    for row in rows {
        let mut record: Vec<String> = names.iter().map(|n| opt(row.params.get(*n))).collect();
        record.push(opt(row.case));
        record.push(opt(row.n_bound));
        match &row.level {
            Some(f) => record.extend([
                f.family.to_string(),
                f.n.to_string(),
                f.b1.re.to_string(),
                f.b1.im.to_string(),
                f.b1p.re.to_string(),
                f.b1p.im.to_string(),
                kind_label(f.kind).to_string(),
                f.energy.re.to_string(),
                f.energy.im.to_string(),
                pt_label(f.pt_class),
            ]),
            None => record.extend(std::iter::repeat_n(String::new(), 10)),
        }
        record.push(row.error.clone().unwrap_or_default());
        w.write_record(&record).map_err(csv_error)?;
    }
    into_string(w)
}
