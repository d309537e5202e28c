use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use log::{info, warn};
use rayon::prelude::*;

use wahlrank_core::linalg::{is_prime, DEFAULT_PRIMES};
use wahlrank_core::{gamma_rank_with, Arithmetic, CurveFile, GaussReport, GaussianMaps, PlaneCurve};

use crate::args::{Mode, PlaneArgs, MIN_PRIME};
use crate::output::InputError;

fn load_curve(spec: &str) -> Result<PlaneCurve> {
    if let Some(d) = spec.strip_prefix("fermat:") {
        let d: u32 = d.parse().map_err(|e| InputError(format!("bad Fermat degree {d:?}: {e}")))?;
        return PlaneCurve::fermat(d).map_err(|e| InputError(format!("fermat:{d}: {e}")).into());
    }
    let text = fs::read_to_string(Path::new(spec)).map_err(|e| InputError(format!("{spec}: {e}")))?;
    let file: CurveFile = serde_json::from_str(&text).map_err(|e| InputError(format!("{spec}: {e}")))?;
    PlaneCurve::from_file(&file).map_err(|e| InputError(format!("{spec}: {e}")).into())
}

fn arithmetic(args: &PlaneArgs) -> Result<Arithmetic> {
    for &p in &args.primes {
        if p <= MIN_PRIME || !is_prime(p) {
            bail!(InputError(format!("{p} is not a prime above {MIN_PRIME}")));
        }
    }
    let primes = if args.primes.is_empty() {
        DEFAULT_PRIMES.to_vec()
    } else {
        args.primes.clone()
    };
    Ok(match args.mode {
        Mode::Exact => {
            if !args.primes.is_empty() {
                warn!("--primes ignored in exact mode");
            }
            Arithmetic::Exact
        }
        Mode::Modular => Arithmetic::Modular(primes),
        Mode::ModularThenExact => Arithmetic::ModularThenExact(primes),
    })
}

/// Reports for every requested curve and order, sorted by `(d, k)`.
pub fn run(args: &PlaneArgs) -> Result<Vec<GaussReport>> {
    let arithmetic = arithmetic(args)?;
    let mut curves = Vec::new();
    for spec in &args.curves {
        curves.push(load_curve(spec)?);
    }
    if let Some(span) = &args.d {
        for d in span.0.clone() {
            curves.push(load_curve(&format!("fermat:{d}"))?);
        }
    }
    if curves.is_empty() {
        bail!(InputError("no curves given (use --curve or --d)".into()));
    }
    let ks: Vec<u32> = args.k.0.clone().collect();
    let batches: Vec<Vec<GaussReport>> = curves
        .par_iter()
        .map(|curve| {
            let mut maps = GaussianMaps::new(curve);
            ks.iter()
                .map(|&k| {
                    let report = gamma_rank_with(&mut maps, k, &arithmetic)
                        .with_context(|| format!("d={}, k={k}", curve.degree()))?;
                    info!("d={} k={} rank={}", report.d, report.k, report.rank);
                    Ok(report)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut reports: Vec<GaussReport> = batches.into_iter().flatten().collect();
    reports.sort_by_key(|r| (r.d, r.k));
    Ok(reports)
}

/// Every report inside the proven range agrees with the prediction.
pub fn all_match(reports: &[GaussReport]) -> bool {
    reports.iter().all(|r| !r.in_theorem_range || r.matches)
}
