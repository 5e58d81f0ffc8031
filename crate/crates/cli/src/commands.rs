use std::fmt;
use std::io::{self, Write};

use qdent_core::analysis::{
    find_max, fit_inverse_linear, period, sweep_over_m, sweep_over_n, ExcitationSpec,
    MaxEntanglementRecord, SearchOptions,
};
use qdent_core::oracle::DEFAULT_MAX_DOTS;
use qdent_core::verify::{cross_check, CrossCheckOptions};
use qdent_core::{AmplitudeTable, Error, Execution, ModelConfig};

use crate::args::{FitArgs, MaxentArgs, SearchArgs, SweepArgs, TraceArgs, VerifyArgs};
use crate::output::{open_sink, sci, write_csv, RunManifest};

#[derive(Debug)]
pub enum CliError {
    Verification(usize),
    Usage(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification(n) => write!(f, "verification failed: {n} mismatching samples"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<(), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            grid_points: self.grid,
            refine_tol: self.tol,
        }
    }
}

pub fn trace(args: TraceArgs) -> CliResult {
    let config = ModelConfig::new(args.dots, args.excited)?;
    if args.steps < 2 {
        return Err(usage("--steps must be at least 2"));
    }
    let kt_max = match (args.kt_max, args.periods) {
        (Some(kt), _) => kt,
        (None, Some(p)) => p * period(config)?,
        (None, None) => unreachable!("clap requires one of --kt-max and --periods"),
    };
    if !(kt_max.is_finite() && kt_max >= 0.0) {
        return Err(usage(format!("time span must be finite and nonnegative, got {kt_max}")));
    }
    let trace = AmplitudeTable::new(config).trace(kt_max, args.steps)?;

    let mut manifest = RunManifest::new("trace")
        .param("dots", args.dots)
        .param("excited", args.excited)
        .param("kt_max", sci(kt_max))
        .param("steps", args.steps);
    if let Some(p) = args.periods {
        manifest = manifest.param("periods", p);
    }
    let mut header = vec!["kt".to_string(), "E".to_string()];
    header.extend((0..config.schmidt_rank()).map(|m| format!("P_{m}")));
    let rows = trace
        .times
        .iter()
        .zip(&trace.entropies)
        .zip(&trace.spectra)
        .map(|((&t, &e), s)| {
            let mut row = vec![sci(t), sci(e)];
            row.extend(s.weights.iter().map(|&p| sci(p)));
            row
        });
    write_csv(open_sink(&args.out)?, &manifest, &header, rows)?;
    Ok(())
}

pub fn maxent(args: MaxentArgs) -> CliResult {
    let config = ModelConfig::new(args.dots, args.excited)?;
    let record = find_max(config, args.search.options())?;
    let json = serde_json::to_string(&record).map_err(io::Error::other)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{json}")?;
    Ok(())
}

fn record_row(r: &MaxEntanglementRecord) -> Vec<String> {
    vec![
        r.config.dots().to_string(),
        r.config.excitations().to_string(),
        sci(r.kt_star),
        sci(r.max_entropy),
        sci(r.relative_max),
        sci(r.mes_entropy),
    ]
}

pub fn sweep(args: SweepArgs) -> CliResult {
    let options = args.search.options();
    let exec = execution(args.sequential);
    let mut manifest = RunManifest::new("sweep")
        .param("dots", args.dots)
        .param("grid", args.search.grid)
        .param("tol", sci(args.search.tol));

    let records = if args.over_m {
        let dots = args
            .dots
            .single()
            .ok_or_else(|| usage("--over-M takes a single --dots value"))?;
        manifest = manifest.param("mode", "over-M");
        sweep_over_m(dots, options, exec)?
    } else {
        let spec: ExcitationSpec = args
            .excited
            .ok_or_else(|| usage("--over-N needs --excited (a count or `half`)"))?;
        manifest = manifest.param("mode", "over-N").param("excited", spec);
        sweep_over_n(spec, &args.dots.values(), options, exec)?
    };

    let header: Vec<String> = ["N", "M", "kt_star", "E_max", "e_max", "E_MES"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    write_csv(open_sink(&args.out)?, &manifest, &header, records.iter().map(record_row))?;
    Ok(())
}

pub fn fit(args: FitArgs) -> CliResult {
    let dots = args.dots.values();
    let fit = fit_inverse_linear(
        args.excited,
        &dots,
        args.search.options(),
        execution(args.sequential),
    )?;
    let json = serde_json::to_string(&fit).map_err(io::Error::other)?;
    writeln!(io::stdout().lock(), "{json}")?;

    if let Some(path) = &args.out {
        let manifest = RunManifest::new("fit")
            .param("excited", args.excited)
            .param("dots", args.dots)
            .param("grid", args.search.grid)
            .param("tol", sci(args.search.tol));
        let header = vec!["N".to_string(), "inverse_E_max".to_string()];
        let rows = fit
            .domain
            .iter()
            .zip(&fit.inverse_max)
            .map(|(n, y)| vec![n.to_string(), sci(*y)]);
        write_csv(open_sink(path)?, &manifest, &header, rows)?;
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> CliResult {
    if args.max_dots > DEFAULT_MAX_DOTS {
        return Err(usage(format!(
            "--max-dots {} exceeds the oracle budget of {DEFAULT_MAX_DOTS}",
            args.max_dots
        )));
    }
    if args.samples == 0 || args.tol.is_nan() || args.tol <= 0.0 {
        return Err(usage("--samples and --tol must be positive"));
    }
    let options = CrossCheckOptions {
        min_dots: 2,
        max_dots: args.max_dots,
        samples_per_period: args.samples,
        tolerance: args.tol,
        oracle_max_dots: DEFAULT_MAX_DOTS,
        corrupt_table: args.corrupt_table,
    };
    let report = cross_check(options, execution(args.sequential))?;
    eprintln!(
        "verify: {} comparisons, max difference {:.3e}, {} failures",
        report.comparisons,
        report.max_difference,
        report.failures.len()
    );
    if report.passed() {
        return Ok(());
    }

    let manifest = RunManifest::new("verify")
        .param("max_dots", args.max_dots)
        .param("samples", args.samples)
        .param("tol", sci(args.tol));
    let header: Vec<String> = ["N", "M", "kt", "closed_form", "oracle", "difference"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows = report.failures.iter().map(|f| {
        vec![
            f.dots.to_string(),
            f.excitations.to_string(),
            sci(f.kt),
            sci(f.closed_form),
            sci(f.oracle),
            sci(f.difference),
        ]
    });
    write_csv(open_sink(&args.out)?, &manifest, &header, rows)?;
    Err(CliError::Verification(report.failures.len()))
}
