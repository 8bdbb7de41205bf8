use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use fractal_fourier::formal::{
    convolve_formal, transform_delayed, verify_formal_identity, DelayedSpectrum, FormalExpr,
    FormalInputs, Support, FORMAL_TOLERANCE,
};
use fractal_fourier::numeric::{
    build_measure_matched_rule, Grid, QuadratureRule, SampledSignal, SupportHint,
};
use fractal_fourier::special::{gamma, MittagLeffler, MlMethod};
use fractal_fourier::transform::{
    convolve_numeric, forward_on, inverse, numeric_suite, series_coefficients, series_partial_sums,
    ConvolveOptions, NumericTolerance, SeriesOptions, Spectrum,
};
use fractal_fourier::{AlphaContext, Complex64, IdentityTag, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Cli, Command, CommonArgs, RuleMode, Suite, TableKind};
use crate::config::{fmt_num, parse_pair, RunConfig};
use crate::csvio::{read_columns, Cell, Table};
use crate::error::{CliError, CliResult};
use crate::family::{general_exprs, ml_mixtures, round_trip_discrepancy};
use crate::plot::{line_plot, Series};
use crate::report::{Check, Report};
use crate::spec::{Evaluator, SignalSpec, Source};

/// Everything a command produces; nothing is written until [`Output::write`].
#[derive(Debug, Clone, Default)]
pub struct Output {
    /// The main document, written to `--out` or stdout.
    pub main: String,
    /// Secondary files requested by flags.
    pub extra: Vec<(PathBuf, String)>,
    pub plot: Option<String>,
    pub warnings: Vec<String>,
    /// Set when an asserted verification check failed.
    pub failure: Option<String>,
}

impl Output {
    pub fn write(&self, common: &CommonArgs) -> CliResult<()> {
        crate::csvio::emit(common.out.as_deref(), &self.main)?;
        for (p, content) in &self.extra {
            crate::csvio::emit(Some(p), content)?;
        }
        if let (Some(p), Some(svg)) = (&common.plot, &self.plot) {
            crate::csvio::emit(Some(p), svg)?;
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let c = &cli.common;
    let mut out = match &cli.command {
        Command::Transform { signal } => transform(c, signal)?,
        Command::Inverse {
            spectrum,
            x_range,
            x_count,
        } => inverse_cmd(c, spectrum, x_range, *x_count)?,
        Command::Convolve {
            f1,
            f2,
            x_max,
            x_count,
        } => convolve(c, f1, f2, *x_max, *x_count)?,
        Command::Series {
            signal,
            half_period,
            terms,
            sums,
            x_count,
        } => series(c, signal, *half_period, *terms, sums.as_deref(), *x_count)?,
        Command::Verify {
            suite,
            count,
            round_trip,
        } => verify(c, *suite, *count, *round_trip)?,
        Command::Table {
            what,
            rule_size,
            interval,
            mode,
            z_max,
            count,
        } => table(c, *what, *rule_size, interval, *mode, *z_max, *count)?,
        Command::MlEval { z } => ml_eval(c, z)?,
    };
    if c.plot.is_some() && out.plot.is_none() {
        out.warnings
            .push("--plot is not supported by this subcommand; ignored".into());
    }
    Ok(out)
}

fn header(command: &str, cfg: &RunConfig) -> Vec<(String, String)> {
    let mut h = vec![("command".to_string(), command.to_string())];
    h.extend(cfg.echo());
    h
}

fn uniform(lo: f64, hi: f64, n: usize, what: &str) -> CliResult<Grid> {
    if n < 2 {
        return Err(CliError::input(format!("{what}: need at least 2 points")));
    }
    Grid::uniform(lo, hi, n).map_err(|e| CliError::input(format!("{what}: {e}")))
}

fn warnings_cell(w: &[String]) -> String {
    if w.is_empty() {
        "none".into()
    } else {
        w.join("; ")
    }
}

/// ω′ with `h₀·pow(ω′) = scale·pow(ω)`: where the Case 3 closed form must be
/// evaluated to match a spectrum in another convention.
fn case3_frequency(cfg: &RunConfig, omega: f64) -> f64 {
    let ctx = &cfg.ctx;
    let y = cfg.convention.scale(ctx) * ctx.pow(omega) / ctx.h0();
    if ctx.is_classical() {
        y
    } else {
        y.signum() * y.abs().powf(1.0 / ctx.alpha())
    }
}

/// Closed forms of all anchor groups, or the reason there is none.
fn closed_forms(ctx: &AlphaContext, source: &Source) -> Result<Vec<DelayedSpectrum>, String> {
    match source {
        Source::Samples(_) => Err("sampled signal".into()),
        Source::Symbolic(es) => es
            .iter()
            .map(|e| {
                if e.support() != Support::HalfLine {
                    return Err("interval support".into());
                }
                transform_delayed(ctx, e).map_err(|err| err.to_string())
            })
            .collect(),
    }
}

fn describe_closed_form(forms: &[DelayedSpectrum]) -> String {
    let mut parts = Vec::new();
    for d in forms {
        for t in d.base.terms() {
            let delay = if d.delay == 0.0 {
                String::new()
            } else {
                format!("E(-s {}^a) ", fmt_num(d.delay))
            };
            parts.push(format!(
                "{delay}({}{:+}i)/(({}{:+}i)+s)^{}",
                fmt_num(t.coeff.re),
                t.coeff.im,
                fmt_num(t.pole.re),
                t.pole.im,
                t.power
            ));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        format!("{} with s = i^a h0 w^a", parts.join(" + "))
    }
}

pub fn transform(common: &CommonArgs, path: &Path) -> CliResult<Output> {
    let spec = SignalSpec::load(path)?;
    let cfg = RunConfig::new(common, spec.alpha, None)?;
    let grid = cfg.omega_grid()?;
    let ev = Evaluator::new(&cfg.ctx, &spec.source);
    let (lo, hi) = spec.source.span();
    let opts = cfg.transform_options();
    let s = forward_on(
        &cfg.ctx,
        cfg.convention,
        |x| ev.eval(x),
        lo,
        hi,
        &grid,
        &opts,
    )?;
    let mut warnings = Vec::new();
    if s.warning() {
        warnings.push(format!(
            "integrability bound exceeded: integral of |f| = {} > {}",
            fmt_num(s.abs_integral()),
            fmt_num(opts.bound)
        ));
    }
    if (lo.is_finite() && lo < -cfg.truncation) || (hi.is_finite() && hi > cfg.truncation) {
        warnings.push(format!(
            "signal support truncated to [-{0}, {0}]",
            fmt_num(cfg.truncation)
        ));
    }
    let forms = closed_forms(&cfg.ctx, &spec.source);
    let formal: Option<Vec<Complex64>> = match &forms {
        Ok(fs) => Some(
            grid.points()
                .iter()
                .map(|&w| {
                    let w3 = case3_frequency(&cfg, w);
                    fs.iter()
                        .map(|d| d.eval(&cfg.ctx, w3))
                        .sum::<fractal_fourier::Result<Complex64>>()
                })
                .collect::<fractal_fourier::Result<_>>()?,
        ),
        Err(_) => None,
    };
    let mut comments = header("transform", &cfg);
    comments.push(("signal".into(), path.display().to_string()));
    comments.push(("signal_terms".into(), spec.source.describe()));
    comments.push(("nodes_used".into(), s.nodes().to_string()));
    comments.push(("abs_integral".into(), fmt_num(s.abs_integral())));
    comments.push((
        "closed_form".into(),
        match &forms {
            Ok(fs) => describe_closed_form(fs),
            Err(why) => format!("unavailable ({why})"),
        },
    ));
    if let Some(f) = &formal {
        let gap = s
            .values()
            .iter()
            .zip(f)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        comments.push(("max_gap".into(), fmt_num(gap)));
    }
    comments.push(("warnings".into(), warnings_cell(&warnings)));
    let cols: &[&str] = if formal.is_some() {
        &["omega", "re", "im", "formal_re", "formal_im", "gap"]
    } else {
        &["omega", "re", "im"]
    };
    let mut t = Table::new(comments, cols);
    for (i, (&w, v)) in grid.points().iter().zip(s.values()).enumerate() {
        let mut row = vec![Cell::Num(w), Cell::Num(v.re), Cell::Num(v.im)];
        if let Some(f) = &formal {
            row.extend([
                Cell::Num(f[i].re),
                Cell::Num(f[i].im),
                Cell::Num((v - f[i]).norm()),
            ]);
        }
        t.push(row);
    }
    let mut series = vec![Series::new(
        "|spectrum|",
        grid.points()
            .iter()
            .zip(s.values())
            .map(|(&w, v)| (w, v.norm()))
            .collect(),
    )];
    if let Some(f) = &formal {
        series.push(Series::new(
            "|closed form|",
            grid.points()
                .iter()
                .zip(f)
                .map(|(&w, v)| (w, v.norm()))
                .collect(),
        ));
    }
    Ok(Output {
        main: t.render()?,
        plot: Some(line_plot(
            &format!("Spectrum magnitude, alpha = {}", fmt_num(cfg.alpha())),
            "omega",
            "|F(omega)|",
            &series,
        )),
        warnings,
        ..Output::default()
    })
}

/// `# key = value` comments of a CSV file.
fn read_comments(path: &Path) -> CliResult<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text
        .lines()
        .filter_map(|l| l.strip_prefix('#'))
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect())
}

pub fn inverse_cmd(
    common: &CommonArgs,
    path: &Path,
    x_range: &str,
    x_count: usize,
) -> CliResult<Output> {
    let meta = read_comments(path)?;
    let file_alpha = match meta.get("alpha") {
        Some(a) => Some(
            a.parse::<f64>()
                .map_err(|_| CliError::input(format!("{}: bad alpha `{a}`", path.display())))?,
        ),
        None => None,
    };
    let cfg = RunConfig::new(
        common,
        file_alpha,
        meta.get("convention").map(String::as_str),
    )?;
    let (omegas, values) = read_columns(path, "omega")?;
    let og = Grid::new(omegas).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let spectrum = Spectrum::from_values(og, values, cfg.convention, cfg.alpha(), cfg.truncation)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let (lo, hi) = parse_pair(x_range, "--x-range")?;
    let xs = uniform(lo, hi, x_count, "--x-range")?;
    let inv = inverse(&spectrum, &xs, &cfg.inverse_options())?;
    let mut warnings = Vec::new();
    if inv.warning {
        warnings.push(format!(
            "integrability bound exceeded: integral of |S| = {}",
            fmt_num(inv.abs_integral)
        ));
    }
    let mut comments = header("inverse", &cfg);
    comments.push(("spectrum".into(), path.display().to_string()));
    comments.push((
        "spectrum_points".into(),
        spectrum.omegas().len().to_string(),
    ));
    comments.push(("abs_integral".into(), fmt_num(inv.abs_integral)));
    comments.push(("warnings".into(), warnings_cell(&warnings)));
    let t = crate::csvio::signal_table(comments, &inv.signal);
    let pts = |f: fn(&Complex64) -> f64| -> Vec<(f64, f64)> {
        xs.points()
            .iter()
            .zip(inv.signal.values())
            .map(|(&x, v)| (x, f(v)))
            .collect()
    };
    Ok(Output {
        main: t.render()?,
        plot: Some(line_plot(
            "Inverse transform",
            "x",
            "f(x)",
            &[
                Series::new("re", pts(|v| v.re)),
                Series::new("im", pts(|v| v.im)),
            ],
        )),
        warnings,
        ..Output::default()
    })
}

fn spec_alpha(a: &SignalSpec, b: &SignalSpec) -> CliResult<Option<f64>> {
    match (a.alpha, b.alpha) {
        (Some(x), Some(y)) if x != y => Err(CliError::input(format!(
            "signal specs disagree on alpha ({x} vs {y}); pass --alpha"
        ))),
        (x, y) => Ok(x.or(y)),
    }
}

fn sample(ctx: &AlphaContext, source: &Source, grid: &Grid) -> CliResult<SampledSignal> {
    let ev = Evaluator::new(ctx, source);
    Ok(SampledSignal::try_from_fn(
        grid.clone(),
        SupportHint::HalfLine,
        |x| ev.eval(x),
    )?)
}

fn single_causal(source: &Source) -> Option<&FormalExpr> {
    match source {
        Source::Symbolic(es) if es.len() == 1 => Some(&es[0]),
        _ => None,
    }
}

pub fn convolve(
    common: &CommonArgs,
    p1: &Path,
    p2: &Path,
    x_max: f64,
    x_count: usize,
) -> CliResult<Output> {
    let s1 = SignalSpec::load(p1)?;
    let s2 = SignalSpec::load(p2)?;
    let alpha = if common.alpha.is_some() {
        None
    } else {
        spec_alpha(&s1, &s2)?
    };
    let cfg = RunConfig::new(common, alpha, None)?;
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(CliError::input("--x-max must be positive"));
    }
    let grid = uniform(0.0, x_max, x_count, "convolution grid")?;
    let f1 = sample(&cfg.ctx, &s1.source, &grid)?;
    let f2 = sample(&cfg.ctx, &s2.source, &grid)?;
    let c = convolve_numeric(&cfg.ctx, &f1, &f2, &ConvolveOptions::default())?;
    let formal = match (single_causal(&s1.source), single_causal(&s2.source)) {
        (Some(a), Some(b)) => convolve_formal(&cfg.ctx, a, b).map_err(|e| e.to_string()),
        _ => Err("needs two symbolic single-anchor signals".to_string()),
    };
    let formal_values: Option<Vec<Complex64>> = match &formal {
        Ok(e) => {
            let ml = fractal_fourier::special::MlEvaluator::new(&cfg.ctx);
            Some(
                grid.points()
                    .iter()
                    .map(|&x| e.eval_extended(&ml, x))
                    .collect::<fractal_fourier::Result<_>>()?,
            )
        }
        Err(_) => None,
    };
    let mut comments = header("convolve", &cfg);
    comments.push(("f1".into(), p1.display().to_string()));
    comments.push(("f2".into(), p2.display().to_string()));
    comments.push(("x_max".into(), fmt_num(x_max)));
    comments.push(("x_count".into(), x_count.to_string()));
    comments.push((
        "closed_form".into(),
        match &formal {
            Ok(e) => Source::Symbolic(vec![e.clone()]).describe(),
            Err(why) => format!("unavailable ({why})"),
        },
    ));
    if let Some(f) = &formal_values {
        let gap = c
            .values()
            .iter()
            .zip(f)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        comments.push(("max_gap".into(), fmt_num(gap)));
    }
    let cols: &[&str] = if formal_values.is_some() {
        &["x", "re", "im", "formal_re", "formal_im", "gap"]
    } else {
        &["x", "re", "im"]
    };
    let mut t = Table::new(comments, cols);
    for (i, (&x, v)) in grid.points().iter().zip(c.values()).enumerate() {
        let mut row = vec![Cell::Num(x), Cell::Num(v.re), Cell::Num(v.im)];
        if let Some(f) = &formal_values {
            row.extend([
                Cell::Num(f[i].re),
                Cell::Num(f[i].im),
                Cell::Num((v - f[i]).norm()),
            ]);
        }
        t.push(row);
    }
    let mut series = vec![Series::new(
        "numeric",
        grid.points()
            .iter()
            .zip(c.values())
            .map(|(&x, v)| (x, v.re))
            .collect(),
    )];
    if let Some(f) = &formal_values {
        series.push(Series::new(
            "closed form",
            grid.points()
                .iter()
                .zip(f)
                .map(|(&x, v)| (x, v.re))
                .collect(),
        ));
    }
    Ok(Output {
        main: t.render()?,
        plot: Some(line_plot("Convolution", "x", "Re (f1*f2)(x)", &series)),
        ..Output::default()
    })
}

pub fn series(
    common: &CommonArgs,
    path: &Path,
    l: f64,
    n_max: usize,
    sums: Option<&Path>,
    x_count: usize,
) -> CliResult<Output> {
    let spec = SignalSpec::load(path)?;
    let cfg = RunConfig::new(common, spec.alpha, None)?;
    if !(l > 0.0 && l.is_finite()) {
        return Err(CliError::input("--half-period must be positive"));
    }
    if n_max > 4096 {
        return Err(CliError::input("--terms is limited to 4096"));
    }
    let ev = Evaluator::new(&cfg.ctx, &spec.source);
    let opts = SeriesOptions {
        nodes: cfg.nodes.max(16),
    };
    let c = series_coefficients(&cfg.ctx, |x| ev.eval(x), l, n_max, &opts)?;
    let mut comments = header("series", &cfg);
    comments.push(("signal".into(), path.display().to_string()));
    comments.push(("half_period".into(), fmt_num(l)));
    comments.push(("terms".into(), n_max.to_string()));
    let mut t = Table::new(comments.clone(), &["n", "re", "im", "t_re", "t_im"]);
    for n in -(n_max as i64)..=(n_max as i64) {
        let (Some(v), Some(vt)) = (c.get(n), c.get_t(n)) else {
            continue;
        };
        t.push(vec![
            Cell::Int(n),
            Cell::Num(v.re),
            Cell::Num(v.im),
            Cell::Num(vt.re),
            Cell::Num(vt.im),
        ]);
    }
    let xs = uniform(-l, l, x_count, "--x-count")?;
    let partial = series_partial_sums(&cfg.ctx, &c, xs.points())?;
    let signal: Vec<Complex64> = xs
        .points()
        .iter()
        .map(|&x| ev.eval(x))
        .collect::<fractal_fourier::Result<_>>()?;
    let mut extra = Vec::new();
    if let Some(p) = sums {
        let mut s = Table::new(comments, &["x", "re", "im", "signal_re", "signal_im"]);
        for ((&x, v), f) in xs.points().iter().zip(&partial).zip(&signal) {
            s.push(vec![
                Cell::Num(x),
                Cell::Num(v.re),
                Cell::Num(v.im),
                Cell::Num(f.re),
                Cell::Num(f.im),
            ]);
        }
        extra.push((p.to_path_buf(), s.render()?));
    }
    let pts = |v: &[Complex64]| -> Vec<(f64, f64)> {
        xs.points().iter().zip(v).map(|(&x, v)| (x, v.re)).collect()
    };
    Ok(Output {
        main: t.render()?,
        extra,
        plot: Some(line_plot(
            &format!("Partial sum, N = {n_max}"),
            "x",
            "Re",
            &[
                Series::new("partial sum", pts(&partial)),
                Series::new("signal", pts(&signal)),
            ],
        )),
        ..Output::default()
    })
}

/// Fold one chunk's report into the running aggregate: worst discrepancies,
/// all-pass.
fn merge(acc: &mut Check, r: &VerificationReport) {
    acc.lhs_norm = acc.lhs_norm.max(r.lhs_norm);
    acc.rhs_norm = acc.rhs_norm.max(r.rhs_norm);
    acc.max_abs_discrepancy = acc.max_abs_discrepancy.max(r.max_abs_discrepancy);
    acc.pass &= r.pass;
    for v in &r.variants {
        let e = acc.variants.entry(v.name.clone()).or_insert(0.0);
        *e = e.max(v.discrepancy);
    }
    // the named variant must hold on every chunk
    if let Some((name, _)) = acc.variants.iter().find(|(_, d)| **d <= acc.tolerance) {
        acc.variant = name.clone();
    }
}

pub fn formal_checks(cfg: &RunConfig, count: usize, round_trip: usize) -> CliResult<Vec<Check>> {
    let family = ml_mixtures(cfg.seed, count.max(3));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let mut checks = Vec::new();
    for id in IdentityTag::ALL {
        if id == IdentityTag::Parseval {
            continue;
        }
        let mut acc: Option<Check> = None;
        for chunk in family.chunks_exact(3) {
            let mut inputs = FormalInputs::new(chunk.to_vec());
            inputs.a = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            inputs.b = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let r = verify_formal_identity(&cfg.ctx, id, &inputs)?;
            match &mut acc {
                None => acc = Some(Check::from_report("formal", &r)),
                Some(a) => merge(a, &r),
            }
        }
        checks.extend(acc);
    }
    let exprs = general_exprs(cfg.seed, round_trip);
    let worst = round_trip_discrepancy(&cfg.ctx, &exprs)?;
    checks.push(Check {
        suite: "formal".into(),
        identity: "fundamental_theorem".into(),
        lhs_norm: exprs.iter().map(FormalExpr::coeff_norm).fold(0.0, f64::max),
        rhs_norm: exprs.iter().map(FormalExpr::coeff_norm).fold(0.0, f64::max),
        max_abs_discrepancy: worst,
        tolerance: FORMAL_TOLERANCE,
        pass: worst <= FORMAL_TOLERANCE,
        asserted: true,
        variant: "standard".into(),
        variants: BTreeMap::new(),
    });
    Ok(checks)
}

pub fn numeric_checks(cfg: &RunConfig) -> CliResult<Vec<Check>> {
    let tol = NumericTolerance {
        identity: cfg
            .tolerance
            .unwrap_or(NumericTolerance::default().identity),
        ..NumericTolerance::default()
    };
    Ok(numeric_suite(&cfg.ctx, cfg.convention, &tol)?
        .iter()
        .map(|r| Check::from_report("numeric", r))
        .collect())
}

pub fn verify(
    common: &CommonArgs,
    suite: Suite,
    count: usize,
    round_trip: usize,
) -> CliResult<Output> {
    let cfg = RunConfig::new(common, None, None)?;
    let mut checks = Vec::new();
    if matches!(suite, Suite::Formal | Suite::All) {
        checks.extend(formal_checks(&cfg, count, round_trip)?);
    }
    if matches!(suite, Suite::Numeric | Suite::All) {
        checks.extend(numeric_checks(&cfg)?);
    }
    let name = match suite {
        Suite::Formal => "formal",
        Suite::Numeric => "numeric",
        Suite::All => "all",
    };
    let report = Report::new(name, &cfg, checks);
    let failure = (report.summary.asserted_failures > 0).then(|| {
        let names: Vec<String> = report
            .check
            .iter()
            .filter(|c| c.failed())
            .map(|c| format!("{}/{}", c.suite, c.identity))
            .collect();
        format!("asserted checks failed: {}", names.join(", "))
    });
    Ok(Output {
        main: report.render(&cfg)?,
        failure,
        ..Output::default()
    })
}

fn method_name(m: MlMethod) -> &'static str {
    match m {
        MlMethod::Exponential => "exponential",
        MlMethod::Taylor => "taylor",
        MlMethod::Asymptotic => "asymptotic",
    }
}

/// `E_{1/2}(x) = exp(x²) erfc(−x)` and `E_1 = exp` on the real line.
fn ml_oracle(alpha: f64, x: f64) -> Option<f64> {
    if alpha == 1.0 {
        Some(x.exp())
    } else if alpha == 0.5 {
        Some((x * x).exp() * libm::erfc(-x))
    } else {
        None
    }
}

pub fn table(
    common: &CommonArgs,
    what: TableKind,
    n: usize,
    interval: &str,
    mode: RuleMode,
    z_max: f64,
    count: usize,
) -> CliResult<Output> {
    let cfg = RunConfig::new(common, None, None)?;
    let ctx = &cfg.ctx;
    let alpha = ctx.alpha();
    let (a, b) = parse_pair(interval, "--interval")?;
    if n == 0 || n > 512 {
        return Err(CliError::input("--rule-size must lie in 1..=512"));
    }
    let mut comments = header("table", &cfg);
    let t = match what {
        TableKind::Moments => {
            let rule = build_measure_matched_rule(ctx, a, b, n)?;
            let mut rows = Vec::new();
            let mut worst: f64 = 0.0;
            for k in 0..2 * n {
                let kf = k as f64;
                let numeric = rule
                    .integrate(|x| Complex64::new(ctx.pow(x - a).powi(k as i32), 0.0))
                    .re;
                let exact = gamma(1.0 + kf * alpha)? / gamma(1.0 + (kf + 1.0) * alpha)?
                    * (b - a).powf((kf + 1.0) * alpha);
                let rel = ((numeric - exact) / exact).abs();
                worst = worst.max(rel);
                rows.push(vec![
                    Cell::Int(k as i64),
                    Cell::Num(numeric),
                    Cell::Num(exact),
                    Cell::Num(rel),
                ]);
            }
            comments.push(("table".into(), "moments".into()));
            comments.push(("rule_size".into(), n.to_string()));
            comments.push(("interval".into(), format!("{},{}", fmt_num(a), fmt_num(b))));
            comments.push(("max_rel_err".into(), fmt_num(worst)));
            Table {
                comments,
                columns: ["k", "numeric", "exact", "rel_err"]
                    .map(String::from)
                    .to_vec(),
                rows,
            }
        }
        TableKind::RiemannDivergence => {
            let g = gamma(1.0 + alpha)?;
            let mut rows = Vec::new();
            for e in 1..=5 {
                let cells = 10usize.pow(e);
                let sum = QuadratureRule::literal_riemann(ctx, a, b, cells)?
                    .integrate(|_| Complex64::new(1.0, 0.0))
                    .re;
                let closed = (cells as f64).powf(1.0 - alpha) * (b - a).powf(alpha) / g;
                rows.push(vec![
                    Cell::Int(cells as i64),
                    Cell::Num(sum),
                    Cell::Num(closed),
                    Cell::Num((sum - closed).abs()),
                ]);
            }
            comments.push(("table".into(), "riemann-divergence".into()));
            comments.push(("interval".into(), format!("{},{}", fmt_num(a), fmt_num(b))));
            Table {
                comments,
                columns: ["cells", "literal_sum", "closed_form", "abs_diff"]
                    .map(String::from)
                    .to_vec(),
                rows,
            }
        }
        TableKind::MlValues => {
            if !(z_max > 0.0 && z_max.is_finite()) {
                return Err(CliError::input("--z-max must be positive"));
            }
            let zs = uniform(-z_max, z_max, count, "--count")?;
            let ml = MittagLeffler::default();
            let mut rows = Vec::new();
            let mut worst: f64 = 0.0;
            for &z in zs.points() {
                let v = ml.eval(ctx, Complex64::new(z, 0.0))?;
                let (oracle, rel) = match ml_oracle(alpha, z) {
                    Some(o) => {
                        let rel = (v.value - o).norm() / o.abs();
                        worst = worst.max(rel);
                        (Cell::Num(o), Cell::Num(rel))
                    }
                    None => (Cell::Empty, Cell::Empty),
                };
                rows.push(vec![
                    Cell::Num(z),
                    Cell::Num(v.value.re),
                    Cell::Num(v.value.im),
                    Cell::Text(method_name(v.method).into()),
                    oracle,
                    rel,
                ]);
            }
            comments.push(("table".into(), "ml-values".into()));
            comments.push((
                "oracle".into(),
                match ml_oracle(alpha, 0.0) {
                    Some(_) if alpha == 1.0 => "exp(z)".into(),
                    Some(_) => "exp(z^2) erfc(-z)".into(),
                    None => "none at this alpha".into(),
                },
            ));
            if ml_oracle(alpha, 0.0).is_some() {
                comments.push(("max_rel_err".into(), fmt_num(worst)));
            }
            Table {
                comments,
                columns: ["z", "re", "im", "method", "oracle", "rel_err"]
                    .map(String::from)
                    .to_vec(),
                rows,
            }
        }
        TableKind::Rule => {
            let rule = match mode {
                RuleMode::Matched => build_measure_matched_rule(ctx, a, b, n)?,
                RuleMode::Literal => QuadratureRule::literal_riemann(ctx, a, b, n)?,
            };
            comments.push(("table".into(), "rule".into()));
            comments.push(("mode".into(), rule.mode().name().into()));
            comments.push(("interval".into(), format!("{},{}", fmt_num(a), fmt_num(b))));
            let rows = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .map(|(&x, &w)| vec![Cell::Num(x), Cell::Num(w)])
                .collect();
            Table {
                comments,
                columns: ["node", "weight"].map(String::from).to_vec(),
                rows,
            }
        }
    };
    Ok(Output {
        main: t.render()?,
        ..Output::default()
    })
}

fn parse_complex(s: &str) -> CliResult<Complex64> {
    let bad = || CliError::input(format!("expected `RE` or `RE,IM`, got `{s}`"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>().map_err(|_| bad()))
        .collect::<CliResult<_>>()?;
    match nums[..] {
        [re] if re.is_finite() => Ok(Complex64::new(re, 0.0)),
        [re, im] if re.is_finite() && im.is_finite() => Ok(Complex64::new(re, im)),
        _ => Err(bad()),
    }
}

pub fn ml_eval(common: &CommonArgs, zs: &[String]) -> CliResult<Output> {
    let cfg = RunConfig::new(common, None, None)?;
    let points: Vec<Complex64> = zs
        .iter()
        .map(|s| parse_complex(s))
        .collect::<CliResult<_>>()?;
    let ml = MittagLeffler::default();
    let mut t = Table::new(
        header("ml-eval", &cfg),
        &[
            "z_re",
            "z_im",
            "re",
            "im",
            "method",
            "terms",
            "reduced_confidence",
        ],
    );
    let mut warnings = Vec::new();
    for z in points {
        let v = ml.eval(&cfg.ctx, z)?;
        if v.reduced_confidence {
            warnings.push(format!(
                "|z| = {} exceeds {}; accuracy not guaranteed",
                fmt_num(z.norm()),
                fmt_num(ml.z_max)
            ));
        }
        t.push(vec![
            Cell::Num(z.re),
            Cell::Num(z.im),
            Cell::Num(v.value.re),
            Cell::Num(v.value.im),
            Cell::Text(method_name(v.method).into()),
            Cell::Int(v.terms as i64),
            Cell::Text(v.reduced_confidence.to_string()),
        ]);
    }
    t.comment("warnings", warnings_cell(&warnings));
    Ok(Output {
        main: t.render()?,
        warnings,
        ..Output::default()
    })
}
