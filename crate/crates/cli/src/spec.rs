//! Signal specifications: a TOML file with symbolic terms or a samples path,
//! or a bare samples CSV.
//!
//! ```toml
//! alpha = 0.5
//! support = "half_line"
//!
//! [[terms]]
//! coeff = [1.0, 0.0]
//! k = 0
//! lambda = [-1.0, 0.0]
//! anchor = 0.0
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use fractal_fourier::formal::{FormalExpr, FormalTerm, Support};
use fractal_fourier::numeric::{SampledSignal, SupportHint};
use fractal_fourier::special::MlEvaluator;
use fractal_fourier::{AlphaContext, Complex64};
use serde::Deserialize;

use crate::csvio::read_samples;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default = "unit")]
    pub coeff: [f64; 2],
    #[serde(default)]
    pub k: u32,
    #[serde(default)]
    pub lambda: [f64; 2],
    #[serde(default)]
    pub anchor: f64,
}

fn unit() -> [f64; 2] {
    [1.0, 0.0]
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub alpha: Option<f64>,
    pub support: Option<String>,
    pub interval: Option<[f64; 2]>,
    pub samples: Option<PathBuf>,
    pub terms: Option<Vec<TermSpec>>,
}

/// A parsed signal spec.
#[derive(Debug, Clone)]
pub struct SignalSpec {
    pub alpha: Option<f64>,
    pub source: Source,
}

#[derive(Debug, Clone)]
pub enum Source {
    /// Terms grouped by anchor, one expression per anchor.
    Symbolic(Vec<FormalExpr>),
    Samples(SampledSignal),
}

impl SignalSpec {
    pub fn load(path: &Path) -> CliResult<Self> {
        if path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
        {
            return Ok(Self {
                alpha: None,
                source: Source::Samples(read_samples(path, SupportHint::Interval)?),
            });
        }
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new(""));
        Self::parse(&text, base).map_err(|e| match e {
            CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Parse TOML text; relative sample paths resolve against `base`.
    pub fn parse(text: &str, base: &Path) -> CliResult<Self> {
        let file: SpecFile =
            toml::from_str(text).map_err(|e| CliError::input(e.message().to_string()))?;
        let source = match (&file.samples, &file.terms) {
            (Some(p), None) => {
                let hint = match file.support.as_deref() {
                    None => SupportHint::Interval,
                    Some(s) => SupportHint::parse(s)
                        .ok_or_else(|| CliError::input(format!("unknown support `{s}`")))?,
                };
                Source::Samples(read_samples(&base.join(p), hint)?)
            }
            (None, Some(terms)) => Source::Symbolic(symbolic(&file, terms)?),
            _ => {
                return Err(CliError::input(
                    "spec needs exactly one of `samples` or `terms`",
                ))
            }
        };
        Ok(Self {
            alpha: file.alpha,
            source,
        })
    }
}

fn finite(xs: &[f64]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

fn symbolic(file: &SpecFile, terms: &[TermSpec]) -> CliResult<Vec<FormalExpr>> {
    let support = match (file.support.as_deref(), file.interval) {
        (None | Some("half_line"), None) => Support::HalfLine,
        (Some("interval"), Some([a, b])) if a < b && finite(&[a, b]) => Support::Interval(a, b),
        (Some("interval"), _) => {
            return Err(CliError::input(
                "interval support needs `interval = [a, b]` with a < b",
            ))
        }
        (Some(s), _) if s != "half_line" => {
            return Err(CliError::input(format!("unknown symbolic support `{s}`")))
        }
        _ => {
            return Err(CliError::input(
                "`interval` is only valid with support = \"interval\"",
            ))
        }
    };
    // group by anchor, then order groups by anchor value
    let mut groups: BTreeMap<u64, (f64, Vec<FormalTerm>)> = BTreeMap::new();
    for (i, t) in terms.iter().enumerate() {
        if !finite(&[t.coeff[0], t.coeff[1], t.lambda[0], t.lambda[1], t.anchor]) {
            return Err(CliError::input(format!("term {}: non-finite value", i + 1)));
        }
        if t.k > 64 {
            return Err(CliError::input(format!(
                "term {}: k = {} is too large",
                i + 1,
                t.k
            )));
        }
        let anchor = t.anchor + 0.0;
        groups
            .entry(anchor.to_bits())
            .or_insert_with(|| (anchor, Vec::new()))
            .1
            .push(FormalTerm::new(
                Complex64::new(t.coeff[0], t.coeff[1]),
                t.k,
                Complex64::new(t.lambda[0], t.lambda[1]),
            ));
    }
    let mut out: Vec<FormalExpr> = Vec::with_capacity(groups.len());
    for (_, (anchor, ts)) in groups {
        out.push(FormalExpr::new(anchor, support, ts).map_err(|e| CliError::input(e.to_string()))?);
    }
    out.sort_by(|a, b| a.anchor().total_cmp(&b.anchor()));
    Ok(out)
}

/// Pointwise evaluation of a loaded signal.
pub struct Evaluator<'a> {
    source: &'a Source,
    ml: MlEvaluator,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &AlphaContext, source: &'a Source) -> Self {
        Self {
            source,
            ml: MlEvaluator::new(ctx),
        }
    }

    pub fn eval(&self, x: f64) -> fractal_fourier::Result<Complex64> {
        match self.source {
            Source::Samples(s) => Ok(s.interpolate_or_zero(x)),
            Source::Symbolic(es) => es.iter().map(|e| e.eval_extended(&self.ml, x)).sum(),
        }
    }
}

impl Source {
    /// Interval outside which the signal vanishes.
    pub fn span(&self) -> (f64, f64) {
        match self {
            Source::Samples(s) => (s.grid().first(), s.grid().last()),
            Source::Symbolic(es) if es.is_empty() => (0.0, 0.0),
            Source::Symbolic(es) => es
                .iter()
                .map(FormalExpr::span)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |a, b| {
                    (a.0.min(b.0), a.1.max(b.1))
                }),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Source::Samples(s) => format!("samples ({} points)", s.grid().len()),
            Source::Symbolic(es) => {
                let terms: Vec<String> = es
                    .iter()
                    .flat_map(|e| {
                        e.terms().iter().map(move |t| {
                            let shift = match e.anchor() {
                                0.0 => "x".to_string(),
                                a => format!("(x{:+})", -a),
                            };
                            let mut s = format!("({}{:+}i)", t.coeff.re, t.coeff.im);
                            if t.k > 0 {
                                s.push_str(&format!(" {shift}^({}a)", t.k));
                            }
                            if t.lambda != Complex64::new(0.0, 0.0) {
                                s.push_str(&format!(
                                    " E(({}{:+}i) {shift}^a)",
                                    t.lambda.re, t.lambda.im
                                ));
                            }
                            s
                        })
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                }
            }
        }
    }
}
