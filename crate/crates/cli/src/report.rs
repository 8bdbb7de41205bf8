//! Machine-readable verification reports (TOML).

use std::collections::BTreeMap;

use fractal_fourier::VerificationReport;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: String,
    pub identity: String,
    pub lhs_norm: f64,
    pub rhs_norm: f64,
    pub max_abs_discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub asserted: bool,
    pub variant: String,
    /// Discrepancy per variant, when several were tried.
    pub variants: BTreeMap<String, f64>,
}

impl Check {
    pub fn from_report(suite: &str, r: &VerificationReport) -> Self {
        Self {
            suite: suite.into(),
            identity: r.identity.name().into(),
            lhs_norm: r.lhs_norm,
            rhs_norm: r.rhs_norm,
            max_abs_discrepancy: r.max_abs_discrepancy,
            tolerance: r.tolerance,
            pass: r.pass,
            asserted: r.asserted,
            variant: r.variant.clone(),
            variants: r
                .variants
                .iter()
                .map(|v| (v.name.clone(), v.discrepancy))
                .collect(),
        }
    }

    pub fn failed(&self) -> bool {
        self.asserted && !self.pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub suite: String,
    pub alpha: f64,
    pub convention: String,
    pub seed: u64,
    pub checks: usize,
    pub asserted_failures: usize,
    pub reported_only: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub check: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, cfg: &RunConfig, check: Vec<Check>) -> Self {
        Self {
            summary: Summary {
                suite: suite.into(),
                alpha: cfg.alpha(),
                convention: cfg.convention.name().into(),
                seed: cfg.seed,
                checks: check.len(),
                asserted_failures: check.iter().filter(|c| c.failed()).count(),
                reported_only: check.iter().filter(|c| !c.asserted).count(),
            },
            check,
        }
    }

    pub fn render(&self, cfg: &RunConfig) -> CliResult<String> {
        let mut out = String::from("# ffourier verify\n");
        for (k, v) in cfg.echo() {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        out.push_str(&toml::to_string(self).map_err(|e| CliError::input(format!("report: {e}")))?);
        Ok(out)
    }
}
