use fractal_fourier::numeric::Grid;
use fractal_fourier::transform::{InverseOptions, TransformOptions};
use fractal_fourier::{AlphaContext, KernelConvention};

use crate::args::CommonArgs;
use crate::error::{CliError, CliResult};

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ctx: AlphaContext,
    pub convention: KernelConvention,
    pub truncation: f64,
    pub nodes: usize,
    pub omega_min: f64,
    pub omega_max: f64,
    pub omega_count: usize,
    pub seed: u64,
    pub tolerance: Option<f64>,
}

/// Parse `LO,HI`.
pub fn parse_pair(s: &str, what: &str) -> CliResult<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::input(format!("{what}: expected `LO,HI`, got `{s}`"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(CliError::input(format!(
            "{what}: need finite LO < HI, got `{s}`"
        )));
    }
    Ok((lo, hi))
}

impl RunConfig {
    /// Flags win over values carried by input files; α = 1 and Case 3 are
    /// the fallbacks.
    pub fn new(
        args: &CommonArgs,
        file_alpha: Option<f64>,
        file_convention: Option<&str>,
    ) -> CliResult<Self> {
        let alpha = args.alpha.or(file_alpha).unwrap_or(1.0);
        let ctx = AlphaContext::new(alpha).map_err(|e| CliError::input(e.to_string()))?;
        let name = args
            .convention
            .as_deref()
            .or(file_convention)
            .unwrap_or("case3");
        let convention = KernelConvention::parse(name)
            .ok_or_else(|| CliError::input(format!("unknown convention `{name}`")))?;
        if !(args.truncation > 0.0 && args.truncation.is_finite()) {
            return Err(CliError::input("--truncation must be positive"));
        }
        if args.nodes < 2 {
            return Err(CliError::input("--nodes must be at least 2"));
        }
        if args.omega_count < 2 {
            return Err(CliError::input("--omega-count must be at least 2"));
        }
        let (omega_min, omega_max) = match args.omega_range.parse::<f64>() {
            Ok(w) if w > 0.0 && w.is_finite() => (-w, w),
            Ok(_) => return Err(CliError::input("--omega-range must be positive")),
            Err(_) => parse_pair(&args.omega_range, "--omega-range")?,
        };
        if let Some(t) = args.tolerance {
            if !(t > 0.0) {
                return Err(CliError::input("--tolerance must be positive"));
            }
        }
        Ok(Self {
            ctx,
            convention,
            truncation: args.truncation,
            nodes: args.nodes,
            omega_min,
            omega_max,
            omega_count: args.omega_count,
            seed: args.seed,
            tolerance: args.tolerance,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.ctx.alpha()
    }

    pub fn omega_grid(&self) -> CliResult<Grid> {
        Ok(Grid::uniform(
            self.omega_min,
            self.omega_max,
            self.omega_count,
        )?)
    }

    pub fn transform_options(&self) -> TransformOptions {
        TransformOptions {
            truncation: self.truncation,
            nodes: self.nodes,
            ..TransformOptions::default()
        }
    }

    pub fn inverse_options(&self) -> InverseOptions {
        InverseOptions {
            nodes: self.nodes,
            ..InverseOptions::default()
        }
    }

    /// `key = value` pairs echoed into every output header.
    pub fn echo(&self) -> Vec<(String, String)> {
        vec![
            ("alpha".into(), fmt_num(self.alpha())),
            ("convention".into(), self.convention.name().into()),
            ("truncation".into(), fmt_num(self.truncation)),
            ("nodes".into(), self.nodes.to_string()),
            (
                "omega_range".into(),
                format!("{},{}", fmt_num(self.omega_min), fmt_num(self.omega_max)),
            ),
            ("omega_count".into(), self.omega_count.to_string()),
            ("seed".into(), self.seed.to_string()),
            (
                "tolerance".into(),
                self.tolerance.map_or_else(|| "default".into(), fmt_num),
            ),
        ]
    }
}

/// Shortest round-trip form, with exponent notation for very small or large
/// magnitudes.
pub fn fmt_num(x: f64) -> String {
    format!("{x:?}")
}
