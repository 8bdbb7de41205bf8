#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Strictly increasing sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
    uniform: bool,
}

impl Grid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::GridTooSmall(points.len()));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::GridNotIncreasing);
        }
        let n = points.len();
        let h = (points[n - 1] - points[0]) / (n - 1) as f64;
        let uniform = points
            .windows(2)
            .all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h);
        Ok(Self { points, uniform })
    }

    /// `n` equispaced points from `a` to `b` inclusive.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::GridTooSmall(n));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::NonFinite(0));
        }
        if b <= a {
            return Err(Error::GridNotIncreasing);
        }
        let h = (b - a) / (n - 1) as f64;
        let mut points: Vec<f64> = (0..n).map(|i| a + h * i as f64).collect();
        points[n - 1] = b;
        Ok(Self {
            points,
            uniform: true,
        })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    pub fn first(&self) -> f64 {
        self.points[0]
    }

    pub fn last(&self) -> f64 {
        self.points[self.points.len() - 1]
    }

    /// Nominal spacing of a uniform grid.
    pub fn step(&self) -> Option<f64> {
        self.uniform
            .then(|| (self.last() - self.first()) / (self.len() - 1) as f64)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.first() && x <= self.last()
    }

    /// Index `i` of the cell `[p_i, p_{i+1}]` holding `x`, clamped to the grid.
    pub fn cell(&self, x: f64) -> usize {
        let n = self.points.len();
        let i = match self.step() {
            Some(h) => ((x - self.first()) / h).floor().max(0.0) as usize,
            None => self.points.partition_point(|&p| p <= x).saturating_sub(1),
        };
        let mut i = i.min(n - 2);
        // rounding in the uniform shortcut can land one cell off
        while i > 0 && x < self.points[i] {
            i -= 1;
        }
        while i + 2 < n && x >= self.points[i + 1] {
            i += 1;
        }
        i
    }
}

/// Where a sampled signal is meant to live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportHint {
    HalfLine,
    SymmetricLine,
    Interval,
}

impl SupportHint {
    pub fn name(self) -> &'static str {
        match self {
            Self::HalfLine => "half-line",
            Self::SymmetricLine => "symmetric-line",
            Self::Interval => "interval",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "half-line" | "half_line" | "halfline" => Some(Self::HalfLine),
            "symmetric-line" | "symmetric_line" | "line" => Some(Self::SymmetricLine),
            "interval" => Some(Self::Interval),
            _ => None,
        }
    }
}

/// Complex samples on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<Complex64>,
    support: SupportHint,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>, support: SupportHint) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::LengthMismatch(grid.len(), values.len()));
        }
        if let Some(i) = values
            .iter()
            .position(|v| !(v.re.is_finite() && v.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self {
            grid,
            values,
            support,
        })
    }

    pub fn from_fn(
        grid: Grid,
        support: SupportHint,
        mut f: impl FnMut(f64) -> Complex64,
    ) -> Result<Self> {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        Self::new(grid, values, support)
    }

    pub fn try_from_fn(
        grid: Grid,
        support: SupportHint,
        mut f: impl FnMut(f64) -> Result<Complex64>,
    ) -> Result<Self> {
        let values = grid
            .points()
            .iter()
            .map(|&x| f(x))
            .collect::<Result<Vec<_>>>()?;
        Self::new(grid, values, support)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn support(&self) -> SupportHint {
        self.support
    }

    /// Cubic (4-point Lagrange) interpolation; errors outside the grid.
    pub fn interpolate(&self, x: f64) -> Result<Complex64> {
        if !self.grid.contains(x) {
            return Err(Error::OutsideSupport(x));
        }
        Ok(cubic_interpolate(&self.grid, &self.values, x))
    }

    /// As [`Self::interpolate`] but zero outside the grid.
    pub fn interpolate_or_zero(&self, x: f64) -> Complex64 {
        if self.grid.contains(x) {
            cubic_interpolate(&self.grid, &self.values, x)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }
}

/// 4-point Lagrange interpolation of `values` on `grid` at `x`, using the
/// stencil centred on the cell containing `x` (shifted at the ends). Falls
/// back to linear interpolation on two-point grids.
pub fn cubic_interpolate(grid: &Grid, values: &[Complex64], x: f64) -> Complex64 {
    let p = grid.points();
    let n = p.len();
    let i = grid.cell(x);
    if n < 4 {
        let t = (x - p[i]) / (p[i + 1] - p[i]);
        return values[i] * (1.0 - t) + values[i + 1] * t;
    }
    let s = i.saturating_sub(1).min(n - 4);
    let xs = &p[s..s + 4];
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..4 {
        let mut l = 1.0;
        for m in 0..4 {
            if m != j {
                l *= (x - xs[m]) / (xs[j] - xs[m]);
            }
        }
        acc += values[s + j] * l;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(Grid::new(alloc::vec![0.0]).is_err());
        assert!(Grid::new(alloc::vec![0.0, 0.0]).is_err());
        assert!(Grid::new(alloc::vec![0.0, f64::NAN]).is_err());
        let g = Grid::uniform(0.0, 1.0, 11).unwrap();
        assert!(g.is_uniform());
        assert_eq!(g.last(), 1.0);
        assert!(!Grid::new(alloc::vec![0.0, 1.0, 3.0]).unwrap().is_uniform());
    }

    #[test]
    fn cell_lookup() {
        let g = Grid::uniform(0.0, 1.0, 11).unwrap();
        assert_eq!(g.cell(0.0), 0);
        assert_eq!(g.cell(0.35), 3);
        assert_eq!(g.cell(1.0), 9);
        let g = Grid::new(alloc::vec![0.0, 0.5, 2.0, 3.0]).unwrap();
        assert_eq!(g.cell(1.0), 1);
        assert_eq!(g.cell(2.0), 2);
    }

    #[test]
    fn cubic_is_exact_on_cubics() {
        let g = Grid::new(alloc::vec![0.0, 0.3, 0.7, 1.2, 2.0, 2.1]).unwrap();
        let f = |x: f64| Complex64::new(x * x * x - 2.0 * x, 1.0 - x * x);
        let s = SampledSignal::from_fn(g, SupportHint::Interval, f).unwrap();
        for x in [0.0, 0.1, 0.9, 1.9, 2.1] {
            assert!((s.interpolate(x).unwrap() - f(x)).norm() < 1e-13);
        }
        assert!(s.interpolate(2.2).is_err());
        assert_eq!(s.interpolate_or_zero(-1.0), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn signal_rejects_bad_values() {
        let g = Grid::uniform(0.0, 1.0, 3).unwrap();
        let bad = alloc::vec![Complex64::new(0.0, 0.0); 2];
        assert!(matches!(
            SampledSignal::new(g.clone(), bad, SupportHint::Interval),
            Err(Error::LengthMismatch(3, 2))
        ));
        let nan = alloc::vec![Complex64::new(f64::NAN, 0.0); 3];
        assert!(matches!(
            SampledSignal::new(g, nan, SupportHint::Interval),
            Err(Error::NonFinite(0))
        ));
    }
}
