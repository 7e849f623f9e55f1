use crate::error::{domain, NumError, Result};
use crate::extrapolate::{basis_fit, richardson};
use crate::special_functions::Approximation;

/// Error model for the ladder values partial(N) − growth(N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitModel {
    /// Error expands in 1/N, 1/N², …
    Poly,
    /// Error expands in log^i N / N^j for 0 ≤ i ≤ log_power, j ≥ 1.
    PolyLog { log_power: u32 },
}

/// Ladder N, 2N, 4N, … used by [`regularized_limit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LimitLadder {
    pub base_n: usize,
    pub ratio: usize,
    pub depth: usize,
    pub model: LimitModel,
}

impl LimitLadder {
    pub fn new(base_n: usize, depth: usize, model: LimitModel) -> Self {
        LimitLadder {
            base_n,
            ratio: 2,
            depth,
            model,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.base_n < 8 {
            return Err(domain(format!(
                "ladder base_n must be >= 8, got {}",
                self.base_n
            )));
        }
        if self.ratio != 2 {
            return Err(domain(format!(
                "ladder ratio must be 2, got {}",
                self.ratio
            )));
        }
        if !(1..=5).contains(&self.depth) {
            return Err(domain(format!(
                "ladder depth must be in 1..=5, got {}",
                self.depth
            )));
        }
        Ok(())
    }

    /// The ladder points N_0, …, N_depth.
    pub fn points(&self) -> Vec<usize> {
        (0..=self.depth).map(|k| self.base_n << k).collect()
    }
}

impl Default for LimitLadder {
    fn default() -> Self {
        LimitLadder::new(16, 5, LimitModel::Poly)
    }
}

/// Extrapolates lim_{N→∞} [partial(N) − growth(N)] along the ladder.
pub fn regularized_limit(
    partial: impl Fn(usize) -> f64,
    growth: impl Fn(usize) -> f64,
    ladder: &LimitLadder,
) -> Result<Approximation> {
    ladder.validate()?;
    let points = ladder.points();
    let mut input_scale = 0.0f64;
    let values: Vec<f64> = points
        .iter()
        .map(|&n| {
            let (p, g) = (partial(n), growth(n));
            input_scale = input_scale.max(p.abs()).max(g.abs());
            p - g
        })
        .collect();
    if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
        return Err(NumError::ExtrapolationFailure(format!(
            "non-finite ladder value at N = {}",
            points[bad]
        )));
    }
    let ext = match ladder.model {
        LimitModel::Poly => richardson(&values, input_scale, 2.0, |j| j as f64),
        LimitModel::PolyLog { log_power } => {
            let q = log_power as usize + 1;
            let ns: Vec<f64> = points.iter().map(|&n| n as f64).collect();
            basis_fit(&ns, &values, input_scale, |i, n| {
                let j = (i / q + 1) as i32;
                let p = (log_power as usize - i % q) as i32;
                n.ln().powi(p) / n.powi(j)
            })
        }
    };
    if ext.diverging {
        return Err(NumError::ExtrapolationFailure(format!(
            "ladder extrapolants diverge (last change {:e})",
            ext.err
        )));
    }
    let work = points.iter().sum();
    Ok(Approximation::new(ext.value, ext.err, work))
}
