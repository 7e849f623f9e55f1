//! Numerical building blocks shared by the catalog recipes.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Annotator, Ctx, IdentityRecord, IdentityStatus};
use crate::error::{NumError, Result};
use crate::quadrature::{
    accelerate_series_with, integrate_finite_with, integrate_oscillatory_semiinf_with,
    integrate_semiinf_decay_with, sum_unimodular, AccelMode, OscillatoryKernel, SingularEndpoints,
};
use crate::summation_engines::{regularized_limit, LimitLadder, LimitModel};

/// Builder for registry entries.
pub(super) struct Entry {
    rec: IdentityRecord,
}

impl Entry {
    pub(super) fn claimed(id: &str, tol: f64, description: &str) -> Self {
        Entry {
            rec: IdentityRecord {
                id: id.to_string(),
                description: description.to_string(),
                lhs: Box::new(|_| Ok(vec![])),
                rhs: Box::new(|_| Ok(vec![])),
                tol,
                status: IdentityStatus::Claimed,
                reference: String::new(),
                samples: Vec::new(),
                rationale: String::new(),
                annotate: None,
            },
        }
    }

    pub(super) fn disputed(id: &str, description: &str) -> Self {
        let mut e = Entry::claimed(id, f64::NAN, description);
        e.rec.status = IdentityStatus::Disputed;
        e
    }

    pub(super) fn reference(mut self, r: &str) -> Self {
        self.rec.reference = r.to_string();
        self
    }

    pub(super) fn samples<S: ToString>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.rec.samples = labels.into_iter().map(|s| s.to_string()).collect();
        self
    }

    pub(super) fn rationale(mut self, r: &str) -> Self {
        self.rec.rationale = r.to_string();
        self
    }

    pub(super) fn annotate(
        mut self,
        a: impl Fn(&Ctx, &[f64], &[f64]) -> String + Send + Sync + 'static,
    ) -> Self {
        let a: Annotator = Box::new(a);
        self.rec.annotate = Some(a);
        self
    }

    pub(super) fn sides(
        mut self,
        lhs: impl Fn(&Ctx) -> Result<Vec<f64>> + Send + Sync + 'static,
        rhs: impl Fn(&Ctx) -> Result<Vec<f64>> + Send + Sync + 'static,
    ) -> IdentityRecord {
        self.rec.lhs = Box::new(lhs);
        self.rec.rhs = Box::new(rhs);
        self.rec
    }
}

/// Evaluates `f` at every sample, stopping at the first failure.
pub(super) fn each<T: Copy>(samples: &[T], f: impl Fn(T) -> Result<f64>) -> Result<Vec<f64>> {
    samples.iter().map(|&s| f(s)).collect()
}

/// Σ_{n≥1}|B_2k|/(2(2k)!) = Σ (2πn)^{−2k} for k = 1, 2, 3.
const INVERSE_EVEN_POWER_SUMS: [f64; 3] = [1.0 / 24.0, 1.0 / 1440.0, 1.0 / 60480.0];
const MODE_CAP: usize = 400;

/// Keeps the best estimate of a budget-limited computation; the entry's
/// comparison decides whether it is good enough.
pub(super) fn best_effort<T>(r: Result<T>, best: impl FnOnce(f64) -> T) -> Result<T> {
    match r {
        Err(NumError::BudgetExceeded { best: b, .. }) if b.is_finite() => Ok(best(b)),
        other => other,
    }
}

/// Σ_{n≥1} term(n).
pub(super) fn series(ctx: &Ctx, mode: AccelMode, term: impl Fn(usize) -> f64) -> Result<f64> {
    let r = accelerate_series_with(term, mode, ctx.tol, ctx.cfg.max_terms).map(|a| a.value);
    best_effort(r, |b| b)
}

/// Σ_{n≥1} w(n) e^{inθ}.
pub(super) fn fourier(ctx: &Ctx, theta: f64, w: impl Fn(usize) -> f64) -> Result<Complex64> {
    let r = sum_unimodular(
        |n| Complex64::from_polar(w(n), n as f64 * theta),
        ctx.tol,
        ctx.cfg.max_terms,
    );
    Ok(r?.0)
}

pub(super) fn finite(
    ctx: &Ctx,
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    sing: SingularEndpoints,
) -> Result<f64> {
    let r = integrate_finite_with(f, a, b, ctx.tol, sing, &ctx.cfg.quad).map(|q| q.value);
    best_effort(r, |b| b)
}

pub(super) fn semiinf(ctx: &Ctx, f: impl Fn(f64) -> f64, a: f64) -> Result<f64> {
    let r = integrate_semiinf_decay_with(f, a, ctx.tol, &ctx.cfg.quad).map(|q| q.value);
    best_effort(r, |b| b)
}

pub(super) fn oscillatory(
    ctx: &Ctx,
    f: impl Fn(f64) -> f64,
    kernel: OscillatoryKernel,
    tol: f64,
) -> Result<f64> {
    let r = integrate_oscillatory_semiinf_with(f, kernel, 0.0, tol, &ctx.cfg.quad).map(|q| q.value);
    best_effort(r, |b| b)
}

/// ∫₀^∞ f for integrands decaying like 1/u² whose evaluation cancels at
/// large u: ∫₀^X by finite quadrature, then Richardson in X along the
/// ladder 16, 32, …, 512. `log_left` flags an integrable singularity at 0.
pub(super) fn slow_tail_integral(ctx: &Ctx, f: impl Fn(f64) -> f64, log_left: bool) -> Result<f64> {
    let ladder = LimitLadder::new(16, 5, LimitModel::Poly);
    let points = ladder.points();
    let sing = if log_left {
        SingularEndpoints::LEFT
    } else {
        SingularEndpoints::NONE
    };
    let piece_tol = Ctx {
        tol: ctx.tol / 8.0,
        ..*ctx
    };
    let mut prefix = finite(&piece_tol, &f, 0.0, 1.0, sing)?
        + finite(
            &piece_tol,
            &f,
            1.0,
            points[0] as f64,
            SingularEndpoints::NONE,
        )?;
    let mut at = vec![prefix];
    for w in points.windows(2) {
        prefix += finite(
            &piece_tol,
            &f,
            w[0] as f64,
            w[1] as f64,
            SingularEndpoints::NONE,
        )?;
        at.push(prefix);
    }
    let r = regularized_limit(
        |n| at[points.iter().position(|&p| p == n).expect("ladder point")],
        |_| 0.0,
        &ladder,
    )?;
    Ok(r.value)
}

/// Σ_{n≥1} ∫₀^∞ f(x) cos 2πnx dx from the odd derivatives f′(0), f‴(0),
/// f⁽⁵⁾(0) and the sixth derivative `f6`. Six integrations by parts give
/// ∫₀^∞ f cos ωx = Σ_k (−1)^k f^{(2k−1)}(0)/ω^{2k} − ω^{−6} ∫₀^∞ f⁽⁶⁾ cos ωx;
/// the boundary terms are summed in closed form and the remainders, which
/// decay like n^{−8}, directly. For f growing at infinity this is the Abel
/// value of each mode.
pub(super) fn cosine_mode_sum(ctx: &Ctx, f6: impl Fn(f64) -> f64, odd: [f64; 3]) -> Result<f64> {
    let closed = -odd[0] * INVERSE_EVEN_POWER_SUMS[0] + odd[1] * INVERSE_EVEN_POWER_SUMS[1]
        - odd[2] * INVERSE_EVEN_POWER_SUMS[2];
    let mode_tol = ctx.tol / 64.0;
    let mut sum = 0.0;
    let mut quiet = 0;
    for n in 1..=MODE_CAP {
        let w = 2.0 * PI * n as f64;
        let w6 = w.powi(6);
        let rem = -oscillatory(ctx, &f6, OscillatoryKernel::cosine(w), mode_tol * w6)? / w6;
        sum += rem;
        // tail of an n^{−8} sequence beyond n is about n·|rem|/7
        if n >= 4 && rem.abs() * n as f64 / 7.0 < 0.1 * ctx.tol {
            quiet += 1;
            if quiet >= 2 {
                return Ok(closed + sum);
            }
        } else {
            quiet = 0;
        }
    }
    Ok(closed + sum)
}
