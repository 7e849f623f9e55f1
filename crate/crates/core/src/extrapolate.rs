//! Richardson tables and small dense solves shared by the limit and
//! series-acceleration code.

const EPS: f64 = f64::EPSILON;
const SETTLED: f64 = 1e-10;

/// Result of an extrapolation: estimate, error estimate and whether the
/// diagonal looked like it was diverging rather than settling.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Extrapolated {
    pub value: f64,
    pub err: f64,
    pub diverging: bool,
}

/// Richardson table for values v_k taken at N_k = N_0·ratio^k, assuming
/// v_k = L + Σ_j c_j N_k^{−λ_j}. `exponents(j)` returns λ_j for j ≥ 1.
/// `input_scale` bounds the magnitude of the quantities whose difference
/// produced the values; it sets the rounding floor.
pub(crate) fn richardson(
    values: &[f64],
    input_scale: f64,
    ratio: f64,
    exponents: impl Fn(usize) -> f64,
) -> Extrapolated {
    let n = values.len();
    assert!(n >= 1);
    let mut row: Vec<f64> = values.to_vec();
    let mut diag = vec![values[0]];
    // rounding amplification of the table: Π (r^λ + 1)/(r^λ − 1)
    let mut amp = 1.0;
    // After pass j, row[k] holds T_{k+j, j}.
    for j in 1..n {
        let f = ratio.powf(exponents(j)) - 1.0;
        amp *= (f + 2.0) / f;
        let next: Vec<f64> = row.windows(2).map(|w| w[1] + (w[1] - w[0]) / f).collect();
        diag.push(*next.last().unwrap());
        row = next;
    }
    let expected = ratio.powf(-exponents(1));
    finish(&diag, values, input_scale, amp, 0.5 * (1.0 + expected))
}

/// `amp` is the rounding amplification of the table; the raw sequence is
/// flagged as diverging when its last step shrinks by less than
/// `max_ratio` relative to the previous step.
fn finish(
    diag: &[f64],
    values: &[f64],
    input_scale: f64,
    amp: f64,
    max_ratio: f64,
) -> Extrapolated {
    let scale = values.iter().fold(input_scale, |m, v| m.max(v.abs()));
    let d = diag.len() - 1;
    let value = diag[d];
    let noise = 16.0 * EPS * scale * amp;
    if d == 0 {
        return Extrapolated {
            value,
            err: f64::INFINITY,
            diverging: false,
        };
    }
    let last = (diag[d] - diag[d - 1]).abs();
    let n = values.len();
    let diverging = n >= 3 && {
        let s1 = (values[n - 1] - values[n - 2]).abs();
        let s0 = (values[n - 2] - values[n - 3]).abs();
        // steps this small are settled whatever their trend
        s1 > noise.max(SETTLED * scale) && s1 > max_ratio * s0
    };
    Extrapolated {
        value,
        err: last.max(noise),
        diverging,
    }
}

/// Solves a dense square system by Gaussian elimination with partial
/// pivoting. Returns None when singular.
pub(crate) fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                let (top, bottom) = a.split_at_mut(r);
                for (x, &p) in bottom[0][col..n].iter_mut().zip(&top[col][col..n]) {
                    *x -= f * p;
                }
                b[r] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Fits v_k = L + Σ c_i φ_i(N_k) with as many basis functions as points
/// allow and returns L, for every prefix length ≥ 1; the sequence of
/// limits is then judged like a Richardson diagonal.
pub(crate) fn basis_fit(
    ns: &[f64],
    values: &[f64],
    input_scale: f64,
    basis: impl Fn(usize, f64) -> f64,
) -> Extrapolated {
    let n = values.len();
    let mut diag = Vec::with_capacity(n);
    for m in 1..=n {
        // use the last m points
        let off = n - m;
        let a: Vec<Vec<f64>> = (0..m)
            .map(|r| {
                let x = ns[off + r];
                let mut row = vec![1.0];
                row.extend((0..m - 1).map(|i| basis(i, x)));
                row
            })
            .collect();
        let b = values[off..].to_vec();
        match solve_dense(a, b) {
            Some(sol) => diag.push(sol[0]),
            None => break,
        }
    }
    // log factors in the basis slow the raw decay, hence the loose ratio
    finish(
        &diag,
        values,
        input_scale,
        (1usize << n.min(20)) as f64,
        0.9,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn richardson_removes_power_terms() {
        // v(N) = 2 + 3/N − 5/N² + 7/N³
        let ns: Vec<f64> = (0..5).map(|k| 8.0 * 2f64.powi(k)).collect();
        let v: Vec<f64> = ns
            .iter()
            .map(|n| 2.0 + 3.0 / n - 5.0 / (n * n) + 7.0 / n.powi(3))
            .collect();
        let r = richardson(&v, 0.0, 2.0, |j| j as f64);
        assert!((r.value - 2.0).abs() < 1e-13);
        assert!(!r.diverging);
    }

    #[test]
    fn basis_fit_with_logs() {
        let ns: Vec<f64> = (0..6).map(|k| 8.0 * 2f64.powi(k)).collect();
        let v: Vec<f64> = ns
            .iter()
            .map(|n| 1.5 + n.ln() / n + 0.25 / n - n.ln() / (n * n))
            .collect();
        let r = basis_fit(&ns, &v, 0.0, |i, n| {
            let (j, p) = (i / 2 + 1, 1 - (i % 2) as i32);
            n.ln().powi(p) / n.powi(j as i32)
        });
        assert!((r.value - 1.5).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn dense_solve() {
        let x = solve_dense(vec![vec![2.0, 1.0], vec![1.0, 3.0]], vec![3.0, 5.0]).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-15 && (x[1] - 1.4).abs() < 1e-15);
        assert!(solve_dense(vec![vec![1.0, 2.0], vec![2.0, 4.0]], vec![1.0, 2.0]).is_none());
    }
}
