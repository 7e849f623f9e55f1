//! Fixed quadrature rules.

use std::sync::OnceLock;

/// Gauss–Kronrod 21-point abscissae on [−1, 1] (non-negative half,
/// descending); odd indices are the 10-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// One Kronrod panel: integral estimate, error estimate, ∫|f| estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Panel {
    pub value: f64,
    pub err: f64,
    pub abs: f64,
    /// Set when the integrand returned a non-finite value.
    pub bad: bool,
}

/// 21-point Kronrod estimate with the QUADPACK error heuristic.
pub(crate) fn gk21(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut bad = !fc.is_finite();
    let mut kron = fc * WGK[10];
    let mut gauss = 0.0;
    let mut abs = fc.abs() * WGK[10];
    let mut f1 = [0.0; 10];
    let mut f2 = [0.0; 10];
    for j in 0..10 {
        let dx = h * XGK[j];
        let (y1, y2) = (f(c - dx), f(c + dx));
        bad |= !y1.is_finite() || !y2.is_finite();
        f1[j] = y1;
        f2[j] = y2;
        kron += WGK[j] * (y1 + y2);
        abs += WGK[j] * (y1.abs() + y2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (y1 + y2);
        }
    }
    let mean = 0.5 * kron;
    let mut asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        asc += WGK[j] * ((f1[j] - mean).abs() + (f2[j] - mean).abs());
    }
    let value = kron * h;
    let abs = abs * h.abs();
    let asc = asc * h.abs();
    let mut err = ((kron - gauss) * h).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * abs;
    if abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(floor);
    }
    Panel {
        value,
        err,
        abs,
        bad,
    }
}

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration, n ≥ 2.
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn gl15() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(15))
}

/// 15-point Gauss–Legendre estimate on [a, b].
pub(crate) fn gauss15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (x, w) = gl15();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    h * x
        .iter()
        .zip(w)
        .map(|(&xi, &wi)| wi * f(c + h * xi))
        .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_nodes_match_kronrod_gauss_subset() {
        let (x, w) = gauss_legendre(10);
        for j in 0..5 {
            let node = XGK[2 * j + 1];
            assert!((x[9 - j] - node).abs() < 1e-15);
            assert!((w[9 - j] - WG[j]).abs() < 1e-15);
        }
    }

    #[test]
    fn gauss15_is_exact_for_degree_29() {
        let f = |x: f64| x.powi(28) + x.powi(29);
        let v = gauss15(&f, -1.0, 1.0);
        assert!((v - 2.0 / 29.0).abs() < 1e-14);
        let (_, w) = gauss_legendre(15);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn kronrod_on_polynomial() {
        let p = gk21(&|x: f64| 3.0 * x * x, 0.0, 2.0);
        assert!((p.value - 8.0).abs() < 1e-13);
        assert!(!p.bad);
        let q = gk21(&|x: f64| 1.0 / x, -1.0, 1.0);
        assert!(q.bad);
    }
}
