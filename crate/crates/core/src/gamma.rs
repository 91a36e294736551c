//! Gamma-family primitives: `gamma`, `log_gamma`, `digamma`, `beta`,
//! `pochhammer` and the abscissa of the minimum of Gamma on `(0, inf)`.
//!
//! `gamma` uses a 15-term Lanczos sum (g = 607/128) on `[1, 2)` and the
//! recurrence `Gamma(x + 1) = x Gamma(x)` elsewhere, so the relative error
//! stays below `1e-13` on `[1e-3, 170]`. Arguments below `0.5` go through the
//! reflection formula. The largest argument with a finite result is
//! [`GAMMA_OVERFLOW_THRESHOLD`].

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest `x` for which `gamma(x)` is finite in `f64`.
pub const GAMMA_OVERFLOW_THRESHOLD: f64 = 171.624_376_956_302_7;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// Returns true if `x` is a pole of Gamma (0, -1, -2, ...).
pub fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `sin(pi x)` with exact argument reduction, so zeros at the integers are exact.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// Lanczos evaluation of Gamma on `[1, 2)`.
fn gamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (k, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * sum
}

/// Gamma for `x >= 0.5`.
fn gamma_positive(x: f64) -> f64 {
    if x < 1.0 {
        return gamma_lanczos(x + 1.0) / x;
    }
    if x == x.floor() && x <= 171.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    let steps = (x.floor() - 1.0) as usize;
    let base = x - steps as f64;
    let mut acc = gamma_lanczos(base);
    for k in 0..steps {
        acc *= base + k as f64;
    }
    acc
}

/// The Gamma function on the real line.
///
/// Fails with [`Error::Pole`] at `0, -1, -2, ...` and with [`Error::Overflow`]
/// above [`GAMMA_OVERFLOW_THRESHOLD`].
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_OVERFLOW_THRESHOLD {
        return Err(Error::Overflow(format!(
            "gamma({x}) exceeds f64 range (threshold {GAMMA_OVERFLOW_THRESHOLD})"
        )));
    }
    if x < 0.5 {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let g = gamma_positive(1.0 - x);
        let value = PI / (sin_pi(x) * g);
        if !value.is_finite() {
            return Err(Error::Overflow(format!("gamma({x})")));
        }
        return Ok(value);
    }
    Ok(gamma_positive(x))
}

/// Stirling series for `ln Gamma(x)`, accurate for `x >= 15`.
fn log_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2
                * (1.0 / 360.0
                    - inv2
                        * (1.0 / 1260.0
                            - inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0 - inv2 * (691.0 / 360_360.0))))));
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + series
}

/// Natural logarithm of Gamma for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < 15.0 {
        Ok(gamma_positive_or_small(x).ln())
    } else {
        Ok(log_gamma_stirling(x))
    }
}

fn gamma_positive_or_small(x: f64) -> f64 {
    if x < 0.5 {
        // x > 0 here, so the reflection is pole free.
        PI / (sin_pi(x) * gamma_positive(1.0 - x))
    } else {
        gamma_positive(x)
    }
}

/// `ln|Gamma(x)|` together with the sign of `Gamma(x)`, for any non-pole real `x`.
pub(crate) fn ln_gamma_abs(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x > 0.0 {
        return Ok((log_gamma(x)?, 1.0));
    }
    // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1 - x)), 1 - x > 1
    let s = sin_pi(x);
    let ln = PI.ln() - s.abs().ln() - log_gamma(1.0 - x)?;
    Ok((ln, s.signum()))
}

/// Digamma `psi(x) = Gamma'(x) / Gamma(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    // Bernoulli tail B_2k / (2k y^2k)
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32_760.0))))));
    Ok(y.ln() - 0.5 * inv - tail - shift)
}

/// Beta function `B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)` for `x, y > 0`,
/// computed from log-gamma so large arguments do not overflow.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain(format!("beta requires positive arguments, got ({x}, {y})")));
    }
    let ln = log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?;
    Ok(ln.exp())
}

/// Rising factorial `(tau)_n = tau (tau + 1) ... (tau + n - 1)`.
///
/// A factor equal to zero means `tau` is a pole of the Gamma-ratio form
/// `Gamma(tau + n) / Gamma(tau)` and is reported as [`Error::Pole`].
pub fn pochhammer(tau: f64, n: u32) -> Result<f64> {
    let mut acc = 1.0;
    for k in 0..n {
        let factor = tau + k as f64;
        if factor == 0.0 {
            return Err(Error::Pole(tau));
        }
        acc *= factor;
    }
    if !acc.is_finite() {
        return Err(Error::Overflow(format!("pochhammer({tau}, {n})")));
    }
    Ok(acc)
}

/// Location and value of the minimum of Gamma on `(0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaMinConstant {
    pub x_star: f64,
    pub gamma_at_x_star: f64,
}

/// Finds the minimizer of Gamma on `(0, inf)` as the root of digamma in `(1, 2)`.
pub fn find_gamma_min() -> Result<GammaMinConstant> {
    let (mut lo, mut hi) = (1.0_f64, 2.0_f64);
    let (flo, fhi) = (digamma(lo)?, digamma(hi)?);
    if flo.signum() == fhi.signum() {
        return Err(Error::Convergence("digamma does not change sign on (1, 2)".into()));
    }
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if digamma(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x_star = 0.5 * (lo + hi);
    Ok(GammaMinConstant {
        x_star,
        gamma_at_x_star: gamma(x_star)?,
    })
}

/// Abscissa of the minimum of Gamma, to double precision.
pub fn x_star() -> f64 {
    use std::sync::OnceLock;
    static X_STAR: OnceLock<f64> = OnceLock::new();
    *X_STAR.get_or_init(|| {
        find_gamma_min()
            .expect("digamma changes sign on (1, 2)")
            .x_star
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-15);
        assert!(rel(gamma(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
        assert!((gamma(1.461632144).unwrap() - 0.885603).abs() < 1e-6);
    }

    #[test]
    fn gamma_matches_high_precision_references() {
        // mpmath, 30 digits
        let cases = [
            (1e-3, 999.423_772_484_595_47),
            (0.1, 9.513_507_698_668_731_8),
            (1.3, 0.897_470_696_306_277_19),
            (2.7, 1.544_685_845_850_593_8),
            (7.25, 1_155.381_013_919_989_7),
            (33.3, 7.487_577_596_522_706_6e35),
            (100.5, 9.320_963_104_082_716_6e156),
            (170.0, 4.269_068_009_004_705_3e304),
            (-2.5, -0.945_308_720_482_941_88),
        ];
        for (x, expected) in cases {
            let got = gamma(x).unwrap();
            assert!(rel(got, expected) < 1e-13, "gamma({x}) = {got}, expected {expected}");
        }
    }

    #[test]
    fn gamma_rejects_poles_and_overflow() {
        assert_eq!(gamma(0.0), Err(Error::Pole(0.0)));
        assert_eq!(gamma(-3.0), Err(Error::Pole(-3.0)));
        assert!(matches!(gamma(172.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn reflection_and_recurrence() {
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let prod = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * sin_pi(x) / PI;
            assert!((prod - 1.0).abs() < 1e-10, "x = {x}: {prod}");
        }
        let mut x = 0.1;
        while x <= 50.0 {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "x = {x}");
            x += 0.37;
        }
    }

    #[test]
    fn log_gamma_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        assert!((log_gamma(10.0).unwrap() - 362_880f64.ln()).abs() < 1e-14);
        assert!(matches!(log_gamma(0.0), Err(Error::Domain(_))));
        assert!(matches!(log_gamma(-1.5), Err(Error::Domain(_))));
        let mut x = 0.01;
        while x < 170.0 {
            let a = log_gamma(x).unwrap().exp();
            let b = gamma(x).unwrap();
            assert!(rel(a, b) < 1e-12, "x = {x}");
            x *= 1.17;
        }
    }

    #[test]
    fn ln_gamma_abs_tracks_sign() {
        for &x in &[-0.5, -1.5, -2.5, -3.25, 0.3, 4.0] {
            let (ln, sign) = ln_gamma_abs(x).unwrap();
            let g = gamma(x).unwrap();
            assert_eq!(sign, g.signum());
            assert!(rel(ln.exp(), g.abs()) < 1e-13, "x = {x}");
        }
        assert_eq!(ln_gamma_abs(-2.0), Err(Error::Pole(-2.0)));
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        let d1 = digamma(1.0).unwrap();
        assert!((d1 + euler).abs() < 1e-15, "{:e}", d1 + euler);
        assert!((digamma(2.0).unwrap() - (digamma(1.0).unwrap() + 1.0)).abs() < 1e-15);
        assert!((digamma(0.5).unwrap() - (-euler - 2.0 * 2f64.ln())).abs() < 1e-14);
        assert!(matches!(digamma(0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn digamma_matches_log_gamma_difference() {
        let h = 1e-5;
        for i in 1..60 {
            let x = 0.25 * i as f64;
            let fd = (log_gamma(x + h).unwrap() - log_gamma(x - h).unwrap()) / (2.0 * h);
            assert!((fd - digamma(x).unwrap()).abs() < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn beta_values() {
        assert!((beta(1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(rel(beta(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-14);
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-14);
        assert_eq!(beta(0.3, 7.1).unwrap(), beta(7.1, 0.3).unwrap());
        let g = gamma(2.5).unwrap() * gamma(3.75).unwrap() / gamma(6.25).unwrap();
        assert!(rel(beta(2.5, 3.75).unwrap(), g) < 1e-12);
        assert!(matches!(beta(0.0, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(1.0, 5).unwrap(), 120.0);
        assert_eq!(pochhammer(0.37, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(2.5, 3).unwrap(), 39.375);
        assert_eq!(pochhammer(-2.0, 4), Err(Error::Pole(-2.0)));
        assert_eq!(pochhammer(-2.0, 2).unwrap(), 2.0);
        let g = gamma(1.7 + 6.0).unwrap() / gamma(1.7).unwrap();
        assert!(rel(pochhammer(1.7, 6).unwrap(), g) < 1e-13);
    }

    #[test]
    fn gamma_minimum() {
        let m = find_gamma_min().unwrap();
        assert!((m.x_star - 1.461632144).abs() <= 1e-6);
        assert!(digamma(m.x_star).unwrap().abs() <= 1e-8);
        assert!(m.gamma_at_x_star < gamma(1.4).unwrap());
        assert!(m.gamma_at_x_star < gamma(1.5).unwrap());
        assert_eq!(x_star(), m.x_star);
    }

    #[test]
    fn gamma_minimum_matches_golden_section() {
        let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
        let (mut a, mut b) = (1.0_f64, 2.0_f64);
        while b - a > 1e-9 {
            let c = b - inv_phi * (b - a);
            let d = a + inv_phi * (b - a);
            if gamma(c).unwrap() < gamma(d).unwrap() {
                b = d;
            } else {
                a = c;
            }
        }
        let golden = 0.5 * (a + b);
        let m = find_gamma_min().unwrap();
        // Gamma is flat at its minimum, so the golden-section abscissa is only
        // good to about sqrt(eps).
        assert!((golden - m.x_star).abs() < 1e-6);
        assert!((gamma(golden).unwrap() - m.gamma_at_x_star).abs() < 1e-14);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pochhammer_step(tau in 0.01f64..20.0, n in 0u32..30) {
                let a = pochhammer(tau, n).unwrap();
                let b = pochhammer(tau, n + 1).unwrap();
                prop_assert_eq!(b, a * (tau + n as f64));
            }

            #[test]
            fn beta_symmetric(x in 0.01f64..50.0, y in 0.01f64..50.0) {
                prop_assert_eq!(beta(x, y).unwrap(), beta(y, x).unwrap());
            }
        }
    }
}
