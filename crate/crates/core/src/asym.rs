//! Saddle-point asymptotics for block-word counts.
//!
//! The generating function of the counts has singular variety
//! `e^{-x} + e^{-y} = 1`.  The saddle direction map
//!
//! ```text
//! f(t) = (1 - e^t) log(1 - e^{-t}) / t
//! ```
//!
//! is a strictly decreasing bijection of the positive reals; inverting it at
//! the direction ratios `s/r` and `r/s` places the saddle `(x, y)` on the
//! variety.  The estimate for `count_block_word(r - 1, s)` is then, in log
//! scale,
//!
//! ```text
//! ln r! + ln s! - y - (1/2) ln 2pi - r ln x - s ln y
//!                + (1/2) ln(y e^{-y} / (s Q(x, y))),
//! ```
//!
//! where `Q` is the quadratic form of the singularity.  On the diagonal the
//! saddle is `(log 2, log 2)` and the estimate collapses to
//! `C (1/(2 log 2))^n n!` with `C = 1/(2 log 2 sqrt(1 - log 2))`.
//!
//! Everything here is plain `f64`; estimates stay in log scale because the
//! linear values overflow near `n = 170`.  Counts enter only through
//! [`log_of_count`], which reads an exact big integer to 1e-12 relative.

use std::f64::consts::{E, LN_2, PI, TAU};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// Lower edge of the direction sector, `(e - 1)(1 - log(e - 1))`, which is
/// also `f(1)`.  Directions with `s/r` between this and its reciprocal have
/// saddles inside the open unit square.
pub fn sector_bound() -> f64 {
    (E - 1.0) * (1.0 - (E - 1.0).ln())
}

/// Whether the direction `s/r` lies within the sector.
pub fn in_sector(r: usize, s: usize) -> bool {
    assert!(r >= 1 && s >= 1, "directions need positive r and s");
    let ratio = s as f64 / r as f64;
    let bound = sector_bound();
    ratio >= bound && ratio <= 1.0 / bound
}

/// The direction map `f(t) = (1 - e^t) log(1 - e^{-t}) / t`, evaluated with
/// branch-specific forms so the result stays accurate over the whole line:
/// near zero `log(1 - e^{-t})` is split as `log t + log((1 - e^{-t})/t)`;
/// for large `t` the product is rewritten as `(1 - u)(1 + u/2 + u^2/3)/t`
/// with `u = e^{-t}`, which survives past the overflow of `e^t`.
pub fn saddle_to_ratio(t: f64) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!(
            "saddle coordinate must be a positive real, got {t}"
        )));
    }
    let value = if t < 1e-6 {
        let near_one = -(-t).exp_m1() / t;
        -t.exp_m1() / t * (t.ln() + near_one.ln())
    } else if t <= 1.0 {
        -t.exp_m1() * (-(-t).exp_m1()).ln() / t
    } else if t <= 30.0 {
        -t.exp_m1() * (-(-t).exp()).ln_1p() / t
    } else {
        let u = (-t).exp();
        (1.0 - u) * (1.0 + u * (0.5 + u / 3.0)) / t
    };
    Ok(value)
}

/// Inverse of [`saddle_to_ratio`]: the saddle coordinate whose direction
/// ratio is `v`, found by bracketed bisection.  The bracket starts at
/// `[min(e^-v, 0.5/v), max(2/v, 5)]` (the two asymptotic branches), expands
/// geometrically until it straddles, and bisection runs on the geometric
/// mean to 1e-13 relative, which monotonicity makes unconditionally
/// convergent.
pub fn ratio_to_saddle(v: f64) -> Result<f64> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!(
            "direction ratio must be a positive real, got {v}"
        )));
    }
    if !(1e-300..=700.0).contains(&v) {
        return Err(Error::Domain(format!(
            "direction ratio {v} puts the saddle coordinate outside f64 range"
        )));
    }
    let mut lo = (-v).exp().min(0.5 / v);
    let mut hi = (2.0 / v).max(5.0);
    while saddle_to_ratio(lo)? <= v {
        lo *= 0.5;
    }
    while saddle_to_ratio(hi)? >= v {
        hi *= 2.0;
    }
    for _ in 0..200 {
        if hi - lo <= 1e-13 * hi {
            break;
        }
        // the direct product can underflow when both ends are tiny
        let product = lo * hi;
        let mid = if product.is_normal() {
            product.sqrt()
        } else {
            ((lo.ln() + hi.ln()) * 0.5).exp()
        };
        if mid <= lo || mid >= hi {
            break;
        }
        if saddle_to_ratio(mid)? > v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A point of the variety `e^{-x} + e^{-y} = 1` matched to the direction
/// `(r, s)`.
#[derive(Debug, Clone, Copy)]
pub struct SaddlePoint {
    pub r: usize,
    pub s: usize,
    /// `x` solves `f(x) = s/r`.
    pub x: f64,
    /// `y` solves `f(y) = r/s`; equivalently `y = -log(1 - e^{-x})`.
    pub y: f64,
    /// `e^{-x} + e^{-y} - 1`; at most `1e-10` in magnitude.
    pub variety_residual: f64,
    /// Whether the direction lies in the sector, which pins `x, y` to the
    /// open unit square.
    pub in_sector: bool,
}

/// Locates the saddle for the direction `(r, s)`.
pub fn saddle_point(r: usize, s: usize) -> Result<SaddlePoint> {
    if r == 0 || s == 0 {
        return Err(Error::Domain("saddle directions need r, s >= 1".into()));
    }
    let x = ratio_to_saddle(s as f64 / r as f64)?;
    let y = ratio_to_saddle(r as f64 / s as f64)?;
    Ok(SaddlePoint {
        r,
        s,
        x,
        y,
        variety_residual: (-x).exp() + (-y).exp() - 1.0,
        in_sector: in_sector(r, s),
    })
}

/// The quadratic form of the singularity in its reduced shape
/// `Q(x, y) = xy e^{-x-y} [y e^{-y} + x e^{-x} - xy(e^{-y} + e^{-x})]`.
pub fn q_specialized(x: f64, y: f64) -> f64 {
    let ex = (-x).exp();
    let ey = (-y).exp();
    x * y * ex * ey * (y * ey + x * ex - x * y * (ey + ex))
}

/// The same form assembled from the partial derivatives of
/// `H = e^{-x} + e^{-y} - 1`:
///
/// ```text
/// Q = -y^2 Hy^2 x Hx - y Hy x^2 Hx^2 - x^2 y^2 (Hy^2 Hxx + Hx^2 Hyy - 2 Hx Hy Hxy).
/// ```
///
/// For this `H` the two expressions agree identically, on and off the
/// variety; keeping both guards the reduction.
pub fn q_general(x: f64, y: f64) -> f64 {
    let hx = -(-x).exp();
    let hy = -(-y).exp();
    let hxx = (-x).exp();
    let hyy = (-y).exp();
    let hxy = 0.0;
    -y * y * hy * hy * x * hx - y * hy * x * x * hx * hx
        - x * x * y * y * (hy * hy * hxx + hx * hx * hyy - 2.0 * hx * hy * hxy)
}

/// The factor `P(x, y) = y e^{-y} + x e^{-x} - xy` whose positivity on the
/// variety makes `Q` positive there.
pub fn positivity_factor(x: f64, y: f64) -> f64 {
    y * (-y).exp() + x * (-x).exp() - x * y
}

/// A log-scale point estimate together with its additive components.
#[derive(Debug, Clone, Copy)]
pub struct LogEstimate {
    /// Natural log of the estimated count; always the exact sum of the three
    /// component fields.
    pub log_value: f64,
    /// `ln r! + ln s!` (diagonal form: `ln n!`).
    pub log_factorials: f64,
    /// `-r ln x - s ln y` (diagonal form: `n ln(1/(2 log 2))`).
    pub log_power_term: f64,
    /// `-y - (1/2) ln 2pi + (1/2) ln(y e^{-y}/(s Q))` (diagonal form: the
    /// log of the diagonal constant).
    pub log_prefactor: f64,
    /// The leading coefficient `e^{-y}` in linear scale; its log is already
    /// inside `log_prefactor`.
    pub leading_coefficient: f64,
    /// False when the direction fell outside the sector, in which case the
    /// value is extrapolation without a guarantee.
    pub in_sector: bool,
}

impl LogEstimate {
    /// Renders the linear-scale value as (mantissa in `[1, 10)`, power of
    /// ten), the only linear form that survives factorial growth.
    pub fn scientific(&self) -> (f64, i64) {
        scientific_from_log(self.log_value)
    }
}

/// Splits `exp(log_value)` into mantissa and decimal exponent.
pub fn scientific_from_log(log_value: f64) -> (f64, i64) {
    let log10 = log_value / std::f64::consts::LN_10;
    let mut exponent = log10.floor() as i64;
    let mut mantissa = 10f64.powf(log10 - exponent as f64);
    if mantissa >= 10.0 {
        mantissa /= 10.0;
        exponent += 1;
    }
    if mantissa < 1.0 {
        mantissa *= 10.0;
        exponent -= 1;
    }
    (mantissa, exponent)
}

/// Log-scale saddle-point estimate of `count_block_word(r - 1, s)`.
pub fn log_estimate_block(r: usize, s: usize) -> Result<LogEstimate> {
    let sp = saddle_point(r, s)?;
    let q = q_specialized(sp.x, sp.y);
    let leading_coefficient = (-sp.y).exp();
    let log_factorials = ln_factorial(r) + ln_factorial(s);
    let log_power_term = -(r as f64) * sp.x.ln() - (s as f64) * sp.y.ln();
    let log_prefactor = -sp.y - 0.5 * (2.0 * PI).ln()
        + 0.5 * (sp.y * leading_coefficient / (s as f64 * q)).ln();
    Ok(LogEstimate {
        log_value: log_factorials + log_power_term + log_prefactor,
        log_factorials,
        log_power_term,
        log_prefactor,
        leading_coefficient,
        in_sector: sp.in_sector,
    })
}

/// Log-scale estimate of the stretch-free cycle count one level up: the
/// number of such cycles on `n + 1` elements is estimated by
/// `C (1/(2 log 2))^n n!` with `C = 1/(2 log 2 sqrt(1 - log 2))`.
pub fn diagonal_estimate(n: usize) -> Result<LogEstimate> {
    if n == 0 {
        return Err(Error::Domain("diagonal estimate needs n >= 1".into()));
    }
    let log_factorials = ln_factorial(n);
    let log_power_term = -(n as f64) * (2.0 * LN_2).ln();
    let constant = 1.0 / (2.0 * LN_2 * (1.0 - LN_2).sqrt());
    let log_prefactor = constant.ln();
    Ok(LogEstimate {
        log_value: log_factorials + log_power_term + log_prefactor,
        log_factorials,
        log_power_term,
        log_prefactor,
        leading_coefficient: 0.5,
        in_sector: true,
    })
}

/// Numerically validates that `(a, b)` is a strictly minimal point of the
/// variety: over a grid of about `samples` angle pairs
/// `(theta, phi) in [0, 2pi)^2`, checks
/// `Re e^{-a e^{i theta}} + Re e^{-b e^{i phi}} - 1 > 0` everywhere outside
/// a wrapped-distance `1e-3` neighborhood of `(0, 0)`, where the expression
/// vanishes exactly.
pub fn strict_minimality_check(a: f64, b: f64, samples: usize) -> Result<bool> {
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return Err(Error::Domain(format!(
            "({a}, {b}) is outside the open unit square"
        )));
    }
    let residual = (-a).exp() + (-b).exp() - 1.0;
    if residual.abs() > 1e-10 {
        return Err(Error::Domain(format!(
            "({a}, {b}) is off the variety by {residual:e}"
        )));
    }
    if samples < 100 {
        return Err(Error::Domain(format!(
            "need at least 100 samples, got {samples}"
        )));
    }
    let side = (samples as f64).sqrt().ceil() as usize;
    let step = TAU / side as f64;
    for i in 0..side {
        for j in 0..side {
            let theta = i as f64 * step;
            let phi = j as f64 * step;
            let wrapped_theta = theta.min(TAU - theta);
            let wrapped_phi = phi.min(TAU - phi);
            if wrapped_theta.hypot(wrapped_phi) < 1e-3 {
                continue;
            }
            let real_part = (-a * theta.cos()).exp() * (a * theta.sin()).cos()
                + (-b * phi.cos()).exp() * (b * phi.sin()).cos()
                - 1.0;
            if real_part <= 0.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Log-gamma for positive reals via the Stirling series after shifting the
/// argument above 10; accurate to about 1e-14 relative, comfortably inside
/// the 1e-10 contract for factorial logs.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "log-gamma needs a positive argument");
    let mut shift = 0.0;
    let mut z = x;
    while z < 10.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            + inv2
                * (-1.0 / 360.0
                    + inv2
                        * (1.0 / 1260.0
                            + inv2
                                * (-1.0 / 1680.0
                                    + inv2
                                        * (1.0 / 1188.0
                                            + inv2
                                                * (-691.0 / 360360.0
                                                    + inv2 * (1.0 / 156.0)))))));
    shift + (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series
}

/// `ln n!`, exact for `n <= 20` and by [`ln_gamma`] beyond.
pub fn ln_factorial(n: usize) -> f64 {
    if n <= 1 {
        0.0
    } else if n <= 20 {
        ((2..=n as u64).product::<u64>() as f64).ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// Natural log of a positive big integer, via the top 53 bits plus the
/// binary length; relative error around 1e-16, well inside 1e-12.
pub fn log_of_count(c: &BigUint) -> Result<f64> {
    if c.is_zero() {
        return Err(Error::Domain("log of a zero count".into()));
    }
    let bits = c.bits();
    if bits <= 53 {
        let small = c.to_u64().expect("value below 2^53") as f64;
        return Ok(small.ln());
    }
    let shift = (bits - 53) as usize;
    let top = (c >> shift).to_u64().expect("exactly 53 bits remain") as f64;
    Ok(top.ln() + shift as f64 * LN_2)
}
