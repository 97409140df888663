//! Bundled property checks over the whole crate, grouped into named suites
//! so they can be driven from a command line and reported uniformly.
//!
//! Each suite returns a list of [`PropertyCheck`] records; a record counts
//! how many instances were examined and carries either a confirmation or the
//! first counterexample found.

use std::collections::HashSet;
use std::f64::consts::LN_2;

use num_bigint::BigUint;

use crate::asym::{
    diagonal_estimate, in_sector, log_estimate_block, log_of_count, positivity_factor,
    q_general, q_specialized, ratio_to_saddle, saddle_point, saddle_to_ratio,
    strict_minimality_check,
};
use crate::bijection::{
    descent_to_excedance, encode_cycle_orbit, excedance_to_descent, is_exceptional_cycle,
    resolve_exceptional_cycle, unroll_cycle,
};
use crate::count::{
    count_block_word, count_stretch_free_cycles, count_stretch_free_cycles_bruteforce,
    count_vincular_avoiders_bruteforce, count_word_bruteforce, factorial, full_cycles,
    permutations, word_distribution,
};
use crate::series::{coeff_to_count, egf_coefficients};
use crate::{Error, Result};

/// Result of one verified property.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub instances: usize,
    pub passed: bool,
    pub detail: String,
}

impl PropertyCheck {
    fn from_failure(name: &'static str, instances: usize, failure: Option<String>, ok: String) -> Self {
        match failure {
            Some(detail) => PropertyCheck {
                name,
                instances,
                passed: false,
                detail,
            },
            None => PropertyCheck {
                name,
                instances,
                passed: true,
                detail: ok,
            },
        }
    }
}

/// The available check suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijections,
    Counting,
    Minimality,
    Series,
    Monotone,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Suite> {
        match name {
            "bijections" => Ok(Suite::Bijections),
            "counting" => Ok(Suite::Counting),
            "minimality" => Ok(Suite::Minimality),
            "series" => Ok(Suite::Series),
            "monotone" => Ok(Suite::Monotone),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?}; expected bijections, counting, minimality, series, or monotone"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Counting => "counting",
            Suite::Minimality => "minimality",
            Suite::Series => "series",
            Suite::Monotone => "monotone",
        }
    }

    /// Size budget used when the caller does not give one.  Enumeration
    /// suites read it as the largest ground set; minimality as the angular
    /// sample count; monotone as the largest comparison size.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Bijections | Suite::Counting | Suite::Series => 7,
            Suite::Minimality => 10_000,
            Suite::Monotone => 400,
        }
    }
}

pub fn run_suite(suite: Suite, max_n: usize) -> Vec<PropertyCheck> {
    match suite {
        Suite::Bijections => suite_bijections(max_n),
        Suite::Counting => suite_counting(max_n),
        Suite::Minimality => suite_minimality(max_n),
        Suite::Series => suite_series(max_n),
        Suite::Monotone => suite_monotone(max_n),
    }
}

pub fn all_passed(checks: &[PropertyCheck]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn prefix_len(sorted: &[usize]) -> Option<usize> {
    sorted
        .iter()
        .enumerate()
        .all(|(k, &v)| v == k + 1)
        .then_some(sorted.len())
}

fn suite_bijections(max_n: usize) -> Vec<PropertyCheck> {
    let cap = max_n.clamp(2, 9);
    let mut checks = Vec::new();

    let mut instances = 0;
    let mut failure = None;
    'transfer: for n in 1..=cap {
        for p in permutations(n) {
            instances += 1;
            let q = excedance_to_descent(&p);
            if p.excedance_set() != q.descent_bottoms() || descent_to_excedance(&q) != p {
                failure = Some(format!("mismatch at {p}"));
                break 'transfer;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "excedance set transfers to descent bottoms, invertibly",
        instances,
        failure,
        format!("all of S_1 .. S_{cap}"),
    ));

    let mut instances = 0;
    let mut failure = None;
    'orbit: for m in 2..=cap {
        let mut images = HashSet::new();
        for c in full_cycles(m) {
            instances += 1;
            let image = match encode_cycle_orbit(&c) {
                Ok(image) => image,
                Err(e) => {
                    failure = Some(format!("encoding failed at {c}: {e}"));
                    break 'orbit;
                }
            };
            let exc = prefix_len(&c.excedance_set());
            let bottoms = prefix_len(&image.descent_bottoms());
            let prefix_ok = match (exc, bottoms) {
                (Some(l), Some(k)) => k + 1 == l,
                (None, None) => true,
                _ => false,
            };
            if !prefix_ok {
                failure = Some(format!("prefix transfer failed at cycle {c}"));
                break 'orbit;
            }
            images.insert(image);
        }
        if failure.is_none() && images.len() != full_cycles(m).count() {
            failure = Some(format!("images collide on {m}-element cycles"));
            break 'orbit;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "orbit encoding is injective and trades excedance prefixes for descent-bottom prefixes",
        instances,
        failure,
        format!("all full cycles on up to {cap} elements"),
    ));

    let mut instances = 0;
    let mut failure = None;
    'unroll: for m in 2..=cap {
        for c in full_cycles(m) {
            instances += 1;
            let in_domain = !c.has_stretching_pair()
                || is_exceptional_cycle(&c).expect("full cycle");
            let avoids = unroll_cycle(&c)
                .expect("full cycle")
                .avoids_both_vincular_patterns();
            if in_domain != avoids {
                failure = Some(format!("avoidance mismatch at cycle {c}"));
                break 'unroll;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "unrolling maps stretch-free and exceptional cycles exactly onto vincular avoiders",
        instances,
        failure,
        format!("all full cycles on up to {cap} elements"),
    ));

    let mut instances = 0;
    let mut failure = None;
    'resolve: for m in 3..=cap {
        let mut images = HashSet::new();
        let mut domain = 0;
        for c in full_cycles(m) {
            if !is_exceptional_cycle(&c).expect("full cycle") {
                continue;
            }
            instances += 1;
            domain += 1;
            let image = match resolve_exceptional_cycle(&c) {
                Ok(image) => image,
                Err(e) => {
                    failure = Some(format!("resolution failed at {c}: {e}"));
                    break 'resolve;
                }
            };
            if !image.is_full_cycle() || image.has_stretching_pair() {
                failure = Some(format!("image of {c} is not a stretch-free cycle"));
                break 'resolve;
            }
            images.insert(image);
        }
        if failure.is_none() && images.len() != domain {
            failure = Some(format!("resolution not injective on {m}-element cycles"));
            break 'resolve;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "exceptional cycles resolve injectively to stretch-free cycles one size up",
        instances,
        failure,
        format!("all exceptional cycles on up to {cap} elements"),
    ));

    checks
}

fn suite_counting(max_n: usize) -> Vec<PropertyCheck> {
    let cap = max_n.clamp(2, 8);
    let mut checks = Vec::new();

    let mut instances = 0;
    let mut failure = None;
    for n in 1..=cap {
        let dist = word_distribution(n, cap).expect("within limit");
        instances += 1;
        let total: BigUint = dist.values().cloned().sum();
        if dist.len() != 1 << (n - 1) || total != factorial(n) {
            failure = Some(format!("distribution over S_{n} is incomplete"));
            break;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "word distribution covers every word and sums to n!",
        instances,
        failure,
        format!("S_1 .. S_{cap}"),
    ));

    let mut instances = 0;
    let mut failure = None;
    'blocks: for b_run in 0..cap {
        for a_run in 0..cap - b_run {
            instances += 1;
            let word = crate::perm::ExcedanceWord::block(b_run, a_run);
            let brute = count_word_bruteforce(&word, cap).expect("within limit");
            if count_block_word(b_run, a_run) != brute {
                failure = Some(format!("formula disagrees at b^{b_run} a^{a_run}"));
                break 'blocks;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "block-word formula matches enumeration",
        instances,
        failure,
        format!("all block words of length < {cap}"),
    ));

    let mut instances = 0;
    let mut failure = None;
    for m in 2..=cap {
        instances += 1;
        let formula = count_stretch_free_cycles(m).expect("m >= 2");
        let brute = count_stretch_free_cycles_bruteforce(m, cap).expect("within limit");
        if formula != brute {
            failure = Some(format!("formula disagrees at m = {m}"));
            break;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "stretch-free cycle formula matches enumeration",
        instances,
        failure,
        format!("cycles on 2 .. {cap} elements"),
    ));

    let mut instances = 0;
    let mut failure = None;
    for n in 1..cap {
        instances += 1;
        let lower = count_stretch_free_cycles(n + 1).expect("n + 1 >= 2");
        let upper = count_stretch_free_cycles(n + 2).expect("n + 2 >= 2");
        let avoiders = count_vincular_avoiders_bruteforce(n, cap).expect("within limit");
        let chain = lower.clone() <= avoiders
            && avoiders <= &lower + &upper
            && &lower + &upper <= &upper + &upper;
        if !chain {
            failure = Some(format!(
                "chain fails at n = {n}: {lower} vs {avoiders} vs {upper}"
            ));
            break;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "avoider count is pinched between consecutive stretch-free counts",
        instances,
        failure,
        format!("n = 1 .. {}", cap - 1),
    ));

    checks
}

fn suite_series(max_n: usize) -> Vec<PropertyCheck> {
    let cap = max_n.clamp(2, 10);
    let mut checks = Vec::new();
    let table = egf_coefficients(cap + 1, cap);

    let mut instances = 0;
    let mut failure = None;
    'integral: for r in 1..=cap + 1 {
        for s in 0..=cap {
            instances += 1;
            if coeff_to_count(r, s, &table).is_err() {
                failure = Some(format!("coefficient at ({r}, {s}) is not integral"));
                break 'integral;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "series coefficients clear to non-negative integers",
        instances,
        failure,
        format!("grid r <= {}, s <= {cap}", cap + 1),
    ));

    let mut instances = 0;
    let mut failure = None;
    'stirling: for r in 1..=cap + 1 {
        for s in 0..=cap {
            instances += 1;
            let series = coeff_to_count(r, s, &table).expect("integrality checked");
            if series != count_block_word(r - 1, s) {
                failure = Some(format!("routes disagree at ({r}, {s})"));
                break 'stirling;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "generating-function route equals the Stirling route",
        instances,
        failure,
        format!("grid r <= {}, s <= {cap}", cap + 1),
    ));

    let mut instances = 0;
    let mut failure = None;
    'brute: for r in 1..=6usize {
        for s in 0..=6 - r {
            instances += 1;
            let series = coeff_to_count(r, s, &table).expect("integrality checked");
            let word = crate::perm::ExcedanceWord::block(r - 1, s);
            if series != count_word_bruteforce(&word, 7).expect("within limit") {
                failure = Some(format!("series disagrees with enumeration at ({r}, {s})"));
                break 'brute;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "generating-function route matches enumeration on small words",
        instances,
        failure,
        "words of length at most 5".into(),
    ));

    checks
}

/// Direction pairs spanning the representable saddle range, some inside and
/// some outside the sector; the most lopsided keep both coordinates inside
/// f64 range.
const GEOMETRY_DIRECTIONS: [(usize, usize); 12] = [
    (1, 1),
    (2, 1),
    (5, 4),
    (7, 3),
    (40, 11),
    (100, 100),
    (123, 4567),
    (1000, 999),
    (9999, 10000),
    (10000, 10000),
    (10000, 15),
    (15, 10000),
];

fn suite_minimality(samples: usize) -> Vec<PropertyCheck> {
    let samples = samples.max(10_000);
    let mut checks = Vec::new();

    let diagonal = strict_minimality_check(LN_2, LN_2, samples);
    checks.push(PropertyCheck::from_failure(
        "diagonal variety point is strictly minimal",
        samples,
        match diagonal {
            Ok(true) => None,
            Ok(false) => Some("a sampled angle pair reached the variety".into()),
            Err(e) => Some(format!("check unavailable: {e}")),
        },
        format!("(log 2, log 2) over about {samples} angle pairs"),
    ));

    let a = 0.6;
    let b = -(-(-0.6f64).exp()).ln_1p();
    let off_diagonal = strict_minimality_check(a, b, samples);
    checks.push(PropertyCheck::from_failure(
        "off-diagonal variety point is strictly minimal",
        samples,
        match off_diagonal {
            Ok(true) => None,
            Ok(false) => Some("a sampled angle pair reached the variety".into()),
            Err(e) => Some(format!("check unavailable: {e}")),
        },
        format!("(0.6, {b:.6}) over about {samples} angle pairs"),
    ));

    let mut failure = None;
    let mut max_residual = 0f64;
    let mut max_direction = 0f64;
    for &(r, s) in &GEOMETRY_DIRECTIONS {
        let sp = match saddle_point(r, s) {
            Ok(sp) => sp,
            Err(e) => {
                failure = Some(format!("saddle for ({r}, {s}) unavailable: {e}"));
                break;
            }
        };
        let y_identity = (sp.y - (-(-(-sp.x).exp_m1()).ln())).abs();
        if sp.variety_residual.abs() > 1e-10 || y_identity > 1e-10 * sp.y.max(1.0) {
            failure = Some(format!("variety residual too large at ({r}, {s})"));
            break;
        }
        max_residual = max_residual.max(sp.variety_residual.abs());
        let lhs = r as f64 * sp.y * (-sp.y).exp();
        let rhs = s as f64 * sp.x * (-sp.x).exp();
        let direction = (lhs - rhs).abs() / rhs.abs();
        if direction > 1e-8 {
            failure = Some(format!("direction condition fails at ({r}, {s})"));
            break;
        }
        max_direction = max_direction.max(direction);
        if sp.in_sector != in_sector(r, s)
            || (sp.in_sector && !(0.0 < sp.x && sp.x < 1.0 && 0.0 < sp.y && sp.y < 1.0))
        {
            failure = Some(format!("sector flag inconsistent at ({r}, {s})"));
            break;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "saddles sit on the variety, meet the direction condition, and respect the sector box",
        GEOMETRY_DIRECTIONS.len(),
        failure,
        format!(
            "max residual {max_residual:.2e}, max relative direction error {max_direction:.2e}"
        ),
    ));

    let mut instances = 0;
    let mut failure = None;
    'forms: for r in 1..=10usize {
        for s in 1..=10usize {
            instances += 1;
            let sp = saddle_point(r, s).expect("moderate direction");
            let qs = q_specialized(sp.x, sp.y);
            let qg = q_general(sp.x, sp.y);
            if qs <= 0.0 || positivity_factor(sp.x, sp.y) <= 0.0 {
                failure = Some(format!("positivity fails at ({r}, {s})"));
                break 'forms;
            }
            if (qg - qs).abs() > 1e-10 * qs.abs() {
                failure = Some(format!("quadratic forms disagree at ({r}, {s})"));
                break 'forms;
            }
        }
    }
    checks.push(PropertyCheck::from_failure(
        "quadratic form is positive and both assemblies agree at sampled saddles",
        instances,
        failure,
        "100 directions with r, s <= 10".into(),
    ));

    checks
}

fn suite_monotone(max_n: usize) -> Vec<PropertyCheck> {
    let max_n = max_n.clamp(16, 2000);
    let mut checks = Vec::new();

    let points = 10_000usize;
    let ratio = (1e8f64).powf(1.0 / (points - 1) as f64);
    let mut t = 1e-4;
    let mut prev = f64::INFINITY;
    let mut failure = None;
    for _ in 0..points {
        match saddle_to_ratio(t) {
            Ok(v) if v < prev => prev = v,
            Ok(_) => {
                failure = Some(format!("not strictly decreasing at t = {t}"));
                break;
            }
            Err(e) => {
                failure = Some(format!("evaluation failed at t = {t}: {e}"));
                break;
            }
        }
        t *= ratio;
    }
    checks.push(PropertyCheck::from_failure(
        "direction map strictly decreases across the geometric grid",
        points,
        failure,
        "10000 points spanning [1e-4, 1e4]".into(),
    ));

    let mut failure = None;
    let mut worst = 0f64;
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let v = saddle_to_ratio(t).expect("positive t");
        let back = ratio_to_saddle(v).expect("positive ratio");
        let err = (back - t).abs() / t;
        worst = worst.max(err);
        if err > 1e-10 {
            failure = Some(format!("round trip off by {err:.2e} at t = {t}"));
            break;
        }
    }
    checks.push(PropertyCheck::from_failure(
        "inverse round-trips the direction map",
        5,
        failure,
        format!("max relative error {worst:.2e}"),
    ));

    let base = max_n / 8;
    let diag_sizes = [base, 2 * base, 4 * base, 8 * base];
    let mut failure = None;
    let mut prev = f64::INFINITY;
    let mut last = f64::NAN;
    for &n in &diag_sizes {
        let r = (n - 1) / 2 + 1;
        let s = n - r;
        let exact = log_of_count(&count_block_word(r - 1, s)).expect("positive count");
        let estimate = diagonal_estimate(n).expect("n >= 1").log_value;
        let gap = (estimate - exact).abs();
        if gap >= prev {
            failure = Some(format!("log-ratio not shrinking at n = {n}"));
            break;
        }
        prev = gap;
        last = gap;
    }
    if failure.is_none() && (last.is_nan() || last >= 0.1) {
        failure = Some(format!("final diagonal log-ratio {last} not below 0.1"));
    }
    checks.push(PropertyCheck::from_failure(
        "diagonal estimate converges monotonically to the exact count",
        diag_sizes.len(),
        failure,
        format!("sizes {diag_sizes:?}, final |log-ratio| {last:.2e}"),
    ));

    let scale = (max_n / 40).max(1);
    let ray_sizes = [9 * scale, 18 * scale, 36 * scale];
    let mut failure = None;
    let mut prev = f64::INFINITY;
    let mut last = f64::NAN;
    for &n in &ray_sizes {
        let r = 5 * n / 9;
        let s = n - r;
        let exact = log_of_count(&count_block_word(r - 1, s)).expect("positive count");
        let estimate = log_estimate_block(r, s).expect("in range").log_value;
        let gap = (estimate - exact).abs();
        if gap >= prev {
            failure = Some(format!("log-ratio not shrinking at n = {n}"));
            break;
        }
        prev = gap;
        last = gap;
    }
    if failure.is_none() && (last.is_nan() || last >= 0.1) {
        failure = Some(format!("final ray log-ratio {last} not below 0.1"));
    }
    checks.push(PropertyCheck::from_failure(
        "sector-ray estimate converges monotonically to the exact count",
        ray_sizes.len(),
        failure,
        format!("sizes {ray_sizes:?} along the 5:4 ray, final |log-ratio| {last:.2e}"),
    ));

    checks
}
