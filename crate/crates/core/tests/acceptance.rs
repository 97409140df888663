//! Whole-crate acceptance run: eight behavioral criteria, each printed as a
//! single pass/fail line.  Every criterion runs even if an earlier one
//! fails, so one invocation reports the full picture.

use std::collections::HashSet;
use std::f64::consts::LN_2;

use excedance::asym::{
    diagonal_estimate, ln_factorial, log_estimate_block, log_of_count, q_general,
    q_specialized, ratio_to_saddle, saddle_point, saddle_to_ratio, strict_minimality_check,
};
use excedance::bijection::{
    descent_to_excedance, encode_cycle_orbit, excedance_to_descent, is_exceptional_cycle,
    resolve_exceptional_cycle, unroll_cycle,
};
use excedance::count::{
    count_block_word, count_stretch_free_cycles, count_stretch_free_cycles_bruteforce,
    count_vincular_avoiders_bruteforce, count_word_bruteforce, factorial, full_cycles,
    permutations, word_distribution,
};
use excedance::perm::{ExcedanceWord, Permutation};
use excedance::series::count_block_word_via_series;
use excedance::BigUint;

type Criterion = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 8] = [
        (
            "word counts agree across enumeration, formula, and series",
            words_agree_across_routes,
        ),
        (
            "stretch-free cycle formula reproduces enumeration",
            stretch_free_formula_matches,
        ),
        (
            "avoider counts are pinched by consecutive cycle counts",
            avoiders_sit_in_the_chain,
        ),
        (
            "structural maps transport statistics as stated",
            structural_maps_behave,
        ),
        (
            "diagonal estimates tighten toward exact counts",
            diagonal_estimates_tighten,
        ),
        (
            "fixed-direction estimates tighten toward exact counts",
            ray_estimates_tighten,
        ),
        (
            "diagonal growth constant emerges from cycle counts",
            growth_constant_emerges,
        ),
        (
            "saddle-point machinery is internally consistent",
            saddle_machinery_consistent,
        ),
    ];

    let mut failures = Vec::new();
    for (index, (name, criterion)) in criteria.iter().enumerate() {
        let label = index + 1;
        match criterion() {
            Ok(()) => println!("criterion {label} ({name}): pass"),
            Err(detail) => {
                println!("criterion {label} ({name}): fail");
                failures.push(format!("criterion {label}: {detail}"));
            }
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

fn check(ok: bool, detail: impl Fn() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn words_agree_across_routes() -> Result<(), String> {
    for n in 1..=8usize {
        // two independent enumeration routes, compared word by word
        let dist = word_distribution(n, 10).map_err(|e| e.to_string())?;
        for word in ExcedanceWord::all_of_len(n - 1) {
            let filtered = count_word_bruteforce(&word, 10).map_err(|e| e.to_string())?;
            check(dist.get(&word) == Some(&filtered), || {
                format!("routes disagree on word {word}")
            })?;
        }
        let total: BigUint = dist.values().cloned().sum();
        check(total == factorial(n) && dist.len() == 1 << (n - 1), || {
            format!("distribution over S_{n} is incomplete")
        })?;
        for b_run in 0..n {
            let a_run = n - 1 - b_run;
            let word = ExcedanceWord::block(b_run, a_run);
            let enumerated = dist.get(&word).cloned().unwrap_or_default();
            let formula = count_block_word(b_run, a_run);
            let series = count_block_word_via_series(b_run, a_run).map_err(|e| e.to_string())?;
            check(enumerated == formula && formula == series, || {
                format!("block word b^{b_run} a^{a_run} disagrees across routes")
            })?;
        }
    }
    for ((b_run, a_run), expect) in [((1, 1), 3u32), ((2, 1), 7), ((1, 2), 7), ((2, 2), 31)] {
        check(count_block_word(b_run, a_run) == BigUint::from(expect), || {
            format!("block word b^{b_run} a^{a_run} is not {expect}")
        })?;
    }
    Ok(())
}

fn stretch_free_formula_matches() -> Result<(), String> {
    let expected: [u64; 8] = [1, 2, 5, 16, 63, 294, 1585, 9692];
    for (m, &value) in (2..=9usize).zip(expected.iter()) {
        let formula = count_stretch_free_cycles(m).map_err(|e| e.to_string())?;
        let brute = count_stretch_free_cycles_bruteforce(m, 10).map_err(|e| e.to_string())?;
        check(formula == brute && formula == BigUint::from(value), || {
            format!("cycle count at m = {m}: formula {formula}, enumeration {brute}")
        })?;
    }
    Ok(())
}

fn avoiders_sit_in_the_chain() -> Result<(), String> {
    for n in 1..=7usize {
        let lower = count_stretch_free_cycles(n + 1).map_err(|e| e.to_string())?;
        let upper = count_stretch_free_cycles(n + 2).map_err(|e| e.to_string())?;
        let avoiders = count_vincular_avoiders_bruteforce(n, 10).map_err(|e| e.to_string())?;
        let middle = &lower + &upper;
        let top = &upper + &upper;
        check(
            lower <= avoiders && avoiders <= middle && middle <= top,
            || format!("chain fails at n = {n}: {lower} vs {avoiders} vs {middle} vs {top}"),
        )?;
        if n == 3 {
            check(
                lower == BigUint::from(5u32)
                    && avoiders == BigUint::from(6u32)
                    && middle == BigUint::from(21u32),
                || format!("expected 5 <= 6 <= 21 at n = 3, got {lower} <= {avoiders} <= {middle}"),
            )?;
        }
    }
    Ok(())
}

fn structural_maps_behave() -> Result<(), String> {
    // set-to-set transfer on whole symmetric groups
    for n in 1..=8usize {
        for p in permutations(n) {
            let q = excedance_to_descent(&p);
            check(p.excedance_set() == q.descent_bottoms(), || {
                format!("transfer misses the statistic at {p}")
            })?;
            check(descent_to_excedance(&q) == p, || {
                format!("transfer fails to invert at {p}")
            })?;
        }
    }
    let p: Permutation = "5,8,6,9,2,7,3,1,4".parse().map_err(|e: excedance::Error| e.to_string())?;
    let q = excedance_to_descent(&p);
    check(q == "8,2,5,1,7,6,3,9,4".parse().unwrap(), || {
        format!("nine-element example maps to {q}")
    })?;

    // orbit encoding: bijective onto the smaller group, prefix to prefix
    fn prefix_len(sorted: &[usize]) -> Option<usize> {
        sorted
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k + 1)
            .then_some(sorted.len())
    }
    for m in 2..=8usize {
        let mut images = HashSet::new();
        let mut domain = 0usize;
        for c in full_cycles(m) {
            domain += 1;
            let image = encode_cycle_orbit(&c).map_err(|e| e.to_string())?;
            let prefix_ok = match (
                prefix_len(&c.excedance_set()),
                prefix_len(&image.descent_bottoms()),
            ) {
                (Some(l), Some(k)) => k + 1 == l,
                (None, None) => true,
                _ => false,
            };
            check(prefix_ok, || format!("prefix transfer fails at cycle {c}"))?;
            images.insert(image);
        }
        check(images.len() == domain, || {
            format!("orbit encoding is not injective on {m}-element cycles")
        })?;
    }

    // unrolling: characterizes the avoiders
    for m in 2..=7usize {
        for c in full_cycles(m) {
            let in_domain = !c.has_stretching_pair()
                || is_exceptional_cycle(&c).map_err(|e| e.to_string())?;
            let avoids = unroll_cycle(&c)
                .map_err(|e| e.to_string())?
                .avoids_both_vincular_patterns();
            check(in_domain == avoids, || {
                format!("unrolling misclassifies cycle {c}")
            })?;
        }
    }

    // resolution: injective into stretch-free cycles one size up
    for m in 3..=7usize {
        let mut images = HashSet::new();
        let mut domain = 0usize;
        for c in full_cycles(m) {
            if !is_exceptional_cycle(&c).map_err(|e| e.to_string())? {
                continue;
            }
            domain += 1;
            let image = resolve_exceptional_cycle(&c).map_err(|e| e.to_string())?;
            check(
                image.n() == m + 1 && image.is_full_cycle() && !image.has_stretching_pair(),
                || format!("resolution of {c} leaves the target set"),
            )?;
            images.insert(image);
        }
        check(images.len() == domain, || {
            format!("resolution is not injective on {m}-element cycles")
        })?;
    }
    Ok(())
}

fn shrinking_gaps(
    rows: &[(usize, usize, usize)],
    estimates: &[f64],
    frozen: &[f64],
) -> Result<Vec<f64>, String> {
    let mut gaps = Vec::new();
    for (&(n, r, s), (&estimate, &expect)) in
        rows.iter().zip(estimates.iter().zip(frozen.iter()))
    {
        let exact = log_of_count(&count_block_word(r - 1, s)).map_err(|e| e.to_string())?;
        let gap = (estimate - exact).abs();
        check((gap - expect).abs() < 1e-6, || {
            format!("gap at n = {n} is {gap:.6}, expected about {expect:.6}")
        })?;
        gaps.push(gap);
    }
    for pair in gaps.windows(2) {
        check(pair[1] < pair[0], || {
            format!("gaps {gaps:?} fail to shrink")
        })?;
    }
    check(*gaps.last().unwrap() < 0.1, || {
        format!("final gap {} is not below 0.1", gaps.last().unwrap())
    })?;
    Ok(gaps)
}

fn diagonal_estimates_tighten() -> Result<(), String> {
    let rows: Vec<(usize, usize, usize)> = [50usize, 100, 200, 400]
        .iter()
        .map(|&n| {
            let r = (n - 1) / 2 + 1;
            (n, r, n - r)
        })
        .collect();
    let estimates: Vec<f64> = rows
        .iter()
        .map(|&(n, _, _)| diagonal_estimate(n).map(|e| e.log_value))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let frozen = [0.020_013, 0.010_147, 0.005_110, 0.002_564];
    shrinking_gaps(&rows, &estimates, &frozen)?;
    Ok(())
}

fn ray_estimates_tighten() -> Result<(), String> {
    let rows: Vec<(usize, usize, usize)> = [90usize, 180, 360, 720]
        .iter()
        .map(|&n| {
            let r = 5 * n / 9;
            (n, r, n - r)
        })
        .collect();
    let estimates: Vec<f64> = rows
        .iter()
        .map(|&(_, r, s)| log_estimate_block(r, s).map(|e| e.log_value))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let frozen = [0.018_690, 0.009_413, 0.004_724, 0.002_366];
    shrinking_gaps(&rows, &estimates, &frozen)?;
    Ok(())
}

fn growth_constant_emerges() -> Result<(), String> {
    let n = 400usize;
    let cycles = count_stretch_free_cycles(n + 1).map_err(|e| e.to_string())?;
    let log_ratio = log_of_count(&cycles).map_err(|e| e.to_string())? - ln_factorial(n);
    let root = (log_ratio / n as f64).exp();
    let target = 1.0 / (2.0 * LN_2);
    check((root - 0.726_922_454_7).abs() < 1e-6, || {
        format!("normalized 400th root is {root:.10}")
    })?;
    check((root - target).abs() < 0.02, || {
        format!("root {root:.6} strays from {target:.6}")
    })?;
    Ok(())
}

fn saddle_machinery_consistent() -> Result<(), String> {
    // the two quadratic-form assemblies agree at a grid of saddles
    for r in 1..=10usize {
        for s in 1..=10usize {
            let sp = saddle_point(r, s).map_err(|e| e.to_string())?;
            let qs = q_specialized(sp.x, sp.y);
            let qg = q_general(sp.x, sp.y);
            check(qs > 0.0 && (qg - qs).abs() <= 1e-10 * qs, || {
                format!("quadratic forms disagree at ({r}, {s}): {qg} vs {qs}")
            })?;
            check(sp.variety_residual.abs() <= 1e-10, || {
                format!("saddle for ({r}, {s}) is off the variety")
            })?;
            let direction = (r as f64 * sp.y * (-sp.y).exp()
                - s as f64 * sp.x * (-sp.x).exp())
            .abs()
                / (s as f64 * sp.x * (-sp.x).exp());
            check(direction <= 1e-8, || {
                format!("direction condition fails at ({r}, {s})")
            })?;
        }
    }

    // the direction map inverts and decreases
    for t in [0.1f64, 0.5, 1.0, 2.0, 5.0] {
        let v = saddle_to_ratio(t).map_err(|e| e.to_string())?;
        let back = ratio_to_saddle(v).map_err(|e| e.to_string())?;
        check((back - t).abs() <= 1e-10 * t, || {
            format!("round trip misses at t = {t}")
        })?;
    }
    let points = 10_000usize;
    let ratio = (1e8f64).powf(1.0 / (points - 1) as f64);
    let mut t = 1e-4f64;
    let mut prev = f64::INFINITY;
    for _ in 0..points {
        let v = saddle_to_ratio(t).map_err(|e| e.to_string())?;
        check(v < prev, || format!("direction map not decreasing at t = {t}"))?;
        prev = v;
        t *= ratio;
    }

    // strict minimality at the diagonal point and an off-diagonal point
    let diag = strict_minimality_check(LN_2, LN_2, 10_000).map_err(|e| e.to_string())?;
    check(diag, || "diagonal point fails strict minimality".into())?;
    let b = -(-(-0.6f64).exp()).ln_1p();
    let off = strict_minimality_check(0.6, b, 10_000).map_err(|e| e.to_string())?;
    check(off, || "off-diagonal point fails strict minimality".into())?;
    Ok(())
}
