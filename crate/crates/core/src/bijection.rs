//! The bijections behind the counting formulas.
//!
//! - [`excedance_to_descent`] and its inverse trade the excedance set of a
//!   permutation for the descent-bottom set of another, so words can be
//!   counted through descent bottoms.
//! - [`encode_cycle_orbit`] takes a full cycle on `{1, ..., n + 1}` to a
//!   permutation of `{1, ..., n}` whose descent bottoms are the cycle's
//!   excedance prefix shifted down by one.
//! - [`unroll_cycle`] reads a full cycle starting after its largest element;
//!   it sends exactly the stretch-free and exceptional cycles to the
//!   permutations avoiding both vincular patterns.
//! - [`resolve_exceptional_cycle`] reroutes an exceptional cycle through a
//!   fresh smallest element, landing injectively in the stretch-free cycles
//!   one size up.

use crate::perm::Permutation;
use crate::{Error, Result};

/// Reverses each cycle of the minimum-first decomposition and concatenates
/// the results into one-line form.  The excedance set of the input equals
/// the descent-bottom set of the output.
pub fn excedance_to_descent(p: &Permutation) -> Permutation {
    let scd = p.cycle_decomposition();
    let mut values = Vec::with_capacity(p.n());
    for cycle in scd.cycles() {
        values.extend(cycle.iter().rev());
    }
    Permutation::new(values).expect("cycles partition the ground set")
}

/// Inverse of [`excedance_to_descent`]: cuts the one-line form just after
/// each successive minimum, reverses each segment, and reads the segments as
/// cycles.
pub fn descent_to_excedance(q: &Permutation) -> Permutation {
    let vals = q.one_line();
    let n = vals.len();
    let mut cycles = Vec::new();
    let mut start = 0;
    while start < n {
        let min_offset = vals[start..]
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(k, _)| k)
            .expect("segment is nonempty");
        let end = start + min_offset;
        cycles.push(vals[start..=end].iter().rev().copied().collect());
        start = end + 1;
    }
    Permutation::from_cycles(n, &cycles).expect("segments partition the ground set")
}

/// Sends a full cycle `c` on `{1, ..., n + 1}` to the permutation
/// `i -> c^(n + 1 - i)(1) - 1` of `{1, ..., n}`.  A bijection onto `S_n`;
/// the cycle's excedance set is `{1, ..., l}` exactly when the image's
/// descent-bottom set is `{1, ..., l - 1}`.
pub fn encode_cycle_orbit(c: &Permutation) -> Result<Permutation> {
    let m = c.n();
    if !c.is_full_cycle() {
        return Err(Error::NotFullCycle { n: m });
    }
    if m < 2 {
        return Err(Error::Domain(
            "orbit encoding needs a cycle on at least 2 elements".into(),
        ));
    }
    let mut values = vec![0; m - 1];
    let mut cur = 1;
    for step in 1..m {
        cur = c.apply(cur);
        // cur = c^step(1) lands at position m - step
        values[m - step - 1] = cur - 1;
    }
    Permutation::new(values)
}

/// Sends the full cycle `m -> a_1 -> ... -> a_{m-1} -> m` on `{1, ..., m}`
/// to `(a_1, ..., a_{m-1})` in one-line form.
pub fn unroll_cycle(c: &Permutation) -> Result<Permutation> {
    let m = c.n();
    if !c.is_full_cycle() {
        return Err(Error::NotFullCycle { n: m });
    }
    if m < 2 {
        return Err(Error::Domain(
            "unrolling needs a cycle on at least 2 elements".into(),
        ));
    }
    let mut values = Vec::with_capacity(m - 1);
    let mut cur = c.apply(m);
    while cur != m {
        values.push(cur);
        cur = c.apply(cur);
    }
    Permutation::new(values)
}

/// Inverse of [`unroll_cycle`]: closes the one-line form of `p` in `S_{m-1}`
/// into the cycle `m -> p(1) -> ... -> p(m-1) -> m`.
pub fn roll_into_cycle(p: &Permutation) -> Permutation {
    let m = p.n() + 1;
    let mut cycle = Vec::with_capacity(m);
    cycle.push(m);
    cycle.extend_from_slice(p.one_line());
    Permutation::from_cycles(m, &[cycle]).expect("closed walk is a cycle")
}

/// Whether a full cycle has at least one stretching pair and every one of
/// them is exceptional.
pub fn is_exceptional_cycle(c: &Permutation) -> Result<bool> {
    if !c.is_full_cycle() {
        return Err(Error::NotFullCycle { n: c.n() });
    }
    let pairs = c.stretching_pairs();
    Ok(!pairs.is_empty() && pairs.iter().all(|sp| sp.exceptional))
}

/// Reroutes an exceptional cycle on `{1, ..., m}` through a new smallest
/// element: on `{0, ..., m}` set `p(0) = m`, `p(j0) = 0` where `c(j0) = m`,
/// and `p(i) = c(i)` elsewhere, then shift to `{1, ..., m + 1}`.  The result
/// is a stretch-free full cycle, and the map is injective.
pub fn resolve_exceptional_cycle(c: &Permutation) -> Result<Permutation> {
    if !is_exceptional_cycle(c)? {
        return Err(Error::NotResolvable);
    }
    let m = c.n();
    let j0 = (1..=m)
        .find(|&j| c.apply(j) == m)
        .expect("a full cycle hits its maximum");
    let mut values = Vec::with_capacity(m + 1);
    values.push(m + 1);
    for i in 1..=m {
        values.push(if i == j0 { 1 } else { c.apply(i) + 1 });
    }
    Permutation::new(values)
}
