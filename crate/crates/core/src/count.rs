//! Exact counting: brute-force enumeration for small `n` and Stirling-number
//! formulas for block words and stretch-free cycles.
//!
//! Brute-force routines take an explicit `limit` and refuse larger inputs
//! with [`Error::LimitExceeded`], so accidental exponential blowups surface
//! as errors rather than hangs.  Formula routines work for any size that
//! fits in memory; counts are exact `BigUint`s.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijection::is_exceptional_cycle;
use crate::perm::{ExcedanceWord, Permutation};
use crate::{Error, Result};

/// Default cap on `n` for the brute-force enumerations (`n! = 3_628_800`).
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 10;

/// Lazy iterator over all permutations of `{1, ..., n}` in Heap's-algorithm
/// order.
pub struct Permutations {
    values: Vec<usize>,
    counters: Vec<usize>,
    index: usize,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

/// All `n!` permutations of `{1, ..., n}`, `n >= 1`.
pub fn permutations(n: usize) -> Permutations {
    assert!(n >= 1, "permutations of an empty set are not represented");
    Permutations {
        values: (1..=n).collect(),
        counters: vec![0; n],
        index: 1,
        state: IterState::Fresh,
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(Permutation::from_values_unchecked(self.values.clone()))
            }
            IterState::Running => {
                let n = self.values.len();
                while self.index < n {
                    let i = self.index;
                    if self.counters[i] < i {
                        if i.is_multiple_of(2) {
                            self.values.swap(0, i);
                        } else {
                            self.values.swap(self.counters[i], i);
                        }
                        self.counters[i] += 1;
                        self.index = 1;
                        return Some(Permutation::from_values_unchecked(self.values.clone()));
                    }
                    self.counters[i] = 0;
                    self.index += 1;
                }
                self.state = IterState::Done;
                None
            }
            IterState::Done => None,
        }
    }
}

/// All `(m - 1)!` full cycles on `{1, ..., m}`, produced by closing each
/// arrangement of `{2, ..., m}` into a cycle starting at 1.
pub fn full_cycles(m: usize) -> Box<dyn Iterator<Item = Permutation>> {
    assert!(m >= 1, "cycles on an empty set are not represented");
    if m == 1 {
        return Box::new(std::iter::once(Permutation::identity(1)));
    }
    Box::new(permutations(m - 1).map(move |tail| {
        let mut cycle = Vec::with_capacity(m);
        cycle.push(1);
        cycle.extend(tail.one_line().iter().map(|&v| v + 1));
        Permutation::from_cycles(m, &[cycle]).expect("closed arrangement is a cycle")
    }))
}

/// Counts permutations of `{1, ..., len + 1}` whose excedance word equals
/// `word`, by enumeration.
pub fn count_word_bruteforce(word: &ExcedanceWord, limit: usize) -> Result<BigUint> {
    let n = word.ambient_size();
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let count = permutations(n)
        .filter(|p| &p.excedance_word() == word)
        .count();
    Ok(BigUint::from(count))
}

/// The full map word -> count over all of `S_n`, by enumeration.  Every word
/// of length `n - 1` appears with a positive count.
pub fn word_distribution(n: usize, limit: usize) -> Result<BTreeMap<ExcedanceWord, BigUint>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::Domain("word distribution needs n >= 1".into()));
    }
    let mut dist: BTreeMap<ExcedanceWord, BigUint> = BTreeMap::new();
    for p in permutations(n) {
        *dist.entry(p.excedance_word()).or_default() += 1u32;
    }
    Ok(dist)
}

/// Stirling numbers of the second kind `S(m, k)` for all `0 <= k <= m <= n`,
/// as an explicit triangle built from `S(m, k) = k S(m-1, k) + S(m-1, k-1)`.
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn up_to(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for m in 1..=max_n {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::zero());
            for k in 1..m {
                row.push(&prev[k] * k + &prev[k - 1]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(m, k)` with `k <= m <= max_n`.
    pub fn get(&self, m: usize, k: usize) -> &BigUint {
        &self.rows[m][k]
    }
}

/// One row `S(n, 0), ..., S(n, n)` of the Stirling triangle.
pub fn stirling_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigUint::zero());
        for k in 1..m {
            next.push(&row[k] * k + &row[k - 1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

/// A single Stirling number of the second kind.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling_row(n).swap_remove(k)
}

/// Factorials `0!, ..., n!` as an explicit cache.
pub struct Factorials {
    values: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(max_n: usize) -> Self {
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(BigUint::one());
        for k in 1..=max_n {
            let next = &values[k - 1] * k;
            values.push(next);
        }
        Factorials { values }
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }
}

pub fn factorial(n: usize) -> BigUint {
    Factorials::up_to(n).values.pop().expect("cache holds 0..=n")
}

/// Number of permutations of `{1, ..., b_run + a_run + 1}` whose excedance
/// word is the block word `b^{b_run} a^{a_run}`:
///
/// ```text
/// sum_i S(b_run + 1, i + 1) * S(a_run + 1, i + 1) * i! * (i + 1)!
/// ```
pub fn count_block_word(b_run: usize, a_run: usize) -> BigUint {
    let top = b_run.min(a_run);
    let row_b = stirling_row(b_run + 1);
    let row_a = stirling_row(a_run + 1);
    let facts = Factorials::up_to(top + 1);
    let mut total = BigUint::zero();
    for i in 0..=top {
        total += &row_b[i + 1] * &row_a[i + 1] * facts.get(i) * facts.get(i + 1);
    }
    total
}

/// Number of full cycles on `{1, ..., m}` with no stretching pair, `m >= 2`,
/// via the block-word formula summed over all splits of `m - 2` positions:
/// a cycle on `m` elements is stretch-free exactly when its excedance set is
/// a prefix, and each prefix length contributes one block count.
pub fn count_stretch_free_cycles(m: usize) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "stretch-free cycle formula needs m >= 2, got {m}"
        )));
    }
    let n = m - 1;
    let table = StirlingTable::up_to(n);
    let facts = Factorials::up_to(n);
    let mut total = BigUint::zero();
    for k in 0..n {
        let top = k.min(n - 1 - k);
        for i in 0..=top {
            total += table.get(k + 1, i + 1) * table.get(n - k, i + 1) * facts.get(i)
                * facts.get(i + 1);
        }
    }
    Ok(total)
}

/// Stretch-free cycle count by enumeration, for cross-checking the formula.
pub fn count_stretch_free_cycles_bruteforce(m: usize, limit: usize) -> Result<BigUint> {
    if m > limit {
        return Err(Error::LimitExceeded { n: m, limit });
    }
    if m == 0 {
        return Err(Error::Domain("cycles need m >= 1".into()));
    }
    let count = full_cycles(m).filter(|c| !c.has_stretching_pair()).count();
    Ok(BigUint::from(count))
}

/// Number of full cycles on `{1, ..., m}` having at least one stretching
/// pair, all of them exceptional, by enumeration.
pub fn count_exceptional_cycles_bruteforce(m: usize, limit: usize) -> Result<BigUint> {
    if m > limit {
        return Err(Error::LimitExceeded { n: m, limit });
    }
    if m == 0 {
        return Err(Error::Domain("cycles need m >= 1".into()));
    }
    let count = full_cycles(m)
        .filter(|c| is_exceptional_cycle(c).expect("iterator yields full cycles"))
        .count();
    Ok(BigUint::from(count))
}

/// Number of permutations of `{1, ..., n}` avoiding both vincular patterns
/// checked by [`Permutation::avoids_both_vincular_patterns`], by enumeration.
pub fn count_vincular_avoiders_bruteforce(n: usize, limit: usize) -> Result<BigUint> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::Domain("avoider count needs n >= 1".into()));
    }
    let count = permutations(n)
        .filter(|p| p.avoids_both_vincular_patterns())
        .count();
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Letter;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn permutation_iterator_is_complete_and_distinct() {
        let all: Vec<_> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        let mut lines: Vec<_> = all.iter().map(|p| p.one_line().to_vec()).collect();
        lines.sort();
        lines.dedup();
        assert_eq!(lines.len(), 24);
        assert_eq!(permutations(1).count(), 1);
        assert_eq!(permutations(8).count(), 40320);
    }

    #[test]
    fn cycle_iterator_yields_exactly_the_full_cycles() {
        let cycles: Vec<_> = full_cycles(5).collect();
        assert_eq!(cycles.len(), 24);
        assert!(cycles.iter().all(|c| c.is_full_cycle()));
        let by_filter = permutations(5).filter(|p| p.is_full_cycle()).count();
        assert_eq!(cycles.len(), by_filter);
        assert_eq!(full_cycles(1).count(), 1);
        assert_eq!(full_cycles(2).count(), 1);
    }

    #[test]
    fn stirling_numbers_small_table() {
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(1, 0), big(0));
        assert_eq!(stirling2(3, 2), big(3));
        assert_eq!(stirling2(4, 2), big(7));
        assert_eq!(stirling2(5, 3), big(25));
        assert_eq!(stirling2(6, 3), big(90));
        assert_eq!(stirling2(7, 7), big(1));
        assert_eq!(stirling2(3, 5), big(0));
        // row sums are the Bell numbers
        let bell: Vec<u64> = vec![1, 1, 2, 5, 15, 52, 203, 877];
        let table = StirlingTable::up_to(7);
        for (n, &b) in bell.iter().enumerate() {
            let sum: BigUint = (0..=n).map(|k| table.get(n, k).clone()).sum();
            assert_eq!(sum, big(b));
        }
    }

    #[test]
    fn stirling_row_matches_table() {
        let table = StirlingTable::up_to(9);
        for n in [0usize, 1, 5, 9] {
            let row = stirling_row(n);
            assert_eq!(row.len(), n + 1);
            for (k, entry) in row.iter().enumerate() {
                assert_eq!(entry, table.get(n, k));
            }
        }
    }

    #[test]
    fn factorial_cache() {
        let facts = Factorials::up_to(10);
        assert_eq!(facts.get(0), &big(1));
        assert_eq!(facts.get(5), &big(120));
        assert_eq!(facts.get(10), &big(3_628_800));
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(12), big(479_001_600));
    }

    #[test]
    fn block_word_counts_match_enumeration() {
        for b_run in 0..=3 {
            for a_run in 0..=3 {
                let word = ExcedanceWord::block(b_run, a_run);
                let brute =
                    count_word_bruteforce(&word, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
                assert_eq!(
                    count_block_word(b_run, a_run),
                    brute,
                    "block b^{b_run} a^{a_run}"
                );
            }
        }
    }

    #[test]
    fn block_word_known_values_and_symmetry() {
        assert_eq!(count_block_word(0, 0), big(1));
        assert_eq!(count_block_word(1, 1), big(3));
        assert_eq!(count_block_word(1, 2), big(7));
        assert_eq!(count_block_word(2, 1), big(7));
        assert_eq!(count_block_word(2, 2), big(31));
        assert_eq!(count_block_word(5, 0), big(1));
        assert_eq!(count_block_word(0, 7), big(1));
        for b_run in 0..=20 {
            for a_run in 0..b_run {
                assert_eq!(
                    count_block_word(b_run, a_run),
                    count_block_word(a_run, b_run)
                );
            }
        }
    }

    #[test]
    fn balanced_blocks_maximize_the_count() {
        // over all splits of n-1 letters into b^k a^(n-1-k), the count peaks
        // at the middle split (both middles when n-1 is odd)
        for n in 2..=30usize {
            let counts: Vec<BigUint> =
                (0..n).map(|k| count_block_word(k, n - 1 - k)).collect();
            let max = counts.iter().max().unwrap();
            for (k, count) in counts.iter().enumerate() {
                if count == max {
                    assert!(k == (n - 1) / 2 || k == n / 2, "n = {n}, k = {k}");
                }
            }
            assert_eq!(&counts[(n - 1) / 2], max);
            assert_eq!(&counts[n / 2], max);
        }
    }

    #[test]
    fn word_distribution_totals_and_agrees_with_per_word_counts() {
        for n in 2..=6 {
            let dist = word_distribution(n, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
            assert_eq!(dist.len(), 1 << (n - 1), "every word appears");
            let total: BigUint = dist.values().cloned().sum();
            assert_eq!(total, factorial(n));
            for (word, count) in &dist {
                assert_eq!(
                    &count_word_bruteforce(word, DEFAULT_BRUTE_FORCE_LIMIT).unwrap(),
                    count
                );
            }
        }
    }

    #[test]
    fn word_count_depends_on_positions_not_letter_multiset() {
        let bab: ExcedanceWord = "bab".parse().unwrap();
        let abb: ExcedanceWord = "abb".parse().unwrap();
        let n_bab = count_word_bruteforce(&bab, 10).unwrap();
        let n_abb = count_word_bruteforce(&abb, 10).unwrap();
        assert_ne!(n_bab, n_abb);
    }

    #[test]
    fn reverse_swap_symmetry_of_word_counts() {
        // reversing the word and swapping the letters preserves the count;
        // plain reversal does not (ab occurs once in S_3, ba three times)
        for n in 2..=6usize {
            let dist = word_distribution(n, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
            for (word, count) in &dist {
                let mirrored = ExcedanceWord::new(
                    word.letters()
                        .iter()
                        .rev()
                        .map(|&l| match l {
                            Letter::A => Letter::B,
                            Letter::B => Letter::A,
                        })
                        .collect(),
                );
                assert_eq!(dist.get(&mirrored), Some(count), "word {word}");
            }
        }
        let ab = count_word_bruteforce(&"ab".parse().unwrap(), 10).unwrap();
        let ba = count_word_bruteforce(&"ba".parse().unwrap(), 10).unwrap();
        assert_eq!(ab, big(1));
        assert_eq!(ba, big(3));
    }

    #[test]
    fn stretch_free_cycle_formula_matches_enumeration() {
        for m in 2..=8 {
            let formula = count_stretch_free_cycles(m).unwrap();
            let brute = count_stretch_free_cycles_bruteforce(m, 10).unwrap();
            assert_eq!(formula, brute, "m = {m}");
        }
    }

    #[test]
    fn stretch_free_cycle_counts_start_1_2_5_16_63() {
        let expect: Vec<u64> = vec![1, 2, 5, 16, 63, 294, 1585, 9692];
        for (m, &e) in (2..=9).zip(expect.iter()) {
            assert_eq!(count_stretch_free_cycles(m).unwrap(), big(e), "m = {m}");
        }
    }

    #[test]
    fn stretch_free_count_is_sum_of_block_counts() {
        for m in 2..=10 {
            let n = m - 1;
            let sum: BigUint = (0..n).map(|k| count_block_word(k, n - 1 - k)).sum();
            assert_eq!(count_stretch_free_cycles(m).unwrap(), sum);
        }
    }

    #[test]
    fn exceptional_cycle_counts_small() {
        let expect: Vec<u64> = vec![0, 0, 1, 6, 31, 168];
        for (m, &e) in (2..=7).zip(expect.iter()) {
            assert_eq!(
                count_exceptional_cycles_bruteforce(m, 10).unwrap(),
                big(e),
                "m = {m}"
            );
        }
    }

    #[test]
    fn vincular_avoider_counts_small() {
        let expect: Vec<u64> = vec![1, 2, 6, 22, 94, 462];
        for (n, &e) in (1..=6).zip(expect.iter()) {
            assert_eq!(
                count_vincular_avoiders_bruteforce(n, 10).unwrap(),
                big(e),
                "n = {n}"
            );
        }
    }

    #[test]
    fn limits_are_enforced() {
        let word = ExcedanceWord::block(5, 5);
        assert!(matches!(
            count_word_bruteforce(&word, 10),
            Err(Error::LimitExceeded { n: 11, limit: 10 })
        ));
        assert!(word_distribution(9, 8).is_err());
        assert!(count_stretch_free_cycles_bruteforce(11, 10).is_err());
        assert!(count_vincular_avoiders_bruteforce(11, 10).is_err());
    }
}
