//! Permutations of `{1, ..., n}` and the statistics this crate counts by:
//! excedance positions, the induced `{a, b}` word, descent bottoms, cycle
//! structure, and stretching pairs.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One letter of an excedance word: `B` marks an excedance position,
/// `A` a weak deficiency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::B => "b",
        })
    }
}

/// A word over `{a, b}`.  A permutation of `{1, ..., n}` induces one of
/// length `n - 1`; position `n` is never an excedance and is not recorded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcedanceWord {
    letters: Vec<Letter>,
}

impl ExcedanceWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        ExcedanceWord { letters }
    }

    /// The block word `b^r a^s`.
    pub fn block(r: usize, s: usize) -> Self {
        let mut letters = vec![Letter::B; r];
        letters.extend(std::iter::repeat_n(Letter::A, s));
        ExcedanceWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Size of the ambient symmetric group: a word of length `k` comes from
    /// permutations of `{1, ..., k + 1}`.
    pub fn ambient_size(&self) -> usize {
        self.letters.len() + 1
    }

    /// All `2^len` words of the given length, in lexicographic order with
    /// `a < b`.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = ExcedanceWord> {
        assert!(len < 32, "word length {len} too large to enumerate");
        (0u32..1 << len).map(move |mask| {
            let letters = (0..len)
                .map(|i| {
                    if mask >> (len - 1 - i) & 1 == 1 {
                        Letter::B
                    } else {
                        Letter::A
                    }
                })
                .collect();
            ExcedanceWord { letters }
        })
    }
}

impl fmt::Display for ExcedanceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for ExcedanceWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(Error::Parse(format!(
                    "word may only contain 'a' and 'b', found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ExcedanceWord::new)
    }
}

/// A pair of positions `i < j` with `p(i) < i` and `p(j) > j`.  The pair is
/// exceptional when `p(j)` is the largest element of the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StretchingPair {
    pub i: usize,
    pub j: usize,
    pub exceptional: bool,
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line values, checking that they are
    /// a rearrangement of `1..=n` for `n >= 1`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line form".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// For iterators that permute a valid one-line form in place.
    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// Builds a permutation of `{1, ..., n}` from disjoint cycles; elements
    /// not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut values: Vec<usize> = (1..=n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (k, &e) in cycle.iter().enumerate() {
                if e < 1 || e > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {e} outside 1..={n}"
                    )));
                }
                if moved[e - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {e} repeated"
                    )));
                }
                moved[e - 1] = true;
                values[e - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(values)
    }

    /// Number of elements permuted.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// The image of `i` under the permutation, `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.values
    }

    /// Positions `i` with `p(i) > i`, ascending.  Position `n` never
    /// qualifies.
    pub fn excedance_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) > i).collect()
    }

    /// The `{a, b}` word of length `n - 1` with `b` exactly at the excedance
    /// positions.
    pub fn excedance_word(&self) -> ExcedanceWord {
        let letters = (1..self.n())
            .map(|i| {
                if self.apply(i) > i {
                    Letter::B
                } else {
                    Letter::A
                }
            })
            .collect();
        ExcedanceWord::new(letters)
    }

    /// Values `p(i)` with `p(i) < p(i - 1)`, ascending.
    pub fn descent_bottoms(&self) -> Vec<usize> {
        let mut bottoms: Vec<usize> = self
            .values
            .windows(2)
            .filter(|w| w[1] < w[0])
            .map(|w| w[1])
            .collect();
        bottoms.sort_unstable();
        bottoms
    }

    /// Whether some `i < j` has `p(i) < i` and `p(j) > j`.  Equivalent to the
    /// earliest strict deficiency sitting left of the latest excedance, so a
    /// single scan suffices.
    pub fn has_stretching_pair(&self) -> bool {
        let first_deficiency = (1..=self.n()).find(|&i| self.apply(i) < i);
        let last_excedance = (1..=self.n()).rev().find(|&j| self.apply(j) > j);
        match (first_deficiency, last_excedance) {
            (Some(i), Some(j)) => i < j,
            _ => false,
        }
    }

    /// All stretching pairs, each flagged exceptional when `p(j) = n`.
    pub fn stretching_pairs(&self) -> Vec<StretchingPair> {
        let n = self.n();
        let deficiencies: Vec<usize> = (1..=n).filter(|&i| self.apply(i) < i).collect();
        let mut pairs = Vec::new();
        for &i in &deficiencies {
            for j in i + 1..=n {
                if self.apply(j) > j {
                    pairs.push(StretchingPair {
                        i,
                        j,
                        exceptional: self.apply(j) == n,
                    });
                }
            }
        }
        pairs
    }

    /// Whether the one-line form contains adjacent values forming `21`
    /// followed anywhere later by adjacent values forming `34`, with the
    /// four values ordered as in `2134`.
    pub fn contains_21_34(&self) -> bool {
        let v = &self.values;
        let n = v.len();
        for i in 0..n.saturating_sub(3) {
            if v[i] <= v[i + 1] {
                continue;
            }
            for j in i + 2..n - 1 {
                if v[i] < v[j] && v[j] < v[j + 1] {
                    return true;
                }
            }
        }
        false
    }

    /// Whether the one-line form contains adjacent values forming `34`
    /// followed anywhere later by adjacent values forming `21`, with the
    /// four values ordered as in `3421`.
    pub fn contains_34_21(&self) -> bool {
        let v = &self.values;
        let n = v.len();
        for i in 0..n.saturating_sub(3) {
            if v[i] >= v[i + 1] {
                continue;
            }
            for j in i + 2..n - 1 {
                if v[j] > v[j + 1] && v[j] < v[i] {
                    return true;
                }
            }
        }
        false
    }

    /// Whether both adjacent patterns above are absent.
    pub fn avoids_both_vincular_patterns(&self) -> bool {
        !self.contains_21_34() && !self.contains_34_21()
    }

    /// Whether the permutation is a single cycle on all `n` elements.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.n();
        let mut cur = 1;
        for _ in 1..n {
            cur = self.apply(cur);
            if cur == 1 {
                return false;
            }
        }
        true
    }

    /// Disjoint cycles, each starting at its minimum, ordered by increasing
    /// minimum.  Fixed points appear as singleton cycles.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad one-line entry {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// The disjoint cycles of a permutation in the minimum-first,
/// increasing-minimum order produced by [`Permutation::cycle_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.cycles)
            .expect("cycles of a decomposition partition the ground set")
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            let mut first = true;
            for e in cycle {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
