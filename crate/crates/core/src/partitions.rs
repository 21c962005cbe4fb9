//! Integer partitions and the statistics the rest of the crate is indexed by.
//!
//! Three shapes of data show up:
//!
//! * [`Partition`], the canonical form with zero parts stripped. It indexes
//!   conjugacy classes, irreducible characters and binomial-basis elements.
//! * [`PaddedPartition`], a weakly decreasing sequence of fixed length whose
//!   trailing zeros are part of the value.
//! * [`StrictPartition`], a strictly decreasing sequence of fixed length that
//!   may end in a single zero.
//!
//! Every enumeration here yields reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from its exponential notation: `mults[i]` is the
    /// number of parts equal to `i + 1`.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in mults.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Exponential notation, `result[i]` = number of parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut mults = vec![0; self.parts.first().copied().unwrap_or(0) as usize];
        for &p in &self.parts {
            mults[p as usize - 1] += 1;
        }
        mults
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// The same parts padded with zeros to `length` entries.
    pub fn pad(&self, length: usize) -> Result<PaddedPartition> {
        if self.len() > length {
            return Err(Error::InvalidParameters(format!(
                "{self} has more than {length} parts"
            )));
        }
        let mut parts = self.parts.clone();
        parts.resize(length, 0);
        Ok(PaddedPartition { parts })
    }
}

/// Ordered by size first, then lexicographically. This is the order in which
/// character polynomials print their terms.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts)
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidParameters(format!("bad part {t:?} in {s:?}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Weakly decreasing sequence of non-negative integers with a declared length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PaddedPartition {
    parts: Vec<u32>,
}

impl PaddedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(PaddedPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest entry, if the declared length is positive.
    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.retain(|&p| p > 0);
        Partition { parts }
    }
}

impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Strictly decreasing sequence of non-negative integers with a declared length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(parts));
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// All partitions of `n`, reverse-lexicographic.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_bounded(n, n, None, &mut stack, &mut |parts| {
        out.push(Partition {
            parts: parts.to_vec(),
        })
    });
    out
}

/// Weakly decreasing sequences with sum `remaining`, parts at most `max_part`,
/// and exactly `slots` entries when given (zeros allowed), otherwise only
/// positive parts. Visits in reverse-lexicographic order.
fn fill_bounded(
    remaining: u32,
    max_part: u32,
    slots: Option<usize>,
    stack: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    match slots {
        None => {
            if remaining == 0 {
                visit(stack);
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                stack.push(p);
                fill_bounded(remaining - p, p, None, stack, visit);
                stack.pop();
            }
        }
        Some(0) => {
            if remaining == 0 {
                visit(stack);
            }
        }
        Some(k) => {
            // the remaining k entries hold at most k * max_part
            if remaining as u64 > k as u64 * max_part as u64 {
                return;
            }
            let lo = remaining.div_ceil(k as u32);
            for p in (lo..=remaining.min(max_part)).rev() {
                stack.push(p);
                fill_bounded(remaining - p, p, Some(k - 1), stack, visit);
                stack.pop();
            }
        }
    }
}

/// Centralizer order `∏ i^{a_i} a_i!` of a permutation of cycle type `alpha`.
pub fn z_of(alpha: &Partition) -> BigUint {
    alpha
        .multiplicities()
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &a)| {
            acc * BigUint::from(i as u64 + 1).pow(a) * factorial(a as u64)
        })
}

/// Value of the sign character on cycle type `alpha`.
pub fn sgn_of(alpha: &Partition) -> i32 {
    if (alpha.size() as usize - alpha.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|j| lambda.parts.iter().filter(|&&p| p >= j).count() as u32)
        .collect();
    Partition { parts }
}

/// Number of distinct values among `rho_2, ..., rho_n`, a zero value included.
///
/// Each distinct positive value ends in exactly one removable cell below the
/// first row; a zero part adds one more choice.
pub fn removable_cells_off_first_row(rho: &PaddedPartition) -> Result<usize> {
    let parts = rho.parts();
    if parts.is_empty() {
        return Err(Error::EmptyPadded);
    }
    let n = parts.len();
    let descents = (1..n)
        .filter(|&i| parts[i] > parts.get(i + 1).copied().unwrap_or(0))
        .count();
    let zero = usize::from(n >= 2 && parts[n - 1] == 0);
    Ok(descents + zero)
}

/// Weakly decreasing sequences of `length` non-negative integers summing to `total`.
pub fn padded_partitions(total: u32, length: usize) -> Vec<PaddedPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(length);
    fill_bounded(total, total, Some(length), &mut stack, &mut |parts| {
        out.push(PaddedPartition {
            parts: parts.to_vec(),
        })
    });
    out
}

/// Strictly decreasing sequences of `length` non-negative integers summing to `total`.
pub fn strict_partitions(total: u32, length: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(length);
    fill_strict(total, total, length, &mut stack, &mut out);
    out
}

fn fill_strict(
    remaining: u32,
    max_part: u32,
    slots: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<StrictPartition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(StrictPartition {
                parts: stack.clone(),
            });
        }
        return;
    }
    // staircase (slots-2, ..., 0) is the smallest tail after this entry
    let min_rest = (slots as u64 - 1) * (slots as u64).saturating_sub(2) / 2;
    for p in (0..=remaining.min(max_part)).rev() {
        if (p as u64) < slots as u64 - 1 {
            break;
        }
        let rest = remaining - p;
        if (rest as u64) < min_rest {
            continue;
        }
        stack.push(p);
        fill_strict(rest, p.saturating_sub(1), slots - 1, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn padded(parts: &[u32]) -> PaddedPartition {
        PaddedPartition::new(parts.to_vec()).unwrap()
    }

    fn strict(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal-number recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn partitions_of_small_values() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(10).len(), 42);
        for n in 0..=20 {
            assert_eq!(partitions_of(n).len() as u64, partition_count(n as usize));
        }
    }

    #[test]
    fn enumeration_is_reverse_lexicographic() {
        for n in 0..=12 {
            let all = partitions_of(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(z_of(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(z_of(&p(&[3, 2, 2, 1])), BigUint::from(24u32));
        assert_eq!(z_of(&Partition::empty()), BigUint::one());
    }

    /// Count permutations of S_8 commuting with a fixed permutation of type (3,2,2,1).
    #[test]
    fn z_matches_brute_force_centralizer() {
        // sigma = (0 1 2)(3 4)(5 6)(7)
        let sigma = [1usize, 2, 0, 4, 3, 6, 5, 7];
        let mut perm: Vec<usize> = (0..8).collect();
        let mut count = 0u32;
        loop {
            // tau sigma == sigma tau
            if (0..8).all(|i| perm[sigma[i]] == sigma[perm[i]]) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(BigUint::from(count), z_of(&p(&[3, 2, 2, 1])));
    }

    fn next_permutation(v: &mut [usize]) -> bool {
        let Some(i) = (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        else {
            return false;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }

    #[test]
    fn sign_values() {
        assert_eq!(sgn_of(&p(&[1, 1, 1, 1])), 1);
        assert_eq!(sgn_of(&p(&[2])), -1);
        assert_eq!(sgn_of(&p(&[3, 2, 2])), 1);
        // product of cycle signs (-1)^(len-1)
        for n in 0..=9 {
            for alpha in partitions_of(n) {
                let prod: i32 = alpha
                    .parts()
                    .iter()
                    .map(|&c| if c % 2 == 0 { -1 } else { 1 })
                    .product();
                assert_eq!(sgn_of(&alpha), prod);
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p(&[2, 2])), p(&[2, 2]));
        assert_eq!(conjugate(&p(&[4, 1])), p(&[2, 1, 1, 1]));
        assert_eq!(conjugate(&p(&[5, 3, 1])), p(&[3, 2, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn conjugation_is_involutive() {
        for n in 0..=20 {
            for lambda in partitions_of(n) {
                assert_eq!(conjugate(&conjugate(&lambda)), lambda);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=12u32 {
            let order = factorial(n as u64);
            let total: BigUint = partitions_of(n).iter().map(|a| &order / z_of(a)).sum();
            assert_eq!(total, order);
        }
    }

    #[test]
    fn sign_is_orthogonal_to_trivial() {
        for n in 2..=12u32 {
            let order = factorial(n as u64);
            let signed: num_bigint::BigInt = partitions_of(n)
                .iter()
                .map(|a| num_bigint::BigInt::from(&order / z_of(a)) * sgn_of(a))
                .sum();
            assert_eq!(signed, 0.into());
        }
    }

    #[test]
    fn removable_cells_worked_examples() {
        let r = |parts: &[u32]| removable_cells_off_first_row(&padded(parts)).unwrap();
        assert_eq!(r(&[2, 1, 0, 0, 0]), 2);
        assert_eq!(r(&[3, 0, 0, 0, 0]), 1);
        assert_eq!(r(&[1, 1, 1, 0, 0]), 2);
        assert_eq!(r(&[2, 0, 0]), 1);
        assert_eq!(r(&[1, 1, 0]), 2);
        assert_eq!(r(&[2, 2]), 1);
        assert_eq!(r(&[3, 2, 2, 1]), 2);
        assert_eq!(
            removable_cells_off_first_row(&padded(&[])),
            Err(Error::EmptyPadded)
        );
    }

    #[test]
    fn removable_cells_count_distinct_tail_values() {
        for total in 0..=9 {
            for n in 1..=7 {
                for rho in padded_partitions(total, n) {
                    let mut tail: Vec<u32> = rho.parts()[1..].to_vec();
                    tail.dedup();
                    assert_eq!(
                        removable_cells_off_first_row(&rho).unwrap(),
                        tail.len(),
                        "{rho}"
                    );
                }
            }
        }
    }

    #[test]
    fn padded_examples() {
        assert_eq!(
            padded_partitions(3, 5),
            vec![
                padded(&[3, 0, 0, 0, 0]),
                padded(&[2, 1, 0, 0, 0]),
                padded(&[1, 1, 1, 0, 0])
            ]
        );
        assert_eq!(padded_partitions(0, 4), vec![padded(&[0, 0, 0, 0])]);
        assert_eq!(
            padded_partitions(4, 2),
            vec![padded(&[4, 0]), padded(&[3, 1]), padded(&[2, 2])]
        );
        assert_eq!(padded_partitions(0, 0), vec![padded(&[])]);
        assert!(padded_partitions(2, 0).is_empty());
    }

    #[test]
    fn padded_counts_match_partitions_with_bounded_length() {
        for t in 0..=15 {
            for n in 0..=10 {
                let bounded = partitions_of(t).iter().filter(|l| l.len() <= n).count();
                assert_eq!(padded_partitions(t, n).len(), bounded, "t={t} n={n}");
            }
        }
    }

    #[test]
    fn strict_examples() {
        assert_eq!(
            strict_partitions(3, 2),
            vec![strict(&[3, 0]), strict(&[2, 1])]
        );
        assert_eq!(strict_partitions(0, 1), vec![strict(&[0])]);
        assert!(strict_partitions(1, 3).is_empty());
        assert_eq!(strict_partitions(0, 0), vec![strict(&[])]);
    }

    #[test]
    fn staircase_is_the_unique_minimum() {
        for m in 0..=8usize {
            let total = binomial(m as i64, 2) as u32;
            let all = strict_partitions(total, m);
            assert_eq!(all.len(), 1);
            let expected: Vec<u32> = (0..m as u32).rev().collect();
            assert_eq!(all[0].parts(), &expected[..]);
        }
    }

    #[test]
    fn constructors_validate() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(PaddedPartition::new(vec![0, 1]).is_err());
        assert!(StrictPartition::new(vec![1, 1]).is_err());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicity_round_trip() {
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    Partition::from_multiplicities(&lambda.multiplicities()),
                    lambda
                );
            }
        }
        assert_eq!(p(&[3, 1, 1]).multiplicities(), vec![2, 0, 1]);
    }

    proptest! {
        #[test]
        fn strict_enumeration_is_complete(total in 0u32..14, len in 0usize..6) {
            let found = strict_partitions(total, len);
            for s in &found {
                prop_assert_eq!(s.size(), total);
                prop_assert_eq!(s.len(), len);
            }
            // brute force over subsets of {0..=total}
            let mut brute = 0usize;
            for mask in 0u32..(1 << (total + 1)) {
                if mask.count_ones() as usize == len {
                    let sum: u32 = (0..=total).filter(|b| mask >> b & 1 == 1).sum();
                    if sum == total {
                        brute += 1;
                    }
                }
            }
            prop_assert_eq!(found.len(), brute);
        }
    }
}
