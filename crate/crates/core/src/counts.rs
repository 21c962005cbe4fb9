//! Positive combinatorial formulas for the multiplicities, and the
//! sign-reversing involutions that cancel the alternating Pieri sums.
//!
//! Everything here counts by explicit enumeration. Nothing is read off a
//! generating function, so agreement with [`crate::series`] is a real check.

use std::fmt;

use serde::Serialize;

use crate::arith::binomial;
use crate::error::{invalid, Error, Result};
use crate::partitions::{
    padded_partitions, removable_cells_off_first_row, strict_partitions, PaddedPartition,
    StrictPartition,
};

/// A partition of the vector `(k, l)` into `n` parts drawn from
/// `{(0,0), (1,0), (0,1), (1,1)}`, where `(0,0)` and `(1,1)` occur at most once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VectorPartition2 {
    pub zero: u32,
    pub horizontal: u32,
    pub vertical: u32,
    pub diagonal: u32,
}

impl VectorPartition2 {
    pub fn num_parts(&self) -> u32 {
        self.zero + self.horizontal + self.vertical + self.diagonal
    }

    pub fn sum(&self) -> (u32, u32) {
        (
            self.horizontal + self.diagonal,
            self.vertical + self.diagonal,
        )
    }
}

/// All vector partitions counted by `q*_n(k, l)`.
pub fn vector_partitions(n: u32, k: u32, l: u32) -> Vec<VectorPartition2> {
    let mut out = Vec::new();
    for zero in 0..=1 {
        for diagonal in 0..=1u32.min(k).min(l) {
            let vp = VectorPartition2 {
                zero,
                horizontal: k - diagonal,
                vertical: l - diagonal,
                diagonal,
            };
            if vp.num_parts() == n {
                out.push(vp);
            }
        }
    }
    out
}

pub fn q_star(n: u32, k: u32, l: u32) -> u64 {
    vector_partitions(n, k, l).len() as u64
}

/// Closed form of [`q_star`] for `k ≥ l`.
pub fn q_star_closed(n: u32, k: u32, l: u32) -> Result<u64> {
    if k < l {
        return Err(invalid(format!(
            "q* closed form needs k >= l, got k={k} l={l}"
        )));
    }
    let (n, k, l) = (n as i64, k as i64, l as i64);
    let v = if l > 0 {
        if k + l == n {
            2
        } else if k + l == n - 1 || k + l == n + 1 {
            1
        } else {
            0
        }
    } else if k == n - 1 || k == n {
        1
    } else {
        0
    };
    Ok(v)
}

/// Multiplicity of the sign representation of `S_n` in `W_{(k,l)'}(ℂⁿ)`.
pub fn sign_mult_two_column(n: u32, k: u32, l: u32) -> Result<u64> {
    if n < 2 || l > k || k > n {
        return Err(invalid(format!(
            "two-column shape needs n >= 2 and 0 <= l <= k <= n, got n={n} k={k} l={l}"
        )));
    }
    Ok(u64::from((k + 1 == n || k == n) && l <= 1))
}

/// `q*_n(k, l) - q*_n(k+1, l-1)` (or `q*_n(k, 0)` when `l = 0`), as a signed value.
pub fn two_column_q_difference(n: u32, k: u32, l: u32) -> i64 {
    if l == 0 {
        q_star(n, k, 0) as i64
    } else {
        q_star(n, k, l) as i64 - q_star(n, k + 1, l - 1) as i64
    }
}

/// A weakly decreasing `lam` and a strictly decreasing `mu`, both of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiPartitionPair {
    pub lam: PaddedPartition,
    pub mu: StrictPartition,
}

impl BiPartitionPair {
    pub fn new(lam: Vec<u32>, mu: Vec<u32>) -> Result<Self> {
        Ok(BiPartitionPair {
            lam: PaddedPartition::new(lam)?,
            mu: StrictPartition::new(mu)?,
        })
    }

    pub fn total(&self) -> u32 {
        self.lam.size() + self.mu.size()
    }

    /// The largest part overall occurs in `lam`.
    pub fn largest_in_lam(&self) -> bool {
        match (self.lam.first(), self.mu.first()) {
            (Some(l), Some(m)) => l >= m,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }

    /// `lam` is nonempty and `mu_1 ≤ lam_1 - 2` (vacuous for empty `mu`).
    pub fn lam_clears_mu(&self) -> bool {
        match (self.lam.first(), self.mu.first()) {
            (Some(l), Some(m)) => m + 2 <= l,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }
}

impl fmt::Display for BiPartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lam, self.mu)
    }
}

impl fmt::Debug for BiPartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Pairs with `lam` of length `s`, `mu` of length `t` and `|lam| + |mu| = total`.
pub fn pairs(total: u32, s: usize, t: usize) -> Vec<BiPartitionPair> {
    let mut out = Vec::new();
    for m in 0..=total {
        let mus = strict_partitions(total - m, t);
        if mus.is_empty() {
            continue;
        }
        for lam in padded_partitions(m, s) {
            for mu in &mus {
                out.push(BiPartitionPair {
                    lam: lam.clone(),
                    mu: mu.clone(),
                });
            }
        }
    }
    out
}

/// Number of [`pairs`]; equals the signed moment of `H_m E_s` at `n = s + t`.
pub fn count_pairs_he(m: u32, s: usize, t: usize) -> u64 {
    pairs(m, s, t).len() as u64
}

fn check_hook(n: u32, b: u32) -> Result<()> {
    if b + 1 > n {
        return Err(invalid(format!("hook needs b + 1 <= n, got b={b} n={n}")));
    }
    Ok(())
}

/// Pairs counted for the sign multiplicity in `W_{(a+1,1^b)}(ℂⁿ)`: `lam` of
/// length `b`, `mu` of length `n-b`, total `a+1`, and `mu_1 > lam_1`.
pub fn hook_sign_pairs(n: u32, a: u32, b: u32) -> Result<Vec<BiPartitionPair>> {
    check_hook(n, b)?;
    Ok(pairs(a + 1, b as usize, (n - b) as usize)
        .into_iter()
        .filter(|p| !p.largest_in_lam())
        .collect())
}

pub fn hook_sign_mult(n: u32, a: u32, b: u32) -> Result<u64> {
    Ok(hook_sign_pairs(n, a, b)?.len() as u64)
}

/// `Σ_{ρ} C(r_ρ, n-b-1)` over weakly decreasing `ρ` with `n` entries summing to `a`.
pub fn hook_sign_mult_cells(n: u32, a: u32, b: u32) -> Result<u64> {
    check_hook(n, b)?;
    let choose = (n - b - 1) as i64;
    padded_partitions(a, n as usize)
        .iter()
        .map(|rho| Ok(binomial(removable_cells_off_first_row(rho)? as i64, choose)))
        .sum()
}

pub fn hook_sign_positive(n: u32, a: u32, b: u32) -> bool {
    b < n && binomial((n - b) as i64, 2) <= a as u64 + 1
}

/// Pairs counted for the trivial multiplicity in `W_{(a+1,1^b)}(ℂⁿ)`: `lam` of
/// length `n-b`, `mu` of length `b`, total `a+1`, and `mu_1 < lam_1 - 1`
/// (vacuous when `b = 0`).
pub fn hook_triv_pairs(n: u32, a: u32, b: u32) -> Result<Vec<BiPartitionPair>> {
    check_hook(n, b)?;
    Ok(pairs(a + 1, (n - b) as usize, b as usize)
        .into_iter()
        .filter(BiPartitionPair::lam_clears_mu)
        .collect())
}

pub fn hook_triv_mult(n: u32, a: u32, b: u32) -> Result<u64> {
    Ok(hook_triv_pairs(n, a, b)?.len() as u64)
}

/// Removable-cell form of [`hook_triv_mult`]:
///
/// ```text
/// Σ_{ρ} C(r_ρ - ε_ρ, b)
/// ```
///
/// over weakly decreasing `ρ` with `n` entries summing to `a+1`, where `ε_ρ`
/// counts which of the values `ρ_1` and `ρ_1 - 1` occur among `ρ_2, ..., ρ_n`.
/// The binomial picks the distinct values of `μ` from the parts of `ρ` that
/// are at most `ρ_1 - 2`.
pub fn hook_triv_mult_cells(n: u32, a: u32, b: u32) -> Result<u64> {
    check_hook(n, b)?;
    padded_partitions(a + 1, n as usize)
        .iter()
        .map(|rho| {
            let parts = rho.parts();
            let top = parts[0];
            let blocked = [Some(top), top.checked_sub(1)]
                .into_iter()
                .flatten()
                .filter(|v| parts[1..].contains(v))
                .count();
            let r = removable_cells_off_first_row(rho)? as i64;
            Ok(binomial(r - blocked as i64, b as i64))
        })
        .sum()
}

pub fn hook_triv_positive(n: u32, a: u32, b: u32) -> bool {
    b < n && binomial(b as i64 + 1, 2) <= a as u64
}

/// Moves a largest part of `lam`, raised by one, into `mu`.
///
/// Defined when the largest part overall occurs in `lam`; the image has its
/// largest part only in `mu`.
pub fn omega(pair: &BiPartitionPair) -> Result<BiPartitionPair> {
    if !pair.largest_in_lam() {
        return Err(Error::OutsideDomain(format!(
            "{pair}: largest part does not occur in lam"
        )));
    }
    let lam = pair.lam.parts();
    let mut mu = Vec::with_capacity(pair.mu.len() + 1);
    mu.push(lam[0] + 1);
    mu.extend_from_slice(pair.mu.parts());
    BiPartitionPair::new(lam[1..].to_vec(), mu)
}

/// Inverse of [`omega`]: moves the largest part of `mu`, lowered by one, into `lam`.
pub fn omega_inv(pair: &BiPartitionPair) -> Result<BiPartitionPair> {
    let top = match pair.mu.first() {
        Some(m) if !pair.largest_in_lam() && m >= 1 => m,
        _ => {
            return Err(Error::OutsideDomain(format!(
                "{pair}: largest part does not occur only in mu"
            )))
        }
    };
    let mut lam = Vec::with_capacity(pair.lam.len() + 1);
    lam.push(top - 1);
    lam.extend_from_slice(pair.lam.parts());
    BiPartitionPair::new(lam, pair.mu.parts()[1..].to_vec())
}

/// The involution cancelling `Σ_i (-1)^i |D(n, a+1+i, b-i)|`, where `D(n, m, c)`
/// holds pairs with `lam` of length `n - c`, `mu` of length `c`, total `m`.
///
/// A pair in row `i = b - |mu|` with largest `lam` part `L` and largest `mu`
/// part `m`:
///
/// * if `mu` is nonempty and `m ≥ L - 1`, `m` is raised to `m + 1` and moved
///   into `lam` (row `i + 1`). This covers the blocked case `m = L - 1`, where
///   pushing `L` down would collide with `m`.
/// * otherwise `L` is lowered to `L - 1` and moved into `mu` (row `i - 1`).
///
/// Pairs in row 0 with `m ≤ L - 2` have nowhere to go; they are the fixed
/// points and are rejected.
pub fn omega_triv(pair: &BiPartitionPair, b: u32) -> Result<BiPartitionPair> {
    let row = b as i64 - pair.mu.len() as i64;
    if row < 0 {
        return Err(Error::OutsideDomain(format!(
            "{pair}: mu longer than b = {b}"
        )));
    }
    let raise = match (pair.lam.first(), pair.mu.first()) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(l), Some(m)) => m + 1 >= l,
    };
    if raise {
        let m = pair.mu.parts()[0];
        let mut lam = Vec::with_capacity(pair.lam.len() + 1);
        lam.push(m + 1);
        lam.extend_from_slice(pair.lam.parts());
        return BiPartitionPair::new(lam, pair.mu.parts()[1..].to_vec());
    }
    let l = match pair.lam.first() {
        Some(l) if row > 0 && l >= 1 => l,
        _ => {
            return Err(Error::OutsideDomain(format!(
                "{pair} is a fixed point (b = {b})"
            )))
        }
    };
    let mut mu = Vec::with_capacity(pair.mu.len() + 1);
    mu.push(l - 1);
    mu.extend_from_slice(pair.mu.parts());
    BiPartitionPair::new(pair.lam.parts()[1..].to_vec(), mu)
}

/// Summary of an involution check over one parameter triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCheck {
    /// Signed size of the alternating sum, row by row.
    pub alternating_sum: i64,
    /// Number of elements left unmatched.
    pub fixed_points: u64,
    /// Number of matched elements.
    pub matched: u64,
}

/// Checks that [`omega`] is a bijection `G(n,a+1+i,b-i) → R(n,a+2+i,b-i-1)`
/// for every row of the sign alternating sum and that the unmatched rest is
/// exactly the set counted by [`hook_sign_mult`].
pub fn check_sign_involution(n: u32, a: u32, b: u32) -> Result<InvolutionCheck> {
    check_hook(n, b)?;
    // row i: lam length b - i, mu length n - b + i, total a + 1 + i
    let row = |i: u32| pairs(a + 1 + i, (b - i) as usize, (n - b + i) as usize);
    let mut alternating_sum = 0i64;
    let mut matched = 0u64;
    for i in 0..=b {
        let here = row(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        alternating_sum += sign * here.len() as i64;
        let greens: Vec<&BiPartitionPair> = here.iter().filter(|p| p.largest_in_lam()).collect();
        if i == b {
            if !greens.is_empty() {
                return Err(Error::Inconsistent(format!(
                    "row {i} of (n,a,b)=({n},{a},{b}) has lam-largest pairs but no row below"
                )));
            }
            continue;
        }
        let below: std::collections::HashSet<BiPartitionPair> = row(i + 1)
            .into_iter()
            .filter(|p| !p.largest_in_lam())
            .collect();
        let mut image = std::collections::HashSet::new();
        for g in greens {
            let w = omega(g)?;
            if !below.contains(&w) {
                return Err(Error::Inconsistent(format!(
                    "omega{g} = {w} is not in the next row's mu-largest set"
                )));
            }
            if omega_inv(&w)? != *g {
                return Err(Error::Inconsistent(format!("omega_inv(omega{g}) != {g}")));
            }
            if !image.insert(w.clone()) {
                return Err(Error::Inconsistent(format!("omega not injective at {w}")));
            }
        }
        if image.len() != below.len() {
            return Err(Error::Inconsistent(format!(
                "omega misses {} elements of row {} for (n,a,b)=({n},{a},{b})",
                below.len() - image.len(),
                i + 1
            )));
        }
        matched += 2 * image.len() as u64;
    }
    let fixed = row(0).iter().filter(|p| !p.largest_in_lam()).count() as u64;
    Ok(InvolutionCheck {
        alternating_sum,
        fixed_points: fixed,
        matched,
    })
}

/// Checks that [`omega_triv`] is a sign-reversing involution on the rows of the
/// trivial alternating sum, and reports its fixed points.
pub fn check_triv_involution(n: u32, a: u32, b: u32) -> Result<InvolutionCheck> {
    check_hook(n, b)?;
    // row i: lam length n - b + i, mu length b - i, total a + 1 + i
    let mut alternating_sum = 0i64;
    let mut fixed = 0u64;
    let mut matched = 0u64;
    for i in 0..=b {
        let here = pairs(a + 1 + i, (n - b + i) as usize, (b - i) as usize);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        alternating_sum += sign * here.len() as i64;
        for p in &here {
            match omega_triv(p, b) {
                Ok(q) => {
                    let q_row = b - q.mu.len() as u32;
                    if q_row.abs_diff(i) != 1 || q.total() != a + 1 + q_row {
                        return Err(Error::Inconsistent(format!(
                            "omega_triv{p} = {q} does not land in an adjacent row"
                        )));
                    }
                    if omega_triv(&q, b)? != *p {
                        return Err(Error::Inconsistent(format!(
                            "omega_triv is not an involution at {p}"
                        )));
                    }
                    matched += 1;
                }
                Err(Error::OutsideDomain(_)) => {
                    if i != 0 || !p.lam_clears_mu() {
                        return Err(Error::Inconsistent(format!(
                            "unexpected fixed point {p} in row {i}"
                        )));
                    }
                    fixed += 1;
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(InvolutionCheck {
        alternating_sum,
        fixed_points: fixed,
        matched,
    })
}
