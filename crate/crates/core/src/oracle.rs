//! Restriction coefficients from first principles.
//!
//! Irreducible characters of `S_n` come from the Murnaghan–Nakayama rule on
//! beta-sets. The character of `W_λ(ℂⁿ)` at a permutation of type `α` is the
//! Schur polynomial at its eigenvalues, expanded in power sums:
//! `Σ_{ν ⊢ |λ|} χ^λ(ν) / z_ν · ∏_i p_{ν_i}(α)`, where `p_m(α)` is the number of
//! fixed points of `σ^m`. Only the partitions module is shared with the fast
//! paths.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{rational_from_big, Rational};
use crate::charpoly::{CycleType, Shape};
use crate::error::{invalid, Error, Result};
use crate::partitions::{partitions_of, z_of, Partition};

/// Memoizing evaluator for characters and restriction coefficients.
#[derive(Default)]
pub struct Oracle {
    chi: HashMap<(Partition, Partition), i64>,
    weyl: HashMap<(Partition, Partition), BigInt>,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    /// `χ^μ(α)` by border-strip removal.
    pub fn character(&mut self, mu: &Partition, alpha: &Partition) -> Result<i64> {
        if mu.size() != alpha.size() {
            return Err(Error::SizeMismatch(mu.to_string(), alpha.to_string()));
        }
        Ok(self.mn(mu, alpha))
    }

    fn mn(&mut self, mu: &Partition, alpha: &Partition) -> i64 {
        if alpha.is_empty() {
            return i64::from(mu.is_empty());
        }
        let key = (mu.clone(), alpha.clone());
        if let Some(&v) = self.chi.get(&key) {
            return v;
        }
        let strip = alpha.parts()[0];
        let rest = Partition::new(alpha.parts()[1..].to_vec()).expect("suffix of a partition");
        let mut total = 0;
        for (smaller, sign) in remove_border_strips(mu, strip) {
            total += sign * self.mn(&smaller, &rest);
        }
        self.chi.insert(key, total);
        total
    }

    /// Character of `W_λ(ℂⁿ)` restricted to `S_n`, at cycle type `alpha ⊢ n`.
    pub fn weyl_character(&mut self, lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
        let n = alpha.size();
        if lambda.len() > n as usize {
            return Err(invalid(format!(
                "W_{lambda}(C^{n}) is undefined: {lambda} has more than {n} parts"
            )));
        }
        let key = (lambda.clone(), alpha.clone());
        if let Some(v) = self.weyl.get(&key) {
            return Ok(v.clone());
        }
        let power_sums: Vec<BigInt> = (0..=lambda.size())
            .map(|m| BigInt::from(fixed_points_of_power(alpha, m)))
            .collect();
        let mut total = Rational::zero();
        for nu in partitions_of(lambda.size()) {
            let chi = self.mn(lambda, &nu);
            if chi == 0 {
                continue;
            }
            let prod: BigInt = nu
                .parts()
                .iter()
                .map(|&p| &power_sums[p as usize])
                .product();
            total += Rational::from_integer(prod * chi) / rational_from_big(z_of(&nu));
        }
        if !total.is_integer() {
            return Err(Error::Inconsistent(format!(
                "character of W_{lambda} at {alpha} is {total}"
            )));
        }
        let value = total.to_integer();
        self.weyl.insert(key, value.clone());
        Ok(value)
    }

    /// Multiplicity of `V_μ` in `W_λ(ℂⁿ)` restricted to `S_n`, `n = |μ|`.
    pub fn restriction_coefficient(&mut self, lambda: &Partition, mu: &Partition) -> Result<u64> {
        let n = mu.size();
        if lambda.len() > n as usize {
            return Err(invalid(format!(
                "W_{lambda}(C^{n}) is undefined: {lambda} has more than {n} parts"
            )));
        }
        let mut total = Rational::zero();
        for alpha in partitions_of(n) {
            let chi = self.mn(mu, &alpha);
            if chi == 0 {
                continue;
            }
            let w = self.weyl_character(lambda, &alpha)?;
            total += Rational::from_integer(w * chi) / rational_from_big(z_of(&alpha));
        }
        if !total.is_integer() || total.is_negative() {
            return Err(Error::Inconsistent(format!(
                "restriction coefficient r_{{{lambda},{mu}}} came out as {total}"
            )));
        }
        u64::try_from(total.to_integer())
            .map_err(|_| Error::Inconsistent(format!("r_{{{lambda},{mu}}} overflows")))
    }

    /// Multiplicity of the trivial representation, `r_{λ,(n)}`.
    pub fn trivial_multiplicity(&mut self, lambda: &Partition, n: u32) -> Result<u64> {
        let trivial = Partition::new(if n == 0 { vec![] } else { vec![n] })?;
        self.restriction_coefficient(lambda, &trivial)
    }

    /// Multiplicity of the sign representation, `r_{λ,(1^n)}`.
    pub fn sign_multiplicity(&mut self, lambda: &Partition, n: u32) -> Result<u64> {
        let sign = Partition::new(vec![1; n as usize])?;
        self.restriction_coefficient(lambda, &sign)
    }

    /// Whether the character polynomial of `shape` agrees with the true
    /// character of `W_λ(ℂⁿ)` on every class of `S_n`. False when `W_λ(ℂⁿ)`
    /// is undefined.
    pub fn charpoly_window_check(&mut self, shape: &Shape, n: u32) -> Result<bool> {
        let lambda = shape.partition();
        if lambda.len() > n as usize {
            return Ok(false);
        }
        let poly = shape.char_poly()?;
        for alpha in partitions_of(n) {
            let expected = Rational::from_integer(self.weyl_character(&lambda, &alpha)?);
            if poly.eval(&CycleType::of_partition(&alpha)) != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Number of fixed points of `σ^m` for `σ` of type `alpha`: `Σ_{d | m} d · a_d`.
/// For `m = 0` every point is fixed.
fn fixed_points_of_power(alpha: &Partition, m: u32) -> u64 {
    if m == 0 {
        return alpha.size() as u64;
    }
    alpha
        .parts()
        .iter()
        .filter(|&&d| m.is_multiple_of(d))
        .map(|&d| d as u64)
        .sum()
}

/// Every partition obtained from `mu` by removing a border strip of `size`
/// cells, with the sign `(-1)^{height}`.
fn remove_border_strips(mu: &Partition, size: u32) -> Vec<(Partition, i64)> {
    let len = mu.len() as u32;
    let beta: Vec<u32> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        if x < size {
            continue;
        }
        let target = x - size;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&y| y > target && y < x).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &y)| y - (len - 1 - i as u32))
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((
            Partition::new(parts).expect("beta-set decodes to a partition"),
            sign,
        ));
    }
    out
}

/// Full character table of `S_n`, rows indexed by irreducibles and columns by
/// classes, both in reverse-lexicographic order.
pub struct CharTable {
    n: u32,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(n: u32) -> Self {
        let partitions = partitions_of(n);
        let mut oracle = Oracle::new();
        let values = partitions
            .iter()
            .map(|mu| {
                partitions
                    .iter()
                    .map(|alpha| oracle.mn(mu, alpha))
                    .collect()
            })
            .collect();
        CharTable {
            n,
            partitions,
            values,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, mu: &Partition, alpha: &Partition) -> Option<i64> {
        let row = self.partitions.iter().position(|p| p == mu)?;
        let col = self.partitions.iter().position(|p| p == alpha)?;
        Some(self.values[row][col])
    }

    /// `Σ_α χ^μ(α) χ^ν(α) / z_α`.
    pub fn inner_product(&self, mu: usize, nu: usize) -> Rational {
        self.partitions
            .iter()
            .enumerate()
            .map(|(c, alpha)| {
                Rational::from_integer(BigInt::from(self.values[mu][c] * self.values[nu][c]))
                    / rational_from_big(z_of(alpha))
            })
            .sum()
    }
}

pub fn mn_character(mu: &Partition, alpha: &Partition) -> Result<i64> {
    Oracle::new().character(mu, alpha)
}

pub fn weyl_character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    Oracle::new().weyl_character(lambda, alpha)
}

pub fn restriction_coefficient(lambda: &Partition, mu: &Partition) -> Result<u64> {
    Oracle::new().restriction_coefficient(lambda, mu)
}

pub fn charpoly_window_check(shape: &Shape, n: u32) -> Result<bool> {
    Oracle::new().charpoly_window_check(shape, n)
}
