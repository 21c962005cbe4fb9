//! Character polynomials in the cycle-count variables `X_1, X_2, ...`.
//!
//! Polynomials are stored in the binomial basis `C(X, α) = ∏_i C(X_i, a_i)`,
//! where `a_i` is the number of parts of `α` equal to `i`. Multiplication uses
//! the per-variable structure constants
//!
//! ```text
//! C(x, a) C(x, b) = Σ_{c = max(a,b)}^{a+b} C(c, a) C(a, c - b) C(x, c)
//! ```
//!
//! so the monomial basis never materializes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, binomial_big, rational_from_big, Rational};
use crate::error::{invalid, Result};
use crate::partitions::{partitions_of, sgn_of, z_of, Partition};

/// A class function `Σ_α c_α C(X, α)` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharPoly {
    terms: BTreeMap<Partition, Rational>,
}

/// Number of cycles of each length; absent lengths have no cycles.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleType {
    counts: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn of_partition(alpha: &Partition) -> Self {
        let counts = alpha
            .multiplicities()
            .into_iter()
            .enumerate()
            .filter(|&(_, m)| m > 0)
            .map(|(i, m)| (i as u32 + 1, m))
            .collect();
        CycleType { counts }
    }

    /// Cycle type of a permutation of `0..perm.len()` in one-line notation.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut lengths = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::of_partition(&Partition::from_unsorted(lengths))
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u32)>) -> Self {
        CycleType {
            counts: counts.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    /// `X_i` at this cycle type.
    pub fn count(&self, length: u32) -> u32 {
        self.counts.get(&length).copied().unwrap_or(0)
    }
}

impl CharPoly {
    pub fn zero() -> Self {
        CharPoly::default()
    }

    pub fn one() -> Self {
        CharPoly::from_binomial(&Partition::empty())
    }

    /// The basis element `C(X, α)`.
    pub fn from_binomial(alpha: &Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(alpha.clone(), Rational::one());
        CharPoly { terms }
    }

    /// `((X, α)) = ∏_i C(X_i + a_i - 1, a_i)`, rewritten through
    /// `C(x + a - 1, a) = Σ_{j=1}^{a} C(a - 1, a - j) C(x, j)`.
    pub fn from_multichoose(alpha: &Partition) -> Self {
        let options: Vec<Vec<(u32, BigInt)>> = alpha
            .multiplicities()
            .iter()
            .map(|&a| {
                if a == 0 {
                    vec![(0, BigInt::one())]
                } else {
                    (1..=a)
                        .map(|j| {
                            let c = binomial(a as i64 - 1, (a - j) as i64);
                            (j, BigInt::from(c))
                        })
                        .collect()
                }
            })
            .collect();
        let mut out = CharPoly::zero();
        for (gamma, c) in expand_variables(&options) {
            out.add_term(gamma, Rational::from_integer(c));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &Partition) -> Rational {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `|α|` with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    fn add_term(&mut self, alpha: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CharPoly) -> CharPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> CharPoly {
        if c.is_zero() {
            return CharPoly::zero();
        }
        CharPoly {
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect(),
        }
    }

    /// Pointwise product of class functions, re-expanded in the binomial basis.
    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for (alpha, c) in &self.terms {
            for (beta, d) in &other.terms {
                let cd = c * d;
                for (gamma, n) in basis_product(alpha, beta) {
                    out.add_term(gamma, &cd * Rational::from_integer(n));
                }
            }
        }
        out
    }

    /// Substitutes `X_i := τ_i`.
    pub fn eval(&self, tau: &CycleType) -> Rational {
        let mut sum = Rational::zero();
        for (alpha, c) in &self.terms {
            let value = binomial_value(alpha, tau);
            if !value.is_zero() {
                sum += c * rational_from_big(value);
            }
        }
        sum
    }

    /// Average over `S_n`, summed class by class with weights `1 / z_α`.
    pub fn moment(&self, n: u32) -> Rational {
        partitions_of(n)
            .iter()
            .map(|alpha| {
                self.eval(&CycleType::of_partition(alpha)) / rational_from_big(z_of(alpha))
            })
            .sum()
    }

    /// Sign-weighted average over `S_n`, summed class by class.
    pub fn signed_moment(&self, n: u32) -> Rational {
        partitions_of(n)
            .iter()
            .map(|alpha| {
                let v = self.eval(&CycleType::of_partition(alpha)) / rational_from_big(z_of(alpha));
                if sgn_of(alpha) < 0 {
                    -v
                } else {
                    v
                }
            })
            .sum()
    }

    /// Signed moment from the binomial coefficients alone: `C(X, α)` contributes
    /// `sgn(α) / z_α` exactly when `n ∈ {|α|, |α| + 1}`.
    pub fn signed_moment_fast(&self, n: u32) -> Rational {
        self.terms
            .iter()
            .filter(|(alpha, _)| n == alpha.size() || n == alpha.size() + 1)
            .map(|(alpha, c)| {
                let v = c / rational_from_big(z_of(alpha));
                if sgn_of(alpha) < 0 {
                    -v
                } else {
                    v
                }
            })
            .sum()
    }

    /// Unsigned moment from the binomial coefficients alone: `C(X, α)` contributes
    /// `1 / z_α` whenever `n ≥ |α|`.
    pub fn moment_fast(&self, n: u32) -> Rational {
        self.terms
            .iter()
            .filter(|(alpha, _)| n >= alpha.size())
            .map(|(alpha, c)| c / rational_from_big(z_of(alpha)))
            .sum()
    }
}

/// `∏_i C(τ_i, a_i)`.
fn binomial_value(alpha: &Partition, tau: &CycleType) -> BigUint {
    let mut value = BigUint::one();
    for (i, &a) in alpha.multiplicities().iter().enumerate() {
        if a == 0 {
            continue;
        }
        let x = tau.count(i as u32 + 1) as u64;
        if (a as u64) > x {
            return BigUint::zero();
        }
        value *= binomial_big(x, a as u64);
    }
    value
}

/// `C(X, α) C(X, β)` as integer combination of basis elements.
fn basis_product(alpha: &Partition, beta: &Partition) -> Vec<(Partition, BigInt)> {
    let ma = alpha.multiplicities();
    let mb = beta.multiplicities();
    let width = ma.len().max(mb.len());
    let options: Vec<Vec<(u32, BigInt)>> = (0..width)
        .map(|i| {
            let a = ma.get(i).copied().unwrap_or(0) as i64;
            let b = mb.get(i).copied().unwrap_or(0) as i64;
            (a.max(b)..=a + b)
                .map(|c| {
                    let n = binomial(c, a) * binomial(a, c - b);
                    (c as u32, BigInt::from(n))
                })
                .collect()
        })
        .collect();
    expand_variables(&options)
}

/// Cartesian product of per-variable expansions. `options[i]` lists
/// `(multiplicity of part i+1, coefficient)` choices.
fn expand_variables(options: &[Vec<(u32, BigInt)>]) -> Vec<(Partition, BigInt)> {
    let mut acc: Vec<(Vec<u32>, BigInt)> = vec![(Vec::with_capacity(options.len()), BigInt::one())];
    for choices in options {
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for (mults, c) in &acc {
            for (m, d) in choices {
                let mut mults = mults.clone();
                mults.push(*m);
                next.push((mults, c * d));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(mults, c)| (Partition::from_multiplicities(&mults), c))
        .collect()
}

/// Character polynomial of `Sym^k`; zero for negative `k`.
pub fn h_poly(k: i64) -> CharPoly {
    if k < 0 {
        return CharPoly::zero();
    }
    let mut out = CharPoly::zero();
    for alpha in partitions_of(k as u32) {
        out = out.add(&CharPoly::from_multichoose(&alpha));
    }
    out
}

/// Character polynomial of `⋀^l`; zero for negative `l`.
pub fn e_poly(l: i64) -> CharPoly {
    if l < 0 {
        return CharPoly::zero();
    }
    let mut out = CharPoly::zero();
    for alpha in partitions_of(l as u32) {
        out.add_term(alpha.clone(), Rational::from_integer(sgn_of(&alpha).into()));
    }
    out
}

/// Dual Jacobi–Trudi: the character polynomial of the two-column shape `(k,l)'`
/// is `E_k E_l - E_{k+1} E_{l-1}`.
pub fn s_two_column(k: i64, l: i64) -> Result<CharPoly> {
    if l < 0 || k < l {
        return Err(invalid(format!("({k},{l}) is not a partition")));
    }
    Ok(e_poly(k)
        .mul(&e_poly(l))
        .sub(&e_poly(k + 1).mul(&e_poly(l - 1))))
}

/// Pieri alternating sum for the hook `(a+1, 1^b)`:
/// `Σ_{j=0}^{b} (-1)^j H_{a+1+j} E_{b-j}`.
pub fn s_hook(a: u32, b: u32) -> CharPoly {
    let mut out = CharPoly::zero();
    for j in 0..=b as i64 {
        let term = h_poly(a as i64 + 1 + j).mul(&e_poly(b as i64 - j));
        out = if j % 2 == 0 {
            out.add(&term)
        } else {
            out.sub(&term)
        };
    }
    out
}

/// The two shape families with closed-form character polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Two columns of heights `k >= l`, i.e. `λ = (2^l, 1^{k-l})`.
    TwoColumn { k: u32, l: u32 },
    /// The hook `(a+1, 1^b)`.
    Hook { a: u32, b: u32 },
}

impl Shape {
    pub fn partition(&self) -> Partition {
        let parts = match *self {
            Shape::TwoColumn { k, l } => {
                let mut v = vec![2; l as usize];
                v.extend(std::iter::repeat_n(1, k.saturating_sub(l) as usize));
                v
            }
            Shape::Hook { a, b } => {
                let mut v = vec![a + 1];
                v.extend(std::iter::repeat_n(1, b as usize));
                v
            }
        };
        Partition::from_unsorted(parts)
    }

    pub fn char_poly(&self) -> Result<CharPoly> {
        match *self {
            Shape::TwoColumn { k, l } => s_two_column(k as i64, l as i64),
            Shape::Hook { a, b } => Ok(s_hook(a, b)),
        }
    }
}

impl Add for &CharPoly {
    type Output = CharPoly;
    fn add(self, rhs: &CharPoly) -> CharPoly {
        CharPoly::add(self, rhs)
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;
    fn sub(self, rhs: &CharPoly) -> CharPoly {
        CharPoly::sub(self, rhs)
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: &CharPoly) -> CharPoly {
        CharPoly::mul(self, rhs)
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        self.scale(&-Rational::one())
    }
}

fn write_basis(f: &mut fmt::Formatter<'_>, alpha: &Partition) -> fmt::Result {
    let mut first = true;
    for (i, &a) in alpha.multiplicities().iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if a == 1 {
            write!(f, "X{}", i + 1)?;
        } else {
            write!(f, "C(X{},{})", i + 1, a)?;
        }
    }
    Ok(())
}

/// Binomial-basis notation, e.g. `X1 + C(X1,2) + X2` or `C(X1,2) - X2`.
/// Terms appear in increasing `(|α|, α)` order.
impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (alpha, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if alpha.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write_basis(f, alpha)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_int;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(i: u32) -> CharPoly {
        CharPoly::from_binomial(&p(&[i]))
    }

    fn q(n: i64) -> Rational {
        rational_from_int(n)
    }

    fn identity(n: u32) -> CycleType {
        CycleType::from_counts([(1, n)])
    }

    fn at(parts: &[u32]) -> CycleType {
        CycleType::of_partition(&p(parts))
    }

    /// Monomial-basis evaluation of `∏_i C(X_i + a_i - 1, a_i)`.
    fn multichoose_direct(alpha: &Partition, tau: &CycleType) -> Rational {
        alpha
            .multiplicities()
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let x = tau.count(i as u32 + 1) as i64;
                if a == 0 {
                    q(1)
                } else {
                    q(binomial(x + a as i64 - 1, a as i64) as i64)
                }
            })
            .product()
    }

    #[test]
    fn basis_constructors() {
        assert_eq!(
            CharPoly::from_binomial(&Partition::empty()),
            CharPoly::one()
        );
        assert_eq!(CharPoly::from_binomial(&p(&[1])).to_string(), "X1");
        assert_eq!(CharPoly::from_binomial(&p(&[2, 2])).to_string(), "C(X2,2)");
        assert_eq!(CharPoly::from_binomial(&p(&[2, 1])).to_string(), "X1*X2");
    }

    #[test]
    fn multichoose_examples() {
        assert_eq!(CharPoly::from_multichoose(&p(&[1])), x(1));
        let mc = CharPoly::from_multichoose(&p(&[1, 1]));
        assert_eq!(mc.to_string(), "X1 + C(X1,2)");
        for v in 0..=5 {
            assert_eq!(mc.eval(&identity(v)), q(binomial(v as i64 + 1, 2) as i64));
        }
        assert_eq!(CharPoly::from_multichoose(&p(&[2])), x(2));
    }

    #[test]
    fn linear_combinations() {
        assert!(x(1).add(&-&x(1)).is_zero());
        assert!(x(3).scale(&q(0)).is_zero());
        let s = CharPoly::from_binomial(&p(&[2])).add(&CharPoly::from_binomial(&p(&[1, 1])));
        assert_eq!(s.eval(&at(&[2, 1, 1])), q(2));
    }

    #[test]
    fn products() {
        let h2 = h_poly(2);
        assert_eq!(CharPoly::one().mul(&h2), h2);
        let sq = x(1).mul(&x(1));
        assert_eq!(
            sq,
            CharPoly::from_binomial(&p(&[1, 1])).scale(&q(2)).add(&x(1))
        );
        for v in 0..=5 {
            assert_eq!(sq.eval(&identity(v)), q((v * v) as i64));
        }
        assert_eq!(x(1).mul(&x(2)), CharPoly::from_binomial(&p(&[2, 1])));
    }

    #[test]
    fn sym_square_example() {
        let h2 = h_poly(2);
        assert_eq!(h2.to_string(), "X1 + C(X1,2) + X2");
        assert_eq!(h2.eval(&at(&[1, 1, 1])), q(6));
        assert_eq!(h2.eval(&at(&[2, 1])), q(2));
        assert_eq!(CharPoly::zero().eval(&at(&[2, 1])), q(0));
    }

    #[test]
    fn sym_and_wedge_dimensions() {
        assert_eq!(h_poly(0), CharPoly::one());
        assert_eq!(e_poly(0), CharPoly::one());
        assert!(h_poly(-1).is_zero());
        assert!(e_poly(-1).is_zero());
        assert_eq!(e_poly(1), x(1));
        assert_eq!(e_poly(2).to_string(), "C(X1,2) - X2");
        for n in 1..=6u32 {
            assert_eq!(
                h_poly(3).eval(&identity(n)),
                q(binomial(n as i64 + 2, 3) as i64)
            );
        }
        for n in 0..=8u32 {
            for l in 0..=n {
                assert_eq!(
                    e_poly(l as i64).eval(&identity(n)),
                    q(binomial(n as i64, l as i64) as i64)
                );
            }
        }
    }

    #[test]
    fn two_column_shapes() {
        assert_eq!(s_two_column(1, 0).unwrap(), x(1));
        let s11 = s_two_column(1, 1).unwrap();
        assert_eq!(s11.to_string(), "X1 + C(X1,2) + X2");
        assert_eq!(s11, h_poly(2));
        let s21 = s_two_column(2, 1).unwrap();
        for (n, dim) in [(2, 2), (3, 8), (4, 20), (5, 40)] {
            assert_eq!(s21.eval(&identity(n)), q(dim));
        }
        assert!(s_two_column(1, 2).is_err());
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(s_hook(0, 0), x(1));
        let h11 = s_hook(1, 1);
        assert_eq!(h11, h_poly(2).mul(&e_poly(1)).sub(&h_poly(3)));
        for (n, dim) in [(2, 2), (3, 8), (4, 20), (5, 40)] {
            assert_eq!(h11.eval(&identity(n)), q(dim));
        }
        // (2,1) = (1|1) = (2,1)'
        let two_col = s_two_column(2, 1).unwrap();
        for n in 0..=7 {
            for alpha in partitions_of(n) {
                let t = CycleType::of_partition(&alpha);
                assert_eq!(two_col.eval(&t), h11.eval(&t));
            }
        }
    }

    #[test]
    fn moments() {
        for n in 0..=7 {
            assert_eq!(CharPoly::one().moment(n), q(1));
        }
        for n in 1..=7 {
            assert_eq!(x(1).moment(n), q(1));
        }
        for n in 2..=7 {
            assert!(CharPoly::one().signed_moment(n).is_zero());
        }
        assert_eq!(s_hook(3, 2).signed_moment(5), q(2));
        assert_eq!(s_hook(2, 1).signed_moment(3), q(3));
        assert_eq!(s_hook(2, 1).moment(3), q(2));
    }

    #[test]
    fn fast_signed_moment_examples() {
        let c2 = CharPoly::from_binomial(&p(&[2]));
        let half = Rational::new((-1).into(), 2.into());
        assert_eq!(c2.signed_moment_fast(2), half);
        assert_eq!(c2.signed_moment_fast(3), half);
        assert!(c2.signed_moment_fast(4).is_zero());
    }

    #[test]
    fn fast_moments_agree_on_basis() {
        for size in 0..=7 {
            for alpha in partitions_of(size) {
                let b = CharPoly::from_binomial(&alpha);
                for n in 0..=9 {
                    assert_eq!(b.signed_moment_fast(n), b.signed_moment(n), "{alpha} n={n}");
                    assert_eq!(b.moment_fast(n), b.moment(n), "{alpha} n={n}");
                }
            }
        }
    }

    /// Count multisets {i, j} of [n] fixed by a permutation, over all of S_n.
    #[test]
    fn sym_square_counts_fixed_multisets() {
        for n in 0..=7usize {
            let mut perm: Vec<usize> = (0..n).collect();
            let mut seen_types = std::collections::HashSet::new();
            loop {
                let tau = CycleType::of_permutation(&perm);
                if seen_types.insert(format!("{tau:?}")) {
                    let mut fixed = 0i64;
                    for i in 0..n {
                        for j in i..n {
                            let (a, b) = (perm[i], perm[j]);
                            if (a == i && b == j) || (a == j && b == i) {
                                fixed += 1;
                            }
                        }
                    }
                    assert_eq!(h_poly(2).eval(&tau), q(fixed));
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
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
    fn printer_golden() {
        assert_eq!(CharPoly::zero().to_string(), "0");
        assert_eq!(CharPoly::one().to_string(), "1");
        let poly = CharPoly::one()
            .scale(&q(-2))
            .add(&CharPoly::from_binomial(&p(&[3, 1, 1])).scale(&Rational::new(1.into(), 2.into())))
            .sub(&x(2));
        assert_eq!(poly.to_string(), "-2 - X2 + 1/2*C(X1,2)*X3");
        // s_(2,1) = (p1^3 - p3) / 3 with p1 = X1, p3 = X1 + 3 X3
        assert_eq!(s_hook(1, 1).to_string(), "2*C(X1,2) + 2*C(X1,3) - X3");
    }

    fn arb_basis() -> impl Strategy<Value = Partition> {
        (0u32..=6).prop_flat_map(|size| {
            let all = partitions_of(size);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    fn arb_poly() -> impl Strategy<Value = CharPoly> {
        proptest::collection::vec((arb_basis(), -5i64..=5), 0..4).prop_map(|terms| {
            terms.into_iter().fold(CharPoly::zero(), |acc, (alpha, c)| {
                acc.add(&CharPoly::from_binomial(&alpha).scale(&q(c)))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn eval_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            let fg = f.mul(&g);
            for n in 0..=8 {
                for alpha in partitions_of(n) {
                    let t = CycleType::of_partition(&alpha);
                    prop_assert_eq!(fg.eval(&t), f.eval(&t) * g.eval(&t));
                }
            }
        }

        #[test]
        fn multichoose_matches_direct_formula(alpha in arb_basis()) {
            let mc = CharPoly::from_multichoose(&alpha);
            for n in 0..=8 {
                for tau in partitions_of(n) {
                    let t = CycleType::of_partition(&tau);
                    prop_assert_eq!(mc.eval(&t), multichoose_direct(&alpha, &t));
                }
            }
        }

        #[test]
        fn product_is_commutative(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
        }
    }
}
