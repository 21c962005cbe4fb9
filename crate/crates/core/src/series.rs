//! Truncated power series in three commuting variables `u`, `v`, `z`.
//!
//! Arithmetic is exact modulo `(u^{du+1}, v^{dv+1}, z^{dz+1})`. Division is
//! multiplication by [`TruncSeries::inv`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Degree bounds `(du, dv, dz)`, inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    pub du: u32,
    pub dv: u32,
    pub dz: u32,
}

impl Caps {
    pub const fn new(du: u32, dv: u32, dz: u32) -> Self {
        Caps { du, dv, dz }
    }

    fn contains(&self, (i, j, k): Exp) -> bool {
        i <= self.du && j <= self.dv && k <= self.dz
    }

    fn tuple(&self) -> (u32, u32, u32) {
        (self.du, self.dv, self.dz)
    }
}

/// Exponents of `u`, `v`, `z`.
pub type Exp = (u32, u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    caps: Caps,
    coeffs: BTreeMap<Exp, Rational>,
}

impl TruncSeries {
    pub fn zero(caps: Caps) -> Self {
        TruncSeries {
            caps,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        Self::monomial(caps, (0, 0, 0), Rational::one())
    }

    /// `c · u^i v^j z^k`, or zero if the exponent lies outside the caps.
    pub fn monomial(caps: Caps, exp: Exp, c: Rational) -> Self {
        let mut s = Self::zero(caps);
        if caps.contains(exp) && !c.is_zero() {
            s.coeffs.insert(exp, c);
        }
        s
    }

    /// `1 + sign · u^i v^j z^k`.
    pub fn binomial_factor(caps: Caps, exp: Exp, sign: i64) -> Self {
        let mut s = Self::one(caps);
        s.add_term(exp, Rational::from_integer(sign.into()));
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rational {
        self.coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, exp: Exp, c: Rational) {
        if !self.caps.contains(exp) || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
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

    fn check_caps(&self, other: &TruncSeries) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::CapMismatch(self.caps.tuple(), other.caps.tuple()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            caps: self.caps,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_caps(other)?;
        let caps = self.caps;
        let mut out = Self::zero(caps);
        for (&(i1, j1, k1), c1) in &self.coeffs {
            for (&(i2, j2, k2), c2) in &other.coeffs {
                let e = (i1 + i2, j1 + j2, k1 + k2);
                if caps.contains(e) {
                    out.add_term(e, c1 * c2);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    ///
    /// Solves `a · b = 1` coefficient by coefficient in lexicographic exponent
    /// order: `b_e = -(1/a_0) Σ_{0 < f ≤ e} a_f b_{e-f}`.
    pub fn inv(&self) -> Result<TruncSeries> {
        let a0 = self.coeff(0, 0, 0);
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let caps = self.caps;
        let inv_a0 = a0.recip();
        let mut b: BTreeMap<Exp, Rational> = BTreeMap::new();
        b.insert((0, 0, 0), inv_a0.clone());
        let tail: Vec<(Exp, Rational)> = self
            .coeffs
            .iter()
            .filter(|(&e, _)| e != (0, 0, 0))
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        for i in 0..=caps.du {
            for j in 0..=caps.dv {
                for k in 0..=caps.dz {
                    if (i, j, k) == (0, 0, 0) {
                        continue;
                    }
                    let mut acc = Rational::zero();
                    for ((fi, fj, fk), c) in &tail {
                        if *fi <= i && *fj <= j && *fk <= k {
                            if let Some(bv) = b.get(&(i - fi, j - fj, k - fk)) {
                                acc += c * bv;
                            }
                        }
                    }
                    if !acc.is_zero() {
                        b.insert((i, j, k), -acc * &inv_a0);
                    }
                }
            }
        }
        Ok(TruncSeries { caps, coeffs: b })
    }

    /// Product of `1 + sign · u^j · v^vexp · z` over `j = 0..=j_max`.
    fn factor_product(caps: Caps, vexp: u32, sign: i64, j_max: u32) -> TruncSeries {
        let mut acc = Self::one(caps);
        for j in 0..=j_max {
            let f = Self::binomial_factor(caps, (j, vexp, 1), sign);
            acc = acc.mul(&f).expect("same caps");
        }
        acc
    }
}

/// `(1 + z)(1 + uvz) / ((1 - uz)(1 - vz))`: coefficient `[u^k v^l z^n]` is the
/// signed moment of `E_k E_l` at `n`.
pub fn gen_two_column(caps: Caps) -> TruncSeries {
    let num = TruncSeries::binomial_factor(caps, (0, 0, 1), 1)
        .mul(&TruncSeries::binomial_factor(caps, (1, 1, 1), 1))
        .expect("same caps");
    let den = TruncSeries::binomial_factor(caps, (1, 0, 1), -1)
        .mul(&TruncSeries::binomial_factor(caps, (0, 1, 1), -1))
        .expect("same caps");
    num.mul(&den.inv().expect("unit constant term"))
        .expect("same caps")
}

/// `∏_{j≥0} (1 + u^j z) / ∏_{j≥0} (1 - u^j v z)`: coefficient `[u^k v^l z^n]`
/// is the signed moment of `H_k E_l` at `n`.
pub fn gen_hook_signed(caps: Caps) -> TruncSeries {
    gen_hook_signed_factors(caps, caps.du)
}

/// [`gen_hook_signed`] with the infinite products cut at `j ≤ j_max`.
/// Factors with `j > du` are `1` modulo the truncation, so any
/// `j_max ≥ du` gives the same series.
pub fn gen_hook_signed_factors(caps: Caps, j_max: u32) -> TruncSeries {
    let num = TruncSeries::factor_product(caps, 0, 1, j_max);
    let den = TruncSeries::factor_product(caps, 1, -1, j_max);
    num.mul(&den.inv().expect("unit constant term"))
        .expect("same caps")
}

/// `∏_{j≥0} (1 + u^j v z) / ∏_{j≥0} (1 - u^j z)`: coefficient `[u^k v^l z^n]`
/// is the moment of `H_k E_l` at `n`.
pub fn gen_hook_moment(caps: Caps) -> TruncSeries {
    gen_hook_moment_factors(caps, caps.du)
}

pub fn gen_hook_moment_factors(caps: Caps, j_max: u32) -> TruncSeries {
    let num = TruncSeries::factor_product(caps, 1, 1, j_max);
    let den = TruncSeries::factor_product(caps, 0, -1, j_max);
    num.mul(&den.inv().expect("unit constant term"))
        .expect("same caps")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_int;
    use crate::charpoly::{e_poly, h_poly};
    use crate::partitions::padded_partitions;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        rational_from_int(n)
    }

    fn from_terms(caps: Caps, terms: &[(Exp, i64)]) -> TruncSeries {
        let mut s = TruncSeries::zero(caps);
        for &(e, c) in terms {
            s.add_term(e, q(c));
        }
        s
    }

    #[test]
    fn ring_examples() {
        let caps = Caps::new(2, 2, 2);
        let a = from_terms(caps, &[((0, 0, 0), 1), ((0, 0, 1), 1)]);
        let b = from_terms(caps, &[((0, 0, 0), 1), ((0, 0, 1), -1)]);
        assert_eq!(
            a.mul(&b).unwrap(),
            from_terms(caps, &[((0, 0, 0), 1), ((0, 0, 2), -1)])
        );
        let uz = TruncSeries::binomial_factor(caps, (1, 0, 1), 1);
        let vz = TruncSeries::binomial_factor(caps, (0, 1, 1), 1);
        assert_eq!(
            uz.mul(&vz).unwrap(),
            from_terms(
                caps,
                &[
                    ((0, 0, 0), 1),
                    ((1, 0, 1), 1),
                    ((0, 1, 1), 1),
                    ((1, 1, 2), 1)
                ]
            )
        );
    }

    #[test]
    fn cap_mismatch_is_an_error() {
        let a = TruncSeries::one(Caps::new(1, 1, 1));
        let b = TruncSeries::one(Caps::new(1, 1, 2));
        assert!(matches!(a.mul(&b), Err(Error::CapMismatch(..))));
        assert!(matches!(a.add(&b), Err(Error::CapMismatch(..))));
    }

    #[test]
    fn inverses() {
        let caps = Caps::new(4, 3, 4);
        let geo = TruncSeries::binomial_factor(caps, (1, 0, 1), -1)
            .inv()
            .unwrap();
        let expected = from_terms(caps, &(0..=4).map(|k| ((k, 0, k), 1)).collect::<Vec<_>>());
        assert_eq!(geo, expected);
        let a = TruncSeries::binomial_factor(caps, (0, 0, 1), 1);
        assert_eq!(a.inv().unwrap().mul(&a).unwrap(), TruncSeries::one(caps));
        assert_eq!(TruncSeries::zero(caps).inv(), Err(Error::NotInvertible));
    }

    #[test]
    fn two_column_low_coefficients() {
        let g = gen_two_column(Caps::new(3, 3, 3));
        assert_eq!(g.coeff(0, 0, 0), q(1));
        assert_eq!(g.coeff(1, 0, 1), q(1));
    }

    #[test]
    fn two_column_matches_signed_moments() {
        let caps = Caps::new(5, 5, 6);
        let g = gen_two_column(caps);
        for k in 0..=5 {
            for l in 0..=5 {
                let prod = e_poly(k as i64).mul(&e_poly(l as i64));
                for n in 0..=6 {
                    assert_eq!(g.coeff(k, l, n), prod.signed_moment(n), "k={k} l={l} n={n}");
                    assert_eq!(g.coeff(k, l, n), g.coeff(l, k, n));
                }
            }
        }
    }

    #[test]
    fn hook_signed_matches_signed_moments() {
        let caps = Caps::new(6, 4, 6);
        let g = gen_hook_signed(caps);
        assert_eq!(g.coeff(0, 0, 1), q(1));
        for k in 0..=6 {
            for l in 0..=4 {
                let prod = h_poly(k as i64).mul(&e_poly(l as i64));
                for n in 0..=6 {
                    assert_eq!(g.coeff(k, l, n), prod.signed_moment(n), "k={k} l={l} n={n}");
                }
            }
        }
    }

    #[test]
    fn hook_moment_matches_moments() {
        let caps = Caps::new(6, 4, 6);
        let g = gen_hook_moment(caps);
        assert_eq!(g.coeff(0, 0, 0), q(1));
        for k in 0..=6 {
            for l in 0..=4 {
                let prod = h_poly(k as i64).mul(&e_poly(l as i64));
                for n in 0..=6 {
                    assert_eq!(g.coeff(k, l, n), prod.moment(n), "k={k} l={l} n={n}");
                }
            }
            for n in 0..=6 {
                assert_eq!(
                    g.coeff(k, 0, n),
                    q(padded_partitions(k, n as usize).len() as i64)
                );
            }
        }
    }

    #[test]
    fn factor_truncation_is_exact() {
        let caps = Caps::new(6, 4, 6);
        assert_eq!(
            gen_hook_signed(caps),
            gen_hook_signed_factors(caps, caps.du + 3)
        );
        assert_eq!(
            gen_hook_moment(caps),
            gen_hook_moment_factors(caps, caps.du + 3)
        );
    }

    fn arb_series(caps: Caps, unit: bool) -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec(((0..=caps.du, 0..=caps.dv, 0..=caps.dz), -3i64..=3), 0..8)
            .prop_map(move |terms| {
                let mut s = TruncSeries::zero(caps);
                for (e, c) in terms {
                    s.add_term(e, q(c));
                }
                if unit {
                    s.coeffs.insert((0, 0, 0), q(1));
                }
                s
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn multiplication_commutes(
            a in arb_series(Caps::new(3, 2, 3), false),
            b in arb_series(Caps::new(3, 2, 3), false),
        ) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn inverse_is_involutive(a in arb_series(Caps::new(3, 2, 3), true)) {
            let inv = a.inv().unwrap();
            prop_assert_eq!(inv.mul(&a).unwrap(), TruncSeries::one(a.caps()));
            prop_assert_eq!(inv.inv().unwrap(), a);
        }
    }
}
