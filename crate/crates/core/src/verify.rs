//! Cross-verification suites over fixed parameter boxes.
//!
//! Each suite compares independent routes exactly and records the number of
//! checks, the number of failures, and the first counterexample. A [`Fault`]
//! perturbs one counting formula so the suites can be shown to catch it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::{as_count, Rational};
use crate::charpoly::{e_poly, h_poly, s_hook, CharPoly, Shape};
use crate::counts;
use crate::error::{invalid, Error, Result};
use crate::oracle::Oracle;
use crate::partitions::{partitions_of, Partition};
use crate::series::{gen_hook_moment, gen_hook_signed, gen_two_column, Caps, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(invalid(format!("unknown level {s:?}"))),
        }
    }
}

/// A deliberate off-by-one in one counting formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    QStarClosed,
    SignTwoColumn,
    HookSign,
    HookSignCells,
    HookTriv,
    HookTrivCells,
}

impl Fault {
    pub const ALL: [Fault; 6] = [
        Fault::QStarClosed,
        Fault::SignTwoColumn,
        Fault::HookSign,
        Fault::HookSignCells,
        Fault::HookTriv,
        Fault::HookTrivCells,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Fault::QStarClosed => "q-star-closed",
            Fault::SignTwoColumn => "sign-two-column",
            Fault::HookSign => "hook-sign",
            Fault::HookSignCells => "hook-sign-cells",
            Fault::HookTriv => "hook-triv",
            Fault::HookTrivCells => "hook-triv-cells",
        }
    }
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Fault::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown fault {s:?}")))
    }
}

/// The counting formulas under test, possibly with one fault applied.
/// Faults fire at `n = 4`, inside every box used below.
#[derive(Clone, Copy, Debug, Default)]
pub struct Formulas {
    fault: Option<Fault>,
}

impl Formulas {
    pub fn new(fault: Option<Fault>) -> Self {
        Formulas { fault }
    }

    fn bump(&self, which: Fault, n: u32, value: u64) -> u64 {
        if self.fault == Some(which) && n == 4 {
            value + 1
        } else {
            value
        }
    }

    pub fn q_star_closed(&self, n: u32, k: u32, l: u32) -> Result<u64> {
        Ok(self.bump(Fault::QStarClosed, n, counts::q_star_closed(n, k, l)?))
    }

    pub fn sign_mult_two_column(&self, n: u32, k: u32, l: u32) -> Result<u64> {
        Ok(self.bump(
            Fault::SignTwoColumn,
            n,
            counts::sign_mult_two_column(n, k, l)?,
        ))
    }

    pub fn hook_sign_mult(&self, n: u32, a: u32, b: u32) -> Result<u64> {
        Ok(self.bump(Fault::HookSign, n, counts::hook_sign_mult(n, a, b)?))
    }

    pub fn hook_sign_mult_cells(&self, n: u32, a: u32, b: u32) -> Result<u64> {
        Ok(self.bump(
            Fault::HookSignCells,
            n,
            counts::hook_sign_mult_cells(n, a, b)?,
        ))
    }

    pub fn hook_triv_mult(&self, n: u32, a: u32, b: u32) -> Result<u64> {
        Ok(self.bump(Fault::HookTriv, n, counts::hook_triv_mult(n, a, b)?))
    }

    pub fn hook_triv_mult_cells(&self, n: u32, a: u32, b: u32) -> Result<u64> {
        Ok(self.bump(
            Fault::HookTrivCells,
            n,
            counts::hook_triv_mult_cells(n, a, b)?,
        ))
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub criterion: u32,
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(criterion: u32, name: &'static str) -> Self {
        SuiteReport {
            criterion,
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// Every value in `values` must be `Ok` and equal.
    fn agree<T: PartialEq + fmt::Debug>(
        &mut self,
        context: impl fmt::Display,
        values: &[(&str, Result<T>)],
    ) {
        let ok = match values.first() {
            Some((_, Ok(first))) => values.iter().all(|(_, v)| v.as_ref().ok() == Some(first)),
            _ => false,
        };
        self.check(ok, || {
            let parts: Vec<String> = values
                .iter()
                .map(|(name, v)| match v {
                    Ok(x) => format!("{name}={x:?}"),
                    Err(e) => format!("{name}: error {e}"),
                })
                .collect();
            format!("{context}: {}", parts.join(", "))
        });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2}. {}: {}/{} checks passed",
            self.criterion,
            self.name,
            self.checks - self.failures,
            self.checks
        )?;
        if let Some(c) = &self.first_failure {
            write!(f, "\n      first counterexample: {c}")?;
        }
        Ok(())
    }
}

fn count(r: Rational) -> Result<u64> {
    as_count(&r).ok_or_else(|| Error::Inconsistent(format!("{r} is not a count")))
}

fn ones(n: u32) -> Partition {
    Partition::new(vec![1; n as usize]).expect("constant sequence")
}

/// The two worked examples by formula enumeration, removable-cell sum,
/// signed moment and oracle.
pub fn worked_examples(f: &Formulas) -> SuiteReport {
    let mut s = SuiteReport::new(1, "worked examples");
    for (a, b, n, expected) in [(3u32, 2u32, 5u32, 2u64), (2, 1, 3, 3)] {
        let ctx = format!("hook (a,b)=({a},{b}) n={n} sign");
        let lambda = Shape::Hook { a, b }.partition();
        s.agree(
            &ctx,
            &[
                ("expected", Ok(expected)),
                ("formula", f.hook_sign_mult(n, a, b)),
                ("cells", f.hook_sign_mult_cells(n, a, b)),
                ("moment", count(s_hook(a, b).signed_moment(n))),
                (
                    "oracle",
                    Oracle::new().restriction_coefficient(&lambda, &ones(n)),
                ),
            ],
        );
    }
    s
}

/// Fast moment formulas against class-wise summation on every `C(X, α)`.
pub fn fast_moments(level: Level) -> SuiteReport {
    let (size_max, n_max) = match level {
        Level::Quick => (5, 6),
        Level::Full => (8, 10),
    };
    let mut s = SuiteReport::new(2, "fast vs class-wise moments");
    for m in 0..=size_max {
        for alpha in partitions_of(m) {
            let p = CharPoly::from_binomial(&alpha);
            for n in 0..=n_max {
                let (fast, slow) = (p.signed_moment_fast(n), p.signed_moment(n));
                s.check(fast == slow, || {
                    format!("signed C(X,{alpha}) n={n}: fast {fast} vs {slow}")
                });
                let (fast, slow) = (p.moment_fast(n), p.moment(n));
                s.check(fast == slow, || {
                    format!("plain C(X,{alpha}) n={n}: fast {fast} vs {slow}")
                });
            }
        }
    }
    s
}

/// `q*` by enumeration against its closed form.
pub fn q_star(f: &Formulas, level: Level) -> SuiteReport {
    let (kl_max, n_max) = match level {
        Level::Quick => (6, 8),
        Level::Full => (12, 14),
    };
    let mut s = SuiteReport::new(3, "q* closed form");
    for n in 0..=n_max {
        for k in 0..=kl_max {
            for l in 0..=k {
                s.agree(
                    format!("q*_{n}({k},{l})"),
                    &[
                        ("enumerated", Ok(counts::q_star(n, k, l))),
                        ("closed", f.q_star_closed(n, k, l)),
                    ],
                );
            }
        }
    }
    s
}

/// Sign multiplicity for two-column shapes by four routes, and the support set.
pub fn two_column_sweep(f: &Formulas, level: Level, oracle: &mut Oracle) -> SuiteReport {
    let n_max = match level {
        Level::Quick => 5,
        Level::Full => 7,
    };
    let mut s = SuiteReport::new(4, "two-column sign sweep");
    for n in 2..=n_max {
        for k in 0..=n {
            for l in 0..=k {
                let shape = Shape::TwoColumn { k, l };
                let q_diff = if l == 0 {
                    f.q_star_closed(n, k, 0).map(|v| v as i64)
                } else {
                    f.q_star_closed(n, k, l)
                        .and_then(|x| Ok(x as i64 - f.q_star_closed(n, k + 1, l - 1)? as i64))
                };
                let moment = shape
                    .char_poly()
                    .and_then(|p| count(p.signed_moment(n)))
                    .map(|v| v as i64);
                let expected =
                    i64::from([(n - 1, 0), (n, 0), (n - 1, 1), (n, 1)].contains(&(k, l)));
                s.agree(
                    format!("(k,l)=({k},{l}) n={n}"),
                    &[
                        ("support", Ok(expected)),
                        ("formula", f.sign_mult_two_column(n, k, l).map(|v| v as i64)),
                        ("q-difference", q_diff),
                        ("moment", moment),
                        (
                            "oracle",
                            oracle
                                .sign_multiplicity(&shape.partition(), n)
                                .map(|v| v as i64),
                        ),
                    ],
                );
            }
        }
    }
    s
}

/// Every coefficient of the three generating functions against moments of
/// `E_i E_j` and `H_i E_j`.
pub fn generating_functions(level: Level) -> SuiteReport {
    let caps = match level {
        Level::Quick => Caps::new(5, 4, 5),
        Level::Full => Caps::new(8, 6, 8),
    };
    let mut s = SuiteReport::new(5, "generating-function coefficients");
    let two_column = gen_two_column(caps);
    let hook_signed = gen_hook_signed(caps);
    let hook_moment = gen_hook_moment(caps);
    let e: Vec<CharPoly> = (0..=caps.du.max(caps.dv))
        .map(|i| e_poly(i as i64))
        .collect();
    let h: Vec<CharPoly> = (0..=caps.du).map(|i| h_poly(i as i64)).collect();
    let check_series = |s: &mut SuiteReport,
                        name: &str,
                        series: &TruncSeries,
                        poly: &CharPoly,
                        i: u32,
                        j: u32,
                        signed: bool| {
        for n in 0..=caps.dz {
            let coeff = series.coeff(i, j, n);
            let m = if signed {
                poly.signed_moment(n)
            } else {
                poly.moment(n)
            };
            s.check(coeff == m, || {
                format!("{name} [u^{i} v^{j} z^{n}]: {coeff} vs moment {m}")
            });
        }
    };
    for i in 0..=caps.du {
        for j in 0..=caps.dv {
            let ee = e[i as usize].mul(&e[j as usize]);
            check_series(&mut s, "two-column", &two_column, &ee, i, j, true);
            let he = h[i as usize].mul(&e[j as usize]);
            check_series(&mut s, "hook signed", &hook_signed, &he, i, j, true);
            check_series(&mut s, "hook moment", &hook_moment, &he, i, j, false);
        }
    }
    s
}

/// The hook box shared by criteria 6 and 8.
fn hook_box(level: Level) -> Vec<(u32, u32, u32)> {
    let (a_max, b_max, n_max) = match level {
        Level::Quick => (4, 2, 6),
        Level::Full => (7, 4, 9),
    };
    let mut out = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            for n in b + 1..=n_max {
                out.push((a, b, n));
            }
        }
    }
    out
}

/// Pair enumeration, removable-cell sums and moments for hooks, plus the
/// oracle wherever the character polynomial is certified.
pub fn hook_formulas(f: &Formulas, level: Level, oracle: &mut Oracle) -> SuiteReport {
    let mut s = SuiteReport::new(6, "hook formulas");
    for (a, b, n) in hook_box(level) {
        let shape = Shape::Hook { a, b };
        let poly = s_hook(a, b);
        let lambda = shape.partition();
        let window = oracle.charpoly_window_check(&shape, n);
        let certified = matches!(window, Ok(true));
        s.check(window.is_ok(), || {
            format!("window check failed for {lambda} n={n}")
        });

        let mut sign = vec![
            ("formula", f.hook_sign_mult(n, a, b)),
            ("cells", f.hook_sign_mult_cells(n, a, b)),
            ("moment", count(poly.signed_moment(n))),
        ];
        if certified {
            sign.push(("oracle", oracle.sign_multiplicity(&lambda, n)));
        }
        s.agree(format!("sign (a,b)=({a},{b}) n={n}"), &sign);

        let mut triv = vec![
            ("formula", f.hook_triv_mult(n, a, b)),
            ("cells", f.hook_triv_mult_cells(n, a, b)),
            ("moment", count(poly.moment(n))),
        ];
        if certified {
            triv.push(("oracle", oracle.trivial_multiplicity(&lambda, n)));
        }
        s.agree(format!("trivial (a,b)=({a},{b}) n={n}"), &triv);
    }
    s
}

/// Positivity criteria against the enumerated counts.
pub fn positivity(f: &Formulas, level: Level) -> SuiteReport {
    let (a_max, b_max, n_max) = match level {
        Level::Quick => (6, 4, 6),
        Level::Full => (12, 8, 12),
    };
    let mut s = SuiteReport::new(7, "positivity");
    for a in 0..=a_max {
        for b in 0..=b_max {
            for n in b + 1..=n_max {
                s.agree(
                    format!("sign (a,b)=({a},{b}) n={n}"),
                    &[
                        ("criterion", Ok(counts::hook_sign_positive(n, a, b))),
                        ("count > 0", f.hook_sign_mult(n, a, b).map(|c| c > 0)),
                    ],
                );
                s.agree(
                    format!("trivial (a,b)=({a},{b}) n={n}"),
                    &[
                        ("criterion", Ok(counts::hook_triv_positive(n, a, b))),
                        ("count > 0", f.hook_triv_mult(n, a, b).map(|c| c > 0)),
                    ],
                );
            }
        }
    }
    s
}

/// Involution checks on the hook box, with fixed points against the formulas.
pub fn involutions(f: &Formulas, level: Level) -> SuiteReport {
    let mut s = SuiteReport::new(8, "involutions");
    for (a, b, n) in hook_box(level) {
        match counts::check_sign_involution(n, a, b) {
            Ok(c) => s.agree(
                format!("omega (a,b)=({a},{b}) n={n}"),
                &[
                    ("fixed points", Ok(c.fixed_points as i64)),
                    ("alternating sum", Ok(c.alternating_sum)),
                    ("formula", f.hook_sign_mult(n, a, b).map(|v| v as i64)),
                ],
            ),
            Err(e) => s.check(false, || format!("omega (a,b)=({a},{b}) n={n}: {e}")),
        }
        match counts::check_triv_involution(n, a, b) {
            Ok(c) => s.agree(
                format!("omega_triv (a,b)=({a},{b}) n={n}"),
                &[
                    ("fixed points", Ok(c.fixed_points as i64)),
                    ("alternating sum", Ok(c.alternating_sum)),
                    ("formula", f.hook_triv_mult(n, a, b).map(|v| v as i64)),
                ],
            ),
            Err(e) => s.check(false, || format!("omega_triv (a,b)=({a},{b}) n={n}: {e}")),
        }
    }
    s
}

/// Zero sign multiplicity for `|λ|+1 < n ≤ |λ|+4`: the oracle on every `λ`,
/// and the fast signed moment on every hook and two-column `λ`.
pub fn vanishing(level: Level, oracle: &mut Oracle) -> SuiteReport {
    let size_max = match level {
        Level::Quick => 4,
        Level::Full => 7,
    };
    let mut s = SuiteReport::new(9, "eventual vanishing");
    let mut polys: HashMap<Partition, CharPoly> = HashMap::new();
    for m in 0..=size_max {
        for a in 0..m {
            let shape = Shape::Hook { a, b: m - 1 - a };
            polys.insert(shape.partition(), s_hook(a, m - 1 - a));
        }
        for l in 0..=m / 2 {
            let shape = Shape::TwoColumn { k: m - l, l };
            if let Ok(p) = shape.char_poly() {
                polys.insert(shape.partition(), p);
            }
        }
    }
    for m in 0..=size_max {
        for lambda in partitions_of(m) {
            for n in m + 2..=m + 4 {
                let got = oracle.sign_multiplicity(&lambda, n);
                s.check(matches!(got, Ok(0)), || {
                    format!("oracle {lambda} n={n}: {got:?}")
                });
                if let Some(p) = polys.get(&lambda) {
                    let fast = p.signed_moment_fast(n);
                    s.check(fast.is_zero(), || format!("fast {lambda} n={n}: {fast}"));
                }
            }
        }
    }
    s
}

/// Criteria 1 to 9 in order.
pub fn run_all(level: Level, fault: Option<Fault>) -> Vec<SuiteReport> {
    let f = Formulas::new(fault);
    let mut oracle = Oracle::new();
    vec![
        worked_examples(&f),
        fast_moments(level),
        q_star(&f, level),
        two_column_sweep(&f, level, &mut oracle),
        generating_functions(level),
        hook_formulas(&f, level, &mut oracle),
        positivity(&f, level),
        involutions(&f, level),
        vanishing(level, &mut oracle),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_level_passes() {
        for r in run_all(Level::Quick, None) {
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0, "{r}");
        }
    }

    #[test]
    fn every_fault_is_caught() {
        for fault in Fault::ALL {
            let reports = run_all(Level::Quick, Some(fault));
            let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            assert!(!failing.is_empty(), "{fault:?} went unnoticed");
            assert!(failing.iter().all(|r| r.first_failure.is_some()));
        }
    }

    #[test]
    fn names_round_trip() {
        for fault in Fault::ALL {
            assert_eq!(fault.as_str().parse::<Fault>().unwrap(), fault);
        }
        assert_eq!("full".parse::<Level>().unwrap(), Level::Full);
        assert!("medium".parse::<Level>().is_err());
    }
}
