//! Partitions, multipartitions, the restriction ladder, and residue
//! statistics, together with exhaustive enumeration of the restricted
//! families.
//!
//! A multipartition `pi = (pi^(1), ..., pi^(m))` belongs to the family with
//! parameter `a` when every component is strict and the ladder condition
//! holds: the largest part of `pi^(i)` is at most the length of `pi^(i+1)`,
//! with one extra unit of slack at `i = a` (vacuous when `a = m`).
//!
//! Nodes `(i, j)` of component `s` carry the residue `(j - i + t_s) mod 2`
//! with offsets `t_1 = ... = t_a = 0`, `t_{a+1} = ... = t_m = 1`; the
//! statistic `omega` is the count of residue-0 nodes minus residue-1 nodes.
//! Residue counting is implemented for a general modulus, but only the
//! mod-2 statistic feeds the identities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::num::rat;
use crate::series::QSeries;
use crate::xpoly::XPoly;

/// A partition: weakly decreasing list of positive integers. The empty
/// partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Construct from parts; panics unless they are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<i64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `|lambda|`, the sum of parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of parts.
    pub fn len(&self) -> i64 {
        self.parts.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, with the convention that the empty partition has 0.
    pub fn first_part(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        let mut i = 1;
        loop {
            let count = self.parts.iter().take_while(|&&p| p >= i).count() as i64;
            if count == 0 {
                break;
            }
            cols.push(count);
            i += 1;
        }
        Partition { parts: cols }
    }

    /// True iff all parts are distinct (vacuously true for the empty
    /// partition).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Successive differences are all `< e` (including the last part).
    pub fn is_e_restricted(&self, e: i64) -> bool {
        let mut prev = None;
        for &p in &self.parts {
            if let Some(q) = prev {
                if q - p >= e {
                    return false;
                }
            }
            prev = Some(p);
        }
        prev.is_none_or(|last| last < e)
    }

    /// Alternating sum `lambda_1 - lambda_2 + lambda_3 - ...`.
    pub fn alt_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| if i % 2 == 0 { p } else { -p })
            .sum()
    }
}

/// Staircase/column decomposition of a strict partition:
/// `delta = (l, l-1, ..., 1)` and `sigma = (pi_1 - l, pi_2 - l + 1, ...,
/// pi_l - 1)^T`, so that `pi_i = delta_i + (sigma^T)_i`.
pub fn delta_sigma(pi: &Partition) -> Result<(Partition, Partition)> {
    if !pi.is_strict() {
        return Err(Error::NotStrict);
    }
    let l = pi.len();
    let delta = Partition {
        parts: (1..=l).rev().collect(),
    };
    let shifted: Vec<i64> = pi
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p - l + i as i64)
        .filter(|&p| p > 0)
        .collect();
    let sigma = Partition { parts: shifted }.conjugate();
    Ok((delta, sigma))
}

/// The mod-2 residue statistic of a strict partition with offset 0, computed
/// by the closed formula `(-1)^{l-1} (ceil(l/2) - |sigma|_a)`.
pub fn omega_strict_formula(pi: &Partition) -> Result<i64> {
    let (_, sigma) = delta_sigma(pi)?;
    let l = pi.len();
    if l == 0 {
        return Ok(0);
    }
    let sign = if (l - 1) % 2 == 0 { 1 } else { -1 };
    Ok(sign * ((l + 1) / 2 - sigma.alt_sum()))
}

/// An m-tuple of partitions, `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "multipartition needs m >= 1");
        Multipartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn len(&self) -> i64 {
        self.components.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    /// `|pi|`, total number of nodes.
    pub fn size(&self) -> i64 {
        self.components.iter().map(Partition::size).sum()
    }

    /// Componentwise conjugate.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition {
            components: self.components.iter().map(Partition::conjugate).collect(),
        }
    }
}

/// Residue counts `c0` / `c1` of a multipartition and the statistic
/// `omega = c0 - c1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    pub c0: i64,
    pub c1: i64,
}

impl ResidueProfile {
    pub fn omega(&self) -> i64 {
        self.c0 - self.c1
    }
}

/// Residue offsets for the family parameter: `t_1..t_a = 0`, the rest 1.
pub fn offsets_for(a: i64, m: i64) -> Vec<i64> {
    (1..=m).map(|s| if s <= a { 0 } else { 1 }).collect()
}

/// Count nodes by residue class mod `p` with per-component offsets.
pub fn residue_counts(pi: &Multipartition, offsets: &[i64], p: i64) -> Vec<i64> {
    assert!(p >= 1 && offsets.len() == pi.components.len());
    let mut counts = vec![0i64; p as usize];
    for (component, &t) in pi.components.iter().zip(offsets) {
        for (i, &part) in component.parts.iter().enumerate() {
            for j in 1..=part {
                let r = (j - (i as i64 + 1) + t).rem_euclid(p);
                counts[r as usize] += 1;
            }
        }
    }
    counts
}

/// Mod-2 residue profile with the offsets determined by `a`.
pub fn residue_profile(pi: &Multipartition, a: i64) -> Result<ResidueProfile> {
    let m = pi.len();
    if a < 1 || a > m {
        return Err(Error::BadParameters("residue profile needs 1 <= a <= m"));
    }
    let counts = residue_counts(pi, &offsets_for(a, m), 2);
    Ok(ResidueProfile {
        c0: counts[0],
        c1: counts[1],
    })
}

/// Membership in the restricted family: every component strict, and the
/// ladder condition with slack at position `a`. `a = 0` is accepted as an
/// alias for `a = m` (all offsets equal).
pub fn is_restricted(pi: &Multipartition, a: i64) -> Result<bool> {
    let m = pi.len();
    if a < 0 || a > m {
        return Err(Error::BadParameters("need 0 <= a <= m"));
    }
    let a = if a == 0 { m } else { a };
    if !pi.components.iter().all(Partition::is_strict) {
        return Ok(false);
    }
    for i in 1..m {
        let slack = if i == a { 1 } else { 0 };
        let this = &pi.components[(i - 1) as usize];
        let next = &pi.components[i as usize];
        if this.first_part() > next.len() + slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The conjugate-side restriction from the definition of `(e, t)`-restricted
/// multipartitions: components e-restricted, and
/// `l(lambda^(i)) + t_i <= lambda_1^(i+1) + t_{i+1}`.
pub fn is_e_restricted_multi(lambda: &Multipartition, e: i64, offsets: &[i64]) -> bool {
    assert_eq!(offsets.len(), lambda.components.len());
    if !lambda.components.iter().all(|c| c.is_e_restricted(e)) {
        return false;
    }
    for i in 0..lambda.components.len() - 1 {
        if lambda.components[i].len() + offsets[i]
            > lambda.components[i + 1].first_part() + offsets[i + 1]
        {
            return false;
        }
    }
    true
}

/// All partitions of `n` with parts at most `max_part`.
pub fn partitions_of(n: i64, max_part: i64) -> Vec<Partition> {
    fn rec(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut p = max.min(n);
        while p >= 1 {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        rec(n, max_part, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `n` into distinct parts at most `max_part`.
pub fn strict_partitions_of(n: i64, max_part: i64) -> Vec<Partition> {
    fn rec(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut p = max.min(n);
        while p >= 1 {
            prefix.push(p);
            rec(n - p, p - 1, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        rec(n, max_part, &mut Vec::new(), &mut out);
    }
    out
}

/// All m-multipartitions of `n`.
pub fn multipartitions_of(n: i64, m: i64) -> Vec<Multipartition> {
    assert!(m >= 1);
    fn rec(n: i64, remaining: i64, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if remaining == 1 {
            for p in partitions_of(n, n) {
                prefix.push(p);
                out.push(Multipartition {
                    components: prefix.clone(),
                });
                prefix.pop();
            }
            return;
        }
        for k in 0..=n {
            for p in partitions_of(k, k) {
                prefix.push(p);
                rec(n - k, remaining - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// Ceiling on the size `n` that exhaustive multipartition enumeration will
/// accept. Enumeration is exponential in practice, so the defaults keep the
/// full suite at desk scale; override with [`EnumBudget::with_ceiling`] or the
/// CLI `--budget` flag.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumBudget {
    override_all: Option<i64>,
}

impl EnumBudget {
    pub fn with_ceiling(n: i64) -> Self {
        EnumBudget {
            override_all: Some(n),
        }
    }

    pub fn ceiling(&self, m: i64) -> i64 {
        if let Some(n) = self.override_all {
            return n;
        }
        match m {
            1 => 40,
            2 => 30,
            3 => 18,
            _ => 14,
        }
    }

    fn check(&self, m: i64, n: i64) -> Result<()> {
        let ceiling = self.ceiling(m);
        if n > ceiling {
            Err(Error::BudgetExceeded {
                requested: n,
                ceiling,
            })
        } else {
            Ok(())
        }
    }
}

fn validate_family(a: i64, m: i64) -> Result<()> {
    if m < 1 || a < 0 || a > m {
        Err(Error::BadParameters("need m >= 1 and 0 <= a <= m"))
    } else {
        Ok(())
    }
}

/// Number of restricted m-multipartitions of `n`.
pub fn count_lambda(a: i64, m: i64, n: i64, budget: &EnumBudget) -> Result<u64> {
    validate_family(a, m)?;
    budget.check(m, n)?;
    let mut count = 0;
    for pi in multipartitions_of(n, m) {
        if is_restricted(&pi, a)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts of restricted m-multipartitions of `n` split by the statistic
/// `omega`.
pub fn count_lambda_omega(a: i64, m: i64, n: i64, budget: &EnumBudget) -> Result<BTreeMap<i64, u64>> {
    validate_family(a, m)?;
    budget.check(m, n)?;
    let a_res = if a == 0 { m } else { a };
    let mut counts = BTreeMap::new();
    for pi in multipartitions_of(n, m) {
        if is_restricted(&pi, a)? {
            let omega = residue_profile(&pi, a_res)?.omega();
            *counts.entry(omega).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// The bivariate generating function of the restricted family by exhaustive
/// enumeration: coefficient of `x^omega q^n` counts members of size `n` with
/// statistic `omega`.
pub fn gf_lambda(a: i64, m: i64, order: i64, budget: &EnumBudget) -> Result<QSeries> {
    validate_family(a, m)?;
    budget.check(m, order)?;
    let a_res = if a == 0 { m } else { a };
    let mut coeffs: BTreeMap<i64, XPoly> = BTreeMap::new();
    for n in 0..=order {
        for pi in multipartitions_of(n, m) {
            if is_restricted(&pi, a)? {
                let omega = residue_profile(&pi, a_res)?.omega();
                coeffs
                    .entry(n)
                    .or_insert_with(XPoly::zero)
                    .add_term(omega, rat(1));
            }
        }
    }
    Ok(QSeries::from_parts(0, order, coeffs))
}
