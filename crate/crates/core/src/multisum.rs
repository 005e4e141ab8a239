//! Gaussian polynomials and q-binomial chain multisums.
//!
//! The sums here share one skeleton: a chain of q-binomial coefficients
//! `[N_1 choose N_2] [N_2 choose N_3] ...` (possibly with a single `+1` shift
//! at one position), an exponent `sum_i binom(N_i + k_i, 2)` with optional
//! linear corrections, a leading factor `1/(q;q)_{N_1}` (or `1/(q;q)_{N_m}`
//! for the family generating function, whose chain runs the other way), and a
//! trailing weight `F(N_b)` drawn from a [`SeriesFamily`].
//!
//! Evaluation walks the index tuples depth-first with shared prefix products,
//! pruning a branch as soon as the minimal exponent it can still reach
//! exceeds the order. Gaussian polynomials and inverted Pochhammer symbols
//! are memoized per evaluation, so no shared mutable state escapes a call.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;


use crate::error::{Error, Result};
use crate::num::{rat, Rational};
use crate::pochhammer::{poch_finite, poch_infinite};
use crate::series::{Monomial, QSeries, EXACT};

/// `binom(n+1, 2) = n(n+1)/2`, the size of the staircase with `n` steps.
pub fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// `binom(n, 2) = n(n-1)/2`, also valid for negative `n`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn isqrt64(n: i64) -> i64 {
    if n <= 0 {
        0
    } else {
        n.isqrt()
    }
}

/// A Gaussian polynomial `[upper choose lower]` in the base `q^base_step`,
/// held as an exact polynomial. Zero outside `0 <= lower <= upper`; when
/// nonzero its degree is `base_step * lower * (upper - lower)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussPoly {
    pub upper: i64,
    pub lower: i64,
    pub base_step: i64,
    pub value: QSeries,
}

/// Memo table of Gaussian polynomials in a fixed base `q^r`, filled by the
/// Pascal-type recurrence.
pub struct GaussTable {
    r: i64,
    memo: RefCell<BTreeMap<(i64, i64), Rc<QSeries>>>,
}

impl GaussTable {
    pub fn new(r: i64) -> Self {
        assert!(r >= 1, "Gaussian polynomial base step must be positive");
        GaussTable {
            r,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    /// `[n choose m]_{q^r}` as an exact polynomial.
    pub fn get(&self, n: i64, m: i64) -> Rc<QSeries> {
        if m < 0 || m > n {
            return Rc::new(QSeries::zero(EXACT));
        }
        if m == 0 || m == n {
            return Rc::new(QSeries::one(EXACT));
        }
        if let Some(hit) = self.memo.borrow().get(&(n, m)) {
            return Rc::clone(hit);
        }
        let left = self.get(n - 1, m);
        let right = self.get(n - 1, m - 1);
        let value = left.add(&right.mul_monomial(&Monomial::q_power(self.r * (n - m))));
        let value = Rc::new(value);
        self.memo.borrow_mut().insert((n, m), Rc::clone(&value));
        value
    }
}

/// `[upper choose lower]` in base `q^r` via the memoized recurrence.
pub fn gauss_binom(upper: i64, lower: i64, r: i64) -> GaussPoly {
    let table = GaussTable::new(r);
    GaussPoly {
        upper,
        lower,
        base_step: r,
        value: (*table.get(upper, lower)).clone(),
    }
}

/// Memo table of `1/(a; q^r)_n` truncated at a working order.
///
/// Negative indices follow the standard convention that `1/(a;q^r)_n = 0`
/// for `n < 0`, which is what makes the bilateral sums well-defined.
pub struct InvPochTable {
    a: Monomial,
    r: i64,
    order: i64,
    memo: RefCell<Vec<Rc<QSeries>>>,
    zero: Rc<QSeries>,
}

impl InvPochTable {
    pub fn new(a: Monomial, r: i64, order: i64) -> Self {
        assert!(r >= 1 && a.q_exp >= 1, "factors must have positive q-order");
        InvPochTable {
            a,
            r,
            order,
            memo: RefCell::new(vec![Rc::new(QSeries::one(order))]),
            zero: Rc::new(QSeries::zero(EXACT)),
        }
    }

    pub fn get(&self, n: i64) -> Rc<QSeries> {
        if n < 0 {
            return Rc::clone(&self.zero);
        }
        let mut memo = self.memo.borrow_mut();
        while (memo.len() as i64) <= n {
            let i = memo.len() as i64 - 1;
            // 1/(1 - a q^{r i}) expanded as a geometric series.
            let q_exp = self.a.q_exp + self.r * i;
            let mut factor_inv = QSeries::zero(self.order);
            let mut coeff = rat(1);
            let mut k = 0;
            while k * q_exp <= self.order {
                factor_inv = factor_inv.add(
                    &Monomial::new(coeff.clone(), k * self.a.x_exp, k * q_exp)
                        .to_series(self.order),
                );
                coeff *= &self.a.coeff;
                k += 1;
            }
            let next = memo.last().unwrap().mul(&factor_inv);
            memo.push(Rc::new(next));
        }
        Rc::clone(&memo[n as usize])
    }
}

/// A family of weight series `{F(N)}_{N >= 0}` closing a chain sum.
///
/// `min_order` must be a valid q-order lower bound for each index so the
/// tuple enumeration stays finite; the constant family declares bound 0.
pub struct SeriesFamily {
    eval: Box<dyn Fn(i64, i64) -> QSeries>,
    min_order: Box<dyn Fn(i64) -> i64>,
    global_floor: i64,
}

impl SeriesFamily {
    pub fn new(
        global_floor: i64,
        min_order: impl Fn(i64) -> i64 + 'static,
        eval: impl Fn(i64, i64) -> QSeries + 'static,
    ) -> Self {
        SeriesFamily {
            eval: Box::new(eval),
            min_order: Box::new(min_order),
            global_floor,
        }
    }

    /// `F(N) = 1`.
    pub fn one() -> Self {
        SeriesFamily::new(0, |_| 0, |_, order| QSeries::one(order))
    }

    /// `F(N) = 0`.
    pub fn zero() -> Self {
        SeriesFamily::new(EXACT, |_| EXACT, |_, order| QSeries::zero(order))
    }

    /// `F(N) = q^{binom(N+1, 2)}`.
    pub fn q_triangular() -> Self {
        SeriesFamily::new(
            0,
            triangular,
            |n, order| Monomial::q_power(triangular(n)).to_series(order),
        )
    }

    pub fn eval(&self, n: i64, order: i64) -> QSeries {
        (self.eval)(n, order)
    }

    pub fn min_order(&self, n: i64) -> i64 {
        (self.min_order)(n)
    }
}

/// The k-shift list of a chain sum; positional subscripts are significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KList {
    entries: Vec<i64>,
}

impl KList {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "KList needs at least one entry");
        assert!(entries.iter().all(|&k| k >= 0), "KList entries must be >= 0");
        KList { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Descending chain sum
/// `sum q^{sum_i binom(N_i + k_i, 2) + linear_i N_i} F(N_b) / (q;q)_{N_1}
///  * prod_i [N_i + [i == shift_pos] choose N_{i+1}]`.
struct ChainSpec<'f> {
    k: Vec<i64>,
    linear: Vec<i64>,
    shift_pos: i64,
    family: &'f SeriesFamily,
}

impl ChainSpec<'_> {
    fn level_exp(&self, i: usize, n: i64) -> i64 {
        binom2(n + self.k[i]) + self.linear[i] * n
    }

    fn level_floor(&self, i: usize) -> i64 {
        // The level exponent is convex in n; probe around the real minimizer.
        let center = (-self.k[i] - self.linear[i]).max(0);
        (0..=center + 2)
            .map(|n| self.level_exp(i, n))
            .min()
            .unwrap()
    }
}

fn eval_chain(spec: &ChainSpec, order: i64) -> QSeries {
    let b = spec.k.len();
    let gauss = GaussTable::new(1);
    let inv_poch = InvPochTable::new(Monomial::q_power(1), 1, order);

    // floors[i] = least exponent levels i.. plus the weight can contribute.
    let mut floors = vec![0i64; b + 1];
    floors[b] = spec.family.global_floor;
    for i in (0..b).rev() {
        floors[i] = floors[i + 1].saturating_add(spec.level_floor(i));
    }

    struct Walker<'a, 'f> {
        spec: &'a ChainSpec<'f>,
        gauss: GaussTable,
        order: i64,
        floors: Vec<i64>,
        acc: QSeries,
    }

    impl Walker<'_, '_> {
        // `shift` is the exponent accumulated by levels before `i`.
        fn descend(&mut self, i: usize, prev: i64, shift: i64, partial: &QSeries) {
            let b = self.spec.k.len();
            let delta = if self.spec.shift_pos == i as i64 { 1 } else { 0 };
            for n in 0..=prev + delta {
                let e = self.spec.level_exp(i, n);
                let tail_floor = if i + 1 == b {
                    self.spec.family.min_order(n)
                } else {
                    self.floors[i + 1]
                };
                if shift + e > self.order.saturating_sub(tail_floor) {
                    continue;
                }
                let mut p = partial
                    .mul(&self.gauss.get(prev + delta, n))
                    .mul_monomial(&Monomial::q_power(e))
                    .truncate(self.order);
                if i + 1 == b {
                    p = p.mul(&self.spec.family.eval(n, self.order - shift - e));
                    self.acc = self.acc.add(&p);
                } else {
                    self.descend(i + 1, n, shift + e, &p);
                }
            }
        }
    }

    let mut walker = Walker {
        spec,
        gauss,
        order,
        floors,
        acc: QSeries::zero(order),
    };

    let cap = isqrt64(2 * order.max(0)) + spec.k[0].abs() + spec.linear[0].abs() + 3;
    for n1 in 0..=cap {
        let e = spec.level_exp(0, n1);
        let tail_floor = if b == 1 {
            spec.family.min_order(n1)
        } else {
            walker.floors[1]
        };
        if e > order.saturating_sub(tail_floor) {
            continue;
        }
        let mut partial = inv_poch
            .get(n1)
            .mul_monomial(&Monomial::q_power(e))
            .truncate(order);
        if b == 1 {
            partial = partial.mul(&spec.family.eval(n1, order - e));
            walker.acc = walker.acc.add(&partial);
        } else {
            walker.descend(1, n1, e, &partial);
        }
    }
    walker.acc
}

/// The shifted q-binomial chain
/// `sum q^{sum triangular(N_i)} / (q;q)_{N_1} * prod [N_i + d_{s,i} choose N_{i+1}]`
/// with at most one `+1` shift at position `s` (`s = 0` or `s >= m` leaves
/// the chain unshifted).
fn shifted_chain(shift_pos: i64, m: i64, family: &SeriesFamily, order: i64) -> QSeries {
    let spec = ChainSpec {
        k: vec![1; m as usize],
        linear: vec![0; m as usize],
        shift_pos,
        family,
    };
    eval_chain(&spec, order)
}

/// The k-shifted chain multisum
/// `S(k_1, ..., k_b) = sum q^{sum binom(N_i + k_i, 2)} F(N_b) / (q;q)_{N_1}
///  * [N_1 choose N_2] ... [N_{b-1} choose N_b]`.
pub fn s_sum(k: &KList, family: &SeriesFamily, order: i64) -> QSeries {
    let spec = ChainSpec {
        k: k.entries().to_vec(),
        linear: vec![0; k.len()],
        shift_pos: 0,
        family,
    };
    eval_chain(&spec, order)
}

fn validate_family_params(a: i64, m: i64) -> Result<()> {
    if m < 1 || a < 0 || a > m {
        Err(Error::BadParameters("need m >= 1 and 0 <= a <= m"))
    } else {
        Ok(())
    }
}

/// Generating function of the restricted family as the ascending multisum
/// `sum q^{sum triangular(N_i)} / (q;q)_{N_m}
///  * [N_2 + d_{a+1,2} choose N_1] ... [N_m + d_{a+1,m} choose N_{m-1}]`.
pub fn multisum_gen(a: i64, m: i64, order: i64) -> Result<QSeries> {
    validate_family_params(a, m)?;

    // Indices are chosen from N_m down to N_1; level i < m is bounded by
    // N_{i+1} + d_{a+1,i+1} through the vanishing of its binomial.
    struct Walker {
        gauss: GaussTable,
        a: i64,
        order: i64,
        acc: QSeries,
    }

    impl Walker {
        fn descend(&mut self, i: i64, next: i64, shift: i64, partial: &QSeries) {
            if i == 0 {
                self.acc = self.acc.add(partial);
                return;
            }
            let delta = if self.a == i { 1 } else { 0 };
            for n in 0..=next + delta {
                let e = triangular(n);
                if shift + e > self.order {
                    break;
                }
                let p = partial
                    .mul(&self.gauss.get(next + delta, n))
                    .mul_monomial(&Monomial::q_power(e))
                    .truncate(self.order);
                self.descend(i - 1, n, shift + e, &p);
            }
        }
    }

    let inv_poch = InvPochTable::new(Monomial::q_power(1), 1, order);
    let mut walker = Walker {
        gauss: GaussTable::new(1),
        a,
        order,
        acc: QSeries::zero(order),
    };
    let mut n_m = 0;
    while triangular(n_m) <= order {
        let partial = inv_poch
            .get(n_m)
            .mul_monomial(&Monomial::q_power(triangular(n_m)))
            .truncate(order);
        walker.descend(m - 1, n_m, triangular(n_m), &partial);
        n_m += 1;
    }
    Ok(walker.acc)
}

/// The same generating function with the component order reversed: leading
/// `1/(q;q)_{N_1}` and the single shift at position `m - a`.
pub fn multisum_reversed(a: i64, m: i64, order: i64) -> Result<QSeries> {
    validate_family_params(a, m)?;
    Ok(shifted_chain(m - a, m, &SeriesFamily::one(), order))
}

/// Both sides of the chain symmetry: the `+1` shift at position `a` against
/// the shift at position `m - a`. Requires `1 <= a <= m-1`.
pub fn symmetry_sides(a: i64, m: i64, order: i64) -> Result<(QSeries, QSeries)> {
    if m < 1 || a < 1 || a > m - 1 {
        return Err(Error::BadParameters("symmetry needs 1 <= a <= m-1"));
    }
    let one = SeriesFamily::one();
    Ok((
        shifted_chain(a, m, &one, order),
        shifted_chain(m - a, m, &one, order),
    ))
}

/// Both sides of the shift-removal transformation over `2a` indices: the
/// chain with `[N_a + 1 choose N_{a+1}]` equals the plain chain with the
/// exponent corrected by `-sum_{i<=a} N_{2i}`.
pub fn transformation_sides(a: i64, family: &SeriesFamily, order: i64) -> Result<(QSeries, QSeries)> {
    if a < 1 {
        return Err(Error::BadParameters("transformation needs a >= 1"));
    }
    let b = (2 * a) as usize;
    let lhs = shifted_chain(a, 2 * a, family, order);
    let spec = ChainSpec {
        k: vec![1; b],
        linear: (1..=b).map(|i| if i % 2 == 0 { -1 } else { 0 }).collect(),
        shift_pos: 0,
        family,
    };
    let rhs = eval_chain(&spec, order);
    Ok((lhs, rhs))
}

/// The even/odd-chain sums of Andrews and Kim--Yee:
/// `sum q^{sum_{i=1}^{L} triangular(N_i) - sum_{i=1}^{a} N_{2i}} / (q;q)_{N_1}
///  * [N_1 choose N_2] ... [N_{L-1} choose N_L]`,
/// equal to `(q^{a+1}, q^{L+1-a}, q^{L+2}; q^{L+2})_inf / ((q;q)_inf (q;q^2)_inf)`.
pub fn andrews_kimyee_sum(a: i64, chain_len: i64, order: i64) -> Result<QSeries> {
    if chain_len < 1 || a < 0 || a > chain_len / 2 {
        return Err(Error::BadParameters(
            "chain sums need L >= 1 and 0 <= a <= floor(L/2)",
        ));
    }
    let b = chain_len as usize;
    let family = SeriesFamily::one();
    let spec = ChainSpec {
        k: vec![1; b],
        linear: (1..=b)
            .map(|i| if i % 2 == 0 && (i as i64) <= 2 * a { -1 } else { 0 })
            .collect(),
        shift_pos: 0,
        family: &family,
    };
    Ok(eval_chain(&spec, order))
}

/// The collapsed form of the family multisum after summing the innermost
/// index: a sum over `(N_2, ..., N_m)` of
///
/// ```text
/// q^{sum_{i=2}^m triangular(N_i)} (-q;q)_{N_2 + d_{a+1,2}} (1 - q^{N_{a+1}+1})
///   / ((1 - q^{N_{a+1}-N_a+1}) prod_{i=2}^m (q;q)_{N_i - N_{i-1}})
/// ```
///
/// with `N_1 = 0` and `N_{m+1} = infinity`. The boundary tuple
/// `N_a = N_{a+1} + 1` is evaluated through the joint factor
/// `(1-q^{N_{a+1}+1}) / ((1-q^{N_{a+1}-N_a+1}) (q;q)_{N_{a+1}-N_a})
///  = (1-q^{N_{a+1}+1}) / (q;q)_{N_{a+1}+1-N_a}`,
/// which the displayed form leaves as 0/0.
pub fn gen1_sum(a: i64, m: i64, order: i64) -> Result<QSeries> {
    validate_family_params(a, m)?;
    if m == 1 {
        // No surviving indices: the sum collapses to (-q;q)_inf.
        return poch_infinite(&Monomial::neg_q_power(1), 1, order);
    }
    // Tuples (N_2, ..., N_m); prev = N_{i-1} with N_1 = 0.
    struct Walker {
        inv_poch: InvPochTable,
        neg_q: Monomial,
        shifted_slot: i64,
        m: i64,
        order: i64,
        acc: QSeries,
    }

    impl Walker {
        fn descend(&mut self, i: i64, prev: i64, shift: i64, partial: &QSeries) {
            if i > self.m {
                self.acc = self.acc.add(partial);
                return;
            }
            let s = self.shifted_slot;
            let mut n = if i == s { (prev - 1).max(0) } else { prev };
            loop {
                let e = triangular(n);
                if shift + e > self.order {
                    break;
                }
                // 1/(q;q)_{N_i - N_{i-1}}, replaced at the shifted slot by
                // (1 - q^{N_s + 1}) / (q;q)_{N_s + 1 - N_{s-1}}.
                let mut p = partial
                    .mul_monomial(&Monomial::q_power(e))
                    .truncate(self.order);
                if i == s {
                    p = p.mul(&self.inv_poch.get(n + 1 - prev));
                    let one_minus = QSeries::one(self.order)
                        .sub(&Monomial::q_power(n + 1).to_series(self.order));
                    p = p.mul(&one_minus);
                } else {
                    p = p.mul(&self.inv_poch.get(n - prev));
                }
                if i == 2 {
                    let delta = if s == 2 { 1 } else { 0 };
                    p = p.mul(&poch_finite(&self.neg_q, 1, n + delta, self.order));
                }
                self.descend(i + 1, n, shift + e, &p);
                n += 1;
            }
        }
    }

    let mut walker = Walker {
        inv_poch: InvPochTable::new(Monomial::q_power(1), 1, order),
        neg_q: Monomial::neg_q_power(1),
        shifted_slot: a + 1, // possibly > m, in which case no slot is shifted
        m,
        order,
        acc: QSeries::zero(order),
    };
    walker.descend(2, 0, 0, &QSeries::one(order));
    Ok(walker.acc)
}

/// Both sides of the terminating q-binomial theorem
/// `(z;q)_N = sum_n (-1)^n z^n q^{binom(n,2)} [N choose n]` for a monomial `z`.
pub fn qbin_theorem_sides(z: &Monomial, n: i64, order: i64) -> (QSeries, QSeries) {
    let lhs = poch_finite(z, 1, n, order);
    let gauss = GaussTable::new(1);
    let mut rhs = QSeries::zero(order);
    for j in 0..=n {
        let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
        let coeff = sign * pow_rat(&z.coeff, j);
        let shift = Monomial::new(coeff, j * z.x_exp, j * z.q_exp + binom2(j));
        rhs = rhs.add(&gauss.get(n, j).mul_monomial(&shift).truncate(order));
    }
    (lhs, rhs)
}

/// Both sides of the nonterminating q-binomial theorem
/// `sum_n (a;q)_n z^n / (q;q)_n = (az;q)_inf / (z;q)_inf` for monomials with
/// `z` of positive q-order and `a` of nonnegative q-order.
pub fn qbin_series_sides(a: &Monomial, z: &Monomial, order: i64) -> Result<(QSeries, QSeries)> {
    if z.q_exp < 1 || a.q_exp < 0 {
        return Err(Error::BadParameters(
            "q-binomial series needs ord_q z >= 1 and ord_q a >= 0",
        ));
    }
    let inv_poch = InvPochTable::new(Monomial::q_power(1), 1, order);
    let mut lhs = QSeries::zero(order);
    let mut n = 0;
    while n * z.q_exp <= order {
        let term = poch_finite(a, 1, n, order)
            .mul(&inv_poch.get(n))
            .mul_monomial(&Monomial::new(pow_rat(&z.coeff, n), n * z.x_exp, n * z.q_exp))
            .truncate(order);
        lhs = lhs.add(&term);
        n += 1;
    }
    let az = Monomial::new(&a.coeff * &z.coeff, a.x_exp + z.x_exp, a.q_exp + z.q_exp);
    let rhs = poch_infinite(&az, 1, order)?
        .mul(&poch_infinite(z, 1, order)?.invert()?);
    Ok((lhs, rhs))
}

fn pow_rat(c: &Rational, n: i64) -> Rational {
    debug_assert!(n >= 0);
    let mut acc = rat(1);
    for _ in 0..n {
        acc *= c;
    }
    acc
}
