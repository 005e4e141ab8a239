//! Named catalog of every identity in scope, each with independent left and
//! right builders producing truncated series for exact comparison.
//!
//! Entries carry named integer parameters with ranges and defaults, a
//! default order, and topic tags. [`verify`] builds both sides at a given
//! order and compares coefficient by coefficient, reporting `MATCH`,
//! `MISMATCH` (with the first disagreeing `(q, x)` position and both exact
//! coefficients), or an error. Entries backed by exhaustive enumeration
//! declare it and fail fast with a budget error instead of lowering the
//! order.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::bivariate::{
    bilateral_h, bilateral_i, coeff_formula, corollary_double_sum, s1m_s2m,
    triple_sum_bivariate, wellpoised_sides, Sign,
};
use crate::error::{Error, Result};
use crate::multisum::{
    andrews_kimyee_sum, gen1_sum, multisum_gen, multisum_reversed, qbin_series_sides,
    qbin_theorem_sides, s_sum, symmetry_sides, transformation_sides, KList, SeriesFamily,
};
use crate::num::rat;
use crate::partition::{gf_lambda, EnumBudget};
use crate::pochhammer::{jacobi_triple, poch_infinite, product_ariki_mathas};
use crate::series::{Mismatch, Monomial, QSeries};
use crate::statistics::rogers_szego_sides;

/// Named integer parameter with an inclusive range and a default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
    pub default: i64,
}

/// Assignment of values to an identity's parameters.
pub type Params = BTreeMap<String, i64>;

type Builder = Box<dyn Fn(&Params, i64, &EnumBudget) -> Result<QSeries>>;

/// One registered identity: metadata plus independent side builders.
///
/// The builders share nothing beyond the series kernel primitives, so a
/// defect in one side cannot silently cancel in the other.
pub struct IdentitySpec {
    pub id: &'static str,
    pub tags: Vec<&'static str>,
    pub params: Vec<ParamSpec>,
    pub default_order: i64,
    /// True when a side enumerates multipartitions and is subject to the
    /// enumeration budget.
    pub uses_enumeration: bool,
    lhs: Builder,
    rhs: Builder,
    /// Optional enumeration-based recomputation for audit runs.
    oracle: Option<Builder>,
}

impl IdentitySpec {
    pub fn build_lhs(&self, params: &Params, order: i64, budget: &EnumBudget) -> Result<QSeries> {
        (self.lhs)(params, order, budget)
    }

    pub fn build_rhs(&self, params: &Params, order: i64, budget: &EnumBudget) -> Result<QSeries> {
        (self.rhs)(params, order, budget)
    }

    pub fn build_oracle(
        &self,
        params: &Params,
        order: i64,
        budget: &EnumBudget,
    ) -> Option<Result<QSeries>> {
        self.oracle.as_ref().map(|b| b(params, order, budget))
    }

    pub fn has_oracle(&self) -> bool {
        self.oracle.is_some()
    }

    pub fn default_params(&self) -> Params {
        self.params
            .iter()
            .map(|p| (p.name.to_string(), p.default))
            .collect()
    }

    /// Fill in defaults and validate ranges; unknown names are rejected.
    pub fn resolve_params(&self, given: &Params) -> Result<Params> {
        let mut resolved = self.default_params();
        for (name, &value) in given {
            let spec = self
                .params
                .iter()
                .find(|p| p.name == name)
                .ok_or(Error::BadParameters("unknown parameter name"))?;
            if value < spec.min || value > spec.max {
                return Err(Error::BadParameters("parameter out of range"));
            }
            resolved.insert(name.clone(), value);
        }
        Ok(resolved)
    }
}

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Error => "ERROR",
        }
    }
}

/// Verification outcome for one identity at one truncation order.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub order: i64,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub error: Option<String>,
    /// Wall-clock time, filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

/// Options for [`verify`].
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub budget: EnumBudget,
    /// Also recompute the enumeration-side oracle where one is registered.
    pub oracle: bool,
}

/// All registered identities, in registry order.
pub fn registry() -> Vec<IdentitySpec> {
    build_registry()
}

/// Look up one identity by id.
pub fn find(id: &str) -> Result<IdentitySpec> {
    build_registry()
        .into_iter()
        .find(|spec| spec.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Build both sides of the named identity at `order` and compare exactly.
pub fn verify(id: &str, params: &Params, order: i64, opts: &VerifyOptions) -> Result<IdentityReport> {
    if order < 0 {
        return Err(Error::BadParameters("order must be nonnegative"));
    }
    let spec = find(id)?;
    let resolved = spec.resolve_params(params)?;
    let lhs = spec.build_lhs(&resolved, order, &opts.budget)?;
    let rhs = spec.build_rhs(&resolved, order, &opts.budget)?;
    let mut mismatch = lhs.first_mismatch(&rhs);
    if mismatch.is_none() && opts.oracle {
        if let Some(oracle) = spec.build_oracle(&resolved, order, &opts.budget) {
            mismatch = lhs.first_mismatch(&oracle?);
        }
    }
    Ok(IdentityReport {
        id: spec.id.to_string(),
        params: resolved,
        order,
        status: if mismatch.is_none() {
            Status::Match
        } else {
            Status::Mismatch
        },
        first_mismatch: mismatch,
        error: None,
        elapsed: None,
    })
}

fn p(name: &'static str, min: i64, max: i64, default: i64) -> ParamSpec {
    ParamSpec {
        name,
        min,
        max,
        default,
    }
}

fn get(params: &Params, name: &str) -> i64 {
    *params.get(name).expect("parameter resolved")
}

/// `(c1 x^{j1} q^{k1}, ...; q^r)_inf` from integer data.
fn prod(args: &[(i64, i64, i64)], r: i64, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for &(c, j, k) in args {
        acc = acc.mul(&poch_infinite(&Monomial::int_xq(c, j, k), r, order)?);
    }
    Ok(acc)
}

/// `1 / (c x^j q^k; q^r)_inf`.
fn inv_prod(c: i64, j: i64, k: i64, r: i64, order: i64) -> Result<QSeries> {
    poch_infinite(&Monomial::int_xq(c, j, k), r, order)?.invert()
}

fn monomial_from(params: &Params, c: &str, x: &str, q: &str) -> Result<Monomial> {
    let coeff = get(params, c);
    if coeff == 0 {
        return Err(Error::BadParameters("monomial coefficient must be nonzero"));
    }
    Ok(Monomial::int_xq(coeff, get(params, x), get(params, q)))
}

fn family_from_tag(tag: i64) -> Result<SeriesFamily> {
    match tag {
        0 => Ok(SeriesFamily::one()),
        1 => Ok(SeriesFamily::q_triangular()),
        _ => Err(Error::BadParameters("family tag must be 0 or 1")),
    }
}

/// The Ariki--Mathas product for the even/odd chain sums: length `L`, shift
/// parameter `a`, i.e. `(q^{a+1}, q^{L+1-a}, q^{L+2}; q^{L+2})_inf
/// / ((q;q)_inf (q;q^2)_inf)`.
fn chain_product(a: i64, chain_len: i64, order: i64) -> Result<QSeries> {
    let step = chain_len + 2;
    Ok(prod(
        &[(1, 0, a + 1), (1, 0, chain_len + 1 - a), (1, 0, step)],
        step,
        order,
    )?
    .mul(&inv_prod(1, 0, 1, 1, order)?)
    .mul(&inv_prod(1, 0, 1, 2, order)?))
}

fn isqrt64(n: i64) -> i64 {
    if n <= 0 {
        0
    } else {
        n.isqrt()
    }
}

fn build_registry() -> Vec<IdentitySpec> {
    let mut entries: Vec<IdentitySpec> = Vec::new();

    let mut add = |id: &'static str,
                   tags: Vec<&'static str>,
                   params: Vec<ParamSpec>,
                   default_order: i64,
                   uses_enumeration: bool,
                   lhs: Builder,
                   rhs: Builder,
                   oracle: Option<Builder>| {
        entries.push(IdentitySpec {
            id,
            tags,
            params,
            default_order,
            uses_enumeration,
            lhs,
            rhs,
            oracle,
        });
    };

    let enum_count_gf: fn(&Params, i64, &EnumBudget) -> Result<QSeries> = |params, order, budget| {
        Ok(gf_lambda(get(params, "a"), get(params, "m"), order, budget)?.eval_x_one())
    };

    // 1. Enumeration against the Ariki--Mathas product.
    add(
        "ariki_mathas_enum",
        vec!["family-gf", "enumeration", "product"],
        vec![p("a", 0, 5, 1), p("m", 1, 5, 2)],
        24,
        true,
        Box::new(enum_count_gf),
        Box::new(|params, order, _| product_ariki_mathas(get(params, "a"), get(params, "m"), order)),
        None,
    );

    // 2. Multisum against the product, in both index orders.
    add(
        "ariki_mathas_multisum",
        vec!["family-gf", "multisum", "product"],
        vec![p("a", 0, 6, 1), p("m", 1, 6, 2)],
        50,
        false,
        Box::new(|params, order, _| multisum_gen(get(params, "a"), get(params, "m"), order)),
        Box::new(|params, order, _| product_ariki_mathas(get(params, "a"), get(params, "m"), order)),
        Some(Box::new(enum_count_gf)),
    );
    add(
        "ariki_mathas_multisum_rev",
        vec!["family-gf", "multisum", "product"],
        vec![p("a", 0, 6, 1), p("m", 1, 6, 2)],
        50,
        false,
        Box::new(|params, order, _| multisum_reversed(get(params, "a"), get(params, "m"), order)),
        Box::new(|params, order, _| product_ariki_mathas(get(params, "a"), get(params, "m"), order)),
        Some(Box::new(enum_count_gf)),
    );

    // 3. Multisum against exhaustive enumeration.
    add(
        "multisum_vs_enum",
        vec!["family-gf", "multisum", "enumeration"],
        vec![p("a", 0, 5, 1), p("m", 1, 5, 2)],
        24,
        true,
        Box::new(|params, order, _| multisum_gen(get(params, "a"), get(params, "m"), order)),
        Box::new(enum_count_gf),
        None,
    );

    // 4. The collapsed form of the multisum.
    add(
        "gen1_form",
        vec!["family-gf", "multisum"],
        vec![p("a", 0, 5, 1), p("m", 1, 5, 3)],
        40,
        false,
        Box::new(|params, order, _| gen1_sum(get(params, "a"), get(params, "m"), order)),
        Box::new(|params, order, _| multisum_gen(get(params, "a"), get(params, "m"), order)),
        Some(Box::new(enum_count_gf)),
    );

    // 5. The bivariate product identities for the two-component families.
    add(
        "bivariate_12",
        vec!["bivariate", "enumeration", "product"],
        vec![],
        22,
        true,
        Box::new(|_, order, budget| gf_lambda(1, 2, order, budget)),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&prod(&[(-1, 1, 1), (-1, -1, 1), (1, 0, 2)], 2, order)?)
                .mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );
    add(
        "bivariate_22",
        vec!["bivariate", "enumeration", "product"],
        vec![],
        22,
        true,
        Box::new(|_, order, budget| Ok(gf_lambda(2, 2, order, budget)?.scale(&rat(2)))),
        Box::new(|_, order, _| {
            let plus = prod(&[(-1, 0, 1)], 2, order)?
                .mul(&prod(&[(-1, 1, 0), (-1, -1, 2), (1, 0, 2)], 2, order)?);
            let minus = prod(&[(1, 0, 1)], 2, order)?
                .mul(&prod(&[(1, 1, 0), (1, -1, 2), (1, 0, 2)], 2, order)?);
            Ok(plus.add(&minus).mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );

    // 6. Fixed-statistic slices against the shifted products.
    add(
        "corollary_14_a1",
        vec!["bivariate", "enumeration", "product"],
        vec![p("omega", -4, 4, 1)],
        24,
        true,
        Box::new(|params, order, budget| {
            Ok(gf_lambda(1, 2, order, budget)?.x_slice(get(params, "omega")))
        }),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::q_power(omega * omega))
                .truncate(order))
        }),
        None,
    );
    add(
        "corollary_14_a2",
        vec!["bivariate", "enumeration", "product"],
        vec![p("omega", -4, 4, 1)],
        24,
        true,
        Box::new(|params, order, budget| {
            Ok(gf_lambda(2, 2, order, budget)?.x_slice(get(params, "omega")))
        }),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            // The shifted product q^{omega^2-omega} (-q;q^2)inf / (q^2;q^2)inf
            // carries both the omega and the 1-omega slices, which live on
            // opposite parities (the two-sided relation I^+_w + I^+_{1-w}
            // equals it); the slice itself is its parity-pure part.
            Ok(prod(&[(-1, 0, 1)], 2, order)?
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::q_power(omega * omega - omega))
                .truncate(order)
                .parity_part(omega))
        }),
        None,
    );

    // 7. The x -> 1 specializations.
    add(
        "special_g1",
        vec!["family-gf", "enumeration", "product"],
        vec![],
        26,
        true,
        Box::new(|_, order, budget| Ok(gf_lambda(1, 2, order, budget)?.eval_x_one())),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?.mul(&prod(&[(-1, 0, 1)], 2, order)?))
        }),
        None,
    );
    add(
        "special_g2",
        vec!["family-gf", "enumeration", "product"],
        vec![],
        26,
        true,
        Box::new(|_, order, budget| Ok(gf_lambda(2, 2, order, budget)?.eval_x_one())),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?.mul(&prod(&[(-1, 0, 2)], 2, order)?))
        }),
        None,
    );

    // 8. Parity dissections of the two count generating functions, with the
    // final eta-quotient forms, plus the two classical 2-dissections they
    // rest on.
    add(
        "parity_a1_even",
        vec!["dissection", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?
                .mul(&prod(&[(-1, 0, 1)], 2, order)?)
                .parity_part(0))
        }),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&prod(&[(-1, 0, 4), (-1, 0, 4)], 8, order)?)
                .mul(&prod(&[(1, 0, 8)], 8, order)?)
                .mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );
    add(
        "parity_a1_odd",
        vec!["dissection", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?
                .mul(&prod(&[(-1, 0, 1)], 2, order)?)
                .parity_part(1))
        }),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&prod(&[(1, 0, 16), (1, 0, 16)], 16, order)?)
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul(&inv_prod(1, 0, 8, 8, order)?)
                .mul_monomial(&Monomial::int_q(2, 1))
                .truncate(order))
        }),
        None,
    );
    add(
        "parity_a2_even",
        vec!["dissection", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?
                .mul(&prod(&[(-1, 0, 2)], 2, order)?)
                .parity_part(0))
        }),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&prod(&[(-1, 0, 6), (-1, 0, 10), (1, 0, 16)], 16, order)?)
                .mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );
    add(
        "parity_a2_odd",
        vec!["dissection", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 1, order)?
                .mul(&prod(&[(-1, 0, 2)], 2, order)?)
                .parity_part(1))
        }),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&prod(&[(-1, 0, 2), (-1, 0, 14), (1, 0, 16)], 16, order)?)
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::q_power(1))
                .truncate(order))
        }),
        None,
    );
    add(
        "dissection_phi",
        vec!["dissection", "product", "theta"],
        vec![],
        48,
        false,
        Box::new(|_, order, _| {
            Ok(prod(&[(1, 0, 1), (1, 0, 1)], 1, order)?.mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        Box::new(|_, order, _| {
            let head = prod(&[(1, 0, 8); 5], 8, order)?
                .mul(&inv_prod(1, 0, 4, 4, order)?)
                .mul(&inv_prod(1, 0, 4, 4, order)?)
                .mul(&inv_prod(1, 0, 16, 16, order)?)
                .mul(&inv_prod(1, 0, 16, 16, order)?);
            let tail = prod(&[(1, 0, 16), (1, 0, 16)], 16, order)?
                .mul(&inv_prod(1, 0, 8, 8, order)?)
                .mul_monomial(&Monomial::int_q(2, 1))
                .truncate(order);
            Ok(head.sub(&tail))
        }),
        None,
    );
    add(
        "dissection_euler",
        vec!["dissection", "product"],
        vec![],
        48,
        false,
        Box::new(|_, order, _| prod(&[(1, 0, 1)], 1, order)),
        Box::new(|_, order, _| {
            let head = prod(&[(1, 0, 12), (1, 0, 20)], 32, order)?
                .mul(&prod(&[(1, 0, 2), (1, 0, 14), (1, 0, 16)], 16, order)?);
            let tail = prod(&[(1, 0, 4), (1, 0, 28)], 32, order)?
                .mul(&prod(&[(1, 0, 6), (1, 0, 10), (1, 0, 16)], 16, order)?)
                .mul_monomial(&Monomial::q_power(1))
                .truncate(order);
            Ok(head.sub(&tail))
        }),
        None,
    );

    // 9. The two constant-term double sums.
    add(
        "corollary_double_sum_1",
        vec!["bilateral", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| corollary_double_sum(1, order)),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 2)], 2, order)?.mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );
    add(
        "corollary_double_sum_2",
        vec!["bilateral", "product"],
        vec![],
        40,
        false,
        Box::new(|_, order, _| corollary_double_sum(2, order)),
        Box::new(|_, order, _| {
            Ok(prod(&[(-1, 0, 1)], 2, order)?.mul(&inv_prod(1, 0, 2, 2, order)?))
        }),
        None,
    );

    // 10. Triple sums against enumeration (clamped to the shared x-window).
    for (id, a) in [("triple_sum_1", 1i64), ("triple_sum_2", 2i64)] {
        add(
            id,
            vec!["bivariate", "multisum", "enumeration"],
            vec![],
            20,
            true,
            Box::new(move |_, order, _| triple_sum_bivariate(a, order)),
            Box::new(move |_, order, budget| {
                Ok(gf_lambda(a, 2, order, budget)?.clamp_x(isqrt64(order) + 2))
            }),
            None,
        );
    }

    // 11. Coefficient formulas against the x-slices of the triple sums.
    for (id, a) in [("coeff_extract_a1", 1i64), ("coeff_extract_a2", 2i64)] {
        add(
            id,
            vec!["bivariate", "multisum"],
            vec![p("omega", -4, 4, 1)],
            24,
            false,
            Box::new(move |params, order, _| coeff_formula(a, get(params, "omega"), order)),
            Box::new(move |params, order, _| {
                Ok(triple_sum_bivariate(a, order)?.x_slice(get(params, "omega")))
            }),
            None,
        );
    }

    // 12. Bilateral sum relations.
    add(
        "h_relation",
        vec!["bilateral", "product"],
        vec![p("omega", -4, 4, 2)],
        30,
        false,
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(bilateral_h(Sign::Plus, omega, order).add(&bilateral_h(Sign::Plus, -omega, order)))
        }),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(prod(&[(-1, 0, 2)], 2, order)?
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::int_q(2, omega * omega))
                .truncate(order))
        }),
        None,
    );
    add(
        "h_star_relation",
        vec!["bilateral"],
        vec![p("omega", -4, 4, 2)],
        30,
        false,
        Box::new(|params, order, _| Ok(bilateral_h(Sign::Minus, get(params, "omega"), order))),
        Box::new(|params, order, _| Ok(bilateral_h(Sign::Minus, -get(params, "omega"), order))),
        None,
    );
    add(
        "i_star_relation",
        vec!["bilateral", "product"],
        vec![p("omega", -4, 4, 2)],
        30,
        false,
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(bilateral_i(Sign::Minus, omega, order)
                .sub(&bilateral_i(Sign::Minus, 1 - omega, order)))
        }),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            let sign = if omega.rem_euclid(2) == 0 { 1 } else { -1 };
            Ok(prod(&[(1, 0, 1)], 2, order)?
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::int_q(sign, omega * omega - omega))
                .truncate(order))
        }),
        None,
    );
    add(
        "i_relation",
        vec!["bilateral", "product"],
        vec![p("omega", -4, 4, 2)],
        30,
        false,
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(bilateral_i(Sign::Plus, omega, order).add(&bilateral_i(Sign::Plus, 1 - omega, order)))
        }),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            Ok(prod(&[(-1, 0, 1)], 2, order)?
                .mul(&inv_prod(1, 0, 2, 2, order)?)
                .mul_monomial(&Monomial::q_power(omega * omega - omega))
                .truncate(order))
        }),
        None,
    );
    add(
        "i_sign_twist",
        vec!["bilateral"],
        vec![p("omega", -4, 4, 2)],
        30,
        false,
        Box::new(|params, order, _| Ok(bilateral_i(Sign::Plus, get(params, "omega"), order))),
        Box::new(|params, order, _| {
            let omega = get(params, "omega");
            let twisted = bilateral_i(Sign::Minus, omega, order).subst_q_negated();
            Ok(if omega.rem_euclid(2) == 1 {
                twisted.neg()
            } else {
                twisted
            })
        }),
        None,
    );

    // 13. The constant-sum pair against its closed form.
    add(
        "s1m_closed",
        vec!["bilateral", "hypergeometric"],
        vec![p("M", 1, 12, 6)],
        40,
        false,
        Box::new(|params, order, _| Ok(s1m_s2m(get(params, "M"), order)?.0)),
        Box::new(|params, order, _| Ok(s1m_s2m(get(params, "M"), order)?.2)),
        None,
    );
    add(
        "s2m_closed",
        vec!["bilateral", "hypergeometric"],
        vec![p("M", 1, 12, 6)],
        40,
        false,
        Box::new(|params, order, _| Ok(s1m_s2m(get(params, "M"), order)?.1)),
        Box::new(|params, order, _| Ok(s1m_s2m(get(params, "M"), order)?.2)),
        None,
    );

    // 14. Chain symmetry in the shift position.
    add(
        "symmetry",
        vec!["multisum"],
        vec![p("a", 1, 5, 1), p("m", 2, 6, 3)],
        40,
        false,
        Box::new(|params, order, _| {
            Ok(symmetry_sides(get(params, "a"), get(params, "m"), order)?.0)
        }),
        Box::new(|params, order, _| {
            Ok(symmetry_sides(get(params, "a"), get(params, "m"), order)?.1)
        }),
        None,
    );

    // 15. The shift-removal transformation, for both weight families.
    add(
        "transformation",
        vec!["multisum"],
        vec![p("a", 1, 3, 2), p("f", 0, 1, 0)],
        40,
        false,
        Box::new(|params, order, _| {
            let family = family_from_tag(get(params, "f"))?;
            Ok(transformation_sides(get(params, "a"), &family, order)?.0)
        }),
        Box::new(|params, order, _| {
            let family = family_from_tag(get(params, "f"))?;
            Ok(transformation_sides(get(params, "a"), &family, order)?.1)
        }),
        None,
    );

    // 16. The even/odd chain-sum product identities.
    add(
        "andrews",
        vec!["multisum", "product"],
        vec![p("a", 0, 4, 1), p("m", 1, 4, 2)],
        40,
        false,
        Box::new(|params, order, _| {
            let (a, m) = (get(params, "a"), get(params, "m"));
            if a > m {
                return Err(Error::BadParameters("even chain sum needs m >= a"));
            }
            andrews_kimyee_sum(a, 2 * m, order)
        }),
        Box::new(|params, order, _| {
            let (a, m) = (get(params, "a"), get(params, "m"));
            if a > m {
                return Err(Error::BadParameters("even chain sum needs m >= a"));
            }
            chain_product(a, 2 * m, order)
        }),
        Some(Box::new(|params, order, budget| {
            Ok(gf_lambda(get(params, "a"), 2 * get(params, "m"), order, budget)?.eval_x_one())
        })),
    );
    add(
        "kimyee",
        vec!["multisum", "product"],
        vec![p("a", 0, 4, 1), p("m", 1, 4, 2)],
        40,
        false,
        Box::new(|params, order, _| {
            let (a, m) = (get(params, "a"), get(params, "m"));
            if a > m - 1 {
                return Err(Error::BadParameters("odd chain sum needs m >= a + 1"));
            }
            andrews_kimyee_sum(a, 2 * m - 1, order)
        }),
        Box::new(|params, order, _| {
            let (a, m) = (get(params, "a"), get(params, "m"));
            if a > m - 1 {
                return Err(Error::BadParameters("odd chain sum needs m >= a + 1"));
            }
            chain_product(a, 2 * m - 1, order)
        }),
        Some(Box::new(|params, order, budget| {
            Ok(gf_lambda(get(params, "a"), 2 * get(params, "m") - 1, order, budget)?.eval_x_one())
        })),
    );

    // 17. The one-step shift decomposition of the k-shifted chain sums.
    add(
        "s_decomposition",
        vec!["lemmas", "multisum"],
        vec![p("a", 2, 4, 2), p("b", 2, 6, 2), p("k", 0, 3, 1), p("f", 0, 1, 0)],
        30,
        false,
        Box::new(|params, order, _| {
            let (a, b, k) = (get(params, "a"), get(params, "b"), get(params, "k"));
            if b < a {
                return Err(Error::BadParameters("decomposition needs b >= a"));
            }
            let family = family_from_tag(get(params, "f"))?;
            let mut list = vec![k; (a - 1) as usize];
            list.push(k + 1);
            list.extend(vec![1; (b - a) as usize]);
            Ok(s_sum(&KList::new(list), &family, order))
        }),
        Box::new(|params, order, _| {
            let (a, b, k) = (get(params, "a"), get(params, "b"), get(params, "k"));
            if b < a {
                return Err(Error::BadParameters("decomposition needs b >= a"));
            }
            let family = family_from_tag(get(params, "f"))?;
            let mut first = vec![k; (a - 2) as usize];
            first.push(k + 1);
            first.push(k);
            first.extend(vec![1; (b - a) as usize]);
            let mut second = vec![k + 1; a as usize];
            second.extend(vec![1; (b - a) as usize]);
            Ok(s_sum(&KList::new(first), &family, order)
                .add(&s_sum(&KList::new(second), &family, order)))
        }),
        None,
    );

    // 18. The ladder lemmas on shifted chain sums, trailing list (1, 1).
    let ladder_klist = |base: i64, plus: &[usize], len: usize| -> KList {
        let mut list = vec![base; len];
        for &i in plus {
            list[i] += 1;
        }
        list.extend_from_slice(&[1, 1]);
        KList::new(list)
    };
    add(
        "lemma_ladder_1",
        vec!["lemmas", "multisum"],
        vec![p("a", 1, 3, 2), p("base", 0, 1, 0), p("f", 0, 1, 0)],
        30,
        false,
        Box::new(move |params, order, _| {
            let (a, base) = (get(params, "a") as usize, get(params, "base"));
            let family = family_from_tag(get(params, "f"))?;
            let len = a + 1;
            let lhs1 = ladder_klist(base, &[a], len);
            let lhs2 = ladder_klist(base, &[a - 1], len);
            Ok(s_sum(&lhs1, &family, order).sub(&s_sum(&lhs2, &family, order)))
        }),
        Box::new(move |params, order, _| {
            let (a, base) = (get(params, "a") as usize, get(params, "base"));
            let family = family_from_tag(get(params, "f"))?;
            let len = a + 1;
            let all: Vec<usize> = (0..len).collect();
            Ok(s_sum(&ladder_klist(base, &all, len), &family, order))
        }),
        None,
    );
    add(
        "lemma_ladder_i1",
        vec!["lemmas", "multisum"],
        vec![
            p("a", 2, 3, 2),
            p("i", 2, 3, 2),
            p("base", 0, 1, 0),
            p("f", 0, 1, 0),
        ],
        30,
        false,
        Box::new(move |params, order, _| {
            let (a, i) = (get(params, "a") as usize, get(params, "i") as usize);
            if i > a {
                return Err(Error::BadParameters("ladder lemma needs a >= i"));
            }
            let base = get(params, "base");
            let family = family_from_tag(get(params, "f"))?;
            let len = a + i;
            let t1: Vec<usize> = (a..a + i).collect();
            let t2: Vec<usize> = (a - 1..a + i - 1).collect();
            Ok(s_sum(&ladder_klist(base, &t1, len), &family, order)
                .sub(&s_sum(&ladder_klist(base, &t2, len), &family, order)))
        }),
        Box::new(move |params, order, _| {
            let (a, i) = (get(params, "a") as usize, get(params, "i") as usize);
            if i > a {
                return Err(Error::BadParameters("ladder lemma needs a >= i"));
            }
            let base = get(params, "base");
            let family = family_from_tag(get(params, "f"))?;
            let len = a + i;
            let t3: Vec<usize> = (i - 1..a + i).collect();
            let t4: Vec<usize> = (i - 2..a + i - 1).collect();
            Ok(s_sum(&ladder_klist(base, &t3, len), &family, order)
                .sub(&s_sum(&ladder_klist(base, &t4, len), &family, order)))
        }),
        None,
    );
    add(
        "lemma_ladder_i2",
        vec!["lemmas", "multisum"],
        vec![
            p("a", 1, 3, 2),
            p("i", 1, 3, 1),
            p("base", 0, 1, 0),
            p("f", 0, 1, 0),
        ],
        30,
        false,
        Box::new(move |params, order, _| {
            let (a, i) = (get(params, "a") as usize, get(params, "i") as usize);
            if i > a {
                return Err(Error::BadParameters("ladder lemma needs a >= i"));
            }
            let base = get(params, "base");
            let family = family_from_tag(get(params, "f"))?;
            let len = a + i;
            let mut acc = QSeries::zero(order);
            for t in 1..=i {
                let block: Vec<usize> = (a..a + t).collect();
                acc = acc.add(&s_sum(&ladder_klist(base, &block, len), &family, order));
            }
            Ok(acc)
        }),
        Box::new(move |params, order, _| {
            let (a, i) = (get(params, "a") as usize, get(params, "i") as usize);
            if i > a {
                return Err(Error::BadParameters("ladder lemma needs a >= i"));
            }
            let base = get(params, "base");
            let family = family_from_tag(get(params, "f"))?;
            let len = a + i;
            let mut acc = QSeries::zero(order);
            for t in 1..=a + 1 {
                let block: Vec<usize> = (i - 1..i - 1 + t).collect();
                acc = acc.add(&s_sum(&ladder_klist(base, &block, len), &family, order));
            }
            Ok(acc)
        }),
        None,
    );
    add(
        "corollary_b1",
        vec!["lemmas", "multisum"],
        vec![p("b", 2, 3, 2), p("f", 0, 1, 0)],
        30,
        false,
        Box::new(move |params, order, _| {
            let b = get(params, "b") as usize;
            let family = family_from_tag(get(params, "f"))?;
            let mut acc = QSeries::zero(order);
            for t in 1..b {
                let block: Vec<usize> = (b - 1..b - 1 + t).collect();
                acc = acc.add(&s_sum(&ladder_klist(1, &block, 2 * b - 2), &family, order));
            }
            Ok(acc)
        }),
        Box::new(move |params, order, _| {
            let b = get(params, "b") as usize;
            let family = family_from_tag(get(params, "f"))?;
            let mut acc = QSeries::zero(order);
            for t in 1..=b {
                let block: Vec<usize> = (b - 2..b - 2 + t).collect();
                acc = acc.add(&s_sum(&ladder_klist(1, &block, 2 * b - 2), &family, order));
            }
            Ok(acc)
        }),
        None,
    );

    // 19. Jacobi triple product: product form against the bilateral sum.
    add(
        "jtp",
        vec!["theta", "product"],
        vec![p("zc", -3, 3, -1), p("zx", -2, 2, 0), p("zq", -2, 4, 1), p("r", 1, 4, 1)],
        40,
        false,
        Box::new(|params, order, _| {
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(jacobi_triple(&z, get(params, "r"), order)?.0)
        }),
        Box::new(|params, order, _| {
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(jacobi_triple(&z, get(params, "r"), order)?.1)
        }),
        None,
    );

    // 20. The well-poised evaluation, with the 1/2 cleared.
    add(
        "wellpoised",
        vec!["hypergeometric", "product"],
        vec![p("alpha", 1, 3, 1), p("beta", 1, 3, 1)],
        30,
        false,
        Box::new(|params, order, _| {
            Ok(wellpoised_sides(get(params, "alpha"), get(params, "beta"), order)?.0)
        }),
        Box::new(|params, order, _| {
            Ok(wellpoised_sides(get(params, "alpha"), get(params, "beta"), order)?.1)
        }),
        None,
    );

    // 21. The two q-binomial theorems.
    add(
        "qbin_theorem",
        vec!["hypergeometric"],
        vec![p("n", 0, 12, 6), p("zc", -3, 3, 1), p("zx", -2, 2, 0), p("zq", -2, 4, 1)],
        40,
        false,
        Box::new(|params, order, _| {
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(qbin_theorem_sides(&z, get(params, "n"), order).0)
        }),
        Box::new(|params, order, _| {
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(qbin_theorem_sides(&z, get(params, "n"), order).1)
        }),
        None,
    );
    add(
        "qbin_series",
        vec!["hypergeometric", "product"],
        vec![
            p("ac", -3, 3, -1),
            p("ax", -2, 2, 0),
            p("aq", 0, 4, 1),
            p("zc", -3, 3, 1),
            p("zx", -2, 2, 0),
            p("zq", 1, 4, 2),
        ],
        30,
        false,
        Box::new(|params, order, _| {
            let a = monomial_from(params, "ac", "ax", "aq")?;
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(qbin_series_sides(&a, &z, order)?.0)
        }),
        Box::new(|params, order, _| {
            let a = monomial_from(params, "ac", "ax", "aq")?;
            let z = monomial_from(params, "zc", "zx", "zq")?;
            Ok(qbin_series_sides(&a, &z, order)?.1)
        }),
        None,
    );

    // 22. The two finite-sum forms of the Rogers--Szego polynomial.
    add(
        "rogers_szego",
        vec!["hypergeometric"],
        vec![p("n", 0, 10, 5)],
        30,
        false,
        Box::new(|params, order, _| Ok(rogers_szego_sides(get(params, "n"), order).0)),
        Box::new(|params, order, _| Ok(rogers_szego_sides(get(params, "n"), order).1)),
        None,
    );

    entries
}

/// Render a compact one-line description of a parameter assignment.
pub fn format_params(params: &Params) -> String {
    if params.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_populated() {
        let entries = registry();
        assert!(entries.len() >= 20);
        let ids: Vec<&str> = entries.iter().map(|e| e.id).collect();
        for required in [
            "ariki_mathas_enum",
            "ariki_mathas_multisum",
            "bivariate_12",
            "bivariate_22",
            "corollary_14_a1",
            "wellpoised",
            "rogers_szego",
        ] {
            assert!(ids.contains(&required), "missing {required}");
        }
        for entry in &entries {
            assert!(!entry.tags.is_empty(), "{} has no tags", entry.id);
        }
        // ids are unique
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn unknown_identity_is_reported() {
        let err = verify("no_such_identity", &Params::new(), 10, &VerifyOptions::default());
        assert!(matches!(err, Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn parameters_are_validated() {
        let mut params = Params::new();
        params.insert("omega".to_string(), 99);
        let err = verify("corollary_14_a1", &params, 10, &VerifyOptions::default());
        assert!(matches!(err, Err(Error::BadParameters(_))));

        let mut params = Params::new();
        params.insert("nonsense".to_string(), 1);
        let err = verify("corollary_14_a1", &params, 10, &VerifyOptions::default());
        assert!(matches!(err, Err(Error::BadParameters(_))));
    }

    #[test]
    fn verify_at_order_zero_matches() {
        for id in ["ariki_mathas_multisum", "jtp", "wellpoised"] {
            let report = verify(id, &Params::new(), 0, &VerifyOptions::default()).unwrap();
            assert_eq!(report.status, Status::Match, "{id}");
        }
    }

    #[test]
    fn budget_exceeded_fails_fast() {
        let opts = VerifyOptions {
            budget: EnumBudget::with_ceiling(5),
            oracle: false,
        };
        let err = verify("ariki_mathas_enum", &Params::new(), 24, &opts);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn sample_verification_with_mismatch_details() {
        let report = verify(
            "corollary_14_a1",
            &Params::new(),
            16,
            &VerifyOptions::default(),
        )
        .unwrap();
        assert_eq!(report.status, Status::Match);
        assert!(report.first_mismatch.is_none());
        assert_eq!(report.order, 16);
        assert_eq!(report.params.get("omega"), Some(&1));
    }

    #[test]
    fn oracle_cross_check_runs() {
        let opts = VerifyOptions {
            budget: EnumBudget::default(),
            oracle: true,
        };
        let report = verify("ariki_mathas_multisum", &Params::new(), 14, &opts).unwrap();
        assert_eq!(report.status, Status::Match);
    }

    // The full default-parameter MATCH sweep and the perturbation audit live
    // in the integration suites, where they run with optimized settings.
}
