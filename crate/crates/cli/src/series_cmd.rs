//! Named series builders behind the `series` subcommand.

use rrverify_core::bivariate::{
    bilateral_h, bilateral_i, coeff_formula, s1m_s2m, triple_sum_bivariate, Sign,
};
use rrverify_core::error::{Error, Result};
use rrverify_core::multisum::{gen1_sum, multisum_gen, multisum_reversed};
use rrverify_core::partition::{gf_lambda, EnumBudget};
use rrverify_core::pochhammer::product_ariki_mathas;
use rrverify_core::statistics::{b_series, f_series, g_series};
use rrverify_core::QSeries;

/// The names accepted by `series --id`, with the parameters each one reads.
pub const SERIES_NAMES: &[(&str, &str)] = &[
    ("product", "a, m: the Ariki--Mathas infinite product"),
    ("multisum", "a, m: ascending q-binomial chain multisum"),
    ("multisum_rev", "a, m: reversed chain multisum"),
    ("gen1", "a, m: collapsed form of the chain multisum"),
    ("enum_gf", "a, m: bivariate enumeration generating function"),
    ("enum_counts", "a, m: enumeration counts (x -> 1)"),
    ("triple_sum", "a in {1,2}: x-graded triple sum"),
    ("coeff_slice", "a in {1,2}, omega: coefficient formula slice"),
    ("h_plus", "omega: bilateral H^+ sum"),
    ("h_minus", "omega: bilateral H^- sum"),
    ("i_plus", "omega: bilateral I^+ sum"),
    ("i_minus", "omega: bilateral I^- sum"),
    ("s1", "n = M: first constant-sum double sum"),
    ("s2", "n = M: second constant-sum double sum"),
    ("s_closed", "n = M: closed form of the constant sums"),
    ("f_stat", "n = N: difference-statistic series f_N(x, q)"),
    ("g_brute", "n = N: alternating-sum series by enumeration"),
    ("g_closed", "n = N: alternating-sum series, closed form"),
    ("b_brute", "n = N, omega = k: difference-statistic slice, brute force"),
    ("b_closed", "n = N, omega = k: difference-statistic slice, closed form"),
];

pub struct SeriesRequest {
    pub a: Option<i64>,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub omega: Option<i64>,
}

impl SeriesRequest {
    fn a(&self) -> Result<i64> {
        self.a.ok_or(Error::BadParameters("this series needs --a"))
    }
    fn m(&self) -> Result<i64> {
        self.m.ok_or(Error::BadParameters("this series needs --m"))
    }
    fn n(&self) -> Result<i64> {
        self.n.ok_or(Error::BadParameters("this series needs --n"))
    }
    fn omega(&self) -> Result<i64> {
        self.omega
            .ok_or(Error::BadParameters("this series needs --omega"))
    }
}

/// Evaluate the named series at `order`.
pub fn build(
    name: &str,
    request: &SeriesRequest,
    order: i64,
    budget: &EnumBudget,
) -> Result<QSeries> {
    let series = match name {
        "product" => product_ariki_mathas(request.a()?, request.m()?, order)?,
        "multisum" => multisum_gen(request.a()?, request.m()?, order)?,
        "multisum_rev" => multisum_reversed(request.a()?, request.m()?, order)?,
        "gen1" => gen1_sum(request.a()?, request.m()?, order)?,
        "enum_gf" => gf_lambda(request.a()?, request.m()?, order, budget)?,
        "enum_counts" => gf_lambda(request.a()?, request.m()?, order, budget)?.eval_x_one(),
        "triple_sum" => triple_sum_bivariate(request.a()?, order)?,
        "coeff_slice" => coeff_formula(request.a()?, request.omega()?, order)?,
        "h_plus" => bilateral_h(Sign::Plus, request.omega()?, order),
        "h_minus" => bilateral_h(Sign::Minus, request.omega()?, order),
        "i_plus" => bilateral_i(Sign::Plus, request.omega()?, order),
        "i_minus" => bilateral_i(Sign::Minus, request.omega()?, order),
        "s1" => s1m_s2m(request.n()?, order)?.0,
        "s2" => s1m_s2m(request.n()?, order)?.1,
        "s_closed" => s1m_s2m(request.n()?, order)?.2,
        "f_stat" => f_series(request.n()?, order),
        "g_brute" => g_series(request.n()?, order).0,
        "g_closed" => g_series(request.n()?, order).2,
        "b_brute" => b_series(request.n()?, request.omega()?, order).0,
        "b_closed" => b_series(request.n()?, request.omega()?, order).1,
        _ => return Err(Error::BadParameters("unknown series name (try `list`)")),
    };
    Ok(series.truncate(order))
}
