//! Canonical serializations.
//!
//! Series use the JSON shape
//! `{"order": N, "min_exp": e, "terms": [[q_exp, x_exp, "num/den"], ...]}`
//! with terms sorted by `(q_exp, x_exp)`; rationals are always rendered with
//! an explicit denominator. Reports serialize to JSON objects (one per line
//! in batch mode). Count tables emit CSV with the fixed column order
//! `n,count` (plain) or `n,count,omega` (split by the statistic).

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use rrverify_core::num::Rational;
use rrverify_core::registry::{IdentityReport, Params};
use rrverify_core::{Monomial, QSeries};
use serde_json::{json, Map, Value};

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(numer.trim()).map_err(|e| format!("bad numerator: {e}"))?;
    let denom = BigInt::from_str(denom.trim()).map_err(|e| format!("bad denominator: {e}"))?;
    if denom == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(numer, denom))
}

pub fn series_to_json(series: &QSeries) -> Value {
    let terms: Vec<Value> = series
        .terms()
        .map(|(q, x, c)| json!([q, x, rational_to_string(c)]))
        .collect();
    json!({
        "order": series.order(),
        "min_exp": series.min_exp(),
        "terms": terms,
    })
}

pub fn series_from_json(value: &Value) -> Result<QSeries, String> {
    let order = value
        .get("order")
        .and_then(Value::as_i64)
        .ok_or("missing order")?;
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("missing terms")?;
    let mut series = QSeries::zero(order);
    for term in terms {
        let triple = term.as_array().filter(|t| t.len() == 3).ok_or("bad term")?;
        let q_exp = triple[0].as_i64().ok_or("bad q exponent")?;
        let x_exp = triple[1].as_i64().ok_or("bad x exponent")?;
        let coeff = rational_from_str(triple[2].as_str().ok_or("bad coefficient")?)?;
        if q_exp > order {
            return Err("term beyond the order".into());
        }
        series = series.add(&Monomial::new(coeff, x_exp, q_exp).to_series(order));
    }
    Ok(series)
}

pub fn series_to_text(series: &QSeries) -> String {
    format!("{series}")
}

pub fn report_to_json(report: &IdentityReport) -> Value {
    let params: Map<String, Value> = report
        .params
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let mismatch = report.first_mismatch.as_ref().map(|m| {
        json!({
            "q_exp": m.q_exp,
            "x_exp": m.x_exp,
            "lhs": rational_to_string(&m.lhs),
            "rhs": rational_to_string(&m.rhs),
        })
    });
    json!({
        "id": report.id,
        "params": params,
        "order": report.order,
        "status": report.status.as_str(),
        "first_mismatch": mismatch,
        "elapsed_ms": report.elapsed.map(|d| d.as_secs_f64() * 1e3),
    })
}

pub fn report_from_json(value: &Value) -> Result<(String, String, i64, Params), String> {
    let id = value
        .get("id")
        .and_then(Value::as_str)
        .ok_or("missing id")?
        .to_string();
    let status = value
        .get("status")
        .and_then(Value::as_str)
        .ok_or("missing status")?
        .to_string();
    let order = value
        .get("order")
        .and_then(Value::as_i64)
        .ok_or("missing order")?;
    let mut params = BTreeMap::new();
    if let Some(map) = value.get("params").and_then(Value::as_object) {
        for (k, v) in map {
            params.insert(k.clone(), v.as_i64().ok_or("bad parameter value")?);
        }
    }
    Ok((id, status, order, params))
}

pub fn report_to_text(report: &IdentityReport) -> String {
    let params = rrverify_core::registry::format_params(&report.params);
    let params = if params.is_empty() {
        String::new()
    } else {
        format!("[{params}] ")
    };
    let elapsed = report
        .elapsed
        .map(|d| format!(" ({d:.2?})"))
        .unwrap_or_default();
    let detail = report
        .first_mismatch
        .as_ref()
        .map(|m| {
            format!(
                "\n  first mismatch at q^{} x^{}: lhs = {}, rhs = {}",
                m.q_exp,
                m.x_exp,
                rational_to_string(&m.lhs),
                rational_to_string(&m.rhs)
            )
        })
        .unwrap_or_default();
    format!(
        "{} {}order={}: {}{}{}",
        report.id,
        params,
        report.order,
        report.status.as_str(),
        elapsed,
        detail
    )
}

/// Partitions serialize as plain integer arrays; multipartitions as arrays
/// of those.
pub fn partition_to_json(p: &rrverify_core::partition::Partition) -> Value {
    Value::Array(p.parts().iter().map(|&part| json!(part)).collect())
}

pub fn multipartition_to_json(p: &rrverify_core::partition::Multipartition) -> Value {
    Value::Array(p.components().iter().map(partition_to_json).collect())
}

/// Rows of a count table: `(n, count, omega)` with `omega = None` for plain
/// tables.
pub type TableRows = Vec<(i64, u64, Option<i64>)>;

pub fn table_to_csv(rows: &TableRows, by_omega: bool) -> String {
    let mut out = String::from(if by_omega { "n,count,omega\n" } else { "n,count\n" });
    for (n, count, omega) in rows {
        match omega {
            Some(w) => out.push_str(&format!("{n},{count},{w}\n")),
            None => out.push_str(&format!("{n},{count}\n")),
        }
    }
    out
}

pub fn table_to_json(rows: &TableRows) -> Value {
    Value::Array(
        rows.iter()
            .map(|(n, count, omega)| match omega {
                Some(w) => json!({"n": n, "count": count, "omega": w}),
                None => json!({"n": n, "count": count}),
            })
            .collect(),
    )
}

pub fn table_to_text(rows: &TableRows, by_omega: bool) -> String {
    let mut out = String::new();
    if by_omega {
        out.push_str(&format!("{:>6} {:>10} {:>6}\n", "n", "count", "omega"));
    } else {
        out.push_str(&format!("{:>6} {:>10}\n", "n", "count"));
    }
    for (n, count, omega) in rows {
        match omega {
            Some(w) => out.push_str(&format!("{n:>6} {count:>10} {w:>6}\n")),
            None => out.push_str(&format!("{n:>6} {count:>10}\n")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rrverify_core::num::{rat, rat_frac};

    #[test]
    fn rational_strings_roundtrip() {
        for r in [rat(0), rat(-7), rat_frac(22, 4), rat_frac(-1, 3)] {
            assert_eq!(rational_from_str(&rational_to_string(&r)).unwrap(), r);
        }
        assert_eq!(rational_from_str("5").unwrap(), rat(5));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn series_json_shape() {
        let s = Monomial::new(rat_frac(1, 2), -1, 3)
            .to_series(5)
            .add(&QSeries::one(5));
        let v = series_to_json(&s);
        assert_eq!(v["order"], 5);
        assert_eq!(v["min_exp"], 0);
        assert_eq!(v["terms"][0][0], 0);
        assert_eq!(v["terms"][0][2], "1/1");
        assert_eq!(v["terms"][1][1], -1);
        assert_eq!(v["terms"][1][2], "1/2");
    }

    #[test]
    fn partitions_serialize_as_integer_arrays() {
        use rrverify_core::partition::{Multipartition, Partition};
        let p = Partition::new(vec![5, 4, 4, 2]);
        assert_eq!(partition_to_json(&p), serde_json::json!([5, 4, 4, 2]));
        let mp = Multipartition::new(vec![p, Partition::empty()]);
        assert_eq!(
            multipartition_to_json(&mp),
            serde_json::json!([[5, 4, 4, 2], []])
        );
    }

    #[test]
    fn series_json_roundtrip() {
        let s = Monomial::new(rat_frac(-3, 4), 2, -2)
            .to_series(6)
            .add(&QSeries::one(6));
        let back = series_from_json(&series_to_json(&s)).unwrap();
        assert_eq!(back, s);
    }
}
