//! JSON encodings of library values. Primes are sorted 1-based index arrays;
//! monomials are exponent vectors.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use stableass::oracle::AssReport;
use stableass::{Monomial, MonomialPrime};

pub fn prime_json(p: &MonomialPrime) -> Value {
    json!(p.support().iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn primes_json<'a>(primes: impl IntoIterator<Item = &'a MonomialPrime>) -> Value {
    Value::Array(primes.into_iter().map(prime_json).collect())
}

pub fn monomial_json(m: &Monomial) -> Value {
    json!(m.exponents())
}

pub fn witnesses_json<'a>(
    witnesses: impl IntoIterator<Item = (&'a MonomialPrime, &'a Monomial)>,
) -> Value {
    Value::Array(
        witnesses
            .into_iter()
            .map(|(p, z)| json!({ "prime": prime_json(p), "witness": monomial_json(z) }))
            .collect(),
    )
}

pub fn ass_report_json(report: &AssReport) -> Value {
    let mut by_power: BTreeMap<u32, Vec<(&MonomialPrime, &Monomial)>> = BTreeMap::new();
    for ((k, p), z) in report.witnesses() {
        by_power.entry(*k).or_default().push((p, z));
    }
    let powers: Vec<Value> = report
        .per_power()
        .iter()
        .map(|(k, primes)| {
            json!({
                "k": k,
                "primes": primes_json(primes),
                "witnesses": witnesses_json(by_power.remove(k).unwrap_or_default()),
            })
        })
        .collect();
    json!({
        "powers": powers,
        "stabilized_at": report.stabilized_at(),
        "certified": report.certified(),
    })
}
