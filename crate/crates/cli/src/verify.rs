//! Cross-checks between the closed forms and the exhaustive oracle.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use stableass::classify::{self, ClosedForm};
use stableass::oracle::{self, ass_primes, max_in_ass, AssReport};
use stableass::polymatroid::is_polymatroidal;
use stableass::stable::ass_infinity;
use stableass::transversal::{self, TransversalPresentation};
use stableass::veronese::{self, NormalizedVeronese};
use stableass::{Error, MonomialIdeal, MonomialPrime, PrimeSet};

use crate::commands::Context;
use crate::error::CliError;
use crate::report::{prime_json, primes_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    /// Counterexample on failure, reason on skip, summary on success.
    pub detail: Value,
}

impl Check {
    fn pass(name: &'static str, detail: Value) -> Self {
        Check { name, status: Status::Pass, detail }
    }

    fn fail(name: &'static str, detail: Value) -> Self {
        Check { name, status: Status::Fail, detail }
    }

    fn skip(name: &'static str, reason: &str) -> Self {
        Check { name, status: Status::Skip, detail: json!({ "reason": reason }) }
    }

    fn compare(name: &'static str, label: Value, formula: &PrimeSet, oracle: &PrimeSet) -> Self {
        if formula == oracle {
            Check::pass(name, label)
        } else {
            let mut detail = label;
            detail["formula"] = primes_json(formula);
            detail["oracle"] = primes_json(oracle);
            Check::fail(name, detail)
        }
    }

    pub fn to_json(&self) -> Value {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        json!({ "name": self.name, "status": status, "detail": self.detail })
    }
}

/// Folds a list of checks for one property into a single check that fails
/// on the first failing case.
fn first_failure(name: &'static str, checks: Vec<Check>, summary: Value) -> Check {
    checks
        .into_iter()
        .find(|c| c.status == Status::Fail)
        .unwrap_or_else(|| Check::pass(name, summary))
}

pub fn run_checks(
    ideal: &MonomialIdeal,
    k_max: u32,
    samples: usize,
    ctx: &Context,
) -> Result<Vec<Check>, CliError> {
    let limits = &ctx.limits;
    let mut checks = Vec::new();

    let report = match oracle::ass_powers(ideal, k_max, limits) {
        Ok(r) => {
            checks.push(Check::pass("witnesses", json!({ "powers": k_max })));
            r
        }
        Err(partial) => match partial.error {
            Error::Internal(msg) => {
                checks.push(Check::fail(
                    "witnesses",
                    json!({ "k": partial.failed_at, "message": msg }),
                ));
                return Ok(checks);
            }
            e => return Err(e.into()),
        },
    };
    let ass1 = report.primes_at(1).expect("k_max >= 1").clone();

    checks.push(minimal_primes_check(ideal, &ass1)?);
    checks.push(localization_sweep(ideal, &ass1, samples, ctx)?);

    if is_polymatroidal(ideal) {
        checks.extend(polymatroidal_checks(ideal, &report, ctx)?);
    } else {
        for name in ["persistence", "stable-set", "localization-closure"] {
            checks.push(Check::skip(name, "ideal is not polymatroidal"));
        }
    }

    match classify::identify(ideal, limits) {
        Some(ClosedForm::Veronese(v)) => checks.extend(veronese_checks(ideal, &v, ctx)?),
        Some(ClosedForm::Transversal(p)) => {
            checks.extend(transversal_checks(ideal, &p, &report, ctx)?)
        }
        None => checks.push(Check::skip(
            "closed-forms",
            "ideal is neither of Veronese type nor transversal",
        )),
    }
    Ok(checks)
}

fn minimal_primes_check(ideal: &MonomialIdeal, ass: &PrimeSet) -> Result<Check, CliError> {
    let minimal = ideal.minimal_primes()?;
    if let Some(p) = minimal.iter().find(|p| !ass.contains(*p)) {
        return Ok(Check::fail(
            "minimal-primes",
            json!({ "minimal_prime_missing_from_ass": prime_json(p) }),
        ));
    }
    if let Some(p) = ass.iter().find(|p| !minimal.iter().any(|q| q.is_subset(p))) {
        return Ok(Check::fail(
            "minimal-primes",
            json!({ "ass_prime_above_no_minimal_prime": prime_json(p) }),
        ));
    }
    Ok(Check::pass("minimal-primes", json!({ "minimal": minimal.len() })))
}

/// `Ass(I(P_F))` must be `{G ∈ Ass(I) : G ⊆ F}` read in the local ring.
fn localization_sweep(
    ideal: &MonomialIdeal,
    ass: &PrimeSet,
    samples: usize,
    ctx: &Context,
) -> Result<Check, CliError> {
    const NAME: &str = "localization-sweep";
    let n = ideal.nvars();
    if n >= 63 {
        return Ok(Check::skip(NAME, "too many variables to sample subsets"));
    }
    let total = (1u64 << n) - 1;
    let masks: BTreeSet<u64> = if total <= samples as u64 {
        (1..=total).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
        (0..samples).map(|_| rng.random_range(1..=total)).collect()
    };
    for &mask in &masks {
        let f = MonomialPrime::new((0..n).filter(|&i| mask >> i & 1 == 1))?;
        let local = ideal.localize(&f)?;
        let expected: PrimeSet = ass.iter().filter(|g| g.is_subset(&f)).cloned().collect();
        let got: PrimeSet = if local.ideal.is_unit() {
            PrimeSet::new()
        } else {
            ass_primes(&local.ideal, &ctx.limits)?
                .iter()
                .map(|g| g.lift(&local.vars))
                .collect()
        };
        if got != expected {
            return Ok(Check::fail(
                NAME,
                json!({
                    "localized_at": prime_json(&f),
                    "local_ass": primes_json(&got),
                    "expected": primes_json(&expected),
                }),
            ));
        }
    }
    Ok(Check::pass(NAME, json!({ "subsets": masks.len(), "seed": ctx.seed })))
}

fn polymatroidal_checks(
    ideal: &MonomialIdeal,
    report: &AssReport,
    ctx: &Context,
) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let sets = report.per_power();
    out.push(
        match sets.windows(2).find(|w| !w[0].1.is_subset(&w[1].1)) {
            Some(w) => Check::fail(
                "persistence",
                json!({
                    "k": w[0].0,
                    "lost": primes_json(w[0].1.difference(&w[1].1)),
                }),
            ),
            None => Check::pass("persistence", json!({ "powers": sets.len() })),
        },
    );

    let stable = ass_infinity(ideal, &ctx.limits)?;
    let outside = sets.iter().find(|(_, s)| !s.is_subset(&stable));
    out.push(match outside {
        Some((k, s)) => Check::fail(
            "stable-set",
            json!({
                "k": k,
                "not_in_stable_set": primes_json(s.difference(&stable)),
            }),
        ),
        None => match oracle::astab_certified(ideal, &ctx.limits) {
            Ok((k0, _)) => Check::pass("stable-set", json!({ "astab": k0, "stable": primes_json(&stable) })),
            Err(Error::Internal(msg)) => Check::fail("stable-set", json!({ "message": msg })),
            Err(e) => return Err(e.into()),
        },
    });

    let n = ideal.nvars();
    let mut closure = Vec::new();
    for i in 0..n {
        let Ok(f) = MonomialPrime::new((0..n).filter(|&j| j != i)) else {
            continue;
        };
        let local = ideal.localize(&f)?.ideal;
        if !local.is_unit() && !is_polymatroidal(&local) {
            closure.push(Check::fail(
                "localization-closure",
                json!({ "dropped_variable": i + 1, "generators": local.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>() }),
            ));
        }
    }
    out.push(first_failure("localization-closure", closure, json!({ "variables": n })));
    Ok(out)
}

fn veronese_checks(
    ideal: &MonomialIdeal,
    v: &NormalizedVeronese,
    ctx: &Context,
) -> Result<Vec<Check>, CliError> {
    let limits = &ctx.limits;
    let astab = veronese::astab_veronese(v);
    let mut ass = Vec::new();
    let mut depth = Vec::new();
    let mut power = MonomialIdeal::unit(ideal.nvars());
    for k in 1..=astab + 1 {
        power = power.product(ideal)?;
        let oracle_ass = ass_primes(&power, limits)?;
        ass.push(Check::compare(
            "veronese-ass",
            json!({ "k": k }),
            &veronese::ass_veronese(v, k, limits)?,
            &oracle_ass,
        ));
        let formula_zero = veronese::depth_veronese(v, k)? == 0;
        let oracle_zero = max_in_ass(&power, limits)?;
        if formula_zero != oracle_zero {
            depth.push(Check::fail(
                "veronese-depth",
                json!({ "k": k, "formula_depth_zero": formula_zero, "oracle_max_in_ass": oracle_zero }),
            ));
        }
    }
    let range = json!({ "powers": astab + 1 });
    let mut out = vec![
        first_failure("veronese-ass", ass, range.clone()),
        first_failure("veronese-depth", depth, range),
    ];
    let certified = oracle::astab_certified(ideal, limits)?.0;
    out.push(if certified == astab {
        Check::pass("veronese-astab", json!({ "astab": astab }))
    } else {
        Check::fail("veronese-astab", json!({ "formula": astab, "certified": certified }))
    });
    let dstab = veronese::dstab_veronese(v);
    out.push(if dstab == astab {
        Check::pass("astab-dstab", json!({ "astab": astab, "dstab": dstab }))
    } else {
        Check::fail("astab-dstab", json!({ "astab": astab, "dstab": dstab }))
    });
    Ok(out)
}

fn transversal_checks(
    ideal: &MonomialIdeal,
    pres: &TransversalPresentation,
    report: &AssReport,
    ctx: &Context,
) -> Result<Vec<Check>, CliError> {
    let formula = transversal::ass_transversal(pres);
    let ass = report
        .per_power()
        .iter()
        .map(|(k, s)| Check::compare("transversal-ass", json!({ "k": k }), &formula, s))
        .collect();
    let mut out = vec![first_failure(
        "transversal-ass",
        ass,
        json!({ "powers": report.per_power().len() }),
    )];

    let formula_zero = transversal::depth_transversal(pres) == 0;
    let oracle_zero = max_in_ass(ideal, &ctx.limits)?;
    out.push(if formula_zero == oracle_zero {
        Check::pass("transversal-depth", json!({ "depth": transversal::depth_transversal(pres) }))
    } else {
        Check::fail(
            "transversal-depth",
            json!({ "formula_depth_zero": formula_zero, "oracle_max_in_ass": oracle_zero }),
        )
    });

    let dec = transversal::primary_decomposition_power(pres, 1, &ctx.limits)?;
    out.push(if dec.intersect()? == *ideal {
        Check::pass("transversal-decomposition", json!({ "components": dec.components().len() }))
    } else {
        Check::fail(
            "transversal-decomposition",
            json!({
                "components": dec
                    .components()
                    .iter()
                    .map(|(p, e)| json!({ "prime": prime_json(p), "exponent": e }))
                    .collect::<Vec<_>>(),
            }),
        )
    });
    Ok(out)
}
