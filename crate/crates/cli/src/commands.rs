use serde_json::{json, Value};
use stableass::classify::{self, ClosedForm};
use stableass::oracle::{self, witness_space};
use stableass::stable::{analytic_spread, ass_infinity, limit_depth};
use stableass::transversal::{self, TransversalPresentation};
use stableass::veronese::{self, NormalizedVeronese, VeroneseCase};
use stableass::{Error, Limits, MonomialIdeal};

use crate::args::{Command, TransversalVerb, VeroneseVerb};
use crate::error::{CliError, ErrorKind};
use crate::input::InputDoc;
use crate::report::{ass_report_json, monomial_json, prime_json, primes_json, witnesses_json};
use crate::verify;

pub struct Context {
    pub limits: Limits,
    pub seed: u64,
}

pub fn execute(command: &Command, doc: &InputDoc, ctx: &Context) -> Result<Value, CliError> {
    let limits = &ctx.limits;
    match command {
        Command::Ass => {
            let ideal = proper_ideal(doc)?;
            let found = oracle::ass(&ideal, limits)?;
            Ok(json!({
                "command": "ass",
                "n": ideal.nvars(),
                "primes": primes_json(found.keys()),
                "witnesses": witnesses_json(&found),
                "candidates": witness_space(&ideal).to_string(),
            }))
        }
        Command::AssPowers { k_max } => {
            let ideal = proper_ideal(doc)?;
            if *k_max == 0 {
                return Err(CliError::input("--k-max must be at least 1"));
            }
            match oracle::ass_powers(&ideal, *k_max, limits) {
                Ok(report) => {
                    let mut out = ass_report_json(&report);
                    out["command"] = "ass-powers".into();
                    out["n"] = ideal.nvars().into();
                    Ok(out)
                }
                Err(partial) => Err(CliError::from(partial.error).with_details(json!({
                    "failed_at": partial.failed_at,
                    "partial": ass_report_json(&partial.report),
                }))),
            }
        }
        Command::AssInfinity => {
            let ideal = proper_ideal(doc)?;
            let primes = ass_infinity(&ideal, limits)?;
            Ok(json!({
                "command": "ass-infinity",
                "n": ideal.nvars(),
                "primes": primes_json(&primes),
                "analytic_spread": analytic_spread(&ideal)?,
                "limit_depth": limit_depth(&ideal)?,
            }))
        }
        Command::Astab { compare_dstab } => {
            let ideal = proper_ideal(doc)?;
            let (k0, report) = oracle::astab_certified(&ideal, limits)?;
            let mut out = ass_report_json(&report);
            out["command"] = "astab".into();
            out["astab"] = k0.into();
            if *compare_dstab {
                out["dstab"] = match classify::identify(&ideal, limits) {
                    Some(form) => {
                        let (family, dstab) = match &form {
                            ClosedForm::Veronese(v) => ("veronese", veronese::dstab_veronese(v)),
                            ClosedForm::Transversal(p) => {
                                ("transversal", transversal::dstab_transversal(p))
                            }
                        };
                        json!({ "family": family, "value": dstab, "equal": dstab == k0 })
                    }
                    None => json!({ "family": null, "value": null, "equal": null }),
                };
            }
            Ok(out)
        }
        Command::Transversal { verb } => transversal_command(verb, &doc.presentation(limits)?, limits),
        Command::Veronese { verb } => {
            veronese_command(verb, &veronese::normalize(&doc.veronese_spec()?), limits)
        }
        Command::Verify { k_max, samples } => {
            if *k_max == 0 {
                return Err(CliError::input("--k-max must be at least 1"));
            }
            let ideal = proper_ideal(doc)?;
            let checks = verify::run_checks(&ideal, *k_max, *samples, ctx)?;
            let count = |s| checks.iter().filter(|c| c.status == s).count();
            let summary = json!({
                "pass": count(verify::Status::Pass),
                "fail": count(verify::Status::Fail),
                "skip": count(verify::Status::Skip),
            });
            let out = json!({
                "command": "verify",
                "n": ideal.nvars(),
                "checks": checks.iter().map(verify::Check::to_json).collect::<Vec<_>>(),
                "summary": summary,
            });
            if count(verify::Status::Fail) > 0 {
                return Err(CliError {
                    kind: ErrorKind::Disagreement,
                    message: "verification found a disagreement".into(),
                    details: out,
                });
            }
            Ok(out)
        }
    }
}

fn proper_ideal(doc: &InputDoc) -> Result<MonomialIdeal, CliError> {
    let ideal = doc.ideal()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal.into());
    }
    Ok(ideal)
}

fn positive_k(k: u32) -> Result<u32, CliError> {
    if k == 0 {
        return Err(CliError::input("--k must be at least 1"));
    }
    Ok(k)
}

fn transversal_command(
    verb: &TransversalVerb,
    pres: &TransversalPresentation,
    limits: &Limits,
) -> Result<Value, CliError> {
    let n = pres.nvars();
    Ok(match verb {
        TransversalVerb::Ass => {
            let graph = pres.intersection_graph();
            let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            let witness = transversal::socle_witness(pres)?;
            json!({
                "command": "transversal ass",
                "n": n,
                "primes": primes_json(&transversal::ass_transversal(pres)),
                "graph": { "vertices": graph.vertex_count(), "edges": edges, "components": graph.components().len() },
                "socle_witness": witness.as_ref().map(monomial_json),
            })
        }
        TransversalVerb::Decompose { k } => {
            let k = positive_k(*k)?;
            let dec = transversal::primary_decomposition_power(pres, k, limits)?;
            let components: Vec<Value> = dec
                .components()
                .iter()
                .map(|(p, e)| json!({ "prime": prime_json(p), "exponent": e }))
                .collect();
            json!({
                "command": "transversal decompose",
                "n": n,
                "k": k,
                "components": components,
                "verified": dec.verified(),
            })
        }
        TransversalVerb::Depth => json!({
            "command": "transversal depth",
            "n": n,
            "depth": transversal::depth_transversal(pres),
            "dstab": transversal::dstab_transversal(pres),
            "analytic_spread": transversal::spread_transversal(pres),
        }),
        TransversalVerb::Recover => {
            let normalized: Vec<Value> = pres
                .normalized()
                .iter()
                .map(|(p, m)| json!({ "prime": prime_json(p), "multiplicity": m }))
                .collect();
            json!({
                "command": "transversal recover",
                "n": n,
                "transversal": primes_json(pres.factors()),
                "normalized": normalized,
            })
        }
    })
}

fn case_name(case: VeroneseCase) -> &'static str {
    match case {
        VeroneseCase::Principal => "principal",
        VeroneseCase::Prime => "prime",
        VeroneseCase::General => "general",
    }
}

fn veronese_command(
    verb: &VeroneseVerb,
    v: &NormalizedVeronese,
    limits: &Limits,
) -> Result<Value, CliError> {
    let mut out = match verb {
        VeroneseVerb::Ass { k } => {
            let k = positive_k(*k)?;
            json!({
                "command": "veronese ass",
                "k": k,
                "primes": primes_json(&veronese::ass_veronese(v, k, limits)?),
            })
        }
        VeroneseVerb::AssInfinity => json!({
            "command": "veronese ass-infinity",
            "primes": primes_json(&veronese::ass_infinity_veronese(v, limits)?),
        }),
        VeroneseVerb::Astab => {
            let stable = veronese::ass_infinity_veronese(v, limits)?;
            let indices = stable
                .iter()
                .map(|p| {
                    let index = veronese::prime_stability_index(v, p)?;
                    Ok(json!({ "prime": prime_json(p), "index": index }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            json!({
                "command": "veronese astab",
                "astab": veronese::astab_veronese(v),
                "stability_indices": indices,
            })
        }
        VeroneseVerb::Depth { k } => {
            let k = positive_k(*k)?;
            json!({
                "command": "veronese depth",
                "k": k,
                "depth": veronese::depth_veronese(v, k)?,
            })
        }
        VeroneseVerb::Dstab => json!({
            "command": "veronese dstab",
            "dstab": veronese::dstab_veronese(v),
            "limit_depth": veronese::limit_depth_veronese(v),
        }),
    };
    out["n"] = v.nvars().into();
    out["case"] = case_name(v.case()).into();
    Ok(out)
}
