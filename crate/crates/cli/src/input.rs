//! The three input documents:
//!
//! ```json
//! { "n": 3, "generators": [[1, 1, 0], [0, 1, 1]] }
//! { "transversal": [[1, 2], [2, 3]], "n": 4 }
//! { "veronese": { "d": 2, "a": [1, 1, 1] } }
//! ```
//!
//! Transversal factors use 1-based variable indices; `n` defaults to the
//! largest index used.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use stableass::polymatroid::{transversal_ideal, veronese_ideal, VeroneseSpec};
use stableass::transversal::{recover_presentation, TransversalPresentation};
use stableass::{Limits, MonomialIdeal, MonomialPrime};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDoc {
    Generators { n: usize, generators: Vec<Vec<u32>> },
    /// Factors are kept as sorted, deduplicated 1-based index sets.
    Transversal { n: Option<usize>, factors: Vec<Vec<usize>> },
    Veronese { d: u32, a: Vec<u32> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorsForm {
    n: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransversalForm {
    transversal: Vec<Vec<usize>>,
    n: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VeroneseBody {
    d: u32,
    a: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VeroneseForm {
    veronese: VeroneseBody,
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Self::from_value(serde_json::from_str(text)?)
    }

    pub fn from_value(value: Value) -> Result<Self, CliError> {
        let Value::Object(map) = &value else {
            return Err(CliError::input("input document must be a JSON object"));
        };
        let doc = if map.contains_key("veronese") {
            let f: VeroneseForm = serde_json::from_value(value)?;
            InputDoc::Veronese {
                d: f.veronese.d,
                a: f.veronese.a,
            }
        } else if map.contains_key("transversal") {
            let f: TransversalForm = serde_json::from_value(value)?;
            let factors = f
                .transversal
                .into_iter()
                .map(|mut s| {
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect();
            InputDoc::Transversal { n: f.n, factors }
        } else if map.contains_key("generators") {
            let f: GeneratorsForm = serde_json::from_value(value)?;
            InputDoc::Generators {
                n: f.n,
                generators: f.generators,
            }
        } else {
            return Err(CliError::input(
                "input document needs one of the keys \"generators\", \"transversal\", \"veronese\"",
            ));
        };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), CliError> {
        match self {
            InputDoc::Generators { n, generators } => {
                if *n == 0 {
                    return Err(CliError::input("\"n\" must be positive"));
                }
                if generators.is_empty() {
                    return Err(CliError::input("\"generators\" must be non-empty"));
                }
                if let Some(g) = generators.iter().find(|g| g.len() != *n) {
                    return Err(CliError::input(format!(
                        "generator {g:?} has {} exponents, expected {n}",
                        g.len()
                    )));
                }
            }
            InputDoc::Transversal { n, factors } => {
                if factors.is_empty() {
                    return Err(CliError::input("\"transversal\" must list at least one factor"));
                }
                if factors.iter().any(Vec::is_empty) {
                    return Err(CliError::input("transversal factors must be non-empty"));
                }
                if factors.iter().flatten().any(|&i| i == 0) {
                    return Err(CliError::input("transversal variable indices are 1-based"));
                }
                let top = factors.iter().flatten().copied().max().unwrap_or(0);
                if let Some(n) = n {
                    if *n < top {
                        return Err(CliError::input(format!(
                            "factor uses x{top} but \"n\" is {n}"
                        )));
                    }
                }
            }
            InputDoc::Veronese { d, a } => {
                VeroneseSpec::new(*d, a.clone())?;
            }
        }
        Ok(())
    }

    /// Canonical JSON with sorted keys and sorted index sets. A transversal
    /// document carries `n` only if the input did.
    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        match self {
            InputDoc::Generators { n, generators } => {
                map.insert("n".into(), (*n).into());
                map.insert("generators".into(), serde_json::json!(generators));
            }
            InputDoc::Transversal { n, factors } => {
                if let Some(n) = n {
                    map.insert("n".into(), (*n).into());
                }
                map.insert("transversal".into(), serde_json::json!(factors));
            }
            InputDoc::Veronese { d, a } => {
                map.insert(
                    "veronese".into(),
                    serde_json::to_value(VeroneseBody { d: *d, a: a.clone() })
                        .expect("plain struct serializes"),
                );
            }
        }
        Value::Object(map)
    }

    pub fn nvars(&self) -> usize {
        match self {
            InputDoc::Generators { n, .. } => *n,
            InputDoc::Transversal { n, factors } => {
                n.unwrap_or_else(|| factors.iter().flatten().copied().max().unwrap_or(0))
            }
            InputDoc::Veronese { a, .. } => a.len(),
        }
    }

    /// The ideal described by the document, in any of the three forms.
    pub fn ideal(&self) -> Result<MonomialIdeal, CliError> {
        Ok(match self {
            InputDoc::Generators { n, generators } => {
                MonomialIdeal::from_exponents(*n, generators.iter().cloned())?
            }
            InputDoc::Transversal { .. } => {
                let pres = self.direct_presentation()?.expect("transversal form");
                transversal_ideal(pres.nvars(), pres.factors())?
            }
            InputDoc::Veronese { d, a } => veronese_ideal(&VeroneseSpec::new(*d, a.clone())?)?,
        })
    }

    fn direct_presentation(&self) -> Result<Option<TransversalPresentation>, CliError> {
        let InputDoc::Transversal { factors, .. } = self else {
            return Ok(None);
        };
        let primes = factors
            .iter()
            .map(|s| MonomialPrime::new(s.iter().map(|i| i - 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(TransversalPresentation::new(self.nvars(), primes)?))
    }

    /// A transversal presentation: given directly, or recovered from
    /// generators.
    pub fn presentation(&self, limits: &Limits) -> Result<TransversalPresentation, CliError> {
        if let Some(p) = self.direct_presentation()? {
            return Ok(p);
        }
        Ok(recover_presentation(&self.ideal()?, limits)?)
    }

    /// A Veronese spec: given directly, or detected from generators.
    pub fn veronese_spec(&self) -> Result<VeroneseSpec, CliError> {
        if let InputDoc::Veronese { d, a } = self {
            return Ok(VeroneseSpec::new(*d, a.clone())?);
        }
        VeroneseSpec::detect(&self.ideal()?)
            .ok_or_else(|| CliError::input("ideal is not of Veronese type"))
    }
}

/// Sorts object keys and the index sets under `"transversal"`, so that
/// equivalent input documents compare equal as text.
pub fn canonicalize(value: &Value) -> Value {
    match value {
        Value::Object(map) => Value::Object(
            map.iter()
                .map(|(k, v)| {
                    let v = if k == "transversal" {
                        sort_index_sets(v)
                    } else {
                        canonicalize(v)
                    };
                    (k.clone(), v)
                })
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.iter().map(canonicalize).collect()),
        other => other.clone(),
    }
}

fn sort_index_sets(v: &Value) -> Value {
    let Value::Array(sets) = v else {
        return v.clone();
    };
    Value::Array(
        sets.iter()
            .map(|s| match s {
                Value::Array(items) => {
                    let mut items = items.clone();
                    items.sort_by_key(|x| x.as_u64());
                    items.dedup();
                    Value::Array(items)
                }
                other => other.clone(),
            })
            .collect(),
    )
}
