//! The JSON configuration document and its conversion into library values.
//!
//! ```json
//! {
//!   "mode": "exact",
//!   "words": [[[{"m": 1, "re": "0", "im": "0"}], [{"m": 1, "re": 1}]]],
//!   "discs": [{"a_re": 0, "a_im": 0, "q_re": 1, "q_im": 0}],
//!   "states": [[{"1": 1}, {"2": 1}]],
//!   "truncation": {"M": 4, "N": 4},
//!   "tolerances": {"psd": 1e-10}
//! }
//! ```
//!
//! A word is a list of Wick groups, a group a list of insertions. Exact
//! mode takes integers or rational strings `"p/q"`; float mode takes JSON
//! numbers only.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::algebra::{Insertion, LinearCombination, WickCombination, WickGroup, WickWord};
use crate::amplitude::{Disc, DiscConfiguration};
use crate::error::{Error, Result};
use crate::fock::FockIndex;
use crate::scalar::{parse_rational, Backend, ComplexScalar};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Default for Num {
    fn default() -> Self {
        Num::Int(0)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InsertionDoc {
    pub m: u32,
    #[serde(default)]
    pub re: Num,
    #[serde(default)]
    pub im: Num,
}

pub type WordDoc = Vec<Vec<InsertionDoc>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    #[serde(default = "unit_coeff")]
    pub coeff: CoeffDoc,
    pub word: WordDoc,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffDoc {
    #[serde(default)]
    pub re: Num,
    #[serde(default)]
    pub im: Num,
}

fn unit_coeff() -> CoeffDoc {
    CoeffDoc {
        re: Num::Int(1),
        im: Num::Int(0),
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscDoc {
    #[serde(default)]
    pub a_re: Num,
    #[serde(default)]
    pub a_im: Num,
    pub q_re: Num,
    #[serde(default)]
    pub q_im: Num,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncationDoc {
    #[serde(rename = "M")]
    pub max_mode: u32,
    #[serde(rename = "N")]
    pub max_particles: u32,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesDoc {
    #[serde(default = "default_psd_tol")]
    pub psd: f64,
}

fn default_psd_tol() -> f64 {
    1e-10
}

impl Default for TolerancesDoc {
    fn default() -> Self {
        TolerancesDoc { psd: default_psd_tol() }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyDoc {
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub samples: Option<usize>,
}

/// The whole input document. Every payload is optional; commands check for
/// what they need.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    #[serde(default)]
    pub mode: Option<Backend>,
    /// Correlator inputs, and unit-coefficient Gram states.
    #[serde(default)]
    pub words: Vec<WordDoc>,
    /// Gram states given as general combinations.
    #[serde(default)]
    pub combinations: Vec<Vec<TermDoc>>,
    #[serde(default)]
    pub discs: Vec<DiscDoc>,
    /// Amplitude index tuples: one occupation map per disc.
    #[serde(default)]
    pub states: Vec<Vec<BTreeMap<String, u32>>>,
    #[serde(default)]
    pub truncation: Option<TruncationDoc>,
    #[serde(default)]
    pub tolerances: TolerancesDoc,
    #[serde(default)]
    pub verify: Option<VerifyDoc>,
    /// Tuple budget for `hsnorm`.
    #[serde(default)]
    pub limit: Option<u128>,
}

impl FromStr for ConfigDocument {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn rational_of(n: &Num, what: &str) -> Result<BigRational> {
    match n {
        Num::Int(i) => Ok(BigRational::from_integer(BigInt::from(*i))),
        Num::Text(s) => parse_rational(s).ok_or_else(|| schema(format!("{what}: '{s}' is not a rational p/q"))),
        Num::Float(x) => Err(schema(format!(
            "{what}: {x} is not exact; use an integer or a \"p/q\" string in exact mode"
        ))),
    }
}

fn float_of(n: &Num, what: &str) -> Result<f64> {
    match n {
        Num::Int(i) => Ok(*i as f64),
        Num::Float(x) => Ok(*x),
        Num::Text(s) => Err(schema(format!("{what}: rational string '{s}' is only valid in exact mode"))),
    }
}

/// `re + i im` in the requested backend.
pub fn scalar_of(re: &Num, im: &Num, mode: Backend, what: &str) -> Result<ComplexScalar> {
    match mode {
        Backend::Exact => Ok(ComplexScalar::gaussian(rational_of(re, what)?, rational_of(im, what)?)),
        Backend::Float => Ok(ComplexScalar::float(float_of(re, what)?, float_of(im, what)?)),
    }
}

fn insertion_of(doc: &InsertionDoc, mode: Backend, what: &str) -> Result<Insertion> {
    let z = scalar_of(&doc.re, &doc.im, mode, what)?;
    Insertion::try_new(doc.m, z).map_err(|_| schema(format!("{what}: derivative order must be >= 1")))
}

pub fn word_of(doc: &WordDoc, mode: Backend, what: &str) -> Result<WickWord> {
    let groups = doc
        .iter()
        .enumerate()
        .map(|(g, group)| {
            let ins = group
                .iter()
                .enumerate()
                .map(|(k, i)| insertion_of(i, mode, &format!("{what}, group {g}, insertion {k}")))
                .collect::<Result<Vec<_>>>()?;
            WickGroup::new(ins).map_err(|_| schema(format!("{what}, group {g}: groups must be non-empty")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WickWord::new(groups))
}

pub fn combination_of(terms: &[TermDoc], mode: Backend, what: &str) -> Result<WickCombination> {
    let mut out = LinearCombination::zero();
    for (k, t) in terms.iter().enumerate() {
        let what = format!("{what}, term {k}");
        let c = scalar_of(&t.coeff.re, &t.coeff.im, mode, &what)?;
        out.add_term(c, word_of(&t.word, mode, &what)?);
    }
    Ok(out)
}

pub fn discs_of(docs: &[DiscDoc], mode: Backend) -> Result<DiscConfiguration> {
    let discs = docs
        .iter()
        .enumerate()
        .map(|(j, d)| {
            let what = format!("disc {j}");
            Disc::new(
                scalar_of(&d.a_re, &d.a_im, mode, &what)?,
                scalar_of(&d.q_re, &d.q_im, mode, &what)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    DiscConfiguration::new(discs)
}

pub fn index_of(map: &BTreeMap<String, u32>, what: &str) -> Result<FockIndex> {
    let pairs = map
        .iter()
        .map(|(k, &n)| {
            let m: u32 = k
                .parse()
                .map_err(|_| schema(format!("{what}: mode '{k}' is not a positive integer")))?;
            Ok((m, n))
        })
        .collect::<Result<Vec<_>>>()?;
    FockIndex::from_counts(pairs).map_err(|_| schema(format!("{what}: modes start at 1")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_words() {
        let doc: ConfigDocument =
            r#"{"words": [[[{"m": 1, "re": "1/2", "im": "-1/3"}], [{"m": 2, "re": 0}]]]}"#.parse().unwrap();
        let w = word_of(&doc.words[0], Backend::Exact, "word 0").unwrap();
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn rejects_mode_mismatches() {
        let doc: ConfigDocument = r#"{"words": [[[{"m": 1, "re": 0.5}]]]}"#.parse().unwrap();
        assert!(matches!(word_of(&doc.words[0], Backend::Exact, "w"), Err(Error::Schema(_))));
        assert!(word_of(&doc.words[0], Backend::Float, "w").is_ok());
        let doc: ConfigDocument = r#"{"words": [[[{"m": 1, "re": "1/2"}]]]}"#.parse().unwrap();
        assert!(matches!(word_of(&doc.words[0], Backend::Float, "w"), Err(Error::Schema(_))));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_orders() {
        assert!("{\"wordz\": []}".parse::<ConfigDocument>().is_err());
        let doc: ConfigDocument = r#"{"words": [[[{"m": 0}]]]}"#.parse().unwrap();
        assert!(word_of(&doc.words[0], Backend::Exact, "w").is_err());
        let doc: ConfigDocument = r#"{"states": [[{"x": 1}]]}"#.parse().unwrap();
        assert!(index_of(&doc.states[0][0], "s").is_err());
    }
}
