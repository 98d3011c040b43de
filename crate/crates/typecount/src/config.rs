//! JSON configuration for the global bound:
//!
//! ```json
//! {
//!   "n": 2, "mu_E": 2, "masses": [2, 4], "C_2": "1/2",
//!   "P_v": [{"place": 0, "coeffs": [{"c": 1, "e": [0, 0]}]}],
//!   "places": [{"q": 3}], "box": 10,
//!   "types": [{"finite": [{"q": 3, "dim": 2}], "arch": [[1, 0]]}]
//! }
//! ```
//!
//! Rational values may be integers, `"a/b"` strings or JSON floats (taken
//! exactly as binary fractions). `types` is optional.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;
use serde::Deserialize;
use typecount_core::archweyl::Weight;
use typecount_core::globalbound::{ErrorTerm, GlobalConfig, TypeDescriptor};
use typecount_core::mpoly::{MPoly, Rational};

use crate::{CliError, CliResult};

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RationalValue {
    Int(i64),
    Float(f64),
    Text(String),
}

impl RationalValue {
    pub fn to_big(&self) -> CliResult<BigRational> {
        match self {
            RationalValue::Int(i) => Ok(BigRational::from_integer(BigInt::from(*i))),
            RationalValue::Float(f) => BigRational::from_float(*f)
                .ok_or_else(|| CliError::Parse(format!("non-finite value {f}"))),
            RationalValue::Text(s) => {
                let s = s.trim();
                let parse = |x: &str| {
                    x.trim()
                        .parse::<BigInt>()
                        .map_err(|_| CliError::Parse(format!("bad rational '{s}'")))
                };
                match s.split_once('/') {
                    Some((a, b)) => {
                        let den = parse(b)?;
                        if den == BigInt::from(0) {
                            return Err(CliError::Parse(format!("zero denominator in '{s}'")));
                        }
                        Ok(BigRational::new(parse(a)?, den))
                    }
                    None => Ok(BigRational::from_integer(parse(s)?)),
                }
            }
        }
    }

    fn to_small(&self) -> CliResult<Rational> {
        let b = self.to_big()?;
        match (b.numer().to_i128(), b.denom().to_i128()) {
            (Some(n), Some(d)) => Ok(Ratio::new(n, d)),
            _ => Err(CliError::Parse("polynomial coefficient out of range".into())),
        }
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct Coeff {
    pub c: RationalValue,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct PlacePoly {
    pub place: usize,
    pub coeffs: Vec<Coeff>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct Place {
    pub q: u64,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct FinitePart {
    pub q: u64,
    pub dim: u128,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct TypeSpec {
    #[serde(default)]
    pub finite: Vec<FinitePart>,
    #[serde(default)]
    pub arch: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GlobalFile {
    pub n: u32,
    #[serde(rename = "mu_E")]
    pub mu_e: u64,
    pub masses: Vec<u64>,
    #[serde(rename = "C_2")]
    pub c2: RationalValue,
    #[serde(rename = "P_v", default)]
    pub p_v: Vec<PlacePoly>,
    #[serde(default)]
    pub places: Vec<Place>,
    #[serde(rename = "box", default)]
    pub box_size: Option<u64>,
    #[serde(default)]
    pub types: Vec<TypeSpec>,
}

/// Everything the `global` subcommand needs, in core types.
#[derive(Clone, Debug)]
pub struct GlobalInput {
    pub cfg: GlobalConfig,
    pub err: ErrorTerm,
    pub places: Vec<u64>,
    pub box_size: Option<u64>,
    pub types: Vec<TypeDescriptor>,
}

impl GlobalFile {
    pub fn from_json(text: &str) -> CliResult<GlobalFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn into_input(self) -> CliResult<GlobalInput> {
        let n = self.n as usize;
        let mut polys = self.p_v;
        polys.sort_by_key(|p| p.place);
        for (i, p) in polys.iter().enumerate() {
            if p.place != i {
                return Err(CliError::Parse(format!(
                    "P_v places must be 0..{} without gaps",
                    polys.len()
                )));
            }
        }
        let p_v = polys
            .iter()
            .map(|p| {
                let terms = p
                    .coeffs
                    .iter()
                    .map(|c| Ok((c.c.to_small()?, c.e.clone())))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(MPoly::from_terms(n, &terms)?)
            })
            .collect::<CliResult<Vec<_>>>()?;
        let types = self
            .types
            .into_iter()
            .map(|t| TypeDescriptor {
                finite: t.finite.into_iter().map(|f| (f.q, f.dim)).collect(),
                arch: t.arch.into_iter().map(Weight).collect(),
            })
            .collect();
        Ok(GlobalInput {
            cfg: GlobalConfig {
                n: self.n,
                mu_e: self.mu_e,
                masses: self.masses,
            },
            err: ErrorTerm {
                c2: self.c2.to_big()?,
                p_v,
            },
            places: self.places.into_iter().map(|p| p.q).collect(),
            box_size: self.box_size,
            types,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example() {
        let text = r#"{"n": 2, "mu_E": 2, "masses": [2, 4], "C_2": "1/2",
            "P_v": [{"place": 0, "coeffs": [{"c": 1, "e": [0, 0]}]}],
            "places": [{"q": 3}], "box": 10,
            "types": [{"finite": [{"q": 3, "dim": 2}], "arch": [[1, 0]]}]}"#;
        let input = GlobalFile::from_json(text).unwrap().into_input().unwrap();
        assert_eq!(input.cfg.masses, vec![2, 4]);
        assert_eq!(input.err.c2, BigRational::new(1.into(), 2.into()));
        assert_eq!(input.places, vec![3]);
        assert_eq!(input.types.len(), 1);
        assert_eq!(input.err.p_v[0].degree(), Some(0));
    }

    #[test]
    fn rational_forms() {
        assert_eq!(RationalValue::Int(3).to_big().unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            RationalValue::Float(0.25).to_big().unwrap(),
            BigRational::new(1.into(), 4.into())
        );
        assert!(RationalValue::Text("1/0".into()).to_big().is_err());
        assert!(GlobalFile::from_json(r#"{"n": 2}"#).is_err());
    }
}
