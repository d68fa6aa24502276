//! TOML catalog files.
//!
//! A full file has a `[space]` table and arrays of tables `[[divisors]]`,
//! `[[curves]]`, `[[loci]]`, `[[containments]]` and `[[expected]]`.
//! Rationals are strings such as `"-1/4"`. Override files use the same
//! layout with every section optional.

use serde::{Deserialize, Serialize};

use super::{
    ContainmentFact, CurveEntry, DivisorEntry, ExpectedChamber, LocusEntry, Regime, SpaceId,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct SpaceSpec {
    regime: Regime,
    k: u32,
    n: u32,
    d: u32,
}

impl From<SpaceId> for SpaceSpec {
    fn from(s: SpaceId) -> Self {
        Self {
            regime: s.regime(),
            k: s.k(),
            n: s.n(),
            d: s.d(),
        }
    }
}

impl SpaceSpec {
    pub(crate) fn to_space(&self) -> Result<SpaceId> {
        let s = SpaceId::new(self.k, self.n, self.d)?;
        if s.regime() != self.regime {
            return Err(Error::InvalidSpace(format!(
                "G({},{}) d={} belongs to {}, not {}",
                self.k,
                self.n,
                self.d,
                s.regime(),
                self.regime
            )));
        }
        Ok(s)
    }
}

/// Unvalidated catalog contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogData {
    pub space: SpaceId,
    pub divisors: Vec<DivisorEntry>,
    pub curves: Vec<CurveEntry>,
    pub loci: Vec<LocusEntry>,
    pub containments: Vec<ContainmentFact>,
    pub expected: Vec<ExpectedChamber>,
}

#[derive(Serialize)]
struct FullOut<'a> {
    space: SpaceSpec,
    divisors: &'a [DivisorEntry],
    curves: &'a [CurveEntry],
    loci: &'a [LocusEntry],
    containments: &'a [ContainmentFact],
    expected: &'a [ExpectedChamber],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct Override {
    pub space: Option<SpaceSpec>,
    #[serde(default)]
    pub divisors: Vec<DivisorEntry>,
    #[serde(default)]
    pub curves: Vec<CurveEntry>,
    #[serde(default)]
    pub loci: Vec<LocusEntry>,
    #[serde(default)]
    pub containments: Vec<ContainmentFact>,
    #[serde(default)]
    pub expected: Vec<ExpectedChamber>,
}

pub(crate) fn parse_override(text: &str) -> Result<Override> {
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub(crate) fn parse_full(text: &str) -> Result<CatalogData> {
    let o = parse_override(text)?;
    let space = o
        .space
        .ok_or_else(|| Error::Parse("catalog file has no [space] table".into()))?
        .to_space()?;
    Ok(CatalogData {
        space,
        divisors: o.divisors,
        curves: o.curves,
        loci: o.loci,
        containments: o.containments,
        expected: o.expected,
    })
}

pub(crate) fn to_toml(d: &CatalogData) -> String {
    let out = FullOut {
        space: d.space.into(),
        divisors: &d.divisors,
        curves: &d.curves,
        loci: &d.loci,
        containments: &d.containments,
        expected: &d.expected,
    };
    toml::to_string(&out).expect("catalog data serializes")
}

#[cfg(test)]
mod tests {
    use super::super::{Catalog, Regime, SpaceId};
    use crate::error::Error;

    #[test]
    fn round_trip_is_bit_exact() {
        for r in Regime::ALL {
            let c = Catalog::builtin(SpaceId::default_for(r));
            let text = c.to_toml();
            let back = Catalog::from_toml(&text).unwrap();
            assert_eq!(back, c, "{r}");
            assert_eq!(back.to_toml(), text, "{r}");
        }
    }

    #[test]
    fn parse_errors_carry_line_info() {
        let err =
            Catalog::from_toml("[space]\nregime = \"deg2\"\nk = 2\nn = 4\nd = \n").unwrap_err();
        let Error::Parse(msg) = err else {
            panic!("expected parse error")
        };
        assert!(msg.contains("line 5"), "{msg}");
    }

    #[test]
    fn missing_space_is_rejected() {
        assert!(matches!(Catalog::from_toml(""), Err(Error::Parse(_))));
    }

    #[test]
    fn rationals_are_strings() {
        let text = Catalog::builtin(SpaceId::default_for(Regime::Deg2)).to_toml();
        assert!(text.contains("\"-1/4\""), "{text}");
    }
}
