//! Per-space data: divisor classes with base-locus facts, test curves, named
//! loci with their containments, and the expected chamber tables.

mod builtin;
mod file;
mod locus;
mod partition;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lin::{self, int, rat, NSVector, Rational};

pub use file::CatalogData;
pub use locus::{ContainmentFact, LocusEntry, LocusKind, LocusSet, Poset};
pub use partition::{conjugate, conjugate_locus_name, dual_partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Deg2,
    Deg3General,
    Deg3Lines,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::Deg2, Regime::Deg3General, Regime::Deg3Lines];

    pub fn name(self) -> &'static str {
        match self {
            Regime::Deg2 => "deg2",
            Regime::Deg3General => "deg3_general",
            Regime::Deg3Lines => "deg3_lines",
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            Regime::Deg2 => 2,
            _ => 3,
        }
    }

    pub fn has_duality(self) -> bool {
        self != Regime::Deg3Lines
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Regime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Regime::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidSpace(format!("unknown regime {s:?}")))
    }
}

/// Maps of degree `d` to `G(k, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceId {
    k: u32,
    n: u32,
    d: u32,
    regime: Regime,
}

impl SpaceId {
    pub fn new(k: u32, n: u32, d: u32) -> Result<Self> {
        let regime = match d {
            2 if k >= 2 && k + 2 <= n => Regime::Deg2,
            3 if k >= 3 && k + 3 <= n => Regime::Deg3General,
            3 if k == 2 && n >= 5 => Regime::Deg3Lines,
            _ => {
                return Err(Error::InvalidSpace(format!(
                    "G({k},{n}) in degree {d} is outside the supported ranges \
                     (d=2: 2<=k, k+2<=n; d=3: 3<=k, k+3<=n, or k=2, n>=5)"
                )))
            }
        };
        Ok(Self { k, n, d, regime })
    }

    /// Smallest representative of the regime.
    pub fn default_for(regime: Regime) -> Self {
        let (k, n) = match regime {
            Regime::Deg2 => (2, 4),
            Regime::Deg3General => (3, 6),
            Regime::Deg3Lines => (2, 5),
        };
        Self::new(k, n, regime.degree()).expect("default space is valid")
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} G({},{}) d={}", self.regime, self.k, self.n, self.d)
    }
}

/// Accepts a regime name (`deg2`, `deg3_general`, `deg3_lines`) or `k,n,d`.
impl FromStr for SpaceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(r) = s.parse::<Regime>() {
            return Ok(Self::default_for(r));
        }
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if let [k, n, d] = parts[..] {
            let num = |x: &str| {
                x.parse::<u32>()
                    .map_err(|_| Error::InvalidSpace(format!("bad space {s:?}")))
            };
            return SpaceId::new(num(k)?, num(n)?, num(d)?);
        }
        Err(Error::InvalidSpace(format!(
            "bad space {s:?}: expected deg2, deg3_general, deg3_lines or k,n,d"
        )))
    }
}

impl Serialize for SpaceId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        file::SpaceSpec::from(*self).serialize(s)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "loci", rename_all = "snake_case")]
pub enum DivisorFact {
    BasePointFree,
    ExactSbl(LocusSet),
    SblUpperBound(LocusSet),
    #[default]
    None,
}

impl DivisorFact {
    /// Loci bounding the stable base locus from above, when known.
    pub fn upper(&self) -> Option<LocusSet> {
        match self {
            DivisorFact::BasePointFree => Some(LocusSet::empty()),
            DivisorFact::ExactSbl(s) | DivisorFact::SblUpperBound(s) => Some(s.clone()),
            DivisorFact::None => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub name: String,
    pub class: NSVector,
    #[serde(default)]
    pub fact: DivisorFact,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    #[default]
    Exact,
    SignOnly,
}

/// A recorded pairing of a curve with a named divisor: an exact value, or
/// only its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stated {
    Value(Rational),
    Negative,
    Positive,
}

impl Stated {
    pub fn holds_for(&self, got: &Rational) -> bool {
        match self {
            Stated::Value(v) => v == got,
            Stated::Negative => got.is_negative(),
            Stated::Positive => got.is_positive(),
        }
    }
}

impl fmt::Display for Stated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stated::Value(v) => write!(f, "{v}"),
            Stated::Negative => f.write_str("<0"),
            Stated::Positive => f.write_str(">0"),
        }
    }
}

impl FromStr for Stated {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "<0" => Ok(Stated::Negative),
            ">0" => Ok(Stated::Positive),
            v => lin::parse_rational(v).map(Stated::Value),
        }
    }
}

impl Serialize for Stated {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Stated {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub name: String,
    pub row: NSVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<String>,
    #[serde(default)]
    pub exactness: Exactness,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub stated: BTreeMap<String, Stated>,
}

/// A segment between two named rays, each end open or closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WallSpec {
    pub from: String,
    pub to: String,
    pub from_closed: bool,
    pub to_closed: bool,
}

impl fmt::Display for WallSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.from_closed { '[' } else { '(' },
            self.from,
            self.to,
            if self.to_closed { ']' } else { ')' }
        )
    }
}

impl FromStr for WallSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("bad wall {s:?}: expected e.g. \"(H11,P]\""));
        let t = s.trim();
        let from_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let to_closed = match t.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        if t.len() < 2 {
            return Err(bad());
        }
        let (from, to) = t[1..t.len() - 1].split_once(',').ok_or_else(bad)?;
        let (from, to) = (from.trim(), to.trim());
        if from.is_empty() || to.is_empty() || to.contains(',') {
            return Err(bad());
        }
        Ok(Self {
            from: from.into(),
            to: to.into(),
            from_closed,
            to_closed,
        })
    }
}

impl Serialize for WallSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WallSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One enumerated item of a decomposition theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedChamber {
    pub id: u32,
    pub boundary: Vec<String>,
    pub locus: LocusSet,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub walls: Vec<WallSpec>,
}

/// A validated catalog. Locus sets inside facts and expected items are
/// stored as antichains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    data: CatalogData,
    poset: Poset,
}

impl Catalog {
    /// Built-in catalog for `space`, optionally merged with an override file.
    pub fn load(space: SpaceId, override_file: Option<&Path>) -> Result<Catalog> {
        let mut data = builtin::data(space);
        if let Some(path) = override_file {
            let text = std::fs::read_to_string(path)?;
            let patch = file::parse_override(&text)?;
            data.merge(patch)?;
        }
        Catalog::from_data(data)
    }

    pub fn builtin(space: SpaceId) -> Catalog {
        Catalog::from_data(builtin::data(space)).expect("built-in catalog validates")
    }

    /// Validates raw data and normalizes its locus sets.
    pub fn from_data(mut data: CatalogData) -> Result<Catalog> {
        let poset = Poset::new(&data.loci, &data.containments)?;
        let mut problems = Vec::new();
        data.check_structure(&poset, &mut problems);
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        for d in data.divisors.iter_mut() {
            if let DivisorFact::ExactSbl(s) | DivisorFact::SblUpperBound(s) = &mut d.fact {
                *s = poset.normalize(s);
            }
        }
        for e in data.expected.iter_mut() {
            e.locus = poset.normalize(&e.locus);
        }
        let cat = Catalog { data, poset };
        let mismatches = cat.pairing_mismatches();
        if !mismatches.is_empty() {
            return Err(Error::Validation(mismatches));
        }
        let ineffective = cat.ineffective_divisors()?;
        if !ineffective.is_empty() {
            return Err(Error::Validation(
                ineffective
                    .into_iter()
                    .map(|n| format!("divisor {n} is not in the effective cone"))
                    .collect(),
            ));
        }
        Ok(cat)
    }

    pub fn from_toml(text: &str) -> Result<Catalog> {
        Catalog::from_data(file::parse_full(text)?)
    }

    pub fn to_toml(&self) -> String {
        file::to_toml(&self.data)
    }

    pub fn data(&self) -> &CatalogData {
        &self.data
    }

    pub fn space(&self) -> SpaceId {
        self.data.space
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn divisors(&self) -> &[DivisorEntry] {
        &self.data.divisors
    }

    pub fn curves(&self) -> &[CurveEntry] {
        &self.data.curves
    }

    pub fn loci(&self) -> &[LocusEntry] {
        &self.data.loci
    }

    pub fn containments(&self) -> &[ContainmentFact] {
        &self.data.containments
    }

    pub fn expected(&self) -> &[ExpectedChamber] {
        &self.data.expected
    }

    pub fn divisor(&self, name: &str) -> Option<&DivisorEntry> {
        self.data.divisors.iter().find(|d| d.name == name)
    }

    pub fn curve(&self, name: &str) -> Option<&CurveEntry> {
        self.data.curves.iter().find(|c| c.name == name)
    }

    pub fn class_of(&self, name: &str) -> Option<&NSVector> {
        self.divisor(name).map(|d| &d.class)
    }

    /// Generators `D_deg, D_unb, Delta` of the effective cone.
    pub fn effective_generators(&self) -> Result<[NSVector; 3]> {
        let get = |n: &str| {
            self.class_of(n)
                .cloned()
                .ok_or_else(|| Error::Validation(vec![format!("catalog lacks divisor {n}")]))
        };
        Ok([get("Ddeg")?, get("Dunb")?, get("Delta")?])
    }

    pub fn effective_cone(&self) -> Result<lin::Cone> {
        lin::Cone::new(self.effective_generators()?)
    }

    /// Generators `H11, H2, T` of the cone spanned by the base-point-free
    /// classes.
    pub fn nef_cone(&self) -> Result<lin::Cone> {
        let names = ["H11", "H2", "T"];
        let mut gens = Vec::new();
        for n in names {
            gens.push(
                self.class_of(n)
                    .cloned()
                    .ok_or_else(|| Error::Validation(vec![format!("catalog lacks divisor {n}")]))?,
            );
        }
        lin::Cone::new(gens)
    }

    /// Every recorded pairing as `(curve, divisor, stated, computed)`.
    pub fn pairing_table(&self) -> Vec<(String, String, Stated, Rational)> {
        let mut out = Vec::new();
        for c in &self.data.curves {
            for (d, s) in &c.stated {
                if let Some(class) = self.class_of(d) {
                    out.push((
                        c.name.clone(),
                        d.clone(),
                        s.clone(),
                        lin::pair(&c.row, class),
                    ));
                }
            }
        }
        out
    }

    fn pairing_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.data.curves {
            for (d, s) in &c.stated {
                match self.class_of(d) {
                    None => out.push(format!(
                        "curve {} states a pairing with unknown divisor {d}",
                        c.name
                    )),
                    Some(class) => {
                        let got = lin::pair(&c.row, class);
                        if !s.holds_for(&got) {
                            out.push(format!("({}, {}, expected {}, got {})", c.name, d, s, got));
                        }
                    }
                }
            }
        }
        out
    }

    fn ineffective_divisors(&self) -> Result<Vec<String>> {
        let gens = self.effective_generators().map_err(|_| {
            Error::Validation(vec!["catalog must name Ddeg, Dunb and Delta".into()])
        })?;
        let mut out = Vec::new();
        for d in &self.data.divisors {
            if lin::nonneg_combination(&d.class, &gens)?.is_none() {
                out.push(d.name.clone());
            }
        }
        Ok(out)
    }

    /// Upper-bound loci for divisors that carry a usable fact.
    pub fn facts(&self) -> impl Iterator<Item = (&DivisorEntry, LocusSet)> {
        self.data
            .divisors
            .iter()
            .filter_map(|d| d.fact.upper().map(|s| (d, s)))
    }

    /// Antichain under this catalog's containment order.
    pub fn antichain<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> LocusSet {
        self.poset.antichain(names)
    }

    /// The `H11 <-> H2` involution applied to all data.
    pub fn dual_involution(&self) -> Result<Catalog> {
        let space = self.space();
        if !space.regime().has_duality() {
            return Err(Error::DualityUnavailable(space.regime().name().into()));
        }
        let loc = |s: &LocusSet| s.map_names(conjugate_locus_name);
        let fact = |f: &DivisorFact| match f {
            DivisorFact::ExactSbl(s) => DivisorFact::ExactSbl(loc(s)),
            DivisorFact::SblUpperBound(s) => DivisorFact::SblUpperBound(loc(s)),
            other => other.clone(),
        };
        let d = &self.data;
        let data = CatalogData {
            space,
            divisors: d
                .divisors
                .iter()
                .map(|e| DivisorEntry {
                    name: dual_divisor_name(&e.name),
                    class: e.class.swap(),
                    fact: fact(&e.fact),
                    note: e.note.clone(),
                })
                .collect(),
            curves: d
                .curves
                .iter()
                .map(|c| CurveEntry {
                    name: dual_curve_name(&c.name),
                    row: c.row.swap(),
                    covers: c.covers.as_deref().map(conjugate_locus_name),
                    exactness: c.exactness,
                    stated: c
                        .stated
                        .iter()
                        .map(|(k, v)| (dual_divisor_name(k), v.clone()))
                        .collect(),
                })
                .collect(),
            loci: d
                .loci
                .iter()
                .map(|l| LocusEntry {
                    name: conjugate_locus_name(&l.name),
                    kind: l.kind,
                })
                .collect(),
            containments: d
                .containments
                .iter()
                .map(|c| ContainmentFact {
                    sub: conjugate_locus_name(&c.sub),
                    sup: conjugate_locus_name(&c.sup),
                })
                .collect(),
            expected: d
                .expected
                .iter()
                .map(|e| ExpectedChamber {
                    id: e.id,
                    boundary: e.boundary.iter().map(|b| dual_divisor_name(b)).collect(),
                    locus: loc(&e.locus),
                    walls: e
                        .walls
                        .iter()
                        .map(|w| WallSpec {
                            from: dual_divisor_name(&w.from),
                            to: dual_divisor_name(&w.to),
                            from_closed: w.from_closed,
                            to_closed: w.to_closed,
                        })
                        .collect(),
                })
                .collect(),
        };
        Catalog::from_data(data)
    }
}

const SELF_DUAL_DIVISORS: [&str; 5] = ["T", "P", "F", "R", "Delta"];
const DIVISOR_SWAPS: [(&str, &str); 2] = [("H11", "H2"), ("Ddeg", "Dunb")];
const SELF_DUAL_CURVES: [&str; 5] = ["C3", "C8", "B6", "B7", "B15"];
const CURVE_SWAPS: [(&str, &str); 9] = [
    ("C1", "C2"),
    ("C4", "C5"),
    ("C6", "C7"),
    ("B1", "B2"),
    ("B3", "B12"),
    ("B4", "B5"),
    ("B9", "B10"),
    ("B16", "B17"),
    ("B18", "B19"),
];

fn toggle_prime(name: &str) -> String {
    match name.strip_suffix('\'') {
        Some(base) => base.to_string(),
        None => format!("{name}'"),
    }
}

fn swap_name(name: &str, fixed: &[&str], pairs: &[(&str, &str)]) -> String {
    if fixed.contains(&name) {
        return name.to_string();
    }
    for (a, b) in pairs {
        if name == *a {
            return b.to_string();
        }
        if name == *b {
            return a.to_string();
        }
    }
    toggle_prime(name)
}

/// Name of the divisor class exchanged with `name` by the involution.
pub fn dual_divisor_name(name: &str) -> String {
    swap_name(name, &SELF_DUAL_DIVISORS, &DIVISOR_SWAPS)
}

/// Name of the curve class exchanged with `name`; unlisted curves toggle a
/// trailing prime.
pub fn dual_curve_name(name: &str) -> String {
    swap_name(name, &SELF_DUAL_CURVES, &CURVE_SWAPS)
}

/// Canonical class of the space of degree-`d` maps to `G(k,n)`.
pub fn canonical_class(k: u32, n: u32, d: u32) -> Result<NSVector> {
    SpaceId::new(k, n, d)?;
    let (k, n, d) = (k as i64, n as i64, d as i64);
    let n_over_2d = rat(n, 2 * d);
    let h11 = rat(n, 2) - int(k) - int(1) - &n_over_2d;
    let h2 = int(k) - rat(n, 2) - int(1) - &n_over_2d;
    let delta = (1..=d / 2)
        .map(|i| rat(n * i * (d - i), 2 * d) - int(2))
        .fold(int(0), |acc, x| acc + x);
    Ok(NSVector::new(h11, h2, delta))
}

impl CatalogData {
    fn check_structure(&self, poset: &Poset, out: &mut Vec<String>) {
        let mut seen = BTreeSet::new();
        for d in &self.divisors {
            if !seen.insert(d.name.as_str()) {
                out.push(format!("duplicate divisor {}", d.name));
            }
            if d.class.is_zero() {
                out.push(format!("divisor {} has zero class", d.name));
            } else if !d.class.phi().is_positive() {
                out.push(format!("divisor {} is not cut by the slice plane", d.name));
            }
            if let DivisorFact::ExactSbl(s) | DivisorFact::SblUpperBound(s) = &d.fact {
                for l in s.iter().filter(|l| !poset.contains(l)) {
                    out.push(format!("divisor {} names unknown locus {l}", d.name));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for c in &self.curves {
            if !seen.insert(c.name.as_str()) {
                out.push(format!("duplicate curve {}", c.name));
            }
            if c.row.is_zero() {
                out.push(format!("curve {} has zero row", c.name));
            }
            if c.exactness == Exactness::SignOnly {
                let unit = [int(-1), int(0), int(1)];
                if c.row.coords().iter().any(|x| !unit.contains(x)) {
                    out.push(format!(
                        "sign-only curve {} must have entries in {{-1, 0, 1}}",
                        c.name
                    ));
                }
            }
            if let Some(l) = &c.covers {
                if !poset.contains(l) {
                    out.push(format!("curve {} covers unknown locus {l}", c.name));
                }
            }
        }
        let mut ids = BTreeSet::new();
        let known = |n: &str| self.divisors.iter().any(|d| d.name == n);
        for e in &self.expected {
            if !ids.insert(e.id) {
                out.push(format!("duplicate expected item {}", e.id));
            }
            for l in e.locus.iter().filter(|l| !poset.contains(l)) {
                out.push(format!("expected item {} names unknown locus {l}", e.id));
            }
            let rays = e
                .boundary
                .iter()
                .chain(e.walls.iter().flat_map(|w| [&w.from, &w.to]));
            for r in rays {
                if !known(r) {
                    out.push(format!("expected item {} names unknown divisor {r}", e.id));
                }
            }
        }
    }

    /// Replaces same-named entries and appends new ones.
    fn merge(&mut self, patch: file::Override) -> Result<()> {
        if let Some(s) = patch.space {
            let space = s.to_space()?;
            if space.regime() != self.space.regime() {
                return Err(Error::Malformed(format!(
                    "override is for {} but {} was requested",
                    space.regime(),
                    self.space.regime()
                )));
            }
            self.space = space;
        }
        fn upsert<T>(items: &mut Vec<T>, new: Vec<T>, key: impl Fn(&T) -> String) {
            for x in new {
                match items.iter().position(|y| key(y) == key(&x)) {
                    Some(i) => items[i] = x,
                    None => items.push(x),
                }
            }
        }
        upsert(&mut self.divisors, patch.divisors, |d| d.name.clone());
        upsert(&mut self.curves, patch.curves, |c| c.name.clone());
        upsert(&mut self.loci, patch.loci, |l| l.name.clone());
        upsert(&mut self.expected, patch.expected, |e| e.id.to_string());
        for c in patch.containments {
            if !self.containments.contains(&c) {
                self.containments.push(c);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lin::{membership, nonneg_combination, Membership};

    fn cat(r: Regime) -> Catalog {
        Catalog::builtin(SpaceId::default_for(r))
    }

    #[test]
    fn space_ranges() {
        assert_eq!(SpaceId::new(2, 4, 2).unwrap().regime(), Regime::Deg2);
        assert_eq!(SpaceId::new(3, 7, 3).unwrap().regime(), Regime::Deg3General);
        assert_eq!(SpaceId::new(2, 5, 3).unwrap().regime(), Regime::Deg3Lines);
        assert!(SpaceId::new(2, 3, 2).is_err());
        assert!(SpaceId::new(3, 5, 3).is_err());
        assert!(SpaceId::new(2, 4, 3).is_err());
        assert!(SpaceId::new(2, 6, 4).is_err());
        assert_eq!(
            "3,6,3".parse::<SpaceId>().unwrap(),
            SpaceId::default_for(Regime::Deg3General)
        );
        assert!("deg4".parse::<SpaceId>().is_err());
    }

    #[test]
    fn builtin_classes() {
        let c = cat(Regime::Deg2);
        assert_eq!(c.class_of("Ddeg").unwrap(), &NSVector::over(-1, 3, -1, 4));
        assert_eq!(c.class_of("Dunb").unwrap(), &NSVector::over(3, -1, -1, 4));
        assert_eq!(c.class_of("T").unwrap(), &NSVector::over(1, 1, 1, 2));
        let l = cat(Regime::Deg3Lines);
        assert_eq!(l.class_of("Dunb").unwrap(), &NSVector::over(5, -1, -1, 3));
        let g = cat(Regime::Deg3General);
        assert_eq!(
            g.divisor("Dunb").unwrap().fact,
            DivisorFact::ExactSbl(LocusSet::from_names(["C[(3,2)^*]", "Q((2)^*)L"]))
        );
    }

    #[test]
    fn upper_bound_facts_are_meets() {
        for (r, u, a, b) in [
            (Regime::Deg3General, "U", "P", "S"),
            (Regime::Deg3General, "U'", "P", "S'"),
            (Regime::Deg3Lines, "U", "P", "S"),
            (Regime::Deg3Lines, "U'", "P", "Dunb"),
        ] {
            let c = cat(r);
            let fa = c.divisor(a).unwrap().fact.upper().unwrap();
            let fb = c.divisor(b).unwrap().fact.upper().unwrap();
            let fu = c.divisor(u).unwrap().fact.upper().unwrap();
            assert_eq!(c.poset().meet(&fa, &fb), fu, "{r} {u}");
        }
    }

    #[test]
    fn every_divisor_is_effective() {
        for r in Regime::ALL {
            let c = cat(r);
            let gens = c.effective_generators().unwrap();
            for d in c.divisors() {
                let coef = nonneg_combination(&d.class, &gens).unwrap().unwrap();
                let sum = gens
                    .iter()
                    .zip(&coef)
                    .fold(NSVector::zero(), |acc, (g, a)| &acc + &g.scale(a));
                assert_eq!(sum, d.class, "{r} {}", d.name);
            }
        }
    }

    #[test]
    fn stated_pairings_hold() {
        for r in Regime::ALL {
            let c = cat(r);
            for (curve, d, s, got) in c.pairing_table() {
                assert!(s.holds_for(&got), "{r}: {curve}.{d} = {got}, stated {s}");
            }
        }
    }

    #[test]
    fn validation_reports_mismatches() {
        let mut data = cat(Regime::Deg2).data().clone();
        data.curves[0]
            .stated
            .insert("P".into(), Stated::Value(int(5)));
        match Catalog::from_data(data) {
            Err(Error::Validation(v)) => {
                assert_eq!(v.len(), 1);
                assert!(
                    v[0].contains("C1") && v[0].contains("expected 5") && v[0].contains("got 0")
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation_rejects_bad_references() {
        let mut data = cat(Regime::Deg2).data().clone();
        data.curves[0].covers = Some("nowhere".into());
        data.divisors[0].class = NSVector::zero();
        let Err(Error::Validation(v)) = Catalog::from_data(data) else {
            panic!("expected validation failure")
        };
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn duality() {
        let g = cat(Regime::Deg3General);
        let dual = g.dual_involution().unwrap();
        assert_eq!(
            dual.class_of("S'").unwrap(),
            &g.class_of("S").unwrap().swap()
        );
        assert_eq!(dual.class_of("S'").unwrap(), &NSVector::over(5, -1, -1, 3));
        assert_eq!(dual.dual_involution().unwrap(), g);
        let d2 = cat(Regime::Deg2);
        assert_eq!(d2.dual_involution().unwrap().dual_involution().unwrap(), d2);
        assert_eq!(
            d2.dual_involution().unwrap().class_of("Dunb").unwrap(),
            &NSVector::over(3, -1, -1, 4)
        );
        assert!(matches!(
            cat(Regime::Deg3Lines).dual_involution(),
            Err(Error::DualityUnavailable(_))
        ));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_class(2, 4, 2).unwrap(),
            NSVector::from_ints(-2, -2, -1)
        );
        assert_eq!(
            canonical_class(3, 6, 3).unwrap(),
            NSVector::from_ints(-2, -2, 0)
        );
        assert_eq!(
            canonical_class(2, 5, 3).unwrap(),
            NSVector::new(rat(-4, 3), rat(-7, 3), rat(-1, 3))
        );
        assert!(canonical_class(1, 4, 2).is_err());
        let c = cat(Regime::Deg2);
        let minus_k = -&canonical_class(2, 4, 2).unwrap();
        assert_eq!(
            membership(&minus_k, &c.nef_cone().unwrap()).unwrap(),
            Membership::Interior
        );
    }

    #[test]
    fn wall_spec_text() {
        let w: WallSpec = "(H11,P]".parse().unwrap();
        assert!(!w.from_closed && w.to_closed);
        assert_eq!(w.to_string(), "(H11,P]");
        assert!("H11,P".parse::<WallSpec>().is_err());
        assert!("(H11]".parse::<WallSpec>().is_err());
    }
}
