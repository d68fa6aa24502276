use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocusKind {
    /// Maps whose image lies in a Schubert variety (`C[..]`, `Q[..]`).
    SchubertMaps,
    /// Conic-plus-line configurations (`Q(..)L`).
    Reducible,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusEntry {
    pub name: String,
    pub kind: LocusKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentFact {
    pub sub: String,
    #[serde(rename = "super")]
    pub sup: String,
}

/// A set of locus names. After [`Poset::antichain`] it holds only maximal
/// elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LocusSet(BTreeSet<String>);

impl LocusSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Raw set, not normalized.
    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self(names.into_iter().map(Into::into).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every member of `self` lies below some member of `other`.
    pub fn is_below(&self, other: &LocusSet, poset: &Poset) -> bool {
        self.iter().all(|a| other.iter().any(|b| poset.leq(a, b)))
    }

    pub fn map_names(&self, f: impl Fn(&str) -> String) -> LocusSet {
        LocusSet(self.iter().map(f).collect())
    }
}

impl fmt::Display for LocusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<&str> = self.iter().collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Reflexive-transitive closure of the stored containment facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    index: BTreeMap<String, usize>,
    names: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(loci: &[LocusEntry], facts: &[ContainmentFact]) -> Result<Self> {
        let mut index = BTreeMap::new();
        let mut names = Vec::new();
        for l in loci {
            if index.insert(l.name.clone(), names.len()).is_some() {
                return Err(Error::Malformed(format!("duplicate locus {:?}", l.name)));
            }
            names.push(l.name.clone());
        }
        let n = names.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for f in facts {
            let lookup = |s: &str| {
                index.get(s).copied().ok_or_else(|| {
                    Error::Malformed(format!("containment names unknown locus {s:?}"))
                })
            };
            le[lookup(&f.sub)?][lookup(&f.sup)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if le[i][j] && le[j][i] {
                    return Err(Error::Malformed(format!(
                        "containment cycle between {:?} and {:?}",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(Self { index, names, le })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// `a` is contained in `b`. Unknown names are only comparable to
    /// themselves.
    pub fn leq(&self, a: &str, b: &str) -> bool {
        if a == b {
            return true;
        }
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.le[i][j],
            _ => false,
        }
    }

    pub fn antichain<'a, I>(&self, names: I) -> LocusSet
    where
        I: IntoIterator<Item = &'a str>,
    {
        let all: BTreeSet<&str> = names.into_iter().collect();
        LocusSet(
            all.iter()
                .filter(|&&a| !all.iter().any(|&b| a != b && self.leq(a, b)))
                .map(|s| s.to_string())
                .collect(),
        )
    }

    pub fn normalize(&self, s: &LocusSet) -> LocusSet {
        self.antichain(s.iter())
    }

    /// The loci lying below some member of both sets, as an antichain.
    pub fn meet(&self, a: &LocusSet, b: &LocusSet) -> LocusSet {
        self.antichain(
            self.names
                .iter()
                .map(String::as_str)
                .filter(|l| a.iter().any(|x| self.leq(l, x)) && b.iter().any(|x| self.leq(l, x))),
        )
    }

    /// Antichain of all maximal loci.
    pub fn top(&self) -> LocusSet {
        self.antichain(self.names.iter().map(String::as_str))
    }
}
