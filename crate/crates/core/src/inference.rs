//! Stable base loci of arrangement cells.
//!
//! The lower bound collects the loci covered by curves that pair negatively
//! with the divisor. The upper bound comes from writing the cell as a
//! nonnegative combination of divisors with known base loci: for every set
//! `G` of at most three such divisors whose cone contains the cell, the
//! stable base locus lies in the union of their loci, and a locus survives
//! only if every such `G` admits it. A cell is resolved when both bounds
//! agree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arrangement::{
    build_arrangement, face_sign_profile, merge_chambers, Arrangement, Chamber, Face, Location,
    Resolution,
};
use crate::catalog::{Catalog, ExpectedChamber, LocusSet, SpaceId, WallSpec};
use crate::error::{Error, Result};
use crate::lin::{self, orient, slice, NSVector, Rational, SlicePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Resolved,
    Gap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FaceLabel {
    pub lower: LocusSet,
    pub upper: LocusSet,
    pub status: Status,
}

impl FaceLabel {
    pub fn new(lower: LocusSet, upper: LocusSet) -> Self {
        let status = if lower == upper {
            Status::Resolved
        } else {
            Status::Gap
        };
        Self {
            lower,
            upper,
            status,
        }
    }

    pub fn is_resolved(&self) -> bool {
        self.status == Status::Resolved
    }
}

/// Loci covered by curves that pair negatively with `d`.
pub fn lower_bound(d: &NSVector, catalog: &Catalog) -> LocusSet {
    catalog.antichain(
        catalog
            .curves()
            .iter()
            .filter(|c| lin::pair(&c.row, d).is_negative())
            .filter_map(|c| c.covers.as_deref()),
    )
}

/// `p` as integers `(X, Y, W)` with `W > 0` and `p = (X/W, Y/W)`.
fn homogeneous(p: &SlicePoint) -> [BigInt; 3] {
    let (xn, xd) = (p.x.numer(), p.x.denom());
    let (yn, yd) = (p.y.numer(), p.y.denom());
    [xn * yd, yn * xd, xd * yd]
}

/// Closed convex hull of the slice points of a generator set.
#[derive(Clone, Debug)]
enum Hull {
    Point(SlicePoint),
    Segment(SlicePoint, SlicePoint),
    /// Inward half-planes `a X + b Y + c W >= 0` with integer coefficients.
    Triangle([[BigInt; 3]; 3]),
}

impl Hull {
    fn new(pts: &[&SlicePoint]) -> Hull {
        match pts {
            [a] => Hull::Point((*a).clone()),
            [a, b] => Hull::Segment((*a).clone(), (*b).clone()),
            [a, b, c] => {
                let o = orient(a, b, c);
                if o.is_zero() {
                    let mut v = [*a, *b, *c];
                    v.sort();
                    return Hull::Segment(v[0].clone(), v[2].clone());
                }
                let (a, b, c) = if o.is_positive() {
                    (a, b, c)
                } else {
                    (a, c, b)
                };
                let half = |p: &SlicePoint, q: &SlicePoint| {
                    let dx = &q.x - &p.x;
                    let dy = &q.y - &p.y;
                    let k = &dy * &p.x - &dx * &p.y;
                    let coef = [-dy, dx, k];
                    let den = coef.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
                    coef.map(|r| (r * Rational::from_integer(den.clone())).to_integer())
                };
                Hull::Triangle([half(a, b), half(b, c), half(c, a)])
            }
            _ => unreachable!("generator sets have one to three members"),
        }
    }

    fn contains(&self, p: &SlicePoint, h: &[BigInt; 3]) -> bool {
        match self {
            Hull::Point(a) => a == p,
            Hull::Segment(a, b) => lin::on_closed_segment(p, a, b),
            Hull::Triangle(hs) => hs
                .iter()
                .all(|l| !(&l[0] * &h[0] + &l[1] * &h[1] + &l[2] * &h[2]).is_negative()),
        }
    }
}

struct Certificate {
    members: Vec<String>,
    hull: Hull,
    /// Indexed like `Poset::names`: the locus lies below the union of the
    /// members' loci.
    admits: Vec<bool>,
}

/// Precomputed generator sets for upper bounds.
pub struct Resolver<'a> {
    catalog: &'a Catalog,
    certificates: Vec<Certificate>,
}

impl<'a> Resolver<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        let facts: Vec<(String, SlicePoint, LocusSet)> = catalog
            .facts()
            .map(|(d, s)| {
                let p = slice(&d.class).expect("validated classes are sliced");
                (d.name.clone(), p, s)
            })
            .collect();
        let names = catalog.poset().names();
        let n = facts.len();
        let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        for i in 0..n {
            for j in i + 1..n {
                subsets.push(vec![i, j]);
                for k in j + 1..n {
                    subsets.push(vec![i, j, k]);
                }
            }
        }
        let certificates = subsets
            .into_iter()
            .map(|idx| {
                let pts: Vec<&SlicePoint> = idx.iter().map(|&i| &facts[i].1).collect();
                let union: Vec<&str> = idx.iter().flat_map(|&i| facts[i].2.iter()).collect();
                let admits = names
                    .iter()
                    .map(|l| union.iter().any(|u| catalog.poset().leq(l, u)))
                    .collect();
                Certificate {
                    members: idx.iter().map(|&i| facts[i].0.clone()).collect(),
                    hull: Hull::new(&pts),
                    admits,
                }
            })
            .collect();
        Self {
            catalog,
            certificates,
        }
    }

    /// Which generator sets contain `p` in their closed cone.
    pub fn valid_at(&self, p: &SlicePoint) -> Vec<bool> {
        let h = homogeneous(p);
        self.certificates
            .iter()
            .map(|c| c.hull.contains(p, &h))
            .collect()
    }

    fn valid_for(&self, vertices: &[SlicePoint]) -> Vec<bool> {
        let mut v = vec![true; self.certificates.len()];
        for p in vertices {
            let h = homogeneous(p);
            for (acc, c) in v.iter_mut().zip(&self.certificates) {
                *acc = *acc && c.hull.contains(p, &h);
            }
        }
        v
    }

    /// Upper bound from the valid generator sets; `None` when no set
    /// applies.
    pub fn upper(&self, valid: &[bool]) -> Option<LocusSet> {
        let names = self.catalog.poset().names();
        let mut admitted = vec![true; names.len()];
        let mut any = false;
        for (c, _) in self.certificates.iter().zip(valid).filter(|(_, v)| **v) {
            any = true;
            for (a, b) in admitted.iter_mut().zip(&c.admits) {
                *a = *a && *b;
            }
        }
        any.then(|| {
            self.catalog.antichain(
                names
                    .iter()
                    .zip(&admitted)
                    .filter(|(_, a)| **a)
                    .map(|(n, _)| n.as_str()),
            )
        })
    }

    /// Names of a generator set that certifies `valid`, for diagnostics.
    pub fn witnesses(&self, valid: &[bool]) -> Vec<Vec<String>> {
        self.certificates
            .iter()
            .zip(valid)
            .filter(|(_, v)| **v)
            .map(|(c, _)| c.members.clone())
            .collect()
    }

    /// Label from precomputed validity; the second value reports a missing
    /// certificate or a soundness violation.
    pub fn label_with(&self, valid: &[bool], sample: &SlicePoint) -> (FaceLabel, Option<String>) {
        let lower = lower_bound(&sample.lift(), self.catalog);
        let (upper, issue) = match self.upper(valid) {
            Some(u) => (u, None),
            None => (
                self.catalog.poset().top(),
                Some(format!("no generator set covers the cell at {sample}")),
            ),
        };
        let issue = if !lower.is_below(&upper, self.catalog.poset()) {
            Some(format!(
                "at {sample} (class {}): lower {lower} is not below upper {upper}",
                sample.lift()
            ))
        } else {
            issue
        };
        (FaceLabel::new(lower, upper), issue)
    }

    pub fn label(
        &self,
        vertices: &[SlicePoint],
        sample: &SlicePoint,
    ) -> (FaceLabel, Option<String>) {
        self.label_with(&self.valid_for(vertices), sample)
    }
}

/// Upper bound over every vertex of `face`. Falls back to every maximal
/// locus when no generator set covers the face.
pub fn upper_bound(face: &Face, catalog: &Catalog) -> LocusSet {
    let r = Resolver::new(catalog);
    r.upper(&r.valid_for(&face.vertices))
        .unwrap_or_else(|| catalog.poset().top())
}

pub fn resolve_face(face: &Face, catalog: &Catalog) -> Result<FaceLabel> {
    let r = Resolver::new(catalog);
    let (label, issue) = r.label(&face.vertices, &face.sample);
    if !label.lower.is_below(&label.upper, catalog.poset()) {
        return Err(Error::Soundness(issue.unwrap_or_default()));
    }
    Ok(label)
}

/// Where a divisor class sits in the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    NotEffective,
    Ray {
        name: String,
        label: FaceLabel,
    },
    Vertex {
        index: usize,
        label: FaceLabel,
    },
    /// On an arrangement edge; `chambers` holds the one or two chambers on
    /// either side.
    Edge {
        index: usize,
        label: FaceLabel,
        chambers: Vec<usize>,
    },
    Chamber {
        index: usize,
        label: FaceLabel,
    },
}

/// A labelled arrangement with its merged chambers.
#[derive(Clone, Debug)]
pub struct Decomposition {
    catalog: Catalog,
    arrangement: Arrangement,
    face_labels: Vec<FaceLabel>,
    edge_labels: Vec<FaceLabel>,
    vertex_labels: Vec<FaceLabel>,
    chambers: Vec<Chamber>,
    face_chamber: Vec<usize>,
    issues: Vec<String>,
}

pub fn decompose(catalog: &Catalog) -> Result<Decomposition> {
    let arrangement = build_arrangement(catalog)?;
    for f in arrangement.faces() {
        face_sign_profile(f, catalog)?;
    }
    let resolver = Resolver::new(catalog);
    let mut issues = Vec::new();
    let mut record = |(l, issue): (FaceLabel, Option<String>)| {
        if let Some(i) = issue {
            issues.push(i);
        }
        l
    };
    let vertex_valid: Vec<Vec<bool>> = arrangement
        .vertices()
        .iter()
        .map(|v| resolver.valid_at(&v.sample))
        .collect();
    let and_of = |pts: &[SlicePoint]| -> Vec<bool> {
        let mut acc: Option<Vec<bool>> = None;
        for p in pts {
            let v = &vertex_valid[arrangement.vertex_at(p).expect("cell vertex is indexed")];
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => a.iter().zip(v).map(|(x, y)| *x && *y).collect(),
            });
        }
        acc.unwrap_or_default()
    };
    let vertex_labels: Vec<FaceLabel> = arrangement
        .vertices()
        .iter()
        .zip(&vertex_valid)
        .map(|(v, valid)| record(resolver.label_with(valid, &v.sample)))
        .collect();
    let edge_labels: Vec<FaceLabel> = arrangement
        .edges()
        .iter()
        .map(|e| record(resolver.label_with(&and_of(&e.vertices), &e.sample)))
        .collect();
    let face_labels: Vec<FaceLabel> = arrangement
        .faces()
        .iter()
        .map(|f| record(resolver.label_with(&and_of(&f.vertices), &f.sample)))
        .collect();
    let chambers = merge_chambers(&arrangement, &face_labels);
    let mut face_chamber = vec![0; face_labels.len()];
    for (ci, c) in chambers.iter().enumerate() {
        for &f in &c.faces {
            face_chamber[f] = ci;
        }
    }
    Ok(Decomposition {
        catalog: catalog.clone(),
        arrangement,
        face_labels,
        edge_labels,
        vertex_labels,
        chambers,
        face_chamber,
        issues,
    })
}

impl Decomposition {
    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn face_labels(&self) -> &[FaceLabel] {
        &self.face_labels
    }

    pub fn edge_labels(&self) -> &[FaceLabel] {
        &self.edge_labels
    }

    pub fn vertex_labels(&self) -> &[FaceLabel] {
        &self.vertex_labels
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber_of_face(&self, face: usize) -> usize {
        self.face_chamber[face]
    }

    /// Soundness violations and cells without an upper-bound certificate.
    pub fn issues(&self) -> &[String] {
        &self.issues
    }

    pub fn gap_faces(&self) -> usize {
        self.face_labels.iter().filter(|l| !l.is_resolved()).count()
    }

    fn label_at(&self, p: &SlicePoint) -> Option<&FaceLabel> {
        match self.arrangement.locate(p) {
            Location::Outside => None,
            Location::Vertex(i) => Some(&self.vertex_labels[i]),
            Location::Edge(i) => Some(&self.edge_labels[i]),
            Location::Face(i) => Some(&self.face_labels[i]),
        }
    }

    pub fn classify(&self, d: &NSVector) -> Result<Placement> {
        let eff = self.catalog.effective_cone()?;
        if !lin::membership(d, &eff)?.in_closed() {
            return Ok(Placement::NotEffective);
        }
        let p = slice(d)?;
        Ok(match self.arrangement.locate(&p) {
            Location::Outside => Placement::NotEffective,
            Location::Vertex(i) => {
                let label = self.vertex_labels[i].clone();
                match self.arrangement.name_at(&p) {
                    Some(name) => Placement::Ray {
                        name: name.to_string(),
                        label,
                    },
                    None => Placement::Vertex { index: i, label },
                }
            }
            Location::Edge(i) => {
                let mut chambers: Vec<usize> = self
                    .arrangement
                    .edge_faces(i)
                    .iter()
                    .map(|&f| self.face_chamber[f])
                    .collect();
                chambers.dedup();
                let label = self.edge_labels[i].clone();
                if chambers.len() == 1
                    && self.chambers[chambers[0]].label == label.lower
                    && label.is_resolved()
                {
                    Placement::Chamber {
                        index: chambers[0],
                        label,
                    }
                } else {
                    Placement::Edge {
                        index: i,
                        label,
                        chambers,
                    }
                }
            }
            Location::Face(i) => Placement::Chamber {
                index: self.face_chamber[i],
                label: self.face_labels[i].clone(),
            },
        })
    }

    /// For each chamber, the unique expected item with the same locus set
    /// whose named boundary rays all lie in the chamber's closure.
    pub fn match_items(&self) -> Vec<Option<u32>> {
        self.chambers
            .iter()
            .map(|c| {
                if !c.is_resolved() {
                    return None;
                }
                let rays: BTreeSet<String> = c.rays(&self.arrangement).into_iter().collect();
                let hits: Vec<&ExpectedChamber> = self
                    .catalog
                    .expected()
                    .iter()
                    .filter(|e| e.locus == c.label && e.boundary.iter().all(|b| rays.contains(b)))
                    .collect();
                match hits[..] {
                    [e] => Some(e.id),
                    _ => None,
                }
            })
            .collect()
    }

    /// Checks every cell on a wall's segment, plus its closed ends.
    pub fn check_wall(&self, item: &ExpectedChamber, wall: &WallSpec) -> WallResult {
        let mut detail = Vec::new();
        let mut cells = 0;
        let arr = &self.arrangement;
        let (Some(a), Some(b)) = (arr.named_point(&wall.from), arr.named_point(&wall.to)) else {
            return WallResult {
                item: item.id,
                wall: wall.to_string(),
                ok: false,
                cells: 0,
                detail: vec!["wall names an unknown ray".into()],
            };
        };
        let mut check = |what: String, l: &FaceLabel, detail: &mut Vec<String>| {
            cells += 1;
            if !l.is_resolved() {
                detail.push(format!("{what}: gap, lower {} upper {}", l.lower, l.upper));
            } else if l.lower != item.locus {
                detail.push(format!("{what}: {} instead of {}", l.lower, item.locus));
            }
        };
        let mut covered = Rational::zero();
        for (e, edge) in arr.edges().iter().enumerate() {
            let (p, q) = (&edge.vertices[0], &edge.vertices[1]);
            if lin::on_closed_segment(p, a, b) && lin::on_closed_segment(q, a, b) {
                covered += (&q.x - &p.x).abs() + (&q.y - &p.y).abs();
                check(format!("edge {p} {q}"), &self.edge_labels[e], &mut detail);
            }
        }
        for (v, vert) in arr.vertices().iter().enumerate() {
            if lin::on_open_segment(&vert.sample, a, b) {
                check(
                    format!("vertex {}", vert.sample),
                    &self.vertex_labels[v],
                    &mut detail,
                );
            }
        }
        for (closed, name, p) in [
            (wall.from_closed, &wall.from, a),
            (wall.to_closed, &wall.to, b),
        ] {
            if closed {
                match self.label_at(p) {
                    Some(l) => check(format!("ray {name}"), l, &mut detail),
                    None => detail.push(format!("ray {name} is outside the effective cone")),
                }
            }
        }
        let length = (&b.x - &a.x).abs() + (&b.y - &a.y).abs();
        if covered != length {
            detail.push("segment is not covered by arrangement edges".into());
        }
        WallResult {
            item: item.id,
            wall: wall.to_string(),
            ok: detail.is_empty(),
            cells,
            detail,
        }
    }

    pub fn report(&self) -> VerificationReport {
        let cat = &self.catalog;
        let matches = self.match_items();
        let mut failures: Vec<String> = self.issues.clone();
        let expected_count = cat.expected().len();
        if self.chambers.len() != expected_count {
            failures.push(format!(
                "found {} chambers, expected {expected_count}",
                self.chambers.len()
            ));
        }
        let mut per_chamber: Vec<ChamberResult> = self
            .chambers
            .iter()
            .zip(&matches)
            .enumerate()
            .map(|(i, (c, m))| {
                let dup = m.is_some() && matches.iter().filter(|x| *x == m).count() > 1;
                ChamberResult {
                    index: i,
                    item: *m,
                    rays: c.rays(&self.arrangement),
                    locus: c.label.clone(),
                    resolution: c.resolution.clone(),
                    faces: c.faces.len(),
                    matched: m.is_some() && !dup,
                }
            })
            .collect();
        per_chamber.sort_by_key(|c| (c.item.is_none(), c.item, c.index));
        for c in per_chamber.iter().filter(|c| !c.matched) {
            failures.push(match (&c.resolution, c.item) {
                (Resolution::Gap { lower, upper }, _) => format!(
                    "chamber {} ({} faces, rays {}) is unresolved: lower {lower}, upper {upper}",
                    c.index,
                    c.faces,
                    c.rays.join(" ")
                ),
                (_, Some(id)) => format!("item {id} matches more than one chamber"),
                _ => format!(
                    "chamber {} with locus {} and rays {} matches no item",
                    c.index,
                    c.locus,
                    c.rays.join(" ")
                ),
            });
        }
        for e in cat.expected() {
            if !matches.contains(&Some(e.id)) {
                failures.push(format!("item {} ({}) has no chamber", e.id, e.locus));
            }
        }
        let gap_faces = self.gap_faces();
        if gap_faces > 0 {
            failures.push(format!("{gap_faces} faces are unresolved"));
        }
        let wall_results: Vec<WallResult> = cat
            .expected()
            .iter()
            .flat_map(|e| e.walls.iter().map(move |w| (e, w)))
            .map(|(e, w)| self.check_wall(e, w))
            .collect();
        for w in wall_results.iter().filter(|w| !w.ok) {
            failures.push(format!(
                "wall {} of item {}: {}",
                w.wall,
                w.item,
                w.detail.join("; ")
            ));
        }
        VerificationReport {
            space: cat.space(),
            face_count: self.face_labels.len(),
            gap_faces,
            chamber_count: self.chambers.len(),
            expected_count,
            per_chamber,
            wall_results,
            failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberResult {
    pub index: usize,
    pub item: Option<u32>,
    pub rays: Vec<String>,
    pub locus: LocusSet,
    pub resolution: Resolution,
    pub faces: usize,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallResult {
    pub item: u32,
    pub wall: String,
    pub ok: bool,
    pub cells: usize,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub space: SpaceId,
    pub face_count: usize,
    pub gap_faces: usize,
    pub chamber_count: usize,
    pub expected_count: usize,
    pub per_chamber: Vec<ChamberResult>,
    pub wall_results: Vec<WallResult>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.chamber_count == self.expected_count
            && self.per_chamber.iter().all(|c| c.matched)
            && self.wall_results.iter().all(|w| w.ok)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "space: {}", self.space);
        let _ = writeln!(
            s,
            "faces: {} ({} unresolved)",
            self.face_count, self.gap_faces
        );
        let _ = writeln!(
            s,
            "chambers: {} (expected {})",
            self.chamber_count, self.expected_count
        );
        for c in &self.per_chamber {
            let item = c.item.map_or("-".to_string(), |i| i.to_string());
            let status = match c.resolution {
                Resolution::Resolved => "resolved",
                Resolution::Gap { .. } => "gap",
            };
            let _ = writeln!(
                s,
                "  item {item:>2}  {status:<8}  rays {:<22} locus {}  {}",
                c.rays.join(" "),
                c.locus,
                if c.matched { "ok" } else { "MISMATCH" }
            );
        }
        for w in &self.wall_results {
            let _ = writeln!(
                s,
                "  wall {:<12} item {:>2}  {} cells  {}",
                w.wall,
                w.item,
                w.cells,
                if w.ok { "ok" } else { "MISMATCH" }
            );
        }
        if self.failures.is_empty() {
            let _ = writeln!(s, "failures: none");
        } else {
            let _ = writeln!(s, "failures:");
            for f in &self.failures {
                let _ = writeln!(s, "  {f}");
            }
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn verify_theorem(catalog: &Catalog) -> Result<VerificationReport> {
    Ok(decompose(catalog)?.report())
}

/// Face-by-face comparison of a decomposition with the decomposition of the
/// dual catalog: mirrored cells must carry conjugated labels, and chambers
/// must correspond.
pub fn duality_mismatches(a: &Decomposition, dual: &Decomposition) -> Vec<String> {
    let swap = |s: &LocusSet| s.map_names(crate::catalog::conjugate_locus_name);
    let mut out = Vec::new();
    let (fa, fb) = (a.arrangement.faces(), dual.arrangement.faces());
    if fa.len() != fb.len() {
        out.push(format!(
            "{} faces against {} in the dual",
            fa.len(),
            fb.len()
        ));
        return out;
    }
    let mut image = vec![usize::MAX; fa.len()];
    for (i, f) in fa.iter().enumerate() {
        match dual.arrangement.face_with_sample(&f.sample.mirror()) {
            None => out.push(format!("face at {} has no mirror image", f.sample)),
            Some(j) => {
                image[i] = j;
                let (la, lb) = (&a.face_labels[i], &dual.face_labels[j]);
                if swap(&la.lower) != lb.lower || swap(&la.upper) != lb.upper {
                    out.push(format!(
                        "face at {}: {} maps to {}",
                        f.sample, la.lower, lb.lower
                    ));
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    if a.chambers.len() != dual.chambers.len() {
        out.push(format!(
            "{} chambers against {} in the dual",
            a.chambers.len(),
            dual.chambers.len()
        ));
    }
    for c in &a.chambers {
        let mut img: Vec<usize> = c.faces.iter().map(|&f| image[f]).collect();
        img.sort_unstable();
        let target = dual.face_chamber[img[0]];
        if dual.chambers[target].faces != img || dual.chambers[target].label != swap(&c.label) {
            out.push(format!(
                "chamber with locus {} has no dual partner",
                c.label
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Regime;
    use crate::lin::{int, rat};

    fn cat(r: Regime) -> Catalog {
        Catalog::builtin(SpaceId::default_for(r))
    }

    fn set(names: &[&str]) -> LocusSet {
        LocusSet::from_names(names.iter().copied())
    }

    #[test]
    fn lower_bound_examples() {
        let c = cat(Regime::Deg2);
        let half_sum = NSVector::new(rat(1, 2), rat(1, 2), rat(-1, 2));
        assert_eq!(lower_bound(&half_sum, &c), set(&["Q[(1,1)^*]", "Q[(2)^*]"]));
        assert_eq!(lower_bound(c.class_of("T").unwrap(), &c), LocusSet::empty());
        let g = cat(Regime::Deg3General);
        assert_eq!(
            lower_bound(g.class_of("S").unwrap(), &g),
            set(&["C[(1,1,1)^*]", "Q((1,1)^*)L"])
        );
    }

    #[test]
    fn lower_bound_is_scale_invariant() {
        let c = cat(Regime::Deg3General);
        for d in c.divisors() {
            for s in [rat(1, 7), int(3), rat(22, 5)] {
                assert_eq!(
                    lower_bound(&d.class.scale(&s), &c),
                    lower_bound(&d.class, &c)
                );
            }
        }
    }

    fn point_face(p: SlicePoint) -> Face {
        Face {
            dimension: 0,
            vertices: vec![p.clone()],
            sample: p,
            bounding_lines: vec![],
        }
    }

    #[test]
    fn upper_bound_examples() {
        let c = cat(Regime::Deg2);
        let t = |n: &str| slice(c.class_of(n).unwrap()).unwrap();
        // Interior of the triangle H11, H2, T.
        let tri = [t("H11"), t("H2"), t("T")];
        let inner = Face {
            dimension: 2,
            sample: SlicePoint::new(
                (&tri[0].x + &tri[1].x + &tri[2].x) / int(3),
                (&tri[0].y + &tri[1].y + &tri[2].y) / int(3),
            ),
            vertices: tri.to_vec(),
            bounding_lines: vec![],
        };
        assert_eq!(upper_bound(&inner, &c), LocusSet::empty());
        // A point on the open segment D_deg D_unb.
        let mid = point_face(t("Ddeg").midpoint(&t("Dunb")));
        assert_eq!(upper_bound(&mid, &c), set(&["Q[(1,1)^*]", "Q[(2)^*]"]));

        let g = cat(Regime::Deg3General);
        let t = |n: &str| slice(g.class_of(n).unwrap()).unwrap();
        let face = Face {
            dimension: 2,
            sample: t("F"),
            vertices: vec![t("F"), t("H11"), t("H2")],
            bounding_lines: vec![],
        };
        assert_eq!(upper_bound(&face, &g), set(&["C[(1)^*]", "Q((1)^*)L"]));
    }

    #[test]
    fn resolve_face_at_named_rays() {
        let g = cat(Regime::Deg3General);
        for d in g.divisors() {
            let p = slice(&d.class).unwrap();
            let l = resolve_face(&point_face(p), &g).unwrap();
            if let Some(u) = d.fact.upper() {
                if matches!(d.fact, crate::catalog::DivisorFact::ExactSbl(_)) {
                    assert_eq!(l.lower, u, "{}", d.name);
                }
            }
        }
    }

    #[test]
    fn soundness_violation_is_an_error() {
        let mut data = cat(Regime::Deg2).data().clone();
        // Claim T is not base-point-free but P's locus is empty: then the
        // lower bound at P exceeds its upper bound.
        let p = data.divisors.iter_mut().find(|d| d.name == "P").unwrap();
        p.fact = crate::catalog::DivisorFact::BasePointFree;
        let c = Catalog::from_data(data).unwrap();
        let at_p = point_face(slice(c.class_of("P").unwrap()).unwrap());
        assert!(matches!(resolve_face(&at_p, &c), Err(Error::Soundness(_))));
    }

    #[test]
    fn deg2_decomposition() {
        let c = cat(Regime::Deg2);
        let d = decompose(&c).unwrap();
        assert!(d.issues().is_empty(), "{:?}", d.issues());
        assert_eq!(d.chambers().len(), 8);
        assert_eq!(d.gap_faces(), 0);
        let report = d.report();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn deg3_general_decomposition() {
        let c = cat(Regime::Deg3General);
        let report = verify_theorem(&c).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.chamber_count, 22);
    }

    #[test]
    fn every_face_is_sound_in_every_regime() {
        for r in Regime::ALL {
            let d = decompose(&cat(r)).unwrap();
            let poset = d.catalog().poset();
            for l in d
                .face_labels()
                .iter()
                .chain(d.edge_labels())
                .chain(d.vertex_labels())
            {
                assert!(l.lower.is_below(&l.upper, poset), "{r}");
            }
            assert!(d.issues().is_empty(), "{r}: {:?}", d.issues());
        }
    }

    #[test]
    fn nef_faces_are_empty_and_others_are_not() {
        for r in Regime::ALL {
            let d = decompose(&cat(r)).unwrap();
            let nef = d.catalog().nef_cone().unwrap();
            for (f, l) in d.arrangement().faces().iter().zip(d.face_labels()) {
                let inside = f
                    .vertices
                    .iter()
                    .all(|v| lin::membership(&v.lift(), &nef).unwrap().in_closed());
                if inside {
                    assert!(l.is_resolved() && l.lower.is_empty(), "{r}");
                } else {
                    assert!(!l.lower.is_empty(), "{r} at {}", f.sample);
                }
            }
        }
    }

    #[test]
    fn adjacent_chambers_differ() {
        for r in Regime::ALL {
            let d = decompose(&cat(r)).unwrap();
            let arr = d.arrangement();
            for e in 0..arr.edges().len() {
                if let [a, b] = arr.edge_faces(e)[..] {
                    let (ca, cb) = (d.chamber_of_face(a), d.chamber_of_face(b));
                    if ca != cb {
                        assert_ne!(d.face_labels()[a], d.face_labels()[b], "{r}");
                    }
                }
            }
        }
    }

    #[test]
    fn merging_is_idempotent() {
        let d = decompose(&cat(Regime::Deg3General)).unwrap();
        let relabel: Vec<FaceLabel> = (0..d.face_labels().len())
            .map(|f| {
                let c = &d.chambers()[d.chamber_of_face(f)];
                d.face_labels()[c.faces[0]].clone()
            })
            .collect();
        let again = merge_chambers(d.arrangement(), &relabel);
        assert_eq!(again, d.chambers());
    }

    #[test]
    fn duality_equivariance() {
        for r in [Regime::Deg2, Regime::Deg3General] {
            let c = cat(r);
            let a = decompose(&c).unwrap();
            let b = decompose(&c.dual_involution().unwrap()).unwrap();
            let m = duality_mismatches(&a, &b);
            assert!(m.is_empty(), "{r}: {m:?}");
        }
    }

    #[test]
    fn classify_examples() {
        let c = cat(Regime::Deg2);
        let d = decompose(&c).unwrap();
        let items = d.match_items();
        match d
            .classify(&NSVector::new(rat(1, 2), rat(1, 2), rat(1, 2)))
            .unwrap()
        {
            Placement::Ray { name, label } => {
                assert_eq!(name, "T");
                assert!(label.lower.is_empty());
            }
            other => panic!("{other:?}"),
        }
        match d.classify(&NSVector::from_ints(2, 2, 1)).unwrap() {
            Placement::Chamber { index, label } => {
                assert_eq!(items[index], Some(1));
                assert!(label.lower.is_empty());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            d.classify(&NSVector::new(rat(3, 4), rat(3, 4), rat(-1, 4))).unwrap(),
            Placement::Ray { name, .. } if name == "P"
        ));
        assert_eq!(
            d.classify(&NSVector::from_ints(-1, 0, 0)).unwrap(),
            Placement::NotEffective
        );
    }

    #[test]
    fn report_round_trips_to_json() {
        let r = verify_theorem(&cat(Regime::Deg2)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["chamber_count"], 8);
        assert_eq!(v["space"]["regime"], "deg2");
        assert!(r.to_text().contains("result: PASS"));
    }
}
