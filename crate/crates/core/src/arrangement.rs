//! Exact line arrangement on the cross-section of the effective cone.
//!
//! Points are [`SlicePoint`]s on the plane `2a + 2b + c = 1`. The line set
//! holds the zero locus of every curve pairing and the line through every
//! pair of named divisor rays. The effective triangle is cut by each line in
//! turn; since every cut runs across the whole plane, neighbouring cells are
//! always split at the same points and the result is a proper cell complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::catalog::{Catalog, LocusSet};
use crate::error::{Error, Result};
use crate::inference::FaceLabel;
use crate::lin::{self, int, orient, primitive, slice, NSVector, Rational, SlicePoint};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineOrigin {
    CurveZeroSet(String),
    RayPair(String, String),
}

impl fmt::Display for LineOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineOrigin::CurveZeroSet(c) => write!(f, "{c}=0"),
            LineOrigin::RayPair(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

/// The line `alpha x + beta y + gamma = 0`, stored with coprime integer
/// coefficients whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementLine {
    pub coefficients: [Rational; 3],
    pub origins: Vec<LineOrigin>,
}

impl ArrangementLine {
    pub fn eval(&self, p: &SlicePoint) -> Rational {
        eval(&self.coefficients, p)
    }

    pub fn contains(&self, p: &SlicePoint) -> bool {
        self.eval(p).is_zero()
    }
}

fn eval(l: &[Rational; 3], p: &SlicePoint) -> Rational {
    &l[0] * &p.x + &l[1] * &p.y + &l[2]
}

fn normalized(l: &[Rational; 3]) -> [Rational; 3] {
    primitive([&l[0], &l[1], &l[2]], Rational::zero()).map(Rational::from_integer)
}

/// The affine function `p -> row . lift(p)` on the slice plane.
pub fn curve_line(row: &NSVector) -> [Rational; 3] {
    let o = SlicePoint::new(int(0), int(0));
    let gamma = row.dot(&o.lift());
    let alpha = row.dot(&SlicePoint::new(int(1), int(0)).lift()) - &gamma;
    let beta = row.dot(&SlicePoint::new(int(0), int(1)).lift()) - &gamma;
    [alpha, beta, gamma]
}

/// Line through two distinct points.
pub fn line_through(a: &SlicePoint, b: &SlicePoint) -> [Rational; 3] {
    [&a.y - &b.y, &b.x - &a.x, &a.x * &b.y - &b.x * &a.y]
}

/// A cell of the arrangement: a vertex (dimension 0), an edge (1) or a
/// convex polygon (2, vertices counter-clockwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dimension: u8,
    pub vertices: Vec<SlicePoint>,
    pub sample: SlicePoint,
    pub bounding_lines: Vec<usize>,
}

impl Face {
    /// Twice the signed area; zero for vertices and edges.
    pub fn doubled_area(&self) -> Rational {
        let n = self.vertices.len();
        if n < 3 {
            return Rational::zero();
        }
        (0..n)
            .map(|i| {
                let (p, q) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                &p.x * &q.y - &q.x * &p.y
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Closed containment for 2-faces.
    pub fn contains_point(&self, p: &SlicePoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| !orient(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative())
    }

    fn strictly_contains(&self, p: &SlicePoint) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| orient(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_positive())
    }
}

fn centroid(pts: &[SlicePoint]) -> SlicePoint {
    let n = Rational::from_integer((pts.len() as i64).into());
    let (sx, sy) = pts
        .iter()
        .fold((Rational::zero(), Rational::zero()), |(x, y), p| {
            (x + &p.x, y + &p.y)
        });
    SlicePoint::new(sx / &n, sy / n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Outside,
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    lines: Vec<ArrangementLine>,
    triangle: [SlicePoint; 3],
    named: Vec<(String, SlicePoint)>,
    faces: Vec<Face>,
    edges: Vec<Face>,
    vertices: Vec<Face>,
    face_edges: Vec<Vec<usize>>,
    edge_faces: Vec<Vec<usize>>,
    vertex_index: BTreeMap<SlicePoint, usize>,
}

/// Arrangement for a validated catalog.
pub fn build_arrangement(catalog: &Catalog) -> Result<Arrangement> {
    let mut named: Vec<(String, SlicePoint)> = Vec::new();
    for d in catalog.divisors() {
        let p = slice(&d.class)?;
        if let Some((other, _)) = named.iter().find(|(_, q)| *q == p) {
            return Err(Error::Degenerate(format!(
                "{} and {} span the same ray",
                other, d.name
            )));
        }
        named.push((d.name.clone(), p));
    }
    let [ddeg, dunb, delta] = catalog.effective_generators()?;
    let triangle = [slice(&ddeg)?, slice(&dunb)?, slice(&delta)?];

    let mut raw = Vec::new();
    for c in catalog.curves() {
        let l = curve_line(&c.row);
        if l[0].is_zero() && l[1].is_zero() {
            continue;
        }
        raw.push((l, LineOrigin::CurveZeroSet(c.name.clone())));
    }
    for (i, (a, p)) in named.iter().enumerate() {
        for (b, q) in &named[i + 1..] {
            raw.push((
                line_through(p, q),
                LineOrigin::RayPair(a.clone(), b.clone()),
            ));
        }
    }
    Arrangement::from_lines(triangle, raw, named)
}

impl Arrangement {
    /// Cuts `triangle` by every line. Lines are deduplicated by their
    /// normalized form, but cutting uses the representative as given.
    pub fn from_lines(
        triangle: [SlicePoint; 3],
        lines: Vec<([Rational; 3], LineOrigin)>,
        named: Vec<(String, SlicePoint)>,
    ) -> Result<Arrangement> {
        let o = orient(&triangle[0], &triangle[1], &triangle[2]);
        if o.is_zero() {
            return Err(Error::Degenerate(
                "effective cone slice is not a triangle".into(),
            ));
        }
        let tri: Vec<SlicePoint> = if o.is_positive() {
            triangle.to_vec()
        } else {
            vec![
                triangle[0].clone(),
                triangle[2].clone(),
                triangle[1].clone(),
            ]
        };

        let mut index: BTreeMap<[Rational; 3], usize> = BTreeMap::new();
        let mut stored: Vec<ArrangementLine> = Vec::new();
        let mut cut_by: Vec<[Rational; 3]> = Vec::new();
        for (l, origin) in lines {
            if l[0].is_zero() && l[1].is_zero() {
                return Err(Error::Degenerate(format!("{origin} is not a line")));
            }
            let key = normalized(&l);
            match index.get(&key) {
                Some(&i) => stored[i].origins.push(origin),
                None => {
                    index.insert(key.clone(), stored.len());
                    stored.push(ArrangementLine {
                        coefficients: key,
                        origins: vec![origin],
                    });
                    cut_by.push(l);
                }
            }
        }
        let mut order: Vec<usize> = (0..stored.len()).collect();
        order.sort_by(|&a, &b| stored[a].coefficients.cmp(&stored[b].coefficients));
        let lines: Vec<ArrangementLine> = order.iter().map(|&i| stored[i].clone()).collect();
        let cut_by: Vec<[Rational; 3]> = order.iter().map(|&i| cut_by[i].clone()).collect();

        let mut polys = vec![tri.clone()];
        for l in &cut_by {
            let mut next = Vec::with_capacity(polys.len() + 8);
            for poly in polys {
                let s: Vec<Rational> = poly.iter().map(|p| eval(l, p)).collect();
                if s.iter().all(|x| !x.is_negative()) || s.iter().all(|x| !x.is_positive()) {
                    next.push(poly);
                    continue;
                }
                let (mut pos, mut neg) = (Vec::new(), Vec::new());
                let n = poly.len();
                for i in 0..n {
                    let j = (i + 1) % n;
                    let (p, q) = (&poly[i], &poly[j]);
                    let (sp, sq) = (&s[i], &s[j]);
                    if !sp.is_negative() {
                        pos.push(p.clone());
                    }
                    if !sp.is_positive() {
                        neg.push(p.clone());
                    }
                    if (sp.is_positive() && sq.is_negative())
                        || (sp.is_negative() && sq.is_positive())
                    {
                        let t = sp / (sp - sq);
                        let r =
                            SlicePoint::new(&p.x + &t * (&q.x - &p.x), &p.y + &t * (&q.y - &p.y));
                        pos.push(r.clone());
                        neg.push(r);
                    }
                }
                next.push(pos);
                next.push(neg);
            }
            polys = next;
        }

        let mut faces: Vec<Face> = polys
            .into_iter()
            .map(|vertices| {
                let sample = centroid(&vertices);
                Face {
                    dimension: 2,
                    vertices,
                    sample,
                    bounding_lines: Vec::new(),
                }
            })
            .collect();
        faces.sort_by(|a, b| a.sample.cmp(&b.sample));

        let lines_through = |ps: &[&SlicePoint]| -> Vec<usize> {
            (0..lines.len())
                .filter(|&i| ps.iter().all(|p| lines[i].contains(p)))
                .collect()
        };

        let mut edge_map: BTreeMap<(SlicePoint, SlicePoint), Vec<usize>> = BTreeMap::new();
        let mut vertex_set: BTreeSet<SlicePoint> = BTreeSet::new();
        for (fi, f) in faces.iter().enumerate() {
            let n = f.vertices.len();
            for i in 0..n {
                let (p, q) = (&f.vertices[i], &f.vertices[(i + 1) % n]);
                vertex_set.insert(p.clone());
                let key = if p < q {
                    (p.clone(), q.clone())
                } else {
                    (q.clone(), p.clone())
                };
                edge_map.entry(key).or_default().push(fi);
            }
        }
        let mut edges = Vec::with_capacity(edge_map.len());
        let mut edge_faces = Vec::with_capacity(edge_map.len());
        let mut edge_lookup: BTreeMap<(SlicePoint, SlicePoint), usize> = BTreeMap::new();
        let mut keyed: Vec<((SlicePoint, SlicePoint), Vec<usize>)> = edge_map.into_iter().collect();
        keyed.sort_by(|a, b| {
            a.0 .0
                .midpoint(&a.0 .1)
                .cmp(&b.0 .0.midpoint(&b.0 .1))
                .then_with(|| a.0.cmp(&b.0))
        });
        for ((p, q), fs) in keyed {
            if fs.len() > 2 {
                return Err(Error::ArrangementIncomplete(format!(
                    "edge {p} {q} borders {} cells",
                    fs.len()
                )));
            }
            edge_lookup.insert((p.clone(), q.clone()), edges.len());
            edges.push(Face {
                dimension: 1,
                sample: p.midpoint(&q),
                bounding_lines: lines_through(&[&p, &q]),
                vertices: vec![p, q],
            });
            edge_faces.push(fs);
        }
        let mut face_edges = Vec::with_capacity(faces.len());
        for f in faces.iter_mut() {
            let n = f.vertices.len();
            let mut es = Vec::with_capacity(n);
            let mut bl = BTreeSet::new();
            for i in 0..n {
                let (p, q) = (&f.vertices[i], &f.vertices[(i + 1) % n]);
                let key = if p < q {
                    (p.clone(), q.clone())
                } else {
                    (q.clone(), p.clone())
                };
                let e = edge_lookup[&key];
                bl.extend(edges[e].bounding_lines.iter().copied());
                es.push(e);
            }
            f.bounding_lines = bl.into_iter().collect();
            face_edges.push(es);
        }
        let vertices: Vec<Face> = vertex_set
            .into_iter()
            .map(|p| Face {
                dimension: 0,
                bounding_lines: lines_through(&[&p]),
                vertices: vec![p.clone()],
                sample: p,
            })
            .collect();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.sample.clone(), i))
            .collect();

        let arr = Arrangement {
            lines,
            triangle: [tri[0].clone(), tri[1].clone(), tri[2].clone()],
            named,
            faces,
            edges,
            vertices,
            face_edges,
            edge_faces,
            vertex_index,
        };
        if arr.euler_characteristic() != 1 {
            return Err(Error::ArrangementIncomplete(format!(
                "V - E + F = {}",
                arr.euler_characteristic()
            )));
        }
        Ok(arr)
    }

    pub fn lines(&self) -> &[ArrangementLine] {
        &self.lines
    }

    /// The effective triangle, counter-clockwise.
    pub fn triangle(&self) -> &[SlicePoint; 3] {
        &self.triangle
    }

    pub fn named_points(&self) -> &[(String, SlicePoint)] {
        &self.named
    }

    pub fn named_point(&self, name: &str) -> Option<&SlicePoint> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn name_at(&self, p: &SlicePoint) -> Option<&str> {
        self.named
            .iter()
            .find(|(_, q)| q == p)
            .map(|(n, _)| n.as_str())
    }

    /// 2-faces, ordered by sample point.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edges(&self) -> &[Face] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Face] {
        &self.vertices
    }

    pub fn face_edges(&self, face: usize) -> &[usize] {
        &self.face_edges[face]
    }

    /// One or two 2-faces.
    pub fn edge_faces(&self, edge: usize) -> &[usize] {
        &self.edge_faces[edge]
    }

    pub fn vertex_at(&self, p: &SlicePoint) -> Option<usize> {
        self.vertex_index.get(p).copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn in_triangle(&self, p: &SlicePoint) -> bool {
        let t = &self.triangle;
        lin::in_closed_hull(p, &[&t[0], &t[1], &t[2]])
    }

    /// The unique cell whose relative interior holds `p`.
    pub fn locate(&self, p: &SlicePoint) -> Location {
        if !self.in_triangle(p) {
            return Location::Outside;
        }
        if let Some(v) = self.vertex_at(p) {
            return Location::Vertex(v);
        }
        if let Some(e) = self
            .edges
            .iter()
            .position(|e| lin::on_open_segment(p, &e.vertices[0], &e.vertices[1]))
        {
            return Location::Edge(e);
        }
        match self.faces.iter().position(|f| f.strictly_contains(p)) {
            Some(f) => Location::Face(f),
            None => Location::Outside,
        }
    }

    pub fn face_with_sample(&self, p: &SlicePoint) -> Option<usize> {
        self.faces.binary_search_by(|f| f.sample.cmp(p)).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_negative() {
            Sign::Negative
        } else if r.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Sign of every curve pairing at the face's sample.
pub fn face_sign_profile(face: &Face, catalog: &Catalog) -> Result<BTreeMap<String, Sign>> {
    let d = face.sample.lift();
    let mut out = BTreeMap::new();
    for c in catalog.curves() {
        let s = Sign::of(&lin::pair(&c.row, &d));
        if face.dimension == 2 && s == Sign::Zero {
            return Err(Error::ArrangementIncomplete(format!(
                "curve {} vanishes at the sample {} of a 2-face",
                c.name, face.sample
            )));
        }
        out.insert(c.name.clone(), s);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Resolution {
    Resolved,
    Gap { lower: LocusSet, upper: LocusSet },
}

/// Union of 2-faces with equal labels, connected through shared edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub faces: Vec<usize>,
    pub label: LocusSet,
    pub resolution: Resolution,
}

impl Chamber {
    pub fn is_resolved(&self) -> bool {
        self.resolution == Resolution::Resolved
    }

    /// Distinct vertices of the member faces.
    pub fn vertex_points<'a>(&self, arr: &'a Arrangement) -> BTreeSet<&'a SlicePoint> {
        self.faces
            .iter()
            .flat_map(|&f| arr.faces()[f].vertices.iter())
            .collect()
    }

    /// Named rays lying in the closure of the chamber.
    pub fn rays(&self, arr: &Arrangement) -> Vec<String> {
        let pts = self.vertex_points(arr);
        arr.named_points()
            .iter()
            .filter(|(_, p)| pts.contains(p))
            .map(|(n, _)| n.clone())
            .collect()
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Connected components of equal-label 2-faces. Faces are compared by both
/// bounds, so gap faces never merge with resolved ones.
pub fn merge_chambers(arr: &Arrangement, labels: &[FaceLabel]) -> Vec<Chamber> {
    let n = arr.faces().len();
    assert_eq!(labels.len(), n, "one label per 2-face");
    let mut parent: Vec<usize> = (0..n).collect();
    for fs in &arr.edge_faces {
        if let [a, b] = fs[..] {
            if labels[a] == labels[b] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for f in 0..n {
        let r = find(&mut parent, f);
        groups.entry(r).or_default().push(f);
    }
    groups
        .into_values()
        .map(|faces| {
            let l = &labels[faces[0]];
            let resolution = if l.is_resolved() {
                Resolution::Resolved
            } else {
                Resolution::Gap {
                    lower: l.lower.clone(),
                    upper: l.upper.clone(),
                }
            };
            Chamber {
                label: l.lower.clone(),
                resolution,
                faces,
            }
        })
        .collect()
}
