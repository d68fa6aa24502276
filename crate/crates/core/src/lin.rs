//! Exact linear algebra on the rank-3 Neron-Severi space.
//!
//! Classes are written `a*H11 + b*H2 + c*Delta` and stored as [`NSVector`].
//! Curve classes act on divisors through the intersection pairing, which in
//! these coordinates is an ordinary dot product with the curve's row of
//! intersection numbers `(C.H11, C.H2, C.Delta)`; rows are stored as
//! `NSVector` too.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Malformed(format!("not a rational: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let r = match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Malformed(format!("zero denominator in {s:?}")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?),
    };
    Ok(r)
}

/// Canonical text form: `"p/q"` in lowest terms, or just `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A divisor class (or a curve's intersection row) in the basis
/// `(H11, H2, Delta)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NSVector {
    pub h11: Rational,
    pub h2: Rational,
    pub delta: Rational,
}

impl NSVector {
    pub fn new(h11: Rational, h2: Rational, delta: Rational) -> Self {
        Self { h11, h2, delta }
    }

    pub fn from_ints(h11: i64, h2: i64, delta: i64) -> Self {
        Self::new(int(h11), int(h2), int(delta))
    }

    /// `(h11, h2, delta) / den`
    pub fn over(h11: i64, h2: i64, delta: i64, den: i64) -> Self {
        Self::new(rat(h11, den), rat(h2, den), rat(delta, den))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn h11() -> Self {
        Self::from_ints(1, 0, 0)
    }

    pub fn h2() -> Self {
        Self::from_ints(0, 1, 0)
    }

    pub fn delta() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.h11, &self.h2, &self.delta]
    }

    fn from_array([h11, h2, delta]: [Rational; 3]) -> Self {
        Self { h11, h2, delta }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &NSVector) -> Rational {
        &self.h11 * &other.h11 + &self.h2 * &other.h2 + &self.delta * &other.delta
    }

    pub fn cross(&self, other: &NSVector) -> NSVector {
        NSVector::new(
            &self.h2 * &other.delta - &self.delta * &other.h2,
            &self.delta * &other.h11 - &self.h11 * &other.delta,
            &self.h11 * &other.h2 - &self.h2 * &other.h11,
        )
    }

    pub fn scale(&self, s: &Rational) -> NSVector {
        NSVector::new(&self.h11 * s, &self.h2 * s, &self.delta * s)
    }

    /// The involution `G(k,n) = G(n-k,n)` exchanges `H11` and `H2`.
    pub fn swap(&self) -> NSVector {
        NSVector::new(self.h2.clone(), self.h11.clone(), self.delta.clone())
    }

    /// Value of the slice functional `2a + 2b + c`.
    pub fn phi(&self) -> Rational {
        int(2) * (&self.h11 + &self.h2) + &self.delta
    }

    /// Primitive integer representative of the ray through `self`: cleared
    /// denominators, gcd 1, sign chosen so that the slice functional is
    /// positive (first nonzero coordinate positive when it vanishes).
    pub fn primitive_ray(&self) -> Result<[BigInt; 3]> {
        if self.is_zero() {
            return Err(Error::ZeroRay);
        }
        Ok(primitive(
            [&self.h11, &self.h2, &self.delta],
            self.phi().signum(),
        ))
    }

    pub fn same_ray(&self, other: &NSVector) -> bool {
        self.cross(other).is_zero() && self.dot(other).is_positive()
    }
}

/// Scales three rationals to coprime integers. `orient` fixes the overall
/// sign: positive keeps it, negative flips it, zero falls back to making the
/// first nonzero entry positive.
pub(crate) fn primitive(c: [&Rational; 3], orient: Rational) -> [BigInt; 3] {
    let lcm = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = c.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, i| acc.gcd(i));
    if !g.is_zero() {
        for i in ints.iter_mut() {
            *i = &*i / &g;
        }
    }
    let flip = if orient.is_zero() {
        ints.iter()
            .find(|i| !i.is_zero())
            .is_some_and(|i| i.is_negative())
    } else {
        orient.is_negative()
    };
    if flip {
        for i in ints.iter_mut() {
            *i = -&*i;
        }
    }
    let [a, b, c]: [BigInt; 3] = ints.try_into().expect("three entries");
    [a, b, c]
}

impl fmt::Display for NSVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.h11, self.h2, self.delta)
    }
}

impl Add for &NSVector {
    type Output = NSVector;
    fn add(self, o: &NSVector) -> NSVector {
        NSVector::new(&self.h11 + &o.h11, &self.h2 + &o.h2, &self.delta + &o.delta)
    }
}

impl Sub for &NSVector {
    type Output = NSVector;
    fn sub(self, o: &NSVector) -> NSVector {
        NSVector::new(&self.h11 - &o.h11, &self.h2 - &o.h2, &self.delta - &o.delta)
    }
}

impl Neg for &NSVector {
    type Output = NSVector;
    fn neg(self) -> NSVector {
        NSVector::new(-&self.h11, -&self.h2, -&self.delta)
    }
}

impl Mul<&NSVector> for &Rational {
    type Output = NSVector;
    fn mul(self, v: &NSVector) -> NSVector {
        v.scale(self)
    }
}

impl Serialize for NSVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords().iter().map(|r| format_rational(r)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NSVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::custom(format!(
                "expected three rationals, got {}",
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(3);
        for s in &v {
            out.push(parse_rational(s).map_err(serde::de::Error::custom)?);
        }
        let [a, b, c]: [Rational; 3] = out.try_into().expect("three entries");
        Ok(NSVector::new(a, b, c))
    }
}

/// Intersection number of a curve row with a divisor class.
pub fn pair(curve_row: &NSVector, d: &NSVector) -> Rational {
    curve_row.dot(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    pub fn in_closed(self) -> bool {
        !matches!(self, Membership::Outside)
    }
}

/// A finitely generated convex cone. Generators are nonzero and pairwise
/// distinct as rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    generators: Vec<NSVector>,
}

impl Cone {
    pub fn new(generators: impl IntoIterator<Item = NSVector>) -> Result<Self> {
        let mut out: Vec<NSVector> = Vec::new();
        for g in generators {
            if g.is_zero() {
                return Err(Error::ZeroRay);
            }
            if !out.iter().any(|h| h.same_ray(&g)) {
                out.push(g);
            }
        }
        if out.is_empty() {
            return Err(Error::Malformed("cone needs at least one generator".into()));
        }
        Ok(Self { generators: out })
    }

    pub fn generators(&self) -> &[NSVector] {
        &self.generators
    }
}

fn rank(vs: &[NSVector]) -> usize {
    let Some(first) = vs.iter().find(|v| !v.is_zero()) else {
        return 0;
    };
    let Some(second) = vs.iter().find(|v| !first.cross(v).is_zero()) else {
        return 1;
    };
    let normal = first.cross(second);
    if vs.iter().any(|v| !normal.dot(v).is_zero()) {
        3
    } else {
        2
    }
}

/// Inequalities `n . x >= 0` cutting out the cone inside its linear span,
/// obtained from candidate normals that keep every generator on one side.
fn supporting_normals(gens: &[NSVector], candidates: Vec<NSVector>) -> Vec<NSVector> {
    let mut out: Vec<NSVector> = Vec::new();
    for n in candidates {
        if n.is_zero() {
            continue;
        }
        let vals: Vec<Rational> = gens.iter().map(|g| n.dot(g)).collect();
        let n = if vals.iter().all(|x| !x.is_negative()) {
            n
        } else if vals.iter().all(|x| !x.is_positive()) {
            -&n
        } else {
            continue;
        };
        if !out.iter().any(|m| m.same_ray(&n)) {
            out.push(n);
        }
    }
    out
}

fn classify(v: &NSVector, normals: &[NSVector]) -> Membership {
    let mut on_face = false;
    for n in normals {
        let s = n.dot(v);
        if s.is_negative() {
            return Membership::Outside;
        }
        on_face |= s.is_zero();
    }
    if on_face {
        Membership::Boundary
    } else {
        Membership::Interior
    }
}

/// Exact interior / boundary / outside test. For cones that do not span the
/// whole space, "interior" means relative interior.
pub fn membership(v: &NSVector, cone: &Cone) -> Result<Membership> {
    if v.is_zero() {
        return Err(Error::ZeroRay);
    }
    let gens = cone.generators();
    match rank(gens) {
        3 => {
            let mut cands = Vec::new();
            for (i, g) in gens.iter().enumerate() {
                for h in &gens[i + 1..] {
                    cands.push(g.cross(h));
                }
            }
            Ok(classify(v, &supporting_normals(gens, cands)))
        }
        2 => {
            let g0 = &gens[0];
            let g1 = gens
                .iter()
                .find(|g| !g0.cross(g).is_zero())
                .expect("rank two");
            let span_normal = g0.cross(g1);
            if !span_normal.dot(v).is_zero() {
                return Ok(Membership::Outside);
            }
            let cands = gens.iter().map(|g| span_normal.cross(g)).collect();
            Ok(classify(v, &supporting_normals(gens, cands)))
        }
        _ => {
            let g0 = &gens[0];
            if !g0.cross(v).is_zero() {
                return Ok(Membership::Outside);
            }
            let two_sided = gens.iter().any(|g| g.dot(g0).is_negative());
            if two_sided || g0.dot(v).is_positive() {
                Ok(Membership::Interior)
            } else {
                Ok(Membership::Outside)
            }
        }
    }
}

/// Solves `m x = rhs` exactly; `None` when `m` is singular.
pub(crate) fn solve3(m: [[Rational; 3]; 3], rhs: [Rational; 3]) -> Option<[Rational; 3]> {
    let mut a: Vec<Vec<Rational>> = m
        .into_iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.to_vec();
            row.push(r);
            row
        })
        .collect();
    for col in 0..3 {
        let piv = (col..3).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..3 {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..4 {
                    let delta = &f * &a[col][c];
                    a[r][c] = &a[r][c] - delta;
                }
            }
        }
    }
    Some([a[0][3].clone(), a[1][3].clone(), a[2][3].clone()])
}

/// Coefficients of `v` on a linearly independent generator subset, or
/// `None` if `v` is not in their span.
fn solve_on_subset(v: &NSVector, gens: &[&NSVector]) -> Option<Vec<Rational>> {
    match gens.len() {
        1 => {
            let g = gens[0];
            if !g.cross(v).is_zero() {
                return None;
            }
            Some(vec![g.dot(v) / g.dot(g)])
        }
        2 => {
            let (g, h) = (gens[0], gens[1]);
            let n = g.cross(h);
            if !n.dot(v).is_zero() {
                return None;
            }
            // v = s g + t h  =>  v x h = s (g x h),  g x v = t (g x h)
            let nn = n.dot(&n);
            let s = v.cross(h).dot(&n) / &nn;
            let t = g.cross(v).dot(&n) / &nn;
            Some(vec![s, t])
        }
        3 => {
            let m = [
                [
                    gens[0].h11.clone(),
                    gens[1].h11.clone(),
                    gens[2].h11.clone(),
                ],
                [gens[0].h2.clone(), gens[1].h2.clone(), gens[2].h2.clone()],
                [
                    gens[0].delta.clone(),
                    gens[1].delta.clone(),
                    gens[2].delta.clone(),
                ],
            ];
            let x = solve3(m, [v.h11.clone(), v.h2.clone(), v.delta.clone()])?;
            Some(x.to_vec())
        }
        _ => None,
    }
}

/// Finds `v = sum a_i g_i` with every `a_i >= 0`, searching generator
/// subsets of size at most three (complete in dimension three).
pub fn nonneg_combination(v: &NSVector, gens: &[NSVector]) -> Result<Option<Vec<Rational>>> {
    if gens.is_empty() {
        return Err(Error::Malformed("no generators".into()));
    }
    if gens.iter().any(NSVector::is_zero) {
        return Err(Error::ZeroRay);
    }
    let zero = Rational::zero();
    if v.is_zero() {
        return Ok(Some(vec![zero; gens.len()]));
    }
    let n = gens.len();
    let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for i in 0..n {
        for j in i + 1..n {
            subsets.push(vec![i, j]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                subsets.push(vec![i, j, k]);
            }
        }
    }
    for idx in subsets {
        let sub: Vec<&NSVector> = idx.iter().map(|&i| &gens[i]).collect();
        if rank(&sub.iter().map(|g| (*g).clone()).collect::<Vec<_>>()) != sub.len() {
            continue;
        }
        if let Some(coef) = solve_on_subset(v, &sub) {
            if coef.iter().all(|c| !c.is_negative()) {
                let mut out = vec![zero.clone(); n];
                for (i, c) in idx.into_iter().zip(coef) {
                    out[i] = c;
                }
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// Unique class with prescribed intersection numbers against three curves.
pub fn solve_class(rows: &[NSVector; 3], values: &[Rational; 3]) -> Result<NSVector> {
    let m = rows.clone().map(|r| [r.h11, r.h2, r.delta]);
    solve3(m, values.clone())
        .map(NSVector::from_array)
        .ok_or(Error::Singular)
}

/// Affine coordinates on the plane `2a + 2b + c = 1`: `x = a - b`, `y = c`.
/// Exchanging `H11` and `H2` reflects `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlicePoint {
    pub x: Rational,
    pub y: Rational,
}

impl SlicePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// The class on the slice plane whose ray passes through this point.
    pub fn lift(&self) -> NSVector {
        let half = rat(1, 2);
        let s = (Rational::one() - &self.y) * &half;
        NSVector::new(
            (&s + &self.x) * &half,
            (&s - &self.x) * &half,
            self.y.clone(),
        )
    }

    pub fn mirror(&self) -> SlicePoint {
        SlicePoint::new(-&self.x, self.y.clone())
    }

    pub fn midpoint(&self, o: &SlicePoint) -> SlicePoint {
        let half = rat(1, 2);
        SlicePoint::new((&self.x + &o.x) * &half, (&self.y + &o.y) * &half)
    }
}

impl fmt::Display for SlicePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn slice(v: &NSVector) -> Result<SlicePoint> {
    let f = v.phi();
    if !f.is_positive() {
        return Err(Error::NotSliced);
    }
    Ok(SlicePoint::new((&v.h11 - &v.h2) / &f, &v.delta / f))
}

/// Twice the signed area of the triangle `a b c` (positive when
/// counter-clockwise).
pub fn orient(a: &SlicePoint, b: &SlicePoint, c: &SlicePoint) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Closed convex hull test for at most three points in the slice plane.
/// Equivalent to closed-cone membership for φ-positive generators.
pub fn in_closed_hull(p: &SlicePoint, pts: &[&SlicePoint]) -> bool {
    match pts {
        [] => false,
        [a] => *a == p,
        [a, b] => on_closed_segment(p, a, b),
        [a, b, c] => {
            let o = orient(a, b, c);
            if o.is_zero() {
                return on_closed_segment(p, a, b)
                    || on_closed_segment(p, b, c)
                    || on_closed_segment(p, a, c);
            }
            let s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
            if o.is_positive() {
                s.iter().all(|x| !x.is_negative())
            } else {
                s.iter().all(|x| !x.is_positive())
            }
        }
        _ => unimplemented!("hull of more than three points"),
    }
}

pub fn on_closed_segment(p: &SlicePoint, a: &SlicePoint, b: &SlicePoint) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let within =
        |v: &Rational, lo: &Rational, hi: &Rational| (lo <= v && v <= hi) || (hi <= v && v <= lo);
    within(&p.x, &a.x, &b.x) && within(&p.y, &a.y, &b.y)
}

/// Strictly between `a` and `b` on the segment joining them.
pub fn on_open_segment(p: &SlicePoint, a: &SlicePoint, b: &SlicePoint) -> bool {
    on_closed_segment(p, a, b) && p != a && p != b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> NSVector {
        NSVector::over(1, 1, 1, 2)
    }
    fn ddeg2() -> NSVector {
        NSVector::over(-1, 3, -1, 4)
    }
    fn dunb2() -> NSVector {
        NSVector::over(3, -1, -1, 4)
    }
    fn p2() -> NSVector {
        NSVector::over(3, 3, -1, 4)
    }

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rat(-6, 8)), "-3/4");
        assert_eq!(format_rational(&int(5)), "5");
        let r = rat(4, -6);
        assert!(r.denom().is_positive());
        assert_eq!(r, rat(-2, 3));
    }

    #[test]
    fn membership_examples() {
        let orthant = Cone::new([NSVector::h11(), NSVector::h2(), NSVector::delta()]).unwrap();
        assert_eq!(membership(&t2(), &orthant).unwrap(), Membership::Interior);
        let plane = Cone::new([NSVector::h11(), NSVector::h2()]).unwrap();
        assert_eq!(
            membership(&NSVector::delta(), &plane).unwrap(),
            Membership::Outside
        );
        let eff = Cone::new([ddeg2(), dunb2(), NSVector::delta()]).unwrap();
        assert_eq!(membership(&p2(), &eff).unwrap(), Membership::Interior);
        assert!(matches!(
            membership(&NSVector::zero(), &eff),
            Err(Error::ZeroRay)
        ));
    }

    #[test]
    fn membership_lower_dimensional() {
        let wall = Cone::new([NSVector::h11(), NSVector::h2()]).unwrap();
        let mid = NSVector::from_ints(1, 1, 0);
        assert_eq!(membership(&mid, &wall).unwrap(), Membership::Interior);
        assert_eq!(
            membership(&NSVector::h11(), &wall).unwrap(),
            Membership::Boundary
        );
        assert_eq!(
            membership(&NSVector::from_ints(1, -1, 0), &wall).unwrap(),
            Membership::Outside
        );
        let ray = Cone::new([NSVector::h11()]).unwrap();
        assert_eq!(
            membership(&NSVector::from_ints(3, 0, 0), &ray).unwrap(),
            Membership::Interior
        );
        assert_eq!(
            membership(&NSVector::from_ints(-3, 0, 0), &ray).unwrap(),
            Membership::Outside
        );
        let line = Cone::new([NSVector::h11(), NSVector::from_ints(-2, 0, 0)]).unwrap();
        assert_eq!(
            membership(&NSVector::from_ints(-3, 0, 0), &line).unwrap(),
            Membership::Interior
        );
    }

    #[test]
    fn membership_boundary_and_halfspace() {
        let orthant = Cone::new([NSVector::h11(), NSVector::h2(), NSVector::delta()]).unwrap();
        assert_eq!(
            membership(&NSVector::from_ints(1, 1, 0), &orthant).unwrap(),
            Membership::Boundary
        );
        let half = Cone::new([
            NSVector::h11(),
            NSVector::from_ints(-1, 0, 0),
            NSVector::h2(),
            NSVector::from_ints(0, -1, 0),
            NSVector::delta(),
        ])
        .unwrap();
        assert_eq!(
            membership(&NSVector::from_ints(-5, 3, 0), &half).unwrap(),
            Membership::Boundary
        );
        assert_eq!(
            membership(&NSVector::from_ints(-5, 3, 1), &half).unwrap(),
            Membership::Interior
        );
    }

    #[test]
    fn cone_collapses_duplicate_rays() {
        let c = Cone::new([
            NSVector::h11(),
            NSVector::from_ints(3, 0, 0),
            NSVector::h2(),
        ])
        .unwrap();
        assert_eq!(c.generators().len(), 2);
        assert!(Cone::new([NSVector::zero()]).is_err());
        assert!(Cone::new(Vec::new()).is_err());
    }

    #[test]
    fn nonneg_combination_examples() {
        // Cramer's rule on (Ddeg, Dunb, Delta) gives (3/2, 3/2, 1/2).
        let gens = [ddeg2(), dunb2(), NSVector::delta()];
        let coef = nonneg_combination(&p2(), &gens).unwrap().unwrap();
        assert_eq!(coef, vec![rat(3, 2), rat(3, 2), rat(1, 2)]);
        assert_eq!(
            nonneg_combination(&NSVector::h11(), &[NSVector::h11()]).unwrap(),
            Some(vec![int(1)])
        );
        let orth = [NSVector::h11(), NSVector::h2(), NSVector::delta()];
        assert_eq!(
            nonneg_combination(&NSVector::from_ints(-1, 0, 0), &orth).unwrap(),
            None
        );
        assert!(nonneg_combination(&p2(), &[]).is_err());
    }

    #[test]
    fn solve_class_examples() {
        let rows = [
            NSVector::from_ints(1, 0, 3),
            NSVector::from_ints(0, 1, 3),
            NSVector::from_ints(1, 1, 2),
        ];
        let p = solve_class(&rows, &[int(0), int(0), int(1)]).unwrap();
        assert_eq!(p, p2());
        let rows = [
            NSVector::from_ints(1, 0, 5),
            NSVector::from_ints(0, 1, 5),
            NSVector::from_ints(1, 0, -1),
        ];
        let f = solve_class(&rows, &[int(0), int(0), int(2)]).unwrap();
        assert_eq!(f, NSVector::over(5, 5, -1, 3));
        let rows = [
            NSVector::from_ints(0, 1, 5),
            NSVector::from_ints(1, 0, -1),
            NSVector::from_ints(0, 1, -1),
        ];
        let s = solve_class(&rows, &[int(0), int(0), int(2)]).unwrap();
        assert_eq!(s, NSVector::over(-1, 5, -1, 3));
        let singular = [
            NSVector::from_ints(1, 0, 3),
            NSVector::from_ints(2, 0, 6),
            NSVector::from_ints(1, 1, 2),
        ];
        assert!(matches!(
            solve_class(&singular, &[int(0), int(0), int(1)]),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn pair_examples() {
        assert_eq!(
            pair(
                &NSVector::from_ints(1, 0, 3),
                &NSVector::from_ints(1, 1, -1)
            ),
            int(-2)
        );
        assert_eq!(pair(&NSVector::from_ints(0, 0, 1), &t2()), rat(1, 2));
        assert_eq!(
            pair(&NSVector::from_ints(2, 0, 4), &NSVector::over(-1, 5, -1, 3)),
            int(-2)
        );
    }

    #[test]
    fn slice_examples() {
        let d = dunb2();
        assert_eq!(slice(&d).unwrap(), slice(&d.scale(&int(2))).unwrap());
        let ddeg3 = NSVector::over(-1, 2, -1, 3);
        assert_eq!(ddeg3.phi(), rat(1, 3));
        assert!(slice(&ddeg3).is_ok());
        assert!(matches!(
            slice(&NSVector::from_ints(-1, 0, 0)),
            Err(Error::NotSliced)
        ));
        assert!(matches!(
            slice(&NSVector::from_ints(1, -1, 0)),
            Err(Error::NotSliced)
        ));
        let p = slice(&p2()).unwrap();
        assert_eq!(slice(&p.lift()).unwrap(), p);
        assert_eq!(p.lift().phi(), int(1));
    }

    #[test]
    fn primitive_ray_normalizes() {
        let r = NSVector::over(-2, 4, -2, 6).primitive_ray().unwrap();
        assert_eq!(r, [BigInt::from(-1), BigInt::from(2), BigInt::from(-1)]);
        let r = NSVector::from_ints(-2, -2, -1).primitive_ray().unwrap();
        assert_eq!(r, [BigInt::from(2), BigInt::from(2), BigInt::from(1)]);
        assert!(NSVector::zero().primitive_ray().is_err());
    }

    #[test]
    fn hull_predicates() {
        let a = SlicePoint::new(int(0), int(0));
        let b = SlicePoint::new(int(2), int(0));
        let c = SlicePoint::new(int(0), int(2));
        let inside = SlicePoint::new(rat(1, 2), rat(1, 2));
        let edge = SlicePoint::new(int(1), int(1));
        let out = SlicePoint::new(int(2), int(2));
        assert!(in_closed_hull(&inside, &[&a, &b, &c]));
        assert!(in_closed_hull(&edge, &[&c, &b, &a]));
        assert!(!in_closed_hull(&out, &[&a, &b, &c]));
        assert!(in_closed_hull(&SlicePoint::new(int(1), int(0)), &[&a, &b]));
        assert!(!on_open_segment(&a, &a, &b));
        assert!(in_closed_hull(&a, &[&a]));
    }
}
