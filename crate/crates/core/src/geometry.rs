//! Exact planar geometry over Q(√3, √11, √247): the `[a,b,c,d]` point
//! encoding, squared distances, circumcircles, isometries, the order-6
//! symmetry group, and equilateral-triangle detection.
//!
//! Every predicate is an exact field equality; there is no epsilon and no
//! real-number ordering anywhere.

use num_traits::Zero;

use crate::field::{FieldElement, Rational};
use crate::Error;

/// A point of the plane with coordinates in the field.
///
/// Equality, ordering and hashing act on the coordinates only; `provenance`
/// (the `[a,b,c,d]` integers the point was built from, when it was built that
/// way) is carried for display and never participates in identity. The
/// lexicographic `(x, y)` coefficient order is the crate-wide point sort key.
#[derive(Clone)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
    provenance: Option<[i64; 4]>,
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}
impl Eq for Point {}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.x, &self.y).cmp(&(&other.x, &other.y))
    }
}
impl std::hash::Hash for Point {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.abcd() {
            Some([a, b, c, d]) => write!(f, "[{a}, {b}, {c}, {d}]"),
            None => write!(f, "({}, {})", self.x, self.y),
        }
    }
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        Point {
            x,
            y,
            provenance: None,
        }
    }

    pub fn origin() -> Self {
        point_from_abcd(0, 0, 0, 0)
    }

    /// The `[a,b,c,d]` form of this point, stored or reconstructed.
    ///
    /// Reconstruction succeeds exactly when x ∈ span(√3, √11) and
    /// y ∈ span(1, √33) with all four scaled coordinates integral (and within
    /// `i64`); every vertex of the catalog graphs except G79's rotated copy is
    /// of this shape.
    pub fn abcd(&self) -> Option<[i64; 4]> {
        if let Some(p) = self.provenance {
            return Some(p);
        }
        let thirty_six = Rational::from_integer(36.into());
        let scaled = |q: &Rational| -> Option<i64> {
            let s = q * &thirty_six;
            if !s.is_integer() {
                return None;
            }
            i64::try_from(s.to_integer()).ok()
        };
        for (coord, live) in [(&self.x, [1usize, 2]), (&self.y, [0, 3])] {
            for m in 0..8 {
                if !live.contains(&m) && !coord.coeff(m).is_zero() {
                    return None;
                }
            }
        }
        Some([
            scaled(self.x.coeff(1))?,
            scaled(self.x.coeff(2))?,
            scaled(self.y.coeff(0))?,
            scaled(self.y.coeff(3))?,
        ])
    }
}

/// The lattice encoding: `[a,b,c,d] = (a√3/36 + b√11/36, c/36 + d√33/36)`.
pub fn point_from_abcd(a: i64, b: i64, c: i64, d: i64) -> Point {
    let q36 = |n: i64| Rational::new(n.into(), 36.into());
    let x = &FieldElement::radical_multiple(1, q36(a)) + &FieldElement::radical_multiple(2, q36(b));
    let y = &FieldElement::from_rational(q36(c)) + &FieldElement::radical_multiple(3, q36(d));
    Point {
        x,
        y,
        provenance: Some([a, b, c, d]),
    }
}

/// Exact squared distance `(px−qx)² + (py−qy)²`.
pub fn dist2(p: &Point, q: &Point) -> FieldElement {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &(&dx * &dx) + &(&dy * &dy)
}

/// A plane isometry `z ↦ M·z + t` with exactly orthogonal linear part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    /// Row-major linear part.
    pub m: [[FieldElement; 2]; 2],
    pub t: [FieldElement; 2],
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            m: [
                [FieldElement::one(), FieldElement::zero()],
                [FieldElement::zero(), FieldElement::one()],
            ],
            t: [FieldElement::zero(), FieldElement::zero()],
        }
    }

    /// Rotation about the origin with the given exact cosine and sine.
    pub fn rotation(cos: FieldElement, sin: FieldElement) -> Self {
        Isometry {
            m: [[cos.clone(), -&sin], [sin, cos]],
            t: [FieldElement::zero(), FieldElement::zero()],
        }
    }

    /// Reflection across the y-axis, `(x, y) ↦ (−x, y)`.
    pub fn reflect_across_x_equals_0() -> Self {
        Isometry {
            m: [
                [-&FieldElement::one(), FieldElement::zero()],
                [FieldElement::zero(), FieldElement::one()],
            ],
            t: [FieldElement::zero(), FieldElement::zero()],
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let mul = |r: usize, c: usize| {
            &(&self.m[r][0] * &other.m[0][c]) + &(&self.m[r][1] * &other.m[1][c])
        };
        let tr = |r: usize| {
            &(&(&self.m[r][0] * &other.t[0]) + &(&self.m[r][1] * &other.t[1])) + &self.t[r]
        };
        Isometry {
            m: [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]],
            t: [tr(0), tr(1)],
        }
    }

    /// Checks the orthogonality invariant exactly: unit columns, zero dot
    /// product, determinant ±1.
    pub fn is_orthogonal(&self) -> bool {
        let col = |c: usize| (&self.m[0][c], &self.m[1][c]);
        let dot = |a: (&FieldElement, &FieldElement), b: (&FieldElement, &FieldElement)| {
            &(a.0 * b.0) + &(a.1 * b.1)
        };
        dot(col(0), col(0)) == FieldElement::one()
            && dot(col(1), col(1)) == FieldElement::one()
            && dot(col(0), col(1)).is_zero()
    }

    /// Exact determinant of the linear part; ±1 for a valid isometry
    /// (+1 rotation, −1 reflection).
    pub fn det(&self) -> FieldElement {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }
}

/// Exact image of a point. Distance-preserving for every pair whenever the
/// isometry invariant holds.
pub fn apply(iso: &Isometry, p: &Point) -> Point {
    let x = &(&(&iso.m[0][0] * &p.x) + &(&iso.m[0][1] * &p.y)) + &iso.t[0];
    let y = &(&(&iso.m[1][0] * &p.x) + &(&iso.m[1][1] * &p.y)) + &iso.t[1];
    Point::new(x, y)
}

/// Rotation about the origin by 2π/3: cos = −1/2, sin = √3/2.
pub fn rot120() -> Isometry {
    Isometry::rotation(
        FieldElement::ratio(-1, 2),
        FieldElement::radical_multiple(1, Rational::new(1.into(), 2.into())),
    )
}

/// The order-6 dihedral symmetry group of the construction:
/// {id, rot120, rot240} × {id, reflection}, with the reflection across x = 0.
///
/// The three reflections it contains have mirror lines x = 0 and x ± √3y = 0
/// — the lines through the origin and each of the special vertices A, B, C
/// (`symmetry_group_classification` in the tests pins this down). Element
/// order is deterministic.
pub fn symmetry_group() -> Vec<Isometry> {
    let r = rot120();
    let r2 = r.compose(&r);
    let f = Isometry::reflect_across_x_equals_0();
    vec![
        Isometry::identity(),
        r.clone(),
        r2.clone(),
        f.clone(),
        r.compose(&f),
        r2.compose(&f),
    ]
}

/// Closure of `points` under the order-6 group, deduplicated exactly and
/// sorted by the point sort key.
pub fn symmetry_orbit(points: &[Point]) -> Vec<Point> {
    let group = symmetry_group();
    let mut seen = std::collections::BTreeSet::new();
    for p in points {
        for g in &group {
            seen.insert(apply(g, p));
        }
    }
    seen.into_iter().collect()
}

/// Circumcenter and exact squared circumradius of three points, or `None`
/// when they are collinear or coincident (zero determinant).
///
/// Solves the two perpendicular-bisector equations by Cramer's rule; the
/// 2×2 determinant is a field element inverted exactly.
pub fn circumcircle(p1: &Point, p2: &Point, p3: &Point) -> Option<(Point, FieldElement)> {
    let norm2 = |p: &Point| &(&p.x * &p.x) + &(&p.y * &p.y);
    let half = Rational::new(1.into(), 2.into());
    let ax = &p2.x - &p1.x;
    let ay = &p2.y - &p1.y;
    let bx = &p3.x - &p1.x;
    let by = &p3.y - &p1.y;
    let e = (&norm2(p2) - &norm2(p1)).scale(&half);
    let f = (&norm2(p3) - &norm2(p1)).scale(&half);
    let det = &(&ax * &by) - &(&ay * &bx);
    if det.is_zero() {
        return None;
    }
    let inv = det.inverse().expect("nonzero determinant");
    let cx = &(&(&e * &by) - &(&ay * &f)) * &inv;
    let cy = &(&(&ax * &f) - &(&e * &bx)) * &inv;
    let center = Point::new(cx, cy);
    let r2 = dist2(&center, p1);
    debug_assert_eq!(r2, dist2(&center, p2));
    debug_assert_eq!(r2, dist2(&center, p3));
    Some((center, r2))
}

/// Whether three points with the given pairwise squared distances have
/// circumradius² exactly 1, without computing the center.
///
/// From R² = abc/(4K) squared and Heron's formula, with A = a², B = b²,
/// C = c²:  16K² = 2(AB+BC+CA) − (A²+B²+C²)  and  R² = ABC / 16K², so
/// R² = 1 ⇔ ABC = 16K² ≠ 0. For distinct points ABC ≠ 0, hence the plain
/// equality suffices (collinear triples have 16K² = 0 and fail it).
/// `circumradius_filter_agrees_with_circumcircle` in the tests checks the
/// equivalence against `circumcircle` on random triples.
pub fn is_unit_circumradius(a2: &FieldElement, b2: &FieldElement, c2: &FieldElement) -> bool {
    let ab = a2 * b2;
    let bc = b2 * c2;
    let ca = c2 * a2;
    let sum_pair = &(&ab + &bc) + &ca;
    let sum_sq = &(&(a2 * a2) + &(b2 * b2)) + &(c2 * c2);
    let sixteen_k2 = &sum_pair.scale(&Rational::from_integer(2.into())) - &sum_sq;
    let abc = &ab * c2;
    !abc.is_zero() && abc == sixteen_k2
}

/// The direct (`flip = false`) or indirect (`flip = true`) isometry taking
/// `p → p2` and `q → q2`. Requires both segments to have the same nonzero
/// squared length.
///
/// In complex form the direct map is `z ↦ w(z−p) + p2` with
/// `w = (q2−p2)·conj(q−p)/L`, L the common squared length, so `|w|² = 1`
/// exactly and the field stays closed under the construction. The indirect
/// map conjugates first: `z ↦ w'·conj(z−p) + p2` with `w' = (q2−p2)(q−p)/L`.
pub fn align_segments(
    p: &Point,
    q: &Point,
    p2: &Point,
    q2: &Point,
    flip: bool,
) -> Result<Isometry, Error> {
    let l = dist2(p, q);
    if l.is_zero() || l != dist2(p2, q2) {
        return Err(Error::SegmentMismatch);
    }
    let linv = l.inverse().expect("nonzero length");
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    let ex = &q2.x - &p2.x;
    let ey = &q2.y - &p2.y;
    // w = (ex + i·ey)(dx ∓ i·dy) / L, conjugating the source difference for
    // the direct map.
    let m = if !flip {
        let wx = &(&(&ex * &dx) + &(&ey * &dy)) * &linv;
        let wy = &(&(&ey * &dx) - &(&ex * &dy)) * &linv;
        [[wx.clone(), -&wy], [wy, wx]]
    } else {
        let wx = &(&(&ex * &dx) - &(&ey * &dy)) * &linv;
        let wy = &(&(&ex * &dy) + &(&ey * &dx)) * &linv;
        [[wx.clone(), wy.clone()], [wy, -&wx]]
    };
    let iso = Isometry {
        m,
        t: [FieldElement::zero(), FieldElement::zero()],
    };
    // Full map: z ↦ M(z − p) + p2, folded into the translation.
    let mp = apply(&iso, p);
    let t = [&p2.x - &mp.x, &p2.y - &mp.y];
    let iso = Isometry { m: iso.m, t };
    debug_assert_eq!(apply(&iso, p), *p2);
    debug_assert_eq!(apply(&iso, q), *q2);
    Ok(iso)
}

/// An equilateral triangle: three indices into a point list plus the shared
/// exact squared side length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub side2: Rational,
}

/// All unordered triples of `points` whose three pairwise squared distances
/// equal `side2` exactly, in ascending index order.
pub fn find_equilateral_triangles(points: &[Point], side2: &Rational) -> Vec<Triangle> {
    let n = points.len();
    let target = FieldElement::from_rational(side2.clone());
    let mut pair = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if dist2(&points[i], &points[j]) == target {
                pair[i][j] = true;
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !pair[i][j] {
                continue;
            }
            for k in j + 1..n {
                if pair[i][k] && pair[j][k] {
                    out.push(Triangle {
                        vertices: [i, j, k],
                        side2: side2.clone(),
                    });
                }
            }
        }
    }
    out
}
