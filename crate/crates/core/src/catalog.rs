//! The embedded catalog: the five named graphs of the construction, built
//! on demand and cached for the lifetime of the process.
//!
//! Vertex orders are deterministic and part of the interface: the embedded
//! list order for g40/g49/g51; originals then rotated images for g79; for
//! g627 the 51 g51 vertices first, then the remaining orbit points by sort
//! key.

use std::sync::OnceLock;

use crate::data::{
    G40_ABCD, G40_MARKED_PAIR, G49_ABCD, G49_MARKED_PAIR, G51_ABCD, G51_MARKED_TRIANGLE,
    G627_GENERATORS_ABCD,
};
use crate::field::{FieldElement, Rational};
use crate::geometry::{apply, point_from_abcd, symmetry_orbit, Isometry, Point};
use crate::graph::{build_graph, UnitDistanceGraph};
use crate::Error;

/// Converts an embedded `[a,b,c,d]` table to points.
pub fn points_from_table(table: &[[i64; 4]]) -> Vec<Point> {
    table
        .iter()
        .map(|&[a, b, c, d]| point_from_abcd(a, b, c, d))
        .collect()
}

/// The rotation about the origin joining the two marked g40 vertices across
/// the two halves of g79: cos = 119/128, sin = 3√247/128 (exactly on the
/// unit circle: 119² + 9·247 = 128²).
pub fn g79_rotation() -> Isometry {
    Isometry::rotation(
        FieldElement::ratio(119, 128),
        FieldElement::radical_multiple(4, Rational::new(3.into(), 128.into())),
    )
}

fn build_g40() -> UnitDistanceGraph {
    let (u, v) = G40_MARKED_PAIR;
    build_graph("g40", &points_from_table(&G40_ABCD), &[("u", u), ("v", v)])
        .expect("embedded g40 table is well-formed")
}

fn build_g79() -> UnitDistanceGraph {
    let originals = points_from_table(&G40_ABCD);
    let rot = g79_rotation();
    let mut pts = originals.clone();
    pts.extend(originals.iter().map(|p| apply(&rot, p)));
    let (u, v) = G40_MARKED_PAIR;
    build_graph("g79", &pts, &[("u", u), ("v", v)])
        .expect("embedded g40 table is well-formed")
}

fn build_g49() -> UnitDistanceGraph {
    let (p, q) = G49_MARKED_PAIR;
    build_graph("g49", &points_from_table(&G49_ABCD), &[("P", p), ("Q", q)])
        .expect("embedded g49 table is well-formed")
}

fn build_g51() -> UnitDistanceGraph {
    let [a, b, c] = G51_MARKED_TRIANGLE;
    build_graph(
        "g51",
        &points_from_table(&G51_ABCD),
        &[("A", a), ("B", b), ("C", c)],
    )
    .expect("embedded g51 table is well-formed")
}

fn build_g627() -> UnitDistanceGraph {
    let orbit = symmetry_orbit(&points_from_table(&G627_GENERATORS_ABCD));
    let g51 = points_from_table(&G51_ABCD);
    let in_g51: std::collections::BTreeSet<_> = g51.iter().cloned().collect();
    let mut pts = g51.clone();
    // symmetry_orbit is already sorted by sort key, so the tail order is the
    // required one.
    pts.extend(orbit.iter().filter(|p| !in_g51.contains(p)).cloned());
    assert_eq!(
        pts.len(),
        orbit.len(),
        "the g51 vertices are part of the generator orbit"
    );
    let [a, b, c] = G51_MARKED_TRIANGLE;
    build_graph("g627", &pts, &[("A", a), ("B", b), ("C", c)])
        .expect("embedded generator table is well-formed")
}

/// Returns the named catalog graph (one of `g40`, `g79`, `g49`, `g51`,
/// `g627`), built on first use.
pub fn catalog(name: &str) -> Result<&'static UnitDistanceGraph, Error> {
    static G40: OnceLock<UnitDistanceGraph> = OnceLock::new();
    static G79: OnceLock<UnitDistanceGraph> = OnceLock::new();
    static G49: OnceLock<UnitDistanceGraph> = OnceLock::new();
    static G51: OnceLock<UnitDistanceGraph> = OnceLock::new();
    static G627: OnceLock<UnitDistanceGraph> = OnceLock::new();
    match name {
        "g40" => Ok(G40.get_or_init(build_g40)),
        "g79" => Ok(G79.get_or_init(build_g79)),
        "g49" => Ok(G49.get_or_init(build_g49)),
        "g51" => Ok(G51.get_or_init(build_g51)),
        "g627" => Ok(G627.get_or_init(build_g627)),
        other => Err(Error::Parse(format!("unknown catalog graph: {other}"))),
    }
}

/// All catalog graph names, in presentation order.
pub const CATALOG_NAMES: [&str; 5] = ["g40", "g79", "g49", "g51", "g627"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{dist2, find_equilateral_triangles, symmetry_group};
    use std::collections::BTreeMap;

    #[test]
    fn unknown_name_is_an_error() {
        assert!(catalog("g9000").is_err());
    }

    #[test]
    fn caching_returns_the_same_graph() {
        let a = catalog("g40").unwrap() as *const _;
        let b = catalog("g40").unwrap() as *const _;
        assert_eq!(a, b);
    }

    #[test]
    fn g40_shape() {
        let g = catalog("g40").unwrap();
        assert_eq!(
            (g.order(), g.unit_edges.len(), g.aux_edges.len()),
            (40, 82, 59)
        );
        let u = g.special("u").unwrap();
        let v = g.special("v").unwrap();
        assert_eq!(
            dist2(&g.points[u], &g.points[v]),
            FieldElement::ratio(64, 9)
        );
    }

    #[test]
    fn g79_shape_and_cross_edge() {
        let g = catalog("g79").unwrap();
        assert_eq!(
            (g.order(), g.unit_edges.len(), g.aux_edges.len()),
            (79, 165, 118)
        );
        // first 40 vertices are g40 in order
        let g40 = catalog("g40").unwrap();
        assert_eq!(&g.points[..40], &g40.points[..]);

        // exactly one unit edge joins an original to its own image, and it is
        // the marked vertex v = [0,0,96,0]
        let rot = g79_rotation();
        let index_of: BTreeMap<&Point, usize> =
            g.points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let unit: std::collections::BTreeSet<_> = g.unit_edges.iter().copied().collect();
        let mut self_image_edges = Vec::new();
        for i in 0..40 {
            let img = apply(&rot, &g.points[i]);
            let j = index_of[&img];
            let key = (i.min(j), i.max(j));
            if i != j && unit.contains(&key) {
                self_image_edges.push(i);
            }
        }
        assert_eq!(self_image_edges, vec![g.special("v").unwrap()]);
    }

    #[test]
    fn g49_shape_and_marked_pair() {
        let g = catalog("g49").unwrap();
        assert_eq!(g.order(), 49);
        assert_eq!(g.unit_edges.len(), 180);
        let p = g.special("P").unwrap();
        let q = g.special("Q").unwrap();
        assert_eq!((p, q), (0, 1));
        assert_eq!(
            dist2(&g.points[p], &g.points[q]),
            FieldElement::ratio(11, 3)
        );
        // the copies placed during assembly carry 18 equilateral triangles of
        // squared side 1/3 each
        let side2 = Rational::new(1.into(), 3.into());
        assert_eq!(find_equilateral_triangles(&g.points, &side2).len(), 18);
    }

    #[test]
    fn g51_shape_and_marked_triangle() {
        let g = catalog("g51").unwrap();
        assert_eq!(g.order(), 51);
        assert_eq!(g.unit_edges.len(), 180);
        let abc = ["A", "B", "C"].map(|n| g.special(n).unwrap());
        assert_eq!(abc, [0, 1, 2]);
        let third = FieldElement::ratio(1, 3);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(dist2(&g.points[abc[i]], &g.points[abc[j]]), third);
        }
    }

    #[test]
    fn g627_shape_and_g51_prefix() {
        let g = catalog("g627").unwrap();
        assert_eq!(g.order(), 627);
        assert_eq!(g.unit_edges.len(), 2982);
        let g51 = catalog("g51").unwrap();
        assert_eq!(&g.points[..51], &g51.points[..]);
        // the tail is sorted by the point sort key
        let tail = &g.points[51..];
        assert!(tail.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn g627_is_invariant_under_the_symmetry_group() {
        let g = catalog("g627").unwrap();
        let index_of: BTreeMap<&Point, usize> =
            g.points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let unit: std::collections::BTreeSet<_> = g.unit_edges.iter().copied().collect();
        for iso in symmetry_group() {
            // the group permutes the vertex set…
            let perm: Vec<usize> = g
                .points
                .iter()
                .map(|p| *index_of.get(&apply(&iso, p)).expect("orbit is closed"))
                .collect();
            let mut seen = vec![false; perm.len()];
            for &t in &perm {
                assert!(!seen[t]);
                seen[t] = true;
            }
            // …and preserves unit edges
            for &(i, j) in &g.unit_edges {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                assert!(unit.contains(&(a, b)));
            }
        }
    }
}
