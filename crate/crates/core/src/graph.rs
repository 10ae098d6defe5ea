//! Unit-distance graphs: a deduplicated point list plus the two exact edge
//! sets the construction cares about — unit edges (squared distance 1) and
//! auxiliary edges (squared distance 11/3).

use std::collections::BTreeMap;

use crate::field::FieldElement;
use crate::geometry::{dist2, Point};
use crate::Error;

/// Exact squared length of an auxiliary edge.
pub fn aux_dist2() -> FieldElement {
    FieldElement::ratio(11, 3)
}

/// A finite unit-distance graph with named special vertices.
///
/// `points` is duplicate-free; both edge lists hold index pairs `(i, j)`
/// with `i < j` in ascending lexicographic order. `specials` names the
/// distinguished vertices (marked pairs, the A/B/C triangle) by index.
#[derive(Clone, Debug)]
pub struct UnitDistanceGraph {
    pub name: String,
    pub points: Vec<Point>,
    pub unit_edges: Vec<(usize, usize)>,
    pub aux_edges: Vec<(usize, usize)>,
    pub specials: BTreeMap<String, usize>,
}

impl UnitDistanceGraph {
    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Adjacency lists over the given edge sets (e.g. unit only, or
    /// unit ∪ aux for the constraint graphs).
    pub fn adjacency(&self, edge_sets: &[&[(usize, usize)]]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.points.len()];
        for edges in edge_sets {
            for &(i, j) in *edges {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        adj
    }

    pub fn special(&self, name: &str) -> Result<usize, Error> {
        self.specials
            .get(name)
            .copied()
            .ok_or_else(|| Error::BadSpecial(name.to_string(), usize::MAX))
    }
}

/// Builds a graph from a raw point list: deduplicates by exact equality
/// (keeping first occurrences, in order), remaps `specials` through the
/// deduplication, and detects both edge kinds by exact all-pairs squared
/// distances.
///
/// Fails if a special index is out of range or two special names collapse
/// onto the same vertex.
pub fn build_graph(
    name: &str,
    points: &[Point],
    specials: &[(&str, usize)],
) -> Result<UnitDistanceGraph, Error> {
    let mut kept: Vec<Point> = Vec::new();
    let mut index_of: BTreeMap<Point, usize> = BTreeMap::new();
    let mut remap = Vec::with_capacity(points.len());
    for p in points {
        let idx = *index_of.entry(p.clone()).or_insert_with(|| {
            kept.push(p.clone());
            kept.len() - 1
        });
        remap.push(idx);
    }

    let mut named = BTreeMap::new();
    let mut used = BTreeMap::new();
    for &(sname, old) in specials {
        if old >= points.len() {
            return Err(Error::BadSpecial(sname.to_string(), old));
        }
        let new = remap[old];
        if let Some(prev) = used.insert(new, sname) {
            return Err(Error::InconsistentSpec(format!(
                "special vertices {prev} and {sname} coincide at index {new}"
            )));
        }
        named.insert(sname.to_string(), new);
    }

    let one = FieldElement::one();
    let aux = aux_dist2();
    let mut unit_edges = Vec::new();
    let mut aux_edges = Vec::new();
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            let d2 = dist2(&kept[i], &kept[j]);
            if d2 == one {
                unit_edges.push((i, j));
            } else if d2 == aux {
                aux_edges.push((i, j));
            }
        }
    }

    Ok(UnitDistanceGraph {
        name: name.to_string(),
        points: kept,
        unit_edges,
        aux_edges,
        specials: named,
    })
}
