//! The forcing-chain engine: grow a properly colored unit-distance graph by
//! circumcenters of trichromatic unit-circumradius triples (each new point's
//! color is forced to the one color its triple omits) until a unit-distance
//! color conflict certifies that the starting coloring cannot survive.
//!
//! Everything is exact. A point qualifies as a candidate precisely when it
//! is at squared distance 1 from three existing vertices of three distinct
//! colors and is not itself a vertex yet.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::field::{FieldElement, Rational};
use crate::geometry::{circumcircle, dist2, is_unit_circumradius, Point};
use crate::Error;

/// One chain addition: the (lexicographically smallest) trichromatic triple
/// that produced the center, the center itself, and the forced fourth color.
#[derive(Clone, Debug)]
pub struct ForcingStep {
    pub triple: [usize; 3],
    pub center: Point,
    pub forced_color: u8,
}

/// How a chain ended. `Conflict` carries two vertex indices (into the grown
/// vertex list: base vertices first, then additions in step order) at exact
/// unit distance with equal colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ChainOutcome {
    Conflict { a: usize, b: usize },
    Stuck,
    LimitReached,
}

/// A completed chain: the ordered additions and the outcome.
#[derive(Clone, Debug)]
pub struct ForcingTrace {
    pub steps: Vec<ForcingStep>,
    pub outcome: ChainOutcome,
}

/// Reusable geometric precomputation for chains over a fixed base point set:
/// the unit-distance pairs and every unit-circumradius triple with its
/// circumcenter, in lexicographic triple order. Coloring-independent, so one
/// context serves all 13357 restricted colorings.
pub struct ChainContext {
    points: Vec<Point>,
    unit_pairs: Vec<(usize, usize)>,
    /// `(triple, center)` for every triple with circumradius² = 1 whose
    /// center is not a base vertex.
    base_triples: Vec<([usize; 3], Point)>,
}

impl ChainContext {
    pub fn new(points: &[Point]) -> Result<Self, Error> {
        let set: BTreeSet<&Point> = points.iter().collect();
        if set.len() != points.len() {
            return Err(Error::InconsistentSpec(
                "chain base contains duplicate points".into(),
            ));
        }
        let n = points.len();
        let one = FieldElement::one();
        let mut d2 = vec![vec![FieldElement::zero(); n]; n];
        let mut unit_pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let d = dist2(&points[i], &points[j]);
                if d == one {
                    unit_pairs.push((i, j));
                }
                d2[j][i] = d.clone();
                d2[i][j] = d;
            }
        }
        let mut base_triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !is_unit_circumradius(&d2[i][j], &d2[i][k], &d2[j][k]) {
                        continue;
                    }
                    let (center, r2) = circumcircle(&points[i], &points[j], &points[k])
                        .expect("triples passing the radius filter are not collinear");
                    debug_assert_eq!(r2, one);
                    if !set.contains(&center) {
                        base_triples.push(([i, j, k], center));
                    }
                }
            }
        }
        Ok(ChainContext {
            points: points.to_vec(),
            unit_pairs,
            base_triples,
        })
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    fn check_colors(&self, colors: &[u8]) -> Result<(), Error> {
        if colors.len() != self.points.len() {
            return Err(Error::InconsistentSpec(format!(
                "coloring has {} entries for {} points",
                colors.len(),
                self.points.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|c| !(1..=4).contains(*c)) {
            return Err(Error::InconsistentSpec(format!(
                "color {c} is not in 1–4"
            )));
        }
        Ok(())
    }

    /// Any same-colored base unit pair (the zero-step conflict case).
    fn initial_conflict(&self, colors: &[u8]) -> Option<(usize, usize)> {
        self.unit_pairs
            .iter()
            .copied()
            .find(|&(i, j)| colors[i] == colors[j])
    }

    /// Full scan of the base state: every trichromatic unit-circumradius
    /// triple whose center is not yet a vertex, as forcing steps ordered by
    /// center sort key (ties by triple). The head of this list is exactly
    /// what `run_chain` would add first.
    pub fn find_forced_centers(&self, colors: &[u8]) -> Result<Vec<ForcingStep>, Error> {
        self.check_colors(colors)?;
        let mut steps: Vec<ForcingStep> = self
            .base_triples
            .iter()
            .filter(|([i, j, k], _)| trichromatic(colors[*i], colors[*j], colors[*k]))
            .map(|&([i, j, k], ref center)| ForcingStep {
                triple: [i, j, k],
                center: center.clone(),
                forced_color: forced_color(colors[i], colors[j], colors[k]),
            })
            .collect();
        steps.sort_by(|a, b| a.center.cmp(&b.center).then(a.triple.cmp(&b.triple)));
        Ok(steps)
    }

    /// Runs the forcing chain: repeatedly check for a conflict, then add the
    /// candidate with the smallest center (by sort key; remaining ties by
    /// lexicographic triple), colored with its forced color. `Stuck` when no
    /// candidate remains, `LimitReached` after `max_additions` additions.
    ///
    /// An improper initial coloring is reported as a zero-step `Conflict`,
    /// not an error.
    pub fn run_chain(&self, colors: &[u8], max_additions: usize) -> Result<ForcingTrace, Error> {
        self.check_colors(colors)?;
        if let Some((a, b)) = self.initial_conflict(colors) {
            return Ok(ForcingTrace {
                steps: Vec::new(),
                outcome: ChainOutcome::Conflict { a, b },
            });
        }

        let mut grown = Grown::start(self, colors);
        // candidate pool keyed by center; insertion order is lexicographic in
        // the triple, so `or_insert` keeps the lexicographically first triple
        // per center
        let mut candidates: BTreeMap<Point, ([usize; 3], u8)> = BTreeMap::new();
        for &([i, j, k], ref center) in &self.base_triples {
            if trichromatic(colors[i], colors[j], colors[k]) {
                candidates
                    .entry(center.clone())
                    .or_insert(([i, j, k], forced_color(colors[i], colors[j], colors[k])));
            }
        }

        let mut steps = Vec::new();
        loop {
            if steps.len() == max_additions {
                return Ok(ForcingTrace {
                    steps,
                    outcome: ChainOutcome::LimitReached,
                });
            }
            let Some((center, (triple, color))) = candidates.pop_first() else {
                return Ok(ForcingTrace {
                    steps,
                    outcome: ChainOutcome::Stuck,
                });
            };
            if grown.existing.contains(&center) {
                continue; // a later addition landed on this candidate
            }
            let (conflict, new_d2) = grown.add(center.clone(), color);
            steps.push(ForcingStep {
                triple,
                center,
                forced_color: color,
            });
            if let Some(pair) = conflict {
                return Ok(ForcingTrace {
                    steps,
                    outcome: ChainOutcome::Conflict {
                        a: pair.0,
                        b: pair.1,
                    },
                });
            }
            grown.discover(&new_d2, &mut candidates);
        }
    }

    /// Replays a recorded list of additions, validating each as a forced
    /// center: at exact unit distance from at least three existing vertices
    /// covering at least three distinct colors. With exactly three colors
    /// present the forced color is the absent one; with all four present the
    /// color is taken from the lexicographically first trichromatic triple
    /// of unit neighbors (the addition then necessarily conflicts).
    pub fn replay(&self, colors: &[u8], additions: &[Point]) -> Result<ForcingTrace, Error> {
        self.check_colors(colors)?;
        if let Some((a, b)) = self.initial_conflict(colors) {
            return Ok(ForcingTrace {
                steps: Vec::new(),
                outcome: ChainOutcome::Conflict { a, b },
            });
        }
        let mut grown = Grown::start(self, colors);
        let mut steps = Vec::new();
        for (index, p) in additions.iter().enumerate() {
            let fail = |reason: String| Error::ReplayStep { index, reason };
            if grown.existing.contains(p) {
                return Err(fail("point is already a vertex".into()));
            }
            let one = FieldElement::one();
            let unit_neighbors: Vec<usize> = (0..grown.points.len())
                .filter(|&i| dist2(&grown.points[i], p) == one)
                .collect();
            let mut seen = [false; 5];
            for &i in &unit_neighbors {
                seen[grown.colors[i] as usize] = true;
            }
            let distinct = seen.iter().filter(|&&s| s).count();
            if distinct < 3 {
                return Err(fail(format!(
                    "unit neighbors cover only {distinct} distinct colors"
                )));
            }
            let color = if distinct == 3 {
                let absent = (1..=4u8).find(|&c| !seen[c as usize]).expect("one absent");
                absent
            } else {
                // all four colors present: first trichromatic neighbor triple
                first_trichromatic(&unit_neighbors, &grown.colors)
                    .map(|[i, j, k]| {
                        forced_color(grown.colors[i], grown.colors[j], grown.colors[k])
                    })
                    .ok_or_else(|| fail("no trichromatic triple among unit neighbors".into()))?
            };
            let triple = first_trichromatic(&unit_neighbors, &grown.colors)
                .expect("three distinct colors imply a trichromatic triple");
            let (conflict, _) = grown.add(p.clone(), color);
            steps.push(ForcingStep {
                triple,
                center: p.clone(),
                forced_color: color,
            });
            if let Some(pair) = conflict {
                return Ok(ForcingTrace {
                    steps,
                    outcome: ChainOutcome::Conflict {
                        a: pair.0,
                        b: pair.1,
                    },
                });
            }
        }
        Ok(ForcingTrace {
            steps,
            outcome: ChainOutcome::Stuck,
        })
    }
}

fn trichromatic(a: u8, b: u8, c: u8) -> bool {
    a != b && a != c && b != c
}

/// The one color in 1–4 missing from a trichromatic triple.
fn forced_color(a: u8, b: u8, c: u8) -> u8 {
    debug_assert!(trichromatic(a, b, c));
    10 - a - b - c
}

/// Lexicographically first index triple with pairwise distinct colors, from
/// an ascending index list.
fn first_trichromatic(indices: &[usize], colors: &[u8]) -> Option<[usize; 3]> {
    for (a, &i) in indices.iter().enumerate() {
        for (b, &j) in indices.iter().enumerate().skip(a + 1) {
            if colors[i] == colors[j] {
                continue;
            }
            for &k in indices.iter().skip(b + 1) {
                if trichromatic(colors[i], colors[j], colors[k]) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// Coordinates small enough that every intermediate of the cleared
/// circumradius identity fits in `i128` (the worst term is a triple product
/// of `u + v√33` images, so ~2¹¹⁰ at this bound).
const LATTICE_COORD_BOUND: i64 = 1 << 14;

/// The `[a,b,c,d]` form of a point when it exists and is small enough for
/// the integer distance arithmetic below.
fn small_abcd(p: &Point) -> Option<[i64; 4]> {
    p.abcd()
        .filter(|c| c.iter().all(|x| x.abs() <= LATTICE_COORD_BOUND))
}

/// Integer image of a squared distance between lattice points: the exact
/// value is `(u + v√33)/1296` with
/// `u = 3Δa² + 11Δb² + Δc² + 33Δd²` and `v = 2(ΔaΔb + ΔcΔd)`.
fn lat_d2(p: [i64; 4], q: [i64; 4]) -> (i128, i128) {
    let da = (p[0] - q[0]) as i128;
    let db = (p[1] - q[1]) as i128;
    let dc = (p[2] - q[2]) as i128;
    let dd = (p[3] - q[3]) as i128;
    (
        3 * da * da + 11 * db * db + dc * dc + 33 * dd * dd,
        2 * (da * db + dc * dd),
    )
}

/// Product in Z[√33]: `(a₀ + a₁√33)(b₀ + b₁√33)`.
fn zmul(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    (a.0 * b.0 + 33 * a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Whether `u + v√33 ≤ 5184`, i.e. the underlying squared distance is at
/// most 4. Exact sign analysis: when the two terms disagree in sign the
/// comparison reduces to `t²` versus `33v²`.
fn lat_within_four(u: i128, v: i128) -> bool {
    let t = u - 4 * 1296;
    match (t <= 0, v <= 0) {
        (true, true) => true,
        (false, false) => false,
        (false, true) => t * t <= 33 * v * v,
        (true, false) => 33 * v * v <= t * t,
    }
}

/// `is_unit_circumradius` over integer distance images, with the common
/// denominator 1296 cleared: `R² = 1 ⇔ A·B·C = 1296·(2(AB+BC+CA) − (A²+B²+C²))`
/// and `A·B·C ≠ 0`.
fn lat_unit_circumradius(a: (i128, i128), b: (i128, i128), c: (i128, i128)) -> bool {
    let ab = zmul(a, b);
    let bc = zmul(b, c);
    let ca = zmul(c, a);
    let abc = zmul(ab, c);
    let sum_pair = (ab.0 + bc.0 + ca.0, ab.1 + bc.1 + ca.1);
    let sum_sq = {
        let (aa, bb, cc) = (zmul(a, a), zmul(b, b), zmul(c, c));
        (aa.0 + bb.0 + cc.0, aa.1 + bb.1 + cc.1)
    };
    let rhs = (
        1296 * (2 * sum_pair.0 - sum_sq.0),
        1296 * (2 * sum_pair.1 - sum_sq.1),
    );
    abc != (0, 0) && abc == rhs
}

/// A squared distance, in integer form when both endpoints are small
/// lattice points and as a full field element otherwise.
#[derive(Clone)]
enum D2 {
    Lat(i128, i128),
    Gen(FieldElement),
}

impl D2 {
    fn is_one(&self) -> bool {
        match self {
            D2::Lat(u, v) => (*u, *v) == (1296, 0),
            D2::Gen(f) => *f == FieldElement::one(),
        }
    }

    fn within_four(&self) -> bool {
        match self {
            D2::Lat(u, v) => lat_within_four(*u, *v),
            // conservative: keep unless provably beyond the bound
            D2::Gen(f) => f.cmp_int_q33(4) != Some(std::cmp::Ordering::Greater),
        }
    }

    fn to_field(&self) -> FieldElement {
        match self {
            D2::Lat(u, v) => {
                let q = |n: i128| Rational::new(n.into(), 1296.into());
                &FieldElement::from_rational(q(*u)) + &FieldElement::radical_multiple(3, q(*v))
            }
            D2::Gen(f) => f.clone(),
        }
    }
}

/// Mutable chain state: base points plus additions, with exact membership.
/// `lat` caches each vertex's small `[a,b,c,d]` form (when it has one) so
/// the hot distance and circumradius tests run on integers.
struct Grown {
    points: Vec<Point>,
    colors: Vec<u8>,
    existing: BTreeSet<Point>,
    lat: Vec<Option<[i64; 4]>>,
}

impl Grown {
    fn start(ctx: &ChainContext, colors: &[u8]) -> Self {
        Grown {
            points: ctx.points.clone(),
            colors: colors.to_vec(),
            existing: ctx.points.iter().cloned().collect(),
            lat: ctx.points.iter().map(small_abcd).collect(),
        }
    }

    /// Appends a vertex, returning the first unit-distance conflict it
    /// creates (if any) and its squared distances to all older vertices.
    fn add(&mut self, p: Point, color: u8) -> (Option<(usize, usize)>, Vec<D2>) {
        let lp = small_abcd(&p);
        let mut conflict = None;
        let d2_new: Vec<D2> = self
            .points
            .iter()
            .zip(&self.lat)
            .map(|(q, lq)| match (lp, lq) {
                (Some(a), Some(b)) => {
                    let (u, v) = lat_d2(a, *b);
                    D2::Lat(u, v)
                }
                _ => D2::Gen(dist2(q, &p)),
            })
            .collect();
        for (i, d) in d2_new.iter().enumerate() {
            if d.is_one() && self.colors[i] == color && conflict.is_none() {
                conflict = Some((i, self.points.len()));
            }
        }
        self.existing.insert(p.clone());
        self.points.push(p);
        self.colors.push(color);
        self.lat.push(lp);
        (conflict, d2_new)
    }

    /// Adds every new candidate involving the newest vertex: trichromatic
    /// triples (i, j, newest) with circumradius² = 1 whose center is not a
    /// vertex. Pairs are scanned in ascending lexicographic order so the
    /// first-triple-per-center rule matches the full scan.
    ///
    /// Any two points on a unit circle are at squared distance ≤ 4, so only
    /// vertices not beyond that bound from the newest vertex can belong to
    /// one of its triples; the bound and radius tests run on the integer
    /// distance images where available and fall back to exact field
    /// arithmetic otherwise, so the candidate set never depends on which
    /// path was taken.
    fn discover(&self, d2_new: &[D2], candidates: &mut BTreeMap<Point, ([usize; 3], u8)>) {
        let k = self.points.len() - 1;
        let ck = self.colors[k];
        let near: Vec<usize> = (0..k)
            .filter(|&i| self.colors[i] != ck && d2_new[i].within_four())
            .collect();
        for (a, &i) in near.iter().enumerate() {
            let ci = self.colors[i];
            for &j in &near[a + 1..] {
                let cj = self.colors[j];
                if cj == ci {
                    continue;
                }
                let on_unit_circle = match (&d2_new[i], &d2_new[j], self.lat[i], self.lat[j]) {
                    (&D2::Lat(ui, vi), &D2::Lat(uj, vj), Some(li), Some(lj)) => {
                        lat_unit_circumradius(lat_d2(li, lj), (ui, vi), (uj, vj))
                    }
                    _ => {
                        let dij = dist2(&self.points[i], &self.points[j]);
                        is_unit_circumradius(&dij, &d2_new[i].to_field(), &d2_new[j].to_field())
                    }
                };
                if !on_unit_circle {
                    continue;
                }
                let (center, r2) = circumcircle(&self.points[i], &self.points[j], &self.points[k])
                    .expect("radius-1 triples are not collinear");
                debug_assert!(r2 == FieldElement::one());
                if !self.existing.contains(&center) {
                    candidates
                        .entry(center)
                        .or_insert(([i, j, k], forced_color(ci, cj, ck)));
                }
            }
        }
    }
}

/// Aggregate result of running chains over a family of colorings.
#[derive(Clone, Debug, Serialize)]
pub struct EliminateSummary {
    pub total: usize,
    pub conflicts: usize,
    pub stuck: usize,
    pub limit_reached: usize,
    /// Chains that conflicted within at most 3 additions.
    pub within_three: usize,
    /// Chain length → number of colorings.
    pub length_histogram: BTreeMap<usize, usize>,
    /// Indices of colorings that did not reach a conflict.
    pub failures: Vec<usize>,
    /// Size of the deduplicated union of all added vertices.
    pub union_size: usize,
    pub max_length: usize,
}

/// Runs `run_chain` on every coloring, splitting the list across `workers`
/// threads. Returns the summary plus the deduplicated union of all added
/// points (sorted by sort key). Results are independent of the worker count.
pub fn eliminate_all(
    ctx: &ChainContext,
    colorings: &[Vec<u8>],
    max_additions: usize,
    workers: usize,
) -> Result<(EliminateSummary, Vec<Point>), Error> {
    let workers = workers.max(1).min(colorings.len().max(1));
    let chunk = colorings.len().div_ceil(workers);
    let mut per_coloring: Vec<(ChainOutcome, usize)> = Vec::with_capacity(colorings.len());
    let mut union: BTreeSet<Point> = BTreeSet::new();

    let results: Vec<Result<(Vec<(ChainOutcome, usize)>, BTreeSet<Point>), Error>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = colorings
                .chunks(chunk.max(1))
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut rows = Vec::with_capacity(chunk.len());
                        let mut added = BTreeSet::new();
                        for colors in chunk {
                            let trace = ctx.run_chain(colors, max_additions)?;
                            for s in &trace.steps {
                                added.insert(s.center.clone());
                            }
                            rows.push((trace.outcome, trace.steps.len()));
                        }
                        Ok((rows, added))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("chain worker panicked"))
                .collect()
        });
    for r in results {
        let (rows, added) = r?;
        per_coloring.extend(rows);
        union.extend(added);
    }

    let mut summary = EliminateSummary {
        total: per_coloring.len(),
        conflicts: 0,
        stuck: 0,
        limit_reached: 0,
        within_three: 0,
        length_histogram: BTreeMap::new(),
        failures: Vec::new(),
        union_size: union.len(),
        max_length: 0,
    };
    for (idx, (outcome, len)) in per_coloring.iter().enumerate() {
        *summary.length_histogram.entry(*len).or_insert(0) += 1;
        summary.max_length = summary.max_length.max(*len);
        match outcome {
            ChainOutcome::Conflict { .. } => {
                summary.conflicts += 1;
                if *len <= 3 {
                    summary.within_three += 1;
                }
            }
            ChainOutcome::Stuck => {
                summary.stuck += 1;
                summary.failures.push(idx);
            }
            ChainOutcome::LimitReached => {
                summary.limit_reached += 1;
                summary.failures.push(idx);
            }
        }
    }
    Ok((summary, union.into_iter().collect()))
}
