//! The acceptance gate: one test per release criterion, named and ordered
//! `criterion_01` … `criterion_12`. Each prints a single summary line
//! (visible with `--nocapture`); the harness result line is the pass/fail
//! verdict. Timing bounds are asserted where the criterion states one.
//!
//! Run with: `cargo test -p planechrome-core --test acceptance`

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use planechrome_core::assembly;
use planechrome_core::catalog::{catalog, g79_rotation, points_from_table};
use planechrome_core::coloring::{
    enumerate_canonical, enumerate_canonical_with_edges, solve, solve_with_edges,
    verify_claim2, ConstraintSpec,
};
use planechrome_core::data::{HARDEST_COLORING, RECORDED_ADDITIONS_ABCD};
use planechrome_core::field::{FieldElement, Rational};
use planechrome_core::forcing::{eliminate_all, ChainContext, ChainOutcome};
use planechrome_core::geometry::{
    apply, dist2, point_from_abcd, rot120, symmetry_orbit, Isometry, Point,
};

fn ratio(n: i64, d: i64) -> FieldElement {
    FieldElement::ratio(n, d)
}

fn assert_within(elapsed: Duration, bound: Duration, what: &str) {
    assert!(
        elapsed <= bound,
        "{what} took {elapsed:?}, over the {bound:?} budget"
    );
}

#[test]
fn criterion_01_g40_structure() {
    let t = Instant::now();
    let g = catalog("g40").unwrap();
    assert_eq!(g.order(), 40);
    assert_eq!(g.unit_edges.len(), 82);
    assert_eq!(g.aux_edges.len(), 59);
    let u = g.special("u").unwrap();
    let v = g.special("v").unwrap();
    assert_eq!(dist2(&g.points[u], &g.points[v]), ratio(64, 9));
    assert_within(t.elapsed(), Duration::from_secs(1), "criterion 1");
    println!("criterion 01: PASS — g40 is 40/82/59 with |uv|² = 64/9 ({:?})", t.elapsed());
}

#[test]
fn criterion_02_claim1_marked_pair_forced_equal() {
    let t = Instant::now();
    let g = catalog("g40").unwrap();
    let spec = ConstraintSpec {
        include_aux: true,
        disequalities: vec![(g.special("u").unwrap(), g.special("v").unwrap())],
        ..Default::default()
    };
    let outcome = solve(g, &spec).unwrap();
    assert!(
        outcome.coloring.is_none(),
        "g40 with u≠v should be unsatisfiable"
    );
    assert_within(t.elapsed(), Duration::from_secs(60), "criterion 2");
    println!(
        "criterion 02: PASS — g40 unit+aux with u≠v is unsatisfiable ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_03_claim1_g79_unsatisfiable() {
    let t = Instant::now();
    let g = catalog("g79").unwrap();
    assert_eq!(g.order(), 79);
    assert_eq!(g.unit_edges.len(), 165);
    assert_eq!(g.aux_edges.len(), 118);
    let spec = ConstraintSpec {
        include_aux: true,
        ..Default::default()
    };
    let outcome = solve(g, &spec).unwrap();
    assert!(outcome.coloring.is_none(), "g79 should be unsatisfiable");
    assert_within(t.elapsed(), Duration::from_secs(300), "criterion 3");
    println!(
        "criterion 03: PASS — g79 is 79/165/118 and unsatisfiable ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_04_rotation_validity() {
    let t = Instant::now();
    let rot = g79_rotation();
    assert!(rot.is_orthogonal());
    assert_eq!(rot.det(), FieldElement::one());
    let v = point_from_abcd(0, 0, 96, 0);
    assert_eq!(dist2(&apply(&rot, &v), &v), FieldElement::one());
    assert_within(t.elapsed(), Duration::from_secs(1), "criterion 4");
    println!(
        "criterion 04: PASS — rotation exactly orthogonal, moves [0,0,96,0] by distance 1 ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_05_claim2() {
    let t = Instant::now();
    let report = verify_claim2().unwrap();
    let expect = |name: &str, value: &str| {
        let line = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("missing check {name:?}"));
        assert!(line.pass, "{name}: expected {}, observed {}", line.expected, line.observed);
        assert_eq!(line.observed, value);
    };
    expect("g49 unit edges", "180");
    expect("g49 side²=1/3 triangles", "18");
    expect("canonical proper colorings", "18694");
    expect("colorings with no monochromatic triangle", "44");
    expect("triangle-free colorings with χ(P)=χ(Q)", "0");
    assert_within(t.elapsed(), Duration::from_secs(30 * 60), "criterion 5");
    println!(
        "criterion 05: PASS — claim 2: 18694 colorings, 44 triangle-free, all with P≠Q ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_06_claim3_coloring_counts() {
    let t = Instant::now();
    let g = catalog("g51").unwrap();
    let abc: Vec<usize> = ["A", "B", "C"]
        .iter()
        .map(|n| g.special(n).unwrap())
        .collect();
    let spec = ConstraintSpec {
        equality_groups: vec![abc],
        ..Default::default()
    };
    let mut raw = 0u64;
    let canonical = enumerate_canonical(g, &spec, |colors| {
        let distinct = colors.iter().collect::<BTreeSet<_>>().len() as u32;
        raw += (5 - distinct..=4).map(u64::from).product::<u64>();
        true
    })
    .unwrap();
    assert_eq!(canonical, 13357);
    assert_eq!(raw, 320568);
    println!(
        "criterion 06: PASS — g51 restricted colorings: 13357 canonical, 320568 raw ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_07_g627_structure_and_unsat() {
    let t = Instant::now();
    let g = catalog("g627").unwrap();
    assert_eq!(g.order(), 627);
    assert_eq!(g.unit_edges.len(), 2982);
    // invariance under the order-6 group: the point set is its own orbit
    let orbit = symmetry_orbit(&g.points);
    let original: BTreeSet<&Point> = g.points.iter().collect();
    assert_eq!(orbit.len(), original.len());
    assert!(orbit.iter().all(|p| original.contains(p)));
    let abc: Vec<usize> = ["A", "B", "C"]
        .iter()
        .map(|n| g.special(n).unwrap())
        .collect();
    let spec = ConstraintSpec {
        equality_groups: vec![abc],
        ..Default::default()
    };
    let outcome = solve(g, &spec).unwrap();
    assert!(
        outcome.coloring.is_none(),
        "g627 with A=B=C should be unsatisfiable"
    );
    assert_within(t.elapsed(), Duration::from_secs(60), "criterion 7");
    println!(
        "criterion 07: PASS — g627 is 627/2982, group-invariant, A=B=C unsatisfiable ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_08_forcing_replay() {
    let t = Instant::now();
    let ctx = ChainContext::new(&catalog("g51").unwrap().points).unwrap();
    let additions = points_from_table(&RECORDED_ADDITIONS_ABCD);
    let trace = ctx.replay(&HARDEST_COLORING, &additions).unwrap();
    assert_eq!(trace.steps.len(), 55, "all 55 recorded additions validate");
    assert!(
        matches!(trace.outcome, ChainOutcome::Conflict { .. }),
        "replay should end in Conflict, got {:?}",
        trace.outcome
    );
    assert_within(t.elapsed(), Duration::from_secs(10), "criterion 8");
    println!(
        "criterion 08: PASS — all 55 recorded additions validate, outcome {:?} ({:?})",
        trace.outcome,
        t.elapsed()
    );
}

#[test]
fn criterion_09_forcing_search_reaches_conflict() {
    let t = Instant::now();
    let ctx = ChainContext::new(&catalog("g51").unwrap().points).unwrap();
    let trace = ctx.run_chain(&HARDEST_COLORING, 500).unwrap();
    let elapsed = t.elapsed();
    println!(
        "criterion 09: observed outcome {:?} after {} steps ({:?})",
        trace.outcome,
        trace.steps.len(),
        elapsed
    );
    assert!(
        matches!(trace.outcome, ChainOutcome::Conflict { .. }),
        "run_chain on the hardest coloring must reach Conflict within 500 \
         additions; observed {:?} after {} steps in {:?} (the lexicographic \
         tie-break walks the candidate frontier outward instead of returning \
         to the dense core; see the replay criterion for the recorded trace)",
        trace.outcome,
        trace.steps.len(),
        elapsed
    );
    assert_within(elapsed, Duration::from_secs(300), "criterion 9");
    println!(
        "criterion 09: PASS — hardest-coloring chain conflicts after {} steps ({:?})",
        trace.steps.len(),
        elapsed
    );
}

#[test]
fn criterion_10_eliminate_all_smoke() {
    let t = Instant::now();
    let g = catalog("g51").unwrap();
    let abc: Vec<usize> = ["A", "B", "C"]
        .iter()
        .map(|n| g.special(n).unwrap())
        .collect();
    let spec = ConstraintSpec {
        equality_groups: vec![abc],
        ..Default::default()
    };
    let mut colorings: Vec<Vec<u8>> = Vec::new();
    enumerate_canonical(g, &spec, |colors| {
        colorings.push(colors.to_vec());
        colorings.len() < 100
    })
    .unwrap();
    assert_eq!(colorings.len(), 100);
    let ctx = ChainContext::new(&g.points).unwrap();
    let (summary, union) = eliminate_all(&ctx, &colorings, 500, 1).unwrap();
    println!(
        "criterion 10: observed conflicts {} stuck {} limit {} within-3 {} union {} ({:?})",
        summary.conflicts,
        summary.stuck,
        summary.limit_reached,
        summary.within_three,
        union.len(),
        t.elapsed()
    );
    if summary.within_three * 2 <= summary.total {
        println!(
            "criterion 10: note — within-3 fraction {}/{} is below the recorded \
             >50% companion statistic (soft check, reported not asserted; \
             tie-break dependent)",
            summary.within_three, summary.total
        );
    }
    assert_eq!(
        summary.stuck + summary.limit_reached,
        0,
        "all 100 smoke colorings must reach Conflict; failures at coloring \
         indices {:?}, length histogram {:?}",
        summary.failures,
        summary.length_histogram
    );
    println!(
        "criterion 10: PASS — first 100 restricted colorings all reach Conflict ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_11_assembly_arithmetic() {
    let t = Instant::now();
    // build_plan hard-errors if any placement misses its marked vertices
    let plan = assembly::build_plan().unwrap();
    let stats = assembly::stats(&plan).unwrap();
    assert_eq!(stats.g49_placement_count, 118);
    assert_eq!(stats.g49_layer_pre_dedup, 5782);
    assert_eq!(stats.g627_placement_count, 2124);
    assert!(stats.placements_orthogonal);
    assert_within(t.elapsed(), Duration::from_secs(60), "criterion 11");
    println!(
        "criterion 11: PASS — 118 G49 placements, 5782 pre-dedup vertices, 2124 G627 placements ({:?})",
        t.elapsed()
    );
}

#[test]
fn criterion_12_property_suites() {
    let t = Instant::now();
    let mut rng = XorShift::new(0x5eed_cafe_f00d_d00d);

    // field ring axioms + inverse on randomized inputs
    for _ in 0..10_000 {
        let (a, b, c) = (rng.element(), rng.element(), rng.element());
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
    for _ in 0..1_000 {
        let a = rng.element();
        if !a.is_zero() {
            assert_eq!(&a * &a.inverse().unwrap(), FieldElement::one());
        }
    }

    // solver/enumerator equivalence with 4ⁿ brute force, n ≤ 10
    for round in 0..30 {
        let n = 2 + (round % 9) as usize; // 2..=10
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.next() % 100 < 35 {
                    edges.push((i, j));
                }
            }
        }
        let raw = brute_force_count(n, &edges);
        let mut weighted = 0u64;
        enumerate_canonical_with_edges(n, &[&edges[..]], &ConstraintSpec::default(), |colors| {
            let distinct = colors.iter().collect::<BTreeSet<_>>().len() as u32;
            weighted += (5 - distinct..=4).map(u64::from).product::<u64>();
            true
        })
        .unwrap();
        assert_eq!(weighted, raw, "n={n} edges={edges:?}");
        let outcome = solve_with_edges(n, &[&edges], &ConstraintSpec::default()).unwrap();
        assert_eq!(outcome.coloring.is_some(), raw > 0);
        if let Some(c) = outcome.coloring {
            assert!(edges.iter().all(|&(i, j)| c.colors[i] != c.colors[j]));
        }
    }

    // isometry distance preservation on randomized pairs
    for _ in 0..500 {
        let iso = rng.isometry();
        let p = rng.point();
        let q = rng.point();
        assert_eq!(dist2(&apply(&iso, &p), &apply(&iso, &q)), dist2(&p, &q));
    }

    // orbit idempotence
    for _ in 0..20 {
        let pts: Vec<Point> = (0..1 + (rng.next() % 4)).map(|_| rng.point()).collect();
        let once = symmetry_orbit(&pts);
        let twice = symmetry_orbit(&once);
        assert_eq!(once, twice);
    }

    assert_within(t.elapsed(), Duration::from_secs(60), "criterion 12");
    println!("criterion 12: PASS — property suites green ({:?})", t.elapsed());
}

/// Deterministic xorshift64* — keeps the randomized suites reproducible
/// without pulling an RNG crate into the integration test.
struct XorShift(u64);

impl XorShift {
    fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn small(&mut self) -> i64 {
        (self.next() % 21) as i64 - 10
    }

    fn element(&mut self) -> FieldElement {
        // random small coefficients across all eight basis slots
        let mut coeffs = [(); 8].map(|_| Rational::from_integer(0.into()));
        for c in coeffs.iter_mut() {
            let den = 1 + (self.next() % 6) as i64;
            *c = Rational::new(self.small().into(), den.into());
        }
        FieldElement::from_coeffs(coeffs)
    }

    fn point(&mut self) -> Point {
        point_from_abcd(self.small(), self.small(), self.small(), self.small())
    }

    fn isometry(&mut self) -> Isometry {
        // a random word in the generators of the symmetry group plus a
        // random lattice translation
        let shift = self.point();
        let mut iso = Isometry::identity();
        iso.t = [shift.x, shift.y];
        for _ in 0..(self.next() % 4) {
            let next = match self.next() % 2 {
                0 => rot120(),
                _ => Isometry::reflect_across_x_equals_0(),
            };
            iso = next.compose(&iso);
        }
        iso
    }
}

fn brute_force_count(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut colors = vec![1u8; n];
    let mut count = 0u64;
    loop {
        if edges.iter().all(|&(i, j)| colors[i] != colors[j]) {
            count += 1;
        }
        let mut k = 0;
        while k < n && colors[k] == 4 {
            colors[k] = 1;
            k += 1;
        }
        if k == n {
            return count;
        }
        colors[k] += 1;
    }
}
