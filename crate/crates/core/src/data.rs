//! Embedded vertex tables for the hand-constructed graphs, in the
//! `[a,b,c,d]` integer encoding of `geometry::point_from_abcd`.
//!
//! Orders are load-bearing: catalogs, colorings, reports and the recorded
//! forcing trace all index into these tables as written.

/// The 40-vertex seed graph. Vertices 0 and 1 (the origin and `[0,0,96,0]`,
/// at squared distance 64/9) are the marked pair that every valid coloring
/// is forced to make monochromatic.
pub const G40_ABCD: [[i64; 4]; 40] = [
    [0, 0, 0, 0],
    [0, 0, 96, 0],
    [-33, -3, 33, -3],
    [-33, 3, 33, -9],
    [-33, 3, 33, 3],
    [-33, 3, 63, -3],
    [-33, 9, 63, 3],
    [-18, 0, 48, -6],
    [-18, 0, 48, 6],
    [-18, 6, 48, 0],
    [-15, -9, 15, 3],
    [-15, -3, 15, -3],
    [-15, -3, 45, 3],
    [-15, 3, -15, -3],
    [-15, 3, 15, -9],
    [-15, 3, 15, 3],
    [-15, 3, 81, -3],
    [-15, 3, 111, 3],
    [-15, 9, 15, -3],
    [-15, 9, 81, 3],
    [0, -12, 0, 0],
    [0, -6, 30, 0],
    [0, -6, 66, 0],
    [0, 0, 30, -6],
    [0, 0, 30, 6],
    [0, 0, 66, -6],
    [0, 0, 66, 6],
    [0, 6, 0, -6],
    [0, 6, 0, 6],
    [0, 6, 30, 0],
    [0, 6, 66, 0],
    [0, 6, 96, 6],
    [0, 12, 30, 6],
    [0, 12, 66, 6],
    [15, 3, 15, -3],
    [15, 3, 81, 3],
    [18, 0, 48, -6],
    [18, 6, 48, 0],
    [33, 3, 33, -3],
    [33, 3, 63, 3],
];

/// Index pair `(u, v)` of the marked vertices of `G40_ABCD`.
pub const G40_MARKED_PAIR: (usize, usize) = (0, 1);

/// The 49-vertex graph whose copies tile the final assembly. Vertices 0
/// and 1 are the marked pair P, Q at squared distance 11/3 — the length of
/// the auxiliary edges the copies are aligned to.
pub const G49_ABCD: [[i64; 4]; 49] = [
    [0, 0, 0, 0],
    [0, 0, 0, 12],
    [-6, 0, 0, 6],
    [6, 0, 0, 6],
    [0, 0, -18, 6],
    [0, 0, 18, 6],
    [-3, -9, 9, 9],
    [3, 9, 9, 9],
    [-9, -9, 9, 3],
    [9, 9, 9, 3],
    [-3, -9, -9, 3],
    [3, 9, -9, 3],
    [-12, 0, 0, 0],
    [12, 0, 0, 0],
    [9, -9, -9, 3],
    [-9, 9, -9, 3],
    [3, -9, -9, 9],
    [-3, 9, -9, 9],
    [3, -9, 9, 3],
    [-3, 9, 9, 3],
    [-6, 0, 18, 0],
    [6, 0, 18, 0],
    [-6, 0, -18, 0],
    [6, 0, -18, 0],
    [0, -18, 0, 6],
    [0, 18, 0, 6],
    [-6, -18, 0, 0],
    [6, 18, 0, 0],
    [6, -18, 0, 0],
    [-6, 18, 0, 0],
    [-3, -9, 9, -3],
    [3, 9, 9, -3],
    [9, -9, 9, -3],
    [-9, 9, 9, -3],
    [-9, -9, -9, -3],
    [9, 9, -9, -3],
    [3, -9, -9, -3],
    [-3, 9, -9, -3],
    [-6, 0, 0, -6],
    [6, 0, 0, -6],
    [0, 0, 0, -12],
    [0, 0, -18, -6],
    [0, 0, 18, -6],
    [0, -18, 0, -6],
    [0, 18, 0, -6],
    [-3, -9, -9, -9],
    [-3, 9, 9, -9],
    [3, -9, 9, -9],
    [3, 9, -9, -9],
];

/// Index pair `(P, Q)` of the marked vertices of `G49_ABCD`.
pub const G49_MARKED_PAIR: (usize, usize) = (0, 1);

/// The 51-vertex graph used for the forcing-chain searches. Vertices 0, 1, 2
/// are the marked equilateral triangle A, B, C with squared side 1/3,
/// constrained to be monochromatic.
pub const G51_ABCD: [[i64; 4]; 51] = [
    [0, 0, 12, 0],
    [-6, 0, -6, 0],
    [6, 0, -6, 0],
    [0, 0, -24, 0],
    [0, 0, -6, -6],
    [0, 0, -6, 6],
    [-18, 0, -6, 0],
    [-12, 0, -24, 0],
    [-12, 0, 12, 0],
    [-12, 0, -6, -6],
    [-12, 0, -6, 6],
    [-6, 0, 30, 0],
    [-6, 0, 12, -6],
    [-6, 0, 12, 6],
    [18, 0, -6, 0],
    [12, 0, -24, 0],
    [12, 0, 12, 0],
    [12, 0, -6, -6],
    [12, 0, -6, 6],
    [6, 0, 30, 0],
    [6, 0, 12, -6],
    [6, 0, 12, 6],
    [-9, -9, 3, -3],
    [-9, -9, -15, 3],
    [-9, 9, 3, 3],
    [-9, 9, -15, -3],
    [-3, -9, 3, 3],
    [-3, -9, 21, -3],
    [-3, -9, -15, -3],
    [-3, 9, 3, -3],
    [-3, 9, 21, 3],
    [-3, 9, -15, 3],
    [9, -9, 3, 3],
    [9, -9, -15, -3],
    [9, 9, 3, -3],
    [9, 9, -15, 3],
    [3, -9, 3, -3],
    [3, -9, 21, 3],
    [3, -9, -15, 3],
    [3, 9, 3, 3],
    [3, 9, 21, -3],
    [3, 9, -15, -3],
    [0, 0, 30, 6],
    [-15, -9, -15, -3],
    [15, 9, -15, -3],
    [-6, 0, -24, 6],
    [6, 0, -24, 6],
    [-15, 9, 3, -3],
    [-9, 9, 21, -3],
    [9, -9, 21, -3],
    [15, -9, 3, -3],
];

/// Indices `[A, B, C]` of the marked triangle in `G51_ABCD`.
pub const G51_MARKED_TRIANGLE: [usize; 3] = [0, 1, 2];

/// Generator set for the 627-vertex graph: the orbit of these points under
/// the order-6 symmetry group (`geometry::symmetry_group`) has exactly 627
/// points and contains all of `G51_ABCD`.
pub const G627_GENERATORS_ABCD: [[i64; 4]; 109] = [
    [0, 0, 12, 0],
    [0, 0, -24, 0],
    [0, 0, -6, -6],
    [0, 0, -6, 6],
    [-18, 0, -6, 0],
    [-12, 0, -6, -6],
    [-12, 0, -6, 6],
    [-6, 0, 12, -6],
    [-6, 0, 12, 6],
    [0, 0, 30, 6],
    [-6, 0, -24, 6],
    [-32, -6, -12, 2],
    [-32, 6, -12, -2],
    [-30, -6, -18, -6],
    [-30, -6, -12, 0],
    [-30, -6, 6, 6],
    [-30, -6, 24, 0],
    [-30, 0, 12, 6],
    [-30, 6, -18, 6],
    [-30, 6, -12, 0],
    [-30, 6, 6, -6],
    [-30, 6, 24, 0],
    [-27, -9, -15, 9],
    [-27, -9, 3, 3],
    [-27, -9, 21, -3],
    [-27, -3, -27, 3],
    [-27, -3, -3, 3],
    [-27, 3, -3, -3],
    [-27, 9, -15, 3],
    [-27, 9, 3, -3],
    [-27, 9, 21, 3],
    [-24, -6, -18, 0],
    [-24, -6, 24, -6],
    [-24, 0, -24, 0],
    [-24, 0, -6, -6],
    [-24, 0, -6, 6],
    [-24, 0, 12, 0],
    [-24, 6, -18, 0],
    [-24, 18, -6, 0],
    [-22, -6, -12, 4],
    [-22, 0, -6, -4],
    [-22, 0, -6, 4],
    [-22, 0, 12, -2],
    [-22, 0, 12, 2],
    [-21, -9, -15, -9],
    [-21, -9, -15, 3],
    [-21, -9, 3, -3],
    [-21, -9, 21, 3],
    [-21, -3, -3, -3],
    [-21, -3, 15, 3],
    [-21, 3, -9, -3],
    [-21, 3, -3, 3],
    [-21, 3, 15, -3],
    [-21, 9, -15, -3],
    [-21, 9, -15, 9],
    [-21, 9, 3, -9],
    [-21, 9, 3, 3],
    [-21, 9, 21, -3],
    [-19, -3, -3, -1],
    [-19, 3, -3, 1],
    [-18, -18, 12, 0],
    [-18, -12, 6, 0],
    [-18, 0, 12, -6],
    [-18, 0, 12, 6],
    [-18, 12, 6, 0],
    [-18, 18, -6, 6],
    [-18, 18, 12, 0],
    [-16, 0, 12, -4],
    [-16, 0, 12, 4],
    [-15, -9, 3, 3],
    [-15, -3, -3, 3],
    [-15, -3, 9, 3],
    [-15, 3, -3, -3],
    [-15, 3, 9, -3],
    [-15, 9, -15, 3],
    [-15, 9, 3, 9],
    [-14, -6, 6, 2],
    [-14, 0, 12, 2],
    [-14, 6, 6, -2],
    [-13, -3, -3, 5],
    [-12, -6, -12, 6],
    [-12, -6, 0, -6],
    [-12, -6, 0, 6],
    [-12, -6, 6, 0],
    [-12, 6, 0, -6],
    [-12, 6, 0, 6],
    [-12, 6, 6, 0],
    [-12, 12, 0, 0],
    [-12, 18, -6, 0],
    [-9, -9, 3, 9],
    [-9, -3, -9, 3],
    [-9, -3, -3, -3],
    [-9, -3, 9, -3],
    [-9, 3, -3, 3],
    [-9, 9, 3, -9],
    [-9, 15, -3, 3],
    [-8, -6, 0, -2],
    [-8, 6, 0, 2],
    [-6, -12, 6, 0],
    [-6, -6, 0, 0],
    [-6, -6, 6, -6],
    [-6, 0, -6, 12],
    [-6, 6, 0, 0],
    [-5, -3, -3, 1],
    [-5, 3, -3, -1],
    [-4, -6, 0, 2],
    [-4, 6, 0, -2],
    [-3, -3, -3, 3],
    [-3, 3, -3, 9],
];

/// The restricted 4-coloring of the 51-vertex graph that needs the longest
/// recorded forcing chain, as colors 1–4 in `G51_ABCD` order. A, B, C share
/// color 1.
pub const HARDEST_COLORING: [u8; 51] = [

    1, 1, 1, 2, 2, 2, 3, 2, 4, 4, 2, 4, 3, 2, 3, 4, 3,
    2, 4, 2, 2, 4, 2, 4, 3, 3, 4, 2, 3, 4, 3, 4, 2, 3,
    4, 2, 3, 3, 4, 3, 4, 3, 1, 1, 1, 1, 3, 2, 1, 4, 1,
];

/// The recorded 55-point forcing trace for `HARDEST_COLORING`: the points
/// added, in order, before the chain terminates in a conflict.
pub const RECORDED_ADDITIONS_ABCD: [[i64; 4]; 55] = [
    [6, 0, -24, -6],
    [-15, -9, 3, 3],
    [9, 9, 21, 3],
    [12, 0, 30, -6],
    [-21, -9, -15, 3],
    [-15, -9, 21, -3],
    [15, 9, 21, -3],
    [9, 9, 39, -3],
    [3, 9, 39, 3],
    [-6, -6, 0, 0],
    [3, 3, 9, 3],
    [-9, 9, 39, 3],
    [-15, -9, -33, 3],
    [24, 0, -6, -6],
    [-21, -9, 3, -3],
    [-18, 0, 30, 0],
    [18, 0, 30, 0],
    [-15, -9, 39, 3],
    [9, -3, 15, -3],
    [-3, -3, 15, -3],
    [9, 3, 9, -3],
    [-18, -18, 12, 0],
    [-21, -3, 15, 3],
    [6, -6, 0, 0],
    [15, -9, 39, -3],
    [-18, -18, -24, 0],
    [-3, 3, 9, -3],
    [-18, -12, 6, 0],
    [12, 6, 6, 0],
    [24, 6, 24, -6],
    [-9, 3, 9, 3],
    [9, -3, -21, -3],
    [-3, 3, 45, -3],
    [12, -6, 18, 0],
    [-6, 6, 24, 0],
    [-12, -6, 0, 6],
    [12, 6, -30, 0],
    [12, 6, 42, 0],
    [3, 3, 45, 3],
    [0, -12, 24, 0],
    [27, -3, 33, -3],
    [4, 0, -6, -2],
    [0, -6, 54, 0],
    [-18, -12, 42, 0],
    [30, 6, 24, 0],
    [6, -6, 18, 6],
    [-10, -6, 18, 2],
    [-2, 0, -6, 4],
    [6, -6, 54, 6],
    [30, 6, -12, 0],
    [-10, -6, 54, 2],
    [8, -6, 0, 2],
    [22, 0, 12, -2],
    [8, -6, 36, 2],
    [16, 0, 12, 4],
];
