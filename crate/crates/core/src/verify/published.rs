//! Vertex pairs and coordinates as printed, with vertices numbered from 1.

/// Unit pairs of the 13-vertex graph at `d = sqrt(2)`.
pub const ROOT2_UNIT: [(usize, usize); 20] = [
    (1, 6), (1, 7), (1, 9), (1, 12), (2, 3), (2, 5), (2, 9), (3, 4), (3, 7), (4, 5),
    (4, 12), (5, 6), (6, 10), (6, 13), (7, 8), (7, 11), (8, 9), (9, 10), (11, 12), (12, 13),
];

/// Pairs at distance `sqrt(2)` in the same graph.
pub const ROOT2_D: [(usize, usize); 14] = [
    (2, 4), (2, 8), (2, 10), (2, 12), (3, 5), (3, 6), (3, 8), (3, 11), (4, 9), (4, 11),
    (4, 13), (5, 7), (5, 10), (5, 13),
];

/// Unit edges of the 13-vertex graph at the exotic distance.
pub const EXOTIC_UNIT: [(usize, usize); 19] = [
    (1, 3), (1, 5), (1, 8), (1, 12), (2, 4), (2, 6), (2, 7), (2, 11), (3, 5), (3, 9),
    (4, 6), (4, 10), (9, 11), (9, 13), (10, 12), (10, 13), (11, 12), (11, 13), (12, 13),
];

/// Its `d`-edges.
pub const EXOTIC_D: [(usize, usize); 14] = [
    (1, 4), (1, 6), (1, 13), (2, 3), (2, 5), (2, 13), (3, 8), (3, 13), (4, 7), (4, 13),
    (5, 7), (6, 8), (7, 10), (8, 9),
];

/// Images of vertices 2 to 5 after the rotation with cosine 7/8, over `Q(s3, s5)`.
pub const ROOT3_IMAGES: [(&str, &str); 4] = [
    ("7/4", "s3*s5/4"),
    ("(7 + 3*s5)/16", "(-7*s3 + s3*s5)/16"),
    ("7/8", "s3*s5/8"),
    ("(7 - 3*s5)/16", "(7*s3 + s3*s5)/16"),
];

/// Images of vertices 2 to 5 after the rotation with cosine 3/4, over `Q(s2, s3, s7)`.
pub const ROOT6_IMAGES: [(&str, &str); 4] = [
    ("(3*s2*s3 + s2*s7)/8", "(-3*s2 + s2*s3*s7)/8"),
    ("(-3*s2 + s2*s7)/8", "(-3*s2 - s2*s7)/8"),
    (
        "(-3*s2 + 3*s2*s3 + s2*s7 + s2*s3*s7)/16",
        "(-3*s2 - 3*s2*s3 - s2*s7 + s2*s3*s7)/16",
    ),
    (
        "(-3*s2 + 3*s2*s3 - s2*s7 - s2*s3*s7)/16",
        "(3*s2 + 3*s2*s3 - s2*s7 + s2*s3*s7)/16",
    ),
];

/// The three further values of `d^2` at which the wheel closes up.
pub const W6_OTHER_D2: [&str; 3] = ["2 + s2", "(4 + 2*s2)/4", "(8 + 2*s2*s3 - 2*s2)/4"];

/// The exotic `d^2` over the tower `Q(s3, q3, s2)` with `q3^2 = s3`.
pub const EXOTIC_D2: &str = "(q3*2*s2 + 2*s3 + 2)/4";

/// Converts 1-based pairs to sorted 0-based pairs.
pub fn zero_based(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = pairs
        .iter()
        .map(|&(a, b)| (a.min(b) - 1, a.max(b) - 1))
        .collect();
    v.sort_unstable();
    v
}
