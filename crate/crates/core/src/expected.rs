//! Reference tables transcribed as printed, including entries known to be misprinted.

use crate::kfg::{Coordinate, Space};
use crate::lorentz::CoveringGroupId;

/// Products gen(i)·gen(j) in the order M, M′, N, ′N, each printed as diag(p·I, q·I).
/// Entries are (re, im) of p and q.
pub const MULT_TABLE: [[[(i8, i8); 2]; 4]; 4] = [
    [[(1, 0), (1, 0)], [(0, 1), (0, 1)], [(0, 1), (0, -1)], [(-1, 0), (1, 0)]],
    [[(0, 1), (0, 1)], [(-1, 0), (-1, 0)], [(-1, 0), (1, 0)], [(0, -1), (0, 1)]],
    [[(0, -1), (0, 1)], [(1, 0), (-1, 0)], [(1, 0), (1, 0)], [(0, 1), (0, 1)]],
    [[(1, 0), (-1, 0)], [(0, 1), (0, -1)], [(0, 1), (0, 1)], [(-1, 0), (-1, 0)]],
];

/// Signs of T1..T4 on the two generators of each group, as printed.
pub const REP_TABLE_PRINTED: [(CoveringGroupId, [[i8; 4]; 2]); 6] = [
    (CoveringGroupId::GM, [[1, -1, 1, -1], [1, -1, -1, 1]]),
    (CoveringGroupId::GN, [[1, -1, 1, -1], [1, -1, -1, 1]]),
    (CoveringGroupId::Gp, [[1, -1, 1, -1], [1, -1, -1, 1]]),
    (CoveringGroupId::PG, [[1, -1, 1, -1], [1, -1, -1, 1]]),
    // second line repeats the first, making T3 = T1 and T4 = T2
    (CoveringGroupId::G, [[1, -1, 1, -1], [1, -1, 1, -1]]),
    (CoveringGroupId::PGp, [[1, -1, 1, -1], [1, -1, -1, 1]]),
];

/// The misprinted row and its corrected second line.
pub const REP_TABLE_CORRECTION: (CoveringGroupId, [i8; 4]) = (CoveringGroupId::G, [1, -1, -1, 1]);

/// Complex conjugation of the generators in a Majorana basis, as printed: (g, g*).
pub const MAJORANA_PRINTED: [(CoveringGroupId, [(&str, &str); 2]); 6] = [
    (CoveringGroupId::GM, [("M", "-M"), ("M'", "+M'")]),
    (CoveringGroupId::GN, [("N", "-N"), ("'N", "+'N")]),
    (CoveringGroupId::Gp, [("M'", "+M'"), ("N", "-N")]),
    (CoveringGroupId::PG, [("'N", "+'N"), ("M", "-M")]),
    (CoveringGroupId::G, [("M", "-M"), ("N", "-N")]),
    (CoveringGroupId::PGp, [("M'", "+M"), ("'M", "+'M")]),
];

/// +1 for g* = +g, −1 for g* = −g, `None` when the printed entry does not relate g to itself.
pub fn printed_conjugation_sign(g: &str, conj: &str) -> Option<i8> {
    let (sign, rest) = match conj.as_bytes().first() {
        Some(b'+') => (1, &conj[1..]),
        Some(b'-') => (-1, &conj[1..]),
        _ => (1, conj),
    };
    (rest == g).then_some(sign)
}

/// Printed zero/nonzero pattern of ⟨row| coord |col⟩, classes ordered ++, −−, +−, −+.
pub fn selection_pattern(coord: Coordinate, space: Space) -> Vec<Vec<bool>> {
    const X: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    const Y: [[u8; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
    const U: [[u8; 4]; 4] = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]];
    const V: [[u8; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];
    // vector-space tables, classes ++, −−
    const XV: [[u8; 2]; 2] = [[1, 0], [0, 1]];
    const YV: [[u8; 2]; 2] = [[0, 1], [1, 0]];
    const UV: [[u8; 2]; 2] = [[0, 1], [1, 0]];
    const VV: [[u8; 2]; 2] = [[1, 0], [0, 1]];
    let rows: Vec<Vec<u8>> = match (space, coord) {
        (Space::Spinor, Coordinate::X) => X.iter().map(|r| r.to_vec()).collect(),
        (Space::Spinor, Coordinate::Y) => Y.iter().map(|r| r.to_vec()).collect(),
        (Space::Spinor, Coordinate::U) => U.iter().map(|r| r.to_vec()).collect(),
        (Space::Spinor, Coordinate::V) => V.iter().map(|r| r.to_vec()).collect(),
        (Space::Vector, Coordinate::X) => XV.iter().map(|r| r.to_vec()).collect(),
        (Space::Vector, Coordinate::Y) => YV.iter().map(|r| r.to_vec()).collect(),
        (Space::Vector, Coordinate::U) => UV.iter().map(|r| r.to_vec()).collect(),
        (Space::Vector, Coordinate::V) => VV.iter().map(|r| r.to_vec()).collect(),
    };
    rows.into_iter().map(|r| r.into_iter().map(|b| b == 1).collect()).collect()
}
