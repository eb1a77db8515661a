//! The four polyform grids and their rigid-motion groups.
//!
//! Every supported grid is a periodic tiling of the plane whose full symmetry
//! group splits as `translations ⋊ point group`, with the point group fixed
//! about a chosen origin feature:
//!
//! * `Square` — unit squares `(x, y)`; point group is the dihedral group of
//!   order 8 about the centre of cell `(0, 0)`.
//! * `Hex` — pointy-top hexagons in axial coordinates `(q, r)`; point group of
//!   order 12 about the centre of hexagon `(0, 0)`.
//! * `Iamond` — unit triangles `(q, r, up|down)` on the lattice spanned by
//!   `e1 = (1, 0)` and `e2 = (1/2, √3/2)`; the up triangle `(q, r)` has corners
//!   `L(q,r), L(q+1,r), L(q,r+1)` and the down triangle fills the other half of
//!   the rhombus. Point group of order 12 about the lattice vertex `L(0, 0)`.
//! * `Kite` — each hexagon is cut into six kites by the segments joining its
//!   centre to its edge midpoints. Kite `k` of hexagon `(q, r)` spans the
//!   angular sector `[60k°, 60(k+1)°]` about the hexagon centre. Point group of
//!   order 12 about the centre of hexagon `(0, 0)`.
//!
//! A motion is stored as a point-group index plus a lattice translation, which
//! is bijective with the affine matrix of the motion but keeps all arithmetic
//! in integers. Point index `j + N*f` (N = 4 or 6 rotations, `f` the mirror
//! bit) denotes `rot^j ∘ mirror^f`: the mirror is the reflection across the
//! x-axis of the conventions above, applied before the rotation.

use crate::Error;
use std::fmt;
use std::str::FromStr;

/// Which of the four supported grids a cell or motion lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GridKind {
    Square,
    Hex,
    Iamond,
    Kite,
}

impl GridKind {
    pub const ALL: [GridKind; 4] = [
        GridKind::Square,
        GridKind::Hex,
        GridKind::Iamond,
        GridKind::Kite,
    ];

    /// Number of pure rotations in the point group (4 for squares, 6 otherwise).
    pub fn rotation_count(self) -> u8 {
        match self {
            GridKind::Square => 4,
            _ => 6,
        }
    }

    /// Order of the full point group: 8 for squares, 12 for the others.
    pub fn point_group_order(self) -> u8 {
        self.rotation_count() * 2
    }

    /// Number of cells sharing one lattice coordinate `(a, b)`.
    pub fn sub_count(self) -> u8 {
        match self {
            GridKind::Square | GridKind::Hex => 1,
            GridKind::Iamond => 2,
            GridKind::Kite => 6,
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GridKind::Square => "square",
            GridKind::Hex => "hex",
            GridKind::Iamond => "iamond",
            GridKind::Kite => "kite",
        };
        f.write_str(s)
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "square" => Ok(GridKind::Square),
            "hex" => Ok(GridKind::Hex),
            "iamond" => Ok(GridKind::Iamond),
            "kite" => Ok(GridKind::Kite),
            _ => Err(Error::parse(s, "unknown grid kind")),
        }
    }
}

/// One grid cell.
///
/// `(a, b)` are the lattice coordinates (`x, y` for squares, axial `q, r`
/// otherwise) and `sub` selects the cell within the lattice site: always 0 for
/// squares and hexagons, 0 = up / 1 = down for iamonds, and the kite index
/// 0..6 for kites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub a: i32,
    pub b: i32,
    pub sub: u8,
}

impl Cell {
    pub fn square(x: i32, y: i32) -> Cell {
        Cell { a: x, b: y, sub: 0 }
    }

    pub fn hex(q: i32, r: i32) -> Cell {
        Cell { a: q, b: r, sub: 0 }
    }

    pub fn iamond(q: i32, r: i32, up: bool) -> Cell {
        Cell {
            a: q,
            b: r,
            sub: if up { 0 } else { 1 },
        }
    }

    pub fn kite(q: i32, r: i32, k: u8) -> Cell {
        debug_assert!(k < 6);
        Cell { a: q, b: r, sub: k }
    }

    fn translated(self, t: (i32, i32)) -> Cell {
        Cell {
            a: self.a + t.0,
            b: self.b + t.1,
            sub: self.sub,
        }
    }
}

/// Parse a cell token in the CLI syntax: `x,y` (square), `q,r` (hex),
/// `q,r,u|d` (iamond), `q,r,k` (kite).
pub fn parse_cell(grid: GridKind, token: &str) -> Result<Cell, Error> {
    let parts: Vec<&str> = token.split(',').map(str::trim).collect();
    let int = |s: &str| -> Result<i32, Error> {
        s.parse::<i32>()
            .map_err(|_| Error::parse(token, "expected an integer coordinate"))
    };
    match grid {
        GridKind::Square | GridKind::Hex => {
            if parts.len() != 2 {
                return Err(Error::parse(token, "expected two coordinates"));
            }
            Ok(Cell {
                a: int(parts[0])?,
                b: int(parts[1])?,
                sub: 0,
            })
        }
        GridKind::Iamond => {
            if parts.len() != 3 {
                return Err(Error::parse(token, "expected q,r,u|d"));
            }
            let sub = match parts[2] {
                "u" => 0,
                "d" => 1,
                _ => return Err(Error::parse(token, "orientation must be u or d")),
            };
            Ok(Cell {
                a: int(parts[0])?,
                b: int(parts[1])?,
                sub,
            })
        }
        GridKind::Kite => {
            if parts.len() != 3 {
                return Err(Error::parse(token, "expected q,r,k"));
            }
            let k = int(parts[2])?;
            if !(0..6).contains(&k) {
                return Err(Error::parse(token, "kite index must be in 0..6"));
            }
            Ok(Cell {
                a: int(parts[0])?,
                b: int(parts[1])?,
                sub: k as u8,
            })
        }
    }
}

/// Format a cell in the syntax accepted by [`parse_cell`].
pub fn format_cell(grid: GridKind, c: Cell) -> String {
    match grid {
        GridKind::Square | GridKind::Hex => format!("{},{}", c.a, c.b),
        GridKind::Iamond => format!("{},{},{}", c.a, c.b, if c.sub == 0 { "u" } else { "d" }),
        GridKind::Kite => format!("{},{},{}", c.a, c.b, c.sub),
    }
}

/// A rigid motion of the grid: a point-group element followed by a lattice
/// translation. Acting on a cell `c` gives `point(c) + translation`.
///
/// The pair is a faithful, exhaustive parametrization of the grid's symmetry
/// group, so a motion doubles as an asymmetric marker for the copy of a shape
/// it produces: two copies are "the same" exactly when their motions are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RigidMotion {
    /// Index into the grid's point group; 0 is the identity.
    pub point: u8,
    /// Lattice translation in the grid's `(a, b)` coordinates.
    pub translation: (i32, i32),
}

impl RigidMotion {
    pub const IDENTITY: RigidMotion = RigidMotion {
        point: 0,
        translation: (0, 0),
    };

    pub fn new(point: u8, translation: (i32, i32)) -> RigidMotion {
        RigidMotion { point, translation }
    }

    pub fn is_identity(self) -> bool {
        self == RigidMotion::IDENTITY
    }
}

fn point_parts(grid: GridKind, p: u8) -> (u8, bool) {
    let n = grid.rotation_count();
    debug_assert!(p < 2 * n);
    (p % n, p >= n)
}

fn point_index(grid: GridKind, rot: u8, mirror: bool) -> u8 {
    let n = grid.rotation_count();
    rot % n + if mirror { n } else { 0 }
}

fn compose_point(grid: GridKind, p1: u8, p2: u8) -> u8 {
    let n = grid.rotation_count();
    let (j1, f1) = point_parts(grid, p1);
    let (j2, f2) = point_parts(grid, p2);
    // rot^j1 mir^f1 ∘ rot^j2 mir^f2 = rot^(j1 ± j2) mir^(f1 xor f2)
    let j = if f1 { (j1 + n - j2) % n } else { (j1 + j2) % n };
    point_index(grid, j, f1 ^ f2)
}

fn invert_point(grid: GridKind, p: u8) -> u8 {
    let n = grid.rotation_count();
    let (j, f) = point_parts(grid, p);
    if f {
        p // reflections are involutions
    } else {
        point_index(grid, (n - j) % n, false)
    }
}

/// Linear action of a point-group element on a lattice vector.
fn point_apply_vec(grid: GridKind, p: u8, v: (i32, i32)) -> (i32, i32) {
    let (j, f) = point_parts(grid, p);
    let (mut a, mut b) = v;
    if f {
        match grid {
            GridKind::Square => b = -b,
            _ => (a, b) = (a + b, -b),
        }
    }
    for _ in 0..j {
        match grid {
            GridKind::Square => (a, b) = (-b, a),
            _ => (a, b) = (-b, a + b),
        }
    }
    (a, b)
}

/// Action of a point-group element on a cell.
fn point_apply_cell(grid: GridKind, p: u8, c: Cell) -> Cell {
    match grid {
        GridKind::Square | GridKind::Hex => {
            let (a, b) = point_apply_vec(grid, p, (c.a, c.b));
            Cell { a, b, sub: 0 }
        }
        GridKind::Iamond => {
            // Tripled-centroid coordinates make the point action linear: the
            // up triangle (q, r) has centroid (q + 1/3, r + 1/3) and the down
            // triangle (q + 2/3, r + 2/3) in lattice coordinates.
            let s = c.sub as i32;
            let u = 3 * c.a + 1 + s;
            let v = 3 * c.b + 1 + s;
            let (u, v) = point_apply_vec(grid, p, (u, v));
            let (ru, rv) = (u.rem_euclid(3), v.rem_euclid(3));
            debug_assert_eq!(ru, rv, "point map must preserve triangle centroids");
            debug_assert!(ru == 1 || ru == 2);
            let s = ru - 1;
            Cell {
                a: (u - 1 - s).div_euclid(3),
                b: (v - 1 - s).div_euclid(3),
                sub: s as u8,
            }
        }
        GridKind::Kite => {
            let (j, f) = point_parts(grid, p);
            let (a, b) = point_apply_vec(grid, p, (c.a, c.b));
            let k = if f { 5 - c.sub } else { c.sub };
            Cell {
                a,
                b,
                sub: (k + j) % 6,
            }
        }
    }
}

/// Apply a rigid motion to a cell.
pub fn apply_motion(grid: GridKind, m: RigidMotion, c: Cell) -> Cell {
    point_apply_cell(grid, m.point, c).translated(m.translation)
}

/// Group composition: `apply(compose(a, b), c) = apply(a, apply(b, c))`.
pub fn compose(grid: GridKind, a: RigidMotion, b: RigidMotion) -> RigidMotion {
    let t = point_apply_vec(grid, a.point, b.translation);
    RigidMotion {
        point: compose_point(grid, a.point, b.point),
        translation: (a.translation.0 + t.0, a.translation.1 + t.1),
    }
}

/// Group inverse: `compose(m, invert(m))` is the identity.
pub fn invert(grid: GridKind, m: RigidMotion) -> RigidMotion {
    let p = invert_point(grid, m.point);
    let t = point_apply_vec(grid, p, m.translation);
    RigidMotion {
        point: p,
        translation: (-t.0, -t.1),
    }
}

/// True when `m ∘ m` is the identity (the identity itself included).
pub fn is_involution(grid: GridKind, m: RigidMotion) -> bool {
    compose(grid, m, m).is_identity()
}

/// All point-group elements of the grid, as motions with zero translation.
/// Element 0 is the identity.
pub fn point_group(grid: GridKind) -> Vec<RigidMotion> {
    (0..grid.point_group_order())
        .map(|p| RigidMotion::new(p, (0, 0)))
        .collect()
}

/// Axial direction of the hexagon sharing edge `k` (edge midpoints sit at
/// angle `60k°` from the hexagon centre).
const HEX_DIRS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// All cells sharing a full edge with `c`: 4 for squares, 6 for hexagons,
/// 3 for iamonds, 4 for kites.
pub fn edge_neighbors(grid: GridKind, c: Cell) -> Vec<Cell> {
    match grid {
        GridKind::Square => vec![
            Cell::square(c.a + 1, c.b),
            Cell::square(c.a - 1, c.b),
            Cell::square(c.a, c.b + 1),
            Cell::square(c.a, c.b - 1),
        ],
        GridKind::Hex => HEX_DIRS
            .iter()
            .map(|&(dq, dr)| Cell::hex(c.a + dq, c.b + dr))
            .collect(),
        GridKind::Iamond => {
            let (q, r) = (c.a, c.b);
            if c.sub == 0 {
                vec![
                    Cell::iamond(q, r, false),
                    Cell::iamond(q - 1, r, false),
                    Cell::iamond(q, r - 1, false),
                ]
            } else {
                vec![
                    Cell::iamond(q, r, true),
                    Cell::iamond(q + 1, r, true),
                    Cell::iamond(q, r + 1, true),
                ]
            }
        }
        GridKind::Kite => {
            let (q, r, k) = (c.a, c.b, c.sub);
            let d1 = HEX_DIRS[k as usize];
            let d2 = HEX_DIRS[((k + 1) % 6) as usize];
            vec![
                Cell::kite(q, r, (k + 1) % 6),
                Cell::kite(q, r, (k + 5) % 6),
                Cell::kite(q + d1.0, r + d1.1, (k + 2) % 6),
                Cell::kite(q + d2.0, r + d2.1, (k + 4) % 6),
            ]
        }
    }
}

/// The six triangles having lattice vertex `(a, b)` as a corner.
fn iamond_cells_at_vertex(a: i32, b: i32) -> [Cell; 6] {
    [
        Cell::iamond(a, b, true),
        Cell::iamond(a - 1, b, true),
        Cell::iamond(a, b - 1, true),
        Cell::iamond(a - 1, b, false),
        Cell::iamond(a - 1, b - 1, false),
        Cell::iamond(a, b - 1, false),
    ]
}

/// All cells other than `c` whose closure shares at least one boundary point
/// with `c`: 8 for squares, 6 for hexagons, 12 for iamonds, 9 for kites.
pub fn point_neighbors(grid: GridKind, c: Cell) -> Vec<Cell> {
    match grid {
        GridKind::Square => {
            let mut out = Vec::with_capacity(8);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    if (dx, dy) != (0, 0) {
                        out.push(Cell::square(c.a + dx, c.b + dy));
                    }
                }
            }
            out
        }
        // Three hexagons meet at every vertex, pairwise edge-sharing, so
        // vertex neighbours coincide with edge neighbours.
        GridKind::Hex => edge_neighbors(grid, c),
        GridKind::Iamond => {
            let (q, r) = (c.a, c.b);
            let corners = if c.sub == 0 {
                [(q, r), (q + 1, r), (q, r + 1)]
            } else {
                [(q + 1, r), (q + 1, r + 1), (q, r + 1)]
            };
            let mut out: Vec<Cell> = corners
                .iter()
                .flat_map(|&(a, b)| iamond_cells_at_vertex(a, b))
                .filter(|&d| d != c)
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        }
        GridKind::Kite => {
            let (q, r, k) = (c.a, c.b, c.sub);
            let mut out: Vec<Cell> = (1..6).map(|d| Cell::kite(q, r, (k + d) % 6)).collect();
            let d1 = HEX_DIRS[k as usize];
            let d2 = HEX_DIRS[((k + 1) % 6) as usize];
            out.push(Cell::kite(q + d1.0, r + d1.1, (k + 2) % 6));
            out.push(Cell::kite(q + d1.0, r + d1.1, (k + 3) % 6));
            out.push(Cell::kite(q + d2.0, r + d2.1, (k + 3) % 6));
            out.push(Cell::kite(q + d2.0, r + d2.1, (k + 4) % 6));
            out
        }
    }
}

/// Per-grid scale taking the integer coordinates of [`cell_vertices`] to
/// Cartesian lengths: real point = `(x * scale.0, y * scale.1)`.
pub fn vertex_scale(grid: GridKind) -> (f64, f64) {
    let s3 = 3f64.sqrt();
    match grid {
        GridKind::Square => (1.0, 1.0),
        GridKind::Hex | GridKind::Kite => (s3 / 4.0, 0.25),
        GridKind::Iamond => (0.5, s3 / 2.0),
    }
}

/// Corner offsets of a hexagon: vertex `k` at angle `30° + 60k°`, in the
/// scaled integer coordinates shared by the hex and kite grids.
const HEX_CORNERS: [(i64, i64); 6] = [(2, 2), (0, 4), (-2, 2), (-2, -2), (0, -4), (2, -2)];
/// Edge-midpoint offsets of a hexagon: midpoint `k` at angle `60k°`.
const HEX_MIDPOINTS: [(i64, i64); 6] = [(2, 0), (1, 3), (-1, 3), (-2, 0), (-1, -3), (1, -3)];

/// Vertices of the cell polygon in counterclockwise order, in exact
/// scaled-integer coordinates (see [`vertex_scale`]).
pub fn cell_vertices(grid: GridKind, c: Cell) -> Vec<(i64, i64)> {
    let (a, b) = (c.a as i64, c.b as i64);
    match grid {
        GridKind::Square => vec![(a, b), (a + 1, b), (a + 1, b + 1), (a, b + 1)],
        GridKind::Hex => {
            let (cx, cy) = (4 * a + 2 * b, 6 * b);
            HEX_CORNERS
                .iter()
                .map(|&(dx, dy)| (cx + dx, cy + dy))
                .collect()
        }
        GridKind::Iamond => {
            // Lattice vertex L(q, r) sits at scaled (2q + r, r).
            let l = |q: i64, r: i64| (2 * q + r, r);
            if c.sub == 0 {
                vec![l(a, b), l(a + 1, b), l(a, b + 1)]
            } else {
                vec![l(a + 1, b), l(a + 1, b + 1), l(a, b + 1)]
            }
        }
        GridKind::Kite => {
            let (cx, cy) = (4 * a + 2 * b, 6 * b);
            let k = c.sub as usize;
            let m1 = HEX_MIDPOINTS[k];
            let v = HEX_CORNERS[k];
            let m2 = HEX_MIDPOINTS[(k + 1) % 6];
            vec![
                (cx, cy),
                (cx + m1.0, cy + m1.1),
                (cx + v.0, cy + v.1),
                (cx + m2.0, cy + m2.1),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn shared_vertices(grid: GridKind, c: Cell, d: Cell) -> usize {
        let vc: BTreeSet<_> = cell_vertices(grid, c).into_iter().collect();
        let vd: BTreeSet<_> = cell_vertices(grid, d).into_iter().collect();
        vc.intersection(&vd).count()
    }

    /// Geometric adjacency oracle: cells share an edge when they share two
    /// polygon vertices, and touch when they share at least one.
    fn scan_cells(grid: GridKind) -> Vec<Cell> {
        let mut out = Vec::new();
        for a in -5..=5 {
            for b in -5..=5 {
                for sub in 0..grid.sub_count() {
                    out.push(Cell { a, b, sub });
                }
            }
        }
        out
    }

    #[test]
    fn point_group_sizes() {
        assert_eq!(point_group(GridKind::Square).len(), 8);
        assert_eq!(point_group(GridKind::Hex).len(), 12);
        assert_eq!(point_group(GridKind::Iamond).len(), 12);
        assert_eq!(point_group(GridKind::Kite).len(), 12);
    }

    #[test]
    fn square_edge_neighbors() {
        let got: BTreeSet<_> = edge_neighbors(GridKind::Square, Cell::square(0, 0))
            .into_iter()
            .collect();
        let want: BTreeSet<_> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .iter()
            .map(|&(x, y)| Cell::square(x, y))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn square_point_neighbors_are_king_moves() {
        let got = point_neighbors(GridKind::Square, Cell::square(0, 0));
        assert_eq!(got.len(), 8);
        assert!(got.contains(&Cell::square(1, 1)));
    }

    #[test]
    fn hex_point_neighbors_coincide_with_edges() {
        let c = Cell::hex(2, -1);
        let e: BTreeSet<_> = edge_neighbors(GridKind::Hex, c).into_iter().collect();
        let p: BTreeSet<_> = point_neighbors(GridKind::Hex, c).into_iter().collect();
        assert_eq!(e.len(), 6);
        assert_eq!(e, p);
    }

    #[test]
    fn neighbor_counts_per_grid() {
        for grid in GridKind::ALL {
            for sub in 0..grid.sub_count() {
                let c = Cell { a: 1, b: -2, sub };
                let e = edge_neighbors(grid, c).len();
                let p = point_neighbors(grid, c).len();
                let (we, wp) = match grid {
                    GridKind::Square => (4, 8),
                    GridKind::Hex => (6, 6),
                    GridKind::Iamond => (3, 12),
                    GridKind::Kite => (4, 9),
                };
                assert_eq!(e, we, "{grid} edge count");
                assert_eq!(p, wp, "{grid} point count");
            }
        }
    }

    #[test]
    fn adjacency_matches_geometry() {
        for grid in GridKind::ALL {
            let cells = scan_cells(grid);
            for sub in 0..grid.sub_count() {
                let c = Cell { a: 0, b: 0, sub };
                let edges: BTreeSet<_> = edge_neighbors(grid, c).into_iter().collect();
                let points: BTreeSet<_> = point_neighbors(grid, c).into_iter().collect();
                for &d in &cells {
                    if d == c {
                        continue;
                    }
                    let shared = shared_vertices(grid, c, d);
                    assert_eq!(
                        edges.contains(&d),
                        shared >= 2,
                        "{grid}: edge adjacency vs geometry for {d:?}"
                    );
                    assert_eq!(
                        points.contains(&d),
                        shared >= 1,
                        "{grid}: point adjacency vs geometry for {d:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn point_neighbors_contain_edge_neighbors() {
        for grid in GridKind::ALL {
            for sub in 0..grid.sub_count() {
                let c = Cell { a: -3, b: 2, sub };
                let p: BTreeSet<_> = point_neighbors(grid, c).into_iter().collect();
                for e in edge_neighbors(grid, c) {
                    assert!(p.contains(&e), "{grid}: {e:?} missing from point set");
                }
            }
        }
    }

    #[test]
    fn square_quarter_turn() {
        let rot = RigidMotion::new(1, (0, 0));
        assert_eq!(
            apply_motion(GridKind::Square, rot, Cell::square(1, 0)),
            Cell::square(0, 1)
        );
    }

    #[test]
    fn identity_fixes_cells() {
        for grid in GridKind::ALL {
            let c = Cell {
                a: 3,
                b: 5,
                sub: grid.sub_count() - 1,
            };
            assert_eq!(apply_motion(grid, RigidMotion::IDENTITY, c), c);
        }
    }

    #[test]
    fn translations_compose_by_addition() {
        let t1 = RigidMotion::new(0, (1, 0));
        let t2 = RigidMotion::new(0, (0, 1));
        assert_eq!(
            compose(GridKind::Square, t1, t2),
            RigidMotion::new(0, (1, 1))
        );
    }

    #[test]
    fn half_turn_is_involution() {
        assert!(is_involution(GridKind::Square, RigidMotion::new(2, (0, 0))));
        assert!(is_involution(GridKind::Hex, RigidMotion::new(3, (0, 0))));
        assert!(!is_involution(GridKind::Square, RigidMotion::new(1, (0, 0))));
        assert!(!is_involution(
            GridKind::Square,
            RigidMotion::new(0, (1, 0))
        ));
    }

    #[test]
    fn inverse_cancels() {
        for grid in GridKind::ALL {
            for p in 0..grid.point_group_order() {
                let m = RigidMotion::new(p, (2, -3));
                assert_eq!(compose(grid, m, invert(grid, m)), RigidMotion::IDENTITY);
                assert_eq!(compose(grid, invert(grid, m), m), RigidMotion::IDENTITY);
            }
        }
    }

    #[test]
    fn action_is_a_group_action() {
        // apply(compose(a, b), c) == apply(a, apply(b, c)) over the whole
        // point group with nontrivial translations.
        for grid in GridKind::ALL {
            for pa in 0..grid.point_group_order() {
                for pb in 0..grid.point_group_order() {
                    let ma = RigidMotion::new(pa, (1, -2));
                    let mb = RigidMotion::new(pb, (-3, 1));
                    for sub in 0..grid.sub_count() {
                        let c = Cell { a: 2, b: 1, sub };
                        assert_eq!(
                            apply_motion(grid, compose(grid, ma, mb), c),
                            apply_motion(grid, ma, apply_motion(grid, mb, c)),
                            "{grid} pa={pa} pb={pb} sub={sub}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn motions_preserve_shared_vertex_counts() {
        // A rigid motion of the grid preserves incidence between any two
        // cells; this ties the combinatorial action to the actual geometry.
        for grid in GridKind::ALL {
            for p in 0..grid.point_group_order() {
                let m = RigidMotion::new(p, (1, 1));
                for sub in 0..grid.sub_count() {
                    let c = Cell { a: 0, b: 0, sub };
                    for d in point_neighbors(grid, c) {
                        assert_eq!(
                            shared_vertices(grid, c, d),
                            shared_vertices(grid, apply_motion(grid, m, c), apply_motion(grid, m, d)),
                            "{grid} p={p} {c:?} {d:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cell_vertices_have_positive_area() {
        for grid in GridKind::ALL {
            for sub in 0..grid.sub_count() {
                let c = Cell { a: -1, b: 2, sub };
                let vs = cell_vertices(grid, c);
                let mut twice_area = 0i64;
                for i in 0..vs.len() {
                    let (x1, y1) = vs[i];
                    let (x2, y2) = vs[(i + 1) % vs.len()];
                    twice_area += x1 * y2 - x2 * y1;
                }
                assert!(twice_area > 0, "{grid} sub={sub}: not CCW or degenerate");
            }
        }
    }

    #[test]
    fn square_vertices_are_unit_square() {
        assert_eq!(
            cell_vertices(GridKind::Square, Cell::square(0, 0)),
            vec![(0, 0), (1, 0), (1, 1), (0, 1)]
        );
    }

    #[test]
    fn translated_cell_vertices_translate() {
        for grid in GridKind::ALL {
            let c = Cell { a: 0, b: 0, sub: 0 };
            let t = apply_motion(grid, RigidMotion::new(0, (2, 1)), c);
            let base = cell_vertices(grid, c);
            let moved = cell_vertices(grid, t);
            let delta = (moved[0].0 - base[0].0, moved[0].1 - base[0].1);
            for (v, w) in base.iter().zip(moved.iter()) {
                assert_eq!((v.0 + delta.0, v.1 + delta.1), *w);
            }
        }
    }

    #[test]
    fn cell_tokens_round_trip() {
        let cases = [
            (GridKind::Square, Cell::square(-3, 7)),
            (GridKind::Hex, Cell::hex(0, -2)),
            (GridKind::Iamond, Cell::iamond(1, 2, false)),
            (GridKind::Kite, Cell::kite(-1, 0, 5)),
        ];
        for (grid, c) in cases {
            let s = format_cell(grid, c);
            assert_eq!(parse_cell(grid, &s).unwrap(), c);
        }
        assert!(parse_cell(GridKind::Square, "1,x").is_err());
        assert!(parse_cell(GridKind::Kite, "1,2,6").is_err());
        assert!(parse_cell(GridKind::Iamond, "1,2").is_err());
    }
}
