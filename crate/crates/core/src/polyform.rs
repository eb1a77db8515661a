//! Polyforms: finite edge-connected cell sets, their halos, and their
//! enumeration up to rotation, reflection, and translation.

use crate::grid::{
    apply_motion, cell_vertices, edge_neighbors, format_cell, parse_cell, point_group,
    point_neighbors, Cell, GridKind, RigidMotion,
};
use crate::Error;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A connected, translation-normalized shape: the prototile `T`.
///
/// Cells are kept sorted and translated so the lexicographically least cell
/// sits at lattice coordinates `(0, 0)`; equality of polyforms is therefore
/// equality of shapes up to translation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyform {
    grid: GridKind,
    cells: Vec<Cell>,
}

impl Polyform {
    pub fn grid(&self) -> GridKind {
        self.grid
    }

    /// The cells of the shape, sorted.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }
}

impl fmt::Display for Polyform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.grid)?;
        for (i, &c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&format_cell(self.grid, c))?;
        }
        f.write_str("]")
    }
}

/// Sort, dedupe, and translate a cell list so its least cell has `(a, b) = (0, 0)`.
fn normalize(mut cells: Vec<Cell>) -> Vec<Cell> {
    cells.sort_unstable();
    cells.dedup();
    let min = cells[0];
    if min.a != 0 || min.b != 0 {
        for c in &mut cells {
            c.a -= min.a;
            c.b -= min.b;
        }
    }
    cells
}

fn is_edge_connected(grid: GridKind, cells: &BTreeSet<Cell>) -> bool {
    let start = match cells.iter().next() {
        Some(&c) => c,
        None => return false,
    };
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for d in edge_neighbors(grid, c) {
            if cells.contains(&d) && seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    seen.len() == cells.len()
}

/// Build a polyform from an arbitrary cell set.
pub fn make_polyform(grid: GridKind, cells: impl IntoIterator<Item = Cell>) -> Result<Polyform, Error> {
    let set: BTreeSet<Cell> = cells.into_iter().collect();
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !is_edge_connected(grid, &set) {
        return Err(Error::DisconnectedCells);
    }
    Ok(Polyform {
        grid,
        cells: normalize(set.into_iter().collect()),
    })
}

/// Image of a cell list under a motion, sorted.
pub fn transform_cells(grid: GridKind, m: RigidMotion, cells: &[Cell]) -> Vec<Cell> {
    let mut out: Vec<Cell> = cells.iter().map(|&c| apply_motion(grid, m, c)).collect();
    out.sort_unstable();
    out
}

/// All grid cells outside `T` that share a boundary point with a cell of `T`.
pub fn halo(t: &Polyform) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for &c in t.cells() {
        for d in point_neighbors(t.grid, c) {
            if !t.contains(d) {
                out.insert(d);
            }
        }
    }
    out
}

/// Centroid direction of `cell` as seen from vertex `p`, exact: returns the
/// vertex-coordinate vector `len * centroid - len * p`, which is integral.
fn centroid_dir(grid: GridKind, cell: Cell, p: (i64, i64)) -> (i64, i64) {
    let vs = cell_vertices(grid, cell);
    let n = vs.len() as i64;
    let (sx, sy) = vs.iter().fold((0, 0), |(x, y), v| (x + v.0, y + v.1));
    (sx - n * p.0, sy - n * p.1)
}

/// Compare two nonzero vectors by angle in `[0, 2π)`, exactly.
fn angle_cmp(u: (i64, i64), v: (i64, i64)) -> std::cmp::Ordering {
    fn half(w: (i64, i64)) -> u8 {
        // 0 for angles in [0, π), 1 for [π, 2π)
        if w.1 > 0 || (w.1 == 0 && w.0 > 0) {
            0
        } else {
            1
        }
    }
    // Within a half-plane, u precedes v exactly when the cross product
    // u × v is positive.
    half(u)
        .cmp(&half(v))
        .then_with(|| (u.1 * v.0 - u.0 * v.1).cmp(&0))
}

/// True when the `inside` cells pinch at some polygon vertex: around the
/// vertex, the inside cells form two or more separate angular wedges. A patch
/// that pinches is not a topological disk even if its complement stays
/// connected.
fn has_vertex_pinch(grid: GridKind, inside: &BTreeSet<Cell>) -> bool {
    let mut by_vertex: BTreeMap<(i64, i64), BTreeSet<Cell>> = BTreeMap::new();
    for &c in inside {
        for v in cell_vertices(grid, c) {
            by_vertex.entry(v).or_default().insert(c);
        }
    }
    for (&p, touching) in &by_vertex {
        // Every cell incident to p shares a point with any one of them.
        let sample = *touching.iter().next().unwrap();
        let mut ring: Vec<Cell> = point_neighbors(grid, sample)
            .into_iter()
            .chain([sample])
            .filter(|&d| cell_vertices(grid, d).contains(&p))
            .collect();
        ring.sort_unstable();
        ring.dedup();
        ring.sort_by(|&x, &y| angle_cmp(centroid_dir(grid, x, p), centroid_dir(grid, y, p)));
        let flags: Vec<bool> = ring.iter().map(|d| inside.contains(d)).collect();
        let runs = flags
            .iter()
            .zip(flags.iter().cycle().skip(1))
            .filter(|(a, b)| **a && !**b)
            .count();
        if runs >= 2 {
            return true;
        }
    }
    false
}

/// True when the union of the given cells is a topological disk: the open
/// complement of the union has exactly one connected component and the union
/// does not pinch at a vertex.
///
/// Complement connectivity is computed by flood fill over the complement cells
/// of a bounding box inflated by one cell ring, using edge adjacency: two
/// complement regions that touch only at a corner point are separated there by
/// the closed union, so corner contact must not merge them.
pub fn is_simply_connected(grid: GridKind, cells: &BTreeSet<Cell>) -> bool {
    assert!(!cells.is_empty(), "cell set must be nonempty");
    let (mut lo_a, mut hi_a, mut lo_b, mut hi_b) = (i32::MAX, i32::MIN, i32::MAX, i32::MIN);
    for c in cells {
        lo_a = lo_a.min(c.a);
        hi_a = hi_a.max(c.a);
        lo_b = lo_b.min(c.b);
        hi_b = hi_b.max(c.b);
    }
    lo_a -= 1;
    hi_a += 1;
    lo_b -= 1;
    hi_b += 1;
    let in_box = |c: Cell| c.a >= lo_a && c.a <= hi_a && c.b >= lo_b && c.b <= hi_b;

    let mut complement = BTreeSet::new();
    for a in lo_a..=hi_a {
        for b in lo_b..=hi_b {
            for sub in 0..grid.sub_count() {
                let c = Cell { a, b, sub };
                if !cells.contains(&c) {
                    complement.insert(c);
                }
            }
        }
    }
    // Flood from a corner of the inflated box; every complement cell on the
    // boundary ring belongs to the outer region.
    let start = Cell {
        a: lo_a,
        b: lo_b,
        sub: 0,
    };
    debug_assert!(complement.contains(&start));
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for d in edge_neighbors(grid, c) {
            if in_box(d) && complement.contains(&d) && seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    seen.len() == complement.len() && !has_vertex_pinch(grid, cells)
}

/// A total-order key identifying a polyform up to the point group and
/// translation: the least translation-normalized image over all point-group
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    grid: GridKind,
    cells: Vec<Cell>,
}

/// Canonical key of `T` under the free equivalence (rotations, reflections,
/// and translations).
pub fn canonical(t: &Polyform) -> CanonicalForm {
    let cells = point_group(t.grid)
        .into_iter()
        .map(|g| normalize(transform_cells(t.grid, g, t.cells())))
        .min()
        .expect("point group is nonempty");
    CanonicalForm {
        grid: t.grid,
        cells,
    }
}

impl CanonicalForm {
    /// The representative polyform of this class.
    pub fn representative(&self) -> Polyform {
        Polyform {
            grid: self.grid,
            cells: self.cells.clone(),
        }
    }
}

/// Enumerate one representative per free polyform of `n` cells, in a
/// deterministic order.
///
/// Shapes grow one cell at a time from the single-cell forms; duplicates are
/// folded away by canonical form. Holey shapes are included: they are valid
/// polyforms even though they can never be surrounded.
pub fn enumerate_free(grid: GridKind, n: usize) -> Vec<Polyform> {
    assert!(n >= 1);
    let mut level: BTreeMap<CanonicalForm, Polyform> = BTreeMap::new();
    for sub in 0..grid.sub_count() {
        let p = make_polyform(grid, [Cell { a: 0, b: 0, sub }]).unwrap();
        level.insert(canonical(&p), p);
    }
    for _ in 1..n {
        let mut next: BTreeMap<CanonicalForm, Polyform> = BTreeMap::new();
        for p in level.values() {
            let cells: BTreeSet<Cell> = p.cells().iter().copied().collect();
            let mut grown = BTreeSet::new();
            for &c in p.cells() {
                for d in edge_neighbors(grid, c) {
                    if !cells.contains(&d) {
                        grown.insert(d);
                    }
                }
            }
            for d in grown {
                let mut v: Vec<Cell> = p.cells().to_vec();
                v.push(d);
                let q = Polyform {
                    grid,
                    cells: normalize(v),
                };
                next.entry(canonical(&q)).or_insert(q);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Parse the polyform file format: a `grid=<kind>` line followed by
/// whitespace-separated cell tokens.
pub fn read_polyform(text: &str) -> Result<Polyform, Error> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let head = lines.next().ok_or(Error::EmptyInput)?;
    let grid = match head.strip_prefix("grid=") {
        Some(kind) => kind.trim().parse::<GridKind>()?,
        None => return Err(Error::parse(head, "expected a grid=<kind> line")),
    };
    let mut cells = Vec::new();
    for line in lines {
        for token in line.split_whitespace() {
            cells.push(parse_cell(grid, token)?);
        }
    }
    make_polyform(grid, cells)
}

/// Serialize a polyform in the format accepted by [`read_polyform`].
pub fn write_polyform(t: &Polyform) -> String {
    let tokens: Vec<String> = t.cells().iter().map(|&c| format_cell(t.grid, c)).collect();
    format!("grid={}\n{}\n", t.grid, tokens.join(" "))
}
