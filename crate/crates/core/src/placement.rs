//! Candidate surround members: every transformed copy of `T` that could be a
//! neighbour of `T` in a surround, plus the pairwise predicates the encoder
//! needs.

use crate::grid::{point_group, point_neighbors, Cell, GridKind, RigidMotion};
use crate::polyform::{halo, transform_cells, Polyform};
use std::collections::{BTreeMap, BTreeSet};

/// One transformed copy `g(T)`.
///
/// The identity of a placement is its motion, not its cell set: two distinct
/// motions with the same image stay distinct, which is what makes symmetric
/// shapes behave as if they carried an asymmetric marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub motion: RigidMotion,
    /// Image of the centre shape under `motion`, sorted.
    pub cells: Vec<Cell>,
    /// Dense id within the owning candidate list.
    pub index: usize,
}

impl Placement {
    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }
}

/// All candidate neighbours of one centre shape.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    center: Polyform,
    halo: BTreeSet<Cell>,
    placements: Vec<Placement>,
    lookup: BTreeMap<RigidMotion, usize>,
}

impl CandidateSet {
    pub fn grid(&self) -> GridKind {
        self.center.grid()
    }

    pub fn center(&self) -> &Polyform {
        &self.center
    }

    pub fn halo(&self) -> &BTreeSet<Cell> {
        &self.halo
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }
}

fn cells_disjoint(a: &[Cell], b: &[Cell]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Compute the set of all transformed copies of `T` that can be neighbours of
/// `T` in a surround: images disjoint from `T` that occupy at least one halo
/// cell.
///
/// Candidate motions are found by, for every point-group element `p` and every
/// pair of a shape cell `u` and halo cell `v`, solving for the translation
/// that sends `p(u)` to `v`. Every qualifying motion arises this way, so no
/// search radius is involved and the set is complete by construction.
pub fn candidate_neighbors(t: &Polyform) -> CandidateSet {
    let grid = t.grid();
    let halo = halo(t);
    let mut motions: BTreeSet<RigidMotion> = BTreeSet::new();
    for g in point_group(grid) {
        let image = transform_cells(grid, g, t.cells());
        for u in &image {
            for v in &halo {
                if u.sub == v.sub {
                    motions.insert(RigidMotion::new(g.point, (v.a - u.a, v.b - u.b)));
                }
            }
        }
    }
    let mut placements = Vec::new();
    let mut lookup = BTreeMap::new();
    for m in motions {
        let cells = transform_cells(grid, m, t.cells());
        if !cells_disjoint(&cells, t.cells()) {
            continue;
        }
        debug_assert!(cells.iter().any(|c| halo.contains(c)));
        let index = placements.len();
        lookup.insert(m, index);
        placements.push(Placement {
            motion: m,
            cells,
            index,
        });
    }
    CandidateSet {
        center: t.clone(),
        halo,
        placements,
        lookup,
    }
}

/// True when the two placements occupy a common cell. Distinct motions with
/// identical images overlap.
pub fn overlap(a: &Placement, b: &Placement) -> bool {
    !cells_disjoint(&a.cells, &b.cells)
}

/// True when the placements are cell-disjoint but share a boundary point.
pub fn adjacent(grid: GridKind, a: &Placement, b: &Placement) -> bool {
    if overlap(a, b) {
        return false;
    }
    a.cells
        .iter()
        .any(|&c| point_neighbors(grid, c).iter().any(|&d| b.contains(d)))
}

/// The placement carrying motion `m`, if any.
pub fn find_by_motion<'a>(cs: &'a CandidateSet, m: RigidMotion) -> Option<&'a Placement> {
    cs.lookup.get(&m).map(|&i| &cs.placements[i])
}
