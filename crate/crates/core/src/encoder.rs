//! CNF construction: the surroundability formula and its isohedral
//! augmentation.
//!
//! Variables are `1..=n`, one per candidate placement, true when the placement
//! is used in the surround.

use crate::grid::{compose, invert, is_involution, point_neighbors, Cell, RigidMotion};
use crate::placement::{find_by_motion, CandidateSet};
use crate::polyform::{transform_cells, Polyform};
use std::collections::{BTreeMap, BTreeSet};

pub type Literal = i32;
pub type Clause = Vec<Literal>;

/// A CNF formula over placement variables.
#[derive(Debug, Clone)]
pub struct Formula {
    pub num_vars: u32,
    pub clauses: Vec<Clause>,
    /// Motion of the placement behind each variable: variable `v` maps to
    /// `motions[v - 1]`.
    pub motions: Vec<RigidMotion>,
    /// Set when some halo cell is covered by no candidate, leaving an empty
    /// coverage clause; the formula is unsatisfiable and the shape cannot be
    /// surrounded.
    pub unsat_by_construction: bool,
    /// Number of clauses of the plain surround formula; clauses past this
    /// index were added by the isohedral augmentation.
    pub base_clauses: usize,
}

fn var(index: usize) -> Literal {
    (index + 1) as Literal
}

fn occupancy(cs: &CandidateSet) -> BTreeMap<Cell, Vec<usize>> {
    let mut occ: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
    for p in cs.placements() {
        for &c in &p.cells {
            occ.entry(c).or_default().push(p.index);
        }
    }
    occ
}

fn overlap_pairs(occ: &BTreeMap<Cell, Vec<usize>>) -> BTreeSet<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for users in occ.values() {
        for (i, &a) in users.iter().enumerate() {
            for &b in &users[i + 1..] {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    pairs
}

/// The clauses every legal surround must satisfy: each halo cell is occupied
/// by at least one placement, and overlapping placements are mutually
/// exclusive.
pub fn build_surround_formula(t: &Polyform, cs: &CandidateSet) -> Formula {
    debug_assert_eq!(cs.center(), t, "candidate set must be built from T");
    let occ = occupancy(cs);
    let mut clauses = Vec::new();
    let mut unsat = false;
    for h in cs.halo() {
        let cover: Clause = occ
            .get(h)
            .map(|users| users.iter().map(|&i| var(i)).collect())
            .unwrap_or_default();
        if cover.is_empty() {
            unsat = true;
        }
        clauses.push(cover);
    }
    for (a, b) in overlap_pairs(&occ) {
        clauses.push(vec![-var(a), -var(b)]);
    }
    let base = clauses.len();
    Formula {
        num_vars: cs.len() as u32,
        clauses,
        motions: cs.placements().iter().map(|p| p.motion).collect(),
        unsat_by_construction: unsat,
        base_clauses: base,
    }
}

/// Cell-disjoint placement pairs that share a boundary point.
fn adjacent_pairs(
    cs: &CandidateSet,
    occ: &BTreeMap<Cell, Vec<usize>>,
    overlapping: &BTreeSet<(usize, usize)>,
) -> Vec<(usize, usize)> {
    let grid = cs.grid();
    let mut pairs = BTreeSet::new();
    for p in cs.placements() {
        for &c in &p.cells {
            for d in point_neighbors(grid, c) {
                if let Some(users) = occ.get(&d) {
                    for &j in users {
                        if j != p.index {
                            pairs.insert((p.index.min(j), p.index.max(j)));
                        }
                    }
                }
            }
        }
    }
    pairs
        .into_iter()
        .filter(|pair| !overlapping.contains(pair))
        .collect()
}

/// Augment the surround formula with the constraints an isohedral witness
/// must satisfy.
///
/// For every ordered adjacent pair `(Ti, Tj)`, the copy of the surround
/// transported onto `Ti` contains `gi∘gj(T)`; when that motion is a candidate
/// `Tk` the clause `(¬Ti ∨ ¬Tj ∨ Tk)` forces it into the surround, and when
/// its image collides with the centre the pair is excluded outright. A
/// placement used in an isohedral surround also forces its inverse motion in,
/// unless the motion is an involution. With `opt_clauses`, the compositions
/// `gi∘gj⁻¹` and `gj∘gi⁻¹` add the same style of clause purely to narrow the
/// search; they never change satisfiability.
pub fn add_isohedral_clauses(
    mut f: Formula,
    t: &Polyform,
    cs: &CandidateSet,
    opt_clauses: bool,
) -> Formula {
    let grid = cs.grid();
    let occ = occupancy(cs);
    let overlapping = overlap_pairs(&occ);
    let adj = adjacent_pairs(cs, &occ, &overlapping);

    let joint = |f: &mut Formula, i: usize, j: usize| {
        let gi = cs.placements()[i].motion;
        let gj = cs.placements()[j].motion;
        let m = compose(grid, gi, gj);
        if m.is_identity() {
            return;
        }
        if let Some(k) = find_by_motion(cs, m) {
            f.clauses.push(vec![-var(i), -var(j), var(k.index)]);
        } else {
            let image = transform_cells(grid, m, t.cells());
            if image.iter().any(|c| t.contains(*c)) {
                // The forced copy would collide with the centre, so the pair
                // can never appear together.
                f.clauses.push(vec![-var(i), -var(j)]);
            }
            // Otherwise the forced copy floats free of the centre; the decode
            // loop re-checks every witness geometrically.
        }
    };
    for &(i, j) in &adj {
        joint(&mut f, i, j);
        joint(&mut f, j, i);
    }

    for p in cs.placements() {
        if is_involution(grid, p.motion) {
            continue;
        }
        let m = invert(grid, p.motion);
        match find_by_motion(cs, m) {
            Some(k) => f.clauses.push(vec![-var(p.index), var(k.index)]),
            None => f.clauses.push(vec![-var(p.index)]),
        }
    }

    if opt_clauses {
        for &(i, j) in &adj {
            let gi = cs.placements()[i].motion;
            let gj = cs.placements()[j].motion;
            for m in [
                compose(grid, gi, invert(grid, gj)),
                compose(grid, gj, invert(grid, gi)),
            ] {
                if m.is_identity() {
                    continue;
                }
                if let Some(k) = find_by_motion(cs, m) {
                    // gi∘gj⁻¹ can equal gj itself (when gi = gj²); the clause
                    // is then a tautology and carries no information.
                    if k.index != i && k.index != j {
                        f.clauses.push(vec![-var(i), -var(j), var(k.index)]);
                    }
                }
            }
        }
    }
    f
}

/// The clause that forbids exactly the given model: the disjunction of the
/// negations of its true variables.
pub fn blocking_clause(true_vars: &[u32]) -> Clause {
    assert!(!true_vars.is_empty(), "blocking an empty model");
    true_vars.iter().map(|&v| -(v as Literal)).collect()
}
