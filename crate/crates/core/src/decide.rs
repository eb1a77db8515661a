//! The decision procedure: solve loops over the CNF encodings, geometric
//! verification of every witness, and the three-way classification.
//!
//! Soundness does not rest on the encoder or the SAT backend: a witness is
//! only ever reported after its patch has been checked to be a topological
//! disk and every member has passed the extendability test directly against
//! the geometry. Models that fail either check are blocked and the solver is
//! restarted.

use crate::encoder::{add_isohedral_clauses, blocking_clause, build_surround_formula, Formula};
use crate::grid::{compose, format_cell, parse_cell, GridKind, RigidMotion};
use crate::placement::{candidate_neighbors, CandidateSet, Placement};
use crate::polyform::{halo, is_simply_connected, make_polyform, transform_cells, Polyform};
use crate::solver::{SolveResult, SolveSession, SolverConfig};
use crate::{grid::Cell, Error};
use std::collections::BTreeSet;

/// A verified surround: the centre shape plus the chosen members.
#[derive(Debug, Clone)]
pub struct Surround {
    center: Polyform,
    members: Vec<Placement>,
}

impl Surround {
    pub fn center(&self) -> &Polyform {
        &self.center
    }

    pub fn members(&self) -> &[Placement] {
        &self.members
    }

    /// All cells of the patch: centre plus members.
    pub fn patch_cells(&self) -> BTreeSet<Cell> {
        let mut cells: BTreeSet<Cell> = self.center.cells().iter().copied().collect();
        for m in &self.members {
            cells.extend(m.cells.iter().copied());
        }
        cells
    }

    /// Check the surround invariants: members cover the halo, are pairwise
    /// disjoint, avoid the centre, and the patch is a topological disk.
    pub fn validate(&self) -> Result<(), String> {
        if self.members.is_empty() {
            return Err("surround has no members".into());
        }
        let grid = self.center.grid();
        let mut used: BTreeSet<Cell> = BTreeSet::new();
        for m in &self.members {
            for &c in &m.cells {
                if self.center.contains(c) {
                    return Err(format!("member overlaps the centre at {c:?}"));
                }
                if !used.insert(c) {
                    return Err(format!("members overlap at {c:?}"));
                }
            }
        }
        for h in halo(&self.center) {
            if !used.contains(&h) {
                return Err(format!("halo cell {h:?} is uncovered"));
            }
        }
        if !is_simply_connected(grid, &self.patch_cells()) {
            return Err("patch is not simply connected".into());
        }
        Ok(())
    }
}

/// Verdict for one shape.
#[derive(Debug, Clone)]
pub enum Classification {
    /// No surround exists at all (the shape cannot even be enclosed once).
    NotSurroundable,
    /// The shape tiles the plane isohedrally; the witness surround has every
    /// member extendable.
    Isohedral(Surround),
    /// At least one surround exists, but none of them witnesses isohedral
    /// tilability. Nothing further is claimed about the shape.
    SurroundableNotIsohedral(Surround),
}

impl Classification {
    /// Stable lowercase tag, as printed by the CLI.
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::NotSurroundable => "not-surroundable",
            Classification::Isohedral(_) => "isohedral",
            Classification::SurroundableNotIsohedral(_) => "surroundable-not-isohedral",
        }
    }

    pub fn witness(&self) -> Option<&Surround> {
        match self {
            Classification::NotSurroundable => None,
            Classification::Isohedral(s) | Classification::SurroundableNotIsohedral(s) => Some(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecideConfig {
    pub solver: SolverConfig,
    /// Emit the optional composition clauses that narrow the search without
    /// changing satisfiability.
    pub opt_clauses: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            solver: SolverConfig::default(),
            opt_clauses: true,
        }
    }
}

/// Instrumentation from one decision run.
#[derive(Debug, Clone, Copy, Default)]
pub struct DecideStats {
    pub candidates: usize,
    pub variables: u32,
    pub surround_clauses: usize,
    pub isohedral_clauses: usize,
    /// Total solver invocations.
    pub iterations: u64,
    /// Models rejected because the patch enclosed a hole or pinched.
    pub hole_rejections: u64,
    /// Models whose patch was a disk but where some member failed the
    /// extendability test. The encoding is believed to exclude these, so any
    /// nonzero count is diagnostic gold: it is reported, never hidden.
    pub extendability_rejections: u64,
}

fn decode(cs: &CandidateSet, model: &[bool]) -> Vec<Placement> {
    cs.placements()
        .iter()
        .filter(|p| model[p.index])
        .cloned()
        .collect()
}

fn patch_of(center: &Polyform, members: &[Placement]) -> BTreeSet<Cell> {
    let mut cells: BTreeSet<Cell> = center.cells().iter().copied().collect();
    for m in members {
        cells.extend(m.cells.iter().copied());
    }
    cells
}

/// Check that transporting the whole surround onto `member` conflicts with
/// nothing in the original patch: every transported copy either carries the
/// same motion as an existing tile or is cell-disjoint from it.
pub fn verify_extendable(t: &Polyform, s: &Surround, member: &Placement) -> bool {
    let grid = t.grid();
    let gi = member.motion;
    let mut patch: Vec<(RigidMotion, &[Cell])> = vec![(RigidMotion::IDENTITY, t.cells())];
    for m in s.members() {
        patch.push((m.motion, &m.cells));
    }
    for tj in s.members() {
        let b_motion = compose(grid, gi, tj.motion);
        let b_cells = transform_cells(grid, b_motion, t.cells());
        for &(a_motion, a_cells) in &patch {
            if a_motion == b_motion {
                continue;
            }
            if b_cells.iter().any(|c| a_cells.binary_search(c).is_ok()) {
                return false;
            }
        }
    }
    true
}

fn surround_loop(
    t: &Polyform,
    cs: &CandidateSet,
    formula: &Formula,
    cfg: &DecideConfig,
    stats: &mut DecideStats,
    check_extendability: bool,
) -> Result<Option<Surround>, Error> {
    if formula.unsat_by_construction {
        return Ok(None);
    }
    let mut session = SolveSession::new(formula, &cfg.solver);
    loop {
        stats.iterations += 1;
        let model = match session.solve()? {
            SolveResult::Satisfiable(m) => m,
            SolveResult::Unsatisfiable => return Ok(None),
        };
        let members = decode(cs, &model);
        debug_assert!(!members.is_empty());
        let true_vars: Vec<u32> = members.iter().map(|p| (p.index + 1) as u32).collect();
        let block = blocking_clause(&true_vars);
        if !is_simply_connected(t.grid(), &patch_of(t, &members)) {
            stats.hole_rejections += 1;
            session.add_clause(block);
            continue;
        }
        let surround = Surround {
            center: t.clone(),
            members,
        };
        if check_extendability
            && !surround
                .members()
                .iter()
                .all(|m| verify_extendable(t, &surround, m))
        {
            stats.extendability_rejections += 1;
            session.add_clause(block);
            continue;
        }
        return Ok(Some(surround));
    }
}

/// Find any simply connected surround of `T`, or report that none exists.
pub fn find_surround(t: &Polyform, cfg: &DecideConfig) -> Result<Option<Surround>, Error> {
    let mut stats = DecideStats::default();
    let cs = candidate_neighbors(t);
    let formula = build_surround_formula(t, &cs);
    surround_loop(t, &cs, &formula, cfg, &mut stats, false)
}

/// Find a surround witnessing isohedral tilability, or report that none
/// exists. Every returned witness has passed [`verify_extendable`] for each
/// member and is simply connected.
pub fn is_isohedral(t: &Polyform, cfg: &DecideConfig) -> Result<Option<Surround>, Error> {
    let mut stats = DecideStats::default();
    let cs = candidate_neighbors(t);
    let formula = add_isohedral_clauses(
        build_surround_formula(t, &cs),
        t,
        &cs,
        cfg.opt_clauses,
    );
    surround_loop(t, &cs, &formula, cfg, &mut stats, true)
}

/// Classify a shape, reporting the solver instrumentation alongside.
pub fn classify_with_stats(
    t: &Polyform,
    cfg: &DecideConfig,
) -> Result<(Classification, DecideStats), Error> {
    let cs = candidate_neighbors(t);
    let base = build_surround_formula(t, &cs);
    let mut stats = DecideStats {
        candidates: cs.len(),
        variables: base.num_vars,
        surround_clauses: base.base_clauses,
        ..DecideStats::default()
    };
    let example = match surround_loop(t, &cs, &base, cfg, &mut stats, false)? {
        Some(s) => s,
        None => return Ok((Classification::NotSurroundable, stats)),
    };
    let augmented = add_isohedral_clauses(base, t, &cs, cfg.opt_clauses);
    stats.isohedral_clauses = augmented.clauses.len() - augmented.base_clauses;
    match surround_loop(t, &cs, &augmented, cfg, &mut stats, true)? {
        Some(w) => Ok((Classification::Isohedral(w), stats)),
        None => Ok((Classification::SurroundableNotIsohedral(example), stats)),
    }
}

/// Classify a shape: not surroundable, isohedral (with witness), or
/// surroundable without an isohedral witness.
pub fn classify(t: &Polyform, cfg: &DecideConfig) -> Result<Classification, Error> {
    classify_with_stats(t, cfg).map(|(c, _)| c)
}

/// Serialize a surround in the witness file format: a `grid=` line, a
/// `center=` line of cell tokens, and one `member=<point> <ta>,<tb>` line per
/// member motion.
pub fn write_witness(s: &Surround) -> String {
    let grid = s.center().grid();
    let mut out = format!("grid={grid}\n");
    let cells: Vec<String> = s
        .center()
        .cells()
        .iter()
        .map(|&c| format_cell(grid, c))
        .collect();
    out.push_str(&format!("center={}\n", cells.join(" ")));
    for m in s.members() {
        out.push_str(&format!(
            "member={} {},{}\n",
            m.motion.point, m.motion.translation.0, m.motion.translation.1
        ));
    }
    out
}

/// Parse and geometrically validate a witness file.
pub fn read_witness(text: &str) -> Result<Surround, Error> {
    let mut grid: Option<GridKind> = None;
    let mut center: Option<Polyform> = None;
    let mut members: Vec<Placement> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(kind) = line.strip_prefix("grid=") {
            grid = Some(kind.trim().parse()?);
        } else if let Some(cells) = line.strip_prefix("center=") {
            let grid = grid.ok_or_else(|| Error::parse(line, "grid= must come first"))?;
            let parsed: Result<Vec<Cell>, Error> = cells
                .split_whitespace()
                .map(|tok| parse_cell(grid, tok))
                .collect();
            center = Some(make_polyform(grid, parsed?)?);
        } else if let Some(body) = line.strip_prefix("member=") {
            let grid = grid.ok_or_else(|| Error::parse(line, "grid= must come first"))?;
            let center = center
                .as_ref()
                .ok_or_else(|| Error::parse(line, "center= must come before members"))?;
            let mut parts = body.split_whitespace();
            let point: u8 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(body, "expected a point-group index"))?;
            if point >= grid.point_group_order() {
                return Err(Error::parse(body, "point-group index out of range"));
            }
            let t = parts
                .next()
                .ok_or_else(|| Error::parse(body, "expected a translation"))?;
            let (ta, tb) = t
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::parse(t, "expected ta,tb"))?;
            if parts.next().is_some() {
                return Err(Error::parse(body, "trailing tokens after translation"));
            }
            let motion = RigidMotion::new(point, (ta, tb));
            members.push(Placement {
                motion,
                cells: transform_cells(grid, motion, center.cells()),
                index: members.len(),
            });
        } else {
            return Err(Error::parse(line, "unrecognized witness line"));
        }
    }
    let center = center.ok_or_else(|| Error::parse("", "witness has no center= line"))?;
    let s = Surround { center, members };
    s.validate()
        .map_err(|reason| Error::parse("witness", reason))?;
    Ok(s)
}
