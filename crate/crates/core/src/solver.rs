//! SAT backends and DIMACS interchange.
//!
//! The embedded backend is a compact CDCL solver (two watched literals,
//! first-UIP learning, phase saving, geometric restarts) — more than enough
//! for the desk-scale formulas this crate produces. Any external solver that
//! speaks DIMACS on stdin/stdout can be substituted through
//! [`Backend::DimacsPipe`]; verdicts must agree, and every model is verified
//! clause by clause before it is returned regardless of where it came from.

use crate::encoder::{Clause, Formula, Literal};
use crate::Error;
use std::collections::BTreeMap;
use std::io::Write as _;
use std::process::{Command, Stdio};
use std::time::Instant;

/// Outcome of a complete solver run. There is no "unknown": budget exhaustion
/// surfaces as [`Error::ResourceLimit`] instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    /// A verified assignment of all variables, indexed by `var - 1`.
    Satisfiable(Vec<bool>),
    Unsatisfiable,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Satisfiable(_))
    }

    /// The variables assigned true, ascending.
    pub fn true_vars(&self) -> Vec<u32> {
        match self {
            SolveResult::Satisfiable(model) => (0..model.len())
                .filter(|&i| model[i])
                .map(|i| (i + 1) as u32)
                .collect(),
            SolveResult::Unsatisfiable => Vec::new(),
        }
    }
}

/// Which solver runs the formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    Embedded,
    /// Run the given command, feed it DIMACS on stdin, and read a standard
    /// `s SATISFIABLE` / `v ...` answer (minisat-file style output is also
    /// accepted) from stdout. The command is split on whitespace.
    DimacsPipe(String),
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub backend: Backend,
    /// Conflict budget per solve call.
    pub max_conflicts: u64,
    /// Wall-clock budget per solve call, in seconds.
    pub max_seconds: f64,
    /// Perturbs the embedded solver's branching order; verdicts never depend
    /// on it.
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            backend: Backend::Embedded,
            max_conflicts: 10_000_000,
            max_seconds: 60.0,
            seed: 0,
        }
    }
}

impl SolverConfig {
    /// Parse a CLI-style backend selector: `embedded` or `dimacs-pipe:<command>`.
    pub fn parse_backend(s: &str) -> Result<Backend, Error> {
        if s == "embedded" {
            return Ok(Backend::Embedded);
        }
        match s.strip_prefix("dimacs-pipe:") {
            Some(cmd) if !cmd.trim().is_empty() => Ok(Backend::DimacsPipe(cmd.to_string())),
            _ => Err(Error::parse(s, "expected embedded or dimacs-pipe:<command>")),
        }
    }
}

/// True when the assignment satisfies every clause of the formula.
pub fn model_satisfies(clauses: &[Clause], model: &[bool]) -> bool {
    clauses.iter().all(|c| {
        c.iter().any(|&l| {
            let v = (l.unsigned_abs() - 1) as usize;
            v < model.len() && (model[v] == (l > 0))
        })
    })
}

/// Serialize a formula as DIMACS CNF: `p cnf <vars> <clauses>` followed by one
/// zero-terminated clause per line.
pub fn export_dimacs(f: &Formula) -> String {
    export_dimacs_with(f, &[])
}

fn export_dimacs_with(f: &Formula, extra: &[Clause]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "p cnf {} {}\n",
        f.num_vars,
        f.clauses.len() + extra.len()
    ));
    for c in f.clauses.iter().chain(extra.iter()) {
        if c.is_empty() {
            out.push_str("0\n");
        } else {
            let body: Vec<String> = c.iter().map(|l| l.to_string()).collect();
            out.push_str(&body.join(" "));
            out.push_str(" 0\n");
        }
    }
    out
}

/// Parse a satisfying assignment from solver output: `v`-lines in the
/// standard output format, or a `SAT` header followed by literal lines.
pub fn import_model(text: &str) -> Result<BTreeMap<u32, bool>, Error> {
    let mut lits: Vec<Literal> = Vec::new();
    let mut saw_model_line = false;
    let mut after_sat_header = false;
    for line in text.lines() {
        let line = line.trim();
        if line == "SAT" {
            after_sat_header = true;
            continue;
        }
        let body = if let Some(rest) = line.strip_prefix("v ") {
            saw_model_line = true;
            rest
        } else if line == "v" {
            saw_model_line = true;
            continue;
        } else if after_sat_header {
            line
        } else {
            continue;
        };
        for tok in body.split_whitespace() {
            let l: Literal = tok
                .parse()
                .map_err(|_| Error::parse(tok, "expected a literal in the model"))?;
            if l != 0 {
                lits.push(l);
            }
        }
    }
    if lits.is_empty() && !saw_model_line {
        return Err(Error::parse(
            text.lines().next().unwrap_or(""),
            "no model lines found",
        ));
    }
    Ok(lits
        .into_iter()
        .map(|l| (l.unsigned_abs(), l > 0))
        .collect())
}

/// Decide a formula with the configured backend.
pub fn solve(f: &Formula, cfg: &SolverConfig) -> Result<SolveResult, Error> {
    SolveSession::new(f, cfg).solve()
}

/// Equivalent to solving `f` with `extra` appended; the embedded backend
/// keeps learned state across calls within a session.
pub fn solve_incremental(
    f: &Formula,
    extra: &[Clause],
    cfg: &SolverConfig,
) -> Result<SolveResult, Error> {
    let mut s = SolveSession::new(f, cfg);
    for c in extra {
        s.add_clause(c.clone());
    }
    s.solve()
}

/// An incremental solving session: clauses can be appended between solve
/// calls, which is how the decode loops block unwanted models.
pub struct SolveSession {
    inner: SessionInner,
}

enum SessionInner {
    Embedded(Cdcl),
    Pipe {
        command: String,
        formula: Formula,
        extra: Vec<Clause>,
    },
}

impl SolveSession {
    pub fn new(f: &Formula, cfg: &SolverConfig) -> SolveSession {
        let inner = match &cfg.backend {
            Backend::Embedded => {
                let mut cdcl = Cdcl::new(f.num_vars as usize, cfg);
                for c in &f.clauses {
                    cdcl.add_clause(c.clone());
                }
                SessionInner::Embedded(cdcl)
            }
            Backend::DimacsPipe(command) => SessionInner::Pipe {
                command: command.clone(),
                formula: f.clone(),
                extra: Vec::new(),
            },
        };
        SolveSession { inner }
    }

    pub fn add_clause(&mut self, c: Clause) {
        match &mut self.inner {
            SessionInner::Embedded(cdcl) => cdcl.add_clause(c),
            SessionInner::Pipe { extra, .. } => extra.push(c),
        }
    }

    pub fn solve(&mut self) -> Result<SolveResult, Error> {
        match &mut self.inner {
            SessionInner::Embedded(cdcl) => cdcl.solve(),
            SessionInner::Pipe {
                command,
                formula,
                extra,
            } => solve_pipe(command, formula, extra),
        }
    }
}

fn solve_pipe(command: &str, f: &Formula, extra: &[Clause]) -> Result<SolveResult, Error> {
    let mut parts = command.split_whitespace();
    let program = parts
        .next()
        .ok_or_else(|| Error::ExternalSolver("empty pipe command".into()))?;
    let mut child = Command::new(program)
        .args(parts)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| Error::ExternalSolver(format!("cannot start `{program}`: {e}")))?;
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(export_dimacs_with(f, extra).as_bytes())?;
    let output = child.wait_with_output()?;
    let text = String::from_utf8_lossy(&output.stdout).into_owned();

    let unsat = text.lines().any(|l| {
        let l = l.trim();
        l == "s UNSATISFIABLE" || l == "UNSAT" || l == "UNSATISFIABLE"
    });
    let sat = text.lines().any(|l| {
        let l = l.trim();
        l == "s SATISFIABLE" || l == "SAT" || l == "SATISFIABLE"
    });
    if unsat {
        return Ok(SolveResult::Unsatisfiable);
    }
    if !sat {
        return Err(Error::ExternalSolver(format!(
            "`{command}` produced no verdict"
        )));
    }
    let assignment = import_model(&text)?;
    let mut model = vec![false; f.num_vars as usize];
    for (v, val) in assignment {
        let idx = (v - 1) as usize;
        if idx < model.len() {
            model[idx] = val;
        }
    }
    let all: Vec<Clause> = f.clauses.iter().chain(extra.iter()).cloned().collect();
    if !model_satisfies(&all, &model) {
        return Err(Error::ExternalSolver(format!(
            "`{command}` returned a model that violates the formula"
        )));
    }
    Ok(SolveResult::Satisfiable(model))
}

// ---------------------------------------------------------------------------
// Embedded CDCL backend
// ---------------------------------------------------------------------------

const NO_REASON: usize = usize::MAX;

struct Cdcl {
    num_vars: usize,
    // Indexed by variable (slot 0 unused): 0 unassigned, 1 true, -1 false.
    assign: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<usize>,
    phase: Vec<bool>,
    activity: Vec<f64>,
    act_inc: f64,
    clauses: Vec<Clause>,
    // Clauses as handed to us, kept verbatim for model verification.
    originals: Vec<Clause>,
    // Watch lists indexed by literal code 2*(var-1) + (negative ? 1 : 0).
    watches: Vec<Vec<usize>>,
    trail: Vec<Literal>,
    trail_lim: Vec<usize>,
    qhead: usize,
    seen: Vec<bool>,
    unsat: bool,
    conflicts: u64,
    max_conflicts: u64,
    max_seconds: f64,
}

fn code(l: Literal) -> usize {
    debug_assert!(l != 0);
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

impl Cdcl {
    fn new(num_vars: usize, cfg: &SolverConfig) -> Cdcl {
        let mut activity = vec![0.0; num_vars + 1];
        // Seed-keyed jitter so branching ties break differently per seed but
        // deterministically within one.
        let mut state = cfg.seed ^ 0x9E37_79B9_7F4A_7C15;
        for slot in activity.iter_mut().skip(1) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            *slot = (state % 1024) as f64 * 1e-9;
        }
        Cdcl {
            num_vars,
            assign: vec![0; num_vars + 1],
            level: vec![0; num_vars + 1],
            reason: vec![NO_REASON; num_vars + 1],
            phase: vec![false; num_vars + 1],
            activity,
            act_inc: 1.0,
            clauses: Vec::new(),
            originals: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            seen: vec![false; num_vars + 1],
            unsat: false,
            conflicts: 0,
            max_conflicts: cfg.max_conflicts,
            max_seconds: cfg.max_seconds,
        }
    }

    fn value(&self, l: Literal) -> i8 {
        let a = self.assign[l.unsigned_abs() as usize];
        if l > 0 {
            a
        } else {
            -a
        }
    }

    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    fn enqueue(&mut self, l: Literal, reason: usize) {
        let v = l.unsigned_abs() as usize;
        debug_assert_eq!(self.assign[v], 0);
        self.assign[v] = if l > 0 { 1 } else { -1 };
        self.level[v] = self.decision_level() as u32;
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Add a clause at decision level 0. Literals already false at level 0
    /// are dropped; a clause true at level 0 is kept only for verification.
    fn add_clause(&mut self, c: Clause) {
        self.backtrack(0);
        self.originals.push(c.clone());
        if self.unsat {
            return;
        }
        let mut lits = c;
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] == -w[1]) || lits.iter().any(|&l| self.value(l) == 1) {
            return; // tautology or already satisfied at level 0
        }
        lits.retain(|&l| self.value(l) != -1);
        match lits.len() {
            0 => self.unsat = true,
            1 => self.enqueue(lits[0], NO_REASON),
            _ => {
                let idx = self.clauses.len();
                self.watches[code(lits[0])].push(idx);
                self.watches[code(lits[1])].push(idx);
                self.clauses.push(lits);
            }
        }
    }

    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let lit = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = -lit;
            let w = code(false_lit);
            let list = std::mem::take(&mut self.watches[w]);
            let mut kept = Vec::with_capacity(list.len());
            let mut conflict = None;
            let mut i = 0;
            while i < list.len() {
                let ci = list[i];
                i += 1;
                enum Step {
                    Satisfied,
                    Moved(Literal),
                    UnitOrConflict(Literal),
                }
                let step = {
                    let assign = &self.assign;
                    let val = |l: Literal| {
                        let a = assign[l.unsigned_abs() as usize];
                        if l > 0 {
                            a
                        } else {
                            -a
                        }
                    };
                    let cl = &mut self.clauses[ci];
                    if cl[0] == false_lit {
                        cl.swap(0, 1);
                    }
                    debug_assert_eq!(cl[1], false_lit);
                    let first = cl[0];
                    if val(first) == 1 {
                        Step::Satisfied
                    } else if let Some(j) = (2..cl.len()).find(|&j| val(cl[j]) != -1) {
                        cl.swap(1, j);
                        Step::Moved(cl[1])
                    } else {
                        Step::UnitOrConflict(first)
                    }
                };
                match step {
                    Step::Satisfied => kept.push(ci),
                    Step::Moved(moved) => self.watches[code(moved)].push(ci),
                    Step::UnitOrConflict(first) => {
                        kept.push(ci);
                        if self.value(first) == -1 {
                            conflict = Some(ci);
                            kept.extend_from_slice(&list[i..]);
                            break;
                        }
                        self.enqueue(first, ci);
                    }
                }
            }
            self.watches[w] = kept;
            if conflict.is_some() {
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.act_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.act_inc *= 1e-100;
        }
    }

    /// First-UIP conflict analysis. Returns the learned clause (asserting
    /// literal first, backjump-level literal second) and the backjump level.
    fn analyze(&mut self, mut confl: usize) -> (Clause, usize) {
        let current = self.decision_level() as u32;
        let mut learnt: Clause = vec![0];
        let mut counter = 0usize;
        let mut p: Literal = 0;
        let mut index = self.trail.len();
        let mut touched: Vec<usize> = Vec::new();
        loop {
            let start = usize::from(p != 0);
            for j in start..self.clauses[confl].len() {
                let q = self.clauses[confl][j];
                let v = q.unsigned_abs() as usize;
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    touched.push(v);
                    self.bump(v);
                    if self.level[v] == current {
                        counter += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                p = self.trail[index];
                if self.seen[p.unsigned_abs() as usize] {
                    break;
                }
            }
            self.seen[p.unsigned_abs() as usize] = false;
            counter -= 1;
            if counter == 0 {
                break;
            }
            confl = self.reason[p.unsigned_abs() as usize];
        }
        learnt[0] = -p;
        for v in touched {
            self.seen[v] = false;
        }
        let mut bj = 0usize;
        if learnt.len() > 1 {
            let mut max_i = 1;
            for i in 2..learnt.len() {
                if self.level[learnt[i].unsigned_abs() as usize]
                    > self.level[learnt[max_i].unsigned_abs() as usize]
                {
                    max_i = i;
                }
            }
            learnt.swap(1, max_i);
            bj = self.level[learnt[1].unsigned_abs() as usize] as usize;
        }
        (learnt, bj)
    }

    fn backtrack(&mut self, target: usize) {
        while self.trail_lim.len() > target {
            let lim = self.trail_lim.pop().unwrap();
            for l in self.trail.drain(lim..) {
                let v = l.unsigned_abs() as usize;
                self.phase[v] = l > 0;
                self.assign[v] = 0;
                self.reason[v] = NO_REASON;
            }
        }
        self.qhead = self.trail.len().min(self.qhead);
    }

    fn learn(&mut self, learnt: Clause) {
        if learnt.len() == 1 {
            self.enqueue(learnt[0], NO_REASON);
        } else {
            let idx = self.clauses.len();
            self.watches[code(learnt[0])].push(idx);
            self.watches[code(learnt[1])].push(idx);
            let first = learnt[0];
            self.clauses.push(learnt);
            self.enqueue(first, idx);
        }
    }

    fn pick_branch(&self) -> Option<usize> {
        let mut best = None;
        let mut best_act = f64::NEG_INFINITY;
        for v in 1..=self.num_vars {
            if self.assign[v] == 0 && self.activity[v] > best_act {
                best = Some(v);
                best_act = self.activity[v];
            }
        }
        best
    }

    fn solve(&mut self) -> Result<SolveResult, Error> {
        if self.unsat {
            return Ok(SolveResult::Unsatisfiable);
        }
        let started = Instant::now();
        let budget_start = self.conflicts;
        let mut since_restart = 0u64;
        let mut restart_limit = 100u64;
        loop {
            if let Some(confl) = self.propagate() {
                self.conflicts += 1;
                since_restart += 1;
                if self.decision_level() == 0 {
                    self.unsat = true;
                    return Ok(SolveResult::Unsatisfiable);
                }
                if self.conflicts - budget_start > self.max_conflicts {
                    return Err(Error::ResourceLimit(format!(
                        "conflict budget {} exhausted",
                        self.max_conflicts
                    )));
                }
                if self.conflicts % 1024 == 0
                    && started.elapsed().as_secs_f64() > self.max_seconds
                {
                    return Err(Error::ResourceLimit(format!(
                        "time budget {}s exhausted",
                        self.max_seconds
                    )));
                }
                let (learnt, bj) = self.analyze(confl);
                self.backtrack(bj);
                self.learn(learnt);
                self.act_inc /= 0.95;
                if since_restart >= restart_limit {
                    since_restart = 0;
                    restart_limit += restart_limit / 2;
                    self.backtrack(0);
                }
            } else if self.trail.len() == self.num_vars {
                let model: Vec<bool> = (1..=self.num_vars).map(|v| self.assign[v] == 1).collect();
                assert!(
                    model_satisfies(&self.originals, &model),
                    "internal error: model fails clause verification"
                );
                return Ok(SolveResult::Satisfiable(model));
            } else {
                let v = self.pick_branch().expect("unassigned variable exists");
                self.trail_lim.push(self.trail.len());
                let lit = if self.phase[v] { v as Literal } else { -(v as Literal) };
                self.enqueue(lit, NO_REASON);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RigidMotion;

    fn formula(num_vars: u32, clauses: Vec<Clause>) -> Formula {
        Formula {
            num_vars,
            base_clauses: clauses.len(),
            clauses,
            motions: vec![RigidMotion::IDENTITY; num_vars as usize],
            unsat_by_construction: false,
        }
    }

    #[test]
    fn unit_clause_is_satisfiable() {
        let f = formula(1, vec![vec![1]]);
        match solve(&f, &SolverConfig::default()).unwrap() {
            SolveResult::Satisfiable(m) => assert_eq!(m, vec![true]),
            SolveResult::Unsatisfiable => panic!("expected SAT"),
        }
    }

    #[test]
    fn contradictory_units_are_unsatisfiable() {
        let f = formula(1, vec![vec![1], vec![-1]]);
        assert_eq!(
            solve(&f, &SolverConfig::default()).unwrap(),
            SolveResult::Unsatisfiable
        );
    }

    #[test]
    fn empty_clause_is_unsatisfiable() {
        let f = formula(2, vec![vec![1, 2], vec![]]);
        assert_eq!(
            solve(&f, &SolverConfig::default()).unwrap(),
            SolveResult::Unsatisfiable
        );
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsatisfiable() {
        // Three pigeons, two holes: forces real conflict analysis.
        let var = |p: i32, h: i32| (p - 1) * 2 + h;
        let mut clauses = vec![];
        for p in 1..=3 {
            clauses.push(vec![var(p, 1), var(p, 2)]);
        }
        for h in 1..=2 {
            for p1 in 1..=3 {
                for p2 in (p1 + 1)..=3 {
                    clauses.push(vec![-var(p1, h), -var(p2, h)]);
                }
            }
        }
        let f = formula(6, clauses);
        assert_eq!(
            solve(&f, &SolverConfig::default()).unwrap(),
            SolveResult::Unsatisfiable
        );
    }

    #[test]
    fn incremental_matches_batch() {
        let f = formula(3, vec![vec![1, 2, 3], vec![-1, -2], vec![-1, -3], vec![-2, -3]]);
        let cfg = SolverConfig::default();
        let batch = solve(&f, &cfg).unwrap();
        let inc = solve_incremental(&f, &[], &cfg).unwrap();
        assert_eq!(batch.is_sat(), inc.is_sat());

        // Block every model; exactly three exist.
        let mut session = SolveSession::new(&f, &cfg);
        let mut models = Vec::new();
        loop {
            match session.solve().unwrap() {
                SolveResult::Satisfiable(m) => {
                    let tv: Vec<u32> = SolveResult::Satisfiable(m.clone()).true_vars();
                    assert!(!models.contains(&tv), "blocked model returned again");
                    session.add_clause(tv.iter().map(|&v| -(v as Literal)).collect());
                    models.push(tv);
                }
                SolveResult::Unsatisfiable => break,
            }
        }
        assert_eq!(models.len(), 3);
    }

    #[test]
    fn verdicts_are_deterministic_per_seed() {
        let f = formula(
            4,
            vec![vec![1, 2], vec![-1, 3], vec![-3, 4], vec![-2, -4, 1]],
        );
        for seed in [0, 1, 42] {
            let cfg = SolverConfig {
                seed,
                ..SolverConfig::default()
            };
            let a = solve(&f, &cfg).unwrap();
            let b = solve(&f, &cfg).unwrap();
            assert_eq!(a, b);
            assert!(a.is_sat());
        }
    }

    #[test]
    fn dimacs_export_is_bit_exact() {
        let f = formula(2, vec![vec![1, -2]]);
        assert_eq!(export_dimacs(&f), "p cnf 2 1\n1 -2 0\n");
    }

    #[test]
    fn model_import_parses_v_lines() {
        let m = import_model("v 1 -2 0\n").unwrap();
        assert_eq!(m.get(&1), Some(&true));
        assert_eq!(m.get(&2), Some(&false));

        let m2 = import_model("c comment\ns SATISFIABLE\nv 3 -1\nv 2 0\n").unwrap();
        assert_eq!(m2.len(), 3);
        assert_eq!(m2.get(&3), Some(&true));

        let m3 = import_model("SAT\n1 -2 0\n").unwrap();
        assert_eq!(m3.get(&1), Some(&true));

        assert!(import_model("c nothing here\n").is_err());
    }

    #[test]
    fn conflict_budget_is_reported_distinctly() {
        // An unsatisfiable pigeonhole instance with a budget of one conflict
        // must hit the limit, not report UNSAT.
        let var = |p: i32, h: i32| (p - 1) * 3 + h;
        let mut clauses = vec![];
        for p in 1..=4 {
            clauses.push((1..=3).map(|h| var(p, h)).collect());
        }
        for h in 1..=3 {
            for p1 in 1..=4 {
                for p2 in (p1 + 1)..=4 {
                    clauses.push(vec![-var(p1, h), -var(p2, h)]);
                }
            }
        }
        let f = formula(12, clauses);
        let cfg = SolverConfig {
            max_conflicts: 1,
            ..SolverConfig::default()
        };
        match solve(&f, &cfg) {
            Err(Error::ResourceLimit(_)) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }
}
