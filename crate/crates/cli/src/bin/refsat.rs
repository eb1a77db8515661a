//! refsat: a small standalone DPLL solver for DIMACS CNF.
//!
//! Reads a CNF from stdin (or a file given as the first argument), prints
//! `s SATISFIABLE` with `v` model lines or `s UNSATISFIABLE`, and exits with
//! the conventional status 10/20. It shares no code with the main solver; it
//! exists as an independent reference for cross-checking verdicts through the
//! `--solver=dimacs-pipe:` interface.
//!
//! The algorithm is plain DPLL: counter-based unit propagation and
//! chronological backtracking, branching on the first unassigned literal of
//! the first unsatisfied clause.

use std::io::Read;

#[derive(Clone, Copy)]
enum Entry {
    Decision { lit: i32, flipped: bool },
    Implied { lit: i32 },
}

impl Entry {
    fn lit(self) -> i32 {
        match self {
            Entry::Decision { lit, .. } | Entry::Implied { lit } => lit,
        }
    }
}

struct Dpll {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
    // Occurrence lists per literal code 2*(var-1) + (negative ? 1 : 0).
    occ: Vec<Vec<usize>>,
    assign: Vec<i8>,
    n_true: Vec<u32>,
    n_false: Vec<u32>,
    trail: Vec<Entry>,
}

fn code(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

impl Dpll {
    fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Dpll {
        let mut occ = vec![Vec::new(); 2 * num_vars];
        for (ci, c) in clauses.iter().enumerate() {
            for &l in c {
                occ[code(l)].push(ci);
            }
        }
        Dpll {
            num_vars,
            n_true: vec![0; clauses.len()],
            n_false: vec![0; clauses.len()],
            occ,
            assign: vec![0; num_vars + 1],
            trail: Vec::new(),
            clauses,
        }
    }

    fn value(&self, l: i32) -> i8 {
        let a = self.assign[l.unsigned_abs() as usize];
        if l > 0 {
            a
        } else {
            -a
        }
    }

    /// Assign a literal, update clause counters, and collect implied units.
    /// The assignment always completes, even on conflict, so backtracking can
    /// unwind it uniformly.
    fn assign_lit(&mut self, entry: Entry, implied: &mut Vec<i32>) -> Result<(), ()> {
        let l = entry.lit();
        debug_assert_eq!(self.value(l), 0);
        self.assign[l.unsigned_abs() as usize] = if l > 0 { 1 } else { -1 };
        self.trail.push(entry);
        for i in 0..self.occ[code(l)].len() {
            let ci = self.occ[code(l)][i];
            self.n_true[ci] += 1;
        }
        let mut conflict = false;
        for i in 0..self.occ[code(-l)].len() {
            let ci = self.occ[code(-l)][i];
            self.n_false[ci] += 1;
            if self.n_true[ci] > 0 {
                continue;
            }
            let open = self.clauses[ci].len() as u32 - self.n_false[ci];
            if open == 0 {
                conflict = true;
            } else if open == 1 {
                if let Some(&u) = self.clauses[ci].iter().find(|&&q| self.value(q) == 0) {
                    implied.push(u);
                }
            }
        }
        if conflict {
            Err(())
        } else {
            Ok(())
        }
    }

    fn unassign_last(&mut self) -> Entry {
        let entry = self.trail.pop().expect("trail is nonempty");
        let l = entry.lit();
        self.assign[l.unsigned_abs() as usize] = 0;
        for i in 0..self.occ[code(l)].len() {
            let ci = self.occ[code(l)][i];
            self.n_true[ci] -= 1;
        }
        for i in 0..self.occ[code(-l)].len() {
            let ci = self.occ[code(-l)][i];
            self.n_false[ci] -= 1;
        }
        entry
    }

    /// Unwind to the deepest unflipped decision and take its other branch.
    /// Returns false when the whole tree is exhausted.
    fn backtrack(&mut self, pending: &mut Vec<i32>) -> bool {
        pending.clear();
        loop {
            let Some(&top) = self.trail.last() else {
                return false;
            };
            match top {
                Entry::Decision { lit, flipped: false } => {
                    self.unassign_last();
                    let entry = Entry::Decision {
                        lit: -lit,
                        flipped: true,
                    };
                    if self.assign_lit(entry, pending).is_ok() {
                        return true;
                    }
                    pending.clear();
                }
                _ => {
                    self.unassign_last();
                }
            }
        }
    }

    fn pick_literal(&self) -> i32 {
        for (ci, c) in self.clauses.iter().enumerate() {
            if self.n_true[ci] > 0 {
                continue;
            }
            if let Some(&l) = c.iter().find(|&&l| self.value(l) == 0) {
                return l;
            }
        }
        for v in 1..=self.num_vars {
            if self.assign[v] == 0 {
                return v as i32;
            }
        }
        unreachable!("pick_literal called with all variables assigned")
    }

    fn solve(&mut self) -> bool {
        if self.clauses.iter().any(|c| c.is_empty()) {
            return false;
        }
        let mut pending: Vec<i32> = self
            .clauses
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        loop {
            while let Some(l) = pending.pop() {
                match self.value(l) {
                    1 => continue,
                    -1 => {
                        if !self.backtrack(&mut pending) {
                            return false;
                        }
                    }
                    _ => {
                        if self
                            .assign_lit(Entry::Implied { lit: l }, &mut pending)
                            .is_err()
                            && !self.backtrack(&mut pending)
                        {
                            return false;
                        }
                    }
                }
            }
            if self.trail.len() == self.num_vars {
                return true;
            }
            let l = self.pick_literal();
            let entry = Entry::Decision {
                lit: l,
                flipped: false,
            };
            if self.assign_lit(entry, &mut pending).is_err() && !self.backtrack(&mut pending) {
                return false;
            }
        }
    }
}

fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i32>>), String> {
    let mut num_vars = 0usize;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(format!("bad problem line: {line}"));
            }
            num_vars = fields[1].parse().map_err(|_| "bad variable count")?;
            continue;
        }
        for tok in line.split_whitespace() {
            let l: i32 = tok.parse().map_err(|_| format!("bad literal: {tok}"))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                num_vars = num_vars.max(l.unsigned_abs() as usize);
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    Ok((num_vars, clauses))
}

fn main() {
    let mut text = String::new();
    let arg = std::env::args().nth(1);
    let read = match arg {
        Some(path) => std::fs::read_to_string(&path).map(|s| text = s),
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    if let Err(e) = read {
        eprintln!("refsat: {e}");
        std::process::exit(1);
    }
    let (num_vars, clauses) = match parse_dimacs(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("refsat: {e}");
            std::process::exit(1);
        }
    };
    let mut solver = Dpll::new(num_vars, clauses);
    if solver.solve() {
        println!("s SATISFIABLE");
        let mut line = String::from("v");
        for v in 1..=num_vars {
            let l = if solver.assign[v] == 1 {
                v as i32
            } else {
                -(v as i32)
            };
            line.push_str(&format!(" {l}"));
            if line.len() > 72 {
                println!("{line}");
                line = String::from("v");
            }
        }
        println!("{line} 0");
        std::process::exit(10);
    } else {
        println!("s UNSATISFIABLE");
        std::process::exit(20);
    }
}
