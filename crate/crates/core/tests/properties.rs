//! Randomized property suites, runnable standalone:
//!
//! ```text
//! cargo test -p isoform-core --test properties
//! ```
//!
//! Each property runs at least 1000 random cases.

use isoform_core::decide::{classify, DecideConfig};
use isoform_core::encoder::{blocking_clause, Clause, Formula};
use isoform_core::grid::{
    apply_motion, compose, edge_neighbors, invert, point_neighbors, Cell, GridKind, RigidMotion,
};
use isoform_core::polyform::{halo, make_polyform, transform_cells, Polyform};
use isoform_core::solver::{model_satisfies, solve, SolveResult, SolveSession, SolverConfig};
use proptest::prelude::*;
use std::collections::BTreeSet;

const CASES: u32 = 1000;

fn arb_grid() -> impl Strategy<Value = GridKind> {
    prop_oneof![
        Just(GridKind::Square),
        Just(GridKind::Hex),
        Just(GridKind::Iamond),
        Just(GridKind::Kite),
    ]
}

fn arb_motion(grid: GridKind) -> impl Strategy<Value = RigidMotion> {
    (0..grid.point_group_order(), -8i32..=8, -8i32..=8)
        .prop_map(|(p, a, b)| RigidMotion::new(p, (a, b)))
}

fn arb_cell(grid: GridKind) -> impl Strategy<Value = Cell> {
    (-8i32..=8, -8i32..=8, 0..grid.sub_count()).prop_map(|(a, b, sub)| Cell { a, b, sub })
}

/// Deterministically grow a connected shape, steering with `picks`.
fn grow_polyform(grid: GridKind, n: usize, picks: &[u32]) -> Polyform {
    let mut cells: BTreeSet<Cell> = BTreeSet::from([Cell { a: 0, b: 0, sub: 0 }]);
    for pick in picks.iter().take(n - 1) {
        let frontier: Vec<Cell> = cells
            .iter()
            .flat_map(|&c| edge_neighbors(grid, c))
            .filter(|c| !cells.contains(c))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        cells.insert(frontier[*pick as usize % frontier.len()]);
    }
    make_polyform(grid, cells).unwrap()
}

fn arb_polyform(max_cells: usize) -> impl Strategy<Value = Polyform> {
    (
        arb_grid(),
        1..=max_cells,
        proptest::collection::vec(any::<u32>(), max_cells),
    )
        .prop_map(move |(grid, n, picks)| grow_polyform(grid, n, &picks))
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    let clause = proptest::collection::vec((1i32..=8, any::<bool>()), 1..=3).prop_map(|lits| {
        let mut c: Clause = lits
            .into_iter()
            .map(|(v, neg)| if neg { -v } else { v })
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    });
    proptest::collection::vec(clause, 0..=12).prop_map(|clauses| Formula {
        num_vars: 8,
        base_clauses: clauses.len(),
        clauses,
        motions: vec![RigidMotion::IDENTITY; 8],
        unsat_by_construction: false,
    })
}

fn truth_table_models(f: &Formula) -> Vec<Vec<bool>> {
    let n = f.num_vars as usize;
    (0..1u32 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|m| model_satisfies(&f.clauses, m))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    // ---- group laws -------------------------------------------------------

    #[test]
    fn motions_form_a_group(
        (grid, a, b, c, x) in arb_grid().prop_flat_map(|g| (
            Just(g), arb_motion(g), arb_motion(g), arb_motion(g), arb_cell(g),
        )),
    ) {
        prop_assert_eq!(compose(grid, compose(grid, a, b), c), compose(grid, a, compose(grid, b, c)));
        prop_assert_eq!(compose(grid, a, RigidMotion::IDENTITY), a);
        prop_assert_eq!(compose(grid, RigidMotion::IDENTITY, a), a);
        prop_assert_eq!(compose(grid, a, invert(grid, a)), RigidMotion::IDENTITY);
        prop_assert_eq!(
            apply_motion(grid, compose(grid, a, b), x),
            apply_motion(grid, a, apply_motion(grid, b, x))
        );
        prop_assert_eq!(apply_motion(grid, invert(grid, a), apply_motion(grid, a, x)), x);
    }

    #[test]
    fn action_is_injective_and_equivariant(
        (grid, m, c1, c2) in arb_grid().prop_flat_map(|g| (
            Just(g), arb_motion(g), arb_cell(g), arb_cell(g),
        )),
    ) {
        if c1 != c2 {
            prop_assert_ne!(apply_motion(grid, m, c1), apply_motion(grid, m, c2));
        }
        // Adjacency is motion-equivariant.
        let adj_before = point_neighbors(grid, c1).contains(&c2);
        let adj_after = point_neighbors(grid, apply_motion(grid, m, c1))
            .contains(&apply_motion(grid, m, c2));
        prop_assert_eq!(adj_before, adj_after);
    }

    // ---- halo invariants ---------------------------------------------------

    #[test]
    fn halo_is_exactly_the_point_boundary(t in arb_polyform(7)) {
        let h = halo(&t);
        prop_assert!(!h.is_empty());
        for c in &h {
            prop_assert!(!t.contains(*c));
            prop_assert!(point_neighbors(t.grid(), *c).iter().any(|d| t.contains(*d)));
        }
        for &c in t.cells() {
            for d in point_neighbors(t.grid(), c) {
                prop_assert!(t.contains(d) || h.contains(&d));
            }
        }
    }

    // ---- point-group classification invariance -----------------------------

    #[test]
    fn classification_is_point_group_invariant(
        t in arb_polyform(4),
        p_raw in any::<u8>(),
    ) {
        let grid = t.grid();
        let g = RigidMotion::new(p_raw % grid.point_group_order(), (0, 0));
        let image = make_polyform(grid, transform_cells(grid, g, t.cells())).unwrap();
        let cfg = DecideConfig::default();
        let a = classify(&t, &cfg).unwrap();
        let b = classify(&image, &cfg).unwrap();
        prop_assert_eq!(a.tag(), b.tag());
    }

    // ---- blocking-clause progress ------------------------------------------

    #[test]
    fn blocking_never_repeats_a_true_set(f in arb_formula()) {
        // A blocking clause negates exactly the true variables, so it kills
        // the returned true-set and all of its supersets; successive true-sets
        // must form an antichain and the loop must terminate in UNSAT.
        let mut f = f;
        f.clauses.push((1..=f.num_vars as i32).collect()); // keep true-sets nonempty
        let cfg = SolverConfig::default();
        let mut session = SolveSession::new(&f, &cfg);
        let mut seen: Vec<BTreeSet<u32>> = Vec::new();
        for _ in 0..=1u32 << f.num_vars {
            match session.solve().unwrap() {
                SolveResult::Satisfiable(model) => {
                    prop_assert!(model_satisfies(&f.clauses, &model));
                    let tv: BTreeSet<u32> = (0..model.len())
                        .filter(|&i| model[i])
                        .map(|i| (i + 1) as u32)
                        .collect();
                    for earlier in &seen {
                        prop_assert!(!tv.is_superset(earlier), "blocked true-set resurfaced");
                    }
                    let clause = blocking_clause(&tv.iter().copied().collect::<Vec<u32>>());
                    prop_assert!(!model_satisfies(&[clause.clone()], &model));
                    session.add_clause(clause);
                    seen.push(tv);
                }
                SolveResult::Unsatisfiable => return Ok(()),
            }
        }
        prop_assert!(false, "blocking loop failed to terminate");
    }

    #[test]
    fn full_blocking_enumerates_exactly_the_models(f in arb_formula()) {
        // Negating whole assignments enumerates every model exactly once;
        // the count must match a truth table.
        let cfg = SolverConfig::default();
        let expected = truth_table_models(&f);
        let mut session = SolveSession::new(&f, &cfg);
        let mut seen: Vec<Vec<bool>> = Vec::new();
        loop {
            match session.solve().unwrap() {
                SolveResult::Satisfiable(model) => {
                    prop_assert!(!seen.contains(&model), "model repeated");
                    session.add_clause(
                        (1..=f.num_vars as i32)
                            .map(|v| if model[(v - 1) as usize] { -v } else { v })
                            .collect(),
                    );
                    seen.push(model);
                    prop_assert!(seen.len() <= expected.len());
                }
                SolveResult::Unsatisfiable => break,
            }
        }
        prop_assert_eq!(seen.len(), expected.len());
        for m in &seen {
            prop_assert!(expected.contains(m));
        }
    }

    // ---- model verification -------------------------------------------------

    #[test]
    fn verdicts_match_truth_tables(f in arb_formula()) {
        let expected = truth_table_models(&f);
        match solve(&f, &SolverConfig::default()).unwrap() {
            SolveResult::Satisfiable(model) => {
                prop_assert!(model_satisfies(&f.clauses, &model));
                prop_assert!(!expected.is_empty());
            }
            SolveResult::Unsatisfiable => prop_assert!(expected.is_empty()),
        }
    }
}
