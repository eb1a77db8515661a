//! SVG rendering of witness patches.
//!
//! Each tile (the centre and every member) becomes one `<path>` whose
//! subpaths are the boundary loops of the tile's cell union, so tiles with
//! holes render correctly under the even-odd fill rule.

use isoform_core::decide::Surround;
use isoform_core::grid::{cell_vertices, vertex_scale, Cell, GridKind};
use std::collections::BTreeMap;
use std::fmt::Write as _;

type Pt = (i64, i64);

/// Boundary loops of a cell union: every cell edge appears once per incident
/// cell, and edges shared by two cells cancel; what remains is chained into
/// closed loops.
fn outline(grid: GridKind, cells: &[Cell]) -> Vec<Vec<Pt>> {
    let mut edges: BTreeMap<(Pt, Pt), u32> = BTreeMap::new();
    for &c in cells {
        let vs = cell_vertices(grid, c);
        for i in 0..vs.len() {
            let a = vs[i];
            let b = vs[(i + 1) % vs.len()];
            if let Some(n) = edges.get_mut(&(b, a)) {
                *n -= 1;
                if *n == 0 {
                    edges.remove(&(b, a));
                }
            } else {
                *edges.entry((a, b)).or_insert(0) += 1;
            }
        }
    }
    let mut from: BTreeMap<Pt, Vec<Pt>> = BTreeMap::new();
    for (&(a, b), &n) in &edges {
        debug_assert_eq!(n, 1, "interior edge survived cancellation");
        from.entry(a).or_default().push(b);
    }
    let mut loops = Vec::new();
    while let Some((&start, _)) = from.iter().next() {
        let mut path = vec![start];
        let mut here = start;
        loop {
            let nexts = from.get_mut(&here).expect("boundary edge chain broke");
            let next = nexts.pop().expect("boundary edge chain broke");
            if nexts.is_empty() {
                from.remove(&here);
            }
            if next == start {
                break;
            }
            path.push(next);
            here = next;
        }
        loops.push(path);
    }
    loops
}

fn path_data(loops: &[Vec<Pt>], sx: f64, sy: f64) -> String {
    let mut d = String::new();
    for l in loops {
        for (i, &(x, y)) in l.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            // Flip y: SVG's y axis points down.
            let _ = write!(d, "{cmd}{:.3} {:.3} ", x as f64 * sx, -(y as f64) * sy);
        }
        d.push_str("Z ");
    }
    d.trim_end().to_string()
}

/// Render the patch: the centre tile filled distinctly, one polygon per tile.
pub fn witness_svg(s: &Surround) -> String {
    let grid = s.center().grid();
    let (sx, sy) = vertex_scale(grid);

    let mut tiles: Vec<(bool, Vec<Vec<Pt>>)> =
        vec![(true, outline(grid, s.center().cells()))];
    for m in s.members() {
        tiles.push((false, outline(grid, &m.cells)));
    }

    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (_, loops) in &tiles {
        for l in loops {
            for &(x, y) in l {
                let (px, py) = (x as f64 * sx, -(y as f64) * sy);
                min_x = min_x.min(px);
                min_y = min_y.min(py);
                max_x = max_x.max(px);
                max_y = max_y.max(py);
            }
        }
    }
    let pad = 0.04 * (max_x - min_x).max(max_y - min_y).max(1.0);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let stroke = (w.max(h) / 400.0).max(0.01);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.3} {:.3} {:.3} {:.3}" width="720" height="{:.0}">"#,
        min_x - pad,
        min_y - pad,
        w,
        h,
        (720.0 * h / w).round(),
    );
    for (is_center, loops) in &tiles {
        let fill = if *is_center { "#d95f4b" } else { "#a9c5b4" };
        let _ = writeln!(
            svg,
            r#"  <path d="{}" fill="{fill}" fill-rule="evenodd" stroke="#31302e" stroke-width="{stroke:.3}"/>"#,
            path_data(loops, sx, sy),
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use isoform_core::grid::Cell;

    #[test]
    fn square_outline_is_one_loop() {
        let cells = [Cell::square(0, 0), Cell::square(1, 0)];
        let loops = outline(GridKind::Square, &cells);
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), 6, "domino boundary has 6 corners");
    }

    #[test]
    fn ring_outline_has_two_loops() {
        let mut cells = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                if (x, y) != (1, 1) {
                    cells.push(Cell::square(x, y));
                }
            }
        }
        let loops = outline(GridKind::Square, &cells);
        assert_eq!(loops.len(), 2, "outer boundary plus hole");
    }

    #[test]
    fn hex_outline_is_hexagonal() {
        let loops = outline(GridKind::Hex, &[Cell::hex(0, 0)]);
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), 6);
    }
}
