//! Chamfer distance transforms by alternating raster passes.
//!
//! The field evolves under min-sum recursions: each forward pass scans the
//! grid in row-major order updating y(p) = min over the causal half-mask
//! {NW+b, N+a, NE+b, W+a} and the current value; each backward pass uses
//! the reflected half-mask {SE+b, S+a, SW+b, E+a} in reverse order.
//! Out-of-grid neighbors contribute ⊤ (no wraparound) and obstacle cells
//! are pinned to ⊤ on every pass. Without obstacles two passes reach the
//! chamfer distance exactly; with obstacles the passes repeat until a pass
//! changes nothing or `max_passes` is hit.

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GridField {
    rows: usize,
    cols: usize,
    /// Initial costs: e (= 0) on sources, ⊤ elsewhere; finite seeds allowed.
    field: Vec<Scalar>,
    obstacle: Vec<bool>,
    /// Local step costs (axial, diagonal).
    step_a: f64,
    step_b: f64,
}

impl GridField {
    /// Build from an initial cost field (max-plus scalars; ⊤ = unreached)
    /// and an obstacle mask. Sources are the cells with non-⊤ cost.
    pub fn new(
        rows: usize,
        cols: usize,
        field: Vec<Scalar>,
        obstacle: Vec<bool>,
        step_a: f64,
        step_b: f64,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("grid must be nonempty".into()));
        }
        if field.len() != rows * cols || obstacle.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "grid {rows}x{cols} needs {} cells",
                rows * cols
            )));
        }
        if step_a.is_nan() || step_a <= 0.0 || step_b.is_nan() || step_b <= 0.0 {
            return Err(Error::InvalidArgument(
                "local distance steps must be positive".into(),
            ));
        }
        for (i, (&f, &w)) in field.iter().zip(&obstacle).enumerate() {
            if w && !f.is_top() {
                return Err(Error::InvalidArgument(format!(
                    "cell {i} is both a source and an obstacle"
                )));
            }
        }
        Ok(GridField {
            rows,
            cols,
            field,
            obstacle,
            step_a,
            step_b,
        })
    }

    /// Sources given as coordinates, everything else ⊤.
    pub fn from_sources(
        rows: usize,
        cols: usize,
        sources: &[(usize, usize)],
        obstacles: &[(usize, usize)],
        step_a: f64,
        step_b: f64,
    ) -> Result<Self> {
        let mut field = vec![Scalar::Top; rows * cols];
        let mut mask = vec![false; rows * cols];
        for &(r, c) in sources {
            if r >= rows || c >= cols {
                return Err(Error::InvalidArgument(format!(
                    "source ({r},{c}) outside {rows}x{cols} grid"
                )));
            }
            field[r * cols + c] = Scalar::Finite(0.0);
        }
        for &(r, c) in obstacles {
            if r >= rows || c >= cols {
                return Err(Error::InvalidArgument(format!(
                    "obstacle ({r},{c}) outside {rows}x{cols} grid"
                )));
            }
            mask[r * cols + c] = true;
        }
        GridField::new(rows, cols, field, mask, step_a, step_b)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn steps(&self) -> (f64, f64) {
        (self.step_a, self.step_b)
    }
}

#[derive(Debug, Clone)]
pub struct DistanceField {
    pub field: Vec<Scalar>,
    /// Number of passes that changed the field.
    pub passes_used: usize,
    /// Field snapshots taken after each executed pass (changing ones only).
    pub pass_trace: Vec<Vec<Scalar>>,
}

/// Iterated two-pass chamfer distance transform. Stops when a pass changes
/// nothing or after `max_passes` passes.
pub fn distance_transform(g: &GridField, max_passes: usize) -> Result<DistanceField> {
    let c = Clodum::MaxPlus;
    let (rows, cols) = (g.rows, g.cols);
    let mut field = g.field.clone();
    for (i, &w) in g.obstacle.iter().enumerate() {
        if w {
            field[i] = Scalar::Top;
        }
    }
    let a = Scalar::Finite(g.step_a);
    let b = Scalar::Finite(g.step_b);

    let mut trace = Vec::new();
    let mut passes_used = 0;
    for pass in 1..=max_passes {
        let forward = pass % 2 == 1;
        let mut changed = false;
        let idx = |r: usize, cc: usize| r * cols + cc;
        let cell_order: Box<dyn Iterator<Item = (usize, usize)>> = if forward {
            Box::new((0..rows).flat_map(move |r| (0..cols).map(move |cc| (r, cc))))
        } else {
            Box::new(
                (0..rows)
                    .rev()
                    .flat_map(move |r| (0..cols).rev().map(move |cc| (r, cc))),
            )
        };
        for (r, cc) in cell_order {
            if g.obstacle[idx(r, cc)] {
                continue;
            }
            // causal neighbors with their step costs, ⊤ off-grid
            let neighbors: [(i64, i64, Scalar); 4] = if forward {
                [
                    (r as i64 - 1, cc as i64 - 1, b),
                    (r as i64 - 1, cc as i64, a),
                    (r as i64 - 1, cc as i64 + 1, b),
                    (r as i64, cc as i64 - 1, a),
                ]
            } else {
                [
                    (r as i64 + 1, cc as i64 + 1, b),
                    (r as i64 + 1, cc as i64, a),
                    (r as i64 + 1, cc as i64 - 1, b),
                    (r as i64, cc as i64 + 1, a),
                ]
            };
            let mut best = field[idx(r, cc)];
            for (nr, ncc, step) in neighbors {
                if nr < 0 || nr >= rows as i64 || ncc < 0 || ncc >= cols as i64 {
                    continue;
                }
                let nv = field[idx(nr as usize, ncc as usize)];
                best = best.meet(c.dual_mul(step, nv));
            }
            if best != field[idx(r, cc)] {
                field[idx(r, cc)] = best;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        passes_used = pass;
        trace.push(field.clone());
    }

    Ok(DistanceField {
        field,
        passes_used,
        pass_trace: trace,
    })
}
