//! Isohedral tiling detection for polyforms.
//!
//! A polyform — a finite edge-connected set of cells in one of four grids
//! (squares, hexagons, triangles, kites) — tiles the plane isohedrally exactly
//! when it has a surround in which every member is extendable: the surround,
//! transported onto each of its members, conflicts with nothing in the
//! original patch. This crate decides that question by compiling it into a
//! Boolean formula over candidate surround members, solving it with an
//! embedded SAT solver (or any external DIMACS solver), and geometrically
//! verifying every witness before reporting it.
//!
//! The crate is organized along the pipeline:
//!
//! * [`grid`] — cell coordinates, adjacency, and rigid-motion arithmetic;
//! * [`polyform`] — shapes, halos, hole detection, free enumeration;
//! * [`placement`] — candidate surround members and their interactions;
//! * [`encoder`] — CNF construction for surroundability and isohedrality;
//! * [`solver`] — the SAT backend and DIMACS interchange;
//! * [`decide`] — solve loops, witness verification, classification.

pub mod decide;
pub mod encoder;
pub mod grid;
pub mod placement;
pub mod polyform;
pub mod solver;

use thiserror::Error as ThisError;

/// Errors shared across the crate.
#[derive(Debug, ThisError)]
pub enum Error {
    /// A polyform was constructed from an empty cell set.
    #[error("polyform has no cells")]
    EmptyInput,

    /// A polyform's cells are not connected under edge adjacency.
    #[error("cells are not edge-connected")]
    DisconnectedCells,

    /// A text token could not be parsed.
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// A configured conflict or time budget was exhausted before the solver
    /// reached a verdict. Never conflated with unsatisfiability.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An external solver process failed or produced unusable output.
    #[error("external solver: {0}")]
    ExternalSolver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Error {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
