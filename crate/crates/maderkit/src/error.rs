//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop arc ({vertex},{vertex}) is not allowed")]
    LoopArc { vertex: usize },
    #[error("arc ({},{}) has an endpoint outside 0..{order}", arc.0, arc.1)]
    ArcOutOfRange { arc: (usize, usize), order: usize },
    #[error("vertex {vertex} outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {order} exceeds the canonical-form limit {max}")]
    CanonOrderTooLarge { order: usize, max: usize },
    #[error("order {order} too large for exhaustive enumeration (max {max}); use sampling mode instead")]
    ExhaustiveTooLarge { order: usize, max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("assignment is not total on the requested vertex set")]
    PartialAssignment,
    #[error("coloring is not acyclic: color class {class} induces a dicycle")]
    ClassNotAcyclic { class: usize },
    #[error("dichromatic number of the subdigraph exceeds k={k}")]
    ChromaticExceedsK { k: usize },
    #[error("no anchor chain exists: the coloring is not lex-minimal or a premise fails")]
    NotLexMinimal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("size guard exceeded: host order {host} (max {host_max}) / pattern order {pattern} (max {pattern_max})")]
    SizeGuard { host: usize, host_max: usize, pattern: usize, pattern_max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("arc ({},{}) is not between consecutive spine vertices", arc.0, arc.1)]
    NonSpineArc { arc: (usize, usize) },
    #[error("end arc must be omitted exactly when the ear has a single vertex")]
    EndArcMismatch,
    #[error("attach vertex {vertex} outside 0..{order}")]
    BadAttachVertex { vertex: usize, order: usize },
    #[error("search budget exceeded: |V(F)| + slack = {needed} > limit {limit}")]
    BudgetExceeded { needed: usize, limit: usize },
    #[error("derivation replay failed: {reason}")]
    ReplayMismatch { reason: String },
}
