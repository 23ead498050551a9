//! Win-move games with provenance.
//!
//! Solves finite game graphs by backward induction, types every move of the
//! solved game, extracts the subgraphs that explain a position's value, and
//! reuses the same machinery for grounded semantics of argumentation
//! frameworks.
//!
//! ```
//! use gameprov::{fixtures::fig1, solve, primary_provenance, Value};
//!
//! let (solved, _trace) = solve(&fig1());
//! assert_eq!(solved.value("c").unwrap(), Value::Lost);
//! let why = primary_provenance(&solved, "d").unwrap();
//! assert!(why.contains_edge("d", "f"));
//! ```

pub mod argumentation;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod graph;
pub mod oracle;
pub mod provenance;
pub mod rpq;
pub mod solver;

pub use argumentation::{
    af_to_game, argument_provenance, grounded_labeling, AfLabel, ArgumentationFramework,
};
pub use error::{Error, Result};
pub use graph::{build_graph, GameGraph, PositionId};
pub use provenance::{
    actual_provenance, match_rpq, potential_provenance, primary_provenance, provenance,
    standard_pattern, ProvenanceKind, ProvenanceSubgraph,
};
pub use rpq::{Automaton, Letter, Rpq, Symbol};
pub use solver::{
    solve, solve_fast, validate_solution, EdgeAnnotation, EdgeType, Length, NodeLabel, Rule,
    SolvedGame, Step, StepTrace, Value, Violation,
};
