//! Text formats: edge lists and APX for input, JSON and Graphviz DOT for
//! output.
//!
//! All writers iterate in lexicographic order and produce identical bytes
//! for identical inputs.

mod apx;
mod dot;
mod edgelist;
mod json;

pub use apx::{parse_apx, render_apx};
pub use edgelist::{parse_edge_list, render_edge_list};
pub use json::parse_solved_game_json;

use crate::graph::GameGraph;
use crate::provenance::ProvenanceSubgraph;
use crate::solver::SolvedGame;

/// Serialization to the two output formats.
pub trait Export {
    fn to_json(&self) -> String;
    fn to_dot(&self) -> String;
}

/// A solved game viewed as the argumentation framework it came from:
/// moves are printed as attacks and values as grounded labels.
#[derive(Debug, Clone, Copy)]
pub struct AfSolution<'a>(pub &'a SolvedGame);

/// An argument explanation, already in attack orientation (as returned by
/// [`crate::argumentation::argument_provenance`]).
#[derive(Debug, Clone, Copy)]
pub struct AfExplanation<'a>(pub &'a ProvenanceSubgraph);

impl Export for GameGraph {
    fn to_json(&self) -> String {
        json::graph(self)
    }

    fn to_dot(&self) -> String {
        dot::graph(self)
    }
}

impl Export for SolvedGame {
    fn to_json(&self) -> String {
        json::solved(self)
    }

    fn to_dot(&self) -> String {
        dot::solved(self)
    }
}

impl Export for ProvenanceSubgraph {
    fn to_json(&self) -> String {
        json::subgraph(self)
    }

    fn to_dot(&self) -> String {
        dot::subgraph(self, dot::Palette::Game)
    }
}

impl Export for AfSolution<'_> {
    fn to_json(&self) -> String {
        json::af_solution(self.0)
    }

    fn to_dot(&self) -> String {
        dot::af_solution(self.0)
    }
}

impl Export for AfExplanation<'_> {
    fn to_json(&self) -> String {
        json::af_explanation(self.0)
    }

    fn to_dot(&self) -> String {
        dot::subgraph(self.0, dot::Palette::Argumentation)
    }
}
