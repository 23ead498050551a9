//! The running example: eleven positions, twelve moves.

use crate::graph::{build_graph, GameGraph};

pub const FIG1_POSITIONS: [&str; 11] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "o"];

pub const FIG1_MOVES: [(&str, &str); 12] = [
    ("a", "b"),
    ("a", "o"),
    ("c", "d"),
    ("c", "e"),
    ("d", "e"),
    ("d", "f"),
    ("d", "g"),
    ("d", "h"),
    ("e", "h"),
    ("g", "d"),
    ("h", "i"),
    ("i", "j"),
];

pub fn fig1() -> GameGraph {
    build_graph(FIG1_POSITIONS, FIG1_MOVES).expect("fixture ids are valid")
}
