//! Grounded semantics for abstract argumentation frameworks.
//!
//! An attack `y -> x` becomes the game move `x -> y`: an argument is defeated
//! exactly when it has an attacker that is not itself defeated, which is the
//! win-move rule read backwards. Solving the resulting game gives the grounded
//! labeling, with won positions defeated, lost positions accepted and drawn
//! positions undecided.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{GameGraph, PositionId};
use crate::provenance::{provenance, ProvenanceKind, ProvenanceSubgraph};
use crate::solver::{solve_fast, Length, SolvedGame, Value};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<PositionId>,
    /// `(attacker, target)` pairs.
    attacks: BTreeSet<(PositionId, PositionId)>,
}

impl ArgumentationFramework {
    /// Fails with [`Error::UndeclaredArgument`] if an attack mentions an
    /// argument that is not listed.
    pub fn new<A, T>(arguments: A, attacks: T) -> Result<Self>
    where
        A: IntoIterator<Item = PositionId>,
        T: IntoIterator<Item = (PositionId, PositionId)>,
    {
        let arguments: BTreeSet<PositionId> = arguments.into_iter().collect();
        let attacks: BTreeSet<(PositionId, PositionId)> = attacks.into_iter().collect();
        for (a, b) in &attacks {
            for name in [a, b] {
                if !arguments.contains(name) {
                    return Err(Error::UndeclaredArgument {
                        line: 0,
                        name: name.to_string(),
                    });
                }
            }
        }
        Ok(Self { arguments, attacks })
    }

    /// The framework whose game is `g`: every move `x -> y` becomes the
    /// attack `y -> x`.
    pub fn from_game(g: &GameGraph) -> Self {
        Self {
            arguments: g.positions().cloned().collect(),
            attacks: g.moves().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    pub fn arguments(&self) -> impl Iterator<Item = &PositionId> + '_ {
        self.arguments.iter()
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&PositionId, &PositionId)> + '_ {
        self.attacks.iter().map(|(a, b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn contains(&self, x: &str) -> bool {
        self.arguments.contains(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AfLabel {
    Accepted,
    Defeated,
    Undecided,
}

impl AfLabel {
    pub fn from_value(v: Value) -> AfLabel {
        match v {
            Value::Won => AfLabel::Defeated,
            Value::Lost => AfLabel::Accepted,
            Value::Drawn => AfLabel::Undecided,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AfLabel::Accepted => "accepted",
            AfLabel::Defeated => "defeated",
            AfLabel::Undecided => "undecided",
        }
    }
}

impl fmt::Display for AfLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Moves point from each target to its attackers.
pub fn af_to_game(af: &ArgumentationFramework) -> GameGraph {
    GameGraph::from_ids(
        af.arguments.iter().cloned(),
        af.attacks.iter().map(|(a, b)| (b.clone(), a.clone())),
    )
}

/// Solves the framework's game.
pub fn solve_af(af: &ArgumentationFramework) -> SolvedGame {
    solve_fast(&af_to_game(af))
}

/// Grounded label and length of every argument.
pub fn grounded_labeling(af: &ArgumentationFramework) -> BTreeMap<PositionId, (AfLabel, Length)> {
    solve_af(af)
        .labels()
        .map(|(x, l)| (x.clone(), (AfLabel::from_value(l.value), l.length)))
        .collect()
}

/// Explains the status of argument `x`: the game provenance of `x`, turned
/// back into attack orientation. Edge annotations are carried over unchanged.
pub fn argument_provenance(
    af: &ArgumentationFramework,
    x: &str,
    kind: ProvenanceKind,
) -> Result<ProvenanceSubgraph> {
    let solved = solve_af(af);
    Ok(provenance(&solved, x, kind)?.reversed())
}
