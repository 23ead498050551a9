//! Solving win-move games by backward induction.
//!
//! [`solve`] applies the two labeling rules in synchronized sweeps: step 0
//! marks every sink lost, odd steps mark a position won when some follower
//! is already lost, and even steps mark a position lost once all of its
//! followers are won. Each sweep only reads labels committed by earlier
//! sweeps, so the step at which a position gets its value is exactly its
//! length. Whatever is left unlabeled when a sweep makes no progress is drawn.
//!
//! [`solve_fast`] computes the same labeling with a counter-based worklist in
//! `O(|V| + |E|)`.
//!
//! Edge types are not taken from the sweeps. They are derived afterwards from
//! the final node labels (see [`EdgeAnnotation::classify`]); the sweeps only
//! record the marks they would have placed, which tests compare against.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{GameGraph, PositionId};

/// Value of a position under optimal play, from the viewpoint of the player
/// to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Won,
    Lost,
    Drawn,
}

impl Value {
    pub fn as_str(self) -> &'static str {
        match self {
            Value::Won => "won",
            Value::Lost => "lost",
            Value::Drawn => "drawn",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number of moves of an optimal play, or infinity for drawn positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    /// `1 + self`, with `1 + inf = inf`.
    pub fn succ(self) -> Length {
        match self {
            Length::Finite(n) => Length::Finite(n + 1),
            Length::Infinite => Length::Infinite,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Length::Infinite
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// The seven kinds of moves in a solved game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    /// Won to lost, and the fastest such win.
    WinPrimary,
    /// Won to lost, but slower than the fastest win.
    WinSecondary,
    /// Lost to won.
    Delaying,
    /// Drawn to drawn.
    Drawing,
    /// Won to won.
    Blunder1,
    /// Won to drawn.
    Blunder2,
    /// Drawn to won.
    Blunder3,
}

impl EdgeType {
    pub const ALL: [EdgeType; 7] = [
        EdgeType::WinPrimary,
        EdgeType::WinSecondary,
        EdgeType::Delaying,
        EdgeType::Drawing,
        EdgeType::Blunder1,
        EdgeType::Blunder2,
        EdgeType::Blunder3,
    ];

    pub fn is_blunder(self) -> bool {
        matches!(
            self,
            EdgeType::Blunder1 | EdgeType::Blunder2 | EdgeType::Blunder3
        )
    }

    /// Values of the source and target positions this type connects.
    pub fn endpoint_values(self) -> (Value, Value) {
        match self {
            EdgeType::WinPrimary | EdgeType::WinSecondary => (Value::Won, Value::Lost),
            EdgeType::Delaying => (Value::Lost, Value::Won),
            EdgeType::Drawing => (Value::Drawn, Value::Drawn),
            EdgeType::Blunder1 => (Value::Won, Value::Won),
            EdgeType::Blunder2 => (Value::Won, Value::Drawn),
            EdgeType::Blunder3 => (Value::Drawn, Value::Won),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeType::WinPrimary => "win_primary",
            EdgeType::WinSecondary => "win_secondary",
            EdgeType::Delaying => "delaying",
            EdgeType::Drawing => "drawing",
            EdgeType::Blunder1 => "blunder_ww",
            EdgeType::Blunder2 => "blunder_wd",
            EdgeType::Blunder3 => "blunder_dw",
        }
    }

    pub fn from_name(name: &str) -> Option<EdgeType> {
        EdgeType::ALL.into_iter().find(|t| t.as_str() == name)
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeLabel {
    pub value: Value,
    pub length: Length,
}

impl NodeLabel {
    pub fn won(len: u32) -> Self {
        Self {
            value: Value::Won,
            length: Length::Finite(len),
        }
    }

    pub fn lost(len: u32) -> Self {
        Self {
            value: Value::Lost,
            length: Length::Finite(len),
        }
    }

    pub fn drawn() -> Self {
        Self {
            value: Value::Drawn,
            length: Length::Infinite,
        }
    }

    /// Drawn iff infinite, won iff odd, lost iff even.
    pub fn has_valid_parity(&self) -> bool {
        match (self.value, self.length) {
            (Value::Drawn, Length::Infinite) => true,
            (Value::Won, Length::Finite(n)) => n % 2 == 1,
            (Value::Lost, Length::Finite(n)) => n % 2 == 0,
            _ => false,
        }
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.value, self.length)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeAnnotation {
    pub edge_type: EdgeType,
    /// Present for the four non-blunder types only.
    pub length: Option<Length>,
}

impl EdgeAnnotation {
    /// Types a move from the labels of its endpoints. Returns `None` for the
    /// three impossible combinations (lost to lost, lost to drawn, drawn to
    /// lost).
    pub fn classify(src: NodeLabel, dst: NodeLabel) -> Option<EdgeAnnotation> {
        let typed = |edge_type, length| Some(EdgeAnnotation { edge_type, length });
        match (src.value, dst.value) {
            (Value::Won, Value::Lost) => {
                let len = dst.length.succ();
                let edge_type = if src.length == len {
                    EdgeType::WinPrimary
                } else {
                    EdgeType::WinSecondary
                };
                typed(edge_type, Some(len))
            }
            (Value::Lost, Value::Won) => typed(EdgeType::Delaying, Some(dst.length.succ())),
            (Value::Drawn, Value::Drawn) => typed(EdgeType::Drawing, Some(Length::Infinite)),
            (Value::Won, Value::Won) => typed(EdgeType::Blunder1, None),
            (Value::Won, Value::Drawn) => typed(EdgeType::Blunder2, None),
            (Value::Drawn, Value::Won) => typed(EdgeType::Blunder3, None),
            (Value::Lost, Value::Lost) | (Value::Lost, Value::Drawn) | (Value::Drawn, Value::Lost) => {
                None
            }
        }
    }
}

impl fmt::Display for EdgeAnnotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.length {
            Some(len) => write!(f, "{}/{}", self.edge_type, len),
            None => write!(f, "{}", self.edge_type),
        }
    }
}

/// A game graph with every position labeled and every move typed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedGame {
    graph: GameGraph,
    labels: Vec<NodeLabel>,
    // Parallel to `graph.succ(i)`.
    edges: Vec<Vec<EdgeAnnotation>>,
}

impl SolvedGame {
    /// Labels `graph` with the given node labels and types every move from
    /// them. Fails on a missing label or on a move whose endpoints admit no
    /// type.
    pub fn from_labels(graph: GameGraph, labels: &BTreeMap<PositionId, NodeLabel>) -> Result<Self> {
        let labels = graph
            .positions()
            .map(|p| {
                labels
                    .get(p)
                    .copied()
                    .ok_or_else(|| Error::IncompleteLabeling(format!("no label for {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(graph.len());
        for (i, lab) in labels.iter().enumerate() {
            let mut row = Vec::with_capacity(graph.succ(i).len());
            for &j in graph.succ(i) {
                let ann = EdgeAnnotation::classify(*lab, labels[j]).ok_or_else(|| {
                    Error::IncompleteLabeling(format!(
                        "move {} -> {} joins {} and {}",
                        graph.id(i),
                        graph.id(j),
                        lab.value,
                        labels[j].value
                    ))
                })?;
                row.push(ann);
            }
            edges.push(row);
        }
        Ok(Self { graph, labels, edges })
    }

    /// Assembles a solved game from explicit node labels and edge annotations
    /// without checking them against each other. Use [`validate_solution`] to
    /// check the result.
    pub fn from_parts(
        graph: GameGraph,
        labels: &BTreeMap<PositionId, NodeLabel>,
        annotations: &BTreeMap<(PositionId, PositionId), EdgeAnnotation>,
    ) -> Result<Self> {
        let mut node_labels = Vec::with_capacity(graph.len());
        for p in graph.positions() {
            let lab = labels
                .get(p)
                .ok_or_else(|| Error::IncompleteLabeling(format!("no label for {p}")))?;
            node_labels.push(*lab);
        }
        if let Some(p) = labels.keys().find(|p| !graph.contains(p.as_str())) {
            return Err(Error::UnknownPosition(p.to_string()));
        }
        let mut edges = vec![Vec::new(); graph.len()];
        for (s, d) in graph.moves() {
            let ann = annotations.get(&(s.clone(), d.clone())).ok_or_else(|| {
                Error::IncompleteLabeling(format!("no annotation for move {s} -> {d}"))
            })?;
            edges[graph.require(s.as_str())?].push(*ann);
        }
        if let Some((s, d)) = annotations.keys().find(|(s, d)| !graph.has_move(s.as_str(), d.as_str())) {
            return Err(Error::UnknownMove(s.to_string(), d.to_string()));
        }
        Ok(Self {
            graph,
            labels: node_labels,
            edges,
        })
    }

    pub fn graph(&self) -> &GameGraph {
        &self.graph
    }

    pub fn label(&self, x: &str) -> Result<NodeLabel> {
        Ok(self.labels[self.graph.require(x)?])
    }

    pub fn value(&self, x: &str) -> Result<Value> {
        self.label(x).map(|l| l.value)
    }

    pub fn length(&self, x: &str) -> Result<Length> {
        self.label(x).map(|l| l.length)
    }

    /// Node labels in position order.
    pub fn labels(&self) -> impl Iterator<Item = (&PositionId, NodeLabel)> + '_ {
        self.graph.positions().zip(self.labels.iter().copied())
    }

    /// Typed moves in `(src, dst)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&PositionId, &PositionId, EdgeAnnotation)> + '_ {
        self.graph
            .index_moves()
            .zip(self.edges.iter().flatten())
            .map(|((s, d), ann)| (self.graph.id(s), self.graph.id(d), *ann))
    }

    /// The stored annotation of move `x -> y`.
    pub fn classify_edge(&self, x: &str, y: &str) -> Result<EdgeAnnotation> {
        let unknown = || Error::UnknownMove(x.to_string(), y.to_string());
        let s = self.graph.index_of(x).ok_or_else(unknown)?;
        let d = self.graph.index_of(y).ok_or_else(unknown)?;
        let k = self.graph.succ(s).binary_search(&d).map_err(|_| unknown())?;
        Ok(self.edges[s][k])
    }

    pub(crate) fn label_at(&self, i: usize) -> NodeLabel {
        self.labels[i]
    }

    pub(crate) fn edge_at(&self, s: usize, k: usize) -> EdgeAnnotation {
        self.edges[s][k]
    }

    pub(crate) fn edge_between(&self, s: usize, d: usize) -> EdgeAnnotation {
        let k = self
            .graph
            .succ(s)
            .binary_search(&d)
            .expect("move exists in graph");
        self.edges[s][k]
    }
}

/// Which labeling rule produced a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Lost once every follower is won (sinks at step 0).
    Red,
    /// Won once some follower is lost.
    Green,
    /// Everything left unlabeled is drawn.
    DrawClosure,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::Red => "RR",
            Rule::Green => "GR",
            Rule::DrawClosure => "DRAW",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// Sweep number; `Infinite` for the closing draw step.
    pub index: Length,
    pub rule: Rule,
    pub newly_labeled: Vec<PositionId>,
    /// Moves marked while labeling this step: winning moves to a follower
    /// that was already lost, and delaying moves out of a new lost position.
    pub marks: Vec<(PositionId, PositionId, EdgeType)>,
}

/// Sweep-by-sweep record of [`solve`].
///
/// Step 0 is always present (possibly empty), later sweeps are recorded while
/// they label something, and the draw closure always comes last.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StepTrace {
    pub steps: Vec<Step>,
}

impl StepTrace {
    /// The sweep index at which `x` was labeled.
    pub fn step_of(&self, x: &str) -> Option<Length> {
        self.steps
            .iter()
            .find(|s| s.newly_labeled.iter().any(|p| p.as_str() == x))
            .map(|s| s.index)
    }
}

impl fmt::Display for StepTrace {
    /// One line per step: `step <n> <RR|GR|DRAW>: <ids...>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "step {} {}:", step.index, step.rule.tag())?;
            for p in &step.newly_labeled {
                write!(f, " {p}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Solves `g` by synchronized rule sweeps and returns the solution with its
/// trace.
pub fn solve(g: &GameGraph) -> (SolvedGame, StepTrace) {
    let n = g.len();
    let mut labels: Vec<Option<NodeLabel>> = vec![None; n];
    let mut trace = StepTrace::default();

    let sinks: Vec<usize> = (0..n).filter(|&i| g.succ(i).is_empty()).collect();
    for &i in &sinks {
        labels[i] = Some(NodeLabel::lost(0));
    }
    trace.steps.push(Step {
        index: Length::Finite(0),
        rule: Rule::Red,
        newly_labeled: sinks.iter().map(|&i| g.id(i).clone()).collect(),
        marks: Vec::new(),
    });

    let mut step = 0u32;
    loop {
        step += 1;
        let rule = if step % 2 == 1 { Rule::Green } else { Rule::Red };
        let mut fresh = Vec::new();
        let mut marks = Vec::new();
        for x in (0..n).filter(|&x| labels[x].is_none()) {
            let label_of = |y: usize| labels[y];
            match rule {
                Rule::Green => {
                    let lost: Vec<(usize, u32)> = g
                        .succ(x)
                        .iter()
                        .filter_map(|&y| match label_of(y) {
                            Some(NodeLabel {
                                value: Value::Lost,
                                length: Length::Finite(len),
                            }) => Some((y, len)),
                            _ => None,
                        })
                        .collect();
                    if let Some(shortest) = lost.iter().map(|&(_, len)| len).min() {
                        fresh.push((x, NodeLabel::won(shortest + 1)));
                        marks.extend(
                            lost.iter()
                                .map(|&(y, _)| (g.id(x).clone(), g.id(y).clone(), EdgeType::WinPrimary)),
                        );
                    }
                }
                Rule::Red => {
                    let mut longest = 0;
                    let all_won = g.succ(x).iter().all(|&y| match label_of(y) {
                        Some(NodeLabel {
                            value: Value::Won,
                            length: Length::Finite(len),
                        }) => {
                            longest = longest.max(len);
                            true
                        }
                        _ => false,
                    });
                    // sinks were all labeled at step 0
                    if all_won {
                        fresh.push((x, NodeLabel::lost(longest + 1)));
                        marks.extend(
                            g.succ(x)
                                .iter()
                                .map(|&y| (g.id(x).clone(), g.id(y).clone(), EdgeType::Delaying)),
                        );
                    }
                }
                Rule::DrawClosure => unreachable!(),
            }
        }
        if fresh.is_empty() {
            break;
        }
        let newly_labeled = fresh.iter().map(|&(x, _)| g.id(x).clone()).collect();
        for (x, lab) in fresh {
            labels[x] = Some(lab);
        }
        trace.steps.push(Step {
            index: Length::Finite(step),
            rule,
            newly_labeled,
            marks,
        });
    }

    let drawn: Vec<usize> = (0..n).filter(|&i| labels[i].is_none()).collect();
    trace.steps.push(Step {
        index: Length::Infinite,
        rule: Rule::DrawClosure,
        newly_labeled: drawn.iter().map(|&i| g.id(i).clone()).collect(),
        marks: Vec::new(),
    });
    let labels = labels
        .into_iter()
        .map(|l| l.unwrap_or_else(NodeLabel::drawn))
        .collect();
    (finalize(g.clone(), labels), trace)
}

/// Retrograde analysis with per-position counters of followers not yet known
/// to be won. Produces the same [`SolvedGame`] as [`solve`].
pub fn solve_fast(g: &GameGraph) -> SolvedGame {
    let n = g.len();
    let mut labels: Vec<Option<NodeLabel>> = vec![None; n];
    let mut pending: Vec<usize> = (0..n).map(|i| g.succ(i).len()).collect();
    let mut queue = VecDeque::new();
    for i in (0..n).filter(|&i| pending[i] == 0) {
        labels[i] = Some(NodeLabel::lost(0));
        queue.push_back(i);
    }
    // FIFO order pops labels in non-decreasing length, so the first lost
    // follower seen is a shortest one and the last won follower a longest one.
    while let Some(y) = queue.pop_front() {
        let lab = labels[y].expect("queued positions are labeled");
        let len = lab.length.finite().expect("queued positions are finite");
        for &x in g.pred(y) {
            if labels[x].is_some() {
                continue;
            }
            match lab.value {
                Value::Lost => {
                    labels[x] = Some(NodeLabel::won(len + 1));
                    queue.push_back(x);
                }
                Value::Won => {
                    pending[x] -= 1;
                    if pending[x] == 0 {
                        labels[x] = Some(NodeLabel::lost(len + 1));
                        queue.push_back(x);
                    }
                }
                Value::Drawn => unreachable!(),
            }
        }
    }
    let labels = labels
        .into_iter()
        .map(|l| l.unwrap_or_else(NodeLabel::drawn))
        .collect();
    finalize(g.clone(), labels)
}

fn finalize(graph: GameGraph, labels: Vec<NodeLabel>) -> SolvedGame {
    let edges = (0..graph.len())
        .map(|i| {
            graph
                .succ(i)
                .iter()
                .map(|&j| {
                    EdgeAnnotation::classify(labels[i], labels[j])
                        .expect("a well-founded labeling has no ghost edges")
                })
                .collect()
        })
        .collect();
    SolvedGame { graph, labels, edges }
}

/// A way in which a labeled game fails to be a correct solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Lost to lost, lost to drawn, or drawn to lost.
    GhostEdge {
        src: PositionId,
        dst: PositionId,
        src_value: Value,
        dst_value: Value,
    },
    /// Stored label differs from the recomputed solution.
    LabelMismatch {
        position: PositionId,
        found: NodeLabel,
        expected: NodeLabel,
    },
    ParityViolation {
        position: PositionId,
        label: NodeLabel,
    },
    /// Stored edge annotation differs from the one implied by the node labels.
    EdgeTypeMismatch {
        src: PositionId,
        dst: PositionId,
        found: EdgeAnnotation,
        expected: Option<EdgeAnnotation>,
    },
    MissingWinPrimary {
        position: PositionId,
    },
    MissingDrawingMove {
        position: PositionId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::GhostEdge {
                src,
                dst,
                src_value,
                dst_value,
            } => write!(f, "ghost edge {src} -> {dst} ({src_value} -> {dst_value})"),
            Violation::LabelMismatch {
                position,
                found,
                expected,
            } => write!(f, "label mismatch at {position}: found {found}, expected {expected}"),
            Violation::ParityViolation { position, label } => {
                write!(f, "parity violation at {position}: {label}")
            }
            Violation::EdgeTypeMismatch {
                src,
                dst,
                found,
                expected,
            } => match expected {
                Some(e) => write!(f, "edge {src} -> {dst} typed {found}, expected {e}"),
                None => write!(f, "edge {src} -> {dst} typed {found}, but admits no type"),
            },
            Violation::MissingWinPrimary { position } => {
                write!(f, "won position {position} has no primary winning move")
            }
            Violation::MissingDrawingMove { position } => {
                write!(f, "drawn position {position} has no drawing move")
            }
        }
    }
}

/// Checks a labeled game against the solution recomputed from its graph and
/// against the structural rules every solution satisfies. An empty result
/// means the labeling is correct.
pub fn validate_solution(s: &SolvedGame) -> Vec<Violation> {
    let g = s.graph();
    let mut out = Vec::new();
    let reference = solve_fast(g);

    for i in 0..g.len() {
        let lab = s.label_at(i);
        let id = || g.id(i).clone();
        if !lab.has_valid_parity() {
            out.push(Violation::ParityViolation {
                position: id(),
                label: lab,
            });
        }
        let expected = reference.label_at(i);
        if lab != expected {
            out.push(Violation::LabelMismatch {
                position: id(),
                found: lab,
                expected,
            });
        }
        let types = || (0..g.succ(i).len()).map(|k| s.edge_at(i, k).edge_type);
        match lab.value {
            Value::Won if !types().any(|t| t == EdgeType::WinPrimary) => {
                out.push(Violation::MissingWinPrimary { position: id() })
            }
            Value::Drawn if !types().any(|t| t == EdgeType::Drawing) => {
                out.push(Violation::MissingDrawingMove { position: id() })
            }
            _ => {}
        }
    }

    for (i, j) in g.index_moves() {
        let (src, dst) = (s.label_at(i), s.label_at(j));
        let expected = EdgeAnnotation::classify(src, dst);
        if expected.is_none() {
            out.push(Violation::GhostEdge {
                src: g.id(i).clone(),
                dst: g.id(j).clone(),
                src_value: src.value,
                dst_value: dst.value,
            });
        }
        let found = s.edge_between(i, j);
        if expected != Some(found) {
            out.push(Violation::EdgeTypeMismatch {
                src: g.id(i).clone(),
                dst: g.id(j).clone(),
                found,
                expected,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::graph::build_graph;

    fn lab(s: &SolvedGame, x: &str) -> NodeLabel {
        s.label(x).unwrap()
    }

    #[test]
    fn fig1_node_labels() {
        let (s, _) = solve(&fig1());
        for x in ["b", "f", "j", "o"] {
            assert_eq!(lab(&s, x), NodeLabel::lost(0), "{x}");
        }
        for x in ["a", "d", "i"] {
            assert_eq!(lab(&s, x), NodeLabel::won(1), "{x}");
        }
        for x in ["g", "h"] {
            assert_eq!(lab(&s, x), NodeLabel::lost(2), "{x}");
        }
        assert_eq!(lab(&s, "e"), NodeLabel::won(3));
        assert_eq!(lab(&s, "c"), NodeLabel::lost(4));
    }

    #[test]
    fn fig1_edge_types() {
        let (s, _) = solve(&fig1());
        let ann = |x, y| s.classify_edge(x, y).unwrap().to_string();
        assert_eq!(ann("d", "f"), "win_primary/1");
        assert_eq!(ann("d", "g"), "win_secondary/3");
        assert_eq!(ann("d", "h"), "win_secondary/3");
        assert_eq!(ann("c", "d"), "delaying/2");
        assert_eq!(ann("c", "e"), "delaying/4");
        assert_eq!(ann("a", "b"), "win_primary/1");
        assert_eq!(ann("a", "o"), "win_primary/1");
        assert_eq!(ann("d", "e"), "blunder_ww");
        assert_eq!(ann("e", "h"), "win_primary/3");
        assert_eq!(ann("g", "d"), "delaying/2");
        assert_eq!(
            s.classify_edge("e", "d"),
            Err(Error::UnknownMove("e".into(), "d".into()))
        );
        assert!(s.classify_edge("zz", "d").is_err());
    }

    #[test]
    fn fig1_trace() {
        let (s, trace) = solve(&fig1());
        assert_eq!(
            trace.to_string(),
            "step 0 RR: b f j o\nstep 1 GR: a d i\nstep 2 RR: g h\nstep 3 GR: e\nstep 4 RR: c\nstep inf DRAW:\n"
        );
        for (x, l) in s.labels() {
            assert_eq!(trace.step_of(x.as_str()), Some(l.length));
        }
    }

    #[test]
    fn sweep_marks_agree_with_edge_types() {
        let (s, trace) = solve(&fig1());
        let mut marked: Vec<_> = trace
            .steps
            .iter()
            .flat_map(|st| st.marks.iter().cloned())
            .collect();
        marked.sort();
        let mut typed: Vec<_> = s
            .edges()
            .filter(|(_, _, a)| matches!(a.edge_type, EdgeType::WinPrimary | EdgeType::Delaying))
            .map(|(x, y, a)| (x.clone(), y.clone(), a.edge_type))
            .collect();
        typed.sort();
        assert_eq!(marked, typed);
    }

    #[test]
    fn two_cycle_is_drawn() {
        let g = build_graph(["x"], [("x", "y"), ("y", "x")]).unwrap();
        let (s, trace) = solve(&g);
        assert_eq!(lab(&s, "x"), NodeLabel::drawn());
        assert_eq!(lab(&s, "y"), NodeLabel::drawn());
        for (_, _, a) in s.edges() {
            assert_eq!(a.edge_type, EdgeType::Drawing);
            assert_eq!(a.length, Some(Length::Infinite));
        }
        assert_eq!(trace.to_string(), "step 0 RR:\nstep inf DRAW: x y\n");
    }

    #[test]
    fn self_loop_is_drawn() {
        let g = build_graph(["x"], [("x", "x")]).unwrap();
        let (s, _) = solve(&g);
        assert_eq!(lab(&s, "x"), NodeLabel::drawn());
        assert_eq!(s.classify_edge("x", "x").unwrap().edge_type, EdgeType::Drawing);
        assert_eq!(solve_fast(&g), s);
    }

    #[test]
    fn self_loop_with_exit_to_sink_is_won() {
        let g = build_graph(["x"], [("x", "x"), ("x", "z")]).unwrap();
        let (s, _) = solve(&g);
        assert_eq!(lab(&s, "x"), NodeLabel::won(1));
        assert_eq!(s.classify_edge("x", "x").unwrap().edge_type, EdgeType::Blunder1);
    }

    #[test]
    fn blunder_types() {
        // d is drawn (d <-> e), w is won via its sink s, w -> d is a won-to-drawn
        // blunder and d -> w a drawn-to-won one.
        let g = build_graph(
            Vec::<&str>::new(),
            [("d", "e"), ("e", "d"), ("w", "s"), ("w", "d"), ("d", "w"), ("w", "w")],
        )
        .unwrap();
        let (s, _) = solve(&g);
        assert_eq!(s.classify_edge("w", "d").unwrap().edge_type, EdgeType::Blunder2);
        assert_eq!(s.classify_edge("d", "w").unwrap().edge_type, EdgeType::Blunder3);
        assert_eq!(s.classify_edge("w", "w").unwrap().edge_type, EdgeType::Blunder1);
        assert_eq!(s.classify_edge("w", "d").unwrap().length, None);
        assert!(validate_solution(&s).is_empty());
    }

    #[test]
    fn empty_graph() {
        let g = GameGraph::default();
        let (s, trace) = solve(&g);
        assert_eq!(s.labels().count(), 0);
        assert_eq!(solve_fast(&g), s);
        assert_eq!(trace.to_string(), "step 0 RR:\nstep inf DRAW:\n");
    }

    #[test]
    fn fast_agrees_on_fig1() {
        let g = fig1();
        assert_eq!(solve_fast(&g), solve(&g).0);
    }

    #[test]
    fn length_arithmetic() {
        assert_eq!(Length::Finite(3).succ(), Length::Finite(4));
        assert_eq!(Length::Infinite.succ(), Length::Infinite);
        assert!(Length::Finite(u32::MAX - 1) < Length::Infinite);
        assert_eq!(Length::Infinite.to_string(), "inf");
    }

    #[test]
    fn edge_type_names_round_trip() {
        for t in EdgeType::ALL {
            assert_eq!(EdgeType::from_name(t.as_str()), Some(t));
        }
        assert_eq!(EdgeType::from_name("win"), None);
    }

    #[test]
    fn fig1_validates() {
        assert!(validate_solution(&solve(&fig1()).0).is_empty());
    }

    fn hand_labeled(
        moves: &[(&str, &str)],
        labels: &[(&str, NodeLabel)],
        anns: &[(&str, &str, EdgeAnnotation)],
    ) -> SolvedGame {
        let g = build_graph(Vec::<&str>::new(), moves.iter().copied()).unwrap();
        let labels = labels
            .iter()
            .map(|(x, l)| (PositionId::new(*x).unwrap(), *l))
            .collect();
        let anns = anns
            .iter()
            .map(|(x, y, a)| ((PositionId::new(*x).unwrap(), PositionId::new(*y).unwrap()), *a))
            .collect();
        SolvedGame::from_parts(g, &labels, &anns).unwrap()
    }

    #[test]
    fn detects_ghost_edge() {
        let delaying = EdgeAnnotation {
            edge_type: EdgeType::Delaying,
            length: Some(Length::Finite(1)),
        };
        let s = hand_labeled(
            &[("x", "y")],
            &[("x", NodeLabel::lost(0)), ("y", NodeLabel::lost(0))],
            &[("x", "y", delaying)],
        );
        let v = validate_solution(&s);
        assert!(v.contains(&Violation::GhostEdge {
            src: PositionId::new("x").unwrap(),
            dst: PositionId::new("y").unwrap(),
            src_value: Value::Lost,
            dst_value: Value::Lost,
        }));
    }

    #[test]
    fn detects_parity_violation() {
        let win = EdgeAnnotation {
            edge_type: EdgeType::WinPrimary,
            length: Some(Length::Finite(1)),
        };
        let s = hand_labeled(
            &[("x", "y")],
            &[("x", NodeLabel::won(2)), ("y", NodeLabel::lost(0))],
            &[("x", "y", win)],
        );
        let v = validate_solution(&s);
        assert!(v.contains(&Violation::ParityViolation {
            position: PositionId::new("x").unwrap(),
            label: NodeLabel::won(2),
        }));
        // the stored primary win no longer matches len(x) = 1 + len(y)
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::EdgeTypeMismatch { expected: Some(e), .. } if e.edge_type == EdgeType::WinSecondary)));
    }

    #[test]
    fn from_parts_requires_totality() {
        let g = build_graph(["x"], [("x", "y")]).unwrap();
        let labels = BTreeMap::from([(PositionId::new("x").unwrap(), NodeLabel::won(1))]);
        assert!(matches!(
            SolvedGame::from_parts(g, &labels, &BTreeMap::new()),
            Err(Error::IncompleteLabeling(_))
        ));
    }
}
