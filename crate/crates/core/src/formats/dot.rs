//! Graphviz output.
//!
//! Nodes are filled by value (green won, red lost, yellow drawn; blue
//! accepted, orange defeated, yellow undecided for argumentation) and labeled
//! `id : len`. Edges are styled by type, see [`edge_style`].

use std::fmt::Write;

use crate::argumentation::AfLabel;
use crate::graph::{GameGraph, PositionId};
use crate::provenance::ProvenanceSubgraph;
use crate::solver::{EdgeAnnotation, EdgeType, NodeLabel, SolvedGame, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Palette {
    Game,
    Argumentation,
}

impl Palette {
    fn fill(self, v: Value) -> &'static str {
        match self {
            Palette::Game => match v {
                Value::Won => "green",
                Value::Lost => "red",
                Value::Drawn => "yellow",
            },
            Palette::Argumentation => match AfLabel::from_value(v) {
                AfLabel::Accepted => "blue",
                AfLabel::Defeated => "orange",
                AfLabel::Undecided => "yellow",
            },
        }
    }
}

/// `(color, style)` for each edge type.
pub(super) fn edge_style(t: EdgeType) -> (&'static str, &'static str) {
    match t {
        EdgeType::WinPrimary => ("green", "solid"),
        EdgeType::WinSecondary => ("green", "dashed"),
        EdgeType::Delaying => ("red", "solid"),
        EdgeType::Drawing => ("yellow", "solid"),
        EdgeType::Blunder1 | EdgeType::Blunder2 | EdgeType::Blunder3 => ("brown", "dashed"),
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn render<'a>(
    nodes: impl Iterator<Item = (&'a PositionId, Option<NodeLabel>)>,
    edges: impl Iterator<Item = (&'a PositionId, &'a PositionId, Option<EdgeAnnotation>)>,
    root: Option<&PositionId>,
    palette: Palette,
) -> String {
    let mut body = String::new();
    for (id, label) in nodes {
        let (text, fill) = match label {
            Some(l) => (format!("{id} : {}", l.length), palette.fill(l.value)),
            None => (id.to_string(), "white"),
        };
        let _ = write!(body, "  {} [label={}, fillcolor={fill}", quote(id.as_str()), quote(&text));
        if root == Some(id) {
            body.push_str(", peripheries=2");
        }
        body.push_str("];\n");
    }
    for (src, dst, ann) in edges {
        let _ = write!(body, "  {} -> {} [", quote(src.as_str()), quote(dst.as_str()));
        match ann {
            Some(a) => {
                let (color, style) = edge_style(a.edge_type);
                let _ = write!(body, "color={color}, style={style}");
                if let Some(len) = a.length {
                    let _ = write!(body, ", label={}", quote(&len.to_string()));
                }
            }
            None => body.push_str("color=gray, style=solid"),
        }
        body.push_str("];\n");
    }
    if body.is_empty() {
        return "digraph {}\n".to_string();
    }
    format!("digraph {{\n  node [style=filled];\n{body}}}\n")
}

pub(super) fn graph(g: &GameGraph) -> String {
    render(
        g.positions().map(|p| (p, None)),
        g.moves().map(|(s, d)| (s, d, None)),
        None,
        Palette::Game,
    )
}

pub(super) fn solved(s: &SolvedGame) -> String {
    render(
        s.labels().map(|(p, l)| (p, Some(l))),
        s.edges().map(|(a, b, ann)| (a, b, Some(ann))),
        None,
        Palette::Game,
    )
}

pub(super) fn af_solution(s: &SolvedGame) -> String {
    let mut attacks: Vec<_> = s.edges().map(|(x, y, ann)| (y, x, Some(ann))).collect();
    attacks.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    render(
        s.labels().map(|(p, l)| (p, Some(l))),
        attacks.into_iter(),
        None,
        Palette::Argumentation,
    )
}

pub(super) fn subgraph(p: &ProvenanceSubgraph, palette: Palette) -> String {
    render(
        p.nodes.iter().map(|(id, l)| (id, *l)),
        p.edges.iter().map(|((s, d), a)| (s, d, *a)),
        Some(&p.root),
        palette,
    )
}
