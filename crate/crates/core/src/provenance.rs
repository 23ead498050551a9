//! Provenance subgraphs: which moves explain the value of a position.
//!
//! Three nested views are offered. Potential provenance is everything
//! reachable from a position and needs no solution. Actual provenance drops
//! blunders. Primary provenance additionally drops secondary (slower) winning
//! moves. Actual and primary provenance can also be computed as the subgraph
//! matched by a regular path query, see [`match_rpq`] and
//! [`standard_pattern`].

use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::graph::{GameGraph, PositionId};
use crate::rpq::{Letter, Rpq, Symbol};
use crate::solver::{EdgeAnnotation, EdgeType, NodeLabel, SolvedGame, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProvenanceKind {
    Potential,
    Actual,
    Primary,
}

impl ProvenanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProvenanceKind::Potential => "potential",
            ProvenanceKind::Actual => "actual",
            ProvenanceKind::Primary => "primary",
        }
    }

    /// Whether moves of type `t` are followed by this kind of provenance.
    pub fn admits(self, t: EdgeType) -> bool {
        match self {
            ProvenanceKind::Potential => true,
            ProvenanceKind::Actual => !t.is_blunder(),
            ProvenanceKind::Primary => !t.is_blunder() && t != EdgeType::WinSecondary,
        }
    }
}

/// A subgraph rooted at one position. Node labels and edge annotations are
/// `None` for potential provenance, which is computed without a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenanceSubgraph {
    pub root: PositionId,
    pub nodes: BTreeMap<PositionId, Option<NodeLabel>>,
    pub edges: BTreeMap<(PositionId, PositionId), Option<EdgeAnnotation>>,
}

impl ProvenanceSubgraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, x: &str) -> bool {
        self.nodes.contains_key(x)
    }

    pub fn contains_edge(&self, x: &str, y: &str) -> bool {
        self.edges.keys().any(|(s, d)| s.as_str() == x && d.as_str() == y)
    }

    /// Node and edge inclusion, ignoring labels.
    pub fn is_subgraph_of(&self, other: &ProvenanceSubgraph) -> bool {
        self.nodes.keys().all(|n| other.nodes.contains_key(n))
            && self.edges.keys().all(|e| other.edges.contains_key(e))
    }

    /// The same subgraph with every edge flipped.
    pub fn reversed(&self) -> ProvenanceSubgraph {
        ProvenanceSubgraph {
            root: self.root.clone(),
            nodes: self.nodes.clone(),
            edges: self
                .edges
                .iter()
                .map(|((s, d), a)| ((d.clone(), s.clone()), *a))
                .collect(),
        }
    }
}

/// All moves reachable from `x`, ignoring any solution.
pub fn potential_provenance(g: &GameGraph, x: &str) -> Result<ProvenanceSubgraph> {
    let root = g.require(x)?;
    let seen = g.closure_from(root, |_, _| true);
    let nodes = (0..g.len())
        .filter(|&i| seen[i])
        .map(|i| (g.id(i).clone(), None))
        .collect();
    let edges = g
        .index_moves()
        .filter(|&(s, _)| seen[s])
        .map(|(s, d)| ((g.id(s).clone(), g.id(d).clone()), None))
        .collect();
    Ok(ProvenanceSubgraph {
        root: g.id(root).clone(),
        nodes,
        edges,
    })
}

/// Moves reachable from `x` without passing through a blunder.
pub fn actual_provenance(s: &SolvedGame, x: &str) -> Result<ProvenanceSubgraph> {
    typed_closure(s, x, ProvenanceKind::Actual)
}

/// Moves reachable from `x` using only primary wins, delaying and drawing
/// moves.
pub fn primary_provenance(s: &SolvedGame, x: &str) -> Result<ProvenanceSubgraph> {
    typed_closure(s, x, ProvenanceKind::Primary)
}

/// Dispatches on `kind`; potential provenance uses the solved game's graph.
pub fn provenance(s: &SolvedGame, x: &str, kind: ProvenanceKind) -> Result<ProvenanceSubgraph> {
    match kind {
        ProvenanceKind::Potential => potential_provenance(s.graph(), x),
        _ => typed_closure(s, x, kind),
    }
}

fn typed_closure(s: &SolvedGame, x: &str, kind: ProvenanceKind) -> Result<ProvenanceSubgraph> {
    let g = s.graph();
    let root = g.require(x)?;
    let admits = |u: usize, v: usize| kind.admits(s.edge_between(u, v).edge_type);
    let seen = g.closure_from(root, admits);
    let kept = g.index_moves().filter(|&(u, v)| seen[u] && admits(u, v));
    Ok(labeled_subgraph(s, root, &seen, kept))
}

fn labeled_subgraph(
    s: &SolvedGame,
    root: usize,
    nodes: &[bool],
    edges: impl Iterator<Item = (usize, usize)>,
) -> ProvenanceSubgraph {
    let g = s.graph();
    ProvenanceSubgraph {
        root: g.id(root).clone(),
        nodes: (0..g.len())
            .filter(|&i| nodes[i])
            .map(|i| (g.id(i).clone(), Some(s.label_at(i))))
            .collect(),
        edges: edges
            .map(|(u, v)| ((g.id(u).clone(), g.id(v).clone()), Some(s.edge_between(u, v))))
            .collect(),
    }
}

/// The pattern whose matches from a position with value `v` make up its
/// actual or primary provenance.
///
/// # Panics
///
/// Panics on [`ProvenanceKind::Potential`], which is not defined by a pattern.
pub fn standard_pattern(v: Value, kind: ProvenanceKind) -> Rpq {
    let win = match kind {
        ProvenanceKind::Actual => Letter::W,
        ProvenanceKind::Primary => Letter::Wpr,
        ProvenanceKind::Potential => panic!("potential provenance has no pattern"),
    };
    let rounds = || Rpq::letter(Letter::L).then(Rpq::letter(win)).star();
    match v {
        Value::Won => Rpq::letter(win).then(rounds()),
        Value::Lost => rounds(),
        Value::Drawn => Rpq::letter(Letter::D).plus(),
    }
}

/// The smallest subgraph rooted at `x` containing every walk from `x` whose
/// edge labels spell a word of `r`.
///
/// Walks may revisit positions. A move is kept when it lies on a prefix of
/// some accepting walk: it is taken from a product state reachable from
/// `(x, initial)` into a product state from which an accepting state is
/// reachable. The root is always part of the result.
pub fn match_rpq(s: &SolvedGame, x: &str, r: &Rpq) -> Result<ProvenanceSubgraph> {
    let g = s.graph();
    let root = g.require(x)?;
    let nfa = r.compile();
    let q_count = nfa.num_states();
    let idx = |v: usize, q: usize| v * q_count + q;
    let symbol = |u: usize, v: usize| Symbol::of_edge(s.edge_between(u, v).edge_type);

    let mut forward = vec![false; g.len() * q_count];
    let mut queue = VecDeque::from([(root, nfa.initial())]);
    forward[idx(root, nfa.initial())] = true;
    while let Some((u, q)) = queue.pop_front() {
        for &v in g.succ(u) {
            let Some(sym) = symbol(u, v) else { continue };
            for t in nfa.step(q, sym) {
                if !forward[idx(v, t)] {
                    forward[idx(v, t)] = true;
                    queue.push_back((v, t));
                }
            }
        }
    }

    let mut into: Vec<Vec<usize>> = vec![Vec::new(); q_count];
    for (q, t) in nfa.transitions() {
        into[t].push(q);
    }
    let mut live = vec![false; g.len() * q_count];
    let mut queue = VecDeque::new();
    for v in 0..g.len() {
        for q in (0..q_count).filter(|&q| nfa.is_accepting(q)) {
            live[idx(v, q)] = true;
            queue.push_back((v, q));
        }
    }
    while let Some((v, t)) = queue.pop_front() {
        for &u in g.pred(v) {
            let Some(sym) = symbol(u, v) else { continue };
            if !nfa.reads(t, sym) {
                continue;
            }
            for &q in &into[t] {
                if !live[idx(u, q)] {
                    live[idx(u, q)] = true;
                    queue.push_back((u, q));
                }
            }
        }
    }

    let mut nodes = vec![false; g.len()];
    nodes[root] = true;
    let mut kept = Vec::new();
    for (u, v) in g.index_moves() {
        let Some(sym) = symbol(u, v) else { continue };
        let on_walk = (0..q_count)
            .filter(|&q| forward[idx(u, q)])
            .any(|q| nfa.step(q, sym).any(|t| live[idx(v, t)]));
        if on_walk {
            nodes[u] = true;
            nodes[v] = true;
            kept.push((u, v));
        }
    }
    Ok(labeled_subgraph(s, root, &nodes, kept.into_iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::graph::build_graph;
    use crate::solver::solve;

    fn node_names(p: &ProvenanceSubgraph) -> Vec<&str> {
        p.nodes.keys().map(|n| n.as_str()).collect()
    }

    fn edge_names(p: &ProvenanceSubgraph) -> Vec<String> {
        p.edges.keys().map(|(s, d)| format!("{s}{d}")).collect()
    }

    #[test]
    fn potential_of_fig1() {
        let g = fig1();
        let d = potential_provenance(&g, "d").unwrap();
        assert_eq!(node_names(&d), ["d", "e", "f", "g", "h", "i", "j"]);
        assert_eq!(edge_names(&d), ["de", "df", "dg", "dh", "eh", "gd", "hi", "ij"]);
        assert!(d.edges.values().all(Option::is_none));
        assert!(d.nodes.values().all(Option::is_none));

        let b = potential_provenance(&g, "b").unwrap();
        assert_eq!(node_names(&b), ["b"]);
        assert!(b.edges.is_empty());

        let a = potential_provenance(&g, "a").unwrap();
        assert_eq!(node_names(&a), ["a", "b", "o"]);
        assert_eq!(edge_names(&a), ["ab", "ao"]);
        assert!(potential_provenance(&g, "zz").is_err());
    }

    #[test]
    fn actual_of_fig1() {
        let (s, _) = solve(&fig1());
        let d = actual_provenance(&s, "d").unwrap();
        assert_eq!(node_names(&d), ["d", "f", "g", "h", "i", "j"]);
        assert_eq!(edge_names(&d), ["df", "dg", "dh", "gd", "hi", "ij"]);
        let b = actual_provenance(&s, "b").unwrap();
        assert_eq!((b.node_count(), b.edge_count()), (1, 0));
    }

    #[test]
    fn primary_of_fig1() {
        let (s, _) = solve(&fig1());
        let d = primary_provenance(&s, "d").unwrap();
        assert_eq!(node_names(&d), ["d", "f"]);
        assert_eq!(edge_names(&d), ["df"]);
        let c = primary_provenance(&s, "c").unwrap();
        assert_eq!(node_names(&c), ["c", "d", "e", "f", "h", "i", "j"]);
        assert_eq!(edge_names(&c), ["cd", "ce", "df", "eh", "hi", "ij"]);
        let j = primary_provenance(&s, "j").unwrap();
        assert_eq!((j.node_count(), j.edge_count()), (1, 0));
    }

    #[test]
    fn two_cycle_actual() {
        let g = build_graph(["x"], [("x", "y"), ("y", "x")]).unwrap();
        let (s, _) = solve(&g);
        let p = actual_provenance(&s, "x").unwrap();
        assert_eq!(edge_names(&p), ["xy", "yx"]);
        assert!(p
            .edges
            .values()
            .all(|a| a.unwrap().edge_type == EdgeType::Drawing));
        assert_eq!(primary_provenance(&s, "x").unwrap(), p);
    }

    #[test]
    fn standard_patterns() {
        let show = |v, k| standard_pattern(v, k).to_string();
        assert_eq!(show(Value::Won, ProvenanceKind::Actual), "W.(L.W)*");
        assert_eq!(show(Value::Lost, ProvenanceKind::Actual), "(L.W)*");
        assert_eq!(show(Value::Drawn, ProvenanceKind::Actual), "D+");
        assert_eq!(show(Value::Won, ProvenanceKind::Primary), "Wpr.(L.Wpr)*");
        assert_eq!(show(Value::Lost, ProvenanceKind::Primary), "(L.Wpr)*");
        assert_eq!(show(Value::Drawn, ProvenanceKind::Primary), "D+");
    }

    #[test]
    fn rpq_matches_closures_on_fig1() {
        let (s, _) = solve(&fig1());
        let q = |x, e: &str| match_rpq(&s, x, &Rpq::parse(e).unwrap()).unwrap();
        assert_eq!(q("d", "W.(L.W)*"), actual_provenance(&s, "d").unwrap());
        assert_eq!(q("c", "(L.Wpr)*"), primary_provenance(&s, "c").unwrap());
        let b = q("b", "D+");
        assert_eq!(node_names(&b), ["b"]);
        assert!(b.edges.is_empty());
    }

    #[test]
    fn rpq_keeps_only_extendable_prefixes() {
        let (s, _) = solve(&fig1());
        // from c, a single delaying move is never a full match of L.Wpr, but
        // every delaying move reaches a won position with a primary win
        let p = match_rpq(&s, "c", &Rpq::parse("L.Wpr").unwrap()).unwrap();
        assert_eq!(edge_names(&p), ["cd", "ce", "df", "eh"]);
        // no Wsc edge is reachable from c through L first
        let p = match_rpq(&s, "c", &Rpq::parse("L.Wsc").unwrap()).unwrap();
        assert_eq!(edge_names(&p), ["cd", "dg", "dh"]);
    }

    #[test]
    fn inclusion_on_fig1() {
        let (s, _) = solve(&fig1());
        for x in s.graph().positions() {
            let pt = potential_provenance(s.graph(), x.as_str()).unwrap();
            let ac = actual_provenance(&s, x.as_str()).unwrap();
            let pr = primary_provenance(&s, x.as_str()).unwrap();
            assert!(pr.is_subgraph_of(&ac) && ac.is_subgraph_of(&pt), "{x}");
        }
    }
}
