//! Directed game graphs: positions, moves, followers and reachability.
//!
//! A [`GameGraph`] is immutable once built. Positions are kept sorted, and
//! every iterator the graph hands out walks positions and moves in
//! lexicographic order, so everything derived from a graph is deterministic.

use std::borrow::Borrow;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Name of a position (or of an argument, for argumentation frameworks).
///
/// A valid id is non-empty and contains no whitespace and none of
/// `# , ( )`, which keeps the edge-list and APX formats unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionId(String);

impl PositionId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if Self::is_valid(&id) {
            Ok(Self(id))
        } else {
            Err(Error::InvalidPositionId(id))
        }
    }

    pub fn is_valid(id: &str) -> bool {
        !id.is_empty()
            && !id
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '#' | ',' | '(' | ')'))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for PositionId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for PositionId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl TryFrom<&str> for PositionId {
    type Error = Error;

    fn try_from(value: &str) -> Result<Self> {
        Self::new(value)
    }
}

/// A finite directed graph `G = (V, E)` of positions and moves.
///
/// Positions are stored densely, sorted by id; `succ[i]` and `pred[i]` hold
/// sorted indices of the followers and predecessors of position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GameGraph {
    ids: Vec<PositionId>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    num_moves: usize,
}

impl GameGraph {
    /// Builds a graph from already-validated ids. Duplicates are dropped and
    /// positions that only occur in moves are added.
    pub fn from_ids<P, M>(positions: P, moves: M) -> Self
    where
        P: IntoIterator<Item = PositionId>,
        M: IntoIterator<Item = (PositionId, PositionId)>,
    {
        let moves: BTreeSet<(PositionId, PositionId)> = moves.into_iter().collect();
        let mut all: BTreeSet<PositionId> = positions.into_iter().collect();
        for (src, dst) in &moves {
            all.insert(src.clone());
            all.insert(dst.clone());
        }
        let ids: Vec<PositionId> = all.into_iter().collect();
        let mut succ = vec![Vec::new(); ids.len()];
        let mut pred = vec![Vec::new(); ids.len()];
        let lookup = |p: &PositionId| ids.binary_search(p).expect("endpoint was inserted");
        // `moves` is sorted by (src, dst), so succ and pred lists come out sorted.
        for (src, dst) in &moves {
            let (s, d) = (lookup(src), lookup(dst));
            succ[s].push(d);
            pred[d].push(s);
        }
        Self {
            num_moves: moves.len(),
            ids,
            succ,
            pred,
        }
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn num_moves(&self) -> usize {
        self.num_moves
    }

    pub fn contains(&self, x: &str) -> bool {
        self.index_of(x).is_some()
    }

    pub fn has_move(&self, x: &str, y: &str) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(s), Some(d)) => self.succ[s].binary_search(&d).is_ok(),
            _ => false,
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = &PositionId> + '_ {
        self.ids.iter()
    }

    /// All moves, ordered by `(src, dst)`.
    pub fn moves(&self) -> impl Iterator<Item = (&PositionId, &PositionId)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(move |(s, ds)| ds.iter().map(move |&d| (&self.ids[s], &self.ids[d])))
    }

    /// `F(x)`: the positions reachable from `x` in one move.
    pub fn followers(&self, x: &str) -> Result<Vec<&PositionId>> {
        let i = self.require(x)?;
        Ok(self.succ[i].iter().map(|&j| &self.ids[j]).collect())
    }

    /// `x` together with every position reachable from it by one or more moves.
    pub fn reachable_closure(&self, x: &str) -> Result<BTreeSet<PositionId>> {
        let start = self.require(x)?;
        let seen = self.closure_from(start, |_, _| true);
        Ok(self.ids_of(&seen))
    }

    /// The subgraph with exactly `nodes` and all moves between them.
    pub fn induced_subgraph<'a, I>(&self, nodes: I) -> Result<GameGraph>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut keep = vec![false; self.len()];
        for x in nodes {
            keep[self.require(x)?] = true;
        }
        let positions = (0..self.len()).filter(|&i| keep[i]).map(|i| self.ids[i].clone());
        let moves = self
            .index_moves()
            .filter(|&(s, d)| keep[s] && keep[d])
            .map(|(s, d)| (self.ids[s].clone(), self.ids[d].clone()))
            .collect::<Vec<_>>();
        Ok(GameGraph::from_ids(positions, moves))
    }

    /// The same positions with every move flipped.
    pub fn reversed(&self) -> GameGraph {
        GameGraph {
            ids: self.ids.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            num_moves: self.num_moves,
        }
    }

    pub(crate) fn require(&self, x: &str) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::UnknownPosition(x.to_string()))
    }

    pub(crate) fn index_of(&self, x: &str) -> Option<usize> {
        self.ids.binary_search_by(|p| p.as_str().cmp(x)).ok()
    }

    pub(crate) fn id(&self, i: usize) -> &PositionId {
        &self.ids[i]
    }

    pub(crate) fn succ(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub(crate) fn pred(&self, i: usize) -> &[usize] {
        &self.pred[i]
    }

    pub(crate) fn index_moves(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(s, ds)| ds.iter().map(move |&d| (s, d)))
    }

    /// Breadth-first closure from `start`, following only the moves accepted
    /// by `follow`.
    pub(crate) fn closure_from(
        &self,
        start: usize,
        mut follow: impl FnMut(usize, usize) -> bool,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.succ[u] {
                if !seen[v] && follow(u, v) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    fn ids_of(&self, mask: &[bool]) -> BTreeSet<PositionId> {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.ids[i].clone())
            .collect()
    }
}

/// Validates raw tokens and builds a graph.
pub fn build_graph<P, M, S, T, U>(positions: P, moves: M) -> Result<GameGraph>
where
    P: IntoIterator<Item = S>,
    M: IntoIterator<Item = (T, U)>,
    S: AsRef<str>,
    T: AsRef<str>,
    U: AsRef<str>,
{
    let positions = positions
        .into_iter()
        .map(|p| PositionId::new(p.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let moves = moves
        .into_iter()
        .map(|(s, d)| Ok((PositionId::new(s.as_ref())?, PositionId::new(d.as_ref())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GameGraph::from_ids(positions, moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;

    fn names<'a>(it: impl IntoIterator<Item = &'a PositionId>) -> Vec<&'a str> {
        it.into_iter().map(|p| p.as_str()).collect()
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["", "a b", "a#", "x,y", "f(x)", "\t"] {
            assert_eq!(
                PositionId::new(bad),
                Err(Error::InvalidPositionId(bad.to_string()))
            );
        }
        assert!(build_graph(["ok"], [("ok", "no t")]).is_err());
    }

    #[test]
    fn dedups_positions_and_moves() {
        let g = build_graph(["a", "b", "a"], [("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.num_moves(), 1);
    }

    #[test]
    fn empty_graph() {
        let g = build_graph(Vec::<&str>::new(), Vec::<(&str, &str)>::new()).unwrap();
        assert!(g.is_empty());
        assert_eq!(g.num_moves(), 0);
    }

    #[test]
    fn move_endpoints_become_positions() {
        let g = build_graph(Vec::<&str>::new(), [("x", "y")]).unwrap();
        assert_eq!(names(g.positions()), ["x", "y"]);
    }

    #[test]
    fn fig1_shape() {
        let g = fig1();
        assert_eq!(g.len(), 11);
        assert_eq!(g.num_moves(), 12);
    }

    #[test]
    fn followers_of_fig1() {
        let g = fig1();
        assert_eq!(names(g.followers("d").unwrap()), ["e", "f", "g", "h"]);
        assert!(g.followers("b").unwrap().is_empty());
        assert_eq!(names(g.followers("g").unwrap()), ["d"]);
        assert_eq!(
            g.followers("zz"),
            Err(Error::UnknownPosition("zz".to_string()))
        );
    }

    #[test]
    fn closure() {
        let g = fig1();
        assert_eq!(
            names(&g.reachable_closure("d").unwrap()),
            ["d", "e", "f", "g", "h", "i", "j"]
        );
        assert_eq!(names(&g.reachable_closure("b").unwrap()), ["b"]);

        let cycle = build_graph(["x"], [("x", "y"), ("y", "x")]).unwrap();
        assert_eq!(names(&cycle.reachable_closure("x").unwrap()), ["x", "y"]);
        assert!(cycle.reachable_closure("q").is_err());
    }

    #[test]
    fn induced() {
        let g = fig1();
        let sub = g.induced_subgraph(["d", "f"]).unwrap();
        assert_eq!(names(sub.positions()), ["d", "f"]);
        assert_eq!(
            sub.moves().map(|(s, d)| (s.as_str(), d.as_str())).collect::<Vec<_>>(),
            [("d", "f")]
        );
        assert!(g.induced_subgraph([]).unwrap().is_empty());
        let all: Vec<&str> = g.positions().map(|p| p.as_str()).collect();
        assert_eq!(g.induced_subgraph(all).unwrap(), g);
        assert!(g.induced_subgraph(["nope"]).is_err());
    }

    #[test]
    fn reversal_is_an_involution() {
        let g = fig1();
        assert!(g.reversed().has_move("b", "a"));
        assert!(!g.reversed().has_move("a", "b"));
        assert_eq!(g.reversed().reversed(), g);
    }

    #[test]
    fn moves_are_lexicographic() {
        let g = build_graph(["c"], [("b", "a"), ("a", "c"), ("a", "b")]).unwrap();
        let moves: Vec<_> = g.moves().map(|(s, d)| format!("{s}{d}")).collect();
        assert_eq!(moves, ["ab", "ac", "ba"]);
    }
}
