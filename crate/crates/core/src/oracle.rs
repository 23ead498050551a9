//! Brute-force reference solver for small games.
//!
//! For every start position this enumerates all pairs of positional
//! strategies (one for the player who moves first, one for the opponent) and
//! plays each pair out. It shares no code with [`crate::solver`] beyond the
//! graph and label types.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{GameGraph, PositionId};
use crate::solver::{Length, SolvedGame, Value};

pub const DEFAULT_MAX_NODES: usize = 8;
pub const DEFAULT_MAX_PLAYS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_nodes: usize,
    /// Upper bound on simulated plays, summed over all start positions.
    pub max_plays: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
            max_plays: DEFAULT_MAX_PLAYS,
        }
    }
}

pub type OracleSolution = BTreeMap<PositionId, (Value, Length)>;

enum Outcome {
    FirstWins(u32),
    SecondWins(u32),
    Draw,
}

/// Solves `g` with the default limits.
pub fn oracle_solve(g: &GameGraph) -> Result<OracleSolution> {
    oracle_solve_with(g, OracleLimits::default())
}

pub fn oracle_solve_with(g: &GameGraph, limits: OracleLimits) -> Result<OracleSolution> {
    if g.len() > limits.max_nodes {
        return Err(Error::GraphTooLarge(format!(
            "{} positions, limit {}",
            g.len(),
            limits.max_nodes
        )));
    }
    let n = g.len();
    let succ: Vec<Vec<usize>> = (0..n).map(|i| g.succ(i).to_vec()).collect();

    let domains: Vec<(Vec<usize>, Vec<usize>)> = (0..n).map(|x| strategy_domains(&succ, x)).collect();
    let mut total: u64 = 0;
    for (first, second) in &domains {
        let plays = strategy_count(&succ, first).saturating_mul(strategy_count(&succ, second));
        total = total.saturating_add(plays);
    }
    if total > limits.max_plays {
        return Err(Error::GraphTooLarge(format!(
            "{total} plays, limit {}",
            limits.max_plays
        )));
    }

    let mut out = BTreeMap::new();
    for (x, (first, second)) in domains.iter().enumerate() {
        out.insert(g.id(x).clone(), solve_from(&succ, x, first, second));
    }
    Ok(out)
}

/// The positions where each player may be to move in a play from `x`: those
/// reachable after an even (first player) or odd (second player) number of
/// moves. Sinks need no choice and are left out.
fn strategy_domains(succ: &[Vec<usize>], x: usize) -> (Vec<usize>, Vec<usize>) {
    let n = succ.len();
    let mut seen = vec![[false; 2]; n];
    let mut stack = vec![(x, 0usize)];
    seen[x][0] = true;
    while let Some((u, parity)) = stack.pop() {
        for &v in &succ[u] {
            if !seen[v][1 - parity] {
                seen[v][1 - parity] = true;
                stack.push((v, 1 - parity));
            }
        }
    }
    let pick = |p: usize| {
        (0..n)
            .filter(|&v| seen[v][p] && !succ[v].is_empty())
            .collect::<Vec<_>>()
    };
    (pick(0), pick(1))
}

fn strategy_count(succ: &[Vec<usize>], domain: &[usize]) -> u64 {
    domain
        .iter()
        .fold(1u64, |acc, &v| acc.saturating_mul(succ[v].len() as u64))
}

/// Steps a mixed-radix counter over the choices at each domain position.
/// Returns false once every combination has been visited.
fn advance(counter: &mut [usize], domain: &[usize], succ: &[Vec<usize>]) -> bool {
    for (k, &v) in domain.iter().enumerate() {
        counter[k] += 1;
        if counter[k] < succ[v].len() {
            return true;
        }
        counter[k] = 0;
    }
    false
}

fn solve_from(succ: &[Vec<usize>], x: usize, first: &[usize], second: &[usize]) -> (Value, Length) {
    let n = succ.len();
    let mut sigma_move = vec![usize::MAX; n];
    let mut tau_move = vec![usize::MAX; n];
    let mut sigma = vec![0usize; first.len()];
    // (position, parity) visit stamps, reset per play by bumping the epoch
    let mut visited = vec![[0u64; 2]; n];
    let mut epoch = 0u64;

    let mut first_can_force = false;
    let mut fastest_forced_win = u32::MAX;
    let mut second_always_wins = true;
    let mut longest_delay = 0u32;

    loop {
        for (k, &v) in first.iter().enumerate() {
            sigma_move[v] = succ[v][sigma[k]];
        }
        let mut forces_win = true;
        let mut worst_win = 0u32;
        let mut refuted = false;
        let mut quickest_refutation = u32::MAX;

        let mut tau = vec![0usize; second.len()];
        loop {
            for (k, &v) in second.iter().enumerate() {
                tau_move[v] = succ[v][tau[k]];
            }
            epoch += 1;
            match play(succ, x, &sigma_move, &tau_move, &mut visited, epoch) {
                Outcome::FirstWins(len) => worst_win = worst_win.max(len),
                Outcome::SecondWins(len) => {
                    forces_win = false;
                    refuted = true;
                    quickest_refutation = quickest_refutation.min(len);
                }
                Outcome::Draw => forces_win = false,
            }
            if !advance(&mut tau, second, succ) {
                break;
            }
        }

        if forces_win {
            first_can_force = true;
            fastest_forced_win = fastest_forced_win.min(worst_win);
        }
        if refuted {
            longest_delay = longest_delay.max(quickest_refutation);
        } else {
            second_always_wins = false;
        }
        if !advance(&mut sigma, first, succ) {
            break;
        }
    }

    if first_can_force {
        (Value::Won, Length::Finite(fastest_forced_win))
    } else if second_always_wins {
        (Value::Lost, Length::Finite(longest_delay))
    } else {
        (Value::Drawn, Length::Infinite)
    }
}

/// Plays from `x` with the first player using `sigma` at even plies and the
/// second player `tau` at odd plies. The player to move at a sink loses; a
/// repeated (position, player to move) means the play goes on forever.
fn play(
    succ: &[Vec<usize>],
    x: usize,
    sigma: &[usize],
    tau: &[usize],
    visited: &mut [[u64; 2]],
    epoch: u64,
) -> Outcome {
    let mut pos = x;
    let mut ply = 0u32;
    loop {
        let parity = (ply % 2) as usize;
        if succ[pos].is_empty() {
            return if parity == 0 {
                Outcome::SecondWins(ply)
            } else {
                Outcome::FirstWins(ply)
            };
        }
        if visited[pos][parity] == epoch {
            return Outcome::Draw;
        }
        visited[pos][parity] = epoch;
        pos = if parity == 0 { sigma[pos] } else { tau[pos] };
        ply += 1;
    }
}

/// A disagreement between a solution and the oracle at one position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub position: PositionId,
    pub solver: Option<(Value, Length)>,
    pub oracle: Option<(Value, Length)>,
}

/// Lists every position whose value or length differs between `solution`
/// and `reference`, including positions only one side knows.
pub fn compare(solution: &SolvedGame, reference: &OracleSolution) -> Vec<Mismatch> {
    let solved: BTreeMap<&PositionId, (Value, Length)> = solution
        .labels()
        .map(|(x, l)| (x, (l.value, l.length)))
        .collect();
    let mut keys: Vec<&PositionId> = solved.keys().copied().chain(reference.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|x| {
            let (a, b) = (solved.get(x).copied(), reference.get(x).copied());
            (a != b).then(|| Mismatch {
                position: x.clone(),
                solver: a,
                oracle: b,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::graph::build_graph;
    use crate::solver::{solve, NodeLabel};

    fn fig1_core() -> GameGraph {
        fig1()
            .induced_subgraph(["c", "d", "e", "f", "g", "h", "i", "j"])
            .unwrap()
    }

    #[test]
    fn fig1_restricted_lengths() {
        let r = oracle_solve(&fig1_core()).unwrap();
        let len = |x: &str| r[x].1;
        assert_eq!(r["c"], (Value::Lost, Length::Finite(4)));
        assert_eq!(r["d"], (Value::Won, Length::Finite(1)));
        assert_eq!(r["e"], (Value::Won, Length::Finite(3)));
        assert_eq!(len("g"), Length::Finite(2));
        assert_eq!(len("h"), Length::Finite(2));
    }

    #[test]
    fn trivial_graphs() {
        let sink = build_graph(["s"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(oracle_solve(&sink).unwrap()["s"], (Value::Lost, Length::Finite(0)));
        let cycle = build_graph(["x"], [("x", "y"), ("y", "x")]).unwrap();
        let r = oracle_solve(&cycle).unwrap();
        assert!(r.values().all(|&v| v == (Value::Drawn, Length::Infinite)));
    }

    #[test]
    fn too_large() {
        let big = build_graph((0..9).map(|i| format!("n{i}")), Vec::<(&str, &str)>::new()).unwrap();
        assert!(matches!(oracle_solve(&big), Err(Error::GraphTooLarge(_))));
        let tight = OracleLimits {
            max_nodes: 8,
            max_plays: 1,
        };
        let g = build_graph(["a"], [("a", "b"), ("a", "c"), ("b", "a")]).unwrap();
        assert!(matches!(oracle_solve_with(&g, tight), Err(Error::GraphTooLarge(_))));
    }

    #[test]
    fn compare_reports_corruption() {
        let g = fig1_core();
        let reference = oracle_solve(&g).unwrap();
        let (s, _) = solve(&g);
        assert!(compare(&s, &reference).is_empty());

        let mut labels: BTreeMap<PositionId, NodeLabel> =
            s.labels().map(|(x, l)| (x.clone(), l)).collect();
        labels.insert(PositionId::new("c").unwrap(), NodeLabel::lost(2));
        labels.insert(PositionId::new("e").unwrap(), NodeLabel::won(1));
        let anns = s.edges().map(|(x, y, a)| ((x.clone(), y.clone()), a)).collect();
        let corrupted = SolvedGame::from_parts(g, &labels, &anns).unwrap();
        let m = compare(&corrupted, &reference);
        assert_eq!(
            m.iter().map(|m| m.position.as_str()).collect::<Vec<_>>(),
            ["c", "e"]
        );

        let empty = GameGraph::default();
        assert!(compare(&solve(&empty).0, &oracle_solve(&empty).unwrap()).is_empty());
    }
}
