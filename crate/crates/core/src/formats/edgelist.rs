//! Edge lists: one `src dst` move per line, `node x` to declare a position
//! without moves, `#` to the end of a line is a comment.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{GameGraph, PositionId};

pub fn parse_edge_list(text: &str) -> Result<GameGraph> {
    let mut positions = Vec::new();
    let mut moves = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let id = |tok: &str| {
            PositionId::new(tok).map_err(|_| Error::Parse {
                line,
                reason: format!("invalid position id {tok:?}"),
            })
        };
        match tokens.as_slice() {
            [] => {}
            ["node", x] => positions.push(id(x)?),
            [src, dst] => moves.push((id(src)?, id(dst)?)),
            other => {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected `src dst` or `node id`, found {} token(s)", other.len()),
                })
            }
        }
    }
    Ok(GameGraph::from_ids(positions, moves))
}

/// Canonical form: `node` lines for positions without moves, then every
/// move, both sorted.
pub fn render_edge_list(g: &GameGraph) -> String {
    let mut touched = std::collections::BTreeSet::new();
    for (s, d) in g.moves() {
        touched.insert(s);
        touched.insert(d);
    }
    let mut out = String::new();
    for p in g.positions().filter(|p| !touched.contains(p)) {
        let _ = writeln!(out, "node {p}");
    }
    for (s, d) in g.moves() {
        let _ = writeln!(out, "{s} {d}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;

    #[test]
    fn small_document() {
        let g = parse_edge_list("a b\na o\n# comment").unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.num_moves(), 2);
    }

    #[test]
    fn comments_blank_lines_and_declarations() {
        let g = parse_edge_list("\n  a b   # trailing\n\nnode z\n\t\n").unwrap();
        assert!(g.contains("z"));
        assert_eq!(g.num_moves(), 1);
        assert_eq!(render_edge_list(&g), "node z\na b\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("a"),
            Err(Error::Parse {
                line: 1,
                reason: "expected `src dst` or `node id`, found 1 token(s)".into()
            })
        );
        assert!(matches!(
            parse_edge_list("a b\nx y z\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b\n\nf(x) b\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn fig1_round_trip() {
        let g = fig1();
        let text = render_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(text.lines().count(), 12);
    }
}
