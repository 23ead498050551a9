use std::collections::BTreeMap;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GameGraph, PositionId};
use crate::provenance::ProvenanceSubgraph;
use crate::argumentation::AfLabel;
use crate::solver::{EdgeAnnotation, EdgeType, Length, NodeLabel, SolvedGame, Value};

// `inf` is written as the string "inf".
impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u32(*n),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Length::Finite(n)),
            Raw::Str(s) if s == "inf" => Ok(Length::Infinite),
            Raw::Str(s) => Err(de::Error::custom(format!("invalid length {s:?}"))),
        }
    }
}

#[derive(Serialize)]
struct NodeJson<'a> {
    id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    len: Option<Length>,
}

#[derive(Serialize)]
struct ArgumentJson<'a> {
    id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    len: Option<Length>,
}

#[derive(Serialize)]
struct EdgeJson<'a> {
    src: &'a str,
    dst: &'a str,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    edge_type: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    len: Option<Length>,
}

#[derive(Serialize)]
struct GameDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<&'a str>,
    nodes: Vec<NodeJson<'a>>,
    edges: Vec<EdgeJson<'a>>,
}

#[derive(Serialize)]
struct AfDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<&'a str>,
    arguments: Vec<ArgumentJson<'a>>,
    attacks: Vec<EdgeJson<'a>>,
}

#[derive(Deserialize)]
struct NodeIn {
    id: String,
    value: Option<String>,
    len: Option<Length>,
}

#[derive(Deserialize)]
struct EdgeIn {
    src: String,
    dst: String,
    #[serde(rename = "type")]
    edge_type: Option<String>,
    len: Option<Length>,
}

#[derive(Deserialize)]
struct SolvedDocIn {
    nodes: Vec<NodeIn>,
    edges: Vec<EdgeIn>,
}

fn node<'a>(id: &'a PositionId, label: Option<NodeLabel>) -> NodeJson<'a> {
    NodeJson {
        id: id.as_str(),
        value: label.map(|l| l.value.as_str()),
        len: label.map(|l| l.length),
    }
}

fn argument<'a>(id: &'a PositionId, label: Option<NodeLabel>) -> ArgumentJson<'a> {
    ArgumentJson {
        id: id.as_str(),
        label: label.map(|l| AfLabel::from_value(l.value).as_str()),
        len: label.map(|l| l.length),
    }
}

fn edge<'a>(src: &'a PositionId, dst: &'a PositionId, ann: Option<EdgeAnnotation>) -> EdgeJson<'a> {
    EdgeJson {
        src: src.as_str(),
        dst: dst.as_str(),
        edge_type: ann.map(|a| a.edge_type.as_str()),
        len: ann.and_then(|a| a.length),
    }
}

fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents are plain data")
}

pub(super) fn graph(g: &GameGraph) -> String {
    to_string(&GameDoc {
        root: None,
        nodes: g.positions().map(|p| node(p, None)).collect(),
        edges: g.moves().map(|(s, d)| edge(s, d, None)).collect(),
    })
}

pub(super) fn solved(s: &SolvedGame) -> String {
    to_string(&GameDoc {
        root: None,
        nodes: s.labels().map(|(p, l)| node(p, Some(l))).collect(),
        edges: s.edges().map(|(a, b, ann)| edge(a, b, Some(ann))).collect(),
    })
}

pub(super) fn subgraph(p: &ProvenanceSubgraph) -> String {
    to_string(&GameDoc {
        root: Some(p.root.as_str()),
        nodes: p.nodes.iter().map(|(id, l)| node(id, *l)).collect(),
        edges: p.edges.iter().map(|((s, d), a)| edge(s, d, *a)).collect(),
    })
}

pub(super) fn af_solution(s: &SolvedGame) -> String {
    let mut attacks: Vec<EdgeJson> = s.edges().map(|(x, y, ann)| edge(y, x, Some(ann))).collect();
    attacks.sort_by(|a, b| (a.src, a.dst).cmp(&(b.src, b.dst)));
    to_string(&AfDoc {
        root: None,
        arguments: s.labels().map(|(p, l)| argument(p, Some(l))).collect(),
        attacks,
    })
}

pub(super) fn af_explanation(p: &ProvenanceSubgraph) -> String {
    to_string(&AfDoc {
        root: Some(p.root.as_str()),
        arguments: p.nodes.iter().map(|(id, l)| argument(id, *l)).collect(),
        attacks: p.edges.iter().map(|((s, d), a)| edge(s, d, *a)).collect(),
    })
}

/// Reads a solved game in the format written by
/// [`Export::to_json`](super::Export::to_json). Labels are taken as given;
/// run [`crate::solver::validate_solution`] to check them.
pub fn parse_solved_game_json(text: &str) -> Result<SolvedGame> {
    let bad = |reason: String| Error::Parse { line: 0, reason };
    let doc: SolvedDocIn = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    let id = |s: &str| PositionId::new(s);

    let mut labels = BTreeMap::new();
    for n in &doc.nodes {
        let value = match n.value.as_deref() {
            Some("won") => Value::Won,
            Some("lost") => Value::Lost,
            Some("drawn") => Value::Drawn,
            other => return Err(bad(format!("node {}: invalid value {other:?}", n.id))),
        };
        let length = n.len.ok_or_else(|| bad(format!("node {}: missing len", n.id)))?;
        labels.insert(id(&n.id)?, NodeLabel { value, length });
    }
    let mut annotations = BTreeMap::new();
    let mut moves = Vec::new();
    for e in &doc.edges {
        let name = e.edge_type.as_deref().unwrap_or_default();
        let edge_type = EdgeType::from_name(name)
            .ok_or_else(|| bad(format!("edge {} -> {}: invalid type {name:?}", e.src, e.dst)))?;
        let key = (id(&e.src)?, id(&e.dst)?);
        moves.push(key.clone());
        annotations.insert(
            key,
            EdgeAnnotation {
                edge_type,
                length: e.len,
            },
        );
    }
    let g = GameGraph::from_ids(labels.keys().cloned(), moves);
    SolvedGame::from_parts(g, &labels, &annotations)
}
