//! Plain-text graph formats.
//!
//! Edge lists carry one `u v` pair per line, 0-based ids, each undirected
//! edge once with `u < v`, sorted. Community files carry one
//! `node community_id` pair per line.

use std::io::{BufRead, Write};

use crate::error::GraphError;
use crate::graph::household::HouseholdGraph;
use crate::graph::simple::{NodeId, SimpleGraph};

pub fn write_edge_list<W: Write>(g: &SimpleGraph, mut w: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<SimpleGraph, GraphError> {
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut max_node: NodeId = 0;
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse = |s: Option<&str>| -> Result<NodeId, GraphError> {
            s.and_then(|t| t.parse().ok()).ok_or(GraphError::Parse {
                line: idx + 1,
                msg: format!("expected `u v`, got `{line}`"),
            })
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(GraphError::Parse {
                line: idx + 1,
                msg: format!("expected `u v`, got `{line}`"),
            });
        }
        max_node = max_node.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(GraphError::Parse {
            line: 0,
            msg: "empty edge list".into(),
        });
    }
    SimpleGraph::from_edges(max_node as usize + 1, &edges)
}

pub fn write_community_map<W: Write>(g: &HouseholdGraph, mut w: W) -> std::io::Result<()> {
    for (node, &community) in g.community_map().iter().enumerate() {
        writeln!(w, "{node} {community}")?;
    }
    Ok(())
}

pub fn read_community_map<R: BufRead>(r: R) -> Result<Vec<NodeId>, GraphError> {
    let mut pairs: Vec<(usize, NodeId)> = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let node: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(GraphError::Parse {
                line: idx + 1,
                msg: format!("expected `node community`, got `{line}`"),
            })?;
        let community: NodeId =
            parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(GraphError::Parse {
                    line: idx + 1,
                    msg: format!("expected `node community`, got `{line}`"),
                })?;
        pairs.push((node, community));
    }
    pairs.sort_unstable();
    if pairs.iter().enumerate().any(|(i, &(node, _))| i != node) {
        return Err(GraphError::Parse {
            line: 0,
            msg: "community map does not cover nodes 0..n exactly once".into(),
        });
    }
    Ok(pairs.into_iter().map(|(_, c)| c).collect())
}
