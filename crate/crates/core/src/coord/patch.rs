//! Explicit finite graphs read from a line-oriented text format:
//!
//! ```text
//! # comment
//! v <id>          a vertex
//! e <id> <id>     an undirected edge
//! base <id>       the base vertex
//! radius <k>      distances up to k are not truncated by the patch boundary
//! ```

use std::collections::{HashMap, VecDeque};
use std::path::Path;

use super::{CoordError, CoordSeq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchGraph {
    ids: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    base: usize,
    radius_valid: usize,
}

impl PatchGraph {
    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn base(&self) -> &str {
        &self.ids[self.base]
    }

    pub fn radius_valid(&self) -> usize {
        self.radius_valid
    }
}

pub fn load_patch(path: &Path) -> Result<PatchGraph, CoordError> {
    let text = std::fs::read_to_string(path).map_err(|e| CoordError::Io(format!("{}: {e}", path.display())))?;
    parse_patch(&text)
}

pub fn parse_patch(text: &str) -> Result<PatchGraph, CoordError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut ids = Vec::new();
    let mut edges = Vec::new();
    let (mut base, mut radius) = (None, None);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| CoordError::Patch { line, message };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [first, ..] if first.starts_with('#') => {}
            ["v", id] => {
                if index.insert(id.to_string(), ids.len()).is_some() {
                    return Err(err(format!("vertex {id} declared twice")));
                }
                ids.push(id.to_string());
            }
            ["e", a, b] => edges.push((line, a.to_string(), b.to_string())),
            ["base", id] => base = Some((line, id.to_string())),
            ["radius", k] => radius = Some(k.parse::<usize>().map_err(|_| err(format!("bad radius {k:?}")))?),
            _ => return Err(err(format!("unrecognized line {raw:?}"))),
        }
    }
    let mut adjacency = vec![Vec::new(); ids.len()];
    for (line, a, b) in edges {
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| CoordError::Patch { line, message: format!("unknown vertex {id}") });
        let (a, b) = (lookup(&a)?, lookup(&b)?);
        if a == b {
            return Err(CoordError::Patch { line, message: "loop edge".into() });
        }
        if adjacency[a].contains(&b) {
            return Err(CoordError::Patch { line, message: "repeated edge".into() });
        }
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let (line, base) = base.ok_or(CoordError::Patch { line: 0, message: "missing base line".into() })?;
    let base = *index.get(&base).ok_or(CoordError::Patch { line, message: format!("unknown base vertex {base}") })?;
    let radius_valid = radius.ok_or(CoordError::Patch { line: 0, message: "missing radius line".into() })?;
    Ok(PatchGraph { ids, adjacency, base, radius_valid })
}

/// Shell counts around the patch's base through distance `n_max`, which
/// must not exceed the declared valid radius.
pub fn patch_coordination(p: &PatchGraph, n_max: usize) -> Result<CoordSeq, CoordError> {
    if n_max > p.radius_valid {
        return Err(CoordError::BeyondRadius { requested: n_max, valid: p.radius_valid });
    }
    let mut dist = vec![usize::MAX; p.ids.len()];
    let mut terms = vec![0u64; n_max + 1];
    let mut queue = VecDeque::from([p.base]);
    dist[p.base] = 0;
    while let Some(v) = queue.pop_front() {
        terms[dist[v]] += 1;
        if dist[v] == n_max {
            continue;
        }
        for &w in &p.adjacency[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(CoordSeq { base: p.ids[p.base].clone(), terms })
}
