//! Finite quivers and their paths.
//!
//! A path is stored in *traversal order*: the first arrow traversed comes
//! first in the sequence. The classical composition notation writes paths
//! the other way round (the last arrow traversed is written first), so a
//! composition written `beta alpha` on paper is stored here as
//! `[alpha, beta]`. All output follows the traversal-order convention of
//! the presentation file format.

use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph. Loops and parallel arrows are permitted.
///
/// Vertices and arrows are sorted by name at construction, so identifier
/// order and index order coincide. This makes the canonical path order
/// (length, then lexicographic arrow names) a plain comparison of index
/// sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(arrow name, source, target)`
    /// triples given by vertex name.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyQuiver);
        }
        let mut vertices = vertices;
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIdent {
                    kind: "vertex",
                    name: w[0].clone(),
                });
            }
        }
        let vertex_index = |name: &str| vertices.iter().position(|v| v == name);
        let mut resolved = Vec::with_capacity(arrows.len());
        for (name, src, tgt) in arrows {
            let source = vertex_index(&src).ok_or_else(|| Error::UndeclaredVertex {
                arrow: name.clone(),
                vertex: src.clone(),
            })?;
            let target = vertex_index(&tgt).ok_or_else(|| Error::UndeclaredVertex {
                arrow: name.clone(),
                vertex: tgt.clone(),
            })?;
            resolved.push(Arrow {
                name,
                source,
                target,
            });
        }
        resolved.sort_by(|a, b| a.name.cmp(&b.name));
        for w in resolved.windows(2) {
            if w[0].name == w[1].name {
                return Err(Error::DuplicateIdent {
                    kind: "arrow",
                    name: w[0].name.clone(),
                });
            }
        }
        Ok(Quiver {
            vertices,
            arrows: resolved,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertices.len()
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> {
        0..self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows starting at `v`.
    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrows()
            .filter(|&a| self.arrows[a].source == v)
            .collect()
    }

    /// Arrows ending at `v`.
    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrows()
            .filter(|&a| self.arrows[a].target == v)
            .collect()
    }
}

/// A path in a quiver, stored in traversal order (first-traversed arrow
/// first). A trivial path carries only its base vertex.
///
/// The derived ordering is the canonical total order used everywhere for
/// deterministic output: by length, then lexicographically on the arrow
/// sequence, then by base vertex (only relevant for trivial paths). This
/// relies on `Quiver` sorting arrows and vertices by name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    start: VertexId,
    arrows: Vec<ArrowId>,
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arrows.len(), &self.arrows, self.start).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.start,
        ))
    }
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    /// Builds a nontrivial path from arrows in traversal order, checking
    /// composability.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        assert!(!arrows.is_empty(), "use Path::trivial for length-zero paths");
        for w in arrows.windows(2) {
            let left = quiver.arrow(w[0]);
            let right = quiver.arrow(w[1]);
            if left.target != right.source {
                return Err(Error::NotComposable {
                    left_target: quiver.vertex_name(left.target).to_string(),
                    right_source: quiver.vertex_name(right.source).to_string(),
                });
            }
        }
        let start = quiver.arrow(arrows[0]).source;
        Ok(Path { start, arrows })
    }

    /// Convenience constructor from arrow names in traversal order.
    pub fn from_names(quiver: &Quiver, names: &[&str]) -> Result<Self> {
        let arrows = names
            .iter()
            .map(|n| {
                quiver
                    .arrow_by_name(n)
                    .ok_or_else(|| Error::Parse {
                        line: 0,
                        column: 0,
                        message: format!("unknown arrow `{n}`"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(quiver, arrows)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn source(&self) -> VertexId {
        self.start
    }

    pub fn target(&self, quiver: &Quiver) -> VertexId {
        match self.arrows.last() {
            Some(&a) => quiver.arrow(a).target,
            None => self.start,
        }
    }

    /// The vertex sequence visited by the path, starting at `source`.
    pub fn vertex_chain(&self, quiver: &Quiver) -> Vec<VertexId> {
        let mut chain = vec![self.start];
        chain.extend(self.arrows.iter().map(|&a| quiver.arrow(a).target));
        chain
    }

    /// The traversal-order prefix of length `n` (the part traversed first).
    /// In composition notation this is a right factor.
    pub fn traversal_prefix(&self, quiver: &Quiver, n: usize) -> Path {
        assert!(n <= self.len());
        if n == 0 {
            Path::trivial(self.start)
        } else {
            Path::from_arrows(quiver, self.arrows[..n].to_vec()).expect("prefix of a valid path")
        }
    }

    /// The traversal-order suffix of length `n` (the part traversed last).
    /// In composition notation this is a left factor.
    pub fn traversal_suffix(&self, quiver: &Quiver, n: usize) -> Path {
        assert!(n <= self.len());
        let k = self.len() - n;
        if n == 0 {
            Path::trivial(self.target(quiver))
        } else {
            Path::from_arrows(quiver, self.arrows[k..].to_vec()).expect("suffix of a valid path")
        }
    }

    pub fn starts_with(&self, other: &Path) -> bool {
        if other.is_trivial() {
            return self.start == other.start;
        }
        self.arrows.len() >= other.arrows.len() && self.arrows[..other.arrows.len()] == other.arrows
    }

    pub fn ends_with(&self, quiver: &Quiver, other: &Path) -> bool {
        if other.is_trivial() {
            return self.target(quiver) == other.start;
        }
        let n = self.arrows.len();
        let m = other.arrows.len();
        n >= m && self.arrows[n - m..] == other.arrows
    }

    /// Renders the path for display: arrow names in traversal order,
    /// space-separated; a trivial path at vertex `v` prints as `e_v`.
    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", quiver.vertex_name(self.start))
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow_name(a))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// Concatenation `pq` in composition notation: `q` is traversed first,
/// then `p`. Requires `s(p) = t(q)`.
pub fn concat(quiver: &Quiver, p: &Path, q: &Path) -> Result<Path> {
    if p.source() != q.target(quiver) {
        return Err(Error::NotComposable {
            left_target: quiver.vertex_name(p.source()).to_string(),
            right_source: quiver.vertex_name(q.target(quiver)).to_string(),
        });
    }
    if q.is_trivial() {
        return Ok(p.clone());
    }
    if p.is_trivial() {
        return Ok(q.clone());
    }
    let mut arrows = q.arrows.clone();
    arrows.extend_from_slice(&p.arrows);
    Ok(Path {
        start: q.start,
        arrows,
    })
}

/// Whether `q` occurs as a contiguous composable factor of `p`.
/// A trivial `q` at vertex `v` is a subpath iff `v` occurs on `p`.
pub fn is_subpath(quiver: &Quiver, q: &Path, p: &Path) -> bool {
    if q.is_trivial() {
        return p.vertex_chain(quiver).contains(&q.start);
    }
    let n = p.arrows.len();
    let m = q.arrows.len();
    if m > n {
        return false;
    }
    (0..=n - m).any(|i| p.arrows[i..i + m] == q.arrows)
}

/// Wraps a path together with its quiver for `Display`.
pub struct PathDisplay<'a>(pub &'a Quiver, pub &'a Path);

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.1.display(self.0))
    }
}
