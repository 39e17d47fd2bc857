//! Relation quiver of a quadratic monomial algebra, component analysis and
//! the Gorenstein / CM-free / finite-global-dimension verdicts.

use std::collections::BTreeSet;

use crate::algebra::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Path};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// a basic cycle: every vertex has exactly one in- and out-edge and the
    /// component is a single oriented cycle
    PerfectCycle,
    /// no directed cycle
    Acyclic,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// arrows of the base quiver lying in this component, sorted
    pub arrows: Vec<ArrowId>,
    pub kind: ComponentKind,
    /// longest directed path length; only populated for acyclic components
    pub longest_path_length: Option<usize>,
}

/// The relation quiver of a quadratic monomial algebra: vertices are the
/// arrows of `Q`, and each length-2 relation (traversal order `[alpha,
/// beta]`, i.e. `beta alpha` in composition notation) contributes one edge
/// `alpha -> beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationQuiver {
    /// number of vertices = number of arrows of the base quiver
    pub vertex_count: usize,
    /// edges `(alpha, beta)` together with the defining relation
    pub edges: Vec<(ArrowId, ArrowId, Path)>,
    pub components: Vec<Component>,
}

impl RelationQuiver {
    pub fn component_of(&self, arrow: ArrowId) -> &Component {
        self.components
            .iter()
            .find(|c| c.arrows.binary_search(&arrow).is_ok())
            .expect("every arrow lies in a component")
    }

    fn successors(&self, arrow: ArrowId) -> Vec<ArrowId> {
        self.edges
            .iter()
            .filter(|(a, _, _)| *a == arrow)
            .map(|(_, b, _)| *b)
            .collect()
    }

    /// Vertices lying on some directed cycle.
    fn cyclic_vertices(&self) -> BTreeSet<ArrowId> {
        let mut out = BTreeSet::new();
        for v in 0..self.vertex_count {
            // v is cyclic iff v is reachable from one of its successors
            let mut stack = self.successors(v);
            let mut seen: BTreeSet<ArrowId> = stack.iter().copied().collect();
            let mut found = false;
            while let Some(u) = stack.pop() {
                if u == v {
                    found = true;
                    break;
                }
                for w in self.successors(u) {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if found {
                out.insert(v);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinReport {
    pub is_quadratic: bool,
    pub gorenstein: bool,
    /// the proven self-injective-dimension bound `d + 2`; present only when
    /// Gorenstein. The bound is not claimed to be sharp.
    pub gorenstein_bound: Option<usize>,
    pub cm_free: bool,
    pub finite_global_dimension: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrowModuleStatus {
    pub gp: bool,
    pub finite_projdim: bool,
}

fn require_quadratic(algebra: &MonomialAlgebra) -> Result<()> {
    if algebra.is_quadratic() {
        Ok(())
    } else {
        Err(Error::QuadraticRequired)
    }
}

/// Builds the relation quiver with its component classification.
pub fn relation_quiver(algebra: &MonomialAlgebra) -> Result<RelationQuiver> {
    require_quadratic(algebra)?;
    let n = algebra.quiver().arrow_count();
    let edges: Vec<(ArrowId, ArrowId, Path)> = algebra
        .relations()
        .iter()
        .map(|r| {
            let a = r.arrows()[0];
            let b = r.arrows()[1];
            (a, b, r.clone())
        })
        .collect();

    // weakly connected components via union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b, _) in &edges {
        let ra = find(&mut parent, *a);
        let rb = find(&mut parent, *b);
        parent[ra] = rb;
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<ArrowId>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }

    let mut components = Vec::new();
    for (_, mut arrows) in groups {
        arrows.sort_unstable();
        let comp_edges: Vec<(ArrowId, ArrowId)> = edges
            .iter()
            .filter(|(a, _, _)| arrows.binary_search(a).is_ok())
            .map(|(a, b, _)| (*a, *b))
            .collect();
        let indeg = |v: ArrowId| comp_edges.iter().filter(|(_, b)| *b == v).count();
        let outdeg = |v: ArrowId| comp_edges.iter().filter(|(a, _)| *a == v).count();

        let is_basic_cycle = comp_edges.len() == arrows.len()
            && arrows.iter().all(|&v| indeg(v) == 1 && outdeg(v) == 1);

        let kind;
        let mut longest = None;
        if is_basic_cycle {
            kind = ComponentKind::PerfectCycle;
        } else {
            // topological sort attempt decides acyclicity and longest path
            match longest_path_acyclic(&arrows, &comp_edges) {
                Some(l) => {
                    kind = ComponentKind::Acyclic;
                    longest = Some(l);
                }
                None => kind = ComponentKind::Mixed,
            }
        }
        components.push(Component {
            arrows,
            kind,
            longest_path_length: longest,
        });
    }

    Ok(RelationQuiver {
        vertex_count: n,
        edges,
        components,
    })
}

/// Longest directed path via topological-order DP; `None` if a directed
/// cycle exists.
fn longest_path_acyclic(vertices: &[ArrowId], edges: &[(ArrowId, ArrowId)]) -> Option<usize> {
    let mut indeg: std::collections::BTreeMap<ArrowId, usize> =
        vertices.iter().map(|&v| (v, 0)).collect();
    for (_, b) in edges {
        *indeg.get_mut(b).unwrap() += 1;
    }
    let mut queue: Vec<ArrowId> = indeg
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(&v, _)| v)
        .collect();
    let mut dist: std::collections::BTreeMap<ArrowId, usize> =
        vertices.iter().map(|&v| (v, 0)).collect();
    let mut seen = 0;
    let mut best = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        let dv = dist[&v];
        best = best.max(dv);
        for (a, b) in edges {
            if *a == v {
                let d = dist.get_mut(b).unwrap();
                *d = (*d).max(dv + 1);
                let i = indeg.get_mut(b).unwrap();
                *i -= 1;
                if *i == 0 {
                    queue.push(*b);
                }
            }
        }
    }
    (seen == vertices.len()).then_some(best)
}

/// Arrows lying in perfect components; for a quadratic algebra these are
/// exactly the perfect paths (all of which are arrows).
pub fn perfect_arrows(algebra: &MonomialAlgebra) -> Result<BTreeSet<ArrowId>> {
    let rq = relation_quiver(algebra)?;
    Ok(rq
        .components
        .iter()
        .filter(|c| c.kind == ComponentKind::PerfectCycle)
        .flat_map(|c| c.arrows.iter().copied())
        .collect())
}

pub fn gorenstein_report(algebra: &MonomialAlgebra) -> Result<GorensteinReport> {
    let rq = relation_quiver(algebra)?;
    let mixed = rq
        .components
        .iter()
        .any(|c| c.kind == ComponentKind::Mixed);
    let perfect = rq
        .components
        .iter()
        .any(|c| c.kind == ComponentKind::PerfectCycle);
    let gorenstein = !mixed;
    let d = rq
        .components
        .iter()
        .filter_map(|c| c.longest_path_length)
        .max()
        .unwrap_or(0);
    Ok(GorensteinReport {
        is_quadratic: true,
        gorenstein,
        gorenstein_bound: gorenstein.then_some(d + 2),
        cm_free: !perfect,
        finite_global_dimension: rq
            .components
            .iter()
            .all(|c| c.kind == ComponentKind::Acyclic),
    })
}

pub fn arrow_module_status(
    algebra: &MonomialAlgebra,
    arrow: ArrowId,
) -> Result<ArrowModuleStatus> {
    let rq = relation_quiver(algebra)?;
    let gp = rq.component_of(arrow).kind == ComponentKind::PerfectCycle;
    // bounded vertex: no directed cycle is reachable
    let cyclic = rq.cyclic_vertices();
    let mut stack = vec![arrow];
    let mut seen = BTreeSet::new();
    seen.insert(arrow);
    let mut bounded = true;
    while let Some(v) = stack.pop() {
        if cyclic.contains(&v) {
            bounded = false;
            break;
        }
        for w in rq.successors(v) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    Ok(ArrowModuleStatus {
        gp,
        finite_projdim: bounded,
    })
}
