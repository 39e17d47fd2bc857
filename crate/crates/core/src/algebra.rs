//! Monomial algebras: presentations, minimal relations, the forbidden-factor
//! avoidance automaton, the nonzero-path basis, and the annihilator sets
//! `L(p)` / `R(p)`.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::quiver::{Arrow, ArrowId, Path, Quiver, VertexId};

/// A quiver together with a set of monomial relations of length >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPresentation {
    quiver: Quiver,
    generators: Vec<Path>,
}

impl MonomialPresentation {
    pub fn new(quiver: Quiver, generators: Vec<Path>) -> Result<Self> {
        for g in &generators {
            if g.len() < 2 {
                return Err(Error::RelationTooShort {
                    relation: g.display(&quiver),
                    length: g.len(),
                });
            }
        }
        Ok(MonomialPresentation { quiver, generators })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn generators(&self) -> &[Path] {
        &self.generators
    }
}

/// Returns the minimal relation set `F`: the generators containing no other
/// generator as a proper subpath. Duplicates are dropped.
pub fn minimal_relations(quiver: &Quiver, generators: &[Path]) -> Vec<Path> {
    let distinct: BTreeSet<&Path> = generators.iter().collect();
    distinct
        .iter()
        .filter(|g| {
            !distinct
                .iter()
                .any(|h| *h != **g && crate::quiver::is_subpath(quiver, h, g))
        })
        .map(|g| (*g).clone())
        .collect()
}

/// Aho-Corasick-style automaton over arrow walks: a state is the longest
/// suffix of the walk so far that is a proper prefix (in traversal order)
/// of some element of `F`. A walk dies exactly when its suffix completes an
/// element of `F`, so the automaton accepts precisely the nonzero paths.
#[derive(Debug, Clone)]
pub struct AvoidanceAutomaton {
    /// suffix spelled by each state, in traversal order (empty for roots)
    suffixes: Vec<Vec<ArrowId>>,
    /// current vertex of each state
    vertices: Vec<VertexId>,
    /// root state for each vertex
    roots: Vec<usize>,
    /// transitions[state][arrow] = Some(next state) or None (dead)
    transitions: Vec<HashMap<ArrowId, Option<usize>>>,
}

impl AvoidanceAutomaton {
    pub fn build(quiver: &Quiver, relations: &[Path]) -> Self {
        // state keys: nonempty proper traversal prefixes of relations
        let mut prefix_index: HashMap<Vec<ArrowId>, usize> = HashMap::new();
        let mut suffixes: Vec<Vec<ArrowId>> = Vec::new();
        let mut vertices: Vec<VertexId> = Vec::new();

        let mut roots = Vec::with_capacity(quiver.vertex_count());
        for v in quiver.vertices() {
            roots.push(suffixes.len());
            suffixes.push(Vec::new());
            vertices.push(v);
        }
        for r in relations {
            for n in 1..r.len() {
                let prefix = r.arrows()[..n].to_vec();
                if !prefix_index.contains_key(&prefix) {
                    prefix_index.insert(prefix.clone(), suffixes.len());
                    vertices.push(quiver.arrow(prefix[n - 1]).target);
                    suffixes.push(prefix);
                }
            }
        }

        let forbidden: HashSet<&[ArrowId]> =
            relations.iter().map(|r| r.arrows()).collect();
        let max_prefix = suffixes.iter().map(|s| s.len()).max().unwrap_or(0);

        let mut transitions = vec![HashMap::new(); suffixes.len()];
        for state in 0..suffixes.len() {
            let v = vertices[state];
            for a in quiver.arrows_from(v) {
                let mut walk = suffixes[state].clone();
                walk.push(a);
                // F is subpath-minimal and the old suffix was clean, so a new
                // forbidden factor must end at the appended arrow
                let dead = (1..=walk.len())
                    .any(|l| forbidden.contains(&walk[walk.len() - l..]));
                let next = if dead {
                    None
                } else {
                    let mut found = roots[quiver.arrow(a).target];
                    let upper = walk.len().min(max_prefix);
                    for l in (1..=upper).rev() {
                        if let Some(&s) = prefix_index.get(&walk[walk.len() - l..]) {
                            found = s;
                            break;
                        }
                    }
                    Some(found)
                };
                transitions[state].insert(a, next);
            }
        }

        AvoidanceAutomaton {
            suffixes,
            vertices,
            roots,
            transitions,
        }
    }

    pub fn state_count(&self) -> usize {
        self.suffixes.len()
    }

    /// Runs a walk from the appropriate root; true iff it never dies.
    pub fn accepts(&self, quiver: &Quiver, path: &Path) -> bool {
        let mut state = self.roots[path.source()];
        for &a in path.arrows() {
            if quiver.arrow(a).source != self.vertices[state] {
                return false;
            }
            match self.transitions[state].get(&a) {
                Some(Some(next)) => state = *next,
                _ => return false,
            }
        }
        true
    }

    /// Looks for a cycle among live states reachable from the roots. A cycle
    /// means infinitely many nonzero paths, i.e. a non-admissible ideal.
    /// Returns the arrow labels along a witness cycle.
    fn find_live_cycle(&self) -> Option<Vec<ArrowId>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let n = self.state_count();
        let mut marks = vec![Mark::White; n];
        // iterative DFS; stack entries carry the arrow taken to reach them
        for &root in &self.roots {
            if marks[root] != Mark::White {
                continue;
            }
            type Frame = (usize, Option<ArrowId>, Vec<(ArrowId, usize)>);
            let mut stack: Vec<Frame> = Vec::new();
            let mut path_stack: Vec<(usize, Option<ArrowId>)> = Vec::new();
            let succs = |s: usize| -> Vec<(ArrowId, usize)> {
                let mut out: Vec<(ArrowId, usize)> = self.transitions[s]
                    .iter()
                    .filter_map(|(&a, &t)| t.map(|t| (a, t)))
                    .collect();
                out.sort();
                out
            };
            stack.push((root, None, succs(root)));
            marks[root] = Mark::Grey;
            path_stack.push((root, None));
            while let Some((state, _, remaining)) = stack.last_mut() {
                if let Some((arrow, next)) = remaining.pop() {
                    match marks[next] {
                        Mark::White => {
                            marks[next] = Mark::Grey;
                            let s = succs(next);
                            path_stack.push((next, Some(arrow)));
                            stack.push((next, Some(arrow), s));
                        }
                        Mark::Grey => {
                            // back edge: collect the cycle arrows
                            let pos = path_stack
                                .iter()
                                .position(|&(s, _)| s == next)
                                .expect("grey state is on the path stack");
                            let mut cycle: Vec<ArrowId> = path_stack[pos + 1..]
                                .iter()
                                .map(|&(_, a)| a.expect("non-root stack entries have arrows"))
                                .collect();
                            cycle.push(arrow);
                            return Some(cycle);
                        }
                        Mark::Black => {}
                    }
                } else {
                    marks[*state] = Mark::Black;
                    stack.pop();
                    path_stack.pop();
                }
            }
        }
        None
    }

    /// Enumerates all accepted paths. Only valid once the live part is known
    /// to be acyclic.
    fn enumerate(&self, quiver: &Quiver) -> Vec<Path> {
        let mut out = Vec::new();
        for v in quiver.vertices() {
            out.push(Path::trivial(v));
            let mut walk: Vec<ArrowId> = Vec::new();
            self.enumerate_from(quiver, self.roots[v], &mut walk, &mut out);
        }
        out.sort();
        out
    }

    fn enumerate_from(
        &self,
        quiver: &Quiver,
        state: usize,
        walk: &mut Vec<ArrowId>,
        out: &mut Vec<Path>,
    ) {
        let mut nexts: Vec<(ArrowId, usize)> = self.transitions[state]
            .iter()
            .filter_map(|(&a, &t)| t.map(|t| (a, t)))
            .collect();
        nexts.sort();
        for (a, next) in nexts {
            walk.push(a);
            out.push(Path::from_arrows(quiver, walk.clone()).expect("walk is composable"));
            self.enumerate_from(quiver, next, walk, out);
            walk.pop();
        }
    }
}

/// A finite-dimensional monomial algebra: presentation, minimal relation
/// set `F`, and the basis of nonzero paths in canonical order.
#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    presentation: MonomialPresentation,
    relations: Vec<Path>,
    basis: Vec<Path>,
    basis_set: HashSet<Path>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
}

impl MonomialAlgebra {
    pub fn build(presentation: MonomialPresentation) -> Result<Self> {
        let quiver = presentation.quiver().clone();
        if quiver.vertex_count() == 0 {
            return Err(Error::EmptyQuiver);
        }
        let relations = minimal_relations(&quiver, presentation.generators());
        let automaton = AvoidanceAutomaton::build(&quiver, &relations);
        if let Some(cycle) = automaton.find_live_cycle() {
            let witness = Path::from_arrows(&quiver, cycle)
                .map(|p| p.display(&quiver))
                .unwrap_or_else(|_| "<cycle>".to_string());
            return Err(Error::NotAdmissible { witness });
        }
        let basis = automaton.enumerate(&quiver);
        let basis_set: HashSet<Path> = basis.iter().cloned().collect();
        let mut by_source = vec![Vec::new(); quiver.vertex_count()];
        let mut by_target = vec![Vec::new(); quiver.vertex_count()];
        for (i, p) in basis.iter().enumerate() {
            by_source[p.source()].push(i);
            by_target[p.target(&quiver)].push(i);
        }
        Ok(MonomialAlgebra {
            presentation,
            relations,
            basis,
            basis_set,
            by_source,
            by_target,
        })
    }

    /// Builds directly from quiver data and relation generators.
    pub fn from_parts(quiver: Quiver, generators: Vec<Path>) -> Result<Self> {
        MonomialAlgebra::build(MonomialPresentation::new(quiver, generators)?)
    }

    pub fn presentation(&self) -> &MonomialPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    /// The minimal relation set `F`, in canonical order.
    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|r| r.len() == 2)
    }

    /// The basis of nonzero paths, in canonical order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis paths with the given source vertex, in canonical order.
    pub fn basis_from(&self, v: VertexId) -> impl Iterator<Item = &Path> {
        self.by_source[v].iter().map(move |&i| &self.basis[i])
    }

    /// Basis paths with the given target vertex, in canonical order.
    pub fn basis_into(&self, v: VertexId) -> impl Iterator<Item = &Path> {
        self.by_target[v].iter().map(move |&i| &self.basis[i])
    }

    /// dim `P_i` = number of basis paths with source `i`.
    pub fn projective_dim_at(&self, v: VertexId) -> usize {
        self.by_source[v].len()
    }

    /// Constant-time basis membership.
    pub fn is_basis_path(&self, p: &Path) -> bool {
        self.basis_set.contains(p)
    }

    fn check_path(&self, p: &Path) -> Result<()> {
        let quiver = self.quiver();
        if p.source() >= quiver.vertex_count()
            || p.arrows().iter().any(|&a| a >= quiver.arrow_count())
        {
            return Err(Error::ForeignPath);
        }
        Ok(())
    }

    fn arrows_forbidden(&self, arrows: &[ArrowId]) -> bool {
        self.relations.iter().any(|r| {
            let m = r.len();
            arrows.len() >= m && (0..=arrows.len() - m).any(|i| arrows[i..i + m] == *r.arrows())
        })
    }

    /// True iff no element of `F` is a subpath of `p`.
    pub fn is_nonzero(&self, p: &Path) -> Result<bool> {
        self.check_path(p)?;
        Ok(!self.arrows_forbidden(p.arrows()))
    }

    fn require_nonzero_nontrivial(&self, p: &Path) -> Result<()> {
        self.check_path(p)?;
        if p.is_trivial() {
            return Err(Error::TrivialPath {
                path: p.display(self.quiver()),
            });
        }
        if self.arrows_forbidden(p.arrows()) {
            return Err(Error::ZeroPath {
                path: p.display(self.quiver()),
            });
        }
        Ok(())
    }

    /// `L(p)`: right-minimal nonzero `q` with `s(q) = t(p)` and `qp = 0`.
    ///
    /// A candidate is right-minimal exactly when its longest proper
    /// traversal prefix does not already annihilate `p` (annihilation is
    /// monotone under extension). Returned in canonical order.
    pub fn left_min_annihilators(&self, p: &Path) -> Result<Vec<Path>> {
        self.require_nonzero_nontrivial(p)?;
        let quiver = self.quiver();
        let tp = p.target(quiver);
        let mut out = Vec::new();
        for q in self.basis_from(tp) {
            if q.is_trivial() {
                continue;
            }
            // qp in traversal order: p first, then q
            let mut full = p.arrows().to_vec();
            full.extend_from_slice(q.arrows());
            if !self.arrows_forbidden(&full) {
                continue;
            }
            full.truncate(p.len() + q.len() - 1);
            if !self.arrows_forbidden(&full) {
                out.push(q.clone());
            }
        }
        Ok(out)
    }

    /// `R(p)`: left-minimal nonzero `q` with `t(q) = s(p)` and `pq = 0`.
    /// Returned in canonical order.
    pub fn right_min_annihilators(&self, p: &Path) -> Result<Vec<Path>> {
        self.require_nonzero_nontrivial(p)?;
        let sp = p.source();
        let mut out = Vec::new();
        for q in self.basis_into(sp) {
            if q.is_trivial() {
                continue;
            }
            // pq in traversal order: q first, then p
            let mut full = q.arrows().to_vec();
            full.extend_from_slice(p.arrows());
            if !self.arrows_forbidden(&full) {
                continue;
            }
            // left-minimal: dropping the first-traversed arrow of q must
            // leave a non-annihilating left factor
            if !self.arrows_forbidden(&full[1..]) {
                out.push(q.clone());
            }
        }
        Ok(out)
    }

    /// Access to arrows for convenience.
    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        self.quiver().arrow(a)
    }
}
