//! Perfect pairs, perfect paths, relation-cycles, the classification of
//! indecomposable non-projective Gorenstein-projective cyclic modules,
//! stable Hom dimensions, overlaps and the stable-category shape.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::quiver::{concat, Path, VertexId};

/// Verdict for a cyclic path module `Ap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpVerdict {
    Projective,
    GorensteinNonProjective,
    NotGp,
}

/// A relation-cycle `p_1, ..., p_n` where every consecutive pair (cyclically)
/// is perfect. Stored rotation-canonically: the listed rotation starts at the
/// canonically smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCycle {
    pub paths: Vec<Path>,
}

impl RelationCycle {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    fn canonical(mut paths: Vec<Path>) -> Self {
        let min = paths
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        paths.rotate_left(min);
        RelationCycle { paths }
    }
}

/// Module data for `Ap`: the top vertex `t(p)` and the per-vertex counts of
/// basis paths of the form `q'p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub top_vertex: VertexId,
    pub dim_vector: Vec<usize>,
}

/// One classified indecomposable non-projective Gorenstein-projective module.
///
/// `syzygy_of` is the cycle neighbour `q` with `Omega(Aq) = A perfect_path`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationEntry {
    pub perfect_path: Path,
    pub cycle: RelationCycle,
    pub module: ModuleDescriptor,
    pub syzygy_of: Path,
}

/// The full classification output: one entry per perfect path, in canonical
/// order, plus the distinct relation-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GpClassification {
    pub entries: Vec<ClassificationEntry>,
    pub cycles: Vec<RelationCycle>,
}

impl GpClassification {
    pub fn perfect_paths(&self) -> Vec<&Path> {
        self.entries.iter().map(|e| &e.perfect_path).collect()
    }
}

/// Shape summary of the stable category of Gorenstein-projectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableShape {
    /// lengths of all relation-cycles, sorted (rotation-identified)
    pub cycle_lengths: Vec<usize>,
    /// true iff there is no overlap; then the stable category is the
    /// product of the cyclic-shift categories of the listed lengths
    pub semisimple: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapKind {
    /// a single perfect path overlapping itself
    SelfOverlap,
    /// two distinct perfect paths sharing a factor
    CrossOverlap,
}

/// Two perfect paths `p = p'x`, `q = xq'` sharing the nontrivial factor `x`
/// with the glued path `p'xq'` nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub p: Path,
    pub q: Path,
    pub witness: Path,
}

/// Checks the perfect-pair conditions: `pq` lies in `F`, `R(p) = {q}` and
/// `L(q) = {p}`. Requires both paths nonzero, nontrivial and composable.
pub fn is_perfect_pair(algebra: &MonomialAlgebra, p: &Path, q: &Path) -> Result<bool> {
    let quiver = algebra.quiver();
    // the annihilator calls validate nonzero/nontrivial
    let r_of_p = algebra.right_min_annihilators(p)?;
    let l_of_q = algebra.left_min_annihilators(q)?;
    if p.source() != q.target(quiver) {
        return Err(Error::NotComposable {
            left_target: quiver.vertex_name(p.source()).to_string(),
            right_source: quiver.vertex_name(q.target(quiver)).to_string(),
        });
    }
    let pq = concat(quiver, p, q)?;
    Ok(algebra.relations().contains(&pq)
        && r_of_p.as_slice() == std::slice::from_ref(q)
        && l_of_q.as_slice() == std::slice::from_ref(p))
}

/// The unique `q` making `(p, q)` a perfect pair, if any.
pub fn successor(algebra: &MonomialAlgebra, p: &Path) -> Result<Option<Path>> {
    let r = algebra.right_min_annihilators(p)?;
    if let [q] = r.as_slice() {
        if p.source() == q.target(algebra.quiver()) && is_perfect_pair(algebra, p, q)? {
            return Ok(Some(q.clone()));
        }
    }
    Ok(None)
}

/// Whether iterating `successor` from `p` returns to `p`.
pub fn is_perfect_path(algebra: &MonomialAlgebra, p: &Path) -> Result<bool> {
    if p.is_trivial() || !algebra.is_nonzero(p)? {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    let mut current = p.clone();
    loop {
        match successor(algebra, &current)? {
            None => return Ok(false),
            Some(next) => {
                if next == *p {
                    return Ok(true);
                }
                if !seen.insert(next.clone()) {
                    return Ok(false);
                }
                current = next;
            }
        }
    }
}

/// Candidate perfect paths: every perfect path is a proper factor of an
/// element of `F` (as left or right part of its defining relation), so the
/// proper traversal prefixes and suffixes of `F` exhaust the candidates.
fn candidates(algebra: &MonomialAlgebra) -> BTreeSet<Path> {
    let quiver = algebra.quiver();
    let mut out = BTreeSet::new();
    for f in algebra.relations() {
        for n in 1..f.len() {
            out.insert(f.traversal_prefix(quiver, n));
            out.insert(f.traversal_suffix(quiver, n));
        }
    }
    out
}

/// Computes the full classification: all perfect paths with their
/// relation-cycles and module descriptors.
pub fn perfect_paths(algebra: &MonomialAlgebra) -> Result<GpClassification> {
    let mut perfect: BTreeSet<Path> = BTreeSet::new();
    for p in candidates(algebra) {
        if is_perfect_path(algebra, &p)? {
            perfect.insert(p);
        }
    }

    // group into successor cycles
    let mut cycles: Vec<RelationCycle> = Vec::new();
    let mut assigned: HashSet<Path> = HashSet::new();
    for p in &perfect {
        if assigned.contains(p) {
            continue;
        }
        let mut cycle = vec![p.clone()];
        let mut current = p.clone();
        loop {
            let next = successor(algebra, &current)?
                .expect("perfect path has a successor");
            if next == *p {
                break;
            }
            cycle.push(next.clone());
            current = next;
        }
        for member in &cycle {
            assigned.insert(member.clone());
        }
        cycles.push(RelationCycle::canonical(cycle));
    }
    cycles.sort_by(|a, b| a.paths.cmp(&b.paths));

    let mut entries = Vec::new();
    for p in &perfect {
        let cycle = cycles
            .iter()
            .find(|c| c.paths.contains(p))
            .expect("every perfect path lies on a cycle")
            .clone();
        let syzygy_of = successor(algebra, p)?.expect("perfect path has a successor");
        entries.push(ClassificationEntry {
            perfect_path: p.clone(),
            cycle,
            module: module_descriptor(algebra, p),
            syzygy_of,
        });
    }
    Ok(GpClassification { entries, cycles })
}

/// The descriptor of `Ap`: basis paths of the form `q'p` counted per
/// terminating vertex.
pub fn module_descriptor(algebra: &MonomialAlgebra, p: &Path) -> ModuleDescriptor {
    let quiver = algebra.quiver();
    let mut dim_vector = vec![0usize; quiver.vertex_count()];
    for x in algebra.basis_from(p.source()) {
        if x.starts_with(p) {
            dim_vector[x.target(quiver)] += 1;
        }
    }
    ModuleDescriptor {
        top_vertex: p.target(quiver),
        dim_vector,
    }
}

/// Verdict for the cyclic module `Ap`.
pub fn is_gp_cyclic(algebra: &MonomialAlgebra, p: &Path) -> Result<GpVerdict> {
    if !algebra.is_nonzero(p)? {
        return Err(Error::ZeroPath {
            path: p.display(algebra.quiver()),
        });
    }
    if p.is_trivial() {
        return Ok(GpVerdict::Projective);
    }
    let l = algebra.left_min_annihilators(p)?;
    match l.as_slice() {
        [] => Ok(GpVerdict::Projective),
        [q] if is_perfect_path(algebra, q)? => Ok(GpVerdict::GorensteinNonProjective),
        _ => Ok(GpVerdict::NotGp),
    }
}

/// `Omega(Ap)` as a multiset of paths: exactly `L(p)`; empty means `Ap` is
/// projective.
pub fn syzygy(algebra: &MonomialAlgebra, p: &Path) -> Result<Vec<Path>> {
    algebra.left_min_annihilators(p)
}

/// Dimension of the stable Hom space from `Aa` to `Ab` by basis-path
/// counting: `|aA and Ab| - |aAb|`. Only valid for perfect `a`.
pub fn stable_hom_dim(algebra: &MonomialAlgebra, a: &Path, b: &Path) -> Result<usize> {
    if !is_perfect_path(algebra, a)? {
        return Err(Error::NotApplicable {
            path: a.display(algebra.quiver()),
        });
    }
    if !algebra.is_nonzero(b)? {
        return Err(Error::ZeroPath {
            path: b.display(algebra.quiver()),
        });
    }
    let quiver = algebra.quiver();
    let mut intersection = 0usize;
    let mut product = 0usize;
    for x in algebra.basis() {
        // x in aA: x = a x' (a traversed first ... no: a applied last),
        // i.e. a is a traversal suffix; x in Ab: b is a traversal prefix
        if x.ends_with(quiver, a) && x.starts_with(b) {
            intersection += 1;
            if x.len() >= a.len() + b.len() {
                product += 1;
            }
        }
    }
    Ok(intersection - product)
}

/// All overlaps among perfect paths.
pub fn find_overlaps(algebra: &MonomialAlgebra) -> Result<Vec<Overlap>> {
    let quiver = algebra.quiver();
    let classification = perfect_paths(algebra)?;
    let perfect: Vec<&Path> = classification.perfect_paths();
    let mut out = Vec::new();
    for &p in &perfect {
        for &q in &perfect {
            let max_x = p.len().min(q.len());
            for xlen in 1..=max_x {
                // p = p'x (x traversed first), q = xq' (x traversed last)
                let x = p.traversal_prefix(quiver, xlen);
                if !q.ends_with(quiver, &x) {
                    continue;
                }
                let kind = if p == q {
                    // O1 needs p' and q' nontrivial
                    if xlen == p.len() {
                        continue;
                    }
                    OverlapKind::SelfOverlap
                } else {
                    OverlapKind::CrossOverlap
                };
                // glued path p'xq' in traversal order: q then the rest of p
                let mut glued = q.arrows().to_vec();
                glued.extend_from_slice(&p.arrows()[xlen..]);
                let glued = Path::from_arrows(quiver, glued)?;
                if algebra.is_nonzero(&glued)? {
                    out.push(Overlap {
                        kind,
                        p: p.clone(),
                        q: q.clone(),
                        witness: x,
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.p, &a.q, &a.witness).cmp(&(&b.p, &b.q, &b.witness)));
    Ok(out)
}

/// Relation-cycle lengths plus the no-overlap (semisimplicity) flag.
pub fn stable_category_shape(algebra: &MonomialAlgebra) -> Result<StableShape> {
    let classification = perfect_paths(algebra)?;
    let mut cycle_lengths: Vec<usize> =
        classification.cycles.iter().map(|c| c.len()).collect();
    cycle_lengths.sort_unstable();
    let semisimple = find_overlaps(algebra)?.is_empty();
    Ok(StableShape {
        cycle_lengths,
        semisimple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::*;
    use crate::quiver::Quiver;

    fn path(a: &MonomialAlgebra, names: &[&str]) -> Path {
        Path::from_names(a.quiver(), names).unwrap()
    }

    #[test]
    fn three_vertex_perfect_pairs() {
        let a = three_vertex_example();
        let alpha = path(&a, &["a"]);
        let beta = path(&a, &["b"]);
        assert!(is_perfect_pair(&a, &beta, &alpha).unwrap());
        assert!(is_perfect_pair(&a, &alpha, &beta).unwrap());

        // (beta gamma, q) is never perfect: no relation ends at vertex 3
        let bg = path(&a, &["g", "b"]);
        let gamma = path(&a, &["g"]);
        for q in a.basis() {
            if q.is_trivial() || q.target(a.quiver()) != bg.source() {
                continue;
            }
            assert!(!is_perfect_pair(&a, &bg, q).unwrap());
        }
        let _ = gamma;
    }

    #[test]
    fn z2_perfect_pairs() {
        let a = z2_babaa();
        let ba = path(&a, &["a", "b"]);
        let b = path(&a, &["b"]);
        let aba = path(&a, &["a", "b", "a"]);
        let bab = path(&a, &["b", "a", "b"]);
        let alpha = path(&a, &["a"]);
        assert!(is_perfect_pair(&a, &ba, &ba).unwrap());
        assert!(is_perfect_pair(&a, &b, &aba).unwrap());
        assert!(is_perfect_pair(&a, &bab, &alpha).unwrap());
        // and nothing else among composable nontrivial pairs
        let mut count = 0;
        for p in a.basis() {
            for q in a.basis() {
                if p.is_trivial() || q.is_trivial() || p.source() != q.target(a.quiver()) {
                    continue;
                }
                if is_perfect_pair(&a, p, q).unwrap() {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn successor_examples() {
        let z2 = z2_babaa();
        let ba = path(&z2, &["a", "b"]);
        assert_eq!(successor(&z2, &ba).unwrap(), Some(ba.clone()));

        let a = three_vertex_example();
        let alpha = path(&a, &["a"]);
        let beta = path(&a, &["b"]);
        let gamma = path(&a, &["g"]);
        assert_eq!(successor(&a, &alpha).unwrap(), Some(beta.clone()));
        assert_eq!(successor(&a, &beta).unwrap(), Some(alpha.clone()));
        assert_eq!(successor(&a, &gamma).unwrap(), None);
    }

    #[test]
    fn three_vertex_classification() {
        let a = three_vertex_example();
        let cls = perfect_paths(&a).unwrap();
        let alpha = path(&a, &["a"]);
        let beta = path(&a, &["b"]);
        assert_eq!(cls.perfect_paths(), vec![&alpha, &beta]);
        // A alpha is the simple at vertex 2, A beta the simple at vertex 1
        let e_alpha = &cls.entries[0];
        assert_eq!(e_alpha.module.dim_vector, vec![0, 1, 0]);
        assert_eq!(e_alpha.module.top_vertex, a.quiver().vertex_by_name("2").unwrap());
        let e_beta = &cls.entries[1];
        assert_eq!(e_beta.module.dim_vector, vec![1, 0, 0]);
        assert_eq!(cls.cycles.len(), 1);
        assert_eq!(cls.cycles[0].len(), 2);
    }

    #[test]
    fn z2_classification() {
        let a = z2_babaa();
        let cls = perfect_paths(&a).unwrap();
        let ba = path(&a, &["a", "b"]);
        assert_eq!(cls.perfect_paths(), vec![&ba]);
        assert_eq!(cls.cycles.len(), 1);
        assert_eq!(cls.cycles[0].len(), 1);
        assert_eq!(cls.entries[0].syzygy_of, ba);
        // A ba has basis {ba, aba}: one dimension at each vertex
        assert_eq!(cls.entries[0].module.dim_vector, vec![1, 1]);
    }

    #[test]
    fn truncated_non_cycle_is_cm_free() {
        // one vertex, two loops, J^2: connected, no sources or sinks, not a
        // basic cycle
        let quiver = Quiver::new(
            vec!["1".into()],
            vec![
                ("x".into(), "1".into(), "1".into()),
                ("y".into(), "1".into(), "1".into()),
            ],
        )
        .unwrap();
        let a = truncated(quiver, 2).unwrap();
        let cls = perfect_paths(&a).unwrap();
        assert!(cls.entries.is_empty());
    }

    #[test]
    fn gp_cyclic_examples() {
        let a = three_vertex_example();
        let bg = path(&a, &["g", "b"]);
        assert_eq!(
            is_gp_cyclic(&a, &bg).unwrap(),
            GpVerdict::GorensteinNonProjective
        );
        assert!(!is_perfect_path(&a, &bg).unwrap());
        let gamma = path(&a, &["g"]);
        assert_eq!(is_gp_cyclic(&a, &gamma).unwrap(), GpVerdict::Projective);
        assert_eq!(
            is_gp_cyclic(&a, &Path::trivial(0)).unwrap(),
            GpVerdict::Projective
        );
    }

    #[test]
    fn syzygy_examples() {
        let a = three_vertex_example();
        let alpha = path(&a, &["a"]);
        let beta = path(&a, &["b"]);
        let gamma = path(&a, &["g"]);
        assert_eq!(syzygy(&a, &alpha).unwrap(), vec![beta]);
        assert_eq!(syzygy(&a, &gamma).unwrap(), vec![]);

        let z2 = z2_babaa();
        let ba = path(&z2, &["a", "b"]);
        assert_eq!(syzygy(&z2, &ba).unwrap(), vec![ba]);
    }

    #[test]
    fn stable_hom_examples() {
        let z2 = z2_babaa();
        let ba = path(&z2, &["a", "b"]);
        assert_eq!(stable_hom_dim(&z2, &ba, &ba).unwrap(), 1);

        let g = gentle_like_example();
        let alpha = path(&g, &["a"]);
        let beta = path(&g, &["b"]);
        assert_eq!(stable_hom_dim(&g, &alpha, &beta).unwrap(), 0);
        assert_eq!(stable_hom_dim(&g, &beta, &alpha).unwrap(), 0);
        assert_eq!(stable_hom_dim(&g, &alpha, &alpha).unwrap(), 1);
        assert_eq!(stable_hom_dim(&g, &beta, &beta).unwrap(), 1);

        // non-perfect first argument refused
        let gamma = path(&g, &["g"]);
        assert!(matches!(
            stable_hom_dim(&g, &gamma, &alpha),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn overlap_examples() {
        assert!(find_overlaps(&z2_babaa()).unwrap().is_empty());
        assert!(find_overlaps(&gentle_like_example()).unwrap().is_empty());
        assert!(find_overlaps(&three_vertex_example()).unwrap().is_empty());
    }

    #[test]
    fn stable_shape_examples() {
        assert_eq!(
            stable_category_shape(&z2_babaa()).unwrap(),
            StableShape {
                cycle_lengths: vec![1],
                semisimple: true
            }
        );
        assert_eq!(
            stable_category_shape(&gentle_like_example()).unwrap(),
            StableShape {
                cycle_lengths: vec![2],
                semisimple: true
            }
        );
        // CM-free: empty product
        let quiver = Quiver::new(
            vec!["1".into()],
            vec![
                ("x".into(), "1".into(), "1".into()),
                ("y".into(), "1".into(), "1".into()),
            ],
        )
        .unwrap();
        let free = truncated(quiver, 2).unwrap();
        assert_eq!(
            stable_category_shape(&free).unwrap(),
            StableShape {
                cycle_lengths: vec![],
                semisimple: true
            }
        );
    }
}
