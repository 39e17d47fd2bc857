//! Shared deterministic corpus and property checks for the integration
//! suites.

use std::collections::{BTreeMap, BTreeSet};

use perfpath_core::algebra::{AvoidanceAutomaton, MonomialAlgebra};
use perfpath_core::classify;
use perfpath_core::fuzz::{generate, GenConfig};
use perfpath_core::presets;
use perfpath_core::quiver::{concat, Path};

pub const CORPUS_SIZE: usize = 500;
pub const MAX_DIMENSION: usize = 60;

/// The fixed differential-testing corpus: the worked examples plus 500
/// seeded random algebras of dimension at most 60.
pub fn corpus() -> Vec<MonomialAlgebra> {
    let mut out = vec![
        presets::three_vertex_example(),
        presets::z2_babaa(),
        presets::gentle_like_example(),
        presets::truncated_cycle(3, 3),
        presets::truncated_cycle(2, 4),
    ];
    let mut seed = 0u64;
    let mut found = 0;
    while found < CORPUS_SIZE {
        let cfg = GenConfig {
            seed,
            ..Default::default()
        };
        seed += 1;
        let Ok(p) = generate(&cfg) else {
            continue;
        };
        let a = MonomialAlgebra::build(p).expect("generator output is admissible");
        if a.dimension() > MAX_DIMENSION {
            continue;
        }
        out.push(a);
        found += 1;
    }
    out
}

/// `successor(p) = q` exactly when `R(p) = {q}`, `L(q) = {p}` and `pq` lies
/// in `F`.
pub fn check_perfect_pair_symmetry(a: &MonomialAlgebra) {
    for p in a.basis() {
        if p.is_trivial() {
            continue;
        }
        let succ = classify::successor(a, p).unwrap();
        if let Some(q) = &succ {
            assert_eq!(a.right_min_annihilators(p).unwrap(), vec![q.clone()]);
            assert_eq!(a.left_min_annihilators(q).unwrap(), vec![p.clone()]);
            assert!(classify::is_perfect_pair(a, p, q).unwrap());
        }
        let r = a.right_min_annihilators(p).unwrap();
        if let [q] = r.as_slice() {
            if p.source() == q.target(a.quiver())
                && a.relations().contains(&concat(a.quiver(), p, q).unwrap())
                && a.left_min_annihilators(q).unwrap() == vec![p.clone()]
            {
                assert_eq!(succ, Some(q.clone()));
            }
        }
    }
}

/// The successor map restricts to a permutation of the perfect paths.
pub fn check_successor_permutation(a: &MonomialAlgebra) {
    let perfect: BTreeSet<Path> = classify::perfect_paths(a)
        .unwrap()
        .entries
        .into_iter()
        .map(|e| e.perfect_path)
        .collect();
    let mut image = BTreeSet::new();
    for p in &perfect {
        let q = classify::successor(a, p)
            .unwrap()
            .expect("perfect paths have successors");
        assert!(perfect.contains(&q), "successor leaves the perfect set");
        assert!(image.insert(q), "successor is not injective");
    }
    assert_eq!(image, perfect);
}

/// Distinct perfect paths have distinct signatures `(t(p), L(p))`.
pub fn check_signature_injectivity(a: &MonomialAlgebra) {
    let quiver = a.quiver();
    let mut seen: BTreeMap<(usize, Vec<Path>), Path> = BTreeMap::new();
    for e in classify::perfect_paths(a).unwrap().entries {
        let p = e.perfect_path;
        let sig = (p.target(quiver), a.left_min_annihilators(&p).unwrap());
        if let Some(other) = seen.insert(sig, p.clone()) {
            panic!(
                "perfect paths `{}` and `{}` share a signature",
                other.display(quiver),
                p.display(quiver)
            );
        }
    }
}

/// Every contiguous piece of a basis path is again a basis path.
pub fn check_basis_subpath_closure(a: &MonomialAlgebra) {
    let quiver = a.quiver();
    for p in a.basis() {
        for start in 0..=p.len() {
            for end in start..=p.len() {
                let piece = if start == end {
                    Path::trivial(p.vertex_chain(quiver)[start])
                } else {
                    Path::from_arrows(quiver, p.arrows()[start..end].to_vec()).unwrap()
                };
                assert!(
                    a.is_basis_path(&piece),
                    "subpath `{}` of `{}` missing from the basis",
                    piece.display(quiver),
                    p.display(quiver)
                );
            }
        }
    }
}

/// The avoidance automaton and the naive subpath scan agree on
/// nonzeroness, both on the basis and on one-arrow extensions of it.
pub fn check_automaton_matches_naive(a: &MonomialAlgebra) {
    let quiver = a.quiver();
    let automaton = AvoidanceAutomaton::build(quiver, a.relations());
    for p in a.basis() {
        assert!(automaton.accepts(quiver, p));
        assert!(a.is_nonzero(p).unwrap());
        for arrow in quiver.arrows_from(p.target(quiver)) {
            let mut arrows = p.arrows().to_vec();
            arrows.push(arrow);
            let longer = Path::from_arrows(quiver, arrows).unwrap();
            assert_eq!(
                automaton.accepts(quiver, &longer),
                a.is_nonzero(&longer).unwrap(),
                "extension `{}`",
                longer.display(quiver)
            );
        }
    }
}
