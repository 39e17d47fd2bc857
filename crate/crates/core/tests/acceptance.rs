//! Acceptance gate: one test (and one printed pass line) per criterion.
//! Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;

use perfpath_core::algebra::MonomialAlgebra;
use perfpath_core::classify::{self, GpVerdict};
use perfpath_core::nakayama;
use perfpath_core::oracle;
use perfpath_core::presets;
use perfpath_core::quadratic::{self, ComponentKind};
use perfpath_core::quiver::{Path, Quiver};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn path(a: &MonomialAlgebra, names: &[&str]) -> Path {
    Path::from_names(a.quiver(), names).unwrap()
}

fn display_set(a: &MonomialAlgebra, paths: &[Path]) -> Vec<String> {
    paths.iter().map(|p| p.display(a.quiver())).collect()
}

#[test]
fn criterion_1_three_vertex_example() {
    let a = presets::three_vertex_example();
    let cls = classify::perfect_paths(&a).unwrap();
    let names: Vec<String> = cls
        .entries
        .iter()
        .map(|e| e.perfect_path.display(a.quiver()))
        .collect();
    assert_eq!(names, vec!["a", "b"]);
    // A alpha is the simple at 2, A beta the simple at 1
    assert_eq!(cls.entries[0].module.dim_vector, vec![0, 1, 0]);
    assert_eq!(cls.entries[1].module.dim_vector, vec![1, 0, 0]);

    let bg = path(&a, &["g", "b"]);
    assert_eq!(
        classify::is_gp_cyclic(&a, &bg).unwrap(),
        GpVerdict::GorensteinNonProjective
    );
    assert!(!names.contains(&bg.display(a.quiver())));
    println!("criterion 1 (three-vertex example): pass");
}

#[test]
fn criterion_2_quadratic_worked_example() {
    let a = presets::gentle_like_example();
    let rq = quadratic::relation_quiver(&a).unwrap();
    let kinds: Vec<(Vec<&str>, ComponentKind)> = rq
        .components
        .iter()
        .map(|c| {
            (
                c.arrows
                    .iter()
                    .map(|&x| a.quiver().arrow_name(x))
                    .collect(),
                c.kind,
            )
        })
        .collect();
    assert_eq!(
        kinds,
        vec![
            (vec!["a", "b"], ComponentKind::PerfectCycle),
            (vec!["d", "g"], ComponentKind::Acyclic),
        ]
    );
    let g = quadratic::gorenstein_report(&a).unwrap();
    assert!(g.gorenstein);
    assert_eq!(g.gorenstein_bound, Some(3));
    assert!(!g.cm_free);

    let shape = classify::stable_category_shape(&a).unwrap();
    assert_eq!(shape.cycle_lengths, vec![2]);
    assert!(shape.semisimple);
    println!("criterion 2 (quadratic worked example): pass");
}

#[test]
fn criterion_3_z2_four_cycle() {
    let a = presets::z2_babaa();
    let quiver = a.quiver();

    let mut pairs = Vec::new();
    for p in a.basis() {
        if p.is_trivial() {
            continue;
        }
        if let Some(q) = classify::successor(&a, p).unwrap() {
            pairs.push((p.display(quiver), q.display(quiver)));
        }
    }
    // composition notation: (beta, alpha beta alpha), (beta alpha, beta
    // alpha), (beta alpha beta, alpha)
    assert_eq!(
        pairs,
        vec![
            ("b".to_string(), "a b a".to_string()),
            ("a b".to_string(), "a b".to_string()),
            ("b a b".to_string(), "a".to_string()),
        ]
    );

    let cls = classify::perfect_paths(&a).unwrap();
    assert_eq!(cls.entries.len(), 1);
    assert_eq!(cls.entries[0].perfect_path.display(quiver), "a b");
    assert_eq!(cls.entries[0].cycle.len(), 1);

    assert!(classify::find_overlaps(&a).unwrap().is_empty());
    let shape = classify::stable_category_shape(&a).unwrap();
    assert_eq!(shape.cycle_lengths, vec![1]);
    assert!(shape.semisimple);

    let ba = path(&a, &["a", "b"]);
    assert_eq!(classify::stable_hom_dim(&a, &ba, &ba).unwrap(), 1);
    println!("criterion 3 (Z_2 four-cycle): pass");
}

/// Random connected quiver with no sources or sinks that is not a basic
/// cycle: a cycle cover plus at least one extra arrow, resampled until
/// weakly connected.
fn random_no_source_sink_quiver(rng: &mut ChaCha8Rng) -> Quiver {
    loop {
        let nv = rng.gen_range(2..=4);
        let extra = rng.gen_range(1..=2);
        let mut perm: Vec<usize> = (0..nv).collect();
        perm.shuffle(rng);
        let mut ends: Vec<(usize, usize)> = perm.iter().copied().enumerate().collect();
        for _ in 0..extra {
            ends.push((rng.gen_range(0..nv), rng.gen_range(0..nv)));
        }
        // weak connectivity
        let mut reach = vec![false; nv];
        reach[0] = true;
        for _ in 0..nv {
            for &(s, t) in &ends {
                if reach[s] || reach[t] {
                    reach[s] = true;
                    reach[t] = true;
                }
            }
        }
        if !reach.iter().all(|&r| r) {
            continue;
        }
        let vertices: Vec<String> = (1..=nv).map(|i| format!("{i}")).collect();
        let arrows: Vec<(String, String, String)> = ends
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| (format!("a{}", i + 1), format!("{}", s + 1), format!("{}", t + 1)))
            .collect();
        return Quiver::new(vertices, arrows).unwrap();
    }
}

#[test]
fn criterion_4_truncated_algebras() {
    // non-basic-cycle truncations are CM-free
    let mut rng = ChaCha8Rng::seed_from_u64(20240817);
    for _ in 0..20 {
        let quiver = random_no_source_sink_quiver(&mut rng);
        for d in [2, 3, 4] {
            let a = presets::truncated(quiver.clone(), d).unwrap();
            let cls = classify::perfect_paths(&a).unwrap();
            assert!(
                cls.entries.is_empty(),
                "expected CM-free truncation, got {:?} (d = {d})",
                display_set(&a, &cls.entries.iter().map(|e| e.perfect_path.clone()).collect::<Vec<_>>()),
            );
        }
    }

    // basic cycles: classifier, oracle and the direct length count agree;
    // the perfect paths are exactly those of length 1..=d-1
    for n in 1..=4 {
        for d in 2..=5 {
            let a = presets::truncated_cycle(n, d);
            let cls: BTreeSet<Path> = classify::perfect_paths(&a)
                .unwrap()
                .entries
                .into_iter()
                .map(|e| e.perfect_path)
                .collect();
            let expected: BTreeSet<Path> = a
                .basis()
                .iter()
                .filter(|p| (1..=d - 1).contains(&p.len()))
                .cloned()
                .collect();
            assert_eq!(cls, expected, "Z_{n}/J^{d}");
            for p in a.basis() {
                if p.is_trivial() {
                    continue;
                }
                let fast = classify::is_gp_cyclic(&a, p).unwrap();
                let slow = oracle::gp_oracle(&a, p).unwrap();
                assert_eq!(fast, slow, "Z_{n}/J^{d} path {}", p.display(a.quiver()));
            }
        }
    }
    println!("criterion 4 (truncated algebras): pass");
}

fn kupisch_valid(c: &[usize]) -> bool {
    let n = c.len();
    c.iter().all(|&ci| ci >= 2) && (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i])
}

#[test]
fn criterion_5_nakayama_equivalence() {
    let mut series: Vec<Vec<usize>> = Vec::new();
    // exhaustive for n <= 4
    for n in 1..=4usize {
        let mut c = vec![2usize; n];
        loop {
            if kupisch_valid(&c) {
                series.push(c.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                c[i] += 1;
                if c[i] <= 8 {
                    break;
                }
                c[i] = 2;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    // sampled for n = 5, 6 up to the overall cap
    let cap = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    while series.len() < cap {
        let n = rng.gen_range(5..=6);
        let c: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=8)).collect();
        if kupisch_valid(&c) {
            series.push(c);
        }
    }

    for c in &series {
        let a = nakayama::algebra_from_kupisch(c).unwrap();
        let data = nakayama::nakayama_data(&a).unwrap();
        let quiver = a.quiver();
        let via_theta = nakayama::perfect_paths_nakayama(&a).unwrap();
        let cls = classify::perfect_paths(&a).unwrap();
        let general: Vec<Path> = cls
            .entries
            .iter()
            .map(|e| e.perfect_path.clone())
            .collect();
        assert_eq!(via_theta, general, "series {c:?}");

        // for a perfect pair (p, q): t(p) = theta(s(q))
        for e in &cls.entries {
            let p = &e.perfect_path;
            let q = &e.syzygy_of;
            assert_eq!(
                data.position(p.target(quiver)),
                data.apply_theta(data.position(q.source())),
                "series {c:?}, pair ({}, {})",
                p.display(quiver),
                q.display(quiver)
            );
        }
    }
    assert!(series.len() >= cap);
    println!(
        "criterion 5 (Nakayama equivalence, {} series): pass",
        series.len()
    );
}

#[test]
fn criterion_6_differential_oracle() {
    let corpus = common::corpus();
    let mut paths_checked = 0usize;
    for a in &corpus {
        let regular = oracle::regular_module(a);
        for p in a.basis() {
            if p.is_trivial() {
                continue;
            }
            paths_checked += 1;
            let fast = classify::is_gp_cyclic(a, p).unwrap();
            // gp_oracle verifies the syzygy dimensions of sequence (1) at
            // every step internally
            let slow = oracle::gp_oracle(a, p).unwrap();
            assert_eq!(fast, slow, "path {}", p.display(a.quiver()));
        }
        for e in classify::perfect_paths(a).unwrap().entries {
            let m = oracle::path_module(a, &e.perfect_path).unwrap();
            assert_eq!(
                oracle::ext1_dim(a, &m, &regular),
                0,
                "perfect path {}",
                e.perfect_path.display(a.quiver())
            );
        }
    }
    println!(
        "criterion 6 (differential oracle, {} algebras, {} paths): pass",
        corpus.len(),
        paths_checked
    );
}

#[test]
fn criterion_7_property_suites() {
    for a in common::corpus() {
        common::check_perfect_pair_symmetry(&a);
        common::check_successor_permutation(&a);
        common::check_signature_injectivity(&a);
        common::check_basis_subpath_closure(&a);
        common::check_automaton_matches_naive(&a);
    }
    println!("criterion 7 (property suites): pass");
}

#[test]
fn criterion_8_stable_hom_cross_check() {
    for a in common::corpus() {
        let perfect: Vec<Path> = classify::perfect_paths(&a)
            .unwrap()
            .entries
            .into_iter()
            .map(|e| e.perfect_path)
            .collect();
        let quadratic = a.is_quadratic();
        for x in &perfect {
            let mx = oracle::path_module(&a, x).unwrap();
            for y in &perfect {
                let my = oracle::path_module(&a, y).unwrap();
                let combinatorial = classify::stable_hom_dim(&a, x, y).unwrap();
                let exact = oracle::stable_hom_dim_oracle(&a, &mx, &my);
                assert_eq!(
                    combinatorial,
                    exact,
                    "pair ({}, {})",
                    x.display(a.quiver()),
                    y.display(a.quiver())
                );
                if quadratic {
                    assert_eq!(combinatorial, usize::from(x == y));
                }
            }
        }
    }
    println!("criterion 8 (stable Hom cross-check): pass");
}
