//! Small built-in algebras used throughout the test suites and handy for
//! experimenting from the library.

use crate::algebra::MonomialAlgebra;
use crate::error::Result;
use crate::quiver::{Path, Quiver};

/// The two-vertex basic cycle: `a: 1 -> 2`, `b: 2 -> 1`.
pub fn z2_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "1".into()),
        ],
    )
    .unwrap()
}

/// `kZ_2` modulo the single length-4 relation `a b a b` (traversal order),
/// i.e. the oriented 4-cycle at vertex 1.
pub fn z2_babaa() -> MonomialAlgebra {
    let quiver = z2_quiver();
    let rel = Path::from_names(&quiver, &["a", "b", "a", "b"]).unwrap();
    MonomialAlgebra::from_parts(quiver, vec![rel]).unwrap()
}

/// Three vertices with `a: 1 -> 2`, `b: 2 -> 1`, `g: 3 -> 2` and relations
/// `a b` and `b a` (traversal order).
pub fn three_vertex_example() -> MonomialAlgebra {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "1".into()),
            ("g".into(), "3".into(), "2".into()),
        ],
    )
    .unwrap();
    let ab = Path::from_names(&quiver, &["a", "b"]).unwrap();
    let ba = Path::from_names(&quiver, &["b", "a"]).unwrap();
    MonomialAlgebra::from_parts(quiver, vec![ab, ba]).unwrap()
}

/// The quiver `1 <-> 2 <-> 3` (`a: 1->2`, `b: 2->1`, `g: 2->3`, `d: 3->2`)
/// with quadratic relations `a b`, `b a`, `g d` (traversal order).
pub fn gentle_like_example() -> MonomialAlgebra {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "1".into()),
            ("g".into(), "2".into(), "3".into()),
            ("d".into(), "3".into(), "2".into()),
        ],
    )
    .unwrap();
    let ab = Path::from_names(&quiver, &["a", "b"]).unwrap();
    let ba = Path::from_names(&quiver, &["b", "a"]).unwrap();
    let dg = Path::from_names(&quiver, &["g", "d"]).unwrap();
    MonomialAlgebra::from_parts(quiver, vec![ab, ba, dg]).unwrap()
}

/// The basic `n`-cycle quiver with vertices `1..n` and arrows
/// `a1: 1 -> 2`, ..., `an: n -> 1`.
pub fn basic_cycle_quiver(n: usize) -> Quiver {
    assert!(n >= 1);
    let vertices: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| {
            let j = if i == n { 1 } else { i + 1 };
            (format!("a{i}"), format!("{i}"), format!("{j}"))
        })
        .collect();
    Quiver::new(vertices, arrows).unwrap()
}

/// Truncation of an arbitrary quiver: relations are all paths of length `d`.
pub fn truncated(quiver: Quiver, d: usize) -> Result<MonomialAlgebra> {
    assert!(d >= 2);
    let mut relations = Vec::new();
    let mut stack: Vec<Vec<usize>> = quiver.arrows().map(|a| vec![a]).collect();
    while let Some(w) = stack.pop() {
        if w.len() == d {
            relations.push(Path::from_arrows(&quiver, w).unwrap());
            continue;
        }
        let last = quiver.arrow(*w.last().unwrap()).target;
        for a in quiver.arrows_from(last) {
            let mut w2 = w.clone();
            w2.push(a);
            stack.push(w2);
        }
    }
    MonomialAlgebra::from_parts(quiver, relations)
}

/// `kZ_n / J^d`.
pub fn truncated_cycle(n: usize, d: usize) -> MonomialAlgebra {
    truncated(basic_cycle_quiver(n), d).unwrap()
}
