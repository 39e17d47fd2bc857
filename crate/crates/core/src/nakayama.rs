//! Connected Nakayama monomial algebras: the quiver is a basic oriented
//! cycle. Everything here is driven by the Kupisch series `c_i = dim P_i`
//! and the black-vertex combinatorics.

use std::collections::BTreeSet;

use crate::algebra::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::presets::basic_cycle_quiver;
use crate::quiver::{Path, VertexId};

/// Combinatorial data of a connected Nakayama monomial algebra. Positions
/// are 1-based and follow the cycle starting from the vertex with the
/// lexicographically smallest name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakayamaData {
    pub n: usize,
    /// `labels[i]` is the vertex sitting at position `i + 1`
    pub labels: Vec<VertexId>,
    /// Kupisch series: `c[i] = dim P` at position `i + 1`
    pub c: Vec<usize>,
    /// `theta[i]` is the 1-based position `[i + 1 + c_i]`
    pub theta: Vec<usize>,
    /// positions `i` with `c_i <= c_{[i+1]}`
    pub black: BTreeSet<usize>,
    /// positions lying in the eventual image of `theta`
    pub theta_cyclic: BTreeSet<usize>,
    /// theta-cyclic positions whose whole forward orbit is black
    pub theta_cyclically_black: BTreeSet<usize>,
}

impl NakayamaData {
    /// 1-based position of a vertex on the cycle.
    pub fn position(&self, v: VertexId) -> usize {
        self.labels.iter().position(|&w| w == v).unwrap() + 1
    }

    pub fn apply_theta(&self, pos: usize) -> usize {
        self.theta[pos - 1]
    }
}

fn wrap(n: usize, m: usize) -> usize {
    (m - 1) % n + 1
}

/// Checks that the quiver of `algebra` is a single basic cycle and returns
/// the vertices in cycle order starting from the smallest vertex name.
fn cycle_order(algebra: &MonomialAlgebra) -> Result<Vec<VertexId>> {
    let quiver = algebra.quiver();
    let n = quiver.vertex_count();
    for v in quiver.vertices() {
        let out = quiver.arrows_from(v).len();
        let into = quiver.arrows_into(v).len();
        if out != 1 || into != 1 {
            return Err(Error::NotNakayama {
                reason: format!(
                    "vertex `{}` has out-degree {out} and in-degree {into}",
                    quiver.vertex_name(v)
                ),
            });
        }
    }
    // vertices are sorted by name, so index 0 has the smallest name
    let mut labels = Vec::with_capacity(n);
    let mut v = 0;
    loop {
        labels.push(v);
        v = quiver.arrow(quiver.arrows_from(v)[0]).target;
        if v == 0 {
            break;
        }
    }
    if labels.len() != n {
        return Err(Error::NotNakayama {
            reason: "quiver is not connected".into(),
        });
    }
    Ok(labels)
}

pub fn nakayama_data(algebra: &MonomialAlgebra) -> Result<NakayamaData> {
    let labels = cycle_order(algebra)?;
    let n = labels.len();
    let c: Vec<usize> = labels
        .iter()
        .map(|&v| algebra.basis_from(v).count())
        .collect();
    debug_assert!(c.iter().all(|&ci| ci >= 2));
    debug_assert!((0..n).all(|i| c[i] - 1 <= c[(i + 1) % n]));

    let theta: Vec<usize> = (1..=n).map(|i| wrap(n, i + c[i - 1])).collect();
    let black: BTreeSet<usize> = (1..=n).filter(|&i| c[i - 1] <= c[i % n]).collect();

    // eventual image of theta: iterate until the image set stabilizes
    let mut cyc: BTreeSet<usize> = (1..=n).collect();
    loop {
        let next: BTreeSet<usize> = cyc.iter().map(|&i| theta[i - 1]).collect();
        if next == cyc {
            break;
        }
        cyc = next;
    }

    let mut tcb = BTreeSet::new();
    for &start in &cyc {
        let mut i = start;
        let mut seen = BTreeSet::new();
        let all_black = loop {
            if !black.contains(&i) {
                break false;
            }
            if !seen.insert(i) {
                break true;
            }
            i = theta[i - 1];
        };
        if all_black {
            tcb.insert(start);
        }
    }

    Ok(NakayamaData {
        n,
        labels,
        c,
        theta,
        black,
        theta_cyclic: cyc,
        theta_cyclically_black: tcb,
    })
}

/// The perfect paths of a connected Nakayama monomial algebra: the nonzero
/// nontrivial paths whose source and target both sit at theta-cyclically
/// black positions. Returned in canonical order.
pub fn perfect_paths_nakayama(algebra: &MonomialAlgebra) -> Result<Vec<Path>> {
    let data = nakayama_data(algebra)?;
    let quiver = algebra.quiver();
    Ok(algebra
        .basis()
        .iter()
        .filter(|p| {
            !p.is_trivial()
                && data
                    .theta_cyclically_black
                    .contains(&data.position(p.source()))
                && data
                    .theta_cyclically_black
                    .contains(&data.position(p.target(quiver)))
        })
        .cloned()
        .collect())
}

/// Decides whether the cyclic module `Ap` is Gorenstein-projective by
/// looking only at the tops of `Ap` and of its syzygy.
///
/// Errors with `ProjectivePath` when `Ap` is projective, i.e. nothing
/// annihilates `p` from the left.
pub fn gp_by_tops(algebra: &MonomialAlgebra, p: &Path) -> Result<bool> {
    let data = nakayama_data(algebra)?;
    let quiver = algebra.quiver();
    if p.is_trivial() {
        return Err(Error::TrivialPath {
            path: p.display(quiver),
        });
    }
    if !algebra.is_nonzero(p)? {
        return Err(Error::ZeroPath {
            path: p.display(quiver),
        });
    }
    let ann = algebra.left_min_annihilators(p)?;
    debug_assert!(ann.len() <= 1);
    let q = ann.first().ok_or_else(|| Error::ProjectivePath {
        path: p.display(quiver),
    })?;
    let tcb = &data.theta_cyclically_black;
    Ok(tcb.contains(&data.position(p.target(quiver)))
        && tcb.contains(&data.position(q.target(quiver))))
}

/// Builds the connected Nakayama monomial algebra with the given Kupisch
/// series over the basic cycle `1 -> 2 -> ... -> n -> 1`.
pub fn algebra_from_kupisch(c: &[usize]) -> Result<MonomialAlgebra> {
    let n = c.len();
    if n == 0 {
        return Err(Error::EmptyQuiver);
    }
    for (i, &ci) in c.iter().enumerate() {
        if ci < 2 {
            return Err(Error::InvalidKupisch {
                index: i + 1,
                reason: format!("c_{} = {ci}, but every value must be at least 2", i + 1),
            });
        }
        let next = c[(i + 1) % n];
        if next + 1 < ci {
            return Err(Error::InvalidKupisch {
                index: i + 1,
                reason: format!(
                    "c_{} = {} but c_{} = {}; the series must satisfy c_[i+1] >= c_i - 1",
                    i + 1,
                    ci,
                    (i % n) + 2,
                    next
                ),
            });
        }
    }
    let quiver = basic_cycle_quiver(n);
    // positions on this quiver coincide with vertex numbers by construction
    let pos_vertex: Vec<VertexId> = {
        let mut order = Vec::with_capacity(n);
        let mut v = quiver.vertex_by_name("1").unwrap();
        for _ in 0..n {
            order.push(v);
            v = quiver.arrow(quiver.arrows_from(v)[0]).target;
        }
        order
    };
    let mut relations = Vec::new();
    for i in 1..=n {
        if c[i - 1] <= c[i % n] {
            // black position: the length-c_i path from position i is a
            // minimal relation
            let mut arrows = Vec::with_capacity(c[i - 1]);
            let mut v = pos_vertex[i - 1];
            for _ in 0..c[i - 1] {
                let a = quiver.arrows_from(v)[0];
                arrows.push(a);
                v = quiver.arrow(a).target;
            }
            relations.push(Path::from_arrows(&quiver, arrows).unwrap());
        }
    }
    MonomialAlgebra::from_parts(quiver, relations)
}
