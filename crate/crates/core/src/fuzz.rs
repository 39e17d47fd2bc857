//! Seeded random generation of admissible monomial presentations. The
//! stream is ChaCha8, so corpora are reproducible across platforms.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{MonomialAlgebra, MonomialPresentation};
use crate::error::{Error, Result};
use crate::nakayama::algebra_from_kupisch;
use crate::quiver::{Path, Quiver};

const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relation_length: usize,
    pub max_relations: usize,
    pub quadratic_only: bool,
    pub nakayama_only: bool,
    pub no_sources_sinks: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_vertices: 4,
            max_arrows: 6,
            max_relation_length: 4,
            max_relations: 6,
            quadratic_only: false,
            nakayama_only: false,
            no_sources_sinks: false,
        }
    }
}

impl GenConfig {
    fn validate(&self) {
        assert!(self.max_vertices >= 1);
        assert!(self.max_arrows >= 1);
        assert!(self.max_relation_length >= 2);
        assert!(self.max_relations >= 1);
    }
}

/// Draws presentations until one passes the admissibility check, entirely
/// determined by the seed.
pub fn generate(cfg: &GenConfig) -> Result<MonomialPresentation> {
    cfg.validate();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..RETRY_BUDGET {
        let candidate = if cfg.nakayama_only {
            draw_nakayama(cfg, &mut rng)
        } else {
            draw_general(cfg, &mut rng)
        };
        if let Some(presentation) = candidate {
            if MonomialAlgebra::build(presentation.clone()).is_ok() {
                return Ok(presentation);
            }
        }
    }
    Err(Error::GenerationExhausted {
        attempts: RETRY_BUDGET,
    })
}

fn draw_nakayama(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Option<MonomialPresentation> {
    let n = rng.gen_range(1..=cfg.max_vertices);
    let hi = cfg.max_relation_length.max(2);
    let c: Vec<usize> = if cfg.quadratic_only {
        vec![2; n]
    } else {
        (0..n).map(|_| rng.gen_range(2..=hi)).collect()
    };
    algebra_from_kupisch(&c)
        .ok()
        .map(|a| a.presentation().clone())
}

fn draw_general(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Option<MonomialPresentation> {
    let nv = rng.gen_range(1..=cfg.max_vertices);
    let low = if cfg.no_sources_sinks { nv } else { 1 };
    if low > cfg.max_arrows {
        return None;
    }
    let na = rng.gen_range(low..=cfg.max_arrows);

    let vertices: Vec<String> = (1..=nv).map(|i| format!("{i}")).collect();
    let mut arrows: Vec<(String, String, String)> = Vec::with_capacity(na);
    let mut targets: Vec<usize> = Vec::with_capacity(na);
    if cfg.no_sources_sinks {
        // a random cycle cover gives every vertex in- and out-degree 1
        let mut perm: Vec<usize> = (0..nv).collect();
        perm.shuffle(rng);
        for (i, &t) in perm.iter().enumerate() {
            targets.push(t);
            arrows.push((String::new(), format!("{}", i + 1), format!("{}", t + 1)));
        }
    }
    while arrows.len() < na {
        let s = rng.gen_range(0..nv);
        let t = rng.gen_range(0..nv);
        targets.push(t);
        arrows.push((String::new(), format!("{}", s + 1), format!("{}", t + 1)));
    }
    for (i, a) in arrows.iter_mut().enumerate() {
        a.0 = format!("a{}", i + 1);
    }
    let quiver = Quiver::new(vertices, arrows).ok()?;

    let nrel = rng.gen_range(1..=cfg.max_relations);
    let mut relations = Vec::with_capacity(nrel);
    for _ in 0..nrel {
        let len = if cfg.quadratic_only {
            2
        } else {
            rng.gen_range(2..=cfg.max_relation_length)
        };
        relations.push(random_walk(&quiver, rng, len)?);
    }
    MonomialPresentation::new(quiver, relations).ok()
}

/// A uniformly grown directed walk of exactly `len` arrows, or `None` if it
/// dead-ends.
fn random_walk(quiver: &Quiver, rng: &mut ChaCha8Rng, len: usize) -> Option<Path> {
    let first = rng.gen_range(0..quiver.arrow_count());
    let mut walk = vec![first];
    let mut at = quiver.arrow(first).target;
    while walk.len() < len {
        let options = quiver.arrows_from(at);
        if options.is_empty() {
            return None;
        }
        let a = *options.choose(rng).unwrap();
        walk.push(a);
        at = quiver.arrow(a).target;
    }
    Some(Path::from_arrows(quiver, walk).unwrap())
}
