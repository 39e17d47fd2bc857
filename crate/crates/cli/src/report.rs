//! Report assembly shared by the text and JSON outputs.

use perfpath_core::algebra::MonomialAlgebra;
use perfpath_core::classify::{self, GpClassification, Overlap, OverlapKind, StableShape};
use perfpath_core::nakayama::NakayamaData;
use perfpath_core::quadratic::GorensteinReport;
use perfpath_core::quiver::Path;
use serde::Serialize;

/// How to render paths: the default space-separated traversal order, or the
/// compact arrow-juxtaposition form.
#[derive(Clone, Copy)]
pub enum PathStyle {
    Spaced,
    Juxtaposed,
}

pub fn render_path(algebra: &MonomialAlgebra, p: &Path, style: PathStyle) -> String {
    let quiver = algebra.quiver();
    match style {
        PathStyle::Spaced => p.display(quiver),
        PathStyle::Juxtaposed => {
            if p.is_trivial() {
                p.display(quiver)
            } else {
                p.arrows()
                    .iter()
                    .map(|&a| quiver.arrow_name(a))
                    .collect::<String>()
            }
        }
    }
}

/// The juxtaposed style is only unambiguous when all arrow names are single
/// characters.
pub fn juxtaposition_ok(algebra: &MonomialAlgebra) -> bool {
    let quiver = algebra.quiver();
    quiver
        .arrows()
        .all(|a| quiver.arrow_name(a).chars().count() == 1)
}

#[derive(Serialize)]
pub struct PerfectPathReport {
    pub path: String,
    pub cycle: Vec<String>,
    pub dim_vector: Vec<usize>,
    pub top: String,
}

#[derive(Serialize)]
pub struct OverlapReport {
    pub kind: String,
    pub p: String,
    pub q: String,
    pub witness: String,
}

#[derive(Serialize)]
pub struct StableReport {
    pub cycle_lengths: Vec<usize>,
    pub semisimple: bool,
}

#[derive(Serialize)]
pub struct GorensteinJson {
    pub verdict: String,
    pub bound: Option<usize>,
    pub cm_free: bool,
    pub finite_gldim: bool,
}

#[derive(Serialize)]
pub struct NakayamaJson {
    pub c: Vec<usize>,
    pub theta: Vec<usize>,
    pub black: Vec<usize>,
    pub theta_cyclically_black: Vec<usize>,
}

/// Top-level JSON document; sections are filled per command.
#[derive(Serialize)]
pub struct Report {
    pub dimension: usize,
    pub basis_size: usize,
    #[serde(rename = "relations_F")]
    pub relations_f: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect_paths: Option<Vec<PerfectPathReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overlaps: Option<Vec<OverlapReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<StableReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<GorensteinJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<NakayamaJson>,
}

impl Report {
    pub fn base(algebra: &MonomialAlgebra, style: PathStyle) -> Report {
        Report {
            dimension: algebra.dimension(),
            basis_size: algebra.basis().len(),
            relations_f: algebra
                .relations()
                .iter()
                .map(|r| render_path(algebra, r, style))
                .collect(),
            perfect_paths: None,
            overlaps: None,
            stable: None,
            gorenstein: None,
            nakayama: None,
        }
    }

    pub fn with_classification(
        mut self,
        algebra: &MonomialAlgebra,
        cls: &GpClassification,
        overlaps: &[Overlap],
        style: PathStyle,
    ) -> Report {
        self.perfect_paths = Some(
            cls.entries
                .iter()
                .map(|e| PerfectPathReport {
                    path: render_path(algebra, &e.perfect_path, style),
                    cycle: e
                        .cycle
                        .paths
                        .iter()
                        .map(|p| render_path(algebra, p, style))
                        .collect(),
                    dim_vector: e.module.dim_vector.clone(),
                    top: algebra
                        .quiver()
                        .vertex_name(e.module.top_vertex)
                        .to_string(),
                })
                .collect(),
        );
        self.overlaps = Some(
            overlaps
                .iter()
                .map(|o| OverlapReport {
                    kind: match o.kind {
                        OverlapKind::SelfOverlap => "self".into(),
                        OverlapKind::CrossOverlap => "cross".into(),
                    },
                    p: render_path(algebra, &o.p, style),
                    q: render_path(algebra, &o.q, style),
                    witness: render_path(algebra, &o.witness, style),
                })
                .collect(),
        );
        self
    }

    pub fn with_stable(mut self, shape: &StableShape) -> Report {
        self.stable = Some(StableReport {
            cycle_lengths: shape.cycle_lengths.clone(),
            semisimple: shape.semisimple,
        });
        self
    }

    pub fn with_gorenstein(mut self, g: &GorensteinReport) -> Report {
        self.gorenstein = Some(GorensteinJson {
            verdict: if g.gorenstein {
                "gorenstein".into()
            } else {
                "not_gorenstein".into()
            },
            bound: g.gorenstein_bound,
            cm_free: g.cm_free,
            finite_gldim: g.finite_global_dimension,
        });
        self
    }

    pub fn with_nakayama(mut self, d: &NakayamaData) -> Report {
        self.nakayama = Some(NakayamaJson {
            c: d.c.clone(),
            theta: d.theta.clone(),
            black: d.black.iter().copied().collect(),
            theta_cyclically_black: d.theta_cyclically_black.iter().copied().collect(),
        });
        self
    }
}

/// Graph-text export of the relation quiver.
pub fn relation_quiver_dot(algebra: &MonomialAlgebra) -> perfpath_core::Result<String> {
    let rq = perfpath_core::quadratic::relation_quiver(algebra)?;
    let quiver = algebra.quiver();
    let mut out = String::from("digraph relation_quiver {\n");
    for a in quiver.arrows() {
        out.push_str(&format!("    \"{}\";\n", quiver.arrow_name(a)));
    }
    for (a, b, rel) in &rq.edges {
        out.push_str(&format!(
            "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
            quiver.arrow_name(*a),
            quiver.arrow_name(*b),
            rel.display(quiver)
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn classification_sections(
    algebra: &MonomialAlgebra,
) -> perfpath_core::Result<(GpClassification, Vec<Overlap>, StableShape)> {
    let cls = classify::perfect_paths(algebra)?;
    let overlaps = classify::find_overlaps(algebra)?;
    let shape = classify::stable_category_shape(algebra)?;
    Ok((cls, overlaps, shape))
}
