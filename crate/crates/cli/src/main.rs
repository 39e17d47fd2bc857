mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use perfpath_core::algebra::MonomialAlgebra;
use perfpath_core::classify;
use perfpath_core::fuzz::{generate, GenConfig};
use perfpath_core::nakayama;
use perfpath_core::oracle;
use perfpath_core::quadratic;
use perfpath_core::{format as alg_format, Error};

use report::{
    classification_sections, juxtaposition_ok, relation_quiver_dot, render_path, PathStyle,
    Report,
};

#[derive(Parser)]
#[command(
    name = "perfpath",
    about = "Classify Gorenstein-projective modules over monomial path algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Print paths as juxtaposed arrow names (single-character names only)
    #[arg(long, global = true)]
    paths_as_arrows: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Basic facts: dimension, basis size, minimal relations
    Info { file: PathBuf },
    /// Perfect paths, relation-cycles and module data
    Classify { file: PathBuf },
    /// Shape of the stable category of Gorenstein-projectives
    Stable { file: PathBuf },
    /// Relation-quiver analysis of a quadratic algebra
    Quadratic {
        file: PathBuf,
        /// Export the relation quiver as a DOT graph
        #[arg(long)]
        dot: bool,
    },
    /// Nakayama-specific analysis, from a file or a Kupisch series
    Nakayama {
        file: Option<PathBuf>,
        /// Comma-separated Kupisch series, e.g. 4,5
        #[arg(long, conflicts_with = "file")]
        kupisch: Option<String>,
    },
    /// Differential run: classifier against the linear-algebra oracle
    Verify(VerifyArgs),
    /// Emit a random admissible presentation
    Gen(GenArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Restrict generation to quadratic algebras
    #[arg(long)]
    quadratic: bool,
    /// Restrict generation to Nakayama algebras
    #[arg(long, conflicts_with = "quadratic")]
    nakayama: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, default_value_t = 6)]
    max_arrows: usize,
    #[arg(long, default_value_t = 4)]
    max_relation_length: usize,
    #[arg(long, default_value_t = 6)]
    max_relations: usize,
    #[arg(long)]
    quadratic: bool,
    #[arg(long)]
    nakayama: bool,
    #[arg(long)]
    no_sources_sinks: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &PathBuf) -> Result<MonomialAlgebra, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let presentation = alg_format::parse(&text).map_err(|e| e.to_string())?;
    MonomialAlgebra::build(presentation).map_err(|e| e.to_string())
}

fn style_for(cli: &Cli, algebra: &MonomialAlgebra) -> Result<PathStyle, String> {
    if !cli.paths_as_arrows {
        return Ok(PathStyle::Spaced);
    }
    if juxtaposition_ok(algebra) {
        Ok(PathStyle::Juxtaposed)
    } else {
        Err("--paths-as-arrows requires single-character arrow names".into())
    }
}

fn emit(cli: &Cli, report: &Report, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        print!("{text}");
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Info { file } => {
            let algebra = load(file)?;
            let style = style_for(cli, &algebra)?;
            let report = Report::base(&algebra, style);
            let mut text = format!(
                "dimension: {}\nbasis size: {}\nrelations F ({}):\n",
                report.dimension,
                report.basis_size,
                report.relations_f.len()
            );
            for r in &report.relations_f {
                text.push_str(&format!("    {r}\n"));
            }
            text.push_str(&format!(
                "quadratic: {}\nnakayama: {}\n",
                algebra.is_quadratic(),
                nakayama::nakayama_data(&algebra).is_ok()
            ));
            emit(cli, &report, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file } => {
            let algebra = load(file)?;
            let style = style_for(cli, &algebra)?;
            let (cls, overlaps, shape) =
                classification_sections(&algebra).map_err(|e| e.to_string())?;
            let report = Report::base(&algebra, style)
                .with_classification(&algebra, &cls, &overlaps, style)
                .with_stable(&shape);
            let mut text = format!("perfect paths: {}\n", cls.entries.len());
            for e in &cls.entries {
                text.push_str(&format!(
                    "    {}  (cycle length {}, dim vector {:?}, top {})\n",
                    render_path(&algebra, &e.perfect_path, style),
                    e.cycle.len(),
                    e.module.dim_vector,
                    algebra.quiver().vertex_name(e.module.top_vertex),
                ));
            }
            text.push_str(&format!("overlaps: {}\n", overlaps.len()));
            emit(cli, &report, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stable { file } => {
            let algebra = load(file)?;
            let style = style_for(cli, &algebra)?;
            let (cls, overlaps, shape) =
                classification_sections(&algebra).map_err(|e| e.to_string())?;
            let report = Report::base(&algebra, style)
                .with_classification(&algebra, &cls, &overlaps, style)
                .with_stable(&shape);
            let text = format!(
                "cycle lengths: {:?}\nsemisimple: {}\n",
                shape.cycle_lengths, shape.semisimple
            );
            emit(cli, &report, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Quadratic { file, dot } => {
            let algebra = load(file)?;
            let style = style_for(cli, &algebra)?;
            if *dot {
                print!("{}", relation_quiver_dot(&algebra).map_err(|e| e.to_string())?);
                return Ok(ExitCode::SUCCESS);
            }
            let g = quadratic::gorenstein_report(&algebra).map_err(|e| e.to_string())?;
            let report = Report::base(&algebra, style).with_gorenstein(&g);
            let text = format!(
                "Gorenstein: {}\nbound: {}\nCM-free: {}\nfinite global dimension: {}\n",
                if g.gorenstein { "yes" } else { "no" },
                g.gorenstein_bound
                    .map_or("-".to_string(), |b| b.to_string()),
                if g.cm_free { "yes" } else { "no" },
                if g.finite_global_dimension { "yes" } else { "no" },
            );
            emit(cli, &report, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Nakayama { file, kupisch } => {
            let algebra = match (file, kupisch) {
                (Some(f), None) => load(f)?,
                (None, Some(series)) => {
                    let c: Vec<usize> = series
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| format!("invalid Kupisch series: {e}"))?;
                    nakayama::algebra_from_kupisch(&c).map_err(|e| e.to_string())?
                }
                _ => return Err("provide either FILE or --kupisch LIST".into()),
            };
            let style = style_for(cli, &algebra)?;
            let data = nakayama::nakayama_data(&algebra).map_err(|e| e.to_string())?;
            let perfect =
                nakayama::perfect_paths_nakayama(&algebra).map_err(|e| e.to_string())?;
            let report = Report::base(&algebra, style).with_nakayama(&data);
            let mut text = format!(
                "c: {:?}\ntheta: {:?}\nblack: {:?}\ntheta-cyclically black: {:?}\nperfect paths: {}\n",
                data.c,
                data.theta,
                data.black.iter().collect::<Vec<_>>(),
                data.theta_cyclically_black.iter().collect::<Vec<_>>(),
                perfect.len(),
            );
            for p in &perfect {
                text.push_str(&format!("    {}\n", render_path(&algebra, p, style)));
            }
            emit(cli, &report, text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let mut mismatches = 0usize;
            let mut checked = 0usize;
            for i in 0..args.count {
                let cfg = GenConfig {
                    seed: args.seed.wrapping_add(i as u64),
                    quadratic_only: args.quadratic,
                    nakayama_only: args.nakayama,
                    ..Default::default()
                };
                let presentation = match generate(&cfg) {
                    Ok(p) => p,
                    Err(Error::GenerationExhausted { .. }) => continue,
                    Err(e) => return Err(e.to_string()),
                };
                let algebra =
                    MonomialAlgebra::build(presentation).map_err(|e| e.to_string())?;
                for p in algebra.basis() {
                    if p.is_trivial() {
                        continue;
                    }
                    checked += 1;
                    let fast = classify::is_gp_cyclic(&algebra, p).map_err(|e| e.to_string())?;
                    let slow = oracle::gp_oracle(&algebra, p).map_err(|e| e.to_string())?;
                    if fast != slow {
                        mismatches += 1;
                        eprintln!(
                            "mismatch (seed {}): path `{}` classifier {:?} oracle {:?}",
                            cfg.seed,
                            p.display(algebra.quiver()),
                            fast,
                            slow
                        );
                    }
                }
            }
            println!(
                "verified {checked} paths across {} algebras: {mismatches} mismatches",
                args.count
            );
            Ok(if mismatches == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen(args) => {
            let cfg = GenConfig {
                seed: args.seed,
                max_vertices: args.max_vertices,
                max_arrows: args.max_arrows,
                max_relation_length: args.max_relation_length,
                max_relations: args.max_relations,
                quadratic_only: args.quadratic,
                nakayama_only: args.nakayama,
                no_sources_sinks: args.no_sources_sinks,
            };
            let presentation = generate(&cfg).map_err(|e| e.to_string())?;
            print!("{}", alg_format::pretty_print(&presentation));
            Ok(ExitCode::SUCCESS)
        }
    }
}
