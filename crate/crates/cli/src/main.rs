//! Command-line driver: build, catalog, realize, analyze, render, props.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pointconic::analysis::{
    audit, geometric_meets, intersection_type, intersection_type_combinatorial, isometry_check,
};
use pointconic::constructions::{self as build, GeometricConfiguration};
use pointconic::incidence::{catalog, catalog_names};
use pointconic::interface::{
    analysis_to_json, read_configuration, write_configuration, write_svg, AnalysisDocument, ConfigurationFile,
    SceneStyle,
};
use pointconic::{ConicKind, Projection4to2};

/// Environment variable naming the directory for outputs given without `-o`.
const OUT_DIR_VAR: &str = "POINTCONIC_OUT_DIR";

#[derive(Parser)]
#[command(name = "pointconic", version, about = "Point-conic and point-ellipse configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometric configuration.
    Build(BuildArgs),
    /// Write a named combinatorial configuration.
    Catalog {
        /// One of the catalog names (see `--help` for the list).
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(catalog_names().iter().copied()))]
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Realize a combinatorial configuration.
    Realize {
        method: Method,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Audit a configuration and print its signature and intersection type.
    Analyze {
        #[arg(short, long)]
        input: PathBuf,
        /// Also intersect all conic pairs and check isometry.
        #[arg(long)]
        geometric: bool,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Draw a geometric configuration as SVG.
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// JSON style file.
        #[arg(long)]
        style: Option<PathBuf>,
        /// Render even if the audit fails.
        #[arg(long)]
        force: bool,
    },
    /// Print the combinatorial property report.
    Props {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Circles,
    Conics,
}

#[derive(Args)]
struct BuildArgs {
    #[command(subcommand)]
    builder: Builder,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// 2×4 projection matrix, row-major, as eight comma-separated numbers.
    /// Defaults to the octagonal view, or an oblique one for pmn.
    #[arg(long, global = true, value_delimiter = ',')]
    projection: Option<Vec<f64>>,
}

#[derive(Subcommand)]
enum Builder {
    CrossedEllipses,
    PolygonRing {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.15)]
        elongation: f64,
        #[arg(long, default_value_t = 0.075)]
        minor: f64,
    },
    #[command(name = "qcube-48")]
    Qcube48,
    RichterGebert,
    DipyramidCarnot {
        #[arg(long)]
        n: usize,
    },
    Pmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Cell24,
    /// Minkowski product of two geometric files.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Rotate the right factor by a random angle drawn from the seed.
        #[arg(long)]
        genericize: bool,
    },
}

impl Builder {
    fn name(&self) -> &'static str {
        match self {
            Builder::CrossedEllipses => "crossed-ellipses",
            Builder::PolygonRing { .. } => "polygon-ring",
            Builder::Qcube48 => "qcube-48",
            Builder::RichterGebert => "richter-gebert",
            Builder::DipyramidCarnot { .. } => "dipyramid-carnot",
            Builder::Pmn { .. } => "pmn",
            Builder::Cell24 => "cell24",
            Builder::Product { .. } => "product",
        }
    }
}

type Failure = String;

fn output_path(given: Option<PathBuf>, default_name: &str) -> PathBuf {
    given.unwrap_or_else(|| {
        let dir = std::env::var_os(OUT_DIR_VAR).map(PathBuf::from).unwrap_or_default();
        dir.join(default_name)
    })
}

fn read(path: &Path) -> Result<ConfigurationFile, Failure> {
    read_configuration(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_geometric(path: &Path) -> Result<GeometricConfiguration, Failure> {
    read(path)?
        .into_geometric()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn write(file: ConfigurationFile, path: &Path) -> Result<(), Failure> {
    write_configuration(&file, path).map_err(|e| e.to_string())?;
    println!("wrote {}", path.display());
    Ok(())
}

fn run_build(args: BuildArgs) -> Result<(), Failure> {
    let proj = match &args.projection {
        Some(v) if v.len() != 8 => return Err(format!("--projection needs 8 numbers, got {}", v.len())),
        Some(v) => {
            Projection4to2::new([[v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]]]).map_err(|e| e.to_string())?
        }
        None if matches!(args.builder, Builder::Pmn { .. }) => Projection4to2::oblique(),
        None => Projection4to2::octagonal(),
    };
    let seed = args.seed;
    let name = args.builder.name();
    let g = match args.builder {
        Builder::CrossedEllipses => build::crossed_ellipses(),
        Builder::PolygonRing { n, elongation, minor } => build::polygon_ring(n, elongation, minor),
        Builder::Qcube48 => build::qcube_48(&proj),
        Builder::RichterGebert => build::richter_gebert(seed),
        Builder::DipyramidCarnot { n } => build::dipyramid_carnot(n, seed),
        Builder::Pmn { m, n } => build::pmn(m, n, &proj),
        Builder::Cell24 => build::cell24(&proj),
        Builder::Product {
            left,
            right,
            genericize,
        } => {
            let (a, b) = (read_geometric(&left)?, read_geometric(&right)?);
            build::product_with(&a, &b, genericize.then_some(seed))
        }
    }
    .map_err(|e| format!("{name}: {e}"))?;
    println!("{name}: {}", g.signature());
    write(g.into(), &output_path(args.output, &format!("{name}.json")))
}

fn run_analyze(input: &Path, geometric: bool, json: Option<PathBuf>) -> Result<bool, Failure> {
    match read(input)? {
        ConfigurationFile::Combinatorial(c) => {
            let t = intersection_type_combinatorial(&c);
            println!("signature {}", c.signature());
            println!("intersection type {}", t.label());
            if json.is_some() {
                return Err("--json needs a geometric file".into());
            }
            Ok(true)
        }
        ConfigurationFile::Geometric(g) => {
            let report = audit(&g);
            let t = intersection_type(&g);
            println!("{}", g.provenance.builder);
            println!("intersection type {}", t.label());
            println!("{}", report.summary());
            let mut doc = AnalysisDocument::new(report.clone(), t);
            if geometric {
                let meets = geometric_meets(&g).map_err(|e| e.to_string())?;
                println!(
                    "geometric meets: {} meeting pairs, at most {} points, {} pairs meet outside configuration points",
                    meets.per_pair.len(),
                    meets.max_meet,
                    meets.excess.len()
                );
                doc.meets = Some(meets);
                if g.conics.iter().all(|c| c.kind() == ConicKind::Ellipse) {
                    let iso = isometry_check(&g).map_err(|e| e.to_string())?;
                    println!("{}", iso.name());
                    doc.isometry = Some(iso);
                } else {
                    println!("isometry: not all blocks are ellipses");
                }
            }
            if let Some(path) = json {
                std::fs::write(&path, analysis_to_json(&doc)).map_err(|e| format!("{}: {e}", path.display()))?;
                println!("wrote {}", path.display());
            }
            Ok(report.passed)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Build(args) => run_build(args).map(|_| true),
        Command::Catalog { name, output } => {
            let c = catalog(&name).map_err(|e| e.to_string())?;
            println!("{name}: {}", c.signature());
            write(c.into(), &output_path(output, &format!("{name}.json"))).map(|_| true)
        }
        Command::Realize {
            method,
            input,
            output,
            seed,
        } => {
            let c = read(&input)?.structure();
            let g = match method {
                Method::Circles => build::realize_lineal_by_circles(&c, seed),
                Method::Conics => build::realize_by_conics(&c, seed),
            }
            .map_err(|e| e.to_string())?;
            let report = audit(&g);
            println!("{}", report.summary());
            let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("realized");
            write(g.into(), &output_path(output, &format!("{stem}_realized.json")))?;
            Ok(report.passed)
        }
        Command::Analyze { input, geometric, json } => run_analyze(&input, geometric, json),
        Command::Render {
            input,
            output,
            style,
            force,
        } => {
            let g = read_geometric(&input)?;
            let style = match style {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                    SceneStyle::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => SceneStyle::default(),
            };
            let report = audit(&g);
            if !report.passed && !force {
                return Err(format!(
                    "audit failed (use --force to render anyway)\n{}",
                    report.summary()
                ));
            }
            write_svg(&g, &style, &output).map_err(|e| e.to_string())?;
            println!("wrote {}", output.display());
            Ok(true)
        }
        Command::Props { input } => {
            let c = read(&input)?.structure();
            let r = c.property_report();
            println!("signature {}", c.signature());
            println!("{}", r.summary());
            println!("girth {}", r.girth);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
