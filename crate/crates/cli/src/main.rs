use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grasstri::analysis::{
    choose_landmarks, export_complex, matching_windows, run_pipeline, sample_rng, ConfigFields,
    ExperimentConfig, LandmarkMethod, WindowReport, DEFAULT_CAP,
};
use grasstri::complexes::{
    vietoris_rips_capped, witness_filtration_capped, LandmarkSet, PointCloud,
};
use grasstri::grassmann::{betti_mod2, BettiProfile, GrassmannParams, Proportions, Space};
use grasstri::persistence::barcodes;
use grasstri::svg::render_barcode;
use grasstri::{io, Error};

/// Approximate triangulations of Grassmannians from persistent homology.
#[derive(Parser)]
#[command(name = "grasstri", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a point cloud from a space.
    Sample(SampleArgs),
    /// Print the mod-2 Betti numbers of G_k(R^n).
    Betti(BettiArgs),
    /// Vietoris-Rips filtration of a cloud.
    Rips(RipsArgs),
    /// Lazy witness filtration on landmarks of a cloud.
    Witness(WitnessArgs),
    /// Barcode of a filtration, as CSV and SVG.
    Persist(PersistArgs),
    /// Parameter windows where a barcode has the target homology.
    Window(WindowArgs),
    /// The subcomplex of a filtration at one parameter value.
    Export(ExportArgs),
    /// Sample, filter, persist and search windows in one run.
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// rp2-r4, rp2-r5, rp3, or g<k>r<n> such as g2r4.
    #[arg(long)]
    space: String,
    #[arg(long)]
    points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cell-dimension fractions such as `1:0.05,2:0.3` (Grassmannians only).
    #[arg(long)]
    proportions: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Highest degree printed; the manifold dimension when absent.
    #[arg(long)]
    top_dim: Option<usize>,
}

#[derive(Args)]
struct FiltrationArgs {
    /// Largest filtration value built.
    #[arg(long)]
    r_max: f64,
    /// Highest homology degree of interest; simplices go one dimension higher.
    #[arg(long)]
    max_dim: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct RipsArgs {
    #[arg(long)]
    cloud: PathBuf,
    #[command(flatten)]
    filtration: FiltrationArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    cloud: PathBuf,
    /// Number of landmarks to choose.
    #[arg(long, conflicts_with = "landmark_file")]
    landmarks: Option<usize>,
    /// Read landmark indices instead of choosing them.
    #[arg(long)]
    landmark_file: Option<PathBuf>,
    /// maxmin or random.
    #[arg(long, default_value = "maxmin")]
    method: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the chosen landmark indices.
    #[arg(long)]
    landmarks_output: Option<PathBuf>,
    #[command(flatten)]
    filtration: FiltrationArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PersistArgs {
    #[arg(long)]
    filtration: PathBuf,
    /// Highest degree computed; one below the top simplex dimension when absent.
    #[arg(long)]
    max_dim: Option<usize>,
    /// Barcode CSV; standard output when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long)]
    barcode: PathBuf,
    /// Target Betti numbers such as `1 1 1`.
    #[arg(long, conflicts_with = "space", required_unless_present = "space")]
    target: Option<String>,
    /// Take the target from a space instead.
    #[arg(long)]
    space: Option<String>,
    /// Highest degree compared; the target length minus one when absent.
    #[arg(long)]
    top_dim: Option<usize>,
    /// Cut windows at the largest value the filtration was built to.
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    filtration: PathBuf,
    #[arg(long)]
    r: f64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    /// TOML file with the experiment; flags given alongside override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    space: Option<String>,
    #[arg(long)]
    points: Option<usize>,
    /// rips or witness.
    #[arg(long)]
    complex: Option<String>,
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    top_dim: Option<usize>,
    #[arg(long)]
    landmarks: Option<usize>,
    #[arg(long)]
    landmark_method: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    proportions: Option<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    cap: Option<usize>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

const NO_WINDOW: u8 = 3;

fn status(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 4,
        Error::Io { .. } => 1,
        _ => 2,
    }
}

/// Attributes a library error to the flag whose value caused it.
fn at(flag: &'static str) -> impl FnOnce(Error) -> Failure {
    move |e| Failure {
        code: status(&e),
        message: format!("{flag}: {e}"),
    }
}

fn plain(e: Error) -> Failure {
    Failure {
        code: status(&e),
        message: e.to_string(),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => io::write_text(p, text).map_err(plain),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            }),
    }
}

fn read_cloud(path: &Path) -> Result<PointCloud, Failure> {
    let cloud =
        io::parse_cloud(&io::read_text(path).map_err(at("--cloud"))?).map_err(at("--cloud"))?;
    if cloud.is_empty() {
        return Err(at("--cloud")(Error::EmptyCloud));
    }
    Ok(cloud)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Sample(a) => {
            let space: Space = a.space.parse().map_err(at("--space"))?;
            let proportions: Option<Proportions> = a
                .proportions
                .as_deref()
                .map(str::parse)
                .transpose()
                .map_err(at("--proportions"))?;
            let points = space
                .sample(a.points, proportions.as_ref(), &mut sample_rng(a.seed))
                .map_err(at("--points"))?;
            let cloud = PointCloud::from_points(&points).map_err(plain)?;
            emit(a.output.as_deref(), &io::write_cloud(&cloud))?;
        }
        Command::Betti(a) => {
            let params = GrassmannParams::new(a.n, a.k).map_err(at("--n/--k"))?;
            let top = a.top_dim.unwrap_or(params.dimension());
            let betti = betti_mod2(params, top).map_err(at("--top-dim"))?;
            println!("{betti}");
        }
        Command::Rips(a) => {
            let cloud = read_cloud(&a.cloud)?;
            let f = &a.filtration;
            let filtration = vietoris_rips_capped(&cloud, f.r_max, f.max_dim + 1, f.cap)
                .map_err(at("--r-max"))?;
            emit(a.output.as_deref(), &io::write_filtration(&filtration))?;
        }
        Command::Witness(a) => {
            let cloud = read_cloud(&a.cloud)?;
            let set = match (&a.landmark_file, a.landmarks) {
                (Some(path), _) => {
                    let text = io::read_text(path).map_err(at("--landmark-file"))?;
                    let indices = io::parse_landmarks(&text).map_err(at("--landmark-file"))?;
                    LandmarkSet::from_indices(&cloud, indices).map_err(at("--landmark-file"))?
                }
                (None, Some(count)) => {
                    let method: LandmarkMethod = a.method.parse().map_err(at("--method"))?;
                    choose_landmarks(&cloud, count, method, a.seed).map_err(at("--landmarks"))?
                }
                (None, None) => {
                    return Err(Failure::usage("--landmarks or --landmark-file is required"))
                }
            };
            if let Some(path) = &a.landmarks_output {
                io::write_text(path, &io::write_landmarks(set.indices())).map_err(plain)?;
            }
            let f = &a.filtration;
            let filtration = witness_filtration_capped(&set, f.r_max, f.max_dim + 1, f.cap)
                .map_err(at("--r-max"))?;
            emit(a.output.as_deref(), &io::write_filtration(&filtration))?;
        }
        Command::Persist(a) => {
            let text = io::read_text(&a.filtration).map_err(at("--filtration"))?;
            let filtration = io::parse_filtration(&text).map_err(at("--filtration"))?;
            let degree = a.max_dim.unwrap_or(filtration.max_dim().saturating_sub(1));
            let barcode = barcodes(&filtration, degree).map_err(at("--filtration"))?;
            emit(a.csv.as_deref(), &io::write_barcode_csv(&barcode))?;
            if let Some(path) = &a.svg {
                io::write_text(path, &render_barcode(&barcode)).map_err(plain)?;
            }
        }
        Command::Window(a) => {
            let text = io::read_text(&a.barcode).map_err(at("--barcode"))?;
            let barcode = io::parse_barcode_csv(&text).map_err(at("--barcode"))?;
            let (target, default_top) = match (&a.target, &a.space) {
                (Some(t), _) => {
                    let t: BettiProfile = t.parse().map_err(at("--target"))?;
                    if t.degrees() == 0 {
                        return Err(Failure::usage("--target: empty Betti profile"));
                    }
                    let top = t.degrees() - 1;
                    (t, top)
                }
                (None, Some(s)) => {
                    let space: Space = s.parse().map_err(at("--space"))?;
                    let top = a.top_dim.unwrap_or(space.manifold_dimension());
                    (space.target(top).map_err(at("--top-dim"))?, top)
                }
                (None, None) => return Err(Failure::usage("--target or --space is required")),
            };
            let top_dim = a.top_dim.unwrap_or(default_top);
            let mut report = matching_windows(&barcode, &target, top_dim);
            if let Some(r) = a.r_max {
                report = report.clipped(r);
            }
            emit(a.output.as_deref(), &io::write_window_report(&report))?;
            return Ok(window_status(&report));
        }
        Command::Export(a) => {
            let text = io::read_text(&a.filtration).map_err(at("--filtration"))?;
            let filtration = io::parse_filtration(&text).map_err(at("--filtration"))?;
            if a.r.is_nan() || a.r < 0.0 {
                return Err(Failure::usage("--r: must be a nonnegative number"));
            }
            let complex = export_complex(&filtration, a.r);
            emit(
                a.output.as_deref(),
                &io::write_simplices(filtration.vertex_count(), &complex),
            )?;
        }
        Command::Pipeline(a) => {
            let config = pipeline_config(a)?;
            let out = run_pipeline(&config).map_err(plain)?;
            print!("{}", io::write_window_report(&out.report));
            return Ok(window_status(&out.report));
        }
    }
    Ok(0)
}

fn window_status(report: &WindowReport) -> u8 {
    if report.found() {
        0
    } else {
        NO_WINDOW
    }
}

fn pipeline_config(a: PipelineArgs) -> Result<ExperimentConfig, Failure> {
    let mut fields = match &a.config {
        Some(path) => {
            let text = io::read_text(path).map_err(at("--config"))?;
            ConfigFields::from_toml(&text).map_err(at("--config"))?
        }
        None => ConfigFields::default(),
    };
    let from_file = a.config.is_some();
    let require = |value: Option<String>, current: String, flag: &str| -> Result<String, Failure> {
        match value {
            Some(v) => Ok(v),
            None if from_file => Ok(current),
            None => Err(Failure::usage(format!(
                "{flag} is required without --config"
            ))),
        }
    };
    fields.space = require(a.space, fields.space, "--space")?;
    fields.complex = require(a.complex, fields.complex, "--complex")?;
    fields.points = match (a.points, from_file) {
        (Some(p), _) => p,
        (None, true) => fields.points,
        (None, false) => return Err(Failure::usage("--points is required without --config")),
    };
    fields.max_dim = match (a.max_dim, from_file) {
        (Some(d), _) => d,
        (None, true) => fields.max_dim,
        (None, false) => return Err(Failure::usage("--max-dim is required without --config")),
    };
    fields.r_max = a.r_max.or(fields.r_max);
    fields.top_dim = a.top_dim.or(fields.top_dim);
    fields.landmarks = a.landmarks.or(fields.landmarks);
    fields.landmark_method = a.landmark_method.or(fields.landmark_method);
    fields.seed = a.seed.unwrap_or(fields.seed);
    fields.proportions = a.proportions.or(fields.proportions);
    fields.output = a.output.or(fields.output);
    fields.cap = a.cap.or(fields.cap);
    ExperimentConfig::from_fields(fields).map_err(|e| Failure {
        code: status(&e),
        message: format!("pipeline configuration: {e}"),
    })
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("GRASSTRI_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        Failure::usage(format!("GRASSTRI_THREADS: {value:?} is not a thread count"))
    })?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::usage(format!("GRASSTRI_THREADS: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
