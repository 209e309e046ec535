use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    export_complex, matching_windows, ComplexKind, ExperimentConfig, LandmarkMethod, WindowReport,
};
use crate::complexes::{
    maxmin_landmarks, random_landmarks, vietoris_rips_capped, witness_filtration_capped,
    LandmarkSet, PointCloud,
};
use crate::error::{Error, Result};
use crate::io;
use crate::persistence::{barcodes, Barcode};
use crate::svg::render_barcode;

/// Generator for sampling points from `seed`.
pub fn sample_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for landmark choice: same seed, separate stream, so the choice
/// does not depend on how many draws sampling used.
pub fn landmark_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    rng
}

pub fn choose_landmarks(
    cloud: &PointCloud,
    count: usize,
    method: LandmarkMethod,
    seed: u64,
) -> Result<LandmarkSet> {
    let mut rng = landmark_rng(seed);
    match method {
        LandmarkMethod::Maxmin => maxmin_landmarks(cloud, count, &mut rng),
        LandmarkMethod::Random => random_landmarks(cloud, count, &mut rng),
    }
}

/// What a pipeline run computed; the same data is written to the output
/// directory.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub report: WindowReport,
    pub barcode: Barcode,
    pub simplex_count: usize,
    /// Parameter and simplex count of the exported complex, when a window
    /// was found.
    pub exported: Option<(f64, usize)>,
}

/// Runs the whole experiment and writes `cloud.txt`, `landmarks.txt` (witness
/// only), `barcode.csv`, `barcode.svg`, `report.txt` and, when a window
/// exists, `triangulation.txt` (the complex at the start of the widest window).
pub fn run_pipeline(config: &ExperimentConfig) -> Result<PipelineOutput> {
    let out = &config.output;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;

    let points = config.space.sample(
        config.points,
        config.proportions.as_ref(),
        &mut sample_rng(config.seed),
    )?;
    let cloud = PointCloud::from_points(&points)?;
    io::write_text(&out.join("cloud.txt"), &io::write_cloud(&cloud))?;

    let simplex_dim = config.max_dim + 1;
    let filtration = match config.complex {
        ComplexKind::Rips => vietoris_rips_capped(&cloud, config.r_max, simplex_dim, config.cap)?,
        ComplexKind::Witness { landmarks, method } => {
            let set = choose_landmarks(&cloud, landmarks, method, config.seed)?;
            io::write_text(
                &out.join("landmarks.txt"),
                &io::write_landmarks(set.indices()),
            )?;
            witness_filtration_capped(&set, config.r_max, simplex_dim, config.cap)?
        }
    };

    let barcode = barcodes(&filtration, config.max_dim)?;
    io::write_text(&out.join("barcode.csv"), &io::write_barcode_csv(&barcode))?;
    io::write_text(&out.join("barcode.svg"), &render_barcode(&barcode))?;

    let target = config.space.target(config.top_dim)?;
    let report = matching_windows(&barcode, &target, config.top_dim).clipped(config.r_max);
    io::write_text(&out.join("report.txt"), &io::write_window_report(&report))?;

    let exported = report.widest().map(|w| {
        let complex = export_complex(&filtration, w.start);
        (w.start, complex)
    });
    let exported = match exported {
        Some((r, complex)) => {
            let text = io::write_simplices(filtration.vertex_count(), &complex);
            io::write_text(&out.join("triangulation.txt"), &text)?;
            Some((r, complex.len()))
        }
        None => None,
    };
    Ok(PipelineOutput {
        report,
        barcode,
        simplex_count: filtration.len(),
        exported,
    })
}
