use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::analysis::matching_windows;
use crate::complexes::vietoris_rips;
use crate::persistence::barcodes;

fn random_cloud(seed: u64, n: usize, m: usize) -> PointCloud {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..m).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    PointCloud::from_points(&pts).unwrap()
}

#[test]
fn cloud_format() {
    let c = PointCloud::from_points(&[[0.5, -2.0], [1e-300, 3.0]]).unwrap();
    let text = write_cloud(&c);
    assert_eq!(
        text.lines().next(),
        Some("5.0000000000000000e-1 -2.0000000000000000e0")
    );
    assert_eq!(parse_cloud(&text).unwrap(), c);
    assert_eq!(parse_cloud("# comment\n\n1 2\n3.5 4e0\n").unwrap().len(), 2);
    assert!(parse_cloud("").unwrap().is_empty());
    assert!(matches!(
        parse_cloud("1 2\n3\n"),
        Err(Error::Parse { line: 2, .. })
    ));
    assert!(matches!(
        parse_cloud("1 x\n"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(parse_cloud("1 inf\n").is_err());
}

#[test]
fn filtration_format() {
    let f = vietoris_rips(&random_cloud(1, 8, 3), 1.5, 3).unwrap();
    let text = write_filtration(&f);
    assert!(text.starts_with("3 8\n"));
    assert_eq!(parse_filtration(&text).unwrap(), f);
    assert_eq!(text.lines().nth(1), Some("0 0"));
}

#[test]
fn filtration_rejections() {
    for bad in [
        "",
        "1\n0 0\n",
        "1 2\n0 0\n0 1\n0.5 0 2\n",
        "1 2\n0 0\n0 1\n0.5 0 1 1\n",
        "0 2\n0 0\n0 1\n0.5 0 1\n",
        "1 2\n0 0\n0.5 0 1\n",
        "1 2\n0 0\n0 1\n-1 0 1\n",
        "1 2\n0 0\n0 0\n",
        "1 2\n1 0\n1 1\n0.5 0 1\n",
    ] {
        assert!(parse_filtration(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn landmark_format() {
    assert_eq!(
        parse_landmarks(&write_landmarks(&[4, 0, 17])).unwrap(),
        vec![4, 0, 17]
    );
    assert!(parse_landmarks("1\n-2\n").is_err());
}

#[test]
fn barcode_format() {
    let f = vietoris_rips(&random_cloud(2, 15, 2), 2.0, 2).unwrap();
    let b = barcodes(&f, 1).unwrap();
    let text = write_barcode_csv(&b);
    assert!(text.starts_with("degree,birth,death\n"));
    assert!(text.contains(",inf\n"));
    assert_eq!(parse_barcode_csv(&text).unwrap(), b);
    assert!(parse_barcode_csv("").is_err());
    assert!(parse_barcode_csv("degree,birth,death\n0,2,1\n").is_err());
    assert!(parse_barcode_csv("degree,birth,death\n0,1\n").is_err());
    assert!(parse_barcode_csv("degree,birth,death\n0,inf,inf\n").is_err());
    assert_eq!(parse_barcode_csv("degree,birth,death\n").unwrap().len(), 0);
}

#[test]
fn report_format() {
    let b = Barcode::new(
        2,
        [
            (0, Interval::new(0.0, f64::INFINITY)),
            (1, Interval::new(1.0, 2.0)),
        ],
    )
    .unwrap();
    let r = matching_windows(&b, &BettiProfile(vec![1, 0]), 1);
    let text = write_window_report(&r);
    assert_eq!(
        text,
        "target = 1 0\ntop_dim = 1\ncritical_value_count = 3\ncritical_values = 0 1 2\nwindow_count = 2\nwindow = [0, 1)\nwindow = [2, inf)\n"
    );
    assert_eq!(parse_window_report(&text).unwrap(), r);
    let bad = text.replace("window_count = 2", "window_count = 3");
    assert!(parse_window_report(&bad).is_err());
    assert!(parse_window_report("target = 1\n").is_err());
    assert!(parse_window_report(&text.replace("[2, inf)", "[2, 1)")).is_err());
}

proptest! {
    #[test]
    fn cloud_roundtrip(coords in prop::collection::vec(prop::num::f64::NORMAL | prop::num::f64::ZERO, 1..40)) {
        let pts: Vec<Vec<f64>> = coords.chunks(4).filter(|c| c.len() == 4).map(<[f64]>::to_vec).collect();
        let c = PointCloud::from_points(&pts).unwrap();
        prop_assert_eq!(parse_cloud(&write_cloud(&c)).unwrap(), c);
    }

    #[test]
    fn filtration_roundtrip(seed in any::<u64>(), n in 1usize..10) {
        let f = vietoris_rips(&random_cloud(seed, n, 2), 1.0, 3).unwrap();
        prop_assert_eq!(parse_filtration(&write_filtration(&f)).unwrap(), f);
    }

    #[test]
    fn parsers_never_panic(text in "\\PC{0,200}") {
        let _ = parse_cloud(&text);
        let _ = parse_filtration(&text);
        let _ = parse_landmarks(&text);
        let _ = parse_barcode_csv(&text);
        let _ = parse_window_report(&text);
    }
}
