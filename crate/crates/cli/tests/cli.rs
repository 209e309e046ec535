use std::path::Path;
use std::process::{Command, Output};

fn grasstri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grasstri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn betti_prints_profile() {
    let out = grasstri(&["betti", "--n", "4", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 1 2 1 1\n");
    let out = grasstri(&["betti", "--n", "5", "--k", "2", "--top-dim", "3"]);
    assert_eq!(stdout(&out), "1 1 2 2\n");
}

#[test]
fn usage_errors_exit_2_naming_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let out = grasstri(&[
        "rips",
        "--cloud",
        p(&empty),
        "--r-max",
        "1",
        "--max-dim",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--cloud"), "{}", stderr(&out));
    assert_eq!(stderr(&out).lines().count(), 1);

    let out = grasstri(&["betti", "--n", "2", "--k", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--n/--k"));

    let out = grasstri(&["sample", "--space", "g2r4"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--points"));

    let out = grasstri(&["sample", "--space", "klein", "--points", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--space"));

    let out = grasstri(&[
        "pipeline",
        "--space",
        "rp2-r4",
        "--points",
        "10",
        "--max-dim",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--complex"));
}

#[test]
fn resource_limit_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let cloud = dir.path().join("cloud.txt");
    assert_eq!(
        code(&grasstri(&[
            "sample",
            "--space",
            "rp2-r4",
            "--points",
            "30",
            "-o",
            p(&cloud)
        ])),
        0
    );
    let out = grasstri(&[
        "rips",
        "--cloud",
        p(&cloud),
        "--r-max",
        "5",
        "--max-dim",
        "2",
        "--cap",
        "100",
    ]);
    assert_eq!(code(&out), 4);
}

#[test]
fn window_without_match_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    std::fs::write(&csv, "degree,birth,death\n0,0,inf\n1,1,2\n").unwrap();
    let out = grasstri(&["window", "--barcode", p(&csv), "--target", "1 1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("window = [1, 2)"));
    let out = grasstri(&["window", "--barcode", p(&csv), "--target", "5 0"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("window_count = 0"));
}

#[test]
fn thread_variable_is_checked() {
    let out = Command::new(env!("CARGO_BIN_EXE_grasstri"))
        .args(["betti", "--n", "3", "--k", "1"])
        .env("GRASSTRI_THREADS", "two")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("GRASSTRI_THREADS"));
    let out = Command::new(env!("CARGO_BIN_EXE_grasstri"))
        .args(["betti", "--n", "3", "--k", "1"])
        .env("GRASSTRI_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1 1 1\n");
}

/// Runs the stages one by one into `dir` the way the pipeline would.
fn compose(dir: &Path, witness: bool) {
    let f = |name: &str| dir.join(name);
    std::fs::create_dir_all(dir).unwrap();
    let seed = "11";
    let cloud = f("cloud.txt");
    let sample = [
        "sample",
        "--space",
        "rp2-r4",
        "--points",
        "120",
        "--seed",
        seed,
        "-o",
        p(&cloud),
    ];
    assert_eq!(code(&grasstri(&sample)), 0);
    let filtration = if witness {
        grasstri(&[
            "witness",
            "--cloud",
            p(&f("cloud.txt")),
            "--landmarks",
            "30",
            "--seed",
            seed,
            "--landmarks-output",
            p(&f("landmarks.txt")),
            "--r-max",
            "0.4",
            "--max-dim",
            "2",
            "-o",
            p(&f("filtration.txt")),
        ])
    } else {
        grasstri(&[
            "rips",
            "--cloud",
            p(&f("cloud.txt")),
            "--r-max",
            "0.9",
            "--max-dim",
            "1",
            "-o",
            p(&f("filtration.txt")),
        ])
    };
    assert_eq!(code(&filtration), 0, "{}", stderr(&filtration));
    let max_dim = if witness { "2" } else { "1" };
    let persist = grasstri(&[
        "persist",
        "--filtration",
        p(&f("filtration.txt")),
        "--max-dim",
        max_dim,
        "--csv",
        p(&f("barcode.csv")),
        "--svg",
        p(&f("barcode.svg")),
    ]);
    assert_eq!(code(&persist), 0);
    let r_max = if witness { "0.4" } else { "0.9" };
    let window = grasstri(&[
        "window",
        "--barcode",
        p(&f("barcode.csv")),
        "--space",
        "rp2-r4",
        "--top-dim",
        max_dim,
        "--r-max",
        r_max,
        "-o",
        p(&f("report.txt")),
    ]);
    assert!([0, 3].contains(&code(&window)));
}

fn run_pipeline(dir: &Path, witness: bool) -> i32 {
    let out = if witness {
        grasstri(&[
            "pipeline",
            "--space",
            "rp2-r4",
            "--points",
            "120",
            "--seed",
            "11",
            "--complex",
            "witness",
            "--landmarks",
            "30",
            "--r-max",
            "0.4",
            "--max-dim",
            "2",
            "-o",
            p(dir),
        ])
    } else {
        grasstri(&[
            "pipeline",
            "--space",
            "rp2-r4",
            "--points",
            "120",
            "--seed",
            "11",
            "--complex",
            "rips",
            "--r-max",
            "0.9",
            "--max-dim",
            "1",
            "-o",
            p(dir),
        ])
    };
    assert!([0, 3].contains(&code(&out)), "{}", stderr(&out));
    code(&out)
}

#[test]
fn pipeline_equals_composition() {
    for witness in [false, true] {
        let dir = tempfile::tempdir().unwrap();
        let piped = dir.path().join("pipeline");
        let composed = dir.path().join("stages");
        let status = run_pipeline(&piped, witness);
        compose(&composed, witness);
        let mut files = vec!["cloud.txt", "barcode.csv", "barcode.svg", "report.txt"];
        if witness {
            files.push("landmarks.txt");
        }
        for file in files {
            assert_eq!(
                read(&piped.join(file)),
                read(&composed.join(file)),
                "{file} (witness {witness})"
            );
        }
        if status == 0 {
            let report = String::from_utf8(read(&piped.join("report.txt"))).unwrap();
            let start = report
                .lines()
                .filter_map(|l| l.strip_prefix("window = ["))
                .map(|w| w.split(',').next().unwrap().parse::<f64>().unwrap())
                .next()
                .unwrap();
            // The exported triangulation is the widest window's start; check
            // it against the export subcommand on the composed filtration.
            let widest = widest_start(&report).unwrap_or(start);
            let out = composed.join("triangulation.txt");
            let export = grasstri(&[
                "export",
                "--filtration",
                p(&composed.join("filtration.txt")),
                "--r",
                &widest.to_string(),
                "-o",
                p(&out),
            ]);
            assert_eq!(code(&export), 0);
            assert_eq!(read(&piped.join("triangulation.txt")), read(&out));
        }
    }
}

fn widest_start(report: &str) -> Option<f64> {
    let mut best: Option<(f64, f64)> = None;
    for w in report.lines().filter_map(|l| l.strip_prefix("window = [")) {
        let (a, b) = w.trim_end_matches(')').split_once(',').unwrap();
        let (a, b): (f64, f64) = (a.trim().parse().unwrap(), b.trim().parse().unwrap());
        if best.is_none_or(|(s, e)| b - a > e - s) {
            best = Some((a, b));
        }
    }
    best.map(|(a, _)| a)
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    run_pipeline(&a, true);
    run_pipeline(&b, true);
    for file in [
        "cloud.txt",
        "landmarks.txt",
        "barcode.csv",
        "barcode.svg",
        "report.txt",
    ] {
        assert_eq!(read(&a.join(file)), read(&b.join(file)), "{file}");
    }
}

#[test]
fn pipeline_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("experiment.toml");
    let out = dir.path().join("out");
    std::fs::write(
        &config,
        format!(
            "space = \"rp2-r4\"\npoints = 120\ncomplex = \"rips\"\nr_max = 0.9\nmax_dim = 1\nseed = 11\noutput = {:?}\n",
            p(&out)
        ),
    )
    .unwrap();
    let via_file = grasstri(&["pipeline", "--config", p(&config)]);
    assert!([0, 3].contains(&code(&via_file)));
    let flags = dir.path().join("flags");
    run_pipeline(&flags, false);
    assert_eq!(
        read(&out.join("barcode.csv")),
        read(&flags.join("barcode.csv"))
    );

    std::fs::write(&config, "space = \"rp2-r4\"\nbogus = 1\n").unwrap();
    let bad = grasstri(&["pipeline", "--config", p(&config)]);
    assert_eq!(code(&bad), 2);
    assert!(stderr(&bad).contains("--config"));
}

#[test]
fn rp2_in_r4_pipeline_finds_window() {
    let dir = tempfile::tempdir().unwrap();
    let out = grasstri(&[
        "pipeline",
        "--space",
        "rp2-r4",
        "--points",
        "200",
        "--complex",
        "rips",
        "--max-dim",
        "2",
        "--seed",
        "7",
        "-o",
        p(dir.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("target = 1 1 1"));
    assert!(!report.contains("window_count = 0"));
    assert_eq!(report.as_bytes(), read(&dir.path().join("report.txt")));
}
