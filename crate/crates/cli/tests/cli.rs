use std::process::{Command, Output};

use genent_cli::{run_sweep, Quantity, Size, SweepConfig};

fn genent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genent"))
        .args(args)
        .output()
        .expect("spawn genent")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ISING_SWEEP: &[&str] = &[
    "sweep",
    "--gamma",
    "1",
    "--g-min",
    "0",
    "--g-max",
    "1",
    "--steps",
    "21",
    "--size",
    "inf",
    "--quantities",
    "purity,shifted_purity,energy_per_site",
];

#[test]
fn sweep_to_stdout_and_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for path in [&a, &b] {
        let mut args = ISING_SWEEP.to_vec();
        args.extend(["--out", path.to_str().unwrap()]);
        let o = genent(&args);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let file = std::fs::read(&a).unwrap();
    assert_eq!(file, std::fs::read(&b).unwrap());
    let piped = genent(ISING_SWEEP);
    assert_eq!(piped.stdout, file);

    let text = String::from_utf8(file).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("g,gamma,size,purity,shifted_purity,energy_per_site")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 21);
    for r in &rows {
        assert_eq!(r[2], "inf");
        let (p, s): (f64, f64) = (r[3].parse().unwrap(), r[4].parse().unwrap());
        assert!((s - (p - 0.5)).abs() < 1e-14);
    }
    assert_eq!(rows[10][0], "0.5");
    assert_eq!(rows[10][4], "0");
}

#[test]
fn jsonl_rows_parse() {
    let o = genent(&[
        "sweep",
        "--gamma",
        "0.5",
        "--g-min",
        "0.2",
        "--g-max",
        "0.6",
        "--steps",
        "3",
        "--size",
        "8",
        "--quantities",
        "mx,number_variance",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["size"], 8);
    assert_eq!(rows[2]["g"], 0.6);
    let keys: Vec<&String> = rows[1].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
    assert!(rows.iter().all(|r| r["mx"].as_f64().unwrap() >= 0.0));
}

#[test]
fn invalid_arguments_exit_with_2() {
    let cases: &[&[&str]] = &[
        &[
            "sweep",
            "--gamma",
            "0",
            "--g-min",
            "0",
            "--g-max",
            "1",
            "--steps",
            "5",
            "--size",
            "inf",
            "--quantities",
            "purity",
        ],
        &[
            "sweep",
            "--gamma",
            "1",
            "--g-min",
            "0",
            "--g-max",
            "1",
            "--steps",
            "5",
            "--size",
            "16",
            "--quantities",
            "concurrence",
        ],
        &[
            "sweep",
            "--gamma",
            "1",
            "--g-min",
            "0",
            "--g-max",
            "1",
            "--steps",
            "5",
            "--size",
            "inf",
            "--quantities",
            "mx",
        ],
        &[
            "sweep",
            "--gamma",
            "1",
            "--g-min",
            "1",
            "--g-max",
            "0",
            "--steps",
            "5",
            "--size",
            "inf",
            "--quantities",
            "purity",
        ],
        &[
            "sweep",
            "--gamma",
            "1",
            "--g-min",
            "0",
            "--g-max",
            "1",
            "--steps",
            "5",
            "--size",
            "big",
            "--quantities",
            "purity",
        ],
        &[
            "sweep",
            "--gamma",
            "1",
            "--g-min",
            "0",
            "--g-max",
            "1",
            "--steps",
            "5",
            "--size",
            "inf",
            "--quantities",
            "entropy",
        ],
        &["compare", "--n", "14", "--gamma", "1", "--g", "0.5"],
        &["compare", "--n", "7", "--gamma", "1", "--g", "0.5"],
        &["exponent", "--gamma", "1", "--window", "0.45,0.55"],
        &["exponent", "--gamma", "1", "--window", "0.45"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = genent(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let o = genent(cases[0]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of scope"));
}

#[test]
fn compare_reports_agreement() {
    for (n, gamma, g) in [("4", "1", "0.5"), ("8", "0.5", "0.3"), ("8", "1", "0")] {
        let o = genent(&["compare", "--n", n, "--gamma", gamma, "--g", g]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert!(text.lines().last().unwrap().ends_with("pass"), "{text}");
    }
    let text = stdout(&genent(&[
        "compare", "--n", "8", "--gamma", "1", "--g", "0",
    ]));
    assert!(
        text.contains("energy_ed         -8\n") && text.contains("energy_analytic   -8\n"),
        "{text}"
    );
}

#[test]
fn examples_and_exponent_commands() {
    let o = genent(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.ends_with("pass")).count(), 13);

    let o = genent(&[
        "exponent",
        "--gamma",
        "1",
        "--window",
        "0.40,0.49",
        "--points",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let nu: f64 = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("nu"))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!((0.95..=1.05).contains(&nu));
}

#[test]
fn disorder_parameter_family_vanishes_at_criticality() {
    for gamma in [0.25, 0.5, 1.0] {
        let cfg = SweepConfig {
            gamma,
            g_min: 0.0,
            g_max: 1.0,
            steps: 101,
            size: Size::Thermo,
            quantities: vec![Quantity::ShiftedPurity],
        };
        for row in run_sweep(&cfg).unwrap() {
            let v = row.values[0];
            if row.g >= 0.5 {
                assert!(v.abs() < 1e-14, "gamma={gamma} g={}: {v}", row.g);
            } else {
                assert!(v > 0.0);
            }
        }
    }
}

#[test]
fn finite_ising_chain_looks_like_the_phase_diagram() {
    let cfg = SweepConfig {
        gamma: 1.0,
        g_min: 0.0,
        g_max: 1.0,
        steps: 21,
        size: Size::Finite(12),
        quantities: vec![Quantity::Concurrence, Quantity::Mx, Quantity::ShiftedPurity],
    };
    let rows = run_sweep(&cfg).unwrap();
    let at = |g: f64| rows.iter().find(|r| (r.g - g).abs() < 1e-12).unwrap();
    assert!(at(0.2).values[1] < 0.3 && at(0.8).values[1] > 0.85);
    assert!(rows
        .windows(2)
        .all(|w| w[1].values[1] >= w[0].values[1] - 1e-12));
    let c: Vec<f64> = rows.iter().map(|r| r.values[0]).collect();
    let peak = c.iter().cloned().fold(0.0, f64::max);
    assert!(c[0] < 1e-12 && peak > 0.15 && c[20] < peak);
    assert!(at(0.0).values[2] > 0.49 && at(0.6).values[2].abs() < 0.05);
}
