//! Reproducibility contracts for the scaling harness.

use repseq_bench::{gen_string, run_scaling, write_csv, GenKind, ScalingConfig};
use repseq_core::{run_mode, DriverOptions, Mode};

fn csv(cfg: &ScalingConfig) -> String {
    let report = run_scaling(cfg).unwrap();
    let mut buf = Vec::new();
    write_csv(&report, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

/// Strips the nanos column (index 5) from every data row.
fn without_nanos(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .map(|line| {
            line.split(',')
                .enumerate()
                .filter(|&(i, _)| i != 5)
                .map(|(_, f)| f.to_string())
                .collect()
        })
        .collect()
}

#[test]
fn identical_configs_give_identical_csv_modulo_nanos() {
    let cfg = ScalingConfig {
        mode: Mode::NonInt,
        sizes: vec![8, 12, 16],
        sigma: 2,
        seed: 42,
        reps: 3,
        threads: 1,
    };
    let a = csv(&cfg);
    let b = csv(&cfg);
    assert_eq!(without_nanos(&a), without_nanos(&b));
}

#[test]
fn reported_lengths_match_direct_driver_calls() {
    for (mode, sizes) in [
        (Mode::NonInt, vec![8usize, 12, 16]),
        (Mode::Periodic, vec![6, 9, 12]),
        (Mode::D4, vec![6, 8, 10]),
    ] {
        let cfg = ScalingConfig {
            mode,
            sizes,
            sigma: 3,
            seed: 7,
            reps: 2,
            threads: 1,
        };
        let report = run_scaling(&cfg).unwrap();
        assert_eq!(report.records.len(), cfg.sizes.len() * cfg.reps);
        for r in &report.records {
            let text = gen_string(GenKind::Random, r.n, r.sigma, r.seed).unwrap();
            let direct = run_mode(r.mode, &text, &DriverOptions::default()).unwrap();
            assert_eq!(r.length, direct.length, "n = {}", r.n);
        }
    }
}

#[test]
fn rows_follow_size_then_rep_order() {
    let cfg = ScalingConfig {
        mode: Mode::Square,
        sizes: vec![6, 10],
        sigma: 2,
        seed: 3,
        reps: 3,
        threads: 1,
    };
    let report = run_scaling(&cfg).unwrap();
    let order: Vec<(usize, usize)> = report.records.iter().map(|r| (r.n, r.rep)).collect();
    assert_eq!(order, vec![(6, 0), (6, 1), (6, 2), (10, 0), (10, 1), (10, 2)]);
    assert_eq!(report.medians.len(), 2);
    assert!(report.slope.is_finite());
}
