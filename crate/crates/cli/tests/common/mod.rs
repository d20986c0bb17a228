#![allow(dead_code)]

use std::path::PathBuf;

pub const CASES: &[(&str, &str)] = &[
    ("hseq_rank1", "hseq --rank 1 --order 2"),
    ("hseq_rank2_json", "hseq --rank 2 --order 3 --format json"),
    ("hseq_spec", "hseq --rank 1 --order 5 --spec 3,2"),
    ("degree_1_3", "degree --rank 1 --dim 3"),
    ("degree_1_4", "degree --rank 1 --dim 4"),
    ("degree_2_4_json", "degree --rank 2 --dim 4 --format json"),
    ("solve_universal", "solve --rank 1 --order 4"),
    ("solve_spec", "solve --rank 1 --spec 3,2 --order 5"),
    ("solve_inits_1_1", "solve --rank 1 --spec 3,2 --inits 1,1 --order 6"),
    ("solve_inits_1_2_json", "solve --rank 1 --spec 3,2 --inits 1,2 --order 6 --format json"),
    ("solve_symbolic", "solve --rank 2 --inits symbolic --order 4"),
    ("solve_nonhom", "solve-nonhom --rank 1 --order 6 --rhs {golden}/rhs_unit.json"),
    ("wronskian_1", "wronskian --rank 1 --partition 1 --order 4"),
    ("wronskian_2_2_json", "wronskian --rank 1 --partition 2,2 --order 3 --format json"),
    ("wronskian_spec", "wronskian --rank 1 --partition 2 --order 5 --spec 3,2"),
    ("schur_1_1", "schur --rank 1 --partition 1,1"),
    ("schur_2_2", "schur --rank 1 --partition 2,2"),
    ("schur_k4", "schur --rank 3 --k 4"),
    ("schur_poly", "schur --rank 1 --poly h1^3"),
    ("schur_poly_json", "schur --rank 2 --poly h1^2 --format json"),
    ("pieri_1", "pieri --rank 1 --partition 1 --k 1"),
    ("pieri_box", "pieri --rank 1 --partition 1 --k 2 --dim 3"),
    ("pieri_1_1_k2", "pieri --rank 1 --partition 1,1 --k 2"),
    ("syt_3_2_1", "syt --partition 3,2,1"),
    ("syt_2_2_json", "syt --partition 2,2 --format json"),
    ("product_orthogonal", "product --rank 1 --dim 3 --left 2 --right 1,1"),
    ("product_1_1_json", "product --rank 1 --dim 3 --left 1 --right 1 --format json"),
    ("check_giambelli", "check giambelli --rank 2 --max-weight 4 --order 8"),
    ("check_pieri", "check pieri --rank 1 --max-weight 2 --k 2 --order 6"),
    ("check_derivative", "check derivative --rank 1 --max-weight 4 --order 8"),
    ("check_euler", "check euler --rank 1 --order 8"),
    ("check_nonhom_json", "check nonhom --rank 2 --order 8 --cases 3 --format json"),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn invoke(args: &str) -> wronski_cli::Outcome {
    let dir = golden_dir();
    let mut argv = vec!["wronski".to_string()];
    argv.extend(args.split_whitespace().map(|a| a.replace("{golden}", dir.to_str().unwrap())));
    wronski_cli::run(argv)
}
