//! Acceptance gate for the whole workspace: ten criteria covering the frozen
//! golden tables, the closed-form-versus-oracle sweeps, the counting lemmas,
//! the independence-depth table, the distance hierarchy, Griesmer
//! shortening, saturation, and output determinism. Every check is exact.
//!
//! Each test prints one `criterion NN ...: PASS` line on success; a panic is
//! the corresponding FAIL.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kasami::{
    bsymbol_weight, counting_identities, distance_range, predicted_degenerate_sizes,
    saturated_distribution, symbol_pair_distribution, trace_intersection_count, FieldElement,
    FieldTower, KasamiCode,
};

const SEED: u64 = 0x6b61_7361_6d69;

fn code_for(m: usize) -> KasamiCode {
    KasamiCode::new(FieldTower::new(m).unwrap())
}

fn scan_text(code: &KasamiCode, b: usize) -> String {
    code.weight_enumerator(b).unwrap().to_text()
}

#[test]
fn criterion_01_symbol_pair_golden_tables() {
    let golden = [
        (2, "1 + 15T^9 + 15T^11 + 15T^12 + 15T^13 + 3T^15"),
        (3, "1 + 126T^42 + 126T^46 + 63T^48 + 126T^50 + 70T^54"),
        (4, "1 + 1020T^180 + 1020T^188 + 255T^192 + 1020T^196 + 780T^204"),
    ];
    for (m, want) in golden {
        let code = code_for(m);
        assert_eq!(scan_text(&code, 2), want, "pair table at m={m}");
    }
    for m in 2..=5 {
        let code = code_for(m);
        assert_eq!(
            symbol_pair_distribution(m).unwrap(),
            code.weight_enumerator(2).unwrap(),
            "closed pair distribution vs scan at m={m}"
        );
    }
    println!("criterion 01 (symbol-pair golden tables): PASS");
}

#[test]
fn criterion_02_higher_b_golden_tables() {
    let golden = [
        (2, 3, "1 + 15T^12 + 15T^13 + 30T^14 + 3T^15"),
        (2, 4, "1 + 15T^13 + 15T^14 + 33T^15"),
        (
            3,
            4,
            "1 + 63T^55 + 63T^56 + 63T^58 + 63T^59 + 126T^60 + 63T^62 + 70T^63",
        ),
        (2, 5, "1 + 15T^14 + 48T^15"),
        (2, 6, "1 + 63T^15"),
        (3, 7, "1 + 63T^61 + 63T^62 + 385T^63"),
        (
            4,
            3,
            "1 + 255T^210 + 510T^214 + 510T^218 + 765T^222 + 255T^224 + 765T^226 + 510T^230 + 510T^234 + 15T^238",
        ),
    ];
    for (m, b, want) in golden {
        let code = code_for(m);
        assert_eq!(scan_text(&code, b), want, "(m, b) = ({m}, {b})");
    }
    println!("criterion 02 (higher-b golden tables): PASS");
}

#[test]
fn criterion_03_closed_form_vs_brute_force() {
    // Exhaustive at m = 2 and m = 3: every codeword, every window length.
    for m in [2usize, 3] {
        let code = code_for(m);
        let t = code.tower();
        let n = t.n();
        for a in 0..=n as u32 {
            let alpha = FieldElement(a);
            for &beta in t.subfield_elements() {
                let word = code.codeword(alpha, beta).unwrap();
                for b in 1..=n {
                    assert_eq!(
                        code.bsymbol_weight_closed(alpha, beta, b).unwrap(),
                        bsymbol_weight(word.bits(), b).unwrap(),
                        "m={m} alpha={alpha} beta={beta} b={b}"
                    );
                }
            }
        }
    }
    // Sampled at m = 4 and m = 5.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for m in [4usize, 5] {
        let code = code_for(m);
        let t = code.tower();
        let n = t.n();
        for _ in 0..10_000 {
            let alpha = FieldElement(rng.random_range(0..=n as u32));
            let beta = t.subfield_elements()[rng.random_range(0..t.q() as usize)];
            let b = rng.random_range(1..=n);
            let word = code.codeword(alpha, beta).unwrap();
            assert_eq!(
                code.bsymbol_weight_closed(alpha, beta, b).unwrap(),
                bsymbol_weight(word.bits(), b).unwrap(),
                "m={m} alpha={alpha} beta={beta} b={b}"
            );
        }
    }
    println!("criterion 03 (closed form vs brute force, m <= 5): PASS");
}

#[test]
fn criterion_04_exponential_sums() {
    for m in 2..=4 {
        let code = code_for(m);
        let t = code.tower();
        for a in 0..=t.n() as u32 {
            let alpha = FieldElement(a);
            for &beta in t.subfield_elements() {
                assert_eq!(
                    code.exp_sum_direct(alpha, beta).unwrap(),
                    code.exp_sum_closed(alpha, beta).unwrap(),
                    "m={m} alpha={alpha} beta={beta}"
                );
            }
        }
    }
    println!("criterion 04 (exponential sums, m <= 4 exhaustive): PASS");
}

#[test]
fn criterion_05_counting_lemmas() {
    // Degenerate-set sizes, exactly and disjointly, for every window length.
    for m in 2..=5 {
        let code = code_for(m);
        for j in 1..3 * m {
            let sets = code.degenerate_sets(j).unwrap();
            let (pe, pt) = predicted_degenerate_sizes(m, j);
            assert_eq!(sets.vanish_at_eta.len() as u64, pe, "m={m} j={j} eta");
            assert_eq!(sets.vanish_at_theta.len() as u64, pt, "m={m} j={j} theta");
            assert!(
                sets.vanish_at_eta
                    .iter()
                    .all(|u| !sets.vanish_at_theta.contains(u)),
                "m={m} j={j} sets must be disjoint"
            );
        }
    }
    // The two weighted window-counting identities, at every truncation depth.
    for b in 1..=64 {
        for depth in 0..b {
            let id = counting_identities(b, depth).unwrap();
            assert!(id.holds(), "b={b} depth={depth}: {id:?}");
        }
    }
    // Joint trace conditions over independent subfield elements cut the
    // subfield in half per condition.
    for m in 2..=6 {
        let t = FieldTower::new(m).unwrap();
        let basis: Vec<FieldElement> = (0..m as u64).map(|k| t.pow(t.eta(), k)).collect();
        for mask in 0..1u32 << m {
            assert_eq!(
                trace_intersection_count(&t, &basis, mask).unwrap(),
                1 << (m - mask.count_ones() as usize),
                "m={m} mask={mask:b}"
            );
        }
    }
    println!("criterion 05 (counting lemmas): PASS");
}

#[test]
fn criterion_06_independence_depth_table() {
    let rows: &[(usize, usize, usize)] = &[
        (3, 3, 1),
        (4, 3, 2),
        (4, 4, 2),
        (5, 4, 2),
        (6, 4, 2),
        (7, 4, 2),
        (8, 4, 3),
        (5, 5, 2),
        (6, 5, 2),
        (7, 5, 2),
        (8, 5, 3),
        (6, 6, 2),
        (7, 6, 2),
    ];
    for &(m, b, want) in rows {
        let code = code_for(m);
        let got = code
            .independence_depth(b)
            .unwrap()
            .unwrap_or_else(|| panic!("depth undefined at m={m} b={b}"));
        assert_eq!(got.depth, want, "m={m} b={b}");
    }
    println!("criterion 06 (independence depth table, m <= 8): PASS");
}

#[test]
fn criterion_07_hierarchy_and_bounds() {
    for m in [2usize, 3] {
        let code = code_for(m);
        let n = code.length();
        for b in 1..=n {
            let observed = u64::from(code.min_bsymbol_distance(b).unwrap());
            let (lo, hi) = distance_range(b, m).unwrap();
            assert!(
                (lo..=hi).contains(&observed),
                "m={m} b={b}: observed {observed} outside [{lo}, {hi}]"
            );
        }
    }
    // At m = 2 the chain strictly increases up to b = 3m and then pins at n.
    let code = code_for(2);
    let n = code.length();
    let chain: Vec<u32> = (1..=n)
        .map(|b| code.min_bsymbol_distance(b).unwrap())
        .collect();
    for b in 2..=6 {
        assert!(chain[b - 1] > chain[b - 2], "chain must increase at b={b}");
    }
    for b in 6..=n {
        assert_eq!(chain[b - 1], n as u32, "chain must saturate at b={b}");
    }
    println!("criterion 07 (hierarchy and bounds, m = 2, 3): PASS");
}

#[test]
fn criterion_08_griesmer_shortening() {
    let cases = [(2usize, 2usize, (9usize, 2usize, 6u32)), (4, 3, (210, 3, 120))];
    for (m, b, (length, dimension, distance)) in cases {
        let code = code_for(m);
        let word = code.min_weight_codeword(b).unwrap();
        let params = code.shorten_on_support_complement(&word, b, true).unwrap();
        assert_eq!(
            (params.length, params.dimension, params.min_distance),
            (length, dimension, distance),
            "m={m} b={b}"
        );
        assert!(params.is_griesmer, "m={m} b={b} must meet the Griesmer sum");
        assert_eq!(params.shift_rank, b, "m={m} b={b} shift rank");
    }
    println!("criterion 08 (Griesmer shortening): PASS");
}

#[test]
fn criterion_09_saturation_past_three_m() {
    let code = code_for(2);
    let saturated = saturated_distribution(2).unwrap();
    for b in 7..=code.length() {
        assert_eq!(
            code.weight_enumerator(b).unwrap(),
            saturated,
            "m=2 b={b} must saturate"
        );
    }
    let code = code_for(3);
    let saturated = saturated_distribution(3).unwrap();
    for b in [10, 20, 40, 63] {
        assert_eq!(
            code.weight_enumerator(b).unwrap(),
            saturated,
            "m=3 b={b} must saturate"
        );
    }
    println!("criterion 09 (saturation past b = 3m): PASS");
}

#[test]
fn criterion_10_deterministic_output() {
    let run = |workers: Option<&str>| -> Vec<u8> {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_kasami"));
        cmd.args(["table", "--m", "3", "--b", "4"]);
        if let Some(w) = workers {
            cmd.args(["--workers", w]);
        }
        let out = cmd.output().expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let one = run(Some("1"));
    let two = run(Some("2"));
    let max = run(None);
    assert_eq!(one, two, "1 vs 2 workers");
    assert_eq!(one, max, "1 vs max workers");
    println!("criterion 10 (deterministic table output): PASS");
}
