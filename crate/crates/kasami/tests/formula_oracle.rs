//! Closed forms against brute force: the single source of truth is the
//! sliding-window count, and every formula must reproduce it.

use kasami::{
    bsymbol_weight, bsymbol_weight_span, distance_floor, distance_range, FieldElement, FieldTower,
    KasamiCode,
};

fn code(m: usize) -> KasamiCode {
    KasamiCode::new(FieldTower::new(m).unwrap())
}

#[test]
fn closed_weight_formula_matches_brute_force_everywhere_at_m3() {
    let c = code(3);
    let t = c.tower();
    for a in 0..=t.n() as u32 {
        let alpha = FieldElement(a);
        for &beta in t.subfield_elements() {
            let word = c.codeword(alpha, beta).unwrap();
            for b in 1..=t.n() {
                assert_eq!(
                    c.bsymbol_weight_closed(alpha, beta, b).unwrap(),
                    bsymbol_weight(word.bits(), b).unwrap(),
                    "alpha=0x{a:x} beta={beta} b={b}"
                );
            }
        }
    }
}

#[test]
fn exponential_sums_agree_exhaustively_up_to_m4() {
    for m in 2..=4 {
        let c = code(m);
        let t = c.tower();
        for a in 0..=t.n() as u32 {
            let alpha = FieldElement(a);
            for &beta in t.subfield_elements() {
                assert_eq!(
                    c.exp_sum_direct(alpha, beta).unwrap(),
                    c.exp_sum_closed(alpha, beta).unwrap(),
                    "m={m} alpha=0x{a:x} beta={beta}"
                );
            }
        }
    }
}

#[test]
fn span_identity_holds_on_m3_codewords() {
    let c = code(3);
    let t = c.tower();
    for a in (0..=t.n() as u32).step_by(5) {
        let alpha = FieldElement(a);
        for &beta in t.subfield_elements() {
            let word = c.codeword(alpha, beta).unwrap();
            for b in 1..=12 {
                assert_eq!(
                    bsymbol_weight_span(word.bits(), b).unwrap(),
                    bsymbol_weight(word.bits(), b).unwrap(),
                    "alpha=0x{a:x} beta={beta} b={b}"
                );
            }
        }
    }
}

#[test]
fn observed_distances_sit_inside_the_predicted_range() {
    for m in [2usize, 3] {
        let c = code(m);
        let n = c.length();
        for b in 1..=n {
            let d = c.min_bsymbol_distance(b).unwrap();
            let (lo, hi) = distance_range(b, m).unwrap();
            assert!(
                (lo..=hi).contains(&u64::from(d)),
                "m={m} b={b}: {d} outside [{lo}, {hi}]"
            );
        }
    }
}

#[test]
fn m3_distance_chain_spot_values() {
    let c = code(3);
    let observed: Vec<u32> = (1..=9)
        .map(|b| c.min_bsymbol_distance(b).unwrap())
        .collect();
    assert_eq!(observed, [28, 42, 49, 55, 58, 60, 61, 62, 63]);
    for b in [10usize, 20, 63] {
        assert_eq!(c.min_bsymbol_distance(b).unwrap(), 63, "b={b}");
    }
    // Where the floor is known to be met exactly.
    assert_eq!(distance_floor(1, 3).unwrap(), 28);
    assert_eq!(distance_floor(2, 3).unwrap(), 42);
    assert_eq!(distance_floor(3, 3).unwrap(), 49);
}

#[test]
fn m2_distance_chain_strictly_increases_then_saturates() {
    let c = code(2);
    let chain: Vec<u32> = (1..=15)
        .map(|b| c.min_bsymbol_distance(b).unwrap())
        .collect();
    assert_eq!(chain[..6], [6, 9, 12, 13, 14, 15]);
    for pair in chain[..6].windows(2) {
        assert!(pair[0] < pair[1]);
    }
    assert!(chain[5..].iter().all(|&d| d == 15));
}
