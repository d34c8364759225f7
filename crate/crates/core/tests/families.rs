use qhp_core::dpd::{self, FamilyParams};
use qhp_core::families::*;

const TABLE_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/classification.json");

#[test]
fn classification_data_file_matches_table() {
    let generated = serde_json::to_string_pretty(&classification_table()).unwrap() + "\n";
    if std::env::var_os("QHP_BLESS").is_some() {
        std::fs::write(TABLE_PATH, &generated).unwrap();
    }
    let shipped = std::fs::read_to_string(TABLE_PATH).expect("data/classification.json present");
    assert_eq!(shipped, generated, "rerun with QHP_BLESS=1 to regenerate");
}

#[test]
fn fixtures_cross_check() {
    for f in fixtures() {
        let c = crosscheck_fixture(&f).unwrap();
        assert!(c.agree, "{}: {:?}", f.params, c.diagnostics);
    }
}

#[test]
fn chain_over_zero_for_many_n() {
    for n in 2..=8u64 {
        for a in 0..=3 {
            let s = build_construction(a, &cross_fiber_word(n), &fixtures()[0].word1).unwrap();
            let mut expected = vec![-(n as i64), -1];
            expected.extend(std::iter::repeat_n(-2, n as usize - 1));
            assert_eq!(s.fiber0_weights, expected);
            assert_eq!(s.n, n);
            assert_eq!(s.multiplicity_of(&s.gamma), Some(1));
            assert_eq!(s.gamma_dot_e0, 1);
            assert!(s.q_acyclic);
            let report = dpd::report(&dpd::construction_spec(FamilyParams::new(1, 2, n).unwrap()));
            assert!(crosscheck(&s, &report).agree);
        }
    }
}

#[test]
fn bertin_range() {
    for d in 1..=9 {
        let r = bertin_report(BertinParams::new(d, 1).unwrap()).unwrap();
        assert!(r.agrees, "d = {d}");
    }
}

#[test]
fn weighted_homogeneity() {
    for k in 2..=9u32 {
        for l in (k + 1)..=9 {
            match singular_line(k, l) {
                Ok(s) => {
                    assert_eq!(
                        weighted_degrees(&curve_polynomial(k, l), l.into(), k.into()),
                        vec![s.weight; 2]
                    );
                    assert_eq!(s.mu % 2, 0);
                }
                Err(_) => assert_ne!(num_integer::gcd(k, l), 1),
            }
        }
    }
}
