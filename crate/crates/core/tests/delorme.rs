mod common;

use klcat::coxeter::{CoxeterSystem, DEFAULT_ORDER_CAP};
use klcat::delorme::{
    characters_matrix, delorme_poly, delorme_table, ext_ll_table, ext_series_ll, verify_shape, verma_in_simples,
};
use klcat::kl::{kl_table, KlTable};
use num_bigint::BigInt;
use proptest::prelude::*;

fn table(ty: &str) -> KlTable {
    kl_table(&CoxeterSystem::from_type_str(ty).unwrap(), DEFAULT_ORDER_CAP).unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn rank_one_values() {
    let kl = table("A1");
    assert_eq!(delorme_poly(&kl, 0, 1).unwrap().to_i64s(), Some(vec![0, 1]));
    assert!(delorme_poly(&kl, 1, 0).unwrap().is_zero());
    let ch = characters_matrix(&kl);
    assert_eq!(ch.column(1), vec![big(-1), big(1)]);
    let vs = verma_in_simples(&kl);
    assert_eq!(vs.column(1), vec![big(1), big(1)]);
    assert_eq!(ext_series_ll(&kl, 1, 1).unwrap().to_i64s(), Some(vec![1, 0, 1]));
    assert_eq!(ext_series_ll(&kl, 0, 1).unwrap().to_i64s(), Some(vec![0, 1]));
    assert_eq!(ext_series_ll(&kl, 0, 0).unwrap().to_i64s(), Some(vec![1]));
}

#[test]
fn a2_top_entry_and_positivity() {
    let kl = table("A2");
    let top = kl.elements().len() - 1;
    assert_eq!(*characters_matrix(&kl).get(0, top), big(-1));
    for ty in ["A1", "A2", "A3"] {
        assert!(verma_in_simples(&table(ty)).all_nonnegative(), "{ty}");
    }
}

#[test]
fn shape_reports_pass() {
    for ty in common::SMALL_TYPES {
        let report = verify_shape(&table(ty));
        assert!(report.passed(), "{ty}: {report:?}");
    }
}

#[test]
fn tables_match_reference() {
    for ty in ["A2", "B2", "A3", "G2"] {
        let kl = table(ty);
        let t = kl.elements();
        let p = common::kl_table(t);
        let a = delorme_table(&kl).unwrap();
        let ext = ext_ll_table(&kl).unwrap();
        for x in 0..t.len() {
            for y in 0..t.len() {
                assert_eq!(a[x][y].to_i64s().unwrap(), common::delorme(t, &p, x, y), "{ty}");
                assert_eq!(ext[x][y].to_i64s().unwrap(), common::ext_ll(t, &p, x, y), "{ty}");
            }
        }
    }
}

fn b3() -> &'static (KlTable, Vec<Vec<klcat::poly::IntPoly>>) {
    static T: std::sync::OnceLock<(KlTable, Vec<Vec<klcat::poly::IntPoly>>)> = std::sync::OnceLock::new();
    T.get_or_init(|| {
        let kl = table("B3");
        let ext = ext_ll_table(&kl).unwrap();
        (kl, ext)
    })
}

proptest! {
    #[test]
    fn delorme_evaluations(x in 0usize..48, y in 0usize..48) {
        let (kl, _) = b3();
        let t = kl.elements();
        let a = delorme_poly(kl, x, y).unwrap();
        let p1 = kl.p(x, y).eval_i64(1);
        prop_assert_eq!(a.eval_i64(1), p1.clone());
        let gap = t.length(y) as i64 - t.length(x) as i64;
        let sign = if gap.rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(a.eval_i64(-1), p1 * sign);
        prop_assert!(a.has_nonnegative_coeffs());
        if x != y && !a.is_zero() {
            prop_assert!(a.support().all(|k| k > 0 && (k as i64 - gap) % 2 == 0 && k as i64 <= gap));
        }
    }

    #[test]
    fn ext_table_properties(x in 0usize..48, y in 0usize..48) {
        let (kl, ext) = b3();
        prop_assert_eq!(&ext[x][y], &ext[y][x]);
        prop_assert_eq!(ext[x][y].coeff(0) == big(1), x == y);
        prop_assert!(ext[x][y].has_nonnegative_coeffs());
        prop_assert_eq!(&ext[0][y], &delorme_poly(kl, 0, y).unwrap());
        prop_assert_eq!(&ext_series_ll(kl, x, y).unwrap(), &ext[x][y]);
    }
}
