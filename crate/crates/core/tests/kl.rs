mod common;

use std::sync::Arc;

use klcat::coxeter::{CoxeterSystem, ReducedWord, DEFAULT_ORDER_CAP};
use klcat::kl::{kl_polynomial, kl_table, mu, r_polynomial, DescentPolicy, KlTable, RTable};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn r_polynomials_match_reference() {
    for ty in common::SMALL_TYPES {
        let t = Arc::new(common::full_table(ty));
        let lib = RTable::build(t.clone());
        let oracle = common::r_table(&t);
        for x in 0..t.len() {
            for y in 0..t.len() {
                let r = lib.r(x, y);
                assert_eq!(r.to_i64s().unwrap(), oracle[x][y], "{ty} ({x}, {y})");
                if t.leq(x, y) {
                    let d = t.length(y) - t.length(x);
                    assert_eq!(r.degree(), Some(d));
                    assert_eq!(r.coeff(d), BigInt::from(1));
                    assert_eq!(r.coeff(0), BigInt::from(if d % 2 == 0 { 1 } else { -1 }));
                } else {
                    assert!(r.is_zero());
                }
            }
        }
    }
}

#[test]
fn every_descent_policy_gives_the_same_table() {
    for ty in ["A3", "B3", "G2", "A1xA2"] {
        let t = Arc::new(common::full_table(ty));
        let tables: Vec<KlTable> = DescentPolicy::ALL
            .iter()
            .map(|&p| KlTable::build_with(t.clone(), p).unwrap())
            .collect();
        for other in &tables[1..] {
            for x in 0..t.len() {
                for y in 0..t.len() {
                    assert_eq!(tables[0].p(x, y), other.p(x, y), "{ty} {}", other.policy());
                }
            }
        }
    }
}

#[test]
fn known_polynomials() {
    let a3 = CoxeterSystem::from_type_str("A3").unwrap();
    let word = |s: &str| a3.from_word(&s.parse().unwrap()).unwrap();
    assert_eq!(kl_polynomial(&a3, &word("2"), &word("2 1 3 2")).unwrap().to_i64s(), Some(vec![1, 1]));
    assert_eq!(kl_polynomial(&a3, &word(""), &word("2 1 3 2")).unwrap().to_i64s(), Some(vec![1, 1]));
    assert_eq!(kl_polynomial(&a3, &word("1"), &word("2")).unwrap().to_i64s(), Some(vec![]));
    assert_eq!(mu(&a3, &word("2"), &word("2 1 3 2")).unwrap(), BigInt::from(1));
    let a1 = CoxeterSystem::from_type_str("A1").unwrap();
    let s = a1.from_word(&ReducedWord(vec![1])).unwrap();
    assert_eq!(r_polynomial(&a1, &a1.identity(), &s).unwrap().to_i64s(), Some(vec![-1, 1]));
}

#[test]
fn larger_tables_match_reference() {
    for ty in ["A4", "B2xG2", "D4"] {
        let kl = kl_table(&CoxeterSystem::from_type_str(ty).unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let oracle = common::kl_table(kl.elements());
        for (x, row) in oracle.iter().enumerate() {
            for (y, p) in row.iter().enumerate() {
                assert_eq!(&kl.p(x, y).to_i64s().unwrap(), p, "{ty} ({x}, {y})");
            }
        }
    }
}

#[test]
fn table_cap_is_enforced() {
    assert!(kl_table(&CoxeterSystem::from_type_str("E8").unwrap(), DEFAULT_ORDER_CAP).is_err());
    assert!(kl_table(&CoxeterSystem::from_type_str("A3").unwrap(), 23).is_err());
}

fn b3() -> &'static KlTable {
    static T: std::sync::OnceLock<KlTable> = std::sync::OnceLock::new();
    T.get_or_init(|| kl_table(&CoxeterSystem::from_type_str("B3").unwrap(), DEFAULT_ORDER_CAP).unwrap())
}

proptest! {
    #[test]
    fn single_pairs_agree_with_the_table(x in 0usize..48, y in 0usize..48) {
        let kl = b3();
        let t = kl.elements();
        let sys = t.system();
        let p = kl_polynomial(sys, t.element(x), t.element(y)).unwrap();
        prop_assert_eq!(&p, kl.p(x, y));
    }

    #[test]
    fn table_properties(x in 0usize..48, y in 0usize..48) {
        let kl = b3();
        let t = kl.elements();
        let p = kl.p(x, y);
        prop_assert!(p.has_nonnegative_coeffs());
        if t.leq(x, y) && x != y {
            let gap = t.length(y) - t.length(x);
            prop_assert!(2 * p.degree().unwrap() < gap);
            let m = kl.mu(x, y);
            let expected = if gap % 2 == 1 { p.coeff((gap - 1) / 2) } else { BigInt::from(0) };
            prop_assert_eq!(m, expected);
        }
        let sys = t.system();
        let xi = t.index_of(&sys.inverse(t.element(x))).unwrap();
        let yi = t.index_of(&sys.inverse(t.element(y))).unwrap();
        prop_assert_eq!(kl.p(xi, yi), p);
    }
}
