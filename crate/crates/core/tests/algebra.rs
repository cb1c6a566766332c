mod common;

use klcat::algebra::{
    ext_series, projective_dimension, resolve, std_quotient, AlgebraError, AlgebraPresentation, BasedAlgebra,
    FDModule, DEFAULT_RESOLUTION_CAP,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::json;

fn euler_characteristic_holds(alg: &BasedAlgebra, m: &FDModule, cap: usize) -> Result<(), TestCaseError> {
    let res = resolve(alg, m, cap);
    prop_assert!(res.is_complex());
    prop_assert!(res.is_minimal());
    for j in 0..alg.vertex_count() {
        prop_assert_eq!(res.series(j).coeff(0), BigInt::from(m.top_dims()[j]));
    }
    if !res.truncated {
        prop_assert!(res.is_exact(m));
        let mut acc = vec![0i64; alg.vertex_count()];
        for (k, dims) in res.term_dims().iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for (a, d) in acc.iter_mut().zip(dims) {
                *a += sign * *d as i64;
            }
        }
        let expected: Vec<i64> = m.dims().iter().map(|&d| d as i64).collect();
        prop_assert_eq!(acc, expected);
    }
    Ok(())
}

fn module_invariants(alg: &BasedAlgebra, cap: usize) -> Result<(), TestCaseError> {
    let n = alg.vertex_count();
    let total: usize = (0..n).map(|j| FDModule::projective(alg, j).unwrap().total_dim()).sum();
    prop_assert_eq!(total, alg.dimension());
    for i in 0..n {
        let p = FDModule::projective(alg, i).unwrap();
        for j in 0..n {
            let e = ext_series(alg, &p, j, cap).unwrap();
            prop_assert_eq!(e.to_i64s().unwrap(), if i == j { vec![1] } else { vec![] });
        }
        euler_characteristic_holds(alg, &FDModule::simple(alg, i).unwrap(), cap)?;
        let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        euler_characteristic_holds(alg, &std_quotient(alg, i, &others).unwrap(), cap)?;
    }
    Ok(())
}

#[test]
fn presets_satisfy_module_invariants() {
    let sl2 = BasedAlgebra::build(AlgebraPresentation::sl2()).unwrap();
    module_invariants(&sl2, DEFAULT_RESOLUTION_CAP).unwrap();
    module_invariants(&BasedAlgebra::build(AlgebraPresentation::semisimple(3)).unwrap(), 4).unwrap();
    module_invariants(&BasedAlgebra::build(AlgebraPresentation::dual_numbers()).unwrap(), 5).unwrap();
}

#[test]
fn data_files_match_presets() {
    let sl2 = AlgebraPresentation::from_json(&common::data_file("sl2.json")).unwrap();
    assert_eq!(sl2, AlgebraPresentation::sl2());
    let dual = AlgebraPresentation::from_json(&common::data_file("loop_x2.json")).unwrap();
    assert_eq!(dual, AlgebraPresentation::dual_numbers());
    let semi = BasedAlgebra::from_json(&common::data_file("semisimple.json")).unwrap();
    assert_eq!(semi.dimension(), semi.vertex_count());
    for p in [sl2, dual] {
        assert_eq!(AlgebraPresentation::from_json(&p.to_json()).unwrap(), p);
    }
}

#[test]
fn sl2_structure() {
    let alg = BasedAlgebra::build(AlgebraPresentation::sl2()).unwrap();
    assert_eq!(alg.dimension(), 5);
    assert_eq!(alg.degree_dims(), vec![2, 2, 1]);
    assert_eq!(FDModule::projective(&alg, 0).unwrap().dims(), &[2, 1]);
    assert_eq!(FDModule::projective(&alg, 1).unwrap().dims(), &[1, 1]);
    assert_eq!(projective_dimension(&alg, 0, 20).unwrap(), 1);
    assert_eq!(projective_dimension(&alg, 1, 20).unwrap(), 2);
}

#[test]
fn infinite_resolutions_are_reported() {
    let alg = BasedAlgebra::build(AlgebraPresentation::dual_numbers()).unwrap();
    assert_eq!(alg.dimension(), 2);
    let res = resolve(&alg, &FDModule::simple(&alg, 0).unwrap(), 6);
    assert!(res.truncated);
    assert_eq!(res.terms.len(), 7);
    assert!(matches!(
        projective_dimension(&alg, 0, 6),
        Err(AlgebraError::ResolutionTruncated { cap: 6 })
    ));
}

#[test]
fn rejects_bad_presentations() {
    let bad = [
        r#"{"vertices": ["a", "a"]}"#,
        r#"{"vertices": ["a"], "arrows": [{"name": "x", "from": "a", "to": "b"}]}"#,
        r#"{"vertices": ["a"], "arrows": [{"name": "x", "from": "a", "to": "a"}],
            "relations": [[{"coeff": 1, "path": ["x"]}, {"coeff": 1, "path": ["x", "x"]}]]}"#,
        r#"{"vertices": ["a"], "extra": 1}"#,
        r#"{"vertices": ["a", "b"], "arrows": [{"name": "x", "from": "a", "to": "b"}, {"name": "y", "from": "a", "to": "b"}],
            "relations": [[{"coeff": "1/0", "path": ["x"]}]]}"#,
    ];
    for text in bad {
        assert!(AlgebraPresentation::from_json(text).is_err(), "{text}");
    }
    let infinite = r#"{"vertices": ["a"], "arrows": [{"name": "x", "from": "a", "to": "a"}]}"#;
    assert!(matches!(
        BasedAlgebra::from_json(infinite),
        Err(AlgebraError::NotFiniteDimensional { .. })
    ));
}

/// Quivers on up to three vertices where every path of length `kill` is
/// zero, together with a random set of zeroed paths of length two and one
/// random commutativity relation.
fn random_algebra() -> impl Strategy<Value = String> {
    (1usize..=3)
        .prop_flat_map(|n| {
            let arrows = prop::collection::vec((0..n, 0..n), 1..=3);
            (Just(n), arrows, 2usize..=3, prop::collection::vec(any::<bool>(), 16), any::<bool>())
        })
        .prop_map(|(n, arrows, kill, zero_mask, commute)| {
            let names: Vec<String> = (0..arrows.len()).map(|k| format!("x{k}")).collect();
            let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut paths2 = Vec::new();
            for (a, &(_, ta)) in arrows.iter().enumerate() {
                for (b, &(fb, _)) in arrows.iter().enumerate() {
                    if ta == fb {
                        paths2.push(vec![a, b]);
                    }
                }
            }
            let mut all = vec![Vec::new()];
            for _ in 0..kill {
                let mut longer = Vec::new();
                for p in &all {
                    for (a, &(from, _)) in arrows.iter().enumerate() {
                        if p.last().is_none_or(|&l: &usize| arrows[l].1 == from) {
                            let mut q: Vec<usize> = p.clone();
                            q.push(a);
                            longer.push(q);
                        }
                    }
                }
                all = longer;
            }
            let path = |p: &[usize]| p.iter().map(|&a| names[a].clone()).collect::<Vec<_>>();
            let mut relations: Vec<serde_json::Value> =
                all.iter().map(|p| json!([{"coeff": 1, "path": path(p)}])).collect();
            for (k, p) in paths2.iter().enumerate() {
                if zero_mask[k % zero_mask.len()] {
                    relations.push(json!([{"coeff": 1, "path": path(p)}]));
                }
            }
            if commute {
                let ends = |p: &Vec<usize>| (arrows[p[0]].0, arrows[p[1]].1);
                if let Some((p, q)) = paths2
                    .iter()
                    .enumerate()
                    .flat_map(|(i, p)| paths2[i + 1..].iter().map(move |q| (p, q)))
                    .find(|(p, q)| ends(p) == ends(q))
                {
                    relations.push(json!([{"coeff": 1, "path": path(p)}, {"coeff": "-2/3", "path": path(q)}]));
                }
            }
            json!({
                "vertices": vertices,
                "arrows": arrows.iter().zip(&names).map(|(&(f, t), nm)| json!({"name": nm, "from": format!("v{f}"), "to": format!("v{t}")})).collect::<Vec<_>>(),
                "relations": relations,
            })
            .to_string()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_algebras_satisfy_module_invariants(text in random_algebra()) {
        let alg = BasedAlgebra::from_json(&text).unwrap();
        prop_assume!(alg.dimension() <= 10);
        let dims: usize = alg.degree_dims().iter().sum();
        prop_assert_eq!(dims, alg.dimension());
        module_invariants(&alg, 3)?;
    }

    #[test]
    fn multiplication_is_associative(text in random_algebra(), seed in any::<u64>()) {
        let alg = BasedAlgebra::from_json(&text).unwrap();
        let d = alg.dimension();
        let pick = |k: u64| (seed.rotate_left(k as u32 * 8) as usize) % d;
        let (a, b, c) = (alg.unit(pick(1)), alg.unit(pick(2)), alg.unit(pick(3)));
        prop_assert_eq!(alg.multiply(&alg.multiply(&a, &b), &c), alg.multiply(&a, &alg.multiply(&b, &c)));
    }
}
