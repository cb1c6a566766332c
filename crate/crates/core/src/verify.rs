//! Exhaustive verification suites over a full KL table.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::delorme::{characters_matrix, verify_shape, PropertyVerdict, TransitionMatrix, Witness};
use crate::kl::{kl_oracle, DescentPolicy, KlTable, RTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Descent recursion against the bar-invariance solve.
    Oracle,
    /// Shape properties of the KL and Delorme polynomials.
    Thm4,
    /// Verma/simple transition matrices and KL inversion.
    Inversion,
    /// Independence of the table from the choice of descent.
    Choice,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Oracle, Suite::Thm4, Suite::Inversion, Suite::Choice];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "oracle" => Ok(Suite::Oracle),
            "thm4" => Ok(Suite::Thm4),
            "inversion" => Ok(Suite::Inversion),
            "choice" => Ok(Suite::Choice),
            other => Err(format!("unknown suite {other:?} (expected oracle, thm4, inversion or choice)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Oracle => "oracle",
            Suite::Thm4 => "thm4",
            Suite::Inversion => "inversion",
            Suite::Choice => "choice",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub properties: Vec<PropertyVerdict>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

pub fn run_suite(suite: Suite, kl: &KlTable) -> SuiteReport {
    let properties = match suite {
        Suite::Oracle => vec![oracle(kl)],
        Suite::Thm4 => verify_shape(kl).properties,
        Suite::Inversion => inversion(kl),
        Suite::Choice => choice(kl),
    };
    SuiteReport { suite, properties }
}

fn witness(kl: &KlTable, x: usize, y: usize, detail: String) -> Witness {
    let t = kl.elements();
    Witness {
        x: t.word(x).to_string(),
        y: t.word(y).to_string(),
        detail,
    }
}

fn oracle(kl: &KlTable) -> PropertyVerdict {
    let t = kl.elements();
    let r = RTable::build(t.clone());
    let mut v = PropertyVerdict::new("recursion equals bar-invariance solve");
    for y in 0..t.len() {
        match kl_oracle(t, &r, y) {
            Ok(col) => {
                let mut expected = vec![None; t.len()];
                for (x, p) in col {
                    expected[x] = Some(p);
                }
                for (x, e) in expected.into_iter().enumerate() {
                    let got = kl.p(x, y);
                    let ok = match &e {
                        Some(p) => p == got,
                        None => got.is_zero(),
                    };
                    v.record(ok, || {
                        let e = e.map_or_else(|| "0".to_string(), |p| p.to_string());
                        witness(kl, x, y, format!("recursion {got}, oracle {e}"))
                    });
                }
            }
            Err(err) => v.record(false, || witness(kl, y, y, err.to_string())),
        }
    }
    v
}

/// Index of `w0 * x` for every `x`.
fn w0_times(kl: &KlTable) -> Vec<usize> {
    let t = kl.elements();
    let sys = t.system();
    let w0 = sys.longest_element();
    (0..t.len())
        .map(|x| {
            let w = sys.multiply(&w0, t.element(x)).expect("same system");
            t.index_of(&w).expect("full table contains every element")
        })
        .collect()
}

fn compare_matrix(
    kl: &KlTable,
    v: &mut PropertyVerdict,
    got: &TransitionMatrix,
    expected: impl Fn(usize, usize) -> BigInt,
) {
    let n = got.size();
    for x in 0..n {
        for y in 0..n {
            let e = expected(x, y);
            let g = got.get(x, y);
            v.record(*g == e, || witness(kl, x, y, format!("got {g}, expected {e}")));
        }
    }
}

fn inversion(kl: &KlTable) -> Vec<PropertyVerdict> {
    let t = kl.elements();
    let n = t.len();
    let ch = characters_matrix(kl);
    let mut tri = PropertyVerdict::new("characters matrix is upper unitriangular");
    tri.record(ch.is_upper_unitriangular(), || witness(kl, 0, 0, "not unitriangular".into()));
    let mut products = PropertyVerdict::new("characters matrix times its inverse is the identity, both sides");
    let mut kl_inverse = PropertyVerdict::new("inverse entry (x, y) equals P_{w0 y, w0 x}(1)");
    let mut signed = PropertyVerdict::new("(-1)^(l(y)-l(x)) P_{w0 y, w0 x}(1) inverts [P_{x,y}(1)]");
    let mut double = PropertyVerdict::new("inverting twice gives the characters matrix back");
    let Some(inv) = ch.unitriangular_inverse() else {
        return vec![tri];
    };
    products.record(ch.mul(&inv).is_identity(), || witness(kl, 0, 0, "C * C^-1 != I".into()));
    products.record(inv.mul(&ch).is_identity(), || witness(kl, 0, 0, "C^-1 * C != I".into()));
    double.record(inv.unitriangular_inverse().as_ref() == Some(&ch), || {
        witness(kl, 0, 0, "double inverse differs".into())
    });

    let w0x = w0_times(kl);
    let p1 = |x: usize, y: usize| kl.p(x, y).eval_i64(1);
    compare_matrix(kl, &mut kl_inverse, &inv, |x, y| p1(w0x[y], w0x[x]));

    let labels = t.words().to_vec();
    let unsigned = TransitionMatrix::new(
        labels.clone(),
        (0..n).map(|x| (0..n).map(|y| p1(x, y)).collect()).collect(),
    );
    let signed_inv = TransitionMatrix::new(
        labels,
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let v = p1(w0x[y], w0x[x]);
                        if v.is_zero() || (t.length(y) as i64 - t.length(x) as i64) % 2 == 0 {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect(),
    );
    signed.record(unsigned.mul(&signed_inv).is_identity(), || {
        witness(kl, 0, 0, "product is not the identity".into())
    });
    vec![tri, products, kl_inverse, signed, double]
}

fn choice(kl: &KlTable) -> Vec<PropertyVerdict> {
    let t = kl.elements();
    DescentPolicy::ALL
        .iter()
        .filter(|&&p| p != kl.policy())
        .map(|&policy| {
            let mut v = PropertyVerdict::new(&format!("{policy} descent gives the same table"));
            match KlTable::build_with(t.clone(), policy) {
                Ok(other) => {
                    for y in 0..t.len() {
                        for x in 0..t.len() {
                            let (a, b) = (kl.p(x, y), other.p(x, y));
                            v.record(a == b, || witness(kl, x, y, format!("{a} versus {b}")));
                        }
                    }
                }
                Err(e) => v.record(false, || witness(kl, 0, 0, e.to_string())),
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterSystem, DEFAULT_ORDER_CAP};
    use crate::kl::kl_table;

    #[test]
    fn all_suites_pass_on_small_types() {
        for ty in ["A1", "A2", "B2", "A1xA1"] {
            let kl = kl_table(&CoxeterSystem::from_type_str(ty).unwrap(), DEFAULT_ORDER_CAP).unwrap();
            for suite in Suite::ALL {
                let r = run_suite(suite, &kl);
                assert!(r.passed(), "{ty} {suite}: {r:?}");
                assert!(r.properties.iter().all(|p| p.checked > 0));
            }
        }
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
