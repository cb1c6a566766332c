use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use super::based::BasedAlgebra;
use super::linalg::{solve, LinearSolution, QMatrix, Subspace, Q};
use super::module::{bar_m, end_algebra, std_quotient, std_submodule, FDModule};
use super::resolution::{order_from_resolutions, resolve, ProjResolution, VertexOrder};
use crate::poly::IntPoly;

/// Affine solution set of `sum_k d_k a_ki a_kj = ext_ij` for `deg d_k <= deg_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DkSolution {
    Inconsistent {
        deg_cap: usize,
    },
    Solutions {
        deg_cap: usize,
        /// Coefficients of each `d_k`, lowest degree first.
        particular: Vec<Vec<Q>>,
        null_space: Vec<Vec<Vec<Q>>>,
    },
}

impl DkSolution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, DkSolution::Solutions { .. })
    }

    pub fn nullity(&self) -> usize {
        match self {
            DkSolution::Inconsistent { .. } => 0,
            DkSolution::Solutions { null_space, .. } => null_space.len(),
        }
    }

    /// Whether the given integral polynomials form a solution of degree at most the cap.
    pub fn contains(&self, d: &[IntPoly]) -> bool {
        let DkSolution::Solutions {
            deg_cap,
            particular,
            null_space,
        } = self
        else {
            return false;
        };
        if d.len() != particular.len() || d.iter().any(|p| p.degree().is_some_and(|g| g > *deg_cap)) {
            return false;
        }
        let width = deg_cap + 1;
        let flat = |polys: &[Vec<Q>]| -> Vec<Q> { polys.iter().flatten().cloned().collect() };
        let mut diff = Vec::with_capacity(d.len() * width);
        for (p, part) in d.iter().zip(particular) {
            for (m, base) in part.iter().enumerate() {
                diff.push(Q::from_integer(p.coeff(m)) - base);
            }
        }
        Subspace::from_vectors(d.len() * width, null_space.iter().map(|v| flat(v))).contains(&diff)
    }

    pub fn to_json(&self) -> Value {
        let polys = |v: &Vec<Vec<Q>>| -> Value {
            Value::Array(
                v.iter()
                    .map(|p| Value::Array(p.iter().map(|c| Value::String(c.to_string())).collect()))
                    .collect(),
            )
        };
        match self {
            DkSolution::Inconsistent { deg_cap } => json!({"consistent": false, "degCap": deg_cap}),
            DkSolution::Solutions {
                deg_cap,
                particular,
                null_space,
            } => json!({
                "consistent": true,
                "degCap": deg_cap,
                "particular": polys(particular),
                "nullity": null_space.len(),
                "nullSpace": null_space.iter().map(polys).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Solves `sum_k d_k a_ki a_kj = ext_ij` coefficientwise over the rationals.
///
/// `deg_cap` defaults to the largest degree in `ext_table`.
pub fn solve_dk(a_table: &[Vec<IntPoly>], ext_table: &[Vec<IntPoly>], deg_cap: Option<usize>) -> DkSolution {
    let n = a_table.len();
    assert!(a_table.iter().all(|r| r.len() == n), "a table must be square");
    assert!(
        ext_table.len() == n && ext_table.iter().all(|r| r.len() == n),
        "ext table must match the a table"
    );
    let deg_cap = deg_cap.unwrap_or_else(|| {
        ext_table
            .iter()
            .flatten()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    });
    let width = deg_cap + 1;
    let unknowns = n * width;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let products: Vec<IntPoly> = (0..n).map(|k| &a_table[k][i] * &a_table[k][j]).collect();
            let top = products
                .iter()
                .filter_map(IntPoly::degree)
                .map(|g| g + deg_cap)
                .chain(ext_table[i][j].degree())
                .max();
            let Some(top) = top else { continue };
            for e in 0..=top {
                let mut row = vec![Q::zero(); unknowns];
                for (k, prod) in products.iter().enumerate() {
                    for m in 0..width.min(e + 1) {
                        let c = prod.coeff(e - m);
                        if !c.is_zero() {
                            row[k * width + m] = Q::from_integer(c);
                        }
                    }
                }
                rows.push(row);
                rhs.push(Q::from_integer(ext_table[i][j].coeff(e)));
            }
        }
    }
    let mut a = QMatrix::zeros(rows.len(), unknowns);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            if !v.is_zero() {
                a.set(r, c, v);
            }
        }
    }
    let split = |v: Vec<Q>| -> Vec<Vec<Q>> { v.chunks(width).map(<[Q]>::to_vec).collect() };
    match solve(&a, &rhs) {
        LinearSolution::Inconsistent => DkSolution::Inconsistent { deg_cap },
        LinearSolution::Affine {
            particular,
            null_space,
        } => DkSolution::Solutions {
            deg_cap,
            particular: split(particular),
            null_space: null_space.into_iter().map(split).collect(),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureVerdict {
    pub conjecture: u8,
    pub status: Status,
    pub checked: usize,
    pub witnesses: Vec<String>,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub applicable: bool,
    pub note: Option<String>,
    pub vertices: Vec<String>,
    pub dimension: usize,
    pub projective_dimensions: Option<Vec<usize>>,
    /// Pairs `(i, j)` with `i < j` in the derived order, as vertex names.
    pub order: Option<Vec<(String, String)>>,
    pub verdicts: Vec<ConjectureVerdict>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.applicable && self.verdicts.iter().all(|v| v.status == Status::Pass)
    }

    pub fn verdict(&self, conjecture: u8) -> Option<&ConjectureVerdict> {
        self.verdicts.iter().find(|v| v.conjecture == conjecture)
    }
}

fn verdict(conjecture: u8, checked: usize, witnesses: Vec<String>, detail: Value) -> ConjectureVerdict {
    ConjectureVerdict {
        conjecture,
        status: if witnesses.is_empty() { Status::Pass } else { Status::Fail },
        checked,
        witnesses,
        detail,
    }
}

fn inapplicable(conjecture: u8, why: &str) -> ConjectureVerdict {
    ConjectureVerdict {
        conjecture,
        status: Status::Inapplicable,
        checked: 0,
        witnesses: Vec::new(),
        detail: json!({ "reason": why }),
    }
}

fn poly_json(p: &IntPoly) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

/// Runs the requested checks (all of 1 to 5 when `which` is empty).
///
/// Resolutions are computed up to `cap` terms; a truncated one makes the
/// checks that depend on it inapplicable.
pub fn check_conjectures(alg: &BasedAlgebra, which: &[u8], cap: usize) -> ConjectureReport {
    let wanted: Vec<u8> = if which.is_empty() {
        vec![1, 2, 3, 4, 5]
    } else {
        let mut w: Vec<u8> = which.iter().copied().filter(|c| (1..=5).contains(c)).collect();
        w.sort_unstable();
        w.dedup();
        w
    };
    let names = alg.presentation().vertices().to_vec();
    let n = alg.vertex_count();
    let mut report = ConjectureReport {
        applicable: true,
        note: None,
        vertices: names.clone(),
        dimension: alg.dimension(),
        projective_dimensions: None,
        order: None,
        verdicts: Vec::new(),
    };

    let simples: Vec<ProjResolution> = (0..n)
        .map(|i| resolve(alg, &FDModule::simple(alg, i).expect("vertex in range"), cap))
        .collect();
    if let Some(i) = simples.iter().position(|r| r.truncated) {
        let why = format!(
            "the resolution of the simple module at {:?} did not terminate within {cap} steps",
            names[i]
        );
        report.applicable = false;
        report.verdicts = wanted.iter().map(|&c| inapplicable(c, &why)).collect();
        report.note = Some(why);
        return report;
    }
    let (pd, order) = order_from_resolutions(&simples);
    report.projective_dimensions = Some(pd.clone());
    report.order = Some(
        order
            .strict_pairs()
            .into_iter()
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect(),
    );

    let m: Vec<FDModule> = (0..n)
        .map(|i| {
            let s: Vec<usize> = (0..n).filter(|&j| !order.leq(j, i)).collect();
            std_quotient(alg, i, &s).expect("vertices in range")
        })
        .collect();
    let m_res: Vec<ProjResolution> = m.iter().map(|mi| resolve(alg, mi, cap)).collect();
    let a_table: Option<Vec<Vec<IntPoly>>> = if m_res.iter().any(|r| r.truncated) {
        None
    } else {
        Some(
            m_res
                .iter()
                .map(|r| (0..n).map(|j| r.series(j)).collect())
                .collect(),
        )
    };
    let bars: Vec<FDModule> = (0..n)
        .map(|i| bar_m(alg, i, &order).expect("vertex in range"))
        .collect();
    let a_missing = "a resolution of a standard quotient did not terminate";

    for &c in &wanted {
        let v = match c {
            1 => conjecture_1(alg, &order, &names),
            2 => conjecture_2(&bars, &names),
            3 => match &a_table {
                Some(a) => conjecture_3(a, &bars, &names),
                None => inapplicable(3, a_missing),
            },
            4 => match &a_table {
                Some(a) => conjecture_4(a, &pd, &order, &names),
                None => inapplicable(4, a_missing),
            },
            _ => match &a_table {
                Some(a) => {
                    let ext: Vec<Vec<IntPoly>> = simples
                        .iter()
                        .map(|r| (0..n).map(|j| r.series(j)).collect())
                        .collect();
                    conjecture_5(a, &ext)
                }
                None => inapplicable(5, a_missing),
            },
        };
        report.verdicts.push(v);
    }
    report
}

fn conjecture_1(alg: &BasedAlgebra, order: &VertexOrder, names: &[String]) -> ConjectureVerdict {
    let n = alg.vertex_count();
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for i in 0..n {
        let not_below: Vec<usize> = (0..n).filter(|&j| !order.leq(j, i)).collect();
        let above: Vec<usize> = (0..n).filter(|&j| order.lt(i, j)).collect();
        let (_, u) = std_submodule(alg, i, &not_below).expect("vertices in range");
        let (_, w) = std_submodule(alg, i, &above).expect("vertices in range");
        let (du, dw) = (u.dims().iter().sum::<usize>(), w.dims().iter().sum::<usize>());
        let equal = u.contains(&w) && w.contains(&u);
        if !equal {
            witnesses.push(format!(
                "at {:?}: ideal over j not<= i has dimension {du}, ideal over j > i has dimension {dw}",
                names[i]
            ));
        }
        rows.push(json!({"vertex": names[i], "dimNotBelow": du, "dimAbove": dw, "equal": equal}));
    }
    verdict(1, n, witnesses, Value::Array(rows))
}

fn conjecture_2(bars: &[FDModule], names: &[String]) -> ConjectureVerdict {
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for (i, b) in bars.iter().enumerate() {
        let end = end_algebra(b);
        if end.dimension() != 1 {
            witnesses.push(format!(
                "End of bar M at {:?} has dimension {}",
                names[i],
                end.dimension()
            ));
        }
        rows.push(json!({
            "vertex": names[i],
            "barMDims": b.dims(),
            "endDimension": end.dimension(),
            "radicalDimension": end.radical_dimension(),
        }));
    }
    verdict(2, bars.len(), witnesses, Value::Array(rows))
}

fn conjecture_3(a: &[Vec<IntPoly>], bars: &[FDModule], names: &[String]) -> ConjectureVerdict {
    let n = bars.len();
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for j in 0..n {
        let mut residual: Vec<BigInt> = (0..n).map(|v| BigInt::from(usize::from(v == j))).collect();
        for (i, b) in bars.iter().enumerate() {
            let w = a[i][j].eval_i64(-1);
            for (r, d) in residual.iter_mut().zip(b.dims()) {
                *r -= &w * BigInt::from(*d);
            }
        }
        let ok = residual.iter().all(Zero::is_zero);
        if !ok {
            witnesses.push(format!(
                "at {:?}: residual {:?}",
                names[j],
                residual.iter().map(ToString::to_string).collect::<Vec<_>>()
            ));
        }
        rows.push(json!({
            "vertex": names[j],
            "residual": residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    verdict(3, n, witnesses, Value::Array(rows))
}

fn conjecture_4(a: &[Vec<IntPoly>], ell: &[usize], order: &VertexOrder, names: &[String]) -> ConjectureVerdict {
    let n = a.len();
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            let p = &a[i][j];
            let gap = ell[j] as i64 - ell[i] as i64;
            let mut fail = |what: &str| {
                witnesses.push(format!("a({:?}, {:?}) = {p}: {what}", names[i], names[j]));
            };
            let support: Vec<usize> = p.support().collect();
            if support.iter().any(|&e| (e as i64 - gap) % 2 != 0 || e as i64 > gap) {
                fail("not of the form t^(l(j)-l(i)) p(t^-2)");
            }
            let top_is_one = gap >= 0 && p.coeff(gap as usize).is_one();
            let nonzero = !p.is_zero();
            let below = order.leq(i, j);
            if nonzero != below || top_is_one != below {
                fail("nonzero, i <= j and p(0) = 1 are not equivalent");
            }
            if i == j && !p.is_one() {
                fail("diagonal entry is not 1");
            }
            if order.lt(i, j) && support.first() == Some(&0) {
                fail("degree bound fails: constant term is nonzero for i < j");
            }
            row.push(poly_json(p));
        }
        table.push(Value::Array(row));
    }
    verdict(4, n * n, witnesses, json!({ "a": table, "ell": ell }))
}

fn conjecture_5(a: &[Vec<IntPoly>], ext: &[Vec<IntPoly>]) -> ConjectureVerdict {
    let n = a.len();
    let sol = solve_dk(a, ext, None);
    let ones = vec![IntPoly::one(); n];
    let mut detail = sol.to_json();
    detail["onesIsSolution"] = Value::Bool(sol.contains(&ones));
    detail["ext"] = Value::Array(
        ext.iter()
            .map(|r| Value::Array(r.iter().map(poly_json).collect()))
            .collect(),
    );
    let witnesses = if sol.is_consistent() {
        Vec::new()
    } else {
        vec!["no polynomials d_k solve the system".to_string()]
    };
    verdict(5, n * n, witnesses, detail)
}
