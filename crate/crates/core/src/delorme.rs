//! Delorme polynomials `a_{x,y} = t^{l(y)-l(x)} P_{x,y}(t^-2)`, the
//! Verma/simple transition matrices in the Grothendieck group, the
//! `Σ_z a_{z,x} a_{z,y}` table, and structural reports on a KL table.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::ReducedWord;
use crate::kl::KlTable;
use crate::poly::{IntPoly, JsonIntRef, PolyError};

/// `a_{x,y}` from a KL table: zero unless `x <= y`.
pub fn delorme_poly(kl: &KlTable, x: usize, y: usize) -> Result<IntPoly, PolyError> {
    let t = kl.elements();
    if !t.leq(x, y) {
        return Ok(IntPoly::zero());
    }
    kl.p(x, y).twist_kl(t.length(y) - t.length(x))
}

/// All `a_{x,y}` as a dense matrix in canonical order.
pub fn delorme_table(kl: &KlTable) -> Result<Vec<Vec<IntPoly>>, PolyError> {
    let n = kl.elements().len();
    (0..n)
        .map(|x| (0..n).map(|y| delorme_poly(kl, x, y)).collect())
        .collect()
}

/// A square integer matrix with rows and columns labelled by group elements
/// in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    labels: Vec<ReducedWord>,
    entries: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn new(labels: Vec<ReducedWord>, entries: Vec<Vec<BigInt>>) -> Self {
        assert_eq!(labels.len(), entries.len());
        assert!(entries.iter().all(|r| r.len() == labels.len()));
        Self { labels, entries }
    }

    pub fn labels(&self) -> &[ReducedWord] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        self.entries.iter().map(|r| r[col].clone()).collect()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => v.is_one(),
                std::cmp::Ordering::Greater => v.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn all_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|v| !v.is_negative())
    }

    /// Exact inverse of an upper unitriangular matrix by back substitution,
    /// skipping zero entries. `None` if the matrix is not unitriangular.
    pub fn unitriangular_inverse(&self) -> Option<TransitionMatrix> {
        if !self.is_upper_unitriangular() {
            return None;
        }
        let n = self.size();
        let row_support: Vec<Vec<usize>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| (i + 1..n).filter(|&j| !row[j].is_zero()).collect())
            .collect();
        let mut inv = vec![vec![BigInt::zero(); n]; n];
        for y in 0..n {
            inv[y][y] = BigInt::one();
            for x in (0..y).rev() {
                let mut acc = BigInt::zero();
                for &z in &row_support[x] {
                    if z > y {
                        break;
                    }
                    if !inv[z][y].is_zero() {
                        acc -= &self.entries[x][z] * &inv[z][y];
                    }
                }
                inv[x][y] = acc;
            }
        }
        Some(TransitionMatrix::new(self.labels.clone(), inv))
    }

    pub fn mul(&self, rhs: &TransitionMatrix) -> TransitionMatrix {
        let n = self.size();
        assert_eq!(n, rhs.size());
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in self.entries.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.entries[k].iter().enumerate() {
                    if !b.is_zero() {
                        out[i][j] += a * b;
                    }
                }
            }
        }
        TransitionMatrix::new(self.labels.clone(), out)
    }
}

impl Serialize for TransitionMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Rows<'a>(&'a [Vec<BigInt>]);
        impl Serialize for Rows<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(|r| Row(r)))
            }
        }
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(JsonIntRef))
            }
        }
        let labels: Vec<String> = self.labels.iter().map(|w| w.to_string()).collect();
        let mut st = s.serialize_struct("TransitionMatrix", 2)?;
        st.serialize_field("labels", &labels)?;
        st.serialize_field("entries", &Rows(&self.entries))?;
        st.end()
    }
}

/// Entry `(x, y)` is `a_{x,y}(-1) = (-1)^{l(y)-l(x)} P_{x,y}(1)`: column `y`
/// writes the class of the simple module `L_y` in the Verma basis.
pub fn characters_matrix(kl: &KlTable) -> TransitionMatrix {
    let t = kl.elements();
    let n = t.len();
    let mut entries = vec![vec![BigInt::zero(); n]; n];
    for y in 0..n {
        for x in t.bruhat().below(y) {
            let v = kl.p(x, y).eval_i64(1);
            entries[x][y] = if (t.length(y) - t.length(x)) % 2 == 0 { v } else { -v };
        }
    }
    TransitionMatrix::new(t.words().to_vec(), entries)
}

/// Inverse of [`characters_matrix`]: column `x` writes the Verma class `M_x`
/// in the simple basis.
pub fn verma_in_simples(kl: &KlTable) -> TransitionMatrix {
    characters_matrix(kl)
        .unitriangular_inverse()
        .expect("canonical order refines Bruhat order, so the matrix is unitriangular")
}

/// `Σ_z a_{z,x} a_{z,y}`, summing only over `z` below both `x` and `y`.
pub fn ext_series_ll(kl: &KlTable, x: usize, y: usize) -> Result<IntPoly, PolyError> {
    let t = kl.elements();
    let mut acc = IntPoly::zero();
    for z in t.bruhat().below_both(x, y) {
        acc += &(&delorme_poly(kl, z, x)? * &delorme_poly(kl, z, y)?);
    }
    Ok(acc)
}

pub fn ext_ll_table(kl: &KlTable) -> Result<Vec<Vec<IntPoly>>, PolyError> {
    let n = kl.elements().len();
    let a = delorme_table(kl)?;
    let mut out = vec![vec![IntPoly::zero(); n]; n];
    for x in 0..n {
        for y in x..n {
            let mut acc = IntPoly::zero();
            for z in kl.elements().bruhat().below_both(x, y) {
                acc += &(&a[z][x] * &a[z][y]);
            }
            out[y][x] = acc.clone();
            out[x][y] = acc;
        }
    }
    Ok(out)
}

/// A failing pair recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: String,
    pub y: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

const MAX_WITNESSES: usize = 10;

impl PropertyVerdict {
    pub(crate) fn new(property: &str) -> Self {
        Self {
            property: property.to_string(),
            passed: true,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub properties: Vec<PropertyVerdict>,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

/// Checks, on every ordered pair of the table:
/// 1. `a_{x,y} = t^{l(y)-l(x)} P_{x,y}(t^-2)` is a polynomial whose exponents
///    have the parity of `l(y)-l(x)` and whose coefficients are those of `P`;
/// 2. `P_{x,y} != 0` iff `x <= y` iff `P_{x,y}(0) = 1`;
/// 3. `P_{x,x} = 1`;
/// 4. `2 deg P_{x,y} < l(y) - l(x)` for `x < y`.
pub fn verify_shape(kl: &KlTable) -> ShapeReport {
    let t = kl.elements();
    let n = t.len();
    let w = |x: usize, y: usize, detail: String| Witness {
        x: t.word(x).to_string(),
        y: t.word(y).to_string(),
        detail,
    };
    let mut twist = PropertyVerdict::new("(1) a = t^(l(y)-l(x)) P(t^-2)");
    let mut support = PropertyVerdict::new("(2) P != 0 <=> x <= y <=> P(0) = 1");
    let mut diagonal = PropertyVerdict::new("(3) P_xx = 1");
    let mut degree = PropertyVerdict::new("(4) deg P < (l(y)-l(x))/2 for x < y");
    for x in 0..n {
        for y in 0..n {
            let p = kl.p(x, y);
            let leq = t.system().bruhat_leq(t.element(x), t.element(y)).unwrap_or(false);
            let nonzero = !p.is_zero();
            let const_one = p.coeff(0).is_one();
            support.record(nonzero == leq && leq == const_one, || {
                w(x, y, format!("P = {p}, x <= y: {leq}"))
            });
            if x == y {
                diagonal.record(p.is_one(), || w(x, y, format!("P = {p}")));
            }
            if !leq {
                continue;
            }
            let gap = t.length(y) - t.length(x);
            if x != y {
                let deg = p.degree().unwrap_or(0);
                degree.record(2 * deg < gap, || w(x, y, format!("deg {deg}, gap {gap}")));
            }
            let ok = match delorme_poly(kl, x, y) {
                Ok(a) => {
                    a.support().all(|k| k <= gap && (gap - k) % 2 == 0)
                        && p
                            .coeffs()
                            .iter()
                            .enumerate()
                            .all(|(m, c)| gap >= 2 * m && a.coeff(gap - 2 * m) == *c)
                        && a.eval_i64(1) == p.eval_i64(1)
                }
                Err(_) => false,
            };
            twist.record(ok, || w(x, y, format!("P = {p}, gap {gap}")));
        }
    }
    ShapeReport {
        properties: vec![twist, support, diagonal, degree],
    }
}
