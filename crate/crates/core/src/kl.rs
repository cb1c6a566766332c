//! Kazhdan-Lusztig polynomials, R-polynomials and mu-coefficients.
//!
//! [`KlTable`] runs the standard descent recursion column by column: the
//! column of `y` holds `P_{x,y}` for every `x <= y` and only reads columns
//! of strictly shorter elements, so each length stratum can be filled in
//! parallel with bit-identical results. [`kl_oracle`] recovers the same
//! polynomials from bar invariance and the R-polynomials alone.

use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, ReducedWord, Side};
use crate::group::ElementTable;
use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KlError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("invariant violated at x = [{x}], y = [{y}]: {detail}")]
    InvariantBreach {
        x: ReducedWord,
        y: ReducedWord,
        detail: String,
    },
    #[error("bar-invariance solve inconsistent at x = [{x}], y = [{y}]")]
    OracleInconsistent { x: ReducedWord, y: ReducedWord },
}

static ZERO: LazyLock<IntPoly> = LazyLock::new(IntPoly::zero);

/// Which descent the recursion strips. The result does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescentPick {
    Smallest,
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DescentPolicy {
    pub side: Side,
    pub pick: DescentPick,
}

impl Default for DescentPolicy {
    fn default() -> Self {
        Self {
            side: Side::Left,
            pick: DescentPick::Smallest,
        }
    }
}

impl fmt::Display for DescentPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let pick = match self.pick {
            DescentPick::Smallest => "smallest",
            DescentPick::Largest => "largest",
        };
        write!(f, "{pick} {side}")
    }
}

impl DescentPolicy {
    pub const ALL: [DescentPolicy; 4] = [
        DescentPolicy { side: Side::Left, pick: DescentPick::Smallest },
        DescentPolicy { side: Side::Left, pick: DescentPick::Largest },
        DescentPolicy { side: Side::Right, pick: DescentPick::Smallest },
        DescentPolicy { side: Side::Right, pick: DescentPick::Largest },
    ];

    fn choose(&self, table: &ElementTable, y: usize) -> usize {
        let mut ds = table.descents(y, self.side);
        match self.pick {
            DescentPick::Smallest => ds.next(),
            DescentPick::Largest => ds.last(),
        }
        .expect("non-identity element has a descent on each side")
    }
}

/// Polynomials attached to Bruhat pairs, stored per column `y` in the order
/// of the elements below `y`.
struct PairColumns {
    table: Arc<ElementTable>,
    columns: Vec<Vec<IntPoly>>,
}

impl PairColumns {
    fn get(&self, x: usize, y: usize) -> &IntPoly {
        match self.table.bruhat().position(x, y) {
            Some(k) => &self.columns[y][k],
            None => &ZERO,
        }
    }
}

fn get_in<'a>(table: &ElementTable, columns: &'a [Vec<IntPoly>], x: usize, y: usize) -> &'a IntPoly {
    match table.bruhat().position(x, y) {
        Some(k) => &columns[y][k],
        None => &ZERO,
    }
}

struct KlColumn {
    polys: Vec<IntPoly>,
    /// `(z, mu(z, y))` for `z < y` with nonzero mu.
    mu: Vec<(usize, BigInt)>,
}

/// All `P_{x,y}` for pairs inside an [`ElementTable`].
pub struct KlTable {
    table: Arc<ElementTable>,
    columns: Vec<KlColumn>,
    policy: DescentPolicy,
}

impl KlTable {
    pub fn build(table: Arc<ElementTable>) -> Result<Self, KlError> {
        Self::build_with(table, DescentPolicy::default())
    }

    /// Fills columns stratum by stratum; strata are processed in parallel on
    /// the current rayon pool.
    pub fn build_with(table: Arc<ElementTable>, policy: DescentPolicy) -> Result<Self, KlError> {
        table.bruhat();
        let mut columns: Vec<KlColumn> = Vec::with_capacity(table.len());
        for stratum in table.strata().to_vec() {
            let done = &columns;
            let new: Vec<KlColumn> = stratum
                .into_par_iter()
                .map(|y| Self::column(&table, done, policy, y))
                .collect::<Result<_, _>>()?;
            columns.extend(new);
        }
        Ok(Self {
            table,
            columns,
            policy,
        })
    }

    fn column(
        table: &ElementTable,
        done: &[KlColumn],
        policy: DescentPolicy,
        y: usize,
    ) -> Result<KlColumn, KlError> {
        if table.length(y) == 0 {
            return Ok(KlColumn {
                polys: vec![IntPoly::one()],
                mu: Vec::new(),
            });
        }
        let side = policy.side;
        let bruhat = table.bruhat();
        let get = |x: usize, y: usize| -> &IntPoly {
            match bruhat.position(x, y) {
                Some(k) => &done[y].polys[k],
                None => &ZERO,
            }
        };
        let s = policy.choose(table, y);
        let w = table.mul(y, s, side).expect("descent stays in the table");
        let ly = table.length(y);
        let correction: Vec<(usize, BigInt, usize)> = done[w]
            .mu
            .iter()
            .filter(|(z, _)| table.is_descent(*z, s, side))
            .map(|(z, m)| (*z, -m, (ly - table.length(*z)) / 2))
            .collect();
        let one = BigInt::one();
        let mut polys = Vec::with_capacity(bruhat.count_below(y));
        let mut mu = Vec::new();
        for x in bruhat.below(y) {
            let sx = table.mul(x, s, side);
            let mut p = IntPoly::zero();
            match sx {
                Some(sx) if table.length(sx) < table.length(x) => {
                    p.add_scaled_shifted(&one, 0, get(sx, w));
                    p.add_scaled_shifted(&one, 1, get(x, w));
                }
                _ => {
                    if let Some(sx) = sx {
                        p.add_scaled_shifted(&one, 1, get(sx, w));
                    }
                    p.add_scaled_shifted(&one, 0, get(x, w));
                }
            }
            for (z, neg_mu, shift) in &correction {
                if bruhat.leq(x, *z) {
                    p.add_scaled_shifted(neg_mu, *shift, get(x, *z));
                }
            }
            let gap = ly - table.length(x);
            check_kl_shape(table, x, y, gap, &p)?;
            if gap % 2 == 1 {
                if let Some(c) = p.coeff_ref((gap - 1) / 2) {
                    if !c.is_zero() {
                        mu.push((x, c.clone()));
                    }
                }
            }
            polys.push(p);
        }
        Ok(KlColumn { polys, mu })
    }

    pub fn elements(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn policy(&self) -> DescentPolicy {
        self.policy
    }

    /// `P_{x,y}`; zero unless `x <= y`.
    pub fn p(&self, x: usize, y: usize) -> &IntPoly {
        match self.table.bruhat().position(x, y) {
            Some(k) => &self.columns[y].polys[k],
            None => &ZERO,
        }
    }

    pub fn mu(&self, x: usize, y: usize) -> BigInt {
        self.columns[y]
            .mu
            .iter()
            .find(|(z, _)| *z == x)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// Number of stored pairs `x <= y`.
    pub fn pair_count(&self) -> usize {
        self.columns.iter().map(|c| c.polys.len()).sum()
    }
}

fn check_kl_shape(
    table: &ElementTable,
    x: usize,
    y: usize,
    gap: usize,
    p: &IntPoly,
) -> Result<(), KlError> {
    let breach = |detail: String| KlError::InvariantBreach {
        x: table.word(x).clone(),
        y: table.word(y).clone(),
        detail,
    };
    if !p.coeff(0).is_one() {
        return Err(breach(format!("constant term of {p} is not 1")));
    }
    if !p.has_nonnegative_coeffs() {
        return Err(breach(format!("negative coefficient in {p}")));
    }
    let deg = p.degree().unwrap_or(0);
    if x == y {
        if !p.is_one() {
            return Err(breach(format!("diagonal entry {p} is not 1")));
        }
    } else if 2 * deg >= gap {
        return Err(breach(format!("degree of {p} not below half the length gap {gap}")));
    }
    Ok(())
}

/// R-polynomials for all Bruhat pairs of a table.
pub struct RTable {
    inner: PairColumns,
}

impl RTable {
    pub fn build(table: Arc<ElementTable>) -> Self {
        let bruhat = table.bruhat();
        let q_minus_one = IntPoly::from_i64s(&[-1, 1]);
        let mut columns: Vec<Vec<IntPoly>> = Vec::with_capacity(table.len());
        for y in 0..table.len() {
            if table.length(y) == 0 {
                columns.push(vec![IntPoly::one()]);
                continue;
            }
            let s = table.descents(y, Side::Left).next().unwrap();
            let w = table.left_mul(y, s).unwrap();
            let col: Vec<IntPoly> = bruhat
                .below(y)
                .map(|x| match table.left_mul(x, s) {
                    Some(sx) if table.length(sx) < table.length(x) => {
                        get_in(&table, &columns, sx, w).clone()
                    }
                    sx => {
                        let mut r = &q_minus_one * get_in(&table, &columns, x, w);
                        if let Some(sx) = sx {
                            r.add_scaled_shifted(&BigInt::one(), 1, get_in(&table, &columns, sx, w));
                        }
                        r
                    }
                })
                .collect();
            columns.push(col);
        }
        Self {
            inner: PairColumns { table, columns },
        }
    }

    /// `R_{x,y}`; zero unless `x <= y`.
    pub fn r(&self, x: usize, y: usize) -> &IntPoly {
        self.inner.get(x, y)
    }
}

/// Independent route to `{P_{x,y}}_{x <= y}`: solve
/// `q^{l(y)-l(x)} bar(P_{x,y}) = Σ_{x <= z <= y} R_{x,z} P_{z,y}` by descending
/// induction on `l(x)`. Below the degree bound the right-hand side determines
/// `-P_{x,y}`; the remaining coefficients must reproduce `q^d bar(P_{x,y})`.
///
/// Returns `(x, P_{x,y})` for every `x <= y`, in index order.
pub fn kl_oracle(
    table: &ElementTable,
    r: &RTable,
    y: usize,
) -> Result<Vec<(usize, IntPoly)>, KlError> {
    let bruhat = table.bruhat();
    let below: Vec<usize> = bruhat.below(y).collect();
    let mut solved: Vec<IntPoly> = vec![IntPoly::zero(); below.len()];
    for (kx, &x) in below.iter().enumerate().rev() {
        if x == y {
            solved[kx] = IntPoly::one();
            continue;
        }
        let d = table.length(y) - table.length(x);
        let mut known = IntPoly::zero();
        for (kz, &z) in below.iter().enumerate().skip(kx + 1) {
            if bruhat.leq(x, z) {
                known += &(r.r(x, z) * &solved[kz]);
            }
        }
        // P has degree < d/2, q^d bar(P) has degree > d/2
        let low: Vec<BigInt> = (0..d.div_ceil(2)).map(|k| -known.coeff(k)).collect();
        let p = IntPoly::from_coeffs(low);
        let mut reflected = vec![BigInt::zero(); d + 1];
        for (k, c) in p.coeffs().iter().enumerate() {
            reflected[d - k] = c.clone();
        }
        let lhs = &IntPoly::from_coeffs(reflected) - &p;
        if lhs != known {
            return Err(KlError::OracleInconsistent {
                x: table.word(x).clone(),
                y: table.word(y).clone(),
            });
        }
        solved[kx] = p;
    }
    Ok(below.into_iter().zip(solved).collect())
}

/// Full table over the whole group, guarded by the order cap.
pub fn kl_table(sys: &CoxeterSystem, cap: u128) -> Result<KlTable, KlError> {
    let table = Arc::new(ElementTable::full(sys, cap)?);
    KlTable::build(table)
}

/// `P_{x,y}` for one pair. Only the lower interval `[e, y]` is materialized,
/// so no order cap applies.
pub fn kl_polynomial(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<IntPoly, KlError> {
    if !sys.bruhat_leq(x, y)? {
        return Ok(IntPoly::zero());
    }
    let table = Arc::new(ElementTable::lower_interval(sys, y));
    let xi = table.index_of(x).expect("x <= y lies in [e, y]");
    let yi = table.top();
    let kl = KlTable::build(table)?;
    Ok(kl.p(xi, yi).clone())
}

pub fn r_polynomial(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<IntPoly, KlError> {
    if !sys.bruhat_leq(x, y)? {
        return Ok(IntPoly::zero());
    }
    let table = Arc::new(ElementTable::lower_interval(sys, y));
    let xi = table.index_of(x).expect("x <= y lies in [e, y]");
    let yi = table.top();
    Ok(RTable::build(table).r(xi, yi).clone())
}

/// Coefficient of `q^{(l(y)-l(x)-1)/2}` in `P_{x,y}` for odd length gaps.
pub fn mu(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<BigInt, KlError> {
    if x.length() >= y.length() || (y.length() - x.length()) % 2 == 0 {
        return Ok(BigInt::zero());
    }
    let p = kl_polynomial(sys, x, y)?;
    Ok(p.coeff((y.length() - x.length() - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_ORDER_CAP;

    fn full(t: &str) -> Arc<ElementTable> {
        Arc::new(ElementTable::full(&CoxeterSystem::from_type_str(t).unwrap(), DEFAULT_ORDER_CAP).unwrap())
    }

    fn idx(t: &ElementTable, w: &str) -> usize {
        t.index_of_word(&w.parse().unwrap()).unwrap().unwrap()
    }

    #[test]
    fn a1_table() {
        let t = full("A1");
        let kl = KlTable::build(t.clone()).unwrap();
        assert!(kl.p(0, 0).is_one());
        assert!(kl.p(1, 1).is_one());
        assert!(kl.p(0, 1).is_one());
        assert!(kl.p(1, 0).is_zero());
        assert_eq!(kl.mu(0, 1), BigInt::from(1));
        assert_eq!(kl.mu(0, 0), BigInt::zero());
    }

    #[test]
    fn a2_all_ones() {
        let t = full("A2");
        let kl = KlTable::build(t.clone()).unwrap();
        assert_eq!(kl.pair_count(), 19);
        for x in 0..t.len() {
            for y in 0..t.len() {
                assert_eq!(kl.p(x, y).is_one(), t.leq(x, y));
            }
        }
    }

    #[test]
    fn a3_singular_pair() {
        let t = full("A3");
        let kl = KlTable::build(t.clone()).unwrap();
        let y = idx(&t, "2 1 3 2");
        assert_eq!(kl.p(0, y), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(kl.p(idx(&t, "2"), y), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(kl.mu(0, y), BigInt::zero());
    }

    #[test]
    fn single_pair_matches_table() {
        let sys = CoxeterSystem::from_type_str("A3").unwrap();
        let x = sys.from_word(&"2".parse().unwrap()).unwrap();
        let y = sys.from_word(&"2 1 3 2".parse().unwrap()).unwrap();
        assert_eq!(kl_polynomial(&sys, &x, &y).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert!(kl_polynomial(&sys, &y, &x).unwrap().is_zero());
        assert_eq!(mu(&sys, &x, &y).unwrap(), BigInt::one());
        assert_eq!(mu(&sys, &sys.identity(), &y).unwrap(), BigInt::zero());
        let s1 = sys.from_word(&"1".parse().unwrap()).unwrap();
        assert_eq!(mu(&sys, &sys.identity(), &s1).unwrap(), BigInt::one());
    }

    #[test]
    fn r_polynomial_examples() {
        let sys = CoxeterSystem::from_type_str("A1").unwrap();
        let e = sys.identity();
        let s = sys.from_word(&"1".parse().unwrap()).unwrap();
        assert_eq!(r_polynomial(&sys, &e, &s).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert!(r_polynomial(&sys, &s, &s).unwrap().is_one());
        assert!(r_polynomial(&sys, &s, &e).unwrap().is_zero());
    }

    #[test]
    fn r_polynomial_shape() {
        let t = full("B3");
        let r = RTable::build(t.clone());
        for y in 0..t.len() {
            for x in t.bruhat().below(y) {
                let gap = t.length(y) - t.length(x);
                let p = r.r(x, y);
                assert_eq!(p.degree(), Some(gap));
                assert!(p.coeff(gap).is_one());
                let sign = if gap % 2 == 0 { 1 } else { -1 };
                assert_eq!(p.coeff(0), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let t = full("A2");
        let r = RTable::build(t.clone());
        let col = kl_oracle(&t, &r, t.top()).unwrap();
        assert_eq!(col.len(), 6);
        assert!(col.iter().all(|(_, p)| p.is_one()));

        let t = full("A3");
        let r = RTable::build(t.clone());
        let y = idx(&t, "2 1 3 2");
        let col = kl_oracle(&t, &r, y).unwrap();
        let get = |w: &str| &col.iter().find(|(x, _)| *x == idx(&t, w)).unwrap().1;
        assert_eq!(get(""), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(get("2"), &IntPoly::from_i64s(&[1, 1]));
        assert!(get("2 1 3 2").is_one());
    }

    #[test]
    fn policies_agree_on_b3() {
        let t = full("B3");
        let base = KlTable::build(t.clone()).unwrap();
        for policy in DescentPolicy::ALL {
            let other = KlTable::build_with(t.clone(), policy).unwrap();
            for y in 0..t.len() {
                for x in 0..t.len() {
                    assert_eq!(base.p(x, y), other.p(x, y), "{policy:?}");
                }
            }
        }
    }
}
