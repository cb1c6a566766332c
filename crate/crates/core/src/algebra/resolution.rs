use num_bigint::BigInt;

use super::based::BasedAlgebra;
use super::linalg::QMatrix;
use super::module::{FDModule, ModuleMap};
use super::AlgebraError;
use crate::poly::IntPoly;

pub const DEFAULT_RESOLUTION_CAP: usize = 20;

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`.
///
/// `terms[k][j]` is the multiplicity of `P_j` in `P_k`. `differentials[0]` is
/// the cover `P_0 -> M`; `differentials[k]` maps `P_k -> P_{k-1}`.
#[derive(Debug, Clone)]
pub struct ProjResolution {
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<FDModule>,
    pub differentials: Vec<ModuleMap>,
    pub ranks: Vec<usize>,
    pub truncated: bool,
}

impl ProjResolution {
    /// Index of the last term.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Vertex-dimension vector of each term.
    pub fn term_dims(&self) -> Vec<Vec<usize>> {
        self.modules.iter().map(|m| m.dims().to_vec()).collect()
    }

    /// Whether consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| {
            w[0].iter()
                .zip(&w[1])
                .all(|(outer, inner)| outer.mul(inner).is_zero())
        })
    }

    /// Whether every differential `P_k -> P_{k-1}`, `k >= 1`, lands in `rad P_{k-1}`.
    pub fn is_minimal(&self) -> bool {
        (1..self.modules.len()).all(|k| {
            let rad = self.modules[k - 1].radical();
            self.differentials[k].iter().zip(&rad.parts).all(|(d, r)| {
                (0..d.cols()).all(|c| r.contains(&d.column(c)))
            })
        })
    }

    /// Whether the homology vanishes in every position, checked by rank counting.
    pub fn is_exact(&self, m: &FDModule) -> bool {
        if self.truncated {
            return false;
        }
        let totals: Vec<usize> = self.modules.iter().map(FDModule::total_dim).collect();
        if self.ranks[0] != m.total_dim() {
            return false;
        }
        (0..totals.len()).all(|k| {
            let next = self.ranks.get(k + 1).copied().unwrap_or(0);
            totals[k] == self.ranks[k] + next
        })
    }

    /// `sum_k t^k * mult(P_j, P_k)`.
    pub fn series(&self, j: usize) -> IntPoly {
        IntPoly::from_coeffs(self.terms.iter().map(|t| BigInt::from(t[j])).collect())
    }
}

fn rank(map: &ModuleMap) -> usize {
    map.iter().map(QMatrix::rank).sum()
}

fn compose(outer: &ModuleMap, inner: &ModuleMap) -> ModuleMap {
    outer.iter().zip(inner).map(|(a, b)| a.mul(b)).collect()
}

/// Computes terms `0..=cap` of the minimal resolution, marking it truncated
/// when the kernel after term `cap` is still nonzero.
pub fn resolve(alg: &BasedAlgebra, m: &FDModule, cap: usize) -> ProjResolution {
    let mut res = ProjResolution {
        terms: Vec::new(),
        modules: Vec::new(),
        differentials: Vec::new(),
        ranks: Vec::new(),
        truncated: false,
    };
    let mut current = m.clone();
    let mut inclusion: Option<ModuleMap> = None;
    for k in 0..=cap {
        let (p, counts, eps) = current.projective_cover(alg);
        let kernel = p.kernel(&eps);
        let d = match &inclusion {
            Some(inc) => compose(inc, &eps),
            None => eps,
        };
        res.ranks.push(rank(&d));
        res.terms.push(counts);
        res.differentials.push(d);
        if kernel.is_zero() {
            res.modules.push(p);
            return res;
        }
        if k == cap {
            res.modules.push(p);
            res.truncated = true;
            return res;
        }
        let (next, inc) = p.submodule(&kernel);
        res.modules.push(p);
        current = next;
        inclusion = Some(inc);
    }
    unreachable!("loop returns at k == cap")
}

pub fn minimal_resolution(alg: &BasedAlgebra, m: &FDModule, cap: usize) -> Result<ProjResolution, AlgebraError> {
    let res = resolve(alg, m, cap);
    if res.truncated {
        Err(AlgebraError::ResolutionTruncated { cap })
    } else {
        Ok(res)
    }
}

/// Poincare series of `Ext^*(M, L_j)` read off the minimal resolution.
pub fn ext_series(alg: &BasedAlgebra, m: &FDModule, j: usize, cap: usize) -> Result<IntPoly, AlgebraError> {
    alg.check_vertex(j)?;
    Ok(minimal_resolution(alg, m, cap)?.series(j))
}

/// Projective dimension of the simple module at `i`.
pub fn projective_dimension(alg: &BasedAlgebra, i: usize, cap: usize) -> Result<usize, AlgebraError> {
    let l = FDModule::simple(alg, i)?;
    Ok(minimal_resolution(alg, &l, cap)?.length())
}

/// A partial order on vertices, stored as its full relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl VertexOrder {
    /// Reflexive-transitive closure of the given pairs `(i, j)` meaning `i <= j`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Self {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in covers {
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self {
            leq,
            covers: covers.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Generating pairs the order was built from.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All pairs `i < j`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.lt(i, j))
            .collect()
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }
}

/// Projective dimensions of the simples and the smallest order with `i <= j`
/// whenever `pd L_j = pd L_i + 1` and `Ext^1(L_j, L_i) != 0`.
pub fn derived_order(alg: &BasedAlgebra, cap: usize) -> Result<(Vec<usize>, VertexOrder), AlgebraError> {
    let n = alg.vertex_count();
    let resolutions = (0..n)
        .map(|i| minimal_resolution(alg, &FDModule::simple(alg, i)?, cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(order_from_resolutions(&resolutions))
}

/// Same as [`derived_order`], from already computed resolutions of the simples.
pub(crate) fn order_from_resolutions(resolutions: &[ProjResolution]) -> (Vec<usize>, VertexOrder) {
    let n = resolutions.len();
    let pd: Vec<usize> = resolutions.iter().map(ProjResolution::length).collect();
    let mut covers = Vec::new();
    for (j, rj) in resolutions.iter().enumerate() {
        for i in 0..n {
            let ext1 = rj.terms.get(1).map_or(0, |t| t[i]);
            if pd[j] == pd[i] + 1 && ext1 != 0 {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    (pd, VertexOrder::from_covers(n, &covers))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::AlgebraPresentation;
    use crate::algebra::module::std_quotient;

    fn sl2() -> BasedAlgebra {
        BasedAlgebra::build(AlgebraPresentation::sl2()).unwrap()
    }

    #[test]
    fn sl2_resolutions() {
        let alg = sl2();
        let le = FDModule::simple(&alg, 0).unwrap();
        let ls = FDModule::simple(&alg, 1).unwrap();
        let r = minimal_resolution(&alg, &le, 20).unwrap();
        assert_eq!(r.terms, vec![vec![1, 0], vec![0, 1]]);
        assert!(r.is_complex() && r.is_minimal() && r.is_exact(&le));
        let r = minimal_resolution(&alg, &ls, 20).unwrap();
        assert_eq!(r.terms, vec![vec![0, 1], vec![1, 0], vec![0, 1]]);
        assert!(r.is_complex() && r.is_minimal() && r.is_exact(&ls));
        assert_eq!(r.length(), 2);
        let ps = FDModule::projective(&alg, 1).unwrap();
        assert_eq!(minimal_resolution(&alg, &ps, 20).unwrap().length(), 0);
    }

    #[test]
    fn sl2_ext_series() {
        let alg = sl2();
        let me = std_quotient(&alg, 0, &[1]).unwrap();
        let ms = std_quotient(&alg, 1, &[]).unwrap();
        let ls = FDModule::simple(&alg, 1).unwrap();
        assert_eq!(ext_series(&alg, &me, 1, 20).unwrap(), IntPoly::from_i64s(&[0, 1]));
        assert_eq!(ext_series(&alg, &ms, 1, 20).unwrap(), IntPoly::one());
        assert_eq!(ext_series(&alg, &ms, 0, 20).unwrap(), IntPoly::zero());
        assert_eq!(ext_series(&alg, &ls, 1, 20).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
    }

    #[test]
    fn sl2_order() {
        let alg = sl2();
        assert_eq!(projective_dimension(&alg, 0, 20).unwrap(), 1);
        assert_eq!(projective_dimension(&alg, 1, 20).unwrap(), 2);
        let (pd, order) = derived_order(&alg, 20).unwrap();
        assert_eq!(pd, vec![1, 2]);
        assert!(order.lt(0, 1) && !order.leq(1, 0));
    }

    #[test]
    fn semisimple_and_dual_numbers() {
        let alg = BasedAlgebra::build(AlgebraPresentation::semisimple(2)).unwrap();
        let (pd, order) = derived_order(&alg, 20).unwrap();
        assert_eq!(pd, vec![0, 0]);
        assert!(!order.leq(0, 1) && !order.leq(1, 0) && order.leq(0, 0));

        let alg = BasedAlgebra::build(AlgebraPresentation::dual_numbers()).unwrap();
        let l = FDModule::simple(&alg, 0).unwrap();
        let r = resolve(&alg, &l, 5);
        assert!(r.truncated);
        assert_eq!(r.terms.len(), 6);
        assert!(r.is_complex() && r.is_minimal());
        assert_eq!(
            projective_dimension(&alg, 0, 20),
            Err(AlgebraError::ResolutionTruncated { cap: 20 })
        );
    }
}
