use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::linalg::{Subspace, Q};
use super::presentation::AlgebraPresentation;
use super::AlgebraError;

pub const DEFAULT_MAX_DEGREE: usize = 32;

/// A residue path: `path` lists arrows in traversal order from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
    pub path: Vec<usize>,
}

type Sparse = BTreeMap<usize, Q>;

/// A graded path-algebra quotient with a basis of residue paths.
///
/// Basis elements are ordered by degree; within a degree by the order in
/// which they survive the reduction. `left[a][b]` holds `a * b` as a sparse
/// combination of basis elements.
#[derive(Debug, Clone)]
pub struct BasedAlgebra {
    presentation: AlgebraPresentation,
    basis: Vec<BasisElement>,
    degree_offsets: Vec<usize>,
    left: Vec<Vec<Vec<(usize, Q)>>>,
}

fn add_into(acc: &mut Sparse, k: usize, c: &Q) {
    let e = acc.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

impl BasedAlgebra {
    pub fn build(presentation: AlgebraPresentation) -> Result<Self, AlgebraError> {
        Self::build_with_max_degree(presentation, DEFAULT_MAX_DEGREE)
    }

    pub fn build_with_max_degree(
        presentation: AlgebraPresentation,
        max_degree: usize,
    ) -> Result<Self, AlgebraError> {
        let n_arrows = presentation.arrows().len();
        let mut basis: Vec<BasisElement> = (0..presentation.vertex_count())
            .map(|v| BasisElement {
                degree: 0,
                source: v,
                target: v,
                path: Vec::new(),
            })
            .collect();
        let mut degree_offsets = vec![0, basis.len()];
        let mut left: Vec<Vec<Vec<(usize, Q)>>> = vec![Vec::new(); n_arrows];

        for d in 1.. {
            let prev = degree_offsets[d - 1]..degree_offsets[d];
            let mut symbols = Vec::new();
            let mut symbol_index = HashMap::new();
            for (a, arrow) in presentation.arrows().iter().enumerate() {
                for b in prev.clone() {
                    if basis[b].target == arrow.from {
                        symbol_index.insert((a, b), symbols.len());
                        symbols.push((a, b));
                    }
                }
            }

            let mut ideal = Subspace::zero(symbols.len());
            if !symbols.is_empty() {
                for rel in presentation.relations() {
                    if rel.degree > d {
                        continue;
                    }
                    let lo = degree_offsets[d - rel.degree];
                    let hi = degree_offsets[d - rel.degree + 1];
                    for b in lo..hi {
                        if basis[b].target != rel.source {
                            continue;
                        }
                        let mut image = vec![Q::zero(); symbols.len()];
                        for term in &rel.terms {
                            let (last, init) = term.path.split_last().expect("nonempty path");
                            let mut v: Sparse = BTreeMap::from([(b, Q::one())]);
                            for &a in init {
                                v = apply_sparse(&left[a], &v);
                            }
                            for (k, c) in v {
                                let s = symbol_index[&(*last, k)];
                                image[s] += &term.coeff * c;
                            }
                        }
                        ideal.insert(image);
                    }
                }
            }

            let free = ideal.free_positions();
            if !free.is_empty() && d > max_degree {
                return Err(AlgebraError::NotFiniteDimensional {
                    degree: d,
                    max_degree,
                });
            }
            let start = basis.len();
            for &f in &free {
                let (a, b) = symbols[f];
                let mut path = basis[b].path.clone();
                path.push(a);
                basis.push(BasisElement {
                    degree: d,
                    source: basis[b].source,
                    target: presentation.arrows()[a].to,
                    path,
                });
            }
            for (a, row) in left.iter_mut().enumerate() {
                for b in prev.clone() {
                    let image = match symbol_index.get(&(a, b)) {
                        Some(&s) => {
                            let mut unit = vec![Q::zero(); symbols.len()];
                            unit[s] = Q::one();
                            ideal
                                .quotient_coords(&unit)
                                .into_iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(k, c)| (start + k, c))
                                .collect()
                        }
                        None => Vec::new(),
                    };
                    row.push(image);
                }
            }
            degree_offsets.push(basis.len());
            if free.is_empty() {
                break;
            }
        }
        for row in left.iter_mut() {
            row.resize(basis.len(), Vec::new());
        }
        degree_offsets.pop();
        Ok(Self {
            presentation,
            basis,
            degree_offsets,
            left,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        Self::build(AlgebraPresentation::from_json(text)?)
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.presentation.arrows().len()
    }

    /// `(from, to)` for each arrow.
    pub fn arrow_ends(&self) -> Vec<(usize, usize)> {
        self.presentation
            .arrows()
            .iter()
            .map(|a| (a.from, a.to))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Number of basis elements in each degree, from 0 to the top degree.
    pub fn degree_dims(&self) -> Vec<usize> {
        self.degree_offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), AlgebraError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(AlgebraError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    /// `arrow * b` for a basis element `b`.
    pub fn left_arrow(&self, arrow: usize, b: usize) -> &[(usize, Q)] {
        &self.left[arrow][b]
    }

    /// `arrow * v` for a dense vector in basis coordinates.
    pub fn left_arrow_dense(&self, arrow: usize, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dimension()];
        for (b, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in &self.left[arrow][b] {
                out[*k] += c * x;
            }
        }
        out
    }

    /// Product `u * v`: traverse `v` first, then `u`.
    pub fn multiply(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dimension()];
        for (p, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let el = &self.basis[p];
            let mut w: Vec<Q> = v
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    if self.basis[k].target == el.source {
                        x.clone()
                    } else {
                        Q::zero()
                    }
                })
                .collect();
            for &a in &el.path {
                w = self.left_arrow_dense(a, &w);
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o += c * x;
            }
        }
        out
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, p: usize, q: usize) -> Vec<Q> {
        self.multiply(&self.unit(p), &self.unit(q))
    }

    pub fn unit(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dimension()];
        v[k] = Q::one();
        v
    }

    /// Basis indices of paths starting at `v`, which span `A e_v`.
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.dimension())
            .filter(|&k| self.basis[k].source == v)
            .collect()
    }

    pub fn path_name(&self, k: usize) -> String {
        let el = &self.basis[k];
        if el.path.is_empty() {
            format!("e_{}", self.presentation.vertices()[el.source])
        } else {
            el.path
                .iter()
                .rev()
                .map(|&a| self.presentation.arrows()[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

fn apply_sparse(table: &[Vec<(usize, Q)>], v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (b, c) in v {
        for (k, x) in &table[*b] {
            add_into(&mut out, *k, &(c * x));
        }
    }
    out
}
