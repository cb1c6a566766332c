use num_traits::{One, Zero};

use super::based::BasedAlgebra;
use super::linalg::{QMatrix, Subspace, Q};
use super::resolution::VertexOrder;
use super::AlgebraError;

/// A finite-dimensional representation of the quiver satisfying the relations.
///
/// `action[a]` is a `dims[to] x dims[from]` matrix for arrow `a: from -> to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDModule {
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    action: Vec<QMatrix>,
}

/// Per-vertex linear maps between two modules over the same algebra.
pub type ModuleMap = Vec<QMatrix>;

/// A submodule, held as one subspace per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    pub parts: Vec<Subspace>,
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Subspace::is_zero)
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.parts
            .iter()
            .zip(&other.parts)
            .all(|(a, b)| a.contains_subspace(b))
    }
}

impl FDModule {
    /// Builds a module and checks shapes and relations.
    pub fn new(alg: &BasedAlgebra, dims: Vec<usize>, action: Vec<QMatrix>) -> Result<Self, AlgebraError> {
        if dims.len() != alg.vertex_count() {
            return Err(AlgebraError::InvalidModule(format!(
                "expected {} vertex dimensions, got {}",
                alg.vertex_count(),
                dims.len()
            )));
        }
        if action.len() != alg.arrow_count() {
            return Err(AlgebraError::InvalidModule(format!(
                "expected {} arrow matrices, got {}",
                alg.arrow_count(),
                action.len()
            )));
        }
        let arrows = alg.arrow_ends();
        for (a, (&(from, to), m)) in arrows.iter().zip(&action).enumerate() {
            if m.rows() != dims[to] || m.cols() != dims[from] {
                return Err(AlgebraError::InvalidModule(format!(
                    "arrow {a} needs a {}x{} matrix, got {}x{}",
                    dims[to],
                    dims[from],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = Self { dims, arrows, action };
        for (k, rel) in alg.presentation().relations().iter().enumerate() {
            let mut total = QMatrix::zeros(module.dims[rel.target], module.dims[rel.source]);
            for term in &rel.terms {
                let mut m = QMatrix::identity(module.dims[rel.source]);
                for &a in &term.path {
                    m = module.action[a].mul(&m);
                }
                for r in 0..total.rows() {
                    for c in 0..total.cols() {
                        let v = total.get(r, c) + &term.coeff * m.get(r, c);
                        total.set(r, c, v);
                    }
                }
            }
            if !total.is_zero() {
                return Err(AlgebraError::InvalidModule(format!("relation {k} does not vanish")));
            }
        }
        Ok(module)
    }

    /// `A e_i`, with basis the residue paths starting at `i`, grouped by endpoint.
    pub fn projective(alg: &BasedAlgebra, i: usize) -> Result<Self, AlgebraError> {
        alg.check_vertex(i)?;
        let paths = alg.paths_from(i);
        let n = alg.vertex_count();
        let mut position = vec![usize::MAX; alg.dimension()];
        let mut dims = vec![0; n];
        for &p in &paths {
            let t = alg.basis()[p].target;
            position[p] = dims[t];
            dims[t] += 1;
        }
        let arrows = alg.arrow_ends();
        let action = arrows
            .iter()
            .enumerate()
            .map(|(a, &(from, to))| {
                let mut m = QMatrix::zeros(dims[to], dims[from]);
                for &p in &paths {
                    if alg.basis()[p].target != from {
                        continue;
                    }
                    for (k, c) in alg.left_arrow(a, p) {
                        m.set(position[*k], position[p], c.clone());
                    }
                }
                m
            })
            .collect();
        Ok(Self { dims, arrows, action })
    }

    /// The one-dimensional module at `i`.
    pub fn simple(alg: &BasedAlgebra, i: usize) -> Result<Self, AlgebraError> {
        alg.check_vertex(i)?;
        let mut dims = vec![0; alg.vertex_count()];
        dims[i] = 1;
        Ok(Self::zero_action(alg.arrow_ends(), dims))
    }

    fn zero_action(arrows: Vec<(usize, usize)>, dims: Vec<usize>) -> Self {
        let action = arrows
            .iter()
            .map(|&(from, to)| QMatrix::zeros(dims[to], dims[from]))
            .collect();
        Self { dims, arrows, action }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &QMatrix {
        &self.action[arrow]
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn direct_sum(&self, other: &FDModule) -> FDModule {
        Self::direct_sum_all(self.arrows.clone(), self.dims.len(), &[self, other])
    }

    fn direct_sum_all(arrows: Vec<(usize, usize)>, n: usize, parts: &[&FDModule]) -> FDModule {
        let mut dims = vec![0; n];
        for p in parts {
            for (d, x) in dims.iter_mut().zip(&p.dims) {
                *d += x;
            }
        }
        let mut out = Self::zero_action(arrows, dims);
        let mut offset = vec![0; n];
        for p in parts {
            for (a, &(from, to)) in out.arrows.clone().iter().enumerate() {
                let m = &p.action[a];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !m.get(r, c).is_zero() {
                            out.action[a].set(offset[to] + r, offset[from] + c, m.get(r, c).clone());
                        }
                    }
                }
            }
            for (o, x) in offset.iter_mut().zip(&p.dims) {
                *o += x;
            }
        }
        out
    }

    /// Smallest submodule containing the given vertex-homogeneous vectors.
    pub fn generated_submodule(&self, gens: impl IntoIterator<Item = (usize, Vec<Q>)>) -> Submodule {
        let mut parts: Vec<Subspace> = self.dims.iter().map(|&d| Subspace::zero(d)).collect();
        let mut queue: Vec<(usize, Vec<Q>)> = gens.into_iter().collect();
        while let Some((v, x)) = queue.pop() {
            if !parts[v].insert(x.clone()) {
                continue;
            }
            for (a, &(from, to)) in self.arrows.iter().enumerate() {
                if from == v {
                    let y = self.action[a].apply(&x);
                    if y.iter().any(|c| !c.is_zero()) {
                        queue.push((to, y));
                    }
                }
            }
        }
        Submodule { parts }
    }

    /// Sum of the images of all arrows, which is the radical for an admissible presentation.
    pub fn radical(&self) -> Submodule {
        let mut gens = Vec::new();
        for (a, &(_, to)) in self.arrows.iter().enumerate() {
            let m = &self.action[a];
            for c in 0..m.cols() {
                gens.push((to, m.column(c)));
            }
        }
        self.generated_submodule(gens)
    }

    /// Multiplicity of each simple in the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        self.dims.iter().zip(rad.dims()).map(|(d, r)| d - r).collect()
    }

    /// Quotient module and the projection onto it.
    pub fn quotient(&self, sub: &Submodule) -> (FDModule, ModuleMap) {
        let projection: ModuleMap = sub
            .parts
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| {
                let cols: Vec<Vec<Q>> = (0..d).map(|k| s.quotient_coords(&unit(d, k))).collect();
                QMatrix::from_columns(d - s.dim(), &cols)
            })
            .collect();
        let frees: Vec<Vec<usize>> = sub.parts.iter().map(Subspace::free_positions).collect();
        let dims: Vec<usize> = sub.parts.iter().zip(&self.dims).map(|(s, d)| d - s.dim()).collect();
        let action = self
            .arrows
            .iter()
            .enumerate()
            .map(|(a, &(from, to))| {
                let cols: Vec<Vec<Q>> = frees[from]
                    .iter()
                    .map(|&f| projection[to].apply(&self.action[a].column(f)))
                    .collect();
                QMatrix::from_columns(dims[to], &cols)
            })
            .collect();
        (
            FDModule {
                dims,
                arrows: self.arrows.clone(),
                action,
            },
            projection,
        )
    }

    /// The submodule as a module in its echelon basis, with the inclusion map.
    pub fn submodule(&self, sub: &Submodule) -> (FDModule, ModuleMap) {
        let inclusion: ModuleMap = sub
            .parts
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| QMatrix::from_columns(d, s.basis()))
            .collect();
        let dims = sub.dims();
        let action = self
            .arrows
            .iter()
            .enumerate()
            .map(|(a, &(from, to))| {
                let cols: Vec<Vec<Q>> = sub.parts[from]
                    .basis()
                    .iter()
                    .map(|b| sub.parts[to].coords(&self.action[a].apply(b)))
                    .collect();
                QMatrix::from_columns(dims[to], &cols)
            })
            .collect();
        (
            FDModule {
                dims,
                arrows: self.arrows.clone(),
                action,
            },
            inclusion,
        )
    }

    /// Kernel of a module map out of `self`.
    pub fn kernel(&self, map: &ModuleMap) -> Submodule {
        Submodule {
            parts: map
                .iter()
                .zip(&self.dims)
                .map(|(m, &d)| Subspace::from_vectors(d, m.kernel()))
                .collect(),
        }
    }

    /// Whether `map` from `self` to `target` commutes with every arrow.
    pub fn is_homomorphism(&self, target: &FDModule, map: &ModuleMap) -> bool {
        self.arrows.iter().enumerate().all(|(a, &(from, to))| {
            map[to].mul(&self.action[a]) == target.action[a].mul(&map[from])
        })
    }

    /// Image of `path` (traversal order) applied to a vector at its source.
    pub fn apply_path(&self, path: &[usize], x: &[Q]) -> Vec<Q> {
        path.iter().fold(x.to_vec(), |v, &a| self.action[a].apply(&v))
    }

    /// Projective cover `P -> self`, with the multiplicity of each `P_j` in `P`.
    pub fn projective_cover(&self, alg: &BasedAlgebra) -> (FDModule, Vec<usize>, ModuleMap) {
        let rad = self.radical();
        let n = self.vertex_count();
        let mut summands = Vec::new();
        let mut counts = vec![0; n];
        let mut generators = Vec::new();
        for j in 0..n {
            for f in rad.parts[j].free_positions() {
                counts[j] += 1;
                generators.push((j, unit(self.dims[j], f)));
            }
        }
        let projectives: Vec<FDModule> = (0..n)
            .map(|j| FDModule::projective(alg, j).expect("vertex in range"))
            .collect();
        let paths: Vec<Vec<usize>> = (0..n).map(|j| alg.paths_from(j)).collect();
        for (j, _) in &generators {
            summands.push(&projectives[*j]);
        }
        let cover = Self::direct_sum_all(self.arrows.clone(), n, &summands);
        let mut columns: Vec<Vec<Vec<Q>>> = vec![Vec::new(); n];
        for (j, m) in &generators {
            for &p in &paths[*j] {
                let el = &alg.basis()[p];
                columns[el.target].push(self.apply_path(&el.path, m));
            }
        }
        let map = columns
            .iter()
            .zip(&self.dims)
            .map(|(cols, &d)| QMatrix::from_columns(d, cols))
            .collect();
        (cover, counts, map)
    }
}

fn unit(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = Q::one();
    v
}

/// The submodule `sum_{j in S} A e_j A e_i` of `A e_i`.
pub fn std_submodule(alg: &BasedAlgebra, i: usize, s: &[usize]) -> Result<(FDModule, Submodule), AlgebraError> {
    for &j in s {
        alg.check_vertex(j)?;
    }
    let p = FDModule::projective(alg, i)?;
    let mut position = vec![0usize; alg.vertex_count()];
    let mut gens = Vec::new();
    for k in alg.paths_from(i) {
        let t = alg.basis()[k].target;
        if s.contains(&t) {
            gens.push((t, unit(p.dims[t], position[t])));
        }
        position[t] += 1;
    }
    let sub = p.generated_submodule(gens);
    Ok((p, sub))
}

/// `A e_i / sum_{j in S} A e_j A e_i`.
pub fn std_quotient(alg: &BasedAlgebra, i: usize, s: &[usize]) -> Result<FDModule, AlgebraError> {
    let (p, sub) = std_submodule(alg, i, s)?;
    Ok(p.quotient(&sub).0)
}

/// An endomorphism algebra with a basis and a basis of its radical.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    pub basis: Vec<ModuleMap>,
    pub radical: Vec<ModuleMap>,
}

impl EndAlgebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn radical_dimension(&self) -> usize {
        self.radical.len()
    }
}

/// Solves the commutation equations for `End_A(M)` and finds its radical as
/// the radical of the trace form of the left regular representation.
pub fn end_algebra(m: &FDModule) -> EndAlgebra {
    let n = m.vertex_count();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + m.dims[v] * m.dims[v];
    }
    let unknowns = offset[n];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (a, &(from, to)) in m.arrows.iter().enumerate() {
        let x = &m.action[a];
        for r in 0..m.dims[to] {
            for c in 0..m.dims[from] {
                let mut eq = vec![Q::zero(); unknowns];
                for k in 0..m.dims[to] {
                    eq[var(to, r, k)] += x.get(k, c);
                }
                for k in 0..m.dims[from] {
                    eq[var(from, k, c)] -= x.get(r, k);
                }
                rows.push(eq);
            }
        }
    }
    let solutions = Subspace::from_vectors(unknowns, rows).orthogonal_kernel();
    let space = Subspace::from_vectors(unknowns, solutions);
    let unflatten = |x: &[Q]| -> ModuleMap {
        (0..n)
            .map(|v| {
                let d = m.dims[v];
                let mut mat = QMatrix::zeros(d, d);
                for r in 0..d {
                    for c in 0..d {
                        mat.set(r, c, x[var(v, r, c)].clone());
                    }
                }
                mat
            })
            .collect()
    };
    let flatten = |f: &ModuleMap| -> Vec<Q> {
        let mut x = vec![Q::zero(); unknowns];
        for v in 0..n {
            for r in 0..m.dims[v] {
                for c in 0..m.dims[v] {
                    x[var(v, r, c)] = f[v].get(r, c).clone();
                }
            }
        }
        x
    };
    let basis: Vec<ModuleMap> = space.basis().iter().map(|x| unflatten(x)).collect();
    let dim = basis.len();
    let regular: Vec<QMatrix> = basis
        .iter()
        .map(|f| {
            let cols: Vec<Vec<Q>> = basis
                .iter()
                .map(|g| {
                    let fg: ModuleMap = f.iter().zip(g).map(|(a, b)| a.mul(b)).collect();
                    space.coords(&flatten(&fg))
                })
                .collect();
            QMatrix::from_columns(dim, &cols)
        })
        .collect();
    let mut gram = QMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            gram.set(a, b, regular[a].mul(&regular[b]).trace());
        }
    }
    let radical = gram
        .kernel()
        .into_iter()
        .map(|coeffs| {
            let mut x = vec![Q::zero(); unknowns];
            for (c, row) in coeffs.iter().zip(space.basis()) {
                if c.is_zero() {
                    continue;
                }
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi += c * ri;
                }
            }
            unflatten(&x)
        })
        .collect();
    EndAlgebra { basis, radical }
}

/// `M / rad(End M) M`.
pub fn bar_module(m: &FDModule) -> FDModule {
    let end = end_algebra(m);
    let mut gens = Vec::new();
    for f in &end.radical {
        for (v, mat) in f.iter().enumerate() {
            for c in 0..mat.cols() {
                gens.push((v, mat.column(c)));
            }
        }
    }
    let sub = m.generated_submodule(gens);
    m.quotient(&sub).0
}

/// `M_i / rad(End M_i) M_i` where `M_i = A e_i / sum_{j not<= i} A e_j A e_i`.
pub fn bar_m(alg: &BasedAlgebra, i: usize, order: &VertexOrder) -> Result<FDModule, AlgebraError> {
    let s: Vec<usize> = (0..alg.vertex_count()).filter(|&j| !order.leq(j, i)).collect();
    Ok(bar_module(&std_quotient(alg, i, &s)?))
}
