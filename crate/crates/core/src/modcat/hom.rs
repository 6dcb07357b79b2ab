use super::{ModError, Module, ModuleMap};
use crate::exactla::{self, Field, Mat, Scalar};

/// A basis of `Hom(M, N)` obtained as the null space of the intertwining
/// equations. Basis maps have a 1 at their own free entry and 0 at the
/// other free entries, so coordinates are read off at `free`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<ModuleMap>,
    pub free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &ModuleMap) -> Vec<Scalar> {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i].clone()).collect()
    }

    pub fn from_coords(&self, c: &[Scalar]) -> ModuleMap {
        let mut out = ModuleMap::zero(&self.source, &self.target);
        for (x, b) in c.iter().zip(&self.basis) {
            if !x.is_zero() {
                out = out.add(&b.scale(x));
            }
        }
        out
    }

    /// Some `h` in this space with `op(h) = target`, where `op` is linear.
    pub fn solve<F>(&self, op: F, target: &ModuleMap) -> Option<ModuleMap>
    where
        F: Fn(&ModuleMap) -> ModuleMap,
    {
        let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| op(b).flatten()).collect();
        let c = solve_in_span(self.source.field(), &images, &target.flatten())?;
        Some(self.from_coords(&c))
    }
}

/// Coefficients expressing `target` in terms of `vectors`, if possible.
pub fn solve_in_span(field: Field, vectors: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    if vectors.is_empty() {
        return if exactla::vec_is_zero(target) { Some(vec![]) } else { None };
    }
    let m = Mat::from_cols(field, target.len(), vectors);
    exactla::solve(&m, target).expect("shapes agree")
}

pub fn hom_basis(m: &Module, n: &Module) -> Result<HomSpace, ModError> {
    if m.alg != n.alg {
        return Err(ModError::AlgebraMismatch);
    }
    let f = m.field();
    let nv = m.dims.len();
    let mut offs = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offs.push(total);
        total += m.dims[v] * n.dims[v];
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in m.alg.quiver.arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let am = &m.action[ai];
        let an = &n.action[ai];
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![f.zero(); total];
                for k in 0..m.dims[t] {
                    let c = am.get(k, j);
                    if !c.is_zero() {
                        let idx = offs[t] + i * m.dims[t] + k;
                        row[idx] = &row[idx] + c;
                    }
                }
                for k in 0..n.dims[s] {
                    let c = an.get(i, k);
                    if !c.is_zero() {
                        let idx = offs[s] + k * m.dims[s] + j;
                        row[idx] = &row[idx] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Mat::from_rows(f, rows, total);
    let kernel = exactla::kernel_basis(&system);
    let free = exactla::free_columns(&system);
    let basis = kernel
        .vectors()
        .into_iter()
        .map(|v| {
            let comps = (0..nv)
                .map(|w| {
                    if m.dims[w] == 0 {
                        return Mat::zeros(f, n.dims[w], 0);
                    }
                    let block = &v[offs[w]..offs[w] + m.dims[w] * n.dims[w]];
                    Mat::from_rows(f, block.chunks(m.dims[w]).map(|r| r.to_vec()).collect(), m.dims[w])
                })
                .collect();
            ModuleMap::unchecked(m.clone(), n.clone(), comps)
        })
        .collect();
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
        free,
    })
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).map(|h| h.dim()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn small_hom_spaces() {
        let a1 = corpus::a1();
        let pa = Module::projective(&a1, 0);
        assert_eq!(hom_dim(&pa, &pa), 2);
        let sa = Module::simple(&a1, 0);
        let sb = Module::simple(&a1, 1);
        assert_eq!(hom_dim(&sa, &sb), 0);
        let a3 = corpus::a3();
        assert_eq!(hom_dim(&Module::projective(&a3, 0), &Module::simple(&a3, 0)), 1);
    }

    #[test]
    fn basis_maps_intertwine_and_coordinates_round_trip() {
        let a1 = corpus::a1();
        let pa = Module::projective(&a1, 0);
        let pb = Module::projective(&a1, 1);
        let h = hom_basis(&pa, &pb).unwrap();
        assert_eq!(h.dim(), 2);
        for (i, b) in h.basis.iter().enumerate() {
            assert!(ModuleMap::new(b.source.clone(), b.target.clone(), b.comps.clone()).is_ok());
            let c = h.coords(b);
            for (j, x) in c.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
            }
        }
    }

    #[test]
    fn hom_from_projective_is_the_vertex_space() {
        let a2 = corpus::a2();
        let m = Module::projective(&a2, 0).direct_sum(&Module::simple(&a2, 1));
        for v in 0..2 {
            assert_eq!(hom_dim(&Module::projective(&a2, v), &m), m.dims[v]);
        }
    }
}
