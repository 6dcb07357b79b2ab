//! The mesh category of the translation quiver `ZQ` on a finite range of
//! slices. For a Dynkin quiver `Q` this is the category of indecomposable
//! objects of the bounded derived category of `kQ`.

use std::collections::HashMap;

use crate::exactla::{self, Field, Mat, Scalar};

/// Hom spaces out of one vertex, found by knitting along mesh relations.
#[derive(Debug, Clone)]
struct HomFrom {
    dims: Vec<usize>,
    /// `Hom(u, z) -> Hom(u, w)` for each arrow `z -> w`.
    post: HashMap<usize, Mat>,
    /// The path realising each basis element of `Hom(u, w)`.
    paths: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone)]
pub struct Mesh {
    pub field: Field,
    /// Number of vertices of `Q`.
    pub k: usize,
    pub n_lo: i64,
    pub n_hi: i64,
    /// Arrows of `ZQ` as `(source, target)` vertex ids.
    pub arrows: Vec<(usize, usize)>,
    into: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    homs: Vec<HomFrom>,
}

impl Mesh {
    /// `q_arrows` are the arrows `(source, target)` of `Q`; `q_order` lists
    /// the vertices of `Q` so that every arrow goes from a later vertex to
    /// an earlier one (sinks first).
    pub fn new(field: Field, k: usize, q_arrows: &[(usize, usize)], q_order: &[usize], n_lo: i64, n_hi: i64) -> Self {
        let slices = (n_hi - n_lo + 1) as usize;
        let nv = slices * k;
        let id = |x: usize, n: i64| (n - n_lo) as usize * k + x;
        let mut arrows = Vec::new();
        for n in n_lo..=n_hi {
            for &(y, x) in q_arrows {
                arrows.push((id(x, n), id(y, n)));
                if n < n_hi {
                    arrows.push((id(y, n), id(x, n + 1)));
                }
            }
        }
        let mut into = vec![Vec::new(); nv];
        let mut out = vec![Vec::new(); nv];
        for (a, &(s, t)) in arrows.iter().enumerate() {
            out[s].push(a);
            into[t].push(a);
        }
        let mut mesh = Mesh {
            field,
            k,
            n_lo,
            n_hi,
            arrows,
            into,
            out,
            homs: Vec::new(),
        };
        let order: Vec<usize> = (n_lo..=n_hi).flat_map(|n| q_order.iter().map(move |&x| id(x, n))).collect();
        mesh.homs = (0..nv).map(|u| mesh.knit(u, &order)).collect();
        mesh
    }

    pub fn n_vertices(&self) -> usize {
        self.into.len()
    }

    pub fn vertex(&self, x: usize, n: i64) -> Option<usize> {
        (x < self.k && (self.n_lo..=self.n_hi).contains(&n)).then(|| (n - self.n_lo) as usize * self.k + x)
    }

    /// `(x, n)` for a vertex id.
    pub fn coords_of(&self, v: usize) -> (usize, i64) {
        (v % self.k, self.n_lo + (v / self.k) as i64)
    }

    pub fn tau(&self, v: usize) -> Option<usize> {
        let (x, n) = self.coords_of(v);
        self.vertex(x, n - 1)
    }

    pub fn tau_inv(&self, v: usize) -> Option<usize> {
        let (x, n) = self.coords_of(v);
        self.vertex(x, n + 1)
    }

    fn knit(&self, u: usize, order: &[usize]) -> HomFrom {
        let f = self.field;
        let nv = self.n_vertices();
        let mut h = HomFrom {
            dims: vec![0; nv],
            post: HashMap::new(),
            paths: vec![Vec::new(); nv],
        };
        let start = order.iter().position(|&w| w == u).expect("vertex in order");
        h.dims[u] = 1;
        h.paths[u] = vec![Vec::new()];
        for &w in &order[start + 1..] {
            let comps = &self.into[w];
            let offs: Vec<usize> = comps
                .iter()
                .scan(0, |acc, &a| {
                    let o = *acc;
                    *acc += h.dims[self.arrows[a].0];
                    Some(o)
                })
                .collect();
            let e: usize = comps.iter().map(|&a| h.dims[self.arrows[a].0]).sum();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            if let Some(tw) = self.tau(w) {
                for j in 0..h.dims[tw] {
                    let mut v = vec![f.zero(); e];
                    for (ci, &a) in comps.iter().enumerate() {
                        let z = self.arrows[a].0;
                        let b = *self.out[tw]
                            .iter()
                            .find(|&&b| self.arrows[b].1 == z)
                            .expect("mesh arrow");
                        let mut unit = vec![f.zero(); h.dims[tw]];
                        unit[j] = f.one();
                        let img = h.post[&b].mul_vec(&unit);
                        for (k, x) in img.into_iter().enumerate() {
                            v[offs[ci] + k] = x;
                        }
                    }
                    rows.push(v);
                }
            }
            let q = exactla::quotient_coords(f, e, &rows);
            h.dims[w] = q.dim();
            for (ci, &a) in comps.iter().enumerate() {
                let dz = h.dims[self.arrows[a].0];
                h.post.insert(a, q.proj.select_cols(&(offs[ci]..offs[ci] + dz).collect::<Vec<_>>()));
            }
            let mut paths = Vec::new();
            for i in 0..q.dim() {
                let c = q.reps.row(i).iter().position(|x| !x.is_zero()).expect("unit representative");
                let ci = offs.iter().rposition(|&o| o <= c).expect("component");
                let a = comps[ci];
                let mut p = h.paths[self.arrows[a].0][c - offs[ci]].clone();
                p.push(a);
                paths.push(p);
            }
            h.paths[w] = paths;
        }
        h
    }

    pub fn dim(&self, u: usize, w: usize) -> usize {
        self.homs[u].dims[w]
    }

    pub fn basis_path(&self, u: usize, w: usize, i: usize) -> &[usize] {
        &self.homs[u].paths[w][i]
    }

    /// Coordinates in `Hom(u, end)` of a path of arrows starting at `u`.
    pub fn path_coords(&self, u: usize, path: &[usize]) -> Vec<Scalar> {
        let h = &self.homs[u];
        let mut v = vec![self.field.one()];
        for &a in path {
            v = h.post[&a].mul_vec(&v);
        }
        v
    }

    pub fn path_end(&self, u: usize, path: &[usize]) -> usize {
        path.last().map_or(u, |&a| self.arrows[a].1)
    }

    /// Image of a path under a vertex map that is an automorphism of the
    /// translation quiver, if every vertex stays in range.
    pub fn map_path(&self, sigma: &dyn Fn(usize) -> Option<usize>, path: &[usize]) -> Option<Vec<usize>> {
        path.iter()
            .map(|&a| {
                let (s, t) = self.arrows[a];
                let (s2, t2) = (sigma(s)?, sigma(t)?);
                self.out[s2].iter().copied().find(|&b| self.arrows[b].1 == t2)
            })
            .collect()
    }

    /// Image of `c` in `Hom(u, w)` under a vertex map, as coordinates in
    /// `Hom(sigma u, sigma w)`. `None` if some path leaves the range.
    pub fn map_coords(&self, sigma: &dyn Fn(usize) -> Option<usize>, u: usize, w: usize, c: &[Scalar]) -> Option<Vec<Scalar>> {
        let (u2, w2) = (sigma(u)?, sigma(w)?);
        let mut out = vec![self.field.zero(); self.dim(u2, w2)];
        for (i, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let p = self.map_path(sigma, self.basis_path(u, w, i))?;
            out = exactla::vec_add(&out, &exactla::vec_scale(&self.path_coords(u2, &p), x));
        }
        Some(out)
    }

    /// `g . f` for `f` in `Hom(u, v)` and `g` in `Hom(v, w)`.
    pub fn compose(&self, u: usize, v: usize, w: usize, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim(u, w)];
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut p = self.basis_path(u, v, i).to_vec();
                p.extend_from_slice(self.basis_path(v, w, j));
                out = exactla::vec_add(&out, &exactla::vec_scale(&self.path_coords(u, &p), &(a * b)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Mesh {
        // a -> b -> c
        Mesh::new(Field::Rationals, 3, &[(0, 1), (1, 2)], &[2, 1, 0], 0, 4)
    }

    #[test]
    fn hom_dimensions_from_projectives() {
        let m = a3();
        let p = |x| m.vertex(x, 0).unwrap();
        // Hom(P_c, P_b) = Hom(P_c, P_a) = k, Hom(P_a, P_c) = 0
        assert_eq!(m.dim(p(2), p(1)), 1);
        assert_eq!(m.dim(p(2), p(0)), 1);
        assert_eq!(m.dim(p(0), p(2)), 0);
        // the mesh relation at tau^-1 P_c kills P_c -> P_b -> tau^-1 P_c
        let s_b = m.vertex(2, 1).unwrap();
        assert_eq!(m.dim(p(2), s_b), 0);
        assert_eq!(m.dim(p(1), s_b), 1);
    }

    #[test]
    fn composition_along_paths() {
        let m = a3();
        let (pc, pb, pa) = (m.vertex(2, 0).unwrap(), m.vertex(1, 0).unwrap(), m.vertex(0, 0).unwrap());
        let one = [Field::Rationals.one()];
        assert_eq!(m.compose(pc, pb, pa, &one, &one), vec![Field::Rationals.one()]);
    }
}
