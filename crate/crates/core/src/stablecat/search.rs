//! Triangles found by search: a third object with the hom dimensions forced
//! by the long exact sequences, and generic maps making those sequences
//! exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{StableError, TriangModel, Triangle};
use crate::exactla::{self, Mat, Scalar, Subspace};
use crate::lincat::{CatMor, LinCategory};

const ATTEMPTS: usize = 6;

/// A random element of the subspace of morphisms `src -> tgt` on which the
/// linear map `constraint` vanishes.
fn generic_solution<F>(c: &LinCategory, src: &[usize], tgt: &[usize], constraint: F, rng: &mut ChaCha8Rng) -> CatMor
where
    F: Fn(&CatMor) -> Vec<Scalar>,
{
    let n = c.mor_dim(src, tgt);
    let f = c.field;
    let rows = if n == 0 {
        0
    } else {
        constraint(&c.zero_mor(src, tgt)).len()
    };
    let sol = if rows == 0 {
        Subspace::full(f, n)
    } else {
        exactla::kernel_basis(&c.mor_operator(src, tgt, rows, constraint))
    };
    let mut v = vec![f.zero(); n];
    for b in sol.vectors() {
        let s = f.int(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 });
        v = exactla::vec_add(&v, &exactla::vec_scale(&b, &s));
    }
    c.mor_from_coords(src, tgt, &v)
}

/// `ker b = im a` for linear maps `a` followed by `b`.
fn exact_at(a: &Mat, b: &Mat) -> bool {
    exactla::image_basis(a) == exactla::kernel_basis(b)
}

/// All multisets of objects `z` (as sorted lists) with `sum dim Hom(w, z)
/// = d[w]` for every `w` and each multiplicity at most `bound`.
fn multisets_with_dims(c: &LinCategory, d: &[usize], bound: usize) -> Vec<Vec<usize>> {
    fn go(c: &LinCategory, z: usize, resid: &mut [i64], cur: &mut Vec<usize>, bound: usize, out: &mut Vec<Vec<usize>>) {
        let n = c.len();
        if z == n {
            if resid.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0;
        loop {
            go(c, z + 1, resid, cur, bound, out);
            if m == bound {
                break;
            }
            for (w, r) in resid.iter_mut().enumerate() {
                *r -= c.dim(w, z) as i64;
            }
            cur.push(z);
            m += 1;
            if resid.iter().any(|&r| r < 0) {
                break;
            }
        }
        for _ in 0..m {
            cur.pop();
            for (w, r) in resid.iter_mut().enumerate() {
                *r += c.dim(w, z) as i64;
            }
        }
    }
    let mut resid: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    let mut out = Vec::new();
    go(c, 0, &mut resid, &mut Vec::new(), bound, &mut out);
    out
}

/// Every hom sequence, covariant and contravariant, is exact at `Y`, `Z`
/// and `X[1]`.
pub fn long_sequences_exact(c: &LinCategory, t: &Triangle, f1: &CatMor) -> bool {
    (0..c.len()).all(|w| {
        let (pf, pg, ph, pf1) = (c.post_map(w, &t.f), c.post_map(w, &t.g), c.post_map(w, &t.h), c.post_map(w, f1));
        let (qf, qg, qh, qf1) = (c.pre_map(w, &t.f), c.pre_map(w, &t.g), c.pre_map(w, &t.h), c.pre_map(w, f1));
        exact_at(&pf, &pg)
            && exact_at(&pg, &ph)
            && exact_at(&ph, &pf1)
            && exact_at(&qg, &qf)
            && exact_at(&qh, &qg)
            && exact_at(&qf1, &qh)
    })
}

/// Complete `f` to a triangle whose long hom sequences are all exact.
pub fn hom_exact_cone(model: &TriangModel, f: &CatMor, mult_bound: usize) -> Result<Triangle, StableError> {
    let c = &model.base;
    let n = c.len();
    let f1 = model.shift.apply_mor(f);
    let d: Vec<usize> = (0..n)
        .map(|w| {
            let a = c.post_map(w, f);
            let b = c.post_map(w, &f1);
            (a.rows() - a.rank()) + (b.cols() - b.rank())
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for z in multisets_with_dims(c, &d, mult_bound) {
        for _ in 0..ATTEMPTS {
            let g = generic_solution(c, &f.target, &z, |g| LinCategory::mor_coords(&c.compose_mor(f, g)), &mut rng);
            let h = generic_solution(
                c,
                &z,
                &f1.source,
                |h| {
                    let mut v = LinCategory::mor_coords(&c.compose_mor(&g, h));
                    v.extend(LinCategory::mor_coords(&c.compose_mor(h, &f1)));
                    v
                },
                &mut rng,
            );
            let t = Triangle { f: f.clone(), g, h };
            if long_sequences_exact(c, &t, &f1) {
                return Ok(t);
            }
        }
    }
    Err(StableError::ConeNotFound(format!(
        "{} -> {} within multiplicity {mult_bound}",
        label_sum(c, &f.source),
        label_sum(c, &f.target)
    )))
}

pub fn label_sum(c: &LinCategory, objs: &[usize]) -> String {
    if objs.is_empty() {
        "0".into()
    } else {
        objs.iter().map(|&x| c.objects[x].as_str()).collect::<Vec<_>>().join(" + ")
    }
}
