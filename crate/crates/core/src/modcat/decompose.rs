//! Krull-Schmidt decomposition by Fitting splitting, and the locality test
//! for endomorphism rings.

use super::hom::hom_basis;
use super::{ModError, Module, ModuleMap};
use crate::exactla::{min_poly, roots_in_field, Scalar, Subspace};

/// An indecomposable summand together with its inclusion into the module
/// that was decomposed.
#[derive(Debug, Clone)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModuleMap,
}

fn map_pow(m: &ModuleMap, e: usize) -> ModuleMap {
    ModuleMap::unchecked(
        m.source.clone(),
        m.target.clone(),
        m.comps.iter().map(|c| c.pow(e)).collect(),
    )
}

fn shift(m: &ModuleMap, lambda: &Scalar) -> ModuleMap {
    m.add(&ModuleMap::identity(&m.source).scale(&-lambda))
}

/// An endomorphism `phi^N` that is neither zero nor invertible, if one is
/// found among the endomorphism basis, its pairwise products and sums,
/// shifted by their eigenvalues.
fn fitting_candidate(m: &Module, basis: &[ModuleMap]) -> Option<ModuleMap> {
    let n = m.total_dim();
    let mut cands: Vec<ModuleMap> = basis.to_vec();
    for x in basis {
        for y in basis {
            cands.push(x.then(y));
        }
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            cands.push(x.add(y));
        }
    }
    for phi in &cands {
        for lambda in roots_in_field(&min_poly(&phi.total_matrix()), m.field()) {
            let p = map_pow(&shift(phi, &lambda), n);
            if !p.is_zero() {
                return Some(p);
            }
        }
    }
    None
}

/// If the endomorphism algebra spanned by `basis` is split local, i.e.
/// `k * id + (nilpotent ideal)`, a spanning set of that ideal.
fn split_local(m: &Module, basis: &[ModuleMap]) -> Result<Option<Vec<ModuleMap>>, ModError> {
    let n = m.total_dim();
    let f = m.field();
    let mut nil = Vec::new();
    for phi in basis {
        let roots = roots_in_field(&min_poly(&phi.total_matrix()), f);
        match roots.as_slice() {
            [lambda] => {
                let x = shift(phi, lambda);
                if !map_pow(&x, n).is_zero() {
                    return Ok(None);
                }
                nil.push(x);
            }
            [] => {
                return Err(ModError::NonSplitField(format!(
                    "an endomorphism of {} has no eigenvalue in {}",
                    m.label(),
                    f.tag()
                )))
            }
            _ => return Ok(None),
        }
    }
    let dim = n * n;
    let flat = |x: &ModuleMap| x.total_matrix().entries().to_vec();
    let ideal = Subspace::span(f, dim, &nil.iter().map(flat).collect::<Vec<_>>());
    for x in &nil {
        for b in basis {
            if !ideal.contains(&flat(&x.then(b))) || !ideal.contains(&flat(&b.then(x))) {
                return Ok(None);
            }
        }
    }
    let mut power = nil.clone();
    for _ in 0..=n {
        if power.iter().all(ModuleMap::is_zero) {
            return Ok(Some(nil));
        }
        let mut next = Vec::new();
        for x in &power {
            for y in &nil {
                next.push(x.then(y));
            }
        }
        power = next;
    }
    Err(ModError::NonSplitField(format!(
        "no idempotent found in the endomorphism ring of {}",
        m.label()
    )))
}

/// Indecomposable summands with inclusions; their sum maps isomorphically
/// onto `m`.
pub fn decompose_with_maps(m: &Module) -> Result<Vec<Summand>, ModError> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let end = hom_basis(m, m)?;
    if let Some(p) = fitting_candidate(m, &end.basis) {
        let mut out = Vec::new();
        for (part, inc) in [p.image(), p.kernel()] {
            for s in decompose_with_maps(&part)? {
                out.push(Summand {
                    inclusion: s.inclusion.then(&inc),
                    module: s.module,
                });
            }
        }
        return Ok(out);
    }
    if split_local(m, &end.basis)?.is_some() {
        Ok(vec![Summand {
            module: m.clone(),
            inclusion: ModuleMap::identity(m),
        }])
    } else {
        Err(ModError::NonSplitField(format!(
            "no splitting endomorphism found for {}",
            m.label()
        )))
    }
}

/// Multiset of indecomposable summands up to isomorphism, in order of first
/// appearance.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>, ModError> {
    let mut out: Vec<(Module, usize)> = Vec::new();
    for s in decompose_with_maps(m)? {
        match out.iter_mut().find(|(x, _)| isomorphic(x, &s.module).is_some()) {
            Some(entry) => entry.1 += 1,
            None => out.push((s.module, 1)),
        }
    }
    Ok(out)
}

pub fn is_indecomposable(m: &Module) -> Result<bool, ModError> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = hom_basis(m, m)?;
    if fitting_candidate(m, &end.basis).is_some() {
        return Ok(false);
    }
    Ok(split_local(m, &end.basis)?.is_some())
}

/// A spanning set of `rad End(m)` for indecomposable `m`.
pub fn end_radical(m: &Module) -> Result<Vec<ModuleMap>, ModError> {
    let end = hom_basis(m, m)?;
    split_local(m, &end.basis)?
        .ok_or_else(|| ModError::InvalidModule(format!("{} is decomposable", m.label())))
}

/// An isomorphism between two indecomposable modules, if they are
/// isomorphic. `g f` is a unit of the local ring `End(m)` for some basis
/// pair exactly when `m` and `n` are isomorphic.
pub fn isomorphic(m: &Module, n: &Module) -> Option<ModuleMap> {
    if m.dims != n.dims || m.alg != n.alg {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::zero(m, n));
    }
    let hmn = hom_basis(m, n).ok()?;
    let hnm = hom_basis(n, m).ok()?;
    let d = m.total_dim();
    for f in &hmn.basis {
        if !f.is_iso() {
            continue;
        }
        for g in &hnm.basis {
            if !map_pow(&f.then(g), d).is_zero() {
                return Some(f.clone());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn repeated_summand() {
        let a1 = corpus::a1();
        let pa = Module::projective(&a1, 0);
        let d = decompose(&pa.direct_sum(&pa)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(isomorphic(&d[0].0, &pa).is_some());
    }

    #[test]
    fn regular_module_of_the_line() {
        let a3 = corpus::a3();
        let reg = Module::proj_sum(&a3, &[0, 1, 2]);
        let d = decompose(&reg).unwrap();
        assert_eq!(d.len(), 3);
        for v in 0..3 {
            assert!(d.iter().any(|(x, m)| *m == 1 && isomorphic(x, &Module::projective(&a3, v)).is_some()));
        }
    }

    #[test]
    fn indecomposability() {
        let a1 = corpus::a1();
        let sa = Module::simple(&a1, 0);
        assert!(is_indecomposable(&sa).unwrap());
        assert!(!is_indecomposable(&sa.direct_sum(&Module::simple(&a1, 1))).unwrap());
        let pa = Module::projective(&a1, 0);
        let (soc, inc) = pa.socle();
        let (q, _) = inc.cokernel();
        assert_eq!(q.label(), "a/b/a");
        assert!(is_indecomposable(&q).unwrap());
        assert_eq!(soc.label(), "b");
    }

    #[test]
    fn summand_inclusions_form_an_isomorphism() {
        let a2 = corpus::a2();
        let m = Module::projective(&a2, 0)
            .direct_sum(&Module::simple(&a2, 1))
            .direct_sum(&Module::simple(&a2, 1));
        let parts = decompose_with_maps(&m).unwrap();
        assert_eq!(parts.len(), 3);
        let incs: Vec<&ModuleMap> = parts.iter().map(|s| &s.inclusion).collect();
        let total = ModuleMap::row(&a2, &m, &incs);
        assert!(total.is_iso());
    }

}
