//! Enumeration of indecomposable modules and the module category skeleton.

use std::collections::HashMap;
use std::str::FromStr;

use super::ar::{
    ar_sequence_ending_at, ar_translate, ar_translate_inv, cosyzygy, has_injective_summand,
    has_projective_summand, syzygy,
};
use super::decompose::{decompose_with_maps, isomorphic};
use super::hom::{hom_basis, HomSpace};
use super::{Alg, ModError, Module, ModuleMap};
use crate::exactla::{Mat, Scalar};
use crate::lincat::LinCategory;
use crate::quiver::BoundQuiverAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Nakayama,
    HereditaryKnit,
    Closure,
}

impl Strategy {
    /// The cheapest strategy that applies to `alg`.
    pub fn auto(alg: &BoundQuiverAlgebra) -> Self {
        if alg.is_nakayama() {
            Strategy::Nakayama
        } else if alg.is_hereditary() {
            Strategy::HereditaryKnit
        } else {
            Strategy::Closure
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Nakayama => "nakayama",
            Strategy::HereditaryKnit => "hereditary-knit",
            Strategy::Closure => "closure",
        }
    }
}

impl FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nakayama" => Ok(Strategy::Nakayama),
            "hereditary-knit" => Ok(Strategy::HereditaryKnit),
            "closure" => Ok(Strategy::Closure),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

const FUEL: usize = 200;

pub fn is_selfinjective(alg: &BoundQuiverAlgebra) -> bool {
    let alg: Alg = std::sync::Arc::new(alg.clone());
    let injectives: Vec<Module> = (0..alg.n_vertices()).map(|w| Module::injective(&alg, w)).collect();
    (0..alg.n_vertices()).all(|v| {
        let p = Module::projective(&alg, v);
        injectives.iter().any(|i| isomorphic(&p, i).is_some())
    })
}

fn push_new(list: &mut Vec<Module>, m: Module) -> bool {
    if m.is_zero() || list.iter().any(|x| isomorphic(x, &m).is_some()) {
        return false;
    }
    list.push(m);
    true
}

fn sort_canonical(list: &mut [Module]) {
    list.sort_by_key(|m| (m.total_dim(), m.label()));
}

fn nakayama(alg: &Alg) -> Result<Vec<Module>, ModError> {
    if !alg.is_nakayama() {
        return Err(ModError::StrategyMismatch("nakayama".into()));
    }
    let mut out = Vec::new();
    for v in 0..alg.n_vertices() {
        let p = Module::projective(alg, v);
        let (mut sub, mut inc) = (p.clone(), ModuleMap::identity(&p));
        while !sub.is_zero() {
            push_new(&mut out, inc.cokernel().0);
            let (r, rinc) = sub.radical();
            inc = rinc.then(&inc);
            sub = r;
        }
        push_new(&mut out, p);
    }
    Ok(out)
}

fn knit(alg: &Alg) -> Result<Vec<Module>, ModError> {
    if !alg.is_hereditary() {
        return Err(ModError::StrategyMismatch("hereditary-knit".into()));
    }
    let mut out = Vec::new();
    let mut frontier: Vec<Module> = (0..alg.n_vertices()).map(|v| Module::projective(alg, v)).collect();
    for p in &frontier {
        push_new(&mut out, p.clone());
    }
    while let Some(m) = frontier.pop() {
        if out.len() > FUEL {
            return Err(ModError::FuelExhausted { found: out.len() });
        }
        if has_injective_summand(&m) {
            continue;
        }
        let next = ar_translate_inv(&m)?;
        if push_new(&mut out, next.clone()) {
            frontier.push(next);
        }
    }
    Ok(out)
}

/// Closure of simples, projectives and injectives under the translates,
/// syzygies, radicals, tops and socle quotients. The flag is set when the
/// list is also closed under middle terms of almost split sequences, which
/// makes it a whole component of the Auslander-Reiten quiver.
pub fn closure_enumeration(alg: &Alg, fuel: usize) -> Result<(Vec<Module>, bool), ModError> {
    let n = alg.n_vertices();
    let mut out: Vec<Module> = Vec::new();
    let mut queue: Vec<Module> = Vec::new();
    for v in 0..n {
        for m in [Module::simple(alg, v), Module::projective(alg, v), Module::injective(alg, v)] {
            if push_new(&mut out, m.clone()) {
                queue.push(m);
            }
        }
    }
    let mut head = 0;
    while head < queue.len() {
        if out.len() > fuel {
            return Ok((out, false));
        }
        let x = queue[head].clone();
        head += 1;
        let mut derived = vec![syzygy(&x), cosyzygy(&x), x.radical().0, x.top().0];
        let (_, soc) = x.socle();
        derived.push(soc.cokernel().0);
        if !has_projective_summand(&x) {
            derived.push(ar_translate(&x)?);
        }
        if !has_injective_summand(&x) {
            derived.push(ar_translate_inv(&x)?);
        }
        for d in derived {
            for s in decompose_with_maps(&d)? {
                if push_new(&mut out, s.module.clone()) {
                    queue.push(s.module);
                }
            }
        }
    }
    let mut verified = true;
    for x in out.clone() {
        if has_projective_summand(&x) {
            continue;
        }
        let seq = ar_sequence_ending_at(&x)?;
        for s in decompose_with_maps(seq.middle())? {
            if out.iter().all(|y| isomorphic(y, &s.module).is_none()) {
                verified = false;
            }
        }
    }
    Ok((out, verified))
}

/// All indecomposable modules up to isomorphism, ordered by dimension and
/// then label.
pub fn indecomposables(alg: &Alg, strategy: Strategy) -> Result<Vec<Module>, ModError> {
    let mut list = match strategy {
        Strategy::Nakayama => nakayama(alg)?,
        Strategy::HereditaryKnit => knit(alg)?,
        Strategy::Closure => {
            let (list, verified) = closure_enumeration(alg, FUEL)?;
            if !verified {
                return Err(ModError::FuelExhausted { found: list.len() });
            }
            list
        }
    };
    sort_canonical(&mut list);
    Ok(list)
}

/// The full subcategory of indecomposable modules, with hom bases.
#[derive(Debug, Clone)]
pub struct ModCat {
    pub alg: Alg,
    pub objects: Vec<Module>,
    pub labels: Vec<String>,
    homs: Vec<Vec<HomSpace>>,
}

impl ModCat {
    pub fn build(alg: &Alg, strategy: Strategy) -> Result<Self, ModError> {
        Ok(ModCat::from_modules(alg, indecomposables(alg, strategy)?))
    }

    pub fn from_modules(alg: &Alg, objects: Vec<Module>) -> Self {
        let mut labels: Vec<String> = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        for m in &objects {
            let base = m.label();
            let k = seen.entry(base.clone()).or_insert(0);
            *k += 1;
            labels.push(if *k == 1 { base } else { format!("{base}#{k}") });
        }
        let homs = objects
            .iter()
            .map(|x| objects.iter().map(|y| hom_basis(x, y).expect("same algebra")).collect())
            .collect();
        ModCat {
            alg: alg.clone(),
            objects,
            labels,
            homs,
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The index of the object isomorphic to the indecomposable `m`, with an
    /// isomorphism from that object to `m`.
    pub fn find(&self, m: &Module) -> Option<(usize, ModuleMap)> {
        self.objects
            .iter()
            .enumerate()
            .find_map(|(i, x)| isomorphic(x, m).map(|iso| (i, iso)))
    }

    pub fn index_of(&self, m: &Module) -> Option<usize> {
        self.find(m).map(|(i, _)| i)
    }

    pub fn is_projective(&self, i: usize) -> bool {
        has_projective_summand(&self.objects[i])
    }

    pub fn is_injective(&self, i: usize) -> bool {
        has_injective_summand(&self.objects[i])
    }

    pub fn projectives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_projective(i)).collect()
    }

    pub fn injectives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_injective(i)).collect()
    }

    /// Object map of `tau`, undefined on projectives.
    pub fn tau_map(&self) -> Vec<Option<usize>> {
        (0..self.len())
            .map(|i| {
                if self.is_projective(i) {
                    None
                } else {
                    ar_translate(&self.objects[i]).ok().and_then(|t| self.index_of(&t))
                }
            })
            .collect()
    }

    /// Coordinates of the module map `f: objects[i] -> objects[j]`.
    pub fn coords(&self, i: usize, j: usize, f: &ModuleMap) -> Vec<Scalar> {
        self.homs[i][j].coords(f)
    }

    /// Decomposition of `m` as a sorted list of object indices (with
    /// repetition), together with an isomorphism from the sum of those
    /// objects onto `m`.
    pub fn decompose_into(&self, m: &Module) -> Result<(Vec<usize>, ModuleMap), ModError> {
        let parts = decompose_with_maps(m)?;
        let mut idx = Vec::new();
        let mut maps = Vec::new();
        for s in parts {
            let (i, iso) = self
                .find(&s.module)
                .ok_or_else(|| ModError::InvalidModule(format!("{} is not a listed object", s.module.label())))?;
            idx.push(i);
            maps.push(iso.then(&s.inclusion));
        }
        let mut order: Vec<usize> = (0..idx.len()).collect();
        order.sort_by_key(|&k| idx[k]);
        let idx_sorted: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
        let maps_sorted: Vec<&ModuleMap> = order.iter().map(|&k| &maps[k]).collect();
        let iso = ModuleMap::row(&self.alg, m, &maps_sorted);
        Ok((idx_sorted, iso))
    }

    /// The linear category skeleton: object labels, hom dimensions and the
    /// composition tensor in the hom bases.
    pub fn skeleton(&self) -> LinCategory {
        let n = self.len();
        let f = self.alg.field;
        let hom_dims: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| self.homs[i][j].dim()).collect()).collect();
        let identity = (0..n)
            .map(|i| self.homs[i][i].coords(&ModuleMap::identity(&self.objects[i])))
            .collect();
        let mut comp = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (dxy, dyz, dxz) = (hom_dims[x][y], hom_dims[y][z], hom_dims[x][z]);
                    if dxy == 0 || dyz == 0 || dxz == 0 {
                        continue;
                    }
                    let mut t = Mat::zeros(f, dxy * dyz, dxz);
                    for (i, fi) in self.homs[x][y].basis.iter().enumerate() {
                        for (j, gj) in self.homs[y][z].basis.iter().enumerate() {
                            let c = self.homs[x][z].coords(&fi.then(gj));
                            for (k, v) in c.into_iter().enumerate() {
                                t.set(i * dyz + j, k, v);
                            }
                        }
                    }
                    if !t.is_zero() {
                        comp.insert((x, y, z), t);
                    }
                }
            }
        }
        LinCategory::new(f, self.labels.clone(), hom_dims, identity, comp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn labels(list: &[Module]) -> Vec<String> {
        list.iter().map(Module::label).collect()
    }

    #[test]
    fn a1_has_eight_indecomposables() {
        let list = indecomposables(&corpus::a1(), Strategy::Nakayama).unwrap();
        assert_eq!(
            labels(&list),
            ["a", "b", "a/b", "b/a", "a/b/a", "b/a/b", "a/b/a/b", "b/a/b/a"]
        );
    }

    #[test]
    fn a2_and_a3_counts() {
        assert_eq!(indecomposables(&corpus::a2(), Strategy::Nakayama).unwrap().len(), 6);
        let a3 = indecomposables(&corpus::a3(), Strategy::HereditaryKnit).unwrap();
        assert_eq!(labels(&a3), ["a", "b", "c", "a/b", "b/c", "a/b/c"]);
    }

    #[test]
    fn closure_agrees_with_the_specialised_strategies() {
        for (alg, s) in [
            (corpus::a2(), Strategy::Nakayama),
            (corpus::a3(), Strategy::HereditaryKnit),
        ] {
            let fast = indecomposables(&alg, s).unwrap();
            let slow = indecomposables(&alg, Strategy::Closure).unwrap();
            assert_eq!(labels(&fast), labels(&slow));
        }
    }

    #[test]
    fn strategy_mismatch() {
        assert!(matches!(
            indecomposables(&corpus::a1(), Strategy::HereditaryKnit),
            Err(ModError::StrategyMismatch(_))
        ));
    }

    #[test]
    fn selfinjectivity() {
        assert!(is_selfinjective(&corpus::a1()));
        assert!(is_selfinjective(&corpus::a2()));
        assert!(!is_selfinjective(&corpus::a3()));
        assert!(corpus::a1().is_nakayama());
    }
}
