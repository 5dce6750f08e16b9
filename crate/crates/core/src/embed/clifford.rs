//! Clifford semigroups as strong semilattices of groups.

use serde::Serialize;

use super::{Image, RepresentationMap, TargetSpace};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::{FinSemigroup, InverseStructure};
use crate::topo::TopSpec;
use crate::transforms::PartialPerm;

/// `S = ⋃ H_e` over `e ∈ E(S)`, with structure maps `x ↦ xe` for `e ≤ f`.
#[derive(Debug, Clone)]
pub struct CliffordDecomposition {
    inv: InverseStructure,
    /// `E(S)` in increasing element order.
    idempotents: Vec<usize>,
    /// `groups[i]` is the maximal subgroup at `idempotents[i]`.
    groups: Vec<Bits>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureMap {
    pub from: usize,
    pub to: usize,
    /// `(x, xe)` for `x` in the upper group.
    pub pairs: Vec<(usize, usize)>,
}

impl CliffordDecomposition {
    pub fn base(&self) -> &FinSemigroup {
        self.inv.base()
    }

    pub fn inverse(&self) -> &InverseStructure {
        &self.inv
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn groups(&self) -> &[Bits] {
        &self.groups
    }

    pub fn group_of(&self, e: usize) -> Option<&Bits> {
        self.idempotents.iter().position(|&f| f == e).map(|i| &self.groups[i])
    }

    /// `e ≤ f` iff `ef = e`.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.base().mul(e, f) == e
    }

    /// `φ_{f,e}: H_f → H_e`, `x ↦ xe`, for `e ≤ f`.
    pub fn structure_map(&self, f: usize, e: usize) -> Result<StructureMap> {
        if !self.leq(e, f) {
            return Err(Error::Domain(format!("{} is not below {}", self.base().label(e), self.base().label(f))));
        }
        let h = self.group_of(f).ok_or_else(|| Error::Domain(format!("{f} is not idempotent")))?;
        Ok(StructureMap {
            from: f,
            to: e,
            pairs: h.iter().map(|x| (x, self.base().mul(x, e))).collect(),
        })
    }

    /// All structure maps with `e ≤ f`, in lexicographic `(f, e)` order.
    pub fn structure_maps(&self) -> Vec<StructureMap> {
        let mut out = Vec::new();
        for &f in &self.idempotents {
            for &e in &self.idempotents {
                if self.leq(e, f) {
                    out.push(self.structure_map(f, e).expect("e ≤ f"));
                }
            }
        }
        out
    }
}

pub fn clifford_decompose(inv: &InverseStructure) -> Result<CliffordDecomposition> {
    if !inv.is_clifford() {
        return Err(Error::Domain(format!("{} is not a Clifford semigroup", inv.base().name())));
    }
    let s = inv.base();
    let idempotents: Vec<usize> = inv.idempotents().iter().collect();
    let groups: Vec<Bits> = idempotents.iter().map(|&e| inv.maximal_subgroup(e)).collect::<Result<_>>()?;
    let mut cover = Bits::new(s.len());
    for h in &groups {
        if cover.intersects(h) {
            return Err(Error::TheoremViolation("maximal subgroups overlap".into()));
        }
        cover.union_with(h);
    }
    if cover.count() != s.len() {
        return Err(Error::TheoremViolation("maximal subgroups do not cover the semigroup".into()));
    }
    let d = CliffordDecomposition {
        inv: inv.clone(),
        idempotents,
        groups,
    };
    for m in d.structure_maps() {
        let target = d.group_of(m.to).expect("idempotent");
        if let Some(&(x, y)) = m.pairs.iter().find(|(_, y)| !target.contains(*y)) {
            return Err(Error::TheoremViolation(format!(
                "{}·{} = {} is outside the group of {}",
                s.label(x),
                s.label(m.to),
                s.label(y),
                s.label(m.to)
            )));
        }
    }
    for (i, &e) in d.idempotents.iter().enumerate() {
        for (j, &f) in d.idempotents.iter().enumerate() {
            let ef = s.mul(e, f);
            for x in d.groups[i].iter() {
                for y in d.groups[j].iter() {
                    let lhs = s.mul(x, y);
                    let rhs = s.mul(s.mul(x, ef), s.mul(y, ef));
                    if lhs != rhs {
                        return Err(Error::TheoremViolation(format!(
                            "strong semilattice law fails at ({}, {})",
                            s.label(x),
                            s.label(y)
                        )));
                    }
                }
            }
        }
    }
    Ok(d)
}

/// `s ↦ (ss⁻¹, (c_e(s))_e)` into `E(S) × ∏ H_e⁰`, where `c_e(s) = se` if
/// `e ≤ ss⁻¹` and the adjoined zero otherwise.
///
/// Only discrete sources are accepted: for other topologies the right
/// exponent set is not pinned down and no product shape is claimed.
pub fn clifford_product_embed(d: &CliffordDecomposition, topology: &TopSpec) -> Result<RepresentationMap> {
    let s = d.base();
    if topology.len() != s.len() {
        return Err(Error::Topology("topology has the wrong number of points".into()));
    }
    if !topology.is_discrete() {
        return Err(Error::Domain(
            "the product embedding is only constructed for discrete sources".into(),
        ));
    }
    let (e_s, e_idx) = s.subsemigroup(d.inverse().idempotents(), "E")?;
    let mut factors = vec![e_s];
    let mut group_idx = Vec::new();
    for (i, h) in d.groups().iter().enumerate() {
        let (g, idx) = s.subsemigroup(h, format!("H{}", d.idempotents()[i]))?;
        factors.push(g.adjoin_zero());
        group_idx.push(idx);
    }
    let local = |idx: &[usize], x: usize| idx.iter().position(|&y| y == x).expect("element of the subsemigroup");
    let images = (0..s.len())
        .map(|x| {
            let top = d.inverse().range_idempotent(x);
            let mut v = vec![local(&e_idx, top)];
            for (i, &e) in d.idempotents().iter().enumerate() {
                v.push(if d.leq(e, top) {
                    local(&group_idx[i], s.mul(x, e))
                } else {
                    group_idx[i].len()
                });
            }
            Image::Tuple(v)
        })
        .collect();
    RepresentationMap::new(s.clone(), images, TargetSpace::Finite, 0, factors)
}

/// The characteristic vector of `dom e` for an idempotent partial bijection.
pub fn semil_iso(e: &PartialPerm) -> Result<Vec<bool>> {
    if !e.is_idempotent() {
        return Err(Error::Domain(format!("{e} is not idempotent")));
    }
    Ok((0..e.window()).map(|x| e.apply(x).is_some()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::builders::*;

    #[test]
    fn decompositions() {
        let c = chain(4);
        let d = clifford_decompose(&InverseStructure::new(&c).unwrap()).unwrap();
        assert!(d.groups().iter().all(|h| h.count() == 1));
        assert_eq!(d.structure_maps().len(), 10);
        let z = cyclic_group(4);
        let d = clifford_decompose(&InverseStructure::new(&z).unwrap()).unwrap();
        assert_eq!(d.groups().len(), 1);
        assert_eq!(d.structure_maps().len(), 1);
        let x = sign_product(3);
        let d = clifford_decompose(&InverseStructure::new(&x).unwrap()).unwrap();
        assert_eq!(d.idempotents(), &[0, 2, 4, 6]);
        assert!(d.groups().iter().all(|h| h.count() == 2));
        let m = d.structure_map(sign_index(1, false), 0).unwrap();
        assert_eq!(m.pairs, vec![(2, 0), (3, 1)]);
        assert!(clifford_decompose(&InverseStructure::new(&brandt(2)).unwrap()).is_err());
    }

    #[test]
    fn product_embeddings() {
        for s in bundled() {
            let Ok(inv) = InverseStructure::new(&s) else { continue };
            let Ok(d) = clifford_decompose(&inv) else { continue };
            clifford_product_embed(&d, &TopSpec::discrete(s.len())).unwrap();
            if s.len() > 1 {
                assert!(clifford_product_embed(&d, &TopSpec::indiscrete(s.len())).is_err());
            }
        }
    }

    #[test]
    fn semil_examples() {
        assert_eq!(semil_iso(&PartialPerm::identity(3)).unwrap(), vec![true; 3]);
        assert_eq!(semil_iso(&PartialPerm::empty(3)).unwrap(), vec![false; 3]);
        let a = PartialPerm::identity_on(3, &[0, 2]).unwrap();
        let b = PartialPerm::identity_on(3, &[1, 2]).unwrap();
        assert_eq!(semil_iso(&a.compose(&b).unwrap()).unwrap(), vec![false, false, true]);
        assert!(semil_iso(&PartialPerm::from_pairs(2, &[(0, 1)]).unwrap()).is_err());
    }
}
