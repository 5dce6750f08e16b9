//! Exhaustive checks on finite topological semigroups.
//!
//! Every quantifier over "open sets containing x" is reduced to the smallest
//! one, `N(x)`: each property below only gets harder as its neighbourhoods
//! grow or its target open shrinks.
//!
//! The congruence check asks for classes forming a basis. Its subbasis
//! variant for `I_ℕ` has no finite counterpart known to us and is not offered.

use serde::Serialize;

use super::TopSpec;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::congruence::{ChainStep, ClosureRun};
use crate::semigroup::{CongruenceKind, FinSemigroup, InverseStructure};

fn same_carrier(s: &FinSemigroup, t: &TopSpec) -> Result<()> {
    if s.len() != t.len() {
        return Err(Error::Topology(format!(
            "topology has {} points, semigroup has {}",
            t.len(),
            s.len()
        )));
    }
    Ok(())
}

/// Multiplication fails to be continuous at `(a, b)`: `u·v` leaves `open`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityFailure {
    pub a: usize,
    pub b: usize,
    pub open: Bits,
    pub u: usize,
    pub v: usize,
}

/// Continuity at `(a, b)` holds iff `N(a)·N(b) ⊆ N(ab)`.
pub fn continuity_check(s: &FinSemigroup, t: &TopSpec) -> Result<Option<ContinuityFailure>> {
    continuity_check_within(s, t, &Bits::full(s.len()))
}

/// Continuity at the pairs of points drawn from `core`.
pub fn continuity_check_within(s: &FinSemigroup, t: &TopSpec, core: &Bits) -> Result<Option<ContinuityFailure>> {
    same_carrier(s, t)?;
    for a in core.iter() {
        for b in core.iter() {
            let open = t.nbhd(s.mul(a, b));
            for u in t.nbhd(a).iter() {
                for v in t.nbhd(b).iter() {
                    if !open.contains(s.mul(u, v)) {
                        return Ok(Some(ContinuityFailure {
                            a,
                            b,
                            open: open.clone(),
                            u,
                            v,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// First `x` with `N(x)⁻¹ ⊄ N(x⁻¹)`.
pub fn inversion_discontinuity(inv: &InverseStructure, t: &TopSpec) -> Option<usize> {
    (0..t.len()).find(|&x| !t.nbhd(x).iter().all(|y| t.nbhd(inv.inv(x)).contains(inv.inv(y))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum DitopFailure {
    /// Inversion is not continuous at `x`.
    Inversion { x: usize },
    /// Even the smallest neighbourhoods let `escaping` outside `open ∋ x`.
    Neighbourhood { x: usize, open: Bits, escaping: usize },
}

/// `{s : ∃e ∈ W∩E, es ∈ U} ∩ {s : ss⁻¹ ∈ W}`, optionally `∩ {s : s⁻¹s ∈ V}`.
pub fn ditop_set(inv: &InverseStructure, u: &Bits, w: &Bits, v: Option<&Bits>) -> Bits {
    let s = inv.base();
    let n = s.len();
    let e_in_w = w.intersection(inv.idempotents());
    Bits::from_indices(
        n,
        (0..n).filter(|&x| {
            e_in_w.iter().any(|e| u.contains(s.mul(e, x)))
                && w.contains(inv.range_idempotent(x))
                && v.is_none_or(|v| v.contains(inv.domain_idempotent(x)))
        }),
    )
}

fn ditop_generic(inv: &InverseStructure, t: &TopSpec, weak: bool) -> Result<Option<DitopFailure>> {
    same_carrier(inv.base(), t)?;
    if let Some(x) = inversion_discontinuity(inv, t) {
        return Ok(Some(DitopFailure::Inversion { x }));
    }
    for x in 0..t.len() {
        let o = t.nbhd(x);
        let w = t.nbhd(inv.range_idempotent(x));
        let v = weak.then(|| t.nbhd(inv.domain_idempotent(x)));
        let d = ditop_set(inv, o, w, v);
        if let Some(escaping) = d.difference(o).first() {
            return Ok(Some(DitopFailure::Neighbourhood {
                x,
                open: o.clone(),
                escaping,
            }));
        }
    }
    Ok(None)
}

/// Ditopological: inversion is continuous, and for every `x` and open `O ∋ x`
/// there are neighbourhoods `U ∋ x`, `W ∋ xx⁻¹` whose set lies in `O`.
pub fn ditopological_check(inv: &InverseStructure, t: &TopSpec) -> Result<Option<DitopFailure>> {
    ditop_generic(inv, t, false)
}

/// As [`ditopological_check`] with the extra constraint `s⁻¹s ∈ V`, `V ∋ x⁻¹x`.
pub fn weakly_ditopological_check(inv: &InverseStructure, t: &TopSpec) -> Result<Option<DitopFailure>> {
    ditop_generic(inv, t, true)
}

/// Why no right congruence with open classes has `[x] ⊆ open`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisFailure {
    pub x: usize,
    pub open: Bits,
    /// `[x]` in the least right congruence whose classes are all open.
    pub class: Bits,
    pub escaping: usize,
    /// Seeds `(y, z)` with `z ∈ N(y)` that every open-class congruence contains.
    pub seeds: Vec<(usize, usize)>,
    /// Forcing steps, in order, from the seeds to the final closure.
    pub chain: Vec<ChainStep>,
}

/// Classes, the seeds that merged something, and the recorded chain.
pub type OpenCongruence = (Vec<usize>, Vec<(usize, usize)>, Vec<ChainStep>);

/// The least right congruence all of whose classes are open: the closure of
/// `{(y, z) : z ∈ N(y)}`. Any right congruence with open classes contains it.
pub fn least_open_right_congruence(s: &FinSemigroup, t: &TopSpec) -> Result<OpenCongruence> {
    same_carrier(s, t)?;
    let seeds: Vec<(usize, usize)> = (0..s.len())
        .flat_map(|y| t.nbhd(y).iter().filter(move |&z| z != y).map(move |z| (y, z)))
        .collect();
    let mut run = ClosureRun::new(s, CongruenceKind::Right, true);
    let mut used = Vec::new();
    for &(a, b) in &seeds {
        if run.seed(a, b) {
            used.push((a, b));
        }
    }
    run.drain();
    let classes = run.classes();
    Ok((classes, used, run.into_chain()))
}

/// Right congruences with open classes give a basis at every point.
///
/// For each `x` the smallest target open is `N(x)`, and the best candidate
/// congruence is the least one with open classes, so no enumeration is needed.
pub fn congruence_basis_check(s: &FinSemigroup, t: &TopSpec) -> Result<Option<BasisFailure>> {
    congruence_basis_check_within(s, t, &Bits::full(s.len()))
}

/// As [`congruence_basis_check`], asking only about points in `core`.
pub fn congruence_basis_check_within(s: &FinSemigroup, t: &TopSpec, core: &Bits) -> Result<Option<BasisFailure>> {
    let (classes, seeds, chain) = least_open_right_congruence(s, t)?;
    for x in core.iter() {
        let class = Bits::from_indices(s.len(), (0..s.len()).filter(|&y| classes[y] == classes[x]));
        if let Some(escaping) = class.difference(t.nbhd(x)).first() {
            return Ok(Some(BasisFailure {
                x,
                open: t.nbhd(x).clone(),
                class,
                escaping,
                seeds,
                chain,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::builders::*;

    fn b(n: usize, v: &[usize]) -> Bits {
        Bits::from_indices(n, v.iter().copied())
    }

    #[test]
    fn continuity_examples() {
        for s in bundled() {
            assert!(continuity_check(&s, &TopSpec::discrete(s.len())).unwrap().is_none());
            assert!(continuity_check(&s, &TopSpec::indiscrete(s.len())).unwrap().is_none());
        }
        // Z2 with {0} open and not {1}: 1·1 = 0 but N(1)·N(1) = everything.
        let z2 = cyclic_group(2);
        let t = TopSpec::from_opens(2, &[b(2, &[]), b(2, &[0]), b(2, &[0, 1])]).unwrap();
        let f = continuity_check(&z2, &t).unwrap().unwrap();
        assert_eq!((f.a, f.b), (1, 1));
    }

    #[test]
    fn discrete_inverse_semigroups_are_ditopological() {
        for s in bundled() {
            if let Ok(inv) = InverseStructure::new(&s) {
                let d = TopSpec::discrete(s.len());
                assert!(ditopological_check(&inv, &d).unwrap().is_none(), "{}", s.name());
                assert!(weakly_ditopological_check(&inv, &d).unwrap().is_none());
            }
        }
    }

    #[test]
    fn sign_product_is_not_ditopological_with_a_limit_point() {
        // (0,1) with neighbourhood {(0,1), (x_i,1) : i ≥ 1}, everything else isolated.
        let w = 3;
        let s = sign_product(w);
        let n = s.len();
        let mut nb: Vec<Bits> = (0..n).map(|x| Bits::singleton(n, x)).collect();
        nb[0] = b(n, &[0, sign_index(2, false), sign_index(3, false)]);
        let t = TopSpec::from_nbhds(n, nb).unwrap();
        let inv = InverseStructure::new(&s).unwrap();
        assert!(ditopological_check(&inv, &t).unwrap().is_some());
    }

    #[test]
    fn congruence_basis_discrete_and_indiscrete() {
        for s in bundled() {
            assert!(congruence_basis_check(&s, &TopSpec::discrete(s.len())).unwrap().is_none());
            assert!(congruence_basis_check(&s, &TopSpec::indiscrete(s.len())).unwrap().is_none());
        }
    }
}
