//! Order-theoretic checks on finite topological semilattices.

use super::TopSpec;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::FinSemigroup;

fn require_semilattice(s: &FinSemigroup, t: &TopSpec) -> Result<()> {
    if !s.is_semilattice() {
        return Err(Error::Domain(format!("{} is not a semilattice", s.name())));
    }
    if s.len() != t.len() {
        return Err(Error::Topology(format!(
            "topology has {} points, semigroup has {}",
            t.len(),
            s.len()
        )));
    }
    Ok(())
}

/// `↑x = {y : x ≤ y}` where `x ≤ y` iff `xy = x`.
pub fn up_set(s: &FinSemigroup, x: usize) -> Result<Bits> {
    if !s.is_semilattice() {
        return Err(Error::Domain(format!("{} is not a semilattice", s.name())));
    }
    Ok(Bits::from_indices(s.len(), (0..s.len()).filter(|&y| s.mul(x, y) == x)))
}

/// `⇑x`, the interior of `↑x`.
pub fn uparrow(s: &FinSemigroup, t: &TopSpec, x: usize) -> Result<Bits> {
    require_semilattice(s, t)?;
    Ok(t.interior(&up_set(s, x)?))
}

pub fn is_ideal(s: &FinSemigroup, a: &Bits) -> bool {
    a.iter().all(|x| (0..s.len()).all(|y| a.contains(s.mul(y, x)) && a.contains(s.mul(x, y))))
}

/// Most components a clopen-ideal enumeration will expand.
pub const CLOPEN_COMPONENT_BOUND: usize = 24;

/// All clopen ideals, including `∅`, in increasing [`Bits`] order.
pub fn enumerate_clopen_ideals(s: &FinSemigroup, t: &TopSpec) -> Result<Vec<Bits>> {
    require_semilattice(s, t)?;
    let comps = t.components();
    if comps.len() > CLOPEN_COMPONENT_BOUND {
        return Err(Error::SizeBound {
            size: comps.len(),
            bound: CLOPEN_COMPONENT_BOUND,
        });
    }
    let mut out: Vec<Bits> = (0u64..1 << comps.len())
        .map(|mask| {
            comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(Bits::new(s.len()), |acc, (_, c)| acc.union(c))
        })
        .filter(|a| is_ideal(s, a))
        .collect();
    out.sort();
    Ok(out)
}

/// Smallest clopen ideal containing `a`.
pub fn clopen_ideal_hull(s: &FinSemigroup, t: &TopSpec, a: &Bits) -> Bits {
    let mut cur = a.clone();
    loop {
        let mut next = cur.clone();
        for x in cur.iter() {
            for y in 0..s.len() {
                next.insert(s.mul(y, x));
            }
        }
        let next = t.clopen_hull(&next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Witness for the U-property at a point: `v ⊆ ↑y` with `y ∈ v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UWitness {
    pub y: usize,
    pub v: Bits,
}

/// Witness for the U₂-property at a point: `x ∈ X∖I ⊆ ↑y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct U2Witness {
    pub y: usize,
    pub ideal: Bits,
}

/// Smallest open sets suffice on both sides, so the check at `x` is: some
/// `y ∈ N(x)` has `N(x) ⊆ ↑y`. The least such `y` is reported.
pub fn u_check(s: &FinSemigroup, t: &TopSpec, x: usize) -> Result<Option<UWitness>> {
    require_semilattice(s, t)?;
    let v = t.nbhd(x);
    for y in v.iter() {
        if v.is_subset(&up_set(s, y)?) {
            return Ok(Some(UWitness { y, v: v.clone() }));
        }
    }
    Ok(None)
}

/// For each `y ∈ N(x)`, the least clopen ideal containing `X∖↑y` decides.
pub fn u2_check(s: &FinSemigroup, t: &TopSpec, x: usize) -> Result<Option<U2Witness>> {
    require_semilattice(s, t)?;
    for y in t.nbhd(x).iter() {
        let outside = up_set(s, y)?.complement();
        let ideal = clopen_ideal_hull(s, t, &outside);
        if !ideal.contains(x) {
            return Ok(Some(U2Witness { y, ideal }));
        }
    }
    Ok(None)
}

/// Per-point results of a whole-space check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseVerdict<W> {
    pub points: Vec<Option<W>>,
}

impl<W> PointwiseVerdict<W> {
    pub fn holds(&self) -> bool {
        self.points.iter().all(Option::is_some)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.points.iter().position(Option::is_none)
    }
}

pub fn u_check_space(s: &FinSemigroup, t: &TopSpec) -> Result<PointwiseVerdict<UWitness>> {
    Ok(PointwiseVerdict {
        points: (0..s.len()).map(|x| u_check(s, t, x)).collect::<Result<_>>()?,
    })
}

pub fn u2_check_space(s: &FinSemigroup, t: &TopSpec) -> Result<PointwiseVerdict<U2Witness>> {
    Ok(PointwiseVerdict {
        points: (0..s.len()).map(|x| u2_check(s, t, x)).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::builders::*;

    fn b(n: usize, v: &[usize]) -> Bits {
        Bits::from_indices(n, v.iter().copied())
    }

    #[test]
    fn up_sets() {
        let c = chain(3);
        assert_eq!(up_set(&c, 2).unwrap(), b(3, &[2]));
        assert!(up_set(&cyclic_group(2), 0).is_err());
        let d = TopSpec::discrete(3);
        for x in 0..3 {
            assert_eq!(uparrow(&c, &d, x).unwrap(), up_set(&c, x).unwrap());
        }
        let t = TopSpec::from_opens(3, &[b(3, &[]), b(3, &[2]), b(3, &[1, 2]), b(3, &[0, 1, 2])]).unwrap();
        assert_eq!(uparrow(&c, &t, 0).unwrap(), Bits::full(3));
        assert_eq!(uparrow(&c, &t, 2).unwrap(), b(3, &[2]));
    }

    #[test]
    fn clopen_ideal_examples() {
        let c = chain(3);
        assert_eq!(enumerate_clopen_ideals(&c, &TopSpec::discrete(3)).unwrap().len(), 4);
        assert_eq!(
            enumerate_clopen_ideals(&c, &TopSpec::indiscrete(3)).unwrap(),
            vec![Bits::new(3), Bits::full(3)]
        );
        for w in 1..=5 {
            let t = antichain_with_zero(w);
            let got = enumerate_clopen_ideals(&t, &TopSpec::discrete(w + 1)).unwrap();
            assert_eq!(got.len(), (1 << w) + 1);
        }
    }

    #[test]
    fn u_examples() {
        let c = chain(2);
        let t = TopSpec::from_opens(2, &[b(2, &[]), b(2, &[1]), b(2, &[0, 1])]).unwrap();
        assert_eq!(u_check(&c, &t, 0).unwrap().unwrap().y, 0);
        for s in [chain(4), antichain_with_zero(3)] {
            let d = TopSpec::discrete(s.len());
            for x in 0..s.len() {
                let w = u2_check(&s, &d, x).unwrap().unwrap();
                assert_eq!(w.y, x);
                assert_eq!(w.ideal, up_set(&s, x).unwrap().complement());
            }
        }
    }
}
