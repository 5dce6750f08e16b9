//! Finite topological spaces.
//!
//! Every finite topology is determined by the smallest open neighbourhood
//! `N(x)` of each point: a set is open iff it contains `N(x)` for each of its
//! points. [`TopSpec`] stores exactly these sets. The full open family can still
//! be loaded (it is checked for closure under union and intersection) or
//! enumerated on demand.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};

pub mod checks;
pub mod presentation;
pub mod semilattice;

pub use checks::*;
pub use presentation::{LimitPoint, TruncatedPresentation};
pub use semilattice::*;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TopSpec {
    n: usize,
    nbhd: Vec<Bits>,
}

/// Whether `opens` is a topology on `0..n`.
pub fn is_topology(n: usize, opens: &[Bits]) -> bool {
    topology_defect(n, opens).is_none()
}

fn topology_defect(n: usize, opens: &[Bits]) -> Option<String> {
    if let Some(o) = opens.iter().find(|o| o.universe() != n) {
        return Some(format!("open set {o:?} is not over {n} points"));
    }
    let set: HashSet<&Bits> = opens.iter().collect();
    if !set.contains(&Bits::new(n)) {
        return Some("the empty set is missing".into());
    }
    if !set.contains(&Bits::full(n)) {
        return Some("the carrier is missing".into());
    }
    for a in opens {
        for b in opens {
            if !set.contains(&a.union(b)) {
                return Some(format!("union of {a:?} and {b:?} is missing"));
            }
            if !set.contains(&a.intersection(b)) {
                return Some(format!("intersection of {a:?} and {b:?} is missing"));
            }
        }
    }
    None
}

impl TopSpec {
    pub fn discrete(n: usize) -> Self {
        TopSpec {
            n,
            nbhd: (0..n).map(|x| Bits::singleton(n, x)).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        TopSpec {
            n,
            nbhd: vec![Bits::full(n); n],
        }
    }

    /// Loads an explicit open family, verifying the topology axioms.
    pub fn from_opens(n: usize, opens: &[Bits]) -> Result<Self> {
        if let Some(d) = topology_defect(n, opens) {
            return Err(Error::Topology(d));
        }
        let nbhd = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(Bits::full(n), |acc, o| acc.intersection(o))
            })
            .collect();
        Ok(TopSpec { n, nbhd })
    }

    /// Loads one minimal neighbourhood per point; they must be consistent.
    pub fn from_nbhds(n: usize, nbhd: Vec<Bits>) -> Result<Self> {
        if nbhd.len() != n {
            return Err(Error::Topology(format!("{} neighbourhoods for {n} points", nbhd.len())));
        }
        for (x, nx) in nbhd.iter().enumerate() {
            if nx.universe() != n || !nx.contains(x) {
                return Err(Error::Topology(format!("neighbourhood of {x} does not contain it")));
            }
            if let Some(y) = nx.iter().find(|&y| !nbhd[y].is_subset(nx)) {
                return Err(Error::Topology(format!(
                    "{y} lies in the neighbourhood of {x} but its own neighbourhood does not"
                )));
            }
        }
        Ok(TopSpec { n, nbhd })
    }

    /// The topology generated by a subbasis (the carrier is always added).
    pub fn generated(n: usize, subbasis: &[Bits]) -> Result<Self> {
        if let Some(s) = subbasis.iter().find(|s| s.universe() != n) {
            return Err(Error::Topology(format!("subbasic set {s:?} is not over {n} points")));
        }
        let nbhd = (0..n)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(Bits::full(n), |acc, s| acc.intersection(s))
            })
            .collect();
        Ok(TopSpec { n, nbhd })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Smallest open set containing `x`.
    pub fn nbhd(&self, x: usize) -> &Bits {
        &self.nbhd[x]
    }

    pub fn nbhds(&self) -> &[Bits] {
        &self.nbhd
    }

    pub fn is_open(&self, a: &Bits) -> bool {
        a.iter().all(|x| self.nbhd[x].is_subset(a))
    }

    pub fn is_closed(&self, a: &Bits) -> bool {
        self.is_open(&a.complement())
    }

    pub fn is_clopen(&self, a: &Bits) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    pub fn is_discrete(&self) -> bool {
        self.nbhd.iter().all(|n| n.count() == 1)
    }

    pub fn interior(&self, a: &Bits) -> Bits {
        Bits::from_indices(self.n, (0..self.n).filter(|&x| self.nbhd[x].is_subset(a)))
    }

    pub fn closure(&self, a: &Bits) -> Bits {
        Bits::from_indices(self.n, (0..self.n).filter(|&x| self.nbhd[x].intersects(a)))
    }

    /// Smallest open set containing `a`.
    pub fn open_hull(&self, a: &Bits) -> Bits {
        a.iter().fold(Bits::new(self.n), |acc, x| acc.union(&self.nbhd[x]))
    }

    /// All open sets in increasing [`Bits`] order; errors past `limit`.
    pub fn opens(&self, limit: usize) -> Result<Vec<Bits>> {
        let mut seen: BTreeSet<Bits> = BTreeSet::from([Bits::new(self.n)]);
        let mut stack = vec![Bits::new(self.n)];
        while let Some(o) = stack.pop() {
            for x in 0..self.n {
                if o.contains(x) {
                    continue;
                }
                let next = o.union(&self.nbhd[x]);
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return Err(Error::SizeBound { size: seen.len(), bound: limit });
                    }
                    stack.push(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Open sets containing `x`.
    pub fn opens_containing(&self, x: usize, limit: usize) -> Result<Vec<Bits>> {
        Ok(self.opens(limit)?.into_iter().filter(|o| o.contains(x)).collect())
    }

    /// Connected components; clopen sets are exactly unions of these.
    pub fn components(&self) -> Vec<Bits> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Bits> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut set = Bits::new(self.n);
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(x) = stack.pop() {
                set.insert(x);
                let linked = (0..self.n).filter(|&y| self.nbhd[x].contains(y) || self.nbhd[y].contains(x));
                for y in linked.collect::<Vec<_>>() {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            out.push(set);
        }
        out
    }

    /// Smallest clopen set containing `a`.
    pub fn clopen_hull(&self, a: &Bits) -> Bits {
        self.components()
            .into_iter()
            .filter(|c| c.intersects(a))
            .fold(Bits::new(self.n), |acc, c| acc.union(&c))
    }

    /// Points of `y` isolated in the subspace `y`.
    pub fn isolated_in(&self, y: &Bits) -> Bits {
        Bits::from_indices(
            self.n,
            y.iter().filter(|&x| self.nbhd[x].intersection(y).count() == 1),
        )
    }

    /// Non-isolated points of the subspace `y`.
    pub fn derivative_of(&self, y: &Bits) -> Bits {
        y.difference(&self.isolated_in(y))
    }

    /// First Cantor–Bendixson derivative of the whole space.
    pub fn cb_derivative(&self) -> Bits {
        self.derivative_of(&Bits::full(self.n))
    }

    /// Iterates the derivative until it is empty or stops shrinking.
    pub fn cantor_bendixson(&self) -> CantorBendixson {
        let mut levels = vec![Bits::full(self.n)];
        loop {
            let last = levels.last().unwrap();
            if last.is_empty() {
                break;
            }
            let next = self.derivative_of(last);
            if next == *last {
                break;
            }
            levels.push(next);
        }
        let scattered = levels.last().unwrap().is_empty();
        CantorBendixson {
            height: levels.len() - 1,
            scattered,
            levels,
        }
    }

    pub fn scattered_height(&self) -> usize {
        self.cantor_bendixson().height
    }
}

/// Derived sets `X = X^0 ⊇ X^1 ⊇ ..`; `height` counts the derivatives taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CantorBendixson {
    pub height: usize,
    pub scattered: bool,
    pub levels: Vec<Bits>,
}

/// On-disk topology. Exactly one of `opens`, `nbhds` or `subbasis` is read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopSpecFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nbhds: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<usize>>>,
}

fn to_bits(n: usize, sets: &[Vec<usize>]) -> Result<Vec<Bits>> {
    sets.iter()
        .map(|s| {
            if let Some(&x) = s.iter().find(|&&x| x >= n) {
                return Err(Error::Topology(format!("point {x} outside carrier of {n}")));
            }
            Ok(Bits::from_indices(n, s.iter().copied()))
        })
        .collect()
}

impl TopSpecFile {
    pub fn load(&self) -> Result<TopSpec> {
        match (&self.opens, &self.nbhds, &self.subbasis) {
            (Some(o), None, None) => TopSpec::from_opens(self.n, &to_bits(self.n, o)?),
            (None, Some(b), None) => TopSpec::from_nbhds(self.n, to_bits(self.n, b)?),
            (None, None, Some(s)) => TopSpec::generated(self.n, &to_bits(self.n, s)?),
            _ => Err(Error::Topology("give exactly one of opens, nbhds, subbasis".into())),
        }
    }
}

impl From<&TopSpec> for TopSpecFile {
    fn from(t: &TopSpec) -> Self {
        TopSpecFile {
            n: t.n,
            opens: None,
            nbhds: Some(t.nbhd.iter().map(Bits::to_vec).collect()),
            subbasis: None,
        }
    }
}

impl Serialize for TopSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TopSpecFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TopSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        TopSpecFile::deserialize(d)?.load().map_err(serde::de::Error::custom)
    }
}
