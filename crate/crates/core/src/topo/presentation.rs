//! Finite truncations of countable topological semigroups.
//!
//! A truncation keeps the first `window` generators of a countable example. The
//! admissible neighbourhoods of a limit point only constrain structure below the
//! guard `c`, so every one of them still reaches into the margin beyond it, the
//! way a basic open set of the countable space contains a whole tail. Points in
//! `core` are those whose own neighbourhood structure is faithfully modelled;
//! continuity and basis questions are asked only there.

use serde::{Deserialize, Serialize};

use super::TopSpec;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::{FinSemigroup, SemigroupFile};

/// A limit point and its admissible neighbourhoods, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitPoint {
    pub point: usize,
    pub family: Vec<Bits>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPresentation {
    pub id: String,
    pub base: FinSemigroup,
    pub window: usize,
    pub guard: usize,
    pub limit_points: Vec<LimitPoint>,
    pub topology: TopSpec,
    pub core: Bits,
    /// Discrete controls drop the tail requirement.
    pub discrete_control: bool,
}

impl TruncatedPresentation {
    /// Checks the family invariants and that every admissible set is an open
    /// neighbourhood of its limit point.
    pub fn validate(&self) -> Result<()> {
        let n = self.base.len();
        if self.topology.len() != n || self.core.universe() != n {
            return Err(Error::Invalid("topology or core has the wrong carrier".into()));
        }
        if self.guard >= self.window {
            return Err(Error::Invalid(format!(
                "guard {} must be below window {}",
                self.guard, self.window
            )));
        }
        let margin = self.core.complement();
        for lp in &self.limit_points {
            let p = lp.point;
            if p >= n {
                return Err(Error::Invalid(format!("limit point {p} out of range")));
            }
            if lp.family.is_empty() {
                return Err(Error::Invalid(format!("no neighbourhoods for {p}")));
            }
            for (i, v) in lp.family.iter().enumerate() {
                if v.universe() != n || !v.contains(p) {
                    return Err(Error::Invalid(format!("neighbourhood {i} of {p} misses {p}")));
                }
                if !self.topology.is_open(v) {
                    return Err(Error::Invalid(format!("neighbourhood {i} of {p} is not open")));
                }
                if i > 0 && !v.is_subset(&lp.family[i - 1]) {
                    return Err(Error::Invalid(format!("family of {p} is not descending at {i}")));
                }
                if !self.discrete_control {
                    let tail_ok = if margin.is_empty() {
                        v.count() > 1
                    } else {
                        v.intersects(&margin)
                    };
                    if !tail_ok {
                        return Err(Error::Invalid(format!(
                            "neighbourhood {i} of {p} has no tail beyond the guard"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn limit_point(&self, p: usize) -> Result<&LimitPoint> {
        self.limit_points
            .iter()
            .find(|lp| lp.point == p)
            .ok_or_else(|| Error::Invalid(format!("{p} is not a designated limit point")))
    }

    /// The topology in which each limit point's smallest admissible set is its
    /// minimal neighbourhood and every other point is isolated.
    pub fn derived_topology(n: usize, limit_points: &[LimitPoint]) -> Result<TopSpec> {
        let mut nb: Vec<Bits> = (0..n).map(|x| Bits::singleton(n, x)).collect();
        for lp in limit_points {
            let last = lp
                .family
                .last()
                .ok_or_else(|| Error::Invalid(format!("no neighbourhoods for {}", lp.point)))?;
            nb[lp.point] = last.clone();
        }
        TopSpec::from_nbhds(n, nb)
    }
}

/// On-disk form: a semigroup file plus the presentation data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub schema: u32,
    pub id: String,
    pub semigroup: SemigroupFile,
    pub window: usize,
    pub guard: usize,
    pub limit_points: Vec<LimitPoint>,
    pub topology: TopSpec,
    pub core: Vec<usize>,
    #[serde(default)]
    pub discrete_control: bool,
}

impl From<&TruncatedPresentation> for PresentationFile {
    fn from(p: &TruncatedPresentation) -> Self {
        PresentationFile {
            schema: 1,
            id: p.id.clone(),
            semigroup: p.base.to_file(),
            window: p.window,
            guard: p.guard,
            limit_points: p.limit_points.clone(),
            topology: p.topology.clone(),
            core: p.core.to_vec(),
            discrete_control: p.discrete_control,
        }
    }
}

impl PresentationFile {
    pub fn load(&self) -> Result<TruncatedPresentation> {
        let base = self.semigroup.load()?;
        let n = base.len();
        let fit = |b: &Bits| b.with_universe(n).ok_or_else(|| Error::Invalid("set outside carrier".into()));
        let limit_points = self
            .limit_points
            .iter()
            .map(|lp| {
                Ok(LimitPoint {
                    point: lp.point,
                    family: lp.family.iter().map(fit).collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?;
        if let Some(&x) = self.core.iter().find(|&&x| x >= n) {
            return Err(Error::Invalid(format!("core point {x} outside carrier")));
        }
        let p = TruncatedPresentation {
            id: self.id.clone(),
            base,
            window: self.window,
            guard: self.guard,
            limit_points,
            topology: self.topology.clone(),
            core: Bits::from_indices(n, self.core.iter().copied()),
            discrete_control: self.discrete_control,
        };
        p.validate()?;
        Ok(p)
    }
}
