//! Lazily evaluable maps on ℕ, built from a small closed combinator language.
//!
//! A map may be partial; `eval` returns `Ok(None)` where it is undefined.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{PartialPerm, Transformation};
use crate::error::{Error, Result};

/// One residue class of an [`LazyMap::AffineParity`] map.
///
/// For `x = modulus·q + residue` the value is `scale·inner(q) + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRule {
    pub residue: u64,
    pub inner: LazyMap,
    pub scale: u64,
    pub offset: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum LazyMap {
    Identity,
    /// Nowhere defined.
    Empty,
    Const {
        value: u64,
    },
    /// Explicit values on finitely many points; `None` marks a point left undefined.
    Table {
        entries: Vec<(u64, Option<u64>)>,
        fallback: Box<LazyMap>,
    },
    /// Residues without a rule are undefined.
    AffineParity {
        modulus: u64,
        rules: Vec<ParityRule>,
    },
    /// Acts as `blocks[i]` on `A_i = {pair(i, j)}` where `pair(i, j) = 2^i(2j+1) - 1`,
    /// and as the identity on blocks past the end.
    PairBlock {
        blocks: Vec<LazyMap>,
    },
    /// `first` then `second`.
    Compose {
        first: Box<LazyMap>,
        second: Box<LazyMap>,
    },
}

/// `pair(i, j) = 2^i(2j+1) - 1`, a bijection ℕ×ℕ → ℕ.
pub fn pair(i: u64, j: u64) -> Result<u64> {
    let odd = j
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| overflow("pair"))?;
    let p = 1u64
        .checked_shl(i as u32)
        .filter(|_| i < 64)
        .and_then(|s| s.checked_mul(odd))
        .ok_or_else(|| overflow("pair"))?;
    Ok(p - 1)
}

/// Inverse of [`pair`].
pub fn unpair(x: u64) -> Result<(u64, u64)> {
    let v = x.checked_add(1).ok_or_else(|| overflow("unpair"))?;
    let i = v.trailing_zeros() as u64;
    Ok((i, (v >> i) / 2))
}

fn overflow(what: &str) -> Error {
    Error::Evaluation(format!("arithmetic overflow in {what}"))
}

impl LazyMap {
    pub fn constant(value: u64) -> Self {
        LazyMap::Const { value }
    }

    pub fn compose(first: LazyMap, second: LazyMap) -> Self {
        match (first, second) {
            (LazyMap::Identity, g) => g,
            (f, LazyMap::Identity) => f,
            (f, g) => LazyMap::Compose {
                first: Box::new(f),
                second: Box::new(g),
            },
        }
    }

    /// A finite transformation, extended by the identity beyond its window.
    pub fn from_transformation(t: &Transformation) -> Self {
        LazyMap::Table {
            entries: (0..t.window())
                .filter(|&x| t.apply(x) != x)
                .map(|x| (x as u64, Some(t.apply(x) as u64)))
                .collect(),
            fallback: Box::new(LazyMap::Identity),
        }
    }

    /// A finite partial bijection, undefined beyond its window.
    pub fn from_partial_perm(p: &PartialPerm) -> Self {
        LazyMap::Table {
            entries: (0..p.window())
                .map(|x| (x as u64, p.apply(x).map(|y| y as u64)))
                .collect(),
            fallback: Box::new(LazyMap::Empty),
        }
    }

    pub fn eval(&self, x: u64) -> Result<Option<u64>> {
        match self {
            LazyMap::Identity => Ok(Some(x)),
            LazyMap::Empty => Ok(None),
            LazyMap::Const { value } => Ok(Some(*value)),
            LazyMap::Table { entries, fallback } => match entries.iter().find(|(a, _)| *a == x) {
                Some(&(_, y)) => Ok(y),
                None => fallback.eval(x),
            },
            LazyMap::AffineParity { modulus, rules } => {
                if *modulus == 0 {
                    return Err(Error::Evaluation("affine map with modulus 0".into()));
                }
                let (q, r) = (x / modulus, x % modulus);
                let Some(rule) = rules.iter().find(|rule| rule.residue == r) else {
                    return Ok(None);
                };
                match rule.inner.eval(q)? {
                    None => Ok(None),
                    Some(y) => y
                        .checked_mul(rule.scale)
                        .and_then(|v| v.checked_add(rule.offset))
                        .map(Some)
                        .ok_or_else(|| overflow("affine rule")),
                }
            }
            LazyMap::PairBlock { blocks } => {
                let (i, j) = unpair(x)?;
                match blocks.get(i as usize) {
                    None => Ok(Some(x)),
                    Some(b) => match b.eval(j)? {
                        None => Ok(None),
                        Some(y) => pair(i, y).map(Some),
                    },
                }
            }
            LazyMap::Compose { first, second } => match first.eval(x)? {
                None => Ok(None),
                Some(y) => second.eval(y),
            },
        }
    }

    /// Restriction to `[0, n)` as a transformation.
    pub fn window_restrict(&self, n: usize) -> Result<Transformation> {
        let mut map = Vec::with_capacity(n);
        for x in 0..n as u64 {
            match self.eval(x)? {
                None => {
                    return Err(Error::Evaluation(format!(
                        "undefined at {x}; not a total map on window {n}"
                    )))
                }
                Some(y) if y >= n as u64 => {
                    return Err(Error::WindowEscape {
                        window: n,
                        point: x,
                        image: y,
                    })
                }
                Some(y) => map.push(y as usize),
            }
        }
        Transformation::new(map)
    }

    /// Restriction to `[0, n)` as a partial bijection.
    pub fn window_restrict_partial(&self, n: usize) -> Result<PartialPerm> {
        let mut map = Vec::with_capacity(n);
        for x in 0..n as u64 {
            match self.eval(x)? {
                Some(y) if y >= n as u64 => {
                    return Err(Error::WindowEscape {
                        window: n,
                        point: x,
                        image: y,
                    })
                }
                y => map.push(y.map(|y| y as usize)),
            }
        }
        PartialPerm::new(map)
    }

    /// Values on `0..n` without any closure requirement.
    pub fn sample(&self, n: usize) -> Result<Vec<Option<u64>>> {
        (0..n as u64).map(|x| self.eval(x)).collect()
    }
}

impl fmt::Display for LazyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LazyMap::Identity => write!(f, "id"),
            LazyMap::Empty => write!(f, "empty"),
            LazyMap::Const { value } => write!(f, "const({value})"),
            LazyMap::Table { entries, fallback } => {
                write!(f, "{{")?;
                for (i, (x, y)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    match y {
                        Some(y) => write!(f, "{x}->{y}")?,
                        None => write!(f, "{x}->_")?,
                    }
                }
                write!(f, "}} else {fallback}")
            }
            LazyMap::AffineParity { modulus, rules } => {
                write!(f, "mod {modulus}[")?;
                for (i, r) in rules.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{}: {}*({})+{}", r.residue, r.scale, r.inner, r.offset)?;
                }
                write!(f, "]")
            }
            LazyMap::PairBlock { blocks } => {
                write!(f, "blocks[")?;
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, "]")
            }
            LazyMap::Compose { first, second } => write!(f, "({first}) ; ({second})"),
        }
    }
}
