//! Elements of `X^X` and `I_X` on a finite window `X = {0, .., n-1}`.
//!
//! Composition is left to right throughout: `(x)(fg) = ((x)f)g`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};

pub mod lazy;
pub mod open;

pub use lazy::{LazyMap, ParityRule};
pub use open::{Atom, BasicOpen};

/// A total self-map of a finite window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Transformation {
    map: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Transformation {
    type Error = Error;
    fn try_from(map: Vec<usize>) -> Result<Self> {
        Transformation::new(map)
    }
}

impl From<Transformation> for Vec<usize> {
    fn from(t: Transformation) -> Self {
        t.map
    }
}

impl Transformation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if let Some((x, &y)) = map.iter().enumerate().find(|(_, &y)| y >= n) {
            return Err(Error::Invalid(format!("({x}) maps to {y}, outside window {n}")));
        }
        Ok(Transformation { map })
    }

    pub fn identity(n: usize) -> Self {
        Transformation { map: (0..n).collect() }
    }

    pub fn constant(n: usize, c: usize) -> Result<Self> {
        Transformation::new(vec![c; n])
    }

    pub fn window(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `self` then `g`.
    pub fn compose(&self, g: &Transformation) -> Result<Transformation> {
        if self.window() != g.window() {
            return Err(Error::WindowMismatch {
                left: self.window(),
                right: g.window(),
            });
        }
        Ok(Transformation {
            map: self.map.iter().map(|&y| g.map[y]).collect(),
        })
    }

    pub fn image(&self) -> Bits {
        Bits::from_indices(self.window(), self.map.iter().copied())
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.iter().all(|&y| self.map[y] == y)
    }

    pub fn is_permutation(&self) -> bool {
        self.image().count() == self.window()
    }

    /// All `n^n` maps in lexicographic order of their value arrays.
    pub fn all(n: usize) -> Vec<Transformation> {
        let total = n.checked_pow(n as u32).expect("window too large to enumerate");
        (0..total)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % n;
                    code /= n;
                }
                Transformation { map }
            })
            .collect()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

/// A partial bijection of a finite window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Option<usize>>", into = "Vec<Option<usize>>")]
pub struct PartialPerm {
    map: Vec<Option<usize>>,
}

impl TryFrom<Vec<Option<usize>>> for PartialPerm {
    type Error = Error;
    fn try_from(map: Vec<Option<usize>>) -> Result<Self> {
        PartialPerm::new(map)
    }
}

impl From<PartialPerm> for Vec<Option<usize>> {
    fn from(p: PartialPerm) -> Self {
        p.map
    }
}

impl PartialPerm {
    pub fn new(map: Vec<Option<usize>>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for (x, y) in map.iter().enumerate() {
            if let &Some(y) = y {
                if y >= n {
                    return Err(Error::Invalid(format!("({x}) maps to {y}, outside window {n}")));
                }
                if std::mem::replace(&mut seen[y], true) {
                    return Err(Error::Invalid(format!("{y} is hit twice; not injective")));
                }
            }
        }
        Ok(PartialPerm { map })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; n];
        for &(x, y) in pairs {
            if x >= n {
                return Err(Error::Invalid(format!("{x} outside window {n}")));
            }
            if map[x].replace(y).is_some() {
                return Err(Error::Invalid(format!("{x} is mapped twice")));
            }
        }
        PartialPerm::new(map)
    }

    pub fn empty(n: usize) -> Self {
        PartialPerm { map: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialPerm { map: (0..n).map(Some).collect() }
    }

    /// The identity restricted to `set`.
    pub fn identity_on(n: usize, set: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = set.iter().map(|&x| (x, x)).collect();
        PartialPerm::from_pairs(n, &pairs)
    }

    pub fn window(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().flatten()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }

    /// Graph of the map in ascending order of argument.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| (x, y)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn dom(&self) -> Bits {
        Bits::from_indices(self.window(), self.pairs().into_iter().map(|(x, _)| x))
    }

    pub fn im(&self) -> Bits {
        Bits::from_indices(self.window(), self.map.iter().flatten().copied())
    }

    /// `self` then `g`; defined at `x` when `(x)self ∈ dom g`.
    pub fn compose(&self, g: &PartialPerm) -> Result<PartialPerm> {
        if self.window() != g.window() {
            return Err(Error::WindowMismatch {
                left: self.window(),
                right: g.window(),
            });
        }
        Ok(PartialPerm {
            map: self.map.iter().map(|y| y.and_then(|y| g.map[y])).collect(),
        })
    }

    /// Relational converse.
    pub fn invert(&self) -> PartialPerm {
        let mut map = vec![None; self.window()];
        for (x, y) in self.pairs() {
            map[y] = Some(x);
        }
        PartialPerm { map }
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs().iter().all(|&(x, y)| x == y)
    }

    /// Every partial bijection of `n` points, ordered by rank and then by graph.
    pub fn all(n: usize) -> Vec<PartialPerm> {
        fn go(x: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<Option<usize>>, out: &mut Vec<PartialPerm>) {
            if x == n {
                out.push(PartialPerm { map: cur.clone() });
                return;
            }
            cur.push(None);
            go(x + 1, n, used, cur, out);
            cur.pop();
            for y in 0..n {
                if !used[y] {
                    used[y] = true;
                    cur.push(Some(y));
                    go(x + 1, n, used, cur, out);
                    cur.pop();
                    used[y] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
        out.sort_by_cached_key(|p| (p.rank(), p.pairs()));
        out
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}
