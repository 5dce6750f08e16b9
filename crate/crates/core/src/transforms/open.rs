//! Subbasic and basic open sets of ℕ^ℕ and I_ℕ.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LazyMap, PartialPerm, Transformation};
use crate::error::{Error, Result};

/// An atomic constraint on a partial bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "atom", rename_all = "snake_case")]
pub enum Atom {
    /// `(x, y) ∈ h`.
    Maps { x: u64, y: u64 },
    /// `x ∉ dom h`.
    NotInDom { x: u64 },
    /// `y ∉ im h`.
    NotInIm { y: u64 },
}

impl Atom {
    fn max_point(&self) -> u64 {
        match *self {
            Atom::Maps { x, y } => x.max(y),
            Atom::NotInDom { x } => x,
            Atom::NotInIm { y } => y,
        }
    }
}

/// A basic open set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "snake_case")]
pub enum BasicOpen {
    /// `{g ∈ ℕ^ℕ : f ⊆ g}` for the finite function `f`.
    Nn { graph: Vec<(u64, u64)> },
    /// A finite intersection of subbasic sets of I_ℕ.
    In { atoms: Vec<Atom> },
}

/// Anything whose values can be read off on finitely many points.
pub trait Evaluable {
    /// Value at `x`; `Err` if `x` lies outside what is known about the map.
    fn value_at(&self, x: u64) -> Result<Option<u64>>;
    /// Whether `y` is a value; only needed for `NotInIm` atoms.
    fn hits(&self, y: u64) -> Result<bool>;
}

impl Evaluable for Transformation {
    fn value_at(&self, x: u64) -> Result<Option<u64>> {
        if x >= self.window() as u64 {
            return Err(Error::Evaluation(format!("{x} outside window {}", self.window())));
        }
        Ok(Some(self.apply(x as usize) as u64))
    }
    fn hits(&self, y: u64) -> Result<bool> {
        Ok(self.as_slice().iter().any(|&v| v as u64 == y))
    }
}

impl Evaluable for PartialPerm {
    fn value_at(&self, x: u64) -> Result<Option<u64>> {
        if x >= self.window() as u64 {
            return Err(Error::Evaluation(format!("{x} outside window {}", self.window())));
        }
        Ok(self.apply(x as usize).map(|y| y as u64))
    }
    fn hits(&self, y: u64) -> Result<bool> {
        Ok(self.as_slice().iter().flatten().any(|&v| v as u64 == y))
    }
}

/// A lazy map seen through a finite window `[0, n)`.
///
/// Image questions are answered on the window only, so a `NotInIm` atom is
/// exact only when every preimage of the point lies below `n`.
pub struct Windowed<'a> {
    pub map: &'a LazyMap,
    pub window: u64,
}

impl Evaluable for Windowed<'_> {
    fn value_at(&self, x: u64) -> Result<Option<u64>> {
        if x >= self.window {
            return Err(Error::Evaluation(format!(
                "constraint mentions {x}, but the map is only evaluated on window {}",
                self.window
            )));
        }
        self.map.eval(x)
    }
    fn hits(&self, y: u64) -> Result<bool> {
        for x in 0..self.window {
            if self.map.eval(x)? == Some(y) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl BasicOpen {
    /// `U_{x,y}`.
    pub fn maps(x: u64, y: u64) -> Self {
        BasicOpen::In { atoms: vec![Atom::Maps { x, y }] }
    }

    /// `W_x`.
    pub fn not_in_dom(x: u64) -> Self {
        BasicOpen::In { atoms: vec![Atom::NotInDom { x }] }
    }

    /// `W_y⁻¹`.
    pub fn not_in_im(y: u64) -> Self {
        BasicOpen::In { atoms: vec![Atom::NotInIm { y }] }
    }

    /// Largest point the constraint mentions.
    pub fn max_point(&self) -> Option<u64> {
        match self {
            BasicOpen::Nn { graph } => graph.iter().map(|&(x, y)| x.max(y)).max(),
            BasicOpen::In { atoms } => atoms.iter().map(Atom::max_point).max(),
        }
    }

    pub fn contains(&self, h: &impl Evaluable) -> Result<bool> {
        match self {
            BasicOpen::Nn { graph } => {
                for &(x, y) in graph {
                    if h.value_at(x)? != Some(y) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            BasicOpen::In { atoms } => {
                for a in atoms {
                    let ok = match *a {
                        Atom::Maps { x, y } => h.value_at(x)? == Some(y),
                        Atom::NotInDom { x } => h.value_at(x)?.is_none(),
                        Atom::NotInIm { y } => !h.hits(y)?,
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

pub fn basic_open_member(h: &impl Evaluable, b: &BasicOpen) -> Result<bool> {
    b.contains(h)
}

impl fmt::Display for BasicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicOpen::Nn { graph } => {
                write!(f, "[")?;
                for (i, (x, y)) in graph.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}->{y}")?;
                }
                write!(f, "]")
            }
            BasicOpen::In { atoms } => {
                for (i, a) in atoms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    match a {
                        Atom::Maps { x, y } => write!(f, "U({x},{y})")?,
                        Atom::NotInDom { x } => write!(f, "W({x})")?,
                        Atom::NotInIm { y } => write!(f, "W^-1({y})")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let h = PartialPerm::from_pairs(3, &[(0, 1)]).unwrap();
        assert!(BasicOpen::maps(0, 1).contains(&h).unwrap());
        let e = PartialPerm::empty(3);
        for x in 0..3 {
            assert!(BasicOpen::not_in_dom(x).contains(&e).unwrap());
        }
        let h = PartialPerm::from_pairs(3, &[(1, 0)]).unwrap();
        assert!(!BasicOpen::not_in_im(0).contains(&h).unwrap());
    }

    #[test]
    fn window_too_small_is_an_error() {
        let m = LazyMap::Identity;
        let w = Windowed { map: &m, window: 3 };
        assert!(BasicOpen::maps(1, 1).contains(&w).unwrap());
        assert!(matches!(BasicOpen::maps(5, 5).contains(&w), Err(Error::Evaluation(_))));
        let nn = BasicOpen::Nn { graph: vec![(0, 0), (2, 2)] };
        assert!(nn.contains(&w).unwrap());
        assert_eq!(nn.max_point(), Some(2));
    }
}
