//! Explicit embeddings into transformation monoids, symmetric inverse
//! monoids, lazy maps on ℕ and finite products, each verified on construction.

pub mod clifford;
pub mod constructions;
pub mod groups;
pub mod verify;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{FinSemigroup, SemigroupFile};
use crate::transforms::{LazyMap, PartialPerm, Transformation};

pub use clifford::{clifford_decompose, clifford_product_embed, semil_iso, CliffordDecomposition};
pub use constructions::{adjoin_embed, cayley_right_regular, embcl_embed, embcl_lift, embcl_map, product_embed, wagner_preston, Adjoin};
pub use groups::{group_restriction, subgroup_laws, GroupRestriction, SubgroupLaws};
pub use verify::{verify_embedding, EmbeddingReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetSpace {
    /// ℕ^ℕ, or a finite transformation monoid standing in for it.
    Nn,
    /// I_ℕ, or a finite symmetric inverse monoid.
    In,
    /// A finite semigroup, possibly a product.
    Finite,
}

/// The image of one source element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Image {
    Transformation(Transformation),
    PartialPerm(PartialPerm),
    Lazy(LazyMap),
    /// Coordinates in a product of finite factors.
    Tuple(Vec<usize>),
}

impl Image {
    fn kind(&self) -> &'static str {
        match self {
            Image::Transformation(_) => "transformation",
            Image::PartialPerm(_) => "partial_perm",
            Image::Lazy(_) => "lazy",
            Image::Tuple(_) => "tuple",
        }
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Image, factors: &[FinSemigroup]) -> Result<Image> {
        Ok(match (self, other) {
            (Image::Transformation(f), Image::Transformation(g)) => Image::Transformation(f.compose(g)?),
            (Image::PartialPerm(f), Image::PartialPerm(g)) => Image::PartialPerm(f.compose(g)?),
            (Image::Lazy(f), Image::Lazy(g)) => Image::Lazy(LazyMap::compose(f.clone(), g.clone())),
            (Image::Tuple(a), Image::Tuple(b)) => {
                if a.len() != factors.len() || b.len() != factors.len() {
                    return Err(Error::Kind(format!("tuple of length {} for {} factors", a.len(), factors.len())));
                }
                Image::Tuple(factors.iter().zip(a.iter().zip(b)).map(|(s, (&x, &y))| s.mul(x, y)).collect())
            }
            (a, b) => return Err(Error::Kind(format!("cannot compose {} with {}", a.kind(), b.kind()))),
        })
    }

    /// Values on `[0, window)`; equal keys mean equal images at this scale.
    pub fn key(&self, window: usize) -> Result<Vec<Option<u64>>> {
        Ok(match self {
            Image::Transformation(t) => t.as_slice().iter().map(|&y| Some(y as u64)).collect(),
            Image::PartialPerm(p) => p.as_slice().iter().map(|y| y.map(|y| y as u64)).collect(),
            Image::Lazy(m) => m.sample(window)?,
            Image::Tuple(v) => v.iter().map(|&y| Some(y as u64)).collect(),
        })
    }
}

/// A verified injective homomorphism from a finite semigroup.
///
/// Composition is left to right, so `image(ab) = image(a)` then `image(b)`.
/// Lazy images are compared on `[0, window)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationMap {
    source: FinSemigroup,
    images: Vec<Image>,
    target: TargetSpace,
    window: usize,
    factors: Vec<FinSemigroup>,
}

impl RepresentationMap {
    pub fn new(
        source: FinSemigroup,
        images: Vec<Image>,
        target: TargetSpace,
        window: usize,
        factors: Vec<FinSemigroup>,
    ) -> Result<Self> {
        let r = RepresentationMap {
            source,
            images,
            target,
            window,
            factors,
        };
        r.check()?;
        Ok(r)
    }

    fn check(&self) -> Result<()> {
        let n = self.source.len();
        if self.images.len() != n {
            return Err(Error::Invalid(format!("{} images for {n} elements", self.images.len())));
        }
        let keys: Vec<_> = self.images.iter().map(|i| i.key(self.window)).collect::<Result<_>>()?;
        let mut seen = HashMap::new();
        for (a, k) in keys.iter().enumerate() {
            if let Some(b) = seen.insert(k, a) {
                return Err(Error::TheoremViolation(format!(
                    "{} and {} have the same image",
                    self.source.label(b),
                    self.source.label(a)
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composed = self.images[a].then(&self.images[b], &self.factors)?;
                if composed.key(self.window)? != keys[self.source.mul(a, b)] {
                    return Err(Error::TheoremViolation(format!(
                        "image of {}·{} differs from the composite of images",
                        self.source.label(a),
                        self.source.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FinSemigroup {
        &self.source
    }

    pub fn images(&self) -> &[Image] {
        &self.images
    }

    pub fn image(&self, a: usize) -> &Image {
        &self.images[a]
    }

    pub fn target(&self) -> TargetSpace {
        self.target
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn factors(&self) -> &[FinSemigroup] {
        &self.factors
    }

    pub fn to_file(&self) -> RepresentationFile {
        RepresentationFile {
            schema: 1,
            source: self.source.to_file(),
            target: self.target,
            window: self.window,
            factors: self.factors.iter().map(FinSemigroup::to_file).collect(),
            images: self.images.clone(),
        }
    }
}

/// On-disk form of a [`RepresentationMap`]; loading re-verifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub schema: u32,
    pub source: SemigroupFile,
    pub target: TargetSpace,
    pub window: usize,
    #[serde(default)]
    pub factors: Vec<SemigroupFile>,
    pub images: Vec<Image>,
}

impl RepresentationFile {
    pub fn load(&self) -> Result<RepresentationMap> {
        let factors = self.factors.iter().map(SemigroupFile::load).collect::<Result<_>>()?;
        RepresentationMap::new(self.source.load()?, self.images.clone(), self.target, self.window, factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::builders::*;

    #[test]
    fn rejects_non_homomorphisms_and_collisions() {
        let z2 = cyclic_group(2);
        let id = Image::Transformation(Transformation::identity(2));
        let swap = Image::Transformation(Transformation::new(vec![1, 0]).unwrap());
        assert!(RepresentationMap::new(z2.clone(), vec![id.clone(), swap.clone()], TargetSpace::Nn, 2, vec![]).is_ok());
        let e = RepresentationMap::new(z2.clone(), vec![swap.clone(), id.clone()], TargetSpace::Nn, 2, vec![]);
        assert!(matches!(e, Err(Error::TheoremViolation(_))));
        let e = RepresentationMap::new(z2, vec![id.clone(), id], TargetSpace::Nn, 2, vec![]);
        assert!(matches!(e, Err(Error::TheoremViolation(_))));
    }

    #[test]
    fn files_round_trip() {
        let r = cayley_right_regular(&brandt(2)).unwrap();
        let text = serde_json::to_string(&r.to_file()).unwrap();
        let back: RepresentationFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.load().unwrap(), r);
    }
}
