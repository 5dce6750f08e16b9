//! Regular representations and the lazy-map embeddings into ℕ^ℕ.

use super::{Image, RepresentationMap, TargetSpace};
use crate::error::{Error, Result};
use crate::semigroup::{FinSemigroup, InverseStructure};
use crate::transforms::lazy::{pair, ParityRule};
use crate::transforms::{LazyMap, PartialPerm, Transformation};

/// `s ↦ (x ↦ xs)` on `S¹`. A semigroup with a declared identity is its own `S¹`.
pub fn cayley_right_regular(s: &FinSemigroup) -> Result<RepresentationMap> {
    let carrier = if s.identity().is_some() {
        s.clone()
    } else {
        s.adjoin_identity()
    };
    let m = carrier.len();
    let images = (0..s.len())
        .map(|a| Transformation::new((0..m).map(|x| carrier.mul(x, a)).collect()).map(Image::Transformation))
        .collect::<Result<_>>()?;
    RepresentationMap::new(s.clone(), images, TargetSpace::Nn, m, vec![])
}

/// `a ↦ (x ↦ xa)` on `{x : x·aa⁻¹ = x}`.
pub fn wagner_preston(inv: &InverseStructure) -> Result<RepresentationMap> {
    let s = inv.base();
    let n = s.len();
    let phi = |a: usize| {
        let e = inv.range_idempotent(a);
        PartialPerm::new((0..n).map(|x| (s.mul(x, e) == x).then(|| s.mul(x, a))).collect())
    };
    let perms: Vec<PartialPerm> = (0..n).map(phi).collect::<Result<_>>()?;
    for a in 0..n {
        if perms[inv.inv(a)] != perms[a].invert() {
            return Err(Error::TheoremViolation(format!(
                "image of the inverse of {} is not the inverse image",
                s.label(a)
            )));
        }
    }
    let images = perms.into_iter().map(Image::PartialPerm).collect();
    RepresentationMap::new(s.clone(), images, TargetSpace::In, n, vec![])
}

fn lazy_of(img: &Image) -> Result<LazyMap> {
    Ok(match img {
        Image::Transformation(t) if *t == Transformation::identity(t.window()) => LazyMap::Identity,
        Image::Transformation(t) => LazyMap::from_transformation(t),
        Image::PartialPerm(p) => LazyMap::from_partial_perm(p),
        Image::Lazy(m) => m.clone(),
        Image::Tuple(_) => return Err(Error::Kind("tuple images have no action on ℕ".into())),
    })
}

/// Tuples act blockwise on `A_i = {pair(i, j)}`: as factor `i`'s image on the
/// second coordinate. The source is the product of the factor sources, in
/// the index order of [`FinSemigroup::product`].
pub fn product_embed(factors: &[RepresentationMap]) -> Result<RepresentationMap> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Invalid("product of no factors".into()))?;
    let target = first.target();
    if target == TargetSpace::Finite || rest.iter().any(|f| f.target() != target) {
        return Err(Error::Kind("factors must all act on ℕ^ℕ or all on I_ℕ".into()));
    }
    let mut source = first.source().clone();
    for f in rest {
        source = source.product(f.source());
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.source().len()).collect();
    let mut window = 0u64;
    for (i, f) in factors.iter().enumerate() {
        window = window.max(pair(i as u64, f.window().max(1) as u64 - 1)? + 1);
    }
    let lazies: Vec<Vec<LazyMap>> = factors
        .iter()
        .map(|f| f.images().iter().map(lazy_of).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let images = (0..source.len())
        .map(|mut idx| {
            let mut coords = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                coords[i] = idx % sizes[i];
                idx /= sizes[i];
            }
            let blocks: Vec<LazyMap> = coords.iter().enumerate().map(|(i, &c)| lazies[i][c].clone()).collect();
            if blocks.iter().all(|b| *b == LazyMap::Identity) {
                Image::Lazy(LazyMap::Identity)
            } else {
                Image::Lazy(LazyMap::PairBlock { blocks })
            }
        })
        .collect();
    RepresentationMap::new(source, images, target, window as usize, vec![])
}

/// `t ↦ 2t`, acting as `2x ↦ 2t(x)` and undefined on odd points.
pub fn doubled(t: &Transformation) -> LazyMap {
    LazyMap::AffineParity {
        modulus: 2,
        rules: vec![ParityRule {
            residue: 0,
            inner: LazyMap::from_transformation(t),
            scale: 2,
            offset: 0,
        }],
    }
}

/// `t' = 2t ∪ {(1,1)} ∪ {(2n+1, 3) : n ≥ 1}`.
pub fn adjoin_lift(t: &Transformation) -> LazyMap {
    let odd = LazyMap::Table {
        entries: vec![(0, Some(0))],
        fallback: Box::new(LazyMap::constant(1)),
    };
    LazyMap::AffineParity {
        modulus: 2,
        rules: vec![
            ParityRule {
                residue: 0,
                inner: LazyMap::from_transformation(t),
                scale: 2,
                offset: 0,
            },
            ParityRule {
                residue: 1,
                inner: odd,
                scale: 2,
                offset: 1,
            },
        ],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjoin {
    Identity,
    Zero,
}

/// Extends a transformation representation of `S` to `S¹` or `S⁰`. The new
/// identity goes to the identity map and the new zero to the constant `1`.
pub fn adjoin_embed(r: &RepresentationMap, which: Adjoin) -> Result<RepresentationMap> {
    let mut images = Vec::with_capacity(r.source().len() + 1);
    let mut width = 2;
    for img in r.images() {
        match img {
            Image::Transformation(t) => {
                width = width.max(t.window());
                images.push(Image::Lazy(adjoin_lift(t)));
            }
            other => return Err(Error::Kind(format!("expected transformation images, got {}", other.kind()))),
        }
    }
    let (source, extra) = match which {
        Adjoin::Identity => (r.source().adjoin_identity(), LazyMap::Identity),
        Adjoin::Zero => (r.source().adjoin_zero(), LazyMap::constant(1)),
    };
    images.push(Image::Lazy(extra));
    // odd points past 3 separate a lifted identity from the adjoined one
    let window = 2 * (width + 1);
    for img in &images {
        if let Image::Lazy(m) = img {
            m.window_restrict(window)?;
        }
    }
    RepresentationMap::new(source, images, TargetSpace::Nn, window, vec![])
}

/// `0 ↦ 0`, `x+1 ↦ y+1` for `(x, y) ∈ g`, and every other point to `0`.
pub fn embcl_map(g: &PartialPerm) -> LazyMap {
    let pairs = g.pairs();
    if pairs.is_empty() {
        return LazyMap::constant(0);
    }
    LazyMap::Table {
        entries: pairs
            .into_iter()
            .map(|(x, y)| (x as u64 + 1, Some(y as u64 + 1)))
            .collect(),
        fallback: Box::new(LazyMap::constant(0)),
    }
}

/// Composes a partial-bijection representation with [`embcl_map`].
pub fn embcl_lift(r: &RepresentationMap) -> Result<RepresentationMap> {
    let mut width = 0;
    let mut images = Vec::with_capacity(r.images().len());
    for img in r.images() {
        match img {
            Image::PartialPerm(p) => {
                width = width.max(p.window());
                images.push(Image::Lazy(embcl_map(p)));
            }
            other => return Err(Error::Kind(format!("expected partial bijections, got {}", other.kind()))),
        }
    }
    RepresentationMap::new(r.source().clone(), images, TargetSpace::Nn, 2 * (width + 1), vec![])
}

/// [`embcl_map`] on all of `I_k`, as a verified map into ℕ^ℕ.
pub fn embcl_embed(k: usize) -> Result<RepresentationMap> {
    let s = crate::semigroup::builders::symmetric_inverse_monoid(k);
    let images = PartialPerm::all(k).iter().map(|g| Image::Lazy(embcl_map(g))).collect();
    RepresentationMap::new(s, images, TargetSpace::Nn, 2 * (k + 1), vec![])
}
