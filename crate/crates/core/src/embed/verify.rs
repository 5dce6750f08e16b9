//! Finite-scale checks that a representation is a topological embedding.

use serde::Serialize;

use super::{Image, RepresentationMap};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::topo::TopSpec;
use crate::transforms::open::{BasicOpen, Windowed};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    /// Homomorphism and injectivity; a [`RepresentationMap`] always has both.
    pub homomorphism: bool,
    pub injective: bool,
    /// Indices of target opens whose preimage is not open.
    pub preimages_not_open: Vec<usize>,
    /// Source points `x` whose neighbourhood `N(x)` does not map onto a
    /// relatively open subset of the image.
    pub images_not_open: Vec<usize>,
    /// Window on which lazy images were evaluated.
    pub window: u64,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.homomorphism && self.injective && self.preimages_not_open.is_empty() && self.images_not_open.is_empty()
    }

    /// One line per check.
    pub fn items(&self) -> Vec<(String, bool)> {
        vec![
            ("homomorphism".into(), self.homomorphism),
            ("injective".into(), self.injective),
            (
                format!("preimages of target opens are open {:?}", self.preimages_not_open),
                self.preimages_not_open.is_empty(),
            ),
            (
                format!("images of source opens are relatively open {:?}", self.images_not_open),
                self.images_not_open.is_empty(),
            ),
        ]
    }
}

fn member(img: &Image, b: &BasicOpen, window: u64) -> Result<bool> {
    match img {
        Image::Transformation(t) => b.contains(t),
        Image::PartialPerm(p) => b.contains(p),
        Image::Lazy(m) => b.contains(&Windowed { map: m, window }),
        Image::Tuple(_) => Err(Error::Kind("basic opens of ℕ^ℕ or I_ℕ do not apply to tuples".into())),
    }
}

/// Checks both directions of continuity against a finite list of target basic
/// opens. Lazy images are evaluated on twice the largest point any open mentions.
///
/// A finite intersection of listed opens counts as open, so `N(x)` has
/// relatively open image iff the opens containing the image of `x` pull back
/// inside `N(x)`.
pub fn verify_embedding(r: &RepresentationMap, source: &TopSpec, opens: &[BasicOpen]) -> Result<EmbeddingReport> {
    let n = r.source().len();
    if source.len() != n {
        return Err(Error::Topology(format!("topology has {} points, source has {n}", source.len())));
    }
    let window = 2 * (opens.iter().filter_map(BasicOpen::max_point).max().unwrap_or(0) + 1);
    let mut pre = Vec::with_capacity(opens.len());
    for b in opens {
        let mut set = Bits::new(n);
        for x in 0..n {
            if member(r.image(x), b, window)? {
                set.insert(x);
            }
        }
        pre.push(set);
    }
    let preimages_not_open = (0..opens.len()).filter(|&i| !source.is_open(&pre[i])).collect();
    let images_not_open = (0..n)
        .filter(|&x| {
            let meet = pre
                .iter()
                .filter(|p| p.contains(x))
                .fold(Bits::full(n), |acc, p| acc.intersection(p));
            !meet.is_subset(source.nbhd(x))
        })
        .collect();
    Ok(EmbeddingReport {
        homomorphism: true,
        injective: true,
        preimages_not_open,
        images_not_open,
        window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{adjoin_embed, cayley_right_regular, embcl_embed, Adjoin};
    use crate::semigroup::builders::*;

    fn point_opens(w: u64) -> Vec<BasicOpen> {
        (0..w)
            .flat_map(|x| (0..w).map(move |y| BasicOpen::Nn { graph: vec![(x, y)] }))
            .collect()
    }

    #[test]
    fn discrete_cayley_passes() {
        for s in bundled() {
            let r = cayley_right_regular(&s).unwrap();
            let w = r.window() as u64;
            let rep = verify_embedding(&r, &TopSpec::discrete(s.len()), &point_opens(w)).unwrap();
            assert!(rep.passed(), "{}", s.name());
        }
    }

    #[test]
    fn embcl_on_i3_passes() {
        let r = embcl_embed(3).unwrap();
        let rep = verify_embedding(&r, &TopSpec::discrete(r.source().len()), &point_opens(4)).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn indiscrete_source_fails_preimages() {
        let r = cayley_right_regular(&cyclic_group(2)).unwrap();
        let rep = verify_embedding(&r, &TopSpec::indiscrete(2), &point_opens(2)).unwrap();
        assert!(!rep.passed());
        assert!(!rep.preimages_not_open.is_empty());
    }

    #[test]
    fn adjoined_zero_on_window_eight() {
        let r = cayley_right_regular(&cyclic_group(3)).unwrap();
        let z = adjoin_embed(&r, Adjoin::Zero).unwrap();
        let rep = verify_embedding(&z, &TopSpec::discrete(4), &point_opens(8)).unwrap();
        assert_eq!(rep.window, 16);
        assert!(rep.passed());
    }
}
