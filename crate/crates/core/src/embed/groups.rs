//! Groups of transformations whose identity need not be the identity map.

use serde::Serialize;

use super::{Image, RepresentationMap, TargetSpace};
use crate::error::{Error, Result};
use crate::semigroup::FinSemigroup;
use crate::transforms::Transformation;

/// The group, its identity, and `g ↦ g|_X` as a map into `Sym(X)`, `X = im(e)`.
#[derive(Debug, Clone)]
pub struct GroupRestriction {
    pub group: FinSemigroup,
    pub identity: usize,
    /// `im(e)` in increasing order; position `i` is point `i` of the target.
    pub support: Vec<usize>,
    pub map: RepresentationMap,
}

fn group_table(elements: &[Transformation]) -> Result<(FinSemigroup, usize)> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::Invalid("empty group".into()));
    }
    let w = elements[0].window();
    if elements.iter().any(|t| t.window() != w) {
        return Err(Error::WindowMismatch {
            left: w,
            right: elements.iter().map(Transformation::window).find(|&v| v != w).unwrap(),
        });
    }
    for i in 0..n {
        if elements[..i].contains(&elements[i]) {
            return Err(Error::Invalid(format!("element {i} is listed twice")));
        }
    }
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let c = elements[a].compose(&elements[b])?;
            table[a][b] = elements
                .iter()
                .position(|t| *t == c)
                .ok_or_else(|| Error::Domain(format!("not closed: element {a} then {b} leaves the set")))?;
        }
    }
    let labels = elements.iter().map(|t| t.to_string()).collect();
    let s = FinSemigroup::with_labels("G", labels, table)?;
    let e = s.find_identity().ok_or_else(|| Error::Domain("no identity element".into()))?;
    for a in 0..n {
        if !(0..n).any(|b| s.mul(a, b) == e) {
            return Err(Error::Domain(format!("element {a} has no inverse")));
        }
    }
    Ok((s.with_identity(e)?, e))
}

/// `g ↦ g|_{im g}` on a group of transformations under composition.
pub fn group_restriction(elements: &[Transformation]) -> Result<GroupRestriction> {
    let (group, e) = group_table(elements)?;
    let support = elements[e].image().to_vec();
    let pos = |x: usize| support.binary_search(&x).ok();
    let mut images = Vec::with_capacity(elements.len());
    for (i, g) in elements.iter().enumerate() {
        let map: Option<Vec<usize>> = support.iter().map(|&x| pos(g.apply(x))).collect();
        let map = map.ok_or_else(|| Error::TheoremViolation(format!("element {i} leaves im(e)")))?;
        let t = Transformation::new(map)?;
        if !t.is_permutation() {
            return Err(Error::TheoremViolation(format!("element {i} does not permute im(e)")));
        }
        images.push(Image::Transformation(t));
    }
    let map = RepresentationMap::new(group.clone(), images, TargetSpace::Finite, support.len(), vec![])?;
    Ok(GroupRestriction {
        group,
        identity: e,
        support,
        map,
    })
}

/// The six structural facts about a group of transformations, each with the
/// first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupLaws {
    /// `e` fixes its image.
    pub identity_fixes_image: Option<usize>,
    /// All elements share one image.
    pub common_image: Option<usize>,
    /// Each `g` permutes `im g`.
    pub permutes_image: Option<usize>,
    /// `g⁻¹|_{im g}` inverts `g|_{im g}`.
    pub inverse_restricts: Option<usize>,
    /// Distinct elements have distinct restrictions; a colliding pair.
    pub faithful: Option<(usize, usize)>,
    /// `(x)f = (x')f` with `x' ∈ im f` forces `(x)f = (x)g ⟺ (x')f = (x')g`;
    /// a failing `(f, g, x)`.
    pub representative: Option<(usize, usize, usize)>,
}

impl SubgroupLaws {
    pub fn all_hold(&self) -> bool {
        self.identity_fixes_image.is_none()
            && self.common_image.is_none()
            && self.permutes_image.is_none()
            && self.inverse_restricts.is_none()
            && self.faithful.is_none()
            && self.representative.is_none()
    }
}

pub fn subgroup_laws(elements: &[Transformation]) -> Result<SubgroupLaws> {
    let (group, e) = group_table(elements)?;
    let n = elements.len();
    let w = elements[e].window();
    let inv = |a: usize| (0..n).find(|&b| group.mul(a, b) == e).expect("checked in group_table");
    let im_e = elements[e].image();
    let restrict = |g: &Transformation| -> Vec<(usize, usize)> { g.image().iter().map(|x| (x, g.apply(x))).collect() };

    let identity_fixes_image = im_e.iter().find(|&x| elements[e].apply(x) != x);
    let common_image = (0..n).find(|&g| elements[g].image() != im_e);
    let permutes_image = (0..n).find(|&g| {
        let img = elements[g].image();
        let mapped: crate::bits::Bits = crate::bits::Bits::from_indices(w, img.iter().map(|x| elements[g].apply(x)));
        mapped != img
    });
    let inverse_restricts = (0..n).find(|&g| {
        let gi = &elements[inv(g)];
        elements[g].image().iter().any(|x| gi.apply(elements[g].apply(x)) != x)
    });
    let mut faithful = None;
    'outer: for f in 0..n {
        for g in f + 1..n {
            if restrict(&elements[f]) == restrict(&elements[g]) {
                faithful = Some((f, g));
                break 'outer;
            }
        }
    }
    let mut representative = None;
    'rep: for f in 0..n {
        let tf = &elements[f];
        for x in 0..w {
            for xp in tf.image().iter() {
                if tf.apply(x) != tf.apply(xp) {
                    continue;
                }
                for (g, tg) in elements.iter().enumerate() {
                    if (tf.apply(x) == tg.apply(x)) != (tf.apply(xp) == tg.apply(xp)) {
                        representative = Some((f, g, x));
                        break 'rep;
                    }
                }
            }
        }
    }
    Ok(SubgroupLaws {
        identity_fixes_image,
        common_image,
        permutes_image,
        inverse_restricts,
        faithful,
        representative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_group() {
        let r = group_restriction(&[Transformation::identity(3)]).unwrap();
        assert_eq!(r.support, vec![0, 1, 2]);
        assert_eq!(r.map.image(0), &Image::Transformation(Transformation::identity(3)));
        let r = group_restriction(&[t(&[0, 0, 0])]).unwrap();
        assert_eq!(r.support, vec![0]);
    }

    #[test]
    fn non_identity_idempotent_unit() {
        let e = t(&[0, 1, 0, 1]);
        let g = t(&[1, 0, 1, 0]);
        let r = group_restriction(&[e.clone(), g.clone()]).unwrap();
        assert_eq!(r.identity, 0);
        assert_eq!(r.support, vec![0, 1]);
        assert_eq!(r.map.image(1), &Image::Transformation(t(&[1, 0])));
        assert!(subgroup_laws(&[e, g]).unwrap().all_hold());
    }

    #[test]
    fn three_cycle_on_a_retract() {
        let e = t(&[0, 1, 2, 1, 2]);
        let c = t(&[1, 2, 0, 2, 0]);
        let c2 = c.compose(&c).unwrap();
        let r = group_restriction(&[e.clone(), c.clone(), c2.clone()]).unwrap();
        assert_eq!(r.support, vec![0, 1, 2]);
        assert!(subgroup_laws(&[e, c, c2]).unwrap().all_hold());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(group_restriction(&[t(&[0, 1]), t(&[0, 0])]).is_err());
        assert!(group_restriction(&[t(&[1, 0])]).is_err());
        assert!(group_restriction(&[]).is_err());
    }
}
