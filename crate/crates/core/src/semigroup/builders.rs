//! Standard small semigroups and the bundled semigroup catalog.

use super::FinSemigroup;
use crate::error::{Error, Result};
use crate::transforms::{PartialPerm, Transformation};

fn labels(n: usize, f: impl Fn(usize) -> String) -> Vec<String> {
    (0..n).map(f).collect()
}

fn built(r: Result<FinSemigroup>) -> FinSemigroup {
    r.expect("builder tables are associative by construction")
}

/// `Z_n` under addition; identity `0`.
pub fn cyclic_group(n: usize) -> FinSemigroup {
    assert!(n > 0);
    built(FinSemigroup::from_fn(format!("Z{n}"), labels(n, |i| i.to_string()), |a, b| (a + b) % n))
        .with_identity(0)
        .expect("0 is the identity")
}

/// Semigroup of a set of maps closed under composition, in the given order.
fn from_elements<T: Eq>(
    name: String,
    elems: &[T],
    label: impl Fn(&T) -> String,
    compose: impl Fn(&T, &T) -> T,
) -> FinSemigroup {
    let index = |t: &T| elems.iter().position(|e| e == t).expect("set closed under composition");
    let lbl = elems.iter().map(label).collect();
    built(FinSemigroup::from_fn(name, lbl, |a, b| index(&compose(&elems[a], &elems[b]))))
}

/// Symmetric group on `k` points, elements in lexicographic order of their value arrays.
pub fn symmetric_group(k: usize) -> FinSemigroup {
    let elems: Vec<_> = Transformation::all(k).into_iter().filter(|t| t.is_permutation()).collect();
    let s = from_elements(format!("S{k}"), &elems, |t| t.to_string(), |f, g| f.compose(g).unwrap());
    s.with_identity(0).expect("identity permutation sorts first")
}

/// Full transformation monoid `T_k`.
pub fn full_transformation_monoid(k: usize) -> FinSemigroup {
    let elems = Transformation::all(k);
    let id = elems.iter().position(|t| *t == Transformation::identity(k)).unwrap();
    from_elements(format!("T{k}"), &elems, |t| t.to_string(), |f, g| f.compose(g).unwrap())
        .with_identity(id)
        .unwrap()
}

/// Symmetric inverse monoid `I_k`, elements ordered as in [`PartialPerm::all`].
pub fn symmetric_inverse_monoid(k: usize) -> FinSemigroup {
    let elems = PartialPerm::all(k);
    let id = elems.iter().position(|p| *p == PartialPerm::identity(k)).unwrap();
    from_elements(format!("I{k}"), &elems, |p| p.to_string(), |f, g| f.compose(g).unwrap())
        .with_identity(id)
        .unwrap()
}

/// The partial bijections of `w` points of rank at most one:
/// `∅` first, then `{(i,j)}` in row-major order.
pub fn rank_one_maps(w: usize) -> Vec<PartialPerm> {
    let mut v = vec![PartialPerm::empty(w)];
    for i in 0..w {
        for j in 0..w {
            v.push(PartialPerm::from_pairs(w, &[(i, j)]).unwrap());
        }
    }
    v
}

/// Brandt semigroup `B_w` realised as the rank ≤ 1 partial bijections of `w` points.
pub fn brandt(w: usize) -> FinSemigroup {
    let elems = rank_one_maps(w);
    from_elements(format!("B{w}"), &elems, |p| p.to_string(), |f, g| f.compose(g).unwrap())
}

/// Left-zero semigroup: `ab = a`.
pub fn left_zero(n: usize) -> FinSemigroup {
    built(FinSemigroup::from_fn(format!("L{n}"), labels(n, |i| format!("l{i}")), |a, _| a))
}

/// Right-zero semigroup: `ab = b`.
pub fn right_zero(n: usize) -> FinSemigroup {
    built(FinSemigroup::from_fn(format!("R{n}"), labels(n, |i| format!("r{i}")), |_, b| b))
}

/// The chain `0 < 1 < .. < n-1` under `min`.
pub fn chain(n: usize) -> FinSemigroup {
    built(FinSemigroup::from_fn(format!("C{n}"), labels(n, |i| i.to_string()), |a, b| a.min(b)))
}

/// `{0, x_0, .., x_{w-1}}` with `aa = a` and every other product `0`.
pub fn antichain_with_zero(w: usize) -> FinSemigroup {
    let lbl = std::iter::once("0".to_string()).chain((0..w).map(|i| format!("x{i}"))).collect();
    built(FinSemigroup::from_fn(format!("T{w}*"), lbl, |a, b| if a == b { a } else { 0 }))
}

/// Index of `(t, ε)` in [`sign_product`]: `t` indexes `{0, x_0, ..}` and `ε = ±1`.
pub fn sign_index(t: usize, minus: bool) -> usize {
    2 * t + minus as usize
}

/// `T × {1, -1}` with `T` the antichain with zero on `w` atoms.
/// Element `(t, ε)` sits at [`sign_index`].
pub fn sign_product(w: usize) -> FinSemigroup {
    let n = 2 * (w + 1);
    let t_label = |t: usize| if t == 0 { "0".to_string() } else { format!("x{}", t - 1) };
    let lbl = labels(n, |i| format!("({},{})", t_label(i / 2), if i % 2 == 0 { "1" } else { "-1" }));
    built(FinSemigroup::from_fn(format!("exB{w}"), lbl, |a, b| {
        let t = if a / 2 == b / 2 { a / 2 } else { 0 };
        sign_index(t, (a % 2) != (b % 2))
    }))
}

/// `{0} ∪ {1/(k+1) : k < w}` under `min`; index 0 is `0` and index `k+1` is `1/(k+1)`.
pub fn reciprocal_chain(w: usize) -> FinSemigroup {
    let lbl = std::iter::once("0".to_string()).chain((0..w).map(|k| format!("1/{}", k + 1))).collect();
    built(FinSemigroup::from_fn(format!("recip{w}"), lbl, |a, b| {
        if a == 0 || b == 0 {
            0
        } else {
            a.max(b)
        }
    }))
}

/// Declares the top of a chain as its identity.
pub fn chain_monoid(n: usize) -> FinSemigroup {
    chain(n).with_identity(n - 1).unwrap().renamed(format!("C{n}"))
}

/// Small semigroups shipped with the workbench, in a fixed order.
pub fn bundled() -> Vec<FinSemigroup> {
    let mut v = vec![
        cyclic_group(1),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group(3),
        left_zero(2),
        right_zero(2),
        full_transformation_monoid(2),
        symmetric_inverse_monoid(2),
        brandt(2),
    ];
    v.extend((1..=5).map(chain_monoid));
    for k in 2..=5 {
        v.push(cyclic_group(k).adjoin_zero().renamed(format!("Z{k}^0")));
    }
    v.push(cyclic_group(2).product(&chain_monoid(2)).renamed("Z2xC2"));
    v.push(cyclic_group(3).product(&chain_monoid(2)).renamed("Z3xC2"));
    v.push(cyclic_group(2).product(&cyclic_group(2)).renamed("Z2xZ2"));
    v.push(cyclic_group(2).product(&cyclic_group(2)).adjoin_zero().renamed("Z2xZ2^0"));
    v.push(chain_monoid(2).product(&chain_monoid(2)).renamed("C2xC2"));
    v.push(antichain_with_zero(2).adjoin_identity().renamed("T2*^1"));
    v.extend((1..=3).map(sign_product));
    v
}

pub fn by_name(name: &str) -> Result<FinSemigroup> {
    bundled()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownInstance(name.to_string()))
}
