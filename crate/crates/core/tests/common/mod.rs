//! Brute-force oracles written straight from the definitions. None of these
//! call into the library's algorithms; they only read multiplication tables.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semitop::FinSemigroup;

/// Bitmask sets over at most 16 points.
pub type Mask = u32;

pub fn mask_of(it: impl IntoIterator<Item = usize>) -> Mask {
    it.into_iter().fold(0, |m, x| m | 1 << x)
}

pub fn members(m: Mask, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&x| m >> x & 1 == 1)
}

pub fn contains(m: Mask, x: usize) -> bool {
    m >> x & 1 == 1
}

pub fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn table(s: &FinSemigroup) -> Vec<Vec<usize>> {
    (0..s.len()).map(|a| (0..s.len()).map(|b| s.mul(a, b)).collect()).collect()
}

/// First-occurrence relabelling of class ids.
pub fn canon(classes: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    classes
        .iter()
        .map(|c| match seen.iter().position(|d| d == c) {
            Some(i) => i,
            None => {
                seen.push(*c);
                seen.len() - 1
            }
        })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Least right congruence containing `seeds`. The relation
/// `{(a, b), (as, bs)}` is already right-compatible, so its equivalence
/// closure is the answer.
pub fn right_closure(t: &[Vec<usize>], seeds: &[(usize, usize)]) -> Vec<usize> {
    let n = t.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in seeds {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
        for (&as_, &bs) in t[a].iter().zip(&t[b]) {
            let (ra, rb) = (find(&mut parent, as_), find(&mut parent, bs));
            parent[ra] = rb;
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    canon(&roots)
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=top {
            prefix.push(c);
            go(prefix, max.max(c), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

pub fn is_right_congruence(t: &[Vec<usize>], p: &[usize]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| p[a] != p[b] || (0..n).all(|s| p[t[a][s]] == p[t[b][s]])))
}

pub fn is_two_sided_congruence(t: &[Vec<usize>], p: &[usize]) -> bool {
    let n = t.len();
    is_right_congruence(t, p)
        && (0..n).all(|a| (0..n).all(|b| p[a] != p[b] || (0..n).all(|s| p[t[s][a]] == p[t[s][b]])))
}

pub fn associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// The unique `y` with `xyx = x` and `yxy = y` for every `x`, if the table is inverse.
pub fn inverses(t: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = t.len();
    (0..n)
        .map(|x| {
            let ys: Vec<usize> = (0..n).filter(|&y| t[t[x][y]][x] == x && t[t[y][x]][y] == y).collect();
            (ys.len() == 1).then(|| ys[0])
        })
        .collect()
}

pub fn idempotent_mask(t: &[Vec<usize>]) -> Mask {
    mask_of((0..t.len()).filter(|&e| t[e][e] == e))
}

/// A finite topology as the minimal neighbourhood of each point.
#[derive(Debug, Clone)]
pub struct Space {
    pub n: usize,
    pub nbhd: Vec<Mask>,
}

impl Space {
    /// From a reflexive relation `rel[x]` (points every open set around `x`
    /// must contain), closed transitively here.
    pub fn from_relation(n: usize, rel: &[Mask]) -> Space {
        let mut nbhd: Vec<Mask> = rel.iter().enumerate().map(|(x, &m)| m | 1 << x).collect();
        loop {
            let next: Vec<Mask> = nbhd
                .iter()
                .map(|&m| members(m, n).fold(m, |acc, y| acc | nbhd[y]))
                .collect();
            if next == nbhd {
                return Space { n, nbhd };
            }
            nbhd = next;
        }
    }

    pub fn discrete(n: usize) -> Space {
        Space { n, nbhd: (0..n).map(|x| 1 << x).collect() }
    }

    pub fn indiscrete(n: usize) -> Space {
        let full = (1 << n) - 1;
        Space { n, nbhd: vec![full; n] }
    }

    pub fn full(&self) -> Mask {
        (1 << self.n) - 1
    }

    pub fn is_open(&self, m: Mask) -> bool {
        members(m, self.n).all(|x| subset(self.nbhd[x], m))
    }

    /// Every open set, found by testing every subset.
    pub fn opens(&self) -> Vec<Mask> {
        (0..=self.full()).filter(|&m| self.is_open(m)).collect()
    }

    pub fn to_topspec(&self) -> semitop::TopSpec {
        let nb = self
            .nbhd
            .iter()
            .map(|&m| semitop::Bits::from_indices(self.n, members(m, self.n)))
            .collect();
        semitop::TopSpec::from_nbhds(self.n, nb).expect("a preorder gives a topology")
    }
}

/// Every topology on `n ≤ 4` points, one per preorder.
pub fn all_spaces(n: usize) -> Vec<Space> {
    assert!(n <= 4);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let mut rel: Vec<Mask> = (0..n).map(|x| 1 << x).collect();
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                rel[x] |= 1 << y;
            }
        }
        let transitive = (0..n).all(|x| members(rel[x], n).all(|y| subset(rel[y], rel[x])));
        if transitive {
            out.push(Space { n, nbhd: rel });
        }
    }
    out
}

/// Discrete, indiscrete and `count` seeded random topologies.
pub fn sample_spaces(n: usize, count: usize, seed: u64) -> Vec<Space> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Space::discrete(n), Space::indiscrete(n)];
    for _ in 0..count {
        let density = rng.gen_range(0.05..0.4);
        let rel: Vec<Mask> = (0..n)
            .map(|_| mask_of((0..n).filter(|_| rng.gen_bool(density))))
            .collect();
        out.push(Space::from_relation(n, &rel));
    }
    out
}

pub fn spaces_for(n: usize, seed: u64) -> Vec<Space> {
    if n <= 4 {
        all_spaces(n)
    } else {
        sample_spaces(n, 24, seed)
    }
}

/// Ditopological by the definition: inversion continuous, and for every `x`
/// and open `O ∋ x` some open `U ∋ x`, `W ∋ xx⁻¹` have
/// `{s : ∃b ∈ U, ∃e ∈ W∩E, b = es} ∩ {s : ss⁻¹ ∈ W} ⊆ O`.
/// Returns `Err(())` for an inversion failure and `Ok(Some(x))` for the first
/// point where the neighbourhood condition fails.
pub fn ditop_oracle(t: &[Vec<usize>], sp: &Space) -> Result<Option<usize>, ()> {
    let n = t.len();
    let inv = inverses(t).expect("inverse semigroup");
    let idem = idempotent_mask(t);
    let opens = sp.opens();
    for &o in &opens {
        if !sp.is_open(mask_of((0..n).filter(|&x| contains(o, inv[x])))) {
            return Err(());
        }
    }
    let set = |u: Mask, w: Mask| -> Mask {
        mask_of((0..n).filter(|&s| {
            members(w & idem, n).any(|e| contains(u, t[e][s])) && contains(w, t[s][inv[s]])
        }))
    };
    for x in 0..n {
        let xx = t[x][inv[x]];
        let mut achievable = Vec::new();
        for &u in opens.iter().filter(|&&u| contains(u, x)) {
            for &w in opens.iter().filter(|&&w| contains(w, xx)) {
                achievable.push(set(u, w));
            }
        }
        let ok = opens
            .iter()
            .filter(|&&o| contains(o, x))
            .all(|&o| achievable.iter().any(|&d| subset(d, o)));
        if !ok {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// `↑y` in a semilattice: `{z : yz = y}`.
pub fn up(t: &[Vec<usize>], y: usize) -> Mask {
    mask_of((0..t.len()).filter(|&z| t[y][z] == y))
}

pub fn is_semilattice(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    associative(t) && (0..n).all(|a| t[a][a] == a && (0..n).all(|b| t[a][b] == t[b][a]))
}

/// U at `x`: every open `U ∋ x` has `y ∈ U` and open `V ∋ x` with `V ⊆ ↑y`.
pub fn u_oracle(t: &[Vec<usize>], sp: &Space, x: usize) -> bool {
    let n = t.len();
    let opens = sp.opens();
    opens.iter().filter(|&&u| contains(u, x)).all(|&u| {
        members(u, n).any(|y| opens.iter().any(|&v| contains(v, x) && subset(v, up(t, y))))
    })
}

/// Clopen ideals by testing every subset.
pub fn clopen_ideals(t: &[Vec<usize>], sp: &Space) -> Vec<Mask> {
    let n = t.len();
    (0..=sp.full())
        .filter(|&i| sp.is_open(i) && sp.is_open(sp.full() & !i))
        .filter(|&i| members(i, n).all(|a| (0..n).all(|s| contains(i, t[a][s]) && contains(i, t[s][a]))))
        .collect()
}

/// U₂ at `x`: every open `U ∋ x` has `y ∈ U` and a clopen ideal `I` with
/// `x ∈ X∖I ⊆ ↑y`.
pub fn u2_oracle(t: &[Vec<usize>], sp: &Space, x: usize) -> bool {
    let n = t.len();
    let ideals = clopen_ideals(t, sp);
    sp.opens().iter().filter(|&&u| contains(u, x)).all(|&u| {
        members(u, n).any(|y| {
            ideals
                .iter()
                .any(|&i| !contains(i, x) && subset(sp.full() & !i, up(t, y)))
        })
    })
}

/// Every semilattice table on `0..n`, found by brute force over commutative
/// idempotent tables.
pub fn all_semilattices(n: usize) -> Vec<Vec<Vec<usize>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let total = n.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        let mut c = code;
        for &(a, b) in &pairs {
            t[a][b] = c % n;
            t[b][a] = c % n;
            c /= n;
        }
        if is_semilattice(&t) {
            out.push(t);
        }
    }
    out
}

/// Composition `f` then `g` of sampled maps; `None` past the sample.
pub fn then(f: &[Option<u64>], g: &[Option<u64>]) -> Vec<Option<u64>> {
    f.iter().map(|y| y.and_then(|y| g.get(y as usize).copied().flatten())).collect()
}

/// The six laws for a finite group of transformations, by definition.
pub fn subgroup_laws_oracle(maps: &[Vec<usize>]) -> bool {
    let k = maps.len();
    let w = maps[0].len();
    let comp = |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&y| g[y]).collect() };
    let idx = |m: &[usize]| maps.iter().position(|g| g == m);
    // closed, with a two-sided identity and inverses
    if (0..k).any(|a| (0..k).any(|b| idx(&comp(&maps[a], &maps[b])).is_none())) {
        return false;
    }
    let Some(e) = (0..k).find(|&e| (0..k).all(|g| comp(&maps[e], &maps[g]) == maps[g] && comp(&maps[g], &maps[e]) == maps[g])) else {
        return false;
    };
    let inv: Vec<usize> = match (0..k)
        .map(|g| (0..k).find(|&h| comp(&maps[g], &maps[h]) == maps[e]))
        .collect::<Option<Vec<_>>>()
    {
        Some(v) => v,
        None => return false,
    };
    let image = |g: &[usize]| -> Vec<bool> { (0..w).map(|x| g.contains(&x)).collect() };
    let im_e = image(&maps[e]);
    let pts: Vec<usize> = (0..w).filter(|&x| im_e[x]).collect();
    let fixes = pts.iter().all(|&x| maps[e][x] == x);
    let common = maps.iter().all(|g| image(g) == im_e);
    let permutes = maps.iter().all(|g| {
        let mut seen: Vec<usize> = pts.iter().map(|&x| g[x]).collect();
        seen.sort();
        seen == pts
    });
    let inverse = (0..k).all(|g| pts.iter().all(|&x| maps[inv[g]][maps[g][x]] == x));
    let faithful = (0..k).all(|a| (a + 1..k).all(|b| pts.iter().any(|&x| maps[a][x] != maps[b][x])));
    let representative = (0..k).all(|f| {
        (0..k).all(|g| {
            (0..w).all(|x| {
                pts.iter()
                    .filter(|&&x2| maps[f][x] == maps[f][x2])
                    .all(|&x2| (maps[f][x] == maps[g][x]) == (maps[f][x2] == maps[g][x2]))
            })
        })
    });
    fixes && common && permutes && inverse && faithful && representative
}
