//! Finite semigroups given by a dense multiplication table.
//!
//! Elements are indices `0..n`. Row is the left factor: `mul(a, b)` reads
//! `table[a][b]`. Labels are optional and only used for display and files.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};

pub mod builders;
pub mod congruence;
pub mod inverse;

pub use congruence::{Congruence, CongruenceKind};
pub use inverse::InverseStructure;

/// Outcome of an associativity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Associativity {
    Associative,
    /// First violating triple in lexicographic order.
    Violated { a: usize, b: usize, c: usize },
}

impl Associativity {
    pub fn holds(&self) -> bool {
        matches!(self, Associativity::Associative)
    }
}

/// Checks a raw square table for associativity.
pub fn check_associativity(table: &[Vec<usize>]) -> Result<Associativity> {
    let n = table.len();
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {r} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::MalformedTable(format!(
                "entry ({r}, {c}) = {v} is out of range 0..{n}"
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Ok(Associativity::Violated { a, b, c });
                }
            }
        }
    }
    Ok(Associativity::Associative)
}

/// A finite semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSemigroup {
    name: String,
    labels: Vec<String>,
    table: Vec<usize>,
    n: usize,
    identity: Option<usize>,
    fingerprint: u64,
}

impl FinSemigroup {
    /// Builds a semigroup from a square table, validating range and associativity.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(name, labels, table)
    }

    pub fn with_labels(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if labels.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        if let Associativity::Violated { a, b, c } = check_associativity(&table)? {
            return Err(Error::NotAssociative { a, b, c });
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Ok(Self::from_flat_unchecked(name.into(), labels, flat, n))
    }

    /// Assumes `flat` is an associative row-major table over `n` elements.
    pub(crate) fn from_flat_unchecked(
        name: String,
        labels: Vec<String>,
        table: Vec<usize>,
        n: usize,
    ) -> Self {
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        table.hash(&mut h);
        FinSemigroup {
            name,
            labels,
            table,
            n,
            identity: None,
            fingerprint: h.finish(),
        }
    }

    /// Builds a semigroup from a closed product function on `0..n`.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::with_labels(name, labels, table)
    }

    /// Declares `e` as the monoid identity after checking it is two-sided.
    pub fn with_identity(mut self, e: usize) -> Result<Self> {
        if e >= self.n {
            return Err(Error::Invalid(format!("identity {e} out of range")));
        }
        if let Some(x) = (0..self.n).find(|&x| self.mul(e, x) != x || self.mul(x, e) != x) {
            return Err(Error::Invalid(format!(
                "declared identity {} does not fix {}",
                self.labels[e], self.labels[x]
            )));
        }
        self.identity = Some(e);
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    /// Hash of the table; congruences use it to detect mismatched bases.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)`: the elements with `e·e = e`.
    pub fn idempotents(&self) -> Bits {
        Bits::from_indices(self.n, (0..self.n).filter(|&e| self.is_idempotent(e)))
    }

    /// A semilattice is a commutative semigroup of idempotents.
    pub fn is_semilattice(&self) -> bool {
        self.is_commutative() && (0..self.n).all(|e| self.is_idempotent(e))
    }

    /// Finds a two-sided identity, whether or not one was declared.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// `S⁰`: appends an absorbing element labelled `0` (or `0'` on a clash).
    pub fn adjoin_zero(&self) -> FinSemigroup {
        let z = self.n;
        let label = self.fresh_label("0");
        self.extend_by_one(format!("{}^0", self.name), label, |a, b| {
            if a == z || b == z {
                z
            } else {
                self.mul(a, b)
            }
        })
        .with_identity_if(self.identity)
    }

    /// `S¹`: appends an external identity labelled `1` (or `1'` on a clash).
    pub fn adjoin_identity(&self) -> FinSemigroup {
        let one = self.n;
        let label = self.fresh_label("1");
        let s = self.extend_by_one(format!("{}^1", self.name), label, |a, b| {
            if a == one {
                b
            } else if b == one {
                a
            } else {
                self.mul(a, b)
            }
        });
        FinSemigroup {
            identity: Some(one),
            ..s
        }
    }

    fn with_identity_if(mut self, e: Option<usize>) -> Self {
        self.identity = e;
        self
    }

    fn fresh_label(&self, base: &str) -> String {
        let mut l = base.to_string();
        while self.labels.contains(&l) {
            l.push('\'');
        }
        l
    }

    fn extend_by_one(
        &self,
        name: String,
        label: String,
        f: impl Fn(usize, usize) -> usize,
    ) -> FinSemigroup {
        let m = self.n + 1;
        let mut labels = self.labels.clone();
        labels.push(label);
        let table = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect();
        FinSemigroup::from_flat_unchecked(name, labels, table, m)
    }

    /// Restricts to a subset, which must be closed under multiplication.
    /// Returns the subsemigroup and the embedding of its indices into `self`.
    pub fn subsemigroup(&self, subset: &Bits, name: impl Into<String>) -> Result<(FinSemigroup, Vec<usize>)> {
        let elems = subset.to_vec();
        if elems.is_empty() {
            return Err(Error::Invalid("empty subsemigroup".into()));
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::Invalid(format!(
                        "subset not closed: {}·{} = {}",
                        self.labels[a],
                        self.labels[b],
                        self.labels[self.mul(a, b)]
                    )));
                }
                table.push(p);
            }
        }
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let mut sub = FinSemigroup::from_flat_unchecked(name.into(), labels, table, m);
        if let Some(e) = self.identity.filter(|&e| subset.contains(e)) {
            sub.identity = Some(pos[e]);
        }
        Ok((sub, elems))
    }

    /// Direct product; element `(a, b)` has index `a * other.len() + b`.
    pub fn product(&self, other: &FinSemigroup) -> FinSemigroup {
        let m = other.n;
        let n = self.n * m;
        let labels = (0..n)
            .map(|i| format!("({},{})", self.labels[i / m], other.labels[i % m]))
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        let mut p = FinSemigroup::from_flat_unchecked(
            format!("{}x{}", self.name, other.name),
            labels,
            table,
            n,
        );
        if let (Some(a), Some(b)) = (self.identity, other.identity) {
            p.identity = Some(a * m + b);
        }
        p
    }

    /// Right translates `aS`.
    pub fn right_ideal_of(&self, a: usize) -> Bits {
        Bits::from_indices(self.n, (0..self.n).map(|s| self.mul(a, s)))
    }

    /// Product set `A·B`.
    pub fn set_product(&self, a: &Bits, b: &Bits) -> Bits {
        let mut r = Bits::new(self.n);
        for x in a.iter() {
            for y in b.iter() {
                r.insert(self.mul(x, y));
            }
        }
        r
    }

    /// Writes the serializable file form.
    pub fn to_file(&self) -> SemigroupFile {
        SemigroupFile {
            name: self.name.clone(),
            elements: self.labels.clone(),
            table: self.rows(),
            identity: self.identity,
            inverse: InverseStructure::new(self).ok().map(|i| i.inverses().to_vec()),
        }
    }
}

/// On-disk semigroup format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupFile {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
    #[serde(default)]
    pub inverse: Option<Vec<usize>>,
}

impl SemigroupFile {
    /// Validates every invariant and fails with the first violation.
    pub fn load(&self) -> Result<FinSemigroup> {
        let labels = if self.elements.is_empty() {
            (0..self.table.len()).map(|i| i.to_string()).collect()
        } else {
            self.elements.clone()
        };
        let mut s = FinSemigroup::with_labels(self.name.clone(), labels, self.table.clone())?;
        if let Some(e) = self.identity {
            s = s.with_identity(e)?;
        }
        if let Some(inv) = &self.inverse {
            let computed = InverseStructure::new(&s).map_err(|w| {
                Error::Invalid(format!("declared inverse map, but {w}"))
            })?;
            if inv.len() != s.len() {
                return Err(Error::Invalid("inverse map has the wrong length".into()));
            }
            if let Some(x) = (0..s.len()).find(|&x| inv[x] != computed.inv(x)) {
                return Err(Error::Invalid(format!(
                    "declared inverse of {} is {}, but the unique inverse is {}",
                    s.label(x),
                    inv[x],
                    computed.inv(x)
                )));
            }
        }
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<FinSemigroup> {
        let f: SemigroupFile = serde_json::from_str(text)?;
        f.load()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associativity_examples() {
        assert!(check_associativity(&[vec![0, 1], vec![1, 0]]).unwrap().holds());
        assert!(check_associativity(&[vec![0, 0], vec![1, 1]]).unwrap().holds());
        assert_eq!(
            check_associativity(&[vec![0, 1], vec![0, 0]]).unwrap(),
            Associativity::Violated { a: 1, b: 0, c: 1 }
        );
    }

    // Independent triple loop for the failing table: (1,0,1) and (1,1,1) both fail.
    #[test]
    fn associativity_counterexample_by_hand() {
        let t = [[0usize, 1], [0, 0]];
        let mut bad = vec![];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        bad.push((a, b, c));
                    }
                }
            }
        }
        assert_eq!(bad, vec![(1, 0, 1), (1, 1, 1)]);
        let Associativity::Violated { a, b, c } = check_associativity(&t.map(|r| r.to_vec())).unwrap() else {
            panic!("associative?")
        };
        assert_eq!((a, b, c), bad[0]);
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            check_associativity(&[vec![0, 2], vec![0, 0]]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            check_associativity(&[vec![0], vec![0, 0]]),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn idempotent_examples() {
        let z2 = builders::cyclic_group(2);
        assert_eq!(z2.idempotents().to_vec(), vec![0]);
        let chain = builders::chain(3);
        assert_eq!(chain.idempotents().count(), 3);
        let t2 = builders::full_transformation_monoid(2);
        assert_eq!(t2.len(), 4);
        assert_eq!(t2.idempotents().count(), 3);
    }

    #[test]
    fn adjoin_examples() {
        let z2 = builders::cyclic_group(2);
        let z20 = z2.adjoin_zero();
        assert_eq!(z20.len(), 3);
        assert_eq!(z20.idempotents().count(), 2);
        for x in 0..3 {
            assert_eq!(z20.mul(2, x), 2);
            assert_eq!(z20.mul(x, 2), 2);
        }
        let r2 = builders::right_zero(2).adjoin_zero();
        assert_eq!(r2.mul(0, 2), 2);
        assert_eq!(r2.mul(0, 1), 1);
        assert_eq!(r2.mul(1, 0), 0);
        let z21 = z2.adjoin_identity();
        assert_eq!(z21.len(), 3);
        assert_eq!(z21.identity(), Some(2));
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(z21.mul(a, b), z2.mul(a, b));
            }
        }
    }

    #[test]
    fn file_round_trip_and_validation() {
        let s = builders::symmetric_inverse_monoid(2);
        let text = serde_json::to_string(&s.to_file()).unwrap();
        let back = SemigroupFile::from_json(&text).unwrap();
        assert_eq!(back.rows(), s.rows());
        assert_eq!(back.identity(), s.identity());

        let bad = r#"{"name":"bad","elements":["a","b"],"table":[[0,1],[0,0]]}"#;
        assert!(matches!(SemigroupFile::from_json(bad), Err(Error::NotAssociative { .. })));
        let wrong_id = r#"{"name":"z2","elements":["1","g"],"table":[[0,1],[1,0]],"identity":1}"#;
        assert!(SemigroupFile::from_json(wrong_id).is_err());
        let wrong_inv = r#"{"name":"l2","elements":["a","b"],"table":[[0,0],[1,1]],"inverse":[0,1]}"#;
        assert!(SemigroupFile::from_json(wrong_inv).is_err());
    }

    #[test]
    fn product_is_componentwise() {
        let z2 = builders::cyclic_group(2);
        let c2 = builders::chain(2);
        let p = z2.product(&c2);
        assert_eq!(p.len(), 4);
        assert!(check_associativity(&p.rows()).unwrap().holds());
        // index 2i + j holds (i, j): (1, 1)·(1, 0) = (0, 0)
        assert_eq!(p.mul(3, 2), 0);
    }
}
