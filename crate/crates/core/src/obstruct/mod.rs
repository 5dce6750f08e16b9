//! Right-congruence forcing certificates.
//!
//! A countable topological semigroup that embeds in the Baire space has a
//! countable family of right congruences with open classes forming a basis. The
//! counterexamples refute this by picking an open `U ∋ p` and showing that any
//! open right-congruence class inside a neighbourhood `V` of `p` is dragged
//! outside `U` by right multiplication.
//!
//! The engine runs those forcing steps on a finite truncation, once for every
//! admissible `V`. A certificate is a finite shadow of the infinite argument:
//! it checks each step of the proof at one window, not the theorem itself.
//! Whether every cancellative countable Polish semigroup embeds is open, and
//! nothing here bears on it.

pub mod catalog;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::congruence::{congruence_closure, replay_chain, ChainStep, ClosureRun};
use crate::semigroup::{Congruence, CongruenceKind, FinSemigroup};
use crate::topo::TruncatedPresentation;

pub use catalog::{catalog, instance, Family, Instance, InstanceFile, RsGroup};

pub const CERTIFICATE_SCHEMA: u32 = 1;

/// What counts as an escape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Target {
    /// The class of the limit point leaves `open`, an open set containing it.
    ClassEscapes { open: Bits },
    /// The isolated point `q` joins a non-singleton class.
    IsolatedCollapse { q: usize },
}

impl Target {
    fn check_against(&self, pres: &TruncatedPresentation, p: usize) -> Result<()> {
        let t = &pres.topology;
        match self {
            Target::ClassEscapes { open } => {
                if open.universe() != t.len() || !open.contains(p) || !t.is_open(open) {
                    return Err(Error::Invalid(format!("target {open:?} is not an open set containing {p}")));
                }
            }
            Target::IsolatedCollapse { q } => {
                if *q >= t.len() || t.nbhd(*q).count() != 1 {
                    return Err(Error::Invalid(format!("target point {q} is not isolated")));
                }
            }
        }
        Ok(())
    }

    /// Re-embeds set data into a carrier of `n` points; JSON only keeps indices.
    fn fitted(&self, n: usize) -> Result<Target> {
        Ok(match self {
            Target::ClassEscapes { open } => Target::ClassEscapes {
                open: open
                    .with_universe(n)
                    .ok_or_else(|| Error::Verification("target set outside the carrier".into()))?,
            },
            t => t.clone(),
        })
    }

    /// The point whose class is watched.
    fn anchor(&self, p: usize) -> usize {
        match self {
            Target::ClassEscapes { .. } => p,
            Target::IsolatedCollapse { q } => *q,
        }
    }

    fn witness_ok(&self, w: usize) -> bool {
        match self {
            Target::ClassEscapes { open } => !open.contains(w),
            Target::IsolatedCollapse { .. } => true,
        }
    }
}

/// The first target to fire during one closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Escape {
    /// Index into the target list.
    pub target: usize,
    pub witness: usize,
    /// Chain step that completed the escape, or `None` if a seed did.
    pub step: Option<usize>,
}

/// Forcing from one admissible neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub neighbourhood: Bits,
    pub seeds: Vec<(usize, usize)>,
    pub chain: Vec<ChainStep>,
    pub partition: Vec<usize>,
    pub escape: Option<Escape>,
}

/// Result of [`forcing_closure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forcing {
    pub congruence: Congruence,
    pub seeds: Vec<(usize, usize)>,
    pub chain: Vec<ChainStep>,
}

fn seeds_for(p: usize, v: &Bits) -> Vec<(usize, usize)> {
    v.iter().filter(|&x| x != p).map(|x| (p, x)).collect()
}

fn admissible<'a>(pres: &'a TruncatedPresentation, p: usize, v: &Bits) -> Result<&'a [Bits]> {
    let lp = pres.limit_point(p).map_err(|_| Error::NotAdmissible(p))?;
    if !lp.family.contains(v) {
        return Err(Error::NotAdmissible(p));
    }
    Ok(&lp.family)
}

/// Right-congruence closure of `{(p, v) : v ∈ V}` with the steps recorded.
pub fn forcing_closure(pres: &TruncatedPresentation, p: usize, v: &Bits) -> Result<Forcing> {
    admissible(pres, p, v)?;
    let seeds = seeds_for(p, v);
    let mut run = ClosureRun::new(&pres.base, CongruenceKind::Right, true);
    for &(a, b) in &seeds {
        run.seed(a, b);
        run.drain();
    }
    let chain = run.chain().to_vec();
    Ok(Forcing {
        congruence: run.finish(),
        seeds,
        chain,
    })
}

fn fired(run: &mut ClosureRun<'_>, p: usize, targets: &[Target]) -> Option<(usize, usize)> {
    for (i, t) in targets.iter().enumerate() {
        let anchor = t.anchor(p);
        let class = run.class_of(anchor);
        let w = class.iter().find(|&y| y != anchor && t.witness_ok(y));
        if let Some(w) = w {
            return Some((i, w));
        }
    }
    None
}

fn run_case(s: &FinSemigroup, p: usize, v: &Bits, targets: &[Target]) -> Case {
    let seeds = seeds_for(p, v);
    let mut run = ClosureRun::new(s, CongruenceKind::Right, true);
    let mut escape: Option<Escape> = None;
    for &(a, b) in &seeds {
        if !run.seed(a, b) {
            continue;
        }
        if escape.is_none() {
            escape = fired(&mut run, p, targets).map(|(target, witness)| Escape {
                target,
                witness,
                step: None,
            });
        }
        run.drain_until(|r, _| {
            if escape.is_none() {
                if let Some((target, witness)) = fired(r, p, targets) {
                    escape = Some(Escape {
                        target,
                        witness,
                        step: Some(r.chain().len() - 1),
                    });
                }
            }
            false
        });
    }
    let partition = run.classes();
    Case {
        neighbourhood: v.clone(),
        seeds,
        chain: run.into_chain(),
        partition,
        escape,
    }
}

/// Every admissible neighbourhood of `p` is forced past some target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub schema: u32,
    pub instance: String,
    pub semigroup: String,
    pub fingerprint: u64,
    pub window: usize,
    pub guard: usize,
    pub limit_point: usize,
    pub targets: Vec<Target>,
    /// One case per admissible neighbourhood, largest first.
    pub cases: Vec<Case>,
    /// The case of the smallest neighbourhood.
    pub primary: usize,
}

/// Some admissible neighbourhood survives every target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoObstruction {
    pub schema: u32,
    pub instance: String,
    pub limit_point: usize,
    pub surviving: Vec<Bits>,
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Obstruction(ObstructionCertificate),
    NoObstruction(NoObstruction),
}

impl Verdict {
    pub fn is_obstruction(&self) -> bool {
        matches!(self, Verdict::Obstruction(_))
    }

    pub fn certificate(&self) -> Option<&ObstructionCertificate> {
        match self {
            Verdict::Obstruction(c) => Some(c),
            Verdict::NoObstruction(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Runs the forcing closure for each admissible `V` and reports whether some
/// target fires in all of them. Targets are consulted after every merge in
/// order; the first to fire is recorded.
pub fn escape_certificate(pres: &TruncatedPresentation, p: usize, targets: &[Target]) -> Result<Verdict> {
    let lp = pres.limit_point(p)?;
    for t in targets {
        t.check_against(pres, p)?;
    }
    let cases: Vec<Case> = lp
        .family
        .iter()
        .map(|v| run_case(&pres.base, p, v, targets))
        .collect();
    let surviving: Vec<Bits> = cases
        .iter()
        .filter(|c| c.escape.is_none())
        .map(|c| c.neighbourhood.clone())
        .collect();
    if surviving.is_empty() {
        let primary = cases.len() - 1;
        Ok(Verdict::Obstruction(ObstructionCertificate {
            schema: CERTIFICATE_SCHEMA,
            instance: pres.id.clone(),
            semigroup: pres.base.name().to_string(),
            fingerprint: pres.base.fingerprint(),
            window: pres.window,
            guard: pres.guard,
            limit_point: p,
            targets: targets.to_vec(),
            cases,
            primary,
        }))
    } else {
        Ok(Verdict::NoObstruction(NoObstruction {
            schema: CERTIFICATE_SCHEMA,
            instance: pres.id.clone(),
            limit_point: p,
            surviving,
            cases,
        }))
    }
}

/// Runs a catalog instance against its own targets.
pub fn certify(inst: &Instance) -> Result<Verdict> {
    escape_certificate(&inst.presentation, inst.limit_point(), &inst.targets)
}

fn verify(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

impl ObstructionCertificate {
    /// Re-checks the certificate against a presentation without trusting any
    /// recorded partition: every step is recomputed from the table, the result
    /// is compared with an independent closure, and each witness is re-tested
    /// against the topology.
    pub fn replay(&self, pres: &TruncatedPresentation) -> Result<()> {
        let s = &pres.base;
        verify(self.schema == CERTIFICATE_SCHEMA, || format!("unknown schema {}", self.schema))?;
        verify(self.fingerprint == s.fingerprint(), || "certificate is for a different table".into())?;
        verify(self.instance == pres.id, || format!("certificate is for {}", self.instance))?;
        let p = self.limit_point;
        let lp = pres.limit_point(p)?;
        let targets = self.targets.iter().map(|t| t.fitted(s.len())).collect::<Result<Vec<_>>>()?;
        for t in &targets {
            t.check_against(pres, p)?;
        }
        verify(self.cases.len() == lp.family.len(), || "not every admissible neighbourhood is covered".into())?;
        verify(self.primary + 1 == self.cases.len(), || "primary case is not the smallest neighbourhood".into())?;
        for (i, (case, v)) in self.cases.iter().zip(&lp.family).enumerate() {
            verify(case.neighbourhood.to_vec() == v.to_vec(), || format!("case {i} uses a non-admissible set"))?;
            verify(case.seeds == seeds_for(p, v), || format!("case {i} has the wrong seeds"))?;
            let partition = replay_chain(s, CongruenceKind::Right, &case.seeds, &case.chain)?;
            verify(partition == case.partition, || format!("case {i}: replay reaches a different partition"))?;
            let independent = congruence_closure(s, &case.seeds, CongruenceKind::Right)?;
            verify(independent.classes() == partition.as_slice(), || {
                format!("case {i}: chain stops short of the closure")
            })?;
            let esc = case
                .escape
                .as_ref()
                .ok_or_else(|| Error::Verification(format!("case {i} has no escape")))?;
            let t = targets
                .get(esc.target)
                .ok_or_else(|| Error::Verification(format!("case {i}: no target {}", esc.target)))?;
            let anchor = t.anchor(p);
            let w = esc.witness;
            verify(w < s.len() && w != anchor && t.witness_ok(w), || {
                format!("case {i}: {w} is not an escape for this target")
            })?;
            let upto = esc.step.map_or(0, |k| k + 1);
            verify(upto <= case.chain.len(), || format!("case {i}: step out of range"))?;
            let prefix = replay_chain(s, CongruenceKind::Right, &case.seeds, &case.chain[..upto])?;
            verify(prefix[w] == prefix[anchor], || format!("case {i}: witness not yet forced at the claimed step"))?;
        }
        Ok(())
    }

    /// A readable proof transcript, in element labels. Unless `all_cases` is
    /// set only the smallest neighbourhood is written out.
    pub fn transcript(&self, s: &FinSemigroup, all_cases: bool) -> String {
        let l = |x: usize| s.label(x).to_string();
        let set = |b: &Bits| format!("{{{}}}", b.iter().map(l).collect::<Vec<_>>().join(", "));
        let mut out = format!(
            "{} on {} (window {}, guard {}), limit point {}\n",
            self.instance,
            self.semigroup,
            self.window,
            self.guard,
            l(self.limit_point)
        );
        for (i, t) in self.targets.iter().enumerate() {
            match t {
                Target::ClassEscapes { open } => {
                    out += &format!("target {i}: the class of {} stays in {}\n", l(self.limit_point), set(open))
                }
                Target::IsolatedCollapse { q } => out += &format!("target {i}: isolated {} stays alone\n", l(*q)),
            }
        }
        for (i, case) in self.cases.iter().enumerate() {
            if !all_cases && i != self.primary {
                continue;
            }
            let esc = case.escape.as_ref().expect("certificates only hold escaping cases");
            out += &format!("\nV{i} = {}\n", set(&case.neighbourhood));
            for &(a, b) in &case.seeds {
                out += &format!("  seed ({}, {})\n", l(a), l(b));
            }
            let shown = esc.step.map_or(0, |k| k + 1);
            for st in &case.chain[..shown] {
                out += &format!(
                    "  pair ({}, {}) forced by multiplier {}: ({}, {})\n",
                    l(st.pair.0),
                    l(st.pair.1),
                    l(st.multiplier),
                    l(st.derived.0),
                    l(st.derived.1)
                );
            }
            if case.chain.len() > shown {
                out += &format!("  ({} further steps to the full closure)\n", case.chain.len() - shown);
            }
            let t = &self.targets[esc.target];
            match t {
                Target::ClassEscapes { .. } => {
                    out += &format!(
                        "  {} is in the class of {} but outside target {}\n",
                        l(esc.witness),
                        l(self.limit_point),
                        esc.target
                    )
                }
                Target::IsolatedCollapse { q } => {
                    out += &format!("  isolated {} is related to {}\n", l(*q), l(esc.witness))
                }
            }
        }
        if !all_cases && self.cases.len() > 1 {
            out += &format!("\n{} larger neighbourhoods escape as well\n", self.cases.len() - 1);
        }
        out
    }
}

impl NoObstruction {
    pub fn transcript(&self, s: &FinSemigroup) -> String {
        let set = |b: &Bits| format!("{{{}}}", b.iter().map(|x| s.label(x)).collect::<Vec<_>>().join(", "));
        let mut out = format!(
            "{}: no obstruction at {}; surviving neighbourhoods:\n",
            self.instance,
            s.label(self.limit_point)
        );
        for v in &self.surviving {
            out += &format!("  {}\n", set(v));
        }
        out
    }
}

/// `aS = S` for every `a`.
pub fn right_simple_check(s: &FinSemigroup) -> bool {
    let n = s.len();
    (0..n).all(|a| s.right_ideal_of(a).count() == n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// Elements in a longest chain, bottom first.
    pub chain: Vec<usize>,
    /// Set when the semilattice is a bundled truncation of an infinite
    /// chain-finite one.
    pub truncates: Option<String>,
}

impl ChainReport {
    pub fn length(&self) -> usize {
        self.chain.len()
    }
}

/// A longest chain in the natural order `x ≤ y` iff `xy = x`.
pub fn chain_finite_check(s: &FinSemigroup) -> Result<ChainReport> {
    if !s.is_semilattice() {
        return Err(Error::Domain(format!("{} is not a semilattice", s.name())));
    }
    let n = s.len();
    // Strictly above x means fewer elements above; process by descending up-set size.
    let above: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| s.mul(x, y) == x).count()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (above[x], x));
    let mut best = vec![1usize; n];
    let mut next = vec![None; n];
    for &x in &order {
        for y in 0..n {
            if y != x && s.mul(x, y) == x && best[y] + 1 > best[x] {
                best[x] = best[y] + 1;
                next[x] = Some(y);
            }
        }
    }
    let mut chain = Vec::new();
    let mut cur = (0..n).max_by_key(|&x| (best[x], std::cmp::Reverse(x)));
    while let Some(x) = cur {
        chain.push(x);
        cur = next[x];
    }
    let name = s.name();
    let truncates = (name.starts_with('T') && name.ends_with('*'))
        .then(|| "the antichain with zero on countably many atoms".to_string());
    Ok(ChainReport { chain, truncates })
}
