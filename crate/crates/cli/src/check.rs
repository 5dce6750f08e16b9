use std::path::Path;

use anyhow::{bail, Context};
use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{json, Value};

use semitop::obstruct::chain_finite_check;
use semitop::semigroup::congruence::{classify_vp_quotient, is_vagner_preston, VpQuotient};
use semitop::semigroup::{check_associativity, Associativity, SemigroupFile};
use semitop::topo::checks::{congruence_basis_check, DitopFailure, ditopological_check, weakly_ditopological_check};
use semitop::topo::semilattice::{u2_check_space, u_check_space};
use semitop::{Congruence, CongruenceKind, FinSemigroup, InverseStructure, TopSpec};

use crate::config::RunConfig;
use crate::output;
use crate::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Assoc,
    Inverse,
    Clifford,
    Vp,
    Ditop,
    WeakDitop,
    U,
    U2,
    ChainFinite,
    CongBasis,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Assoc => "assoc",
            CheckKind::Inverse => "inverse",
            CheckKind::Clifford => "clifford",
            CheckKind::Vp => "vp",
            CheckKind::Ditop => "ditop",
            CheckKind::WeakDitop => "weak-ditop",
            CheckKind::U => "u",
            CheckKind::U2 => "u2",
            CheckKind::ChainFinite => "chain-finite",
            CheckKind::CongBasis => "cong-basis",
        }
    }
}

/// A semigroup file, optionally carrying a topology and a right congruence.
#[derive(Deserialize)]
struct CheckFile {
    #[serde(flatten)]
    semigroup: SemigroupFile,
    #[serde(default)]
    topology: Option<TopSpec>,
    #[serde(default)]
    congruence: Option<Vec<usize>>,
}

struct Loaded {
    s: FinSemigroup,
    t: TopSpec,
    congruence: Option<Vec<usize>>,
}

fn load(path: &Path) -> anyhow::Result<Loaded> {
    let text = output::read_file(path)?;
    let file: CheckFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let s = file.semigroup.load()?;
    let t = match file.topology {
        Some(t) if t.len() != s.len() => bail!("topology has {} points, semigroup has {}", t.len(), s.len()),
        Some(t) => t,
        None => TopSpec::discrete(s.len()),
    };
    Ok(Loaded {
        s,
        t,
        congruence: file.congruence,
    })
}

fn inverse(s: &FinSemigroup) -> anyhow::Result<InverseStructure> {
    InverseStructure::new(s).map_err(|e| anyhow::anyhow!("{} is not inverse: {e}", s.name()))
}

fn label_set(s: &FinSemigroup, b: &semitop::Bits) -> Vec<String> {
    b.iter().map(|x| s.label(x).to_string()).collect()
}

/// Runs a check, returning whether it holds and a witness.
fn evaluate(kind: CheckKind, path: &Path) -> anyhow::Result<(String, bool, Value)> {
    if kind == CheckKind::Assoc {
        let text = output::read_file(path)?;
        let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let name = v.get("name").and_then(Value::as_str).unwrap_or("table").to_string();
        let table: Vec<Vec<usize>> =
            serde_json::from_value(v.get("table").cloned().unwrap_or(Value::Null)).context("reading \"table\"")?;
        return Ok(match check_associativity(&table)? {
            Associativity::Associative => (name, true, Value::Null),
            Associativity::Violated { a, b, c } => (name, false, json!({ "a": a, "b": b, "c": c })),
        });
    }
    let Loaded { s, t, congruence } = load(path)?;
    let name = s.name().to_string();
    let (holds, witness) = match kind {
        CheckKind::Assoc => unreachable!(),
        CheckKind::Inverse => match InverseStructure::new(&s) {
            Ok(_) => (true, Value::Null),
            Err(e) => (false, json!({ "element": s.label(e.element), "inverses": e.inverses.iter().map(|&x| s.label(x)).collect::<Vec<_>>() })),
        },
        CheckKind::Clifford => {
            let inv = inverse(&s)?;
            match inv.clifford_witness() {
                None => (true, Value::Null),
                Some(x) => (false, json!({ "element": s.label(x), "xx^-1": s.label(inv.range_idempotent(x)), "x^-1x": s.label(inv.domain_idempotent(x)) })),
            }
        }
        CheckKind::Vp => {
            let inv = inverse(&s)?;
            let rho = match congruence {
                Some(c) => Congruence::from_classes(&s, CongruenceKind::Right, &c)?,
                None => Congruence::diagonal(&s, CongruenceKind::Right),
            };
            let holds = is_vagner_preston(&inv, &rho)?;
            let shape = if holds && s.is_commutative() {
                match classify_vp_quotient(&inv, &rho) {
                    Ok(VpQuotient::Group { quotient, .. }) => json!({ "quotient": "group", "order": quotient.len() }),
                    Ok(VpQuotient::GroupWithZero { quotient, .. }) => {
                        json!({ "quotient": "group_with_zero", "order": quotient.len() })
                    }
                    Err(e) => json!({ "quotient": Value::Null, "note": e.to_string() }),
                }
            } else {
                Value::Null
            };
            (holds, shape)
        }
        CheckKind::Ditop | CheckKind::WeakDitop => {
            let inv = inverse(&s)?;
            let f = if kind == CheckKind::Ditop {
                ditopological_check(&inv, &t)?
            } else {
                weakly_ditopological_check(&inv, &t)?
            };
            let witness = match f {
                None => Value::Null,
                Some(DitopFailure::Inversion { x }) => json!({ "failure": "inversion", "point": s.label(x) }),
                Some(DitopFailure::Neighbourhood { x, open, escaping }) => json!({
                    "failure": "neighbourhood",
                    "point": s.label(x),
                    "open": label_set(&s, &open),
                    "escaping": s.label(escaping),
                }),
            };
            (witness.is_null(), witness)
        }
        CheckKind::U | CheckKind::U2 => {
            let first = if kind == CheckKind::U {
                u_check_space(&s, &t)?.first_failure()
            } else {
                u2_check_space(&s, &t)?.first_failure()
            };
            (first.is_none(), first.map_or(Value::Null, |x| json!({ "point": s.label(x) })))
        }
        CheckKind::ChainFinite => {
            let r = chain_finite_check(&s)?;
            let chain: Vec<&str> = r.chain.iter().map(|&x| s.label(x)).collect();
            (true, json!({ "longest_chain": r.length(), "chain": chain, "truncates": r.truncates }))
        }
        CheckKind::CongBasis => match congruence_basis_check(&s, &t)? {
            None => (true, Value::Null),
            Some(f) => (
                false,
                json!({
                    "point": s.label(f.x),
                    "open": label_set(&s, &f.open),
                    "class": label_set(&s, &f.class),
                    "escaping": s.label(f.escaping),
                }),
            ),
        },
    };
    Ok((name, holds, witness))
}

pub fn cmd_check(cfg: &RunConfig, kind: CheckKind, path: &Path) -> anyhow::Result<Outcome> {
    let (name, holds, witness) = evaluate(kind, path)?;
    if cfg.json() {
        let report = json!({ "schema": 1, "check": kind.name(), "subject": name, "holds": holds, "witness": witness });
        println!("{}", output::to_json(&report));
    } else {
        println!("{} {}: {}", kind.name(), name, output::verdict(holds));
        if !witness.is_null() {
            println!("  witness: {witness}");
        }
    }
    Ok(if holds { Outcome::Holds } else { Outcome::Fails })
}
