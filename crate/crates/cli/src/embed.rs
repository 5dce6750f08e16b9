use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{json, Value};

use semitop::embed::{self, Adjoin, RepresentationMap, TargetSpace};
use semitop::semigroup::SemigroupFile;
use semitop::transforms::open::{Atom, BasicOpen};
use semitop::transforms::Transformation;
use semitop::{FinSemigroup, InverseStructure, TopSpec};

use crate::config::RunConfig;
use crate::output;
use crate::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmbedKind {
    Cayley,
    Wp,
    Product,
    Adjoin,
    Embcl,
    CliffordProduct,
    GroupRestrict,
}

impl EmbedKind {
    fn name(self) -> &'static str {
        match self {
            EmbedKind::Cayley => "cayley",
            EmbedKind::Wp => "wp",
            EmbedKind::Product => "product",
            EmbedKind::Adjoin => "adjoin",
            EmbedKind::Embcl => "embcl",
            EmbedKind::CliffordProduct => "clifford-product",
            EmbedKind::GroupRestrict => "group-restrict",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AdjoinWhat {
    Zero,
    Identity,
}

#[derive(Deserialize)]
struct SourceFile {
    #[serde(flatten)]
    semigroup: SemigroupFile,
    #[serde(default)]
    topology: Option<TopSpec>,
}

#[derive(Deserialize)]
struct GroupFile {
    transformations: Vec<Vec<usize>>,
}

fn load_source(path: &Path) -> anyhow::Result<(FinSemigroup, Option<TopSpec>)> {
    let text = output::read_file(path)?;
    let f: SourceFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let s = f.semigroup.load().with_context(|| format!("loading {}", path.display()))?;
    Ok((s, f.topology))
}

fn single(files: &[PathBuf], kind: EmbedKind) -> anyhow::Result<&Path> {
    match files {
        [f] => Ok(f),
        _ => bail!("{} takes exactly one file", kind.name()),
    }
}

fn inverse(s: &FinSemigroup) -> anyhow::Result<InverseStructure> {
    InverseStructure::new(s).map_err(|e| anyhow::anyhow!("{} is not inverse: {e}", s.name()))
}

/// Point opens on `[0, w)`: `{g : (x)g = y}`, plus the domain and image atoms for I_ℕ.
fn point_opens(target: TargetSpace, w: u64) -> Vec<BasicOpen> {
    let mut out = Vec::new();
    for x in 0..w {
        for y in 0..w {
            out.push(match target {
                TargetSpace::In => BasicOpen::In {
                    atoms: vec![Atom::Maps { x, y }],
                },
                _ => BasicOpen::Nn { graph: vec![(x, y)] },
            });
        }
        if target == TargetSpace::In {
            out.push(BasicOpen::not_in_dom(x));
            out.push(BasicOpen::not_in_im(x));
        }
    }
    out
}

fn build(kind: EmbedKind, files: &[PathBuf], with: AdjoinWhat) -> anyhow::Result<(RepresentationMap, Option<TopSpec>, Value)> {
    let mut extra = Value::Null;
    let (map, topology) = match kind {
        EmbedKind::Cayley => {
            let (s, t) = load_source(single(files, kind)?)?;
            (embed::cayley_right_regular(&s)?, t)
        }
        EmbedKind::Wp => {
            let (s, t) = load_source(single(files, kind)?)?;
            (embed::wagner_preston(&inverse(&s)?)?, t)
        }
        EmbedKind::Product => {
            if files.len() < 2 {
                bail!("product needs at least two files");
            }
            let factors = files
                .iter()
                .map(|f| Ok(embed::cayley_right_regular(&load_source(f)?.0)?))
                .collect::<anyhow::Result<Vec<_>>>()?;
            (embed::product_embed(&factors)?, None)
        }
        EmbedKind::Adjoin => {
            let (s, _) = load_source(single(files, kind)?)?;
            let which = match with {
                AdjoinWhat::Zero => Adjoin::Zero,
                AdjoinWhat::Identity => Adjoin::Identity,
            };
            (embed::adjoin_embed(&embed::cayley_right_regular(&s)?, which)?, None)
        }
        EmbedKind::Embcl => {
            let (s, t) = load_source(single(files, kind)?)?;
            let wp = embed::wagner_preston(&inverse(&s)?)?;
            (embed::embcl_lift(&wp)?, t)
        }
        EmbedKind::CliffordProduct => {
            let (s, t) = load_source(single(files, kind)?)?;
            let d = embed::clifford_decompose(&inverse(&s)?)?;
            let top = t.clone().unwrap_or_else(|| TopSpec::discrete(s.len()));
            (embed::clifford_product_embed(&d, &top)?, t)
        }
        EmbedKind::GroupRestrict => {
            let path = single(files, kind)?;
            let g: GroupFile = serde_json::from_str(&output::read_file(path)?)
                .with_context(|| format!("parsing {}", path.display()))?;
            let elems = g
                .transformations
                .into_iter()
                .map(Transformation::new)
                .collect::<Result<Vec<_>, _>>()?;
            let r = embed::group_restriction(&elems)?;
            let laws = embed::subgroup_laws(&elems)?;
            extra = json!({ "identity": r.identity, "support": r.support, "laws_hold": laws.all_hold(), "laws": laws });
            (r.map, None)
        }
    };
    Ok((map, topology, extra))
}

pub fn cmd_embed(cfg: &RunConfig, kind: EmbedKind, files: &[PathBuf], with: AdjoinWhat, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let (map, topology, extra) = build(kind, files, with)?;
    let n = map.source().len();
    let report = match map.target() {
        TargetSpace::Finite => None,
        target => {
            let t = topology.unwrap_or_else(|| TopSpec::discrete(n));
            let opens = point_opens(target, map.window() as u64);
            Some(embed::verify_embedding(&map, &t, &opens)?)
        }
    };
    let passed = report.as_ref().is_none_or(|r| r.passed())
        && extra.get("laws_hold").and_then(Value::as_bool).unwrap_or(true);
    let file = map.to_file();
    if let Some(out) = out {
        output::write_file(out, &output::to_json(&file))?;
    }
    if cfg.json() {
        let body = json!({
            "schema": 1,
            "embedding": kind.name(),
            "source": map.source().name(),
            "elements": n,
            "pairs_checked": n * n,
            "passed": passed,
            "topology": report,
            "group": extra,
            "map": file,
        });
        println!("{}", output::to_json(&body));
    } else {
        println!(
            "{} {}: {} elements into {}, window {}",
            kind.name(),
            map.source().name(),
            n,
            match map.target() {
                TargetSpace::Nn => "N^N",
                TargetSpace::In => "I_N",
                TargetSpace::Finite => "a finite semigroup",
            },
            map.window()
        );
        println!("  homomorphism on all {} pairs: {}", n * n, output::verdict(true));
        println!("  injective: {}", output::verdict(true));
        if let Some(r) = &report {
            for (item, ok) in r.items().into_iter().skip(2) {
                println!("  {item}: {}", output::verdict(ok));
            }
        }
        if !extra.is_null() {
            println!("  subgroup laws: {}", output::verdict(extra["laws_hold"].as_bool().unwrap_or(false)));
        }
        if cfg.verbosity > 0 {
            for (a, img) in map.images().iter().enumerate() {
                println!("  {} -> {}", map.source().label(a), serde_json::to_string(img)?);
            }
        }
        if let Some(out) = out {
            println!("wrote {}", out.display());
        }
    }
    Ok(if passed { Outcome::Holds } else { Outcome::Fails })
}
