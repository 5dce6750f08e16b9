//! Bundled truncations of the countable counterexamples.
//!
//! Each family is built at a chosen window `w` with guard `c < w`. The id
//! `<family>-discrete` gives the control: same semigroup, discrete topology,
//! and a neighbourhood family that ends in `{p}`.

use serde::{Deserialize, Serialize};

use super::Target;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::builders::{self, sign_index};
use crate::semigroup::FinSemigroup;
use crate::topo::presentation::PresentationFile;
use crate::topo::{LimitPoint, TopSpec, TruncatedPresentation};
use crate::transforms::PartialPerm;

pub const DEFAULT_WINDOW: usize = 6;

pub fn default_guard(window: usize) -> usize {
    window.saturating_sub(2)
}

/// Right simple semigroups available for the zero-adjoined family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum RsGroup {
    #[default]
    Z2,
    R2,
    S3,
}

impl RsGroup {
    pub const ALL: [RsGroup; 3] = [RsGroup::Z2, RsGroup::R2, RsGroup::S3];

    pub fn semigroup(self) -> FinSemigroup {
        match self {
            RsGroup::Z2 => builders::cyclic_group(2),
            RsGroup::R2 => builders::right_zero(2),
            RsGroup::S3 => builders::symmetric_group(3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RsGroup::Z2 => "Z2",
            RsGroup::R2 => "R2",
            RsGroup::S3 => "S3",
        }
    }
}

impl std::str::FromStr for RsGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z2" | "z2" => Ok(RsGroup::Z2),
            "R2" | "r2" => Ok(RsGroup::R2),
            "S3" | "s3" => Ok(RsGroup::S3),
            _ => Err(Error::Invalid(format!("unknown semigroup {s}; expected Z2, R2 or S3"))),
        }
    }
}

/// A catalog family, with a one-line description for listings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Family {
    pub id: &'static str,
    pub summary: &'static str,
    pub target: &'static str,
}

/// The five bundled families, in a fixed order.
pub fn catalog() -> Vec<Family> {
    vec![
        Family {
            id: "exB",
            summary: "T x {1,-1}, T the antichain with zero; (0,1) is a limit of (x_i,1)",
            target: "isolated (0,-1) is forced into a non-singleton class",
        },
        Family {
            id: "odd_chain",
            summary: "{0} u {1/(k+1)} under min; 0 is a limit of the odd reciprocals 1/(2n+1)",
            target: "the class of 0 escapes the odd-reciprocal neighbourhood U_1",
        },
        Family {
            id: "right_simple_zero",
            summary: "S^0 for a right simple S (Z2, R2 or S3) with 0 not isolated",
            target: "an isolated point of S is forced into the class of 0",
        },
        Family {
            id: "brandt",
            summary: "rank <= 1 partial bijections; the empty map is a limit of {(n,n)}",
            target: "the class of the empty map escapes the idempotents",
        },
        Family {
            id: "luke",
            summary: "rank <= 1 partial bijections with the subspace topology of I_N",
            target: "the class of the empty map escapes {f : 0 not in im f}",
        },
    ]
}

/// A presentation together with what the forcing engine should look for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub presentation: TruncatedPresentation,
    pub targets: Vec<Target>,
    pub group: Option<RsGroup>,
}

impl Instance {
    pub fn limit_point(&self) -> usize {
        self.presentation.limit_points[0].point
    }
}

/// Builds a catalog instance; `id` may carry the `-discrete` suffix.
pub fn instance(id: &str, window: usize, guard: usize, group: RsGroup) -> Result<Instance> {
    let (family, control) = match id.strip_suffix("-discrete") {
        Some(f) => (f, true),
        None => (id, false),
    };
    if guard >= window {
        return Err(Error::Invalid(format!("guard {guard} must be below window {window}")));
    }
    let mut inst = match family {
        "exB" => ex_b(window, guard)?,
        "odd_chain" => odd_chain(window, guard)?,
        "right_simple_zero" => right_simple_zero(group, window, guard)?,
        "brandt" => brandt(window, guard)?,
        "luke" => luke(window, guard)?,
        _ => return Err(Error::UnknownInstance(id.to_string())),
    };
    if control {
        inst = discrete_control(inst);
    }
    inst.presentation.validate()?;
    Ok(inst)
}

pub fn default_instance(id: &str) -> Result<Instance> {
    instance(id, DEFAULT_WINDOW, default_guard(DEFAULT_WINDOW), RsGroup::Z2)
}

fn discrete_control(mut inst: Instance) -> Instance {
    let p = &mut inst.presentation;
    let n = p.base.len();
    p.id = format!("{}-discrete", p.id);
    p.topology = TopSpec::discrete(n);
    p.core = Bits::full(n);
    p.discrete_control = true;
    for lp in &mut p.limit_points {
        let single = Bits::singleton(n, lp.point);
        if lp.family.last() != Some(&single) {
            lp.family.push(single);
        }
    }
    inst
}

#[allow(clippy::too_many_arguments)]
fn finish(
    id: &str,
    base: FinSemigroup,
    window: usize,
    guard: usize,
    lp: LimitPoint,
    topology: Option<TopSpec>,
    core: Bits,
    targets: Vec<Target>,
    group: Option<RsGroup>,
) -> Result<Instance> {
    let lps = vec![lp];
    let topology = match topology {
        Some(t) => t,
        None => TruncatedPresentation::derived_topology(base.len(), &lps)?,
    };
    Ok(Instance {
        presentation: TruncatedPresentation {
            id: id.to_string(),
            base,
            window,
            guard,
            limit_points: lps,
            topology,
            core,
            discrete_control: false,
        },
        targets,
        group,
    })
}

/// `T × {1,-1}` with `U_k = {(0,1)} ∪ {(x_i,1) : k ≤ i < w}`.
pub fn ex_b(w: usize, c: usize) -> Result<Instance> {
    let s = builders::sign_product(w);
    let n = s.len();
    let family = (0..=c)
        .map(|k| Bits::from_indices(n, std::iter::once(0).chain((k..w).map(|i| sign_index(i + 1, false)))))
        .collect();
    let core = Bits::from_indices(
        n,
        [0, 1].into_iter().chain((0..c).flat_map(|i| [sign_index(i + 1, false), sign_index(i + 1, true)])),
    );
    let q = sign_index(0, true);
    finish(
        "exB",
        s,
        w,
        c,
        LimitPoint { point: 0, family },
        None,
        core,
        vec![Target::IsolatedCollapse { q }],
        None,
    )
}

/// `{0} ∪ {1/(k+1)}` under min, with `U_m = {0} ∪ {1/(k+1) : k even, 2m ≤ k}`.
pub fn odd_chain(w: usize, c: usize) -> Result<Instance> {
    if c < 2 {
        return Err(Error::Invalid("odd_chain needs guard >= 2 so that U_1 is admissible".into()));
    }
    let s = builders::reciprocal_chain(w);
    let n = s.len();
    let u = |m: usize| Bits::from_indices(n, std::iter::once(0).chain((2 * m..w).filter(|k| k % 2 == 0).map(|k| k + 1)));
    let family: Vec<Bits> = (0..=c / 2).map(u).collect();
    let core = Bits::from_indices(n, std::iter::once(0).chain((0..c).map(|k| k + 1)));
    let target = Target::ClassEscapes { open: u(1) };
    finish("odd_chain", s, w, c, LimitPoint { point: 0, family }, None, core, vec![target], None)
}

/// `S⁰` with `N(0) = S⁰` and the points of `S` isolated.
pub fn right_simple_zero(g: RsGroup, w: usize, c: usize) -> Result<Instance> {
    let base = g.semigroup();
    if !super::right_simple_check(&base) {
        return Err(Error::TheoremViolation(format!("{} is not right simple", base.name())));
    }
    let s = base.adjoin_zero();
    let n = s.len();
    let zero = n - 1;
    let lp = LimitPoint {
        point: zero,
        family: vec![Bits::full(n)],
    };
    finish(
        "right_simple_zero",
        s,
        w,
        c,
        lp,
        None,
        Bits::full(n),
        vec![Target::IsolatedCollapse { q: 0 }],
        Some(g),
    )
}

fn rank_one_index(w: usize, i: usize, j: usize) -> usize {
    1 + i * w + j
}

/// Rank ≤ 1 partial bijections with `U_k = {∅} ∪ {{(n,n)} : k ≤ n < w}`.
pub fn brandt(w: usize, c: usize) -> Result<Instance> {
    let s = builders::brandt(w);
    let n = s.len();
    let family = (0..=c)
        .map(|k| Bits::from_indices(n, std::iter::once(0).chain((k..w).map(|m| rank_one_index(w, m, m)))))
        .collect::<Vec<_>>();
    let core = Bits::from_indices(
        n,
        std::iter::once(0).chain((0..c).flat_map(|i| (0..c).map(move |j| rank_one_index(w, i, j)))),
    );
    let idempotents = s.idempotents();
    finish(
        "brandt",
        s,
        w,
        c,
        LimitPoint { point: 0, family },
        None,
        core,
        vec![Target::ClassEscapes { open: idempotents }],
        None,
    )
}

/// Rank ≤ 1 partial bijections with the topology generated by `U_{x,y}`,
/// `W_x` and `W_x⁻¹` for `x, y < c`. `V_k` forbids `[0, k)` from domain and image.
pub fn luke(w: usize, c: usize) -> Result<Instance> {
    if c < 1 {
        return Err(Error::Invalid("luke needs guard >= 1".into()));
    }
    let maps = builders::rank_one_maps(w);
    let s = builders::brandt(w).renamed(format!("luke{w}"));
    let n = s.len();
    let select = |f: &dyn Fn(&PartialPerm) -> bool| Bits::from_indices(n, (0..n).filter(|&i| f(&maps[i])));
    let mut subbasis = Vec::new();
    for x in 0..c {
        for y in 0..c {
            subbasis.push(select(&|g| g.apply(x) == Some(y)));
        }
        subbasis.push(select(&|g| g.apply(x).is_none()));
        subbasis.push(select(&|g| !g.im().contains(x)));
    }
    let topology = TopSpec::generated(n, &subbasis)?;
    let avoids = |k: usize| select(&|g| (0..k).all(|x| g.apply(x).is_none() && !g.im().contains(x)));
    let family = (0..=c).map(avoids).collect();
    let core = select(&|g| g.pairs().iter().all(|&(x, y)| x < c && y < c));
    let target = Target::ClassEscapes {
        open: select(&|g| !g.im().contains(0)),
    };
    finish(
        "luke",
        s,
        w,
        c,
        LimitPoint { point: 0, family },
        Some(topology),
        core,
        vec![target],
        None,
    )
}

/// Every catalog instance at one window: the five families (all three
/// zero-adjoined variants) followed by their discrete controls.
pub fn all_instances(window: usize, guard: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for control in [false, true] {
        for fam in catalog() {
            let id = if control {
                format!("{}-discrete", fam.id)
            } else {
                fam.id.to_string()
            };
            if fam.id == "right_simple_zero" {
                for g in RsGroup::ALL {
                    out.push(instance(&id, window, guard, g)?);
                }
            } else {
                out.push(instance(&id, window, guard, RsGroup::Z2)?);
            }
        }
    }
    Ok(out)
}

/// On-disk instance: a presentation plus its targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(flatten)]
    pub presentation: PresentationFile,
    pub targets: Vec<Target>,
}

impl From<&Instance> for InstanceFile {
    fn from(i: &Instance) -> Self {
        InstanceFile {
            presentation: PresentationFile::from(&i.presentation),
            targets: i.targets.clone(),
        }
    }
}

impl InstanceFile {
    pub fn load(&self) -> Result<Instance> {
        let presentation = self.presentation.load()?;
        let n = presentation.base.len();
        let targets = self
            .targets
            .iter()
            .map(|t| match t {
                Target::ClassEscapes { open } => open
                    .with_universe(n)
                    .map(|open| Target::ClassEscapes { open })
                    .ok_or_else(|| Error::Invalid("target set outside the carrier".into())),
                t => Ok(t.clone()),
            })
            .collect::<Result<_>>()?;
        Ok(Instance {
            presentation,
            targets,
            group: None,
        })
    }
}
