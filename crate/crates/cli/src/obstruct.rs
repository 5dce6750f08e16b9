use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde_json::json;

use semitop::obstruct::{self, catalog, InstanceFile, RsGroup, Verdict};

use crate::config::RunConfig;
use crate::output;
use crate::Outcome;

pub fn cmd_catalog(cfg: &RunConfig, id: Option<&str>) -> anyhow::Result<Outcome> {
    let mut fams = catalog::catalog();
    if let Some(id) = id {
        fams.retain(|f| f.id == id);
        if fams.is_empty() {
            bail!("unknown instance {id}");
        }
    }
    if cfg.json() {
        let listing = json!({
            "schema": 1,
            "default_window": catalog::DEFAULT_WINDOW,
            "default_guard": catalog::default_guard(catalog::DEFAULT_WINDOW),
            "families": fams,
        });
        println!("{}", output::to_json(&listing));
    } else {
        for f in &fams {
            println!("{:<18} {}", f.id, f.summary);
            println!("{:<18} escape: {}", "", f.target);
        }
        if cfg.verbosity > 0 {
            println!("\neach id also has a `-discrete` control; right_simple_zero takes --group Z2|R2|S3");
        }
    }
    Ok(Outcome::Holds)
}

fn load_instance(cfg: &RunConfig, arg: &str, group: &str) -> anyhow::Result<catalog::Instance> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        let text = output::read_file(path)?;
        let file: InstanceFile = serde_json::from_str(&text).with_context(|| format!("parsing {arg}"))?;
        return Ok(file.load()?);
    }
    let g: RsGroup = group.parse()?;
    Ok(catalog::instance(arg, cfg.window, cfg.guard, g)?)
}

pub fn cmd_obstruct(cfg: &RunConfig, arg: &str, group: &str, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let inst = load_instance(cfg, arg, group)?;
    let pres = &inst.presentation;
    let verdict = obstruct::certify(&inst)?;
    if let Some(c) = verdict.certificate() {
        c.replay(pres).context("certificate failed its own replay")?;
    }
    let text = verdict.to_json();
    let default_out = PathBuf::from(format!("{}-w{}.json", pres.id, pres.window));
    let out = out.unwrap_or(&default_out);
    if out != Path::new("-") {
        output::write_file(out, &text)?;
    }
    if cfg.json() {
        println!("{text}");
    } else {
        match &verdict {
            Verdict::Obstruction(c) => {
                print!("{}", c.transcript(&pres.base, cfg.verbosity > 0));
                println!("\n{} obstruction certified", output::verdict(true));
            }
            Verdict::NoObstruction(n) => {
                print!("{}", n.transcript(&pres.base));
                println!("{} no obstruction", output::verdict(false));
            }
        }
        if out != Path::new("-") {
            println!("wrote {}", out.display());
        }
    }
    Ok(if verdict.is_obstruction() {
        Outcome::Holds
    } else {
        Outcome::Fails
    })
}
