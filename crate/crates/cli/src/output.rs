use std::path::Path;

use anyhow::Context;
use serde::Serialize;

/// ANSI colour only when `SEMITOP_COLOR` asks for it, so output stays byte-stable by default.
pub fn color_enabled() -> bool {
    matches!(
        std::env::var("SEMITOP_COLOR").as_deref(),
        Ok("1") | Ok("true") | Ok("always") | Ok("on")
    )
}

pub fn verdict(ok: bool) -> String {
    let word = if ok { "PASS" } else { "FAIL" };
    if color_enabled() {
        let code = if ok { 32 } else { 31 };
        format!("\x1b[{code}m{word}\x1b[0m")
    } else {
        word.to_string()
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

pub fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}
