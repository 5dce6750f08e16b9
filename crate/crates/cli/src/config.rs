use anyhow::bail;
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub window: usize,
    pub guard: usize,
    pub format: Format,
    pub verbosity: u8,
}

impl Default for RunConfig {
    fn default() -> Self {
        let window = semitop::obstruct::catalog::DEFAULT_WINDOW;
        RunConfig {
            window,
            guard: semitop::obstruct::catalog::default_guard(window),
            format: Format::Text,
            verbosity: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.window < 4 {
            bail!("window must be at least 4, got {}", self.window);
        }
        if self.guard >= self.window {
            bail!("guard {} must be below window {}", self.guard, self.window);
        }
        Ok(())
    }

    pub fn json(&self) -> bool {
        self.format == Format::Json
    }
}
