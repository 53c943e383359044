use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "QMODULAR_CONFIG";
/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "QMODULAR_CACHE_DIR";

/// Defaults for the workbench. Every field can be overridden by a flag.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub order: usize,
    /// Decimal digits.
    pub precision: u32,
    pub tolerance: f64,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: 200,
            precision: 60,
            tolerance: 1e-8,
            cache_dir: None,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Loads `explicit`, else `$QMODULAR_CONFIG`, else the per-user config
    /// file if it exists, else the defaults. A path that was asked for by
    /// name must exist.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        if let Some(p) = explicit {
            return Self::from_file(p);
        }
        if let Some(p) = env::var_os(CONFIG_ENV) {
            return Self::from_file(Path::new(&p));
        }
        match default_config_path() {
            Some(p) if p.is_file() => Self::from_file(&p),
            _ => Ok(Config::default()),
        }
    }

    /// `$QMODULAR_CACHE_DIR`, then the config value, then the per-user cache
    /// directory.
    pub fn resolved_cache_dir(&self) -> Option<PathBuf> {
        env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .or_else(|| self.cache_dir.clone())
            .or_else(|| user_dir("XDG_CACHE_HOME", ".cache"))
    }
}

fn user_dir(xdg: &str, fallback: &str) -> Option<PathBuf> {
    env::var_os(xdg)
        .map(PathBuf::from)
        .or_else(|| env::var_os("HOME").map(|h| PathBuf::from(h).join(fallback)))
        .map(|p| p.join("qmodular"))
}

pub fn default_config_path() -> Option<PathBuf> {
    user_dir("XDG_CONFIG_HOME", ".config").map(|p| p.join("config.toml"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file() {
        let c = Config::from_toml("order = 50\ncache_dir = \"/tmp/x\"").unwrap();
        assert_eq!(c.order, 50);
        assert_eq!(c.precision, 60);
        assert_eq!(c.cache_dir, Some(PathBuf::from("/tmp/x")));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::from_toml("ordr = 5").is_err());
    }
}
