//! `key = value` configuration files.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub oracle_range: Option<u32>,
    pub table_path: Option<PathBuf>,
    pub precision: Option<u32>,
    pub out_dir: Option<PathBuf>,
}

impl Config {
    /// Parse `key = value` lines. Blank lines and `#` comments are skipped;
    /// relative paths are taken relative to `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Config> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key = value, found {raw:?}", n + 1);
            };
            let (key, value) = (key.trim(), value.trim().trim_matches('"'));
            let number = || value.parse::<u32>().with_context(|| format!("line {}: {key} must be a non-negative integer", n + 1));
            match key {
                "oracle_range" => c.oracle_range = Some(number()?),
                "precision" => c.precision = Some(number()?),
                "table_path" => c.table_path = Some(base.join(value)),
                "out_dir" => c.out_dir = Some(base.join(value)),
                _ => bail!("line {}: unknown key {key:?}", n + 1),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Config::parse(&text, base).with_context(|| format!("in config {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys() {
        let c = Config::parse("# defaults\noracle_range = 12\nprecision=4\ntable_path = knots.json # extra\n", Path::new("/etc"))
            .unwrap();
        assert_eq!(c.oracle_range, Some(12));
        assert_eq!(c.precision, Some(4));
        assert_eq!(c.table_path, Some(PathBuf::from("/etc/knots.json")));
        assert_eq!(c.out_dir, None);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Config::parse("oracle_range 12", Path::new(".")).is_err());
        assert!(Config::parse("colour = red", Path::new(".")).is_err());
        assert!(Config::parse("precision = -1", Path::new(".")).is_err());
    }
}
