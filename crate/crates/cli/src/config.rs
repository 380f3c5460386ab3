//! `key=value` configuration files.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("cannot read {path}: {reason}")]
    Unreadable { path: String, reason: String },
    #[error("line {line}: expected key=value, got '{text}'")]
    MalformedLine { line: usize, text: String },
}

/// Parses `key=value` lines. Blank lines and lines starting with `#` are
/// skipped; a later key replaces an earlier one.
pub fn parse_config_str(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((key, value)) if !key.trim().is_empty() => {
                map.insert(key.trim().to_string(), value.trim().to_string());
            }
            _ => return Err(ConfigError::MalformedLine { line: index + 1, text: raw.to_string() }),
        }
    }
    Ok(map)
}

pub fn parse_config(path: &Path) -> Result<BTreeMap<String, String>, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::Unreadable { path: path.display().to_string(), reason: e.to_string() })?;
    parse_config_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_key() {
        let m = parse_config_str("rel_tol=1e-12").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m["rel_tol"], "1e-12");
    }

    #[test]
    fn comments_and_blanks_only() {
        assert!(parse_config_str("# comment\n\n   # another\n").unwrap().is_empty());
    }

    #[test]
    fn last_duplicate_wins() {
        let m = parse_config_str("tol=1e-8\nseed = 3\ntol=1e-9\n").unwrap();
        assert_eq!(m["tol"], "1e-9");
        assert_eq!(m["seed"], "3");
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let e = parse_config_str("tol=1\n# ok\nnonsense\n").unwrap_err();
        assert_eq!(e, ConfigError::MalformedLine { line: 3, text: "nonsense".into() });
        assert!(matches!(parse_config_str("=3"), Err(ConfigError::MalformedLine { line: 1, .. })));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(parse_config(Path::new("/nonexistent/hlz.conf")), Err(ConfigError::Unreadable { .. })));
    }
}
