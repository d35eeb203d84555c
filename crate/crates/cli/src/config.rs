//! Plain-text `key = value` configuration files. Flags given on the command
//! line always win over values read here.

use std::collections::BTreeMap;
use std::path::Path;

pub const KNOWN_KEYS: [&str; 10] = ["p", "q", "e", "r", "a", "n", "content", "out", "cap", "seed"];

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value, got {line:?}", lineno + 1))?;
            let key = k.trim().trim_start_matches("--").to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(format!("config line {}: unknown key {key:?}", lineno + 1));
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `flag` if given, else the parsed config value.
    pub fn merge<T>(&self, flag: Option<T>, key: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Option<T>, String> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key).map(|s| parse(s).map_err(|e| format!("config key {key}: {e}"))).transpose(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_prefixed_keys() {
        let c = ConfigFile::parse("# instance A\np = 7\n--q=2\n\na = 0,1\n").unwrap();
        assert_eq!(c.get("p"), Some("7"));
        assert_eq!(c.get("q"), Some("2"));
        assert_eq!(c.get("a"), Some("0,1"));
        assert_eq!(c.get("n"), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bare_words() {
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("p").is_err());
    }

    #[test]
    fn flags_override_config() {
        let c = ConfigFile::parse("n = 2").unwrap();
        let parse = |s: &str| s.parse::<usize>().map_err(|e| e.to_string());
        assert_eq!(c.merge(Some(3), "n", parse).unwrap(), Some(3));
        assert_eq!(c.merge(None, "n", parse).unwrap(), Some(2));
        assert_eq!(c.merge(None, "p", parse).unwrap(), None);
    }
}
