use eigenmonad::Field;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("unknown key {0}")]
    UnknownKey(String),
    #[error("{key}: {value} is not a non-negative integer")]
    NotInteger { key: String, value: String },
    #[error("invalid JSON config: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{key} = {value} outside {lo}..={hi}")]
    OutOfRange { key: &'static str, value: usize, lo: usize, hi: usize },
    #[error("field {0} is neither 0 nor a prime")]
    BadField(u64),
    #[error("unknown field {0:?}; use q, 0 or a prime")]
    FieldSyntax(String),
}

/// Bounds shared by every suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub max_n: usize,
    pub max_m: usize,
    pub max_d: usize,
    #[serde(rename = "magnus_D")]
    pub magnus_d: usize,
    pub word_len_bound: usize,
    pub conjugator_bound: usize,
    /// 0 for ℚ, otherwise a prime.
    pub field: u64,
    pub intermediate_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 3,
            max_m: 3,
            max_d: 3,
            magnus_d: 3,
            word_len_bound: 3,
            conjugator_bound: 4,
            field: 0,
            intermediate_cap: 8,
        }
    }
}

/// Parses `q`, `0` or a prime.
pub fn parse_field(s: &str) -> Result<u64, ConfigError> {
    let code = match s.trim() {
        "q" | "Q" | "0" => 0,
        t => t.parse().map_err(|_| ConfigError::FieldSyntax(s.into()))?,
    };
    Field::from_code(code).map(Field::code).ok_or(ConfigError::BadField(code))
}

impl Config {
    /// JSON when the text starts with `{`, otherwise `key=value` lines with `#` comments.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        if text.trim_start().starts_with('{') {
            let c: Config = serde_json::from_str(text)?;
            c.validate()?;
            return Ok(c);
        }
        let mut kv = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut c = Config::default();
        for (k, v) in kv {
            if k == "field" {
                c.field = parse_field(&v)?;
                continue;
            }
            let x: usize = v.parse().map_err(|_| ConfigError::NotInteger { key: k.clone(), value: v.clone() })?;
            match k.as_str() {
                "max_n" => c.max_n = x,
                "max_m" => c.max_m = x,
                "max_d" => c.max_d = x,
                "magnus_D" | "magnus_d" => c.magnus_d = x,
                "word_len_bound" => c.word_len_bound = x,
                "conjugator_bound" => c.conjugator_bound = x,
                "intermediate_cap" => c.intermediate_cap = x,
                _ => return Err(ConfigError::UnknownKey(k)),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &str) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.into(), source })?;
        Config::parse(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let check = |key, value, lo, hi| {
            if (lo..=hi).contains(&value) {
                Ok(())
            } else {
                Err(ConfigError::OutOfRange { key, value, lo, hi })
            }
        };
        check("max_n", self.max_n, 1, 4)?;
        check("max_m", self.max_m, 1, 4)?;
        check("max_d", self.max_d, 1, 4)?;
        check("magnus_D", self.magnus_d, self.max_d, 5)?;
        check("word_len_bound", self.word_len_bound, 1, 6)?;
        check("conjugator_bound", self.conjugator_bound, 0, 8)?;
        check("intermediate_cap", self.intermediate_cap, self.max_n.max(self.max_m) + 1, 10)?;
        Field::from_code(self.field).ok_or(ConfigError::BadField(self.field))?;
        Ok(())
    }

    pub fn field(&self) -> Field {
        Field::from_code(self.field).expect("validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_value_and_json_agree() {
        let a = Config::parse("max_n = 2\n# comment\nmagnus_D=4\nfield=q\n").unwrap();
        let b = Config::parse(r#"{"max_n": 2, "magnus_D": 4}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.max_m, 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Config::parse("max_n=9"), Err(ConfigError::OutOfRange { key: "max_n", .. })));
        assert!(matches!(Config::parse("field=4"), Err(ConfigError::BadField(4))));
        assert!(matches!(Config::parse("colour=3"), Err(ConfigError::UnknownKey(_))));
        assert!(matches!(Config::parse("max_n"), Err(ConfigError::Syntax { line: 1 })));
        assert!(Config::parse(r#"{"bogus": 1}"#).is_err());
        assert!(matches!(Config::parse("max_d=4\nmagnus_D=3"), Err(ConfigError::OutOfRange { key: "magnus_D", .. })));
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("q").unwrap(), 0);
        assert_eq!(parse_field("7").unwrap(), 7);
        assert!(parse_field("x").is_err());
        assert_eq!(Config::parse("field=2").unwrap().field(), Field::Prime(2));
    }
}
