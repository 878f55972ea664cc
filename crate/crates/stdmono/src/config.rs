//! Run configuration: a `key = value` text file mirroring the command-line
//! flags, overridden by flags given on the command line.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use stdmono_core::sections::sampling::SamplePlan;
use stdmono_core::tableaux::Shape;
use stdmono_core::weyl::{longest_word, Permutation, Word};

use crate::error::{CliError, Result};

/// How many sample points the randomised oracles draw.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplePolicy {
    /// `dim V_m + 25`.
    #[default]
    Auto,
    Fixed(usize),
}

impl FromStr for SamplePolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "auto" => Ok(SamplePolicy::Auto),
            other => other
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .map(SamplePolicy::Fixed)
                .ok_or_else(|| format!("expected 'auto' or a positive count, got '{other}'")),
        }
    }
}

impl fmt::Display for SamplePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplePolicy::Auto => f.write_str("auto"),
            SamplePolicy::Fixed(n) => write!(f, "{n}"),
        }
    }
}

/// Raw settings; every field is optional until a command asks for it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub word: Option<String>,
    pub j: Option<String>,
    pub k: Option<String>,
    pub mult: Option<String>,
    pub w: Option<String>,
    pub v: Option<String>,
    pub powers: Option<String>,
    pub seeds: Option<String>,
    pub samples: Option<SamplePolicy>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub dump_tableaux: Option<PathBuf>,
}

pub const KEYS: &[&str] =
    &["n", "word", "j", "k", "mult", "w", "v", "powers", "seeds", "samples", "threads", "output", "dump-tableaux"];

impl RunConfig {
    /// Parses the key-value format: one `key = value` per line, `#` starts a
    /// comment, blank lines are ignored.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| CliError::ConfigLine { path: origin.to_string(), line: idx + 1, msg };
            let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected 'key = value', got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            cfg.set(key, value).map_err(err)?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        let num = |v: &str| v.parse::<usize>().map_err(|_| format!("'{key}' expects a non-negative integer, got '{v}'"));
        match key {
            "n" => self.n = Some(num(value)?),
            "word" => self.word = Some(value.into()),
            "j" => self.j = Some(value.into()),
            "k" => self.k = Some(value.into()),
            "mult" => self.mult = Some(value.into()),
            "w" => self.w = Some(value.into()),
            "v" => self.v = Some(value.into()),
            "powers" => self.powers = Some(value.into()),
            "seeds" => self.seeds = Some(value.into()),
            "samples" => self.samples = Some(value.parse()?),
            "threads" => self.threads = Some(num(value)?),
            "output" => self.output = Some(value.into()),
            "dump-tableaux" => self.dump_tableaux = Some(value.into()),
            _ => return Err(format!("unknown key '{key}' (known: {})", KEYS.join(", "))),
        }
        Ok(())
    }

    /// Values set in `over` win.
    pub fn merged(self, over: RunConfig) -> RunConfig {
        RunConfig {
            n: over.n.or(self.n),
            word: over.word.or(self.word),
            j: over.j.or(self.j),
            k: over.k.or(self.k),
            mult: over.mult.or(self.mult),
            w: over.w.or(self.w),
            v: over.v.or(self.v),
            powers: over.powers.or(self.powers),
            seeds: over.seeds.or(self.seeds),
            samples: over.samples.or(self.samples),
            threads: over.threads.or(self.threads),
            output: over.output.or(self.output),
            dump_tableaux: over.dump_tableaux.or(self.dump_tableaux),
        }
    }

    pub fn n(&self) -> Result<usize> {
        self.n.ok_or(CliError::Missing("n"))
    }

    /// The word named `field`, or the longest word when unset.
    fn word_or_longest(&self, field: &'static str, value: &Option<String>) -> Result<Word> {
        let n = self.n()?;
        match value {
            Some(s) => Word::parse(n, s).map_err(|e| CliError::field(field, e.to_string())),
            None => Ok(longest_word(n)?),
        }
    }

    pub fn word(&self) -> Result<Word> {
        self.word_or_longest("word", &self.word)
    }

    pub fn j(&self) -> Result<Word> {
        self.word_or_longest("j", self.j.as_ref().map_or(&self.word, |_| &self.j))
    }

    pub fn k(&self) -> Result<Word> {
        self.word_or_longest("k", &self.k)
    }

    pub fn mult(&self) -> Result<Vec<u32>> {
        parse_list("mult", self.mult.as_deref().ok_or(CliError::Missing("mult"))?)
    }

    /// Shape `(word, mult)`, validated.
    pub fn shape(&self) -> Result<Shape> {
        Shape::new(self.word()?, self.mult()?).map_err(|e| CliError::field("mult", e.to_string()))
    }

    pub fn perm(&self, field: &'static str) -> Result<Option<Permutation>> {
        let value = if field == "w" { &self.w } else { &self.v };
        let Some(s) = value else { return Ok(None) };
        let p: Permutation = s.parse().map_err(|e: stdmono_core::Error| CliError::field(field, e.to_string()))?;
        if p.n() != self.n()? {
            return Err(CliError::field(field, format!("{p} is not a permutation of 1..{}", self.n()?)));
        }
        Ok(Some(p))
    }

    pub fn powers(&self, default: &[u32]) -> Result<Vec<u32>> {
        match &self.powers {
            Some(s) => parse_list("powers", s),
            None => Ok(default.to_vec()),
        }
    }

    pub fn seeds(&self) -> Result<Vec<u64>> {
        match &self.seeds {
            Some(s) => parse_list("seeds", s),
            None => Ok(vec![0]),
        }
    }

    pub fn sample_plan(&self, seed: u64, n: usize, flag_mult: &[u32]) -> Result<SamplePlan> {
        Ok(match self.samples.unwrap_or_default() {
            SamplePolicy::Auto => SamplePlan::for_flag_space(seed, n, flag_mult)?,
            SamplePolicy::Fixed(count) => SamplePlan::new(seed, count),
        })
    }

    /// The settings as echoed into reports: only what was given, in a fixed
    /// key order.  `threads` and output paths are left out so that reports do
    /// not depend on them.
    pub fn echo(&self) -> serde_json::Map<String, serde_json::Value> {
        let mut out = serde_json::Map::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.insert(k.to_string(), serde_json::Value::String(v));
            }
        };
        put("n", self.n.map(|n| n.to_string()));
        put("word", self.word.clone());
        put("j", self.j.clone());
        put("k", self.k.clone());
        put("mult", self.mult.clone());
        put("w", self.w.clone());
        put("v", self.v.clone());
        put("powers", self.powers.clone());
        put("seeds", self.seeds.clone());
        put("samples", self.samples.map(|s| s.to_string()));
        out
    }
}

pub fn parse_list<T: FromStr>(field: &'static str, s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| CliError::field(field, format!("cannot parse '{}' in '{s}'", x.trim()))))
        .collect()
}
