//! The design file format.
//!
//! Text form: a header `design <kind> r=<r> n=<n> [k=<count>] [key=value ...]`,
//! then one block per line. Files holding a family of systems separate the
//! members with a line `--`. The JSON form carries the same fields in one object.

use crate::block::{Block, BlockSystem};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFile {
    pub kind: String,
    pub r: u32,
    pub n: u32,
    /// Extra integer fields such as `a` and `b`.
    #[serde(flatten)]
    pub fields: BTreeMap<String, u64>,
    /// One entry for a plain design, several for a family.
    #[serde(rename = "blocks", with = "members_json")]
    pub members: Vec<Vec<Block>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl DesignFile {
    pub fn single(kind: &str, sys: &BlockSystem) -> Self {
        DesignFile {
            kind: kind.to_string(),
            r: sys.r(),
            n: sys.n(),
            fields: BTreeMap::new(),
            members: vec![sys.blocks().to_vec()],
            provenance: None,
        }
    }

    pub fn family(kind: &str, n: u32, r: u32, members: &[BlockSystem]) -> Self {
        DesignFile {
            kind: kind.to_string(),
            r,
            n,
            fields: BTreeMap::new(),
            members: members.iter().map(|m| m.blocks().to_vec()).collect(),
            provenance: None,
        }
    }

    pub fn with_field(mut self, key: &str, value: u64) -> Self {
        self.fields.insert(key.to_string(), value);
        self
    }

    pub fn field(&self, key: &str) -> Option<u64> {
        self.fields.get(key).copied()
    }

    pub fn require(&self, key: &str) -> Result<u64> {
        self.field(key).ok_or_else(|| Error::Parse { line: 1, msg: format!("header lacks field {key}=") })
    }

    pub fn is_family(&self) -> bool {
        self.fields.contains_key("k") || self.members.len() != 1
    }

    /// Members as validated block systems.
    pub fn systems(&self) -> Result<Vec<BlockSystem>> {
        self.members.iter().map(|m| BlockSystem::new(self.n, self.r, m.clone())).collect()
    }

    /// The single system of a non-family file.
    pub fn system(&self) -> Result<BlockSystem> {
        match self.members.as_slice() {
            [m] => BlockSystem::new(self.n, self.r, m.clone()),
            _ => Err(Error::Shape(format!("expected one system, file holds {}", self.members.len()))),
        }
    }

    /// Canonical text: sorted blocks, fixed field order, LF endings.
    pub fn to_text(&self) -> String {
        let mut out = format!("design {} r={} n={}", self.kind, self.r, self.n);
        if self.members.len() != 1 || self.fields.contains_key("k") {
            let _ = write!(out, " k={}", self.members.len());
        }
        for (key, v) in &self.fields {
            if key != "k" {
                let _ = write!(out, " {key}={v}");
            }
        }
        out.push('\n');
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                out.push_str("--\n");
            }
            let mut blocks: Vec<Block> = m.clone();
            for b in &mut blocks {
                b.sort_unstable();
            }
            blocks.sort_unstable();
            for b in blocks {
                let line: Vec<String> = b.iter().map(u32::to_string).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        });
        let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
        let mut words = header.split_whitespace();
        if words.next() != Some("design") {
            return Err(Error::Parse { line: 1, msg: "header must start with `design`".into() });
        }
        let kind = words.next().ok_or(Error::Parse { line: 1, msg: "missing kind".into() })?.to_string();
        let mut fields = BTreeMap::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| Error::Parse { line: 1, msg: format!("bad field `{w}`") })?;
            let v: u64 = v.parse().map_err(|_| Error::Parse { line: 1, msg: format!("bad value in `{w}`") })?;
            fields.insert(k.to_string(), v);
        }
        let r = fields.remove("r").ok_or(Error::Parse { line: 1, msg: "missing r=".into() })? as u32;
        let n = fields.remove("n").ok_or(Error::Parse { line: 1, msg: "missing n=".into() })? as u32;
        let declared = fields.get("k").copied();
        let mut members = vec![Vec::new()];
        for (i, line) in lines {
            let line = line.trim();
            if line == "--" {
                members.push(Vec::new());
                continue;
            }
            let block = line
                .split_whitespace()
                .map(|x| x.parse::<u32>())
                .collect::<std::result::Result<Block, _>>()
                .map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
            members.last_mut().expect("non-empty").push(block);
        }
        if let Some(k) = declared {
            if k as usize != members.len() {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("header says k={k} but file holds {} members", members.len()),
                });
            }
        }
        Ok(DesignFile { kind, r, n, fields, members, provenance: None })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Accepts either form, sniffing the first non-blank character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Writes JSON when the path ends in `.json`, canonical text otherwise.
    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        let body = if path.extension().is_some_and(|e| e == "json") { self.to_json()? } else { self.to_text() };
        std::fs::write(path, body)?;
        Ok(())
    }
}

/// A single design serializes as a list of blocks, a family as a list of lists.
mod members_json {
    use super::Block;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Single(Vec<Block>),
        Family(Vec<Vec<Block>>),
    }

    pub fn serialize<S: Serializer>(m: &[Vec<Block>], s: S) -> Result<S::Ok, S::Error> {
        match m {
            [one] => Repr::Single(one.clone()).serialize(s),
            _ => Repr::Family(m.to_vec()).serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Block>>, D::Error> {
        match Repr::deserialize(d) {
            Ok(Repr::Single(b)) => Ok(vec![b]),
            Ok(Repr::Family(f)) => Ok(f),
            Err(e) => Err(D::Error::custom(e)),
        }
    }
}
