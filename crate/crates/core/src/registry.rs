//! On-disk ingredient registry: a plain directory holding canonical design
//! files, an `index.json` and an append-only `log.txt` of verification runs.

use crate::designs::ingredients::{record_from_file, IngredientKind, IngredientRecord, Provenance};
use crate::designs::Catalog;
use crate::error::{Error, Result};
use crate::format::DesignFile;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryEntry {
    /// File name inside the registry directory.
    pub path: String,
    pub kind: IngredientKind,
    pub n: u32,
    pub parameters: BTreeMap<String, u64>,
    /// sha256 of the canonical text, hex.
    pub digest: String,
    pub verified: bool,
    pub provenance: Provenance,
}

#[derive(Debug)]
pub struct Registry {
    dir: PathBuf,
    entries: Vec<RegistryEntry>,
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Registry {
    /// Opens `dir`, creating it with an empty index when absent.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        let index = dir.join("index.json");
        let entries = if index.exists() { serde_json::from_str(&fs::read_to_string(&index)?)? } else { Vec::new() };
        Ok(Registry { dir, entries })
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn save(&self) -> Result<()> {
        fs::write(self.dir.join("index.json"), serde_json::to_string_pretty(&self.entries)?)?;
        Ok(())
    }

    fn log(&self, line: &str) -> Result<()> {
        let mut f = fs::OpenOptions::new().create(true).append(true).open(self.dir.join("log.txt"))?;
        writeln!(f, "{line}")?;
        Ok(())
    }

    /// Verifies a design file as an ingredient and stores its canonical text.
    /// Re-adding identical content is a no-op returning the existing entry.
    pub fn add(&mut self, source: &Path) -> Result<RegistryEntry> {
        let file = DesignFile::read(source)?;
        let record = record_from_file(&file, Provenance::UserSupplied)?;
        let text = record.to_file().to_text();
        let dig = digest(&text);
        if let Some(e) = self.entries.iter().find(|e| e.digest == dig) {
            return Ok(e.clone());
        }
        let name = format!("{}_{}_{}.design", record.kind.name(), record.n, &dig[..12]);
        fs::write(self.dir.join(&name), &text)?;
        let entry = RegistryEntry {
            path: name,
            kind: record.kind,
            n: record.n,
            parameters: record.parameters.clone(),
            digest: dig,
            verified: true,
            provenance: Provenance::UserSupplied,
        };
        self.log(&format!("add {} verified {}", entry.path, entry.digest))?;
        self.entries.push(entry.clone());
        self.save()?;
        Ok(entry)
    }

    fn load(&self, e: &RegistryEntry) -> Result<IngredientRecord> {
        let text = fs::read_to_string(self.dir.join(&e.path))?;
        if digest(&text) != e.digest {
            return Err(Error::InvalidIngredient(format!("{}: content digest does not match the index", e.path)));
        }
        let f = DesignFile::parse(&text)?;
        if IngredientKind::from_str(&f.kind)? != e.kind {
            return Err(Error::InvalidIngredient(format!("{}: kind differs from the index", e.path)));
        }
        record_from_file(&f, e.provenance)
    }

    /// Re-checks every entry (digest and design conditions), updates the
    /// verified flags and logs the run.
    pub fn verify_all(&mut self) -> Result<Vec<(RegistryEntry, Option<String>)>> {
        let mut out = Vec::new();
        for i in 0..self.entries.len() {
            let res = self.load(&self.entries[i]);
            let problem = res.err().map(|e| e.to_string());
            self.entries[i].verified = problem.is_none();
            let e = &self.entries[i];
            self.log(&format!(
                "verify {} {}",
                e.path,
                problem.as_deref().map_or("ok".to_string(), |p| format!("FAILED {p}"))
            ))?;
            out.push((e.clone(), problem));
        }
        self.save()?;
        Ok(out)
    }

    /// The bundled catalog plus every entry that loads and verifies now.
    pub fn catalog(&self) -> Catalog {
        Catalog::with_records(self.entries.iter().filter(|e| e.verified).filter_map(|e| self.load(e).ok()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_then_tamper() {
        let dir = std::env::temp_dir().join(format!("qc-reg-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let mut reg = Registry::open(&dir).unwrap();
        let src = dir.join("in.design");
        fs::write(&src, "design sts r=3 n=7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n").unwrap();
        let e = reg.add(&src).unwrap();
        assert_eq!(reg.add(&src).unwrap(), e);
        assert!(reg.catalog().find(IngredientKind::Sts, 7).is_some());
        let reopened = Registry::open(&dir).unwrap();
        assert_eq!(reopened.entries().len(), 1);

        fs::write(dir.join(&e.path), "design sts r=3 n=7\n0 1 2\n").unwrap();
        let res = reg.verify_all().unwrap();
        assert!(res[0].1.as_ref().unwrap().contains("digest"));
        assert!(!reg.entries()[0].verified);
        let _ = fs::remove_dir_all(&dir);
    }
}
