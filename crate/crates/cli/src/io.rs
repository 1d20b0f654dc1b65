//! Reading inputs, writing artifacts and loading the budget file.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;
use sn_core::calculus::{from_json, to_json, Kernel, System, Tableau};
use sn_core::search::SearchBudget;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub budget: Option<SearchBudget>,
}

pub fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_proof(path: &Path) -> Result<Tableau> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("loading proof {}", path.display()))
}

/// Write through a temporary file in the same directory so readers never
/// see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Serialize a proof, confirm the text reads back to a checked proof, then
/// write it to `out` or return it for printing.
pub fn emit_proof(kernel: &Kernel, tb: &Tableau, system: System, out: Option<&Path>) -> Result<Option<String>> {
    let text = to_json(tb);
    let back = from_json(&text).context("re-reading the serialized proof")?;
    if !kernel.accepts(&back, system) {
        anyhow::bail!("internal error: serialized proof does not re-check in {system}");
    }
    match out {
        Some(p) => {
            write_atomic(p, &text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
