use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sumsetlab::setfile::{format_set, parse_set};
use sumsetlab::GSet;

use crate::error::{CliError, CliResult};

pub const VERSION: &str = env!("SUMSETLAB_VERSION");

pub fn read_set(path: &Path) -> CliResult<GSet> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_set(&text, None).map_err(|e| CliError::Params(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn write_set(path: &Path, a: &GSet) -> CliResult<()> {
    write_text(path, &format_set(a))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(path, &text)
}

/// `path` with `suffix` appended to its file name.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(suffix);
    path.with_file_name(name)
}

pub fn read_json_config<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Params(format!("{}: {e}", path.display())))
}
