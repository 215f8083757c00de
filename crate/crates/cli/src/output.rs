//! Deterministic writers: fixed 17-significant-digit float formatting so
//! identical inputs produce byte-identical CSV, and a few JSON helpers.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::CliError;

/// 17 significant digits round-trip f64 exactly and pin the byte output.
pub fn fmt17(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.16e}")
    }
}

pub struct OutputDir {
    root: PathBuf,
}

impl OutputDir {
    pub fn create(root: &Path, config_bytes: &str) -> Result<Self, CliError> {
        std::fs::create_dir_all(root)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", root.display())))?;
        let dir = OutputDir {
            root: root.to_path_buf(),
        };
        // the config is the reproducibility artifact; keep it next to the results
        dir.write("config.toml", config_bytes)?;
        Ok(dir)
    }

    pub fn write(&self, name: &str, content: &str) -> Result<(), CliError> {
        let path = self.root.join(name);
        std::fs::write(&path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }

}

pub struct Csv {
    buffer: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buffer = String::new();
        buffer.push_str(&header.join(","));
        buffer.push('\n');
        Csv {
            buffer,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, values: &[f64]) {
        assert_eq!(values.len(), self.columns, "csv row width mismatch");
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                self.buffer.push(',');
            }
            let _ = write!(self.buffer, "{}", fmt17(*v));
        }
        self.buffer.push('\n');
    }

    pub fn finish(self) -> String {
        self.buffer
    }
}

pub fn to_json_pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("json encoding failed: {e}")))?;
    text.push('\n');
    Ok(text)
}
