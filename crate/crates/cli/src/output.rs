//! Atomic CSV/JSON writers.
//!
//! Floats are written with `{:e}` (shortest round-trip, scientific), so a
//! rerun with the same inputs produces byte-identical files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

/// Writes `bytes` to `dir/name` through a sibling temporary file and a rename.
pub fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn num(x: f64) -> String {
    format!("{x:e}")
}

/// CSV table with one real column per header entry.
pub struct Table {
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    pub fn new(header: &[String]) -> Self {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        Self { writer }
    }

    pub fn row(&mut self, values: &[f64]) {
        self.writer
            .write_record(values.iter().map(|x| num(*x)))
            .expect("in-memory write");
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.writer.into_inner().expect("in-memory flush")
    }
}

/// Header `[first, re_name, im_name, ...]` for paired complex columns.
pub fn complex_header(first: &[&str], names: &[String]) -> Vec<String> {
    let mut h: Vec<String> = first.iter().map(|s| s.to_string()).collect();
    for n in names {
        h.push(format!("re_{n}"));
        h.push(format!("im_{n}"));
    }
    h
}

pub fn push_complex(row: &mut Vec<f64>, z: Complex64) {
    row.push(z.re);
    row.push(z.im);
}

pub fn json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(value).expect("serializable");
    v.push(b'\n');
    v
}

/// Reads a `t,re_h,im_h` flux file.
pub fn read_flux(path: &Path) -> Result<(Vec<f64>, Vec<Complex64>), String> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let header = reader.headers().map_err(|e| e.to_string())?.clone();
    if header.iter().collect::<Vec<_>>() != ["t", "re_h", "im_h"] {
        return Err(format!("{}: expected header t,re_h,im_h", path.display()));
    }
    let mut t = Vec::new();
    let mut h = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let field = |j: usize| -> Result<f64, String> {
            rec[j]
                .trim()
                .parse()
                .map_err(|_| format!("{}: row {}: bad number `{}`", path.display(), i + 2, &rec[j]))
        };
        t.push(field(0)?);
        h.push(Complex64::new(field(1)?, field(2)?));
    }
    Ok((t, h))
}
