//! Rendering of record streams and the on-disk report layout.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use diagram_homology::verify::ReportRecord;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

const CSV_HEADER: [&str; 13] = [
    "check-id", "family", "n", "ring", "delta", "epsilon", "X", "x", "m", "degree", "expected", "computed", "pass",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::new(), T::to_string)
}

pub fn render(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Json => records.iter().map(|r| r.to_json() + "\n").collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in records {
                w.write_record([
                    r.check_id.clone(),
                    r.family.clone(),
                    r.n.to_string(),
                    r.ring.clone(),
                    r.delta.clone(),
                    r.epsilon.clone(),
                    opt(&r.set),
                    opt(&r.x),
                    opt(&r.m),
                    opt(&r.degree),
                    r.expected.clone(),
                    r.computed.clone(),
                    r.pass.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut out = String::new();
            for r in records {
                let mut at = Vec::new();
                if let Some(s) = &r.set {
                    at.push(format!("X={s}"));
                }
                if let Some(x) = r.x {
                    at.push(format!("x={x}"));
                }
                if let Some(m) = r.m {
                    at.push(format!("m={m}"));
                }
                if let Some(k) = r.degree {
                    at.push(format!("k={k}"));
                }
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{verdict} {:<28} {} n={} {} δ={} ε={} {:<14} expected {} | computed {}\n",
                    r.check_id,
                    r.family,
                    r.n,
                    r.ring,
                    r.delta,
                    r.epsilon,
                    at.join(" "),
                    r.expected,
                    r.computed
                ));
            }
            let passed = records.iter().filter(|r| r.pass).count();
            out.push_str(&format!("{passed}/{} checks passed\n", records.len()));
            out
        }
    }
}

/// Plain output lines (enumeration, products), the same in every format.
pub fn render_lines(lines: &[String]) -> String {
    lines.iter().map(|l| format!("{l}\n")).collect()
}

pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// `<dir>/<command>/<hash>.jsonl`, the hash taken over the parsed configuration.
pub fn report_path(dir: &Path, command: &str, config: &str) -> PathBuf {
    let digest = Sha256::digest(config.as_bytes());
    dir.join(command).join(format!("{}.jsonl", &hex::encode(digest)[..16]))
}

pub fn store(dir: &Path, command: &str, config: &str, records: &[ReportRecord]) -> io::Result<PathBuf> {
    let path = report_path(dir, command, config);
    fs::create_dir_all(path.parent().expect("has parent"))?;
    fs::write(&path, render(records, Format::Json))?;
    Ok(path)
}
