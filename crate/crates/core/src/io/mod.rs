//! Graph and witness serialisation.

pub mod edgelist;
pub mod graph6;
pub mod json;

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Auto,
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Format::Auto),
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge-list" => Ok(Format::Edgelist),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

/// Edge lists start (after comments and blank lines) with `n`; anything else is graph6.
pub fn detect_format(bytes: &[u8]) -> Format {
    let text = String::from_utf8_lossy(bytes);
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let starts_with_comment = bytes.trim_ascii_start().first() == Some(&b'#');
    match first {
        Some(l) if l == "n" || l.starts_with("n ") || l.starts_with("n\t") => Format::Edgelist,
        None if starts_with_comment => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn read_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Auto => read_graph(bytes, detect_format(bytes)),
        Format::Graph6 => parse_graph6(bytes),
        Format::Edgelist => {
            let text = std::str::from_utf8(bytes).map_err(|_| Error::Malformed("edge list is not UTF-8".into()))?;
            parse_edge_list(text)
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Edgelist => Ok(write_edge_list(g).into_bytes()),
        Format::Auto | Format::Graph6 => {
            let mut out = write_graph6(g)?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

/// SHA-256 of the canonical graph6 encoding, so the digest identifies the graph rather than
/// its file format or line endings.
pub fn graph_digest(g: &Graph) -> Result<String> {
    Ok(hex::encode(Sha256::digest(write_graph6(g)?)))
}
