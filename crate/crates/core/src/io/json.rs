//! JSON forms of flips, normalised flip sets and witness instances.
//!
//! A flip set is an array of `[A, B]` pairs of vertex arrays, e.g. `[[[0],[1,2]]]`. A
//! witness is tagged by `kind`:
//! `{"kind":"widenable","S":[],"B":[0,3],"r":2,"m":2}` or
//! `{"kind":"flippable","flips":[[[0],[1]]],"B":[0,3],"r":2,"m":2}`. `A` defaults to all
//! vertices when omitted.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::flip::{Flip, FlipSet, NormalizedFlipSet};
use crate::witness::{FlippableInstance, WidenableInstance};

pub type FlipPair = (Vec<usize>, Vec<usize>);

pub fn flips_to_json(flips: &FlipSet) -> Vec<FlipPair> {
    flips.iter().map(|f| (f.a.to_vec(), f.b.to_vec())).collect()
}

pub fn flips_from_json(pairs: &[FlipPair], n: usize) -> Result<FlipSet> {
    pairs.iter().map(|(a, b)| Flip::from_vertices(n, a, b)).collect()
}

pub fn parse_flips(text: &str, n: usize) -> Result<FlipSet> {
    let pairs: Vec<FlipPair> =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("flip JSON: {e}")))?;
    flips_from_json(&pairs, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedJson {
    pub atoms: Vec<Vec<usize>>,
    pub toggles: Vec<(usize, usize)>,
    pub source_flips: usize,
    pub has_reflexive: bool,
    pub within_bound: bool,
}

impl From<&NormalizedFlipSet> for NormalizedJson {
    fn from(nf: &NormalizedFlipSet) -> Self {
        NormalizedJson {
            atoms: nf.partition().atoms().iter().map(VertexSet::to_vec).collect(),
            toggles: nf.toggles().to_vec(),
            source_flips: nf.source_len(),
            has_reflexive: nf.has_reflexive(),
            within_bound: nf.within_bound(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WitnessJson {
    Widenable {
        #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
        a: Option<Vec<usize>>,
        #[serde(rename = "S", default)]
        s: Vec<usize>,
        #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
        b: Option<Vec<usize>>,
        r: u32,
        m: usize,
    },
    Flippable {
        #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
        a: Option<Vec<usize>>,
        #[serde(default)]
        flips: Vec<FlipPair>,
        #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
        b: Option<Vec<usize>>,
        r: u32,
        m: usize,
    },
}

/// A witness instance resolved against a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Widenable(WidenableInstance),
    Flippable(FlippableInstance),
}

fn vertex_set(n: usize, vs: &[usize]) -> Result<VertexSet> {
    VertexSet::from_vertices(n, vs.iter().copied())
}

impl WitnessJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("witness JSON: {e}")))
    }

    pub fn resolve(&self, n: usize) -> Result<Instance> {
        let a_set = |a: &Option<Vec<usize>>| match a {
            Some(a) => vertex_set(n, a),
            None => Ok(VertexSet::full(n)),
        };
        let witness = |b: &Option<Vec<usize>>| b.as_deref().map(|b| vertex_set(n, b)).transpose();
        Ok(match self {
            WitnessJson::Widenable { a, s, b, r, m } => Instance::Widenable(WidenableInstance {
                a_set: a_set(a)?,
                s_set: vertex_set(n, s)?,
                r: *r,
                m: *m,
                witness: witness(b)?,
            }),
            WitnessJson::Flippable { a, flips, b, r, m } => Instance::Flippable(FlippableInstance {
                a_set: a_set(a)?,
                flips: flips_from_json(flips, n)?,
                r: *r,
                m: *m,
                witness: witness(b)?,
            }),
        })
    }
}

impl From<&WidenableInstance> for WitnessJson {
    fn from(inst: &WidenableInstance) -> Self {
        WitnessJson::Widenable {
            a: Some(inst.a_set.to_vec()),
            s: inst.s_set.to_vec(),
            b: inst.witness.as_ref().map(VertexSet::to_vec),
            r: inst.r,
            m: inst.m,
        }
    }
}

impl From<&FlippableInstance> for WitnessJson {
    fn from(inst: &FlippableInstance) -> Self {
        WitnessJson::Flippable {
            a: Some(inst.a_set.to_vec()),
            flips: flips_to_json(&inst.flips),
            b: inst.witness.as_ref().map(VertexSet::to_vec),
            r: inst.r,
            m: inst.m,
        }
    }
}
