//! Generators for the graph families used throughout the toolkit, Ramsey-bound calculators,
//! and the subdivided-biclique experiment.
//!
//! Vertex numbering:
//! - `biclique(s, N)`: left side `0..s`, right side `s..s+N`;
//! - `half_graph(n)`: `a_1..a_n` as `0..n`, `b_1..b_n` as `n..2n`, `a_i b_j` an edge iff `i <= j`;
//! - `star(N)`: centre `0`, leaves `1..=N`;
//! - `subdivide(s, base)`: base vertices keep their indices, the `s` internal vertices of
//!   each base edge are appended edge by edge (edges in lexicographic order), each run
//!   ordered from the smaller endpoint to the larger;
//! - `random(n, p)`: `G(n, p)` with the pairs `u < v` visited lexicographically, one
//!   `gen_bool(p)` draw each from ChaCha8 seeded with `seed`.

pub mod experiment;
pub mod ramsey;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use experiment::{counterexample_experiment, BudgetResult, ExperimentReport};
pub use ramsey::{iterated_ramsey_upper, ramsey_upper};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { t: usize },
    Biclique { s: usize, n: usize },
    HalfGraph { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Random { n: usize, p: f64, seed: u64 },
    Subdivided { base: Box<FamilySpec>, s: usize },
}

impl FamilySpec {
    pub fn subdivided(base: FamilySpec, s: usize) -> Self {
        FamilySpec::Subdivided {
            base: Box::new(base),
            s,
        }
    }

    pub fn is_randomized(&self) -> bool {
        match self {
            FamilySpec::Random { .. } => true,
            FamilySpec::Subdivided { base, .. } => base.is_randomized(),
            _ => false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: usize| {
            if v == 0 {
                Err(Error::InvalidSpec(format!("{name} must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::Complete { t } => positive("t", *t),
            FamilySpec::Biclique { s, n } => positive("s", *s).and(positive("N", *n)),
            FamilySpec::HalfGraph { n } | FamilySpec::Path { n } | FamilySpec::Star { n } => positive("n", *n),
            FamilySpec::Cycle { n } if *n < 3 => Err(Error::InvalidSpec("a cycle needs at least 3 vertices".into())),
            FamilySpec::Cycle { .. } => Ok(()),
            FamilySpec::Random { p, .. } if !(0.0..=1.0).contains(p) => {
                Err(Error::InvalidSpec(format!("edge probability {p} outside [0, 1]")))
            }
            FamilySpec::Random { .. } => Ok(()),
            FamilySpec::Subdivided { base, .. } => base.validate(),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Complete { t } => complete(t),
        FamilySpec::Biclique { s, n } => biclique(s, n),
        FamilySpec::HalfGraph { n } => half_graph(n),
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Star { n } => star(n),
        FamilySpec::Random { n, p, seed } => random(n, p, seed),
        FamilySpec::Subdivided { ref base, s } => subdivide(&generate(base)?, s),
    })
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator produced an invalid edge")
}

pub fn complete(t: usize) -> Graph {
    build(t, (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))))
}

pub fn biclique(s: usize, n: usize) -> Graph {
    build(s + n, (0..s).flat_map(|u| (s..s + n).map(move |v| (u, v))))
}

pub fn half_graph(n: usize) -> Graph {
    build(2 * n, (0..n).flat_map(|i| (i..n).map(move |j| (i, n + j))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn star(n: usize) -> Graph {
    build(n + 1, (1..=n).map(|v| (0, v)))
}

pub fn random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Replaces every edge by a path with exactly `s` internal vertices.
pub fn subdivide(g: &Graph, s: usize) -> Graph {
    if s == 0 {
        return g.clone();
    }
    let base_edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n() + s * base_edges.len();
    let mut edges = Vec::with_capacity(base_edges.len() * (s + 1));
    let mut next = g.n();
    for (u, v) in base_edges {
        let mut prev = u;
        for _ in 0..s {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    build(n, edges)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { t } => write!(f, "complete({t})"),
            FamilySpec::Biclique { s, n } => write!(f, "biclique({s},{n})"),
            FamilySpec::HalfGraph { n } => write!(f, "half_graph({n})"),
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Star { n } => write!(f, "star({n})"),
            FamilySpec::Random { n, p, seed } => write!(f, "random({n},{p},{seed})"),
            FamilySpec::Subdivided { base, s } => write!(f, "subdivide({s},{base})"),
        }
    }
}

/// Parses `kind(args)` terms such as `biclique(2,6)` or `subdivide(2,biclique(2,6))`.
/// `random(n,p,seed)` requires its seed explicitly.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse_with_seed(s, None)
    }
}

impl FamilySpec {
    /// Like `from_str`, but `random(n,p)` may omit its seed and takes `seed` instead. An
    /// explicit seed must agree with `seed` when both are given.
    pub fn parse_with_seed(s: &str, seed: Option<u64>) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (spec, rest) = parse_term(&compact, seed)?;
        if !rest.is_empty() {
            return Err(Error::InvalidSpec(format!("trailing input `{rest}`")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_term(s: &str, seed: Option<u64>) -> Result<(FamilySpec, &str)> {
    let open = s
        .find('(')
        .ok_or_else(|| Error::InvalidSpec(format!("expected `kind(args)`, got `{s}`")))?;
    let kind = &s[..open];
    let mut rest = &s[open + 1..];
    let bad = |msg: String| Error::InvalidSpec(msg);
    let int = |t: &str| t.parse::<usize>().map_err(|_| bad(format!("`{t}` is not a non-negative integer")));

    if kind == "subdivide" || kind == "subdivided" {
        let comma = rest.find(',').ok_or_else(|| bad("subdivide needs (s, base)".into()))?;
        let depth = int(&rest[..comma])?;
        let (base, after) = parse_term(&rest[comma + 1..], seed)?;
        rest = after
            .strip_prefix(')')
            .ok_or_else(|| bad("unclosed subdivide(".into()))?;
        return Ok((FamilySpec::subdivided(base, depth), rest));
    }

    let close = rest.find(')').ok_or_else(|| bad(format!("unclosed `{kind}(`")))?;
    let args: Vec<&str> = rest[..close].split(',').filter(|a| !a.is_empty()).collect();
    rest = &rest[close + 1..];
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(bad(format!("{kind} takes {k} argument(s), got {}", args.len())))
        }
    };
    let spec = match kind {
        "complete" => {
            arity(1)?;
            FamilySpec::Complete { t: int(args[0])? }
        }
        "biclique" => {
            arity(2)?;
            FamilySpec::Biclique {
                s: int(args[0])?,
                n: int(args[1])?,
            }
        }
        "half_graph" | "half" => {
            arity(1)?;
            FamilySpec::HalfGraph { n: int(args[0])? }
        }
        "path" => {
            arity(1)?;
            FamilySpec::Path { n: int(args[0])? }
        }
        "cycle" => {
            arity(1)?;
            FamilySpec::Cycle { n: int(args[0])? }
        }
        "star" => {
            arity(1)?;
            FamilySpec::Star { n: int(args[0])? }
        }
        "random" => {
            let explicit = match args.len() {
                2 => None,
                3 => Some(
                    args[2]
                        .parse::<u64>()
                        .map_err(|_| bad(format!("`{}` is not a seed", args[2])))?,
                ),
                k => return Err(bad(format!("random takes (n, p) or (n, p, seed), got {k} argument(s)"))),
            };
            let seed = match (explicit, seed) {
                (Some(a), Some(b)) if a != b => {
                    return Err(bad(format!("seed {a} in the family disagrees with seed {b}")))
                }
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => return Err(bad("random families need a seed".into())),
            };
            FamilySpec::Random {
                n: int(args[0])?,
                p: args[1]
                    .parse()
                    .map_err(|_| bad(format!("`{}` is not a probability", args[1])))?,
                seed,
            }
        }
        other => return Err(bad(format!("unknown family `{other}`"))),
    };
    Ok((spec, rest))
}
