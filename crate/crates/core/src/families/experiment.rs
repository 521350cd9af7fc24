//! Deletion budgets needed to expose an `r`-independent `m`-subset of the large side of
//! the `s`-subdivided biclique `K^s_{s,N}`.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::{biclique, subdivide};
use crate::witness::{deletion_witness_of_size, DEFAULT_EXACT_POOL};

/// Largest subdivided biclique accepted by [`counterexample_experiment`].
pub const EXPERIMENT_MAX_N: usize = 200;
/// Largest `s` (and hence deletion budget) accepted by [`counterexample_experiment`].
pub const EXPERIMENT_MAX_S: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetResult {
    pub budget: usize,
    pub success: bool,
    pub exhaustive: bool,
    /// Lexicographically first successful deletion set of this size.
    pub deletion: Option<Vec<usize>>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub s: usize,
    pub big_n: usize,
    pub r: u32,
    pub m: usize,
    pub vertices: usize,
    pub budget_results: Vec<BudgetResult>,
    pub min_successful_budget: Option<usize>,
}

impl ExperimentReport {
    /// Success at budget `b` implies success at every larger budget.
    pub fn is_monotone(&self) -> bool {
        self.budget_results
            .windows(2)
            .all(|w| !(w[0].exhaustive && w[1].exhaustive && w[0].success && !w[1].success))
    }
}

/// For each budget `b <= s`, decides exhaustively whether deleting some `b` vertices of
/// `K^s_{s,N}` leaves `m` right-side vertices pairwise at distance greater than `r`.
pub fn counterexample_experiment(s: usize, big_n: usize, r: u32, m: usize) -> Result<ExperimentReport> {
    if s == 0 || big_n == 0 {
        return Err(Error::InvalidParameter("s and N must be positive".into()));
    }
    let vertices = s + big_n + s * s * big_n;
    if s > EXPERIMENT_MAX_S || vertices > EXPERIMENT_MAX_N {
        return Err(Error::TooLarge {
            what: format!("K^{s}_{{{s},{big_n}}} with {vertices} vertices"),
            limit: format!("s <= {EXPERIMENT_MAX_S} and n <= {EXPERIMENT_MAX_N}"),
        });
    }
    let g = subdivide(&biclique(s, big_n), s);
    debug_assert_eq!(g.n(), vertices);
    let right = VertexSet::from_vertices(vertices, s..s + big_n)?;

    let budget_results: Vec<BudgetResult> = (0..=s)
        .map(|budget| {
            let found = deletion_witness_of_size(&g, &right, r, m, budget, DEFAULT_EXACT_POOL);
            BudgetResult {
                budget,
                success: found.is_some(),
                exhaustive: true,
                deletion: found.as_ref().map(|w| w.s_set.to_vec()),
                witness: found.as_ref().map(|w| w.b_set.to_vec()),
            }
        })
        .collect();
    let min_successful_budget = budget_results.iter().find(|b| b.success).map(|b| b.budget);
    let report = ExperimentReport {
        s,
        big_n,
        r,
        m,
        vertices,
        budget_results,
        min_successful_budget,
    };
    assert!(report.is_monotone(), "budget results are not monotone");
    Ok(report)
}
