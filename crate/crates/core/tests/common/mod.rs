#![allow(dead_code)]

use flipwide::{Flip, FlipSet, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

pub fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

pub fn random_flip(rng: &mut impl Rng, n: usize) -> Flip {
    let pa = rng.gen_range(0.05..0.6);
    let pb = rng.gen_range(0.05..0.6);
    Flip::from_vertices(n, &random_subset(rng, n, pa), &random_subset(rng, n, pb)).unwrap()
}

pub fn random_flips(rng: &mut impl Rng, n: usize, k: usize) -> FlipSet {
    FlipSet((0..k).map(|_| random_flip(rng, n)).collect())
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

/// Adjacency matrix oracle.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                m[u][v] = g.has_edge(u, v);
            }
        }
    }
    m
}

/// Pairwise toggle oracle: `{u, v}` flips once per flip with `u ∈ A, v ∈ B` or `v ∈ A, u ∈ B`
/// (at most once per flip), loops excluded.
pub fn flipped_matrix(g: &Graph, flips: &FlipSet) -> Vec<Vec<bool>> {
    let mut m = matrix(g);
    let n = g.n();
    for f in flips.iter() {
        for u in 0..n {
            for v in u + 1..n {
                let hit = (f.a.contains(u) && f.b.contains(v)) || (f.a.contains(v) && f.b.contains(u));
                if hit {
                    m[u][v] = !m[u][v];
                    m[v][u] = !m[v][u];
                }
            }
        }
    }
    m
}

pub fn graph_from_matrix(m: &[Vec<bool>]) -> Graph {
    let n = m.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| m[u][v]).map(move |v| (u, v)));
    Graph::from_edge_list(n, edges.collect::<Vec<_>>()).unwrap()
}

pub const INF: u32 = u32::MAX;

/// All-pairs distances by Floyd–Warshall, `INF` when unreachable.
pub fn floyd_warshall(m: &[Vec<bool>]) -> Vec<Vec<u32>> {
    let n = m.len();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if m[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// All-pairs distances by breadth-first search over adjacency lists read off the matrix.
/// Same answer as `floyd_warshall`, much faster on sparse graphs.
pub fn bfs_all_pairs(m: &[Vec<bool>]) -> Vec<Vec<u32>> {
    let n = m.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| m[u][v]).collect()).collect();
    (0..n)
        .map(|s| {
            let mut d = vec![INF; n];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if d[v] == INF {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn distances_as_u32(d: &flipwide::DistanceVector) -> Vec<u32> {
    d.to_options().into_iter().map(|x| x.unwrap_or(INF)).collect()
}

/// Whether the members of `b` are pairwise more than `r` apart under the distance matrix.
pub fn independent_by_matrix(d: &[Vec<u32>], b: &[usize], r: u32) -> bool {
    b.iter().all(|&u| b.iter().all(|&v| u == v || d[u][v] > r))
}

/// Deletes `s` from the adjacency matrix by clearing its rows and columns.
pub fn delete_in_matrix(m: &[Vec<bool>], s: &[usize]) -> Vec<Vec<bool>> {
    let mut out = m.to_vec();
    for &x in s {
        for y in 0..m.len() {
            out[x][y] = false;
            out[y][x] = false;
        }
    }
    out
}

/// Greedy `r`-independent subset of `pool` under the distance matrix, in the given order.
pub fn greedy_far(d: &[Vec<u32>], pool: &[usize], r: u32) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &v in pool {
        if out.iter().all(|&u| d[u][v] > r) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}
