//! Test-only oracles, kept independent of the library's distance and search
//! code paths.
#![allow(dead_code)]

use std::collections::HashSet;

use emdim::{Graph, Target};
use rand::seq::SliceRandom;
use rand::Rng;

/// Floyd-Warshall hop distances.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in g.edges() {
        d[e.u][e.v] = 1;
        d[e.v][e.u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Distances from boolean powers of `I + A`: `d(u, v)` is the first power
/// whose `(u, v)` entry is set.
pub fn matrix_power_distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut step = vec![vec![false; n]; n];
    for (v, row) in step.iter_mut().enumerate() {
        row[v] = true;
    }
    for e in g.edges() {
        step[e.u][e.v] = true;
        step[e.v][e.u] = true;
    }
    let mut reach = step.clone();
    let mut dist = vec![vec![u32::MAX; n]; n];
    for (u, row) in dist.iter_mut().enumerate() {
        for (v, d) in row.iter_mut().enumerate() {
            if u == v {
                *d = 0;
            } else if step[u][v] {
                *d = 1;
            }
        }
    }
    for power in 2..=n as u32 {
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for k in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if step[k][j] {
                            next[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if next[i][j] && dist[i][j] == u32::MAX {
                    dist[i][j] = power;
                }
            }
        }
        reach = next;
    }
    dist
}

fn naive_resolves(g: &Graph, d: &[Vec<u32>], set: &[usize], target: Target) -> bool {
    let mut seen = HashSet::new();
    match target {
        Target::Edge => g.edges().iter().all(|e| {
            let code: Vec<u32> = set.iter().map(|&s| d[e.u][s].min(d[e.v][s])).collect();
            seen.insert(code)
        }),
        Target::Vertex => (0..g.vertex_count()).all(|v| {
            let code: Vec<u32> = set.iter().map(|&s| d[v][s]).collect();
            seen.insert(code)
        }),
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest size and lexicographically first resolving set, by plain
/// enumeration from size 0 with no pruning.
pub fn naive_dimension(g: &Graph, target: Target) -> (usize, Vec<usize>) {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    for k in 0..=n {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            if naive_resolves(g, &d, &c, target) {
                return (k, c);
            }
            if k == 0 || !next_combination(&mut c, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always resolves")
}

pub fn naive_resolving(g: &Graph, set: &[usize], target: Target) -> bool {
    naive_resolves(g, &floyd_warshall(g), set, target)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        pairs.push((order[i], parent));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    Graph::new(n, pairs).expect("valid pairs")
}
