//! Brute-force oracles shared by the integration tests. None of these use
//! the library's algorithms beyond plain data types.

#![allow(dead_code)]

use coverlat::graph::Graph;
use coverlat::BitSet;
use rand::seq::SliceRandom;
use rand::Rng;

/// Minimal covers by filtering all `2^|V|` subsets, sorted by mask.
pub fn brute_force_covers(g: &Graph) -> Vec<BitSet> {
    let n = g.vertex_count();
    let is_cover = |s: u64| {
        g.edges()
            .iter()
            .all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
    };
    let mut out: Vec<BitSet> = (0u64..1 << n)
        .filter(|&s| is_cover(s))
        .filter(|&s| {
            (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .all(|v| !is_cover(s & !(1 << v)))
        })
        .map(BitSet)
        .collect();
    out.sort_by_key(|s| s.0);
    out
}

fn det(m: &[Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 1 {
        return m[0][0];
    }
    (0..k)
        .filter(|&c| m[0][c] != 0)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a non-vanishing `k × k` minor (Laplace expansion).
pub fn minor_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets_of_size(rows, k) {
            for cs in subsets_of_size(cols, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                if det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// True if the graph has a cycle of odd length, by DFS over simple paths.
pub fn has_odd_cycle(g: &Graph) -> bool {
    fn walk(g: &Graph, start: usize, at: usize, visited: u64, len: usize) -> bool {
        for w in g.neighbors(at).iter() {
            if w == start && len >= 3 && len % 2 == 1 {
                return true;
            }
            if visited >> w & 1 == 0 && w > start && walk(g, start, w, visited | 1 << w, len + 1) {
                return true;
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| walk(g, s, s, 1 << s, 1))
}

/// Random simple graph on `n` vertices without isolated vertices.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    for u in 0..n {
        if !edges.iter().any(|&(a, b)| a == u || b == u) {
            let mut others: Vec<usize> = (0..n).filter(|&v| v != u).collect();
            others.shuffle(rng);
            let v = others[0];
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random 0/1 matrix.
pub fn random_01<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| i64::from(rng.gen_bool(0.5))).collect())
        .collect()
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}
