//! Small simple graphs, their automorphism groups, and `D(G) = D_{Aut(G)}(V(G))`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::{PermGroup, DEFAULT_CLOSURE_CAP};
use crate::perm::Permutation;
use crate::solver::{distinguishing_number, SearchOptions, SolveResult};
use crate::{Error, Result};

pub const DEFAULT_VERTEX_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Undirected simple graph on `0..n`; loops and repeated edges are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {} {} outside 1..={n}", u + 1, v + 1)));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            if adj[u][v] {
                return Err(Error::InvalidGraph(format!("edge {} {} repeated", u + 1, v + 1)));
            }
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Ok(Graph { n, adj })
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Self::from_edges(n, &[])
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n).map(|i| (0..self.n).map(|j| i != j && !self.adj[i][j]).collect()).collect();
        Graph { n: self.n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).filter(move |&j| self.adj[i][j]).map(move |j| (i, j))).collect()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&a| a).count()
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n && (0..self.n).all(|u| (0..self.n).all(|v| self.adj[u][v] == self.adj[p.apply(u)][p.apply(v)]))
    }
}

/// Automorphism group by backtracking vertex by vertex, pruning on degree,
/// sorted neighbour degrees, and adjacency to already-mapped vertices.
pub fn automorphism_group(g: &Graph, vertex_cap: usize, order_cap: usize) -> Result<PermGroup> {
    let n = g.n;
    if n > vertex_cap {
        return Err(Error::GraphTooLarge { vertices: n, cap: vertex_cap });
    }
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let signature: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s: Vec<usize> = (0..n).filter(|&u| g.adj[v][u]).map(|u| degree[u]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|v| (0..n).filter(|&w| degree[w] == degree[v] && signature[w] == signature[v]).collect()).collect();

    let mut found: Vec<Permutation> = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, &candidates, 0, &mut image, &mut used, &mut found, order_cap)?;

    let mut gens: Vec<Permutation> = Vec::new();
    let mut group = PermGroup::trivial(n)?;
    for p in &found {
        if !group.contains(p) {
            gens.push(p.clone());
            group = PermGroup::close(&gens, order_cap)?;
        }
    }
    debug_assert_eq!(group.order(), found.len());
    Ok(group)
}

fn extend(
    g: &Graph,
    candidates: &[Vec<usize>],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
    cap: usize,
) -> Result<()> {
    if v == g.n {
        if found.len() == cap {
            return Err(Error::OrderCap { cap });
        }
        found.push(Permutation::from_images(image.clone())?);
        return Ok(());
    }
    for &w in &candidates[v] {
        if used[w] || (0..v).any(|u| g.adj[u][v] != g.adj[image[u]][w]) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend(g, candidates, v + 1, image, used, found, cap)?;
        used[w] = false;
    }
    image[v] = usize::MAX;
    Ok(())
}

pub fn graph_distinguishing_number(g: &Graph, opts: SearchOptions) -> Result<SolveResult> {
    let aut = automorphism_group(g, DEFAULT_VERTEX_CAP, DEFAULT_CLOSURE_CAP)?;
    Ok(distinguishing_number(&aut, opts))
}
