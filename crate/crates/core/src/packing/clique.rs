//! Exact maximum clique by branch and bound with a greedy colouring bound.

use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .position(|&w| w != 0)
            .map(|wi| wi * 64 + self.0[wi].trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Undirected simple graph on `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Bitset>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn from_predicate(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.adj[i].iter().collect()
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_predicate(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &u)| vertices[a + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Vertices of the best clique, sorted.
    pub clique: Vec<usize>,
    /// Branch nodes expanded.
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    target: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    /// Greedy sequential colouring of `p`; vertices come back in colour
    /// order with their colour numbers (1-based).
    fn colour_sort(&self, p: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut candidates = uncoloured.clone();
            while let Some(v) = candidates.first() {
                uncoloured.remove(v);
                candidates.remove(v);
                candidates = Bitset(
                    candidates
                        .0
                        .iter()
                        .zip(&self.g.adj[v].0)
                        .map(|(c, a)| c & !a)
                        .collect(),
                );
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bitset) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let (order, colours) = self.colour_sort(&p);
        for idx in (0..order.len()).rev() {
            if r.len() + colours[idx] <= self.best.len() || self.done() {
                return Ok(());
            }
            let v = order[idx];
            r.push(v);
            let next = p.and(&self.g.adj[v]);
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next)?;
            }
            r.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// Maximum clique of `g`, or the first clique of size `target` when one is
/// given. Exceeding `budget` branch nodes is an error, never a silent
/// approximation.
pub fn max_clique(g: &Graph, budget: u64, target: Option<usize>) -> Result<CliqueOutcome> {
    let n = g.len();
    // vertices in decreasing degree order, ties by label
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let h = g.induced(&perm);
    let mut all = Bitset::new(n);
    for v in 0..n {
        all.insert(v);
    }
    let mut search = Search {
        g: &h,
        best: Vec::new(),
        nodes: 0,
        budget,
        target,
    };
    if n > 0 {
        search.expand(&mut Vec::new(), all)?;
    }
    let mut clique: Vec<usize> = search.best.iter().map(|&v| perm[v]).collect();
    clique.sort_unstable();
    Ok(CliqueOutcome {
        clique,
        nodes: search.nodes,
    })
}

struct FirstSearch<'a> {
    g: &'a Graph,
    k: usize,
    nodes: u64,
    budget: u64,
}

impl FirstSearch<'_> {
    fn colour_bound(&self, p: &Bitset) -> usize {
        let mut uncoloured = p.clone();
        let mut colours = 0;
        while !uncoloured.is_empty() {
            colours += 1;
            let mut candidates = uncoloured.clone();
            while let Some(v) = candidates.first() {
                uncoloured.remove(v);
                candidates.remove(v);
                for (c, a) in candidates.0.iter_mut().zip(&self.g.adj[v].0) {
                    *c &= !a;
                }
            }
        }
        colours
    }

    fn extend(&mut self, r: &mut Vec<usize>, p: Bitset) -> Result<bool> {
        if r.len() == self.k {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        if r.len() + self.colour_bound(&p) < self.k {
            return Ok(false);
        }
        let mut rest = p;
        while let Some(v) = rest.first() {
            rest.remove(v);
            r.push(v);
            if self.extend(r, rest.and(&self.g.adj[v]))? {
                return Ok(true);
            }
            r.pop();
        }
        Ok(false)
    }
}

/// Lexicographically least `k`-clique containing `pin` (as a sorted vertex
/// list, among cliques whose other vertices exceed `pin`), if any.
pub fn first_clique_through(g: &Graph, pin: usize, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Ok(Some(vec![]));
    }
    let mut p = g.adj[pin].clone();
    for v in 0..=pin {
        p.remove(v);
    }
    let mut search = FirstSearch {
        g,
        k,
        nodes: 0,
        budget,
    };
    let mut r = vec![pin];
    Ok(search.extend(&mut r, p)?.then_some(r))
}

/// Maximum clique through vertex `pin`, searched inside its neighbourhood.
pub fn max_clique_through(
    g: &Graph,
    pin: usize,
    budget: u64,
    target: Option<usize>,
) -> Result<CliqueOutcome> {
    let nbrs = g.neighbors(pin);
    let sub = g.induced(&nbrs);
    let inner = max_clique(&sub, budget, target.map(|t| t.saturating_sub(1)))?;
    let mut clique: Vec<usize> = inner.clique.iter().map(|&v| nbrs[v]).collect();
    clique.push(pin);
    clique.sort_unstable();
    Ok(CliqueOutcome {
        clique,
        nodes: inner.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_max(g: &Graph) -> usize {
        let n = g.len();
        (0u32..1 << n)
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs() {
        let k4 = Graph::from_predicate(4, |_, _| true);
        assert_eq!(max_clique(&k4, 1000, None).unwrap().clique, vec![0, 1, 2, 3]);
        let c5 = Graph::from_predicate(5, |i, j| (j - i) % 5 == 1 || (j - i) % 5 == 4);
        assert_eq!(max_clique(&c5, 1000, None).unwrap().clique.len(), 2);
        let empty = Graph::new(3);
        assert_eq!(max_clique(&empty, 1000, None).unwrap().clique.len(), 1);
        assert!(max_clique(&Graph::new(0), 1000, None).unwrap().clique.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::from_predicate(40, |i, j| (i * 7 + j * 3) % 5 != 0);
        assert_eq!(
            max_clique(&g, 1, None),
            Err(Error::BudgetExceeded { budget: 1 })
        );
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..12, seed in any::<u64>()) {
            let g = Graph::from_predicate(n, |i, j| {
                (seed.rotate_left((i * 13 + j) as u32) ^ (i as u64 * 0x9e37)) & 3 != 0
            });
            let out = max_clique(&g, 1 << 20, None).unwrap();
            prop_assert!(g.is_clique(&out.clique));
            prop_assert_eq!(out.clique.len(), brute_max(&g));
        }
    }
}
