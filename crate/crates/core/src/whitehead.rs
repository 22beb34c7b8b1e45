//! Whitehead graphs of linear and cyclic words.
//!
//! The graph has one vertex per letter `x_i^{±1}`. Every adjacent pair `a·b`
//! in a word contributes the edge `{a, b⁻¹}`. A linear word gets no edge for
//! the wrap-around pair (the external edge); a cyclic word does.
//!
//! Connectivity questions are answered on the support, the vertices that
//! carry at least one edge. A word that never mentions `x_3` is not
//! penalized for the two isolated vertices `x3`, `x3'`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::words::{CyclicWord, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadGraph {
    rank: usize,
    /// Unordered pairs stored with the smaller letter first.
    edges: BTreeMap<(Letter, Letter), usize>,
}

impl WhiteheadGraph {
    pub fn empty(rank: usize) -> WhiteheadGraph {
        WhiteheadGraph { rank, edges: BTreeMap::new() }
    }

    /// Graph of a linear word, without the external edge.
    pub fn of_word(w: &Word) -> WhiteheadGraph {
        let mut g = WhiteheadGraph::empty(w.rank());
        for pair in w.letters().windows(2) {
            g.add_edge(pair[0], pair[1].inverse());
        }
        g
    }

    /// Graph of a cyclic word, external edge included.
    pub fn of_cyclic(c: &CyclicWord) -> WhiteheadGraph {
        let w = c.as_word();
        let mut g = WhiteheadGraph::of_word(w);
        if let (Some(first), Some(last)) = (w.first(), w.last()) {
            g.add_edge(last, first.inverse());
        }
        g
    }

    pub fn add_edge(&mut self, a: Letter, b: Letter) {
        let key = if a <= b { (a, b) } else { (b, a) };
        *self.edges.entry(key).or_insert(0) += 1;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edge multiset, sorted.
    pub fn edges(&self) -> &BTreeMap<(Letter, Letter), usize> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn degree(&self, v: Letter) -> usize {
        self.edges
            .iter()
            .map(|(&(a, b), &m)| m * (usize::from(a == v) + usize::from(b == v)))
            .sum()
    }

    /// Vertices of positive degree.
    pub fn support(&self) -> BTreeSet<Letter> {
        self.edges.keys().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// Whether `other` contains every edge of `self` at least as often.
    pub fn is_subgraph_of(&self, other: &WhiteheadGraph) -> bool {
        self.edges
            .iter()
            .all(|(e, &m)| other.edges.get(e).is_some_and(|&n| n >= m))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); 2 * self.rank];
        for &(a, b) in self.edges.keys() {
            if a != b {
                adj[a.slot()].push(b.slot());
                adj[b.slot()].push(a.slot());
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let support = self.support();
        let Some(start) = support.first() else {
            return false;
        };
        let adj = self.adjacency();
        let mut seen = vec![false; 2 * self.rank];
        let mut stack = vec![start.slot()];
        seen[start.slot()] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == support.len()
    }

    /// Articulation points of the support, by DFS low-link on the underlying
    /// simple graph. Loops and edge multiplicities are irrelevant here.
    pub fn cut_vertices(&self) -> BTreeSet<Letter> {
        let adj = self.adjacency();
        let n = adj.len();
        let mut state = LowLink {
            adj: &adj,
            order: vec![usize::MAX; n],
            low: vec![0; n],
            clock: 0,
            cut: vec![false; n],
        };
        for (v, neighbours) in adj.iter().enumerate() {
            if state.order[v] == usize::MAX && !neighbours.is_empty() {
                state.visit(v, usize::MAX);
            }
        }
        (0..n)
            .filter(|&v| state.cut[v])
            .map(Letter::from_slot)
            .collect()
    }

    /// Connected, nonempty support and no cut vertex. A single edge counts.
    pub fn is_two_connected(&self) -> bool {
        self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Deterministic Graphviz rendering. All `2n` vertices are declared;
    /// parallel edges are repeated.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph whitehead {\n");
        for v in Letter::all(self.rank) {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (&(a, b), &m) in &self.edges {
            for _ in 0..m {
                let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
            }
        }
        out.push_str("}\n");
        out
    }
}

struct LowLink<'a> {
    adj: &'a [Vec<usize>],
    order: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    cut: Vec<bool>,
}

impl LowLink<'_> {
    // Depth is bounded by 2n, so plain recursion is fine.
    fn visit(&mut self, v: usize, parent: usize) {
        self.order[v] = self.clock;
        self.low[v] = self.clock;
        self.clock += 1;
        let mut children = 0;
        let adj = self.adj;
        for &u in &adj[v] {
            if u == parent {
                continue;
            }
            if self.order[u] == usize::MAX {
                children += 1;
                self.visit(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if parent != usize::MAX && self.low[u] >= self.order[v] {
                    self.cut[v] = true;
                }
            } else {
                self.low[v] = self.low[v].min(self.order[u]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.cut[v] = true;
        }
    }
}
