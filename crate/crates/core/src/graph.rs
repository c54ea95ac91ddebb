//! Simple connected graphs, their incidence columns, and the cycle machinery
//! the rest of the crate is built on.
//!
//! Vertices and edges are 0-based inside the crate. Text formats (edge lists,
//! variable labels such as `x12`) use 1-based vertex labels.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Above this vertex count `even_cycles` refuses to run without a length bound.
pub const UNBOUNDED_CYCLE_MAX_VERTICES: usize = 12;

/// A finite simple connected undirected graph with a fixed edge order.
///
/// Edge `i` corresponds to the variable `x_{i+1}` of the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_at: Vec<Option<usize>>,
}

impl Graph {
    /// Builds and validates a graph on vertices `0..n`.
    ///
    /// Endpoints of each edge are stored in increasing order; the edge order
    /// is kept as given.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let lines: Vec<usize> = (1..=edges.len()).collect();
        Self::build(n, edges, &lines)
    }

    fn build(n: usize, raw: Vec<(usize, usize)>, lines: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut edges = Vec::with_capacity(raw.len());
        let mut adj = vec![Vec::new(); n];
        let mut edge_at = vec![None; n * n];
        for (i, &(a, b)) in raw.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if a == b {
                return Err(Error::LoopDetected { line: lines[i], vertex: a + 1 });
            }
            let (u, v) = (a.min(b), a.max(b));
            if edge_at[u * n + v].is_some() {
                return Err(Error::DuplicateEdge { line: lines[i], u: u + 1, v: v + 1 });
            }
            edge_at[u * n + v] = Some(i);
            edge_at[v * n + u] = Some(i);
            adj[u].push((v, i));
            adj[v].push((u, i));
            edges.push((u, v));
        }
        let g = Graph { n, edges, adj, edge_at };
        let components = g.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    /// Parses the edge-list text format.
    ///
    /// Lines starting with `#` and blank lines are ignored. An optional
    /// header `p <n> <m>` fixes the vertex count and checks the edge count.
    /// Every other line is `<u> <v>` with 1-based labels.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "p" {
                if header.is_some() || !edges.is_empty() {
                    return Err(malformed(line_no, "header must come first and appear once"));
                }
                if tokens.len() != 3 {
                    return Err(malformed(line_no, "expected `p <n> <m>`"));
                }
                let n = parse_count(tokens[1], line_no)?;
                let m = parse_count(tokens[2], line_no)?;
                header = Some((n, m, line_no));
                continue;
            }
            if tokens.len() != 2 {
                return Err(malformed(line_no, "expected `<u> <v>`"));
            }
            let u = parse_count(tokens[0], line_no)?;
            let v = parse_count(tokens[1], line_no)?;
            if u == 0 || v == 0 {
                return Err(malformed(line_no, "vertex labels are 1-based"));
            }
            if let Some((n, _, _)) = header {
                if u > n || v > n {
                    return Err(malformed(line_no, &format!("vertex label exceeds n = {n}")));
                }
            }
            edges.push((u - 1, v - 1));
            lines.push(line_no);
        }
        let n = match header {
            Some((n, m, line_no)) => {
                if m != edges.len() {
                    return Err(malformed(
                        line_no,
                        &format!("header announces {m} edges, found {}", edges.len()),
                    ));
                }
                n
            }
            None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
        };
        Self::build(n, edges, &lines)
    }

    /// The complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, edges)
    }

    /// The complete bipartite graph with parts `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Self::new(a + b, edges)
    }

    /// The cycle `1-2-…-len-1`; the closing edge `{1,len}` comes last.
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::Hypothesis(format!("cycle length {len} < 3")));
        }
        let mut edges: Vec<_> = (0..len - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, len - 1));
        Self::new(len, edges)
    }

    /// The path `1-2-…-n`.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Neighbors of `v` together with the joining edge index.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.edge_at[u * self.n + v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn incidence_column(&self, i: usize) -> IncidenceColumn {
        IncidenceColumn { n: self.n, ends: self.edges[i] }
    }

    pub fn incidence_columns(&self) -> Vec<IncidenceColumn> {
        (0..self.m()).map(|i| self.incidence_column(i)).collect()
    }

    /// Variable label of edge `i`: `x12` while every label is a single digit,
    /// `x{3,11}` otherwise.
    pub fn edge_label(&self, i: usize) -> String {
        let (u, v) = self.edges[i];
        if self.n <= 9 {
            format!("x{}{}", u + 1, v + 1)
        } else {
            format!("x{{{},{}}}", u + 1, v + 1)
        }
    }

    /// Inverse of [`Graph::edge_label`]. Also accepts `x{u,v}` for small graphs.
    pub fn parse_edge_label(&self, label: &str) -> Option<usize> {
        let body = label.trim().strip_prefix('x')?;
        let (u, v) = if let Some(inner) = body.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            let (a, b) = inner.split_once(',')?;
            (a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)
        } else if self.n <= 9 && body.len() == 2 && body.bytes().all(|c| c.is_ascii_digit()) {
            let d = body.as_bytes();
            ((d[0] - b'0') as usize, (d[1] - b'0') as usize)
        } else {
            return None;
        };
        if u == 0 || v == 0 {
            return None;
        }
        self.edge_index(u - 1, v - 1)
    }

    /// Renders the graph in the edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Two-colors the graph by BFS from vertex 0, or returns `None` if an odd
    /// cycle exists.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        Some(Bipartition { color })
    }

    /// All even cycles, each once, sorted by length and then by the sorted
    /// list of their edge indices.
    ///
    /// `max_length` bounds the cycle length; it is mandatory for graphs with
    /// more than [`UNBOUNDED_CYCLE_MAX_VERTICES`] vertices.
    pub fn even_cycles(&self, max_length: Option<usize>) -> Result<Vec<EdgeCycle>> {
        if max_length.is_none() && self.n > UNBOUNDED_CYCLE_MAX_VERTICES {
            return Err(Error::CycleBoundRequired { max_vertices: UNBOUNDED_CYCLE_MAX_VERTICES });
        }
        let limit = max_length.unwrap_or(self.n).min(self.n);
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            let mut path = vec![s];
            let mut path_edges = Vec::new();
            on_path[s] = true;
            self.cycle_dfs(s, limit, &mut path, &mut path_edges, &mut on_path, &mut out);
            on_path[s] = false;
        }
        out.sort_by_cached_key(|c| (c.len(), c.sorted_edges()));
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        start: usize,
        limit: usize,
        path: &mut Vec<usize>,
        path_edges: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<EdgeCycle>,
    ) {
        let v = *path.last().unwrap();
        for &(w, e) in &self.adj[v] {
            if w == start {
                // Canonical orientation: second vertex smaller than the last.
                let q = path.len();
                if q >= 4 && q.is_multiple_of(2) && path[1] < path[q - 1] {
                    let mut edges = path_edges.clone();
                    edges.push(e);
                    out.push(EdgeCycle { edges, vertices: path.clone() });
                }
            } else if w > start && !on_path[w] && path.len() < limit {
                on_path[w] = true;
                path.push(w);
                path_edges.push(e);
                self.cycle_dfs(start, limit, path, path_edges, on_path, out);
                path_edges.pop();
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// Checks that `c` is a cycle of this graph.
    pub fn validate_cycle(&self, c: &EdgeCycle) -> Result<()> {
        let q = c.vertices.len();
        if q < 3 || c.edges.len() != q {
            return Err(Error::NotACycle(format!("{q} vertices and {} edges", c.edges.len())));
        }
        let mut seen = vec![false; self.n];
        for &v in &c.vertices {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotACycle(format!("vertex {} repeated or out of range", v + 1)));
            }
        }
        for k in 0..q {
            let (a, b) = (c.vertices[k], c.vertices[(k + 1) % q]);
            if self.edge_index(a, b) != Some(c.edges[k]) {
                return Err(Error::NotACycle(format!(
                    "edge {} does not join vertices {} and {}",
                    c.edges[k] + 1,
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(())
    }

    /// True iff some edge joins two non-consecutive vertices of `c`.
    pub fn cycle_has_chord(&self, c: &EdgeCycle) -> Result<bool> {
        self.validate_cycle(c)?;
        let q = c.vertices.len();
        for i in 0..q {
            for j in i + 2..q {
                if i == 0 && j == q - 1 {
                    continue;
                }
                if self.has_edge(c.vertices[i], c.vertices[j]) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Even cycles without a chord.
    pub fn chordless_even_cycles(&self, max_length: Option<usize>) -> Result<Vec<EdgeCycle>> {
        let mut out = Vec::new();
        for c in self.even_cycles(max_length)? {
            if !self.cycle_has_chord(&c)? {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Vertex 4-sets spanning a complete subgraph, in lexicographic order.
    pub fn k4_subgraphs(&self) -> Vec<[usize; 4]> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if !(self.has_edge(a, c) && self.has_edge(b, c)) {
                        continue;
                    }
                    for d in c + 1..n {
                        if self.has_edge(a, d) && self.has_edge(b, d) && self.has_edge(c, d) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Induced subgraph on `vs`, relabelled in increasing vertex order, and
    /// the original index of each of its edges.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::Empty);
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n {
                return Err(Error::VertexOutOfRange { vertex: old + 1, n: self.n });
            }
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        let mut map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if relabel[u] != usize::MAX && relabel[v] != usize::MAX {
                edges.push((relabel[u], relabel[v]));
                map.push(i);
            }
        }
        Ok((Graph::new(keep.len(), edges)?, map))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={}:", self.n, self.m())?;
        for &(u, v) in &self.edges {
            write!(f, " {}-{}", u + 1, v + 1)?;
        }
        write!(f, ")")
    }
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::Malformed { line, reason: reason.to_string() }
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| malformed(line, &format!("`{tok}` is not a nonnegative integer")))
}

/// Column `a_i` of the incidence matrix: the indicator vector of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IncidenceColumn {
    pub n: usize,
    pub ends: (usize, usize),
}

impl IncidenceColumn {
    pub fn entries(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        v[self.ends.0] = 1;
        v[self.ends.1] = 1;
        v
    }
}

/// Result of a successful bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    color: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.color[v]
    }

    /// The two color classes; the first contains vertex 0.
    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        let (a, b): (Vec<usize>, Vec<usize>) = (0..self.color.len()).partition(|&v| self.color[v] == 0);
        (a, b)
    }
}

/// A cycle given by its edges; `edges[k]` joins `vertices[k]` and
/// `vertices[k + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeCycle {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl EdgeCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn sorted_edges(&self) -> Vec<usize> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }
}
