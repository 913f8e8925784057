use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Undirected simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
    /// Descriptor name for graphs built from a [`GraphSpec`].
    pub name: Option<String>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) outside 0..{}",
                    u, v, n
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {}", u)));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "repeated edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: es,
            adj,
            labels: None,
            name: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Hop distances from `s`; `None` for unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.into());
        self
    }
}

/// Named graph families and the literal edge-list form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    /// `n` vertices, `n - 1` edges.
    Path(usize),
    Bipyr(usize),
    Pack(usize, usize),
    Complete(usize),
    Y9,
    H12,
    Kk4,
    Grid2x3,
    EdgeList {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphSpec {
    pub fn name(&self) -> String {
        match self {
            GraphSpec::Cycle(n) => format!("cycle:{}", n),
            GraphSpec::Path(n) => format!("path:{}", n),
            GraphSpec::Bipyr(k) => format!("bipyr:{}", k),
            GraphSpec::Pack(k, n) => format!("pack:{}:{}", k, n),
            GraphSpec::Complete(n) => format!("complete:{}", n),
            GraphSpec::Y9 => "y9".into(),
            GraphSpec::H12 => "h12".into(),
            GraphSpec::Kk4 => "kk4".into(),
            GraphSpec::Grid2x3 => "grid2x3".into(),
            GraphSpec::EdgeList { .. } => "edge-list".into(),
        }
    }
}

const Y9_EDGES: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (2, 8),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
];

const H12_EDGES: [(usize, usize); 11] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (2, 10),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (7, 11),
    (8, 9),
];

/// Triangle `{1, 2, 3}` with the pendant edge `{0, 1}`.
const KK4_EDGES: [(usize, usize); 4] = [(0, 1), (1, 2), (1, 3), (2, 3)];

/// The six-vertex graph whose squared-distance matrix has first row
/// `0, 1, 1, 4, 4, 9`; it carries two diagonals beyond the plain grid.
const GRID2X3_EDGES: [(usize, usize); 8] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (3, 5),
    (4, 5),
];

/// Layout of the vertices of `Pack(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackLayout {
    pub inner_hub: usize,
    pub outer_hub: usize,
    /// Rim circles tangent to both hubs, in cyclic order.
    pub rim: Vec<usize>,
    /// `(B, C)` pairs: `B` touches the inner hub, `C` the outer one.
    pub pairs: Vec<(usize, usize)>,
}

/// `Pack(k, n)`: vertex 0 and 1 are the hubs; a rim cycle of length
/// `kn + k` runs around them and every `(n + 1)`-th rim position is split
/// into an adjacent pair, one member per hub.
pub fn pack_layout(k: usize, n: usize) -> Result<(Graph, PackLayout)> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidGraph("pack parameters must be >= 1".into()));
    }
    let len = k * n + k;
    if len < 3 {
        return Err(Error::InvalidGraph(
            "pack rim needs at least 3 positions".into(),
        ));
    }
    let mut next = 2;
    let mut slots: Vec<(usize, Option<usize>)> = Vec::with_capacity(len);
    let mut layout = PackLayout {
        inner_hub: 0,
        outer_hub: 1,
        rim: Vec::new(),
        pairs: Vec::new(),
    };
    for j in 0..len {
        if j % (n + 1) == n {
            slots.push((next, Some(next + 1)));
            layout.pairs.push((next, next + 1));
            next += 2;
        } else {
            slots.push((next, None));
            layout.rim.push(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    let members = |s: &(usize, Option<usize>)| -> Vec<usize> {
        match *s {
            (a, Some(b)) => vec![a, b],
            (a, None) => vec![a],
        }
    };
    for (j, s) in slots.iter().enumerate() {
        match *s {
            (a, None) => {
                edges.push((0, a));
                edges.push((1, a));
            }
            (b, Some(c)) => {
                edges.push((0, b));
                edges.push((1, c));
                edges.push((b, c));
            }
        }
        let t = &slots[(j + 1) % len];
        for u in members(s) {
            for v in members(t) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(next, &edges)?;
    Ok((g, layout))
}

pub fn build_graph(spec: &GraphSpec) -> Result<Graph> {
    let g = match *spec {
        GraphSpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidGraph("cycle needs n >= 3".into()));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)?
        }
        GraphSpec::Path(n) => {
            if n < 1 {
                return Err(Error::InvalidGraph("path needs n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)?
        }
        GraphSpec::Bipyr(k) => {
            if k < 3 {
                return Err(Error::InvalidGraph("bipyr needs k >= 3".into()));
            }
            let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            for i in 0..k {
                edges.push((k, i));
                edges.push((k + 1, i));
            }
            Graph::new(k + 2, &edges)?
        }
        GraphSpec::Pack(k, n) => pack_layout(k, n)?.0,
        GraphSpec::Complete(n) => {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Graph::new(n, &edges)?
        }
        GraphSpec::Y9 => Graph::new(9, &Y9_EDGES)?,
        GraphSpec::H12 => Graph::new(12, &H12_EDGES)?,
        GraphSpec::Kk4 => Graph::new(4, &KK4_EDGES)?,
        GraphSpec::Grid2x3 => Graph::new(6, &GRID2X3_EDGES)?,
        GraphSpec::EdgeList { n, ref edges } => Graph::new(n, edges)?,
    };
    Ok(g.with_name(&spec.name()))
}
