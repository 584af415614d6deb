//! Labeled acyclic digraphs on `{1..n}`, formal combinations of them, simple
//! undirected cycles and cyclic inclusion-exclusion elements.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Largest `n` accepted by [`enumerate_acyclic`] and [`enumerate_bipartite`].
pub const ENUMERATION_CAP: usize = 5;

pub type Edge = (usize, usize);

/// Directed graph on `{1..n}` with a sorted, duplicate-free edge list.
///
/// Graphs built with [`Digraph::new`] are acyclic; [`Digraph::new_unchecked`]
/// skips that check (used for edge-reversed complete bipartite graphs).
/// Ordering compares `n` first, then the sorted edge lists lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
}

fn validate_edges(n: usize, edges: &[Edge]) -> Result<()> {
    for &(u, v) in edges {
        if u == v {
            return Err(Error::Parse(format!("loop edge ({u},{u})")));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::Parse(format!("edge ({u},{v}) outside 1..{n}")));
        }
    }
    Ok(())
}

/// Topological-sort check. Fails on loops and out-of-range endpoints.
pub fn is_acyclic(n: usize, edges: &[Edge]) -> Result<bool> {
    validate_edges(n, edges)?;
    Ok(acyclic_unchecked(n, edges))
}

fn acyclic_unchecked(n: usize, edges: &[Edge]) -> bool {
    let mut indeg = vec![0usize; n + 1];
    let mut out = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        indeg[v] += 1;
        out[u].push(v);
    }
    let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen == n
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let g = Self::new_unchecked(n, edges)?;
        if !acyclic_unchecked(n, &g.edges) {
            return Err(Error::NotAcyclic);
        }
        Ok(g)
    }

    /// Same validation as [`Digraph::new`] except acyclicity.
    pub fn new_unchecked(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        let edges: Vec<Edge> = set.into_iter().collect();
        validate_edges(n, &edges)?;
        Ok(Digraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    pub fn is_acyclic(&self) -> bool {
        acyclic_unchecked(self.n, &self.edges)
    }

    /// Undirected adjacency.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == u).map(|e| e.1).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == v).map(|e| e.0).collect()
    }

    /// Undirected neighbors, sorted.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == u { Some(b) } else if b == u { Some(a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == u || b == u).count()
    }

    pub fn with_edges(&self, extra: &[Edge]) -> Result<Self> {
        Digraph::new(self.n, self.edges.iter().chain(extra).copied())
    }

    /// Removing edges keeps a graph acyclic, so this never fails.
    pub fn without_edges(&self, removed: &[Edge]) -> Self {
        Digraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| !removed.contains(e)).copied().collect(),
        }
    }

    /// Image under `i ↦ perm[i-1]`, where `perm` is a permutation of `1..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges: Vec<Edge> = self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        edges.sort_unstable();
        Digraph { n: self.n, edges }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Self {
        let s = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + s, v + s)));
        edges.sort_unstable();
        Digraph { n: s + other.n, edges }
    }

    /// Connected components of the undirected version, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Whether the undirected version has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Text format: first line `n`, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the text format; blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let g = Self::parse_text_unchecked(text)?;
        if !g.is_acyclic() {
            return Err(Error::NotAcyclic);
        }
        Ok(g)
    }

    fn parse_text_unchecked(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph description".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad edge line {line:?}")));
            match nums.as_slice() {
                [a, b] => edges.push((parse(a)?, parse(b)?)),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            }
        }
        Digraph::new_unchecked(n, edges)
    }

    /// JSON edge list `[[u,v],...]`.
    pub fn edges_json(&self) -> Value {
        Value::Array(self.edges.iter().map(|&(u, v)| json!([u, v])).collect())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}>{v}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Digraph::parse_text(s)
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (1..=n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

type PermutationTable = std::sync::Arc<Vec<Vec<usize>>>;

fn perm_cache(n: usize) -> PermutationTable {
    static CACHE: OnceLock<Mutex<HashMap<usize, PermutationTable>>> = OnceLock::new();
    let mut map = CACHE.get_or_init(Default::default).lock().expect("permutation cache");
    map.entry(n).or_insert_with(|| std::sync::Arc::new(permutations(n))).clone()
}

/// Minimum relabeling over all of `S_n` in the graph order. Results are
/// cached; isomorphic graphs have identical canonical forms.
pub fn canonical_label(g: &Digraph) -> Digraph {
    static CACHE: OnceLock<Mutex<HashMap<Digraph, Digraph>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("canonical cache").get(g) {
        return c.clone();
    }
    let best = perm_cache(g.n)
        .iter()
        .map(|p| g.relabel(p))
        .min()
        .unwrap_or_else(|| g.clone());
    cache.lock().expect("canonical cache").insert(g.clone(), best.clone());
    best
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n == b.n && a.edges.len() == b.edges.len() && canonical_label(a) == canonical_label(b)
}

/// Every labeled acyclic digraph on `{1..n}`, in graph order.
pub fn enumerate_acyclic(n: usize) -> Result<Vec<Digraph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "acyclic enumeration", size: n, cap: ENUMERATION_CAP });
    }
    let pairs: Vec<Edge> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut edges = Vec::new();
        for &(i, j) in &pairs {
            match c % 3 {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
            c /= 3;
        }
        edges.sort_unstable();
        if acyclic_unchecked(n, &edges) {
            out.push(Digraph { n, edges });
        }
    }
    out.sort();
    Ok(out)
}

/// Split of the vertices into sources `V` and targets `W` with all edges in
/// `V × W`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bipartition {
    left: BTreeSet<usize>,
    right: BTreeSet<usize>,
}

impl Bipartition {
    /// Checks that `left ⊔ right = {1..n}` and every edge goes left to right.
    pub fn new(g: &Digraph, left: BTreeSet<usize>, right: BTreeSet<usize>) -> Result<Self> {
        if !left.is_disjoint(&right) || left.len() + right.len() != g.n() || left.union(&right).any(|&x| x == 0 || x > g.n())
        {
            return Err(Error::InvalidBipartition(format!("{left:?} and {right:?} do not partition 1..{}", g.n())));
        }
        for &(u, v) in g.edges() {
            if !left.contains(&u) || !right.contains(&v) {
                return Err(Error::InvalidBipartition(format!("edge ({u},{v}) does not go from V to W")));
            }
        }
        Ok(Bipartition { left, right })
    }

    /// The canonical split: `V` holds the sources and isolated vertices, `W`
    /// the vertices with an incoming edge.
    pub fn canonical(g: &Digraph) -> Result<Self> {
        let right: BTreeSet<usize> = g.edges().iter().map(|e| e.1).collect();
        if let Some(&(u, v)) = g.edges().iter().find(|e| right.contains(&e.0)) {
            return Err(Error::NotBipartite(format!("path through ({u},{v})")));
        }
        let left = (1..=g.n()).filter(|v| !right.contains(v)).collect();
        Ok(Bipartition { left, right })
    }

    pub fn left(&self) -> &BTreeSet<usize> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<usize> {
        &self.right
    }
}

/// Whether every edge starts at a source and ends at a sink.
pub fn is_bipartite(g: &Digraph) -> bool {
    Bipartition::canonical(g).is_ok()
}

/// Labeled bipartite digraphs on `{1..n}`: each is produced once, with its
/// canonical bipartition (every vertex of `W` has an incoming edge).
pub fn enumerate_bipartite(n: usize) -> Result<Vec<Digraph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "bipartite enumeration", size: n, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let left: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let right: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) == 0).collect();
        let pairs: Vec<Edge> = left.iter().flat_map(|&v| right.iter().map(move |&w| (v, w))).collect();
        for emask in 0u64..(1 << pairs.len()) {
            let edges: Vec<Edge> =
                pairs.iter().enumerate().filter(|(i, _)| emask & (1 << i) != 0).map(|(_, &e)| e).collect();
            if right.iter().all(|w| edges.iter().any(|e| e.1 == *w)) {
                let mut edges = edges;
                edges.sort_unstable();
                out.push(Digraph { n, edges });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A simple cycle of the undirected version of a host graph, traversed
/// `x_1, x_2, ..., x_k, x_1`. Traversed pairs that are edges in the direction
/// of travel form `C⁺`, the others `C⁻` (both stored as host-graph edges).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UndirectedCycle {
    vertices: Vec<usize>,
    plus: Vec<Edge>,
    minus: Vec<Edge>,
}

impl UndirectedCycle {
    /// Builds the cycle with the given traversal; fails unless the vertices
    /// are distinct, at least three, and consecutive ones are adjacent in `g`.
    pub fn from_vertices(g: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::NotACycle(format!("{vertices:?} has fewer than 3 vertices")));
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != k {
            return Err(Error::NotACycle(format!("{vertices:?} repeats a vertex")));
        }
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if g.has_edge(a, b) {
                plus.push((a, b));
            } else if g.has_edge(b, a) {
                minus.push((b, a));
            } else {
                return Err(Error::NotACycle(format!("{a} and {b} are not adjacent")));
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        Ok(UndirectedCycle { vertices, plus, minus })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn plus_edges(&self) -> &[Edge] {
        &self.plus
    }

    pub fn minus_edges(&self) -> &[Edge] {
        &self.minus
    }

    /// Same cycle traversed the other way (swaps `C⁺` and `C⁻`).
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices[1..].reverse();
        UndirectedCycle { vertices, plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Whether every traversed pair is still an edge of `g` with the same
    /// orientation.
    pub fn lies_in(&self, g: &Digraph) -> bool {
        self.plus.iter().chain(&self.minus).all(|&(u, v)| g.has_edge(u, v))
    }
}

impl fmt::Display for UndirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", vs.join(","))
    }
}

/// Simple cycles of the undirected version of `g` with at most `max_len`
/// vertices. Each cycle appears once, starting at its smallest vertex with
/// the second vertex smaller than the last.
pub fn undirected_cycles(g: &Digraph, max_len: usize) -> Vec<UndirectedCycle> {
    let adj: Vec<Vec<usize>> = (0..=g.n()).map(|v| if v == 0 { Vec::new() } else { g.neighbors(v) }).collect();
    let mut out = Vec::new();
    for start in 1..=g.n() {
        let mut path = vec![start];
        let mut on_path = vec![false; g.n() + 1];
        on_path[start] = true;
        extend_cycles(g, &adj, start, max_len, &mut path, &mut on_path, &mut out);
    }
    out
}

fn extend_cycles(
    g: &Digraph,
    adj: &[Vec<usize>],
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<UndirectedCycle>,
) {
    let last = *path.last().expect("nonempty path");
    for &next in &adj[last] {
        if next == start && path.len() >= 3 && path[1] < last {
            out.push(UndirectedCycle::from_vertices(g, path.clone()).expect("closed walk is a cycle"));
        }
        if next > start && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            extend_cycles(g, adj, start, max_len, path, on_path, out);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Cyclic inclusion-exclusion `Σ_{D ⊆ C⁺} (-1)^{|D|} (G ∖ D)`.
pub fn cie<T: Coeff>(g: &Digraph, c: &UndirectedCycle) -> Result<GraphElement<T>> {
    if !c.lies_in(g) {
        return Err(Error::NotACycle(format!("{c} is not a cycle of {g}")));
    }
    let plus = c.plus_edges();
    let mut out = GraphElement::zero(g.n());
    for mask in 0u64..(1 << plus.len()) {
        let removed: Vec<Edge> =
            plus.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        out.add_term(g.without_edges(&removed), T::sign(removed.len()));
    }
    Ok(out)
}

/// Formal linear combination of labeled digraphs.
///
/// Elements built with [`GraphElement::zero`] are homogeneous: every graph
/// has the declared vertex count. [`GraphElement::mixed`] lifts that
/// restriction (character and cumulant lifts mix vertex counts).
#[derive(Clone, PartialEq, Debug)]
pub struct GraphElement<T> {
    degree: Option<usize>,
    terms: BTreeMap<Digraph, T>,
}

impl<T: Coeff> GraphElement<T> {
    pub fn zero(degree: usize) -> Self {
        GraphElement { degree: Some(degree), terms: BTreeMap::new() }
    }

    pub fn mixed() -> Self {
        GraphElement { degree: None, terms: BTreeMap::new() }
    }

    pub fn from_graph(g: Digraph) -> Self {
        let mut v = Self::zero(g.n());
        v.terms.insert(g, T::one());
        v
    }

    /// The common vertex count, `None` for mixed elements.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Digraph, T> {
        &self.terms
    }

    pub fn coeff(&self, g: &Digraph) -> T {
        self.terms.get(g).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Splits into homogeneous parts keyed by vertex count.
    pub fn graded_parts(&self) -> BTreeMap<usize, GraphElement<T>> {
        let mut out: BTreeMap<usize, GraphElement<T>> = BTreeMap::new();
        for (g, c) in &self.terms {
            out.entry(g.n()).or_insert_with(|| Self::zero(g.n())).add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, g: Digraph, c: T) {
        debug_assert!(self.degree.is_none_or(|d| d == g.n()));
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(x) => {
                let nx = x.clone() + c;
                if nx.is_zero() {
                    self.terms.remove(&g);
                } else {
                    *x = nx;
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &T) -> Result<()> {
        if let (Some(a), Some(b)) = (self.degree, other.degree) {
            if a != b {
                return Err(Error::DegreeMismatch { expected: a, found: b });
            }
        }
        if self.degree.is_some() && other.degree.is_none() {
            if let Some(g) = other.terms.keys().find(|g| Some(g.n()) != self.degree) {
                return Err(Error::DegreeMismatch { expected: self.degree.unwrap_or(0), found: g.n() });
            }
        }
        for (g, v) in &other.terms {
            self.add_term(g.clone(), c.clone() * v.clone());
        }
        Ok(())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-T::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = GraphElement { degree: self.degree, terms: BTreeMap::new() };
        for (g, v) in &self.terms {
            out.add_term(g.clone(), c.clone() * v.clone());
        }
        out
    }

    /// Product in the graph algebra: bilinear extension of disjoint union.
    pub fn disjoint_product(&self, other: &Self) -> Self {
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let mut out = GraphElement { degree, terms: BTreeMap::new() };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.disjoint_union(b), x.clone() * y.clone());
            }
        }
        out
    }

    /// `{"degree":n,"terms":[{"edges":[[1,2]],"coeff":"-1"}]}`; mixed
    /// elements carry `"degree":null` and an `"n"` field per term.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(g, c)| match self.degree {
                Some(_) => json!({"edges": g.edges_json(), "coeff": c.to_string()}),
                None => json!({"n": g.n(), "edges": g.edges_json(), "coeff": c.to_string()}),
            })
            .collect();
        json!({"degree": self.degree, "terms": terms})
    }
}

impl<T: Coeff> fmt::Display for GraphElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){g}")?;
        }
        Ok(())
    }
}
