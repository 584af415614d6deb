//! Rewriting modulo cyclic inclusion-exclusion: every acyclic graph is
//! congruent to a combination of canonical graphs `G_I`, every bipartite
//! graph to a combination of `B_(I,J)`. Also kernel membership and the rank
//! of the CIE span.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::bipartite::graph_bij;
use crate::digraph::{
    cie, enumerate_acyclic, enumerate_bipartite, undirected_cycles, Bipartition, Digraph, Edge,
    GraphElement,
};
use crate::error::{Error, Result};
use crate::gamma::{gamma_nc_vec, graph_gi};
use crate::linalg::Echelon;
use crate::scalar::Coeff;
use crate::setcomp::{SemiLengthView, SetComposition};
use crate::Rational;

/// Largest `n` accepted by [`cie_span_rank`].
pub const KERNEL_RANK_CAP: usize = 4;

/// Family the reduction rewrites into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Target {
    /// Canonical graphs `G_I`.
    Canonical,
    /// Bipartite canonical graphs `B_(I,J)`.
    Bipartite,
}

/// Which rewrite fired on a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rule {
    /// Already in the target family.
    Stop,
    /// Adds the missing edge `(x, z)` of a path `x → y → z`.
    CloseTransitively(Edge),
    /// `x ∼ y ∼ z` with an edge `x → z`: adds `(x, y)` and `(y, z)`.
    SplitIncomparable(usize, usize, usize),
    /// Edges `(v, w)`, `(v', w')` with non-edges `(v, w')`, `(v', w)`: adds
    /// both non-edges.
    CrossNeighborhoods(usize, usize, usize, usize),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Stop => f.write_str("stop"),
            Rule::CloseTransitively((x, z)) => write!(f, "close {x}->{z}"),
            Rule::SplitIncomparable(x, y, z) => write!(f, "split {x}~{y}~{z}"),
            Rule::CrossNeighborhoods(v, w, v2, w2) => write!(f, "cross ({v},{w}) ({v2},{w2})"),
        }
    }
}

/// One rewrite: the graph, the rule applied and the graphs it was replaced by
/// (with coefficients).
#[derive(Clone, PartialEq, Debug)]
pub struct RewriteStep {
    pub graph: Digraph,
    pub rule: Rule,
    pub replacement: Vec<(Digraph, i64)>,
}

/// Returns `I` with `G_I = g`, or `None` if `g` is not of that form (it must
/// be transitive with incomparability an equivalence relation).
pub fn identify_gi(g: &Digraph) -> Option<SetComposition> {
    let n = g.n();
    let comparable = |a: usize, b: usize| g.has_edge(a, b) || g.has_edge(b, a);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; n + 1];
    for x in 1..=n {
        if seen[x] {
            continue;
        }
        let class: Vec<usize> = (x..=n).filter(|&y| y == x || !comparable(x, y)).collect();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class);
    }
    // classes ordered by number of incoming edges
    classes.sort_by_key(|c| g.in_neighbors(c[0]).len());
    let i = SetComposition::from_blocks(classes).ok()?;
    (graph_gi(&i) == *g).then_some(i)
}

/// Returns the view with `B_(I,J) = b`, or `None`.
pub fn identify_bij(b: &Digraph) -> Option<SemiLengthView> {
    let bip = Bipartition::canonical(b).ok()?;
    let mut groups: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    for &v in bip.left() {
        groups.entry(b.out_neighbors(v).into_iter().collect()).or_default().push(v);
    }
    let mut groups: Vec<(BTreeSet<usize>, Vec<usize>)> = groups.into_iter().collect();
    groups.sort_by_key(|(nb, _)| std::cmp::Reverse(nb.len()));
    if groups.windows(2).any(|p| !p[1].0.is_subset(&p[0].0)) {
        return None;
    }
    let mut i_blocks = Vec::new();
    let mut j_blocks = Vec::new();
    for (k, (nb, vs)) in groups.iter().enumerate() {
        let next: BTreeSet<usize> = groups.get(k + 1).map(|g| g.0.clone()).unwrap_or_default();
        i_blocks.push(vs.clone());
        j_blocks.push(nb.difference(&next).copied().collect());
    }
    if i_blocks.is_empty() {
        // no vertices at all
        return SemiLengthView::new(Vec::new(), Vec::new()).ok();
    }
    let view = SemiLengthView::new(i_blocks, j_blocks).ok()?;
    (graph_bij(&view) == *b).then_some(view)
}

fn transitivity_defect(g: &Digraph) -> Option<Edge> {
    let n = g.n();
    for x in 1..=n {
        for z in 1..=n {
            if x == z || g.has_edge(x, z) {
                continue;
            }
            if (1..=n).any(|y| g.has_edge(x, y) && g.has_edge(y, z)) {
                return Some((x, z));
            }
        }
    }
    None
}

fn incomparability_defect(g: &Digraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let inc = |a: usize, b: usize| a != b && !g.has_edge(a, b) && !g.has_edge(b, a);
    for x in 1..=n {
        for y in 1..=n {
            if !inc(x, y) {
                continue;
            }
            for z in 1..=n {
                if inc(y, z) && g.has_edge(x, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn crossing_witness(b: &Digraph) -> Option<(usize, usize, usize, usize)> {
    let edges = b.edges();
    for &(v, w) in edges {
        for &(v2, w2) in edges {
            if v != v2 && w != w2 && !b.has_edge(v, w2) && !b.has_edge(v2, w) {
                return Some((v, w, v2, w2));
            }
        }
    }
    None
}

/// Memoized rewriting engine. Results depend only on the input graph, so a
/// reducer may be reused across calls or cloned per worker thread.
#[derive(Clone, Debug)]
pub struct Reducer<T> {
    target: Target,
    memo: HashMap<Digraph, GraphElement<T>>,
    trace: Option<Vec<RewriteStep>>,
}

impl<T: Coeff> Reducer<T> {
    pub fn new(target: Target) -> Self {
        Reducer { target, memo: HashMap::new(), trace: None }
    }

    /// Also records every rewrite step (each graph once, thanks to memoization).
    pub fn with_trace(target: Target) -> Self {
        Reducer { target, memo: HashMap::new(), trace: Some(Vec::new()) }
    }

    pub fn trace(&self) -> &[RewriteStep] {
        self.trace.as_deref().unwrap_or(&[])
    }

    /// Rewrites `g` into the target family.
    pub fn reduce(&mut self, g: &Digraph) -> Result<GraphElement<T>> {
        if self.target == Target::Bipartite {
            Bipartition::canonical(g)?;
        }
        Ok(self.reduce_inner(g))
    }

    pub fn reduce_vec(&mut self, v: &GraphElement<T>) -> Result<GraphElement<T>> {
        let mut out = match v.degree() {
            Some(d) => GraphElement::zero(d),
            None => GraphElement::mixed(),
        };
        for (g, c) in v.terms() {
            let r = self.reduce(g)?;
            out.add_scaled(&r, c)?;
        }
        Ok(out)
    }

    fn step(&self, g: &Digraph) -> (Rule, Vec<(Digraph, i64)>) {
        match self.target {
            Target::Canonical => {
                if let Some((x, z)) = transitivity_defect(g) {
                    let g0 = g.with_edges(&[(x, z)]).expect("closing a path keeps acyclicity");
                    return (Rule::CloseTransitively((x, z)), vec![(g0, 1)]);
                }
                if let Some((x, y, z)) = incomparability_defect(g) {
                    let g0 = g.with_edges(&[(x, y), (y, z)]).expect("y is incomparable to x and z");
                    let a = g0.without_edges(&[(x, y)]);
                    let b = g0.without_edges(&[(y, z)]);
                    return (Rule::SplitIncomparable(x, y, z), vec![(g0, -1), (a, 1), (b, 1)]);
                }
                assert!(identify_gi(g).is_some(), "transitive graph with equivalence incomparability");
                (Rule::Stop, vec![(g.clone(), 1)])
            }
            Target::Bipartite => {
                if let Some((v, w, v2, w2)) = crossing_witness(g) {
                    let b0 = g.with_edges(&[(v, w2), (v2, w)]).expect("bipartite stays acyclic");
                    let a = b0.without_edges(&[(v, w2)]);
                    let b = b0.without_edges(&[(v2, w)]);
                    return (Rule::CrossNeighborhoods(v, w, v2, w2), vec![(b0, -1), (a, 1), (b, 1)]);
                }
                assert!(identify_bij(g).is_some(), "nested neighborhoods give B_(I,J)");
                (Rule::Stop, vec![(g.clone(), 1)])
            }
        }
    }

    fn reduce_inner(&mut self, g: &Digraph) -> GraphElement<T> {
        if let Some(r) = self.memo.get(g) {
            return r.clone();
        }
        let (rule, replacement) = self.step(g);
        let out = if rule == Rule::Stop {
            GraphElement::from_graph(g.clone())
        } else {
            let mut acc = GraphElement::zero(g.n());
            for (h, c) in &replacement {
                debug_assert!(h.edge_count() > g.edge_count());
                let r = self.reduce_inner(h);
                acc.add_scaled(&r, &T::from_i64(*c)).expect("same vertex set");
            }
            acc
        };
        if let Some(trace) = self.trace.as_mut() {
            trace.push(RewriteStep { graph: g.clone(), rule, replacement });
        }
        self.memo.insert(g.clone(), out.clone());
        out
    }
}

/// Combination of graphs `G_I` congruent to `g` modulo the CIE span.
pub fn reduce_to_gi<T: Coeff>(g: &Digraph) -> GraphElement<T> {
    Reducer::new(Target::Canonical).reduce(g).expect("acyclic graphs always reduce")
}

/// Combination of graphs `B_(I,J)` congruent to `b` modulo the bipartite
/// CIE span.
pub fn reduce_bipartite_to_bij<T: Coeff>(b: &Digraph) -> Result<GraphElement<T>> {
    Reducer::new(Target::Bipartite).reduce(b)
}

/// Whether `Γⁿᶜ(v) = 0` (degree by degree for mixed combinations).
pub fn kernel_check<T: Coeff>(v: &GraphElement<T>) -> bool {
    v.graded_parts()
        .values()
        .all(|part| gamma_nc_vec(part).expect("homogeneous part").is_zero())
}

/// Which cycles generate the CIE span.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleMode {
    /// Every simple cycle, in both traversal directions.
    All,
    /// Only cycles with `|C⁺| ∈ {1, 2}`.
    Small,
}

/// All CIE elements `cie(G, C)` for graphs `G` in `graphs`, over simple
/// cycles in both directions, filtered by `mode`.
pub fn cie_generators(graphs: &[Digraph], mode: CycleMode) -> Vec<GraphElement<Rational>> {
    graphs
        .par_iter()
        .flat_map_iter(|g| {
            undirected_cycles(g, g.n())
                .into_iter()
                .flat_map(|c| [c.reversed(), c])
                .filter(|c| mode == CycleMode::All || c.plus_edges().len() <= 2)
                .map(|c| cie(g, &c).expect("cycle of g"))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Rank over `Q` of the CIE elements of all acyclic (or all bipartite)
/// graphs on `{1..n}`, in the labeled-graph basis.
pub fn cie_span_rank(n: usize, mode: CycleMode, bipartite: bool) -> Result<usize> {
    if n > KERNEL_RANK_CAP {
        return Err(Error::CapExceeded { what: "CIE span rank", size: n, cap: KERNEL_RANK_CAP });
    }
    let graphs = if bipartite { enumerate_bipartite(n)? } else { enumerate_acyclic(n)? };
    let mut ech: Echelon<Digraph, Rational> = Echelon::new();
    for v in cie_generators(&graphs, mode) {
        ech.insert(v.terms().clone());
    }
    Ok(ech.rank())
}
