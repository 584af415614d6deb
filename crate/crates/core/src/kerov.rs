//! Decorated bipartite graphs, expander enumeration, the functionals `I_ν`,
//! the graph-algebra lifts of normalized characters and free cumulants, and
//! Kerov polynomial coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::digraph::{permutations, Bipartition, Digraph, GraphElement};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Largest `|μ|` accepted by the character and cumulant constructions.
pub const KEROV_CAP: usize = 6;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts decreasingly.
    pub fn from_multiset(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `3 1` or `(3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Bipartite graph with a weight `h(v) ≥ 1` on each left vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecoratedGraph {
    graph: Digraph,
    bipartition: Bipartition,
    h: BTreeMap<usize, usize>,
}

impl DecoratedGraph {
    /// Uses the canonical bipartition; `h` must be positive on `V` with
    /// total `|W|`.
    pub fn new(graph: Digraph, h: BTreeMap<usize, usize>) -> Result<Self> {
        let bip = Bipartition::canonical(&graph)?;
        Self::with_bipartition(graph, bip, h)
    }

    pub fn with_bipartition(graph: Digraph, bipartition: Bipartition, h: BTreeMap<usize, usize>) -> Result<Self> {
        let keys: BTreeSet<usize> = h.keys().copied().collect();
        if keys != *bipartition.left() {
            return Err(Error::Precondition("h must be defined exactly on V".into()));
        }
        if h.values().any(|&x| x == 0) {
            return Err(Error::Precondition("h must be positive".into()));
        }
        if h.values().sum::<usize>() != bipartition.right().len() {
            return Err(Error::Precondition("the values of h must add up to |W|".into()));
        }
        Ok(DecoratedGraph { graph, bipartition, h })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn h(&self) -> &BTreeMap<usize, usize> {
        &self.h
    }

    /// The parts of `h` sorted decreasingly.
    pub fn type_partition(&self) -> Partition {
        Partition::from_multiset(self.h.values().copied().collect()).expect("positive parts")
    }

    /// Every component satisfies `Σ_{V_c} h = |W_c|` and
    /// `|N(U)| > Σ_U h` for each nonempty proper `U ⊂ V_c`.
    pub fn is_expander(&self) -> bool {
        split_components(&self.graph, &self.bipartition).iter().all(|(vc, wc)| {
            let hv: Vec<usize> = vc.iter().map(|v| self.h[v]).collect();
            component_is_expander(&self.graph, vc, wc.len(), &hv)
        })
    }

    /// On forests: every component has exactly one left vertex, weighted by
    /// its degree.
    pub fn tree_expander_characterization(&self) -> Result<bool> {
        if !self.graph.is_forest() {
            return Err(Error::NotAForest);
        }
        Ok(split_components(&self.graph, &self.bipartition)
            .iter()
            .all(|(vc, _)| vc.len() == 1 && self.h[&vc[0]] == self.graph.degree(vc[0])))
    }
}

fn split_components(g: &Digraph, bip: &Bipartition) -> Vec<(Vec<usize>, Vec<usize>)> {
    g.components()
        .into_iter()
        .map(|c| {
            let (v, w): (Vec<usize>, Vec<usize>) = c.into_iter().partition(|x| bip.left().contains(x));
            (v, w)
        })
        .collect()
}

fn component_is_expander(g: &Digraph, vc: &[usize], wc_len: usize, h: &[usize]) -> bool {
    if vc.is_empty() || h.iter().sum::<usize>() != wc_len {
        return false;
    }
    let nbrs: Vec<BTreeSet<usize>> = vc.iter().map(|&v| g.neighbors(v).into_iter().collect()).collect();
    let full = (1u64 << vc.len()) - 1;
    (1..full).all(|mask| {
        let mut nu: BTreeSet<usize> = BTreeSet::new();
        let mut weight = 0;
        for (i, nb) in nbrs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                nu.extend(nb);
                weight += h[i];
            }
        }
        nu.len() > weight
    })
}

/// Ordered lists of `k` positive integers with sum `total`.
fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest.saturating_sub(k - 1) {
            cur.push(first);
            rec(rest - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(total, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of expander decorations of `g` (canonical bipartition) per type,
/// together with the number of connected components.
pub fn expander_type_counts(g: &Digraph) -> Result<(BTreeMap<Partition, u64>, usize)> {
    let bip = Bipartition::canonical(g)?;
    let comps = split_components(g, &bip);
    let mut acc: BTreeMap<Vec<usize>, u64> = BTreeMap::from([(Vec::new(), 1)]);
    for (vc, wc) in &comps {
        let mut local: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for h in compositions(wc.len(), vc.len()) {
            if component_is_expander(g, vc, wc.len(), &h) {
                let mut t = h.clone();
                t.sort_unstable();
                *local.entry(t).or_default() += 1;
            }
        }
        let mut next: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (a, x) in &acc {
            for (b, y) in &local {
                let mut t = a.clone();
                t.extend(b);
                t.sort_unstable();
                *next.entry(t).or_default() += x * y;
            }
        }
        acc = next;
    }
    let out = acc
        .into_iter()
        .map(|(t, c)| (Partition::from_multiset(t).expect("positive parts"), c))
        .collect();
    Ok((out, comps.len()))
}

/// `I_ν(g) = (-1)^c · #{h : (g, h) expander of type ν}`.
pub fn i_nu_graph(g: &Digraph, nu: &Partition) -> Result<i64> {
    let (counts, c) = expander_type_counts(g)?;
    let count = counts.get(nu).copied().unwrap_or(0) as i64;
    Ok(if c % 2 == 0 { count } else { -count })
}

/// Linear extension of [`i_nu_graph`].
pub fn i_nu<T: Coeff>(v: &GraphElement<T>, nu: &Partition) -> Result<T> {
    let mut total = T::zero();
    for (g, c) in v.terms() {
        let x = i_nu_graph(g, nu).map_err(|_| Error::NotBipartite(g.to_string()))?;
        if x != 0 {
            total = total + c.clone() * T::from_i64(x);
        }
    }
    Ok(total)
}

/// Cycles of a permutation given in one-line notation (`p[i-1] = p(i)`),
/// each listed from its smallest element, ordered by that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len() + 1];
    let mut out = Vec::new();
    for start in 1..=p.len() {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = p[x - 1];
        }
        out.push(c);
    }
    out
}

/// `(σ ∘ τ)(x) = σ(τ(x))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t - 1]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x - 1] = i + 1;
    }
    out
}

/// Cycle-incidence graph of a factorization: left vertices `1..κ(τ)` are
/// the cycles of `τ`, right vertices the cycles of `σ` (each side ordered by
/// smallest element), with an edge when two cycles share an element.
pub fn graph_of_pair(sigma: &[usize], tau: &[usize]) -> Result<Digraph> {
    if sigma.len() != tau.len() {
        return Err(Error::Precondition("permutations of different sizes".into()));
    }
    let left = cycles(tau);
    let right = cycles(sigma);
    let offset = left.len();
    let mut edges = Vec::new();
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            if a.iter().any(|x| b.contains(x)) {
                edges.push((i + 1, offset + j + 1));
            }
        }
    }
    Digraph::new(offset + right.len(), edges)
}

/// Permutation of cycle type `μ` with cycles on consecutive blocks.
pub fn block_permutation(mu: &Partition) -> Vec<usize> {
    let mut out = Vec::with_capacity(mu.size());
    let mut start = 1;
    for &part in mu.parts() {
        for i in 0..part {
            out.push(if i + 1 == part { start } else { start + i + 1 });
        }
        start += part;
    }
    out
}

fn check_cap(k: usize) -> Result<()> {
    if k > KEROV_CAP {
        return Err(Error::CapExceeded { what: "Kerov computations", size: k, cap: KEROV_CAP });
    }
    Ok(())
}

fn factorization_sum<T: Coeff>(
    pi: &[usize],
    keep: impl Fn(&[usize], &[usize]) -> bool + Sync,
    sign: impl Fn(&[usize], &[usize]) -> usize + Sync,
) -> Result<Vec<(Digraph, T)>> {
    let k = pi.len();
    let perms = permutations(k);
    let pieces: Vec<Result<Vec<(Digraph, usize)>>> = perms
        .par_chunks(24)
        .map(|chunk| {
            let mut local = Vec::new();
            for sigma in chunk {
                let tau = compose(&inverse(sigma), pi);
                if keep(sigma, &tau) {
                    local.push((graph_of_pair(sigma, &tau)?, sign(sigma, &tau)));
                }
            }
            Ok(local)
        })
        .collect();
    let mut out = Vec::new();
    for piece in pieces {
        for (g, s) in piece? {
            out.push((g, T::sign(s)));
        }
    }
    Ok(out)
}

fn accumulate<T: Coeff>(terms: Vec<(Digraph, T)>) -> GraphElement<T> {
    // factorization graphs have varying vertex counts
    let mut map: BTreeMap<Digraph, T> = BTreeMap::new();
    for (g, c) in terms {
        let e = map.entry(g).or_insert_with(T::zero);
        *e = e.clone() + c;
    }
    let mut out = GraphElement::mixed();
    for (g, c) in map {
        out.add_term(g, c);
    }
    out
}

/// `Σ_{στ = π} (-1)^{κ(τ)+ℓ(μ)} B(σ, τ)` with `π` of cycle type `μ`.
#[allow(non_snake_case)]
pub fn G_Ch<T: Coeff>(mu: &Partition) -> Result<GraphElement<T>> {
    check_cap(mu.size())?;
    let pi = block_permutation(mu);
    let r = mu.len();
    let terms = factorization_sum(&pi, |_, _| true, |_, tau| cycles(tau).len() + r)?;
    Ok(accumulate(terms))
}

/// `Σ (-1)^{κ(τ)+1} B(σ, τ)` over `στ = (1 2 … k)` with `κ(σ) + κ(τ) = k + 1`.
/// Every graph in the support is a forest.
#[allow(non_snake_case)]
pub fn G_R<T: Coeff>(k_plus_1: usize) -> Result<GraphElement<T>> {
    if k_plus_1 < 2 {
        return Err(Error::Precondition("free cumulants start at R_2".into()));
    }
    let k = k_plus_1 - 1;
    check_cap(k)?;
    let pi = block_permutation(&Partition(vec![k]));
    let terms = factorization_sum(
        &pi,
        |sigma, tau| cycles(sigma).len() + cycles(tau).len() == k + 1,
        |_, tau| cycles(tau).len() + 1,
    )?;
    let out = accumulate(terms);
    assert!(out.terms().keys().all(Digraph::is_forest), "free cumulant graphs are forests");
    Ok(out)
}

/// `Π_i G_R(ν_i + 1)` in the graph algebra.
pub fn cumulant_monomial<T: Coeff>(nu: &Partition) -> Result<GraphElement<T>> {
    let mut acc = GraphElement::from_graph(Digraph::empty(0));
    for &p in nu.parts() {
        let g: GraphElement<T> = G_R(p + 1)?;
        acc = acc.disjoint_product(&g);
    }
    Ok(acc)
}

/// Monomials `Π R_{ν_i+1}` that can occur in `K_μ`: nonempty `ν` with
/// `|ν| + ℓ(ν) ≤ |μ| + ℓ(μ)`.
pub fn admissible_nus(mu: &Partition) -> Vec<Partition> {
    let bound = mu.size() + mu.len();
    (1..=bound)
        .flat_map(partitions_of)
        .filter(|nu| nu.size() + nu.len() <= bound)
        .collect()
}

/// Coefficient of `Π R_{ν_i+1}` in the Kerov polynomial `K_μ`, namely
/// `(-1)^{ℓ(ν)} I_ν(G_Ch(μ))`.
pub fn kerov_coeff(mu: &Partition, nu: &Partition) -> Result<i64> {
    let ch: GraphElement<i64> = G_Ch(mu)?;
    let value = i_nu(&ch, nu)?;
    Ok(if nu.len().is_multiple_of(2) { value } else { -value })
}

/// All admissible `ν` with their coefficients (zeros included).
pub fn kerov_table(mu: &Partition) -> Result<Vec<(Partition, i64)>> {
    let ch: GraphElement<i64> = G_Ch(mu)?;
    let mut per_graph = Vec::new();
    for (g, c) in ch.terms() {
        let (counts, comps) = expander_type_counts(g)?;
        per_graph.push((counts, comps, *c));
    }
    Ok(admissible_nus(mu)
        .into_iter()
        .map(|nu| {
            let i: i64 = per_graph
                .iter()
                .map(|(counts, comps, c)| {
                    let n = counts.get(&nu).copied().unwrap_or(0) as i64;
                    c * if comps % 2 == 0 { n } else { -n }
                })
                .sum();
            let coeff = if nu.len() % 2 == 0 { i } else { -i };
            (nu, coeff)
        })
        .collect())
}
