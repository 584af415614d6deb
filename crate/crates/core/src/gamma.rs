//! The Gessel morphisms `Γⁿᶜ` (into WQSym) and `Γ` (into QSym), the
//! canonical graphs `G_I` with their F-expansions, and the two-alphabet
//! generating function used for characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::digraph::{Bipartition, Digraph, GraphElement};
use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::setcomp::{from_dstar, setcomps, DStarPerm, SetComposition};
use crate::wqsym::{project_qsym, Basis, QsymElement, WqsymElement};

/// `Γⁿᶜ(G)` in the M basis: coefficient 1 on every set composition whose
/// block index is weakly increasing along each edge.
pub fn gamma_nc<T: Coeff>(g: &Digraph) -> WqsymElement<T> {
    let mut out = WqsymElement::zero(Basis::M, g.n());
    for k in setcomps(g.n()).iter() {
        if is_compatible(g, k) {
            out.add_term(k.clone(), T::one());
        }
    }
    out
}

/// Whether `pos(u) ≤ pos(v)` for every edge `(u, v)`.
pub fn is_compatible(g: &Digraph, k: &SetComposition) -> bool {
    let pos = k.positions();
    g.edges().iter().all(|&(u, v)| pos[u] <= pos[v])
}

/// Linear extension of [`gamma_nc`] to a homogeneous combination.
pub fn gamma_nc_vec<T: Coeff>(v: &GraphElement<T>) -> Result<WqsymElement<T>> {
    let degree = match v.degree() {
        Some(d) => d,
        None => match v.graded_parts().keys().collect::<Vec<_>>().as_slice() {
            [] => 0,
            [d] => **d,
            _ => return Err(Error::Precondition("graphs with different vertex counts".into())),
        },
    };
    let mut out = WqsymElement::zero(Basis::M, degree);
    for (g, c) in v.terms() {
        out.add_scaled(&gamma_nc(g), c)?;
    }
    Ok(out)
}

/// `Γ(G)`: the commutative image, invariant under relabeling.
pub fn gamma_unlabeled<T: Coeff>(g: &Digraph) -> QsymElement<T> {
    project_qsym(&gamma_nc::<T>(g))
}

/// `G_I`: an edge from every element of a block to every element of each
/// later block.
pub fn graph_gi(i: &SetComposition) -> Digraph {
    let blocks = i.blocks();
    let mut edges = Vec::new();
    for (j, a) in blocks.iter().enumerate() {
        for b in &blocks[j + 1..] {
            for &x in a {
                for &y in b {
                    edges.push((x, y));
                }
            }
        }
    }
    Digraph::new(i.n(), edges).expect("block order is acyclic")
}

/// Concatenations of one word per block, with exactly the descents inside
/// each block starred.
pub fn mp_set(i: &SetComposition) -> Vec<DStarPerm> {
    let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
    let mut block_starts = Vec::new();
    for block in i.blocks() {
        block_starts.push(partial[0].len());
        let orders = crate::digraph::permutations(block.len());
        partial = partial
            .into_iter()
            .flat_map(|prefix| {
                orders.iter().map(move |o| {
                    let mut w = prefix.clone();
                    w.extend(o.iter().map(|&idx| block[idx - 1]));
                    w
                })
            })
            .collect();
    }
    let n = i.n();
    partial
        .into_iter()
        .map(|word| {
            let mut same_block = vec![false; n + 1];
            for (b, block) in i.blocks().iter().enumerate() {
                let start = block_starts[b];
                same_block[start + 1..start + block.len()].fill(true);
            }
            let stars = (1..n).filter(|&x| same_block[x] && word[x - 1] > word[x]).collect();
            DStarPerm::new(word, stars).expect("starred positions are descents")
        })
        .collect()
}

/// `Γⁿᶜ(G_I)` written in the F basis.
pub fn gamma_gi_in_f<T: Coeff>(i: &SetComposition) -> WqsymElement<T> {
    let mut out = WqsymElement::zero(Basis::F, i.n());
    for p in mp_set(i) {
        out.add_term(from_dstar(&p), T::one());
    }
    out
}

/// Truncated power series in two alphabets `p_1..p_m`, `q_1..q_m`, keyed by
/// pairs of exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPolynomial {
    m: usize,
    terms: BTreeMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl BiPolynomial {
    pub fn truncation(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<usize>, Vec<usize>), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &[usize], q: &[usize]) -> BigInt {
        self.terms.get(&(p.to_vec(), q.to_vec())).cloned().unwrap_or_default()
    }

    /// Identifies `p_i` and `q_i` with `x_i`.
    pub fn specialize(&self) -> BTreeMap<Vec<usize>, BigInt> {
        let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for ((p, q), c) in &self.terms {
            let x: Vec<usize> = p.iter().zip(q).map(|(a, b)| a + b).collect();
            *out.entry(x).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Numeric value at the given `p` and `q` (each of length `m`).
    pub fn evaluate<T: Coeff>(&self, p: &[T], q: &[T]) -> T {
        let pow = |x: &T, e: usize| (0..e).fold(T::one(), |acc, _| acc * x.clone());
        let mut total = T::zero();
        for ((ep, eq), c) in &self.terms {
            let mut term = T::from_i64(i64::try_from(c.clone()).expect("small coefficient"));
            for i in 0..self.m {
                term = term * pow(&p[i], ep[i]) * pow(&q[i], eq[i]);
            }
            total = total + term;
        }
        total
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((p, q), c)| json!({"p": p, "q": q, "coeff": c.to_string()}))
            .collect();
        json!({"truncation": self.m, "terms": terms})
    }
}

/// `Δ(B)(p, q)` truncated to `m` letters per alphabet, using the canonical
/// bipartition of `b`.
pub fn delta_two_alphabet(b: &Digraph, m: usize) -> Result<BiPolynomial> {
    let bip = Bipartition::canonical(b)?;
    delta_two_alphabet_with(b, &bip, m)
}

/// As [`delta_two_alphabet`] with an explicit bipartition.
pub fn delta_two_alphabet_with(b: &Digraph, bip: &Bipartition, m: usize) -> Result<BiPolynomial> {
    let checked = Bipartition::new(b, bip.left().clone(), bip.right().clone())?;
    let n = b.n();
    let mut terms: BTreeMap<(Vec<usize>, Vec<usize>), BigInt> = BTreeMap::new();
    for f in non_decreasing_maps(b, m) {
        let mut p = vec![0; m];
        let mut q = vec![0; m];
        for v in 1..=n {
            if checked.left().contains(&v) {
                p[f[v - 1] - 1] += 1;
            } else {
                q[f[v - 1] - 1] += 1;
            }
        }
        *terms.entry((p, q)).or_insert_with(BigInt::zero) += BigInt::one();
    }
    Ok(BiPolynomial { m, terms })
}

/// All `f: {1..n} → {1..m}` with `f(u) ≤ f(v)` along every edge, as value
/// vectors `f[v-1]`.
pub fn non_decreasing_maps(g: &Digraph, m: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let preds: Vec<Vec<usize>> = (1..=n).map(|v| g.in_neighbors(v)).collect();
    let succs: Vec<Vec<usize>> = (1..=n).map(|v| g.out_neighbors(v)).collect();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    fn rec(
        v: usize,
        m: usize,
        preds: &[Vec<usize>],
        succs: &[Vec<usize>],
        f: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == f.len() {
            out.push(f.clone());
            return;
        }
        // only constraints against already assigned (smaller) vertices
        let lo = preds[v].iter().filter(|&&u| u - 1 < v).map(|&u| f[u - 1]).max().unwrap_or(1);
        let hi = succs[v].iter().filter(|&&w| w - 1 < v).map(|&w| f[w - 1]).min().unwrap_or(m);
        for val in lo..=hi {
            f[v] = val;
            rec(v + 1, m, preds, succs, f, out);
        }
        f[v] = 0;
    }
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, m, &preds, &succs, &mut f, &mut out);
    out
}

/// Checks that a graph combination is homogeneous and bipartite.
pub fn ensure_bipartite<T: Coeff>(v: &GraphElement<T>) -> Result<()> {
    for g in v.terms().keys() {
        Bipartition::canonical(g).map_err(|_| Error::NotBipartite(g.to_string()))?;
    }
    Ok(())
}
