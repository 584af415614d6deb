//! Independent reference computations for the integration tests. Nothing in
//! here calls into the library except for plain data types.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------- counting

/// Whether the edge set on `{1..n}` has no directed cycle (Kahn's algorithm).
pub fn acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n + 1];
    for &(_, v) in edges {
        indeg[v] += 1;
    }
    let mut ready: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop() {
        seen += 1;
        for &(a, b) in edges {
            if a == u {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    seen == n
}

/// Every edge set on `{1..n}` without loops, as sorted edge lists.
pub fn all_edge_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|u| (1..=n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

pub fn acyclic_edge_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    all_edge_sets(n).into_iter().filter(|e| acyclic(n, e)).collect()
}

/// No vertex is both the head and the tail of an edge.
pub fn sources_and_sinks(edges: &[(usize, usize)]) -> bool {
    let tails: BTreeSet<usize> = edges.iter().map(|e| e.0).collect();
    let heads: BTreeSet<usize> = edges.iter().map(|e| e.1).collect();
    tails.is_disjoint(&heads)
}

pub fn bipartite_edge_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    all_edge_sets(n).into_iter().filter(|e| sources_and_sinks(e)).collect()
}

/// Bipartite edge sets built directly: split the vertices into two sides,
/// take any set of edges from the first side to the second, deduplicate.
pub fn bipartite_edge_sets_by_sources(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << n {
        let v: Vec<usize> = (1..=n).filter(|x| mask >> (x - 1) & 1 == 1).collect();
        let w: Vec<usize> = (1..=n).filter(|x| mask >> (x - 1) & 1 == 0).collect();
        let pairs: Vec<(usize, usize)> =
            v.iter().flat_map(|&a| w.iter().map(move |&b| (a, b))).collect();
        for sub in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| sub >> i & 1 == 1).map(|(_, &e)| e).collect();
            out.insert(edges);
        }
    }
    out.into_iter().collect()
}

/// Ordered set partitions of an `n`-set: `a(n) = Σ_k C(n,k) a(n-k)`.
pub fn ordered_bell(n: usize) -> u64 {
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        let mut binom = 1u64;
        let mut total = 0;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u64 / k as u64;
            total += binom * a[m - k];
        }
        a[m] = total;
    }
    a[n]
}

/// Maps `f: {1..n} → {1..m}` with `f(u) ≤ f(v)` on every edge, by brute force.
pub fn monotone_maps(n: usize, edges: &[(usize, usize)], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = (m as u64).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let f: Vec<usize> = (0..n)
            .map(|_| {
                let d = (c % m as u64) as usize + 1;
                c /= m as u64;
                d
            })
            .collect();
        if edges.iter().all(|&(u, v)| f[u - 1] <= f[v - 1]) {
            out.push(f);
        }
    }
    out
}

// ---------------------------------------------------------------- linear algebra

/// Rank of a dense rational matrix.
pub fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / pivot.clone();
                for k in c..cols {
                    let delta = rows[rank][k].clone() * f.clone();
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square rational matrix.
pub fn dense_determinant(mut rows: Vec<Vec<Q>>) -> Q {
    let n = rows.len();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else { return Q::zero() };
        if p != c {
            rows.swap(c, p);
            det = -det;
        }
        let pivot = rows[c][c].clone();
        det *= pivot.clone();
        for r in c + 1..n {
            if !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / pivot.clone();
                for k in c..n {
                    let delta = rows[c][k].clone() * f.clone();
                    rows[r][k] -= delta;
                }
            }
        }
    }
    det
}

/// Unique solution of an overdetermined system, or `None` when the system is
/// inconsistent or underdetermined.
pub fn dense_solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Q>> =
        a.iter().zip(b).map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for k in c..=cols {
            rows[rank][k] = rows[rank][k].clone() / pivot.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in c..=cols {
                    let delta = rows[rank][k].clone() * f.clone();
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    if rank < cols || rows[rank..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| rows[i][cols].clone()).collect())
}

// ---------------------------------------------------------------- characters

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta-numbers.
pub fn mn_character(lambda: &[usize], rho: &[usize]) -> BigInt {
    let l = lambda.len();
    let beta: BTreeSet<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut memo = BTreeMap::new();
    mn_rec(&beta, rho, &mut memo)
}

fn mn_rec(beta: &BTreeSet<usize>, rho: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    let Some((&r, rest)) = rho.split_first() else { return BigInt::one() };
    let key = (beta.iter().copied().collect::<Vec<_>>(), rho.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.range(b - r + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - r);
        let v = mn_rec(&next, rest, memo);
        if between.is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `n(n-1)…(n-k+1) χ^λ(μ ∪ 1^{n-k}) / dim λ`, zero when `n < k`.
pub fn normalized_character(mu: &[usize], lambda: &[usize]) -> Q {
    let n: usize = lambda.iter().sum();
    let k: usize = mu.iter().sum();
    if n < k {
        return Q::zero();
    }
    let mut rho = mu.to_vec();
    rho.extend(std::iter::repeat_n(1, n - k));
    let falling: BigInt = (0..k).map(|i| BigInt::from(n - i)).product();
    let dim = mn_character(lambda, &vec![1; n]);
    Q::new(falling * mn_character(lambda, &rho), dim)
}

/// `R_1, …, R_count` of `λ`, from the moments of its transition measure.
pub fn free_cumulants(lambda: &[usize], count: usize) -> Vec<Q> {
    // contents of the outer (addable) and inner (removable) corners
    let rows = lambda.len();
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for i in 0..=rows {
        let len = if i < rows { lambda[i] } else { 0 };
        let above = if i == 0 { usize::MAX } else { lambda[i - 1] };
        if len < above {
            addable.push(len as i64 - i as i64);
        }
        let below = if i + 1 < rows { lambda[i + 1] } else { 0 };
        if i < rows && len > below {
            removable.push(len as i64 - 1 - i as i64);
        }
    }
    // G(z) = Π (z - y) / Π (z - x); in w = 1/z, G = w Π(1 - y w) / Π(1 - x w)
    let poly = |roots: &[i64]| {
        let mut c = vec![q(1)];
        for &r in roots {
            let mut next = vec![Q::zero(); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i] += a.clone();
                next[i + 1] -= a.clone() * q(r);
            }
            c = next;
        }
        c
    };
    let num = poly(&removable);
    let den = poly(&addable);
    let len = count + 1;
    let mut moments = vec![Q::zero(); len];
    for j in 0..len {
        let mut v = num.get(j).cloned().unwrap_or_default();
        for i in 1..=j {
            if let Some(d) = den.get(i) {
                v -= d.clone() * moments[j - i].clone();
            }
        }
        moments[j] = v;
    }
    moments_to_free_cumulants(&moments, count)
}

/// Inverts `M_n = Σ_s R_s Σ_{i_1+…+i_s = n-s} M_{i_1}⋯M_{i_s}`.
pub fn moments_to_free_cumulants(moments: &[Q], count: usize) -> Vec<Q> {
    // after step s, inner[t] sums products of moments over s-tuples with sum t
    let mut r = vec![Q::zero(); count + 1];
    for n in 1..=count {
        let mut rest = moments[n].clone();
        let mut inner = vec![Q::zero(); n];
        inner[0] = q(1);
        for s in 1..n {
            let mut next = vec![Q::zero(); n];
            for t in 0..n {
                for a in 0..=t {
                    next[t] += inner[t - a].clone() * moments[a].clone();
                }
            }
            inner = next;
            rest -= r[s].clone() * inner[n - s].clone();
        }
        r[n] = rest;
    }
    r.remove(0);
    r
}

/// `λ(p, q)`: `p_1` rows of length `q_1 + q_2 + …`, then `p_2` rows of
/// length `q_2 + …`, and so on.
pub fn multirectangular(p: &[usize], qs: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        let len: usize = qs[i..].iter().sum();
        if len > 0 {
            out.extend(std::iter::repeat_n(len, p[i]));
        }
    }
    out
}

/// Monomials `R_{j_1}⋯R_{j_s}` (`j_i ≥ 2`, decreasing) of weight at most `w`,
/// including the empty one.
pub fn cumulant_monomials(w: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for j in (2..=left.min(max)).rev() {
            prefix.push(j);
            rec(left - j, j, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of the Kerov polynomial of `μ`, keyed by cumulant indices,
/// fitted by exact interpolation over all diagrams up to `max_size` boxes.
pub fn kerov_by_interpolation(mu: &[usize], max_size: usize) -> Option<BTreeMap<Vec<usize>, Q>> {
    let weight = mu.iter().sum::<usize>() + mu.len();
    let monomials = cumulant_monomials(weight);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for n in 0..=max_size {
        for lambda in partitions(n) {
            let r = free_cumulants(&lambda, weight);
            a.push(
                monomials
                    .iter()
                    .map(|m| m.iter().fold(q(1), |acc, &j| acc * r[j - 1].clone()))
                    .collect(),
            );
            b.push(normalized_character(mu, &lambda));
        }
    }
    let x = dense_solve(&a, &b)?;
    Some(monomials.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}

pub fn is_nonnegative(c: &Q) -> bool {
    !c.is_negative()
}
