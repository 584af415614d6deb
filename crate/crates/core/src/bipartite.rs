//! The bipartite canonical graphs `B_(I,J)`, complete bipartite graphs with
//! reversed edges, and the multiplicity-free `N` expansion of bipartite
//! graphs.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::digraph::{Bipartition, Digraph, Edge};
use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::setcomp::{setcomps, split_semilength, SemiLengthView, SetComposition};
use crate::wqsym::{Basis, WqsymElement};

fn view_n(view: &SemiLengthView) -> usize {
    view.v_set().len() + view.w_set().len()
}

/// `B_(I,J)`: edges `I_h × J_k` for `h ≤ k`.
pub fn graph_bij(view: &SemiLengthView) -> Digraph {
    let (is, js) = (view.i_blocks(), view.j_blocks());
    let mut edges = Vec::new();
    for (h, ih) in is.iter().enumerate() {
        for jk in &js[h..] {
            for &x in ih {
                for &y in jk {
                    edges.push((x, y));
                }
            }
        }
    }
    Digraph::new(view_n(view), edges).expect("edges go from V to W")
}

/// `H_(I,J)`: edges `I_m × J_m'` for `m ≤ m'` and `J_m × I_m'` for `m < m'`.
pub fn graph_hij(view: &SemiLengthView) -> Digraph {
    let (is, js) = (view.i_blocks(), view.j_blocks());
    let r = is.len();
    let mut edges = Vec::new();
    for m in 0..r {
        for mp in m..r {
            for &x in &is[m] {
                for &y in &js[mp] {
                    edges.push((x, y));
                }
            }
            if mp > m {
                for &y in &js[m] {
                    for &x in &is[mp] {
                        edges.push((y, x));
                    }
                }
            }
        }
    }
    Digraph::new(view_n(view), edges).expect("interleaved block order is acyclic")
}

/// `K^D`: the complete bipartite graph `V → W` with the pairs of `d` turned
/// around. The result may contain directed cycles.
pub fn reverse_edges(v: &BTreeSet<usize>, w: &BTreeSet<usize>, d: &[Edge]) -> Result<Digraph> {
    for &(x, y) in d {
        if !v.contains(&x) || !w.contains(&y) {
            return Err(Error::Precondition(format!("({x},{y}) is not in V × W")));
        }
    }
    let n = v.len() + w.len();
    let edges = v
        .iter()
        .flat_map(|&x| w.iter().map(move |&y| (x, y)))
        .map(|e| if d.contains(&e) { (e.1, e.0) } else { e });
    Digraph::new_unchecked(n, edges)
}

/// Outcome of peeling `K^D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decomposition {
    /// `K^D` has a directed cycle.
    Cyclic,
    /// `K^D = H_(I,J)` for this view.
    Acyclic(SemiLengthView),
}

/// Peels `K^D` into `(I, J)`: `I_m` are the remaining `V`-vertices without
/// a reversed edge from the remaining `W`, `J_m` the remaining `W`-vertices
/// whose edges from the remaining `V` are all reversed.
pub fn decompose_kd(v: &BTreeSet<usize>, w: &BTreeSet<usize>, d: &[Edge]) -> Result<Decomposition> {
    let dset: BTreeSet<Edge> = d.iter().copied().collect();
    for &(x, y) in &dset {
        if !v.contains(&x) || !w.contains(&y) {
            return Err(Error::Precondition(format!("({x},{y}) is not in V × W")));
        }
    }
    if let Some(y) = w.iter().find(|&&y| v.iter().all(|&x| dset.contains(&(x, y)))) {
        return Err(Error::Precondition(format!("every edge at {y} is reversed")));
    }
    let mut rest_v = v.clone();
    let mut rest_w = w.clone();
    let mut i_blocks = Vec::new();
    let mut j_blocks = Vec::new();
    while !rest_v.is_empty() {
        let im: BTreeSet<usize> = rest_v
            .iter()
            .copied()
            .filter(|&x| rest_w.iter().all(|&y| !dset.contains(&(x, y))))
            .collect();
        if im.is_empty() {
            return Ok(Decomposition::Cyclic);
        }
        rest_v = &rest_v - &im;
        let jm: BTreeSet<usize> = rest_w
            .iter()
            .copied()
            .filter(|&y| rest_v.iter().all(|&x| dset.contains(&(x, y))))
            .collect();
        if jm.is_empty() && !rest_v.is_empty() {
            return Ok(Decomposition::Cyclic);
        }
        rest_w = &rest_w - &jm;
        i_blocks.push(im.into_iter().collect());
        j_blocks.push(jm.into_iter().collect());
    }
    debug_assert!(rest_w.is_empty());
    Ok(Decomposition::Acyclic(SemiLengthView::new(i_blocks, j_blocks)?))
}

/// Every reversal set `D ⊆ (V × W) ∖ E` for the canonical bipartition of
/// `b`, with its peeling outcome.
pub fn reversal_sets(b: &Digraph) -> Result<Vec<(Vec<Edge>, Decomposition)>> {
    let bip = Bipartition::canonical(b)?;
    let non_edges: Vec<Edge> = bip
        .left()
        .iter()
        .flat_map(|&x| bip.right().iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| !b.has_edge(x, y))
        .collect();
    if non_edges.len() > 24 {
        return Err(Error::CapExceeded { what: "non-edge subsets", size: non_edges.len(), cap: 24 });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << non_edges.len()) {
        let d: Vec<Edge> =
            non_edges.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        let outcome = decompose_kd(bip.left(), bip.right(), &d)?;
        out.push((d, outcome));
    }
    Ok(out)
}

/// `Γⁿᶜ(b)` in the N basis, one term per acyclic reversal set.
pub fn n_expansion<T: Coeff>(b: &Digraph) -> Result<WqsymElement<T>> {
    let mut out = WqsymElement::zero(Basis::N, b.n());
    for (_, outcome) in reversal_sets(b)? {
        if let Decomposition::Acyclic(view) = outcome {
            out.add_term(view.to_setcomp()?, T::one());
        }
    }
    Ok(out)
}

/// The set compositions `(I, J)` with `⋃I = V`, `⋃J = W` and semi-index
/// weakly increasing along every edge of `b`, by direct enumeration.
pub fn n_support_by_condition(b: &Digraph) -> Result<Vec<SetComposition>> {
    let bip = Bipartition::canonical(b)?;
    Ok(setcomps(b.n())
        .iter()
        .filter(|k| {
            let view = split_semilength(k);
            if view.v_set() != *bip.left() || view.w_set() != *bip.right() {
                return false;
            }
            let m = view.semi_index();
            b.edges().iter().all(|&(x, y)| m[x] <= m[y])
        })
        .cloned()
        .collect())
}

/// `N_(I,J)` in the M basis.
#[allow(non_snake_case)]
pub fn N_in_M<T: Coeff>(view: &SemiLengthView) -> WqsymElement<T> {
    let n = view_n(view);
    let (is, js) = (view.i_blocks(), view.j_blocks());
    let r = is.len();
    let mut out = WqsymElement::zero(Basis::M, n);
    for k in setcomps(n).iter() {
        let pos = k.positions();
        let p = |x: usize| pos[x];
        let ok = (0..r).all(|m| {
            is[m].iter().all(|&x| js[m].iter().all(|&y| p(x) <= p(y)))
                && (m + 1 >= r || js[m].iter().all(|&x| is[m + 1].iter().all(|&y| p(x) < p(y))))
        });
        if ok {
            out.add_term(k.clone(), T::one());
        }
    }
    out
}

/// The containment order on `(I_1, W∖J_1, I_2, W∖J_2, ...)`: at the first
/// differing position an `I` entry must grow strictly and a `J` entry must
/// shrink strictly. Missing blocks count as empty. Returns `None` when the
/// two views are incomparable.
pub fn containment_cmp(a: &SemiLengthView, b: &SemiLengthView) -> Option<Ordering> {
    let len = a.semi_length().max(b.semi_length());
    let empty: Vec<usize> = Vec::new();
    let get = |blocks: &[Vec<usize>], m: usize| -> BTreeSet<usize> {
        blocks.get(m).unwrap_or(&empty).iter().copied().collect()
    };
    for m in 0..len {
        let (ia, ib) = (get(a.i_blocks(), m), get(b.i_blocks(), m));
        if ia != ib {
            return if ia.is_subset(&ib) {
                Some(Ordering::Less)
            } else if ib.is_subset(&ia) {
                Some(Ordering::Greater)
            } else {
                None
            };
        }
        let (ja, jb) = (get(a.j_blocks(), m), get(b.j_blocks(), m));
        if ja != jb {
            return if jb.is_subset(&ja) {
                Some(Ordering::Less)
            } else if ja.is_subset(&jb) {
                Some(Ordering::Greater)
            } else {
                None
            };
        }
    }
    Some(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma_nc;
    use crate::wqsym::to_m;
    use crate::Rational;

    fn view(i: &str, j: &str) -> SemiLengthView {
        let parse = |s: &str| -> Vec<Vec<usize>> {
            s.split('|')
                .map(|b| b.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect())
                .collect()
        };
        SemiLengthView::new(parse(i), parse(j)).unwrap()
    }

    fn ex() -> SemiLengthView {
        view("26|5|3", "4|17|")
    }

    #[test]
    fn bij_example() {
        let b = graph_bij(&ex());
        assert_eq!(b.edge_count(), 8);
        let b = graph_bij(&view("1", "2"));
        assert_eq!(b.edges(), &[(1, 2)]);
        assert_eq!(graph_bij(&view("12", "")).edge_count(), 0);
    }

    #[test]
    fn hij_example() {
        let h = graph_hij(&view("14|26", "3|5"));
        assert_eq!(h.edges(), &[(1, 3), (1, 5), (2, 5), (3, 2), (3, 6), (4, 3), (4, 5), (6, 5)]);
        let v: BTreeSet<usize> = [1, 2, 4, 6].into();
        let w: BTreeSet<usize> = [3, 5].into();
        let d = [(2, 3), (6, 3)];
        assert_eq!(reverse_edges(&v, &w, &d).unwrap(), h);
        assert_eq!(decompose_kd(&v, &w, &d).unwrap(), Decomposition::Acyclic(view("14|26", "3|5")));
    }

    #[test]
    fn kd_trivial_and_cyclic() {
        let v: BTreeSet<usize> = [1, 2].into();
        let w: BTreeSet<usize> = [3, 4].into();
        assert_eq!(decompose_kd(&v, &w, &[]).unwrap(), Decomposition::Acyclic(view("12", "34")));
        // 1 -> 4 -> 2 -> 3 -> 1
        let d = [(1, 3), (2, 4)];
        assert_eq!(decompose_kd(&v, &w, &d).unwrap(), Decomposition::Cyclic);
        assert!(!reverse_edges(&v, &w, &d).unwrap().is_acyclic());
        assert!(decompose_kd(&v, &w, &[(1, 3), (2, 3)]).is_err());
    }

    #[test]
    fn n_expansion_of_bij_example() {
        let b = graph_bij(&ex());
        let sets = reversal_sets(&b).unwrap();
        assert_eq!(sets.len(), 16);
        let cyclic = sets.iter().filter(|(_, o)| *o == Decomposition::Cyclic).count();
        assert_eq!(cyclic, 3);
        let n: WqsymElement<Rational> = n_expansion(&b).unwrap();
        assert_eq!(n.len(), 13);
        assert!(n.coeff(&ex().to_setcomp().unwrap()) == Rational::from_integer(1.into()));
        let by_condition = n_support_by_condition(&b).unwrap();
        let keys: Vec<SetComposition> = n.terms().keys().cloned().collect();
        assert_eq!(keys, by_condition);
        assert_eq!(to_m(&n), gamma_nc(&b));
    }

    #[test]
    fn n_in_m_small() {
        let v: WqsymElement<Rational> = N_in_M(&view("1", "2"));
        let keys: Vec<String> = v.terms().keys().map(|k| k.to_string()).collect();
        assert_eq!(keys, vec!["12", "1|2"]);
        let v: WqsymElement<Rational> = N_in_M(&view("1", ""));
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn single_edge_expansion() {
        let b = Digraph::new(2, [(1, 2)]).unwrap();
        let n: WqsymElement<Rational> = n_expansion(&b).unwrap();
        let keys: Vec<String> = n.terms().keys().map(|k| k.to_string()).collect();
        assert_eq!(keys, vec!["1|2"]);
    }

    #[test]
    fn containment_order() {
        let a = view("1", "2");
        let b = view("12", "");
        assert_eq!(containment_cmp(&a, &b), Some(Ordering::Less));
        assert_eq!(containment_cmp(&b, &a), Some(Ordering::Greater));
        assert_eq!(containment_cmp(&a, &a), Some(Ordering::Equal));
        assert_eq!(containment_cmp(&view("1", "2"), &view("2", "1")), None);
    }
}
