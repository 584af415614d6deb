//! Sparse vectors in WQSym (bases `M`, `L`, `F`, `N`) and QSym (`M`).
//!
//! Every WQSym basis is keyed by set compositions; the `L` and `F` bases are
//! indexed by descent-starred permutations in the literature and use the
//! bijection [`to_dstar`]/[`from_dstar`] for their keys. Vectors carry their
//! basis tag and never mix bases: convert with [`to_m`] first.
//!
//! Besides the exact basis changes, this module exposes the brute-force
//! evaluation of a vector on words over `{1..m}` ([`word_expansion`]) and the
//! defining inequality systems of the four bases ([`defining_indicator`]),
//! which the test suites use as an independent oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::scalar::{Coeff, Field};
use crate::setcomp::{
    adjacent_coarsenings, delta_of_word, from_dstar, phi_c, setcomps, split_semilength, to_dstar,
    DStarPerm, IntegerComposition, SetComposition,
};

/// Largest degree for which a general `M -> N` conversion is attempted.
pub const N_CONVERSION_CAP: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    L,
    F,
    N,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::F => "F",
            Basis::N => "N",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" | "m" => Ok(Basis::M),
            "L" | "l" => Ok(Basis::L),
            "F" | "f" => Ok(Basis::F),
            "N" | "n" => Ok(Basis::N),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Homogeneous element of WQSym in one basis.
#[derive(Clone, PartialEq, Debug)]
pub struct WqsymElement<T> {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<SetComposition, T>,
}

impl<T: Coeff> WqsymElement<T> {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        WqsymElement { basis, degree, terms: BTreeMap::new() }
    }

    /// The basis vector indexed by `key`.
    pub fn basis_element(basis: Basis, key: SetComposition) -> Self {
        let mut v = Self::zero(basis, key.n());
        v.terms.insert(key, T::one());
        v
    }

    /// `L` or `F` basis vector indexed by a descent-starred permutation.
    pub fn from_dstar(basis: Basis, p: &DStarPerm) -> Self {
        Self::basis_element(basis, from_dstar(p))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<SetComposition, T> {
        &self.terms
    }

    pub fn coeff(&self, key: &SetComposition) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
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

    /// Adds `c` to the coefficient of `key`, dropping zeros.
    pub fn add_term(&mut self, key: SetComposition, c: T) {
        debug_assert_eq!(key.n(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                let nx = x.clone() + c;
                if nx.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *x = nx;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &T) -> Result<()> {
        self.check_compatible(other)?;
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c.clone() * v.clone());
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &T::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-T::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
        out
    }

    /// Terms keyed by descent-starred permutations.
    pub fn dstar_terms(&self) -> Vec<(DStarPerm, T)> {
        self.terms.iter().map(|(k, v)| (to_dstar(k), v.clone())).collect()
    }

    fn key_string(&self, key: &SetComposition) -> String {
        match self.basis {
            Basis::M | Basis::N => key.to_string(),
            Basis::L | Basis::F => to_dstar(key).to_string(),
        }
    }

    /// `{"basis":"M","degree":n,"terms":[["15|346|2","1"],...]}`; `L`/`F`
    /// keys use the starred-permutation form.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, v)| json!([self.key_string(k), v.to_string()]))
            .collect();
        json!({"basis": self.basis.to_string(), "degree": self.degree, "terms": terms})
    }
}

impl<T: Coeff + FromStr> WqsymElement<T> {
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("WQSym JSON: {what}"));
        let basis: Basis = value["basis"].as_str().ok_or_else(|| bad("basis"))?.parse()?;
        let degree = value["degree"].as_u64().ok_or_else(|| bad("degree"))? as usize;
        let mut out = Self::zero(basis, degree);
        for term in value["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let key = term[0].as_str().ok_or_else(|| bad("key"))?;
            let coeff = term[1].as_str().ok_or_else(|| bad("coefficient"))?;
            let key = match basis {
                Basis::M | Basis::N => key.parse::<SetComposition>()?,
                Basis::L | Basis::F => from_dstar(&key.parse::<DStarPerm>()?),
            };
            if key.n() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: key.n() });
            }
            let c = coeff.parse::<T>().map_err(|_| bad("coefficient"))?;
            out.add_term(key, c);
        }
        Ok(out)
    }
}

impl<T: Coeff> fmt::Display for WqsymElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v}){}[{}]", self.basis, self.key_string(k))?;
        }
        Ok(())
    }
}

/// Homogeneous element of QSym in the monomial basis.
#[derive(Clone, PartialEq, Debug)]
pub struct QsymElement<T> {
    degree: usize,
    terms: BTreeMap<IntegerComposition, T>,
}

impl<T: Coeff> QsymElement<T> {
    pub fn zero(degree: usize) -> Self {
        QsymElement { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<IntegerComposition, T> {
        &self.terms
    }

    pub fn coeff(&self, key: &IntegerComposition) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: IntegerComposition, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Truncated evaluation at `x_1..x_m`: map from exponent vectors (length
    /// `m`) to coefficients.
    pub fn evaluate(&self, m: usize) -> BTreeMap<Vec<usize>, T> {
        let mut out: BTreeMap<Vec<usize>, T> = BTreeMap::new();
        for (comp, c) in &self.terms {
            let r = comp.parts().len();
            for chosen in increasing_tuples(r, m) {
                let mut exps = vec![0; m];
                for (&slot, &p) in chosen.iter().zip(comp.parts()) {
                    exps[slot] = p;
                }
                let e = out.entry(exps).or_insert_with(T::zero);
                *e = e.clone() + c.clone();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(k, v)| json!([k.to_string(), v.to_string()])).collect();
        json!({"basis": "M", "degree": self.degree, "terms": terms})
    }
}

impl<T: Coeff> fmt::Display for QsymElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})M[{k}]")?;
        }
        Ok(())
    }
}

fn increasing_tuples(r: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for s in start..m {
            cur.push(s);
            rec(s + 1, r, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, r, m, &mut Vec::new(), &mut out);
    out
}

/// `L_(σ,D)` in the `M` basis: one term per adjacent coarsening.
#[allow(non_snake_case)]
pub fn L_in_M<T: Coeff>(p: &DStarPerm) -> WqsymElement<T> {
    let i = from_dstar(p);
    let mut out = WqsymElement::zero(Basis::M, i.n());
    for j in adjacent_coarsenings(&i) {
        out.add_term(j, T::one());
    }
    out
}

/// `F_(σ,D) = Σ_{D' ⊆ D} (-1)^{|D'|} L_(σ,D')`.
#[allow(non_snake_case)]
pub fn F_in_L<T: Coeff>(p: &DStarPerm) -> WqsymElement<T> {
    let stars: Vec<usize> = p.stars().iter().copied().collect();
    let mut out = WqsymElement::zero(Basis::L, p.n());
    for mask in 0u64..(1u64 << stars.len()) {
        let sub: BTreeSet<usize> =
            stars.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &s)| s).collect();
        let sign = T::sign(sub.len());
        let q = p.with_stars(sub).expect("subset of descents");
        out.add_term(from_dstar(&q), sign);
    }
    out
}

/// Re-expresses `v` in the `M` basis.
pub fn to_m<T: Coeff>(v: &WqsymElement<T>) -> WqsymElement<T> {
    let mut out = WqsymElement::zero(Basis::M, v.degree);
    for (k, c) in &v.terms {
        let image = match v.basis {
            Basis::M => WqsymElement::basis_element(Basis::M, k.clone()),
            Basis::L => L_in_M(&to_dstar(k)),
            Basis::F => {
                let l: WqsymElement<T> = F_in_L(&to_dstar(k));
                to_m(&l)
            }
            Basis::N => crate::bipartite::N_in_M(&split_semilength(k)),
        };
        out.add_scaled(&image, c).expect("same basis and degree");
    }
    out
}

/// Converts any vector to `target`. `L` and `F` use triangular peeling; `N`
/// solves a linear system and is limited to degree [`N_CONVERSION_CAP`].
pub fn convert<T: Field>(v: &WqsymElement<T>, target: Basis) -> Result<WqsymElement<T>> {
    if v.basis == target {
        return Ok(v.clone());
    }
    let m = to_m(v);
    match target {
        Basis::M => Ok(m),
        Basis::L => Ok(m_to_l(&m)),
        Basis::F => Ok(l_to_f(&m_to_l(&m))),
        Basis::N => {
            let n = v.degree;
            if n > N_CONVERSION_CAP {
                return Err(Error::CapExceeded { what: "M -> N conversion", size: n, cap: N_CONVERSION_CAP });
            }
            let keys = setcomps(n);
            let family: Vec<WqsymElement<T>> = keys
                .iter()
                .map(|k| crate::bipartite::N_in_M(&split_semilength(k)))
                .collect();
            let coeffs = solve_in_family(&m, &family)?
                .expect("the N family is a basis of WQSym");
            let mut out = WqsymElement::zero(Basis::N, n);
            for (k, c) in keys.iter().zip(coeffs) {
                out.add_term(k.clone(), c);
            }
            Ok(out)
        }
    }
}

fn m_to_l<T: Coeff>(m: &WqsymElement<T>) -> WqsymElement<T> {
    let mut rest = m.clone();
    let mut out = WqsymElement::zero(Basis::L, m.degree);
    // L_I = M_I + (strictly coarser terms): peel the finest term first
    while let Some(key) = rest.terms.keys().max_by_key(|k| k.len()).cloned() {
        let c = rest.terms[&key].clone();
        let image: WqsymElement<T> = L_in_M(&to_dstar(&key));
        rest.add_scaled(&image, &-c.clone()).expect("M basis");
        out.add_term(key, c);
    }
    out
}

fn l_to_f<T: Coeff>(l: &WqsymElement<T>) -> WqsymElement<T> {
    let mut rest = l.clone();
    let mut out = WqsymElement::zero(Basis::F, l.degree);
    // F_(σ,D) = (-1)^|D| L_(σ,D) + (terms with fewer stars)
    while let Some(key) = rest.terms.keys().min_by_key(|k| k.len()).cloned() {
        let stars = key.n() - key.len();
        let c = rest.terms[&key].clone() * T::sign(stars);
        let image: WqsymElement<T> = F_in_L(&to_dstar(&key));
        rest.add_scaled(&image, &-c.clone()).expect("L basis");
        out.add_term(key, c);
    }
    out
}

/// Commutative image: `M_I ↦ M_{φ_c(I)}`.
pub fn project_qsym<T: Coeff>(v: &WqsymElement<T>) -> QsymElement<T> {
    let m = to_m(v);
    let mut out = QsymElement::zero(v.degree);
    for (k, c) in &m.terms {
        out.add_term(phi_c(k), c.clone());
    }
    out
}

fn as_row<T: Coeff>(v: &WqsymElement<T>) -> SparseRow<SetComposition, T> {
    to_m(v).terms
}

fn common_degree<T: Coeff>(vs: &[&WqsymElement<T>]) -> Result<()> {
    if let Some(first) = vs.first() {
        for v in vs {
            if v.degree != first.degree {
                return Err(Error::DegreeMismatch { expected: first.degree, found: v.degree });
            }
        }
    }
    Ok(())
}

/// Rank of the family, computed exactly in the `M` coordinates.
pub fn rank_over_rationals<T: Field>(vs: &[WqsymElement<T>]) -> Result<usize> {
    common_degree(&vs.iter().collect::<Vec<_>>())?;
    Ok(linalg::rank(vs.iter().map(as_row)))
}

/// Coefficients expressing `target` in `family`, `Ok(None)` when `target`
/// lies outside the span.
pub fn solve_in_family<T: Field>(
    target: &WqsymElement<T>,
    family: &[WqsymElement<T>],
) -> Result<Option<Vec<T>>> {
    let mut all: Vec<&WqsymElement<T>> = vec![target];
    all.extend(family.iter());
    common_degree(&all)?;
    let rows: Vec<_> = family.iter().map(as_row).collect();
    Ok(linalg::solve(&as_row(target), &rows))
}

/// All words of length `n` over `{1..m}` in lexicographic order.
pub fn words(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut w = vec![1; n];
    loop {
        out.push(w.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if w[i] < m {
                w[i] += 1;
                for x in w.iter_mut().skip(i + 1) {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Evaluation on words over `{1..m}`: the coefficient of `a_w` is the `M`
/// coefficient of `Δ(w)`. Zero coefficients are omitted.
pub fn word_expansion<T: Coeff>(v: &WqsymElement<T>, m: usize) -> BTreeMap<Vec<usize>, T> {
    let mv = to_m(v);
    words(v.degree, m)
        .into_iter()
        .filter_map(|w| {
            let c = mv.coeff(&delta_of_word(&w));
            (!c.is_zero()).then_some((w, c))
        })
        .collect()
}

/// Whether the monomial `a_w` occurs in the basis element `(basis, key)`
/// according to its defining inequality system (not via any expansion).
pub fn defining_indicator(basis: Basis, key: &SetComposition, w: &[usize]) -> bool {
    let k = |x: usize| w[x - 1];
    match basis {
        Basis::M | Basis::L | Basis::F => {
            let p = to_dstar(key);
            let word = p.word();
            (1..word.len()).all(|x| {
                let (a, b) = (k(word[x - 1]), k(word[x]));
                let starred = p.stars().contains(&x);
                match (basis, starred) {
                    (Basis::M, true) | (Basis::L, true) => a == b,
                    (Basis::M, false) => a < b,
                    (Basis::L, false) | (Basis::F, false) => a <= b,
                    (Basis::F, true) => a < b,
                    _ => unreachable!(),
                }
            })
        }
        Basis::N => {
            let view = split_semilength(key);
            let (is, js) = (view.i_blocks(), view.j_blocks());
            let r = is.len();
            (0..r).all(|m| {
                let le = is[m].iter().all(|&x| js[m].iter().all(|&y| k(x) <= k(y)));
                let lt = m + 1 >= r || js[m].iter().all(|&x| is[m + 1].iter().all(|&y| k(x) < k(y)));
                le && lt
            })
        }
    }
}

/// Brute-force word expansion of a single basis element from its definition.
pub fn defining_word_expansion<T: Coeff>(
    basis: Basis,
    key: &SetComposition,
    m: usize,
) -> BTreeMap<Vec<usize>, T> {
    words(key.n(), m)
        .into_iter()
        .filter(|w| defining_indicator(basis, key, w))
        .map(|w| (w, T::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn sc(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    fn ds(s: &str) -> DStarPerm {
        s.parse().unwrap()
    }

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn m_terms(v: &WqsymElement<Rational>) -> Vec<(String, i64)> {
        v.terms()
            .iter()
            .map(|(k, c)| (k.to_string(), c.to_integer().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn l_in_m_examples() {
        let v: WqsymElement<Rational> = L_in_M(&ds("12"));
        assert_eq!(m_terms(&v), vec![("12".into(), 1), ("1|2".into(), 1)]);
        let v: WqsymElement<Rational> = L_in_M(&ds("2*1"));
        assert_eq!(m_terms(&v), vec![("12".into(), 1)]);
        let v: WqsymElement<Rational> = L_in_M(&ds("123"));
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn f_in_l_examples() {
        let v: WqsymElement<Rational> = F_in_L(&ds("312"));
        assert_eq!(v.len(), 1);
        let v: WqsymElement<Rational> = F_in_L(&ds("2*1"));
        assert_eq!(v.coeff(&from_dstar(&ds("21"))), q(1));
        assert_eq!(v.coeff(&from_dstar(&ds("2*1"))), q(-1));
        let v: WqsymElement<Rational> = F_in_L(&ds("3*2*1"));
        assert_eq!(v.len(), 4);
        assert_eq!(v.coeff(&sc("123")), q(1));
    }

    #[test]
    fn to_m_examples() {
        let f = WqsymElement::<Rational>::from_dstar(Basis::F, &ds("2*1"));
        assert_eq!(m_terms(&to_m(&f)), vec![("2|1".into(), 1)]);
        let l = WqsymElement::<Rational>::from_dstar(Basis::L, &ds("12"));
        assert_eq!(m_terms(&to_m(&l)), vec![("12".into(), 1), ("1|2".into(), 1)]);
        let m = WqsymElement::<Rational>::basis_element(Basis::M, sc("2|13"));
        assert_eq!(to_m(&m), m);
    }

    #[test]
    fn projection_examples() {
        let m = WqsymElement::<Rational>::basis_element(Basis::M, sc("25|4|13"));
        let p = project_qsym(&m);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coeff(&"212".parse().unwrap()), q(1));
        assert!(project_qsym(&WqsymElement::<Rational>::zero(Basis::M, 3)).is_zero());
        let mut v = WqsymElement::<Rational>::basis_element(Basis::M, sc("1|2"));
        v.add_term(sc("2|1"), q(1));
        assert_eq!(project_qsym(&v).coeff(&"11".parse().unwrap()), q(2));
    }

    #[test]
    fn conversions_roundtrip() {
        for n in 1..=3 {
            for key in setcomps(n).iter() {
                for basis in [Basis::L, Basis::F, Basis::N] {
                    let m = WqsymElement::<Rational>::basis_element(Basis::M, key.clone());
                    let converted = convert(&m, basis).unwrap();
                    assert_eq!(to_m(&converted), m, "{basis} {key}");
                }
            }
        }
    }

    #[test]
    fn mixed_bases_do_not_add() {
        let a = WqsymElement::<Rational>::basis_element(Basis::M, sc("12"));
        let b = WqsymElement::<Rational>::basis_element(Basis::L, sc("12"));
        assert!(matches!(a.try_add(&b), Err(Error::BasisMismatch(_))));
        let c = WqsymElement::<Rational>::basis_element(Basis::M, sc("1"));
        assert!(matches!(a.try_add(&c), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn json_shape() {
        let mut v = WqsymElement::<Rational>::basis_element(Basis::M, sc("15|346|2"));
        v.add_term(sc("123456"), Rational::new(1.into(), 2.into()));
        let j = v.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"basis":"M","degree":6,"terms":[["123456","1/2"],["15|346|2","1"]]}"#
        );
        assert_eq!(WqsymElement::<Rational>::from_json(&j).unwrap(), v);
        let f = WqsymElement::<Rational>::from_dstar(Basis::F, &ds("3*21"));
        assert_eq!(f.to_json()["terms"][0][0], "3*21");
    }

    #[test]
    fn solve_and_rank_trivial_cases() {
        let fam = vec![
            WqsymElement::<Rational>::basis_element(Basis::M, sc("12")),
            WqsymElement::<Rational>::basis_element(Basis::L, sc("1|2")),
        ];
        assert_eq!(solve_in_family(&fam[0], &fam).unwrap().unwrap(), vec![q(1), q(0)]);
        let zero = WqsymElement::<Rational>::zero(Basis::M, 2);
        assert_eq!(solve_in_family(&zero, &fam).unwrap().unwrap(), vec![q(0), q(0)]);
        let outside = WqsymElement::<Rational>::basis_element(Basis::M, sc("2|1"));
        assert!(solve_in_family(&outside, &fam).unwrap().is_none());
        assert_eq!(rank_over_rationals::<Rational>(&[]).unwrap(), 0);
        assert_eq!(rank_over_rationals(&fam[..1]).unwrap(), 1);
        assert_eq!(rank_over_rationals(&fam).unwrap(), 2);
    }

    #[test]
    fn qsym_evaluation() {
        let mut v = QsymElement::<Rational>::zero(2);
        v.add_term("11".parse().unwrap(), q(1));
        let e = v.evaluate(3);
        // x1x2 + x1x3 + x2x3
        assert_eq!(e.len(), 3);
        assert_eq!(e[&vec![1, 1, 0]], q(1));
    }

    #[test]
    fn word_listing() {
        assert_eq!(words(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(words(0, 3), vec![Vec::<usize>::new()]);
    }
}
