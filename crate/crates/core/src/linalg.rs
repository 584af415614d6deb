//! Exact sparse linear algebra over a [`Field`].
//!
//! Rows are sparse maps from an ordered key type to coefficients. The
//! echelon structure keeps one pivot row per leading key, normalized to a
//! leading `1`; inserting a row reduces it against existing pivots.

use std::collections::BTreeMap;

use crate::scalar::Field;

pub type SparseRow<K, T> = BTreeMap<K, T>;

fn axpy<K: Ord + Clone, T: Field>(row: &mut SparseRow<K, T>, factor: &T, other: &SparseRow<K, T>) {
    // row -= factor * other
    for (k, v) in other {
        let delta = factor.clone() * v.clone();
        match row.get_mut(k) {
            Some(x) => {
                let nx = x.clone() - delta;
                if nx.is_zero() {
                    row.remove(k);
                } else {
                    *x = nx;
                }
            }
            None => {
                row.insert(k.clone(), -delta);
            }
        }
    }
}

/// Row echelon form built incrementally.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, T: Field> {
    pivots: BTreeMap<K, SparseRow<K, T>>,
}

impl<K: Ord + Clone, T: Field> Default for Echelon<K, T> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, T: Field> Echelon<K, T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the pivots; the result is zero iff `row` lies in
    /// the current span.
    pub fn reduce(&self, mut row: SparseRow<K, T>) -> SparseRow<K, T> {
        row.retain(|_, v| !v.is_zero());
        let mut floor: Option<K> = None;
        loop {
            let lead = match &floor {
                None => row.keys().next().cloned(),
                Some(f) => row
                    .range((std::ops::Bound::Excluded(f.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(lead) = lead else { break };
            if let Some(p) = self.pivots.get(&lead) {
                let factor = row[&lead].clone();
                axpy(&mut row, &factor, p);
            } else {
                floor = Some(lead);
            }
        }
        row
    }

    /// Adds `row`; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow<K, T>) -> bool {
        let mut row = self.reduce(row);
        // leading key: the smallest one without a pivot (all remaining keys
        // have no pivot after full reduction)
        let Some(lead) = row.keys().next().cloned() else {
            return false;
        };
        let inv = T::one() / row[&lead].clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        self.pivots.insert(lead, row);
        true
    }
}

/// Rank of a family of sparse rows.
pub fn rank<K, T, I>(rows: I) -> usize
where
    K: Ord + Clone,
    T: Field,
    I: IntoIterator<Item = SparseRow<K, T>>,
{
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Finds coefficients `c` with `Σ c_i family[i] = target`, or `None` when the
/// target lies outside the span. Free variables are set to zero.
pub fn solve<K: Ord + Clone, T: Field>(
    target: &SparseRow<K, T>,
    family: &[SparseRow<K, T>],
) -> Option<Vec<T>> {
    // pivot rows carry the combination of family members they came from
    type Pivots<K, T> = BTreeMap<K, (SparseRow<K, T>, SparseRow<usize, T>)>;
    let mut pivots: Pivots<K, T> = BTreeMap::new();

    let reduce = |pivots: &Pivots<K, T>,
                  mut row: SparseRow<K, T>,
                  mut combo: SparseRow<usize, T>| {
        row.retain(|_, v| !v.is_zero());
        let mut floor: Option<K> = None;
        loop {
            let lead = match &floor {
                None => row.keys().next().cloned(),
                Some(f) => row
                    .range((std::ops::Bound::Excluded(f.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(lead) = lead else { break };
            if let Some((p, pc)) = pivots.get(&lead) {
                let factor = row[&lead].clone();
                axpy(&mut row, &factor, p);
                axpy(&mut combo, &factor, pc);
            } else {
                floor = Some(lead);
            }
        }
        (row, combo)
    };

    for (i, f) in family.iter().enumerate() {
        let mut combo = BTreeMap::new();
        combo.insert(i, T::one());
        let (mut row, mut combo) = reduce(&pivots, f.clone(), combo);
        if let Some(lead) = row.keys().next().cloned() {
            let inv = T::one() / row[&lead].clone();
            for v in row.values_mut() {
                *v = v.clone() * inv.clone();
            }
            for v in combo.values_mut() {
                *v = v.clone() * inv.clone();
            }
            pivots.insert(lead, (row, combo));
        }
    }

    // target - Σ factor_j pivot_j = residual; residual == 0 means solved and
    // target = Σ factor_j pivot_j = -(accumulated combo)
    let (residual, combo) = reduce(&pivots, target.clone(), BTreeMap::new());
    if !residual.is_empty() {
        return None;
    }
    let mut out = vec![T::zero(); family.len()];
    for (i, v) in combo {
        out[i] = -v;
    }
    Some(out)
}

/// Determinant of a dense square matrix by Gaussian elimination.
pub fn determinant<T: Field>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return T::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            let (upper, lower) = m.split_at_mut(r);
            for (dst, src) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *dst = dst.clone() - factor.clone() * src.clone();
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn row(entries: &[(u32, i64)]) -> SparseRow<u32, Rational> {
        entries.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank::<u32, Rational, _>(Vec::new()), 0);
        assert_eq!(rank(vec![row(&[(1, 2)])]), 1);
        assert_eq!(rank(vec![row(&[(1, 1), (2, 1)]), row(&[(1, 2), (2, 2)]), row(&[(3, 1)])]), 2);
        assert_eq!(rank(vec![row(&[(1, 0)])]), 0);
    }

    #[test]
    fn solve_basics() {
        let fam = vec![row(&[(1, 1), (2, 1)]), row(&[(2, 1)])];
        assert_eq!(solve(&fam[0], &fam).unwrap(), vec![q(1), q(0)]);
        assert_eq!(solve(&row(&[]), &fam).unwrap(), vec![q(0), q(0)]);
        assert_eq!(solve(&row(&[(1, 3), (2, 1)]), &fam).unwrap(), vec![q(3), q(-2)]);
        assert!(solve(&row(&[(3, 1)]), &fam).is_none());
    }

    #[test]
    fn solve_with_dependent_family() {
        let fam = vec![row(&[(1, 1)]), row(&[(1, 2)]), row(&[(2, 1)])];
        let c = solve(&row(&[(1, 4), (2, 5)]), &fam).unwrap();
        let lhs: Rational = c[0].clone() + q(2) * c[1].clone();
        assert_eq!(lhs, q(4));
        assert_eq!(c[2], q(5));
    }

    #[test]
    fn determinants() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        assert_eq!(determinant(m), q(1));
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(determinant(m), q(-1));
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(determinant(m), q(0));
    }
}
