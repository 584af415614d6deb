//! Set compositions, integer compositions and descent-starred permutations.
//!
//! A set composition of `[n]` is stored with every block sorted increasingly;
//! its textual form joins the blocks with `|` (`15|346|2`). When `n >= 10`
//! the elements inside a block are separated by commas (`1,10|2`).
//!
//! Set compositions are totally ordered lexicographically on their canonical
//! encoding, where the block separator sorts after every element. For
//! `n <= 9` this is exactly byte order on the strings.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Ordered list of disjoint non-empty blocks whose union is `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetComposition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetComposition {
    /// Validates and normalizes (sorts each block).
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition("empty block".into()));
            }
            block.sort_unstable();
            for &x in &block {
                if x == 0 || x > n {
                    return Err(Error::InvalidSetComposition(format!(
                        "element {x} outside 1..{n}"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidSetComposition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
            out.push(block);
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidSetComposition(format!("element {missing} missing")));
        }
        Ok(SetComposition { n, blocks: out })
    }

    /// Builds from blocks, taking `n` to be the total number of elements.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(blocks.iter().all(|b| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1])));
        SetComposition { n, blocks }
    }

    /// The empty composition of `[0]`.
    pub fn empty() -> Self {
        SetComposition { n: 0, blocks: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, `ℓ(I)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `pos[x]` is the 0-based index of the block containing `x`
    /// (`pos[0]` is unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                pos[x] = i;
            }
        }
        pos
    }

    fn tokens(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, b)| {
            let sep = if i == 0 { None } else { Some(usize::MAX) };
            sep.into_iter().chain(b.iter().copied())
        })
    }

    /// True when every block of `self` lies inside a block of `coarser`
    /// (removing bars and reordering blocks; includes equality).
    pub fn is_finer_or_equal(&self, coarser: &SetComposition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let pos = coarser.positions();
        self.blocks.iter().all(|b| b.iter().all(|&x| pos[x] == pos[b[0]]))
    }
}

impl Ord for SetComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tokens().cmp(other.tokens()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for SetComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, block: &[usize], wide: bool) -> fmt::Result {
    for (i, x) in block.iter().enumerate() {
        if wide && i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n >= 10;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write_block(f, b, wide)?;
        }
        Ok(())
    }
}

fn parse_block(s: &str) -> Result<Vec<usize>> {
    parse_block_with(s, s.contains(','))
}

/// With `wide` set, entries are comma separated; otherwise one digit each.
fn parse_block_with(s: &str, wide: bool) -> Result<Vec<usize>> {
    let s = s.trim();
    if wide {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
            })
            .collect()
    }
}

impl FromStr for SetComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let wide = s.contains(',');
        let blocks = s
            .split('|')
            .map(|b| parse_block_with(b, wide))
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(blocks)
    }
}

/// Sequence of positive integers; the commutative shadow of a set composition.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct IntegerComposition(Vec<usize>);

impl IntegerComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(IntegerComposition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for IntegerComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&p| p >= 10);
        for (i, p) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for IntegerComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntegerComposition(Vec::new()));
        }
        Self::new(parse_block(s)?)
    }
}

/// A permutation together with a subset of its descents (the starred ones).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DStarPerm {
    word: Vec<usize>,
    stars: BTreeSet<usize>,
}

impl DStarPerm {
    /// `stars` are 1-based positions `x` meaning the descent between
    /// `word[x]` and `word[x+1]`.
    pub fn new(word: Vec<usize>, stars: BTreeSet<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidDStar(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        for &s in &stars {
            if s == 0 || s >= n {
                return Err(Error::InvalidDStar(format!("star position {s} out of range")));
            }
            if word[s - 1] < word[s] {
                return Err(Error::InvalidDStar(format!("position {s} is not a descent")));
            }
        }
        Ok(DStarPerm { word, stars })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn stars(&self) -> &BTreeSet<usize> {
        &self.stars
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Same permutation with a different set of stars.
    pub fn with_stars(&self, stars: BTreeSet<usize>) -> Result<Self> {
        Self::new(self.word.clone(), stars)
    }
}

impl fmt::Display for DStarPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.word.len() >= 10;
        for (i, x) in self.word.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            if self.stars.contains(&(i + 1)) {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DStarPerm {
    type Err = Error;

    /// Parses `5*16*4*32` (a star follows the starred letter).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut word = Vec::new();
        let mut stars = BTreeSet::new();
        let tokens: Vec<&str> = if s.contains(',') {
            s.split(',').collect()
        } else {
            let mut v = Vec::new();
            let mut start = 0;
            for (i, c) in s.char_indices() {
                if c.is_ascii_digit() {
                    if i > start {
                        v.push(&s[start..i]);
                    }
                    start = i;
                }
            }
            if !s.is_empty() {
                v.push(&s[start..]);
            }
            v
        };
        for tok in tokens {
            let tok = tok.trim();
            let (num, starred) = match tok.strip_suffix('*') {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            let x = num.parse::<usize>().map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            word.push(x);
            if starred {
                stars.insert(word.len());
            }
        }
        Self::new(word, stars)
    }
}

/// A set composition split into odd-indexed parts `I_m` and even-indexed
/// parts `J_m`; only the last `J` block may be empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemiLengthView {
    i_blocks: Vec<Vec<usize>>,
    j_blocks: Vec<Vec<usize>>,
}

impl SemiLengthView {
    pub fn new(i_blocks: Vec<Vec<usize>>, j_blocks: Vec<Vec<usize>>) -> Result<Self> {
        let r = i_blocks.len();
        if j_blocks.len() != r {
            return Err(Error::InvalidSetComposition(
                "I and J must have the same number of blocks".into(),
            ));
        }
        let mut i_blocks = i_blocks;
        let mut j_blocks = j_blocks;
        for b in i_blocks.iter_mut().chain(j_blocks.iter_mut()) {
            b.sort_unstable();
        }
        let view = SemiLengthView { i_blocks, j_blocks };
        if view.i_blocks.iter().any(Vec::is_empty)
            || view.j_blocks.iter().take(r.saturating_sub(1)).any(Vec::is_empty)
        {
            return Err(Error::InvalidSetComposition("only the last J block may be empty".into()));
        }
        view.to_setcomp()?;
        Ok(view)
    }

    pub fn i_blocks(&self) -> &[Vec<usize>] {
        &self.i_blocks
    }

    pub fn j_blocks(&self) -> &[Vec<usize>] {
        &self.j_blocks
    }

    /// `r`, the number of `I` blocks.
    pub fn semi_length(&self) -> usize {
        self.i_blocks.len()
    }

    /// Interleaves `I_1, J_1, I_2, ...`, dropping an empty final `J`.
    pub fn to_setcomp(&self) -> Result<SetComposition> {
        let blocks: Vec<Vec<usize>> = self
            .i_blocks
            .iter()
            .zip(&self.j_blocks)
            .flat_map(|(i, j)| [i.clone(), j.clone()])
            .filter(|b| !b.is_empty())
            .collect();
        SetComposition::from_blocks(blocks)
    }

    /// Union of the `I` blocks.
    pub fn v_set(&self) -> BTreeSet<usize> {
        self.i_blocks.iter().flatten().copied().collect()
    }

    /// Union of the `J` blocks.
    pub fn w_set(&self) -> BTreeSet<usize> {
        self.j_blocks.iter().flatten().copied().collect()
    }

    /// `m[x]` is the 0-based semi-index of the part containing `x`.
    pub fn semi_index(&self) -> Vec<usize> {
        let n = self.i_blocks.iter().chain(&self.j_blocks).map(Vec::len).sum::<usize>();
        let mut m = vec![usize::MAX; n + 1];
        for (k, (i, j)) in self.i_blocks.iter().zip(&self.j_blocks).enumerate() {
            for &x in i.iter().chain(j) {
                m[x] = k;
            }
        }
        m
    }
}

impl fmt::Display for SemiLengthView {
    /// `(26|5|3,4|17|)`: a trailing `|` marks an empty last `J` block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.i_blocks.iter().chain(&self.j_blocks).map(Vec::len).sum::<usize>();
        let wide = n >= 10;
        let join = |f: &mut fmt::Formatter<'_>, blocks: &[Vec<usize>]| -> fmt::Result {
            for (i, b) in blocks.iter().enumerate() {
                if i > 0 {
                    f.write_str("|")?;
                }
                write_block(f, b, wide)?;
            }
            Ok(())
        };
        f.write_str("(")?;
        join(f, &self.i_blocks)?;
        f.write_str(",")?;
        join(f, &self.j_blocks)?;
        f.write_str(")")
    }
}

/// Set composition of the positions of `w` grouped by letter value: position
/// `j` goes to the block ranked by the number of distinct letters `<= w_j`.
pub fn delta_of_word(w: &[usize]) -> SetComposition {
    let values: BTreeSet<usize> = w.iter().copied().collect();
    let rank: HashMap<usize, usize> = values.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut blocks = vec![Vec::new(); values.len()];
    for (j, x) in w.iter().enumerate() {
        blocks[rank[x]].push(j + 1);
    }
    SetComposition::from_sorted_unchecked(w.len(), blocks)
}

/// Block sizes in order.
pub fn phi_c(i: &SetComposition) -> IntegerComposition {
    IntegerComposition(i.blocks.iter().map(Vec::len).collect())
}

/// Sorts each block decreasingly, concatenates, and stars within-block descents.
pub fn to_dstar(i: &SetComposition) -> DStarPerm {
    let mut word = Vec::with_capacity(i.n);
    let mut stars = BTreeSet::new();
    for block in &i.blocks {
        for (k, &x) in block.iter().rev().enumerate() {
            word.push(x);
            if k + 1 < block.len() {
                stars.insert(word.len());
            }
        }
    }
    DStarPerm { word, stars }
}

/// Inverse of [`to_dstar`]: blocks are the maximal starred runs.
pub fn from_dstar(p: &DStarPerm) -> SetComposition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    for (i, &x) in p.word.iter().enumerate() {
        current.push(x);
        if !p.stars.contains(&(i + 1)) {
            current.sort_unstable();
            blocks.push(std::mem::take(&mut current));
        }
    }
    SetComposition::from_sorted_unchecked(p.word.len(), blocks)
}

/// All set compositions obtained by merging runs of adjacent blocks,
/// including `i` itself. These index the expansion of `L_I` in the `M` basis.
pub fn adjacent_coarsenings(i: &SetComposition) -> Vec<SetComposition> {
    let r = i.len();
    if r == 0 {
        return vec![i.clone()];
    }
    let mut out = Vec::with_capacity(1 << (r - 1));
    // bit k set: the bar between block k and k+1 is removed
    for mask in 0u64..(1u64 << (r - 1)) {
        let mut blocks = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for (k, b) in i.blocks.iter().enumerate() {
            current.extend_from_slice(b);
            if k + 1 == r || mask & (1 << k) == 0 {
                current.sort_unstable();
                blocks.push(std::mem::take(&mut current));
            }
        }
        out.push(SetComposition::from_sorted_unchecked(i.n, blocks));
    }
    out.sort();
    out
}

fn generate(remaining: &[usize], prefix: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<SetComposition>) {
    if remaining.is_empty() {
        out.push(SetComposition::from_sorted_unchecked(n, prefix.clone()));
        return;
    }
    let k = remaining.len();
    for mask in 1u64..(1u64 << k) {
        let (block, rest): (Vec<usize>, Vec<usize>) = {
            let mut b = Vec::new();
            let mut r = Vec::new();
            for (i, &x) in remaining.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    b.push(x);
                } else {
                    r.push(x);
                }
            }
            (b, r)
        };
        prefix.push(block);
        generate(&rest, prefix, n, out);
        prefix.pop();
    }
}

/// Every set composition of `[n]` once, in the canonical order.
pub fn enumerate_setcomps(n: usize) -> Vec<SetComposition> {
    (*setcomps(n)).clone()
}

/// Cached, shared version of [`enumerate_setcomps`].
pub fn setcomps(n: usize) -> Arc<Vec<SetComposition>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<SetComposition>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return Arc::clone(v);
    }
    let elements: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    generate(&elements, &mut Vec::new(), n, &mut out);
    out.sort();
    let out = Arc::new(out);
    cache.lock().unwrap().insert(n, Arc::clone(&out));
    out
}

/// Odd parts become `I`, even parts `J`; an odd length pads an empty last `J`.
pub fn split_semilength(k: &SetComposition) -> SemiLengthView {
    let mut i_blocks = Vec::new();
    let mut j_blocks = Vec::new();
    for (idx, b) in k.blocks.iter().enumerate() {
        if idx % 2 == 0 {
            i_blocks.push(b.clone());
        } else {
            j_blocks.push(b.clone());
        }
    }
    if j_blocks.len() < i_blocks.len() {
        j_blocks.push(Vec::new());
    }
    SemiLengthView { i_blocks, j_blocks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_of_word(&[2, 7, 5, 5, 2, 5]).to_string(), "15|346|2");
        assert_eq!(delta_of_word(&[1]).to_string(), "1");
        assert_eq!(delta_of_word(&[3, 1, 2]).to_string(), "2|3|1");
    }

    #[test]
    fn phi_c_examples() {
        assert_eq!(phi_c(&sc("15|346|2")).to_string(), "231");
        assert_eq!(phi_c(&sc("1")).parts(), &[1]);
        assert_eq!(phi_c(&sc("12|3")).parts(), &[2, 1]);
    }

    #[test]
    fn dstar_examples() {
        let p = to_dstar(&sc("15|346|2"));
        assert_eq!(p.word(), &[5, 1, 6, 4, 3, 2]);
        assert_eq!(p.stars().iter().copied().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(p.to_string(), "5*16*4*32");
        assert_eq!(to_dstar(&sc("1|2|3")).to_string(), "123");
        assert_eq!(to_dstar(&sc("123")).to_string(), "3*2*1");

        assert_eq!(from_dstar(&"5*16*4*32".parse().unwrap()).to_string(), "15|346|2");
        assert_eq!(from_dstar(&"12".parse().unwrap()).to_string(), "1|2");
        assert_eq!(from_dstar(&"2*1".parse().unwrap()).to_string(), "12");
    }

    #[test]
    fn dstar_rejects_starred_ascent() {
        assert!(matches!("1*2".parse::<DStarPerm>(), Err(Error::InvalidDStar(_))));
        assert!(DStarPerm::new(vec![1, 1], BTreeSet::new()).is_err());
    }

    #[test]
    fn coarsening_examples() {
        let strs = |v: Vec<SetComposition>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(strs(adjacent_coarsenings(&sc("1|2"))), vec!["12", "1|2"]);
        let mut c = strs(adjacent_coarsenings(&sc("1|2|3")));
        c.sort();
        assert_eq!(c, vec!["123", "12|3", "1|23", "1|2|3"]);
        assert_eq!(strs(adjacent_coarsenings(&sc("12"))), vec!["12"]);
    }

    #[test]
    fn enumeration_small() {
        let strs: Vec<String> = enumerate_setcomps(2).iter().map(ToString::to_string).collect();
        assert_eq!(strs, vec!["12", "1|2", "2|1"]);
        assert_eq!(enumerate_setcomps(1).len(), 1);
        assert_eq!(enumerate_setcomps(3).len(), 13);
        assert_eq!(enumerate_setcomps(0), vec![SetComposition::empty()]);
    }

    #[test]
    fn semilength_examples() {
        let v = split_semilength(&sc("26|4|5|17|3"));
        assert_eq!(v.to_string(), "(26|5|3,4|17|)");
        assert_eq!(split_semilength(&sc("1|2")).to_string(), "(1,2)");
        let v = split_semilength(&sc("12"));
        assert_eq!(v.j_blocks(), &[Vec::<usize>::new()]);
        assert_eq!(v.to_setcomp().unwrap(), sc("12"));
    }

    #[test]
    fn invalid_compositions() {
        assert!("1|1".parse::<SetComposition>().is_err());
        assert!(SetComposition::new(3, vec![vec![1], vec![3]]).is_err());
        assert!(SetComposition::new(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(SemiLengthView::new(vec![vec![1], vec![3]], vec![vec![], vec![2]]).is_err());
    }

    #[test]
    fn wide_encoding_roundtrip() {
        let blocks = vec![vec![1, 10], (2..=9).collect(), vec![11]];
        let i = SetComposition::from_blocks(blocks).unwrap();
        let s = i.to_string();
        assert_eq!(s, "1,10|2,3,4,5,6,7,8,9|11");
        assert_eq!(s.parse::<SetComposition>().unwrap(), i);
    }

    #[test]
    fn finer_order() {
        assert!(sc("15|346|2").is_finer_or_equal(&sc("13456|2")));
        assert!(sc("15|346|2").is_finer_or_equal(&sc("15|2346")));
        assert!(!sc("13456|2").is_finer_or_equal(&sc("15|346|2")));
    }
}
