//! Words, permutations and the right weak order.
//!
//! A [`Word`] is a sequence of pairwise distinct positive integers; a
//! [`Permutation`] is a word whose value set is exactly `[n]`. Inversions are
//! recorded as value pairs `(a, b)` with `a > b` and `a` appearing before `b`.
//! The empty permutation is an ordinary value of grade 0 throughout.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sequence of pairwise distinct positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    entries: Vec<u32>,
}

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(entries.len());
        if entries.iter().any(|&v| v == 0 || !seen.insert(v)) {
            return Err(Error::InvalidWord(format_entries(&entries)));
        }
        Ok(Word { entries })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Word::new(entries.clone()).is_ok());
        Word { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value_set(&self) -> IndexSet {
        self.entries.iter().copied().collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn format_entries(entries: &[u32]) -> String {
    if entries.is_empty() {
        return "()".to_string();
    }
    let parts: Vec<String> = entries.iter().map(u32::to_string).collect();
    parts.join(",")
}

fn parse_entries(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "()" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::Parse("empty word; write () for the empty permutation".into()));
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{part:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("unexpected character {c:?} in {s:?}")))
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.entries))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_entries(s)?)
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        Permutation::try_from_word(Word::new(entries)?)
    }

    pub fn try_from_word(word: Word) -> Result<Self> {
        let n = word.len() as u32;
        if word.entries.iter().any(|&v| v > n) {
            return Err(Error::NotAPermutation(word.to_string()));
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        let p = Permutation(Word { entries });
        debug_assert!(Permutation::try_from_word(p.0.clone()).is_ok(), "{p}");
        p
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n as u32).collect())
    }

    /// The maximum of the weak order on `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n as u32).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// `pos[v]` is the 0-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() + 1];
        for (i, &v) in self.0.entries.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    /// Flips the one-line word; complements the inversion set.
    pub fn reverse(&self) -> Permutation {
        let mut entries = self.0.entries.clone();
        entries.reverse();
        Permutation::from_vec_unchecked(entries)
    }

    pub fn is_identity(&self) -> bool {
        self.0.entries.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inversion_count(&self) -> usize {
        let e = &self.0.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub(crate) fn swapped(&self, i: usize) -> Permutation {
        let mut entries = self.0.entries.clone();
        entries.swap(i, i + 1);
        Permutation::from_vec_unchecked(entries)
    }
}

impl Deref for Permutation {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl AsRef<Word> for Permutation {
    fn as_ref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_entries(s)?)
    }
}

/// Finite set of positive integers, e.g. a subset `T` of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct IndexSet(BTreeSet<u32>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet::default()
    }

    /// `[lo, hi]`; empty when `hi < lo`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        (lo..=hi).collect()
    }

    /// `[n] = {1, ..., n}`.
    pub fn first(n: usize) -> Self {
        IndexSet::interval(1, n as u32)
    }

    pub fn complement_in(&self, n: usize) -> IndexSet {
        (1..=n as u32).filter(|v| !self.0.contains(v)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: u32) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.iter().next_back().copied()
    }

    pub fn within(&self, n: usize) -> bool {
        self.max().is_none_or(|m| m as usize <= n)
    }

    /// All `k`-element subsets of `[n]` in lexicographic order.
    pub fn subsets_of_size(n: usize, k: usize) -> Vec<IndexSet> {
        fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<IndexSet>) {
            if cur.len() == k {
                out.push(cur.iter().copied().collect());
                return;
            }
            let need = (k - cur.len()) as u32;
            let mut v = start;
            while v + need - 1 <= n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
                v += 1;
            }
        }
        let mut out = Vec::new();
        if k <= n {
            rec(1, n as u32, k, &mut Vec::with_capacity(k), &mut out);
        }
        out
    }
}

impl FromIterator<u32> for IndexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        IndexSet(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// Accepts `1,4,5`, `{1,4,5}` and `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(IndexSet::new());
        }
        inner
            .split(',')
            .map(|part| {
                let v = part
                    .trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{part:?}: {e}")))?;
                if v == 0 {
                    return Err(Error::Parse("index sets hold positive integers".into()));
                }
                Ok(v)
            })
            .collect()
    }
}

/// Set of value pairs `(a, b)` with `a > b`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct InversionSet(BTreeSet<(u32, u32)>);

impl InversionSet {
    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.0.contains(&(a, b))
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(u32, u32)> for InversionSet {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let set: BTreeSet<_> = iter.into_iter().collect();
        debug_assert!(set.iter().all(|&(a, b)| a > b));
        InversionSet(set)
    }
}

pub fn inversion_set(w: &Word) -> InversionSet {
    let e = w.entries();
    let mut pairs = BTreeSet::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] {
                pairs.insert((e[i], e[j]));
            }
        }
    }
    InversionSet(pairs)
}

fn check_same_size(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.size() != y.size() {
        return Err(Error::LengthMismatch {
            left: x.size(),
            right: y.size(),
        });
    }
    Ok(())
}

/// `x <= y` in the weak order, i.e. `inv(x) ⊆ inv(y)`.
pub fn weak_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    check_same_size(x, y)?;
    Ok(leq_unchecked(x, y))
}

pub(crate) fn leq_unchecked(x: &Permutation, y: &Permutation) -> bool {
    let pos_y = y.positions();
    let e = x.entries();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] && pos_y[e[i] as usize] > pos_y[e[j] as usize] {
                return false;
            }
        }
    }
    true
}

/// Permutations covering `x`: swap an adjacent ascent.
pub fn weak_covers_up(x: &Permutation) -> Vec<Permutation> {
    let e = x.entries();
    (0..e.len().saturating_sub(1))
        .filter(|&i| e[i] < e[i + 1])
        .map(|i| x.swapped(i))
        .collect()
}

/// Permutations covered by `x`: swap an adjacent descent.
pub fn weak_covers_down(x: &Permutation) -> Vec<Permutation> {
    let e = x.entries();
    (0..e.len().saturating_sub(1))
        .filter(|&i| e[i] > e[i + 1])
        .map(|i| x.swapped(i))
        .collect()
}

/// Inversion relation as a dense matrix: `m[a][b]` for values `a > b`.
struct InversionMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl InversionMatrix {
    fn of(x: &Permutation) -> Self {
        let n = x.size();
        let mut m = InversionMatrix {
            n,
            bits: vec![false; (n + 1) * (n + 1)],
        };
        let e = x.entries();
        for i in 0..n {
            for j in i + 1..n {
                if e[i] > e[j] {
                    m.set(e[i] as usize, e[j] as usize);
                }
            }
        }
        m
    }

    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * (self.n + 1) + b]
    }

    fn set(&mut self, a: usize, b: usize) {
        self.bits[a * (self.n + 1) + b] = true;
    }

    fn union_with(&mut self, other: &InversionMatrix) {
        for (bit, &o) in self.bits.iter_mut().zip(&other.bits) {
            *bit |= o;
        }
    }

    /// Closes under `(a,b),(b,c) => (a,c)`; every pair points downward so a
    /// single Warshall pass with the middle value outermost suffices.
    fn close(&mut self) {
        let n = self.n;
        for b in 1..=n {
            for a in b + 1..=n {
                if !self.get(a, b) {
                    continue;
                }
                for c in 1..b {
                    if self.get(b, c) {
                        self.set(a, c);
                    }
                }
            }
        }
    }

    /// Position of `v` = values `u < v` not inverted with `v` plus values
    /// `u > v` inverted with `v`.
    fn to_permutation(&self) -> Permutation {
        let n = self.n;
        let mut entries = vec![0u32; n];
        for v in 1..=n {
            let below = (1..v).filter(|&u| !self.get(v, u)).count();
            let above = (v + 1..=n).filter(|&u| self.get(u, v)).count();
            entries[below + above] = v as u32;
        }
        Permutation::from_vec_unchecked(entries)
    }
}

/// Least upper bound in the weak order: transitive closure of the union of
/// inversion sets.
pub fn weak_join(x: &Permutation, y: &Permutation) -> Result<Permutation> {
    check_same_size(x, y)?;
    let mut m = InversionMatrix::of(x);
    m.union_with(&InversionMatrix::of(y));
    m.close();
    let join = m.to_permutation();
    debug_assert!(leq_unchecked(x, &join) && leq_unchecked(y, &join));
    Ok(join)
}

/// Greatest lower bound, by conjugating the join with word reversal.
pub fn weak_meet(x: &Permutation, y: &Permutation) -> Result<Permutation> {
    Ok(weak_join(&x.reverse(), &y.reverse())?.reverse())
}

pub fn standardize(w: &Word) -> Permutation {
    let mut sorted: Vec<u32> = w.entries().to_vec();
    sorted.sort_unstable();
    let entries = w
        .entries()
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") as u32 + 1)
        .collect();
    Permutation::from_vec_unchecked(entries)
}

/// `(x)_T`: relabels value `j` of `x` by the `j`-th smallest element of `T`.
pub fn embed(x: &Permutation, t: &IndexSet) -> Result<Word> {
    if t.len() != x.size() {
        return Err(Error::SizeMismatch {
            expected: x.size(),
            actual: t.len(),
        });
    }
    let labels: Vec<u32> = t.iter().collect();
    Ok(Word::from_vec_unchecked(
        x.entries().iter().map(|&v| labels[v as usize - 1]).collect(),
    ))
}

/// `w|_T`: the subsequence of `w` with values in `T`.
pub fn restrict(w: &Word, t: &IndexSet) -> Word {
    Word::from_vec_unchecked(w.entries().iter().copied().filter(|&v| t.contains(v)).collect())
}

pub fn inverse(x: &Permutation) -> Permutation {
    let mut entries = vec![0u32; x.size()];
    for (i, &v) in x.entries().iter().enumerate() {
        entries[v as usize - 1] = i as u32 + 1;
    }
    Permutation::from_vec_unchecked(entries)
}

pub fn concat(x: &Word, y: &Word) -> Result<Word> {
    let xs = x.value_set();
    if y.entries().iter().any(|&v| xs.contains(v)) {
        return Err(Error::OverlappingValues(x.to_string(), y.to_string()));
    }
    let mut entries = x.entries().to_vec();
    entries.extend_from_slice(y.entries());
    Ok(Word::from_vec_unchecked(entries))
}

/// `(x)_T · (y)_{T^C}` inside `[|x| + |y|]`.
pub fn embed_pair(x: &Permutation, y: &Permutation, t: &IndexSet) -> Result<Permutation> {
    let n = x.size() + y.size();
    if !t.within(n) {
        return Err(Error::OutOfRange {
            set: t.to_string(),
            n,
        });
    }
    let left = embed(x, t)?;
    let right = embed(y, &t.complement_in(n))?;
    let mut entries = left.entries;
    entries.extend(right.entries);
    Ok(Permutation::from_vec_unchecked(entries))
}

/// `y' = (y)_{[p+1, p+q]}` where `p = shift`.
pub fn shift_up(y: &Permutation, shift: usize) -> Word {
    Word::from_vec_unchecked(y.entries().iter().map(|&v| v + shift as u32).collect())
}

/// All interleavings of `x` with `y` shifted up by `|x|`.
pub fn shifted_shuffles(x: &Permutation, y: &Permutation) -> Vec<Permutation> {
    let (p, q) = (x.size(), y.size());
    let ys = shift_up(y, p);
    let mut out = Vec::new();
    for slots in IndexSet::subsets_of_size(p + q, p) {
        let (mut xi, mut yi) = (x.entries().iter(), ys.entries().iter());
        let entries = (1..=(p + q) as u32)
            .map(|pos| {
                if slots.contains(pos) {
                    *xi.next().expect("x entry")
                } else {
                    *yi.next().expect("y entry")
                }
            })
            .collect();
        out.push(Permutation::from_vec_unchecked(entries));
    }
    out.sort();
    out
}

/// Every `z` with `lo <= z <= hi`, by upward closure from `lo`.
pub fn weak_interval(lo: &Permutation, hi: &Permutation) -> Result<Vec<Permutation>> {
    if !weak_leq(lo, hi)? {
        return Err(Error::NotBelow {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::from([lo.clone()]);
    seen.insert(lo.clone());
    while let Some(z) = queue.pop_front() {
        for up in weak_covers_up(&z) {
            if !seen.contains(&up) && leq_unchecked(&up, hi) {
                seen.insert(up.clone());
                queue.push_back(up);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation::from_vec_unchecked(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation::from_vec_unchecked(cur.clone()));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(vals: &[u32]) -> IndexSet {
        vals.iter().copied().collect()
    }

    fn perms(list: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<_> = list.iter().map(|s| p(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn inversion_sets() {
        let inv = inversion_set(&w("31254"));
        assert_eq!(inv.iter().collect::<Vec<_>>(), vec![(3, 1), (3, 2), (5, 4)]);
        assert!(inversion_set(&w("123")).is_empty());
        assert_eq!(inversion_set(&w("321")).len(), 3);
    }

    #[test]
    fn weak_order_comparisons() {
        assert!(weak_leq(&p("12"), &p("21")).unwrap());
        assert!(!weak_leq(&p("213"), &p("132")).unwrap());
        assert!(!weak_leq(&p("132"), &p("213")).unwrap());
        assert!(weak_leq(&p("2413"), &p("2413")).unwrap());
        assert!(matches!(
            weak_leq(&p("12"), &p("123")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn covers() {
        assert_eq!(weak_covers_up(&p("123")), vec![p("213"), p("132")]);
        assert!(weak_covers_up(&p("321")).is_empty());
        assert_eq!(weak_covers_up(&p("312")), vec![p("321")]);
    }

    #[test]
    fn joins_and_meets() {
        assert_eq!(weak_join(&p("213"), &p("132")).unwrap(), p("321"));
        assert_eq!(weak_meet(&p("213"), &p("132")).unwrap(), p("123"));
        assert_eq!(weak_join(&p("3142"), &p("3142")).unwrap(), p("3142"));
        assert!(weak_join(&p("1"), &p("12")).is_err());
        assert_eq!(weak_join(&Permutation::empty(), &Permutation::empty()).unwrap(), Permutation::empty());
    }

    #[test]
    fn standardize_embed_restrict() {
        assert_eq!(standardize(&w("62398")), p("31254"));
        assert_eq!(standardize(&w("325")), p("213"));
        assert_eq!(standardize(&Word::empty()), Permutation::empty());

        assert_eq!(embed(&p("31254"), &set(&[2, 3, 6, 8, 9])).unwrap(), w("62398"));
        assert_eq!(embed(&p("31254"), &IndexSet::first(5)).unwrap(), w("31254"));
        assert_eq!(embed(&p("21"), &set(&[4, 7])).unwrap(), w("74"));
        assert!(matches!(embed(&p("21"), &set(&[4])), Err(Error::SizeMismatch { .. })));

        assert_eq!(restrict(&w("31254"), &set(&[2, 3, 5])), w("325"));
        assert_eq!(restrict(&w("31254"), &IndexSet::new()), Word::empty());
        assert_eq!(restrict(&w("31254"), &w("31254").value_set()), w("31254"));
    }

    #[test]
    fn inverses_and_concat() {
        assert_eq!(inverse(&p("312")), p("231"));
        assert_eq!(inverse(&p("1234")), p("1234"));
        assert_eq!(inverse(&p("421365")), p("324165"));

        assert_eq!(concat(&w("12"), &w("43")).unwrap(), w("1243"));
        assert_eq!(concat(&Word::empty(), &w("43")).unwrap(), w("43"));
        assert_eq!(concat(&w("312"), &w("654")).unwrap(), w("312654"));
        assert!(matches!(concat(&w("12"), &w("23")), Err(Error::OverlappingValues(..))));
    }

    #[test]
    fn shuffles() {
        assert_eq!(shifted_shuffles(&p("1"), &p("1")), perms(&["12", "21"]));
        assert_eq!(shifted_shuffles(&p("231"), &Permutation::empty()), vec![p("231")]);
        assert_eq!(shifted_shuffles(&p("12"), &p("1")), perms(&["123", "132", "312"]));
    }

    #[test]
    fn intervals() {
        assert_eq!(weak_interval(&p("231"), &p("231")).unwrap(), vec![p("231")]);
        assert_eq!(weak_interval(&p("123"), &p("321")).unwrap().len(), 6);
        assert_eq!(weak_interval(&p("132"), &p("321")).unwrap(), perms(&["132", "312", "321"]));
        assert!(matches!(weak_interval(&p("213"), &p("132")), Err(Error::NotBelow { .. })));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("4,2,1,3,6,5").to_string(), "4,2,1,3,6,5");
        assert_eq!(p("421365"), p("4,2,1,3,6,5"));
        assert_eq!(p("()"), Permutation::empty());
        assert_eq!(Permutation::empty().to_string(), "()");
        assert!("1,1".parse::<Word>().is_err());
        assert!("13".parse::<Permutation>().is_err());
        assert_eq!("{1,4,5}".parse::<IndexSet>().unwrap(), set(&[1, 4, 5]));
        assert_eq!("1,4,5".parse::<IndexSet>().unwrap().to_string(), "{1,4,5}");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_permutations(0), vec![Permutation::empty()]);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(IndexSet::subsets_of_size(5, 2).len(), 10);
        assert_eq!(IndexSet::subsets_of_size(3, 0), vec![IndexSet::new()]);
    }
}
