//! Weak-order congruences cut out by `V(k1)V^C` avoidance, and the Hopf
//! subalgebra of avoiders they induce inside the Malvenuto-Reutenauer algebra.
//!
//! The congruence itself has no stored representation: two permutations are
//! equivalent exactly when [`pi_down`] sends them to the same avoider. The
//! guarantees documented here (confluence of the moves, classes being
//! intervals) hold for systems of `V(k1)V^C` patterns; for other inputs they
//! are checked empirically by the test suites rather than assumed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mr::{mr_coproduct_ext, mr_dual_coproduct, mr_product, PermElement, PermTensor};
use crate::perm::{
    all_permutations, concat, embed_pair, leq_unchecked, restrict, shift_up, standardize,
    weak_interval, IndexSet, Permutation,
};

/// The pattern `V(k1)V^C`: an adjacent descent `k1`, the values ranked `V`
/// to its left and the remaining middle values to its right.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PatternClass {
    k: u32,
    before: IndexSet,
}

impl PatternClass {
    pub fn new(k: u32, before: IndexSet) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidPattern(format!("k = {k} must be at least 2")));
        }
        if before.iter().any(|v| v < 2 || v > k - 1) {
            return Err(Error::InvalidPattern(format!(
                "V = {before} must lie inside [2, {}]",
                k - 1
            )));
        }
        Ok(PatternClass { k, before })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn before(&self) -> &IndexSet {
        &self.before
    }

    pub fn after(&self) -> IndexSet {
        (2..self.k).filter(|v| !self.before.contains(*v)).collect()
    }

    /// Whether the descent at 0-based positions `i, i + 1` carries an
    /// instance; `big` and `small` are the values there after any swap.
    fn matches(&self, entries: &[u32], pos: &[usize], i: usize, big: u32, small: u32) -> bool {
        let middle = (self.k - 2) as usize;
        if big <= small || ((big - small - 1) as usize) < middle {
            return false;
        }
        if middle == 0 {
            return true;
        }
        let mut rank = 2;
        for v in small + 1..big {
            let p = pos[v as usize];
            debug_assert!(p != i && p != i + 1, "{entries:?}");
            let left = p < i;
            if left == self.before.contains(rank) {
                rank += 1;
                if rank == self.k {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.before.iter() {
            write!(f, "{v}")?;
        }
        write!(f, "({}1)", self.k)?;
        for v in self.after().iter() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternClass {
    type Err = Error;

    /// Parses `2(31)` or `(41)23`; single-digit values only.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPattern(s.to_string());
        let s = s.trim();
        let (before, rest) = s.split_once('(').ok_or_else(bad)?;
        let (pair, after) = rest.split_once(')').ok_or_else(bad)?;
        let k = pair
            .strip_suffix('1')
            .and_then(|k| k.parse::<u32>().ok())
            .ok_or_else(bad)?;
        let digits = |t: &str| -> Result<Vec<u32>> {
            t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
        };
        let before_vals = digits(before)?;
        let after_vals = digits(after)?;
        let pattern = PatternClass::new(k, before_vals.iter().copied().collect())?;
        let mut all: Vec<u32> = before_vals.into_iter().chain(after_vals).collect();
        all.sort_unstable();
        if all != (2..k).collect::<Vec<_>>() {
            return Err(bad());
        }
        Ok(pattern)
    }
}

/// A nonempty set of patterns; the congruence is the fiber partition of
/// [`pi_down`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CongruenceSystem {
    patterns: BTreeSet<PatternClass>,
}

impl CongruenceSystem {
    pub fn new(patterns: impl IntoIterator<Item = PatternClass>) -> Result<Self> {
        let patterns: BTreeSet<_> = patterns.into_iter().collect();
        if patterns.is_empty() {
            return Err(Error::InvalidPattern("empty congruence system".into()));
        }
        Ok(CongruenceSystem { patterns })
    }

    /// `U = {2(31), (41)23}`, whose avoiders are the Pell permutations.
    pub fn pell() -> Self {
        CongruenceSystem::new([
            PatternClass::new(3, IndexSet::from_iter([2])).expect("valid"),
            PatternClass::new(4, IndexSet::new()).expect("valid"),
        ])
        .expect("nonempty")
    }

    /// Patterns in scan order: smallest `k` first.
    pub fn patterns(&self) -> impl Iterator<Item = &PatternClass> {
        self.patterns.iter()
    }

    fn descent_has_instance(&self, entries: &[u32], pos: &[usize], i: usize) -> bool {
        let (big, small) = (entries[i], entries[i + 1]);
        big > small && self.patterns.iter().any(|pat| pat.matches(entries, pos, i, big, small))
    }

    /// The ascent at `i` would carry an instance once swapped.
    fn ascent_is_reversible(&self, entries: &[u32], pos: &[usize], i: usize) -> bool {
        let (small, big) = (entries[i], entries[i + 1]);
        small < big && self.patterns.iter().any(|pat| pat.matches(entries, pos, i, big, small))
    }

    /// 0-based positions `i` where swapping `x_i x_{i+1}` is a π↓-move.
    pub fn down_moves(&self, x: &Permutation) -> Vec<usize> {
        let e = x.entries();
        let pos = x.positions();
        (0..e.len().saturating_sub(1))
            .filter(|&i| self.descent_has_instance(e, &pos, i))
            .collect()
    }

    /// 0-based positions `i` where swapping `x_i x_{i+1}` is a π↑-move.
    pub fn up_moves(&self, x: &Permutation) -> Vec<usize> {
        let e = x.entries();
        let pos = x.positions();
        (0..e.len().saturating_sub(1))
            .filter(|&i| self.ascent_is_reversible(e, &pos, i))
            .collect()
    }
}

impl fmt::Display for CongruenceSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for CongruenceSystem {
    type Err = Error;

    /// `pell`, or a comma list such as `2(31),(41)23`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("pell") {
            return Ok(CongruenceSystem::pell());
        }
        CongruenceSystem::new(
            s.split(',')
                .map(str::parse::<PatternClass>)
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

/// Adjacent 1-based positions of the `(k, 1)` pair of the first instance:
/// leftmost descent first, then smallest pattern.
pub fn find_pattern_instance(x: &Permutation, u: &CongruenceSystem) -> Option<(usize, usize)> {
    let e = x.entries();
    let pos = x.positions();
    (0..e.len().saturating_sub(1))
        .find(|&i| u.descent_has_instance(e, &pos, i))
        .map(|i| (i + 1, i + 2))
}

pub fn avoids(x: &Permutation, u: &CongruenceSystem) -> bool {
    find_pattern_instance(x, u).is_none()
}

/// Minimum of the congruence class of `x`.
pub fn pi_down(x: &Permutation, u: &CongruenceSystem) -> Permutation {
    let mut cur = x.clone();
    while let Some((i, _)) = find_pattern_instance(&cur, u) {
        cur = cur.swapped(i - 1);
    }
    cur
}

/// Maximum of the congruence class of `x`.
pub fn pi_up(x: &Permutation, u: &CongruenceSystem) -> Permutation {
    let mut cur = x.clone();
    loop {
        let e = cur.entries();
        let pos = cur.positions();
        match (0..e.len().saturating_sub(1)).find(|&i| u.ascent_is_reversible(e, &pos, i)) {
            Some(i) => cur = cur.swapped(i),
            None => return cur,
        }
    }
}

pub fn congruence_class(x: &Permutation, u: &CongruenceSystem) -> Vec<Permutation> {
    weak_interval(&pi_down(x, u), &pi_up(x, u)).expect("π↓(x) <= π↑(x)")
}

pub fn enumerate_avoiders(n: usize, u: &CongruenceSystem) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(|x| avoids(x, u))
        .collect()
}

/// Avoiders `z` of the induced lattice with `lo <= z <= hi`.
pub fn av_interval(lo: &Permutation, hi: &Permutation, u: &CongruenceSystem) -> Result<Vec<Permutation>> {
    Ok(weak_interval(lo, hi)?
        .into_iter()
        .filter(|z| avoids(z, u))
        .collect())
}

fn require_avoider(x: &Permutation, u: &CongruenceSystem) -> Result<()> {
    if avoids(x, u) {
        Ok(())
    } else {
        Err(Error::NotAvoider(x.to_string()))
    }
}

/// `r`: drops every term that is not an avoider.
pub fn r_map(e: &PermElement, u: &CongruenceSystem) -> PermElement {
    e.filter(|x| avoids(x, u))
}

/// `c`: replaces each avoider by the sum of its congruence class.
pub fn c_map(e: &PermElement, u: &CongruenceSystem) -> Result<PermElement> {
    let mut out = PermElement::zero();
    for (x, c) in e.terms() {
        require_avoider(x, u)?;
        let class: PermElement = congruence_class(x, u).into_iter().collect();
        out.add_scaled(&class, c);
    }
    Ok(out)
}

/// `x •_Av y` as the sum over `[x·y', π↓(y'·x)]` in the avoider lattice.
pub fn av_product(x: &Permutation, y: &Permutation, u: &CongruenceSystem) -> Result<PermElement> {
    require_avoider(x, u)?;
    require_avoider(y, u)?;
    let shifted = shift_up(y, x.size());
    let lo = Permutation::try_from_word(concat(x, &shifted)?)?;
    let hi = Permutation::try_from_word(concat(&shifted, x)?)?;
    let result: PermElement = av_interval(&lo, &pi_down(&hi, u), u)?.into_iter().collect();
    debug_assert_eq!(result, r_map(&mr_product(x, y), u));
    Ok(result)
}

/// `x •_Av y` as `r(x • y)`.
pub fn av_product_by_restriction(
    x: &Permutation,
    y: &Permutation,
    u: &CongruenceSystem,
) -> Result<PermElement> {
    require_avoider(x, u)?;
    require_avoider(y, u)?;
    Ok(r_map(&mr_product(x, y), u))
}

/// `Δ_Av(z) = (r ⊗ r)(Δ(c(z)))`.
pub fn av_coproduct(z: &Permutation, u: &CongruenceSystem) -> Result<PermTensor> {
    let lifted = c_map(&PermElement::basis(z.clone()), u)?;
    Ok(mr_coproduct_ext(&lifted).filter(|a, b| avoids(a, u) && avoids(b, u)))
}

/// `Δ*_Av(x ⊗ y) = Σ_T π↓((x)_T · (y)_{T^C})`.
pub fn av_dual_product(x: &Permutation, y: &Permutation, u: &CongruenceSystem) -> Result<PermElement> {
    require_avoider(x, u)?;
    require_avoider(y, u)?;
    let n = x.size() + y.size();
    Ok(IndexSet::subsets_of_size(n, x.size())
        .iter()
        .map(|t| pi_down(&embed_pair(x, y, t).expect("sizes agree"), u))
        .collect())
}

/// `m*_Av(z) = m*(z)`.
pub fn av_dual_coproduct(z: &Permutation, u: &CongruenceSystem) -> Result<PermTensor> {
    require_avoider(z, u)?;
    Ok(mr_dual_coproduct(z))
}

/// Prefix value sets of members of the class of `z`.
pub fn good_sets(z: &Permutation, u: &CongruenceSystem) -> Vec<IndexSet> {
    let mut sets = BTreeSet::new();
    for member in congruence_class(z, u) {
        let mut prefix = IndexSet::new();
        sets.insert(prefix.clone());
        for v in member.entries() {
            prefix.insert(*v);
            sets.insert(prefix.clone());
        }
    }
    sets.into_iter().collect()
}

fn has_prefix_set(x: &Permutation, t: &IndexSet) -> bool {
    x.entries()[..t.len()].iter().all(|&v| t.contains(v))
}

/// Weak-order minimum and maximum of the class members of `z` whose first
/// `|T|` entries are the elements of `T`.
pub fn zmin_zmax(z: &Permutation, t: &IndexSet, u: &CongruenceSystem) -> Result<(Permutation, Permutation)> {
    let not_good = || Error::NotGood {
        set: t.to_string(),
        perm: z.to_string(),
    };
    if !t.within(z.size()) {
        return Err(not_good());
    }
    let members: Vec<Permutation> = congruence_class(z, u)
        .into_iter()
        .filter(|m| has_prefix_set(m, t))
        .collect();
    let min = members
        .iter()
        .min_by_key(|m| m.inversion_count())
        .ok_or_else(not_good)?
        .clone();
    let max = members
        .iter()
        .max_by_key(|m| m.inversion_count())
        .expect("nonempty")
        .clone();
    assert!(
        members.iter().all(|m| leq_unchecked(&min, m) && leq_unchecked(m, &max)),
        "prefix-constrained class members of {z} for {t} have no unique extremes"
    );
    Ok((min, max))
}

/// One summand `I_T ⊗ J_T` of the interval form of `Δ_Av`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBlock {
    pub set: IndexSet,
    pub left_lower: Permutation,
    pub left_upper: Permutation,
    pub right_lower: Permutation,
    pub right_upper: Permutation,
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
}

impl IntervalBlock {
    pub fn tensor(&self) -> PermTensor {
        let left: PermElement = self.left.iter().cloned().collect();
        let right: PermElement = self.right.iter().cloned().collect();
        PermTensor::tensor(&left, &right)
    }
}

/// The blocks `I_T ⊗ J_T` over all good sets `T`.
pub fn interval_blocks(z: &Permutation, u: &CongruenceSystem) -> Vec<IntervalBlock> {
    let n = z.size();
    good_sets(z, u)
        .into_iter()
        .map(|t| {
            let (zmin, zmax) = zmin_zmax(z, &t, u).expect("good set");
            let tc = t.complement_in(n);
            let left_lower = standardize(&restrict(&zmin, &t));
            let left_upper = pi_down(&standardize(&restrict(&zmax, &t)), u);
            let right_lower = standardize(&restrict(&zmin, &tc));
            let right_upper = pi_down(&standardize(&restrict(&zmax, &tc)), u);
            let left = av_interval(&left_lower, &left_upper, u).expect("I_T bounds ordered");
            let right = av_interval(&right_lower, &right_upper, u).expect("J_T bounds ordered");
            IntervalBlock {
                set: t,
                left_lower,
                left_upper,
                right_lower,
                right_upper,
                left,
                right,
            }
        })
        .collect()
}

/// `Δ_Av(z) = Σ_{T good} I_T ⊗ J_T`.
pub fn coproduct_via_intervals(z: &Permutation, u: &CongruenceSystem) -> PermTensor {
    let mut out = PermTensor::zero();
    for block in interval_blocks(z, u) {
        out += &block.tensor();
    }
    out
}

/// Term set `{x ⊗ y : π↓((x)_T · (y)_{T^C}) = z}` by brute force over
/// avoiders of the two grades.
pub fn terms_for_set(z: &Permutation, t: &IndexSet, u: &CongruenceSystem) -> Vec<(Permutation, Permutation)> {
    let p = t.len();
    let q = z.size() - p;
    let lefts = enumerate_avoiders(p, u);
    let rights = enumerate_avoiders(q, u);
    let mut out = Vec::new();
    for x in &lefts {
        for y in &rights {
            if &pi_down(&embed_pair(x, y, t).expect("sizes agree"), u) == z {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}
