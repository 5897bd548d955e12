use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{IndexSet, Permutation};
use crate::sash::{Cell, Sash};

/// A sash with some of its cells marked.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Dotting {
    sash: Sash,
    dots: IndexSet,
}

impl Dotting {
    /// Any set of cells of a non-unit sash; allowability is checked separately.
    pub fn new(sash: Sash, dots: IndexSet) -> Result<Self> {
        if sash.is_unit() {
            return Err(Error::UnitSash);
        }
        if !dots.within(sash.len()) || dots.contains(0) {
            return Err(Error::OutOfRange {
                set: dots.to_string(),
                n: sash.len(),
            });
        }
        Ok(Dotting { sash, dots })
    }

    pub fn sash(&self) -> &Sash {
        &self.sash
    }

    pub fn dots(&self) -> &IndexSet {
        &self.dots
    }

    fn is_dotted(&self, i: usize) -> bool {
        self.dots.contains(i as u32)
    }

    /// Dotted cell positions, 1-based and increasing.
    pub fn dot_positions(&self) -> Vec<usize> {
        self.dots.iter().map(|v| v as usize).collect()
    }

    pub fn is_allowable(&self) -> bool {
        let dots = self.dot_positions();
        if dots.is_empty() {
            return false;
        }
        let cell = |i: usize| self.sash.cell(i);
        let alternates = dots
            .windows(2)
            .all(|w| cell(w[0]).is_black_type() != cell(w[1]).is_black_type());
        let halves = dots
            .iter()
            .all(|&i| cell(i) != Cell::RectLeft || self.is_dotted(i + 1));
        let no_gap = (1..self.sash.len()).all(|i| {
            !(cell(i) == Cell::Black
                && !self.is_dotted(i)
                && cell(i + 1) == Cell::White
                && self.is_dotted(i + 1))
        });
        alternates && halves && no_gap
    }

    pub(crate) fn require_allowable(&self) -> Result<()> {
        if self.is_allowable() {
            Ok(())
        } else {
            Err(Error::NotAllowableDotting(self.to_string()))
        }
    }
}

impl fmt::Display for Dotting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dots: Vec<String> = self.dots.iter().map(|v| v.to_string()).collect();
        write!(f, "{}@{}", self.sash, dots.join(","))
    }
}

impl FromStr for Dotting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sash, dots) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("expected <sash>@<cells>: {s:?}")))?;
        let dots = if dots.trim().is_empty() {
            IndexSet::new()
        } else {
            dots.parse()?
        };
        Dotting::new(sash.parse()?, dots)
    }
}

/// All allowable dottings of `c`, ordered by dot set.
pub fn enumerate_allowable_dottings(c: &Sash) -> Result<Vec<Dotting>> {
    if c.is_unit() {
        return Err(Error::UnitSash);
    }
    let n = c.len();
    let mut out: Vec<Dotting> = (1u64..1 << n)
        .map(|mask| {
            let dots = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b as u32 + 1).collect();
            Dotting {
                sash: c.clone(),
                dots,
            }
        })
        .filter(Dotting::is_allowable)
        .collect();
    out.sort();
    Ok(out)
}

/// The allowable set of `d`: gap `h` lies in `T` when the nearest dot to its
/// right is black-type or the nearest dot to its left is white-type.
pub fn dotting_to_allowable_set(d: &Dotting) -> Result<IndexSet> {
    d.require_allowable()?;
    let n = d.sash.len() + 1;
    let dots = d.dot_positions();
    let cell = |i: usize| d.sash.cell(i);
    Ok((1..=n)
        .filter(|&h| {
            let right = dots.iter().find(|&&i| i >= h);
            let left = dots.iter().rev().find(|&&i| i < h);
            right.is_some_and(|&i| cell(i).is_black_type())
                || left.is_some_and(|&i| cell(i).is_white_type())
        })
        .map(|h| h as u32)
        .collect())
}

/// `(C)_T`: cell `i` is dotted when exactly one of `i`, `i + 1` is in `T`.
pub fn allowable_set_to_dotting(c: &Sash, t: &IndexSet) -> Result<Dotting> {
    let reject = || Error::NotAllowableSet {
        set: t.to_string(),
        sash: c.to_string(),
    };
    if c.is_unit() {
        return Err(reject());
    }
    let n = c.len() + 1;
    if !t.within(n) || t.contains(0) {
        return Err(reject());
    }
    let dots = (1..n as u32)
        .filter(|&i| t.contains(i) != t.contains(i + 1))
        .collect();
    let d = Dotting {
        sash: c.clone(),
        dots,
    };
    match dotting_to_allowable_set(&d) {
        Ok(back) if &back == t => Ok(d),
        _ => Err(reject()),
    }
}

/// Allowable sets of `c`, one per allowable dotting; none for the unit.
pub fn allowable_sets(c: &Sash) -> Vec<IndexSet> {
    if c.is_unit() {
        return Vec::new();
    }
    let mut out: Vec<IndexSet> = enumerate_allowable_dottings(c)
        .expect("not the unit")
        .iter()
        .map(|d| dotting_to_allowable_set(d).expect("allowable"))
        .collect();
    out.sort();
    out
}

/// The permutation `τ(C, T)` with prefix set `T` and `σ(τ(C, T)) = C`,
/// built by placing `1, 2, ...` on either side of a dividing line.
pub fn tau(c: &Sash, t: &IndexSet) -> Result<Permutation> {
    allowable_set_to_dotting(c, t)?;
    let mut left: Vec<u32> = Vec::new();
    let mut right: Vec<u32> = Vec::new();
    let in_t = |v: u32| t.contains(v);
    let insert_before = |side: &mut Vec<u32>, anchor: u32, v: u32| {
        let p = side.iter().position(|&x| x == anchor).expect("anchor on this side");
        side.insert(p, v);
    };
    if in_t(1) {
        left.push(1);
    } else {
        right.push(1);
    }
    let cells = c.cells();
    let mut i = 1u32;
    while (i as usize) <= cells.len() {
        match cells[i as usize - 1] {
            Cell::Black => {
                if in_t(i + 1) {
                    left.push(i + 1);
                } else {
                    right.push(i + 1);
                }
                i += 1;
            }
            Cell::White => {
                match (in_t(i), in_t(i + 1)) {
                    (true, true) => insert_before(&mut left, i, i + 1),
                    (false, false) => insert_before(&mut right, i, i + 1),
                    (false, true) => left.push(i + 1),
                    (true, false) => unreachable!("allowable sets keep i + 1 left of i"),
                }
                i += 1;
            }
            Cell::RectLeft => {
                if in_t(i) {
                    insert_before(&mut left, i, i + 2);
                    if in_t(i + 1) {
                        left.push(i + 1);
                    } else {
                        right.push(i + 1);
                    }
                } else {
                    right.push(i + 1);
                    if in_t(i + 2) {
                        left.push(i + 2);
                    } else {
                        insert_before(&mut right, i, i + 2);
                    }
                }
                i += 2;
            }
            Cell::RectRight => unreachable!("right halves are consumed with their left half"),
        }
    }
    left.extend(right);
    Ok(Permutation::from_vec_unchecked(left))
}
