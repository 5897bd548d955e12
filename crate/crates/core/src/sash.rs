//! Sashes: tilings of a `1 × n` strip by black squares, white squares and
//! `1 × 2` rectangles, in bijection with Pell permutations of `[n + 1]`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{Basis, ModuleElement, TensorElement};
use crate::error::{Error, Result};
use crate::perm::{leq_unchecked, standardize, Permutation, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Tile {
    Black,
    White,
    Rectangle,
}

/// One unit cell of a sash. The derived order makes cell-vector comparison
/// agree with comparison of the `b`/`r`/`w` text.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Cell {
    Black,
    RectLeft,
    RectRight,
    White,
}

impl Cell {
    /// Black square or left half of a rectangle.
    pub fn is_black_type(self) -> bool {
        matches!(self, Cell::Black | Cell::RectLeft)
    }

    pub fn is_white_type(self) -> bool {
        !self.is_black_type()
    }
}

/// A sash, or the unit `∅` of the Hopf algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sash {
    cells: Option<Vec<Cell>>,
}

pub type SashElement = ModuleElement<Sash>;
pub type SashTensor = TensorElement<Sash>;

fn rectangles_paired(cells: &[Cell]) -> bool {
    let mut i = 0;
    while i < cells.len() {
        match cells[i] {
            Cell::RectLeft => {
                if cells.get(i + 1) != Some(&Cell::RectRight) {
                    return false;
                }
                i += 2;
            }
            Cell::RectRight => return false,
            _ => i += 1,
        }
    }
    true
}

impl Sash {
    pub fn unit() -> Self {
        Sash { cells: None }
    }

    /// The length-0 sash.
    pub fn empty() -> Self {
        Sash { cells: Some(Vec::new()) }
    }

    pub fn from_cells(cells: Vec<Cell>) -> Result<Self> {
        if !rectangles_paired(&cells) {
            return Err(Error::Parse(format!("unpaired rectangle half in {cells:?}")));
        }
        Ok(Sash { cells: Some(cells) })
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<Cell>) -> Self {
        debug_assert!(rectangles_paired(&cells), "{cells:?}");
        Sash { cells: Some(cells) }
    }

    pub fn from_tiles(tiles: &[Tile]) -> Self {
        let mut cells = Vec::new();
        for t in tiles {
            match t {
                Tile::Black => cells.push(Cell::Black),
                Tile::White => cells.push(Cell::White),
                Tile::Rectangle => cells.extend([Cell::RectLeft, Cell::RectRight]),
            }
        }
        Sash { cells: Some(cells) }
    }

    pub fn is_unit(&self) -> bool {
        self.cells.is_none()
    }

    /// Cells in order; empty for both the unit and the length-0 sash.
    pub fn cells(&self) -> &[Cell] {
        self.cells.as_deref().unwrap_or(&[])
    }

    /// Cell length; 0 for the unit.
    pub fn len(&self) -> usize {
        self.cells().len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.as_ref().is_some_and(Vec::is_empty)
    }

    pub fn tiles(&self) -> Vec<Tile> {
        self.cells()
            .iter()
            .filter_map(|c| match c {
                Cell::Black => Some(Tile::Black),
                Cell::White => Some(Tile::White),
                Cell::RectLeft => Some(Tile::Rectangle),
                Cell::RectRight => None,
            })
            .collect()
    }

    /// Cell `i`, 1-based.
    pub fn cell(&self, i: usize) -> Cell {
        self.cells()[i - 1]
    }

    pub fn all_black(len: usize) -> Self {
        Sash::from_cells_unchecked(vec![Cell::Black; len])
    }

    pub fn all_white(len: usize) -> Self {
        Sash::from_cells_unchecked(vec![Cell::White; len])
    }
}

impl Basis for Sash {
    fn grade(&self) -> usize {
        match &self.cells {
            None => 0,
            Some(c) => c.len() + 1,
        }
    }
}

impl Ord for Sash {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.cells().cmp(other.cells()))
    }
}

impl PartialOrd for Sash {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Sash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cells {
            None => f.write_str("u"),
            Some(c) if c.is_empty() => f.write_str("e"),
            Some(_) => {
                for t in self.tiles() {
                    f.write_str(match t {
                        Tile::Black => "b",
                        Tile::White => "w",
                        Tile::Rectangle => "r",
                    })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Sash {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "u" => Ok(Sash::unit()),
            "e" => Ok(Sash::empty()),
            "" => Err(Error::Parse("empty sash text".into())),
            t => {
                let tiles = t
                    .chars()
                    .map(|c| match c {
                        'b' => Ok(Tile::Black),
                        'w' => Ok(Tile::White),
                        'r' => Ok(Tile::Rectangle),
                        _ => Err(Error::Parse(format!("invalid sash {t:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sash::from_tiles(&tiles))
            }
        }
    }
}

/// All sashes of cell length `len` in canonical order; `len = -1` gives none.
pub fn enumerate_sashes(len: i64) -> Result<Vec<Sash>> {
    if len < -1 {
        return Err(Error::InvalidLength(len));
    }
    if len == -1 {
        return Ok(Vec::new());
    }
    let len = len as usize;
    // tilings[k] lists the tilings of a strip of k cells
    let mut tilings: Vec<Vec<Vec<Cell>>> = vec![vec![Vec::new()]];
    for k in 1..=len {
        let mut next = Vec::new();
        for prefix in &tilings[k - 1] {
            for c in [Cell::Black, Cell::White] {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        if k >= 2 {
            for prefix in &tilings[k - 2] {
                let mut v = prefix.clone();
                v.extend([Cell::RectLeft, Cell::RectRight]);
                next.push(v);
            }
        }
        tilings.push(next);
    }
    let mut out: Vec<Sash> = tilings
        .swap_remove(len)
        .into_iter()
        .map(Sash::from_cells_unchecked)
        .collect();
    out.sort();
    Ok(out)
}

/// Basis of the sash algebra in grade `g`: the unit for 0, else `Σ_{g-1}`.
pub fn sashes_of_grade(g: usize) -> Vec<Sash> {
    if g == 0 {
        vec![Sash::unit()]
    } else {
        enumerate_sashes(g as i64 - 1).expect("length is at least 0")
    }
}

/// `σ`, applied to the standardization of `w`.
pub fn sigma(w: &Word) -> Sash {
    let x = standardize(w);
    let n = x.size();
    if n == 0 {
        return Sash::unit();
    }
    let pos = x.positions();
    let mut cells = Vec::with_capacity(n - 1);
    let mut i = 1;
    while i < n {
        if pos[i + 1] > pos[i] {
            if i + 2 <= n && pos[i + 2] < pos[i] {
                cells.extend([Cell::RectLeft, Cell::RectRight]);
                i += 2;
                continue;
            }
            cells.push(Cell::Black);
        } else {
            cells.push(Cell::White);
        }
        i += 1;
    }
    Sash::from_cells_unchecked(cells)
}

/// `η`: the Pell permutation built by inserting `2, 3, ...` cell by cell.
pub fn eta(a: &Sash) -> Permutation {
    if a.is_unit() {
        return Permutation::empty();
    }
    let mut x: Vec<u32> = vec![1];
    for (idx, c) in a.cells().iter().enumerate() {
        let i = idx as u32 + 1;
        let at = |x: &[u32], v: u32| x.iter().position(|&y| y == v).expect("value placed");
        match c {
            Cell::Black | Cell::RectLeft => x.push(i + 1),
            Cell::White => {
                let p = at(&x, i);
                x.insert(p, i + 1);
            }
            Cell::RectRight => {
                let p = at(&x, i - 1);
                x.insert(p, i + 1);
            }
        }
    }
    Permutation::from_vec_unchecked(x)
}

/// Every descent has size at most 2, and the value skipped by a size-2
/// descent lies to its right.
pub fn is_pell(x: &Permutation) -> bool {
    let e = x.entries();
    let pos = x.positions();
    e.windows(2).enumerate().all(|(i, w)| match w[0].checked_sub(w[1]) {
        None | Some(1) => true,
        Some(2) => pos[(w[1] + 1) as usize] > i + 1,
        Some(_) => false,
    })
}

fn starts_white(cells: &[Cell]) -> bool {
    cells.first() == Some(&Cell::White)
}

/// Sashes covering `a` in the sash lattice.
pub fn sash_covers_up(a: &Sash) -> Result<Vec<Sash>> {
    if a.is_unit() {
        return Err(Error::UnitSash);
    }
    let c = a.cells();
    let mut out = Vec::new();
    for i in 0..c.len() {
        match c[i] {
            Cell::Black => {
                if !starts_white(&c[i + 1..]) {
                    let mut v = c.to_vec();
                    v[i] = Cell::White;
                    out.push(v);
                }
                if c.get(i + 1) == Some(&Cell::White) {
                    let mut v = c.to_vec();
                    v[i] = Cell::RectLeft;
                    v[i + 1] = Cell::RectRight;
                    out.push(v);
                }
            }
            Cell::RectLeft => {
                let mut v = c.to_vec();
                v[i] = Cell::White;
                v[i + 1] = Cell::White;
                out.push(v);
            }
            _ => {}
        }
    }
    let mut out: Vec<Sash> = out.into_iter().map(Sash::from_cells_unchecked).collect();
    out.sort();
    Ok(out)
}

/// Sashes covered by `a`: the cover rules read backwards.
pub fn sash_covers_down(a: &Sash) -> Result<Vec<Sash>> {
    if a.is_unit() {
        return Err(Error::UnitSash);
    }
    let c = a.cells();
    let mut out = Vec::new();
    for i in 0..c.len() {
        match c[i] {
            Cell::White => {
                if !starts_white(&c[i + 1..]) {
                    let mut v = c.to_vec();
                    v[i] = Cell::Black;
                    out.push(v);
                }
                if c.get(i + 1) == Some(&Cell::White) {
                    let mut v = c.to_vec();
                    v[i] = Cell::RectLeft;
                    v[i + 1] = Cell::RectRight;
                    out.push(v);
                }
            }
            Cell::RectLeft => {
                let mut v = c.to_vec();
                v[i] = Cell::Black;
                v[i + 1] = Cell::White;
                out.push(v);
            }
            _ => {}
        }
    }
    let mut out: Vec<Sash> = out.into_iter().map(Sash::from_cells_unchecked).collect();
    out.sort();
    Ok(out)
}

fn same_grade(a: &Sash, b: &Sash) -> Result<()> {
    if a.grade() != b.grade() {
        return Err(Error::GradeMismatch {
            left: a.grade(),
            right: b.grade(),
        });
    }
    Ok(())
}

pub fn sash_leq(a: &Sash, b: &Sash) -> Result<bool> {
    same_grade(a, b)?;
    Ok(leq_unchecked(&eta(a), &eta(b)))
}

/// All sashes between `lo` and `hi`, in canonical order.
pub fn sash_interval(lo: &Sash, hi: &Sash) -> Result<Vec<Sash>> {
    if !sash_leq(lo, hi)? {
        return Err(Error::NotBelow {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    if lo.is_unit() {
        return Ok(vec![Sash::unit()]);
    }
    let top = eta(hi);
    let mut seen = BTreeSet::from([lo.clone()]);
    let mut queue = VecDeque::from([lo.clone()]);
    while let Some(s) = queue.pop_front() {
        for up in sash_covers_up(&s).expect("not the unit") {
            if !seen.contains(&up) && leq_unchecked(&eta(&up), &top) {
                seen.insert(up.clone());
                queue.push_back(up);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Concatenation of cell runs into a sash.
pub(crate) fn join_cells(parts: &[&[Cell]]) -> Sash {
    Sash::from_cells_unchecked(parts.concat())
}
