use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sash::{sash_interval, Cell, Sash, SashElement, SashTensor};

use super::dotting::{enumerate_allowable_dottings, Dotting};

/// How two consecutive dots sit relative to each other.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DotPair {
    Plain,
    /// A black square dotted next to a dotted white square.
    AdjacentBlackWhite,
    /// Both halves of one rectangle.
    SameRectangle,
}

/// The undotted stretches of an allowable dotting and the dot data between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub segments: Vec<Sash>,
    /// `true` for a black-type dot.
    pub dot_types: Vec<bool>,
    pub pairs: Vec<DotPair>,
}

pub fn decompose_dotting(d: &Dotting) -> Result<Decomposition> {
    d.require_allowable()?;
    let c = d.sash();
    let cells = c.cells();
    let dots = d.dot_positions();
    let mut segments = Vec::with_capacity(dots.len() + 1);
    let mut start = 1;
    for &dot in dots.iter().chain(std::iter::once(&(cells.len() + 1))) {
        let mut seg = cells[start - 1..dot - 1].to_vec();
        if seg.last() == Some(&Cell::RectLeft) {
            *seg.last_mut().expect("nonempty") = Cell::Black;
        }
        segments.push(Sash::from_cells_unchecked(seg));
        start = dot + 1;
    }
    let dot_types = dots.iter().map(|&i| c.cell(i).is_black_type()).collect();
    let pairs = dots
        .windows(2)
        .map(|w| {
            let (a, b) = (c.cell(w[0]), c.cell(w[1]));
            if w[1] != w[0] + 1 {
                DotPair::Plain
            } else if a == Cell::RectLeft {
                DotPair::SameRectangle
            } else if a == Cell::Black && b == Cell::White {
                DotPair::AdjacentBlackWhite
            } else {
                DotPair::Plain
            }
        })
        .collect();
    Ok(Decomposition {
        segments,
        dot_types,
        pairs,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtCell {
    Fixed(Cell),
    Mystery,
    BlackPlus,
    WhitePlus,
}

/// A sash pattern that may contain mystery and plus squares.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtendedSash {
    cells: Vec<ExtCell>,
}

impl ExtendedSash {
    pub fn new(cells: Vec<ExtCell>) -> Self {
        ExtendedSash { cells }
    }

    pub fn cells(&self) -> &[ExtCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Smallest sash of this form: mysteries and black-plus squares become
    /// black, white-plus squares white.
    pub fn lower(&self) -> Sash {
        Sash::from_cells_unchecked(
            self.cells
                .iter()
                .map(|c| match c {
                    ExtCell::Fixed(c) => *c,
                    ExtCell::WhitePlus => Cell::White,
                    ExtCell::Mystery | ExtCell::BlackPlus => Cell::Black,
                })
                .collect(),
        )
    }

    /// Largest sash of this form, resolved left to right.
    pub fn upper(&self) -> Sash {
        let mut out: Vec<Cell> = Vec::with_capacity(self.cells.len());
        let mut k = 0;
        while k < self.cells.len() {
            match self.cells[k] {
                ExtCell::Fixed(c) => out.push(c),
                ExtCell::BlackPlus => {
                    if self.cells.get(k + 1) == Some(&ExtCell::Fixed(Cell::White)) {
                        out.extend([Cell::RectLeft, Cell::RectRight]);
                        k += 1;
                    } else {
                        out.push(Cell::Black);
                    }
                }
                ExtCell::Mystery | ExtCell::WhitePlus => {
                    if out.last() == Some(&Cell::Black) {
                        *out.last_mut().expect("nonempty") = Cell::RectLeft;
                        out.push(Cell::RectRight);
                    } else {
                        out.push(Cell::White);
                    }
                }
            }
            k += 1;
        }
        Sash::from_cells_unchecked(out)
    }
}

impl fmt::Display for ExtendedSash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("e");
        }
        for c in &self.cells {
            f.write_str(match c {
                ExtCell::Fixed(Cell::Black) => "b",
                ExtCell::Fixed(Cell::White) => "w",
                ExtCell::Fixed(Cell::RectLeft) => "r",
                ExtCell::Fixed(Cell::RectRight) => "",
                ExtCell::Mystery => "?",
                ExtCell::BlackPlus => "B",
                ExtCell::WhitePlus => "W",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ExtendedSash {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(ExtendedSash::new(Vec::new()));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty extended sash".into()));
        }
        let mut cells = Vec::new();
        for ch in s.chars() {
            match ch {
                'b' => cells.push(ExtCell::Fixed(Cell::Black)),
                'w' => cells.push(ExtCell::Fixed(Cell::White)),
                'r' => cells.extend([ExtCell::Fixed(Cell::RectLeft), ExtCell::Fixed(Cell::RectRight)]),
                '?' => cells.push(ExtCell::Mystery),
                'B' => cells.push(ExtCell::BlackPlus),
                'W' => cells.push(ExtCell::WhitePlus),
                _ => return Err(Error::Parse(format!("invalid extended sash {s:?}"))),
            }
        }
        Ok(ExtendedSash::new(cells))
    }
}

/// Joins the segments of one parity with a junction square between
/// neighbours; `junction(i)` picks the square for the dot pair after `c_i`.
fn interleave(segments: &[Sash], first: usize, junction: impl Fn(usize) -> ExtCell) -> ExtendedSash {
    let mut cells = Vec::new();
    let mut i = first;
    while i < segments.len() {
        if i > first {
            cells.push(junction(i - 2));
        }
        cells.extend(segments[i].cells().iter().map(|&c| ExtCell::Fixed(c)));
        i += 2;
    }
    ExtendedSash::new(cells)
}

/// `(Â, B̂)` for an allowable dotting.
pub fn build_ab(d: &Dotting) -> Result<(ExtendedSash, ExtendedSash)> {
    let dec = decompose_dotting(d)?;
    let (a_first, b_first) = if dec.dot_types[0] { (0, 1) } else { (1, 0) };
    // the junction after segment i (0-based) stands for dots i and i + 1
    let a_hat = interleave(&dec.segments, a_first, |i| match dec.pairs[i] {
        DotPair::Plain => ExtCell::Mystery,
        DotPair::AdjacentBlackWhite => ExtCell::BlackPlus,
        DotPair::SameRectangle => ExtCell::WhitePlus,
    });
    let b_hat = interleave(&dec.segments, b_first, |_| ExtCell::Mystery);
    Ok((a_hat, b_hat))
}

/// The pair of intervals `[A̲, Ā] ⊗ [B̲, B̄]` contributed by one dotting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoproductTermBlock {
    pub dotting: Dotting,
    pub a_hat: ExtendedSash,
    pub b_hat: ExtendedSash,
    pub lower_a: Sash,
    pub upper_a: Sash,
    pub lower_b: Sash,
    pub upper_b: Sash,
}

impl CoproductTermBlock {
    pub fn left(&self) -> Vec<Sash> {
        sash_interval(&self.lower_a, &self.upper_a).expect("A̲ <= Ā")
    }

    pub fn right(&self) -> Vec<Sash> {
        sash_interval(&self.lower_b, &self.upper_b).expect("B̲ <= B̄")
    }

    pub fn tensor(&self) -> SashTensor {
        let left: SashElement = self.left().into_iter().collect();
        let right: SashElement = self.right().into_iter().collect();
        SashTensor::tensor(&left, &right)
    }
}

pub fn bounds(d: &Dotting) -> Result<CoproductTermBlock> {
    let (a_hat, b_hat) = build_ab(d)?;
    Ok(CoproductTermBlock {
        dotting: d.clone(),
        lower_a: a_hat.lower(),
        upper_a: a_hat.upper(),
        lower_b: b_hat.lower(),
        upper_b: b_hat.upper(),
        a_hat,
        b_hat,
    })
}

fn fusable(first: ExtCell, second: ExtCell) -> bool {
    use ExtCell::*;
    let white_side = matches!(second, Fixed(Cell::White) | WhitePlus | Mystery);
    let loose_white = matches!(second, WhitePlus | Mystery);
    (matches!(first, BlackPlus | Mystery) && white_side)
        || (matches!(first, Fixed(Cell::Black) | BlackPlus | Mystery) && loose_white)
}

/// Whether `x` is obtained from `h` by the allowed substitutions.
pub fn matches_form(x: &Sash, h: &ExtendedSash) -> bool {
    if x.is_unit() || x.len() != h.len() {
        return false;
    }
    let (xc, hc) = (x.cells(), h.cells());
    let mut k = 0;
    while k < xc.len() {
        let ok = match (xc[k], hc[k]) {
            (Cell::RectLeft, ExtCell::Fixed(Cell::RectLeft)) => true,
            (Cell::RectLeft, first) => fusable(first, hc[k + 1]),
            (c, ExtCell::Fixed(f)) => c == f,
            (Cell::Black, ExtCell::BlackPlus | ExtCell::Mystery) => true,
            (Cell::White, ExtCell::WhitePlus | ExtCell::Mystery) => true,
            _ => false,
        };
        if !ok {
            return false;
        }
        k += if xc[k] == Cell::RectLeft { 2 } else { 1 };
    }
    true
}

/// One block per allowable dotting of `c`.
pub fn coproduct_blocks(c: &Sash) -> Vec<CoproductTermBlock> {
    if c.is_unit() {
        return Vec::new();
    }
    enumerate_allowable_dottings(c)
        .expect("not the unit")
        .iter()
        .map(|d| bounds(d).expect("allowable"))
        .collect()
}

/// `Δ_S(C) = ∅ ⊗ C + C ⊗ ∅ + Σ_d I_d ⊗ J_d`.
pub fn sash_coproduct(c: &Sash) -> SashTensor {
    let mut out = SashTensor::basis(Sash::unit(), c.clone());
    if c.is_unit() {
        return out;
    }
    out.add_term(c.clone(), Sash::unit(), 1);
    for block in coproduct_blocks(c) {
        out += &block.tensor();
    }
    out
}

pub fn sash_coproduct_ext(a: &SashElement) -> SashTensor {
    a.map_to_tensor(sash_coproduct)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Sash {
        t.parse().unwrap()
    }

    fn ext(t: &str) -> ExtendedSash {
        t.parse().unwrap()
    }

    fn dot(t: &str) -> Dotting {
        t.parse().unwrap()
    }

    fn tensor(ts: &[(&str, &str)]) -> SashTensor {
        ts.iter().map(|(a, b)| (s(a), s(b))).collect()
    }

    fn sample_dotting() -> Dotting {
        dot("bbwwwrbwwrbbrbw@2,4,6,7,8,9,14,16,17,18")
    }

    #[test]
    fn sample_decomposition() {
        let dec = decompose_dotting(&sample_dotting()).unwrap();
        let texts: Vec<String> = dec.segments.iter().map(ToString::to_string).collect();
        assert_eq!(texts, ["b", "w", "w", "e", "e", "e", "wrb", "b", "e", "e", "e"]);
        assert!(dec.dot_types[0]);
        assert_eq!(dec.pairs[2], DotPair::SameRectangle);
        assert_eq!(dec.pairs[4], DotPair::AdjacentBlackWhite);
    }

    #[test]
    fn sample_bounds() {
        let block = bounds(&sample_dotting()).unwrap();
        assert_eq!(block.a_hat.to_string(), "b?wWBwrb?B");
        assert_eq!(block.b_hat.to_string(), "w???b?");
        assert_eq!(block.lower_a, s("bbwwbwrbbb"));
        assert_eq!(block.upper_a, s("rwwrrrb"));
        assert_eq!(block.lower_b, s("wbbbbb"));
        assert_eq!(block.upper_b, s("wwwwr"));
    }

    #[test]
    fn small_decompositions() {
        let dec = decompose_dotting(&dot("b@1")).unwrap();
        assert_eq!(dec.segments, vec![s("e"), s("e")]);
        assert_eq!(dec.dot_types, vec![true]);
        let dec = decompose_dotting(&dot("bw@1,2")).unwrap();
        assert_eq!(dec.segments, vec![s("e"), s("e"), s("e")]);
        assert_eq!(dec.dot_types, vec![true, false]);
        assert_eq!(dec.pairs, vec![DotPair::AdjacentBlackWhite]);
        assert!(decompose_dotting(&dot("bb@1,2")).is_err());

        let (a, b) = build_ab(&dot("b@1")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("e".into(), "e".into()));
        let (a, b) = build_ab(&dot("bw@1,2")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("B".into(), "e".into()));

        let block = bounds(&dot("bw@1,2")).unwrap();
        assert_eq!((block.lower_a, block.upper_a), (s("b"), s("b")));
        assert_eq!((block.lower_b, block.upper_b), (s("e"), s("e")));
    }

    #[test]
    fn forms() {
        assert!(matches_form(&s("b"), &ext("?")));
        assert!(matches_form(&s("w"), &ext("?")));
        assert!(!matches_form(&s("w"), &ext("B")));
        assert!(matches_form(&s("r"), &ext("Bw")));
        assert!(!matches_form(&s("r"), &ext("bw")));
        assert!(matches_form(&s("r"), &ext("bW")));
        assert!(matches_form(&s("e"), &ext("e")));
        let block = bounds(&sample_dotting()).unwrap();
        for x in [&block.lower_a, &block.upper_a] {
            assert!(matches_form(x, &block.a_hat));
        }
        for x in [&block.lower_b, &block.upper_b] {
            assert!(matches_form(x, &block.b_hat));
        }
        assert_eq!(ext("b?wWBwrb?B").to_string(), "b?wWBwrb?B");
    }

    #[test]
    fn coproducts() {
        assert_eq!(sash_coproduct(&s("e")), tensor(&[("u", "e"), ("e", "u")]));
        assert_eq!(sash_coproduct(&s("e")).to_string(), "[u](x)[e] + [e](x)[u]");
        assert_eq!(sash_coproduct(&s("b")), tensor(&[("u", "b"), ("b", "u"), ("e", "e")]));
        assert_eq!(
            sash_coproduct(&s("bw")),
            tensor(&[("u", "bw"), ("bw", "u"), ("e", "w"), ("b", "e")])
        );
        assert_eq!(sash_coproduct(&s("u")), tensor(&[("u", "u")]));
    }
}
