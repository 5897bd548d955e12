use crate::algebra::Basis;
use crate::error::{Error, Result};
use crate::perm::IndexSet;
use crate::sash::{Cell, Sash, SashElement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Arrow {
    /// Within `D`, crossing its cell with this 0-based index.
    InD(usize),
    InE(usize),
    DToE,
    EToD,
}

/// Which factor carries label `h` and the 0-based gap it sits in.
fn gap_of(labels: &[Option<(bool, usize)>], h: usize) -> (bool, usize) {
    labels[h].expect("label assigned")
}

/// `γ_T(D ⊗ E)`: walk the arrows `h → h + 1` through the gaps of `D`
/// (labelled by `T`) and of `E` (labelled by `T^C`).
pub fn gamma(t: &IndexSet, d: &Sash, e: &Sash) -> Result<Sash> {
    let p = d.grade();
    let n = p + e.grade();
    if t.len() != p {
        return Err(Error::SizeMismatch {
            expected: p,
            actual: t.len(),
        });
    }
    if !t.within(n) {
        return Err(Error::OutOfRange {
            set: t.to_string(),
            n,
        });
    }
    if d.is_unit() {
        return Ok(e.clone());
    }
    if e.is_unit() {
        return Ok(d.clone());
    }

    // labels[h] = (in D?, gap index)
    let mut labels = vec![None; n + 1];
    let (mut gd, mut ge) = (0, 0);
    for h in 1..=n {
        if t.contains(h as u32) {
            labels[h] = Some((true, gd));
            gd += 1;
        } else {
            labels[h] = Some((false, ge));
            ge += 1;
        }
    }
    let arrow = |h: usize| -> Arrow {
        match (gap_of(&labels, h), gap_of(&labels, h + 1)) {
            ((true, g), (true, _)) => Arrow::InD(g),
            ((false, g), (false, _)) => Arrow::InE(g),
            ((true, _), (false, _)) => Arrow::DToE,
            ((false, _), (true, _)) => Arrow::EToD,
        }
    };
    let (dc, ec) = (d.cells(), e.cells());

    let mut out = Vec::with_capacity(n - 1);
    let mut h = 1;
    while h < n {
        let this = arrow(h);
        let next = (h + 1 < n).then(|| arrow(h + 1));
        let fuse = match (this, next) {
            (Arrow::DToE, Some(Arrow::EToD)) => {
                // the D cell between labels h and h + 2
                dc[gap_of(&labels, h).1].is_white_type()
            }
            (Arrow::InE(g), Some(Arrow::EToD)) => ec[g].is_black_type(),
            _ => false,
        };
        if fuse {
            out.extend([Cell::RectLeft, Cell::RectRight]);
            h += 2;
            continue;
        }
        out.push(match this {
            Arrow::InD(g) => dc[g],
            Arrow::InE(g) => ec[g],
            Arrow::DToE => Cell::Black,
            Arrow::EToD => Cell::White,
        });
        h += 1;
    }
    Ok(Sash::from_cells_unchecked(normalize(out)))
}

/// Demotes rectangle halves that lost their partner.
fn normalize(mut cells: Vec<Cell>) -> Vec<Cell> {
    let mut i = 0;
    while i < cells.len() {
        match cells[i] {
            Cell::RectLeft if cells.get(i + 1) == Some(&Cell::RectRight) => i += 2,
            Cell::RectLeft => {
                cells[i] = Cell::Black;
                i += 1;
            }
            Cell::RectRight => {
                cells[i] = Cell::White;
                i += 1;
            }
            _ => i += 1,
        }
    }
    cells
}

/// `Δ*_S(D ⊗ E) = Σ_{|T| = grade D} γ_T(D ⊗ E)`.
pub fn sash_dual_product(d: &Sash, e: &Sash) -> SashElement {
    let n = d.grade() + e.grade();
    IndexSet::subsets_of_size(n, d.grade())
        .iter()
        .map(|t| gamma(t, d, e).expect("T has the right size"))
        .collect()
}

pub fn sash_dual_product_ext(a: &SashElement, b: &SashElement) -> SashElement {
    crate::algebra::bilinear(a, b, sash_dual_product)
}
