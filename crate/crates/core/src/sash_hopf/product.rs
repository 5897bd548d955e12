use crate::sash::{join_cells as sash_of, Cell, Sash, SashElement, SashTensor};

const RECT: [Cell; 2] = [Cell::RectLeft, Cell::RectRight];

/// `A •_S B`, the sum over the sash interval from `A·b·B` up to `A'·r·B`
/// (when `A = A'·b`) or `A·w·B`, written out term by term.
pub fn sash_product(a: &Sash, b: &Sash) -> SashElement {
    if a.is_unit() {
        return SashElement::basis(b.clone());
    }
    if b.is_unit() {
        return SashElement::basis(a.clone());
    }
    let (x, y) = (a.cells(), b.cells());
    let mut terms = vec![
        sash_of(&[x, &[Cell::Black], y]),
        sash_of(&[x, &[Cell::White], y]),
    ];
    if let Some((Cell::Black, front)) = x.split_last() {
        terms.push(sash_of(&[front, &RECT, y]));
    }
    if let Some((Cell::White, rest)) = y.split_first() {
        terms.push(sash_of(&[x, &RECT, rest]));
    }
    terms.into_iter().collect()
}

/// Bottom and top of the product interval; `None` when a factor is the unit.
pub fn sash_product_bounds(a: &Sash, b: &Sash) -> Option<(Sash, Sash)> {
    if a.is_unit() || b.is_unit() {
        return None;
    }
    let (x, y) = (a.cells(), b.cells());
    let lo = sash_of(&[x, &[Cell::Black], y]);
    let hi = match x.split_last() {
        Some((Cell::Black, front)) => sash_of(&[front, &RECT, y]),
        _ => sash_of(&[x, &[Cell::White], y]),
    };
    Some((lo, hi))
}

pub fn sash_product_ext(a: &SashElement, b: &SashElement) -> SashElement {
    crate::algebra::bilinear(a, b, sash_product)
}

/// `C_i`: the first `i` cells, a dangling left half demoted to black.
fn head(c: &[Cell], i: usize) -> Sash {
    let mut cells = c[..i].to_vec();
    if cells.last() == Some(&Cell::RectLeft) {
        *cells.last_mut().expect("nonempty") = Cell::Black;
    }
    Sash::from_cells_unchecked(cells)
}

/// The cells after position `i + 1`, a dangling right half promoted to white.
fn tail(c: &[Cell], i: usize) -> Sash {
    let mut cells = c[i + 1..].to_vec();
    if cells.first() == Some(&Cell::RectRight) {
        cells[0] = Cell::White;
    }
    Sash::from_cells_unchecked(cells)
}

/// `m*_S(C) = Σ_{i=-1}^{n} C_i ⊗ C^{n-i-1}`.
pub fn sash_dual_coproduct(c: &Sash) -> SashTensor {
    if c.is_unit() {
        return SashTensor::basis(Sash::unit(), Sash::unit());
    }
    let cells = c.cells();
    let n = cells.len();
    let mut out = SashTensor::basis(Sash::unit(), c.clone());
    for i in 0..n {
        out.add_term(head(cells, i), tail(cells, i), 1);
    }
    out.add_term(c.clone(), Sash::unit(), 1);
    out
}

pub fn sash_dual_coproduct_ext(a: &SashElement) -> SashTensor {
    a.map_to_tensor(sash_dual_coproduct)
}
