//! The Malvenuto-Reutenauer Hopf algebra on permutations and its graded dual.

use crate::algebra::{bilinear, Basis, ModuleElement, TensorElement};
use crate::perm::{
    embed_pair, inverse, restrict, shifted_shuffles, standardize, IndexSet, Permutation, Word,
};

impl Basis for Permutation {
    fn grade(&self) -> usize {
        self.size()
    }
}

pub type PermElement = ModuleElement<Permutation>;
pub type PermTensor = TensorElement<Permutation>;

/// `x • y`: the sum of all shifted shuffles.
pub fn mr_product(x: &Permutation, y: &Permutation) -> PermElement {
    shifted_shuffles(x, y).into_iter().collect()
}

pub fn mr_product_ext(a: &PermElement, b: &PermElement) -> PermElement {
    bilinear(a, b, mr_product)
}

/// `Δ(x) = Σ_i st(x_1..x_i) ⊗ st(x_{i+1}..x_p)`.
pub fn mr_coproduct(x: &Permutation) -> PermTensor {
    let e = x.entries();
    (0..=e.len())
        .map(|i| {
            let (pre, post) = e.split_at(i);
            (
                standardize(&Word::from_vec_unchecked(pre.to_vec())),
                standardize(&Word::from_vec_unchecked(post.to_vec())),
            )
        })
        .collect()
}

pub fn mr_coproduct_ext(a: &PermElement) -> PermTensor {
    a.map_to_tensor(mr_coproduct)
}

/// `Δ*(x ⊗ y) = Σ_{|T| = |x|} (x)_T · (y)_{T^C}`.
pub fn mr_dual_product(x: &Permutation, y: &Permutation) -> PermElement {
    let n = x.size() + y.size();
    IndexSet::subsets_of_size(n, x.size())
        .iter()
        .map(|t| embed_pair(x, y, t).expect("sizes agree by construction"))
        .collect()
}

pub fn mr_dual_product_ext(a: &PermElement, b: &PermElement) -> PermElement {
    bilinear(a, b, mr_dual_product)
}

/// `m*(z) = Σ_i z|_[i] ⊗ st(z|_[i+1,n])`.
pub fn mr_dual_coproduct(z: &Permutation) -> PermTensor {
    let n = z.size();
    (0..=n)
        .map(|i| {
            let low = restrict(z, &IndexSet::first(i));
            let high = restrict(z, &IndexSet::interval(i as u32 + 1, n as u32));
            (
                Permutation::try_from_word(low).expect("restriction to [i] is a permutation"),
                standardize(&high),
            )
        })
        .collect()
}

pub fn mr_dual_coproduct_ext(a: &PermElement) -> PermTensor {
    a.map_to_tensor(mr_dual_coproduct)
}

/// Basiswise group inverse.
pub fn inv_map(e: &PermElement) -> PermElement {
    e.map_basis(inverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sum(list: &[&str]) -> PermElement {
        list.iter().map(|s| p(s)).collect()
    }

    fn tensor(list: &[(&str, &str)]) -> PermTensor {
        list.iter().map(|(a, b)| (p(a), p(b))).collect()
    }

    #[test]
    fn products() {
        assert_eq!(mr_product(&p("1"), &p("1")), sum(&["12", "21"]));
        assert_eq!(mr_product(&Permutation::empty(), &p("312")), sum(&["312"]));
        assert_eq!(mr_product(&p("12"), &p("1")), sum(&["123", "132", "312"]));
    }

    #[test]
    fn coproducts() {
        assert_eq!(mr_coproduct(&p("1")), tensor(&[("()", "1"), ("1", "()")]));
        assert_eq!(mr_coproduct(&p("21")), tensor(&[("()", "21"), ("1", "1"), ("21", "()")]));
        assert_eq!(
            mr_coproduct(&p("312")),
            tensor(&[("()", "312"), ("1", "12"), ("21", "1"), ("312", "()")])
        );
    }

    #[test]
    fn dual_product() {
        assert_eq!(mr_dual_product(&p("1"), &p("1")), sum(&["12", "21"]));
        assert_eq!(mr_dual_product(&Permutation::empty(), &p("231")), sum(&["231"]));
        // Δ*(x ⊗ y) = Inv(x⁻¹ • y⁻¹)
        let (x, y) = (p("12"), p("1"));
        let via_inverse = inv_map(&mr_product(&inverse(&x), &inverse(&y)));
        assert_eq!(mr_dual_product(&x, &y), via_inverse);
    }

    #[test]
    fn dual_coproduct() {
        assert_eq!(mr_dual_coproduct(&p("1")), tensor(&[("()", "1"), ("1", "()")]));
        let z = p("312");
        assert_eq!(
            mr_dual_coproduct(&z),
            tensor(&[("()", "312"), ("1", "21"), ("12", "1"), ("312", "()")])
        );
        // m*(z) = (Inv ⊗ Inv)(Δ(z⁻¹))
        let via_inverse = mr_coproduct(&inverse(&z)).map_basis(inverse);
        assert_eq!(mr_dual_coproduct(&z), via_inverse);
    }

    #[test]
    fn inverse_map() {
        assert_eq!(inv_map(&sum(&["312"])), sum(&["231"]));
        let fixed = ModuleElement::term(p("12"), 2) + sum(&["21"]);
        assert_eq!(inv_map(&fixed), fixed);
        let e = sum(&["312", "2413", "1"]);
        assert_eq!(inv_map(&inv_map(&e)), e);
    }
}
