//! The sash operations computed the long way: transport to Pell permutations
//! with `η`, operate in the avoider algebra, and come back with `σ`.

use crate::congruence::{av_coproduct, av_product, CongruenceSystem};
use crate::mr::mr_dual_coproduct;
use crate::perm::{embed_pair, IndexSet};
use crate::sash::{eta, sigma, Sash, SashElement, SashTensor};
use crate::algebra::Basis;

/// `σ(η(A) •_Av η(B))`.
pub fn extrinsic_product(a: &Sash, b: &Sash) -> SashElement {
    let u = CongruenceSystem::pell();
    av_product(&eta(a), &eta(b), &u)
        .expect("η lands in the avoiders")
        .map_basis(|x| sigma(x))
}

/// `(σ ⊗ σ)(Δ_Av(η(C)))`.
pub fn extrinsic_coproduct(c: &Sash) -> SashTensor {
    let u = CongruenceSystem::pell();
    av_coproduct(&eta(c), &u)
        .expect("η lands in the avoiders")
        .map_basis(|x| sigma(x))
}

/// `σ((η D)_T · (η E)_{T^C})`, one term of the dual product.
pub fn extrinsic_gamma(t: &IndexSet, d: &Sash, e: &Sash) -> crate::Result<Sash> {
    Ok(sigma(embed_pair(&eta(d), &eta(e), t)?.as_word()))
}

pub fn extrinsic_dual_product(d: &Sash, e: &Sash) -> SashElement {
    let n = d.grade() + e.grade();
    IndexSet::subsets_of_size(n, d.grade())
        .iter()
        .map(|t| extrinsic_gamma(t, d, e).expect("sizes agree"))
        .collect()
}

/// `(σ ⊗ σ)(m*(η(C)))`.
pub fn extrinsic_dual_coproduct(c: &Sash) -> SashTensor {
    mr_dual_coproduct(&eta(c)).map_basis(|x| sigma(x))
}
