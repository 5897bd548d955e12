//! The Hopf algebra structure on sashes, computed directly on tilings.

mod coproduct;
mod dotting;
mod gamma;
mod product;

pub use coproduct::{
    bounds, build_ab, coproduct_blocks, decompose_dotting, matches_form, sash_coproduct,
    sash_coproduct_ext, CoproductTermBlock, Decomposition, DotPair, ExtCell, ExtendedSash,
};
pub use dotting::{
    allowable_set_to_dotting, allowable_sets, dotting_to_allowable_set,
    enumerate_allowable_dottings, tau, Dotting,
};
pub use gamma::{gamma, sash_dual_product, sash_dual_product_ext};
pub use product::{
    sash_dual_coproduct, sash_dual_coproduct_ext, sash_product, sash_product_bounds,
    sash_product_ext,
};
