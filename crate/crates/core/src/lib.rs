//! Permutations, the Malvenuto-Reutenauer Hopf algebra, pattern-avoidance
//! congruences of the weak order and the sash Hopf algebra on Pell
//! permutations.

pub mod algebra;
pub mod congruence;
pub mod error;
pub mod extrinsic;
pub mod hasse;
pub mod mr;
pub mod perm;
pub mod sash;
pub mod sash_hopf;
pub mod verify;

pub use error::{Error, Result};
