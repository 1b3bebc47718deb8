//! Exact scalars, graded spaces, sparse multilinear maps, permutations and
//! the sign bookkeeping shared by every other module.

pub mod comb;
pub mod limits;
pub mod linalg;
pub mod multimap;
pub mod perm;
pub mod scalar;
pub mod space;
pub mod suspension;

pub use comb::{Comb, Vector};
pub use limits::Limits;
pub use multimap::MultiMap;
pub use perm::Permutation;
pub use scalar::Scalar;
pub use space::{BasisIndex, GradedSpace};

/// `(-1)^e` as `±1`.
#[inline]
pub fn parity(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
