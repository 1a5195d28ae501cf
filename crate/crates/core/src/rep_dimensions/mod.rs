//! Dimension oracles: GL_n by the Weyl product, O_k and Sp_2k by counting
//! Proctor's tableaux, and a generic Weyl dimension formula over stored root data.

mod classical;
mod weyl;

pub use classical::{dim_f_lambda, dim_gl, dim_o, dim_sp, dim_u_sigma};
pub use weyl::{dim_weyl, DominantWeight, RootSystemData};
