//! The three dual pair settings: U(p,q) with GL_k, Mp(2n,R) with O_k, and
//! O*(2n) with Sp_2k.

mod collapse;
mod count;
mod qset;
mod setting;
mod weight;

pub use collapse::{q_collapse_check, CollapseReport};
pub use count::count_q_determinant;
pub use qset::{alpha, enumerate_q, enumerate_t, in_q_criteria, in_q_definition, TableauLabel};
pub use setting::{sigma_admissible, Admissibility, Family, Regime, Setting, SigmaLabel};
pub use weight::{highest_weight, WeightVector};
