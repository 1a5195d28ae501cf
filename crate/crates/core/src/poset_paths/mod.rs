//! The root poset, widths of its subsets, facets of the order complex of
//! width-at-most-k subsets, and the bijection `Theta` from plane partitions.

mod poset;
mod theta;

pub use poset::{Point, RootPoset};
pub use theta::{corners, enumerate_facets, enumerate_facets_for, theta, theta_inverse, PathFamily};
