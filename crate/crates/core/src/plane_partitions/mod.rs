//! The diagrams `D_k` for all seven Hermitian symmetric types, bounded plane
//! partitions inside them, and the Hilbert series numerators they generate.

mod diagram;
mod formulas;
mod partition;

pub use diagram::{diagram_d, diagram_d_recursive, interior, Diagram, HermitianType};
pub use formulas::{count_p_product, enumerate_p, hilbert_series_orbit, numerator_polynomial};
pub use partition::{c_statistic, enumerate_plane_partitions, PlanePartition};
