//! Finite compacta, the Hausdorff metric, hyperspace entourages, and the
//! constructive hyperspace transitivity witness.

mod compactum;
mod entourage;
mod witness;

pub use compactum::{hausdorff_distance, image_compactum, Compactum};
pub use entourage::{entourage_image, k_entourage_contains, EntourageImage, EntourageRef, FiniteUniformity, Relation};
pub use witness::compact_witness;

pub(crate) use compactum::hausdorff_unchecked;
pub(crate) use witness::{pull_back_cloud, shared_iterate};
