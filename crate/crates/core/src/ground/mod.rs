//! Metric ground spaces, points, and exactly evaluated self-maps.

mod map;
mod mixing;
mod space;

pub use map::{apply_map, preimage_points, DynMap, MapKind, MapSpec};
pub use mixing::{interval_cover_time, tent_inverse_branch, Branch, Window};
pub use space::{distance, FiniteMetric, GroundSpace, Point};
