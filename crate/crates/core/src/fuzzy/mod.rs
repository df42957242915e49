//! Step fuzzy sets, time warps, the three fuzzy metrics and their
//! entourages, Zadeh's extension, and level partitions.

mod metrics;
mod partition;
mod sendograph;
mod skorokhod;
mod step;
mod warp;
mod zadeh;

pub use metrics::{d_infty, d_sendo, f_entourage_contains, s_entourage_contains};
pub use partition::{level_partition, merge_partitions, partition_holds};
pub use sendograph::{sendograph, sendograph_image, SendographSegment};
pub use skorokhod::{d_skorokhod, g_entourage_contains, skorokhod, SkorokhodSolution};
pub use step::{alpha_cut, characteristic, right_limit_cut, validate, validate_set, StepFuzzySet};
pub use warp::{warp_apply, warp_norm, TimeWarp};
pub use zadeh::zadeh_extend;
