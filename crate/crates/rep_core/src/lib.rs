//! Integer labelling schemes for SU(2) and SU(3) eigenstates.
//!
//! Everything here is exact integer arithmetic: partitions and Young
//! tableaux, the `(P,Q;k,l,m)` state labels of SU(3), the `(2j, q=j+m)`
//! labels of SU(2), and the Schur labels that combine a partition, a weight
//! and a box-addition path.

mod error;
mod label;
mod partition;
mod state;

pub use error::RepError;
pub use label::{
    enumerate_labels, quark_content, replay_path, Group, SchurLabel, Weight,
};
pub use partition::{
    count_paths_to, hook_dimension_sn, partitions, validate_partition, Partition,
};
pub use state::{
    enumerate_states, klm_from_tty, su3_dimension, tty_from_klm, ReprStateSU2, ReprStateSU3,
};

/// Row index (0 = first row) that a path entry `p` adds a box to.
///
/// The largest entry `d-1` means the first row, `0` the last row.
pub fn row_of_entry(p: u8, d: usize) -> Option<usize> {
    let p = p as usize;
    (p < d).then(|| d - 1 - p)
}
