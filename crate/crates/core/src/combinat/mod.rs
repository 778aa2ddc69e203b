//! Ground-set objects: partitions, finite posets, unit interval orders and
//! simple graphs.

mod graph;
mod partition;
mod poset;
mod uio;

pub use graph::{clan_graph, inc_graph, Graph};
pub use partition::{conjugate, partitions_of, Partition};
pub use poset::{is_ab_free, naturally_labeled_posets, Poset, MAX_POSET_ENUMERATION};
pub use uio::{
    enumerate_uios, realize, uio_from_next, uio_from_points, uio_recognize, uio_recognize_with_labeling,
    UnitIntervalOrder,
};
