use super::table::{ExtTable, Provenance};
use crate::rootdata::{RootSystem, SubsetMask};

const CF: Provenance = Provenance::ClosedForm;

/// `H^*(G, 1)`: the exterior algebra on the characters of a center of rank
/// `center_rank`.
pub fn trivial_cohomology(center_rank: usize) -> ExtTable {
    ExtTable::exterior(center_rank, 0, CF)
}

/// `H^*(G, i_I)`: exterior algebra on `|Delta \ I|` generators.
pub fn induced_cohomology(rs: &RootSystem, i_set: SubsetMask) -> ExtTable {
    ExtTable::exterior(rs.delta().difference(i_set).len(), 0, CF)
}

/// `Ext^*(i_I, i_J)`: exterior algebra on `|Delta \ J|` generators when
/// `J <= I`, zero otherwise.
pub fn ext_induced_closed(rs: &RootSystem, i_set: SubsetMask, j_set: SubsetMask) -> ExtTable {
    if j_set.is_subset(i_set) {
        ExtTable::exterior(rs.delta().difference(j_set).len(), 0, CF)
    } else {
        ExtTable::new(CF)
    }
}

/// `Ext^*(v_I, i_J)`: exterior algebra on `|Delta \ J|` generators starting
/// in degree `|Delta \ I|` when `I u J = Delta`, zero otherwise.
pub fn ext_v_to_induced_closed(rs: &RootSystem, i_set: SubsetMask, j_set: SubsetMask) -> ExtTable {
    let delta = rs.delta();
    if i_set.union(j_set) == delta {
        ExtTable::exterior(delta.difference(j_set).len(), delta.difference(i_set).len(), CF)
    } else {
        ExtTable::new(CF)
    }
}

/// `H^*(G, v_I)`: one copy of `R` in degree `|Delta \ I|`.
pub fn cohomology_v_closed(rs: &RootSystem, i_set: SubsetMask) -> ExtTable {
    ExtTable::from_ranks([(rs.delta().difference(i_set).len(), 1)], CF)
}

/// `Ext^*(v_I, v_J)` with a center of rank `c`: `C(c, j)` copies of `R` in
/// degree `|I u J| - |I n J| + j`.
pub fn ext_steinberg_closed(_rs: &RootSystem, i_set: SubsetMask, j_set: SubsetMask, center_rank: usize) -> ExtTable {
    let i0 = i_set.union(j_set).len() - i_set.intersection(j_set).len();
    ExtTable::exterior(center_rank, i0, CF)
}
