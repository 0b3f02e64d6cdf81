use std::fmt;

use serde::Serialize;

use super::closed::ext_steinberg_closed;
use super::table::ExtTable;
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Series, SubsetMask};

/// Orientation of the segment graph on `k` vertices: edge `i` joins vertex
/// `i` and `i + 1` and is forward when `forward[i]` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    /// Number of vertices.
    pub fn k(&self) -> usize {
        self.forward.len() + 1
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<&str> = self.forward.iter().map(|&b| if b { "forward" } else { "backward" }).collect();
        write!(f, "({})", words.join(", "))
    }
}

fn check_k(k: usize) -> Result<()> {
    if (2..=SubsetMask::MAX_RANK + 1).contains(&k) {
        Ok(())
    } else {
        Err(Error::Config(format!("k = {k} must lie in 2..={}", SubsetMask::MAX_RANK + 1)))
    }
}

/// Edge `i` is forward iff simple root `i` lies in `I`.
pub fn orientation_from_subset(k: usize, i_set: SubsetMask) -> Result<Orientation> {
    check_k(k)?;
    let i_set = SubsetMask::from_bits(i_set.bits(), k - 1)?;
    let o = Orientation {
        forward: (0..k - 1).map(|i| i_set.contains(i)).collect(),
    };
    if subset_from_orientation(&o)? != i_set {
        return Err(Error::Internal(format!("orientation {o} does not round-trip to {i_set}")));
    }
    Ok(o)
}

/// Inverse of [`orientation_from_subset`].
pub fn subset_from_orientation(o: &Orientation) -> Result<SubsetMask> {
    check_k(o.k())?;
    let ix: Vec<usize> = (0..o.forward.len()).filter(|&i| o.forward[i]).collect();
    SubsetMask::from_indices(&ix, o.k() - 1)
}

/// Edge `i` is forward iff `w(i) < w(i + 1)`; `w` is given by its values.
pub fn orientation_from_permutation(w: &[usize]) -> Result<Orientation> {
    let k = w.len();
    check_k(k)?;
    let mut seen = vec![false; k];
    for &x in w {
        if x >= k || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Config(format!("{w:?} is not a permutation of 0..{k}")));
        }
    }
    Ok(Orientation {
        forward: w.windows(2).map(|p| p[0] < p[1]).collect(),
    })
}

/// Ext between the generalized Steinberg constituents attached to `I` and
/// `J` on a cuspidal line of length `k`: `R` in degrees `i` and `i + 1`,
/// `i = |I u J| - |I n J|`.
pub fn ext_cuspidal_line(k: usize, i_set: SubsetMask, j_set: SubsetMask) -> Result<ExtTable> {
    check_k(k)?;
    let i_set = SubsetMask::from_bits(i_set.bits(), k - 1)?;
    let j_set = SubsetMask::from_bits(j_set.bits(), k - 1)?;
    let i = i_set.union(j_set).len() - i_set.intersection(j_set).len();
    let table = ExtTable::from_ranks([(i, 1), (i + 1, 1)], super::table::Provenance::ClosedForm);
    let rs = RootSystem::from_type(crate::rootdata::CartanType::new(Series::A, k - 1)?)?;
    if !table.same_groups(&ext_steinberg_closed(&rs, i_set, j_set, 1)) {
        return Err(Error::Internal(format!("cuspidal line table {table} disagrees with the rank-one center formula")));
    }
    Ok(table)
}
