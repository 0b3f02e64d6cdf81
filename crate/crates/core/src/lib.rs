//! Exact computation of Ext groups between parabolically induced
//! representations of split reductive groups, with independent
//! cross-checks between closed forms and explicitly built complexes.

pub mod error;
pub mod extengine;
pub mod homology;
pub mod ringcond;
pub mod rootdata;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use ringcond::RingSpec;
pub use rootdata::{CartanType, CharacterVector, RootSystem, Series, SubsetMask};
pub use weyl::{WeylElement, WeylGroup};
