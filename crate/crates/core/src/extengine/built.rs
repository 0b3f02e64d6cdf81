use serde::Serialize;

use super::closed::ext_induced_closed;
use super::table::{ExtTable, Provenance};
use crate::error::{Error, Result};
use crate::homology::{
    binomial, exterior_inclusion, exterior_row_complex, homology_with_coefficients, subset_lattice_complex_labeled,
    ChainComplex, HomologyResult, IntegerMatrix,
};
use crate::ringcond::RingSpec;
use crate::rootdata::{RootSystem, SubsetMask};

/// The three complex-built computations, for degree bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftPath {
    /// Rows are exterior powers over `L >= I`; lattice degree `s`.
    CohomologyV,
    /// Rows over `L >= I`, dualized; `s = |L \ I|`.
    VToInduced,
    /// Rows over `L >= J`; lattice degree `s`.
    Steinberg,
}

/// `K = (Delta \ I) u J`, the bottom of the nonzero part of the complex
/// computing `Ext(v_I, v_J)`.
pub fn steinberg_bottom(rank: usize, i_set: SubsetMask, j_set: SubsetMask) -> SubsetMask {
    SubsetMask::full(rank).difference(i_set).union(j_set)
}

/// Total degree of a class in degree `s` of row `row`.
///
/// Every call re-checks the identities tying the shifts to the closed-form
/// degree: for the Steinberg path `|K| = |Delta \ I| + |I n J|` and
/// `|Delta \ K| + |Delta \ I| + |J| - |K| = |I u J| - |I n J|`, which is
/// where the top class of the top row lands.
pub fn total_degree(path: ShiftPath, rank: usize, i_set: SubsetMask, j_set: SubsetMask, s: usize, row: usize) -> Result<i64> {
    let delta = SubsetMask::full(rank);
    let n = |m: SubsetMask| m.len() as i64;
    let (s, row) = (s as i64, row as i64);
    let co_i = n(delta.difference(i_set));
    match path {
        ShiftPath::CohomologyV => {
            let shift = |s: i64, t: i64| s + t - co_i;
            if shift(co_i, co_i) != co_i {
                return Err(Error::Internal("top class of H(v_I) misplaced".into()));
            }
            Ok(shift(s, row))
        }
        ShiftPath::VToInduced => {
            let shift = |a: i64, b: i64| a + b;
            if i_set.union(j_set) == delta && shift(co_i, 0) != co_i {
                return Err(Error::Internal("bottom class of Ext(v_I, i_J) misplaced".into()));
            }
            Ok(shift(s, row))
        }
        ShiftPath::Steinberg => {
            let k = steinberg_bottom(rank, i_set, j_set);
            let co_k = n(delta.difference(k));
            let co_j = n(delta.difference(j_set));
            let cap = n(i_set.intersection(j_set));
            let cup = n(i_set.union(j_set));
            if n(k) != co_i + cap {
                return Err(Error::Internal(format!("|K| = {} but |Delta \\ I| + |I n J| = {}", n(k), co_i + cap)));
            }
            let chain = co_k + co_i + n(j_set) - n(k);
            if chain != cup - cap {
                return Err(Error::Internal(format!(
                    "degree chain gives {chain} but |I u J| - |I n J| = {}",
                    cup - cap
                )));
            }
            let shift = |s: i64, u: i64| s + u + co_i - co_j;
            if shift(co_k, co_k) != chain {
                return Err(Error::Internal(format!(
                    "top class lands in {} rather than {chain}",
                    shift(co_k, co_k)
                )));
            }
            Ok(shift(s, row))
        }
    }
}

/// One row of a complex-built computation.
#[derive(Debug, Clone, Serialize)]
pub struct RowDump {
    pub row: usize,
    pub complex: ChainComplex,
    pub homology: HomologyResult,
    /// Total degree of each lattice degree of this row.
    pub placement: Vec<i64>,
}

/// A complex-built table with the rows it came from.
#[derive(Debug, Clone)]
pub struct BuiltTable {
    pub path: ShiftPath,
    pub table: ExtTable,
    pub rows: Vec<RowDump>,
}

impl BuiltTable {
    pub fn dump_json(&self) -> serde_json::Value {
        serde_json::json!({ "path": self.path, "rows": self.rows })
    }
}

fn assemble(
    path: ShiftPath,
    rank: usize,
    i_set: SubsetMask,
    j_set: SubsetMask,
    spec: &RingSpec,
    rows: impl IntoIterator<Item = (usize, Result<ChainComplex>)>,
) -> Result<BuiltTable> {
    let mut table = ExtTable::new(Provenance::ComplexBuilt);
    let mut dumps = Vec::new();
    for (row, complex) in rows {
        let complex = complex?;
        let homology = homology_with_coefficients(&complex, spec)?;
        let mut placement = Vec::with_capacity(complex.len());
        for s in 0..complex.len() {
            let deg = total_degree(path, rank, i_set, j_set, s, row)?;
            placement.push(deg);
            if homology.degrees[s].is_zero() {
                continue;
            }
            let deg = usize::try_from(deg).map_err(|_| {
                Error::Contract(format!("row {row} has cohomology in degree {s}, which lands in total degree {deg}"))
            })?;
            table.add_homology(deg, &homology, s)?;
        }
        dumps.push(RowDump {
            row,
            complex,
            homology,
            placement,
        });
    }
    Ok(BuiltTable {
        path,
        table,
        rows: dumps,
    })
}

/// `H^*(G, v_I)` from the exterior rows over `L >= I`.
pub fn cohomology_v_built(rs: &RootSystem, i_set: SubsetMask, spec: &RingSpec) -> Result<BuiltTable> {
    let i_set = rs.check_mask(i_set)?;
    let rank = rs.rank();
    let m = rs.delta().difference(i_set).len();
    assemble(
        ShiftPath::CohomologyV,
        rank,
        i_set,
        SubsetMask::empty(),
        spec,
        (0..=m).map(|t| (t, exterior_row_complex(rank, i_set, t).map(|lc| lc.complex))),
    )
}

/// `Ext^*(v_I, i_J)` from the resolution of `v_I` by the `i_L`, `L >= I`:
/// row `b` has `Ext^b(i_L, i_J)` in position `L`, and the complex is the
/// dual of the lattice complex because `Ext(-, i_J)` reverses arrows.
pub fn ext_v_to_induced_built(rs: &RootSystem, i_set: SubsetMask, j_set: SubsetMask, spec: &RingSpec) -> Result<BuiltTable> {
    let i_set = rs.check_mask(i_set)?;
    let j_set = rs.check_mask(j_set)?;
    let rank = rs.rank();
    let top = rs.delta().difference(j_set).len();
    let row = |b: usize| -> Result<ChainComplex> {
        let coef = |l: SubsetMask| ext_induced_closed(rs, l, j_set).rank_at(b);
        let lc = subset_lattice_complex_labeled(
            rank,
            i_set,
            coef,
            |l, target, _| {
                let (src, dst) = (coef(l), coef(target));
                if src == dst && src > 0 {
                    IntegerMatrix::identity(src)
                } else {
                    IntegerMatrix::zeros(dst, src)
                }
            },
            |l, k| format!("L={l}:e{k}"),
        )?;
        Ok(lc.complex.dual())
    };
    assemble(ShiftPath::VToInduced, rank, i_set, j_set, spec, (0..=top).map(|b| (b, row(b))))
}

/// `Ext^*(v_I, v_J)` from the resolution of `v_J` by the `i_L`, `L >= J`:
/// row `u` has `Lambda^u X(M_L)` in position `L` when `L >= K`, zero
/// otherwise, with the inclusions of exterior bases as maps. The result is
/// then tensored with the exterior algebra of the center.
pub fn ext_steinberg_built(
    rs: &RootSystem,
    i_set: SubsetMask,
    j_set: SubsetMask,
    spec: &RingSpec,
    center_rank: usize,
) -> Result<BuiltTable> {
    let i_set = rs.check_mask(i_set)?;
    let j_set = rs.check_mask(j_set)?;
    let rank = rs.rank();
    let delta = rs.delta();
    let k = steinberg_bottom(rank, i_set, j_set);
    let top = delta.difference(j_set).len();
    let row = |u: usize| -> Result<ChainComplex> {
        let coef = |l: SubsetMask| {
            if k.is_subset(l) {
                binomial(delta.difference(l).len(), u)
            } else {
                0
            }
        };
        let lc = subset_lattice_complex_labeled(
            rank,
            j_set,
            coef,
            |l, target, _| {
                if coef(l) > 0 && coef(target) > 0 {
                    exterior_inclusion(delta.difference(l), delta.difference(target), u)
                } else {
                    IntegerMatrix::zeros(coef(target), coef(l))
                }
            },
            |l, idx| {
                let basis = crate::homology::k_subsets(delta.difference(l), u);
                format!("L={l}:w{}", basis[idx])
            },
        )?;
        Ok(lc.complex)
    };
    let mut built = assemble(ShiftPath::Steinberg, rank, i_set, j_set, spec, (0..=top).map(|u| (u, row(u))))?;
    built.table = built.table.kunneth_exterior(center_rank);
    Ok(built)
}
