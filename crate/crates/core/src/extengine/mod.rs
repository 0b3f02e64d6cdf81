//! Ext groups between parabolically induced representations and their
//! generalized Steinberg quotients, computed twice: from closed forms and
//! from explicitly assembled complexes.

mod built;
mod closed;
mod strata;
mod table;
mod zelevinsky;

pub use built::{
    cohomology_v_built, ext_steinberg_built, ext_v_to_induced_built, steinberg_bottom, total_degree, BuiltTable,
    RowDump, ShiftPath,
};
pub use closed::{
    cohomology_v_closed, ext_induced_closed, ext_steinberg_closed, ext_v_to_induced_closed, induced_cohomology,
    trivial_cohomology,
};
pub use strata::{
    ext_induced_via_strata, vanishing_certificate, CertificateBranch, StrataTable, StratumReport,
    VanishingCertificate,
};
pub use table::{ExtReport, ExtTable, Hypotheses, Method, Provenance, QueryInfo, TableEntry};
pub use zelevinsky::{
    ext_cuspidal_line, orientation_from_permutation, orientation_from_subset, subset_from_orientation, Orientation,
};

use crate::error::{Error, Result};
use crate::ringcond::{banal_proxy_check, bon_check, RingSpec};
use crate::rootdata::{RootSystem, SubsetMask};
use crate::weyl::WeylGroup;

/// Whether `spec` passes both the bon check and the banal proxy for `rs`.
pub fn ring_hypotheses(rs: &RootSystem, spec: &RingSpec) -> Result<Hypotheses> {
    let bon = bon_check(rs, spec).0;
    let banal = banal_proxy_check(rs, spec)?.0;
    Ok(if bon && banal {
        Hypotheses::Satisfied
    } else {
        Hypotheses::Outside
    })
}

/// A computed table with the data needed to report it.
#[derive(Debug, Clone)]
pub struct ExtOutcome {
    pub table: ExtTable,
    pub hypotheses: Hypotheses,
    /// Complexes behind a complex-built table, as JSON.
    pub complexes: Option<serde_json::Value>,
}

fn reconcile(
    what: &str,
    method: Method,
    hypotheses: Hypotheses,
    closed: impl FnOnce() -> ExtTable,
    built: impl FnOnce() -> Result<(ExtTable, serde_json::Value)>,
) -> Result<ExtOutcome> {
    match method {
        Method::ClosedForm => Ok(ExtOutcome {
            table: closed(),
            hypotheses,
            complexes: None,
        }),
        Method::ComplexBuilt => {
            let (table, dump) = built()?;
            Ok(ExtOutcome {
                table,
                hypotheses,
                complexes: Some(dump),
            })
        }
        Method::Both => {
            let expected = closed();
            let (table, dump) = built()?;
            if hypotheses == Hypotheses::Satisfied {
                if !table.same_groups(&expected) {
                    return Err(Error::Verification {
                        message: format!("{what}: closed form gives {expected}, complex gives {table}"),
                        dump: dump.to_string(),
                    });
                }
                if table.has_torsion() {
                    return Err(Error::Verification {
                        message: format!("{what}: complex-built table {table} has torsion"),
                        dump: dump.to_string(),
                    });
                }
            }
            Ok(ExtOutcome {
                table,
                hypotheses,
                complexes: Some(dump),
            })
        }
    }
}

/// `Ext^*(v_I, v_J)` tensored with the exterior algebra of a center of
/// rank `center_rank`.
pub fn ext_steinberg(
    rs: &RootSystem,
    i_set: SubsetMask,
    j_set: SubsetMask,
    spec: &RingSpec,
    method: Method,
    center_rank: usize,
) -> Result<ExtOutcome> {
    let hyp = ring_hypotheses(rs, spec)?;
    reconcile(
        &format!("Ext(v_{i_set}, v_{j_set}) for {}", rs.cartan_type()),
        method,
        hyp,
        || ext_steinberg_closed(rs, i_set, j_set, center_rank),
        || {
            let b = ext_steinberg_built(rs, i_set, j_set, spec, center_rank)?;
            let dump = b.dump_json();
            Ok((b.table, dump))
        },
    )
}

/// `Ext^*(v_I, i_J)`.
pub fn ext_v_to_induced(
    rs: &RootSystem,
    i_set: SubsetMask,
    j_set: SubsetMask,
    spec: &RingSpec,
    method: Method,
) -> Result<ExtOutcome> {
    let hyp = ring_hypotheses(rs, spec)?;
    reconcile(
        &format!("Ext(v_{i_set}, i_{j_set}) for {}", rs.cartan_type()),
        method,
        hyp,
        || ext_v_to_induced_closed(rs, i_set, j_set),
        || {
            let b = ext_v_to_induced_built(rs, i_set, j_set, spec)?;
            let dump = b.dump_json();
            Ok((b.table, dump))
        },
    )
}

/// `H^*(G, v_I)`.
pub fn cohomology_v(rs: &RootSystem, i_set: SubsetMask, spec: &RingSpec, method: Method) -> Result<ExtOutcome> {
    let hyp = ring_hypotheses(rs, spec)?;
    reconcile(
        &format!("H(v_{i_set}) for {}", rs.cartan_type()),
        method,
        hyp,
        || cohomology_v_closed(rs, i_set),
        || {
            let b = cohomology_v_built(rs, i_set, spec)?;
            let dump = b.dump_json();
            Ok((b.table, dump))
        },
    )
}

/// `Ext^*(i_I, i_J)`; the complex-built route is the stratification by
/// double cosets.
pub fn ext_induced(
    weyl: &WeylGroup,
    i_set: SubsetMask,
    j_set: SubsetMask,
    spec: &RingSpec,
    method: Method,
) -> Result<ExtOutcome> {
    let rs = weyl.root_system();
    let hyp = ring_hypotheses(rs, spec)?;
    reconcile(
        &format!("Ext(i_{i_set}, i_{j_set}) for {}", rs.cartan_type()),
        method,
        hyp,
        || ext_induced_closed(rs, i_set, j_set),
        || {
            let s = ext_induced_via_strata(weyl, i_set, j_set, spec)?;
            let dump = serde_json::to_value(&s.strata).expect("strata serialize");
            Ok((s.table, dump))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanType;

    fn rs(ty: &str) -> RootSystem {
        RootSystem::from_type(ty.parse::<CartanType>().unwrap()).unwrap()
    }

    fn mask(ix: &[usize], rank: usize) -> SubsetMask {
        SubsetMask::from_indices(ix, rank).unwrap()
    }

    #[test]
    fn both_methods_agree_on_examples() {
        let a2 = rs("A2");
        let spec: RingSpec = "q=3,d=5".parse().unwrap();
        let out = ext_steinberg(&a2, mask(&[0], 2), mask(&[1], 2), &spec, Method::Both, 0).unwrap();
        assert_eq!(out.table.to_string(), "{2:1}");
        assert_eq!(out.hypotheses, Hypotheses::Satisfied);
        assert!(out.complexes.is_some());

        let out = ext_v_to_induced(&a2, mask(&[0], 2), mask(&[1], 2), &spec, Method::Both).unwrap();
        assert_eq!(out.table.to_string(), "{1:1, 2:1}");

        let out = cohomology_v(&a2, mask(&[0], 2), &spec, Method::Both).unwrap();
        assert_eq!(out.table.to_string(), "{1:1}");
        let out = cohomology_v(&a2, mask(&[0], 2), &spec, Method::ClosedForm).unwrap();
        assert!(out.complexes.is_none());
    }

    #[test]
    fn outside_hypotheses_is_labelled_not_asserted() {
        let a1 = rs("A1");
        let spec: RingSpec = "q=3,d=2".parse().unwrap();
        assert_eq!(ring_hypotheses(&a1, &spec).unwrap(), Hypotheses::Outside);
        let out = ext_steinberg(&a1, SubsetMask::empty(), a1.delta(), &spec, Method::Both, 0).unwrap();
        assert_eq!(out.hypotheses, Hypotheses::Outside);
    }

    #[test]
    fn reconcile_reports_mismatch_with_dump() {
        let err = reconcile(
            "probe",
            Method::Both,
            Hypotheses::Satisfied,
            || ExtTable::from_ranks([(0, 1)], Provenance::ClosedForm),
            || Ok((ExtTable::from_ranks([(1, 1)], Provenance::ComplexBuilt), serde_json::json!({"rows": []}))),
        )
        .unwrap_err();
        match err {
            Error::Verification { message, dump } => {
                assert!(message.contains("probe"));
                assert!(dump.contains("rows"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let ok = reconcile(
            "probe",
            Method::Both,
            Hypotheses::Outside,
            || ExtTable::from_ranks([(0, 1)], Provenance::ClosedForm),
            || Ok((ExtTable::from_ranks([(1, 1)], Provenance::ComplexBuilt), serde_json::json!({}))),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn torsion_is_a_verification_failure() {
        let mut t = ExtTable::new(Provenance::ComplexBuilt);
        t.add(0, 1, vec![2]);
        let err = reconcile(
            "probe",
            Method::Both,
            Hypotheses::Satisfied,
            || ExtTable::from_ranks([(0, 1)], Provenance::ClosedForm),
            || Ok((t, serde_json::json!({}))),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Verification { .. }));
    }
}
