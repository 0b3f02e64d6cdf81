//! Exhaustive agreement sweeps between closed forms and built complexes.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extengine::{
    cohomology_v, ext_induced, ext_steinberg_built, ext_v_to_induced, ext_steinberg, Hypotheses, Method,
};
use crate::homology::{exterior_row_complex, homology_with_coefficients};
use crate::ringcond::{condition_report, RingSpec};
use crate::rootdata::{RootSystem, SubsetMask};
use crate::weyl::WeylGroup;

/// Which pairs to check and how.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Every pair of subsets of the simple roots.
    pub all_pairs: bool,
    /// A single pair, used when `all_pairs` is off.
    pub pair: Option<(SubsetMask, SubsetMask)>,
    /// Worker threads; 0 or 1 runs sequentially.
    pub parallel: usize,
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// All checks run for one `(I, J)`.
#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    #[serde(rename = "I")]
    pub i_set: SubsetMask,
    #[serde(rename = "J")]
    pub j_set: SubsetMask,
    pub checks: Vec<CheckRecord>,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Summary of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub ring: String,
    pub pair_count: usize,
    pub check_count: usize,
    pub failures: usize,
    pub passed: bool,
    pub pairs: Vec<PairCheck>,
}

fn record(name: &'static str, outcome: Result<()>) -> Result<CheckRecord> {
    match outcome {
        Ok(()) => Ok(CheckRecord {
            name,
            passed: true,
            detail: None,
        }),
        Err(e @ Error::RingAssumption(_)) => Err(e),
        Err(e) => Ok(CheckRecord {
            name,
            passed: false,
            detail: Some(e.to_string()),
        }),
    }
}

fn check_pair(
    rs: &RootSystem,
    spec: &RingSpec,
    weyl: Option<&WeylGroup>,
    i_set: SubsetMask,
    j_set: SubsetMask,
) -> Result<PairCheck> {
    let mut checks = Vec::new();
    checks.push(record(
        "ext_steinberg",
        ext_steinberg(rs, i_set, j_set, spec, Method::Both, 0).map(drop),
    )?);
    checks.push(record("ext_steinberg_symmetry", {
        let ab = ext_steinberg_built(rs, i_set, j_set, spec, 0);
        let ba = ext_steinberg_built(rs, j_set, i_set, spec, 0);
        match (ab, ba) {
            (Ok(a), Ok(b)) if a.table.same_groups(&b.table) => Ok(()),
            (Ok(a), Ok(b)) => Err(Error::Verification {
                message: format!("Ext(v_I, v_J) = {} but Ext(v_J, v_I) = {}", a.table, b.table),
                dump: String::new(),
            }),
            (Err(e), _) | (_, Err(e)) => Err(e),
        }
    })?);
    checks.push(record(
        "ext_v_to_induced",
        ext_v_to_induced(rs, i_set, j_set, spec, Method::Both).map(drop),
    )?);
    checks.push(record("cohomology_v", cohomology_v(rs, i_set, spec, Method::Both).map(drop))?);
    checks.push(record("exterior_rows_exact", exterior_rows_exact(rs, i_set, spec))?);
    if let Some(w) = weyl {
        checks.push(record(
            "ext_induced_strata",
            ext_induced(w, i_set, j_set, spec, Method::Both).map(drop),
        )?);
    }
    Ok(PairCheck { i_set, j_set, checks })
}

/// Rows `t < |Delta \ I|` of the exterior complex above `I` are exact.
pub fn exterior_rows_exact(rs: &RootSystem, i_set: SubsetMask, spec: &RingSpec) -> Result<()> {
    let m = rs.delta().difference(i_set).len();
    for t in 0..m {
        let row = exterior_row_complex(rs.rank(), i_set, t)?;
        let h = homology_with_coefficients(&row.complex, spec)?;
        if !h.is_acyclic() {
            return Err(Error::Verification {
                message: format!("exterior row {t} above {i_set} has cohomology in degrees {:?}", h.support()),
                dump: row.complex.to_json().to_string(),
            });
        }
    }
    Ok(())
}

/// Runs every check on the selected pairs. Fails with a ring-assumption
/// error when `spec` does not pass the bon and banal checks for `rs`; the
/// double-coset check runs only when `weyl` is supplied.
pub fn verify(rs: &RootSystem, spec: &RingSpec, weyl: Option<&WeylGroup>, opts: &VerifyOptions) -> Result<VerifyReport> {
    let report = condition_report(rs, spec, false)?;
    if crate::extengine::ring_hypotheses(rs, spec)? == Hypotheses::Outside {
        return Err(Error::RingAssumption(format!(
            "{spec} is outside the ring hypotheses for {}: {}",
            rs.cartan_type(),
            report.failure_summary().unwrap_or_default()
        )));
    }
    let pairs: Vec<(SubsetMask, SubsetMask)> = if opts.all_pairs {
        let all: Vec<SubsetMask> = SubsetMask::all(rs.rank()).collect();
        all.iter().flat_map(|&i| all.iter().map(move |&j| (i, j))).collect()
    } else if let Some((i, j)) = opts.pair {
        vec![(rs.check_mask(i)?, rs.check_mask(j)?)]
    } else {
        return Err(Error::Config("verify needs --all-pairs or both --I and --J".into()));
    };

    let run = || -> Vec<Result<PairCheck>> {
        if opts.parallel > 1 {
            pairs.par_iter().map(|&(i, j)| check_pair(rs, spec, weyl, i, j)).collect()
        } else {
            pairs.iter().map(|&(i, j)| check_pair(rs, spec, weyl, i, j)).collect()
        }
    };
    let results = if opts.parallel > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.parallel)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {} workers: {e}", opts.parallel)))?
            .install(run)
    } else {
        run()
    };
    let mut checked = results.into_iter().collect::<Result<Vec<_>>>()?;
    checked.sort_by_key(|p| (p.i_set.bits(), p.j_set.bits()));

    let check_count = checked.iter().map(|p| p.checks.len()).sum();
    let failures = checked.iter().flat_map(|p| &p.checks).filter(|c| !c.passed).count();
    Ok(VerifyReport {
        cartan_type: rs.cartan_type().to_string(),
        ring: spec.to_string(),
        pair_count: checked.len(),
        check_count,
        failures,
        passed: failures == 0,
        pairs: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanType;
    use crate::weyl::generate_weyl;

    fn rs(ty: &str) -> RootSystem {
        RootSystem::from_type(ty.parse::<CartanType>().unwrap()).unwrap()
    }

    #[test]
    fn b2_all_pairs_over_q() {
        let b2 = rs("B2");
        let w = generate_weyl(&b2).unwrap();
        let opts = VerifyOptions {
            all_pairs: true,
            ..Default::default()
        };
        let r = verify(&b2, &"Q".parse().unwrap(), Some(&w), &opts).unwrap();
        assert_eq!(r.pair_count, 16);
        assert!(r.passed, "{:?}", r.pairs.iter().filter(|p| !p.passed()).collect::<Vec<_>>());
        assert!(r.pairs.iter().all(|p| p.checks.iter().any(|c| c.name == "ext_induced_strata")));
    }

    #[test]
    fn failing_ring_is_rejected() {
        let a1 = rs("A1");
        let opts = VerifyOptions {
            all_pairs: true,
            ..Default::default()
        };
        let err = verify(&a1, &"q=3,d=2".parse().unwrap(), None, &opts).unwrap_err();
        assert!(matches!(err, Error::RingAssumption(_)));
    }

    #[test]
    fn parallel_output_matches_sequential() {
        let a3 = rs("A3");
        let seq = VerifyOptions {
            all_pairs: true,
            ..Default::default()
        };
        let par = VerifyOptions {
            parallel: 4,
            ..seq.clone()
        };
        let spec: RingSpec = "q=3,d=7".parse().unwrap();
        let a = serde_json::to_string(&verify(&a3, &spec, None, &seq).unwrap()).unwrap();
        let b = serde_json::to_string(&verify(&a3, &spec, None, &par).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_pair_needs_both_subsets() {
        let a2 = rs("A2");
        let err = verify(&a2, &"Q".parse().unwrap(), None, &VerifyOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let opts = VerifyOptions {
            pair: Some((SubsetMask::empty(), a2.delta())),
            ..Default::default()
        };
        let r = verify(&a2, &"Q".parse().unwrap(), None, &opts).unwrap();
        assert_eq!(r.pair_count, 1);
        assert!(r.passed);
    }
}
