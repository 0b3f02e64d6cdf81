use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use super::closed::ext_induced_closed;
use super::table::{ExtTable, Provenance};
use crate::error::{Error, Result};
use crate::ringcond::RingSpec;
use crate::rootdata::{cofundamental_pairing, RootSystem, SubsetMask};
use crate::weyl::{DoubleCosetRep, WeylGroup};

/// Which exponent character supplied the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateBranch {
    /// `w != 1`: the pairing of `gamma_w` with a simple coroot sent to a
    /// negative root outside the Levi of `I`.
    Gamma,
    /// `w = 1`, `J` not inside `I`: the pairing of `delta`.
    Delta,
}

/// A central element acting on a stratum by `q^exponent` with
/// `q^exponent - 1` a unit, which kills the stratum's Ext groups.
#[derive(Debug, Clone, Serialize)]
pub struct VanishingCertificate {
    pub rep: DoubleCosetRep,
    pub branch: CertificateBranch,
    pub beta_index: usize,
    pub exponent: i64,
    /// `q^exponent - 1` reduced into the ring.
    #[serde(serialize_with = "serialize_bigint")]
    pub unit_value: BigInt,
}

fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn certify(
    rep: &DoubleCosetRep,
    spec: &RingSpec,
    branch: CertificateBranch,
    candidates: Vec<(usize, i64)>,
) -> Result<VanishingCertificate> {
    if candidates.is_empty() {
        return Err(Error::Contract(format!(
            "no simple root yields a vanishing exponent for w = {} on ({}, {})",
            rep.w, rep.i_set, rep.j_set
        )));
    }
    for &(beta, exponent) in &candidates {
        let unit_value = spec.q_power_minus_one(exponent.unsigned_abs() as u32);
        if spec.is_unit(&unit_value) {
            return Ok(VanishingCertificate {
                rep: rep.clone(),
                branch,
                beta_index: beta,
                exponent,
                unit_value,
            });
        }
    }
    let tried: Vec<String> = candidates.iter().map(|(b, e)| format!("beta={b}: q^{e} - 1")).collect();
    Err(Error::RingAssumption(format!(
        "no unit among {} for w = {} on ({}, {}) over {spec}; see check-ring for the bon and banal report",
        tried.join(", "),
        rep.w,
        rep.i_set,
        rep.j_set
    )))
}

/// Certificate that the stratum of `rep` contributes nothing, or `None` for
/// the surviving stratum `w = 1`, `J <= I`.
pub fn vanishing_certificate(rs: &RootSystem, rep: &DoubleCosetRep, spec: &RingSpec) -> Result<Option<VanishingCertificate>> {
    let (i_set, j_set) = (rep.i_set, rep.j_set);
    if !rep.w.is_identity() {
        let mut candidates = Vec::new();
        for beta in rs.delta().difference(j_set).iter() {
            let img = rep.w.image(beta);
            if !img.is_negative() || RootSystem::in_levi(&rs.positive_roots()[img.index()], i_set) {
                continue;
            }
            if cofundamental_pairing(&rep.delta_exp, beta) != 0 {
                return Err(Error::Contract(format!(
                    "delta exponent {} pairs nontrivially with simple root {beta} outside J = {j_set}",
                    rep.delta_exp
                )));
            }
            let exponent = cofundamental_pairing(&rep.gamma_exp, beta);
            if exponent != 0 {
                candidates.push((beta, exponent));
            }
        }
        return certify(rep, spec, CertificateBranch::Gamma, candidates).map(Some);
    }
    if j_set.is_subset(i_set) {
        return Ok(None);
    }
    let candidates = rs
        .delta()
        .difference(j_set.intersection(i_set))
        .iter()
        .map(|beta| (beta, cofundamental_pairing(&rep.delta_exp, beta)))
        .filter(|&(_, e)| e != 0)
        .collect();
    certify(rep, spec, CertificateBranch::Delta, candidates).map(Some)
}

/// One stratum of the double-coset filtration.
#[derive(Debug, Clone, Serialize)]
pub struct StratumReport {
    pub length: usize,
    pub word: Vec<usize>,
    pub certificate: Option<VanishingCertificate>,
    pub survives: bool,
}

/// `Ext(i_I, i_J)` assembled stratum by stratum.
#[derive(Debug, Clone)]
pub struct StrataTable {
    pub table: ExtTable,
    pub strata: Vec<StratumReport>,
}

/// `Ext^*(i_I, i_J)` from the filtration by double cosets `W_I w W_J`:
/// every stratum with a vanishing certificate contributes zero and the
/// surviving stratum contributes `Lambda^* X(M_J)`.
pub fn ext_induced_via_strata(weyl: &WeylGroup, i_set: SubsetMask, j_set: SubsetMask, spec: &RingSpec) -> Result<StrataTable> {
    let rs = weyl.root_system();
    let mut table = ExtTable::new(Provenance::ComplexBuilt);
    let mut strata = Vec::new();
    for rep in weyl.kostant_reps(i_set, j_set)? {
        let certificate = vanishing_certificate(rs, &rep, spec)?;
        let survives = certificate.is_none();
        if survives {
            if !(rep.w.is_identity() && rep.j_set.is_subset(rep.i_set)) {
                return Err(Error::Contract(format!("stratum w = {} survives without being the identity", rep.w)));
            }
            let piece = ext_induced_closed(rs, rep.j_set, rep.j_set);
            for (&deg, e) in piece.entries() {
                table.add(deg, e.rank, e.torsion.clone());
            }
        }
        strata.push(StratumReport {
            length: rep.length,
            word: rep.w.reduced_word(rs),
            certificate,
            survives,
        });
    }
    Ok(StrataTable { table, strata })
}
