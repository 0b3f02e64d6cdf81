use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homology::binomial;
use crate::homology::HomologyResult;
use crate::ringcond::RingSpec;
use crate::rootdata::{RootSystem, SubsetMask};

/// Which route produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    ComplexBuilt,
}

/// Requested computation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    ComplexBuilt,
    Both,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed_form" => Ok(Method::ClosedForm),
            "complex_built" => Ok(Method::ComplexBuilt),
            "both" => Ok(Method::Both),
            other => Err(Error::Config(format!(
                "unknown method '{other}' (expected closed_form, complex_built or both)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::ComplexBuilt => "complex_built",
            Method::Both => "both",
        })
    }
}

/// Whether the coefficient ring passes the bon and banal checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypotheses {
    Satisfied,
    Outside,
}

impl Hypotheses {
    pub fn label(self) -> &'static str {
        match self {
            Hypotheses::Satisfied => "satisfied",
            Hypotheses::Outside => "outside ring hypotheses",
        }
    }
}

impl Serialize for Hypotheses {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One degree of a table: `rank` copies of `R` plus cyclic torsion.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TableEntry {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl TableEntry {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Ext groups by degree; absent degrees are zero.
#[derive(Debug, Clone)]
pub struct ExtTable {
    entries: BTreeMap<usize, TableEntry>,
    provenance: Provenance,
}

impl ExtTable {
    pub fn new(provenance: Provenance) -> Self {
        ExtTable {
            entries: BTreeMap::new(),
            provenance,
        }
    }

    pub fn from_ranks(ranks: impl IntoIterator<Item = (usize, usize)>, provenance: Provenance) -> Self {
        let mut t = ExtTable::new(provenance);
        for (deg, rank) in ranks {
            t.add(deg, rank, Vec::new());
        }
        t
    }

    /// `{j + shift: C(n, j)}`, the exterior algebra on `n` generators placed
    /// from degree `shift` on.
    pub fn exterior(n: usize, shift: usize, provenance: Provenance) -> Self {
        ExtTable::from_ranks((0..=n).map(|j| (j + shift, binomial(n, j))), provenance)
    }

    /// Adds summands in degree `deg`.
    pub fn add(&mut self, deg: usize, rank: usize, torsion: Vec<u64>) {
        if rank == 0 && torsion.is_empty() {
            return;
        }
        let e = self.entries.entry(deg).or_default();
        e.rank += rank;
        e.torsion.extend(torsion);
        e.torsion.sort_unstable();
    }

    /// Adds the cohomology of one degree of a complex.
    pub(crate) fn add_homology(&mut self, deg: usize, h: &HomologyResult, k: usize) -> Result<()> {
        let torsion = h.degrees[k]
            .torsion
            .iter()
            .map(|t| t.to_u64().ok_or_else(|| Error::Internal(format!("torsion modulus {t} exceeds u64"))))
            .collect::<Result<Vec<_>>>()?;
        self.add(deg, h.degrees[k].free_rank, torsion);
        Ok(())
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn entries(&self) -> &BTreeMap<usize, TableEntry> {
        &self.entries
    }

    pub fn get(&self, deg: usize) -> TableEntry {
        self.entries.get(&deg).cloned().unwrap_or_default()
    }

    pub fn rank_at(&self, deg: usize) -> usize {
        self.entries.get(&deg).map_or(0, |e| e.rank)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.entries.values().any(|e| !e.torsion.is_empty())
    }

    /// Equality of the groups, ignoring provenance.
    pub fn same_groups(&self, other: &ExtTable) -> bool {
        self.entries == other.entries
    }

    /// Tensor product with the exterior algebra on `c` degree-one generators.
    pub fn kunneth_exterior(&self, c: usize) -> ExtTable {
        let mut out = ExtTable::new(self.provenance);
        for (&deg, e) in &self.entries {
            for j in 0..=c {
                let mult = binomial(c, j);
                let torsion = e.torsion.iter().flat_map(|&t| std::iter::repeat_n(t, mult)).collect();
                out.add(deg + j, e.rank * mult, torsion);
            }
        }
        out
    }

    /// `{"<degree>": {"rank": n, "torsion": [...]}}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("table serializes")
    }

    /// Tab-separated rows sorted by degree, with a header line.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("degree\trank\ttorsion\n");
        for (deg, e) in &self.entries {
            let torsion: Vec<String> = e.torsion.iter().map(u64::to_string).collect();
            s.push_str(&format!("{deg}\t{}\t{}\n", e.rank, torsion.join(",")));
        }
        s
    }
}

impl fmt::Display for ExtTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (deg, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{deg}:{}", e.rank)?;
            for t in &e.torsion {
                write!(f, "+Z/{t}")?;
            }
        }
        f.write_str("}")
    }
}

/// The query part of a report.
#[derive(Debug, Clone, Serialize)]
pub struct QueryInfo {
    pub series: String,
    pub rank: usize,
    #[serde(rename = "I")]
    pub i_set: Option<SubsetMask>,
    #[serde(rename = "J")]
    pub j_set: Option<SubsetMask>,
    pub ring: String,
    pub center_rank: usize,
}

impl QueryInfo {
    pub fn new(
        rs: &RootSystem,
        i_set: Option<SubsetMask>,
        j_set: Option<SubsetMask>,
        spec: &RingSpec,
        center_rank: usize,
    ) -> Self {
        QueryInfo {
            series: rs.series().letter().to_string(),
            rank: rs.rank(),
            i_set,
            j_set,
            ring: spec.to_string(),
            center_rank,
        }
    }
}

/// Everything emitted for one query.
#[derive(Debug, Clone, Serialize)]
pub struct ExtReport {
    pub query: QueryInfo,
    pub method: Method,
    pub hypotheses: Hypotheses,
    #[serde(serialize_with = "serialize_table")]
    pub table: ExtTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complexes: Option<serde_json::Value>,
}

fn serialize_table<S: Serializer>(t: &ExtTable, s: S) -> std::result::Result<S::Ok, S::Error> {
    t.entries.serialize(s)
}

impl ExtReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        self.table.to_tsv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_tsv_shapes() {
        let t = ExtTable::from_ranks([(0, 1)], Provenance::ClosedForm);
        assert_eq!(t.to_json(), serde_json::json!({"0": {"rank": 1, "torsion": []}}));
        assert_eq!(ExtTable::new(Provenance::ClosedForm).to_tsv(), "degree\trank\ttorsion\n");
        let t = ExtTable::from_ranks([(2, 1), (1, 1)], Provenance::ClosedForm);
        assert_eq!(t.to_tsv(), "degree\trank\ttorsion\n1\t1\t\n2\t1\t\n");
    }

    #[test]
    fn degrees_sort_numerically() {
        let t = ExtTable::from_ranks([(10, 1), (9, 1)], Provenance::ClosedForm);
        assert_eq!(t.to_tsv(), "degree\trank\ttorsion\n9\t1\t\n10\t1\t\n");
        assert_eq!(t.to_string(), "{9:1, 10:1}");
        let json = t.to_json();
        assert_eq!(json["9"]["rank"], 1);
        assert_eq!(json["10"]["rank"], 1);
    }

    #[test]
    fn zero_entries_are_absent() {
        let mut t = ExtTable::new(Provenance::ComplexBuilt);
        t.add(3, 0, Vec::new());
        assert!(t.is_empty());
        t.add(1, 0, vec![2]);
        assert!(t.has_torsion());
        assert_eq!(t.to_string(), "{1:0+Z/2}");
    }

    #[test]
    fn kunneth_with_exterior() {
        let t = ExtTable::from_ranks([(2, 1)], Provenance::ClosedForm);
        assert_eq!(t.kunneth_exterior(0).to_string(), "{2:1}");
        assert_eq!(t.kunneth_exterior(1).to_string(), "{2:1, 3:1}");
        assert_eq!(t.kunneth_exterior(2).to_string(), "{2:1, 3:2, 4:1}");
        assert!(ExtTable::exterior(2, 2, Provenance::ClosedForm).same_groups(&t.kunneth_exterior(2)));
    }

    #[test]
    fn method_parse() {
        for m in [Method::ClosedForm, Method::ComplexBuilt, Method::Both] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!(matches!("fast".parse::<Method>(), Err(Error::Config(_))));
    }
}
