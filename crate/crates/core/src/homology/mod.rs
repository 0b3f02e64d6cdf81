//! Exact homological algebra over `Z`, `Q` and `Z/d`.

mod complex;
mod lattice;
mod matrix;
mod snf;

pub use complex::ChainComplex;
pub use lattice::{binomial, exterior_row_complex, k_subsets, subset_lattice_complex, LatticeComplex};
pub(crate) use lattice::{exterior_inclusion, subset_lattice_complex_labeled};
pub use matrix::IntegerMatrix;
pub use snf::{rational_rank, smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ringcond::RingSpec;

/// Cohomology in one degree: a free part plus cyclic torsion summands.
///
/// Over `Z/d` the free rank counts summands `Z/d` and the torsion lists the
/// moduli of the remaining cyclic summands.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DegreeHomology {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(n) => seq.serialize_element(&n)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Cohomology of a complex, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(DegreeHomology::is_zero)
    }

    pub fn free_ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|h| h.free_rank).collect()
    }

    /// `sum (-1)^k free_rank H^k`
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(k, h)| if k % 2 == 0 { h.free_rank as i64 } else { -(h.free_rank as i64) })
            .sum()
    }

    /// Degrees with nonzero cohomology.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&k| !self.degrees[k].is_zero()).collect()
    }
}

/// Integer cohomology via Smith normal form of every differential.
///
/// `H^k` has free rank `rank C^k - rank d_k - rank d_{k-1}` and torsion the
/// elementary divisors of `d_{k-1}` exceeding 1.
pub fn homology_over_z(c: &ChainComplex) -> HomologyResult {
    let forms: Vec<SmithForm> = c.differentials().iter().map(smith_normal_form).collect();
    let degrees = (0..c.len())
        .map(|k| {
            let out_rank = forms.get(k).map_or(0, SmithForm::rank);
            let (in_rank, torsion) = match k.checked_sub(1).and_then(|j| forms.get(j)) {
                Some(f) => (f.rank(), f.divisors.iter().filter(|d| !d.is_one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            DegreeHomology {
                free_rank: c.ranks()[k] - out_rank - in_rank,
                torsion,
            }
        })
        .collect();
    HomologyResult { degrees }
}

/// Cohomology with coefficients in `Q` or `Z/d`.
///
/// Over `Q` the ranks come from exact rational elimination. Over `Z/d`:
/// `H^k(C (x) Z/d) = H^k(C) (x) Z/d  +  Tor(H^{k+1}(C), Z/d)`, each cyclic
/// summand `Z/e` contributing `Z/gcd(e, d)`.
pub fn homology_with_coefficients(c: &ChainComplex, spec: &RingSpec) -> Result<HomologyResult> {
    if spec.is_rational() {
        let ranks: Vec<usize> = c.differentials().iter().map(rational_rank).collect();
        let degrees = (0..c.len())
            .map(|k| DegreeHomology {
                free_rank: c.ranks()[k] - ranks.get(k).copied().unwrap_or(0) - k.checked_sub(1).map_or(0, |j| ranks[j]),
                torsion: Vec::new(),
            })
            .collect();
        return Ok(HomologyResult { degrees });
    }
    let d = BigInt::from(spec.d());
    if d <= BigInt::one() {
        return Err(Error::DegenerateRing(format!("d = {d}")));
    }
    let integral = homology_over_z(c);
    let degrees = (0..c.len())
        .map(|k| {
            let mut out = DegreeHomology {
                free_rank: integral.degrees[k].free_rank,
                torsion: Vec::new(),
            };
            let tor = integral.degrees.get(k + 1).map(|h| h.torsion.as_slice()).unwrap_or(&[]);
            for e in integral.degrees[k].torsion.iter().chain(tor) {
                let g = e.gcd(&d);
                if g == d {
                    out.free_rank += 1;
                } else if !g.is_one() {
                    out.torsion.push(g);
                }
            }
            out.torsion.sort();
            out
        })
        .collect();
    Ok(HomologyResult { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn times_two() -> ChainComplex {
        ChainComplex::new(
            vec![1, 1],
            vec![IntegerMatrix::from_i64_rows(&[vec![2]])],
            vec![vec!["x".into()], vec!["y".into()]],
        )
        .unwrap()
    }

    fn ring(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    #[test]
    fn integer_examples() {
        let h = homology_over_z(&times_two());
        assert!(h.degrees[0].is_zero());
        assert_eq!(h.degrees[1].free_rank, 0);
        assert_eq!(h.degrees[1].torsion, vec![BigInt::from(2)]);

        let id = ChainComplex::new(
            vec![1, 1],
            vec![IntegerMatrix::identity(1)],
            vec![vec!["x".into()], vec!["y".into()]],
        )
        .unwrap();
        assert!(homology_over_z(&id).is_acyclic());

        let point = ChainComplex::with_zero_differentials(vec![1]);
        assert_eq!(homology_over_z(&point).free_ranks(), vec![1]);
    }

    #[test]
    fn coefficient_examples() {
        let h = homology_with_coefficients(&times_two(), &ring("q=3,d=2")).unwrap();
        assert_eq!(h.free_ranks(), vec![1, 1]);
        assert!(h.degrees.iter().all(|x| x.torsion.is_empty()));

        let h = homology_with_coefficients(&times_two(), &ring("q=3,d=5")).unwrap();
        assert!(h.is_acyclic());

        let h = homology_with_coefficients(&times_two(), &ring("Q")).unwrap();
        assert!(h.is_acyclic());

        // Z/4 coefficients leave a Z/2 in both degrees.
        let h = homology_with_coefficients(&times_two(), &ring("q=3,d=4")).unwrap();
        assert_eq!(h.degrees[0].torsion, vec![BigInt::from(2)]);
        assert_eq!(h.degrees[1].torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn euler_characteristic_matches() {
        let c = times_two();
        let h = homology_with_coefficients(&c, &ring("Q")).unwrap();
        assert_eq!(c.euler_characteristic(), h.euler_characteristic());
    }
}
