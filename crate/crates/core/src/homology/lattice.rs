//! Complexes indexed by the interval of subsets between a bottom set and
//! the full set of simple roots.

use num_bigint::BigInt;

use super::complex::ChainComplex;
use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};
use crate::rootdata::SubsetMask;

/// A complex over `{L : bottom <= L <= full}` together with the subsets
/// sitting in each degree.
#[derive(Debug, Clone)]
pub struct LatticeComplex {
    pub complex: ChainComplex,
    /// `terms[s]` lists the subsets `L` with `|full \ L| = s`, in the order
    /// their blocks appear.
    pub terms: Vec<Vec<SubsetMask>>,
}

/// The `k`-element subsets of `set`, ascending by bit pattern.
pub fn k_subsets(set: SubsetMask, k: usize) -> Vec<SubsetMask> {
    set.subsets().filter(|s| s.len() == k).collect()
}

/// Builds the complex whose degree-`s` term is the direct sum, over
/// `bottom <= L <= full` with `|full \ L| = s`, of free modules of rank
/// `coefficient_rank(L)`.
///
/// The block from `L` to `L \ {b}` is `(-1)^i * map_rule(L, L \ {b}, b)`,
/// where `i` is the 1-based position of `b` in `L` listed in ascending
/// order. Fails if a block has the wrong shape or if `d^2 != 0`.
pub fn subset_lattice_complex<R, M>(rank: usize, bottom: SubsetMask, coefficient_rank: R, map_rule: M) -> Result<LatticeComplex>
where
    R: Fn(SubsetMask) -> usize,
    M: Fn(SubsetMask, SubsetMask, usize) -> IntegerMatrix,
{
    subset_lattice_complex_labeled(rank, bottom, coefficient_rank, map_rule, |l, i| format!("L={l}#{i}"))
}

pub(crate) fn subset_lattice_complex_labeled<R, M, B>(
    rank: usize,
    bottom: SubsetMask,
    coefficient_rank: R,
    map_rule: M,
    label: B,
) -> Result<LatticeComplex>
where
    R: Fn(SubsetMask) -> usize,
    M: Fn(SubsetMask, SubsetMask, usize) -> IntegerMatrix,
    B: Fn(SubsetMask, usize) -> String,
{
    let full = SubsetMask::full(rank);
    let bottom = SubsetMask::from_bits(bottom.bits(), rank)?;
    let free = full.difference(bottom);
    let m = free.len();

    let terms: Vec<Vec<SubsetMask>> = (0..=m)
        .map(|s| k_subsets(free, m - s).into_iter().map(|t| bottom.union(t)).collect())
        .collect();
    let coef = |l: SubsetMask| coefficient_rank(l);

    let offsets: Vec<Vec<usize>> = terms
        .iter()
        .map(|ls| {
            ls.iter()
                .scan(0, |acc, &l| {
                    let here = *acc;
                    *acc += coef(l);
                    Some(here)
                })
                .collect()
        })
        .collect();
    let ranks: Vec<usize> = terms.iter().map(|ls| ls.iter().map(|&l| coef(l)).sum()).collect();

    let mut differentials = Vec::with_capacity(m);
    for s in 0..m {
        let mut d = IntegerMatrix::zeros(ranks[s + 1], ranks[s]);
        for (a, &l) in terms[s].iter().enumerate() {
            for b in l.difference(bottom).iter() {
                let target = l.without(b);
                let t_idx = terms[s + 1].binary_search(&target).expect("target lies one degree up");
                let block = map_rule(l, target, b);
                if block.shape() != (coef(target), coef(l)) {
                    return Err(Error::Contract(format!(
                        "map {l} -> {target} has shape {:?}, expected {:?}",
                        block.shape(),
                        (coef(target), coef(l))
                    )));
                }
                let sign = if l.position(b).unwrap() % 2 == 0 { 1 } else { -1 };
                let signed = if sign == 1 {
                    block
                } else {
                    let mut neg = block;
                    for r in 0..neg.rows() {
                        neg.negate_row(r);
                    }
                    neg
                };
                d.set_block(offsets[s + 1][t_idx], offsets[s][a], &signed);
            }
        }
        differentials.push(d);
    }

    let labels = terms
        .iter()
        .map(|ls| ls.iter().flat_map(|&l| (0..coef(l)).map(move |i| (l, i))).map(|(l, i)| label(l, i)).collect())
        .collect();

    let complex = ChainComplex::new(ranks, differentials, labels).map_err(|e| match e {
        Error::Contract(msg) => Error::Contract(format!("lattice complex violates the sign rule: {msg}")),
        other => other,
    })?;
    Ok(LatticeComplex { complex, terms })
}

/// Matrix of the inclusion of the exterior basis of `small` (the `t`-subsets)
/// into that of `big`.
pub(crate) fn exterior_inclusion(small: SubsetMask, big: SubsetMask, t: usize) -> IntegerMatrix {
    let src = k_subsets(small, t);
    let dst = k_subsets(big, t);
    let mut m = IntegerMatrix::zeros(dst.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        let r = dst.binary_search(s).expect("subset of a subset");
        m.set(r, c, BigInt::from(1));
    }
    m
}

/// Row `t` of the exterior-power complex over the interval above `bottom`.
///
/// The `L`-summand is the `t`-th exterior power of the free module on the
/// simple roots outside `L`, with basis the `t`-subsets of `full \ L`; the
/// maps are the inclusions of those bases.
pub fn exterior_row_complex(rank: usize, bottom: SubsetMask, t: usize) -> Result<LatticeComplex> {
    let full = SubsetMask::full(rank);
    subset_lattice_complex_labeled(
        rank,
        bottom,
        |l| binomial(full.difference(l).len(), t),
        |l, target, _| exterior_inclusion(full.difference(l), full.difference(target), t),
        |l, i| {
            let basis = k_subsets(full.difference(l), t);
            format!("L={l}:w{}", basis[i])
        },
    )
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{homology_over_z, homology_with_coefficients};
    use proptest::prelude::*;

    fn constant(rank: usize, bottom: SubsetMask) -> ChainComplex {
        subset_lattice_complex(rank, bottom, |_| 1, |_, _, _| IntegerMatrix::identity(1))
            .unwrap()
            .complex
    }

    #[test]
    fn interval_of_rank_one() {
        let c = constant(1, SubsetMask::empty());
        assert_eq!(c.ranks(), &[1, 1]);
        assert_eq!(c.differentials()[0], IntegerMatrix::from_i64_rows(&[vec![-1]]));
        assert!(homology_over_z(&c).is_acyclic());
    }

    #[test]
    fn square_is_exact() {
        let c = constant(2, SubsetMask::empty());
        assert_eq!(c.ranks(), &[1, 2, 1]);
        assert!(homology_over_z(&c).is_acyclic());
    }

    #[test]
    fn single_term_when_bottom_is_full() {
        let c = constant(2, SubsetMask::full(2));
        assert_eq!(c.ranks(), &[1]);
        assert_eq!(homology_over_z(&c).free_ranks(), vec![1]);
    }

    #[test]
    fn constant_cubes_are_exact_below_full() {
        for rank in 1..=4 {
            for k in SubsetMask::all(rank) {
                let h = homology_over_z(&constant(rank, k));
                if k == SubsetMask::full(rank) {
                    assert_eq!(h.free_ranks(), vec![1]);
                } else {
                    assert!(h.is_acyclic(), "rank {rank} bottom {k}");
                }
            }
        }
    }

    #[test]
    fn exterior_examples() {
        let row = exterior_row_complex(2, SubsetMask::empty(), 1).unwrap().complex;
        assert_eq!(row.ranks(), &[0, 2, 2]);
        assert!(homology_over_z(&row).is_acyclic());

        let top = exterior_row_complex(2, SubsetMask::empty(), 2).unwrap().complex;
        assert_eq!(top.ranks(), &[0, 0, 1]);
        assert_eq!(homology_over_z(&top).support(), vec![2]);

        let trivial = exterior_row_complex(3, SubsetMask::full(3), 0).unwrap().complex;
        assert_eq!(trivial.ranks(), &[1]);
    }

    #[test]
    fn exterior_rows_exact_below_top() {
        for rank in 1..=4 {
            for bottom in SubsetMask::all(rank) {
                let m = rank - bottom.len();
                for t in 0..=m {
                    let h = homology_over_z(&exterior_row_complex(rank, bottom, t).unwrap().complex);
                    if t < m {
                        assert!(h.is_acyclic(), "rank {rank} bottom {bottom} t {t}");
                    } else {
                        assert_eq!(h.support(), vec![m]);
                        assert_eq!(h.degrees[m].free_rank, 1);
                        assert!(h.degrees[m].torsion.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_sign_rule_is_caught() {
        // Identity blocks with the sign forced positive break d^2 = 0.
        let err = subset_lattice_complex(
            2,
            SubsetMask::empty(),
            |_| 1,
            |l, _, b| {
                let mut m = IntegerMatrix::identity(1);
                if l.position(b).unwrap() % 2 == 1 {
                    m.negate_row(0);
                }
                m
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Contract(m) if m.contains("sign rule")));
        let err = subset_lattice_complex(2, SubsetMask::empty(), |_| 1, |_, _, _| IntegerMatrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(k_subsets(SubsetMask::full(3), 2).len(), 3);
    }

    proptest! {
        /// Random coefficient ranks with subset-inclusion maps always square
        /// to zero: the maps commute along every square of the lattice.
        #[test]
        fn random_inclusion_systems_square_to_zero(rank in 1usize..=4, bottom_bits in 0u32..16, sizes in prop::collection::vec(0usize..3, 16)) {
            let bottom = SubsetMask::from_bits(bottom_bits & ((1 << rank) - 1), rank).unwrap();
            // Coefficient module of L: free on `size(L)` copies of the basis
            // {t-subsets of full \ L}, t = 1; maps are the exterior inclusions.
            let copies = |l: SubsetMask| sizes[l.bits() as usize % 16].min(1) + 1;
            let full = SubsetMask::full(rank);
            let lc = subset_lattice_complex(
                rank,
                bottom,
                |l| copies(l) * full.difference(l).len(),
                |l, target, _| {
                    let base = exterior_inclusion(full.difference(l), full.difference(target), 1);
                    let (cs, ct) = (copies(l), copies(target));
                    let mut m = IntegerMatrix::zeros(ct * base.rows(), cs * base.cols());
                    for k in 0..cs.min(ct) {
                        m.set_block(k * base.rows(), k * base.cols(), &base);
                    }
                    m
                },
            );
            // Mismatched copy counts can still break commutativity, in which
            // case the builder must report it rather than return a bad complex.
            if let Ok(lc) = lc {
                let q = homology_with_coefficients(&lc.complex, &"Q".parse().unwrap()).unwrap();
                prop_assert_eq!(lc.complex.euler_characteristic(), q.euler_characteristic());
            }
        }

        #[test]
        fn constant_systems_square_to_zero(rank in 1usize..=5, bottom_bits in 0u32..32, width in 1usize..3) {
            let bottom = SubsetMask::from_bits(bottom_bits & ((1 << rank) - 1), rank).unwrap();
            let lc = subset_lattice_complex(rank, bottom, |_| width, |_, _, _| IntegerMatrix::identity(width));
            prop_assert!(lc.is_ok());
        }
    }
}
