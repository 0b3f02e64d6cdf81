//! Split reduced root systems in simple-root coordinates.
//!
//! Every character is written in the basis of simple roots, so the root
//! combinatorics the rest of the crate needs (Levi subsystems, modulus
//! character exponents, pairings with co-fundamental coweights) reduces to
//! integer vector arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan-Killing series of an irreducible reduced root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    /// Whether `(self, rank)` names a supported irreducible type.
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A type label such as `A2` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank > SubsetMask::MAX_RANK || !series.is_valid_rank(rank) {
            return Err(Error::Config(format!(
                "invalid root system type ({series}, {rank})"
            )));
        }
        Ok(CartanType { series, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::Config(format!("unknown root system type '{s}'")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("unknown root system type '{s}'")))?;
        CartanType::new(series, rank)
    }
}

/// A subset of the simple roots, as a bitmask over their indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const MAX_RANK: usize = 31;

    pub const fn empty() -> Self {
        SubsetMask(0)
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= Self::MAX_RANK);
        SubsetMask(((1u64 << rank) - 1) as u32)
    }

    /// Wraps raw bits after checking that nothing is set at or above `rank`.
    pub fn from_bits(bits: u32, rank: usize) -> Result<Self> {
        if rank > Self::MAX_RANK || bits >> rank != 0 {
            return Err(Error::Config(format!(
                "subset mask {bits:#b} has indices outside 0..{rank}"
            )));
        }
        Ok(SubsetMask(bits))
    }

    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= rank {
                return Err(Error::Config(format!(
                    "simple-root index {i} out of range for rank {rank}"
                )));
            }
            bits |= 1 << i;
        }
        Ok(SubsetMask(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, rank: usize) -> Self {
        SubsetMask::full(rank).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    /// Indices in ascending order, which is the fixed order on the simple roots.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based position of `i` among the members, in ascending order.
    pub fn position(self, i: usize) -> Option<usize> {
        if !self.contains(i) {
            return None;
        }
        Some((self.0 & ((1u32 << i) - 1)).count_ones() as usize + 1)
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(SubsetMask(cur))
        })
    }

    /// All subsets of `0..rank`.
    pub fn all(rank: usize) -> impl Iterator<Item = SubsetMask> {
        SubsetMask::full(rank).subsets()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An element of the character lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharacterVector(Vec<i64>);

impl CharacterVector {
    pub fn zero(rank: usize) -> Self {
        CharacterVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        CharacterVector(v)
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        CharacterVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Simple roots whose coefficient is nonzero.
    pub fn support(&self) -> SubsetMask {
        let mut bits = 0u32;
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                bits |= 1 << i;
            }
        }
        SubsetMask(bits)
    }

    /// Index of the simple root this vector equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, c) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &CharacterVector {
    type Output = CharacterVector;
    fn add(self, rhs: Self) -> CharacterVector {
        assert_eq!(self.0.len(), rhs.0.len());
        CharacterVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CharacterVector {
    type Output = CharacterVector;
    fn sub(self, rhs: Self) -> CharacterVector {
        assert_eq!(self.0.len(), rhs.0.len());
        CharacterVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&CharacterVector> for CharacterVector {
    fn add_assign(&mut self, rhs: &CharacterVector) {
        assert_eq!(self.0.len(), rhs.0.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &CharacterVector {
    type Output = CharacterVector;
    fn neg(self) -> CharacterVector {
        CharacterVector(self.0.iter().map(|c| -c).collect())
    }
}

/// Pairing of `chi` with the co-fundamental coweight dual to simple root
/// `beta_index`; in simple-root coordinates this reads off one coefficient.
pub fn cofundamental_pairing(chi: &CharacterVector, beta_index: usize) -> i64 {
    chi.0[beta_index]
}

/// A split reduced irreducible root system.
///
/// `cartan[i][j]` is the pairing of the simple root `j` with the coroot of
/// simple root `i`, so the simple reflection `s_i` sends `v` to
/// `v - (sum_j cartan[i][j] v_j) e_i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<CharacterVector>,
    index: HashMap<CharacterVector, usize>,
}

/// Builds the root system of type `(series, rank)`.
///
/// Positive roots are generated level by level from the simple roots using
/// root strings: for a root `b` and simple root `a_i`, `b + a_i` is a root
/// exactly when `q = p - <b, a_i^vee>` is positive, where `p` is the length
/// of the string below `b`.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    let ty = CartanType::new(series, rank)?;
    let cartan = cartan_matrix(ty);
    let positive_roots = positive_roots_by_strings(&cartan);
    Ok(RootSystem::from_parts(ty, cartan, positive_roots))
}

impl RootSystem {
    fn from_parts(
        cartan_type: CartanType,
        cartan: Vec<Vec<i64>>,
        mut positive_roots: Vec<CharacterVector>,
    ) -> Self {
        // Height first, then alpha_0 before alpha_1 and so on.
        positive_roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coords().cmp(a.coords()))
        });
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            cartan_type,
            cartan,
            positive_roots,
            index,
        }
    }

    pub fn from_type(ty: CartanType) -> Result<Self> {
        build_root_system(ty.series, ty.rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn series(&self) -> Series {
        self.cartan_type.series
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[CharacterVector] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The fixed total order on the simple roots.
    pub fn delta_order(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    pub fn delta(&self) -> SubsetMask {
        SubsetMask::full(self.rank())
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn root_index(&self, root: &CharacterVector) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn check_mask(&self, mask: SubsetMask) -> Result<SubsetMask> {
        SubsetMask::from_bits(mask.bits(), self.rank())
    }

    /// `<v, a_i^vee>` for the simple coroot `i`.
    pub fn coroot_pairing(&self, v: &CharacterVector, i: usize) -> i64 {
        self.cartan[i]
            .iter()
            .zip(v.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Image of `v` under the simple reflection `s_i`.
    pub fn reflect(&self, v: &CharacterVector, i: usize) -> CharacterVector {
        let mut out = v.clone();
        out.0[i] -= self.coroot_pairing(v, i);
        out
    }

    /// Positive roots of the Levi subsystem spanned by `levi`.
    pub fn levi_positive_roots(&self, levi: SubsetMask) -> Vec<CharacterVector> {
        self.positive_roots
            .iter()
            .filter(|r| r.support().is_subset(levi))
            .cloned()
            .collect()
    }

    /// Whether the positive root `root` lies in the Levi subsystem of `levi`.
    pub fn in_levi(root: &CharacterVector, levi: SubsetMask) -> bool {
        root.support().is_subset(levi)
    }

    /// Sum of all positive roots; entry `i` is `n_{alpha_i}`.
    pub fn rho_coefficients(&self) -> CharacterVector {
        let mut rho = CharacterVector::zero(self.rank());
        for r in &self.positive_roots {
            rho += r;
        }
        rho
    }

    /// Largest coefficient of [`Self::rho_coefficients`].
    pub fn n_max(&self) -> i64 {
        self.rho_coefficients()
            .coords()
            .iter()
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "series": self.series().letter().to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "positive_roots": self.positive_roots,
        })
    }
}

/// Squared lengths and bonds of the Dynkin diagram (Bourbaki labelling,
/// shifted to start at 0).
fn dynkin(ty: CartanType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let n = ty.rank;
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match ty.series {
        Series::A => (vec![2; n], chain(n)),
        Series::B => {
            let mut len = vec![4; n];
            len[n - 1] = 2;
            (len, chain(n))
        }
        Series::C => {
            let mut len = vec![2; n];
            len[n - 1] = 4;
            (len, chain(n))
        }
        Series::D => {
            let mut bonds = chain(n - 1);
            bonds.push((n - 3, n - 1));
            (vec![2; n], bonds)
        }
        Series::E => {
            let mut bonds = vec![(0, 2), (1, 3)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![2; n], bonds)
        }
        Series::F => (vec![4, 4, 2, 2], chain(4)),
        Series::G => (vec![2, 6], chain(2)),
    }
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let (len, bonds) = dynkin(ty);
    let n = ty.rank;
    let mut form = vec![vec![0i64; n]; n];
    for i in 0..n {
        form[i][i] = len[i];
    }
    for &(i, j) in &bonds {
        let ip = -len[i].max(len[j]) / 2;
        form[i][j] = ip;
        form[j][i] = ip;
    }
    (0..n)
        .map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect())
        .collect()
}

fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<CharacterVector> {
    let n = cartan.len();
    let pairing = |v: &[i64], i: usize| -> i64 { cartan[i].iter().zip(v).map(|(a, b)| a * b).sum() };
    let mut all: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut level: Vec<Vec<i64>> = (0..n).map(|i| CharacterVector::unit(n, i).0).collect();
    for r in &level {
        all.insert(r.clone(), ());
    }
    let mut out = level.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains_key(&up) {
                        all.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.into_iter().map(CharacterVector).collect()
}
