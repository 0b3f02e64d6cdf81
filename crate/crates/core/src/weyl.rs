//! Weyl groups as signed permutations of the positive roots, parabolic
//! double cosets and the character exponents attached to their minimal
//! representatives.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{CharacterVector, RootSystem, SubsetMask};

pub mod cache;

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 1 << 20;

/// A positive root index together with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot(i32);

impl SignedRoot {
    pub fn new(index: usize, negative: bool) -> Self {
        let v = index as i32 + 1;
        SignedRoot(if negative { -v } else { v })
    }

    pub fn index(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn negate(self) -> Self {
        SignedRoot(-self.0)
    }

    pub(crate) fn raw(self) -> i32 {
        self.0
    }

    pub(crate) fn from_raw(v: i32) -> Option<Self> {
        (v != 0).then_some(SignedRoot(v))
    }
}

/// An element of the Weyl group, stored as its action on the positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<SignedRoot>,
    length: usize,
}

impl WeylElement {
    pub(crate) fn from_images(images: Vec<SignedRoot>) -> Self {
        let length = images.iter().filter(|s| s.is_negative()).count();
        WeylElement { images, length }
    }

    pub fn identity(num_positive: usize) -> Self {
        WeylElement::from_images((0..num_positive).map(|k| SignedRoot::new(k, false)).collect())
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    /// Image of the positive root with index `k`.
    pub fn image(&self, k: usize) -> SignedRoot {
        self.images[k]
    }

    fn apply_signed(&self, s: SignedRoot) -> SignedRoot {
        let img = self.images[s.index()];
        if s.is_negative() {
            img.negate()
        } else {
            img
        }
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement::from_images(other.images.iter().map(|&s| self.apply_signed(s)).collect())
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![SignedRoot(0); self.images.len()];
        for (k, &s) in self.images.iter().enumerate() {
            inv[s.index()] = SignedRoot::new(k, s.is_negative());
        }
        WeylElement::from_images(inv)
    }

    /// Image of a vector in simple-root coordinates. Simple root `i` is the
    /// positive root with index `i`.
    pub fn act(&self, rs: &RootSystem, v: &CharacterVector) -> CharacterVector {
        let mut out = CharacterVector::zero(rs.rank());
        for (i, &c) in v.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.images[i];
            let root = &rs.positive_roots()[img.index()];
            let sign = if img.is_negative() { -c } else { c };
            let scaled: Vec<i64> = root.coords().iter().map(|x| x * sign).collect();
            out += &CharacterVector::from_coords(scaled);
        }
        out
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`,
    /// found by stripping right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut w = self.clone();
        while let Some(i) = (0..rs.rank()).find(|&i| w.images[i].is_negative()) {
            w = w.compose(&simple_reflection(rs, i));
            word.push(i);
        }
        word.reverse();
        word
    }

    /// The images of the simple roots as columns, i.e. the matrix of the
    /// element in simple-root coordinates.
    pub fn matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let img = self.images[j];
            let root = &rs.positive_roots()[img.index()];
            for i in 0..n {
                m[i][j] = if img.is_negative() { -root.coords()[i] } else { root.coords()[i] };
            }
        }
        m
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, s) in self.images.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", s.0)?;
        }
        write!(f, "]")
    }
}

/// The full Weyl group of a root system with multiplication tables for
/// simple reflections.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<SignedRoot>, usize>,
    // right[i][e] = e * s_i, left[i][e] = s_i * e
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
}

/// Signed permutation of the positive roots induced by `s_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> WeylElement {
    let images = rs
        .positive_roots()
        .iter()
        .map(|beta| {
            let img = rs.reflect(beta, i);
            if img.is_nonnegative() {
                SignedRoot::new(rs.root_index(&img).expect("reflection permutes roots"), false)
            } else {
                let pos = -&img;
                SignedRoot::new(rs.root_index(&pos).expect("reflection permutes roots"), true)
            }
        })
        .collect();
    WeylElement::from_images(images)
}

/// Enumerates the Weyl group with the default element cap.
pub fn generate_weyl(rs: &RootSystem) -> Result<WeylGroup> {
    generate_weyl_with_cap(rs, DEFAULT_ELEMENT_CAP)
}

/// Breadth-first closure of the identity under right multiplication by
/// simple reflections. Elements come out in order of nondecreasing length.
pub fn generate_weyl_with_cap(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    let gens: Vec<WeylElement> = rs.delta_order().map(|i| simple_reflection(rs, i)).collect();
    let id = WeylElement::identity(rs.num_positive_roots());
    let mut elements = vec![id.clone()];
    let mut lookup = HashMap::new();
    lookup.insert(id.images.clone(), 0usize);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in &gens {
            let next = elements[e].compose(g);
            if !lookup.contains_key(&next.images) {
                if elements.len() >= cap {
                    return Err(Error::ResourceLimit {
                        what: format!("Weyl group of {}", rs.cartan_type()),
                        found: elements.len() + 1,
                        cap,
                    });
                }
                lookup.insert(next.images.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    Ok(WeylGroup::from_elements(rs.clone(), elements, lookup, &gens))
}

impl WeylGroup {
    fn from_elements(
        rs: RootSystem,
        elements: Vec<WeylElement>,
        lookup: HashMap<Vec<SignedRoot>, usize>,
        gens: &[WeylElement],
    ) -> Self {
        Self::try_from_elements(rs, elements, lookup, gens).expect("element list is closed")
    }

    /// Builds the multiplication tables; `None` if the list is not closed
    /// under simple reflections.
    fn try_from_elements(
        rs: RootSystem,
        elements: Vec<WeylElement>,
        lookup: HashMap<Vec<SignedRoot>, usize>,
        gens: &[WeylElement],
    ) -> Option<Self> {
        let find = |w: WeylElement| lookup.get(&w.images).copied();
        let right = gens
            .iter()
            .map(|g| elements.iter().map(|e| find(e.compose(g))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        let left = gens
            .iter()
            .map(|g| elements.iter().map(|e| find(g.compose(e))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(WeylGroup {
            rs,
            elements,
            lookup,
            right,
            left,
        })
    }

    /// Rebuilds a group from a stored element list, checking that it starts
    /// with the identity and is closed under the simple reflections.
    pub(crate) fn from_element_list(rs: &RootSystem, elements: Vec<WeylElement>) -> Option<Self> {
        if elements.first().map(|e| e.is_identity()) != Some(true) {
            return None;
        }
        let mut lookup = HashMap::with_capacity(elements.len());
        for (k, e) in elements.iter().enumerate() {
            if e.images.len() != rs.num_positive_roots() || lookup.insert(e.images.clone(), k).is_some() {
                return None;
            }
        }
        let gens: Vec<WeylElement> = rs.delta_order().map(|i| simple_reflection(rs, i)).collect();
        Self::try_from_elements(rs.clone(), elements, lookup, &gens)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.lookup.get(&w.images).copied()
    }

    pub fn right_mul(&self, e: usize, i: usize) -> usize {
        self.right[i][e]
    }

    pub fn left_mul(&self, e: usize, i: usize) -> usize {
        self.left[i][e]
    }

    fn closure(&self, start: usize, left_gens: SubsetMask, right_gens: SubsetMask) -> Vec<usize> {
        let mut seen = vec![start];
        let mut mark = HashMap::from([(start, ())]);
        let mut k = 0;
        while k < seen.len() {
            let e = seen[k];
            k += 1;
            let lefts = left_gens.iter().map(|i| self.left[i][e]);
            let rights = right_gens.iter().map(|j| self.right[j][e]);
            for n in lefts.chain(rights) {
                if mark.insert(n, ()).is_none() {
                    seen.push(n);
                }
            }
        }
        seen
    }

    /// Indices of the parabolic subgroup generated by `{s_i : i in levi}`.
    pub fn parabolic_indices(&self, levi: SubsetMask) -> Vec<usize> {
        let mut v = self.closure(0, SubsetMask::empty(), levi);
        v.sort_unstable();
        v
    }

    pub fn parabolic_subgroup(&self, levi: SubsetMask) -> Vec<WeylElement> {
        self.parabolic_indices(levi)
            .into_iter()
            .map(|e| self.elements[e].clone())
            .collect()
    }

    /// Partition of the group into double cosets `W_I w W_J`, as index lists.
    pub fn double_cosets(&self, left: SubsetMask, right: SubsetMask) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut cosets = Vec::new();
        for e in 0..self.order() {
            if assigned[e] {
                continue;
            }
            let coset = self.closure(e, left, right);
            for &x in &coset {
                assigned[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// One minimal-length representative per double coset `W_I w W_J`,
    /// sorted by length, each carrying its exponent characters.
    pub fn kostant_reps(&self, i_set: SubsetMask, j_set: SubsetMask) -> Result<Vec<DoubleCosetRep>> {
        let i_set = self.rs.check_mask(i_set)?;
        let j_set = self.rs.check_mask(j_set)?;
        let cosets = self.double_cosets(i_set, j_set);
        let total: usize = cosets.iter().map(Vec::len).sum();
        if total != self.order() {
            return Err(Error::Contract(format!(
                "double cosets cover {total} elements of a group of order {}",
                self.order()
            )));
        }
        let mut reps = Vec::with_capacity(cosets.len());
        for coset in &cosets {
            let min_len = coset.iter().map(|&e| self.elements[e].length).min().unwrap();
            let mut minimal: Vec<&WeylElement> = coset
                .iter()
                .map(|&e| &self.elements[e])
                .filter(|w| w.length == min_len)
                .collect();
            if minimal.len() != 1 {
                return Err(Error::Contract(format!(
                    "double coset for ({i_set}, {j_set}) has {} minimal-length elements",
                    minimal.len()
                )));
            }
            minimal.sort();
            let w = minimal[0].clone();
            let gamma_exp = gamma_exponents(&self.rs, &w, i_set, j_set);
            let delta_exp = delta_exponents(&self.rs, &w, i_set, j_set);
            let levi = intersect_levi(&self.rs, &w, i_set, j_set)?;
            reps.push(DoubleCosetRep {
                length: w.length,
                w,
                i_set,
                j_set,
                gamma_exp,
                delta_exp,
                levi,
                coset_size: coset.len(),
            });
        }
        reps.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.w.cmp(&b.w)));
        Ok(reps)
    }
}

/// Whether `w` is the minimal element of `W_I w W_J`: `w^{-1}` keeps the
/// simple roots of `I` positive and `w` keeps those of `J` positive.
pub fn is_kostant(w: &WeylElement, i_set: SubsetMask, j_set: SubsetMask) -> bool {
    let inv = w.inverse();
    i_set.iter().all(|i| !inv.image(i).is_negative()) && j_set.iter().all(|j| !w.image(j).is_negative())
}

/// A minimal double-coset representative with its modulus-character data.
#[derive(Debug, Clone, Serialize)]
pub struct DoubleCosetRep {
    #[serde(skip)]
    pub w: WeylElement,
    #[serde(rename = "I")]
    pub i_set: SubsetMask,
    #[serde(rename = "J")]
    pub j_set: SubsetMask,
    pub length: usize,
    #[serde(rename = "gamma")]
    pub gamma_exp: CharacterVector,
    #[serde(rename = "delta")]
    pub delta_exp: CharacterVector,
    pub levi: SubsetMask,
    pub coset_size: usize,
}

/// Sum of the positive roots `a` outside the Levi of `J` whose image `w a`
/// is a negative root outside the Levi of `I`.
pub fn gamma_exponents(rs: &RootSystem, w: &WeylElement, i_set: SubsetMask, j_set: SubsetMask) -> CharacterVector {
    let mut acc = CharacterVector::zero(rs.rank());
    for (k, alpha) in rs.positive_roots().iter().enumerate() {
        if RootSystem::in_levi(alpha, j_set) {
            continue;
        }
        let img = w.image(k);
        if img.is_negative() && !RootSystem::in_levi(&rs.positive_roots()[img.index()], i_set) {
            acc += alpha;
        }
    }
    acc
}

/// Sum of the positive roots `a` in the Levi of `J` whose image `w a` is a
/// positive root outside the Levi of `I`.
pub fn delta_exponents(rs: &RootSystem, w: &WeylElement, i_set: SubsetMask, j_set: SubsetMask) -> CharacterVector {
    let mut acc = CharacterVector::zero(rs.rank());
    for (k, alpha) in rs.positive_roots().iter().enumerate() {
        if !RootSystem::in_levi(alpha, j_set) {
            continue;
        }
        let img = w.image(k);
        if !img.is_negative() && !RootSystem::in_levi(&rs.positive_roots()[img.index()], i_set) {
            acc += alpha;
        }
    }
    acc
}

/// Simple roots `b` of `J` with `w b` a simple root of `I`.
///
/// Only meaningful for minimal representatives, for which `w` maps the
/// simple roots of `J` lying in `w^{-1}` of the Levi of `I` onto simple roots.
pub fn intersect_levi(rs: &RootSystem, w: &WeylElement, i_set: SubsetMask, j_set: SubsetMask) -> Result<SubsetMask> {
    let mut out = SubsetMask::empty();
    for b in j_set.iter() {
        let img = w.image(b);
        let root = &rs.positive_roots()[img.index()];
        if !RootSystem::in_levi(root, i_set) {
            continue;
        }
        match root.simple_index() {
            Some(a) if !img.is_negative() && i_set.contains(a) => out = out.with(b),
            _ => {
                return Err(Error::Contract(format!(
                    "w sends simple root {b} of J={j_set} to a non-simple root of the Levi of I={i_set}; \
                     w is not a minimal double-coset representative"
                )))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, Series};

    fn mask(ix: &[usize], rank: usize) -> SubsetMask {
        SubsetMask::from_indices(ix, rank).unwrap()
    }

    fn group(s: Series, n: usize) -> WeylGroup {
        generate_weyl(&build_root_system(s, n).unwrap()).unwrap()
    }

    /// Oracle: closure of the simple-reflection matrices acting on
    /// simple-root coordinates.
    fn matrix_group_order(rs: &RootSystem) -> usize {
        let n = rs.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| {
                                let mut v = CharacterVector::unit(n, c);
                                v = rs.reflect(&v, i);
                                v.coords()[r]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let id: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(m) = stack.pop() {
            for g in &gens {
                let prod: Vec<Vec<i64>> = (0..n)
                    .map(|r| (0..n).map(|c| (0..n).map(|k| m[r][k] * g[k][c]).sum()).collect())
                    .collect();
                if seen.insert(prod.clone()) {
                    stack.push(prod);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn reduced_words_rebuild_elements() {
        for (series, rank) in [(Series::A, 3), (Series::B, 3), (Series::G, 2)] {
            let rs = build_root_system(series, rank).unwrap();
            let w = generate_weyl(&rs).unwrap();
            for e in w.elements() {
                let word = e.reduced_word(&rs);
                assert_eq!(word.len(), e.length());
                let rebuilt = word
                    .iter()
                    .fold(WeylElement::identity(rs.num_positive_roots()), |acc, &i| acc.compose(&simple_reflection(&rs, i)));
                assert_eq!(&rebuilt, e);
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(Series::A, 1).order(), 2);
        assert_eq!(group(Series::A, 2).order(), 6);
        assert_eq!(group(Series::B, 2).order(), 8);
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::C, 3), (Series::G, 2), (Series::D, 4), (Series::F, 4)] {
            let rs = build_root_system(s, n).unwrap();
            assert_eq!(generate_weyl(&rs).unwrap().order(), matrix_group_order(&rs), "{s}{n}");
        }
    }

    #[test]
    fn identity_first_and_lengths() {
        let w = group(Series::A, 1);
        assert!(w.element(0).is_identity());
        let lens: Vec<usize> = w.elements().iter().map(|e| e.length()).collect();
        assert_eq!(lens, vec![0, 1]);
        let b3 = group(Series::B, 3);
        for e in b3.elements() {
            let recomputed = e.images().iter().filter(|s| s.is_negative()).count();
            assert_eq!(recomputed, e.length());
            let det = det3(&e.matrix(b3.root_system()));
            assert!(det == 1 || det == -1);
            assert_eq!(det, if e.length() % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(b3.elements().iter().map(|e| e.length()).max(), Some(9));
    }

    fn det3(m: &[Vec<i64>]) -> i64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    #[test]
    fn linear_action_permutes_roots() {
        let w = group(Series::G, 2);
        let rs = w.root_system();
        for e in w.elements() {
            for (k, beta) in rs.positive_roots().iter().enumerate() {
                let img = e.act(rs, beta);
                let expected = &rs.positive_roots()[e.image(k).index()];
                if e.image(k).is_negative() {
                    assert_eq!(img, -expected);
                } else {
                    assert_eq!(&img, expected);
                }
            }
            assert!(e.compose(&e.inverse()).is_identity());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rs = build_root_system(Series::B, 3).unwrap();
        match generate_weyl_with_cap(&rs, 10) {
            Err(Error::ResourceLimit { found, cap, .. }) => {
                assert_eq!(cap, 10);
                assert!(found > 10);
            }
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn parabolic_examples() {
        let a2 = group(Series::A, 2);
        assert_eq!(a2.parabolic_subgroup(SubsetMask::empty()).len(), 1);
        assert!(a2.parabolic_subgroup(SubsetMask::empty())[0].is_identity());
        assert_eq!(a2.parabolic_subgroup(mask(&[0], 2)).len(), 2);
        let b2 = group(Series::B, 2);
        assert_eq!(b2.parabolic_subgroup(SubsetMask::full(2)).len(), 8);
    }

    #[test]
    fn kostant_examples() {
        let a2 = group(Series::A, 2);
        let reps = a2.kostant_reps(mask(&[0], 2), mask(&[0], 2)).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps.iter().map(|r| r.length).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(reps[1].w, simple_reflection(a2.root_system(), 1));
        assert_eq!(reps.iter().map(|r| r.coset_size).sum::<usize>(), 6);

        for g in [group(Series::A, 2), group(Series::B, 3), group(Series::G, 2)] {
            let full = g.root_system().delta();
            let reps = g.kostant_reps(full, full).unwrap();
            assert_eq!(reps.len(), 1);
            assert!(reps[0].w.is_identity());
        }

        let a1 = group(Series::A, 1);
        let reps = a1.kostant_reps(SubsetMask::empty(), SubsetMask::empty()).unwrap();
        assert_eq!(reps.iter().map(|r| r.length).collect::<Vec<_>>(), vec![0, 1]);
    }

    /// Brute force: the minimal representative of each coset is the element
    /// of least length among all `u w v`.
    #[test]
    fn kostant_reps_match_brute_force() {
        for g in [group(Series::A, 3), group(Series::B, 3), group(Series::G, 2)] {
            let rank = g.root_system().rank();
            for i in SubsetMask::all(rank) {
                for j in SubsetMask::all(rank) {
                    let reps = g.kostant_reps(i, j).unwrap();
                    let wi = g.parabolic_subgroup(i);
                    let wj = g.parabolic_subgroup(j);
                    let mut covered = std::collections::HashSet::new();
                    for r in &reps {
                        assert!(is_kostant(&r.w, i, j));
                        let mut coset = std::collections::HashSet::new();
                        for u in &wi {
                            for v in &wj {
                                coset.insert(u.compose(&r.w).compose(v));
                            }
                        }
                        assert_eq!(coset.len(), r.coset_size);
                        assert!(coset.iter().all(|x| x.length() >= r.length));
                        for x in coset {
                            assert!(covered.insert(x));
                        }
                    }
                    assert_eq!(covered.len(), g.order());
                }
            }
        }
    }

    #[test]
    fn right_coset_reps_when_i_is_full() {
        let g = group(Series::A, 3);
        let reps = g.kostant_reps(g.root_system().delta(), SubsetMask::empty()).unwrap();
        assert_eq!(reps.len(), 1);
        let reps = g.kostant_reps(SubsetMask::empty(), mask(&[1], 3)).unwrap();
        assert_eq!(reps.len(), g.order() / 2);
    }

    #[test]
    fn gamma_examples() {
        let a1 = group(Series::A, 1);
        let rs = a1.root_system();
        let id = a1.element(0);
        assert!(gamma_exponents(rs, id, SubsetMask::empty(), SubsetMask::empty()).is_zero());
        let s = a1.element(1);
        assert_eq!(gamma_exponents(rs, s, SubsetMask::empty(), SubsetMask::empty()).coords(), &[1]);

        let a2 = group(Series::A, 2);
        let rs = a2.root_system();
        let s1 = simple_reflection(rs, 1);
        let i = mask(&[0], 2);
        assert_eq!(gamma_exponents(rs, &s1, i, i).coords(), &[0, 1]);
    }

    #[test]
    fn delta_examples() {
        let a2 = group(Series::A, 2);
        let rs = a2.root_system();
        let s1 = simple_reflection(rs, 1);
        let i = mask(&[0], 2);
        assert_eq!(delta_exponents(rs, &s1, i, i).coords(), &[1, 0]);
        let id = a2.element(0);
        assert!(delta_exponents(rs, id, rs.delta(), i).is_zero());
        for e in a2.elements() {
            assert!(delta_exponents(rs, e, i, SubsetMask::empty()).is_zero());
        }
    }

    #[test]
    fn intersect_levi_examples() {
        let a2 = group(Series::A, 2);
        let rs = a2.root_system();
        let id = a2.element(0);
        for i in SubsetMask::all(2) {
            for j in SubsetMask::all(2) {
                assert_eq!(intersect_levi(rs, id, i, j).unwrap(), i.intersection(j));
            }
            assert_eq!(intersect_levi(rs, id, rs.delta(), i).unwrap(), i);
        }
        let s1 = simple_reflection(rs, 1);
        let i = mask(&[0], 2);
        assert_eq!(intersect_levi(rs, &s1, i, i).unwrap(), SubsetMask::empty());
        // s_1 sends alpha_0 to alpha_0 + alpha_1, which is not simple.
        assert!(matches!(intersect_levi(rs, &s1, rs.delta(), i), Err(Error::Contract(_))));
    }

    #[test]
    fn gamma_vanishes_only_at_identity() {
        for (s, n) in [(Series::A, 1), (Series::A, 2), (Series::A, 3), (Series::B, 2), (Series::B, 3), (Series::C, 3), (Series::G, 2), (Series::A, 4), (Series::B, 4), (Series::D, 4), (Series::F, 4)] {
            let g = group(s, n);
            for i in SubsetMask::all(n) {
                for j in SubsetMask::all(n) {
                    for r in g.kostant_reps(i, j).unwrap() {
                        assert_eq!(r.gamma_exp.is_zero(), r.w.is_identity(), "{s}{n} {i} {j}");
                        assert!(r.gamma_exp.is_nonnegative() && r.delta_exp.is_nonnegative());
                    }
                }
            }
        }
    }
}
