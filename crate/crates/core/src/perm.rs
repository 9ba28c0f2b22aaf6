//! Permutations in one-line notation and the 0-Hecke monoid acting on them.
//!
//! A permutation `σ` of `{1..N}` indexes the monoid element `π_σ`. The
//! generator `π_i` acts on the right by sorting positions `i, i+1` into
//! descending order and on the left by doing the same to the values `i, i+1`.
//! Words are read left to right and replayed through the right action.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest permutation size accepted anywhere in the crate.
pub const MAX_DEGREE: usize = 64;

/// A subset of the generator index set `{1..N-1}`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(u64);

impl GeneratorSet {
    pub const fn empty() -> Self {
        Self(0)
    }

    /// All generators `1..=n-1`.
    pub fn full(n: usize) -> Self {
        if n <= 1 {
            Self(0)
        } else {
            Self((1u64 << (n - 1)) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DEGREE).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!((1..MAX_DEGREE).contains(&i));
        self.0 |= 1 << (i - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    /// Complement inside `{1..n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Self(!self.0 & Self::full(n).0)
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=64).filter(move |&i| self.0 & (1 << (i - 1)) != 0)
    }

    /// Every subset of `{1..n-1}`, in increasing bitmask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = Self> {
        (0..=Self::full(n).0).map(Self)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::empty();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl From<GeneratorSet> for BTreeSet<usize> {
    fn from(set: GeneratorSet) -> Self {
        set.iter().collect()
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub(crate) fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    Ok(())
}

pub(crate) fn check_generator_set(set: GeneratorSet, n: usize) -> Result<()> {
    match set.max() {
        Some(i) if i >= n => Err(Error::GeneratorOutOfRange { index: i, n }),
        _ => Ok(()),
    }
}

/// A permutation of `{1..N}` in one-line notation.
///
/// Ordering is lexicographic on the one-line entries, which is also the
/// canonical ordering of basis elements everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("size {n} outside 1..={MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{entries:?} is not a bijection on 1..={n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self(entries)
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "size {n} out of range");
        Self((1..=n as u8).collect())
    }

    /// The longest element `w_0 = [N, N-1, .., 1]`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "size {n} out of range");
        Self((1..=n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for 1-based `i`.
    pub fn value(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Number of inversions, which is the length of any reduced word.
    pub fn length(&self) -> usize {
        let e = &self.0;
        let mut inv = 0;
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if e[a] > e[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Self(inv)
    }

    /// Group composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n(), other.n())?;
        Ok(Self(other.0.iter().map(|&x| self.0[x as usize - 1]).collect()))
    }

    /// Right action `σ·π_i`: swap positions `i, i+1` when `σ(i) < σ(i+1)`.
    pub fn apply_pi_right(&self, i: usize) -> Result<Self> {
        check_generator(i, self.n())?;
        let mut out = self.clone();
        out.pi_right_in_place(i);
        Ok(out)
    }

    /// Left action `π_i·σ`: swap the values `i, i+1` when `i` precedes `i+1`.
    pub fn apply_pi_left(&self, i: usize) -> Result<Self> {
        check_generator(i, self.n())?;
        let mut out = self.clone();
        out.pi_left_in_place(i);
        Ok(out)
    }

    pub(crate) fn pi_right_in_place(&mut self, i: usize) {
        if self.0[i - 1] < self.0[i] {
            self.0.swap(i - 1, i);
        }
    }

    pub(crate) fn pi_left_in_place(&mut self, i: usize) {
        let (a, b) = (self.position(i), self.position(i + 1));
        if a < b {
            self.0.swap(a, b);
        }
    }

    /// 0-based position of the value `v`.
    fn position(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x as usize == v).expect("value present")
    }

    /// `i ∈ D_L(σ)` iff `i+1` appears before `i` in one-line notation.
    pub fn left_descents(&self) -> GeneratorSet {
        let inv = self.inverse();
        (1..self.n()).filter(|&i| inv.0[i - 1] > inv.0[i]).collect()
    }

    /// `i ∈ D_R(σ)` iff `σ(i) > σ(i+1)`.
    pub fn right_descents(&self) -> GeneratorSet {
        (1..self.n()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// The lexicographically minimal reduced word, found by repeatedly
    /// peeling off the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let n = self.n();
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = rest.left_descents().iter().next() {
            letters.push(i);
            // s_i·σ swaps the values i and i+1.
            let (a, b) = (rest.position(i), rest.position(i + 1));
            rest.0.swap(a, b);
        }
        Word { letters, n }
    }

    /// Generators occurring in a reduced word (the same set for every reduced word).
    pub fn content(&self) -> GeneratorSet {
        self.reduced_word().letters.iter().copied().collect()
    }

    /// The idempotent power `σ^ω`, the longest element of the parabolic
    /// submonoid on the content of `σ`.
    pub fn monoid_omega(&self) -> Self {
        longest_element(self.content(), self.n()).expect("content lies inside the index set")
    }

    /// Idempotent elements of the monoid are exactly the parabolic longest elements.
    pub fn is_monoid_idempotent(&self) -> bool {
        *self == self.monoid_omega()
    }

    /// Product `π_σ·π_τ`: replay a reduced word of `τ` through the right action.
    pub fn monoid_product(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n(), other.n())?;
        let mut out = self.clone();
        for &i in &other.reduced_word().letters {
            out.pi_right_in_place(i);
        }
        Ok(out)
    }

    /// Left weak order: `self ≤_L other` iff `l(other·self⁻¹) + l(self) = l(other)`,
    /// i.e. `self` is a suffix of `other`.
    pub fn leq_left_weak(&self, other: &Self) -> Result<bool> {
        let quotient = other.compose(&self.inverse())?;
        Ok(quotient.length() + self.length() == other.length())
    }

    /// Conjugation by `w_0`, which relabels generator `i` as `N-i`.
    pub fn dynkin_reverse(&self) -> Self {
        let n = self.n() as u8;
        Self(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }
}

pub(crate) fn check_same_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<u8>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Longest element of the parabolic submonoid generated by `J`: reverses each
/// maximal run of positions spanned by consecutive generators in `J`.
pub fn longest_element(set: GeneratorSet, n: usize) -> Result<Permutation> {
    check_generator_set(set, n)?;
    let mut entries: Vec<u8> = (1..=n as u8).collect();
    let mut i = 1;
    while i < n {
        if set.contains(i) {
            let start = i;
            while i < n && set.contains(i) {
                i += 1;
            }
            // generators start..i-1 span positions start..=i
            entries[start - 1..i].reverse();
        } else {
            i += 1;
        }
    }
    Ok(Permutation(entries))
}

/// A sequence of generator indices in `{1..N-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::UnsupportedSize { n, min: 1, max: MAX_DEGREE });
        }
        for &i in &letters {
            check_generator(i, n)?;
        }
        Ok(Self { letters, n })
    }

    pub fn empty(n: usize) -> Self {
        Self { letters: Vec::new(), n }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The monoid element `π_w`, i.e. the identity acted on by each letter in turn.
    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &i in &self.letters {
            p.pi_right_in_place(i);
        }
        p
    }

    pub fn is_reduced(&self) -> bool {
        self.to_permutation().length() == self.len()
    }

    pub fn content(&self) -> GeneratorSet {
        self.letters.iter().copied().collect()
    }

    /// Relabel every letter `i` as `N-i`.
    pub fn dynkin_reverse(&self) -> Self {
        Self { letters: self.letters.iter().map(|&i| self.n - i).collect(), n: self.n }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

/// Letters run together (`121`) when every letter is a single digit,
/// comma separated otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.letters.iter().all(|&i| i < 10) { "" } else { "," };
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u8]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn set(v: &[usize]) -> GeneratorSet {
        v.iter().copied().collect()
    }

    #[test]
    fn right_action() {
        assert_eq!(p(&[1, 2, 3]).apply_pi_right(1).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[2, 1, 3]).apply_pi_right(1).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[2, 1, 3]).apply_pi_right(2).unwrap(), p(&[2, 3, 1]));
        assert!(matches!(p(&[1, 2, 3]).apply_pi_right(3), Err(Error::GeneratorOutOfRange { index: 3, n: 3 })));
        assert!(p(&[1, 2, 3]).apply_pi_right(0).is_err());
    }

    #[test]
    fn left_action() {
        assert_eq!(p(&[1, 2, 3]).apply_pi_left(1).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[2, 1, 3]).apply_pi_left(1).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[1, 3, 2]).apply_pi_left(2).unwrap(), p(&[1, 3, 2]));
        assert!(p(&[1, 2]).apply_pi_left(2).is_err());
    }

    #[test]
    fn products() {
        let id = Permutation::identity(3);
        let tau = p(&[3, 1, 2]);
        assert_eq!(id.monoid_product(&tau).unwrap(), tau);
        assert_eq!(p(&[2, 1, 3]).monoid_product(&p(&[2, 1, 3])).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[2, 1, 3]).monoid_product(&p(&[1, 3, 2])).unwrap(), p(&[2, 3, 1]));
        assert!(matches!(id.monoid_product(&Permutation::identity(4)), Err(Error::SizeMismatch { left: 3, right: 4 })));
    }

    #[test]
    fn reduced_words() {
        assert!(p(&[1, 2, 3]).reduced_word().is_empty());
        assert_eq!(p(&[3, 2, 1]).reduced_word().letters(), &[1, 2, 1]);
        assert_eq!(p(&[2, 3, 1]).reduced_word().letters(), &[1, 2]);
    }

    #[test]
    fn descents() {
        assert!(p(&[1, 2, 3]).left_descents().is_empty());
        assert_eq!(p(&[3, 2, 1]).left_descents(), set(&[1, 2]));
        assert_eq!(p(&[2, 3, 1]).left_descents(), set(&[1]));
        assert_eq!(p(&[2, 3, 1]).right_descents(), set(&[2]));
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(GeneratorSet::empty(), 3).unwrap(), Permutation::identity(3));
        let w = longest_element(set(&[1, 2, 6]), 8).unwrap();
        assert_eq!(w.reduced_word().letters(), &[1, 2, 1, 6]);
        let w = longest_element(set(&[3, 4, 5, 7]), 8).unwrap();
        assert_eq!(w.reduced_word().letters(), &[3, 4, 3, 5, 4, 3, 7]);
        let spelled = Word::new(vec![3, 4, 5, 3, 4, 3, 7], 8).unwrap();
        assert!(spelled.is_reduced());
        assert_eq!(spelled.to_permutation(), w);
        assert_eq!(longest_element(GeneratorSet::full(5), 5).unwrap(), Permutation::longest(5));
        assert!(longest_element(set(&[3]), 3).is_err());
    }

    #[test]
    fn content_and_omega() {
        let id = Permutation::identity(3);
        assert!(id.content().is_empty());
        assert_eq!(id.monoid_omega(), id);
        assert_eq!(p(&[2, 3, 1]).content(), set(&[1, 2]));
        assert_eq!(p(&[2, 3, 1]).monoid_omega(), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 1, 3]).content(), set(&[1]));
        assert_eq!(p(&[2, 1, 3]).monoid_omega(), p(&[2, 1, 3]));
    }

    #[test]
    fn omega_is_the_stable_power() {
        // iterate σ·σ until stable and compare
        let s = p(&[2, 3, 1]);
        let mut power = s.clone();
        loop {
            let next = power.monoid_product(&s).unwrap();
            if next == power {
                break;
            }
            power = next;
        }
        assert_eq!(power, s.monoid_omega());
    }

    #[test]
    fn weak_order() {
        let id = Permutation::identity(3);
        assert!(id.leq_left_weak(&p(&[2, 3, 1])).unwrap());
        assert!(p(&[2, 1, 3]).leq_left_weak(&p(&[3, 2, 1])).unwrap());
        assert!(!p(&[2, 1, 3]).leq_left_weak(&p(&[1, 3, 2])).unwrap());
        assert!(!p(&[3, 2, 1]).leq_left_weak(&p(&[2, 1, 3])).unwrap());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
        assert_eq!(serde_json::from_str::<Permutation>("[2,1]").unwrap(), p(&[2, 1]));
        assert_eq!(serde_json::to_string(&p(&[3, 1, 2])).unwrap(), "[3,1,2]");
    }

    #[test]
    fn words() {
        assert!(Word::new(vec![1, 3], 3).is_err());
        let w = Word::new(vec![1, 2, 1], 3).unwrap();
        assert!(w.is_reduced());
        assert_eq!(w.to_permutation(), Permutation::longest(3));
        assert_eq!(w.to_string(), "121");
        assert_eq!(w.dynkin_reverse().letters(), &[2, 1, 2]);
        assert!(!Word::new(vec![1, 1], 3).unwrap().is_reduced());
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,2,1]");
    }

    #[test]
    fn generator_sets() {
        let j = set(&[1, 3]);
        assert_eq!(j.complement(5), set(&[2, 4]));
        assert_eq!(j.to_string(), "{1,3}");
        assert_eq!(GeneratorSet::all_subsets(4).count(), 8);
        assert_eq!(j.max(), Some(3));
        assert_eq!(GeneratorSet::empty().max(), None);
    }
}
