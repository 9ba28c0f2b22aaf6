//! Non-decreasing parking functions: regressive order-preserving maps of
//! `{1..N}`, as the quotient of the 0-Hecke monoid by `π_iπ_{i+1}π_i = π_iπ_{i+1}`.
//!
//! Products are composition with the right factor applied first,
//! `(f·g)(x) = f(g(x))`. Under this order `π_i ↦ e_i` respects every
//! relation; [`NdpfMonoid::new`] rechecks that before returning.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::{masked_factors, universal_word, Sign, SignedDiagram};
use crate::error::{Error, Result};
use crate::lincomb::Combination;
use crate::monoid::HeckeMonoid;
use crate::perm::{check_generator, check_same_size, longest_element, GeneratorSet, Word};

/// The image array `[f(1), .., f(N)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct NdpfFunction(Vec<u8>);

impl NdpfFunction {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v as usize > k + 1 {
                return Err(Error::InvalidNdpf(format!("{images:?}: f({}) = {v} is not in 1..={}", k + 1, k + 1)));
            }
            if k > 0 && images[k - 1] > v {
                return Err(Error::InvalidNdpf(format!("{images:?}: decreases at {}", k + 1)));
            }
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    /// `e_i`: sends `i+1` to `i` and fixes everything else.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        check_generator(i, n)?;
        let mut f = Self::identity(n);
        f.0[i] = i as u8;
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] as usize
    }

    /// `self·other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n(), other.n())?;
        Ok(Self(other.0.iter().map(|&x| self.0[x as usize - 1]).collect()))
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.iter().all(|&x| self.0[x as usize - 1] == x)
    }

    /// The product of the generators along `w`.
    pub fn from_word(w: &Word) -> Self {
        let n = w.n();
        w.letters().iter().fold(Self::identity(n), |f, &i| {
            f.compose(&Self::generator(i, n).expect("word letters are in range")).expect("same size")
        })
    }

    /// All regressive order-preserving maps of `{1..n}`, in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        extend(&mut current, n, &mut out);
        out
    }
}

fn extend(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<NdpfFunction>) {
    let k = prefix.len();
    if k == n {
        out.push(NdpfFunction(prefix.clone()));
        return;
    }
    let low = prefix.last().copied().unwrap_or(1);
    for v in low..=(k as u8 + 1) {
        prefix.push(v);
        extend(prefix, n, out);
        prefix.pop();
    }
}

impl TryFrom<Vec<u8>> for NdpfFunction {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<NdpfFunction> for Vec<u8> {
    fn from(f: NdpfFunction) -> Self {
        f.0
    }
}

impl fmt::Debug for NdpfFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// `NDPF_N` with its multiplication table.
#[derive(Debug)]
pub struct NdpfMonoid {
    n: usize,
    elements: Vec<NdpfFunction>,
    index: HashMap<NdpfFunction, usize>,
    table: Vec<u32>,
    generators: Vec<usize>,
}

impl NdpfMonoid {
    /// Enumerates the monoid and checks the generator relations, failing
    /// with [`Error::NdpfRelation`] if any is violated.
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=crate::monoid::MAX_TABLE_N).contains(&n) {
            return Err(Error::UnsupportedSize { n, min: 1, max: crate::monoid::MAX_TABLE_N });
        }
        let elements = NdpfFunction::enumerate(n);
        let index: HashMap<NdpfFunction, usize> = elements.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();
        let mut table = Vec::with_capacity(elements.len() * elements.len());
        for f in &elements {
            for g in &elements {
                table.push(index[&f.compose(g)?] as u32);
            }
        }
        let generators = (1..n).map(|i| index[&NdpfFunction::generator(i, n).expect("in range")]).collect();
        let m = Self { n, elements, index, table, generators };
        m.verify_relations()?;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[NdpfFunction] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &NdpfFunction {
        &self.elements[k]
    }

    pub fn index_of(&self, f: &NdpfFunction) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    pub fn generator(&self, i: usize) -> usize {
        self.generators[i - 1]
    }

    pub fn identity_index(&self) -> usize {
        self.index[&NdpfFunction::identity(self.n)]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&k| self.elements[k].is_idempotent()).collect()
    }

    /// `e_i² = e_i`, the braid and commutation relations, and `e_i e_{i+1} e_i = e_i e_{i+1}`.
    pub fn verify_relations(&self) -> Result<()> {
        let e = |i: usize| self.generator(i);
        let word = |w: &[usize]| w.iter().fold(self.identity_index(), |x, &i| self.product(x, e(i)));
        let fail = |what: String| Err(Error::NdpfRelation(what));
        for i in 1..self.n {
            if word(&[i, i]) != e(i) {
                return fail(format!("e_{i}^2 != e_{i}"));
            }
            for j in i + 2..self.n {
                if word(&[i, j]) != word(&[j, i]) {
                    return fail(format!("e_{i} e_{j} != e_{j} e_{i}"));
                }
            }
            if i + 1 < self.n {
                let j = i + 1;
                if word(&[i, j, i]) != word(&[j, i, j]) {
                    return fail(format!("braid relation fails for e_{i}, e_{j}"));
                }
                if word(&[i, j, i]) != word(&[i, j]) {
                    return fail(format!("e_{i} e_{j} e_{i} != e_{i} e_{j}"));
                }
            }
        }
        Ok(())
    }

    /// Image of every element of `H_0(S_N)` under `π_i ↦ e_i`, indexed
    /// like `h`.
    pub fn quotient_map(&self, h: &HeckeMonoid) -> Result<Vec<usize>> {
        check_same_size(self.n, h.n())?;
        Ok((0..h.size())
            .map(|k| h.word(k).letters().iter().fold(self.identity_index(), |x, &i| self.product(x, self.generator(i))))
            .collect())
    }

    /// Checks that the quotient map is a surjective monoid morphism:
    /// `q(σ·π_i) = q(σ)·e_i` for every `σ` and `i`, and every function is hit.
    pub fn verify_quotient_map(&self, h: &HeckeMonoid) -> Result<bool> {
        let q = self.quotient_map(h)?;
        let morphism =
            (0..h.size()).all(|k| (1..self.n).all(|i| q[h.act_right(k, i)] == self.product(q[k], self.generator(i))));
        let mut hit = vec![false; self.size()];
        for &x in &q {
            hit[x] = true;
        }
        Ok(morphism && hit.into_iter().all(|b| b))
    }

    /// Images of the `w_J^+`, one per subset `J` in bitmask order.
    pub fn longest_element_images(&self, h: &HeckeMonoid) -> Result<Vec<usize>> {
        let q = self.quotient_map(h)?;
        GeneratorSet::all_subsets(self.n)
            .map(|set| Ok(q[h.index_of(&longest_element(set, self.n)?).expect("same size")]))
            .collect()
    }
}

/// An element of the monoid algebra of `NDPF_N` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NdpfElement {
    n: usize,
    terms: Combination<NdpfFunction>,
}

impl NdpfElement {
    pub fn one(n: usize) -> Self {
        Self { n, terms: Combination::monomial(NdpfFunction::identity(n)) }
    }

    pub fn basis(f: NdpfFunction) -> Self {
        Self { n: f.n(), terms: Combination::monomial(f) }
    }

    pub fn terms(&self) -> &Combination<NdpfFunction> {
        &self.terms
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n, other.n)?;
        let mut terms = Combination::new();
        for (f, a) in self.terms.iter() {
            for (g, b) in other.terms.iter() {
                terms.add_term(f.compose(g)?, a * b);
            }
        }
        Ok(Self { n: self.n, terms })
    }

    /// `self·e_i` or `self·(1 - e_i)`.
    pub fn mul_generator(&self, i: usize, sign: Sign) -> Result<Self> {
        let e = NdpfFunction::generator(i, self.n)?;
        let mut terms = match sign {
            Sign::Plus => Combination::new(),
            Sign::Minus => self.terms.clone(),
        };
        let c = match sign {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        };
        for (f, a) in self.terms.iter() {
            terms.add_term(f.compose(&e)?, a * &c);
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.multiply(self)? == *self)
    }
}

/// The masked word `w^D` evaluated in the NDPF algebra.
pub fn ndpf_masked_element(w: &Word, d: &SignedDiagram) -> Result<NdpfElement> {
    masked_factors(w, d)?.into_iter().try_fold(NdpfElement::one(w.n()), |x, f| x.mul_generator(f.generator, f.sign))
}

/// Diagrams whose masked universal word is not idempotent in the NDPF algebra.
pub fn ndpf_masked_word_check(n: usize) -> Result<Vec<SignedDiagram>> {
    let u = universal_word(n);
    let mut bad = Vec::new();
    for d in SignedDiagram::all(n - 1) {
        if !ndpf_masked_element(&u, &d)?.is_idempotent()? {
            bad.push(d);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u8]) -> NdpfFunction {
        NdpfFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(NdpfFunction::new(vec![1, 1, 3]).is_ok());
        assert!(NdpfFunction::new(vec![1, 3, 3]).is_err());
        assert!(NdpfFunction::new(vec![1, 2, 1]).is_err());
        assert!(NdpfFunction::new(vec![0]).is_err());
        let json = serde_json::to_string(&f(&[1, 1, 2])).unwrap();
        assert_eq!(json, "[1,1,2]");
        assert!(serde_json::from_str::<NdpfFunction>("[2]").is_err());
    }

    #[test]
    fn generators_and_composition() {
        let e1 = NdpfFunction::generator(1, 3).unwrap();
        let e2 = NdpfFunction::generator(2, 3).unwrap();
        assert_eq!(e1, f(&[1, 1, 3]));
        assert_eq!(e1.compose(&e1).unwrap(), e1);
        assert_ne!(e1.compose(&e2).unwrap(), e2.compose(&e1).unwrap());
        assert_eq!(NdpfFunction::identity(3).compose(&e2).unwrap(), e2);
        let u3 = universal_word(3);
        assert_eq!(NdpfFunction::from_word(&u3), f(&[1, 1, 1]));
        let w121 = Word::new(vec![1, 2, 1], 3).unwrap();
        let w12 = Word::new(vec![1, 2], 3).unwrap();
        assert_eq!(NdpfFunction::from_word(&w121), NdpfFunction::from_word(&w12));
        assert!(NdpfFunction::generator(3, 3).is_err());
    }

    #[test]
    fn apply_first_order_breaks_the_quotient() {
        // x ↦ g(f(x)) instead of f(g(x))
        let e1 = f(&[1, 1, 3]);
        let e2 = f(&[1, 2, 2]);
        let then = |a: &NdpfFunction, b: &NdpfFunction| b.compose(a).unwrap();
        let lhs = then(&then(&e1, &e2), &e1);
        assert_ne!(lhs, then(&e1, &e2));
    }

    #[test]
    fn catalan_counts() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), [1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(NdpfFunction::enumerate(2), vec![f(&[1, 1]), f(&[1, 2])]);
        for n in 1..=7 {
            let m = NdpfMonoid::new(n).unwrap();
            assert_eq!(m.size() as u64, catalan(n));
            assert_eq!(m.idempotents().len(), 1 << (n - 1));
        }
    }

    #[test]
    fn quotient_map_is_a_surjective_morphism() {
        for n in 1..=6 {
            let h = HeckeMonoid::new(n).unwrap();
            let m = NdpfMonoid::new(n).unwrap();
            assert!(m.verify_quotient_map(&h).unwrap());
            let mut images = m.longest_element_images(&h).unwrap();
            images.sort_unstable();
            assert_eq!(images, m.idempotents());
        }
    }

    #[test]
    fn masked_words_are_idempotent() {
        let u = universal_word(3);
        let x = ndpf_masked_element(&u, &"++".parse().unwrap()).unwrap();
        assert_eq!(x.support_size(), 1);
        assert!(ndpf_masked_element(&u, &"+-".parse().unwrap()).unwrap().is_idempotent().unwrap());
        for n in 2..=6 {
            assert!(ndpf_masked_word_check(n).unwrap().is_empty(), "{n}");
        }
    }
}
