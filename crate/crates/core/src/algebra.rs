//! The 0-Hecke algebra `ℂH_0(S_N)` with exact integer coefficients.
//!
//! Elements are sparse combinations of monoid basis elements `π_σ`. Anything
//! that multiplies goes through a [`HeckeAlgebra`], which owns the
//! precomputed action tables for one `N`; everything else is a plain method
//! on [`AlgebraElement`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dense::{self, Coeff};
use crate::diagram::Sign;
use crate::error::{Error, Result};
use crate::lincomb::Combination;
use crate::monoid::HeckeMonoid;
use crate::perm::{check_generator, check_generator_set, check_same_size, longest_element};
use crate::perm::{GeneratorSet, Permutation, Word};

/// One generator factor of a product: `π_i` for [`Sign::Plus`] or
/// `π̄_i = 1 - π_i` for [`Sign::Minus`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Factor {
    pub generator: usize,
    pub sign: Sign,
}

impl Factor {
    pub fn pi(generator: usize) -> Self {
        Self { generator, sign: Sign::Plus }
    }

    pub fn pi_bar(generator: usize) -> Self {
        Self { generator, sign: Sign::Minus }
    }

    /// The image under `Ψ`.
    pub fn flipped(self) -> Self {
        Self { generator: self.generator, sign: self.sign.flip() }
    }

    /// The image under the diagram automorphism `i ↦ N-i`.
    pub fn dynkin_reverse(self, n: usize) -> Self {
        Self { generator: n - self.generator, sign: self.sign }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "π{}", self.generator),
            Sign::Minus => write!(f, "π̄{}", self.generator),
        }
    }
}

/// A sparse element of `ℂH_0(S_N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: Combination<Permutation>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Combination::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        Self { n: p.n(), terms: Combination::monomial(p) }
    }

    pub fn gen_pi(i: usize, n: usize) -> Result<Self> {
        check_generator(i, n)?;
        Ok(Self::basis(Permutation::identity(n).apply_pi_right(i)?))
    }

    pub fn gen_pibar(i: usize, n: usize) -> Result<Self> {
        Self::one(n).sub(&Self::gen_pi(i, n)?)
    }

    /// Build from `(permutation, coefficient)` pairs; every permutation must have size `n`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, BigInt)>) -> Result<Self> {
        let mut out = Combination::new();
        for (p, c) in terms {
            check_same_size(n, p.n())?;
            out.add_term(p, c);
        }
        Ok(Self { n, terms: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &Combination<Permutation> {
        &self.terms
    }

    pub fn coeff(&self, p: &Permutation) -> BigInt {
        self.terms.coeff(p)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n, other.n)?;
        Ok(Self { n: self.n, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same_size(self.n, other.n)?;
        Ok(Self { n: self.n, terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { n: self.n, terms: self.terms.scale(c) }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Diagram automorphism `π_i ↦ π_{N-i}`, i.e. `σ ↦ w_0 σ w_0` on basis keys.
    pub fn dynkin_reverse(&self) -> Self {
        Self { n: self.n, terms: self.terms.map_keys(Permutation::dynkin_reverse) }
    }

    /// `Φ^+`: the last generator `π_{N-1}` goes to `1`, landing in `ℂH_0(S_{N-1})`.
    ///
    /// On a basis element the letter `N-1` is deleted from a reduced word and
    /// the remaining generators are multiplied in the smaller monoid.
    pub fn phi_plus(&self) -> Result<Self> {
        let m = self.evaluation_target()?;
        let mut out = Combination::new();
        for (p, c) in self.terms.iter() {
            let letters: Vec<usize> = p.reduced_word().letters().iter().copied().filter(|&i| i != m).collect();
            out.add_term(Word::new(letters, m)?.to_permutation(), c.clone());
        }
        Ok(Self { n: m, terms: out })
    }

    /// `Φ^-`: the last generator `π_{N-1}` goes to `0`.
    pub fn phi_minus(&self) -> Result<Self> {
        let m = self.evaluation_target()?;
        let mut out = Combination::new();
        for (p, c) in self.terms.iter() {
            if p.content().contains(m) {
                continue;
            }
            // σ fixes N, so it restricts to S_{N-1}
            out.add_term(Permutation::new(p.entries()[..m].to_vec())?, c.clone());
        }
        Ok(Self { n: m, terms: out })
    }

    fn evaluation_target(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::UnsupportedSize { n: self.n, min: 2, max: crate::perm::MAX_DEGREE });
        }
        Ok(self.n - 1)
    }

    /// The one-dimensional representation `λ_J`: `π_i ↦ 0` for `i ∈ J`, `π_i ↦ 1` otherwise.
    pub fn lambda_eval(&self, set: GeneratorSet) -> Result<BigInt> {
        check_generator_set(set, self.n)?;
        Ok(self.terms.iter().filter(|(p, _)| p.content().intersection(set).is_empty()).map(|(_, c)| c.clone()).sum())
    }

    pub fn coeff_range(&self) -> Option<(BigInt, BigInt)> {
        self.terms.coeff_range()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing an element cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H0(S{}){:?}", self.n, self.terms)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Permutation,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| TermRepr { perm: p.clone(), coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            terms.push((t.perm, c));
        }
        AlgebraElement::from_terms(repr.n, terms).map_err(D::Error::custom)
    }
}

/// A computation on dense coefficient vectors that can run at any precision.
trait DenseOp {
    fn run<C: Coeff>(&self, m: &HeckeMonoid, inputs: &[Vec<C>]) -> Option<Vec<C>>;
}

struct Product;

impl DenseOp for Product {
    fn run<C: Coeff>(&self, m: &HeckeMonoid, inputs: &[Vec<C>]) -> Option<Vec<C>> {
        dense::multiply(m, &inputs[0], &inputs[1])
    }
}

struct RightFactors<'a>(&'a [Factor]);

impl DenseOp for RightFactors<'_> {
    fn run<C: Coeff>(&self, m: &HeckeMonoid, inputs: &[Vec<C>]) -> Option<Vec<C>> {
        dense::mul_factors(m, &inputs[0], self.0)
    }
}

struct LeftFactors<'a>(&'a [Factor]);

impl DenseOp for LeftFactors<'_> {
    fn run<C: Coeff>(&self, m: &HeckeMonoid, inputs: &[Vec<C>]) -> Option<Vec<C>> {
        let mut y = inputs[0].clone();
        for &f in self.0.iter().rev() {
            y = dense::left_mul_factor(m, f, &y)?;
        }
        Some(y)
    }
}

struct Psi;

impl DenseOp for Psi {
    fn run<C: Coeff>(&self, m: &HeckeMonoid, inputs: &[Vec<C>]) -> Option<Vec<C>> {
        let x = &inputs[0];
        let mut out = vec![C::zero_value(); x.len()];
        for (s, c) in x.iter().enumerate() {
            if c.is_zero_value() {
                continue;
            }
            let mut v = vec![C::zero_value(); x.len()];
            v[m.identity_index()] = c.clone();
            for &i in m.word(s).letters() {
                v = dense::mul_factor(m, &v, Factor::pi_bar(i))?;
            }
            for (o, t) in out.iter_mut().zip(&v) {
                o.add_assign(t)?;
            }
        }
        Some(out)
    }
}

/// Stable power of `x` under repeated multiplication by `step`.
enum Powering<C> {
    Fixpoint(Vec<C>, usize),
    Exhausted,
}

trait StepOp {
    fn step<C: Coeff>(&self, m: &HeckeMonoid, current: &[C], base: &[C]) -> Option<Vec<C>>;
}

impl StepOp for Product {
    fn step<C: Coeff>(&self, m: &HeckeMonoid, current: &[C], base: &[C]) -> Option<Vec<C>> {
        dense::multiply(m, current, base)
    }
}

impl StepOp for RightFactors<'_> {
    fn step<C: Coeff>(&self, m: &HeckeMonoid, current: &[C], _base: &[C]) -> Option<Vec<C>> {
        dense::mul_factors(m, current, self.0)
    }
}

fn power_loop<C: Coeff>(m: &HeckeMonoid, base: Vec<C>, op: &impl StepOp, cap: usize) -> Option<Powering<C>> {
    let mut current = base.clone();
    for k in 1..=cap {
        let next = op.step(m, &current, &base)?;
        if next == current {
            return Some(Powering::Fixpoint(current, k));
        }
        current = next;
    }
    Some(Powering::Exhausted)
}

/// `ℂH_0(S_N)` for one fixed `N`, holding the shared monoid tables.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    monoid: Arc<HeckeMonoid>,
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self { monoid: Arc::new(HeckeMonoid::new(n)?) })
    }

    pub fn from_monoid(monoid: Arc<HeckeMonoid>) -> Self {
        Self { monoid }
    }

    pub fn monoid(&self) -> &HeckeMonoid {
        &self.monoid
    }

    pub fn n(&self) -> usize {
        self.monoid.n()
    }

    /// `N!`, the dimension of the algebra.
    pub fn dimension(&self) -> usize {
        self.monoid.size()
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.n())
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.n())
    }

    pub fn pi(&self, i: usize) -> Result<AlgebraElement> {
        AlgebraElement::gen_pi(i, self.n())
    }

    pub fn pibar(&self, i: usize) -> Result<AlgebraElement> {
        AlgebraElement::gen_pibar(i, self.n())
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        check_same_size(self.n(), x.n)
    }

    fn check_factors(&self, factors: &[Factor]) -> Result<()> {
        factors.iter().try_for_each(|f| check_generator(f.generator, self.n()))
    }

    pub(crate) fn to_dense<C: Coeff>(&self, x: &AlgebraElement) -> Option<Vec<C>> {
        let mut v = vec![C::zero_value(); self.dimension()];
        for (p, c) in x.terms.iter() {
            let k = self.monoid.index_of(p).expect("sizes checked");
            v[k] = C::from_big(c)?;
        }
        Some(v)
    }

    pub(crate) fn element_from_dense<C: Coeff>(&self, v: &[C]) -> AlgebraElement {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_value())
            .map(|(k, c)| (self.monoid.element(k).clone(), c.to_big()))
            .collect();
        AlgebraElement { n: self.n(), terms }
    }

    fn eval(&self, op: &impl DenseOp, inputs: &[&AlgebraElement]) -> AlgebraElement {
        let small: Option<Vec<Vec<i64>>> = inputs.iter().map(|x| self.to_dense(x)).collect();
        if let Some(result) = small.and_then(|xs| op.run(&self.monoid, &xs)) {
            return self.element_from_dense(&result);
        }
        let big: Vec<Vec<BigInt>> = inputs.iter().map(|x| self.to_dense(x).expect("BigInt always converts")).collect();
        let result = op.run(&self.monoid, &big).expect("BigInt arithmetic cannot overflow");
        self.element_from_dense(&result)
    }

    /// Bilinear extension of the monoid product.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.eval(&Product, &[a, b]))
    }

    /// `x·f_1·f_2···f_k`.
    pub fn mul_factors(&self, x: &AlgebraElement, factors: &[Factor]) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check_factors(factors)?;
        Ok(self.eval(&RightFactors(factors), &[x]))
    }

    /// `f_1·f_2···f_k·x`.
    pub fn left_mul_factors(&self, factors: &[Factor], x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check_factors(factors)?;
        Ok(self.eval(&LeftFactors(factors), &[x]))
    }

    /// The product `f_1·f_2···f_k` expanded in the `π_σ` basis.
    pub fn factor_product(&self, factors: &[Factor]) -> Result<AlgebraElement> {
        self.mul_factors(&self.one(), factors)
    }

    /// `w_J^+`, the longest element of the parabolic submonoid on `J`.
    pub fn w_plus(&self, set: GeneratorSet) -> Result<AlgebraElement> {
        Ok(AlgebraElement::basis(longest_element(set, self.n())?))
    }

    /// `w_J^- = Ψ(w_J^+)`, the same reduced word in the `1 - π_i` generators.
    pub fn w_minus(&self, set: GeneratorSet) -> Result<AlgebraElement> {
        let word = longest_element(set, self.n())?.reduced_word();
        let factors: Vec<Factor> = word.letters().iter().map(|&i| Factor::pi_bar(i)).collect();
        self.factor_product(&factors)
    }

    /// `Σ_{w ∈ W_J} (-1)^{l(w)} π_w`, summed over the parabolic submonoid.
    pub fn parabolic_alternating_sum(&self, set: GeneratorSet) -> Result<AlgebraElement> {
        check_generator_set(set, self.n())?;
        let m = &self.monoid;
        let terms = (0..m.size()).filter(|&k| m.content(k).is_subset(set)).map(|k| {
            let sign = if m.length(k).is_multiple_of(2) { 1 } else { -1 };
            (m.element(k).clone(), BigInt::from(sign))
        });
        AlgebraElement::from_terms(self.n(), terms)
    }

    /// The automorphism `Ψ: π_i ↦ 1 - π_i`.
    pub fn psi(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.eval(&Psi, &[x]))
    }

    pub fn power(&self, x: &AlgebraElement, k: u32) -> Result<AlgebraElement> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.multiply(&out, x)?;
        }
        Ok(out)
    }

    pub fn is_idempotent(&self, x: &AlgebraElement) -> Result<bool> {
        Ok(self.multiply(x, x)? == *x)
    }

    /// The first power `x^k` with `x^k = x^{k+1}`, together with that
    /// minimal `k` (the nilpotence degree).
    pub fn power_to_fixpoint(&self, x: &AlgebraElement, cap: usize) -> Result<(AlgebraElement, usize)> {
        self.check(x)?;
        self.powering(x, &Product, cap)
    }

    /// [`power_to_fixpoint`](Self::power_to_fixpoint) for an element given
    /// as a product of generator factors; each power costs one pass per factor.
    pub fn power_factors_to_fixpoint(&self, factors: &[Factor], cap: usize) -> Result<(AlgebraElement, usize)> {
        let base = self.factor_product(factors)?;
        self.powering(&base, &RightFactors(factors), cap)
    }

    fn powering(&self, base: &AlgebraElement, op: &impl StepOp, cap: usize) -> Result<(AlgebraElement, usize)> {
        let m = &self.monoid;
        let small = self.to_dense::<i64>(base).and_then(|v| power_loop(m, v, op, cap));
        let outcome = match small {
            Some(Powering::Fixpoint(v, k)) => Some((self.element_from_dense(&v), k)),
            Some(Powering::Exhausted) => None,
            None => {
                let v = self.to_dense::<BigInt>(base).expect("BigInt always converts");
                match power_loop(m, v, op, cap).expect("BigInt arithmetic cannot overflow") {
                    Powering::Fixpoint(v, k) => Some((self.element_from_dense(&v), k)),
                    Powering::Exhausted => None,
                }
            }
        };
        outcome.ok_or(Error::NotDemipotent { cap, diagram: None })
    }
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;

    fn p(v: &[u8]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn elt(n: usize, terms: &[(&[u8], i64)]) -> AlgebraElement {
        AlgebraElement::from_terms(n, terms.iter().map(|(v, c)| (p(v), BigInt::from(*c)))).unwrap()
    }

    fn set(v: &[usize]) -> GeneratorSet {
        v.iter().copied().collect()
    }

    #[test]
    fn generators() {
        assert_eq!(AlgebraElement::gen_pi(1, 2).unwrap(), elt(2, &[(&[2, 1], 1)]));
        assert_eq!(AlgebraElement::gen_pibar(1, 2).unwrap(), elt(2, &[(&[1, 2], 1), (&[2, 1], -1)]));
        let sum = AlgebraElement::gen_pi(1, 3).unwrap().add(&AlgebraElement::gen_pibar(1, 3).unwrap()).unwrap();
        assert_eq!(sum, AlgebraElement::one(3));
        assert!(AlgebraElement::gen_pi(3, 3).is_err());
        assert!(AlgebraElement::gen_pibar(0, 3).is_err());
    }

    #[test]
    fn addition_and_scaling() {
        let x = AlgebraElement::gen_pi(1, 3).unwrap();
        assert_eq!(x.add(&AlgebraElement::zero(3)).unwrap(), x);
        assert!(x.add(&x.scale(&BigInt::from(-1))).unwrap().is_zero());
        let two = x.add(&AlgebraElement::gen_pi(2, 3).unwrap()).unwrap();
        assert_eq!(two.support_size(), 2);
        assert!(matches!(x.add(&AlgebraElement::zero(4)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn multiplication() {
        let h = HeckeAlgebra::new(3).unwrap();
        let x = elt(3, &[(&[2, 3, 1], 3), (&[1, 3, 2], -2)]);
        assert_eq!(h.multiply(&h.one(), &x).unwrap(), x);
        assert_eq!(h.multiply(&x, &h.one()).unwrap(), x);
        assert!(h.multiply(&h.pi(1).unwrap(), &h.pibar(1).unwrap()).unwrap().is_zero());
        assert_eq!(h.multiply(&h.pi(1).unwrap(), &h.pi(2).unwrap()).unwrap(), elt(3, &[(&[2, 3, 1], 1)]));
        assert!(h.multiply(&x, &AlgebraElement::one(4)).is_err());
    }

    #[test]
    fn longest_elements() {
        let h = HeckeAlgebra::new(3).unwrap();
        assert_eq!(h.w_minus(GeneratorSet::empty()).unwrap(), h.one());
        let expected = elt(
            3,
            &[(&[1, 2, 3], 1), (&[2, 1, 3], -1), (&[1, 3, 2], -1), (&[2, 3, 1], 1), (&[3, 1, 2], 1), (&[3, 2, 1], -1)],
        );
        assert_eq!(h.w_minus(set(&[1, 2])).unwrap(), expected);
        assert_eq!(h.w_plus(set(&[1, 2])).unwrap(), elt(3, &[(&[3, 2, 1], 1)]));
        assert_eq!(h.parabolic_alternating_sum(set(&[1, 2])).unwrap(), expected);
        assert!(h.w_plus(set(&[3])).is_err());
    }

    #[test]
    fn psi_examples() {
        let h = HeckeAlgebra::new(3).unwrap();
        assert_eq!(h.psi(&h.one()).unwrap(), h.one());
        assert_eq!(h.psi(&h.pi(1).unwrap()).unwrap(), h.pibar(1).unwrap());
        let full = set(&[1, 2]);
        assert_eq!(h.psi(&h.w_plus(full).unwrap()).unwrap(), h.w_minus(full).unwrap());
    }

    #[test]
    fn dynkin_reverse_examples() {
        let one = AlgebraElement::one(3);
        assert_eq!(one.dynkin_reverse(), one);
        let pi1 = AlgebraElement::gen_pi(1, 3).unwrap();
        assert_eq!(pi1.dynkin_reverse(), AlgebraElement::gen_pi(2, 3).unwrap());
        // π_121 and π_212 are the same basis element
        let w0 = elt(3, &[(&[3, 2, 1], 1)]);
        assert_eq!(w0.dynkin_reverse(), w0);
    }

    #[test]
    fn evaluation_maps() {
        for n in 2..=5 {
            let last = AlgebraElement::gen_pi(n - 1, n).unwrap();
            assert_eq!(last.phi_plus().unwrap(), AlgebraElement::one(n - 1));
            assert!(last.phi_minus().unwrap().is_zero());
        }
        assert!(AlgebraElement::one(1).phi_plus().is_err());
    }

    #[test]
    fn lambda_examples() {
        let h = HeckeAlgebra::new(3).unwrap();
        assert_eq!(h.one().lambda_eval(set(&[1])).unwrap(), BigInt::one());
        assert_eq!(h.pi(1).unwrap().lambda_eval(set(&[1])).unwrap(), BigInt::zero());
        let wm = h.w_minus(set(&[1, 2])).unwrap();
        assert_eq!(wm.lambda_eval(GeneratorSet::empty()).unwrap(), BigInt::zero());
        assert!(h.one().lambda_eval(set(&[3])).is_err());
    }

    #[test]
    fn powering() {
        let h = HeckeAlgebra::new(3).unwrap();
        assert_eq!(h.power_to_fixpoint(&h.one(), 3).unwrap(), (h.one(), 1));
        // π_1 - π_2 is not demipotent: its powers alternate forever
        let x = h.pi(1).unwrap().sub(&h.pi(2).unwrap()).unwrap();
        assert!(matches!(h.power_to_fixpoint(&x, 4), Err(Error::NotDemipotent { cap: 4, .. })));
    }

    #[test]
    fn bigint_fallback_matches() {
        // coefficients beyond i64 force the arbitrary-precision path
        let h = HeckeAlgebra::new(3).unwrap();
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let x = h.pi(1).unwrap().scale(&big).add(&h.one()).unwrap();
        let sq = h.multiply(&x, &x).unwrap();
        // (1 + cπ)^2 = 1 + (2c + c^2)π
        let c2 = &big * &big + &big * 2;
        assert_eq!(sq, h.one().add(&h.pi(1).unwrap().scale(&c2)).unwrap());
    }

    #[test]
    fn json_layout() {
        let x = elt(2, &[(&[2, 1], -1), (&[1, 2], 1)]);
        assert_eq!(x.to_json(), r#"{"n":2,"terms":[{"perm":[1,2],"coeff":"1"},{"perm":[2,1],"coeff":"-1"}]}"#);
        assert_eq!(AlgebraElement::from_json(&x.to_json()).unwrap(), x);
        assert!(AlgebraElement::from_json(r#"{"n":3,"terms":[{"perm":[2,1],"coeff":"1"}]}"#).is_err());
        assert!(AlgebraElement::from_json(r#"{"n":2,"terms":[{"perm":[2,1],"coeff":"x"}]}"#).is_err());
    }
}
