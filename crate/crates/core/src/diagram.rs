//! Signed Dynkin diagrams and the demipotents built from them.
//!
//! A signed diagram `D` for `S_N` puts `+` or `-` on each node `1..N-1`.
//! Grouping maximal runs of equal signs gives blocks `P_1, .., P_m`; with
//! `w_P^+` the longest parabolic element in the `π_i` and `w_P^-` the same
//! word in the `1 - π_i`,
//!
//! ```text
//! L_D = w_{P_1}^{s_1} ··· w_{P_m}^{s_m},   R_D = w_{P_m}^{s_m} ··· w_{P_1}^{s_1},   C_D = L_D·R_D.
//! ```
//!
//! `C_D` is demipotent and its stable power `I_D` is the idempotent attached
//! to `D`. The opposite family is the image of the standard one under the
//! diagram automorphism `i ↦ N-i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Factor, HeckeAlgebra};
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which orientation of the Dynkin diagram the construction reads from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Standard,
    Opposite,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Standard => "standard",
            Orientation::Opposite => "opposite",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A string of signs, node 1 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedDiagram(Vec<Sign>);

impl SignedDiagram {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn uniform(nodes: usize, sign: Sign) -> Self {
        Self(vec![sign; nodes])
    }

    /// All `2^nodes` diagrams, ordered by the binary value of the sign
    /// string with `+ = 0` and node 1 most significant.
    pub fn all(nodes: usize) -> impl Iterator<Item = Self> {
        (0u64..1 << nodes).map(move |bits| {
            Self((0..nodes).map(|k| if bits >> (nodes - 1 - k) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect())
        })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn nodes(&self) -> usize {
        self.0.len()
    }

    /// The `N` this diagram naturally belongs to.
    pub fn n(&self) -> usize {
        self.0.len() + 1
    }

    /// Sign of node `i` (1-based).
    pub fn sign(&self, i: usize) -> Sign {
        self.0[i - 1]
    }

    pub fn plus_set(&self) -> GeneratorSet {
        self.nodes_with(Sign::Plus)
    }

    pub fn minus_set(&self) -> GeneratorSet {
        self.nodes_with(Sign::Minus)
    }

    fn nodes_with(&self, sign: Sign) -> GeneratorSet {
        (1..=self.nodes()).filter(|&i| self.sign(i) == sign).collect()
    }

    /// `D̂`: every sign flipped.
    pub fn flipped(&self) -> Self {
        Self(self.0.iter().map(|s| s.flip()).collect())
    }

    /// `D+` or `D-`.
    pub fn child(&self, sign: Sign) -> Self {
        let mut signs = self.0.clone();
        signs.push(sign);
        Self(signs)
    }

    /// The diagram with the last sign flipped.
    pub fn sibling(&self) -> Option<Self> {
        let mut signs = self.0.clone();
        let last = signs.last_mut()?;
        *last = last.flip();
        Some(Self(signs))
    }

    /// The first `k` nodes.
    pub fn prefix(&self, k: usize) -> Self {
        Self(self.0[..k].to_vec())
    }

    pub fn sign_changes(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Maximal runs of equal signs.
    pub fn blocks(&self) -> SignBlockComposition {
        let mut blocks: Vec<SignBlock> = Vec::new();
        for (k, &sign) in self.0.iter().enumerate() {
            let node = k + 1;
            match blocks.last_mut() {
                Some(b) if b.sign == sign => b.end = node,
                _ => blocks.push(SignBlock { start: node, end: node, sign }),
            }
        }
        SignBlockComposition(blocks)
    }
}

impl FromStr for SignedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::InvalidDiagram(format!("unexpected character {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl fmt::Debug for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for SignedDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A run of consecutive nodes `start..=end` carrying one sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignBlock {
    pub start: usize,
    pub end: usize,
    pub sign: Sign,
}

impl SignBlock {
    pub fn generators(&self) -> GeneratorSet {
        (self.start..=self.end).collect()
    }

    /// `w_P^±` as generator factors, spelled `(a..b)(a..b-1)..(a)` for the
    /// block `{a..b}`.
    pub fn longest_factors(&self) -> Vec<Factor> {
        (self.start..=self.end)
            .rev()
            .flat_map(|top| (self.start..=top).map(|i| Factor { generator: i, sign: self.sign }))
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignBlockComposition(Vec<SignBlock>);

impl SignBlockComposition {
    pub fn blocks(&self) -> &[SignBlock] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `L_D` as generator factors.
pub fn left_factors(d: &SignedDiagram) -> Vec<Factor> {
    d.blocks().blocks().iter().flat_map(SignBlock::longest_factors).collect()
}

/// `R_D` as generator factors.
pub fn right_factors(d: &SignedDiagram) -> Vec<Factor> {
    d.blocks().blocks().iter().rev().flat_map(SignBlock::longest_factors).collect()
}

/// `C_D = L_D·R_D` as a product of generator factors.
pub fn demipotent_factors(d: &SignedDiagram) -> Vec<Factor> {
    let mut f = left_factors(d);
    f.extend(right_factors(d));
    f
}

/// The demipotent for the reversed Dynkin diagram in `H_0(S_n)`, reading
/// node `i` of `D` as generator `n-i`. For a full diagram this equals
/// `R_E·L_E` with `E` the reversed sign string.
pub fn opposite_factors(d: &SignedDiagram, n: usize) -> Vec<Factor> {
    demipotent_factors(d).into_iter().map(|f| f.dynkin_reverse(n)).collect()
}

/// The factor word of the demipotent of `D` inside `H_0(S_n)`.
pub fn oriented_factors(d: &SignedDiagram, orientation: Orientation, n: usize) -> Vec<Factor> {
    match orientation {
        Orientation::Standard => demipotent_factors(d),
        Orientation::Opposite => opposite_factors(d, n),
    }
}

fn check_fits(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<()> {
    if d.nodes() + 1 > alg.n() {
        return Err(Error::InvalidDiagram(format!(
            "diagram {d} has {} nodes but H_0(S_{}) has only {}",
            d.nodes(),
            alg.n(),
            alg.n() - 1
        )));
    }
    Ok(())
}

/// `C_D`, embedded in `alg` when `D` has fewer than `N-1` nodes.
pub fn demipotent(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<AlgebraElement> {
    oriented_demipotent(alg, d, Orientation::Standard)
}

/// The opposite-orientation demipotent of `D`.
pub fn opposite_demipotent(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<AlgebraElement> {
    oriented_demipotent(alg, d, Orientation::Opposite)
}

pub fn oriented_demipotent(alg: &HeckeAlgebra, d: &SignedDiagram, orientation: Orientation) -> Result<AlgebraElement> {
    check_fits(alg, d)?;
    alg.factor_product(&oriented_factors(d, orientation, alg.n()))
}

/// The children `(D+, D-)`, after checking `C_{D+} + C_{D-} = C_D` in `alg`.
pub fn branch_children(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<(SignedDiagram, SignedDiagram)> {
    let plus = d.child(Sign::Plus);
    let minus = d.child(Sign::Minus);
    check_fits(alg, &plus)?;
    let sum = demipotent(alg, &plus)?.add(&demipotent(alg, &minus)?)?;
    if sum != demipotent(alg, d)? {
        return Err(Error::BranchSumViolation { diagram: d.to_string() });
    }
    Ok((plus, minus))
}

/// The idempotent `I_D` together with the nilpotence degree of its demipotent.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiagramIdempotent {
    pub diagram: SignedDiagram,
    pub degree: usize,
    pub orientation: Orientation,
    #[serde(flatten)]
    pub element: AlgebraElement,
}

/// `I_D`: the stable power of the demipotent, found by powering until
/// `C^k = C^{k+1}` with `k ≤ N`.
pub fn idempotent(alg: &HeckeAlgebra, d: &SignedDiagram, orientation: Orientation) -> Result<DiagramIdempotent> {
    check_fits(alg, d)?;
    let factors = oriented_factors(d, orientation, alg.n());
    let (element, degree) = alg.power_factors_to_fixpoint(&factors, alg.n()).map_err(|e| with_diagram(e, d))?;
    Ok(DiagramIdempotent { diagram: d.clone(), degree, orientation, element })
}

/// Every idempotent for `alg`, in diagram order.
pub fn all_idempotents(alg: &HeckeAlgebra, orientation: Orientation) -> Result<Vec<DiagramIdempotent>> {
    use rayon::prelude::*;
    let diagrams: Vec<SignedDiagram> = SignedDiagram::all(alg.n() - 1).collect();
    diagrams.par_iter().map(|d| idempotent(alg, d, orientation)).collect()
}

fn with_diagram(e: Error, d: &SignedDiagram) -> Error {
    match e {
        Error::NotDemipotent { cap, .. } => Error::NotDemipotent { cap, diagram: Some(d.to_string()) },
        other => other,
    }
}

/// The minimal `k` with `C_D^k = C_D^{k+1}`.
pub fn nilpotence_degree(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<usize> {
    Ok(idempotent(alg, d, Orientation::Standard)?.degree)
}

/// `C_{D_1}·C_{D_2}···C_{D_{N-1}}` over the prefixes of `D`, each embedded
/// in `alg` with the given orientation.
pub fn prefix_product(alg: &HeckeAlgebra, d: &SignedDiagram, orientation: Orientation) -> Result<AlgebraElement> {
    check_fits(alg, d)?;
    let factors: Vec<Factor> =
        (1..=d.nodes()).flat_map(|k| oriented_factors(&d.prefix(k), orientation, alg.n())).collect();
    alg.factor_product(&factors)
}

/// Whether `D` has exactly one sign change or is the sibling of such a diagram.
pub fn is_single_change_or_sibling(d: &SignedDiagram) -> bool {
    d.sign_changes() == 1 || d.sibling().is_some_and(|s| s.sign_changes() == 1)
}

/// Upper bound on the nilpotence degree: `nodes - k + 1`, where `k` is the
/// length of the longest prefix that is constant, has a single sign change,
/// or is the sibling of a single-change diagram.
pub fn degree_bound(d: &SignedDiagram) -> usize {
    let idempotent_prefix = |e: &SignedDiagram| e.sign_changes() == 0 || is_single_change_or_sibling(e);
    let k = (1..=d.nodes()).rev().find(|&k| idempotent_prefix(&d.prefix(k))).unwrap_or(0);
    d.nodes() - k + 1
}

/// `u_N = (1, 2, .., N-1, .., 2, 1)`.
pub fn universal_word(n: usize) -> Word {
    let up = 1..n;
    let down = (1..n.saturating_sub(1)).rev();
    Word::new(up.chain(down).collect(), n).expect("letters in range")
}

/// The masked word `w^D`: each letter `i` becomes `π_i` or `1 - π_i` by the sign of node `i`.
pub fn masked_factors(w: &Word, d: &SignedDiagram) -> Result<Vec<Factor>> {
    w.letters()
        .iter()
        .map(|&i| {
            if i > d.nodes() {
                return Err(Error::InvalidDiagram(format!("diagram {d} has no node {i}")));
            }
            Ok(Factor { generator: i, sign: d.sign(i) })
        })
        .collect()
}

pub fn masked_element(alg: &HeckeAlgebra, w: &Word, d: &SignedDiagram) -> Result<AlgebraElement> {
    alg.factor_product(&masked_factors(w, d)?)
}

/// Stable powers of every masked word `w^D`, in diagram order. Fails with
/// the offending diagram if some `w^D` is not demipotent within `cap` powers.
pub fn masked_idempotents(alg: &HeckeAlgebra, w: &Word, cap: usize) -> Result<Vec<DiagramIdempotent>> {
    SignedDiagram::all(alg.n() - 1)
        .map(|d| {
            let factors = masked_factors(w, &d)?;
            let (element, degree) = alg.power_factors_to_fixpoint(&factors, cap).map_err(|e| with_diagram(e, &d))?;
            Ok(DiagramIdempotent { diagram: d, degree, orientation: Orientation::Standard, element })
        })
        .collect()
}

/// `w` contains every letter and `w^D` is demipotent for every diagram.
pub fn is_universal(alg: &HeckeAlgebra, w: &Word, cap: usize) -> Result<bool> {
    if w.content() != GeneratorSet::full(alg.n()) {
        return Ok(false);
    }
    match masked_idempotents(alg, w, cap) {
        Ok(_) => Ok(true),
        Err(Error::NotDemipotent { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn d(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    /// Expand a combination of `π_w` words with integer coefficients.
    fn words(alg: &HeckeAlgebra, terms: &[(&[usize], i64)]) -> AlgebraElement {
        let n = alg.n();
        AlgebraElement::from_terms(
            n,
            terms.iter().map(|(w, c)| (Word::new(w.to_vec(), n).unwrap().to_permutation(), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn parses_and_formats() {
        assert_eq!(d("+-+").to_string(), "+-+");
        assert!("+x".parse::<SignedDiagram>().is_err());
        assert_eq!(d("").nodes(), 0);
        let all: Vec<String> = SignedDiagram::all(2).map(|d| d.to_string()).collect();
        assert_eq!(all, ["++", "+-", "-+", "--"]);
    }

    #[test]
    fn blocks_are_runs_by_sign() {
        let b = d("++---+-").blocks();
        let spans: Vec<(usize, usize, Sign)> = b.blocks().iter().map(|b| (b.start, b.end, b.sign)).collect();
        assert_eq!(spans, [(1, 2, Sign::Plus), (3, 5, Sign::Minus), (6, 6, Sign::Plus), (7, 7, Sign::Minus)]);
        assert_eq!(d("+").blocks().blocks(), &[SignBlock { start: 1, end: 1, sign: Sign::Plus }]);
        assert_eq!(d("--").blocks().blocks(), &[SignBlock { start: 1, end: 2, sign: Sign::Minus }]);
    }

    #[test]
    fn long_diagram_factor_word() {
        // π⁺_121 π⁻_345343 π⁺_6 π⁻_7 π⁺_6 π⁻_345343 π⁺_121
        let f: String = demipotent_factors(&d("++---+-"))
            .iter()
            .map(|f| format!("{}{}", if f.sign == Sign::Plus { "+" } else { "-" }, f.generator))
            .collect();
        assert_eq!(f, "+1+2+1-3-4-5-3-4-3+6-7-7+6-3-4-5-3-4-3+1+2+1");
    }

    #[test]
    fn n3_demipotents() {
        let h = HeckeAlgebra::new(3).unwrap();
        assert_eq!(demipotent(&h, &d("++")).unwrap(), words(&h, &[(&[1, 2, 1], 1)]));
        assert_eq!(
            demipotent(&h, &d("-+")).unwrap(),
            words(&h, &[(&[2], 1), (&[1, 2], -1), (&[2, 1], -1), (&[1, 2, 1], 1)])
        );
        assert_eq!(opposite_demipotent(&h, &d("+-")).unwrap(), words(&h, &[(&[2], 1), (&[2, 1, 2], -1)]));
        assert!(demipotent(&h, &d("+++")).is_err());
    }

    #[test]
    fn branching() {
        let h2 = HeckeAlgebra::new(2).unwrap();
        let (p, m) = branch_children(&h2, &d("")).unwrap();
        assert_eq!((p, m), (d("+"), d("-")));
        let h3 = HeckeAlgebra::new(3).unwrap();
        branch_children(&h3, &d("+")).unwrap();
        assert_eq!(demipotent(&h3, &d("+")).unwrap(), h3.pi(1).unwrap());
        assert!(branch_children(&h3, &d("++")).is_err());
    }

    #[test]
    fn idempotent_examples() {
        let h = HeckeAlgebra::new(3).unwrap();
        let i = idempotent(&h, &d("++"), Orientation::Standard).unwrap();
        assert_eq!(i.degree, 1);
        assert_eq!(i.element, demipotent(&h, &d("++")).unwrap());
        for n in 2..=5 {
            let h = HeckeAlgebra::new(n).unwrap();
            let minus = SignedDiagram::uniform(n - 1, Sign::Minus);
            let i = idempotent(&h, &minus, Orientation::Standard).unwrap();
            assert_eq!(i.element, h.w_minus(GeneratorSet::full(n)).unwrap());
            assert_eq!(i.degree, 1);
        }
        let h5 = HeckeAlgebra::new(5).unwrap();
        let i = idempotent(&h5, &d("+-++"), Orientation::Standard).unwrap();
        assert_eq!(i.degree, 2);
        let c = demipotent(&h5, &d("+-++")).unwrap();
        assert_eq!(i.element, h5.power(&c, 2).unwrap());
        assert_ne!(i.element, c);
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(degree_bound(&d("+-")), 1);
        assert_eq!(degree_bound(&d("+-++")), 2);
        assert_eq!(degree_bound(&d("++-+++")), 3);
        assert_eq!(degree_bound(&d("+")), 1);
        assert_eq!(degree_bound(&d("")), 1);
        assert!(is_single_change_or_sibling(&d("+++")));
        assert!(!is_single_change_or_sibling(&d("+-++")));
    }

    #[test]
    fn masked_words() {
        let w = Word::new(vec![1, 2, 1, 3, 1, 2], 4).unwrap();
        let f = masked_factors(&w, &d("+-+")).unwrap();
        let expected =
            [Factor::pi(1), Factor::pi_bar(2), Factor::pi(1), Factor::pi(3), Factor::pi(1), Factor::pi_bar(2)];
        assert_eq!(f, expected);
        assert_eq!(universal_word(5).letters(), &[1, 2, 3, 4, 3, 2, 1]);
        assert_eq!(universal_word(2).letters(), &[1]);
        for n in 2..=5 {
            let h = HeckeAlgebra::new(n).unwrap();
            let plus = SignedDiagram::uniform(n - 1, Sign::Plus);
            let u = universal_word(n);
            let x = masked_element(&h, &u, &plus).unwrap();
            assert_eq!(x, AlgebraElement::basis(u.to_permutation()));
        }
        let h = HeckeAlgebra::new(3).unwrap();
        assert!(!is_universal(&h, &Word::new(vec![1, 1], 3).unwrap(), 3).unwrap());
    }

    #[test]
    fn idempotent_json_record() {
        let h = HeckeAlgebra::new(2).unwrap();
        let i = idempotent(&h, &d("+"), Orientation::Standard).unwrap();
        assert_eq!(
            serde_json::to_string(&i).unwrap(),
            r#"{"diagram":"+","degree":1,"orientation":"standard","n":2,"terms":[{"perm":[2,1],"coeff":"1"}]}"#
        );
    }
}
