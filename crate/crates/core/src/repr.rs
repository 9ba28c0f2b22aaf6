//! Global checks on the idempotent family and the representation-theoretic
//! numbers attached to it: ranks, descent classes, Norton ideals, the
//! radical and the one-dimensional characters.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{AlgebraElement, Factor, HeckeAlgebra};
use crate::diagram::{self, DiagramIdempotent, Orientation, SignedDiagram};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::monoid::HeckeMonoid;
use crate::perm::{check_generator_set, GeneratorSet, Permutation};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Self::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped => "skipped",
        }
    }
}

pub(crate) fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Dimensions of the two ideals generated by an idempotent `e`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct IdempotentRank {
    /// `dim H·e`, the trace of `y ↦ y·e`.
    pub left_ideal: usize,
    /// `dim e·H`, the trace of `y ↦ e·y`.
    pub right_ideal: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiagramRecord {
    pub diagram: SignedDiagram,
    pub degree: usize,
    pub support: usize,
    #[serde(serialize_with = "decimal")]
    pub min_coeff: BigInt,
    #[serde(serialize_with = "decimal")]
    pub max_coeff: BigInt,
    pub rank: IdempotentRank,
}

impl DiagramRecord {
    pub fn new(alg: &HeckeAlgebra, idem: &DiagramIdempotent) -> Self {
        let (min_coeff, max_coeff) = idem.element.coeff_range().unwrap_or_default();
        Self {
            diagram: idem.diagram.clone(),
            degree: idem.degree,
            support: idem.element.support_size(),
            min_coeff,
            max_coeff,
            rank: ranks_unchecked(alg, &idem.element),
        }
    }
}

/// Outcome of checking that the `I_D` form a complete orthogonal family.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub orientation: Orientation,
    pub records: Vec<DiagramRecord>,
    pub idempotent: CheckStatus,
    pub orthogonal: CheckStatus,
    pub sum_to_one: CheckStatus,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// One failed property: `check` is `"idempotent"`, `"orthogonal"` or `"sum-to-one"`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub detail: String,
}

impl Failure {
    fn new(check: &'static str, detail: String) -> Self {
        Self { check, detail }
    }
}

impl VerificationReport {
    pub fn failures_of<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.failures.iter().filter(move |f| f.check == check).map(|f| f.detail.as_str())
    }

    pub fn passed(&self) -> bool {
        !(self.idempotent.is_fail() || self.orthogonal.is_fail() || self.sum_to_one.is_fail())
    }
}

/// The factor word of `I_D = C_D^k`.
pub fn idempotent_factors(idem: &DiagramIdempotent) -> Vec<Factor> {
    diagram::oriented_factors(&idem.diagram, idem.orientation, idem.element.n()).repeat(idem.degree)
}

/// Checks `I_D² = I_D`, `I_D·I_E = 0` for `D ≠ E` in both orders and
/// `Σ_D I_D = 1`. With `fail_fast` the pairwise scan stops at the first
/// nonzero product; otherwise every failure is listed in diagram order.
pub fn verify_orthogonal_decomposition(
    alg: &HeckeAlgebra,
    orientation: Orientation,
    fail_fast: bool,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = alg.n();
    let mut failures = Vec::new();
    let idems = match diagram::all_idempotents(alg, orientation) {
        Ok(v) => v,
        Err(Error::NotDemipotent { cap, diagram }) => {
            let d = diagram.unwrap_or_default();
            return Ok(VerificationReport {
                n,
                orientation,
                records: Vec::new(),
                idempotent: CheckStatus::Fail,
                orthogonal: CheckStatus::Skipped,
                sum_to_one: CheckStatus::Skipped,
                failures: vec![Failure::new("idempotent", format!("C_{d} is not demipotent within {cap} powers"))],
                elapsed: start.elapsed(),
            });
        }
        Err(e) => return Err(e),
    };
    let words: Vec<Vec<Factor>> = idems.iter().map(idempotent_factors).collect();

    let bad_squares: Vec<Failure> = idems
        .par_iter()
        .zip(&words)
        .filter_map(|(idem, w)| match alg.mul_factors(&idem.element, w) {
            Ok(sq) if sq == idem.element => None,
            Ok(_) => Some(Failure::new("idempotent", format!("I_{} is not idempotent", idem.diagram))),
            Err(e) => Some(Failure::new("idempotent", format!("I_{}: {e}", idem.diagram))),
        })
        .collect();
    let idempotent = CheckStatus::from_bool(bad_squares.is_empty());
    failures.extend(bad_squares);

    let pairs: Vec<(usize, usize)> =
        (0..idems.len()).flat_map(|a| (0..idems.len()).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let check_pair = |&(a, b): &(usize, usize)| -> Option<Failure> {
        let detail = match alg.mul_factors(&idems[a].element, &words[b]) {
            Ok(p) if p.is_zero() => return None,
            Ok(p) => format!("I_{}·I_{} has {} nonzero terms", idems[a].diagram, idems[b].diagram, p.support_size()),
            Err(e) => format!("I_{}·I_{}: {e}", idems[a].diagram, idems[b].diagram),
        };
        Some(Failure::new("orthogonal", detail))
    };
    let bad_pairs: Vec<Failure> = if fail_fast {
        pairs.par_iter().find_map_any(check_pair).into_iter().collect()
    } else {
        pairs.par_iter().filter_map(check_pair).collect()
    };
    let orthogonal = CheckStatus::from_bool(bad_pairs.is_empty());
    failures.extend(bad_pairs);

    let mut sum = alg.zero();
    for idem in &idems {
        sum = sum.add(&idem.element)?;
    }
    let sum_to_one = CheckStatus::from_bool(sum == alg.one());
    if sum_to_one.is_fail() {
        let off = sum.sub(&alg.one())?.support_size();
        failures.push(Failure::new("sum-to-one", format!("sum of idempotents differs from 1 in {off} terms")));
    }

    let records = idems.par_iter().map(|idem| DiagramRecord::new(alg, idem)).collect();
    Ok(VerificationReport {
        n,
        orientation,
        records,
        idempotent,
        orthogonal,
        sum_to_one,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Traces of `y ↦ y·x` and `y ↦ x·y` on the regular representation.
///
/// `π_σ·π_τ = π_σ` exactly when every letter of `τ` is a right descent of
/// `σ`, so the diagonal entry of `π_τ` acting on the right is the number of
/// `σ` whose right descent set contains `content(τ)`; the left case uses
/// left descents.
pub fn regular_traces(alg: &HeckeAlgebra, x: &AlgebraElement) -> Result<(BigInt, BigInt)> {
    crate::perm::check_same_size(alg.n(), x.n())?;
    let m = alg.monoid();
    let right_counts = superset_counts(m, |k| m.right_descents(k));
    let left_counts = superset_counts(m, |k| m.left_descents(k));
    let mut right = BigInt::zero();
    let mut left = BigInt::zero();
    for (p, c) in x.terms().iter() {
        let content = p.content().bits() as usize;
        right += c * BigInt::from(right_counts[content]);
        left += c * BigInt::from(left_counts[content]);
    }
    Ok((right, left))
}

/// `counts[T] = #{σ : T ⊆ descents(σ)}` for every subset bitmask `T`.
fn superset_counts(m: &HeckeMonoid, descents: impl Fn(usize) -> GeneratorSet) -> Vec<u64> {
    let subsets = 1usize << (m.n() - 1);
    let mut exact = vec![0u64; subsets];
    for k in 0..m.size() {
        exact[descents(k).bits() as usize] += 1;
    }
    (0..subsets).map(|t| (0..subsets).filter(|&s| s & t == t).map(|s| exact[s]).sum()).collect()
}

fn ranks_unchecked(alg: &HeckeAlgebra, e: &AlgebraElement) -> IdempotentRank {
    let (right, left) = regular_traces(alg, e).expect("element built in alg");
    IdempotentRank {
        left_ideal: right.to_usize().unwrap_or(usize::MAX),
        right_ideal: left.to_usize().unwrap_or(usize::MAX),
    }
}

/// Rank of an idempotent as the trace of its regular-representation operators.
pub fn rank_of_idempotent(alg: &HeckeAlgebra, e: &AlgebraElement) -> Result<IdempotentRank> {
    if !alg.is_idempotent(e)? {
        return Err(Error::NotIdempotent);
    }
    Ok(ranks_unchecked(alg, e))
}

/// All `σ` with left descent set exactly `J`, in lexicographic order.
pub fn descent_class(m: &HeckeMonoid, set: GeneratorSet) -> Result<Vec<Permutation>> {
    check_generator_set(set, m.n())?;
    Ok((0..m.size()).filter(|&k| m.left_descents(k) == set).map(|k| m.element(k).clone()).collect())
}

/// `w_J^-·w_Ĵ^+` with `Ĵ` the complement of `J`.
pub fn norton_element(alg: &HeckeAlgebra, set: GeneratorSet) -> Result<AlgebraElement> {
    let minus = alg.w_minus(set)?;
    let plus = alg.w_plus(set.complement(alg.n()))?;
    alg.multiply(&minus, &plus)
}

fn sparse_row(alg: &HeckeAlgebra, x: &AlgebraElement) -> SparseRow {
    let m = alg.monoid();
    let mut row: SparseRow = x.terms().iter().map(|(p, c)| (m.index_of(p).expect("same size"), c.clone())).collect();
    row.sort_by_key(|(k, _)| *k);
    row
}

/// `dim H·(w_J^-·w_Ĵ^+)`, by exact row reduction of `{π_σ·w_J^-·w_Ĵ^+}`.
pub fn norton_ideal_dimension(alg: &HeckeAlgebra, set: GeneratorSet) -> Result<usize> {
    let gen = norton_element(alg, set)?;
    let m = alg.monoid();
    let rows: Vec<SparseRow> = (0..m.size())
        .into_par_iter()
        .map(|k| {
            let factors: Vec<Factor> = m.word(k).letters().iter().map(|&i| Factor::pi(i)).collect();
            alg.left_mul_factors(&factors, &gen).map(|x| sparse_row(alg, &x))
        })
        .collect::<Result<_>>()?;
    Ok(linalg::rank(rows))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RadicalBasis {
    pub dimension: usize,
    /// The spanning elements are linearly independent.
    pub independent: bool,
    /// Every spanning element is killed by every one-dimensional character.
    pub annihilated: bool,
}

/// The elements `π_σ - π_{ω(σ)}` for non-idempotent `σ`, where `ω(σ)` is
/// the longest element on the content of `σ`.
pub fn radical_spanning_set(alg: &HeckeAlgebra) -> Vec<AlgebraElement> {
    let n = alg.n();
    alg.monoid()
        .elements()
        .iter()
        .filter(|p| !p.is_monoid_idempotent())
        .map(|p| {
            AlgebraElement::from_terms(n, [(p.clone(), BigInt::one()), (p.monoid_omega(), -BigInt::one())])
                .expect("same size")
        })
        .collect()
}

pub fn radical_dimension(alg: &HeckeAlgebra) -> Result<RadicalBasis> {
    let span = radical_spanning_set(alg);
    let independent = linalg::independent(span.iter().map(|x| sparse_row(alg, x)));
    let mut annihilated = true;
    for set in GeneratorSet::all_subsets(alg.n()) {
        for x in &span {
            annihilated &= x.lambda_eval(set)?.is_zero();
        }
    }
    Ok(RadicalBasis { dimension: span.len(), independent, annihilated })
}

/// A coefficient outside `{-1, 0, 1}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CoefficientViolation {
    pub diagram: SignedDiagram,
    pub perm: Permutation,
    #[serde(serialize_with = "decimal")]
    pub coeff: BigInt,
}

pub fn coefficient_scan(idems: &[DiagramIdempotent]) -> Vec<CoefficientViolation> {
    let one = BigInt::one();
    let mut out = Vec::new();
    for idem in idems {
        for (p, c) in idem.element.terms().iter() {
            if c != &one && c != &-&one {
                out.push(CoefficientViolation { diagram: idem.diagram.clone(), perm: p.clone(), coeff: c.clone() });
            }
        }
    }
    out
}

/// Entry `(J, D)` is `λ_J(I_D)`; rows are subsets in bitmask order and
/// columns follow `idems`.
pub fn lambda_character_table(idems: &[DiagramIdempotent]) -> Result<Vec<Vec<BigInt>>> {
    let Some(first) = idems.first() else {
        return Ok(Vec::new());
    };
    GeneratorSet::all_subsets(first.element.n())
        .map(|set| idems.iter().map(|idem| idem.element.lambda_eval(set)).collect())
        .collect()
}

/// The `J` with `λ_J(I_D) = 1`: the minus-set of `D`, read through
/// `i ↦ n-i` for the opposite orientation.
pub fn character_of(d: &SignedDiagram, orientation: Orientation, n: usize) -> GeneratorSet {
    let minus = d.minus_set();
    match orientation {
        Orientation::Standard => minus,
        Orientation::Opposite => minus.iter().map(|i| n - i).collect(),
    }
}

/// A 0/1 matrix with exactly one 1 in each row and column.
pub fn is_permutation_matrix(table: &[Vec<BigInt>]) -> bool {
    let n = table.len();
    let one = BigInt::one();
    let entries_ok = table.iter().all(|r| r.len() == n && r.iter().all(|c| c.is_zero() || *c == one));
    let row_ok = table.iter().all(|r| r.iter().filter(|c| **c == one).count() == 1);
    let col_ok = (0..n).all(|j| table.iter().filter(|r| r[j] == one).count() == 1);
    entries_ok && row_ok && col_ok
}

/// Checks that `C_D·π_m = λ·π_m + (terms strictly above m in left weak
/// order)` with `λ ∈ {0, 1}` and `λ = 1` exactly when the left descent set
/// of `m` is the plus-set of `D`. Returns one witness per failing `m`.
pub fn triangularity_violations(alg: &HeckeAlgebra, d: &SignedDiagram) -> Result<Vec<String>> {
    let factors = diagram::demipotent_factors(d);
    let m = alg.monoid();
    let plus = d.plus_set();
    let per_element: Vec<Option<String>> = (0..m.size())
        .into_par_iter()
        .map(|k| -> Result<Option<String>> {
            let base = m.element(k);
            let image = alg.left_mul_factors(&factors, &AlgebraElement::basis(base.clone()))?;
            let lambda = image.coeff(base);
            let expected = if m.left_descents(k) == plus { BigInt::one() } else { BigInt::zero() };
            if lambda != expected {
                return Ok(Some(format!("C_{d}·π_{base}: diagonal coefficient {lambda}, expected {expected}")));
            }
            for (p, _) in image.terms().iter() {
                if p != base && !base.leq_left_weak(p)? {
                    return Ok(Some(format!("C_{d}·π_{base} has term {p} not above {base}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(per_element.into_iter().flatten().collect())
}

/// How the two children of a diagram interact.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SiblingCheck {
    pub commute: bool,
    pub orthogonal: bool,
    pub same_degree: bool,
}

impl SiblingCheck {
    pub fn passed(&self) -> bool {
        self.commute && self.orthogonal && self.same_degree
    }
}

/// Compares `C_{D+}` and `C_{D-}` in `alg`: their two products and their
/// nilpotence degrees.
pub fn sibling_check(alg: &HeckeAlgebra, d: &SignedDiagram, orientation: Orientation) -> Result<SiblingCheck> {
    let plus = d.child(crate::diagram::Sign::Plus);
    let minus = d.child(crate::diagram::Sign::Minus);
    let a = diagram::oriented_demipotent(alg, &plus, orientation)?;
    let b = diagram::oriented_demipotent(alg, &minus, orientation)?;
    let ab = alg.mul_factors(&a, &diagram::oriented_factors(&minus, orientation, alg.n()))?;
    let ba = alg.mul_factors(&b, &diagram::oriented_factors(&plus, orientation, alg.n()))?;
    let da = diagram::idempotent(alg, &plus, orientation)?.degree;
    let db = diagram::idempotent(alg, &minus, orientation)?.degree;
    Ok(SiblingCheck { commute: ab == ba, orthogonal: ab.is_zero() && ba.is_zero(), same_degree: da == db })
}
