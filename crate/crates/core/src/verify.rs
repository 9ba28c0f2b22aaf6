//! Named verification suites over one algebra, each producing a list of
//! pass/fail/skip outcomes.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::HeckeAlgebra;
use crate::diagram::{self, Orientation, Sign, SignedDiagram};
use crate::error::{Error, Result};
use crate::ndpf::{self, NdpfMonoid};
use crate::perm::GeneratorSet;
use crate::repr::{self, CheckStatus, VerificationReport};

/// Largest `N` for the checks that do exact elimination or visit every
/// monoid element per diagram.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Orthogonality,
    Branching,
    Sibling,
    Coeffs,
    Ranks,
    Triangularity,
    Ndpf,
    Universal,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Orthogonality,
        Suite::Branching,
        Suite::Sibling,
        Suite::Coeffs,
        Suite::Ranks,
        Suite::Triangularity,
        Suite::Ndpf,
        Suite::Universal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Orthogonality => "orthogonality",
            Suite::Branching => "branching",
            Suite::Sibling => "sibling",
            Suite::Coeffs => "coeffs",
            Suite::Ranks => "ranks",
            Suite::Triangularity => "triangularity",
            Suite::Ndpf => "ndpf",
            Suite::Universal => "universal",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub check: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    pub orientation: Orientation,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<VerificationReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.status.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status.is_fail())
    }
}

struct Collector {
    suite: Suite,
    out: Vec<CheckOutcome>,
}

impl Collector {
    fn push(&mut self, check: &str, status: CheckStatus, detail: impl Into<String>) {
        self.out.push(CheckOutcome { suite: self.suite, check: check.to_string(), status, detail: detail.into() });
    }

    fn check(&mut self, check: &str, ok: bool, detail: impl Into<String>) {
        self.push(check, CheckStatus::from_bool(ok), detail);
    }

    fn skip(&mut self, check: &str, detail: impl Into<String>) {
        self.push(check, CheckStatus::Skipped, detail);
    }

    /// Records a pass when `failures` is empty, otherwise the first few witnesses.
    fn witnesses(&mut self, check: &str, checked: usize, failures: &[String]) {
        if failures.is_empty() {
            self.check(check, true, format!("{checked} checked"));
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            let more = failures.len().saturating_sub(shown.len());
            let tail = if more > 0 { format!(" (+{more} more)") } else { String::new() };
            self.check(check, false, format!("{}{tail}", shown.join("; ")));
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub orientation: Orientation,
    pub fail_fast: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { orientation: Orientation::Standard, fail_fast: false }
    }
}

/// Runs `suite` (every suite for [`Suite::All`]) on `alg`. With
/// `fail_fast`, stops after the first suite that records a failure.
pub fn run_suite(alg: &HeckeAlgebra, suite: Suite, opts: SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut decomposition = None;
    for s in suite.expand() {
        let mut c = Collector { suite: s, out: Vec::new() };
        match s {
            Suite::Orthogonality => decomposition = Some(orthogonality(alg, opts, &mut c)?),
            Suite::Branching => branching(alg, opts, &mut c)?,
            Suite::Sibling => sibling(alg, opts, &mut c)?,
            Suite::Coeffs => coeffs(alg, opts, &mut c)?,
            Suite::Ranks => ranks(alg, opts, &mut c)?,
            Suite::Triangularity => triangularity(alg, opts, &mut c)?,
            Suite::Ndpf => ndpf_suite(alg, &mut c)?,
            Suite::Universal => universal(alg, &mut c)?,
            Suite::All => unreachable!("expanded above"),
        }
        let failed = c.out.iter().any(|o| o.status.is_fail());
        checks.extend(c.out);
        if failed && opts.fail_fast {
            break;
        }
    }
    Ok(SuiteReport { n: alg.n(), orientation: opts.orientation, checks, decomposition, elapsed: start.elapsed() })
}

fn parents(alg: &HeckeAlgebra) -> Vec<SignedDiagram> {
    SignedDiagram::all(alg.n().saturating_sub(2)).collect()
}

fn orthogonality(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<VerificationReport> {
    let o = opts.orientation;
    let report = repr::verify_orthogonal_decomposition(alg, o, opts.fail_fast)?;
    let pick = |check: &str| report.failures_of(check).map(str::to_string).collect::<Vec<_>>();
    let count = report.records.len();
    c.push("idempotent", report.idempotent, detail_or(&pick("idempotent"), format!("{count} idempotents")));
    c.push(
        "orthogonal",
        report.orthogonal,
        detail_or(&pick("orthogonal"), format!("{} ordered pairs", count * count.saturating_sub(1))),
    );
    c.push("sum-to-one", report.sum_to_one, detail_or(&pick("sum-to-one"), "Σ I_D = 1"));
    if !report.passed() && report.records.is_empty() {
        return Ok(report);
    }

    let idems = diagram::all_idempotents(alg, o)?;
    let bad: Vec<String> = idems
        .par_iter()
        .map(|idem| -> Result<Option<String>> {
            let p = diagram::prefix_product(alg, &idem.diagram, o)?;
            Ok((p != idem.element).then(|| format!("prefix product differs from I_{}", idem.diagram)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    c.witnesses("prefix-product", idems.len(), &bad);

    let by_diagram: BTreeMap<&SignedDiagram, &_> = idems.iter().map(|i| (&i.diagram, &i.element)).collect();
    let mut bad = Vec::new();
    for idem in &idems {
        if alg.psi(&idem.element)? != *by_diagram[&idem.diagram.flipped()] {
            bad.push(format!("Ψ(I_{}) != I_{}", idem.diagram, idem.diagram.flipped()));
        }
    }
    c.witnesses("psi-image", idems.len(), &bad);

    let other = match o {
        Orientation::Standard => Orientation::Opposite,
        Orientation::Opposite => Orientation::Standard,
    };
    let mut mirrored: Vec<_> = idems.iter().map(|i| i.element.dynkin_reverse()).collect();
    let mut counterpart: Vec<_> = diagram::all_idempotents(alg, other)?.into_iter().map(|i| i.element).collect();
    mirrored.sort_by(|a, b| a.terms().iter().cmp(b.terms().iter()));
    counterpart.sort_by(|a, b| a.terms().iter().cmp(b.terms().iter()));
    c.check("reversal-image", mirrored == counterpart, format!("reversing {o} idempotents gives the {other} family"));
    Ok(report)
}

fn detail_or(failures: &[String], ok: impl Into<String>) -> String {
    if failures.is_empty() {
        ok.into()
    } else {
        failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
    }
}

fn branching(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<()> {
    let n = alg.n();
    let o = opts.orientation;
    let mut bad = Vec::new();
    let ps = parents(alg);
    for d in &ps {
        let plus = diagram::oriented_demipotent(alg, &d.child(Sign::Plus), o)?;
        let minus = diagram::oriented_demipotent(alg, &d.child(Sign::Minus), o)?;
        if plus.add(&minus)? != diagram::oriented_demipotent(alg, d, o)? {
            bad.push(format!("C_{{{d}+}} + C_{{{d}-}} != C_{d}"));
        }
    }
    c.witnesses("children-sum", ps.len(), &bad);

    let mut sum = alg.zero();
    for d in SignedDiagram::all(n - 1) {
        sum = sum.add(&diagram::oriented_demipotent(alg, &d, o)?)?;
    }
    c.check("demipotents-sum-to-one", sum == alg.one(), format!("{} demipotents", 1usize << (n - 1)));

    if o == Orientation::Opposite || n < 3 {
        c.skip("evaluation-maps", "defined for the standard orientation with N ≥ 3");
        return Ok(());
    }
    let small = HeckeAlgebra::new(n - 1)?;
    let mut bad = Vec::new();
    for d in &ps {
        let parent = diagram::demipotent(&small, d)?;
        if diagram::demipotent(alg, &d.child(Sign::Plus))?.phi_plus()? != parent {
            bad.push(format!("Φ+(C_{{{d}+}}) != C_{d}"));
        }
        if diagram::demipotent(alg, &d.child(Sign::Minus))?.phi_minus()? != parent {
            bad.push(format!("Φ-(C_{{{d}-}}) != C_{d}"));
        }
    }
    c.witnesses("evaluation-maps", ps.len(), &bad);
    Ok(())
}

fn sibling(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<()> {
    let n = alg.n();
    let o = opts.orientation;
    let ps = parents(alg);
    let results: Vec<(SignedDiagram, repr::SiblingCheck)> =
        ps.par_iter().map(|d| Ok((d.clone(), repr::sibling_check(alg, d, o)?))).collect::<Result<_>>()?;
    let pick = |f: fn(&repr::SiblingCheck) -> bool, what: &str| -> Vec<String> {
        results.iter().filter(|(_, r)| !f(r)).map(|(d, _)| format!("{d}±: {what}")).collect()
    };
    c.witnesses("siblings-orthogonal", ps.len(), &pick(|r| r.orthogonal, "C_{D+}·C_{D-} != 0"));
    c.witnesses("siblings-commute", ps.len(), &pick(|r| r.commute, "products differ"));
    c.witnesses("siblings-same-degree", ps.len(), &pick(|r| r.same_degree, "degrees differ"));

    let mut degrees = BTreeMap::new();
    for k in 0..n {
        let sub = HeckeAlgebra::new(k + 1)?;
        for d in SignedDiagram::all(k) {
            let deg = diagram::idempotent(&sub, &d, o)?.degree;
            degrees.insert(d, deg);
        }
    }
    let mut bad = Vec::new();
    for (d, &deg) in &degrees {
        if deg > diagram::degree_bound(d) {
            bad.push(format!("degree({d}) = {deg} exceeds bound {}", diagram::degree_bound(d)));
        }
        if d.nodes() > 0 {
            let parent = degrees[&d.prefix(d.nodes() - 1)];
            if deg != parent && deg != parent + 1 {
                bad.push(format!("degree({d}) = {deg} but parent has {parent}"));
            }
        }
    }
    c.witnesses("degree-bounds", degrees.len(), &bad);
    Ok(())
}

fn coeffs(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<()> {
    let idems = diagram::all_idempotents(alg, opts.orientation)?;
    let v = repr::coefficient_scan(&idems);
    let bad: Vec<String> =
        v.iter().map(|w| format!("I_{} has coefficient {} at {}", w.diagram, w.coeff, w.perm)).collect();
    let terms: usize = idems.iter().map(|i| i.element.support_size()).sum();
    c.witnesses("coefficients-in-{-1,0,1}", terms, &bad);
    Ok(())
}

fn ranks(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<()> {
    let n = alg.n();
    let m = alg.monoid();
    let idems = diagram::all_idempotents(alg, opts.orientation)?;
    let records: Vec<repr::DiagramRecord> = idems.par_iter().map(|i| repr::DiagramRecord::new(alg, i)).collect();
    let total: usize = records.iter().map(|r| r.rank.left_ideal).sum();
    c.check("ranks-sum-to-dimension", total == alg.dimension(), format!("Σ rank = {total}, N! = {}", alg.dimension()));

    let class_size = |set: GeneratorSet| repr::descent_class(m, set).map(|v| v.len());
    let mut ranks: Vec<usize> = records.iter().map(|r| r.rank.left_ideal).collect();
    let mut sizes: Vec<usize> = GeneratorSet::all_subsets(n).map(class_size).collect::<Result<_>>()?;
    ranks.sort_unstable();
    sizes.sort_unstable();
    c.check("ranks-match-descent-classes", ranks == sizes, "multiset of ranks = multiset of descent-class sizes");

    let mut bad = Vec::new();
    for r in &records {
        let expected = class_size(r.diagram.plus_set())?;
        if r.rank.left_ideal != expected || r.rank.right_ideal != expected {
            bad.push(format!(
                "I_{}: ranks {}/{} but |descent class| = {expected}",
                r.diagram, r.rank.left_ideal, r.rank.right_ideal
            ));
        }
    }
    c.witnesses("rank-equals-plus-set-class", records.len(), &bad);

    let table = repr::lambda_character_table(&idems)?;
    let mut pairing = true;
    for idem in &idems {
        let set = repr::character_of(&idem.diagram, idem.orientation, n);
        pairing &= idem.element.lambda_eval(set)? == num_traits::One::one();
    }
    let which = match opts.orientation {
        Orientation::Standard => "minus-set(D)",
        Orientation::Opposite => "n - minus-set(D)",
    };
    c.check(
        "characters",
        repr::is_permutation_matrix(&table) && pairing,
        format!("λ_J(I_D) is a permutation matrix with λ_J(I_D) = 1 for J = {which}"),
    );

    let rad = repr::radical_dimension(alg)?;
    let expected = alg.dimension() - (1 << (n - 1));
    c.check(
        "radical",
        rad.dimension == expected && rad.independent && rad.annihilated,
        format!(
            "dimension {} (expected {expected}), independent: {}, killed by characters: {}",
            rad.dimension, rad.independent, rad.annihilated
        ),
    );

    if n > EXHAUSTIVE_MAX_N {
        c.skip("norton-ideals", format!("exact elimination runs for N ≤ {EXHAUSTIVE_MAX_N}"));
        return Ok(());
    }
    let dims: Vec<usize> = GeneratorSet::all_subsets(n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&j| repr::norton_ideal_dimension(alg, j))
        .collect::<Result<_>>()?;
    let mut bad = Vec::new();
    for (set, &dim) in GeneratorSet::all_subsets(n).zip(&dims) {
        let expected = class_size(set)?;
        if dim != expected {
            bad.push(format!("dim H·n_{set} = {dim}, descent class has {expected}"));
        }
    }
    let total: usize = dims.iter().sum();
    if total != alg.dimension() {
        bad.push(format!("Σ dim = {total}"));
    }
    c.witnesses("norton-ideals", dims.len(), &bad);
    Ok(())
}

fn triangularity(alg: &HeckeAlgebra, opts: SuiteOptions, c: &mut Collector) -> Result<()> {
    if opts.orientation == Orientation::Opposite {
        c.skip("triangularity", "stated for the standard orientation");
        return Ok(());
    }
    if alg.n() > EXHAUSTIVE_MAX_N {
        c.skip("triangularity", format!("exhaustive for N ≤ {EXHAUSTIVE_MAX_N}"));
        return Ok(());
    }
    let mut bad = Vec::new();
    let diagrams: Vec<SignedDiagram> = SignedDiagram::all(alg.n() - 1).collect();
    for d in &diagrams {
        bad.extend(repr::triangularity_violations(alg, d)?);
    }
    c.witnesses("triangularity", diagrams.len() * alg.dimension(), &bad);
    Ok(())
}

fn ndpf_suite(alg: &HeckeAlgebra, c: &mut Collector) -> Result<()> {
    let n = alg.n();
    let m = match NdpfMonoid::new(n) {
        Ok(m) => m,
        Err(Error::NdpfRelation(what)) => {
            c.check("relations", false, what);
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    c.check("relations", true, "idempotent, braid, commutation and quotient relations hold");
    let catalan = ndpf::catalan(n);
    c.check("catalan-size", m.size() as u64 == catalan, format!("|NDPF_{n}| = {}, Catalan = {catalan}", m.size()));
    let idem = m.idempotents();
    c.check("idempotent-count", idem.len() == 1 << (n - 1), format!("{} idempotents", idem.len()));
    c.check("quotient-map", m.verify_quotient_map(alg.monoid())?, "π_i ↦ e_i is a surjective morphism");
    let mut images = m.longest_element_images(alg.monoid())?;
    images.sort_unstable();
    images.dedup();
    c.check("idempotents-from-longest-elements", images == idem, "images of the w_J^+ are exactly the idempotents");
    let bad: Vec<String> =
        ndpf::ndpf_masked_word_check(n)?.into_iter().map(|d| format!("u_{n}^{d} is not idempotent")).collect();
    c.witnesses("masked-universal-word", 1 << (n - 1), &bad);
    Ok(())
}

fn universal(alg: &HeckeAlgebra, c: &mut Collector) -> Result<()> {
    let n = alg.n();
    let u = diagram::universal_word(n);
    let cap = n.max(2);
    let ok = diagram::is_universal(alg, &u, cap)?;
    c.check("universal-word", ok, format!("u_{n} = {u}"));
    if !ok {
        return Ok(());
    }
    let masked = diagram::masked_idempotents(alg, &u, cap)?;
    let idems = diagram::all_idempotents(alg, Orientation::Standard)?;
    let same = masked.iter().zip(&idems).all(|(x, y)| x.element == y.element);
    c.check(
        "masked-idempotents",
        same,
        format!("stable powers of u_{n}^D equal I_D for all {} diagrams", masked.len()),
    );
    Ok(())
}
