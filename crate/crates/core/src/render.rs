//! Text, JSON and CSV renderings of expansions, nilpotence tables and reports.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::algebra::{AlgebraElement, Factor, HeckeAlgebra};
use crate::diagram::{self, DiagramIdempotent, Orientation, Sign, SignedDiagram};
use crate::error::Result;
use crate::perm::{Permutation, Word};
use crate::repr::DiagramRecord;
use crate::verify::SuiteReport;

/// The reduced word used to print `π_σ`: lexicographically minimal for the
/// standard orientation, and the mirror image of the minimal word of
/// `w_0σw_0` for the opposite one, so both tables read alike.
pub fn display_word(p: &Permutation, orientation: Orientation) -> Word {
    match orientation {
        Orientation::Standard => p.reduced_word(),
        Orientation::Opposite => p.dynkin_reverse().reduced_word().dynkin_reverse(),
    }
}

fn basis_symbol(w: &Word) -> String {
    match w.len() {
        0 => "1".to_string(),
        1 => format!("π_{w}"),
        _ => format!("π_{{{w}}}"),
    }
}

/// `x` in the `π` basis, terms ordered by word length and then by word,
/// e.g. `1 - π_1 - π_2 + π_{12} + π_{21} - π_{121}`.
pub fn render_expansion(x: &AlgebraElement, orientation: Orientation) -> String {
    let mut terms: Vec<(Word, &BigInt)> = x.terms().iter().map(|(p, c)| (display_word(p, orientation), c)).collect();
    terms.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters())));
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in terms.iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (k, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            _ => {
                let _ = write!(out, " {sign} ");
            }
        }
        let magnitude = c.abs();
        let symbol = basis_symbol(w);
        if magnitude.is_one() {
            out.push_str(&symbol);
        } else if w.is_empty() {
            let _ = write!(out, "{magnitude}");
        } else {
            let _ = write!(out, "{magnitude}{symbol}");
        }
    }
    out
}

/// A factor word with runs of equal sign merged, e.g. `π_{121}π̄_{345343}π_6`.
pub fn render_factors(factors: &[Factor]) -> String {
    let mut out = String::new();
    let mut k = 0;
    while k < factors.len() {
        let sign = factors[k].sign;
        let run: Vec<usize> = factors[k..].iter().take_while(|f| f.sign == sign).map(|f| f.generator).collect();
        k += run.len();
        let symbol = match sign {
            Sign::Plus => "π",
            Sign::Minus => "π̄",
        };
        let letters: Vec<String> = run.iter().map(usize::to_string).collect();
        let sep = if run.iter().all(|&i| i < 10) { "" } else { "," };
        let body = letters.join(sep);
        if run.len() == 1 {
            let _ = write!(out, "{symbol}_{body}");
        } else {
            let _ = write!(out, "{symbol}_{{{body}}}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// One row of the demipotent table: diagram, factored form, expansion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExpansionRow {
    pub diagram: SignedDiagram,
    pub factored: String,
    pub expanded: String,
}

/// `C_D` as a palindrome of block longest elements with the repeated middle
/// block written once, e.g. `π_{121}π̄_{345343}π_6π̄_7π_6π̄_{345343}π_{121}`.
pub fn render_demipotent(d: &SignedDiagram, orientation: Orientation, n: usize) -> String {
    let blocks = d.blocks();
    let blocks = blocks.blocks();
    let order = (0..blocks.len()).chain((0..blocks.len().saturating_sub(1)).rev());
    let factors: Vec<Factor> = order
        .flat_map(|k| blocks[k].longest_factors())
        .map(|f| match orientation {
            Orientation::Standard => f,
            Orientation::Opposite => f.dynkin_reverse(n),
        })
        .collect();
    render_factors(&factors)
}

pub fn expansion_row(alg: &HeckeAlgebra, d: &SignedDiagram, orientation: Orientation) -> Result<ExpansionRow> {
    let x = diagram::oriented_demipotent(alg, d, orientation)?;
    Ok(ExpansionRow {
        diagram: d.clone(),
        factored: render_demipotent(d, orientation, alg.n()),
        expanded: render_expansion(&x, orientation),
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NilpotenceRow {
    pub n: usize,
    pub diagram: SignedDiagram,
    pub degree: usize,
    pub bound: usize,
}

/// Nilpotence degrees of every diagram for each `N` in `2..=max_n`.
pub fn nilpotence_rows(max_n: usize, orientation: Orientation) -> Result<Vec<NilpotenceRow>> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let alg = HeckeAlgebra::new(n)?;
        for idem in diagram::all_idempotents(&alg, orientation)? {
            let bound = diagram::degree_bound(&idem.diagram);
            rows.push(NilpotenceRow { n, diagram: idem.diagram, degree: idem.degree, bound });
        }
    }
    Ok(rows)
}

/// One line per `N` listing `diagram:degree`, followed by per-degree
/// counts split by the sign of the first node.
pub fn nilpotence_text(rows: &[NilpotenceRow]) -> String {
    let mut out = String::new();
    let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    ns.dedup();
    for n in ns {
        let row: Vec<&NilpotenceRow> = rows.iter().filter(|r| r.n == n).collect();
        let cells: Vec<String> = row.iter().map(|r| format!("{}:{}", r.diagram, r.degree)).collect();
        let _ = writeln!(out, "N={n}  {}", cells.join(" "));
        let max = row.iter().map(|r| r.degree).max().unwrap_or(1);
        for degree in 2..=max {
            let hits: Vec<&&NilpotenceRow> = row.iter().filter(|r| r.degree == degree).collect();
            let plus = hits.iter().filter(|r| r.diagram.sign(1) == Sign::Plus).count();
            let _ = writeln!(
                out,
                "      degree {degree}: {} diagrams ({plus} starting with +, {} with -)",
                hits.len(),
                hits.len() - plus
            );
        }
    }
    out
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| crate::error::Error::Csv(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| crate::error::Error::Csv(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct RecordRow<'a> {
    diagram: &'a SignedDiagram,
    degree: usize,
    rank: usize,
    support: usize,
    min_coeff: String,
    max_coeff: String,
}

/// `diagram,degree,rank,support,min_coeff,max_coeff`, with `rank = dim H·I_D`.
pub fn records_csv(records: &[DiagramRecord]) -> Result<String> {
    let rows: Vec<RecordRow> = records
        .iter()
        .map(|r| RecordRow {
            diagram: &r.diagram,
            degree: r.degree,
            rank: r.rank.left_ideal,
            support: r.support,
            min_coeff: r.min_coeff.to_string(),
            max_coeff: r.max_coeff.to_string(),
        })
        .collect();
    to_csv(&rows)
}

/// One JSON object per line, in diagram order.
pub fn idempotents_jsonl(idems: &[DiagramIdempotent]) -> Result<String> {
    let mut out = String::new();
    for idem in idems {
        out.push_str(&serde_json::to_string(idem)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn report_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "N={} orientation={}", report.n, report.orientation);
    for c in &report.checks {
        let tag = match c.status {
            crate::repr::CheckStatus::Pass => "PASS",
            crate::repr::CheckStatus::Fail => "FAIL",
            crate::repr::CheckStatus::Skipped => "SKIP",
        };
        let _ = writeln!(out, "{tag}  {}/{}  {}", c.suite.as_str(), c.check, c.detail);
    }
    if let Some(d) = &report.decomposition {
        if !d.records.is_empty() {
            let _ = writeln!(out, "\n{:<w$}  degree  rank  support  coeffs", "diagram", w = report.n.max(8));
            for r in &d.records {
                let _ = writeln!(
                    out,
                    "{:<w$}  {:>6}  {:>4}  {:>7}  [{}, {}]",
                    r.diagram.to_string(),
                    r.degree,
                    r.rank.left_ideal,
                    r.support,
                    r.min_coeff,
                    r.max_coeff,
                    w = report.n.max(8)
                );
            }
        }
    }
    let failed = report.failures().count();
    if failed == 0 {
        let _ = writeln!(out, "\nall {} checks passed", report.checks.iter().filter(|c| !c.status.is_fail()).count());
    } else {
        let _ = writeln!(out, "\n{failed} of {} checks failed", report.checks.len());
    }
    out
}

#[derive(Serialize)]
struct CheckRow<'a> {
    suite: &'a str,
    check: &'a str,
    status: &'a str,
    detail: &'a str,
}

pub fn report_csv(report: &SuiteReport) -> Result<String> {
    let rows: Vec<CheckRow> = report
        .checks
        .iter()
        .map(|c| CheckRow { suite: c.suite.as_str(), check: &c.check, status: c.status.as_str(), detail: &c.detail })
        .collect();
    to_csv(&rows)
}

pub fn report_json(report: &SuiteReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn expansions_at_three() {
        let alg = HeckeAlgebra::new(3).unwrap();
        let standard = [
            ("++", "π_{121}"),
            ("+-", "π_1 - π_{121}"),
            ("-+", "π_2 - π_{12} - π_{21} + π_{121}"),
            ("--", "1 - π_1 - π_2 + π_{12} + π_{21} - π_{121}"),
        ];
        for (s, text) in standard {
            assert_eq!(expansion_row(&alg, &d(s), Orientation::Standard).unwrap().expanded, text);
        }
        let opposite = [
            ("++", "π_{212}"),
            ("+-", "π_2 - π_{212}"),
            ("-+", "π_1 - π_{12} - π_{21} + π_{212}"),
            ("--", "1 - π_1 - π_2 + π_{12} + π_{21} - π_{212}"),
        ];
        for (s, text) in opposite {
            assert_eq!(expansion_row(&alg, &d(s), Orientation::Opposite).unwrap().expanded, text);
        }
    }

    #[test]
    fn factored_forms() {
        let alg = HeckeAlgebra::new(3).unwrap();
        assert_eq!(expansion_row(&alg, &d("+-"), Orientation::Standard).unwrap().factored, "π_1π̄_2π_1");
        assert_eq!(expansion_row(&alg, &d("+-"), Orientation::Opposite).unwrap().factored, "π_2π̄_1π_2");
        assert_eq!(expansion_row(&alg, &d("--"), Orientation::Opposite).unwrap().factored, "π̄_{212}");
        assert_eq!(render_factors(&[]), "1");
        assert_eq!(
            render_demipotent(&d("++---+-"), Orientation::Standard, 8),
            "π_{121}π̄_{345343}π_6π̄_7π_6π̄_{345343}π_{121}"
        );
        let f = [Factor::pi(9), Factor::pi(10)];
        assert_eq!(render_factors(&f), "π_{9,10}");
    }

    #[test]
    fn coefficients_and_zero() {
        let alg = HeckeAlgebra::new(2).unwrap();
        assert_eq!(render_expansion(&alg.zero(), Orientation::Standard), "0");
        let x = alg.one().scale(&BigInt::from(-2)).add(&alg.pi(1).unwrap().scale(&BigInt::from(3))).unwrap();
        assert_eq!(render_expansion(&x, Orientation::Standard), "-2 + 3π_1");
        let x = alg.pi(1).unwrap().neg();
        assert_eq!(render_expansion(&x, Orientation::Standard), "-π_1");
    }

    #[test]
    fn nilpotence_rendering() {
        let rows = nilpotence_rows(5, Orientation::Standard).unwrap();
        assert_eq!(rows.len(), 2 + 4 + 8 + 16);
        let text = nilpotence_text(&rows);
        assert!(text.contains("N=5  ++++:1 +++-:1"));
        assert!(text.contains("degree 2: 4 diagrams (2 starting with +, 2 with -)"));
        let csv = to_csv(&rows[..2]).unwrap();
        assert_eq!(csv, "n,diagram,degree,bound\n2,+,1,1\n2,-,1,1\n");
    }
}
