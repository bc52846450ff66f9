//! Rate and dimension bounds, and the universally-good criteria.
//!
//! Every comparison is exact: binomials use arbitrary-precision integers and
//! rates are reduced rationals.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::analysis::{dimension_profile_with, repair_degrees};
use crate::code::FrCode;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::rate::{rate, Rate};

/// Direction of the inequality a report checks: `value <= bound` or `value >= bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        })
    }
}

/// One evaluated inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    pub k: Option<usize>,
    pub value: Rate,
    pub relation: Relation,
    pub bound: Rate,
    /// Preconditions met. When false, `holds` carries no meaning and is false.
    pub applicable: bool,
    pub holds: bool,
    pub note: String,
}

impl BoundReport {
    fn compare(name: &'static str, k: Option<usize>, value: Rate, relation: Relation, bound: Rate) -> Self {
        let holds = match relation {
            Relation::AtMost => value <= bound,
            Relation::AtLeast => value >= bound,
        };
        BoundReport { name, k, value, relation, bound, applicable: true, holds, note: String::new() }
    }

    fn not_applicable(mut self, note: impl Into<String>) -> Self {
        self.applicable = false;
        self.holds = false;
        self.note = note.into();
        self
    }

    /// True unless the report is applicable and fails.
    pub fn ok(&self) -> bool {
        !self.applicable || self.holds
    }
}

pub const DIMENSION_BOUND: &str = "dimension-upper-bound";
pub const RELIABLE_RATE: &str = "reliable-rate-half";
pub const RATE_FLOOR: &str = "rate-floor";
pub const GROWTH_RATE: &str = "rate-growth";
pub const RATE_DOMINANCE: &str = "rate-dominance";
pub const RATE_DIFFERENCE: &str = "rate-difference";
pub const UNIVERSALLY_GOOD: &str = "universally-good";

/// `C(a, b)`, zero when `a < b`.
pub fn binomial(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for t in 0..b {
        acc = acc * BigUint::from(a - t) / BigUint::from(t + 1);
    }
    acc
}

fn small_binomial(a: usize, b: usize) -> i64 {
    binomial(a, b).to_i64().expect("binomial fits in i64 at desk scale")
}

/// `floor( sum_j (1 - C(n - rho_j, k) / C(n, k)) )`.
pub fn dimension_upper_bound(c: &FrCode, k: usize) -> Result<usize> {
    c.check_k(k)?;
    let n = c.n();
    let total = binomial(n, k);
    let missed: BigUint = (1..=c.theta()).map(|j| binomial(n - c.rho_of(j), k)).sum();
    let numerator = &total * BigUint::from(c.theta()) - missed;
    Ok((numerator / total).to_usize().expect("bounded by theta"))
}

/// `D(k) <= dimension_upper_bound(k)`.
pub fn dimension_bound_check(c: &FrCode, k: usize) -> Result<BoundReport> {
    let d = crate::analysis::code_dimension(c, k)?.value;
    Ok(dimension_report(k, d, dimension_upper_bound(c, k)?))
}

fn dimension_report(k: usize, d: usize, bound: usize) -> BoundReport {
    BoundReport::compare(DIMENSION_BOUND, Some(k), Rate::from(d as i64), Relation::AtMost, Rate::from(bound as i64))
}

/// `R_C(k) <= 1/2` for codes where every packet has at least two replicas.
pub fn reliable_rate_check(c: &FrCode, k: usize) -> Result<BoundReport> {
    let r = crate::analysis::fr_code_rate(c, k)?;
    Ok(reliable_report(c, k, r))
}

fn reliable_report(c: &FrCode, k: usize, r: Rate) -> BoundReport {
    let report = BoundReport::compare(RELIABLE_RATE, Some(k), r, Relation::AtMost, Rate::new(1, 2));
    if c.params().rho_min < 2 {
        report.not_applicable("some packet has a single replica")
    } else {
        report
    }
}

/// `R_C(k) >= alpha_min / (rho * theta)`.
pub fn rate_floor(c: &FrCode, k: usize) -> Result<BoundReport> {
    let r = crate::analysis::fr_code_rate(c, k)?;
    Ok(floor_report(c, k, r))
}

fn floor_report(c: &FrCode, k: usize, r: Rate) -> BoundReport {
    let p = c.params();
    BoundReport::compare(RATE_FLOOR, Some(k), r, Relation::AtLeast, rate(p.alpha_min, p.rho * c.theta()))
}

/// Relative growth `(R(k) - R(k-1)) / R(k-1) <= sum alpha / (2 alpha_min) - 1`
/// for `k = 2..n-1`.
pub fn growth_rate_check(c: &FrCode) -> Result<Vec<BoundReport>> {
    if c.params().rho_min < 2 {
        return Err(Error::NotReliable);
    }
    Ok(growth_reports(c, &dimension_profile_with(c, Strategy::default())))
}

fn growth_reports(c: &FrCode, profile: &[usize]) -> Vec<BoundReport> {
    let p = c.params();
    let bound = rate(p.total_storage, 2 * p.alpha_min) - 1;
    (2..c.n())
        .map(|k| {
            let growth = rate(profile[k], profile[k - 1]) - 1;
            BoundReport::compare(GROWTH_RATE, Some(k), growth, Relation::AtMost, bound)
        })
        .collect()
}

/// `R_C(k) <= R_DSS(k)`, non-strict.
pub fn rate_dominance_check(c: &FrCode, k: usize) -> Result<BoundReport> {
    let r = crate::analysis::fr_code_rate(c, k)?;
    Ok(dominance_report(c, k, r))
}

fn dominance_report(c: &FrCode, k: usize, r: Rate) -> BoundReport {
    let mut report = BoundReport::compare(RATE_DOMINANCE, Some(k), r, Relation::AtMost, rate(k, c.n()));
    if report.holds && r == rate(k, c.n()) {
        report.note = "equality".into();
    }
    report
}

/// `R_DSS(k) - R_C(k) <= C(k, 2) / sum alpha`, applicable when every pair of
/// nodes shares at most one packet.
pub fn rate_difference_bound(c: &FrCode, k: usize) -> Result<BoundReport> {
    let r = crate::analysis::fr_code_rate(c, k)?;
    Ok(difference_report(c, k, r, pairwise_max(c)))
}

fn difference_report(c: &FrCode, k: usize, r: Rate, overlap: usize) -> BoundReport {
    let diff = rate(k, c.n()) - r;
    let bound = Rate::new(small_binomial(k, 2), c.total_storage() as i64);
    let report = BoundReport::compare(RATE_DIFFERENCE, Some(k), diff, Relation::AtMost, bound);
    if overlap > 1 {
        report.not_applicable(format!("two nodes share {overlap} packets"))
    } else {
        report
    }
}

/// Largest number of packets shared by two distinct nodes.
pub fn max_pairwise_intersection(c: &FrCode) -> Result<usize> {
    if c.n() < 2 {
        return Err(Error::SingleNode);
    }
    Ok(pairwise_max(c))
}

fn pairwise_max(c: &FrCode) -> usize {
    let m = c.masks();
    (0..m.len())
        .flat_map(|a| (a + 1..m.len()).map(move |b| (a, b)))
        .map(|(a, b)| m[a].intersection_count(&m[b]))
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UgoodMode {
    /// `D(k) >= k d - C(k, 2)`; symmetric codes only.
    Symmetric,
    /// `D(k) >= (sum of the k smallest d_i) - C(k, 2)`.
    #[default]
    Asymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UgoodReport {
    pub mode: UgoodMode,
    /// Repair degrees `d_i` in node order.
    pub degrees: Vec<usize>,
    /// One report per `k = 1..n-1`.
    pub reports: Vec<BoundReport>,
    pub holds: bool,
}

pub fn universally_good(c: &FrCode, mode: UgoodMode) -> Result<UgoodReport> {
    if mode == UgoodMode::Symmetric && !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let degrees = repair_degrees(c)?.per_node;
    let profile = dimension_profile_with(c, Strategy::default());
    Ok(ugood_from(mode, degrees, &profile))
}

fn ugood_from(mode: UgoodMode, degrees: Vec<usize>, profile: &[usize]) -> UgoodReport {
    let n = degrees.len();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    let d = sorted.last().copied().unwrap_or(0);
    let reports: Vec<BoundReport> = (1..n)
        .map(|k| {
            let degree_sum = match mode {
                UgoodMode::Symmetric => (k * d) as i64,
                UgoodMode::Asymmetric => sorted[..k].iter().sum::<usize>() as i64,
            };
            let bound = degree_sum - small_binomial(k, 2);
            BoundReport::compare(
                UNIVERSALLY_GOOD,
                Some(k),
                Rate::from(profile[k] as i64),
                Relation::AtLeast,
                Rate::from(bound),
            )
        })
        .collect();
    let holds = reports.iter().all(|r| r.holds);
    UgoodReport { mode, degrees, reports, holds }
}

/// Every per-`k` bound for one code, with the relevant preconditions applied.
pub fn all_bounds(c: &FrCode, k: usize) -> Result<Vec<BoundReport>> {
    c.check_k(k)?;
    let profile = dimension_profile_with(c, Strategy::default());
    Ok(bounds_at(c, k, &profile, pairwise_max(c)))
}

fn bounds_at(c: &FrCode, k: usize, profile: &[usize], overlap: usize) -> Vec<BoundReport> {
    let r = rate(profile[k], c.total_storage());
    let mut out = vec![
        dimension_report(k, profile[k], dimension_upper_bound(c, k).expect("k in range")),
        reliable_report(c, k, r),
        floor_report(c, k, r),
        dominance_report(c, k, r),
        difference_report(c, k, r, overlap),
    ];
    if (2..c.n()).contains(&k) {
        let mut growth = growth_reports(c, profile).swap_remove(k - 2);
        if c.params().rho_min < 2 {
            growth = growth.not_applicable("some packet has a single replica");
        }
        out.push(growth);
    }
    out
}

/// Tally of one named check across a batch of codes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepLine {
    pub name: &'static str,
    pub applicable: usize,
    pub violations: usize,
}

/// Result of checking every bound, for every `k`, on a batch of codes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub codes: usize,
    pub lines: Vec<SweepLine>,
}

impl SweepSummary {
    pub fn line(&self, name: &str) -> Option<&SweepLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

/// Evaluates every bound for every `k` on each code; the universally-good
/// criterion is evaluated on repairable codes with pairwise overlap <= 1.
pub fn sweep(codes: &[FrCode], strategy: Strategy) -> SweepSummary {
    let per_code = par::map(strategy, codes, |c| {
        let profile = dimension_profile_with(c, Strategy::Sequential);
        let overlap = pairwise_max(c);
        let mut reports: Vec<BoundReport> =
            (1..=c.n()).flat_map(|k| bounds_at(c, k, &profile, overlap)).collect();
        if overlap <= 1 && c.params().rho_min >= 2 {
            let degrees = repair_degrees(c).expect("every packet has a second replica").per_node;
            reports.extend(ugood_from(UgoodMode::Asymmetric, degrees, &profile).reports);
        }
        reports
    });
    let names = [
        DIMENSION_BOUND,
        RELIABLE_RATE,
        RATE_FLOOR,
        RATE_DOMINANCE,
        RATE_DIFFERENCE,
        GROWTH_RATE,
        UNIVERSALLY_GOOD,
    ];
    let mut lines: Vec<SweepLine> =
        names.iter().map(|&name| SweepLine { name, ..SweepLine::default() }).collect();
    for report in per_code.iter().flatten() {
        let line = lines.iter_mut().find(|l| l.name == report.name).expect("known check");
        if report.applicable {
            line.applicable += 1;
            if !report.holds {
                line.violations += 1;
            }
        }
    }
    SweepSummary { codes: codes.len(), lines }
}
