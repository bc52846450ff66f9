//! Exhaustive analysis of a code: dimension, reconstruction and surviving
//! sets, repair degrees, bandwidth, tolerance and the two code rates.
//!
//! Every enumeration is lexicographic on node indices, so results (including
//! witnesses and set order) are the same under either [`Strategy`].

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::bitset::{mask_to_nodes, NodeMask, PacketSet};
use crate::code::FrCode;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::rate::{rate, Rate};

/// `D_C(k)` together with a minimizing node set.
///
/// Among minimizers the witness is the one storing the fewest packets in
/// total (`sum alpha_i`), ties broken lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dimension {
    pub k: usize,
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Minimum number of distinct packets over all `k`-node subsets.
pub fn code_dimension(c: &FrCode, k: usize) -> Result<Dimension> {
    code_dimension_with(c, k, Strategy::default())
}

pub fn code_dimension_with(c: &FrCode, k: usize, strategy: Strategy) -> Result<Dimension> {
    c.check_k(k)?;
    let firsts = c.n() - k + 1;
    let best = if strategy.is_parallel() {
        // branches share the smallest union seen so far; pruning is strict, so
        // every tied minimizer survives and the reduction below is deterministic
        let shared = AtomicUsize::new(usize::MAX);
        par::map_range(strategy, firsts, |first| {
            let mut search = MinUnionSearch::new(c, k);
            search.shared = Some(&shared);
            search.run_from(first);
            search.best
        })
        .into_iter()
        .flatten()
        .min()
    } else {
        // one search across all first elements shares the running minimum
        let mut search = MinUnionSearch::new(c, k);
        for first in 0..firsts {
            search.run_from(first);
        }
        search.best
    };
    let (value, _, witness) = best.expect("at least one k-subset exists");
    Ok(Dimension { k, value, witness: witness.into_iter().map(|i| i + 1).collect() })
}

/// `[D(0), D(1), ..., D(n)]` with `D(0) = 0`.
pub fn dimension_profile(c: &FrCode) -> Vec<usize> {
    dimension_profile_with(c, Strategy::default())
}

pub fn dimension_profile_with(c: &FrCode, strategy: Strategy) -> Vec<usize> {
    let mut out = vec![0];
    out.extend(par::map_range(strategy, c.n(), |k0| {
        code_dimension_with(c, k0 + 1, Strategy::Sequential).expect("k in range").value
    }));
    out
}

/// Depth-first walk over `k`-subsets in lexicographic order, keeping the
/// smallest `(union size, total storage, subset)`.
struct MinUnionSearch<'a> {
    masks: &'a [PacketSet],
    k: usize,
    stack: Vec<PacketSet>,
    chosen: Vec<usize>,
    storage: usize,
    best: Option<(usize, usize, Vec<usize>)>,
    shared: Option<&'a AtomicUsize>,
}

impl<'a> MinUnionSearch<'a> {
    fn new(c: &'a FrCode, k: usize) -> Self {
        MinUnionSearch {
            masks: c.masks(),
            k,
            stack: vec![PacketSet::empty(c.theta()); k + 1],
            chosen: Vec::with_capacity(k),
            storage: 0,
            best: None,
            shared: None,
        }
    }

    fn bound(&self) -> usize {
        let local = self.best.as_ref().map_or(usize::MAX, |b| b.0);
        self.shared.map_or(local, |s| local.min(s.load(Ordering::Relaxed)))
    }

    fn run_from(&mut self, first: usize) {
        self.step(0, first);
    }

    fn step(&mut self, depth: usize, next: usize) {
        let (lo, hi) = self.stack.split_at_mut(depth + 1);
        hi[0].assign_union(&lo[depth], &self.masks[next]);
        // unions only grow: a larger prefix union cannot reach the minimum
        if hi[0].count() > self.bound() {
            return;
        }
        let size = self.masks[next].count();
        self.chosen.push(next);
        self.storage += size;
        self.descend(next + 1);
        self.storage -= size;
        self.chosen.pop();
    }

    fn descend(&mut self, start: usize) {
        let depth = self.chosen.len();
        if depth == self.k {
            let key = (self.stack[depth].count(), self.storage);
            if self.best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
                self.best = Some((key.0, key.1, self.chosen.clone()));
                if let Some(shared) = self.shared {
                    shared.fetch_min(key.0, Ordering::Relaxed);
                }
            }
            return;
        }
        let last = self.masks.len() - (self.k - depth);
        for next in start..=last {
            self.step(depth, next);
        }
    }
}

/// Inclusion-minimal node sets whose joint content reaches a file size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    /// File size `B` in packets.
    pub b: usize,
    /// Ordered by cardinality, then lexicographically.
    pub sets: Vec<Vec<usize>>,
    /// Largest reconstruction degree among `sets`.
    pub k_max: usize,
    /// Smallest `k` with `D(k) >= B`.
    pub k_guarantee: usize,
}

impl ReconstructionReport {
    /// Number of reconstruction sets.
    pub fn eta(&self) -> usize {
        self.sets.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }
}

pub fn reconstruction_sets(c: &FrCode, b: usize) -> Result<ReconstructionReport> {
    reconstruction_sets_with(c, b, Strategy::default())
}

pub fn reconstruction_sets_with(
    c: &FrCode,
    b: usize,
    strategy: Strategy,
) -> Result<ReconstructionReport> {
    if b == 0 || b > c.theta() {
        return Err(Error::BOutOfRange { b, theta: c.theta() });
    }
    check_mask_width(c)?;
    let candidates: Vec<usize> = (0..c.n()).collect();
    let sets: Vec<Vec<usize>> =
        minimal_sets(c, &candidates, |u: &PacketSet| u.count() >= b, strategy)
            .into_iter()
            .map(mask_to_nodes)
            .collect();
    let k_max = sets.iter().map(Vec::len).max().unwrap_or(0);
    let k_guarantee = (1..=c.n())
        .find(|&k| code_dimension_with(c, k, strategy).map(|d| d.value >= b).unwrap_or(false))
        .expect("D(n) = theta >= B");
    Ok(ReconstructionReport { b, sets, k_max, k_guarantee })
}

/// Smallest joint content over all reconstruction sets for file size `b`.
pub fn min_k_union(c: &FrCode, b: usize) -> Result<usize> {
    if b > c.theta() {
        return Err(Error::NoReconstructionSet { b, theta: c.theta() });
    }
    let report = reconstruction_sets(c, b)?;
    Ok(report
        .sets
        .iter()
        .map(|set| union_of(c, set).count())
        .min()
        .expect("the full node set always reconstructs"))
}

/// `(k_max, k_guarantee)` for file size `b`.
pub fn max_reconstruction_degree(c: &FrCode, b: usize) -> Result<(usize, usize)> {
    let report = reconstruction_sets(c, b)?;
    Ok((report.k_max, report.k_guarantee))
}

fn check_mask_width(c: &FrCode) -> Result<()> {
    if c.n() > NodeMask::BITS as usize {
        Err(Error::TooManyNodes(c.n()))
    } else {
        Ok(())
    }
}

pub(crate) fn union_of(c: &FrCode, nodes: &[usize]) -> PacketSet {
    let mut u = PacketSet::empty(c.theta());
    for &i in nodes {
        u.union_with(&c.masks()[i - 1]);
    }
    u
}

/// Inclusion-minimal subsets of `candidates` (0-based) whose packet union
/// satisfies `accept`, enumerated level by level. `accept` must be monotone.
fn minimal_sets<P>(c: &FrCode, candidates: &[usize], accept: P, strategy: Strategy) -> Vec<NodeMask>
where
    P: Fn(&PacketSet) -> bool + Sync,
{
    let mut found: Vec<NodeMask> = Vec::new();
    for size in 1..=candidates.len() {
        let chunks = par::map_range(strategy, candidates.len() + 1 - size, |first| {
            let mut level = LevelSearch {
                masks: c.masks(),
                candidates,
                size,
                found: &found,
                accept: &accept,
                stack: vec![PacketSet::empty(c.theta()); size + 1],
                hits: Vec::new(),
                alive: 0,
            };
            level.descend(first, 0, 0);
            (level.hits, level.alive)
        });
        let mut alive = 0;
        let mut level_hits = Vec::new();
        for (hits, a) in chunks {
            level_hits.extend(hits);
            alive += a;
        }
        found.extend(level_hits);
        // every subset of this size contains an earlier hit, so all larger ones do too
        if alive == 0 {
            break;
        }
    }
    found
}

struct LevelSearch<'a, P> {
    masks: &'a [PacketSet],
    candidates: &'a [usize],
    size: usize,
    found: &'a [NodeMask],
    accept: &'a P,
    stack: Vec<PacketSet>,
    hits: Vec<NodeMask>,
    alive: usize,
}

impl<P: Fn(&PacketSet) -> bool> LevelSearch<'_, P> {
    fn descend(&mut self, pos: usize, depth: usize, prefix: NodeMask) {
        let node = self.candidates[pos];
        let mask = prefix | 1 << node;
        if self.found.iter().any(|&f| f & !mask == 0) {
            return;
        }
        let (lo, hi) = self.stack.split_at_mut(depth + 1);
        hi[0].assign_union(&lo[depth], &self.masks[node]);
        if depth + 1 == self.size {
            self.alive += 1;
            if (self.accept)(&self.stack[depth + 1]) {
                self.hits.push(mask);
            }
            return;
        }
        let remaining = self.size - depth - 1;
        for next in pos + 1..=self.candidates.len() - remaining {
            self.descend(next, depth + 1, mask);
        }
    }
}

/// Which helper sets count as surviving sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SurvivingMode {
    /// Images of choice functions picking one live replica holder per lost
    /// packet. Reproduces the worked repair tables, including non-minimal sets.
    #[default]
    ChoiceImage,
    /// Strictly inclusion-minimal covers of the failed node's packets.
    MinimalCover,
}

/// Packets a single helper sends to the replacement node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelperDownload {
    pub helper: usize,
    pub packets: Vec<usize>,
}

impl HelperDownload {
    /// `beta(U_i, U_r, S)`.
    pub fn beta(&self) -> usize {
        self.packets.len()
    }
}

/// A helper set with one witness download assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivingSet {
    pub helpers: Vec<usize>,
    /// One entry per helper, in helper order.
    pub downloads: Vec<HelperDownload>,
}

impl SurvivingSet {
    pub fn degree(&self) -> usize {
        self.helpers.len()
    }

    pub fn beta(&self, helper: usize) -> usize {
        self.downloads.iter().find(|d| d.helper == helper).map_or(0, HelperDownload::beta)
    }

    /// Total packets downloaded.
    pub fn gamma(&self) -> usize {
        self.downloads.iter().map(HelperDownload::beta).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivingSetReport {
    pub node: usize,
    pub mode: SurvivingMode,
    /// Ordered by cardinality, then lexicographically.
    pub sets: Vec<SurvivingSet>,
    /// Maximum repair degree `d_i`; 0 when the node cannot be repaired.
    pub d: usize,
    /// `prod (rho_j - 1)` over the node's packets (saturating).
    pub choice_bound: u128,
}

pub fn surviving_sets(c: &FrCode, i: usize) -> Result<SurvivingSetReport> {
    surviving_sets_excluding(c, i, SurvivingMode::ChoiceImage, &[])
}

pub fn surviving_sets_with_mode(
    c: &FrCode,
    i: usize,
    mode: SurvivingMode,
) -> Result<SurvivingSetReport> {
    surviving_sets_excluding(c, i, mode, &[])
}

/// Surviving sets for node `i` when the nodes in `excluded` are also down.
pub fn surviving_sets_excluding(
    c: &FrCode,
    i: usize,
    mode: SurvivingMode,
    excluded: &[usize],
) -> Result<SurvivingSetReport> {
    c.check_node(i)?;
    check_mask_width(c)?;
    for &e in excluded {
        c.check_node(e)?;
    }
    let live = |r: usize| r != i && !excluded.contains(&r);
    let lost = c.node(i);
    let options: Vec<Vec<usize>> = lost
        .iter()
        .map(|&j| c.holders(j).into_iter().filter(|&r| live(r)).collect())
        .collect();
    let choice_bound = lost
        .iter()
        .map(|&j| (c.rho_of(j) - 1) as u128)
        .fold(1u128, |acc, x| acc.saturating_mul(x));

    let mut sets = if options.iter().any(Vec::is_empty) {
        Vec::new()
    } else {
        match mode {
            SurvivingMode::ChoiceImage => choice_images(lost, &options),
            SurvivingMode::MinimalCover => {
                let mut neighbours: Vec<usize> = options.iter().flatten().map(|&r| r - 1).collect();
                neighbours.sort_unstable();
                neighbours.dedup();
                let mut target = PacketSet::empty(c.theta());
                lost.iter().for_each(|&j| target.insert(j - 1));
                minimal_sets(c, &neighbours, |u| target.is_subset(u), Strategy::Sequential)
                    .into_iter()
                    .map(|mask| smallest_holder_assignment(c, lost, &mask_to_nodes(mask)))
                    .collect()
            }
        }
    };
    sets.sort_by(|a, b| a.helpers.len().cmp(&b.helpers.len()).then_with(|| a.helpers.cmp(&b.helpers)));
    let d = sets.iter().map(SurvivingSet::degree).max().unwrap_or(0);
    Ok(SurvivingSetReport { node: i, mode, sets, d, choice_bound })
}

/// Distinct images of all choice functions, each with the lexicographically
/// smallest choice function producing it.
fn choice_images(lost: &[usize], options: &[Vec<usize>]) -> Vec<SurvivingSet> {
    struct Walk<'a> {
        options: &'a [Vec<usize>],
        choice: Vec<usize>,
        seen: HashSet<(usize, NodeMask)>,
        images: Vec<(NodeMask, Vec<usize>)>,
        image_seen: HashSet<NodeMask>,
    }
    impl Walk<'_> {
        fn go(&mut self, t: usize, mask: NodeMask) {
            // a repeated (position, image-so-far) state was reached earlier by
            // a lexicographically smaller prefix and reaches the same images
            if !self.seen.insert((t, mask)) {
                return;
            }
            if t == self.options.len() {
                if self.image_seen.insert(mask) {
                    self.images.push((mask, self.choice.clone()));
                }
                return;
            }
            for k in 0..self.options[t].len() {
                let r = self.options[t][k];
                self.choice.push(r);
                self.go(t + 1, mask | 1 << (r - 1));
                self.choice.pop();
            }
        }
    }
    let mut walk = Walk {
        options,
        choice: Vec::with_capacity(lost.len()),
        seen: HashSet::new(),
        images: Vec::new(),
        image_seen: HashSet::new(),
    };
    walk.go(0, 0);
    walk.images
        .into_iter()
        .map(|(mask, choice)| {
            let helpers = mask_to_nodes(mask);
            let downloads = helpers
                .iter()
                .map(|&h| HelperDownload {
                    helper: h,
                    packets: lost.iter().zip(&choice).filter(|(_, &r)| r == h).map(|(&j, _)| j).collect(),
                })
                .collect();
            SurvivingSet { helpers, downloads }
        })
        .collect()
}

/// Assigns each lost packet to the lowest-indexed helper holding it.
fn smallest_holder_assignment(c: &FrCode, lost: &[usize], helpers: &[usize]) -> SurvivingSet {
    let mut downloads: Vec<HelperDownload> =
        helpers.iter().map(|&h| HelperDownload { helper: h, packets: Vec::new() }).collect();
    for &j in lost {
        let slot = helpers
            .iter()
            .position(|&h| c.masks()[h - 1].contains(j - 1))
            .expect("helpers cover the lost packets");
        downloads[slot].packets.push(j);
    }
    SurvivingSet { helpers: helpers.to_vec(), downloads }
}

/// Per-node maximum repair degrees `d_i` and `d = max d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairDegrees {
    pub per_node: Vec<usize>,
    pub max: usize,
}

pub fn repair_degrees(c: &FrCode) -> Result<RepairDegrees> {
    repair_degrees_with_mode(c, SurvivingMode::ChoiceImage)
}

pub fn repair_degrees_with_mode(c: &FrCode, mode: SurvivingMode) -> Result<RepairDegrees> {
    let mut per_node = Vec::with_capacity(c.n());
    for i in 1..=c.n() {
        if let Some(&j) = c.node(i).iter().find(|&&j| c.rho_of(j) == 1) {
            return Err(Error::Unrepairable { node: i, packet: j });
        }
        per_node.push(surviving_sets_with_mode(c, i, mode)?.d);
    }
    let max = per_node.iter().copied().max().unwrap_or(0);
    Ok(RepairDegrees { per_node, max })
}

/// Repair bandwidth `gamma` of node `i` through `s`, after checking that the
/// assignment is a valid repair.
pub fn repair_bandwidth(c: &FrCode, i: usize, s: &SurvivingSet) -> Result<usize> {
    c.check_node(i)?;
    fn invalid<T>(msg: String) -> Result<T> {
        Err(Error::InvalidSurvivingSet(msg))
    }
    if s.helpers.is_empty() {
        return invalid("no helpers".into());
    }
    if s.helpers.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("helpers must be strictly ascending".into());
    }
    for &h in &s.helpers {
        if c.check_node(h).is_err() {
            return invalid(format!("helper {h} out of range"));
        }
        if h == i {
            return invalid(format!("node {i} cannot help itself"));
        }
    }
    let listed: Vec<usize> = s.downloads.iter().map(|d| d.helper).collect();
    if listed != s.helpers {
        return invalid("downloads must list each helper once, in order".into());
    }
    let mut received = PacketSet::empty(c.theta());
    for d in &s.downloads {
        if d.packets.is_empty() {
            return invalid(format!("helper {} sends nothing", d.helper));
        }
        for &j in &d.packets {
            if j == 0 || j > c.theta() || !c.node(i).contains(&j) {
                return invalid(format!("packet {j} is not stored on node {i}"));
            }
            if !c.node(d.helper).contains(&j) {
                return invalid(format!("helper {} does not hold packet {j}", d.helper));
            }
            if received.contains(j - 1) {
                return invalid(format!("packet {j} downloaded twice"));
            }
            received.insert(j - 1);
        }
    }
    if received.count() != c.alpha_of(i) {
        return invalid(format!("assignment does not restore all of node {i}"));
    }
    Ok(s.gamma())
}

/// `R_C(k) = D(k) / sum rho_j`.
pub fn fr_code_rate(c: &FrCode, k: usize) -> Result<Rate> {
    Ok(rate(code_dimension(c, k)?.value, c.total_storage()))
}

/// `R_DSS(k) = k / n`.
pub fn dss_code_rate(n: usize, k: usize) -> Result<Rate> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(rate(k, n))
}

/// Number of simultaneous node failures always survived: `min rho_j - 1`.
pub fn tolerance(c: &FrCode) -> usize {
    c.params().rho_min - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{table_five, table_one, table_seven};

    fn code(sets: &[&[usize]], theta: usize) -> FrCode {
        FrCode::new(sets, theta).unwrap()
    }

    #[test]
    fn dimension_of_table_one() {
        let d = code_dimension(&table_one(), 3).unwrap();
        assert_eq!(d.value, 7);
        assert_eq!(d.witness, vec![4, 5, 6]);
        assert_eq!(code_dimension(&table_one(), 6).unwrap().value, 10);
    }

    #[test]
    fn dimension_of_table_five() {
        let c = table_five();
        let values: Vec<usize> = (2..=4).map(|k| code_dimension(&c, k).unwrap().value).collect();
        assert_eq!(values, vec![7, 9, 10]);
    }

    #[test]
    fn dimension_rejects_bad_k() {
        let c = table_one();
        assert_eq!(code_dimension(&c, 0), Err(Error::KOutOfRange { k: 0, n: 6 }));
        assert_eq!(code_dimension(&c, 7), Err(Error::KOutOfRange { k: 7, n: 6 }));
    }

    #[test]
    fn strategies_agree() {
        let c = table_one();
        for k in 1..=6 {
            assert_eq!(
                code_dimension_with(&c, k, Strategy::Sequential),
                code_dimension_with(&c, k, Strategy::Parallel)
            );
        }
        assert_eq!(
            reconstruction_sets_with(&c, 7, Strategy::Sequential),
            reconstruction_sets_with(&c, 7, Strategy::Parallel)
        );
    }

    #[test]
    fn profile_starts_at_zero() {
        assert_eq!(dimension_profile(&table_seven()), vec![0, 2, 3, 4, 5, 6, 6]);
    }

    #[test]
    fn reconstruction_for_b_seven() {
        let r = reconstruction_sets(&table_one(), 7).unwrap();
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 2],
            vec![1, 3],
            vec![1, 6],
            vec![2, 3],
            vec![2, 6],
            vec![3, 5],
            vec![1, 4, 5],
            vec![2, 4, 5],
            vec![3, 4, 6],
            vec![4, 5, 6],
        ];
        assert_eq!(r.sets, expected);
        assert_eq!(r.eta(), 10);
        assert_eq!((r.k_max, r.k_guarantee), (3, 3));
    }

    #[test]
    fn reconstruction_b_one_is_singletons() {
        let r = reconstruction_sets(&table_one(), 1).unwrap();
        assert_eq!(r.sets, (1..=6).map(|i| vec![i]).collect::<Vec<_>>());
        assert_eq!(max_reconstruction_degree(&table_one(), 1).unwrap(), (1, 1));
    }

    #[test]
    fn reconstruction_range() {
        assert_eq!(
            reconstruction_sets(&table_one(), 11),
            Err(Error::BOutOfRange { b: 11, theta: 10 })
        );
        assert_eq!(
            min_k_union(&table_one(), 11),
            Err(Error::NoReconstructionSet { b: 11, theta: 10 })
        );
    }

    #[test]
    fn min_union() {
        assert_eq!(min_k_union(&table_one(), 7).unwrap(), 7);
        assert_eq!(min_k_union(&table_one(), 10).unwrap(), 10);
    }

    #[test]
    fn guarantee_for_table_five() {
        assert_eq!(max_reconstruction_degree(&table_five(), 10).unwrap().1, 4);
    }

    #[test]
    fn surviving_sets_of_node_six() {
        let r = surviving_sets(&table_one(), 6).unwrap();
        let helpers: Vec<_> = r.sets.iter().map(|s| s.helpers.clone()).collect();
        assert_eq!(helpers, vec![vec![3, 5], vec![3, 4, 5]]);
        let first = &r.sets[0];
        assert_eq!(first.downloads[0], HelperDownload { helper: 3, packets: vec![8, 9] });
        assert_eq!(first.downloads[1], HelperDownload { helper: 5, packets: vec![10] });
        assert_eq!((first.beta(3), first.beta(5)), (2, 1));
        assert_eq!(r.d, 3);
        assert_eq!(r.choice_bound, 2);
    }

    #[test]
    fn surviving_sets_of_node_one() {
        let r = surviving_sets(&table_one(), 1).unwrap();
        assert_eq!(r.sets.len(), 1);
        assert_eq!(r.sets[0].helpers, vec![2, 3, 4, 5]);
        assert!(r.sets[0].downloads.iter().all(|d| d.beta() == 1));
        assert_eq!(r.d, 4);
    }

    #[test]
    fn surviving_path_code() {
        let c = code(&[&[1], &[1, 2], &[2]], 2);
        let r = surviving_sets(&c, 2).unwrap();
        assert_eq!(r.sets.len(), 1);
        assert_eq!(r.sets[0].helpers, vec![1, 3]);
        assert!(surviving_sets(&c, 4).is_err());
    }

    #[test]
    fn minimal_cover_mode_drops_non_minimal_sets() {
        let r = surviving_sets_with_mode(&table_one(), 6, SurvivingMode::MinimalCover).unwrap();
        let helpers: Vec<_> = r.sets.iter().map(|s| s.helpers.clone()).collect();
        assert_eq!(helpers, vec![vec![3, 5]]);
        assert_eq!(repair_bandwidth(&table_one(), 6, &r.sets[0]), Ok(3));
    }

    #[test]
    fn unrepairable_nodes() {
        let c = code(&[&[1], &[2]], 2);
        assert_eq!(repair_degrees(&c), Err(Error::Unrepairable { node: 1, packet: 1 }));
        assert!(surviving_sets(&c, 1).unwrap().sets.is_empty());
        assert_eq!(tolerance(&c), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(repair_degrees(&table_one()).unwrap().per_node, vec![4, 4, 4, 3, 3, 3]);
        assert_eq!(repair_degrees(&table_one()).unwrap().max, 4);
        assert_eq!(repair_degrees(&table_five()).unwrap().per_node, vec![4; 5]);
    }

    #[test]
    fn bandwidth_equals_capacity() {
        let c = table_one();
        for i in 1..=6 {
            for s in surviving_sets(&c, i).unwrap().sets {
                assert_eq!(repair_bandwidth(&c, i, &s).unwrap(), c.alpha_of(i));
            }
        }
    }

    #[test]
    fn bandwidth_rejects_bad_assignments() {
        let c = table_one();
        let mut s = surviving_sets(&c, 6).unwrap().sets[0].clone();
        s.downloads[0].packets = vec![8];
        assert!(matches!(repair_bandwidth(&c, 6, &s), Err(Error::InvalidSurvivingSet(_))));
        let bogus = SurvivingSet {
            helpers: vec![1],
            downloads: vec![HelperDownload { helper: 1, packets: vec![8] }],
        };
        assert!(matches!(repair_bandwidth(&c, 6, &bogus), Err(Error::InvalidSurvivingSet(_))));
        let selfish = SurvivingSet {
            helpers: vec![6],
            downloads: vec![HelperDownload { helper: 6, packets: vec![8, 9, 10] }],
        };
        assert!(matches!(repair_bandwidth(&c, 6, &selfish), Err(Error::InvalidSurvivingSet(_))));
    }

    #[test]
    fn rates() {
        assert_eq!(fr_code_rate(&table_one(), 3).unwrap(), rate(7, 21));
        assert_eq!(fr_code_rate(&table_five(), 2).unwrap(), rate(7, 20));
        assert_eq!(fr_code_rate(&table_seven(), 4).unwrap(), rate(5, 12));
        assert_eq!(dss_code_rate(5, 3).unwrap(), rate(3, 5));
        assert_eq!(dss_code_rate(6, 5).unwrap(), rate(5, 6));
        assert_eq!(dss_code_rate(4, 4).unwrap(), Rate::from_integer(1));
        assert!(dss_code_rate(4, 5).is_err());
    }

    #[test]
    fn tolerances() {
        assert_eq!(tolerance(&table_one()), 1);
        assert_eq!(tolerance(&table_five()), 1);
    }
}
