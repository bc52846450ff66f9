//! Deterministic repair simulator.
//!
//! Events are processed in order. Nodes failing in the same event cannot help
//! each other; every repair finishes before the next event starts. A node that
//! cannot be repaired stays absent for the rest of the run.

use std::fmt;

use crate::analysis::{surviving_sets_excluding, SurvivingMode, SurvivingSet};
use crate::bitset::NodeMask;
use crate::code::FrCode;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};

/// Ordered failure events; each event is a set of nodes failing together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureSchedule {
    pub events: Vec<Vec<usize>>,
}

impl FailureSchedule {
    pub fn new(events: Vec<Vec<usize>>) -> Self {
        FailureSchedule { events }
    }

    /// One single-node event per node, in node order.
    pub fn each_node(n: usize) -> Self {
        FailureSchedule { events: (1..=n).map(|i| vec![i]).collect() }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        for (e, event) in self.events.iter().enumerate() {
            for (pos, &i) in event.iter().enumerate() {
                if i == 0 || i > n {
                    return Err(Error::InvalidSchedule(format!(
                        "event {}: node {i} is outside 1..={n}",
                        e + 1
                    )));
                }
                if event[..pos].contains(&i) {
                    return Err(Error::InvalidSchedule(format!(
                        "event {}: node {i} listed twice",
                        e + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// How to pick among the available surviving sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Policy {
    /// Fewest helpers, ties broken lexicographically.
    #[default]
    MinDegree,
    /// Most helpers, ties broken lexicographically.
    MaxDegree,
    /// Lexicographically smallest helper list.
    Lexicographic,
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::MinDegree => "min-degree",
            Policy::MaxDegree => "max-degree",
            Policy::Lexicographic => "lexicographic",
        })
    }
}

impl Policy {
    fn choose(self, sets: Vec<SurvivingSet>) -> Option<SurvivingSet> {
        // `sets` arrive ordered by (size, helpers)
        match self {
            Policy::MinDegree => sets.into_iter().next(),
            Policy::MaxDegree => {
                let top = sets.iter().map(SurvivingSet::degree).max()?;
                sets.into_iter().find(|s| s.degree() == top)
            }
            Policy::Lexicographic => sets.into_iter().min_by(|a, b| a.helpers.cmp(&b.helpers)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Repaired {
        set: SurvivingSet,
        gamma: usize,
        /// Contents of the replacement node.
        restored: Vec<usize>,
    },
    /// `packet` has no live replica.
    Unrepairable { packet: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeRepair {
    pub node: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventLog {
    /// Failed nodes, ascending.
    pub failed: Vec<usize>,
    pub repairs: Vec<NodeRepair>,
    /// Total packets downloaded so far, this event included.
    pub cumulative_bandwidth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairLog {
    pub policy: Policy,
    pub seed: u64,
    pub events: Vec<EventLog>,
}

impl RepairLog {
    pub fn total_bandwidth(&self) -> usize {
        self.events.last().map_or(0, |e| e.cumulative_bandwidth)
    }

    pub fn all_repaired(&self) -> bool {
        self.events
            .iter()
            .flat_map(|e| &e.repairs)
            .all(|r| matches!(r.outcome, Outcome::Repaired { .. }))
    }
}

/// Replays `schedule` on `c`. `seed` is recorded in the log; the current
/// policies are deterministic and do not draw from it.
pub fn simulate(c: &FrCode, schedule: &FailureSchedule, policy: Policy, seed: u64) -> Result<RepairLog> {
    schedule.validate(c.n())?;
    let mut absent: Vec<usize> = Vec::new();
    let mut cumulative = 0;
    let mut events = Vec::with_capacity(schedule.events.len());
    for event in &schedule.events {
        let mut failed = event.clone();
        failed.sort_unstable();
        let mut down = failed.clone();
        down.extend(absent.iter().filter(|a| !failed.contains(a)));
        let mut repairs = Vec::with_capacity(failed.len());
        let mut lost_for_good = Vec::new();
        for &i in &failed {
            let others: Vec<usize> = down.iter().copied().filter(|&x| x != i).collect();
            let report = surviving_sets_excluding(c, i, SurvivingMode::ChoiceImage, &others)?;
            let outcome = match policy.choose(report.sets) {
                Some(set) => {
                    let gamma = set.gamma();
                    let mut restored: Vec<usize> =
                        set.downloads.iter().flat_map(|d| d.packets.iter().copied()).collect();
                    restored.sort_unstable();
                    debug_assert_eq!(restored, c.node(i));
                    cumulative += gamma;
                    Outcome::Repaired { set, gamma, restored }
                }
                None => {
                    let packet = *c
                        .node(i)
                        .iter()
                        .find(|&&j| c.holders(j).iter().all(|h| *h == i || others.contains(h)))
                        .expect("no surviving set means some packet lost every replica");
                    lost_for_good.push(i);
                    Outcome::Unrepairable { packet }
                }
            };
            repairs.push(NodeRepair { node: i, outcome });
        }
        absent.retain(|a| !failed.contains(a));
        absent.extend(lost_for_good);
        absent.sort_unstable();
        events.push(EventLog { failed, repairs, cumulative_bandwidth: cumulative });
    }
    Ok(RepairLog { policy, seed, events })
}

/// True iff every packet survives every simultaneous failure of `f` nodes.
pub fn verify_erasure_tolerance(c: &FrCode, f: usize) -> Result<bool> {
    Ok(fatal_failure(c, f)?.is_none())
}

/// The lexicographically first `f`-subset of nodes whose failure loses a
/// packet, if any.
pub fn fatal_failure(c: &FrCode, f: usize) -> Result<Option<Vec<usize>>> {
    fatal_failure_with(c, f, Strategy::default())
}

pub fn fatal_failure_with(c: &FrCode, f: usize, strategy: Strategy) -> Result<Option<Vec<usize>>> {
    let n = c.n();
    if f >= n {
        return Err(Error::FOutOfRange { f, n });
    }
    if n > NodeMask::BITS as usize {
        return Err(Error::TooManyNodes(n));
    }
    if f == 0 {
        return Ok(None);
    }
    let holders: Vec<NodeMask> = (1..=c.theta())
        .map(|j| c.holders(j).iter().fold(0, |m, &h| m | 1 << (h - 1)))
        .collect();
    let kills = |set: NodeMask| holders.iter().any(|&h| h & !set == 0);

    fn first_in<F: Fn(NodeMask) -> bool>(start: usize, n: usize, left: usize, acc: NodeMask, kills: &F) -> Option<NodeMask> {
        if left == 0 {
            return kills(acc).then_some(acc);
        }
        (start..=n - left).find_map(|v| first_in(v + 1, n, left - 1, acc | 1 << v, kills))
    }
    let hits = par::map_range(strategy, n - f + 1, |first| first_in(first + 1, n, f - 1, 1 << first, &kills));
    Ok(hits.into_iter().flatten().next().map(crate::bitset::mask_to_nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::tolerance;
    use crate::fixtures::table_one;

    fn single(c: &FrCode, node: usize, policy: Policy) -> NodeRepair {
        let log = simulate(c, &FailureSchedule::new(vec![vec![node]]), policy, 0).unwrap();
        log.events[0].repairs[0].clone()
    }

    fn repaired(r: &NodeRepair) -> (&SurvivingSet, usize) {
        match &r.outcome {
            Outcome::Repaired { set, gamma, .. } => (set, *gamma),
            other => panic!("expected repair, got {other:?}"),
        }
    }

    #[test]
    fn node_six_min_degree() {
        let r = single(&table_one(), 6, Policy::MinDegree);
        let (set, gamma) = repaired(&r);
        assert_eq!(set.helpers, vec![3, 5]);
        assert_eq!((set.beta(3), set.beta(5), gamma), (2, 1, 3));
    }

    #[test]
    fn node_six_max_degree() {
        let r = single(&table_one(), 6, Policy::MaxDegree);
        let (set, gamma) = repaired(&r);
        assert_eq!(set.helpers, vec![3, 4, 5]);
        assert_eq!((set.beta(3), set.beta(4), set.beta(5), gamma), (1, 1, 1, 3));
    }

    #[test]
    fn lexicographic_policy() {
        let r = single(&table_one(), 3, Policy::Lexicographic);
        assert_eq!(repaired(&r).0.helpers, vec![1, 2, 4, 6]);
    }

    #[test]
    fn simultaneous_failures() {
        let c = table_one();
        let log = simulate(&c, &FailureSchedule::new(vec![vec![4, 3], vec![4, 6]]), Policy::MinDegree, 7)
            .unwrap();
        assert_eq!(log.seed, 7);
        let first = &log.events[0];
        assert_eq!(first.failed, vec![3, 4]);
        assert_eq!(repaired(&first.repairs[0]).0.helpers, vec![1, 2, 6]);
        assert_eq!(repaired(&first.repairs[1]).0.helpers, vec![1, 2, 6]);
        let second = &log.events[1];
        assert!(second.repairs.iter().all(|r| matches!(r.outcome, Outcome::Repaired { .. })));
        // node 4 cannot take packet 8 from 6, nor 6 from 4: both fall back to node 3
        assert!(repaired(&second.repairs[0]).0.helpers.contains(&3));
        assert!(repaired(&second.repairs[1]).0.helpers.contains(&3));
        assert_eq!(log.total_bandwidth(), 4 + 3 + 3 + 3);
        assert!(log.all_repaired());
    }

    #[test]
    fn lost_packet_is_logged_and_node_stays_absent() {
        let c = table_one();
        let log = simulate(&c, &FailureSchedule::new(vec![vec![1, 2], vec![4]]), Policy::MinDegree, 0)
            .unwrap();
        let first = &log.events[0];
        assert_eq!(first.repairs[0].outcome, Outcome::Unrepairable { packet: 1 });
        assert_eq!(first.repairs[1].outcome, Outcome::Unrepairable { packet: 1 });
        // node 4 needs packet 3 (on node 1) and 6 (on node 2): both absent
        assert_eq!(log.events[1].repairs[0].outcome, Outcome::Unrepairable { packet: 3 });
        assert!(!log.all_repaired());
    }

    #[test]
    fn exact_repair_everywhere() {
        let c = table_one();
        for policy in [Policy::MinDegree, Policy::MaxDegree, Policy::Lexicographic] {
            let log = simulate(&c, &FailureSchedule::each_node(6), policy, 0).unwrap();
            for (i, e) in log.events.iter().enumerate() {
                match &e.repairs[0].outcome {
                    Outcome::Repaired { gamma, restored, .. } => {
                        assert_eq!(*gamma, c.alpha_of(i + 1));
                        assert_eq!(restored, c.node(i + 1));
                    }
                    other => panic!("{other:?}"),
                }
            }
        }
    }

    #[test]
    fn schedule_validation() {
        let c = table_one();
        let bad = FailureSchedule::new(vec![vec![7]]);
        assert!(matches!(simulate(&c, &bad, Policy::MinDegree, 0), Err(Error::InvalidSchedule(_))));
        let dup = FailureSchedule::new(vec![vec![2, 2]]);
        assert!(matches!(simulate(&c, &dup, Policy::MinDegree, 0), Err(Error::InvalidSchedule(_))));
    }

    #[test]
    fn tolerance_checks() {
        let c = table_one();
        assert_eq!(verify_erasure_tolerance(&c, 0), Ok(true));
        assert_eq!(verify_erasure_tolerance(&c, 1), Ok(true));
        assert_eq!(verify_erasure_tolerance(&c, 2), Ok(false));
        assert_eq!(fatal_failure(&c, 2).unwrap(), Some(vec![1, 2]));
        assert_eq!(verify_erasure_tolerance(&c, tolerance(&c)), Ok(true));
        assert_eq!(verify_erasure_tolerance(&c, 6), Err(Error::FOutOfRange { f: 6, n: 6 }));
        assert_eq!(
            fatal_failure_with(&c, 2, Strategy::Sequential),
            fatal_failure_with(&c, 2, Strategy::Parallel)
        );
    }
}
