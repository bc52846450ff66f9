//! Brute-force reference implementations. Everything here works from the raw
//! node lists with `u128` bitmasks and exhaustive loops, sharing no code with
//! the library's search kernels.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use frcode::FrCode;

/// A surviving set and the packets each helper sends.
pub type Survivor = (Vec<usize>, BTreeMap<usize, Vec<usize>>);

pub fn packet_masks(c: &FrCode) -> Vec<u128> {
    c.nodes()
        .iter()
        .map(|u| u.iter().fold(0u128, |m, &j| m | (1u128 << (j - 1))))
        .collect()
}

fn union_of(masks: &[u128], subset: u64) -> u128 {
    (0..masks.len()).filter(|i| subset >> i & 1 == 1).fold(0, |acc, i| acc | masks[i])
}

fn members(subset: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| subset >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `D(k)` and its witness: fewest distinct packets, then fewest stored
/// packets, then the lexicographically smallest node list.
pub fn dimension(c: &FrCode, k: usize) -> (usize, Vec<usize>) {
    let masks = packet_masks(c);
    let n = masks.len();
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for subset in 0u64..(1 << n) {
        if subset.count_ones() as usize != k {
            continue;
        }
        let nodes = members(subset, n);
        let key = (
            union_of(&masks, subset).count_ones() as usize,
            nodes.iter().map(|&i| c.node(i).len()).sum(),
            nodes,
        );
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    let (value, _, witness) = best.expect("1 <= k <= n");
    (value, witness)
}

pub fn profile(c: &FrCode) -> Vec<usize> {
    let mut out = vec![0];
    out.extend((1..=c.n()).map(|k| dimension(c, k).0));
    out
}

/// Inclusion-minimal node sets holding at least `b` distinct packets,
/// ordered by size then lexicographically.
pub fn reconstruction_sets(c: &FrCode, b: usize) -> Vec<Vec<usize>> {
    let masks = packet_masks(c);
    let n = masks.len();
    let enough = |s: u64| union_of(&masks, s).count_ones() as usize >= b;
    let mut out: Vec<Vec<usize>> = (0u64..(1 << n))
        .filter(|&s| enough(s))
        // sufficiency is monotone, so minimality only needs single removals
        .filter(|&s| (0..n).filter(|i| s >> i & 1 == 1).all(|i| !enough(s & !(1 << i))))
        .map(|s| members(s, n))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Images of every choice function for node `i`, each paired with the per-helper
/// packet lists of the lexicographically first choice function producing it.
pub fn surviving_sets(c: &FrCode, i: usize, excluded: &[usize]) -> Vec<Survivor> {
    let lost = c.node(i).to_vec();
    let options: Vec<Vec<usize>> = lost
        .iter()
        .map(|&j| {
            (1..=c.n())
                .filter(|&r| r != i && !excluded.contains(&r) && c.node(r).contains(&j))
                .collect()
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut seen: BTreeMap<BTreeSet<usize>, BTreeMap<usize, Vec<usize>>> = BTreeMap::new();
    let mut odometer = vec![0usize; lost.len()];
    loop {
        let image: BTreeSet<usize> = odometer.iter().zip(&options).map(|(&o, opts)| opts[o]).collect();
        seen.entry(image).or_insert_with(|| {
            let mut per: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for ((&o, opts), &j) in odometer.iter().zip(&options).zip(&lost) {
                per.entry(opts[o]).or_default().push(j);
            }
            per
        });
        // advance the last position first, so choices are visited in lexicographic order
        let mut t = lost.len();
        loop {
            if t == 0 {
                let mut out: Vec<Survivor> =
                    seen.into_iter().map(|(s, per)| (s.into_iter().collect(), per)).collect();
                out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
                return out;
            }
            t -= 1;
            odometer[t] += 1;
            if odometer[t] < options[t].len() {
                break;
            }
            odometer[t] = 0;
        }
    }
}

/// Helper sets that cover node `i` with no proper subset also covering it.
pub fn minimal_covers(c: &FrCode, i: usize) -> Vec<Vec<usize>> {
    let masks = packet_masks(c);
    let n = masks.len();
    let target = masks[i - 1];
    let covers = |s: u64| s >> (i - 1) & 1 == 0 && union_of(&masks, s) & target == target;
    let mut out: Vec<Vec<usize>> = (0u64..(1 << n))
        .filter(|&s| covers(s))
        .filter(|&s| (0..n).filter(|b| s >> b & 1 == 1).all(|b| !covers(s & !(1 << b))))
        .map(|s| members(s, n))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn binomial(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, t| acc * (a - t) as u128 / (t + 1) as u128)
}

/// `floor(sum_j (1 - C(n - rho_j, k) / C(n, k)))` in integer arithmetic.
pub fn dimension_upper_bound(c: &FrCode, k: usize) -> usize {
    let n = c.n();
    let total = binomial(n, k);
    let missing: u128 = (1..=c.theta()).map(|j| binomial(n - c.holders(j).len(), k)).sum();
    ((c.theta() as u128 * total - missing) / total) as usize
}

/// True iff no `f` failures erase every replica of some packet.
pub fn tolerates(c: &FrCode, f: usize) -> bool {
    let masks = packet_masks(c);
    let n = masks.len();
    let all = union_of(&masks, (1u64 << n) - 1);
    (0u64..(1 << n))
        .filter(|s| s.count_ones() as usize == f)
        .all(|s| union_of(&masks, ((1u64 << n) - 1) & !s) == all)
}

pub fn max_overlap(c: &FrCode) -> usize {
    let masks = packet_masks(c);
    let mut best = 0;
    for a in 0..masks.len() {
        for b in a + 1..masks.len() {
            best = best.max((masks[a] & masks[b]).count_ones() as usize);
        }
    }
    best
}
