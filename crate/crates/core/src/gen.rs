//! Random valid codes for property sweeps and benchmarks.

use rand::seq::index::sample;
use rand::Rng;

use crate::code::FrCode;

/// A random code with `1..=max_nodes` nodes (at least `min_rho`),
/// `1..=max_theta` packets and every packet on at least `min_rho` nodes.
/// Nodes left empty by the draw receive one extra replica of a random packet.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, max_nodes: usize, max_theta: usize, min_rho: usize) -> FrCode {
    let min_rho = min_rho.max(1);
    assert!(min_rho <= max_nodes && max_theta >= 1);
    let n = rng.gen_range(min_rho..=max_nodes);
    let theta = rng.gen_range(1..=max_theta);
    let mut sets = vec![Vec::new(); n];
    for j in 1..=theta {
        let rho = rng.gen_range(min_rho..=n.min(min_rho + 3));
        for i in sample(rng, n, rho) {
            sets[i].push(j);
        }
    }
    for set in sets.iter_mut().filter(|s| s.is_empty()) {
        set.push(rng.gen_range(1..=theta));
    }
    FrCode::new(&sets, theta).expect("generator keeps every invariant")
}

/// A random code in which every packet has at least two replicas and no two
/// nodes share more than one packet. Has `3..=max_nodes` nodes and at most
/// `max_packets + max_nodes` packets.
pub fn random_low_overlap_code<R: Rng + ?Sized>(rng: &mut R, max_nodes: usize, max_packets: usize) -> FrCode {
    assert!(max_nodes >= 3);
    let n = rng.gen_range(3..=max_nodes);
    let mut packets: Vec<Vec<usize>> = Vec::new();
    let attempts = rng.gen_range(1..=max_packets.max(1));
    for _ in 0..attempts {
        let rho = rng.gen_range(2..=n.min(3));
        let mut holders: Vec<usize> = sample(rng, n, rho).into_iter().collect();
        holders.sort_unstable();
        let shares_pair = packets
            .iter()
            .any(|p| p.iter().filter(|h| holders.contains(h)).count() > 1);
        if !shares_pair {
            packets.push(holders);
        }
    }
    for v in 0..n {
        if !packets.iter().any(|p| p.contains(&v)) {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            let mut pair = vec![v, u];
            pair.sort_unstable();
            packets.push(pair);
        }
    }
    let mut sets = vec![Vec::new(); n];
    for (j0, holders) in packets.iter().enumerate() {
        for &h in holders {
            sets[h].push(j0 + 1);
        }
    }
    FrCode::new(&sets, packets.len()).expect("generator keeps every invariant")
}
