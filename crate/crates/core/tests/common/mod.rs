#![allow(dead_code)]

pub mod oracle;

use frcode::FrCode;
use proptest::prelude::*;

/// Turns an arbitrary 0/1 pattern into a valid code: empty packets land on
/// node `j mod n`, empty nodes then take packet `i mod theta`.
fn repair_pattern(n: usize, theta: usize, bits: Vec<bool>) -> FrCode {
    let mut sets: Vec<Vec<usize>> = (0..n)
        .map(|i| (1..=theta).filter(|&j| bits[i * theta + j - 1]).collect())
        .collect();
    for j in 1..=theta {
        if !sets.iter().any(|s| s.contains(&j)) {
            sets[(j - 1) % n].push(j);
        }
    }
    for (i, s) in sets.iter_mut().enumerate() {
        if s.is_empty() {
            s.push(i % theta + 1);
        }
    }
    FrCode::new(&sets, theta).expect("pattern repaired into a valid code")
}

pub fn code(max_n: usize, max_theta: usize) -> impl Strategy<Value = FrCode> {
    (1..=max_n, 1..=max_theta).prop_flat_map(|(n, theta)| {
        prop::collection::vec(prop::bool::weighted(0.35), n * theta)
            .prop_map(move |bits| repair_pattern(n, theta, bits))
    })
}

/// Codes in which every packet has at least two replicas.
pub fn reliable_code(max_n: usize, max_theta: usize) -> impl Strategy<Value = FrCode> {
    (2..=max_n, 1..=max_theta).prop_flat_map(|(n, theta)| {
        prop::collection::vec(prop::bool::weighted(0.35), n * theta).prop_map(move |bits| {
            let c = repair_pattern(n, theta, bits);
            let mut sets = c.nodes().to_vec();
            for j in 1..=theta {
                if c.holders(j).len() == 1 {
                    let holder = c.holders(j)[0];
                    let other = if holder == n { 1 } else { holder + 1 };
                    sets[other - 1].push(j);
                }
            }
            FrCode::new(&sets, theta).expect("adding replicas keeps the code valid")
        })
    })
}
