//! Code constructions (concatenation, m-fold, complete graph, cycle) and the
//! rate identities for concatenated codes.

use crate::analysis::dimension_profile_with;
use crate::code::{FrCode, NpdiMatrix};
use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::rate::{rate, Rate};

/// Block-diagonal concatenation. Nodes of `c2` follow those of `c1`, and
/// packets of `c2` are shifted by `c1.theta()`.
pub fn concatenate(c1: &FrCode, c2: &FrCode) -> FrCode {
    let shift = c1.theta();
    let sets: Vec<Vec<usize>> = c1
        .nodes()
        .iter()
        .cloned()
        .chain(c2.nodes().iter().map(|u| u.iter().map(|&j| j + shift).collect()))
        .collect();
    FrCode::new(&sets, c1.theta() + c2.theta()).expect("disjoint union of valid codes")
}

/// `m` disjoint copies: `M(1) = M`, `M(r+1) = [[M, 0], [0, M(r)]]`.
pub fn m_fold(c: &FrCode, m: usize) -> Result<FrCode> {
    if m == 0 {
        return Err(Error::BadFold(m));
    }
    let mut acc = c.clone();
    for _ in 1..m {
        acc = concatenate(c, &acc);
    }
    Ok(acc)
}

/// Incidence matrix `W` of the complete graph on `alpha + 1` vertices,
/// built by `W(a) = [[1_a, 0], [I_a, W(a-1)]]` from the two-row base.
pub fn complete_graph_matrix(alpha: usize) -> Result<NpdiMatrix> {
    if alpha == 0 {
        return Err(Error::BadAlpha(alpha));
    }
    let mut rows: Vec<Vec<u8>> = vec![vec![1], vec![1]];
    for a in 2..=alpha {
        let lower = rows;
        let inner_cols = lower[0].len();
        let mut top = vec![1u8; a];
        top.resize(a + inner_cols, 0);
        rows = vec![top];
        for (r, inner) in lower.into_iter().enumerate() {
            let mut row = vec![0u8; a];
            row[r] = 1;
            row.extend(inner);
            rows.push(row);
        }
    }
    NpdiMatrix::from_rows(&rows)
}

/// Code whose nodes are the vertices and packets the edges of the complete
/// graph on `alpha + 1` vertices: `n = alpha + 1`, `theta = C(alpha + 1, 2)`,
/// every packet on two nodes.
pub fn complete_graph_code(alpha: usize) -> Result<FrCode> {
    FrCode::from_matrix(&complete_graph_matrix(alpha)?)
}

/// `U_i = {i, i mod n + 1}`.
pub fn cycle_code(n: usize) -> Result<FrCode> {
    if n < 3 {
        return Err(Error::BadN(n));
    }
    let sets: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
    FrCode::new(&sets, n)
}

/// Equivalence of two codes in which every packet has exactly two replicas:
/// such a code is a multigraph on its nodes, so this is multigraph
/// isomorphism by backtracking. Intended for small codes.
pub fn equivalent_rho_two(a: &FrCode, b: &FrCode) -> Result<bool> {
    for c in [a, b] {
        if let Some(j) = (1..=c.theta()).find(|&j| c.rho_of(j) != 2) {
            return Err(Error::NotRhoTwo(j));
        }
    }
    if a.n() != b.n() || a.theta() != b.theta() {
        return Ok(false);
    }
    let adjacency = |c: &FrCode| {
        let mut adj = vec![vec![0usize; c.n()]; c.n()];
        for j in 1..=c.theta() {
            let h = c.holders(j);
            adj[h[0] - 1][h[1] - 1] += 1;
            adj[h[1] - 1][h[0] - 1] += 1;
        }
        adj
    };
    let (ga, gb) = (adjacency(a), adjacency(b));
    let mut degree_a: Vec<usize> = (1..=a.n()).map(|i| a.alpha_of(i)).collect();
    let mut degree_b: Vec<usize> = (1..=b.n()).map(|i| b.alpha_of(i)).collect();
    let (da, db) = (degree_a.clone(), degree_b.clone());
    degree_a.sort_unstable();
    degree_b.sort_unstable();
    if degree_a != degree_b {
        return Ok(false);
    }

    fn extend(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut [bool],
        ga: &[Vec<usize>],
        gb: &[Vec<usize>],
        da: &[usize],
        db: &[usize],
    ) -> bool {
        if v == ga.len() {
            return true;
        }
        for w in 0..gb.len() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            if (0..v).any(|u| ga[v][u] != gb[w][map[u]]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(v + 1, map, used, ga, gb, da, db) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    let mut map = Vec::with_capacity(a.n());
    let mut used = vec![false; b.n()];
    Ok(extend(0, &mut map, &mut used, &ga, &gb, &da, &db))
}

/// `min over k1 + k2 = k` of `D1(k1) + D2(k2)`, with `D(0) = 0`.
pub fn split_dimension(profile1: &[usize], profile2: &[usize], k: usize) -> usize {
    let n1 = profile1.len() - 1;
    let n2 = profile2.len() - 1;
    (k.saturating_sub(n2)..=k.min(n1)).map(|k1| profile1[k1] + profile2[k - k1]).min().expect("k <= n1 + n2")
}

/// Evaluation of the concatenation rate relations at one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatRateReport {
    pub k: usize,
    /// Storage weights `r_j = sum alpha^(j) / (sum alpha^(1) + sum alpha^(2))`.
    pub r1: Rate,
    pub r2: Rate,
    /// `1 / R_DSS(n, k)`.
    pub dss_lhs: Rate,
    /// Right-hand side with each `R_DSS(n_j, k)` read at `k mod n_j`.
    pub dss_rhs_mod: Rate,
    /// Right-hand side with `R_DSS(n_j, k) = k / n_j` taken literally.
    pub dss_rhs_literal: Rate,
    pub dss_identity_holds: bool,
    pub dss_literal_holds: bool,
    /// Dimension of the concatenated code by direct enumeration.
    pub dimension: usize,
    /// Dimension from the constituents' profiles.
    pub split_dimension: usize,
    pub fr_rate: Rate,
    /// `r1 R1(k) + r2 R2(k)` when `k < min(n1, n2)`, otherwise
    /// `min(r1 + r2 R2(k), r2 + r1 R1(k))` with `R_j` read at `min(k, n_j)`.
    pub fr_bound: Rate,
    /// Whether the `k >= min(n1, n2)` branch was used; there `R_j(k)` past
    /// `n_j` is read at `n_j`.
    pub uses_varrho: bool,
    pub fr_bound_holds: bool,
}

impl ConcatRateReport {
    pub fn holds(&self) -> bool {
        self.dss_identity_holds && self.fr_bound_holds && self.dimension == self.split_dimension
    }
}

pub fn concat_rate_report(c1: &FrCode, c2: &FrCode, k: usize) -> Result<ConcatRateReport> {
    let (n1, n2) = (c1.n(), c2.n());
    let n = n1 + n2;
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange { k, n: n - 1 });
    }
    let p1 = dimension_profile_with(c1, Strategy::default());
    let p2 = dimension_profile_with(c2, Strategy::default());
    let joined = concatenate(c1, c2);
    let dimension = crate::analysis::code_dimension(&joined, k)?.value;

    let (s1, s2) = (c1.total_storage(), c2.total_storage());
    let r1 = rate(s1, s1 + s2);
    let r2 = rate(s2, s1 + s2);

    let dss_lhs = rate(n, k);
    let term = |nj: usize, reading: Rate| (Rate::from((k / nj) as i64) + reading).recip();
    let dss_rhs_mod = term(n1, rate(k % n1, n1)) + term(n2, rate(k % n2, n2));
    let dss_rhs_literal = term(n1, rate(k, n1)) + term(n2, rate(k, n2));

    let rate1 = rate(p1[k.min(n1)], s1);
    let rate2 = rate(p2[k.min(n2)], s2);
    let fr_rate = rate(dimension, s1 + s2);
    let uses_varrho = k >= n1.min(n2);
    let fr_bound = if uses_varrho {
        (r1 + r2 * rate2).min(r2 + r1 * rate1)
    } else {
        r1 * rate1 + r2 * rate2
    };

    Ok(ConcatRateReport {
        k,
        r1,
        r2,
        dss_lhs,
        dss_rhs_mod,
        dss_rhs_literal,
        dss_identity_holds: dss_lhs == dss_rhs_mod,
        dss_literal_holds: dss_lhs == dss_rhs_literal,
        dimension,
        split_dimension: split_dimension(&p1, &p2, k),
        fr_rate,
        fr_bound,
        uses_varrho,
        fr_bound_holds: fr_rate <= fr_bound,
    })
}

/// Evaluation of the m-fold rate identities at one total degree, with
/// `k_total = q n + k`, `0 <= k < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfoldRateReport {
    pub m: usize,
    /// Number of nodes contacted in the m-fold code.
    pub k_total: usize,
    pub q: usize,
    pub k: usize,
    pub rho_ave: Rate,
    /// `k_total / (m n)`.
    pub dss_direct: Rate,
    /// `(q + k/n) / m`.
    pub dss_formula: Rate,
    /// `D_m(k_total) / (m sum alpha)` by direct enumeration on the m-fold code.
    pub fr_direct: Rate,
    /// `(q / rho_ave + R_C(k)) / m`, with `R_C(0) = 0`.
    pub fr_formula: Rate,
    /// `dss_direct - fr_direct`.
    pub difference_direct: Rate,
    /// `(q (1 - 1/rho_ave) + k/n - R_C(k)) / m`, the difference of the two
    /// formulas above.
    pub difference_formula: Rate,
    /// `(R_DSS(k) (1 - 1/rho_ave) - R_C(k)) / m`, the published variant that
    /// drops the `q` term. Reported, never asserted.
    pub difference_printed: Rate,
}

impl MfoldRateReport {
    pub fn dss_holds(&self) -> bool {
        self.dss_direct == self.dss_formula
    }

    pub fn fr_holds(&self) -> bool {
        self.fr_direct == self.fr_formula
    }

    /// The formula difference equals the direct difference.
    pub fn difference_holds(&self) -> bool {
        self.difference_direct == self.difference_formula
    }

    pub fn printed_agrees(&self) -> bool {
        self.difference_printed == self.difference_direct
    }

    pub fn holds(&self) -> bool {
        self.dss_holds() && self.fr_holds() && self.difference_holds()
    }
}

pub fn mfold_rate_report(c: &FrCode, m: usize, k_total: usize) -> Result<MfoldRateReport> {
    let folded = m_fold(c, m)?;
    if k_total == 0 || k_total >= folded.n() {
        return Err(Error::KOutOfRange { k: k_total, n: folded.n() - 1 });
    }
    let n = c.n();
    let (q, k) = (k_total / n, k_total % n);
    let rho_ave = c.params().rho_ave;
    let inv_m = rate(1, m);
    let profile = dimension_profile_with(c, Strategy::default());
    let r_k = rate(profile[k], c.total_storage());
    let dss_k = rate(k, n);
    let q_rate = Rate::from(q as i64);

    let dss_direct = rate(k_total, folded.n());
    let dss_formula = inv_m * (q_rate + dss_k);
    let fr_direct = rate(crate::analysis::code_dimension(&folded, k_total)?.value, folded.total_storage());
    let fr_formula = inv_m * (q_rate / rho_ave + r_k);
    let one = Rate::from(1);
    Ok(MfoldRateReport {
        m,
        k_total,
        q,
        k,
        rho_ave,
        dss_direct,
        dss_formula,
        fr_direct,
        fr_formula,
        difference_direct: dss_direct - fr_direct,
        difference_formula: inv_m * (q_rate * (one - rho_ave.recip()) + dss_k - r_k),
        difference_printed: inv_m * (dss_k * (one - rho_ave.recip()) - r_k),
    })
}
