//! The fractional repetition code data model.
//!
//! An [`FrCode`] places `theta` distinct packets on `n` storage nodes. Node `i`
//! holds the packet set `U_i`; packet `j` is replicated on `rho_j` nodes. All
//! public indices are 1-based, matching the usual `U_1..U_n`, `P_1..P_theta`
//! notation.

use crate::bitset::PacketSet;
use crate::error::{Error, Result};
use crate::rate::Rate;

/// A validated, immutable fractional repetition code.
#[derive(Clone, Debug)]
pub struct FrCode {
    theta: usize,
    nodes: Vec<Vec<usize>>,
    masks: Vec<PacketSet>,
    rho: Vec<usize>,
}

impl PartialEq for FrCode {
    fn eq(&self, other: &Self) -> bool {
        self.theta == other.theta && self.nodes == other.nodes
    }
}

impl Eq for FrCode {}

impl FrCode {
    /// Validates `node_sets` (1-based packet indices) against `theta`.
    ///
    /// Packet order inside a node is irrelevant; node order is kept.
    pub fn new<S: AsRef<[usize]>>(node_sets: &[S], theta: usize) -> Result<Self> {
        if node_sets.is_empty() {
            return Err(Error::NoNodes);
        }
        let mut nodes = Vec::with_capacity(node_sets.len());
        let mut masks = Vec::with_capacity(node_sets.len());
        let mut rho = vec![0usize; theta];
        for (i0, raw) in node_sets.iter().enumerate() {
            let node = i0 + 1;
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(Error::EmptyNode(node));
            }
            let mut mask = PacketSet::empty(theta);
            for &index in raw {
                if index == 0 || index > theta {
                    return Err(Error::IndexOutOfRange { node, index, theta });
                }
                if mask.contains(index - 1) {
                    return Err(Error::DuplicatePacket { node, packet: index });
                }
                mask.insert(index - 1);
                rho[index - 1] += 1;
            }
            let mut sorted = raw.to_vec();
            sorted.sort_unstable();
            nodes.push(sorted);
            masks.push(mask);
        }
        if let Some(j0) = rho.iter().position(|&r| r == 0) {
            return Err(Error::OrphanPacket(j0 + 1));
        }
        let code = FrCode { theta, nodes, masks, rho };
        debug_assert_eq!(
            code.rho.iter().sum::<usize>(),
            code.nodes.iter().map(Vec::len).sum::<usize>()
        );
        Ok(code)
    }

    /// Number of storage nodes.
    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    /// Number of distinct packets.
    pub fn theta(&self) -> usize {
        self.theta
    }

    /// All node packet sets, each sorted ascending.
    pub fn nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }

    /// Packet set of node `i` (1-based).
    ///
    /// Panics if `i` is out of range.
    pub fn node(&self, i: usize) -> &[usize] {
        &self.nodes[i - 1]
    }

    /// `alpha_i = |U_i|` (1-based).
    pub fn alpha_of(&self, i: usize) -> usize {
        self.nodes[i - 1].len()
    }

    /// `rho_j`, the replication factor of packet `j` (1-based).
    pub fn rho_of(&self, j: usize) -> usize {
        self.rho[j - 1]
    }

    /// Nodes holding packet `j`, ascending.
    pub fn holders(&self, j: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i0| self.masks[i0].contains(j - 1)).map(|i0| i0 + 1).collect()
    }

    /// `sum_i alpha_i`, which equals `sum_j rho_j`.
    pub fn total_storage(&self) -> usize {
        self.rho.iter().sum()
    }

    /// Checks that `i` names a node.
    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::NodeOutOfRange { node: i, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Checks `1 <= k <= n`.
    pub fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n() {
            Err(Error::KOutOfRange { k, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn masks(&self) -> &[PacketSet] {
        &self.masks
    }

    /// Incidence matrix view.
    pub fn to_matrix(&self) -> NpdiMatrix {
        let mut entries = vec![0u8; self.n() * self.theta];
        for (i0, node) in self.nodes.iter().enumerate() {
            for &j in node {
                entries[i0 * self.theta + j - 1] = 1;
            }
        }
        NpdiMatrix { rows: self.n(), cols: self.theta, entries }
    }

    /// Builds a code from an incidence matrix.
    pub fn from_matrix(m: &NpdiMatrix) -> Result<Self> {
        for row in 0..m.rows {
            for col in 0..m.cols {
                let value = m.get(row, col);
                if value > 1 {
                    return Err(Error::NonBinaryEntry { row: row + 1, col: col + 1, value });
                }
            }
        }
        if let Some(row) = (0..m.rows).find(|&r| m.row_weight(r) == 0) {
            return Err(Error::ZeroRow(row + 1));
        }
        if let Some(col) = (0..m.cols).find(|&c| m.col_weight(c) == 0) {
            return Err(Error::ZeroColumn(col + 1));
        }
        let sets: Vec<Vec<usize>> = (0..m.rows)
            .map(|r| (0..m.cols).filter(|&c| m.get(r, c) == 1).map(|c| c + 1).collect())
            .collect();
        FrCode::new(&sets, m.cols)
    }

    /// The transposed code: packets become nodes and vice versa.
    pub fn dual(&self) -> FrCode {
        let sets: Vec<Vec<usize>> = (1..=self.theta).map(|j| self.holders(j)).collect();
        FrCode::new(&sets, self.n()).expect("transpose of a valid code is valid")
    }

    /// Storage and replication parameters.
    pub fn params(&self) -> CodeParams {
        let per_node_alpha: Vec<usize> = self.nodes.iter().map(Vec::len).collect();
        let per_packet_rho = self.rho.clone();
        let total_storage = self.total_storage();
        CodeParams {
            alpha: *per_node_alpha.iter().max().unwrap(),
            alpha_min: *per_node_alpha.iter().min().unwrap(),
            rho: *per_packet_rho.iter().max().unwrap(),
            rho_min: *per_packet_rho.iter().min().unwrap(),
            rho_ave: Rate::new(total_storage as i64, self.theta as i64),
            total_storage,
            per_node_alpha,
            per_packet_rho,
        }
    }

    /// True when every node stores the same number of packets and every
    /// packet has the same replication factor.
    pub fn is_symmetric(&self) -> bool {
        let p = self.params();
        p.alpha == p.alpha_min && p.rho == p.rho_min
    }
}

/// Derived storage and replication parameters of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub alpha: usize,
    pub alpha_min: usize,
    pub per_node_alpha: Vec<usize>,
    pub rho: usize,
    pub rho_min: usize,
    pub per_packet_rho: Vec<usize>,
    pub total_storage: usize,
    /// `total_storage / theta`.
    pub rho_ave: Rate,
}

/// Node packet distribution incidence matrix: `n` rows by `theta` columns,
/// entry `(i, j)` is 1 iff node `i` stores packet `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NpdiMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl NpdiMatrix {
    /// Accepts any rectangular array; binariness is checked by
    /// [`FrCode::from_matrix`].
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::RaggedMatrix { row: r + 1, expected: cols, found: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Ok(NpdiMatrix { rows: rows.len(), cols, entries })
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![0u8; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        NpdiMatrix { rows: size, cols: size, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_weight(&self, row: usize) -> usize {
        self.row(row).iter().filter(|&&v| v != 0).count()
    }

    pub fn col_weight(&self, col: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, col) != 0).count()
    }

    pub fn transpose(&self) -> NpdiMatrix {
        let mut entries = vec![0u8; self.entries.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[c * self.rows + r] = self.get(r, c);
            }
        }
        NpdiMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Block-diagonal `[[self, 0], [0, other]]`.
    pub fn block_diagonal(&self, other: &NpdiMatrix) -> NpdiMatrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut entries = vec![0u8; rows * cols];
        for r in 0..self.rows {
            entries[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            let start = (self.rows + r) * cols + self.cols;
            entries[start..start + other.cols].copy_from_slice(other.row(r));
        }
        NpdiMatrix { rows, cols, entries }
    }
}
