//! Two-row set partitions, non-crossing detection and the linear maps
//! `T_P : (C^n)^{⊗k} -> (C^n)^{⊗l}` they define.
//!
//! A partition in `Part(k, l)` has `k` upper and `l` lower points. Points are
//! stored as indices `0..k` (upper, left to right) followed by `k..k+l`
//! (lower, left to right). Crossings are judged in the cyclic boundary order
//! upper `1..k`, then lower `l..1`.
//!
//! Multi-indices are ordered lexicographically with the leftmost tensor
//! factor most significant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("partitions have different shapes")]
    MixedShapes,
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("dimension n must be at least 1")]
    ZeroDimension,
}

/// Size limits for enumeration and matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum `k + l` for enumeration.
    pub max_points: usize,
    /// Maximum `n^(k+l)` for matrices and rank computations.
    pub max_entries: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_points: 12,
            max_entries: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    k: usize,
    l: usize,
    /// Block index of every point, numbered by first occurrence.
    labels: Vec<usize>,
}

impl Partition {
    /// From a block label per point; labels are renumbered by first occurrence.
    pub fn from_labels(k: usize, l: usize, labels: &[usize]) -> Result<Self, PartitionError> {
        if labels.len() != k + l {
            return Err(PartitionError::Invalid(format!(
                "expected {} labels, got {}",
                k + l,
                labels.len()
            )));
        }
        let mut renumber: Vec<(usize, usize)> = Vec::new();
        let labels = labels
            .iter()
            .map(|&x| match renumber.iter().find(|(old, _)| *old == x) {
                Some((_, new)) => *new,
                None => {
                    let new = renumber.len();
                    renumber.push((x, new));
                    new
                }
            })
            .collect();
        Ok(Self { k, l, labels })
    }

    /// From explicit blocks of point indices (`0..k` upper, `k..k+l` lower).
    pub fn from_blocks(k: usize, l: usize, blocks: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut labels = vec![usize::MAX; k + l];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::Invalid("empty block".into()));
            }
            for &p in block {
                if p >= k + l {
                    return Err(PartitionError::Invalid(format!("point {p} out of range")));
                }
                if labels[p] != usize::MAX {
                    return Err(PartitionError::Invalid(format!("point {p} in two blocks")));
                }
                labels[p] = b;
            }
        }
        if let Some(p) = labels.iter().position(|&x| x == usize::MAX) {
            return Err(PartitionError::Invalid(format!("point {p} not covered")));
        }
        Self::from_labels(k, l, &labels)
    }

    /// The pairing joining upper point `i` with lower point `i`.
    pub fn identity(k: usize) -> Self {
        let labels: Vec<usize> = (0..k).chain(0..k).collect();
        Self { k, l: k, labels }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks in order of their first point, points ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (p, &b) in self.labels.iter().enumerate() {
            blocks[b].push(p);
        }
        blocks
    }

    pub fn is_pairing(&self) -> bool {
        self.blocks().iter().all(|b| b.len() == 2)
    }

    /// Position of a point in the cyclic boundary order.
    fn cyclic_position(&self, point: usize) -> usize {
        if point < self.k {
            point
        } else {
            self.k + (self.l - 1 - (point - self.k))
        }
    }
}

/// `{1u,2u|1d}`: blocks separated by `|`, upper points suffixed `u`,
/// lower points `d`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&p| {
                        if p < self.k {
                            format!("{}u", p + 1)
                        } else {
                            format!("{}d", p - self.k + 1)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// No two blocks interleave in the cyclic boundary order.
pub fn is_noncrossing(p: &Partition) -> bool {
    let total = p.k + p.l;
    let mut by_position = vec![0usize; total];
    let mut last = vec![0usize; p.block_count()];
    for point in 0..total {
        let pos = p.cyclic_position(point);
        by_position[pos] = p.labels[point];
    }
    for (pos, &b) in by_position.iter().enumerate() {
        last[b] = pos;
    }
    // Open blocks must close in stack order.
    let mut open: Vec<usize> = Vec::new();
    let mut started = vec![false; p.block_count()];
    for (pos, &b) in by_position.iter().enumerate() {
        if started[b] {
            if open.last() != Some(&b) {
                return false;
            }
        } else {
            started[b] = true;
            open.push(b);
        }
        if last[b] == pos {
            open.pop();
        }
    }
    true
}

/// All partitions of `k + l` points, restricted growth strings in
/// lexicographic order.
pub fn enumerate_partitions(
    k: usize,
    l: usize,
    noncrossing_only: bool,
    caps: &Caps,
) -> Result<Vec<Partition>, PartitionError> {
    let total = k + l;
    if total > caps.max_points {
        return Err(PartitionError::CapExceeded {
            what: "k + l",
            value: total as u128,
            cap: caps.max_points as u128,
        });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; total];
    fn rec(
        pos: usize,
        next_block: usize,
        k: usize,
        l: usize,
        nc: bool,
        labels: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if pos == labels.len() {
            let p = Partition {
                k,
                l,
                labels: labels.clone(),
            };
            if !nc || is_noncrossing(&p) {
                out.push(p);
            }
            return;
        }
        for b in 0..=next_block {
            labels[pos] = b;
            rec(pos + 1, next_block.max(b + 1), k, l, nc, labels, out);
        }
    }
    rec(0, 0, k, l, noncrossing_only, &mut labels, &mut out);
    Ok(out)
}

/// `1` iff every block of `p` is constant on the assigned values.
/// `upper` has length `k`, `lower` length `l`, values in `1..=n`.
pub fn indicator(p: &Partition, upper: &[usize], lower: &[usize]) -> u8 {
    assert_eq!(upper.len(), p.k, "upper multi-index length");
    assert_eq!(lower.len(), p.l, "lower multi-index length");
    let mut value = vec![None; p.block_count()];
    for (point, &b) in p.labels.iter().enumerate() {
        let v = if point < p.k {
            upper[point]
        } else {
            lower[point - p.k]
        };
        match value[b] {
            None => value[b] = Some(v),
            Some(w) if w != v => return 0,
            _ => {}
        }
    }
    1
}

/// Dense `n^l × n^k` 0/1 matrix of `T_P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMap {
    pub partition: Partition,
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl PartitionMap {
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.data[row * self.cols + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    /// TSV with a header naming the shape and index ordering.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# T_P k={} l={} n={} rows=lower multi-index cols=upper multi-index order=lex-leftmost-major partition={}\n",
            self.partition.k, self.partition.l, self.n, self.partition
        );
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Multi-index of `idx` with `len` digits in `1..=n`, leftmost most significant.
pub fn multi_index(mut idx: usize, len: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for d in digits.iter_mut().rev() {
        *d = idx % n + 1;
        idx /= n;
    }
    digits
}

fn check_entries(n: usize, points: usize, caps: &Caps) -> Result<(), PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroDimension);
    }
    let entries = (n as u128).checked_pow(points as u32).unwrap_or(u128::MAX);
    if entries > caps.max_entries {
        return Err(PartitionError::CapExceeded {
            what: "n^(k+l)",
            value: entries,
            cap: caps.max_entries,
        });
    }
    Ok(())
}

pub fn partition_map(p: &Partition, n: usize, caps: &Caps) -> Result<PartitionMap, PartitionError> {
    check_entries(n, p.k + p.l, caps)?;
    let rows = n.pow(p.l as u32);
    let cols = n.pow(p.k as u32);
    let mut data = Vec::with_capacity(rows * cols);
    let uppers: Vec<Vec<usize>> = (0..cols).map(|c| multi_index(c, p.k, n)).collect();
    for r in 0..rows {
        let lower = multi_index(r, p.l, n);
        for upper in &uppers {
            data.push(indicator(p, upper, &lower));
        }
    }
    Ok(PartitionMap {
        partition: p.clone(),
        n,
        rows,
        cols,
        data,
    })
}

/// Rank over the rationals of the span of the `T_P`, by fraction-free
/// (Bareiss) elimination.
pub fn span_rank(ps: &[Partition], n: usize, caps: &Caps) -> Result<usize, PartitionError> {
    let Some(first) = ps.first() else {
        return Ok(0);
    };
    if ps.iter().any(|p| p.k != first.k || p.l != first.l) {
        return Err(PartitionError::MixedShapes);
    }
    let rows = ps
        .iter()
        .map(|p| {
            partition_map(p, n, caps).map(|m| m.data.iter().map(|&x| BigInt::from(x)).collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
    Ok(bareiss_rank(rows))
}

/// Rank of an integer matrix given as rows.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}
