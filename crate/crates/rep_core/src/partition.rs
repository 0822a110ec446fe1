use std::fmt;

use crate::error::RepError;

/// A Young diagram with at most `d` rows. Rows are stored padded to length `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<i64>,
}

impl Partition {
    /// Builds a partition, padding with zero rows up to `d`.
    pub fn new(rows: &[i64], d: usize) -> Result<Self, RepError> {
        if !validate_partition(rows, d) {
            return Err(RepError::InvalidPartition(format!(
                "rows {rows:?} must be non-negative, weakly decreasing and at most {d} long"
            )));
        }
        let mut padded = rows.to_vec();
        padded.resize(d, 0);
        Ok(Self { rows: padded })
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> i64 {
        self.rows.iter().sum()
    }

    /// Row differences `(P, Q)` for d = 3; `(2j, 0)` for d = 2.
    pub fn pq(&self) -> (i64, i64) {
        match self.rows.as_slice() {
            [a, b] => (a - b, 0),
            [a, b, c] => (a - b, b - c),
            _ => (self.rows[0], 0),
        }
    }

    /// Adds one box to row `row` if the result is still a diagram.
    pub fn with_box(&self, row: usize) -> Option<Self> {
        if row >= self.rows.len() || (row > 0 && self.rows[row - 1] == self.rows[row]) {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[row] += 1;
        Some(Self { rows })
    }

    /// Removes one box from row `row` if the result is still a diagram.
    pub fn without_box(&self, row: usize) -> Option<Self> {
        let r = &self.rows;
        if row >= r.len() || r[row] == 0 || (row + 1 < r.len() && r[row + 1] == r[row]) {
            return None;
        }
        let mut rows = r.clone();
        rows[row] -= 1;
        Some(Self { rows })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// True iff `rows` is weakly decreasing, non-negative and has length at most `d`.
pub fn validate_partition(rows: &[i64], d: usize) -> bool {
    rows.len() <= d && rows.iter().all(|&r| r >= 0) && rows.windows(2).all(|w| w[0] >= w[1])
}

/// Dimension of the symmetric-group irrep: `n!` over the product of hook lengths.
pub fn hook_dimension_sn(p: &Partition) -> u128 {
    let rows: Vec<i64> = p.rows().iter().copied().filter(|&r| r > 0).collect();
    let n = rows.iter().sum::<i64>() as u128;
    let mut hooks: u128 = 1;
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&r| r > j).count() as i64;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n).product::<u128>() / hooks
}

/// Number of box-addition sequences (standard tableaux) that build `p`.
pub fn count_paths_to(p: &Partition) -> u128 {
    if p.n() <= 1 {
        return 1;
    }
    (0..p.d())
        .filter_map(|row| p.without_box(row))
        .map(|q| count_paths_to(&q))
        .sum()
}

/// All partitions of `n` with at most `d` rows, in decreasing lexicographic order.
pub fn partitions(n: i64, d: usize) -> Vec<Partition> {
    fn rec(rem: i64, max: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for r in (1..=max.min(rem)).rev() {
            cur.push(r);
            rec(rem - r, r, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, d, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|rows| Partition::new(&rows, d).expect("generated partitions are valid"))
        .collect()
}
