use std::fmt;

use super::partition::Partition;

/// Standard Young tableau, English notation: `rows[r][c]` holds an entry of
/// `1..=n`, rows and columns strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// `(row, column)` of each entry, 0-based, indexed by `entry - 1`.
    cells: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect()).ok()?;
        let n = shape.size();
        let mut cells = vec![(usize::MAX, 0); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n || cells[x - 1].0 != usize::MAX {
                    return None;
                }
                cells[x - 1] = (r, c);
                if c > 0 && row[c - 1] >= x {
                    return None;
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return None;
                }
            }
        }
        Some(Self { shape, rows, cells })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// `(row, column)` of entry `i` (1-based entry, 0-based coordinates).
    pub fn cell(&self, i: usize) -> (usize, usize) {
        self.cells[i - 1]
    }

    /// Content `column - row` of entry `i`.
    pub fn content(&self, i: usize) -> i64 {
        let (r, c) = self.cells[i - 1];
        c as i64 - r as i64
    }

    /// The tableau with entries `i` and `i+1` exchanged, when still standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        let (r1, c1) = self.cells[i - 1];
        let (r2, c2) = self.cells[i];
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut t = self.clone();
        t.rows[r1][c1] = i + 1;
        t.rows[r2][c2] = i;
        t.cells.swap(i - 1, i);
        Some(t)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All standard tableaux of shape `shape`, ordered by the row index
/// sequence of the entries `1, 2, ..., n`.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        n: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau::from_rows(rows.clone()).expect("standard by construction"));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(shape.parts(), &mut rows, 1, shape.size(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::partitions;

    #[test]
    fn counts() {
        let counts: Vec<usize> = partitions(4)
            .iter()
            .map(|l| standard_tableaux(l).len())
            .collect();
        assert_eq!(counts, vec![1, 3, 2, 3, 1]);
        for n in 1..=7 {
            let total: usize = partitions(n)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn swaps_and_contents() {
        let t = StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.content(2), 1);
        assert_eq!(t.content(3), -1);
        assert!(t.swap(1).is_none());
        let s = t.swap(2).unwrap();
        assert_eq!(s.rows(), &[vec![1, 3], vec![2]]);
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_none());
    }
}
