use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Symmetric negative-definite integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    /// Validates symmetry and negative definiteness.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return domain("Gram matrix must have rank at least 1");
        }
        if entries.iter().any(|row| row.len() != n) {
            return domain("Gram matrix must be square");
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return domain(format!("Gram matrix is not symmetric at ({i},{j})"));
                }
            }
        }
        let g = GramMatrix { entries };
        for k in 1..=n {
            let minor = g.leading_minor(k);
            let signed = if k % 2 == 0 { minor } else { -minor };
            if signed <= 0 {
                return domain(format!("Gram matrix is not negative definite (leading minor {k} = {minor})"));
            }
        }
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The positive-definite negation `−G`.
    pub fn negated(&self) -> Vec<Vec<i64>> {
        self.entries.iter().map(|r| r.iter().map(|&x| -x).collect()).collect()
    }

    /// Determinant of the leading `k × k` block.
    pub fn leading_minor(&self, k: usize) -> i128 {
        let block: Vec<Vec<i128>> = self.entries[..k].iter().map(|r| r[..k].iter().map(|&x| x as i128).collect()).collect();
        bareiss_determinant(block)
    }

    pub fn determinant(&self) -> i128 {
        self.leading_minor(self.rank())
    }

    /// Reorder rows and columns: entry `(i, j)` of the result is `(perm[i], perm[j])` here.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.rank();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return domain("not a permutation of the matrix indices");
        }
        Ok(GramMatrix { entries: perm.iter().map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect()).collect() })
    }

    /// Text form: rank on the first line, then one space-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.rank());
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl FromStr for GramMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing rank line".into() })?;
        let n: usize = first.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("bad rank {first:?}") })?;
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in lines {
            if rows.len() == n {
                return Err(Error::Parse { line: line_no, msg: "more rows than the declared rank".into() });
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse { line: line_no, msg: format!("bad integer {t:?}") }))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse { line: line_no, msg: format!("expected {n} entries, found {}", row.len()) });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse { line: text.lines().count().max(1), msg: format!("expected {n} rows, found {}", rows.len()) });
        }
        GramMatrix::new(rows)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over the rationals of a list of integer vectors, by fraction-free row reduction.
pub fn integer_rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let p = rows[rank].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col];
            if factor == 0 {
                continue;
            }
            for c in 0..cols {
                rows[r][c] = rows[r][c] * p[col] - factor * p[c];
            }
            let g = rows[r].iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                rows[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GramMatrix::new(vec![vec![-1]]).is_ok());
        assert!(GramMatrix::new(vec![vec![1]]).is_err());
        assert!(GramMatrix::new(vec![vec![-2, 1], vec![0, -2]]).is_err());
        assert!(GramMatrix::new(vec![vec![-1, 2], vec![2, -1]]).is_err());
        assert!(GramMatrix::new(vec![]).is_err());
    }

    #[test]
    fn determinants() {
        let g = GramMatrix::new(vec![vec![-2, 1], vec![1, -2]]).unwrap();
        assert_eq!(g.determinant(), 3);
        assert_eq!(bareiss_determinant(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(bareiss_determinant(vec![vec![2, 4], vec![1, 2]]), 0);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let text = "# comment\n2\n-2 1\n# inner\n1 -2\n";
        let g: GramMatrix = text.parse().unwrap();
        assert_eq!(g.to_text().parse::<GramMatrix>().unwrap(), g);
        assert!("2\n-2 1\n".parse::<GramMatrix>().is_err());
        assert!("2\n-2 1\n1 x\n".parse::<GramMatrix>().is_err());
        assert!("1\n-1 0\n".parse::<GramMatrix>().is_err());
        assert!("1\n2\n".parse::<GramMatrix>().is_err());
    }

    #[test]
    fn rank() {
        assert_eq!(integer_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(integer_rank(&[vec![1, 2, 2, 4], vec![2, 0, -1, 0]]), 2);
        assert_eq!(integer_rank(&[]), 0);
    }
}
