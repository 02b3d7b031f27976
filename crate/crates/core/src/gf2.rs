//! Dense linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words. Matrices are lists of equal-length
//! row vectors. Elimination always pivots on the smallest available row, then
//! the smallest column, so echelon forms are reproducible.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` whose bit `i` is bit `i` of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask supports at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = mask & keep;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Standard dot product `Σ uᵢvᵢ` over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Keeps only the listed coordinates, in the listed order.
    pub fn select(&self, indices: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(indices.len());
        for (j, &i) in indices.iter().enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// Low 64 bits as an integer mask.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= WORD);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Lexicographic order on the coordinate sequence, coordinate 0 first.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return ((a >> bit) & 1).cmp(&((b >> bit) & 1));
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

/// A matrix over GF(2), stored as rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

/// Result of Gaussian elimination.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Reduced row-echelon form with the zero rows dropped.
    pub matrix: BitMatrix,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            ncols,
            rows: vec![BitVec::zeros(ncols); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {ncols} columns",
                bad.len()
            )));
        }
        Ok(BitMatrix { ncols, rows })
    }

    /// Convenience constructor from nested 0/1 literals.
    pub fn from_u8(rows: &[&[u8]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix literal");
                BitVec::from_bools(&r.iter().map(|&x| x != 0).collect::<Vec<_>>())
            })
            .collect();
        BitMatrix { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(other.ncols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            ncols: other.ncols,
            rows,
        })
    }

    /// Matrix-vector product `self · v` with `v` as a column.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols, "length mismatch in apply");
        let mut out = BitVec::zeros(self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Keeps only the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix {
            ncols: cols.len(),
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
        }
    }

    /// Fully reduced row-echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.ncols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        Echelon {
            matrix: BitMatrix {
                ncols: self.ncols,
                rows,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn det(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        Ok(self.rank() == self.nrows())
    }

    /// Basis of the right null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let Echelon { matrix, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = BitVec::unit(self.ncols, free);
                for (row, &p) in matrix.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    /// Restriction to the rows and columns in `indices` (sorted, deduplicated).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.nrows()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: self.nrows(),
            });
        }
        Ok(BitMatrix {
            ncols: idx.len(),
            rows: idx.iter().map(|&i| self.rows[i].select(&idx)).collect(),
        })
    }

    /// Principal submatrix on the coordinates set in `mask`.
    pub fn principal_submatrix_mask(&self, mask: u64) -> Result<BitMatrix> {
        let idx: Vec<usize> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        self.principal_submatrix(&idx)
    }

    /// Parses the `rows cols` header plus one `0`/`1` line per row.
    pub fn parse_text(text: &str) -> Result<BitMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `rows cols` header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(hline, "header must be two nonnegative integers"))?;
        let [nrows, ncols] = dims[..] else {
            return Err(Error::parse(
                hline,
                "header must be two nonnegative integers",
            ));
        };
        let mut rows = Vec::with_capacity(nrows);
        for (lineno, line) in lines {
            if rows.len() == nrows {
                return Err(Error::parse(lineno, "more rows than declared"));
            }
            if line.chars().count() != ncols {
                return Err(Error::parse(
                    lineno,
                    format!("expected {ncols} entries, found {}", line.chars().count()),
                ));
            }
            let mut row = BitVec::zeros(ncols);
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => row.set(j, true),
                    other => return Err(Error::parse(lineno, format!("invalid entry `{other}`"))),
                }
            }
            rows.push(row);
        }
        if rows.len() != nrows {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!("expected {nrows} rows, found {}", rows.len()),
            ));
        }
        Ok(BitMatrix { ncols, rows })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.ncols);
        for row in &self.rows {
            for j in 0..self.ncols {
                s.push(if row.get(j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix{}x{}[", self.nrows(), self.ncols)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            for j in 0..self.ncols {
                f.write_str(if row.get(j) { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_matrices(n: usize) -> impl Iterator<Item = BitMatrix> {
        (0u64..1 << (n * n)).map(move |bits| {
            let rows = (0..n)
                .map(|r| BitVec::from_mask(n, (bits >> (r * n)) & ((1 << n) - 1)))
                .collect();
            BitMatrix::from_rows(n, rows).unwrap()
        })
    }

    /// Permutation expansion of the determinant; over GF(2) signs vanish.
    fn det_by_permutations(m: &BitMatrix) -> bool {
        use itertools::Itertools;
        let n = m.nrows();
        (0..n)
            .permutations(n)
            .filter(|p| p.iter().enumerate().all(|(r, &c)| m.get(r, c)))
            .count()
            % 2
            == 1
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::from_u8(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn rank_matches_row_space_size() {
        // |row space| = 2^rank; the row space is enumerated directly.
        for m in all_matrices(3) {
            let mut span = std::collections::BTreeSet::new();
            for combo in 0u32..8 {
                let mut v = BitVec::zeros(3);
                for r in 0..3 {
                    if combo >> r & 1 == 1 {
                        v.xor_assign(m.row(r));
                    }
                }
                span.insert(v);
            }
            assert_eq!(span.len(), 1 << m.rank(), "{m:?}");
        }
    }

    #[test]
    fn det_examples() {
        assert!(BitMatrix::zeros(0, 0).det().unwrap());
        assert!(BitMatrix::from_u8(&[&[0, 1], &[1, 0]]).det().unwrap());
        assert!(!BitMatrix::zeros(2, 2).det().unwrap());
        assert_eq!(
            BitMatrix::zeros(2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn det_agrees_with_permutation_expansion_up_to_4() {
        for n in 0..=4 {
            for m in all_matrices(n) {
                assert_eq!(m.det().unwrap(), det_by_permutations(&m), "{m:?}");
                assert_eq!(m.det().unwrap(), m.rank() == n);
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(BitMatrix::identity(3).kernel().is_empty());
        assert_eq!(BitMatrix::zeros(2, 2).kernel().len(), 2);
        let k = BitMatrix::from_u8(&[&[1, 1]]).kernel();
        assert_eq!(k, vec![BitVec::from_bools(&[true, true])]);
    }

    #[test]
    fn rank_nullity() {
        for m in all_matrices(3) {
            let ker = m.kernel();
            assert_eq!(m.rank() + ker.len(), 3);
            for x in &ker {
                assert!(m.apply(x).is_zero());
            }
        }
    }

    #[test]
    fn principal_submatrix_examples() {
        let m = BitMatrix::from_u8(&[&[0, 1], &[1, 1]]);
        assert_eq!(m.principal_submatrix(&[]).unwrap(), BitMatrix::zeros(0, 0));
        assert_eq!(
            m.principal_submatrix(&[1]).unwrap(),
            BitMatrix::from_u8(&[&[1]])
        );
        let swap = BitMatrix::from_u8(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.principal_submatrix(&[0, 1]).unwrap(), swap);
        assert_eq!(
            m.principal_submatrix(&[2]),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        );
    }

    #[test]
    fn bitvec_order_is_lexicographic_from_coordinate_zero() {
        let a = BitVec::from_bools(&[false, true, true]);
        let b = BitVec::from_bools(&[true, false, false]);
        assert!(a < b);
        let wide_a = BitVec::unit(130, 100);
        let wide_b = BitVec::unit(130, 3);
        assert!(wide_a < wide_b);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let m = BitMatrix::from_u8(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(BitMatrix::parse_text(&m.to_text()).unwrap(), m);
        assert!(matches!(
            BitMatrix::parse_text("2 2\n01\n2x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            BitMatrix::parse_text("2 2\n01\n"),
            Err(Error::Parse { .. })
        ));
    }
}
