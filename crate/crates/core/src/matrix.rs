//! Packed GF(2) matrices and the linear algebra the constructions need.
//!
//! Layout: row-major, 64 bits per word, bit 0 of word 0 is column 0.
//! A column is read as an integer with row 0 contributing the least
//! significant bit; under that convention the weight-1 columns
//! e_1..e_m sort to an identity block, which is what lets deleted
//! simplex codes keep their systematic form.
//!
//! Text format (used by the CLI and the serialization round trips):
//! a header line `<rows> <cols>`, then `rows` lines of exactly `cols`
//! characters from {0,1}, row 0 first, column 0 leftmost.

use std::collections::HashMap;

use crate::bits::{words_for, BitVec};
use crate::error::{Error, Result};

// ================================================================
// BitMatrix
// ================================================================

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    /// Identity matrix of order n.
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from its rows.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has wrong length");
            let start = i * m.words_per_row;
            m.data[start..start + m.words_per_row].copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// # Panics
    /// Panics if an index is out of range.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range");
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    /// # Panics
    /// Panics if an index is out of range.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range");
        let idx = r * self.words_per_row + c / 64;
        let mask = 1u64 << (c % 64);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    /// Word slice of one row; used by the enumeration hot loops.
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Copies row r out as a vector.
    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Column c read as an integer, row 0 = least significant bit.
    ///
    /// # Panics
    /// Panics if the matrix has more than 64 rows.
    pub fn column_as_int(&self, c: usize) -> u64 {
        assert!(self.rows <= 64, "column_as_int needs <= 64 rows");
        let mut v = 0u64;
        for r in 0..self.rows {
            if self.get(r, c) {
                v |= 1 << r;
            }
        }
        v
    }

    /// Column c as packed words, row 0 = bit 0. Works for any height.
    fn column_bits(&self, c: usize) -> Vec<u64> {
        let mut words = vec![0u64; words_for(self.rows)];
        for r in 0..self.rows {
            if self.get(r, c) {
                words[r / 64] |= 1 << (r % 64);
            }
        }
        words
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let wpr = self.words_per_row;
        let (s, d) = (src * wpr, dst * wpr);
        for w in 0..wpr {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let wpr = self.words_per_row;
        for w in 0..wpr {
            self.data.swap(a * wpr + w, b * wpr + w);
        }
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let va = self.get(r, a);
            let vb = self.get(r, b);
            self.set(r, a, vb);
            self.set(r, b, va);
        }
    }

    /// Stacks `top` above `bottom`.
    ///
    /// # Panics
    /// Panics if the column counts differ.
    pub fn vstack(top: &BitMatrix, bottom: &BitMatrix) -> BitMatrix {
        assert_eq!(top.cols, bottom.cols, "vstack column mismatch");
        let mut rows = Vec::with_capacity(top.rows + bottom.rows);
        for r in 0..top.rows {
            rows.push(top.row(r));
        }
        for r in 0..bottom.rows {
            rows.push(bottom.row(r));
        }
        BitMatrix::from_rows(top.cols, &rows)
    }

    // ------------------------------------------------------------
    // Rank, standard form, parity check
    // ------------------------------------------------------------

    /// Rank over GF(2). Works on a copy; the matrix is untouched.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let hit = (pivot_row..m.rows).find(|&r| m.get(r, c));
            if let Some(r) = hit {
                m.swap_rows(pivot_row, r);
                for r2 in 0..m.rows {
                    if r2 != pivot_row && m.get(r2, c) {
                        m.xor_row_into(pivot_row, r2);
                    }
                }
                pivot_row += 1;
            }
        }
        pivot_row
    }

    /// Reduces to standard form (I_k | A) using row operations, swapping
    /// columns only when a pivot position has no usable pivot in place.
    /// Returns the reduced matrix and the column permutation taking the
    /// result's columns back to this matrix's columns (`perm[new] = old`);
    /// the permutation is the identity whenever row operations sufficed.
    ///
    /// Errors with `RankDeficient` if the rows are dependent.
    pub fn to_standard_form(&self) -> Result<(BitMatrix, ColumnPermutation)> {
        let k = self.rows;
        if k > self.cols {
            return Err(Error::RankDeficient {
                rank: self.rank(),
                rows: k,
            });
        }
        let mut m = self.clone();
        let mut perm: Vec<usize> = (0..m.cols).collect();
        for i in 0..k {
            // prefer a pivot in column i; only then look right and swap
            let mut pivot = (i..k).find(|&r| m.get(r, i)).map(|r| (r, i));
            if pivot.is_none() {
                'search: for c in i + 1..m.cols {
                    for r in i..k {
                        if m.get(r, c) {
                            pivot = Some((r, c));
                            break 'search;
                        }
                    }
                }
            }
            let Some((r, c)) = pivot else {
                return Err(Error::RankDeficient {
                    rank: i,
                    rows: k,
                });
            };
            if c != i {
                m.swap_columns(i, c);
                perm.swap(i, c);
            }
            m.swap_rows(i, r);
            for r2 in 0..k {
                if r2 != i && m.get(r2, i) {
                    m.xor_row_into(i, r2);
                }
            }
        }
        Ok((m, ColumnPermutation(perm)))
    }

    /// True when the leading k x k block is the identity.
    pub fn is_standard_form(&self) -> bool {
        if self.cols < self.rows {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.rows {
                if self.get(r, c) != (r == c) {
                    return false;
                }
            }
        }
        true
    }

    /// Parity-check matrix (A^T | I_{n-k}) of a standard-form generator
    /// (I_k | A). For n = k the result has no rows.
    ///
    /// Errors with `NotStandardForm` if the leading block is not I_k.
    pub fn derive_parity_check(&self) -> Result<BitMatrix> {
        if !self.is_standard_form() {
            return Err(Error::NotStandardForm);
        }
        let k = self.rows;
        let n = self.cols;
        let mut h = BitMatrix::zeros(n - k, n);
        for r in 0..n - k {
            for c in 0..k {
                // (A^T)[r][c] = A[c][r] = G[c][k + r]
                if self.get(c, k + r) {
                    h.set(r, c, true);
                }
            }
            h.set(r, k + r, true);
        }
        Ok(h)
    }

    /// Returns a copy with row `dst` replaced by row `dst` + row `src`.
    pub fn add_row(&self, src: usize, dst: usize) -> Result<BitMatrix> {
        for idx in [src, dst] {
            if idx >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: self.rows,
                });
            }
        }
        if src == dst {
            return Err(Error::SelfAddition { row: src });
        }
        let mut m = self.clone();
        m.xor_row_into(src, dst);
        Ok(m)
    }

    /// Returns a copy with the given columns removed; the survivors keep
    /// their relative order.
    pub fn delete_columns(&self, idx: &ColumnIndexSet) -> Result<BitMatrix> {
        if let Some(&bad) = idx.as_slice().iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: self.cols,
            });
        }
        let mut keep = Vec::with_capacity(self.cols - idx.len());
        let mut next = idx.as_slice().iter().peekable();
        for c in 0..self.cols {
            if next.peek() == Some(&&c) {
                next.next();
            } else {
                keep.push(c);
            }
        }
        let mut m = BitMatrix::zeros(self.rows, keep.len());
        for r in 0..self.rows {
            for (new_c, &old_c) in keep.iter().enumerate() {
                if self.get(r, old_c) {
                    m.set(r, new_c, true);
                }
            }
        }
        Ok(m)
    }

    /// Finds each column of `targets` inside this matrix and returns the
    /// matching column indices as a set. Requires this matrix's columns to
    /// be pairwise distinct so matches are unambiguous.
    pub fn find_columns(&self, targets: &BitMatrix) -> Result<ColumnIndexSet> {
        if targets.rows != self.rows {
            return Err(Error::DimensionMismatch {
                context: "find_columns targets must have the same row count",
            });
        }
        let mut by_bits: HashMap<Vec<u64>, usize> = HashMap::with_capacity(self.cols);
        for c in 0..self.cols {
            let bits = self.column_bits(c);
            if let Some(_prev) = by_bits.insert(bits.clone(), c) {
                return Err(Error::DuplicateColumn {
                    value: bits.first().copied().unwrap_or(0),
                });
            }
        }
        let mut found = Vec::with_capacity(targets.cols);
        for t in 0..targets.cols {
            let bits = targets.column_bits(t);
            match by_bits.get(&bits) {
                Some(&c) => {
                    if found.contains(&c) {
                        return Err(Error::DuplicateTarget {
                            value: bits.first().copied().unwrap_or(0),
                        });
                    }
                    found.push(c);
                }
                None => {
                    return Err(Error::ColumnNotFound {
                        target: t,
                        value: bits.first().copied().unwrap_or(0),
                    });
                }
            }
        }
        ColumnIndexSet::new(found)
    }

    /// Basis of the right null space: all x with M x^T = 0, one basis
    /// vector per returned row. The basis is in the standard reduced form
    /// (one vector per free column, ascending), so it is deterministic.
    pub fn null_space(&self) -> BitMatrix {
        let mut m = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            if let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, c)) {
                m.swap_rows(pivot_row, r);
                for r2 in 0..m.rows {
                    if r2 != pivot_row && m.get(r2, c) {
                        m.xor_row_into(pivot_row, r2);
                    }
                }
                pivots.push((pivot_row, c));
                pivot_row += 1;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..m.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = BitMatrix::zeros(free_cols.len(), m.cols);
        for (b, &f) in free_cols.iter().enumerate() {
            basis.set(b, f, true);
            for &(r, p) in &pivots {
                if m.get(r, f) {
                    basis.set(b, p, true);
                }
            }
        }
        basis
    }

    /// Reduced row-echelon basis of the row space; drops zero rows, so
    /// the result has exactly `rank` rows and is deterministic.
    pub fn row_space_basis(&self) -> BitMatrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            if let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, c)) {
                m.swap_rows(pivot_row, r);
                for r2 in 0..m.rows {
                    if r2 != pivot_row && m.get(r2, c) {
                        m.xor_row_into(pivot_row, r2);
                    }
                }
                pivot_row += 1;
            }
        }
        let rows: Vec<BitVec> = (0..pivot_row).map(|r| m.row(r)).collect();
        BitMatrix::from_rows(self.cols, &rows)
    }

    /// True when every row of `other` is orthogonal to every row of self.
    pub fn orthogonal_to(&self, other: &BitMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        for i in 0..self.rows {
            let ri = self.row(i);
            for j in 0..other.rows {
                if ri.dot(&other.row(j)) {
                    return false;
                }
            }
        }
        true
    }

    // ------------------------------------------------------------
    // Text format
    // ------------------------------------------------------------

    /// Serializes in the matrix text format.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.cols + 1) * (self.rows + 1) + 16);
        out.push_str(&format!("{} {}\n", self.rows, self.cols));
        for r in 0..self.rows {
            out.push_str(&self.row(r).to_bit_string());
            out.push('\n');
        }
        out
    }

    /// Parses the matrix text format. See the module docs for the layout.
    pub fn from_text(text: &str) -> Result<BitMatrix> {
        let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
        let header = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            reason: "missing header line".into(),
        })?;
        let mut parts = header.split_whitespace();
        let parse_dim = |s: Option<&str>, what: &str| -> Result<usize> {
            s.and_then(|v| v.parse().ok()).ok_or_else(|| Error::Parse {
                line: 1,
                reason: format!("header must be `<rows> <cols>`, bad {what}"),
            })
        };
        let rows = parse_dim(parts.next(), "rows")?;
        let cols = parse_dim(parts.next(), "cols")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: 1,
                reason: "header has trailing tokens".into(),
            });
        }
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            let line = lines.next().ok_or_else(|| Error::Parse {
                line: r + 2,
                reason: format!("expected {rows} rows, found {r}"),
            })?;
            if line.chars().count() != cols {
                return Err(Error::Parse {
                    line: r + 2,
                    reason: format!("expected {cols} characters, found {}", line.len()),
                });
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    _ => {
                        return Err(Error::Parse {
                            line: r + 2,
                            reason: format!("invalid character {ch:?}"),
                        })
                    }
                }
            }
        }
        if let Some(extra) = lines.next() {
            if !extra.is_empty() {
                return Err(Error::Parse {
                    line: rows + 2,
                    reason: "trailing content after matrix".into(),
                });
            }
        }
        Ok(m)
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r).to_bit_string())?;
        }
        Ok(())
    }
}

// ================================================================
// ColumnIndexSet and ColumnPermutation
// ================================================================

/// A sorted set of distinct column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnIndexSet(Vec<usize>);

impl ColumnIndexSet {
    /// Sorts the indices and rejects duplicates.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter {
                name: "column index",
                value: w[0],
                requirement: "distinct indices",
            });
        }
        Ok(ColumnIndexSet(indices))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0.binary_search(&idx).is_ok()
    }
}

/// Column permutation returned by standard-form reduction;
/// `perm[new_index] = old_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation(Vec<usize>);

impl ColumnPermutation {
    pub fn identity(n: usize) -> Self {
        ColumnPermutation((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Carries per-column labels along with the permutation:
    /// `out[new] = labels[old]`.
    ///
    /// # Panics
    /// Panics if `labels` has the wrong length.
    pub fn apply_to_labels<T: Copy>(&self, labels: &[T]) -> Vec<T> {
        assert_eq!(labels.len(), self.0.len(), "label count mismatch");
        self.0.iter().map(|&old| labels[old]).collect()
    }
}
