//! Binary anticodes: generator matrices whose row space has a known
//! maximum weight delta. Deleting an anticode's columns from a simplex
//! generator reduces the minimum distance by exactly delta, which is
//! how every code family in this crate is built.
//!
//! Column convention: a column is the integer value of its bits with
//! row 0 as the least significant bit, and every builder emits columns
//! sorted ascending by (Hamming weight, integer value). The `delta`
//! field is always set from the family's closed form; [`max_weight`]
//! enumerates the row space independently and is the oracle the tests
//! check the closed forms against.

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

/// Guard on `max_weight` enumeration: at most 2^24 row combinations.
pub const MAX_WEIGHT_GUARD: usize = 24;

/// An anticode: a generator matrix plus its claimed maximum weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anticode {
    generator: BitMatrix,
    delta: usize,
}

impl Anticode {
    /// Wraps a generator matrix with a claimed maximum weight, rejecting
    /// duplicate columns (deletion targets must be unambiguous).
    pub fn new(generator: BitMatrix, delta: usize) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(generator.cols());
        for c in 0..generator.cols() {
            let bits: Vec<bool> = (0..generator.rows()).map(|r| generator.get(r, c)).collect();
            if !seen.insert(bits) {
                return Err(Error::DuplicateColumn {
                    value: if generator.rows() <= 64 {
                        generator.column_as_int(c)
                    } else {
                        0
                    },
                });
            }
        }
        Ok(Anticode { generator, delta })
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Number of columns.
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// Claimed maximum weight of the row space (from the closed form).
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Column values, row 0 read as the least significant bit.
    pub fn column_values(&self) -> Vec<u64> {
        (0..self.length())
            .map(|c| self.generator.column_as_int(c))
            .collect()
    }

    /// Serializes as a `delta=<value>` header followed by the generator
    /// in the matrix text format.
    pub fn to_text(&self) -> String {
        format!("delta={}\n{}", self.delta, self.generator.to_text())
    }

    /// Parses the serialization produced by [`Anticode::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let (header, rest) = text.split_once('\n').ok_or_else(|| Error::Parse {
            line: 1,
            reason: "missing delta header".into(),
        })?;
        let delta = header
            .strip_prefix("delta=")
            .and_then(|v| v.trim_end_matches('\r').parse().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                reason: "expected `delta=<value>`".into(),
            })?;
        let generator = BitMatrix::from_text(rest).map_err(|e| match e {
            Error::Parse { line, reason } => Error::Parse {
                line: line + 1,
                reason,
            },
            other => other,
        })?;
        Anticode::new(generator, delta)
    }
}

fn check_range(name: &'static str, value: usize, lo: usize) -> Result<()> {
    // 62 keeps every column value inside a u64 with room for prepending
    if value < lo || value > 62 {
        return Err(Error::InvalidParameter {
            name,
            value,
            requirement: match lo {
                2 => "2..=62",
                3 => "3..=62",
                _ => "4..=62",
            },
        });
    }
    Ok(())
}

fn matrix_from_column_values(rows: usize, values: &[u64]) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, values.len());
    for (c, &v) in values.iter().enumerate() {
        debug_assert!(rows == 64 || v < (1 << rows));
        for r in 0..rows {
            if (v >> r) & 1 == 1 {
                m.set(r, c, true);
            }
        }
    }
    m
}

pub(crate) fn sort_by_weight_then_value(values: &mut [u64]) {
    values.sort_unstable_by_key(|&v| (v.count_ones(), v));
}

/// All-weight-2 anticode: the s x C(s,2) matrix whose columns are every
/// weight-2 vector of length s. Maximum weight floor(s^2/4) (the value
/// of a maximum cut of the complete graph K_s).
pub fn build_a_s2(s: usize) -> Result<Anticode> {
    check_range("s", s, 2)?;
    let mut values = Vec::with_capacity(s * (s - 1) / 2);
    for i in 0..s {
        for j in i + 1..s {
            values.push((1u64 << i) | (1u64 << j));
        }
    }
    sort_by_weight_then_value(&mut values);
    Anticode::new(matrix_from_column_values(s, &values), s * s / 4)
}

/// Middle-weight anticode: all length-t vectors of weight 2..=t-1, so
/// everything except the zero vector, the weight-1 vectors, and the
/// all-ones vector. Length 2^t - t - 2, maximum weight 2^(t-1) - 2.
pub fn build_a_mid(t: usize) -> Result<Anticode> {
    check_range("t", t, 3)?;
    let mut values: Vec<u64> = (1..(1u64 << t))
        .filter(|v| {
            let w = v.count_ones() as usize;
            w >= 2 && w <= t - 1
        })
        .collect();
    sort_by_weight_then_value(&mut values);
    debug_assert_eq!(values.len(), (1 << t) - t - 2);
    Anticode::new(
        matrix_from_column_values(t, &values),
        (1 << (t - 1)) - 2,
    )
}

/// Prefix-simplex anticode on m rows and 2^(m-1) columns: e_1 first,
/// then every simplex column of m-1 rows prefixed with a zero in row 0.
/// Maximum weight 2^(m-2) + 1.
pub fn build_a_prefix_simplex(m: usize) -> Result<Anticode> {
    check_range("m", m, 3)?;
    let mut shifted: Vec<u64> = (1..(1u64 << (m - 1))).map(|v| v << 1).collect();
    sort_by_weight_then_value(&mut shifted);
    let mut values = Vec::with_capacity(1 << (m - 1));
    values.push(1);
    values.extend(shifted);
    Anticode::new(
        matrix_from_column_values(m, &values),
        (1 << (m - 2)) + 1,
    )
}

/// Embedded-simplex anticode on s rows: every nonzero vector whose two
/// leading rows (rows 0 and 1) are zero, i.e. a simplex generator on
/// s-2 rows pushed down below two zero rows. Length 2^(s-2) - 1,
/// maximum weight 2^(s-3).
pub fn build_a_embedded_simplex(s: usize) -> Result<Anticode> {
    check_range("s", s, 4)?;
    let mut values: Vec<u64> = (1..(1u64 << (s - 2))).map(|v| v << 2).collect();
    sort_by_weight_then_value(&mut values);
    Anticode::new(matrix_from_column_values(s, &values), 1 << (s - 3))
}

/// Exact maximum weight of the anticode's row space, by Gray-code
/// enumeration of all 2^rows row combinations with a running XOR
/// accumulator. Errors with `TooLarge` past [`MAX_WEIGHT_GUARD`] rows.
pub fn max_weight(a: &Anticode) -> Result<usize> {
    let g = a.generator();
    let rows = g.rows();
    if rows > MAX_WEIGHT_GUARD {
        return Err(Error::TooLarge {
            dimension: rows,
            guard: MAX_WEIGHT_GUARD,
        });
    }
    let mut acc = vec![0u64; g.row_words(0).len().max(1)];
    if g.cols() == 0 {
        return Ok(0);
    }
    let mut best = 0usize;
    for i in 1u64..(1u64 << rows) {
        let flip = i.trailing_zeros() as usize;
        for (w, r) in acc.iter_mut().zip(g.row_words(flip)) {
            *w ^= r;
        }
        let weight: usize = acc.iter().map(|w| w.count_ones() as usize).sum();
        best = best.max(weight);
    }
    Ok(best)
}

/// Embeds the anticode into `m` rows by adding zero rows on top: the
/// existing rows shift up so that every column value v becomes
/// v << (m - rows). Length and maximum weight are unchanged.
pub fn prepend_zero_rows(a: &Anticode, m: usize) -> Result<Anticode> {
    let rows = a.generator().rows();
    if m < rows {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            requirement: "at least the current row count",
        });
    }
    if m > 62 {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            requirement: "3..=62",
        });
    }
    let shift = m - rows;
    if shift == 0 {
        return Ok(a.clone());
    }
    let values: Vec<u64> = a.column_values().iter().map(|v| v << shift).collect();
    Anticode::new(matrix_from_column_values(m, &values), a.delta())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitVec;

    /// Independent naive maximum weight: XOR of explicit row subsets.
    fn naive_max_weight(a: &Anticode) -> usize {
        let g = a.generator();
        let rows = g.rows();
        assert!(rows <= 16, "naive oracle is for small anticodes");
        let mut best = 0;
        for mask in 0u32..(1 << rows) {
            let mut acc = BitVec::zeros(g.cols());
            for r in 0..rows {
                if (mask >> r) & 1 == 1 {
                    acc.xor_assign(&g.row(r));
                }
            }
            best = best.max(acc.weight());
        }
        best
    }

    #[test]
    fn weight_two_anticode_matches_printed_small_case() {
        let a = build_a_s2(3).unwrap();
        assert_eq!(
            a.generator(),
            &BitMatrix::from_text("3 3\n110\n101\n011\n").unwrap()
        );
        assert_eq!(a.delta(), 2);
        assert_eq!(max_weight(&a).unwrap(), 2);
    }

    #[test]
    fn weight_two_anticode_formulas() {
        for s in 2..=8 {
            let a = build_a_s2(s).unwrap();
            assert_eq!(a.length(), s * (s - 1) / 2);
            assert_eq!(a.delta(), s * s / 4);
            // the closed form is the best cut value max_i i(s-i)
            let best_cut = (0..=s).map(|i| i * (s - i)).max().unwrap();
            assert_eq!(a.delta(), best_cut);
            assert_eq!(max_weight(&a).unwrap(), a.delta(), "s={s}");
        }
        assert_eq!(build_a_s2(5).unwrap().length(), 10);
        assert_eq!(build_a_s2(5).unwrap().delta(), 6);
        assert_eq!(build_a_s2(6).unwrap().delta(), 9);
        assert!(matches!(
            build_a_s2(1),
            Err(Error::InvalidParameter { name: "s", .. })
        ));
    }

    #[test]
    fn middle_weight_anticode_formulas() {
        for t in 3..=8 {
            let a = build_a_mid(t).unwrap();
            assert_eq!(a.length(), (1 << t) - t - 2);
            assert_eq!(a.delta(), (1 << (t - 1)) - 2);
            assert_eq!(max_weight(&a).unwrap(), a.delta(), "t={t}");
        }
        // at t=3 the weight range 2..=2 collapses to the weight-2 anticode
        assert_eq!(build_a_mid(3).unwrap(), build_a_s2(3).unwrap());
        let t5 = build_a_mid(5).unwrap();
        assert_eq!((t5.length(), t5.delta()), (25, 14));
        assert!(build_a_mid(2).is_err());
    }

    #[test]
    fn prefix_simplex_anticode_shape_and_formulas() {
        let a = build_a_prefix_simplex(3).unwrap();
        assert_eq!(
            a.generator(),
            &BitMatrix::from_text("3 4\n1000\n0101\n0011\n").unwrap()
        );
        assert_eq!(a.delta(), 3);
        for m in 3..=8 {
            let a = build_a_prefix_simplex(m).unwrap();
            assert_eq!(a.length(), 1 << (m - 1));
            assert_eq!(a.delta(), (1 << (m - 2)) + 1);
            assert_eq!(max_weight(&a).unwrap(), a.delta(), "m={m}");
            // first column is e_1, all others have a zero in row 0
            assert_eq!(a.column_values()[0], 1);
            assert!(a.column_values()[1..].iter().all(|v| v & 1 == 0));
        }
        assert!(build_a_prefix_simplex(2).is_err());
    }

    #[test]
    fn embedded_simplex_anticode_shape_and_formulas() {
        let a = build_a_embedded_simplex(4).unwrap();
        assert_eq!(a.column_values(), vec![4, 8, 12]);
        assert_eq!(a.delta(), 2);
        for s in 4..=8 {
            let a = build_a_embedded_simplex(s).unwrap();
            assert_eq!(a.length(), (1 << (s - 2)) - 1);
            assert_eq!(a.delta(), 1 << (s - 3));
            assert_eq!(max_weight(&a).unwrap(), a.delta(), "s={s}");
            // two leading zero rows: every value is a multiple of 4
            assert!(a.column_values().iter().all(|v| v % 4 == 0));
        }
        assert!(build_a_embedded_simplex(3).is_err());
    }

    #[test]
    fn builders_emit_distinct_nonzero_sorted_columns() {
        let all: Vec<Anticode> = vec![
            build_a_s2(6).unwrap(),
            build_a_mid(5).unwrap(),
            build_a_prefix_simplex(5).unwrap(),
            build_a_embedded_simplex(6).unwrap(),
        ];
        for a in &all {
            let values = a.column_values();
            assert!(values.iter().all(|&v| v != 0));
            for w in values.windows(2) {
                let key = |v: u64| (v.count_ones(), v);
                assert!(key(w[0]) < key(w[1]), "columns out of order: {values:?}");
            }
        }
    }

    #[test]
    fn gray_code_enumeration_agrees_with_naive_subsets() {
        for a in [
            build_a_s2(4).unwrap(),
            build_a_mid(4).unwrap(),
            build_a_prefix_simplex(4).unwrap(),
            build_a_embedded_simplex(5).unwrap(),
        ] {
            assert_eq!(max_weight(&a).unwrap(), naive_max_weight(&a));
        }
    }

    #[test]
    fn max_weight_guard_and_edge_cases() {
        let empty = Anticode::new(BitMatrix::zeros(4, 0), 0).unwrap();
        assert_eq!(max_weight(&empty).unwrap(), 0);
        let wide = Anticode::new(BitMatrix::zeros(25, 1), 0).unwrap();
        assert_eq!(
            max_weight(&wide).unwrap_err(),
            Error::TooLarge {
                dimension: 25,
                guard: 24
            }
        );
    }

    #[test]
    fn prepend_zero_rows_shifts_values_up() {
        let a = build_a_s2(3).unwrap();
        let b = prepend_zero_rows(&a, 4).unwrap();
        assert_eq!(b.column_values(), vec![6, 10, 12]);
        assert_eq!(b.delta(), a.delta());
        assert_eq!(max_weight(&b).unwrap(), a.delta());
        // m equal to the current height is the identity
        assert_eq!(prepend_zero_rows(&a, 3).unwrap(), a);
        assert!(prepend_zero_rows(&a, 2).is_err());
    }

    #[test]
    fn anticode_text_roundtrip() {
        let a = build_a_s2(4).unwrap();
        let text = a.to_text();
        assert!(text.starts_with("delta=4\n4 6\n"));
        assert_eq!(Anticode::from_text(&text).unwrap(), a);
        assert!(Anticode::from_text("4 6\n").is_err());
        assert!(Anticode::from_text("delta=x\n1 1\n1\n").is_err());
    }

    #[test]
    fn duplicate_columns_rejected() {
        let g = BitMatrix::from_text("2 2\n11\n11\n").unwrap();
        assert!(matches!(
            Anticode::new(g, 1),
            Err(Error::DuplicateColumn { .. })
        ));
    }
}
