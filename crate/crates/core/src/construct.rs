//! Code construction: simplex generators, anticode column deletion, the
//! four LRC families, and the parity-check localization that certifies
//! their locality.
//!
//! All simplex-derived codes carry per-coordinate column value labels
//! (the integer a coordinate's generator column had inside the ambient
//! simplex, row 0 = LSB). Localization schedules are phrased in terms of
//! those values, so the labels survive any column permutation that
//! standard-form reduction introduces.

use std::collections::HashMap;

use crate::anticode::{self, Anticode};
use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::matrix::{BitMatrix, ColumnIndexSet};

/// Simplex dimension guard: 2^20 - 1 columns at most.
pub const MAX_SIMPLEX_M: usize = 20;

// ================================================================
// Family tags and parameters
// ================================================================

/// Provenance of a code: which builder produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Simplex,
    CMs2,
    CMt,
    AugSimplex,
    Subspace,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::CMs2 => "cms2",
            Family::CMt => "cmt",
            Family::AugSimplex => "augsimplex",
            Family::Subspace => "subspace",
            Family::Custom => "custom",
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        Some(match text {
            "simplex" => Family::Simplex,
            "cms2" => Family::CMs2,
            "cmt" => Family::CMt,
            "augsimplex" => Family::AugSimplex,
            "subspace" => Family::Subspace,
            "custom" => Family::Custom,
            _ => return None,
        })
    }
}

/// Validated integer parameters for one family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    Simplex { m: usize },
    CMs2 { m: usize, s: usize },
    CMt { m: usize, t: usize },
    AugSimplex { m: usize },
    Subspace { s: usize },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Simplex { .. } => Family::Simplex,
            FamilyParams::CMs2 { .. } => Family::CMs2,
            FamilyParams::CMt { .. } => Family::CMt,
            FamilyParams::AugSimplex { .. } => Family::AugSimplex,
            FamilyParams::Subspace { .. } => Family::Subspace,
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        match *self {
            FamilyParams::Simplex { m } => build_simplex(m),
            FamilyParams::CMs2 { m, s } => build_c_ms2(m, s),
            FamilyParams::CMt { m, t } => build_c_mt(m, t),
            FamilyParams::AugSimplex { m } => build_augmented_simplex(m),
            FamilyParams::Subspace { s } => build_subspace_code(s),
        }
    }

    /// The (n, k, d) the construction theorems promise.
    pub fn claimed_parameters(&self) -> (usize, usize, usize) {
        match *self {
            FamilyParams::Simplex { m } => ((1 << m) - 1, m, 1 << (m - 1)),
            FamilyParams::CMs2 { m, s } => (
                (1 << m) - s * (s - 1) / 2 - 1,
                m,
                (1 << (m - 1)) - s * s / 4,
            ),
            FamilyParams::CMt { m, t } => (
                (1 << m) - (1 << t) + t + 1,
                m,
                (1 << (m - 1)) - (1 << (t - 1)) + 2,
            ),
            FamilyParams::AugSimplex { m } => ((1 << (m - 1)) - 1, m, (1 << (m - 2)) - 1),
            FamilyParams::Subspace { s } => (3 << (s - 2), s, 3 << (s - 3)),
        }
    }

    /// Claimed symbol locality.
    pub fn claimed_locality(&self) -> usize {
        match self {
            FamilyParams::AugSimplex { .. } => 3,
            _ => 2,
        }
    }

    /// Whether rate optimality (the alphabet-dependent bound on k) is
    /// claimed for this instance.
    pub fn claims_cm_attained(&self) -> bool {
        match *self {
            FamilyParams::Simplex { .. } => true,
            FamilyParams::CMs2 { s, .. } => (3..=5).contains(&s),
            FamilyParams::CMt { .. } => false,
            FamilyParams::AugSimplex { .. } => true,
            FamilyParams::Subspace { .. } => true,
        }
    }

    /// Whether Griesmer-bound attainment is claimed for this instance.
    pub fn claims_griesmer_attained(&self) -> bool {
        match *self {
            FamilyParams::CMs2 { s, .. } => s == 3 || s == 5,
            FamilyParams::CMt { .. } => true,
            FamilyParams::Subspace { .. } => true,
            _ => false,
        }
    }

    /// `family` plus its integer parameters, e.g. `cms2 m=5 s=3`.
    pub fn describe(&self) -> String {
        match *self {
            FamilyParams::Simplex { m } => format!("simplex m={m}"),
            FamilyParams::CMs2 { m, s } => format!("cms2 m={m} s={s}"),
            FamilyParams::CMt { m, t } => format!("cmt m={m} t={t}"),
            FamilyParams::AugSimplex { m } => format!("augsimplex m={m}"),
            FamilyParams::Subspace { s } => format!("subspace s={s}"),
        }
    }
}

// ================================================================
// LinearCode
// ================================================================

/// A binary linear code held as a standard-form generator plus the
/// derived parity check. `generator` is k x n with leading I_k,
/// `parity_check` is (n-k) x n, and their row spaces are orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
    parity_check: BitMatrix,
    n: usize,
    k: usize,
    d: Option<usize>,
    family: Family,
    column_labels: Option<Vec<u64>>,
}

impl LinearCode {
    fn assemble(
        generator: BitMatrix,
        family: Family,
        column_labels: Option<Vec<u64>>,
    ) -> Result<Self> {
        let parity_check = if generator.rows() == 0 {
            BitMatrix::identity(generator.cols())
        } else {
            generator.derive_parity_check()?
        };
        debug_assert!(generator.orthogonal_to(&parity_check));
        Ok(LinearCode {
            n: generator.cols(),
            k: generator.rows(),
            generator,
            parity_check,
            d: None,
            family,
            column_labels,
        })
    }

    /// Builds a code from an arbitrary generator matrix. Dependent rows
    /// are dropped (the dimension is the rank), and columns are permuted
    /// only if no information set sits in the leading positions.
    pub fn from_generator(generator: BitMatrix) -> Result<Self> {
        let basis = generator.row_space_basis();
        if basis.rows() == 0 {
            return LinearCode::assemble(
                BitMatrix::zeros(0, generator.cols()),
                Family::Custom,
                None,
            );
        }
        let (std, _perm) = basis.to_standard_form()?;
        LinearCode::assemble(std, Family::Custom, None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Minimum distance, if analysis has filled it in.
    pub fn distance(&self) -> Option<usize> {
        self.d
    }

    pub fn set_distance(&mut self, d: usize) {
        self.d = Some(d);
    }

    /// Ambient-simplex column values per coordinate, for codes built by
    /// the family constructors.
    pub fn column_labels(&self) -> Option<&[u64]> {
        self.column_labels.as_deref()
    }

    /// Encodes a k-bit message as the XOR of the selected generator rows.
    ///
    /// # Panics
    /// Panics if `message.len() != k`.
    pub fn encode(&self, message: &BitVec) -> BitVec {
        assert_eq!(message.len(), self.k, "message length must be k");
        let mut word = BitVec::zeros(self.n);
        for i in 0..self.k {
            if message.get(i) {
                word.xor_assign(&self.generator.row(i));
            }
        }
        word
    }

    /// True when the word satisfies every parity check.
    pub fn is_codeword(&self, word: &BitVec) -> bool {
        if word.len() != self.n {
            return false;
        }
        (0..self.parity_check.rows()).all(|r| !self.parity_check.row(r).dot(word))
    }

    /// Serializes as a `family=<tag> n=<n> k=<k>` header followed by the
    /// generator and parity-check matrices in the matrix text format.
    pub fn to_text(&self) -> String {
        format!(
            "family={} n={} k={}\n{}{}",
            self.family.as_str(),
            self.n,
            self.k,
            self.generator.to_text(),
            self.parity_check.to_text()
        )
    }

    /// Parses the serialization produced by [`LinearCode::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let (header, rest) = text.split_once('\n').ok_or_else(|| Error::Parse {
            line: 1,
            reason: "missing code header".into(),
        })?;
        let mut family = None;
        let mut n = None;
        let mut k = None;
        for token in header.trim_end_matches('\r').split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                reason: format!("bad header token {token:?}"),
            })?;
            match key {
                "family" => family = Family::parse(value),
                "n" => n = value.parse().ok(),
                "k" => k = value.parse().ok(),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        reason: format!("unknown header key {key:?}"),
                    })
                }
            }
        }
        let (family, n, k): (Family, usize, usize) = match (family, n, k) {
            (Some(f), Some(n), Some(k)) => (f, n, k),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    reason: "header must be `family=<tag> n=<n> k=<k>`".into(),
                })
            }
        };
        if k > n {
            return Err(Error::Parse {
                line: 1,
                reason: "header has k > n".into(),
            });
        }
        // split the remainder into the two matrix blocks by line count
        let lines: Vec<&str> = rest.lines().collect();
        if lines.len() < k + 1 {
            return Err(Error::Parse {
                line: 2,
                reason: "missing generator block".into(),
            });
        }
        let gen_text = lines[..k + 1].join("\n") + "\n";
        let check_text = lines[k + 1..].join("\n") + "\n";
        let generator = BitMatrix::from_text(&gen_text)?;
        let parity_check = BitMatrix::from_text(&check_text).map_err(|e| match e {
            Error::Parse { line, reason } => Error::Parse {
                line: line + k + 1,
                reason,
            },
            other => other,
        })?;
        if generator.rows() != k || generator.cols() != n {
            return Err(Error::Parse {
                line: 2,
                reason: format!(
                    "generator block is {}x{}, header says {k}x{n}",
                    generator.rows(),
                    generator.cols()
                ),
            });
        }
        if parity_check.rows() != n - k || parity_check.cols() != n {
            return Err(Error::Parse {
                line: k + 2,
                reason: "parity-check block has wrong dimensions".into(),
            });
        }
        if k > 0 && !generator.is_standard_form() {
            return Err(Error::Parse {
                line: 2,
                reason: "generator is not in standard form".into(),
            });
        }
        if !generator.orthogonal_to(&parity_check) {
            return Err(Error::Parse {
                line: k + 2,
                reason: "generator and parity check are not orthogonal".into(),
            });
        }
        if parity_check.rank() != n - k {
            return Err(Error::Parse {
                line: k + 2,
                reason: "parity check is rank deficient".into(),
            });
        }
        Ok(LinearCode {
            generator,
            parity_check,
            n,
            k,
            d: None,
            family,
            column_labels: None,
        })
    }
}

// ================================================================
// Builders
// ================================================================

/// Every nonzero m-bit value sorted ascending by (weight, value): the
/// canonical simplex column order.
pub(crate) fn simplex_column_values(m: usize) -> Vec<u64> {
    let mut values: Vec<u64> = (1..(1u64 << m)).collect();
    anticode::sort_by_weight_then_value(&mut values);
    values
}

fn generator_from_values(rows: usize, values: &[u64]) -> BitMatrix {
    let mut g = BitMatrix::zeros(rows, values.len());
    for (c, &v) in values.iter().enumerate() {
        for r in 0..rows {
            if (v >> r) & 1 == 1 {
                g.set(r, c, true);
            }
        }
    }
    g
}

fn check_m(m: usize) -> Result<()> {
    if !(2..=MAX_SIMPLEX_M).contains(&m) {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            requirement: "2..=20",
        });
    }
    Ok(())
}

/// The [2^m - 1, m, 2^(m-1)] simplex code, columns in canonical order
/// (so the weight-1 columns form the leading identity block).
pub fn build_simplex(m: usize) -> Result<LinearCode> {
    check_m(m)?;
    let values = simplex_column_values(m);
    let generator = generator_from_values(m, &values);
    debug_assert!(generator.is_standard_form());
    LinearCode::assemble(generator, Family::Simplex, Some(values))
}

/// Deletes the anticode's columns from the simplex generator of
/// dimension m. The anticode must already live on m rows (prepend zero
/// rows first if not) and all of its columns must appear among the
/// simplex columns. The result keeps the surviving columns in canonical
/// order; its dimension is recomputed from the rank, so a rank drop
/// shows up as k < m rather than an error.
pub fn farrell_delete(m: usize, a: &Anticode) -> Result<LinearCode> {
    check_m(m)?;
    if a.generator().rows() != m {
        return Err(Error::DimensionMismatch {
            context: "anticode must have m rows; prepend zero rows first",
        });
    }
    let values = simplex_column_values(m);
    let simplex = generator_from_values(m, &values);
    let deleted: ColumnIndexSet = simplex.find_columns(a.generator())?;
    let trimmed = simplex.delete_columns(&deleted)?;
    let surviving: Vec<u64> = values
        .iter()
        .enumerate()
        .filter(|(i, _)| !deleted.contains(*i))
        .map(|(_, &v)| v)
        .collect();
    let basis = trimmed.row_space_basis();
    if basis.is_standard_form() {
        return LinearCode::assemble(basis, Family::Custom, Some(surviving));
    }
    let (std, perm) = basis.to_standard_form()?;
    let labels = perm.apply_to_labels(&surviving);
    LinearCode::assemble(std, Family::Custom, Some(labels))
}

fn retag(mut code: LinearCode, family: Family) -> LinearCode {
    code.family = family;
    code
}

/// The [2^m - C(s,2) - 1, m, 2^(m-1) - floor(s^2/4)] locality-2 family:
/// simplex minus the zero-prepended all-weight-2 anticode.
pub fn build_c_ms2(m: usize, s: usize) -> Result<LinearCode> {
    check_m(m)?;
    if m < 4 || !(3..=m).contains(&s) {
        return Err(Error::InvalidParameter {
            name: "s",
            value: s,
            requirement: "m >= 4 and 3 <= s <= m",
        });
    }
    let a = anticode::prepend_zero_rows(&anticode::build_a_s2(s)?, m)?;
    let code = farrell_delete(m, &a)?;
    assert_eq!(code.k(), m, "weight-2 deletion must keep full rank");
    assert_eq!(code.n(), (1 << m) - s * (s - 1) / 2 - 1);
    Ok(retag(code, Family::CMs2))
}

/// The [2^m - 2^t + t + 1, m, 2^(m-1) - 2^(t-1) + 2] locality-2 family:
/// simplex minus the zero-prepended middle-weight anticode.
pub fn build_c_mt(m: usize, t: usize) -> Result<LinearCode> {
    check_m(m)?;
    if m < 4 || !(3..=m).contains(&t) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            requirement: "m >= 4 and 3 <= t <= m",
        });
    }
    let a = anticode::prepend_zero_rows(&anticode::build_a_mid(t)?, m)?;
    let code = farrell_delete(m, &a)?;
    assert_eq!(code.k(), m, "middle-weight deletion must keep full rank");
    assert_eq!(code.n(), (1 << m) - (1 << t) + t + 1);
    Ok(retag(code, Family::CMt))
}

/// The [2^(m-1) - 1, m, 2^(m-2) - 1] locality-3 family: an all-ones row
/// stacked on the simplex generator of dimension m-1, re-standardized.
/// Coordinate labels are the sub-simplex column values.
pub fn build_augmented_simplex(m: usize) -> Result<LinearCode> {
    if m < 4 || m - 1 > MAX_SIMPLEX_M {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            requirement: "4..=21",
        });
    }
    let values = simplex_column_values(m - 1);
    let sub = generator_from_values(m - 1, &values);
    let mut ones = BitMatrix::zeros(1, sub.cols());
    for c in 0..sub.cols() {
        ones.set(0, c, true);
    }
    let raw = BitMatrix::vstack(&ones, &sub);
    let (std, perm) = raw.to_standard_form()?;
    assert!(
        perm.is_identity(),
        "augmented simplex re-standardization must not permute columns"
    );
    let code = LinearCode::assemble(std, Family::AugSimplex, Some(values))?;
    assert_eq!(code.k(), m, "all-ones row must be independent of the simplex");
    Ok(code)
}

/// The [3 * 2^(s-2), s, 3 * 2^(s-3)] locality-2 family, defined as the
/// null space of the weight-3 parity matrix whose rows are the 2-dim
/// subspaces avoiding the excluded coordinate set (vectors with both
/// leading rows zero). Coordinate labels are the allowed column values;
/// standard-form reduction of the null-space basis may permute
/// coordinates, and the labels follow that permutation.
pub fn build_subspace_code(s: usize) -> Result<LinearCode> {
    if !(4..=12).contains(&s) {
        return Err(Error::InvalidParameter {
            name: "s",
            value: s,
            requirement: "4..=12",
        });
    }
    let mut allowed: Vec<u64> = (1..(1u64 << s)).filter(|v| v & 3 != 0).collect();
    anticode::sort_by_weight_then_value(&mut allowed);
    debug_assert_eq!(allowed.len(), 3 << (s - 2));
    let h = subspace_parity_rows(&allowed)?;
    let kernel = h.null_space();
    assert_eq!(
        kernel.rows(),
        s,
        "subspace parity matrix must have rank n - s"
    );
    let (std, perm) = kernel.to_standard_form()?;
    let labels = perm.apply_to_labels(&allowed);
    LinearCode::assemble(std, Family::Subspace, Some(labels))
}

/// One weight-3 row per 2-dimensional subspace {u, v, u^v} whose three
/// nonzero vectors are all in `labels`; row order is lexicographic on
/// the sorted value triple, columns follow `labels`.
fn subspace_parity_rows(labels: &[u64]) -> Result<BitMatrix> {
    let position: HashMap<u64, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    if position.len() != labels.len() {
        return Err(Error::DuplicateColumn { value: 0 });
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let mut rows = Vec::new();
    for (i, &u) in sorted.iter().enumerate() {
        for &v in &sorted[i + 1..] {
            let w = u ^ v;
            // keep each subspace once: u < v < w
            if w > v && position.contains_key(&w) {
                rows.push(BitVec::from_support(
                    labels.len(),
                    &[position[&u], position[&v], position[&w]],
                ));
            }
        }
    }
    Ok(BitMatrix::from_rows(labels.len(), &rows))
}

// ================================================================
// Localization
// ================================================================

/// Output of [`localize_parity_check`]: rows of dual codewords whose
/// light rows cover every coordinate, plus any notes about fallbacks.
#[derive(Debug, Clone)]
pub struct Localized {
    pub rows: BitMatrix,
    pub notes: Vec<String>,
}

/// Produces the family's explicit locality certificate rows.
///
/// - `cms2` / `cmt`: the proof schedule on H = (A^T | I): rows in weight
///   class i (3 <= i <= m-2) absorb a class-(i+1) partner whose column
///   support contains theirs, and the class-(m-1) rows absorb the final
///   all-ones-column row; every coordinate ends up covered by a row of
///   weight at most 3.
/// - `augsimplex`: the weight-4 sums of weight-3 Hamming dual rows, with
///   an exhaustive weight-4 search as fallback if the literal schedule
///   ever failed verification.
/// - `subspace`: the defining weight-3 subspace rows.
///
/// Errors with `ScheduleFailure` if the schedule cannot produce verified
/// covering rows, and `UnsupportedFamily` for other code families.
pub fn localize_parity_check(code: &LinearCode) -> Result<Localized> {
    match code.family() {
        Family::CMs2 | Family::CMt => schedule_localize(code),
        Family::AugSimplex => augmented_localize(code),
        Family::Subspace => {
            let labels = code.column_labels().ok_or(Error::UnsupportedFamily {
                family: "subspace code without column labels",
            })?;
            let rows = subspace_parity_rows(labels)?;
            debug_assert!(code.generator().orthogonal_to(&rows));
            Ok(Localized {
                rows,
                notes: Vec::new(),
            })
        }
        other => Err(Error::UnsupportedFamily {
            family: other.as_str(),
        }),
    }
}

fn schedule_localize(code: &LinearCode) -> Result<Localized> {
    let labels = code.column_labels().ok_or(Error::UnsupportedFamily {
        family: "deleted simplex code without column labels",
    })?;
    let m = code.k();
    let mut h = code.parity_check().clone();
    // row j of H checks coordinate m + j; its first-block support is the
    // column value labels[m + j]
    let row_value = |j: usize| labels[m + j];
    let value_to_row: HashMap<u64, usize> =
        (0..h.rows()).map(|j| (row_value(j), j)).collect();
    let last = *value_to_row
        .get(&(((1u64 << m) - 1)))
        .ok_or_else(|| Error::ScheduleFailure {
            reason: "all-ones column is missing".into(),
        })?;
    for j in 0..h.rows() {
        let value = row_value(j);
        let class = value.count_ones() as usize;
        if !(3..=m.saturating_sub(2)).contains(&class) {
            continue;
        }
        // partner: the smallest present superset value one weight up
        let partner = (0..m)
            .filter(|b| value >> b & 1 == 0)
            .map(|b| value | (1 << b))
            .filter_map(|v| value_to_row.get(&v))
            .min_by_key(|&&p| row_value(p))
            .copied()
            .ok_or_else(|| Error::ScheduleFailure {
                reason: format!("no weight-{} superset for column value {value}", class + 1),
            })?;
        h = h.add_row(partner, j)?;
    }
    if m >= 3 {
        for j in 0..h.rows() {
            if row_value(j).count_ones() as usize == m - 1 {
                h = h.add_row(last, j)?;
            }
        }
    }
    verify_localized(code, &h, 3)?;
    Ok(Localized {
        rows: h,
        notes: Vec::new(),
    })
}

fn augmented_localize(code: &LinearCode) -> Result<Localized> {
    let labels = code.column_labels().ok_or(Error::UnsupportedFamily {
        family: "augmented simplex without column labels",
    })?;
    let m = code.k();
    let n = code.n();
    let position: HashMap<u64, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut supports: Vec<[u64; 4]> = Vec::new();
    for j in 2..=m.saturating_sub(2) {
        let p = 1u64 << j;
        supports.push([2, 3, p, p + 1]);
        for i in 1..=(p - 2) {
            supports.push([i, i + 1, p + i, p + i + 1]);
        }
    }
    let mut rows = Vec::with_capacity(supports.len());
    let mut schedule_ok = !supports.is_empty();
    'build: for support in &supports {
        let mut positions = Vec::with_capacity(4);
        for v in support {
            match position.get(v) {
                Some(&p) => positions.push(p),
                None => {
                    schedule_ok = false;
                    break 'build;
                }
            }
        }
        rows.push(BitVec::from_support(n, &positions));
    }
    if schedule_ok {
        let candidate = BitMatrix::from_rows(n, &rows);
        if verify_localized(code, &candidate, 4).is_ok() {
            debug_assert_eq!(candidate.rows(), (1 << (m - 1)) - m - 1);
            return Ok(Localized {
                rows: candidate,
                notes: Vec::new(),
            });
        }
    }
    // fallback: scan weight-4 supports lexicographically for dual rows
    // until every coordinate is covered
    let mut kept: Vec<BitVec> = Vec::new();
    let mut covered = vec![false; n];
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    if covered[a] && covered[b] && covered[c] && covered[e] {
                        continue;
                    }
                    let row = BitVec::from_support(n, &[a, b, c, e]);
                    let dual = (0..code.generator().rows())
                        .all(|r| !code.generator().row(r).dot(&row));
                    if dual {
                        kept.push(row);
                        for idx in [a, b, c, e] {
                            covered[idx] = true;
                        }
                        if covered.iter().all(|&f| f) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if !covered.iter().all(|&f| f) {
        return Err(Error::ScheduleFailure {
            reason: "no covering set of weight-4 dual rows exists".into(),
        });
    }
    Ok(Localized {
        rows: BitMatrix::from_rows(n, &kept),
        notes: vec![
            "literal weight-4 schedule failed verification; exhaustive search used".into(),
        ],
    })
}

/// Checks that every row is a dual codeword and that every coordinate is
/// covered by some row of weight at most `max_weight`.
fn verify_localized(code: &LinearCode, rows: &BitMatrix, max_weight: usize) -> Result<()> {
    if !code.generator().orthogonal_to(rows) {
        return Err(Error::ScheduleFailure {
            reason: "schedule produced a non-dual row".into(),
        });
    }
    let mut covered = vec![false; code.n()];
    for r in 0..rows.rows() {
        if rows.row_weight(r) <= max_weight {
            for idx in rows.row(r).support() {
                covered[idx] = true;
            }
        }
    }
    if let Some(missing) = covered.iter().position(|&c| !c) {
        return Err(Error::ScheduleFailure {
            reason: format!(
                "coordinate {missing} is not covered by any row of weight <= {max_weight}"
            ),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticode::{build_a_prefix_simplex, build_a_s2, prepend_zero_rows};

    #[test]
    fn simplex_columns_are_canonical() {
        let c = build_simplex(4).unwrap();
        assert_eq!((c.n(), c.k()), (15, 4));
        assert_eq!(
            c.column_labels().unwrap(),
            &[1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15]
        );
        assert!(c.generator().is_standard_form());
        assert_eq!(c.generator().rank(), 4);
        assert!(c.generator().orthogonal_to(c.parity_check()));
        assert!(build_simplex(1).is_err());
        assert!(build_simplex(21).is_err());
    }

    #[test]
    fn deleting_nothing_reproduces_the_simplex() {
        let empty = Anticode::new(BitMatrix::zeros(4, 0), 0).unwrap();
        let c = farrell_delete(4, &empty).unwrap();
        let s = build_simplex(4).unwrap();
        assert_eq!(c.generator(), s.generator());
        assert_eq!(c.parity_check(), s.parity_check());
    }

    #[test]
    fn weight_two_deletion_at_m4_matches_printed_twelve_column_code() {
        let a = prepend_zero_rows(&build_a_s2(3).unwrap(), 4).unwrap();
        // deletion targets sit at these canonical positions
        let simplex = build_simplex(4).unwrap();
        let idx = simplex.generator().find_columns(a.generator()).unwrap();
        assert_eq!(idx.as_slice(), &[6, 8, 9]);
        let c = farrell_delete(4, &a).unwrap();
        assert_eq!((c.n(), c.k()), (12, 4));
        let expected = BitMatrix::from_text(
            "4 12\n100011111101\n010010011011\n001001010111\n000100101111\n",
        )
        .unwrap();
        assert_eq!(c.generator(), &expected);
        assert_eq!(
            c.column_labels().unwrap(),
            &[1, 2, 4, 8, 3, 5, 9, 7, 11, 13, 14, 15]
        );
    }

    #[test]
    fn family_builder_validation() {
        assert!(build_c_ms2(4, 3).is_ok());
        assert!(build_c_ms2(3, 3).is_err());
        assert!(build_c_ms2(5, 2).is_err());
        assert!(build_c_ms2(5, 6).is_err());
        assert!(build_c_mt(4, 2).is_err());
        assert!(build_c_mt(4, 5).is_err());
        assert!(build_augmented_simplex(3).is_err());
        assert!(build_subspace_code(3).is_err());
        assert!(build_subspace_code(13).is_err());
    }

    #[test]
    fn family_parameters_match_formulas() {
        let c = build_c_ms2(5, 3).unwrap();
        assert_eq!((c.n(), c.k()), (28, 5));
        let c = build_c_ms2(5, 4).unwrap();
        assert_eq!((c.n(), c.k()), (25, 5));
        let c = build_c_mt(5, 4).unwrap();
        assert_eq!((c.n(), c.k()), (21, 5));
        let c = build_augmented_simplex(6).unwrap();
        assert_eq!((c.n(), c.k()), (31, 6));
        let c = build_subspace_code(5).unwrap();
        assert_eq!((c.n(), c.k()), (24, 5));
    }

    #[test]
    fn smallest_t_equals_smallest_s_family() {
        // at t=3 the middle weight range is exactly the weight-2 set
        let a = build_c_mt(5, 3).unwrap();
        let b = build_c_ms2(5, 3).unwrap();
        assert_eq!(a.generator(), b.generator());
        assert_eq!(a.parity_check(), b.parity_check());
    }

    #[test]
    fn augmented_simplex_routes_agree() {
        for m in 4..=6 {
            let direct = build_augmented_simplex(m).unwrap();
            let a = build_a_prefix_simplex(m).unwrap();
            let farrell = farrell_delete(m, &a).unwrap();
            assert_eq!(direct.generator(), farrell.generator(), "m={m}");
            assert_eq!(direct.parity_check(), farrell.parity_check());
            assert_eq!((direct.n(), direct.k()), ((1 << (m - 1)) - 1, m));
        }
    }

    #[test]
    fn subspace_code_shape() {
        let c = build_subspace_code(4).unwrap();
        assert_eq!((c.n(), c.k()), (12, 4));
        let labels = c.column_labels().unwrap();
        assert!(labels.iter().all(|&v| v & 3 != 0));
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 12);
        assert!(c.generator().is_standard_form());
    }

    #[test]
    fn subspace_parity_rows_match_printed_sixteen_subspaces() {
        // the sixteen 2-dim subspaces avoiding the excluded set at s=4,
        // as value triples
        let expected: Vec<[u64; 3]> = vec![
            [1, 2, 3],
            [7, 10, 13],
            [6, 9, 15],
            [5, 11, 14],
            [2, 9, 11],
            [5, 10, 15],
            [1, 6, 7],
            [3, 13, 14],
            [2, 5, 7],
            [3, 9, 10],
            [6, 11, 13],
            [1, 14, 15],
            [2, 13, 15],
            [1, 10, 11],
            [3, 5, 6],
            [7, 9, 14],
        ];
        let mut expected: Vec<[u64; 3]> = expected
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        expected.sort_unstable();

        let c = build_subspace_code(4).unwrap();
        let localized = localize_parity_check(&c).unwrap();
        let labels = c.column_labels().unwrap();
        let mut triples: Vec<[u64; 3]> = (0..localized.rows.rows())
            .map(|r| {
                let support = localized.rows.row(r).support();
                assert_eq!(support.len(), 3);
                let mut t = [
                    labels[support[0]],
                    labels[support[1]],
                    labels[support[2]],
                ];
                t.sort_unstable();
                t
            })
            .collect();
        triples.sort_unstable();
        assert_eq!(triples, expected);
    }

    #[test]
    fn schedule_matches_printed_parity_check_at_m4() {
        let c = build_c_ms2(4, 3).unwrap();
        // H = (A^T | I_8) for the twelve-column code
        let expected_h = [
            "110010000000",
            "101001000000",
            "100100100000",
            "111000010000",
            "110100001000",
            "101100000100",
            "011100000010",
            "111100000001",
        ];
        for (j, row) in expected_h.iter().enumerate() {
            assert_eq!(&c.parity_check().row(j).to_bit_string(), row);
        }
        let localized = localize_parity_check(&c).unwrap();
        let mut got: Vec<String> = (0..localized.rows.rows())
            .map(|r| localized.rows.row(r).to_bit_string())
            .collect();
        got.sort();
        let mut expected = vec![
            "110010000000".to_string(),
            "101001000000".to_string(),
            "100100100000".to_string(),
            "000100010001".to_string(),
            "001000001001".to_string(),
            "010000000101".to_string(),
            "100000000011".to_string(),
            "111100000001".to_string(),
        ];
        expected.sort();
        assert_eq!(got, expected);
        assert!(localized.notes.is_empty());
    }

    #[test]
    fn schedule_rows_are_dual_and_covering_for_larger_instances() {
        for code in [
            build_c_ms2(5, 3).unwrap(),
            build_c_ms2(6, 5).unwrap(),
            build_c_ms2(5, 5).unwrap(),
            build_c_mt(5, 4).unwrap(),
            build_c_mt(6, 5).unwrap(),
        ] {
            let localized = localize_parity_check(&code).unwrap();
            assert_eq!(localized.rows.rows(), code.n() - code.k());
            assert!(code.generator().orthogonal_to(&localized.rows));
            let mut covered = vec![false; code.n()];
            for r in 0..localized.rows.rows() {
                if localized.rows.row_weight(r) <= 3 {
                    for i in localized.rows.row(r).support() {
                        covered[i] = true;
                    }
                }
            }
            assert!(covered.iter().all(|&c| c));
        }
    }

    #[test]
    fn augmented_schedule_produces_covering_weight_four_rows() {
        for m in 4..=7 {
            let code = build_augmented_simplex(m).unwrap();
            let localized = localize_parity_check(&code).unwrap();
            assert!(localized.notes.is_empty(), "fallback used at m={m}");
            assert_eq!(localized.rows.rows(), (1 << (m - 1)) - m - 1);
            assert!(code.generator().orthogonal_to(&localized.rows));
            let mut covered = vec![false; code.n()];
            for r in 0..localized.rows.rows() {
                assert_eq!(localized.rows.row_weight(r), 4);
                for i in localized.rows.row(r).support() {
                    covered[i] = true;
                }
            }
            assert!(covered.iter().all(|&c| c), "m={m}");
        }
    }

    #[test]
    fn localize_rejects_unsupported_and_degenerate_inputs() {
        let simplex = build_simplex(4).unwrap();
        assert!(matches!(
            localize_parity_check(&simplex).unwrap_err(),
            Error::UnsupportedFamily { .. }
        ));
        // at t=m the deleted simplex has a single parity check of weight
        // m+1, so no weight-3 covering rows exist
        let degenerate = build_c_mt(5, 5).unwrap();
        assert!(matches!(
            localize_parity_check(&degenerate).unwrap_err(),
            Error::ScheduleFailure { .. }
        ));
    }

    #[test]
    fn code_text_roundtrip() {
        let c = build_c_ms2(4, 3).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("family=cms2 n=12 k=4\n"));
        let back = LinearCode::from_text(&text).unwrap();
        assert_eq!(back.generator(), c.generator());
        assert_eq!(back.parity_check(), c.parity_check());
        assert_eq!(back.family(), Family::CMs2);
        assert_eq!((back.n(), back.k()), (12, 4));
    }

    #[test]
    fn code_text_rejects_corrupted_input() {
        let c = build_c_ms2(4, 3).unwrap();
        let text = c.to_text();
        // flip one parity bit: orthogonality must fail
        let corrupted = text.replacen("110010000000", "110010000001", 1);
        assert!(LinearCode::from_text(&corrupted).is_err());
        assert!(LinearCode::from_text("nonsense\n").is_err());
        assert!(LinearCode::from_text("family=zzz n=1 k=1\n1 1\n1\n0 1\n").is_err());
    }

    #[test]
    fn from_generator_handles_rank_deficiency_and_zero() {
        let g = BitMatrix::from_text("3 4\n1010\n0110\n1100\n").unwrap();
        let c = LinearCode::from_generator(g).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.family(), Family::Custom);
        let z = LinearCode::from_generator(BitMatrix::zeros(1, 3)).unwrap();
        assert_eq!(z.k(), 0);
        assert_eq!(z.parity_check(), &BitMatrix::identity(3));
    }

    #[test]
    fn encode_and_codeword_membership() {
        let c = build_c_ms2(4, 3).unwrap();
        let msg = BitVec::from_support(4, &[0, 2]);
        let word = c.encode(&msg);
        assert!(c.is_codeword(&word));
        let mut bad = word.clone();
        bad.set(0, !bad.get(0));
        assert!(!c.is_codeword(&bad));
        // systematic positions carry the message
        assert_eq!(word.get(0), true);
        assert_eq!(word.get(1), false);
        assert_eq!(word.get(2), true);
        assert_eq!(word.get(3), false);
    }

    #[test]
    fn family_params_metadata() {
        let p = FamilyParams::CMs2 { m: 5, s: 3 };
        assert_eq!(p.claimed_parameters(), (28, 5, 14));
        assert_eq!(p.claimed_locality(), 2);
        assert!(p.claims_cm_attained());
        assert!(p.claims_griesmer_attained());
        assert!(!FamilyParams::CMs2 { m: 5, s: 4 }.claims_griesmer_attained());
        assert!(!FamilyParams::CMs2 { m: 6, s: 6 }.claims_cm_attained());
        let p = FamilyParams::AugSimplex { m: 6 };
        assert_eq!(p.claimed_parameters(), (31, 6, 15));
        assert_eq!(p.claimed_locality(), 3);
        assert_eq!(p.describe(), "augsimplex m=6");
        let p = FamilyParams::Subspace { s: 5 };
        assert_eq!(p.claimed_parameters(), (24, 5, 12));
        assert_eq!(FamilyParams::CMt { m: 6, t: 5 }.claimed_parameters(), (38, 6, 18));
    }
}
