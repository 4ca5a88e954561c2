//! Exhaustive code analysis and bound arithmetic.
//!
//! Everything here is verification-grade: distances and weight
//! distributions come from enumerating all 2^k codewords (Gray-code
//! order, one row XOR per word), locality comes from an exact
//! smallest-repair-set search per coordinate, and the bound functions
//! are plain integer arithmetic with no floating point.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::bits::BitVec;
use crate::construct::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

/// Default cap on the dimension for full-codeword enumeration (2^24
/// words).
pub const MAX_ENUM_DIMENSION: usize = 24;
/// Length cap for locality search at r <= 2.
pub const MAX_LOCALITY_LENGTH: usize = 1 << 16;
/// Tighter length cap once the search needs the all-pairs sum table
/// (r >= 3).
pub const MAX_DEEP_LOCALITY_LENGTH: usize = 2048;

// ================================================================
// Codeword enumeration
// ================================================================

fn enumerate_weights<F: FnMut(usize)>(code: &LinearCode, guard: usize, mut f: F) -> Result<()> {
    let k = code.k();
    if k > guard {
        return Err(Error::TooLarge {
            dimension: k,
            guard,
        });
    }
    let rows: Vec<BitVec> = (0..k).map(|r| code.generator().row(r)).collect();
    let mut acc = BitVec::zeros(code.n());
    for i in 1u64..(1u64 << k) {
        acc.xor_assign(&rows[i.trailing_zeros() as usize]);
        f(acc.weight());
    }
    Ok(())
}

/// Exact minimum distance by enumerating all nonzero codewords.
/// Errors with `ZeroDimension` when the code has no nonzero words and
/// `TooLarge` when k exceeds the default enumeration guard.
pub fn min_distance(code: &LinearCode) -> Result<usize> {
    min_distance_with_guard(code, MAX_ENUM_DIMENSION)
}

/// [`min_distance`] with an explicit dimension guard.
pub fn min_distance_with_guard(code: &LinearCode, guard: usize) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut best = usize::MAX;
    enumerate_weights(code, guard, |w| best = best.min(w))?;
    Ok(best)
}

/// Weight -> codeword count over the whole code (the zero word
/// included).
pub fn weight_distribution(code: &LinearCode) -> Result<BTreeMap<usize, u64>> {
    weight_distribution_with_guard(code, MAX_ENUM_DIMENSION)
}

/// [`weight_distribution`] with an explicit dimension guard.
pub fn weight_distribution_with_guard(
    code: &LinearCode,
    guard: usize,
) -> Result<BTreeMap<usize, u64>> {
    let mut dist = BTreeMap::new();
    dist.insert(0usize, 1u64);
    enumerate_weights(code, guard, |w| *dist.entry(w).or_insert(0) += 1)?;
    Ok(dist)
}

// ================================================================
// Locality search
// ================================================================

/// Per-coordinate repair sets. `entries[i]` is the lexicographically
/// smallest set R of other coordinates with `symbol_i = XOR of the
/// symbols in R`, minimal in size first, or `None` when no set of size
/// at most `r_max_searched` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityCertificate {
    r_max_searched: usize,
    entries: Vec<Option<Vec<usize>>>,
}

impl LocalityCertificate {
    pub fn r_max_searched(&self) -> usize {
        self.r_max_searched
    }

    pub fn entries(&self) -> &[Option<Vec<usize>>] {
        &self.entries
    }

    pub fn repair_set(&self, coordinate: usize) -> Option<&[usize]> {
        self.entries.get(coordinate)?.as_deref()
    }

    /// True when every coordinate has a repair set.
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| e.is_some())
    }

    /// The locality actually achieved: the largest repair-set size, or
    /// `None` if some coordinate has no set within the searched radius.
    pub fn max_group_size(&self) -> Option<usize> {
        let mut max = 0;
        for entry in &self.entries {
            max = max.max(entry.as_ref()?.len());
        }
        Some(max)
    }
}

/// Finds, for every coordinate, the smallest repair set of size at most
/// `r_max` (1..=4). A coordinate with no such set gets `None` — absence
/// is reported as data, not as an error.
pub fn locality(code: &LinearCode, r_max: usize) -> Result<LocalityCertificate> {
    if !(1..=4).contains(&r_max) {
        return Err(Error::InvalidParameter {
            name: "r_max",
            value: r_max,
            requirement: "1..=4",
        });
    }
    if code.k() > 64 {
        return Err(Error::TooLarge {
            dimension: code.k(),
            guard: 64,
        });
    }
    let n = code.n();
    if n > MAX_LOCALITY_LENGTH {
        return Err(Error::TooLarge {
            dimension: n,
            guard: MAX_LOCALITY_LENGTH,
        });
    }
    if r_max >= 3 && n > MAX_DEEP_LOCALITY_LENGTH {
        return Err(Error::TooLarge {
            dimension: n,
            guard: MAX_DEEP_LOCALITY_LENGTH,
        });
    }

    let cols: Vec<u64> = (0..n).map(|c| code.generator().column_as_int(c)).collect();
    let mut by_value: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &v) in cols.iter().enumerate() {
        by_value.entry(v).or_default().push(i);
    }
    // all-pairs sum table, only when the search can need triples
    let pair_sums: HashMap<u64, Vec<(usize, usize)>> = if r_max >= 3 {
        let mut map: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
        for a in 0..n {
            for b in a + 1..n {
                map.entry(cols[a] ^ cols[b]).or_default().push((a, b));
            }
        }
        map
    } else {
        HashMap::new()
    };

    let find_single = |target: u64, banned: &[usize]| -> Option<usize> {
        by_value
            .get(&target)?
            .iter()
            .copied()
            .find(|j| !banned.contains(j))
    };
    let find_pair = |target: u64, banned: &[usize]| -> Option<(usize, usize)> {
        pair_sums.get(&target)?.iter().copied().find(|&(a, b)| {
            !banned.contains(&a) && !banned.contains(&b)
        })
    };

    let mut entries: Vec<Option<Vec<usize>>> = Vec::with_capacity(n);
    for i in 0..n {
        let target = cols[i];
        let mut found: Option<Vec<usize>> = None;
        // size 1: a duplicate column
        if let Some(j) = find_single(target, &[i]) {
            found = Some(vec![j]);
        }
        // size 2: scanning the first element in ascending order yields
        // the lexicographically smallest set
        if found.is_none() && r_max >= 2 {
            'two: for a in 0..n {
                if a == i {
                    continue;
                }
                if let Some(b) = find_single(target ^ cols[a], &[i, a]) {
                    let mut set = vec![a, b];
                    set.sort_unstable();
                    found = Some(set);
                    break 'two;
                }
            }
        }
        // size 3: first element scanned, remainder from the pair table
        if found.is_none() && r_max >= 3 {
            'three: for a in 0..n {
                if a == i {
                    continue;
                }
                if let Some((b, c)) = find_pair(target ^ cols[a], &[i, a]) {
                    let mut set = vec![a, b, c];
                    set.sort_unstable();
                    found = Some(set);
                    break 'three;
                }
            }
        }
        // size 4: leading pair scanned in lexicographic order
        if found.is_none() && r_max >= 4 {
            'four: for a in 0..n {
                if a == i {
                    continue;
                }
                for b in a + 1..n {
                    if b == i {
                        continue;
                    }
                    if let Some((c, d)) = find_pair(target ^ cols[a] ^ cols[b], &[i, a, b]) {
                        let mut set = vec![a, b, c, d];
                        set.sort_unstable();
                        found = Some(set);
                        break 'four;
                    }
                }
            }
        }
        entries.push(found);
    }
    Ok(LocalityCertificate {
        r_max_searched: r_max,
        entries,
    })
}

/// Derives a certificate from explicit dual rows (for instance the
/// output of a localization schedule): each coordinate takes the
/// lightest row covering it, with the earliest row breaking ties. The
/// rows are taken on trust here; run [`verify_certificate`] to check
/// the result against the code.
pub fn certificate_from_rows(code: &LinearCode, rows: &BitMatrix) -> Result<LocalityCertificate> {
    if rows.cols() != code.n() {
        return Err(Error::DimensionMismatch {
            context: "certificate rows must match the code length",
        });
    }
    let n = code.n();
    let mut best: Vec<Option<usize>> = vec![None; n];
    for r in 0..rows.rows() {
        let w = rows.row_weight(r);
        if w == 0 {
            continue;
        }
        for i in rows.row(r).support() {
            let better = match best[i] {
                None => true,
                Some(prev) => w < rows.row_weight(prev),
            };
            if better {
                best[i] = Some(r);
            }
        }
    }
    let mut r_max = 0;
    let entries: Vec<Option<Vec<usize>>> = (0..n)
        .map(|i| {
            best[i].map(|r| {
                let set: Vec<usize> =
                    rows.row(r).support().into_iter().filter(|&j| j != i).collect();
                r_max = r_max.max(set.len());
                set
            })
        })
        .collect();
    Ok(LocalityCertificate {
        r_max_searched: r_max,
        entries,
    })
}

/// Checks every populated entry of a certificate against the code: the
/// repair set must be inside bounds, must avoid its own coordinate, and
/// the word supported on `{i} ∪ set` must satisfy every generator row.
pub fn verify_certificate(code: &LinearCode, cert: &LocalityCertificate) -> bool {
    if cert.entries.len() != code.n() {
        return false;
    }
    let n = code.n();
    for (i, entry) in cert.entries.iter().enumerate() {
        let Some(set) = entry else { continue };
        let mut all = set.clone();
        all.push(i);
        all.sort_unstable();
        let distinct = all.windows(2).all(|w| w[0] != w[1]);
        if !distinct || all.iter().any(|&j| j >= n) {
            return false;
        }
        let word = BitVec::from_support(n, &all);
        let dual = (0..code.k()).all(|r| !code.generator().row(r).dot(&word));
        if !dual {
            return false;
        }
    }
    true
}

// ================================================================
// Bounds
// ================================================================

/// Which classical bound produced a dimension cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoptMethod {
    Plotkin,
    Singleton,
    GriesmerInverse,
}

impl KoptMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            KoptMethod::Plotkin => "plotkin",
            KoptMethod::Singleton => "singleton",
            KoptMethod::GriesmerInverse => "griesmer-inverse",
        }
    }
}

/// An upper bound on the dimension of any binary code of length `n` and
/// minimum distance `d`, with the bound that achieved it and whether an
/// odd distance was handled via the (n+1, d+1) extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KoptBound {
    pub k: usize,
    pub method: KoptMethod,
    pub odd_extension: bool,
}

/// Maximum number of codewords in a binary code of length `n` and
/// minimum distance `d`, by the averaging bound: for even d with
/// 2d > n, at most 2 * floor(d / (2d - n)); odd d goes through the
/// extension to (n+1, d+1). Returns `None` when 2d <= n after
/// extension, where the bound does not apply.
pub fn plotkin_upper(n: usize, d: usize) -> Option<u64> {
    let (n, d) = if d % 2 == 1 { (n + 1, d + 1) } else { (n, d) };
    if 2 * d <= n {
        return None;
    }
    Some(2 * ((d as u64) / ((2 * d - n) as u64)))
}

/// Sum over the first k shortened lengths: the minimum length of any
/// binary linear code of dimension `k` and distance `d`.
pub fn griesmer_min_length(k: usize, d: usize) -> usize {
    (0..k).map(|i| d.div_ceil(1 << i)).sum()
}

/// Largest dimension any binary code of length `n` and distance `d` can
/// have, as the best of three caps. `d > n` yields dimension 0.
pub fn k_opt_upper(n: usize, d: usize) -> KoptBound {
    if d == 0 || d > n {
        return KoptBound {
            k: if d > n { 0 } else { n },
            method: KoptMethod::Singleton,
            odd_extension: false,
        };
    }
    // candidates in tie-priority order
    let mut best = KoptBound {
        k: usize::MAX,
        method: KoptMethod::Singleton,
        odd_extension: false,
    };
    if let Some(a) = plotkin_upper(n, d) {
        let k = (u64::BITS - 1 - a.leading_zeros()) as usize; // floor(log2 a), a >= 1
        best = KoptBound {
            k,
            method: KoptMethod::Plotkin,
            odd_extension: d % 2 == 1,
        };
    }
    let singleton = n - d + 1;
    if singleton < best.k {
        best = KoptBound {
            k: singleton,
            method: KoptMethod::Singleton,
            odd_extension: false,
        };
    }
    let mut griesmer = 0;
    while griesmer < n && griesmer_min_length(griesmer + 1, d) <= n {
        griesmer += 1;
    }
    if griesmer < best.k {
        best = KoptBound {
            k: griesmer,
            method: KoptMethod::GriesmerInverse,
            odd_extension: false,
        };
    }
    best
}

/// The dimension cap for locality-r codes: minimizing over the number
/// of repair groups set aside, `k <= t*r + k_opt(n - t*(r+1), d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmBound {
    pub k_max: usize,
    /// The smallest t achieving the minimum.
    pub t: usize,
    /// The bound behind the k_opt term at that t.
    pub kopt_method: KoptMethod,
    pub odd_extension: bool,
}

/// Evaluates the locality dimension cap over all t with
/// `n - t*(r+1) >= 0`, keeping the smallest minimizing t.
pub fn cm_bound(n: usize, d: usize, r: usize) -> Result<CmBound> {
    if r == 0 {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            requirement: ">= 1",
        });
    }
    if n < r + 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n,
            requirement: "at least r + 1",
        });
    }
    let mut best: Option<CmBound> = None;
    for t in 1..=n / (r + 1) {
        let inner = k_opt_upper(n - t * (r + 1), d);
        let k_max = t * r + inner.k;
        if best.map_or(true, |b| k_max < b.k_max) {
            best = Some(CmBound {
                k_max,
                t,
                kopt_method: inner.method,
                odd_extension: inner.odd_extension,
            });
        }
    }
    Ok(best.expect("t = 1 is always evaluated"))
}

/// The locality generalization of the distance Singleton bound:
/// `d <= n - k - ceil(k/r) + 2`.
pub fn singleton_d_max(n: usize, k: usize, r: usize) -> Result<usize> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: k,
            requirement: "k >= 1 and r >= 1",
        });
    }
    (n + 2)
        .checked_sub(k + k.div_ceil(r))
        .ok_or(Error::InvalidParameter {
            name: "n",
            value: n,
            requirement: "large enough for a distance of at least 1",
        })
}

/// Everything the bound arithmetic says about one (n, k, d, r) claim.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub singleton_d_max: usize,
    pub griesmer_min_length: usize,
    pub griesmer_attained: bool,
    pub cm_k_max: usize,
    pub cm_t: usize,
    pub cm_attained: bool,
    pub kopt_method: String,
    pub notes: Vec<String>,
}

/// Runs all bounds against given parameters. `griesmer_attained` means
/// the length meets the Griesmer sum exactly; `cm_attained` means the
/// dimension meets the locality cap exactly.
pub fn optimality_report(n: usize, k: usize, d: usize, r: usize) -> Result<BoundReport> {
    let singleton = singleton_d_max(n, k, r)?;
    let griesmer = griesmer_min_length(k, d);
    let cm = cm_bound(n, d, r)?;
    let mut notes = Vec::new();
    if cm.odd_extension {
        notes.push(format!(
            "dimension cap evaluated through the even-distance extension ({}, {})",
            n - cm.t * (r + 1) + 1,
            d + 1
        ));
    }
    Ok(BoundReport {
        n,
        k,
        d,
        r,
        singleton_d_max: singleton,
        griesmer_min_length: griesmer,
        griesmer_attained: griesmer == n,
        cm_k_max: cm.k_max,
        cm_t: cm.t,
        cm_attained: cm.k_max == k,
        kopt_method: cm.kopt_method.as_str().to_string(),
        notes,
    })
}
