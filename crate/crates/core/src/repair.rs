//! Single-symbol erasure repair driven by locality certificates.
//!
//! The point of the exercise: a repair set from a certificate lets a
//! coordinate be recovered by XORing the surviving symbols it names,
//! without ever touching the erased position. [`ErasurePattern`] makes
//! that structural — the erased symbol is physically absent.

use serde::Serialize;

use crate::analysis::LocalityCertificate;
use crate::bits::BitVec;
use crate::construct::LinearCode;
use crate::error::{Error, Result};

/// Dimension cap for exhaustive repair sweeps (2^20 codewords).
pub const MAX_SWEEP_DIMENSION: usize = 20;

/// A received word with one coordinate erased. Reads of the erased
/// position return `None`; there is no way to get the hidden bit back
/// out other than actually repairing it.
#[derive(Debug, Clone)]
pub struct ErasurePattern {
    erased: usize,
    symbols: Vec<Option<bool>>,
}

impl ErasurePattern {
    pub fn new(word: &BitVec, erased: usize) -> Result<Self> {
        if erased >= word.len() {
            return Err(Error::IndexOutOfRange {
                index: erased,
                bound: word.len(),
            });
        }
        let symbols = (0..word.len())
            .map(|i| if i == erased { None } else { Some(word.get(i)) })
            .collect();
        Ok(ErasurePattern { erased, symbols })
    }

    pub fn erased(&self) -> usize {
        self.erased
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The surviving symbol at `i`, or `None` at the erased position.
    pub fn read(&self, i: usize) -> Option<bool> {
        self.symbols.get(i).copied().flatten()
    }
}

/// Recovers the erased coordinate of `word` using the certificate's
/// repair set for it: the XOR of the surviving symbols the set names.
///
/// Errors: `NotACodeword` if the word fails the parity checks (repair
/// guarantees only hold inside the code), `IndexOutOfRange` for a bad
/// coordinate, and `NoCertificateForCoordinate` when the certificate
/// has no usable set for this position (absent, out of bounds, or
/// naming the erased position itself).
pub fn repair(
    code: &LinearCode,
    cert: &LocalityCertificate,
    word: &BitVec,
    erased: usize,
) -> Result<bool> {
    if !code.is_codeword(word) {
        return Err(Error::NotACodeword);
    }
    let pattern = ErasurePattern::new(word, erased)?;
    let set = cert
        .repair_set(erased)
        .ok_or(Error::NoCertificateForCoordinate {
            coordinate: erased,
        })?;
    let mut value = false;
    for &j in set {
        match pattern.read(j) {
            Some(bit) => value ^= bit,
            None => {
                return Err(Error::NoCertificateForCoordinate {
                    coordinate: erased,
                })
            }
        }
    }
    Ok(value)
}

/// Outcome of erasing every coordinate of every codeword and repairing
/// each one from the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepairSummary {
    /// Repairs attempted: 2^k codewords times n coordinates.
    pub cases: u64,
    /// Repairs that failed or recovered the wrong bit.
    pub failures: u64,
    /// Largest repair set used.
    pub max_group: usize,
}

/// Exhaustively checks the certificate: every coordinate of every
/// codeword must repair back to its true value. Coordinates without a
/// certificate entry count as failures. Errors with `TooLarge` when the
/// dimension exceeds `guard`.
pub fn repair_sweep_with_guard(
    code: &LinearCode,
    cert: &LocalityCertificate,
    guard: usize,
) -> Result<RepairSummary> {
    let k = code.k();
    if k > guard {
        return Err(Error::TooLarge {
            dimension: k,
            guard,
        });
    }
    let n = code.n();
    let rows: Vec<BitVec> = (0..k).map(|r| code.generator().row(r)).collect();
    let mut word = BitVec::zeros(n);
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut max_group = 0usize;
    let total = 1u64 << k;
    for i in 0..total {
        if i > 0 {
            word.xor_assign(&rows[i.trailing_zeros() as usize]);
        }
        for erased in 0..n {
            cases += 1;
            match repair(code, cert, &word, erased) {
                Ok(bit) if bit == word.get(erased) => {
                    max_group = max_group.max(cert.repair_set(erased).unwrap().len());
                }
                _ => failures += 1,
            }
        }
    }
    Ok(RepairSummary {
        cases,
        failures,
        max_group,
    })
}

/// [`repair_sweep_with_guard`] at the default dimension cap.
pub fn repair_sweep(code: &LinearCode, cert: &LocalityCertificate) -> Result<RepairSummary> {
    repair_sweep_with_guard(code, cert, MAX_SWEEP_DIMENSION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{certificate_from_rows, locality};
    use crate::construct::{
        build_augmented_simplex, build_c_ms2, build_subspace_code, localize_parity_check,
    };

    #[test]
    fn erasure_pattern_hides_exactly_one_symbol() {
        let word = BitVec::from_support(5, &[0, 3]);
        let p = ErasurePattern::new(&word, 3).unwrap();
        assert_eq!(p.erased(), 3);
        assert_eq!(p.len(), 5);
        assert_eq!(p.read(3), None);
        assert_eq!(p.read(0), Some(true));
        assert_eq!(p.read(1), Some(false));
        assert_eq!(p.read(9), None);
        assert!(ErasurePattern::new(&word, 5).is_err());
    }

    #[test]
    fn twelve_column_code_repairs_every_erasure() {
        let code = build_c_ms2(4, 3).unwrap();
        let localized = localize_parity_check(&code).unwrap();
        let cert = certificate_from_rows(&code, &localized.rows).unwrap();
        let summary = repair_sweep(&code, &cert).unwrap();
        assert_eq!(summary.cases, 16 * 12);
        assert_eq!(summary.failures, 0);
        assert_eq!(summary.max_group, 2);
    }

    #[test]
    fn searched_certificates_also_drive_repair() {
        let code = build_subspace_code(5).unwrap();
        let cert = locality(&code, 2).unwrap();
        let summary = repair_sweep(&code, &cert).unwrap();
        assert_eq!(summary.cases, 32 * 24);
        assert_eq!(summary.failures, 0);
        assert_eq!(summary.max_group, 2);

        let code = build_augmented_simplex(6).unwrap();
        let cert = locality(&code, 3).unwrap();
        let summary = repair_sweep(&code, &cert).unwrap();
        assert_eq!(summary.cases, 64 * 31);
        assert_eq!(summary.failures, 0);
        assert_eq!(summary.max_group, 3);
    }

    #[test]
    fn repair_rejects_words_outside_the_code() {
        let code = build_c_ms2(4, 3).unwrap();
        let cert = locality(&code, 2).unwrap();
        let mut word = code.encode(&BitVec::from_support(4, &[1]));
        word.set(0, !word.get(0));
        assert!(matches!(
            repair(&code, &cert, &word, 3).unwrap_err(),
            Error::NotACodeword
        ));
    }

    #[test]
    fn missing_certificate_entries_are_reported() {
        let code = build_augmented_simplex(6).unwrap();
        // radius-2 search finds nothing for this code
        let cert = locality(&code, 2).unwrap();
        let word = BitVec::zeros(code.n());
        assert!(matches!(
            repair(&code, &cert, &word, 0).unwrap_err(),
            Error::NoCertificateForCoordinate { coordinate: 0 }
        ));
        let summary = repair_sweep(&code, &cert).unwrap();
        assert_eq!(summary.failures, summary.cases);
    }

    #[test]
    fn sweep_guard_trips_on_large_dimensions() {
        let code = build_c_ms2(4, 3).unwrap();
        let cert = locality(&code, 2).unwrap();
        assert!(matches!(
            repair_sweep_with_guard(&code, &cert, 3).unwrap_err(),
            Error::TooLarge {
                dimension: 4,
                guard: 3
            }
        ));
    }
}
