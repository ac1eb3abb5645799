use serde::Serialize;

use super::BoundsError;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum K6Case {
    /// b ≤ 49n/100.
    Sparse,
    /// 49n/100 < b ≤ 7n/10.
    Middle,
    /// b > 7n/10.
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseAnalysis {
    pub case: K6Case,
    pub bound: Rational,
}

fn q(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// nb/4 + 17(n−b)²/150 + e/3.
pub fn k6_inequality_one(n: u64, b: u64, e: u64) -> Rational {
    let (n, b, e) = (n as i128, b as i128, e as i128);
    q(n * b, 4) + q(17 * (n - b) * (n - b), 150) + q(e, 3)
}

/// n²/2 + 17(n−b)²/150 − 2e/3.
pub fn k6_inequality_two(n: u64, b: u64, e: u64) -> Rational {
    let (n, b, e) = (n as i128, b as i128, e as i128);
    q(n * n, 2) + q(17 * (n - b) * (n - b), 150) - q(2 * e, 3)
}

/// (17b² − 9nb + 42n²)/150.
pub fn k6_middle_closed_form(n: u64, b: u64) -> Rational {
    let (n, b) = (n as i128, b as i128);
    q(17 * b * b - 9 * n * b + 42 * n * n, 150)
}

/// h(b) = (−7b² + 9nb + 3n²)/20.
pub fn k6_dense_bound(n: u64, b: u64) -> Rational {
    let (n, b) = (n as i128, b as i128);
    q(-7 * b * b + 9 * n * b + 3 * n * n, 20)
}

/// Bound on f_B for a K₆-free graph with parameters `(n, b, e)`, by the
/// case on b. The middle case combines the two inequalities with weights
/// 2/3 and 1/3, which cancels e.
pub fn case_analysis_k6(n: u64, b: u64, e: u64) -> CaseAnalysis {
    let (n_, b_) = (n as i128, b as i128);
    if 100 * b_ <= 49 * n_ {
        CaseAnalysis {
            case: K6Case::Sparse,
            bound: q(117 * n_ * n_, 400),
        }
    } else if 10 * b_ <= 7 * n_ {
        let bound = q(2, 3) * k6_inequality_one(n, b, e) + q(1, 3) * k6_inequality_two(n, b, e);
        CaseAnalysis {
            case: K6Case::Middle,
            bound,
        }
    } else {
        CaseAnalysis {
            case: K6Case::Dense,
            bound: k6_dense_bound(n, b),
        }
    }
}

/// 1/(4c − 1): a minimal counterexample to f_B ≤ cn² has smaller clique number.
pub fn clique_threshold(c: Rational) -> Result<Rational, BoundsError> {
    if c <= q(1, 4) {
        return Err(BoundsError::InvalidArgument(format!(
            "clique threshold needs c > 1/4, got {c}"
        )));
    }
    Ok((Rational::from(4i128) * c - Rational::ONE).recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(clique_threshold(q(3, 10)).unwrap(), Rational::from(5i128));
        assert_eq!(clique_threshold(q(4403, 15000)).unwrap(), q(3750, 653));
        assert_eq!(clique_threshold(q(5, 16)).unwrap(), Rational::from(4i128));
        assert!(clique_threshold(q(1, 4)).is_err());
        assert!(clique_threshold(q(1, 5)).is_err());
    }

    #[test]
    fn cases() {
        let c1 = case_analysis_k6(100, 49, 0);
        assert_eq!(c1.case, K6Case::Sparse);
        assert_eq!(c1.bound, q(117 * 10000, 400));

        let c2 = case_analysis_k6(10, 7, 20);
        assert_eq!(c2.case, K6Case::Middle);
        assert_eq!(c2.bound, q(4403 * 100, 15000));

        let c3 = case_analysis_k6(10, 8, 20);
        assert_eq!(c3.case, K6Case::Dense);
        assert_eq!(c3.bound, k6_dense_bound(10, 8));
        assert!(c3.bound <= q(587 * 100, 2000));
    }

    #[test]
    fn middle_case_cancels_e() {
        for n in 1..40u64 {
            for b in 0..=n {
                for e in [0, n, n * (n - 1) / 2] {
                    let combined =
                        q(2, 3) * k6_inequality_one(n, b, e) + q(1, 3) * k6_inequality_two(n, b, e);
                    assert_eq!(combined, k6_middle_closed_form(n, b));
                }
            }
        }
    }
}
