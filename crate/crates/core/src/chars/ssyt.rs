//! Kostka numbers by direct enumeration of semistandard tableaux with
//! entries in {1, 2, 3}.

use crate::error::{Error, Result};
use crate::weights::Weight;

fn shift_all(w: Weight, s: i64) -> Option<[i64; 3]> {
    Some([w[0].checked_add(s)?, w[1].checked_add(s)?, w[2].checked_add(s)?])
}

/// Number of semistandard tableaux of shape `λ` and content `ν`, after the
/// uniform shift making both nonnegative. Zero when `λ` is not dominant.
pub fn ssyt_count(lambda: Weight, nu: Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Ok(0);
    }
    let low = lambda[2].min(nu[0]).min(nu[1]).min(nu[2]);
    let s = low.checked_neg().ok_or(Error::NoCommonShift(lambda, nu))?.max(0);
    let (Some([l1, l2, l3]), Some([n1, n2, n3])) = (shift_all(lambda, s), shift_all(nu, s)) else {
        return Err(Error::NoCommonShift(lambda, nu));
    };
    if l1 + l2 + l3 != n1 + n2 + n3 {
        return Ok(0);
    }
    // Row 1 holds x11 ones, x12 twos, x13 threes; row 2 holds x22 twos and
    // x23 threes; row 3 holds only threes.
    let x11 = n1;
    let mut count = 0;
    for x12 in 0..=n2 {
        let x13 = l1 - x11 - x12;
        let x22 = n2 - x12;
        let x23 = l2 - x22;
        if x13 < 0 || x22 < 0 || x23 < 0 || x13 + x23 + l3 != n3 {
            continue;
        }
        if x22 <= x11 && l2 <= x11 + x12 && l3 <= x22 {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c)
    }

    #[test]
    fn small_kostka_numbers() {
        assert_eq!(ssyt_count(w(2, 1, 0), w(1, 1, 1)).unwrap(), 2);
        assert_eq!(ssyt_count(w(2, 1, 0), w(2, 1, 0)).unwrap(), 1);
        assert_eq!(ssyt_count(w(1, 1, 1), w(1, 1, 1)).unwrap(), 1);
        assert_eq!(ssyt_count(w(1, 0, -1), w(0, 0, 0)).unwrap(), 2);
        assert_eq!(ssyt_count(w(2, 1, 0), w(3, 0, 0)).unwrap(), 0);
        assert_eq!(ssyt_count(w(3, 0, 0), w(1, 1, 1)).unwrap(), 1);
        assert_eq!(ssyt_count(w(4, 2, 0), w(2, 2, 2)).unwrap(), 3);
    }

    #[test]
    fn content_order_does_not_matter() {
        let lambda = w(5, 2, 1);
        for nu in [w(3, 3, 2), w(3, 2, 3), w(2, 3, 3)] {
            assert_eq!(ssyt_count(lambda, nu).unwrap(), ssyt_count(lambda, w(3, 3, 2)).unwrap());
        }
    }

    #[test]
    fn overflowing_shift_is_rejected() {
        assert!(matches!(
            ssyt_count(w(0, 0, i64::MIN), w(0, 0, 0)),
            Err(Error::NoCommonShift(..))
        ));
    }
}
