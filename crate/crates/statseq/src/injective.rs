//! Exact criteria for when the order-`n` tree of the uniform family is
//! status injective, together with the integer machinery behind them.
//!
//! In the even-order tree the statuses of the two long arms, measured as
//! offsets from the minimum status, are `p^2 + 5p + 4` (left arm, distance
//! `p` from the center) and `q^2 + q - 6` (right arm). The three pendant
//! vertices that can collide with an arm have offsets `2k + 2`, `2k + 10`
//! and `4k + 6`, so injectivity reduces to membership of those three values
//! in the two quadratic ranges. Membership is decided by integer
//! square-root inversion, never by bounded enumeration.

use serde::Serialize;

use crate::construct::{build_tree, closed_form_status, Parity};
use crate::error::{Error, Result};
use crate::status::first_status_collision;

/// Left-arm status offset: `p^2 + 5p + 4`.
pub fn left_arm_offset(p: i64) -> i64 {
    p * p + 5 * p + 4
}

/// Right-arm status offset: `q^2 + q - 6`.
pub fn right_arm_offset(q: i64) -> i64 {
    q * q + q - 6
}

/// All integer pairs `(p, q)` with `|p|, |q| <= bound` where the two arm
/// offsets coincide. Over nonnegative integers this is empty; over all
/// integers exactly four pairs exist.
pub fn arm_offset_coincidences(bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in -bound..=bound {
        let value = left_arm_offset(p);
        for q in -bound..=bound {
            if right_arm_offset(q) == value {
                out.push((p, q));
            }
        }
    }
    out
}

/// Near-coincidence structure of the two offsets: whenever `p >= 7` and the
/// offsets are within 15 of each other, then `q = p + 2` and the gap is
/// exactly 4. Returns whether that implication holds for this `(p, q)`.
pub fn arm_offset_gap_ok(p: i64, q: i64) -> bool {
    debug_assert!(p > 0 && q > 0);
    let gap = left_arm_offset(p) - right_arm_offset(q);
    if p >= 7 && gap.abs() <= 15 {
        q == p + 2 && gap == 4
    } else {
        true
    }
}

/// Which arm (if any) attains the offset `value`, with the witnessing
/// positive parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OffsetMembership {
    LeftArm { p: i64 },
    RightArm { q: i64 },
    BothArms { p: i64, q: i64 },
    Absent,
}

/// Solves `p^2 + 5p + 4 = value` and `q^2 + q - 6 = value` over positive
/// integers, exactly.
pub fn offset_membership(value: i64) -> OffsetMembership {
    debug_assert!(value >= 0);
    let p = invert_quadratic(value, 5, 4);
    let q = invert_quadratic(value, 1, -6);
    match (p, q) {
        (Some(p), Some(q)) => OffsetMembership::BothArms { p, q },
        (Some(p), None) => OffsetMembership::LeftArm { p },
        (None, Some(q)) => OffsetMembership::RightArm { q },
        (None, None) => OffsetMembership::Absent,
    }
}

/// Positive integer root of `x^2 + bx + c = value`, if one exists:
/// `x = (-b + sqrt(b^2 - 4c + 4 value)) / 2`.
fn invert_quadratic(value: i64, b: i64, c: i64) -> Option<i64> {
    let disc = b * b - 4 * c + 4 * value;
    if disc < 0 {
        return None;
    }
    let root = (disc as u64).isqrt() as i64;
    if root * root != disc {
        return None;
    }
    let num = root - b;
    if num <= 0 || num % 2 != 0 {
        return None;
    }
    Some(num / 2)
}

/// Status offsets of the three even-case pendant vertices that can collide
/// with an arm: `{2k+2, 2k+10, 4k+6}`, belonging to labels `2k+5`, `2k+4`
/// and `2k+6` respectively.
pub fn pendant_offsets(k: usize) -> [i64; 3] {
    let k = k as i64;
    [2 * k + 2, 2 * k + 10, 4 * k + 6]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionPath {
    OddFamilyRule,
    EvenOffsetRule,
    DirectBruteForce,
}

/// Outcome of an injectivity decision for the order-`n` family tree.
#[derive(Debug, Clone, Serialize)]
pub struct InjectivityVerdict {
    pub n: usize,
    pub k: usize,
    pub parity: Parity,
    pub injective: bool,
    /// when not injective: 1-based labels of a vertex pair with equal status
    pub witness: Option<(usize, usize)>,
    pub criterion_path: CriterionPath,
}

/// Injectivity of the odd-order tree `n = 2k + 5`: not injective iff
/// `k = 2c^2 - 2`, `2c^2 - 4` or `2c^2 - 6` for an integer `c`. All such
/// `k` are even, so odd `k` (orders `n = 3 mod 4`) is always injective.
pub fn odd_injective(k: usize) -> Result<InjectivityVerdict> {
    if k < 7 {
        return Err(Error::KBelowDomain { k });
    }
    let n = 2 * k + 5;
    let mut witness = None;
    if k % 2 == 0 {
        // test the three forms by inversion: 2c^2 = k + 2, k + 4, k + 6
        if let Some(c) = half_square(k + 2) {
            // pendant 2k+5 meets the left arm at label k - (2c - 2)
            witness = Some((k + 2 - 2 * c, 2 * k + 5));
        } else if let Some(c) = half_square(k + 4) {
            // pendant 2k+5 meets the right arm (2k+4 meets the left arm too)
            witness = Some((k + 2 * c, 2 * k + 5));
        } else if let Some(c) = half_square(k + 6) {
            witness = Some((k + 2 * c, 2 * k + 4));
        }
    }
    if let Some((a, b)) = witness {
        debug_assert_eq!(
            closed_form_status(n, a).unwrap(),
            closed_form_status(n, b).unwrap()
        );
    }
    Ok(InjectivityVerdict {
        n,
        k,
        parity: Parity::Odd,
        injective: witness.is_none(),
        witness,
        criterion_path: CriterionPath::OddFamilyRule,
    })
}

/// `c` with `2c^2 = value`, if it exists.
fn half_square(value: usize) -> Option<usize> {
    if value % 2 != 0 {
        return None;
    }
    let half = (value / 2) as u64;
    let c = half.isqrt();
    (c * c == half).then_some(c as usize)
}

/// Injectivity of the even-order tree `n = 2k + 6`. Orders with `k = 7, 8`
/// are decided by direct brute force; for `k >= 9` the tree is injective
/// iff none of the pendant offsets is attained by an arm.
pub fn even_injective(k: usize) -> Result<InjectivityVerdict> {
    if k < 7 {
        return Err(Error::KBelowDomain { k });
    }
    let n = 2 * k + 6;
    if k <= 8 {
        let tree = build_tree(n)?;
        let witness =
            first_status_collision(&tree)?.map(|(u, v)| (u + 1, v + 1));
        return Ok(InjectivityVerdict {
            n,
            k,
            parity: Parity::Even,
            injective: witness.is_none(),
            witness,
            criterion_path: CriterionPath::DirectBruteForce,
        });
    }
    let pendant_labels = [2 * k + 5, 2 * k + 4, 2 * k + 6];
    let mut witness = None;
    for (offset, pendant) in pendant_offsets(k).into_iter().zip(pendant_labels) {
        let arm_label = match offset_membership(offset) {
            OffsetMembership::LeftArm { p } => Some(k - p as usize),
            OffsetMembership::RightArm { q } => Some(k + q as usize),
            OffsetMembership::BothArms { p, .. } => Some(k - p as usize),
            OffsetMembership::Absent => None,
        };
        if let Some(label) = arm_label {
            witness = Some((label.min(pendant), label.max(pendant)));
            break;
        }
    }
    if let Some((a, b)) = witness {
        debug_assert_eq!(
            closed_form_status(n, a).unwrap(),
            closed_form_status(n, b).unwrap()
        );
    }
    Ok(InjectivityVerdict {
        n,
        k,
        parity: Parity::Even,
        injective: witness.is_none(),
        witness,
        criterion_path: CriterionPath::EvenOffsetRule,
    })
}

/// Result of scanning every window of four consecutive `k` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowReport {
    pub pass: bool,
    /// smallest `k` whose window `k..k+3` contains no injective order
    pub first_failing: Option<usize>,
}

/// Checks that every window `k, k+1, k+2, k+3` inside `[k_lo, k_hi]`
/// contains at least one `k` whose even-order tree is status injective.
pub fn four_window_check(k_lo: usize, k_hi: usize) -> Result<WindowReport> {
    if k_lo < 7 || k_lo > k_hi {
        return Err(Error::InvalidRange { lo: k_lo, hi: k_hi });
    }
    for k in k_lo..=k_hi.saturating_sub(3) {
        let any = (k..=k + 3).try_fold(false, |acc, kk| {
            Ok::<bool, Error>(acc || even_injective(kk)?.injective)
        })?;
        if !any {
            return Ok(WindowReport {
                pass: false,
                first_failing: Some(k),
            });
        }
    }
    Ok(WindowReport {
        pass: true,
        first_failing: None,
    })
}
