//! Lexicographic enumeration of finite assignments, with a size cap.

use crate::error::{Error, Result};

/// Default bound on candidate assignments for presheaf and matrix
/// enumeration.
pub const DEFAULT_CAP: u128 = 1_000_000;

/// Number of assignments for the given per-position domain sizes,
/// saturating at `u128::MAX`.
pub fn count(sizes: &[usize]) -> u128 {
    sizes
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}

pub fn check_cap(sizes: &[usize], cap: u128) -> Result<()> {
    let bound = count(sizes);
    if bound > cap {
        return Err(Error::EnumerationCapExceeded { bound, cap });
    }
    Ok(())
}

/// Calls `f` on every assignment `v` with `v[i] < sizes[i]`, in
/// lexicographic order with position 0 most significant. Stops early when
/// `f` returns `false`.
pub fn for_each_assignment(sizes: &[usize], mut f: impl FnMut(&[usize]) -> bool) {
    if sizes.contains(&0) {
        return;
    }
    let mut cur = vec![0usize; sizes.len()];
    loop {
        if !f(&cur) {
            return;
        }
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < sizes[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}
