use alloc::vec::Vec;

use super::element::{Exps, EMPTY};
use super::rules::RewriteSystem;
use crate::cyclo::Coeff;
use crate::datum::Root;

/// Exponent bounds of the PBW box: `Some(N)` for truncated roots.
fn bounds<C: Coeff>(rs: &RewriteSystem<C>) -> [Option<u32>; 9] {
    core::array::from_fn(|i| rs.is_truncated(Root::from_index(i)).then(|| rs.n()))
}

/// Number of PBW words of ℤ-degree `d` (group part not counted).
pub fn graded_dimension<C: Coeff>(rs: &RewriteSystem<C>, d: u32) -> u64 {
    let b = bounds(rs);
    // coefficient extraction from Π (1 + t^h + … ) truncated at degree d
    let mut poly = alloc::vec![0u64; d as usize + 1];
    poly[0] = 1;
    for i in 0..9 {
        let h = Root::from_index(i).height() as usize;
        let max = b[i].map(|n| n as usize - 1).unwrap_or(usize::MAX);
        let mut next = alloc::vec![0u64; d as usize + 1];
        for (deg, &v) in poly.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let mut k = 0usize;
            while k <= max && deg + k * h <= d as usize {
                next[deg + k * h] += v;
                k += 1;
            }
        }
        poly = next;
    }
    poly[d as usize]
}

/// All PBW words of ℤ-degree `d`, in lexicographic exponent order.
pub fn pbw_words<C: Coeff>(rs: &RewriteSystem<C>, d: u32) -> Vec<Exps> {
    let b = bounds(rs);
    let mut out = Vec::new();
    let mut cur = EMPTY;
    fill(&b, 0, d, &mut cur, &mut out);
    out
}

fn fill(b: &[Option<u32>; 9], i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
    if i == 9 {
        if left == 0 {
            out.push(*cur);
        }
        return;
    }
    let h = Root::from_index(i).height();
    let mut k = 0u32;
    while k * h <= left && b[i].map_or(true, |n| k < n) {
        cur[i] = k as u8;
        fill(b, i + 1, left - k * h, cur, out);
        k += 1;
    }
    cur[i] = 0;
}

/// `N^9 · |Γ|` for a fully truncated system, `None` otherwise.
pub fn dimension<C: Coeff>(rs: &RewriteSystem<C>) -> Option<u128> {
    let b = bounds(rs);
    let mut acc = rs.datum().group_order() as u128;
    for x in b {
        acc *= x? as u128;
    }
    Some(acc)
}

/// Walks the whole exponent box `[0, N)^9` and counts its points.
pub fn enumerate_pbw_box<C: Coeff>(rs: &RewriteSystem<C>) -> Option<u64> {
    let b = bounds(rs);
    let n: [u32; 9] = core::array::from_fn(|i| b[i].unwrap_or(0));
    if n.iter().any(|&x| x == 0) {
        return None;
    }
    let mut cur = [0u32; 9];
    let mut count = 0u64;
    loop {
        count += 1;
        let mut i = 0;
        loop {
            if i == 9 {
                return Some(count);
            }
            cur[i] += 1;
            if cur[i] < n[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
