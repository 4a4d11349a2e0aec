//! Exact rank computation for sparse integer matrices, over the rationals
//! (fraction-free integer elimination) and over prime fields.
//!
//! Matrices arrive as sparse columns with entries sorted by row index. Rank
//! is computed by the column-reduction scheme: columns are processed in
//! order, each reduced against the recorded pivot column sharing its
//! trailing nonzero position (the largest row index) until it either empties
//! (dependent) or claims a new pivot position. Column operations scale by
//! nonzero constants only, so the rank is preserved, and the rational path
//! never leaves the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse column: (row, coefficient) pairs sorted by ascending row.
pub type SparseCol = Vec<(usize, i64)>;

/// Rank over the field of fractions of ℤ, i.e. over ℚ.
///
/// Entirely integer-preserving: a column is reduced against a pivot column by
/// the cross-multiplied difference and then divided by the content (gcd of
/// its entries), which keeps the coefficients small in practice.
pub fn rank_rational(cols: &[SparseCol]) -> usize {
    let mut pivots: Vec<Option<Vec<(usize, BigInt)>>> = Vec::new();
    let mut rank = 0usize;
    for col in cols {
        let mut cur: Vec<(usize, BigInt)> =
            col.iter().map(|&(r, c)| (r, BigInt::from(c))).collect();
        // reduce against the pivot holding the current trailing position
        // until the column empties (dependent) or claims a free position
        while let Some(&(low, _)) = cur.last() {
            if pivots.len() <= low {
                pivots.resize_with(low + 1, || None);
            }
            match &pivots[low] {
                Some(piv) => {
                    cur = cross_reduce(&cur, piv);
                }
                None => {
                    normalize_content(&mut cur);
                    pivots[low] = Some(cur);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// piv_lead · cur − cur_lead · piv, merged by row; the shared trailing row
/// cancels, so the result's trailing position strictly decreases.
fn cross_reduce(cur: &[(usize, BigInt)], piv: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let cur_lead = &cur.last().unwrap().1;
    let piv_lead = &piv.last().unwrap().1;
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(cur.len() + piv.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < cur.len() || j < piv.len() {
        let take_cur = match (cur.get(i), piv.get(j)) {
            (Some(a), Some(b)) => {
                if a.0 == b.0 {
                    let v = piv_lead * &a.1 - cur_lead * &b.1;
                    if !v.is_zero() {
                        out.push((a.0, v));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
                a.0 < b.0
            }
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_cur {
            out.push((cur[i].0, piv_lead * &cur[i].1));
            i += 1;
        } else {
            out.push((piv[j].0, -(cur_lead * &piv[j].1)));
            j += 1;
        }
    }
    normalize_content(&mut out);
    out
}

fn normalize_content(col: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in col.iter() {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    let g = g.abs();
    for (_, c) in col.iter_mut() {
        *c = &*c / &g;
    }
}

/// Rank over GF(p); `p` must be an odd prime or 2, below 2^31 so products
/// fit in u64.
pub fn rank_mod_p(cols: &[SparseCol], p: u64) -> usize {
    debug_assert!((2..1 << 31).contains(&p));
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = Vec::new();
    let mut rank = 0usize;
    for col in cols {
        let mut cur: Vec<(usize, u64)> = col
            .iter()
            .filter_map(|&(r, c)| {
                let c = c.rem_euclid(p as i64) as u64;
                (c != 0).then_some((r, c))
            })
            .collect();
        while let Some(&(low, lead)) = cur.last() {
            if pivots.len() <= low {
                pivots.resize_with(low + 1, || None);
            }
            match &pivots[low] {
                Some(piv) => {
                    let piv_lead = piv.last().unwrap().1;
                    let factor = lead * mod_inverse(piv_lead, p) % p;
                    cur = mod_subtract_scaled(&cur, piv, factor, p);
                }
                None => {
                    pivots[low] = Some(cur);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// cur − factor · piv (mod p), merged by row.
fn mod_subtract_scaled(
    cur: &[(usize, u64)],
    piv: &[(usize, u64)],
    factor: u64,
    p: u64,
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(cur.len() + piv.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < cur.len() || j < piv.len() {
        match (cur.get(i), piv.get(j)) {
            (Some(&(ra, ca)), Some(&(rb, cb))) if ra == rb => {
                let v = (ca + p - (factor * cb) % p) % p;
                if v != 0 {
                    out.push((ra, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ra, ca)), Some(&(rb, _))) if ra < rb => {
                out.push((ra, ca));
                i += 1;
            }
            (Some(_), Some(&(rb, cb))) => {
                let v = (p - (factor * cb) % p) % p;
                if v != 0 {
                    out.push((rb, v));
                }
                j += 1;
            }
            (Some(&(ra, ca)), None) => {
                out.push((ra, ca));
                i += 1;
            }
            (None, Some(&(rb, cb))) => {
                let v = (p - (factor * cb) % p) % p;
                if v != 0 {
                    out.push((rb, v));
                }
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_to_cols(rows: &[&[i64]]) -> Vec<SparseCol> {
        let ncols = rows[0].len();
        (0..ncols)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .filter_map(|(i, r)| (r[j] != 0).then_some((i, r[j])))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rational_rank_of_small_matrices() {
        let m = dense_to_cols(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        let id = dense_to_cols(&[&[1, 0], &[0, 1]]);
        assert_eq!(rank_rational(&id), 2);
        assert_eq!(rank_rational(&[vec![], vec![]]), 0);
    }

    #[test]
    fn prime_field_rank_detects_torsion_scale() {
        // [[2]] has rank 1 over Q, rank 0 over GF(2)
        let m = vec![vec![(0usize, 2i64)]];
        assert_eq!(rank_rational(&m), 1);
        assert_eq!(rank_mod_p(&m, 2), 0);
        assert_eq!(rank_mod_p(&m, 3), 1);
    }

    #[test]
    fn ranks_agree_on_unimodular_matrix() {
        let m = dense_to_cols(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        // determinant 2: full rank over Q and GF(3), rank 2 over GF(2)
        assert_eq!(rank_rational(&m), 3);
        assert_eq!(rank_mod_p(&m, 3), 3);
        assert_eq!(rank_mod_p(&m, 2), 2);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    /// rank = size of the largest nonzero minor, by exhaustive expansion.
    fn rank_by_minors(rows: &[Vec<i64>]) -> usize {
        fn det(rows: &[Vec<i64>], ri: &[usize], ci: &[usize]) -> BigInt {
            if ri.is_empty() {
                return BigInt::from(1);
            }
            let mut acc = BigInt::zero();
            for (k, &c) in ci.iter().enumerate() {
                let entry = rows[ri[0]][c];
                if entry == 0 {
                    continue;
                }
                let rest: Vec<usize> = ci.iter().copied().filter(|&x| x != c).collect();
                let sub = det(rows, &ri[1..], &rest);
                let term = BigInt::from(entry) * sub;
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = combinations(n - 1, k);
            for mut c in combinations(n - 1, k - 1) {
                c.push(n - 1);
                out.push(c);
            }
            out
        }
        let (m, n) = (rows.len(), rows[0].len());
        for size in (1..=m.min(n)).rev() {
            for ri in combinations(m, size) {
                for ci in combinations(n, size) {
                    if !det(rows, &ri, &ci).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn column_reduction_matches_exhaustive_minor_rank() {
        // a deterministic spread of small dense matrices with mixed signs
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let m = 1 + (next() % 4) as usize;
            let n = 1 + (next() % 4) as usize;
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..n).map(|_| (next() % 7) as i64 - 3).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let cols = dense_to_cols(&refs);
            assert_eq!(
                rank_rational(&cols),
                rank_by_minors(&rows),
                "matrix {rows:?}"
            );
        }
    }
}
