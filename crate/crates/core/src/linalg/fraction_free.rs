//! Integer-preserving Gaussian elimination.
//!
//! Every row is cleared of denominators and kept primitive (content 1)
//! after each update, which keeps entry growth in check on the highly
//! structured matrices produced by polynomial operators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactMatrix;

/// Clears denominators row by row and divides out the content.
pub(super) fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    m.row_iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut out: Vec<BigInt> = row
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect();
            make_primitive(&mut out);
            out
        })
        .collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v /= &g;
        }
    }
}

/// `dest <- dest * pivot_mul - src * dest_mul`, then primitive.
fn eliminate_into(dest: &mut [BigInt], src: &[BigInt], col: usize) {
    let a = src[col].clone();
    let b = dest[col].clone();
    let g = a.gcd(&b);
    let am = &a / &g;
    let bm = &b / &g;
    for (d, s) in dest.iter_mut().zip(src) {
        if s.is_zero() {
            if !d.is_zero() {
                *d *= &am;
            }
        } else if d.is_zero() {
            *d = -(s * &bm);
        } else {
            *d = &*d * &am - s * &bm;
        }
    }
    debug_assert!(dest[col].is_zero());
    make_primitive(dest);
}

/// Forward elimination to row echelon form. Returns `(row, col)` of each
/// pivot in order; pivot `i` lives in row `i`.
///
/// Pivot choice: smallest nonzero magnitude in the column, lowest row
/// index on ties.
pub(super) fn forward_eliminate(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for r in next..rows.len() {
            let v = &rows[r][col];
            if v.is_zero() {
                continue;
            }
            match best {
                Some(b) if rows[b][col].magnitude() <= v.magnitude() => {}
                _ => best = Some(r),
            }
        }
        let Some(piv) = best else { continue };
        rows.swap(next, piv);
        let (head, tail) = rows.split_at_mut(next + 1);
        let pivot_row = &head[next];
        for row in tail.iter_mut() {
            if !row[col].is_zero() {
                eliminate_into(row, pivot_row, col);
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    pivots
}

/// Clears the entries above each pivot, giving a fraction-free reduced
/// echelon form (pivots need not be 1).
pub(super) fn back_substitute(rows: &mut [Vec<BigInt>], pivots: &[(usize, usize)]) {
    for &(pr, pc) in pivots.iter().rev() {
        let (head, tail) = rows.split_at_mut(pr);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            if !row[pc].is_zero() {
                eliminate_into(row, pivot_row, pc);
            }
        }
    }
}

/// Kernel basis as primitive integer vectors, one per free column, in
/// increasing free-column order.
pub(super) fn kernel(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let pivots = forward_eliminate(&mut rows, cols);
    back_substitute(&mut rows, &pivots);
    let mut pivot_of_col = vec![None; cols];
    for &(r, c) in &pivots {
        pivot_of_col[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| pivot_of_col[c].is_none()) {
        // v_free = L, v_pc = -row[free] * L / row[pc], with L the lcm of pivots involved.
        let mut lcm = BigInt::one();
        for &(r, c) in &pivots {
            if !rows[r][free].is_zero() {
                lcm = lcm.lcm(&rows[r][c]);
            }
        }
        let mut v = vec![BigInt::zero(); cols];
        v[free] = lcm.clone();
        for &(r, c) in &pivots {
            let coeff = &rows[r][free];
            if !coeff.is_zero() {
                v[c] = -(coeff * (&lcm / &rows[r][c]));
            }
        }
        make_primitive(&mut v);
        if v[free].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        basis.push(v);
    }
    basis
}
