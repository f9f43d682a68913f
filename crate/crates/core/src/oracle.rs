//! Brute-force ground truth for the cotree-based routines.
//!
//! Nothing here touches cotrees, eigen blocks or [`IntegerMatrix::rank`]:
//! the Laplacian is rebuilt from adjacency queries, ranks come from rational
//! Gauss-Jordan elimination, and characteristic polynomials from the
//! division-free Berkowitz recurrence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::control::ControlSet;
use crate::cotree::P4Witness;
use crate::graph::Graph;
use crate::matrix::IntegerMatrix;

/// Largest graph [`exhaustive_min_sets`] accepts.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("polynomial has a non-integer root (residual degree {0})")]
    NonIntegerRoot(usize),
    #[error("{n} vertices exceeds the exhaustive-search cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("vertex {vertex} out of range 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
}

fn laplacian_rows(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            let mut degree = 0i64;
            for (j, slot) in row.iter_mut().enumerate() {
                if i != j && g.has_edge(i, j) {
                    *slot = BigInt::from(-1);
                    degree += 1;
                }
            }
            row[i] = BigInt::from(degree);
            row
        })
        .collect()
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for x in &mut m[rank][col..] {
            *x = &*x / &pivot;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank of `[B, AB, .., A^{n-1} B]` with `A = -L(g)`; `n` means controllable.
pub fn kalman_rank(g: &Graph, c: &ControlSet) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if let Some(&v) = c.vertices().iter().find(|&&v| v >= n) {
        return Err(OracleError::VertexOutOfRange { vertex: v + 1, n });
    }
    let a: Vec<Vec<BigInt>> = laplacian_rows(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| -x).collect())
        .collect();
    // Columns of the Kalman matrix, generated block by block.
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(n * c.len());
    let mut block: Vec<Vec<BigInt>> = c
        .vertices()
        .iter()
        .map(|&j| (0..n).map(|i| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for _ in 0..n {
        let next: Vec<Vec<BigInt>> = block
            .iter()
            .map(|col| {
                (0..n)
                    .map(|i| a[i].iter().zip(col).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect();
        columns.append(&mut block);
        block = next;
    }
    let rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            columns
                .iter()
                .map(|col| BigRational::from_integer(col[i].clone()))
                .collect()
        })
        .collect();
    Ok(rational_rank(rows))
}

/// Coefficients of `det(xI - m)`, highest degree first (leading 1).
pub fn char_poly(m: &IntegerMatrix) -> Result<Vec<BigInt>, OracleError> {
    if !m.is_square() {
        return Err(OracleError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    // Grow from the bottom-right 1x1 corner. With the next corner written as
    // [[a, R], [C, S]], poly_{k+1} = T * poly_k where T is the lower
    // triangular Toeplitz matrix with first column
    // (1, -a, -R C, -R S C, .., -R S^{k-1} C).
    let e = |i: usize, j: usize| m.get(i, j).clone();
    let mut poly = vec![BigInt::one(), -e(n - 1, n - 1)];
    for k in 1..n {
        let top = n - 1 - k;
        let a = e(top, top);
        let r: Vec<BigInt> = (top + 1..n).map(|j| e(top, j)).collect();
        let mut s_pow_c: Vec<BigInt> = (top + 1..n).map(|i| e(i, top)).collect();
        let mut column = vec![BigInt::one(), -a];
        for step in 0..k {
            let rc: BigInt = r.iter().zip(&s_pow_c).map(|(x, y)| x * y).sum();
            column.push(-rc);
            if step + 1 < k {
                s_pow_c = (top + 1..n)
                    .map(|i| (top + 1..n).zip(&s_pow_c).map(|(j, y)| e(i, j) * y).sum())
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..k + 2)
            .map(|i| (0..=i.min(k)).map(|j| &column[i - j] * &poly[j]).sum())
            .collect();
        poly = next;
    }
    Ok(poly)
}

fn eval(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - r)`; the caller guarantees `r` is a root.
fn deflate(poly: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = BigInt::zero();
    for c in &poly[..poly.len() - 1] {
        acc = acc * r + c;
        out.push(acc.clone());
    }
    out
}

/// All roots of a monic integer polynomial (highest degree first), with
/// multiplicity, ascending. Errors if any root is not an integer.
pub fn integer_roots(poly: &[BigInt]) -> Result<Vec<BigInt>, OracleError> {
    let mut p: Vec<BigInt> = poly.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
        roots.push(BigInt::zero());
    }
    if p.len() > 1 {
        // Fujiwara: every root has modulus at most 2 * max |a_{d-k}/a_d|^{1/k}.
        let lead = p[0].abs();
        let d = p.len() - 1;
        let mut bound = BigInt::zero();
        for (k, c) in p.iter().enumerate().skip(1) {
            let mut coeff = c.abs();
            if k == d {
                coeff /= 2;
            }
            let q = coeff / &lead + 1u8;
            let root = q.nth_root(k as u32) + 1u8;
            bound = bound.max(root);
        }
        bound *= 2;
        let limit = bound.to_i64().unwrap_or(i64::MAX);
        let mut x = -limit;
        while x <= limit && p.len() > 1 {
            let r = BigInt::from(x);
            if x != 0 && (p.last().expect("nonempty") % &r).is_zero() {
                while p.len() > 1 && eval(&p, &r).is_zero() {
                    p = deflate(&p, &r);
                    roots.push(r.clone());
                }
            }
            x += 1;
        }
    }
    if p.len() > 1 {
        return Err(OracleError::NonIntegerRoot(p.len() - 1));
    }
    roots.sort();
    Ok(roots)
}

/// The first induced `P4` over all 4-subsets in lexicographic order, or
/// `None` for a cograph.
pub fn find_p4(g: &Graph) -> Option<P4Witness> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let adj = |x: usize, y: usize| g.has_edge(quad[x], quad[y]);
                    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                    let present: Vec<(usize, usize)> =
                        pairs.into_iter().filter(|&(x, y)| adj(x, y)).collect();
                    if present.len() != 3 {
                        continue;
                    }
                    let mut degree = [0; 4];
                    for &(x, y) in &present {
                        degree[x] += 1;
                        degree[y] += 1;
                    }
                    if degree.iter().any(|&k| k == 0 || k == 3) {
                        continue;
                    }
                    // Walk from the lower-id endpoint.
                    let start = (0..4).find(|&k| degree[k] == 1).expect("path has ends");
                    let mut path = vec![start];
                    while path.len() < 4 {
                        let cur = *path.last().expect("nonempty");
                        let next = (0..4)
                            .find(|&k| !path.contains(&k) && adj(cur, k))
                            .expect("path continues");
                        path.push(next);
                    }
                    return Some(P4Witness([
                        quad[path[0]],
                        quad[path[1]],
                        quad[path[2]],
                        quad[path[3]],
                    ]));
                }
            }
        }
    }
    None
}

pub fn is_p4_free(g: &Graph) -> bool {
    find_p4(g).is_none()
}

/// Smallest `k` with a controllable `k`-set, and every such set (each
/// ascending, sets in lexicographic order), by Kalman rank over all subsets.
pub fn exhaustive_min_sets(g: &Graph) -> Result<(usize, Vec<ControlSet>), OracleError> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(OracleError::SizeCap {
            n,
            cap: EXHAUSTIVE_MAX_VERTICES,
        });
    }
    for k in 0..=n {
        let mut found = Vec::new();
        for subset in k_subsets(n, k) {
            let c = ControlSet::new(subset).expect("distinct");
            if kalman_rank(g, &c)? == n {
                found.push(c);
            }
        }
        if !found.is_empty() {
            return Ok((k, found));
        }
    }
    unreachable!("full actuation is always controllable")
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
