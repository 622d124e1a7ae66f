//! Dense truncated-Fock-space oracle, independent of the library's algebra.

#![allow(dead_code)]

use ladder_core::Ladder;

pub type Dense = Vec<Vec<f64>>;

pub fn zeros(n: usize) -> Dense {
    vec![vec![0.0; n]; n]
}

pub fn identity(n: usize) -> Dense {
    let mut m = zeros(n);
    (0..n).for_each(|i| m[i][i] = 1.0);
    m
}

/// `a|k⟩ = √k |k−1⟩` on `|0⟩..|n−1⟩`.
pub fn lower(n: usize) -> Dense {
    let mut m = zeros(n);
    for k in 1..n {
        m[k - 1][k] = (k as f64).sqrt();
    }
    m
}

pub fn raise(n: usize) -> Dense {
    transpose(&lower(n))
}

pub fn transpose(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| a[c][r]).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zeros(n);
    for r in 0..n {
        for k in 0..n {
            if a[r][k] != 0.0 {
                for c in 0..n {
                    out[r][c] += a[r][k] * b[k][c];
                }
            }
        }
    }
    out
}

pub fn add_scaled(acc: &mut Dense, m: &Dense, s: f64) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (x, y) in ra.iter_mut().zip(rm) {
            *x += s * y;
        }
    }
}

pub fn power(m: &Dense, k: u32) -> Dense {
    (0..k).fold(identity(m.len()), |acc, _| matmul(&acc, m))
}

/// Product of elementary matrices in word order.
pub fn word_matrix(word: &[Ladder], n: usize) -> Dense {
    let a = lower(n);
    let ad = raise(n);
    word.iter().fold(identity(n), |acc, f| match f {
        Ladder::Lower => matmul(&acc, &a),
        Ladder::Raise => matmul(&acc, &ad),
    })
}

/// `a†^i a^j` built from elementary matrices.
pub fn monomial_matrix(i: u32, j: u32, n: usize) -> Dense {
    matmul(&power(&raise(n), i), &power(&lower(n), j))
}

/// `⟨m|M|m'⟩` for a vector-based probe: `M|col⟩` read at `row`.
pub fn expectation(m: &Dense, row: usize, col: usize) -> f64 {
    m[row][col]
}
