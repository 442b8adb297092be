//! Dense integer matrices used as an independent oracle for the word algebra.

use std::fmt;
use std::ops::Mul;

use crate::word::SignedWord;

/// Square matrix with entries in `{-1, 0, 1}` for word matrices; products and
/// sums may leave that range, so entries are stored as `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseSignMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl DenseSignMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseSignMatrix { dim, entries: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        DenseSignMatrix { dim, entries: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim * other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: i64) -> Self {
        DenseSignMatrix { dim: self.dim, entries: self.entries.iter().map(|&e| e * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        DenseSignMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Exactly one `±1` per row and per column, zeros elsewhere.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.dim;
        let mut col_hits = vec![0usize; n];
        for row in self.rows() {
            let mut row_hits = 0;
            for (hits, &x) in col_hits.iter_mut().zip(row) {
                match x {
                    0 => {}
                    1 | -1 => {
                        row_hits += 1;
                        *hits += 1;
                    }
                    _ => return false,
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&c| c == 1)
    }

    /// Both off-diagonal `n/2` blocks vanish.
    pub fn is_block_diagonal(&self) -> bool {
        let h = self.dim / 2;
        (0..self.dim).all(|i| (0..self.dim).all(|j| (i < h) == (j < h) || self.get(i, j) == 0))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Exact nonsingularity test.
    ///
    /// Gaussian elimination modulo enough 31-bit primes that their product
    /// exceeds the Hadamard bound, so `det ≡ 0` for all of them forces
    /// `det = 0` over the integers.
    pub fn is_nonsingular(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let log2_bound: f64 = self
            .rows()
            .map(|r| {
                let norm2: f64 = r.iter().map(|&x| (x as f64) * (x as f64)).sum();
                0.5 * norm2.max(1.0).log2()
            })
            .sum();
        let needed = (log2_bound / 30.0).floor() as usize + 1;
        assert!(needed <= PRIMES.len(), "entries too large for the modular determinant");
        PRIMES.iter().take(needed).any(|&p| self.det_mod(p) != 0)
    }

    fn det_mod(&self, p: u64) -> u64 {
        let n = self.dim;
        let mut m: Vec<u64> = self.entries.iter().map(|&e| e.rem_euclid(p as i64) as u64).collect();
        let mulm = |a: u64, b: u64| a * b % p;
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for k in 0..n {
                    m.swap(pivot * n + k, col * n + k);
                }
                det = (p - det) % p;
            }
            let pv = m[col * n + col];
            det = mulm(det, pv);
            let inv = pow_mod(pv, p - 2, p);
            for r in col + 1..n {
                let factor = mulm(m[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for k in col..n {
                    let sub = mulm(factor, m[col * n + k]);
                    m[r * n + k] = (m[r * n + k] + p - sub) % p;
                }
            }
        }
        det
    }
}

// Primes just below 2^31; products of residues fit in a u64.
const PRIMES: [u64; 32] = [
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
    2147483489,
    2147483477,
    2147483423,
    2147483399,
    2147483353,
    2147483323,
    2147483269,
    2147483249,
    2147483237,
    2147483179,
    2147483171,
    2147483137,
    2147483123,
    2147483077,
    2147483069,
    2147483059,
    2147483053,
    2147483033,
    2147483029,
    2147482951,
    2147482949,
    2147482943,
    2147482937,
    2147482921,
];

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
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

impl Mul for &DenseSignMatrix {
    type Output = DenseSignMatrix;
    fn mul(self, rhs: &DenseSignMatrix) -> DenseSignMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = DenseSignMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

/// Rows as space-separated integers.
impl fmt::Display for DenseSignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Kronecker product of the letter matrices, times the sign.
pub fn word_to_matrix(w: &SignedWord) -> DenseSignMatrix {
    let mut m = DenseSignMatrix::identity(1).scale(w.sign().as_i8() as i64);
    for &l in w.letters() {
        let rows: Vec<Vec<i64>> = l.matrix().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        m = m.kron(&DenseSignMatrix::from_rows(&rows));
    }
    m
}

/// `Σ λ_i · M(w_i)` as a dense integer matrix.
pub fn linear_combination(words: &[SignedWord], coefficients: &[i64]) -> DenseSignMatrix {
    assert_eq!(words.len(), coefficients.len());
    assert!(!words.is_empty());
    let mut acc = DenseSignMatrix::zeros(words[0].dimension());
    for (w, &c) in words.iter().zip(coefficients) {
        if c != 0 {
            acc = acc.add(&word_to_matrix(w).scale(c));
        }
    }
    acc
}
