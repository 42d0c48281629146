//! Exact matrices over the rationals and division-free characteristic
//! polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;

/// A square matrix with rational entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    /// Least common multiple of entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for e in &self.entries {
            l = l.lcm(e.denom());
        }
        l
    }

    /// Integer matrix d*M, where d is the denominator lcm.
    fn scaled_integer_entries(&self, d: &BigInt) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|e| {
                let v = e * BigRational::from_integer(d.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    /// Characteristic polynomial of the matrix, represented as a pair
    /// `(p, d)`: `p` is the monic integer characteristic polynomial of the
    /// scaled matrix `d*M`, so the eigenvalues of `M` are exactly the roots
    /// of `p` divided by `d`.
    pub fn char_poly_scaled(&self) -> (IntPoly, BigInt) {
        let d = self.denominator_lcm();
        let m = self.scaled_integer_entries(&d);
        (berkowitz_char_poly(self.n, &m), d)
    }

    /// Characteristic polynomial as an integer polynomial in x, valid when
    /// all entries are integers. Panics otherwise.
    pub fn char_poly(&self) -> IntPoly {
        let (p, d) = self.char_poly_scaled();
        assert!(d.is_one(), "char_poly requires integer entries");
        p
    }
}

/// Berkowitz's division-free characteristic polynomial algorithm for an
/// n-by-n integer matrix (row-major). Returns the monic characteristic
/// polynomial det(xI - M), coefficients lowest degree first.
pub fn berkowitz_char_poly(n: usize, m: &[BigInt]) -> IntPoly {
    if n == 0 {
        return IntPoly::from_i64(&[1]);
    }
    let at = |i: usize, j: usize| -> &BigInt { &m[i * n + j] };

    // Coefficient vector of the char poly of the leading principal r-by-r
    // submatrix, highest degree first: starts with [1, -m00] for r = 1.
    let mut c: Vec<BigInt> = vec![BigInt::one(), -at(0, 0).clone()];

    for r in 1..n {
        // Toeplitz column for step r: [1, -a, -(R S^0 C), -(R S^1 C), ...]
        // with a = m[r][r], R = row r restricted to 0..r, C = column r
        // restricted to 0..r, S = leading r-by-r block.
        let a = at(r, r).clone();
        let row: Vec<&BigInt> = (0..r).map(|j| at(r, j)).collect();
        let mut col: Vec<BigInt> = (0..r).map(|i| at(i, r).clone()).collect();

        let mut t: Vec<BigInt> = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a);
        for _ in 0..r {
            let mut dot = BigInt::zero();
            for j in 0..r {
                dot += row[j] * &col[j];
            }
            t.push(-dot);
            // col <- S * col
            let mut next = vec![BigInt::zero(); r];
            for (i, item) in next.iter_mut().enumerate() {
                let mut acc = BigInt::zero();
                for j in 0..r {
                    acc += at(i, j) * &col[j];
                }
                *item = acc;
            }
            col = next;
        }

        // c_new = T * c  (lower-triangular Toeplitz application)
        let mut cnew = vec![BigInt::zero(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            for (k, tk) in t.iter().enumerate() {
                if i + k < cnew.len() {
                    cnew[i + k] += tk * ci;
                }
            }
        }
        cnew.truncate(r + 2);
        c = cnew;
    }

    c.reverse();
    IntPoly::new(c)
}
