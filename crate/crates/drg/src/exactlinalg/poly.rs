//! Integer polynomials with exact root counting via Sturm sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{}x", a)?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{}", i)?
                    } else {
                        write!(f, "{}x^{}", a, i)?
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monic linear factor x - r.
    pub fn linear(r: &BigInt) -> Self {
        Self::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// checking `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Content: gcd of coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; panics if the division is not exact.
    pub fn exact_div(&self, div: &Self) -> Self {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        // Work over rationals, then verify integrality.
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dn = div.degree();
        let dl = BigRational::from_integer(div.leading());
        let mut quot = vec![BigRational::zero(); self.coeffs.len() - div.coeffs.len() + 1];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dn] / &dl;
            quot[i] = q.clone();
            for (j, d) in div.coeffs.iter().enumerate() {
                let t = &q * BigRational::from_integer(d.clone());
                rem[i + j] -= t;
            }
        }
        assert!(
            rem.iter().all(|r| r.is_zero()),
            "exact_div: nonzero remainder"
        );
        Self::new(
            quot.into_iter()
                .map(|q| {
                    assert!(q.is_integer(), "exact_div: non-integer quotient");
                    q.to_integer()
                })
                .collect(),
        )
    }

    /// Sign of p(a/b) for exact rational a/b, via homogeneous evaluation.
    pub fn sign_at(&self, t: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let a = t.numer();
        let b = t.denom();
        let n = self.degree();
        // sum c_i a^i b^(n-i)
        let mut acc = BigInt::zero();
        let mut apow = BigInt::one();
        let mut bpows = vec![BigInt::one()];
        for _ in 0..n {
            bpows.push(bpows.last().unwrap() * b);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &apow * &bpows[n - i];
            apow *= a;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at +infinity (sign of the leading coefficient).
    fn sign_at_pos_inf(&self) -> i32 {
        match self.leading().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    fn sign_at_neg_inf(&self) -> i32 {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Pseudo-remainder scaled by a positive constant, suitable for Sturm
    /// chains (the remainder equals a positive multiple of rem(a, b)).
    fn pos_prem(a: &Self, b: &Self) -> Self {
        let da = a.degree();
        let db = b.degree();
        assert!(da >= db && !b.is_zero());
        let delta = (da - db + 1) as u32;
        let lb = b.leading();
        // scale by |lc(b)|^delta: positive, so the remainder keeps the sign of
        // the true remainder, and the division below stays exact
        let mut m = BigInt::one();
        for _ in 0..delta {
            m *= lb.abs();
        }
        let mut r = a.scale(&m);
        while !r.is_zero() && r.degree() >= db {
            let dr = r.degree();
            // r.leading() is divisible by b.leading() by construction of m
            let qc = &r.leading() / &lb;
            let mut shifted = vec![BigInt::zero(); dr - db];
            shifted.push(qc);
            let qpoly = Self::new(shifted);
            r = r.sub(&qpoly.mul(b));
        }
        r
    }

    /// Polynomial gcd (primitive, positive leading coefficient) via the
    /// primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            let r = Self::pos_prem(&a, &b);
            if r.is_zero() {
                return b.primitive();
            }
            if r.degree() == 0 {
                return Self::new(vec![BigInt::one()]);
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Squarefree part p / gcd(p, p'), primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return Self::new(vec![BigInt::one()]);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        // p is divisible by g up to content
        let p = self.primitive();
        p.exact_div(&g).primitive()
    }

    /// Sturm chain of the squarefree part (primitive polynomials).
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let p = self.squarefree_part();
        let mut chain = vec![p.clone()];
        let dp = p.derivative();
        if dp.is_zero() {
            return chain;
        }
        chain.push(dp.primitive());
        loop {
            let n = chain.len();
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            if b.degree() == 0 {
                break;
            }
            let r = Self::pos_prem(a, b);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        chain
    }
}

/// Sturm-chain sign variation count at a rational point.
fn variations_at(chain: &[IntPoly], t: &BigRational) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.sign_at(t)).collect();
    count_variations(&signs)
}

fn variations_at_pos_inf(chain: &[IntPoly]) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.sign_at_pos_inf()).collect();
    count_variations(&signs)
}

fn variations_at_neg_inf(chain: &[IntPoly]) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.sign_at_neg_inf()).collect();
    count_variations(&signs)
}

fn count_variations(signs: &[i32]) -> usize {
    let mut last = 0i32;
    let mut v = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi].
pub fn distinct_roots_in(chain: &[IntPoly], lo: &BigRational, hi: &BigRational) -> usize {
    variations_at(chain, lo) - variations_at(chain, hi)
}

/// Number of distinct real roots strictly greater than `t`.
pub fn distinct_roots_greater(chain: &[IntPoly], t: &BigRational) -> usize {
    variations_at(chain, t) - variations_at_pos_inf(chain)
}

/// Number of distinct real roots (anywhere).
pub fn distinct_real_roots(chain: &[IntPoly]) -> usize {
    variations_at_neg_inf(chain) - variations_at_pos_inf(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn display_and_degree() {
        let q = p(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(q.degree(), 2);
        assert_eq!(format!("{}", q), "x^2 - 1");
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x-2) and (x-1)(x+3) share x-1
        let a = p(&[2, -3, 1]);
        let b = p(&[-3, 2, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn squarefree_part_of_cube() {
        let x3 = p(&[0, 0, 0, 1]);
        assert_eq!(x3.squarefree_part(), p(&[0, 1]));
    }

    #[test]
    fn sturm_counts_roots_of_quadratic() {
        let q = p(&[-2, 0, 1]); // x^2 - 2, roots +-sqrt(2)
        let chain = q.sturm_chain();
        assert_eq!(distinct_real_roots(&chain), 2);
        let zero = BigRational::from_integer(0.into());
        assert_eq!(distinct_roots_greater(&chain, &zero), 1);
        let two = BigRational::from_integer(2.into());
        assert_eq!(distinct_roots_greater(&chain, &two), 0);
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = p(&[2, -3, 1]); // (x-1)(x-2)
        let b = p(&[-1, 1]);
        assert_eq!(a.exact_div(&b), p(&[-2, 1]));
    }

    #[test]
    fn sign_at_rational() {
        let q = p(&[-2, 0, 1]); // x^2 - 2
        let t = BigRational::new(3.into(), 2.into()); // 1.5 -> 0.25
        assert_eq!(q.sign_at(&t), 1);
        let t = BigRational::new(7.into(), 5.into()); // 1.4 -> -0.04
        assert_eq!(q.sign_at(&t), -1);
    }
}
