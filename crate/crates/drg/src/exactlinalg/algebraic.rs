//! Exact real algebraic numbers as used by spectra of small graphs:
//! rationals, elements of a real quadratic field, and isolated roots given
//! by a narrow rational interval.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::poly::IntPoly;

/// a + b*sqrt(d) with rational a, b and a positive nonsquare integer d.
/// Invariant: b != 0 (otherwise the value is stored as a plain rational).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticValue {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadraticValue {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        debug_assert!(!b.is_zero());
        debug_assert!(d.is_positive());
        debug_assert!(!is_perfect_square(&d));
        QuadraticValue { a, b, d }
    }

    /// Sign of a + b*sqrt(d), computed exactly.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // compare a^2 with b^2 * d; sign follows the larger magnitude side
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn neg(&self) -> Self {
        QuadraticValue {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn add_rat(&self, q: &BigRational) -> Self {
        QuadraticValue {
            a: &self.a + q,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> AlgebraicValue {
        assert_eq!(self.d, other.d, "mixed quadratic fields");
        AlgebraicValue::quadratic(&self.a + &other.a, &self.b + &other.b, self.d.clone())
    }

    pub fn mul(&self, other: &Self) -> AlgebraicValue {
        assert_eq!(self.d, other.d, "mixed quadratic fields");
        let d = BigRational::from_integer(self.d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        AlgebraicValue::quadratic(a, b, self.d.clone())
    }

    pub fn mul_rat(&self, q: &BigRational) -> AlgebraicValue {
        AlgebraicValue::quadratic(&self.a * q, &self.b * q, self.d.clone())
    }

    /// Multiplicative inverse (the value is nonzero since b != 0 and d is
    /// not a square).
    pub fn inv(&self) -> Self {
        let d = BigRational::from_integer(self.d.clone());
        let norm = &self.a * &self.a - &self.b * &self.b * &d;
        QuadraticValue {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d.clone(),
        }
    }

    /// Rational bounds lo < value < hi with hi - lo <= 2^-bits.
    pub fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        // bound sqrt(d) to enough precision, then scale by b
        let extra = 8;
        let shift = bits + extra;
        let scaled = &self.d << (2 * shift as usize);
        let s = scaled.sqrt(); // floor
        let lo_s = BigRational::new(s.clone(), BigInt::one() << (shift as usize));
        let hi_s = BigRational::new(s + 1, BigInt::one() << (shift as usize));
        let (blo, bhi) = if self.b.is_positive() {
            (&self.b * &lo_s, &self.b * &hi_s)
        } else {
            (&self.b * &hi_s, &self.b * &lo_s)
        };
        (&self.a + blo, &self.a + bhi)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }

    /// Minimal polynomial over the integers: for (p + q*sqrt(d)) write the
    /// value as x, then (x - p)^2 = q^2 d, cleared of denominators.
    pub fn min_poly(&self) -> IntPoly {
        // x^2 - 2p x + (p^2 - q^2 d), with rational p, q
        let p = &self.a;
        let q = &self.b;
        let d = BigRational::from_integer(self.d.clone());
        let c0 = p * p - q * q * d;
        let c1 = -BigRational::from_integer(BigInt::from(2)) * p;
        // clear denominators
        let l = c0.denom().lcm_ref(c1.denom());
        let lr = BigRational::from_integer(l.clone());
        IntPoly::new(vec![
            (&c0 * &lr).to_integer(),
            (&c1 * &lr).to_integer(),
            l,
        ])
    }
}

trait LcmRef {
    fn lcm_ref(&self, other: &BigInt) -> BigInt;
}

impl LcmRef for BigInt {
    fn lcm_ref(&self, other: &BigInt) -> BigInt {
        num_integer::Integer::lcm(self, other)
    }
}

fn rat_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &(&s * &s) == n
}

/// An exact real number from a graph spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicValue {
    Rational(BigRational),
    Quadratic(QuadraticValue),
    /// An irrational root isolated to a rational interval (lo, hi) that
    /// contains exactly one root of the defining polynomial.
    Interval { lo: BigRational, hi: BigRational },
}

impl AlgebraicValue {
    pub fn integer(n: i64) -> Self {
        AlgebraicValue::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        AlgebraicValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Normalizing constructor: collapses to Rational when b = 0 or d is a
    /// perfect square.
    pub fn quadratic(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() {
            return AlgebraicValue::Rational(a);
        }
        if is_perfect_square(&d) {
            let s = BigRational::from_integer(d.sqrt());
            return AlgebraicValue::Rational(a + b * s);
        }
        AlgebraicValue::Quadratic(QuadraticValue::new(a, b, d))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            AlgebraicValue::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            AlgebraicValue::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// Rational bounds lo <= value <= hi with width <= 2^-bits (width 0 for
    /// rationals).
    pub fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        match self {
            AlgebraicValue::Rational(q) => (q.clone(), q.clone()),
            AlgebraicValue::Quadratic(qv) => qv.bounds(bits),
            AlgebraicValue::Interval { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            AlgebraicValue::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            AlgebraicValue::Quadratic(qv) => qv.to_f64(),
            AlgebraicValue::Interval { lo, hi } => {
                let l = lo.to_f64().unwrap_or(f64::NAN);
                let h = hi.to_f64().unwrap_or(f64::NAN);
                (l + h) / 2.0
            }
        }
    }

    /// Exact comparison with a rational. For Interval values this is only
    /// meaningful when the rational lies outside the interval.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            AlgebraicValue::Rational(r) => r.cmp(q),
            AlgebraicValue::Quadratic(v) => {
                let diff = QuadraticValue {
                    a: &v.a - q,
                    b: v.b.clone(),
                    d: v.d.clone(),
                };
                match diff.sign() {
                    s if s < 0 => Ordering::Less,
                    0 => Ordering::Equal,
                    _ => Ordering::Greater,
                }
            }
            AlgebraicValue::Interval { lo, hi } => {
                if q <= lo {
                    Ordering::Greater
                } else if q >= hi {
                    Ordering::Less
                } else {
                    Ordering::Equal
                }
            }
        }
    }
}

impl PartialOrd for AlgebraicValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use AlgebraicValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (Rational(a), _) => other.cmp_rational(a).reverse(),
            (_, Rational(b)) => self.cmp_rational(b),
            (Quadratic(a), Quadratic(b)) if a.d == b.d => {
                let diff = QuadraticValue {
                    a: &a.a - &b.a,
                    b: &a.b - &b.b,
                    d: a.d.clone(),
                };
                if diff.b.is_zero() {
                    return match rat_sign(&diff.a) {
                        s if s < 0 => Ordering::Less,
                        0 => Ordering::Equal,
                        _ => Ordering::Greater,
                    };
                }
                match diff.sign() {
                    s if s < 0 => Ordering::Less,
                    0 => Ordering::Equal,
                    _ => Ordering::Greater,
                }
            }
            _ => {
                // refine to disjoint rational intervals; values here are
                // distinct roots, so the intervals separate eventually
                let mut bits = 32u32;
                loop {
                    let (alo, ahi) = self.bounds(bits);
                    let (blo, bhi) = other.bounds(bits);
                    if ahi < blo {
                        return Ordering::Less;
                    }
                    if bhi < alo {
                        return Ordering::Greater;
                    }
                    bits += 32;
                    assert!(bits <= 512, "could not separate algebraic values");
                }
            }
        }
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicValue::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.to_integer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            AlgebraicValue::Quadratic(v) => {
                // render as (a*c + b*c*sqrt(d))/c over a common denominator
                let c = num_integer::Integer::lcm(v.a.denom(), v.b.denom());
                let an = (&v.a * BigRational::from_integer(c.clone())).to_integer();
                let bn = (&v.b * BigRational::from_integer(c.clone())).to_integer();
                let core = if bn.is_one() {
                    format!("{}+sqrt({})", an, v.d)
                } else if bn == BigInt::from(-1) {
                    format!("{}-sqrt({})", an, v.d)
                } else {
                    format!("{}{:+}*sqrt({})", an, bn, v.d)
                };
                if c.is_one() {
                    write!(f, "{}", core)
                } else {
                    write!(f, "({})/{}", core, c)
                }
            }
            AlgebraicValue::Interval { lo, hi } => {
                write!(f, "~{:.6}", (lo + hi).to_f64().unwrap_or(f64::NAN) / 2.0)
            }
        }
    }
}
