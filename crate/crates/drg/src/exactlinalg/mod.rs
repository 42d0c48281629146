//! Exact linear algebra: characteristic polynomials over the integers,
//! Sturm-based root counting, and algebraic eigenvalue extraction.
//!
//! The pentagon has spectrum 2, ((-1+sqrt 5)/2)^2, ((-1-sqrt 5)/2)^2;
//! exactly one eigenvalue exceeds 1 and none equals 1:
//!
//! ```
//! use drg::exactlinalg::{AlgebraicValue, CharPoly};
//! use drg::graphcore::Graph;
//!
//! let cp = CharPoly::of(&Graph::cycle(5).adjacency_matrix());
//! let one = AlgebraicValue::integer(1);
//! assert_eq!(cp.count_greater(&one), 1);
//! assert_eq!(cp.multiplicity_at(&one), 0);
//! assert_eq!(cp.eigenvalues().len(), 3);
//! ```

mod algebraic;
mod matrix;
mod poly;

pub use algebraic::{is_perfect_square, AlgebraicValue, QuadraticValue};
pub use matrix::{berkowitz_char_poly, RationalMatrix};
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Characteristic polynomial of a rational matrix M, held as the monic
/// integer characteristic polynomial of denom*M. Eigenvalues of M are the
/// roots of `poly` divided by `denom`.
#[derive(Clone, Debug)]
pub struct CharPoly {
    pub poly: IntPoly,
    pub denom: BigInt,
}

impl CharPoly {
    pub fn of(m: &RationalMatrix) -> Self {
        let (poly, denom) = m.char_poly_scaled();
        CharPoly { poly, denom }
    }

    pub fn from_integer_poly(poly: IntPoly) -> Self {
        CharPoly {
            poly,
            denom: BigInt::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.poly.degree()
    }

    /// Threshold in eigenvalue scale converted to root scale (times denom).
    fn scale_threshold(&self, t: &AlgebraicValue) -> AlgebraicValue {
        let d = BigRational::from_integer(self.denom.clone());
        match t {
            AlgebraicValue::Rational(q) => AlgebraicValue::Rational(q * &d),
            AlgebraicValue::Quadratic(v) => v.mul_rat(&d),
            AlgebraicValue::Interval { .. } => {
                panic!("interval values cannot be used as exact thresholds")
            }
        }
    }

    /// Number of eigenvalues strictly greater than `t`, counted with
    /// multiplicity. Exact for rational and quadratic thresholds, including
    /// thresholds that are themselves eigenvalues.
    pub fn count_greater(&self, t: &AlgebraicValue) -> usize {
        let t = self.scale_threshold(t);
        squarefree_decomposition(&self.poly)
            .iter()
            .map(|(f, m)| m * count_greater_squarefree(f, &t))
            .sum()
    }

    /// Number of eigenvalues strictly less than `t`, with multiplicity.
    pub fn count_less(&self, t: &AlgebraicValue) -> usize {
        self.dim() - self.count_greater(t) - self.multiplicity_at(t)
    }

    /// Multiplicity of `t` as an eigenvalue (0 if it is not one).
    pub fn multiplicity_at(&self, t: &AlgebraicValue) -> usize {
        let t = self.scale_threshold(t);
        squarefree_decomposition(&self.poly)
            .iter()
            .map(|(f, m)| if root_sign(f, &t) == 0 { *m } else { 0 })
            .sum()
    }

    /// True when at most one eigenvalue (with multiplicity) exceeds `t`,
    /// i.e. the second largest eigenvalue is at most `t`.
    pub fn second_largest_at_most(&self, t: &AlgebraicValue) -> bool {
        self.count_greater(t) <= 1
    }

    /// All eigenvalues with multiplicities, sorted in decreasing order.
    /// Irrational eigenvalues of degree > 2 come back as isolating
    /// intervals of width at most 2^-30.
    pub fn eigenvalues(&self) -> Vec<(AlgebraicValue, usize)> {
        let mut out: Vec<(AlgebraicValue, usize)> = Vec::new();
        for (f, m) in squarefree_decomposition(&self.poly) {
            for root in roots_of_squarefree(&f) {
                out.push((self.descale(root), m));
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    pub fn smallest_eigenvalue(&self) -> AlgebraicValue {
        self.eigenvalues().pop().expect("empty matrix").0
    }

    pub fn largest_eigenvalue(&self) -> AlgebraicValue {
        self.eigenvalues().remove(0).0
    }

    /// Eigenvalues as integers with multiplicities, or None if any
    /// eigenvalue is not an integer.
    pub fn integer_eigenvalues(&self) -> Option<Vec<(BigInt, usize)>> {
        let mut out = Vec::new();
        for (v, m) in self.eigenvalues() {
            out.push((v.as_integer()?, m));
        }
        Some(out)
    }

    fn descale(&self, root: AlgebraicValue) -> AlgebraicValue {
        if self.denom.is_one() {
            return root;
        }
        let d = BigRational::from_integer(self.denom.clone());
        match root {
            AlgebraicValue::Rational(q) => AlgebraicValue::Rational(q / d),
            AlgebraicValue::Quadratic(v) => v.mul_rat(&(BigRational::one() / d)),
            AlgebraicValue::Interval { lo, hi } => AlgebraicValue::Interval {
                lo: lo / d.clone(),
                hi: hi / d,
            },
        }
    }
}

/// Yun's squarefree decomposition: p = prod f_i^i with squarefree, pairwise
/// coprime monic f_i. Requires monic input. Factors with f_i = 1 are
/// omitted.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    assert!(p.leading().is_one(), "squarefree decomposition needs monic input");
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0);
    let mut d = dp.exact_div(&a0).sub(&b.derivative());
    let mut i = 1usize;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        let bn = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = c.sub(&bn.derivative());
        b = bn;
        i += 1;
    }
    out
}

/// Sign of f at an exact algebraic point (rational or quadratic); 0 means
/// the point is a root.
fn root_sign(f: &IntPoly, t: &AlgebraicValue) -> i32 {
    match t {
        AlgebraicValue::Rational(q) => f.sign_at(q),
        AlgebraicValue::Quadratic(v) => eval_quadratic(f, v).sign(),
        AlgebraicValue::Interval { .. } => panic!("interval threshold"),
    }
}

/// Evaluate f at a + b*sqrt(d) by Horner in the quadratic field; the result
/// is returned with b possibly zero (then the sign is that of a).
fn eval_quadratic(f: &IntPoly, v: &QuadraticValue) -> QuadraticValue {
    let mut acc = QuadraticValue {
        a: BigRational::zero(),
        b: BigRational::zero(),
        d: v.d.clone(),
    };
    let d = BigRational::from_integer(v.d.clone());
    for c in f.coeffs().iter().rev() {
        // acc = acc * v + c
        let na = &acc.a * &v.a + &acc.b * &v.b * &d + BigRational::from_integer(c.clone());
        let nb = &acc.a * &v.b + &acc.b * &v.a;
        acc.a = na;
        acc.b = nb;
    }
    acc
}

impl QuadraticValue {
    /// Sign valid even when b = 0 (plain rational case).
    fn sign_allowing_rational(&self) -> i32 {
        if self.b.is_zero() {
            if self.a.is_zero() {
                0
            } else if self.a.is_positive() {
                1
            } else {
                -1
            }
        } else {
            self.sign()
        }
    }
}

/// Distinct roots of a squarefree monic f strictly greater than `t`.
fn count_greater_squarefree(f: &IntPoly, t: &AlgebraicValue) -> usize {
    match t {
        AlgebraicValue::Rational(q) => {
            let mut f = f.clone();
            if f.sign_at(q) == 0 {
                // deflate the root at t so the Sturm endpoint is regular
                let lin = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
                f = f.exact_div(&lin.primitive());
                if f.sign_at(q) == 0 {
                    unreachable!("squarefree factor had a double root");
                }
            }
            let chain = f.sturm_chain();
            poly::distinct_roots_greater(&chain, q)
        }
        AlgebraicValue::Quadratic(v) => {
            let mut f = f.clone();
            let mut extra = 0;
            if eval_quadratic(&f, v).sign_allowing_rational() == 0 {
                // deflating by the minimal polynomial also removes the
                // conjugate a - b*sqrt(d); when b < 0 that conjugate is
                // strictly greater than t and must still be counted
                f = f.exact_div(&v.min_poly().primitive());
                if v.b.is_negative() {
                    extra = 1;
                }
            }
            if f.degree() == 0 {
                return extra;
            }
            let chain = f.sturm_chain();
            // shrink a rational interval around t until it is root-free,
            // then count past its upper end
            let mut bits = 16u32;
            loop {
                let (lo, hi) = v.bounds(bits);
                if poly::distinct_roots_in(&chain, &lo, &hi) == 0 {
                    return extra + poly::distinct_roots_greater(&chain, &hi);
                }
                bits += 16;
                assert!(bits <= 1024, "failed to separate threshold from roots");
            }
        }
        AlgebraicValue::Interval { .. } => panic!("interval threshold"),
    }
}

use poly::{distinct_real_roots, distinct_roots_in};

/// All distinct real roots of a squarefree monic polynomial, identified as
/// integers or quadratic irrationals where possible and otherwise isolated
/// to intervals of width at most 2^-30.
fn roots_of_squarefree(f: &IntPoly) -> Vec<AlgebraicValue> {
    let n = f.degree();
    if n == 0 {
        return vec![];
    }
    let chain = f.sturm_chain();
    let total = distinct_real_roots(&chain);
    // Cauchy bound: all roots lie in (-bound, bound]
    let bound = BigInt::one()
        + f.coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
    let lo = BigRational::from_integer(-&bound);
    let hi = BigRational::from_integer(bound);

    // isolate distinct roots into disjoint half-open intervals (lo, hi]
    let mut stack = vec![(lo, hi, total)];
    let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
    while let Some((a, b, cnt)) = stack.pop() {
        if cnt == 0 {
            continue;
        }
        if cnt == 1 {
            isolated.push((a, b));
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let left = distinct_roots_in(&chain, &a, &mid);
        stack.push((mid.clone(), b, cnt - left));
        stack.push((a, mid, left));
    }

    // identify integer roots and deflate them
    let mut remaining = f.clone();
    let mut values = Vec::new();
    let mut unresolved: Vec<(BigRational, BigRational)> = Vec::new();
    for (mut a, mut b) in isolated {
        // shrink below width 1 so at most one integer candidate remains
        while &b - &a >= BigRational::one() {
            let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
            if distinct_roots_in(&chain, &a, &mid) == 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let cand = b.floor().to_integer();
        let candr = BigRational::from_integer(cand.clone());
        if candr > a && candr <= b && f.sign_at(&candr) == 0 {
            values.push(AlgebraicValue::Rational(candr));
            remaining = remaining.exact_div(&IntPoly::linear(&cand));
        } else {
            unresolved.push((a, b));
        }
    }

    if !unresolved.is_empty() {
        if remaining.degree() == 2 && unresolved.len() == 2 {
            // quadratic formula on x^2 + px + q
            let p = remaining.coeff(1);
            let q = remaining.coeff(0);
            let disc = &p * &p - BigInt::from(4) * &q;
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let a = BigRational::from_integer(-p) * &half;
            let b = half;
            values.push(AlgebraicValue::quadratic(a.clone(), -b.clone(), disc.clone()));
            values.push(AlgebraicValue::quadratic(a, b, disc));
        } else {
            // refine each interval to width <= 2^-30
            let target = BigRational::new(BigInt::one(), BigInt::one() << 30);
            for (mut a, mut b) in unresolved {
                while &b - &a > target {
                    let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
                    if f.sign_at(&mid) == 0 {
                        // rational root with a non-integer value
                        break;
                    }
                    if distinct_roots_in(&chain, &a, &mid) == 1 {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                if f.sign_at(&b) == 0 && !b.is_integer() {
                    values.push(AlgebraicValue::Rational(b));
                } else {
                    values.push(AlgebraicValue::Interval { lo: a, hi: b });
                }
            }
        }
    }
    values
}
