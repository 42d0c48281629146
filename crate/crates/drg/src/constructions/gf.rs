//! Small finite fields GF(p^e) with table-based arithmetic.
//!
//! Elements are encoded as base-p digit strings read as integers: the
//! polynomial c_0 + c_1 x + … + c_{e−1} x^{e−1} over GF(p) is the index
//! c_0 + c_1 p + … + c_{e−1} p^{e−1}. The reduction polynomial is the
//! first irreducible monic polynomial of degree e in this encoding, which
//! for GF(16) is x⁴ + x + 1.

use super::ConstructionError;

#[derive(Clone, Debug)]
pub struct FiniteField {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// coefficients of the monic reduction polynomial, degree e, lowest
    /// first (length e + 1, leading 1)
    pub irred: Vec<u64>,
    mul_table: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor q as p^e for prime p, or fail.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, ConstructionError> {
        let (p, e) = prime_power(q).ok_or_else(|| {
            ConstructionError::InvalidParams(format!("{} is not a prime power", q))
        })?;
        if !is_prime(p) {
            return Err(ConstructionError::InvalidParams(format!(
                "{} is not a prime power",
                q
            )));
        }
        let irred = if e == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, e)
        };
        let mut f = FiniteField {
            p,
            e,
            q,
            irred,
            mul_table: Vec::new(),
        };
        f.build_mul_table();
        Ok(f)
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut x = x;
        for _ in 0..self.e {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    fn encode(&self, d: &[u64]) -> u64 {
        let mut x = 0;
        for &c in d.iter().rev() {
            x = x * self.p + c;
        }
        x
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u64> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self
            .digits(a)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    fn build_mul_table(&mut self) {
        let q = self.q as usize;
        let mut table = vec![0u64; q * q];
        for a in 0..self.q {
            for b in a..self.q {
                let v = self.mul_slow(a, b);
                table[a as usize * q + b as usize] = v;
                table[b as usize * q + a as usize] = v;
            }
        }
        self.mul_table = table;
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let da = self.digits(a);
        let db = self.digits(b);
        let deg = 2 * (self.e as usize - 1);
        let mut prod = vec![0u64; deg + 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the monic irreducible polynomial
        for i in (self.e as usize..=deg).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &ir) in self.irred.iter().enumerate().take(self.e as usize) {
                let idx = i - self.e as usize + j;
                prod[idx] = (prod[idx] + self.p * self.p - c * ir % self.p) % self.p;
            }
        }
        self.encode(&prod[..self.e as usize])
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_table[a as usize * self.q as usize + b as usize]
    }

    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.q - 2)
    }

    /// A primitive element: the smallest-index generator of the
    /// multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        for g in 2..self.q {
            let mut x = g;
            let mut count = 1;
            while x != 1 {
                x = self.mul(x, g);
                count += 1;
            }
            if count == self.q - 1 {
                return g;
            }
        }
        // GF(2) has the trivial group
        1
    }

    /// The index-r subgroup of the multiplicative group: all r-th power
    /// residues {g^(r·i)}.
    pub fn power_residues(&self, r: u64) -> Vec<u64> {
        assert!((self.q - 1) % r == 0, "r must divide q − 1");
        let g = self.primitive_element();
        let m = (self.q - 1) / r;
        let step = self.pow(g, r);
        let mut out = Vec::with_capacity(m as usize);
        let mut x = 1;
        for _ in 0..m {
            out.push(x);
            x = self.mul(x, step);
        }
        out.sort_unstable();
        out
    }

    /// Nonzero squares; for Paley graphs.
    pub fn squares(&self) -> Vec<u64> {
        self.power_residues(2)
    }
}

/// First irreducible monic polynomial of degree e over GF(p) in increasing
/// coefficient encoding.
fn find_irreducible(p: u64, e: u32) -> Vec<u64> {
    let qe = p.pow(e);
    for code in 0..qe {
        let mut poly = Vec::with_capacity(e as usize + 1);
        let mut x = code;
        for _ in 0..e {
            poly.push(x % p);
            x /= p;
        }
        poly.push(1);
        if poly_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomial exists for every degree");
}

/// Trial division by all monic polynomials of degree 1..=deg/2.
fn poly_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if poly[0] == 0 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                div.push(x % p);
                x /= p;
            }
            div.push(1);
            if poly_divides(&div, poly, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(div: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (j, &c) in div.iter().enumerate() {
                rem[shift + j] = (rem[shift + j] + p * p - lead * c % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf16_uses_x4_x_1() {
        let f = FiniteField::new(16).unwrap();
        assert_eq!(f.irred, vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf16_arithmetic() {
        let f = FiniteField::new(16).unwrap();
        // x * x^3 = x^4 = x + 1 -> encoding 3
        assert_eq!(f.mul(2, 8), 3);
        for a in 1..16 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        // multiplicative group is cyclic of order 15; x is primitive
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn gf16_cubes() {
        let f = FiniteField::new(16).unwrap();
        let cubes = f.power_residues(3);
        assert_eq!(cubes.len(), 5);
        assert!(cubes.contains(&1));
    }

    #[test]
    fn gf13_squares() {
        let f = FiniteField::new(13).unwrap();
        assert_eq!(f.squares(), vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn gf25_field() {
        let f = FiniteField::new(25).unwrap();
        assert_eq!((f.p, f.e), (5, 2));
        for a in 1..25 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn invalid_orders_rejected() {
        assert!(FiniteField::new(12).is_err());
        assert!(FiniteField::new(1).is_err());
    }
}
