//! Intersection arrays and their derived parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use super::ArrayError;

/// The intersection array {b_0, …, b_{D−1}; c_1, …, c_D} of a putative
/// distance-regular graph. The type stores raw data; validity is a
/// feasibility verdict, not a construction invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self, ArrayError> {
        if b.len() != c.len() || b.is_empty() {
            return Err(ArrayError::Malformed(format!(
                "need equally many b and c entries, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    /// b_i with the convention b_D = 0.
    pub fn b_at(&self, i: usize) -> i64 {
        if i < self.b.len() {
            self.b[i]
        } else {
            0
        }
    }

    /// c_i with the convention c_0 = 0; c_1.. are stored.
    pub fn c_at(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// a_i = k − b_i − c_i for 1 ≤ i ≤ D.
    pub fn a_at(&self, i: usize) -> i64 {
        self.k() - self.b_at(i) - self.c_at(i)
    }

    pub fn derive(&self) -> DRGParams {
        let d = self.diameter();
        let a: Vec<i64> = (1..=d).map(|i| self.a_at(i)).collect();
        let mut k_seq = vec![BigRational::one()];
        for i in 1..=d {
            let prev = k_seq[i - 1].clone();
            let next = prev * BigRational::new(
                BigInt::from(self.b_at(i - 1)),
                BigInt::from(self.c_at(i)),
            );
            k_seq.push(next);
        }
        let nu: BigRational = k_seq.iter().sum();
        let integral = k_seq.iter().all(|k| k.is_integer());
        let positive = k_seq.iter().all(|k| k.is_positive());
        DRGParams {
            k: self.k(),
            d,
            a,
            k_seq,
            nu,
            integral,
            positive,
        }
    }

    /// Conference-graph form {2t, t; 1, t}.
    pub fn is_conference_form(&self) -> bool {
        self.diameter() == 2
            && self.c[0] == 1
            && self.b[0] == 2 * self.b[1]
            && self.c[1] == self.b[1]
            && self.b[1] >= 1
    }

    pub fn shapes(&self) -> Vec<ShapeTag> {
        let mut tags = Vec::new();
        let d = self.diameter();
        if d == 3 && self.c[2] == self.k() && self.b[2] == 1 && self.c[0] == 1 {
            let k = self.k();
            if self.b[1] == self.c[1] {
                // Taylor: {k, μ', 1; 1, μ', k}
                tags.push(ShapeTag::Taylor);
            }
            // antipodal r-cover of K_{q+1} with array {q, q−m−1, 1; 1, m, q};
            // reported only for r > 2 (the r = 2 case is the Taylor shape)
            let q = k;
            let m = self.c[1];
            if self.b[1] == q - m - 1 && m >= 1 && (q - 1) % m == 0 {
                let r = (q - 1) / m;
                if r > 2 {
                    tags.push(ShapeTag::AntipodalCoverOfComplete { q, m, r });
                }
            }
        }
        if self.is_conference_form() {
            tags.push(ShapeTag::Conference);
        }
        if (1..=d).all(|i| self.a_at(i) == 0) {
            tags.push(ShapeTag::Bipartite);
        }
        if d == 2 && self.c[1] == self.k() {
            tags.push(ShapeTag::CompleteMultipartite);
        }
        tags
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape")]
pub enum ShapeTag {
    Taylor,
    AntipodalCoverOfComplete { q: i64, m: i64, r: i64 },
    Conference,
    Bipartite,
    CompleteMultipartite,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeTag::Taylor => write!(f, "taylor"),
            ShapeTag::AntipodalCoverOfComplete { q, m, r } => {
                write!(f, "antipodal-cover-of-complete(q={}, m={}, r={})", q, m, r)
            }
            ShapeTag::Conference => write!(f, "conference"),
            ShapeTag::Bipartite => write!(f, "bipartite"),
            ShapeTag::CompleteMultipartite => write!(f, "complete-multipartite"),
        }
    }
}

/// Parameters derived from an intersection array.
#[derive(Clone, Debug)]
pub struct DRGParams {
    pub k: i64,
    pub d: usize,
    /// a_1 … a_D
    pub a: Vec<i64>,
    /// k_0 = 1, k_1, …, k_D as exact rationals
    pub k_seq: Vec<BigRational>,
    /// ν = Σ k_i
    pub nu: BigRational,
    /// all k_i integral
    pub integral: bool,
    /// all k_i positive
    pub positive: bool,
}

impl DRGParams {
    pub fn nu_integer(&self) -> Option<BigInt> {
        if self.nu.is_integer() {
            Some(self.nu.to_integer())
        } else {
            None
        }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, ArrayError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| ArrayError::Malformed(format!("expected {{...}}, got {:?}", s)))?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| ArrayError::Malformed("missing ';' separator".into()))?;
        let parse_list = |part: &str| -> Result<Vec<i64>, ArrayError> {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| ArrayError::Malformed(format!("invalid entry {:?}", tok.trim())))
                })
                .collect()
        };
        IntersectionArray::new(parse_list(bs)?, parse_list(cs)?)
    }
}

/// Strongly regular graph parameters (ν, k, λ, μ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SRGParams {
    pub nu: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SRGParams {
    pub fn b1(&self) -> i64 {
        self.k - self.lambda - 1
    }

    /// The SRG identity k(k−λ−1) = (ν−k−1)μ.
    pub fn identity_holds(&self) -> bool {
        self.k * self.b1() == (self.nu - self.k - 1) * self.mu
    }

    pub fn to_array(&self) -> IntersectionArray {
        IntersectionArray {
            b: vec![self.k, self.b1()],
            c: vec![1, self.mu],
        }
    }

    pub fn from_array(arr: &IntersectionArray) -> Option<SRGParams> {
        if arr.diameter() != 2 || arr.c[0] != 1 {
            return None;
        }
        let p = arr.derive();
        let nu = p.nu_integer()?;
        Some(SRGParams {
            nu: i64::try_from(&nu).ok()?,
            k: arr.k(),
            lambda: arr.a_at(1),
            mu: arr.c[1],
        })
    }
}

/// Recover SRG parameters from valency and the two restricted eigenvalues:
/// μ = k + θ₁θ₂, b₁ = −(θ₁+1)(θ₂+1), λ = k − b₁ − 1, and ν from the SRG
/// identity.
pub fn srg_from_eigs(k: i64, theta1: i64, theta2: i64) -> Result<SRGParams, ArrayError> {
    if !(k > theta1 && theta1 > theta2) {
        return Err(ArrayError::Inconsistent(format!(
            "need k > θ1 > θ2, got k={}, θ1={}, θ2={}",
            k, theta1, theta2
        )));
    }
    let mu = k + theta1 * theta2;
    let b1 = -(theta1 + 1) * (theta2 + 1);
    let lambda = k - b1 - 1;
    if mu < 0 || lambda < 0 || b1 < 0 {
        return Err(ArrayError::Inconsistent(format!(
            "derived negative parameter: μ={}, b1={}, λ={}",
            mu, b1, lambda
        )));
    }
    if mu == 0 {
        return Err(ArrayError::Inconsistent("μ = 0 (disconnected complement case)".into()));
    }
    let num = k * b1;
    if num % mu != 0 {
        return Err(ArrayError::Inconsistent(format!(
            "k·b1 = {} not divisible by μ = {}",
            num, mu
        )));
    }
    let nu = num / mu + k + 1;
    Ok(SRGParams { nu, k, lambda, mu })
}

/// Theorem bound on the second eigenvalue from a coclique of size γ:
/// θ₁ ≤ (ν−γ)(k−μ)/(γk).
pub fn coclique_ratio_bound(p: &SRGParams, gamma: i64) -> BigRational {
    assert!(gamma >= 1);
    BigRational::new(
        BigInt::from((p.nu - gamma) * (p.k - p.mu)),
        BigInt::from(gamma * p.k),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let a = arr("{9,4,1;1,4,9}");
        assert_eq!(a.b, vec![9, 4, 1]);
        assert_eq!(a.c, vec![1, 4, 9]);
        assert_eq!(a.to_string(), "{9,4,1;1,4,9}");
        assert_eq!(arr(" { 9 , 4 , 1 ; 1 , 4 , 9 } "), a);
    }

    #[test]
    fn parse_errors() {
        assert!("{1,2;1}".parse::<IntersectionArray>().is_err());
        assert!("{1,2,3}".parse::<IntersectionArray>().is_err());
        assert!("1,2;1,2".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn derive_johnson_j63() {
        let p = arr("{9,4,1;1,4,9}").derive();
        assert_eq!(p.a, vec![4, 4, 0]);
        let ks: Vec<i64> = p
            .k_seq
            .iter()
            .map(|k| i64::try_from(k.to_integer()).unwrap())
            .collect();
        assert_eq!(ks, vec![1, 9, 9, 1]);
        assert_eq!(p.nu, BigRational::from_integer(20.into()));
    }

    #[test]
    fn derive_petersen() {
        let p = arr("{3,2;1,1}").derive();
        assert_eq!(p.a, vec![0, 2]);
        assert_eq!(p.nu, BigRational::from_integer(10.into()));
    }

    #[test]
    fn derive_complete_graph() {
        let p = arr("{6;1}").derive();
        assert_eq!(p.a, vec![5]);
        assert_eq!(p.nu, BigRational::from_integer(7.into()));
    }

    #[test]
    fn reassembly_identity() {
        let a = arr("{10,6,4,1;1,2,6,10}");
        for i in 1..=4 {
            assert_eq!(a.a_at(i) + a.b_at(i) + a.c_at(i), a.k());
        }
    }

    #[test]
    fn shapes_taylor() {
        assert_eq!(arr("{9,4,1;1,4,9}").shapes(), vec![ShapeTag::Taylor]);
    }

    #[test]
    fn shapes_antipodal_cover() {
        assert_eq!(
            arr("{16,10,1;1,5,16}").shapes(),
            vec![ShapeTag::AntipodalCoverOfComplete { q: 16, m: 5, r: 3 }]
        );
    }

    #[test]
    fn shapes_plain_array_has_none() {
        assert_eq!(arr("{3,2;1,1}").shapes(), vec![]);
    }

    #[test]
    fn shapes_conference_and_multipartite() {
        assert_eq!(arr("{6,3;1,3}").shapes(), vec![ShapeTag::Conference]);
        // K_{4x2}: {6,1;1,6}
        assert!(arr("{6,1;1,6}")
            .shapes()
            .contains(&ShapeTag::CompleteMultipartite));
    }

    #[test]
    fn srg_from_eigs_t5() {
        let p = srg_from_eigs(6, 1, -2).unwrap();
        assert_eq!(
            p,
            SRGParams {
                nu: 10,
                k: 6,
                lambda: 3,
                mu: 4
            }
        );
        assert!(p.identity_holds());
    }

    #[test]
    fn srg_from_eigs_claim_entry() {
        let p = srg_from_eigs(28, 3, -4).unwrap();
        assert_eq!(p.mu, 16);
        assert_eq!(p.b1(), 12);
        assert_eq!(p.to_array(), arr("{28,12;1,16}"));
    }

    #[test]
    fn srg_from_eigs_rejects_negative() {
        // (5, 0, -6) forces λ = -1
        assert!(srg_from_eigs(5, 0, -6).is_err());
        // (5, 0, -5) is K_{5,5}, a legitimate complete bipartite SRG
        let p = srg_from_eigs(5, 0, -5).unwrap();
        assert_eq!(
            p,
            SRGParams {
                nu: 10,
                k: 5,
                lambda: 0,
                mu: 5
            }
        );
    }

    #[test]
    fn coclique_bound_petersen_tight() {
        let p = SRGParams {
            nu: 10,
            k: 3,
            lambda: 0,
            mu: 1,
        };
        assert_eq!(
            coclique_ratio_bound(&p, 4),
            BigRational::from_integer(1.into())
        );
    }
}
