//! Exact spectra of intersection arrays: eigenvalues of the tridiagonal
//! quotient matrix and multiplicities from the standard sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArrayError, IntersectionArray};
use crate::exactlinalg::{AlgebraicValue, CharPoly, RationalMatrix};

/// An eigenvalue of the array with its multiplicity. Multiplicities are
/// exact; None marks an eigenvalue only isolated numerically (degree > 2
/// irrational), for which the standard sequence cannot be evaluated in
/// closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub theta: AlgebraicValue,
    pub multiplicity: Option<AlgebraicValue>,
}

/// The spectrum estimate of an intersection array: distinct eigenvalues
/// k = θ_0 > θ_1 > … > θ_D with exact multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEstimate {
    pub entries: Vec<SpectrumEntry>,
    pub nu: BigInt,
}

impl SpectrumEstimate {
    /// All eigenvalues are integers.
    pub fn eigenvalues_integral(&self) -> bool {
        self.entries.iter().all(|e| e.theta.as_integer().is_some())
    }

    /// All multiplicities are known positive integers.
    pub fn multiplicities_integral(&self) -> bool {
        self.entries.iter().all(|e| match &e.multiplicity {
            Some(m) => m
                .as_integer()
                .map(|n| n.is_positive())
                .unwrap_or(false),
            None => false,
        })
    }

    pub fn second_largest(&self) -> &AlgebraicValue {
        &self.entries[1].theta
    }

    pub fn smallest(&self) -> &AlgebraicValue {
        &self.entries.last().unwrap().theta
    }
}

/// Tridiagonal quotient matrix of the array: row i holds c_i, a_i, b_i.
pub fn quotient_matrix_of(arr: &IntersectionArray) -> RationalMatrix {
    let d = arr.diameter();
    let mut m = RationalMatrix::zeros(d + 1);
    let set = |m: &mut RationalMatrix, i: usize, j: usize, v: i64| {
        m.set(i, j, BigRational::from_integer(BigInt::from(v)));
    };
    for i in 0..=d {
        if i > 0 {
            set(&mut m, i, i - 1, arr.c_at(i));
        }
        set(&mut m, i, i, arr.a_at(i));
        if i < d {
            set(&mut m, i, i + 1, arr.b_at(i));
        }
    }
    m
}

/// Exact spectrum of the array. Fails when the k_i are not positive
/// integers (the array is then already infeasible).
pub fn spectrum(arr: &IntersectionArray) -> Result<SpectrumEstimate, ArrayError> {
    let params = arr.derive();
    if !params.integral || !params.positive {
        return Err(ArrayError::Infeasible(format!(
            "infeasible array {}: k-sequence {:?} is not positive integral",
            arr,
            params
                .k_seq
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
        )));
    }
    let nu = params.nu.to_integer();
    let cp = CharPoly::of(&quotient_matrix_of(arr));
    // the quotient is tridiagonal with positive off-diagonal products, so
    // its eigenvalues are simple
    let eigs = cp.eigenvalues();
    let mut entries = Vec::with_capacity(eigs.len());
    for (theta, _) in eigs {
        let multiplicity = multiplicity_of(arr, &params.k_seq, &nu, &theta);
        entries.push(SpectrumEntry { theta, multiplicity });
    }
    Ok(SpectrumEstimate { entries, nu })
}

/// Standard-sequence multiplicity m(θ) = ν / Σ_i u_i(θ)² k_i with u_0 = 1,
/// u_1 = θ/k, and c_i u_{i−1} + a_i u_i + b_i u_{i+1} = θ u_i.
fn multiplicity_of(
    arr: &IntersectionArray,
    k_seq: &[BigRational],
    nu: &BigInt,
    theta: &AlgebraicValue,
) -> Option<AlgebraicValue> {
    // work in Q(sqrt(d)) as coefficient pairs (p, q) meaning p + q*sqrt(d);
    // rational thetas use q = 0 with an unused radicand
    let (ta, tb, d) = match theta {
        AlgebraicValue::Rational(q) => (q.clone(), BigRational::zero(), BigInt::from(2)),
        AlgebraicValue::Quadratic(v) => (v.a.clone(), v.b.clone(), v.d.clone()),
        AlgebraicValue::Interval { .. } => return None,
    };
    let dr = BigRational::from_integer(d.clone());
    let mul = |x: &(BigRational, BigRational), y: &(BigRational, BigRational)| {
        (
            &x.0 * &y.0 + &x.1 * &y.1 * &dr,
            &x.0 * &y.1 + &x.1 * &y.0,
        )
    };
    let theta_f = (ta, tb);
    let k = BigRational::from_integer(BigInt::from(arr.k()));

    let dql = arr.diameter();
    let mut u: Vec<(BigRational, BigRational)> = Vec::with_capacity(dql + 1);
    u.push((BigRational::one(), BigRational::zero()));
    u.push((&theta_f.0 / &k, &theta_f.1 / &k));
    for i in 1..dql {
        // u_{i+1} = ((θ − a_i) u_i − c_i u_{i−1}) / b_i
        let a_i = BigRational::from_integer(BigInt::from(arr.a_at(i)));
        let c_i = BigRational::from_integer(BigInt::from(arr.c_at(i)));
        let b_i = BigRational::from_integer(BigInt::from(arr.b_at(i)));
        let shifted = (&theta_f.0 - &a_i, theta_f.1.clone());
        let t1 = mul(&shifted, &u[i]);
        let t0 = (&u[i - 1].0 * &c_i, &u[i - 1].1 * &c_i);
        u.push(((&t1.0 - &t0.0) / &b_i, (&t1.1 - &t0.1) / &b_i));
    }

    // S = Σ u_i² k_i
    let mut s = (BigRational::zero(), BigRational::zero());
    for (i, ui) in u.iter().enumerate() {
        let sq = mul(ui, ui);
        s.0 += &sq.0 * &k_seq[i];
        s.1 += &sq.1 * &k_seq[i];
    }
    // m = ν / S, inverted in the quadratic field
    let norm = &s.0 * &s.0 - &s.1 * &s.1 * &dr;
    let nur = BigRational::from_integer(nu.clone());
    let ma = &nur * &s.0 / &norm;
    let mb = -(&nur * &s.1 / &norm);
    Some(AlgebraicValue::quadratic(ma, mb, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn int_spectrum(s: &str) -> Vec<(i64, i64)> {
        spectrum(&arr(s))
            .unwrap()
            .entries
            .iter()
            .map(|e| {
                (
                    i64::try_from(e.theta.as_integer().unwrap()).unwrap(),
                    i64::try_from(e.multiplicity.clone().unwrap().as_integer().unwrap())
                        .unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn gosset_spectrum() {
        assert_eq!(
            int_spectrum("{27,16,1;1,16,27}"),
            vec![(27, 1), (3, 21), (-1, 27), (-9, 7)]
        );
    }

    #[test]
    fn petersen_spectrum() {
        assert_eq!(int_spectrum("{3,2;1,1}"), vec![(3, 1), (1, 5), (-2, 4)]);
    }

    #[test]
    fn complete_graph_spectrum() {
        assert_eq!(int_spectrum("{6;1}"), vec![(6, 1), (-1, 6)]);
    }

    #[test]
    fn conway_smith_spectrum() {
        assert_eq!(
            int_spectrum("{10,6,4,1;1,2,6,10}"),
            vec![(10, 1), (5, 12), (1, 14), (-2, 30), (-4, 6)]
        );
    }

    #[test]
    fn paley13_spectrum_is_conference() {
        let sp = spectrum(&arr("{6,3;1,3}")).unwrap();
        assert_eq!(sp.entries[0].theta, AlgebraicValue::integer(6));
        let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
        assert_eq!(
            sp.entries[1].theta,
            AlgebraicValue::quadratic(half(-1), half(1), BigInt::from(13))
        );
        assert_eq!(
            sp.entries[2].theta,
            AlgebraicValue::quadratic(half(-1), half(-1), BigInt::from(13))
        );
        // conference graphs have irrational eigenvalues with integer
        // multiplicities
        assert_eq!(
            sp.entries[1].multiplicity,
            Some(AlgebraicValue::integer(6))
        );
        assert_eq!(
            sp.entries[2].multiplicity,
            Some(AlgebraicValue::integer(6))
        );
    }

    #[test]
    fn case3_array_has_irrational_eigenvalues() {
        let sp = spectrum(&arr("{28,12,1;1,6,28}")).unwrap();
        assert!(!sp.eigenvalues_integral());
    }

    #[test]
    fn case4_array_has_nonintegral_multiplicities() {
        let sp = spectrum(&arr("{21,12,1;1,4,21}")).unwrap();
        assert!(sp.eigenvalues_integral());
        assert!(!sp.multiplicities_integral());
    }

    #[test]
    fn infeasible_k_sequence_rejected() {
        // {4,2;1,3}: k_2 = 8/3
        assert!(spectrum(&arr("{4,2;1,3}")).is_err());
    }

    #[test]
    fn d2_multiplicity_matches_closed_form() {
        // m(θ1) = (θ2+1) k (k−θ2) / (c2 (θ2−θ1)) for SRGs
        for s in ["{3,2;1,1}", "{10,8;1,5}", "{16,5;1,8}", "{12,5;1,4}"] {
            let a = arr(s);
            let sp = spectrum(&a).unwrap();
            let t1 = i64::try_from(sp.entries[1].theta.as_integer().unwrap()).unwrap();
            let t2 = i64::try_from(sp.entries[2].theta.as_integer().unwrap()).unwrap();
            let k = a.k();
            let c2 = a.c[1];
            let closed = BigRational::new(
                BigInt::from((t2 + 1) * k * (k - t2)),
                BigInt::from(c2 * (t2 - t1)),
            );
            assert_eq!(
                sp.entries[1].multiplicity,
                Some(AlgebraicValue::Rational(closed)),
                "closed form mismatch for {}",
                s
            );
        }
    }
}
