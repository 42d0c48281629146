//! The feasibility battery: every arithmetic filter the classification
//! applies to a candidate intersection array.

use serde::Serialize;

use super::{spectrum, IntersectionArray, SRGParams};

/// Caller-supplied structural assumptions. The Terwilliger filters only
/// apply when the graph is known to contain an induced quadrangle; that is
/// not decidable from the array alone.
#[derive(Clone, Copy, Debug, Default)]
pub struct Assumptions {
    pub contains_quadrangle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail")]
pub enum Verdict {
    Pass,
    Fail(String),
    Inapplicable,
}

impl Verdict {
    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FeasibilityReport {
    pub array: String,
    pub filters: Vec<(String, Verdict)>,
    pub surviving: bool,
}

impl FeasibilityReport {
    pub fn verdict_of(&self, name: &str) -> Option<&Verdict> {
        self.filters
            .iter()
            .find(|(n, _)| n.starts_with(name))
            .map(|(_, v)| v)
    }
}

/// Run all applicable filters; never errors — problems surface as Fail
/// verdicts.
pub fn feasibility(arr: &IntersectionArray, assume: Assumptions) -> FeasibilityReport {
    let mut filters: Vec<(String, Verdict)> = Vec::new();
    let d = arr.diameter();
    let k = arr.k();
    let conference = arr.is_conference_form();

    // F1: basic monotonicity and b_i >= c_j for i + j <= D
    filters.push(("F1 monotonicity".into(), f1(arr)));

    // F2: k_i positive integers
    let params = arr.derive();
    let f2 = if params.integral && params.positive {
        Verdict::Pass
    } else {
        Verdict::Fail(format!(
            "k-sequence not positive integral: [{}]",
            params
                .k_seq
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    };
    let k_ok = !f2.failed();
    filters.push(("F2 k-sequence integrality".into(), f2));

    // spectrum-based filters need an integral k-sequence
    let sp = if k_ok { spectrum(arr).ok() } else { None };

    // F3: multiplicity integrality (conference arrays are exempt: their
    // multiplicities are integral by the conference identity)
    let f3 = match (&sp, conference) {
        (_, true) => Verdict::Inapplicable,
        (Some(sp), false) => {
            if sp.multiplicities_integral() {
                Verdict::Pass
            } else {
                Verdict::Fail(format!(
                    "non-integral multiplicities: [{}]",
                    sp.entries
                        .iter()
                        .map(|e| match &e.multiplicity {
                            Some(m) => m.to_string(),
                            None => "?".into(),
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            }
        }
        (None, false) => Verdict::Inapplicable,
    };
    filters.push(("F3 multiplicity integrality".into(), f3));

    // F4: Terwilliger chain c_i − b_i ≥ c_{i−1} − b_{i−1} + a_1 + 2
    let a1 = arr.a_at(1);
    let f4 = if !assume.contains_quadrangle {
        Verdict::Inapplicable
    } else {
        let mut bad = None;
        for i in 2..=d {
            let lhs = arr.c_at(i) - arr.b_at(i);
            let rhs = arr.c_at(i - 1) - arr.b_at(i - 1) + a1 + 2;
            if lhs < rhs {
                bad = Some(format!(
                    "c_{i} − b_{i} = {} < {} = c_{im1} − b_{im1} + a_1 + 2",
                    lhs,
                    rhs,
                    i = i,
                    im1 = i - 1
                ));
                break;
            }
        }
        match bad {
            Some(msg) => Verdict::Fail(msg),
            None => Verdict::Pass,
        }
    };
    filters.push(("F4 Terwilliger chain".into(), f4));

    // F5: diameter bound D ≤ 2k/(a_1 + 2) under the same assumption
    let f5 = if !assume.contains_quadrangle {
        Verdict::Inapplicable
    } else if (d as i64) * (a1 + 2) <= 2 * k {
        Verdict::Pass
    } else {
        Verdict::Fail(format!(
            "diameter bound violated: D = {} > 2k/(a_1+2) = {}/{}",
            d,
            2 * k,
            a1 + 2
        ))
    };
    filters.push(("F5 diameter bound".into(), f5));

    // F6: SRG identity for diameter 2
    let f6 = if d != 2 {
        Verdict::Inapplicable
    } else {
        match SRGParams::from_array(arr) {
            Some(p) if p.identity_holds() => Verdict::Pass,
            Some(p) => Verdict::Fail(format!(
                "k(k−λ−1) = {} ≠ {} = (ν−k−1)μ",
                p.k * p.b1(),
                (p.nu - p.k - 1) * p.mu
            )),
            None => Verdict::Fail("parameters not integral".into()),
        }
    };
    filters.push(("F6 SRG identity".into(), f6));

    // F7: eigenvalue integrality. Strongly regular non-conference arrays
    // must have integral eigenvalues; in larger diameter, irrational
    // eigenvalues are admissible only as conjugate pairs carrying equal
    // integral multiplicities (as in the icosahedron). A violated pairing
    // reproduces the "eigenvalues must be integer" eliminations.
    let f7 = match (&sp, conference) {
        (_, true) => Verdict::Inapplicable,
        (Some(sp), false) => {
            if sp.eigenvalues_integral() {
                Verdict::Pass
            } else if d == 2 {
                Verdict::Fail(format!(
                    "irrational eigenvalues in a non-conference strongly \
                     regular array: [{}]",
                    sp.entries
                        .iter()
                        .map(|e| e.theta.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            } else {
                match conjugate_pairs_consistent(sp) {
                    Ok(()) => Verdict::Pass,
                    Err(msg) => Verdict::Fail(msg),
                }
            }
        }
        (None, false) => Verdict::Inapplicable,
    };
    filters.push(("F7 eigenvalue integrality".into(), f7));

    let surviving = !filters.iter().any(|(_, v)| v.failed());
    FeasibilityReport {
        array: arr.to_string(),
        filters,
        surviving,
    }
}

/// Each quadratic eigenvalue must have its field conjugate in the spectrum
/// with the same integral multiplicity; anything of higher degree is
/// rejected as uncertifiable.
fn conjugate_pairs_consistent(sp: &super::SpectrumEstimate) -> Result<(), String> {
    use crate::exactlinalg::AlgebraicValue;
    for e in &sp.entries {
        match &e.theta {
            AlgebraicValue::Rational(_) => {}
            AlgebraicValue::Quadratic(v) => {
                let conj = AlgebraicValue::quadratic(v.a.clone(), -v.b.clone(), v.d.clone());
                let partner = sp
                    .entries
                    .iter()
                    .find(|o| o.theta == conj)
                    .ok_or_else(|| format!("eigenvalue {} has no conjugate", e.theta))?;
                let m = e.multiplicity.as_ref().and_then(|m| m.as_integer());
                let pm = partner.multiplicity.as_ref().and_then(|m| m.as_integer());
                match (m, pm) {
                    (Some(a), Some(b)) if a == b => {}
                    _ => {
                        return Err(format!(
                            "conjugate eigenvalues {} and {} need equal integral \
                             multiplicities, got {:?} and {:?}",
                            e.theta,
                            conj,
                            e.multiplicity.as_ref().map(|m| m.to_string()),
                            partner.multiplicity.as_ref().map(|m| m.to_string())
                        ))
                    }
                }
            }
            AlgebraicValue::Interval { .. } => {
                return Err(format!(
                    "eigenvalue {} is not expressible in a quadratic field",
                    e.theta
                ))
            }
        }
    }
    Ok(())
}

fn f1(arr: &IntersectionArray) -> Verdict {
    let d = arr.diameter();
    if arr.c_at(1) != 1 {
        return Verdict::Fail(format!("c_1 = {} ≠ 1", arr.c_at(1)));
    }
    if arr.b_at(d - 1) < 1 {
        return Verdict::Fail(format!("b_{} = {} < 1", d - 1, arr.b_at(d - 1)));
    }
    for i in 1..d {
        if arr.b_at(i) > arr.b_at(i - 1) || (i == 1 && arr.b_at(1) >= arr.b_at(0)) {
            return Verdict::Fail(format!(
                "b-sequence not decreasing: b_{} = {} vs b_{} = {}",
                i - 1,
                arr.b_at(i - 1),
                i,
                arr.b_at(i)
            ));
        }
    }
    for i in 2..=d {
        if arr.c_at(i) < arr.c_at(i - 1) {
            return Verdict::Fail(format!(
                "c-sequence not increasing: c_{} = {} vs c_{} = {}",
                i - 1,
                arr.c_at(i - 1),
                i,
                arr.c_at(i)
            ));
        }
    }
    for i in 0..=d {
        for j in 0..=d {
            if i + j <= d && i < d && j >= 1 && arr.b_at(i) < arr.c_at(j) {
                return Verdict::Fail(format!(
                    "b_{} = {} < c_{} = {} with i+j ≤ D",
                    i,
                    arr.b_at(i),
                    j,
                    arr.c_at(j)
                ));
            }
        }
    }
    for i in 1..=d {
        if arr.a_at(i) < 0 {
            return Verdict::Fail(format!("a_{} = {} < 0", i, arr.a_at(i)));
        }
    }
    Verdict::Pass
}
