//! Asymptotic growth of the diagonal sequences: evaluation of the known
//! C_3 expansion, numeric growth-constant estimation by Richardson
//! extrapolation of exact term ratios, a report on the conjectured growth law
//! C_d(n) ~ alpha_d ((d-1)^d)^n n^(-(d-1)/2), and a demonstration that the
//! growth base 8 of C_3 is sub-dominant for its own recurrence.
//!
//! All arithmetic runs on exact big integers and [`Real`]s carrying 40
//! significant digits; nothing here touches f64 except final report fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::golden;
use crate::holonomic::{self, BigSequence, HolonomicError};
use crate::real::{pi, Real};

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("growth estimation undefined: sequence has zero or sign-changing terms")]
    UndefinedGrowth,
    #[error("insufficient data: need at least {need} terms, got {got}")]
    InsufficientData { need: usize, got: usize },
    #[error("perturbation must be nonzero")]
    ZeroPerturbation,
    #[error(transparent)]
    Holonomic(#[from] HolonomicError),
}

/// A growth parameter that is either exactly known or numerically estimated.
#[derive(Clone, Debug)]
pub enum Quantity {
    Exact(BigRational),
    Approx(Real),
}

impl Quantity {
    pub fn exact_int(n: i64) -> Self {
        Quantity::Exact(BigRational::from(BigInt::from(n)))
    }

    pub fn as_real(&self) -> Real {
        match self {
            Quantity::Exact(q) => Real::from_rational(q),
            Quantity::Approx(r) => r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.as_real().to_f64()
    }
}

/// Growth model alpha * mu^n * n^theta * (1 + sum_j a_j n^(-j)).
///
/// The correction coefficients a_j are exact rationals; mu and theta are
/// exact when known and estimates otherwise.
#[derive(Clone, Debug)]
pub struct AsymptoticModel {
    pub mu: Quantity,
    pub theta: Quantity,
    pub alpha: Real,
    pub corrections: Vec<BigRational>,
}

/// The known asymptotic expansion of C_3(n):
/// 2/(sqrt(3) pi) * 8^n * n^(-1) * (1 - 13/3 n^(-1) + 1477/27 n^(-2) - ...),
/// with the six correction coefficients stored exactly.
pub fn c3_asymptotic_model() -> AsymptoticModel {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    AsymptoticModel {
        mu: Quantity::exact_int(8),
        theta: Quantity::exact_int(-1),
        alpha: &Real::from_int(2) / &(&Real::from_int(3).sqrt() * pi()),
        corrections: vec![
            q(-13, 3),
            q(1477, 27),
            q(-93707, 81),
            q(8343061, 243),
            q(-2866730137, 2187),
            q(1204239422533, 19683),
        ],
    }
}

/// Evaluate the model at index `n` using the first `num_corrections`
/// correction terms. High precision throughout: 8^100 alone has 91 digits.
pub fn eval_model(model: &AsymptoticModel, n: u32, num_corrections: usize) -> Real {
    assert!(n >= 1);
    assert!(
        num_corrections <= model.corrections.len(),
        "model has only {} corrections",
        model.corrections.len()
    );
    let ln_n = Real::from_int(n as i64).ln();

    let mu_pow = match &model.mu {
        Quantity::Exact(q) => Real::from_rational(&q.pow(n as i32)),
        Quantity::Approx(r) => (&r.ln() * &Real::from_int(n as i64)).exp(),
    };
    let n_pow = match &model.theta {
        Quantity::Exact(q) if q.is_integer() => {
            Real::from_rational(&BigRational::from(BigInt::from(n)).pow(
                q.to_integer().to_i32().expect("small exponent"),
            ))
        }
        theta => (&theta.as_real() * &ln_n).exp(),
    };

    let mut series = BigRational::one();
    let nq = BigRational::from(BigInt::from(n));
    let mut npow = BigRational::one();
    for a in model.corrections.iter().take(num_corrections) {
        npow *= &nq;
        series += a / &npow;
    }

    &(&(&model.alpha * &mu_pow) * &n_pow) * &Real::from_rational(&series)
}

/// Neville extrapolation to 1/n = 0 of values sampled at consecutive integer
/// arguments. For value sequences with an asymptotic expansion in powers of
/// 1/n, stage k removes the n^(-k) term.
fn richardson(points: &[(i64, Real)]) -> Real {
    let depth = points.len() - 1;
    let mut t: Vec<Real> = points.iter().map(|(_, v)| v.clone()).collect();
    for k in 1..=depth {
        for i in (k..=depth).rev() {
            let n_i = Real::from_int(points[i].0);
            let n_ik = Real::from_int(points[i].0 - k as i64);
            t[i] = &(&(&n_i * &t[i]) - &(&n_ik * &t[i - 1])) / &Real::from_int(k as i64);
        }
    }
    t[depth].clone()
}

/// Extrapolation depth policy: deeper tables amplify noise on short inputs.
fn richardson_depth(len: usize) -> usize {
    (len / 3).clamp(1, 6).min(len.saturating_sub(2).max(1))
}

/// Common sign screen: growth estimation needs single-signed, nonzero terms.
/// Returns the magnitudes and the common sign.
fn magnitudes(seq: &BigSequence) -> Result<(Vec<BigInt>, bool), AsymptoticsError> {
    let terms = seq.terms();
    if terms.iter().any(|t| t.is_zero()) {
        return Err(AsymptoticsError::UndefinedGrowth);
    }
    let negative = terms[0].is_negative();
    if terms.iter().any(|t| t.is_negative() != negative) {
        return Err(AsymptoticsError::UndefinedGrowth);
    }
    Ok((terms.iter().map(|t| t.abs()).collect(), negative))
}

/// Estimate the growth model of a sequence: mu from Richardson-accelerated
/// term ratios, theta from log-ratio slopes against log n, alpha from the
/// rescaled terms — each accelerated over the tail of the sequence.
///
/// A provided `theta_hint` is used exactly instead of estimated, and also
/// pre-corrects the ratios (r(n) * (n/(n+1))^theta tends to mu with O(1/n^2)
/// corrections instead of O(1/n)).
pub fn estimate_growth(
    seq: &BigSequence,
    theta_hint: Option<&BigRational>,
) -> Result<AsymptoticModel, AsymptoticsError> {
    if seq.len() < 4 {
        return Err(AsymptoticsError::InsufficientData {
            need: 4,
            got: seq.len(),
        });
    }
    let (mags, negative) = magnitudes(seq)?;
    let depth = richardson_depth(seq.len());

    // mu from the last depth+1 ratios
    let last_ratio_n = seq.last_index() - 1;
    let ratio_at = |n: i64| -> Real {
        let i = (n - seq.offset()) as usize;
        Real::from_ratio(&mags[i + 1], &mags[i])
    };
    let hint_real = theta_hint.map(Real::from_rational);
    let corrected_ratio = |n: i64| -> Real {
        let r = ratio_at(n);
        match &hint_real {
            None => r,
            Some(theta) => {
                let step = &Real::from_int(n) / &Real::from_int(n + 1);
                &r * &step.pow(theta)
            }
        }
    };
    let mu_points: Vec<(i64, Real)> = (last_ratio_n - depth as i64..=last_ratio_n)
        .map(|n| (n, corrected_ratio(n)))
        .collect();
    let mu = richardson(&mu_points);

    // theta from theta(n) = ln(r(n)/mu) / ln((n+1)/n)
    let ln_mu = mu.ln();
    let theta = match theta_hint {
        Some(h) => Quantity::Exact(h.clone()),
        None => {
            let pts: Vec<(i64, Real)> = (last_ratio_n - depth as i64..=last_ratio_n)
                .map(|n| {
                    let t = &(&ratio_at(n).ln() - &ln_mu)
                        / &(&Real::from_int(n + 1).ln() - &Real::from_int(n).ln());
                    (n, t)
                })
                .collect();
            Quantity::Approx(richardson(&pts))
        }
    };

    // alpha from A(n) = a(n) / (mu^n n^theta)
    let theta_real = theta.as_real();
    let last_n = seq.last_index();
    let alpha_points: Vec<(i64, Real)> = (last_n - depth as i64..=last_n)
        .map(|n| {
            let i = (n - seq.offset()) as usize;
            let ln_a = Real::from_bigint(&mags[i]).ln();
            let ln_alpha = &(&ln_a - &(&Real::from_int(n) * &ln_mu))
                - &(&theta_real * &Real::from_int(n).ln());
            (n, ln_alpha.exp())
        })
        .collect();
    let mut alpha = richardson(&alpha_points);
    if negative {
        alpha = -&alpha;
    }

    Ok(AsymptoticModel {
        mu: Quantity::Approx(mu),
        theta,
        alpha,
        corrections: Vec::new(),
    })
}

/// Consistency report for the conjectured growth law
/// C_d(n) ~ alpha_d ((d-1)^d)^n n^(-(d-1)/2).
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub d: usize,
    /// (d-1)^d.
    pub mu_conjectured: BigInt,
    /// -(d-1)/2.
    pub theta_conjectured: BigRational,
    /// rho(N-1) = [a(N)/a(N-1)] * [N/(N-1)]^((d-1)/2).
    pub corrected_last_ratio: Real,
    /// |rho - mu*| / mu*.
    pub deviation: Real,
    /// Richardson-accelerated limit of the corrected ratios; needs N >= 6.
    pub mu_estimated: Option<Real>,
    /// Accelerated estimate of alpha_d under the conjectured mu and theta.
    pub alpha_estimate: Real,
    /// Relative change of the raw alpha(n) statistic over the last step;
    /// reported, never asserted — the constant itself is an open question.
    pub alpha_drift: Real,
    pub n_used: usize,
}

impl ConjectureReport {
    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "mu_conjectured": self.mu_conjectured.to_string(),
            "mu_estimated": self.mu_estimated.as_ref().map(|m| m.to_decimal_string(20)),
            "theta": Real::from_rational(&self.theta_conjectured).to_decimal_string(20),
            "corrected_last_ratio": self.corrected_last_ratio.to_decimal_string(20),
            "deviation": self.deviation.to_decimal_string(20),
            "alpha_estimate": self.alpha_estimate.to_decimal_string(20),
            "alpha_drift": self.alpha_drift.to_decimal_string(20),
            "n_used": self.n_used,
        })
    }
}

/// Test the conjectured growth law against computed terms of C_d.
pub fn check_conjecture(d: usize, seq: &BigSequence) -> Result<ConjectureReport, AsymptoticsError> {
    assert!(d >= 3, "the conjecture concerns d >= 3");
    let n_used = seq.len();
    if n_used < 3 {
        return Err(AsymptoticsError::InsufficientData {
            need: 3,
            got: n_used,
        });
    }
    let (mags, _) = magnitudes(seq)?;

    let mu_star = BigInt::from(d as i64 - 1).pow(d as u32);
    let theta_star = BigRational::new(BigInt::from(-(d as i64 - 1)), BigInt::from(2));
    let mu_star_real = Real::from_bigint(&mu_star);
    let half_power = Real::from_rational(&-&theta_star); // (d-1)/2 > 0

    // corrected ratio rho(n) = [a(n+1)/a(n)] * [(n+1)/n]^((d-1)/2)
    let rho = |n: i64| -> Real {
        let i = (n - seq.offset()) as usize;
        let r = Real::from_ratio(&mags[i + 1], &mags[i]);
        let step = &Real::from_int(n + 1) / &Real::from_int(n);
        &r * &step.pow(&half_power)
    };

    let last_ratio_n = seq.last_index() - 1;
    let corrected_last_ratio = rho(last_ratio_n);
    let deviation = (&corrected_last_ratio - &mu_star_real).abs() / mu_star_real.clone();

    let mu_estimated = if n_used >= 6 {
        let depth = richardson_depth(n_used);
        let pts: Vec<(i64, Real)> = (last_ratio_n - depth as i64..=last_ratio_n)
            .map(|n| (n, rho(n)))
            .collect();
        Some(richardson(&pts))
    } else {
        None
    };

    // alpha(n) = a(n) / (mu*^n n^theta*) under the conjectured constants
    let ln_mu_star = mu_star_real.ln();
    let theta_star_real = Real::from_rational(&theta_star);
    let alpha_at = |n: i64| -> Real {
        let i = (n - seq.offset()) as usize;
        let ln_a = Real::from_bigint(&mags[i]).ln();
        (&(&ln_a - &(&Real::from_int(n) * &ln_mu_star))
            - &(&theta_star_real * &Real::from_int(n).ln()))
            .exp()
    };
    let last_n = seq.last_index();
    let depth = richardson_depth(n_used);
    let alpha_pts: Vec<(i64, Real)> = (last_n - depth as i64..=last_n)
        .map(|n| (n, alpha_at(n)))
        .collect();
    let alpha_estimate = richardson(&alpha_pts);
    let alpha_last = &alpha_pts[alpha_pts.len() - 1].1;
    let alpha_prev = &alpha_pts[alpha_pts.len() - 2].1;
    let alpha_drift = (alpha_last - alpha_prev).abs() / alpha_last.clone();

    Ok(ConjectureReport {
        d,
        mu_conjectured: mu_star,
        theta_conjectured: theta_star,
        corrected_last_ratio,
        deviation,
        mu_estimated,
        alpha_estimate,
        alpha_drift,
        n_used,
    })
}

/// Sub-dominance demonstration for the C_3 recurrence.
#[derive(Clone, Debug)]
pub struct SubdominanceReport {
    pub horizon: i64,
    pub perturbation: BigInt,
    /// a(n+1)/a(n) at the horizon for the true initial conditions.
    pub unperturbed_terminal_ratio: Real,
    /// Same, with the last seed term shifted by the perturbation.
    pub perturbed_terminal_ratio: Real,
    /// Richardson-accelerated ratio limits; the first approaches 8, the
    /// second the dominant root 9.
    pub unperturbed_limit: Real,
    pub perturbed_limit: Real,
}

impl SubdominanceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "horizon": self.horizon,
            "perturbation": self.perturbation.to_string(),
            "unperturbed_terminal_ratio": self.unperturbed_terminal_ratio.to_decimal_string(20),
            "perturbed_terminal_ratio": self.perturbed_terminal_ratio.to_decimal_string(20),
            "unperturbed_limit": self.unperturbed_limit.to_decimal_string(20),
            "perturbed_limit": self.perturbed_limit.to_decimal_string(20),
        })
    }
}

/// Run the C_3 recurrence to n = 300 from the true initial conditions and
/// from a seed with the fifth term shifted by `perturbation`, and report the
/// terminal and extrapolated growth ratios of both orbits.
///
/// The growth base 8 of the true orbit is sub-dominant: any perturbation
/// excites the dominant root and drives the ratio to 9. Perturbed orbits need
/// not stay integral, so that orbit runs over exact rationals.
pub fn subdominance_demo(perturbation: &BigInt) -> Result<SubdominanceReport, AsymptoticsError> {
    if perturbation.is_zero() {
        return Err(AsymptoticsError::ZeroPerturbation);
    }
    const HORIZON: i64 = 300;
    let rec = holonomic::c3_recurrence();
    let seed = golden::diagonal_terms(3).window(1, 5);

    let unperturbed = holonomic::extend(&rec, &seed, HORIZON)?;
    let u_terms = unperturbed.terms();

    let mut pert_seed: Vec<BigRational> = seed
        .terms()
        .iter()
        .map(|t| BigRational::from(t.clone()))
        .collect();
    pert_seed[4] += BigRational::from(perturbation.clone());
    let perturbed = holonomic::extend_rational(&rec, 1, &pert_seed, HORIZON)?;

    let u_ratio = |n: i64| -> Real {
        let i = (n - 1) as usize;
        Real::from_ratio(&u_terms[i + 1], &u_terms[i])
    };
    let p_ratio = |n: i64| -> Real {
        let i = (n - 1) as usize;
        Real::from_rational(&(&perturbed[i + 1] / &perturbed[i]))
    };

    let depth = 6usize;
    let pts_u: Vec<(i64, Real)> = (HORIZON - 1 - depth as i64..=HORIZON - 1)
        .map(|n| (n, u_ratio(n)))
        .collect();
    let pts_p: Vec<(i64, Real)> = (HORIZON - 1 - depth as i64..=HORIZON - 1)
        .map(|n| (n, p_ratio(n)))
        .collect();

    Ok(SubdominanceReport {
        horizon: HORIZON,
        perturbation: perturbation.clone(),
        unperturbed_terminal_ratio: u_ratio(HORIZON - 1),
        perturbed_terminal_ratio: p_ratio(HORIZON - 1),
        unperturbed_limit: richardson(&pts_u),
        perturbed_limit: richardson(&pts_p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(a: &Real, b: &Real) -> f64 {
        ((a - b) / b.clone()).to_f64().abs()
    }

    #[test]
    fn model_constants() {
        let m = c3_asymptotic_model();
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(m.corrections[0], q(-13, 3));
        assert_eq!(m.corrections[5], q(1204239422533, 19683));
        // alpha = 2/(sqrt(3) pi) = 0.36755259694...
        assert!((m.alpha.to_f64() - 0.36755259694258586).abs() < 1e-15);
    }

    #[test]
    fn eval_leading_order_at_one() {
        let m = c3_asymptotic_model();
        // n = 1, no corrections: alpha * mu * 1^theta
        let v = eval_model(&m, 1, 0);
        let want = &m.alpha * &Real::from_int(8);
        assert!(rel_err(&v, &want) < 1e-30);
    }

    #[test]
    fn richardson_nails_polynomial_decay() {
        // v(n) = 5 + 3/n - 7/n^2 extrapolates exactly at depth >= 2
        let pts: Vec<(i64, Real)> = (10..=14)
            .map(|n| {
                let v = &(&Real::from_int(5)
                    + &(&Real::from_int(3) / &Real::from_int(n)))
                    - &(&Real::from_int(7)
                        / &(&Real::from_int(n) * &Real::from_int(n)));
                (n, v)
            })
            .collect();
        let lim = richardson(&pts);
        assert!((lim.to_f64() - 5.0).abs() < 1e-25);
    }

    #[test]
    fn estimates_pure_geometric_growth() {
        let mut terms = Vec::new();
        let mut x = BigInt::one();
        for _ in 0..30 {
            terms.push(x.clone());
            x *= 2;
        }
        let m = estimate_growth(&BigSequence::new(1, terms), None).unwrap();
        assert!((m.mu.to_f64() - 2.0).abs() < 1e-12);
        assert!(m.theta.to_f64().abs() < 1e-9);
        assert!((m.alpha.to_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn estimate_rejects_bad_sequences() {
        let zero = BigSequence::from_i64s(1, &[1, 0, 2, 3]);
        assert!(matches!(
            estimate_growth(&zero, None),
            Err(AsymptoticsError::UndefinedGrowth)
        ));
        let alternating = BigSequence::from_i64s(1, &[1, -2, 4, -8]);
        assert!(matches!(
            estimate_growth(&alternating, None),
            Err(AsymptoticsError::UndefinedGrowth)
        ));
        let short = BigSequence::from_i64s(1, &[1, 2, 4]);
        assert!(matches!(
            estimate_growth(&short, None),
            Err(AsymptoticsError::InsufficientData { .. })
        ));
    }

    #[test]
    fn recovers_synthetic_model() {
        // a(n) = round(5 * 3^n / n^2): mu must come back within 1e-3 relative
        let terms: Vec<BigInt> = (1..=100i64)
            .map(|n| {
                let v = BigRational::from(BigInt::from(5) * BigInt::from(3).pow(n as u32))
                    / BigRational::from(BigInt::from(n * n));
                v.round().to_integer()
            })
            .collect();
        let m = estimate_growth(&BigSequence::new(1, terms), None).unwrap();
        assert!((m.mu.to_f64() - 3.0).abs() / 3.0 < 1e-3, "mu = {:?}", m.mu);
        assert!((m.theta.to_f64() + 2.0).abs() < 1e-2, "theta = {:?}", m.theta);
        assert!((m.alpha.to_f64() - 5.0).abs() / 5.0 < 1e-2, "alpha = {:?}", m.alpha);
    }

    #[test]
    fn conjecture_report_needs_three_terms() {
        let short = BigSequence::from_i64s(1, &[1, 24]);
        assert!(matches!(
            check_conjecture(4, &short),
            Err(AsymptoticsError::InsufficientData { .. })
        ));
    }

    #[test]
    fn conjecture_on_reference_five_dimensional_terms() {
        // rho(7) = (5582882474985676800/7244702262723241) * (8/7)^2 = 1006.5...,
        // about 1.7% under 1024.
        let report = check_conjecture(5, &golden::diagonal_terms(5)).unwrap();
        assert_eq!(report.mu_conjectured, BigInt::from(1024));
        let rho = report.corrected_last_ratio.to_f64();
        assert!((rho - 1006.5).abs() < 0.1, "rho = {rho}");
        let dev = report.deviation.to_f64();
        assert!(dev > 0.016 && dev < 0.018, "deviation = {dev}");
    }

    #[test]
    fn conjecture_on_reference_six_dimensional_terms() {
        let report = check_conjecture(6, &golden::diagonal_terms(6)).unwrap();
        assert_eq!(report.mu_conjectured, BigInt::from(15625));
        let dev = report.deviation.to_f64();
        assert!(dev > 0.05 && dev < 0.062, "deviation = {dev}");
    }

    #[test]
    fn report_json_fields() {
        let report = check_conjecture(5, &golden::diagonal_terms(5)).unwrap();
        let j = report.to_json();
        for key in [
            "mu_conjectured",
            "mu_estimated",
            "theta",
            "alpha_estimate",
            "deviation",
            "n_used",
        ] {
            assert!(!j[key].is_null(), "missing {key}");
        }
        assert_eq!(j["n_used"], 8);
        assert_eq!(j["mu_conjectured"], "1024");
    }

    #[test]
    fn subdominance_rejects_zero() {
        assert!(matches!(
            subdominance_demo(&BigInt::zero()),
            Err(AsymptoticsError::ZeroPerturbation)
        ));
    }
}
