//! Periodicity of U_θ: necessary conditions, exact decision through the
//! inherited factor, and a numeric fallback for real angles.
//!
//! U_θ is unitary, hence diagonalizable, so U_θ^τ = I exactly when every
//! eigenvalue is a τ-th root of unity. The exact path reads the eigenvalue
//! orders off a cyclotomic factorization of Ψ (of its Galois norm when Ψ is
//! not rational), adds the birth eigenvalues ±1, and confirms the lcm by an
//! exact matrix power.

mod conditions;
mod cyclotomic;
mod rationalize;

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use conditions::{check_16t, check_2nk, necessary_conditions, ConditionOutcome, Conditions};
pub use cyclotomic::{
    algebraic_integer_coefficients, cyclotomic_factorization, galois_norm, is_cyclotomic_product,
};
pub use rationalize::rationalize_root;

use crate::charpoly::{inherited_factor, normalized_charpoly, Poly};
use crate::cyclo::{prime_factors, totient, Angle, CycloElem, IntPoly, RationalAngle};
use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::linalg;
use crate::matrices::{exact_power_is_identity, numeric_power_deviation, Exact, Numeric, Walk};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Periodic,
    NotPeriodic,
    UndecidedNumeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    NecessaryCondition,
    AlgebraicIntegrality,
    CyclotomicFactorization,
    ExactPowerCheck,
    NumericRationalization,
}

/// Why a graph is not periodic.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    TwoNOverK { n: usize, k: usize },
    SixteenTOverK3 { t: u64, k: usize },
    NonIntegralCoefficient { index: usize, value: String },
    NonCyclotomicFactor { norm_degree: usize },
    NonUnitEigenvalue { re: f64, im: f64 },
}

/// A group of eigenvalues of U_θ sharing a multiplicative order; `order`
/// is `None` for eigenvalues not identified as roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenOrder {
    pub order: Option<u64>,
    pub multiplicity: usize,
}

impl Serialize for EigenOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EigenOrder", 2)?;
        match self.order {
            Some(d) => st.serialize_field("order", &d)?,
            None => st.serialize_field("order", "non-unity")?,
        }
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub verdict: Verdict,
    pub tau: Option<u64>,
    pub method: Method,
    pub conditions: Conditions,
    pub eigen_orders: Vec<EigenOrder>,
    pub witness: Option<Witness>,
}

impl PeriodicityReport {
    pub fn is_periodic(&self) -> bool {
        self.verdict == Verdict::Periodic
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecideOptions {
    pub tau_max: u64,
    pub q_max: u64,
    /// ||λ| − 1| above this certifies a non-unit eigenvalue.
    pub unit_tol: f64,
    pub rationalize_tol: f64,
    /// Bound on max |(U^τ − I)_ij| for a numeric period.
    pub power_tol: f64,
    /// Galois norms above this degree are not factored; the exact path
    /// then confirms a numerically found period instead.
    pub max_norm_degree: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            tau_max: 1_000_000,
            q_max: 10_000,
            unit_tol: 1e-9,
            rationalize_tol: 1e-9,
            power_tol: 1e-8,
            max_norm_degree: 512,
        }
    }
}

impl DecideOptions {
    pub fn with_tau_max(tau_max: u64) -> Self {
        DecideOptions {
            tau_max,
            ..Self::default()
        }
    }
}

fn report(
    verdict: Verdict,
    tau: Option<u64>,
    method: Method,
    conditions: Conditions,
    eigen_orders: Vec<EigenOrder>,
    witness: Option<Witness>,
) -> PeriodicityReport {
    PeriodicityReport {
        verdict,
        tau,
        method,
        conditions,
        eigen_orders,
        witness,
    }
}

fn condition_witness(g: &MixedGraph, c: &Conditions) -> Option<Witness> {
    let k = g.is_regular()?;
    if c.two_n_over_k == ConditionOutcome::Fail {
        return Some(Witness::TwoNOverK { n: g.n(), k });
    }
    if c.sixteen_t_over_k3 == ConditionOutcome::Fail {
        return Some(Witness::SixteenTOverK3 {
            t: g.triangle_count(),
            k,
        });
    }
    None
}

/// Decide whether U_θ is periodic and find its period.
///
/// Undirected graphs have θ ≡ 0, so any angle is replaced by 0 and decided
/// exactly. Rational angles take the exact path; real angles on graphs with
/// one-directional arcs take the numeric path.
pub fn decide_periodicity(g: &MixedGraph, eta: &Angle, opts: &DecideOptions) -> Result<PeriodicityReport> {
    let conditions = necessary_conditions(g);
    if let Some(w) = condition_witness(g, &conditions) {
        return Ok(report(
            Verdict::NotPeriodic,
            None,
            Method::NecessaryCondition,
            conditions,
            Vec::new(),
            Some(w),
        ));
    }
    if g.is_undirected() {
        return decide_exact_unchecked(g, RationalAngle::zero(), opts, conditions);
    }
    match eta {
        Angle::Rational(r) => decide_exact_unchecked(g, *r, opts, conditions),
        Angle::Float(x) => decide_numeric_unchecked(g, *x, opts, conditions),
    }
}

/// The exact pipeline for η = 2π·r, after the necessary conditions.
pub fn decide_exact(g: &MixedGraph, r: RationalAngle, opts: &DecideOptions) -> Result<PeriodicityReport> {
    decide_exact_unchecked(g, r, opts, necessary_conditions(g))
}

/// The numeric pipeline for η in radians, without the exact shortcuts.
pub fn decide_numeric(g: &MixedGraph, eta: f64, opts: &DecideOptions) -> Result<PeriodicityReport> {
    decide_numeric_unchecked(g, eta, opts, necessary_conditions(g))
}

/// Ψ(x) exactly, for η = 2π·r.
pub fn exact_inherited_factor(g: &MixedGraph, r: RationalAngle) -> Result<Poly<CycloElem>> {
    inherited_factor(&normalized_charpoly(g, &Exact::from_rational(r))?, g.n())
}

fn birth_adjust(g: &MixedGraph, counts: &mut BTreeMap<u64, i64>) {
    let e = g.edge_count() as i64 - g.n() as i64;
    *counts.entry(1).or_default() += e;
    *counts.entry(2).or_default() += e;
    counts.retain(|_, c| *c != 0);
}

fn orders_from_counts(counts: &BTreeMap<u64, i64>) -> Result<Vec<EigenOrder>> {
    counts
        .iter()
        .map(|(&d, &c)| {
            if c < 0 {
                return Err(Error::ImplementationMismatch(format!(
                    "negative multiplicity for eigenvalue order {d}"
                )));
            }
            Ok(EigenOrder {
                order: Some(d),
                multiplicity: c as usize,
            })
        })
        .collect()
}

/// lcm of the orders, or `None` above `cap`.
fn lcm_capped(orders: impl IntoIterator<Item = u64>, cap: u64) -> Option<u64> {
    orders.into_iter().try_fold(1u64, |acc, d| {
        let l = num_integer::lcm(acc as u128, d as u128);
        (l <= cap as u128).then_some(l as u64)
    })
}

/// Strip prime factors from τ while the power stays the identity.
fn minimize(mut tau: u64, is_identity: impl Fn(u64) -> bool) -> u64 {
    for q in prime_factors(tau) {
        while tau % q == 0 && is_identity(tau / q) {
            tau /= q;
        }
    }
    tau
}

fn decide_exact_unchecked(
    g: &MixedGraph,
    r: RationalAngle,
    opts: &DecideOptions,
    conditions: Conditions,
) -> Result<PeriodicityReport> {
    let psi = exact_inherited_factor(g, r)?;
    if let Some((index, c)) = psi
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_algebraic_integer())
    {
        return Ok(report(
            Verdict::NotPeriodic,
            None,
            Method::AlgebraicIntegrality,
            conditions,
            Vec::new(),
            Some(Witness::NonIntegralCoefficient {
                index,
                value: c.to_string(),
            }),
        ));
    }
    let m = psi.conductor();
    let phi_m = totient(m) as usize;
    let norm_degree = 2 * g.n() * if psi.is_rational() { 1 } else { phi_m };
    if norm_degree > opts.max_norm_degree {
        return exact_power_path(g, r, opts, conditions);
    }
    let (norm, copies): (IntPoly, usize) = if psi.is_rational() {
        (psi.to_int_poly().expect("integral rational coefficients"), 1)
    } else {
        let n = galois_norm(&psi)
            .to_int_poly()
            .ok_or_else(|| Error::ImplementationMismatch("norm of an integral Ψ is not integral".into()))?;
        (n, phi_m)
    };
    let Some(factors) = is_cyclotomic_product(&norm)? else {
        return Ok(report(
            Verdict::NotPeriodic,
            None,
            Method::CyclotomicFactorization,
            conditions,
            Vec::new(),
            Some(Witness::NonCyclotomicFactor { norm_degree }),
        ));
    };
    let mut counts = BTreeMap::new();
    for (d, e) in factors {
        let roots = e as usize * totient(d) as usize;
        if roots % copies != 0 {
            return Err(Error::ImplementationMismatch(format!(
                "order-{d} roots not spread evenly over {copies} conjugates"
            )));
        }
        counts.insert(d, (roots / copies) as i64);
    }
    birth_adjust(g, &mut counts);
    let eigen_orders = orders_from_counts(&counts)?;
    let Some(tau) = lcm_capped(counts.keys().copied(), opts.tau_max) else {
        return Ok(report(
            Verdict::UndecidedNumeric,
            None,
            Method::CyclotomicFactorization,
            conditions,
            eigen_orders,
            None,
        ));
    };
    let u = Walk::new(g, &Exact::from_rational(r)).time_evolution();
    if !exact_power_is_identity(&u, tau) {
        return Err(Error::ImplementationMismatch(format!(
            "U^{tau} != I although every eigenvalue order divides {tau}"
        )));
    }
    let tau = minimize(tau, |s| exact_power_is_identity(&u, s));
    Ok(report(
        Verdict::Periodic,
        Some(tau),
        Method::CyclotomicFactorization,
        conditions,
        eigen_orders,
        None,
    ))
}

struct NumericSpectrum {
    eigen_orders: Vec<EigenOrder>,
    non_unit: Option<Complex64>,
    all_rational: bool,
}

fn numeric_spectrum(eigs: &[Complex64], opts: &DecideOptions) -> NumericSpectrum {
    let mut counts: BTreeMap<Option<u64>, usize> = BTreeMap::new();
    let mut non_unit = None;
    for &z in eigs {
        if (z.norm() - 1.0).abs() > opts.unit_tol && non_unit.is_none() {
            non_unit = Some(z);
        }
        let order = rationalize_root(z, opts.q_max, opts.rationalize_tol).map(|(_, q)| q);
        *counts.entry(order).or_default() += 1;
    }
    NumericSpectrum {
        all_rational: !counts.contains_key(&None),
        eigen_orders: counts
            .into_iter()
            .map(|(order, multiplicity)| EigenOrder {
                order,
                multiplicity,
            })
            .collect(),
        non_unit,
    }
}

fn exact_power_path(
    g: &MixedGraph,
    r: RationalAngle,
    opts: &DecideOptions,
    conditions: Conditions,
) -> Result<PeriodicityReport> {
    let undecided = |orders| {
        Ok(report(
            Verdict::UndecidedNumeric,
            None,
            Method::ExactPowerCheck,
            conditions,
            orders,
            None,
        ))
    };
    let numeric = Walk::new(g, &Numeric::from_radians(r.radians())).time_evolution();
    let spec = numeric_spectrum(&linalg::eigenvalues(&numeric)?, opts);
    if !spec.all_rational {
        return undecided(spec.eigen_orders);
    }
    let Some(tau) = lcm_capped(spec.eigen_orders.iter().filter_map(|e| e.order), opts.tau_max) else {
        return undecided(spec.eigen_orders);
    };
    let u = Walk::new(g, &Exact::from_rational(r)).time_evolution();
    if !exact_power_is_identity(&u, tau) {
        return undecided(spec.eigen_orders);
    }
    let tau = minimize(tau, |s| exact_power_is_identity(&u, s));
    Ok(report(
        Verdict::Periodic,
        Some(tau),
        Method::ExactPowerCheck,
        conditions,
        spec.eigen_orders,
        None,
    ))
}

fn decide_numeric_unchecked(
    g: &MixedGraph,
    eta: f64,
    opts: &DecideOptions,
    conditions: Conditions,
) -> Result<PeriodicityReport> {
    let u = Walk::new(g, &Numeric::from_radians(eta)).time_evolution();
    let spec = numeric_spectrum(&linalg::eigenvalues(&u)?, opts);
    let method = Method::NumericRationalization;
    if let Some(z) = spec.non_unit {
        return Ok(report(
            Verdict::NotPeriodic,
            None,
            method,
            conditions,
            spec.eigen_orders,
            Some(Witness::NonUnitEigenvalue { re: z.re, im: z.im }),
        ));
    }
    let undecided = |orders| Ok(report(Verdict::UndecidedNumeric, None, method, conditions, orders, None));
    if !spec.all_rational {
        return undecided(spec.eigen_orders);
    }
    let Some(tau) = lcm_capped(spec.eigen_orders.iter().filter_map(|e| e.order), opts.tau_max) else {
        return undecided(spec.eigen_orders);
    };
    let is_identity = |s: u64| numeric_power_deviation(&u, s) <= opts.power_tol;
    if !is_identity(tau) {
        return undecided(spec.eigen_orders);
    }
    let tau = minimize(tau, is_identity);
    Ok(report(
        Verdict::Periodic,
        Some(tau),
        method,
        conditions,
        spec.eigen_orders,
        None,
    ))
}
