//! Determinant volume of the atomic square-root vectors and the
//! inverse-volume prior it induces on the simplex.
//!
//! Stacking the atomic vectors `v(a_i)` gives a diagonal matrix with
//! determinant `Π √p_i`. Its reciprocal is, up to normalization, the
//! Dirichlet(½, …, ½) density `Γ(n/2)/π^{n/2} · Π p_i^{−1/2}`.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::quantify::Measure;

/// `Π √p_i` over the normalized probabilities; zero if any atom has zero mass.
pub fn volume(measure: &Measure) -> f64 {
    measure.probabilities().iter().map(|p| p.sqrt()).product()
}

fn positive_probabilities(measure: &Measure) -> Result<Vec<f64>> {
    let p = measure.probabilities();
    if let Some(index) = p.iter().position(|&x| x == 0.0) {
        return Err(Error::Boundary { index });
    }
    Ok(p)
}

/// `−½ Σ ln p_i`, the log of the inverse volume.
pub fn prior_log_density(measure: &Measure) -> Result<f64> {
    let p = positive_probabilities(measure)?;
    Ok(-0.5 * p.iter().map(|x| x.ln()).sum::<f64>())
}

/// `Π p_i^{−1/2}`, unnormalized.
pub fn prior_density(measure: &Measure) -> Result<f64> {
    prior_log_density(measure).map(f64::exp)
}

/// `ln Γ(n/2) − (n/2) ln π`.
pub fn prior_log_normalizer(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewAtoms { n, min: 2 });
    }
    let half = n as f64 / 2.0;
    Ok(ln_gamma(half) - half * std::f64::consts::PI.ln())
}

/// `Γ(n/2) / π^{n/2}`, the constant that makes the prior integrate to one
/// over the (n−1)-simplex.
pub fn prior_normalizer(n: usize) -> Result<f64> {
    prior_log_normalizer(n).map(f64::exp)
}

/// Log of the normalized prior density at `measure`.
pub fn prior_normalized_log_density(measure: &Measure) -> Result<f64> {
    Ok(prior_log_normalizer(measure.space().len())? + prior_log_density(measure)?)
}
