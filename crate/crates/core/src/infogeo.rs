//! Information geometry on finite outcome spaces.
//!
//! Each distribution `p` embeds on the positive orthant of the unit sphere as
//! `√p`. The Bhattacharyya coefficient is the inner product of two embedded
//! points, the Hellinger distance is their chord length scaled by `1/√2`, and
//! the Fisher-Rao geodesic distance is twice the angle between them.
//!
//! For a parametric family `p(·|θ)` the Fisher-Rao metric is
//! `g_ij = 4 Σ_x ∂_i √p(x|θ) ∂_j √p(x|θ)`, evaluated here with central
//! differences of `√p`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::quantify::Measure;

/// Default relative step for [`fisher_information`].
pub const DEFAULT_STEP: f64 = 1e-6;

fn sqrt_probabilities(m: &Measure) -> Vec<f64> {
    m.probabilities().into_iter().map(f64::sqrt).collect()
}

/// `BC(p, q) = Σ √(p_i q_i)` over the normalized views.
pub fn bhattacharyya(p: &Measure, q: &Measure) -> Result<f64> {
    p.space().ensure_same(q.space())?;
    Ok(sqrt_probabilities(p)
        .iter()
        .zip(sqrt_probabilities(q))
        .map(|(a, b)| a * b)
        .sum())
}

/// `H(p, q) = √(½ Σ (√p_i − √q_i)²)`, in `[0, 1]`.
///
/// The `½` is applied as `1 / (|√p|² + |√q|²)`, which is 2 up to rounding.
/// Accumulating both sums in one pass makes disjoint supports give exactly 1.
pub fn hellinger(p: &Measure, q: &Measure) -> Result<f64> {
    p.space().ensure_same(q.space())?;
    let (mut diff, mut norms) = (0.0, 0.0);
    for (a, b) in sqrt_probabilities(p).iter().zip(sqrt_probabilities(q)) {
        diff += (a - b) * (a - b);
        norms += a * a + b * b;
    }
    Ok((diff / norms).sqrt().min(1.0))
}

/// Geodesic distance `2·arccos(BC)` in `[0, π]`.
///
/// With `u = √p` and `w = √q` on the unit sphere the angle between them is
/// `2·atan2(|u − w|, |u + w|)`, which equals `arccos(BC)` but stays accurate
/// when `BC` is within rounding of 1.
pub fn fisher_rao_distance(p: &Measure, q: &Measure) -> Result<f64> {
    p.space().ensure_same(q.space())?;
    let (mut diff, mut sum) = (0.0, 0.0);
    for (a, b) in sqrt_probabilities(p).iter().zip(sqrt_probabilities(q)) {
        diff += (a - b) * (a - b);
        sum += (a + b) * (a + b);
    }
    let angle = 2.0 * diff.sqrt().atan2(sum.sqrt());
    Ok((2.0 * angle).clamp(0.0, std::f64::consts::PI))
}

/// A family of distributions over a fixed finite outcome set, indexed by a
/// real parameter vector.
pub trait ParametricFamily {
    /// Dimension `d` of the parameter vector.
    fn param_dim(&self) -> usize;

    /// Number of outcomes `k`.
    fn outcome_count(&self) -> usize;

    /// Whether `weights` is defined at `theta`.
    fn in_domain(&self, theta: &[f64]) -> bool;

    /// Nonnegative outcome weights at `theta`; normalized by the caller.
    fn weights(&self, theta: &[f64]) -> Vec<f64>;

    /// Which coordinate of an out-of-domain `theta` to blame in errors.
    fn offending_coordinate(&self, _theta: &[f64]) -> usize {
        0
    }
}

/// `(θ, 1 − θ)` for `θ ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bernoulli;

impl ParametricFamily for Bernoulli {
    fn param_dim(&self) -> usize {
        1
    }

    fn outcome_count(&self) -> usize {
        2
    }

    fn in_domain(&self, theta: &[f64]) -> bool {
        theta.len() == 1 && theta[0] > 0.0 && theta[0] < 1.0
    }

    fn weights(&self, theta: &[f64]) -> Vec<f64> {
        vec![theta[0], 1.0 - theta[0]]
    }
}

/// The full family over `k` outcomes, parameterized by the first `k − 1`
/// probabilities; the last is `1 − Σ θ`.
#[derive(Debug, Clone, Copy)]
pub struct Multinomial {
    outcomes: usize,
}

impl Multinomial {
    pub fn new(outcomes: usize) -> Result<Self> {
        if outcomes < 2 {
            return Err(Error::TooFewAtoms {
                n: outcomes,
                min: 2,
            });
        }
        Ok(Self { outcomes })
    }
}

impl ParametricFamily for Multinomial {
    fn param_dim(&self) -> usize {
        self.outcomes - 1
    }

    fn outcome_count(&self) -> usize {
        self.outcomes
    }

    fn in_domain(&self, theta: &[f64]) -> bool {
        theta.len() == self.outcomes - 1
            && theta.iter().all(|&t| t > 0.0)
            && theta.iter().sum::<f64>() < 1.0
    }

    fn weights(&self, theta: &[f64]) -> Vec<f64> {
        let mut w = theta.to_vec();
        w.push(1.0 - theta.iter().sum::<f64>());
        w
    }

    fn offending_coordinate(&self, theta: &[f64]) -> usize {
        theta
            .iter()
            .position(|&t| t <= 0.0)
            .unwrap_or(theta.len().saturating_sub(1))
    }
}

/// A family assembled from closures.
pub struct FnFamily<D, W> {
    param_dim: usize,
    outcome_count: usize,
    domain: D,
    weights: W,
}

impl<D, W> FnFamily<D, W>
where
    D: Fn(&[f64]) -> bool,
    W: Fn(&[f64]) -> Vec<f64>,
{
    pub fn new(param_dim: usize, outcome_count: usize, domain: D, weights: W) -> Self {
        Self {
            param_dim,
            outcome_count,
            domain,
            weights,
        }
    }
}

impl<D, W> ParametricFamily for FnFamily<D, W>
where
    D: Fn(&[f64]) -> bool,
    W: Fn(&[f64]) -> Vec<f64>,
{
    fn param_dim(&self) -> usize {
        self.param_dim
    }

    fn outcome_count(&self) -> usize {
        self.outcome_count
    }

    fn in_domain(&self, theta: &[f64]) -> bool {
        (self.domain)(theta)
    }

    fn weights(&self, theta: &[f64]) -> Vec<f64> {
        (self.weights)(theta)
    }
}

/// The Fisher-Rao metric tensor at a parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct FisherMatrix {
    g: DMatrix<f64>,
    theta: Vec<f64>,
}

impl FisherMatrix {
    pub fn dim(&self) -> usize {
        self.g.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.g[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.g
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// `|g_ij − g_ji| ≤ 1e-9·(1 + |g_ij|)` for all entries.
    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let a = self.g[(i, j)];
                (a - self.g[(j, i)]).abs() <= 1e-9 * (1.0 + a.abs())
            })
        })
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .g
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// All eigenvalues ≥ −1e-9 times the largest.
    pub fn is_positive_semidefinite(&self) -> bool {
        let ev = self.eigenvalues();
        let largest = ev.last().copied().unwrap_or(0.0).max(0.0);
        ev.iter().all(|&l| l >= -1e-9 * largest)
    }
}

fn checked_sqrt_probabilities(
    family: &dyn ParametricFamily,
    theta: &[f64],
    coordinate: usize,
) -> Result<Vec<f64>> {
    let weights = family.weights(theta);
    if weights.len() != family.outcome_count() {
        return Err(Error::Numeric {
            coordinate,
            reason: format!(
                "family returned {} weights, expected {}",
                weights.len(),
                family.outcome_count()
            ),
        });
    }
    if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
        return Err(Error::Numeric {
            coordinate,
            reason: format!("non-finite weight {w}"),
        });
    }
    if let Some(w) = weights.iter().find(|&&w| w < 0.0) {
        return Err(Error::Numeric {
            coordinate,
            reason: format!("negative weight {w}"),
        });
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 || !total.is_finite() {
        return Err(Error::Numeric {
            coordinate,
            reason: format!("weights sum to {total}"),
        });
    }
    if let Some(k) = weights.iter().position(|&w| w == 0.0) {
        return Err(Error::Numeric {
            coordinate,
            reason: format!("outcome {k} has zero probability; √p is not differentiable there"),
        });
    }
    Ok(weights.iter().map(|w| (w / total).sqrt()).collect())
}

/// Fisher information of `family` at `theta` by central differences of `√p`.
///
/// Coordinate `i` is perturbed by `h_i = step·max(1, |θ_i|)`; `step`
/// defaults to [`DEFAULT_STEP`]. The result is symmetrized.
pub fn fisher_information(
    family: &dyn ParametricFamily,
    theta: &[f64],
    step: Option<f64>,
) -> Result<FisherMatrix> {
    let step = step.unwrap_or(DEFAULT_STEP);
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidStep(step));
    }
    let d = family.param_dim();
    if theta.len() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            found: theta.len(),
        });
    }
    if let Some(coordinate) = theta.iter().position(|t| !t.is_finite()) {
        return Err(Error::Domain {
            coordinate,
            value: theta[coordinate],
        });
    }
    if !family.in_domain(theta) {
        let coordinate = family.offending_coordinate(theta).min(d.saturating_sub(1));
        return Err(Error::Domain {
            coordinate,
            value: theta.get(coordinate).copied().unwrap_or(f64::NAN),
        });
    }
    checked_sqrt_probabilities(family, theta, 0)?;

    let k = family.outcome_count();
    // partials[i][x] = ∂√p(x|θ)/∂θ_i
    let mut partials = Vec::with_capacity(d);
    let mut point = theta.to_vec();
    for i in 0..d {
        let h = step * theta[i].abs().max(1.0);
        let mut sides = [Vec::new(), Vec::new()];
        for (side, sign) in sides.iter_mut().zip([1.0, -1.0]) {
            point[i] = theta[i] + sign * h;
            if !family.in_domain(&point) {
                return Err(Error::Domain {
                    coordinate: i,
                    value: point[i],
                });
            }
            *side = checked_sqrt_probabilities(family, &point, i)?;
        }
        point[i] = theta[i];
        let [plus, minus] = sides;
        let span = 2.0 * h;
        partials.push(
            plus.iter()
                .zip(&minus)
                .map(|(a, b)| (a - b) / span)
                .collect::<Vec<f64>>(),
        );
    }

    let mut g = DMatrix::<f64>::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            g[(i, j)] = 4.0 * (0..k).map(|x| partials[i][x] * partials[j][x]).sum::<f64>();
        }
    }
    let g = (&g + g.transpose()) * 0.5;
    if let Some(pos) = g.iter().position(|v| !v.is_finite()) {
        return Err(Error::Numeric {
            coordinate: pos % d,
            reason: "non-finite metric entry".into(),
        });
    }
    Ok(FisherMatrix {
        g,
        theta: theta.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::HypothesisSpace;

    fn two(p: [f64; 2]) -> Measure {
        let s = HypothesisSpace::new(["h", "t"]).unwrap();
        Measure::new(&s, p.to_vec()).unwrap()
    }

    #[test]
    fn bhattacharyya_examples() {
        let p = two([0.5, 0.5]);
        assert!((bhattacharyya(&p, &p).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(
            bhattacharyya(&two([1.0, 0.0]), &two([0.0, 1.0])).unwrap(),
            0.0
        );
        let bc = bhattacharyya(&p, &two([1.0, 0.0])).unwrap();
        assert!((bc - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn hellinger_examples() {
        let p = two([0.5, 0.5]);
        assert_eq!(hellinger(&p, &p).unwrap(), 0.0);
        assert_eq!(hellinger(&two([1.0, 0.0]), &two([0.0, 1.0])).unwrap(), 1.0);
        let h = hellinger(&p, &two([1.0, 0.0])).unwrap();
        assert!((h - 0.5411961001).abs() < 1e-10);
        let bc = bhattacharyya(&p, &two([1.0, 0.0])).unwrap();
        assert!((h * h - (1.0 - bc)).abs() < 1e-12);
    }

    #[test]
    fn hellinger_is_exactly_one_on_disjoint_supports() {
        let s = HypothesisSpace::new(["a", "b", "c", "d", "e"]).unwrap();
        let p = Measure::new(&s, vec![0.1, 0.7, 0.0, 0.0, 0.3]).unwrap();
        let q = Measure::new(&s, vec![0.0, 0.0, 0.13, 0.29, 0.0]).unwrap();
        assert_eq!(hellinger(&p, &q).unwrap(), 1.0);
        assert_eq!(hellinger(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn fisher_rao_examples() {
        let p = two([0.5, 0.5]);
        assert_eq!(fisher_rao_distance(&p, &p).unwrap(), 0.0);
        let d = fisher_rao_distance(&two([1.0, 0.0]), &two([0.0, 1.0])).unwrap();
        assert!((d - std::f64::consts::PI).abs() < 1e-15);
        let d = fisher_rao_distance(&p, &two([1.0, 0.0])).unwrap();
        assert!((d - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn fisher_rao_is_exactly_zero_on_the_diagonal() {
        let s = HypothesisSpace::new(["a", "b", "c"]).unwrap();
        let p = Measure::new(&s, vec![0.1, 0.7, 0.2]).unwrap();
        assert_eq!(fisher_rao_distance(&p, &p).unwrap(), 0.0);
        let q = Measure::new(&s, vec![0.3, 0.3, 0.4]).unwrap();
        let via_acos = 2.0 * bhattacharyya(&p, &q).unwrap().clamp(-1.0, 1.0).acos();
        assert!((fisher_rao_distance(&p, &q).unwrap() - via_acos).abs() < 1e-14);
    }

    #[test]
    fn distances_reject_mismatched_spaces() {
        let p = two([0.5, 0.5]);
        let s = HypothesisSpace::new(["x", "y"]).unwrap();
        let q = Measure::new(&s, vec![0.5, 0.5]).unwrap();
        assert_eq!(bhattacharyya(&p, &q).unwrap_err(), Error::SpaceMismatch);
        assert_eq!(hellinger(&p, &q).unwrap_err(), Error::SpaceMismatch);
        assert_eq!(
            fisher_rao_distance(&p, &q).unwrap_err(),
            Error::SpaceMismatch
        );
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn bernoulli_fisher_examples() {
        let g = fisher_information(&Bernoulli, &[0.5], None).unwrap();
        assert!(rel(g.get(0, 0), 4.0) < 1e-6);
        let g = fisher_information(&Bernoulli, &[0.3], None).unwrap();
        assert!(rel(g.get(0, 0), 1.0 / (0.3 * 0.7)) < 1e-6);
        assert!(rel(g.get(0, 0), 4.7619048) < 1e-6);
    }

    #[test]
    fn multinomial_fisher_example() {
        let fam = Multinomial::new(3).unwrap();
        let g = fisher_information(&fam, &[0.2, 0.3], None).unwrap();
        let expected = [[7.0, 2.0], [2.0, 1.0 / 0.3 + 2.0]];
        for (i, row) in expected.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                assert!(rel(g.get(i, j), e) < 1e-6, "{i}{j}: {}", g.get(i, j));
            }
        }
        assert!(g.is_symmetric());
        assert!(g.is_positive_semidefinite());
        assert_eq!(g.theta(), &[0.2, 0.3]);
    }

    #[test]
    fn fisher_domain_errors() {
        assert!(matches!(
            fisher_information(&Bernoulli, &[1.5], None),
            Err(Error::Domain { coordinate: 0, .. })
        ));
        // perturbation crosses the boundary
        assert!(matches!(
            fisher_information(&Bernoulli, &[1e-7], None),
            Err(Error::Domain { coordinate: 0, .. })
        ));
        let fam = Multinomial::new(3).unwrap();
        assert!(matches!(
            fisher_information(&fam, &[0.5, 0.5 - 1e-7], None),
            Err(Error::Domain { coordinate: 0, .. })
        ));
        assert!(matches!(
            fisher_information(&fam, &[0.3, -0.1], None),
            Err(Error::Domain { coordinate: 1, .. })
        ));
        assert!(matches!(
            fisher_information(&fam, &[0.2], None),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            fisher_information(&Bernoulli, &[0.4], Some(0.0)),
            Err(Error::InvalidStep(_))
        ));
    }

    #[test]
    fn fisher_numeric_errors() {
        let nan_family = FnFamily::new(1, 2, |_: &[f64]| true, |t: &[f64]| vec![t[0], f64::NAN]);
        assert!(matches!(
            fisher_information(&nan_family, &[0.5], None),
            Err(Error::Numeric { .. })
        ));
        let zero_outcome = FnFamily::new(
            1,
            3,
            |t: &[f64]| t[0] > 0.0 && t[0] < 1.0,
            |t: &[f64]| vec![t[0], 1.0 - t[0], 0.0],
        );
        assert!(matches!(
            fisher_information(&zero_outcome, &[0.5], None),
            Err(Error::Numeric { .. })
        ));
    }

    #[test]
    fn closure_family_matches_builtin() {
        let fam = FnFamily::new(
            1,
            2,
            |t: &[f64]| t.len() == 1 && t[0] > 0.0 && t[0] < 1.0,
            |t: &[f64]| vec![t[0], 1.0 - t[0]],
        );
        let a = fisher_information(&fam, &[0.3], None).unwrap();
        let b = fisher_information(&Bernoulli, &[0.3], None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unnormalized_family_is_normalized() {
        // weights (2θ, 2(1-θ)) describe the same distribution as Bernoulli
        let fam = FnFamily::new(
            1,
            2,
            |t: &[f64]| t[0] > 0.0 && t[0] < 1.0,
            |t: &[f64]| vec![2.0 * t[0], 2.0 * (1.0 - t[0])],
        );
        let g = fisher_information(&fam, &[0.3], None).unwrap();
        assert!(rel(g.get(0, 0), 1.0 / 0.21) < 1e-6);
    }
}
