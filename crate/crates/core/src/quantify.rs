//! Measures over atoms and the square-root vectors that quantify statements.
//!
//! A statement `x` under measure `m` is quantified by `v(x)` with component
//! `i` equal to `√m(a_i)` when atom `i` belongs to `x` and zero otherwise.
//! Squared norms recover measures, and inner products recover the measure of
//! the meet.

use crate::error::{Error, Result};
use crate::lattice::{HypothesisSpace, Statement};

/// Nonnegative weights over the atoms of a space, not necessarily normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    space: HypothesisSpace,
    weights: Vec<f64>,
    total: f64,
}

impl Measure {
    /// Validates and stores `weights` as given.
    pub fn new(space: &HypothesisSpace, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != space.len() {
            return Err(Error::LengthMismatch {
                expected: space.len(),
                found: weights.len(),
            });
        }
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteWeight { index, value });
            }
            if value < 0.0 {
                return Err(Error::NegativeWeight { index, value });
            }
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::ZeroTotal);
        }
        if !total.is_finite() {
            return Err(Error::NonFiniteWeight {
                index: weights.len() - 1,
                value: total,
            });
        }
        Ok(Self {
            space: space.clone(),
            weights,
            total,
        })
    }

    /// The uniform measure, each atom weighted 1/n.
    pub fn uniform(space: &HypothesisSpace) -> Self {
        let n = space.len();
        Self::new(space, vec![1.0 / n as f64; n]).expect("uniform weights are valid")
    }

    pub fn space(&self) -> &HypothesisSpace {
        &self.space
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, index: usize) -> f64 {
        self.weights[index]
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// Normalized view `p_i = m_i / total`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.weights.iter().map(|w| w / self.total).collect()
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.weights[index] / self.total
    }

    /// `m(x)`: the sum of weights over the atoms of `x`.
    pub fn of(&self, x: &Statement) -> Result<f64> {
        self.space.ensure_same(x.space())?;
        Ok(x.atoms().map(|i| self.weights[i]).sum())
    }

    /// Every weight multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            &self.space,
            self.weights.iter().map(|w| w * factor).collect(),
        )
    }
}

/// The vector quantifying a statement: one nonnegative component per atom.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtVector {
    space: HypothesisSpace,
    components: Vec<f64>,
}

impl SqrtVector {
    pub fn zeros(space: &HypothesisSpace) -> Self {
        Self {
            space: space.clone(),
            components: vec![0.0; space.len()],
        }
    }

    pub fn space(&self) -> &HypothesisSpace {
        &self.space
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// Euclidean inner product.
    pub fn dot(&self, other: &SqrtVector) -> Result<f64> {
        self.space.ensure_same(&other.space)?;
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm_squared(&self) -> f64 {
        self.components.iter().map(|a| a * a).sum()
    }

    /// Componentwise sum.
    pub fn add(&self, other: &SqrtVector) -> Result<SqrtVector> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &SqrtVector) -> Result<SqrtVector> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &SqrtVector, f: impl Fn(f64, f64) -> f64) -> Result<SqrtVector> {
        self.space.ensure_same(&other.space)?;
        Ok(SqrtVector {
            space: self.space.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

/// `v(x)` under `measure`.
pub fn sqrt_vector(measure: &Measure, x: &Statement) -> Result<SqrtVector> {
    measure.space.ensure_same(x.space())?;
    let mut v = SqrtVector::zeros(&measure.space);
    for i in x.atoms() {
        v.components[i] = measure.weights[i].sqrt();
    }
    Ok(v)
}

/// `v(x) + v(y) − v(x ∧ y)`, the inclusion-exclusion sum for the join.
pub fn vector_join(measure: &Measure, x: &Statement, y: &Statement) -> Result<SqrtVector> {
    let vx = sqrt_vector(measure, x)?;
    let vy = sqrt_vector(measure, y)?;
    let overlap = sqrt_vector(measure, &x.meet(y)?)?;
    vx.add(&vy)?.sub(&overlap)
}

pub fn dot(v: &SqrtVector, w: &SqrtVector) -> Result<f64> {
    v.dot(w)
}

pub fn norm_squared(v: &SqrtVector) -> f64 {
    v.norm_squared()
}
