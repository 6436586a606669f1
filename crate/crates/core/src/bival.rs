//! Conditional probability as a context-normalized inner product.
//!
//! `P(x | y) = v(x) · v(y) / |v(y)|²`. The normalization uses the context
//! only, so the bi-valuation is not symmetric in its arguments.
//! [`classical_conditional`] computes the same number from plain sums of
//! weights and serves as the oracle for it.

use crate::error::{Error, Result};
use crate::lattice::Statement;
use crate::quantify::{sqrt_vector, Measure, SqrtVector};

/// `P(x | y)` from the square-root vectors of `x` and `y` under `measure`.
pub fn bival(measure: &Measure, x: &Statement, y: &Statement) -> Result<f64> {
    let vx = sqrt_vector(measure, x)?;
    let vy = sqrt_vector(measure, y)?;
    project(&vx, &vy)
}

/// Projection of `v` onto the context vector `context`, normalized by the
/// context's squared length.
pub fn project(v: &SqrtVector, context: &SqrtVector) -> Result<f64> {
    let norm = context.norm_squared();
    if norm == 0.0 {
        return Err(Error::UndefinedContext);
    }
    Ok(v.dot(context)? / norm)
}

/// `m(x ∧ y) / m(y)` by direct summation of weights.
pub fn classical_conditional(measure: &Measure, x: &Statement, y: &Statement) -> Result<f64> {
    let both = x.meet(y)?;
    let context = measure.of(y)?;
    if context == 0.0 {
        return Err(Error::UndefinedContext);
    }
    Ok(measure.of(&both)? / context)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::HypothesisSpace;

    fn setup() -> (HypothesisSpace, Measure) {
        let s = HypothesisSpace::new(["a1", "a2", "a3"]).unwrap();
        let m = Measure::new(&s, vec![0.2, 0.3, 0.5]).unwrap();
        (s, m)
    }

    #[test]
    fn worked_examples() {
        let (s, m) = setup();
        let a1 = s.atom_at(0).unwrap();
        let a2 = s.atom_at(1).unwrap();
        let t = s.truism();
        assert!((bival(&m, &a1, &t).unwrap() - 0.2).abs() < 1e-15);
        assert_eq!(bival(&m, &t, &a1).unwrap(), 1.0);
        assert_eq!(bival(&m, &a1, &a2).unwrap(), 0.0);
        let a12 = a1.join(&a2).unwrap();
        assert!((bival(&m, &a1, &a12).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn unnormalized_truism_context() {
        let s = HypothesisSpace::new(["a1", "a2", "a3"]).unwrap();
        let m = Measure::new(&s, vec![3.0, 1.0, 4.0]).unwrap();
        let got = bival(&m, &s.atom_at(0).unwrap(), &s.truism()).unwrap();
        assert!((got - 3.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn classical_examples() {
        let (s, m) = setup();
        let a1 = s.atom_at(0).unwrap();
        let a12 = s.statement([0, 1]).unwrap();
        assert!((classical_conditional(&m, &a1, &a12).unwrap() - 0.4).abs() < 1e-15);
        assert_eq!(classical_conditional(&m, &a12, &a12).unwrap(), 1.0);
        assert_eq!(
            classical_conditional(&m, &a1, &s.statement([1, 2]).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn zero_context_is_undefined() {
        let (s, m) = setup();
        let a1 = s.atom_at(0).unwrap();
        assert_eq!(
            bival(&m, &a1, &s.absurdity()).unwrap_err(),
            Error::UndefinedContext
        );
        assert_eq!(
            classical_conditional(&m, &a1, &s.absurdity()).unwrap_err(),
            Error::UndefinedContext
        );
        let z = Measure::new(&s, vec![0.0, 1.0, 1.0]).unwrap();
        assert_eq!(
            bival(&z, &s.truism(), &a1).unwrap_err(),
            Error::UndefinedContext
        );
        assert_eq!(
            classical_conditional(&z, &s.truism(), &a1).unwrap_err(),
            Error::UndefinedContext
        );
    }

    #[test]
    fn asymmetry_witness() {
        let (s, m) = setup();
        let a1 = s.atom_at(0).unwrap();
        let t = s.truism();
        assert_ne!(bival(&m, &a1, &t).unwrap(), bival(&m, &t, &a1).unwrap());
    }

    #[test]
    fn mismatched_spaces() {
        let (s, m) = setup();
        let t = HypothesisSpace::new(["b1", "b2", "b3"]).unwrap();
        assert_eq!(
            bival(&m, &s.truism(), &t.truism()).unwrap_err(),
            Error::SpaceMismatch
        );
        assert_eq!(
            classical_conditional(&m, &t.truism(), &s.truism()).unwrap_err(),
            Error::SpaceMismatch
        );
    }
}
