//! Distribution files.
//!
//! A distribution file is a TOML document with two required keys and one
//! optional key:
//!
//! ```toml
//! name = "three atoms"          # optional label
//! atoms = ["a1", "a2", "a3"]    # distinct, non-empty names
//! measure = [0.2, 0.3, 0.5]     # nonnegative weights, at least one positive
//! ```
//!
//! Weights need not sum to one. Unknown keys are rejected.

use std::fs;
use std::path::Path;

use rootvec::{HypothesisSpace, Measure};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub atoms: Vec<String>,
    pub measure: Vec<f64>,
}

impl DistributionFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text)
            .map_err(|e| CliError::File(format!("malformed distribution file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::File(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::File(msg) => CliError::File(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("distribution files always serialize")
    }

    /// Builds a fresh space from the atom list and validates the weights.
    pub fn measure(&self) -> Result<Measure, CliError> {
        let space = HypothesisSpace::new(self.atoms.iter().cloned())
            .map_err(|e| CliError::File(format!("invalid atoms: {e}")))?;
        self.measure_on(&space)
    }

    /// Validates the weights against an existing space with the same atoms.
    pub fn measure_on(&self, space: &HypothesisSpace) -> Result<Measure, CliError> {
        if self.atoms.len() != self.measure.len() {
            return Err(CliError::File(format!(
                "{} atoms but {} weights",
                self.atoms.len(),
                self.measure.len()
            )));
        }
        Measure::new(space, self.measure.clone())
            .map_err(|e| CliError::File(format!("invalid measure: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_minimal_file() {
        let f = DistributionFile::parse("atoms = [\"a1\", \"a2\"]\nmeasure = [2, 0.5]\n").unwrap();
        assert_eq!(f.name, None);
        assert_eq!(f.measure, vec![2.0, 0.5]);
        let m = f.measure().unwrap();
        assert_eq!(m.space().atom_names(), &["a1", "a2"]);
        assert!((m.probability(0) - 0.8).abs() < 1e-15);
    }

    #[test]
    fn round_trips_through_toml() {
        let f = DistributionFile {
            name: Some("demo".into()),
            atoms: vec!["x".into(), "y".into(), "z".into()],
            measure: vec![0.1, 0.2, 0.7],
        };
        assert_eq!(DistributionFile::parse(&f.to_toml()).unwrap(), f);
    }

    #[test]
    fn validation_errors_are_file_errors() {
        let bad = [
            "atoms = [\"a\"]\nmeasure = [1, 2]\n",
            "atoms = [\"a\", \"a\"]\nmeasure = [1, 2]\n",
            "atoms = [\"a\", \"\"]\nmeasure = [1, 2]\n",
            "atoms = [\"a\", \"b\"]\nmeasure = [1, -2]\n",
            "atoms = [\"a\", \"b\"]\nmeasure = [0, 0]\n",
            "atoms = []\nmeasure = []\n",
        ];
        for text in bad {
            let err = DistributionFile::parse(text)
                .unwrap()
                .measure()
                .unwrap_err();
            assert_eq!(err.exit_code(), 4, "{text}");
        }
        for text in [
            "atoms = [\"a\"]\n",
            "atoms = [\"a\"]\nmeasure = [1]\nextra = 1\n",
            "nonsense",
        ] {
            assert_eq!(DistributionFile::parse(text).unwrap_err().exit_code(), 4);
        }
    }

    #[test]
    fn negative_weight_message_names_the_index() {
        let f =
            DistributionFile::parse("atoms = [\"a\", \"b\", \"c\"]\nmeasure = [0.2, -0.1, 0.9]\n")
                .unwrap();
        let msg = f.measure().unwrap_err().to_string();
        assert!(msg.contains("index 1"), "{msg}");
    }

    #[test]
    fn missing_file_is_a_file_error() {
        let err = DistributionFile::load(Path::new("/nonexistent/dist.toml")).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}
