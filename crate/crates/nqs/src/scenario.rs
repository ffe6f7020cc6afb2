//! Scenario files: a JSON description of one basis and one state.
//!
//! Complex numbers are spelled as explicit `{re, im}` pairs to keep the
//! format locale-free and round-trippable. Exactly one state variant is
//! present:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "gram": [[{"re": 1.0, "im": 0.0}, {"re": 0.5, "im": 0.0}],
//!            [{"re": 0.5, "im": 0.0}, {"re": 1.0, "im": 0.0}]],
//!   "state": {"probs": [0.3, 0.7]}
//! }
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gram_basis::GramBasis;
use crate::linalg::{CMatrix, CVector};
use crate::representations::{superposition_free, BiorthogonalRep, ConventionalRep, PureState};

/// One complex entry in a scenario file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexEntry {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexEntry {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexEntry> for Complex64 {
    fn from(entry: ComplexEntry) -> Self {
        Complex64::new(entry.re, entry.im)
    }
}

/// The state payload: exactly one representation variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum StateSpec {
    Pure(Vec<ComplexEntry>),
    Conventional(Vec<Vec<ComplexEntry>>),
    Biorthogonal(Vec<Vec<ComplexEntry>>),
    Probs(Vec<f64>),
}

/// Parsed scenario file: basis dimension, Gram matrix, one state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub dim: usize,
    pub gram: Vec<Vec<ComplexEntry>>,
    pub state: StateSpec,
}

/// A structural (shape) defect found before any domain validation runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeError(pub String);

impl std::fmt::Display for ShapeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ShapeError {}

impl ScenarioFile {
    pub fn from_json(json: &str) -> serde_json::Result<Self> {
        serde_json::from_str(json)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Checks that every array shape is consistent with `dim`.
    pub fn check_shapes(&self) -> std::result::Result<(), ShapeError> {
        if self.dim == 0 {
            return Err(ShapeError("dim must be at least 1".into()));
        }
        check_matrix_shape("gram", &self.gram, self.dim)?;
        match &self.state {
            StateSpec::Pure(amps) => {
                if amps.len() != self.dim {
                    return Err(ShapeError(format!(
                        "pure state has {} amplitudes, expected {}",
                        amps.len(),
                        self.dim
                    )));
                }
            }
            StateSpec::Conventional(mat) => check_matrix_shape("conventional", mat, self.dim)?,
            StateSpec::Biorthogonal(mat) => check_matrix_shape("biorthogonal", mat, self.dim)?,
            StateSpec::Probs(probs) => {
                if probs.len() != self.dim {
                    return Err(ShapeError(format!(
                        "probs has {} entries, expected {}",
                        probs.len(),
                        self.dim
                    )));
                }
            }
        }
        Ok(())
    }

    /// The Gram matrix as a dense complex matrix (shape already checked).
    pub fn gram_matrix(&self) -> CMatrix {
        rows_to_matrix(&self.gram, self.dim)
    }

    /// Runs domain validation and produces the typed basis and state.
    pub fn realize(&self) -> Result<Scenario> {
        let basis = GramBasis::new(self.gram_matrix())?;
        let state = match &self.state {
            StateSpec::Pure(amps) => {
                let vector = CVector::from_iterator(
                    amps.len(),
                    amps.iter().map(|&entry| Complex64::from(entry)),
                );
                ScenarioState::Pure(PureState::new(basis.clone(), vector)?)
            }
            StateSpec::Conventional(rows) => ScenarioState::Conventional(ConventionalRep::new(
                basis.clone(),
                rows_to_matrix(rows, self.dim),
            )?),
            StateSpec::Biorthogonal(rows) => ScenarioState::Biorthogonal(BiorthogonalRep::new(
                basis.clone(),
                rows_to_matrix(rows, self.dim),
            )?),
            StateSpec::Probs(probs) => {
                ScenarioState::SuperpositionFree(superposition_free(probs, basis.clone())?)
            }
        };
        Ok(Scenario { basis, state })
    }
}

fn check_matrix_shape(
    name: &str,
    rows: &[Vec<ComplexEntry>],
    dim: usize,
) -> std::result::Result<(), ShapeError> {
    if rows.len() != dim || rows.iter().any(|row| row.len() != dim) {
        return Err(ShapeError(format!("{name} matrix is not {dim}x{dim}")));
    }
    Ok(())
}

fn rows_to_matrix(rows: &[Vec<ComplexEntry>], dim: usize) -> CMatrix {
    CMatrix::from_fn(dim, dim, |i, j| Complex64::from(rows[i][j]))
}

/// Matrix serialized back to the nested `{re, im}` form.
pub fn matrix_to_rows(mat: &CMatrix) -> Vec<Vec<ComplexEntry>> {
    (0..mat.nrows())
        .map(|i| {
            (0..mat.ncols())
                .map(|j| ComplexEntry::from(mat[(i, j)]))
                .collect()
        })
        .collect()
}

/// Validated basis plus state, ready for analysis.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub basis: GramBasis,
    pub state: ScenarioState,
}

/// The state in whichever representation the file supplied.
#[derive(Debug, Clone)]
pub enum ScenarioState {
    Pure(PureState),
    Conventional(ConventionalRep),
    Biorthogonal(BiorthogonalRep),
    SuperpositionFree(ConventionalRep),
}

impl ScenarioState {
    /// The state as a conventional representation, converting if needed.
    pub fn conventional(&self) -> ConventionalRep {
        match self {
            ScenarioState::Pure(state) => ConventionalRep::from_pure(state),
            ScenarioState::Conventional(rep) => rep.clone(),
            ScenarioState::Biorthogonal(rep) => rep.to_conventional(),
            ScenarioState::SuperpositionFree(rep) => rep.clone(),
        }
    }

    /// The pure state, when the file supplied one.
    pub fn pure(&self) -> Option<&PureState> {
        match self {
            ScenarioState::Pure(state) => Some(state),
            _ => None,
        }
    }
}
