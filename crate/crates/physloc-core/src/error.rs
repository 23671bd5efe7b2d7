use std::path::PathBuf;

use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A point sits at or behind the camera plane where projection is undefined.
    #[error("point at or behind the camera plane (depth {depth} m)")]
    NonPositiveDepth { depth: f64 },

    /// The view axis is parallel to world z, so no up direction can be projected.
    #[error("view axis parallel to world z; up vector undefined (theta = {theta_deg} deg)")]
    DegenerateUpVector { theta_deg: f64 },

    /// Pose estimation needs a minimum number of 2D-3D correspondences.
    #[error("pose estimation needs at least {needed} correspondences, got {got}")]
    InsufficientCorrespondences { needed: usize, got: usize },

    /// The correspondence set spans a rank-deficient system.
    #[error("degenerate correspondence configuration: sigma_min/sigma_max = {ratio:.3e}")]
    DegenerateConfiguration { ratio: f64 },

    /// Two grids that must share a shape do not.
    #[error("grid shapes differ: {lhs_h}x{lhs_w} vs {rhs_h}x{rhs_w}")]
    GridShapeMismatch {
        lhs_h: usize,
        lhs_w: usize,
        rhs_h: usize,
        rhs_w: usize,
    },

    /// The adaptive integrator exhausted its step budget.
    #[error("integration step limit exceeded at t = {t_reached} s")]
    StepLimitExceeded { t_reached: f64 },

    /// A frame index fell outside the range an operation can serve.
    #[error("frame index {index} outside valid range {lo}..={hi}")]
    FrameIndexOutOfRange { index: usize, lo: usize, hi: usize },

    /// A loss mode that needs 3D ground truth was used on a clip without it.
    #[error("clip lacks the 3D ground truth required by loss mode 3d-gt (frame {frame})")]
    MissingGroundTruth { frame: usize },

    /// Recovery left the valid numeric domain; carries the loss trace up to failure.
    #[error("recovery diverged at step {step} (loss {loss:.3e})")]
    DivergedRecovery {
        step: usize,
        loss: f64,
        trace: Vec<f64>,
    },

    /// Metrics over an empty evaluation set are undefined.
    #[error("empty evaluation set")]
    EmptyEvaluationSet,

    /// Rejection sampling could not find an initial state inside every view frustum.
    #[error("no initial state kept the trajectory inside every view frustum after {attempts} attempts")]
    UnsatisfiableBounds { attempts: usize },

    /// A value or configuration violated a documented invariant.
    #[error("invalid {what}: {why}")]
    InvalidInput { what: String, why: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub fn invalid(what: impl Into<String>, why: impl Into<String>) -> Self {
        Error::InvalidInput {
            what: what.into(),
            why: why.into(),
        }
    }

    /// Stable machine-greppable code, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPositiveDepth { .. } => "NON_POSITIVE_DEPTH",
            Error::DegenerateUpVector { .. } => "DEGENERATE_UP_VECTOR",
            Error::InsufficientCorrespondences { .. } => "INSUFFICIENT_CORRESPONDENCES",
            Error::DegenerateConfiguration { .. } => "DEGENERATE_CONFIGURATION",
            Error::GridShapeMismatch { .. } => "GRID_SHAPE_MISMATCH",
            Error::StepLimitExceeded { .. } => "STEP_LIMIT_EXCEEDED",
            Error::FrameIndexOutOfRange { .. } => "FRAME_INDEX_OUT_OF_RANGE",
            Error::MissingGroundTruth { .. } => "MISSING_GROUND_TRUTH",
            Error::DivergedRecovery { .. } => "DIVERGED_RECOVERY",
            Error::EmptyEvaluationSet => "EMPTY_EVALUATION_SET",
            Error::UnsatisfiableBounds { .. } => "UNSATISFIABLE_BOUNDS",
            Error::InvalidInput { .. } => "INVALID_INPUT",
            Error::Io { .. } => "IO",
            Error::Json { .. } => "JSON",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
