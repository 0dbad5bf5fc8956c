//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("unsupported image format for {path}: {reason}")]
    UnsupportedImage { path: PathBuf, reason: String },

    #[error("multi-channel input: {path} is not 8-bit grayscale")]
    MultiChannelInput { path: PathBuf },

    #[error("invalid image dimensions: {width}x{height} with {len} pixels")]
    BadImageBuffer { width: u32, height: u32, len: usize },

    #[error("zero target dimension in resize")]
    ZeroTargetDimension,

    #[error("tile size {tile_size} must exceed overlap {overlap}")]
    TileSizeNotAboveOverlap { tile_size: u32, overlap: u32 },

    #[error("tile rectangle has non-positive area")]
    EmptyTileRect,

    #[error("bounding box has non-positive area (w={w}, h={h})")]
    NonPositiveBox { w: f64, h: f64 },

    #[error("confidence {0} outside [0,1]")]
    BadConfidence(f64),

    #[error("invalid augmentation spec: {0}")]
    BadAugmentSpec(String),

    #[error("manifest is empty")]
    EmptyManifest,

    #[error("split fractions {0:?} do not sum to 1")]
    BadFractions([f64; 3]),

    #[error("duplicate image path in manifest: {0}")]
    DuplicateImagePath(String),

    #[error("class id {class_id} outside declared class list of length {n_classes}")]
    UnknownClassId { class_id: u32, n_classes: usize },

    #[error("non-positive altitude {0}")]
    NonPositiveAltitude(f64),

    #[error("non-positive target GSD {0}")]
    NonPositiveGsd(f64),

    #[error("calibration needs at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("zero variance: all calibration samples share one pixel value")]
    ZeroPixelVariance,

    #[error("calibration slope is zero; pixel lookup undefined")]
    ZeroSlope,

    #[error("sample region covers {0} pixels; at least {1} required")]
    RegionTooSmall(usize, usize),

    #[error("invalid detector config: {0}")]
    BadDetectorConfig(String),

    #[error("external detector backend unavailable: {0}")]
    BackendUnavailable(String),

    #[error("model file unreadable: {0}")]
    ModelUnreadable(PathBuf),

    #[error("frame sets differ: {0}")]
    FrameSetMismatch(String),

    #[error("rates undefined for all-zero counts")]
    AllZeroCounts,

    #[error("non-positive dedup radius {0}")]
    NonPositiveRadius(f64),

    #[error("invalid field spec: {0}")]
    BadFieldSpec(String),

    #[error("parse error in {path} line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("malformed {what} file {path}: {message}")]
    Format {
        what: &'static str,
        path: PathBuf,
        message: String,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Exit-code category used by the CLI: 3 for data errors, 4 for
    /// external-backend errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BackendUnavailable(_) | Error::ModelUnreadable(_) => 4,
            _ => 3,
        }
    }
}
