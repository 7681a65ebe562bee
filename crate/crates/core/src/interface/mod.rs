//! JSON files and SVG rendering.
//!
//! Files carry a `"kind"` discriminator (`"combinatorial"`, `"geometric"`
//! or `"analysis"`) and are validated against the schemas under
//! `schemas/` on read. Reals are written with 17 significant digits, so a
//! written configuration reads back bit for bit.

mod json;
mod svg;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::geometry::GeometryError;
use crate::incidence::IncidenceError;

pub use json::{
    analysis_to_json, from_json, read_configuration, to_json, validate, write_configuration, AnalysisDocument,
    ConfigurationFile, SchemaKind,
};
pub use svg::{render_svg, write_svg, SceneStyle};

#[derive(Debug, Error)]
pub enum InterfaceError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("expected a {expected} file, found {found}")]
    Kind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("invalid style: {0}")]
    Style(String),
    #[error("conic {0} is unbounded and there is no sampling window")]
    Unbounded(usize),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> InterfaceError + '_ {
    move |source| InterfaceError::Io {
        path: path.to_path_buf(),
        source,
    }
}
