use std::io;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;
use serde_json::Value;

use super::{io_error, InterfaceError};
use crate::analysis::{AuditReport, IntersectionType, Isometry, MeetReport};
use crate::constructions::{GeometricConfiguration, Provenance};
use crate::incidence::{Flag, IncidenceStructure};
use crate::{Conic, PlanarPoint};

const FORMAT_VERSION: u32 = 1;

const CONFIGURATION_SCHEMA: &str = include_str!("../../../../schemas/configuration.schema.json");
const ANALYSIS_SCHEMA: &str = include_str!("../../../../schemas/analysis.schema.json");
const STYLE_SCHEMA: &str = include_str!("../../../../schemas/style.schema.json");

/// A configuration file's content.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigurationFile {
    Combinatorial(IncidenceStructure),
    Geometric(GeometricConfiguration),
}

impl ConfigurationFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ConfigurationFile::Combinatorial(_) => "combinatorial",
            ConfigurationFile::Geometric(_) => "geometric",
        }
    }

    /// The incidence structure, for either kind.
    pub fn structure(&self) -> IncidenceStructure {
        match self {
            ConfigurationFile::Combinatorial(c) => c.clone(),
            ConfigurationFile::Geometric(g) => g.structure(),
        }
    }

    pub fn into_geometric(self) -> Result<GeometricConfiguration, InterfaceError> {
        match self {
            ConfigurationFile::Geometric(g) => Ok(g),
            other => Err(InterfaceError::Kind {
                expected: "geometric",
                found: other.kind(),
            }),
        }
    }

    pub fn into_combinatorial(self) -> Result<IncidenceStructure, InterfaceError> {
        match self {
            ConfigurationFile::Combinatorial(c) => Ok(c),
            other => Err(InterfaceError::Kind {
                expected: "combinatorial",
                found: other.kind(),
            }),
        }
    }
}

impl From<IncidenceStructure> for ConfigurationFile {
    fn from(c: IncidenceStructure) -> Self {
        ConfigurationFile::Combinatorial(c)
    }
}

impl From<GeometricConfiguration> for ConfigurationFile {
    fn from(g: GeometricConfiguration) -> Self {
        ConfigurationFile::Geometric(g)
    }
}

#[derive(Serialize, Deserialize)]
struct CombinatorialRecord {
    kind: String,
    version: u32,
    name: Option<String>,
    num_points: usize,
    num_blocks: usize,
    flags: Vec<Flag>,
}

#[derive(Serialize, Deserialize)]
struct GeometricRecord {
    kind: String,
    version: u32,
    points: Vec<[f64; 2]>,
    conics: Vec<[f64; 6]>,
    flags: Vec<Flag>,
    tol: f64,
    provenance: Provenance,
}

/// Report written by `analyze --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub kind: String,
    pub version: u32,
    pub audit: AuditReport,
    pub intersection_type: IntersectionType,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meets: Option<MeetReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub isometry: Option<Isometry>,
}

impl AnalysisDocument {
    pub fn new(audit: AuditReport, intersection_type: IntersectionType) -> Self {
        Self {
            kind: "analysis".into(),
            version: FORMAT_VERSION,
            audit,
            intersection_type,
            meets: None,
            isometry: None,
        }
    }
}

/// Compact JSON with every real written as `{:.16e}`.
struct RoundTrip;

impl Formatter for RoundTrip {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        write!(w, "{value:.8e}")
    }
}

fn canonical<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, RoundTrip);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization does not fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// Canonical serialization of a configuration.
pub fn to_json(file: &ConfigurationFile) -> String {
    match file {
        ConfigurationFile::Combinatorial(c) => canonical(&CombinatorialRecord {
            kind: "combinatorial".into(),
            version: FORMAT_VERSION,
            name: c.name().map(str::to_string),
            num_points: c.num_points(),
            num_blocks: c.num_blocks(),
            flags: c.flags().collect(),
        }),
        ConfigurationFile::Geometric(g) => canonical(&GeometricRecord {
            kind: "geometric".into(),
            version: FORMAT_VERSION,
            points: g.points.iter().map(|p| [p.x, p.y]).collect(),
            conics: g.conics.iter().map(Conic::coefficients).collect(),
            flags: g.flags.iter().copied().collect(),
            tol: g.tol,
            provenance: g.provenance.clone(),
        }),
    }
}

pub fn analysis_to_json(doc: &AnalysisDocument) -> String {
    canonical(doc)
}

/// Which published schema to check against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemaKind {
    Combinatorial,
    Geometric,
    /// Whichever of the two the `"kind"` field names.
    Configuration,
    Analysis,
    Style,
}

fn schema_source(kind: SchemaKind) -> Value {
    let text = match kind {
        SchemaKind::Analysis => ANALYSIS_SCHEMA,
        SchemaKind::Style => STYLE_SCHEMA,
        _ => CONFIGURATION_SCHEMA,
    };
    let mut schema: Value = serde_json::from_str(text).expect("bundled schema is valid JSON");
    // a direct reference to one branch gives errors that name the field,
    // where the union would only say that no branch matched
    let branch = match kind {
        SchemaKind::Combinatorial => Some("#/$defs/combinatorial"),
        SchemaKind::Geometric => Some("#/$defs/geometric"),
        _ => None,
    };
    if let (Some(branch), Some(obj)) = (branch, schema.as_object_mut()) {
        obj.remove("oneOf");
        obj.insert("$ref".into(), Value::from(branch));
    }
    schema
}

fn validator(kind: SchemaKind) -> &'static jsonschema::Validator {
    static CELLS: [OnceLock<jsonschema::Validator>; 5] = [const { OnceLock::new() }; 5];
    let slot = match kind {
        SchemaKind::Combinatorial => 0,
        SchemaKind::Geometric => 1,
        SchemaKind::Configuration => 2,
        SchemaKind::Analysis => 3,
        SchemaKind::Style => 4,
    };
    CELLS[slot].get_or_init(|| jsonschema::validator_for(&schema_source(kind)).expect("bundled schema compiles"))
}

/// Checks `value` against a published schema, reporting the first
/// violation with its JSON-pointer path.
pub fn validate(value: &Value, kind: SchemaKind) -> Result<(), InterfaceError> {
    let kind = match (kind, value.get("kind").and_then(Value::as_str)) {
        (SchemaKind::Configuration, Some("combinatorial")) => SchemaKind::Combinatorial,
        (SchemaKind::Configuration, Some("geometric")) => SchemaKind::Geometric,
        (k, _) => k,
    };
    match validator(kind).iter_errors(value).next() {
        None => Ok(()),
        Some(e) => {
            let path = e.instance_path().to_string();
            Err(InterfaceError::Schema {
                path: if path.is_empty() { "/".into() } else { path },
                message: e.to_string(),
            })
        }
    }
}

/// Parses and validates a configuration file's text.
pub fn from_json(text: &str) -> Result<ConfigurationFile, InterfaceError> {
    let value: Value = serde_json::from_str(text)?;
    validate(&value, SchemaKind::Configuration)?;
    match value.get("kind").and_then(Value::as_str) {
        Some("combinatorial") => {
            let r: CombinatorialRecord = serde_json::from_value(value)?;
            let mut c = IncidenceStructure::new_strict(r.num_points, r.num_blocks, r.flags)?;
            if let Some(name) = r.name {
                c = c.with_name(name);
            }
            Ok(ConfigurationFile::Combinatorial(c))
        }
        _ => {
            let r: GeometricRecord = serde_json::from_value(value)?;
            let points: Vec<PlanarPoint> = r.points.iter().map(|&[x, y]| PlanarPoint::new(x, y)).collect();
            let conics = r
                .conics
                .iter()
                .map(|&c| Conic::from_coefficients(c))
                .collect::<Result<Vec<_>, _>>()?;
            // range and duplicate checks
            IncidenceStructure::new_strict(points.len(), conics.len(), r.flags.iter().copied())?;
            let g = GeometricConfiguration::new(points, conics, r.flags.into_iter().collect(), r.tol, r.provenance);
            Ok(ConfigurationFile::Geometric(g))
        }
    }
}

pub fn write_configuration(file: &ConfigurationFile, path: &Path) -> Result<(), InterfaceError> {
    std::fs::write(path, to_json(file)).map_err(io_error(path))
}

pub fn read_configuration(path: &Path) -> Result<ConfigurationFile, InterfaceError> {
    let text = std::fs::read_to_string(path).map_err(io_error(path))?;
    from_json(&text)
}
