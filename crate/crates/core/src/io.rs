//! OFF and JSON encodings.
//!
//! All writers are byte-stable: floats are printed with the shortest
//! representation that parses back to the same `f64`, and every collection
//! is emitted in a fixed order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chroma::{Colouring, FaceCycle, Orbit};
use crate::compound::{Compound, CompoundLabel};
use crate::error::FormatError;
use crate::perm::Parity;
use crate::polytope::{Dodecahedron, Handedness, VertexId};

/// Labelling tag carried by every colouring document.
pub const LABELLING: &str = "canonical-v1";

/// A polygon mesh as read back from OFF text.
#[derive(Clone, Debug, PartialEq)]
pub struct OffMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
    pub edge_count: usize,
}

fn write_off(vertices: &[[f64; 3]], faces: &[Vec<usize>], edge_count: usize) -> String {
    let mut out = String::new();
    out.push_str("OFF\n");
    writeln!(out, "{} {} {}", vertices.len(), faces.len(), edge_count).unwrap();
    for [x, y, z] in vertices {
        writeln!(out, "{x} {y} {z}").unwrap();
    }
    for face in faces {
        let ids: Vec<String> = face.iter().map(usize::to_string).collect();
        writeln!(out, "{} {}", face.len(), ids.join(" ")).unwrap();
    }
    out
}

fn coordinates(model: &Dodecahedron) -> Vec<[f64; 3]> {
    model
        .vertices()
        .iter()
        .map(|v| [v.position.x, v.position.y, v.position.z])
        .collect()
}

/// The dodecahedron as OFF: 20 vertices, 12 pentagons, 30 edges.
pub fn dodecahedron_off(model: &Dodecahedron) -> String {
    let faces: Vec<Vec<usize>> = model.faces().iter().map(|f| f.to_vec()).collect();
    write_off(&coordinates(model), &faces, model.edges().len())
}

/// A compound as one OFF mesh over the 20 dodecahedron vertices, four
/// outward-wound triangles per tetrahedron in compound order.
pub fn compound_off(model: &Dodecahedron, compound: &Compound) -> String {
    let faces: Vec<Vec<usize>> = compound
        .tetrahedra()
        .iter()
        .flat_map(|t| t.outward_faces(model))
        .map(|tri| tri.to_vec())
        .collect();
    write_off(&coordinates(model), &faces, 6 * compound.tetrahedra().len())
}

pub fn parse_off(text: &str) -> Result<OffMesh, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, reason: &str| FormatError::Off {
        line,
        reason: reason.to_string(),
    };

    match lines.next() {
        Some((_, "OFF")) => {}
        Some((line, _)) => return Err(err(line, "missing OFF header")),
        None => return Err(err(0, "empty input")),
    }
    let (line, counts) = lines.next().ok_or_else(|| err(0, "missing counts line"))?;
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(line, "counts are not integers"))?;
    let [n_vertices, n_faces, edge_count] = <[usize; 3]>::try_from(counts)
        .map_err(|_| err(line, "expected vertex, face and edge counts"))?;

    let mut vertices = Vec::with_capacity(n_vertices);
    for _ in 0..n_vertices {
        let (line, text) = lines.next().ok_or_else(|| err(0, "too few vertex lines"))?;
        let xyz: Vec<f64> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(line, "bad coordinate"))?;
        vertices.push(<[f64; 3]>::try_from(xyz).map_err(|_| err(line, "expected 3 coordinates"))?);
    }
    let mut faces = Vec::with_capacity(n_faces);
    for _ in 0..n_faces {
        let (line, text) = lines.next().ok_or_else(|| err(0, "too few face lines"))?;
        let ids: Vec<usize> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(line, "bad vertex index"))?;
        match ids.split_first() {
            Some((&n, rest)) if n == rest.len() && rest.iter().all(|&v| v < n_vertices) => {
                faces.push(rest.to_vec())
            }
            _ => return Err(err(line, "face length or index mismatch")),
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "trailing data"));
    }
    Ok(OffMesh {
        vertices,
        faces,
        edge_count,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<VertexId>>,
    pub antipode: Vec<VertexId>,
}

impl ModelDocument {
    pub fn from_model(model: &Dodecahedron) -> Self {
        ModelDocument {
            vertices: coordinates(model),
            faces: model.faces().iter().map(|f| f.to_vec()).collect(),
            antipode: model.antipodes().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundDocument {
    pub compound: CompoundLabel,
    pub tetrahedra: Vec<[VertexId; 4]>,
}

impl CompoundDocument {
    pub fn from_compound(compound: &Compound) -> Self {
        CompoundDocument {
            compound: compound.label(),
            tetrahedra: compound.tetrahedra().iter().map(|t| t.members()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringDocument {
    pub labelling: String,
    pub colours: Vec<u8>,
}

impl ColouringDocument {
    pub fn from_colouring(c: &Colouring) -> Self {
        ColouringDocument {
            labelling: LABELLING.to_string(),
            colours: c.colours().to_vec(),
        }
    }

    pub fn to_colouring(&self) -> Result<Colouring, FormatError> {
        if self.labelling != LABELLING {
            return Err(FormatError::Labelling(self.labelling.clone()));
        }
        Ok(Colouring::from_slice(&self.colours)?)
    }
}

pub fn colouring_to_json(c: &Colouring) -> String {
    to_json(&ColouringDocument::from_colouring(c))
}

/// Parses a colouring document. Range and length are checked; the rainbow
/// condition is not.
pub fn colouring_from_json(text: &str) -> Result<Colouring, FormatError> {
    serde_json::from_str::<ColouringDocument>(text)?.to_colouring()
}

/// Colourings as a JSON array of colouring documents, sorted.
pub fn enumeration_to_json(colourings: &[Colouring]) -> String {
    let mut sorted = colourings.to_vec();
    sorted.sort_unstable();
    let docs: Vec<ColouringDocument> = sorted.iter().map(ColouringDocument::from_colouring).collect();
    to_json(&docs)
}

pub fn enumeration_from_json(text: &str) -> Result<Vec<Colouring>, FormatError> {
    serde_json::from_str::<Vec<ColouringDocument>>(text)?
        .iter()
        .map(ColouringDocument::to_colouring)
        .collect()
}

/// Face-by-face cyclic colour orders of one colouring.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParityReport {
    pub colours: Vec<u8>,
    /// `null` when faces disagree.
    pub parity: Option<Parity>,
    pub faces: Vec<FaceCycle>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitReport {
    pub subgroup: String,
    pub subgroup_order: usize,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    /// Smallest member of each orbit.
    pub representatives: Vec<Vec<u8>>,
}

impl OrbitReport {
    pub fn new(subgroup: impl Into<String>, subgroup_order: usize, orbits: &[Orbit]) -> Self {
        OrbitReport {
            subgroup: subgroup.into(),
            subgroup_order,
            orbit_count: orbits.len(),
            orbit_sizes: orbits.iter().map(|o| o.members.len()).collect(),
            representatives: orbits
                .iter()
                .map(|o| o.representative.colours().to_vec())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub valid: bool,
    /// First face repeating a colour, for invalid input.
    pub violated_face: Option<usize>,
    pub compound: Option<CompoundLabel>,
    pub parity: Option<Parity>,
    pub faces: Vec<FaceCycle>,
    pub zigzag: Option<Handedness>,
    /// `[colour, [4 vertex ids]]` for each colour.
    pub colour_classes: Vec<(u8, Vec<VertexId>)>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::seed_colourings;
    use crate::compound::compounds;

    #[test]
    fn dodecahedron_off_header() {
        let m = Dodecahedron::build();
        let off = dodecahedron_off(&m);
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("20 12 30"));
        let mesh = parse_off(&off).unwrap();
        assert_eq!(mesh.vertices.len(), 20);
        assert_eq!(mesh.faces.len(), 12);
        assert!(mesh.faces.iter().all(|f| f.len() == 5));
    }

    #[test]
    fn compound_off_has_twenty_triangles() {
        let m = Dodecahedron::build();
        let (a, _) = compounds(&m).unwrap();
        let mesh = parse_off(&compound_off(&m, &a)).unwrap();
        assert_eq!(mesh.faces.len(), 20);
        assert!(mesh.faces.iter().all(|f| f.len() == 3));
        assert_eq!(mesh.edge_count, 30);
    }

    #[test]
    fn off_round_trip_is_lossless() {
        let m = Dodecahedron::build();
        let mesh = parse_off(&dodecahedron_off(&m)).unwrap();
        for (v, xyz) in m.vertices().iter().zip(&mesh.vertices) {
            assert_eq!([v.position.x, v.position.y, v.position.z], *xyz);
        }
        let faces: Vec<Vec<usize>> = m.faces().iter().map(|f| f.to_vec()).collect();
        assert_eq!(mesh.faces, faces);
    }

    #[test]
    fn off_parse_errors() {
        assert!(parse_off("").is_err());
        assert!(parse_off("PLY\n").is_err());
        assert!(parse_off("OFF\n1 0 0\n0 0\n").is_err());
        assert!(parse_off("OFF\n1 1 0\n0 0 0\n3 0 0 5\n").is_err());
        assert!(parse_off("OFF\n1 0 0\n0 0 0\nextra\n").is_err());
    }

    #[test]
    fn colouring_json_schema() {
        let m = Dodecahedron::build();
        let (a, _) = seed_colourings(&m);
        let text = colouring_to_json(&a);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["labelling"], "canonical-v1");
        assert_eq!(value["colours"].as_array().unwrap().len(), 20);
        assert_eq!(colouring_from_json(&text).unwrap(), a);
    }

    #[test]
    fn colouring_json_rejections() {
        let wrong_label = r#"{"labelling":"other","colours":[1,2,3,4,5,1,2,3,4,5,1,2,3,4,5,1,2,3,4,5]}"#;
        assert!(matches!(colouring_from_json(wrong_label), Err(FormatError::Labelling(_))));
        let short = r#"{"labelling":"canonical-v1","colours":[1,2,3]}"#;
        assert!(matches!(colouring_from_json(short), Err(FormatError::Chroma(_))));
        assert!(matches!(colouring_from_json("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn model_json_round_trip() {
        let m = Dodecahedron::build();
        let doc = ModelDocument::from_model(&m);
        let back: ModelDocument = serde_json::from_str(&to_json(&doc)).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn compound_json_shape() {
        let m = Dodecahedron::build();
        let (_, b) = compounds(&m).unwrap();
        let value: serde_json::Value = serde_json::from_str(&to_json(&CompoundDocument::from_compound(&b))).unwrap();
        assert_eq!(value["compound"], "B");
        assert_eq!(value["tetrahedra"].as_array().unwrap().len(), 5);
    }
}
