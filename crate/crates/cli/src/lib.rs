//! Commands behind the `dodecolour` binary. Each command returns its
//! output text and an exit status so the binary stays a thin shell.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use dodecolour::chroma::{
    enumerate_all, face_parity_signature, orbit_partition, seed_colourings, shared_parity,
    working_handedness,
};
use dodecolour::compound::{classify_colouring, compounds};
use dodecolour::io::{
    colouring_from_json, colouring_to_json, compound_off, dodecahedron_off, enumeration_to_json, to_json,
    ClassificationReport, CompoundDocument, ModelDocument, OrbitReport,
};
use dodecolour::symmetry::{generate_subgroup, NamedSubgroup};
use dodecolour::verify::run_all;
use dodecolour::{ColourPerm, ColourSymmetry, CompoundLabel, Dodecahedron, Handedness, Sign};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid subgroup specification {spec:?}: {reason}")]
    Subgroup { spec: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: dodecolour::FormatError,
    },
    #[error(transparent)]
    Compound(#[from] dodecolour::CompoundError),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Subgroup { .. } | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Text to print and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

/// A subgroup of S5 × {1, −1}, given by name or by generators.
///
/// Generator lists are `;`-separated; each generator is a colour
/// permutation in cycle notation on `1..=5`, optionally followed by
/// `:-1` or `:+1`, e.g. `(1 2 3 4 5);(1 2):-1`. `()` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    Named(NamedSubgroup),
    Generated(Vec<ColourSymmetry>),
}

impl SubgroupSpec {
    pub fn elements(&self) -> Vec<ColourSymmetry> {
        match self {
            SubgroupSpec::Named(g) => g.elements(),
            SubgroupSpec::Generated(gens) => generate_subgroup(gens),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SubgroupSpec::Named(g) => g.name().to_string(),
            SubgroupSpec::Generated(gens) => gens.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        }
    }
}

fn parse_generator(text: &str) -> Result<ColourSymmetry, String> {
    let (cycles, sign) = match text.split_once(':') {
        Some((c, s)) => (c.trim(), s.trim()),
        None => (text.trim(), "+1"),
    };
    let sign = match sign {
        "+1" | "1" => Sign::Plus,
        "-1" => Sign::Minus,
        other => return Err(format!("sign must be +1 or -1, got {other:?}")),
    };
    if !cycles.starts_with('(') || !cycles.ends_with(')') {
        return Err(format!("expected cycle notation, got {cycles:?}"));
    }
    let mut parsed = Vec::new();
    for body in cycles[1..cycles.len() - 1].split(")(") {
        let points: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(k @ 1..=5) => Ok(k - 1),
                _ => Err(format!("colour must be 1..5, got {s:?}")),
            })
            .collect::<Result<_, _>>()?;
        if !points.is_empty() {
            parsed.push(points);
        }
    }
    let perm = ColourPerm::from_cycles(&parsed).map_err(|e| e.to_string())?;
    Ok(ColourSymmetry::new(perm, sign))
}

impl FromStr for SubgroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(named) = NamedSubgroup::from_str(s) {
            return Ok(SubgroupSpec::Named(named));
        }
        let fail = |reason: String| CliError::Subgroup {
            spec: s.to_string(),
            reason,
        };
        if s.trim().is_empty() {
            return Err(fail("empty".to_string()));
        }
        s.split(';')
            .map(parse_generator)
            .collect::<Result<Vec<_>, _>>()
            .map(SubgroupSpec::Generated)
            .map_err(fail)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn verify(model: &Dodecahedron, json: bool) -> Outcome {
    let report = run_all(model);
    let status = if report.all_passed() { 0 } else { 1 };
    let output = if json {
        to_json(&report)
    } else {
        let mut out = String::new();
        for check in &report.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {}  [{}]", check.name, check.measured).unwrap();
        }
        let failed = report.failures().count();
        writeln!(out, "{} checks, {failed} failed", report.checks.len()).unwrap();
        out
    };
    Outcome { output, status }
}

pub fn enumerate(model: &Dodecahedron, out: &Path) -> Result<Outcome, CliError> {
    let all = enumerate_all(model);
    write(out, &enumeration_to_json(&all))?;
    Ok(Outcome::ok(format!("wrote {} colourings to {}\n", all.len(), out.display())))
}

pub fn orbits(model: &Dodecahedron, spec: &SubgroupSpec, json: bool) -> Result<Outcome, CliError> {
    let elements = spec.elements();
    let all = enumerate_all(model);
    let orbits = orbit_partition(model, &all, &elements).expect("a generated subgroup acting on all colourings");
    let report = OrbitReport::new(spec.describe(), elements.len(), &orbits);
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut out = String::new();
    writeln!(out, "subgroup: {}", report.subgroup).unwrap();
    writeln!(out, "|H| = {}", report.subgroup_order).unwrap();
    writeln!(out, "orbits: {}", report.orbit_count).unwrap();
    let sizes: Vec<String> = report.orbit_sizes.iter().map(ToString::to_string).collect();
    writeln!(out, "orbit sizes: {}", sizes.join(" ")).unwrap();
    for o in &orbits {
        writeln!(out, "representative: {}", o.representative).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn zigzag_name(h: Handedness) -> &'static str {
    match h {
        Handedness::Left => "left-right",
        Handedness::Right => "right-left",
    }
}

pub fn classify(model: &Dodecahedron, input: &Path, json: bool) -> Result<Outcome, CliError> {
    let colouring = colouring_from_json(&read(input)?).map_err(|source| CliError::Format {
        path: input.to_path_buf(),
        source,
    })?;
    let classes = colouring.classes();
    let colour_classes = classes.iter().map(|(c, vs)| (c, vs.to_vec())).collect();
    if let Some(face) = colouring.first_violated_face(model) {
        let report = ClassificationReport {
            valid: false,
            violated_face: Some(face),
            compound: None,
            parity: None,
            faces: Vec::new(),
            zigzag: None,
            colour_classes,
        };
        let output = if json {
            to_json(&report)
        } else {
            format!("INVALID: face {face} {:?} repeats a colour\n", model.face(face))
        };
        return Ok(Outcome { output, status: 1 });
    }

    let pair = compounds(model)?;
    let classification = classify_colouring(model, &pair, &colouring)?;
    let faces = face_parity_signature(model, &colouring);
    let report = ClassificationReport {
        valid: true,
        violated_face: None,
        compound: Some(classification.compound),
        parity: shared_parity(&faces),
        faces,
        zigzag: working_handedness(model, &colouring),
        colour_classes,
    };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let compound = match classification.compound {
        CompoundLabel::A => &pair.0,
        CompoundLabel::B => &pair.1,
    };
    let mut out = String::new();
    writeln!(out, "valid").unwrap();
    writeln!(out, "compound: {}", classification.compound).unwrap();
    let parity = report.parity.map_or("mixed".to_string(), |p| p.to_string());
    writeln!(out, "parity: {parity}").unwrap();
    let zigzag = report.zigzag.map_or("none", zigzag_name);
    writeln!(out, "zigzag: {zigzag}").unwrap();
    for f in &report.faces {
        let order: String = f.cyclic_order.iter().map(ToString::to_string).collect();
        writeln!(out, "face {:>2}: {order} ({})", f.face, f.parity).unwrap();
    }
    for (colour, index) in (1..=5u8).zip(classification.tetrahedron_of_colour) {
        writeln!(out, "colour {colour}: tetrahedron {}", compound.tetrahedra()[index]).unwrap();
    }
    Ok(Outcome::ok(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportTarget {
    Dodecahedron,
    Compound(CompoundLabel),
    Colouring,
}

impl FromStr for ExportTarget {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dodecahedron" => Ok(ExportTarget::Dodecahedron),
            "compound-A" => Ok(ExportTarget::Compound(CompoundLabel::A)),
            "compound-B" => Ok(ExportTarget::Compound(CompoundLabel::B)),
            "colouring" => Ok(ExportTarget::Colouring),
            other => Err(CliError::Usage(format!(
                "unknown export target {other:?}; expected dodecahedron, compound-A, compound-B or colouring"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Off,
    Json,
}

impl FromStr for ExportFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "off" => Ok(ExportFormat::Off),
            "json" => Ok(ExportFormat::Json),
            other => Err(CliError::Usage(format!("unknown format {other:?}; expected off or json"))),
        }
    }
}

/// Renders `target`. A colouring export writes seed A, or the colouring
/// read from `input` when given.
pub fn export(
    model: &Dodecahedron,
    target: ExportTarget,
    format: ExportFormat,
    input: Option<&Path>,
) -> Result<String, CliError> {
    match (target, format) {
        (ExportTarget::Dodecahedron, ExportFormat::Off) => Ok(dodecahedron_off(model)),
        (ExportTarget::Dodecahedron, ExportFormat::Json) => Ok(to_json(&ModelDocument::from_model(model))),
        (ExportTarget::Compound(label), format) => {
            let pair = compounds(model)?;
            let compound = if label == CompoundLabel::A { &pair.0 } else { &pair.1 };
            Ok(match format {
                ExportFormat::Off => compound_off(model, compound),
                ExportFormat::Json => to_json(&CompoundDocument::from_compound(compound)),
            })
        }
        (ExportTarget::Colouring, ExportFormat::Json) => {
            let colouring = match input {
                Some(path) => colouring_from_json(&read(path)?).map_err(|source| CliError::Format {
                    path: path.to_path_buf(),
                    source,
                })?,
                None => seed_colourings(model).0,
            };
            Ok(colouring_to_json(&colouring))
        }
        (ExportTarget::Colouring, ExportFormat::Off) => {
            Err(CliError::Usage("colourings export as json only".to_string()))
        }
    }
}

/// Writes `text` to `out`, or returns it for standard output.
pub fn emit(text: String, out: Option<&Path>) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::ok(text)),
    }
}
