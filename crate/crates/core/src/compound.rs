//! Regular tetrahedra inscribed in the dodecahedron and the two chiral
//! compounds of five they form.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::chroma::{zigzag_trace, ColourClasses, Colouring};
use crate::error::{ChromaError, CompoundError};
use crate::polytope::{Dodecahedron, Handedness, Point, VertexId, TOLERANCE, VERTEX_COUNT};

/// Four dodecahedron vertices, sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tetrahedron {
    members: [VertexId; 4],
}

impl Tetrahedron {
    pub fn new(mut members: [VertexId; 4]) -> Self {
        members.sort_unstable();
        Tetrahedron { members }
    }

    pub fn members(&self) -> [VertexId; 4] {
        self.members
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    pub fn is_disjoint(&self, other: &Tetrahedron) -> bool {
        self.members.iter().all(|v| !other.contains(*v))
    }

    /// Whether all six edges have equal length.
    pub fn is_regular(&self, model: &Dodecahedron) -> bool {
        let d: Vec<f64> = self
            .members
            .iter()
            .tuple_combinations()
            .map(|(&a, &b)| model.distance(a, b))
            .collect();
        d.iter().all(|x| (x - d[0]).abs() <= TOLERANCE)
    }

    pub fn edge_length(&self, model: &Dodecahedron) -> f64 {
        model.distance(self.members[0], self.members[1])
    }

    /// The four triangles, each wound counterclockwise seen from outside
    /// the tetrahedron.
    pub fn outward_faces(&self, model: &Dodecahedron) -> [[VertexId; 3]; 4] {
        let m = self.members;
        let centre = m.iter().map(|&v| model.position(v)).sum::<Point>() / 4.0;
        [[m[1], m[2], m[3]], [m[0], m[3], m[2]], [m[0], m[1], m[3]], [m[0], m[2], m[1]]].map(
            |[a, b, c]| {
                let (pa, pb, pc) = (model.position(a), model.position(b), model.position(c));
                let normal = (pb - pa).cross(&(pc - pa));
                if normal.dot(&(pa - centre)) > 0.0 {
                    [a, b, c]
                } else {
                    [a, c, b]
                }
            },
        )
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.members;
        write!(f, "{{{a}, {b}, {c}, {d}}}")
    }
}

/// Every 4-subset of vertices whose six pairwise distances agree, found by
/// scanning all C(20, 4) subsets.
pub fn inscribed_tetrahedra(model: &Dodecahedron) -> Vec<Tetrahedron> {
    (0..VERTEX_COUNT)
        .combinations(4)
        .map(|c| Tetrahedron::new([c[0], c[1], c[2], c[3]]))
        .filter(|t| t.is_regular(model))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompoundLabel {
    A,
    B,
}

impl CompoundLabel {
    pub fn other(self) -> Self {
        match self {
            CompoundLabel::A => CompoundLabel::B,
            CompoundLabel::B => CompoundLabel::A,
        }
    }
}

impl fmt::Display for CompoundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompoundLabel::A => f.write_str("A"),
            CompoundLabel::B => f.write_str("B"),
        }
    }
}

/// Five vertex-disjoint inscribed tetrahedra covering all 20 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compound {
    label: CompoundLabel,
    tetrahedra: [Tetrahedron; 5],
}

impl Compound {
    pub fn label(&self) -> CompoundLabel {
        self.label
    }

    /// Member tetrahedra, sorted.
    pub fn tetrahedra(&self) -> &[Tetrahedron; 5] {
        &self.tetrahedra
    }

    pub fn index_of(&self, t: &Tetrahedron) -> Option<usize> {
        self.tetrahedra.iter().position(|u| u == t)
    }

    /// The tetrahedron containing vertex `v`.
    pub fn tetrahedron_of(&self, v: VertexId) -> usize {
        self.tetrahedra
            .iter()
            .position(|t| t.contains(v))
            .expect("a compound covers every vertex")
    }
}

/// The two compounds `(A, B)`.
///
/// Compound A is the one holding the tetrahedron that the left-right
/// zigzag from vertex 0 traces out.
pub fn compounds(model: &Dodecahedron) -> Result<(Compound, Compound), CompoundError> {
    let tetrahedra = inscribed_tetrahedra(model);
    let mut families: Vec<[Tetrahedron; 5]> = tetrahedra
        .iter()
        .copied()
        .combinations(5)
        .filter(|family| family.iter().tuple_combinations().all(|(s, t)| s.is_disjoint(t)))
        .map(|family| <[Tetrahedron; 5]>::try_from(family).expect("combinations of 5"))
        .collect();
    if families.len() != 2 {
        return Err(CompoundError::PartitionFailure(families.len()));
    }
    let traced = zigzag_trace(model, 0, Handedness::Left);
    let through_origin = <[VertexId; 4]>::try_from(traced)
        .map(Tetrahedron::new)
        .map_err(|_| CompoundError::PartitionFailure(0))?;
    if families.iter().all(|f| !f.contains(&through_origin)) {
        return Err(CompoundError::PartitionFailure(0));
    }
    if !families[0].contains(&through_origin) {
        families.swap(0, 1);
    }
    let [a, b] = <[[Tetrahedron; 5]; 2]>::try_from(families).expect("length checked");
    Ok((
        Compound {
            label: CompoundLabel::A,
            tetrahedra: a,
        },
        Compound {
            label: CompoundLabel::B,
            tetrahedra: b,
        },
    ))
}

/// Which compound a colouring's colour classes come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub compound: CompoundLabel,
    pub classes: ColourClasses,
    /// `tetrahedron_of_colour[c - 1]` indexes the compound's tetrahedra.
    pub tetrahedron_of_colour: [usize; 5],
}

/// Matches every colour class of a face-rainbow colouring to an inscribed
/// tetrahedron and checks all five come from one compound.
pub fn classify_colouring(
    model: &Dodecahedron,
    pair: &(Compound, Compound),
    colouring: &Colouring,
) -> Result<Classification, CompoundError> {
    if let Some(face) = colouring.first_violated_face(model) {
        return Err(ChromaError::NotRainbow { face }.into());
    }
    let classes = colouring.classes();
    let mut label = None;
    let mut tetrahedron_of_colour = [0; 5];
    for colour in 1..=5u8 {
        let members = classes.of(colour);
        let t = <[VertexId; 4]>::try_from(members.to_vec())
            .map(Tetrahedron::new)
            .map_err(|_| CompoundError::ClassNotTetrahedron { colour })?;
        let (found, index) = [&pair.0, &pair.1]
            .into_iter()
            .find_map(|c| c.index_of(&t).map(|i| (c.label(), i)))
            .ok_or(CompoundError::ClassNotTetrahedron { colour })?;
        if label.is_some_and(|l| l != found) {
            return Err(CompoundError::MixedCompounds);
        }
        label = Some(found);
        tetrahedron_of_colour[colour as usize - 1] = index;
    }
    Ok(Classification {
        compound: label.expect("five colours inspected"),
        classes,
        tetrahedron_of_colour,
    })
}

/// Result of the exhaustive search for vertex subsets whose points are
/// pairwise at least a tetrahedron edge apart.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpreadAnalysis {
    /// Minimum admissible pairwise distance (tetrahedron edge minus
    /// tolerance).
    pub threshold: f64,
    pub four_subsets_scanned: usize,
    pub five_extensions_checked: usize,
    pub spread_five_subsets: usize,
    pub max_size: usize,
    /// All spread subsets of maximal size, sorted.
    pub maximal_subsets: Vec<Vec<VertexId>>,
}

/// Exhaustively checks which vertex subsets keep all pairwise distances at
/// or above the inscribed-tetrahedron edge.
///
/// All 4-subsets are scanned; every spread 4-subset is then extended by
/// each remaining vertex. A spread 5-subset would contain a spread
/// 4-subset, so the extension step covers size 5 completely.
pub fn spread_subsets(model: &Dodecahedron) -> SpreadAnalysis {
    let spectrum = model.distance_spectrum();
    let threshold = spectrum[2].distance - TOLERANCE;
    let far = |a: VertexId, b: VertexId| model.distance(a, b) >= threshold;
    let spread = |set: &[VertexId]| set.iter().tuple_combinations().all(|(&a, &b)| far(a, b));

    let mut four_subsets_scanned = 0;
    let mut spread_fours = Vec::new();
    for subset in (0..VERTEX_COUNT).combinations(4) {
        four_subsets_scanned += 1;
        if spread(&subset) {
            spread_fours.push(subset);
        }
    }

    let mut five_extensions_checked = 0;
    let mut spread_fives = std::collections::BTreeSet::new();
    for four in &spread_fours {
        for v in (0..VERTEX_COUNT).filter(|v| !four.contains(v)) {
            five_extensions_checked += 1;
            if four.iter().all(|&w| far(v, w)) {
                let mut five = four.clone();
                five.push(v);
                five.sort_unstable();
                spread_fives.insert(five);
            }
        }
    }

    let (max_size, maximal_subsets) = if !spread_fives.is_empty() {
        (5, spread_fives.iter().cloned().collect())
    } else if !spread_fours.is_empty() {
        (4, spread_fours)
    } else {
        (0, Vec::new())
    };
    SpreadAnalysis {
        threshold,
        four_subsets_scanned,
        five_extensions_checked,
        spread_five_subsets: spread_fives.len(),
        max_size,
        maximal_subsets,
    }
}
