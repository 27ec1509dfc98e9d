//! Vertex colourings of the dodecahedron with colours `1..=5`, the
//! face-rainbow condition, and the action of S5 × {1, −1} on them.

mod properties;
mod replay;
mod search;

use std::collections::{HashMap, HashSet};
use std::fmt;

use petgraph::unionfind::UnionFind;

pub use properties::{
    antipodal_rule_violation, face_parity_signature, shared_parity, vertex_handednesses,
    working_handedness, zigzag_path, zigzag_trace, FaceCycle,
};
pub use replay::{propagate_proof_enumeration, seed_colourings, FrameCompletions, ProofReplay};
pub use search::enumerate_all;

use crate::error::ChromaError;
use crate::polytope::{Dodecahedron, FaceId, VertexId, VERTEX_COUNT};
use crate::symmetry::{ColourSymmetry, Sign};

pub const COLOUR_COUNT: u8 = 5;

/// A colour in `1..=5` for each of the 20 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    colours: [u8; VERTEX_COUNT],
}

impl Colouring {
    pub fn new(colours: [u8; VERTEX_COUNT]) -> Result<Self, ChromaError> {
        for (vertex, &colour) in colours.iter().enumerate() {
            if !(1..=COLOUR_COUNT).contains(&colour) {
                return Err(ChromaError::ColourOutOfRange { vertex, colour });
            }
        }
        Ok(Colouring { colours })
    }

    pub fn from_slice(colours: &[u8]) -> Result<Self, ChromaError> {
        let array = <[u8; VERTEX_COUNT]>::try_from(colours)
            .map_err(|_| ChromaError::WrongLength(colours.len()))?;
        Self::new(array)
    }

    #[inline]
    pub fn colour(&self, v: VertexId) -> u8 {
        self.colours[v]
    }

    pub fn colours(&self) -> &[u8; VERTEX_COUNT] {
        &self.colours
    }

    /// First face (by id) that repeats a colour.
    pub fn first_violated_face(&self, model: &Dodecahedron) -> Option<FaceId> {
        model.faces().iter().position(|face| {
            let mut seen = 0u8;
            face.iter().any(|&v| {
                let bit = 1 << (self.colours[v] - 1);
                let repeat = seen & bit != 0;
                seen |= bit;
                repeat
            })
        })
    }

    pub fn classes(&self) -> ColourClasses {
        let mut classes: [Vec<VertexId>; 5] = Default::default();
        for (v, &c) in self.colours.iter().enumerate() {
            classes[c as usize - 1].push(v);
        }
        ColourClasses { classes }
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring({self})")
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.colours {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Vertex sets of the five colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColourClasses {
    classes: [Vec<VertexId>; 5],
}

impl ColourClasses {
    /// Vertices of colour `colour`, ascending.
    pub fn of(&self, colour: u8) -> &[VertexId] {
        &self.classes[colour as usize - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u8, &[VertexId])> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u8 + 1, c.as_slice()))
    }
}

/// True iff every face carries five distinct colours.
pub fn is_valid(model: &Dodecahedron, c: &Colouring) -> bool {
    c.first_violated_face(model).is_none()
}

/// Applies `g` without checking the rainbow condition.
pub(crate) fn apply(model: &Dodecahedron, g: &ColourSymmetry, c: &Colouring) -> Colouring {
    let mut colours = [0u8; VERTEX_COUNT];
    for (v, slot) in colours.iter_mut().enumerate() {
        let source = match g.sign {
            Sign::Plus => v,
            Sign::Minus => model.antipode(v),
        };
        *slot = g.map_colour(c.colours[source]);
    }
    Colouring { colours }
}

/// Relabels colours by `g`'s permutation and, for sign −1, swaps the
/// colours of every antipodal pair.
pub fn act(model: &Dodecahedron, g: &ColourSymmetry, c: &Colouring) -> Result<Colouring, ChromaError> {
    if let Some(face) = c.first_violated_face(model) {
        return Err(ChromaError::NotRainbow { face });
    }
    Ok(apply(model, g, c))
}

/// Elements of G fixing `c`.
pub fn stabilizer(model: &Dodecahedron, c: &Colouring) -> Vec<ColourSymmetry> {
    ColourSymmetry::all()
        .into_iter()
        .filter(|g| apply(model, g, c) == *c)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest member in lexicographic order.
    pub representative: Colouring,
    /// Members, ascending.
    pub members: Vec<Colouring>,
}

/// Splits `colourings` into orbits of the subgroup `subgroup`.
///
/// Orbits are built by joining each colouring with all of its images, not
/// by assuming any orbit size. `subgroup` must contain the identity and be
/// closed under composition; every image must lie in `colourings`.
pub fn orbit_partition(
    model: &Dodecahedron,
    colourings: &[Colouring],
    subgroup: &[ColourSymmetry],
) -> Result<Vec<Orbit>, ChromaError> {
    let members: HashSet<&ColourSymmetry> = subgroup.iter().collect();
    if !members.contains(&ColourSymmetry::identity()) {
        return Err(ChromaError::MissingIdentity);
    }
    for a in subgroup {
        for b in subgroup {
            if !members.contains(&a.compose(b)) {
                return Err(ChromaError::SubgroupNotClosed);
            }
        }
    }

    let index: HashMap<Colouring, usize> = colourings
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, i))
        .collect();
    let mut sets = UnionFind::<usize>::new(colourings.len());
    for (i, c) in colourings.iter().enumerate() {
        for g in subgroup {
            let image = act(model, g, c)?;
            let j = *index.get(&image).ok_or(ChromaError::ImageOutsideSet)?;
            sets.union(i, j);
        }
    }

    let mut grouped: HashMap<usize, Vec<Colouring>> = HashMap::new();
    for (i, c) in colourings.iter().enumerate() {
        grouped.entry(sets.find(i)).or_default().push(*c);
    }
    let mut orbits: Vec<Orbit> = grouped
        .into_values()
        .map(|mut members| {
            members.sort_unstable();
            members.dedup();
            Orbit {
                representative: members[0],
                members,
            }
        })
        .collect();
    orbits.sort_by_key(|o| o.representative);
    Ok(orbits)
}
