//! Enumeration by replaying the latitude-by-latitude forcing argument.
//!
//! A colour frame fixes the colours of the north pole and its three
//! neighbours: under frame `π` the north pole gets `π(1)` and the `C1`
//! vertices, in azimuth order, get `π(2)`, `π(3)`, `π(4)`. The face through
//! the north pole and the first two `C1` vertices then has two open
//! vertices needing `{π(4), π(5)}`, which is the only branch point. Every
//! later circle (`C2`, `C3`, `C4`, south pole) must then be forced by
//! local face reasoning alone; anything else is reported as an error.

use super::{Colouring, COLOUR_COUNT};
use crate::error::ReplayError;
use crate::perm::{all_permutations, Perm};
use crate::polytope::{Dodecahedron, Latitude, VertexId, VERTEX_COUNT};
use crate::symmetry::ColourPerm;

/// The two completions found for one colour frame, in branch order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameCompletions {
    pub frame: ColourPerm,
    pub completions: Vec<Colouring>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofReplay {
    /// One entry per colour frame, frames in lexicographic order.
    pub frames: Vec<FrameCompletions>,
}

impl ProofReplay {
    /// All completions over all frames, sorted.
    pub fn colourings(&self) -> Vec<Colouring> {
        let mut all: Vec<Colouring> = self
            .frames
            .iter()
            .flat_map(|f| f.completions.iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

const STAGES: [Latitude; 4] = [Latitude::C2, Latitude::C3, Latitude::C4, Latitude::SouthPole];

/// Runs the forcing argument for every one of the 120 colour frames and
/// both branches.
pub fn propagate_proof_enumeration(model: &Dodecahedron) -> Result<ProofReplay, ReplayError> {
    let frames = all_permutations::<5>()
        .into_iter()
        .map(|frame| {
            let completions = (0..2)
                .map(|branch| complete_branch(model, &frame, branch))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FrameCompletions { frame, completions })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProofReplay { frames })
}

/// The two completions under the identity frame: north pole `1`, `C1`
/// vertices `2, 3, 4` counterclockwise. Branch 0 comes first.
pub fn seed_colourings(model: &Dodecahedron) -> (Colouring, Colouring) {
    let id = Perm::identity();
    let first = complete_branch(model, &id, 0).expect("identity frame, branch 0 completes");
    let second = complete_branch(model, &id, 1).expect("identity frame, branch 1 completes");
    (first, second)
}

struct Board<'a> {
    model: &'a Dodecahedron,
    frame: &'a ColourPerm,
    branch: usize,
    colours: [u8; VERTEX_COUNT],
    domains: [u8; VERTEX_COUNT],
}

impl<'a> Board<'a> {
    fn new(model: &'a Dodecahedron, frame: &'a ColourPerm, branch: usize) -> Self {
        Board {
            model,
            frame,
            branch,
            colours: [0; VERTEX_COUNT],
            domains: [(1 << COLOUR_COUNT) - 1; VERTEX_COUNT],
        }
    }

    fn framed(&self, colour: u8) -> u8 {
        self.frame.apply(colour as usize - 1) as u8 + 1
    }

    fn contradiction(&self, vertex: VertexId) -> ReplayError {
        ReplayError::Contradiction {
            frame: self.frame.to_vec(),
            branch: self.branch,
            vertex,
        }
    }

    fn assign(&mut self, v: VertexId, colour: u8) -> Result<(), ReplayError> {
        let bit = 1 << (colour - 1);
        if self.domains[v] & bit == 0 {
            return Err(self.contradiction(v));
        }
        self.colours[v] = colour;
        self.domains[v] = bit;
        for &f in self.model.faces_of(v) {
            for &w in self.model.face(f) {
                if w != v {
                    self.domains[w] &= !bit;
                    if self.domains[w] == 0 {
                        return Err(self.contradiction(w));
                    }
                }
            }
        }
        Ok(())
    }

    /// Colours every vertex of `stage` using naked singles (a vertex with one
    /// admissible colour left) and hidden singles (a colour a face still
    /// needs that only one of its open vertices admits).
    fn settle(&mut self, stage: Latitude) -> Result<(), ReplayError> {
        let targets = self.model.circle(stage);
        loop {
            if targets.iter().all(|&v| self.colours[v] != 0) {
                return Ok(());
            }
            let mut forced: Option<(VertexId, u8)> = None;
            for &v in targets.iter().filter(|&&v| self.colours[v] == 0) {
                if self.domains[v].count_ones() == 1 {
                    forced = Some((v, self.domains[v].trailing_zeros() as u8 + 1));
                    break;
                }
            }
            if forced.is_none() {
                forced = self.hidden_single(&targets)?;
            }
            match forced {
                Some((v, colour)) => self.assign(v, colour)?,
                None => {
                    return Err(ReplayError::Stalled {
                        frame: self.frame.to_vec(),
                        branch: self.branch,
                        stage: stage.name(),
                    })
                }
            }
        }
    }

    fn hidden_single(&self, targets: &[VertexId]) -> Result<Option<(VertexId, u8)>, ReplayError> {
        for face in self.model.faces() {
            for colour in 1..=COLOUR_COUNT {
                let bit = 1 << (colour - 1);
                if face.iter().any(|&w| self.colours[w] == colour) {
                    continue;
                }
                let mut open = face
                    .iter()
                    .copied()
                    .filter(|&w| self.colours[w] == 0 && self.domains[w] & bit != 0);
                match (open.next(), open.next()) {
                    (None, _) => return Err(self.contradiction(face[0])),
                    (Some(w), None) if targets.contains(&w) => return Ok(Some((w, colour))),
                    _ => {}
                }
            }
        }
        Ok(None)
    }
}

fn complete_branch(model: &Dodecahedron, frame: &ColourPerm, branch: usize) -> Result<Colouring, ReplayError> {
    let mut board = Board::new(model, frame, branch);
    let c1 = model.circle(Latitude::C1);
    board.assign(0, board.framed(1))?;
    for (k, &v) in c1.iter().enumerate() {
        board.assign(v, board.framed(k as u8 + 2))?;
    }

    // The face through the north pole and the first two C1 vertices.
    let first_face = model
        .faces()
        .iter()
        .find(|face| face.contains(&0) && face.contains(&c1[0]) && face.contains(&c1[1]))
        .expect("two neighbours of a vertex share exactly one face with it");
    let open_next_to = |anchor: VertexId| {
        *first_face
            .iter()
            .find(|&&w| w != 0 && !c1.contains(&w) && model.are_adjacent(w, anchor))
            .expect("each C1 vertex has a C2 neighbour on the first face")
    };
    let (near_first, near_second) = (open_next_to(c1[0]), open_next_to(c1[1]));
    let (a, b) = if branch == 0 { (5, 4) } else { (4, 5) };
    board.assign(near_first, board.framed(a))?;
    board.assign(near_second, board.framed(b))?;

    for stage in STAGES {
        board.settle(stage)?;
    }
    let colouring = Colouring::new(board.colours).map_err(|_| board.contradiction(0))?;
    match colouring.first_violated_face(model) {
        Some(f) => Err(board.contradiction(model.face(f)[0])),
        None => Ok(colouring),
    }
}
