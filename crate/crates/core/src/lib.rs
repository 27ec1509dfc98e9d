//! Face-rainbow vertex 5-colourings of the regular dodecahedron.
//!
//! The crate enumerates every colouring of the 20 dodecahedron vertices
//! with colours `1..=5` in which each pentagonal face shows all five
//! colours, and classifies them: the action of colour permutations combined
//! with the antipodal swap, the two chiral compounds of five inscribed
//! tetrahedra, the zigzag walks joining each colour class, and the parity of
//! the cyclic colour order around each face.

pub mod chroma;
pub mod compound;
pub mod error;
pub mod io;
pub mod perm;
pub mod polytope;
pub mod symmetry;
pub mod verify;

pub use chroma::{Colouring, ColourClasses};
pub use compound::{Compound, CompoundLabel, Tetrahedron};
pub use error::*;
pub use perm::{Parity, Perm};
pub use polytope::{Dodecahedron, Handedness, Latitude, VertexId};
pub use symmetry::{ColourPerm, ColourSymmetry, Sign, VertexPermutation};
