//! Zigzag walks, cyclic colour orders around faces, and the antipodal
//! colour rule.

use std::collections::BTreeSet;

use serde::Serialize;

use super::Colouring;
use crate::perm::{Parity, Perm};
use crate::polytope::{Dodecahedron, FaceId, Handedness, VertexId};

/// `v`, then along the edge to `first`, turn `hand`, then turn the other
/// way. The last entry is the checkpoint reached.
pub fn zigzag_path(model: &Dodecahedron, v: VertexId, first: VertexId, hand: Handedness) -> [VertexId; 4] {
    let second = model.turn(v, first, hand);
    let third = model.turn(first, second, hand.opposite());
    [v, first, second, third]
}

/// Checkpoints reachable from `v` by repeating the three-step zigzag
/// (any edge, turn `hand`, turn the other way) from every checkpoint found,
/// until no new checkpoint appears. Sorted.
pub fn zigzag_trace(model: &Dodecahedron, v: VertexId, hand: Handedness) -> Vec<VertexId> {
    let mut seen = BTreeSet::from([v]);
    let mut frontier = vec![v];
    while let Some(x) = frontier.pop() {
        for first in model.neighbours(x).expect("checkpoints are vertices") {
            let end = zigzag_path(model, x, first, hand)[3];
            if seen.insert(end) {
                frontier.push(end);
            }
        }
    }
    seen.into_iter().collect()
}

/// Handednesses whose zigzag trace from `v` is exactly `v`'s colour class.
pub fn vertex_handednesses(model: &Dodecahedron, c: &Colouring, v: VertexId) -> Vec<Handedness> {
    let classes = c.classes();
    let class = classes.of(c.colour(v));
    [Handedness::Left, Handedness::Right]
        .into_iter()
        .filter(|&h| zigzag_trace(model, v, h) == class)
        .collect()
}

/// The single handedness that reproduces every colour class from every
/// vertex, if there is one.
pub fn working_handedness(model: &Dodecahedron, c: &Colouring) -> Option<Handedness> {
    let mut found = None;
    for v in 0..model.vertices().len() {
        match vertex_handednesses(model, c, v).as_slice() {
            [h] if found.is_none_or(|f| f == *h) => found = Some(*h),
            _ => return None,
        }
    }
    found
}

/// Colours of one face read counterclockwise from outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCycle {
    pub face: FaceId,
    /// Rotated to start at colour 1.
    pub cyclic_order: [u8; 5],
    /// Parity of the permutation `k ↦ cyclic_order[k - 1]`.
    pub parity: Parity,
}

fn normalized_cycle(colours: [u8; 5]) -> [u8; 5] {
    let start = colours.iter().position(|&c| c == 1).unwrap_or(0);
    std::array::from_fn(|k| colours[(start + k) % 5])
}

/// Cyclic colour order and its parity for each of the 12 faces.
///
/// Faces that are not rainbow get the odd/even parity of nothing in
/// particular; callers should only pass valid colourings.
pub fn face_parity_signature(model: &Dodecahedron, c: &Colouring) -> Vec<FaceCycle> {
    model
        .faces()
        .iter()
        .enumerate()
        .map(|(face, vertices)| {
            let cyclic_order = normalized_cycle(vertices.map(|v| c.colour(v)));
            let images: Vec<usize> = cyclic_order.iter().map(|&k| k as usize - 1).collect();
            let parity = Perm::<5>::from_images(&images)
                .map(|p| p.parity())
                .unwrap_or(Parity::Even);
            FaceCycle {
                face,
                cyclic_order,
                parity,
            }
        })
        .collect()
}

/// The parity shared by all faces, or `None` if they disagree.
pub fn shared_parity(signature: &[FaceCycle]) -> Option<Parity> {
    let first = signature.first()?.parity;
    signature.iter().all(|f| f.parity == first).then_some(first)
}

/// A vertex whose antipode is not coloured with the one colour missing
/// from the vertex and its three neighbours.
pub fn antipodal_rule_violation(model: &Dodecahedron, c: &Colouring) -> Option<VertexId> {
    (0..model.vertices().len()).find(|&v| {
        let mut used = 1u8 << (c.colour(v) - 1);
        for w in model.neighbours(v).expect("vertex in range") {
            used |= 1 << (c.colour(w) - 1);
        }
        let missing = !used & 0b1_1111;
        missing.count_ones() != 1 || missing != 1 << (c.colour(model.antipode(v)) - 1)
    })
}
