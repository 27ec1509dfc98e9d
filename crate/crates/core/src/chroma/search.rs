use super::{Colouring, COLOUR_COUNT};
use crate::polytope::{Dodecahedron, VERTEX_COUNT};

const ALL_COLOURS: u8 = (1 << COLOUR_COUNT) - 1;

/// Every face-rainbow colouring, in lexicographic order.
///
/// Plain depth-first search over vertex ids with forward checking: after a
/// vertex is coloured, that colour is struck from the domains of the
/// uncoloured vertices sharing a face with it, and the branch is cut as soon
/// as a domain empties. No symmetry is assumed.
pub fn enumerate_all(model: &Dodecahedron) -> Vec<Colouring> {
    let mut out = Vec::new();
    let mut colours = [0u8; VERTEX_COUNT];
    extend(model, 0, &mut colours, [ALL_COLOURS; VERTEX_COUNT], &mut out);
    out.sort_unstable();
    out
}

fn extend(
    model: &Dodecahedron,
    v: usize,
    colours: &mut [u8; VERTEX_COUNT],
    domains: [u8; VERTEX_COUNT],
    out: &mut Vec<Colouring>,
) {
    if v == VERTEX_COUNT {
        out.push(Colouring { colours: *colours });
        return;
    }
    for colour in 1..=COLOUR_COUNT {
        let bit = 1 << (colour - 1);
        if domains[v] & bit == 0 {
            continue;
        }
        let mut next = domains;
        next[v] = bit;
        let mut alive = true;
        'faces: for &f in model.faces_of(v) {
            // Vertices with a larger id are exactly the uncoloured ones.
            for &w in model.face(f).iter().filter(|&&w| w > v) {
                next[w] &= !bit;
                if next[w] == 0 {
                    alive = false;
                    break 'faces;
                }
            }
        }
        if alive {
            colours[v] = colour;
            extend(model, v + 1, colours, next, out);
        }
    }
    colours[v] = 0;
}
