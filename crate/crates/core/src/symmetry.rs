//! Symmetry groups as explicit permutation sets.
//!
//! The rotation group of the dodecahedron is generated from two rotations
//! given as orthogonal matrices and converted to vertex permutations by
//! nearest-vertex matching. The colour-side group is colour relabelling
//! combined with the antipodal colour swap. All groups here are small
//! enough to hold every element in a sorted vector.

use std::f64::consts::TAU;
use std::fmt;

use nalgebra::{Matrix3, Rotation3, Unit};
use serde::{Deserialize, Serialize};

use crate::compound::Compound;
use crate::error::SymmetryError;
use crate::perm::{all_permutations, closure, Parity, Perm};
use crate::polytope::{Dodecahedron, FaceId, VertexId, TOLERANCE, VERTEX_COUNT};

/// A bijection on the 20 vertex ids.
pub type VertexPermutation = Perm<VERTEX_COUNT>;

/// A permutation of the colours, stored on colour indices `0..5` (colour
/// `c` is index `c - 1`).
pub type ColourPerm = Perm<5>;

/// Sorted set of vertex permutations closed under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGroup {
    elements: Vec<VertexPermutation>,
}

impl VertexGroup {
    fn from_iter(elements: impl IntoIterator<Item = VertexPermutation>) -> Self {
        let mut elements: Vec<_> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        VertexGroup { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &VertexPermutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexPermutation> {
        self.elements.iter()
    }

    pub fn elements(&self) -> &[VertexPermutation] {
        &self.elements
    }
}

impl<'a> IntoIterator for &'a VertexGroup {
    type Item = &'a VertexPermutation;
    type IntoIter = std::slice::Iter<'a, VertexPermutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Converts an orthogonal map to the vertex permutation it induces.
///
/// Fails unless every vertex image lands within tolerance of a vertex and
/// the matching is a bijection.
pub fn permutation_from_matrix(
    model: &Dodecahedron,
    matrix: &Matrix3<f64>,
) -> Result<VertexPermutation, SymmetryError> {
    let mut images = Vec::with_capacity(VERTEX_COUNT);
    let mut hit = [false; VERTEX_COUNT];
    for v in 0..VERTEX_COUNT {
        let image = matrix * model.position(v);
        let w = (0..VERTEX_COUNT)
            .find(|&w| (model.position(w) - image).norm() <= TOLERANCE)
            .ok_or(SymmetryError::NoMatchingVertex(v))?;
        if hit[w] {
            return Err(SymmetryError::NotBijective(w));
        }
        hit[w] = true;
        images.push(w);
    }
    Ok(VertexPermutation::from_images(&images)?)
}

/// The unique linear map sending the north pole and its first two
/// neighbours to their images under `g`.
///
/// For a symmetry this is the orthogonal matrix realizing `g`; callers
/// should check that with [`realizes`].
pub fn matrix_of(model: &Dodecahedron, g: &VertexPermutation) -> Matrix3<f64> {
    let [a, b, _] = model.neighbours(0).expect("vertex 0 exists");
    let basis = [0, a, b];
    let source = Matrix3::from_columns(&basis.map(|v| *model.position(v)));
    let target = Matrix3::from_columns(&basis.map(|v| *model.position(g.apply(v))));
    let inverse = source
        .try_inverse()
        .expect("north pole and two neighbours are linearly independent");
    target * inverse
}

/// Whether `matrix` is orthogonal and sends every vertex `v` onto `g(v)`.
pub fn realizes(model: &Dodecahedron, g: &VertexPermutation, matrix: &Matrix3<f64>) -> bool {
    let orthogonal = (matrix.transpose() * matrix - Matrix3::identity()).norm() <= 1e-8;
    orthogonal
        && (0..VERTEX_COUNT)
            .all(|v| (matrix * model.position(v) - model.position(g.apply(v))).norm() <= 1e-8)
}

/// Determinant of the orthogonal matrix realizing `g`, rounded to `±1`.
pub fn determinant_sign(model: &Dodecahedron, g: &VertexPermutation) -> i8 {
    if matrix_of(model, g).determinant() > 0.0 {
        1
    } else {
        -1
    }
}

/// Rotation by `2π / order` about the axis through the centre of face `f`.
pub fn face_rotation(model: &Dodecahedron, f: FaceId) -> Result<VertexPermutation, SymmetryError> {
    let axis = Unit::new_normalize(model.face_normal(f));
    let r = Rotation3::from_axis_angle(&axis, TAU / 5.0);
    permutation_from_matrix(model, r.matrix())
}

/// Rotation by `2π / 3` about the axis through vertex `v`.
pub fn vertex_rotation(model: &Dodecahedron, v: VertexId) -> Result<VertexPermutation, SymmetryError> {
    let axis = Unit::new_normalize(*model.position(v));
    let r = Rotation3::from_axis_angle(&axis, TAU / 3.0);
    permutation_from_matrix(model, r.matrix())
}

/// Half-turn about the axis through the midpoint of the edge `a`-`b`.
pub fn edge_rotation(model: &Dodecahedron, a: VertexId, b: VertexId) -> Result<VertexPermutation, SymmetryError> {
    let axis = Unit::new_normalize(model.position(a) + model.position(b));
    let r = Rotation3::from_axis_angle(&axis, TAU / 2.0);
    permutation_from_matrix(model, r.matrix())
}

/// Closure of a set of vertex permutations.
pub fn generate_vertex_group(generators: &[VertexPermutation]) -> VertexGroup {
    VertexGroup::from_iter(closure(VertexPermutation::identity(), generators, |a, b| {
        a.compose(b)
    }))
}

/// The 60 rotations, generated by the 5-fold turn about face 0 and the
/// 3-fold turn about the north pole.
pub fn rotation_group(model: &Dodecahedron) -> VertexGroup {
    let generators = [
        face_rotation(model, 0).expect("5-fold face turn is a symmetry"),
        vertex_rotation(model, 0).expect("3-fold vertex turn is a symmetry"),
    ];
    let group = generate_vertex_group(&generators);
    for g in &group {
        assert_eq!(determinant_sign(model, g), 1, "rotation group contains a reflection");
    }
    group
}

/// The central inversion as a vertex permutation.
pub fn antipodal_permutation(model: &Dodecahedron) -> VertexPermutation {
    VertexPermutation::from_images(model.antipodes()).expect("antipode is a bijection")
}

/// All 120 symmetries: each rotation, with and without the central
/// inversion.
pub fn full_group(model: &Dodecahedron) -> VertexGroup {
    let rotations = rotation_group(model);
    let inversion = antipodal_permutation(model);
    VertexGroup::from_iter(
        rotations
            .iter()
            .flat_map(|r| [*r, inversion.compose(r)]),
    )
}

/// Whether `g` maps every face onto a face.
pub fn preserves_faces(model: &Dodecahedron, g: &VertexPermutation) -> bool {
    let sorted = |face: &[VertexId; 5]| {
        let mut f = *face;
        f.sort_unstable();
        f
    };
    let faces: Vec<[VertexId; 5]> = model.faces().iter().map(sorted).collect();
    model
        .faces()
        .iter()
        .all(|face| faces.contains(&sorted(&face.map(|v| g.apply(v)))))
}

/// The permutation of a compound's five tetrahedra induced by `g`.
///
/// Tetrahedron `i` of the compound is sent to tetrahedron `result(i)`.
pub fn tetra_action(g: &VertexPermutation, compound: &Compound) -> Result<Perm<5>, SymmetryError> {
    let tetrahedra = compound.tetrahedra();
    let mut images = Vec::with_capacity(5);
    for (i, t) in tetrahedra.iter().enumerate() {
        let mut image = t.members().map(|v| g.apply(v));
        image.sort_unstable();
        let j = tetrahedra
            .iter()
            .position(|u| u.members() == image)
            .ok_or(SymmetryError::DoesNotStabilize(i))?;
        images.push(j);
    }
    Ok(Perm::from_images(&images)?)
}

/// The optional antipodal swap component of a colour symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// An element of S5 × {1, −1} acting on colourings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColourSymmetry {
    pub colour_perm: ColourPerm,
    pub sign: Sign,
}

impl ColourSymmetry {
    pub fn new(colour_perm: ColourPerm, sign: Sign) -> Self {
        ColourSymmetry { colour_perm, sign }
    }

    pub fn identity() -> Self {
        Self::new(ColourPerm::identity(), Sign::Plus)
    }

    /// `(id, −1)`: swap the colours of antipodal vertices.
    pub fn antipodal() -> Self {
        Self::new(ColourPerm::identity(), Sign::Minus)
    }

    pub fn relabel(colour_perm: ColourPerm) -> Self {
        Self::new(colour_perm, Sign::Plus)
    }

    /// All 240 elements, sorted.
    pub fn all() -> Vec<ColourSymmetry> {
        let mut out: Vec<_> = all_permutations::<5>()
            .into_iter()
            .flat_map(|p| [Self::new(p, Sign::Plus), Self::new(p, Sign::Minus)])
            .collect();
        out.sort_unstable();
        out
    }

    /// Image of colour `c` (in `1..=5`) under the relabelling.
    #[inline]
    pub fn map_colour(&self, c: u8) -> u8 {
        self.colour_perm.apply(c as usize - 1) as u8 + 1
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.colour_perm.compose(&other.colour_perm), self.sign.times(other.sign))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.colour_perm.inverse(), self.sign)
    }

    pub fn is_identity(&self) -> bool {
        self.sign == Sign::Plus && self.colour_perm.is_identity()
    }

    pub fn parity(&self) -> Parity {
        self.colour_perm.parity()
    }
}

impl fmt::Display for ColourSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {:+}", colour_cycles(&self.colour_perm), self.sign.value())
    }
}

/// Cycle notation on colours `1..=5`, `()` for the identity.
pub fn colour_cycles(p: &ColourPerm) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect()
}

/// Closure of `generators` in S5 × {1, −1}, sorted.
pub fn generate_subgroup(generators: &[ColourSymmetry]) -> Vec<ColourSymmetry> {
    closure(ColourSymmetry::identity(), generators, |a, b| a.compose(b))
        .into_iter()
        .collect()
}

/// Subgroups with a fixed name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSubgroup {
    Trivial,
    /// Colour permutations, sign `+1`.
    S5,
    /// Even colour permutations, sign `+1`.
    A5,
    /// The whole group.
    S5xC2,
    A5xC2,
    /// `{(id, ±1)}`.
    C2,
}

impl NamedSubgroup {
    pub const ALL: [NamedSubgroup; 6] = [
        NamedSubgroup::Trivial,
        NamedSubgroup::S5,
        NamedSubgroup::A5,
        NamedSubgroup::S5xC2,
        NamedSubgroup::A5xC2,
        NamedSubgroup::C2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSubgroup::Trivial => "trivial",
            NamedSubgroup::S5 => "S5",
            NamedSubgroup::A5 => "A5",
            NamedSubgroup::S5xC2 => "S5xC2",
            NamedSubgroup::A5xC2 => "A5xC2",
            NamedSubgroup::C2 => "C2",
        }
    }

    pub fn generators(self) -> Vec<ColourSymmetry> {
        let five_cycle = ColourPerm::from_cycles(&[vec![0, 1, 2, 3, 4]]).expect("valid cycle");
        let transposition = ColourPerm::from_cycles(&[vec![0, 1]]).expect("valid cycle");
        let three_cycle = ColourPerm::from_cycles(&[vec![0, 1, 2]]).expect("valid cycle");
        let s5 = vec![
            ColourSymmetry::relabel(five_cycle),
            ColourSymmetry::relabel(transposition),
        ];
        let a5 = vec![
            ColourSymmetry::relabel(five_cycle),
            ColourSymmetry::relabel(three_cycle),
        ];
        match self {
            NamedSubgroup::Trivial => vec![],
            NamedSubgroup::S5 => s5,
            NamedSubgroup::A5 => a5,
            NamedSubgroup::S5xC2 => [s5, vec![ColourSymmetry::antipodal()]].concat(),
            NamedSubgroup::A5xC2 => [a5, vec![ColourSymmetry::antipodal()]].concat(),
            NamedSubgroup::C2 => vec![ColourSymmetry::antipodal()],
        }
    }

    pub fn elements(self) -> Vec<ColourSymmetry> {
        generate_subgroup(&self.generators())
    }
}

impl std::str::FromStr for NamedSubgroup {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedSubgroup::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or(())
    }
}
