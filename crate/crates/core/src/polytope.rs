//! The regular dodecahedron inscribed in the unit sphere, one vertex at the
//! north pole, with a canonical vertex labelling.
//!
//! Geometry is only used during construction. Adjacency, faces, antipodes
//! and the dual correspondence are derived once from coordinates and then
//! kept as integer tables, so everything downstream is exact.
//!
//! Labelling: vertex 0 is the north pole, then the latitude circles
//! `C1`, `C2`, `C3`, `C4` from north to south, and vertex 19 is the south
//! pole. Within a circle, vertices are ordered by azimuth in `[0, 2π)`
//! measured counterclockwise (seen from above) from the `+x` meridian.

use std::f64::consts::TAU;

use nalgebra::{Rotation3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::ModelError;

pub const VERTEX_COUNT: usize = 20;
pub const EDGE_COUNT: usize = 30;
pub const FACE_COUNT: usize = 12;

/// Absolute tolerance for every coordinate and distance comparison.
pub const TOLERANCE: f64 = 1e-9;

pub type VertexId = usize;
pub type FaceId = usize;
pub type Point = Vector3<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Latitude {
    NorthPole,
    C1,
    C2,
    C3,
    C4,
    SouthPole,
}

impl Latitude {
    pub const ALL: [Latitude; 6] = [
        Latitude::NorthPole,
        Latitude::C1,
        Latitude::C2,
        Latitude::C3,
        Latitude::C4,
        Latitude::SouthPole,
    ];

    /// Number of vertices on this circle.
    pub fn size(self) -> usize {
        match self {
            Latitude::NorthPole | Latitude::SouthPole => 1,
            Latitude::C1 | Latitude::C4 => 3,
            Latitude::C2 | Latitude::C3 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Latitude::NorthPole => "north pole",
            Latitude::C1 => "C1",
            Latitude::C2 => "C2",
            Latitude::C3 => "C3",
            Latitude::C4 => "C4",
            Latitude::SouthPole => "south pole",
        }
    }
}

/// Which way to turn when arriving at a vertex of a trivalent polyhedron,
/// as seen from outside the sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Left,
    Right,
}

impl Handedness {
    pub fn opposite(self) -> Self {
        match self {
            Handedness::Left => Handedness::Right,
            Handedness::Right => Handedness::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: VertexId,
    pub position: Point,
    pub latitude: Latitude,
}

/// One shell of the pairwise distance distribution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistanceShell {
    pub distance: f64,
    pub multiplicity: usize,
}

/// The dual icosahedron: vertices are the (normalized) face centres of the
/// dodecahedron, indexed by dodecahedron face id.
#[derive(Clone, Debug, PartialEq)]
pub struct Icosahedron {
    pub vertices: Vec<Point>,
    /// Triangles as sorted triples of icosahedron vertex ids, sorted.
    pub faces: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dodecahedron {
    vertices: Vec<Vertex>,
    /// Each face starts at its smallest vertex id and runs counterclockwise
    /// as seen from outside.
    faces: Vec<[VertexId; 5]>,
    edges: Vec<[VertexId; 2]>,
    adjacency: Vec<[VertexId; 3]>,
    vertex_faces: Vec<[FaceId; 3]>,
    antipode: Vec<VertexId>,
    icosahedron: Icosahedron,
    dual_faces: Vec<VertexId>,
}

impl Dodecahedron {
    /// Builds the canonical model.
    ///
    /// Panics if the derived data fails any structural check; a partially
    /// consistent model is never returned.
    pub fn build() -> Self {
        match Self::try_build() {
            Ok(model) => model,
            Err(e) => panic!("dodecahedron construction failed: {e}"),
        }
    }

    pub fn try_build() -> Result<Self, ModelError> {
        let positions = canonical_positions();
        let vertices = label_vertices(&positions)?;
        let points: Vec<Point> = vertices.iter().map(|v| v.position).collect();

        let adjacency = nearest_neighbours(&points)?;
        let mut edges = Vec::with_capacity(EDGE_COUNT);
        for (v, nbrs) in adjacency.iter().enumerate() {
            for &w in nbrs {
                if v < w {
                    edges.push([v, w]);
                }
            }
        }

        let faces = trace_faces(&points, &adjacency)?;
        let mut vertex_faces: Vec<Vec<FaceId>> = vec![Vec::new(); VERTEX_COUNT];
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[v].push(f);
            }
        }
        let vertex_faces = vertex_faces
            .into_iter()
            .enumerate()
            .map(|(v, fs)| {
                <[FaceId; 3]>::try_from(fs).map_err(|fs| {
                    ModelError::Inconsistent(format!("vertex {v} lies on {} faces", fs.len()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        let antipode = points
            .iter()
            .map(|p| nearest_point(&points, &-p))
            .collect::<Result<Vec<_>, _>>()?;

        let icosahedron = dual_icosahedron(&points, &faces)?;
        let dual_faces = icosahedron
            .faces
            .iter()
            .map(|tri| {
                let centre: Point = tri.iter().map(|&i| icosahedron.vertices[i]).sum();
                nearest_point(&points, &centre.normalize())
            })
            .collect::<Result<Vec<_>, _>>()?;

        let model = Dodecahedron {
            vertices,
            faces,
            edges,
            adjacency,
            vertex_faces,
            antipode,
            icosahedron,
            dual_faces,
        };
        model.check_invariants()?;
        Ok(model)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn position(&self, v: VertexId) -> &Point {
        &self.vertices[v].position
    }

    pub fn latitude(&self, v: VertexId) -> Latitude {
        self.vertices[v].latitude
    }

    /// Vertex ids on a latitude circle, in azimuth order.
    pub fn circle(&self, latitude: Latitude) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| v.latitude == latitude)
            .map(|v| v.id)
            .collect()
    }

    pub fn faces(&self) -> &[[VertexId; 5]] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &[VertexId; 5] {
        &self.faces[f]
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    /// The three faces containing `v`, ascending.
    pub fn faces_of(&self, v: VertexId) -> &[FaceId; 3] {
        &self.vertex_faces[v]
    }

    pub fn antipode(&self, v: VertexId) -> VertexId {
        self.antipode[v]
    }

    pub fn antipodes(&self) -> &[VertexId] {
        &self.antipode
    }

    /// The three neighbours of `v`, ascending.
    pub fn neighbours(&self, v: VertexId) -> Result<[VertexId; 3], ModelError> {
        self.adjacency
            .get(v)
            .copied()
            .ok_or(ModelError::VertexOutOfRange(v))
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency[a].contains(&b)
    }

    /// Whether `a` and `b` lie on a common face.
    pub fn share_face(&self, a: VertexId, b: VertexId) -> bool {
        self.vertex_faces[a]
            .iter()
            .any(|f| self.vertex_faces[b].contains(f))
    }

    pub fn distance(&self, a: VertexId, b: VertexId) -> f64 {
        (self.position(a) - self.position(b)).norm()
    }

    /// Face whose vertices are the antipodes of `f`'s vertices.
    pub fn opposite_face(&self, f: FaceId) -> FaceId {
        let mut target: Vec<VertexId> = self.faces[f].iter().map(|&v| self.antipode[v]).collect();
        target.sort_unstable();
        self.faces
            .iter()
            .position(|g| {
                let mut g = g.to_vec();
                g.sort_unstable();
                g == target
            })
            .expect("antipodal image of a face is a face")
    }

    /// Unit vector through the centre of face `f`.
    pub fn face_normal(&self, f: FaceId) -> Point {
        let sum: Point = self.faces[f].iter().map(|&v| self.position(v)).sum();
        sum.normalize()
    }

    /// Neighbour reached by arriving at `at` from `from` and turning to the
    /// given side. `from` must be adjacent to `at`.
    pub fn turn(&self, from: VertexId, at: VertexId, hand: Handedness) -> VertexId {
        turn_at(|v| self.vertices[v].position, &self.adjacency[at], from, at, hand)
    }

    /// All distinct pairwise distances with their multiplicities over
    /// unordered pairs, ascending. Values within [`TOLERANCE`] are merged.
    pub fn distance_spectrum(&self) -> Vec<DistanceShell> {
        let mut distances = Vec::with_capacity(VERTEX_COUNT * (VERTEX_COUNT - 1) / 2);
        for a in 0..VERTEX_COUNT {
            for b in a + 1..VERTEX_COUNT {
                distances.push(self.distance(a, b));
            }
        }
        distances.sort_by(f64::total_cmp);
        let mut shells: Vec<DistanceShell> = Vec::new();
        for d in distances {
            match shells.last_mut() {
                Some(shell) if (d - shell.distance).abs() <= TOLERANCE => shell.multiplicity += 1,
                _ => shells.push(DistanceShell {
                    distance: d,
                    multiplicity: 1,
                }),
            }
        }
        shells
    }

    pub fn icosahedron(&self) -> &Icosahedron {
        &self.icosahedron
    }

    /// Dodecahedron vertex dual to icosahedron face `icosa_face`.
    pub fn dual_face_of(&self, icosa_face: usize) -> Result<VertexId, ModelError> {
        self.dual_faces
            .get(icosa_face)
            .copied()
            .ok_or(ModelError::DualFaceOutOfRange(icosa_face))
    }

    /// Re-checks every structural invariant of the model.
    pub fn check_invariants(&self) -> Result<(), ModelError> {
        let fail = |msg: String| Err(ModelError::Inconsistent(msg));

        if self.vertices.len() != VERTEX_COUNT
            || self.edges.len() != EDGE_COUNT
            || self.faces.len() != FACE_COUNT
        {
            return fail(format!(
                "counts V={} E={} F={}",
                self.vertices.len(),
                self.edges.len(),
                self.faces.len()
            ));
        }
        for v in &self.vertices {
            if (v.position.norm() - 1.0).abs() > TOLERANCE {
                return fail(format!("vertex {} is off the unit sphere", v.id));
            }
        }
        if (self.position(0) - Point::z()).norm() > TOLERANCE {
            return fail("vertex 0 is not the north pole".into());
        }
        for lat in Latitude::ALL {
            let n = self.circle(lat).len();
            if n != lat.size() {
                return fail(format!("{} has {n} vertices", lat.name()));
            }
        }
        for v in 0..VERTEX_COUNT {
            let a = self.antipode[v];
            if a == v || self.antipode[a] != v {
                return fail(format!("antipode is not a fixed-point-free involution at {v}"));
            }
            if (self.position(a) + self.position(v)).norm() > TOLERANCE {
                return fail(format!("antipode of {v} is not its negation"));
            }
        }
        for v in 0..VERTEX_COUNT {
            for &w in &self.adjacency[v] {
                if w == v || !self.adjacency[w].contains(&v) {
                    return fail(format!("adjacency is not symmetric at {v}-{w}"));
                }
            }
        }
        for (f, face) in self.faces.iter().enumerate() {
            for k in 0..5 {
                if !self.are_adjacent(face[k], face[(k + 1) % 5]) {
                    return fail(format!("face {f} is not a cycle of edges"));
                }
            }
            let p = |k: usize| self.position(face[k]);
            let winding = (p(1) - p(0)).cross(&(p(2) - p(1))).dot(&self.face_normal(f));
            if winding <= 0.0 {
                return fail(format!("face {f} is not counterclockwise from outside"));
            }
        }
        // Each edge appears on two faces, once in each direction.
        for &[a, b] in &self.edges {
            let forward = self.directed_edge_count(a, b);
            let backward = self.directed_edge_count(b, a);
            if forward != 1 || backward != 1 {
                return fail(format!("edge {a}-{b} traversed {forward}/{backward} times"));
            }
        }
        let mut image = self.dual_faces.clone();
        image.sort_unstable();
        if image != (0..VERTEX_COUNT).collect::<Vec<_>>() {
            return fail("dual face map is not a bijection".into());
        }
        Ok(())
    }

    fn directed_edge_count(&self, a: VertexId, b: VertexId) -> usize {
        self.faces
            .iter()
            .flat_map(|face| (0..5).map(move |k| (face[k], face[(k + 1) % 5])))
            .filter(|&(x, y)| x == a && y == b)
            .count()
    }
}

impl Default for Dodecahedron {
    fn default() -> Self {
        Self::build()
    }
}

/// The twenty points `(±1,±1,±1)`, `(0,±1/φ,±φ)`, `(±1/φ,±φ,0)`,
/// `(±φ,0,±1/φ)` scaled onto the unit sphere and rotated so that
/// `(1,1,1)/√3` lands on `(0,0,1)`.
fn canonical_positions() -> Vec<Point> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let inv = 1.0 / phi;
    let signs = [1.0, -1.0];
    let mut raw = Vec::with_capacity(VERTEX_COUNT);
    for &sx in &signs {
        for &sy in &signs {
            for &sz in &signs {
                raw.push(Point::new(sx, sy, sz));
            }
        }
    }
    for &s1 in &signs {
        for &s2 in &signs {
            raw.push(Point::new(0.0, s1 * inv, s2 * phi));
            raw.push(Point::new(s1 * inv, s2 * phi, 0.0));
            raw.push(Point::new(s1 * phi, 0.0, s2 * inv));
        }
    }
    let scale = 3f64.sqrt();
    let from = Point::new(1.0, 1.0, 1.0) / scale;
    let rotation = Rotation3::rotation_between(&from, &Point::z())
        .expect("(1,1,1) is not antiparallel to z");
    raw.into_iter().map(|p| rotation * (p / scale)).collect()
}

fn azimuth(p: &Point) -> f64 {
    let a = p.y.atan2(p.x);
    let a = if a < 0.0 { a + TAU } else { a };
    if a >= TAU - TOLERANCE {
        a - TAU
    } else {
        a
    }
}

fn label_vertices(positions: &[Point]) -> Result<Vec<Vertex>, ModelError> {
    let mut order: Vec<usize> = (0..positions.len()).collect();
    order.sort_by(|&a, &b| positions[b].z.total_cmp(&positions[a].z));

    let mut bands: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match bands.last_mut() {
            Some(band) if (positions[band[0]].z - positions[i].z).abs() <= TOLERANCE => {
                band.push(i)
            }
            _ => bands.push(vec![i]),
        }
    }
    if bands.len() != Latitude::ALL.len() {
        return Err(ModelError::Inconsistent(format!(
            "expected 6 latitude circles, found {}",
            bands.len()
        )));
    }

    let mut vertices = Vec::with_capacity(VERTEX_COUNT);
    for (band, lat) in bands.iter_mut().zip(Latitude::ALL) {
        if band.len() != lat.size() {
            return Err(ModelError::Inconsistent(format!(
                "{} has {} vertices",
                lat.name(),
                band.len()
            )));
        }
        band.sort_by(|&a, &b| azimuth(&positions[a]).total_cmp(&azimuth(&positions[b])));
        for &i in band.iter() {
            vertices.push(Vertex {
                id: vertices.len(),
                position: positions[i],
                latitude: lat,
            });
        }
    }
    Ok(vertices)
}

fn nearest_neighbours(points: &[Point]) -> Result<Vec<[VertexId; 3]>, ModelError> {
    let mut edge_length = f64::INFINITY;
    for (a, p) in points.iter().enumerate() {
        for q in &points[a + 1..] {
            edge_length = edge_length.min((p - q).norm());
        }
    }
    points
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let nbrs: Vec<VertexId> = points
                .iter()
                .enumerate()
                .filter(|&(w, q)| w != v && ((p - q).norm() - edge_length).abs() <= TOLERANCE)
                .map(|(w, _)| w)
                .collect();
            <[VertexId; 3]>::try_from(nbrs).map_err(|n| {
                ModelError::Inconsistent(format!("vertex {v} has degree {}", n.len()))
            })
        })
        .collect()
}

fn turn_at(
    position: impl Fn(VertexId) -> Point,
    candidates: &[VertexId; 3],
    from: VertexId,
    at: VertexId,
    hand: Handedness,
) -> VertexId {
    let here = position(at);
    let heading = here - position(from);
    // Outward normal × heading points to the left as seen from outside.
    let left = here.cross(&heading);
    let mut best = None;
    for &w in candidates.iter().filter(|&&w| w != from) {
        let side = (position(w) - here).dot(&left);
        let wanted = match hand {
            Handedness::Left => side > 0.0,
            Handedness::Right => side < 0.0,
        };
        if wanted {
            best = Some(w);
        }
    }
    best.unwrap_or_else(|| panic!("no {hand:?} turn at {at} coming from {from}"))
}

/// Traces every face by always turning left, which keeps the face on the
/// left and so yields counterclockwise boundaries.
fn trace_faces(points: &[Point], adjacency: &[[VertexId; 3]]) -> Result<Vec<[VertexId; 5]>, ModelError> {
    let mut faces: Vec<[VertexId; 5]> = Vec::new();
    for (a, nbrs) in adjacency.iter().enumerate() {
        for &b in nbrs {
            let mut cycle = vec![a, b];
            loop {
                let n = cycle.len();
                let next = turn_at(
                    |v| points[v],
                    &adjacency[cycle[n - 1]],
                    cycle[n - 2],
                    cycle[n - 1],
                    Handedness::Left,
                );
                if next == a {
                    break;
                }
                cycle.push(next);
                if cycle.len() > 5 {
                    return Err(ModelError::Inconsistent(format!(
                        "left-turn walk from {a}->{b} does not close within 5 steps"
                    )));
                }
            }
            let face = <[VertexId; 5]>::try_from(canonical_rotation(&cycle)).map_err(|c| {
                ModelError::Inconsistent(format!("face of length {} traced", c.len()))
            })?;
            if !faces.contains(&face) {
                faces.push(face);
            }
        }
    }
    faces.sort_unstable();
    Ok(faces)
}

fn canonical_rotation(cycle: &[VertexId]) -> Vec<VertexId> {
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle[start..].iter().chain(&cycle[..start]).copied().collect()
}

fn nearest_point(points: &[Point], target: &Point) -> Result<VertexId, ModelError> {
    points
        .iter()
        .position(|p| (p - target).norm() <= TOLERANCE)
        .ok_or_else(|| ModelError::Inconsistent(format!("no vertex at {target:?}")))
}

fn dual_icosahedron(points: &[Point], faces: &[[VertexId; 5]]) -> Result<Icosahedron, ModelError> {
    let vertices: Vec<Point> = faces
        .iter()
        .map(|face| face.iter().map(|&v| points[v]).sum::<Point>().normalize())
        .collect();
    let n = vertices.len();
    let mut edge = f64::INFINITY;
    for a in 0..n {
        for b in a + 1..n {
            edge = edge.min((vertices[a] - vertices[b]).norm());
        }
    }
    let close = |a: usize, b: usize| ((vertices[a] - vertices[b]).norm() - edge).abs() <= TOLERANCE;
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !close(a, b) {
                continue;
            }
            for c in b + 1..n {
                if close(a, c) && close(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.len() != VERTEX_COUNT {
        return Err(ModelError::Inconsistent(format!(
            "dual has {} triangles",
            triangles.len()
        )));
    }
    Ok(Icosahedron {
        vertices,
        faces: triangles,
    })
}
