use std::collections::BTreeSet;

use dodecolour::{Dodecahedron, Handedness, Latitude};

#[test]
fn unit_sphere_and_edge_length() {
    let m = Dodecahedron::build();
    for v in m.vertices() {
        assert!((v.position.norm() - 1.0).abs() < 1e-12);
    }
    let edge = m.distance(m.edges()[0][0], m.edges()[0][1]);
    for [a, b] in m.edges() {
        assert!((m.distance(*a, *b) - edge).abs() < 1e-12);
    }
    // Edge of a unit-circumradius dodecahedron: 4 / (√3 (1 + √5)).
    let expected = 4.0 / (3f64.sqrt() * (1.0 + 5f64.sqrt()));
    assert!((edge - expected).abs() < 1e-12);
}

#[test]
fn poles_lie_on_the_axis() {
    let m = Dodecahedron::build();
    assert!((m.position(0).z - 1.0).abs() < 1e-12);
    assert!((m.position(19).z + 1.0).abs() < 1e-12);
    for latitude in Latitude::ALL {
        let heights: Vec<f64> = m.circle(latitude).iter().map(|&v| m.position(v).z).collect();
        assert!(heights.iter().all(|h| (h - heights[0]).abs() < 1e-9));
    }
}

#[test]
fn distance_spectrum_by_direct_computation() {
    let m = Dodecahedron::build();
    let mut distances: Vec<f64> = Vec::new();
    for a in 0..20 {
        for b in a + 1..20 {
            distances.push((m.position(a) - m.position(b)).norm());
        }
    }
    assert_eq!(distances.len(), 190);
    distances.sort_by(f64::total_cmp);
    let mut shells: Vec<(f64, usize)> = Vec::new();
    for d in distances {
        match shells.last_mut() {
            Some((x, n)) if (d - *x).abs() < 1e-9 => *n += 1,
            _ => shells.push((d, 1)),
        }
    }
    let multiplicities: Vec<usize> = shells.iter().map(|s| s.1).collect();
    assert_eq!(multiplicities, [30, 60, 60, 30, 10]);
    assert!((shells[2].0 - (8.0f64 / 3.0).sqrt()).abs() < 1e-9);
    assert!((shells[4].0 - 2.0).abs() < 1e-12);
    let library = m.distance_spectrum();
    for (s, (d, n)) in library.iter().zip(&shells) {
        assert_eq!(s.multiplicity, *n);
        assert!((s.distance - d).abs() < 1e-9);
    }
}

#[test]
fn faces_wind_counterclockwise_from_outside() {
    let m = Dodecahedron::build();
    for face in m.faces() {
        let p: Vec<_> = face.iter().map(|&v| *m.position(v)).collect();
        let centroid = p.iter().sum::<nalgebra::Vector3<f64>>() / 5.0;
        let normal = (p[1] - p[0]).cross(&(p[2] - p[1]));
        assert!(normal.dot(&centroid) > 0.0);
    }
}

#[test]
fn left_and_right_turns_stay_on_a_face() {
    let m = Dodecahedron::build();
    for [a, b] in m.edges() {
        for (from, at) in [(*a, *b), (*b, *a)] {
            let left = m.turn(from, at, Handedness::Left);
            let right = m.turn(from, at, Handedness::Right);
            assert_ne!(left, right);
            assert_ne!(left, from);
            assert!(m.are_adjacent(at, left) && m.are_adjacent(at, right));
            // Turning left keeps the face on the left: from, at, left are
            // consecutive counterclockwise on some face.
            let ccw = m.faces().iter().any(|f| {
                (0..5).any(|i| f[i] == from && f[(i + 1) % 5] == at && f[(i + 2) % 5] == left)
            });
            assert!(ccw, "{from} -> {at} -> {left}");
        }
    }
}

#[test]
fn dual_icosahedron_pulls_back_faces() {
    let m = Dodecahedron::build();
    let ico = m.icosahedron();
    assert_eq!(ico.vertices.len(), 12);
    assert_eq!(ico.faces.len(), 20);
    let dodeca_faces: BTreeSet<Vec<usize>> = m
        .faces()
        .iter()
        .map(|f| {
            let mut f = f.to_vec();
            f.sort_unstable();
            f
        })
        .collect();
    for i in 0..ico.vertices.len() {
        let mut around: Vec<usize> = (0..ico.faces.len())
            .filter(|&t| ico.faces[t].contains(&i))
            .map(|t| m.dual_face_of(t).unwrap())
            .collect();
        around.sort_unstable();
        assert!(dodeca_faces.contains(&around), "icosahedron vertex {i}");
    }
    assert!(m.dual_face_of(20).is_err());
}

#[test]
fn opposite_faces_are_antipodal() {
    let m = Dodecahedron::build();
    for f in 0..12 {
        let g = m.opposite_face(f);
        let mut image: Vec<usize> = m.face(f).iter().map(|&v| m.antipode(v)).collect();
        let mut target = m.face(g).to_vec();
        image.sort_unstable();
        target.sort_unstable();
        assert_eq!(image, target);
    }
}
