//! The full invariant suite, as a list of named checks with measured
//! values. The command-line `verify` command prints this.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::chroma::{
    self, antipodal_rule_violation, enumerate_all, face_parity_signature,
    propagate_proof_enumeration, seed_colourings, shared_parity, stabilizer, vertex_handednesses,
    working_handedness, Colouring,
};
use crate::compound::{classify_colouring, compounds, inscribed_tetrahedra, spread_subsets, CompoundLabel};
use crate::perm::Parity;
use crate::polytope::{Dodecahedron, Handedness, Latitude, TOLERANCE, VERTEX_COUNT};
use crate::symmetry::{
    antipodal_permutation, full_group, rotation_group, tetra_action, ColourPerm, ColourSymmetry,
    NamedSubgroup, VertexGroup, VertexPermutation,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub measured: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, passed: bool, measured: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            measured: measured.into(),
        });
    }
}

/// Orbit of `item` under `group`, with `act` computing images.
fn orbit<T: Ord + Clone>(group: &VertexGroup, item: T, act: impl Fn(&VertexPermutation, &T) -> T) -> BTreeSet<T> {
    group.iter().map(|g| act(g, &item)).collect()
}

fn sorted_face(g: &VertexPermutation, face: &[usize; 5]) -> [usize; 5] {
    let mut f = face.map(|v| g.apply(v));
    f.sort_unstable();
    f
}

fn sorted_edge(g: &VertexPermutation, e: &[usize; 2]) -> [usize; 2] {
    let mut e = e.map(|v| g.apply(v));
    e.sort_unstable();
    e
}

/// Runs every check against `model`.
pub fn run_all(model: &Dodecahedron) -> VerificationReport {
    let mut r = Recorder { checks: Vec::new() };
    polytope_checks(model, &mut r);
    symmetry_checks(model, &mut r);
    chroma_checks(model, &mut r);
    VerificationReport { checks: r.checks }
}

fn polytope_checks(model: &Dodecahedron, r: &mut Recorder) {
    let (v, e, f) = (model.vertices().len(), model.edges().len(), model.faces().len());
    let structural = model.check_invariants();
    r.check(
        "exactly 20 vertices, 30 edges, 12 faces; every vertex has degree 3; every face is a 5-cycle in the edge set",
        structural.is_ok() && (v, e, f) == (20, 30, 12),
        match &structural {
            Ok(()) => format!("V={v} E={e} F={f}"),
            Err(err) => err.to_string(),
        },
    );
    let euler = v as i64 - e as i64 + f as i64;
    r.check("Euler check: V − E + F = 2", euler == 2, format!("{euler}"));

    let sizes: Vec<usize> = Latitude::ALL.iter().map(|&l| model.circle(l).len()).collect();
    r.check(
        "latitude-class sizes are 1, 3, 6, 6, 3, 1",
        sizes == [1, 3, 6, 6, 3, 1],
        format!("{sizes:?}"),
    );
    let worst = (0..VERTEX_COUNT)
        .map(|v| (model.distance(v, model.antipode(v)) - 2.0).abs())
        .fold(0.0, f64::max);
    r.check(
        "for every vertex v, the distance from v to its antipode is 2",
        worst <= TOLERANCE,
        format!("max deviation {worst:.3e}"),
    );

    let spectrum = model.distance_spectrum();
    let total: usize = spectrum.iter().map(|s| s.multiplicity).sum();
    let third = spectrum.get(2).map(|s| s.distance).unwrap_or(f64::NAN);
    let expected = (8.0f64 / 3.0).sqrt();
    r.check(
        "distance spectrum: 190 pairs, 30 at the edge length, third-smallest = √(8/3)",
        total == 190 && spectrum[0].multiplicity == 30 && (third - expected).abs() <= TOLERANCE,
        format!("pairs {total}, third-smallest {third:.9}"),
    );

    let ico = model.icosahedron();
    let mut preserved = true;
    for a in 0..ico.faces.len() {
        for b in a + 1..ico.faces.len() {
            let shared = ico.faces[a].iter().filter(|x| ico.faces[b].contains(x)).count();
            let (va, vb) = (model.dual_face_of(a).unwrap(), model.dual_face_of(b).unwrap());
            preserved &= (shared == 2) == model.are_adjacent(va, vb);
        }
    }
    r.check(
        "dual map: icosahedron faces share an edge iff their dodecahedron vertices are adjacent",
        preserved,
        format!("{} faces checked pairwise", ico.faces.len()),
    );
}

fn symmetry_checks(model: &Dodecahedron, r: &mut Recorder) {
    let rotations = rotation_group(model);
    let full = full_group(model);
    r.check("|I| = 60", rotations.len() == 60, rotations.len().to_string());
    r.check("|I_h| = 120", full.len() == 120, full.len().to_string());

    let vertex_orbit = orbit(&rotations, 0usize, |g, v| g.apply(*v));
    let edge_orbit = orbit(&rotations, model.edges()[0], sorted_edge);
    let face_orbit = orbit(&rotations, sorted_face(&VertexPermutation::identity(), model.face(0)), sorted_face);
    r.check(
        "rotation_group acts transitively on the 20 vertices, on the 30 edges, and on the 12 faces",
        vertex_orbit.len() == 20 && edge_orbit.len() == 30 && face_orbit.len() == 12,
        format!("orbit sizes {} / {} / {}", vertex_orbit.len(), edge_orbit.len(), face_orbit.len()),
    );

    let vertex_stab = rotations.iter().filter(|g| g.apply(0) == 0).count();
    let face0 = sorted_face(&VertexPermutation::identity(), model.face(0));
    let face_stab = rotations.iter().filter(|g| sorted_face(g, model.face(0)) == face0).count();
    let edge0 = model.edges()[0];
    let edge_stab = rotations.iter().filter(|g| sorted_edge(g, &edge0) == edge0).count();
    r.check(
        "stabilizer sizes under rotation_group: vertex 3, face 5, edge 2",
        (vertex_stab, face_stab, edge_stab) == (3, 5, 2),
        format!("{vertex_stab} / {face_stab} / {edge_stab}"),
    );

    let inversion = antipodal_permutation(model);
    let commutes = full
        .iter()
        .all(|g| g.compose(&inversion) == inversion.compose(g));
    r.check(
        "every element of full_group preserves the antipode map",
        commutes,
        format!("{} elements", full.len()),
    );

    match compounds(model) {
        Ok(pair) => {
            for compound in [&pair.0, &pair.1] {
                let images: Result<Vec<ColourPerm>, _> =
                    rotations.iter().map(|g| tetra_action(g, compound)).collect();
                let (ok, measured) = match images {
                    Ok(images) => {
                        let distinct: BTreeSet<_> = images.iter().collect();
                        let all_even = images.iter().all(|p| p.parity() == Parity::Even);
                        let kernel = rotations
                            .iter()
                            .zip(&images)
                            .filter(|(_, p)| p.is_identity())
                            .count();
                        (
                            distinct.len() == 60 && all_even && kernel == 1,
                            format!("image size {}, all even {all_even}, kernel {kernel}", distinct.len()),
                        )
                    }
                    Err(e) => (false, e.to_string()),
                };
                r.check(
                    format!("tetra_action on compound {} is an isomorphism I → A5", compound.label()),
                    ok,
                    measured,
                );
            }
        }
        Err(e) => r.check("tetra_action is an isomorphism I → A5", false, e.to_string()),
    }
}

fn chroma_checks(model: &Dodecahedron, r: &mut Recorder) {
    let started = Instant::now();
    let all = enumerate_all(model);
    let elapsed = started.elapsed();
    r.check(
        format!("colourings: {}", all.len()),
        all.len() == 240 && all.iter().all(|c| chroma::is_valid(model, c)),
        format!("{} valid colourings in {:.3} s", all.len(), elapsed.as_secs_f64()),
    );

    match propagate_proof_enumeration(model) {
        Ok(replay) => {
            let per_frame_two = replay.frames.iter().all(|f| f.completions.len() == 2);
            r.check(
                "enumerate_all and propagate_proof_enumeration return identical sets",
                replay.colourings() == all && per_frame_two && replay.frames.len() == 120,
                format!("{} frames × 2 branches", replay.frames.len()),
            );
        }
        Err(e) => r.check(
            "enumerate_all and propagate_proof_enumeration return identical sets",
            false,
            e.to_string(),
        ),
    }

    let trivial_stabilizers = all
        .iter()
        .all(|c| stabilizer(model, c) == [ColourSymmetry::identity()]);
    let orbit_of_first: BTreeSet<Colouring> = ColourSymmetry::all()
        .iter()
        .filter_map(|g| all.first().map(|c| chroma::act(model, g, c)))
        .filter_map(Result::ok)
        .collect();
    r.check(
        "simple transitivity: one G-orbit of size 240, every stabilizer trivial",
        orbit_of_first.len() == 240 && trivial_stabilizers,
        format!("orbit size {}, trivial stabilizers {trivial_stabilizers}", orbit_of_first.len()),
    );

    for (group, label) in [
        (NamedSubgroup::Trivial, "trivial"),
        (NamedSubgroup::A5, "A5 x {1}"),
        (NamedSubgroup::S5, "S5 x {1}"),
        (NamedSubgroup::C2, "{1} x {1,-1}"),
        (NamedSubgroup::A5xC2, "A5 x {1,-1}"),
        (NamedSubgroup::S5xC2, "S5 x {1,-1}"),
    ] {
        let elements = group.elements();
        match chroma::orbit_partition(model, &all, &elements) {
            Ok(orbits) => {
                let uniform = orbits.iter().all(|o| o.members.len() == elements.len());
                r.check(
                    format!("orbits under {label}: {}", orbits.len()),
                    uniform && orbits.len() * elements.len() == 240,
                    format!("|H| = {}, orbit count × |H| = {}", elements.len(), orbits.len() * elements.len()),
                );
            }
            Err(e) => r.check(format!("orbits under {label}"), false, e.to_string()),
        }
    }

    let antipodal_ok = all.iter().all(|c| antipodal_rule_violation(model, c).is_none());
    r.check(
        "antipodal colour rule: colour(antipode(v)) is the colour missing from v and its neighbours",
        antipodal_ok,
        "all 20 vertices of all colourings",
    );

    let mut odd = 0;
    let mut p2_ok = true;
    let mut p1_ok = true;
    let mut coupling = BTreeMap::new();
    let mut antipodal_keeps_parity = true;
    let pair = compounds(model).ok();
    let mut per_compound = [0usize; 2];
    let mut classes_ok = pair.is_some();
    let odd_swap = ColourSymmetry::relabel(ColourPerm::from_cycles(&[vec![0, 1]]).expect("transposition"));
    let even_turn = ColourSymmetry::relabel(ColourPerm::from_cycles(&[vec![0, 1, 2]]).expect("3-cycle"));
    for c in &all {
        let signature = face_parity_signature(model, c);
        let parity = shared_parity(&signature);
        let distinct: BTreeSet<_> = signature.iter().map(|f| f.cyclic_order).collect();
        let inverse_opposite = signature.iter().all(|f| {
            let o = signature[model.opposite_face(f.face)].cyclic_order;
            let reversed = [o[0], o[4], o[3], o[2], o[1]];
            reversed == f.cyclic_order
        });
        let flips = shared_parity(&face_parity_signature(model, &chroma::apply(model, &odd_swap, c)))
            == parity.map(Parity::flip)
            && shared_parity(&face_parity_signature(model, &chroma::apply(model, &even_turn, c))) == parity;
        p2_ok &= parity.is_some() && distinct.len() == 12 && inverse_opposite && flips;
        if parity == Some(Parity::Odd) {
            odd += 1;
        }

        let hand = working_handedness(model, c);
        let swapped = chroma::apply(model, &ColourSymmetry::antipodal(), c);
        antipodal_keeps_parity &= shared_parity(&face_parity_signature(model, &swapped)) == parity;
        let mirrored = working_handedness(model, &swapped);
        let unique_per_vertex = (0..VERTEX_COUNT).all(|v| vertex_handednesses(model, c, v).len() == 1);
        p1_ok &= unique_per_vertex && hand.is_some() && mirrored == hand.map(|h| h.opposite());

        let compound = pair
            .as_ref()
            .and_then(|p| classify_colouring(model, p, c).ok())
            .map(|cl| cl.compound);
        match compound {
            Some(CompoundLabel::A) => per_compound[0] += 1,
            Some(CompoundLabel::B) => per_compound[1] += 1,
            None => classes_ok = false,
        }
        *coupling.entry((parity, hand, compound)).or_insert(0usize) += 1;
    }
    r.check(
        "all 12 face cyclic orders share one parity and are pairwise distinct; opposite faces carry inverse cyclic orders; odd relabelling flips parity, even preserves it",
        p2_ok,
        format!("{odd} odd / {} even", all.len() - odd),
    );
    r.check(
        "parity bipartition: 120 all-odd and 120 all-even colourings, swapped by odd relabellings, preserved by (id, -1)",
        odd == 120 && all.len() == 240 && antipodal_keeps_parity,
        format!("{odd} / {}, (id, -1) preserves parity {antipodal_keeps_parity}", all.len() - odd),
    );
    r.check(
        "exactly one zigzag handedness reproduces each colour class, constant per colouring, flipped by (id, -1)",
        p1_ok,
        "all 20 vertices of all colourings",
    );
    let describe = |(p, h, c): &(Option<Parity>, Option<Handedness>, Option<CompoundLabel>)| {
        format!(
            "{}/{}/{}",
            p.map_or("mixed".to_string(), |p| p.to_string()),
            h.map_or("none".to_string(), |h| format!("{h:?}").to_lowercase()),
            c.map_or("?".to_string(), |c| c.to_string())
        )
    };
    let handedness_matches_compound = coupling.keys().all(|(_, h, c)| {
        matches!(
            (h, c),
            (Some(Handedness::Left), Some(CompoundLabel::A)) | (Some(Handedness::Right), Some(CompoundLabel::B))
        )
    });
    r.check(
        "zigzag handedness determines the compound: left-right ⇔ A, right-left ⇔ B",
        handedness_matches_compound,
        coupling.keys().map(describe).collect::<Vec<_>>().join(", "),
    );
    r.check(
        "parity and zigzag handedness are independent: 60 colourings in each of the 4 combinations",
        coupling.len() == 4 && coupling.values().all(|&n| n == 60),
        coupling
            .iter()
            .map(|(k, n)| format!("{}: {n}", describe(k)))
            .collect::<Vec<_>>()
            .join(", "),
    );

    let tetrahedra = inscribed_tetrahedra(model);
    r.check(
        format!("inscribed tetrahedra: {}", tetrahedra.len()),
        tetrahedra.len() == 10,
        "all 4845 four-subsets scanned",
    );
    if let Some((a, b)) = &pair {
        let inversion = antipodal_permutation(model);
        let mirror = |t: &crate::compound::Tetrahedron| {
            crate::compound::Tetrahedron::new(t.members().map(|v| inversion.apply(v)))
        };
        let exchanged = a.tetrahedra().iter().all(|t| b.index_of(&mirror(t)).is_some());
        let rotations = rotation_group(model);
        let rotation_swaps = rotations
            .iter()
            .filter(|g| {
                let t = crate::compound::Tetrahedron::new(a.tetrahedra()[0].members().map(|v| g.apply(v)));
                b.index_of(&t).is_some()
            })
            .count();
        r.check(
            "two compounds of five, exchanged by the antipodal map and by no rotation",
            exchanged && rotation_swaps == 0,
            format!("antipodal exchange {exchanged}, rotations exchanging {rotation_swaps}"),
        );
    }
    r.check(
        "colour classes are the 5 tetrahedra of a single compound; 120 colourings per compound",
        classes_ok && per_compound == [120, 120],
        format!("A: {}, B: {}", per_compound[0], per_compound[1]),
    );

    let spread = spread_subsets(model);
    let spread_match = {
        let found: BTreeSet<Vec<usize>> = spread.maximal_subsets.iter().cloned().collect();
        let expected: BTreeSet<Vec<usize>> = tetrahedra.iter().map(|t| t.members().to_vec()).collect();
        found == expected
    };
    r.check(
        "spread subsets: at most 4 vertices pairwise ≥ tetrahedron edge, maximizers are exactly the 10 tetrahedra",
        spread.max_size == 4 && spread_match && spread.spread_five_subsets == 0,
        format!(
            "max size {}, {} maximizers, {} five-point extensions checked",
            spread.max_size,
            spread.maximal_subsets.len(),
            spread.five_extensions_checked
        ),
    );

    let (seed_a, seed_b) = seed_colourings(model);
    let seeds_ok = chroma::is_valid(model, &seed_a) && chroma::is_valid(model, &seed_b) && seed_a != seed_b;
    r.check("seed colourings are valid and distinct", seeds_ok, format!("A = {seed_a}, B = {seed_b}"));
}
