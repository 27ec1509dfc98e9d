//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dodecolour::chroma::{
    self, antipodal_rule_violation, enumerate_all, face_parity_signature, orbit_partition,
    propagate_proof_enumeration, shared_parity, stabilizer, vertex_handednesses, working_handedness,
};
use dodecolour::compound::{classify_colouring, compounds, inscribed_tetrahedra, spread_subsets, Tetrahedron};
use dodecolour::io::{
    colouring_from_json, colouring_to_json, compound_off, dodecahedron_off, enumeration_from_json,
    enumeration_to_json, parse_off, CompoundDocument, ModelDocument,
};
use dodecolour::symmetry::{antipodal_permutation, full_group, generate_subgroup, rotation_group, tetra_action, NamedSubgroup};
use dodecolour::{Colouring, ColourPerm, ColourSymmetry, CompoundLabel, Dodecahedron, Parity, Sign};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn(&Context) -> Verdict);

fn ensure(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

struct Context {
    model: Dodecahedron,
    all: Vec<Colouring>,
}

fn enumeration_count(_: &Context) -> Verdict {
    let model = Dodecahedron::build();
    let started = Instant::now();
    let all = enumerate_all(&model);
    let elapsed = started.elapsed();
    let valid = all.iter().filter(|c| chroma::is_valid(&model, c)).count();
    ensure(
        all.len() == 240 && valid == 240 && elapsed < Duration::from_secs(1),
        format!("{} colourings, {valid} valid, {:.3} s", all.len(), elapsed.as_secs_f64()),
    )
}

fn cross_oracle(cx: &Context) -> Verdict {
    let replay = propagate_proof_enumeration(&cx.model).map_err(|e| e.to_string())?;
    let per_frame: BTreeSet<usize> = replay.frames.iter().map(|f| f.completions.len()).collect();
    ensure(
        replay.colourings() == cx.all && per_frame == BTreeSet::from([2]) && replay.frames.len() == 120,
        format!("{} frames, completions per frame {per_frame:?}, sets equal {}", replay.frames.len(), replay.colourings() == cx.all),
    )
}

fn simple_transitivity(cx: &Context) -> Verdict {
    let group = ColourSymmetry::all();
    let mut worst_orbit = usize::MAX;
    for c in [cx.all[0], cx.all[137], cx.all[239]] {
        let orbit: BTreeSet<Colouring> = group.iter().map(|g| chroma::act(&cx.model, g, &c).unwrap()).collect();
        worst_orbit = worst_orbit.min(orbit.len());
    }
    let largest_stabilizer = cx.all.iter().map(|c| stabilizer(&cx.model, c).len()).max().unwrap_or(0);
    ensure(
        worst_orbit == 240 && largest_stabilizer == 1,
        format!("orbit size {worst_orbit}, largest stabilizer {largest_stabilizer}"),
    )
}

fn orbit_counts(cx: &Context) -> Verdict {
    let five = ColourSymmetry::relabel(ColourPerm::from_cycles(&[vec![0, 1, 2, 3, 4]]).unwrap());
    let twisted = ColourSymmetry::new(ColourPerm::from_cycles(&[vec![0, 1]]).unwrap(), Sign::Minus);
    let mut cases: Vec<(String, Vec<ColourSymmetry>, Option<usize>)> = vec![
        ("A5 x {1}".into(), NamedSubgroup::A5.elements(), Some(4)),
        ("G".into(), NamedSubgroup::S5xC2.elements(), Some(1)),
        ("trivial".into(), NamedSubgroup::Trivial.elements(), Some(240)),
    ];
    for g in [NamedSubgroup::S5, NamedSubgroup::C2, NamedSubgroup::A5xC2] {
        cases.push((g.name().into(), g.elements(), None));
    }
    cases.push(("<5-cycle>".into(), generate_subgroup(&[five]), None));
    cases.push(("<5-cycle, ((1 2), -1)>".into(), generate_subgroup(&[five, twisted]), None));

    let mut ok = true;
    let mut detail = Vec::new();
    for (name, h, expected) in cases {
        let orbits = orbit_partition(&cx.model, &cx.all, &h).map_err(|e| e.to_string())?;
        ok &= orbits.len() * h.len() == 240 && expected.is_none_or(|n| n == orbits.len());
        detail.push(format!("{name}: {} x {}", orbits.len(), h.len()));
    }
    ensure(ok, detail.join(", "))
}

fn group_cardinalities(cx: &Context) -> Verdict {
    let rotations = rotation_group(&cx.model);
    let full = full_group(&cx.model);
    let (a, b) = compounds(&cx.model).map_err(|e| e.to_string())?;
    let mut ok = rotations.len() == 60 && full.len() == 120;
    let mut detail = vec![format!("|I| = {}, |I_h| = {}", rotations.len(), full.len())];
    for compound in [&a, &b] {
        let images: Vec<ColourPerm> = rotations
            .iter()
            .map(|g| tetra_action(g, compound))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let distinct: BTreeSet<_> = images.iter().collect();
        let even = images.iter().all(|p| p.parity() == Parity::Even);
        ok &= distinct.len() == 60 && even;
        detail.push(format!("compound {}: image {} all even {even}", compound.label(), distinct.len()));
    }
    ensure(ok, detail.join(", "))
}

fn tetrahedra(cx: &Context) -> Verdict {
    let tetrahedra = inscribed_tetrahedra(&cx.model);
    let (a, b) = compounds(&cx.model).map_err(|e| e.to_string())?;
    let inversion = antipodal_permutation(&cx.model);
    let image = |g: &dodecolour::VertexPermutation, t: &Tetrahedron| Tetrahedron::new(t.members().map(|v| g.apply(v)));
    let exchanged = a.tetrahedra().iter().all(|t| b.index_of(&image(&inversion, t)).is_some());
    let swapping_rotations = rotation_group(&cx.model)
        .iter()
        .filter(|g| a.tetrahedra().iter().any(|t| b.index_of(&image(g, t)).is_some()))
        .count();
    let disjoint = a.tetrahedra().iter().chain(b.tetrahedra()).collect::<BTreeSet<_>>().len() == 10;
    ensure(
        tetrahedra.len() == 10 && disjoint && exchanged && swapping_rotations == 0,
        format!(
            "{} tetrahedra, two compounds of 5, antipodal exchange {exchanged}, rotations mixing them {swapping_rotations}",
            tetrahedra.len()
        ),
    )
}

fn colour_classes(cx: &Context) -> Verdict {
    let pair = compounds(&cx.model).map_err(|e| e.to_string())?;
    let mut counts = BTreeMap::new();
    for c in &cx.all {
        let label = classify_colouring(&cx.model, &pair, c).map_err(|e| format!("{c}: {e}"))?.compound;
        *counts.entry(label).or_insert(0) += 1;
    }
    ensure(
        counts.get(&CompoundLabel::A) == Some(&120) && counts.get(&CompoundLabel::B) == Some(&120),
        format!("{counts:?}"),
    )
}

fn spread_scan(cx: &Context) -> Verdict {
    let spread = spread_subsets(&cx.model);
    let found: BTreeSet<Vec<usize>> = spread.maximal_subsets.iter().cloned().collect();
    let expected: BTreeSet<Vec<usize>> = inscribed_tetrahedra(&cx.model).iter().map(|t| t.members().to_vec()).collect();
    ensure(
        spread.four_subsets_scanned == 4845 && spread.max_size == 4 && spread.spread_five_subsets == 0 && found == expected,
        format!(
            "{} four-subsets scanned, {} five-point extensions, max size {}, {} maximizers equal to the tetrahedra: {}",
            spread.four_subsets_scanned,
            spread.five_extensions_checked,
            spread.max_size,
            found.len(),
            found == expected
        ),
    )
}

fn face_parity(cx: &Context) -> Verdict {
    let odd = ColourSymmetry::relabel(ColourPerm::from_cycles(&[vec![0, 1]]).unwrap());
    let even = ColourSymmetry::relabel(ColourPerm::from_cycles(&[vec![0, 1, 2]]).unwrap());
    let parity_of = |c: &Colouring| shared_parity(&face_parity_signature(&cx.model, c));
    for c in &cx.all {
        let signature = face_parity_signature(&cx.model, c);
        let parity = shared_parity(&signature).ok_or_else(|| format!("{c}: faces disagree on parity"))?;
        let distinct: BTreeSet<_> = signature.iter().map(|f| f.cyclic_order).collect();
        if distinct.len() != 12 {
            return Err(format!("{c}: only {} distinct cyclic orders", distinct.len()));
        }
        for f in &signature {
            let o = signature[cx.model.opposite_face(f.face)].cyclic_order;
            if [o[0], o[4], o[3], o[2], o[1]] != f.cyclic_order {
                return Err(format!("{c}: face {} and its opposite are not inverse orders", f.face));
            }
        }
        let odd_image = chroma::act(&cx.model, &odd, c).unwrap();
        let even_image = chroma::act(&cx.model, &even, c).unwrap();
        if parity_of(&odd_image) != Some(parity.flip()) || parity_of(&even_image) != Some(parity) {
            return Err(format!("{c}: relabelling does not act on parity as expected"));
        }
    }
    Ok("240 colourings: shared parity, 12 distinct orders, inverse opposite faces, odd relabel flips".into())
}

fn zigzag(cx: &Context) -> Verdict {
    for c in &cx.all {
        for v in 0..20 {
            let hands = vertex_handednesses(&cx.model, c, v);
            if hands.len() != 1 {
                return Err(format!("{c}: vertex {v} reproduced by {hands:?}"));
            }
        }
        let hand = working_handedness(&cx.model, c).ok_or_else(|| format!("{c}: handedness varies"))?;
        let mirrored = chroma::act(&cx.model, &ColourSymmetry::antipodal(), c).unwrap();
        if working_handedness(&cx.model, &mirrored) != Some(hand.opposite()) {
            return Err(format!("{c}: (id, -1) does not flip handedness"));
        }
    }
    Ok("240 colourings x 20 vertices: one handedness each, constant, flipped by (id, -1)".into())
}

fn antipodal_rule(cx: &Context) -> Verdict {
    let failures: Vec<String> = cx
        .all
        .iter()
        .filter_map(|c| antipodal_rule_violation(&cx.model, c).map(|v| format!("{c} at {v}")))
        .collect();
    ensure(failures.is_empty(), format!("{} colourings checked, violations {failures:?}", cx.all.len()))
}

fn determinism(cx: &Context) -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let run = Command::new(env!("CARGO_BIN_EXE_dodecolour"))
            .args(["enumerate", "--out", path.to_str().unwrap(), "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !run.status.success() {
            return Err(format!("enumerate exited with {}", run.status));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let identical = outputs[0] == outputs[1];
    let text = String::from_utf8(outputs[0].clone()).map_err(|e| e.to_string())?;
    let reread = enumeration_from_json(&text).map_err(|e| e.to_string())?;
    let enumeration_round_trip = reread == cx.all && enumeration_to_json(&reread) == text;

    let colouring_round_trip = cx
        .all
        .iter()
        .all(|c| colouring_from_json(&colouring_to_json(c)).ok().as_ref() == Some(c));

    let off = dodecahedron_off(&cx.model);
    let mesh = parse_off(&off).map_err(|e| e.to_string())?;
    let exact_positions = mesh
        .vertices
        .iter()
        .zip(cx.model.vertices())
        .all(|(p, v)| *p == [v.position.x, v.position.y, v.position.z]);
    let faces_match = mesh.faces.iter().zip(cx.model.faces()).all(|(f, g)| f.as_slice() == g);
    let model_doc = ModelDocument::from_model(&cx.model);
    let model_json = serde_json::to_string(&model_doc).map_err(|e| e.to_string())?;
    let model_round_trip = serde_json::from_str::<ModelDocument>(&model_json).ok() == Some(model_doc);

    let (a, b) = compounds(&cx.model).map_err(|e| e.to_string())?;
    let mut compound_round_trip = true;
    for compound in [&a, &b] {
        let doc = CompoundDocument::from_compound(compound);
        let json = serde_json::to_string(&doc).map_err(|e| e.to_string())?;
        compound_round_trip &= serde_json::from_str::<CompoundDocument>(&json).ok() == Some(doc);
        let mesh = parse_off(&compound_off(&cx.model, compound)).map_err(|e| e.to_string())?;
        let triangles: BTreeSet<Vec<usize>> = mesh
            .faces
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.sort_unstable();
                f
            })
            .collect();
        let expected: BTreeSet<Vec<usize>> = compound
            .tetrahedra()
            .iter()
            .flat_map(|t| {
                let m = t.members();
                [[m[0], m[1], m[2]], [m[0], m[1], m[3]], [m[0], m[2], m[3]], [m[1], m[2], m[3]]].map(|f| f.to_vec())
            })
            .collect();
        compound_round_trip &= mesh.faces.len() == 20 && triangles == expected;
    }

    ensure(
        identical
            && enumeration_round_trip
            && colouring_round_trip
            && exact_positions
            && faces_match
            && model_round_trip
            && compound_round_trip,
        format!(
            "enumerate byte-identical {identical}, enumeration {enumeration_round_trip}, colourings {colouring_round_trip}, \
             OFF positions {exact_positions} faces {faces_match}, model JSON {model_round_trip}, compounds {compound_round_trip}"
        ),
    )
}

fn main() -> ExitCode {
    let model = Dodecahedron::build();
    let all = enumerate_all(&model);
    let cx = Context { model, all };
    let criteria: [Criterion; 12] = [
        ("enumeration count is 240, under 1 s", enumeration_count),
        ("backtracking and proof replay agree, 2 completions per frame", cross_oracle),
        ("simple transitivity of G", simple_transitivity),
        ("orbit counts: A5 x {1} 4, G 1, trivial 240, count x |H| = 240", orbit_counts),
        ("|I| = 60, |I_h| = 120, tetra_action onto A5", group_cardinalities),
        ("10 tetrahedra in 2 compounds, exchanged by the antipodal map only", tetrahedra),
        ("colour classes form one compound, 120 per compound", colour_classes),
        ("spread subsets have at most 4 points, maximizers are the tetrahedra", spread_scan),
        ("face cyclic orders: shared parity, distinct, inverse on opposite faces", face_parity),
        ("zigzag handedness unique, constant, flipped by (id, -1)", zigzag),
        ("antipodal colour rule at every vertex", antipodal_rule),
        ("byte-stable enumeration, lossless OFF/JSON round trips", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check(&cx) {
            Ok(detail) => println!("PASS  criterion {:>2}: {name}  [{detail}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}  [{detail}]", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
