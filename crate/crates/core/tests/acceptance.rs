//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p superdiv-core --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superdiv::catalog::{all_entries, catalog, lookup, ClassId};
use superdiv::classifier::transform::random_transformation;
use superdiv::classifier::{
    candidate_sectors, classify, enumerate, equivalent, fingerprint, fusion_table, identify_constants,
    Classification, CrossCommutation,
};
use superdiv::matrix::{word_to_matrix, DenseSignMatrix};
use superdiv::superdivision::{
    determinant_oracle, division_criterion, schur_commutant_check, structure_constants, verify_clifford,
    verify_with_constants, CliffordSignature,
};
use superdiv::word::all_words;
use superdiv::{Grading, Letter, Presentation, Series, Sign, SignedWord};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn id(s: &str) -> ClassId {
    s.parse().expect("static class id")
}

fn words(ws: &[&str]) -> Vec<SignedWord> {
    ws.iter().map(|w| w.parse().expect("static word")).collect()
}

fn classified(grading: Grading, series: Series) -> Result<Classification, String> {
    classify(&enumerate(grading, series)).map_err(|e| e.to_string())
}

fn ids_of(c: &Classification) -> Result<Vec<ClassId>, String> {
    c.classes
        .iter()
        .map(|r| r.class_id.ok_or_else(|| format!("unknown class with representative\n{}", r.representative)))
        .collect()
}

fn catalog_ids(grading: Grading, series: Series) -> Vec<ClassId> {
    catalog(grading, series).iter().map(|e| e.class_id).collect()
}

fn ten_fold_way() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    let mut total = 0;
    for series in Series::ALL {
        let division = classified(Grading::None, series)?;
        ensure(ids_of(&division)? == catalog_ids(Grading::None, series), || format!("{series} division algebra"))?;
        let c = classified(Grading::Z2, series)?;
        let ids = ids_of(&c)?;
        ensure(ids == catalog_ids(Grading::Z2, series), || format!("{series}: got {ids:?}"))?;
        summary.push(ids.len().to_string());
        total += 1 + ids.len();
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    ensure(summary == ["2", "3", "2"] && total == 10, || format!("counts {summary:?}, total {total}"))?;
    Ok(format!("Z2 classes {} (R/C/H), 3 + 7 = {total}, {:.0?}", summary.join("/"), start.elapsed()))
}

fn thirteen_fold() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    let mut replayed = 0;
    for series in Series::ALL {
        let c = classified(Grading::Z2Z2, series)?;
        let ids = ids_of(&c)?;
        ensure(ids == catalog_ids(Grading::Z2Z2, series), || format!("{series}: got {ids:?}"))?;
        for record in &c.classes {
            let class_id = record.class_id.expect("identified above");
            let reference = structure_constants(&lookup(class_id).map_err(|e| e.to_string())?.presentation)
                .map_err(|e| e.to_string())?;
            let member = structure_constants(&enumerate(Grading::Z2Z2, series)[record.members[0]])
                .map_err(|e| e.to_string())?;
            let cert = record.catalog_certificate.as_ref().ok_or("missing catalog certificate")?;
            ensure(cert.replay(&reference, &member), || format!("{class_id}: certificate does not replay"))?;
            replayed += 1;
        }
        summary.push(ids.len().to_string());
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    ensure(summary == ["4", "5", "4"], || format!("counts {summary:?}"))?;
    Ok(format!("Z2xZ2 classes {} (R/C/H), {replayed} catalog certificates replayed, {:.2?}", summary.join("/"), start.elapsed()))
}

fn real_square_signatures() -> Outcome {
    let c = classified(Grading::Z2Z2, Series::Real)?;
    let rows: BTreeSet<String> = c.classes.iter().map(|r| r.fingerprint.square_signs.concat()).collect();
    let expected: BTreeSet<String> = ["---", "++-", "+--", "+++"].iter().map(|s| s.to_string()).collect();
    ensure(rows == expected, || format!("got {rows:?}"))?;
    let by_class: Vec<String> = c.classes.iter().map(|r| r.fingerprint.square_signs.concat()).collect();
    Ok(format!("R1..R4 = ({})", by_class.join(")(")))
}

fn projection_triples() -> Outcome {
    let expected: BTreeMap<&str, &str> = [
        ("D2_R1", "1/1/1"),
        ("D2_R2", "1/2/2"),
        ("D2_R3", "1/1/2"),
        ("D2_R4", "2/2/2"),
        ("D2_C1", "1/1/3"),
        ("D2_C2", "1/2/3"),
        ("D2_C3", "2/2/3"),
        ("D2_C4", "3/3/3"),
        ("D2_C5", "3/3/3"),
        ("D2_H1", "1/1/1"),
        ("D2_H2", "2/2/2"),
        ("D2_H3", "1/1/2"),
        ("D2_H4", "1/2/2"),
    ]
    .into_iter()
    .collect();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for series in Series::ALL {
        let c = classified(Grading::Z2Z2, series)?;
        for record in &c.classes {
            let class_id = record.class_id.ok_or("unknown class")?.to_string();
            let got = record.fingerprint.projections.iter().map(|p| p.index.to_string()).collect::<Vec<_>>().join("/");
            let want = expected.get(class_id.as_str()).ok_or_else(|| format!("unexpected class {class_id}"))?;
            if got != *want {
                mismatches.push(format!("{class_id}: {got} != {want}"));
            }
            checked += 1;
        }
    }
    ensure(mismatches.is_empty() && checked == 13, || format!("{mismatches:?} ({checked} classes)"))?;
    Ok(format!("{checked} classes match"))
}

fn c4_c5_discriminator() -> Outcome {
    let c4 = &lookup(id("D2_C4")).map_err(|e| e.to_string())?.presentation;
    let c5 = &lookup(id("D2_C5")).map_err(|e| e.to_string())?.presentation;
    let f4 = fingerprint(c4).map_err(|e| e.to_string())?;
    let f5 = fingerprint(c5).map_err(|e| e.to_string())?;
    ensure(f4.cross_commutation == [CrossCommutation::Anticommute; 3], || format!("C4 {:?}", f4.cross_commutation))?;
    ensure(f5.cross_commutation == [CrossCommutation::Commute; 3], || format!("C5 {:?}", f5.cross_commutation))?;
    ensure(f4.projections == f5.projections, || "projections differ".into())?;
    ensure(equivalent(c4, c5).map_err(|e| e.to_string())?.is_none(), || "C4 and C5 found equivalent".into())?;
    Ok("C4 cross sectors anticommute, C5 commute, no certificate".into())
}

fn odd_square_signs(p: &Presentation) -> String {
    let odd = p.sector(Grading::Z2.grades()[1]).expect("odd sector");
    odd.iter().map(|w| w.square_sign().as_char()).collect()
}

fn quaternionic_odd_squares() -> Outcome {
    let h1 = odd_square_signs(&lookup(id("D1_H1")).map_err(|e| e.to_string())?.presentation);
    let h2 = odd_square_signs(&lookup(id("D1_H2")).map_err(|e| e.to_string())?.presentation);
    ensure(h1 == "-+++" && h2 == "+---", || format!("H1 ({h1}) H2 ({h2})"))?;
    Ok(format!("H1 ({h1}), H2 ({h2})"))
}

fn homomorphism_holds(u: &SignedWord, v: &SignedWord) -> bool {
    word_to_matrix(&u.mul(v).expect("equal lengths")) == &word_to_matrix(u) * &word_to_matrix(v)
}

fn word_matrix_oracle() -> Outcome {
    let start = Instant::now();
    let mut exhaustive = 0;
    for n in 1..=3 {
        let ws: Vec<SignedWord> = all_words(n).collect();
        for u in &ws {
            for v in &ws {
                ensure(homomorphism_holds(u, v), || format!("{u} * {v}"))?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0007_0004);
    let random_word = |rng: &mut ChaCha8Rng| {
        let sign = if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
        SignedWord::new(sign, (0..4).map(|_| *Letter::ALL.choose(rng).expect("four letters")).collect())
    };
    for _ in 0..10_000 {
        let u = random_word(&mut rng);
        let v = random_word(&mut rng);
        ensure(homomorphism_holds(&u, &v), || format!("{u} * {v}"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("{exhaustive} exhaustive pairs (length 1-3) + 10000 random length-4 pairs, {:.0?}", start.elapsed()))
}

fn clifford_suite() -> Outcome {
    let split = words(&["X", "Y", "A"]);
    let qbar = words(&["IA", "AY", "AX"]);
    let commutant = words(&["II", "AI", "YA", "XA"]);
    let cl21 = verify_clifford(&split, CliffordSignature::new(2, 1)).map_err(|e| e.to_string())?;
    let cl03 = verify_clifford(&qbar, CliffordSignature::new(0, 3)).map_err(|e| e.to_string())?;
    let schur = schur_commutant_check(&qbar, &commutant).map_err(|e| e.to_string())?;
    // The same relations as matrices.
    let identity = DenseSignMatrix::identity(4);
    let mut matrices_ok = true;
    for (i, a) in qbar.iter().enumerate() {
        for (j, b) in qbar.iter().enumerate() {
            let (ma, mb) = (word_to_matrix(a), word_to_matrix(b));
            let anti = (&ma * &mb).add(&(&mb * &ma));
            let want = if i == j { identity.scale(-2) } else { DenseSignMatrix::zeros(4) };
            matrices_ok &= anti == want;
        }
        for s in &commutant {
            let (ma, ms) = (word_to_matrix(a), word_to_matrix(s));
            matrices_ok &= &ma * &ms == &ms * &ma;
        }
    }
    ensure(cl21 && cl03 && schur && matrices_ok, || {
        format!("Cl(2,1) {cl21}, Cl(0,3) {cl03}, Schur {schur}, matrices {matrices_ok}")
    })?;
    Ok("Cl(2,1) true, Cl(0,3) true, Schur commutant true, matrix cross-check true".into())
}

fn subsets(pool: &[SignedWord], k: usize) -> Vec<Vec<SignedWord>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..pool.len())
        .flat_map(|i| {
            subsets(&pool[i + 1..], k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, pool[i].clone());
                rest
            })
        })
        .collect()
}

fn division_cross_validation() -> Outcome {
    let mut candidates = Vec::new();
    for grading in [Grading::None, Grading::Z2, Grading::Z2Z2] {
        for series in Series::ALL {
            candidates.extend(candidate_sectors(grading, series));
        }
    }
    // Arbitrary word sets, most of them not division sectors.
    let len2: Vec<SignedWord> = all_words(2).collect();
    let len3: Vec<SignedWord> = all_words(3).collect();
    let mut control = subsets(&len2, 2);
    control.extend(subsets(&len2, 4));
    let mut rng = ChaCha8Rng::seed_from_u64(0x0d17_0009);
    for _ in 0..2000 {
        control.push(len3.choose_multiple(&mut rng, 4).cloned().collect());
    }
    let mut lines = Vec::new();
    for (name, sectors) in [("candidate", &candidates), ("control", &control)] {
        let mut division = 0;
        let mut disagreements = Vec::new();
        for sector in sectors {
            let exact = division_criterion(sector).is_ok();
            let oracle = determinant_oracle(sector).is_ok();
            if exact != oracle {
                disagreements.push(sector.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));
            }
            division += usize::from(exact);
        }
        let total = sectors.len();
        ensure(disagreements.is_empty(), || format!("{name} sets disagree on {disagreements:?}"))?;
        lines.push(format!("{total}/{total} {name} sets agree ({division} division)"));
    }
    Ok(lines.join(", "))
}

fn certificates_and_orbits() -> Outcome {
    let mut checked = 0;
    for grading in [Grading::Z2, Grading::Z2Z2] {
        for series in Series::ALL {
            // classify() replays every certificate it emits and panics otherwise.
            checked += classified(grading, series)?.certificates_checked;
        }
    }
    let entries: Vec<_> = all_entries().iter().filter(|e| e.class_id.grading != Grading::None).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b17_0010);
    for round in 0..1000 {
        let e = entries.choose(&mut rng).expect("catalog is nonempty");
        let moved = random_transformation(&e.presentation, &mut rng);
        let (_, sc) = verify_with_constants(&moved).map_err(|err| format!("round {round}: {err}\n{moved}"))?;
        let (found, cert) = identify_constants(&sc).map_err(|err| format!("round {round}: {err}\n{moved}"))?;
        ensure(found == e.class_id, || format!("round {round}: {} re-identified as {found}", e.class_id))?;
        let reference = structure_constants(&e.presentation).map_err(|err| err.to_string())?;
        ensure(cert.replay(&reference, &sc), || format!("round {round}: certificate does not replay"))?;
        checked += 1;
    }
    Ok(format!("{checked} certificates replayed, 1000/1000 transformed entries re-identified"))
}

fn fusion() -> Outcome {
    let t = fusion_table(Series::Complex).map_err(|e| e.to_string())?;
    let c = |i: u8| ClassId::new(Grading::Z2, Series::Complex, i).expect("complex class");
    let mut errors = Vec::new();
    for a in 1..=3u8 {
        for b in 1..=3u8 {
            let cell = t.cell(a, b);
            let (outputs, multiclass) = match (a, b) {
                (3, 3) => (vec![c(3)], true),
                (3, _) | (_, 3) => (vec![c(1), c(2)], false),
                _ => (vec![c(3)], false),
            };
            if cell.output_ids() != outputs || cell.multiclass() != multiclass {
                errors.push(format!("({a},{b}) -> {:?} multiclass {}", cell.output_ids(), cell.multiclass()));
            }
        }
    }
    ensure(errors.is_empty(), || errors.join("; "))?;
    ensure(t.is_symmetric(), || "table is not symmetric".into())?;
    Ok("9/9 cells match, (3,3) multiclass via D2_C4/D2_C5".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("ten-fold way", ten_fold_way),
        ("thirteen Z2xZ2 classes", thirteen_fold),
        ("real square signatures", real_square_signatures),
        ("projection triples", projection_triples),
        ("C4/C5 discriminator", c4_c5_discriminator),
        ("quaternionic odd squares", quaternionic_odd_squares),
        ("word/matrix oracle", word_matrix_oracle),
        ("Clifford suite", clifford_suite),
        ("division cross-validation", division_cross_validation),
        ("certificates and orbit stability", certificates_and_orbits),
        ("complex fusion table", fusion),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
