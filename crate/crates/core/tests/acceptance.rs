//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line, in order.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use nmds_core::codes::{self, DualDistance, LinearCode, WeightDistribution};
use nmds_core::constructions::{build, expected_profile, extend, verify_code, ConstructionId};
use nmds_core::field::{FieldContext, FieldElement, FieldFunction};
use nmds_core::lrc::{self, Mechanism};
use nmds_core::nmds::{self, ClassTag};
use nmds_core::report;
use nmds_core::Execution;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ConstructionId::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gf(m: u32) -> Arc<FieldContext> {
    Arc::new(FieldContext::new(m, None).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn params_q8(id: ConstructionId) -> (usize, usize, usize) {
    match id {
        C | C1 => (12, 3, 9),
        D | D1 | D2 => (11, 3, 8),
        E | E1 | E2 => (9, 3, 6),
        E1bar | F1 | F2 | F3 => (10, 3, 7),
    }
}

fn weights_q8(id: ConstructionId) -> [u64; 4] {
    match id {
        C => [70, 252, 42, 147],
        C1 => [91, 189, 105, 126],
        D => [56, 217, 91, 147],
        D1 => [35, 280, 28, 168],
        D2 => [77, 154, 154, 126],
        E => [28, 168, 147, 168],
        E1 => [42, 126, 189, 154],
        E2 => [21, 189, 126, 175],
        E1bar => [49, 168, 147, 147],
        F1 => [70, 105, 210, 126],
        F2 => [42, 189, 126, 154],
        F3 => [28, 231, 84, 168],
    }
}

fn localities(id: ConstructionId, q: usize) -> (usize, usize) {
    match id {
        C | C1 => (2, q),
        D => (2, q - 1),
        D1 => (2, q),
        D2 => (2, q - 1),
        E => (2, q - 3),
        E1 | E2 => (3, q - 3),
        E1bar => (2, q - 2),
        F1 | F2 => (3, q - 2),
        F3 => (3, q - 1),
    }
}

/// (d-optimal, almost-d-optimal, k-optimal) for code and dual.
fn claimed_flags(id: ConstructionId) -> [(bool, bool, bool); 2] {
    const DK: (bool, bool, bool) = (true, false, true);
    const AK: (bool, bool, bool) = (false, true, true);
    match id {
        C | C1 | D | D2 | E | E1bar => [DK, DK],
        D1 => [DK, AK],
        E1 | E2 | F1 | F2 => [AK, DK],
        F3 => [AK, AK],
    }
}

fn closed_form_matches(
    code: &LinearCode,
    id: ConstructionId,
    q: u32,
) -> Result<WeightDistribution, String> {
    let dist = codes::weight_distribution(code).map_err(|e| e.to_string())?;
    let expected = expected_profile(id, q as u64).distribution();
    ensure(dist == expected, || {
        format!("{id}@q={q}: {dist} vs closed form {expected}")
    })?;
    Ok(dist)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ctx = gf(3);
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        let dist = codes::weight_distribution(&code).map_err(|e| e.to_string())?;
        let class = nmds::classify_from_distribution(code.n(), code.k(), 8, &dist)
            .map_err(|e| e.to_string())?;
        let observed = (code.n(), code.k(), class.d);
        ensure(observed == params_q8(id), || {
            format!("{id}: {observed:?} vs {:?}", params_q8(id))
        })?;
        ensure(
            codes::dual_distance_exact(&code, 3) == DualDistance::Exactly(3),
            || format!("{id}: d_dual != 3"),
        )?;
        ensure(class.d_dual == Some(3), || {
            format!("{id}: MacWilliams d_dual {:?}", class.d_dual)
        })?;
        ensure(class.tag == ClassTag::Nmds, || {
            format!("{id}: class {}", class.tag.as_str())
        })?;
    }
    within(start, Duration::from_secs(5))
}

fn criterion_2() -> Outcome {
    let ctx = gf(3);
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        let dist = closed_form_matches(&code, id, 8)?;
        let d = params_q8(id).2;
        let literal: Vec<u64> = (d..d + 4)
            .map(|w| codes::count_u64(&dist, w).unwrap())
            .collect();
        ensure(literal == weights_q8(id), || {
            format!("{id}: {literal:?} vs {:?}", weights_q8(id))
        })?;
        ensure(1 + literal.iter().sum::<u64>() == 512, || {
            format!("{id}: total != 512")
        })?;
    }
    Ok("12 distributions exact".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let ctx = gf(5);
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        ensure(code.size() == Some(32768), || {
            format!("{id}: size {:?}", code.size())
        })?;
        closed_form_matches(&code, id, 32)?;
    }
    let ctx4 = gf(2);
    for id in [E, E2, D1] {
        closed_form_matches(&build(id, &ctx4), id, 4)?;
    }
    within(start, Duration::from_secs(30))
}

fn criterion_4() -> Outcome {
    let ctx = gf(3);
    let q = 8u64;
    let proof_counts = [
        (C, (q - 1) * (q + 2)),
        (D, q * (q - 1)),
        (E, q * (q - 1) / 2),
        (E1bar, (q - 1) * (q - 1)),
    ];
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        let (n, k) = (code.n(), code.k());
        let dist = codes::weight_distribution(&code).map_err(|e| e.to_string())?;
        let mw = codes::macwilliams(&dist, n, k, 8).map_err(|e| e.to_string())?;
        let triples =
            codes::weight_three_dual_codewords(&code, Execution::default()).len() as u64 * (q - 1);
        let rec = nmds::nmds_dual_distribution_from_ak(n, k, 8, &triples.into())
            .map_err(|e| e.to_string())?;
        ensure(mw == rec, || {
            format!("{id}: MacWilliams {mw} vs recurrence {rec}")
        })?;
        ensure(triples == weights_q8(id)[0], || {
            format!("{id}: A⊥_3 = {triples}")
        })?;
        if let Some(&(_, c)) = proof_counts.iter().find(|(p, _)| *p == id) {
            ensure(triples == c, || {
                format!("{id}: A⊥_3 = {triples}, proof count {c}")
            })?;
        }
    }
    Ok("12 codes consistent".into())
}

fn criterion_5() -> Outcome {
    let ctx = gf(3);
    for id in ConstructionId::ALL {
        let p = nmds::check_min_weight_pairing(&build(id, &ctx)).map_err(|e| e.to_string())?;
        ensure(
            p.counts_equal && p.primal_count == weights_q8(id)[0],
            || format!("{id}: A_d = {}, A⊥_3 = {}", p.primal_count, p.dual_count),
        )?;
        ensure(p.all_unique, || {
            format!("{id}: some minimum-weight codeword lacks a unique partner")
        })?;
    }
    Ok("12 codes paired".into())
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for m in [3, 5] {
        let ctx = gf(m);
        let q = ctx.q() as usize;
        for id in ConstructionId::ALL {
            let code = build(id, &ctx);
            let d = codes::minimum_distance(&code).map_err(|e| e.to_string())?;
            let lc = lrc::locality_of_code(&code).map_err(|e| e.to_string())?;
            let ld = lrc::locality_of_dual(&code).map_err(|e| e.to_string())?;
            let (rc, rd) = localities(id, q);
            let mech_c = if rc == 2 {
                Mechanism::UnionCovers
            } else {
                Mechanism::NmdsFallback
            };
            let mech_d = if rd == d - 1 {
                Mechanism::IntersectionEmpty
            } else {
                Mechanism::IntersectionFallback
            };
            if (lc.r, ld.r, lc.mechanism, ld.mechanism) != (rc, rd, mech_c, mech_d) {
                bad.push(format!(
                    "{id}@q={q} ({}, {}) {}/{} vs ({rc}, {rd}) {}/{}",
                    lc.r,
                    ld.r,
                    lc.mechanism.as_str(),
                    ld.mechanism.as_str(),
                    mech_c.as_str(),
                    mech_d.as_str()
                ));
            }
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("24 locality pairs match".into())
}

fn criterion_7() -> Outcome {
    let ctx = gf(3);
    let mut bad = Vec::new();
    for id in ConstructionId::ALL {
        let cls = lrc::classify_lrc(&build(id, &ctx)).map_err(|e| e.to_string())?;
        for (side, rep, want) in [
            ("code", &cls.code, claimed_flags(id)[0]),
            ("dual", &cls.dual, claimed_flags(id)[1]),
        ] {
            let got = (rep.d_optimal, rep.almost_d_optimal, rep.k_optimal);
            if got != want {
                bad.push(format!(
                    "{id} {side}: got {} expected {want:?}",
                    rep.flags().join("+")
                ));
            }
            if rep.d as i64 > rep.singleton_like_rhs || rep.k as i64 > rep.cm_rhs {
                bad.push(format!("{id} {side}: bound violated"));
            }
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("24 flag sets match".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for m in 2..=5 {
        let ctx = gf(m);
        let q = ctx.q();
        let mut fns: Vec<FieldFunction> = (1..q as u64)
            .map(|e| FieldFunction::monomial(&ctx, e))
            .collect();
        for _ in 0..50 {
            let mut rest: Vec<FieldElement> = ctx.nonzero_elements().collect();
            rest.shuffle(&mut rng);
            rest.insert(0, FieldElement::ZERO);
            fns.push(FieldFunction::from_table(&ctx, rest).unwrap());
        }
        for f in &fns {
            let slope = f.eval(FieldElement::ZERO).is_zero() && f.satisfies_slope_criterion(&ctx);
            ensure(f.is_oval_polynomial(&ctx) == slope, || {
                format!("oval/slope disagree at q={q}")
            })?;
        }
    }
    for m in 2..=8 {
        let has = FieldFunction::monomial(&gf(m), 2).has_root_f_plus_x_plus_1();
        ensure(has == (m % 2 == 0), || {
            format!("x^2+x+1 roots at m={m}: {has}")
        })?;
    }
    let ctx = gf(3);
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        let base = codes::weight_distribution(&code).unwrap();
        let mut cols: Vec<usize> = (0..code.n()).collect();
        cols.shuffle(&mut rng);
        let mut g = code.generator().select_columns(&cols);
        for r in 0..3 {
            g.scale_row(r, ctx.element(rng.random_range(1..8)).unwrap());
        }
        let moved = codes::weight_distribution(&LinearCode::new(g).unwrap()).unwrap();
        ensure(moved == base, || {
            format!("{id}: distribution changed under monomial equivalence")
        })?;

        let loc = lrc::locality_of_code(&code).map_err(|e| e.to_string())?;
        let msg: Vec<FieldElement> = (0..3)
            .map(|_| ctx.element(rng.random_range(0..8)).unwrap())
            .collect();
        let word = code.encode(&msg);
        for i in 0..code.n() {
            let out = lrc::repair_coordinate(&ctx, &loc, &word, i).map_err(|e| e.to_string())?;
            ensure(out.ok() && out.repair_set.len() <= loc.r, || {
                format!("{id}: repair of c_{i} failed")
            })?;
        }
    }
    for m in [3, 5] {
        let ctx = gf(m);
        let e1 = build(E1, &ctx);
        let bar = extend(&e1);
        let g = bar.generator();
        let sums_zero = (0..g.rows()).all(|r| {
            g.row(r)
                .iter()
                .fold(FieldElement::ZERO, |a, &v| a.add(v))
                .is_zero()
        });
        ensure(sums_zero, || "extend row sums nonzero".into())?;
        let (d, dbar) = (
            codes::minimum_distance(&e1).unwrap(),
            codes::minimum_distance(&bar).unwrap(),
        );
        ensure(dbar == d + 1, || {
            format!("d(E1bar) = {dbar}, d(E1) = {d} at m={m}")
        })?;
    }
    Ok("oval, roots, invariance, extension and repair properties hold".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let ctx = gf(7);
    for id in ConstructionId::ALL {
        let code = build(id, &ctx);
        ensure(code.size() == Some(2_097_152), || {
            format!("{id}: size {:?}", code.size())
        })?;
        let v = verify_code(id, &ctx, &code, Execution::default()).map_err(|e| e.to_string())?;
        let failing: Vec<String> = v.failing().map(|c| c.name.clone()).collect();
        ensure(failing.is_empty(), || {
            format!("{id}: {}", failing.join(","))
        })?;
        report::analyze_with(id, &ctx, Execution::default()).map_err(|e| e.to_string())?;
    }
    within(start, Duration::from_secs(300))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("parameter table at q=8", criterion_1),
        ("weight distributions at q=8", criterion_2),
        ("closed forms at q=32 and q=4", criterion_3),
        ("MacWilliams and recurrence agreement", criterion_4),
        ("minimum-weight pairing", criterion_5),
        ("locality table at q=8,32", criterion_6),
        ("optimality flags", criterion_7),
        ("property suite", criterion_8),
        ("scale probe at q=128", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
