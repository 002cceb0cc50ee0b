//! The ten acceptance criteria. Prints one PASS/FAIL line per criterion with
//! its runtime and exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use threetypes_core::corpus;
use threetypes_core::crossed::{
    cat1_from_crossed_module, cat2_from_crossed_square, check_crossed_square, check_quadratic,
    check_two_crossed, crossed_module_from_cat1, crossed_square_from_cat2, CrossedSquare,
    TwoCrossedModule,
};
use threetypes_core::functors::{
    check_pairing_congruences, mapping_cone_group, mapping_cone_peiffer_commutator,
    quadratic_from_simplicial, quadratic_from_two_crossed, two_crossed_from_simplicial,
    two_crossed_from_square, two_crossed_from_square_via_codiagonal,
};
use threetypes_core::group::{intersect, is_isomorphic};
use threetypes_core::homotopy::{
    homotopy_quadratic, homotopy_simplicial, homotopy_two_crossed, signatures_isomorphic,
};
use threetypes_core::simplicial::{
    binerve, check_codiagonal_agreement, check_simplicial, codiagonal, degenerate_subgroup,
    moore_complex, nerve_cat1, pairing_normal_subgroup, TruncatedSimplicialGroup,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn codiagonal_of(s: &CrossedSquare) -> TruncatedSimplicialGroup {
    let k = cat2_from_crossed_square(s).unwrap();
    codiagonal(&binerve(&k, 2).unwrap()).unwrap()
}

fn nerves() -> Vec<(&'static str, TruncatedSimplicialGroup)> {
    corpus::crossed_modules()
        .into_iter()
        .map(|(name, x)| (name, nerve_cat1(&cat1_from_crossed_module(&x), 3).unwrap()))
        .collect()
}

/// 2-crossed modules of the corpus: mapping cones and depth-3 extractions.
fn two_crossed_corpus() -> Vec<(String, TwoCrossedModule)> {
    let mut out: Vec<(String, TwoCrossedModule)> = corpus::squares()
        .into_iter()
        .map(|(n, s)| (format!("cone {n}"), two_crossed_from_square(&s)))
        .collect();
    for (n, g) in corpus::simplicial().into_iter().filter(|(_, g)| g.depth() == 3) {
        out.push((format!("simplicial {n}"), two_crossed_from_simplicial(&g).unwrap()));
    }
    out
}

fn c1_crossed_square_checker() -> Outcome {
    let mut slowest = Duration::ZERO;
    let squares = [
        ("trivial-c2", corpus::square_trivial_c2()),
        ("square-a3-s3", corpus::square_a3_s3()),
        ("square-c4-c2", corpus::square_c4_c2()),
    ];
    for (name, s) in &squares {
        let t = Instant::now();
        let r = check_crossed_square(s);
        slowest = slowest.max(t.elapsed());
        ensure(r.is_ok(), || format!("{name}: {r}"))?;
    }
    // every single-entry change of h on the A3/S3 square
    let s = corpus::square_a3_s3();
    let mut tampers = 0;
    for m in s.m().elements() {
        for n in s.n().elements() {
            for v in s.l().elements().filter(|&v| v != s.h(m, n)) {
                let mut bad = s.clone();
                bad.set_h(m, n, v);
                let t = Instant::now();
                let r = check_crossed_square(&bad);
                slowest = slowest.max(t.elapsed());
                let hit = r.first("iv").map(|w| w.witness.clone());
                ensure(hit == Some(vec![m, n]), || {
                    format!("h({m},{n}) := {v} not reported as iv at ({m},{n}): {r}")
                })?;
                tampers += 1;
            }
        }
    }
    ensure(slowest < Duration::from_secs(1), || format!("slowest check took {slowest:?}"))?;
    Ok(format!("3 squares clean, {tampers} tamperings caught as iv"))
}

fn c2_mapping_cone() -> Outcome {
    let mut pairs = 0;
    for (name, s) in corpus::squares() {
        let t = two_crossed_from_square(&s);
        let r = check_two_crossed(&t);
        ensure(r.is_ok(), || format!("{name}: {r}"))?;
        let via = two_crossed_from_square_via_codiagonal(&s).map_err(|e| e.to_string())?;
        ensure(via == t, || format!("{name}: codiagonal path differs"))?;
        // the stated formulas, evaluated independently
        let g = mapping_cone_group(&s);
        for l in s.l().elements() {
            let want = g.pair(s.lam.apply(s.l().inv(l)), s.lamp.apply(l));
            ensure(t.d2.apply(l) == want, || format!("{name}: ∂2({l})"))?;
        }
        for x in t.m().elements() {
            let (m, n) = g.split(x);
            let want = s.p().mul(s.mu.apply(m), s.nu.apply(n));
            ensure(t.d1.apply(x) == want, || format!("{name}: ∂1({x})"))?;
            for y in t.m().elements() {
                let (_, a) = g.split(y);
                let nan = s.n().product([n, a, s.n().inv(n)]);
                ensure(t.lift(x, y) == s.h(m, nan), || format!("{name}: {{{x},{y}}}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{} squares, {pairs} lifting pairs", corpus::squares().len()))
}

fn c3_codiagonal_identities() -> Outcome {
    let mut checked = 0;
    for (name, s) in corpus::squares() {
        let g = codiagonal_of(&s);
        let r = check_simplicial(&g);
        ensure(r.is_ok(), || format!("{name}: {r}"))?;
        for x in g.level(2).elements() {
            let a = g.face(1, 0, g.face(2, 0, x));
            let b = g.face(1, 0, g.face(2, 1, x));
            ensure(a == b, || format!("{name}: d0d0 != d0d1 at {x}"))?;
            checked += 1;
        }
        let agree = check_codiagonal_agreement(&s).map_err(|e| e.to_string())?;
        ensure(agree.is_ok(), || format!("{name}: explicit vs generic: {agree}"))?;
    }
    Ok(format!("{} codiagonals, d0d0 = d0d1 on {checked} elements", corpus::squares().len()))
}

fn c4_closed_form_peiffer() -> Outcome {
    let mut pairs = 0;
    for (name, s) in corpus::squares() {
        let t = two_crossed_from_square(&s);
        let g = mapping_cone_group(&s);
        for x in t.m().elements() {
            for y in t.m().elements() {
                let closed = mapping_cone_peiffer_commutator(&s, x, y);
                ensure(closed == t.peiffer(x, y), || format!("{name}: ⟨{x},{y}⟩"))?;
                let (_, a) = g.split(y);
                for c in s.m().elements() {
                    let swept = mapping_cone_peiffer_commutator(&s, x, g.pair(c, a));
                    ensure(swept == closed, || format!("{name}: c = {c} changes ⟨{x},{y}⟩"))?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, all c swept"))
}

fn c5_quadratic_from_two_crossed() -> Outcome {
    let corpus = two_crossed_corpus();
    for (name, t) in &corpus {
        let q = quadratic_from_two_crossed(t).map_err(|e| format!("{name}: {e}"))?;
        let r = check_quadratic(&q);
        ensure(r.is_ok(), || format!("{name}: {r}"))?;
    }
    Ok(format!("{} 2-crossed modules", corpus.len()))
}

fn c6_signatures() -> Outcome {
    let corpus = two_crossed_corpus();
    for (name, t) in &corpus {
        let a = homotopy_two_crossed(t).map_err(|e| e.to_string())?;
        let b = homotopy_quadratic(&quadratic_from_two_crossed(t).unwrap()).map_err(|e| e.to_string())?;
        ensure(signatures_isomorphic(&a, &b, 64).unwrap(), || format!("{name}: {a} vs {b}"))?;
    }
    for (s, want) in [(corpus::square_a3_s3(), "(C2, 1, 1)"), (corpus::square_c4_c2(), "(1, C2, 1)")] {
        let t = two_crossed_from_square(&s);
        for sig in [
            homotopy_two_crossed(&t).unwrap(),
            homotopy_quadratic(&quadratic_from_two_crossed(&t).unwrap()).unwrap(),
        ] {
            ensure(sig.to_string() == want, || format!("got {sig}, want {want}"))?;
        }
    }
    Ok(format!("{} pipelines; (C2,1,1) and (1,C2,1) confirmed", corpus.len()))
}

fn c7_simplicial_pipeline() -> Outcome {
    for (name, g) in nerves() {
        let d3 = degenerate_subgroup(&g, 3);
        ensure(d3.is_whole(), || format!("{name}: G3 != D3"))?;
        let q = quadratic_from_simplicial(&g).map_err(|e| format!("{name}: {e}"))?;
        let r = check_quadratic(&q);
        ensure(r.is_ok(), || format!("{name}: {r}"))?;
        let c = check_pairing_congruences(&g).map_err(|e| e.to_string())?;
        ensure(c.is_ok(), || format!("{name}: {c}"))?;
        let a = homotopy_simplicial(&g).unwrap();
        let b = homotopy_quadratic(&q).unwrap();
        ensure(signatures_isomorphic(&a, &b, 64).unwrap(), || format!("{name}: {a} vs {b}"))?;
    }
    Ok(format!("{} nerves at depth 3", nerves().len()))
}

fn c8_moore_meets_degenerate() -> Outcome {
    let mut inputs = nerves();
    inputs.extend(corpus::squares().into_iter().map(|(n, s)| (n, codiagonal_of(&s))));
    for (name, g) in &inputs {
        let d2 = degenerate_subgroup(g, 2);
        let lhs = intersect(moore_complex(g).term(2), &d2).unwrap();
        let rhs = intersect(&pairing_normal_subgroup(g, 2).unwrap(), &d2).unwrap();
        ensure(lhs.elements() == rhs.elements(), || format!("{name}: {} vs {}", lhs.order(), rhs.order()))?;
    }
    Ok(format!("{} inputs", inputs.len()))
}

fn c9_diagram() -> Outcome {
    let dir = std::env::temp_dir().join(format!("threetypes-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("square.json");
    for (name, s) in corpus::squares() {
        let text = threetypes_cli::to_json(&threetypes_cli::serialize(
            &threetypes_cli::Structure::CrossedSquare(s),
        ));
        std::fs::write(&file, text).map_err(|e| e.to_string())?;
        let out = Command::new(env!("CARGO_BIN_EXE_threetypes"))
            .arg("diagram")
            .arg(&file)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("{name}: {}", String::from_utf8_lossy(&out.stdout))
        })?;
    }
    Ok(format!("diagram exits 0 on {} squares", corpus::squares().len()))
}

fn c10_cat_round_trips() -> Outcome {
    for (name, x) in corpus::crossed_modules() {
        let back = crossed_module_from_cat1(&cat1_from_crossed_module(&x)).map_err(|e| e.to_string())?;
        ensure(is_isomorphic(back.m(), x.m()).unwrap() && is_isomorphic(back.n(), x.n()).unwrap(), || {
            format!("{name}: groups changed")
        })?;
        ensure(back == x, || format!("{name}: crossed module changed"))?;
    }
    for (name, s) in corpus::squares() {
        let back = crossed_square_from_cat2(&cat2_from_crossed_square(&s).unwrap()).map_err(|e| e.to_string())?;
        ensure(back == s, || format!("{name}: square changed"))?;
    }
    Ok("round trips reproduce their inputs exactly".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("1 crossed-square checker", Duration::from_secs(3), c1_crossed_square_checker),
        ("2 mapping cone", Duration::from_secs(10), c2_mapping_cone),
        ("3 codiagonal identities", Duration::from_secs(5), c3_codiagonal_identities),
        ("4 closed-form Peiffer commutator", Duration::from_secs(1), c4_closed_form_peiffer),
        ("5 quadratic from 2-crossed", Duration::from_secs(5), c5_quadratic_from_two_crossed),
        ("6 homotopy signatures", Duration::from_secs(5), c6_signatures),
        ("7 simplicial pipeline", Duration::from_secs(20), c7_simplicial_pipeline),
        ("8 NG2∩D2 = N2∩D2", Duration::from_secs(10), c8_moore_meets_degenerate),
        ("9 functor diagram", Duration::from_secs(30), c9_diagram),
        ("10 cat1/cat2 round trips", Duration::from_secs(5), c10_cat_round_trips),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if took < budget => format!("PASS {name} ({took:.2?}): {detail}"),
            Ok(detail) => format!("FAIL {name} ({took:.2?}, budget {budget:?}): {detail}"),
            Err(why) => format!("FAIL {name} ({took:.2?}): {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
