//! Exit criteria, one line each. Run with `--nocapture` to see the table.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use charged_bipartitions::classify::charge_to_params;
use charged_bipartitions::verify::{run_verification, VerifyConfig};
use charged_bipartitions::wallcross::{check_conservation, wall_cross};
use charged_bipartitions::{
    build_tableau, enumerate_bipartitions, phi, theta, to_charged_bipartition, Bipartition, Charge, ChargedBipartition,
};
use num_rational::Rational64;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Crossings and conservation failures seen by criteria 3–5, for criterion 7.
#[derive(Default)]
struct Conservation {
    crossings: u64,
    violations: Vec<String>,
}

impl Conservation {
    fn cross(&mut self, cb: &ChargedBipartition) -> Bipartition {
        let before = build_tableau(cb).expect("supported charge");
        let (trace, after) = wall_cross(&before).expect("crossing succeeds");
        self.crossings += 1;
        if let Err(v) = check_conservation(&before, &trace, &after) {
            self.violations.push(format!("{cb}: {v:?}"));
        }
        to_charged_bipartition(&after).expect("decodes").bipartition
    }
}

fn theorem(conservation: &mut Conservation) -> Outcome {
    let started = Instant::now();
    let report = run_verification(&VerifyConfig::new(12)).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    conservation.crossings += report.conservation.performed;
    if report.conservation.passed != report.conservation.performed {
        conservation.violations.push("conservation failed inside the theorem grid".into());
    }
    ensure(report.case_count == 29, || format!("expected 29 cases, got {}", report.case_count))?;
    ensure(report.all_passed(), || format!("{} failing cases", report.failure_count))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("29/29 cases, {} checks, {elapsed:.2?} single-threaded", report.check_count))
}

fn statement_audit(conservation: &mut Conservation) -> Outcome {
    let report = run_verification(&VerifyConfig::new(12).with_audit(true)).map_err(|e| e.to_string())?;
    conservation.crossings += report.conservation.performed;
    if report.conservation.passed != report.conservation.performed {
        conservation.violations.push("conservation failed inside the audited grid".into());
    }
    let audit = report.audit.as_ref().ok_or("no audit summary")?;
    ensure(audit.violations() == 0, || format!("{} violations", audit.violations()))?;
    ensure(report.all_passed(), || format!("{} failing cases", report.failure_count))?;
    for name in ["A", "B", "C", "D", "E", "F", "G"] {
        ensure(audit.statements.get(name).is_some_and(|c| c.performed > 0), || format!("{name} never checked"))?;
    }
    Ok(format!(
        "0 violations over {} steps ({} implication checks, {} hole checks)",
        audit.statements["A"].performed, audit.implications.performed, audit.last_top_hole.performed
    ))
}

fn bijectivity(conservation: &mut Conservation) -> Outcome {
    let mut maps = 0;
    for n in 0..=8 {
        let domain = enumerate_bipartitions(n);
        let expected: BTreeSet<_> = domain.iter().cloned().collect();
        for s2 in 1..=6 {
            let image: BTreeSet<_> = domain
                .iter()
                .map(|b| conservation.cross(&ChargedBipartition::new(b.clone(), Charge::new(0, s2))))
                .collect();
            ensure(image == expected, || format!("not a permutation at n={n}, s=(0,{s2})"))?;
            maps += 1;
        }
    }
    Ok(format!("{maps} maps are permutations"))
}

fn round_trip(conservation: &mut Conservation) -> Outcome {
    let mut checked = 0;
    for n in 0..=10 {
        for b in enumerate_bipartitions(n) {
            for s1 in -3..=6 {
                for s2 in s1..=6 {
                    let cb = ChargedBipartition::new(b.clone(), Charge::new(s1, s2));
                    let t = build_tableau(&cb).map_err(|e| e.to_string())?;
                    let back = to_charged_bipartition(&t).map_err(|e| e.to_string())?;
                    ensure(back == cb, || format!("{cb} decoded as {back}"))?;
                    if n <= 6 {
                        conservation.cross(&cb);
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} charged bipartitions"))
}

fn fixing(conservation: &mut Conservation) -> Outcome {
    let mut checked = 0;
    for n in 0..=8 {
        for b in enumerate_bipartitions(n) {
            for s1 in -3..=3 {
                for gap in i64::from(n) + 1..=i64::from(n) + 4 {
                    let cb = ChargedBipartition::new(b.clone(), Charge::new(s1, s1 + gap));
                    let image = conservation.cross(&cb);
                    ensure(image == b, || format!("{cb} moved to {image}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} charged bipartitions fixed"))
}

fn worked_example() -> Outcome {
    let b = Bipartition::parse("1", "1").unwrap();
    let cb = ChargedBipartition::new(b.clone(), Charge::new(0, 1));
    let t = build_tableau(&cb).map_err(|e| e.to_string())?;
    let (top, bottom) = common::build(&[1], &[1], 0, 1);
    ensure(t.top() == [-1, 0, 2] && t.bottom() == [-1, 1], || format!("built {}", t.compact()))?;
    ensure(t.top() == top && t.bottom() == bottom, || "oracle disagrees on the tableau".into())?;

    let (trace, after) = wall_cross(&t).map_err(|e| e.to_string())?;
    let oracle = common::cross(&top, &bottom);
    ensure(after.top() == [-1, 1, 2] && after.bottom() == [-1, 0], || format!("crossed to {}", after.compact()))?;
    ensure(after.top() == oracle.top && after.bottom() == oracle.bottom, || "oracle disagrees on wc".into())?;
    ensure(trace.hole_indices().len() == 1 && oracle.holes == [3], || "expected one hole".into())?;
    ensure(trace.cycle_indices().is_empty() && oracle.cycle_values.is_empty(), || "expected no cycles".into())?;
    ensure(trace.displacements() == [0, 0] && oracle.displacements == [0, 0], || "expected (0,0)".into())?;

    let image = theta(&b, 2, Charge::new(0, 1)).map_err(|e| e.to_string())?;
    let (a, c) = common::theta(&[1], &[1], 2, 0, 1);
    ensure(image == Bipartition::parse("", "1,1").unwrap(), || format!("Θ gave {image}"))?;
    ensure(a.is_empty() && c == [1, 1], || "oracle disagrees on Θ".into())?;
    ensure(phi(&cb).map_err(|e| e.to_string())? == image, || "Φ at k=0 should already give the image".into())?;
    Ok("(-1,0,2)/(-1,1) -> (-1,1,2)/(-1,0), Θ = ∅ / 1,1, 1 hole, 0 cycles, D = (0,0)".into())
}

fn structural(conservation: &Conservation) -> Outcome {
    ensure(conservation.violations.is_empty(), || conservation.violations.join("; "))?;
    ensure(conservation.crossings > 0, || "no crossings recorded".into())?;
    Ok(format!("{} crossings, 0 violations", conservation.crossings))
}

fn parameter_map() -> Outcome {
    for e in [2i64, 4, 6] {
        for k in 0..=5 {
            let p = charge_to_params(Charge::new(0, k * e + e / 2), e).map_err(|e| e.to_string())?;
            ensure(p.c1 == Rational64::new(-1, e) && p.c2 == Rational64::from_integer(k), || {
                format!("e={e} k={k} gave ({}, {})", p.c1, p.c2)
            })?;
        }
    }
    Ok("18 charges map to (-1/e, k) exactly".into())
}

#[test]
fn acceptance_criteria() {
    let mut conservation = Conservation::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 theorem: Θ keeps λ²₁ for n <= 12", theorem(&mut conservation)),
        ("2 statement audit", statement_audit(&mut conservation)),
        ("3 bijectivity of Φ for n <= 8", bijectivity(&mut conservation)),
        ("4 tableau round trip for n <= 10", round_trip(&mut conservation)),
        ("5 fixing when |λ| < s2 - s1", fixing(&mut conservation)),
        ("6 worked example vs oracle", worked_example()),
        ("7 structural conservation", structural(&conservation)),
        ("8 parameter map", parameter_map()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
