//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, each checked
//! at its stated tolerance and time limit. Run with `--nocapture` to see the
//! lines when everything passes.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use vardesign::bounds::{
    fisher, fisher_certificate, johnson_code, johnson_improved_check, johnson_improved_max_m, mullin_vanstone,
    nonincident_lines_bound, plackett_burman, stanton_kalbfleisch, stinson_best_ell, stinson_bound,
    two_point_error_bound, west_diagonal_bound, PlaneNonincidence,
};
use vardesign::designs::{
    intersection_profile, validate_bibd, validate_oa, validate_pbd, validate_r_lambda, BibdParams, RLambdaParams,
};
use vardesign::moments::{f_epsilon, summarize, summarize_integers, variance_slack};
use vardesign::oracle::{
    enumerate_bibds_with, enumerate_pbds_with_block, fano_plane, hyperoval_pg24, max_constant_weight_code,
    oa_linear, projective_plane, SearchBudget, SearchStatus,
};
use vardesign::sampling::{exact_failure, good_row_lower_bound, simulate, SplitMix64, TwoPointInstance};
use vardesign::{ratio, Rational};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:.2?}, limit {limit:.0?}"))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    let lists = prop::collection::vec(rational(), 1..16);
    runner
        .run(&(lists, any::<bool>()), |(mut values, make_constant)| {
            if make_constant {
                let first = values[0].clone();
                values.iter_mut().for_each(|v| *v = first.clone());
            }
            let slack = variance_slack(&summarize(&values).unwrap()).unwrap();
            let constant = values.iter().all(|v| v == &values[0]);
            prop_assert!(!slack.is_negative());
            prop_assert_eq!(slack.is_zero(), constant);
            Ok(())
        })
        .map_err(|e| format!("variance: {e}"))?;
    runner
        .run(&prop::collection::vec(-10_000i64..10_000, 1..30), |values| {
            let ms = summarize_integers(&values).unwrap();
            prop_assert_eq!(ms.s2.clone(), Rational::from(2) * &ms.sstar + &ms.s1);
            Ok(())
        })
        .map_err(|e| format!("S2 = 2S* + S1: {e}"))?;
    let pos = (1i64..500, 1i64..50).prop_map(|(n, d)| Rational::new(n, d).unwrap());
    let nonneg = (0i64..500, 1i64..50).prop_map(|(n, d)| Rational::new(n, d).unwrap());
    runner
        .run(&(pos, nonneg.clone(), nonneg.clone(), nonneg), |(b, extra, e1, de)| {
            let c = &b + extra;
            let e2 = &e1 + de;
            let f1 = f_epsilon(&b, &c, &e1).unwrap();
            let f2 = f_epsilon(&b, &c, &e2).unwrap();
            prop_assert!(f2 >= f1);
            prop_assert!(f1 >= &b * &b / &c);
            Ok(())
        })
        .map_err(|e| format!("f_epsilon monotonicity: {e}"))?;
    within(Duration::from_secs(5), start)?;
    Ok(format!("3 x 10^4 cases in {:.2?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for (v, k, lambda) in [(7usize, 3usize, 1u64), (9, 3, 1), (13, 4, 1)] {
        let r = lambda * (v as u64 - 1) / (k as u64 - 1);
        let b = v as u64 * r / k as u64;
        let params = BibdParams::new(v as u64, b, r, k as u64, lambda);
        let certificate = fisher_certificate(&params);
        let mut count = 0u64;
        let mut failure: Option<String> = None;
        let budget = SearchBudget::new(10_000_000, u64::MAX).unwrap();
        let stats = enumerate_bibds_with(v, k, lambda, budget, |s| {
            count += 1;
            if failure.is_some() {
                return;
            }
            let nb = s.num_blocks();
            if (nb as u64) < v as u64 || !validate_bibd(s, &params).is_valid() {
                failure = Some(format!("design {count} of {params} fails b >= v or validation"));
                return;
            }
            let prof: Vec<i64> = intersection_profile(s, nb - 1).unwrap().iter().map(|&a| a as i64).collect();
            let slack = variance_slack(&summarize_integers(&prof).unwrap()).unwrap();
            if slack.signum() != certificate.signum() || slack.is_negative() {
                failure = Some(format!("{params}: slack {slack} vs certificate {certificate}"));
                return;
            }
            if nb == v {
                let all_lambda = (0..nb).all(|i| (i + 1..nb).all(|j| s.intersection(i, j).unwrap() as u64 == lambda));
                if !all_lambda {
                    failure = Some(format!("{params}: symmetric design with a block intersection != lambda"));
                }
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(f) = failure {
            return Err(f);
        }
        ensure(stats.status == SearchStatus::Complete, || format!("{params}: {:?}", stats.status))?;
        ensure(count > 0, || format!("{params}: no designs found"))?;
        ensure(fisher(&params).map(|r| r.satisfied).unwrap_or(false), || format!("{params}: fisher fails"))?;
        summary.push(format!("{params}: {count}"));
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{} in {:.2?}", summary.join(", "), start.elapsed()))
}

fn criterion_3() -> Outcome {
    for p in [2u64, 3, 5, 7] {
        let oa = oa_linear(p, p).map_err(|e| e.to_string())?;
        ensure(validate_oa(&oa).is_valid(), || format!("oa_linear({p},{p}) invalid"))?;
        let pass = plackett_burman(p, p, 1).map_err(|e| e.to_string())?;
        ensure(pass.satisfied, || format!("plackett_burman({p},{p},1) fails"))?;
        let fail = plackett_burman(p + 2, p, 1).map_err(|e| e.to_string())?;
        ensure(!fail.satisfied, || format!("plackett_burman({},{p},1) passes", p + 2))?;
    }
    Ok("p = 2, 3, 5, 7".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let bound = johnson_code(7, 3, 2).map_err(|e| e.to_string())?.applies().ok_or("johnson_code inapplicable")?;
    ensure(bound.rhs == Rational::from(7), || format!("johnson_code(7,3,2) = {}", bound.rhs))?;
    let budget = SearchBudget::new(10_000_000, 1).unwrap();
    let size = max_constant_weight_code(7, 3, 4, budget).map_err(|e| e.to_string())?.size;
    ensure(size == 7, || format!("max_constant_weight_code(7,3,4) = {size}"))?;
    let max_m = johnson_improved_max_m(7, 3, 1).map_err(|e| e.to_string())?.finite();
    ensure(max_m == Some(7), || format!("johnson_improved_max_m(7,3,1) = {max_m:?}"))?;
    let at7 = johnson_improved_check(7, 7, 3, 1).map_err(|e| e.to_string())?;
    ensure(at7.equality, || "m = 7 is not an equality case".into())?;
    let at8 = johnson_improved_check(8, 7, 3, 1).map_err(|e| e.to_string())?;
    ensure(!at8.satisfied && at8.lhs == Rational::from(56) && at8.rhs == Rational::from(60), || {
        format!("m = 8 gives {} vs {}", at8.lhs, at8.rhs)
    })?;
    within(Duration::from_secs(10), start)?;
    Ok(format!("code size 7 = bound 7, m = 7 tight, 56 < 60 at m = 8 ({:.2?})", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let sk = stanton_kalbfleisch(7, 3).map_err(|e| e.to_string())?;
    ensure(sk.rhs == Rational::from(7), || format!("stanton_kalbfleisch(7,3) = {}", sk.rhs))?;
    let budget = SearchBudget::new(10_000_000, u64::MAX).unwrap();
    let six = enumerate_pbds_with_block(7, 3, 6, budget).map_err(|e| e.to_string())?;
    ensure(six.found.is_empty() && six.status == SearchStatus::Complete, || "a 6-block PBD was found".into())?;
    let seven = enumerate_pbds_with_block(7, 3, 7, budget).map_err(|e| e.to_string())?;
    let fano = fano_plane();
    let mut fano_blocks = fano.block_lists();
    fano_blocks.sort();
    let has_fano = seven.found.iter().any(|s| {
        let mut b = s.block_lists();
        b.sort();
        b == fano_blocks
    });
    ensure(has_fano, || "Fano plane missing from the 7-block search".into())?;
    let fano_params = BibdParams::new(7, 7, 3, 3, 1);
    ensure(seven.found.iter().all(|s| validate_bibd(s, &fano_params).is_valid()), || {
        "a 7-block PBD is not a Fano plane".into()
    })?;
    let start = Instant::now();
    let mut cases = 0;
    for v in 3..=60u64 {
        for k in 2..v {
            let sk = stanton_kalbfleisch(v, k).unwrap().rhs;
            let st = stinson_bound(v, k, stinson_best_ell(v, k).unwrap()).unwrap().rhs;
            ensure(st >= sk, || format!("stinson < stanton-kalbfleisch at v={v}, k={k}"))?;
            cases += 1;
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{} Fano planes at b = 7, none at b = 6; dominance over {cases} cases", seven.found.len()))
}

fn criterion_6() -> Outcome {
    for q in [2u64, 3, 4] {
        let pg = projective_plane(q).map_err(|e| e.to_string())?;
        let v = q * q + q + 1;
        let rl = RLambdaParams { v, b: pg.num_blocks() as u64, r: q + 1, lambda: 1 };
        ensure(validate_r_lambda(&pg, &rl).is_valid(), || format!("PG(2,{q}) is not a ({},1)-design", q + 1))?;
        let mv = mullin_vanstone(v, q + 1, 1).map_err(|e| e.to_string())?.check(pg.num_blocks() as u64);
        ensure(mv.equality, || format!("PG(2,{q}): b = {} vs {}", mv.lhs, mv.rhs))?;
    }
    let h = hyperoval_pg24();
    let (s, t) = (h.points.len() as u64, h.external_lines.len() as u64);
    ensure(s == 6 && t == 6, || format!("hyperoval has s = {s}, t = {t}"))?;
    ensure(validate_pbd(&h.plane).is_valid(), || "PG(2,4) is not a PBD".into())?;
    let west = west_diagonal_bound(4).map_err(|e| e.to_string())?;
    ensure(west.closed_form == Some(Rational::from(6)) && west.integer_max == 6, || format!("{west:?}"))?;
    let ni = nonincident_lines_bound(&PlaneNonincidence { q: 4, s, t }).map_err(|e| e.to_string())?;
    ensure(ni.equality, || format!("nonincident: {} vs {}", ni.lhs, ni.rhs))?;
    Ok("q = 2, 3, 4 tight; hyperoval s = t = 6".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let example = exact_failure(&TwoPointInstance::linear(5, 3, [0, 1]).unwrap()).map_err(|e| e.to_string())?;
    ensure(example.exact_failure == ratio(2, 25) && example.bound == ratio(2, 11), || {
        format!("example gives {} and {}", example.exact_failure, example.bound)
    })?;
    let mut instances = 0u64;
    for p in [2u64, 3, 5, 7] {
        for k in 2..=p {
            for mask in 0..1u64 << p {
                let bad: Vec<usize> = (0..p as usize).filter(|i| mask >> i & 1 == 1).collect();
                let inst = TwoPointInstance::linear(p, k, bad).unwrap();
                let r = exact_failure(&inst).map_err(|e| format!("p={p} k={k} Y={mask:b}: {e}"))?;
                let bound = two_point_error_bound(k, &inst.epsilon()).unwrap();
                let lower = good_row_lower_bound(p, k, inst.good_count()).unwrap();
                ensure(r.exact_failure <= bound, || format!("p={p} k={k} Y={mask:b}: failure above bound"))?;
                ensure(Rational::from(r.good_rows) >= lower, || format!("p={p} k={k} Y={mask:b}: N below bound"))?;
                instances += 1;
            }
        }
    }
    // Monte Carlo sub-check, 5 standard errors
    let mc = simulate(&TwoPointInstance::linear(5, 3, [0, 1]).unwrap(), 10_000, 42).map_err(|e| e.to_string())?;
    let emp = mc.empirical.unwrap();
    let (p_hat, p0): (f64, f64) = (emp.failures as f64 / 1e4, 2.0 / 25.0);
    let se = (p0 * (1.0 - p0) / 1e4).sqrt();
    ensure((p_hat - p0).abs() <= 5.0 * se, || format!("empirical {p_hat} vs 0.08 (5 se = {})", 5.0 * se))?;
    ensure(SplitMix64::nth_output(42, 0) == SplitMix64::new(42).next_u64(), || "generator streams disagree".into())?;
    within(Duration::from_secs(60), start)?;
    Ok(format!("{instances} instances exhaustively; empirical {p_hat} at seed 42 ({:.2?})", start.elapsed()))
}

fn criterion_8() -> Outcome {
    ensure(common::CASES.len() >= 25, || format!("only {} invocations", common::CASES.len()))?;
    let mismatches = common::golden_mismatches(false);
    ensure(mismatches.is_empty(), || mismatches.join("\n"))?;
    let fixtures = common::manifest().join("tests/fixtures");
    let mut round_trips = 0;
    for entry in std::fs::read_dir(&fixtures).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        if name.ends_with(".design") {
            let Ok(d) = vardesign::formats::parse_design(&text) else { continue };
            let canon = vardesign::formats::serialize_design(&d);
            let again = vardesign::formats::parse_design(&canon).map_err(|e| format!("{name}: {e}"))?;
            ensure(again == d && vardesign::formats::serialize_design(&again) == canon, || name.clone())?;
            round_trips += 1;
        } else if name.ends_with(".txt") {
            let oa = vardesign::formats::parse_oa(&text).map_err(|e| format!("{name}: {e}"))?;
            let canon = vardesign::formats::serialize_oa(&oa);
            let again = vardesign::formats::parse_oa(&canon).map_err(|e| format!("{name}: {e}"))?;
            ensure(again == oa && vardesign::formats::serialize_oa(&again) == canon, || name.clone())?;
            round_trips += 1;
        }
    }
    Ok(format!("{} invocations byte-identical; {round_trips} fixtures round-trip", common::CASES.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 variance core", criterion_1),
        ("2 fisher", criterion_2),
        ("3 plackett-burman tightness", criterion_3),
        ("4 johnson", criterion_4),
        ("5 stanton-kalbfleisch tightness and stinson dominance", criterion_5),
        ("6 mullin-vanstone and hyperoval", criterion_6),
        ("7 two-point sampling", criterion_7),
        ("8 cli golden files and round trips", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                println!("[FAIL] {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
