//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints a PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use ivtrnn::reference::{
    published_ranking, reconcile_aggregation, reconcile_scores, reference_dataset, Regime, SCORE_CONSISTENCY_TOLERANCE,
    SCORE_MATCH_TOLERANCE, TABLE_IV_TOLERANCE,
};
use ivtrnn::sets::{reference_sets, NeutroElement, SvnsElement};
use ivtrnn::{
    accuracy, accuracy_triangular, ivtrnwaa, ivtrnwaa_pairwise_oracle, max_abs_diff, round_half_even, score, score_triangular, Channel,
    Ivtrnn, Level, NeutrosophicOps,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Check {
    let data = reference_dataset();
    let pw = *data.published_combined("PW").ok_or("no PW row")?;
    let start = Instant::now();
    let s = score(&pw);
    let elapsed = start.elapsed();
    let published = data.published_score("PW").ok_or("no PW score")?;
    ensure(published == 0.8016, format!("published PW score {published}"))?;
    ensure((s - 0.8016).abs() <= SCORE_MATCH_TOLERANCE, format!("PW score {s}"))?;
    ensure(elapsed < Duration::from_millis(1), format!("took {elapsed:?}"))?;
    Ok(format!("PW score {s:.6} vs 0.8016 in {elapsed:?}"))
}

fn criterion_2() -> Check {
    let data = reference_dataset();
    let rec = reconcile_aggregation(&data, Regime::Uniform025);
    let pw = rec.row("PW").ok_or("no PW row")?;
    let lt = pw.block(Level::Lower, Channel::Truth).computed.map(|v| round_half_even(v, 4));
    ensure(lt == [0.2555, 0.3732, 0.4719, 0.5838], format!("PW lower truth {lt:?}"))?;
    let plateau = pw.block(Level::Lower, Channel::Indeterminacy).computed[1];
    ensure((plateau - 0.1f64.powf(1.25)).abs() <= 1e-12, format!("plateau {plateau}"))?;
    ensure(round_half_even(plateau, 4) == 0.0562, format!("plateau {plateau}"))?;
    for alt in ["PW", "CT", "IR", "SM"] {
        let row = rec.row(alt).ok_or(alt)?;
        for ch in [Channel::Truth, Channel::Indeterminacy] {
            let b = row.block(Level::Lower, ch);
            let worst = b.computed.iter().zip(b.published).map(|(c, p)| (round_half_even(*c, 4) - p).abs()).fold(0.0, f64::max);
            ensure(worst <= TABLE_IV_TOLERANCE + 1e-12, format!("{alt} lower {} off by {worst}", ch.name()))?;
        }
    }
    ensure(rec.matching() == ["PW", "CT", "IR", "SM"], format!("matching rows {:?}", rec.matching()))?;
    let stated = reconcile_aggregation(&data, Regime::Stated);
    ensure(stated.matching().is_empty(), format!("stated regime matches {:?}", stated.matching()))?;
    Ok("PW CT IR SM match; TF FR MM CK reported MISMATCH; stated regime matches none".into())
}

fn criterion_3() -> Check {
    let data = reference_dataset();
    let expected = ["IR", "SM", "CK", "PW", "FR", "TF", "CT", "MM"];
    let report = published_ranking(&data);
    ensure(report.ordering == expected, format!("ordering {:?}", report.ordering))?;
    ensure(data.published_score("IR") == Some(0.8232), "IR published score")?;
    ensure(data.published_score("MM") == Some(0.7593), "MM published score")?;
    let rec = reconcile_scores(&data);
    ensure(rec.ordering_agrees, "ordering disagrees with published")?;
    let worst = rec.rows.iter().map(|r| r.delta.abs()).fold(0.0, f64::max);
    ensure(worst <= SCORE_CONSISTENCY_TOLERANCE, format!("largest score delta {worst}"))?;
    Ok(format!("{}; largest |delta| {worst:.5}", expected.join(" > ")))
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.random_range(1..=5);
        let xs: Vec<Ivtrnn> = (0..n).map(|_| common::ivtrnn(&mut rng)).collect();
        let w = if rng.random_bool(0.5) { common::strict_weights(&mut rng, n) } else { common::relaxed_weights(&mut rng, n) };
        let closed = ivtrnwaa(&xs, &w).map_err(|e| e.to_string())?;
        let folded = ivtrnwaa_pairwise_oracle(&xs, &w).map_err(|e| e.to_string())?;
        ensure(closed.lower.heights() == folded.lower.heights() && closed.upper.heights() == folded.upper.heights(), "heights differ")?;
        worst = worst.max(max_abs_diff(&closed, &folded));
    }
    ensure(worst <= 1e-12, format!("max deviation {worst:e}"))?;
    Ok(format!("1000 instances, max deviation {worst:.1e}"))
}

const CASES: usize = 500;
const TOL: f64 = 1e-12;

fn close(x: &Ivtrnn, y: &Ivtrnn) -> bool {
    max_abs_diff(x, y) <= TOL && x.lower.heights() == y.lower.heights() && x.upper.heights() == y.upper.heights()
}

fn property(name: &str, mut case: impl FnMut(&mut ChaCha8Rng) -> Option<bool>) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(name.bytes().map(u64::from).sum());
    let mut done = 0;
    let mut attempts = 0;
    while done < CASES {
        attempts += 1;
        ensure(attempts < CASES * 100, format!("{name}: too few valid inputs"))?;
        match case(&mut rng) {
            Some(true) => done += 1,
            Some(false) => return Err(format!("{name} failed on case {done}")),
            None => {}
        }
    }
    Ok(())
}

fn lambda(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.05..5.0)
}

fn criterion_5() -> Check {
    use common::ivtrnn as gen;
    property("oplus commutative", |r| {
        let (x, y) = (gen(r), gen(r));
        Some(close(&x.oplus(&y), &y.oplus(&x)))
    })?;
    property("otimes commutative", |r| {
        let (x, y) = (gen(r), gen(r));
        Some(close(&x.otimes(&y), &y.otimes(&x)))
    })?;
    property("oplus associative", |r| {
        let (x, y, z) = (gen(r), gen(r), gen(r));
        Some(close(&x.oplus(&y).oplus(&z), &x.oplus(&y.oplus(&z))))
    })?;
    property("otimes associative", |r| {
        let (x, y, z) = (gen(r), gen(r), gen(r));
        Some(close(&x.otimes(&y).otimes(&z), &x.otimes(&y.otimes(&z))))
    })?;
    property("unit scale and power", |r| {
        let x = gen(r);
        Some(close(&x.scale(1.0).ok()?, &x) && close(&x.pow(1.0).ok()?, &x))
    })?;
    property("scale distributes over oplus", |r| {
        let (x, y, l) = (gen(r), gen(r), lambda(r));
        Some(close(&x.oplus(&y).scale(l).ok()?, &x.scale(l).ok()?.oplus(&y.scale(l).ok()?)))
    })?;
    property("scalar sum distributes", |r| {
        let (x, l1, l2) = (gen(r), lambda(r), lambda(r));
        Some(close(&x.scale(l1 + l2).ok()?, &x.scale(l1).ok()?.oplus(&x.scale(l2).ok()?)))
    })?;
    property("closure and ordering", |r| {
        let (x, y, l) = (gen(r), gen(r), lambda(r));
        let results = [x.oplus(&y), x.otimes(&y), x.scale(l).ok()?, x.pow(l).ok()?];
        Some(results.iter().all(common::is_valid))
    })?;
    property("aggregation idempotent", |r| {
        let x = gen(r);
        let n = r.random_range(1..=5);
        let w = common::strict_weights(r, n);
        Some(close(&ivtrnwaa(&vec![x; n], &w).ok()?, &x))
    })?;
    property("aggregation bounded", |r| {
        let n = r.random_range(1..=5);
        let xs: Vec<Ivtrnn> = (0..n).map(|_| gen(r)).collect();
        let w = common::strict_weights(r, n);
        let agg = ivtrnwaa(&xs, &w).ok()?;
        Some(Level::BOTH.iter().all(|&l| {
            Channel::ALL.iter().all(|&ch| {
                (0..4).all(|k| {
                    let vals = xs.iter().map(|x| x.level(l).channel(ch).components()[k]);
                    let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
                    let v = agg.level(l).channel(ch).components()[k];
                    v >= lo - TOL && v <= hi + TOL
                })
            })
        }))
    })?;
    property("score and accuracy ranges", |r| {
        let x = gen(r);
        Some((0.0..=1.0).contains(&score(&x)) && (-1.0..=1.0).contains(&accuracy(&x)))
    })?;
    property("score monotone under perturbation", |r| {
        let x = gen(r);
        let level = Level::BOTH[r.random_range(0..2)];
        let channel = Channel::ALL[r.random_range(0..3)];
        let k = r.random_range(0..4);
        let step = if r.random_bool(0.5) { 0.01 } else { -0.01 };
        let y = common::with_component(&x, level, channel, k, x.level(level).channel(channel).components()[k] + step)?;
        let delta = score(&y) - score(&x);
        let towards_better = (channel == Channel::Truth) == (step > 0.0);
        Some(if towards_better { delta > 0.0 } else { delta < 0.0 })
    })?;
    property("triangular reductions exact", |r| {
        let x = common::triangular_ivtrnn(r);
        Some(score_triangular(&x).ok()? == score(&x) && accuracy_triangular(&x).ok()? == accuracy(&x))
    })?;
    Ok(format!("13 properties x {CASES} cases"))
}

fn criterion_6() -> Check {
    let refs = reference_sets();
    macro_rules! laws {
        ($a:expr, $b:expr) => {{
            let (a, b) = (&$a, &$b);
            let lhs = a.union(b).map_err(|e| e.to_string())?.complement();
            let rhs = a.complement().intersection(&b.complement()).map_err(|e| e.to_string())?;
            ensure(lhs.max_abs_diff(&rhs).unwrap() == 0.0, "De Morgan (union)")?;
            let lhs = a.intersection(b).map_err(|e| e.to_string())?.complement();
            let rhs = a.complement().union(&b.complement()).map_err(|e| e.to_string())?;
            ensure(lhs.max_abs_diff(&rhs).unwrap() == 0.0, "De Morgan (intersection)")?;
            ensure(a.complement().complement().max_abs_diff(a).unwrap() <= 1e-15, "double complement")?;
            ensure(a.union(a).unwrap().max_abs_diff(a).unwrap() == 0.0, "union idempotency")?;
            ensure(a.intersection(a).unwrap().max_abs_diff(a).unwrap() == 0.0, "intersection idempotency")?;
        }};
    }
    laws!(refs.continuous_svns, refs.continuous_svns.complement());
    laws!(refs.discrete_svns, refs.discrete_svns.complement());
    laws!(refs.continuous_ivns, refs.continuous_ivns.complement());
    laws!(refs.discrete_ivns, refs.discrete_ivns.complement());
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..CASES {
        laws!(common::svns_set(&mut rng), common::svns_set(&mut rng));
        laws!(common::ivns_set(&mut rng), common::ivns_set(&mut rng));
    }
    let bkup = refs.discrete_svns.get("BKUP").ok_or("no BKUP")?;
    let expected = SvnsElement::new(0.2, 0.8, 0.7).unwrap();
    ensure(bkup.complement().max_abs_diff(&expected) <= 1e-15, format!("complement {:?}", bkup.complement().triple()))?;
    Ok(format!("reference sets plus {CASES} random SVNS and IVNS pairs; complement (0.7,0.2,0.2) = (0.2,0.8,0.7)"))
}

fn criterion_7() -> Check {
    let (l, s) = (Ivtrnn::largest(), Ivtrnn::smallest());
    ensure(score(&l) == 1.0 && accuracy(&l) == 1.0, format!("largest ({}, {})", score(&l), accuracy(&l)))?;
    ensure(score(&s) == 0.0 && accuracy(&s) == -1.0, format!("smallest ({}, {})", score(&s), accuracy(&s)))?;
    Ok("largest (1, 1); smallest (0, -1)".into())
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ivtrnn")).args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), format!("{args:?} exited with {}", out.status))?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn criterion_8(suite_start: Instant) -> Check {
    let t4 = run_cli(&["reproduce", "--table", "4", "--regime", "uniform025"])?;
    ensure(t4.contains("MATCH: PW CT IR SM"), "table 4 MATCH line")?;
    ensure(t4.contains("MISMATCH: TF FR MM CK"), "table 4 MISMATCH line")?;
    let t5 = run_cli(&["reproduce", "--table", "5"])?;
    ensure(t5.contains("published ordering: IR > SM > CK > PW > FR > TF > CT > MM"), "table 5 ordering")?;
    ensure(t5.contains("ordering MATCH"), "table 5 ordering verdict")?;
    let pw = t5.lines().find(|l| l.starts_with("PW ")).ok_or("no PW line")?;
    ensure(pw.contains("MATCH") && !pw.contains("MISMATCH"), format!("PW line: {pw}"))?;
    let elapsed = suite_start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("suite took {elapsed:?}"))?;
    Ok(format!("reproduce verdicts emitted; suite ran in {:.2}s", elapsed.as_secs_f64()))
}

fn main() {
    let start = Instant::now();
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(start),
    ];
    let mut failed = 0;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {}: PASS  {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
