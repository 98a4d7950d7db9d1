//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any failed.
//!
//! Randomized criteria draw from a ChaCha stream seeded by
//! `WEBERCHAIN_SEED` (default 20240611).

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weberchain::dominance::root_condition_direct;
use weberchain::geometry::convex_hull;
use weberchain::symmetry::extension_about;
use weberchain::{
    build_chain, compute_threshold, condition_a, detect_extension, distance, materialize,
    minimize_on_axis, objective, root_condition_value, solve_weber, upper_bound,
    verify_threshold_by_solver, weber_at_pivot, Point2, SolveConfig, SymmetricSpec,
};

/// (n, psi, |W|) for C_n(4).
const TABLE_1: [(usize, f64, f64); 15] = [
    (4, 4.00000, 0.000000),
    (5, 3.80423, 0.381966),
    (6, 3.4641, 0.577352),
    (7, 3.12733, 0.692021),
    (8, 2.82843, 0.765369),
    (9, 2.57115, 0.815208),
    (10, 2.35114, 0.85065),
    (11, 2.16256, 0.876769),
    (12, 2.00000, 0.896575),
    (13, 1.85889, 0.911956),
    (14, 1.73553, 0.924139),
    (15, 1.62695, 0.933955),
    (16, 1.53073, 0.941979),
    (17, 1.44497, 0.948624),
    (18, 1.36808, 0.954189),
];

/// (n, psi, |W|) for C_n(5).
const TABLE_2: [(usize, f64, f64); 15] = [
    (5, 5.00000, 0.000000),
    (6, 4.83419, 0.330454),
    (7, 4.50791, 0.534378),
    (8, 4.15356, 0.667873),
    (9, 3.81793, 0.759008),
    (10, 3.51502, 0.82332),
    (11, 3.2466, 0.869949),
    (12, 3.01013, 0.904536),
    (13, 2.80181, 0.930659),
    (14, 2.61783, 0.950717),
    (15, 2.45470, 0.966323),
    (16, 2.30942, 0.978603),
    (17, 2.17944, 0.98836),
    (18, 2.06261, 0.996175),
    (19, 1.95718, 1.00000),
];

const TABLE_3: [(usize, usize); 16] = [
    (3, 6),
    (5, 19),
    (7, 38),
    (9, 63),
    (11, 94),
    (13, 132),
    (15, 176),
    (17, 226),
    (19, 283),
    (21, 346),
    (23, 415),
    (25, 490),
    (51, 2042),
    (101, 8011),
    (151, 17907),
    (199, 31102),
];

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> std::result::Result<(), String> {
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn check_table(k: usize, rows: &[(usize, f64, f64)]) -> Check {
    let start = Instant::now();
    let results: Vec<_> = rows
        .iter()
        .map(|&(n, _, _)| minimize_on_axis(&build_chain(n, k).unwrap()))
        .collect();
    let elapsed = start.elapsed();
    let mut worst = 0.0_f64;
    for (&(n, psi, x), r) in rows.iter().zip(&results) {
        let err = (r.psi_star - psi).abs().max((r.x_star - x).abs());
        worst = worst.max(err);
        ensure(err <= 1e-4, || {
            format!("n={n}: got psi={} x={}, table psi={psi} x={x}", r.psi_star, r.x_star)
        })?;
    }
    within_budget(elapsed, Duration::from_secs(1))?;
    Ok(format!("{} rows, max abs err {worst:.2e}, {elapsed:?}", rows.len()))
}

fn ac1_table_1() -> Check {
    check_table(4, &TABLE_1)
}

fn ac2_table_2() -> Check {
    let summary = check_table(5, &TABLE_2)?;
    let r19 = minimize_on_axis(&build_chain(19, 5).unwrap());
    ensure(r19.x_star == 1.0 && r19.at_root, || {
        format!("n=19 not on the root boundary path: {r19:?}")
    })?;
    Ok(summary)
}

fn ac3_table_3() -> Check {
    let start = Instant::now();
    let got: Vec<usize> = TABLE_3
        .iter()
        .map(|&(k, _)| compute_threshold(k).unwrap().n_threshold)
        .collect();
    let elapsed = start.elapsed();
    for (&(k, n), &g) in TABLE_3.iter().zip(&got) {
        ensure(g == n, || format!("N({k}) = {g}, expected {n}"))?;
    }
    within_budget(elapsed, Duration::from_millis(10))?;
    Ok(format!("16 thresholds exact, {elapsed:?}"))
}

fn ac4_threshold_cross_validation() -> Check {
    let start = Instant::now();
    for k in (3..=25).step_by(2) {
        let n = compute_threshold(k).unwrap().n_threshold;
        ensure(verify_threshold_by_solver(k, n).unwrap(), || {
            format!("k={k}: solver not at root for n=N(k)={n}")
        })?;
        ensure(!verify_threshold_by_solver(k, n - 1).unwrap(), || {
            format!("k={k}: solver at root already for n=N(k)-1={}", n - 1)
        })?;
    }
    let elapsed = start.elapsed();
    within_budget(elapsed, Duration::from_secs(5))?;
    Ok(format!("odd k in 3..=25, {elapsed:?}"))
}

fn ac5_closed_form(rng: &mut ChaCha8Rng) -> Check {
    let mut worst = 0.0_f64;
    for _ in 0..10_000 {
        let m = rng.gen_range(1..=200usize);
        let t = rng.gen_range(2 * m..=1_000_000usize);
        let diff = (root_condition_value(m, t).unwrap() - root_condition_direct(m, t)).abs();
        worst = worst.max(diff);
        ensure(diff < 1e-10, || format!("m={m} t={t}: |delta| = {diff:e}"))?;
    }
    Ok(format!("10000 pairs, max |delta| {worst:.2e}"))
}

fn ac6_convexity(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..1000 {
        let n = rng.gen_range(3..=200usize);
        let k = rng.gen_range(1..=n);
        let c = build_chain(n, k).unwrap();
        let a: f64 = rng.gen_range(0.0..1.0);
        let b: f64 = rng.gen_range(a..=1.0);
        let mid = objective(&c, 0.5 * (a + b)).unwrap();
        let chord = 0.5 * (objective(&c, a).unwrap() + objective(&c, b).unwrap());
        ensure(mid <= chord + 1e-12, || {
            format!("n={n} k={k} a={a} b={b}: {mid} > {chord}")
        })?;
    }
    Ok("1000 samples".into())
}

fn ac7_monotonicity() -> Check {
    // k = 1 is excluded: its optimum is the vertex itself with psi = 0 for every n.
    let mut pairs = 0usize;
    for k in 2..=11 {
        let solved: Vec<_> = (k.max(3)..=40)
            .map(|n| (n, minimize_on_axis(&build_chain(n, k).unwrap())))
            .collect();
        for (i, (n1, r1)) in solved.iter().enumerate() {
            for (n2, r2) in &solved[i + 1..] {
                pairs += 1;
                ensure(r1.psi_star > r2.psi_star, || {
                    format!("psi not decreasing: k={k} n1={n1} n2={n2}")
                })?;
                if r1.x_star < 1.0 && r2.x_star < 1.0 {
                    ensure(r1.x_star < r2.x_star, || {
                        format!("|W| not increasing: k={k} n1={n1} n2={n2}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{pairs} (k, n1, n2) triples"))
}

fn random_rigid(rng: &mut ChaCha8Rng) -> impl Fn(Point2) -> Point2 {
    let rot = Point2::from_angle(rng.gen_range(-PI..PI));
    let shift = Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    move |p: Point2| Point2::new(rot.x * p.x - rot.y * p.y, rot.y * p.x + rot.x * p.y) + shift
}

fn ac8_oracle_equivalence(rng: &mut ChaCha8Rng) -> Check {
    let cfg = SolveConfig::default();
    let mut worst = 0.0_f64;
    for (k, rows) in [(4usize, &TABLE_1), (5, &TABLE_2)] {
        for &(n, _, _) in rows.iter() {
            let chain = build_chain(n, k).unwrap();
            let axis = minimize_on_axis(&chain);
            let sol = solve_weber(chain.vertices(), &cfg).unwrap();
            let err = distance(sol.location, Point2::new(axis.x_star, 0.0));
            worst = worst.max(err);
            ensure(err < 1e-7, || format!("C_{n}({k}): solver off by {err:e}"))?;
        }
    }

    for trial in 0..100 {
        let place = random_rigid(rng);
        let angle = rng.gen_range(2.0 * PI / 3.0 + 0.01..PI - 0.01);
        let apex = place(Point2::ORIGIN);
        let a = place(Point2::new(rng.gen_range(0.2..3.0), 0.0));
        let b = place(Point2::from_angle(angle) * rng.gen_range(0.2..3.0));
        let sol = solve_weber(&[a, apex, b], &cfg).unwrap();
        ensure(sol.at_fixed_point_index == Some(1) && sol.location == apex, || {
            format!("obtuse triangle {trial}: {sol:?}")
        })?;
    }

    let mut quads = 0;
    while quads < 100 {
        let pts: Vec<Point2> = (0..4)
            .map(|_| Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let hull = convex_hull(&pts);
        if hull.len() != 4 {
            continue;
        }
        let (d1, d2) = (hull[2] - hull[0], hull[3] - hull[1]);
        let denom = d1.cross(d2);
        if denom.abs() < 1e-3 {
            continue;
        }
        quads += 1;
        let crossing = hull[0] + d1 * ((hull[1] - hull[0]).cross(d2) / denom);
        let sol = solve_weber(&hull, &cfg).unwrap();
        let err = distance(sol.location, crossing);
        ensure(err < 1e-9, || format!("quad {hull:?}: off by {err:e}"))?;
    }
    Ok(format!(
        "30 chains (max err {worst:.1e}), 100 obtuse triangles, 100 convex quads"
    ))
}

/// Sorted half-angles in [sep, pi - sep] with pairwise separation >= sep.
fn random_half_angles(rng: &mut ChaCha8Rng, m: usize, sep: f64) -> Vec<f64> {
    loop {
        let mut t: Vec<f64> = (0..m).map(|_| rng.gen_range(sep..PI - sep)).collect();
        t.sort_by(f64::total_cmp);
        if t.windows(2).all(|w| w[1] - w[0] >= sep) {
            return t;
        }
    }
}

fn random_world_spec(rng: &mut ChaCha8Rng, half_angles: Vec<f64>) -> SymmetricSpec {
    let center = Point2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let pivot = center + Point2::from_angle(rng.gen_range(-PI..PI));
    SymmetricSpec::new(pivot, center, half_angles).unwrap()
}

fn ac9_round_trip(rng: &mut ChaCha8Rng) -> Check {
    let mut worst = 0.0_f64;
    for trial in 0..500 {
        let m = rng.gen_range(1..=8);
        let angles = random_half_angles(rng, m, 1e-3);
        let spec = random_world_spec(rng, angles);
        let pts = materialize(&spec);
        let report = detect_extension(&pts).unwrap();
        ensure(report.is_extension_member, || format!("spec {trial} not detected: {spec:?}"))?;
        ensure(report.pivot == Some(spec.pivot()), || {
            format!("spec {trial}: pivot {:?} vs {:?}", report.pivot, spec.pivot())
        })?;
        let got = report.half_angles.unwrap();
        for (g, e) in got.iter().zip(spec.half_angles()) {
            worst = worst.max((g - e).abs());
        }
        ensure(worst < 1e-9, || format!("spec {trial}: half-angle error {worst:e}"))?;
    }
    Ok(format!("500 specs, max half-angle err {worst:.1e}"))
}

/// Spec satisfying condition A: sum of sin(theta/2) drawn below 1/2.
fn random_satisfying_spec(rng: &mut ChaCha8Rng) -> SymmetricSpec {
    loop {
        let m = rng.gen_range(1..=6);
        let total = rng.gen_range(0.05..0.5);
        let w: Vec<f64> = (0..m).map(|_| rng.gen_range(0.1..1.0)).collect();
        let sum: f64 = w.iter().sum();
        let angles: Vec<f64> = w.iter().map(|wi| 2.0 * (total * wi / sum).asin()).collect();
        let mut sorted = angles.clone();
        sorted.sort_by(f64::total_cmp);
        if sorted.windows(2).all(|p| p[1] - p[0] >= 1e-3) {
            return random_world_spec(rng, angles);
        }
    }
}

fn random_violating_spec(rng: &mut ChaCha8Rng) -> SymmetricSpec {
    loop {
        let m = rng.gen_range(2..=6);
        let angles = random_half_angles(rng, m, 0.05);
        let spec = random_world_spec(rng, angles);
        if condition_a(&spec) > 0.05 {
            return spec;
        }
    }
}

/// Slides every non-pivot point along its ray from the pivot by a factor in [0.1, 3].
fn slide(rng: &mut ChaCha8Rng, spec: &SymmetricSpec) -> Vec<Point2> {
    let pivot = spec.pivot();
    materialize(spec)
        .into_iter()
        .map(|p| pivot + (p - pivot) * rng.gen_range(0.1..=3.0))
        .collect()
}

fn ac10_extension_end_to_end(rng: &mut ChaCha8Rng) -> Check {
    let cfg = SolveConfig::default();
    for trial in 0..200 {
        let spec = random_satisfying_spec(rng);
        let pts = slide(rng, &spec);
        ensure(weber_at_pivot(&pts) == Ok(true), || {
            format!("satisfying spec {trial}: detector says {:?}", weber_at_pivot(&pts))
        })?;
        let sol = solve_weber(&pts, &cfg).unwrap();
        ensure(sol.at_fixed_point_index == Some(0), || {
            format!("satisfying spec {trial}: solver ended at {sol:?}")
        })?;
    }
    for trial in 0..200 {
        let spec = random_violating_spec(rng);
        let pts = slide(rng, &spec);
        let verdict = extension_about(&pts, 0).map(|e| e.condition_a_value <= 0.0);
        ensure(verdict == Some(false), || {
            format!("violating spec {trial}: pivot verdict {verdict:?}")
        })?;
        ensure(weber_at_pivot(&pts) == Ok(false), || {
            format!("violating spec {trial}: detector says {:?}", weber_at_pivot(&pts))
        })?;
        let sol = solve_weber(&pts, &cfg).unwrap();
        ensure(
            sol.at_fixed_point_index != Some(0) && distance(sol.location, pts[0]) > 1e-6,
            || format!("violating spec {trial}: solver ended at pivot {sol:?}"),
        )?;
    }
    Ok("200 satisfying + 200 violating slid sets".into())
}

fn ac11_bound() -> Check {
    for k in (3..=499).step_by(2) {
        let n = compute_threshold(k).unwrap().n_threshold;
        let m = ((k - 1) / 2) as f64;
        let bound = (PI * m * (m + 1.0) + 1.0).ceil() as usize;
        ensure(bound == upper_bound(k).unwrap() && n <= bound, || {
            format!("k={k}: N={n} bound={bound}")
        })?;
    }
    Ok("odd k in 3..=499".into())
}

fn main() -> ExitCode {
    let seed = std::env::var("WEBERCHAIN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20240611u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    println!("acceptance suite (seed {seed})");

    let mut failed = 0;
    let mut report = |id: &str, name: &str, outcome: Check| {
        match outcome {
            Ok(detail) => println!("PASS  {id:<5} {name:<36} {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {id:<5} {name:<36} {why}");
            }
        }
    };

    report("AC1", "chain table reproduction (k=4)", ac1_table_1());
    report("AC2", "chain table reproduction (k=5)", ac2_table_2());
    report("AC3", "published thresholds N(k)", ac3_table_3());
    report("AC4", "threshold vs solver", ac4_threshold_cross_validation());
    report("AC5", "closed form vs direct sum", ac5_closed_form(&mut rng));
    report("AC6", "midpoint convexity", ac6_convexity(&mut rng));
    report("AC7", "monotonicity in n", ac7_monotonicity());
    report("AC8", "iterative solver oracle", ac8_oracle_equivalence(&mut rng));
    report("AC9", "symmetric set round trip", ac9_round_trip(&mut rng));
    report("AC10", "extension family end to end", ac10_extension_end_to_end(&mut rng));
    report("AC11", "quadratic upper bound", ac11_bound());

    if failed == 0 {
        println!("all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
