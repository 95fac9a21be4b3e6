//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Expected values are frozen here independently of `reference.rs`, so a typo
//! in the bundled verifier cannot hide behind the same constant.

use std::process::ExitCode;
use std::time::Instant;

use greylp::{
    bounds, build_positioned, check_monotonicity, enumerate_vertices_oracle, lambda_satisfaction, lambda_sweep,
    pleased_degree, solve_max, uniform_value, Axis, GreyLP, Interval, LpStatus, PositionCoefficients, UniformTriple,
    ValueBounds,
};
use greylp_cli::{parse_problem, reference, run, serialize_problem, ProblemFile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn example() -> GreyLP {
    let iv = Interval::new;
    GreyLP::new(
        vec![iv(600.0, 800.0), iv(900.0, 1500.0)],
        vec![
            vec![iv(3.0, 5.0), iv(3.5, 6.5)],
            vec![iv(7.0, 11.0), iv(3.0, 5.0)],
            vec![iv(2.5, 3.5), iv(8.0, 12.0)],
        ],
        vec![iv(150.0, 235.0), iv(280.0, 360.0), iv(270.0, 330.0)],
    )
    .unwrap()
}

fn f_at(p: &GreyLP, (a, b, g): (f64, f64, f64)) -> f64 {
    uniform_value(p, a, b, g).unwrap()
}

fn close(label: &str, got: f64, want: f64, tol: f64, failures: &mut Vec<String>) {
    if (got - want).abs() > tol || got.is_nan() {
        failures.push(format!("{label}: got {got}, want {want} +/- {tol}"));
    }
}

fn verdict(checked: usize, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checked} checks"))
    } else {
        Err(failures.join("; "))
    }
}

fn bounds_reproduction() -> Outcome {
    let vb = bounds(&example()).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    close("ideal", vb.ideal, 74783.51, 0.01, &mut failures);
    close("critical", vb.critical, 20657.71, 0.01, &mut failures);
    // Hand vertex: rows 2 and 3 of the ideal program tight.
    let hand = 800.0 * 1890.0 / 48.5 + 1500.0 * 1410.0 / 48.5;
    close("ideal vs hand vertex", vb.ideal, hand, 1e-6, &mut failures);
    // Rows 1 and 3 of the critical program tight: 5x + 6.5y = 150, 3.5x + 12y = 270.
    let det = 5.0 * 12.0 - 6.5 * 3.5;
    let (x, y) = ((150.0 * 12.0 - 6.5 * 270.0) / det, (5.0 * 270.0 - 3.5 * 150.0) / det);
    close(
        "critical vs hand vertex",
        vb.critical,
        600.0 * x + 900.0 * y,
        1e-6,
        &mut failures,
    );
    verdict(4, failures)
}

const SETTINGS: [(f64, f64, f64); 6] = [
    (1.0, 1.0, 0.0),
    (0.0, 0.0, 1.0),
    (0.6, 0.6, 0.6),
    (0.7, 0.9, 0.5),
    (0.5, 0.9, 0.4),
    (0.7, 0.5, 0.3),
];
const VALUES: [f64; 6] = [74783.51, 20657.71, 42995.88, 51643.20, 50124.28, 50377.88];
const PLEASED: [f64; 6] = [0.86188, 0.13812, 0.54724, 0.64528, 0.62906, 0.63179];
const LAMBDA_DEGREES: [[f64; 4]; 11] = [
    [0.2600, 0.4010, 0.3740, 0.3785],
    [0.2843, 0.4293, 0.4019, 0.4064],
    [0.3072, 0.4558, 0.4281, 0.4326],
    [0.3285, 0.4802, 0.4523, 0.4569],
    [0.3482, 0.5023, 0.4743, 0.4789],
    [0.3659, 0.5221, 0.4939, 0.4986],
    [0.3813, 0.5390, 0.5108, 0.5155],
    [0.3942, 0.5529, 0.5248, 0.5295],
    [0.4040, 0.5635, 0.5353, 0.5400],
    [0.4104, 0.5701, 0.5420, 0.5467],
    [0.4127, 0.5725, 0.5444, 0.5491],
];

fn positioned_values() -> Outcome {
    let p = example();
    let mut failures = Vec::new();
    for (s, want) in SETTINGS.iter().zip(VALUES).skip(2) {
        close(&format!("f{s:?}"), f_at(&p, *s), want, 0.01, &mut failures);
    }
    verdict(4, failures)
}

fn pleased_degrees() -> Outcome {
    let p = example();
    let vb = bounds(&p).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for (s, want) in SETTINGS.iter().zip(PLEASED) {
        let mu = pleased_degree(f_at(&p, *s), vb).map_err(|e| e.to_string())?;
        close(&format!("mu{s:?}"), mu, want, 1e-4, &mut failures);
    }
    verdict(6, failures)
}

fn lambdas() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

fn lambda_grid() -> Outcome {
    let p = example();
    let settings: Vec<UniformTriple> = SETTINGS[2..]
        .iter()
        .map(|&(a, b, g)| UniformTriple::new(a, b, g).unwrap())
        .collect();
    let table = lambda_sweep(&p, &settings, &lambdas()).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for (row, lambda) in LAMBDA_DEGREES.iter().zip(lambdas()) {
        for (want, record) in row.iter().zip(&table.rows) {
            let got = record.mu_tilde_at(lambda).ok_or("missing cell")?;
            close(
                &format!("mu~[{lambda}]{}", record.setting),
                got,
                *want,
                2e-4,
                &mut failures,
            );
            checked += 1;
        }
    }
    if checked != 44 {
        failures.push(format!("checked {checked} cells instead of 44"));
    }
    verdict(checked, failures)
}

fn narrative_checks() -> Outcome {
    let p = example();
    let vb = bounds(&p).map_err(|e| e.to_string())?;
    let f = f_at(&p, (0.6, 0.6, 0.6));
    let degrees: Vec<(f64, f64)> = lambdas()
        .into_iter()
        .map(|l| (l, lambda_satisfaction(f, vb, l).unwrap().value))
        .collect();
    let max = degrees.iter().map(|d| d.1).fold(f64::MIN, f64::max);
    let mut failures = Vec::new();
    if max >= 0.5 {
        failures.push(format!("max mu~(0.6) = {max} is not below 0.5"));
    }
    let reaching: Vec<f64> = degrees.iter().filter(|d| d.1 >= 0.4).map(|d| d.0).collect();
    if reaching != [0.8, 0.9, 1.0] {
        failures.push(format!("mu~(0.6) >= 0.4 at lambdas {reaching:?}, want [0.8, 0.9, 1.0]"));
    }
    verdict(2, failures)
}

fn random_interval(rng: &mut ChaCha8Rng) -> Interval {
    let lo = rng.gen_range(0.0..10.0);
    Interval::new(lo, rng.gen_range(lo..=10.0))
}

fn random_problem(rng: &mut ChaCha8Rng, n: usize) -> GreyLP {
    let m = rng.gen_range(1..=4);
    GreyLP::new(
        (0..n).map(|_| random_interval(rng)).collect(),
        (0..m).map(|_| (0..n).map(|_| random_interval(rng)).collect()).collect(),
        (0..m).map(|_| random_interval(rng)).collect(),
    )
    .unwrap()
}

fn solver_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut failures = Vec::new();
    let mut optimal = 0;
    const TRIALS: usize = 1000;
    for trial in 0..TRIALS {
        let p = random_problem(&mut rng, 2);
        let (a, b, g) = (
            rng.gen_range(0.0..=1.0),
            rng.gen_range(0.0..=1.0),
            rng.gen_range(0.0..=1.0),
        );
        let lp = build_positioned(&p, &PositionCoefficients::uniform(a, b, g, p.m(), p.n()).unwrap()).unwrap();
        let s = solve_max(&lp).map_err(|e| e.to_string())?;
        let o = enumerate_vertices_oracle(&lp).map_err(|e| e.to_string())?;
        if s.status != o.status {
            failures.push(format!("trial {trial}: status {:?} vs oracle {:?}", s.status, o.status));
            continue;
        }
        if s.status != LpStatus::Optimal {
            continue;
        }
        optimal += 1;
        let (sv, ov) = (s.objective.unwrap(), o.objective.unwrap());
        if (sv - ov).abs() > 1e-6 * ov.abs().max(1.0) {
            failures.push(format!("trial {trial}: simplex {sv} vs oracle {ov}"));
        }
        if lp.max_violation(&s.x) > 1e-7 {
            failures.push(format!("trial {trial}: infeasible optimum {:?}", s.x));
        }
    }
    verdict(TRIALS, failures).map(|s| format!("{s}, {optimal} optimal"))
}

fn degree_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut failures = Vec::new();
    let mut bounds_list = vec![bounds(&example()).map_err(|e| e.to_string())?];
    for _ in 0..200 {
        let lo = rng.gen_range(0.0..1e5);
        bounds_list.push(ValueBounds::new(lo, lo + rng.gen_range(1.0..1e5)));
    }
    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    for vb in &bounds_list {
        let span = vb.ideal - vb.critical;
        let noise = 0.5e-6 * vb.scale();
        for &lambda in &grid {
            for (f, want) in [
                (vb.critical, 0.0),
                (vb.critical - noise, 0.0),
                (vb.ideal, 1.0),
                (vb.ideal + noise, 1.0),
            ] {
                let got = lambda_satisfaction(f, *vb, lambda).unwrap().value;
                if (got - want).abs() > 1e-12 {
                    failures.push(format!("endpoint {f} at lambda {lambda}: {got}"));
                }
            }
        }
        for _ in 0..20 {
            let t = rng.gen_range(0.01..0.99);
            let f = vb.critical + t * span;
            let values: Vec<f64> = grid
                .iter()
                .map(|&l| lambda_satisfaction(f, *vb, l).unwrap().value)
                .collect();
            if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
                failures.push(format!("out of range at f = {f}"));
            }
            if !values.windows(2).all(|w| w[0] < w[1]) {
                failures.push(format!("not strictly increasing in lambda at f = {f}"));
            }
            let linear = (f - vb.critical) / span;
            if (values[100] - linear).abs() > 1e-12 {
                failures.push(format!("optimistic identity off by {}", values[100] - linear));
            }
            if vb.critical > 0.0 {
                let mu = pleased_degree(f, *vb).unwrap();
                let floor = 0.5 * vb.critical / vb.ideal;
                if !(floor <= mu && mu <= 1.0 - floor) {
                    failures.push(format!("pleased degree {mu} outside [{floor}, {}]", 1.0 - floor));
                }
            }
        }
    }
    failures.truncate(5);
    verdict(bounds_list.len(), failures)
}

fn monotonicity_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut problems = vec![example()];
    while problems.len() < 101 {
        let p = random_problem(&mut rng, 2);
        // Degrees need a bounded ideal program.
        if bounds(&p).is_ok() {
            problems.push(p);
        }
    }
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut failures = Vec::new();
    for (idx, p) in problems.iter().enumerate() {
        for axis in Axis::ALL {
            let r = check_monotonicity(p, axis, 0.25).map_err(|e| e.to_string())?;
            if !r.holds() || !r.skipped.is_empty() {
                failures.push(format!(
                    "problem {idx} {axis}: {} violations, {} skipped",
                    r.violations.len(),
                    r.skipped.len()
                ));
            }
        }
        let vb = bounds(p).unwrap();
        let tol = 1e-6 * vb.scale();
        for a in grid {
            for b in grid {
                for g in grid {
                    let f = f_at(p, (a, b, g));
                    if f < vb.critical - tol || f > vb.ideal + tol {
                        failures.push(format!("problem {idx}: f({a},{b},{g}) = {f} outside bounds"));
                    }
                }
            }
        }
    }
    verdict(problems.len(), failures)
}

fn cli_checks() -> Outcome {
    let mut failures = Vec::new();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["greylp", "verify-example"], &mut out, &mut err);
    if code != 0 {
        failures.push(format!(
            "verify-example exited {code}: {}",
            String::from_utf8_lossy(&out)
        ));
    }
    if reference::example().problem != example() {
        failures.push("bundled example differs from the frozen problem".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for trial in 0..100 {
        let n = rng.gen_range(1..=4);
        let file = ProblemFile {
            name: rng.gen_bool(0.5).then(|| format!("random-{trial}")),
            description: rng.gen_bool(0.5).then(|| "round \"trip\" \u{2297}".to_string()),
            problem: random_problem(&mut rng, n),
        };
        match parse_problem(&serialize_problem(&file)) {
            Ok(back) if back == file => {}
            other => failures.push(format!("round trip {trial} failed: {other:?}")),
        }
    }
    verdict(101, failures)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 bounds reproduction", bounds_reproduction),
        ("2 positioned values", positioned_values),
        ("3 pleased degrees", pleased_degrees),
        ("4 lambda-satisfaction grid", lambda_grid),
        ("5 narrative checks", narrative_checks),
        ("6 solver property suite", solver_properties),
        ("7 degree property suite", degree_properties),
        ("8 monotonicity property suite", monotonicity_properties),
        ("9 cli verify-example and round trip", cli_checks),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
