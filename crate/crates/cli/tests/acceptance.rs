//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigraph::bounds::{energy_report, lower_bound, upper_bound_cs, upper_bound_lambda1};
use semigraph::families::{gen_s3, gen_s3_2, gen_t3, round_half_up, Family};
use semigraph::product::{cartesian_product, kronecker_sum, pairwise_sums, product_consistency_check};
use semigraph::random::{random_graph, random_permutation, random_semigraph};
use semigraph::spectra::{self, char_poly_exact, multiset_distance};
use semigraph::{
    adjacency_matrix, check_rationality, second_moment_direct, second_moment_paper, MomentMode, RationalityClass,
    Semigraph,
};

const TABLE: [[f64; 4]; 3] = [
    [5.89, 6.20, 6.46, 6.69],
    [5.46, 10.47, 15.29, 20.0],
    [5.46, 9.27, 12.66, 15.85],
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ratio_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn run_table_binary() -> Result<(serde_json::Value, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_semigraph"))
        .args(["table", "4", "--json"])
        .output()
        .map_err(|e| format!("cannot run binary: {e}"))?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("binary exited with {:?}", out.status.code()))?;
    let doc = serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON: {e}"))?;
    Ok((doc, elapsed))
}

fn energy_table_reproduction() -> Outcome {
    let (first, elapsed) = run_table_binary()?;
    let (second, _) = run_table_binary()?;
    ensure(elapsed < Duration::from_secs(1), || format!("table 4 took {elapsed:?}"))?;
    let in_process = semigraph::families::energy_table(4).map_err(|e| e.to_string())?;
    let mut max_drift: f64 = 0.0;
    for (r, expected_row) in TABLE.iter().enumerate() {
        for (c, &expected) in expected_row.iter().enumerate() {
            let rounded = first["rows"][r]["rounded"][c].as_f64().ok_or("missing rounded value")?;
            let full = first["rows"][r]["energy"][c].as_f64().ok_or("missing energy")?;
            let again = second["rows"][r]["energy"][c].as_f64().ok_or("missing energy")?;
            let local = in_process.rows[r].numeric[c];
            ensure(rounded == expected, || format!("row {r} n={}: {rounded} != {expected}", c + 1))?;
            ensure(round_half_up(full, 2) == expected, || format!("row {r} n={}: full {full}", c + 1))?;
            max_drift = max_drift.max((full - again).abs()).max((full - local).abs());
        }
    }
    ensure(max_drift <= 1e-9, || format!("run-to-run drift {max_drift:e}"))?;
    Ok(format!("12/12 values match, drift {max_drift:e}, binary {elapsed:.2?}"))
}

fn tight_bound_at_s3_4() -> Outcome {
    let r = energy_report(&gen_s3(4), MomentMode::Direct).map_err(|e| e.to_string())?;
    ensure((r.energy - 20.0).abs() <= 1e-9, || format!("energy {}", r.energy))?;
    ensure((r.upper_l1 - 20.0).abs() <= 1e-9, || format!("upper_l1 {}", r.upper_l1))?;
    ensure((r.upper_l1 - r.energy).abs() <= 1e-9, || "bound not attained".into())?;
    ensure(r.tight_l1, || "tight_l1 false".into())?;
    let mut gaps = Vec::new();
    for n in [1, 2, 3, 5, 6] {
        let r = energy_report(&gen_s3(n), MomentMode::Direct).map_err(|e| e.to_string())?;
        let gap = r.upper_l1 - r.energy;
        ensure(gap > 1e-6, || format!("n={n}: gap {gap:e}"))?;
        ensure(!r.tight_l1, || format!("n={n}: flagged tight"))?;
        gaps.push(format!("{n}:{gap:.3}"));
    }
    Ok(format!("|upper_l1 - E| = {:e} at n=4; gaps {}", (r.upper_l1 - r.energy).abs(), gaps.join(" ")))
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn t3_char_poly() -> Outcome {
    for n in 1..=8i64 {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let mut p = big(&[-4 * n, -(5 * n + 1), 0, 1]);
        for _ in 1..n {
            p = poly_mul(&p, &big(&[-1, 0, 1]));
        }
        // substitute λ = μ/4 and clear denominators
        let degree = p.len() - 1;
        let expected: Vec<BigInt> = p
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(4).pow((degree - k) as u32))
            .collect();
        let poly = char_poly_exact(&adjacency_matrix(&gen_t3(n as usize)));
        ensure(poly.coeffs() == expected.as_slice(), || format!("n={n}: coefficients differ"))?;
    }
    Ok("n = 1..8 exact".into())
}

fn closed_form_spectra() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for family in Family::ALL {
        for n in 1..=50 {
            let a = adjacency_matrix(&family.generate(n));
            let numeric = spectra::eigenvalues(&a).map_err(|e| e.to_string())?;
            let gap = multiset_distance(numeric.eigenvalues(), &family.closed_spectrum(n).expand());
            ensure(gap <= 1e-8, || format!("{} n={n}: gap {gap:e}", family.name()))?;
            worst = worst.max(gap);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("150 spectra, max gap {worst:e}, {elapsed:.2?}"))
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e31_9a4b);
    let (mut with_middle_end, mut sizes_seen) = (0, [false; 6]);
    let mut worst_relabel: f64 = 0.0;
    for case in 0..200 {
        let n = rng.gen_range(2..=12);
        let attempts = rng.gen_range(1..=12);
        let g = random_semigraph(&mut rng, n, 2..=5, attempts);
        for e in g.edges() {
            sizes_seen[e.len()] = true;
        }
        with_middle_end += g.has_middle_end_vertex() as usize;
        let a = adjacency_matrix(&g);
        let tau = spectra::tolerance(&a);
        let s = spectra::eigenvalues(&a).map_err(|e| e.to_string())?;
        ensure(s.sum().abs() <= tau, || format!("case {case}: trace {:e}", s.sum()))?;
        let m2 = ratio_f64(second_moment_direct(&a));
        let dm = (s.sum_of_squares() - m2).abs();
        ensure(dm <= tau * n as f64, || format!("case {case}: moment gap {dm:e}"))?;
        let r = energy_report(&g, MomentMode::Direct).map_err(|e| e.to_string())?;
        ensure(r.lower <= r.energy + tau, || format!("case {case}: lower {} > E {}", r.lower, r.energy))?;
        ensure(r.energy <= r.upper_cs + tau, || format!("case {case}: E {} > cs {}", r.energy, r.upper_cs))?;
        ensure(r.energy <= r.upper_l1 + tau, || format!("case {case}: E {} > l1 {}", r.energy, r.upper_l1))?;
        let perm = random_permutation(&mut rng, n);
        let h = g.relabeled(&perm).map_err(|e| e.to_string())?;
        let sh = spectra::eigenvalues(&adjacency_matrix(&h)).map_err(|e| e.to_string())?;
        let d = s.distance(&sh);
        ensure(d <= 1e-9, || format!("case {case}: relabel gap {d:e}"))?;
        worst_relabel = worst_relabel.max(d);
    }
    ensure(sizes_seen[2..=5].iter().all(|&b| b), || "edge sizes 2..5 not all generated".into())?;
    Ok(format!(
        "200 cases ({with_middle_end} with middle-end vertices), max relabel gap {worst_relabel:e}"
    ))
}

fn graph_specialization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a7f);
    let rel = |x: f64, y: f64| if y == 0.0 { x.abs() } else { ((x - y) / y).abs() };
    let mut worst: f64 = 0.0;
    for case in 0..50 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let m = g.edge_count() as f64;
        let cs = upper_bound_cs(&g, MomentMode::Direct).map_err(|e| e.to_string())?;
        let lower = lower_bound(&g, MomentMode::Direct).map_err(|e| e.to_string())?;
        let e1 = rel(cs, (2.0 * m * n as f64).sqrt());
        let e2 = rel(lower, 2.0 * m.sqrt());
        ensure(e1 <= 1e-12 && e2 <= 1e-12, || format!("case {case}: rel errors {e1:e} {e2:e}"))?;
        worst = worst.max(e1).max(e2);
        upper_bound_lambda1(&g, MomentMode::Direct).map_err(|e| e.to_string())?;
    }
    Ok(format!("50 graphs, max relative error {worst:e}"))
}

fn moment_discrepancy() -> Outcome {
    let g = gen_s3_2(1);
    let paper = second_moment_paper(&g);
    let direct = second_moment_direct(&adjacency_matrix(&g));
    ensure(paper == Rational64::new(53, 4), || format!("paper moment {paper}"))?;
    ensure(direct == Rational64::new(25, 2), || format!("direct moment {direct}"))?;
    let sum_sq = spectra::eigenvalues(&adjacency_matrix(&g)).map_err(|e| e.to_string())?.sum_of_squares();
    ensure((sum_sq - 12.5).abs() <= 1e-10, || format!("sum of squares {sum_sq}"))?;
    Ok(format!("paper {paper}, direct {direct}, sum of squares {sum_sq:.12}"))
}

fn rationality_dichotomy() -> Outcome {
    let s = check_rationality(&gen_s3(4));
    ensure(s.all_rational, || "S3_4 not all rational".into())?;
    ensure(s.energy_exact == Some(BigInt::from(20).into()), || format!("S3_4 energy {:?}", s.energy_exact))?;
    ensure(s.classification == RationalityClass::EvenInteger, || format!("S3_4 class {:?}", s.classification))?;
    let k2 = check_rationality(&Semigraph::new(2, &[[1, 2]]).map_err(|e| e.to_string())?);
    ensure(k2.energy_exact == Some(BigInt::from(2).into()), || format!("K2 energy {:?}", k2.energy_exact))?;
    let t = check_rationality(&gen_t3(2));
    ensure(!t.all_rational, || "T3_2 reported all rational".into())?;
    ensure(t.classification == RationalityClass::IrrationalPresent, || format!("T3_2 class {:?}", t.classification))?;
    Ok("S3_4 even integer 20, K2 exact 2, T3_2 irrational present".into())
}

fn product_additivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x70d0c7);
    let mut worst: f64 = 0.0;
    let mut case = 0;
    while case < 20 {
        let (n1, n2) = (rng.gen_range(2..=8), rng.gen_range(2..=8));
        if n1 * n2 > 64 {
            continue;
        }
        let (p1, p2) = (rng.gen_range(0.3..0.9), rng.gen_range(0.3..0.9));
        let g1 = random_graph(&mut rng, n1, p1);
        let g2 = random_graph(&mut rng, n2, p2);
        let (p, _) = cartesian_product(&g1, &g2).map_err(|e| e.to_string())?;
        let (a, b) = (adjacency_matrix(&g1), adjacency_matrix(&g2));
        let ksum = kronecker_sum(&a, &b);
        ensure(adjacency_matrix(&p) == ksum, || format!("case {case}: product matrix differs"))?;
        let sa = spectra::eigenvalues(&a).map_err(|e| e.to_string())?;
        let sb = spectra::eigenvalues(&b).map_err(|e| e.to_string())?;
        let sp = spectra::eigenvalues(&adjacency_matrix(&p)).map_err(|e| e.to_string())?;
        let gap = multiset_distance(sp.eigenvalues(), &pairwise_sums(sa.eigenvalues(), sb.eigenvalues()));
        ensure(gap <= 1e-8, || format!("case {case}: additivity gap {gap:e}"))?;
        let check = product_consistency_check(&g1, &g2).map_err(|e| e.to_string())?;
        ensure(check.matrices_equal && check.spectra_additive, || format!("case {case}: checker disagrees"))?;
        worst = worst.max(gap);
        case += 1;
    }
    Ok(format!("20 pairs, exact matrices, max additivity gap {worst:e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("energy-table reproduction", energy_table_reproduction),
        ("tight bound at S3_4", tight_bound_at_s3_4),
        ("exact characteristic polynomial of T3_n", t3_char_poly),
        ("closed-form vs numeric spectra", closed_form_spectra),
        ("property suite", property_suite),
        ("graph specialization", graph_specialization),
        ("moment discrepancy", moment_discrepancy),
        ("rationality dichotomy", rationality_dichotomy),
        ("product additivity", product_additivity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, criterion) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(criterion))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {name}: {reason}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
