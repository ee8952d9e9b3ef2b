//! Worked examples checked against independent computations: bisection for
//! cubic roots, explicit polynomial products for characteristic
//! polynomials, and direct entry sums for moments.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use semigraph::families::{gen_s3, gen_s3_2, gen_t3};
use semigraph::spectra::{self, char_poly_exact, multiset_distance, solve_cubic_depressed};
use semigraph::{adjacency_matrix, second_moment_direct, second_moment_paper, Semigraph};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients in μ = 4λ of 4^N · p(μ/4) for a monic λ-polynomial of degree N.
fn scale_to_mu(p: &[BigInt]) -> Vec<BigInt> {
    let degree = p.len() - 1;
    p.iter()
        .enumerate()
        .map(|(k, c)| c * BigInt::from(4).pow((degree - k) as u32))
        .collect()
}

/// Roots of a cubic by sign scanning and bisection.
fn bisection_roots(b: f64, c: f64) -> Vec<f64> {
    let f = |x: f64| x * x * x + b * x + c;
    let mut roots = Vec::new();
    let step = 1e-3;
    let mut x = -50.0;
    while x < 50.0 {
        let (mut lo, mut hi) = (x, x + step);
        if f(lo) == 0.0 {
            roots.push(lo);
        } else if f(lo) * f(hi) < 0.0 {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(lo) * f(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x += step;
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

#[test]
fn cubic_solver_matches_bisection() {
    for (b, c) in [(-6.0, -4.0), (-11.0, -8.0), (-16.0, -12.0), (-21.0, -16.0), (-3.5, 1.0)] {
        let solved = solve_cubic_depressed(b, c);
        let oracle = bisection_roots(b, c);
        assert_eq!(solved.len(), 3);
        assert_eq!(oracle.len(), 3, "b={b} c={c}");
        for (s, o) in solved.iter().zip(&oracle) {
            assert!((s - o).abs() <= 1e-12 * o.abs().max(1.0), "{s} vs {o}");
            assert!((s * s * s + b * s + c).abs() <= 1e-9 * (1.0 + c.abs()));
        }
        assert!(solved.iter().sum::<f64>().abs() < 1e-12);
    }
}

#[test]
fn cubic_for_t3_2_frozen() {
    // frozen from bisection_roots(-11, -8), confirmed to 30 digits separately
    let expected = [3.633_425_264_489_70, -0.768_540_110_411_748, -2.864_885_154_077_952];
    let solved = solve_cubic_depressed(-11.0, -8.0);
    for (s, e) in solved.iter().zip(expected) {
        assert!((s - e).abs() < 1e-12, "{s} vs {e}");
    }
    let oracle = bisection_roots(-11.0, -8.0);
    for (o, e) in oracle.iter().zip(expected) {
        assert!((o - e).abs() < 1e-12, "{o} vs {e}");
    }
}

#[test]
fn char_poly_examples() {
    let line = Semigraph::new(3, &[[1, 2, 3]]).unwrap();
    assert_eq!(char_poly_exact(&adjacency_matrix(&line)).coeffs(), big(&[-256, -96, 0, 1]).as_slice());
    assert_eq!(
        char_poly_exact(&adjacency_matrix(&line)).unscaled(),
        vec![q(-4, 1), q(-6, 1), q(0, 1), q(1, 1)]
    );

    let k2 = Semigraph::new(2, &[[1, 2]]).unwrap();
    assert_eq!(char_poly_exact(&adjacency_matrix(&k2)).coeffs(), big(&[-16, 0, 1]).as_slice());

    let expected = poly_mul(&big(&[-16, 0, 1]), &big(&[-512, -176, 0, 1]));
    assert_eq!(char_poly_exact(&adjacency_matrix(&gen_t3(2))).coeffs(), expected.as_slice());
}

#[test]
fn char_poly_of_t3_family() {
    for n in 1..=8i64 {
        let mut p = big(&[-4 * n, -(5 * n + 1), 0, 1]);
        for _ in 1..n {
            p = poly_mul(&p, &big(&[-1, 0, 1]));
        }
        let poly = char_poly_exact(&adjacency_matrix(&gen_t3(n as usize)));
        assert_eq!(poly.coeffs(), scale_to_mu(&p).as_slice(), "n={n}");
        assert_eq!(poly.scale(), 4);
    }
}

#[test]
fn rational_eigenvalues_of_s3_4() {
    let roots = char_poly_exact(&adjacency_matrix(&gen_s3(4))).rational_eigenvalues();
    assert!(roots.all_rational());
    assert_eq!(roots.roots, vec![(q(4, 1), 1), (q(2, 1), 3), (q(-2, 1), 5)]);
}

#[test]
fn rational_eigenvalues_of_t3_3() {
    let poly = char_poly_exact(&adjacency_matrix(&gen_t3(3)));
    let roots = poly.rational_eigenvalues();
    assert_eq!(roots.roots, vec![(q(1, 1), 2), (q(-1, 1), 2)]);
    // λ³ − 16λ − 12 in μ = 4λ
    assert_eq!(roots.remainder, scale_to_mu(&big(&[-12, -16, 0, 1])));
    assert_eq!(roots.reassemble(), poly.coeffs().to_vec());
}

#[test]
fn rational_eigenvalues_of_k2() {
    let k2 = Semigraph::new(2, &[[1, 2]]).unwrap();
    let roots = spectra::rational_eigenvalues(&char_poly_exact(&adjacency_matrix(&k2)));
    assert_eq!(roots.roots, vec![(q(1, 1), 1), (q(-1, 1), 1)]);
}

#[test]
fn eigenvalue_examples() {
    let r3 = 3f64.sqrt();
    let g = gen_t3(1);
    let a = adjacency_matrix(&g);
    let s = spectra::eigenvalues(&a).unwrap();
    assert!(multiset_distance(s.eigenvalues(), &[1.0 + r3, 1.0 - r3, -2.0]) <= spectra::tolerance(&a));

    let a = adjacency_matrix(&gen_s3(4));
    let s = spectra::eigenvalues(&a).unwrap();
    let expected = [4.0, 2.0, 2.0, 2.0, -2.0, -2.0, -2.0, -2.0, -2.0];
    assert!(multiset_distance(s.eigenvalues(), &expected) <= spectra::tolerance(&a));
    assert!((s.energy().value() - 20.0).abs() < 1e-12);

    let t1 = spectra::energy(&adjacency_matrix(&gen_t3(1))).unwrap().value();
    assert_eq!((t1 * 100.0).round() / 100.0, 5.46);
}

#[test]
fn moment_examples() {
    let line = Semigraph::new(3, &[[1, 2, 3]]).unwrap();
    assert_eq!(second_moment_direct(&adjacency_matrix(&line)), Rational64::from_integer(12));
    let s = gen_s3_2(1);
    assert_eq!(second_moment_direct(&adjacency_matrix(&s)), Rational64::new(25, 2));
    assert_eq!(second_moment_paper(&s), Rational64::new(53, 4));
    assert_eq!(second_moment_paper(&gen_s3(4)), Rational64::from_integer(48));
}

#[test]
fn s3_2_spectrum_sums_to_direct_moment() {
    // the closed-form spectrum of S³₂,₁ carries Σλ² = 12.5, not 13.25
    let s = semigraph::families::closed_spectrum_s3_2(1).expand();
    let sum_sq: f64 = s.iter().map(|x| x * x).sum();
    assert!((sum_sq - 12.5).abs() < 1e-10);
}

#[test]
fn exact_evaluation_at_rational_points() {
    let poly = char_poly_exact(&adjacency_matrix(&gen_s3(2)));
    assert!(poly.eval_lambda(&q(-2, 1)).is_zero());
    assert!(!poly.eval_lambda(&BigRational::one()).is_zero());
}
