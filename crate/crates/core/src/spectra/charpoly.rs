//! Exact characteristic polynomials and their rational and real roots.
//!
//! For an adjacency matrix `A` on the quarter grid the integer matrix `4A`
//! has a monic integer characteristic polynomial `P(μ) = det(μI − 4A)`, and
//! `det(λI − A) = 4⁻ⁿ P(4λ)`. Every eigenvalue λ of `A` corresponds to the
//! root `μ = 4λ` of `P`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::QuarterMatrix;

/// Monic integer characteristic polynomial of `scale · A`, coefficients
/// stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntCharPoly {
    coeffs: Vec<BigInt>,
    scale: u32,
}

impl IntCharPoly {
    /// Wraps coefficients `c₀..cₙ` of a monic polynomial in μ = scale·λ.
    ///
    /// Panics if the polynomial is not monic.
    pub fn from_coeffs(coeffs: Vec<BigInt>, scale: u32) -> Self {
        assert!(
            coeffs.last().is_some_and(|c| c.is_one()),
            "characteristic polynomials are monic"
        );
        IntCharPoly { coeffs, scale }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients of det(λI − A) in λ, lowest degree first.
    pub fn unscaled(&self) -> Vec<BigRational> {
        let n = self.degree();
        let scale = BigInt::from(self.scale);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| BigRational::new(c.clone(), scale.pow((n - k) as u32)))
            .collect()
    }

    /// Evaluates det(λI − A) exactly.
    pub fn eval_lambda(&self, lambda: &BigRational) -> BigRational {
        let mu = lambda * BigRational::from_integer(BigInt::from(self.scale));
        let p = horner(&self.coeffs, &mu);
        p / BigRational::from_integer(BigInt::from(self.scale).pow(self.degree() as u32))
    }

    /// All rational eigenvalues with multiplicity, found by the rational
    /// root theorem and repeated exact deflation.
    pub fn rational_eigenvalues(&self) -> RationalRoots {
        let mut poly = self.coeffs.clone();
        let mut roots = Vec::new();

        let zeros = poly.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            poly.drain(..zeros);
            roots.push((BigRational::zero(), zeros));
        }

        if poly.len() > 1 {
            let bound = integer_root_bound(&poly);
            let mut candidate = BigInt::one();
            while candidate <= bound && poly.len() > 1 {
                if (&poly[0] % &candidate).is_zero() {
                    for mu in [candidate.clone(), -candidate.clone()] {
                        let mut multiplicity = 0;
                        while poly.len() > 1 {
                            match deflate(&poly, &mu) {
                                Some(quotient) => {
                                    poly = quotient;
                                    multiplicity += 1;
                                }
                                None => break,
                            }
                        }
                        if multiplicity > 0 {
                            let lambda = BigRational::new(mu, BigInt::from(self.scale));
                            roots.push((lambda, multiplicity));
                        }
                    }
                }
                candidate += 1;
            }
        }

        roots.sort_by(|a, b| b.0.cmp(&a.0));
        RationalRoots {
            roots,
            remainder: poly,
            scale: self.scale,
        }
    }

    /// All real eigenvalues with multiplicity, descending, computed from the
    /// polynomial alone: exact rational roots, then Sturm isolation and
    /// bisection on the squarefree parts of what remains.
    pub fn real_roots(&self) -> Vec<f64> {
        let rational = self.rational_eigenvalues();
        let mut out: Vec<f64> = rational
            .roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.to_f64().unwrap_or(f64::NAN), *m))
            .collect();
        let scale = self.scale as f64;
        let remainder: Vec<BigRational> = rational
            .remainder
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        for (factor, multiplicity) in squarefree_decomposition(&remainder) {
            for mu in isolate_real_roots(&factor) {
                out.extend(std::iter::repeat_n(mu / scale, multiplicity));
            }
        }
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }
}

/// Rational roots of an [`IntCharPoly`] and the root-free cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// Eigenvalues λ with multiplicity, descending.
    pub roots: Vec<(BigRational, usize)>,
    /// Monic integer polynomial in μ left after deflation; has no rational roots.
    pub remainder: Vec<BigInt>,
    pub scale: u32,
}

impl RationalRoots {
    pub fn all_rational(&self) -> bool {
        self.remainder.len() == 1
    }

    pub fn count(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// Multiplies the deflated factors back together; equals the original
    /// polynomial when deflation was exact.
    pub fn reassemble(&self) -> Vec<BigInt> {
        let mut poly = self.remainder.clone();
        for (lambda, multiplicity) in &self.roots {
            let mu = lambda * BigRational::from_integer(BigInt::from(self.scale));
            let mu = mu.to_integer();
            for _ in 0..*multiplicity {
                poly = multiply_linear(&poly, &mu);
            }
        }
        poly
    }
}

/// `det(μI − B)` for an integer matrix via the Faddeev–LeVerrier recurrence.
/// Every division is exact because the coefficients are integers.
fn faddeev_leverrier(n: usize, b: &[i64]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = B M_{k-1} + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let bil = b[i * n + l];
                if bil == 0 {
                    continue;
                }
                for j in 0..n {
                    let x = &m[l * n + j];
                    if !x.is_zero() {
                        next[i * n + j] += x * bil;
                    }
                }
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                let bil = b[i * n + l];
                if bil != 0 {
                    trace += &m[l * n + i] * bil;
                }
            }
        }
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = q;
    }
    coeffs
}

/// Exact characteristic polynomial of `4A`.
pub fn char_poly_exact(a: &QuarterMatrix) -> IntCharPoly {
    let n = a.dim();
    let b: Vec<i64> = a.quarters_row_major().iter().map(|&q| q as i64).collect();
    IntCharPoly::from_coeffs(faddeev_leverrier(n, &b), QuarterMatrix::SCALE)
}

fn horner<T>(coeffs: &[BigInt], x: &T) -> T
where
    T: Clone + Zero + for<'a> std::ops::Mul<&'a T, Output = T> + std::ops::Add<T, Output = T> + From<BigInt>,
{
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x + T::from(c.clone()))
}

/// Divides by `(μ − root)`; `None` if the remainder is nonzero.
fn deflate(poly: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    let d = poly.len() - 1;
    let mut quotient = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for k in (0..=d).rev() {
        let value = &poly[k] + &carry * root;
        if k == 0 {
            return value.is_zero().then_some(quotient);
        }
        quotient[k - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

fn multiply_linear(poly: &[BigInt], root: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); poly.len() + 1];
    for (k, c) in poly.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * root;
    }
    out
}

/// Upper bound on |μ| for every root of a monic integer polynomial
/// (Fujiwara: 2·max |a_{d−k}|^{1/k}, with the constant term halved).
fn integer_root_bound(poly: &[BigInt]) -> BigInt {
    let d = poly.len() - 1;
    let mut best = BigInt::zero();
    for k in 1..=d {
        let mut c = poly[d - k].abs();
        if k == d {
            c = (c + 1u32) / 2u32;
        }
        if c.is_zero() {
            continue;
        }
        let mut root = c.nth_root(k as u32);
        if root.pow(k as u32) < c {
            root += 1;
        }
        best = best.max(root);
    }
    best * 2
}

// Rational-coefficient polynomial helpers, lowest degree first, no trailing zeros.

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &RatPoly) -> RatPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn monic(p: RatPoly) -> RatPoly {
    match p.last().cloned() {
        Some(lead) if !lead.is_zero() => p.into_iter().map(|c| c / &lead).collect(),
        _ => p,
    }
}

fn div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut rem = a.clone();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let factor = &rem[k + db] / &lead;
        if !factor.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &factor * bj;
            }
        }
        quot[k] = factor;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (monic(a.clone()), monic(b.clone()));
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = monic(r);
    }
    monic(x)
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|k| {
                let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect(),
    )
}

/// Yun's algorithm: `p = ∏ fᵢ^i` with each `fᵢ` squarefree and coprime.
fn squarefree_decomposition(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let p = trim(p.clone());
    if p.len() <= 1 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    let mut b = div_rem(&p, &a0).0;
    let mut c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        b = div_rem(&b, &a).0;
        c = div_rem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        if a.len() > 1 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn eval(p: &RatPoly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(seq: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| eval(q, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Real roots of a squarefree polynomial with no rational roots, to about
/// 1e-13 absolute accuracy, ascending.
fn isolate_real_roots(p: &RatPoly) -> Vec<f64> {
    let p = monic(p.clone());
    let d = p.len() - 1;
    // Cauchy bound rounded up to a power of two keeps every midpoint dyadic
    let max_ratio = p[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    let mut bound = BigRational::one();
    while bound <= max_ratio.clone() + BigRational::one() {
        bound *= BigRational::from_integer(BigInt::from(2));
    }
    let seq = sturm_sequence(&p);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let width_target = BigRational::new(BigInt::one(), BigInt::from(2).pow(46));

    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count > 1 {
            let mid = (&lo + &hi) * &half;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
            continue;
        }
        let (mut lo, mut hi) = (lo, hi);
        let lo_positive = eval(&p, &lo).is_positive();
        while &hi - &lo > width_target {
            let mid = (&lo + &hi) * &half;
            if eval(&p, &mid).is_positive() == lo_positive {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mid = (lo + hi) * &half;
        roots.push(mid.to_f64().unwrap_or(f64::NAN));
    }
    roots.sort_by(|a, b| a.total_cmp(b));
    roots
}
