use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::int::deflate_int_root;
use super::{LinalgError, Result};

/// Imaginary parts below this (scaled by `max(1, |re|)`) are treated as rounding noise.
const IMAG_TOL: f64 = 1e-9;
const NEWTON_STEPS: usize = 5;

/// Real polynomial, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Trailing zero coefficients are trimmed so the leading coefficient is nonzero.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| c.to_f64().unwrap_or(f64::NAN))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `Σ |c_k| |x|^k`, the magnitude against which rounding in `eval` is measured.
    fn abs_eval(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * ax + c.abs())
    }

    fn monic(&self) -> Vec<f64> {
        let lead = *self.coeffs.last().expect("nonzero polynomial");
        self.coeffs.iter().map(|c| c / lead).collect()
    }
}

/// Real roots of a polynomial of degree ≤ 4 by closed-form formulas, ascending and
/// with multiplicity.
///
/// Quadratics use the cancellation-free formula, cubics the trigonometric or
/// Cardano form, quartics Ferrari's resolvent. Each root is then polished by at
/// most five Newton steps; roots that collide are re-centred on the nearby zero of
/// `p'`. A conjugate pair whose imaginary part survives that refinement and
/// exceeds `1e-9 · max(1, |re|)` is reported as [`LinalgError::ComplexRootDetected`].
pub fn real_roots_low_degree(p: &Polynomial) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let deg = p.degree();
    if deg > 4 {
        return Err(LinalgError::DegreeTooHigh(deg));
    }
    if deg == 0 {
        return Ok(vec![]);
    }
    let c = p.monic();
    let approx = match deg {
        1 => vec![(-c[0], 0.0)],
        2 => quadratic(c[1], c[0]),
        3 => cubic(c[2], c[1], c[0]),
        _ => quartic(c[3], c[2], c[1], c[0]),
    };

    let dp = p.derivative();
    let mut reals: Vec<f64> = Vec::with_capacity(deg);
    let mut pairs: Vec<(f64, f64)> = Vec::new();
    for (re, im) in approx {
        if im == 0.0 {
            reals.push(polish(p, &dp, re));
        } else if im > 0.0 {
            pairs.push((re, im));
        }
    }
    for (re, im) in pairs {
        let scale = re.abs().max(1.0);
        if im > 1e-4 * scale {
            return Err(LinalgError::ComplexRootDetected { re, im });
        }
        match resolve_near_double(p, &dp, re) {
            Split::Real(a, b) => {
                reals.push(a);
                reals.push(b);
            }
            Split::Complex(x, im) => {
                if im < IMAG_TOL * x.abs().max(1.0) {
                    reals.push(x);
                    reals.push(x);
                } else {
                    return Err(LinalgError::ComplexRootDetected { re: x, im });
                }
            }
        }
    }
    reals.sort_by(f64::total_cmp);

    // collapse near-coincident real roots onto the zero of p' between them
    let mut i = 0;
    while i + 1 < reals.len() {
        let (a, b) = (reals[i], reals[i + 1]);
        if (b - a).abs() < 1e-6 * a.abs().max(1.0) {
            // a complex verdict here means a numerically double root at the centre
            let (x, y) = match resolve_near_double(p, &dp, 0.5 * (a + b)) {
                Split::Real(x, y) => (x, y),
                Split::Complex(x, _) => (x, x),
            };
            reals[i] = x;
            reals[i + 1] = y;
            i += 2;
        } else {
            i += 1;
        }
    }
    reals.sort_by(f64::total_cmp);
    Ok(reals)
}

fn polish(p: &Polynomial, dp: &Polynomial, mut x: f64) -> f64 {
    let mut best = p.eval(x).abs();
    for _ in 0..NEWTON_STEPS {
        let d = dp.eval(x);
        if d == 0.0 || best == 0.0 {
            break;
        }
        let next = x - p.eval(x) / d;
        let val = p.eval(next).abs();
        if !next.is_finite() || val >= best {
            break;
        }
        x = next;
        best = val;
    }
    x
}

enum Split {
    Real(f64, f64),
    Complex(f64, f64),
}

/// Locates the critical point of `p` near `x0` and decides whether the two roots
/// clustered there are real or a conjugate pair, using the local quadratic model
/// `p(x) ≈ p(c) + p''(c)/2 (x-c)^2` and the rounding bound of `p(c)`.
fn resolve_near_double(p: &Polynomial, dp: &Polynomial, x0: f64) -> Split {
    let ddp = dp.derivative();
    let mut c = x0;
    for _ in 0..50 {
        let d2 = ddp.eval(c);
        if d2 == 0.0 {
            break;
        }
        let step = dp.eval(c) / d2;
        c -= step;
        if step.abs() <= f64::EPSILON * c.abs().max(1.0) {
            break;
        }
    }
    let val = p.eval(c);
    let half_curv = 0.5 * ddp.eval(c);
    let noise = 8.0 * (p.degree() as f64 + 1.0) * f64::EPSILON * p.abs_eval(c);
    if val.abs() <= noise || half_curv == 0.0 {
        return Split::Real(c, c);
    }
    let ratio = val / half_curv;
    if ratio < 0.0 {
        let d = (-ratio).sqrt();
        Split::Real(c - d, c + d)
    } else {
        Split::Complex(c, ratio.sqrt())
    }
}

/// Roots of `x^2 + b x + c` as `(re, im)` pairs.
fn quadratic(b: f64, c: f64) -> Vec<(f64, f64)> {
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let q = -0.5 * (b + b.signum() * disc.sqrt());
        if q == 0.0 {
            return vec![(0.0, 0.0), (0.0, 0.0)];
        }
        vec![(q, 0.0), (c / q, 0.0)]
    } else {
        let re = -0.5 * b;
        let im = 0.5 * (-disc).sqrt();
        vec![(re, im), (re, -im)]
    }
}

/// Roots of `x^3 + a x^2 + b x + c`.
fn cubic(a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    if p < 0.0 && disc <= 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| (m * (theta - 2.0 * PI * k as f64 / 3.0).cos() - shift, 0.0))
            .collect()
    } else {
        let sd = disc.max(0.0).sqrt();
        let u = (-q / 2.0 + sd).cbrt();
        let v = (-q / 2.0 - sd).cbrt();
        let re = -(u + v) / 2.0 - shift;
        let im = (u - v).abs() * 3f64.sqrt() / 2.0;
        vec![(u + v - shift, 0.0), (re, im), (re, -im)]
    }
}

/// Roots of `x^4 + a x^3 + b x^2 + c x + d` by Ferrari's method.
fn quartic(a: f64, b: f64, c: f64, d: f64) -> Vec<(f64, f64)> {
    let shift = a / 4.0;
    let p = b - 3.0 * a * a / 8.0;
    let q = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a.powi(4) / 256.0;
    let scale = 1.0 + p.abs() + q.abs().sqrt() + r.abs().sqrt();
    let mut out = Vec::with_capacity(4);
    if q.abs() <= 1e-14 * scale * scale * scale {
        // biquadratic y^4 + p y^2 + r
        for (z, zi) in quadratic(p, r) {
            out.extend(complex_sqrt_pair(z, zi));
        }
    } else {
        // resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0 has a positive root
        let m = cubic(p, p * p / 4.0 - r, -q * q / 8.0)
            .into_iter()
            .filter(|&(_, im)| im == 0.0)
            .map(|(re, _)| re)
            .fold(f64::NEG_INFINITY, f64::max)
            .max(f64::MIN_POSITIVE);
        let s = (2.0 * m).sqrt();
        out.extend(quadratic(-s, p / 2.0 + m + q / (2.0 * s)));
        out.extend(quadratic(s, p / 2.0 + m - q / (2.0 * s)));
    }
    out.into_iter().map(|(re, im)| (re - shift, im)).collect()
}

/// Both square roots of the complex number `z + zi·i`.
fn complex_sqrt_pair(z: f64, zi: f64) -> [(f64, f64); 2] {
    if zi == 0.0 {
        if z >= 0.0 {
            let s = z.sqrt();
            return [(s, 0.0), (-s, 0.0)];
        }
        let s = (-z).sqrt();
        return [(0.0, s), (0.0, -s)];
    }
    let modulus = z.hypot(zi);
    let re = ((modulus + z) / 2.0).sqrt();
    let im = ((modulus - z) / 2.0).sqrt().copysign(zi);
    [(re, im), (-re, -im)]
}

/// A root of an integer polynomial, with its exact value when it is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactRoot {
    pub value: f64,
    pub exact: Option<BigInt>,
}

/// Real roots (with multiplicity, ascending) of a monic integer polynomial of
/// degree ≤ 4.
///
/// Integer roots are found and deflated exactly. What remains has no rational
/// roots, so a quadratic remainder is decided by its exact discriminant, a cubic
/// remainder is irreducible (hence has simple roots), and a quartic remainder is
/// either squarefree or the square of an integer quadratic; only simple roots are
/// ever handed to the floating-point solver.
pub fn exact_real_roots(coeffs: &[BigInt]) -> Result<Vec<ExactRoot>> {
    let mut p: Vec<BigInt> = coeffs.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let deg = p.len() - 1;
    if deg > 4 {
        return Err(LinalgError::DegreeTooHigh(deg));
    }
    let lead = p[deg].clone();
    if lead.abs() != BigInt::from(1) {
        // not monic: fall back to the numeric path
        return Ok(real_roots_low_degree(&Polynomial::from_ints(&p))?
            .into_iter()
            .map(|value| ExactRoot { value, exact: None })
            .collect());
    }
    if lead < BigInt::zero() {
        p.iter_mut().for_each(|c| *c = -c.clone());
    }

    let mut roots: Vec<ExactRoot> = Vec::new();
    let push_int = |roots: &mut Vec<ExactRoot>, k: &BigInt| {
        roots.push(ExactRoot {
            value: k.to_f64().unwrap_or(f64::NAN),
            exact: Some(k.clone()),
        })
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push_int(&mut roots, &BigInt::zero());
    }
    if p.len() > 1 {
        for k in divisors(&p[0]) {
            for cand in [k.clone(), -k] {
                while let Some(q) = deflate_int_root(&p, &cand) {
                    p = q;
                    push_int(&mut roots, &cand);
                }
            }
        }
    }

    let rest = p.len() - 1;
    let numeric = |poly: &[BigInt]| -> Result<Vec<f64>> {
        real_roots_low_degree(&Polynomial::from_ints(poly))
    };
    let mut push_float = |vals: Vec<f64>, times: usize| {
        for v in vals {
            for _ in 0..times {
                roots.push(ExactRoot {
                    value: v,
                    exact: None,
                });
            }
        }
    };
    match rest {
        0 => {}
        2 => {
            let disc = &p[1] * &p[1] - BigInt::from(4) * &p[0];
            if disc.is_negative() {
                let re = -p[1].to_f64().unwrap_or(f64::NAN) / 2.0;
                let im = (-disc.to_f64().unwrap_or(f64::NAN)).sqrt() / 2.0;
                return Err(LinalgError::ComplexRootDetected { re, im });
            }
            push_float(numeric(&p)?, 1);
        }
        4 => {
            if let Some(s) = integer_square_root_poly(&p) {
                let disc = &s[1] * &s[1] - BigInt::from(4) * &s[0];
                if disc.is_negative() {
                    let re = -s[1].to_f64().unwrap_or(f64::NAN) / 2.0;
                    let im = (-disc.to_f64().unwrap_or(f64::NAN)).sqrt() / 2.0;
                    return Err(LinalgError::ComplexRootDetected { re, im });
                }
                push_float(numeric(&s)?, 2);
            } else {
                push_float(numeric(&p)?, 1);
            }
        }
        _ => push_float(numeric(&p)?, 1),
    }
    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(roots)
}

/// Positive divisors of a nonzero integer, ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Monic integer quadratic `s` with `s^2 == p`, for monic quartic `p`.
fn integer_square_root_poly(p: &[BigInt]) -> Option<Vec<BigInt>> {
    let two = BigInt::from(2);
    if !p[3].is_multiple_of(&two) {
        return None;
    }
    let s1 = &p[3] / &two;
    let rem = &p[2] - &s1 * &s1;
    if !rem.is_multiple_of(&two) {
        return None;
    }
    let s0 = rem / &two;
    let ok = &two * &s1 * &s0 == p[1] && &s0 * &s0 == p[0];
    ok.then(|| vec![s0, s1, BigInt::from(1)])
}
