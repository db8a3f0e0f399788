//! Characteristic polynomials, eigenvalues, and eigenspace bases for
//! matrices of order 2 and 3 over exact rationals.
//!
//! Root finding is two-tier: the rational-root theorem extracts every
//! exact root first, and whatever factor remains is handed to closed-form
//! float solvers (quadratic formula, depressed cubic). Eigenspace bases are
//! computed by fraction-free elimination after clearing denominators, and
//! are normalized to coprime integer entries with a positive first nonzero
//! entry so results are canonical and directly comparable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::measure::det;
use crate::scalar::Scalar;

/// A polynomial with exact rational coefficients, stored ascending
/// (`coeffs[k]` multiplies `x^k`) with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Scalar::zero());
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact product of two polynomials.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    /// The linear factor `x - root`.
    pub fn linear_factor(root: &Scalar) -> Poly {
        Poly::new(vec![-root, Scalar::one()])
    }

    /// Synthetic division by `(x - root)`. The caller must pass an exact
    /// root; the zero remainder is checked.
    fn deflate(&self, root: &Scalar) -> Poly {
        let n = self.degree();
        let mut quotient = vec![Scalar::zero(); n];
        let mut carry = Scalar::zero();
        for k in (0..=n).rev() {
            let value = &self.coeffs[k] + &(&carry * root);
            if k == 0 {
                assert!(value.is_zero(), "deflation requires an exact root");
            } else {
                quotient[k - 1] = value.clone();
                carry = value;
            }
        }
        Poly::new(quotient)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_text(&self.coeffs))
    }
}

fn poly_text(coeffs: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() && coeffs.len() > 1 {
            continue;
        }
        let magnitude = c.abs();
        let body = match (k, magnitude == Scalar::one()) {
            (0, _) => magnitude.to_string(),
            (1, true) => "x".to_string(),
            (1, false) => format!("{magnitude} x"),
            (_, true) => format!("x^{k}"),
            (_, false) => format!("{magnitude} x^{k}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The characteristic polynomial `p(x) = det(A - x I)` of a matrix of
/// order 2 or 3. Leading coefficient is `(-1)^degree` and `p(0) = det(A)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    poly: Poly,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.poly.coeff(k)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.poly.eval(x)
    }

    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Exact characteristic polynomial of a square matrix of order 2 or 3.
///
/// Order 2: `x^2 - tr(A) x + det(A)`. Order 3:
/// `-x^3 + tr(A) x^2 - m2(A) x + det(A)` where `m2` is the sum of the
/// principal 2×2 minors.
pub fn char_poly(a: &Matrix) -> Result<CharPoly> {
    if !a.is_square() || !(a.rows() == 2 || a.rows() == 3) {
        return Err(Error::Shape(format!(
            "characteristic polynomial requires order 2 or 3, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let tr = a.trace()?;
    let d = det(a)?;
    let poly = if a.rows() == 2 {
        Poly::new(vec![d, -tr, Scalar::one()])
    } else {
        let minor = |i: usize, j: usize| a.get(i, i) * a.get(j, j) - a.get(i, j) * a.get(j, i);
        let m2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
        Poly::new(vec![d, -m2, tr, -Scalar::one()])
    };
    Ok(CharPoly { poly })
}

/// The exact roots of a characteristic polynomial, with multiplicity,
/// plus the factor that has no rational roots left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSplit {
    /// `(root, algebraic multiplicity)`, sorted by descending root.
    pub roots: Vec<(Scalar, usize)>,
    /// What remains of the polynomial after deflating every rational root;
    /// constant when the whole spectrum is rational.
    pub residual: Poly,
}

/// Find every rational root of `p` by the rational-root theorem: clear
/// denominators, then test signed divisor quotients of the constant and
/// leading coefficients. Each root found is deflated out and the search
/// repeats on the quotient, so multiplicities are counted exactly.
pub fn rational_roots(p: &CharPoly) -> RootSplit {
    let mut residual = p.poly.clone();
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    while residual.degree() >= 1 {
        match first_rational_root(&residual) {
            Some(root) => {
                residual = residual.deflate(&root);
                match roots.iter_mut().find(|(r, _)| *r == root) {
                    Some((_, count)) => *count += 1,
                    None => roots.push((root, 1)),
                }
            }
            None => break,
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    RootSplit { roots, residual }
}

fn first_rational_root(p: &Poly) -> Option<Scalar> {
    if p.coeff(0).is_zero() {
        return Some(Scalar::zero());
    }
    // Clear denominators: candidates are ±(divisor of constant)/(divisor
    // of leading) for the integer-coefficient image of p.
    let scale = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
    let int_coeff = |c: &Scalar| c.numerator() * (&scale / c.denominator());
    let constant = int_coeff(&p.coeff(0)).abs();
    let leading = int_coeff(&p.coeff(p.degree())).abs();
    for num in divisors(&constant) {
        for den in divisors(&leading) {
            let candidate = Scalar::from_big(num.clone(), den.clone()).expect("nonzero divisor");
            if p.eval(&candidate).is_zero() {
                return Some(candidate);
            }
            let negated = -&candidate;
            if p.eval(&negated).is_zero() {
                return Some(negated);
            }
        }
    }
    None
}

/// Positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if n.is_multiple_of(&i) {
            small.push(i.clone());
            let pair = n / &i;
            if pair != i {
                large.push(pair);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// A root from the float tier. `im == 0` marks a real root.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NumericRoot {
    pub re: f64,
    pub im: f64,
}

impl NumericRoot {
    pub fn real(re: f64) -> Self {
        NumericRoot { re, im: 0.0 }
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

/// Float roots of a polynomial of degree ≤ 3: quadratic formula for
/// degree 2, depressed-cubic closed form for degree 3 (trigonometric
/// method when all three roots are real, the single-real branch
/// otherwise). Complex roots are reported with a nonzero imaginary part.
pub fn numeric_roots(p: &Poly) -> Result<Vec<NumericRoot>> {
    if p.degree() > 3 {
        return Err(Error::Shape(format!(
            "numeric root finding limited to degree 3, got degree {}",
            p.degree()
        )));
    }
    let c: Vec<f64> = p.coeffs().iter().map(Scalar::to_f64).collect();
    let mut roots = match p.degree() {
        0 => Vec::new(),
        1 => vec![(NumericRoot::real(-c[0] / c[1]), true)],
        2 => quadratic_roots(c[2], c[1], c[0]),
        _ => cubic_roots(c[3], c[2], c[1], c[0]),
    };
    // Newton refinement is only safe for simple roots; repeated roots keep
    // their closed-form values.
    for (root, refine) in roots.iter_mut() {
        if *refine && root.is_real() {
            root.re = polish(p, root.re);
        }
    }
    let unsign_zero = |v: f64| if v == 0.0 { 0.0 } else { v };
    let mut roots: Vec<NumericRoot> = roots
        .into_iter()
        .map(|(r, _)| NumericRoot {
            re: unsign_zero(r.re),
            im: unsign_zero(r.im),
        })
        .collect();
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("finite roots")
    });
    Ok(roots)
}

fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<(NumericRoot, bool)> {
    let disc = b * b - 4.0 * a * c;
    // Classify a discriminant that vanishes up to rounding as zero.
    let threshold = 1e-12 * (b * b + (4.0 * a * c).abs());
    if disc.abs() <= threshold {
        let double = NumericRoot::real(-b / (2.0 * a));
        return vec![(double, false), (double, false)];
    }
    if disc < 0.0 {
        let re = -b / (2.0 * a);
        let im = (-disc).sqrt() / (2.0 * a.abs());
        return vec![
            (NumericRoot { re, im: -im }, false),
            (NumericRoot { re, im }, false),
        ];
    }
    let sq = disc.sqrt();
    // Avoid cancellation: compute the larger-magnitude root first.
    let q = if b >= 0.0 {
        -(b + sq) / 2.0
    } else {
        -(b - sq) / 2.0
    };
    if q == 0.0 {
        return vec![
            (NumericRoot::real(0.0), false),
            (NumericRoot::real(0.0), false),
        ];
    }
    vec![
        (NumericRoot::real(q / a), true),
        (NumericRoot::real(c / q), true),
    ]
}

fn cubic_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<(NumericRoot, bool)> {
    // Depress: x = t - b/(3a) gives t^3 + p t + q.
    let b = b / a;
    let c = c / a;
    let d = d / a;
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let discriminant = -4.0 * p * p * p - 27.0 * q * q;
    // Forward rounding error of p, q, and the discriminant, so that a
    // discriminant that is zero up to cancellation noise is classified as
    // zero, while genuinely small discriminants (clustered roots) are not.
    let eps = f64::EPSILON;
    let err_p = eps * (c.abs() + b * b / 3.0);
    let err_q = eps * ((2.0 * b * b * b / 27.0).abs() + (b * c / 3.0).abs() + d.abs());
    let threshold = 100.0 * (12.0 * p * p * err_p + 54.0 * q.abs() * err_q + eps);
    let ts: Vec<(NumericRoot, bool)> = if discriminant.abs() <= threshold {
        if p.abs() <= 100.0 * err_p {
            vec![(NumericRoot::real(0.0), false); 3]
        } else {
            // One simple root at 3q/p and a double at -3q/(2p).
            let simple = 3.0 * q / p;
            let double = -3.0 * q / (2.0 * p);
            vec![
                (NumericRoot::real(simple), true),
                (NumericRoot::real(double), false),
                (NumericRoot::real(double), false),
            ]
        }
    } else if discriminant > 0.0 {
        // Three distinct real roots; p < 0 on this branch.
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| {
                let t = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
                (NumericRoot::real(t), true)
            })
            .collect()
    } else {
        // One real root plus a conjugate pair.
        let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let u = (-q / 2.0 + s).cbrt();
        let v = (-q / 2.0 - s).cbrt();
        let real = u + v;
        let im = (u - v) * 3.0_f64.sqrt() / 2.0;
        vec![
            (NumericRoot::real(real), true),
            (
                NumericRoot {
                    re: -real / 2.0,
                    im: -im.abs(),
                },
                false,
            ),
            (
                NumericRoot {
                    re: -real / 2.0,
                    im: im.abs(),
                },
                false,
            ),
        ]
    };
    ts.into_iter()
        .map(|(r, refine)| {
            (
                NumericRoot {
                    re: r.re - shift,
                    im: r.im,
                },
                refine,
            )
        })
        .collect()
}

/// A couple of Newton steps to pull closed-form real roots down to the
/// residual bound.
fn polish(p: &Poly, mut x: f64) -> f64 {
    let coeffs: Vec<f64> = p.coeffs().iter().map(Scalar::to_f64).collect();
    for _ in 0..2 {
        let mut value = 0.0;
        let mut slope = 0.0;
        for &c in coeffs.iter().rev() {
            slope = slope * x + value;
            value = value * x + c;
        }
        if slope == 0.0 {
            break;
        }
        let next = x - value / slope;
        if !next.is_finite() {
            break;
        }
        x = next;
    }
    x
}

/// Basis of the eigenspace of `a` for the exact eigenvalue `lambda`:
/// the null space of `(A - lambda I)`, computed by fraction-free
/// elimination after clearing denominators. Basis vectors have coprime
/// integer entries and a positive first nonzero entry.
pub fn eigenspace(a: &Matrix, lambda: &Scalar) -> Result<Vec<Vec<Scalar>>> {
    let p = char_poly(a)?;
    if !p.eval(lambda).is_zero() {
        return Err(Error::NotAnEigenvalue(lambda.to_string()));
    }
    let shifted = Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        if i == j {
            a.get(i, j) - lambda
        } else {
            a.get(i, j).clone()
        }
    })?;
    Ok(null_space(&shifted))
}

/// Null space basis of a small rational matrix.
fn null_space(m: &Matrix) -> Vec<Vec<Scalar>> {
    let rows = m.rows();
    let cols = m.cols();
    // Clear denominators row by row.
    let mut table: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let scale = m
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
            m.row(i)
                .iter()
                .map(|c| c.numerator() * (&scale / c.denominator()))
                .collect()
        })
        .collect();

    // Fraction-free forward elimination with per-row gcd reduction.
    let mut pivot_cols = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&r| !table[r][col].is_zero()) else {
            continue;
        };
        table.swap(next_row, pivot);
        for r in next_row + 1..rows {
            if table[r][col].is_zero() {
                continue;
            }
            let g = table[r][col].gcd(&table[next_row][col]);
            let row_mult = &table[next_row][col] / &g;
            let pivot_mult = &table[r][col] / &g;
            let updated: Vec<BigInt> = table[r]
                .iter()
                .zip(&table[next_row])
                .map(|(entry, pivot_entry)| entry * &row_mult - pivot_entry * &pivot_mult)
                .collect();
            table[r] = updated;
            reduce_row(&mut table[r]);
        }
        pivot_cols.push(col);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }

    // Back-substitute one basis vector per free column.
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .into_iter()
        .map(|free| {
            let mut x = vec![Scalar::zero(); cols];
            x[free] = Scalar::one();
            for (k, &col) in pivot_cols.iter().enumerate().rev() {
                let mut sum = Scalar::zero();
                for j in col + 1..cols {
                    if !table[k][j].is_zero() {
                        sum = sum + Scalar::from(table[k][j].clone()) * &x[j];
                    }
                }
                x[col] = (-sum)
                    .checked_div(&Scalar::from(table[k][col].clone()))
                    .expect("pivot entries are nonzero");
            }
            normalize_to_coprime(x)
        })
        .collect()
}

/// Scale a rational vector to coprime integer entries with the first
/// nonzero entry positive.
fn normalize_to_coprime(v: Vec<Scalar>) -> Vec<Scalar> {
    let scale = v
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| c.numerator() * (&scale / c.denominator()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if g.is_zero() {
        return v;
    }
    let flip = ints
        .iter()
        .find(|n| !n.is_zero())
        .map(|first| first.is_negative())
        .unwrap_or(false);
    ints.into_iter()
        .map(|n| {
            let reduced = n / &g;
            Scalar::from(if flip { -reduced } else { reduced })
        })
        .collect()
}

fn reduce_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if g > BigInt::one() {
        for entry in row.iter_mut() {
            *entry = &*entry / &g;
        }
    }
}

/// An exact eigenvalue with its eigenspace basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenPair {
    pub value: Scalar,
    pub algebraic_multiplicity: usize,
    /// Coprime-integer basis vectors of the eigenspace; never empty.
    pub basis: Vec<Vec<Scalar>>,
}

/// The complete eigen decomposition the exact engine can produce: exact
/// pairs in descending eigenvalue order plus float roots of whatever
/// factor has an irrational (or complex) spectrum.
#[derive(Clone, PartialEq, Debug)]
pub struct EigenAnalysis {
    pub char_poly: CharPoly,
    pub exact: Vec<EigenPair>,
    pub numeric_residual: Vec<NumericRoot>,
}

/// Run the full two-tier analysis on a matrix of order 2 or 3.
pub fn eigen_pairs(a: &Matrix) -> Result<EigenAnalysis> {
    let p = char_poly(a)?;
    let split = rational_roots(&p);
    let exact = split
        .roots
        .iter()
        .map(|(value, multiplicity)| {
            let basis = eigenspace(a, value)?;
            Ok(EigenPair {
                value: value.clone(),
                algebraic_multiplicity: *multiplicity,
                basis,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let numeric_residual = if split.residual.is_constant() {
        Vec::new()
    } else {
        numeric_roots(&split.residual)?
    };
    Ok(EigenAnalysis {
        char_poly: p,
        exact,
        numeric_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    fn m(text: &str) -> Matrix {
        Matrix::parse(text).unwrap()
    }

    fn investment_matrix() -> Matrix {
        m("2,1/3,0;1,4/3,0;1,1/3,2/3")
    }

    /// Expand the known factored form symbolically; the oracle for the
    /// expanded coefficients, which are never written down by hand.
    fn factored_reference() -> Poly {
        // (2/3 - x) * (x^2 - 10/3 x + 7/3)
        let left = Poly::new(vec![s("2/3"), s("-1")]);
        let right = Poly::new(vec![s("7/3"), s("-10/3"), s("1")]);
        left.mul(&right)
    }

    #[test]
    fn char_poly_matches_symbolic_expansion_of_factored_form() {
        let p = char_poly(&investment_matrix()).unwrap();
        assert_eq!(p.as_poly(), &factored_reference());
        // Root checks straight from the factored form.
        for root in ["2/3", "1", "7/3"] {
            assert!(p.eval(&s(root)).is_zero(), "p({root}) != 0");
        }
        assert_eq!(p.coeff(3), s("-1"));
    }

    #[test]
    fn char_poly_of_identity_has_triple_root_one() {
        let p = char_poly(&Matrix::identity(3).unwrap()).unwrap();
        let split = rational_roots(&p);
        assert_eq!(split.roots, vec![(Scalar::one(), 3)]);
        assert!(split.residual.is_constant());
    }

    #[test]
    fn char_poly_of_diagonal_has_diagonal_spectrum() {
        let p = char_poly(&m("5,0,0;0,-2/3,0;0,0,9")).unwrap();
        let split = rational_roots(&p);
        let roots: Vec<Scalar> = split.roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(roots, vec![s("9"), s("5"), s("-2/3")]);
    }

    #[test]
    fn char_poly_constant_term_is_determinant() {
        for text in ["2,1/3,0;1,4/3,0;1,1/3,2/3", "1,5;6,2", "1/2,3;0,4"] {
            let a = m(text);
            let p = char_poly(&a).unwrap();
            assert_eq!(p.coeff(0), det(&a).unwrap());
            let n = p.degree();
            let sign = if n.is_multiple_of(2) { s("1") } else { s("-1") };
            assert_eq!(p.coeff(n), sign);
        }
    }

    #[test]
    fn char_poly_rejects_wrong_shapes() {
        assert!(matches!(char_poly(&m("1")), Err(Error::Shape(_))));
        assert!(matches!(
            char_poly(&Matrix::identity(4).unwrap()),
            Err(Error::Shape(_))
        ));
        assert!(matches!(char_poly(&m("1,2,3;4,5,6")), Err(Error::Shape(_))));
    }

    #[test]
    fn rational_roots_recovers_constructed_spectra() {
        // Build -(x - r1)(x - r2)(x - r3) and solve it back.
        let chosen = [s("-3/2"), s("1/3"), s("4")];
        let mut poly = Poly::new(vec![s("-1")]);
        for r in &chosen {
            poly = poly.mul(&Poly::linear_factor(r));
        }
        let p = CharPoly { poly };
        let split = rational_roots(&p);
        let mut found: Vec<Scalar> = split.roots.iter().map(|(r, _)| r.clone()).collect();
        found.sort();
        let mut expected = chosen.to_vec();
        expected.sort();
        assert_eq!(found, expected);
        assert!(split.residual.is_constant());
    }

    #[test]
    fn rational_roots_leaves_irrational_quadratic_untouched() {
        // -(x - 1)(x^2 - 2): only the rational root comes out.
        let poly = Poly::new(vec![s("-1")])
            .mul(&Poly::linear_factor(&s("1")))
            .mul(&Poly::new(vec![s("-2"), s("0"), s("1")]));
        let p = CharPoly { poly };
        let split = rational_roots(&p);
        assert_eq!(split.roots, vec![(s("1"), 1)]);
        assert_eq!(split.residual.degree(), 2);
        assert!(split.residual.eval(&s("0")) != Scalar::zero());
    }

    #[test]
    fn deflated_factors_remultiply_to_the_original() {
        let p = char_poly(&investment_matrix()).unwrap();
        let split = rational_roots(&p);
        let mut rebuilt = split.residual.clone();
        for (root, multiplicity) in &split.roots {
            for _ in 0..*multiplicity {
                rebuilt = rebuilt.mul(&Poly::linear_factor(root));
            }
        }
        assert_eq!(&rebuilt, p.as_poly());
    }

    #[test]
    fn zero_eigenvalue_is_found_for_singular_matrices() {
        let p = char_poly(&m("1,1;1,1")).unwrap();
        let split = rational_roots(&p);
        assert_eq!(split.roots, vec![(s("2"), 1), (s("0"), 1)]);
    }

    #[test]
    fn numeric_roots_of_sqrt_two_quadratic() {
        let p = Poly::new(vec![s("-2"), s("0"), s("1")]);
        let roots = numeric_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(NumericRoot::is_real));
        assert!((roots[0].re + 2f64.sqrt()).abs() <= 1e-12);
        assert!((roots[1].re - 2f64.sqrt()).abs() <= 1e-12);
        for r in &roots {
            assert!((r.re * r.re - 2.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn numeric_roots_match_exact_spectrum_of_the_investment_matrix() {
        let p = char_poly(&investment_matrix()).unwrap();
        let roots = numeric_roots(p.as_poly()).unwrap();
        let expected = [2.0 / 3.0, 1.0, 7.0 / 3.0];
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(expected) {
            assert!(r.is_real());
            assert!((r.re - e).abs() <= 1e-9, "{} vs {e}", r.re);
        }
    }

    #[test]
    fn single_real_cubic_root_agrees_with_bisection() {
        // x^3 - x - 1 has exactly one real root near 1.3247.
        let p = Poly::new(vec![s("-1"), s("-1"), s("0"), s("1")]);
        let roots = numeric_roots(&p).unwrap();
        let real: Vec<&NumericRoot> = roots.iter().filter(|r| r.is_real()).collect();
        assert_eq!(real.len(), 1);
        // Bisection oracle on [1, 2].
        let f = |x: f64| x * x * x - x - 1.0;
        let (mut lo, mut hi) = (1.0_f64, 2.0_f64);
        for _ in 0..60 {
            let mid = (lo + hi) / 2.0;
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!((real[0].re - lo).abs() <= 1e-9);
        let complex: Vec<&NumericRoot> = roots.iter().filter(|r| !r.is_real()).collect();
        assert_eq!(complex.len(), 2);
    }

    #[test]
    fn complex_quadratic_roots_are_flagged() {
        // x^2 + 1
        let p = Poly::new(vec![s("1"), s("0"), s("1")]);
        let roots = numeric_roots(&p).unwrap();
        assert!(roots.iter().all(|r| !r.is_real()));
        assert!((roots[0].im + 1.0).abs() <= 1e-12);
        assert!((roots[1].im - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn eigenspaces_of_the_investment_matrix_are_canonical() {
        let a = investment_matrix();
        assert_eq!(
            eigenspace(&a, &s("7/3")).unwrap(),
            vec![vec![s("5"), s("5"), s("4")]]
        );
        assert_eq!(
            eigenspace(&a, &s("2/3")).unwrap(),
            vec![vec![s("0"), s("0"), s("1")]]
        );
        assert_eq!(
            eigenspace(&a, &s("1")).unwrap(),
            vec![vec![s("1"), s("-3"), s("0")]]
        );
    }

    #[test]
    fn eigenspace_vectors_satisfy_the_eigen_equation() {
        let a = investment_matrix();
        for lambda in ["7/3", "2/3", "1"] {
            let lambda = s(lambda);
            for v in eigenspace(&a, &lambda).unwrap() {
                let image = a.mul_vec(&v).unwrap();
                let scaled: Vec<Scalar> = v.iter().map(|x| &lambda * x).collect();
                assert_eq!(image, scaled);
            }
        }
    }

    #[test]
    fn eigenspace_rejects_non_eigenvalues() {
        let a = investment_matrix();
        assert!(matches!(
            eigenspace(&a, &s("5")),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn identity_eigenspace_is_the_whole_space() {
        let basis = eigenspace(&Matrix::identity(3).unwrap(), &s("1")).unwrap();
        assert_eq!(
            basis,
            vec![
                vec![s("1"), s("0"), s("0")],
                vec![s("0"), s("1"), s("0")],
                vec![s("0"), s("0"), s("1")],
            ]
        );
    }

    #[test]
    fn eigen_pairs_sorts_descending_and_counts_multiplicity() {
        let analysis = eigen_pairs(&investment_matrix()).unwrap();
        let values: Vec<Scalar> = analysis.exact.iter().map(|p| p.value.clone()).collect();
        assert_eq!(values, vec![s("7/3"), s("1"), s("2/3")]);
        assert!(analysis.numeric_residual.is_empty());

        let identity = eigen_pairs(&Matrix::identity(3).unwrap()).unwrap();
        assert_eq!(identity.exact.len(), 1);
        assert_eq!(identity.exact[0].algebraic_multiplicity, 3);
        assert_eq!(identity.exact[0].basis.len(), 3);
    }

    #[test]
    fn eigen_pairs_reports_irrational_spectra_numerically() {
        // [[0,2],[1,0]] has eigenvalues ±√2.
        let analysis = eigen_pairs(&m("0,2;1,0")).unwrap();
        assert!(analysis.exact.is_empty());
        assert_eq!(analysis.numeric_residual.len(), 2);
        assert!((analysis.numeric_residual[1].re - 2f64.sqrt()).abs() <= 1e-9);
    }

    #[test]
    fn poly_display_is_readable() {
        let p = char_poly(&investment_matrix()).unwrap();
        assert_eq!(p.to_string(), "-x^3 + 4 x^2 - 41/9 x + 14/9");
        assert_eq!(Poly::new(vec![s("0")]).to_string(), "0");
        assert_eq!(
            Poly::new(vec![s("-2"), s("0"), s("1")]).to_string(),
            "x^2 - 2"
        );
    }
}
