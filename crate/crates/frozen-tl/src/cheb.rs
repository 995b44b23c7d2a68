//! The Grothendieck-group layer: integer polynomials, Chebyshev polynomials
//! of the second kind (monic normalization on `[-2, 2]`), the X/Y base
//! change between the monomial and Chebyshev bases, and the Catalan moment
//! pairing under which the Chebyshev family is orthonormal.
//!
//! The classes of indecomposable projectives correspond to monomials `x^n`,
//! the classes of standard modules to the Chebyshev polynomials; the X and Y
//! matrices record the two filtration expansions and are mutually inverse.

use crate::diagram::{enumerate, EnumFilter};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial in one variable, dense coefficients, index = exponent,
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Shift by a power of the variable.
    pub fn shifted(&self, by: usize) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        num /= BigInt::from(i + 1);
    }
    num
}

/// The k-th Catalan number.
pub fn catalan(k: usize) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// Chebyshev polynomial of the second kind (monic form), from the recurrence
/// `U_{n+1} = x U_n - U_{n-1}` with `U_0 = 1`, `U_1 = x`.
pub fn chebyshev(n: usize) -> IntPolynomial {
    chebyshev_table(n).pop().expect("nonempty table")
}

/// All of `U_0..=U_n`.
pub fn chebyshev_table(n: usize) -> Vec<IntPolynomial> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(IntPolynomial::constant(1));
    if n >= 1 {
        table.push(IntPolynomial::monomial(1));
    }
    for k in 2..=n {
        let prev: &IntPolynomial = &table[k - 1];
        let xp = prev.shifted(1);
        let next = xp.sub(&table[k - 2]);
        table.push(next);
    }
    table.truncate(n + 1);
    table
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixFlavor {
    X,
    Y,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixMode {
    /// closed-form binomial entries
    Formula,
    /// entries obtained by counting diagrams
    Enumerative,
}

/// Truncation of one of the two upper-triangular base-change matrices to
/// indices `0..=size-1`. Nonzero entries sit at `(n, n+2k)` only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaseChangeMatrix {
    size: usize,
    flavor: MatrixFlavor,
    entries: Vec<Vec<BigInt>>,
}

impl BaseChangeMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn flavor(&self) -> MatrixFlavor {
        self.flavor
    }

    pub fn get(&self, n: usize, m: usize) -> &BigInt {
        &self.entries[n][m]
    }

    pub fn multiply(&self, other: &BaseChangeMatrix) -> Vec<Vec<BigInt>> {
        let size = self.size.min(other.size);
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        (0..size)
                            .map(|k| self.get(i, k) * other.get(k, j))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_identity_product(&self, other: &BaseChangeMatrix) -> bool {
        let prod = self.multiply(other);
        prod.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push('n');
        for m in 0..self.size {
            out.push_str(&format!(",{m}"));
        }
        out.push('\n');
        for n in 0..self.size {
            out.push_str(&n.to_string());
            for m in 0..self.size {
                out.push_str(&format!(",{}", self.get(n, m)));
            }
            out.push('\n');
        }
        out
    }
}

/// Number of diagrams from `n` to `n+2k` points with no left returns,
/// in closed form.
pub fn x_count_formula(n: usize, k: usize) -> BigInt {
    let num = BigInt::from(n + 1) * binomial(n + 2 * k, k);
    let den = BigInt::from(n + k + 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Number of diagrams from `n` to `n+2k` points with no left returns and
/// only unnested right returns, in closed form.
pub fn y_count_formula(n: usize, k: usize) -> BigInt {
    binomial(n + k, k)
}

fn x_count_enumerative(n: usize, k: usize) -> BigInt {
    BigInt::from(enumerate(n, n + 2 * k, &EnumFilter::no_left()).len())
}

fn y_count_enumerative(n: usize, k: usize) -> BigInt {
    BigInt::from(enumerate(n, n + 2 * k, &EnumFilter::no_left_unnested_right()).len())
}

/// The matrix with entries counting no-left-return diagrams.
pub fn x_matrix(max_index: usize, mode: MatrixMode) -> BaseChangeMatrix {
    let size = max_index + 1;
    let mut entries = vec![vec![BigInt::zero(); size]; size];
    for n in 0..size {
        for k in 0..=(size - 1 - n) / 2 {
            let m = n + 2 * k;
            entries[n][m] = match mode {
                MatrixMode::Formula => x_count_formula(n, k),
                MatrixMode::Enumerative => x_count_enumerative(n, k),
            };
        }
    }
    BaseChangeMatrix {
        size,
        flavor: MatrixFlavor::X,
        entries,
    }
}

/// The signed matrix whose entry magnitudes count no-left-return diagrams
/// with unnested right returns.
pub fn y_matrix(max_index: usize, mode: MatrixMode) -> BaseChangeMatrix {
    let size = max_index + 1;
    let mut entries = vec![vec![BigInt::zero(); size]; size];
    for n in 0..size {
        for k in 0..=(size - 1 - n) / 2 {
            let m = n + 2 * k;
            let count = match mode {
                MatrixMode::Formula => y_count_formula(n, k),
                MatrixMode::Enumerative => y_count_enumerative(n, k),
            };
            entries[n][m] = if k % 2 == 0 { count } else { -count };
        }
    }
    BaseChangeMatrix {
        size,
        flavor: MatrixFlavor::Y,
        entries,
    }
}

/// Class of the n-th standard module expanded in the monomial basis:
/// the alternating sum over `k` of `binom(n-k, k) x^{n-2k}`. Coincides with
/// the n-th Chebyshev polynomial.
pub fn expand_standard(n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = binomial(n - k, k);
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Class of the n-th projective expanded over standard classes: entry `m`
/// of the result is the multiplicity of the m-th standard class.
pub fn expand_projective_in_standards(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        out[n - 2 * k] = x_count_formula(n - 2 * k, k);
    }
    out
}

/// Index list `(|n-m|, |n-m|+2, ..., n+m)` of the product expansion
/// `U_n U_m = sum U_i`; the polynomial identity is verified exactly.
pub fn cheb_product(n: usize, m: usize) -> Vec<usize> {
    let lo = n.abs_diff(m);
    let hi = n + m;
    let indices: Vec<usize> = (lo..=hi).step_by(2).collect();
    let table = chebyshev_table(hi);
    let lhs = table[n].mul(&table[m]);
    let mut rhs = IntPolynomial::zero();
    for &i in &indices {
        rhs = rhs.add(&table[i]);
    }
    assert_eq!(lhs, rhs, "product expansion failed for ({n},{m})");
    indices
}

/// Bilinear form with moments `(x^a, x^b) = C_{(a+b)/2}` for even `a+b` and
/// zero otherwise; equals the dimension of the hom space between the a-th
/// and b-th projectives.
pub fn catalan_pairing(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let mut acc = BigInt::zero();
    for (a, ca) in f.coeffs().iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in g.coeffs().iter().enumerate() {
            if cb.is_zero() || (a + b) % 2 == 1 {
                continue;
            }
            acc += ca * cb * catalan((a + b) / 2);
        }
    }
    acc
}

/// Determinant of a square polynomial matrix by Laplace expansion with
/// memoization on column subsets; division free, so it serves as an oracle
/// independent of any recurrence.
fn poly_determinant(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::constant(1);
    }
    // dp over subsets of columns used by the leading rows
    let mut memo: std::collections::HashMap<u64, IntPolynomial> = Default::default();
    memo.insert(0, IntPolynomial::constant(1));
    for _ in 0..n {
        let mut next: std::collections::HashMap<u64, IntPolynomial> = Default::default();
        for (mask, det) in memo {
            let row = mask.count_ones() as usize;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = &m[row][col];
                if entry.is_zero() {
                    continue;
                }
                let sign_flips = (mask >> (col + 1)).count_ones();
                let term = det.mul(entry);
                let term = if sign_flips % 2 == 1 { term.scale(&BigInt::from(-1)) } else { term };
                let key = mask | (1 << col);
                let slot = next.entry(key).or_insert_with(IntPolynomial::zero);
                *slot = slot.add(&term);
            }
        }
        memo = next;
    }
    memo.remove(&((1u64 << n) - 1)).unwrap_or_else(IntPolynomial::zero)
}

/// Checks the tridiagonal determinant expression of the n-th Chebyshev
/// polynomial against the recurrence value.
pub fn determinant_check(n: usize) -> bool {
    let x = IntPolynomial::monomial(1);
    let one = IntPolynomial::constant(1);
    let mat: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        x.clone()
                    } else if i.abs_diff(j) == 1 {
                        one.clone()
                    } else {
                        IntPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    poly_determinant(&mat) == chebyshev(n)
}

/// Verifies that the generating function of the Chebyshev family inverts
/// `1 - x t + t^2` as a power series in `t`, up to order `max_order`.
pub fn generating_function_check(max_order: usize) -> bool {
    // coefficients of (sum_n U_n(x) t^n) * (1 - x t + t^2) in t
    let table = chebyshev_table(max_order);
    let x = IntPolynomial::monomial(1);
    for order in 0..=max_order {
        let mut acc = table[order].clone();
        if order >= 1 {
            acc = acc.sub(&table[order - 1].mul(&x));
        }
        if order >= 2 {
            acc = acc.add(&table[order - 2]);
        }
        let expected = if order == 0 {
            IntPolynomial::constant(1)
        } else {
            IntPolynomial::zero()
        };
        if acc != expected {
            return false;
        }
    }
    true
}

/// Projection onto the span of the first `k+1` Chebyshev polynomials:
/// converts to the Chebyshev basis, truncates, converts back. Monomials of
/// degree at most `k` are fixed; Chebyshev polynomials beyond `k` die.
pub fn truncation_operator(k: usize, f: &IntPolynomial) -> IntPolynomial {
    if f.is_zero() {
        return IntPolynomial::zero();
    }
    let deg = f.degree().unwrap();
    let x = x_matrix(deg, MatrixMode::Formula);
    let y = y_matrix(deg, MatrixMode::Formula);
    // Chebyshev coefficients of f: u = X * (monomial coefficients)
    let u: Vec<BigInt> = (0..=deg)
        .map(|a| {
            (0..=deg)
                .map(|b| x.get(a, b) * f.coeff(b))
                .sum()
        })
        .collect();
    // truncate and convert back through Y
    let coeffs: Vec<BigInt> = (0..=deg)
        .map(|a| {
            (0..=deg.min(k))
                .map(|b| y.get(a, b) * &u[b])
                .sum()
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_small_values() {
        assert_eq!(chebyshev(0), IntPolynomial::constant(1));
        assert_eq!(chebyshev(2), IntPolynomial::from_i64_coeffs(&[-1, 0, 1]));
        assert_eq!(
            chebyshev(8),
            IntPolynomial::from_i64_coeffs(&[1, 0, -10, 0, 15, 0, -7, 0, 1])
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(chebyshev(8).to_string(), "x^8 - 7x^6 + 15x^4 - 10x^2 + 1");
        assert_eq!(chebyshev(1).to_string(), "x");
        assert_eq!(chebyshev(0).to_string(), "1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn xy_matrices_invert() {
        let x = x_matrix(12, MatrixMode::Formula);
        let y = y_matrix(12, MatrixMode::Formula);
        assert!(x.is_identity_product(&y));
        assert!(y.is_identity_product(&x));
    }

    #[test]
    fn xy_entries() {
        let x = x_matrix(6, MatrixMode::Formula);
        let y = y_matrix(6, MatrixMode::Formula);
        for n in 0..=6 {
            assert!(x.get(n, n).is_one());
            assert!(y.get(n, n).is_one());
        }
        assert_eq!(*y.get(1, 3), BigInt::from(-2));
        assert_eq!(*x.get(0, 6), BigInt::from(5));
    }

    #[test]
    fn formula_matches_enumeration() {
        for n in 0..=6 {
            for k in 0..=3 {
                assert_eq!(x_count_formula(n, k), x_count_enumerative(n, k), "X({n},{k})");
                assert_eq!(y_count_formula(n, k), y_count_enumerative(n, k), "Y({n},{k})");
            }
        }
    }

    #[test]
    fn standard_class_is_chebyshev() {
        for n in 0..=12 {
            assert_eq!(expand_standard(n), chebyshev(n));
        }
        assert_eq!(expand_standard(3), IntPolynomial::from_i64_coeffs(&[0, -2, 0, 1]));
    }

    #[test]
    fn projective_round_trip() {
        // express the 6th projective class over standards, then expand each
        // standard back over monomials
        let n = 6;
        let mult = expand_projective_in_standards(n);
        let mut total = IntPolynomial::zero();
        for (m, c) in mult.iter().enumerate() {
            total = total.add(&expand_standard(m).scale(c));
        }
        assert_eq!(total, IntPolynomial::monomial(n));
    }

    #[test]
    fn product_rule() {
        assert_eq!(cheb_product(1, 1), vec![0, 2]);
        assert_eq!(cheb_product(4, 0), vec![4]);
        assert_eq!(cheb_product(3, 2), vec![1, 3, 5]);
    }

    #[test]
    fn pairing_orthonormal() {
        assert_eq!(
            catalan_pairing(&IntPolynomial::monomial(1), &IntPolynomial::monomial(1)),
            BigInt::one()
        );
        assert!(catalan_pairing(&IntPolynomial::constant(1), &IntPolynomial::monomial(1)).is_zero());
        for n in 0..=6 {
            for m in 0..=6 {
                let v = catalan_pairing(&chebyshev(n), &chebyshev(m));
                assert_eq!(v, BigInt::from(u8::from(n == m)), "({n},{m})");
            }
        }
    }

    #[test]
    fn determinant_and_generating_function() {
        for n in 0..=7 {
            assert!(determinant_check(n), "determinant at {n}");
        }
        assert!(generating_function_check(8));
    }

    #[test]
    fn truncation_projects() {
        // x^2 = U_2 + U_0, so truncating at 0 leaves the constant 1
        assert_eq!(
            truncation_operator(0, &IntPolynomial::monomial(2)),
            IntPolynomial::constant(1)
        );
        for k in 0..=6 {
            for n in 0..=6 {
                let mono = IntPolynomial::monomial(n);
                if n <= k {
                    assert_eq!(truncation_operator(k, &mono), mono);
                }
                let u = chebyshev(n);
                let tu = truncation_operator(k, &u);
                if n > k {
                    assert!(tu.is_zero(), "U_{n} should die under F_{k}");
                } else {
                    assert_eq!(tu, u);
                }
                // idempotence
                let twice = truncation_operator(k, &truncation_operator(k, &mono));
                assert_eq!(twice, truncation_operator(k, &mono));
            }
        }
    }
}
