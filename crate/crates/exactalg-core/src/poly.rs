//! Dense univariate polynomials over a [`Scalar`] field.
//!
//! Internal helper for minimal polynomials and their factorization: full
//! splitting over prime fields (Frobenius kernel plus gcd refinement) and
//! rational-root extraction over Q. Only what the algebra layer needs.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::kernel;
use crate::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly {
    field: FieldSpec,
    /// coeffs[i] multiplies x^i; no trailing zeros, so zero = empty.
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn constant(s: Scalar) -> Self {
        let field = s.field();
        Poly::new(field, alloc::vec![s])
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly::new(field, alloc::vec![field.zero(), field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = alloc::vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap();
        let lead_inv = divisor.leading().inv();
        let mut rem = self.clone();
        let mut quo = alloc::vec![self.field.zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let factor = rem.leading().mul(&lead_inv);
            quo[r - d] = factor.clone();
            // rem -= factor * x^(r-d) * divisor
            let mut shifted = alloc::vec![self.field.zero(); r - d];
            shifted.extend(divisor.coeffs.iter().map(|c| c.mul(&factor)));
            rem = rem.sub(&Poly::new(self.field, shifted));
        }
        (Poly::new(self.field, quo), rem)
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        Poly::new(
            self.field,
            (1..self.coeffs.len())
                .map(|i| self.coeffs[i].mul(&Scalar::from_i64(self.field, i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// self^exp mod m by binary powering.
    pub fn pow_mod(&self, mut exp: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::constant(self.field.one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    /// The product of the distinct irreducible factors (over a prime field
    /// this relies on the inputs here being separable, which minimal
    /// polynomials of split semisimple elements are).
    pub fn squarefree_part(&self) -> Poly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        self.divrem(&self.gcd(&d)).0.monic()
    }
}

/// Fully factor a monic squarefree polynomial over a prime field into monic
/// irreducibles, by the kernel of the Frobenius map on k[x]/(f) followed by
/// gcd refinement against every kernel vector and every field constant.
/// Deterministic; the constant loop is O(p), fine for the small primes this
/// crate targets.
pub(crate) fn factor_squarefree_prime_field(f: &Poly) -> Vec<Poly> {
    let field = f.field;
    let p = field.characteristic();
    assert!(p > 0, "prime-field factorization over Q");
    let f = f.monic();
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return alloc::vec![f],
        Some(n) => n,
    };
    // Frobenius matrix: column i holds x^(i*p) mod f.
    let xp = Poly::x(field).pow_mod(p, &f);
    let mut power = Poly::constant(field.one());
    let mut frob = Matrix::zeros(field, n, n);
    for col in 0..n {
        for row in 0..n {
            frob[(row, col)] = power.coeff(row);
        }
        power = power.mul(&xp).rem(&f);
    }
    let fixed = kernel(&frob.sub(&Matrix::identity(field, n)));
    let expected = fixed.dim();
    let mut factors = alloc::vec![f.clone()];
    for v in fixed.basis_vectors() {
        if factors.len() == expected {
            break;
        }
        let vp = Poly::new(field, v);
        if vp.degree().map_or(true, |d| d == 0) {
            continue;
        }
        let mut refined = Vec::new();
        for h in factors {
            if h.degree() == Some(1) {
                refined.push(h);
                continue;
            }
            let mut parts = Vec::new();
            for c in 0..p {
                let shifted = vp.sub(&Poly::constant(Scalar::from_i64(field, c as i64)));
                let g = h.gcd(&shifted);
                if g.degree().is_some_and(|d| d >= 1 && d < h.degree().unwrap()) {
                    parts.push(g);
                }
            }
            if parts.is_empty() {
                refined.push(h);
            } else {
                // The parts multiply out to h; recover the last one.
                let mut rest = h.clone();
                for part in &parts {
                    rest = rest.divrem(part).0;
                }
                if rest.degree().is_some_and(|d| d >= 1) {
                    parts.push(rest.monic());
                }
                refined.extend(parts);
            }
        }
        factors = refined;
    }
    factors.sort_by_key(|h| h.degree());
    factors
}

/// All rational roots of a nonzero polynomial over Q, each listed once.
///
/// Uses the classical numerator/denominator divisor test after clearing
/// denominators. Divisor enumeration factors by trial division with a step
/// cap; a missed huge prime factor can only hide a root, never invent one,
/// and callers treat missing splits conservatively.
pub(crate) fn rational_roots(f: &Poly) -> Vec<Scalar> {
    assert!(f.field.is_rational(), "rational roots over a prime field");
    assert!(!f.is_zero(), "rational roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut f = f.clone();
    // Factor out x^k first.
    if f.coeff(0).is_zero() {
        roots.push(f.field.zero());
        while f.coeff(0).is_zero() && f.degree().is_some_and(|d| d >= 1) {
            f = Poly::new(f.field, f.coeffs[1..].to_vec());
        }
    }
    let Some(deg) = f.degree() else { return roots };
    if deg == 0 {
        return roots;
    }
    // Clear denominators.
    let mut denom_lcm = BigInt::one();
    for c in &f.coeffs {
        if let Scalar::Rat(r) = c {
            denom_lcm = denom_lcm.lcm(r.denom());
        }
    }
    let ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => (r * BigRational::from_integer(denom_lcm.clone()))
                .to_integer(),
            Scalar::Fp { .. } => unreachable!(),
        })
        .collect();
    let a0 = ints[0].abs();
    let an = ints[deg].abs();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1i64, -1] {
                let candidate = Scalar::Rat(BigRational::new(
                    &num * BigInt::from(sign),
                    den.clone(),
                ));
                if f.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    roots
}

/// Positive divisors by capped trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive(), "divisors of a non-positive integer");
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2);
    let cap = BigInt::from(1u64 << 20);
    while &d * &d <= rest && d <= cap {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = alloc::vec![BigInt::one()];
    for (p, e) in primes {
        let snapshot = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(snapshot.iter().map(|d| d * &pk));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn poly_i64(field: FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::new(
            field,
            coeffs.iter().map(|&c| Scalar::from_i64(field, c)).collect(),
        )
    }

    #[test]
    fn division_round_trips() {
        let f = poly_i64(q(), &[-1, 0, 1]); // x^2 - 1
        let g = poly_i64(q(), &[1, 1]); // x + 1
        let (quo, rem) = f.divrem(&g);
        assert!(rem.is_zero());
        assert_eq!(quo.mul(&g), f);
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = poly_i64(q(), &[-1, 0, 1]);
        let g = poly_i64(q(), &[-1, 1]);
        assert_eq!(f.gcd(&g), g.monic());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x - 1)^2 (x + 1) over Q
        let f = poly_i64(q(), &[1, -1, -1, 1]);
        assert_eq!(f.squarefree_part(), poly_i64(q(), &[-1, 0, 1]));
    }

    #[test]
    fn factor_x2_plus_x_over_f2() {
        let f = poly_i64(f2(), &[0, 1, 1]); // x^2 + x = x(x+1)
        let factors = factor_squarefree_prime_field(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&poly_i64(f2(), &[0, 1])));
        assert!(factors.contains(&poly_i64(f2(), &[1, 1])));
    }

    #[test]
    fn irreducible_stays_whole_over_f2() {
        let f = poly_i64(f2(), &[1, 1, 1]); // x^2 + x + 1
        assert_eq!(factor_squarefree_prime_field(&f), alloc::vec![f]);
    }

    #[test]
    fn factor_three_way_over_f3() {
        let f3 = FieldSpec::prime(3).unwrap();
        // x^3 - x = x(x-1)(x+1)
        let f = poly_i64(f3, &[0, -1, 0, 1]);
        let factors = factor_squarefree_prime_field(&f);
        assert_eq!(factors.len(), 3);
        for root in 0..3 {
            let r = Scalar::from_i64(f3, root);
            assert!(factors.iter().any(|h| h.eval(&r).is_zero()));
        }
    }

    #[test]
    fn rational_roots_of_scaled_quadratic() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let f = poly_i64(q(), &[-3, 5, 2]);
        let roots = rational_roots(&f);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&q().parse("1/2").unwrap()));
        assert!(roots.contains(&q().parse("-3").unwrap()));
        // x^2 + 1 has none.
        assert!(rational_roots(&poly_i64(q(), &[1, 0, 1])).is_empty());
    }
}
