//! Exact univariate polynomials over the integers and Sturm sequences.
//!
//! Remainders are taken over the rationals and then rescaled by a positive
//! constant to a primitive integer polynomial; positive rescaling leaves
//! every sign, and therefore every sign-variation count, unchanged.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients from the constant term upward, with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(num/den)` for `den > 0`, evaluated on the homogenized form.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return 0;
        }
        // Σ c_i num^i den^(d-i) by Horner, den power growing as i falls
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Divides by the (positive) gcd of the coefficients.
    fn primitive_positive(&self) -> IntPoly {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive form with positive leading coefficient.
    fn normalized(&self) -> IntPoly {
        let p = self.primitive_positive();
        if p.leading().is_some_and(|c| c.is_negative()) {
            IntPoly::new(p.coeffs.iter().map(|c| -c).collect())
        } else {
            p
        }
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Clears denominators with a positive multiplier.
    fn from_rational(coeffs: &[BigRational]) -> IntPoly {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive_positive()
    }

    /// Remainder of `self` by `divisor` over the rationals, up to a positive
    /// scalar.
    pub fn rem(&self, divisor: &IntPoly) -> IntPoly {
        let (_, r) = div_rem_rational(&self.to_rational(), &divisor.to_rational());
        IntPoly::from_rational(&r)
    }

    /// Exact quotient over the rationals, up to a positive scalar.
    pub fn quotient(&self, divisor: &IntPoly) -> IntPoly {
        let (q, _) = div_rem_rational(&self.to_rational(), &divisor.to_rational());
        IntPoly::from_rational(&q)
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// `p / gcd(p, p')`: same roots, each simple.
    pub fn square_free(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        self.quotient(&g).normalized()
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn div_rem_rational(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if r.len() <= dd {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - dd];
    for i in (dd..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let f = &r[i] / &lead;
        for (j, d) in den.iter().enumerate() {
            let t = &f * d;
            r[i - dd + j] -= t;
        }
        q[i - dd] = f;
    }
    r.truncate(dd);
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    (q, r)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let s = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {s} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain of `p`'s square-free part.
    pub fn new(p: &IntPoly) -> Self {
        let p0 = p.square_free();
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(p0.derivative().primitive_positive());
        loop {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(IntPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The square-free polynomial the chain starts from.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations at the rational `num/den`, `den > 0`.
    pub fn variations_at(&self, num: &BigInt, den: &BigInt) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(num, den)))
    }

    pub fn variations_at_int(&self, x: &BigInt) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.leading().map_or(0, sign)))
    }

    pub fn variations_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = p.leading().map_or(0, sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(x, ∞)`.
    pub fn roots_above_int(&self, x: &BigInt) -> usize {
        self.variations_at_int(x) - self.variations_pos_inf()
    }

    /// Number of distinct real roots in `(num/den, ∞)`.
    pub fn roots_above(&self, num: &BigInt, den: &BigInt) -> usize {
        self.variations_at(num, den) - self.variations_pos_inf()
    }

    pub fn real_root_count(&self) -> usize {
        self.variations_neg_inf() - self.variations_pos_inf()
    }
}

/// Real roots counted with multiplicity: the distinct real roots of the
/// successive gcds `p, gcd(p, p'), gcd(gcd(p, p'), …)` summed.
pub fn real_roots_with_multiplicity(p: &IntPoly) -> usize {
    let mut total = 0;
    let mut cur = p.clone();
    while cur.degree().unwrap_or(0) > 0 {
        total += SturmChain::new(&cur).real_root_count();
        cur = cur.gcd(&cur.derivative());
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn eval_and_sign() {
        // x^3 - 3x - 2 = (x - 2)(x + 1)^2
        let p = IntPoly::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(p.eval(&b(2)), b(0));
        assert_eq!(p.eval(&b(3)), b(16));
        assert_eq!(p.sign_at(&b(5), &b(2)), 1); // 125/8 - 15/2 - 2 > 0
        assert_eq!(p.sign_at(&b(3), &b(2)), -1); // 27/8 - 9/2 - 2 < 0
        assert_eq!(p.sign_at(&b(4), &b(2)), 0);
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
    }

    #[test]
    fn square_free_part() {
        let p = IntPoly::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(p.square_free(), IntPoly::from_i64(&[-2, -1, 1]));
        let q = IntPoly::from_i64(&[0, -2, 0, 1]);
        assert_eq!(q.square_free(), q);
    }

    #[test]
    fn sturm_counts() {
        let p = IntPoly::from_i64(&[-2, -3, 0, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.real_root_count(), 2);
        assert_eq!(s.roots_above_int(&b(1)), 1);
        assert_eq!(s.roots_above_int(&b(2)), 0);
        assert_eq!(s.roots_above_int(&b(-1)), 1);
        assert_eq!(s.roots_above_int(&b(-2)), 2);
        assert_eq!(real_roots_with_multiplicity(&p), 3);
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = IntPoly::from_i64(&[1, 0, 1]);
        let c = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(a.gcd(&c).degree(), Some(0));
        let ac = a.mul(&c);
        assert_eq!(ac.gcd(&a), a);
    }
}
