//! Integer and rational univariate polynomials with exact arithmetic.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty coefficient vector. `IntPoly` carries the gcd / squarefree / Sturm
//! machinery used for root isolation, `RatPoly` the field arithmetic used
//! for reduction modulo a minimal polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq)]
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

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// Linear polynomial q.denom * x - q.numer, vanishing at q.
    pub fn linear_from_root(q: &Rational) -> Self {
        let p = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        p.primitive_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_rat(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + Rational::from(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, via the homogeneous integer
    /// evaluation sum a_k p^k q^(d-k); avoids building a fraction.
    pub fn sign_at_rational(&self, t: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let p = t.numer();
        let q = t.denom();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // Horner in p with a running power of q: acc_k = acc_{k+1} * p + a_k q^(d-k)
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        big_sign(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^k.
    pub fn mul_pow_x(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly::new(coeffs)
    }

    /// Strip the largest power of x dividing the polynomial; returns
    /// (quotient, valuation).
    pub fn strip_valuation(&self) -> (IntPoly, usize) {
        if self.is_zero() {
            return (IntPoly::zero(), 0);
        }
        let v = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        (IntPoly::new(self.coeffs[v..].to_vec()), v)
    }

    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Canonical form: primitive with positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive();
        match p.leading() {
            Some(l) if l.is_negative() => -&p,
            _ => p,
        }
    }

    /// Exact division; None if `d` does not divide `self` over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut n = rem.len();
        if n - 1 < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); n - dd];
        let lead = d.leading().unwrap();
        while n > dd {
            let top = rem[n - 1].clone();
            if top.is_zero() {
                n -= 1;
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            let shift = n - 1 - dd;
            quot[shift] = q.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * dc;
            }
            n -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Pseudo-remainder: lc(d)^(deg self - deg d + 1) * self = q*d + r.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lead = d.leading().unwrap().clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.leading().unwrap().clone();
            // r <- lc(d)*r - top * x^(rd-dd) * d
            let mut next = r.mul_scalar(&lead);
            let sub = d.mul_scalar(&top).mul_pow_x(rd - dd);
            next = &next - &sub;
            debug_assert!(next.degree().map_or(true, |nd| nd < rd));
            r = next;
        }
        r
    }

    /// Polynomial gcd via the primitive PRS; primitive with positive leading
    /// coefficient (the content of the inputs is deliberately dropped).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a.primitive_positive()
    }

    /// Squarefree part p / gcd(p, p'), canonicalized.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let p = self.primitive_positive();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return p;
        }
        p.exact_div(&g)
            .expect("gcd divides its argument")
            .primitive_positive()
    }

    /// p(x/r) with denominators cleared: sum a_i v^i u^(d-i) x^i for r = u/v.
    pub fn compose_x_over(&self, r: &Rational) -> IntPoly {
        assert!(!r.is_zero());
        if self.is_zero() {
            return IntPoly::zero();
        }
        let u = r.numer();
        let v = r.denom();
        let d = self.coeffs.len() - 1;
        let mut out = Vec::with_capacity(d + 1);
        let mut vpow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut term = c * &vpow;
            for _ in i..d {
                term *= u;
            }
            out.push(term);
            vpow *= v;
        }
        IntPoly::new(out)
    }

    /// Interval evaluation with rational endpoints (Horner with interval ops).
    pub fn interval_eval(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        let mut acc_lo = Rational::zero();
        let mut acc_hi = Rational::zero();
        for c in self.coeffs.iter().rev() {
            let c = Rational::from(c.clone());
            let cands = [
                &acc_lo * lo,
                &acc_lo * hi,
                &acc_hi * lo,
                &acc_hi * hi,
            ];
            let mut new_lo = cands[0].clone();
            let mut new_hi = cands[0].clone();
            for cand in &cands[1..] {
                if *cand < new_lo {
                    new_lo = cand.clone();
                }
                if *cand > new_hi {
                    new_hi = cand.clone();
                }
            }
            acc_lo = new_lo + &c;
            acc_hi = new_hi + &c;
        }
        (acc_lo, acc_hi)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

pub fn big_sign(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rat_sign(v: &Rational) -> i8 {
    big_sign(v.numer())
}

/// Polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::new(vec![Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| Rational::from(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Clear denominators and content: primitive integer polynomial with the
    /// same sign behaviour (the multiplier is positive).
    pub fn to_int_scaled(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive()
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n == 0 || n - 1 < dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for top in (dd..n).rev() {
            let q = &rem[top] / &lead;
            if q.is_zero() {
                continue;
            }
            let shift = top - dd;
            quot[shift] = q.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let sub = &q * dc;
                rem[shift + i] -= sub;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: (g, u, v) with u*self + v*other = g, g monic (or zero).
    pub fn extended_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = RatPoly::one();
        let mut u1 = RatPoly::zero();
        let mut v0 = RatPoly::zero();
        let mut v1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let nu = &u0 - &(&q * &u1);
            let nv = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        match r0.leading() {
            None => (r0, u0, v0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})x^{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    /// `p` must be squarefree.
    pub fn new(p: &IntPoly) -> Self {
        let p = p.primitive_positive();
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d.primitive());
            loop {
                let k = polys.len();
                let a = RatPoly::from_int(&polys[k - 2]);
                let b = RatPoly::from_int(&polys[k - 1]);
                let r = a.rem(&b);
                if r.is_zero() {
                    break;
                }
                // negate and clear to a primitive integer polynomial; the
                // positive scaling preserves the sign sequence
                polys.push((-&r).to_int_scaled());
            }
        }
        SturmChain { polys }
    }

    pub fn variations_at(&self, t: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.polys {
            let s = p.sign_at_rational(t);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in the open interval (lo, hi); endpoints must
    /// not be roots of the defining polynomial.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        let vl = self.variations_at(lo);
        let vh = self.variations_at(hi);
        vl.saturating_sub(vh)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn constructor_trims_leading_zeros() {
        let q = IntPoly::new(vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(IntPoly::new(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[1, 0, 1]);
        assert_eq!(a.gcd(&b), IntPoly::one());
    }

    #[test]
    fn squarefree_part_collapses_multiplicity() {
        // (x^2-2)^2
        let sq = p(&[4, 0, -4, 0, 1]);
        assert_eq!(sq.squarefree_part(), p(&[-2, 0, 1]));
        // already squarefree
        assert_eq!(p(&[-2, 0, 1]).squarefree_part(), p(&[-2, 0, 1]));
    }

    #[test]
    fn exact_div_detects_non_divisor() {
        let a = p(&[-2, 0, 1]);
        assert_eq!(a.exact_div(&p(&[-1, 1])), None);
        let prod = &a * &p(&[3, 1]);
        assert_eq!(prod.exact_div(&a), Some(p(&[3, 1])));
    }

    #[test]
    fn sturm_counts_match_known_roots() {
        let r = |n: i64| Rational::from(BigInt::from(n));
        // x^2 - 2 has one root in (0, 2)
        assert_eq!(SturmChain::new(&p(&[-2, 0, 1])).count_roots(&r(0), &r(2)), 1);
        // x^2 + 1 has none
        assert_eq!(
            SturmChain::new(&p(&[1, 0, 1])).count_roots(&r(-10), &r(10)),
            0
        );
        // x^3 - 3x + 1 has three in (-2, 2): approx -1.879, 0.347, 1.532
        let c = SturmChain::new(&p(&[1, -3, 0, 1]));
        assert_eq!(c.count_roots(&r(-2), &r(2)), 3);
        assert_eq!(c.count_roots(&r(0), &r(1)), 1);
    }

    #[test]
    fn interval_eval_contains_true_values() {
        let q = p(&[1, -3, 0, 1]);
        let lo = Rational::new(BigInt::from(1), BigInt::from(4));
        let hi = Rational::new(BigInt::from(1), BigInt::from(2));
        let (a, b) = q.interval_eval(&lo, &hi);
        assert!(a <= q.eval_rat(&lo) && q.eval_rat(&lo) <= b);
        assert!(a <= q.eval_rat(&hi) && q.eval_rat(&hi) <= b);
    }

    #[test]
    fn rat_poly_extended_gcd_is_bezout() {
        let a = RatPoly::from_int(&p(&[-2, 0, 1]));
        let b = RatPoly::from_int(&p(&[-1, 1]));
        let (g, u, v) = a.extended_gcd(&b);
        let lhs = &(&u * &a) + &(&v * &b);
        assert_eq!(lhs, g);
        // x^2-2 and x-1 are coprime
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn compose_x_over_halves_roots() {
        // p(x) = x - 2 has root 2; p(x / (1/2)) = p(2x) has root 1
        let q = p(&[-2, 1])
            .compose_x_over(&Rational::new(BigInt::from(1), BigInt::from(2)))
            .primitive_positive();
        assert_eq!(q, p(&[-1, 1]));
    }
}
