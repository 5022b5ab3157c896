//! Real algebraic numbers as (squarefree minimal polynomial, isolating
//! interval) pairs, with exact sign determination.
//!
//! The minimal polynomial is kept squarefree and primitive with positive
//! leading coefficient, but not necessarily irreducible; operations that
//! discover a factor (via gcd) shrink it lazily. The isolating interval
//! never contains a root of the derivative unless it has collapsed to a
//! rational point, so the polynomial is strictly monotone across it and
//! bisection can steer by a single sign test.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::{rat_sign, IntPoly, RatPoly, SturmChain};
use crate::exact::Rational;

#[derive(Clone, Debug)]
pub struct RealAlgebraicNumber {
    min_poly: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraicNumber {
    pub fn from_rational(q: Rational) -> Self {
        RealAlgebraicNumber {
            min_poly: IntPoly::linear_from_root(&q),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        RealAlgebraicNumber::from_rational(Rational::from(BigInt::from(n)))
    }

    /// Certify an isolating interval produced by the Sturm bisection below.
    /// `min_poly` must be squarefree; the interval must contain exactly one
    /// of its roots and have non-root endpoints.
    fn certified(min_poly: IntPoly, lo: Rational, hi: Rational, chain: &SturmChain) -> Self {
        let mut out = RealAlgebraicNumber { min_poly, lo, hi };
        out.shrink_past_derivative_roots(chain);
        out
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// Collapse to an exactly-known rational value.
    fn collapse_to(&mut self, q: Rational) {
        self.min_poly = IntPoly::linear_from_root(&q);
        self.lo = q.clone();
        self.hi = q;
    }

    /// One bisection step. The interval invariant (monotone across the
    /// interval) lets the sign at the midpoint pick the half.
    fn bisect_once(&mut self) {
        if self.is_rational() {
            return;
        }
        let two = Rational::from(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / &two;
        let sm = self.min_poly.sign_at_rational(&mid);
        if sm == 0 {
            self.collapse_to(mid);
            return;
        }
        let sl = self.min_poly.sign_at_rational(&self.lo);
        debug_assert!(sl != 0);
        if sl != sm {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Narrow until the open interval certifiably contains no root of the
    /// derivative. Steering uses the Sturm chain since monotonicity is not
    /// yet available; a midpoint that hits a root collapses the number.
    fn shrink_past_derivative_roots(&mut self, chain: &SturmChain) {
        let deriv = self.min_poly.derivative();
        let two = Rational::from(BigInt::from(2));
        let third = Rational::new(BigInt::from(1), BigInt::from(3));
        loop {
            if self.is_rational() {
                return;
            }
            let (dlo, dhi) = deriv.interval_eval(&self.lo, &self.hi);
            if rat_sign(&dlo) == rat_sign(&dhi) && rat_sign(&dlo) != 0 {
                return;
            }
            let half_width = (&self.hi - &self.lo) / &two;
            let mut mid = (&self.lo + &self.hi) / &two;
            if self.min_poly.sign_at_rational(&mid) == 0 {
                // midpoint is the root: done, it is rational
                self.collapse_to(mid);
                return;
            }
            // keep the half that holds the root; perturb if the midpoint
            // ever lands on a root of the chain polynomial
            let mut left = chain.count_roots(&self.lo, &mid);
            if left + chain.count_roots(&mid, &self.hi) == 0 {
                // the midpoint itself was counted out; perturb by a third of
                // the half-width to restore non-root endpoints
                mid += &half_width * &third;
                if self.min_poly.sign_at_rational(&mid) == 0 {
                    self.collapse_to(mid);
                    return;
                }
                left = chain.count_roots(&self.lo, &mid);
            }
            if left == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// A copy refined to width at most `width` (no-op when already narrower
    /// or exactly rational).
    pub fn refine(&self, width: &Rational) -> Self {
        assert!(width.is_positive(), "refine width must be positive");
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub(crate) fn refine_in_place(&mut self, width: &Rational) {
        while !self.is_rational() && self.width() > *width {
            self.bisect_once();
        }
    }

    /// Exact sign of g at this number.
    ///
    /// Zero is decided by a gcd with the minimal polynomial; a nonzero value
    /// is certified by interval evaluation after enough refinement.
    pub fn sign_at(&self, g: &RatPoly) -> i8 {
        if g.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return rat_sign(&g.eval(q));
        }
        let g_int = g.to_int_scaled();
        let common = g_int.gcd(&self.min_poly);
        if common.degree().is_some_and(|d| d >= 1) {
            let chain = SturmChain::new(&common);
            if chain.count_roots(&self.lo, &self.hi) == 1 {
                return 0;
            }
        }
        // g(alpha) != 0: refine until the interval evaluation has a sign
        let mut probe = self.clone();
        loop {
            let (vlo, vhi) = g_int.interval_eval(&probe.lo, &probe.hi);
            let (sl, sh) = (rat_sign(&vlo), rat_sign(&vhi));
            if sl == sh && sl != 0 {
                return sl;
            }
            if let Some(q) = probe.as_rational() {
                return g_int.sign_at_rational(q);
            }
            probe.bisect_once();
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(r) = self.as_rational() {
            return r.cmp(q);
        }
        if *q <= self.lo {
            // lo is not a root, so alpha > lo >= q unless q == lo < alpha
            return Ordering::Greater;
        }
        if *q >= self.hi {
            return Ordering::Less;
        }
        let sq = self.min_poly.sign_at_rational(q);
        if sq == 0 {
            return Ordering::Equal;
        }
        let sl = self.min_poly.sign_at_rational(&self.lo);
        if sl != sq {
            // sign change on (lo, q): the root lies below q
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp(&self, other: &RealAlgebraicNumber) -> Ordering {
        if let Some(q) = other.as_rational() {
            return self.cmp_rational(q);
        }
        if let Some(q) = self.as_rational() {
            return other.cmp_rational(q).reverse();
        }
        let common = self.min_poly.gcd(&other.min_poly);
        let共 = common.degree().is_some_and(|d| d >= 1);
        let common_chain = if 共 { Some(SturmChain::new(&common)) } else { None };
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(chain) = &common_chain {
                // both are roots of `common` iff it changes sign across each
                // interval; if the joint hull holds exactly one root of
                // `common` and both numbers are roots of it, they are equal
                let a_is = a
                    .as_rational()
                    .map(|q| common.sign_at_rational(q) == 0)
                    .unwrap_or_else(|| {
                        chain.count_roots(&a.lo, &a.hi) == 1
                            && common.sign_at_rational(&a.lo) != 0
                    });
                let b_is = b
                    .as_rational()
                    .map(|q| common.sign_at_rational(q) == 0)
                    .unwrap_or_else(|| {
                        chain.count_roots(&b.lo, &b.hi) == 1
                            && common.sign_at_rational(&b.lo) != 0
                    });
                if a_is && b_is {
                    let lo = if a.lo < b.lo { a.lo.clone() } else { b.lo.clone() };
                    let hi = if a.hi > b.hi { a.hi.clone() } else { b.hi.clone() };
                    if common.sign_at_rational(&lo) != 0
                        && common.sign_at_rational(&hi) != 0
                        && chain.count_roots(&lo, &hi) == 1
                    {
                        return Ordering::Equal;
                    }
                }
            }
            match (a.is_rational(), b.is_rational()) {
                (true, true) => return a.lo.cmp(&b.lo),
                (true, false) => return b.cmp_rational(&a.lo).reverse(),
                (false, true) => return a.cmp_rational(&b.lo),
                _ => {}
            }
            a.bisect_once();
            b.bisect_once();
        }
    }

    pub fn equals(&self, other: &RealAlgebraicNumber) -> bool {
        self.cmp(other) == Ordering::Equal
    }

    /// The number r * alpha.
    pub fn scale(&self, r: &Rational) -> Self {
        assert!(!r.is_zero());
        if let Some(q) = self.as_rational() {
            return RealAlgebraicNumber::from_rational(q * r);
        }
        let mp = self.min_poly.compose_x_over(r).primitive_positive();
        let (mut lo, mut hi) = (&self.lo * r, &self.hi * r);
        if r.is_negative() {
            std::mem::swap(&mut lo, &mut hi);
        }
        RealAlgebraicNumber { min_poly: mp, lo, hi }
    }

    /// Midpoint of the current interval.
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from(BigInt::from(2))
    }

    /// Decimal approximation with `sig` significant digits, computed from a
    /// refined interval; exact for rational values that terminate.
    pub fn approx_decimal(&self, sig: usize) -> String {
        let mut probe = self.clone();
        let tol = pow10_recip(sig + 4);
        probe.refine_in_place(&tol);
        super::rational_to_decimal(&probe.midpoint(), sig)
    }

    pub fn approx_f64(&self) -> f64 {
        let mut probe = self.clone();
        let tol = pow10_recip(17);
        probe.refine_in_place(&tol);
        super::rational_to_f64(&probe.midpoint())
    }
}

fn pow10_recip(k: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k as u32))
}

/// Count the distinct real roots of squarefree `p` in the open interval
/// (lo, hi). Errors if an endpoint is a root.
pub fn sturm_count(p: &IntPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.sign_at_rational(lo) == 0 {
        return Err(Error::EndpointIsRoot {
            endpoint: lo.to_string(),
        });
    }
    if p.sign_at_rational(hi) == 0 {
        return Err(Error::EndpointIsRoot {
            endpoint: hi.to_string(),
        });
    }
    Ok(SturmChain::new(p).count_roots(lo, hi))
}

/// Isolate the distinct real roots of `p` in (lo, hi), ascending. The
/// squarefree part is taken first, so multiplicities collapse.
pub fn isolate_real_roots(
    p: &IntPoly,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<RealAlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::Internal(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    let sf = p.squarefree_part();
    if sf.sign_at_rational(lo) == 0 {
        return Err(Error::EndpointIsRoot {
            endpoint: lo.to_string(),
        });
    }
    if sf.sign_at_rational(hi) == 0 {
        return Err(Error::EndpointIsRoot {
            endpoint: hi.to_string(),
        });
    }
    let chain = SturmChain::new(&sf);
    let mut out = Vec::new();
    subdivide(&sf, &chain, lo, hi, &mut out);
    Ok(out)
}

fn subdivide(
    sf: &IntPoly,
    chain: &SturmChain,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<RealAlgebraicNumber>,
) {
    match chain.count_roots(lo, hi) {
        0 => {}
        1 => out.push(RealAlgebraicNumber::certified(
            sf.clone(),
            lo.clone(),
            hi.clone(),
            chain,
        )),
        _ => {
            let two = Rational::from(BigInt::from(2));
            let third = Rational::new(BigInt::from(1), BigInt::from(3));
            let mut mid = (lo + hi) / &two;
            if sf.sign_at_rational(&mid) == 0 {
                // midpoint is itself a root: emit it exactly, then perturb
                // the cut so both halves have non-root endpoints
                let half_width = (hi - lo) / &two;
                let cut_lo = &mid - &(&half_width * &third);
                let cut_hi = &mid + &(&half_width * &third);
                debug_assert!(sf.sign_at_rational(&cut_lo) != 0);
                debug_assert!(sf.sign_at_rational(&cut_hi) != 0);
                subdivide(sf, chain, lo, &cut_lo, out);
                if chain.count_roots(&cut_lo, &cut_hi) == 1 {
                    out.push(RealAlgebraicNumber::from_rational(mid));
                } else {
                    // another root crept inside the perturbed window; fall
                    // back to subdividing it around the known rational root
                    subdivide(sf, chain, &cut_lo, &cut_hi, out);
                }
                subdivide(sf, chain, &cut_hi, hi, out);
                return;
            }
            subdivide(sf, chain, lo, &mid, out);
            subdivide(sf, chain, &mid, hi, out);
            let _ = &mut mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ri(n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }

    #[test]
    fn sturm_count_examples() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &ri(0), &ri(2)).unwrap(), 1);
        let q = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(sturm_count(&q, &ri(-10), &ri(10)).unwrap(), 0);
        let c = IntPoly::from_i64(&[1, -3, 0, 1]);
        assert_eq!(sturm_count(&c, &ri(-2), &ri(2)).unwrap(), 3);
    }

    #[test]
    fn sturm_count_rejects_root_endpoint() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        assert!(matches!(
            sturm_count(&p, &ri(1), &ri(2)),
            Err(Error::EndpointIsRoot { .. })
        ));
    }

    #[test]
    fn isolates_two_rational_roots() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        let roots = isolate_real_roots(&p, &ri(-2), &ri(2)).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].cmp_rational(&ri(-1)), Ordering::Equal);
        assert_eq!(roots[1].cmp_rational(&ri(1)), Ordering::Equal);
    }

    #[test]
    fn isolates_collapse_multiplicity() {
        // (x^2 - 2)^2 in (0, 2): one root
        let p = IntPoly::from_i64(&[4, 0, -4, 0, 1]);
        let roots = isolate_real_roots(&p, &ri(0), &ri(2)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].min_poly(), &IntPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn isolates_cubic_with_three_roots() {
        let p = IntPoly::from_i64(&[1, -3, 0, 1]);
        let roots = isolate_real_roots(&p, &ri(-2), &ri(2)).unwrap();
        assert_eq!(roots.len(), 3);
        // approximate locations -1.879, 0.347, 1.532
        let approx: Vec<f64> = roots.iter().map(|a| a.approx_f64()).collect();
        assert!((approx[0] + 1.8793852415718).abs() < 1e-9);
        assert!((approx[1] - 0.3472963553338).abs() < 1e-9);
        assert!((approx[2] - 1.5320888862379).abs() < 1e-9);
        // pairwise disjoint isolating intervals
        assert!(roots[0].hi() < roots[1].lo());
        assert!(roots[1].hi() < roots[2].lo());
    }

    #[test]
    fn refine_narrows_without_moving() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let root = isolate_real_roots(&p, &ri(0), &ri(2)).unwrap().remove(0);
        let fine = root.refine(&r(1, 100));
        assert!(fine.width() <= r(1, 100));
        assert_eq!(fine.cmp_rational(&r(141, 100)), Ordering::Greater);
        assert_eq!(fine.cmp_rational(&r(142, 100)), Ordering::Less);
        // refining with a huge width is a no-op
        let same = root.refine(&ri(10));
        assert_eq!(same.lo(), root.lo());
        assert_eq!(same.hi(), root.hi());
        // rational numbers are untouched
        let q = RealAlgebraicNumber::from_rational(r(3, 7));
        let qr = q.refine(&r(1, 1000));
        assert_eq!(qr.as_rational(), Some(&r(3, 7)));
    }

    #[test]
    fn sign_at_detects_zero_exactly() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let sqrt2 = isolate_real_roots(&p, &ri(0), &ri(2)).unwrap().remove(0);
        let g = RatPoly::from_int(&IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(sqrt2.sign_at(&g), 0);
        let h = RatPoly::from_int(&IntPoly::from_i64(&[-1, 1]));
        assert_eq!(sqrt2.sign_at(&h), 1);
    }

    #[test]
    fn sign_at_cubic_root_below_half() {
        // root of x^3 - 3x + 1 in (0, 1) is ~0.347; 2x - 1 is negative there
        let p = IntPoly::from_i64(&[1, -3, 0, 1]);
        let root = isolate_real_roots(&p, &ri(0), &ri(1)).unwrap().remove(0);
        let g = RatPoly::from_int(&IntPoly::from_i64(&[-1, 2]));
        assert_eq!(root.sign_at(&g), -1);
    }

    #[test]
    fn refine_preserves_isolation() {
        let p = IntPoly::from_i64(&[1, -3, 0, 1]);
        for root in isolate_real_roots(&p, &ri(-2), &ri(2)).unwrap() {
            let fine = root.refine(&r(1, 1 << 20));
            if !fine.is_rational() {
                assert_eq!(sturm_count(&p.squarefree_part(), fine.lo(), fine.hi()).unwrap(), 1);
            }
        }
    }

    #[test]
    fn cmp_distinguishes_close_roots() {
        // sqrt(2) via x^2-2 and the root of x^2 - 2x - 1 + ... use golden-ish
        let sqrt2 = isolate_real_roots(&IntPoly::from_i64(&[-2, 0, 1]), &ri(0), &ri(2))
            .unwrap()
            .remove(0);
        let sqrt2_again = isolate_real_roots(&IntPoly::from_i64(&[-2, 0, 1]), &ri(1), &ri(3))
            .unwrap()
            .remove(0);
        assert!(sqrt2.equals(&sqrt2_again));
        let phi = isolate_real_roots(&IntPoly::from_i64(&[-1, -1, 1]), &ri(0), &ri(2))
            .unwrap()
            .remove(0);
        // phi = 1.618 > sqrt2 = 1.414
        assert_eq!(sqrt2.cmp(&phi), Ordering::Less);
        // and against a multiple-factor polynomial sharing the root
        let prod = &IntPoly::from_i64(&[-2, 0, 1]) * &IntPoly::from_i64(&[-1, -1, 1]);
        let both = isolate_real_roots(&prod, &ri(0), &ri(2)).unwrap();
        assert_eq!(both.len(), 2);
        assert!(both[0].equals(&sqrt2));
        assert!(both[1].equals(&phi));
    }

    #[test]
    fn scale_halves_value() {
        let sqrt2 = isolate_real_roots(&IntPoly::from_i64(&[-2, 0, 1]), &ri(0), &ri(2))
            .unwrap()
            .remove(0);
        let half = sqrt2.scale(&r(1, 2));
        // sqrt(2)/2 = 0.7071...
        assert!((half.approx_f64() - 0.70710678).abs() < 1e-7);
        assert_eq!(half.min_poly(), &IntPoly::from_i64(&[-1, 0, 2]));
    }

    #[test]
    fn decimal_approximation_is_stable() {
        let sqrt2 = isolate_real_roots(&IntPoly::from_i64(&[-2, 0, 1]), &ri(0), &ri(2))
            .unwrap()
            .remove(0);
        assert_eq!(sqrt2.approx_decimal(12), "1.41421356237");
        assert_eq!(RealAlgebraicNumber::from_int(1).approx_decimal(12), "1.00000000000");
    }
}
