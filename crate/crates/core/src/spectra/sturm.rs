//! Exact real-root counting with Sturm sequences over the rationals.
//!
//! Used to decide how the spectral radius of a graph compares with a rational
//! bound (or with the radius of another graph) without floating point. All
//! polynomials are reduced to their square-free part first, so repeated
//! eigenvalues are counted once.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::poly::IntPolynomial;

/// Polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub(crate) fn from_int(p: &IntPolynomial) -> Self {
        Self::new(
            p.ascending()
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigRational {
        self.0
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading().clone();
        RatPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn reflect(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let lc = divisor.leading().clone();
        if self.is_zero() || self.degree() < dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (dd..=self.degree()).rev() {
            let factor = &rem[k] / &lc;
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.0.iter().enumerate() {
                rem[k - dd + j] -= &factor * c;
            }
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Positive multiple with coprime integer coefficients.
    fn to_primitive_integers(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }

    /// Cauchy bound: every real root has absolute value below it.
    fn root_bound(&self) -> BigRational {
        let lc = self.leading().abs();
        let max = self.0[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        max + BigRational::one()
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Point {
    NegInf,
    At(BigRational),
    PosInf,
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm sequence of the square-free part of a polynomial, with every member
/// scaled to a primitive integer polynomial (positive scaling keeps signs).
#[derive(Debug, Clone)]
pub(crate) struct SturmChain {
    polys: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub(crate) fn new(p: &RatPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.square_free();
        let mut chain = vec![p0.clone()];
        if p0.degree() > 0 {
            let mut prev = p0;
            let mut cur = prev.derivative();
            while !cur.is_zero() {
                let (_, r) = prev.div_rem(&cur);
                let next = RatPoly(r.0.into_iter().map(|c| -c).collect());
                chain.push(cur.clone());
                prev = cur;
                cur = next;
            }
        }
        SturmChain {
            polys: chain.iter().map(RatPoly::to_primitive_integers).collect(),
        }
    }

    fn sign_at(poly: &[BigInt], point: &Point) -> i8 {
        let deg = poly.len() - 1;
        match point {
            Point::PosInf => sign_of(&poly[deg]),
            Point::NegInf => {
                let s = sign_of(&poly[deg]);
                if deg % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            Point::At(x) => {
                // sign of den^deg * p(num/den), den > 0
                let (num, den) = (x.numer(), x.denom());
                let mut acc = BigInt::zero();
                let mut den_pow = BigInt::one();
                for c in poly.iter().rev() {
                    acc = acc * num + c * &den_pow;
                    den_pow *= den;
                }
                sign_of(&acc)
            }
        }
    }

    fn variations(&self, point: &Point) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for poly in &self.polys {
            let s = Self::sign_at(poly, point);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub(crate) fn count(&self, lo: &Point, hi: &Point) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub(crate) fn is_root(&self, x: &BigRational) -> bool {
        Self::sign_at(&self.polys[0], &Point::At(x.clone())) == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RadiusRelation {
    Below,
    Exactly,
    Above,
}

impl fmt::Display for RadiusRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RadiusRelation::Below => "Below",
            RadiusRelation::Exactly => "Exactly",
            RadiusRelation::Above => "Above",
        };
        f.write_str(s)
    }
}

fn serialize_ratio<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Exact comparison of a spectral radius with a rational bound, with the
/// root counts that justify it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusComparison {
    pub relation: RadiusRelation,
    #[serde(serialize_with = "serialize_ratio")]
    pub bound: BigRational,
    /// Distinct roots in `(bound, ∞)`.
    pub roots_above: usize,
    /// Distinct roots in `(-∞, -bound)`.
    pub roots_below: usize,
    pub bound_is_root: bool,
    pub neg_bound_is_root: bool,
}

/// Decides `ρ` versus `bound` for the polynomial `p` whose roots are all real.
pub fn compare_radius_poly(p: &IntPolynomial, bound: &BigRational) -> RadiusComparison {
    assert!(bound.is_positive(), "bound must be positive");
    let chain = SturmChain::new(&RatPoly::from_int(p));
    let neg = -bound.clone();
    let at = Point::At(bound.clone());
    let at_neg = Point::At(neg.clone());
    let bound_is_root = chain.is_root(bound);
    let neg_bound_is_root = chain.is_root(&neg);
    let roots_above = chain.count(&at, &Point::PosInf);
    let roots_below = chain.count(&Point::NegInf, &at_neg) - usize::from(neg_bound_is_root);
    let relation = if roots_above + roots_below > 0 {
        RadiusRelation::Above
    } else if bound_is_root || neg_bound_is_root {
        RadiusRelation::Exactly
    } else {
        RadiusRelation::Below
    };
    RadiusComparison {
        relation,
        bound: bound.clone(),
        roots_above,
        roots_below,
        bound_is_root,
        neg_bound_is_root,
    }
}

/// Square-free part of `p(λ)·p(-λ)`; its largest root is the spectral radius.
fn symmetrized(p: &IntPolynomial) -> RatPoly {
    let r = RatPoly::from_int(p);
    r.mul(&r.reflect()).square_free()
}

/// Exact comparison of the largest absolute roots of two real-rooted
/// polynomials. Zero-degree polynomials have radius 0.
pub fn compare_spectral_radii(p: &IntPolynomial, q: &IntPolynomial) -> Ordering {
    let zero = Point::At(BigRational::zero());
    let t = symmetrized(p);
    let s = symmetrized(q);
    let ct = SturmChain::new(&t);
    let cs = SturmChain::new(&s);
    let t_positive = ct.count(&zero, &Point::PosInf) > 0;
    let s_positive = cs.count(&zero, &Point::PosInf) > 0;
    match (t_positive, s_positive) {
        (false, false) => return Ordering::Equal,
        (true, false) => return Ordering::Greater,
        (false, true) => return Ordering::Less,
        (true, true) => {}
    }

    // isolate the largest root r of s in (lo, hi]
    let two = BigRational::from_integer(BigInt::from(2));
    let mut lo = BigRational::zero();
    let mut hi = s.root_bound();
    while cs.count(&Point::At(lo.clone()), &Point::At(hi.clone())) > 1 {
        let mid = (&lo + &hi) / &two;
        if cs.count(&Point::At(mid.clone()), &Point::At(hi.clone())) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let common = t.gcd(&s);
    let cg = (common.degree() > 0).then(|| SturmChain::new(&common));
    loop {
        let (plo, phi) = (Point::At(lo.clone()), Point::At(hi.clone()));
        if ct.count(&phi, &Point::PosInf) > 0 {
            return Ordering::Greater;
        }
        let inside = ct.count(&plo, &phi);
        if inside == 0 {
            return Ordering::Less;
        }
        let shared = cg.as_ref().is_some_and(|c| c.count(&plo, &phi) > 0);
        if shared && inside == 1 {
            return Ordering::Equal;
        }
        let mid = (&lo + &hi) / &two;
        if cs.count(&Point::At(mid.clone()), &phi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i128]) -> IntPolynomial {
        IntPolynomial::from_descending(desc.to_vec())
    }

    fn two() -> BigRational {
        BigRational::from_integer(BigInt::from(2))
    }

    #[test]
    fn counts_roots_of_cubic() {
        // λ^3 - 3λ: roots -√3, 0, √3
        let chain = SturmChain::new(&RatPoly::from_int(&poly(&[1, 0, -3, 0])));
        assert_eq!(chain.count(&Point::NegInf, &Point::PosInf), 3);
        assert_eq!(
            chain.count(&Point::At(BigRational::zero()), &Point::PosInf),
            1
        );
        assert_eq!(
            chain.count(&Point::NegInf, &Point::At(BigRational::zero())),
            2
        );
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (λ-2)^2 (λ+1)
        let sq = poly(&[1, -2]).mul(&poly(&[1, -2])).mul(&poly(&[1, 1]));
        let chain = SturmChain::new(&RatPoly::from_int(&sq));
        assert_eq!(chain.count(&Point::NegInf, &Point::PosInf), 2);
    }

    #[test]
    fn radius_decisions() {
        let b = two();
        assert_eq!(
            compare_radius_poly(&poly(&[1, 0, -3, 0]), &b).relation,
            RadiusRelation::Below
        );
        // undirected C4: λ^4 - 4λ^2, roots ±2, 0, 0
        let c4 = compare_radius_poly(&poly(&[1, 0, -4, 0, 0]), &b);
        assert_eq!(c4.relation, RadiusRelation::Exactly);
        assert!(c4.bound_is_root && c4.neg_bound_is_root);
        // λ^2 - 5
        let above = compare_radius_poly(&poly(&[1, 0, -5]), &b);
        assert_eq!(above.relation, RadiusRelation::Above);
        assert_eq!((above.roots_above, above.roots_below), (1, 1));
        // only a root at -2 and below: (λ+2)(λ-1)
        let neg = compare_radius_poly(&poly(&[1, 1, -2]), &b);
        assert_eq!(neg.relation, RadiusRelation::Exactly);
        assert!(!neg.bound_is_root && neg.neg_bound_is_root);
        assert_eq!(
            compare_radius_poly(&IntPolynomial::one(), &b).relation,
            RadiusRelation::Below
        );
    }

    #[test]
    fn radius_ordering() {
        let sqrt3 = poly(&[1, 0, -3, 0]);
        let two_root = poly(&[1, 0, -4]);
        let neg_two = poly(&[1, 2]);
        assert_eq!(compare_spectral_radii(&two_root, &sqrt3), Ordering::Greater);
        assert_eq!(compare_spectral_radii(&sqrt3, &two_root), Ordering::Less);
        assert_eq!(compare_spectral_radii(&two_root, &neg_two), Ordering::Equal);
        assert_eq!(
            compare_spectral_radii(&sqrt3, &poly(&[1, 0, -3])),
            Ordering::Equal
        );
        assert_eq!(
            compare_spectral_radii(&poly(&[1, 0]), &IntPolynomial::one()),
            Ordering::Equal
        );
        assert_eq!(
            compare_spectral_radii(&sqrt3, &poly(&[1, 0])),
            Ordering::Greater
        );
        // nearly equal radii: √3 vs root of λ^2 - 3.0001 scaled → 10000λ^2 - 30001
        assert_eq!(
            compare_spectral_radii(&poly(&[10000, 0, -30001]), &sqrt3),
            Ordering::Greater
        );
        assert_eq!(
            compare_spectral_radii(&poly(&[10000, 0, -29999]), &sqrt3),
            Ordering::Less
        );
    }
}
