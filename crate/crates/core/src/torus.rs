//! Circles and finite cyclic subgroups of `T² = R²/Z²`.
//!
//! A point of `T²` is written as a rational vector mod `Z²`. The circle of
//! slope `(p, q)` is `{t·(p, q)}`; its order-`b` subgroup is generated by
//! `(p, q)/b`. All orders are computed by lattice arithmetic: a finite
//! subgroup generated by points with common denominator `N` corresponds to
//! a lattice `Z² ⊆ L ⊆ (1/N)Z²`, and its order is `N² / |Z²/(N·L)|`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::{ext_gcd, int, quotient_order, BezoutCert, Int, IntMatrix};

/// A circle subgroup of primitive slope `(p, q)` with its order-`b` subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleWithFinite {
    pub p: i64,
    pub q: i64,
    pub b: i64,
}

impl CircleWithFinite {
    pub fn new(p: i64, q: i64, b: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::NonPrimitiveSlope { p, q });
        }
        if b < 1 {
            return Err(Error::BadFiniteOrder);
        }
        Ok(CircleWithFinite { p, q, b })
    }

    /// Same circle with the slope negated.
    pub fn negated(self) -> Self {
        CircleWithFinite {
            p: -self.p,
            q: -self.q,
            b: self.b,
        }
    }

    /// Equal as subgroups: slopes agree up to sign.
    pub fn same_circle(&self, other: &CircleWithFinite) -> bool {
        (self.p, self.q) == (other.p, other.q) || (self.p, self.q) == (-other.p, -other.q)
    }

    pub fn contains(&self, pt: &Point) -> bool {
        // t·(p, q) ∋ (x, y)/N  iff  q·x − p·y ≡ 0 mod N
        (int(self.q) * &pt.x - int(self.p) * &pt.y).is_multiple_of(&pt.den)
    }

    /// Generator `(p, q)/b` of the finite subgroup.
    pub fn finite_generator(&self) -> Point {
        Point::new(int(self.p), int(self.q), int(self.b))
    }
}

/// `(x, y)/den` in `T²`; `den ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Int,
    pub y: Int,
    pub den: Int,
}

impl Point {
    pub fn new(x: Int, y: Int, den: Int) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        Point { x, y, den }
    }

    /// Numerators over the denominator `n`, which `den` must divide.
    pub fn over(&self, n: &Int) -> (Int, Int) {
        let k = n / &self.den;
        (&self.x * &k, &self.y * &k)
    }
}

/// Order of the subgroup of `T²` generated by finitely many rational points.
pub fn subgroup_order(points: &[Point]) -> Int {
    let n = points.iter().fold(Int::one(), |acc, pt| acc.lcm(&pt.den));
    // scale by N: Z² becomes N·Z², the subgroup becomes L/N·Z² with L integral
    let mut gens = vec![vec![n.clone(), Int::zero()], vec![Int::zero(), n.clone()]];
    gens.extend(points.iter().map(|pt| {
        let (x, y) = pt.over(&n);
        vec![x, y]
    }));
    let ambient = vec![vec![Int::one(), Int::zero()], vec![Int::zero(), Int::one()]];
    let index = quotient_order(&ambient, &gens).expect("integral generators");
    &n * &n / index
}

/// Signed `a = q₊p₋ − q₋p₊`; `|a|` counts the points of `K⁻₀ ∩ K⁺₀`.
pub fn signed_intersection(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Int {
    int(plus.q) * int(minus.p) - int(minus.q) * int(plus.p)
}

pub fn circle_intersection_count(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
) -> Result<Int> {
    let a = signed_intersection(minus, plus);
    if a.is_zero() {
        return Err(Error::CirclesCoincide);
    }
    Ok(a.abs())
}

/// `h = |H₋·H₊|`.
pub fn finite_product_order(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Int {
    subgroup_order(&[minus.finite_generator(), plus.finite_generator()])
}

/// `|H ∩ K|` for `H = H₋·H₊` and a circle `K`.
pub fn finite_meets_circle(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    circle: &CircleWithFinite,
) -> Int {
    let gens = [minus.finite_generator(), plus.finite_generator()];
    let n = int(minus.b).lcm(&int(plus.b));
    let h = subgroup_order(&gens);
    // H ∩ K is the kernel of (x, y)/N ↦ q·x − p·y mod N on H
    let image_gcd = gens.iter().fold(n.clone(), |acc, pt| {
        let (x, y) = pt.over(&n);
        acc.gcd(&(int(circle.q) * x - int(circle.p) * y))
    });
    h * image_gcd / n
}

/// Index of `H ∩ K⁻₀ ∩ K⁺₀` in the cyclic group `K⁻₀ ∩ K⁺₀`.
pub fn finite_index_d(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<Int> {
    let a = circle_intersection_count(minus, plus)?;
    let meet = Point::new(int(minus.p), int(minus.q), a);
    let h = finite_product_order(minus, plus);
    let joined = subgroup_order(&[meet, minus.finite_generator(), plus.finite_generator()]);
    // |I|/|I ∩ H| = |I + H|/|H|
    Ok(joined / h)
}

/// Order of the lens space `r = |a·h/(b₋b₊)|`.
pub fn lens_order(minus: &CircleWithFinite, plus: &CircleWithFinite, h: &Int) -> Result<Int> {
    let a = circle_intersection_count(minus, plus)?;
    let den = int(minus.b) * int(plus.b);
    let (r, rem) = (a * h).div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Inconsistent(format!("a·h not divisible by b₋b₊ = {den}")));
    }
    Ok(r)
}

/// Checks a caller-supplied `h` against the generated subgroup.
pub fn checked_h(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    given: Option<i64>,
) -> Result<Int> {
    let generated = finite_product_order(minus, plus);
    match given {
        Some(g) if int(g) != generated => Err(Error::HMismatch {
            given: int(g),
            generated,
        }),
        _ => Ok(generated),
    }
}

/// Shifts `t` applied to the two Bezout certificates the construction uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RhoChoices {
    pub t1: i64,
    pub t3: i64,
}

/// `ρ̄ = [[A, B], [D, E]]`, a lift of a homomorphism `T² → T²` with kernel `H`.
#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhoData {
    pub A: Int,
    pub B: Int,
    pub D: Int,
    pub E: Int,
    pub c: Int,
    pub a: Int,
    pub h: Int,
    /// Certificate for `(p₋, q₋)` in `ρ̄₁`.
    pub cert_minus: BezoutCert,
    /// Certificate for `(hc/b₊, ha/(b₋b₊))` in `ρ̄₃`.
    pub cert_plus: BezoutCert,
}

/// A `ρ̄` built as `ρ̄₄ρ̄₃ρ̄₂ρ̄₁`, where `ρ̄₁` straightens `K⁻₀`, `ρ̄₂` kills
/// `H₋`, `ρ̄₃` straightens the image of `K⁺₀` and `ρ̄₄` kills what is left
/// of `H`.
pub fn build_rho(minus: &CircleWithFinite, plus: &CircleWithFinite, h: &Int) -> Result<RhoData> {
    build_rho_with(minus, plus, h, RhoChoices::default())
}

pub fn build_rho_with(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    h: &Int,
    choices: RhoChoices,
) -> Result<RhoData> {
    let generated = finite_product_order(minus, plus);
    if *h != generated {
        return Err(Error::HMismatch {
            given: h.clone(),
            generated,
        });
    }
    let (pm, qm, pp, qp) = (int(minus.p), int(minus.q), int(plus.p), int(plus.q));
    let (bm, bp) = (int(minus.b), int(plus.b));
    let a = signed_intersection(minus, plus);
    if a.is_zero() {
        return Err(Error::CirclesCoincide);
    }

    let cert_minus = ext_gcd(&pm, &qm)?.shifted(choices.t1);
    let r1 = IntMatrix::from_rows(vec![
        vec![cert_minus.psi.clone(), -cert_minus.phi.clone()],
        vec![-qm.clone(), pm.clone()],
    ])?;
    let r2 = IntMatrix::from_rows(vec![vec![bm.clone(), Int::zero()], vec![Int::zero(), Int::one()]])?;

    let c = &pp * &cert_minus.psi - &qp * &cert_minus.phi;
    let (c_num, c_rem) = (h * &c).div_rem(&bp);
    let (a_num, a_rem) = (h * &a).div_rem(&(&bm * &bp));
    if !c_rem.is_zero() || !a_rem.is_zero() || (&bm * &c).gcd(&a) * h != &bm * &bp {
        return Err(Error::Inconsistent(
            "finite subgroups do not match the circle data".into(),
        ));
    }
    let cert_plus = ext_gcd(&c_num, &a_num)?.shifted(choices.t3);
    let r3 = IntMatrix::from_rows(vec![
        vec![cert_plus.psi.clone(), -cert_plus.phi.clone()],
        vec![-a_num, c_num],
    ])?;
    let r4 = IntMatrix::from_rows(vec![
        vec![h / &bm, Int::zero()],
        vec![Int::zero(), Int::one()],
    ])?;

    let rho = r4.mul(&r3)?.mul(&r2)?.mul(&r1)?;
    let data = RhoData {
        A: rho[(0, 0)].clone(),
        B: rho[(0, 1)].clone(),
        D: rho[(1, 0)].clone(),
        E: rho[(1, 1)].clone(),
        c,
        a,
        h: h.clone(),
        cert_minus,
        cert_plus,
    };
    data.check(minus, plus)?;
    Ok(data)
}

impl RhoData {
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![self.A.clone(), self.B.clone()],
            vec![self.D.clone(), self.E.clone()],
        ])
        .expect("2x2")
    }

    pub fn determinant(&self) -> Int {
        &self.A * &self.E - &self.B * &self.D
    }

    /// `δ = gcd(A, B, D, E)`.
    pub fn delta(&self) -> Int {
        self.A.gcd(&self.B).gcd(&self.D).gcd(&self.E)
    }

    /// `|AE − BD| = h` and `gcd(Ap± + Bq±, Dp± + Eq±) = b±`.
    pub fn check(&self, minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<()> {
        if self.determinant().abs() != self.h {
            return Err(Error::Inconsistent(format!(
                "|AE − BD| = {} but h = {}",
                self.determinant().abs(),
                self.h
            )));
        }
        hat_coeffs(self, minus, plus).map(|_| ())
    }

    /// `U·ρ̄` for a unimodular `U`; the certificates then no longer describe
    /// the matrix and are kept only as provenance of the original.
    pub fn left_composed(&self, u: [[i64; 2]; 2]) -> Result<RhoData> {
        let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
        if det.abs() != 1 {
            return Err(Error::InvalidArgument("left factor is not unimodular".into()));
        }
        let m = IntMatrix::from_i64_rows(&u)?.mul(&self.matrix())?;
        Ok(RhoData {
            A: m[(0, 0)].clone(),
            B: m[(0, 1)].clone(),
            D: m[(1, 0)].clone(),
            E: m[(1, 1)].clone(),
            ..self.clone()
        })
    }
}

/// `p̂± = (Ap± + Bq±)/b±` and `q̂± = (Dp± + Eq±)/b±`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HatCoeffs {
    pub p_minus: Int,
    pub q_minus: Int,
    pub p_plus: Int,
    pub q_plus: Int,
}

/// Image slope of one circle under `ρ`; `gcd` of the image must be `b`.
pub fn hat_pair(rho: &RhoData, circle: &CircleWithFinite) -> Result<(Int, Int)> {
    let (p, q) = (int(circle.p), int(circle.q));
    let u = &rho.A * &p + &rho.B * &q;
    let v = &rho.D * &p + &rho.E * &q;
    let b = int(circle.b);
    if u.gcd(&v) != b {
        return Err(Error::Inconsistent(format!(
            "gcd of ρ-image of ({}, {}) is {}, expected {b}",
            circle.p,
            circle.q,
            u.gcd(&v)
        )));
    }
    Ok((u / &b, v / &b))
}

pub fn hat_coeffs(
    rho: &RhoData,
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
) -> Result<HatCoeffs> {
    let (p_minus, q_minus) = hat_pair(rho, minus)?;
    let (p_plus, q_plus) = hat_pair(rho, plus)?;
    Ok(HatCoeffs {
        p_minus,
        q_minus,
        p_plus,
        q_plus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: i64, q: i64, b: i64) -> CircleWithFinite {
        CircleWithFinite::new(p, q, b).unwrap()
    }

    #[test]
    fn intersections() {
        assert_eq!(circle_intersection_count(&c(1, 0, 1), &c(0, 1, 1)).unwrap(), int(1));
        assert_eq!(circle_intersection_count(&c(1, 2, 1), &c(1, 3, 1)).unwrap(), int(1));
        assert_eq!(circle_intersection_count(&c(2, 1, 1), &c(-2, 1, 1)).unwrap(), int(4));
        assert_eq!(
            circle_intersection_count(&c(1, 2, 1), &c(-1, -2, 3)),
            Err(Error::CirclesCoincide)
        );
    }

    #[test]
    fn validation() {
        assert_eq!(CircleWithFinite::new(2, 4, 1), Err(Error::NonPrimitiveSlope { p: 2, q: 4 }));
        assert_eq!(CircleWithFinite::new(0, 0, 1), Err(Error::NonPrimitiveSlope { p: 0, q: 0 }));
        assert_eq!(CircleWithFinite::new(1, 0, 0), Err(Error::BadFiniteOrder));
    }

    #[test]
    fn product_orders() {
        assert_eq!(finite_product_order(&c(1, 1, 4), &c(1, 1, 2)), int(4));
        assert_eq!(finite_product_order(&c(1, 0, 2), &c(0, 1, 3)), int(6));
        assert_eq!(finite_product_order(&c(1, 1, 4), &c(1, -1, 4)), int(8));
    }

    #[test]
    fn meets_circle() {
        let (m, p) = (c(1, 1, 4), c(1, -1, 4));
        assert_eq!(finite_meets_circle(&m, &p, &m), int(4));
        assert_eq!(finite_meets_circle(&m, &p, &p), int(4));
        // H = Z/2 × Z/3 meets the x-axis in Z/2
        assert_eq!(finite_meets_circle(&c(1, 0, 2), &c(0, 1, 3), &c(1, 0, 1)), int(2));
    }

    #[test]
    fn d_index() {
        assert_eq!(finite_index_d(&c(1, 0, 1), &c(0, 1, 1)).unwrap(), int(1));
        assert_eq!(finite_index_d(&c(1, 1, 1), &c(1, -1, 1)).unwrap(), int(2));
        assert_eq!(finite_index_d(&c(1, 1, 4), &c(1, -1, 4)).unwrap(), int(1));
    }

    #[test]
    fn lens_orders() {
        assert_eq!(lens_order(&c(1, 0, 1), &c(0, 1, 1), &int(1)).unwrap(), int(1));
        assert_eq!(lens_order(&c(1, 1, 1), &c(1, -1, 1), &int(1)).unwrap(), int(2));
        let (m, p) = (c(1, 2, 2), c(1, 3, 2));
        let h = finite_product_order(&m, &p);
        assert_eq!(h, int(4));
        assert_eq!(lens_order(&m, &p, &h).unwrap(), int(1));
    }

    #[test]
    fn rho_fixture() {
        let (m, p) = (c(1, 0, 1), c(0, 1, 1));
        let rho = build_rho(&m, &p, &int(1)).unwrap();
        assert_eq!(
            (rho.A.clone(), rho.B.clone(), rho.D.clone(), rho.E.clone()),
            (int(0), int(1), int(-1), int(0))
        );
        let hat = hat_coeffs(&rho, &m, &p).unwrap();
        assert_eq!((hat.p_plus, hat.q_plus), (int(1), int(0)));
    }

    #[test]
    fn rho_rejects_wrong_h() {
        let (m, p) = (c(1, 1, 4), c(1, -1, 4));
        assert_eq!(
            build_rho(&m, &p, &int(4)),
            Err(Error::HMismatch { given: int(4), generated: int(8) })
        );
        assert_eq!(checked_h(&m, &p, Some(8)).unwrap(), int(8));
    }

    #[test]
    fn rho_shifts_and_recomposition() {
        let (m, p) = (c(2, 3, 2), c(1, -2, 3));
        let h = finite_product_order(&m, &p);
        for t1 in -3..=3 {
            for t3 in -3..=3 {
                let rho = build_rho_with(&m, &p, &h, RhoChoices { t1, t3 }).unwrap();
                let hat = hat_coeffs(&rho, &m, &p).unwrap();
                assert_eq!((hat.p_plus, hat.q_plus), (int(1), int(0)));
                let u = rho.left_composed([[2, 1], [1, 1]]).unwrap();
                u.check(&m, &p).unwrap();
            }
        }
    }
}
