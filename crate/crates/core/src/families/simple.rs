//! Families whose groups follow from closed formulas or a product profile.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Family, FamilyResult, Invariants};
use crate::abgroup::{seven_manifold_cohomology, DegreeFour, ExtensionDatum, FgAbelian};
use crate::catalog::product_profile;
use crate::error::{Error, Result};
use crate::intlin::{int, Int};
use crate::torus::{finite_product_order, CircleWithFinite};

fn result(family: Family, h5: FgAbelian, h4: DegreeFour, invariants: Invariants) -> FamilyResult {
    FamilyResult {
        family,
        cohomology: seven_manifold_cohomology(h5, h4),
        invariants,
        rho: None,
        vectors: None,
        diagnostics: Vec::new(),
    }
}

/// `H⁵ = Z ⊕ Z/α` and `0 → Z/s → H⁴ → Z/s → 0` with `s = |q|/gcd(q, 2)`.
pub(super) fn n7b(q: i64, n_plus: i64) -> Result<FamilyResult> {
    if q == 0 {
        return Err(Error::ProductAction);
    }
    let alpha: i64 = if n_plus == 1 && q % 2 != 0 { 2 } else { 1 };
    let s = int(q.abs() / q.gcd(&2));
    let datum = ExtensionDatum::new(FgAbelian::cyclic(s.clone()), FgAbelian::cyclic(s.clone()));
    let h5 = FgAbelian::new(1, [int(alpha)]);
    Ok(result(
        Family::N7B,
        h5,
        DegreeFour::Extension(datum),
        Invariants {
            alpha: Some(int(alpha)),
            beta: Some(s.clone()),
            gamma: Some(s.clone()),
            h4_order: Some(&s * &s),
            ..Invariants::default()
        },
    ))
}

/// `H⁵ = Z`, `H⁴ = Z/q²`.
pub(super) fn n7c(q: i64) -> Result<FamilyResult> {
    if q == 0 {
        return Err(Error::ProductAction);
    }
    let order = int(q) * int(q);
    Ok(result(
        Family::N7C,
        FgAbelian::z(),
        DegreeFour::Known(FgAbelian::cyclic(order.clone())),
        Invariants {
            alpha: Some(int(1)),
            beta: Some(int(1)),
            gamma: Some(order.clone()),
            h4_order: Some(order),
            ..Invariants::default()
        },
    ))
}

pub(super) fn product(family: Family, factors: &[&str]) -> Result<FamilyResult> {
    let cohomology = product_profile(factors)?.as_cohomology()?;
    Ok(FamilyResult::profile(family, cohomology))
}

/// `H⁵ = Z`, `H⁴ = Z/(a₋a₊|n₋n₊|)` with `a± = h/b±`; infinite when `n₋n₊ = 0`.
pub(super) fn n7h(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<FamilyResult> {
    let h = finite_product_order(minus, plus);
    let a_minus = &h / int(minus.b);
    let a_plus = &h / int(plus.b);
    let order: Int = (&a_minus * &a_plus * int(minus.q) * int(plus.q)).abs();
    let h4 = if order.is_zero() { FgAbelian::z() } else { FgAbelian::cyclic(order.clone()) };
    Ok(result(
        Family::N7H,
        FgAbelian::z(),
        DegreeFour::Known(h4),
        Invariants {
            alpha: Some(int(1)),
            h: Some(h),
            h4_order: Some(order),
            ..Invariants::default()
        },
    ))
}
