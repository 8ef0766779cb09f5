//! `N⁷_E`: `S³×S³×S¹` with `H₀ = {(zᵐ, zⁿ, 1)}` and the remaining data
//! living on the reduced torus `{(w₁^μ, w₁^ν, w₂)}`.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lattice::{n7e_vectors, MvVectors};
use super::n7a::rho_for;
use super::{Family, FamilyResult, Invariants, Options};
use crate::abgroup::{seven_manifold_cohomology, DegreeFour, ExtensionDatum, FgAbelian};
use crate::error::{Error, Result};
use crate::intlin::{int, Int};
use crate::torus::{finite_product_order, hat_coeffs, lens_order, CircleWithFinite, RhoData};

pub fn vectors(
    m: i64,
    n: i64,
    mu: i64,
    nu: i64,
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    opts: &Options,
) -> Result<(RhoData, MvVectors)> {
    let h = finite_product_order(minus, plus);
    let rho = rho_for(minus, plus, &h, opts)?;
    let hat = hat_coeffs(&rho, minus, plus)?;
    let v = n7e_vectors(&rho, &hat, &int(m), &int(n), &int(mu), &int(nu), &opts.choices)?;
    Ok((rho, v))
}

/// `|Im I₄| = (hq₋/b₋)(hq₊/b₊)/ℓ`.
pub fn im_i4_order(minus: &CircleWithFinite, plus: &CircleWithFinite, h: &Int, ell: &Int) -> Result<Int> {
    let km = (h * int(minus.q)).abs() / int(minus.b);
    let kp = (h * int(plus.q)).abs() / int(plus.b);
    let (order, rem) = (km * kp).div_rem(ell);
    if !rem.is_zero() {
        return Err(Error::Inconsistent(format!("ℓ = {ell} does not divide the degree-four orders")));
    }
    Ok(order)
}

pub(super) fn homology(
    m: i64,
    n: i64,
    mu: i64,
    nu: i64,
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    opts: Options,
) -> Result<FamilyResult> {
    let h = finite_product_order(minus, plus);
    let (rho, v) = vectors(m, n, mu, nu, minus, plus, &opts)?;
    let gamma = lens_order(minus, plus, &h)?;
    let ell = rho.A.gcd(&rho.D);

    let mut diagnostics = Vec::new();
    let expected_ell = ((&h * int(minus.q)) / int(minus.b)).gcd(&((&h * int(plus.q)) / int(plus.b)));
    if ell != expected_ell {
        diagnostics.push(format!(
            "ℓ = gcd(A, D) = {ell} differs from gcd(hq₋/b₋, hq₊/b₊) = {expected_ell}"
        ));
    }

    let infinite = minus.q == 0 || plus.q == 0 || m == 0 || n == 0;
    let (beta, im_delta3, im_i4, h4_order) = if infinite {
        (Int::zero(), None, None, Int::zero())
    } else {
        let im_delta3 = v.determinant();
        let im_i4 = im_i4_order(minus, plus, &h, &ell)?;
        let order = &im_delta3 * &im_i4;
        if order.is_zero() {
            return Err(Error::Inconsistent("H⁴ infinite although q₋q₊mn ≠ 0".into()));
        }
        let (beta, rem) = order.div_rem(&gamma);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!("|H⁴| = {order} not divisible by γ = {gamma}")));
        }
        (beta, Some(im_delta3), Some(im_i4), order)
    };

    let datum = ExtensionDatum::new(FgAbelian::cyclic(beta.clone()), FgAbelian::cyclic(gamma.clone()));
    let cohomology = seven_manifold_cohomology(FgAbelian::free(2), DegreeFour::Extension(datum));
    Ok(FamilyResult {
        family: Family::N7E,
        cohomology,
        invariants: Invariants {
            alpha: Some(Int::zero()),
            beta: Some(beta),
            gamma: Some(gamma),
            h: Some(h),
            delta: None,
            ell: Some(ell),
            im_delta3,
            im_i4,
            h4_order: Some(h4_order),
        },
        rho: Some(rho),
        vectors: Some(v),
        diagnostics,
    })
}
