//! `N⁷_A`: `S³×S³ ⊃ K⁻, K⁺ ⊃ H` with circles `K±₀` of slope `(p±, q±)`
//! in the maximal torus and `H = H₋·H₊` finite.

use num_integer::Integer;
use num_traits::Zero;

use super::lattice::{n7a_vectors, MvVectors};
use super::{Family, FamilyResult, Invariants, Options};
use crate::abgroup::{seven_manifold_cohomology, DegreeFour, ExtensionDatum, FgAbelian};
use crate::catalog::product_profile;
use crate::error::{Error, Result};
use crate::intlin::{int, lcm, Int};
use crate::torus::{build_rho_with, finite_product_order, hat_coeffs, lens_order, CircleWithFinite, RhoData};

/// `(p₋, q₋) = ±(p₊, −q₊)`: `x, y₋, y₊` are dependent and `H⁴` is infinite.
pub fn is_reflected(minus: &CircleWithFinite, plus: &CircleWithFinite) -> bool {
    (minus.p, minus.q) == (plus.p, -plus.q) || (minus.p, minus.q) == (-plus.p, plus.q)
}

/// `ρ̄` with the requested certificate shifts and left factor.
pub(super) fn rho_for(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    h: &Int,
    opts: &Options,
) -> Result<RhoData> {
    let rho = build_rho_with(minus, plus, h, opts.choices.rho)?;
    match opts.left {
        Some(u) => {
            let rho = rho.left_composed(u)?;
            rho.check(minus, plus)?;
            Ok(rho)
        }
        None => Ok(rho),
    }
}

/// Vectors for the diagram under the given options.
pub fn vectors(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    opts: &Options,
) -> Result<(RhoData, MvVectors)> {
    let h = finite_product_order(minus, plus);
    let rho = rho_for(minus, plus, &h, opts)?;
    let hat = hat_coeffs(&rho, minus, plus)?;
    let slopes = [(int(minus.p), int(minus.q)), (int(plus.p), int(plus.q))];
    let v = n7a_vectors(&rho, &hat, slopes, &opts.choices)?;
    Ok((rho, v))
}

pub(super) fn homology(
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    opts: Options,
) -> Result<FamilyResult> {
    let h = finite_product_order(minus, plus);
    if minus.same_circle(plus) {
        let c = product_profile(&["S3", "S2", "S2"])?.as_cohomology()?;
        let mut r = FamilyResult::profile(Family::N7A, c);
        r.invariants.h = Some(h);
        return Ok(r);
    }

    let (rho, v) = vectors(minus, plus, &opts)?;
    let (bm, bp) = (int(minus.b), int(plus.b));
    let (hm, hp) = (&h / &bm, &h / &bp);
    let gamma = lens_order(minus, plus, &h)?;
    let im_i4 = lcm(&hm, &hp);
    let im_delta3 = v.determinant();
    let delta = rho.delta();

    let mut diagnostics = Vec::new();
    if delta != hm.gcd(&hp) {
        diagnostics.push(format!(
            "δ = gcd(A, B, D, E) = {delta} differs from gcd(h/b₋, h/b₊) = {}",
            hm.gcd(&hp)
        ));
    }

    let (beta, h4_order) = if is_reflected(minus, plus) {
        (Int::zero(), Int::zero())
    } else {
        let order = &im_delta3 * &im_i4;
        if order.is_zero() {
            return Err(Error::Inconsistent("H⁴ infinite for distinct unreflected circles".into()));
        }
        let (beta, rem) = order.div_rem(&gamma);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!("|H⁴| = {order} not divisible by γ = {gamma}")));
        }
        (beta, order)
    };

    let datum = ExtensionDatum::new(FgAbelian::cyclic(beta.clone()), FgAbelian::cyclic(gamma.clone()));
    let cohomology = seven_manifold_cohomology(FgAbelian::free(2), DegreeFour::Extension(datum));
    Ok(FamilyResult {
        family: Family::N7A,
        cohomology,
        invariants: Invariants {
            alpha: Some(Int::zero()),
            beta: Some(beta),
            gamma: Some(gamma),
            h: Some(h),
            delta: Some(delta),
            ell: None,
            im_delta3: Some(im_delta3),
            im_i4: Some(im_i4),
            h4_order: Some(h4_order),
        },
        rho: Some(rho),
        vectors: Some(v),
        diagnostics,
    })
}
