//! Mayer-Vietoris vectors in `Z⁴`: the generators `x, y±` of the image in
//! degree three, the row whose kernel contains them, and an explicit basis
//! `w₁ … w₄` adapted to that kernel.

use num_integer::Integer;
use num_traits::{One, Signed};

use super::BezoutChoices;
use crate::error::{Error, Result};
use crate::intlin::{det, dot, ext_gcd, Int, IntMatrix};
use crate::torus::{HatCoeffs, RhoData};

/// Certificates and quotients behind the adapted basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MvCoeffs {
    /// `ĀB̃ + B̄Ã = 1`, `D̄Ẽ + ĒD̃ = 1`, `νμ̃ + μν̃ = 1`.
    N7A {
        a_bar: Int,
        b_bar: Int,
        d_bar: Int,
        e_bar: Int,
        a_tilde: Int,
        b_tilde: Int,
        d_tilde: Int,
        e_tilde: Int,
        mu: Int,
        nu: Int,
        mu_tilde: Int,
        nu_tilde: Int,
        delta: Int,
    },
    /// `(A/ℓ)ζ + (D/ℓ)η = 1`.
    N7E {
        ell: Int,
        a_bar: Int,
        d_bar: Int,
        zeta: Int,
        eta: Int,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MvVectors {
    pub row: Vec<Int>,
    pub x: Vec<Int>,
    pub y_minus: Vec<Int>,
    pub y_plus: Vec<Int>,
    pub w: [Vec<Int>; 4],
    /// Basis vector completing the kernel basis to a basis of `Z⁴`.
    pub complement: Vec<Int>,
    pub coeffs: MvCoeffs,
}

fn scaled(k: &Int, v: &[Int]) -> Vec<Int> {
    v.iter().map(|e| k * e).collect()
}

fn sum(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec4(a: Int, b: Int, c: Int, d: Int) -> Vec<Int> {
    vec![a, b, c, d]
}

impl MvVectors {
    /// The three kernel basis vectors named alongside the adapted basis.
    pub fn kernel_basis(&self) -> [Vec<Int>; 3] {
        let w = &self.w;
        match &self.coeffs {
            MvCoeffs::N7A { mu, nu, .. } => [
                w[0].clone(),
                sum(&scaled(nu, &w[1]), &scaled(&-mu, &w[3])),
                w[2].clone(),
            ],
            MvCoeffs::N7E { a_bar, d_bar, .. } => [
                w[0].clone(),
                w[1].clone(),
                sum(&scaled(d_bar, &w[2]), &scaled(&-a_bar, &w[3])),
            ],
        }
    }

    /// `|det(x, y₋, y₊, complement)|`, the order of the kernel modulo
    /// `⟨x, y₋, y₊⟩` in the adapted basis.
    pub fn determinant(&self) -> Int {
        let cols = [
            self.x.clone(),
            self.y_minus.clone(),
            self.y_plus.clone(),
            self.complement.clone(),
        ];
        det(&IntMatrix::from_columns(&cols).expect("four columns of length four"))
            .expect("square")
            .abs()
    }

    /// The adapted basis is unimodular, its kernel part is killed by the
    /// row, and so are `x, y±`.
    pub fn check(&self) -> Result<()> {
        let [k1, k2, k3] = self.kernel_basis();
        let basis = IntMatrix::from_columns(&[k1.clone(), k2.clone(), k3.clone(), self.complement.clone()])?;
        if !det(&basis)?.abs().is_one() {
            return Err(Error::Inconsistent("adapted basis is not unimodular".into()));
        }
        for v in [&k1, &k2, &k3, &self.x, &self.y_minus, &self.y_plus] {
            if dot(&self.row, v) != Int::from(0) {
                return Err(Error::Inconsistent("vector outside the kernel row".into()));
            }
        }
        Ok(())
    }
}

/// `x = (−D, A, −E, B)`, `y± = (q±q̂±, −q±p̂±, p±q̂±, −p±p̂±)`, row `[B E A D]`.
pub(super) fn n7a_vectors(
    rho: &RhoData,
    hat: &HatCoeffs,
    slopes: [(Int, Int); 2],
    choices: &BezoutChoices,
) -> Result<MvVectors> {
    let (a, b, d, e) = (&rho.A, &rho.B, &rho.D, &rho.E);
    let y = |(p, q): &(Int, Int), ph: &Int, qh: &Int| vec4(q * qh, -(q * ph), p * qh, -(p * ph));
    let x = vec4(-d.clone(), a.clone(), -e.clone(), b.clone());
    let y_minus = y(&slopes[0], &hat.p_minus, &hat.q_minus);
    let y_plus = y(&slopes[1], &hat.p_plus, &hat.q_plus);
    let row = vec4(b.clone(), e.clone(), a.clone(), d.clone());

    let gab = a.gcd(b);
    let gde = d.gcd(e);
    let delta = gab.gcd(&gde);
    let (a_bar, b_bar) = (a / &gab, b / &gab);
    let (d_bar, e_bar) = (d / &gde, e / &gde);
    let cab = ext_gcd(&a_bar, &b_bar)?.shifted(choices.ab);
    let (b_tilde, a_tilde) = (cab.psi, -cab.phi);
    let cde = ext_gcd(&d_bar, &e_bar)?.shifted(choices.de);
    let (e_tilde, d_tilde) = (cde.psi, -cde.phi);
    let (mu, nu) = (&gab / &delta, &gde / &delta);
    let cnm = ext_gcd(&nu, &mu)?.shifted(choices.nu_mu);
    let (mu_tilde, nu_tilde) = (cnm.psi, -cnm.phi);

    let z = || Int::from(0);
    let w = [
        vec4(a_bar.clone(), z(), -b_bar.clone(), z()),
        vec4(a_tilde.clone(), z(), b_tilde.clone(), z()),
        vec4(z(), d_bar.clone(), z(), -e_bar.clone()),
        vec4(z(), d_tilde.clone(), z(), e_tilde.clone()),
    ];
    let complement = sum(&scaled(&nu_tilde, &w[1]), &scaled(&mu_tilde, &w[3]));
    let v = MvVectors {
        row,
        x,
        y_minus,
        y_plus,
        w,
        complement,
        coeffs: MvCoeffs::N7A {
            a_bar,
            b_bar,
            d_bar,
            e_bar,
            a_tilde,
            b_tilde,
            d_tilde,
            e_tilde,
            mu,
            nu,
            mu_tilde,
            nu_tilde,
            delta,
        },
    };
    v.check()?;
    Ok(v)
}

/// `x = (Dn, −An, −Dm, Am)`, `y± = (nq̂±, −np̂±, mq̂±, −mp̂±)`,
/// row `[Am Dm −An −Dn]`.
pub(super) fn n7e_vectors(
    rho: &RhoData,
    hat: &HatCoeffs,
    m: &Int,
    n: &Int,
    mu: &Int,
    nu: &Int,
    choices: &BezoutChoices,
) -> Result<MvVectors> {
    let (a, d) = (&rho.A, &rho.D);
    let y = |ph: &Int, qh: &Int| vec4(n * qh, -(n * ph), m * qh, -(m * ph));
    let x = vec4(d * n, -(a * n), -(d * m), a * m);
    let y_minus = y(&hat.p_minus, &hat.q_minus);
    let y_plus = y(&hat.p_plus, &hat.q_plus);
    let row = vec4(a * m, d * m, -(a * n), -(d * n));

    let ell = a.gcd(d);
    let (a_bar, d_bar) = (a / &ell, d / &ell);
    let cert = ext_gcd(&a_bar, &d_bar)?.shifted(choices.ad);
    let (zeta, eta) = (cert.psi, -cert.phi);

    let z = || Int::from(0);
    let w = [
        vec4(n.clone(), z(), m.clone(), z()),
        vec4(z(), n.clone(), z(), m.clone()),
        vec4(nu.clone(), z(), mu.clone(), z()),
        vec4(z(), nu.clone(), z(), mu.clone()),
    ];
    let complement = sum(&scaled(&zeta, &w[2]), &scaled(&eta, &w[3]));
    let v = MvVectors {
        row,
        x,
        y_minus,
        y_plus,
        w,
        complement,
        coeffs: MvCoeffs::N7E {
            ell,
            a_bar,
            d_bar,
            zeta,
            eta,
        },
    };
    v.check()?;
    Ok(v)
}
