//! One calculator per seven-dimensional family `N⁷_A … N⁷_I`.
//!
//! Every calculator validates its diagram, then emits the cohomology
//! `H⁰ … H⁷` together with the constants `α, β, γ` and the intermediate
//! orders that produced them.

mod lattice;
pub mod n7a;
pub mod n7e;
mod simple;

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::abgroup::GradedGroups;
use crate::error::{Error, Result};
use crate::intlin::{int, Int};
use crate::torus::{finite_index_d, finite_meets_circle, finite_product_order, CircleWithFinite, RhoChoices, RhoData};

pub use lattice::MvVectors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    N7A,
    N7B,
    N7C,
    N7D,
    N7E,
    N7F,
    N7G,
    N7H,
    N7I,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::N7A,
        Family::N7B,
        Family::N7C,
        Family::N7D,
        Family::N7E,
        Family::N7F,
        Family::N7G,
        Family::N7H,
        Family::N7I,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::N7A => "N7A",
            Family::N7B => "N7B",
            Family::N7C => "N7C",
            Family::N7D => "N7D",
            Family::N7E => "N7E",
            Family::N7F => "N7F",
            Family::N7G => "N7G",
            Family::N7H => "N7H",
            Family::N7I => "N7I",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The integer parameters of one group diagram. Circles are stored raw so
/// that malformed input surfaces as violations rather than panics; `h`
/// is optional and, when present, must match the generated subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyDiagram {
    N7A {
        minus: CircleWithFinite,
        plus: CircleWithFinite,
        h: Option<i64>,
    },
    N7B {
        p: i64,
        q: i64,
        n_minus: i64,
        n_plus: i64,
    },
    N7C {
        p: i64,
        q: i64,
        n: i64,
    },
    N7D {
        m: i64,
        n: i64,
        mu: i64,
        nu: i64,
        p: i64,
        a: i64,
    },
    N7E {
        m: i64,
        n: i64,
        mu: i64,
        nu: i64,
        minus: CircleWithFinite,
        plus: CircleWithFinite,
        h: Option<i64>,
    },
    N7F {
        p: i64,
        a: i64,
        n: i64,
    },
    N7G,
    N7H {
        m_minus: i64,
        n_minus: i64,
        m_plus: i64,
        n_plus: i64,
        b_minus: i64,
        b_plus: i64,
        h: Option<i64>,
    },
    N7I,
}

impl FamilyDiagram {
    pub fn family(&self) -> Family {
        match self {
            FamilyDiagram::N7A { .. } => Family::N7A,
            FamilyDiagram::N7B { .. } => Family::N7B,
            FamilyDiagram::N7C { .. } => Family::N7C,
            FamilyDiagram::N7D { .. } => Family::N7D,
            FamilyDiagram::N7E { .. } => Family::N7E,
            FamilyDiagram::N7F { .. } => Family::N7F,
            FamilyDiagram::N7G => Family::N7G,
            FamilyDiagram::N7H { .. } => Family::N7H,
            FamilyDiagram::N7I => Family::N7I,
        }
    }

    /// `K⁻₀ = K⁺₀`, the branch on which `N⁷_A` is a product profile.
    pub fn equal_circles(&self) -> bool {
        match self {
            FamilyDiagram::N7A { minus, plus, .. } => minus.same_circle(plus),
            _ => false,
        }
    }
}

/// Shifts for every Bezout certificate a calculator chooses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BezoutChoices {
    pub rho: RhoChoices,
    /// `(Ā, B̄)` in `N⁷_A`.
    pub ab: i64,
    /// `(D̄, Ē)` in `N⁷_A`.
    pub de: i64,
    /// `(ν, μ)` in `N⁷_A`.
    pub nu_mu: i64,
    /// `(A/ℓ, D/ℓ)` in `N⁷_E`.
    pub ad: i64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Options {
    pub choices: BezoutChoices,
    /// Unimodular `U` replacing `ρ̄` by `U·ρ̄`.
    pub left: Option<[[i64; 2]; 2]>,
}

/// Constants reported next to the groups; absent when not defined for the
/// family. Orders use `0` for infinite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub alpha: Option<Int>,
    pub beta: Option<Int>,
    pub gamma: Option<Int>,
    pub h: Option<Int>,
    pub delta: Option<Int>,
    pub ell: Option<Int>,
    /// `|Im Δ₃|` from the determinant.
    pub im_delta3: Option<Int>,
    /// `|Im I₄|`.
    pub im_i4: Option<Int>,
    pub h4_order: Option<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyResult {
    pub family: Family,
    pub cohomology: GradedGroups,
    pub invariants: Invariants,
    pub rho: Option<RhoData>,
    pub vectors: Option<MvVectors>,
    /// Failed optional checks; never affect the groups.
    pub diagnostics: Vec<String>,
}

impl FamilyResult {
    fn profile(family: Family, cohomology: GradedGroups) -> Self {
        FamilyResult {
            family,
            cohomology,
            invariants: Invariants::default(),
            rho: None,
            vectors: None,
            diagnostics: Vec::new(),
        }
    }
}

/// Violations of the conditions stated with the diagram; empty when valid.
pub fn validate(d: &FamilyDiagram) -> Vec<String> {
    let mut v = Vec::new();
    match *d {
        FamilyDiagram::N7A { minus, plus, h } => {
            torus_violations(&mut v, &minus, &plus, h);
        }
        FamilyDiagram::N7B { p, q, n_minus, n_plus } => {
            if p.gcd(&q) != 1 {
                v.push(format!("gcd(p, q) = {} must be 1", p.gcd(&q)));
            }
            if !(1..=2).contains(&n_plus) {
                v.push(format!("n_plus = {n_plus} must be 1 or 2"));
            }
            if n_minus < 1 || n_minus % 4 != 0 {
                v.push(format!("n_minus = {n_minus} must be a positive multiple of 4"));
            } else {
                let r = n_minus / 4;
                let pm = p.rem_euclid(n_minus);
                if pm != r && pm != n_minus - r {
                    v.push(format!("p = {p} must be ±{r} mod {n_minus}"));
                }
            }
            if q % 2 == 0 && n_plus == 1 {
                v.push("q even puts (-1, 1) in H_-, which forces n_plus = 2".into());
            }
        }
        FamilyDiagram::N7C { p, q, n } => {
            if p.gcd(&q) != 1 {
                v.push(format!("gcd(p, q) = {} must be 1", p.gcd(&q)));
            }
            if n < 1 {
                v.push(format!("n = {n} must be positive"));
            } else if q.gcd(&n) != 1 {
                v.push(format!("gcd(q, n) = {} must be 1", q.gcd(&n)));
            }
        }
        FamilyDiagram::N7D { m, n, mu, nu, a, .. } => {
            unimodular_pair(&mut v, m, n, mu, nu);
            if a < 1 {
                v.push(format!("a = {a} must be positive"));
            }
        }
        FamilyDiagram::N7E { m, n, mu, nu, minus, plus, h } => {
            unimodular_pair(&mut v, m, n, mu, nu);
            if torus_violations(&mut v, &minus, &plus, h) {
                distinct_with_d(&mut v, &minus, &plus, "q");
            }
        }
        FamilyDiagram::N7F { n, .. } => {
            if n < 1 {
                v.push(format!("n = {n} must be positive"));
            }
        }
        FamilyDiagram::N7G | FamilyDiagram::N7I => {}
        FamilyDiagram::N7H { m_minus, n_minus, m_plus, n_plus, b_minus, b_plus, h } => {
            let minus = CircleWithFinite { p: m_minus, q: n_minus, b: b_minus };
            let plus = CircleWithFinite { p: m_plus, q: n_plus, b: b_plus };
            if n_minus == 0 && n_plus == 0 {
                v.push("n_minus and n_plus are both zero, so K- = K+".into());
            }
            if torus_violations(&mut v, &minus, &plus, h) && !(n_minus == 0 && n_plus == 0) {
                distinct_with_d(&mut v, &minus, &plus, "n");
            }
        }
    }
    v
}

fn unimodular_pair(v: &mut Vec<String>, m: i64, n: i64, mu: i64, nu: i64) {
    let det = i128::from(m) * i128::from(nu) - i128::from(n) * i128::from(mu);
    if det != 1 {
        v.push(format!("m·nu − n·mu = {det} must be 1"));
    }
}

/// Slope, order and subgroup checks shared by the torus families. Returns
/// whether the circle data is sound enough for further checks.
fn torus_violations(
    v: &mut Vec<String>,
    minus: &CircleWithFinite,
    plus: &CircleWithFinite,
    h: Option<i64>,
) -> bool {
    let before = v.len();
    for (side, c) in [("minus", minus), ("plus", plus)] {
        if c.p.gcd(&c.q) != 1 {
            v.push(format!("{side} slope ({}, {}) is not primitive", c.p, c.q));
        }
        if c.b < 1 {
            v.push(format!("b_{side} = {} must be positive", c.b));
        }
    }
    if v.len() > before {
        return false;
    }
    let generated = finite_product_order(minus, plus);
    if let Some(h) = h {
        if int(h) != generated {
            v.push(format!("h = {h} does not match generated finite subgroup of order {generated}"));
        }
    }
    for (side, c) in [("minus", minus), ("plus", plus)] {
        let met = finite_meets_circle(minus, plus, c);
        if met != int(c.b) {
            v.push(format!("H meets the {side} circle in {met} points, not b_{side} = {}", c.b));
        }
    }
    v.len() == before
}

/// `K⁻ ≠ K⁺` and `gcd(q₋, q₊, d) = 1`, with `q` the second slope entry.
fn distinct_with_d(v: &mut Vec<String>, minus: &CircleWithFinite, plus: &CircleWithFinite, q: &str) {
    if minus.same_circle(plus) {
        v.push("K- = K+: the two circles coincide".into());
        return;
    }
    let d = finite_index_d(minus, plus).expect("distinct circles");
    let g = d.gcd(&int(minus.q).gcd(&int(plus.q)));
    if !g.is_one() {
        v.push(format!("gcd({q}_minus, {q}_plus, d) = {g} must be 1 (d = {d})"));
    }
}

pub fn homology(d: &FamilyDiagram) -> Result<FamilyResult> {
    homology_with(d, Options::default())
}

/// As [`homology`] with explicit certificate shifts and ρ recomposition;
/// the emitted groups do not depend on either.
pub fn homology_with(d: &FamilyDiagram, opts: Options) -> Result<FamilyResult> {
    let violations = validate(d);
    if !violations.is_empty() {
        return Err(Error::InvalidDiagram(violations));
    }
    match *d {
        FamilyDiagram::N7A { minus, plus, .. } => n7a::homology(&minus, &plus, opts),
        FamilyDiagram::N7B { q, n_plus, .. } => simple::n7b(q, n_plus),
        FamilyDiagram::N7C { q, .. } => simple::n7c(q),
        FamilyDiagram::N7D { .. } => simple::product(Family::N7D, &["S3", "S2", "S2"]),
        FamilyDiagram::N7E { m, n, mu, nu, minus, plus, .. } => {
            n7e::homology(m, n, mu, nu, &minus, &plus, opts)
        }
        FamilyDiagram::N7F { .. } => simple::product(Family::N7F, &["S5", "S2"]),
        FamilyDiagram::N7G => simple::product(Family::N7G, &["CP2", "S3"]),
        FamilyDiagram::N7H { m_minus, n_minus, m_plus, n_plus, b_minus, b_plus, .. } => {
            let minus = CircleWithFinite { p: m_minus, q: n_minus, b: b_minus };
            let plus = CircleWithFinite { p: m_plus, q: n_plus, b: b_plus };
            simple::n7h(&minus, &plus)
        }
        FamilyDiagram::N7I => simple::product(Family::N7I, &["S4", "S3"]),
    }
}
