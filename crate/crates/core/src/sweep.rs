//! Valid diagrams of one family inside a parameter box.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::families::{validate, Family, FamilyDiagram};
use crate::intlin::ext_gcd_i64;
use crate::torus::CircleWithFinite;

/// `slope` bounds `|p|, |q|` and the other free integers, `order` bounds
/// the finite orders `b±, a, n`, and `reduced` bounds `|m|, |n|` of the
/// embedding in the reduced torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub slope: i64,
    pub order: i64,
    pub reduced: i64,
    /// Keep both signs of every slope instead of one representative.
    pub both_signs: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            slope: 3,
            order: 3,
            reduced: 2,
            both_signs: false,
        }
    }
}

/// Primitive `(p, q)` in the box; with `both_signs` false, only those with
/// `q > 0` or `q = 0 < p`.
pub fn primitive_slopes(bound: i64, both_signs: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            if p.gcd(&q) != 1 {
                continue;
            }
            if both_signs || q > 0 || (q == 0 && p > 0) {
                out.push((p, q));
            }
        }
    }
    out
}

/// `(m, n, μ, ν)` with `mν − nμ = 1`, one completion per primitive `(m, n)`.
pub fn unimodular_rows(bound: i64) -> Vec<(i64, i64, i64, i64)> {
    primitive_slopes(bound, true)
        .into_iter()
        .map(|(m, n)| {
            let c = ext_gcd_i64(m, n).expect("primitive");
            let nu = c.psi.to_i64().expect("small");
            let mu = c.phi.to_i64().expect("small");
            (m, n, mu, nu)
        })
        .collect()
}

fn circle_pairs(b: &Bounds) -> Vec<(CircleWithFinite, CircleWithFinite)> {
    let slopes = primitive_slopes(b.slope, b.both_signs);
    let mut out = Vec::new();
    for &(pm, qm) in &slopes {
        for &(pp, qp) in &slopes {
            for bm in 1..=b.order {
                for bp in 1..=b.order {
                    out.push((
                        CircleWithFinite { p: pm, q: qm, b: bm },
                        CircleWithFinite { p: pp, q: qp, b: bp },
                    ));
                }
            }
        }
    }
    out
}

fn candidates(family: Family, b: &Bounds) -> Vec<FamilyDiagram> {
    let s = b.slope;
    match family {
        Family::N7A => circle_pairs(b)
            .into_iter()
            .map(|(minus, plus)| FamilyDiagram::N7A { minus, plus, h: None })
            .collect(),
        Family::N7B => {
            let mut out = Vec::new();
            for k in 1..=b.order {
                for n_plus in 1..=2 {
                    for p in -s..=s {
                        for q in -s..=s {
                            out.push(FamilyDiagram::N7B { p, q, n_minus: 4 * k, n_plus });
                        }
                    }
                }
            }
            out
        }
        Family::N7C => {
            let mut out = Vec::new();
            for p in -s..=s {
                for q in -s..=s {
                    for n in 1..=b.order {
                        out.push(FamilyDiagram::N7C { p, q, n });
                    }
                }
            }
            out
        }
        Family::N7D => {
            let mut out = Vec::new();
            for (m, n, mu, nu) in unimodular_rows(b.reduced) {
                for p in -s..=s {
                    for a in 1..=b.order {
                        out.push(FamilyDiagram::N7D { m, n, mu, nu, p, a });
                    }
                }
            }
            out
        }
        Family::N7E => {
            let pairs = circle_pairs(b);
            let mut out = Vec::new();
            for (m, n, mu, nu) in unimodular_rows(b.reduced) {
                for &(minus, plus) in &pairs {
                    out.push(FamilyDiagram::N7E { m, n, mu, nu, minus, plus, h: None });
                }
            }
            out
        }
        Family::N7F => {
            let mut out = Vec::new();
            for p in -s..=s {
                for a in 1..=b.order {
                    for n in 1..=b.order {
                        out.push(FamilyDiagram::N7F { p, a, n });
                    }
                }
            }
            out
        }
        Family::N7G => vec![FamilyDiagram::N7G],
        Family::N7H => circle_pairs(b)
            .into_iter()
            .map(|(minus, plus)| FamilyDiagram::N7H {
                m_minus: minus.p,
                n_minus: minus.q,
                m_plus: plus.p,
                n_plus: plus.q,
                b_minus: minus.b,
                b_plus: plus.b,
                h: None,
            })
            .collect(),
        Family::N7I => vec![FamilyDiagram::N7I],
    }
}

/// Every candidate in the box that passes [`validate`], in a fixed order.
pub fn valid_diagrams(family: Family, bounds: &Bounds) -> Vec<FamilyDiagram> {
    candidates(family, bounds)
        .into_iter()
        .filter(|d| validate(d).is_empty())
        .collect()
}
