//! Independent recomputation of the orders behind the family formulas.
//!
//! Lattice quotients go through [`kernel_basis`] and [`quotient_order`];
//! torus quantities are recounted point by point in `(1/N)Z²/Z²`. Nothing
//! here calls the formula path except to obtain its value for comparison.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{n7a, FamilyDiagram, MvVectors, Options};
use crate::intlin::{dot, int, kernel_basis, lattice_coordinates, quotient_order, Int, IntMatrix};
use crate::torus::{
    circle_intersection_count, finite_index_d, finite_meets_circle, finite_product_order, lens_order,
    CircleWithFinite,
};

/// Moduli above this are counted arithmetically instead of pair by pair.
pub const ENUMERATION_LIMIT: i64 = 1_000;

/// Torus twins enumerating more points than this are skipped.
pub const TORUS_ENUMERATION_LIMIT: i64 = 10_000;

/// `|ker(row) / ⟨gens⟩|`, `0` for infinite.
pub fn mv_quotient_order(row: &[Int], gens: &[Vec<Int>]) -> Result<Int> {
    if gens.iter().any(|g| !dot(row, g).is_zero()) {
        return Err(Error::NotACycle);
    }
    let kernel = kernel_basis(&IntMatrix::from_rows(vec![row.to_vec()])?);
    let coords = lattice_coordinates(&kernel, gens).map_err(|_| Error::NotACycle)?;
    let unit: Vec<Vec<Int>> = (0..kernel.len())
        .map(|i| (0..kernel.len()).map(|j| int(i64::from(i == j))).collect())
        .collect();
    quotient_order(&unit, &coords)
}

/// Kernel order of `Z/m ⊕ Z/n → Z/l`, `(i, j) ↦ i − j`; `l` divides both.
pub fn surjection_kernel_order(m: &Int, n: &Int, l: &Int) -> Result<Int> {
    if !m.is_positive() || !n.is_positive() || !l.is_positive() {
        return Err(Error::InvalidArgument("moduli must be positive".into()));
    }
    if !(m % l).is_zero() || !(n % l).is_zero() {
        return Err(Error::InvalidArgument(format!("{l} does not divide both {m} and {n}")));
    }
    let small = |v: &Int| v.to_i64().filter(|&x| x <= ENUMERATION_LIMIT);
    match (small(m), small(n), l.to_i64()) {
        (Some(m), Some(n), Some(l)) => {
            let count = (0..m)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| (i - j).rem_euclid(l) == 0)
                .count();
            Ok(Int::from(count))
        }
        // each i has n/l partners
        _ => Ok(m * (n / l)),
    }
}

/// `|Im I₄|` in `N⁷_A`: kernel of `Z/(h/b₋) ⊕ Z/(h/b₊) → Z/δ`.
pub fn im_i4_order(h_b_minus: &Int, h_b_plus: &Int, delta: &Int) -> Result<Int> {
    if &h_b_minus.gcd(h_b_plus) != delta {
        return Err(Error::DeltaMismatch {
            m1: h_b_minus.clone(),
            m2: h_b_plus.clone(),
            delta: delta.clone(),
        });
    }
    surjection_kernel_order(h_b_minus, h_b_plus, delta)
}

/// `H = H₋·H₊` as numerators over `N = lcm(b₋, b₊)`.
fn enumerate_h(minus: &CircleWithFinite, plus: &CircleWithFinite) -> (i64, BTreeSet<(i64, i64)>) {
    let n = minus.b.lcm(&plus.b);
    let (sm, sp) = (n / minus.b, n / plus.b);
    let mut pts = BTreeSet::new();
    for i in 0..minus.b {
        for j in 0..plus.b {
            let x = (i * minus.p * sm + j * plus.p * sp).rem_euclid(n);
            let y = (i * minus.q * sm + j * plus.q * sp).rem_euclid(n);
            pts.insert((x, y));
        }
    }
    (n, pts)
}

/// `(x, y)/den` lies on the circle through slope `(p, q)`.
fn on_circle(c: &CircleWithFinite, x: i64, y: i64, den: i64) -> bool {
    (c.q * x - c.p * y).rem_euclid(den) == 0
}

fn distinct(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<i64> {
    let a = (plus.q * minus.p - minus.q * plus.p).abs();
    if a == 0 {
        Err(Error::CirclesCoincide)
    } else {
        Ok(a)
    }
}

pub fn enum_product_order(minus: &CircleWithFinite, plus: &CircleWithFinite) -> i64 {
    enumerate_h(minus, plus).1.len() as i64
}

pub fn enum_meets_circle(minus: &CircleWithFinite, plus: &CircleWithFinite, circle: &CircleWithFinite) -> i64 {
    let (n, h) = enumerate_h(minus, plus);
    h.iter().filter(|&&(x, y)| on_circle(circle, x, y, n)).count() as i64
}

/// Points of `K⁻₀ ∩ K⁺₀` over the denominator `|a|`, found on the grid.
fn enumerate_meet(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<(i64, Vec<(i64, i64)>)> {
    let a = distinct(minus, plus)?;
    let pts = (0..a)
        .flat_map(|x| (0..a).map(move |y| (x, y)))
        .filter(|&(x, y)| on_circle(minus, x, y, a) && on_circle(plus, x, y, a))
        .collect();
    Ok((a, pts))
}

pub fn enum_circle_intersection(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<i64> {
    Ok(enumerate_meet(minus, plus)?.1.len() as i64)
}

/// `d = |I| / |I ∩ H|` with `I = K⁻₀ ∩ K⁺₀`.
pub fn enum_index_d(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<i64> {
    let (a, meet) = enumerate_meet(minus, plus)?;
    let (n, h) = enumerate_h(minus, plus);
    let l = a.lcm(&n);
    let in_h = meet
        .iter()
        .filter(|&&(x, y)| {
            let (sx, sy) = (x * (l / a), y * (l / a));
            sx % (l / n) == 0 && sy % (l / n) == 0 && h.contains(&(sx / (l / n), sy / (l / n)))
        })
        .count() as i64;
    Ok(a / in_h)
}

/// `γ = |K⁻ ∩ K⁺| / h` with `K± = K±₀·H`.
pub fn enum_lens_order(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Result<i64> {
    let a = distinct(minus, plus)?;
    let (n, h) = enumerate_h(minus, plus);
    let m = a * n;
    let s = m / n;
    // values of q₊x − p₊y on H; a point lies in K⁺ iff its value is among them
    let plus_values: BTreeSet<i64> =
        h.iter().map(|&(x, y)| (plus.q * x * s - plus.p * y * s).rem_euclid(m)).collect();
    let mut meet = BTreeSet::new();
    for &(gx, gy) in &h {
        for k in 0..m {
            let x = (gx * s + k * minus.p).rem_euclid(m);
            let y = (gy * s + k * minus.q).rem_euclid(m);
            if plus_values.contains(&(plus.q * x - plus.p * y).rem_euclid(m)) {
                meet.insert((x, y));
            }
        }
    }
    let total = meet.len() as i64;
    let order = h.len() as i64;
    if total % order != 0 {
        return Err(Error::Inconsistent(format!("|K⁻ ∩ K⁺| = {total} not divisible by h = {order}")));
    }
    Ok(total / order)
}

/// One compared quantity: parameters, formula value, oracle value, status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub quantity: &'static str,
    pub params: String,
    pub formula: String,
    pub oracle: String,
}

impl CheckRecord {
    fn new(quantity: &'static str, params: &str, formula: impl ToString, oracle: impl ToString) -> Self {
        CheckRecord {
            quantity,
            params: params.to_string(),
            formula: formula.to_string(),
            oracle: oracle.to_string(),
        }
    }

    fn compare<T: ToString>(quantity: &'static str, params: &str, formula: Result<T>, oracle: Result<T>) -> Self {
        let show = |r: Result<T>| match r {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        CheckRecord::new(quantity, params, show(formula), show(oracle))
    }

    pub fn agrees(&self) -> bool {
        self.formula == self.oracle
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.agrees() { "ok" } else { "MISMATCH" };
        write!(
            f,
            "{} {} formula={} oracle={} {}",
            self.quantity, self.params, self.formula, self.oracle, status
        )
    }
}

fn circle_params(minus: &CircleWithFinite, plus: &CircleWithFinite) -> String {
    format!(
        "minus=({},{}) b={} plus=({},{}) b={}",
        minus.p, minus.q, minus.b, plus.p, plus.q, plus.b
    )
}

/// Enumeration twins of the torus operations, one record each; twins over
/// grids larger than [`TORUS_ENUMERATION_LIMIT`] are omitted.
pub fn subgroup_enum_check(minus: &CircleWithFinite, plus: &CircleWithFinite) -> Vec<CheckRecord> {
    let fits = |points: Option<i64>| points.is_some_and(|n| n <= TORUS_ENUMERATION_LIMIT);
    let a = (plus.q * minus.p - minus.q * plus.p).abs();
    let h_grid = minus.b.checked_mul(plus.b);
    let meet_grid = a.checked_mul(a);
    let lens_grid = h_grid.and_then(|g| g.checked_mul(a)).and_then(|g| g.checked_mul(minus.b.lcm(&plus.b)));
    if !fits(h_grid) {
        return Vec::new();
    }
    let params = circle_params(minus, plus);
    let h = finite_product_order(minus, plus);
    let to_int = |r: Result<i64>| r.map(int);
    let mut out = vec![
        CheckRecord::new("h", &params, &h, enum_product_order(minus, plus)),
        CheckRecord::new(
            "meets_minus",
            &params,
            finite_meets_circle(minus, plus, minus),
            enum_meets_circle(minus, plus, minus),
        ),
        CheckRecord::new(
            "meets_plus",
            &params,
            finite_meets_circle(minus, plus, plus),
            enum_meets_circle(minus, plus, plus),
        ),
    ];
    if !fits(meet_grid) {
        return out;
    }
    out.extend([
        CheckRecord::compare(
            "intersection",
            &params,
            circle_intersection_count(minus, plus),
            to_int(enum_circle_intersection(minus, plus)),
        ),
        CheckRecord::compare("d", &params, finite_index_d(minus, plus), to_int(enum_index_d(minus, plus))),
    ]);
    if fits(lens_grid) {
        out.push(CheckRecord::compare(
            "gamma",
            &params,
            lens_order(minus, plus, &h),
            to_int(enum_lens_order(minus, plus)),
        ));
    }
    out
}

/// Oracle `|H⁴|` for `N⁷_A` from the emitted vectors.
pub fn n7a_h4_order(minus: &CircleWithFinite, plus: &CircleWithFinite, v: &MvVectors, delta: &Int) -> Result<Int> {
    let h = int(enum_product_order(minus, plus));
    let q = mv_quotient_order(&v.row, &[v.x.clone(), v.y_minus.clone(), v.y_plus.clone()])?;
    Ok(q * im_i4_order(&(&h / int(minus.b)), &(&h / int(plus.b)), delta)?)
}

/// Oracle `|H⁴|` for `N⁷_E` from the emitted vectors.
pub fn n7e_h4_order(minus: &CircleWithFinite, plus: &CircleWithFinite, v: &MvVectors, ell: &Int) -> Result<Int> {
    let h = int(enum_product_order(minus, plus));
    let q = mv_quotient_order(&v.row, &[v.x.clone(), v.y_minus.clone(), v.y_plus.clone()])?;
    let km = (&h * int(minus.q)).abs() / int(minus.b);
    let kp = (&h * int(plus.q)).abs() / int(plus.b);
    Ok(q * surjection_kernel_order(&km, &kp, ell)?)
}

/// Formula against oracle for every quantity the diagram's family has a
/// twin for; families given by closed formulas alone yield no records.
pub fn check_diagram(d: &FamilyDiagram, opts: Options) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    match *d {
        FamilyDiagram::N7A { minus, plus, .. } => {
            out.extend(subgroup_enum_check(&minus, &plus));
            if !minus.same_circle(&plus) && !n7a::is_reflected(&minus, &plus) {
                let (rho, v) = n7a::vectors(&minus, &plus, &opts)?;
                let h = finite_product_order(&minus, &plus);
                let formula = v.determinant() * crate::intlin::lcm(&(&h / int(minus.b)), &(&h / int(plus.b)));
                let oracle = n7a_h4_order(&minus, &plus, &v, &rho.delta());
                out.push(CheckRecord::compare("h4_order", &circle_params(&minus, &plus), Ok(formula), oracle));
            }
        }
        FamilyDiagram::N7E { m, n, mu, nu, minus, plus, .. } => {
            out.extend(subgroup_enum_check(&minus, &plus));
            if minus.q * plus.q * m * n != 0 {
                let r = crate::families::homology_with(d, opts)?;
                let v = r.vectors.as_ref().expect("N⁷_E emits vectors");
                let inv = &r.invariants;
                let formula = inv.beta.clone().expect("β") * inv.gamma.clone().expect("γ");
                let ell = inv.ell.clone().expect("ℓ");
                let params = format!("m={m} n={n} mu={mu} nu={nu} {}", circle_params(&minus, &plus));
                out.push(CheckRecord::compare("h4_order", &params, Ok(formula), n7e_h4_order(&minus, &plus, v, &ell)));
            }
        }
        FamilyDiagram::N7H { m_minus, n_minus, m_plus, n_plus, b_minus, b_plus, .. } => {
            let minus = CircleWithFinite { p: m_minus, q: n_minus, b: b_minus };
            let plus = CircleWithFinite { p: m_plus, q: n_plus, b: b_plus };
            out.extend(subgroup_enum_check(&minus, &plus));
        }
        _ => {}
    }
    Ok(out)
}
