//! Matching a seven-dimensional profile against the exceptional shapes
//!
//! | type | `H₂` | `H₃` |
//! |------|------|------|
//! | 1 | `0` | `Z/γ` |
//! | 2 | `Z ⊕ Z/α`, `α ∈ {0, 1, 2}` | `0 → Z/β → H₃ → Z/γ → 0` |
//!
//! or against the profile of a product of atoms. `Z/0` is `Z`. When
//! `α ≠ 0` the presentation must have `β ∈ {1, γ}`; a failure is reported
//! as a warning and nothing is corrected.

use std::fmt;

use num_traits::{One, Zero};

use crate::abgroup::{admits_extension, FgAbelian, GradedGroups};
use crate::catalog::symmetric_profiles;
use crate::intlin::Int;

/// `(β, γ)` with `0 → Z/β → H₃ → Z/γ → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub beta: Int,
    pub gamma: Int,
    /// `H₃` itself is undetermined.
    pub open: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Symmetric(String),
    Type1 { gamma: Int },
    Type2 { alpha: Int, presentation: Presentation },
    Unmatched,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Symmetric(name) => write!(f, "symmetric profile {name}"),
            Shape::Type1 { gamma } => write!(f, "type 1, gamma={gamma}"),
            Shape::Type2 { alpha, presentation: p } => {
                write!(f, "type 2, alpha={alpha}, beta={}, gamma={}", p.beta, p.gamma)?;
                if p.open {
                    f.write_str(" (open extension)")?;
                }
                Ok(())
            }
            Shape::Unmatched => f.write_str("unmatched"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub shape: Shape,
    /// Other shapes the same groups also fit.
    pub alternatives: Vec<Shape>,
    pub warnings: Vec<String>,
}

impl Classification {
    pub fn succeeded(&self) -> bool {
        self.shape != Shape::Unmatched && self.warnings.is_empty()
    }
}

/// `α` from `H₂ = Z ⊕ Z/α`.
fn alpha_of(h2: &FgAbelian) -> Option<Int> {
    match (h2.rank(), h2.torsion()) {
        (2, []) => Some(Int::zero()),
        (1, []) => Some(Int::one()),
        (1, [t]) if *t == Int::from(2) => Some(Int::from(2)),
        _ => None,
    }
}

/// The default presentation of a determined `H₃`, if any.
fn presentation_of(h3: &FgAbelian) -> Option<Presentation> {
    let p = |beta: Int, gamma: Int| Some(Presentation { beta, gamma, open: false });
    match (h3.rank(), h3.torsion()) {
        (0, []) => p(Int::one(), Int::one()),
        (0, [g]) => p(Int::one(), g.clone()),
        (0, [d1, d2]) => p(d1.clone(), d2.clone()),
        (1, []) => p(Int::zero(), Int::one()),
        (1, [t]) => p(Int::zero(), t.clone()),
        _ => None,
    }
}

/// A presentation with `β ∈ {1, γ}`, if the group admits one.
fn theorem_presentation(h3: &FgAbelian) -> Option<Presentation> {
    if !h3.is_finite() {
        return None;
    }
    let n = h3.order();
    if let Some(g) = h3.cyclic_order() {
        return Some(Presentation { beta: Int::one(), gamma: g, open: false });
    }
    let gamma = n.sqrt();
    let z = FgAbelian::cyclic(gamma.clone());
    (&gamma * &gamma == n && admits_extension(h3, &z, &z)).then(|| Presentation {
        beta: gamma.clone(),
        gamma,
        open: false,
    })
}

fn table_shapes(g: &GradedGroups, warnings: &mut Vec<String>) -> Vec<Shape> {
    let (h2, h3) = (g.group(2), g.group(3));
    let mut out = Vec::new();
    if h2.is_trivial() && !g.has_open_extension() {
        match h3.cyclic_order() {
            Some(gamma) if !gamma.is_zero() => out.push(Shape::Type1 { gamma }),
            _ => {}
        }
    }
    let Some(alpha) = alpha_of(&h2) else {
        return out;
    };
    let presentation = match g.extension() {
        Some((3, e)) if e.is_open() => match (e.sub.cyclic_order(), e.quot.cyclic_order()) {
            (Some(beta), Some(gamma)) if !gamma.is_zero() => Some(Presentation { beta, gamma, open: true }),
            _ => None,
        },
        _ => presentation_of(&h3),
    };
    let Some(mut presentation) = presentation else {
        return out;
    };
    if !alpha.is_zero() {
        let holds = |p: &Presentation| p.beta.is_one() || p.beta == p.gamma;
        if presentation.open {
            if !holds(&presentation) {
                warnings.push(format!(
                    "alpha={alpha} but beta={} is neither 1 nor gamma={}",
                    presentation.beta, presentation.gamma
                ));
            }
        } else if let Some(p) = theorem_presentation(&h3) {
            presentation = p;
        } else {
            warnings.push(format!("alpha={alpha} but H3 = {h3} has no presentation with beta in {{1, gamma}}"));
        }
    }
    out.push(Shape::Type2 { alpha, presentation });
    out
}

/// Symmetric profiles take precedence over table shapes.
pub fn classify_theorem_type(g: &GradedGroups) -> Classification {
    let mut warnings = Vec::new();
    let g = match g.as_homology() {
        Ok(h) => h,
        Err(e) => {
            return Classification {
                shape: Shape::Unmatched,
                alternatives: Vec::new(),
                warnings: vec![e.to_string()],
            }
        }
    };
    let mut shapes = Vec::new();
    if !g.has_open_extension() {
        shapes.extend(
            symmetric_profiles(g.dim())
                .into_iter()
                .filter(|(_, p)| p.groups() == g.groups())
                .map(|(name, _)| Shape::Symmetric(name)),
        );
    }
    if g.dim() == 7 {
        let symmetric = !shapes.is_empty();
        let mut table_warnings = Vec::new();
        shapes.extend(table_shapes(&g, &mut table_warnings));
        // a symmetric match needs no table presentation
        if !symmetric {
            warnings.extend(table_warnings);
        }
    }
    let mut iter = shapes.into_iter();
    match iter.next() {
        Some(shape) => Classification {
            shape,
            alternatives: iter.collect(),
            warnings,
        },
        None => {
            warnings.push("matches neither a symmetric profile nor a table shape".into());
            Classification {
                shape: Shape::Unmatched,
                alternatives: Vec::new(),
                warnings,
            }
        }
    }
}
