//! Stated and assembled homology profiles: sphere and symmetric-space
//! atoms, their products, Brieskorn varieties and the `P⁷` templates.
//!
//! Atom groups come from `data/atoms.txt`; the build refuses an atom
//! without a citation.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::abgroup::{kunneth, seven_manifold_cohomology, DegreeFour, FgAbelian, GradedGroups, Kind};
use crate::error::{Error, Result};
use crate::intlin::Int;

const ATOMS: &str = include_str!("../data/atoms.txt");

/// Maximum total dimension of a product profile.
pub const MAX_DIM: usize = 7;

/// A named closed manifold with its integral homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceAtom {
    pub name: String,
    pub homology: GradedGroups,
    pub citation: String,
}

impl SpaceAtom {
    pub fn dim(&self) -> usize {
        self.homology.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTable {
    atoms: Vec<SpaceAtom>,
}

impl AtomTable {
    /// Blank-line separated records of `name`, `dim`, `homology`, `citation`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut atoms = Vec::new();
        for (i, record) in text.trim_end_matches('\n').split("\n\n").enumerate() {
            let mut fields = [None, None, None, None];
            for line in record.lines() {
                let (key, value) = line
                    .split_once(" = ")
                    .ok_or_else(|| Error::Parse(format!("record {i}: bad line `{line}`")))?;
                let slot = match key {
                    "name" => 0,
                    "dim" => 1,
                    "homology" => 2,
                    "citation" => 3,
                    _ => return Err(Error::Parse(format!("record {i}: unknown key `{key}`"))),
                };
                if fields[slot].replace(value).is_some() {
                    return Err(Error::Parse(format!("record {i}: duplicate key `{key}`")));
                }
            }
            let [Some(name), Some(dim), Some(groups), Some(citation)] = fields else {
                return Err(Error::Parse(format!("record {i}: missing field")));
            };
            if citation.trim().is_empty() {
                return Err(Error::Parse(format!("atom `{name}` has no citation")));
            }
            let dim: usize = dim
                .parse()
                .map_err(|_| Error::Parse(format!("atom `{name}`: bad dim `{dim}`")))?;
            let groups = groups
                .split(", ")
                .map(str::parse)
                .collect::<Result<Vec<FgAbelian>>>()?;
            if groups.len() != dim + 1 {
                return Err(Error::Parse(format!(
                    "atom `{name}`: {} groups for dimension {dim}",
                    groups.len()
                )));
            }
            let homology = GradedGroups::new(Kind::Homology, groups)?;
            homology.check_closed_profile()?;
            atoms.push(SpaceAtom {
                name: name.to_string(),
                homology,
                citation: citation.to_string(),
            });
        }
        Ok(AtomTable { atoms })
    }

    /// Inverse of [`AtomTable::parse`] on canonical input.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let groups: Vec<String> = atom.homology.groups().iter().map(|g| g.to_string()).collect();
            let _ = writeln!(out, "name = {}", atom.name);
            let _ = writeln!(out, "dim = {}", atom.dim());
            let _ = writeln!(out, "homology = {}", groups.join(", "));
            let _ = writeln!(out, "citation = {}", atom.citation);
        }
        out
    }

    pub fn atoms(&self) -> &[SpaceAtom] {
        &self.atoms
    }

    pub fn get(&self, name: &str) -> Result<&SpaceAtom> {
        self.atoms
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }
}

/// The table shipped in `data/atoms.txt`.
pub fn builtin_atoms() -> &'static AtomTable {
    static TABLE: OnceLock<AtomTable> = OnceLock::new();
    TABLE.get_or_init(|| AtomTable::parse(ATOMS).expect("bundled atom table is valid"))
}

pub fn atom(name: &str) -> Result<&'static SpaceAtom> {
    builtin_atoms().get(name)
}

/// Homology of a product of named atoms, in the given order.
pub fn product_profile(names: &[&str]) -> Result<GradedGroups> {
    let atoms = names.iter().map(|n| atom(n)).collect::<Result<Vec<_>>>()?;
    let total: usize = atoms.iter().map(|a| a.dim()).sum();
    if total > MAX_DIM {
        return Err(Error::DimensionOverflow(total));
    }
    let mut iter = atoms.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
    iter.try_fold(first.homology.clone(), |acc, a| kunneth(&acc, &a.homology))
}

/// Names separated by `x`, e.g. `S3xS2xS2`; `N6D` is the profile of
/// `CP2xS2`.
pub fn low_dim(name: &str) -> Result<GradedGroups> {
    if name == "N6D" {
        return product_profile(&["CP2", "S2"]);
    }
    let parts: Vec<&str> = name.split('x').collect();
    product_profile(&parts)
}

/// Homology of a seven-manifold with the given `H₂` and `H₃`.
pub fn seven_manifold_homology(h2: FgAbelian, h3: FgAbelian) -> GradedGroups {
    seven_manifold_cohomology(h2, DegreeFour::Known(h3))
        .poincare_homology()
        .expect("seven-manifold profile is closed")
}

/// Brieskorn variety `B⁷_d`: `H₂ = 0`, `H₃ = Z/d`.
pub fn brieskorn(d: i64) -> Result<GradedGroups> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!("Brieskorn index d = {d} must be positive")));
    }
    Ok(seven_manifold_homology(FgAbelian::trivial(), FgAbelian::cyclic(Int::from(d))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PType {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PVariant {
    #[default]
    Plain,
    Z2,
}

/// `P⁷` templates with the externally computed integer `r`.
pub fn p_family(kind: PType, r: i64, variant: PVariant) -> Result<GradedGroups> {
    if r < 0 {
        return Err(Error::InvalidArgument(format!("r = {r} must be nonnegative")));
    }
    if variant == PVariant::Z2 {
        if kind != PType::A {
            return Err(Error::InvalidArgument("the Z2 variant exists only for type A".into()));
        }
        if r == 0 {
            return Err(Error::InvalidArgument("the Z2 variant requires r > 0".into()));
        }
    }
    let h2 = match (kind, variant) {
        (PType::C, _) => FgAbelian::trivial(),
        (_, PVariant::Plain) => FgAbelian::z(),
        (_, PVariant::Z2) => FgAbelian::new(1, [Int::from(2)]),
    };
    Ok(seven_manifold_homology(h2, FgAbelian::cyclic(Int::from(r))))
}

/// Every product of atoms of total dimension `dim`, each listed once with
/// factors in table order.
pub fn symmetric_profiles(dim: usize) -> Vec<(String, GradedGroups)> {
    fn go(
        names: &[&'static str],
        dims: &[usize],
        start: usize,
        left: usize,
        acc: &mut Vec<&'static str>,
        out: &mut Vec<Vec<&'static str>>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..names.len() {
            if dims[i] <= left {
                acc.push(names[i]);
                go(names, dims, i, left - dims[i], acc, out);
                acc.pop();
            }
        }
    }
    let table = builtin_atoms();
    let names: Vec<&'static str> = table.atoms().iter().map(|a| a.name.as_str()).collect();
    let dims: Vec<usize> = table.atoms().iter().map(|a| a.dim()).collect();
    let mut combos = Vec::new();
    go(&names, &dims, 0, dim, &mut Vec::new(), &mut combos);
    combos
        .into_iter()
        .map(|c| {
            let g = product_profile(&c).expect("dimension bounded");
            (c.join("x"), g)
        })
        .collect()
}
