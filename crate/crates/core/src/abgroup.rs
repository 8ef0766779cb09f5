//! Finitely generated abelian groups and graded (co)homology profiles.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::{smith_normal_form, Int, IntMatrix};

/// `Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk` with `2 ≤ d1 | d2 | … | dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelian {
    rank: usize,
    torsion: Vec<Int>,
}

impl FgAbelian {
    /// Canonical form of `Z^rank ⊕ ⊕ Z/c` over the given cyclic orders.
    /// Orders of 0 contribute a free summand and orders of ±1 vanish.
    pub fn new(rank: usize, cyclic_orders: impl IntoIterator<Item = Int>) -> Self {
        let mut rank = rank;
        let mut orders = Vec::new();
        for c in cyclic_orders {
            let c = c.abs();
            if c.is_zero() {
                rank += 1;
            } else if !c.is_one() {
                orders.push(c);
            }
        }
        // pairwise (gcd, lcm) sweep leaves a divisibility chain
        for i in 0..orders.len() {
            for j in i + 1..orders.len() {
                let g = orders[i].gcd(&orders[j]);
                let l = orders[i].lcm(&orders[j]);
                orders[i] = g;
                orders[j] = l;
            }
        }
        orders.retain(|d| !d.is_one());
        FgAbelian {
            rank,
            torsion: orders,
        }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelian {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn z() -> Self {
        Self::free(1)
    }

    /// `Z/d`, using `Z/0 = Z` and `Z/1 = 0`.
    pub fn cyclic(d: impl Into<Int>) -> Self {
        Self::new(0, [d.into()])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }

    /// The `d` with `self ≅ Z/d`, if cyclic.
    pub fn cyclic_order(&self) -> Option<Int> {
        match (self.rank, self.torsion.as_slice()) {
            (0, []) => Some(Int::one()),
            (1, []) => Some(Int::zero()),
            (0, [d]) => Some(d.clone()),
            _ => None,
        }
    }

    /// Group order with `0` meaning infinite.
    pub fn order(&self) -> Int {
        if self.rank > 0 {
            Int::zero()
        } else {
            self.torsion.iter().product()
        }
    }

    pub fn free_part(&self) -> FgAbelian {
        Self::free(self.rank)
    }

    pub fn torsion_part(&self) -> FgAbelian {
        FgAbelian {
            rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    pub fn direct_sum(&self, other: &FgAbelian) -> FgAbelian {
        Self::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn tensor(&self, other: &FgAbelian) -> FgAbelian {
        let mut orders = Vec::new();
        for _ in 0..self.rank {
            orders.extend(other.torsion.iter().cloned());
        }
        for _ in 0..other.rank {
            orders.extend(self.torsion.iter().cloned());
        }
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        Self::new(self.rank * other.rank, orders)
    }

    pub fn tor(&self, other: &FgAbelian) -> FgAbelian {
        let orders = self
            .torsion
            .iter()
            .flat_map(|a| other.torsion.iter().map(move |b| a.gcd(b)));
        Self::new(0, orders)
    }
}

impl fmt::Display for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for FgAbelian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0;
        let mut orders = Vec::new();
        for term in s.split('+').map(str::trim) {
            if term == "Z" {
                rank += 1;
            } else if let Some(r) = term.strip_prefix("Z^") {
                rank += r
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad rank in `{term}`")))?;
            } else if let Some(d) = term.strip_prefix("Z/") {
                let d: Int = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad order in `{term}`")))?;
                if d.is_negative() {
                    return Err(Error::Parse(format!("negative order in `{term}`")));
                }
                orders.push(d);
            } else {
                return Err(Error::Parse(format!("unrecognised group term `{term}`")));
            }
        }
        Ok(Self::new(rank, orders))
    }
}

/// Cokernel of the relation matrix; each row is one relation among
/// `relations.cols()` generators.
pub fn from_presentation(relations: &IntMatrix) -> FgAbelian {
    let snf = smith_normal_form(relations);
    let r = snf.rank();
    FgAbelian::new(relations.cols() - r, snf.diag[..r].iter().cloned())
}

/// As [`from_presentation`] but allowing an empty relation list.
pub fn from_relations(generators: usize, relations: &[Vec<Int>]) -> Result<FgAbelian> {
    if relations.is_empty() {
        return Ok(FgAbelian::free(generators));
    }
    Ok(from_presentation(&IntMatrix::from_rows(relations.to_vec())?))
}

/// `0 → sub → G → quot → 0` with `G` possibly undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionDatum {
    pub sub: FgAbelian,
    pub quot: FgAbelian,
    pub resolved: Option<FgAbelian>,
}

impl ExtensionDatum {
    /// Resolves automatically only when one end is trivial.
    pub fn new(sub: FgAbelian, quot: FgAbelian) -> Self {
        let resolved = if sub.is_trivial() {
            Some(quot.clone())
        } else if quot.is_trivial() {
            Some(sub.clone())
        } else {
            None
        };
        ExtensionDatum {
            sub,
            quot,
            resolved,
        }
    }

    pub fn resolve(mut self, g: FgAbelian) -> Result<Self> {
        if !admits_extension(&g, &self.sub, &self.quot) {
            return Err(Error::BadExtension(g.to_string()));
        }
        self.resolved = Some(g);
        Ok(self)
    }

    pub fn is_open(&self) -> bool {
        self.resolved.is_none()
    }

    /// A group of the right order and rank; the split extension.
    pub fn placeholder(&self) -> FgAbelian {
        self.resolved
            .clone()
            .unwrap_or_else(|| self.sub.direct_sum(&self.quot))
    }

    pub fn order(&self) -> Int {
        self.sub.order() * self.quot.order()
    }
}

impl fmt::Display for ExtensionDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 -> {} -> H -> {} -> 0", self.sub, self.quot)
    }
}

/// Whether `g` can sit in `0 → sub → g → quot → 0`. Exact for cyclic
/// `sub` and `quot`; otherwise only order and rank are compared.
pub fn admits_extension(g: &FgAbelian, sub: &FgAbelian, quot: &FgAbelian) -> bool {
    if g.rank() != sub.rank() + quot.rank() {
        return false;
    }
    let (Some(beta), Some(gamma)) = (sub.cyclic_order(), quot.cyclic_order()) else {
        return g.order() == sub.order() * quot.order();
    };
    let t = g.torsion();
    match (beta.is_zero(), gamma.is_zero()) {
        // 0 → Z/β → G → Z/γ → 0: G = Z/d1 ⊕ Z/d2, d1·d2 = βγ, d1 | gcd(β, γ)
        (false, false) => {
            if t.len() > 2 || g.order() != &beta * &gamma {
                return false;
            }
            let d1 = if t.len() == 2 { t[0].clone() } else { Int::one() };
            beta.gcd(&gamma).is_multiple_of(&d1)
        }
        // 0 → Z → G → Z/γ → 0: G = Z ⊕ Z/t with t | γ
        (true, false) => match t {
            [] => true,
            [d] => gamma.is_multiple_of(d),
            _ => false,
        },
        // quotient free: the sequence splits
        (false, true) => *g == sub.direct_sum(quot),
        (true, true) => t.is_empty(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Cohomology,
    Homology,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::Cohomology => Kind::Homology,
            Kind::Homology => Kind::Cohomology,
        }
    }
}

/// `H^0 … H^n` (or `H_0 … H_n`) of an `n`-dimensional space, with at most
/// one degree described only up to an extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedGroups {
    kind: Kind,
    groups: Vec<FgAbelian>,
    extension: Option<(usize, ExtensionDatum)>,
}

impl GradedGroups {
    pub fn new(kind: Kind, groups: Vec<FgAbelian>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidArgument("no groups given".into()));
        }
        Ok(GradedGroups {
            kind,
            groups,
            extension: None,
        })
    }

    pub fn with_extension(mut self, degree: usize, datum: ExtensionDatum) -> Result<Self> {
        if degree >= self.groups.len() {
            return Err(Error::InvalidArgument(format!(
                "extension degree {degree} beyond dimension {}",
                self.dim()
            )));
        }
        self.groups[degree] = datum.placeholder();
        self.extension = Some((degree, datum));
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn groups(&self) -> &[FgAbelian] {
        &self.groups
    }

    /// Group in degree `k`; trivial beyond the dimension.
    pub fn group(&self, k: usize) -> FgAbelian {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn extension(&self) -> Option<(usize, &ExtensionDatum)> {
        self.extension.as_ref().map(|(k, e)| (*k, e))
    }

    pub fn has_open_extension(&self) -> bool {
        self.extension.as_ref().is_some_and(|(_, e)| e.is_open())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.rank() as i64 } else { -(g.rank() as i64) })
            .sum()
    }

    /// `H^0 = H^n = Z`, and `χ = 0` in odd dimension.
    pub fn check_closed_profile(&self) -> Result<()> {
        let n = self.dim();
        if self.groups[0] != FgAbelian::z() {
            return Err(Error::NotClosedProfile(format!("degree 0 is {}", self.groups[0])));
        }
        if self.groups[n] != FgAbelian::z() {
            return Err(Error::NotClosedProfile(format!("top degree is {}", self.groups[n])));
        }
        if n % 2 == 1 && self.euler_characteristic() != 0 {
            return Err(Error::NotClosedProfile(format!(
                "Euler characteristic {} in odd dimension",
                self.euler_characteristic()
            )));
        }
        Ok(())
    }

    /// Reindexes `k ↦ n − k` and flips the kind.
    pub fn poincare_dual(&self) -> Result<GradedGroups> {
        self.check_closed_profile()?;
        let n = self.dim();
        let groups = self.groups.iter().rev().cloned().collect();
        Ok(GradedGroups {
            kind: self.kind.dual(),
            groups,
            extension: self.extension.clone().map(|(k, e)| (n - k, e)),
        })
    }

    /// Homology of a closed orientable manifold from its cohomology.
    pub fn poincare_homology(&self) -> Result<GradedGroups> {
        if self.kind != Kind::Cohomology {
            return Err(Error::InvalidArgument("expected cohomology".into()));
        }
        self.poincare_dual()
    }

    pub fn as_homology(&self) -> Result<GradedGroups> {
        match self.kind {
            Kind::Homology => Ok(self.clone()),
            Kind::Cohomology => self.poincare_dual(),
        }
    }

    pub fn as_cohomology(&self) -> Result<GradedGroups> {
        match self.kind {
            Kind::Cohomology => Ok(self.clone()),
            Kind::Homology => self.poincare_dual(),
        }
    }
}

/// The degree-4 cohomology of a simply connected closed 7-manifold, known
/// either outright or as an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeFour {
    Known(FgAbelian),
    Extension(ExtensionDatum),
}

/// Full cohomology of a closed simply connected orientable 7-manifold from
/// `H^5` and `H^4`; duality and universal coefficients fix the rest.
pub fn seven_manifold_cohomology(h5: FgAbelian, h4: DegreeFour) -> GradedGroups {
    let (h4_group, datum) = match h4 {
        DegreeFour::Known(g) => (g, None),
        DegreeFour::Extension(e) => (e.placeholder(), Some(e)),
    };
    let h2 = h5.free_part();
    let h3 = h4_group.free_part().direct_sum(&h5.torsion_part());
    let groups = vec![
        FgAbelian::z(),
        FgAbelian::trivial(),
        h2,
        h3,
        h4_group,
        h5,
        FgAbelian::trivial(),
        FgAbelian::z(),
    ];
    let g = GradedGroups::new(Kind::Cohomology, groups).expect("eight degrees");
    match datum {
        Some(e) => g.with_extension(4, e).expect("degree 4 exists"),
        None => g,
    }
}

/// Homology of a product: degreewise tensor plus shifted Tor terms.
pub fn kunneth(a: &GradedGroups, b: &GradedGroups) -> Result<GradedGroups> {
    if a.kind != Kind::Homology || b.kind != Kind::Homology {
        return Err(Error::InvalidArgument("Künneth expects homology".into()));
    }
    if a.extension.is_some() || b.extension.is_some() {
        return Err(Error::UnresolvedExtension);
    }
    let n = a.dim() + b.dim();
    let mut groups = vec![FgAbelian::trivial(); n + 1];
    for (i, x) in a.groups.iter().enumerate() {
        for (j, y) in b.groups.iter().enumerate() {
            groups[i + j] = groups[i + j].direct_sum(&x.tensor(y));
            if i + j < n {
                groups[i + j + 1] = groups[i + j + 1].direct_sum(&x.tor(y));
            }
        }
    }
    GradedGroups::new(Kind::Homology, groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::int;

    fn g(s: &str) -> FgAbelian {
        s.parse().unwrap()
    }

    fn sphere(n: usize) -> GradedGroups {
        let mut groups = vec![FgAbelian::trivial(); n + 1];
        groups[0] = FgAbelian::z();
        groups[n] = FgAbelian::z();
        GradedGroups::new(Kind::Homology, groups).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = FgAbelian::new(0, [int(2), int(3), int(4), int(1)]);
        assert_eq!(a.torsion(), &[int(2), int(12)]);
        assert_eq!(a.order(), int(24));
        assert_eq!(FgAbelian::new(1, [int(0), int(-6)]).to_string(), "Z^2 + Z/6");
        assert_eq!(FgAbelian::cyclic(int(1)).to_string(), "0");
        assert_eq!(FgAbelian::cyclic(int(0)).to_string(), "Z");
    }

    #[test]
    fn rendering_grammar() {
        for s in ["0", "Z", "Z^3", "Z/2", "Z + Z/2", "Z^2 + Z/2 + Z/4"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("Z/6 + Z/4").to_string(), "Z/2 + Z/12");
        assert!("Q".parse::<FgAbelian>().is_err());
        assert!("Z/-2".parse::<FgAbelian>().is_err());
    }

    #[test]
    fn presentations() {
        let m = IntMatrix::from_i64_rows(&[[2, 0]]).unwrap();
        assert_eq!(from_presentation(&m), g("Z + Z/2"));
        // (h/b)(q v1 − p v2) with (p, q) = (1, 2), h/b = 3
        let m = IntMatrix::from_i64_rows(&[[6, -3]]).unwrap();
        assert_eq!(from_presentation(&m), g("Z + Z/3"));
        assert_eq!(from_relations(2, &[]).unwrap(), g("Z^2"));
    }

    #[test]
    fn tensor_and_tor() {
        assert_eq!(g("Z/2").tensor(&g("Z/4")), g("Z/2"));
        assert_eq!(g("Z/2").tor(&g("Z/4")), g("Z/2"));
        assert_eq!(g("Z").tensor(&g("Z/6")), g("Z/6"));
        assert_eq!(g("Z").tor(&g("Z/6")), g("0"));
        assert_eq!(g("Z/6").tensor(&g("Z/4")), g("Z/2"));
    }

    #[test]
    fn kunneth_examples() {
        let p = kunneth(&sphere(3), &sphere(2)).unwrap();
        let expect: Vec<FgAbelian> = ["Z", "0", "Z", "Z", "0", "Z"].iter().map(|s| g(s)).collect();
        assert_eq!(p.groups(), expect.as_slice());

        let s2s2 = kunneth(&sphere(2), &sphere(2)).unwrap();
        let p = kunneth(&s2s2, &sphere(3)).unwrap();
        let expect: Vec<FgAbelian> = ["Z", "0", "Z^2", "Z", "Z", "Z^2", "0", "Z"]
            .iter()
            .map(|s| g(s))
            .collect();
        assert_eq!(p.groups(), expect.as_slice());

        let mut a = vec![FgAbelian::trivial(); 3];
        a[2] = g("Z/2");
        let mut b = vec![FgAbelian::trivial(); 3];
        b[2] = g("Z/4");
        let a = GradedGroups::new(Kind::Homology, a).unwrap();
        let b = GradedGroups::new(Kind::Homology, b).unwrap();
        let p = kunneth(&a, &b).unwrap();
        assert_eq!(p.group(4), g("Z/2"));
        assert_eq!(p.group(3), g("0"));
        // Tor(H_2, H_2) lands in degree 5, past the top degree 4 here
        assert_eq!(p.dim(), 4);
        let a5 = GradedGroups::new(Kind::Homology, vec![g("0"), g("0"), g("Z/2"), g("0")]).unwrap();
        let p = kunneth(&a5, &b).unwrap();
        assert_eq!(p.group(5), g("Z/2"));
    }

    #[test]
    fn kunneth_refuses_extensions() {
        let e = ExtensionDatum::new(g("Z/2"), g("Z/2"));
        let s = sphere(7).with_extension(3, e).unwrap();
        assert_eq!(kunneth(&s, &sphere(2)), Err(Error::UnresolvedExtension));
    }

    #[test]
    fn duality() {
        let mut c = vec![FgAbelian::trivial(); 8];
        c[0] = g("Z");
        c[7] = g("Z");
        c[5] = g("Z^2");
        c[2] = g("Z^2");
        c[4] = g("Z/6");
        let c = GradedGroups::new(Kind::Cohomology, c).unwrap();
        let h = c.poincare_homology().unwrap();
        assert_eq!(h.group(2), g("Z^2"));
        assert_eq!(h.group(3), g("Z/6"));
        assert_eq!(h.poincare_dual().unwrap(), c);

        let e = ExtensionDatum::new(g("Z/5"), g("Z/5"));
        let c = seven_manifold_cohomology(g("Z + Z/2"), DegreeFour::Extension(e));
        let h = c.poincare_homology().unwrap();
        assert_eq!(h.extension().unwrap().0, 3);

        let s7 = sphere(7).as_cohomology().unwrap();
        assert_eq!(s7.poincare_homology().unwrap(), sphere(7));

        let bad = GradedGroups::new(Kind::Cohomology, vec![g("Z"), g("0"), g("0")]).unwrap();
        assert!(matches!(bad.poincare_homology(), Err(Error::NotClosedProfile(_))));
    }

    #[test]
    fn seven_manifold_builder() {
        let c = seven_manifold_cohomology(g("Z + Z/2"), DegreeFour::Known(g("Z/9")));
        assert_eq!(c.group(3), g("Z/2"));
        assert_eq!(c.group(2), g("Z"));
        c.check_closed_profile().unwrap();
        let e = ExtensionDatum::new(g("Z"), g("Z/2"));
        let c = seven_manifold_cohomology(g("Z^2"), DegreeFour::Extension(e));
        assert_eq!(c.group(3), g("Z"));
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn extension_rules() {
        let e = ExtensionDatum::new(g("0"), g("Z/7"));
        assert_eq!(e.resolved, Some(g("Z/7")));
        let e = ExtensionDatum::new(g("Z"), g("0"));
        assert_eq!(e.resolved, Some(g("Z")));
        let e = ExtensionDatum::new(g("Z/2"), g("Z/2"));
        assert!(e.is_open());
        assert_eq!(e.placeholder().order(), int(4));
        assert!(e.clone().resolve(g("Z/4")).is_ok());
        assert!(e.clone().resolve(g("Z/2 + Z/2")).is_ok());
        assert!(e.resolve(g("Z/8")).is_err());
    }

    #[test]
    fn extension_criterion_matches_enumeration() {
        // groups Z^2/⟨(β, 0), (−e, γ)⟩ realise every extension class e
        for beta in 1..=8i64 {
            for gamma in 1..=8i64 {
                let mut realised = std::collections::HashSet::new();
                for e in 0..gamma.max(beta) {
                    let m = IntMatrix::from_i64_rows(&[[beta, 0], [-e, gamma]]).unwrap();
                    realised.insert(from_presentation(&m));
                }
                let (sub, quot) = (FgAbelian::cyclic(int(beta)), FgAbelian::cyclic(int(gamma)));
                for cand in &realised {
                    assert!(admits_extension(cand, &sub, &quot), "{cand} {beta} {gamma}");
                }
                // and nothing else of order βγ with at most two factors
                for d1 in 1..=(beta * gamma) {
                    if (beta * gamma) % (d1 * d1) != 0 {
                        continue;
                    }
                    let d2 = beta * gamma / d1;
                    if d2 % d1 != 0 {
                        continue;
                    }
                    let cand = FgAbelian::new(0, [int(d1), int(d2)]);
                    assert_eq!(admits_extension(&cand, &sub, &quot), realised.contains(&cand));
                }
            }
        }
    }
}
