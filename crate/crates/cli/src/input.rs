//! The versioned input schema. Field names follow the diagram symbols and
//! unknown fields are rejected.

use cohom_core::catalog::{brieskorn, low_dim, p_family, PType, PVariant};
use cohom_core::families::FamilyDiagram;
use cohom_core::{CircleWithFinite, GradedGroups};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub schema: u32,
    pub diagrams: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
pub enum Entry {
    N7A {
        p_minus: i64,
        q_minus: i64,
        b_minus: i64,
        p_plus: i64,
        q_plus: i64,
        b_plus: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
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
        p_minus: i64,
        q_minus: i64,
        b_minus: i64,
        p_plus: i64,
        q_plus: i64,
        b_plus: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h: Option<i64>,
    },
    N7F {
        p: i64,
        a: i64,
        n: i64,
    },
    N7G {},
    N7H {
        m_minus: i64,
        n_minus: i64,
        m_plus: i64,
        n_plus: i64,
        b_minus: i64,
        b_plus: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h: Option<i64>,
    },
    N7I {},
    #[serde(rename = "brieskorn")]
    Brieskorn { d: i64 },
    /// `type` is one of `A`..`D`; `variant` is `plain` (default) or `Z2`.
    #[serde(rename = "p-family")]
    PFamily {
        #[serde(rename = "type")]
        kind: String,
        r: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        variant: Option<String>,
    },
    /// A product of atoms such as `S3xS2xS2`, or `N6D`.
    #[serde(rename = "catalog")]
    Catalog { name: String },
}

/// What an entry denotes once its fields are interpreted.
pub enum Target {
    Diagram(FamilyDiagram),
    Profile(GradedGroups),
}

fn circle(p: i64, q: i64, b: i64) -> CircleWithFinite {
    CircleWithFinite { p, q, b }
}

impl Entry {
    pub fn family(&self) -> String {
        match serde_json::to_value(self).expect("entries serialize") {
            serde_json::Value::Object(map) => map["family"].as_str().expect("tagged").to_string(),
            _ => unreachable!("entries serialize to objects"),
        }
    }

    /// `key=value` pairs in declaration order, without the tag.
    pub fn label(&self) -> String {
        let serde_json::Value::Object(map) = serde_json::to_value(self).expect("entries serialize") else {
            unreachable!("entries serialize to objects")
        };
        let mut parts = vec![self.family()];
        for (k, v) in map.iter().filter(|(k, _)| k.as_str() != "family") {
            match v {
                serde_json::Value::String(s) => parts.push(format!("{k}={s}")),
                other => parts.push(format!("{k}={other}")),
            }
        }
        parts.join(" ")
    }

    /// Catalog arguments that cannot be interpreted are returned as the
    /// violation text.
    pub fn target(&self) -> Result<Target, String> {
        let profile = |r: cohom_core::Result<GradedGroups>| r.map(Target::Profile).map_err(|e| e.to_string());
        Ok(Target::Diagram(match *self {
            Entry::N7A { p_minus, q_minus, b_minus, p_plus, q_plus, b_plus, h } => FamilyDiagram::N7A {
                minus: circle(p_minus, q_minus, b_minus),
                plus: circle(p_plus, q_plus, b_plus),
                h,
            },
            Entry::N7B { p, q, n_minus, n_plus } => FamilyDiagram::N7B { p, q, n_minus, n_plus },
            Entry::N7C { p, q, n } => FamilyDiagram::N7C { p, q, n },
            Entry::N7D { m, n, mu, nu, p, a } => FamilyDiagram::N7D { m, n, mu, nu, p, a },
            Entry::N7E { m, n, mu, nu, p_minus, q_minus, b_minus, p_plus, q_plus, b_plus, h } => FamilyDiagram::N7E {
                m,
                n,
                mu,
                nu,
                minus: circle(p_minus, q_minus, b_minus),
                plus: circle(p_plus, q_plus, b_plus),
                h,
            },
            Entry::N7F { p, a, n } => FamilyDiagram::N7F { p, a, n },
            Entry::N7G {} => FamilyDiagram::N7G,
            Entry::N7H { m_minus, n_minus, m_plus, n_plus, b_minus, b_plus, h } => FamilyDiagram::N7H {
                m_minus,
                n_minus,
                m_plus,
                n_plus,
                b_minus,
                b_plus,
                h,
            },
            Entry::N7I {} => FamilyDiagram::N7I,
            Entry::Brieskorn { d } => return profile(brieskorn(d)),
            Entry::PFamily { ref kind, r, ref variant } => {
                let kind = match kind.as_str() {
                    "A" => PType::A,
                    "B" => PType::B,
                    "C" => PType::C,
                    "D" => PType::D,
                    other => return Err(format!("unknown P-family type `{other}`")),
                };
                let variant = match variant.as_deref() {
                    None | Some("plain") => PVariant::Plain,
                    Some("Z2") => PVariant::Z2,
                    Some(other) => return Err(format!("unknown P-family variant `{other}`")),
                };
                return profile(p_family(kind, r, variant));
            }
            Entry::Catalog { ref name } => return profile(low_dim(name)),
        }))
    }
}

impl From<&FamilyDiagram> for Entry {
    fn from(d: &FamilyDiagram) -> Self {
        match *d {
            FamilyDiagram::N7A { minus, plus, h } => Entry::N7A {
                p_minus: minus.p,
                q_minus: minus.q,
                b_minus: minus.b,
                p_plus: plus.p,
                q_plus: plus.q,
                b_plus: plus.b,
                h,
            },
            FamilyDiagram::N7B { p, q, n_minus, n_plus } => Entry::N7B { p, q, n_minus, n_plus },
            FamilyDiagram::N7C { p, q, n } => Entry::N7C { p, q, n },
            FamilyDiagram::N7D { m, n, mu, nu, p, a } => Entry::N7D { m, n, mu, nu, p, a },
            FamilyDiagram::N7E { m, n, mu, nu, minus, plus, h } => Entry::N7E {
                m,
                n,
                mu,
                nu,
                p_minus: minus.p,
                q_minus: minus.q,
                b_minus: minus.b,
                p_plus: plus.p,
                q_plus: plus.q,
                b_plus: plus.b,
                h,
            },
            FamilyDiagram::N7F { p, a, n } => Entry::N7F { p, a, n },
            FamilyDiagram::N7G => Entry::N7G {},
            FamilyDiagram::N7H { m_minus, n_minus, m_plus, n_plus, b_minus, b_plus, h } => Entry::N7H {
                m_minus,
                n_minus,
                m_plus,
                n_plus,
                b_minus,
                b_plus,
                h,
            },
            FamilyDiagram::N7I => Entry::N7I {},
        }
    }
}

/// Parse errors carry the line and column of the offending token.
pub fn parse_input(text: &str) -> Result<InputFile, String> {
    let file: InputFile = serde_json::from_str(text).map_err(|e| format!("line {} column {}: {e}", e.line(), e.column()))?;
    if file.schema != SCHEMA {
        return Err(format!("unsupported schema {}, expected {SCHEMA}", file.schema));
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_tag() {
        let text = r#"{"schema": 1, "diagrams": [
            {"family": "N7C", "p": 1, "q": 3, "n": 2},
            {"family": "N7G"},
            {"family": "brieskorn", "d": 7},
            {"family": "p-family", "type": "A", "r": 2, "variant": "Z2"},
            {"family": "catalog", "name": "S3xS2xS2"}
        ]}"#;
        let f = parse_input(text).unwrap();
        assert_eq!(f.diagrams.len(), 5);
        assert_eq!(f.diagrams[0].label(), "N7C p=1 q=3 n=2");
        assert_eq!(f.diagrams[3].label(), "p-family type=A r=2 variant=Z2");
        assert!(f.diagrams.iter().all(|e| e.target().is_ok()));
    }

    #[test]
    fn unknown_fields_are_errors() {
        let err = parse_input(r#"{"schema": 1, "diagrams": [{"family": "N7C", "p": 1, "q": 3, "n": 2, "qq": 1}]}"#)
            .unwrap_err();
        assert!(err.contains("qq"), "{err}");
        assert!(err.starts_with("line 1"), "{err}");
        assert!(parse_input(r#"{"schema": 1, "diagrams": [], "extra": 0}"#).is_err());
        assert!(parse_input(r#"{"schema": 2, "diagrams": []}"#).unwrap_err().contains("schema"));
        assert!(parse_input(r#"{"schema": 1, "diagrams": [{"family": "N7Z"}]}"#).is_err());
    }

    #[test]
    fn bad_catalog_arguments_are_violations() {
        let e = Entry::PFamily { kind: "E".into(), r: 1, variant: None };
        assert!(e.target().is_err());
        assert!(Entry::Brieskorn { d: 0 }.target().is_err());
    }
}
