use cohom_core::abgroup::FgAbelian;
use cohom_core::catalog::product_profile;
use cohom_core::families::{homology, FamilyDiagram};
use cohom_core::intlin::int;
use cohom_core::{classify_theorem_type, CircleWithFinite, Error, FamilyResult, Shape};

fn c(p: i64, q: i64, b: i64) -> CircleWithFinite {
    CircleWithFinite { p, q, b }
}

fn g(s: &str) -> FgAbelian {
    s.parse().unwrap()
}

fn run(d: FamilyDiagram) -> FamilyResult {
    homology(&d).unwrap_or_else(|e| panic!("{d:?}: {e}"))
}

fn degrees(r: &FamilyResult) -> Vec<String> {
    r.cohomology.groups().iter().map(ToString::to_string).collect()
}

fn n7a(minus: CircleWithFinite, plus: CircleWithFinite) -> FamilyDiagram {
    FamilyDiagram::N7A { minus, plus, h: None }
}

fn n7e(m: i64, n: i64, mu: i64, nu: i64, minus: CircleWithFinite, plus: CircleWithFinite) -> FamilyDiagram {
    FamilyDiagram::N7E { m, n, mu, nu, minus, plus, h: None }
}

fn profile(names: &[&str]) -> Vec<String> {
    let p = product_profile(names).unwrap().as_cohomology().unwrap();
    p.groups().iter().map(ToString::to_string).collect()
}

#[test]
fn n7a_equal_circles_is_s3_s2_s2() {
    let r = run(n7a(c(1, 1, 1), c(-1, -1, 1)));
    assert_eq!(degrees(&r), ["Z", "0", "Z^2", "Z", "Z", "Z^2", "0", "Z"]);
    assert_eq!(degrees(&r), profile(&["S3", "S2", "S2"]));
}

#[test]
fn n7a_reflected_circles_have_infinite_h4() {
    let r = run(n7a(c(1, 1, 1), c(1, -1, 1)));
    assert_eq!(r.invariants.beta, Some(int(0)));
    assert_eq!(r.invariants.gamma, Some(int(2)));
    let (degree, e) = r.cohomology.extension().unwrap();
    assert_eq!(degree, 4);
    assert!(e.is_open());
    assert_eq!((e.sub.clone(), e.quot.clone()), (g("Z"), g("Z/2")));
}

#[test]
fn n7b_examples() {
    let r = run(FamilyDiagram::N7B { p: 1, q: 5, n_minus: 4, n_plus: 1 });
    assert_eq!(r.cohomology.group(5), g("Z + Z/2"));
    let (_, e) = r.cohomology.extension().unwrap();
    assert_eq!(e.to_string(), "0 -> Z/5 -> H -> Z/5 -> 0");
    assert!(e.is_open());
    let r = run(FamilyDiagram::N7B { p: 1, q: 4, n_minus: 4, n_plus: 2 });
    assert_eq!(r.cohomology.group(5), g("Z"));
    assert_eq!(r.cohomology.extension().unwrap().1.sub, g("Z/2"));
    let r = run(FamilyDiagram::N7B { p: 1, q: 3, n_minus: 4, n_plus: 2 });
    assert_eq!(r.cohomology.group(5), g("Z"));
    assert_eq!(r.cohomology.extension().unwrap().1.quot, g("Z/3"));
    let zero = homology(&FamilyDiagram::N7B { p: 1, q: 0, n_minus: 4, n_plus: 2 });
    assert_eq!(zero.unwrap_err(), Error::ProductAction);
}

#[test]
fn n7c_examples() {
    for (q, h4) in [(3, "Z/9"), (1, "0"), (-2, "Z/4")] {
        let r = run(FamilyDiagram::N7C { p: 1, q, n: 1 });
        assert_eq!(r.cohomology.group(4), g(h4), "q = {q}");
        assert_eq!(r.cohomology.group(5), g("Z"));
        assert!(r.cohomology.extension().is_none());
    }
    assert_eq!(homology(&FamilyDiagram::N7C { p: 1, q: 0, n: 1 }).unwrap_err(), Error::ProductAction);
}

#[test]
fn product_families() {
    let d = run(FamilyDiagram::N7D { m: 1, n: 0, mu: 0, nu: 1, p: 2, a: 3 });
    assert_eq!(degrees(&d), profile(&["S3", "S2", "S2"]));
    assert_eq!(degrees(&run(FamilyDiagram::N7F { p: 1, a: 1, n: 2 })), profile(&["S5", "S2"]));
    let cp2 = run(FamilyDiagram::N7G);
    assert_eq!(degrees(&cp2), ["Z", "0", "Z", "Z", "Z", "Z", "0", "Z"]);
    let s4 = run(FamilyDiagram::N7I);
    assert_eq!(degrees(&s4), ["Z", "0", "0", "Z", "Z", "0", "0", "Z"]);
}

#[test]
fn n7e_degenerate_branches() {
    let r = run(n7e(1, 1, 0, 1, c(1, 0, 1), c(1, 1, 1)));
    assert_eq!(r.invariants.beta, Some(int(0)));
    assert_eq!(r.cohomology.group(4).rank(), 1);
    let r = run(n7e(0, 1, -1, 0, c(1, 1, 1), c(-1, 1, 1)));
    assert_eq!(r.invariants.beta, Some(int(0)));
}

#[test]
fn n7h_examples() {
    let h = |m_minus, n_minus, m_plus, n_plus, b_minus, b_plus| FamilyDiagram::N7H {
        m_minus,
        n_minus,
        m_plus,
        n_plus,
        b_minus,
        b_plus,
        h: None,
    };
    assert_eq!(run(h(1, 2, 1, 3, 1, 1)).cohomology.group(4), g("Z/6"));
    let flat = run(h(1, 0, 1, 1, 1, 1));
    assert_eq!(flat.cohomology.group(4), g("Z"));
    assert_eq!(degrees(&flat), profile(&["CP2", "S3"]));
    // the full 2-torsion: h = 4, a± = 2
    let doubled = run(h(0, 1, 1, 1, 2, 2));
    assert_eq!(doubled.invariants.h, Some(int(4)));
    assert_eq!(doubled.cohomology.group(4), g("Z/4"));
    assert!(matches!(homology(&h(1, 0, -1, 0, 1, 1)), Err(Error::InvalidDiagram(_))));
}

#[test]
fn invalid_diagrams_are_rejected() {
    let bad = n7a(c(2, 2, 1), c(0, 1, 1));
    match homology(&bad) {
        Err(Error::InvalidDiagram(v)) => assert_eq!(v.len(), 1),
        other => panic!("{other:?}"),
    }
}

/// Values frozen from the oracle; see the fixture header for the command.
#[test]
fn frozen_oracle_fixtures() {
    let text = include_str!("fixtures/oracle_values.txt");
    let mut seen = 0;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let mut fields = line.split_whitespace();
        let family = fields.next().unwrap();
        let kv: std::collections::HashMap<&str, &str> =
            fields.map(|f| f.split_once('=').unwrap()).collect();
        let circle = |k: &str| {
            let v: Vec<i64> = kv[k].split(',').map(|x| x.parse().unwrap()).collect();
            c(v[0], v[1], v[2])
        };
        let num = |k: &str| kv[k].parse::<i64>().unwrap();
        let r = match family {
            "N7A" => run(n7a(circle("minus"), circle("plus"))),
            "N7E" => run(n7e(num("m"), num("n"), num("mu"), num("nu"), circle("minus"), circle("plus"))),
            "I4" => {
                let order = cohom_core::oracle::im_i4_order(&int(num("m1")), &int(num("m2")), &int(num("delta")));
                assert_eq!(order.unwrap(), int(num("order")));
                seen += 1;
                continue;
            }
            other => panic!("unknown fixture family {other}"),
        };
        assert_eq!(r.invariants.beta, Some(int(num("beta"))), "{line}");
        assert_eq!(r.invariants.gamma, Some(int(num("gamma"))), "{line}");
        assert_eq!(r.invariants.h4_order, Some(int(num("h4"))), "{line}");
        seen += 1;
    }
    assert_eq!(seen, 7);
}

#[test]
fn classifier_examples() {
    let c3 = run(FamilyDiagram::N7C { p: 1, q: 3, n: 2 });
    let k = classify_theorem_type(&c3.cohomology);
    assert!(k.succeeded());
    match k.shape {
        Shape::Type2 { alpha, presentation } => {
            assert_eq!(alpha, int(1));
            assert_eq!((presentation.beta, presentation.gamma), (int(1), int(9)));
        }
        other => panic!("{other:?}"),
    }
    let b = run(FamilyDiagram::N7B { p: 1, q: 5, n_minus: 4, n_plus: 1 });
    let k = classify_theorem_type(&b.cohomology);
    assert!(k.succeeded());
    assert_eq!(k.shape.to_string(), "type 2, alpha=2, beta=5, gamma=5 (open extension)");
}
