//! Prints the oracle values frozen in `tests/fixtures/oracle_values.txt`.
//!
//! `cargo run -p cohom-core --example freeze_fixtures > crates/core/tests/fixtures/oracle_values.txt`

use cohom_core::families::{n7a, n7e, validate, FamilyDiagram, Options};
use cohom_core::oracle::{enum_lens_order, im_i4_order, n7a_h4_order, n7e_h4_order};
use cohom_core::CircleWithFinite;
use num_integer::Integer;

fn c(p: i64, q: i64, b: i64) -> CircleWithFinite {
    CircleWithFinite { p, q, b }
}

fn show(x: &CircleWithFinite) -> String {
    format!("{},{},{}", x.p, x.q, x.b)
}

fn main() {
    println!("# oracle values; regenerate with");
    println!("# cargo run -p cohom-core --example freeze_fixtures > crates/core/tests/fixtures/oracle_values.txt");
    let opts = Options::default();
    for (minus, plus) in [(c(1, 0, 1), c(0, 1, 1)), (c(1, 2, 1), c(1, -1, 2)), (c(2, 1, 3), c(1, 1, 2))] {
        assert_eq!(validate(&FamilyDiagram::N7A { minus, plus, h: None }), Vec::<String>::new());
        let (rho, v) = n7a::vectors(&minus, &plus, &opts).expect("valid fixture");
        let h4 = n7a_h4_order(&minus, &plus, &v, &rho.delta()).expect("oracle");
        let gamma = enum_lens_order(&minus, &plus).expect("distinct");
        let (beta, rem) = h4.div_rem(&gamma.into());
        assert!(rem == 0.into());
        println!("N7A minus={} plus={} h4={h4} gamma={gamma} beta={beta}", show(&minus), show(&plus));
    }
    for ((m, n, mu, nu), minus, plus) in [
        ((1, 1, 0, 1), c(1, 1, 1), c(-1, 1, 1)),
        ((2, 1, 1, 1), c(1, 1, 1), c(-1, 2, 1)),
        ((1, 2, 0, 1), c(1, 3, 2), c(2, 1, 1)),
    ] {
        let d = FamilyDiagram::N7E { m, n, mu, nu, minus, plus, h: None };
        assert_eq!(validate(&d), Vec::<String>::new());
        let (rho, v) = n7e::vectors(m, n, mu, nu, &minus, &plus, &opts).expect("valid fixture");
        let h4 = n7e_h4_order(&minus, &plus, &v, &rho.A.gcd(&rho.D)).expect("oracle");
        let gamma = enum_lens_order(&minus, &plus).expect("distinct");
        let (beta, rem) = h4.div_rem(&gamma.into());
        assert!(rem == 0.into());
        println!(
            "N7E m={m} n={n} mu={mu} nu={nu} minus={} plus={} h4={h4} gamma={gamma} beta={beta}",
            show(&minus),
            show(&plus)
        );
    }
    let i4 = im_i4_order(&4.into(), &6.into(), &2.into()).expect("δ = gcd");
    println!("I4 m1=4 m2=6 delta=2 order={i4}");
}
