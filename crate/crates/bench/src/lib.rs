//! Shared inputs for the benchmarks.

use cohom_core::families::{Family, FamilyDiagram};
use cohom_core::intlin::IntMatrix;
use cohom_core::sweep::{valid_diagrams, Bounds};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `count` seeded `n × n` matrices with entries in `[−20, 20]`.
pub fn matrices(n: usize, count: usize) -> Vec<IntMatrix> {
    let mut rng = StdRng::seed_from_u64(n as u64);
    (0..count)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect();
            IntMatrix::from_i64_rows(&rows).expect("nonempty")
        })
        .collect()
}

/// The first `count` valid diagrams of the default sweep box.
pub fn diagrams(family: Family, count: usize) -> Vec<FamilyDiagram> {
    let mut ds = valid_diagrams(family, &Bounds::default());
    ds.truncate(count);
    ds
}
