//! Deterministic random testing of the theorems.

use cayley_klein::theorems::{fuzz_configs, FuzzTarget};

fn main() -> Result<(), cayley_klein::Error> {
    for kind in ["euclidean", "hyperbolic", "elliptic", "hexagon-II", "simplex"] {
        let target = FuzzTarget::parse(kind, 4).map_err(|_| cayley_klein::Error::Internal("known target"))?;
        let report = fuzz_configs(target, 50, 7)?;
        println!("{target}: all passed = {}", report.all_passed());
        println!("{report}");
    }
    Ok(())
}
