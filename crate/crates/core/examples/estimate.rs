//! Numerical estimates against exact values, and inputs only estimates reach.

use binoid_hk::structure::DEFAULT_SCHEDULE;
use binoid_hk::{ehk_estimate, ehk_of_presentation, maximal_ideal, parse_presentation, Binoid, EhkOptions, Result};

fn main() -> Result<()> {
    println!("schedule {DEFAULT_SCHEDULE:?}");
    for src in [
        "binoid X,Y,Z | 4X + 12Y = 16Z",
        "binoid x,y,z | x + y = 2z",
        "sr a,b,c ; facet a,b ; facet b,c",
        // not reduced, so there is no exact value
        "binoid x,y | 2y = inf",
        "binoid x,y,z | 2x = inf; y + z = 2x",
    ] {
        let p = parse_presentation(src)?;
        let b = Binoid::new(p.clone())?;
        let m = maximal_ideal(&b)?;
        let est = ehk_estimate(&b, &m, &DEFAULT_SCHEDULE)?;
        let exact = match ehk_of_presentation(&p, &EhkOptions::default()) {
            Ok(r) => r.value.to_string(),
            Err(e) => format!("none ({e})"),
        };
        println!("{src}\n  estimate {}  exact {exact}", est.value);
    }
    Ok(())
}
