//! Prime ideals, dimension, reducedness and units.

use binoid_hk::spectrum::prime_names;
use binoid_hk::{is_reduced, parse_presentation, spectrum, unit_group_order, Binoid, Result};

fn main() -> Result<()> {
    for src in [
        "sr a,b,c,d ; facet a,b,c ; facet c,d",
        "binoid x,y,z | 2x = 2y; x + z = inf",
        "binoid x,y | 2y = inf",
        "binoid u,x | u + x = x; 3u = 0",
    ] {
        let b = Binoid::new(parse_presentation(src)?)?;
        let report = spectrum(&b)?;
        println!("{src}");
        println!("  dimension {}", report.dimension);
        for (p, height) in report.primes.iter().zip(&report.quotient_dimensions) {
            println!("  prime {:?}  dim N/p = {height}", prime_names(&b, p));
        }
        let minimal: Vec<_> = report.minimal_primes.iter().map(|p| prime_names(&b, p)).collect();
        println!("  minimal primes {minimal:?}");
        println!("  reduced: {:?}", is_reduced(&b, b.limits().reduced_cap)?);
        println!("  unit group order: {:?}\n", unit_group_order(&b, 10_000)?);
    }
    Ok(())
}
