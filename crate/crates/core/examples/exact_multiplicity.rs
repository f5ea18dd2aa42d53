//! Exact Hilbert-Kunz multiplicities with their derivation traces.

use binoid_hk::{ehk_of_presentation, parse_presentation, EhkOptions, Result};

fn main() -> Result<()> {
    for src in [
        "free 3",
        "sr a,b,c,d ; facet a,b ; facet b,c ; facet c,d ; facet a,d",
        "binoid x,y | 3x = 3y",
        "affine (2;1) (3;0) mod 2",
        "binoid X,Y,Z | 4X + 12Y = 16Z",
        "binoid x,y,z | x + y = 2z",
        "binoid a,b,c,d | a + d = b + c",
        "smash { binoid x,y | 2x = 2y } { sr a,b,c ; facet a,b ; facet c }",
    ] {
        let r = ehk_of_presentation(&parse_presentation(src)?, &EhkOptions::default())?;
        println!("{src}\n  e_HK = {}  (dimension {})", r.value, r.dimension);
        for step in &r.trace {
            println!("    {}", serde_json::to_string(step).expect("trace serializes"));
        }
    }
    Ok(())
}
