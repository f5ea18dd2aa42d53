//! Binomial ideal descriptions for use in a computer algebra system.

use binoid_hk::cli::ring_export;
use binoid_hk::{parse_presentation, Result};

fn main() -> Result<()> {
    for src in ["binoid X,Y,Z | 4X + 12Y = 16Z", "sr a,b,c ; facet a,b ; facet b,c", "group 3"] {
        println!("# {src}\n{}", ring_export(&parse_presentation(src)?));
    }
    Ok(())
}
