//! Checks of the counting identity and of smash multiplicativity.

use binoid_hk::{
    frobenius_sum, maximal_ideal, parse_presentation, verify_counting_identity, verify_smash_multiplicativity, Binoid,
    IdealSpec, Result,
};

fn main() -> Result<()> {
    // #N/J + #(I∩J)/(I+J) = #I/(I+J) + #N/(I∪J)
    for (src, i) in [("free 2", "x"), ("binoid x,y,z | x + y = 2z", "x + z"), ("binoid x,y | 3x = 2y", "2x")] {
        let p = parse_presentation(src)?;
        let b = Binoid::new(p.clone())?;
        let m = maximal_ideal(&b)?;
        let i = IdealSpec::from_words(vec![p.parse_word(i)?]);
        for q in 1..=3 {
            let c = verify_counting_identity(&b, &i, &frobenius_sum(&m, q)?)?;
            println!(
                "{src}, q = {q}: {} + {} = {} + {}  {}",
                c.n_mod_j,
                c.intersection_mod_sum,
                c.i_mod_sum,
                c.n_mod_union,
                if c.holds() { "ok" } else { "FAILS" }
            );
        }
    }

    let a = parse_presentation("binoid x,y | 2x = 3y")?;
    let b = parse_presentation("sr a,b,c ; facet a,b ; facet c")?;
    for q in [2, 3, 5, 8] {
        let c = verify_smash_multiplicativity(&a, &b, q)?;
        println!("q = {q}: {} · {} = {}  {}", c.left, c.right, c.smash, if c.holds() { "ok" } else { "FAILS" });
    }
    Ok(())
}
