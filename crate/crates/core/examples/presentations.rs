//! Parsing presentations, normal forms and smash products.

use binoid_hk::{parse_presentation, smash, Binoid, Element, Result};

fn main() -> Result<()> {
    let sources = [
        "free 2",
        "group 3",
        "binoid x,y | 3x = 2y",
        "binoid a,b,c | a + c = inf",
        "sr a,b,c ; facet a,b ; facet b,c",
        "affine (2;1) (3;0) mod 2",
        "smash { free 1 } { binoid x,y | 2x = 2y }",
    ];
    for src in sources {
        let p = parse_presentation(src)?;
        println!("{src:<44} => {p}");
    }

    // normal forms come from a completed rewriting system
    let b = Binoid::new(parse_presentation("binoid X,Y,Z | 4X + 12Y = 16Z")?)?;
    let names = b.generator_names();
    let show = |e: &Element| match e {
        Element::Finite(w) => w.display(names).to_string(),
        Element::Infinity => "inf".to_string(),
    };
    println!("\nrules of {}:", b.presentation());
    for rule in b.system().rules() {
        println!("  {} -> {}", rule.lhs.display(names), show(&rule.rhs));
    }
    for text in ["16Z", "4X + 12Y", "8X + 24Y", "5X + 12Y + Z"] {
        let w = b.presentation().parse_word(text)?;
        println!("  NF({text}) = {}", show(&b.normal_form(&w)));
    }

    let s = smash(&parse_presentation("free 1")?, &parse_presentation("binoid x,y | 2x = 3y")?);
    println!("\nsmash product: {s}");
    println!("components: {:?}", s.components());
    Ok(())
}
