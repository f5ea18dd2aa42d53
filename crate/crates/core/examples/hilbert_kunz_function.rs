//! Tables of the Hilbert-Kunz function for several N-sets.

use binoid_hk::hk::hkf_upper_bound;
use binoid_hk::{hkf_table, maximal_ideal, parse_presentation, Binoid, IdealSpec, NSetSpec, Result};

fn main() -> Result<()> {
    let p = parse_presentation("binoid x,y,z | x + y = 2z")?;
    let b = Binoid::new(p.clone())?;
    let m = maximal_ideal(&b)?;
    let i = IdealSpec::from_words(vec![p.parse_word("x + z")?]);
    let sets = [
        ("N", NSetSpec::Whole),
        ("N/(x+z)", NSetSpec::Quotient(i.clone())),
        ("(x+z)", NSetSpec::Ideal(i.clone())),
        ("N ∪ (x+z)", NSetSpec::PointedUnion(vec![NSetSpec::Whole, NSetSpec::Ideal(i)])),
    ];
    let qs: Vec<u64> = (1..=8).collect();
    println!("{:>3} {:>10} {:>10} {:>10} {:>10} {:>10}", "q", sets[0].0, sets[1].0, sets[2].0, sets[3].0, "bound");
    let tables: Vec<_> = sets.iter().map(|(_, t)| hkf_table(&b, &m, t, &qs)).collect();
    for (k, &q) in qs.iter().enumerate() {
        print!("{q:>3}");
        for t in &tables {
            print!(" {:>10}", t[k].as_ref().map_err(Clone::clone)?.count);
        }
        println!(" {:>10}", hkf_upper_bound(&b, &m, 1, q)?);
    }

    // a primary ideal other than the maximal one
    let n = IdealSpec::from_words(vec![p.parse_word("2x")?, p.parse_word("y")?, p.parse_word("z")?]);
    let row: Vec<u128> = hkf_table(&b, &n, &NSetSpec::Whole, &qs)
        .into_iter()
        .map(|s| s.map(|s| s.count))
        .collect::<Result<_>>()?;
    println!("\nhkf with n = (2x, y, z): {row:?}");
    Ok(())
}
