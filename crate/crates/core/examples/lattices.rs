//! Difference groups, torsion-freefication and toric volumes.

use binoid_hk::structure::snf::smith_normal_form;
use binoid_hk::{
    affine_binoid, difference_group, parse_presentation, toric_ehk, torsion_freefication, LatticePoint, Result,
};

fn main() -> Result<()> {
    let smith = smith_normal_form(&[vec![4, 12, -16]], 3);
    println!("Smith form of (4 12 -16): {:?}", smith.diagonal);

    let p = parse_presentation("binoid X,Y,Z | 4X + 12Y = 16Z")?;
    let lattice = difference_group(&p)?;
    println!("diff group: Z^{} x torsion {:?}", lattice.rank, lattice.torsion_invariants);
    for (name, w) in p.generators().iter().zip(0..) {
        let mut e = vec![0; p.rank()];
        e[w] = 1;
        println!("  {name} -> {:?}", lattice.embed(&binoid_hk::Word(e)));
    }
    let tf = torsion_freefication(&p)?;
    println!("torsion-free part: {}", tf.presentation(p.generators())?);
    println!("  torsion order {}, lattice generators {:?}", tf.torsion_order(), tf.generators);

    // the affine binoid of ℕ-points in ℤ × ℤ/2
    let points = [LatticePoint { free: vec![2], torsion: vec![1] }, LatticePoint { free: vec![3], torsion: vec![0] }];
    println!("\naffine binoid: {}", affine_binoid(&points, &[2])?);

    // toric volumes for cones generated by lattice vectors, with n = N_+
    let gens = |v: &[[i64; 2]]| v.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
    for (label, g) in [
        ("numerical ⟨2,3⟩", vec![vec![2], vec![3]]),
        ("quadric cone", gens(&[[2, 0], [1, 1], [0, 2]])),
        ("⟨(1,0), (1,3), (0,4)⟩", gens(&[[1, 0], [1, 3], [0, 4]])),
    ] {
        println!("toric e_HK of {label}: {}", toric_ehk(&g, &g)?);
    }
    Ok(())
}
