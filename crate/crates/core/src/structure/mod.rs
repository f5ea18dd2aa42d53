//! Difference groups, torsion, toric volumes and the reduction of `e_HK`
//! to them.

mod ehk;
mod lattice;
pub mod snf;
mod volume;

pub use ehk::{
    ehk, ehk_estimate, ehk_of_presentation, ehk_of_smash, integral_ehk, EhkOptions, EhkResult,
    EhkValue, TraceStep, DEFAULT_SCHEDULE,
};
pub use lattice::{
    affine_binoid, affine_binoid_named, difference_group, positive_form, LatticeData, LatticePoint,
};
pub use volume::{cone_facets, polytope_volume, toric_ehk, EXACT_DIMENSION_CAP};

use crate::error::Result;
use crate::presentation::Presentation;

/// The torsion-free quotient `F` of an integral binoid together with the
/// order of the torsion subgroup that was divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionFreefication {
    pub lattice: LatticeData,
    /// Images of the generators in the free part of the difference group.
    pub generators: Vec<Vec<i64>>,
}

impl TorsionFreefication {
    pub fn torsion_order(&self) -> u64 {
        self.lattice.torsion_order()
    }

    /// A presentation of `F` on the images of the nonzero generators, named
    /// after the original generators with a trailing prime.
    pub fn presentation(&self, names: &[String]) -> Result<Presentation> {
        let (points, kept): (Vec<LatticePoint>, Vec<String>) = self
            .generators
            .iter()
            .zip(names)
            .filter(|(g, _)| g.iter().any(|&x| x != 0))
            .map(|(g, n)| (LatticePoint::free(g.clone()), format!("{n}'")))
            .unzip();
        affine_binoid_named(&points, &[], kept)
    }
}

pub fn torsion_freefication(p: &Presentation) -> Result<TorsionFreefication> {
    let lattice = difference_group(p)?;
    let generators = lattice.free.clone();
    Ok(TorsionFreefication {
        lattice,
        generators,
    })
}
