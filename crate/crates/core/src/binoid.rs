use crate::error::Result;
use crate::presentation::{Presentation, Word};
use crate::rewrite::{complete, Element, RewriteSystem, DEFAULT_COMPLETION_BUDGET};

/// Resource caps shared by the computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Critical pairs a single completion may process.
    pub completion_budget: usize,
    /// Elements an explicit enumeration may materialize.
    pub enumeration_cap: usize,
    /// Largest generator count for which subsets are enumerated.
    pub subset_cap: usize,
    /// Multiples tried when looking for nilpotent generators.
    pub reduced_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            completion_budget: DEFAULT_COMPLETION_BUDGET,
            enumeration_cap: 10_000_000,
            subset_cap: 20,
            reduced_cap: 64,
        }
    }
}

/// A presentation together with its completed rewriting system.
#[derive(Clone, Debug)]
pub struct Binoid {
    presentation: Presentation,
    system: RewriteSystem,
    limits: Limits,
}

impl Binoid {
    pub fn new(presentation: Presentation) -> Result<Self> {
        Binoid::with_limits(presentation, Limits::default())
    }

    pub fn with_limits(presentation: Presentation, limits: Limits) -> Result<Self> {
        let system = complete(&presentation, limits.completion_budget)?;
        Ok(Binoid {
            presentation,
            system,
            limits,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    pub fn generator_names(&self) -> &[String] {
        self.presentation.generators()
    }

    pub fn normal_form(&self, w: &Word) -> Element {
        self.system.normal_form(w)
    }

    /// Completed system of `N / ⟨gens⟩`.
    pub fn quotient(&self, gens: &[Word]) -> Result<RewriteSystem> {
        self.system.with_infinity(gens)
    }

    /// The binoid `N / ⟨gens⟩` with its presentation extended accordingly.
    pub fn quotient_binoid(&self, gens: &[Word]) -> Result<Binoid> {
        let presentation = crate::presentation::quotient_by_ideal(&self.presentation, gens)?;
        let system = self.quotient(gens)?;
        Ok(Binoid {
            presentation,
            system,
            limits: self.limits,
        })
    }

    /// Marks the generators that are units: `g` is a unit exactly when
    /// `⟨g⟩ = N`, i.e. when sending `g` to `∞` collapses the binoid.
    pub fn unit_generators(&self) -> Result<Vec<bool>> {
        if self.system.is_collapsed() {
            return Ok(vec![true; self.rank()]);
        }
        (0..self.rank())
            .map(|i| {
                let q = self.quotient(&[Word::unit(self.rank(), i)])?;
                Ok(q.is_collapsed())
            })
            .collect()
    }
}
