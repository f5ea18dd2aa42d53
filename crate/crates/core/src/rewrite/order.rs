use std::cmp::Ordering;

use crate::presentation::Word;

/// Weighted degree followed by reverse lexicographic comparison.
///
/// With unit weights this is the fixed admissible order used throughout the
/// crate: total degree first, then the word with the smaller exponent at the
/// last differing generator index is the larger one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TermOrder {
    weights: Option<Vec<u64>>,
}

impl TermOrder {
    pub fn graded_reverse_lex() -> Self {
        TermOrder { weights: None }
    }

    /// Weights must be positive for the order to be well-founded.
    pub fn weighted(weights: Vec<u64>) -> Self {
        debug_assert!(weights.iter().all(|&w| w > 0));
        TermOrder {
            weights: Some(weights),
        }
    }

    pub fn degree(&self, w: &Word) -> u64 {
        match &self.weights {
            None => w.degree(),
            Some(ws) => w.iter().zip(ws).map(|(&e, &k)| e as u64 * k).sum(),
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_then_reverse_lex() {
        let o = TermOrder::graded_reverse_lex();
        let w = |v: &[u32]| Word::from_slice(v);
        assert_eq!(o.cmp(&w(&[0, 0, 2]), &w(&[1, 0, 0])), Ordering::Greater);
        // equal degree: smaller last exponent wins
        assert_eq!(o.cmp(&w(&[3, 0]), &w(&[0, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&w(&[4, 12, 0]), &w(&[0, 0, 16])), Ordering::Greater);
        assert_eq!(o.cmp(&w(&[1, 1]), &w(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn weights_change_the_degree() {
        let o = TermOrder::weighted(vec![2, 3]);
        assert_eq!(o.degree(&Word::from_slice(&[3, 0])), 6);
        assert_eq!(
            o.cmp(&Word::from_slice(&[3, 0]), &Word::from_slice(&[0, 2])),
            Ordering::Greater
        );
    }
}
