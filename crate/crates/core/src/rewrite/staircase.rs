//! Counting the complement of a monomial ideal in `ℕⁿ`.
//!
//! Irreducible words of a complete rewriting system are exactly the words
//! not divisible by any left-hand side, so element counts of finite residue
//! binoids reduce to this count.

use crate::presentation::Word;

/// Number of words in `ℕⁿ` divisible by none of `gens`, or `None` when
/// infinitely many are.
pub fn count_standard_words(n: usize, gens: &[Word]) -> Option<u128> {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(Word::is_zero) {
        return Some(0);
    }
    for i in 0..n {
        let has_power = gens
            .iter()
            .any(|g| g.support().all(|j| j == i) && g[i] > 0);
        if !has_power {
            return None;
        }
    }
    Some(count_rec(n, gens))
}

fn minimalize(mut gens: Vec<Word>) -> Vec<Word> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut out: Vec<Word> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

// Slices along the last variable; the slice ideal only changes at the
// distinct last exponents of the generators.
fn count_rec(n: usize, gens: Vec<Word>) -> u128 {
    if gens.iter().any(|g| g.iter().take(n).all(|&e| e == 0)) {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return gens.iter().map(|g| g[0]).min().expect("pure power") as u128;
    }
    let last = n - 1;
    let mut breaks: Vec<u32> = gens.iter().map(|g| g[last]).collect();
    breaks.sort_unstable();
    breaks.dedup();
    let mut total = 0u128;
    for (k, &b) in breaks.iter().enumerate() {
        let slice: Vec<Word> = gens
            .iter()
            .filter(|g| g[last] <= b)
            .map(|g| Word(g[..last].to_vec()))
            .collect();
        let slice = minimalize(slice);
        let inner = count_rec(last, slice);
        if inner == 0 {
            break;
        }
        let width = breaks[k + 1..].first().map(|&nb| (nb - b) as u128);
        match width {
            Some(w) => total += inner * w,
            // finiteness guarantees a pure power closes the last slice
            None => unreachable!("unbounded slice in a finite staircase"),
        }
    }
    total
}
