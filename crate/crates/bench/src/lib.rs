//! Benchmark inputs shared by the criterion targets.

use braidsig::BraidWord;

/// `(σ1 σ2⁻¹)^k σ1`, a 3-braid of length `2k + 1`.
pub fn alternating_word(k: usize) -> BraidWord {
    let mut letters: Vec<i32> = std::iter::repeat_n([1, -2], k).flatten().collect();
    letters.push(1);
    BraidWord::new(3, letters).expect("valid 3-braid")
}
