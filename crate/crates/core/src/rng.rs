//! Deterministic 64-bit generator used everywhere randomness is needed, so
//! that identical seeds reproduce identical runs across machines.
//!
//! The sequence is splitmix64: starting from the seed, each draw advances the
//! state by the constant `0x9E3779B97F4A7C15` and returns
//!
//! ```text
//! z  = state
//! z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//! z ^= z >> 27;  z *= 0x94D049BB133111EB
//! z ^= z >> 31
//! ```
//!
//! Derived draws are specified as:
//! - `below(m)` is `next() % m`;
//! - a random coloring uses the least-significant bit of one draw per item,
//!   item 1 first;
//! - a random k-subset of `[n]` is a partial Fisher-Yates shuffle of
//!   `[1, .., n]` taking positions `0..k`, with `below` supplying indices.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, m: u64) -> u64 {
        debug_assert!(m > 0);
        self.next_u64() % m
    }

    pub fn coloring(&mut self, n: usize) -> crate::set::Coloring {
        let bits: Vec<u8> = (0..n).map(|_| (self.next_u64() & 1) as u8).collect();
        crate::set::Coloring::from_bits(bits).expect("bits are 0/1")
    }

    pub fn k_subset(&mut self, n: usize, k: usize) -> crate::set::IndexSet {
        assert!(k <= n);
        let mut items: Vec<usize> = (1..=n).collect();
        for pos in 0..k {
            let j = pos + self.below((n - pos) as u64) as usize;
            items.swap(pos, j);
        }
        crate::set::IndexSet::new(items[..k].to_vec()).expect("distinct indices")
    }
}
