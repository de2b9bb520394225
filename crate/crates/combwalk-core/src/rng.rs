//! Self-contained pseudo-random number generation for the simulators.
//!
//! Reproducibility across thread counts requires that every walk own an
//! independent, deterministically derived stream. Walk `i` of a run with
//! master seed `s` uses xoshiro256++ state filled by SplitMix64 from
//! `s XOR (i * golden gamma)`, so results never depend on scheduling.
//! Both algorithms follow the published reference implementations
//! (Vigna; Steele, Lea, Flood).

/// SplitMix64 stream. Used for seeding and stream splitting, not for
/// bulk sampling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// xoshiro256++ bulk generator.
#[derive(Debug, Clone)]
pub struct Xoshiro256pp {
    s: [u64; 4],
}

impl Xoshiro256pp {
    /// Expand a 64-bit seed into full state via SplitMix64, as the
    /// reference implementation recommends.
    pub fn from_seed(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        let mut s = [0u64; 4];
        for word in &mut s {
            *word = sm.next_u64();
        }
        if s == [0, 0, 0, 0] {
            s[0] = GOLDEN_GAMMA;
        }
        Self { s }
    }

    /// Stream for one walk: hash the master seed and the walk index
    /// together so streams are independent of chunking and scheduling.
    pub fn for_walk(seed: u64, walk_index: u64) -> Self {
        Self::from_seed(seed ^ walk_index.wrapping_mul(GOLDEN_GAMMA))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[0]
            .wrapping_add(self.s[3])
            .rotate_left(23)
            .wrapping_add(self.s[0]);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform in [0, 1) with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    /// Standard normal draw by the Marsaglia polar method.
    pub fn next_gaussian(&mut self) -> f64 {
        loop {
            let u = 2.0 * self.next_f64() - 1.0;
            let v = 2.0 * self.next_f64() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                return u * (-2.0 * s.ln() / s).sqrt();
            }
        }
    }
}

/// Derive an independent sub-seed for one named run of a multi-run
/// protocol, so different runs never share walk streams.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut sm = SplitMix64::new(seed ^ salt.wrapping_mul(GOLDEN_GAMMA).rotate_left(17));
    sm.next_u64()
}

/// Buffered random bits, two per axis step at most. Keeps the hot walk
/// loop down to shifts and an occasional refill.
#[derive(Debug, Clone)]
pub struct BitSource {
    rng: Xoshiro256pp,
    buf: u64,
    left: u32,
}

impl BitSource {
    pub fn new(rng: Xoshiro256pp) -> Self {
        Self {
            rng,
            buf: 0,
            left: 0,
        }
    }

    #[inline]
    pub fn take(&mut self, bits: u32) -> u64 {
        debug_assert!(bits <= 2);
        if self.left < bits {
            self.buf = self.rng.next_u64();
            self.left = 64;
        }
        let out = self.buf & ((1 << bits) - 1);
        self.buf >>= bits;
        self.left -= bits;
        out
    }
}
