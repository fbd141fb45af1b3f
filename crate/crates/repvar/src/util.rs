//! Small shared helpers.

/// SplitMix64: a tiny deterministic generator for randomized property
/// checks. Not cryptographic; chosen so tests and examples reproduce
/// exactly without an external dependency.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Small signed integer in -range..=range.
    pub fn small_int(&mut self, range: i64) -> i64 {
        (self.below((2 * range + 1) as u64) as i64) - range
    }
}

/// A random element of SL_n with small integer entries, built as a
/// product of elementary shears (so the determinant is 1 exactly).
pub fn random_sl(n: usize, rng: &mut SplitMix64) -> crate::linalg::Matrix {
    use crate::linalg::Matrix;
    use crate::numbers::CyclotomicNumber;
    assert!(n >= 1);
    let mut m = Matrix::identity(n);
    if n == 1 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64) as usize;
        if i == j {
            j = (j + 1) % n;
        }
        let mut shear = Matrix::identity(n);
        shear[(i, j)] = CyclotomicNumber::int(rng.small_int(2));
        m = &m * &shear;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..5 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn core_types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::numbers::Rational>();
        assert_send_sync::<crate::numbers::CyclotomicNumber>();
        assert_send_sync::<crate::numbers::LaurentPoly>();
        assert_send_sync::<crate::words::Word>();
        assert_send_sync::<crate::words::Presentation>();
        assert_send_sync::<crate::words::GroupRingElement>();
        assert_send_sync::<crate::linalg::Matrix>();
        assert_send_sync::<crate::linalg::LaurentMatrix>();
        assert_send_sync::<crate::reps::Representation>();
    }

    #[test]
    fn random_sl_has_unit_determinant() {
        let mut rng = SplitMix64::new(9);
        for n in 1..=4 {
            for _ in 0..5 {
                let m = random_sl(n, &mut rng);
                assert!(m.det().is_one());
            }
        }
    }
}
