//! Small exact integer helpers: primality, factorization, divisors, the
//! Möbius and Euler phi functions, and a segmented prime sieve.
//!
//! Everything here is deterministic; sizes are desk scale (inputs fit u64,
//! factorization by trial division).

/// Deterministic primality by trial division. Fine for the magnitudes the
/// crate deals with (moduli and experiment primes up to a few million).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // wheel over 6k ± 1
    let mut d = 7u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 4) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e))
        }
    };
    for p in [2u64, 3] {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        for p in [d, d + 2] {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            push(p, e);
        }
        d += 6;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    debug_assert!(n >= 1);
    let fac = factorize(n);
    if fac.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if fac.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Unbounded prime stream backed by a segmented sieve of Eratosthenes.
pub struct PrimeStream {
    found: Vec<u64>, // all primes below `next_lo`, in order
    next_idx: usize,
    next_lo: u64,
    segment_size: u64,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream {
            found: Vec::new(),
            next_idx: 0,
            next_lo: 2,
            segment_size: 1 << 16,
        }
    }

    fn grow(&mut self) {
        let lo = self.next_lo;
        let hi = lo + self.segment_size;
        // sieving primes up to sqrt(hi); tiny range, trial division is fine
        let root = (hi as f64).sqrt() as u64 + 2;
        let small: Vec<u64> = (2..=root).filter(|&n| is_prime(n)).collect();
        let mut composite = vec![false; (hi - lo) as usize];
        for &p in &small {
            let mut m = lo.div_ceil(p) * p;
            if m < p * p {
                m = p * p;
            }
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in composite.iter().enumerate() {
            if !c {
                self.found.push(lo + i as u64);
            }
        }
        self.next_lo = hi;
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next_idx >= self.found.len() {
            self.grow();
        }
        let p = self.found[self.next_idx];
        self.next_idx += 1;
        Some(p)
    }
}
