//! Segmented sieve of Eratosthenes over odd numbers.

const SEGMENT: u64 = 1 << 18;

/// All primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    PrimeSieve::new(2, n).collect()
}

/// Iterator over the primes in `[lo, hi]`, produced one segment at a time.
pub struct PrimeSieve {
    base: Vec<u64>,
    next_lo: u64,
    hi: u64,
    buf: Vec<u64>,
    pos: usize,
}

impl PrimeSieve {
    pub fn new(lo: u64, hi: u64) -> Self {
        let root = hi.isqrt();
        PrimeSieve {
            base: small_primes(root),
            next_lo: lo.max(2),
            hi,
            buf: Vec::new(),
            pos: 0,
        }
    }

    fn fill(&mut self) -> bool {
        while self.pos >= self.buf.len() {
            if self.next_lo > self.hi {
                return false;
            }
            let lo = self.next_lo;
            let hi = self.hi.min(lo.saturating_add(SEGMENT - 1));
            match hi.checked_add(1) {
                Some(next) => self.next_lo = next,
                None => self.hi = 0,
            }
            self.buf = sieve_segment(&self.base, lo, hi);
            self.pos = 0;
        }
        true
    }
}

impl Iterator for PrimeSieve {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.fill() {
            return None;
        }
        let p = self.buf[self.pos];
        self.pos += 1;
        Some(p)
    }
}

fn small_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn sieve_segment(base: &[u64], lo: u64, hi: u64) -> Vec<u64> {
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p > hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut j = start;
        while j <= hi {
            composite[(j - lo) as usize] = true;
            j += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|&(i, &c)| !c && lo + i as u64 >= 2)
        .map(|(i, _)| lo + i as u64)
        .collect()
}
