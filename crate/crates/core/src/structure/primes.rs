use std::fmt;

use serde::{Deserialize, Serialize};

/// A sorted set of primes: π(n), π(G), π(G:H) and friends.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeSet(Vec<usize>);

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = primes.into_iter().collect();
        assert!(v.iter().all(|&p| is_prime(p)), "non-prime in prime set");
        v.sort_unstable();
        v.dedup();
        PrimeSet(v)
    }

    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Primes dividing `n`.
    pub fn of(n: usize) -> Self {
        PrimeSet(factorize(n).into_iter().map(|(p, _)| p).collect())
    }

    pub fn primes(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.iter().copied().filter(|&p| !other.contains(p)).collect())
    }

    pub fn product(&self) -> usize {
        self.0.iter().product()
    }

    /// The π-part of `n`.
    pub fn part_of(&self, n: usize) -> usize {
        self.0.iter().map(|&p| p_part(n, p)).product()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Debug for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// |n|_p: the highest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_square_free(n: usize) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Is `n` a power p^k (k ≥ 0) of the prime `p`?
pub fn is_power_of(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1, m > 1).
pub fn multiplicative_order(a: usize, m: usize) -> Option<usize> {
    if m < 2 || crate::perm::gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}
