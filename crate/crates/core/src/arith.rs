//! Small integer helpers shared by contexts and constructions.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Least prime strictly greater than `n`, searching no further than `limit`.
pub fn next_prime_above(n: u64, limit: u64) -> Option<u64> {
    (n + 1..=limit).find(|&k| is_prime(k))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `sum_{j=0}^{q} C(m, j)`, the size of a Hamming ball of radius `q` in `{0,1}^m`.
pub fn ball_size(m: u64, q: i64) -> u64 {
    if q < 0 {
        return 0;
    }
    (0..=(q as u64).min(m)).map(|j| binomial(m, j)).sum()
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Smallest `m >= 0` with `m >= (num/den) * sqrt(n)`.
pub fn ceil_scaled_sqrt(num: u64, den: u64, n: u64) -> u64 {
    let rhs = (num as u128) * (num as u128) * (n as u128);
    let d2 = (den as u128) * (den as u128);
    let mut m = ((num as f64 / den as f64) * (n as f64).sqrt()).ceil().max(0.0) as u128;
    while m > 0 && (m - 1) * (m - 1) * d2 >= rhs {
        m -= 1;
    }
    while m * m * d2 < rhs {
        m += 1;
    }
    m as u64
}

/// Largest `m >= 0` with `m <= (num/den) * sqrt(n)`.
pub fn floor_scaled_sqrt(num: u64, den: u64, n: u64) -> u64 {
    let rhs = (num as u128) * (num as u128) * (n as u128);
    let d2 = (den as u128) * (den as u128);
    let mut m = ((num as f64 / den as f64) * (n as f64).sqrt()).floor().max(0.0) as u128;
    while m > 0 && m * m * d2 > rhs {
        m -= 1;
    }
    while (m + 1) * (m + 1) * d2 <= rhs {
        m += 1;
    }
    m as u64
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
