//! Small integer arithmetic helpers.

pub fn is_prime(n: u64) -> bool {
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

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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

/// Least k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1 and m >= 2.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
        assert!(k <= m, "{a} is not a unit mod {m}");
    }
    k
}

/// Exponent of p in n, and the p-part p^e.
pub fn p_part(n: u64, p: u64) -> (u32, u64) {
    let mut e = 0;
    let mut part = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
        part *= p;
    }
    (e, part)
}

/// Some prime p with n = p^k for k >= 1.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(factorize(80), vec![(2, 4), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(p_part(80, 2), (4, 16));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
    }

    #[test]
    fn orders_mod_p() {
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(multiplicative_order(3, 2), 1);
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(7, 3), 1);
    }
}
