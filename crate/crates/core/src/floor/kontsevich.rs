use num_bigint::BigInt;
use num_traits::{One, Zero};

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of rational plane curves of degree `d` through `3d − 1` points, from
/// the classical quadratic recursion. Independent of floor diagrams.
pub fn kontsevich_oracle(d: u64) -> BigInt {
    assert!(d >= 1, "degree must be positive");
    let mut n = vec![BigInt::zero(), BigInt::one()];
    for e in 2..=d {
        let mut total = BigInt::zero();
        for d1 in 1..e {
            let d2 = e - d1;
            let left = BigInt::from(d2) * binomial(3 * e - 4, 3 * d1 - 2);
            let right = BigInt::from(d1) * binomial(3 * e - 4, 3 * d1 - 1);
            total += &n[d1 as usize] * &n[d2 as usize] * BigInt::from(d1 * d1 * d2) * (left - right);
        }
        n.push(total);
    }
    n.swap_remove(d as usize)
}
