//! Reference values computed without any of the linear algebra in `eigenmonad`:
//! closed-form rank formulas, the Witt necklace formula and plain enumeration.

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r
}

/// Multiset coefficient `(a+k-1)! / (k! (a-1)!)`, with the `a = 0` convention `[k = 0]`.
pub fn multichoose(a: u64, k: u64) -> u128 {
    if a == 0 {
        return u128::from(k == 0);
    }
    binomial(a + k - 1, k)
}

/// Rank of the degree-`d` Passi quotient for free groups: `Σ_k n^k (m+k-1)!/(k!(m-1)!)`.
pub fn passi_rank_gr(n: u64, m: u64, d: u64) -> u128 {
    (0..=d).map(|k| graded_rank_gr(n, m, k)).sum()
}

/// Rank of the degree-`d` Passi quotient for free abelian groups: `Σ_k (nm+k-1)!/(k!(nm-1)!)`.
pub fn passi_rank_fr(n: u64, m: u64, d: u64) -> u128 {
    (0..=d).map(|k| graded_rank_fr(n, m, k)).sum()
}

pub fn graded_rank_gr(n: u64, m: u64, k: u64) -> u128 {
    (n as u128).pow(k as u32) * multichoose(m, k)
}

pub fn graded_rank_fr(n: u64, m: u64, k: u64) -> u128 {
    multichoose(n * m, k)
}

/// `m (m+1) ⋯ (m+n-1)`.
pub fn rising_factorial(m: u64, n: u64) -> u128 {
    (0..n as u128).map(|i| m as u128 + i).product()
}

fn mobius(mut n: u64) -> i128 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Dimension of the multidegree-`delta` part of the free Lie algebra (Witt's formula).
pub fn lie_dim(delta: &[u64]) -> u128 {
    let total: u64 = delta.iter().sum();
    if total == 0 {
        return 0;
    }
    let g = delta.iter().fold(0, |a, &b| gcd(a, b));
    let mut s: i128 = 0;
    for d in 1..=g {
        if g % d != 0 {
            continue;
        }
        let mut term = factorial(total / d) as i128;
        for &x in delta {
            term /= factorial(x / d) as i128;
        }
        s += mobius(d) * term;
    }
    (s / total as i128) as u128
}

/// All maps `[n] → [m]`, as vectors of 0-based images.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..m).map(move |i| {
                    let mut g = f.clone();
                    g.push(i);
                    g
                })
            })
            .collect();
    }
    out
}

/// `Σ_f ∏_i (|f^{-1}(i)| - 1)!` over maps `[n] → [m]` with every fiber nonempty.
pub fn lie_operad_dim(m: usize, n: usize) -> u128 {
    all_maps(n, m)
        .into_iter()
        .filter_map(|f| {
            let mut sizes = vec![0u64; m];
            for i in f {
                sizes[i] += 1;
            }
            if sizes.contains(&0) {
                return None;
            }
            Some(sizes.iter().map(|&s| factorial(s - 1)).product::<u128>())
        })
        .sum()
}

/// Count of tuples of `m` words using each of `n` letters exactly once, counted by
/// insertion positions.
pub fn ass_operad_dim_enumerated(m: usize, n: usize) -> u128 {
    // Letter i goes into one of i + m slots.
    let mut count: u128 = 1;
    for i in 0..n {
        count *= (i + m) as u128;
    }
    if m == 0 {
        return u128::from(n == 0);
    }
    count
}

/// `|Fin(n, m)| · r^n`.
pub fn fin_dim(m: u64, n: u64, r: u64) -> u128 {
    (m as u128).pow(n as u32) * (r as u128).pow(n as u32)
}

/// `n! · r^n` on the diagonal, zero elsewhere.
pub fn sym_dim(m: u64, n: u64, r: u64) -> u128 {
    if m != n {
        return 0;
    }
    factorial(n) * (r as u128).pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(passi_rank_gr(2, 1, 2), 7);
        assert_eq!(passi_rank_gr(2, 2, 1), 5);
        assert_eq!(passi_rank_gr(2, 2, 2), 17);
        assert_eq!(passi_rank_fr(1, 1, 2), 3);
        assert_eq!(passi_rank_fr(2, 2, 2), 15);
        assert_eq!(passi_rank_gr(0, 0, 3), 1);
        assert_eq!(passi_rank_gr(3, 0, 3), 1);
    }

    #[test]
    fn lie_values() {
        assert_eq!(lie_dim(&[1, 1, 1]), 2);
        assert_eq!(lie_dim(&[2, 1]), 1);
        assert_eq!(lie_dim(&[2, 2]), 1);
        assert_eq!(lie_dim(&[1, 1, 1, 1]), 6);
        assert_eq!(lie_operad_dim(1, 3), 2);
        assert_eq!(lie_operad_dim(2, 3), 6);
        assert_eq!(lie_operad_dim(3, 2), 0);
        assert_eq!(rising_factorial(2, 2), 6);
        assert_eq!(rising_factorial(2, 3), 24);
        assert_eq!(ass_operad_dim_enumerated(2, 3), 24);
    }
}
