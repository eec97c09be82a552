use super::scalar::{mod_inverse, Q};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Ground field: the rationals or a prime field `F_p`.
///
/// Elements of `F_p` are carried as `Q` integers in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl Field {
    /// `0` selects ℚ, anything else must be a prime.
    pub fn from_code(code: u64) -> Option<Field> {
        match code {
            0 => Some(Field::Rational),
            p if is_prime(p) => Some(Field::Prime(p)),
            _ => None,
        }
    }

    pub fn code(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn characteristic(self) -> u64 {
        self.code()
    }

    /// Maps a rational into the field. Panics if the denominator vanishes mod p.
    pub fn reduce(self, q: &Q) -> Q {
        match self {
            Field::Rational => q.clone(),
            Field::Prime(p) => match q {
                Q::Small(n, 1) => Q::int(n.rem_euclid(p as i64)),
                _ => Q::int(q.residue(p).expect("denominator divisible by p") as i64),
            },
        }
    }

    pub fn from_i64(self, n: i64) -> Q {
        match self {
            Field::Rational => Q::int(n),
            Field::Prime(p) => Q::int(n.rem_euclid(p as i64)),
        }
    }

    fn fp(q: &Q) -> u64 {
        match q {
            Q::Small(n, 1) => *n as u64,
            _ => unreachable!("non-reduced F_p element {q}"),
        }
    }

    pub fn add(self, a: &Q, b: &Q) -> Q {
        match self {
            Field::Rational => a.add(b),
            Field::Prime(p) => Q::int(((Self::fp(a) + Self::fp(b)) % p) as i64),
        }
    }

    pub fn sub(self, a: &Q, b: &Q) -> Q {
        match self {
            Field::Rational => a.sub(b),
            Field::Prime(p) => Q::int(((Self::fp(a) + p - Self::fp(b)) % p) as i64),
        }
    }

    pub fn neg(self, a: &Q) -> Q {
        match self {
            Field::Rational => a.neg(),
            Field::Prime(p) => Q::int(((p - Self::fp(a)) % p) as i64),
        }
    }

    pub fn mul(self, a: &Q, b: &Q) -> Q {
        match self {
            Field::Rational => a.mul(b),
            Field::Prime(p) => {
                Q::int(((Self::fp(a) as u128 * Self::fp(b) as u128) % p as u128) as i64)
            }
        }
    }

    pub fn inv(self, a: &Q) -> Option<Q> {
        match self {
            Field::Rational => a.inv(),
            Field::Prime(p) => mod_inverse(Self::fp(a), p).map(|v| Q::int(v as i64)),
        }
    }

    pub fn div(self, a: &Q, b: &Q) -> Option<Q> {
        self.inv(b).map(|i| self.mul(a, &i))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(-3);
        assert_eq!(a, Q::int(4));
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), Q::ONE);
        assert_eq!(f.reduce(&Q::frac(1, 2)), Q::int(4));
        assert!(f.inv(&Q::ZERO).is_none());
    }

    #[test]
    fn codes() {
        assert_eq!(Field::from_code(0), Some(Field::Rational));
        assert_eq!(Field::from_code(2), Some(Field::Prime(2)));
        assert_eq!(Field::from_code(4), None);
    }
}
