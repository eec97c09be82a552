use super::PrimFrError;
use crate::exactla::{Field, Q};

/// Finite-dimensional unital algebra `B` over the ground field, given by
/// structure constants on a basis `e_0, …, e_{r−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingB {
    pub field: Field,
    pub name: String,
    /// `table[a][b]` holds the coordinates of `e_a e_b`.
    table: Vec<Vec<Vec<Q>>>,
    unit: Vec<Q>,
}

impl RingB {
    pub fn new(field: Field, name: &str, table: Vec<Vec<Vec<Q>>>, unit: Vec<Q>) -> Result<Self, PrimFrError> {
        let r = table.len();
        if unit.len() != r || table.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != r)) {
            return Err(PrimFrError::RingShape);
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.iter().map(|c| field.reduce(c)).collect()).collect())
            .collect();
        let unit = unit.iter().map(|c| field.reduce(c)).collect();
        let ring = RingB { field, name: name.to_string(), table, unit };
        for a in 0..r {
            let ea = ring.basis(a);
            if ring.mul(&ring.unit, &ea) != ea || ring.mul(&ea, &ring.unit) != ea {
                return Err(PrimFrError::NotUnital);
            }
            for b in 0..r {
                for c in 0..r {
                    let (eb, ec) = (ring.basis(b), ring.basis(c));
                    if ring.mul(&ring.mul(&ea, &eb), &ec) != ring.mul(&ea, &ring.mul(&eb, &ec)) {
                        return Err(PrimFrError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(ring)
    }

    /// `B = k`.
    pub fn ground(field: Field) -> Self {
        RingB::new(field, "k", vec![vec![vec![Q::ONE]]], vec![Q::ONE]).expect("k is a ring")
    }

    /// `k[x]/(x²)` on the basis `1, x`.
    pub fn dual_numbers(field: Field) -> Self {
        let (o, z) = (Q::ONE, Q::int(0));
        let table = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        RingB::new(field, "k[x]/(x^2)", table, vec![o, z]).expect("dual numbers form a ring")
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn one(&self) -> Vec<Q> {
        self.unit.clone()
    }

    pub fn zero(&self) -> Vec<Q> {
        vec![Q::int(0); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<Q> {
        let mut v = self.zero();
        v[i] = Q::ONE;
        v
    }

    /// Image of an integer under `ℤ → B`.
    pub fn from_int(&self, z: i64) -> Vec<Q> {
        let c = self.field.from_i64(z);
        self.unit.iter().map(|u| self.field.mul(u, &c)).collect()
    }

    pub fn is_zero(&self, a: &[Q]) -> bool {
        a.iter().all(Q::is_zero)
    }

    pub fn add(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let f = self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&xy, c));
                    }
                }
            }
        }
        out
    }

    /// Expands `v_1 ⊗ ⋯ ⊗ v_n` into basis tuples with nonzero coefficient.
    pub fn expand(&self, factors: &[Vec<Q>]) -> Vec<(Vec<usize>, Q)> {
        let mut acc: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), Q::ONE)];
        for v in factors {
            let mut next = Vec::new();
            for (idx, c) in &acc {
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let mut i = idx.clone();
                        i.push(k);
                        next.push((i, self.field.mul(c, x)));
                    }
                }
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_square_to_zero() {
        let b = RingB::dual_numbers(Field::Rational);
        let x = b.basis(1);
        assert!(b.is_zero(&b.mul(&x, &x)));
        assert_eq!(b.mul(&b.one(), &x), x);
        assert_eq!(b.from_int(3), vec![Q::int(3), Q::int(0)]);
    }

    #[test]
    fn rejects_bad_tables() {
        let f = Field::Rational;
        // e0 e0 = e1, e1 anything = 0: not unital.
        let t = vec![
            vec![vec![Q::int(0), Q::ONE], vec![Q::int(0), Q::int(0)]],
            vec![vec![Q::int(0), Q::int(0)], vec![Q::int(0), Q::int(0)]],
        ];
        assert_eq!(RingB::new(f, "bad", t, vec![Q::ONE, Q::int(0)]), Err(PrimFrError::NotUnital));
        assert_eq!(RingB::new(f, "bad", vec![vec![vec![Q::ONE]]], vec![]), Err(PrimFrError::RingShape));
    }

    #[test]
    fn expand_tensor() {
        let b = RingB::dual_numbers(Field::Rational);
        let one_plus_x = b.add(&b.one(), &b.basis(1));
        let t = b.expand(&[one_plus_x, b.basis(1)]);
        assert_eq!(t, vec![(vec![0, 1], Q::ONE), (vec![1, 1], Q::ONE)]);
    }
}
