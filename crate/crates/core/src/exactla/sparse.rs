//! Sorted sparse coordinate vectors.

use super::field::Field;
use super::scalar::Q;

/// Strictly increasing indices, no zero coefficients.
pub type SparseVec = Vec<(usize, Q)>;

pub fn unit(i: usize) -> SparseVec {
    vec![(i, Q::ONE)]
}

pub fn from_dense(field: Field, v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter_map(|(i, q)| {
            let q = field.reduce(q);
            (!q.is_zero()).then_some((i, q))
        })
        .collect()
}

pub fn from_i64(field: Field, v: &[i64]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter_map(|(i, &q)| {
            let q = field.from_i64(q);
            (!q.is_zero()).then_some((i, q))
        })
        .collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Q> {
    let mut out = vec![Q::ZERO; len];
    for (i, q) in v {
        out[*i] = q.clone();
    }
    out
}

pub fn get(v: &SparseVec, i: usize) -> Q {
    match v.binary_search_by_key(&i, |(j, _)| *j) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Q::ZERO,
    }
}

/// `a + c·b`.
pub fn axpy(field: Field, a: &SparseVec, c: &Q, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(c, &b[j].1)));
            j += 1;
        } else {
            let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn add(field: Field, a: &SparseVec, b: &SparseVec) -> SparseVec {
    axpy(field, a, &Q::ONE, b)
}

pub fn sub(field: Field, a: &SparseVec, b: &SparseVec) -> SparseVec {
    axpy(field, a, &field.neg(&Q::ONE), b)
}

pub fn scale(field: Field, c: &Q, v: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, q)| (*i, field.mul(c, q))).collect()
}

pub fn dot(field: Field, a: &SparseVec, b: &SparseVec) -> Q {
    let (mut i, mut j) = (0, 0);
    let mut s = Q::ZERO;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s = field.add(&s, &field.mul(&a[i].1, &b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// Collects unsorted `(index, coefficient)` pairs, summing duplicates.
pub fn collect(field: Field, items: impl IntoIterator<Item = (usize, Q)>) -> SparseVec {
    let mut acc: std::collections::BTreeMap<usize, Q> = std::collections::BTreeMap::new();
    for (i, q) in items {
        let q = field.reduce(&q);
        if q.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert(Q::ZERO);
        *e = field.add(e, &q);
    }
    acc.into_iter().filter(|(_, q)| !q.is_zero()).collect()
}

/// Shifts every index by `offset`.
pub fn shift(v: &SparseVec, offset: usize) -> SparseVec {
    v.iter().map(|(i, q)| (i + offset, q.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let f = Field::Rational;
        let a = from_i64(f, &[1, 2, 0]);
        let b = from_i64(f, &[1, 0, 3]);
        assert_eq!(axpy(f, &a, &Q::int(-1), &b), vec![(1, Q::int(2)), (2, Q::int(-3))]);
        assert_eq!(sub(f, &a, &a), vec![]);
    }

    #[test]
    fn collect_sums_duplicates() {
        let f = Field::Prime(2);
        let v = collect(f, [(3, Q::ONE), (1, Q::ONE), (3, Q::ONE)]);
        assert_eq!(v, vec![(1, Q::ONE)]);
    }
}
