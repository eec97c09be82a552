use super::tensor::{Mono, TensorPoly};
use super::FreeAlgError;
use crate::exactla::{sparse, Echelon, Field, Q, SparseVec, Subspace};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Binary tree over the letters `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HallTree {
    Leaf(u8),
    Node(Box<HallTree>, Box<HallTree>),
}

impl HallTree {
    pub fn node(a: HallTree, b: HallTree) -> HallTree {
        HallTree::Node(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            HallTree::Leaf(_) => 1,
            HallTree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn multidegree(&self, letters: usize) -> Vec<usize> {
        let mut v = vec![0; letters];
        self.add_multidegree(&mut v);
        v
    }

    fn add_multidegree(&self, v: &mut [usize]) {
        match self {
            HallTree::Leaf(a) => v[*a as usize] += 1,
            HallTree::Node(a, b) => {
                a.add_multidegree(v);
                b.add_multidegree(v);
            }
        }
    }

    /// Renames leaves through `map`.
    pub fn relabel(&self, map: &[u8]) -> HallTree {
        match self {
            HallTree::Leaf(a) => HallTree::Leaf(map[*a as usize]),
            HallTree::Node(a, b) => HallTree::node(a.relabel(map), b.relabel(map)),
        }
    }
}

impl Ord for HallTree {
    /// Larger degree first; within a degree, leaves by letter and nodes
    /// lexicographically on (left, right).
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| match (self, other) {
            (HallTree::Leaf(a), HallTree::Leaf(b)) => a.cmp(b),
            (HallTree::Leaf(_), HallTree::Node(..)) => Ordering::Less,
            (HallTree::Node(..), HallTree::Leaf(_)) => Ordering::Greater,
            (HallTree::Node(a1, b1), HallTree::Node(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
        })
    }
}

impl PartialOrd for HallTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HallTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HallTree::Leaf(a) => write!(f, "x{}", a + 1),
            HallTree::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

type Memo = Mutex<HashMap<Vec<usize>, Arc<Vec<HallTree>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn le(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// All Hall trees with multidegree exactly `delta` (letters `0..delta.len()`).
pub fn hall_set(delta: &[usize]) -> Result<Arc<Vec<HallTree>>, FreeAlgError> {
    if let Some(hit) = memo().lock().expect("hall memo poisoned").get(delta) {
        return Ok(hit.clone());
    }
    let total: usize = delta.iter().sum();
    let n = delta.len();
    // Trees of every multidegree below delta, grouped by total degree.
    let mut by_degree: Vec<Vec<(HallTree, Vec<usize>)>> = vec![Vec::new(); total + 1];
    if total >= 1 {
        for (a, &c) in delta.iter().enumerate() {
            if c > 0 {
                let t = HallTree::Leaf(a as u8);
                let md = t.multidegree(n);
                by_degree[1].push((t, md));
            }
        }
    }
    for k in 2..=total {
        let mut found = Vec::new();
        for i in 1..k {
            for (a, ma) in &by_degree[i] {
                for (b, mb) in &by_degree[k - i] {
                    if a >= b {
                        continue;
                    }
                    let ok = match a {
                        HallTree::Leaf(_) => true,
                        HallTree::Node(_, ar) => **ar >= *b,
                    };
                    if !ok {
                        continue;
                    }
                    let md: Vec<usize> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                    if !le(&md, delta) {
                        continue;
                    }
                    let t = HallTree::node(a.clone(), b.clone());
                    if t >= *b {
                        return Err(FreeAlgError::OrderViolation(t.to_string()));
                    }
                    found.push((t, md));
                }
            }
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));
        by_degree[k] = found;
    }
    let mut out: Vec<HallTree> = by_degree
        .get(total)
        .map(|v| v.iter().filter(|(_, md)| md == delta).map(|(t, _)| t.clone()).collect())
        .unwrap_or_default();
    out.sort();
    let out = Arc::new(out);
    memo().lock().expect("hall memo poisoned").insert(delta.to_vec(), out.clone());
    Ok(out)
}

/// Bracket expansion in the (untruncated) tensor algebra on `letters` letters.
pub fn hall_expand(field: Field, letters: usize, t: &HallTree) -> TensorPoly {
    match t {
        HallTree::Leaf(a) => {
            let mut p = TensorPoly::zero(field, letters, 1, None, false);
            p.add_term(vec![vec![*a]], Q::ONE);
            p
        }
        HallTree::Node(a, b) => {
            let x = hall_expand(field, letters, a);
            let y = hall_expand(field, letters, b);
            x.mul(&y).sub(&y.mul(&x))
        }
    }
}

/// Distinct arrangements of a letter multiset.
pub fn multiset_words(delta: &[usize]) -> Vec<Vec<u8>> {
    fn rec(rem: &mut Vec<usize>, cur: &mut Vec<u8>, left: usize, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 0..rem.len() {
            if rem[a] > 0 {
                rem[a] -= 1;
                cur.push(a as u8);
                rec(rem, cur, left - 1, out);
                cur.pop();
                rem[a] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let total = delta.iter().sum();
    rec(&mut delta.to_vec(), &mut Vec::new(), total, &mut out);
    out
}

/// Monomial basis of the `delta`-component of `k⟨X_n⟩^{⊗m}`.
pub fn component_basis(m: usize, delta: &[usize]) -> Vec<Mono> {
    let total: usize = delta.iter().sum();
    let mut out = Vec::new();
    for w in multiset_words(delta) {
        // Cut the word into m consecutive pieces.
        let mut cuts = vec![0usize; m + 1];
        cuts[m] = total;
        fn rec(i: usize, m: usize, total: usize, cuts: &mut Vec<usize>, w: &[u8], out: &mut Vec<Mono>) {
            if m == 0 {
                if total == 0 {
                    out.push(Vec::new());
                }
                return;
            }
            if i == m {
                let mono = (0..m).map(|k| w[cuts[k]..cuts[k + 1]].to_vec()).collect();
                out.push(mono);
                return;
            }
            let lo = cuts[i - 1];
            for c in lo..=total {
                cuts[i] = c;
                rec(i + 1, m, total, cuts, w, out);
            }
        }
        if m == 0 {
            if total == 0 {
                out.push(Vec::new());
            }
            continue;
        }
        rec(1, m, total, &mut cuts, &w, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Coordinates of a polynomial against an indexed monomial basis.
pub fn coords(field: Field, index: &BTreeMap<Mono, usize>, p: &TensorPoly) -> SparseVec {
    sparse::collect(
        field,
        p.terms.iter().map(|(m, c)| (*index.get(m).expect("monomial outside basis"), c.clone())),
    )
}

/// The primitive part of the `delta`-component of `k⟨X_n⟩^{⊗m}`: the common
/// kernel of the reduced comultiplication on every factor. Returns the basis
/// index used for coordinates together with the subspace.
pub fn primitive_part(
    field: Field,
    m: usize,
    delta: &[usize],
) -> (Vec<Mono>, Subspace) {
    let n = delta.len();
    let basis = component_basis(m, delta);
    let target = component_basis(m + 1, delta);
    let tindex: BTreeMap<Mono, usize> =
        target.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let mut rows: Vec<SparseVec> = Vec::new();
    for j in 0..m {
        // Row r of the stacked map: coefficient of target monomial r.
        let mut cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); target.len()];
        for (i, b) in basis.iter().enumerate() {
            let mut p = TensorPoly::zero(field, n, m, None, false);
            p.add_term(b.clone(), Q::ONE);
            let img = p.comul_reduced(j).expect("factor index in range");
            for (mono, c) in &img.terms {
                cols[tindex[mono]].push((i, c.clone()));
            }
        }
        rows.extend(cols.into_iter().filter(|r| !r.is_empty()));
    }
    let k = crate::exactla::kernel_rows(field, basis.len(), &rows);
    (basis, k)
}

/// Span of `g(t_1) ⊗ ⋯ ⊗ g(t_m)` over Hall trees whose multidegrees sum to `delta`,
/// each factor of positive degree.
pub fn hall_tensor_span(field: Field, m: usize, delta: &[usize]) -> Result<Subspace, FreeAlgError> {
    let n = delta.len();
    let basis = component_basis(m, delta);
    let index: BTreeMap<Mono, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let mut e = Echelon::new(field);
    let mut parts = Vec::new();
    split_multidegree(delta, m, &mut Vec::new(), &mut parts);
    for split in parts {
        let mut acc = vec![TensorPoly::one(field, n, 0, None, false)];
        for d in &split {
            let trees = hall_set(d)?;
            let mut next = Vec::new();
            for a in &acc {
                for t in trees.iter() {
                    next.push(a.tensor(&hall_expand(field, n, t)));
                }
            }
            acc = next;
        }
        for p in acc {
            e.insert(&coords(field, &index, &p));
        }
    }
    Ok(Subspace::from_echelon(field, basis.len(), e))
}

/// Ways to write `delta` as an ordered sum of `m` nonzero multidegrees.
fn split_multidegree(delta: &[usize], m: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if m == 0 {
        if delta.iter().all(|&x| x == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let mut part = vec![0usize; delta.len()];
    loop {
        if part.iter().any(|&x| x > 0) {
            let rest: Vec<usize> = delta.iter().zip(&part).map(|(a, b)| a - b).collect();
            cur.push(part.clone());
            split_multidegree(&rest, m - 1, cur, out);
            cur.pop();
        }
        // Odometer over 0..=delta.
        let mut i = 0;
        loop {
            if i == part.len() {
                return;
            }
            if part[i] < delta[i] {
                part[i] += 1;
                break;
            }
            part[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QF: Field = Field::Rational;

    #[test]
    fn small_hall_sets() {
        assert_eq!(*hall_set(&[1]).unwrap(), vec![HallTree::Leaf(0)]);
        let h = hall_set(&[1, 1]).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].to_string(), "[x1,x2]");
        assert_eq!(hall_set(&[1, 1, 1]).unwrap().len(), 2);
        assert_eq!(hall_set(&[2, 1]).unwrap().len(), 1);
        assert_eq!(hall_set(&[2]).unwrap().len(), 0);
    }

    #[test]
    fn expansion_examples() {
        let t = HallTree::node(HallTree::node(HallTree::Leaf(0), HallTree::Leaf(1)), HallTree::Leaf(2));
        let p = hall_expand(QF, 3, &t);
        let mut e = TensorPoly::zero(QF, 3, 1, None, false);
        for (w, c) in [(vec![0, 1, 2], 1), (vec![1, 0, 2], -1), (vec![2, 0, 1], -1), (vec![2, 1, 0], 1)] {
            e.add_term(vec![w], Q::int(c));
        }
        assert_eq!(p, e);
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_part(QF, 1, &[1]).1.dim(), 1);
        assert_eq!(primitive_part(QF, 1, &[1, 1, 1]).1.dim(), 2);
        assert_eq!(primitive_part(QF, 2, &[1, 1]).1.dim(), 2);
    }

    #[test]
    fn component_counts() {
        // 2 letters, 2 factors: words x1x2, x2x1 cut in 3 places each.
        assert_eq!(component_basis(2, &[1, 1]).len(), 6);
        assert_eq!(component_basis(1, &[2, 1]).len(), 3);
        assert_eq!(component_basis(0, &[]).len(), 1);
    }
}
