//! Nondecreasing k-tuples over `[n]` (multisets of size k), their ranks,
//! multiplicity vectors and orbits under coordinate permutation.
//!
//! Multiset entries are 1-based vertex labels; ranks are 0-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Index order of the multiset basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Order {
    /// Plain lexicographic order.
    Lex,
    /// Constant tuples `(i, .., i)` for `i = 1..n` first, then the rest lexicographically.
    #[default]
    Paper,
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lex" => Ok(Order::Lex),
            "paper" => Ok(Order::Paper),
            other => Err(format!("unknown order `{other}` (expected lex or paper)")),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Lex => "lex",
            Order::Paper => "paper",
        })
    }
}

/// Checked binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n-k+i) / i is C(n-k+i, i), always integral
        acc = acc.checked_mul(n as u128 - k as u128 + i)? / i;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn binom_usize(n: usize, k: usize) -> Option<usize> {
    binomial(n as u64, k as u64).and_then(|v| usize::try_from(v).ok())
}

/// Number of nondecreasing k-tuples over `[n]`, i.e. `C(n+k-1, k)`.
pub fn multiset_count(n: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    n.checked_add(k - 1)
        .and_then(|top| binom_usize(top, k))
        .ok_or(Error::CountOverflow { n, k })
}

/// A nondecreasing k-tuple over `[n]`; a vertex of the k-th symmetric power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMultiset {
    n: usize,
    entries: Vec<usize>,
}

impl VertexMultiset {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMultiset("n must be at least 1".into()));
        }
        if entries.is_empty() {
            return Err(Error::InvalidMultiset("k must be at least 1".into()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidMultiset(format!(
                "entry {bad} outside 1..={n}"
            )));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMultiset(format!(
                "entries {entries:?} are not nondecreasing"
            )));
        }
        Ok(Self { n, entries })
    }

    /// Sorts an arbitrary tuple into its orbit representative.
    pub fn from_tuple(mut entries: Vec<usize>, n: usize) -> Result<Self> {
        entries.sort_unstable();
        Self::new(entries, n)
    }

    fn constant(value: usize, n: usize, k: usize) -> Self {
        Self {
            n,
            entries: vec![value; k],
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// 0-based vertex indices.
    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e - 1).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] == w[1])
    }

    /// Comma-joined display label, e.g. `"1,2,2"`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        parts.join(",")
    }

    pub fn multiplicity(&self) -> MultiplicityVector {
        multiplicity_vector(self)
    }
}

impl fmt::Display for VertexMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Occurrence counts `m(i)` of each vertex in a tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    counts: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidMultiset("empty multiplicity vector".into()));
        }
        if counts.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidMultiset("multiplicities sum to zero".into()));
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn k(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The multinomial `k! / (m_1! ... m_n!)`, as a product of binomials.
    pub fn orbit_size(&self) -> Result<u64> {
        orbit_size(self)
    }

    /// `m_1! m_2! ... m_n!`; the order of the stabilizer of the tuple.
    pub fn factorial_product(&self) -> Result<u64> {
        let overflow = || Error::MultinomialOverflow {
            counts: self.counts.clone(),
        };
        let mut acc: u64 = 1;
        for &m in &self.counts {
            for f in 2..=m as u64 {
                acc = acc.checked_mul(f).ok_or_else(overflow)?;
            }
        }
        Ok(acc)
    }
}

pub fn multiplicity_vector(t: &VertexMultiset) -> MultiplicityVector {
    let mut counts = vec![0; t.n];
    for &e in &t.entries {
        counts[e - 1] += 1;
    }
    MultiplicityVector { counts }
}

pub fn orbit_size(m: &MultiplicityVector) -> Result<u64> {
    let mut acc: u64 = 1;
    let mut seen = 0u64;
    for &c in &m.counts {
        seen += c as u64;
        let b = binomial(seen, c as u64);
        acc = b
            .and_then(|b| acc.checked_mul(b))
            .ok_or_else(|| Error::MultinomialOverflow {
                counts: m.counts.clone(),
            })?;
    }
    Ok(acc)
}

/// Every distinct rearrangement of `t`, in lexicographic order.
pub fn enumerate_orbit(t: &VertexMultiset) -> Vec<Vec<usize>> {
    let mut current = t.entries.clone();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// Advances to the next lexicographic permutation; false when `v` was the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn lex_successor(entries: &mut [usize], n: usize) -> bool {
    let k = entries.len();
    let Some(pos) = (0..k).rev().find(|&p| entries[p] < n) else {
        return false;
    };
    let next = entries[pos] + 1;
    for e in &mut entries[pos..] {
        *e = next;
    }
    true
}

/// All `C(n+k-1, k)` nondecreasing k-tuples over `[n]` in the requested order.
pub fn enumerate_multisets(n: usize, k: usize, order: Order) -> Result<Vec<VertexMultiset>> {
    let count = multiset_count(n, k)?;
    let mut lex = Vec::with_capacity(count);
    let mut current = vec![1; k];
    loop {
        lex.push(VertexMultiset {
            n,
            entries: current.clone(),
        });
        if !lex_successor(&mut current, n) {
            break;
        }
    }
    debug_assert_eq!(lex.len(), count);
    Ok(match order {
        Order::Lex => lex,
        Order::Paper => {
            let mut out: Vec<VertexMultiset> =
                (1..=n).map(|i| VertexMultiset::constant(i, n, k)).collect();
            out.extend(lex.into_iter().filter(|t| !t.is_constant()));
            out
        }
    })
}

// A nondecreasing tuple a_1 <= .. <= a_k over [n] maps to the strictly
// increasing combination b_l = (a_l - 1) + l of [0, n+k-1); lex order is kept.
fn lex_rank(entries: &[usize], n: usize) -> Result<usize> {
    let k = entries.len();
    let m = n + k - 1;
    let total = multiset_count(n, k)?;
    let mut tail = 0usize;
    for (l, &a) in entries.iter().enumerate() {
        let b = a - 1 + l;
        tail += binom_usize(m - 1 - b, k - l).ok_or(Error::CountOverflow { n, k })?;
    }
    Ok(total - 1 - tail)
}

fn lex_unrank(rank: usize, n: usize, k: usize) -> Result<Vec<usize>> {
    let m = n + k - 1;
    let total = multiset_count(n, k)?;
    let mut x = total - 1 - rank;
    let mut entries = Vec::with_capacity(k);
    // greedy combinadic: c_0 > c_1 > ... with x = sum C(c_l, k - l)
    let mut upper = m;
    for l in 0..k {
        let j = k - l;
        let mut c = upper;
        loop {
            c -= 1;
            let b = binom_usize(c, j).ok_or(Error::CountOverflow { n, k })?;
            if b <= x {
                x -= b;
                break;
            }
        }
        upper = c;
        let b_l = m - 1 - c;
        entries.push(b_l - l + 1);
    }
    Ok(entries)
}

/// Position of `t` in [`enumerate_multisets`] for the given order.
pub fn rank(t: &VertexMultiset, order: Order) -> Result<usize> {
    let n = t.n;
    match order {
        Order::Lex => lex_rank(&t.entries, n),
        Order::Paper => {
            if t.is_constant() {
                Ok(t.entries[0] - 1)
            } else {
                // the constants (c, .., c) with c <= t_1 precede t lexicographically
                Ok(n + lex_rank(&t.entries, n)? - t.entries[0])
            }
        }
    }
}

/// Inverse of [`rank`].
pub fn unrank(r: usize, n: usize, k: usize, order: Order) -> Result<VertexMultiset> {
    let count = multiset_count(n, k)?;
    if r >= count {
        return Err(Error::RankOutOfRange { rank: r, count });
    }
    let entries = match order {
        Order::Lex => lex_unrank(r, n, k)?,
        Order::Paper => {
            if r < n {
                vec![r + 1; k]
            } else {
                let mut s = r - n;
                let mut first = 1;
                loop {
                    // non-constant tuples starting with `first`
                    let block = if k == 1 {
                        0
                    } else {
                        multiset_count(n - first + 1, k - 1)? - 1
                    };
                    if s < block {
                        break;
                    }
                    s -= block;
                    first += 1;
                }
                let base = lex_rank(&vec![first; k], n)?;
                lex_unrank(base + 1 + s, n, k)?
            }
        }
    };
    Ok(VertexMultiset { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(entries: &[usize], n: usize) -> VertexMultiset {
        VertexMultiset::new(entries.to_vec(), n).unwrap()
    }

    fn labels(v: &[VertexMultiset]) -> Vec<Vec<usize>> {
        v.iter().map(|t| t.entries().to_vec()).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(2, 2).unwrap(), 3);
        assert_eq!(multiset_count(3, 2).unwrap(), 6);
        assert_eq!(multiset_count(7, 1).unwrap(), 7);
        assert_eq!(multiset_count(8, 5).unwrap(), 792);
        assert_eq!(multiset_count(3, 0).unwrap_err(), Error::ZeroPower);
    }

    #[test]
    fn count_overflow_is_reported() {
        let err = multiset_count(1 << 40, 1 << 20).unwrap_err();
        assert!(matches!(err, Error::CountOverflow { .. }));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(5, 6), Some(0));
        assert_eq!(binomial(62, 31), Some(465428353255261088));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn paper_order_tables() {
        let t3 = enumerate_multisets(3, 2, Order::Paper).unwrap();
        assert_eq!(
            labels(&t3),
            vec![
                vec![1, 1],
                vec![2, 2],
                vec![3, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let t2 = enumerate_multisets(2, 3, Order::Paper).unwrap();
        assert_eq!(
            labels(&t2),
            vec![vec![1, 1, 1], vec![2, 2, 2], vec![1, 1, 2], vec![1, 2, 2]]
        );
    }

    #[test]
    fn lex_order() {
        let t = enumerate_multisets(2, 2, Order::Lex).unwrap();
        assert_eq!(labels(&t), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ms(&[1, 2], 2), Order::Lex).unwrap(), 1);
        assert_eq!(unrank(5, 3, 2, Order::Paper).unwrap(), ms(&[2, 3], 3));
        assert_eq!(
            unrank(6, 3, 2, Order::Lex).unwrap_err(),
            Error::RankOutOfRange { rank: 6, count: 6 }
        );
    }

    #[test]
    fn rank_matches_enumeration_position() {
        for order in [Order::Lex, Order::Paper] {
            for n in 1..=5 {
                for k in 1..=5 {
                    let all = enumerate_multisets(n, k, order).unwrap();
                    assert_eq!(all.len(), multiset_count(n, k).unwrap());
                    for (r, t) in all.iter().enumerate() {
                        assert_eq!(rank(t, order).unwrap(), r, "{order} n={n} k={k} {t}");
                        assert_eq!(&unrank(r, n, k, order).unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn orders_hold_the_same_tuples() {
        let mut a = enumerate_multisets(4, 3, Order::Lex).unwrap();
        let mut b = enumerate_multisets(4, 3, Order::Paper).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn multiplicities() {
        let t = VertexMultiset::from_tuple(vec![1, 3, 2, 4, 3, 1], 5).unwrap();
        assert_eq!(t.multiplicity().counts(), &[2, 1, 2, 1, 0]);
        assert_eq!(ms(&[1, 1], 2).multiplicity().counts(), &[2, 0]);
        assert_eq!(ms(&[3, 3, 3], 4).multiplicity().counts(), &[0, 0, 3, 0]);
    }

    #[test]
    fn orbit_sizes() {
        let size = |c: &[usize]| orbit_size(&MultiplicityVector::new(c.to_vec()).unwrap()).unwrap();
        assert_eq!(size(&[1, 1]), 2);
        assert_eq!(size(&[2, 1]), 3);
        assert_eq!(size(&[4, 0, 0]), 1);
        // 25! / (5!)^5 stays in range even though 25! does not
        assert_eq!(size(&[5, 5, 5, 5, 5]), 623360743125120);
    }

    #[test]
    fn orbits() {
        assert_eq!(
            enumerate_orbit(&ms(&[1, 2], 2)),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(
            enumerate_orbit(&ms(&[1, 1, 2], 2)),
            vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]
        );
        assert_eq!(enumerate_orbit(&ms(&[1, 1], 2)), vec![vec![1, 1]]);
    }

    #[test]
    fn orbits_partition_the_cube() {
        for n in 1..=6 {
            for k in 1..=6 {
                let total: u64 = enumerate_multisets(n, k, Order::Lex)
                    .unwrap()
                    .iter()
                    .map(|t| t.multiplicity().orbit_size().unwrap())
                    .sum();
                assert_eq!(total, (n as u64).pow(k as u32));
            }
        }
    }

    #[test]
    fn orbit_length_matches_multinomial() {
        for t in enumerate_multisets(3, 4, Order::Paper).unwrap() {
            let orbit = enumerate_orbit(&t);
            assert_eq!(orbit.len() as u64, t.multiplicity().orbit_size().unwrap());
        }
    }

    #[test]
    fn invalid_multisets() {
        assert!(VertexMultiset::new(vec![2, 1], 3).is_err());
        assert!(VertexMultiset::new(vec![0, 1], 3).is_err());
        assert!(VertexMultiset::new(vec![1, 4], 3).is_err());
        assert!(VertexMultiset::new(vec![], 3).is_err());
    }
}
