//! Partition and permutation combinatorics: conjugates, dominance, hooks,
//! generalized strips, cycle statistics and the closed-form eigenvalue sums
//! built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rational::factorial;
use crate::shifted::ShiftedPolynomial;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-indexed), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> u32 {
        self.part(0)
    }

    /// The conjugate shape λ̃ (transposed Ferrers diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Cells of the Ferrers diagram, 1-indexed `(row, column)`.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                out.push((r as u32 + 1, c));
            }
        }
        out
    }

    /// Hook length of the cell `(row, col)` (1-indexed).
    pub fn hook_length(&self, row: u32, col: u32) -> u32 {
        let arm = self.part(row as usize - 1) - col;
        let leg = self.conjugate().part(col as usize - 1) - row;
        arm + leg + 1
    }

    /// H(λ), the product of all hook lengths.
    pub fn hook_number(&self) -> u64 {
        self.cells()
            .iter()
            .map(|&(r, c)| self.hook_length(r, c) as u64)
            .product()
    }

    /// λ! = ∏ᵢ λᵢ!, the product of row factorials.
    pub fn partition_factorial(&self) -> u64 {
        self.parts.iter().map(|&p| factorial(p as u64)).product()
    }

    /// λ̃ padded with zeros to length `n` (requires λ̃ to fit, i.e. λ₁ ≤ n).
    pub fn conjugate_padded(&self, n: usize) -> Result<Vec<i64>> {
        let conj = self.conjugate();
        if conj.len() > n {
            return Err(Error::InvalidPartition(format!(
                "conjugate of {self} has more than {n} parts"
            )));
        }
        let mut v: Vec<i64> = conj.parts.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Ok(v)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{self} has more than {n} parts"
            )));
        }
        let mut v: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Ok(v)
    }
}

/// Dominance partial order: true iff every partial sum of λ is ≤ the matching
/// partial sum of μ. Callers normally compare equal weights.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    let rows = lambda.len().max(mu.len());
    let mut sl = 0u64;
    let mut sm = 0u64;
    for i in 0..rows {
        sl += lambda.part(i) as u64;
        sm += mu.part(i) as u64;
        if sl > sm {
            return false;
        }
    }
    true
}

/// All partitions of `weight` with parts ≤ `max_part` (no bound when `None`).
pub fn partitions_of(weight: u32, max_part: Option<u32>) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_part.unwrap_or(weight), &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight ≤ `max_weight` with parts ≤ `max_part`, by weight.
pub fn partitions_up_to(max_weight: u32, max_part: Option<u32>) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(|w| partitions_of(w, max_part))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,2`; the empty string is the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A permutation stored as a bijection on an explicit finite support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    images: BTreeMap<u32, u32>,
}

impl Permutation {
    pub fn identity(support: &[u32]) -> Self {
        Permutation {
            images: support.iter().map(|&i| (i, i)).collect(),
        }
    }

    /// Builds from `(point, image)` pairs; the images must permute the points.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let images: BTreeMap<u32, u32> = pairs.iter().copied().collect();
        if images.len() != pairs.len() {
            return Err(Error::InvalidPermutation("repeated point".into()));
        }
        let mut targets: Vec<u32> = images.values().copied().collect();
        targets.sort_unstable();
        let domain: Vec<u32> = images.keys().copied().collect();
        if targets != domain {
            return Err(Error::InvalidPermutation(
                "images do not permute the support".into(),
            ));
        }
        Ok(Permutation { images })
    }

    /// Builds from a cycle decomposition over the given support; omitted
    /// points are fixed.
    pub fn from_cycles(support: &[u32], cycles: &[Vec<u32>]) -> Result<Self> {
        let mut pairs: BTreeMap<u32, u32> = support.iter().map(|&i| (i, i)).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if !pairs.contains_key(&from) {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {from} outside support"
                    )));
                }
                pairs.insert(from, to);
            }
        }
        Permutation::from_pairs(&pairs.into_iter().collect::<Vec<_>>())
    }

    pub fn support(&self) -> Vec<u32> {
        self.images.keys().copied().collect()
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[&i]
    }

    /// Cycle decomposition (each cycle starts at its smallest element).
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.images.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut cur = self.image(start);
            while cur != start {
                cycle.push(cur);
                seen.insert(cur);
                cur = self.image(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// The maximum element of each cycle.
    pub fn cycle_maxima(&self) -> Vec<u32> {
        self.cycles()
            .iter()
            .map(|c| *c.iter().max().expect("nonempty cycle"))
            .collect()
    }

    /// Sign of the permutation.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of the given support.
    pub fn all_of(support: &[u32]) -> Vec<Permutation> {
        support
            .iter()
            .copied()
            .permutations(support.len())
            .map(|images| Permutation {
                images: support.iter().copied().zip(images).collect(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// A generalized strip: a set of cells of a Ferrers diagram with no two cells
/// in the same column (horizontal) or row (vertical). Components are the
/// maximal same-row (resp. same-column) subsets of chosen cells; they are not
/// required to be contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    cells: Vec<(u32, u32)>,
    kind: StripKind,
}

impl Strip {
    pub fn new(shape: &Partition, cells: Vec<(u32, u32)>, kind: StripKind) -> Result<Self> {
        for &(r, c) in &cells {
            if r == 0 || c == 0 || shape.part(r as usize - 1) < c {
                return Err(Error::InvalidPartition(format!(
                    "cell ({r},{c}) outside shape {shape}"
                )));
            }
        }
        let mut sorted = cells;
        sorted.sort_unstable();
        let clash = |a: &(u32, u32), b: &(u32, u32)| match kind {
            StripKind::Horizontal => a.1 == b.1,
            StripKind::Vertical => a.0 == b.0,
        };
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if clash(&sorted[i], &sorted[j]) {
                    return Err(Error::InvalidPartition("strip kind violated".into()));
                }
            }
        }
        Ok(Strip {
            cells: sorted,
            kind,
        })
    }

    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    pub fn kind(&self) -> StripKind {
        self.kind
    }

    /// Product of the factorials of the component sizes: the `hstrip!`
    /// (resp. `vstrip!`) weight of the strip.
    pub fn annotation(&self) -> u64 {
        let mut sizes: BTreeMap<u32, u64> = BTreeMap::new();
        for &(r, c) in &self.cells {
            let key = match self.kind {
                StripKind::Horizontal => r,
                StripKind::Vertical => c,
            };
            *sizes.entry(key).or_insert(0) += 1;
        }
        sizes.values().map(|&s| factorial(s)).product()
    }
}

fn strips(shape: &Partition, k: usize, kind: StripKind) -> Vec<Strip> {
    let cells = shape.cells();
    cells
        .iter()
        .copied()
        .combinations(k)
        .filter(|combo| {
            for i in 0..combo.len() {
                for j in i + 1..combo.len() {
                    let clash = match kind {
                        StripKind::Horizontal => combo[i].1 == combo[j].1,
                        StripKind::Vertical => combo[i].0 == combo[j].0,
                    };
                    if clash {
                        return false;
                    }
                }
            }
            true
        })
        .map(|cells| Strip { cells, kind })
        .collect()
}

/// All k-cell subsets of the diagram of `mu` with no two cells in a column.
pub fn horizontal_strips(mu: &Partition, k: usize) -> Vec<Strip> {
    strips(mu, k, StripKind::Horizontal)
}

/// All k-cell subsets of the diagram of `mu` with no two cells in a row.
pub fn vertical_strips(mu: &Partition, k: usize) -> Vec<Strip> {
    strips(mu, k, StripKind::Vertical)
}

/// e*_k evaluated at an integer point: Σ over i₁<…<i_k of
/// (v_{i₁}+k−1)(v_{i₂}+k−2)⋯(v_{i_k}). Errors when k exceeds the number of
/// variables (an empty index set, reported distinctly from a zero sum).
pub fn e_star_eval(k: usize, values: &[i64]) -> Result<i64> {
    let n = values.len();
    if k > n {
        return Err(Error::KExceedsVariables { k, n });
    }
    let mut total = 0i64;
    for combo in (0..n).combinations(k) {
        let mut prod = 1i64;
        for (j, &i) in combo.iter().enumerate() {
            prod *= values[i] + (k - 1 - j) as i64;
        }
        total += prod;
    }
    Ok(total)
}

/// h*_k evaluated at an integer point: Σ over i₁≤…≤i_k of
/// (v_{i₁}−k+1)(v_{i₂}−k+2)⋯(v_{i_k}).
pub fn h_star_eval(k: usize, values: &[i64]) -> i64 {
    let n = values.len();
    let mut total = 0i64;
    for combo in (0..n).combinations_with_replacement(k) {
        let mut prod = 1i64;
        for (j, &i) in combo.iter().enumerate() {
            prod *= values[i] - (k as i64) + (j as i64) + 1;
        }
        total += prod;
    }
    total
}

/// Γ_σ(μ; i₁,…,i_k): the product of μ̃_j over the maximum elements j of the
/// cycles of σ (μ̃_j = 0 past the length of μ̃).
pub fn gamma_statistic(mu: &Partition, sigma: &Permutation) -> i64 {
    let conj = mu.conjugate();
    sigma
        .cycle_maxima()
        .iter()
        .map(|&j| conj.part(j as usize - 1) as i64)
        .product()
}

/// The generating polynomial Σ_σ x₁^{h_σ(1)}⋯x_n^{h_σ(n)} over all
/// permutations of {1..n}, where h_σ(j) = 1 iff j is a cycle maximum.
pub fn wilf_polynomial(n: usize) -> ShiftedPolynomial {
    let support: Vec<u32> = (1..=n as u32).collect();
    let mut out = ShiftedPolynomial::zero(n);
    for sigma in Permutation::all_of(&support) {
        let mut exps = vec![0u32; n];
        for m in sigma.cycle_maxima() {
            exps[m as usize - 1] = 1;
        }
        out = out.add(&ShiftedPolynomial::monomial(n, exps, crate::rational::rat(1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn conjugate_is_involution() {
        for mu in partitions_up_to(8, None) {
            assert_eq!(mu.conjugate().conjugate(), mu);
            assert_eq!(mu.conjugate().weight(), mu.weight());
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[3, 1])));
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])));
    }

    #[test]
    fn hook_number_examples() {
        assert_eq!(p(&[4]).hook_number(), 24);
        assert_eq!(p(&[2, 1]).hook_number(), 3);
        assert_eq!(Partition::empty().hook_number(), 1);
    }

    #[test]
    fn hook_number_conjugation_invariant() {
        for mu in partitions_up_to(8, None) {
            assert_eq!(mu.hook_number(), mu.conjugate().hook_number());
        }
    }

    #[test]
    fn partition_factorial_rows() {
        assert_eq!(p(&[3, 2]).partition_factorial(), 12);
        assert_eq!(Partition::empty().partition_factorial(), 1);
    }

    #[test]
    fn horizontal_strip_example() {
        // All 2-subsets of the (3,2) diagram minus the 2 same-column pairs.
        let strips = horizontal_strips(&p(&[3, 2]), 2);
        assert_eq!(strips.len(), 8);
        let total: u64 = strips.iter().map(|s| s.annotation()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn horizontal_strip_edge_cases() {
        let one = horizontal_strips(&p(&[3, 2]), 0);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].annotation(), 1);

        let row = horizontal_strips(&p(&[2]), 2);
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].annotation(), 2);
    }

    #[test]
    fn vertical_strip_examples() {
        let strips = vertical_strips(&p(&[2, 2, 1]), 2);
        let total: u64 = strips.iter().map(|s| s.annotation()).sum();
        assert_eq!(total, 12);

        assert!(vertical_strips(&p(&[1]), 2).is_empty());

        let col = vertical_strips(&p(&[1, 1]), 2);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].annotation(), 2);
    }

    #[test]
    fn strip_annotation_from_exhaustive_components() {
        // Independent recomputation of the component-factorial weight.
        for mu in [p(&[3, 2]), p(&[2, 2, 1]), p(&[4, 1])] {
            for k in 0..=3 {
                for s in horizontal_strips(&mu, k) {
                    let mut by_row: BTreeMap<u32, u64> = BTreeMap::new();
                    for &(r, _) in s.cells() {
                        *by_row.entry(r).or_insert(0) += 1;
                    }
                    let expect: u64 = by_row.values().map(|&c| factorial(c)).product();
                    assert_eq!(s.annotation(), expect);
                }
            }
        }
    }

    #[test]
    fn e_star_examples() {
        assert_eq!(e_star_eval(2, &[2, 2, 1]).unwrap(), 12);
        assert_eq!(e_star_eval(3, &[0, 0, 0]).unwrap(), 0);
        assert_eq!(e_star_eval(1, &[4, 2, 1]).unwrap(), 7);
        assert_eq!(e_star_eval(0, &[5, 1]).unwrap(), 1);
        assert_eq!(
            e_star_eval(3, &[1, 1]),
            Err(Error::KExceedsVariables { k: 3, n: 2 })
        );
    }

    #[test]
    fn h_star_examples() {
        assert_eq!(h_star_eval(2, &[3, 2, 0]), 12);
        assert_eq!(h_star_eval(2, &[0, 0]), 0);
        assert_eq!(h_star_eval(1, &[4, 2, 1]), 7);
        assert_eq!(h_star_eval(0, &[2]), 1);
    }

    #[test]
    fn permutation_cycles_and_sign() {
        let support = [2, 4, 5, 6, 7, 9, 11, 12];
        let sigma = Permutation::from_cycles(
            &support,
            &[vec![6, 2, 4], vec![9, 5], vec![11, 7], vec![12]],
        )
        .unwrap();
        assert_eq!(sigma.cycle_maxima(), vec![6, 9, 11, 12]);
        assert_eq!(sigma.sign(), 1);
    }

    #[test]
    fn gamma_examples() {
        // Γ_σ(μ; 2,4,5,6,7,9,11,12) = μ̃₆ μ̃₉ μ̃₁₁ μ̃₁₂, here with μ̃ short.
        let mu = p(&[3, 2]);
        let support = [2, 4, 5, 6, 7, 9, 11, 12];
        let sigma = Permutation::from_cycles(
            &support,
            &[vec![6, 2, 4], vec![9, 5], vec![11, 7], vec![12]],
        )
        .unwrap();
        assert_eq!(gamma_statistic(&mu, &sigma), 0);

        let single = Permutation::identity(&[2]);
        assert_eq!(gamma_statistic(&mu, &single), 2);

        let id = Permutation::identity(&[1, 2]);
        assert_eq!(gamma_statistic(&mu, &id), 4);
    }

    #[test]
    fn parse_and_display() {
        let mu: Partition = "3,2".parse().unwrap();
        assert_eq!(mu, p(&[3, 2]));
        assert_eq!(mu.to_string(), "3,2");
        let empty: Partition = "".parse().unwrap();
        assert!(empty.is_empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }
}
