//! The free superalgebra on the generators e_{a,b} modulo supercommutator
//! relations: PBW normal forms, adjoint action, devirtualization onto words
//! in proper generators, and the action on the supersymmetric ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rat_frac, Rat};
use crate::superalgebra::{apply_word, Polarization, SuperPolynomial, Symbol};

/// An elementary generator e_{row,col}; its Z₂ parity is |row| + |col| in
/// Lie parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UGenerator {
    pub row: Symbol,
    pub col: Symbol,
}

impl UGenerator {
    pub fn new(row: Symbol, col: Symbol) -> Self {
        UGenerator { row, col }
    }

    /// Shorthand for the proper generator e_{x_i,x_j}.
    pub fn proper(i: u32, j: u32) -> Self {
        UGenerator::new(Symbol::Proper(i), Symbol::Proper(j))
    }

    pub fn parity(&self) -> bool {
        self.row.lie_parity() ^ self.col.lie_parity()
    }

    pub fn is_proper(&self) -> bool {
        self.row.is_proper() && self.col.is_proper()
    }

    /// True when the annihilated symbol is virtual.
    pub fn annihilates_virtual(&self) -> bool {
        self.col.is_virtual()
    }
}

impl fmt::Display for UGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row, self.col)
    }
}

/// A free word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UWord(pub Vec<UGenerator>);

impl UWord {
    pub fn one() -> Self {
        UWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_virtual(&self) -> bool {
        self.0
            .iter()
            .any(|g| g.row.is_virtual() || g.col.is_virtual())
    }

    /// Irregularity per the right-subsequence criterion: some right
    /// subsequence annihilates a virtual symbol more often than it was
    /// created strictly earlier.
    pub fn is_irregular(&self) -> bool {
        let mut created: BTreeMap<Symbol, i64> = BTreeMap::new();
        let mut annihilated: BTreeMap<Symbol, i64> = BTreeMap::new();
        for g in self.0.iter().rev() {
            if g.col.is_virtual() {
                let a = annihilated.entry(g.col).or_insert(0);
                *a += 1;
                if *a > created.get(&g.col).copied().unwrap_or(0) {
                    return true;
                }
            }
            if g.row.is_virtual() {
                *created.entry(g.row).or_insert(0) += 1;
            }
        }
        false
    }

    /// True when every virtual symbol is created and annihilated equally
    /// often in the whole word.
    pub fn virtual_counts_balanced(&self) -> bool {
        let mut net: BTreeMap<Symbol, i64> = BTreeMap::new();
        for g in &self.0 {
            if g.row.is_virtual() {
                *net.entry(g.row).or_insert(0) += 1;
            }
            if g.col.is_virtual() {
                *net.entry(g.col).or_insert(0) -= 1;
            }
        }
        net.values().all(|&v| v == 0)
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A rational combination of free words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<UWord, Rat>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        UElement::from_word(UWord::one(), Rat::from_integer(1.into()))
    }

    pub fn generator(g: UGenerator) -> Self {
        UElement::from_word(UWord(vec![g]), Rat::from_integer(1.into()))
    }

    pub fn from_word(w: UWord, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        UElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UWord, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn insert(&mut self, w: UWord, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UElement {
        UElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> UElement {
        if c.is_zero() {
            return UElement::zero();
        }
        UElement {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Free concatenation product.
    pub fn mul(&self, other: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.0.clone();
                w.extend_from_slice(&w2.0);
                out.insert(UWord(w), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", crate::rational::rat_to_string(c), w)?;
        }
        Ok(())
    }
}

/// [e_{a,b}, e_{c,d}] = δ_{bc} e_{a,d} − (−1)^{(|a|+|b|)(|c|+|d|)} δ_{ad} e_{c,b}.
pub fn supercommutator(g: UGenerator, h: UGenerator) -> UElement {
    let mut out = UElement::zero();
    if g.col == h.row {
        out.insert(
            UWord(vec![UGenerator::new(g.row, h.col)]),
            Rat::from_integer(1.into()),
        );
    }
    if g.row == h.col {
        let sign = if g.parity() && h.parity() { 1 } else { -1 };
        out.insert(
            UWord(vec![UGenerator::new(h.row, g.col)]),
            Rat::from_integer(sign.into()),
        );
    }
    out
}

/// Adjoint action of a proper generator, extended as a derivation over word
/// factors. Proper generators are even, so no Koszul signs arise.
pub fn ad(g: UGenerator, u: &UElement) -> Result<UElement> {
    if !g.is_proper() {
        return Err(Error::InvalidSpec(format!(
            "adjoint action only for proper generators, got {g}"
        )));
    }
    let mut out = UElement::zero();
    for (w, c) in u.terms() {
        for i in 0..w.0.len() {
            let bracket = supercommutator(g, w.0[i]);
            for (bw, bc) in bracket.terms() {
                let mut nw = Vec::with_capacity(w.0.len());
                nw.extend_from_slice(&w.0[..i]);
                nw.extend_from_slice(&bw.0);
                nw.extend_from_slice(&w.0[i + 1..]);
                out.insert(UWord(nw), c.clone() * bc.clone());
            }
        }
    }
    Ok(out)
}

/// Generator order used by devirtualization: every generator that
/// annihilates a virtual symbol sorts strictly after all others; within each
/// class the order is (row, col) lexicographic, which makes pure proper
/// words come out row-major.
pub fn devirtualization_order(a: &UGenerator, b: &UGenerator) -> Ordering {
    (a.annihilates_virtual(), a.row, a.col).cmp(&(b.annihilates_virtual(), b.row, b.col))
}

/// Rewrites `u` into PBW normal form for the given total order: every word
/// weakly increasing, adjacent out-of-order pairs eliminated through the
/// supercommutator, squares of odd generators through the ½[g,g] rule.
/// Terminates because each step either lowers the word degree or the
/// inversion count at fixed degree.
pub fn pbw_normal_form<F>(u: &UElement, order: F) -> UElement
where
    F: Fn(&UGenerator, &UGenerator) -> Ordering,
{
    let mut done = UElement::zero();
    let mut work: BTreeMap<UWord, Rat> = u.terms.clone();
    while let Some((word, coeff)) = work.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let mut reduced_at = None;
        for i in 0..word.0.len().saturating_sub(1) {
            let (g, h) = (word.0[i], word.0[i + 1]);
            if order(&g, &h) == Ordering::Greater || (g == h && g.parity()) {
                reduced_at = Some(i);
                break;
            }
        }
        let Some(i) = reduced_at else {
            done.insert(word, coeff);
            continue;
        };
        let (g, h) = (word.0[i], word.0[i + 1]);
        let mut push = |w: UWord, c: Rat| {
            if c.is_zero() {
                return;
            }
            match work.entry(w) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get().clone() + c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        };
        if g == h {
            // Square of an odd generator: gg = ½[g,g].
            let bracket = supercommutator(g, g);
            for (bw, bc) in bracket.terms() {
                let mut nw = Vec::with_capacity(word.0.len() - 1);
                nw.extend_from_slice(&word.0[..i]);
                nw.extend_from_slice(&bw.0);
                nw.extend_from_slice(&word.0[i + 2..]);
                push(UWord(nw), coeff.clone() * bc.clone() * rat_frac(1, 2));
            }
            continue;
        }
        // gh = (−1)^{|g||h|} hg + [g,h].
        let mut swapped = word.0.clone();
        swapped.swap(i, i + 1);
        let sign = if g.parity() && h.parity() {
            -coeff.clone()
        } else {
            coeff.clone()
        };
        push(UWord(swapped), sign);
        let bracket = supercommutator(g, h);
        for (bw, bc) in bracket.terms() {
            let mut nw = Vec::with_capacity(word.0.len() - 1);
            nw.extend_from_slice(&word.0[..i]);
            nw.extend_from_slice(&bw.0);
            nw.extend_from_slice(&word.0[i + 2..]);
            push(UWord(nw), coeff.clone() * bc.clone());
        }
    }
    done
}

/// The devirtualization image: normal-orders with all virtual annihilators
/// pushed right and keeps the pure proper words. Irregular input words are
/// dropped outright (they act as zero); words whose virtual counts do not
/// balance and are not irregular lie detectably outside the virtual algebra
/// and are rejected.
pub fn devirtualize(u: &UElement) -> Result<UElement> {
    let mut regular = UElement::zero();
    for (w, c) in u.terms() {
        if w.is_irregular() {
            continue;
        }
        if !w.virtual_counts_balanced() {
            return Err(Error::OutsideVirtualAlgebra(w.to_string()));
        }
        regular.insert(w.clone(), c.clone());
    }
    let normal = pbw_normal_form(&regular, devirtualization_order);
    let mut out = UElement::zero();
    for (w, c) in normal.terms() {
        if !w.contains_virtual() {
            out.insert(w.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Acts on the supersymmetric ring: each generator e_{a,b} acts as the
/// superpolarization D_{a,b}, words act rightmost factor first.
pub fn act_on_module(u: &UElement, p: &SuperPolynomial) -> Result<SuperPolynomial> {
    let ring = p.ring();
    for (w, _) in u.terms() {
        for g in &w.0 {
            ring.check_symbol(g.row)?;
            ring.check_symbol(g.col)?;
        }
    }
    let mut out = SuperPolynomial::zero(ring);
    for (w, c) in u.terms() {
        let ops: Vec<Polarization> = w
            .0
            .iter()
            .map(|g| Polarization::new(g.row, g.col))
            .collect();
        out = out.add(&apply_word(&ops, p).scale(c));
    }
    Ok(out)
}

/// Column determinant of a square matrix with noncommutative entries:
/// Σ_σ (−1)^{|σ|} a_{σ(1),1} a_{σ(2),2} ⋯ a_{σ(n),n}.
pub fn cdet(matrix: &[Vec<UElement>]) -> UElement {
    signed_column_expansion(matrix, true)
}

/// Column permanent: Σ_σ a_{σ(1),1} a_{σ(2),2} ⋯ a_{σ(n),n}.
pub fn cper(matrix: &[Vec<UElement>]) -> UElement {
    signed_column_expansion(matrix, false)
}

fn signed_column_expansion(matrix: &[Vec<UElement>], signed: bool) -> UElement {
    use itertools::Itertools;
    let n = matrix.len();
    let mut out = UElement::zero();
    for sigma in (0..n).permutations(n) {
        let mut term = UElement::one();
        for (col, &row) in sigma.iter().enumerate() {
            term = term.mul(&matrix[row][col]);
        }
        if signed {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if sigma[i] > sigma[j] {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 1 {
                term = term.neg();
            }
        }
        out = out.add(&term);
    }
    out
}

/// Entry e_{x_i,x_j} + shift·δ_{ij}, the affine entries of the classical
/// determinantal and permanental matrices.
pub fn affine_entry(i: u32, j: u32, shift: i64) -> UElement {
    let mut e = UElement::generator(UGenerator::proper(i, j));
    if i == j && shift != 0 {
        e = e.add(&UElement::from_word(
            UWord::one(),
            Rat::from_integer(shift.into()),
        ));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn a(i: u32) -> Symbol {
        Symbol::PositiveVirtual(i)
    }
    fn b(i: u32) -> Symbol {
        Symbol::NegativeVirtual(i)
    }
    fn x(i: u32) -> Symbol {
        Symbol::Proper(i)
    }
    fn e(r: Symbol, c: Symbol) -> UGenerator {
        UGenerator::new(r, c)
    }

    #[test]
    fn supercommutator_examples() {
        // [e_{x₁,α}, e_{α,x₂}] = e_{x₁,x₂}: only the δ_{bc} term fires.
        let got = supercommutator(e(x(1), a(1)), e(a(1), x(2)));
        assert_eq!(got, UElement::generator(e(x(1), x(2))));

        // [e_{x₁,α}, e_{α,x₁}] = e_{x₁,x₁} + e_{α,α}: both deltas fire and
        // the factors are odd, so the second term comes in with +.
        let got = supercommutator(e(x(1), a(1)), e(a(1), x(1)));
        let expected = UElement::generator(e(x(1), x(1))).add(&UElement::generator(e(a(1), a(1))));
        assert_eq!(got, expected);

        // Disjoint proper generators commute.
        let got = supercommutator(e(x(1), x(2)), e(x(3), x(3)));
        assert!(got.is_zero());
    }

    #[test]
    fn pbw_sorted_word_is_fixed() {
        let w = UElement::from_word(UWord(vec![e(x(1), x(1)), e(x(1), x(2))]), rat(1));
        assert_eq!(pbw_normal_form(&w, devirtualization_order), w);
    }

    #[test]
    fn pbw_anticommuting_swap() {
        // e_{x₂,α} e_{x₁,α}: both odd, commutator vanishes, so the normal
        // form is the swapped word with sign −1.
        let w = UElement::from_word(UWord(vec![e(x(2), a(1)), e(x(1), a(1))]), rat(1));
        let expected =
            UElement::from_word(UWord(vec![e(x(1), a(1)), e(x(2), a(1))]), rat(-1));
        assert_eq!(pbw_normal_form(&w, devirtualization_order), expected);
    }

    #[test]
    fn odd_generator_square_vanishes() {
        let w = UElement::from_word(UWord(vec![e(x(1), a(1)), e(x(1), a(1))]), rat(1));
        assert!(pbw_normal_form(&w, devirtualization_order).is_zero());
    }

    #[test]
    fn ad_examples() {
        // ad(e_{x_i,x_j})(e_{x_h,α}) = δ_{jh} e_{x_i,α}
        let got = ad(e(x(1), x(2)), &UElement::generator(e(x(2), a(1)))).unwrap();
        assert_eq!(got, UElement::generator(e(x(1), a(1))));
        let got = ad(e(x(1), x(2)), &UElement::generator(e(x(3), a(1)))).unwrap();
        assert!(got.is_zero());

        // ad(e_{x_i,x_j})(e_{α,x_k}) = −δ_{ki} e_{α,x_j}
        let got = ad(e(x(1), x(2)), &UElement::generator(e(a(1), x(1)))).unwrap();
        assert_eq!(got, UElement::generator(e(a(1), x(2))).neg());

        // ad(g)(1) = 0
        let got = ad(e(x(1), x(2)), &UElement::one()).unwrap();
        assert!(got.is_zero());

        assert!(ad(e(x(1), a(1)), &UElement::one()).is_err());
    }

    #[test]
    fn irregularity_detection() {
        // e_{x₁,α} annihilates α before any creation: irregular.
        assert!(UWord(vec![e(x(1), a(1))]).is_irregular());
        // e_{x₁,α} e_{α,x₁} creates α first (rightmost), then annihilates.
        assert!(!UWord(vec![e(x(1), a(1)), e(a(1), x(1))]).is_irregular());
        // Reversed order over-annihilates at the right end.
        assert!(UWord(vec![e(a(1), x(1)), e(x(1), a(1))]).is_irregular());
    }

    #[test]
    fn devirtualize_golden_third_example() {
        // 𝔭(e_{x₁,α₁} e_{x₂,α₂} e_{α₁,x₂} e_{α₂,x₁}) = −e₁₂e₂₁ + e₁₁ with
        // α₁, α₂ distinct positive virtual symbols.
        let word = UWord(vec![
            e(x(1), a(1)),
            e(x(2), a(2)),
            e(a(1), x(2)),
            e(a(2), x(1)),
        ]);
        let got = devirtualize(&UElement::from_word(word, rat(1))).unwrap();
        let expected = UElement::generator(e(x(1), x(2)))
            .mul(&UElement::generator(e(x(2), x(1))))
            .neg()
            .add(&UElement::generator(e(x(1), x(1))));
        let order = devirtualization_order;
        assert_eq!(
            pbw_normal_form(&got, order),
            pbw_normal_form(&expected, order)
        );
    }

    #[test]
    fn devirtualize_irregular_left_multiples_vanish() {
        // Any left multiple of the irregular word e_{x₁,α} lies in the
        // irregular ideal and maps to zero.
        let word = UWord(vec![e(x(2), x(1)), e(x(1), a(1))]);
        let got = devirtualize(&UElement::from_word(word, rat(1))).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn devirtualize_rejects_unmatched_creators() {
        // A lone creator is balanced-count-violating and not irregular:
        // detectably outside the virtual algebra.
        let word = UWord(vec![e(a(1), x(1))]);
        let got = devirtualize(&UElement::from_word(word, rat(1)));
        assert!(matches!(got, Err(Error::OutsideVirtualAlgebra(_))));
    }

    #[test]
    fn devirtualize_h2_of_2_is_column_determinant() {
        // 𝔭(e_{2,α}e_{1,α}e_{α,1}e_{α,2}) = cdet [[e₁₁+1, e₁₂], [e₂₁, e₂₂]].
        let word = UWord(vec![
            e(x(2), a(1)),
            e(x(1), a(1)),
            e(a(1), x(1)),
            e(a(1), x(2)),
        ]);
        let got = devirtualize(&UElement::from_word(word, rat(1))).unwrap();
        let matrix = vec![
            vec![affine_entry(1, 1, 1), affine_entry(1, 2, 0)],
            vec![affine_entry(2, 1, 0), affine_entry(2, 2, 0)],
        ];
        let expected = cdet(&matrix);
        let order = devirtualization_order;
        assert_eq!(
            pbw_normal_form(&got, order),
            pbw_normal_form(&expected, order)
        );
    }

    #[test]
    fn permanental_generators_are_even() {
        assert!(!e(x(1), b(1)).parity());
        assert!(e(x(1), a(1)).parity());
    }
}
