//! Property tests for the algebraic identities: superalgebra axioms, the
//! Leibniz and supercommutator laws, Laplace expansions, bitableau action
//! formulas, straightening triangularity, and shifted-symmetry.

use proptest::prelude::*;

use capelli::enveloping::{
    act_on_module, devirtualization_order, pbw_normal_form, supercommutator, UElement, UGenerator,
    UWord,
};
use capelli::partitions::{partitions_up_to, Partition};
use capelli::rational::{rat, Rat};
use capelli::shifted::{e_star_poly, h_star_poly, s_star_poly, ShiftedPolynomial,
    SchurIndexConvention};
use capelli::superalgebra::{
    apply_word, polarize, Polarization, Ring, SuperPolynomial, Symbol, Variable,
};
use capelli::tableaux::{
    bitableau_value, biproduct, is_standard_place, is_superstandard, straighten,
    straightening_leq, Tableau,
};

const RING: Ring = Ring {
    even_virtuals: 2,
    odd_virtuals: 1,
    proper: 2,
    places: 3,
};

fn symbol_strategy() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        (1u32..=2).prop_map(Symbol::PositiveVirtual),
        Just(Symbol::NegativeVirtual(1)),
        (1u32..=2).prop_map(Symbol::Proper),
    ]
}

fn variable_strategy() -> impl Strategy<Value = Variable> {
    (symbol_strategy(), 1u32..=3).prop_map(|(s, j)| Variable::new(s, j))
}

fn monomial_strategy(max_len: usize) -> impl Strategy<Value = SuperPolynomial> {
    (
        proptest::collection::vec(variable_strategy(), 0..=max_len),
        -3i64..=3,
    )
        .prop_map(|(vars, c)| {
            SuperPolynomial::from_factors(RING, &vars, rat(if c == 0 { 1 } else { c }))
                .expect("in ring")
        })
}

fn poly_strategy() -> impl Strategy<Value = SuperPolynomial> {
    proptest::collection::vec(monomial_strategy(4), 1..=3).prop_map(|ms| {
        ms.into_iter()
            .fold(SuperPolynomial::zero(RING), |acc, m| acc.add(&m))
    })
}

fn polarization_strategy() -> impl Strategy<Value = Polarization> {
    (symbol_strategy(), symbol_strategy()).prop_map(|(a, b)| Polarization::new(a, b))
}

fn generator_strategy() -> impl Strategy<Value = UGenerator> {
    (symbol_strategy(), symbol_strategy()).prop_map(|(a, b)| UGenerator::new(a, b))
}

fn lie_parity_word(word: &[Symbol]) -> bool {
    word.iter().filter(|z| z.lie_parity()).count() % 2 == 1
}

/// d_{z,z'} on a letter word in Super[W]: the signed sum of single-letter
/// replacements, the independent oracle for the equivariance law.
fn polarize_symbol_word(
    target: Symbol,
    source: Symbol,
    word: &[Symbol],
) -> Vec<(i64, Vec<Symbol>)> {
    let d_odd = target.lie_parity() ^ source.lie_parity();
    let mut out = Vec::new();
    for (i, &z) in word.iter().enumerate() {
        if z == source {
            let mut replaced = word.to_vec();
            replaced[i] = target;
            let sign = if d_odd && lie_parity_word(&word[..i]) {
                -1
            } else {
                1
            };
            out.push((sign, replaced));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(
        p in poly_strategy(),
        q in poly_strategy(),
        r in poly_strategy(),
    ) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn generators_supercommute(
        a in variable_strategy(),
        b in variable_strategy(),
    ) {
        let pa = SuperPolynomial::from_factors(RING, &[a], rat(1)).unwrap();
        let pb = SuperPolynomial::from_factors(RING, &[b], rat(1)).unwrap();
        let left = pa.mul(&pb);
        let mut right = pb.mul(&pa);
        if a.is_odd() && b.is_odd() {
            right = right.neg();
        }
        prop_assert_eq!(left, right);
    }

    #[test]
    fn polarization_satisfies_super_leibniz(
        d in polarization_strategy(),
        p in monomial_strategy(3),
        q in monomial_strategy(2),
    ) {
        // D(PQ) = D(P)Q + (−1)^{|D||P|} P D(Q) for homogeneous P.
        let lhs = polarize(d, &p.mul(&q));
        let p_odd = p
            .terms()
            .next()
            .map(|(m, _)| m.factors().iter().filter(|v| v.is_odd()).count() % 2 == 1)
            .unwrap_or(false);
        let mut second = p.mul(&polarize(d, &q));
        if d.parity() && p_odd {
            second = second.neg();
        }
        let rhs = polarize(d, &p).mul(&q).add(&second);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_supercommutator_law(
        g in generator_strategy(),
        h in generator_strategy(),
        p in poly_strategy(),
    ) {
        // Acting with D_g D_h − (−1)^{|g||h|} D_h D_g equals acting with the
        // supercommutator [g,h], transported through the representation.
        let dg = Polarization::new(g.row, g.col);
        let dh = Polarization::new(h.row, h.col);
        let gh = polarize(dg, &polarize(dh, &p));
        let hg = polarize(dh, &polarize(dg, &p));
        let lhs = if g.parity() && h.parity() {
            gh.add(&hg)
        } else {
            gh.sub(&hg)
        };
        let rhs = act_on_module(&supercommutator(g, h), &p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pbw_normal_form_preserves_the_action(
        word in proptest::collection::vec(generator_strategy(), 0..=4),
        p in poly_strategy(),
    ) {
        let u = UElement::from_word(UWord(word), rat(1));
        let normal = pbw_normal_form(&u, devirtualization_order);
        let via_u = act_on_module(&u, &p).unwrap();
        let via_normal = act_on_module(&normal, &p).unwrap();
        prop_assert_eq!(via_u, via_normal);
    }

    #[test]
    fn laplace_expansion_in_places(
        word in proptest::collection::vec(symbol_strategy(), 0..=4),
        split in 0usize..=4,
    ) {
        // (ω|ϖ₁ϖ₂) = Σ_{(ω)} (−1)^{|ϖ₁||ω_{(2)}|} (ω_{(1)}|ϖ₁)(ω_{(2)}|ϖ₂)
        // with ϖ = 1..len split at `split`.
        let len = word.len();
        let split = split.min(len);
        let places: Vec<u32> = (1..=len as u32).collect();
        let lhs = biproduct(&word, &places, RING).unwrap();

        let mut rhs = SuperPolynomial::zero(RING);
        // Coproduct of ω: signed splittings of the letter positions.
        for mask in 0..(1u32 << len) {
            if (mask.count_ones() as usize) != split {
                continue;
            }
            let mut first = Vec::new();
            let mut second = Vec::new();
            let mut sign = 1i64;
            let mut odd_in_second = 0usize;
            for (i, &z) in word.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    // Letter moves to the first factor, crossing the odd
                    // letters already sent to the second factor.
                    if z.lie_parity() && odd_in_second % 2 == 1 {
                        sign = -sign;
                    }
                    first.push(z);
                } else {
                    if z.lie_parity() {
                        odd_in_second += 1;
                    }
                    second.push(z);
                }
            }
            // (−1)^{|ϖ₁||ω_{(2)}|}: ϖ₁ has `split` odd place letters.
            if split % 2 == 1 && lie_parity_word(&second) {
                sign = -sign;
            }
            let t1 = biproduct(&first, &places[..split], RING).unwrap();
            let t2 = biproduct(&second, &places[split..], RING).unwrap();
            rhs = rhs.add(&t1.mul(&t2).scale(&rat(sign)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplace_expansion_in_symbols(
        word in proptest::collection::vec(symbol_strategy(), 0..=4),
        split in 0usize..=4,
    ) {
        // (ω₁ω₂|ϖ) = Σ_{(ϖ)} (−1)^{|ϖ_{(1)}||ω₂|} (ω₁|ϖ_{(1)})(ω₂|ϖ_{(2)}).
        let len = word.len();
        let split = split.min(len);
        let (w1, w2) = word.split_at(split);
        let places: Vec<u32> = (1..=len as u32).collect();
        let lhs = biproduct(&word, &places, RING).unwrap();

        let mut rhs = SuperPolynomial::zero(RING);
        for mask in 0..(1u32 << len) {
            if (mask.count_ones() as usize) != split {
                continue;
            }
            let mut first = Vec::new();
            let mut second = Vec::new();
            let mut sign = 1i64;
            let mut in_second = 0usize;
            for (i, &j) in places.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    // Place letters are all odd in the exterior Hopf algebra.
                    if in_second % 2 == 1 {
                        sign = -sign;
                    }
                    first.push(j);
                } else {
                    in_second += 1;
                    second.push(j);
                }
            }
            if first.len() % 2 == 1 && lie_parity_word(w2) {
                sign = -sign;
            }
            let t1 = biproduct(w1, &first, RING).unwrap();
            let t2 = biproduct(w2, &second, RING).unwrap();
            rhs = rhs.add(&t1.mul(&t2).scale(&rat(sign)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polarization_biproduct_equivariance(
        word in proptest::collection::vec(symbol_strategy(), 0..=4),
        target in symbol_strategy(),
        source in symbol_strategy(),
    ) {
        // D_{z,z'}((ω|ϖ)) = (d_{z,z'}(ω)|ϖ).
        let places: Vec<u32> = (1..=word.len() as u32).collect();
        let value = biproduct(&word, &places, RING).unwrap();
        let lhs = polarize(Polarization::new(target, source), &value);
        let mut rhs = SuperPolynomial::zero(RING);
        for (sign, replaced) in polarize_symbol_word(target, source, &word) {
            rhs = rhs.add(&biproduct(&replaced, &places, RING).unwrap().scale(&rat(sign)));
        }
        prop_assert_eq!(lhs, rhs);
    }
}

fn small_symbol_tableaux(shape: &Partition, letters: &[Symbol]) -> Vec<Tableau<Symbol>> {
    capelli::tableaux::all_tableaux(shape, letters)
}

#[test]
fn row_action_formula_on_bitableaux() {
    // Polarizing a multi-row bitableau equals the signed row-by-row sum with
    // signs (−1)^{(|z|+|z'|)ε_s}, ε_s the Lie parity of the earlier rows.
    let letters = [
        Symbol::Proper(1),
        Symbol::Proper(2),
        Symbol::PositiveVirtual(1),
    ];
    let shape = Partition::new(vec![2, 1]).unwrap();
    let t = Tableau::new(vec![vec![1u32, 2], vec![1]]).unwrap();
    let polarizations = [
        Polarization::new(Symbol::PositiveVirtual(2), Symbol::Proper(2)),
        Polarization::new(Symbol::Proper(1), Symbol::Proper(2)),
        Polarization::new(Symbol::NegativeVirtual(1), Symbol::PositiveVirtual(1)),
    ];
    for s in small_symbol_tableaux(&shape, &letters) {
        let value = bitableau_value(&s, &t, RING).unwrap();
        for d in polarizations {
            let lhs = polarize(d, &value);
            let mut rhs = SuperPolynomial::zero(RING);
            let mut epsilon = false;
            for (row_index, row) in s.rows().iter().enumerate() {
                for (sign, replaced) in polarize_symbol_word(d.target, d.source, row) {
                    let mut rows = s.rows().to_vec();
                    rows[row_index] = replaced;
                    let changed = Tableau::new(rows).unwrap();
                    let mut coeff = rat(sign);
                    if d.parity() && epsilon {
                        coeff = -coeff;
                    }
                    rhs = rhs.add(&bitableau_value(&changed, &t, RING).unwrap().scale(&coeff));
                }
                epsilon ^= lie_parity_word(row);
            }
            assert_eq!(lhs, rhs, "row action for {s} under {d}");
        }
    }
}

#[test]
fn straightening_terms_dominate_the_input() {
    // Triangularity of the expansion: every standard key is ≥ the input
    // bitableau in the shape-lex / reverse row-word order.
    let letters = [
        Symbol::PositiveVirtual(1),
        Symbol::NegativeVirtual(1),
        Symbol::Proper(1),
        Symbol::Proper(2),
    ];
    for shape in [
        Partition::new(vec![2]).unwrap(),
        Partition::new(vec![1, 1]).unwrap(),
        Partition::new(vec![2, 1]).unwrap(),
    ] {
        let places: Vec<Tableau<u32>> = capelli::tableaux::all_tableaux(
            &shape,
            &(1..=3u32).collect::<Vec<_>>(),
        );
        for s in small_symbol_tableaux(&shape, &letters) {
            for t in &places {
                let value = bitableau_value(&s, t, RING).unwrap();
                if value.is_zero() {
                    continue;
                }
                let expansion = straighten(&value).unwrap();
                assert_eq!(expansion.expand(RING), value);
                for (bt, _) in &expansion.terms {
                    assert!(is_superstandard(&bt.left));
                    assert!(is_standard_place(&bt.right));
                    assert!(
                        straightening_leq((&s, t), (&bt.left, &bt.right)),
                        "key ({} | {:?}) does not dominate ({} | {:?})",
                        bt.left,
                        bt.right.rows(),
                        s,
                        t.rows()
                    );
                }
            }
        }
    }
}

#[test]
fn apply_word_composes_rightmost_first() {
    let d1 = Polarization::new(Symbol::Proper(1), Symbol::Proper(2));
    let d2 = Polarization::new(Symbol::Proper(2), Symbol::Proper(1));
    let p = SuperPolynomial::variable(RING, Symbol::Proper(1), 1).unwrap();
    let via_word = apply_word(&[d1, d2], &p);
    let stepwise = polarize(d1, &polarize(d2, &p));
    assert_eq!(via_word, stepwise);
}

#[test]
fn shifted_polynomials_pass_symmetry_predicate() {
    for n in 1..=3usize {
        for k in 0..=n {
            assert!(e_star_poly(k, n).unwrap().is_shifted_symmetric());
            assert!(h_star_poly(k, n).is_shifted_symmetric());
        }
    }
    for lambda in partitions_up_to(3, Some(2)) {
        let s = s_star_poly(&lambda, 2, SchurIndexConvention::ColumnIndexed).unwrap();
        assert!(s.is_shifted_symmetric(), "s*_{lambda}");
    }
}

#[test]
fn e_star_and_h_star_products_are_independent() {
    // Monomials in the generators up to degree 4 stay linearly independent:
    // the transported statement that each family generates freely.
    for n in 2..=3usize {
        for family in ["e", "h"] {
            let mut polys: Vec<ShiftedPolynomial> = Vec::new();
            for nu in partitions_up_to(4, Some(n as u32)) {
                let mut prod = ShiftedPolynomial::one(n);
                for &k in nu.parts() {
                    prod = prod.mul(&match family {
                        "e" => e_star_poly(k as usize, n).unwrap(),
                        _ => h_star_poly(k as usize, n),
                    });
                }
                polys.push(prod);
            }
            // Rank via pairwise elimination over the monomial support.
            let mut index = std::collections::BTreeMap::new();
            for p in &polys {
                for (e, _) in p.terms() {
                    let next = index.len();
                    index.entry(e.clone()).or_insert(next);
                }
            }
            let mut rows: Vec<Vec<Rat>> = vec![vec![rat(0); polys.len()]; index.len()];
            for (col, p) in polys.iter().enumerate() {
                for (e, c) in p.terms() {
                    rows[index[e]][col] = c.clone();
                }
            }
            // Full column rank means no nontrivial relation.
            let rank = {
                let mut m = rows.clone();
                let mut rank = 0usize;
                let cols = polys.len();
                for col in 0..cols {
                    let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != rat(0)) else {
                        continue;
                    };
                    m.swap(rank, pivot);
                    let inv = m[rank][col].clone();
                    for v in m[rank].iter_mut() {
                        *v = v.clone() / inv.clone();
                    }
                    for r in 0..m.len() {
                        if r != rank && m[r][col] != rat(0) {
                            let f = m[r][col].clone();
                            for c in col..cols {
                                let delta = f.clone() * m[rank][c].clone();
                                m[r][c] = m[r][c].clone() - delta;
                            }
                        }
                    }
                    rank += 1;
                }
                rank
            };
            assert_eq!(rank, polys.len(), "{family}* products dependent at n={n}");
        }
    }
}
