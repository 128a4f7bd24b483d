//! Exhaustive verification suites over bounded parameter ranges. Each
//! returns a [`Report`]; [`verify_all`] runs them together.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::dahecke::{self, HeckeElement, PsiModel};
use crate::error::Result;
use crate::grothendieck::{
    self, block_discipline, column_span_matches_tilde_v, graded_shifts, op_e_i, restrict_parabolic,
    tpc3_consistent, tpc3_split_e, CategAction, ClassVector, ParabolicRestriction,
};
use crate::laurent::LaurentInt;
use crate::qmodules::{
    build_tilde_v, singular_vectors, submodule_closure, verify_relations, wedge_closure_mismatches, wedge_rep,
    Coproduct, COPRODUCT,
};
use crate::report::Report;
use crate::tableaux::{count_semistandard, Multipartition, Partition, Tableau};
use crate::weights::{
    adjunction_shift, all_labels, casimir_eigenvalue, compositions, count_c, dominance_leq, inverse_dominance_leq,
    phi, phi_tuple, plus_i, xi_classes, GlWeight, SlkWeight,
};

/// Closure of the highest-weight line of `Ṽ(λ)` has dimension `|St^λ(I)|`,
/// for `|λ| ≤ max_size`, `2 ≤ k ≤ max_k`, parts `≤ k - 1`.
pub fn lemma22(max_size: usize, max_k: usize) -> Result<Report> {
    let mut rep = Report::new();
    for k in 2..=max_k {
        for n in 0..=max_size {
            for lam in Partition::all_of(n).into_iter().filter(|p| p.max_part() < k) {
                let m = build_tilde_v::<LaurentInt>(&lam.slk_weight(k)?, k)?;
                let top = singular_vectors(&m, &SlkWeight::of_partition(&lam, k));
                let dim = submodule_closure(&m, &top).module.dim();
                let want = count_semistandard(&lam, k);
                rep.push_detail(
                    format!("k={k} λ={lam}"),
                    top.len() == 1 && dim == want,
                    format!("singular {} closure {dim} tableaux {want}", top.len()),
                );
            }
        }
    }
    Ok(rep)
}

/// The tensor action on expanded wedges matches the explicit wedge action
/// for `k ≤ max_k`, `r ≤ max_r`; the wedge modules satisfy the relations.
pub fn wedge_closure(max_k: usize, max_r: usize) -> Result<Report> {
    let mut rep = Report::new();
    for k in 2..=max_k {
        for r in 1..=max_r.min(k - 1) {
            let bad = wedge_closure_mismatches::<LaurentInt>(k, r, COPRODUCT)?;
            rep.push_detail(format!("k={k} r={r} closes"), bad.is_empty(), format!("{} mismatches", bad.len()));
            let w = wedge_rep::<LaurentInt>(k, r)?;
            rep.push(format!("k={k} r={r} relations"), verify_relations(&w).passed());
        }
    }
    if max_k >= 3 {
        let bad = wedge_closure_mismatches::<LaurentInt>(3, 2, Coproduct::Opposite)?;
        rep.push("opposite coproduct is rejected", !bad.is_empty());
    }
    Ok(rep)
}

fn hecke_monomials(r: usize, max_deg: u32) -> Vec<HeckeElement> {
    let mut alphas: Vec<Vec<u32>> = vec![vec![0; r]];
    for _ in 0..max_deg {
        let mut next = alphas.clone();
        for a in &alphas {
            for h in 0..r {
                let mut b = a.clone();
                b[h] += 1;
                if !next.contains(&b) {
                    next.push(b);
                }
            }
        }
        alphas = next;
    }
    let perms: Vec<Vec<usize>> = itertools::Itertools::permutations(0..r, r).collect();
    alphas
        .iter()
        .flat_map(|a| perms.iter().map(move |w| HeckeElement::monomial(a.clone(), w.clone(), 1)))
        .collect()
}

/// Relations of the degenerate affine Hecke algebra on `Ψ` for `n ≤ max_n`,
/// `r ≤ max_r`, `c ∈ cs`; multiplicativity of `Ψ` on generators times
/// monomials of degree `≤ 1`; the printed orientation of the cross
/// relation fails at `(2, 2, 0)`.
pub fn hecke(max_n: usize, max_r: usize, cs: &[i64]) -> Result<Report> {
    let mut rep = Report::new();
    for n in 1..=max_n {
        for r in 1..=max_r {
            for &c in cs {
                let model = PsiModel::new(n, r, c);
                let report = dahecke::verify_dahecke_relations(&model);
                rep.push(format!("n={n} r={r} c={c} relations"), report.passed());
                let mut gens: Vec<HeckeElement> = (1..=r).map(|h| HeckeElement::x(r, h)).collect();
                gens.extend((1..r).map(|j| HeckeElement::t(r, j)));
                let mut hom = true;
                for g in &gens {
                    let mg = model.matrix_of(g);
                    for z in hecke_monomials(r, 1) {
                        let prod = g.mul(&z, dahecke::DEFAULT_DEGREE_CAP)?;
                        hom &= model.matrix_of(&prod) == mg.mul(&model.matrix_of(&z));
                    }
                }
                rep.push(format!("n={n} r={r} c={c} homomorphism"), hom);
            }
        }
    }
    if max_n >= 2 && max_r >= 2 && cs.contains(&0) {
        let report = dahecke::verify_dahecke_relations(&PsiModel::new(2, 2, 0));
        rep.push("printed orientation fails at (2,2,0)", !report.orientation_holds(1));
        rep.push("oracle orientation holds at (2,2,0)", report.orientation_holds(dahecke::CROSS_SIGN));
    }
    Ok(rep)
}

/// `sl_k` relations on Verma classes and agreement with `V^{⊗n}` at `q = 1`.
pub fn slk_action(max_n: usize, max_k: usize) -> Report {
    let mut rep = Report::new();
    for n in 1..=max_n {
        for k in 2..=max_k {
            rep.push(format!("n={n} k={k} action"), grothendieck::verify_slk_action(n, k).passed());
            rep.push(format!("n={n} k={k} iso to tensor"), grothendieck::iso_to_tensor(n, k).passed());
        }
    }
    rep
}

/// Block discipline of `[F_i]` and the weight step of the Casimir
/// eigenvalue, exhaustively over `I^n`.
pub fn blocks(max_n: usize, max_k: usize) -> Result<Report> {
    let mut rep = Report::new();
    for n in 1..=max_n {
        for k in 2..=max_k {
            let mut ok = true;
            for a in all_labels(n, k) {
                ok &= block_discipline(&a, k);
                let pa = phi(&a, k)?;
                for l in 1..=n {
                    let i = casimir_eigenvalue(&a, l)?;
                    if i < k as i64 {
                        let mut b = a.0.clone();
                        b[l - 1] += 1;
                        ok &= phi(&GlWeight(b), k)? == pa.minus(&SlkWeight::simple_root(k, i as usize));
                    }
                }
            }
            rep.push(format!("n={n} k={k}"), ok);
        }
    }
    Ok(rep)
}

/// Checks on one parabolic restriction: invariance of the column-strict
/// span, stability of the semistandard span, the relations, a 1-dim top
/// weight space, the semistandard character, and for a single component
/// the comparison with `Ṽ(λ)` and, for `λ = (r)`, with the wedge module.
pub fn parabolic_report(res: &ParabolicRestriction) -> Result<Report> {
    let k = res.k;
    let mut rep = Report::new();
    rep.push("column span invariant", res.column_span_invariant);
    rep.push("semistandard span stable", res.projection_bijective);
    rep.push("relations", verify_relations(&res.semistandard).passed());
    let comps = res.shape.components();
    let mut top = SlkWeight::zero(k);
    for lam in comps {
        top = top.plus(&SlkWeight::of_partition(lam, k));
    }
    rep.push("top weight space", res.semistandard.weight_space(&top).len() == 1);
    let mut want = BTreeMap::new();
    for t in crate::tableaux::enumerate_semistandard_multi(&res.shape, k) {
        *want.entry(phi(&GlWeight(t.reading_word()), k)?).or_insert(0) += 1;
    }
    rep.push("character", res.semistandard.character() == want);
    if let [lam] = comps {
        if lam.max_part() < k {
            rep.push("column span is Ṽ(λ)", column_span_matches_tilde_v(res, lam)?);
        }
        if lam.len() == 1 && lam.max_part() < k {
            let w = wedge_rep::<LaurentInt>(k, lam.max_part())?.specialize_q1();
            let w = w.map_scalars(|c| BigRational::from_integer(c.clone()));
            rep.push("equals wedge", w.e == res.semistandard.e && w.f == res.semistandard.f);
        }
    }
    Ok(rep)
}

/// The parabolic restriction for `|λ| ≤ max_size`, parts `≤ k ≤ max_k`.
pub fn parabolic(max_size: usize, max_k: usize) -> Result<Report> {
    let mut rep = Report::new();
    for k in 2..=max_k {
        for n in 1..=max_size {
            for lam in Partition::all_of(n).into_iter().filter(|p| p.max_part() <= k) {
                let res = restrict_parabolic(&Multipartition::new(vec![lam.clone()]), k)?;
                rep.extend(&format!("k={k} λ={lam} "), parabolic_report(&res)?);
            }
        }
    }
    Ok(rep)
}

/// Inverse dominance is a preorder on `φ`-tuples of each orbit; `p` is
/// monotone along simple reflections; the TPC3 split regroups `[F_i]` and
/// `[E_i]` by Levi blocks. Over `I^n`, `n ≤ max_n`, `k = 3`.
pub fn tensor_product_axioms(max_n: usize) -> Result<Report> {
    let k = 3;
    let mut rep = Report::new();
    for n in 1..=max_n {
        let labels = all_labels(n, k);
        for levi in compositions(n) {
            let name = format!("n={n} levi={levi:?}");
            let mut orbits: BTreeMap<SlkWeight, Vec<Vec<SlkWeight>>> = BTreeMap::new();
            for a in &labels {
                let t = phi_tuple(a, &levi, k)?;
                let v = orbits.entry(phi(a, k)?).or_default();
                if !v.contains(&t) {
                    v.push(t);
                }
            }
            let mut preorder = true;
            for tuples in orbits.values() {
                for x in tuples {
                    preorder &= inverse_dominance_leq(x, x)?;
                    for y in tuples {
                        if !inverse_dominance_leq(x, y)? {
                            continue;
                        }
                        for z in tuples {
                            if inverse_dominance_leq(y, z)? {
                                preorder &= inverse_dominance_leq(x, z)?;
                            }
                        }
                    }
                }
            }
            rep.push(format!("{name} preorder"), preorder);

            let mut block_of = Vec::new();
            for (j, &len) in levi.iter().enumerate() {
                block_of.extend(std::iter::repeat(j).take(len));
            }
            let mut monotone = true;
            let mut xi_cache: BTreeMap<GlWeight, _> = BTreeMap::new();
            for a in &labels {
                let d = crate::weights::dominant_rep(a);
                if !xi_cache.contains_key(&d) {
                    xi_cache.insert(d.clone(), xi_classes(&d, &levi)?);
                }
                let xi = &xi_cache[&d];
                for h in 0..n - 1 {
                    if a.0[h] < a.0[h + 1] {
                        continue;
                    }
                    let mut s = a.0.clone();
                    s.swap(h, h + 1);
                    let s = GlWeight(s);
                    let (ps, pa) = (xi.project(&s).expect("orbit"), xi.project(a).expect("orbit"));
                    if block_of[h] == block_of[h + 1] {
                        monotone &= ps == pa;
                    } else {
                        monotone &= inverse_dominance_leq(&phi_tuple(&s, &levi, k)?, &phi_tuple(a, &levi, k)?)?;
                        monotone &= xi.leq(ps, pa);
                    }
                }
            }
            rep.push(format!("{name} p monotone"), monotone);

            let mut split_ok = true;
            for b in &labels {
                for i in 1..k as i64 {
                    split_ok &= tpc3_consistent(b, &levi, i, k)?;
                    let mut total = ClassVector::new();
                    for g in tpc3_split_e(b, &levi, i, k)? {
                        total.add_all(&g);
                    }
                    split_ok &= total == op_e_i(b, i, k);
                }
            }
            rep.push(format!("{name} tpc3 split"), split_ok);
        }
        // the Ξ order is a partial order on each orbit
        let mut partial = true;
        for d in all_labels(n, k).into_iter().filter(|a| *a == crate::weights::dominant_rep(a)) {
            let xi = xi_classes(&d, &vec![1; n])?;
            for i in 0..xi.classes.len() {
                for j in 0..xi.classes.len() {
                    if i != j && xi.leq(i, j) && xi.leq(j, i) {
                        partial = false;
                    }
                    let lhs = dominance_leq(&xi.classes[i].representative, &xi.classes[j].representative)?;
                    partial &= lhs == xi.leq(i, j);
                }
            }
        }
        rep.push(format!("n={n} dominance antisymmetric"), partial);
    }
    Ok(rep)
}

/// `K_exp` against `h_i` and `(φ(a), α_i)`; the count shift of `(+i)` and
/// the adjunction arithmetic, over `I^n`.
pub fn graded(max_n: usize, max_k: usize) -> Result<Report> {
    let mut rep = Report::new();
    for n in 1..=max_n {
        for k in 2..=max_k {
            let act = (n <= 4).then(|| CategAction::new(n, k));
            let mut ok_h = true;
            let mut ok_count = true;
            let mut ok_adj = true;
            for (idx, d) in all_labels(n, k).iter().enumerate() {
                for i in 1..k as i64 {
                    let s = graded_shifts(d, i);
                    ok_h &= s.k_exp == phi(d, k)?.pair_root(i as usize);
                    if let Some(act) = &act {
                        ok_h &= BigInt::from(s.k_exp) == act.h(i as usize)[idx];
                    }
                    ok_adj &= s.adj_shift == adjunction_shift(d, i);
                    if let Some(p) = plus_i(d, i) {
                        ok_count &= count_c(&p, i + 1) == count_c(d, i + 1) + 1;
                        let lhs = count_c(d, i) - count_c(&p, i + 1) - 1 + 2;
                        ok_adj &= lhs == count_c(d, i) - count_c(d, i + 1);
                    }
                }
            }
            rep.push(format!("n={n} k={k} K exponent"), ok_h);
            rep.push(format!("n={n} k={k} count shift"), ok_count);
            rep.push(format!("n={n} k={k} adjunction"), ok_adj);
        }
    }
    Ok(rep)
}

/// The two worked tableaux.
pub fn fixtures() -> Result<Report> {
    let mut rep = Report::new();
    let cases: [(&[usize], &[i64], bool); 2] = [
        (&[3, 3, 1], &[1, 2, 3, 4, 5, 6, 7], false),
        (&[3, 3, 2, 1], &[3, 2, 1, 4, 3, 2, 2, 1, 3], true),
    ];
    for (parts, a, column_strict) in cases {
        let lam = Partition::new(parts.to_vec())?;
        let t = Tableau::fill(&lam, a)?;
        rep.push(format!("{lam} round trip"), t.reading_word() == a);
        rep.push(format!("{lam} column-strict = {column_strict}"), t.is_column_strict() == column_strict);
    }
    Ok(rep)
}

/// Every suite with `n`-like bounds capped by `max_n` and ranks by `max_k`.
pub fn verify_all(max_n: usize, max_k: usize) -> Result<Report> {
    let mut rep = Report::new();
    rep.extend("lemma22 ", lemma22(max_n.min(6), max_k.min(5))?);
    rep.extend("wedge ", wedge_closure(max_k.min(5), 3)?);
    rep.extend("hecke ", hecke(max_n.min(3), max_n.min(3), &[0, 1, 2])?);
    rep.extend("slk ", slk_action(max_n.min(4), max_k.min(4)));
    rep.extend("blocks ", blocks(max_n.min(5), max_k.min(4))?);
    rep.extend("parabolic ", parabolic(max_n.min(6), max_k.min(4))?);
    rep.extend("tpc ", tensor_product_axioms(max_n.min(5))?);
    rep.extend("graded ", graded(max_n.min(5), max_k.min(4))?);
    rep.extend("fixtures ", fixtures()?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(lemma22(3, 3).unwrap().passed());
        assert!(wedge_closure(3, 2).unwrap().passed());
        assert!(hecke(2, 2, &[0, 1]).unwrap().passed());
        assert!(slk_action(2, 3).passed());
        assert!(blocks(3, 3).unwrap().passed());
        assert!(parabolic(3, 3).unwrap().passed());
        assert!(tensor_product_axioms(3).unwrap().passed());
        assert!(graded(3, 3).unwrap().passed());
        assert!(fixtures().unwrap().passed());
    }

    #[test]
    fn monomials_count() {
        assert_eq!(hecke_monomials(2, 1).len(), 3 * 2);
    }
}
