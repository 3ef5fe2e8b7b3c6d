//! The product of two projective bundles of binary forms, and the marked-point rings
//! obtained from it by a square root.

use super::{labelled, p};
use crate::catalog::chern::{chern_va, projective_polynomial};
use crate::catalog::formulas::dab;
use crate::catalog::rings::dab_pushforward;
use crate::catalog::tables;
use crate::catalog::wclass::{stratum_relations, w_class_in, w_class_restriction_in};
use crate::error::{Error, Result};
use crate::harness::relations::build_relations_dab;
use crate::harness::run::{Gens, Run};
use crate::poly::{polys, Polynomial, Table};
use crate::presentation::{congruence_componentwise, root_gerbe, SymmetricBasis};

pub fn thm_dab(run: &mut Run) -> Result<()> {
    let a = run.params.require("a")?;
    let b = run.params.require("b")?;
    dab::check(a, b)?;
    let t = tables::dab();
    let printed = build_relations_dab(a, b)?;
    let pushed = dab::pushforward_relations(a, b);
    let (pids, pgens) = labelled(&[], &printed);
    let (qids, qgens) = labelled(&[], &pushed);
    let printed_g = Gens::new(&t, pgens)?;
    let mut pushed_g = Gens::new(&t, qgens)?;
    run.ideal_equality(
        "printed relation list versus the pushforward formulas",
        ("printed", &pids, &printed_g),
        ("pushforward", &qids, &pushed_g),
    )?;
    printed_diagnostics(run, a, b, &mut pushed_g)?;
    if a % 2 == 0 && b % 2 == 0 {
        even_remark(run, a, b, &pushed_g)?;
    }
    for (k, var) in [(a, "xi2a"), (b, "xi2b")] {
        torus_route(run, a, b, k, var)?;
    }
    run.asserted(
        "completeness: no further relations from higher diagonal and mixed pushforwards",
        "that the pushforwards along the r-th diagonal and mixed maps for r >= 3 add nothing beyond this list rests \
         on the geometric induction over (a, b, r); it is not machine-checked here",
    );
    Ok(())
}

/// Checks tying the printed list to the pushforward formulas term by term.
fn printed_diagnostics(run: &mut Run, a: i64, b: i64, pushed: &mut Gens) -> Result<()> {
    let t = tables::dab();
    for (k, var, fa3) in [(a, "xi2a", "Fa3"), (b, "xi2b", "Fb3")] {
        let printed = build_relations_dab(a, b)?.into_iter().find(|f| f.id == fa3).expect("printed list");
        let swap = |s: String| if var == "xi2a" { s } else { s.replace("xi2a", var) };
        let f2 = p(&t, &swap(dab::f2_xi2sq(k)))?;
        let mut f1 = Gens::new(&t, vec![p(&t, "c1")?, p(&t, "2*c3")?, p(&t, &swap(dab::f1_one(k)))?, p(&t, &swap(dab::f1_tau(k)))?])?;
        run.congruent(
            format!("printed {fa3} agrees with the second diagonal pushforward modulo the first diagonal relations"),
            &mut f1,
            &printed.poly,
            &f2,
        )?;
    }
    let corrected = p(
        &t,
        &format!(
            "xi2a^2*xi2b^2 + c2*({}*xi2a^2 + {}*xi2b^2) - c2*({}*xi2a^2 + {}*xi2b^2) - {}*c2*xi2a*xi2b + c3*({b}*xi2a + {a}*xi2b) + {}*c2^2 - {}*c2^2",
            b * b,
            a * a,
            b * (2 * b - 1),
            a * (2 * a - 1),
            (2 * a - 1) * (2 * b - 1),
            a * a * b * b,
            a * b * (a + b - 1)
        ),
    )?;
    run.equal(
        "printed M5 with constant a^2 b^2 c2^2 in place of ab c2^2 is exactly the mixed pushforward of xi2^2",
        &corrected,
        &p(&t, &dab::m2_xi2sq(a, b))?,
    )?;
    run.member("printed M5 with constant a^2 b^2 c2^2 lies in the pushforward ideal", pushed, &corrected)?;
    Ok(())
}

/// When `a` and `b` are even, after inverting odd integers the ideal has the simpler
/// generators of the remark, the last of which is the mixed pushforward of 1 up to a unit.
fn even_remark(run: &mut Run, a: i64, b: i64, pushed: &Gens) -> Result<()> {
    let t = tables::dab();
    let loc = dab::localized_even_relations(a, b);
    let loc_g = Gens::new(&t, loc.clone())?;
    for r in &loc {
        run.member_localized(format!("even case: {r} lies in the pushforward ideal localized at 2"), pushed, r, true)?;
    }
    for f in dab::pushforward_relations(a, b) {
        run.member_localized(
            format!("even case: {} lies in the simplified ideal localized at 2", f.id),
            &loc_g,
            &f.poly,
            true,
        )?;
    }
    let others = Gens::new(&t, loc[..loc.len() - 1].to_vec())?;
    let m2 = p(&t, &dab::alpha2(a, b))?;
    let unit_xy = p(&t, &format!("{}*xi2a*xi2b", (2 * a - 1) * (2 * b - 1)))?;
    run.member_localized(
        "even case: the mixed pushforward of 1 is an odd multiple of xi2a xi2b modulo the other generators",
        &others,
        &(&m2 - &unit_xy),
        true,
    )?;
    Ok(())
}

fn var_index_name(var: &str) -> &'static str {
    if var == "xi2a" {
        "p_a"
    } else {
        "p_b"
    }
}

/// `p_k(var)` lies in the pushforward ideal: factor it on the stratum where `2 t3 = 0`,
/// multiply by `t1 t2`, and descend to symmetric coefficients.
fn torus_route(run: &mut Run, a: i64, b: i64, k: i64, var: &str) -> Result<()> {
    let name = var_index_name(var);
    let dt = tables::dab_torus();
    let i2: Vec<Polynomial> =
        dab::pushforward_relations(a, b).into_iter().map(|f| f.poly.embed(&dt)).collect::<Result<_>>()?;
    let ident = polys(&dt, &["c1 - t1 - t2 - t3", "c2 - t1*t2 - t1*t3 - t2*t3", "c3 - t1*t2*t3"]);
    let torus = polys(&dt, &["t1 + t2 + t3", "2*t1*t2*t3"]);
    let mut ext = i2.clone();
    ext.extend(ident.clone());
    ext.extend(torus.clone());
    let mut ext_g = Gens::new(&dt, ext.clone())?;

    let cv = chern_va(k as u32)?;
    let p_torus = projective_polynomial(&cv.torus, &dt, var)?;
    let p_sym = projective_polynomial(&cv.symmetric, &dt, var)?;
    run.congruent(
        format!("torus route {name}: torus-level and symmetric forms agree once c_i = e_i(t)"),
        &mut Gens::new(&dt, ident)?,
        &p_torus,
        &p_sym,
    )?;

    // On the stratum (0,0,2) the bundle is split by the coordinate hyperplanes.
    let stratum = [0, 0, 2];
    let mut strat = Gens::new(&dt, stratum_relations(&dt, stratum))?;
    let xi = Polynomial::var(&dt, var)?;
    let mut hyperplanes = Polynomial::one(&dt);
    let mut rest = Polynomial::one(&dt);
    for kk in crate::catalog::chern::compositions3(k as u32) {
        if kk[2] < 2 {
            let h = &xi - &crate::catalog::chern::weight_form(&dt, kk);
            hyperplanes = &hyperplanes * &h;
            if kk[0] >= 2 {
                rest = &rest * &h;
            }
        }
    }
    run.congruent(
        format!("torus route {name}: modulo 2 t3 it is the product of the coordinate hyperplanes"),
        &mut strat,
        &p_torus,
        &hyperplanes,
    )?;
    let w_restr = w_class_restriction_in(k as u32, 2, stratum, &dt, var)?;
    run.equal(
        format!("torus route {name}: the hyperplane product factors through the restriction of W(k;2,0)"),
        &hyperplanes,
        &(&w_restr * &rest),
    )?;
    let w = w_class_in(k as u32, 2, &dt, var)?;
    run.congruent(format!("torus route {name}: W(k;2,0) restricts as stated"), &mut strat, &w, &w_restr)?;
    run.member(format!("torus route {name}: W(k;2,0) lies in the extended ideal"), &mut ext_g, &w)?;
    let mut ext2 = ext.clone();
    ext2.push(p(&dt, "2*t3")?);
    run.member(
        format!("torus route {name}: lies in the extended ideal modulo 2 t3"),
        &mut Gens::new(&dt, ext2)?,
        &p_torus,
    )?;
    let t1t2 = p(&dt, "t1*t2")?;
    let lifted = &t1t2 * &p_torus;
    run.member(format!("torus route {name}: t1 t2 times it lies in the extended ideal"), &mut ext_g, &lifted)?;

    // Descent: the extended ideal is the direct sum of t^d times the symmetric ideal.
    let basis = SymmetricBasis::standard(3);
    let coeff = basis.coefficient_table(&dt)?;
    let i2_sym = crate::ideal::Ideal::new(
        &coeff,
        dab::pushforward_relations(a, b).into_iter().map(|f| f.poly.embed(&coeff)).collect::<Result<_>>()?,
    )?;
    let cong = congruence_componentwise(&lifted, &Polynomial::zero(&dt), &i2_sym, &basis)?;
    let comp = cong
        .components
        .iter()
        .find(|(d, _, _)| d == &vec![1u16, 1, 0])
        .map(|(_, c, _)| c.clone())
        .ok_or_else(|| Error::CatalogInconsistency(format!("{name}: no t1 t2 component")))?;
    let sym_in_coeff = p_sym.embed(&coeff)?;
    run.equal(format!("descent {name}: the t1 t2 component is the symmetric form"), &comp, &sym_in_coeff)?;
    let mut i2_g = Gens::new(&coeff, i2_sym.generators().to_vec())?;
    for (d, c, _) in &cong.components {
        run.member(format!("descent {name}: component t^{d:?} lies in the pushforward ideal"), &mut i2_g, c)?;
    }
    Ok(())
}

/// Odd genus with `n` marked points: a square root of `O(-xi2n - xi2b)` over the two-factor ring.
pub fn thm_rhgn(run: &mut Run) -> Result<()> {
    let g = run.params.require("g")?;
    let n = run.params.require("n")?;
    crate::catalog::formulas::odd::check(g)?;
    if !(n > 1 && 2 * n < g + 1) {
        return Err(Error::OutOfRange(format!("need 1 < n < (g+1)/2, got g = {g}, n = {n}")));
    }
    let (a, b) = (n, g + 1 - n);
    let base = dab_pushforward(a, b)?;
    run.note(
        "marked points: base ring",
        format!("two-factor ring with a = {a}, b = {b}, relations from the pushforward formulas"),
    );
    let c1 = p(base.table(), "-xi2a - xi2b")?;
    let rh = root_gerbe(&base, &c1, 2, "t")?;
    let rt: Table = rh.table().clone();
    let appended = rh.relations().last().cloned().expect("root relation");
    run.equal(
        "marked points: the square root appends xi2n + xi2(g+1-n) + 2t",
        &appended,
        &p(&rt, "xi2a + xi2b + 2*t")?,
    )?;
    let carried: Vec<Polynomial> = base.relations().iter().map(|r| r.embed(&rt)).collect::<Result<_>>()?;
    let same = rh.relations()[..carried.len()] == carried[..];
    run.push(
        "marked points: the base relations are carried over unchanged",
        crate::harness::report::Verdict::from_bool(same),
        crate::harness::report::Witness::Note { text: format!("{} base relations", carried.len()) },
    );
    run.groups_info("marked points: graded groups of the final ring", &rh)?;
    Ok(())
}
