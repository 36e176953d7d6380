//! Worked values for every module, checked through the public API.

use segre_strata::functor::{parabolic_image, pi1_pushforward, transfer_stratum, Isogeny};
use segre_strata::gl3borel::{classify, closure_parents, hirschowitz_ceiling, stable_region, Color, StratumS};
use segre_strata::lattice::{pairing, Character, Cocharacter};
use segre_strata::parabolic::{degree_pushforward, Lagrangian, NumericalType, ParabolicType};
use segre_strata::rootdata::{moduli_dimension, root_system_of, Group, TopologicalType};
use segre_strata::segre::{expand_to_torus, segre_value};
use segre_strata::strata::{
    closure_order, glr_stratum, hn_upper_bound, pglr_stratum, so2n_stratum, spin2n_stratum, ClosureRelation,
    CurveContext, Family, Nonempty,
};

fn ctx(g: i64) -> CurveContext {
    CurveContext::new(g).unwrap()
}

fn chars(v: &[&[i64]]) -> Vec<Character> {
    v.iter().map(|c| Character::new(c.to_vec()).unwrap()).collect()
}

fn siegel() -> ParabolicType {
    ParabolicType::from_isotropic_flag(Group::sp(4).unwrap(), &[2], Lagrangian::First).unwrap()
}

fn nt(p: ParabolicType, d: &[i64]) -> NumericalType {
    NumericalType::new(p, d.to_vec()).unwrap()
}

#[test]
fn lattice_pairings() {
    let p = |l: &[i64], d: &[i64]| {
        pairing(
            &Character::new(l.to_vec()).unwrap(),
            &Cocharacter::new(d.to_vec()).unwrap(),
        )
        .unwrap()
    };
    assert_eq!(p(&[0, 0, 0], &[5, -3, 7]), 0);
    assert_eq!(p(&[1, 1, 1], &[5, -3, 7]), 9);
    assert_eq!(p(&[-2, 0, 2], &[-1, 0, 1]), 4);
}

#[test]
fn root_systems() {
    let gl2 = root_system_of(&Group::GL(2));
    assert_eq!(gl2.roots.len(), 2);
    assert!(gl2.roots.contains(&Character::new(vec![1, -1]).unwrap()));
    let sp4 = root_system_of(&Group::sp(4).unwrap());
    assert_eq!(sp4.roots.len(), 8);
    assert!(sp4.roots.contains(&Character::new(vec![2, 0]).unwrap()));
    let so6 = root_system_of(&Group::SO(6));
    assert_eq!(so6.roots.len(), 12);
    assert!(so6.roots.iter().all(|a| a.coords().iter().all(|&x| x.abs() <= 1)));
}

#[test]
fn moduli_dimensions() {
    assert_eq!(moduli_dimension(&Group::GL(3), 7).unwrap(), 55);
    assert_eq!(moduli_dimension(&Group::sl(2).unwrap(), 2).unwrap(), 3);
    assert_eq!(moduli_dimension(&Group::GL(1), 2).unwrap(), 2);
}

#[test]
fn fundamental_groups() {
    let pi1 = |g: Group| g.pi1().to_string();
    assert_eq!(pi1(Group::GL(4)), "Z");
    assert_eq!(pi1(Group::pgl(7).unwrap()), "Z_7");
    assert_eq!(pi1(Group::sl(3).unwrap()), "trivial");
    assert_eq!(pi1(Group::psp(6).unwrap()), "Z_2");
    assert_eq!(pi1(Group::SO(5)), "Z_2");
    assert_eq!(pi1(Group::spin(7).unwrap()), "trivial");
    assert_eq!(pi1(Group::sl_mod(6, 2).unwrap()), "Z_2");
    assert_eq!(Group::GL(3).dim_center(), 1);
    assert_eq!(Group::SO(6).dim_center(), 0);
}

#[test]
fn levi_blocks() {
    let names = |p: ParabolicType| p.levi_blocks().iter().map(|b| b.name()).collect::<Vec<_>>();
    assert_eq!(names(ParabolicType::borel(Group::GL(3))), ["GL(1)", "GL(1)", "GL(1)"]);
    assert_eq!(
        names(ParabolicType::from_blocks(Group::GL(5), &[2, 3]).unwrap()),
        ["GL(2)", "GL(3)"]
    );
    assert_eq!(names(siegel()), ["GL(2)"]);
    let p = siegel();
    assert_eq!(
        p.dim() + p.quotient_roots().unwrap().len() as i64,
        Group::sp(4).unwrap().dim()
    );
}

#[test]
fn quotient_roots() {
    let p = ParabolicType::from_blocks(Group::GL(3), &[1, 2]).unwrap();
    let mut q = p.quotient_roots().unwrap();
    q.sort();
    let mut want = chars(&[&[-1, 1, 0], &[-1, 0, 1]]);
    want.sort();
    assert_eq!(q, want);
    assert_eq!(ParabolicType::borel(Group::GL(3)).quotient_roots().unwrap().len(), 3);
    let mut q = siegel().quotient_roots().unwrap();
    q.sort();
    let mut want = chars(&[&[-2, 0], &[-1, -1], &[0, -2]]);
    want.sort();
    assert_eq!(q, want);
}

#[test]
fn isotropy_characters() {
    let p = ParabolicType::from_blocks(Group::GL(5), &[2, 3]).unwrap();
    assert_eq!(p.isotropy_det_char().unwrap().coords(), &[-3, -3, 2, 2, 2]);
    assert_eq!(
        ParabolicType::borel(Group::GL(3)).isotropy_det_char().unwrap().coords(),
        &[-2, 0, 2]
    );
    assert_eq!(siegel().isotropy_det_char().unwrap().coords(), &[-3, -3]);
    let so = ParabolicType::lagrangian(Group::SO(8), Lagrangian::First).unwrap();
    assert_eq!(so.isotropy_det_char().unwrap().coords(), &[-3, -3, -3, -3]);
}

#[test]
fn degree_pushforwards() {
    let b = ParabolicType::borel(Group::GL(3));
    assert_eq!(degree_pushforward(&nt(b, &[4, -1, 2])).unwrap(), Some(5));
    let p = ParabolicType::from_blocks(Group::GL(5), &[2, 3]).unwrap();
    assert_eq!(degree_pushforward(&nt(p, &[0, 0])).unwrap(), Some(0));
    let p = ParabolicType::from_blocks(Group::GL(4), &[1, 3]).unwrap();
    assert_eq!(degree_pushforward(&nt(p, &[2, -5])).unwrap(), Some(-3));
}

#[test]
fn segre_values_and_expansions() {
    let p = ParabolicType::from_blocks(Group::GL(3), &[1, 2]).unwrap();
    assert_eq!(segre_value(&nt(p.clone(), &[0, 0])).unwrap(), 0);
    assert_eq!(expand_to_torus(&nt(p, &[2, 3])).unwrap().coords(), &[2, 3, 0]);
    assert_eq!(expand_to_torus(&nt(siegel(), &[-4])).unwrap().coords(), &[-4, 0]);
    let b = ParabolicType::borel(Group::GL(3));
    assert_eq!(
        expand_to_torus(&nt(b.clone(), &[1, 2, 3])).unwrap().coords(),
        &[1, 2, 3]
    );
    assert_eq!(segre_value(&nt(b, &[-1, 0, 1])).unwrap(), 4);
}

#[test]
fn hn_bounds() {
    for g in 2..6 {
        assert_eq!(
            hn_upper_bound(&ParabolicType::borel(Group::GL(3)), ctx(g)).unwrap(),
            3 * g
        );
    }
    let p = ParabolicType::from_blocks(Group::GL(2), &[1, 1]).unwrap();
    assert_eq!(hn_upper_bound(&p, ctx(2)).unwrap(), 2);
    assert_eq!(hn_upper_bound(&siegel(), ctx(3)).unwrap(), 9);
}

#[test]
fn gl_and_pgl_strata() {
    let r = glr_stratum(2, 1, 1, 1, ctx(2)).unwrap();
    assert_eq!((r.nonempty, r.dim), (Nonempty::Yes, Some(5)));
    assert_eq!(r.dim, Some(moduli_dimension(&Group::GL(2), 2).unwrap()));
    assert_eq!(glr_stratum(2, 1, 0, 1, ctx(2)).unwrap().nonempty, Nonempty::No);
    let r = glr_stratum(3, 1, 0, 3, ctx(2)).unwrap();
    assert_eq!((r.nonempty, r.dim), (Nonempty::Unknown, None));
    assert_eq!(glr_stratum(3, 1, 1, 1, ctx(2)).unwrap().dim, Some(9));
    assert_eq!(pglr_stratum(3, 1, 1, 1, ctx(2)).unwrap().dim, Some(7));
    assert_eq!(pglr_stratum(2, 1, 0, 2, ctx(3)).unwrap().dim, Some(6));
    assert_eq!(pglr_stratum(2, 1, 0, 1, ctx(3)).unwrap().nonempty, Nonempty::No);
}

#[test]
fn so_strata() {
    assert_eq!(so2n_stratum(3, 0, 2, ctx(2)).unwrap().dim, Some(14));
    assert_eq!(so2n_stratum(3, 0, 3, ctx(2)).unwrap().nonempty, Nonempty::No);
    assert_eq!(so2n_stratum(2, 0, 4, ctx(5)).unwrap().dim, Some(24));
}

#[test]
fn sigma_sets() {
    let s = Family::gl(2, 1, 1).unwrap().sigma_set(ctx(2)).unwrap();
    assert_eq!(s.nonempty, [1]);
    let s = Family::gl(3, 1, 0).unwrap().sigma_set(ctx(3)).unwrap();
    assert_eq!((s.nonempty, s.unknown), (vec![3], vec![6]));
    let s = Family::so(3, 0, Lagrangian::First).unwrap().sigma_set(ctx(2)).unwrap();
    assert_eq!(s.nonempty, [2, 4]);
}

#[test]
fn closure_relations() {
    let f = Family::gl(2, 1, 0).unwrap();
    assert_eq!(closure_order(&f, 2, 4).unwrap(), ClosureRelation::Below);
    assert_eq!(closure_order(&f, 4, 4).unwrap(), ClosureRelation::Same);
    assert_eq!(closure_order(&f, 3, 4).unwrap(), ClosureRelation::Incomparable);
}

#[test]
fn isogenies() {
    let r = |g: &Group, v| TopologicalType::reduce(g, v);
    let iso = Isogeny::adjoint(3).unwrap();
    assert_eq!(pi1_pushforward(&iso, r(&Group::GL(3), 7)).unwrap().representative(), 1);
    let iso = Isogeny::cover(8).unwrap();
    let spin = Group::spin(8).unwrap();
    assert_eq!(
        pi1_pushforward(&iso, TopologicalType::identity(&spin))
            .unwrap()
            .representative(),
        0
    );
    let iso = Isogeny::quotient_to_adjoint(6, 2).unwrap();
    let src = Group::sl_mod(6, 2).unwrap();
    assert_eq!(pi1_pushforward(&iso, r(&src, 1)).unwrap().representative(), 3);

    let img = parabolic_image(&Isogeny::adjoint(3).unwrap(), &ParabolicType::borel(Group::GL(3))).unwrap();
    assert!(img.is_borel() && img.group() == Group::pgl(3).unwrap());
    let p = ParabolicType::from_blocks(Group::GL(5), &[2, 3]).unwrap();
    let img = parabolic_image(&Isogeny::adjoint(5).unwrap(), &p).unwrap();
    assert_eq!(img.quotient_roots().unwrap().len(), 6);
    let img = parabolic_image(&Isogeny::adjoint_symplectic(4).unwrap(), &siegel()).unwrap();
    assert_eq!(
        (img.group(), img.quotient_roots().unwrap().len()),
        (Group::psp(4).unwrap(), 3)
    );
}

#[test]
fn transfers() {
    let c = ctx(2);
    let t = transfer_stratum(&Isogeny::adjoint(2).unwrap(), &glr_stratum(2, 1, 1, 1, c).unwrap(), c).unwrap();
    assert_eq!(
        (t.group, t.delta.representative(), t.s, t.nonempty),
        (Group::pgl(2).unwrap(), 1, 1, Nonempty::Yes)
    );
    for s in 1..=10 {
        let src = spin2n_stratum(3, s, c).unwrap();
        let t = transfer_stratum(&Isogeny::cover(6).unwrap(), &src, c).unwrap();
        assert_eq!(t.nonempty, so2n_stratum(3, 0, s, c).unwrap().nonempty);
    }
}

#[test]
fn gl3_borel_types() {
    assert!(stable_region(&[-1, 0, 1], 0).unwrap());
    assert!(!stable_region(&[0, 0, 0], 0).unwrap());
    assert!(stable_region(&[0, 0, 1], 1).unwrap());

    let c = ctx(7);
    let p = classify(&[-5, 1, 4], 0, c).unwrap();
    assert_eq!(
        (p.color, p.dim_exact, p.stratum_s),
        (Color::GreenDense, Some(55), Some(StratumS::Exact(18)))
    );
    // The printed tuple (-8, 7, 1) and the reordered (-8, 1, 7) both fall in the red class.
    for d in [[-8, 1, 7], [-8, 7, 1]] {
        let p = classify(&d, 0, c).unwrap();
        assert_eq!(p.color, Color::Red);
        assert!(matches!(p.stratum_s, Some(StratumS::AtMost(v)) if v <= 18));
    }
    let p = classify(&[-2, 0, 2], 0, c).unwrap();
    assert_eq!(
        (p.color, p.dim_exact, p.stratum_s),
        (Color::GreenGenericallyFinite, Some(45), Some(StratumS::Exact(8)))
    );
    assert_eq!(classify(&[0, 0, 0], 0, c).unwrap().color, Color::Orange);

    let h = hirschowitz_ceiling(0, c);
    assert_eq!((h.value, h.sharp), (18, true));
    let h = hirschowitz_ceiling(1, c);
    assert_eq!((h.value, h.sharp), (21, false));
    let h = hirschowitz_ceiling(3, ctx(13));
    assert_eq!((h.value, h.sharp), (36, true));

    assert_eq!(closure_parents(&[-1, 0, 1]), [[-2, 1, 1], [-1, -1, 2]]);
}
