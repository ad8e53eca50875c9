//! Seeded property suites behind the `verify` subcommand.
//!
//! Each suite checks the invariants of one library module at desk scale and
//! reports one pass/fail line per check. All arithmetic is exact; a check
//! either holds identically on every generated fixture or fails.

use boxconv::conv::{
    self, addv, box_conv, box_inverse, commutator, cumulants_from_moments, grouped_cumulants,
    join_free, moments_from_cumulants, mulv, torus_factor, unit, zeta,
};
use boxconv::fixtures::{random_group_element, random_series, random_unipotent, Rng};
use boxconv::hopf::{
    antipode, antipode_law_holds, bilinear_part, coassociativity_holds, coproduct, counit,
    counit_law_holds, lie_bracket, reduced_coproduct, CoordPoly, Monomial,
};
use boxconv::ncpart::{enumerate_nc, NcPartition};
use boxconv::onedim::{
    comp_inverse, compose, exp_morphism, exp_v, f_transform, log_morphism, log_v, r_v,
    s_v_transform, symm_coordinates, PowerSeries1,
};
use boxconv::rational::{rat_int, Rational};
use boxconv::repr::{
    build_rep, build_rep_basis, build_torus_rep, certify_triangular, certify_unipotent,
    nilpotency_index, one_dim_s_matrix, s_transform, s_transform_basis,
};
use boxconv::series::{eval_block_functional, words_up_to, NcSeries, Word};
use num_traits::{One, Signed, Zero};

/// One verification line.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool) -> Check {
    Check {
        name: name.to_string(),
        pass,
        detail: String::new(),
    }
}

fn check_eq<T: PartialEq + std::fmt::Debug>(name: &str, left: T, right: T) -> Check {
    let pass = left == right;
    Check {
        name: name.to_string(),
        pass,
        detail: if pass {
            String::new()
        } else {
            format!("{left:?} != {right:?}")
        },
    }
}

/// Suite parameters from the CLI flags, clamped to desk scale.
#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub s: u32,
    pub maxdeg: u32,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            s: 2,
            maxdeg: 4,
            seed: 7,
        }
    }
}

pub const SUITES: &[&str] = &["nc", "series", "conv", "hopf", "repr", "onedim"];

pub fn run_suite(name: &str, params: &SuiteParams) -> Option<Vec<Check>> {
    match name {
        "nc" => Some(nc_suite(params)),
        "series" => Some(series_suite(params)),
        "conv" => Some(conv_suite(params)),
        "hopf" => Some(hopf_suite(params)),
        "repr" => Some(repr_suite(params)),
        "onedim" => Some(onedim_suite(params)),
        _ => None,
    }
}

pub fn run_all(params: &SuiteParams) -> Vec<(String, Vec<Check>)> {
    SUITES
        .iter()
        .map(|name| (name.to_string(), run_suite(name, params).unwrap()))
        .collect()
}

/// Hand-checked small tables: the canonical listings of `NC(n)` for
/// `n <= 4` and the complement map as index pairs into those listings.
pub mod tables {
    /// `NC(n)` listings for n = 1..4 in their traditional display order.
    pub fn listing(n: usize) -> Vec<Vec<Vec<usize>>> {
        match n {
            1 => vec![vec![vec![1]]],
            2 => vec![vec![vec![1, 2]], vec![vec![1], vec![2]]],
            3 => vec![
                vec![vec![1, 2, 3]],
                vec![vec![1], vec![2, 3]],
                vec![vec![1, 2], vec![3]],
                vec![vec![1, 3], vec![2]],
                vec![vec![1], vec![2], vec![3]],
            ],
            4 => vec![
                vec![vec![1, 2, 3, 4]],
                vec![vec![1], vec![2, 3, 4]],
                vec![vec![1, 3, 4], vec![2]],
                vec![vec![1, 2, 4], vec![3]],
                vec![vec![1, 2, 3], vec![4]],
                vec![vec![1, 2], vec![3, 4]],
                vec![vec![1, 4], vec![2, 3]],
                vec![vec![1], vec![2], vec![3, 4]],
                vec![vec![1], vec![2, 3], vec![4]],
                vec![vec![1, 2], vec![3], vec![4]],
                vec![vec![1], vec![2, 4], vec![3]],
                vec![vec![1, 4], vec![2], vec![3]],
                vec![vec![1, 3], vec![2], vec![4]],
                vec![vec![1], vec![2], vec![3], vec![4]],
            ],
            _ => panic!("no listing for n = {n}"),
        }
    }

    /// The complement map as 1-based index arrows into [`listing`].
    pub fn complement_arrows(n: usize) -> Vec<usize> {
        match n {
            1 => vec![1],
            2 => vec![2, 1],
            3 => vec![5, 4, 2, 3, 1],
            4 => vec![14, 12, 10, 9, 8, 11, 13, 4, 3, 2, 7, 5, 6, 1],
            _ => panic!("no arrows for n = {n}"),
        }
    }
}

fn nc_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let catalan = [1usize, 2, 5, 14, 42, 132, 429, 1430];
    let top = 8usize;
    for n in 1..=top {
        out.push(check_eq(
            &format!("nc.count.catalan.n{n}"),
            enumerate_nc(n).unwrap().len(),
            catalan[n - 1],
        ));
    }
    for n in 1..=4usize {
        let listing: Vec<NcPartition> = tables::listing(n)
            .into_iter()
            .map(|blocks| NcPartition::new(n, blocks).unwrap())
            .collect();
        let mut enumerated = enumerate_nc(n).unwrap();
        enumerated.sort();
        let mut listed = listing.clone();
        listed.sort();
        out.push(check_eq(
            &format!("nc.listing.n{n}"),
            enumerated,
            listed,
        ));
        let arrows = tables::complement_arrows(n);
        let arrows_ok = listing
            .iter()
            .zip(&arrows)
            .all(|(p, &target)| p.kreweras() == listing[target - 1]);
        out.push(check(&format!("nc.complement.arrows.n{n}"), arrows_ok));
    }
    for n in 1..=top {
        let all = enumerate_nc(n).unwrap();
        out.push(check(
            &format!("nc.complement.block-count.n{n}"),
            all.iter()
                .all(|p| p.num_blocks() + p.kreweras().num_blocks() == n + 1),
        ));
        if n >= 2 {
            out.push(check(
                &format!("nc.complement.no-fixed-point.n{n}"),
                all.iter().all(|p| p.kreweras() != *p),
            ));
        }
    }
    // K^2 is the cyclic shift (asserted inside the call), K^{2n} the identity
    let mut shift_ok = true;
    let mut order_ok = true;
    for n in 1..=6usize {
        for p in enumerate_nc(n).unwrap() {
            let k2 = p.kreweras_squared_shift();
            let mut sizes_a: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
            let mut sizes_b: Vec<usize> = k2.blocks().iter().map(Vec::len).collect();
            sizes_a.sort_unstable();
            sizes_b.sort_unstable();
            shift_ok &= sizes_a == sizes_b;
            let mut cur = p.clone();
            for _ in 0..2 * n {
                cur = cur.kreweras();
            }
            order_ok &= cur == p;
        }
    }
    out.push(check("nc.complement.squared-shift", shift_ok));
    out.push(check("nc.complement.order-2n", order_ok));
    // join identities on a sampled set
    let mut rng = Rng::new(params.seed);
    let mut join_ok = true;
    for n in 2..=6usize {
        let all = enumerate_nc(n).unwrap();
        for _ in 0..30 {
            let p = &all[rng.below(all.len() as u64) as usize];
            let q = &all[rng.below(all.len() as u64) as usize];
            let j = p.join(q).unwrap();
            join_ok &= j == q.join(p).unwrap();
            join_ok &= p.join(&NcPartition::singletons(n)).unwrap() == *p;
            join_ok &= p.join(&NcPartition::full(n)).unwrap() == NcPartition::full(n);
            join_ok &= p.join(p).unwrap() == *p;
        }
    }
    out.push(check("nc.join.laws", join_ok));
    out
}

fn series_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = Rng::new(params.seed);
    let (s, maxdeg) = (params.s, params.maxdeg);
    // associativity and distributivity of the concatenation product
    let mut ok_assoc = true;
    let mut ok_dist = true;
    for _ in 0..5 {
        let f = random_series(&mut rng, s, maxdeg);
        let g = random_series(&mut rng, s, maxdeg);
        let h = random_series(&mut rng, s, maxdeg);
        ok_assoc &= f.cauchy_mul(&g).unwrap().cauchy_mul(&h).unwrap()
            == f.cauchy_mul(&g.cauchy_mul(&h).unwrap()).unwrap();
        ok_dist &= f.add(&g).unwrap().cauchy_mul(&h).unwrap()
            == f.cauchy_mul(&h).unwrap().add(&g.cauchy_mul(&h).unwrap()).unwrap();
    }
    out.push(check("series.cauchy.associative", ok_assoc));
    out.push(check("series.cauchy.distributive", ok_dist));
    // truncation coherence
    let mut ok_trunc = true;
    let f = random_series(&mut rng, s, maxdeg);
    let g = random_series(&mut rng, s, maxdeg);
    for d in 1..=maxdeg {
        ok_trunc &= f.truncate(d).add(&g.truncate(d)).unwrap() == f.add(&g).unwrap().truncate(d);
        ok_trunc &= f.truncate(d).cauchy_mul(&g.truncate(d)).unwrap()
            == f.cauchy_mul(&g).unwrap().truncate(d);
    }
    out.push(check("series.truncation.coherent", ok_trunc));
    // the block functional is a product, not a linear map
    let f1 = NcSeries::from_coeffs(1, 2, vec![(Word::new(vec![1]), rat_int(1))]).unwrap();
    let word = Word::new(vec![1, 1]);
    let p0 = NcPartition::singletons(2);
    let lhs = eval_block_functional(&f1.add(&f1).unwrap(), &word, &p0).unwrap();
    let rhs = eval_block_functional(&f1, &word, &p0).unwrap()
        + eval_block_functional(&f1, &word, &p0).unwrap();
    out.push(check("series.block-functional.nonlinear", lhs != rhs));
    // locality: the functional only reads subword coefficients
    let mut f2 = random_series(&mut rng, s, maxdeg);
    let w = Word::new(vec![1; maxdeg as usize]);
    let before = eval_block_functional(&f2, &w, &NcPartition::full(maxdeg as usize)).unwrap();
    if s >= 2 {
        f2.set_coeff(Word::new(vec![2]), rat_int(77)).unwrap();
        let after = eval_block_functional(&f2, &w, &NcPartition::full(maxdeg as usize)).unwrap();
        out.push(check_eq("series.block-functional.local", before, after));
    }
    out
}

fn conv_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = Rng::new(params.seed);
    let (s, maxdeg) = (params.s, params.maxdeg);
    let e = unit(s, maxdeg);
    let mut ok_unit = true;
    let mut ok_inv = true;
    let mut ok_assoc = true;
    for _ in 0..10 {
        let f = random_group_element(&mut rng, s, maxdeg);
        let g = random_series(&mut rng, s, maxdeg);
        let h = random_series(&mut rng, s, maxdeg);
        ok_unit &= box_conv(&e, &g).unwrap() == g && box_conv(&g, &e).unwrap() == g;
        let inv = box_inverse(&f).unwrap();
        ok_inv &= box_conv(&f, &inv).unwrap() == e && box_conv(&inv, &f).unwrap() == e;
        ok_assoc &= box_conv(&box_conv(&f, &g).unwrap(), &h).unwrap()
            == box_conv(&f, &box_conv(&g, &h).unwrap()).unwrap();
    }
    out.push(check("conv.box.unit", ok_unit));
    out.push(check("conv.box.inverse", ok_inv));
    out.push(check("conv.box.associative", ok_assoc));
    // moeb against zeta
    out.push(check_eq(
        "conv.moeb.defining",
        box_conv(&conv::moeb(s, maxdeg), &zeta(s, maxdeg)).unwrap(),
        e.clone(),
    ));
    // non-distributivity witness
    let f = NcSeries::from_coeffs(1, 2, vec![(Word::new(vec![1]), rat_int(1))]).unwrap();
    let g = NcSeries::from_coeffs(
        1,
        2,
        vec![
            (Word::new(vec![1]), rat_int(1)),
            (Word::new(vec![1, 1]), rat_int(1)),
        ],
    )
    .unwrap();
    let lhs = box_conv(&f.add(&f).unwrap(), &g).unwrap();
    let rhs = box_conv(&f, &g).unwrap().add(&box_conv(&f, &g).unwrap()).unwrap();
    out.push(check("conv.box.not-distributive", lhs != rhs));
    // commutativity dichotomy
    let mut ok_comm1 = true;
    for _ in 0..5 {
        let f = random_series(&mut rng, 1, maxdeg.max(4));
        let g = random_series(&mut rng, 1, maxdeg.max(4));
        ok_comm1 &= box_conv(&f, &g).unwrap() == box_conv(&g, &f).unwrap();
    }
    out.push(check("conv.box.commutative-one-letter", ok_comm1));
    let mut f2 = unit(2, 3);
    f2.set_coeff(Word::new(vec![1, 1]), rat_int(1)).unwrap();
    let mut g2 = unit(2, 3);
    g2.set_coeff(Word::new(vec![1, 2]), rat_int(1)).unwrap();
    out.push(check(
        "conv.box.non-commutative-witness",
        box_conv(&f2, &g2).unwrap() != box_conv(&g2, &f2).unwrap(),
    ));
    // moment/cumulant round trip and operation transport
    let mut ok_round = true;
    let mut ok_addv = true;
    let mut ok_mulv = true;
    for _ in 0..5 {
        let r1 = random_group_element(&mut rng, s, maxdeg);
        let r2 = random_group_element(&mut rng, s, maxdeg);
        let m1 = moments_from_cumulants(&r1).unwrap();
        let m2 = moments_from_cumulants(&r2).unwrap();
        ok_round &= cumulants_from_moments(&m1).unwrap() == r1;
        ok_addv &= moments_from_cumulants(&r1.add(&r2).unwrap()).unwrap()
            == addv(&m1, &m2).unwrap();
        ok_mulv &= moments_from_cumulants(&box_conv(&r1, &r2).unwrap()).unwrap()
            == mulv(&m1, &m2).unwrap();
    }
    out.push(check("conv.moments.round-trip", ok_round));
    out.push(check("conv.moments.addv-transport", ok_addv));
    out.push(check("conv.moments.mulv-transport", ok_mulv));
    out.push(check_eq(
        "conv.mulv.zeta-neutral",
        mulv(&zeta(s, maxdeg), &moments_from_cumulants(&e).unwrap()).unwrap(),
        moments_from_cumulants(&e).unwrap(),
    ));
    // subgroup structure
    let mut ok_norm = true;
    let mut ok_add_quot = true;
    let j = 2usize;
    for _ in 0..3 {
        let mut h = random_unipotent(&mut rng, s, maxdeg);
        for word in words_up_to(s, maxdeg) {
            if word.len() >= 2 && word.len() <= j {
                h.set_coeff(word, Rational::zero()).unwrap();
            }
        }
        let f = random_unipotent(&mut rng, s, maxdeg);
        let conj = box_conv(&box_conv(&f, &h).unwrap(), &box_inverse(&f).unwrap()).unwrap();
        for word in words_up_to(s, maxdeg) {
            if word.len() >= 2 && word.len() <= j {
                ok_norm &= conj.coeff(&word).unwrap().is_zero();
            }
        }
        let mut h2 = random_unipotent(&mut rng, s, maxdeg);
        for word in words_up_to(s, maxdeg) {
            if word.len() >= 2 && word.len() <= j {
                h2.set_coeff(word, Rational::zero()).unwrap();
            }
        }
        let prod = box_conv(&h, &h2).unwrap();
        for word in words_up_to(s, maxdeg) {
            if word.len() == j + 1 {
                ok_add_quot &= prod.coeff(&word).unwrap()
                    == h.coeff(&word).unwrap() + h2.coeff(&word).unwrap();
            }
        }
    }
    out.push(check("conv.subgroup.normal", ok_norm));
    out.push(check("conv.subgroup.quotient-additive", ok_add_quot));
    let mut ok_comm = true;
    for _ in 0..3 {
        let f = random_unipotent(&mut rng, s, maxdeg);
        let g = random_unipotent(&mut rng, s, maxdeg);
        let c = commutator(&f, &g).unwrap();
        for word in words_up_to(s, maxdeg) {
            if word.len() == 2 {
                ok_comm &= c.coeff(&word).unwrap().is_zero();
            }
        }
    }
    out.push(check("conv.commutator.low-degree-vanishing", ok_comm));
    let f = random_group_element(&mut rng, s, maxdeg);
    let (t, p) = torus_factor(&f).unwrap();
    out.push(check_eq(
        "conv.torus.recompose",
        box_conv(&t, &p).unwrap(),
        f,
    ));
    // freeness pathway on a small case
    let fa = random_series(&mut rng, 1, 3);
    let fb = random_series(&mut rng, 1, 3);
    let joint = join_free(&fa, &fb).unwrap();
    let prod = box_conv(&fa, &fb).unwrap();
    let mut ok_free = true;
    for word in words_up_to(1, 3) {
        let n = word.len();
        let mut pulled = NcSeries::zero(2 * n as u32, 2 * n as u32);
        for mask in 1u64..(1 << (2 * n)) {
            let letters: Vec<u32> = (0..2 * n as u32)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .collect();
            let source: Vec<u32> = letters
                .iter()
                .map(|&l| if l % 2 == 1 { 1 } else { 2 })
                .collect();
            let pure = source.iter().all(|&l| l == 1) || source.iter().all(|&l| l == 2);
            if !pure {
                continue;
            }
            let src_word = Word::new(vec![if source[0] == 1 { 1 } else { 2 }; source.len()]);
            let c = joint.coeff(&src_word).unwrap();
            pulled.set_coeff(Word::new(letters), c).unwrap();
        }
        let cuts: Vec<usize> = (1..=n).map(|k| 2 * k).collect();
        ok_free &= grouped_cumulants(&pulled, &cuts).unwrap() == prod.coeff(&word).unwrap();
    }
    out.push(check("conv.freeness.pathway", ok_free));
    out
}

fn hopf_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = Rng::new(params.seed);
    let s = params.s.min(2);
    let maxdeg = params.maxdeg.min(4);
    let mut ok_coassoc = true;
    let mut ok_counit = true;
    let mut ok_antipode = true;
    let mut ok_grading = true;
    for w in words_up_to(s, maxdeg) {
        ok_coassoc &= coassociativity_holds(&w, maxdeg).unwrap();
        ok_counit &= counit_law_holds(&w, maxdeg).unwrap();
        ok_antipode &= antipode_law_holds(&w, maxdeg).unwrap();
        if w.len() >= 2 {
            let n = w.len() as i64 - 1;
            for ((l, r), _) in reduced_coproduct(&w, maxdeg).unwrap().terms() {
                ok_grading &= l.wdeg() + r.wdeg() == n;
            }
        }
    }
    out.push(check("hopf.coassociativity", ok_coassoc));
    out.push(check("hopf.counit-law", ok_counit));
    out.push(check("hopf.antipode-law", ok_antipode));
    out.push(check("hopf.grading", ok_grading));
    // counit values on generators
    out.push(check(
        "hopf.counit.values",
        counit(&CoordPoly::gen(Word::new(vec![1]))).is_one()
            && counit(&CoordPoly::gen(Word::new(vec![1, 2.min(s)]))).is_zero(),
    ));
    // duality with the group operations
    let mut ok_dual = true;
    let mut ok_anti_dual = true;
    for _ in 0..5 {
        let f = random_group_element(&mut rng, s, maxdeg.min(3));
        let g = random_group_element(&mut rng, s, maxdeg.min(3));
        let prod = box_conv(&f, &g).unwrap();
        let inv = box_inverse(&f).unwrap();
        for w in words_up_to(s, maxdeg.min(3)) {
            let d = coproduct(&w, maxdeg).unwrap();
            ok_dual &= d.eval(&f, &g).unwrap() == prod.coeff(&w).unwrap();
            ok_anti_dual &= antipode(&w).eval(&f).unwrap() == inv.coeff(&w).unwrap();
        }
    }
    out.push(check("hopf.coproduct.duality", ok_dual));
    out.push(check("hopf.antipode.duality", ok_anti_dual));
    // on distinct letters the coproduct terms stay separate, so their
    // count follows the Catalan sequence
    let counts = [1usize, 2, 5, 14];
    let mut ok_counts = true;
    for (i, &c) in counts.iter().enumerate() {
        let w = Word::new((1..=i as u32 + 1).collect());
        ok_counts &= coproduct(&w, 4).unwrap().num_terms() == c;
    }
    out.push(check("hopf.coproduct.term-counts", ok_counts));
    // bilinear part and the bracket dichotomy
    out.push(check(
        "hopf.bilinear.primitive-degree-two",
        bilinear_part(&Word::new(vec![1, 1]), maxdeg).unwrap().is_zero(),
    ));
    let mut ok_bracket1 = true;
    for a in 2..=maxdeg.min(3) as usize {
        for b in 2..=maxdeg.min(3) as usize {
            let u = Word::new(vec![1; a]);
            let v = Word::new(vec![1; b]);
            ok_bracket1 &= lie_bracket(&u, &v, 1, maxdeg).unwrap().is_empty();
        }
    }
    out.push(check("hopf.bracket.abelian-one-letter", ok_bracket1));
    if s >= 2 && maxdeg >= 3 {
        let br = lie_bracket(
            &Word::new(vec![1, 1]),
            &Word::new(vec![1, 2]),
            2,
            maxdeg,
        )
        .unwrap();
        out.push(check("hopf.bracket.nonzero-two-letters", !br.is_empty()));
        // the underlying asymmetry witness
        let b = bilinear_part(&Word::new(vec![1, 2, 1]), maxdeg).unwrap();
        let mut transposed = boxconv::hopf::TensorPoly::zero();
        for ((l, r), c) in b.terms() {
            transposed.add_term(r.clone(), l.clone(), c.clone());
        }
        out.push(check("hopf.bilinear.asymmetry-witness", b != transposed));
    }
    // reduced antipode of a primitive generator
    let w2 = Word::new(vec![1, 2.min(s)]);
    let mut minus = CoordPoly::zero();
    minus.add_term(Monomial::gen(w2.clone()), rat_int(-1));
    out.push(check_eq(
        "hopf.antipode.reduced-primitive",
        boxconv::hopf::reduced_antipode(&w2).unwrap(),
        minus,
    ));
    out
}

fn repr_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = Rng::new(params.seed);
    let s = params.s.min(2);
    let maxdeg = params.maxdeg.min(4);
    let bound = boxconv::repr::default_bound(maxdeg).min(3);
    let e = unit(s, maxdeg);
    out.push(check(
        "repr.identity",
        build_rep(&e, bound).unwrap().is_identity(),
    ));
    let basis = build_rep_basis(s, maxdeg, bound);
    let mut ok_hom = true;
    let mut ok_tri = true;
    let mut ok_unip = true;
    let mut ok_nilidx = true;
    let mut ok_faithful = true;
    let mut ok_inv = true;
    for _ in 0..3 {
        let f = random_unipotent(&mut rng, s, maxdeg);
        let g = random_unipotent(&mut rng, s, maxdeg);
        let mf = build_rep(&f, bound).unwrap();
        let mg = build_rep(&g, bound).unwrap();
        ok_hom &= build_rep(&box_conv(&f, &g).unwrap(), bound).unwrap()
            == mf.mul(&mg).unwrap();
        ok_tri &= certify_triangular(&mf, &basis);
        ok_unip &= certify_unipotent(&mf);
        ok_nilidx &= nilpotency_index(&mf).is_some_and(|k| k <= bound as usize + 1);
        for w in words_up_to(s, maxdeg) {
            if w.len() >= 2 && w.len() as u32 <= bound + 1 {
                let col = basis.index_of(&Monomial::gen(w.clone())).unwrap();
                ok_faithful &= mf.get(0, col) == &f.coeff(&w).unwrap();
            }
        }
        ok_inv &= build_rep(&box_inverse(&f).unwrap(), bound).unwrap()
            == mf.inverse().unwrap();
    }
    out.push(check("repr.homomorphism", ok_hom));
    out.push(check("repr.triangular", ok_tri));
    out.push(check("repr.unipotent", ok_unip));
    out.push(check("repr.nilpotency-index", ok_nilidx));
    out.push(check("repr.faithful-coefficients", ok_faithful));
    out.push(check("repr.inverse-image", ok_inv));
    // torus and the full S-transform
    let sbound = bound.min(2);
    let sbasis = s_transform_basis(s, maxdeg.min(3), sbound);
    let mut ok_storus = true;
    let mut ok_shom = true;
    let mut ok_stri = true;
    for _ in 0..2 {
        let f = random_group_element(&mut rng, s, maxdeg.min(3));
        let g = random_group_element(&mut rng, s, maxdeg.min(3));
        let sf = s_transform(&f, sbound).unwrap();
        let sg = s_transform(&g, sbound).unwrap();
        ok_shom &= s_transform(&box_conv(&f, &g).unwrap(), sbound).unwrap()
            == sf.mul(&sg).unwrap();
        ok_stri &= certify_triangular(&sf, &sbasis);
        let (t, _) = torus_factor(&f).unwrap();
        let dt = build_torus_rep(&t, sbound).unwrap();
        for i in 0..sf.dim() {
            ok_storus &= sf.get(i, i) == dt.get(i, i);
        }
    }
    out.push(check("repr.s-transform.homomorphism", ok_shom));
    out.push(check("repr.s-transform.triangular", ok_stri));
    out.push(check("repr.s-transform.torus-diagonal", ok_storus));
    // one-variable S-matrix
    let a = random_unipotent(&mut rng, 1, maxdeg.max(3));
    let b = random_unipotent(&mut rng, 1, maxdeg.max(3));
    let ma = one_dim_s_matrix(&a).unwrap();
    let mb = one_dim_s_matrix(&b).unwrap();
    let mab = one_dim_s_matrix(&box_conv(&a, &b).unwrap()).unwrap();
    let mut ok_sdim1 = certify_unipotent(&ma) && ma.is_upper_triangular();
    for j in 1..ma.dim() {
        ok_sdim1 &= mab.get(0, j).clone() == ma.get(0, j).clone() + mb.get(0, j);
    }
    out.push(check("repr.sdim1.additive-unipotent", ok_sdim1));
    out
}

fn onedim_suite(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = Rng::new(params.seed);
    let maxdeg = params.maxdeg.clamp(4, 8);
    // compositional inversion
    let mut ok_inv = true;
    let mut ok_invol = true;
    for _ in 0..5 {
        let f = ps_unipotent(&mut rng, maxdeg);
        let h = comp_inverse(&f).unwrap();
        ok_inv &= compose(&f, &h).unwrap() == PowerSeries1::z(maxdeg)
            && compose(&h, &f).unwrap() == PowerSeries1::z(maxdeg);
        ok_invol &= comp_inverse(&h).unwrap() == f;
    }
    out.push(check("onedim.comp-inverse.two-sided", ok_inv));
    out.push(check("onedim.comp-inverse.involution", ok_invol));
    // multiplicativity of the transforms
    let mut ok_fmul = true;
    let mut ok_svmul = true;
    for _ in 0..5 {
        let a = random_unipotent(&mut rng, 1, maxdeg);
        let b = random_unipotent(&mut rng, 1, maxdeg);
        let pa = PowerSeries1::from_nc_series(&a);
        let pb = PowerSeries1::from_nc_series(&b);
        let pab = PowerSeries1::from_nc_series(&box_conv(&a, &b).unwrap());
        ok_fmul &= f_transform(&pab).unwrap()
            == f_transform(&pa).unwrap().mul(&f_transform(&pb).unwrap());
        let ma = PowerSeries1::from_nc_series(&moments_from_cumulants(&a).unwrap());
        let mb = PowerSeries1::from_nc_series(&moments_from_cumulants(&b).unwrap());
        let mab = PowerSeries1::from_nc_series(
            &mulv(
                &moments_from_cumulants(&a).unwrap(),
                &moments_from_cumulants(&b).unwrap(),
            )
            .unwrap(),
        );
        ok_svmul &= s_v_transform(&mab).unwrap()
            == s_v_transform(&ma).unwrap().mul(&s_v_transform(&mb).unwrap());
    }
    out.push(check("onedim.f-transform.multiplicative", ok_fmul));
    out.push(check("onedim.sv-transform.multiplicative", ok_svmul));
    // the linearisation diagram
    let mut ok_log_add = true;
    let mut ok_roundtrip = true;
    let mut ok_translation = true;
    let mut ok_rv = true;
    for _ in 0..5 {
        let a = random_unipotent(&mut rng, 1, maxdeg);
        let b = random_unipotent(&mut rng, 1, maxdeg);
        let pa = PowerSeries1::from_nc_series(&a);
        let pb = PowerSeries1::from_nc_series(&b);
        let pab = PowerSeries1::from_nc_series(&box_conv(&a, &b).unwrap());
        ok_log_add &= log_morphism(&pab).unwrap()
            == log_morphism(&pa).unwrap().add(&log_morphism(&pb).unwrap());
        ok_roundtrip &= exp_morphism(&log_morphism(&pa).unwrap()).unwrap() == pa;
        // S_V after the Zeta translation equals F
        let ma = PowerSeries1::from_nc_series(&moments_from_cumulants(&a).unwrap());
        ok_translation &= s_v_transform(&ma).unwrap() == f_transform(&pa).unwrap();
        // R_V undoes the Zeta translation
        ok_rv &= r_v(&ma).unwrap() == pa;
    }
    out.push(check("onedim.log.additive", ok_log_add));
    out.push(check("onedim.exp-log.round-trip", ok_roundtrip));
    out.push(check("onedim.translation-square", ok_translation));
    out.push(check("onedim.rv.cumulants", ok_rv));
    // moment-side exponential
    out.push(check_eq(
        "onedim.expv.zero-to-zeta",
        exp_v(&PowerSeries1::zero(maxdeg)).unwrap(),
        PowerSeries1::from_nc_series(&zeta(1, maxdeg + 1)),
    ));
    let mut ok_expv_inv = true;
    let mut ok_expv_mult = true;
    for _ in 0..5 {
        let a = random_unipotent(&mut rng, 1, maxdeg);
        let mu = PowerSeries1::from_nc_series(&moments_from_cumulants(&a).unwrap());
        ok_expv_inv &= exp_v(&log_v(&mu).unwrap()).unwrap() == mu;
        let b = random_unipotent(&mut rng, 1, maxdeg);
        let nu = PowerSeries1::from_nc_series(&moments_from_cumulants(&b).unwrap());
        // EXP_V of the moment sum is the moment product
        let la = log_v(&mu).unwrap();
        let lb = log_v(&nu).unwrap();
        let sum = addv(
            &la.to_nc_series().unwrap(),
            &lb.to_nc_series().unwrap(),
        )
        .unwrap();
        let lhs = exp_v(&PowerSeries1::from_nc_series(&sum)).unwrap();
        let rhs = mulv(
            &moments_from_cumulants(&a).unwrap(),
            &moments_from_cumulants(&b).unwrap(),
        )
        .unwrap();
        ok_expv_mult &= lhs == PowerSeries1::from_nc_series(&rhs);
    }
    out.push(check("onedim.expv-logv.inverse", ok_expv_inv));
    out.push(check("onedim.expv.product-formula", ok_expv_mult));
    // the coefficient polynomials of the universal inverse
    let hs = symm_coordinates(5).unwrap();
    let lead: Vec<i64> = vec![1, 2, 5, 14];
    let mut ok_lead = hs.len() == 4;
    for (n, (h, l)) in hs.iter().zip(&lead).enumerate() {
        // the top monomial of h_n is the (n+1)-st power of the first generator
        let top = Monomial::gen(Word::new(vec![1, 1])).pow(n as i32 + 1);
        let coeff = h
            .terms()
            .find(|(m, _)| **m == top)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero);
        ok_lead &= coeff.abs() == rat_int(*l).abs();
    }
    out.push(check("onedim.symm.catalan-leads", ok_lead));
    let mut ok_subst = true;
    let f = random_unipotent(&mut rng, 1, 6);
    let ft = f_transform(&PowerSeries1::from_nc_series(&f)).unwrap();
    for (n, h) in symm_coordinates(6).unwrap().iter().enumerate() {
        ok_subst &= h.eval(&f).unwrap() == ft.coeff(n + 1);
    }
    out.push(check("onedim.symm.substitution", ok_subst));
    out
}

fn ps_unipotent(rng: &mut Rng, maxdeg: u32) -> PowerSeries1 {
    let mut coeffs = boxconv::fixtures::random_coeff_vec(rng, maxdeg);
    coeffs[0] = Rational::zero();
    coeffs[1] = Rational::one();
    PowerSeries1::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_default_params() {
        let params = SuiteParams::default();
        for (suite, checks) in run_all(&params) {
            for c in &checks {
                assert!(c.pass, "{suite}.{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn suites_pass_across_seeds_and_sizes() {
        for (s, maxdeg, seed) in [(1, 4, 1u64), (2, 3, 99), (3, 3, 5)] {
            let params = SuiteParams { s, maxdeg, seed };
            for (suite, checks) in run_all(&params) {
                for c in &checks {
                    assert!(c.pass, "{suite}.{}: {}", c.name, c.detail);
                }
            }
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope", &SuiteParams::default()).is_none());
    }
}
