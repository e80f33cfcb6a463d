//! Acceptance suite: one test per criterion, each printing a PASS line.
//! `cargo test --test acceptance -- --nocapture` shows the full report.

use fakesl2::algebra::AlgebraContext;
use fakesl2::catalog::{self, Label, StringFamily};
use fakesl2::decomp::{is_isomorphic, Decomposer};
use fakesl2::field::{enumerate_projective_line, FieldContext, FieldElement};
use fakesl2::green::{self, GreenElement};
use fakesl2::linalg::Matrix;
use fakesl2::rep::{hom_dim, Analysis};
use fakesl2::rng::SplitMix64;

fn gf4() -> FieldContext {
    FieldContext::gf4()
}

#[test]
fn acceptance_1_algebra_sanity() {
    let alg = AlgebraContext::new();
    assert_eq!(alg.dimension(), 32);
    let rad = alg.jacobson_radical(gf4());
    assert_eq!(rad.subspace.dim(), 22);
    // J^3 = 0 via the precomputed J^2 basis
    for &x in alg.radical_square_masks() {
        for &y in alg.radical_masks() {
            assert!(alg
                .mul(
                    fakesl2::algebra::AlgebraElement(x),
                    fakesl2::algebra::AlgebraElement(y)
                )
                .is_zero());
        }
    }
    let dec = Decomposer::default();
    let reg = alg.regular_representation(gf4());
    assert_eq!(reg.dim(), 32);
    let split = dec.decompose_and_identify(&reg).unwrap();
    assert_eq!(split.get(Label::Projective(0)), 1);
    assert_eq!(split.get(Label::Projective(1)), 3);
    assert_eq!(split.iter().count(), 2);
    println!("criterion 1 (algebra sanity): PASS");
}

#[test]
fn acceptance_2_golden_fusions() {
    // V1 (x) V1 = V0 + P1
    let g = green::fuse(Label::Simple(1), Label::Simple(1));
    assert_eq!(g.get(Label::Simple(0)), 1);
    assert_eq!(g.get(Label::Projective(1)), 1);
    assert_eq!(g.iter().count(), 2);
    // P0 (x) V1 = 3 P1
    let g = green::fuse(Label::Projective(0), Label::Simple(1));
    assert_eq!(g.get(Label::Projective(1)), 3);
    assert_eq!(g.iter().count(), 1);
    // P1 (x) V1 = P0 + 2 P1
    let g = green::fuse(Label::Projective(1), Label::Simple(1));
    assert_eq!(g.get(Label::Projective(0)), 1);
    assert_eq!(g.get(Label::Projective(1)), 2);
    assert_eq!(g.iter().count(), 2);
    // Om(V0) (x) Om^{-1}(V0) = V0 + 6 P1
    let g = green::fuse(Label::Syzygy(1, 0), Label::Syzygy(-1, 0));
    assert_eq!(g.get(Label::Simple(0)), 1);
    assert_eq!(g.get(Label::Projective(1)), 6);
    assert_eq!(g.iter().count(), 2);
    println!("criterion 2 (golden fusions): PASS");
}

#[test]
fn acceptance_3_oracle_equivalence_sweep() {
    let ctx = gf4();
    let dec = Decomposer::default();
    let labels = catalog::sweep_labels(ctx, 3, 3);
    let mut pairs_checked = 0usize;
    for (i, &l) in labels.iter().enumerate() {
        for &k in labels.iter().skip(i) {
            if l.dim() * k.dim() > 600 {
                continue;
            }
            let closed = green::fuse(l, k);
            let t = catalog::construct(ctx, l)
                .unwrap()
                .tensor(&catalog::construct(ctx, k).unwrap())
                .unwrap();
            let oracle = dec.decompose_and_identify(&t).unwrap();
            assert_eq!(
                closed, oracle,
                "fusion mismatch for {l} (x) {k}: closed {closed} vs oracle {oracle}"
            );
            pairs_checked += 1;
        }
    }
    assert!(pairs_checked > 1000, "sweep covered {pairs_checked} pairs");
    println!("criterion 3 (oracle equivalence sweep, {pairs_checked} pairs): PASS");
}

#[test]
fn acceptance_4_classification_round_trips() {
    let ctx = gf4();
    let dec = Decomposer::default();
    for label in catalog::sweep_labels(ctx, 3, 3) {
        let rep = catalog::construct(ctx, label).unwrap();
        let back = catalog::identify(&dec.alg, &rep, dec.seed()).unwrap();
        assert_eq!(back, label, "round trip failed for {label}");
    }
    // duality table: U1* = U4, U2* = U3, V* = W, A* = B
    let lambda_all: Vec<FieldElement> = ctx.elements().filter(|x| !x.is_zero()).collect();
    for r in 1..=3u32 {
        let u1 = catalog::make_string(ctx, StringFamily::U1, r).unwrap();
        let u4 = catalog::make_string(ctx, StringFamily::U4, r).unwrap();
        assert!(is_isomorphic(&dec.alg, &u1.dual(), &u4, dec.seed()).unwrap());
        let u2 = catalog::make_string(ctx, StringFamily::U2, r).unwrap();
        let u3 = catalog::make_string(ctx, StringFamily::U3, r).unwrap();
        assert!(is_isomorphic(&dec.alg, &u2.dual(), &u3, dec.seed()).unwrap());
    }
    for t in 0..=2u32 {
        for (v, w) in [
            (StringFamily::V1, StringFamily::W1),
            (StringFamily::V2, StringFamily::W2),
        ] {
            let vm = catalog::make_string(ctx, v, t).unwrap();
            let wm = catalog::make_string(ctx, w, t).unwrap();
            assert!(is_isomorphic(&dec.alg, &vm.dual(), &wm, dec.seed()).unwrap());
        }
    }
    for &lam in &lambda_all {
        for r in 1..=3u32 {
            let a = catalog::make_band(ctx, catalog::BandFamily::A, lam, r).unwrap();
            let b = catalog::make_band(ctx, catalog::BandFamily::B, lam, r).unwrap();
            assert!(is_isomorphic(&dec.alg, &a.dual(), &b, dec.seed()).unwrap());
        }
    }
    println!("criterion 4 (classification round trips + duality table): PASS");
}

#[test]
fn acceptance_5_projective_line_parametrization() {
    let ctx = gf4();
    let dec = Decomposer::default();
    let points = enumerate_projective_line(&ctx);
    assert_eq!(points.len(), 5);
    for r in 1..=3u32 {
        for (i, &p) in points.iter().enumerate() {
            for &q in points.iter().skip(i + 1) {
                let ap = catalog::make_type_a(ctx, p, r).unwrap();
                let aq = catalog::make_type_a(ctx, q, r).unwrap();
                assert!(
                    !is_isomorphic(&dec.alg, &ap, &aq, dec.seed()).unwrap(),
                    "A_{p}({r}) and A_{q}({r}) must differ"
                );
            }
        }
    }
    // the literal diagonal construction splits into r band summands
    for x_bits in [1u32, 2, 3] {
        let x = ctx.element(x_bits).unwrap();
        for r in 1..=3u32 {
            let literal = catalog::make_type_a_raw(ctx, x, x, r).unwrap();
            let split = dec.decompose(&literal).unwrap();
            let total: usize = split.summands.iter().map(|s| s.multiplicity).sum();
            assert_eq!(
                total, r as usize,
                "diagonal literal must split into r parts"
            );
            let band = catalog::make_band(ctx, catalog::BandFamily::A, ctx.one(), 1).unwrap();
            for s in &split.summands {
                assert!(is_isomorphic(&dec.alg, &s.rep, &band, dec.seed()).unwrap());
            }
        }
    }
    println!("criterion 5 (projective line parametrization): PASS");
}

#[test]
fn acceptance_6_hom_dimension_table() {
    let ctx = gf4();
    let p0 = catalog::make_projective(ctx, 0).unwrap();
    for x in enumerate_projective_line(&ctx) {
        let a1 = catalog::make_type_a(ctx, x, 1).unwrap();
        assert_eq!(hom_dim(&p0, &a1).unwrap(), 1, "Hom(P0, A_{x}(1))");
        for r in 1..=4u32 {
            let ar = catalog::make_type_a(ctx, x, r).unwrap();
            let br = catalog::make_type_b(ctx, x, r).unwrap();
            assert_eq!(hom_dim(&ar, &a1).unwrap(), 1, "Hom(A_{x}({r}), A_{x}(1))");
            assert_eq!(
                hom_dim(&br, &a1).unwrap(),
                r as usize,
                "Hom(B_{x}({r}), A_{x}(1))"
            );
        }
    }
    println!("criterion 6 (hom dimension table): PASS");
}

fn presentation_generators(ctx: FieldContext) -> Vec<GreenElement> {
    let mut gens = vec![
        GreenElement::unit(),
        GreenElement::from_label(Label::Simple(1)),
        GreenElement::from_label(Label::Projective(1)),
        GreenElement::from_label(Label::Syzygy(1, 0)),
        GreenElement::from_label(Label::Syzygy(-1, 0)),
    ];
    for p in enumerate_projective_line(&ctx) {
        for s in 1..=3u32 {
            gens.push(GreenElement::from_label(Label::TypeB(p, s)));
        }
    }
    gens
}

#[test]
fn acceptance_7_presentation_consistency() {
    let ctx = gf4();
    let gens = presentation_generators(ctx);
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            pairs.push((gens[i].clone(), gens[j].clone()));
        }
    }
    let report = green::verify_presentation(&pairs);
    assert!(
        report.passed(),
        "presentation mismatches on {:?}",
        report
            .mismatches
            .iter()
            .map(|m| format!("({}) * ({})", m.left, m.right))
            .collect::<Vec<_>>()
    );
    // correction polynomials against fusion chains up to n = 6
    let th = GreenElement::from_label(Label::Syzygy(1, 0));
    let th_pres = green::label_to_presentation(Label::Syzygy(1, 0));
    let mut power = GreenElement::unit();
    let mut power_pres = green::PresentationElement::one();
    for n in 1..=6u32 {
        power = green::multiply(&power, &th);
        power_pres = green::pe_multiply(&power_pres, &th_pres);
        assert_eq!(
            green::to_presentation(&power),
            power_pres,
            "omega chain mismatch at n = {n}"
        );
        // the chain contains the n-th syzygy class exactly once
        assert_eq!(power.get(Label::Syzygy(n as i64, 0)), 1);
    }
    assert_eq!(green::f_poly(2).0, vec![2, 1]);
    assert_eq!(green::f_poly(3).0, vec![8, 5, 2]);
    println!(
        "criterion 7 (presentation consistency, {} products): PASS",
        report.checked
    );
}

#[test]
fn acceptance_8_semisimplification_monoidality() {
    let ctx = gf4();
    let gens = presentation_generators(ctx);
    let mut checked = 0usize;
    for u in &gens {
        for v in &gens {
            let lhs = green::semisimplify(&green::multiply(u, v));
            let rhs = green::semisimplify(u).multiply(&green::semisimplify(v));
            assert_eq!(lhs, rhs, "monoidality fails for ({u}) * ({v})");
            checked += 1;
        }
    }
    println!("criterion 8 (semisimplification monoidality, {checked} pairs): PASS");
}

#[test]
fn acceptance_9_property_suites() {
    let ctx16 = FieldContext::new(4).unwrap();
    let mut rng = SplitMix64::new(0xACCE97);
    // field axioms, 200 cases
    for _ in 0..200 {
        let a = FieldElement(rng.below(16) as u16);
        let b = FieldElement(rng.below(16) as u16);
        let c = FieldElement(rng.below(16) as u16);
        assert_eq!(ctx16.add(ctx16.add(a, b), c), ctx16.add(a, ctx16.add(b, c)));
        assert_eq!(ctx16.mul(ctx16.mul(a, b), c), ctx16.mul(a, ctx16.mul(b, c)));
        assert_eq!(
            ctx16.mul(a, ctx16.add(b, c)),
            ctx16.add(ctx16.mul(a, b), ctx16.mul(a, c))
        );
        assert_eq!(ctx16.add(a, a), FieldElement(0));
        let s = ctx16.add(a, b);
        assert_eq!(ctx16.mul(s, s), ctx16.add(ctx16.mul(a, a), ctx16.mul(b, b)));
    }
    // rref idempotence, 200 cases
    let ctx = gf4();
    for _ in 0..200 {
        let m = Matrix::from_fn(ctx, 5, 8, |_, _| FieldElement(rng.below(4) as u16));
        let (r1, rank1, p1) = m.rref();
        let (r2, rank2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(rank1, rank2);
        assert_eq!(p1, p2);
    }
    // fusion dimension homomorphism and duality compatibility, 200 cases each
    let labels = catalog::sweep_labels(ctx, 3, 3);
    for _ in 0..200 {
        let l = labels[rng.below(labels.len() as u64) as usize];
        let k = labels[rng.below(labels.len() as u64) as usize];
        let g = green::fuse(l, k);
        assert_eq!(g.dimension(), (l.dim() * k.dim()) as i64);
        assert_eq!(green::fuse(l.dual(), k.dual()), g.dual());
    }
    // Krull-Schmidt seed stability, 200 cases
    let dec_a = Decomposer::new(0x1234_5678);
    let dec_b = Decomposer::new(0x8765_4321);
    let mut cases = 0usize;
    while cases < 200 {
        let l = labels[rng.below(labels.len() as u64) as usize];
        let k = labels[rng.below(labels.len() as u64) as usize];
        if l.dim() * k.dim() > 64 {
            continue;
        }
        let t = catalog::construct(ctx, l)
            .unwrap()
            .tensor(&catalog::construct(ctx, k).unwrap())
            .unwrap();
        let ga = dec_a.decompose_and_identify(&t).unwrap();
        let gb = dec_b.decompose_and_identify(&t).unwrap();
        assert_eq!(ga, gb, "seed instability on {l} (x) {k}");
        cases += 1;
    }
    println!("criterion 9 (property suites, 200 cases each): PASS");
}

#[test]
fn radical_and_socle_lengths_agree_across_catalog() {
    // supporting invariant used throughout: Loewy length from either side
    let ctx = gf4();
    let alg = AlgebraContext::new();
    for label in catalog::sweep_labels(ctx, 2, 2) {
        let rep = catalog::construct(ctx, label).unwrap();
        let an = Analysis::new(&alg, &rep);
        let rl = an.radical_length();
        let sl = an.socle_series().layer_mults.len();
        assert_eq!(rl, sl, "rl != sl for {label}");
    }
}
