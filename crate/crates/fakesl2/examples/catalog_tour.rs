//! Walk through every indecomposable family: construct a representative,
//! print its dimension, Loewy length, composition multiplicities, and the
//! canonical label it identifies back to.
//!
//! Run with `cargo run --example catalog_tour`.

use fakesl2::algebra::AlgebraContext;
use fakesl2::catalog::{self, BandFamily, StringFamily};
use fakesl2::decomp::Decomposer;
use fakesl2::field::FieldContext;
use fakesl2::rep::{Analysis, Representation};

fn describe(alg: &AlgebraContext, name: &str, rep: &Representation, seed: u64) {
    let an = Analysis::new(alg, rep);
    let (n0, n1) = an.comp_mults();
    let label = catalog::identify(alg, rep, seed)
        .map(|l| l.to_string())
        .unwrap_or_else(|e| format!("<{e}>"));
    println!(
        "{name:<12} dim {:>2}  loewy {}  comp (V0^{n0}, V1^{n1})  canonical {label}",
        rep.dim(),
        an.radical_length(),
    );
}

fn main() {
    let ctx = FieldContext::gf4();
    let dec = Decomposer::default();
    let alg = &dec.alg;
    let seed = dec.seed();
    let lam = ctx.element(2).unwrap();

    println!("simple modules and projective covers");
    describe(alg, "V0", &catalog::make_simple(ctx, 0).unwrap(), seed);
    describe(alg, "V1", &catalog::make_simple(ctx, 1).unwrap(), seed);
    describe(alg, "P0", &catalog::make_projective(ctx, 0).unwrap(), seed);
    describe(alg, "P1", &catalog::make_projective(ctx, 1).unwrap(), seed);

    println!("\nstring modules at parameter 2");
    for (name, fam) in [
        ("U[1,2]", StringFamily::U1),
        ("U[2,2]", StringFamily::U2),
        ("U[3,2]", StringFamily::U3),
        ("U[4,2]", StringFamily::U4),
        ("Vs[1,2]", StringFamily::V1),
        ("Vs[2,2]", StringFamily::V2),
        ("W[1,2]", StringFamily::W1),
        ("W[2,2]", StringFamily::W2),
    ] {
        describe(alg, name, &catalog::make_string(ctx, fam, 2).unwrap(), seed);
    }

    println!("\nband modules at lambda = {lam}");
    for r in 1..=3 {
        let a = catalog::make_band(ctx, BandFamily::A, lam, r).unwrap();
        describe(alg, &format!("BandA[{lam},{r}]"), &a, seed);
    }

    println!("\nthe five (2,2)-type modules across the projective line");
    for p in fakesl2::field::enumerate_projective_line(&ctx) {
        let a = catalog::make_type_a(ctx, p, 2).unwrap();
        describe(alg, &format!("A[{p},2]"), &a, seed);
    }

    println!("\nthe regular module decomposes into projective covers");
    let reg = alg.regular_representation(ctx);
    let split = dec.decompose_and_identify(&reg).unwrap();
    println!("u = {split}");
}
