//! The Green ring as an integer polynomial quotient: rewrite products of
//! generators to normal form and check them against the fusion rules.
//!
//! Run with `cargo run --example green_presentation`.

use fakesl2::catalog::Label;
use fakesl2::field::{FieldContext, ProjPoint};
use fakesl2::green::{self, GreenElement, PresGen};

fn main() {
    let ctx = FieldContext::gf4();
    let lam = ctx.element(2).unwrap();
    let x = ProjPoint::affine(lam);

    println!("generators: 1 = [V0], o = [V1], t = [P1], th = [Om(V0)], cth = [Om^-1(V0)], f = [B_x(s)]\n");

    println!("rewriting rules in action:");
    for (name, word) in [
        ("o^2", vec![PresGen::O, PresGen::O]),
        ("t^2", vec![PresGen::T, PresGen::T]),
        ("t th", vec![PresGen::T, PresGen::Th]),
        ("th cth", vec![PresGen::Th, PresGen::CoTh]),
        ("o^2 t", vec![PresGen::O, PresGen::O, PresGen::T]),
        ("f th", vec![PresGen::F(x, 2), PresGen::Th]),
        (
            "f f'",
            vec![PresGen::F(x, 2), PresGen::F(ProjPoint::infinity(), 3)],
        ),
    ] {
        println!("  {name:<7} -> {}", green::reduce(&[(1, word)]));
    }

    println!("\nimages of module classes in the presentation basis:");
    for l in [
        Label::Projective(0),
        Label::Syzygy(1, 0),
        Label::Syzygy(3, 0),
        Label::Syzygy(2, 1),
        Label::TypeA(x, 2),
    ] {
        println!("  [{l}] = {}", green::label_to_presentation(l));
    }

    println!("\ncorrection polynomials for syzygy powers:");
    for n in 1..=6 {
        println!("  f_{n} = {}", green::f_poly(n));
    }

    // ring-homomorphism check on one pair
    let u = GreenElement::from_label(Label::Syzygy(1, 0));
    let v = GreenElement::from_label(Label::TypeB(x, 2));
    let lhs = green::pe_multiply(&green::to_presentation(&u), &green::to_presentation(&v));
    let rhs = green::to_presentation(&green::multiply(&u, &v));
    println!("\n[Om(V0)] * [B_x(2)] via presentation : {lhs}");
    println!("[Om(V0) (x) B_x(2)] via fusion       : {rhs}");
    println!(
        "agreement: {}",
        if lhs == rhs { "exact" } else { "MISMATCH" }
    );
}
