//! The semisimplification: projectives and (r,r)-type modules have quantum
//! dimension zero and vanish; simples and (co)syzygies survive as graded
//! lines x^i z^s, and the functor is monoidal.
//!
//! Run with `cargo run --example semisimplification`.

use fakesl2::catalog::Label;
use fakesl2::field::{FieldContext, ProjPoint};
use fakesl2::green::{self, GreenElement};

fn main() {
    let ctx = FieldContext::gf4();
    let x = ProjPoint::affine(ctx.element(2).unwrap());

    println!("images of classes in the group ring of C2 x Z:");
    for l in [
        Label::Simple(0),
        Label::Simple(1),
        Label::Projective(0),
        Label::Syzygy(1, 0),
        Label::Syzygy(-2, 1),
        Label::TypeA(x, 2),
        Label::TypeB(x, 3),
    ] {
        println!(
            "  F([{l}]) = {}",
            green::semisimplify(&GreenElement::from_label(l))
        );
    }

    println!("\nmonoidality on sample products:");
    let samples = [
        (Label::Simple(1), Label::Simple(1)),
        (Label::Syzygy(2, 0), Label::Syzygy(-3, 1)),
        (Label::Syzygy(1, 1), Label::TypeA(x, 2)),
        (Label::TypeA(x, 1), Label::TypeB(x, 1)),
    ];
    for (l, k) in samples {
        let u = GreenElement::from_label(l);
        let v = GreenElement::from_label(k);
        let lhs = green::semisimplify(&green::multiply(&u, &v));
        let rhs = green::semisimplify(&u).multiply(&green::semisimplify(&v));
        println!(
            "  F([{l}][{k}]) = {lhs:<10}  F[{l}] F[{k}] = {rhs:<10}  {}",
            if lhs == rhs { "ok" } else { "MISMATCH" }
        );
    }
}
