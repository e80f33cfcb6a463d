//! Tensor two indecomposables, decompose the product by exact linear
//! algebra, and compare against the closed-form fusion rule.
//!
//! Run with `cargo run --example tensor_oracle`, optionally passing two
//! labels: `cargo run --example tensor_oracle -- "Om[2,1]" "A[(1:2),3]"`.

use fakesl2::catalog;
use fakesl2::decomp::Decomposer;
use fakesl2::field::FieldContext;
use fakesl2::green;

fn main() {
    let ctx = FieldContext::gf4();
    let dec = Decomposer::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (ls, ks) = match args.as_slice() {
        [l, k] => (l.clone(), k.clone()),
        _ => ("Om[1,0]".to_string(), "Om[-2,1]".to_string()),
    };
    let parse = |s: &str| {
        catalog::canonicalize_label(ctx, catalog::parse_label(ctx, s).expect("label"))
            .expect("canonical label")
    };
    let (l, k) = (parse(&ls), parse(&ks));

    let lm = catalog::construct(ctx, l).unwrap();
    let km = catalog::construct(ctx, k).unwrap();
    println!("left   {l}  (dim {})", lm.dim());
    println!("right  {k}  (dim {})", km.dim());

    let product = lm.tensor(&km).unwrap();
    println!("tensor product has dimension {}", product.dim());

    let closed = green::fuse(l, k);
    println!("closed form : {closed}");

    let split = dec.decompose(&product).unwrap();
    print!("brute force : ");
    let mut first = true;
    for s in &split.summands {
        let label = catalog::identify(&dec.alg, &s.rep, dec.seed()).unwrap();
        if !first {
            print!(" + ");
        }
        first = false;
        if s.multiplicity > 1 {
            print!("{} {label}", s.multiplicity);
        } else {
            print!("{label}");
        }
    }
    println!();

    let oracle = dec.decompose_and_identify(&product).unwrap();
    println!(
        "agreement   : {}",
        if oracle == closed {
            "exact"
        } else {
            "MISMATCH"
        }
    );
    for s in &split.summands {
        println!(
            "  summand dim {:>3} x{}  End dim {}  End/rad dim {}",
            s.rep.dim(),
            s.multiplicity,
            s.end_dim,
            s.end_local_dim
        );
    }
}
