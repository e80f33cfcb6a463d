//! Print a slice of the fusion table: products of the small syzygies and
//! (r,r)-type modules over GF(4).
//!
//! Run with `cargo run --example fusion_rules`.

use fakesl2::catalog::{self, Label};
use fakesl2::field::FieldContext;
use fakesl2::green;

fn main() {
    let ctx = FieldContext::gf4();
    let labels: Vec<Label> = catalog::sweep_labels(ctx, 1, 1);
    println!(
        "fusion products of the {} smallest labels over GF(4)\n",
        labels.len()
    );
    for (i, &l) in labels.iter().enumerate() {
        for &k in labels.iter().skip(i) {
            let g = green::fuse(l, k);
            println!("{l} (x) {k} = {g}");
            assert_eq!(g.dimension(), (l.dim() * k.dim()) as i64);
        }
    }
    println!("\nevery line satisfies the dimension count dim(L) * dim(K).");
}
