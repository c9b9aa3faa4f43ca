//! Invariants of simple semihomogeneous bundles: u, rank, Euler
//! characteristic, and the Fourier-Mukai image class.
//!
//! Run: `cargo run --example semihom_invariants`

use num::Signed;
use polnum::numeric::{format_rat, rat};
use polnum::{PolarizationType, SemihomClass};

fn main() {
    let t = PolarizationType::parse("1,2,2,6").unwrap();

    for slope in [rat(1, 2), rat(1, 3), rat(2, 3), rat(3, 1), rat(-1, 2)] {
        let c = SemihomClass::new(&t, &slope).unwrap();
        println!(
            "slope {:>4}: u = {:>2}, rank = {:>3}, euler = {:>4}, det = {} * l (integral: {})",
            format_rat(&slope),
            c.u(),
            c.rank(),
            c.euler(),
            format_rat(&c.det_multiple()),
            c.det_integral()
        );
    }

    // rank and euler swap (up to sign) under the transform
    let c = SemihomClass::new(&t, &rat(1, 2)).unwrap();
    let image = c.fm_image().unwrap();
    println!(
        "\ntransform of slope 1/2: type {}, slope {}, rank {}, euler {}",
        image.base(),
        format_rat(image.slope()),
        image.rank(),
        image.euler()
    );
    assert_eq!(image.rank(), c.euler());
    assert_eq!(&image.euler().abs(), c.rank());
}
