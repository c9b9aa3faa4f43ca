//! Dual polarization types and the chi product identity.
//!
//! Run: `cargo run --example dual_types`

use polnum::PolarizationType;

fn main() {
    for dims in [
        vec![1, 1, 1],
        vec![1, 2, 4],
        vec![1, 3, 3, 6],
        vec![2, 2, 6],
        vec![5],
    ] {
        let t = PolarizationType::new(dims).unwrap();
        let d = t.dual();
        println!(
            "({t})^ = ({d})   chi = {}, chi-dual = {}, product = {} = (d1 d_g)^g",
            t.chi(),
            d.chi(),
            t.chi() * d.chi()
        );
        assert_eq!(d.dual(), t);
        assert_eq!(t.chi() * d.chi(), t.d1dg().pow(t.g()));
    }
}
