//! The threshold algebra: s <-> beta conversions, the dual exchange,
//! cross-scale rewriting, and section-generation status.
//!
//! Run: `cargo run --example threshold_algebra`

use polnum::numeric::{rat, rat_int, ExtendedRat};
use polnum::thresholds::{
    beta1_from_dual_s0, beta_from_s, cross_nu, dual_beta, s_from_beta, section_status,
};
use polnum::PolarizationType;

fn main() {
    let t = PolarizationType::parse("1,4").unwrap();
    let nu = rat_int(1);

    // beta < nu gives a finite s; beta >= nu only the inequality
    for beta in [rat(1, 2), rat_int(1)] {
        let s = s_from_beta(&ExtendedRat::Finite(beta.clone()), &nu).unwrap();
        let back = beta_from_s(&s, &nu).unwrap();
        println!(
            "beta = {beta} at nu = {nu}: s = {s}, back to beta {} (exact: {})",
            back.value, back.exact
        );
    }

    // dual exchange flips the index: beta^0 <-> beta^1
    let (dual, index) = dual_beta(&rat(1, 2), 0, &t).unwrap();
    println!("\ndual of beta0 = 1/2 on ({t}): beta{index} = {dual} on ({})", t.dual());

    // the composite: beta^1 from the dual-side surjectivity threshold
    let b1 = beta1_from_dual_s0(&ExtendedRat::Finite(rat_int(1)), &nu, &t).unwrap();
    println!("beta1 from dual s0 = 1 at nu = 1: {} (exact: {})", b1.value, b1.exact);

    // the same beta expressed at another scale
    let s2 = cross_nu(&rat_int(1), &nu, &rat_int(2)).unwrap();
    println!("s = 1 at nu = 1 becomes s = {s2} at nu = 2");

    // what the thresholds say about a given twist
    let (b0, b1) = (rat(1, 3), rat(1, 2));
    for lambda in [rat(2, 3), rat(1, 2), rat(2, 5), rat(1, 4)] {
        println!(
            "lambda = {lambda}: {:?}",
            section_status(&b0, &b1, &lambda).unwrap()
        );
    }
}
