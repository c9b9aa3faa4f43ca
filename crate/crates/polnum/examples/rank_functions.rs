//! Cohomological rank functions as exact evaluators, and the
//! combinators that transport them: twisting, rescaling, the
//! Fourier-Mukai transform, and the evaluation-complex change of
//! variable.
//!
//! Run: `cargo run --example rank_functions`

use polnum::crf::{
    ev_complex_relation, fm_transform, model_structure_sheaf, tensor_semihom, EvDirection,
    FmBranch, Side,
};
use polnum::numeric::{format_rat, rat};
use polnum::{PolarizationType, SemihomClass};

fn main() {
    let t = PolarizationType::parse("1,2,4").unwrap();

    // h^0 of the structure sheaf: chi * lambda^g for lambda > 0
    let fam = model_structure_sheaf(&t, Side::Primal);
    let h0 = &fam[0];
    for x in [rat(1, 2), rat(1, 1), rat(3, 2)] {
        println!("h0(O)({}) = {}", format_rat(&x), format_rat(&h0.eval(&x).unwrap()));
    }

    // twist by the slope-1/2 semihomogeneous class: a rank-2 bundle
    let class = SemihomClass::new(&t, &rat(1, 2)).unwrap();
    let twisted = tensor_semihom(h0, &class).unwrap();
    println!(
        "\nh0(E<1/2>)(0) = {} (rank {} bundle)",
        format_rat(&twisted.eval(&rat(0, 1)).unwrap()),
        class.rank()
    );

    // the same function rebuilt through the transform of its image
    let image = class.fm_image().unwrap();
    let fam_hat = model_structure_sheaf(&t.dual(), Side::Dual);
    let hat_class = SemihomClass::new(&t.dual(), &-image.slope()).unwrap();
    let fhat = tensor_semihom(&fam_hat[0], &hat_class).unwrap();
    let rebuilt = fm_transform(&fhat, &t, FmBranch::Pos).unwrap();
    for x in [rat(1, 3), rat(1, 1), rat(7, 2)] {
        let direct = twisted.eval(&x).unwrap();
        let via_fm = rebuilt.eval(&x).unwrap();
        println!(
            "at {}: direct {} = transformed {}",
            format_rat(&x),
            format_rat(&direct),
            format_rat(&via_fm)
        );
        assert_eq!(direct, via_fm);
    }

    // inverse then forward of the evaluation-complex relation is exact
    let nu = rat(1, 2);
    let f = polnum::crf::RankFunction::from_fn(
        1,
        Side::Primal,
        polnum::FractionalPolarization::new(t.clone(), nu.clone()).unwrap(),
        polnum::crf::Domain::open(rat(0, 1), rat(1, 1)),
        |x| Ok(x * x),
    );
    let g = ev_complex_relation(&f, &nu, &t, EvDirection::Inverse).unwrap();
    let back = ev_complex_relation(&g, &nu, &t, EvDirection::Forward).unwrap();
    let x = rat(99, 101);
    println!(
        "\nround trip at {}: {} = {}",
        format_rat(&x),
        format_rat(&f.eval(&x).unwrap()),
        format_rat(&back.eval(&x).unwrap())
    );
    assert_eq!(f.eval(&x).unwrap(), back.eval(&x).unwrap());
}
