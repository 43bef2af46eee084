//! Every scalar quantity in the library, evaluated on one small worked
//! setup: a qubit state with two anticommuting observables and a pair of
//! positive definite matrices for the relative entropies.

use num_complex::Complex64;
use tracegap::deformed::Deformation;
use tracegap::matrix::HermMatrix;
use tracegap::quantities::{
    corr, corr_alpha, corr_k, covariance, fg_corr, fg_skew, j_quantity, k_skew, l_quantity,
    tsallis_rel_entropy, tsallis_rel_operator_entropy, u_quantity, u_quantity_alpha,
    umegaki_rel_entropy, variance, wy_skew, wyd_skew, DensityMatrix, ScalarFnSpec,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let x = HermMatrix::from_real_rows(&[vec![2.0, 0.5], vec![0.5, 1.0]]).unwrap();
    let y = HermMatrix::from_real_rows(&[vec![1.5, 0.25], vec![0.25, 2.0]]).unwrap();

    println!("relative entropies");
    println!("------------------");
    for &nu in &[0.1, 0.5, 1.0] {
        let d = Deformation::new(nu).unwrap();
        println!(
            "  D_{nu}(X|Y) = {:.9}",
            tsallis_rel_entropy(&x, &y, d).unwrap()
        );
    }
    let almost_zero = Deformation::new(1e-8).unwrap();
    println!("  as nu -> 0 the deformed entropy approaches the undeformed one:");
    println!(
        "  D_1e-8(X|Y) = {:.9} vs U(X|Y) = {:.9}",
        tsallis_rel_entropy(&x, &y, almost_zero).unwrap(),
        umegaki_rel_entropy(&x, &y).unwrap()
    );
    let half = Deformation::new(0.5).unwrap();
    let op_ent = tsallis_rel_operator_entropy(&x, &y, half).unwrap();
    println!(
        "  operator-valued form at nu = 0.5: -Tr = {:.9}, an upper bound on D_0.5 = {:.9}",
        -op_ent.trace(),
        tsallis_rel_entropy(&x, &y, half).unwrap()
    );

    let rho = DensityMatrix::new(HermMatrix::diagonal(&[0.75, 0.25]).unwrap()).unwrap();
    let a = HermMatrix::from_rows(&[
        vec![c(0.0, 0.0), c(0.0, 1.0)],
        vec![c(0.0, -1.0), c(0.0, 0.0)],
    ])
    .unwrap();
    let b = HermMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();

    println!("\nsecond moments of a qubit state");
    println!("-------------------------------");
    println!("  V(A) = {:.9}", variance(&rho, &a).unwrap());
    let cov = covariance(&rho, &a, &b).unwrap();
    println!(
        "  Cov(A, B) = {:.9} {:+.9}i (complex for noncommuting observables)",
        cov.re, cov.im
    );

    println!("\nskew information family");
    println!("-----------------------");
    println!(
        "  I(A)      = {:.9}  (square-root form)",
        wy_skew(&rho, &a).unwrap()
    );
    for &alpha in &[0.25, 0.5, 0.75] {
        println!(
            "  I_{alpha}(A) = {:.9}  (symmetric under alpha <-> 1 - alpha)",
            wyd_skew(&rho, &a, alpha).unwrap()
        );
    }
    println!(
        "  K_0.25(A) = {:.9}  (symmetrized powers)",
        k_skew(&rho, &a, 0.25).unwrap()
    );
    let f = ScalarFnSpec::power(0.3).unwrap();
    let g = ScalarFnSpec::mix(0.2).unwrap();
    println!(
        "  I_fg(A)   = {:.9}  with f = {f}, g = {g}",
        fg_skew(&rho, &a, f, g).unwrap()
    );

    println!("\ncompanion and uncertainty quantities");
    println!("------------------------------------");
    let v = variance(&rho, &a).unwrap();
    let i = wy_skew(&rho, &a).unwrap();
    let j = j_quantity(&rho, &a).unwrap();
    let u = u_quantity(&rho, &a).unwrap();
    println!("  J(A) = {j:.9}");
    println!("  V = (I + J)/2 check: {:.2e}", (v - 0.5 * (i + j)).abs());
    println!("  U(A) = {u:.9}, sqrt(I J) = {:.9}", (i * j).sqrt());
    println!(
        "  U_alpha at alpha = 0.3: {:.9}",
        u_quantity_alpha(&rho, &a, 0.3).unwrap()
    );

    println!("\ncorrelation measures recover the skews on centered inputs");
    println!("----------------------------------------------------------");
    let a0 = a.as_matrix().clone();
    let corr_aa = corr(&rho, &a0, &a0).unwrap();
    println!(
        "  corr(A, A) = {:.9} vs I(A) = {:.9}",
        corr_aa.re,
        wy_skew(&rho, &a).unwrap()
    );
    let ca = corr_alpha(&rho, &a0, &a0, 0.25).unwrap();
    println!(
        "  corr_0.25(A, A) = {:.9} vs I_0.25(A) = {:.9}",
        ca.re,
        wyd_skew(&rho, &a, 0.25).unwrap()
    );
    let ck = corr_k(&rho, &a0, &a0, 0.25).unwrap();
    println!(
        "  corr_K(A, A) = {:.9} vs K_0.25(A) = {:.9}",
        ck.re,
        k_skew(&rho, &a, 0.25).unwrap()
    );
    let cf = fg_corr(&rho, &a0, &a0, f, g).unwrap();
    println!(
        "  fg_corr(A, A) = {:.9} vs I_fg(A) = {:.9}",
        cf.re,
        fg_skew(&rho, &a, f, g).unwrap()
    );

    println!("\nthe two-parameter trace quantity ties the families together");
    println!("------------------------------------------------------------");
    let rho_m = rho.matrix();
    let l = l_quantity(rho_m, rho_m, &a, 0.25).unwrap();
    println!(
        "  L_0.25(rho, rho; A) = {l:.9} vs I_0.25(A) = {:.9}  (A is already centered here)",
        wyd_skew(&rho, &a, 0.25).unwrap()
    );
    let nu = 0.3;
    let d = Deformation::new(nu).unwrap();
    let l_ent = l_quantity(&x, &y, &HermMatrix::identity(2), 1.0 - nu).unwrap() / nu;
    println!(
        "  L_(1-nu)(X, Y; I)/nu = {l_ent:.9} vs D_{nu}(X|Y) = {:.9}",
        tsallis_rel_entropy(&x, &y, d).unwrap()
    );
}
