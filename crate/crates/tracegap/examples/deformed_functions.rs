//! Tour of the deformed logarithm and exponential, their operator lifts,
//! and the two scalar constants used by upper bounds.

use tracegap::deformed::{
    exp_nu, exp_nu_op, kantorovich, ln_nu, ln_nu_op, specht, spectral_bounds, Deformation,
};
use tracegap::matrix::HermMatrix;

fn main() {
    println!("scalar deformed logarithm, (x^nu - 1)/nu");
    println!("----------------------------------------");
    for &nu in &[0.2, 0.5, 1.0] {
        let d = Deformation::new(nu).unwrap();
        let row: Vec<String> = [0.0, 0.5, 1.0, 2.0, 10.0]
            .iter()
            .map(|&x| format!("ln_{nu}({x}) = {:+.6}", ln_nu(x, d).unwrap()))
            .collect();
        println!("  {}", row.join("  "));
    }
    let tiny = Deformation::new(1e-6).unwrap();
    println!(
        "  near nu = 0 it approaches the logarithm: ln_1e-6(2) = {:.9} vs ln 2 = {:.9}",
        ln_nu(2.0, tiny).unwrap(),
        2.0f64.ln()
    );

    println!("\nthe deformed exponential inverts it where defined");
    println!("-------------------------------------------------");
    let d = Deformation::new(0.3).unwrap();
    for &x in &[0.25, 1.0, 4.0] {
        let back = exp_nu(ln_nu(x, d).unwrap(), d).unwrap();
        println!("  exp_0.3(ln_0.3({x})) = {back:.12}");
    }
    println!(
        "  exp_0.3 rejects arguments with 1 + nu x <= 0: {:?}",
        exp_nu(-4.0, d).unwrap_err()
    );

    println!("\noperator lifts act on the spectrum");
    println!("----------------------------------");
    let m = HermMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
    let half = Deformation::new(0.5).unwrap();
    let lifted = ln_nu_op(&m, half).unwrap();
    println!("  eigenvalues of M: {:?}", m.eig().eigenvalues());
    println!(
        "  eigenvalues of ln_0.5(M): {:?}",
        lifted.eig().eigenvalues()
    );
    let round = exp_nu_op(&lifted, half).unwrap();
    println!(
        "  exp_0.5(ln_0.5(M)) recovers M to {:.2e}",
        round.sub(&m).frobenius_norm()
    );

    println!("\ngeneralized Kantorovich constant");
    println!("--------------------------------");
    println!(
        "  K(0, h) = K(1, h) = 1 for every h; K(2, 4) = {}",
        kantorovich(2.0, 4.0).unwrap()
    );
    println!(
        "  symmetry in h <-> 1/h: K(0.3, 5) = {:.12}, K(0.3, 0.2) = {:.12}",
        kantorovich(0.3, 5.0).unwrap(),
        kantorovich(0.3, 0.2).unwrap()
    );
    for &h in &[2.0, 5.0] {
        let quotient = (kantorovich(1e-7, h).unwrap() - 1.0) / 1e-7;
        println!(
            "  (K(nu, {h}) - 1)/nu at nu = 1e-7: {quotient:.6} vs -ln S({h}) = {:.6}",
            -specht(h).unwrap().ln()
        );
    }

    println!("\nspectral bounds feed the constant its condition ratio");
    println!("-----------------------------------------------------");
    let x = HermMatrix::from_real_rows(&[vec![2.0, 0.5], vec![0.5, 1.0]]).unwrap();
    let y = HermMatrix::from_real_rows(&[vec![1.0, 0.25], vec![0.25, 3.0]]).unwrap();
    let b = spectral_bounds(&x, &y).unwrap();
    println!(
        "  x in [{:.4}, {:.4}], y in [{:.4}, {:.4}] -> h = {:.4}",
        b.x_min, b.x_max, b.y_min, b.y_max, b.h
    );
    println!(
        "  equal scalars give h = 1, which the constant rejects: {:?}",
        kantorovich(0.5, 1.0).unwrap_err()
    );
}
