//! Tour of the Hermitian matrix layer: construction, spectral
//! decomposition, fractional powers, absolute and positive parts, the
//! weighted power mean, and the Loewner order.

use num_complex::Complex64;
use tracegap::matrix::{loewner_leq, power_mean, Classification, HermMatrix};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    println!("construction validates shape and Hermiticity");
    println!("--------------------------------------------");
    let m = HermMatrix::from_rows(&[
        vec![c(2.0, 0.0), c(0.5, 1.0)],
        vec![c(0.5, -1.0), c(3.0, 0.0)],
    ])
    .unwrap();
    let bad = HermMatrix::from_rows(&[
        vec![c(2.0, 0.0), c(0.5, 1.0)],
        vec![c(0.5, 1.0), c(3.0, 0.0)],
    ]);
    println!("  valid 2x2 accepted, trace = {}", m.trace());
    println!(
        "  non-Hermitian off-diagonal rejected: {:?}",
        bad.unwrap_err()
    );

    println!("\nspectral decomposition (cyclic Jacobi)");
    println!("--------------------------------------");
    let dec = m.eig();
    println!("  eigenvalues (ascending): {:?}", dec.eigenvalues());
    let recon = dec.reconstruct();
    println!(
        "  U diag(lam) U* reconstructs to {:.2e}",
        recon.sub(&m).frobenius_norm()
    );

    println!("\nfractional powers act on the spectrum");
    println!("-------------------------------------");
    let root = m.frac_power(0.5).unwrap();
    println!(
        "  (M^(1/2))^2 - M has norm {:.2e}",
        root.square().sub(&m).frobenius_norm()
    );
    let inv = m.frac_power(-1.0).unwrap();
    let prod = HermMatrix::hermitian_part(&inv.as_matrix().mul(m.as_matrix()));
    println!(
        "  M^(-1) M - I has norm {:.2e}",
        prod.sub(&HermMatrix::identity(2)).frobenius_norm()
    );
    let singular = HermMatrix::diagonal(&[1.0, 0.0]).unwrap();
    println!(
        "  negative powers of singular matrices are rejected: {:?}",
        singular.frac_power(-0.5).unwrap_err()
    );
    println!(
        "  but nonnegative powers clamp the zero eigenvalue: trace of diag(1,0)^0.5 = {}",
        singular.frac_power(0.5).unwrap().trace()
    );

    println!("\nabsolute value and positive part");
    println!("--------------------------------");
    let s = HermMatrix::diagonal(&[3.0, -2.0]).unwrap();
    let (abs, pos) = s.abs_and_positive_part();
    println!("  spectrum of S: {:?}", s.eig().eigenvalues());
    println!("  |S| eigenvalues: {:?}", abs.eig().eigenvalues());
    println!("  S_+ eigenvalues: {:?}", pos.eig().eigenvalues());
    println!(
        "  identities: Tr|S| = {}, Tr S_+ = {}",
        abs.trace(),
        pos.trace()
    );

    println!("\nweighted power mean interpolates its endpoints");
    println!("----------------------------------------------");
    let x = HermMatrix::from_real_rows(&[vec![4.0, 1.0], vec![1.0, 2.0]]).unwrap();
    let y = HermMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 9.0]]).unwrap();
    let at0 = power_mean(&x, &y, 0.0).unwrap();
    let at1 = power_mean(&x, &y, 1.0).unwrap();
    println!(
        "  X #_0 Y = X to {:.2e}, X #_1 Y = Y to {:.2e}",
        at0.sub(&x).frobenius_norm(),
        at1.sub(&y).frobenius_norm()
    );
    for &nu in &[0.25, 0.5, 0.75] {
        let mid = power_mean(&x, &y, nu).unwrap();
        println!("  Tr[X #_{nu} Y] = {:.6}", mid.trace());
    }

    println!("\nLoewner order classification");
    println!("----------------------------");
    let small = HermMatrix::diagonal(&[1.0, 1.0]).unwrap();
    let class = loewner_leq(&small, &x).unwrap();
    println!(
        "  I <= X ? {:?} (deciding eigenvalue {:.4})",
        class.classification, class.min_eigenvalue
    );
    let incomparable = loewner_leq(&x, &y).unwrap();
    println!(
        "  X <= Y ? {:?} (deciding eigenvalue {:.4})",
        incomparable.classification, incomparable.min_eigenvalue
    );
    assert_eq!(incomparable.classification, Classification::Indefinite);
}
