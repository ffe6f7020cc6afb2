//! Tour of nonorthogonal-basis handling: Gram validation, the dual basis,
//! the Lowdin transform, and the concrete ambient embedding.
//!
//! Run with: cargo run --example basis_and_duals

use nqs::linalg::{identity_defect, max_abs_diff, CMatrix};
use nqs::GramBasis;
use num_complex::Complex64;

fn main() -> nqs::Result<()> {
    // A two-state basis with overlap <c_1|c_2> = 0.5.
    let basis = GramBasis::two_level(Complex64::new(0.5, 0.0))?;
    println!("Gram matrix:\n{}", basis.gram());
    println!("eigenvalues: {:?}", basis.eigenvalues());

    // Degenerate overlaps are rejected: s = 1 means the two states
    // coincide.
    match GramBasis::two_level(Complex64::new(1.0, 0.0)) {
        Err(err) => println!("s = 1 rejected: {err}"),
        Ok(_) => unreachable!(),
    }

    // The dual basis comes from G^-1; column j expands |c_j^perp> over
    // the original kets.
    let dual = basis.dual_transform();
    println!("dual transform G^-1:\n{dual}");
    println!(
        "biorthogonality defect |G^-1 G - 1|: {:.3e}",
        identity_defect(&(&dual * basis.gram()))
    );

    // The Lowdin transform G^-1/2 reaches the closest orthonormal basis.
    let lowdin = basis.lowdin_transform();
    println!("Lowdin transform G^-1/2:\n{lowdin}");
    println!(
        "(G^-1/2)^2 vs G^-1 max difference: {:.3e}",
        max_abs_diff(&(&lowdin * &lowdin), &dual)
    );

    // Concrete vectors in an orthonormal ambient frame (Cholesky gauge):
    // the first basis vector lies along the first axis.
    let embedding = basis.embed()?;
    println!("ambient basis vectors (columns):\n{}", embedding.vectors());
    let rebuilt = embedding.vectors().adjoint() * embedding.vectors();
    println!(
        "embedding faithfulness |C^dag C - G|: {:.3e}",
        max_abs_diff(&rebuilt, basis.gram())
    );

    // A basis state splits over the other state and its own dual, with the
    // overlap showing up in both amplitudes.
    let (on_partner, on_dual) = basis.dual_decompose(1, 0)?;
    println!("|c_2> = {on_partner} |c_1> + {on_dual} |c_2^perp>");

    // Complex overlaps work the same way.
    let complex_basis = GramBasis::two_level(Complex64::new(0.0, 0.8))?;
    let (coeff, weight) = complex_basis.dual_decompose(1, 0)?;
    println!("with s = 0.8i: |c_2> = {coeff} |c_1> + {weight} |c_2^perp>");

    // Higher-dimensional bases validate entrywise and spectrally.
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let gram = CMatrix::from_row_slice(
        3,
        3,
        &[
            c(1.0, 0.0),
            c(0.3, 0.1),
            c(0.2, 0.0),
            c(0.3, -0.1),
            c(1.0, 0.0),
            c(0.1, -0.2),
            c(0.2, 0.0),
            c(0.1, 0.2),
            c(1.0, 0.0),
        ],
    );
    let three = GramBasis::new(gram)?;
    println!("d = 3 basis eigenvalues: {:?}", three.eigenvalues());
    Ok(())
}
