#[cfg(test)]
mod probe {
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    #[test]
    fn nalgebra_hermitian_eigen_probe() {
        let i = Complex64::new(0.0, 1.0);
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                -i * 0.5,
                i * 0.5,
                Complex64::new(2.0, 0.0),
            ],
        );
        let e = m.clone().symmetric_eigen();
        // reconstruct
        let d = DMatrix::from_diagonal(&e.eigenvalues.map(|x| Complex64::new(x, 0.0)));
        let r = &e.eigenvectors * d * e.eigenvectors.adjoint();
        let err = (&r - &m).iter().map(|z| z.norm()).fold(0.0, f64::max);
        println!("eigenvalues: {:?} max reconstruction err {}", e.eigenvalues.as_slice(), err);
        assert!(err < 1e-12);
    }
}
