pub fn smoke() -> f64 {
    use nalgebra::DMatrix;
    use num_complex::Complex64;
    let c = Complex64::new;
    let m = DMatrix::from_row_slice(2, 2, &[c(1.0,0.0), c(0.0,-0.5), c(0.0,0.5), c(2.0,0.0)]);
    let eig = m.clone().symmetric_eigen();
    let recon = &eig.eigenvectors * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| c(x,0.0))) * eig.eigenvectors.adjoint();
    let e1 = (recon - &m).norm();
    let a = DMatrix::from_row_slice(2, 4, &[
        c(0.3,0.1), c(0.0,0.0), c(-0.2,0.4), c(0.1,0.0),
        c(0.0,0.7), c(0.5,0.0), c(0.0,0.0), c(0.1,-0.3)]);
    let svd = a.clone().svd(true, true);
    let u = svd.u.unwrap();
    let vt = svd.v_t.unwrap();
    let s = DMatrix::from_fn(u.ncols(), vt.nrows(), |i,j| if i==j { c(svd.singular_values[i],0.0) } else { c(0.0,0.0) });
    let e2 = (&u * s * &vt - &a).norm();
    e1.max(e2)
}

#[cfg(test)]
mod tests {
    #[test]
    fn nalgebra_complex_decompositions() {
        assert!(super::smoke() < 1e-12, "err {}", super::smoke());
    }
}
