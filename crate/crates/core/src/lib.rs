pub mod probe {
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    pub fn eig_probe() -> Vec<f64> {
        let i = Complex64::new(0.0, 1.0);
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                -i,
                i,
                Complex64::new(0.0, 0.0),
            ],
        );
        let eig = m.symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn pauli_y_spectrum() {
        let vals = super::probe::eig_probe();
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
    }
}
