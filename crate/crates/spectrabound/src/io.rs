//! JSON file formats for matrices and spectra.
//!
//! Matrix: `{"dim": d, "entries": [[re, im], ...]}` row-major.
//! Spectrum: `{"n": N, "m": M, "values": [...]}`; values may arrive unsorted,
//! construction sorts ascending.

use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::HermitianMatrix;
use crate::types::{BipartiteDims, Spectrum};

#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SpectrumFile {
    n: usize,
    m: usize,
    values: Vec<f64>,
}

pub fn read_hermitian(path: &Path) -> Result<HermitianMatrix> {
    let text = std::fs::read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)?;
    if file.entries.len() != file.dim * file.dim {
        return Err(Error::Parse(format!(
            "expected {} entries for dim {}, got {}",
            file.dim * file.dim,
            file.dim,
            file.entries.len()
        )));
    }
    let data = DMatrix::from_row_iterator(
        file.dim,
        file.dim,
        file.entries.iter().map(|[re, im]| Complex64::new(*re, *im)),
    );
    HermitianMatrix::new(data)
}

pub fn write_hermitian(h: &HermitianMatrix, path: &Path) -> Result<()> {
    let d = h.dim();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let z = h.as_matrix()[(i, j)];
            entries.push([z.re, z.im]);
        }
    }
    let file = MatrixFile { dim: d, entries };
    std::fs::write(path, serde_json::to_string(&file)?)?;
    Ok(())
}

pub fn read_spectrum(path: &Path) -> Result<Spectrum> {
    let text = std::fs::read_to_string(path)?;
    let file: SpectrumFile = serde_json::from_str(&text)?;
    let dims = BipartiteDims::new(file.n, file.m)?;
    Spectrum::new(file.values, dims)
}

pub fn write_spectrum(s: &Spectrum, path: &Path) -> Result<()> {
    let file = SpectrumFile {
        n: s.dims().n(),
        m: s.dims().m(),
        values: s.values().to_vec(),
    };
    std::fs::write(path, serde_json::to_string(&file)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::haar_unitary;

    #[test]
    fn matrix_and_spectrum_round_trip() {
        let dir = std::env::temp_dir().join("spectrabound-io-test");
        std::fs::create_dir_all(&dir).unwrap();

        let u = haar_unitary(4, 2);
        let h = u.conjugate(&HermitianMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]));
        let mpath = dir.join("m.json");
        write_hermitian(&h, &mpath).unwrap();
        let back = read_hermitian(&mpath).unwrap();
        assert!(h.max_abs_diff(&back) < 1e-15);

        let dims = BipartiteDims::new(2, 3).unwrap();
        let s = Spectrum::new(vec![0.3, 0.05, 0.1, 0.15, 0.2, 0.2], dims).unwrap();
        let spath = dir.join("s.json");
        write_spectrum(&s, &spath).unwrap();
        let back = read_spectrum(&spath).unwrap();
        assert_eq!(s, back);

        // Unsorted values on disk are accepted and sorted on read.
        std::fs::write(
            &spath,
            r#"{"n": 2, "m": 2, "values": [0.5, 0.1, 0.3, 0.1]}"#,
        )
        .unwrap();
        let s = read_spectrum(&spath).unwrap();
        assert_eq!(s.values(), &[0.1, 0.1, 0.3, 0.5]);

        // Malformed files are parse errors, not panics.
        std::fs::write(&spath, "{").unwrap();
        assert!(matches!(read_spectrum(&spath), Err(Error::Parse(_))));
    }
}
