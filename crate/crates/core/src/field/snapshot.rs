//! `BKF1` field snapshots: a little-endian header (magic, `nx`, `ny` as u32,
//! spacing and origin as f64) followed by interleaved re/im f64 samples in
//! row-major order.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;

use super::{Grid2, ScalarField};
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"BKF1";
const HEADER_LEN: usize = 4 + 4 + 4 + 8 * 3;

pub fn encode(f: &ScalarField) -> Vec<u8> {
    let g = f.grid();
    let mut out = Vec::with_capacity(HEADER_LEN + 16 * g.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(g.nx() as u32).to_le_bytes());
    out.extend_from_slice(&(g.ny() as u32).to_le_bytes());
    out.extend_from_slice(&g.spacing().to_le_bytes());
    out.extend_from_slice(&g.origin()[0].to_le_bytes());
    out.extend_from_slice(&g.origin()[1].to_le_bytes());
    for z in f.samples() {
        out.extend_from_slice(&z.re.to_le_bytes());
        out.extend_from_slice(&z.im.to_le_bytes());
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<ScalarField> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Snapshot("truncated header".into()));
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::Snapshot("bad magic".into()));
    }
    let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().unwrap()) as usize;
    let f64_at = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().unwrap());
    let (nx, ny) = (u32_at(4), u32_at(8));
    let grid = Grid2::new([f64_at(20), f64_at(28)], f64_at(12), nx, ny)?;
    let body = &bytes[HEADER_LEN..];
    if body.len() != 16 * grid.len() {
        return Err(Error::Snapshot(format!(
            "expected {} sample bytes, found {}",
            16 * grid.len(),
            body.len()
        )));
    }
    let samples = body
        .chunks_exact(16)
        .map(|c| {
            Complex64::new(
                f64::from_le_bytes(c[..8].try_into().unwrap()),
                f64::from_le_bytes(c[8..].try_into().unwrap()),
            )
        })
        .collect();
    ScalarField::new(grid, samples)
}

pub fn write(path: &Path, f: &ScalarField) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(&encode(f))?;
    Ok(())
}

pub fn read(path: &Path) -> Result<ScalarField> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    decode(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn header_layout() {
        let g = Grid2::new([0.5, -1.0], 0.25, 3, 2).unwrap();
        let f = ScalarField::from_fn(g, |z| Complex64::new(z[0], z[1])).unwrap();
        let b = encode(&f);
        assert_eq!(&b[..4], b"BKF1");
        assert_eq!(u32::from_le_bytes(b[4..8].try_into().unwrap()), 3);
        assert_eq!(u32::from_le_bytes(b[8..12].try_into().unwrap()), 2);
        assert_eq!(f64::from_le_bytes(b[12..20].try_into().unwrap()), 0.25);
        assert_eq!(f64::from_le_bytes(b[20..28].try_into().unwrap()), 0.5);
        assert_eq!(f64::from_le_bytes(b[28..36].try_into().unwrap()), -1.0);
        assert_eq!(b.len(), 36 + 6 * 16);
    }

    #[test]
    fn rejects_corrupt_input() {
        assert!(decode(b"BKF").is_err());
        let g = Grid2::new([0.0, 0.0], 1.0, 2, 2).unwrap();
        let mut b = encode(&ScalarField::zeros(g));
        b[0] = b'X';
        assert!(decode(&b).is_err());
        let mut b = encode(&ScalarField::zeros(g));
        b.pop();
        assert!(decode(&b).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(nx in 2usize..9, ny in 2usize..9, h in 1e-3f64..10.0,
                      ox in -5.0f64..5.0, oy in -5.0f64..5.0, seed in any::<u64>()) {
            let g = Grid2::new([ox, oy], h, nx, ny).unwrap();
            let f = ScalarField::from_fn(g, |z| {
                let t = (z[0] * 1.7 + z[1] * 0.3 + seed as f64 * 1e-9).sin();
                Complex64::new(t, -t * 2.0)
            }).unwrap();
            prop_assert_eq!(decode(&encode(&f)).unwrap(), f);
        }
    }
}
