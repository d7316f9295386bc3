//! State files and observable tables.
//!
//! A state file holds the grid (`n`, `p_max`), the representation tag and the
//! node values in row-major order (`z` fastest), each node a complex triple.
//! Two encodings are supported:
//!
//! * JSON: `{"n": 32, "p_max": 8.0, "representation": "momentum",
//!   "values": [[[re, im], [re, im], [re, im]], ...]}`
//! * binary: the magic bytes `PHST`, a little-endian `u32` version (1), `u32`
//!   `n`, `f64` `p_max`, a `u8` tag (0 momentum, 1 position), then `6n³`
//!   little-endian `f64` values `re₁ im₁ re₂ im₂ re₃ im₃` per node.
//!
//! Files whose name ends in `.json` use JSON; anything else is binary.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{MomentumGrid, ObservableRow, Representation, SpinorField};
use crate::spin::CVec3;
use crate::{Error, Result};

const MAGIC: &[u8; 4] = b"PHST";
const VERSION: u32 = 1;
const HEADER_LEN: usize = 4 + 4 + 4 + 8 + 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDocument {
    n: usize,
    p_max: f64,
    representation: Representation,
    values: Vec<CVec3>,
}

pub fn to_json(state: &SpinorField) -> Result<String> {
    let doc = StateDocument {
        n: state.grid().n(),
        p_max: state.grid().p_max(),
        representation: state.representation(),
        values: state.values().to_vec(),
    };
    Ok(serde_json::to_string(&doc)?)
}

pub fn from_json(text: &str) -> Result<SpinorField> {
    let doc: StateDocument = serde_json::from_str(text)?;
    let grid = MomentumGrid::new(doc.n, doc.p_max)?;
    SpinorField::from_values(grid, doc.representation, doc.values)
}

pub fn to_bytes(state: &SpinorField) -> Vec<u8> {
    let grid = state.grid();
    let mut out = Vec::with_capacity(HEADER_LEN + grid.len() * 48);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(grid.n() as u32).to_le_bytes());
    out.extend_from_slice(&grid.p_max().to_le_bytes());
    out.push(match state.representation() {
        Representation::Momentum => 0,
        Representation::Position => 1,
    });
    for v in state.values() {
        for c in v.iter() {
            out.extend_from_slice(&c.re.to_le_bytes());
            out.extend_from_slice(&c.im.to_le_bytes());
        }
    }
    out
}

pub fn from_bytes(bytes: &[u8]) -> Result<SpinorField> {
    let bad = |msg: &str| Error::StateFormat(msg.to_string());
    if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
        return Err(bad("missing PHST header"));
    }
    let u32_at = |at: usize| u32::from_le_bytes(bytes[at..at + 4].try_into().expect("4 bytes"));
    let version = u32_at(4);
    if version != VERSION {
        return Err(Error::StateFormat(format!("unsupported version {version}")));
    }
    let n = u32_at(8) as usize;
    let p_max = f64::from_le_bytes(bytes[12..20].try_into().expect("8 bytes"));
    let representation = match bytes[20] {
        0 => Representation::Momentum,
        1 => Representation::Position,
        tag => return Err(Error::StateFormat(format!("unknown representation tag {tag}"))),
    };
    let grid = MomentumGrid::new(n, p_max)?;
    let body = &bytes[HEADER_LEN..];
    if body.len() != grid.len() * 48 {
        return Err(Error::StateFormat(format!(
            "expected {} bytes of node data, found {}",
            grid.len() * 48,
            body.len()
        )));
    }
    let values = body
        .chunks_exact(48)
        .map(|node| {
            let f = |k: usize| f64::from_le_bytes(node[8 * k..8 * k + 8].try_into().expect("8 bytes"));
            CVec3::new(
                Complex64::new(f(0), f(1)),
                Complex64::new(f(2), f(3)),
                Complex64::new(f(4), f(5)),
            )
        })
        .collect();
    SpinorField::from_values(grid, representation, values)
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn read_state(path: &Path) -> Result<SpinorField> {
    if is_json(path) {
        from_json(&fs::read_to_string(path)?)
    } else {
        from_bytes(&fs::read(path)?)
    }
}

pub fn write_state(path: &Path, state: &SpinorField) -> Result<()> {
    if is_json(path) {
        fs::write(path, to_json(state)?)?;
    } else {
        fs::write(path, to_bytes(state))?;
    }
    Ok(())
}

pub const CSV_HEADER: &str = "step,time,norm,energy,helicity,defect";

/// Writes observable rows as CSV with a header line.
pub fn write_csv<W: Write>(mut out: W, rows: &[ObservableRow]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{},{}", r.step, r.time, r.norm, r.energy, r.helicity, r.defect)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schrodinger::gaussian_packet;
    use crate::{Helicity, Vec3};

    fn sample() -> SpinorField {
        let grid = MomentumGrid::new(8, 2.0).unwrap();
        gaussian_packet(&grid, &Vec3::new(1.0, 0.5, -0.5), 0.3, Helicity::Negative).unwrap()
    }

    #[test]
    fn json_round_trip_is_exact() {
        let s = sample();
        let back = from_json(&to_json(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.norm(), s.norm());
    }

    #[test]
    fn binary_round_trip_is_exact() {
        let s = sample().to_position().unwrap();
        let back = from_bytes(&to_bytes(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn malformed_inputs() {
        let bytes = to_bytes(&sample());
        assert!(from_bytes(&bytes[..bytes.len() - 1]).is_err());
        assert!(from_bytes(b"NOPE").is_err());
        let mut tagged = bytes.clone();
        tagged[20] = 7;
        assert!(from_bytes(&tagged).is_err());
        let err = from_json(r#"{"n":8,"p_max":2.0,"values":[]}"#).unwrap_err();
        assert!(err.to_string().contains("representation"));
        assert!(from_json(r#"{"n":8,"p_max":2.0,"representation":"momentum","values":[]}"#).is_err());
    }

    #[test]
    fn csv_layout() {
        let rows = [ObservableRow { step: 0, time: 0.0, norm: 1.0, energy: 2.5, helicity: 1.0, defect: 0.0 }];
        let mut out = Vec::new();
        write_csv(&mut out, &rows).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "step,time,norm,energy,helicity,defect\n0,0,1,2.5,1,0\n");
    }
}
