//! Points on two parallel rows.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{params, CertKind, Certificate, GeneratedSet, Geometry};
use crate::error::{Error, Result};
use crate::exact::{frac, int, AreaKey, Point2, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoRowsMode {
    /// Rows offset by half a step: `n − 2` acute minimum-area triangles.
    Acute,
    /// Aligned rows: `⌊(n−1)/2⌋` distinct areas.
    Distinct,
}

/// Height of the upper row in acute mode. Any rational `h > 1/2` keeps the
/// nearest triangles acute; 13/15 sits next to √3/2.
pub const ACUTE_ROW_HEIGHT: (i64, i64) = (13, 15);

/// `n/2` points `(i, 0)` and `n/2` points on a parallel row above. Indices:
/// bottom row first, then top row.
pub fn gen_two_rows(n: usize, mode: TwoRowsMode) -> Result<GeneratedSet> {
    if n < 4 {
        return Err(Error::TooFewPoints { need: 4, got: n });
    }
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    let m = n / 2;
    let (h, shift): (Rat, Rat) = match mode {
        TwoRowsMode::Acute => (frac(ACUTE_ROW_HEIGHT.0, ACUTE_ROW_HEIGHT.1), frac(1, 2)),
        TwoRowsMode::Distinct => (int(1), int(0)),
    };
    let mut pts: Vec<Point2> = (0..m).map(|i| Point2::from_ints(i as i64, 0)).collect();
    pts.extend((0..m).map(|i| Point2::new(int(i as i64) + &shift, h.clone())));
    let cert = match mode {
        TwoRowsMode::Acute => {
            // bottom pair (i, i+1) with apex i on top, top pair (i, i+1) with apex i+1 below
            let mut triples = Vec::with_capacity(n - 2);
            for i in 0..m - 1 {
                triples.push(vec![i, i + 1, m + i]);
                triples.push(vec![m + i, m + i + 1, i + 1]);
            }
            Some(Certificate {
                kind: CertKind::MinArea,
                target_key: Some(AreaKey(h.clone())),
                triples,
                origin: None,
                provenance: "unit base on one row, nearest apex on the other row".into(),
                params: Default::default(),
                seed: None,
            })
        }
        TwoRowsMode::Distinct => None,
    };
    let mode_name = match mode {
        TwoRowsMode::Acute => "acute",
        TwoRowsMode::Distinct => "distinct",
    };
    Ok(GeneratedSet::new(
        Geometry::Plane(pts),
        cert,
        params(&[("construction", json!("two-rows")), ("n", json!(n)), ("mode", json!(mode_name)), ("height", json!(h.to_string()))]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_errors() {
        let g = gen_two_rows(10, TwoRowsMode::Acute).unwrap();
        assert_eq!(g.geometry.len(), 10);
        assert_eq!(g.cert_len(), 8);
        assert!(matches!(gen_two_rows(7, TwoRowsMode::Acute), Err(Error::OddN(7))));
        assert!(gen_two_rows(8, TwoRowsMode::Distinct).unwrap().certificate.is_none());
    }
}
