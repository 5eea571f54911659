//! Bounded search for points at rational distance from every vertex of
//! the unit triangle, square and hexagon.
//!
//! For `n = 3, 6` the search covers points `(x, t√3)` with `x, t` rational.
//! Any rational-distance point has this shape: the differences of squared
//! distances to suitable pairs of vertices are linear in `x` and in `√3 y`
//! with rational coefficients, so both `x` and `y/√3` are rational. For
//! `n = 4` the distances `r₁, r₂` to two adjacent corners determine the
//! point, so enumerating them is complete up to the bound.

use std::collections::BTreeSet;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{fmt_rational, serde_rational_vec};
use crate::algebra::{int, is_square_rational, rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalPointCandidate {
    pub n: usize,
    /// `[x, t]` for the point `(x, t√3)` when `n = 3, 6`; `[r₁, r₂, x, y]`
    /// when `n = 4`.
    #[serde(with = "serde_rational_vec")]
    pub parameters: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub distances: Vec<Rational>,
}

impl RationalPointCandidate {
    /// Recompute the squared distances from scratch and compare with the
    /// stored distances.
    pub fn recertify(&self) -> bool {
        let squared = match self.n {
            3 | 6 => {
                let (x, t) = (&self.parameters[0], &self.parameters[1]);
                sqrt3_vertices(self.n)
                    .iter()
                    .map(|(a, b)| sqrt3_dist_squared(x, t, a, b))
                    .collect::<Vec<_>>()
            }
            4 => {
                let (x, y) = (&self.parameters[2], &self.parameters[3]);
                square_vertices()
                    .iter()
                    .map(|(a, b)| (x - a) * (x - a) + (y - b) * (y - b))
                    .collect()
            }
            _ => return false,
        };
        squared.len() == self.distances.len()
            && squared
                .iter()
                .zip(&self.distances)
                .all(|(sq, d)| !d.is_negative() && &(d * d) == sq)
    }
}

/// Vertices `(a, b√3)` stored as `(a, b)`.
fn sqrt3_vertices(n: usize) -> Vec<(Rational, Rational)> {
    match n {
        3 => vec![(int(0), int(0)), (int(1), int(0)), (rat(1, 2), rat(1, 2))],
        _ => vec![
            (int(1), int(0)),
            (rat(1, 2), rat(1, 2)),
            (rat(-1, 2), rat(1, 2)),
            (int(-1), int(0)),
            (rat(-1, 2), rat(-1, 2)),
            (rat(1, 2), rat(-1, 2)),
        ],
    }
}

fn square_vertices() -> Vec<(Rational, Rational)> {
    vec![(int(0), int(0)), (int(1), int(0)), (int(1), int(1)), (int(0), int(1))]
}

fn sqrt3_dist_squared(x: &Rational, t: &Rational, a: &Rational, b: &Rational) -> Rational {
    let dx = x - a;
    let dt = t - b;
    &dx * &dx + int(3) * &dt * &dt
}

/// Distinct rationals `p/q` with `|p| <= bound`, `1 <= q <= bound`, sorted.
pub fn box_rationals(bound: u64, signed: bool) -> Vec<Rational> {
    let lo = if signed { -(bound as i64) } else { 0 };
    let set: BTreeSet<Rational> = (lo..=bound as i64)
        .flat_map(|p| (1..=bound as i64).map(move |q| Rational::new(BigInt::from(p), BigInt::from(q))))
        .collect();
    set.into_iter().collect()
}

fn all_square_roots(squares: &[Rational]) -> Option<Vec<Rational>> {
    squares.iter().map(is_square_rational).collect()
}

fn search_sqrt3(n: usize, bound: u64) -> Vec<RationalPointCandidate> {
    let params = box_rationals(bound, true);
    let vertices = sqrt3_vertices(n);
    params
        .par_iter()
        .flat_map_iter(|x| {
            let vertices = &vertices;
            params.iter().filter_map(move |t| {
                let squares: Vec<_> = vertices.iter().map(|(a, b)| sqrt3_dist_squared(x, t, a, b)).collect();
                all_square_roots(&squares).map(|distances| RationalPointCandidate {
                    n,
                    parameters: vec![x.clone(), t.clone()],
                    distances,
                })
            })
        })
        .collect()
}

fn search_square(bound: u64) -> Vec<RationalPointCandidate> {
    let params = box_rationals(bound, false);
    params
        .par_iter()
        .flat_map_iter(|r1| {
            params.iter().flat_map(move |r2| {
                let x = (r1 * r1 - r2 * r2 + int(1)) / int(2);
                let y_sq = r1 * r1 - &x * &x;
                let mut hits = Vec::new();
                let Some(y) = is_square_rational(&y_sq) else {
                    return hits;
                };
                let ys = if y.is_zero() { vec![y] } else { vec![y.clone(), -y] };
                for y in ys {
                    let rest = [
                        (&x - int(1)) * (&x - int(1)) + (&y - int(1)) * (&y - int(1)),
                        &x * &x + (&y - int(1)) * (&y - int(1)),
                    ];
                    if let Some(tail) = all_square_roots(&rest) {
                        hits.push(RationalPointCandidate {
                            n: 4,
                            parameters: vec![r1.clone(), r2.clone(), x.clone(), y],
                            distances: vec![r1.clone(), r2.clone(), tail[0].clone(), tail[1].clone()],
                        });
                    }
                }
                hits
            })
        })
        .collect()
}

/// Every certified rational-distance point of the unit `n`-gon
/// (`n ∈ {3, 4, 6}`) whose parameters have numerators and denominators
/// at most `bound` in absolute value, sorted by parameters.
pub fn search_rational_points(n: usize, bound: u64) -> Result<Vec<RationalPointCandidate>> {
    if bound < 1 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let mut hits = match n {
        3 | 6 => search_sqrt3(n, bound),
        4 => search_square(bound),
        5 | 7.. if !matches!(n, 8 | 12 | 24) => return Err(Error::UnsupportedPolygon(n)),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "the search supports n = 3, 4, 6 only, got {n}"
            )))
        }
    };
    hits.sort_by(|a, b| a.parameters.cmp(&b.parameters));
    hits.dedup();
    Ok(hits)
}

/// Write candidates as CSV with columns `parameters,distances,n`; lists
/// are space-separated rationals.
pub fn write_candidates_csv<W: Write>(out: W, hits: &[RationalPointCandidate]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["parameters", "distances", "n"])?;
    for h in hits {
        let join = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>().join(" ");
        w.write_record([join(&h.parameters), join(&h.distances), h.n.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_centroid() {
        let hits = search_rational_points(6, 1).unwrap();
        let centroid = hits.iter().find(|h| h.parameters == vec![int(0), int(0)]).unwrap();
        assert_eq!(centroid.distances, vec![int(1); 6]);
        assert!(hits.iter().all(RationalPointCandidate::recertify));
    }

    #[test]
    fn triangle_vertex() {
        let hits = search_rational_points(3, 1).unwrap();
        let v = hits.iter().find(|h| h.parameters == vec![int(0), int(0)]).unwrap();
        assert_eq!(v.distances, vec![int(0), int(1), int(1)]);
    }

    #[test]
    fn square_is_empty_small() {
        assert!(search_rational_points(4, 8).unwrap().is_empty());
    }

    #[test]
    fn unsupported() {
        assert_eq!(search_rational_points(5, 2), Err(Error::UnsupportedPolygon(5)));
        assert!(search_rational_points(8, 2).is_err());
        assert!(search_rational_points(6, 0).is_err());
    }

    #[test]
    fn csv_layout() {
        let hits = search_rational_points(6, 1).unwrap();
        let mut buf = Vec::new();
        write_candidates_csv(&mut buf, &hits).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("parameters,distances,n\n"));
        assert!(text.contains("0 0,1 1 1 1 1 1,6"));
    }
}
