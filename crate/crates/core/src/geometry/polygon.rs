//! Unit polygons with exact cyclotomic coordinates.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational};
use crate::cyclotomic::numeric;
use crate::cyclotomic::{cos_2pi_over, cot_pi_over, sin_2pi_over, CycloElt};
use crate::error::{Error, Result};

/// A point with real coordinates in a common cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactPoint {
    pub x: CycloElt,
    pub y: CycloElt,
}

impl ExactPoint {
    /// Lifts both coordinates to a shared index; fails unless both are real.
    pub fn new(x: CycloElt, y: CycloElt) -> Result<Self> {
        let m = crate::cyclotomic::units::lcm(x.index(), y.index());
        let (x, y) = (x.lift(m)?, y.lift(m)?);
        if !x.is_real() || !y.is_real() {
            return Err(Error::InvalidArgument("point coordinates must be real".into()));
        }
        Ok(ExactPoint { x, y })
    }

    pub fn from_rationals(index: usize, x: Rational, y: Rational) -> Self {
        ExactPoint {
            x: CycloElt::from_rational(index, x),
            y: CycloElt::from_rational(index, y),
        }
    }

    pub fn index(&self) -> usize {
        self.x.index()
    }

    pub fn lift(&self, index: usize) -> Result<Self> {
        Ok(ExactPoint {
            x: self.x.lift(index)?,
            y: self.y.lift(index)?,
        })
    }

    pub fn dist_squared(&self, other: &ExactPoint) -> CycloElt {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitPolygon {
    pub n: usize,
    pub vertices: Vec<ExactPoint>,
    pub circumradius: CycloElt,
}

impl UnitPolygon {
    /// Coordinate field index, `4n`.
    pub fn index(&self) -> usize {
        4 * self.n
    }

    /// Shoelace area, `Σ signed_area(origin, A_i, A_{i+1})`.
    pub fn area(&self) -> CycloElt {
        let origin = ExactPoint::from_rationals(self.index(), Rational::zero(), Rational::zero());
        fan_terms(&self.vertices, &origin)
            .iter()
            .fold(CycloElt::zero(self.index()), |acc, t| &acc + t)
    }
}

/// The regular `n`-gon with unit side, centred at the origin, with a
/// vertex on the positive x-axis.
pub fn unit_polygon(n: usize) -> Result<UnitPolygon> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a polygon needs n >= 3, got {n}")));
    }
    let m = 4 * n;
    // sin(π/n) = sin(2π·2/4n)
    let sin = sin_2pi_over(m, 2)?;
    let r = sin.scale(&Rational::from_integer(2.into())).inv()?;
    let mut vertices = Vec::with_capacity(n);
    for k in 0..n as i64 {
        let x = &r * &cos_2pi_over(m, 4 * k)?;
        let y = &r * &sin_2pi_over(m, 4 * k)?;
        vertices.push(ExactPoint { x, y });
    }
    let one = CycloElt::one(m);
    for k in 0..n {
        if vertices[k].dist_squared(&vertices[(k + 1) % n]) != one {
            return Err(Error::Internal(format!("side {k} of the unit {n}-gon is not 1")));
        }
    }
    Ok(UnitPolygon {
        n,
        vertices,
        circumradius: r,
    })
}

/// Twice-halved cross product: `((q-p) × (r-p)) / 2`.
pub fn signed_area(p: &ExactPoint, q: &ExactPoint, r: &ExactPoint) -> CycloElt {
    let a = &(&q.x - &p.x) * &(&r.y - &p.y);
    let b = &(&r.x - &p.x) * &(&q.y - &p.y);
    (&a - &b).scale(&Rational::new(1.into(), 2.into()))
}

fn fan_terms(vertices: &[ExactPoint], p: &ExactPoint) -> Vec<CycloElt> {
    let n = vertices.len();
    (0..n)
        .map(|i| signed_area(p, &vertices[i], &vertices[(i + 1) % n]))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaIdentityReport {
    pub n: usize,
    pub point: ExactPoint,
    /// `signed_area(P, A_i, A_{i+1})` for each side.
    pub terms: Vec<CycloElt>,
    pub sum: CycloElt,
    pub area: CycloElt,
    pub holds: bool,
    pub degenerate_terms: usize,
    pub negative_terms: usize,
}

/// Check that the signed triangles `P A_i A_{i+1}` add up to the polygon
/// area, whatever the position of `P`.
pub fn area_identity_check(poly: &UnitPolygon, p: &ExactPoint) -> Result<AreaIdentityReport> {
    let m = crate::cyclotomic::units::lcm(poly.index(), p.index());
    let p = p.lift(m)?;
    let vertices = poly.vertices.iter().map(|v| v.lift(m)).collect::<Result<Vec<_>>>()?;
    let terms = fan_terms(&vertices, &p);
    let sum = terms.iter().fold(CycloElt::zero(m), |acc, t| &acc + t);
    let area = poly.area().lift(m)?;
    let degenerate_terms = terms.iter().filter(|t| t.is_zero()).count();
    let negative_terms = terms
        .iter()
        .filter(|t| !t.is_zero() && numeric::eval(t).re.to_f64() < 0.0)
        .count();
    Ok(AreaIdentityReport {
        n: poly.n,
        point: p,
        holds: sum == area,
        terms,
        sum,
        area,
        degenerate_terms,
        negative_terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaFormulaReport {
    pub n: usize,
    pub shoelace: CycloElt,
    /// `(n/4) cot(π/n)`.
    pub formula: CycloElt,
    pub holds: bool,
    pub min_poly: Poly,
}

/// Compare the shoelace area of the unit `n`-gon with `(n/4) cot(π/n)`.
pub fn polygon_area_formula_check(n: usize) -> Result<AreaFormulaReport> {
    let poly = unit_polygon(n)?;
    let shoelace = poly.area();
    let formula = cot_pi_over(n)?.scale(&Rational::new(n.into(), 4.into()));
    let min_poly = formula.min_poly()?;
    Ok(AreaFormulaReport {
        n,
        holds: shoelace == formula,
        shoelace,
        formula,
        min_poly,
    })
}

/// `s(s-a)(s-b)(s-c)` with `s = (a+b+c)/2`, the square of the triangle area.
pub fn heron_area_squared(a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    if [a, b, c].iter().any(|v| **v < Rational::zero()) {
        return Err(Error::TriangleInequality("side lengths must be nonnegative".into()));
    }
    let s = (a + b + c) / Rational::from_integer(2.into());
    let v = &s * (&s - a) * (&s - b) * (&s - c);
    if v < Rational::zero() {
        return Err(Error::TriangleInequality(format!(
            "sides {a}, {b}, {c} do not form a triangle"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn pt(x: Rational, y: Rational) -> ExactPoint {
        ExactPoint::from_rationals(1, x, y)
    }

    #[test]
    fn square_and_hexagon() {
        let sq = unit_polygon(4).unwrap();
        assert_eq!(
            sq.circumradius.min_poly().unwrap(),
            Poly::new(vec![rat(-1, 2), int(0), int(1)])
        );
        let hex = unit_polygon(6).unwrap();
        assert_eq!(hex.circumradius.as_rational(), Some(int(1)));
        assert!(hex.vertices.iter().all(|v| v.x.is_real() && v.y.is_real()));
        assert!(unit_polygon(2).is_err());
    }

    #[test]
    fn signed_area_basics() {
        let (o, a, b) = (pt(int(0), int(0)), pt(int(1), int(0)), pt(int(0), int(1)));
        assert_eq!(signed_area(&o, &a, &b).as_rational(), Some(rat(1, 2)));
        assert_eq!(signed_area(&o, &b, &a).as_rational(), Some(rat(-1, 2)));
        let c = pt(int(2), int(0));
        assert!(signed_area(&o, &a, &c).is_zero());
    }

    #[test]
    fn area_identity_cases() {
        let sq = unit_polygon(4).unwrap();
        let r = area_identity_check(&sq, &pt(int(0), int(0))).unwrap();
        assert!(r.holds);
        assert!(r.terms.iter().all(|t| t.as_rational() == Some(rat(1, 4))));

        let hex = unit_polygon(6).unwrap();
        let r = area_identity_check(&hex, &hex.vertices[2]).unwrap();
        assert!(r.holds);
        assert_eq!(r.degenerate_terms, 2);

        let pent = unit_polygon(5).unwrap();
        let r = area_identity_check(&pent, &pt(int(2), int(0))).unwrap();
        assert!(r.holds);
        assert!(r.negative_terms > 0);
    }

    #[test]
    fn area_formula() {
        let r = polygon_area_formula_check(4).unwrap();
        assert!(r.holds);
        assert_eq!(r.shoelace.as_rational(), Some(int(1)));
        let r = polygon_area_formula_check(6).unwrap();
        assert!(r.holds);
        assert_eq!(r.min_poly, Poly::new(vec![rat(-27, 4), int(0), int(1)]));
        let r = polygon_area_formula_check(3).unwrap();
        assert_eq!(r.min_poly, Poly::new(vec![rat(-3, 16), int(0), int(1)]));
    }

    #[test]
    fn heron() {
        assert_eq!(heron_area_squared(&int(3), &int(4), &int(5)).unwrap(), int(36));
        assert_eq!(heron_area_squared(&int(1), &int(2), &int(3)).unwrap(), int(0));
        assert_eq!(heron_area_squared(&int(1), &int(1), &int(1)).unwrap(), rat(3, 16));
        assert!(heron_area_squared(&int(1), &int(1), &int(3)).is_err());
        assert!(heron_area_squared(&int(-1), &int(1), &int(1)).is_err());
    }
}
