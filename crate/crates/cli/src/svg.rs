//! SVG rendering of planar realizations with the kernel shaded. All
//! coordinates are formatted from exact rationals.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use starfan::arith::Rational;
use starfan::geometry::{kernel, FacetHalfspace};
use starfan::{Error, Realization, Result};

const KERNEL_FILL: &str = "#c6dbef";
const KERNEL_STROKE: &str = "#6baed6";
const EDGE: &str = "#222222";
const VERTEX: &str = "#d62728";
const BASE: &str = "#2ca02c";
const SIZE: u32 = 480;
const PLACES: u32 = 6;

pub type Point = [Rational; 2];

/// `r` rounded half away from zero to `places` decimals, trailing zeros
/// dropped.
pub fn decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -(-scaled + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    };
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let places = places as usize;
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let frac = frac_part.trim_end_matches('0');
    let sign = if negative { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Axis-aligned box `[min_x, min_y, max_x, max_y]` around the points and
/// the base point, enlarged by 10% on each side.
pub fn viewport(r: &Realization) -> [Rational; 4] {
    let mut all: Vec<&[Rational]> = r.points().iter().map(Vec::as_slice).collect();
    all.push(r.base_point());
    let min = |i: usize| all.iter().map(|p| p[i].clone()).min().expect("nonempty");
    let max = |i: usize| all.iter().map(|p| p[i].clone()).max().expect("nonempty");
    let (x0, y0, x1, y1) = (min(0), min(1), max(0), max(1));
    let (w, h) = (&x1 - &x0, &y1 - &y0);
    let span = if w > h { w.clone() } else { h.clone() };
    let span = if span.is_zero() { Rational::one() } else { span };
    let tenth = Rational::new(BigInt::one(), BigInt::from(10));
    let mx = if w.is_zero() { &span * &tenth } else { &w * &tenth };
    let my = if h.is_zero() { &span * &tenth } else { &h * &tenth };
    [&x0 - &mx, &y0 - &my, &x1 + &mx, &y1 + &my]
}

fn clip(poly: &[Point], h: &FacetHalfspace) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for i in 0..poly.len() {
        let prev = &poly[(i + poly.len() - 1) % poly.len()];
        let cur = &poly[i];
        let (sp, sc) = (h.slack(prev), h.slack(cur));
        let crossing = || {
            let t = &sp / (&sp - &sc);
            [
                &prev[0] + &t * (&cur[0] - &prev[0]),
                &prev[1] + &t * (&cur[1] - &prev[1]),
            ]
        };
        if !sc.is_negative() {
            if sp.is_negative() {
                out.push(crossing());
            }
            out.push(cur.clone());
        } else if !sp.is_negative() {
            out.push(crossing());
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// The closure of the kernel (seeded at the base point) intersected with
/// `bbox`, as a counter-clockwise polygon. `None` when the realization is
/// not starshaped at its base point.
pub fn kernel_polygon(r: &Realization, bbox: &[Rational; 4]) -> Option<Vec<Point>> {
    let kd = kernel(r, r.base_point()).ok()?;
    let [x0, y0, x1, y1] = bbox.clone();
    let mut poly = vec![
        [x0.clone(), y0.clone()],
        [x1.clone(), y0],
        [x1, y1.clone()],
        [x0, y1],
    ];
    for h in &kd.halfspaces {
        poly = clip(&poly, h);
        if poly.is_empty() {
            return None;
        }
    }
    (poly.len() >= 3).then_some(poly)
}

/// Renders a realization of a 1-dimensional complex in the plane.
pub fn render(r: &Realization) -> Result<String> {
    if r.ambient_dim() != 2 {
        return Err(Error::Dimension(format!(
            "plotting needs points in the plane, got dimension {}",
            r.ambient_dim()
        )));
    }
    let bbox = viewport(r);
    let [x0, y0, x1, y1] = &bbox;
    let (w, h) = (x1 - x0, y1 - y0);
    let span = if w > h { w.clone() } else { h.clone() };
    let unit = |num: i64, den: i64| &span * Rational::new(BigInt::from(num), BigInt::from(den));
    let fx = |x: &Rational| decimal(x, PLACES);
    let fy = |y: &Rational| decimal(&-y, PLACES);

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{SIZE}\" height=\"{SIZE}\">",
        fx(x0),
        fy(y1),
        decimal(&w, PLACES),
        decimal(&h, PLACES)
    );
    if let Some(poly) = kernel_polygon(r, &bbox) {
        let pts: Vec<String> = poly.iter().map(|p| format!("{},{}", fx(&p[0]), fy(&p[1]))).collect();
        let _ = writeln!(
            s,
            "  <polygon class=\"kernel\" points=\"{}\" fill=\"{KERNEL_FILL}\" stroke=\"{KERNEL_STROKE}\" stroke-width=\"{}\"/>",
            pts.join(" "),
            decimal(&unit(1, 400), PLACES)
        );
    }
    let _ = writeln!(
        s,
        "  <g class=\"edges\" stroke=\"{EDGE}\" stroke-width=\"{}\">",
        decimal(&unit(1, 200), PLACES)
    );
    for facet in r.complex().facets() {
        let v: Vec<&usize> = facet.iter().collect();
        if v.len() == 2 {
            let (a, b) = (r.point(*v[0]), r.point(*v[1]));
            let _ = writeln!(
                s,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fx(&a[0]),
                fy(&a[1]),
                fx(&b[0]),
                fy(&b[1])
            );
        }
    }
    s.push_str("  </g>\n");
    let radius = decimal(&unit(1, 100), PLACES);
    let _ = writeln!(s, "  <g class=\"vertices\" fill=\"{VERTEX}\">");
    for p in r.points() {
        let _ = writeln!(s, "    <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\"/>", fx(&p[0]), fy(&p[1]));
    }
    s.push_str("  </g>\n");
    let _ = writeln!(
        s,
        "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"{}\">",
        decimal(&unit(1, 25), PLACES)
    );
    let offset = unit(1, 50);
    for (j, p) in r.points().iter().enumerate() {
        let _ = writeln!(
            s,
            "    <text x=\"{}\" y=\"{}\">{}</text>",
            fx(&(&p[0] + &offset)),
            fy(&(&p[1] + &offset)),
            j + 1
        );
    }
    s.push_str("  </g>\n");
    let b = r.base_point();
    let _ = writeln!(
        s,
        "  <circle class=\"base-point\" cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"{BASE}\"/>",
        fx(&b[0]),
        fy(&b[1])
    );
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use starfan::arith::{int, ratio};
    use starfan::fixtures;

    #[test]
    fn decimals_are_exact_when_possible() {
        assert_eq!(decimal(&ratio(1, 4), 6), "0.25");
        assert_eq!(decimal(&ratio(-3, 2), 6), "-1.5");
        assert_eq!(decimal(&ratio(1, 3), 6), "0.333333");
        assert_eq!(decimal(&ratio(2, 3), 6), "0.666667");
        assert_eq!(decimal(&ratio(-1, 3_000_000), 6), "0");
        assert_eq!(decimal(&int(42), 6), "42");
    }

    /// Vertices of `{slack_J >= 0} ∩ bbox` by checking every pair of
    /// boundary lines.
    fn brute_force_vertices(r: &Realization, bbox: &[Rational; 4]) -> Vec<Point> {
        let kd = kernel(r, r.base_point()).unwrap();
        // Lines a x + b y = c.
        let mut lines: Vec<(Rational, Rational, Rational)> = kd
            .halfspaces
            .iter()
            .map(|h| (h.coeffs[0].clone(), h.coeffs[1].clone(), -h.constant.clone()))
            .collect();
        let [x0, y0, x1, y1] = bbox.clone();
        lines.push((int(1), int(0), x0.clone()));
        lines.push((int(1), int(0), x1.clone()));
        lines.push((int(0), int(1), y0.clone()));
        lines.push((int(0), int(1), y1.clone()));
        let mut out = Vec::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a1, b1, c1) = &lines[i];
                let (a2, b2, c2) = &lines[j];
                let det = a1 * b2 - a2 * b1;
                if det.is_zero() {
                    continue;
                }
                let p = [(c1 * b2 - c2 * b1) / &det, (a1 * c2 - a2 * c1) / &det];
                let inside = kd.halfspaces.iter().all(|h| !h.slack(&p).is_negative())
                    && p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1;
                if inside && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn kernel_polygon_matches_halfplane_vertices() {
        for r in [fixtures::nonconvex_pentagon(), fixtures::square(), fixtures::convex_pentagon()] {
            let bbox = viewport(&r);
            let mut poly = kernel_polygon(&r, &bbox).unwrap();
            poly.sort();
            assert_eq!(poly, brute_force_vertices(&r, &bbox));
        }
    }

    #[test]
    fn square_kernel_is_the_full_interior() {
        let r = fixtures::square();
        let mut poly = kernel_polygon(&r, &viewport(&r)).unwrap();
        poly.sort();
        let mut expected = vec![[int(1), int(0)], [int(0), int(1)], [int(-1), int(0)], [int(0), int(-1)]];
        expected.sort();
        assert_eq!(poly, expected);
    }

    #[test]
    fn pentagon_kernel_is_cut_by_the_reflex_edges() {
        let r = fixtures::nonconvex_pentagon();
        let poly = kernel_polygon(&r, &viewport(&r)).unwrap();
        // The lines through the reflex vertex's edges meet the square's
        // sides at x = 0 (y = ±2).
        assert!(poly.contains(&[int(0), int(2)]));
        assert!(poly.contains(&[int(0), int(-2)]));
        assert!(poly.contains(&[int(-1), int(0)]));
        assert!(poly.iter().all(|p| p[0] >= int(-1)));
    }

    #[test]
    fn rendering_is_deterministic_and_planar_only() {
        let r = fixtures::nonconvex_pentagon();
        let a = render(&r).unwrap();
        assert_eq!(a, render(&r).unwrap());
        assert!(a.contains("class=\"kernel\""));
        assert!(render(&fixtures::octahedron()).is_err());
        assert!(!render(&fixtures::path()).unwrap().contains("class=\"kernel\""));
        let _ = ratio(1, 2);
    }
}
