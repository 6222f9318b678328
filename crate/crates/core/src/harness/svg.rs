//! SVG figures for planar instances.
//!
//! Coordinates are scaled so the bounding box plus a 5% margin fills an
//! 800-unit-wide viewBox (the y axis flipped upward); radii and stroke
//! widths are then in the same units regardless of the input scale.

use std::cmp::Ordering;
use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{rational_to_f64, Rational};
use crate::search::{Instance, RainbowPartition};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.05;
const RADIUS: f64 = 4.0;
const CROSS: f64 = 8.0;
const PALETTE: [&str; 8] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a6761d", "#f781bf", "#17becf"];
const FACE_FILL: &str = "#555555";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SvgError {
    #[error("plots need d = 2, instance has d = {0}")]
    Dimension(usize),
    #[error("instance has no coordinates")]
    NoGeometry,
    #[error("partition references vertex {0} outside the instance")]
    VertexOutOfRange(usize),
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(points: &[(f64, f64)]) -> Self {
        let fold =
            |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| points.iter().map(pick).fold(init, f);
        let (lo_x, hi_x) = (fold(f64::min, f64::INFINITY, |p| p.0), fold(f64::max, f64::NEG_INFINITY, |p| p.0));
        let (lo_y, hi_y) = (fold(f64::min, f64::INFINITY, |p| p.1), fold(f64::max, f64::NEG_INFINITY, |p| p.1));
        // a degenerate box still gets a unit extent
        let span_x = if hi_x > lo_x { hi_x - lo_x } else { 1.0 };
        let span_y = if hi_y > lo_y { hi_y - lo_y } else { 1.0 };
        let (mx, my) = (span_x * MARGIN, span_y * MARGIN);
        let scale = WIDTH / (span_x + 2.0 * mx);
        Frame { min_x: lo_x - mx, max_y: hi_y + my, scale, height: (span_y + 2.0 * my) * scale }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        ((p.0 - self.min_x) * self.scale, (self.max_y - p.1) * self.scale)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    // avoid "-0.000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000".to_string()
    } else {
        s
    }
}

fn cross(o: &[Rational], a: &[Rational], b: &[Rational]) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Exact convex hull (monotone chain), counter-clockwise, collinear points dropped.
fn hull(points: &[&[Rational]]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i][0].cmp(&points[j][0]).then_with(|| points[i][1].cmp(&points[j][1])));
    order.dedup_by(|a, b| points[*a] == points[*b]);
    if order.len() < 3 {
        return order;
    }
    let mut chain: Vec<usize> = Vec::with_capacity(2 * order.len());
    let build = |chain: &mut Vec<usize>, idx: usize, floor: usize| {
        while chain.len() >= floor + 2 {
            let (a, b) = (chain[chain.len() - 2], chain[chain.len() - 1]);
            if cross(points[a], points[b], points[idx]).cmp(&Rational::from_integer(0.into())) != Ordering::Greater {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(idx);
    };
    for &i in &order {
        build(&mut chain, i, 0);
    }
    let lower = chain.len() - 1;
    for &i in order.iter().rev().skip(1) {
        build(&mut chain, i, lower);
    }
    chain.pop();
    chain
}

/// Renders the points of a planar instance, and optionally the faces and
/// witness of a partition. Output is a pure function of the inputs.
pub fn emit_svg(instance: &Instance, partition: Option<&RainbowPartition>) -> Result<String, SvgError> {
    if instance.d != 2 {
        return Err(SvgError::Dimension(instance.d));
    }
    let config = instance.config.as_ref().ok_or(SvgError::NoGeometry)?;
    let approx: Vec<(f64, f64)> =
        config.points().iter().map(|p| (rational_to_f64(&p[0]), rational_to_f64(&p[1]))).collect();
    let frame = Frame::new(&approx);
    let at = |p: (f64, f64)| {
        let (x, y) = frame.map(p);
        (num(x), num(y))
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        num(WIDTH),
        num(frame.height),
        num(WIDTH),
        num(frame.height)
    );
    out.push_str(r#"<rect width="100%" height="100%" fill="white"/>"#);
    out.push('\n');

    if let Some(part) = partition {
        for (j, face) in part.faces().iter().enumerate() {
            if let Some(&v) = face.iter().find(|&&v| v >= config.len()) {
                return Err(SvgError::VertexOutOfRange(v));
            }
            let pts: Vec<&[Rational]> = face.iter().map(|&v| config.point(v)).collect();
            let corners: Vec<(String, String)> = hull(&pts).into_iter().map(|i| at(approx[face[i]])).collect();
            let attrs =
                format!(r#"class="face" data-face="{j}" fill="{FACE_FILL}" fill-opacity="0.3" stroke="{FACE_FILL}""#);
            match corners.as_slice() {
                [] => {}
                [(x, y)] => {
                    let _ = writeln!(out, r#"<circle {attrs} cx="{x}" cy="{y}" r="{}"/>"#, num(2.0 * RADIUS));
                }
                [(x1, y1), (x2, y2)] => {
                    let _ = writeln!(
                        out,
                        r#"<line {attrs} stroke-opacity="0.3" stroke-width="{}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#,
                        num(RADIUS)
                    );
                }
                many => {
                    let list: Vec<String> = many.iter().map(|(x, y)| format!("{x},{y}")).collect();
                    let _ = writeln!(out, r#"<polygon {attrs} points="{}"/>"#, list.join(" "));
                }
            }
        }
    }

    for (v, &p) in approx.iter().enumerate() {
        let (x, y) = at(p);
        let color = PALETTE[instance.coloring.color(v) % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<circle class="point" data-vertex="{v}" data-color="{}" cx="{x}" cy="{y}" r="{}" fill="{color}"/>"#,
            instance.coloring.color(v) + 1,
            num(RADIUS)
        );
    }

    if let Some(w) = partition.and_then(|p| p.witness.as_ref()) {
        let (x, y) = frame.map((rational_to_f64(&w[0]), rational_to_f64(&w[1])));
        let _ = writeln!(
            out,
            r#"<path class="witness" d="M{} {} L{} {} M{} {} L{} {}" stroke="black" stroke-width="2"/>"#,
            num(x - CROSS),
            num(y - CROSS),
            num(x + CROSS),
            num(y + CROSS),
            num(x - CROSS),
            num(y + CROSS),
            num(x + CROSS),
            num(y - CROSS)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
