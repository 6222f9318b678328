//! The `tvb1` instance format and the `part1` partition format.
//!
//! ```text
//! tvb1
//! d 2
//! r 3
//! m 3
//! caps 2 2 3
//! points 15
//! 1 0 0
//! 1 3/2 -4
//! ...
//! ```
//!
//! Colors are 1-based in files and 0-based in memory; vertex ids are the
//! 0-based order of the point lines. A coordinate-free instance has
//! `points 0` and a `colorsizes c_1 … c_m` line giving contiguous blocks.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{format_rational, parse_rational, PointConfiguration, Rational};
use crate::search::{CapVector, Coloring, Instance, RainbowPartition, SearchError};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_uint(line: usize, token: &str, what: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| err(line, format!("{what}: expected a non-negative integer, got {token:?}")))
}

fn parse_uints<'a>(line: usize, tokens: impl Iterator<Item = &'a str>, what: &str) -> Result<Vec<usize>, FormatError> {
    tokens.map(|t| parse_uint(line, t, what)).collect()
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "tvb1")) => {}
        Some((n, other)) => return Err(err(n, format!("expected header `tvb1`, got {other:?}"))),
        None => return Err(err(0, "empty file")),
    }

    let (mut d, mut r, mut m) = (None, None, None);
    let mut caps: Option<(usize, Vec<usize>)> = None;
    let mut colorsizes: Option<(usize, Vec<usize>)> = None;
    let mut points: Option<(usize, usize)> = None;
    let mut last_line = 1;

    for (n, line) in lines.by_ref() {
        last_line = n;
        let mut tokens = line.split_whitespace();
        let key = tokens.next().unwrap_or_default();
        let mut single = |slot: &mut Option<usize>, name: &str| -> Result<(), FormatError> {
            if slot.is_some() {
                return Err(err(n, format!("duplicate `{name}` line")));
            }
            let value = tokens.next().ok_or_else(|| err(n, format!("`{name}` needs a value")))?;
            *slot = Some(parse_uint(n, value, name)?);
            if tokens.next().is_some() {
                return Err(err(n, format!("trailing tokens after `{name}`")));
            }
            Ok(())
        };
        match key {
            "d" => single(&mut d, "d")?,
            "r" => single(&mut r, "r")?,
            "m" => single(&mut m, "m")?,
            "caps" if caps.is_none() => caps = Some((n, parse_uints(n, tokens, "caps")?)),
            "colorsizes" if colorsizes.is_none() => colorsizes = Some((n, parse_uints(n, tokens, "colorsizes")?)),
            "points" => {
                let mut count = None;
                single(&mut count, "points")?;
                points = Some((n, count.unwrap()));
                break;
            }
            "caps" | "colorsizes" => return Err(err(n, format!("duplicate `{key}` line"))),
            other => return Err(err(n, format!("unknown key {other:?}"))),
        }
    }

    let d = d.ok_or_else(|| err(last_line, "missing `d`"))?;
    let r = r.ok_or_else(|| err(last_line, "missing `r`"))?;
    let m = m.ok_or_else(|| err(last_line, "missing `m`"))?;
    let (caps_line, caps) = caps.ok_or_else(|| err(last_line, "missing `caps`"))?;
    let (points_line, count) = points.ok_or_else(|| err(last_line, "missing `points`"))?;
    if d == 0 {
        return Err(err(points_line, "d must be at least 1"));
    }
    if r < 2 {
        return Err(err(points_line, "r must be at least 2"));
    }
    if m == 0 {
        return Err(err(points_line, "m must be at least 1"));
    }
    if caps.len() != m {
        return Err(err(caps_line, format!("{} caps for m = {m} colors", caps.len())));
    }
    let caps = CapVector::new(caps, r).map_err(|e| match e {
        SearchError::CapOutOfRange { index, cap, r } => {
            err(caps_line, format!("cap l_{index} = {cap} violates the cap bound 1 <= l_i <= r = {r}"))
        }
        other => err(caps_line, other.to_string()),
    })?;

    let mut colors = Vec::with_capacity(count);
    let mut coords: Vec<Vec<Rational>> = Vec::with_capacity(count);
    for _ in 0..count {
        let (n, line) = lines.next().ok_or_else(|| err(last_line, format!("expected {count} point lines")))?;
        last_line = n;
        let mut tokens = line.split_whitespace();
        let color_token = tokens.next().unwrap_or_default();
        let color = parse_uint(n, color_token, "color")?;
        if color == 0 || color > m {
            return Err(err(n, format!("color {color} outside [1, {m}]")));
        }
        let xs: Vec<Rational> = tokens
            .map(|t| parse_rational(t).map_err(|_| err(n, format!("non-rational token {t:?}"))))
            .collect::<Result<_, _>>()?;
        if xs.len() != d {
            return Err(err(n, format!("{} coordinates, expected d = {d}", xs.len())));
        }
        colors.push(color - 1);
        coords.push(xs);
    }
    if let Some((n, line)) = lines.next() {
        return Err(err(n, format!("unexpected trailing line {line:?}")));
    }

    let (coloring, config) = if count == 0 {
        let (sizes_line, sizes) =
            colorsizes.ok_or_else(|| err(points_line, "`points 0` requires a `colorsizes` line"))?;
        if sizes.len() != m {
            return Err(err(sizes_line, format!("{} color sizes for m = {m}", sizes.len())));
        }
        let coloring = Coloring::from_sizes(&sizes).map_err(|e| err(sizes_line, e.to_string()))?;
        (coloring, None)
    } else {
        if let Some((n, _)) = colorsizes {
            return Err(err(n, "`colorsizes` is only allowed with `points 0`"));
        }
        let coloring = Coloring::new(m, colors).map_err(|e| err(points_line, e.to_string()))?;
        let config = PointConfiguration::new(d, coords).map_err(|e| err(points_line, e.to_string()))?;
        (coloring, Some(config))
    };
    Instance::new(d, r, coloring, caps, config).map_err(|e| err(points_line, e.to_string()))
}

pub fn render_instance(instance: &Instance) -> String {
    let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut out = String::from("tvb1\n");
    let _ = writeln!(out, "d {}", instance.d);
    let _ = writeln!(out, "r {}", instance.r);
    let _ = writeln!(out, "m {}", instance.coloring.num_colors());
    let _ = writeln!(out, "caps {}", join(instance.caps.as_slice()));
    match &instance.config {
        None => {
            let _ = writeln!(out, "colorsizes {}", join(&instance.coloring.sizes()));
            out.push_str("points 0\n");
        }
        Some(config) => {
            let _ = writeln!(out, "points {}", config.len());
            for (v, p) in config.points().iter().enumerate() {
                let _ = write!(out, "{}", instance.coloring.color(v) + 1);
                for x in p {
                    let _ = write!(out, " {}", format_rational(x));
                }
                out.push('\n');
            }
        }
    }
    out
}

/// `part1 <r>`, one line of ascending ids per face, optional `witness` line.
pub fn render_partition(partition: &RainbowPartition) -> String {
    let mut out = format!("part1 {}\n", partition.faces().len());
    for face in partition.faces() {
        let ids: Vec<String> = face.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    if let Some(w) = &partition.witness {
        let xs: Vec<String> = w.iter().map(format_rational).collect();
        let _ = writeln!(out, "witness {}", xs.join(" "));
    }
    out
}

pub fn parse_partition(text: &str) -> Result<RainbowPartition, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or_else(|| err(0, "empty file"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("part1") {
        return Err(err(n, "expected header `part1 <r>`"));
    }
    let r = parse_uint(n, tokens.next().ok_or_else(|| err(n, "missing r"))?, "r")?;
    let mut last = n;
    let mut faces = Vec::with_capacity(r);
    for _ in 0..r {
        let (n, line) = lines.next().ok_or_else(|| err(last, format!("expected {r} face lines")))?;
        last = n;
        let face = parse_uints(n, line.split_whitespace(), "vertex id")?;
        if face.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err(n, "face ids must be strictly ascending"));
        }
        faces.push(face);
    }
    let mut partition = RainbowPartition::new(faces);
    if let Some((n, line)) = lines.next() {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("witness") {
            return Err(err(n, format!("unexpected line {line:?}")));
        }
        let w = tokens
            .map(|t| parse_rational(t).map_err(|_| err(n, format!("non-rational token {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        partition = partition.with_witness(w);
    }
    if let Some((n, line)) = lines.next() {
        return Err(err(n, format!("unexpected trailing line {line:?}")));
    }
    Ok(partition)
}
