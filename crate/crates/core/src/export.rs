//! Exporters (DOT, JSON, SVG, point files) and the two text input formats
//! (point files, coloring files).
//!
//! Point files are bit-exact: a point is either four integers `a b c d` or
//! sixteen `p/q` coefficient tokens (x then y in basis order). JSON carries
//! every coordinate as exact token strings. SVG is the one display-only
//! format and uses decimal approximations for layout.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use crate::field::FieldElement;
use crate::geometry::{point_from_abcd, Point};
use crate::graph::UnitDistanceGraph;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Svg,
    Points,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "svg" => Ok(ExportFormat::Svg),
            "points" => Ok(ExportFormat::Points),
            other => Err(Error::Parse(format!("unknown export format: {other}"))),
        }
    }
}

/// Renders a graph in the requested format.
pub fn export(g: &UnitDistanceGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => render_dot(g),
        ExportFormat::Json => render_json(g),
        ExportFormat::Svg => render_svg(g),
        ExportFormat::Points => render_points(&g.points, &g.name),
    }
}

/// One point per line: the `a b c d` integer form when the point has one,
/// otherwise the 16-token exact form.
pub fn render_points(points: &[Point], name: &str) -> String {
    let mut out = format!("# {name}: {} points\n", points.len());
    for p in points {
        out.push_str(&render_point_line(p));
    }
    out
}

/// One point-file data line, newline-terminated: the compact 4-integer form
/// when the point lies on the lattice, the 16-token form otherwise.
pub fn render_point_line(p: &Point) -> String {
    match p.abcd() {
        Some([a, b, c, d]) => format!("{a} {b} {c} {d}\n"),
        None => format!("{} {}\n", p.x.render_tokens(), p.y.render_tokens()),
    }
}

/// Parses a point file: blank lines and `#` comments are skipped; each data
/// line is 4 integers or 16 rational tokens. Errors carry the line number.
pub fn parse_points(text: &str) -> Result<Vec<Point>, Error> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match tokens.len() {
            4 => {
                let mut ints = [0i64; 4];
                for (slot, tok) in ints.iter_mut().zip(&tokens) {
                    *slot = tok
                        .parse()
                        .map_err(|_| at(format!("bad integer {tok:?}")))?;
                }
                points.push(point_from_abcd(ints[0], ints[1], ints[2], ints[3]));
            }
            16 => {
                let mut coeffs = Vec::with_capacity(16);
                for tok in &tokens {
                    coeffs.push(
                        FieldElement::parse_token(tok)
                            .map_err(|e| at(e.to_string()))?,
                    );
                }
                let y = FieldElement::from_coeffs(
                    coeffs.split_off(8).try_into().expect("eight tokens"),
                );
                let x = FieldElement::from_coeffs(coeffs.try_into().expect("eight tokens"));
                points.push(Point::new(x, y));
            }
            n => {
                return Err(at(format!(
                    "expected 4 integers or 16 rational tokens, found {n} tokens"
                )))
            }
        }
    }
    Ok(points)
}

/// DOT rendering with `kind=unit|aux` edge attributes; special vertices are
/// annotated on their node lines.
pub fn render_dot(g: &UnitDistanceGraph) -> String {
    let special_of: BTreeMap<usize, &str> = g
        .specials
        .iter()
        .map(|(name, &idx)| (idx, name.as_str()))
        .collect();
    let mut out = format!("graph \"{}\" {{\n  node [shape=point];\n", g.name);
    for i in 0..g.order() {
        match special_of.get(&i) {
            Some(name) => out.push_str(&format!("  {i} [special=\"{name}\"];\n")),
            None => out.push_str(&format!("  {i};\n")),
        }
    }
    for &(i, j) in &g.unit_edges {
        out.push_str(&format!("  {i} -- {j} [kind=unit];\n"));
    }
    for &(i, j) in &g.aux_edges {
        out.push_str(&format!("  {i} -- {j} [kind=aux];\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonPoint {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    abcd: Option<[i64; 4]>,
    x: String,
    y: String,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    name: &'a str,
    order: usize,
    unit_edge_count: usize,
    aux_edge_count: usize,
    points: Vec<JsonPoint>,
    unit_edges: &'a [(usize, usize)],
    aux_edges: &'a [(usize, usize)],
    specials: &'a BTreeMap<String, usize>,
}

/// JSON rendering with exact coordinates (the 8-token coefficient strings).
pub fn render_json(g: &UnitDistanceGraph) -> String {
    let points = g
        .points
        .iter()
        .enumerate()
        .map(|(index, p)| JsonPoint {
            index,
            abcd: p.abcd(),
            x: p.x.render_tokens(),
            y: p.y.render_tokens(),
        })
        .collect();
    let doc = JsonGraph {
        name: &g.name,
        order: g.order(),
        unit_edge_count: g.unit_edges.len(),
        aux_edge_count: g.aux_edges.len(),
        points,
        unit_edges: &g.unit_edges,
        aux_edges: &g.aux_edges,
        specials: &g.specials,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// SVG scatter-and-segment plot. Coordinates are decimal approximations —
/// display only, nothing downstream consumes them.
pub fn render_svg(g: &UnitDistanceGraph) -> String {
    const SIZE: f64 = 800.0;
    const MARGIN: f64 = 30.0;
    let approx: Vec<(f64, f64)> = g
        .points
        .iter()
        .map(|p| (p.x.to_f64_display(), p.y.to_f64_display()))
        .collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y)) = approx.first() {
        (min_x, max_x, min_y, max_y) = (x, x, y, y);
    }
    for &(x, y) in &approx {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let place = |&(x, y): &(f64, f64)| {
        // flip y so the plot reads in standard orientation
        (
            MARGIN + (x - min_x) * scale,
            SIZE - MARGIN - (y - min_y) * scale,
        )
    };
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
         <!-- {}: {} points, {} unit edges, {} aux edges -->\n",
        g.name,
        g.order(),
        g.unit_edges.len(),
        g.aux_edges.len()
    );
    for (edges, class, style) in [
        (&g.aux_edges, "aux", "stroke=\"#d0a060\" stroke-width=\"0.6\""),
        (&g.unit_edges, "unit", "stroke=\"#3060c0\" stroke-width=\"1\""),
    ] {
        for &(i, j) in edges.iter() {
            let (x1, y1) = place(&approx[i]);
            let (x2, y2) = place(&approx[j]);
            out.push_str(&format!(
                "<line class=\"{class}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {style}/>\n"
            ));
        }
    }
    for pt in &approx {
        let (x, y) = place(pt);
        out.push_str(&format!(
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.2\" fill=\"#202020\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Renders a complete coloring, one `index color` line per vertex.
pub fn render_coloring(colors: &[u8]) -> String {
    let mut out = String::new();
    for (i, c) in colors.iter().enumerate() {
        out.push_str(&format!("{i} {c}\n"));
    }
    out
}

/// Parses a coloring file for a graph of `n` vertices into a dense color
/// vector. Two shapes are accepted: `index color` lines (any order, `#`
/// comments allowed), or a single row of exactly `n` colors — the shape the
/// `colorings` subcommand emits. Every vertex must be covered exactly once
/// and colors must lie in 1–4.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<u8>, Error> {
    let data_lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if let [row] = data_lines[..] {
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.len() == n {
            if let Some(colors) = tokens
                .iter()
                .map(|t| t.parse::<u8>().ok().filter(|c| (1..=4).contains(c)))
                .collect::<Option<Vec<u8>>>()
            {
                return Ok(colors);
            }
        }
    }
    let mut colors = vec![0u8; n];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let mut it = line.split_whitespace();
        let (Some(idx), Some(col), None) = (it.next(), it.next(), it.next()) else {
            return Err(at(format!("expected `index color`, found {line:?}")));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| at(format!("bad vertex index {idx:?}")))?;
        let col: u8 = col.parse().map_err(|_| at(format!("bad color {col:?}")))?;
        if idx >= n {
            return Err(at(format!("vertex {idx} out of range for {n} vertices")));
        }
        if !(1..=4).contains(&col) {
            return Err(at(format!("color {col} is not in 1–4")));
        }
        if colors[idx] != 0 {
            return Err(at(format!("vertex {idx} assigned twice")));
        }
        colors[idx] = col;
    }
    if let Some(missing) = colors.iter().position(|&c| c == 0) {
        return Err(Error::Parse(format!("vertex {missing} has no color")));
    }
    Ok(colors)
}
