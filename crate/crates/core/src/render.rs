//! Deterministic ASCII and SVG renderings of paths, partitions in their box,
//! tableaux, and the bijection pipeline applied to a permutation.
//!
//! ASCII drawings use a fixed grid: vertex columns 4 characters apart, one
//! interleaved line for vertical steps. SVG output is a standalone document
//! starting with an XML declaration.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::chain::{map_chain, ChainStage, TraceObject};
use crate::error::{Error, Result};
use crate::partition::{boundary_path, BoxSpec, Partition};
use crate::path::{LatticePath, Step};
use crate::perm::{PermClass, Permutation};
use crate::tableau::StandardTableau;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ascii" | "text" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::Unknown {
                kind: "render format",
                name: other.to_string(),
            }),
        }
    }
}

/// Annotation switches; everything is on by default.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// Label each peak vertex of a path with its position.
    pub peak_labels: bool,
    /// Shade diagram cells by the peel order of their hook.
    pub hook_shading: bool,
    /// Draw the empty cells / grid of the surrounding box.
    pub box_outline: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            peak_labels: true,
            hook_shading: true,
            box_outline: true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum RenderObject {
    Path(LatticePath),
    /// A partition drawn inside B_n with hooks shaded by peel order.
    Partition {
        partition: Partition,
        box_n: usize,
    },
    Tableau(StandardTableau),
    /// The applicable bijection pipeline of a permutation: ρ,ξ,ψ⁻¹ for
    /// 321-avoiding involutions, the Dyck-path map for other members of
    /// S_n(321).
    PermChain(Permutation),
}

pub fn render(object: &RenderObject, format: RenderFormat) -> Result<String> {
    render_with(object, format, &RenderOptions::default())
}

pub fn render_with(
    object: &RenderObject,
    format: RenderFormat,
    opts: &RenderOptions,
) -> Result<String> {
    match (object, format) {
        (RenderObject::Path(p), RenderFormat::Ascii) => Ok(path_ascii(p, opts)),
        (RenderObject::Path(p), RenderFormat::Svg) => Ok(path_svg(p, opts)),
        (RenderObject::Partition { partition, box_n }, RenderFormat::Ascii) => {
            partition_ascii(partition, *box_n, opts)
        }
        (RenderObject::Partition { partition, box_n }, RenderFormat::Svg) => {
            partition_svg(partition, *box_n, opts)
        }
        (RenderObject::Tableau(t), RenderFormat::Ascii) => Ok(tableau_ascii(t)),
        (RenderObject::Tableau(t), RenderFormat::Svg) => Ok(tableau_svg(t)),
        (RenderObject::PermChain(p), RenderFormat::Ascii) => chain_ascii(p, opts),
        (RenderObject::PermChain(p), RenderFormat::Svg) => chain_svg(p, opts),
    }
}

const CELL_W: usize = 4;

/// Character-grid drawing of a path with peak labels at the peak vertices.
fn path_ascii(path: &LatticePath, opts: &RenderOptions) -> String {
    let (w, h) = path.endpoint();
    let rows = 2 * h + 1;
    let cols = CELL_W * w + 1;
    let mut grid = vec![vec![' '; cols + 8]; rows];

    // lattice dots everywhere
    for y in 0..=h {
        for x in 0..=w {
            grid[2 * (h - y)][CELL_W * x] = '.';
        }
    }
    // path edges
    let (mut x, mut y) = (0usize, 0usize);
    grid[2 * h][0] = '+';
    for &s in path.steps() {
        match s {
            Step::E => {
                for dx in 1..CELL_W {
                    grid[2 * (h - y)][CELL_W * x + dx] = '_';
                }
                x += 1;
            }
            Step::N => {
                grid[2 * (h - y) - 1][CELL_W * x] = '|';
                y += 1;
            }
        }
        grid[2 * (h - y)][CELL_W * x] = '+';
    }
    // peak labels overwrite the vertex marker
    if opts.peak_labels {
        let labels = path.peak_set();
        for (&(px, py), label) in path.peak_coordinates().iter().zip(labels) {
            let text = label.to_string();
            for (i, c) in text.chars().enumerate() {
                grid[2 * (h - py)][CELL_W * px + i] = c;
            }
        }
    }

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const SVG_UNIT: usize = 30;
const SVG_MARGIN: usize = 20;

fn svg_document(width: usize, height: usize, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n{body}</svg>\n"
    )
}

/// Pixel position of lattice point (x, y) when the drawing is `h` units tall.
fn px(x: usize, y: usize, h: usize) -> (usize, usize) {
    (SVG_MARGIN + SVG_UNIT * x, SVG_MARGIN + SVG_UNIT * (h - y))
}

fn grid_lines(w: usize, h: usize, out: &mut String) {
    for x in 0..=w {
        let (x0, y0) = px(x, 0, h);
        let (_, y1) = px(x, h, h);
        let _ = writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"#cccccc\"/>"
        );
    }
    for y in 0..=h {
        let (x0, y0) = px(0, y, h);
        let (x1, _) = px(w, y, h);
        let _ = writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"#cccccc\"/>"
        );
    }
}

fn path_polyline(path: &LatticePath, h: usize, out: &mut String) {
    let mut points = String::new();
    let (mut x, mut y) = (0usize, 0usize);
    let (px0, py0) = px(x, y, h);
    let _ = write!(points, "{px0},{py0}");
    for &s in path.steps() {
        match s {
            Step::E => x += 1,
            Step::N => y += 1,
        }
        let (pxi, pyi) = px(x, y, h);
        let _ = write!(points, " {pxi},{pyi}");
    }
    let _ = writeln!(
        out,
        "<polyline points=\"{points}\" fill=\"none\" stroke=\"#1133aa\" stroke-width=\"3\"/>"
    );
}

fn peak_markers(path: &LatticePath, h: usize, out: &mut String) {
    for (&(x, y), label) in path.peak_coordinates().iter().zip(path.peak_set()) {
        let (cx, cy) = px(x, y, h);
        let _ = writeln!(
            out,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"#cc2222\"/>"
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"#cc2222\">{label}</text>",
            cx + 6,
            cy.saturating_sub(6)
        );
    }
}

fn path_svg(path: &LatticePath, opts: &RenderOptions) -> String {
    let (w, h) = path.endpoint();
    let mut body = String::new();
    if opts.box_outline {
        grid_lines(w, h, &mut body);
    }
    path_polyline(path, h, &mut body);
    if opts.peak_labels {
        peak_markers(path, h, &mut body);
    }
    svg_document(
        2 * SVG_MARGIN + SVG_UNIT * w.max(1),
        2 * SVG_MARGIN + SVG_UNIT * h.max(1),
        &body,
    )
}

/// Peel-order layer of diagram cell (row, col), both 1-indexed: cells along
/// the t-th peeled hook are exactly those with min(row, col) = t.
fn hook_layer(row: usize, col: usize) -> usize {
    row.min(col)
}

fn layer_char(layer: usize) -> char {
    match layer {
        1..=9 => char::from_digit(layer as u32, 10).unwrap(),
        _ => char::from_u32('a' as u32 + (layer - 10) as u32).unwrap_or('#'),
    }
}

/// Young diagram inside B_n, hooks shaded by peel order, empty cells dotted.
fn partition_ascii(partition: &Partition, box_n: usize, opts: &RenderOptions) -> Result<String> {
    let spec = BoxSpec::new(box_n);
    if !partition.fits_in(&spec) {
        return Err(Error::DoesNotFit);
    }
    let mut out = String::new();
    for row in 1..=spec.height() {
        let filled = partition.part(row);
        let mut line = String::new();
        for col in 1..=spec.width() {
            line.push(if col <= filled {
                if opts.hook_shading {
                    layer_char(hook_layer(row, col))
                } else {
                    '#'
                }
            } else if opts.box_outline {
                '.'
            } else {
                ' '
            });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

const HOOK_FILLS: [&str; 5] = ["#f5e050", "#a9c4eb", "#9fdf9f", "#f0a8a8", "#d3b0e0"];

fn partition_svg(partition: &Partition, box_n: usize, opts: &RenderOptions) -> Result<String> {
    let spec = BoxSpec::new(box_n);
    if !partition.fits_in(&spec) {
        return Err(Error::DoesNotFit);
    }
    let (w, h) = (spec.width(), spec.height());
    let mut body = String::new();
    // diagram cells, row 1 at the top of the box
    for row in 1..=h {
        for col in 1..=partition.part(row) {
            let (x0, y0) = px(col - 1, h - row + 1, h);
            let fill = if opts.hook_shading {
                HOOK_FILLS[(hook_layer(row, col) - 1) % HOOK_FILLS.len()]
            } else {
                "#dddddd"
            };
            let _ = writeln!(
                body,
                "<rect x=\"{x0}\" y=\"{y0}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" \
                 fill=\"{fill}\" stroke=\"#555555\"/>"
            );
        }
    }
    if opts.box_outline {
        grid_lines(w, h, &mut body);
    }
    path_polyline(&boundary_path(partition, &spec)?, h, &mut body);
    Ok(svg_document(
        2 * SVG_MARGIN + SVG_UNIT * w.max(1),
        2 * SVG_MARGIN + SVG_UNIT * h.max(1),
        &body,
    ))
}

fn tableau_ascii(tableau: &StandardTableau) -> String {
    let width = tableau.n().to_string().len();
    let mut out = String::new();
    for row in tableau.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn tableau_svg(tableau: &StandardTableau) -> String {
    let rows = tableau.num_rows();
    let cols = tableau.rows().first().map_or(0, |r| r.len());
    let mut body = String::new();
    for (r, row) in tableau.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let x0 = SVG_MARGIN + SVG_UNIT * c;
            let y0 = SVG_MARGIN + SVG_UNIT * r;
            let _ = writeln!(
                body,
                "<rect x=\"{x0}\" y=\"{y0}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" \
                 fill=\"none\" stroke=\"#555555\"/>"
            );
            let _ = writeln!(
                body,
                "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{v}</text>",
                x0 + SVG_UNIT / 2,
                y0 + SVG_UNIT / 2 + 5
            );
        }
    }
    svg_document(
        2 * SVG_MARGIN + SVG_UNIT * cols.max(1),
        2 * SVG_MARGIN + SVG_UNIT * rows.max(1),
        &body,
    )
}

/// The pipeline a permutation supports: the full ρ,ξ,ψ⁻¹ composition for
/// 321-avoiding involutions, the Dyck-path bijection for the rest of
/// S_n(321).
fn chain_for(p: &Permutation) -> Result<Vec<ChainStage>> {
    if PermClass::I321.contains(p) {
        Ok(vec![ChainStage::Rho, ChainStage::Xi, ChainStage::PsiInv])
    } else if PermClass::S321.contains(p) {
        Ok(vec![ChainStage::S321ToDyck])
    } else {
        Err(Error::ContainsPattern("321".into()))
    }
}

fn stat_line(name: &str, values: &[usize]) -> String {
    let words: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{name} = {{{}}}", words.join(","))
}

fn chain_ascii(p: &Permutation, opts: &RenderOptions) -> Result<String> {
    let stages = chain_for(p)?;
    let trace = map_chain(TraceObject::Perm(p.clone()), &stages)?;
    let mut out = String::new();
    for entry in &trace {
        let _ = writeln!(
            out,
            "{} ({}): {}   [{}]",
            entry.stage,
            entry.object.kind(),
            entry.object,
            stat_line(entry.statistic_name, &entry.statistic)
        );
        match &entry.object {
            TraceObject::Path(path) => {
                out.push_str(&path_ascii(path, opts));
            }
            TraceObject::Partition(part) => {
                out.push_str(&partition_ascii(part, p.n(), opts)?);
            }
            TraceObject::Perm(_) => {}
        }
        out.push('\n');
    }
    Ok(out)
}

fn chain_svg(p: &Permutation, opts: &RenderOptions) -> Result<String> {
    let stages = chain_for(p)?;
    let trace = map_chain(TraceObject::Perm(p.clone()), &stages)?;
    let mut body = String::new();
    let mut y_offset = 0usize;
    let mut max_width = SVG_UNIT;
    for entry in &trace {
        let _ = writeln!(
            body,
            "<text x=\"4\" y=\"{}\" font-size=\"14\">{} ({}): {} [{}]</text>",
            y_offset + 16,
            entry.stage,
            entry.object.kind(),
            entry.object,
            stat_line(entry.statistic_name, &entry.statistic)
        );
        y_offset += 24;
        let sub = match &entry.object {
            TraceObject::Path(path) => Some(path_svg(path, opts)),
            TraceObject::Partition(part) => Some(partition_svg(part, p.n(), opts)?),
            TraceObject::Perm(_) => None,
        };
        if let Some(doc) = sub {
            let (w, h) = svg_size(&doc);
            let inner = svg_body(&doc);
            let _ = writeln!(
                body,
                "<g transform=\"translate(0,{y_offset})\">\n{inner}</g>"
            );
            y_offset += h;
            max_width = max_width.max(w);
        }
        y_offset += 8;
    }
    Ok(svg_document(max_width.max(320), y_offset + 8, &body))
}

/// Width/height declared by a document produced by [`svg_document`].
fn svg_size(doc: &str) -> (usize, usize) {
    let grab = |key: &str| -> usize {
        doc.split(&format!("{key}=\""))
            .nth(1)
            .and_then(|rest| rest.split('"').next())
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
    };
    (grab("width"), grab("height"))
}

fn svg_body(doc: &str) -> &str {
    let start = doc.find('\n').map(|i| i + 1).unwrap_or(0);
    let start = start + doc[start..].find('\n').map(|i| i + 1).unwrap_or(0);
    let end = doc.rfind("</svg>").unwrap_or(doc.len());
    &doc[start..end]
}
