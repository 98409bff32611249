//! ASCII and SVG drawings of lattice paths.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::path::{LatticePath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::Syntax(format!("unknown render format {other:?}"))),
        }
    }
}

pub fn render(path: &LatticePath, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(path),
        RenderFormat::Svg => render_svg(path),
    }
}

/// One column per half-unit of x, one row per unit band of y. Row `r` holds
/// the segments between heights `r` and `r + 1`; horizontal steps sit on the
/// floor of their band as `__`. A dashed ground line closes the drawing.
pub fn render_ascii(path: &LatticePath) -> String {
    if path.is_empty() {
        return String::new();
    }
    let pts = path.points();
    let width = pts.iter().map(|p| p.0).max().unwrap_or(0) as usize;
    let rows = path
        .steps()
        .iter()
        .zip(&pts)
        .map(|(s, &(_, y))| if *s == Step::H { y + 1 } else { y })
        .max()
        .unwrap_or(1) as usize;
    let mut grid = vec![vec![' '; width.max(1)]; rows];
    for (s, &(x, y)) in path.steps().iter().zip(&pts) {
        let (col, row, glyph) = match s {
            Step::U => (x, y, '/'),
            Step::D => (x, y - 1, '\\'),
            // a left step traces the same diagonal as an up step one cell back
            Step::L => (x - 1, y - 1, '/'),
            Step::H => {
                grid[y as usize][x as usize + 1] = '_';
                (x, y, '_')
            }
        };
        grid[row as usize][col as usize] = glyph;
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&"-".repeat(width));
    out.push('\n');
    out
}

const UNIT: i64 = 20;
const MARGIN: i64 = 10;

/// Standalone SVG: one `<line>` per step with unit-slope diagonals and a dot
/// on every lattice point.
pub fn render_svg(path: &LatticePath) -> String {
    let pts = path.points();
    let width = pts.iter().map(|p| p.0).max().unwrap_or(0);
    let top = pts.iter().map(|p| p.1).max().unwrap_or(0);
    let (w, h) = (width * UNIT + 2 * MARGIN, top * UNIT + 2 * MARGIN);
    let sx = |x: i64| x * UNIT + MARGIN;
    let sy = |y: i64| (top - y) * UNIT + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        out,
        r##"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bbb" stroke-width="1"/>"##,
        sx(0),
        sy(0),
        sx(width),
        sy(0)
    );
    let _ = writeln!(out, r##"<g class="steps" stroke="#000" stroke-width="1.5" fill="none">"##);
    for (s, pair) in path.steps().iter().zip(pts.windows(2)) {
        let ((x1, y1), (x2, y2)) = (pair[0], pair[1]);
        let _ = writeln!(
            out,
            r#"<line class="step-{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            s.as_char(),
            sx(x1),
            sy(y1),
            sx(x2),
            sy(y2)
        );
    }
    out.push_str("</g>\n");
    let _ = writeln!(out, r##"<g class="points" fill="#000">"##);
    for &(x, y) in &pts {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="2.5"/>"#, sx(x), sy(y));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn ascii_single_peak() {
        let art = render_ascii(&path("UD"));
        assert_eq!(art, "/\\\n--\n");
        assert_eq!(art.lines().count(), 2);
    }

    #[test]
    fn ascii_mixed() {
        assert_eq!(render_ascii(&path("UHDH")), " __\n/  \\__\n------\n");
        assert_eq!(render_ascii(&path("UUDD")), " /\\\n/  \\\n----\n");
        assert_eq!(render_ascii(&path("UUDL")), " /\\\n/ /\n---\n");
        assert!(render_ascii(&path("HUUUDUUDDHUUDDHDD")).bytes().all(|b| b == b'\n' || (0x20..0x7f).contains(&b)));
    }

    #[test]
    fn svg_horizontal() {
        let svg = render_svg(&path("H"));
        assert_eq!(svg.matches("<line class=\"step-").count(), 1);
        assert!(svg.contains(r#"<line class="step-H" x1="10" y1="10" x2="50" y2="10"/>"#));
        assert_eq!(svg.matches("<circle").count(), 2);
    }

    #[test]
    fn svg_worked_example() {
        let p = path("HUUUDUUDDHUUDDHDD");
        let svg = render_svg(&p);
        assert!(svg.starts_with("<svg xmlns="));
        assert_eq!(svg.matches("<line class=\"step-").count(), 17);
        assert_eq!(svg.matches("<circle").count(), 18);
        // highest point is level 4, drawn at the top margin
        assert!(svg.contains(r#"height="100""#));
        assert!(!svg.contains("href"));
    }
}
