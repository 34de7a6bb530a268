use std::fmt::Write;

use super::{Placement, QueensError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// One line per row: `W` and `B` for queens, `·` for empty cells.
pub fn render_ascii(p: &Placement) -> String {
    let mut out = String::new();
    for r in 0..p.n() {
        for c in 0..p.n() {
            out.push(if p.white().contains(&(r, c)) {
                'W'
            } else if p.black().contains(&(r, c)) {
                'B'
            } else {
                '·'
            });
        }
        out.push('\n');
    }
    out
}

/// Parses the [`render_ascii`] format. Accepts `.` as well as `·` for empty
/// cells, ignores surrounding blank lines and spaces inside rows, and
/// requires a square board.
pub fn parse_ascii(text: &str) -> Result<Placement, QueensError> {
    let rows: Vec<(usize, Vec<char>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.chars().filter(|c| !c.is_whitespace()).collect::<Vec<_>>()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let n = rows.len();
    let (mut white, mut black) = (Vec::new(), Vec::new());
    for (r, (line, cells)) in rows.iter().enumerate() {
        if cells.len() != n {
            return Err(QueensError::Parse { line: *line, message: format!("expected {n} cells, found {}", cells.len()) });
        }
        for (c, &ch) in cells.iter().enumerate() {
            match ch {
                'W' | 'w' => white.push((r, c)),
                'B' | 'b' => black.push((r, c)),
                '.' | '·' => {}
                other => return Err(QueensError::Parse { line: *line, message: format!("unexpected character {other:?}") }),
            }
        }
    }
    Placement::new(n, white, black)
}

/// Checkerboard with white and black discs for the queens.
pub fn render_svg(p: &Placement) -> String {
    const CELL: usize = 24;
    let side = p.n() * CELL;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#);
    for r in 0..p.n() {
        for c in 0..p.n() {
            let fill = if (r + c) % 2 == 0 { "#f0d9b5" } else { "#b58863" };
            let _ = writeln!(out, r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}"/>"#, c * CELL, r * CELL);
        }
    }
    let disc = |out: &mut String, (r, c): (usize, usize), fill: &str| {
        let (cx, cy) = (c * CELL + CELL / 2, r * CELL + CELL / 2);
        let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="{fill}" stroke="black" stroke-width="1"/>"#, CELL * 3 / 8);
    };
    for &cell in p.white() {
        disc(&mut out, cell, "#ffffff");
    }
    for &cell in p.black() {
        disc(&mut out, cell, "#000000");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::queens::jubin_construction;

    #[test]
    fn ascii_round_trip() {
        for n in [0, 1, 5, 12] {
            let p = jubin_construction(n);
            assert_eq!(parse_ascii(&render_ascii(&p)).unwrap(), p);
        }
        let p = parse_ascii("W . .\n. . B\n. . .\n").unwrap();
        assert_eq!(render_ascii(&p), "W··\n··B\n···\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_ascii("W.\n.\n"), Err(QueensError::Parse { line: 2, .. })));
        assert!(matches!(parse_ascii("WX\n..\n"), Err(QueensError::Parse { line: 1, .. })));
    }

    #[test]
    fn svg_is_deterministic() {
        let p = jubin_construction(8);
        let svg = render_svg(&p);
        assert_eq!(svg, render_svg(&p));
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<circle").count(), p.white().len() + p.black().len());
        assert_eq!(svg.matches("<rect").count(), 64);
    }
}
