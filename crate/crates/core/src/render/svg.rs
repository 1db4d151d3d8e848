use std::fmt::Write as _;
use std::io::Write;

use sha2::{Digest, Sha256};

use super::contour::{Segment, TIE_RULE};
use super::grid::{SignGrid, Window};
use crate::error::{Error, Result};
use crate::exactalg::{poly_to_json, rational_to_f64, Rational, SparsePoly};

const PLOT: f64 = 512.0;
const MARGIN: f64 = 40.0;
const CANVAS: f64 = PLOT + 2.0 * MARGIN;

/// What the metadata comment records about the picture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgMeta {
    pub title: String,
    /// Hex SHA-256 of the canonical JSON of the plotted polynomial.
    pub poly_hash: String,
}

impl SvgMeta {
    pub fn for_poly(title: &str, p: &SparsePoly) -> Self {
        SvgMeta {
            title: title.to_string(),
            poly_hash: format!("{:x}", Sha256::digest(poly_to_json(p).as_bytes())),
        }
    }
}

struct Frame<'a> {
    w: &'a Window,
}

impl Frame<'_> {
    /// Doubled grid coordinates to canvas pixels (lambda grows upward).
    fn grid(&self, u: u32, v: u32) -> (f64, f64) {
        let px = MARGIN + PLOT * u as f64 / (2.0 * self.w.nx as f64);
        let py = MARGIN + PLOT - PLOT * v as f64 / (2.0 * self.w.nl as f64);
        (px, py)
    }

    fn x_px(&self, x: &Rational) -> f64 {
        let t = (x - &self.w.x_min) / (&self.w.x_max - &self.w.x_min);
        MARGIN + PLOT * rational_to_f64(&t)
    }

    fn l_px(&self, l: &Rational) -> f64 {
        let t = (l - &self.w.lambda_min) / (&self.w.lambda_max - &self.w.lambda_min);
        MARGIN + PLOT - PLOT * rational_to_f64(&t)
    }

    fn contains(&self, x: &Rational, l: &Rational) -> bool {
        x >= &self.w.x_min && x <= &self.w.x_max && l >= &self.w.lambda_min && l <= &self.w.lambda_max
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Builds the SVG document as a string. Shaded cells are those whose four
/// corners are strictly positive in `shade`; consecutive shaded cells in a
/// row are merged into one rectangle.
pub fn svg_document(segments: &[Segment], shade: Option<&SignGrid>, w: &Window, meta: &SvgMeta) -> Result<String> {
    if let Some(g) = shade {
        if &g.window != w {
            return Err(Error::Window("shading grid and curve use different windows".into()));
        }
    }
    let fr = Frame { w };
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = num(CANVAS)
    );
    let _ = writeln!(s, "<!--");
    let _ = writeln!(s, "  title: {}", meta.title);
    let _ = writeln!(s, "  polynomial sha256: {}", meta.poly_hash);
    let _ = writeln!(s, "  window: x in [{}, {}], lambda in [{}, {}]", w.x_min, w.x_max, w.lambda_min, w.lambda_max);
    let _ = writeln!(s, "  resolution: {} x {} cells", w.nx, w.nl);
    let _ = writeln!(s, "  tie rule: {TIE_RULE}");
    let _ = writeln!(s, "-->");
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{c}" height="{c}" fill="white"/>"#, c = num(CANVAS));

    if let Some(g) = shade {
        let _ = writeln!(s, r##"<g id="shade" fill="#c8c8c8" stroke="none">"##);
        for j in 0..g.values.len().saturating_sub(1) {
            let (lo, hi) = (&g.values[j], &g.values[j + 1]);
            let cells = lo.len().saturating_sub(1);
            let full = |i: usize| lo[i] > 0 && lo[i + 1] > 0 && hi[i] > 0 && hi[i + 1] > 0;
            let mut i = 0;
            while i < cells {
                if !full(i) {
                    i += 1;
                    continue;
                }
                let start = i;
                while i < cells && full(i) {
                    i += 1;
                }
                let (x0, y1) = fr.grid(2 * start as u32, 2 * j as u32);
                let (x1, y0) = fr.grid(2 * i as u32, 2 * (j + 1) as u32);
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                    num(x0),
                    num(y0),
                    num(x1 - x0),
                    num(y1 - y0)
                );
            }
        }
        let _ = writeln!(s, "</g>");
    }

    // frame and axes
    let _ = writeln!(
        s,
        r#"<rect x="{m}" y="{m}" width="{p}" height="{p}" fill="none" stroke="black" stroke-width="1"/>"#,
        m = num(MARGIN),
        p = num(PLOT)
    );
    let zero = Rational::from_integer(0.into());
    let _ = writeln!(s, r##"<g id="axes" stroke="#555555" stroke-width="0.75">"##);
    if w.x_min <= zero && zero <= w.x_max {
        let x = fr.x_px(&zero);
        let _ = writeln!(s, r#"<line x1="{x}" y1="{a}" x2="{x}" y2="{b}"/>"#, x = num(x), a = num(MARGIN), b = num(MARGIN + PLOT));
    }
    if w.lambda_min <= zero && zero <= w.lambda_max {
        let y = fr.l_px(&zero);
        let _ = writeln!(s, r#"<line x1="{a}" y1="{y}" x2="{b}" y2="{y}"/>"#, y = num(y), a = num(MARGIN), b = num(MARGIN + PLOT));
    }
    let _ = writeln!(s, "</g>");
    let font = r#"font-family="sans-serif" font-size="12""#;
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" {font} text-anchor="middle">x</text>"#,
        num(MARGIN + PLOT / 2.0),
        num(CANVAS - 10.0)
    );
    let _ = writeln!(s, r#"<text x="12" y="{}" {font}>&#955;</text>"#, num(MARGIN + PLOT / 2.0));

    // curve
    let _ = writeln!(s, r#"<g id="curve" fill="none" stroke="black" stroke-width="1.2" stroke-linecap="round">"#);
    if !segments.is_empty() {
        let mut d = String::new();
        for seg in segments {
            let (a, b) = fr.grid(seg.from[0], seg.from[1]);
            let (c, e) = fr.grid(seg.to[0], seg.to[1]);
            let _ = write!(d, "M{} {}L{} {}", num(a), num(b), num(c), num(e));
        }
        let _ = writeln!(s, r#"<path d="{d}"/>"#);
    }
    let _ = writeln!(s, "</g>");

    // distinguished affine points
    let _ = writeln!(s, r#"<g id="marks" {font}>"#);
    for (x, l, label) in [(0, 0, "(0,0)"), (1, 1, "(1,1)")] {
        let (x, l) = (Rational::from_integer(x.into()), Rational::from_integer(l.into()));
        if fr.contains(&x, &l) {
            let (px, py) = (fr.x_px(&x), fr.l_px(&l));
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="3.5" fill="red"/>"#, num(px), num(py));
            let _ = writeln!(s, r#"<text x="{}" y="{}">{label}</text>"#, num(px + 6.0), num(py - 6.0));
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

/// Writes [`svg_document`] to `out`.
pub fn write_svg(segments: &[Segment], shade: Option<&SignGrid>, w: &Window, meta: &SvgMeta, out: &mut impl Write) -> Result<()> {
    let doc = svg_document(segments, shade, w, meta)?;
    out.write_all(doc.as_bytes())?;
    out.flush()?;
    Ok(())
}
