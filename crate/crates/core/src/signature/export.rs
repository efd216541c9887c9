//! CSV and SVG renderings of a signature function.

use std::fmt::Write as _;

use super::step::SignatureFunction;
use crate::algebra::RootLabel;
use crate::error::Result;

fn point_text(label: &RootLabel) -> String {
    match &label.t_exact {
        Some(e) => e.clone(),
        None => format!("[{},{}]", label.t_lo, label.t_hi),
    }
}

/// One row per plateau (`kind = plateau`, with the bounding breakpoints in
/// `t_lo`/`t_hi`) and one per breakpoint (`kind = breakpoint`, with the
/// certified enclosure of `t`), in order of increasing `t`.
pub fn to_csv(f: &SignatureFunction, digits: u32) -> Result<String> {
    let summaries = f.summaries(digits);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "t_lo", "t_hi", "value", "jump", "balanced_x2", "nonbalanced"])?;
    for (i, p) in f.plateaus.iter().enumerate() {
        let lo = if i == 0 { "0".to_string() } else { point_text(&summaries[i - 1].root) };
        let hi = summaries.get(i).map_or("1/2".to_string(), |s| point_text(&s.root));
        w.write_record(["plateau", &lo, &hi, &p.value.to_string(), "", "", ""])?;
        if let Some(s) = summaries.get(i) {
            let (lo, hi) = match &s.root.t_exact {
                Some(e) => (e.clone(), e.clone()),
                None => (s.root.t_lo.clone(), s.root.t_hi.clone()),
            };
            w.write_record([
                "breakpoint",
                &lo,
                &hi,
                "",
                &s.jump.to_string(),
                &s.balanced_x2.to_string(),
                &s.nonbalanced.to_string(),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 40.0;

/// A step plot over `t ∈ (0, 1/2]`: plateaus as horizontal segments, open
/// circles at their ends, a filled dot at the non-balanced value and a short
/// tick at the balanced value of each breakpoint.
pub fn to_svg(f: &SignatureFunction, title: &str) -> String {
    let ts: Vec<f64> = f
        .breakpoints
        .iter()
        .map(|b| {
            let (a, c) = b.root.t_bounds();
            (a + c) / 2.0
        })
        .collect();
    let values = f.plateaus.iter().map(|p| p.value).chain(f.breakpoints.iter().map(|b| b.nonbalanced));
    let (lo, hi) = values.fold((0, 0), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let (lo, hi) = (lo as f64 - 1.0, hi as f64 + 1.0);
    let x = |t: f64| MARGIN + t / 0.5 * (WIDTH - 2.0 * MARGIN);
    let y = |v: f64| HEIGHT - MARGIN - (v - lo) / (hi - lo) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#);
    let _ = writeln!(s, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        x(0.0),
        y(0.0),
        x(0.5),
        y(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        x(0.0),
        y(lo),
        x(0.0),
        y(hi)
    );
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">t = 1/2</text>"#, x(0.5), HEIGHT - 10.0);
    for v in [lo + 1.0, 0.0, hi - 1.0] {
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">{}</text>"#, MARGIN - 6.0, y(v) + 4.0, v as i32);
    }
    for (i, p) in f.plateaus.iter().enumerate() {
        let t0 = if i == 0 { 0.0 } else { ts[i - 1] };
        let t1 = ts.get(i).copied().unwrap_or(0.5);
        let yy = y(p.value as f64);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{yy:.2}" x2="{:.2}" y2="{yy:.2}" stroke="black" stroke-width="2"/>"#,
            x(t0),
            x(t1)
        );
        if i > 0 {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{yy:.2}" r="3" fill="white" stroke="black"/>"#, x(t0));
        }
        if i < ts.len() {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{yy:.2}" r="3" fill="white" stroke="black"/>"#, x(t1));
        }
    }
    for (b, &t) in f.breakpoints.iter().zip(&ts) {
        let yb = y(b.balanced_x2 as f64 / 2.0);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{yb:.2}" x2="{:.2}" y2="{yb:.2}" stroke="steelblue" stroke-width="2"/>"#, x(t) - 5.0, x(t) + 5.0);
        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#, x(t), y(b.nonbalanced as f64));
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::SeifertMatrix;
    use crate::signature::step_function;

    #[test]
    fn trefoil_csv() {
        let v = SeifertMatrix::new(vec![vec![-1, 0], vec![-1, -1]]).unwrap();
        let csv = to_csv(&step_function(&v).unwrap(), 6).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "kind,t_lo,t_hi,value,jump,balanced_x2,nonbalanced");
        assert_eq!(lines[1], "plateau,0,1/6,0,,,");
        assert_eq!(lines[2], "breakpoint,1/6,1/6,,-1,-2,-1");
        assert_eq!(lines[3], "plateau,1/6,1/2,-2,,,");
    }

    #[test]
    fn svg_is_well_formed() {
        let v = SeifertMatrix::new(vec![vec![-1, 0], vec![-1, -1]]).unwrap();
        let svg = to_svg(&step_function(&v).unwrap(), "3_1 <trefoil>");
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("3_1 &lt;trefoil&gt;"));
        assert_eq!(svg.matches("<circle").count(), 3);
    }
}
