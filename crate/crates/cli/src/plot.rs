//! SVG rendering of a triangle projected orthographically onto `(x1, x2)`.
//!
//! The quadric projects onto `x1^2 + x2^2 >= 1`; its silhouette is the unit
//! circle at the waist. Coordinates are printed with fixed precision so the
//! output is byte-stable.

use std::fmt::Write;

use dstrig_core::taxonomy::others;
use dstrig_core::{
    classify_segment, classify_triangle, geodesic_point, CausalType, DeSitterPoint, Error,
};

use crate::exit::Failure;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

struct Style {
    class: &'static str,
    stroke: &'static str,
    dash: Option<&'static str>,
}

fn style(t: CausalType) -> Style {
    match t {
        CausalType::SpaceLike => Style {
            class: "space-like",
            stroke: "#1f5fbf",
            dash: None,
        },
        CausalType::TimeLike => Style {
            class: "time-like",
            stroke: "#c0392b",
            dash: Some("6 4"),
        },
        CausalType::Null => Style {
            class: "null",
            stroke: "#555555",
            dash: Some("2 3"),
        },
    }
}

pub fn render(p: &[DeSitterPoint; 3], samples: usize) -> Result<String, Failure> {
    if samples < 2 {
        return Err(Failure::input(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    classify_triangle(&p[0], &p[1], &p[2])?;

    let mut edges = Vec::with_capacity(3);
    for j in 0..3 {
        let (k, l) = others(j);
        let seg = classify_segment(&p[k], &p[l])?;
        let Some(kind) = seg
            .kind()
            .causal_type()
            .filter(|_| seg.kind().is_traceable())
        else {
            return Err(match seg.kind().causal_type() {
                Some(_) => Error::NullEdge {
                    edge: j,
                    inner: seg.inner(),
                },
                None => Error::ImpossibleEdge {
                    edge: j,
                    inner: seg.inner(),
                },
            }
            .into());
        };
        let pts = (0..samples)
            .map(|i| {
                let v = *geodesic_point(&seg, i as f64 / (samples - 1) as f64)?.vec();
                Ok((v.x1(), v.x2()))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        edges.push((kind, pts));
    }

    let extent = edges
        .iter()
        .flat_map(|(_, pts)| pts.iter())
        .fold(1.0f64, |m, &(x, y)| m.max(x.abs()).max(y.abs()))
        * 1.05;
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let map = |x: f64, y: f64| (SIZE / 2.0 + x * scale, SIZE / 2.0 - y * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r##"  <circle class="waist" cx="{c:.3}" cy="{c:.3}" r="{r:.3}" fill="none" stroke="#999999" stroke-width="1" stroke-dasharray="3 3"/>"##,
        c = SIZE / 2.0,
        r = scale
    );
    for (j, (kind, pts)) in edges.iter().enumerate() {
        let st = style(*kind);
        let mut d = String::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            let (px, py) = map(x, y);
            let _ = write!(d, "{}{px:.3} {py:.3}", if i == 0 { "M" } else { " L" });
        }
        let dash = st
            .dash
            .map(|v| format!(r#" stroke-dasharray="{v}""#))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            r#"  <path class="edge {}" data-opposite="{j}" d="{d}" fill="none" stroke="{}" stroke-width="2"{dash}/>"#,
            st.class, st.stroke
        );
    }
    for (j, v) in p.iter().enumerate() {
        let (px, py) = map(v.vec().x1(), v.vec().x2());
        let _ = writeln!(
            s,
            r#"  <circle class="vertex" cx="{px:.3}" cy="{py:.3}" r="3.5" fill="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">p{j}</text>"#,
            px + 6.0,
            py - 6.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
