//! SVG drawings of partitions and Dyck paths. Presentation only.

use std::fmt::Write;

use partcat::word::DyckPath;
use partcat::Partition;

const STEP: f64 = 30.0;
const MARGIN: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 120.0;

fn header(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
}

/// Points on two rows, each block drawn as legs into a horizontal bar.
pub fn partition_svg(p: &Partition) -> String {
    let (k, l) = (p.upper_arity(), p.lower_arity());
    let cols = k.max(l).max(1);
    let width = 2.0 * MARGIN + STEP * (cols - 1) as f64;
    let mut s = header(width, BOTTOM + TOP);
    let x = |i: usize| MARGIN + STEP * i as f64;
    let blocks = p.blocks();
    for (b, block) in blocks.iter().enumerate() {
        let has_upper = block.iter().any(|&i| i < k);
        let has_lower = block.iter().any(|&i| i >= k);
        // stagger bars so that nested blocks stay readable
        let shift = 8.0 * (b % 4) as f64;
        let bar = match (has_upper, has_lower) {
            (true, true) => (TOP + BOTTOM) / 2.0 + shift - 12.0,
            (true, false) => TOP + 25.0 + shift,
            _ => BOTTOM - 25.0 - shift,
        };
        let xs: Vec<f64> = block.iter().map(|&i| if i < k { x(i) } else { x(i - k) }).collect();
        let (lo, hi) = xs.iter().fold((f64::MAX, f64::MIN), |(a, b), &v| (a.min(v), b.max(v)));
        if hi > lo {
            let _ = writeln!(s, "  <line x1=\"{lo}\" y1=\"{bar}\" x2=\"{hi}\" y2=\"{bar}\" stroke=\"black\"/>");
        }
        for &i in block {
            let (px, py) = if i < k { (x(i), TOP) } else { (x(i - k), BOTTOM) };
            let _ = writeln!(s, "  <line x1=\"{px}\" y1=\"{py}\" x2=\"{px}\" y2=\"{bar}\" stroke=\"black\"/>");
        }
    }
    for i in 0..k {
        let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{TOP}\" r=\"3\"/>", x(i));
    }
    for i in 0..l {
        let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{BOTTOM}\" r=\"3\"/>", x(i));
    }
    s.push_str("</svg>\n");
    s
}

/// The path as a polyline, one unit per step.
pub fn dyck_svg(path: &DyckPath) -> String {
    let levels = path.levels();
    let top = *levels.iter().max().unwrap_or(&0);
    let bottom = *levels.iter().min().unwrap_or(&0);
    let unit = 20.0;
    let width = 2.0 * MARGIN + unit * path.steps.len() as f64;
    let height = 2.0 * MARGIN + unit * (top - bottom) as f64;
    let mut s = header(width, height);
    let pts: Vec<String> = levels
        .iter()
        .enumerate()
        .map(|(i, &h)| format!("{},{}", MARGIN + unit * i as f64, MARGIN + unit * (top - h) as f64))
        .collect();
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>",
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use partcat::Word;

    #[test]
    fn partition_drawing_has_every_point() {
        let p = Partition::parse("aab;baa").unwrap();
        let svg = partition_svg(&p);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn dyck_drawing_has_one_vertex_per_level() {
        let w = Word::parse("abba").unwrap();
        let svg = dyck_svg(&w.dyck_path());
        let pts = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 5);
    }
}
