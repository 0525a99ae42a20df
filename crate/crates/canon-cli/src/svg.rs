//! Self-contained SVG rendering of a decorated grid with one or two lattice
//! paths: red lines and notches mark the descent structure of the labels,
//! the first path is drawn in blue, and an optional companion path is drawn
//! in magenta reflected along the diagonal.

use canon::grid::{DecoratedGrid, Notch};
use canon::path::Step;
use canon::{DyckPath, Permutation};

const CELL: f64 = 40.0;
const MARGIN: f64 = 30.0;

struct Canvas {
    n: usize,
    body: String,
}

impl Canvas {
    fn new(n: usize) -> Self {
        Canvas { n, body: String::new() }
    }

    /// Math coordinates (origin lower-left) to SVG coordinates (origin
    /// upper-left).
    fn point(&self, x: f64, y: f64) -> (f64, f64) {
        (MARGIN + x * CELL, MARGIN + (self.n as f64 - y) * CELL)
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let (x1, y1) = self.point(a.0, a.1);
        let (x2, y2) = self.point(b.0, b.1);
        self.body.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {style}/>\n"
        ));
    }

    fn polyline(&mut self, points: &[(usize, usize)], style: &str, reflect: bool) {
        let coords: Vec<String> = points
            .iter()
            .map(|&(x, y)| {
                let (mx, my) = if reflect { (y, x) } else { (x, y) };
                let (px, py) = self.point(mx as f64, my as f64);
                format!("{px},{py}")
            })
            .collect();
        self.body.push_str(&format!(
            "  <polyline points=\"{}\" {style}/>\n",
            coords.join(" ")
        ));
    }

    fn text(&mut self, x: f64, y: f64, s: &str, style: &str) {
        let (px, py) = self.point(x, y);
        self.body.push_str(&format!(
            "  <text x=\"{px}\" y=\"{py}\" {style}>{s}</text>\n"
        ));
    }
}

fn path_points(d: &DyckPath) -> Vec<(usize, usize)> {
    let mut points = vec![(0usize, 0usize)];
    let (mut x, mut y) = (0usize, 0usize);
    for s in d.steps() {
        match s {
            Step::E => x += 1,
            Step::N => y += 1,
        }
        points.push((x, y));
    }
    points
}

pub fn render(sigma: &Permutation, path: &DyckPath, companion: Option<&DyckPath>) -> String {
    let n = sigma.n();
    let grid = DecoratedGrid::new(sigma);
    let mut canvas = Canvas::new(n);

    let thin = "stroke=\"#cccccc\" stroke-width=\"1\"";
    for i in 0..=n {
        canvas.line((i as f64, 0.0), (i as f64, n as f64), thin);
        canvas.line((0.0, i as f64), (n as f64, i as f64), thin);
    }
    canvas.line(
        (0.0, 0.0),
        (n as f64, n as f64),
        "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"",
    );

    // Red descent lines, drawn on the portion below the diagonal.
    let red = "stroke=\"red\" stroke-width=\"2.5\"";
    for &d in grid.red_lines() {
        canvas.line((d as f64, 0.0), (d as f64, d as f64), red);
        canvas.line((d as f64, d as f64), (n as f64, d as f64), red);
    }

    // Red notches: a short tick into the cell from the marked corner.
    let notch_style = "stroke=\"red\" stroke-width=\"1.5\"";
    for row in 1..=n {
        for col in row + 1..=n {
            match grid.notch(row, col) {
                Some(Notch::UpperLeft) => {
                    let (cx, cy) = ((col - 1) as f64, row as f64);
                    canvas.line((cx, cy), (cx + 0.3, cy - 0.3), notch_style);
                }
                Some(Notch::LowerRight) => {
                    let (cx, cy) = (col as f64, (row - 1) as f64);
                    canvas.line((cx, cy), (cx - 0.3, cy + 0.3), notch_style);
                }
                None => {}
            }
        }
    }

    // Row and column labels.
    let label_style = "font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\"";
    for (i, &v) in grid.labels().iter().enumerate() {
        canvas.text(i as f64 + 0.5, -0.35, &v.to_string(), label_style);
        canvas.text(-0.35, i as f64 + 0.4, &v.to_string(), label_style);
    }

    canvas.polyline(
        &path_points(path),
        "fill=\"none\" stroke=\"blue\" stroke-width=\"3.5\" stroke-linecap=\"round\"",
        false,
    );
    if let Some(second) = companion {
        canvas.polyline(
            &path_points(second),
            "fill=\"none\" stroke=\"magenta\" stroke-width=\"3.5\" stroke-linecap=\"round\"",
            true,
        );
    }

    let size = 2.0 * MARGIN + n as f64 * CELL;
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n{}</svg>\n",
        canvas.body
    )
}
