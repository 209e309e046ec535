//! Plain-text file formats for every pipeline stage.
//!
//! Each format has a writer producing a `String` and a parser taking `&str`,
//! so a write followed by a parse gives back the same value exactly. Blank
//! lines and lines starting with `#` are ignored by every parser except the
//! barcode CSV, whose first line must be the header.

use std::fmt::Write as _;
use std::path::Path;

use crate::analysis::{Window, WindowReport};
use crate::complexes::{Filtration, PointCloud, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::grassmann::BettiProfile;
use crate::persistence::{Barcode, Interval};

#[cfg(test)]
mod tests;

pub const BARCODE_HEADER: &str = "degree,birth,death";

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_f64(line: usize, token: &str) -> Result<f64> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("{token:?} is not a number")))
}

fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("{token:?} is not a nonnegative integer")))
}

/// One point per line, coordinates separated by single spaces, 17
/// significant digits.
pub fn write_cloud(cloud: &PointCloud) -> String {
    let mut out = String::new();
    for p in cloud.points() {
        for (i, x) in p.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{x:.16e}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_cloud(text: &str) -> Result<PointCloud> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (line, l) in content_lines(text) {
        let p = l
            .split_whitespace()
            .map(|t| parse_f64(line, t))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = points.first() {
            if first.len() != p.len() {
                return Err(Error::parse(
                    line,
                    format!("expected {} coordinates, found {}", first.len(), p.len()),
                ));
            }
        }
        if p.iter().any(|x| !x.is_finite()) {
            return Err(Error::parse(line, "coordinates must be finite"));
        }
        points.push(p);
    }
    PointCloud::from_points(&points)
}

/// Header `dim_max vertex_count`, then `value v0 v1 ...` per simplex in
/// filtration order.
pub fn write_filtration(filtration: &Filtration) -> String {
    write_simplices(filtration.vertex_count(), filtration.simplices())
}

/// Same format for an arbitrary simplex list, such as an exported complex.
pub fn write_simplices(vertex_count: usize, simplices: &[Simplex]) -> String {
    let dim_max = simplices.iter().map(Simplex::dim).max().unwrap_or(0);
    let mut out = format!("{dim_max} {vertex_count}\n");
    for s in simplices {
        write!(out, "{}", s.value()).expect("writing to a String");
        for v in s.vertices() {
            write!(out, " {v}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_filtration(text: &str) -> Result<Filtration> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [dim_max, vertex_count] = fields[..] else {
        return Err(Error::parse(hline, "header must be `dim_max vertex_count`"));
    };
    let dim_max = parse_usize(hline, dim_max)?;
    let vertex_count = parse_usize(hline, vertex_count)?;
    let mut simplices = Vec::new();
    for (line, l) in lines {
        let mut tokens = l.split_whitespace();
        let value = parse_f64(line, tokens.next().expect("line is not blank"))?;
        let vertices = tokens
            .map(|t| {
                let v = parse_usize(line, t)?;
                if v >= vertex_count {
                    return Err(Error::parse(
                        line,
                        format!("vertex {v} outside 0..{vertex_count}"),
                    ));
                }
                Ok(v as Vertex)
            })
            .collect::<Result<Vec<_>>>()?;
        if vertices.len() > dim_max + 1 {
            return Err(Error::parse(
                line,
                format!("simplex larger than dim_max {dim_max}"),
            ));
        }
        let s = Simplex::new(&vertices, value).map_err(|e| Error::parse(line, e.to_string()))?;
        simplices.push(s);
    }
    Filtration::new(vertex_count, simplices)
}

/// One landmark index per line.
pub fn write_landmarks(indices: &[usize]) -> String {
    indices.iter().map(|i| format!("{i}\n")).collect()
}

pub fn parse_landmarks(text: &str) -> Result<Vec<usize>> {
    content_lines(text)
        .map(|(line, l)| parse_usize(line, l))
        .collect()
}

fn format_value(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".into()
    } else {
        format!("{x}")
    }
}

/// `degree,birth,death` rows, `inf` for classes that never die.
pub fn write_barcode_csv(barcode: &Barcode) -> String {
    let mut out = format!("{BARCODE_HEADER}\n");
    for (d, bar) in barcode.iter() {
        writeln!(out, "{d},{},{}", bar.birth, format_value(bar.death))
            .expect("writing to a String");
    }
    out
}

/// Degrees present run from 0 to the largest degree with a bar.
pub fn parse_barcode_csv(text: &str) -> Result<Barcode> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, h)) if h == BARCODE_HEADER => {}
        _ => {
            return Err(Error::parse(
                1,
                format!("expected header `{BARCODE_HEADER}`"),
            ))
        }
    }
    let mut bars = Vec::new();
    for (line, l) in lines.filter(|(_, l)| !l.is_empty()) {
        let fields: Vec<&str> = l.split(',').map(str::trim).collect();
        let [d, birth, death] = fields[..] else {
            return Err(Error::parse(line, "expected three fields"));
        };
        let d = parse_usize(line, d)?;
        let birth = parse_f64(line, birth)?;
        let death = parse_f64(line, death)?;
        if !birth.is_finite() || death.is_nan() || death == f64::NEG_INFINITY || death < birth {
            return Err(Error::parse(
                line,
                format!("bad interval [{birth}, {death})"),
            ));
        }
        bars.push((d, Interval::new(birth, death)));
    }
    let degrees = bars.iter().map(|&(d, _)| d + 1).max().unwrap_or(0);
    if degrees > 64 {
        return Err(Error::parse(
            1,
            format!("degree {} is implausibly large", degrees - 1),
        ));
    }
    Barcode::new(degrees, bars)
}

/// `key = value` records; one `window = [a, b)` line per window.
pub fn write_window_report(report: &WindowReport) -> String {
    let mut out = String::new();
    writeln!(out, "target = {}", report.target).expect("writing to a String");
    writeln!(out, "top_dim = {}", report.top_dim).expect("writing to a String");
    writeln!(
        out,
        "critical_value_count = {}",
        report.critical_values.len()
    )
    .expect("writing to a String");
    let values: Vec<String> = report
        .critical_values
        .iter()
        .map(|v| format_value(*v))
        .collect();
    writeln!(out, "critical_values = {}", values.join(" ")).expect("writing to a String");
    writeln!(out, "window_count = {}", report.windows.len()).expect("writing to a String");
    for w in &report.windows {
        writeln!(out, "window = [{}, {})", w.start, format_value(w.end))
            .expect("writing to a String");
    }
    out
}

pub fn parse_window_report(text: &str) -> Result<WindowReport> {
    let mut target = None;
    let mut top_dim = None;
    let mut count = None;
    let mut critical_values = None;
    let mut window_count = None;
    let mut windows = Vec::new();
    for (line, l) in content_lines(text) {
        let (key, value) = l
            .split_once('=')
            .ok_or_else(|| Error::parse(line, "expected `key = value`"))?;
        let value = value.trim();
        let duplicate = || Error::parse(line, format!("duplicate key {:?}", key.trim()));
        match key.trim() {
            "target" => {
                let t: BettiProfile = value
                    .parse()
                    .map_err(|e: Error| Error::parse(line, e.to_string()))?;
                target.replace(t).map_or(Ok(()), |_| Err(duplicate()))?;
            }
            "top_dim" => top_dim
                .replace(parse_usize(line, value)?)
                .map_or(Ok(()), |_| Err(duplicate()))?,
            "critical_value_count" => count
                .replace(parse_usize(line, value)?)
                .map_or(Ok(()), |_| Err(duplicate()))?,
            "window_count" => window_count
                .replace(parse_usize(line, value)?)
                .map_or(Ok(()), |_| Err(duplicate()))?,
            "critical_values" => {
                let v = value
                    .split_whitespace()
                    .map(|t| parse_f64(line, t))
                    .collect::<Result<Vec<_>>>()?;
                critical_values
                    .replace(v)
                    .map_or(Ok(()), |_| Err(duplicate()))?;
            }
            "window" => windows.push(parse_window(line, value)?),
            other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
        }
    }
    let missing = |k: &str| Error::parse(0, format!("missing key {k:?}"));
    let critical_values = critical_values.ok_or_else(|| missing("critical_values"))?;
    if count.is_some_and(|c| c != critical_values.len()) {
        return Err(Error::parse(
            0,
            "critical_value_count disagrees with critical_values",
        ));
    }
    if window_count.is_some_and(|c| c != windows.len()) {
        return Err(Error::parse(
            0,
            "window_count disagrees with the window lines",
        ));
    }
    Ok(WindowReport {
        target: target.ok_or_else(|| missing("target"))?,
        top_dim: top_dim.ok_or_else(|| missing("top_dim"))?,
        critical_values,
        windows,
    })
}

fn parse_window(line: usize, text: &str) -> Result<Window> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line, "window must look like `[a, b)`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(line, "window must look like `[a, b)`"))?;
    let start = parse_f64(line, a.trim())?;
    let end = parse_f64(line, b.trim())?;
    if !start.is_finite() || end.is_nan() || end <= start {
        return Err(Error::parse(
            line,
            format!("empty or invalid window [{start}, {end})"),
        ));
    }
    Ok(Window { start, end })
}
