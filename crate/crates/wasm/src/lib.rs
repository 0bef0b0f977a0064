//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function has a plain-Rust twin returning `Result<String, String>`
//! so the logic is testable without a JS host.

use std::fmt::Write as _;

use schubert_core::pipedream::{top_pipe_dream_among, MAX_DREAM_N};
use schubert_core::{
    all_pipe_dreams, bottom_pipe_dream, factorize_polynomial, schubert_via_pipedreams, Permutation, PipeDream,
};
use wasm_bindgen::prelude::*;

/// Largest `n` the page accepts; beyond this the dream sets get too large to draw.
pub const DEMO_MAX_N: usize = 8;
/// At most this many dreams are drawn for one permutation.
pub const MAX_DRAWN: usize = 64;

const CELL: usize = 28;
const MARGIN: usize = 22;

fn parse(word: &str) -> Result<Permutation, String> {
    let w: Permutation = word.trim().parse().map_err(|e| format!("{e}"))?;
    if w.n() > DEMO_MAX_N.min(MAX_DREAM_N) {
        return Err(format!("the demo is limited to n <= {DEMO_MAX_N}"));
    }
    Ok(w)
}

/// Polynomial, degree, term count and pipe-dream count, one per line.
pub fn schubert_text(word: &str) -> Result<String, String> {
    let w = parse(word)?;
    let poly = schubert_via_pipedreams(&w).map_err(|e| e.to_string())?;
    let count = poly.coefficient_sum().map_err(|e| e.to_string())?;
    Ok(format!(
        "{poly}\ndegree: {}\nterms: {}\npipe dreams: {count}\nLehmer code: {}",
        w.length(),
        poly.num_terms(),
        w.lehmer_code()
    ))
}

/// The factorization witness, or a statement that none exists.
pub fn factor_text(word: &str) -> Result<String, String> {
    let w = parse(word)?;
    let poly = schubert_via_pipedreams(&w).map_err(|e| e.to_string())?;
    let search = factorize_polynomial(&w, &poly).map_err(|e| e.to_string())?;
    let avoids = if w.avoids_conjecture_patterns() {
        "avoids 1432, 1423, 4132, 3142"
    } else {
        "contains one of 1432, 1423, 4132, 3142"
    };
    let verdict = match &search.witness {
        Some(f) => format!("S_{w} = {f}"),
        None => format!("S_{w} is not a product of elementary symmetric polynomials on intervals"),
    };
    Ok(format!("{verdict}\n{avoids}\ndecompositions tried: {}", search.tried))
}

/// SVG drawings of the requested dreams: `"bottom"`, `"top"` or `"all"`.
pub fn pipe_dreams_svg(word: &str, which: &str) -> Result<String, String> {
    let w = parse(word)?;
    let dreams = match which {
        "bottom" => vec![bottom_pipe_dream(&w.lehmer_code())],
        "top" => vec![top_pipe_dream_among(&w, &all_pipe_dreams(&w)).map_err(|e| e.to_string())?],
        "all" => all_pipe_dreams(&w),
        other => return Err(format!("unknown selection {other:?}")),
    };
    let mut out = String::new();
    if dreams.len() > MAX_DRAWN {
        let _ = write!(out, "<p>showing {MAX_DRAWN} of {} pipe dreams</p>", dreams.len());
    }
    for d in dreams.iter().take(MAX_DRAWN) {
        out.push_str(&svg(&w, d));
    }
    Ok(out)
}

/// One dream. Rows are labelled by `w(i)`, the column each wire exits.
fn svg(w: &Permutation, d: &PipeDream) -> String {
    let n = d.n();
    let side = 2 * MARGIN + n * CELL;
    let h = CELL / 2;
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}"><title>{}</title><g fill="none" stroke="currentColor" stroke-width="2">"#,
        d.weight()
    );
    for r in 1..=n {
        for c in 1..=n + 1 - r {
            let (x, y) = (MARGIN + (c - 1) * CELL, MARGIN + (r - 1) * CELL);
            if r + c == n + 1 {
                // last cell of the row: the wire turns up and leaves
                let _ = write!(s, r#"<path d="M{x} {} A{h} {h} 0 0 0 {} {y}"/>"#, y + h, x + h);
            } else if d.is_cross(r, c) {
                let _ = write!(
                    s,
                    r#"<path d="M{x} {my} H{} M{mx} {y} V{}"/>"#,
                    x + CELL,
                    y + CELL,
                    my = y + h,
                    mx = x + h
                );
            } else {
                let _ = write!(
                    s,
                    r#"<path d="M{x} {} A{h} {h} 0 0 0 {} {y} M{} {} A{h} {h} 0 0 1 {} {}"/>"#,
                    y + h,
                    x + h,
                    x + h,
                    y + CELL,
                    x + CELL,
                    y + h
                );
            }
        }
    }
    s.push_str(r#"</g><g font-family="monospace" font-size="12" text-anchor="middle" fill="currentColor">"#);
    for i in 1..=n {
        let centre = MARGIN + (i - 1) * CELL + h;
        let _ = write!(s, r#"<text x="{centre}" y="{}">{i}</text>"#, MARGIN - 6);
        let _ = write!(s, r#"<text x="{}" y="{}">{}</text>"#, MARGIN / 2, centre + 4, w.at(i));
    }
    s.push_str("</g></svg>");
    s
}

#[wasm_bindgen]
pub fn schubert(word: &str) -> Result<String, JsValue> {
    schubert_text(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn factor(word: &str) -> Result<String, JsValue> {
    factor_text(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = pipeDreams)]
pub fn pipe_dreams(word: &str, which: &str) -> Result<String, JsValue> {
    pipe_dreams_svg(word, which).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schubert_lines() {
        let text = schubert_text("1432").unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1*x2^2 + x1^2*x2");
        assert_eq!(lines[3], "pipe dreams: 5");
        assert!(schubert_text(" 21 ").unwrap().starts_with("x1\n"));
    }

    #[test]
    fn factor_verdicts() {
        assert!(factor_text("2143")
            .unwrap()
            .starts_with("S_2143 = e_1(x1..x1) * e_1(x1..x3)"));
        assert!(factor_text("1432").unwrap().contains("not a product"));
    }

    #[test]
    fn svg_counts() {
        let all = pipe_dreams_svg("1432", "all").unwrap();
        assert_eq!(all.matches("<svg").count(), 5);
        let bottom = pipe_dreams_svg("1432", "bottom").unwrap();
        assert_eq!(bottom.matches("<svg").count(), 1);
        // 3 crosses, 3 elbows of 2 arcs, 4 exit arcs
        assert_eq!(bottom.matches(" H").count(), 3);
        assert_eq!(bottom.matches(" A").count(), 3 * 2 + 4);
        assert!(pipe_dreams_svg("1432", "top")
            .unwrap()
            .contains("<title>x1^2*x2</title>"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(schubert_text("1135").is_err());
        assert!(schubert_text("123456789").is_err());
        assert!(pipe_dreams_svg("21", "left").is_err());
    }

    #[test]
    fn caps_drawn_dreams() {
        let text = pipe_dreams_svg("126543", "all").unwrap();
        assert_eq!(text.matches("<svg").count(), MAX_DRAWN);
        assert!(text.starts_with("<p>showing 64 of 84 pipe dreams</p>"));
    }
}
