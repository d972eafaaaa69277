//! Reads the xymatrix degree plots in `fixtures/figures.tex` into grids of
//! Unicode cell strings, independently of the library's printers.

#![allow(dead_code)]

pub fn figure_source() -> String {
    include_str!("../fixtures/figures.tex").to_string()
}

/// The body of the xymatrix immediately preceding `\label{label}`.
fn matrix_body<'a>(src: &'a str, label: &str) -> &'a str {
    let at = src
        .find(&format!("\\label{{{label}}}"))
        .unwrap_or_else(|| panic!("no figure {label}"));
    let start = src[..at]
        .rfind("\\xymatrix")
        .expect("xymatrix before label");
    let open = start + src[start..].find('{').expect("opening brace");
    let mut depth = 0;
    for (i, ch) in src[open..].char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return &src[open + 1..open + i];
                }
            }
            _ => {}
        }
    }
    panic!("unbalanced xymatrix in {label}");
}

/// Rows top to bottom, each a list of raw LaTeX cells left to right.
pub fn raw_rows(src: &str, label: &str) -> Vec<Vec<String>> {
    matrix_body(src, label)
        .split("\\\\")
        .filter(|row| !row.trim().is_empty())
        .map(|row| row.split('&').map(|c| c.trim().to_string()).collect())
        .collect()
}

fn superscript(ch: char) -> char {
    match ch {
        '0' => '⁰',
        '1' => '¹',
        '2' => '²',
        '3' => '³',
        '4' => '⁴',
        '5' => '⁵',
        '6' => '⁶',
        '7' => '⁷',
        '8' => '⁸',
        '9' => '⁹',
        '-' => '⁻',
        other => panic!("no superscript for {other:?}"),
    }
}

fn subscript(ch: char) -> char {
    match ch {
        '0'..='9' => char::from_u32('₀' as u32 + ch.to_digit(10).unwrap()).unwrap(),
        '-' => '₋',
        other => panic!("no subscript for {other:?}"),
    }
}

/// `^{..}`, `^x`, `_{..}` and `_x` become Unicode scripts.
fn scripts(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch == '^' || ch == '_' {
            let map = if ch == '^' { superscript } else { subscript };
            if chars.get(i + 1) == Some(&'{') {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == '}')
                    .expect("closing brace")
                    + i;
                out.extend(chars[i + 2..close].iter().map(|&c| map(c)));
                i = close + 1;
            } else {
                out.push(map(chars[i + 1]));
                i += 2;
            }
        } else {
            out.push(ch);
            i += 1;
        }
    }
    out
}

/// One LaTeX cell in the library's Unicode notation.
pub fn latex_to_unicode(cell: &str) -> String {
    let replaced = cell
        .replace("\\langle\\mathbb{Z}/2\\rangle", "⟨Z/2⟩")
        .replace("\\langle\\mathbb{Z}\\rangle", "⟨Z⟩")
        .replace("\\epsilon", "ε")
        .replace("\\kappa", "κ")
        .replace("\\iota", "ι")
        .replace("\\tau", "τ")
        .replace("\\xi", "ξ")
        .replace(' ', "");
    scripts(&replaced)
}

/// A plotted figure: `cells[i][j]` sits at `(a0 + j, b0 - i)`.
pub struct Transcribed {
    pub a0: i64,
    pub b0: i64,
    pub cells: Vec<Vec<String>>,
}

impl Transcribed {
    /// The cell at `(a, b)`, with unplotted positions read as `blank`.
    pub fn at(&self, a: i64, b: i64, blank: &str) -> String {
        let (i, j) = (self.b0 - b, a - self.a0);
        if i < 0 || j < 0 {
            return blank.to_string();
        }
        self.cells
            .get(i as usize)
            .and_then(|row| row.get(j as usize))
            .filter(|c| !c.is_empty())
            .cloned()
            .unwrap_or_else(|| blank.to_string())
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn columns(&self) -> usize {
        self.cells.iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn transcribe(src: &str, label: &str, a0: i64, b0: i64) -> Transcribed {
    let cells = raw_rows(src, label)
        .iter()
        .map(|row| row.iter().map(|c| latex_to_unicode(c)).collect())
        .collect();
    Transcribed { a0, b0, cells }
}

/// Figure label, top-left corner `(a, b)`, and whether blanks are generator dots.
pub const FIGURES: [(&str, &str, i64, i64, bool); 6] = [
    ("fig1", "fig:cohomPoint", -7, 7, false),
    ("fig2", "fig:cohomPointGenerators", -5, 5, true),
    ("fig3", "fig:cohomEP", -5, 5, false),
    ("fig4", "fig:cohomEPGenerators", -5, 5, true),
    ("fig5", "fig:cohomoEAP", 0, 1, false),
    ("fig6", "fig:cohomoEAPGenerators", 0, 1, true),
];

/// Cells where the printed figure disagrees with the degree bookkeeping:
/// figure, `a`, `b`, printed text, and the value the degree forces.
pub const ERRATA: [(&str, i64, i64, &str, &str); 3] = [
    ("fig2", 5, -5, "τ(ι⁻⁵))", "τ(ι⁻⁵)"),
    ("fig6", 9, -5, "ε³τ₉", "ε⁴τ₉"),
    ("fig6", 9, -6, "ε²τ₉", "ε³τ₉"),
];

/// The transcribed value at `(a, b)` with the errata applied.
pub fn corrected(fig: &str, t: &Transcribed, a: i64, b: i64, blank: &str) -> String {
    let raw = t.at(a, b, blank);
    for (f, ea, eb, printed, fixed) in ERRATA {
        if f == fig && (ea, eb) == (a, b) {
            assert_eq!(
                raw, printed,
                "erratum at {fig} ({a}, {b}) no longer matches the source"
            );
            return fixed.to_string();
        }
    }
    raw
}
