//! Plain-text algebra files.
//!
//! ```text
//! variety: naring
//! mod: 5
//! basis: x y
//! mul: x*x = x
//! sub D: x
//! ```
//!
//! Groups give `order:`, `elements:` and a `table:` block with one row of
//! labels per element, identity first.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::subobject::{generate, Subobject};
use crate::variety::{Variety, VarietyTag};

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub struct SpecDocument {
    pub algebra: Arc<FiniteAlgebra>,
    /// Named subobjects in declaration order.
    pub subobjects: Vec<(String, Subobject)>,
}

impl SpecDocument {
    pub fn subobject(&self, name: &str) -> Result<&Subobject> {
        self.subobjects
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::UnknownSubobject(name.to_string()))
    }
}

pub fn load_spec(path: &Path) -> Result<SpecDocument> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

fn syntax(line: usize, column: usize, expected: &str) -> Error {
    Error::Syntax {
        line,
        column,
        expected: expected.to_string(),
    }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// A line with its number and the column where `rest` starts.
struct Line<'a> {
    number: usize,
    indent: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn column_of(&self, part: &str) -> usize {
        // `part` is always a subslice of `text`.
        let offset = part.as_ptr() as usize - self.text.as_ptr() as usize;
        self.indent + self.text[..offset].chars().count() + 1
    }
}

#[derive(Default)]
struct Draft<'a> {
    variety: Option<(VarietyTag, usize)>,
    modulus: Option<(u32, usize)>,
    order: Option<(usize, usize)>,
    labels: Option<(Vec<String>, usize)>,
    products: Vec<(&'a str, &'a str, &'a str, Line<'a>)>,
    table: Option<(Vec<Line<'a>>, usize)>,
    subs: Vec<(String, Line<'a>, &'a str)>,
}

fn set_once<T>(slot: &mut Option<(T, usize)>, value: T, line: usize, what: &str) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Duplicate {
            line,
            what: format!("second `{what}` header"),
        });
    }
    *slot = Some((value, line));
    Ok(())
}

pub fn parse_spec(text: &str) -> Result<SpecDocument> {
    let mut draft = Draft::default();
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim_end_matches('\r');
            let trimmed = body.trim_start();
            Line {
                number: i + 1,
                indent: body.len() - trimmed.len(),
                text: trimmed.trim_end(),
            }
        })
        .peekable();
    while let Some(line) = lines.next() {
        if line.text.is_empty() {
            continue;
        }
        let Some((key, value)) = line.text.split_once(':') else {
            return Err(syntax(line.number, line.indent + 1, "`key: value`"));
        };
        let value_trimmed = value.trim();
        let n = line.number;
        match key.trim() {
            "variety" => {
                let tag = VarietyTag::from_keyword(value_trimmed).ok_or_else(|| {
                    syntax(
                        n,
                        line.column_of(value_trimmed),
                        "one of group, ring, naring, lie",
                    )
                })?;
                set_once(&mut draft.variety, tag, n, "variety")?;
            }
            "mod" => {
                let m: u32 = value_trimmed
                    .parse()
                    .ok()
                    .filter(|&m| m >= 2)
                    .ok_or_else(|| syntax(n, line.column_of(value_trimmed), "a modulus ≥ 2"))?;
                set_once(&mut draft.modulus, m, n, "mod")?;
            }
            "order" => {
                let o: usize = value_trimmed
                    .parse()
                    .ok()
                    .filter(|&o| o >= 1)
                    .ok_or_else(|| syntax(n, line.column_of(value_trimmed), "a positive order"))?;
                set_once(&mut draft.order, o, n, "order")?;
            }
            "basis" | "elements" => {
                let mut labels = Vec::new();
                for tok in value.split_whitespace() {
                    if !is_label(tok) {
                        return Err(syntax(n, line.column_of(tok), "a label"));
                    }
                    if labels.iter().any(|l| l == tok) {
                        return Err(Error::Duplicate {
                            line: n,
                            what: format!("label `{tok}`"),
                        });
                    }
                    labels.push(tok.to_string());
                }
                set_once(&mut draft.labels, labels, n, key.trim())?;
            }
            "mul" => {
                let (lhs, rhs) = value
                    .split_once('=')
                    .ok_or_else(|| syntax(n, line.column_of(value_trimmed), "`a*b = ...`"))?;
                let (a, b) = lhs
                    .split_once('*')
                    .ok_or_else(|| syntax(n, line.column_of(value_trimmed), "a product `a*b`"))?;
                draft.products.push((a.trim(), b.trim(), rhs.trim(), line));
            }
            "table" | "add-table" => {
                if !value_trimmed.is_empty() {
                    return Err(syntax(
                        n,
                        line.column_of(value_trimmed),
                        "end of line after `table:`",
                    ));
                }
                let mut rows = Vec::new();
                while let Some(next) = lines.peek() {
                    if next.text.is_empty() && next.indent == 0 && rows.is_empty() {
                        lines.next();
                        continue;
                    }
                    if next.text.is_empty() || next.text.contains(':') {
                        break;
                    }
                    rows.push(lines.next().expect("peeked"));
                }
                set_once(&mut draft.table, rows, n, "table")?;
            }
            k if k.starts_with("sub ") || k.starts_with("sub\t") => {
                let name = k[3..].trim();
                if !is_label(name) {
                    return Err(syntax(n, line.column_of(name), "a subobject name"));
                }
                if draft.subs.iter().any(|(s, _, _)| s == name) {
                    return Err(Error::Duplicate {
                        line: n,
                        what: format!("subobject `{name}`"),
                    });
                }
                draft.subs.push((name.to_string(), line, value));
            }
            _ => {
                return Err(syntax(
                    n,
                    line.indent + 1,
                    "one of variety, mod, order, basis, elements, mul, table, sub",
                ));
            }
        }
    }
    build(draft)
}

fn build(draft: Draft<'_>) -> Result<SpecDocument> {
    let (tag, _) = draft
        .variety
        .ok_or_else(|| syntax(1, 1, "a `variety:` header"))?;
    let algebra = if tag == VarietyTag::Group {
        build_group(&draft)?
    } else {
        build_ring_like(&draft, tag)?
    };
    let algebra = Arc::new(algebra);
    let mut subobjects = Vec::new();
    for (name, line, value) in &draft.subs {
        let mut gens = Vec::new();
        for tok in value.split_whitespace() {
            gens.push(parse_element(&algebra, tok, line)?);
        }
        subobjects.push((name.clone(), generate(&algebra, &gens)));
    }
    Ok(SpecDocument {
        algebra,
        subobjects,
    })
}

fn build_group(draft: &Draft<'_>) -> Result<FiniteAlgebra> {
    if let Some((_, line)) = draft.modulus {
        return Err(syntax(line, 1, "`order:` for a group"));
    }
    if let Some((_, _, _, line)) = draft.products.first() {
        return Err(syntax(line.number, 1, "a `table:` block for a group"));
    }
    let (labels, labels_line) = draft
        .labels
        .clone()
        .ok_or_else(|| syntax(1, 1, "an `elements:` header"))?;
    let n = match draft.order {
        Some((o, line)) if o != labels.len() => {
            return Err(syntax(
                line,
                1,
                &format!("order equal to the {} listed elements", labels.len()),
            ));
        }
        _ => labels.len(),
    };
    let (rows, table_line) = draft
        .table
        .as_ref()
        .ok_or_else(|| syntax(labels_line, 1, "a `table:` block"))?;
    let index: HashMap<&str, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i as u32))
        .collect();
    if rows.len() != n {
        return Err(syntax(
            rows.last().map_or(*table_line, |l| l.number),
            1,
            &format!("{n} table rows"),
        ));
    }
    let mut table = Vec::with_capacity(n);
    for row in rows {
        let mut out = Vec::with_capacity(n);
        for tok in row.text.split_whitespace() {
            let v = index.get(tok).ok_or_else(|| Error::UndeclaredLabel {
                line: row.number,
                label: tok.to_string(),
            })?;
            out.push(*v);
        }
        if out.len() != n {
            return Err(syntax(
                row.number,
                row.indent + 1,
                &format!("{n} entries per row"),
            ));
        }
        table.push(out);
    }
    FiniteAlgebra::group_from_table(table, labels)
}

fn build_ring_like(draft: &Draft<'_>, tag: VarietyTag) -> Result<FiniteAlgebra> {
    if let Some((_, line)) = draft.order {
        return Err(syntax(line, 1, "`mod:` for a ring-like algebra"));
    }
    if let Some((_, line)) = &draft.table {
        return Err(syntax(*line, 1, "`mul:` clauses for a ring-like algebra"));
    }
    let (m, _) = draft
        .modulus
        .ok_or_else(|| syntax(1, 1, "a `mod:` header"))?;
    let labels = draft.labels.clone().map(|(l, _)| l).unwrap_or_default();
    let variety = match tag {
        VarietyTag::Ring => Variety::Ring(m),
        VarietyTag::NaRing => Variety::NaRing(m),
        VarietyTag::Lie => Variety::Lie(m),
        VarietyTag::Group => unreachable!(),
    };
    let r = labels.len();
    let index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut constants = vec![0u32; r * r * r];
    let mut seen = vec![false; r * r];
    for (a, b, rhs, line) in &draft.products {
        let lookup = |s: &str| -> Result<usize> {
            if !is_label(s) {
                return Err(syntax(line.number, line.column_of(s), "a basis label"));
            }
            index.get(s).copied().ok_or_else(|| Error::UndeclaredLabel {
                line: line.number,
                label: s.to_string(),
            })
        };
        let (i, j) = (lookup(a)?, lookup(b)?);
        if std::mem::replace(&mut seen[i * r + j], true) {
            return Err(Error::Duplicate {
                line: line.number,
                what: format!("product {a}*{b}"),
            });
        }
        let coords = parse_combination(rhs, &index, m, line)?;
        constants[(i * r + j) * r..(i * r + j + 1) * r].copy_from_slice(&coords);
    }
    FiniteAlgebra::ring_like(variety, labels, constants)
}

/// `2x + y`, `2·x - 3*y`, `0`.
fn parse_combination(
    s: &str,
    index: &HashMap<&str, usize>,
    m: u32,
    line: &Line<'_>,
) -> Result<Vec<u32>> {
    let mut coords = vec![0u64; index.len()];
    let m64 = u64::from(m);
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(syntax(
            line.number,
            line.column_of(s),
            "a linear combination",
        ));
    }
    let mut sign_neg = false;
    let mut first = true;
    loop {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('-') {
            sign_neg = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(syntax(line.number, line.column_of(rest), "a term"));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(syntax(line.number, line.column_of(rest), "`+` or `-`"));
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (num, label) = term.split_at(digits);
        let label = label
            .trim_start()
            .trim_start_matches(['·', '*'])
            .trim_start();
        let coef = if num.is_empty() {
            1
        } else {
            num.parse::<u64>()
                .map_err(|_| syntax(line.number, line.column_of(term), "a coefficient"))?
                % m64
        };
        if label.is_empty() {
            if num.is_empty() {
                return Err(syntax(line.number, line.column_of(rest), "a term"));
            }
            if coef != 0 {
                return Err(syntax(
                    line.number,
                    line.column_of(term),
                    "a basis label after the coefficient",
                ));
            }
        } else {
            if !is_label(label) {
                return Err(syntax(line.number, line.column_of(label), "a basis label"));
            }
            let i = *index.get(label).ok_or_else(|| Error::UndeclaredLabel {
                line: line.number,
                label: label.to_string(),
            })?;
            let c = if sign_neg { (m64 - coef) % m64 } else { coef };
            coords[i] = (coords[i] + c) % m64;
        }
        sign_neg = false;
        first = false;
        rest = &rest[end..];
        if rest.trim().is_empty() {
            break;
        }
    }
    Ok(coords.into_iter().map(|c| c as u32).collect())
}

fn parse_element(g: &FiniteAlgebra, tok: &str, line: &Line<'_>) -> Result<Element> {
    if g.is_group() {
        return g
            .labels()
            .iter()
            .position(|l| l == tok)
            .map(|i| i as Element)
            .ok_or_else(|| Error::UndeclaredLabel {
                line: line.number,
                label: tok.to_string(),
            });
    }
    let index: HashMap<&str, usize> = g
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let coords = parse_combination(tok, &index, g.modulus().expect("ring-like"), line)?;
    Ok(g.from_coords(&coords))
}

fn compact(g: &FiniteAlgebra, a: Element) -> String {
    g.format_element(a).replace(' ', "")
}

/// Text that parses back to the same algebra and subobjects.
pub fn emit_spec(g: &FiniteAlgebra, subobjects: &[(String, Subobject)]) -> String {
    let mut out = String::new();
    let labels: Vec<String> = if g.labels().len() == g.rank().unwrap_or(g.order()) {
        g.labels().to_vec()
    } else if g.is_group() {
        (0..g.order())
            .map(|i| {
                if i == 0 {
                    "e".to_string()
                } else {
                    format!("g{i}")
                }
            })
            .collect()
    } else {
        FiniteAlgebra::default_labels(g.rank().unwrap_or(0))
    };
    let g = g.clone().with_labels(labels.clone());
    out.push_str(&format!("variety: {}\n", g.variety().tag().keyword()));
    if g.is_group() {
        out.push_str(&format!("order: {}\n", g.order()));
        out.push_str(&format!("elements: {}\n", labels.join(" ")));
        out.push_str("table:\n");
        for row in g.table_rows() {
            let names: Vec<&str> = row.iter().map(|&x| labels[x as usize].as_str()).collect();
            out.push_str(&format!("  {}\n", names.join(" ")));
        }
    } else {
        let r = labels.len();
        out.push_str(&format!("mod: {}\n", g.modulus().expect("ring-like")));
        out.push_str(&format!("basis: {}\n", labels.join(" ")));
        for i in 0..r {
            for j in 0..r {
                let p = g.from_coords(g.basis_product(i, j));
                if p != 0 {
                    out.push_str(&format!(
                        "mul: {}*{} = {}\n",
                        labels[i],
                        labels[j],
                        g.format_element(p)
                    ));
                }
            }
        }
    }
    for (name, s) in subobjects {
        let gens: Vec<String> = s.generators().iter().map(|&x| compact(&g, x)).collect();
        if gens.is_empty() {
            out.push_str(&format!("sub {name}:\n"));
        } else {
            out.push_str(&format!("sub {name}: {}\n", gens.join(" ")));
        }
    }
    out
}
