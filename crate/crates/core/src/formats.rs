//! Plain-text file formats.
//!
//! Every format is line oriented. Blank lines and lines starting with `#`
//! are skipped. Positions in errors are 1-based line and column.
//!
//! Matrix file:
//! ```text
//! field Q            # or: field F 5 / field QFUN a,b,c
//! dim 2
//! 1 0 0 0            # n² rows of n² literals
//! ...
//! ```
//! A row containing a comma is split on commas, otherwise on whitespace, so
//! rational-function entries with spaces are written comma separated.
//!
//! Coalgebra file: `field`, `coalg d`, `labels ...`, triples `a b c value`
//! (1-based, value to end of line), then `counit ...`.
//!
//! Group file: `group <order>`, `names ...`, then the Cayley table by name;
//! or one of the shorthands `group symmetric k`, `group cyclic m`.
//!
//! Graded module file: `field`, a group block, `dim d`, `grades ...` (by
//! name), then for each group element `action <name>` and d rows.

use crate::coalg::Coalgebra;
use crate::dimodule::{CayleyTable, GradedModule};
use crate::error::{Error, Result};
use crate::exactmath::{parse_scalar_at, Field, Matrix, Scalar};
use crate::tensor_ops::EndoPair;

/// A non-blank, non-comment line with its 1-based number.
#[derive(Clone, Copy, Debug)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((s + 1, &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s + 1, &self.text[s..]));
        }
        out
    }

    /// Cells split on commas if present, otherwise on whitespace.
    fn cells(&self) -> Vec<(usize, &'a str)> {
        if !self.text.contains(',') {
            return self.tokens();
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for part in self.text.split(',') {
            let lead = part.len() - part.trim_start().len();
            out.push((offset + lead + 1, part.trim()));
            offset += part.len() + 1;
        }
        out
    }

    fn error(&self, column: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.number, column, msg)
    }
}

struct Lines<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .map(|(i, t)| Line { number: i + 1, text: t.trim_end() })
            .filter(|l| !l.text.trim().is_empty() && !l.text.trim_start().starts_with('#'))
            .collect();
        Lines { lines, pos: 0, last_line: text.lines().count().max(1) }
    }

    fn next(&mut self, what: &str) -> Result<Line<'a>> {
        let line = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| Error::parse(self.last_line, 1, format!("unexpected end of file, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn peek(&self) -> Option<Line<'a>> {
        self.lines.get(self.pos).copied()
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some(l) => Err(l.error(1, "unexpected trailing content")),
            None => Ok(()),
        }
    }

    /// `<keyword> rest...`; returns the remaining tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(Line<'a>, Vec<(usize, &'a str)>)> {
        let line = self.next(&format!("`{keyword}` line"))?;
        let tokens = line.tokens();
        match tokens.first() {
            Some((_, k)) if *k == keyword => Ok((line, tokens[1..].to_vec())),
            Some((c, k)) => Err(line.error(*c, format!("expected `{keyword}`, found `{k}`"))),
            None => Err(line.error(1, format!("expected `{keyword}`"))),
        }
    }
}

fn parse_count(line: &Line, column: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| line.error(column, format!("{what} must be a positive integer, found `{token}`")))
}

fn single_count(lines: &mut Lines, keyword: &str) -> Result<usize> {
    let (line, rest) = lines.keyword(keyword)?;
    match rest.as_slice() {
        [(c, t)] => parse_count(&line, *c, t, keyword),
        [] => Err(line.error(line.text.len() + 1, format!("`{keyword}` needs a value"))),
        [_, (c, _), ..] => Err(line.error(*c, "unexpected extra token")),
    }
}

fn parse_field(lines: &mut Lines) -> Result<Field> {
    let (line, rest) = lines.keyword("field")?;
    let wrap = |c: usize, e: Error| match e {
        Error::Usage(m) => line.error(c, m),
        other => other,
    };
    match rest.as_slice() {
        [(_, "Q")] => Ok(Field::Rationals),
        [(_, "F"), (c, p)] => {
            let p: u64 = p.parse().map_err(|_| line.error(*c, format!("invalid prime `{p}`")))?;
            Field::prime(p).map_err(|e| wrap(*c, e))
        }
        [(_, "QFUN"), (c, _), ..] => {
            let vars: Vec<&str> = line.text[c - 1..].split(',').map(str::trim).collect();
            Field::functions(&vars).map_err(|e| wrap(*c, e))
        }
        [(c, other), ..] => Err(line.error(*c, format!("unknown field `{other}`; expected Q, F <p> or QFUN <vars>"))),
        [] => Err(line.error(6, "missing field specification")),
    }
}

fn parse_row(field: &Field, line: &Line, width: usize) -> Result<Vec<Scalar>> {
    let cells = line.cells();
    if cells.len() != width {
        let column = cells.get(width).map_or(line.text.len() + 1, |c| c.0);
        return Err(line.error(column, format!("expected {width} entries, found {}", cells.len())));
    }
    cells
        .iter()
        .map(|&(c, t)| parse_scalar_at(field, t, line.number, c))
        .collect()
}

fn parse_matrix_rows(field: &Field, lines: &mut Lines, rows: usize, cols: usize) -> Result<Matrix> {
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = lines.next(&format!("matrix row {} of {rows}", r + 1))?;
        data.push(parse_row(field, &line, cols)?);
    }
    Ok(Matrix::from_fn(field, rows, cols, |r, c| data[r][c].clone()))
}

/// Reads an operator on `M⊗M`.
pub fn parse_matrix_file(text: &str) -> Result<EndoPair> {
    let mut lines = Lines::new(text);
    let field = parse_field(&mut lines)?;
    let n = single_count(&mut lines, "dim")?;
    let m = parse_matrix_rows(&field, &mut lines, n * n, n * n)?;
    lines.finish()?;
    EndoPair::from_matrix(n, m)
}

fn separator(field: &Field) -> &'static str {
    match field {
        Field::Functions(_) => ", ",
        _ => " ",
    }
}

fn write_rows(out: &mut String, m: &Matrix) {
    let f = m.field();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).display(f).to_string()).collect();
        out.push_str(&row.join(separator(f)));
        out.push('\n');
    }
}

/// Inverse of [`parse_matrix_file`].
pub fn write_matrix_file(r: &EndoPair) -> String {
    let mut out = format!("field {}\ndim {}\n", r.field().header(), r.n());
    write_rows(&mut out, r.matrix());
    out
}

/// Reads a coalgebra given by structure constants; the axioms are checked.
pub fn parse_coalgebra_file(text: &str) -> Result<Coalgebra> {
    let mut lines = Lines::new(text);
    let field = parse_field(&mut lines)?;
    let d = single_count(&mut lines, "coalg")?;
    let (line, labels) = lines.keyword("labels")?;
    if labels.len() != d {
        return Err(line.error(line.text.len() + 1, format!("expected {d} labels, found {}", labels.len())));
    }
    let labels: Vec<String> = labels.iter().map(|(_, t)| t.to_string()).collect();
    let mut triples = Vec::new();
    loop {
        let line = lines.next("structure constants or `counit` line")?;
        let tokens = line.tokens();
        if tokens.first().map(|t| t.1) == Some("counit") {
            let counit_line = Line { number: line.number, text: &line.text[tokens[0].0 + 6..] };
            let shift = tokens[0].0 + 6;
            let cells = counit_line.cells();
            if cells.len() != d {
                return Err(line.error(line.text.len() + 1, format!("expected {d} counit values, found {}", cells.len())));
            }
            let counit = cells
                .iter()
                .map(|&(c, t)| parse_scalar_at(&field, t, line.number, c + shift))
                .collect::<Result<Vec<_>>>()?;
            lines.finish()?;
            return Coalgebra::new(&field, labels, triples, counit).map_err(|e| match e {
                Error::Structure(m) | Error::Usage(m) => line.error(1, m),
                other => other,
            });
        }
        if tokens.len() < 4 {
            return Err(line.error(line.text.len() + 1, "expected `a b c value`"));
        }
        let mut idx = [0usize; 3];
        for (slot, &(c, t)) in idx.iter_mut().zip(&tokens[..3]) {
            let v = parse_count(&line, c, t, "basis index")?;
            if v > d {
                return Err(line.error(c, format!("basis index {v} exceeds {d}")));
            }
            *slot = v - 1;
        }
        let c = tokens[3].0;
        let value = parse_scalar_at(&field, &line.text[c - 1..], line.number, c)?;
        triples.push((idx[0], idx[1], idx[2], value));
    }
}

/// Inverse of [`parse_coalgebra_file`].
pub fn write_coalgebra_file(c: &Coalgebra) -> String {
    let f = c.field();
    let mut out = format!("field {}\ncoalg {}\nlabels {}\n", f.header(), c.dim(), c.labels().join(" "));
    for a in 0..c.dim() {
        for (b, d, v) in c.delta(a) {
            out.push_str(&format!("{} {} {} {}\n", a + 1, b + 1, d + 1, v.display(f)));
        }
    }
    let counit: Vec<String> = c.counit().iter().map(|s| s.display(f).to_string()).collect();
    out.push_str(&format!("counit {}\n", counit.join(separator(f))));
    out
}

fn parse_group(lines: &mut Lines) -> Result<CayleyTable> {
    let (line, rest) = lines.keyword("group")?;
    let as_structure = |c: usize, e: Error| match e {
        Error::NotAGroup(m) => line.error(c, format!("not a group: {m}")),
        other => other,
    };
    match rest.as_slice() {
        [(_, "symmetric"), (c, k)] => {
            let k = parse_count(&line, *c, k, "degree")?;
            if k > 5 {
                return Err(line.error(*c, "symmetric groups are supported up to degree 5"));
            }
            Ok(CayleyTable::symmetric(k))
        }
        [(_, "cyclic"), (c, m)] => Ok(CayleyTable::cyclic(parse_count(&line, *c, m, "order")?)),
        [(c, order)] => {
            let order = parse_count(&line, *c, order, "group order")?;
            let (names_line, names) = lines.keyword("names")?;
            if names.len() != order {
                return Err(names_line.error(names_line.text.len() + 1, format!("expected {order} names, found {}", names.len())));
            }
            let names: Vec<String> = names.iter().map(|(_, t)| t.to_string()).collect();
            let mut table = Vec::with_capacity(order);
            for r in 0..order {
                let row_line = lines.next(&format!("Cayley table row {}", r + 1))?;
                let tokens = row_line.tokens();
                if tokens.len() != order {
                    let column = tokens.get(order).map_or(row_line.text.len() + 1, |t| t.0);
                    return Err(row_line.error(column, format!("expected {order} entries, found {}", tokens.len())));
                }
                let row = tokens
                    .iter()
                    .map(|&(c, t)| {
                        names.iter().position(|n| n == t).ok_or_else(|| row_line.error(c, format!("unknown element `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                table.push(row);
            }
            CayleyTable::new(names, table).map_err(|e| as_structure(1, e))
        }
        [] => Err(line.error(6, "missing group description")),
        [(c, _), ..] => Err(line.error(*c, "expected `<order>`, `symmetric <k>` or `cyclic <m>`")),
    }
}

/// Reads a group given by its Cayley table (or a shorthand).
pub fn parse_group_file(text: &str) -> Result<CayleyTable> {
    let mut lines = Lines::new(text);
    let g = parse_group(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

fn write_group(out: &mut String, g: &CayleyTable) {
    out.push_str(&format!("group {}\nnames {}\n", g.order(), g.names().join(" ")));
    for row in g.table() {
        let names: Vec<&str> = row.iter().map(|&x| g.names()[x].as_str()).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
}

/// Inverse of [`parse_group_file`], always in full table form.
pub fn write_group_file(g: &CayleyTable) -> String {
    let mut out = String::new();
    write_group(&mut out, g);
    out
}

/// Reads a `G`-graded `kG`-module.
pub fn parse_graded_file(text: &str) -> Result<GradedModule> {
    let mut lines = Lines::new(text);
    let field = parse_field(&mut lines)?;
    let group = parse_group(&mut lines)?;
    let d = single_count(&mut lines, "dim")?;
    let (line, grades) = lines.keyword("grades")?;
    if grades.len() != d {
        return Err(line.error(line.text.len() + 1, format!("expected {d} grades, found {}", grades.len())));
    }
    let grades = grades
        .iter()
        .map(|&(c, t)| group.index_of(t).ok_or_else(|| line.error(c, format!("unknown group element `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    let mut action: Vec<Option<Matrix>> = vec![None; group.order()];
    for _ in 0..group.order() {
        let (line, rest) = lines.keyword("action")?;
        let [(c, name)] = rest.as_slice() else {
            return Err(line.error(8, "expected `action <element>`"));
        };
        let g = group.index_of(name).ok_or_else(|| line.error(*c, format!("unknown group element `{name}`")))?;
        if action[g].is_some() {
            return Err(line.error(*c, format!("duplicate action for `{name}`")));
        }
        action[g] = Some(parse_matrix_rows(&field, &mut lines, d, d)?);
    }
    lines.finish()?;
    let action = action.into_iter().map(|m| m.expect("every element read once")).collect();
    GradedModule::new(&field, group, action, grades).map_err(|e| match e {
        Error::Structure(m) | Error::Usage(m) | Error::NotAGroup(m) => Error::parse(line.number, 1, m),
        other => other,
    })
}

/// Inverse of [`parse_graded_file`].
pub fn write_graded_file(m: &GradedModule) -> String {
    let f = m.field();
    let g = m.group();
    let mut out = format!("field {}\n", f.header());
    write_group(&mut out, g);
    out.push_str(&format!("dim {}\n", m.dim()));
    let grades: Vec<&str> = m.grades().iter().map(|&x| g.names()[x].as_str()).collect();
    out.push_str(&format!("grades {}\n", grades.join(" ")));
    for (x, a) in m.action().iter().enumerate() {
        out.push_str(&format!("action {}\n", g.names()[x]));
        write_rows(&mut out, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = "field Q\ndim 1\n-1/2\n";
        let r = parse_matrix_file(text).unwrap();
        assert_eq!(write_matrix_file(&r), text);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# operator\nfield F 3\n\ndim 1\n  4  # reduced\n";
        assert!(parse_matrix_file(text).is_err());
        let r = parse_matrix_file("# operator\nfield F 3\n\ndim 1\n4\n").unwrap();
        assert!(r.matrix().get(0, 0).is_one());
    }

    #[test]
    fn bad_entry_position() {
        let err = parse_matrix_file("field Q\ndim 1\n1/0x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn row_width_checked() {
        let err = parse_matrix_file("field Q\ndim 1\n1 2\n").unwrap_err();
        assert_eq!(err, Error::parse(3, 3, "expected 1 entries, found 2"));
    }
}
