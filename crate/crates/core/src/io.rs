//! Line-oriented text formats `hopf v1`, `module v1` and `twist v1`.
//! The grammar is documented in `docs/formats.md`.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ff::{Fe, Field, Modulus};
use crate::hopf::{verify_axioms, Entry, HopfAlgebra, ModuleRep, Tensor};
use crate::linalg::Matrix;

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |l| l.0)
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let last = self.last_line();
        self.next()
            .ok_or_else(|| Error::parse(last, format!("unexpected end of input, expected {what}")))
    }

    fn header(&mut self, kind: &str) -> Result<()> {
        let (line, toks) = self.expect(&format!("`{kind} v1`"))?;
        if toks != [kind, "v1"] {
            return Err(Error::parse(line, format!("expected header `{kind} v1`, found `{}`", toks.join(" "))));
        }
        Ok(())
    }

    fn keyword_usize(&mut self, key: &str) -> Result<(usize, usize)> {
        let (line, toks) = self.expect(key)?;
        if toks.len() != 2 || toks[0] != key {
            return Err(Error::parse(line, format!("expected `{key} <n>`")));
        }
        Ok((line, parse_index(toks[1], line)?))
    }

    /// Entries following a section header, up to the next `name:` or `end`.
    fn section_rows(&mut self) -> Vec<(usize, Vec<&'a str>)> {
        let mut out = Vec::new();
        while let Some((_, toks)) = self.peek() {
            if toks[0].ends_with(':') || toks[0] == "end" {
                break;
            }
            out.push(self.next().expect("peeked"));
        }
        out
    }

    fn finish(&mut self) -> Result<()> {
        match self.next() {
            Some((_, toks)) if toks == ["end"] => {}
            Some((line, toks)) => {
                return Err(Error::parse(line, format!("expected `end`, found `{}`", toks.join(" "))))
            }
            None => return Err(Error::parse(self.last_line(), "missing `end`")),
        }
        match self.next() {
            None => Ok(()),
            Some((line, _)) => Err(Error::parse(line, "content after `end`")),
        }
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a nonnegative integer")))
}

fn parse_u64(tok: &str, line: usize) -> Result<u64> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a nonnegative integer")))
}

/// A field element: `[c0,c1,...]` or a bare integer `c0`.
pub fn parse_element(f: &Field, tok: &str, line: usize) -> Result<Fe> {
    let coeffs: Vec<u64> = match tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        Some("") => Vec::new(),
        Some(inner) => inner
            .split(',')
            .map(|c| parse_u64(c.trim(), line))
            .collect::<Result<_>>()?,
        None => vec![parse_u64(tok, line)?],
    };
    f.from_coeffs(&coeffs)
        .map_err(|e| Error::parse(line, e.to_string()))
}

fn parse_field(lines: &mut Lines) -> Result<Field> {
    let (line, toks) = lines.expect("`field <p> <k> <modulus>`")?;
    if toks.len() != 4 || toks[0] != "field" {
        return Err(Error::parse(line, "expected `field <p> <k> auto|[c0,...,ck]`"));
    }
    let p = parse_u64(toks[1], line)?;
    let k = parse_index(toks[2], line)?;
    let modulus = if toks[3] == "auto" {
        Modulus::Auto
    } else {
        let inner = toks[3]
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(line, "modulus must be `auto` or a coefficient list"))?;
        Modulus::Given(
            inner
                .split(',')
                .map(|c| parse_u64(c.trim(), line))
                .collect::<Result<_>>()?,
        )
    };
    Field::new(p, k, modulus).map_err(|e| Error::parse(line, e.to_string()))
}

fn write_field(out: &mut String, f: &Field) {
    let modulus = if f.degree() == 1 {
        "auto".to_string()
    } else {
        let parts: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    };
    writeln!(out, "field {} {} {}", f.characteristic(), f.degree(), modulus).expect("string write");
}

fn parse_row<'a>(f: &Field, toks: &[&'a str], line: usize, indices: usize, dim: usize) -> Result<(Vec<usize>, Fe)> {
    if toks.len() != indices + 1 {
        return Err(Error::parse(
            line,
            format!("expected {indices} indices and a coefficient, found {} fields", toks.len()),
        ));
    }
    let idx = toks[..indices]
        .iter()
        .map(|t| parse_index(t, line))
        .collect::<Result<Vec<_>>>()?;
    if let Some(&i) = idx.iter().find(|&&i| i >= dim) {
        return Err(Error::parse(line, format!("index {i} out of range for dim {dim}")));
    }
    Ok((idx, parse_element(f, toks[indices], line)?))
}

/// Parses a `hopf v1` document. The antipode section is optional; when
/// absent the antipode is solved from the bialgebra data. Axioms are not
/// checked here, see [`load_hopf`].
pub fn parse_hopf(text: &str) -> Result<HopfAlgebra> {
    let mut lines = Lines::new(text);
    lines.header("hopf")?;
    let f = parse_field(&mut lines)?;
    let (_, dim) = lines.keyword_usize("dim")?;
    if dim == 0 {
        return Err(Error::parse(lines.last_line(), "dim must be positive"));
    }
    let mut mult: Option<Vec<Entry>> = None;
    let mut comult: Option<Vec<Entry>> = None;
    let mut unit: Option<Vec<Fe>> = None;
    let mut counit: Option<Vec<Fe>> = None;
    let mut antipode: Option<Matrix> = None;
    while let Some((line, toks)) = lines.peek().cloned() {
        if toks == ["end"] {
            break;
        }
        lines.next();
        let name = toks[0];
        if toks.len() != 1 || !name.ends_with(':') {
            return Err(Error::parse(line, format!("expected a section header, found `{}`", toks.join(" "))));
        }
        let rows = lines.section_rows();
        let duplicate = || Error::parse(line, format!("duplicate section `{name}`"));
        match name {
            "mult:" | "comult:" => {
                let mut entries = Vec::with_capacity(rows.len());
                for (l, t) in &rows {
                    let (i, c) = parse_row(&f, t, *l, 3, dim)?;
                    entries.push((i[0], i[1], i[2], c));
                }
                let slot = if name == "mult:" { &mut mult } else { &mut comult };
                if slot.replace(entries).is_some() {
                    return Err(duplicate());
                }
            }
            "unit:" | "counit:" => {
                let mut v = vec![f.zero(); dim];
                for (l, t) in &rows {
                    let (i, c) = parse_row(&f, t, *l, 1, dim)?;
                    v[i[0]] = f.add(v[i[0]], c);
                }
                let slot = if name == "unit:" { &mut unit } else { &mut counit };
                if slot.replace(v).is_some() {
                    return Err(duplicate());
                }
            }
            "antipode:" => {
                let mut m = Matrix::zeros(&f, dim, dim);
                for (l, t) in &rows {
                    // `i j c`: S(b_i) has coefficient c on b_j
                    let (i, c) = parse_row(&f, t, *l, 2, dim)?;
                    m.set(i[1], i[0], f.add(m.get(i[1], i[0]), c));
                }
                if antipode.replace(m).is_some() {
                    return Err(duplicate());
                }
            }
            _ => return Err(Error::parse(line, format!("unknown section `{name}`"))),
        }
    }
    lines.finish()?;
    let missing = |what: &str| Error::parse(1, format!("missing section `{what}:`"));
    let mult = mult.ok_or_else(|| missing("mult"))?;
    let comult = comult.ok_or_else(|| missing("comult"))?;
    let unit = unit.ok_or_else(|| missing("unit"))?;
    let counit = counit.ok_or_else(|| missing("counit"))?;
    match antipode {
        Some(s) => HopfAlgebra::from_parts(&f, dim, mult, comult, unit, counit, s),
        None => HopfAlgebra::with_solved_antipode(&f, dim, mult, comult, unit, counit),
    }
}

/// [`parse_hopf`] followed by the full axiom check unless `verify` is off.
pub fn load_hopf(text: &str, verify: bool) -> Result<HopfAlgebra> {
    let h = parse_hopf(text)?;
    if verify {
        if let Some(w) = verify_axioms(&h).first_failure() {
            return Err(Error::AxiomsFail(w));
        }
    }
    Ok(h)
}

pub fn serialize_hopf(h: &HopfAlgebra) -> String {
    let f = h.field();
    let mut out = String::from("hopf v1\n");
    write_field(&mut out, f);
    writeln!(out, "dim {}", h.dim()).expect("string write");
    out.push_str("mult:\n");
    for (i, j, k, c) in h.mult_tensor() {
        writeln!(out, "{i} {j} {k} {}", f.format(c)).expect("string write");
    }
    out.push_str("comult:\n");
    for (i, j, k, c) in h.comult_tensor() {
        writeln!(out, "{i} {j} {k} {}", f.format(c)).expect("string write");
    }
    for (name, v) in [("unit", h.unit()), ("counit", h.counit_vector())] {
        writeln!(out, "{name}:").expect("string write");
        for (i, &c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            writeln!(out, "{i} {}", f.format(c)).expect("string write");
        }
    }
    out.push_str("antipode:\n");
    let s = h.antipode_matrix();
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let c = s.get(j, i);
            if !c.is_zero() {
                writeln!(out, "{i} {j} {}", f.format(c)).expect("string write");
            }
        }
    }
    out.push_str("end\n");
    out
}

/// SHA-256 of the serialized algebra, in hex.
pub fn algebra_hash(h: &HopfAlgebra) -> String {
    hex::encode(Sha256::digest(serialize_hopf(h).as_bytes()))
}

fn check_hash(lines: &mut Lines, h: &HopfAlgebra) -> Result<()> {
    if let Some((line, toks)) = lines.peek().cloned() {
        if toks[0] == "algebra" {
            lines.next();
            if toks.len() != 2 {
                return Err(Error::parse(line, "expected `algebra <sha256>`"));
            }
            let expected = algebra_hash(h);
            if toks[1] != expected {
                return Err(Error::Validation(format!(
                    "line {line}: file belongs to algebra {}, loaded algebra is {expected}",
                    toks[1]
                )));
            }
        }
    }
    Ok(())
}

/// Parses a `module v1` document over `h`. Only shapes are checked unless
/// `verify` is set.
pub fn parse_module(text: &str, h: &HopfAlgebra, verify: bool) -> Result<ModuleRep> {
    let f = h.field();
    let mut lines = Lines::new(text);
    lines.header("module")?;
    check_hash(&mut lines, h)?;
    let (_, d) = lines.keyword_usize("dim")?;
    let mut action: Vec<Option<Matrix>> = vec![None; h.dim()];
    while let Some((line, toks)) = lines.peek().cloned() {
        if toks == ["end"] {
            break;
        }
        lines.next();
        if toks.len() != 2 || toks[0] != "action" {
            return Err(Error::parse(line, format!("expected `action <i>`, found `{}`", toks.join(" "))));
        }
        let i = parse_index(toks[1], line)?;
        if i >= h.dim() {
            return Err(Error::parse(line, format!("basis index {i} out of range for dim {}", h.dim())));
        }
        let mut m = Matrix::zeros(f, d, d);
        for r in 0..d {
            let (l, row) = lines.expect(&format!("row {r} of action {i}"))?;
            if row.len() != d {
                return Err(Error::parse(
                    l,
                    format!("action {i} row {r} has {} entries, module dimension is {d}", row.len()),
                ));
            }
            for (c, tok) in row.iter().enumerate() {
                m.set(r, c, parse_element(f, tok, l)?);
            }
        }
        if action[i].replace(m).is_some() {
            return Err(Error::parse(line, format!("duplicate action {i}")));
        }
    }
    lines.finish()?;
    let action = action
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::parse(1, format!("missing action {i}"))))
        .collect::<Result<Vec<_>>>()?;
    if verify {
        ModuleRep::checked(h, d, action)
    } else {
        ModuleRep::new(h, d, action)
    }
}

pub fn serialize_module(v: &ModuleRep, h: &HopfAlgebra) -> String {
    let f = h.field();
    let mut out = String::from("module v1\n");
    writeln!(out, "algebra {}", algebra_hash(h)).expect("string write");
    writeln!(out, "dim {}", v.dim()).expect("string write");
    for (i, m) in v.action_matrices().iter().enumerate() {
        writeln!(out, "action {i}").expect("string write");
        for r in 0..v.dim() {
            let row: Vec<String> = m.row(r).iter().map(|&x| f.format(x)).collect();
            writeln!(out, "{}", row.join(" ")).expect("string write");
        }
    }
    out.push_str("end\n");
    out
}

/// Parses a `twist v1` document, returning `J` and the inverse if given.
pub fn parse_twist(text: &str, h: &HopfAlgebra) -> Result<(Tensor, Option<Tensor>)> {
    let f = h.field();
    let mut lines = Lines::new(text);
    lines.header("twist")?;
    check_hash(&mut lines, h)?;
    let mut coeffs: Option<Tensor> = None;
    let mut inverse: Option<Tensor> = None;
    while let Some((line, toks)) = lines.peek().cloned() {
        if toks == ["end"] {
            break;
        }
        lines.next();
        let slot = match toks.as_slice() {
            ["coeffs:"] => &mut coeffs,
            ["inverse:"] => &mut inverse,
            _ => return Err(Error::parse(line, format!("unknown section `{}`", toks.join(" ")))),
        };
        let mut t = Tensor::zero(h.dim(), 2);
        for (l, row) in lines.section_rows() {
            let (idx, c) = parse_row(f, &row, l, 2, h.dim())?;
            t.add_term(f, idx, c);
        }
        if slot.replace(t).is_some() {
            return Err(Error::parse(line, format!("duplicate section `{}`", toks[0])));
        }
    }
    lines.finish()?;
    let j = coeffs.ok_or_else(|| Error::parse(1, "missing section `coeffs:`"))?;
    Ok((j, inverse))
}

pub fn serialize_twist(h: &HopfAlgebra, j: &Tensor, j_inv: Option<&Tensor>) -> String {
    let f = h.field();
    let mut out = String::from("twist v1\n");
    writeln!(out, "algebra {}", algebra_hash(h)).expect("string write");
    let sections = [("coeffs", Some(j)), ("inverse", j_inv)];
    for (name, t) in sections.iter().filter_map(|(n, t)| t.map(|t| (n, t))) {
        writeln!(out, "{name}:").expect("string write");
        for (idx, c) in t.iter() {
            writeln!(out, "{} {} {}", idx[0], idx[1], f.format(c)).expect("string write");
        }
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{drinfeld_double, group_algebra, GroupTable};

    fn s3() -> HopfAlgebra {
        group_algebra(&GroupTable::symmetric3(), &Field::prime(7).unwrap()).unwrap()
    }

    #[test]
    fn hopf_round_trip() {
        for h in [
            s3(),
            drinfeld_double(&GroupTable::cyclic(2), &Field::prime(5).unwrap()).unwrap(),
            group_algebra(&GroupTable::quaternion(), &Field::new(5, 2, Modulus::Auto).unwrap()).unwrap(),
        ] {
            let text = serialize_hopf(&h);
            let back = load_hopf(&text, true).unwrap();
            assert_eq!(back, h);
            assert_eq!(serialize_hopf(&back), text);
        }
    }

    #[test]
    fn antipode_section_is_optional() {
        let h = s3();
        let text = serialize_hopf(&h);
        let cut = text.find("antipode:").unwrap();
        let without = format!("{}end\n", &text[..cut]);
        assert_eq!(parse_hopf(&without).unwrap(), h);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = "hopf v1\nfield 7 1 auto\ndim 2\nmult:\n0 0 0\nend\n";
        assert!(matches!(parse_hopf(bad), Err(Error::Parse { line: 5, .. })));
        let bad = "hopf v1\nfield 6 1 auto\n";
        assert!(matches!(parse_hopf(bad), Err(Error::Parse { line: 2, .. })));
        let bad = "hopf v2\n";
        assert!(matches!(parse_hopf(bad), Err(Error::Parse { line: 1, .. })));
        let bad = "hopf v1\nfield 7 1 auto\ndim 1\nmult:\n0 0 3 [1]\n";
        assert!(matches!(parse_hopf(bad), Err(Error::Parse { line: 5, .. })));
    }

    #[test]
    fn elements_accept_lists_and_integers() {
        let f = Field::new(5, 2, Modulus::Auto).unwrap();
        assert_eq!(parse_element(&f, "[1,2]", 1).unwrap(), f.from_coeffs(&[1, 2]).unwrap());
        assert_eq!(parse_element(&f, "3", 1).unwrap(), f.from_int(3));
        assert!(parse_element(&f, "[1,2,3]", 4).is_err());
        assert!(parse_element(&f, "[7]", 4).is_err());
    }

    #[test]
    fn module_round_trip_and_shape_errors() {
        let h = s3();
        let v = ModuleRep::regular(&h);
        let text = serialize_module(&v, &h);
        assert_eq!(parse_module(&text, &h, true).unwrap(), v);
        let bad = text.replacen("[1] [0] [0] [0] [0] [0]", "[1] [0]", 1);
        assert!(matches!(parse_module(&bad, &h, true), Err(Error::Parse { .. })));
        let other = group_algebra(&GroupTable::cyclic(6), h.field()).unwrap();
        assert!(matches!(parse_module(&text, &other, true), Err(Error::Validation(_))));
    }

    #[test]
    fn twist_round_trip() {
        let h = s3();
        let f = h.field();
        let mut j = h.unit_tensor(2);
        j.add_term(f, vec![1, 2], f.from_int(3));
        let text = serialize_twist(&h, &j, None);
        assert_eq!(parse_twist(&text, &h).unwrap(), (j.clone(), None));
        let text = serialize_twist(&h, &j, Some(&j));
        assert_eq!(parse_twist(&text, &h).unwrap(), (j.clone(), Some(j)));
    }
}
