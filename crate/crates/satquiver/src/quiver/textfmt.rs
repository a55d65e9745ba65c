//! Plain-text serialization of quivers with relations (and optional
//! symmetric structure), plus the representation file format consumed by
//! the `ext` subcommand.
//!
//! Quiver format, one declaration per line ('#' starts a comment):
//!   vertex NAME
//!   arrow NAME TAIL HEAD
//!   tau A B            (vertex or arrow pair; fixed points are implied)
//!   sign NAME 1|-1     (τ-fixed vertices and arrows)
//!   relation c1*p1 + c2*p2 ...
//! Paths are dot-separated arrow names in function-composition order:
//! "b.a" means first a, then b.
//!
//! Representation format:
//!   field 32003 | field rational
//!   dim VERTEX N       (unlisted vertices are zero)
//!   map ARROW e11 e12 ... (row-major, dim(head) × dim(tail); rationals as
//!                          p or p/q; unlisted arrows are zero)

use super::{Path, Quiver, RelationSet, Representation, SymmetricQuiver};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix, Rat};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;

fn render_path(q: &Quiver, p: &Path) -> String {
    p.0.iter()
        .rev()
        .map(|&a| q.arrow(a).name.clone())
        .collect::<Vec<_>>()
        .join(".")
}

fn parse_path(q: &Quiver, s: &str) -> Result<Path> {
    let mut arrows = vec![];
    for name in s.split('.') {
        arrows.push(q.arrow_id(name.trim())?);
    }
    arrows.reverse();
    Ok(Path(arrows))
}

/// Render a quiver (with relations and optional symmetric structure) in the
/// canonical line format. Parsing the output reproduces the input exactly.
pub fn render_quiver_file(
    q: &Quiver,
    rels: &RelationSet,
    sym: Option<&SymmetricQuiver>,
) -> String {
    let mut out = String::new();
    for v in 0..q.vertex_count() {
        out.push_str(&format!("vertex {}\n", q.vertex_name(v)));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.name,
            q.vertex_name(a.tail),
            q.vertex_name(a.head)
        ));
    }
    if let Some(sq) = sym {
        for v in 0..q.vertex_count() {
            let t = sq.tau_v(v);
            if t > v {
                out.push_str(&format!(
                    "tau {} {}\n",
                    q.vertex_name(v),
                    q.vertex_name(t)
                ));
            }
        }
        for a in 0..q.arrow_count() {
            let t = sq.tau_a(a);
            if t > a {
                out.push_str(&format!(
                    "tau {} {}\n",
                    q.arrow(a).name,
                    q.arrow(t).name
                ));
            }
        }
        let mut signed_v: Vec<_> = sq.vertex_signs().iter().collect();
        signed_v.sort();
        for (&v, &s) in signed_v {
            out.push_str(&format!("sign {} {}\n", q.vertex_name(v), s));
        }
        let mut signed_a: Vec<_> = sq.arrow_signs().iter().collect();
        signed_a.sort();
        for (&a, &s) in signed_a {
            out.push_str(&format!("sign {} {}\n", q.arrow(a).name, s));
        }
    }
    for r in rels.iter() {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|(c, p)| format!("{c}*{}", render_path(q, p)))
            .collect();
        out.push_str(&format!("relation {}\n", terms.join(" + ")));
    }
    out
}

/// Parse the quiver text format. Returns the quiver, its relations, and the
/// symmetric structure when tau/sign lines are present.
pub fn parse_quiver_file(text: &str) -> Result<(Quiver, RelationSet, Option<SymmetricQuiver>)> {
    let mut q = Quiver::empty();
    struct Pending {
        tau_pairs: Vec<(String, String)>,
        signs: Vec<(String, i8)>,
        relations: Vec<String>,
    }
    let mut pending = Pending {
        tau_pairs: vec![],
        signs: vec![],
        relations: vec![],
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let kw = it.next().unwrap();
        let rest: Vec<&str> = it.collect();
        let bad = |msg: &str| Error::parse(format!("line {}: {msg}", lineno + 1));
        match kw {
            "vertex" => {
                let [name] = rest[..] else {
                    return Err(bad("vertex NAME"));
                };
                q.add_vertex(name)?;
            }
            "arrow" => {
                let [name, tail, head] = rest[..] else {
                    return Err(bad("arrow NAME TAIL HEAD"));
                };
                q.add_arrow(name, tail, head)?;
            }
            "tau" => {
                let [a, b] = rest[..] else {
                    return Err(bad("tau A B"));
                };
                pending.tau_pairs.push((a.to_string(), b.to_string()));
            }
            "sign" => {
                let [name, s] = rest[..] else {
                    return Err(bad("sign NAME 1|-1"));
                };
                let sv: i8 = s.parse().map_err(|_| bad("sign must be 1 or -1"))?;
                if sv != 1 && sv != -1 {
                    return Err(bad("sign must be 1 or -1"));
                }
                pending.signs.push((name.to_string(), sv));
            }
            "relation" => {
                pending.relations.push(rest.join(" "));
            }
            other => return Err(bad(&format!("unknown keyword '{other}'"))),
        }
    }
    q.check_acyclic()?;

    let mut term_lists = vec![];
    for spec in &pending.relations {
        let mut terms = vec![];
        for chunk in spec.split('+') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (coeff, path) = match chunk.split_once('*') {
                Some((c, p)) => (
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::parse(format!("bad coefficient in '{chunk}'")))?,
                    p.trim(),
                ),
                None => (1, chunk),
            };
            terms.push((coeff, parse_path(&q, path)?));
        }
        term_lists.push(terms);
    }
    let rels = RelationSet::new(&q, term_lists)?;

    let symmetric = if pending.tau_pairs.is_empty() && pending.signs.is_empty() {
        None
    } else {
        let mut tau_v: Vec<usize> = (0..q.vertex_count()).collect();
        let mut tau_a: Vec<usize> = (0..q.arrow_count()).collect();
        for (a, b) in &pending.tau_pairs {
            if let (Ok(x), Ok(y)) = (q.vertex_id(a), q.vertex_id(b)) {
                tau_v[x] = y;
                tau_v[y] = x;
            } else if let (Ok(x), Ok(y)) = (q.arrow_id(a), q.arrow_id(b)) {
                tau_a[x] = y;
                tau_a[y] = x;
            } else {
                return Err(Error::parse(format!(
                    "tau pair '{a} {b}' names neither two vertices nor two arrows"
                )));
            }
        }
        let mut sign_v = HashMap::new();
        let mut sign_a = HashMap::new();
        for (name, s) in &pending.signs {
            if let Ok(v) = q.vertex_id(name) {
                sign_v.insert(v, *s);
            } else if let Ok(a) = q.arrow_id(name) {
                sign_a.insert(a, *s);
            } else {
                return Err(Error::parse(format!("sign names unknown '{name}'")));
            }
        }
        Some(SymmetricQuiver::new(q.clone(), tau_v, tau_a, sign_v, sign_a)?)
    };
    Ok((q, rels, symmetric))
}

/// A representation parsed from a file, over whichever field it declared.
pub enum ParsedRep {
    Prime { p: u64, rep: Representation<Fp> },
    Rational(Representation<Rat>),
}

pub fn parse_representation_file(q: &Quiver, text: &str) -> Result<ParsedRep> {
    enum FieldKind {
        Prime(u64),
        Rational,
    }
    let mut field: Option<FieldKind> = None;
    let mut dims = vec![0usize; q.vertex_count()];
    let mut raw_maps: Vec<(usize, Vec<String>)> = vec![];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let kw = it.next().unwrap();
        let rest: Vec<&str> = it.collect();
        let bad = |msg: &str| Error::parse(format!("line {}: {msg}", lineno + 1));
        match kw {
            "field" => {
                let [spec] = rest[..] else {
                    return Err(bad("field P | field rational"));
                };
                field = Some(if spec == "rational" {
                    FieldKind::Rational
                } else {
                    let p: u64 = spec.parse().map_err(|_| bad("bad prime"))?;
                    if p < 3 {
                        return Err(bad("prime must be odd"));
                    }
                    FieldKind::Prime(p)
                });
            }
            "dim" => {
                let [name, d] = rest[..] else {
                    return Err(bad("dim VERTEX N"));
                };
                dims[q.vertex_id(name)?] = d.parse().map_err(|_| bad("bad dimension"))?;
            }
            "map" => {
                if rest.is_empty() {
                    return Err(bad("map ARROW entries..."));
                }
                let a = q.arrow_id(rest[0])?;
                raw_maps.push((a, rest[1..].iter().map(|s| s.to_string()).collect()));
            }
            other => return Err(bad(&format!("unknown keyword '{other}'"))),
        }
    }
    let field = field.ok_or_else(|| Error::parse("missing 'field' line"))?;

    fn fill<F: crate::linalg::Field>(
        q: &Quiver,
        dims: &[usize],
        raw_maps: &[(usize, Vec<String>)],
        zero: F,
        parse: impl Fn(&str) -> Result<F>,
    ) -> Result<Representation<F>> {
        let mut rep = Representation::zero_rep(q, dims.to_vec(), zero.clone());
        for (aid, entries) in raw_maps {
            let arrow = q.arrow(*aid);
            let (rows, cols) = (dims[arrow.head], dims[arrow.tail]);
            if entries.len() != rows * cols {
                return Err(Error::parse(format!(
                    "map {} needs {}x{} = {} entries, got {}",
                    arrow.name,
                    rows,
                    cols,
                    rows * cols,
                    entries.len()
                )));
            }
            let mut m = Matrix::zeros(rows, cols, zero.clone());
            for i in 0..rows {
                for j in 0..cols {
                    m[(i, j)] = parse(&entries[i * cols + j])?;
                }
            }
            rep.set_matrix(*aid, m);
        }
        Ok(rep)
    }

    match field {
        FieldKind::Prime(p) => {
            let rep = fill(q, &dims, &raw_maps, Fp::new(0, p), |s| {
                s.parse::<i64>()
                    .map(|v| Fp::new(v, p))
                    .map_err(|_| Error::parse(format!("bad entry '{s}'")))
            })?;
            Ok(ParsedRep::Prime { p, rep })
        }
        FieldKind::Rational => {
            let rep = fill(q, &dims, &raw_maps, Rat::from_int(0), |s| {
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let n: i64 = num
                    .parse()
                    .map_err(|_| Error::parse(format!("bad entry '{s}'")))?;
                let d: i64 = den
                    .parse()
                    .map_err(|_| Error::parse(format!("bad entry '{s}'")))?;
                if d == 0 {
                    return Err(Error::parse("zero denominator"));
                }
                Ok(Rat(BigRational::new(BigInt::from(n), BigInt::from(d))))
            })?;
            Ok(ParsedRep::Rational(rep))
        }
    }
}
