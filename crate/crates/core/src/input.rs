//! The JSON input format and module specifications.
//!
//! ```json
//! {"kind": "kupisch", "char": 2, "series": [2, 2, 1], "cyclic": false}
//! {"kind": "monomial", "char": 2, "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}], "relations": []}
//! {"kind": "table", "char": 2, "basis": ["1", "x", "xx"], "unit": "1", "local": true,
//!  "products": [["x", "x", "xx"]]}
//! {"kind": "group", "char": 2, "elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]}
//! ```
//!
//! Vertex and element indices are 1-based. Every document may carry
//! `"modules": {"name": spec}` with specs `"regular"`, `"dual_regular"`,
//! `{"simple": i}`, `{"projective": i}`, `{"injective": i}`, `{"interval": [i, l]}`,
//! `{"matrices": [...]}` (one action matrix per basis element, as rows) or `{"sum": [...]}`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde_json::{Map, Value};

use crate::catalog::GroupTable;
use crate::exactmat::{Matrix, PrimeField};
use crate::finalg::algebra::AlgebraParts;
use crate::finalg::{FiniteAlgebra, MonomialPresentation, QuiverArrow, RightModule};
use crate::nakayama::{Interval, KupischSeries, SeriesKind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Kupisch,
    Monomial,
    Table,
    Group,
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Kupisch => "kupisch",
            InputKind::Monomial => "monomial",
            InputKind::Table => "table",
            InputKind::Group => "group",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Regular,
    DualRegular,
    Simple(usize),
    Projective(usize),
    Injective(usize),
    Interval(Interval),
    Matrices(Vec<Vec<Vec<i64>>>),
    Sum(Vec<ModuleSpec>),
    Named(String),
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Regular => write!(f, "A"),
            ModuleSpec::DualRegular => write!(f, "D(A)"),
            ModuleSpec::Simple(i) => write!(f, "S{i}"),
            ModuleSpec::Projective(i) => write!(f, "P{i}"),
            ModuleSpec::Injective(i) => write!(f, "I{i}"),
            ModuleSpec::Interval(m) => write!(f, "{m}"),
            ModuleSpec::Matrices(_) => write!(f, "<matrices>"),
            ModuleSpec::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", s.join("+"))
            }
            ModuleSpec::Named(n) => write!(f, "{n}"),
        }
    }
}

/// A parsed and validated input document.
#[derive(Clone, Debug)]
pub struct InputDocument {
    pub kind: InputKind,
    pub field: PrimeField,
    pub series: Option<KupischSeries>,
    pub algebra: FiniteAlgebra,
    pub modules: BTreeMap<String, ModuleSpec>,
}

fn err(path: &str, msg: impl fmt::Display) -> Error {
    Error::Input(format!("at {path}: {msg}"))
}

fn wrap<T>(path: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| err(path, e))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| err(path, "expected a string"))
}

fn index_1based(v: &Value, max: usize, path: &str) -> Result<usize> {
    let i = as_usize(v, path)?;
    if i == 0 || i > max {
        return Err(err(path, Error::IndexOutOfRange { index: i, max }));
    }
    Ok(i - 1)
}

impl InputDocument {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
            Error::Input(format!("line {}, column {}: {msg}", e.line(), e.column()))
        })?;
        let obj = root
            .as_object()
            .ok_or_else(|| err("$", "expected an object"))?;
        let kind = match as_str(get(obj, "kind", "$")?, "$.kind")? {
            "kupisch" => InputKind::Kupisch,
            "monomial" => InputKind::Monomial,
            "table" => InputKind::Table,
            "group" => InputKind::Group,
            other => return Err(err("$.kind", format!("unknown kind \"{other}\""))),
        };
        let p = as_usize(get(obj, "char", "$")?, "$.char")?;
        let field = wrap("$.char", PrimeField::new(p as u32))?;
        let mut series = None;
        let algebra = match kind {
            InputKind::Kupisch => {
                let s = parse_series(obj)?;
                let a = s.realize(field);
                series = Some(s);
                a
            }
            InputKind::Monomial => {
                let pres = parse_monomial(obj)?;
                wrap("$", FiniteAlgebra::from_monomial(&pres, field))?
            }
            InputKind::Table => parse_table(obj, field)?,
            InputKind::Group => wrap("$", parse_group(obj)?.algebra(field))?,
        };
        let mut modules = BTreeMap::new();
        if let Some(m) = obj.get("modules") {
            let mo = m
                .as_object()
                .ok_or_else(|| err("$.modules", "expected an object"))?;
            for (name, spec) in mo {
                let path = format!("$.modules.{name}");
                modules.insert(name.clone(), parse_spec_value(spec, &path)?);
            }
        }
        let doc = InputDocument {
            kind,
            field,
            series,
            algebra,
            modules,
        };
        for (name, spec) in &doc.modules {
            wrap(&format!("$.modules.{name}"), doc.module(spec))?;
        }
        Ok(doc)
    }

    /// Builds the module a spec describes.
    pub fn module(&self, spec: &ModuleSpec) -> Result<RightModule> {
        self.module_depth(spec, 0)
    }

    fn module_depth(&self, spec: &ModuleSpec, depth: usize) -> Result<RightModule> {
        let a = &self.algebra;
        let n = a.simple_count();
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::IndexOutOfRange { index: i, max: n })
            } else {
                Ok(i - 1)
            }
        };
        match spec {
            ModuleSpec::Regular => Ok(a.regular()),
            ModuleSpec::DualRegular => Ok(a.dual_regular()),
            ModuleSpec::Simple(i) => a.simple(check(*i)?),
            ModuleSpec::Projective(i) => a.projective(check(*i)?),
            ModuleSpec::Injective(i) => a.injective(check(*i)?),
            ModuleSpec::Interval(m) => {
                let s = self
                    .series
                    .as_ref()
                    .ok_or_else(|| Error::Input("intervals need a kupisch document".into()))?;
                s.check_interval(*m)?;
                Ok(s.realize_module(a, *m))
            }
            ModuleSpec::Matrices(rows) => {
                let mats = rows
                    .iter()
                    .map(|r| Matrix::from_rows(self.field, r))
                    .collect();
                RightModule::new(a.clone(), mats)
            }
            ModuleSpec::Sum(parts) => {
                let ms = parts
                    .iter()
                    .map(|p| self.module_depth(p, depth + 1))
                    .collect::<Result<Vec<_>>>()?;
                Ok(RightModule::direct_sum(a, &ms))
            }
            ModuleSpec::Named(name) => {
                if depth > 16 {
                    return Err(Error::Input(format!("module '{name}' refers to itself")));
                }
                let s = self
                    .modules
                    .get(name)
                    .ok_or_else(|| Error::Input(format!("unknown module '{name}'")))?;
                self.module_depth(s, depth + 1)
            }
        }
    }

    /// A command-line module token: `regular`, `dual_regular`, `simple`, `simple:i`,
    /// `proj:i`, `inj:i`, `M(i,l)`, `interval:i:l` or a name from `"modules"`;
    /// summands joined with `+`.
    pub fn parse_token(&self, token: &str) -> Result<ModuleSpec> {
        let parts = split_top(token.trim());
        if parts.len() > 1 {
            return Ok(ModuleSpec::Sum(
                parts
                    .iter()
                    .map(|p| self.parse_token(p))
                    .collect::<Result<_>>()?,
            ));
        }
        let t = token.trim();
        let bad = || Error::Input(format!("cannot parse module '{t}'"));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        if self.modules.contains_key(t) {
            return Ok(ModuleSpec::Named(t.to_string()));
        }
        if let Some(inner) = t.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
            let (i, l) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(ModuleSpec::Interval(
                interval_1based(num(i)?, num(l)?).ok_or_else(bad)?,
            ));
        }
        let (head, arg) = match t.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (t, None),
        };
        let spec = match (head, arg) {
            ("regular" | "A", None) => ModuleSpec::Regular,
            ("dual_regular" | "DA", None) => ModuleSpec::DualRegular,
            ("simple", None) => ModuleSpec::Simple(1),
            ("simple" | "S", Some(i)) => ModuleSpec::Simple(num(i)?),
            ("proj" | "projective" | "P", Some(i)) => ModuleSpec::Projective(num(i)?),
            ("inj" | "injective" | "I", Some(i)) => ModuleSpec::Injective(num(i)?),
            ("interval", Some(rest)) => {
                let (i, l) = rest.split_once(':').ok_or_else(bad)?;
                ModuleSpec::Interval(interval_1based(num(i)?, num(l)?).ok_or_else(bad)?)
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }

    /// Comma-separated summand list, as in `regular,simple:1`.
    pub fn parse_list(&self, list: &str) -> Result<Vec<ModuleSpec>> {
        split_commas(list)
            .iter()
            .map(|t| self.parse_token(t))
            .collect()
    }
}

fn interval_1based(top: usize, len: usize) -> Option<Interval> {
    (top >= 1 && len >= 1).then(|| Interval::new(top - 1, len))
}

fn split_at_depth0(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out.into_iter()
        .map(|x| x.trim().to_string())
        .filter(|x| !x.is_empty())
        .collect()
}

fn split_top(s: &str) -> Vec<String> {
    split_at_depth0(s, '+')
}

fn split_commas(s: &str) -> Vec<String> {
    split_at_depth0(s, ',')
}

fn parse_spec_value(v: &Value, path: &str) -> Result<ModuleSpec> {
    if let Some(s) = v.as_str() {
        return match s {
            "regular" => Ok(ModuleSpec::Regular),
            "dual_regular" => Ok(ModuleSpec::DualRegular),
            other => Ok(ModuleSpec::Named(other.to_string())),
        };
    }
    let o = v
        .as_object()
        .ok_or_else(|| err(path, "expected a string or an object"))?;
    if o.len() != 1 {
        return Err(err(path, "a module spec has exactly one key"));
    }
    let (k, val) = o.iter().next().expect("one entry");
    let sub = format!("{path}.{k}");
    let idx = |x: &Value| {
        let i = as_usize(x, &sub)?;
        if i == 0 {
            Err(err(&sub, "indices are 1-based"))
        } else {
            Ok(i)
        }
    };
    match k.as_str() {
        "simple" => Ok(ModuleSpec::Simple(idx(val)?)),
        "projective" => Ok(ModuleSpec::Projective(idx(val)?)),
        "injective" => Ok(ModuleSpec::Injective(idx(val)?)),
        "interval" => {
            let a = as_array(val, &sub)?;
            if a.len() != 2 {
                return Err(err(&sub, "expected [top, length]"));
            }
            interval_1based(idx(&a[0])?, idx(&a[1])?)
                .map(ModuleSpec::Interval)
                .ok_or_else(|| err(&sub, "bad interval"))
        }
        "sum" => {
            let a = as_array(val, &sub)?;
            a.iter()
                .enumerate()
                .map(|(i, x)| parse_spec_value(x, &format!("{sub}[{i}]")))
                .collect::<Result<_>>()
                .map(ModuleSpec::Sum)
        }
        "matrices" => {
            let mats = as_array(val, &sub)?;
            let mut out = Vec::new();
            for (i, m) in mats.iter().enumerate() {
                let mp = format!("{sub}[{i}]");
                let rows = as_array(m, &mp)?;
                let mut mr = Vec::new();
                for (r, row) in rows.iter().enumerate() {
                    let rp = format!("{mp}[{r}]");
                    let entries = as_array(row, &rp)?;
                    let vals = entries
                        .iter()
                        .enumerate()
                        .map(|(c, x)| {
                            x.as_i64()
                                .ok_or_else(|| err(&format!("{rp}[{c}]"), "expected an integer"))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    mr.push(vals);
                }
                let w = mr.first().map_or(0, Vec::len);
                if mr.iter().any(|r| r.len() != w) {
                    return Err(err(&mp, "rows of different lengths"));
                }
                out.push(mr);
            }
            Ok(ModuleSpec::Matrices(out))
        }
        other => Err(err(&sub, format!("unknown module spec \"{other}\""))),
    }
}

fn parse_series(obj: &Map<String, Value>) -> Result<KupischSeries> {
    let arr = as_array(get(obj, "series", "$")?, "$.series")?;
    let entries = arr
        .iter()
        .enumerate()
        .map(|(i, v)| as_usize(v, &format!("$.series[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let cyclic = match obj.get("cyclic") {
        None => false,
        Some(v) => v
            .as_bool()
            .ok_or_else(|| err("$.cyclic", "expected a boolean"))?,
    };
    let kind = if cyclic {
        SeriesKind::Cyclic
    } else {
        SeriesKind::Linear
    };
    KupischSeries::new(kind, entries).map_err(|e| match e {
        Error::ViolatedKupischCondition { index } => err(&format!("$.series[{}]", index - 1), e),
        other => err("$.series", other),
    })
}

fn parse_monomial(obj: &Map<String, Value>) -> Result<MonomialPresentation> {
    let vertices = as_usize(get(obj, "vertices", "$")?, "$.vertices")?;
    let arrows_v = as_array(get(obj, "arrows", "$")?, "$.arrows")?;
    let mut arrows = Vec::new();
    for (i, a) in arrows_v.iter().enumerate() {
        let path = format!("$.arrows[{i}]");
        let o = a
            .as_object()
            .ok_or_else(|| err(&path, "expected an object"))?;
        let name = as_str(get(o, "name", &path)?, &format!("{path}.name"))?.to_string();
        if arrows.iter().any(|x: &QuiverArrow| x.name == name) {
            return Err(err(
                &format!("{path}.name"),
                format!("duplicate arrow \"{name}\""),
            ));
        }
        let source = index_1based(get(o, "from", &path)?, vertices, &format!("{path}.from"))?;
        let target = index_1based(get(o, "to", &path)?, vertices, &format!("{path}.to"))?;
        arrows.push(QuiverArrow {
            name,
            source,
            target,
        });
    }
    let mut relations = Vec::new();
    if let Some(r) = obj.get("relations") {
        for (i, rel) in as_array(r, "$.relations")?.iter().enumerate() {
            let path = format!("$.relations[{i}]");
            let names = as_array(rel, &path)?
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    let p = format!("{path}[{j}]");
                    let s = as_str(x, &p)?;
                    if !arrows.iter().any(|a| a.name == s) {
                        return Err(err(&p, format!("unknown arrow \"{s}\"")));
                    }
                    Ok(s.to_string())
                })
                .collect::<Result<Vec<_>>>()?;
            relations.push(names);
        }
    }
    Ok(MonomialPresentation {
        vertices,
        arrows,
        relations,
    })
}

fn parse_group(obj: &Map<String, Value>) -> Result<GroupTable> {
    let elements = as_array(get(obj, "elements", "$")?, "$.elements")?
        .iter()
        .enumerate()
        .map(|(i, v)| as_str(v, &format!("$.elements[{i}]")).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    let rows = as_array(get(obj, "table", "$")?, "$.table")?;
    let mut table = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let path = format!("$.table[{i}]");
        let r = as_array(row, &path)?
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let p = format!("{path}[{j}]");
                let s = as_str(x, &p)?;
                elements
                    .iter()
                    .position(|e| e == s)
                    .ok_or_else(|| err(&p, format!("unknown element \"{s}\"")))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(r);
    }
    Ok(GroupTable { elements, table })
}

/// An element given as a basis name, `"0"`, or `{name: coefficient}`.
fn parse_element(v: &Value, names: &[String], f: PrimeField, path: &str) -> Result<Vec<u32>> {
    let mut out = vec![0; names.len()];
    let pos = |s: &str| {
        names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| err(path, format!("unknown basis element \"{s}\"")))
    };
    match v {
        Value::String(s) if s == "0" => {}
        Value::String(s) => out[pos(s)?] = 1,
        Value::Object(o) => {
            for (k, c) in o {
                let c = c.as_i64().ok_or_else(|| {
                    err(&format!("{path}.{k}"), "expected an integer coefficient")
                })?;
                let i = pos(k)?;
                out[i] = f.add(out[i], f.reduce(c));
            }
        }
        _ => return Err(err(path, "expected a basis name or a coefficient object")),
    }
    Ok(out)
}

fn parse_table(obj: &Map<String, Value>, f: PrimeField) -> Result<FiniteAlgebra> {
    let names = as_array(get(obj, "basis", "$")?, "$.basis")?
        .iter()
        .enumerate()
        .map(|(i, v)| as_str(v, &format!("$.basis[{i}]")).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    let d = names.len();
    if d == 0 {
        return Err(err("$.basis", "empty basis"));
    }
    for (i, n) in names.iter().enumerate() {
        if n == "0" || names[..i].contains(n) {
            return Err(err(
                &format!("$.basis[{i}]"),
                format!("invalid or duplicate name \"{n}\""),
            ));
        }
    }
    let unit = match obj.get("unit") {
        Some(u) => parse_element(u, &names, f, "$.unit")?,
        None => parse_element(&Value::String(names[0].clone()), &names, f, "$.unit")?,
    };
    let mut mult: Vec<Option<Vec<(usize, u32)>>> = vec![None; d * d];
    let sparse = |v: &[u32]| {
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect::<Vec<_>>()
    };
    for (k, e) in as_array(get(obj, "products", "$")?, "$.products")?
        .iter()
        .enumerate()
    {
        let path = format!("$.products[{k}]");
        let t = as_array(e, &path)?;
        if t.len() != 3 {
            return Err(err(&path, "expected [x, y, x·y]"));
        }
        let x = as_str(&t[0], &format!("{path}[0]"))?;
        let y = as_str(&t[1], &format!("{path}[1]"))?;
        let i = names.iter().position(|n| n == x).ok_or_else(|| {
            err(
                &format!("{path}[0]"),
                format!("unknown basis element \"{x}\""),
            )
        })?;
        let j = names.iter().position(|n| n == y).ok_or_else(|| {
            err(
                &format!("{path}[1]"),
                format!("unknown basis element \"{y}\""),
            )
        })?;
        if mult[i * d + j].is_some() {
            return Err(err(&path, format!("product {x}·{y} given twice")));
        }
        mult[i * d + j] = Some(sparse(&parse_element(
            &t[2],
            &names,
            f,
            &format!("{path}[2]"),
        )?));
    }
    // a basis element equal to the unit multiplies trivially unless stated otherwise
    if let Some(u) = (0..d).find(|&i| {
        unit.iter()
            .enumerate()
            .all(|(k, &c)| c == u32::from(k == i))
    }) {
        for i in 0..d {
            mult[u * d + i].get_or_insert_with(|| vec![(i, 1)]);
            mult[i * d + u].get_or_insert_with(|| vec![(i, 1)]);
        }
    }
    let mult: Vec<Vec<(usize, u32)>> = mult.into_iter().map(Option::unwrap_or_default).collect();
    let local = match obj.get("local") {
        None => false,
        Some(v) => v
            .as_bool()
            .ok_or_else(|| err("$.local", "expected a boolean"))?,
    };
    let list = |key: &str| -> Result<Option<Vec<Vec<u32>>>> {
        match obj.get(key) {
            None => Ok(None),
            Some(v) => as_array(v, &format!("$.{key}"))?
                .iter()
                .enumerate()
                .map(|(i, e)| parse_element(e, &names, f, &format!("$.{key}[{i}]")))
                .collect::<Result<Vec<_>>>()
                .map(Some),
        }
    };
    let (idempotents, radical) = if local {
        if obj.contains_key("idempotents") || obj.contains_key("radical") {
            return Err(err(
                "$.local",
                "a local table takes no idempotents or radical",
            ));
        }
        let u = (0..d)
            .find(|&i| {
                unit.iter()
                    .enumerate()
                    .all(|(k, &c)| c == u32::from(k == i))
            })
            .ok_or_else(|| {
                err(
                    "$.unit",
                    "a local table needs the unit to be a basis element",
                )
            })?;
        let rad = (0..d)
            .filter(|&i| i != u)
            .map(|i| {
                let mut v = vec![0; d];
                v[i] = 1;
                v
            })
            .collect();
        (vec![unit.clone()], rad)
    } else {
        let idem = list("idempotents")?.ok_or_else(|| {
            err(
                "$",
                "missing field \"idempotents\" (or set \"local\": true)",
            )
        })?;
        let rad = list("radical")?.ok_or_else(|| err("$", "missing field \"radical\""))?;
        (idem, rad)
    };
    wrap(
        "$",
        FiniteAlgebra::from_structure(AlgebraParts {
            field: f,
            names,
            mult,
            unit,
            idempotents,
            radical,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kupisch_document() {
        let doc = InputDocument::parse(
            r#"{"kind":"kupisch","char":2,"series":[2,2,1],"modules":{"x":{"interval":[1,2]}}}"#,
        )
        .unwrap();
        assert_eq!(doc.kind, InputKind::Kupisch);
        assert_eq!(doc.algebra.dim(), 5);
        assert_eq!(doc.module(&ModuleSpec::Named("x".into())).unwrap().dim(), 2);
        let t = doc.parse_token("M(2,1)+simple:3").unwrap();
        assert_eq!(doc.module(&t).unwrap().dim(), 2);
        assert_eq!(doc.parse_list("regular,M(1,2),x").unwrap().len(), 3);
    }

    #[test]
    fn errors_carry_positions() {
        let e =
            InputDocument::parse(r#"{"kind":"kupisch","char":2,"series":[2,4,1]}"#).unwrap_err();
        assert!(e.to_string().contains("$.series[2]"), "{e}");
        let e = InputDocument::parse(r#"{"kind":"kupisch","char":4,"series":[2,1]}"#).unwrap_err();
        assert!(e.to_string().contains("$.char"), "{e}");
        let e = InputDocument::parse("{\"kind\":\n\"table\",}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = InputDocument::parse(r#"{"kind":"table","char":2,"basis":["1","x"],"local":true,"products":[["x","y","x"]]}"#)
            .unwrap_err();
        assert!(e.to_string().contains("$.products[0][1]"), "{e}");
    }

    #[test]
    fn table_document_truncated_cubic() {
        let doc = InputDocument::parse(
            r#"{"kind":"table","char":2,"basis":["1","x","xx"],"local":true,"products":[["x","x","xx"]]}"#,
        )
        .unwrap();
        assert_eq!(doc.algebra.radical_basis().len(), 2);
        assert!(doc.algebra.is_local());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // x·x = y and x·y = 0 but y·x = x breaks associativity
        let e = InputDocument::parse(
            r#"{"kind":"table","char":2,"basis":["1","x","y"],"local":true,
                "products":[["x","x","y"],["y","x","x"]]}"#,
        )
        .unwrap_err();
        assert!(
            e.to_string().contains("associativity") || e.to_string().contains("nilpotent"),
            "{e}"
        );
    }

    #[test]
    fn group_and_monomial_documents() {
        let doc = InputDocument::parse(
            r#"{"kind":"group","char":2,"elements":["e","g"],"table":[["e","g"],["g","e"]]}"#,
        )
        .unwrap();
        assert_eq!(doc.algebra.dim(), 2);
        let doc = InputDocument::parse(
            r#"{"kind":"monomial","char":3,"vertices":2,"arrows":[{"name":"a","from":1,"to":2}]}"#,
        )
        .unwrap();
        assert_eq!(doc.algebra.dim(), 3);
        let e = InputDocument::parse(
            r#"{"kind":"monomial","char":3,"vertices":2,"arrows":[{"name":"a","from":1,"to":3}]}"#,
        )
        .unwrap_err();
        assert!(e.to_string().contains("$.arrows[0].to"), "{e}");
    }

    #[test]
    fn matrices_spec_checks_axioms() {
        let doc = InputDocument::parse(
            r#"{"kind":"table","char":2,"basis":["1","x"],"local":true,"products":[["x","x","0"]],
                "modules":{"s":{"matrices":[[[1]],[[0]]]}}}"#,
        )
        .unwrap();
        assert_eq!(doc.module(&ModuleSpec::Named("s".into())).unwrap().dim(), 1);
        let e = InputDocument::parse(
            r#"{"kind":"table","char":2,"basis":["1","x"],"local":true,"products":[["x","x","0"]],
                "modules":{"s":{"matrices":[[[1]],[[1]]]}}}"#,
        )
        .unwrap_err();
        assert!(e.to_string().contains("$.modules.s"), "{e}");
    }
}
