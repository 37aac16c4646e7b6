//! The JSON algebra and map file formats, and the named example generators.
//!
//! Coefficients are always strings holding exact rationals (`"3"`, `"-1/2"`).
//! Products are sparse lists of `[i, j, k, "c"]` meaning `e_i * e_j` has
//! coefficient `c` on `e_k` (`[i, j, k, l, "c"]` for triple products). Saving
//! is canonical: entries sorted, zeros dropped, rationals in lowest terms, so
//! `save(load(save(x)))` is byte-identical to `save(x)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::algebra::{HomAlgebra, HomJMPAlgebra, Structure};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::forms::BilinearForm;
use crate::linalg::{parse_scalar, Matrix, Scalar, Tensor3, Tensor4};
use crate::triples::{HLJPSystem, HomTripleSystem};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(HomAlgebra),
    Jmp(HomJMPAlgebra),
    Triple(HomTripleSystem),
    /// A triple file that also carries a `jordan` product.
    Hljp(HLJPSystem),
}

impl Object {
    pub fn dim(&self) -> usize {
        match self {
            Object::Algebra(a) => a.dim(),
            Object::Jmp(j) => j.dim(),
            Object::Triple(t) => t.dim(),
            Object::Hljp(s) => s.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Jmp(_) => "jmp",
            Object::Triple(_) | Object::Hljp(_) => "triple",
        }
    }

    pub fn twist_matrix(&self) -> &Matrix {
        match self {
            Object::Algebra(a) => a.twist_matrix(),
            Object::Jmp(j) => j.twist_matrix(),
            Object::Triple(t) => t.twist_matrix(),
            Object::Hljp(s) => s.twist_matrix(),
        }
    }

    /// The binary structure, when there is one.
    pub fn structure(&self) -> Option<&dyn Structure> {
        match self {
            Object::Algebra(a) => Some(a),
            Object::Jmp(j) => Some(j),
            Object::Triple(_) | Object::Hljp(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDocument {
    pub name: String,
    pub object: Object,
    pub form: Option<BilinearForm>,
    pub meta: BTreeMap<String, Value>,
}

impl AlgebraDocument {
    pub fn new(name: impl Into<String>, object: Object) -> Self {
        AlgebraDocument {
            name: name.into(),
            object,
            form: None,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_form(mut self, form: BilinearForm) -> Self {
        self.form = Some(form);
        self
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<Value>) -> Self {
        self.meta.insert(key.into(), value.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_matrix(out: &mut String, key: &str, m: &Matrix, last: bool) {
    let _ = write!(out, "  {}: [", string(key));
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|c| string(&c.to_string())).collect();
        let sep = if r + 1 == m.rows() { "" } else { "," };
        let _ = write!(out, "\n    [{}]{sep}", row.join(", "));
    }
    if m.rows() > 0 {
        out.push_str("\n  ");
    }
    out.push(']');
    out.push_str(if last { "\n" } else { ",\n" });
}

fn tensor3_entries(t: &Tensor3) -> Vec<String> {
    t.nonzero_entries()
        .map(|([i, j, k], c)| format!("[{i}, {j}, {k}, {}]", string(&c.to_string())))
        .collect()
}

fn tensor4_entries(t: &Tensor4) -> Vec<String> {
    t.nonzero_entries()
        .map(|([i, j, k, l], c)| format!("[{i}, {j}, {k}, {l}, {}]", string(&c.to_string())))
        .collect()
}

/// Canonical text of an algebra file.
pub fn to_canonical_json(doc: &AlgebraDocument) -> String {
    let products: Vec<(&str, Vec<String>)> = match &doc.object {
        Object::Algebra(a) => vec![("main", tensor3_entries(a.mul()))],
        Object::Jmp(j) => vec![
            ("bracket", tensor3_entries(j.bracket())),
            ("jordan", tensor3_entries(j.jordan())),
        ],
        Object::Triple(t) => vec![("triple", tensor4_entries(t.triple()))],
        Object::Hljp(s) => vec![
            ("jordan", tensor3_entries(s.jordan())),
            ("triple", tensor4_entries(s.triple_system().triple())),
        ],
    };
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"name\": {},", string(&doc.name));
    let _ = writeln!(out, "  \"kind\": {},", string(doc.object.kind()));
    let _ = writeln!(out, "  \"dim\": {},", doc.dim());
    out.push_str("  \"products\": {");
    for (p, (key, entries)) in products.iter().enumerate() {
        let _ = write!(out, "\n    {}: [", string(key));
        for (e, entry) in entries.iter().enumerate() {
            let sep = if e + 1 == entries.len() { "" } else { "," };
            let _ = write!(out, "\n      {entry}{sep}");
        }
        if !entries.is_empty() {
            out.push_str("\n    ");
        }
        out.push(']');
        if p + 1 < products.len() {
            out.push(',');
        }
    }
    out.push_str("\n  },\n");
    write_matrix(&mut out, "twist", doc.object.twist_matrix(), false);
    if let Some(form) = &doc.form {
        write_matrix(&mut out, "form", form.matrix(), false);
    }
    let meta: Map<String, Value> = doc.meta.clone().into_iter().collect();
    let _ = writeln!(out, "  \"meta\": {}", Value::Object(meta));
    out.push_str("}\n");
    out
}

fn json_error(e: serde_json::Error) -> Error {
    Error::format(
        format!("line {} column {}", e.line(), e.column()),
        e.to_string(),
    )
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::format(join(path, key), "missing field"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn as_index(v: &Value, dim: usize, path: &str) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| Error::format(path, "expected a non-negative integer index"))?;
    let i = usize::try_from(i).map_err(|_| Error::format(path, "index too large"))?;
    if i >= dim {
        return Err(Error::format(path, format!("index {i} out of range for dim {dim}")));
    }
    Ok(i)
}

fn as_scalar(v: &Value, path: &str) -> Result<Scalar> {
    let text = v
        .as_str()
        .ok_or_else(|| Error::format(path, "coefficients must be strings like \"p\" or \"p/q\""))?;
    parse_scalar(text).map_err(|e| match e {
        Error::InvalidScalar { reason, .. } => Error::format(path, reason),
        other => other,
    })
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::format(path, "expected an array"))
}

fn parse_matrix(v: &Value, dim: usize, path: &str) -> Result<Matrix> {
    let rows = as_array(v, path)?;
    if rows.len() != dim {
        return Err(Error::format(path, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut m = Matrix::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{r}]");
        let cells = as_array(row, &rpath)?;
        if cells.len() != dim {
            return Err(Error::format(
                &rpath,
                format!("expected {dim} entries, found {}", cells.len()),
            ));
        }
        for (c, cell) in cells.iter().enumerate() {
            m.set(r, c, as_scalar(cell, &format!("{rpath}[{c}]"))?);
        }
    }
    Ok(m)
}

fn parse_entries<const N: usize>(
    v: &Value,
    dim: usize,
    path: &str,
    mut set: impl FnMut([usize; N], Scalar),
) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for (e, entry) in as_array(v, path)?.iter().enumerate() {
        let epath = format!("{path}[{e}]");
        let items = as_array(entry, &epath)?;
        if items.len() != N + 1 {
            return Err(Error::format(
                &epath,
                format!("expected {} indices and a coefficient", N),
            ));
        }
        let mut idx = [0usize; N];
        for (slot, item) in items[..N].iter().enumerate() {
            idx[slot] = as_index(item, dim, &format!("{epath}[{slot}]"))?;
        }
        let c = as_scalar(&items[N], &format!("{epath}[{N}]"))?;
        if !seen.insert(idx) {
            return Err(Error::format(&epath, format!("duplicate entry for indices {idx:?}")));
        }
        set(idx, c);
    }
    Ok(())
}

fn parse_tensor3(v: &Value, dim: usize, path: &str) -> Result<Tensor3> {
    let mut t = Tensor3::zeros(dim);
    parse_entries::<3>(v, dim, path, |[i, j, k], c| t.set(i, j, k, c))?;
    Ok(t)
}

fn parse_tensor4(v: &Value, dim: usize, path: &str) -> Result<Tensor4> {
    let mut t = Tensor4::zeros(dim);
    parse_entries::<4>(v, dim, path, |[i, j, k, l], c| t.set(i, j, k, l, c))?;
    Ok(t)
}

fn expect_products(
    products: &Map<String, Value>,
    required: &[&str],
    optional: &[&str],
) -> Result<()> {
    for key in products.keys() {
        if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
            return Err(Error::format(
                join("products", key),
                format!("unexpected product list (expected {})", required.join(", ")),
            ));
        }
    }
    for key in required {
        field(products, key, "products")?;
    }
    Ok(())
}

fn structural(field: &str, e: Error) -> Error {
    match e {
        Error::Format { .. } => e,
        other => Error::format(field, other.to_string()),
    }
}

/// Parses algebra file text.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let root: Value = serde_json::from_str(text).map_err(json_error)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::format("(root)", "expected a JSON object"))?;
    for key in obj.keys() {
        if !["format", "name", "kind", "dim", "products", "twist", "form", "meta"].contains(&key.as_str()) {
            return Err(Error::format(key, "unknown field"));
        }
    }
    let format = field(obj, "format", "")?
        .as_u64()
        .ok_or_else(|| Error::format("format", "expected an integer"))?;
    if format != FORMAT_VERSION {
        return Err(Error::format("format", format!("unsupported format version {format}")));
    }
    let name = field(obj, "name", "")?
        .as_str()
        .ok_or_else(|| Error::format("name", "expected a string"))?
        .to_string();
    let kind = field(obj, "kind", "")?
        .as_str()
        .ok_or_else(|| Error::format("kind", "expected a string"))?;
    let dim = field(obj, "dim", "")?
        .as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .ok_or_else(|| Error::format("dim", "expected a non-negative integer"))?;
    let products = field(obj, "products", "")?
        .as_object()
        .ok_or_else(|| Error::format("products", "expected an object"))?;
    let twist = parse_matrix(field(obj, "twist", "")?, dim, "twist")?;
    let object = match kind {
        "algebra" => {
            expect_products(products, &["main"], &[])?;
            let mul = parse_tensor3(&products["main"], dim, "products.main")?;
            Object::Algebra(HomAlgebra::new(mul, twist).map_err(|e| structural("products", e))?)
        }
        "jmp" => {
            expect_products(products, &["bracket", "jordan"], &[])?;
            let bracket = parse_tensor3(&products["bracket"], dim, "products.bracket")?;
            let jordan = parse_tensor3(&products["jordan"], dim, "products.jordan")?;
            Object::Jmp(HomJMPAlgebra::new(bracket, jordan, twist).map_err(|e| structural("products", e))?)
        }
        "triple" => {
            expect_products(products, &["triple"], &["jordan"])?;
            let triple = parse_tensor4(&products["triple"], dim, "products.triple")?;
            let system = HomTripleSystem::new(triple, twist).map_err(|e| structural("products", e))?;
            match products.get("jordan") {
                None => Object::Triple(system),
                Some(v) => {
                    let jordan = parse_tensor3(v, dim, "products.jordan")?;
                    Object::Hljp(HLJPSystem::new(system, jordan).map_err(|e| structural("products.jordan", e))?)
                }
            }
        }
        other => {
            return Err(Error::format(
                "kind",
                format!("unknown kind {other:?} (expected algebra, jmp or triple)"),
            ))
        }
    };
    let form = match obj.get("form") {
        None | Some(Value::Null) => None,
        Some(v) => Some(BilinearForm::new(parse_matrix(v, dim, "form")?)?),
    };
    let meta = match obj.get("meta") {
        None | Some(Value::Null) => BTreeMap::new(),
        Some(Value::Object(m)) => m.clone().into_iter().collect(),
        Some(_) => return Err(Error::format("meta", "expected an object")),
    };
    Ok(AlgebraDocument {
        name,
        object,
        form,
        meta,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::format(path.display().to_string(), e.to_string()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::format(path.display().to_string(), e.to_string()))
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<AlgebraDocument> {
    parse_algebra(&read(path.as_ref())?)
}

pub fn save_algebra(doc: &AlgebraDocument, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &to_canonical_json(doc))
}

/// `{"format": 1, "name": ..., "dim": n, "matrix": [[...]]}`.
pub fn parse_map(text: &str) -> Result<Matrix> {
    let root: Value = serde_json::from_str(text).map_err(json_error)?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::format("(root)", "expected a JSON object"))?;
    let format = field(obj, "format", "")?.as_u64();
    if format != Some(FORMAT_VERSION) {
        return Err(Error::format("format", "unsupported format version"));
    }
    let dim = field(obj, "dim", "")?
        .as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .ok_or_else(|| Error::format("dim", "expected a non-negative integer"))?;
    parse_matrix(field(obj, "matrix", "")?, dim, "matrix")
}

pub fn map_to_json(name: &str, m: &Matrix) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"name\": {},", string(name));
    let _ = writeln!(out, "  \"dim\": {},", m.rows());
    write_matrix(&mut out, "matrix", m, true);
    out.push_str("}\n");
    out
}

pub fn load_map(path: impl AsRef<Path>) -> Result<Matrix> {
    parse_map(&read(path.as_ref())?)
}

/// Names accepted by [`example`].
pub const EXAMPLES: &[&str] = &["ex3", "ex3-flat", "ex5", "p6", "p6-flat"];

fn take_param(
    params: &mut BTreeMap<String, String>,
    key: &str,
    default: Scalar,
) -> Result<Scalar> {
    match params.remove(key) {
        None => Ok(default),
        Some(text) => parse_scalar(&text).map_err(|e| Error::format(format!("param {key}"), e.to_string())),
    }
}

fn param_meta(params: &[(&str, &Scalar)]) -> Value {
    let m: Map<String, Value> = params
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
        .collect();
    Value::Object(m)
}

/// Builds a named example with concrete parameter values.
///
/// * `ex3` (`lambda`, default 2): the twisted 3-dimensional table.
/// * `ex3-flat`: the untwisted table.
/// * `ex5` (`nu` default 2, `lambda` default 3): the 5-dimensional table.
/// * `p6` (`lambda`, default 1): the T*-extension of `ex3-flat` twisted by
///   `beta = theta + t(theta)` with `theta = e1 -> -e1, e2 -> lambda e3, e3 -> e2 / lambda`.
/// * `p6-flat`: the T*-extension itself, twist `id`.
pub fn example(name: &str, params: &BTreeMap<String, String>) -> Result<AlgebraDocument> {
    let mut params = params.clone();
    let doc = match name {
        "ex3" => {
            let lambda = take_param(&mut params, "lambda", Scalar::from_integer(2.into()))?;
            AlgebraDocument::new("ex3", Object::Algebra(fixtures::ex3(&lambda)?))
                .with_meta("params", param_meta(&[("lambda", &lambda)]))
        }
        "ex3-flat" => AlgebraDocument::new("ex3-flat", Object::Algebra(fixtures::ex3_flat())),
        "ex5" => {
            let nu = take_param(&mut params, "nu", Scalar::from_integer(2.into()))?;
            let lambda = take_param(&mut params, "lambda", Scalar::from_integer(3.into()))?;
            AlgebraDocument::new("ex5", Object::Algebra(fixtures::ex5(&nu, &lambda)?))
                .with_meta("params", param_meta(&[("nu", &nu), ("lambda", &lambda)]))
        }
        "p6" => {
            let lambda = take_param(&mut params, "lambda", Scalar::from_integer(1.into()))?;
            if lambda.is_zero() {
                return Err(Error::SingularTwist);
            }
            let (j, b) = fixtures::p6(&lambda)?;
            AlgebraDocument::new("p6", Object::Jmp(j))
                .with_form(b)
                .with_meta("params", param_meta(&[("lambda", &lambda)]))
        }
        "p6-flat" => {
            let ext = fixtures::p6_extension();
            AlgebraDocument::new("p6-flat", Object::Jmp(ext.result)).with_form(ext.form)
        }
        other => return Err(Error::UnknownExample(other.to_string())),
    };
    if let Some(key) = params.keys().next() {
        return Err(Error::format(
            format!("param {key}"),
            format!("not a parameter of {name}"),
        ));
    }
    Ok(doc.with_meta("example", name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn params(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn zero_algebra_round_trip() {
        let doc = AlgebraDocument::new("zero3", Object::Algebra(HomAlgebra::zero(3)));
        let text = to_canonical_json(&doc);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_canonical_json(&back), text);
    }

    #[test]
    fn single_entry_encodes_product() {
        let text = r#"{"format": 1, "name": "t", "kind": "algebra", "dim": 3,
            "products": {"main": [[0, 1, 1, "1"]]},
            "twist": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        let doc = parse_algebra(text).unwrap();
        let Object::Algebra(a) = &doc.object else { panic!() };
        assert_eq!(a.mul().product_of_basis(0, 1), &[int(0), int(1), int(0)]);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let text = r#"{"format": 1, "name": "t", "kind": "algebra", "dim": 1,
            "products": {"main": [[0, 0, 0, "1/0"]]}, "twist": [["1"]]}"#;
        let err = parse_algebra(text).unwrap_err();
        assert_eq!(
            err,
            Error::format("products.main[0][3]", "denominator must be positive")
        );
    }

    #[test]
    fn field_errors_name_the_offending_entry() {
        let base = |products: &str| {
            format!(
                r#"{{"format": 1, "name": "t", "kind": "jmp", "dim": 2, "products": {products},
                "twist": [["1","0"],["0","1"]]}}"#
            )
        };
        let e = parse_algebra(&base(r#"{"bracket": [[0, 5, 1, "1"]], "jordan": []}"#)).unwrap_err();
        assert!(matches!(e, Error::Format { ref field, .. } if field == "products.bracket[0][1]"));
        let e = parse_algebra(&base(r#"{"bracket": []}"#)).unwrap_err();
        assert!(matches!(e, Error::Format { ref field, .. } if field == "products.jordan"));
        let e = parse_algebra(&base(r#"{"bracket": [[0, 1, 1, "1"]], "jordan": []}"#)).unwrap_err();
        assert!(matches!(e, Error::Format { ref field, .. } if field == "products"));
        let e = parse_algebra(&base(r#"{"bracket": [], "jordan": [[0, 0, 0, 1]]}"#)).unwrap_err();
        assert!(matches!(e, Error::Format { ref field, .. } if field == "products.jordan[0][3]"));
        let e = parse_algebra("{\n  \"format\": 1,\n  oops\n}").unwrap_err();
        assert!(matches!(e, Error::Format { ref field, .. } if field.starts_with("line 3")));
    }

    #[test]
    fn canonical_form_is_stable() {
        for name in EXAMPLES {
            let doc = example(name, &BTreeMap::new()).unwrap();
            let once = to_canonical_json(&doc);
            let twice = to_canonical_json(&parse_algebra(&once).unwrap());
            assert_eq!(once, twice, "{name}");
        }
    }

    #[test]
    fn examples_take_parameters() {
        let doc = example("ex3", &params(&[("lambda", "1")])).unwrap();
        assert_eq!(doc.object, Object::Algebra(fixtures::ex3_flat()));
        let doc = example("ex5", &params(&[("nu", "2"), ("lambda", "3")])).unwrap();
        let Object::Algebra(a) = &doc.object else { panic!() };
        assert_eq!(a.mul().get(0, 1, 4), &int(1));
        assert_eq!(a.mul().get(0, 1, 3), &ratio(1, 2));
        assert_eq!(example("ex3", &params(&[("lambda", "0")])), Err(Error::SingularTwist));
        assert!(example("ex3", &params(&[("mu", "2")])).is_err());
        assert!(matches!(example("ex9", &BTreeMap::new()), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn map_round_trip() {
        let m = fixtures::ex3_theta();
        assert_eq!(parse_map(&map_to_json("theta", &m)).unwrap(), m);
    }
}
