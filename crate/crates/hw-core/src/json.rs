//! JSON input and output for the library's data types.
//!
//! Wire conventions, shared by all tools built on this crate:
//!
//! * every numeric entry is either a JSON integer or a rational written as a
//!   `"p/q"` string — floating-point literals are rejected outright;
//! * documents carry a `"schema": 1` field; parsers accept the field being
//!   absent and reject any other version;
//! * parse failures report the position of the offending value as a path
//!   such as `maps[2][0][1]`.
//!
//! Shapes:
//!
//! * lattice: `{"rank": n, "gram": [[..], ..], "labels": ["..", ..]?}` with
//!   the Gram matrix row-major; a bare matrix `[[..], ..]` is also accepted;
//! * quiver: `{"vertices": n, "arrows": [[s, t], ..]}`, vertices `0..n`;
//! * representation: `{"dims": [..], "maps": [[[..], ..], ..]}` with one
//!   matrix per arrow, shaped `dims[t] x dims[s]` (rows indexed by the
//!   target vertex);
//! * tube object: `{"base": b, "length": l}` (the rank comes from context);
//! * category descriptor: `{"type": "quiver" | "tube" | "curve" | "sum", ..}`
//!   with type-specific fields (`vertices`/`arrows`, `rank`, `genus`,
//!   `parts`).

use serde_json::{Map, Number, Value};
use std::fmt;
use std::str::FromStr;

use crate::classify::CategoryDescriptor;
use crate::exact::{Int, IntMatrix, Rat, RatMatrix};
use crate::klattice::EulerLattice;
use crate::quiver::{Quiver, Rep};
use crate::tube::TubeObject;
use num_traits::{Signed, Zero};

/// A parse failure, carrying the JSON path of the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

impl ParseError {
    fn new(path: &str, message: impl Into<String>) -> Self {
        ParseError { path: path.to_string(), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "at {}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn join_key(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn join_index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, ParseError> {
    v.as_object()
        .ok_or_else(|| ParseError::new(path, format!("expected an object, found {}", type_name(v))))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a [Value], ParseError> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| ParseError::new(path, format!("expected an array, found {}", type_name(v))))
}

fn require<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<&'a Value, ParseError> {
    obj.get(key)
        .ok_or_else(|| ParseError::new(path, format!("missing required field \"{key}\"")))
}

/// Check the optional `"schema"` field: absent or exactly 1.
fn check_schema(obj: &Map<String, Value>, path: &str) -> Result<(), ParseError> {
    match obj.get("schema") {
        None => Ok(()),
        Some(v) => {
            let n = parse_int(v, &join_key(path, "schema"))?;
            if n == Int::from(1) {
                Ok(())
            } else {
                Err(ParseError::new(
                    &join_key(path, "schema"),
                    format!("unsupported schema version {n}, expected 1"),
                ))
            }
        }
    }
}

/// Parse an arbitrary-precision integer; floating-point literals are errors.
pub fn parse_int(v: &Value, path: &str) -> Result<Int, ParseError> {
    match v {
        Value::Number(n) => {
            let text = n.to_string();
            if text.contains(['.', 'e', 'E']) {
                return Err(ParseError::new(
                    path,
                    format!("expected an integer, found the floating-point literal {text}"),
                ));
            }
            Int::from_str(&text)
                .map_err(|_| ParseError::new(path, format!("malformed integer literal {text}")))
        }
        other => Err(ParseError::new(
            path,
            format!("expected an integer, found {}", type_name(other)),
        )),
    }
}

/// Parse a nonnegative machine-sized integer.
pub fn parse_usize(v: &Value, path: &str) -> Result<usize, ParseError> {
    let n = parse_int(v, path)?;
    if n.is_negative() {
        return Err(ParseError::new(path, format!("expected a nonnegative integer, found {n}")));
    }
    usize::try_from(&n)
        .map_err(|_| ParseError::new(path, format!("integer {n} is too large for an index")))
}

fn parse_i64(v: &Value, path: &str) -> Result<i64, ParseError> {
    let n = parse_int(v, path)?;
    i64::try_from(&n)
        .map_err(|_| ParseError::new(path, format!("integer {n} is out of the supported range")))
}

/// Parse a rational entry: a JSON integer, or a `"p/q"` (or `"p"`) string.
pub fn parse_rat(v: &Value, path: &str) -> Result<Rat, ParseError> {
    match v {
        Value::Number(_) => Ok(Rat::from_integer(parse_int(v, path)?)),
        Value::String(s) => {
            let bad = |detail: &str| {
                ParseError::new(
                    path,
                    format!("malformed rational \"{s}\": {detail} (expected \"p/q\" or \"p\")"),
                )
            };
            match s.split_once('/') {
                Some((p, q)) => {
                    let num = Int::from_str(p).map_err(|_| bad("bad numerator"))?;
                    let den = Int::from_str(q).map_err(|_| bad("bad denominator"))?;
                    if den.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    Ok(Rat::new(num, den))
                }
                None => Int::from_str(s).map(Rat::from_integer).map_err(|_| bad("bad integer")),
            }
        }
        other => Err(ParseError::new(
            path,
            format!("expected an integer or a \"p/q\" string, found {}", type_name(other)),
        )),
    }
}

/// Parse a flat integer vector (for classes in a lattice).
pub fn parse_int_vec(v: &Value, path: &str) -> Result<Vec<Int>, ParseError> {
    let arr = as_array(v, path)?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| parse_int(x, &join_index(path, i)))
        .collect()
}

/// Parse an array of integer vectors (for spherical sets and radical bases).
pub fn parse_int_vec_set(v: &Value, path: &str) -> Result<Vec<Vec<Int>>, ParseError> {
    let arr = as_array(v, path)?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| parse_int_vec(x, &join_index(path, i)))
        .collect()
}

/// Parse a rectangular row-major integer matrix; rows must share one length.
pub fn parse_int_matrix(v: &Value, path: &str) -> Result<IntMatrix, ParseError> {
    let arr = as_array(v, path)?;
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(arr.len());
    for (i, row) in arr.iter().enumerate() {
        let row = parse_int_vec(row, &join_index(path, i))?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::new(
                    &join_index(path, i),
                    format!("ragged matrix: row has {} entries, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    Ok(IntMatrix::from_rows(rows))
}

/// Parse a rational matrix with an enforced shape (so errors stay positional).
fn parse_rat_matrix_shaped(
    v: &Value,
    path: &str,
    rows: usize,
    cols: usize,
) -> Result<RatMatrix, ParseError> {
    let arr = as_array(v, path)?;
    // A matrix with no columns may be written [] regardless of row count.
    if cols == 0 && arr.is_empty() {
        return Ok(RatMatrix::from_fn(rows, cols, |_, _| Rat::zero()));
    }
    if arr.len() != rows {
        return Err(ParseError::new(
            path,
            format!("expected {rows} rows, found {}", arr.len()),
        ));
    }
    let mut data: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for (i, row_val) in arr.iter().enumerate() {
        let row_path = join_index(path, i);
        let row = as_array(row_val, &row_path)?;
        if row.len() != cols {
            return Err(ParseError::new(
                &row_path,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        let mut out = Vec::with_capacity(cols);
        for (j, entry) in row.iter().enumerate() {
            out.push(parse_rat(entry, &join_index(&row_path, j))?);
        }
        data.push(out);
    }
    if rows == 0 || cols == 0 {
        return Ok(RatMatrix::from_fn(rows, cols, |_, _| Rat::zero()));
    }
    Ok(RatMatrix::from_rows(data))
}

/// Parse an Euler lattice: either a full document or a bare Gram matrix.
pub fn parse_lattice(v: &Value) -> Result<EulerLattice, ParseError> {
    if v.is_array() {
        let gram = parse_int_matrix(v, "gram")?;
        if gram.rows() != gram.cols() {
            return Err(ParseError::new(
                "gram",
                format!("Gram matrix must be square, got {}x{}", gram.rows(), gram.cols()),
            ));
        }
        return EulerLattice::new(gram).map_err(|e| ParseError::new("gram", e.to_string()));
    }
    let obj = as_object(v, "")?;
    check_schema(obj, "")?;
    let rank = parse_usize(require(obj, "rank", "")?, "rank")?;
    let gram = parse_int_matrix(require(obj, "gram", "")?, "gram")?;
    if gram.rows() != rank || gram.cols() != rank {
        return Err(ParseError::new(
            "gram",
            format!("expected a {rank}x{rank} matrix, found {}x{}", gram.rows(), gram.cols()),
        ));
    }
    let mut lat = EulerLattice::new(gram).map_err(|e| ParseError::new("gram", e.to_string()))?;
    if let Some(labels_val) = obj.get("labels") {
        let arr = as_array(labels_val, "labels")?;
        let mut labels = Vec::with_capacity(arr.len());
        for (i, l) in arr.iter().enumerate() {
            let path = join_index("labels", i);
            labels.push(
                l.as_str()
                    .ok_or_else(|| {
                        ParseError::new(&path, format!("expected a string, found {}", type_name(l)))
                    })?
                    .to_string(),
            );
        }
        lat = lat.with_labels(labels).map_err(|e| ParseError::new("labels", e.to_string()))?;
    }
    Ok(lat)
}

/// Parse a quiver document.
pub fn parse_quiver(v: &Value) -> Result<Quiver, ParseError> {
    let obj = as_object(v, "")?;
    check_schema(obj, "")?;
    parse_quiver_fields(obj, "")
}

fn parse_quiver_fields(obj: &Map<String, Value>, path: &str) -> Result<Quiver, ParseError> {
    let vertices = parse_usize(require(obj, "vertices", path)?, &join_key(path, "vertices"))?;
    let arrows_path = join_key(path, "arrows");
    let arr = as_array(require(obj, "arrows", path)?, &arrows_path)?;
    let mut arrows = Vec::with_capacity(arr.len());
    for (i, pair_val) in arr.iter().enumerate() {
        let pair_path = join_index(&arrows_path, i);
        let pair = as_array(pair_val, &pair_path)?;
        if pair.len() != 2 {
            return Err(ParseError::new(
                &pair_path,
                format!("an arrow is a [source, target] pair, found {} entries", pair.len()),
            ));
        }
        let s = parse_usize(&pair[0], &join_index(&pair_path, 0))?;
        let t = parse_usize(&pair[1], &join_index(&pair_path, 1))?;
        if s >= vertices {
            return Err(ParseError::new(
                &join_index(&pair_path, 0),
                format!("vertex {s} out of range for {vertices} vertices"),
            ));
        }
        if t >= vertices {
            return Err(ParseError::new(
                &join_index(&pair_path, 1),
                format!("vertex {t} out of range for {vertices} vertices"),
            ));
        }
        arrows.push((s, t));
    }
    Quiver::new(vertices, arrows).map_err(|e| ParseError::new(&arrows_path, e.to_string()))
}

/// Parse a representation of `q`; map shapes are validated positionally.
pub fn parse_rep(v: &Value, q: &Quiver) -> Result<Rep, ParseError> {
    let obj = as_object(v, "")?;
    check_schema(obj, "")?;
    let dims_val = as_array(require(obj, "dims", "")?, "dims")?;
    if dims_val.len() != q.vertex_count() {
        return Err(ParseError::new(
            "dims",
            format!(
                "expected one dimension per vertex ({}), found {}",
                q.vertex_count(),
                dims_val.len()
            ),
        ));
    }
    let mut dims = Vec::with_capacity(dims_val.len());
    for (i, d) in dims_val.iter().enumerate() {
        dims.push(parse_usize(d, &join_index("dims", i))?);
    }
    let maps_val = as_array(require(obj, "maps", "")?, "maps")?;
    if maps_val.len() != q.arrows().len() {
        return Err(ParseError::new(
            "maps",
            format!(
                "expected one matrix per arrow ({}), found {}",
                q.arrows().len(),
                maps_val.len()
            ),
        ));
    }
    let mut maps = Vec::with_capacity(maps_val.len());
    for (a, m) in maps_val.iter().enumerate() {
        let (s, t) = q.arrows()[a];
        maps.push(parse_rat_matrix_shaped(m, &join_index("maps", a), dims[t], dims[s])?);
    }
    Rep::new(q.clone(), dims, maps).map_err(|e| ParseError::new("maps", e.to_string()))
}

/// Parse a sequence of representations (a bare array of rep objects).
pub fn parse_rep_seq(v: &Value, q: &Quiver) -> Result<Vec<Rep>, ParseError> {
    let arr = as_array(v, "")?;
    arr.iter()
        .enumerate()
        .map(|(i, r)| {
            parse_rep(r, q).map_err(|e| ParseError {
                path: if e.path.is_empty() {
                    format!("[{i}]")
                } else {
                    format!("[{i}].{}", e.path)
                },
                message: e.message,
            })
        })
        .collect()
}

/// Parse a tube object `{"base": b, "length": l}`; the rank comes from context.
pub fn parse_tube_object(v: &Value, rank: usize) -> Result<TubeObject, ParseError> {
    let obj = as_object(v, "")?;
    check_schema(obj, "")?;
    let base = parse_usize(require(obj, "base", "")?, "base")?;
    let length = parse_usize(require(obj, "length", "")?, "length")?;
    TubeObject::new(rank, base, length).map_err(|e| ParseError::new("", e.to_string()))
}

/// Parse a category descriptor (recursively for sums).
pub fn parse_descriptor(v: &Value) -> Result<CategoryDescriptor, ParseError> {
    parse_descriptor_at(v, "")
}

fn parse_descriptor_at(v: &Value, path: &str) -> Result<CategoryDescriptor, ParseError> {
    let obj = as_object(v, path)?;
    check_schema(obj, path)?;
    let type_path = join_key(path, "type");
    let kind = require(obj, "type", path)?
        .as_str()
        .ok_or_else(|| ParseError::new(&type_path, "expected a string".to_string()))?;
    match kind {
        "quiver" => Ok(CategoryDescriptor::QuiverCat(parse_quiver_fields(obj, path)?)),
        "tube" => {
            let rank = parse_usize(require(obj, "rank", path)?, &join_key(path, "rank"))?;
            Ok(CategoryDescriptor::TubeCat(rank))
        }
        "curve" => {
            let genus = parse_i64(require(obj, "genus", path)?, &join_key(path, "genus"))?;
            Ok(CategoryDescriptor::CurveCat(genus))
        }
        "sum" => {
            let parts_path = join_key(path, "parts");
            let arr = as_array(require(obj, "parts", path)?, &parts_path)?;
            let parts = arr
                .iter()
                .enumerate()
                .map(|(i, p)| parse_descriptor_at(p, &join_index(&parts_path, i)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CategoryDescriptor::DirectSum(parts))
        }
        other => Err(ParseError::new(
            &type_path,
            format!("unknown descriptor type \"{other}\" (expected quiver, tube, curve, or sum)"),
        )),
    }
}

// ---------------------------------------------------------------------------
// Emission. Maps preserve insertion order, so key order below is the wire
// order; all emitters produce values their parsers accept.

fn int_value(i: &Int) -> Value {
    Value::Number(
        serde_json::from_str::<Number>(&i.to_string()).expect("integer literal is valid JSON"),
    )
}

/// Emit a rational: bare integer when the denominator is 1, else `"p/q"`.
pub fn rat_value(r: &Rat) -> Value {
    if r.is_integer() {
        int_value(r.numer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn int_vec_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn int_matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| int_value(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn rat_matrix_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| rat_value(m.get(i, j))).collect()))
            .collect(),
    )
}

fn usize_value(x: usize) -> Value {
    Value::Number(Number::from(x as u64))
}

fn schema_map() -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::Number(Number::from(1)));
    obj
}

/// Emit a lattice document.
pub fn lattice_value(lat: &EulerLattice) -> Value {
    let mut obj = schema_map();
    obj.insert("rank".into(), usize_value(lat.rank()));
    obj.insert("gram".into(), int_matrix_value(lat.gram()));
    if let Some(labels) = lat.basis_labels() {
        obj.insert(
            "labels".into(),
            Value::Array(labels.iter().map(|l| Value::String(l.clone())).collect()),
        );
    }
    Value::Object(obj)
}

/// Emit a quiver document.
pub fn quiver_value(q: &Quiver) -> Value {
    let mut obj = schema_map();
    obj.insert("vertices".into(), usize_value(q.vertex_count()));
    obj.insert(
        "arrows".into(),
        Value::Array(
            q.arrows()
                .iter()
                .map(|&(s, t)| Value::Array(vec![usize_value(s), usize_value(t)]))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// Emit a representation document.
pub fn rep_value(rep: &Rep) -> Value {
    let mut obj = schema_map();
    obj.insert("dims".into(), Value::Array(rep.dims().iter().map(|&d| usize_value(d)).collect()));
    obj.insert("maps".into(), Value::Array(rep.maps().iter().map(rat_matrix_value).collect()));
    Value::Object(obj)
}

/// Emit a tube object.
pub fn tube_object_value(x: &TubeObject) -> Value {
    let mut obj = schema_map();
    obj.insert("base".into(), usize_value(x.base()));
    obj.insert("length".into(), usize_value(x.length()));
    Value::Object(obj)
}

/// Emit a category descriptor document.
pub fn descriptor_value(d: &CategoryDescriptor) -> Value {
    let mut v = descriptor_value_plain(d);
    if let Value::Object(obj) = &mut v {
        let mut with_schema = schema_map();
        with_schema.append(obj);
        return Value::Object(with_schema);
    }
    v
}

fn descriptor_value_plain(d: &CategoryDescriptor) -> Value {
    let mut obj = Map::new();
    match d {
        CategoryDescriptor::QuiverCat(q) => {
            obj.insert("type".into(), Value::String("quiver".into()));
            obj.insert("vertices".into(), usize_value(q.vertex_count()));
            obj.insert(
                "arrows".into(),
                Value::Array(
                    q.arrows()
                        .iter()
                        .map(|&(s, t)| Value::Array(vec![usize_value(s), usize_value(t)]))
                        .collect(),
                ),
            );
        }
        CategoryDescriptor::TubeCat(r) => {
            obj.insert("type".into(), Value::String("tube".into()));
            obj.insert("rank".into(), usize_value(*r));
        }
        CategoryDescriptor::CurveCat(g) => {
            obj.insert("type".into(), Value::String("curve".into()));
            obj.insert("genus".into(), Value::Number(Number::from(*g)));
        }
        CategoryDescriptor::DirectSum(parts) => {
            obj.insert("type".into(), Value::String("sum".into()));
            obj.insert(
                "parts".into(),
                Value::Array(parts.iter().map(descriptor_value_plain).collect()),
            );
        }
    }
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn integers_parse_and_floats_are_rejected() {
        assert_eq!(parse_int(&parse("42"), "x").unwrap(), Int::from(42));
        assert_eq!(parse_int(&parse("-7"), "x").unwrap(), Int::from(-7));
        let big = "123456789012345678901234567890";
        assert_eq!(parse_int(&parse(big), "x").unwrap().to_string(), big);
        for bad in ["1.5", "1e3", "2.0"] {
            let err = parse_int(&parse(bad), "gram[0][1]").unwrap_err();
            assert_eq!(err.path, "gram[0][1]");
            assert!(err.message.contains("floating-point"), "{}", err.message);
        }
        assert!(parse_int(&parse("\"3\""), "x").is_err());
    }

    #[test]
    fn rationals_parse_both_forms() {
        assert_eq!(parse_rat(&parse("3"), "x").unwrap(), Rat::from_integer(Int::from(3)));
        assert_eq!(
            parse_rat(&parse("\"-2/4\""), "x").unwrap(),
            Rat::new(Int::from(-1), Int::from(2))
        );
        assert_eq!(parse_rat(&parse("\"5\""), "x").unwrap(), Rat::from_integer(Int::from(5)));
        assert!(parse_rat(&parse("\"1/0\""), "x").unwrap_err().message.contains("zero denominator"));
        assert!(parse_rat(&parse("\"a/b\""), "x").is_err());
        assert!(parse_rat(&parse("0.5"), "x").is_err());
    }

    #[test]
    fn lattice_round_trip_with_labels() {
        let doc = json!({
            "schema": 1,
            "rank": 2,
            "gram": [[0, -1], [1, 0]],
            "labels": ["point", "structure"],
        });
        let lat = parse_lattice(&doc).unwrap();
        assert_eq!(lat.rank(), 2);
        assert_eq!(lat.basis_labels().unwrap()[0], "point");
        assert_eq!(parse_lattice(&lattice_value(&lat)).unwrap(), lat);
        // Bare matrix form.
        let bare = parse_lattice(&parse("[[1,0],[0,1]]")).unwrap();
        assert_eq!(bare.rank(), 2);
        // Wrong shapes are positional.
        let err = parse_lattice(&json!({"rank": 2, "gram": [[1, 0], [0]]})).unwrap_err();
        assert_eq!(err.path, "gram[1]");
        let err = parse_lattice(&json!({"rank": 3, "gram": [[1, 0], [0, 1]]})).unwrap_err();
        assert_eq!(err.path, "gram");
        let err = parse_lattice(&json!({"schema": 2, "rank": 1, "gram": [[1]]})).unwrap_err();
        assert_eq!(err.path, "schema");
    }

    #[test]
    fn quiver_round_trip_and_range_checks() {
        let doc = json!({"vertices": 3, "arrows": [[0, 1], [1, 2]]});
        let q = parse_quiver(&doc).unwrap();
        assert_eq!(q, Quiver::linear(3));
        assert_eq!(parse_quiver(&quiver_value(&q)).unwrap(), q);
        let err = parse_quiver(&json!({"vertices": 2, "arrows": [[0, 5]]})).unwrap_err();
        assert_eq!(err.path, "arrows[0][1]");
        let err = parse_quiver(&json!({"vertices": 2, "arrows": [[0]]})).unwrap_err();
        assert_eq!(err.path, "arrows[0]");
    }

    #[test]
    fn rep_round_trip_and_positional_errors() {
        let q = Quiver::linear(2);
        let doc = json!({"dims": [2, 1], "maps": [[["1/2", 0]]]});
        let rep = parse_rep(&doc, &q).unwrap();
        assert_eq!(rep.dims(), &[2, 1]);
        assert_eq!(*rep.maps()[0].get(0, 0), Rat::new(Int::from(1), Int::from(2)));
        let back = parse_rep(&rep_value(&rep), &q).unwrap();
        assert_eq!(back.dims(), rep.dims());
        assert_eq!(back.maps(), rep.maps());

        // Entry-level position: maps[0][0][1] holds a float.
        let bad = json!({"dims": [2, 1], "maps": [[[0, 1.5]]]});
        let err = parse_rep(&bad, &q).unwrap_err();
        assert_eq!(err.path, "maps[0][0][1]");
        // Row-length position.
        let bad = json!({"dims": [2, 1], "maps": [[[0]]]});
        let err = parse_rep(&bad, &q).unwrap_err();
        assert_eq!(err.path, "maps[0][0]");
        // Zero-dimensional ends take empty matrices.
        let zero = json!({"dims": [0, 1], "maps": [[[]]]});
        let rep = parse_rep(&zero, &q).unwrap();
        assert_eq!(rep.dims(), &[0, 1]);
    }

    #[test]
    fn tube_object_and_descriptor_round_trip() {
        let x = parse_tube_object(&json!({"base": 1, "length": 4}), 3).unwrap();
        assert_eq!((x.rank(), x.base(), x.length()), (3, 1, 4));
        let back = parse_tube_object(&tube_object_value(&x), 3).unwrap();
        assert_eq!(back, x);
        assert!(parse_tube_object(&json!({"base": 5, "length": 1}), 3).is_err());

        let d = parse_descriptor(&json!({
            "type": "sum",
            "parts": [
                {"type": "curve", "genus": 1},
                {"type": "tube", "rank": 2},
                {"type": "quiver", "vertices": 2, "arrows": [[0, 1]]},
            ],
        }))
        .unwrap();
        let v = descriptor_value(&d);
        let d2 = parse_descriptor(&v).unwrap();
        assert_eq!(format!("{d:?}"), format!("{d2:?}"));
        let err = parse_descriptor(&json!({"type": "plane"})).unwrap_err();
        assert_eq!(err.path, "type");
        let err = parse_descriptor(&json!({
            "type": "sum",
            "parts": [{"type": "curve", "genus": 1.5}],
        }))
        .unwrap_err();
        assert_eq!(err.path, "parts[0].genus");
    }

    #[test]
    fn emitted_numbers_are_bare_integers_when_integral() {
        assert_eq!(rat_value(&Rat::from_integer(Int::from(-3))).to_string(), "-3");
        assert_eq!(
            rat_value(&Rat::new(Int::from(2), Int::from(-6))).to_string(),
            "\"-1/3\""
        );
        let m = IntMatrix::from_i64(&[&[1, -2], &[0, 3]]);
        assert_eq!(int_matrix_value(&m).to_string(), "[[1,-2],[0,3]]");
    }
}
