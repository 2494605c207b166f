//! JSON encoding of domain specifications.
//!
//! The schema, dispatched on `"type"`:
//!
//! ```text
//! {"type":"sphere","center":[...],"radius":r}
//! {"type":"halfspace","normal":[...],"offset":o}
//! {"type":"points","points":[[...],...]}
//! {"type":"chain","vertices":[[...],...],"closed":bool}
//! ```
//!
//! An optional top-level `"interior":"inside"|"outside"` tags which side of
//! the boundary is the domain. Unknown keys are rejected.

use crate::error::{Error, Result};
use crate::geom::{BoundarySet, DomainSpec, InteriorSide, Point};
use serde_json::Value;

pub fn domain_from_json_str(s: &str) -> Result<DomainSpec> {
    let value: Value = serde_json::from_str(s).map_err(|e| Error::MalformedJson {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    domain_from_value(&value)
}

pub fn domain_from_value(value: &Value) -> Result<DomainSpec> {
    let obj = value
        .as_object()
        .ok_or_else(|| invalid("domain", "<root>", "expected a JSON object"))?;
    let mut rest = obj.clone();
    let interior = match rest.remove("interior") {
        None => None,
        Some(Value::String(s)) => match s.as_str() {
            "inside" => Some(InteriorSide::Inside),
            "outside" => Some(InteriorSide::Outside),
            other => {
                return Err(invalid(
                    "domain",
                    "interior",
                    &format!("expected \"inside\" or \"outside\", got {other:?}"),
                ))
            }
        },
        Some(_) => return Err(invalid("domain", "interior", "expected a string")),
    };
    let boundary = boundary_from_value(&Value::Object(rest))?;
    Ok(DomainSpec::new(boundary, interior))
}

pub fn boundary_from_value(value: &Value) -> Result<BoundarySet> {
    let obj = value
        .as_object()
        .ok_or_else(|| invalid("boundary", "<root>", "expected a JSON object"))?;
    let ty = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| missing("boundary", "type"))?;
    let allowed: &[&str] = match ty {
        "sphere" => &["type", "center", "radius"],
        "halfspace" => &["type", "normal", "offset"],
        "points" => &["type", "points"],
        "chain" => &["type", "vertices", "closed"],
        other => {
            return Err(invalid(
                "boundary",
                "type",
                &format!("unknown boundary type {other:?}"),
            ))
        }
    };
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::UnknownKey {
                key: key.clone(),
                context: format!("boundary type {ty:?}"),
            });
        }
    }
    match ty {
        "sphere" => {
            let center = point_field(obj, "sphere", "center")?;
            let radius = float_field(obj, "sphere", "radius")?;
            BoundarySet::sphere(center, radius)
        }
        "halfspace" => {
            let normal = point_field(obj, "halfspace", "normal")?;
            let offset = float_field(obj, "halfspace", "offset")?;
            BoundarySet::half_space(normal, offset)
        }
        "points" => {
            let points = point_list_field(obj, "points", "points")?;
            BoundarySet::finite(points)
        }
        "chain" => {
            let vertices = point_list_field(obj, "chain", "vertices")?;
            let closed = obj
                .get("closed")
                .ok_or_else(|| missing("chain", "closed"))?
                .as_bool()
                .ok_or_else(|| invalid("chain", "closed", "expected a bool"))?;
            BoundarySet::chain(vertices, closed)
        }
        _ => unreachable!(),
    }
}

fn float_field(obj: &serde_json::Map<String, Value>, ctx: &str, key: &str) -> Result<f64> {
    obj.get(key)
        .ok_or_else(|| missing(ctx, key))?
        .as_f64()
        .ok_or_else(|| invalid(ctx, key, "expected a number"))
}

fn point_field(obj: &serde_json::Map<String, Value>, ctx: &str, key: &str) -> Result<Point> {
    let arr = obj
        .get(key)
        .ok_or_else(|| missing(ctx, key))?
        .as_array()
        .ok_or_else(|| invalid(ctx, key, "expected an array of numbers"))?;
    parse_point(arr, ctx, key)
}

fn point_list_field(
    obj: &serde_json::Map<String, Value>,
    ctx: &str,
    key: &str,
) -> Result<Vec<Point>> {
    let arr = obj
        .get(key)
        .ok_or_else(|| missing(ctx, key))?
        .as_array()
        .ok_or_else(|| invalid(ctx, key, "expected an array of points"))?;
    arr.iter()
        .map(|v| {
            let coords = v
                .as_array()
                .ok_or_else(|| invalid(ctx, key, "expected an array of arrays"))?;
            parse_point(coords, ctx, key)
        })
        .collect()
}

fn parse_point(arr: &[Value], ctx: &str, key: &str) -> Result<Point> {
    let coords: Vec<f64> = arr
        .iter()
        .map(|v| {
            v.as_f64()
                .ok_or_else(|| invalid(ctx, key, "expected numbers"))
        })
        .collect::<Result<_>>()?;
    Point::new(coords)
}

fn missing(ctx: &str, key: &str) -> Error {
    Error::MissingKey {
        key: key.to_string(),
        context: ctx.to_string(),
    }
}

fn invalid(ctx: &str, key: &str, message: &str) -> Error {
    Error::InvalidValue {
        key: key.to_string(),
        context: ctx.to_string(),
        message: message.to_string(),
    }
}
