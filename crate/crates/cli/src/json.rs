//! JSON encodings shared by the subcommands. Exact rationals are always
//! `"num/den"` strings.

use hypertile::kspec::Exact;
use hypertile::tiler::GreedyStop;
use hypertile::{KCopy, KSpec, Rational, Tiling, TypeClass};
use serde_json::{json, Value};

pub fn rat(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn exact(x: &Exact) -> Value {
    match x {
        Exact::Rational(r) => json!({"kind": "rational", "value": rat(r), "approx": x.to_f64()}),
        Exact::SixMinusFourSqrt2 => json!({"kind": "six_minus_four_sqrt2", "approx": x.to_f64()}),
    }
}

pub fn type_class(t: &TypeClass) -> Value {
    match t {
        TypeClass::Type0 => json!(0),
        TypeClass::TypeD(d) => json!(d),
    }
}

pub fn spec(s: &KSpec) -> Value {
    json!({
        "a": s.a, "b": s.b, "c": s.c, "k": s.k, "g": s.g, "d": s.d,
        "type": type_class(&s.type_class),
    })
}

pub fn copy(c: &KCopy) -> Value {
    json!([c.class(0), c.class(1), c.class(2)])
}

pub fn tiling(t: &Tiling) -> Value {
    Value::Array(t.copies().iter().map(copy).collect())
}

pub fn stop(s: &GreedyStop) -> &'static str {
    match s {
        GreedyStop::BelowThreshold => "below_threshold",
        GreedyStop::InsufficientVertices => "insufficient_vertices",
        GreedyStop::Stalled => "stalled",
    }
}
