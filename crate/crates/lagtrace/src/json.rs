//! JSON documents (`"schema": 1`).
//!
//! Coefficients are decimal strings, terms are listed in the ring's internal
//! order, and object keys are sorted, so output is byte-for-byte
//! reproducible. [`Document::from_json`] inverts [`Document::to_json`].

use serde_json::{json, Map, Value};

use lagtrace_core::derivations::{tensor_coordinates_of, Derivation};
use lagtrace_core::freegroup::{Ambient, GroupWord};
use lagtrace_core::groupring::{GroupRingElem, LaurentElem, Matrix, RingElem};
use lagtrace_core::johnson::JohnsonDegree;
use lagtrace_core::magnusrep::additive_form;
use lagtrace_core::tensorlie::{Alphabet, LiePoly, SymPoly};
use lagtrace_core::BigInt;

use crate::error::{CliError, CliResult};
use crate::suites::{CaseResult, Report};

pub const SCHEMA: u64 = 1;

/// Everything the CLI prints as JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Derivation(Derivation),
    Sym(SymPoly),
    Laurent(LaurentElem),
    GroupRing(GroupRingElem),
    LaurentMatrix(Matrix<LaurentElem>),
    GroupRingMatrix(Matrix<GroupRingElem>),
    /// Fox derivatives of every generator image with respect to `gen`.
    Fox {
        genus: usize,
        gen: usize,
        derivatives: Vec<GroupRingElem>,
    },
    Det(LaurentElem),
    Degree {
        degree: JohnsonDegree,
    },
    Basis {
        space: String,
        genus: usize,
        k: usize,
        elements: Vec<Derivation>,
    },
    Report(Report),
}

fn bad(message: impl Into<String>) -> CliError {
    CliError::Json(message.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> CliResult<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn str_field<'a>(obj: &'a Map<String, Value>, key: &str) -> CliResult<&'a str> {
    field(obj, key)?.as_str().ok_or_else(|| bad(format!("`{key}` must be a string")))
}

fn u64_field(obj: &Map<String, Value>, key: &str) -> CliResult<u64> {
    field(obj, key)?.as_u64().ok_or_else(|| bad(format!("`{key}` must be a non-negative integer")))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> CliResult<usize> {
    Ok(u64_field(obj, key)? as usize)
}

fn bool_field(obj: &Map<String, Value>, key: &str) -> CliResult<bool> {
    field(obj, key)?.as_bool().ok_or_else(|| bad(format!("`{key}` must be a boolean")))
}

fn array_field<'a>(obj: &'a Map<String, Value>, key: &str) -> CliResult<&'a Vec<Value>> {
    field(obj, key)?.as_array().ok_or_else(|| bad(format!("`{key}` must be an array")))
}

fn object(v: &Value) -> CliResult<&Map<String, Value>> {
    v.as_object().ok_or_else(|| bad("expected an object"))
}

fn coeff(v: &Value) -> CliResult<BigInt> {
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| bad(format!("coefficient {v} is not a decimal string")))
}

fn alphabet_json(a: Alphabet) -> Value {
    match a {
        Alphabet::Surface(g) => json!({"space": "H", "genus": g}),
        Alphabet::Handlebody(g) => json!({"space": "H'", "genus": g}),
    }
}

fn alphabet_from(v: &Value) -> CliResult<Alphabet> {
    let o = object(v)?;
    let g = usize_field(o, "genus")?;
    if !(2..=lagtrace_core::MAX_GENUS).contains(&g) {
        return Err(bad(format!("genus {g} out of range")));
    }
    match str_field(o, "space")? {
        "H" => Ok(Alphabet::Surface(g)),
        "H'" => Ok(Alphabet::Handlebody(g)),
        s => Err(bad(format!("unknown space `{s}`"))),
    }
}

fn exponents<T: TryFrom<i64>>(v: &Value, rank: usize) -> CliResult<Vec<T>> {
    let arr = v.as_array().ok_or_else(|| bad("exponents must be an array"))?;
    if arr.len() != rank {
        return Err(bad(format!("expected {rank} exponents, got {}", arr.len())));
    }
    arr.iter()
        .map(|x| x.as_i64().and_then(|x| T::try_from(x).ok()).ok_or_else(|| bad(format!("bad exponent {x}"))))
        .collect()
}

fn terms_json(terms: impl Iterator<Item = (Vec<i64>, String)>) -> Value {
    Value::Array(terms.map(|(e, c)| json!({"exponents": e, "coeff": c})).collect())
}

fn sym_json(p: &SymPoly) -> Value {
    json!({
        "alphabet": alphabet_json(p.alphabet()),
        "terms": terms_json(p.terms().iter().map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c.to_string()))),
        "text": p.render(),
    })
}

fn sym_from(o: &Map<String, Value>) -> CliResult<SymPoly> {
    let a = alphabet_from(field(o, "alphabet")?)?;
    let terms = array_field(o, "terms")?
        .iter()
        .map(|t| {
            let t = object(t)?;
            Ok((exponents::<u32>(field(t, "exponents")?, a.rank())?, coeff(field(t, "coeff")?)?))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(SymPoly::from_terms(a, terms))
}

fn laurent_json(x: &LaurentElem) -> Value {
    json!({
        "alphabet": alphabet_json(x.alphabet()),
        "terms": terms_json(x.terms().iter().map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c.to_string()))),
        "text": x.render(),
    })
}

fn laurent_from(o: &Map<String, Value>) -> CliResult<LaurentElem> {
    let a = alphabet_from(field(o, "alphabet")?)?;
    let terms = array_field(o, "terms")?
        .iter()
        .map(|t| {
            let t = object(t)?;
            Ok((exponents::<i32>(field(t, "exponents")?, a.rank())?, coeff(field(t, "coeff")?)?))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(LaurentElem::from_terms(a, terms))
}

fn group_json(ambient: Ambient, genus: usize) -> Value {
    let name = match ambient {
        Ambient::Surface => "pi",
        Ambient::Handlebody => "pi'",
    };
    json!({"group": name, "genus": genus})
}

fn group_from(v: &Value) -> CliResult<(Ambient, usize)> {
    let o = object(v)?;
    let g = usize_field(o, "genus")?;
    let amb = match str_field(o, "group")? {
        "pi" => Ambient::Surface,
        "pi'" => Ambient::Handlebody,
        s => Err(bad(format!("unknown group `{s}`")))?,
    };
    Ok((amb, g))
}

fn group_ring_json(x: &GroupRingElem) -> Value {
    let terms: Vec<Value> = x.terms().map(|(w, c)| json!({"word": w.to_string(), "coeff": c.to_string()})).collect();
    json!({"group": group_json(x.ambient(), x.genus()), "terms": terms})
}

fn group_ring_from(o: &Map<String, Value>) -> CliResult<GroupRingElem> {
    let (amb, g) = group_from(field(o, "group")?)?;
    let terms = array_field(o, "terms")?
        .iter()
        .map(|t| {
            let t = object(t)?;
            let w = GroupWord::parse(str_field(t, "word")?, amb, g).map_err(|e| bad(e.to_string()))?;
            Ok((w, coeff(field(t, "coeff")?)?))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(GroupRingElem::from_words(amb, g, terms)?)
}

fn matrix_json<T: RingElem>(m: &Matrix<T>, entry: impl Fn(&T) -> Value) -> Value {
    let rows: Vec<Value> = m.rows().iter().map(|r| Value::Array(r.iter().map(&entry).collect())).collect();
    json!({"rows": rows})
}

fn matrix_from<T: RingElem>(
    o: &Map<String, Value>,
    entry: impl Fn(&Map<String, Value>) -> CliResult<T>,
) -> CliResult<Matrix<T>> {
    let rows = array_field(o, "rows")?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("matrix rows must be arrays"))?
                .iter()
                .map(|x| entry(object(x)?))
                .collect::<CliResult<Vec<T>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Matrix::new(rows)?)
}

fn derivation_json(d: &Derivation) -> Value {
    let a = Alphabet::Surface(d.genus());
    let values: Map<String, Value> =
        d.values().iter().enumerate().map(|(i, v)| (a.letter_name(i), Value::String(v.render()))).collect();
    json!({"genus": d.genus(), "degree": d.degree(), "values": values})
}

fn derivation_from(o: &Map<String, Value>) -> CliResult<Derivation> {
    let g = usize_field(o, "genus")?;
    let k = usize_field(o, "degree")?;
    if !(2..=lagtrace_core::MAX_GENUS).contains(&g) {
        return Err(bad(format!("genus {g} out of range")));
    }
    let a = Alphabet::Surface(g);
    let mut values = vec![LiePoly::zero(a); 2 * g];
    for (name, v) in object(field(o, "values")?)? {
        let pos = a.parse_letter(name).ok_or_else(|| bad(format!("unknown generator `{name}`")))?;
        let s = v.as_str().ok_or_else(|| bad("derivation values must be bracket strings"))?;
        values[pos] = LiePoly::parse(s, a).map_err(|e| bad(format!("{name}: {e}")))?;
    }
    Ok(Derivation::new(g, k, values)?)
}

fn report_json(r: &Report) -> Value {
    let results: Vec<Value> = r
        .cases
        .iter()
        .map(|c| {
            json!({
                "claim": c.claim,
                "inputs": {"seed": c.seed, "label": c.label, "word_length": c.word_length},
                "lhs": c.lhs,
                "rhs": c.rhs,
                "equal": c.equal,
                "wall_time_ms": c.wall_time_ms,
            })
        })
        .collect();
    json!({
        "suite": r.suite,
        "genus": r.genus,
        "seed": r.seed,
        "count": r.count,
        "passed": r.passed(),
        "results": results,
    })
}

fn report_from(o: &Map<String, Value>) -> CliResult<Report> {
    let cases = array_field(o, "results")?
        .iter()
        .map(|c| {
            let c = object(c)?;
            let inputs = object(field(c, "inputs")?)?;
            Ok(CaseResult {
                claim: str_field(c, "claim")?.to_string(),
                seed: u64_field(inputs, "seed")?,
                label: str_field(inputs, "label")?.to_string(),
                word_length: usize_field(inputs, "word_length")?,
                lhs: str_field(c, "lhs")?.to_string(),
                rhs: str_field(c, "rhs")?.to_string(),
                equal: bool_field(c, "equal")?,
                wall_time_ms: field(c, "wall_time_ms")?
                    .as_f64()
                    .ok_or_else(|| bad("`wall_time_ms` must be a number"))?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let r = Report {
        suite: str_field(o, "suite")?.to_string(),
        genus: usize_field(o, "genus")?,
        seed: u64_field(o, "seed")?,
        count: usize_field(o, "count")?,
        cases,
    };
    if bool_field(o, "passed")? != r.passed() {
        return Err(bad("`passed` disagrees with the results"));
    }
    Ok(r)
}

impl Document {
    fn kind(&self) -> &'static str {
        match self {
            Document::Derivation(_) => "derivation",
            Document::Sym(_) => "sym",
            Document::Laurent(_) => "laurent",
            Document::GroupRing(_) => "group_ring",
            Document::LaurentMatrix(_) => "laurent_matrix",
            Document::GroupRingMatrix(_) => "group_ring_matrix",
            Document::Fox { .. } => "fox",
            Document::Det(_) => "det",
            Document::Degree { .. } => "degree",
            Document::Basis { .. } => "basis",
            Document::Report(_) => "report",
        }
    }

    pub fn to_json(&self) -> Value {
        let body = match self {
            Document::Derivation(d) => derivation_json(d),
            Document::Sym(p) => sym_json(p),
            Document::Laurent(x) => laurent_json(x),
            Document::GroupRing(x) => group_ring_json(x),
            Document::LaurentMatrix(m) => matrix_json(m, laurent_json),
            Document::GroupRingMatrix(m) => matrix_json(m, group_ring_json),
            Document::Fox { genus, gen, derivatives } => {
                let a = Alphabet::Surface(*genus);
                let images: Map<String, Value> =
                    derivatives.iter().enumerate().map(|(j, x)| (a.letter_name(j), group_ring_json(x))).collect();
                json!({"genus": genus, "gen": a.letter_name(*gen), "derivatives": images})
            }
            Document::Det(x) => {
                let additive = additive_form(x).map(|e| {
                    let v: Vec<BigInt> = e.into_iter().map(BigInt::from).collect();
                    lagtrace_core::groupring::render_additive(x.alphabet(), &v)
                });
                json!({"det": laurent_json(x), "additive": additive})
            }
            Document::Degree { degree } => match degree {
                JohnsonDegree::Degree(k) => json!({"degree": k}),
                JohnsonDegree::Exceeds(n) => json!({"exceeds": n}),
            },
            Document::Basis { space, genus, k, elements } => {
                let coords: Vec<Vec<String>> =
                    elements.iter().map(|d| tensor_coordinates_of(d).iter().map(|c| c.to_string()).collect()).collect();
                let elems: Vec<Value> = elements.iter().map(derivation_json).collect();
                json!({
                    "space": space,
                    "genus": genus,
                    "k": k,
                    "dimension": elements.len(),
                    "coordinates": coords,
                    "elements": elems,
                })
            }
            Document::Report(r) => report_json(r),
        };
        let mut obj = match body {
            Value::Object(o) => o,
            _ => unreachable!("bodies are objects"),
        };
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("type".into(), json!(self.kind()));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> CliResult<Document> {
        let o = object(v)?;
        let schema = u64_field(o, "schema")?;
        if schema != SCHEMA {
            return Err(bad(format!("unsupported schema {schema}")));
        }
        let doc = match str_field(o, "type")? {
            "derivation" => Document::Derivation(derivation_from(o)?),
            "sym" => Document::Sym(sym_from(o)?),
            "laurent" => Document::Laurent(laurent_from(o)?),
            "group_ring" => Document::GroupRing(group_ring_from(o)?),
            "laurent_matrix" => Document::LaurentMatrix(matrix_from(o, laurent_from)?),
            "group_ring_matrix" => Document::GroupRingMatrix(matrix_from(o, group_ring_from)?),
            "fox" => {
                let genus = usize_field(o, "genus")?;
                let a = Alphabet::Surface(genus);
                let gen = a.parse_letter(str_field(o, "gen")?).ok_or_else(|| bad("unknown generator in `gen`"))?;
                let mut derivatives = vec![None; 2 * genus];
                for (name, x) in object(field(o, "derivatives")?)? {
                    let j = a.parse_letter(name).ok_or_else(|| bad(format!("unknown generator `{name}`")))?;
                    derivatives[j] = Some(group_ring_from(object(x)?)?);
                }
                let derivatives = derivatives
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad("a generator image is missing"))?;
                Document::Fox { genus, gen, derivatives }
            }
            "det" => Document::Det(laurent_from(object(field(o, "det")?)?)?),
            "degree" => {
                let degree = if let Some(k) = o.get("degree") {
                    JohnsonDegree::Degree(k.as_u64().ok_or_else(|| bad("bad degree"))? as usize)
                } else {
                    JohnsonDegree::Exceeds(usize_field(o, "exceeds")?)
                };
                Document::Degree { degree }
            }
            "basis" => {
                let elements = array_field(o, "elements")?
                    .iter()
                    .map(|e| derivation_from(object(e)?))
                    .collect::<CliResult<Vec<_>>>()?;
                let coords = array_field(o, "coordinates")?;
                if coords.len() != elements.len() {
                    return Err(bad("coordinate rows do not match elements"));
                }
                for (row, d) in coords.iter().zip(&elements) {
                    let row = row
                        .as_array()
                        .ok_or_else(|| bad("coordinate rows must be arrays"))?
                        .iter()
                        .map(coeff)
                        .collect::<CliResult<Vec<_>>>()?;
                    if row != tensor_coordinates_of(d) {
                        return Err(bad("coordinates disagree with elements"));
                    }
                }
                let space = str_field(o, "space")?.to_string();
                if space != "D" && space != "G" {
                    return Err(bad(format!("unknown space `{space}`")));
                }
                Document::Basis { space, genus: usize_field(o, "genus")?, k: usize_field(o, "k")?, elements }
            }
            "report" => Document::Report(report_from(o)?),
            t => return Err(bad(format!("unknown document type `{t}`"))),
        };
        Ok(doc)
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }

    pub fn parse_str(s: &str) -> CliResult<Document> {
        let v: Value = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
        Document::from_json(&v)
    }
}
