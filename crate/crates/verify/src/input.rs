//! User-supplied documents: a surface, generators, a field and optionally a
//! descent datum on the Fermat cubic.

use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

use cubic_core::descent::{orbits, twisted_aut_group, twisted_line_action, validate_cocycle, Cocycle, GaloisQuotient};
use cubic_core::exactnum::{field_contains, CycNum, FieldHandle};
use cubic_core::matforms::{generate_group, is_smooth, parse_cyc, projective_invariance, projectively_definable_over, CubicForm, Mat4, ProjMat};
use cubic_core::models::{self, FermatAut};
use cubic_core::rationality::assess_twist;

use crate::report::{Check, ScenarioResult};

/// A schema violation, located by JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub pointer: String,
    pub msg: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{at}: {}", self.msg)
    }
}

impl std::error::Error for InputError {}

fn err<T>(pointer: &str, msg: impl fmt::Display) -> Result<T, InputError> {
    Err(InputError { pointer: pointer.into(), msg: msg.to_string() })
}

pub struct Descent {
    pub quotient: GaloisQuotient,
    pub cocycle: Cocycle,
}

pub struct InputDoc {
    pub surface: CubicForm,
    pub generators: Vec<ProjMat>,
    pub field: FieldHandle,
    pub descent: Option<Descent>,
}

pub fn parse_input_doc(path: &Path) -> Result<InputDoc, InputError> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return err("", format!("cannot read {}: {e}", path.display())),
    };
    parse_input_str(&text)
}

pub fn parse_input_str(text: &str) -> Result<InputDoc, InputError> {
    let v: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return err("", format!("not JSON: {e}")),
    };
    let Some(obj) = v.as_object() else { return err("", "expected an object") };
    for key in obj.keys() {
        if !["surface", "generators", "field", "descent"].contains(&key.as_str()) {
            return err(&format!("/{key}"), "unknown key");
        }
    }
    let surface = match obj.get("surface").and_then(Value::as_str) {
        Some(s) => CubicForm::parse(s).or_else(|e| err("/surface", e))?,
        None => return err("/surface", "expected a polynomial string"),
    };
    let Some(gens) = obj.get("generators").and_then(Value::as_array) else {
        return err("/generators", "expected an array");
    };
    let generators = gens
        .iter()
        .enumerate()
        .map(|(i, g)| parse_generator(g, &format!("/generators/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let field = match obj.get("field").and_then(Value::as_str) {
        Some(s) => FieldHandle::by_name(s).or_else(|e| err("/field", e))?,
        None => return err("/field", "expected a field name"),
    };
    let descent = match obj.get("descent") {
        None | Some(Value::Null) => None,
        Some(d) => {
            if models::fermat().poly().proportional_to(surface.poly()).is_none() {
                return err("/descent", "descent data is supported only on the Fermat cubic");
            }
            Some(parse_descent(d)?)
        }
    };
    Ok(InputDoc { surface, generators, field, descent })
}

fn parse_entry(v: &Value, at: &str) -> Result<CycNum, InputError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(CycNum::from_int(k)),
            None => err(at, "numbers must be integers; write fractions as strings"),
        },
        Value::String(s) => parse_cyc(s).or_else(|e| err(at, e)),
        _ => err(at, "expected a number or a string"),
    }
}

fn parse_generator(v: &Value, at: &str) -> Result<ProjMat, InputError> {
    match v {
        Value::String(s) => FermatAut::parse(s).map(|a| a.to_projmat()).or_else(|e| err(at, e)),
        Value::Array(rows) => {
            if rows.len() != 4 {
                return err(at, "expected 4 rows");
            }
            let mut out = Vec::new();
            for (r, row) in rows.iter().enumerate() {
                let at_r = format!("{at}/{r}");
                let Some(row) = row.as_array().filter(|x| x.len() == 4) else { return err(&at_r, "expected 4 entries") };
                out.push(row.iter().enumerate().map(|(c, e)| parse_entry(e, &format!("{at_r}/{c}"))).collect::<Result<Vec<_>, _>>()?);
            }
            let m = Mat4::from_rows(&out).or_else(|e| err(at, e))?;
            ProjMat::new(m).or_else(|e| err(at, e))
        }
        _ => err(at, "expected a matrix or an automorphism name"),
    }
}

fn as_usize(v: Option<&Value>, at: &str) -> Result<usize, InputError> {
    v.and_then(Value::as_u64).map(|n| n as usize).map_or_else(|| err(at, "expected a nonnegative integer"), Ok)
}

fn parse_descent(d: &Value) -> Result<Descent, InputError> {
    let Some(q) = d.get("quotient") else { return err("/descent/quotient", "missing") };
    let quotient = if let Some(table) = q.get("table") {
        let table: Vec<Vec<usize>> = serde_json::from_value(table.clone()).or_else(|e| err("/descent/quotient/table", e))?;
        let char24: Vec<u32> = match q.get("char24") {
            Some(c) => serde_json::from_value(c.clone()).or_else(|e| err("/descent/quotient/char24", e))?,
            None => return err("/descent/quotient/char24", "missing"),
        };
        GaloisQuotient::new(table, char24).or_else(|e| err("/descent/quotient", e))?
    } else {
        let n = as_usize(q.get("order"), "/descent/quotient/order")?;
        let unit = as_usize(q.get("unit"), "/descent/quotient/unit")?;
        GaloisQuotient::cyclic(n, unit as u32).or_else(|e| err("/descent/quotient", e))?
    };
    let Some(names) = d.get("cocycle").and_then(Value::as_array) else { return err("/descent/cocycle", "expected an array") };
    let mut values = Vec::new();
    for (i, n) in names.iter().enumerate() {
        let at = format!("/descent/cocycle/{i}");
        let Some(s) = n.as_str() else { return err(&at, "expected an automorphism name") };
        values.push(FermatAut::parse(s).or_else(|e| err(&at, e))?);
    }
    if values.len() != quotient.order() {
        return err("/descent/cocycle", format!("expected {} values, one per quotient element", quotient.order()));
    }
    Ok(Descent { quotient, cocycle: Cocycle(values) })
}

/// The checks run on a parsed document, as a scenario named "input".
pub fn check_input(doc: &InputDoc) -> cubic_core::Result<ScenarioResult> {
    let k = &doc.field;
    let smooth = is_smooth(&doc.surface)?;
    let mut checks = vec![
        Check::new("smooth", "the surface is smooth", smooth, Value::Null),
        Check::new(
            "surface-over-k",
            &format!("the surface has coefficients in {}", k.name()),
            doc.surface.poly().terms().all(|(_, c)| field_contains(k, c)),
            Value::Null,
        ),
    ];
    let mut preserved = true;
    for (i, g) in doc.generators.iter().enumerate() {
        let ok = projective_invariance(&doc.surface, g).is_some();
        preserved &= ok;
        checks.push(Check::new(
            &format!("generator-{i}-preserves"),
            "the generator maps the surface to itself up to a scalar",
            ok,
            json!(g.to_string()),
        ));
        if smooth && ok {
            checks.push(Check::new(
                &format!("generator-{i}-definable"),
                &format!("the generator is similar to an element of PGL4({})", k.name()),
                projectively_definable_over(g, k)?,
                Value::Null,
            ));
        }
    }
    // automorphism groups of smooth cubic surfaces are finite; otherwise skip
    if smooth && preserved {
        let order = generate_group(&doc.generators, 51840)?.len();
        checks.push(Check::new("group-order", "order of the generated group in PGL4", true, json!(order)));
    }
    if let Some(d) = &doc.descent {
        let valid = validate_cocycle(&d.quotient, &d.cocycle);
        checks.push(Check::new("cocycle", "the cocycle identity holds for every pair", valid, Value::Null));
        if valid {
            let t = twisted_aut_group(&d.quotient, &d.cocycle)?;
            let act = twisted_line_action(&d.quotient, &d.cocycle)?;
            let orb: Vec<Vec<String>> = orbits(&act).iter().map(|o| o.iter().map(ToString::to_string).collect()).collect();
            checks.push(Check::new("twisted-group", "automorphisms defined over k after twisting", true, json!(t.elements.len())));
            checks.push(Check::new("orbits", "Galois orbits on the 27 lines after twisting", true, json!(orb)));
            checks.push(Check::new("verdict", "rationality evidence from the line orbits", true, json!(assess_twist(&act))));
        }
    }
    Ok(ScenarioResult::from_checks("input", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointer_locates_bad_entry() {
        let doc = r#"{"surface":"x0^3+x1^3+x2^3+x3^3","generators":[[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,"q"]]],"field":"Q"}"#;
        assert_eq!(parse_input_str(doc).err().unwrap().pointer, "/generators/0/3/3");
    }

    #[test]
    fn descent_needs_fermat() {
        let doc = r#"{"surface":"x0^3+x1^3+x2^3+2*x3^3","generators":[],"field":"Q","descent":{"quotient":{"order":1,"unit":1},"cocycle":["id"]}}"#;
        assert_eq!(parse_input_str(doc).err().unwrap().pointer, "/descent");
    }
}
