//! Declarative job files: JSON schema and conversion into engine objects.

use contralg::coeff::{field_make, Field, FieldSpec, Scalar};
use contralg::hopf::HopfData;
use contralg::liecon::LieData;
use contralg::parse::parse_poly;
use contralg::poly::{MonomialOrder, Poly, Ring};
use contralg::presentations::{validate_involution, FPAlgebra, Involution};
use contralg::{Error, GroebnerConfig, Result};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub field: FieldSpecJson,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub involution: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub involution2: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub hopf: Option<HopfJson>,
    #[serde(default)]
    pub lie: Option<LieJson>,
    #[serde(default)]
    pub action: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default)]
    pub params: ParamsJson,
    #[serde(default)]
    pub verify: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpecJson {
    Rationals,
    PrimeField {
        p: u64,
    },
    QuadraticExt {
        base: Box<FieldSpecJson>,
        t0: String,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub comul: BTreeMap<String, String>,
    pub counit: BTreeMap<String, String>,
    pub antipode: BTreeMap<String, String>,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieJson {
    pub basis: Vec<String>,
    pub brackets: BTreeMap<String, String>,
    pub theta: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsJson {
    #[serde(default)]
    pub t0: Option<String>,
    #[serde(default)]
    pub alpha: Option<String>,
    #[serde(default)]
    pub descent_t0: Option<String>,
    #[serde(default)]
    pub localize_f: Option<String>,
    #[serde(default)]
    pub tensor_with: Option<TensorWithJson>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorWithJson {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub involution: Option<BTreeMap<String, String>>,
}

/// A fully validated job, ready for the engine.
pub struct Loaded {
    pub name: String,
    pub field: Field,
    pub algebra: FPAlgebra,
    pub theta: Involution,
    pub theta2: Option<Involution>,
    pub hopf: Option<HopfData>,
    pub hopf_matrix: Option<Vec<Vec<usize>>>,
    pub lie: Option<LieData>,
    pub action: Option<Vec<Vec<Poly>>>,
    pub t0: Scalar,
    pub alpha: Scalar,
    pub descent_t0: Scalar,
    pub localize_f: Option<Poly>,
    pub tensor_with: Option<(FPAlgebra, Involution)>,
    pub verify: Vec<String>,
}

const RESERVED: [&str; 4] = ["t", "s", "u", "i"];

fn check_names(vars: &[String]) -> Result<()> {
    for v in vars {
        let mut chars = v.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Invalid(format!("invalid variable name '{v}'")));
        }
        if RESERVED.contains(&v.as_str()) {
            return Err(Error::Invalid(format!(
                "variable name '{v}' is reserved (t, s, u, i)"
            )));
        }
    }
    let mut sorted = vars.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != vars.len() {
        return Err(Error::Invalid("duplicate variable names".into()));
    }
    Ok(())
}

fn field_spec(json: &FieldSpecJson) -> Result<FieldSpec> {
    Ok(match json {
        FieldSpecJson::Rationals => FieldSpec::Rationals,
        FieldSpecJson::PrimeField { p } => FieldSpec::PrimeField(*p),
        FieldSpecJson::QuadraticExt { base, t0 } => {
            let base_spec = field_spec(base)?;
            let base_field = field_make(base_spec.clone())?;
            let t0 = parse_scalar(t0, &base_field)?;
            FieldSpec::QuadraticExt {
                base: Box::new(base_spec),
                t0,
            }
        }
    })
}

/// Parse a scalar through the polynomial grammar in a variable-free ring.
pub fn parse_scalar(input: &str, field: &Field) -> Result<Scalar> {
    let ring = Ring::new(field.clone(), vec![], MonomialOrder::GrevLex);
    let p = parse_poly(input, &ring)?;
    Ok(match p.leading() {
        None => field.zero(),
        Some((c, _)) => c.clone(),
    })
}

fn image_map(
    map: &BTreeMap<String, String>,
    source_vars: &[String],
    target: &Arc<Ring>,
    what: &str,
) -> Result<Vec<Poly>> {
    for key in map.keys() {
        if !source_vars.contains(key) {
            return Err(Error::Invalid(format!("{what}: unknown variable '{key}'")));
        }
    }
    source_vars
        .iter()
        .map(|v| match map.get(v) {
            Some(s) => parse_poly(s, target),
            None => Err(Error::MissingImage(format!("{what}: no image for '{v}'"))),
        })
        .collect()
}

fn load_involution(
    a: &FPAlgebra,
    map: &BTreeMap<String, String>,
    cfg: &GroebnerConfig,
) -> Result<Involution> {
    let images = image_map(map, &a.ring.vars, &a.ring, "involution")?;
    validate_involution(a, images, cfg)
}

fn load_lie(json: &LieJson, field: &Field) -> Result<LieData> {
    check_names(&json.basis)?;
    let n = json.basis.len();
    let ring = Ring::new(field.clone(), json.basis.clone(), MonomialOrder::GrevLex);
    let linear_coords = |src: &str, what: &str| -> Result<Vec<Scalar>> {
        let p = parse_poly(src, &ring)?;
        if p.total_degree() > 1 || p.terms.iter().any(|(_, m)| m.is_one()) {
            return Err(Error::Invalid(format!(
                "{what} must be a linear combination of basis elements: '{src}'"
            )));
        }
        let mut coords = vec![field.zero(); n];
        for (c, m) in &p.terms {
            let idx = m.0.iter().position(|&e| e == 1).expect("linear term");
            coords[idx] = c.clone();
        }
        Ok(coords)
    };
    let zero = || vec![field.zero(); n];
    let mut brackets = vec![vec![zero(); n]; n];
    let mut seen = vec![vec![false; n]; n];
    for (key, value) in &json.brackets {
        let parts: Vec<&str> = key.split(',').map(|s| s.trim()).collect();
        if parts.len() != 2 {
            return Err(Error::Invalid(format!("bracket key '{key}' must be 'x,y'")));
        }
        let i = json
            .basis
            .iter()
            .position(|b| b == parts[0])
            .ok_or_else(|| Error::Invalid(format!("unknown basis element '{}'", parts[0])))?;
        let j = json
            .basis
            .iter()
            .position(|b| b == parts[1])
            .ok_or_else(|| Error::Invalid(format!("unknown basis element '{}'", parts[1])))?;
        let coords = linear_coords(value, "bracket")?;
        if seen[i][j] {
            return Err(Error::Invalid(format!("duplicate bracket for '{key}'")));
        }
        brackets[i][j] = coords.clone();
        seen[i][j] = true;
        if !seen[j][i] {
            brackets[j][i] = coords.iter().map(|c| field.neg(c)).collect();
            seen[j][i] = true;
        }
    }
    let mut theta = vec![zero(); n];
    for (j, label) in json.basis.iter().enumerate() {
        let src = json
            .theta
            .get(label)
            .ok_or_else(|| Error::MissingImage(format!("lie theta: no image for '{label}'")))?;
        let coords = linear_coords(src, "lie theta")?;
        for (r, row) in theta.iter_mut().enumerate() {
            row[j] = coords[r].clone();
        }
    }
    let data = LieData {
        field: field.clone(),
        labels: json.basis.clone(),
        brackets,
        theta,
    };
    data.validate()?;
    Ok(data)
}

pub fn load(spec: &JobSpec, cfg: &GroebnerConfig) -> Result<Loaded> {
    check_names(&spec.vars)?;
    let field = field_make(field_spec(&spec.field)?)?;
    let ring = Ring::new(field.clone(), spec.vars.clone(), MonomialOrder::GrevLex);
    let relations = spec
        .relations
        .iter()
        .map(|s| parse_poly(s, &ring))
        .collect::<Result<Vec<_>>>()?;
    let algebra = FPAlgebra::new(ring.clone(), relations);

    let theta = match &spec.involution {
        Some(map) => load_involution(&algebra, map, cfg)?,
        None => Involution::identity(&algebra),
    };
    let theta2 = match &spec.involution2 {
        Some(map) => Some(load_involution(&algebra, map, cfg)?),
        None => None,
    };

    let hopf = match &spec.hopf {
        Some(h) => {
            let square = contralg::presentations::tensor(&algebra, &algebra)?;
            let comul = image_map(
                &h.comul,
                &spec.vars,
                &square.algebra.ring,
                "comultiplication",
            )?;
            let mut counit = Vec::with_capacity(spec.vars.len());
            for v in &spec.vars {
                let s = h
                    .counit
                    .get(v)
                    .ok_or_else(|| Error::MissingImage(format!("counit: no value for '{v}'")))?;
                counit.push(parse_scalar(s, &field)?);
            }
            let antipode = image_map(&h.antipode, &spec.vars, &ring, "antipode")?;
            Some(HopfData::new(algebra.clone(), comul, counit, antipode)?)
        }
        None => None,
    };
    let hopf_matrix = match spec.hopf.as_ref().and_then(|h| h.matrix.as_ref()) {
        Some(rows) => {
            let n = rows.len();
            let mut out = Vec::with_capacity(n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::Invalid("generator matrix must be square".into()));
                }
                let mut r = Vec::with_capacity(n);
                for name in row {
                    let idx = ring.var_index(name).ok_or_else(|| {
                        Error::Invalid(format!("matrix entry '{name}' is not a variable"))
                    })?;
                    r.push(idx);
                }
                out.push(r);
            }
            Some(out)
        }
        None => None,
    };

    let lie = match &spec.lie {
        Some(l) => Some(load_lie(l, &field)?),
        None => None,
    };

    let action = match (&spec.action, &lie) {
        (Some(map), Some(l)) => {
            let mut rows = Vec::with_capacity(l.labels.len());
            for label in &l.labels {
                let imgs = map.get(label).ok_or_else(|| {
                    Error::MissingImage(format!("action: no derivation for '{label}'"))
                })?;
                rows.push(image_map(imgs, &spec.vars, &ring, "action")?);
            }
            Some(rows)
        }
        (Some(_), None) => {
            return Err(Error::Invalid("action requires lie data".into()));
        }
        _ => None,
    };

    let scalar_or = |src: &Option<String>, default: i64| -> Result<Scalar> {
        match src {
            Some(s) => parse_scalar(s, &field),
            None => Ok(field.from_i64(default)),
        }
    };
    let t0 = scalar_or(&spec.params.t0, 1)?;
    let alpha = scalar_or(&spec.params.alpha, 1)?;
    let descent_t0 = scalar_or(&spec.params.descent_t0, 2)?;
    let localize_f = match &spec.params.localize_f {
        Some(s) => Some(parse_poly(s, &ring)?),
        None => None,
    };
    let tensor_with = match &spec.params.tensor_with {
        Some(t) => {
            check_names(&t.vars)?;
            let bring = Ring::new(field.clone(), t.vars.clone(), MonomialOrder::GrevLex);
            let rels = t
                .relations
                .iter()
                .map(|s| parse_poly(s, &bring))
                .collect::<Result<Vec<_>>>()?;
            let b = FPAlgebra::new(bring, rels);
            let eta = match &t.involution {
                Some(map) => load_involution(&b, map, cfg)?,
                None => Involution::identity(&b),
            };
            Some((b, eta))
        }
        None => None,
    };

    Ok(Loaded {
        name: spec.name.clone().unwrap_or_else(|| "job".into()),
        field,
        algebra,
        theta,
        theta2,
        hopf,
        hopf_matrix,
        lie,
        action,
        t0,
        alpha,
        descent_t0,
        localize_f,
        tensor_with,
        verify: spec.verify.clone(),
    })
}

pub fn parse_job(text: &str) -> Result<JobSpec> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("job file: {e}")))
}
