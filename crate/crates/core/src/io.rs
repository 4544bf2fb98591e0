//! Builtin addressing (`name:params@FIELD`) and the JSON document formats for
//! Hopf algebras, representations and plain algebras.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::builtins::{cyclic, dihedral, gr_uq_sl2, group_algebra, symmetric3, taft};
use crate::hopf::{compute_antipode, drinfeld_double, dual_hopf, HopfAlgebra, RMatrix};
use crate::linalg::{Matrix, SparseTensor3};
use crate::modalg::FDAlgebra;
use crate::rep::Representation;

/// A builtin generator with its parameters; the field is carried separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinSpec {
    Group(Vec<Vec<usize>>),
    Cyclic(usize),
    Dihedral(usize),
    Sym3,
    Sweedler,
    /// q as a scalar string, or `None` for the first primitive n-th root.
    Taft(usize, Option<String>),
    GrUqSl2(usize, Option<String>),
    Double(Box<BuiltinSpec>),
    Dual(Box<BuiltinSpec>),
    /// k[x]/(x^n), an algebra without a Hopf structure.
    Truncated(usize),
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

/// Splits `expr@FIELD` at the last `@` outside parentheses.
fn split_field(text: &str) -> (&str, Option<&str>) {
    let mut depth = 0i32;
    let mut at = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '@' if depth == 0 => at = Some(i),
            _ => {}
        }
    }
    match at {
        Some(i) => (&text[..i], Some(&text[i + 1..])),
        None => (text, None),
    }
}

impl BuiltinSpec {
    /// Parses an address without its field suffix.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        for (prefix, wrap) in [("double(", true), ("dual(", false)] {
            if let Some(inner) = t.strip_prefix(prefix) {
                let inner = inner
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {t:?}")))?;
                let b = Box::new(Self::parse(inner)?);
                return Ok(if wrap { BuiltinSpec::Double(b) } else { BuiltinSpec::Dual(b) });
            }
        }
        if let Some(table) = t.strip_prefix("group:") {
            let table: Vec<Vec<usize>> = serde_json::from_str(table)?;
            return Ok(BuiltinSpec::Group(table));
        }
        if let Some(n) = t.strip_prefix("k[Z/").and_then(|r| r.strip_suffix(']')) {
            return Ok(BuiltinSpec::Cyclic(parse_usize(n, "group order")?));
        }
        let parts: Vec<&str> = t.split(':').collect();
        let arg = |i: usize, what: &str| -> Result<usize> {
            parts.get(i).ok_or_else(|| Error::Parse(format!("{t:?} needs a {what}"))).and_then(|s| parse_usize(s, what))
        };
        let root = |i: usize| parts.get(i).map(|s| s.trim().to_string());
        let spec = match parts[0] {
            "cyclic" => BuiltinSpec::Cyclic(arg(1, "group order")?),
            "dihedral" => BuiltinSpec::Dihedral(arg(1, "n")?),
            "sym3" | "k[S3]" | "k[S₃]" | "S3" => BuiltinSpec::Sym3,
            "sweedler" => BuiltinSpec::Sweedler,
            "taft" => BuiltinSpec::Taft(arg(1, "n")?, root(2)),
            "gr_uq_sl2" => BuiltinSpec::GrUqSl2(arg(1, "p")?, root(2)),
            "trunc" => BuiltinSpec::Truncated(arg(1, "n")?),
            other => return Err(Error::Parse(format!("unknown builtin {other:?}"))),
        };
        let expected = match spec {
            BuiltinSpec::Sym3 | BuiltinSpec::Sweedler => 1,
            BuiltinSpec::Taft(..) | BuiltinSpec::GrUqSl2(..) => parts.len().clamp(2, 3),
            _ => 2,
        };
        if parts.len() != expected {
            return Err(Error::Parse(format!("wrong number of parameters in {t:?}")));
        }
        Ok(spec)
    }

    /// Dimension of the algebra this spec builds, without building it.
    pub fn dim(&self) -> usize {
        match self {
            BuiltinSpec::Group(t) => t.len(),
            BuiltinSpec::Cyclic(n) | BuiltinSpec::Truncated(n) => *n,
            BuiltinSpec::Dihedral(n) => 2 * n,
            BuiltinSpec::Sym3 => 6,
            BuiltinSpec::Sweedler => 4,
            BuiltinSpec::Taft(n, _) => n * n,
            BuiltinSpec::GrUqSl2(p, _) => p * p * p,
            BuiltinSpec::Double(b) => b.dim() * b.dim(),
            BuiltinSpec::Dual(b) => b.dim(),
        }
    }

    fn root_of_unity(field: &Field, q: &Option<String>, n: usize) -> Result<Scalar> {
        match q {
            Some(text) => field.parse_scalar(text),
            None => field
                .primitive_root_of_unity(n as u64)
                .ok_or_else(|| Error::InvalidInput(format!("{field} has no primitive {n}-th root of unity"))),
        }
    }

    /// Builds the Hopf algebra (and the R-matrix for a double). Every result
    /// has passed validation.
    pub fn build(&self, field: &Field) -> Result<(HopfAlgebra, Option<RMatrix>)> {
        let h = match self {
            BuiltinSpec::Group(table) => group_algebra(field, table, None)?,
            BuiltinSpec::Cyclic(n) => cyclic(field, *n)?,
            BuiltinSpec::Dihedral(n) => dihedral(field, *n)?,
            BuiltinSpec::Sym3 => symmetric3(field)?,
            BuiltinSpec::Sweedler => taft(field, 2, &field.from_i64(-1))?,
            BuiltinSpec::Taft(n, q) => taft(field, *n, &Self::root_of_unity(field, q, *n)?)?,
            BuiltinSpec::GrUqSl2(p, q) => gr_uq_sl2(field, *p, &Self::root_of_unity(field, q, *p)?)?,
            BuiltinSpec::Double(inner) => {
                let (d, r) = drinfeld_double(&inner.build(field)?.0)?;
                return Ok((d, Some(r)));
            }
            BuiltinSpec::Dual(inner) => dual_hopf(&inner.build(field)?.0),
            BuiltinSpec::Truncated(_) => {
                return Err(Error::InvalidInput("trunc:n is an algebra, not a Hopf algebra".into()))
            }
        };
        Ok((h, None))
    }

    /// The underlying plain algebra.
    pub fn build_algebra(&self, field: &Field) -> Result<FDAlgebra> {
        match self {
            BuiltinSpec::Truncated(n) => FDAlgebra::truncated_polynomial(field, *n),
            other => Ok(FDAlgebra::from_hopf(&other.build(field)?.0)),
        }
    }
}

/// Parses `expr` or `expr@FIELD` (field defaults to Q).
pub fn parse_address(text: &str) -> Result<(BuiltinSpec, Field)> {
    let (expr, field) = split_field(text.trim());
    let field = match field {
        Some(f) => Field::parse(f)?,
        None => Field::Rationals,
    };
    Ok((BuiltinSpec::parse(expr)?, field))
}

/// A loaded Hopf algebra, with an R-matrix when one is known.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: Arc<HopfAlgebra>,
    pub r_matrix: Option<RMatrix>,
    pub dim_hint: usize,
}

/// Loads a JSON file if `target` names an existing path, otherwise a builtin.
pub fn load_hopf(target: &str) -> Result<Loaded> {
    if Path::new(target).is_file() {
        let text = std::fs::read_to_string(target)?;
        let (h, r) = hopf_from_json(&text)?;
        let dim_hint = h.dim();
        return Ok(Loaded { algebra: Arc::new(h), r_matrix: r, dim_hint });
    }
    let (spec, field) = parse_address(target)?;
    let (h, r) = spec.build(&field)?;
    Ok(Loaded { algebra: Arc::new(h), r_matrix: r, dim_hint: spec.dim() })
}

/// Loads a plain algebra from a JSON file or a builtin address.
pub fn load_algebra(target: &str) -> Result<FDAlgebra> {
    if Path::new(target).is_file() {
        return algebra_from_json(&std::fs::read_to_string(target)?);
    }
    let (spec, field) = parse_address(target)?;
    spec.build_algebra(&field)
}

type Triple = (usize, usize, usize, String);

#[derive(Serialize, Deserialize)]
struct HopfDoc {
    field: String,
    dim: usize,
    basis: Vec<String>,
    mul: Vec<Triple>,
    unit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comul: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r_matrix: Option<Vec<(usize, usize, String)>>,
}

fn triples_out(field: &Field, t: &SparseTensor3) -> Vec<Triple> {
    t.triples().map(|(i, j, k, c)| (i, j, k, field.format_scalar(c))).collect()
}

fn triples_in(field: &Field, n: usize, t: &[Triple]) -> Result<SparseTensor3> {
    let parsed = t
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, field.parse_scalar(c)?)))
        .collect::<Result<Vec<_>>>()?;
    SparseTensor3::from_entries(field, (n, n, n), parsed)
}

fn scalars_in(field: &Field, v: &[String], n: usize, what: &str) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(Error::ShapeMismatch(format!("{what} has length {}, expected {n}", v.len())));
    }
    v.iter().map(|s| field.parse_scalar(s)).collect()
}

fn scalars_out(field: &Field, v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| field.format_scalar(s)).collect()
}

fn doc_header(doc: &HopfDoc) -> Result<(Field, usize)> {
    let field = Field::parse(&doc.field)?;
    if doc.basis.len() != doc.dim {
        return Err(Error::ShapeMismatch(format!("{} basis names for dimension {}", doc.basis.len(), doc.dim)));
    }
    Ok((field, doc.dim))
}

/// Serializes a Hopf algebra (and optionally an R-matrix).
pub fn hopf_to_json(h: &HopfAlgebra, r: Option<&RMatrix>) -> String {
    let f = h.field();
    let doc = HopfDoc {
        field: f.to_string(),
        dim: h.dim(),
        basis: h.basis_names().to_vec(),
        mul: triples_out(f, h.mul_tensor()),
        unit: scalars_out(f, h.unit()),
        comul: Some(triples_out(f, h.comul_tensor())),
        counit: Some(scalars_out(f, h.counit())),
        antipode: Some(h.antipode().to_strings()),
        r_matrix: r.map(|r| {
            let t = &r.tensor;
            (0..t.rows())
                .flat_map(|i| (0..t.cols()).map(move |j| (i, j)))
                .filter(|&(i, j)| !f.is_zero(t.get(i, j)))
                .map(|(i, j)| (i, j, f.format_scalar(t.get(i, j))))
                .collect()
        }),
    };
    serde_json::to_string_pretty(&doc).expect("plain data")
}

/// Parses and validates a Hopf algebra document; a missing antipode is computed.
pub fn hopf_from_json(text: &str) -> Result<(HopfAlgebra, Option<RMatrix>)> {
    let doc: HopfDoc = serde_json::from_str(text)?;
    let (f, n) = doc_header(&doc)?;
    let mul = triples_in(&f, n, &doc.mul)?;
    let unit = scalars_in(&f, &doc.unit, n, "unit")?;
    let comul = triples_in(&f, n, doc.comul.as_deref().ok_or_else(|| Error::Parse("missing \"comul\"".into()))?)?;
    let counit = scalars_in(&f, doc.counit.as_deref().ok_or_else(|| Error::Parse("missing \"counit\"".into()))?, n, "counit")?;
    let antipode = match &doc.antipode {
        Some(rows) => Matrix::from_strings(&f, rows)?,
        None => compute_antipode(&f, &mul, &unit, &comul, &counit)?,
    };
    if antipode.rows() != n || antipode.cols() != n {
        return Err(Error::ShapeMismatch("antipode must be dim × dim".into()));
    }
    let h = HopfAlgebra::new(&f, doc.basis, mul, unit, comul, counit, antipode)?;
    let r = match doc.r_matrix {
        None => None,
        Some(entries) => {
            let mut m = Matrix::zeros(&f, n, n);
            for (i, j, c) in entries {
                if i >= n || j >= n {
                    return Err(Error::InvalidInput(format!("R-matrix index ({i}, {j}) out of range")));
                }
                m.set(i, j, f.parse_scalar(&c)?);
            }
            Some(RMatrix::new(m))
        }
    };
    Ok((h, r))
}

/// Serializes the algebra part only.
pub fn algebra_to_json(a: &FDAlgebra) -> String {
    let f = a.field();
    let doc = HopfDoc {
        field: f.to_string(),
        dim: a.dim(),
        basis: a.basis_names().to_vec(),
        mul: triples_out(f, a.mul_tensor()),
        unit: scalars_out(f, a.unit()),
        comul: None,
        counit: None,
        antipode: None,
        r_matrix: None,
    };
    serde_json::to_string_pretty(&doc).expect("plain data")
}

/// Parses a plain algebra; coalgebra fields, if present, are ignored.
pub fn algebra_from_json(text: &str) -> Result<FDAlgebra> {
    let doc: HopfDoc = serde_json::from_str(text)?;
    let (f, n) = doc_header(&doc)?;
    let mul = triples_in(&f, n, &doc.mul)?;
    let unit = scalars_in(&f, &doc.unit, n, "unit")?;
    FDAlgebra::new(&f, doc.basis, mul, unit)
}

#[derive(Serialize, Deserialize)]
struct RepDoc {
    hopf: String,
    dim: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

/// Serializes a representation; `hopf` is the path or builtin address of the parent.
pub fn representation_to_json(v: &Representation, hopf: &str) -> String {
    let doc = RepDoc { hopf: hopf.to_string(), dim: v.dim(), matrices: v.action().iter().map(|m| m.to_strings()).collect() };
    serde_json::to_string_pretty(&doc).expect("plain data")
}

/// Parses a representation document, loading its parent and checking the
/// homomorphism property.
pub fn representation_from_json(text: &str) -> Result<Representation> {
    let doc: RepDoc = serde_json::from_str(text)?;
    let parent = load_hopf(&doc.hopf)?.algebra;
    let f = parent.field().clone();
    if doc.matrices.len() != parent.dim() {
        return Err(Error::ShapeMismatch(format!("{} matrices for an algebra of dimension {}", doc.matrices.len(), parent.dim())));
    }
    let action = doc
        .matrices
        .iter()
        .map(|rows| {
            let m = Matrix::from_strings(&f, rows)?;
            if m.rows() != doc.dim || m.cols() != doc.dim {
                return Err(Error::ShapeMismatch("action matrix has the wrong size".into()));
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(parent, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::sweedler;

    #[test]
    fn addresses() {
        let (s, f) = parse_address("taft:3:2@GF7").unwrap();
        assert_eq!(s, BuiltinSpec::Taft(3, Some("2".into())));
        assert_eq!(f, Field::prime(7).unwrap());
        let (s, f) = parse_address("double(sweedler)").unwrap();
        assert_eq!(s, BuiltinSpec::Double(Box::new(BuiltinSpec::Sweedler)));
        assert_eq!(f, Field::Rationals);
        assert_eq!(parse_address("k[Z/2]@Q").unwrap().0, BuiltinSpec::Cyclic(2));
        assert_eq!(parse_address("k[S3]@GF7").unwrap().0, BuiltinSpec::Sym3);
        let (s, f) = parse_address("cyclic:3@GF2^2:1,1,1").unwrap();
        assert_eq!(s, BuiltinSpec::Cyclic(3));
        assert_eq!(f.order(), Some(4));
        assert_eq!(parse_address("group:[[0,1],[1,0]]@GF3").unwrap().0.dim(), 2);
        assert!(parse_address("taft:3:3@GF7").unwrap().0.build(&Field::prime(7).unwrap()).is_err());
        assert!(parse_address("nonsense").is_err());
        assert!(parse_address("sweedler:2").is_err());
        assert_eq!(parse_address("double(dual(taft:3))@GF7").unwrap().0.dim(), 81);
    }

    #[test]
    fn taft_without_root_picks_one() {
        let f13 = Field::prime(13).unwrap();
        let (h, _) = BuiltinSpec::Taft(4, None).build(&f13).unwrap();
        assert_eq!(h.dim(), 16);
    }

    #[test]
    fn json_round_trip() {
        let h = sweedler();
        let text = hopf_to_json(&h, None);
        assert_eq!(hopf_from_json(&text).unwrap().0, h);
        // dropping the antipode triggers its computation
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        v.as_object_mut().unwrap().remove("antipode");
        assert_eq!(hopf_from_json(&v.to_string()).unwrap().0, h);
        let (d, r) = drinfeld_double(&h).unwrap();
        let (d2, r2) = hopf_from_json(&hopf_to_json(&d, Some(&r))).unwrap();
        assert_eq!(d2, d);
        assert_eq!(r2.unwrap().tensor, r.tensor);
        let a = FDAlgebra::truncated_polynomial(&Field::Rationals, 3).unwrap();
        assert_eq!(algebra_from_json(&algebra_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn representation_round_trip() {
        let loaded = load_hopf("sweedler").unwrap();
        let v = Representation::regular(loaded.algebra.clone());
        let text = representation_to_json(&v, "sweedler");
        assert_eq!(representation_from_json(&text).unwrap(), v);
    }
}
