//! The JSON document format shared by every subcommand.
//!
//! A document is an object with `"format": 1`, a `"kind"` tag, and the
//! structure data for that kind. Scalars are decimal strings (`"3"`,
//! `"-7/2"`), so documents stay exact and diff-able. Dense tensors are
//! stored sparsely: a matrix entry is `[row, col, "value"]` and a rank-3
//! structure tensor entry is `[i, j, k, "value"]`, zeros omitted and
//! indices emitted in ascending order so equal objects produce identical
//! text. Parsing re-validates shapes and index bounds; the algebraic
//! axioms of the parsed object are the business of the `check` command.

use exactalg_core::algebra::Algebra;
use exactalg_core::hopf::{HModule, HopfAlgebra};
use exactalg_core::modalg::{AModuleObject, ModuleAlgebra};
use exactalg_core::{FieldSpec, Matrix, Scalar, Subspace};
use serde::{Deserialize, Serialize};

use crate::{usage, CliError, CliResult};

/// A matrix entry: row, column, value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ent2(pub usize, pub usize, pub String);

/// A structure-tensor entry: three indices and a value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ent3(pub usize, pub usize, pub usize, pub String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldData {
    pub field: String,
}

/// A unital associative algebra on a fixed basis: `mul` entry
/// `[i, j, k, c]` says b_i·b_j has coefficient c on b_k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraData {
    pub field: String,
    pub dim: usize,
    pub unit: Vec<String>,
    pub mul: Vec<Ent3>,
}

/// A Hopf algebra: `comult` entry `[i, j, k, c]` says Δ(b_i) has
/// coefficient c on b_j ⊗ b_k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub comult: Vec<Ent3>,
    pub counit: Vec<String>,
    pub antipode: Vec<Ent2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<Ent2>>,
}

/// An H-module algebra: `action` entry `[u, r, c, v]` is the (r, c)
/// entry of the matrix by which the u-th basis element of H acts on A.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleAlgebraData {
    pub hopf: HopfData,
    pub algebra: AlgebraData,
    pub action: Vec<Ent3>,
}

/// A module object over a module algebra: `nabla` entry `[j, r, c, v]`
/// is the matrix of right multiplication by the j-th basis element of A,
/// `haction` the matrix of the u-th basis element of H.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleObjectData {
    pub over: ModuleAlgebraData,
    pub dim: usize,
    pub nabla: Vec<Ent3>,
    pub haction: Vec<Ent3>,
}

/// A subspace by its canonical echelon basis, one row per basis vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceData {
    pub field: String,
    pub ambient: usize,
    pub basis: Vec<Vec<String>>,
}

/// One law checked on one instance. Failures always carry a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub law: String,
    pub instance: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

/// Output of a computation or verification command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportData {
    pub command: String,
    pub instance: String,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub results: serde_json::Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Field(FieldData),
    Algebra(AlgebraData),
    Hopf(HopfData),
    ModuleAlgebra(ModuleAlgebraData),
    ModuleObject(ModuleObjectData),
    Subspace(SubspaceData),
    Report(ReportData),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub format: u32,
    #[serde(flatten)]
    pub body: Body,
}

impl Document {
    pub fn new(body: Body) -> Document {
        Document { format: 1, body }
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            Body::Field(_) => "field",
            Body::Algebra(_) => "algebra",
            Body::Hopf(_) => "hopf",
            Body::ModuleAlgebra(_) => "module_algebra",
            Body::ModuleObject(_) => "module_object",
            Body::Subspace(_) => "subspace",
            Body::Report(_) => "report",
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }
}

pub fn parse_document(text: &str) -> CliResult<Document> {
    let doc: Document = serde_json::from_str(text)
        .map_err(|e| usage(format!("cannot parse document: {e}")))?;
    if doc.format != 1 {
        return Err(usage(format!(
            "unsupported document format {} (this tool reads format 1)",
            doc.format
        )));
    }
    Ok(doc)
}

/// The field descriptor used in documents and by `--field`: a prime in
/// decimal, or `Q` for the rationals.
pub fn parse_field(text: &str) -> CliResult<FieldSpec> {
    let text = text.trim();
    if text == "Q" || text == "q" {
        return Ok(FieldSpec::rationals());
    }
    let p: u64 = text
        .parse()
        .map_err(|_| usage(format!("field must be a prime or Q, got \"{text}\"")))?;
    FieldSpec::prime(p).map_err(|_| usage(format!("{p} is not prime")))
}

pub fn field_name(field: FieldSpec) -> String {
    if field.is_rational() {
        String::from("Q")
    } else {
        field.characteristic().to_string()
    }
}

fn parse_scalar(field: FieldSpec, text: &str) -> CliResult<Scalar> {
    field
        .parse(text)
        .map_err(|e| usage(format!("bad scalar: {e}")))
}

fn parse_vector(field: FieldSpec, raw: &[String], len: usize, what: &str) -> CliResult<Vec<Scalar>> {
    if raw.len() != len {
        return Err(usage(format!(
            "{what} has length {}, expected {len}",
            raw.len()
        )));
    }
    raw.iter().map(|s| parse_scalar(field, s)).collect()
}

fn parse_matrix(
    field: FieldSpec,
    entries: &[Ent2],
    rows: usize,
    cols: usize,
    what: &str,
) -> CliResult<Matrix> {
    let mut m = Matrix::zeros(field, rows, cols);
    for Ent2(r, c, v) in entries {
        if *r >= rows || *c >= cols {
            return Err(usage(format!("{what} entry ({r}, {c}) out of bounds")));
        }
        m[(*r, *c)] = m[(*r, *c)].add(&parse_scalar(field, v)?);
    }
    Ok(m)
}

/// Per-leading-index matrices from rank-3 entries, e.g. one action
/// matrix per basis element.
fn parse_matrix_family(
    field: FieldSpec,
    entries: &[Ent3],
    count: usize,
    rows: usize,
    cols: usize,
    what: &str,
) -> CliResult<Vec<Matrix>> {
    let mut family = vec![Matrix::zeros(field, rows, cols); count];
    for Ent3(i, r, c, v) in entries {
        if *i >= count || *r >= rows || *c >= cols {
            return Err(usage(format!("{what} entry ({i}, {r}, {c}) out of bounds")));
        }
        family[*i][(*r, *c)] = family[*i][(*r, *c)].add(&parse_scalar(field, v)?);
    }
    Ok(family)
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn matrix_entries(m: &Matrix) -> Vec<Ent2> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                out.push(Ent2(r, c, m[(r, c)].to_string()));
            }
        }
    }
    out
}

fn family_entries(family: impl Iterator<Item = Matrix>) -> Vec<Ent3> {
    let mut out = Vec::new();
    for (i, m) in family.enumerate() {
        for Ent2(r, c, v) in matrix_entries(&m) {
            out.push(Ent3(i, r, c, v));
        }
    }
    out
}

impl AlgebraData {
    pub fn from_core(a: &Algebra) -> AlgebraData {
        let mut mul = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        mul.push(Ent3(i, j, k, c.to_string()));
                    }
                }
            }
        }
        AlgebraData {
            field: field_name(a.field()),
            dim: a.dim(),
            unit: scalar_strings(a.unit()),
            mul,
        }
    }

    pub fn to_core(&self) -> CliResult<Algebra> {
        let field = parse_field(&self.field)?;
        let unit = parse_vector(field, &self.unit, self.dim, "algebra unit")?;
        let mut triples = Vec::with_capacity(self.mul.len());
        for Ent3(i, j, k, v) in &self.mul {
            triples.push((*i, *j, *k, parse_scalar(field, v)?));
        }
        Algebra::from_triples(field, self.dim, unit, &triples)
            .map_err(|e| usage(format!("bad algebra document: {e}")))
    }
}

impl HopfData {
    pub fn from_core(h: &HopfAlgebra) -> HopfData {
        let n = h.dim();
        let mut comult = Vec::new();
        for i in 0..n {
            for (jk, c) in h.comult(i).iter().enumerate() {
                if !c.is_zero() {
                    comult.push(Ent3(i, jk / n, jk % n, c.to_string()));
                }
            }
        }
        let rmatrix = h.rmatrix().map(|r| {
            let mut out = Vec::new();
            for (jk, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    out.push(Ent2(jk / n, jk % n, c.to_string()));
                }
            }
            out
        });
        HopfData {
            algebra: AlgebraData::from_core(h.algebra()),
            comult,
            counit: scalar_strings(h.counit()),
            antipode: matrix_entries(h.antipode()),
            rmatrix,
        }
    }

    pub fn to_core(&self) -> CliResult<HopfAlgebra> {
        let algebra = self.algebra.to_core()?;
        let field = algebra.field();
        let n = algebra.dim();
        let mut comult = vec![vec![field.zero(); n * n]; n];
        for Ent3(i, j, k, v) in &self.comult {
            if *i >= n || *j >= n || *k >= n {
                return Err(usage(format!(
                    "comultiplication entry ({i}, {j}, {k}) out of bounds"
                )));
            }
            comult[*i][*j * n + *k] = comult[*i][*j * n + *k].add(&parse_scalar(field, v)?);
        }
        let counit = parse_vector(field, &self.counit, n, "counit")?;
        let antipode = parse_matrix(field, &self.antipode, n, n, "antipode")?;
        let rmatrix = match &self.rmatrix {
            None => None,
            Some(entries) => {
                let m = parse_matrix(field, entries, n, n, "r-matrix")?;
                let mut flat = Vec::with_capacity(n * n);
                for r in 0..n {
                    for c in 0..n {
                        flat.push(m[(r, c)].clone());
                    }
                }
                Some(flat)
            }
        };
        HopfAlgebra::new(algebra, comult, counit, antipode, rmatrix)
            .map_err(|e| usage(format!("bad Hopf document: {e}")))
    }
}

impl ModuleAlgebraData {
    pub fn from_core(ma: &ModuleAlgebra) -> ModuleAlgebraData {
        ModuleAlgebraData {
            hopf: HopfData::from_core(ma.hopf()),
            algebra: AlgebraData::from_core(ma.algebra()),
            action: family_entries((0..ma.hopf().dim()).map(|i| ma.action(i).clone())),
        }
    }

    pub fn to_core(&self) -> CliResult<ModuleAlgebra> {
        let hopf = self.hopf.to_core()?;
        let algebra = self.algebra.to_core()?;
        let action = parse_matrix_family(
            algebra.field(),
            &self.action,
            hopf.dim(),
            algebra.dim(),
            algebra.dim(),
            "module algebra action",
        )?;
        ModuleAlgebra::new(hopf, algebra, action)
            .map_err(|e| usage(format!("bad module algebra document: {e}")))
    }
}

impl ModuleObjectData {
    pub fn from_core(m: &AModuleObject) -> ModuleObjectData {
        ModuleObjectData {
            over: ModuleAlgebraData::from_core(m.over()),
            dim: m.dim(),
            nabla: family_entries((0..m.over().dim()).map(|j| m.nabla(j).clone())),
            haction: family_entries(
                (0..m.over().hopf().dim()).map(|u| m.hmodule().action(u).clone()),
            ),
        }
    }

    pub fn to_core(&self) -> CliResult<AModuleObject> {
        let over = self.over.to_core()?;
        let field = over.algebra().field();
        let nabla = parse_matrix_family(
            field,
            &self.nabla,
            over.dim(),
            self.dim,
            self.dim,
            "right action",
        )?;
        let haction = parse_matrix_family(
            field,
            &self.haction,
            over.hopf().dim(),
            self.dim,
            self.dim,
            "Hopf action",
        )?;
        let hmodule = HModule::new(over.hopf().clone(), self.dim, haction);
        AModuleObject::new(over, hmodule, nabla)
            .map_err(|e| usage(format!("bad module object document: {e}")))
    }
}

impl SubspaceData {
    pub fn from_core(s: &Subspace) -> SubspaceData {
        SubspaceData {
            field: field_name(s.field()),
            ambient: s.ambient(),
            basis: s
                .basis_vectors()
                .iter()
                .map(|v| scalar_strings(v))
                .collect(),
        }
    }

    pub fn to_core(&self) -> CliResult<Subspace> {
        let field = parse_field(&self.field)?;
        let vectors: CliResult<Vec<Vec<Scalar>>> = self
            .basis
            .iter()
            .map(|row| parse_vector(field, row, self.ambient, "subspace basis vector"))
            .collect();
        Ok(Subspace::from_spanning(field, self.ambient, &vectors?))
    }
}

impl Verdict {
    pub fn pass(law: impl Into<String>, instance: impl Into<String>, millis: u64) -> Verdict {
        Verdict {
            law: law.into(),
            instance: instance.into(),
            pass: true,
            witness: None,
            millis,
        }
    }

    pub fn fail(
        law: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
        millis: u64,
    ) -> Verdict {
        Verdict {
            law: law.into(),
            instance: instance.into(),
            pass: false,
            witness: Some(witness.into()),
            millis,
        }
    }
}

impl From<exactalg_core::Error> for CliError {
    fn from(e: exactalg_core::Error) -> CliError {
        CliError::Failure(e.to_string())
    }
}
