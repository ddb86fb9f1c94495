//! JSON and text renderings. Keys come out in declaration order and summands sorted by
//! `(i, j, n)`, so parsing an emitted decomposition and writing it again is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use leekh_core::algebra::{Bigrading, ModuleDecomposition, Torsion};
use leekh_core::invariants::KnotInvariantReport;
use leekh_core::FieldSpec;
use serde::{Deserialize, Serialize};

use crate::args::{field_name, parse_field};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub i: i32,
    pub j: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionJson {
    pub i: i32,
    pub j: i32,
    pub n: u32,
}

/// A module in UniversalKh vocabulary: `KhE` towers and `KhC[n]` torsion summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub field: String,
    pub towers: Vec<TowerJson>,
    pub torsion: Vec<TorsionJson>,
    pub universal_kh: String,
}

impl DecompositionJson {
    pub fn from_module(m: &ModuleDecomposition) -> Self {
        DecompositionJson {
            field: field_name(m.field),
            towers: m.towers.iter().map(|b| TowerJson { i: b.i, j: b.j }).collect(),
            torsion: m.torsion.iter().map(|t| TorsionJson { i: t.i, j: t.j, n: t.n }).collect(),
            universal_kh: universal_kh(m),
        }
    }

    pub fn to_module(&self) -> Result<ModuleDecomposition, String> {
        let field: FieldSpec = parse_field(&self.field)?;
        Ok(ModuleDecomposition::new(
            field,
            self.towers.iter().map(|t| Bigrading::new(t.i, t.j)).collect(),
            self.torsion.iter().map(|t| Torsion { i: t.i, j: t.j, n: t.n }).collect(),
        ))
    }
}

/// `q^j t^i KhE + q^j t^i KhC[n] + ...`, towers first.
pub fn universal_kh(m: &ModuleDecomposition) -> String {
    let mut terms = Vec::new();
    let monomial = |i: i32, j: i32| format!("q^{} t^{}", j, i);
    for b in &m.towers {
        terms.push(format!("{} KhE", monomial(b.i, b.j)));
    }
    for t in &m.torsion {
        terms.push(format!("{} KhC[{}]", monomial(t.i, t.j), t.n));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Re-serializes an emitted decomposition after parsing it back.
pub fn canonical_roundtrip(json: &str) -> Result<String, String> {
    let d: DecompositionJson = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let m = d.to_module()?;
    serde_json::to_string(&DecompositionJson::from_module(&m)).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleJson {
    pub khovanov_t0_total: usize,
    pub khovanov_t0: Vec<DimJson>,
    pub lee_rank_t1: usize,
    pub jones_euler: BTreeMap<i32, i64>,
    pub t0_matches_module: bool,
    pub jones_matches_complex: bool,
    pub lee_rank_matches_components: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimJson {
    pub i: i32,
    pub j: i32,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComputeJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub pd: String,
    pub crossings: usize,
    pub components: usize,
    /// `null` for links, whose module has more than one tower.
    pub s: Option<i32>,
    pub xo: u32,
    pub ribbon_lower_bound: Option<u32>,
    pub collapse_page_bound: Option<u32>,
    pub bound: Option<String>,
    pub decomposition: DecompositionJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracles: Option<OracleJson>,
}

impl ComputeJson {
    pub fn knot(name: Option<String>, pd: String, crossings: usize, r: &KnotInvariantReport) -> Self {
        ComputeJson {
            name,
            pd,
            crossings,
            components: 1,
            s: Some(r.s),
            xo: r.xo,
            ribbon_lower_bound: Some(r.ribbon_lower_bound),
            collapse_page_bound: Some(r.collapse_page_bound),
            bound: Some(r.semantics()),
            decomposition: DecompositionJson::from_module(&r.decomposition),
            oracles: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(out, "knot        {}", n);
        }
        let _ = writeln!(out, "pd          {}", self.pd);
        let _ = writeln!(out, "crossings   {}  components {}", self.crossings, self.components);
        let _ = writeln!(out, "field       {}", self.decomposition.field);
        let _ = writeln!(out, "module      {}", self.decomposition.universal_kh);
        if let Some(s) = self.s {
            let _ = writeln!(out, "s           {}", s);
        }
        let _ = writeln!(out, "xo          {}", self.xo);
        if let (Some(b), Some(k)) = (&self.bound, self.collapse_page_bound) {
            let _ = writeln!(out, "bound       {}", b);
            let _ = writeln!(out, "collapse    E_{} or later", k);
        }
        if let Some(o) = &self.oracles {
            let _ = writeln!(
                out,
                "oracles     t0 total {} ({}), T=1 rank {} ({}), jones ({})",
                o.khovanov_t0_total,
                ok(o.t0_matches_module),
                o.lee_rank_t1,
                ok(o.lee_rank_matches_components),
                ok(o.jones_matches_complex)
            );
        }
        out
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "consistent"
    } else {
        "MISMATCH"
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConnectSumJson {
    pub pd: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagrammatic: Option<DecompositionJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algebraic: Option<DecompositionJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agree: Option<bool>,
    pub s: i32,
    pub xo: u32,
    pub bound: String,
}

impl ConnectSumJson {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(d) = &self.diagrammatic {
            let _ = writeln!(out, "diagrammatic  {}", d.universal_kh);
        }
        if let Some(a) = &self.algebraic {
            let _ = writeln!(out, "algebraic     {}", a.universal_kh);
        }
        if let Some(agree) = self.agree {
            let _ = writeln!(out, "diagrammatic and algebraic decompositions agree: {}", agree);
        }
        let _ = writeln!(out, "s {}  xo {}  {}", self.s, self.xo, self.bound);
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NeckJson {
    pub pd: String,
    pub site: String,
    pub colored: bool,
    pub holds_up_to_sign: bool,
    pub resolved_sign: Option<i8>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EventsJson {
    pub source: String,
    pub target: String,
    pub events: usize,
    pub euler_characteristic: i32,
    pub dots: u32,
    pub bigrading: TowerJson,
    pub commutes_with_differentials: bool,
    pub homology_image: DecompositionJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XImageJson {
    pub power: u32,
    pub module: DecompositionJson,
    pub image: DecompositionJson,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_byte_identical() {
        let m = ModuleDecomposition::new(
            FieldSpec::Prime(3),
            vec![Bigrading::new(0, 7)],
            vec![Torsion { i: 5, j: 17, n: 2 }, Torsion { i: 3, j: 13, n: 1 }],
        );
        let s = serde_json::to_string(&DecompositionJson::from_module(&m)).unwrap();
        assert_eq!(canonical_roundtrip(&s).unwrap(), s);
        assert!(s.starts_with(r#"{"field":"fp:3","towers":[{"i":0,"j":7}],"torsion":[{"i":3,"j":13,"n":1}"#));
        assert!(s.contains(r#""universal_kh":"q^7 t^0 KhE + q^13 t^3 KhC[1] + q^17 t^5 KhC[2]""#));
    }

    #[test]
    fn unsorted_input_is_canonicalized() {
        let s = r#"{"field":"q","towers":[],"torsion":[{"i":2,"j":5,"n":1},{"i":-1,"j":-1,"n":1}],"universal_kh":""}"#;
        let c = canonical_roundtrip(s).unwrap();
        assert_eq!(canonical_roundtrip(&c).unwrap(), c);
        assert!(c.contains(r#"[{"i":-1,"j":-1,"n":1},{"i":2,"j":5,"n":1}]"#));
    }
}
