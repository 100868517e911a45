use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engines::{ml_degree, reciprocal_degree, MlConfig, MlValue, ReciprocalMethod};
use crate::error::{Error, Result};
use crate::exactmath::{rational_from_i64, SymMatrix};
use crate::spaces::{segre_symbol, LinearMatrixSpace, Pencil, Role};

use super::model::{ModelSpec, SpaceSpec};

/// A model with the values it is expected to produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub model: ModelSpec,
    pub expected: Expected,
    pub provenance: Provenance,
    /// The expected ML degree is conjectural: a mismatch is reported but
    /// only fails a strict run.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub conjecture: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub mld: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reciprocal_degree: Option<u64>,
    /// Segre symbol of the space when it is a pencil, or of its annihilator
    /// when that is a pencil.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre_symbol: Option<String>,
}

/// Where the expected values come from, and whether they were checked
/// against a published source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub source: String,
    pub verified: bool,
}

/// Outcome of checking one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryResult {
    pub name: String,
    pub expected: Expected,
    pub mld: Option<MlValue>,
    pub reciprocal_degree: Option<MlValue>,
    pub segre_symbol: Option<String>,
    pub pass: bool,
    pub conjecture: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EntryResult {
    /// Whether this result fails the run; conjectures fail strict runs only.
    pub fn fails(&self, strict: bool) -> bool {
        !self.pass && (strict || !self.conjecture)
    }
}

impl CatalogEntry {
    pub fn space(&self) -> Result<LinearMatrixSpace> {
        self.model.to_space()
    }

    /// Runs every check the entry carries with the given configuration.
    pub fn check(&self, config: &MlConfig) -> EntryResult {
        let mut result = EntryResult {
            name: self.name.clone(),
            expected: self.expected.clone(),
            mld: None,
            reciprocal_degree: None,
            segre_symbol: None,
            pass: false,
            conjecture: self.conjecture,
            error: None,
        };
        let outcome = (|| -> Result<bool> {
            let space = self.space()?;
            let mld = ml_degree(&space, config)?.value;
            result.mld = Some(mld);
            let mut pass = mld == MlValue::Count(self.expected.mld);
            if let Some(deg) = self.expected.reciprocal_degree {
                let got = reciprocal_degree(&space, ReciprocalMethod::Slice, config)?.value;
                result.reciprocal_degree = Some(got);
                pass &= got == MlValue::Count(deg);
            }
            if let Some(symbol) = &self.expected.segre_symbol {
                let got = pencil_symbol(&space)?;
                pass &= &got == symbol;
                result.segre_symbol = Some(got);
            }
            Ok(pass)
        })();
        match outcome {
            Ok(pass) => result.pass = pass,
            Err(e) => result.error = Some(e.to_string()),
        }
        result
    }
}

/// Segre symbol of the space when it is two-dimensional, otherwise of its
/// annihilator when that is.
pub fn pencil_symbol(space: &LinearMatrixSpace) -> Result<String> {
    let pencil = match (space.dim(), space.codim()) {
        (2, _) => Pencil::from_space(space)?,
        (_, 2) => Pencil::from_space(&space.annihilator())?,
        _ => return Err(Error::InvalidInput("neither the space nor its annihilator is a pencil".into())),
    };
    Ok(segre_symbol(&pencil)?.to_string())
}

/// Checks all entries concurrently; results are ordered by name.
pub fn run_catalog(entries: &[CatalogEntry], config: &MlConfig) -> Vec<EntryResult> {
    let mut results: Vec<EntryResult> = entries.par_iter().map(|e| e.check(config)).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

/// Fixed-width pass/fail table. Contains no timings, so a fixed seed
/// reproduces it exactly.
pub fn render_table(results: &[EntryResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<18} {:>8} {:>8} {:>8} {:>8}  status", "entry", "mld", "got", "deg", "got");
    for r in results {
        let show = |v: Option<MlValue>| v.map_or("-".to_string(), |v| v.to_string());
        let status = match (r.pass, r.conjecture) {
            (true, _) => "PASS",
            (false, true) => "FAIL (conjecture)",
            (false, false) => "FAIL",
        };
        let _ = write!(
            out,
            "{:<18} {:>8} {:>8} {:>8} {:>8}  {status}",
            r.name,
            r.expected.mld,
            show(r.mld),
            r.expected.reciprocal_degree.map_or("-".to_string(), |d| d.to_string()),
            show(r.reciprocal_degree),
        );
        if let Some(e) = &r.error {
            let _ = write!(out, "  ({e})");
        }
        out.push('\n');
    }
    out
}

pub fn load_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for e in &entries {
        e.space().map_err(|err| Error::Parse(format!("entry {}: {err}", e.name)))?;
    }
    Ok(entries)
}

fn entry(name: &str, model: ModelSpec, mld: u64, deg: Option<u64>, symbol: Option<&str>, source: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        model: ModelSpec { name: Some(name.to_string()), ..model },
        expected: Expected { mld, reciprocal_degree: deg, segre_symbol: symbol.map(str::to_string) },
        provenance: Provenance { source: source.to_string(), verified: true },
        conjecture: false,
    }
}

fn pencil(symbol: &str) -> Pencil {
    Pencil::representative(symbol).expect("known symbol")
}

fn graph(n: usize, edges: &[(usize, usize)]) -> ModelSpec {
    ModelSpec { name: None, n, space: SpaceSpec::Graph { edges: edges.to_vec() } }
}

/// Segre symbol, entry-name suffix, ML degree and reciprocal degree of the
/// five regular pencils in S^3, used as models.
pub const REGULAR_PENCILS: [(&str, &str, u64, u64); 5] = [
    ("[1 1 1]", "1_1_1", 2, 2),
    ("[2 1]", "2_1", 1, 2),
    ("[(1 1) 1]", "11_1", 1, 1),
    ("[3]", "3", 0, 2),
    ("[(2 1)]", "21", 0, 1),
];

/// The same data for the four-dimensional polars of all eight pencil
/// classes in S^3; singular pencils carry `;` in their symbol.
pub const POLARS: [(&str, &str, u64, u64); 8] = [
    ("[1 1 1]", "1_1_1", 4, 4),
    ("[2 1]", "2_1", 3, 4),
    ("[(1 1) 1]", "11_1", 2, 4),
    ("[3]", "3", 2, 4),
    ("[(2 1)]", "21", 1, 4),
    ("[;1;]", "s1s", 1, 1),
    ("[1 1;;1]", "1_1_s1", 1, 4),
    ("[2;;1]", "2_s1", 0, 1),
];

/// The built-in catalog, ordered by name.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for (symbol, suffix, mld, deg) in REGULAR_PENCILS {
        let p = pencil(symbol);
        let model = ModelSpec::from_space(None, &p.to_space(Role::Model));
        out.push(entry(&format!("pencil_{suffix}"), model, mld, Some(deg), Some(symbol), "pencil classification in S^3"));
    }
    for (symbol, suffix, mld, deg) in POLARS {
        let p = pencil(symbol);
        let model = ModelSpec::from_annihilator(None, 3, &[p.a().clone(), p.b().clone()]);
        let regular = !symbol.contains(';');
        out.push(entry(
            &format!("polar_{suffix}"),
            model,
            mld,
            Some(deg),
            regular.then_some(symbol),
            "four-dimensional spaces in S^3 by the pencil class of the annihilator",
        ));
    }
    let corner = ModelSpec::from_annihilator(None, 3, &[SymMatrix::unit(3, 0, 0), SymMatrix::unit(3, 1, 1)]);
    out.push(entry("k11_k22_zero", corner, 1, Some(4), None, "two vanishing diagonal entries of K in S^3"));

    let coupling = SymMatrix::unit(3, 0, 2).add(&SymMatrix::unit(3, 1, 2)).expect("same size");
    let type_f = ModelSpec::from_space(
        None,
        &LinearMatrixSpace::new(3, vec![SymMatrix::unit(3, 0, 0), SymMatrix::unit(3, 1, 1), coupling], Role::Model)
            .expect("independent"),
    );
    out.push(entry("type_f", type_f, 0, Some(2), None, "three-dimensional space of type F in S^3"));

    for r in 1..=3i64 {
        let diag: Vec<_> = (0..3).map(|i| rational_from_i64((i < r) as i64)).collect();
        let model = ModelSpec::from_annihilator(None, 3, &[SymMatrix::diagonal(&diag)]);
        out.push(entry(
            &format!("hyperplane_r{r}"),
            model,
            r as u64 - 1,
            Some(2),
            None,
            "hyperplane law: ML degree rank(A) - 1",
        ));
    }

    out.push(entry("4cycle", graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]), 5, Some(9), None, "undirected four-cycle"));
    let mut five = entry(
        "5cycle",
        graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
        17,
        None,
        None,
        "n-cycle conjecture (n - 3) 2^(n - 2) + 1",
    );
    five.conjecture = true;
    five.provenance.verified = false;
    out.push(five);

    let tangent = ModelSpec::from_annihilator(None, 4, &[SymMatrix::unit(4, 0, 0), SymMatrix::unit(4, 0, 1)]);
    out.push(entry("tangent_line_S4", tangent, 0, Some(3), None, "annihilator tangent to the rank-one locus in S^4"));
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_are_valid_and_round_trip() {
        let entries = builtin_catalog();
        assert!(entries.windows(2).all(|w| w[0].name < w[1].name));
        for e in &entries {
            let space = e.space().unwrap();
            let spec = ModelSpec::from_json(&e.model.to_json()).unwrap();
            assert!(spec.to_space().unwrap().same_span(&space), "{}", e.name);
        }
        let text = serde_json::to_string(&entries).unwrap();
        assert_eq!(load_catalog(&text).unwrap(), entries);
    }

    #[test]
    fn named_entries() {
        let entries = builtin_catalog();
        let find = |name: &str| entries.iter().find(|e| e.name == name).unwrap();
        assert_eq!(find("4cycle").expected.mld, 5);
        assert_eq!(find("4cycle").expected.reciprocal_degree, Some(9));
        assert_eq!(find("pencil_3").expected.mld, 0);
        assert_eq!(find("tangent_line_S4").expected.mld, 0);
        assert!(find("5cycle").conjecture);
    }

    #[test]
    fn regular_symbols_match_representatives() {
        for e in builtin_catalog() {
            if let Some(symbol) = &e.expected.segre_symbol {
                assert_eq!(&pencil_symbol(&e.space().unwrap()).unwrap(), symbol, "{}", e.name);
            }
        }
    }

    #[test]
    fn malformed_catalogs_are_rejected() {
        assert!(load_catalog("{").is_err());
        assert!(load_catalog(r#"[{"name": "x"}]"#).is_err());
        let bad_space = r#"[{"name": "x", "model": {"n": 2, "space": {"kind": "graph", "edges": [[1, 5]]}},
            "expected": {"mld": 1}, "provenance": {"source": "s", "verified": false}}]"#;
        assert!(load_catalog(bad_space).is_err());
    }

    #[test]
    fn conjectures_fail_only_strict_runs() {
        let r = EntryResult {
            name: "x".into(),
            expected: Expected { mld: 1, reciprocal_degree: None, segre_symbol: None },
            mld: Some(MlValue::Count(2)),
            reciprocal_degree: None,
            segre_symbol: None,
            pass: false,
            conjecture: true,
            error: None,
        };
        assert!(!r.fails(false));
        assert!(r.fails(true));
    }
}
