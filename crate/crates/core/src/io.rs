//! The JSON group file format:
//! `{"p", "order", "table", "name", "format"?, "factorization"?: {"B", "C"}}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraContext, AugmentedSubalgebra};
use crate::error::{Error, Result};
use crate::group::PGroup;
use crate::lemmas::{verify_tensor_factorization, TensorFactorization};
use crate::linalg::{FpVector, Prime};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationFile {
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub p: u32,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationFile>,
}

/// A validated group with the raw spanning vectors of a factorization.
#[derive(Clone, Debug)]
pub struct LoadedInput {
    pub group: PGroup,
    pub factorization: Option<(Vec<FpVector>, Vec<FpVector>)>,
}

impl LoadedInput {
    /// Checks the factorization vectors span a tensor factorization.
    pub fn tensor_factorization(&self, ctx: &AlgebraContext) -> Result<Option<TensorFactorization>> {
        let Some((b, c)) = &self.factorization else {
            return Ok(None);
        };
        let b = AugmentedSubalgebra::from_vectors(ctx, b)?;
        let c = AugmentedSubalgebra::from_vectors(ctx, c)?;
        verify_tensor_factorization(ctx, b, c).map(Some)
    }
}

pub fn parse_input(text: &str) -> Result<LoadedInput> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    load_group_file(file)
}

pub fn load_input(path: &Path) -> Result<LoadedInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn load_group_file(file: GroupFile) -> Result<LoadedInput> {
    if let Some(v) = file.format.filter(|&v| v != FORMAT_VERSION) {
        return Err(Error::Parse(format!("field `format`: unsupported version {v}")));
    }
    let p = Prime::new(file.p)?;
    if file.table.len() != file.order {
        return Err(Error::Parse(format!(
            "field `order`: {} but `table` has {} rows",
            file.order,
            file.table.len()
        )));
    }
    let n = file.order;
    // where the identity sits before normalization, so vectors can follow it
    let identity = (0..n).find(|&e| {
        file.table[e].len() == n && (0..n).all(|x| file.table[e][x] == x && file.table.get(x).and_then(|r| r.get(e)) == Some(&x))
    });
    let group = PGroup::from_table(p, &file.table, file.name.clone())?;
    let swap = |x: usize| match identity {
        Some(e) if x == 0 => e,
        Some(e) if x == e => 0,
        _ => x,
    };
    let factorization = match &file.factorization {
        None => None,
        Some(f) => {
            let convert = |which: &str, rows: &[Vec<i64>]| -> Result<Vec<FpVector>> {
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| {
                        if r.len() != n {
                            return Err(Error::Parse(format!(
                                "field `factorization.{which}[{i}]`: length {} (expected {n})",
                                r.len()
                            )));
                        }
                        let permuted: Vec<i64> = (0..n).map(|k| r[swap(k)]).collect();
                        Ok(FpVector::from_residues(p, &permuted))
                    })
                    .collect()
            };
            Some((convert("B", &f.b)?, convert("C", &f.c)?))
        }
    };
    Ok(LoadedInput { group, factorization })
}

/// The file form of a group, optionally with factorization vectors.
pub fn group_file(g: &PGroup, factorization: Option<(&[FpVector], &[FpVector])>) -> GroupFile {
    let rows = |vs: &[FpVector]| vs.iter().map(|v| v.to_residues().into_iter().map(i64::from).collect()).collect();
    GroupFile {
        format: Some(FORMAT_VERSION),
        p: g.p().get(),
        order: g.order(),
        table: g.table_rows(),
        name: g.name().to_string(),
        factorization: factorization.map(|(b, c)| FactorizationFile { b: rows(b), c: rows(c) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::group::build_named;

    #[test]
    fn cyclic_four() {
        let text = r#"{"p": 2, "order": 4, "name": "C4",
            "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#;
        let g = parse_input(text).unwrap().group;
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(1), 4);
    }

    #[test]
    fn broken_associativity_names_the_triple() {
        // Z/8 with the intercalate at rows {1,5} x columns {1,5} switched:
        // still a Latin square with identity 0, but no longer associative
        let mut table: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| (a + b) % 8).collect()).collect();
        table[1][1] = 6;
        table[1][5] = 2;
        table[5][1] = 2;
        table[5][5] = 6;
        let file = GroupFile { format: None, p: 2, order: 8, table, name: String::new(), factorization: None };
        let err = load_group_file(file).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err}");
        assert!(err.to_string().contains("(1*1)*"), "{err}");
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(parse_input(r#"{"p": 2, "order": 2}"#), Err(Error::Parse(m)) if m.contains("table")));
        assert!(matches!(parse_input(r#"{"p": 2, "order": 3, "table": [[0,1],[1,0]]}"#), Err(Error::Parse(_))));
        assert!(matches!(parse_input(r#"{"p": 7, "order": 1, "table": [[0]]}"#), Err(Error::UnsupportedPrime(7))));
    }

    #[test]
    fn non_closed_factor_is_rejected() {
        let g = build_named("C4").unwrap();
        let ctx = AlgebraContext::new(g.clone());
        let b = vec![ctx.one(), ctx.e(1)];
        let c = vec![ctx.one()];
        let text = serde_json::to_string(&group_file(&g, Some((&b, &c)))).unwrap();
        let input = parse_input(&text).unwrap();
        let err = input.tensor_factorization(&ctx).unwrap_err();
        assert!(matches!(err, Error::NotSubalgebra(_)));
        assert!(err.to_string().contains("not a subalgebra"));
    }

    #[test]
    fn identity_is_normalized_with_vectors() {
        // C2 × C2 with the identity stored at index 2
        let text = r#"{"p": 2, "order": 4, "table": [[2,3,0,1],[3,2,1,0],[0,1,2,3],[1,0,3,2]],
            "factorization": {"B": [[0,0,1,0],[1,0,0,0]], "C": [[0,0,1,0],[0,1,0,0]]}}"#;
        let input = parse_input(text).unwrap();
        let ctx = AlgebraContext::new(input.group.clone());
        let (b, _) = input.factorization.clone().unwrap();
        assert_eq!(b[0], ctx.one());
        assert!(input.tensor_factorization(&ctx).unwrap().is_some());
    }

    #[test]
    fn round_trip() {
        let g = build_named("Q8").unwrap();
        let text = serde_json::to_string(&group_file(&g, None)).unwrap();
        let back = parse_input(&text).unwrap().group;
        assert_eq!(back, g);
    }
}
