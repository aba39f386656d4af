//! Potential documents.
//!
//! ```text
//! name levi-civita
//! field rational
//! generators x y z          # optional, defaults to x0 x1 ...
//! d 3
//! m 3
//! coef 0 1 2 = 1
//! coef 1 0 2 = -1
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::fmt_rational;
use super::lexer::{statements, Tok};
use super::poly::parse_scalar;
use super::presentation::{expect_end, parse_field, single_ident, small_int};
use crate::error::{Error, Result};
use crate::exactlin::{word, FieldConfig, SparseVec};
use crate::potential::Potential;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialDocument {
    pub name: Option<String>,
    pub field: FieldConfig,
    pub generators: Vec<String>,
    pub m: usize,
    pub coeffs: BTreeMap<Vec<usize>, BigRational>,
}

pub fn parse_potential(text: &str) -> Result<PotentialDocument> {
    let mut name = None;
    let mut field = None;
    let mut generators: Option<Vec<String>> = None;
    let mut d: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut entries = Vec::new();
    for st in statements(text)? {
        let key = match &st.tokens[0].tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(st.error_at(0, "expected a keyword")),
        };
        match key.as_str() {
            "name" => {
                name = Some(single_ident(&st, 1)?);
                expect_end(&st, 2)?;
            }
            "field" => field = Some(parse_field(&st)?),
            "generators" => {
                let mut gens = Vec::new();
                for i in 1..st.tokens.len() {
                    let g = single_ident(&st, i)?;
                    if gens.contains(&g) {
                        return Err(st.error_at(i, format!("duplicate generator '{g}'")));
                    }
                    gens.push(g);
                }
                if gens.is_empty() {
                    return Err(st.error_at(1, "expected generator names"));
                }
                generators = Some(gens);
            }
            "d" => {
                d = Some(small_int(&st, 1)?);
                expect_end(&st, 2)?;
            }
            "m" => {
                m = Some(small_int(&st, 1)?);
                expect_end(&st, 2)?;
            }
            "coef" => {
                let eq = (1..st.tokens.len())
                    .find(|&i| st.tokens[i].tok == Tok::Sym('='))
                    .ok_or_else(|| st.error_at(st.tokens.len(), "expected '='"))?;
                let mut idx = Vec::new();
                for i in 1..eq {
                    idx.push(small_int(&st, i)?);
                }
                let c = parse_scalar(&st, eq + 1, st.tokens.len())?;
                entries.push((st.clone(), idx, c));
            }
            other => return Err(st.error_at(0, format!("unknown statement '{other}'"))),
        }
    }
    let d = match (d, &generators) {
        (Some(d), Some(g)) if g.len() != d => {
            return Err(Error::Semantic(format!("d {d} but {} generators", g.len())))
        }
        (Some(d), _) => d,
        (None, Some(g)) => g.len(),
        (None, None) => return Err(Error::Semantic("missing 'd' or 'generators'".into())),
    };
    if d == 0 {
        return Err(Error::Semantic("d must be positive".into()));
    }
    let m = m.ok_or_else(|| Error::Semantic("missing 'm'".into()))?;
    if m == 0 {
        return Err(Error::Semantic("m must be positive".into()));
    }
    let generators = generators.unwrap_or_else(|| (0..d).map(|i| format!("x{i}")).collect());
    let mut coeffs = BTreeMap::new();
    for (st, idx, c) in entries {
        if idx.len() != m {
            return Err(st.error_at(1, format!("expected {m} indices, found {}", idx.len())));
        }
        if let Some(pos) = idx.iter().position(|&i| i >= d) {
            return Err(st.error_at(1 + pos, format!("index {} out of range 0..{d}", idx[pos])));
        }
        if coeffs.contains_key(&idx) {
            return Err(st.error_at(1, "duplicate coefficient entry"));
        }
        if !c.is_zero() {
            coeffs.insert(idx, c);
        }
    }
    if coeffs.is_empty() {
        return Err(Error::Semantic("the potential is zero".into()));
    }
    Ok(PotentialDocument {
        name,
        field: field.unwrap_or(FieldConfig::Rational),
        generators,
        m,
        coeffs,
    })
}

impl PotentialDocument {
    pub fn d(&self) -> usize {
        self.generators.len()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "potential".into())
    }

    pub fn to_potential(&self, field: FieldConfig) -> Result<Potential> {
        let d = self.d();
        let mut pairs = Vec::new();
        for (w, c) in &self.coeffs {
            pairs.push((word::index(w, d), field.from_rational(c)?));
        }
        Potential::new(self.generators.clone(), self.m, SparseVec::from_pairs(pairs))
    }

    pub fn from_potential(w: &Potential) -> Option<Self> {
        let mut coeffs = BTreeMap::new();
        for (i, c) in w.coeffs.iter() {
            coeffs.insert(word::letters(*i, w.d(), w.m), c.as_rational()?.clone());
        }
        Some(PotentialDocument {
            name: None,
            field: w.field(),
            generators: w.generators.clone(),
            m: w.m,
            coeffs,
        })
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("name {n}\n"));
        }
        out.push_str(&format!("field {}\n", self.field.label()));
        out.push_str(&format!("generators {}\n", self.generators.join(" ")));
        out.push_str(&format!("d {}\nm {}\n", self.d(), self.m));
        for (w, c) in &self.coeffs {
            let idx: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("coef {} = {}\n", idx.join(" "), fmt_rational(c)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEVI_CIVITA: &str = "name eps\nd 3\nm 3\ncoef 0 1 2 = 1\ncoef 1 2 0 = 1\ncoef 2 0 1 = 1\n\
        coef 1 0 2 = -1\ncoef 0 2 1 = -1\ncoef 2 1 0 = -1\n";

    #[test]
    fn levi_civita_parses() {
        let doc = parse_potential(LEVI_CIVITA).unwrap();
        assert_eq!(doc.d(), 3);
        assert_eq!(doc.coeffs.len(), 6);
        let w = doc.to_potential(FieldConfig::Rational).unwrap();
        assert_eq!(w.coeffs.nnz(), 6);
    }

    #[test]
    fn round_trip() {
        let doc = parse_potential(LEVI_CIVITA).unwrap();
        assert_eq!(parse_potential(&doc.print()).unwrap(), doc);
    }

    #[test]
    fn rejects_zero_duplicates_and_range() {
        assert!(parse_potential("d 2\nm 2\n").is_err());
        assert!(parse_potential("d 2\nm 2\ncoef 0 1 = 1\ncoef 0 1 = 2\n").is_err());
        let e = parse_potential("d 2\nm 2\ncoef 0 2 = 1\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 3, column: 8, .. }));
        assert!(parse_potential("d 2\nm 2\ncoef 0 1 = 0\n").is_err());
    }
}
