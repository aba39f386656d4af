//! Representation documents: one matrix per generator, rows separated by `|`.
//!
//! ```text
//! name trivial
//! side left                 # or: right
//! dim 2
//! act x = 0 1 | 0 0
//! ```

use num_rational::BigRational;

use super::fmt_rational;
use super::lexer::{statements, Tok};
use super::poly::parse_scalar;
use super::presentation::{expect_end, single_ident, small_int};
use crate::error::{Error, Result};
use crate::exactlin::{FieldConfig, SparseMatrix};
use crate::homogeneous::Side;
use crate::nonhomogeneous::{NonhomogeneousPresentation, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationDocument {
    pub name: Option<String>,
    pub side: Side,
    pub dim: usize,
    /// `(generator, rows)`; generators without an entry act by zero.
    pub actions: Vec<(String, Vec<Vec<BigRational>>)>,
}

pub fn parse_representation(text: &str) -> Result<RepresentationDocument> {
    let mut name = None;
    let mut side = Side::Left;
    let mut dim = None;
    let mut actions: Vec<(String, Vec<Vec<BigRational>>)> = Vec::new();
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
            "side" => {
                side = match single_ident(&st, 1)?.as_str() {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    _ => return Err(st.error_at(1, "expected 'left' or 'right'")),
                };
                expect_end(&st, 2)?;
            }
            "dim" => {
                dim = Some(small_int(&st, 1)?);
                expect_end(&st, 2)?;
            }
            "act" => {
                let g = single_ident(&st, 1)?;
                if st.tokens.get(2).map(|t| &t.tok) != Some(&Tok::Sym('=')) {
                    return Err(st.error_at(2, "expected '='"));
                }
                if actions.iter().any(|(h, _)| *h == g) {
                    return Err(st.error_at(1, format!("duplicate action for '{g}'")));
                }
                let mut rows = Vec::new();
                let mut row = Vec::new();
                let mut i = 3;
                loop {
                    match st.tokens.get(i).map(|t| &t.tok) {
                        None => {
                            rows.push(std::mem::take(&mut row));
                            break;
                        }
                        Some(Tok::Sym('|')) => {
                            rows.push(std::mem::take(&mut row));
                            i += 1;
                        }
                        _ => {
                            let mut j = i;
                            if st.tokens[j].tok == Tok::Sym('-') {
                                j += 1;
                            }
                            j += 1;
                            if st.tokens.get(j).map(|t| &t.tok) == Some(&Tok::Sym('/')) {
                                j += 2;
                            }
                            row.push(parse_scalar(&st, i, j)?);
                            i = j;
                        }
                    }
                }
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(st.error_at(3, "the action matrix must be square"));
                }
                actions.push((g, rows));
            }
            other => return Err(st.error_at(0, format!("unknown statement '{other}'"))),
        }
    }
    let dim = dim.ok_or_else(|| Error::Semantic("missing 'dim'".into()))?;
    if dim == 0 {
        return Err(Error::Semantic("dim must be positive".into()));
    }
    if let Some((g, _)) = actions.iter().find(|(_, rows)| rows.len() != dim) {
        return Err(Error::Semantic(format!("action of '{g}' is not {dim}x{dim}")));
    }
    Ok(RepresentationDocument {
        name,
        side,
        dim,
        actions,
    })
}

impl RepresentationDocument {
    /// Matches actions to the generators of `pres` by name and validates the module structure.
    pub fn to_representation(&self, pres: &NonhomogeneousPresentation) -> Result<Representation> {
        let field: FieldConfig = pres.field();
        if let Some((g, _)) = self.actions.iter().find(|(g, _)| !pres.generators.contains(g)) {
            return Err(Error::Semantic(format!("'{g}' is not a generator")));
        }
        let mut mats = Vec::new();
        for g in &pres.generators {
            let m = match self.actions.iter().find(|(h, _)| h == g) {
                Some((_, rows)) => {
                    let mut dense = Vec::new();
                    for r in rows {
                        dense.push(r.iter().map(|q| field.from_rational(q)).collect::<Result<Vec<_>>>()?);
                    }
                    SparseMatrix::from_dense(field, &dense)
                }
                None => SparseMatrix::zero(field, self.dim, self.dim),
            };
            mats.push(m);
        }
        Representation::new(pres, self.side, self.dim, mats)
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("name {n}\n"));
        }
        let side = match self.side {
            Side::Left => "left",
            Side::Right | Side::Bimodule => "right",
        };
        out.push_str(&format!("side {side}\ndim {}\n", self.dim));
        for (g, rows) in &self.actions {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| r.iter().map(fmt_rational).collect::<Vec<_>>().join(" "))
                .collect();
            out.push_str(&format!("act {g} = {}\n", rows.join(" | ")));
        }
        out
    }
}
