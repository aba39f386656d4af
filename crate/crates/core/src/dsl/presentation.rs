//! Presentation documents.
//!
//! ```text
//! field rational            # or: field prime 7
//! param mu = 2
//! generators n0 n1 n2
//! N 2                       # optional, inferred from the relations
//! relation mu^2*n2*n0 - n0*n2 = mu*n1
//! differential t0 = t1*t2   # curved dual data only
//! curvature t0*t1
//! ```

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::fmt_rational;
use super::lexer::{statements, Statement, Tok};
use super::poly::{int_of, parse_expr, parse_scalar, Poly, Scope};
use crate::error::{Error, Result};
use crate::exactlin::word;
use crate::exactlin::{Echelon, FieldConfig, SparseMatrix, SparseVec, TensorSubspace};
use crate::homogeneous::HomogeneousPresentation;
use crate::nonhomogeneous::{CurvedDga, NonhomogeneousPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationDocument {
    pub name: Option<String>,
    pub field: FieldConfig,
    pub params: Vec<(String, BigRational)>,
    pub generators: Vec<String>,
    pub n: Option<usize>,
    /// Each relation as a single polynomial `lhs − rhs`.
    pub relations: Vec<Poly>,
    pub differentials: Vec<(usize, Poly)>,
    pub curvature: Option<Poly>,
}

fn keyword(st: &Statement) -> &str {
    match &st.tokens[0].tok {
        Tok::Ident(s) => s.as_str(),
        _ => "",
    }
}

fn find_sym(st: &Statement, from: usize, c: char) -> Option<usize> {
    (from..st.tokens.len()).find(|&i| st.tokens[i].tok == Tok::Sym(c))
}

pub(crate) fn parse_field(st: &Statement) -> Result<FieldConfig> {
    let toks: Vec<&Tok> = st.tokens[1..].iter().map(|t| &t.tok).collect();
    match toks.as_slice() {
        [Tok::Ident(r)] if r == "rational" => Ok(FieldConfig::Rational),
        [Tok::Ident(p), Tok::Int(n)] | [Tok::Ident(p), Tok::Sym(':'), Tok::Int(n)] if p == "prime" => {
            let n = n.to_u64().ok_or_else(|| st.error_at(2, "modulus too large"))?;
            FieldConfig::prime(n).map_err(|e| st.error_at(2, e.to_string()))
        }
        _ => Err(st.error_at(1, "expected 'rational' or 'prime <p>'")),
    }
}

pub(crate) fn single_ident(st: &Statement, idx: usize) -> Result<String> {
    match st.tokens.get(idx).map(|t| &t.tok) {
        Some(Tok::Ident(s)) => Ok(s.clone()),
        _ => Err(st.error_at(idx, "expected a name")),
    }
}

pub(crate) fn small_int(st: &Statement, idx: usize) -> Result<usize> {
    let n: BigInt = int_of(st, idx)?;
    n.to_usize().ok_or_else(|| st.error_at(idx, "integer out of range"))
}

pub(crate) fn expect_end(st: &Statement, idx: usize) -> Result<()> {
    if idx < st.tokens.len() {
        return Err(st.error_at(idx, "unexpected token"));
    }
    Ok(())
}

pub fn parse_presentation(text: &str) -> Result<PresentationDocument> {
    let mut doc = PresentationDocument {
        name: None,
        field: FieldConfig::Rational,
        params: Vec::new(),
        generators: Vec::new(),
        n: None,
        relations: Vec::new(),
        differentials: Vec::new(),
        curvature: None,
    };
    let mut params: HashMap<String, BigRational> = HashMap::new();
    let mut have_generators = false;
    // (statement, max degree of the right-hand side) for the post-pass check
    let mut rhs_checks: Vec<(Statement, usize, usize)> = Vec::new();
    for st in statements(text)? {
        match keyword(&st) {
            "name" => {
                doc.name = Some(single_ident(&st, 1)?);
                expect_end(&st, 2)?;
            }
            "field" => doc.field = parse_field(&st)?,
            "param" => {
                let name = single_ident(&st, 1)?;
                if st.tokens.get(2).map(|t| &t.tok) != Some(&Tok::Sym('=')) {
                    return Err(st.error_at(2, "expected '='"));
                }
                if params.contains_key(&name) || doc.generators.contains(&name) {
                    return Err(st.error_at(1, format!("'{name}' is already defined")));
                }
                let q = parse_scalar(&st, 3, st.tokens.len())?;
                params.insert(name.clone(), q.clone());
                doc.params.push((name, q));
            }
            "generators" => {
                if have_generators {
                    return Err(st.error_at(0, "generators declared twice"));
                }
                have_generators = true;
                for i in 1..st.tokens.len() {
                    let g = single_ident(&st, i)?;
                    if doc.generators.contains(&g) || params.contains_key(&g) {
                        return Err(st.error_at(i, format!("'{g}' is already defined")));
                    }
                    doc.generators.push(g);
                }
                if doc.generators.is_empty() {
                    return Err(st.error_at(1, "expected at least one generator"));
                }
            }
            "N" => {
                let n = small_int(&st, 1)?;
                if n < 2 {
                    return Err(st.error_at(1, "N must be at least 2"));
                }
                expect_end(&st, 2)?;
                doc.n = Some(n);
            }
            "relation" => {
                if !have_generators {
                    return Err(st.error_at(0, "relation before generators"));
                }
                let scope = Scope {
                    generators: &doc.generators,
                    params: &params,
                };
                let eq = find_sym(&st, 1, '=');
                let lhs = parse_expr(&st, 1, eq.unwrap_or(st.tokens.len()), &scope)?;
                let f = match eq {
                    Some(e) => {
                        let rhs = parse_expr(&st, e + 1, st.tokens.len(), &scope)?;
                        if let Some(deg) = rhs.max_degree() {
                            rhs_checks.push((st.clone(), e + 1, deg));
                        }
                        lhs.sub(&rhs)
                    }
                    None => lhs,
                };
                if f.is_zero() {
                    return Err(st.error_at(1, "relation is identically zero"));
                }
                doc.relations.push(f);
            }
            "differential" => {
                if !have_generators {
                    return Err(st.error_at(0, "differential before generators"));
                }
                let g = single_ident(&st, 1)?;
                let a = doc
                    .generators
                    .iter()
                    .position(|x| *x == g)
                    .ok_or_else(|| st.error_at(1, format!("unknown generator '{g}'")))?;
                if st.tokens.get(2).map(|t| &t.tok) != Some(&Tok::Sym('=')) {
                    return Err(st.error_at(2, "expected '='"));
                }
                if doc.differentials.iter().any(|(b, _)| *b == a) {
                    return Err(st.error_at(1, format!("differential of '{g}' given twice")));
                }
                let scope = Scope {
                    generators: &doc.generators,
                    params: &params,
                };
                let p = parse_expr(&st, 3, st.tokens.len(), &scope)?;
                doc.differentials.push((a, p));
            }
            "curvature" => {
                if doc.curvature.is_some() {
                    return Err(st.error_at(0, "curvature given twice"));
                }
                let scope = Scope {
                    generators: &doc.generators,
                    params: &params,
                };
                doc.curvature = Some(parse_expr(&st, 1, st.tokens.len(), &scope)?);
            }
            other => return Err(st.error_at(0, format!("unknown statement '{other}'"))),
        }
    }
    if !have_generators {
        return Err(Error::Semantic("missing 'generators' statement".into()));
    }
    doc.differentials.sort_by_key(|(a, _)| *a);
    let n = doc.degree()?;
    for (st, at, deg) in rhs_checks {
        if deg >= n {
            return Err(st.error_at(at, format!("right-hand side has degree {deg}, must be below N = {n}")));
        }
    }
    Ok(doc)
}

impl PresentationDocument {
    /// The declared `N`, or the top degree of the relations.
    pub fn degree(&self) -> Result<usize> {
        let top = self.relations.iter().filter_map(|p| p.max_degree()).max();
        match (self.n, top) {
            (Some(n), Some(t)) if t > n => Err(Error::Semantic(format!(
                "relation of degree {t} exceeds the declared N = {n}"
            ))),
            (Some(n), _) => Ok(n),
            (None, Some(t)) if t >= 2 => Ok(t),
            (None, Some(t)) => Err(Error::Semantic(format!("relations of degree {t} < 2; declare N"))),
            (None, None) => Err(Error::Semantic("no relations: declare N".into())),
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "input".to_string())
    }

    fn check_tops(&self, n: usize) -> Result<()> {
        for (i, p) in self.relations.iter().enumerate() {
            if !p.degrees().contains(&n) {
                return Err(Error::Semantic(format!(
                    "relation {} has no component in degree N = {n}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// The presentation as an N-homogeneous algebra; lower-degree terms are an error.
    pub fn to_homogeneous(&self, field: FieldConfig) -> Result<HomogeneousPresentation> {
        let n = self.degree()?;
        self.check_tops(n)?;
        let d = self.generators.len();
        word::word_count(d, n)?;
        let mut rows = Vec::new();
        for (i, p) in self.relations.iter().enumerate() {
            if p.degrees() != [n] {
                return Err(Error::DegreeMixing(format!(
                    "relation {} ({}) has terms below degree {n}",
                    i + 1,
                    p.render(&self.generators)
                )));
            }
            rows.push(p.component(n, d, field)?);
        }
        HomogeneousPresentation::from_relations(self.display_name(), field, self.generators.clone(), n, rows)
    }

    /// The presentation `r − φ(r)`, after checking that `φ` is well defined on `R`.
    pub fn to_nonhomogeneous(&self, field: FieldConfig) -> Result<NonhomogeneousPresentation> {
        let n = self.degree()?;
        self.check_tops(n)?;
        let d = self.generators.len();
        let top_size = word::word_count(d, n)?;
        // lower parts laid out after the top block: degree n−1 first, then down to 0
        let mut offsets = vec![0usize; n];
        let mut off = top_size;
        for k in (0..n).rev() {
            offsets[k] = off;
            off += word::pow(d, k);
        }
        let total = off;
        let mut tops = Vec::new();
        let mut full = Vec::new();
        for p in &self.relations {
            let top = p.component(n, d, field)?;
            let mut pairs: Vec<_> = top.iter().cloned().collect();
            for k in 0..n {
                let low = p.component(k, d, field)?;
                pairs.extend(low.iter().map(|(i, c)| (offsets[k] + i, c.clone())));
            }
            tops.push(top);
            full.push(SparseVec::from_pairs(pairs));
        }
        // a combination of relations with vanishing top must have vanishing lower part
        let top_matrix = SparseMatrix::from_rows(field, top_size, tops);
        for c in top_matrix.left_kernel() {
            let mut lower = SparseVec::new();
            for (j, s) in c.iter() {
                lower.axpy(s, &full[*j]);
            }
            if !lower.is_zero() {
                let witness: Vec<String> = c
                    .iter()
                    .map(|(j, s)| format!("({s})*[relation {}]", j + 1))
                    .collect();
                return Err(Error::Semantic(format!(
                    "φ is not well defined: {} has zero degree-{n} part but nonzero lower part",
                    witness.join(" + ")
                )));
            }
        }
        let mut ech = Echelon::new(field, total);
        for v in full {
            ech.insert(v);
        }
        let rref = ech.into_rref();
        let mut tops = Vec::new();
        let mut phi = vec![Vec::new(); n];
        for row in &rref.rows {
            let mut top = Vec::new();
            let mut lows: Vec<Vec<_>> = vec![Vec::new(); n];
            for (i, c) in row.iter() {
                if *i < top_size {
                    top.push((*i, c.clone()));
                } else {
                    let k = (0..n).find(|&k| *i >= offsets[k] && *i < offsets[k] + word::pow(d, k)).unwrap();
                    lows[k].push((i - offsets[k], -c));
                }
            }
            tops.push(SparseVec::from_pairs(top));
            for k in 0..n {
                phi[k].push(SparseVec::from_pairs(std::mem::take(&mut lows[k])));
            }
        }
        let r = TensorSubspace::span(field, d, n, tops.clone())?;
        debug_assert_eq!(r.basis(), tops.as_slice());
        NonhomogeneousPresentation::new(self.display_name(), self.generators.clone(), n, r, phi)
    }

    /// Curved data `(A, δ, F)`: the relations present `A` and `differential`/`curvature` give
    /// `δ` on generators and `F`, all quadratic.
    pub fn to_curved_dga(&self, field: FieldConfig) -> Result<CurvedDga> {
        let dual = self.to_homogeneous(field)?;
        if dual.n != 2 {
            return Err(Error::Semantic("curved data must be quadratic".into()));
        }
        let d = self.generators.len();
        let quadratic = |what: String, p: &Poly| -> Result<SparseVec> {
            if p.degrees().iter().any(|&k| k != 2) {
                return Err(Error::DegreeMixing(format!("{what} must be quadratic")));
            }
            p.component(2, d, field)
        };
        let mut delta = vec![SparseVec::new(); d];
        for (a, p) in &self.differentials {
            delta[*a] = quadratic(format!("the differential of '{}'", self.generators[*a]), p)?;
        }
        let curvature = match &self.curvature {
            Some(p) => quadratic("the curvature".into(), p)?,
            None => SparseVec::new(),
        };
        CurvedDga::from_tensors(dual, &delta, &curvature)
    }

    /// Canonical text; parsing it gives back an identical document.
    pub fn print(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name {name}\n"));
        }
        match self.field {
            FieldConfig::Rational => out.push_str("field rational\n"),
            FieldConfig::Prime(p) => out.push_str(&format!("field prime {p}\n")),
        }
        for (name, q) in &self.params {
            out.push_str(&format!("param {name} = {}\n", fmt_rational(q)));
        }
        out.push_str(&format!("generators {}\n", self.generators.join(" ")));
        if let Some(n) = self.n {
            out.push_str(&format!("N {n}\n"));
        }
        for p in &self.relations {
            out.push_str(&format!("relation {}\n", p.render(&self.generators)));
        }
        for (a, p) in &self.differentials {
            out.push_str(&format!("differential {} = {}\n", self.generators[*a], p.render(&self.generators)));
        }
        if let Some(f) = &self.curvature {
            out.push_str(&format!("curvature {}\n", f.render(&self.generators)));
        }
        out
    }

    /// Builds a document from a homogeneous presentation over the rationals.
    pub fn from_homogeneous(pres: &HomogeneousPresentation) -> Option<Self> {
        let relations = pres
            .relations
            .basis()
            .iter()
            .map(|r| Poly::from_tensor(r, pres.n, pres.d()))
            .collect::<Option<Vec<_>>>()?;
        Some(PresentationDocument {
            name: Some(pres.name.replace("^!", "_dual")),
            field: pres.field(),
            params: Vec::new(),
            generators: pres.generators.clone(),
            n: Some(pres.n),
            relations,
            differentials: Vec::new(),
            curvature: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const IRW: &str = "name irw\nparam mu = 2\ngenerators n0 n1 n2\n\
        relation mu^2*n2*n0 - n0*n2 = mu*n1\n\
        relation mu^4*n1*n0 - n0*n1 = mu^2*(1 + mu^2)*n0\n\
        relation mu^4*n2*n1 - n1*n2 = mu^2*(1 + mu^2)*n2\n";

    #[test]
    fn parses_irw_with_parameters() {
        let doc = parse_presentation(IRW).unwrap();
        assert_eq!(doc.degree().unwrap(), 2);
        assert_eq!(doc.relations[0].render(&doc.generators), "-n0*n2 + 4*n2*n0 - 2*n1");
        let nh = doc.to_nonhomogeneous(FieldConfig::Rational).unwrap();
        assert_eq!(nh.relations.dim(), 3);
        assert!(matches!(doc.to_homogeneous(FieldConfig::Rational), Err(Error::DegreeMixing(_))));
    }

    #[test]
    fn print_round_trip() {
        let doc = parse_presentation(IRW).unwrap();
        assert_eq!(parse_presentation(&doc.print()).unwrap(), doc);
    }

    #[test]
    fn rhs_must_be_lower() {
        let e = parse_presentation("generators x y; relation x*y = y*x").unwrap_err();
        assert!(matches!(e, Error::Syntax { .. }));
    }

    #[test]
    fn ill_defined_phi_has_witness() {
        let e = parse_presentation("generators x y; relation x*y = x; relation x*y = y")
            .unwrap()
            .to_nonhomogeneous(FieldConfig::Rational)
            .unwrap_err();
        match e {
            Error::Semantic(m) => assert!(m.contains("relation 1") && m.contains("relation 2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_tail() {
        let e = parse_presentation("generators x y\nrelation x*y -").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, .. }));
    }
}
