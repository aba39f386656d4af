//! Noncommutative polynomials with rational coefficients, and the expression parser.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::fmt_rational;
use super::lexer::{Statement, Tok};
use crate::error::Result;
use crate::exactlin::word;
use crate::exactlin::{FieldConfig, SparseVec};

/// Words (letter sequences) with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    pub terms: BTreeMap<Vec<usize>, BigRational>,
}

impl Poly {
    pub fn constant(q: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(vec![], q);
        }
        Poly { terms }
    }

    pub fn letter(a: usize) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![a], BigRational::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: BigRational) {
        let entry = self.terms.entry(w.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Poly {
        let mut out = Poly::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * q);
        }
        out
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&vec![]).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|w| w.len()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The homogeneous part of degree `n` as a tensor over the word basis.
    pub fn component(&self, n: usize, d: usize, field: FieldConfig) -> Result<SparseVec> {
        let mut pairs = Vec::new();
        for (w, c) in &self.terms {
            if w.len() == n {
                pairs.push((word::index(w, d), field.from_rational(c)?));
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    /// Builds from a tensor over words of length `n`; only rational scalars are accepted.
    pub fn from_tensor(v: &SparseVec, n: usize, d: usize) -> Option<Poly> {
        let mut p = Poly::default();
        for (i, c) in v.iter() {
            p.add_term(word::letters(*i, d, n), c.as_rational()?.clone());
        }
        Some(p)
    }

    /// Canonical text: terms by degree (descending) then word order, explicit `*`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<usize>> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut out = String::new();
        for (k, w) in keys.into_iter().enumerate() {
            let c = &self.terms[w];
            let neg = c < &BigRational::zero();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let letters: Vec<&str> = w.iter().map(|&a| names[a].as_str()).collect();
            if w.is_empty() {
                out.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&letters.join("*"));
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&abs), letters.join("*")));
            }
        }
        out
    }
}

/// Names visible inside expressions.
pub struct Scope<'a> {
    pub generators: &'a [String],
    pub params: &'a HashMap<String, BigRational>,
}

struct Parser<'a> {
    st: &'a Statement,
    pos: usize,
    end: usize,
    scope: &'a Scope<'a>,
}

/// Parses `st.tokens[start..end]` as a polynomial expression.
pub fn parse_expr(st: &Statement, start: usize, end: usize, scope: &Scope) -> Result<Poly> {
    let mut p = Parser {
        st,
        pos: start,
        end,
        scope,
    };
    if start >= end {
        return Err(st.error_at(end, "expected an expression"));
    }
    let value = p.expr()?;
    if p.pos < end {
        let msg = match &st.tokens[p.pos].tok {
            Tok::Ident(_) | Tok::Int(_) | Tok::Sym('(') => "expected an operator; juxtaposition is not multiplication, use '*'",
            _ => "unexpected token",
        };
        return Err(st.error_at(p.pos, msg));
    }
    Ok(value)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        if self.pos < self.end {
            Some(&self.st.tokens[self.pos].tok)
        } else {
            None
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Sym(c @ ('*' | '/'))) = self.peek().cloned() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = acc.mul(&rhs);
            } else {
                let q = rhs
                    .as_constant()
                    .ok_or_else(|| self.st.error_at(at, "division is only allowed by scalars"))?;
                if q.is_zero() {
                    return Err(self.st.error_at(at, "division by zero"));
                }
                acc = acc.scale(&q.recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if let Some(Tok::Sym('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => n.to_u32().filter(|&e| e <= 64),
                _ => None,
            }
            .ok_or_else(|| self.st.error_at(self.pos, "expected a small nonnegative integer exponent"))?;
            self.pos += 1;
            let mut acc = Poly::constant(BigRational::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.st.error_at(self.pos, "unexpected end of expression"));
        };
        let at = self.pos;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Poly::constant(BigRational::from_integer(n))),
            Tok::Ident(name) => {
                if let Some(a) = self.scope.generators.iter().position(|g| *g == name) {
                    Ok(Poly::letter(a))
                } else if let Some(q) = self.scope.params.get(&name) {
                    Ok(Poly::constant(q.clone()))
                } else {
                    Err(self.st.error_at(at, format!("unknown name '{name}'")))
                }
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.st.error_at(self.pos, "expected ')'")),
                }
            }
            Tok::Sym(c) => Err(self.st.error_at(at, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses a signed integer or fraction literal spanning `tokens[start..end]`.
pub fn parse_scalar(st: &Statement, start: usize, end: usize) -> Result<BigRational> {
    let toks = &st.tokens[start.min(st.tokens.len())..end.min(st.tokens.len())];
    let bad = || st.error_at(start, "expected an integer or a fraction a/b");
    let (neg, rest) = match toks.first().map(|t| &t.tok) {
        Some(Tok::Sym('-')) => (true, &toks[1..]),
        _ => (false, toks),
    };
    let q = match rest {
        [a] => match &a.tok {
            Tok::Int(n) => BigRational::from_integer(n.clone()),
            _ => return Err(bad()),
        },
        [a, s, b] => match (&a.tok, &s.tok, &b.tok) {
            (Tok::Int(n), Tok::Sym('/'), Tok::Int(m)) => {
                if m.is_zero() {
                    return Err(st.error_at(start, "zero denominator"));
                }
                BigRational::new(n.clone(), m.clone())
            }
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    };
    Ok(if neg { -q } else { q })
}

pub fn int_of(st: &Statement, idx: usize) -> Result<BigInt> {
    match st.tokens.get(idx).map(|t| &t.tok) {
        Some(Tok::Int(n)) => Ok(n.clone()),
        _ => Err(st.error_at(idx, "expected an integer")),
    }
}

#[cfg(test)]
mod tests {
    use super::super::lexer::statements;
    use super::*;
    use crate::error::Error;

    fn parse(text: &str, gens: &[&str]) -> Result<Poly> {
        let st = &statements(text)?[0];
        let generators: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let mut params = HashMap::new();
        params.insert("mu".to_string(), BigRational::from_integer(2.into()));
        let scope = Scope {
            generators: &generators,
            params: &params,
        };
        parse_expr(st, 0, st.tokens.len(), &scope)
    }

    #[test]
    fn expands_powers_and_params() {
        let p = parse("mu^2*b*a - a*b", &["a", "b"]).unwrap();
        assert_eq!(p.render(&["a".into(), "b".into()]), "-a*b + 4*b*a");
        let q = parse("(a + b)^2", &["a", "b"]).unwrap();
        assert_eq!(q.terms.len(), 4);
    }

    #[test]
    fn juxtaposition_is_rejected() {
        let e = parse("a b", &["a", "b"]).unwrap_err();
        assert!(matches!(e, Error::Syntax { column: 3, .. }));
    }

    #[test]
    fn dangling_operator_reports_tail() {
        let e = parse("a*b -", &["a", "b"]).unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, column: 6, .. }));
    }

    #[test]
    fn division_by_scalar_only() {
        assert!(parse("a/2", &["a"]).is_ok());
        assert!(parse("a/a", &["a"]).is_err());
    }
}
