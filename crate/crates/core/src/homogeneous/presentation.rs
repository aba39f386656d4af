use crate::error::{Error, Result};
use crate::exactlin::word;
use crate::exactlin::{FieldConfig, SparseVec, TensorSubspace};

/// `A(E, R) = T(E)/(R)` with `R ⊂ E^{⊗N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPresentation {
    pub name: String,
    pub generators: Vec<String>,
    pub n: usize,
    pub relations: TensorSubspace,
}

impl HomogeneousPresentation {
    pub fn new(name: impl Into<String>, generators: Vec<String>, n: usize, relations: TensorSubspace) -> Result<Self> {
        if n < 2 {
            return Err(Error::Semantic(format!("homogeneity degree must be at least 2, got {n}")));
        }
        if generators.is_empty() {
            return Err(Error::Semantic("at least one generator is required".into()));
        }
        if relations.degree() != n || relations.d() != generators.len() {
            return Err(Error::DimensionMismatch(format!(
                "relations live in degree {} over {} letters, expected degree {n} over {}",
                relations.degree(),
                relations.d(),
                generators.len()
            )));
        }
        Ok(HomogeneousPresentation {
            name: name.into(),
            generators,
            n,
            relations,
        })
    }

    /// Builds a presentation from relation vectors over the word basis of `E^{⊗N}`.
    pub fn from_relations(
        name: impl Into<String>,
        field: FieldConfig,
        generators: Vec<String>,
        n: usize,
        relations: Vec<SparseVec>,
    ) -> Result<Self> {
        let r = TensorSubspace::span(field, generators.len(), n, relations)?;
        HomogeneousPresentation::new(name, generators, n, r)
    }

    pub fn d(&self) -> usize {
        self.generators.len()
    }

    pub fn field(&self) -> FieldConfig {
        self.relations.field()
    }

    /// `A^! = A(E*, R^⊥)`. Dual generators carry a trailing `'` (removed again on the way back).
    pub fn koszul_dual(&self) -> HomogeneousPresentation {
        let generators = self
            .generators
            .iter()
            .map(|g| match g.strip_suffix('\'') {
                Some(base) => base.to_string(),
                None => format!("{g}'"),
            })
            .collect();
        let name = match self.name.strip_suffix("^!") {
            Some(base) => base.to_string(),
            None => format!("{}^!", self.name),
        };
        HomogeneousPresentation {
            name,
            generators,
            n: self.n,
            relations: self.relations.annihilator(),
        }
    }

    pub fn render_word(&self, idx: usize, len: usize) -> String {
        word::render(idx, len, &self.generators)
    }

    /// Renders a tensor as a polynomial in the generators.
    pub fn render_tensor(&self, v: &SparseVec, len: usize) -> String {
        render_poly(v, |i| self.render_word(i, len))
    }
}

pub(crate) fn render_poly(v: &SparseVec, mut word: impl FnMut(usize) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let w = word(*i);
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&w);
        } else if w == "1" {
            out.push_str(&abs.to_string());
        } else {
            out.push_str(&format!("{abs}*{w}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_of_dual_restores_relations() {
        let f = FieldConfig::Rational;
        let comm = SparseVec::from_pairs(vec![(1, f.one()), (2, -f.one())]);
        let a = HomogeneousPresentation::from_relations("sym2", f, vec!["x".into(), "y".into()], 2, vec![comm]).unwrap();
        let dual = a.koszul_dual();
        assert_eq!(dual.relations.dim(), 3);
        assert_eq!(dual.generators, vec!["x'", "y'"]);
        let back = dual.koszul_dual();
        assert_eq!(back, a);
        assert_eq!(a.render_tensor(&a.relations.basis()[0], 2), "x*y - y*x");
    }
}
