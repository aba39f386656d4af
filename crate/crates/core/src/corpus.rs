//! Built-in example documents.

use crate::dsl::{parse_potential, parse_presentation, parse_representation, PotentialDocument, PresentationDocument};
use crate::error::{Error, Result};
use crate::exactlin::FieldConfig;
use crate::homogeneous::HomogeneousPresentation;
use crate::nonhomogeneous::{CurvedDga, NonhomogeneousPresentation, Representation};
use crate::potential::{potential_algebra, Potential};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Homogeneous,
    Nonhomogeneous,
    /// A quadratic algebra with `differential` and `curvature` statements.
    Curved,
    /// A potential, studied through `𝒜(w, N)`.
    Potential { big_n: usize },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub text: &'static str,
}

#[derive(Clone, Debug)]
pub struct CorpusRepresentation {
    pub name: &'static str,
    /// Name of the corpus entry it represents.
    pub algebra: &'static str,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn presentation(&self) -> Result<PresentationDocument> {
        match self.kind {
            Kind::Potential { .. } => Err(Error::Precondition(format!("'{}' is a potential", self.name))),
            _ => parse_presentation(self.text),
        }
    }

    pub fn potential_document(&self) -> Result<PotentialDocument> {
        match self.kind {
            Kind::Potential { .. } => parse_potential(self.text),
            _ => Err(Error::Precondition(format!("'{}' is not a potential", self.name))),
        }
    }

    pub fn potential(&self, field: FieldConfig) -> Result<Potential> {
        self.potential_document()?.to_potential(field)
    }

    /// The homogeneous algebra of the entry: the presentation itself, the homogeneous part, the
    /// underlying algebra of curved data, or `𝒜(w, N)`.
    pub fn homogeneous(&self, field: FieldConfig) -> Result<HomogeneousPresentation> {
        let mut pres = match self.kind {
            Kind::Homogeneous | Kind::Curved => self.presentation()?.to_homogeneous(field)?,
            Kind::Nonhomogeneous => self.presentation()?.to_nonhomogeneous(field)?.homogeneous_part(),
            Kind::Potential { big_n } => potential_algebra(&self.potential(field)?, big_n)?,
        };
        pres.name = self.name.to_string();
        Ok(pres)
    }

    /// The presentation `r − φ(r)`; homogeneous entries have `φ = 0`.
    pub fn nonhomogeneous(&self, field: FieldConfig) -> Result<Option<NonhomogeneousPresentation>> {
        match self.kind {
            Kind::Homogeneous | Kind::Nonhomogeneous => {
                let mut p = self.presentation()?.to_nonhomogeneous(field)?;
                p.name = self.name.to_string();
                Ok(Some(p))
            }
            _ => Ok(None),
        }
    }

    pub fn curved(&self, field: FieldConfig) -> Result<Option<CurvedDga>> {
        match self.kind {
            Kind::Curved => self.presentation()?.to_curved_dga(field).map(Some),
            _ => Ok(None),
        }
    }
}

impl CorpusRepresentation {
    pub fn build(&self, field: FieldConfig) -> Result<Representation> {
        let entry = corpus_entry(self.algebra).ok_or_else(|| Error::Semantic(format!("unknown algebra '{}'", self.algebra)))?;
        let pres = entry
            .nonhomogeneous(field)?
            .ok_or_else(|| Error::Semantic(format!("'{}' has no presentation", self.algebra)))?;
        parse_representation(self.text)?.to_representation(&pres)
    }
}

const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "sym2",
        kind: Kind::Homogeneous,
        text: "name sym2\ngenerators x y\nrelation x*y - y*x\n",
    },
    CorpusEntry {
        name: "sym3",
        kind: Kind::Homogeneous,
        text: "name sym3\ngenerators x y z\nrelation x*y - y*x\nrelation y*z - z*y\nrelation z*x - x*z\n",
    },
    CorpusEntry {
        name: "ext2",
        kind: Kind::Homogeneous,
        text: "name ext2\ngenerators x y\nrelation x*x\nrelation y*y\nrelation x*y + y*x\n",
    },
    CorpusEntry {
        name: "ext3",
        kind: Kind::Homogeneous,
        text: "name ext3\ngenerators x y z\nrelation x*x\nrelation y*y\nrelation z*z\n\
               relation x*y + y*x\nrelation y*z + z*y\nrelation z*x + x*z\n",
    },
    CorpusEntry {
        name: "tensor2",
        kind: Kind::Homogeneous,
        text: "name tensor2\ngenerators x y\nN 2\n",
    },
    CorpusEntry {
        name: "dual_tensor2",
        kind: Kind::Homogeneous,
        text: "name dual_tensor2\ngenerators x y\nrelation x*x\nrelation x*y\nrelation y*x\nrelation y*y\n",
    },
    CorpusEntry {
        name: "cubic_monomial",
        kind: Kind::Homogeneous,
        text: "name cubic_monomial\ngenerators x y\nrelation x*y*x\nrelation y*x*y\n",
    },
    CorpusEntry {
        name: "irw_homogeneous",
        kind: Kind::Homogeneous,
        text: "name irw_homogeneous\nparam mu = 2\ngenerators n0 n1 n2\n\
               relation mu^2*n2*n0 - n0*n2\nrelation mu^4*n1*n0 - n0*n1\nrelation mu^4*n2*n1 - n1*n2\n",
    },
    CorpusEntry {
        name: "so3",
        kind: Kind::Nonhomogeneous,
        text: "name so3\ngenerators x y z\n\
               relation x*y - y*x = z\nrelation y*z - z*y = x\nrelation z*x - x*z = y\n",
    },
    CorpusEntry {
        name: "sl2",
        kind: Kind::Nonhomogeneous,
        text: "name sl2\ngenerators h e f\n\
               relation h*e - e*h = 2*e\nrelation h*f - f*h = -2*f\nrelation e*f - f*e = h\n",
    },
    CorpusEntry {
        name: "broken_jacobi",
        kind: Kind::Nonhomogeneous,
        text: "name broken_jacobi\ngenerators x y z\n\
               relation x*y - y*x = z\nrelation y*z - z*y = x\nrelation z*x - x*z = x\n",
    },
    CorpusEntry {
        name: "clifford2",
        kind: Kind::Nonhomogeneous,
        text: "name clifford2\ngenerators g1 g2\n\
               relation g1*g1 + g1*g1 = 2\nrelation g2*g2 + g2*g2 = 2\nrelation g1*g2 + g2*g1 = 0\n",
    },
    CorpusEntry {
        name: "clifford3",
        kind: Kind::Nonhomogeneous,
        text: "name clifford3\ngenerators g1 g2 g3\n\
               relation g1*g1 + g1*g1 = 2\nrelation g2*g2 + g2*g2 = 2\nrelation g3*g3 + g3*g3 = 2\n\
               relation g1*g2 + g2*g1 = 0\nrelation g1*g3 + g3*g1 = 0\nrelation g2*g3 + g3*g2 = 0\n",
    },
    CorpusEntry {
        name: "ccr1",
        kind: Kind::Nonhomogeneous,
        text: "name ccr1\nparam ih = 1\ngenerators q p\nrelation q*p - p*q = ih\n",
    },
    CorpusEntry {
        name: "ccr2",
        kind: Kind::Nonhomogeneous,
        text: "name ccr2\nparam ih = 1\ngenerators q1 q2 p1 p2\n\
               relation q1*q2 - q2*q1 = 0\nrelation p1*p2 - p2*p1 = 0\n\
               relation q1*p1 - p1*q1 = ih\nrelation q1*p2 - p2*q1 = 0\n\
               relation q2*p1 - p1*q2 = 0\nrelation q2*p2 - p2*q2 = ih\n",
    },
    CorpusEntry {
        name: "irw",
        kind: Kind::Nonhomogeneous,
        text: "name irw\nparam mu = 2\ngenerators n0 n1 n2\n\
               relation mu^2*n2*n0 - n0*n2 = mu*n1\n\
               relation mu^4*n1*n0 - n0*n1 = mu^2*(1 + mu^2)*n0\n\
               relation mu^4*n2*n1 - n1*n2 = mu^2*(1 + mu^2)*n2\n",
    },
    CorpusEntry {
        name: "diffw",
        kind: Kind::Curved,
        text: "name diffw\nparam mu = 2\ngenerators n0' n1' n2'\n\
               relation n0'*n0'\nrelation n1'*n1'\nrelation n2'*n2'\n\
               relation n2'*n0' + mu^2*n0'*n2'\nrelation n1'*n0' + mu^4*n0'*n1'\nrelation n2'*n1' + mu^4*n1'*n2'\n\
               differential n0' = -mu^2*(1 + mu^2)*n0'*n1'\n\
               differential n1' = -mu*n0'*n2'\n\
               differential n2' = -mu^2*(1 + mu^2)*n1'*n2'\n",
    },
    CorpusEntry {
        name: "unitalization",
        kind: Kind::Nonhomogeneous,
        text: "name unitalization\ngenerators e1 e2\n\
               relation e1*e1 = e1\nrelation e2*e2 = e2\nrelation e1*e2 = 0\nrelation e2*e1 = 0\n",
    },
    CorpusEntry {
        name: "levi_civita2",
        kind: Kind::Potential { big_n: 2 },
        text: "name levi_civita2\ngenerators x y\nd 2\nm 2\ncoef 0 1 = 1\ncoef 1 0 = -1\n",
    },
    CorpusEntry {
        name: "levi_civita3",
        kind: Kind::Potential { big_n: 2 },
        text: "name levi_civita3\ngenerators x y z\nd 3\nm 3\n\
               coef 0 1 2 = 1\ncoef 1 2 0 = 1\ncoef 2 0 1 = 1\n\
               coef 0 2 1 = -1\ncoef 2 1 0 = -1\ncoef 1 0 2 = -1\n",
    },
];

const REPRESENTATIONS: &[CorpusRepresentation] = &[
    CorpusRepresentation {
        name: "sl2_trivial",
        algebra: "sl2",
        text: "name sl2_trivial\nside left\ndim 1\n",
    },
    CorpusRepresentation {
        name: "sl2_standard",
        algebra: "sl2",
        text: "name sl2_standard\nside left\ndim 2\nact h = 1 0 | 0 -1\nact e = 0 1 | 0 0\nact f = 0 0 | 1 0\n",
    },
    CorpusRepresentation {
        name: "sl2_adjoint",
        algebra: "sl2",
        text: "name sl2_adjoint\nside left\ndim 3\n\
               act h = 0 0 0 | 0 2 0 | 0 0 -2\nact e = 0 0 1 | -2 0 0 | 0 0 0\nact f = 0 -1 0 | 0 0 0 | 2 0 0\n",
    },
    CorpusRepresentation {
        name: "so3_adjoint",
        algebra: "so3",
        text: "name so3_adjoint\nside left\ndim 3\n\
               act x = 0 0 0 | 0 0 -1 | 0 1 0\nact y = 0 0 1 | 0 0 0 | -1 0 0\nact z = 0 -1 0 | 1 0 0 | 0 0 0\n",
    },
    CorpusRepresentation {
        name: "so3_adjoint_right",
        algebra: "so3",
        text: "name so3_adjoint_right\nside right\ndim 3\n\
               act x = 0 0 0 | 0 0 1 | 0 -1 0\nact y = 0 0 -1 | 0 0 0 | 1 0 0\nact z = 0 1 0 | -1 0 0 | 0 0 0\n",
    },
    CorpusRepresentation {
        name: "abelian_trivial",
        algebra: "sym2",
        text: "name abelian_trivial\nside left\ndim 1\n",
    },
    CorpusRepresentation {
        name: "irw_trivial",
        algebra: "irw",
        text: "name irw_trivial\nside left\ndim 1\n",
    },
];

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    ENTRIES.to_vec()
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name).cloned()
}

pub fn builtin_representations() -> Vec<CorpusRepresentation> {
    REPRESENTATIONS.to_vec()
}
