//! Finite group presentations with optional abelianization data.

use std::fmt;

use super::{Word, WordError};

/// Generators, relators (stored as single words u v^-1), and optionally
/// the homomorphism to Z given by its values on the generators.
///
/// For knot groups the abelianization records linking numbers; it is
/// supplied, not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
    abelianization: Option<Vec<i64>>,
}

impl Presentation {
    pub fn new(
        generator_names: Vec<String>,
        relators: Vec<Word>,
        abelianization: Option<Vec<i64>>,
    ) -> Result<Self, WordError> {
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(WordError::DuplicateGenerator { name: name.clone() });
            }
        }
        let count = generator_names.len();
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= count {
                    return Err(WordError::BadGeneratorIndex {
                        index: m,
                        count,
                    });
                }
            }
        }
        if let Some(phi) = &abelianization {
            assert_eq!(phi.len(), count, "one phi value per generator");
        }
        let p = Presentation {
            generator_names,
            relators,
            abelianization,
        };
        if p.abelianization.is_some() {
            for (i, r) in p.relators.iter().enumerate() {
                let v = p.abelianize(r)?;
                if v != 0 {
                    return Err(WordError::InvalidAbelianization {
                        relator: i,
                        value: v,
                    });
                }
            }
        }
        Ok(p)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// Generators minus relators; knot-group presentations have
    /// deficiency one.
    pub fn deficiency(&self) -> i64 {
        self.generator_count() as i64 - self.relator_count() as i64
    }

    pub fn has_abelianization(&self) -> bool {
        self.abelianization.is_some()
    }

    pub fn abelianization(&self) -> Option<&[i64]> {
        self.abelianization.as_deref()
    }

    /// phi(w) = sum of phi(g_i) * sign over the letters of w.
    pub fn abelianize(&self, w: &Word) -> Result<i64, WordError> {
        let phi = self
            .abelianization
            .as_ref()
            .ok_or(WordError::MissingAbelianization)?;
        Ok(w.letters()
            .iter()
            .map(|&(g, s)| phi[g] * s as i64)
            .sum())
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display_with(&self.generator_names).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens {};", self.generator_names.join(", "))?;
        write!(f, " rel ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display_with(&self.generator_names))?;
        }
        write!(f, ";")?;
        if let Some(phi) = &self.abelianization {
            write!(f, " ab ")?;
            for (i, (name, v)) in self.generator_names.iter().zip(phi).enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{name}={v}")?;
            }
            write!(f, ";")?;
        }
        Ok(())
    }
}
