//! Linear combinations of canonical diagram codes over exact rationals.

use crate::diagram::{CanonicalForm, Forest};
use crate::{rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Map from canonical code to coefficient; zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<String, Rational>,
}

impl LinComb {
    pub fn new() -> LinComb {
        LinComb::default()
    }

    pub fn single(code: impl Into<String>, coeff: Rational) -> LinComb {
        let mut lc = LinComb::new();
        lc.add(code.into(), coeff);
        lc
    }

    pub fn add(&mut self, code: String, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(code) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Canonicalize a forest and add it with the AS sign folded into the
    /// coefficient.  ZERO classes are dropped.
    pub fn add_forest(&mut self, f: &Forest, coeff: Rational) {
        match f.canonical() {
            CanonicalForm::Zero => {}
            CanonicalForm::Form { code, sign } => {
                self.add(code, coeff * rat(sign as i64));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, scale: &Rational) {
        for (code, c) in &other.terms {
            self.add(code.clone(), c * scale);
        }
    }

    pub fn scale(&mut self, s: &Rational) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= s;
        }
    }

    pub fn negate(&mut self) {
        self.scale(&rat(-1));
    }

    pub fn get(&self, code: &str) -> Rational {
        self.terms.get(code).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn codes(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(|k| k.as_str())
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (code, c) in &self.terms {
            if first {
                write!(f, "{c}*[{code}]")?;
                first = false;
            } else {
                write!(f, " + {c}*[{code}]")?;
            }
        }
        Ok(())
    }
}
