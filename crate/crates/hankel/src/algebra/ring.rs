//! Ring descriptors: named variables over a coefficient field, standard grading.

use super::coeff::FieldTag;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    vars: Vec<String>,
    field: FieldTag,
}

/// A polynomial ring descriptor: ordered variable names over QQ or GF(p),
/// standard grading (every variable has weight one). Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new(field: FieldTag, vars: Vec<String>) -> Result<Ring> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(Error::InvalidParameter(format!(
                    "variable names must be distinct and nonempty, got `{v}`"
                )));
            }
        }
        Ok(Ring(Arc::new(RingInner { vars, field })))
    }

    /// Ring `F[x1..xk]` with numbered variables.
    pub fn numbered(field: FieldTag, stem: &str, count: usize) -> Ring {
        let vars = (1..=count).map(|i| format!("{stem}{i}")).collect();
        Ring::new(field, vars).expect("numbered names are distinct")
    }

    pub fn rational(vars: &[&str]) -> Ring {
        Ring::new(FieldTag::Rational, vars.iter().map(|s| s.to_string()).collect())
            .expect("caller provides distinct names")
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn field(&self) -> FieldTag {
        self.0.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// New ring with extra variables prepended (used for elimination tricks).
    pub fn extend_front(&self, names: &[&str]) -> Result<Ring> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.0.vars.iter().cloned());
        Ring::new(self.0.field, vars)
    }

    /// Subring on the named subset of variables, keeping their order.
    pub fn subring(&self, keep: &[usize]) -> Result<Ring> {
        let vars = keep.iter().map(|&i| self.0.vars[i].clone()).collect();
        Ring::new(self.0.field, vars)
    }

    /// Same variables over a different coefficient field.
    pub fn with_field(&self, field: FieldTag) -> Ring {
        Ring(Arc::new(RingInner { vars: self.0.vars.clone(), field }))
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn mismatch_error(&self, other: &Ring) -> Error {
        Error::RingMismatch(self.to_string(), other.to_string())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}
