use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::ArithError;

/// Ordered variable names. Monomials are compared in graded reverse-lexicographic
/// order with respect to this declaration order.
#[derive(PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Shared handle to a [`RingContext`].
#[derive(Clone)]
pub struct Ring(Arc<RingContext>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring, ArithError> {
        let mut index = HashMap::with_capacity(names.len());
        let mut out = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().to_string();
            if n.is_empty() || !valid_name(&n) {
                return Err(ArithError::Parse(format!("invalid variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(ArithError::DuplicateVariable(n));
            }
            out.push(n);
        }
        Ok(Ring(Arc::new(RingContext { names: out, index })))
    }

    /// Panicking constructor for literal variable lists.
    pub fn of(names: &[&str]) -> Ring {
        Ring::new(names).expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, ArithError> {
        self.index_of(name)
            .ok_or_else(|| ArithError::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    /// A new ring with `extra` appended after the existing variables.
    /// Names already present are skipped.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring, ArithError> {
        let mut names: Vec<String> = self.names().to_vec();
        for e in extra {
            if !self.contains(e.as_ref()) {
                names.push(e.as_ref().to_string());
            }
        }
        Ring::new(&names)
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.same(other)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", self.0.names)
    }
}

fn valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(
            Ring::new(&["x", "y", "x"]),
            Err(ArithError::DuplicateVariable(_))
        ));
        assert!(Ring::new(&["1x"]).is_err());
    }

    #[test]
    fn extend_keeps_order() {
        let r = Ring::of(&["a", "b"]).extend(&["c", "a"]).unwrap();
        assert_eq!(r.names(), &["a", "b", "c"]);
        assert_eq!(r.index_of("c"), Some(2));
    }
}
