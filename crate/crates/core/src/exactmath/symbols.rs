use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct, nonempty symbol names.
///
/// Polynomials hold an `Arc<SymbolTable>`; two tables are the same ring when
/// their name lists are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::usage("empty symbol name"));
            }
            if !name.chars().next().unwrap().is_alphabetic()
                || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
            {
                return Err(Error::usage(format!("invalid symbol name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::usage(format!("duplicate symbol {name:?}")));
            }
        }
        Ok(Arc::new(SymbolTable { names }))
    }

    /// Table with no symbols: polynomials over it are just rationals.
    pub fn empty() -> Arc<Self> {
        Arc::new(SymbolTable { names: Vec::new() })
    }

    /// `prefix1 .. prefix{count}`, e.g. `e1..e3`.
    pub fn indexed(prefix: &str, count: usize) -> Arc<Self> {
        Self::indexed_from(prefix, 1, count)
    }

    /// `prefix{start} .. prefix{start+count-1}`.
    pub fn indexed_from(prefix: &str, start: usize, count: usize) -> Arc<Self> {
        let names = (start..start + count).map(|i| format!("{prefix}{i}")).collect();
        Arc::new(SymbolTable { names })
    }

    /// This table followed by `extra` (which must not collide).
    pub fn extended<I, S>(&self, extra: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names = self.names.iter().cloned().chain(extra.into_iter().map(Into::into));
        SymbolTable::new(names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}
