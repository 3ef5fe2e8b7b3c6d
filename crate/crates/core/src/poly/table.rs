use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of named, weighted variables. Order fixes monomial precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

pub type Table = Arc<VariableTable>;

impl VariableTable {
    pub fn new<S: AsRef<str>>(vars: &[(S, u32)]) -> Result<Table> {
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::InvalidTable(format!("bad variable name {name:?}")));
            }
            if *w == 0 {
                return Err(Error::InvalidTable(format!("variable {name} has weight 0")));
            }
            if names.iter().any(|n: &String| n == name) {
                return Err(Error::InvalidTable(format!("duplicate variable {name}")));
            }
            names.push(name.to_string());
            weights.push(*w);
        }
        Ok(Arc::new(VariableTable { names, weights }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, u32)> {
        self.names.iter().map(|s| s.as_str()).zip(self.weights.iter().copied())
    }

    /// New table with `extra` appended after the existing variables.
    pub fn extended<S: AsRef<str>>(&self, extra: &[(S, u32)]) -> Result<Table> {
        let mut all: Vec<(String, u32)> =
            self.entries().map(|(n, w)| (n.to_string(), w)).collect();
        all.extend(extra.iter().map(|(n, w)| (n.as_ref().to_string(), *w)));
        VariableTable::new(&all)
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Error unless both tables describe the same ring variables.
pub fn same_table(a: &Table, b: &Table) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::IncompatibleRings(format!(
            "[{}] vs [{}]",
            a.names().join(","),
            b.names().join(",")
        )))
    }
}
