//! Symbol registries: the ordered sets of symbol names over which
//! polynomials are formed. The registry order is also the variable order
//! of the graded-lexicographic monomial order, so it is fixed once and
//! shared by golden files.

use std::fmt;
use std::sync::Arc;

/// Index of a symbol inside its registry.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(pub usize);

#[derive(PartialEq, Eq, Debug)]
pub struct RegistryData {
    names: Vec<String>,
}

/// Shared, immutable symbol registry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Registry(Arc<RegistryData>);

impl Registry {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                names[..i].iter().all(|m| m != n),
                "duplicate symbol {n} in registry"
            );
        }
        Registry(Arc::new(RegistryData { names }))
    }

    /// The standard registry used by all engine modules. The order is part
    /// of the canonical form and must not change.
    pub fn standard() -> Self {
        Registry::new(vec![
            "u", "v", "k", "s", "kappa", "L1", "L2", "pi", "sqrtpi", "tau", "aT", "y11", "y12",
            "y22", "t11", "t12", "t22",
        ])
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.0.names[s.0]
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.0.names.iter().position(|n| n == name).map(Symbol)
    }

    pub fn sym(&self, name: &str) -> Symbol {
        self.lookup(name)
            .unwrap_or_else(|| panic!("no symbol {name} in registry"))
    }

    pub fn same(&self, other: &Registry) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.names.iter().map(String::as_str)
    }
}

impl fmt::Display for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.0.names.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// Named accessors for the standard registry.
pub mod std_syms {
    use super::{Registry, Symbol};

    macro_rules! accessor {
        ($fn_name:ident, $name:literal) => {
            pub fn $fn_name(reg: &Registry) -> Symbol {
                reg.sym($name)
            }
        };
    }

    accessor!(u, "u");
    accessor!(v, "v");
    accessor!(k, "k");
    accessor!(s, "s");
    accessor!(kappa, "kappa");
    accessor!(l1, "L1");
    accessor!(l2, "L2");
    accessor!(pi, "pi");
    accessor!(sqrtpi, "sqrtpi");
    accessor!(tau, "tau");
    accessor!(a_t, "aT");
    accessor!(y11, "y11");
    accessor!(y12, "y12");
    accessor!(y22, "y22");
    accessor!(t11, "t11");
    accessor!(t12, "t12");
    accessor!(t22, "t22");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_registry_lookup() {
        let reg = Registry::standard();
        assert_eq!(reg.len(), 17);
        assert_eq!(reg.name(reg.sym("tau")), "tau");
        assert!(reg.lookup("nope").is_none());
        assert!(reg.same(&Registry::standard()));
    }
}
