use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::dsl;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogBounds {
    /// `Z_n` for `2 <= n <= max_zn`.
    pub max_zn: u32,
    /// `Z_a x Z_b` for `2 <= a <= b <= max_product_factor`.
    pub max_product_factor: u32,
    /// Boolean powers `Z_2^k` for `3 <= k <= product_arity`.
    pub product_arity: u32,
    /// The local rings with acyclic graphs that need quotient presentations,
    /// plus `Z2 x Z4` and `Z2 x Z2[x]/(x^2)`.
    pub include_special: bool,
}

impl Default for CatalogBounds {
    fn default() -> Self {
        CatalogBounds {
            max_zn: 200,
            max_product_factor: 13,
            product_arity: 4,
            include_special: true,
        }
    }
}

pub const SPECIAL_RINGS: [&str; 6] = [
    "Z2[x]/(x^2)",
    "Z3[x]/(x^2)",
    "Z2[x]/(x^3)",
    "Z4[x]/(x^2-2, 2x)",
    "Z2 x Z2[x]/(x^2)",
    "Z2 x Z4",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub bounds: Option<CatalogBounds>,
    /// Canonical spec strings, deduplicated, in generation order. Strings
    /// that fail to parse are kept verbatim so they surface as skip rows.
    pub specs: Vec<String>,
}

impl Catalog {
    pub fn from_specs<I, S>(specs: I) -> Catalog
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in specs {
            let s = s.as_ref();
            let canonical = dsl::canonicalize(s).unwrap_or_else(|_| String::from(s.trim()));
            if seen.insert(canonical.clone()) {
                out.push(canonical);
            }
        }
        Catalog {
            bounds: None,
            specs: out,
        }
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }
}

pub fn catalog_default(bounds: CatalogBounds) -> Catalog {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((2..=bounds.max_zn).map(|n| format!("Z{n}")));
    for a in 2..=bounds.max_product_factor {
        for b in a..=bounds.max_product_factor {
            specs.push(format!("Z{a} x Z{b}"));
        }
    }
    for k in 3..=bounds.product_arity {
        specs.push((0..k).map(|_| "Z2").collect::<Vec<_>>().join(" x "));
    }
    if bounds.include_special {
        specs.extend(SPECIAL_RINGS.iter().map(|s| String::from(*s)));
    }
    let mut catalog = Catalog::from_specs(specs);
    catalog.bounds = Some(bounds);
    catalog
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_contents() {
        let c = catalog_default(CatalogBounds::default());
        for s in [
            "Z6",
            "Z2 x Z2[x]/(x^2)",
            "Z4[x]/(x^2+2, 2x)",
            "Z2 x Z2 x Z2 x Z2",
            "Z13 x Z13",
        ] {
            assert!(c.specs.iter().any(|x| x == s), "{s}");
        }
        // Z2 x Z4 appears once even though it is both a product and special.
        assert_eq!(c.specs.iter().filter(|s| *s == "Z2 x Z4").count(), 1);
        assert_eq!(c.len(), 199 + 78 + 2 + 5);
    }

    #[test]
    fn custom_catalogs_canonicalize_and_keep_garbage() {
        let c = Catalog::from_specs(["z6", "Z6", "Z4[x]/(x^2-2,2x)", "nonsense"]);
        assert_eq!(c.specs, ["Z6", "Z4[x]/(x^2+2, 2x)", "nonsense"]);
    }
}
