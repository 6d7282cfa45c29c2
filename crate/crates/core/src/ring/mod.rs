//! Finite commutative rings with identity, presented as an additive
//! decomposition `Z_{m_0} e_0 + ... + Z_{m_{k-1}} e_{k-1}` together with
//! structure constants for the products `e_i * e_j`.
//!
//! Elements are mixed-radix indices: the coefficient tuple `(c_0, ..., c_{k-1})`
//! encodes to `c_0 + m_0 (c_1 + m_1 (c_2 + ...))`, so the zero element is
//! index 0 and `Z_n` elements are just their residues.

mod classify;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;

/// Rings of at most this order get a full multiplication table at
/// construction.
pub const DEFAULT_TABLE_THRESHOLD: usize = 1 << 12;

/// Largest supported ring order.
pub const MAX_ORDER: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(usize);

impl Element {
    pub const ZERO: Element = Element(0);

    /// Wraps a raw index without range checking; see [`FiniteRing::element`].
    pub const fn new(index: usize) -> Self {
        Element(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subset of a ring, stored as a membership bit vector of length `|R|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet(BitSet);

impl ElementSet {
    pub(crate) fn new(order: usize) -> Self {
        ElementSet(BitSet::new(order))
    }

    pub(crate) fn insert(&mut self, e: Element) {
        self.0.insert(e.0);
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.0.contains(e.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().map(Element)
    }

    pub fn bits(&self) -> &BitSet {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    AdditiveOrder,
    Commutativity,
    Identity,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::AdditiveOrder => "additive order",
            Axiom::Commutativity => "commutativity",
            Axiom::Identity => "identity",
            Axiom::Associativity => "associativity",
        })
    }
}

/// First axiom failure found by [`FiniteRing::validate`]. Witnesses are basis
/// names (`e1`) or element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({})", self.axiom, self.witness.join(", "))?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element index {index} out of range for ring of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("invalid presentation: {0}")]
    Presentation(Violation),
}

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    /// Element-level pair checks are exhaustive up to this order and sampled
    /// above it.
    pub exhaustive_cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            exhaustive_cap: 4096,
            samples: 20_000,
            seed: 0x5eed,
        }
    }
}

/// How element labels are rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Layout {
    Integer,
    Polynomial,
    Coefficients,
    /// Flat list of factors with the number of basis elements each owns.
    Product(Vec<(Layout, usize)>),
}

impl Layout {
    fn write(&self, digits: &[u32], out: &mut String) {
        match self {
            Layout::Integer => out.push_str(&digits[0].to_string()),
            Layout::Polynomial => write_polynomial(digits, out),
            Layout::Coefficients => {
                out.push('[');
                for (i, d) in digits.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&d.to_string());
                }
                out.push(']');
            }
            Layout::Product(parts) => {
                out.push('(');
                let mut at = 0;
                for (i, (part, width)) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    part.write(&digits[at..at + width], out);
                    at += width;
                }
                out.push(')');
            }
        }
    }

    fn factors(self, width: usize) -> Vec<(Layout, usize)> {
        match self {
            Layout::Product(parts) => parts,
            other => vec![(other, width)],
        }
    }
}

fn write_polynomial(coeffs: &[u32], out: &mut String) {
    let mut first = true;
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !first {
            out.push('+');
        }
        first = false;
        match (j, c) {
            (0, c) => out.push_str(&c.to_string()),
            (_, 1) => {}
            (_, c) => out.push_str(&c.to_string()),
        }
        if j >= 1 {
            out.push('x');
        }
        if j >= 2 {
            out.push('^');
            out.push_str(&j.to_string());
        }
    }
    if first {
        out.push('0');
    }
}

/// Structure-constant description of a ring, checked by [`Presentation::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    moduli: Vec<u32>,
    /// `products[i * k + j]` is the coefficient vector of `e_i * e_j`.
    products: Vec<Vec<u32>>,
    one: usize,
}

impl Presentation {
    /// All products zero; `one` is the index of the identity element.
    pub fn new(moduli: Vec<u32>, one: usize) -> Self {
        let k = moduli.len();
        Presentation {
            products: vec![vec![0; k]; k * k],
            moduli,
            one,
        }
    }

    /// Presentation whose first basis element is the identity: `e_0 * e_j = e_j`.
    pub fn with_unit_basis(moduli: Vec<u32>) -> Self {
        let k = moduli.len();
        let mut p = Presentation::new(moduli, 1);
        for j in 0..k {
            let mut v = vec![0; k];
            v[j] = 1;
            p.set_product(0, j, &v);
        }
        p
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        &self.products[i * self.rank() + j]
    }

    /// Sets `e_i * e_j` (and `e_j * e_i`), reducing coefficients mod the
    /// target moduli.
    pub fn set_product(&mut self, i: usize, j: usize, coeffs: &[u32]) -> &mut Self {
        self.set_ordered_product(i, j, coeffs);
        self.set_ordered_product(j, i, coeffs);
        self
    }

    /// Sets only `e_i * e_j`; mostly useful to build deliberately broken tables.
    pub fn set_ordered_product(&mut self, i: usize, j: usize, coeffs: &[u32]) -> &mut Self {
        let k = self.rank();
        assert!(i < k && j < k, "basis index out of range");
        assert_eq!(coeffs.len(), k, "coefficient vector length must equal rank");
        let reduced = coeffs
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| if m == 0 { c } else { c % m })
            .collect();
        self.products[i * k + j] = reduced;
        self
    }

    pub fn build(self) -> Result<FiniteRing, RingError> {
        self.build_with(&ValidateOptions::default())
    }

    pub fn build_with(self, opts: &ValidateOptions) -> Result<FiniteRing, RingError> {
        let ring = FiniteRing::from_parts(
            self.moduli,
            self.products,
            self.one,
            Layout::Coefficients,
            None,
        )?;
        ring.validate(opts).map_err(RingError::Presentation)?;
        Ok(ring)
    }
}

/// A finite commutative ring with identity. Immutable once built.
#[derive(Clone)]
pub struct FiniteRing {
    moduli: Vec<u32>,
    radix: Vec<usize>,
    /// `constants[(i * k + j) * k + l]`: coefficient of `e_l` in `e_i * e_j`.
    constants: Vec<u32>,
    one: Element,
    order: usize,
    label: String,
    layout: Layout,
    table: Option<Vec<u16>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("moduli", &self.moduli)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteRing {
    fn from_parts(
        moduli: Vec<u32>,
        products: Vec<Vec<u32>>,
        one: usize,
        layout: Layout,
        label: Option<String>,
    ) -> Result<Self, RingError> {
        if moduli.is_empty() {
            return Err(RingError::InvalidParameter("empty basis".into()));
        }
        if let Some(i) = moduli.iter().position(|&m| m == 0) {
            return Err(RingError::InvalidParameter(format!(
                "modulus of e{i} must be positive"
            )));
        }
        let k = moduli.len();
        let mut radix = Vec::with_capacity(k);
        let mut order: usize = 1;
        for &m in &moduli {
            radix.push(order);
            order = order
                .checked_mul(m as usize)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or_else(|| {
                    RingError::InvalidParameter(format!("ring order exceeds {MAX_ORDER}"))
                })?;
        }
        if order < 2 {
            return Err(RingError::InvalidParameter(
                "the zero ring is not supported".into(),
            ));
        }
        if one >= order {
            return Err(RingError::InvalidParameter(format!(
                "identity index {one} out of range for order {order}"
            )));
        }
        let mut constants = Vec::with_capacity(k * k * k);
        for v in &products {
            debug_assert_eq!(v.len(), k);
            constants.extend(v.iter().zip(&moduli).map(|(&c, &m)| c % m));
        }
        let label = label.unwrap_or_else(|| {
            let ms: Vec<String> = moduli.iter().map(|m| m.to_string()).collect();
            format!("presented[{}]", ms.join(","))
        });
        let mut ring = FiniteRing {
            moduli,
            radix,
            constants,
            one: Element(one),
            order,
            label,
            layout,
            table: None,
        };
        ring.cache_table(DEFAULT_TABLE_THRESHOLD);
        Ok(ring)
    }

    /// `Z_n` for `n >= 2`.
    pub fn cyclic(n: u32) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::InvalidParameter(format!(
                "Z_n requires n >= 2, got {n}"
            )));
        }
        FiniteRing::from_parts(
            vec![n],
            vec![vec![1]],
            1,
            Layout::Integer,
            Some(format!("Z{n}")),
        )
    }

    /// Direct product `R x S`; the basis of `R` comes first.
    pub fn product(r: &FiniteRing, s: &FiniteRing) -> Result<Self, RingError> {
        let (kr, ks) = (r.rank(), s.rank());
        let k = kr + ks;
        let mut moduli = r.moduli.clone();
        moduli.extend_from_slice(&s.moduli);
        let mut products = vec![vec![0u32; k]; k * k];
        for i in 0..kr {
            for j in 0..kr {
                products[i * k + j][..kr].copy_from_slice(r.basis_product(i, j));
            }
        }
        for i in 0..ks {
            for j in 0..ks {
                products[(kr + i) * k + kr + j][kr..].copy_from_slice(s.basis_product(i, j));
            }
        }
        let one = r.one.0 + r.order * s.one.0;
        let mut parts = r.layout.clone().factors(kr);
        parts.extend(s.layout.clone().factors(ks));
        FiniteRing::from_parts(
            moduli,
            products,
            one,
            Layout::Product(parts),
            Some(format!("{} x {}", r.label, s.label)),
        )
    }

    /// Builds `Z_n[x]/(...)` on the basis `1, x, ..., x^{d-1}` from a
    /// presentation whose products are polynomial multiplication.
    pub(crate) fn polynomial_quotient(
        presentation: Presentation,
        label: String,
    ) -> Result<Self, RingError> {
        let ring = FiniteRing::from_parts(
            presentation.moduli,
            presentation.products,
            presentation.one,
            Layout::Polynomial,
            Some(label),
        )?;
        ring.validate(&ValidateOptions::default())
            .map_err(RingError::Presentation)?;
        Ok(ring)
    }

    /// Builds (or drops) the cached multiplication table.
    pub fn cache_table(&mut self, threshold: usize) {
        let threshold = threshold.min(1 << 16);
        if self.order > threshold {
            self.table = None;
            return;
        }
        let n = self.order;
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in a..n {
                let c = self.mul_uncached(Element(a), Element(b)).0 as u16;
                table[a * n + b] = c;
                table[b * n + a] = c;
            }
        }
        self.table = Some(table);
    }

    pub fn with_label(mut self, label: String) -> Self {
        self.label = label;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let k = self.rank();
        &self.constants[(i * k + j) * k..(i * k + j + 1) * k]
    }

    /// The structure constants as an editable presentation.
    pub fn presentation(&self) -> Presentation {
        let k = self.rank();
        let mut p = Presentation::new(self.moduli.clone(), self.one.0);
        for i in 0..k {
            for j in 0..k {
                p.set_ordered_product(i, j, self.basis_product(i, j));
            }
        }
        p
    }

    pub fn element(&self, index: usize) -> Result<Element, RingError> {
        if index < self.order {
            Ok(Element(index))
        } else {
            Err(RingError::InvalidElement {
                index,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    fn check(&self, e: Element) -> Result<Element, RingError> {
        self.element(e.0)
    }

    pub fn coefficients(&self, e: Element) -> Vec<u32> {
        self.moduli
            .iter()
            .zip(&self.radix)
            .map(|(&m, &r)| ((e.0 / r) % m as usize) as u32)
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Element, RingError> {
        if coeffs.len() != self.rank() {
            return Err(RingError::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                self.rank(),
                coeffs.len()
            )));
        }
        let mut index = 0;
        for ((&c, &m), &r) in coeffs.iter().zip(&self.moduli).zip(&self.radix) {
            if c >= m {
                return Err(RingError::InvalidParameter(format!(
                    "coefficient {c} not reduced mod {m}"
                )));
            }
            index += c as usize * r;
        }
        Ok(Element(index))
    }

    fn encode(&self, digits: &[u32]) -> Element {
        Element(
            digits
                .iter()
                .zip(&self.radix)
                .map(|(&d, &r)| d as usize * r)
                .sum(),
        )
    }

    /// Display label of an element, e.g. `4`, `(1,0)` or `1+x`.
    pub fn element_label(&self, e: Element) -> String {
        let mut out = String::new();
        self.layout.write(&self.coefficients(e), &mut out);
        out
    }

    /// The element with coefficient 1 on `e_i`, or zero when `m_i = 1`.
    pub fn basis_element(&self, i: usize) -> Element {
        if self.moduli[i] == 1 {
            Element::ZERO
        } else {
            Element(self.radix[i])
        }
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        let (da, db) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u32> = da
            .iter()
            .zip(&db)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: Element) -> Element {
        let neg: Vec<u32> = self
            .coefficients(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// Product of two in-range elements. Panics on out-of-range indices; use
    /// [`FiniteRing::checked_mul`] for untrusted input.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        assert!(
            a.0 < self.order && b.0 < self.order,
            "element out of range for {}",
            self.label
        );
        match &self.table {
            Some(t) => Element(t[a.0 * self.order + b.0] as usize),
            None => self.mul_uncached(a, b),
        }
    }

    pub fn checked_mul(&self, a: Element, b: Element) -> Result<Element, RingError> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    pub fn checked_add(&self, a: Element, b: Element) -> Result<Element, RingError> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    fn mul_uncached(&self, a: Element, b: Element) -> Element {
        let k = self.rank();
        let (da, db) = (self.coefficients(a), self.coefficients(b));
        let mut acc = vec![0u64; k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let p = x as u64 * y as u64;
                for (l, &c) in self.basis_product(i, j).iter().enumerate() {
                    let m = self.moduli[l] as u64;
                    acc[l] = (acc[l] + (p % m) * c as u64) % m;
                }
            }
        }
        let digits: Vec<u32> = acc.into_iter().map(|v| v as u32).collect();
        self.encode(&digits)
    }

    fn basis_name(i: usize) -> String {
        format!("e{i}")
    }

    /// Checks the ring axioms. Because multiplication is bilinear in the
    /// basis coefficients, the basis-level checks decide commutativity,
    /// identity and associativity exactly; element-level pairs are then
    /// checked exhaustively up to `exhaustive_cap` (sampled above it) along
    /// with element triples, all of them when there are at most `samples`.
    pub fn validate(&self, opts: &ValidateOptions) -> Result<(), Violation> {
        let k = self.rank();
        let basis = Self::basis_name;

        for i in 0..k {
            for j in 0..k {
                for (l, &c) in self.basis_product(i, j).iter().enumerate() {
                    let m_l = self.moduli[l] as u64;
                    if !(self.moduli[i] as u64 * c as u64).is_multiple_of(m_l) {
                        return Err(Violation {
                            axiom: Axiom::AdditiveOrder,
                            witness: vec![basis(i), basis(j)],
                            detail: format!(
                                "{} * (e{i}*e{j}) has nonzero e{l} coefficient",
                                self.moduli[i]
                            ),
                        });
                    }
                }
            }
        }

        for i in 0..k {
            for j in i + 1..k {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Violation {
                        axiom: Axiom::Commutativity,
                        witness: vec![basis(i), basis(j)],
                        detail: String::new(),
                    });
                }
            }
        }

        let one = self.coefficients(self.one);
        for j in 0..k {
            let mut acc = vec![0u64; k];
            for (i, &c) in one.iter().enumerate() {
                for (l, &v) in self.basis_product(i, j).iter().enumerate() {
                    acc[l] = (acc[l] + c as u64 * v as u64) % self.moduli[l] as u64;
                }
            }
            let expect: Vec<u64> = (0..k)
                .map(|l| u64::from(l == j && self.moduli[j] > 1))
                .collect();
            if acc != expect {
                return Err(Violation {
                    axiom: Axiom::Identity,
                    witness: vec![self.element_label(self.one), basis(j)],
                    detail: String::from("1 * e_j != e_j"),
                });
            }
        }

        // (e_i e_j) e_l versus e_i (e_j e_l), expanded through the constants.
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.combine(self.basis_product(i, j), l, true);
                    let right = self.combine(self.basis_product(j, l), i, false);
                    if left != right {
                        return Err(Violation {
                            axiom: Axiom::Associativity,
                            witness: vec![basis(i), basis(j), basis(l)],
                            detail: format!("(e{i}e{j})e{l} != e{i}(e{j}e{l})"),
                        });
                    }
                }
            }
        }

        self.validate_elements(opts)
    }

    /// Coefficients of `v * e_b` (if `v_left`) or `e_b * v`.
    fn combine(&self, v: &[u32], b: usize, v_left: bool) -> Vec<u64> {
        let k = self.rank();
        let mut acc = vec![0u64; k];
        for (a, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let prod = if v_left {
                self.basis_product(a, b)
            } else {
                self.basis_product(b, a)
            };
            for (l, &p) in prod.iter().enumerate() {
                acc[l] = (acc[l] + c as u64 * p as u64) % self.moduli[l] as u64;
            }
        }
        acc
    }

    fn validate_elements(&self, opts: &ValidateOptions) -> Result<(), Violation> {
        let label = |e: Element| self.element_label(e);
        let pair = |a: Element, b: Element| -> Result<(), Violation> {
            if self.mul(a, b) != self.mul(b, a) {
                return Err(Violation {
                    axiom: Axiom::Commutativity,
                    witness: vec![label(a), label(b)],
                    detail: String::new(),
                });
            }
            Ok(())
        };
        let unit = |a: Element| -> Result<(), Violation> {
            if self.mul(self.one, a) != a {
                return Err(Violation {
                    axiom: Axiom::Identity,
                    witness: vec![label(self.one), label(a)],
                    detail: String::new(),
                });
            }
            Ok(())
        };
        let n = self.order;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut pick = || Element((rng.next_u64() % n as u64) as usize);
        if n <= opts.exhaustive_cap {
            for a in self.elements() {
                unit(a)?;
                for b in (a.0 + 1..n).map(Element) {
                    pair(a, b)?;
                }
            }
        } else {
            for _ in 0..opts.samples {
                let (a, b) = (pick(), pick());
                unit(a)?;
                pair(a, b)?;
            }
        }
        let assoc = |a: Element, b: Element, c: Element| -> Result<(), Violation> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Violation {
                    axiom: Axiom::Associativity,
                    witness: vec![label(a), label(b), label(c)],
                    detail: String::new(),
                });
            }
            Ok(())
        };
        if n.checked_pow(3).is_some_and(|t| t <= opts.samples) {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            for _ in 0..opts.samples {
                assoc(pick(), pick(), pick())?;
            }
        }
        Ok(())
    }
}
