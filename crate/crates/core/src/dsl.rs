//! The ring specification language.
//!
//! ```text
//! spec := term ('x' term)*
//! term := 'Z' int
//!       | 'Z' int '[x]/(' rel (',' rel)* ')'
//! rel  := polynomial in x with integer coefficients
//! ```
//!
//! Matching is case-insensitive and ignores whitespace. A quotient must
//! consist of one monic relation of maximal degree `d`, read as
//! `x^d = g(x)`, plus any number of single-term relations `c x^j` with
//! `0 < j < d`. Such a ring has the additive basis `1, x, ..., x^{d-1}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{FiniteRing, Presentation, RingError};

/// Exponents above this cannot yield a ring within the supported order.
const MAX_DEGREE: u64 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u32),
    /// Flat list of at least two factors, none of them a product.
    Product(Vec<RingSpec>),
    Quotient(QuotientSpec),
}

/// `Z_n[x]/(x^d - g(x), c_1 x^{j_1}, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientSpec {
    pub modulus: u32,
    /// Coefficients of `g`, lowest degree first; its length is `d`.
    pub tail: Vec<u32>,
    /// `(j, c)` pairs meaning `c x^j = 0`, sorted and deduplicated.
    pub kills: Vec<(u32, u32)>,
}

impl QuotientSpec {
    pub fn degree(&self) -> usize {
        self.tail.len()
    }
}

impl RingSpec {
    /// Product of the given factors, flattening nested products.
    pub fn product(factors: Vec<RingSpec>) -> RingSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingSpec::Product(flat)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at offset {offset}: expected {}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("invalid modulus {value} at offset {offset}: n must be between 2 and 2^32-1")]
    InvalidModulus { offset: usize, value: u64 },
    #[error("unsupported presentation: {reason}")]
    Unsupported {
        offset: Option<usize>,
        reason: String,
    },
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl DslError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            DslError::Syntax { offset, .. } | DslError::InvalidModulus { offset, .. } => {
                Some(*offset)
            }
            DslError::Unsupported { offset, .. } => *offset,
            DslError::Ring(_) => None,
        }
    }
}

fn syntax(offset: usize, expected: &[&'static str]) -> DslError {
    DslError::Syntax {
        offset,
        expected: expected.to_vec(),
    }
}

fn unsupported(offset: Option<usize>, reason: impl Into<String>) -> DslError {
    DslError::Unsupported {
        offset,
        reason: reason.into(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).map(u8::to_ascii_lowercase)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(usize, u64), DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| syntax(start, &["integer below 2^64"]))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(syntax(start, &["integer"]));
        }
        Ok((start, value))
    }

    fn spec(&mut self) -> Result<RingSpec, DslError> {
        let mut factors = vec![self.term()?];
        loop {
            match self.peek() {
                None => break,
                Some(b'x') => {
                    self.pos += 1;
                    factors.push(self.term()?);
                }
                Some(_) => return Err(syntax(self.pos, &["'x'", "end of input"])),
            }
        }
        Ok(RingSpec::product(factors))
    }

    fn term(&mut self) -> Result<RingSpec, DslError> {
        if !self.eat(b'z') {
            return Err(syntax(self.pos, &["'Z'"]));
        }
        let (at, n) = self.int()?;
        if !(2..=u32::MAX as u64).contains(&n) {
            return Err(DslError::InvalidModulus { offset: at, value: n });
        }
        let n = n as u32;
        if self.peek() != Some(b'[') {
            return Ok(RingSpec::Zn(n));
        }
        let open = self.pos;
        for c in *b"[x]/(" {
            if !self.eat(c) {
                return Err(syntax(open, &["'[x]/('"]));
            }
        }
        let mut relations = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            relations.push((start, self.polynomial(n)?));
            if self.eat(b')') {
                break;
            }
            if !self.eat(b',') {
                return Err(syntax(self.pos, &["','", "')'"]));
            }
        }
        normalize(n, relations).map(RingSpec::Quotient)
    }

    /// Polynomial with coefficients reduced mod `n`, keyed by degree.
    fn polynomial(&mut self, n: u32) -> Result<BTreeMap<u32, u32>, DslError> {
        let n = n as u64;
        let mut poly: BTreeMap<u32, u64> = BTreeMap::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let start = self.pos;
            let mut coeff = 1u64;
            let mut has_coeff = false;
            if matches!(self.peek(), Some(b'0'..=b'9')) {
                coeff = self.int()?.1 % n;
                has_coeff = true;
                self.eat(b'*');
            }
            let mut degree = 0u64;
            if self.eat(b'x') {
                degree = 1;
                if self.eat(b'^') {
                    let (at, e) = self.int()?;
                    if e > MAX_DEGREE {
                        return Err(unsupported(Some(at), format!("exponent {e} too large")));
                    }
                    degree = e;
                }
            } else if !has_coeff {
                self.skip_ws();
                return Err(syntax(start.max(self.pos), &["integer", "'x'"]));
            }
            let coeff = if negative { (n - coeff) % n } else { coeff };
            let slot = poly.entry(degree as u32).or_insert(0);
            *slot = (*slot + coeff) % n;
        }
        Ok(poly
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(d, c)| (d, c as u32))
            .collect())
    }
}

fn normalize(
    n: u32,
    relations: Vec<(usize, BTreeMap<u32, u32>)>,
) -> Result<QuotientSpec, DslError> {
    let relations: Vec<_> = relations.into_iter().filter(|(_, p)| !p.is_empty()).collect();
    let degree_of = |p: &BTreeMap<u32, u32>| *p.keys().next_back().unwrap();
    let d = relations
        .iter()
        .map(|(_, p)| degree_of(p))
        .max()
        .ok_or_else(|| unsupported(None, "no nonzero relation"))?;
    if d == 0 {
        return Err(unsupported(
            Some(relations[0].0),
            "constant relation collapses the base ring",
        ));
    }
    let mut leading = None;
    let mut kills = Vec::new();
    for (offset, p) in &relations {
        if degree_of(p) == d {
            if leading.is_some() {
                return Err(unsupported(
                    Some(*offset),
                    format!("more than one relation of degree {d}"),
                ));
            }
            if p[&d] != 1 {
                return Err(unsupported(
                    Some(*offset),
                    "relation of maximal degree must be monic",
                ));
            }
            leading = Some(p);
        } else if p.len() == 1 {
            let (&j, &c) = p.iter().next().unwrap();
            if j == 0 {
                return Err(unsupported(
                    Some(*offset),
                    "constant relations are not supported",
                ));
            }
            kills.push((j, c));
        } else {
            return Err(unsupported(
                Some(*offset),
                "lower-degree relations must be single terms c*x^j",
            ));
        }
    }
    let leading = leading.expect("a relation attains the maximal degree");
    let tail = (0..d)
        .map(|i| (n - leading.get(&i).copied().unwrap_or(0)) % n)
        .collect();
    kills.sort_unstable();
    kills.dedup();
    Ok(QuotientSpec {
        modulus: n,
        tail,
        kills,
    })
}

pub fn parse(text: &str) -> Result<RingSpec, DslError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.spec()
}

fn write_term(out: &mut String, c: u32, j: usize) {
    if c != 1 || j == 0 {
        out.push_str(&c.to_string());
    }
    if j >= 1 {
        out.push('x');
    }
    if j >= 2 {
        out.push('^');
        out.push_str(&j.to_string());
    }
}

/// Canonical text of a spec; `parse(&format(s)) == Ok(s)`.
pub fn format(spec: &RingSpec) -> String {
    match spec {
        RingSpec::Zn(n) => format!("Z{n}"),
        RingSpec::Product(factors) => factors.iter().map(format).collect::<Vec<_>>().join(" x "),
        RingSpec::Quotient(q) => {
            let n = q.modulus;
            let d = q.degree();
            let mut out = format!("Z{n}[x]/(");
            write_term(&mut out, 1, d);
            for i in (0..d).rev() {
                let c = (n - q.tail[i]) % n;
                if c != 0 {
                    out.push('+');
                    write_term(&mut out, c, i);
                }
            }
            for &(j, c) in &q.kills {
                out.push_str(", ");
                write_term(&mut out, c, j as usize);
            }
            out.push(')');
            out
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Additive orders of `1, x, ..., x^{d-1}` in the quotient: each kill lowers
/// one order, and the result is closed so that the submodule they describe is
/// an ideal (`m_{j+1} | m_j`, and `m_{d-1} g(x)` vanishes).
fn quotient_moduli(q: &QuotientSpec) -> Result<Vec<u32>, DslError> {
    let n = q.modulus;
    let d = q.degree();
    let mut m = vec![n; d];
    for &(j, c) in &q.kills {
        if j as usize >= d {
            return Err(unsupported(None, format!("relation {c}x^{j} exceeds the degree")));
        }
        if !n.is_multiple_of(c) {
            return Err(unsupported(
                None,
                format!("coefficient {c} of x^{j} does not divide {n}"),
            ));
        }
        m[j as usize] = gcd(m[j as usize], c);
    }
    loop {
        let mut changed = false;
        let mut lower = |slot: &mut u32, by: u32| {
            let g = gcd(*slot, by);
            if g != *slot {
                *slot = g;
                changed = true;
            }
        };
        for j in 0..d - 1 {
            let prev = m[j];
            lower(&mut m[j + 1], prev);
        }
        let top = m[d - 1] as u64;
        for i in 0..d {
            let v = (top * q.tail[i] as u64 % n as u64) as u32;
            lower(&mut m[i], v);
        }
        if !changed {
            return Ok(m);
        }
    }
}

fn compile_quotient(q: &QuotientSpec, label: String) -> Result<FiniteRing, DslError> {
    let n = q.modulus as u64;
    let d = q.degree();
    let moduli = quotient_moduli(q)?;
    // powers[t] = x^t over Z_n in the basis 1..x^{d-1}.
    let mut powers: Vec<Vec<u64>> = Vec::with_capacity(2 * d - 1);
    let mut current = vec![0u64; d];
    current[0] = 1 % n;
    for _ in 0..(2 * d - 1) {
        powers.push(current.clone());
        let carry = current[d - 1];
        let mut next = vec![0u64; d];
        next[1..d].copy_from_slice(&current[..d - 1]);
        for (slot, &g) in next.iter_mut().zip(&q.tail) {
            *slot = (*slot + carry * g as u64) % n;
        }
        current = next;
    }
    let mut p = Presentation::new(moduli.clone(), 1);
    for i in 0..d {
        for j in 0..d {
            let v: Vec<u32> = powers[i + j]
                .iter()
                .zip(&moduli)
                .map(|(&c, &m)| (c % m as u64) as u32)
                .collect();
            p.set_ordered_product(i, j, &v);
        }
    }
    Ok(FiniteRing::polynomial_quotient(p, label)?)
}

/// Builds the ring a spec denotes; its label is the canonical text.
pub fn compile(spec: &RingSpec) -> Result<FiniteRing, DslError> {
    let label = format(spec);
    match spec {
        RingSpec::Zn(n) => Ok(FiniteRing::cyclic(*n)?),
        RingSpec::Product(factors) => {
            let mut it = factors.iter();
            let first = it
                .next()
                .ok_or_else(|| unsupported(None, "empty product"))?;
            let mut acc = compile(first)?;
            for f in it {
                acc = FiniteRing::product(&acc, &compile(f)?)?;
            }
            Ok(acc.with_label(label))
        }
        RingSpec::Quotient(q) => compile_quotient(q, label),
    }
}

/// Parses and compiles in one step.
pub fn ring(text: &str) -> Result<FiniteRing, DslError> {
    compile(&parse(text)?)
}

/// Canonical form of a spec string.
pub fn canonicalize(text: &str) -> Result<String, DslError> {
    parse(text).map(|s| format(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Element;

    fn q(modulus: u32, tail: &[u32], kills: &[(u32, u32)]) -> RingSpec {
        RingSpec::Quotient(QuotientSpec {
            modulus,
            tail: tail.to_vec(),
            kills: kills.to_vec(),
        })
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse("Z6"), Ok(RingSpec::Zn(6)));
        assert_eq!(
            parse("Z2 x Z4"),
            Ok(RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(4)]))
        );
        assert_eq!(parse("Z4[x]/(x^2-2, 2x)"), Ok(q(4, &[2, 0], &[(1, 2)])));
        assert_eq!(parse(" z2XZ2 x  Z2 "), parse("Z2 x Z2 x Z2"));
        assert_eq!(parse("Z3[X]/(X^2)"), Ok(q(3, &[0, 0], &[])));
        assert_eq!(
            parse("Z2 x Z2[x]/(x^2)"),
            Ok(RingSpec::Product(vec![RingSpec::Zn(2), q(2, &[0, 0], &[])]))
        );
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("Z6 [") {
            Err(DslError::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        assert_eq!(parse("").unwrap_err().offset(), Some(0));
        assert_eq!(parse("Q5").unwrap_err().offset(), Some(0));
        assert_eq!(parse("Z").unwrap_err().offset(), Some(1));
        assert_eq!(parse("Z6 x").unwrap_err().offset(), Some(4));
        assert_eq!(parse("Z6 + Z2").unwrap_err().offset(), Some(3));
        assert_eq!(parse("Z4[x]/(x^2 2)").unwrap_err().offset(), Some(11));
        assert!(matches!(parse("Z1"), Err(DslError::InvalidModulus { offset: 1, value: 1 })));
    }

    #[test]
    fn unsupported_relations() {
        for text in [
            "Z4[x]/(2x^2+1)",
            "Z4[x]/(x^2+1, x^2+x)",
            "Z4[x]/(x^2, x+1)",
            "Z4[x]/(x^2, 2)",
            "Z4[x]/(4x)",
            "Z4[x]/(x^99)",
        ] {
            assert!(
                matches!(parse(text), Err(DslError::Unsupported { .. })),
                "{text}"
            );
        }
        let spec = parse("Z6[x]/(x^2, 4x)").unwrap();
        assert!(matches!(compile(&spec), Err(DslError::Unsupported { .. })));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format(&RingSpec::Zn(6)), "Z6");
        assert_eq!(
            format(&RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(4)])),
            "Z2 x Z4"
        );
        assert_eq!(format(&q(4, &[2, 0], &[(1, 2)])), "Z4[x]/(x^2+2, 2x)");
        assert_eq!(format(&q(2, &[1, 1, 0], &[])), "Z2[x]/(x^3+x+1)");
        assert_eq!(canonicalize("z4[x]/(x^2 - 2, 2*x)").unwrap(), "Z4[x]/(x^2+2, 2x)");
    }

    #[test]
    fn compiles_quotients() {
        let r = ring("Z2[x]/(x^2)").unwrap();
        assert_eq!(r.order(), 4);
        let zd: Vec<_> = r.zero_divisors().iter().collect();
        assert_eq!(zd, vec![r.basis_element(1)]);
        assert_eq!(r.element_label(zd[0]), "x");

        let r = ring("Z4[x]/(x^2-2,2x)").unwrap();
        assert_eq!(r.order(), 8);
        let x = r.basis_element(1);
        assert_eq!(r.mul(x, x), Element::new(2));
        assert_eq!(r.label(), "Z4[x]/(x^2+2, 2x)");

        assert_eq!(ring("Z3[x]/(x^2)").unwrap().order(), 9);
        assert_eq!(ring("Z2[x]/(x^3)").unwrap().order(), 8);
        // GF(4) as Z2[x]/(x^2+x+1) is a field.
        assert!(ring("Z2[x]/(x^2+x+1)").unwrap().is_domain());
    }

    #[test]
    fn kill_relations_are_closed_under_multiplication() {
        // 2x = 0 forces 2x^2 = 0.
        let r = ring("Z4[x]/(x^3, 2x)").unwrap();
        assert_eq!(r.moduli(), &[4, 2, 2]);
        // 2x = 0 and x^2 = 1 force 2 = 2x^2 = 0.
        let r = ring("Z4[x]/(x^2-1, 2x)").unwrap();
        assert_eq!(r.moduli(), &[2, 2]);
        // 2x = 3x = 0 in Z6 kills x.
        let r = ring("Z6[x]/(x^2, 2x, 3x)").unwrap();
        assert_eq!(r.order(), 6);
    }

    #[test]
    fn product_labels_follow_basis_order() {
        let r = ring("Z2 x Z3").unwrap();
        assert_eq!(r.label(), "Z2 x Z3");
        assert_eq!(r.element_label(Element::new(1)), "(1,0)");
        assert_eq!(r.element_label(Element::new(2)), "(0,1)");
    }
}
