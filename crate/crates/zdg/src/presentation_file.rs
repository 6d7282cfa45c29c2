//! Structure-constant presentations:
//!
//! ```text
//! moduli: 4 2
//! one: 1
//! e0*e0 = 1 0
//! e0*e1 = 0 1
//! e1*e1 = 2 0
//! ```
//!
//! Every pair `i <= j` must appear exactly once.

use thiserror::Error;
use zdg_core::{FiniteRing, Presentation, RingError};

#[derive(Debug, Error)]
pub enum PresentationFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn syntax(line: usize, message: impl Into<String>) -> PresentationFileError {
    PresentationFileError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers(text: &str, line: usize) -> Result<Vec<u32>, PresentationFileError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(line, format!("bad number {t:?}"))))
        .collect()
}

fn basis_index(tok: &str, line: usize) -> Result<usize, PresentationFileError> {
    tok.trim()
        .strip_prefix('e')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| syntax(line, format!("expected a basis element like e0, found {tok:?}")))
}

pub fn parse(text: &str) -> Result<FiniteRing, PresentationFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing `moduli:` line"))?;
    let moduli = numbers(
        header
            .strip_prefix("moduli:")
            .ok_or_else(|| syntax(line, "expected `moduli: m0 m1 ...`"))?,
        line,
    )?;
    if moduli.is_empty() {
        return Err(syntax(line, "no moduli"));
    }
    let k = moduli.len();

    let (line, one_line) = lines.next().ok_or_else(|| syntax(line + 1, "missing `one:` line"))?;
    let one: usize = one_line
        .strip_prefix("one:")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| syntax(line, "expected `one: <index>`"))?;

    let mut p = Presentation::new(moduli, one);
    let mut seen = vec![false; k * k];
    let mut last = line;
    for (line, l) in lines {
        last = line;
        let (lhs, rhs) = l
            .split_once('=')
            .ok_or_else(|| syntax(line, "expected `e<i>*e<j> = c0 c1 ...`"))?;
        let (a, b) = lhs
            .split_once('*')
            .ok_or_else(|| syntax(line, "expected `e<i>*e<j>`"))?;
        let (i, j) = (basis_index(a, line)?, basis_index(b, line)?);
        if i >= k || j >= k {
            return Err(syntax(line, format!("basis index out of range for rank {k}")));
        }
        if i > j {
            return Err(syntax(line, format!("write e{j}*e{i} instead of e{i}*e{j}")));
        }
        if std::mem::replace(&mut seen[i * k + j], true) {
            return Err(syntax(line, format!("e{i}*e{j} given twice")));
        }
        let coeffs = numbers(rhs, line)?;
        if coeffs.len() != k {
            return Err(syntax(line, format!("expected {k} coefficients, found {}", coeffs.len())));
        }
        p.set_product(i, j, &coeffs);
    }
    for i in 0..k {
        for j in i..k {
            if !seen[i * k + j] {
                return Err(syntax(last + 1, format!("missing product e{i}*e{j}")));
            }
        }
    }
    Ok(p.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zdg_core::Element;

    const Z4X: &str = "moduli: 4 2\none: 1\ne0*e0 = 1 0\ne0*e1 = 0 1\ne1*e1 = 2 0\n";

    #[test]
    fn loads_a_local_ring_of_order_eight() {
        let r = parse(Z4X).unwrap();
        assert_eq!(r.order(), 8);
        let x = r.basis_element(1);
        assert_eq!(r.mul(x, x), r.from_coefficients(&[2, 0]).unwrap());
        assert_eq!(r.zero_divisors().len(), 3);
        assert_eq!(r.annihilator_ideal_witness(), Some(Element::new(2)));
    }

    #[test]
    fn rejects_missing_and_duplicate_products() {
        let missing = "moduli: 4 2\none: 1\ne0*e0 = 1 0\ne0*e1 = 0 1\n";
        assert!(matches!(parse(missing), Err(PresentationFileError::Syntax { .. })));
        let twice = format!("{Z4X}e1*e1 = 2 0\n");
        assert!(matches!(parse(&twice), Err(PresentationFileError::Syntax { line: 6, .. })));
        let flipped = "moduli: 2 2\none: 1\ne0*e0 = 1 0\ne1*e0 = 0 1\n";
        assert!(matches!(parse(flipped), Err(PresentationFileError::Syntax { line: 4, .. })));
    }

    #[test]
    fn rejects_non_rings() {
        // e1 is declared the identity but kills e0.
        let bad = "moduli: 2 2\none: 2\ne0*e0 = 1 0\ne0*e1 = 0 0\ne1*e1 = 0 1\n";
        assert!(matches!(parse(bad), Err(PresentationFileError::Ring(_))));
    }
}
