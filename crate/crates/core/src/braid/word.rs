use std::fmt;
use std::ops::Mul;

use rand::Rng;

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`.
///
/// A positive letter `k` stands for `σ_k`, a negative one for `σ_k⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidParameter(format!(
                "braid groups need at least 2 strands, got {strands}"
            )));
        }
        for &k in &letters {
            check_letter(k as i64, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 2, "braid groups need at least 2 strands");
        BraidWord { strands, letters: Vec::new() }
    }

    /// `σ_i^e` (with `e` possibly negative or zero).
    pub fn generator_power(strands: usize, i: i32, e: i64) -> Result<Self> {
        check_letter(i as i64, strands)?;
        if i < 0 {
            return Err(Error::InvalidParameter("generator index must be positive".into()));
        }
        let letter = if e >= 0 { i } else { -i };
        Ok(BraidWord { strands, letters: vec![letter; e.unsigned_abs() as usize] })
    }

    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::generator_power(strands, i, 1)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let reps = e.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `k, -k` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &k in &self.letters {
            if out.last() == Some(&-k) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Same braid viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Text with the `n=<int>;` header, as read by [`parse_word_with_header`].
    pub fn to_text(&self) -> String {
        format!("n={}; {}", self.strands, self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, k) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Concatenation.
///
/// # Panics
///
/// Panics if the strand counts differ; use [`BraidWord::compose`] for a
/// fallible version.
impl Mul<&BraidWord> for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.compose(rhs).expect("strand count mismatch")
    }
}

impl Mul<BraidWord> for BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: BraidWord) -> BraidWord {
        &self * &rhs
    }
}

fn check_letter(k: i64, strands: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroLetter);
    }
    if k.unsigned_abs() as usize > strands - 1 {
        return Err(Error::IndexOutOfRange { index: k, strands });
    }
    Ok(())
}

fn parse_letters(body: &str, strands: usize) -> Result<Vec<i32>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let k: i64 = tok
                .parse()
                .map_err(|_| Error::MalformedToken { token: tok.to_string() })?;
            check_letter(k, strands)?;
            Ok(k as i32)
        })
        .collect()
}

/// Splits off an optional `n=<int>;` header.
fn split_header(text: &str) -> Result<(Option<usize>, &str)> {
    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("n=") {
        let (num, body) = rest
            .split_once(';')
            .ok_or_else(|| Error::Parse("header `n=<int>` must end with ';'".into()))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {:?}", num.trim())))?;
        Ok((Some(n), body))
    } else {
        Ok((None, trimmed))
    }
}

/// Parses whitespace/comma separated signed generator indices on `n` strands.
///
/// An `n=<int>;` header is accepted if it agrees with `n`.
/// A uniformly random word of length `len` over `σ_1^{±1}, …, σ_{n-1}^{±1}`.
pub fn random_word<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 strands, got {n}")));
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::new(n, letters)
}

pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    let (header, body) = split_header(text)?;
    if let Some(h) = header {
        if h != n {
            return Err(Error::StrandMismatch { left: h, right: n });
        }
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 strands, got {n}")));
    }
    Ok(BraidWord { strands: n, letters: parse_letters(body, n)? })
}

/// Parses a braid word whose strand count comes from the header, or from
/// `default_n` when the header is absent.
pub fn parse_word_with_header(text: &str, default_n: Option<usize>) -> Result<BraidWord> {
    let (header, _) = split_header(text)?;
    let n = header
        .or(default_n)
        .ok_or_else(|| Error::Parse("strand count missing (no `n=` header)".into()))?;
    parse_word(text, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_words() {
        let w = parse_word("1 1 1 -2", 3).unwrap();
        assert_eq!(w.letters(), &[1, 1, 1, -2]);
        assert_eq!(parse_word("1,1, 1,-2", 3).unwrap(), w);
        assert!(parse_word("", 4).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_word("3", 3), Err(Error::IndexOutOfRange { index: 3, strands: 3 }));
        assert_eq!(parse_word("1 0", 3), Err(Error::ZeroLetter));
        assert!(matches!(parse_word("1 x", 3), Err(Error::MalformedToken { .. })));
        assert!(matches!(parse_word("n=4; 1", 3), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn header_round_trip() {
        let w = parse_word_with_header("n=5; 4 -3, 2", None).unwrap();
        assert_eq!(w.strands(), 5);
        assert_eq!(parse_word_with_header(&w.to_text(), None).unwrap(), w);
        assert_eq!(parse_word(&w.to_string(), 5).unwrap(), w);
        assert!(parse_word_with_header("1 2", None).is_err());
    }

    #[test]
    fn group_operations() {
        let s1 = BraidWord::generator(3, 1).unwrap();
        let s2 = BraidWord::generator(3, 2).unwrap();
        assert!((&s1 * &s1.inverse()).free_reduce().is_empty());
        assert_eq!((&s1 * &s2).inverse().letters(), &[-2, -1]);
        assert_eq!(s1.pow(2).conjugate(&s2).unwrap().letters(), &[2, 1, 1, -2]);
        let w4 = BraidWord::identity(4);
        assert!(s1.compose(&w4).is_err());
    }

    #[test]
    fn free_reduce_only_cancels_adjacent_pairs() {
        let w = BraidWord::new(4, vec![1, 2, -2, -1, 3, 1, -3]).unwrap();
        assert_eq!(w.free_reduce().letters(), &[3, 1, -3]);
    }
}
