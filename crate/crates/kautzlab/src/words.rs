/*!
Vertex labels and family parameters.

Vertices of every family are words `x1 x2 … xl` over the alphabet
`{0, …, d}` in which consecutive symbols differ; the cyclic families
additionally require `x1 != xl`. Words are immutable once built and order
lexicographically, which fixes the vertex numbering used everywhere else.
*/

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One letter of the alphabet `{0, …, d}`.
pub type Symbol = u8;

/// The four digraph families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Family {
    /// Kautz digraph `K(d, l)`: shift words, append any symbol other than the last.
    Kautz,
    /// SubKautz digraph `sK(d, l)`: Kautz minus the arcs re-appending the first symbol.
    SubKautz,
    /// Cyclic Kautz digraph `CK(d, l)`: words with `x1 != xl`, shift arcs staying in that set.
    CyclicKautz,
    /// Modified cyclic Kautz digraph `MCK(d, l)`: `CK(d, l)` plus one repaired arc
    /// per forbidden shift, restoring out-degree `d`.
    ModifiedCyclicKautz,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Kautz,
        Family::SubKautz,
        Family::CyclicKautz,
        Family::ModifiedCyclicKautz,
    ];

    /// Short name as used on the command line: `K`, `sK`, `CK`, `MCK`.
    pub fn code(self) -> &'static str {
        match self {
            Family::Kautz => "K",
            Family::SubKautz => "sK",
            Family::CyclicKautz => "CK",
            Family::ModifiedCyclicKautz => "MCK",
        }
    }

    /// True for the families whose vertex labels must have `x1 != xl`.
    pub fn cyclic_labels(self) -> bool {
        matches!(self, Family::CyclicKautz | Family::ModifiedCyclicKautz)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "k" | "kautz" => Ok(Family::Kautz),
            "sk" | "subkautz" => Ok(Family::SubKautz),
            "ck" | "cyclickautz" => Ok(Family::CyclicKautz),
            "mck" | "modifiedcyclickautz" => Ok(Family::ModifiedCyclicKautz),
            other => Err(Error::InvalidSpec(format!(
                "unknown family {other:?} (expected K, sK, CK or MCK)"
            ))),
        }
    }
}

/// A family instance: which family, alphabet parameter `d`, word length `len`.
///
/// The alphabet is `{0, …, d}`, so it has `d + 1` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub d: u8,
    pub len: usize,
}

impl FamilySpec {
    /// Builds a spec, rejecting parameters outside `d >= 2`, `len >= 2`.
    pub fn new(family: Family, d: u8, len: usize) -> Result<FamilySpec> {
        if d < 2 {
            return Err(Error::InvalidSpec(format!("d = {d}, but d >= 2 is required")));
        }
        if len < 2 {
            return Err(Error::InvalidSpec(format!(
                "l = {len}, but l >= 2 is required"
            )));
        }
        Ok(FamilySpec { family, d, len })
    }

    /// `CK(2, l)` splits into several components for every `l` other than 2 and 4.
    pub fn known_disconnected(&self) -> bool {
        self.family == Family::CyclicKautz && self.d == 2 && self.len != 2 && self.len != 4
    }

    /// Checks whether `w` labels a vertex of this instance.
    ///
    /// The word must already live on the same alphabet and have the right
    /// length; those mismatches are reported as errors rather than `false`,
    /// since they indicate the word belongs to a different instance entirely.
    pub fn is_valid_vertex(&self, w: &Word) -> Result<bool> {
        if w.d() != self.d {
            return Err(Error::WordSpecMismatch {
                word: w.to_string(),
                spec: self.to_string(),
                reason: format!("word alphabet d = {} differs from spec", w.d()),
            });
        }
        if w.len() != self.len {
            return Err(Error::WordSpecMismatch {
                word: w.to_string(),
                spec: self.to_string(),
                reason: format!("word length {} differs from spec length {}", w.len(), self.len),
            });
        }
        let s = w.symbols();
        let consecutive_ok = s.windows(2).all(|p| p[0] != p[1]);
        let ends_ok = !self.family.cyclic_labels() || s[0] != s[self.len - 1];
        Ok(consecutive_ok && ends_ok)
    }

    /// All vertex labels of this instance in lexicographic order.
    pub fn enumerate_vertices(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut buf = vec![0u8; self.len];
        self.enumerate_from(0, &mut buf, &mut out);
        out
    }

    fn enumerate_from(&self, pos: usize, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
        if pos == self.len {
            out.push(Word {
                symbols: buf.clone(),
                d: self.d,
            });
            return;
        }
        for sym in 0..=self.d {
            if pos > 0 && buf[pos - 1] == sym {
                continue;
            }
            if pos == self.len - 1 && self.family.cyclic_labels() && buf[0] == sym {
                continue;
            }
            buf[pos] = sym;
            self.enumerate_from(pos + 1, buf, out);
        }
    }

    /// Parses a word in this instance's text format and checks it labels a vertex.
    pub fn parse_vertex(&self, text: &str) -> Result<Word> {
        let w = Word::parse(text, self.d)?;
        if w.len() != self.len {
            return Err(Error::WordSpecMismatch {
                word: text.to_string(),
                spec: self.to_string(),
                reason: format!("expected {} symbols, found {}", self.len, w.len()),
            });
        }
        if !self.is_valid_vertex(&w)? {
            return Err(Error::WordSpecMismatch {
                word: text.to_string(),
                spec: self.to_string(),
                reason: "not a vertex of this family".to_string(),
            });
        }
        Ok(w)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", self.family, self.d, self.len)
    }
}

/// An immutable vertex label: a sequence of symbols over `{0, …, d}`.
///
/// Ordering is lexicographic on the symbols. The alphabet parameter rides
/// along so a word can render and re-parse itself: symbols are concatenated
/// decimal digits when `d <= 9` and comma-separated numbers otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    d: u8,
}

impl Word {
    /// Builds a word, checking symbol range and minimum length.
    pub fn new(symbols: Vec<Symbol>, d: u8) -> Result<Word> {
        if symbols.len() < 2 {
            return Err(Error::InvalidWord {
                input: format!("{symbols:?}"),
                reason: "words must have at least 2 symbols".to_string(),
            });
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s > d) {
            return Err(Error::InvalidWord {
                input: format!("{symbols:?}"),
                reason: format!("symbol {bad} exceeds alphabet bound d = {d}"),
            });
        }
        Ok(Word { symbols, d })
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The word read back to front.
    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { symbols, d: self.d }
    }

    /// Smallest `p >= 1` with `symbols[i] == symbols[i + p]` wherever both exist.
    ///
    /// An aperiodic word returns its own length.
    pub fn period(&self) -> usize {
        let s = &self.symbols;
        (1..=s.len())
            .find(|&p| (0..s.len() - p).all(|i| s[i] == s[i + p]))
            .unwrap_or(s.len())
    }

    /// Parses the text format: decimal digits when `d <= 9`, comma-separated otherwise.
    pub fn parse(text: &str, d: u8) -> Result<Word> {
        let bad = |reason: String| Error::InvalidWord {
            input: text.to_string(),
            reason,
        };
        let symbols: Vec<Symbol> = if d <= 9 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|v| v as Symbol)
                        .ok_or_else(|| bad(format!("{c:?} is not a decimal digit")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Symbol>()
                        .map_err(|e| bad(format!("{part:?}: {e}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(symbols, d)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d <= 9 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, d: u8, len: usize) -> FamilySpec {
        FamilySpec::new(family, d, len).unwrap()
    }

    fn word(text: &str, d: u8) -> Word {
        Word::parse(text, d).unwrap()
    }

    #[test]
    fn vertex_validity_follows_family_rules() {
        let ck = spec(Family::CyclicKautz, 2, 3);
        let k = spec(Family::Kautz, 2, 3);
        // 010 repeats its endpoints: fine for K, not for CK.
        assert!(k.is_valid_vertex(&word("010", 2)).unwrap());
        assert!(!ck.is_valid_vertex(&word("010", 2)).unwrap());
        assert!(ck.is_valid_vertex(&word("012", 2)).unwrap());
        // consecutive repeat is invalid everywhere
        assert!(!k.is_valid_vertex(&word("001", 2)).unwrap());
    }

    #[test]
    fn vertex_validity_rejects_mismatched_words() {
        let ck = spec(Family::CyclicKautz, 2, 3);
        assert!(ck.is_valid_vertex(&word("0121", 2)).is_err());
        assert!(ck.is_valid_vertex(&word("012", 3)).is_err());
    }

    #[test]
    fn enumerate_ck_2_2() {
        let got: Vec<String> = spec(Family::CyclicKautz, 2, 2)
            .enumerate_vertices()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["01", "02", "10", "12", "20", "21"]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(spec(Family::Kautz, 2, 3).enumerate_vertices().len(), 12);
        assert_eq!(spec(Family::SubKautz, 2, 3).enumerate_vertices().len(), 12);
        assert_eq!(spec(Family::CyclicKautz, 3, 4).enumerate_vertices().len(), 84);
        assert_eq!(
            spec(Family::ModifiedCyclicKautz, 3, 4)
                .enumerate_vertices()
                .len(),
            84
        );
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        for family in Family::ALL {
            let vs = spec(family, 3, 4).enumerate_vertices();
            assert!(vs.windows(2).all(|p| p[0] < p[1]), "{family} out of order");
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(word("01010", 2).period(), 2);
        assert_eq!(word("012", 2).period(), 3);
        assert_eq!(word("0120123012012", 3).period(), 7);
        assert_eq!(word("0110", 2).period(), 3); // the border "0" matches a shift of 3
        assert_eq!(word("0112", 2).period(), 4); // no shift matches at all
    }

    #[test]
    fn reverse_is_an_involution() {
        let w = word("0120", 3);
        assert_eq!(w.reversed().to_string(), "0210");
        assert_eq!(w.reversed().reversed(), w);
    }

    #[test]
    fn wide_alphabet_text_format_round_trips() {
        let w = Word::new(vec![0, 11, 2], 11).unwrap();
        assert_eq!(w.to_string(), "0,11,2");
        assert_eq!(Word::parse("0,11,2", 11).unwrap(), w);
        // a symbol beyond the alphabet is rejected
        assert!(Word::new(vec![0, 12], 11).is_err());
        assert!(Word::parse("0x1", 2).is_err());
    }

    #[test]
    fn spec_parameter_bounds() {
        assert!(FamilySpec::new(Family::Kautz, 1, 3).is_err());
        assert!(FamilySpec::new(Family::Kautz, 2, 1).is_err());
        assert!("xyz".parse::<Family>().is_err());
        assert_eq!("sk".parse::<Family>().unwrap(), Family::SubKautz);
    }

    #[test]
    fn known_disconnected_instances() {
        assert!(spec(Family::CyclicKautz, 2, 3).known_disconnected());
        assert!(spec(Family::CyclicKautz, 2, 5).known_disconnected());
        assert!(!spec(Family::CyclicKautz, 2, 2).known_disconnected());
        assert!(!spec(Family::CyclicKautz, 2, 4).known_disconnected());
        assert!(!spec(Family::CyclicKautz, 3, 3).known_disconnected());
        assert!(!spec(Family::SubKautz, 2, 3).known_disconnected());
    }
}
