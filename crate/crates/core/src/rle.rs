//! Run-length encoded strings.
//!
//! Every structure downstream of parsing works on dense symbol ranks; the
//! external alphabet (bytes or code points) only survives in the
//! [`SymbolTable`]. Nothing in this module materializes the decoded text
//! unless explicitly asked to through [`RleString::expand`].

use std::fmt::Write as _;

use crate::error::RleError;

/// Upper bound (inclusive) for a single exponent and for the total length.
pub const MAX_LENGTH: u64 = 1 << 62;

/// A maximal block `symbol^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    /// Dense 0-based symbol rank.
    pub symbol: u32,
    pub exponent: u64,
}

/// Bidirectional map between external symbols and dense ranks.
///
/// Ranks follow the numeric order of the external symbols, so comparing
/// ranks is the same as comparing the original characters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    externals: Vec<u32>,
}

impl SymbolTable {
    fn from_externals(mut externals: Vec<u32>) -> Self {
        externals.sort_unstable();
        externals.dedup();
        SymbolTable { externals }
    }

    pub fn len(&self) -> usize {
        self.externals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.externals.is_empty()
    }

    pub fn rank_of(&self, external: u32) -> Option<u32> {
        self.externals.binary_search(&external).ok().map(|r| r as u32)
    }

    pub fn external(&self, rank: u32) -> u32 {
        self.externals[rank as usize]
    }
}

/// A string given by its run-length encoding.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RleString {
    runs: Vec<Run>,
    /// `starts[j]` is the 0-based position of run `j`; `starts[r] = n`.
    starts: Vec<u64>,
    symbols: SymbolTable,
}

impl RleString {
    /// Builds a canonical RLE string from `(external symbol, exponent)` pairs.
    ///
    /// With `normalize` set, adjacent pairs with the same symbol are merged;
    /// otherwise they are rejected. Error line numbers are 1-based pair
    /// indices.
    pub fn from_pairs<I>(pairs: I, normalize: bool) -> Result<Self, RleError>
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        let mut merged: Vec<(u32, u64)> = Vec::new();
        let mut n: u64 = 0;
        for (idx, (sym, exp)) in pairs.into_iter().enumerate() {
            let line = idx + 1;
            if exp == 0 {
                return Err(RleError::NonPositiveExponent { line });
            }
            if exp > MAX_LENGTH {
                return Err(RleError::ExponentOverflow { line });
            }
            n = n
                .checked_add(exp)
                .filter(|&t| t <= MAX_LENGTH)
                .ok_or(RleError::ExponentOverflow { line })?;
            match merged.last_mut() {
                Some(last) if last.0 == sym => {
                    if !normalize {
                        return Err(RleError::AdjacentEqualRuns { line });
                    }
                    last.1 += exp;
                }
                _ => merged.push((sym, exp)),
            }
        }
        Ok(Self::from_canonical(merged))
    }

    fn from_canonical(pairs: Vec<(u32, u64)>) -> Self {
        let symbols = SymbolTable::from_externals(pairs.iter().map(|p| p.0).collect());
        let mut starts = Vec::with_capacity(pairs.len() + 1);
        let mut pos = 0u64;
        let runs = pairs
            .iter()
            .map(|&(sym, exp)| {
                starts.push(pos);
                pos += exp;
                Run {
                    symbol: symbols.rank_of(sym).expect("symbol registered"),
                    exponent: exp,
                }
            })
            .collect();
        starts.push(pos);
        RleString { runs, starts, symbols }
    }

    /// Run-length encodes a sequence of external symbols.
    pub fn encode_symbols(text: &[u32]) -> Self {
        let mut pairs: Vec<(u32, u64)> = Vec::new();
        for &c in text {
            match pairs.last_mut() {
                Some(last) if last.0 == c => last.1 += 1,
                _ => pairs.push((c, 1)),
            }
        }
        Self::from_canonical(pairs)
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn run(&self, j: usize) -> Run {
        self.runs[j]
    }

    /// Number of runs.
    pub fn r(&self) -> usize {
        self.runs.len()
    }

    /// Total decoded length.
    pub fn n(&self) -> u64 {
        *self.starts.last().unwrap_or(&0)
    }

    /// Number of distinct symbols.
    pub fn sigma(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    /// 0-based start of run `j`; `start(r) = n`.
    pub fn start(&self, j: usize) -> u64 {
        self.starts[j]
    }

    /// 1-based run boundaries, one per run.
    pub fn boundaries(&self) -> impl Iterator<Item = u64> + '_ {
        self.starts[..self.runs.len()].iter().map(|&s| s + 1)
    }

    /// Index of the run covering 0-based position `pos < n`.
    pub fn run_at(&self, pos: u64) -> usize {
        debug_assert!(pos < self.n());
        self.starts.partition_point(|&s| s <= pos) - 1
    }

    /// Length of the suffix starting at run `j` (`j = r` gives 0).
    pub fn suffix_len(&self, j: usize) -> u64 {
        self.n() - self.starts[j]
    }

    /// Decodes to external symbols. Fails if `n` exceeds `limit`.
    pub fn expand(&self, limit: u64) -> Result<Vec<u32>, RleError> {
        self.check_limit(limit)?;
        let mut out = Vec::with_capacity(self.n() as usize);
        for run in &self.runs {
            let c = self.symbols.external(run.symbol);
            out.extend(std::iter::repeat_n(c, run.exponent as usize));
        }
        Ok(out)
    }

    /// Decodes to symbol ranks. Fails if `n` exceeds `limit`.
    pub fn expand_ranks(&self, limit: u64) -> Result<Vec<u32>, RleError> {
        self.check_limit(limit)?;
        let mut out = Vec::with_capacity(self.n() as usize);
        for run in &self.runs {
            out.extend(std::iter::repeat_n(run.symbol, run.exponent as usize));
        }
        Ok(out)
    }

    fn check_limit(&self, limit: u64) -> Result<(), RleError> {
        if self.n() > limit {
            return Err(RleError::InputTooLarge { n: self.n(), limit });
        }
        Ok(())
    }

    /// Appends one external symbol, merging with the last run if equal.
    pub fn push(&self, symbol: u32) -> Self {
        let mut pairs: Vec<(u32, u64)> = self
            .runs
            .iter()
            .map(|run| (self.symbols.external(run.symbol), run.exponent))
            .collect();
        pairs.push((symbol, 1));
        Self::from_pairs(pairs, true).expect("appending one symbol stays in range")
    }

    /// Serializes to the line-oriented RLE text format.
    pub fn to_rle_text(&self) -> String {
        let mut out = String::new();
        for run in &self.runs {
            let sym = format_symbol(self.symbols.external(run.symbol));
            writeln!(out, "{} {}", sym, run.exponent).unwrap();
        }
        out
    }
}

/// Run-length encodes a byte sequence.
pub fn encode(text: &[u8]) -> RleString {
    let symbols: Vec<u32> = text.iter().map(|&b| b as u32).collect();
    RleString::encode_symbols(&symbols)
}

fn format_symbol(cp: u32) -> String {
    match char::from_u32(cp) {
        Some(c) if !c.is_whitespace() && !c.is_control() && c != '#' => c.to_string(),
        _ => format!("0x{:02X}", cp),
    }
}

fn parse_symbol(token: &str) -> Option<u32> {
    let mut chars = token.chars();
    let first = chars.next()?;
    if chars.next().is_none() {
        return Some(first as u32);
    }
    let hex = token.strip_prefix("0x").or_else(|| token.strip_prefix("0X"))?;
    if hex.len() < 2 || hex.len() > 6 {
        return None;
    }
    u32::from_str_radix(hex, 16).ok()
}

/// Parses the RLE text format: one `<symbol> <exponent>` pair per line,
/// `#` comment lines and blank lines ignored.
pub fn parse_rle(text: &str, normalize: bool) -> Result<RleString, RleError> {
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(sym_tok), Some(exp_tok), None) = (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(RleError::MalformedLine {
                line,
                reason: "expected `<symbol> <exponent>`".into(),
            });
        };
        let symbol = parse_symbol(sym_tok).ok_or_else(|| RleError::MalformedLine {
            line,
            reason: format!("bad symbol `{sym_tok}`"),
        })?;
        if exp_tok.starts_with('-') && exp_tok[1..].bytes().all(|b| b.is_ascii_digit()) {
            return Err(RleError::NonPositiveExponent { line });
        }
        if !exp_tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RleError::MalformedLine {
                line,
                reason: format!("bad exponent `{exp_tok}`"),
            });
        }
        let exponent = match exp_tok.parse::<u64>() {
            Ok(e) => e,
            Err(_) => return Err(RleError::ExponentOverflow { line }),
        };
        pairs.push((symbol, exponent));
        lines.push(line);
    }
    // Report errors against source lines rather than pair indices.
    RleString::from_pairs(pairs, normalize).map_err(|e| e.with_line(|i| lines[i - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(rle: &RleString) -> Vec<(char, u64)> {
        rle.runs()
            .iter()
            .map(|r| (char::from_u32(rle.symbols().external(r.symbol)).unwrap(), r.exponent))
            .collect()
    }

    #[test]
    fn encode_four_runs() {
        let rle = encode(b"aabbbaabb");
        assert_eq!(pairs(&rle), vec![('a', 2), ('b', 3), ('a', 2), ('b', 2)]);
        assert_eq!((rle.n(), rle.r(), rle.sigma()), (9, 4, 2));
        assert_eq!(rle.boundaries().collect::<Vec<_>>(), vec![1, 3, 6, 8]);
    }

    #[test]
    fn encode_empty_and_distinct() {
        let empty = encode(b"");
        assert_eq!((empty.n(), empty.r()), (0, 0));
        assert!(empty.expand(10).unwrap().is_empty());
        let abc = encode(b"abc");
        assert_eq!(pairs(&abc), vec![('a', 1), ('b', 1), ('c', 1)]);
    }

    #[test]
    fn ranks_follow_symbol_order() {
        let rle = encode(b"zzyx");
        let ranks: Vec<u32> = rle.runs().iter().map(|r| r.symbol).collect();
        assert_eq!(ranks, vec![2, 1, 0]);
    }

    #[test]
    fn parse_running_example() {
        let rle = parse_rle("a 2\nb 3\na 2\nb 2\na 3", false).unwrap();
        assert_eq!((rle.n(), rle.r()), (12, 5));
        assert_eq!(rle.expand(100).unwrap(), encode(b"aabbbaabbaaa").expand(100).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_rle("a 0", false), Err(RleError::NonPositiveExponent { line: 1 }));
        assert_eq!(parse_rle("a -4", false), Err(RleError::NonPositiveExponent { line: 1 }));
        assert_eq!(
            parse_rle("# c\na 2\na 3", false),
            Err(RleError::AdjacentEqualRuns { line: 3 })
        );
        assert!(matches!(parse_rle("ab 2", false), Err(RleError::MalformedLine { line: 1, .. })));
        assert!(matches!(parse_rle("a", false), Err(RleError::MalformedLine { .. })));
        assert!(matches!(parse_rle("a 2x", false), Err(RleError::MalformedLine { .. })));
        let big = format!("a {}", MAX_LENGTH + 1);
        assert_eq!(parse_rle(&big, false), Err(RleError::ExponentOverflow { line: 1 }));
        let sum = format!("a {}\nb {}", MAX_LENGTH, 1);
        assert_eq!(parse_rle(&sum, false), Err(RleError::ExponentOverflow { line: 2 }));
        assert_eq!(
            parse_rle("a 99999999999999999999999", false),
            Err(RleError::ExponentOverflow { line: 1 })
        );
    }

    #[test]
    fn parse_normalize_merges() {
        let rle = parse_rle("a 2\na 3", true).unwrap();
        assert_eq!(pairs(&rle), vec![('a', 5)]);
    }

    #[test]
    fn parse_escapes_and_comments() {
        let rle = parse_rle("# header\n0x23\t4\n\n0x0a 1\né 2\n", false).unwrap();
        assert_eq!(rle.expand(10).unwrap(), vec![0x23, 0x23, 0x23, 0x23, 0x0a, 0xe9, 0xe9]);
        assert_eq!(rle.to_rle_text(), "0x23 4\n0x0A 1\né 2\n");
    }

    #[test]
    fn huge_exponents_stay_compressed() {
        let rle = RleString::from_pairs([(b'a' as u32, 1u64 << 50), (b'b' as u32, 1 << 50)], false)
            .unwrap();
        assert_eq!(rle.n(), 1 << 51);
        assert_eq!(rle.run_at((1 << 50) - 1), 0);
        assert_eq!(rle.run_at(1 << 50), 1);
        assert!(matches!(rle.expand(1 << 20), Err(RleError::InputTooLarge { .. })));
    }

    #[test]
    fn push_merges_last_run() {
        let rle = encode(b"aab").push(b'b' as u32);
        assert_eq!(pairs(&rle), vec![('a', 2), ('b', 2)]);
        let rle = encode(b"aab").push(b'a' as u32);
        assert_eq!(rle.r(), 3);
    }
}
