//! Deterministic test-corpus generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::RleError;
use crate::rle::{RleString, MAX_LENGTH};

/// Largest Fibonacci order generated (F(32) = 2_178_309 characters).
pub const MAX_FIBONACCI_ORDER: u32 = 32;
/// Largest Thue-Morse order generated (2^24 characters).
pub const MAX_THUE_MORSE_ORDER: u32 = 24;
/// Largest alphabet for the random families (symbols `a..z`).
pub const MAX_RANDOM_SIGMA: u32 = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `s_1 = b`, `s_2 = a`, `s_k = s_{k-1} s_{k-2}`.
    Fibonacci { order: u32 },
    /// Prefix of length `2^order` of the Thue-Morse word over `{a, b}`.
    ThueMorse { order: u32 },
    /// `runs` runs over `sigma` letters, exponents uniform in `[1, max_exponent]`.
    RandomRuns { runs: usize, sigma: u32, max_exponent: u64, seed: u64 },
    /// Uniform random text of length `len` over `sigma` letters.
    RandomText { len: usize, sigma: u32, seed: u64 },
    /// `symbol^length`.
    PowerString { symbol: u32, length: u64 },
}

fn letter(i: u32) -> u32 {
    b'a' as u32 + i
}

fn check_sigma(sigma: u32) -> Result<(), RleError> {
    if sigma == 0 || sigma > MAX_RANDOM_SIGMA {
        return Err(RleError::ParamOutOfRange(format!(
            "sigma must be in 1..={MAX_RANDOM_SIGMA}, got {sigma}"
        )));
    }
    Ok(())
}

pub fn fibonacci_word(order: u32) -> Result<Vec<u8>, RleError> {
    if order == 0 || order > MAX_FIBONACCI_ORDER {
        return Err(RleError::ParamOutOfRange(format!(
            "fibonacci order must be in 1..={MAX_FIBONACCI_ORDER}, got {order}"
        )));
    }
    let (mut older, mut newer) = (b"b".to_vec(), b"a".to_vec());
    if order == 1 {
        return Ok(older);
    }
    for _ in 2..order {
        let next = [newer.as_slice(), older.as_slice()].concat();
        older = std::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

pub fn thue_morse_word(order: u32) -> Result<Vec<u8>, RleError> {
    if order > MAX_THUE_MORSE_ORDER {
        return Err(RleError::ParamOutOfRange(format!(
            "thue-morse order must be at most {MAX_THUE_MORSE_ORDER}, got {order}"
        )));
    }
    Ok((0u32..1 << order)
        .map(|i| if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
        .collect())
}

pub fn generate(family: &Family) -> Result<RleString, RleError> {
    match *family {
        Family::Fibonacci { order } => Ok(crate::rle::encode(&fibonacci_word(order)?)),
        Family::ThueMorse { order } => Ok(crate::rle::encode(&thue_morse_word(order)?)),
        Family::PowerString { symbol, length } => {
            if length == 0 {
                return Ok(RleString::default());
            }
            RleString::from_pairs([(symbol, length)], false)
                .map_err(|_| RleError::ParamOutOfRange(format!("length {length} exceeds 2^62")))
        }
        Family::RandomText { len, sigma, seed } => {
            check_sigma(sigma)?;
            if len as u64 > MAX_LENGTH {
                return Err(RleError::ParamOutOfRange(format!("length {len} exceeds 2^62")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let text: Vec<u32> = (0..len).map(|_| letter(rng.gen_range(0..sigma))).collect();
            Ok(RleString::encode_symbols(&text))
        }
        Family::RandomRuns { runs, sigma, max_exponent, seed } => {
            check_sigma(sigma)?;
            if runs > 1 && sigma < 2 {
                return Err(RleError::ParamOutOfRange(
                    "more than one run needs sigma >= 2".into(),
                ));
            }
            if max_exponent == 0
                || (runs as u128) * (max_exponent as u128) > MAX_LENGTH as u128
            {
                return Err(RleError::ParamOutOfRange(format!(
                    "{runs} runs with exponents up to {max_exponent} may exceed 2^62"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = Vec::with_capacity(runs);
            let mut prev: Option<u32> = None;
            for _ in 0..runs {
                let sym = match prev {
                    None => rng.gen_range(0..sigma),
                    Some(p) => {
                        let s = rng.gen_range(0..sigma - 1);
                        if s >= p {
                            s + 1
                        } else {
                            s
                        }
                    }
                };
                prev = Some(sym);
                pairs.push((letter(sym), rng.gen_range(1..=max_exponent)));
            }
            RleString::from_pairs(pairs, false)
                .map_err(|e| RleError::ParamOutOfRange(e.to_string()))
        }
    }
}
