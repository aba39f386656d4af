//! Words in `d` letters encoded as integers.
//!
//! A word `a_1 ... a_n` is the base-`d` number with `a_1` most significant, so numeric order on
//! words of a fixed length is the lexicographic order induced by the generator order.

use crate::error::{Error, Result};

/// Largest tensor power dimension we are willing to index densely.
pub const MAX_WORDS: usize = 1_000_000;

/// `d^n`, or a capacity error when it exceeds [`MAX_WORDS`].
pub fn word_count(d: usize, n: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..n {
        acc = acc
            .checked_mul(d)
            .filter(|&v| v <= MAX_WORDS)
            .ok_or_else(|| Error::Capacity(format!("{d}^{n} words exceed the limit of {MAX_WORDS}")))?;
    }
    Ok(acc)
}

pub fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

pub fn letters(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

pub fn index(letters: &[usize], d: usize) -> usize {
    letters.iter().fold(0, |acc, &a| acc * d + a)
}

/// Index of the concatenation `u v` where `v` has length `len_v`.
pub fn concat(u: usize, v: usize, len_v: usize, d: usize) -> usize {
    u * pow(d, len_v) + v
}

/// Splits a word of length `n` into its prefix of length `k` and the remaining suffix.
pub fn split(idx: usize, k: usize, n: usize, d: usize) -> (usize, usize) {
    let m = pow(d, n - k);
    (idx / m, idx % m)
}

pub fn first_letter(idx: usize, n: usize, d: usize) -> usize {
    idx / pow(d, n - 1)
}

pub fn last_letter(idx: usize, d: usize) -> usize {
    idx % d
}

/// Cyclic rotation moving the first letter to the end.
pub fn rotate_left(idx: usize, n: usize, d: usize) -> usize {
    if n == 0 {
        return idx;
    }
    let (a, rest) = split(idx, 1, n, d);
    rest * d + a
}

/// Renders a word with generator names, separated by `*`; the empty word is `1`.
pub fn render(idx: usize, n: usize, names: &[String]) -> String {
    if n == 0 {
        return "1".to_string();
    }
    letters(idx, names.len(), n)
        .into_iter()
        .map(|a| names[a].as_str())
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_is_lexicographic() {
        let d = 3;
        let mut prev = None;
        for i in 0..pow(d, 3) {
            let w = letters(i, d, 3);
            assert_eq!(index(&w, d), i);
            if let Some(p) = prev {
                assert!(p < w);
            }
            prev = Some(w);
        }
    }

    #[test]
    fn split_concat_rotate() {
        let d = 4;
        let w = index(&[3, 1, 2, 0], d);
        let (u, v) = split(w, 1, 4, d);
        assert_eq!((u, v), (3, index(&[1, 2, 0], d)));
        assert_eq!(concat(u, v, 3, d), w);
        assert_eq!(rotate_left(w, 4, d), index(&[1, 2, 0, 3], d));
        assert_eq!(first_letter(w, 4, d), 3);
        assert_eq!(last_letter(w, d), 0);
    }

    #[test]
    fn capacity_guard() {
        assert_eq!(word_count(10, 6).unwrap(), 1_000_000);
        assert!(word_count(10, 7).is_err());
        assert_eq!(word_count(0, 0).unwrap(), 1);
    }
}
