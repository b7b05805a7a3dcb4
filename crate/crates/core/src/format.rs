// SPDX-License-Identifier: Apache-2.0

//! Text formats for Boolean functions.
//!
//! Truth table (`.bft`):
//!
//! ```text
//! 2
//! 0001
//! ```
//!
//! Line 1 is `n` in decimal; line 2 holds `2^n` characters, character `i`
//! being `f` at the point whose coordinate `j` is bit `j - 1` of `i`.
//!
//! Support list:
//!
//! ```text
//! supp 2
//! 3
//! ```
//!
//! One decimal mask per line after the header.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::function::{check_dimension, BooleanFunction};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with their 1-based line numbers, trailing `\r` removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_dimension(line: usize, s: &str) -> Result<usize> {
    let n = s
        .trim()
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a decimal dimension, got {s:?}")))?;
    check_dimension(n).map_err(|e| parse_err(line, e.to_string()))?;
    Ok(n)
}

pub fn to_bft(f: &BooleanFunction) -> String {
    let mut out = String::with_capacity(f.table().len() + 8);
    let _ = writeln!(out, "{}", f.n());
    for b in f.table().iter() {
        out.push(if b { '1' } else { '0' });
    }
    out.push('\n');
    out
}

pub fn parse_bft(text: &str) -> Result<BooleanFunction> {
    let mut lines = content_lines(text);
    let (l1, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n = parse_dimension(l1, header)?;
    let (l2, body) = lines
        .next()
        .ok_or_else(|| parse_err(l1 + 1, "missing truth-table line"))?;
    let body = body.trim_start();
    let expected = 1usize << n;
    if body.len() != expected {
        return Err(parse_err(
            l2,
            format!(
                "truth table has {} characters, expected 2^{n} = {expected}",
                body.len()
            ),
        ));
    }
    let mut bad = None;
    let f = BooleanFunction::from_fn(n, |i| match body.as_bytes()[i as usize] {
        b'0' => false,
        b'1' => true,
        c => {
            bad.get_or_insert((i, c as char));
            false
        }
    })?;
    if let Some((i, c)) = bad {
        return Err(parse_err(
            l2,
            format!("column {}: expected '0' or '1', got {c:?}", i + 1),
        ));
    }
    if let Some((l, _)) = lines.next() {
        return Err(parse_err(l, "unexpected trailing content"));
    }
    Ok(f)
}

pub fn to_support_text(f: &BooleanFunction) -> String {
    let mut out = format!("supp {}\n", f.n());
    for m in f.table().iter_ones() {
        let _ = writeln!(out, "{m}");
    }
    out
}

pub fn parse_support(text: &str) -> Result<BooleanFunction> {
    let mut lines = content_lines(text);
    let (l1, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n = header
        .trim()
        .strip_prefix("supp")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(l1, "expected header \"supp <n>\""))
        .and_then(|rest| parse_dimension(l1, rest))?;
    let mut members = Vec::new();
    for (l, s) in lines {
        let m = s
            .trim()
            .parse::<u64>()
            .map_err(|_| parse_err(l, format!("expected a decimal mask, got {s:?}")))?;
        if m >= 1u64 << n {
            return Err(parse_err(
                l,
                format!("mask {m} is out of range for n = {n}"),
            ));
        }
        members.push(m);
    }
    BooleanFunction::from_support(n, &members)
}

/// The table as one hexadecimal integer whose bit `i` is `f(i)`, most
/// significant digit first, zero-padded to `max(1, 2^n / 4)` digits.
pub fn to_hex(f: &BooleanFunction) -> String {
    let words = f.table().words();
    if f.n() < 6 {
        let digits = ((1usize << f.n()) / 4).max(1);
        return format!("{:0digits$x}", words[0]);
    }
    words.iter().rev().map(|w| format!("{w:016x}")).collect()
}

/// Inverse of [`to_hex`].
pub fn parse_hex(n: usize, hex: &str) -> Result<BooleanFunction> {
    check_dimension(n)?;
    let hex = hex.trim();
    let bad = |msg: String| Error::InvalidArgument(msg);
    if n < 6 {
        let v = u64::from_str_radix(hex, 16).map_err(|e| bad(format!("bad hex {hex:?}: {e}")))?;
        if v >> (1u32 << n) != 0 {
            return Err(bad(format!("hex {hex:?} has more than 2^{n} bits")));
        }
        return BooleanFunction::from_u64(n, v);
    }
    let expected = (1usize << n) / 4;
    if hex.len() != expected || !hex.is_ascii() {
        return Err(bad(format!(
            "expected {expected} hex digits, got {}",
            hex.len()
        )));
    }
    let words = hex
        .as_bytes()
        .rchunks(16)
        .map(|c| {
            let s = std::str::from_utf8(c).expect("ascii");
            u64::from_str_radix(s, 16).map_err(|e| bad(format!("bad hex {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let table = crate::bits::BitTable::from_words(n, words).expect("word count matches n");
    BooleanFunction::from_table(table)
}

/// Parses either format, choosing by the first non-blank line.
pub fn parse_function(text: &str) -> Result<BooleanFunction> {
    match content_lines(text).next() {
        Some((_, l)) if l.trim_start().starts_with("supp") => parse_support(text),
        _ => parse_bft(text),
    }
}
