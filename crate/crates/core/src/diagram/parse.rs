use alloc::format;
use alloc::vec::Vec;

use super::{ArcId, LinkDiagram};
use crate::{Error, Result};

/// Parses PD text: `X[a,b,c,d]` or `X(a,b,c,d)` tuples, free circles `O(a)`, and an optional
/// `bp=<arc>`, separated by whitespace or commas, optionally wrapped in `PD[...]`. Empty text
/// is the round unknot `O(1)`. Codes whose rotation system is not planar are rejected.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix("PD") {
        let rest = rest.trim_start();
        let close = match rest.chars().next() {
            Some('[') => ']',
            Some('(') => ')',
            _ => return Err(Error::MalformedPd("expected '[' after PD".into())),
        };
        let inner = rest[1..].trim_end();
        s = inner
            .strip_suffix(close)
            .ok_or_else(|| Error::MalformedPd(format!("unterminated PD wrapper, expected '{}'", close)))?;
    }

    let mut tuples: Vec<[ArcId; 4]> = Vec::new();
    let mut loops: Vec<ArcId> = Vec::new();
    let mut basepoint = None;
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() || c == b',' {
            pos += 1;
            continue;
        }
        if s[pos..].starts_with("bp=") {
            pos += 3;
            let (n, next) = number(s, pos)?;
            if basepoint.replace(n).is_some() {
                return Err(Error::MalformedPd("basepoint given twice".into()));
            }
            pos = next;
            continue;
        }
        if c == b'X' || c == b'O' {
            let (items, next) = tuple(s, pos + 1)?;
            match (c, items.len()) {
                (b'X', 4) => tuples.push([items[0], items[1], items[2], items[3]]),
                (b'O', 1) => loops.push(items[0]),
                _ => {
                    return Err(Error::MalformedPd(format!(
                        "{} takes {} entries, got {}",
                        c as char,
                        if c == b'X' { 4 } else { 1 },
                        items.len()
                    )))
                }
            }
            pos = next;
            continue;
        }
        return Err(Error::MalformedPd(format!("unexpected '{}' at offset {}", c as char, pos)));
    }
    if tuples.is_empty() && loops.is_empty() {
        loops.push(1);
    }
    let d = LinkDiagram::from_pd(&tuples, &loops, basepoint)?;
    super::check_planar(&d, &super::faces(&d))?;
    Ok(d)
}

fn number(s: &str, start: usize) -> Result<(ArcId, usize)> {
    let digits = s[start..].bytes().take_while(|b| b.is_ascii_digit()).count();
    if digits == 0 {
        return Err(Error::MalformedPd(format!("expected a number at offset {}", start)));
    }
    let n: ArcId = s[start..start + digits]
        .parse()
        .map_err(|_| Error::MalformedPd(format!("arc label out of range at offset {}", start)))?;
    if n == 0 {
        return Err(Error::MalformedPd("arc labels must be positive".into()));
    }
    Ok((n, start + digits))
}

fn tuple(s: &str, start: usize) -> Result<(Vec<ArcId>, usize)> {
    let bytes = s.as_bytes();
    let close = match bytes.get(start) {
        Some(b'[') => b']',
        Some(b'(') => b')',
        _ => return Err(Error::MalformedPd(format!("expected '[' or '(' at offset {}", start))),
    };
    let mut pos = start + 1;
    let mut items = Vec::new();
    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let (n, next) = number(s, pos)?;
        items.push(n);
        pos = next;
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b) if *b == close => return Ok((items, pos + 1)),
            _ => return Err(Error::MalformedPd(format!("malformed tuple at offset {}", pos))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_unknot() {
        let d = parse_pd("").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.basepoint(), 1);
    }

    #[test]
    fn accepts_wrapper_and_round_brackets() {
        let a = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        let b = parse_pd("X(1, 4, 2, 5) X(3,6,4,1)\nX(5,2,6,3)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn basepoint_default_and_explicit() {
        assert_eq!(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap().basepoint(), 1);
        assert_eq!(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] bp=5").unwrap().basepoint(), 5);
        assert_eq!(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] bp=9").unwrap_err(), Error::Basepoint(9));
    }

    #[test]
    fn malformed() {
        for bad in ["X[1,2,3]", "Y[1,2,3,4]", "X[1,2,3,4", "X[1,2,,3,4]", "X[0,0,1,1]", "PD[X[1,1,2,2]"] {
            assert!(matches!(parse_pd(bad), Err(Error::MalformedPd(_))), "{}", bad);
        }
    }

    #[test]
    fn arc_used_once() {
        let err = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]").unwrap_err();
        assert_eq!(err, Error::ArcMultiplicity { arc: 3, count: 1 });
    }
}
