//! Event-list text format, one event per line:
//!
//! ```text
//! # comment
//! dot arc=3 sign=+
//! saddle arcs=3,7
//! death circle-of-arc=5
//! birth arc=9
//! ```
//!
//! `sign` is `+`, `-`, `none` or `auto` (checkerboard sign on the current diagram); a dot
//! without `sign` is unsigned. `birth` without `arc` takes the next unused label.

use anyhow::{anyhow, bail, Context, Result};
use leekh_core::cobordism::{DotSign, ElementaryEvent};
use leekh_core::diagram::{checkerboard, default_outer_face, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventLine {
    Fixed(ElementaryEvent),
    /// Dot whose sign comes from the coloring of the diagram it acts on.
    ColoredDot(u32),
}

impl EventLine {
    /// The event on `d`, with `outer` overriding the default unbounded face.
    pub fn resolve(&self, d: &LinkDiagram, outer: Option<usize>) -> Result<ElementaryEvent> {
        match *self {
            EventLine::Fixed(e) => Ok(e),
            EventLine::ColoredDot(arc) => {
                let col = checkerboard(d, outer.unwrap_or_else(|| default_outer_face(d)))?;
                Ok(ElementaryEvent::colored_dot(&col, arc)?)
            }
        }
    }
}

pub fn parse_events(text: &str) -> Result<Vec<EventLine>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_line(line).with_context(|| format!("line {}: `{}`", n + 1, raw.trim()))?);
    }
    Ok(out)
}

fn parse_line(line: &str) -> Result<EventLine> {
    let mut words = line.split_whitespace();
    let verb = words.next().expect("line is not empty");
    let mut fields = Vec::new();
    for w in words {
        let (k, v) = w.split_once('=').ok_or_else(|| anyhow!("expected key=value, got `{}`", w))?;
        fields.push((k, v));
    }
    let get = |key: &str| fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    let arc = |v: &str| v.parse::<u32>().map_err(|_| anyhow!("bad arc label `{}`", v));
    let known: &[&str] = match verb {
        "dot" => &["arc", "sign"],
        "saddle" => &["arcs"],
        "death" => &["circle-of-arc", "arc"],
        "birth" => &["arc"],
        _ => bail!("unknown event `{}`", verb),
    };
    if let Some((k, _)) = fields.iter().find(|(k, _)| !known.contains(k)) {
        bail!("unknown field `{}` for `{}`", k, verb);
    }
    Ok(match verb {
        "dot" => {
            let a = arc(get("arc").ok_or_else(|| anyhow!("dot needs arc="))?)?;
            let sign = match get("sign") {
                None | Some("none") => DotSign::Unsigned,
                Some("+") | Some("+1") => DotSign::Plus,
                Some("-") | Some("-1") => DotSign::Minus,
                Some("auto") => return Ok(EventLine::ColoredDot(a)),
                Some(s) => bail!("bad sign `{}`", s),
            };
            EventLine::Fixed(ElementaryEvent::Dot { arc: a, sign })
        }
        "saddle" => {
            let v = get("arcs").ok_or_else(|| anyhow!("saddle needs arcs=P,Q"))?;
            let (p, q) = v.split_once(',').ok_or_else(|| anyhow!("saddle needs arcs=P,Q"))?;
            EventLine::Fixed(ElementaryEvent::Saddle { p: arc(p)?, q: arc(q)? })
        }
        "death" => {
            let v = get("circle-of-arc").or(get("arc")).ok_or_else(|| anyhow!("death needs circle-of-arc="))?;
            EventLine::Fixed(ElementaryEvent::Death { arc: arc(v)? })
        }
        _ => EventLine::Fixed(ElementaryEvent::Birth { arc: get("arc").map(arc).transpose()? }),
    })
}
