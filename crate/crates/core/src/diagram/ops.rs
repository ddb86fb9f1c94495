use alloc::format;
use alloc::vec::Vec;

use super::faces::faces;
use super::{ArcId, Crossing, LinkDiagram};
use crate::{Error, Result};

/// Switches every crossing. Orientations, arc labels and the basepoint are unchanged.
pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    let crossings = d
        .crossings
        .iter()
        .map(|c| {
            let [a, b, cc, dd] = c.arcs;
            if c.sign > 0 {
                Crossing { arcs: [dd, a, b, cc], sign: -1 }
            } else {
                Crossing { arcs: [b, cc, dd, a], sign: 1 }
            }
        })
        .collect();
    LinkDiagram::from_oriented(crossings, d.loops.clone(), Some(d.basepoint)).expect("mirror preserves orientation")
}

/// Connected sum at the basepoint arcs. Arcs of `b` are relabeled above those of `a`; the
/// result keeps `a`'s basepoint.
pub fn connect_sum_pd(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    let offset = a.max_arc();
    let mut crossings = a.crossings.clone();
    crossings.extend(b.crossings.iter().map(|c| Crossing { arcs: c.arcs.map(|x| x + offset), sign: c.sign }));
    let mut loops = a.loops.clone();
    loops.extend(b.loops.iter().map(|x| x + offset));
    let joined = LinkDiagram::from_oriented(crossings, loops, Some(a.basepoint)).expect("disjoint union is valid");
    splice(&joined, a.basepoint, b.basepoint + offset).expect("splicing distinct arcs is valid").diagram
}

/// Result of a saddle: the new diagram and the labels of the two strands in it.
#[derive(Clone, Debug)]
pub struct SaddleOutcome {
    pub diagram: LinkDiagram,
    pub strands: (ArcId, ArcId),
}

/// Oriented saddle between arcs `p` and `q`, which must run antiparallel along a common face.
/// With `p == q` the saddle splits a small circle off the arc.
pub fn saddle(d: &LinkDiagram, p: ArcId, q: ArcId) -> Result<SaddleOutcome> {
    for a in [p, q] {
        if d.arc_index(a).is_none() {
            return Err(Error::InvalidSite(format!("no arc {}", a)));
        }
    }
    if p != q && !d.is_loop(p) && !d.is_loop(q) && !share_face(d, p, q) {
        return Err(Error::InvalidSite(format!("arcs {} and {} do not share a face coherently", p, q)));
    }
    splice(d, p, q)
}

fn share_face(d: &LinkDiagram, p: ArcId, q: ArcId) -> bool {
    let f = faces(d);
    if f.piece_of_arc(p) != f.piece_of_arc(q) {
        return true;
    }
    f.face_of(p, true) == f.face_of(q, true) || f.face_of(p, false) == f.face_of(q, false)
}

fn splice(d: &LinkDiagram, p: ArcId, q: ArcId) -> Result<SaddleOutcome> {
    let mut crossings = d.crossings.clone();
    let mut loops = d.loops.clone();
    let mut basepoint = d.basepoint;
    let fresh = d.max_arc() + 1;
    let strands;
    match (d.arc_ends(p), d.arc_ends(q)) {
        (Some((_, hp)), Some((_, hq))) if p != q => {
            crossings[hq.0].arcs[hq.1] = p;
            crossings[hp.0].arcs[hp.1] = q;
            strands = (p, q);
        }
        _ if p == q => {
            loops.push(fresh);
            strands = (p, fresh);
        }
        (_, None) => {
            loops.retain(|x| *x != q);
            if basepoint == q {
                basepoint = p;
            }
            strands = (p, p);
        }
        (None, Some(_)) => {
            loops.retain(|x| *x != p);
            if basepoint == p {
                basepoint = q;
            }
            strands = (q, q);
        }
        _ => unreachable!(),
    }
    let diagram = LinkDiagram::from_oriented(crossings, loops, Some(basepoint))?;
    Ok(SaddleOutcome { diagram, strands })
}

/// Adds a free circle; returns the new diagram and the circle's arc label.
pub fn birth(d: &LinkDiagram) -> (LinkDiagram, ArcId) {
    let fresh = d.max_arc() + 1;
    let mut loops = d.loops.clone();
    loops.push(fresh);
    let out = LinkDiagram::from_oriented(d.crossings.clone(), loops, Some(d.basepoint)).expect("birth is valid");
    (out, fresh)
}

/// Adds a free circle labeled `a`, which must be unused.
pub fn birth_at(d: &LinkDiagram, a: ArcId) -> Result<LinkDiagram> {
    if a == 0 || d.arc_index(a).is_some() {
        return Err(Error::InvalidSite(format!("arc {} is already in use", a)));
    }
    let mut loops = d.loops.clone();
    loops.push(a);
    LinkDiagram::from_oriented(d.crossings.clone(), loops, Some(d.basepoint))
}

/// Removes the free circle `a`, which must not carry the basepoint.
pub fn death(d: &LinkDiagram, a: ArcId) -> Result<LinkDiagram> {
    if !d.is_loop(a) {
        return Err(Error::InvalidSite(format!("arc {} is not a free circle", a)));
    }
    if a == d.basepoint {
        return Err(Error::InvalidSite(format!("circle {} carries the basepoint", a)));
    }
    let loops: Vec<ArcId> = d.loops.iter().copied().filter(|x| *x != a).collect();
    LinkDiagram::from_oriented(d.crossings.clone(), loops, Some(d.basepoint))
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn mirror_is_involution_and_negates_signs() {
        let d = parse_pd(TREFOIL).unwrap();
        let m = mirror(&d);
        assert!(d.crossings().iter().all(|c| c.sign < 0));
        assert!(m.crossings().iter().all(|c| c.sign > 0));
        assert_eq!(mirror(&m), d);
        let u = parse_pd("").unwrap();
        assert_eq!(mirror(&u), u);
    }

    #[test]
    fn connect_sum_counts() {
        let t = parse_pd(TREFOIL).unwrap();
        let s = connect_sum_pd(&t, &t);
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.components().len(), 1);
        let u = parse_pd("").unwrap();
        let uu = connect_sum_pd(&u, &u);
        assert_eq!(uu.crossing_count(), 0);
        assert_eq!(uu.components().len(), 1);
        assert_eq!(connect_sum_pd(&t, &u).crossing_count(), 3);
        assert_eq!(connect_sum_pd(&u, &t).components().len(), 1);
    }

    #[test]
    fn saddle_split_and_merge() {
        let u = parse_pd("").unwrap();
        let split = saddle(&u, 1, 1).unwrap();
        assert_eq!(split.diagram.components().len(), 2);
        let merged = saddle(&split.diagram, split.strands.0, split.strands.1).unwrap();
        assert_eq!(merged.diagram.components().len(), 1);
    }

    #[test]
    fn birth_death() {
        let t = parse_pd(TREFOIL).unwrap();
        let (b, v) = birth(&t);
        assert_eq!(b.components().len(), 2);
        assert_eq!(death(&b, v).unwrap(), t);
        assert!(death(&b, 1).is_err());
        assert_eq!(birth_at(&t, v).unwrap(), b);
        assert!(birth_at(&t, 3).is_err());
    }
}
