use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::{ArcId, LinkDiagram};
use crate::{Error, Result};

/// A side of an arc: `(arc, forward)`. The face of a dart is the one on its left.
pub type Dart = (ArcId, bool);

/// Faces of each connected piece of the diagram, traced from the PD rotation system.
#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Vec<Dart>>,
    face_of: BTreeMap<Dart, usize>,
    piece_of_face: Vec<usize>,
    piece_of_arc: BTreeMap<ArcId, usize>,
    pieces: usize,
}

impl Faces {
    pub fn face_of(&self, arc: ArcId, forward: bool) -> usize {
        self.face_of[&(arc, forward)]
    }

    pub fn piece_of_arc(&self, arc: ArcId) -> usize {
        self.piece_of_arc[&arc]
    }

    pub fn piece_count(&self) -> usize {
        self.pieces
    }
}

pub fn faces(d: &LinkDiagram) -> Faces {
    // pieces: crossings joined by arcs; each free circle alone
    let n = d.crossing_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in d.arcs() {
        if let Some((t, h)) = d.arc_ends(*a) {
            let (x, y) = (find(&mut parent, t.0), find(&mut parent, h.0));
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut piece_id = BTreeMap::new();
    let mut piece_of_arc = BTreeMap::new();
    for a in d.arcs() {
        let root = match d.arc_ends(*a) {
            Some((t, _)) => find(&mut parent, t.0),
            None => n + *a as usize,
        };
        let next = piece_id.len();
        let id = *piece_id.entry(root).or_insert(next);
        piece_of_arc.insert(*a, id);
    }

    let mut face_of: BTreeMap<Dart, usize> = BTreeMap::new();
    let mut out: Vec<Vec<Dart>> = Vec::new();
    let mut piece_of_face = Vec::new();
    for a in d.arcs() {
        for fwd in [true, false] {
            if face_of.contains_key(&(*a, fwd)) {
                continue;
            }
            let f = out.len();
            let mut cycle = Vec::new();
            let mut dart = (*a, fwd);
            loop {
                face_of.insert(dart, f);
                cycle.push(dart);
                dart = match next_dart(d, dart) {
                    Some(n) => n,
                    None => break,
                };
                if dart == (*a, fwd) {
                    break;
                }
            }
            out.push(cycle);
            piece_of_face.push(piece_of_arc[a]);
        }
    }
    Faces { faces: out, face_of, piece_of_face, piece_of_arc, pieces: piece_id.len() }
}

/// Next dart around the face on the left: arriving at slot `s`, leave by slot `s + 3`.
fn next_dart(d: &LinkDiagram, (a, fwd): Dart) -> Option<Dart> {
    let (tail, head) = d.arc_ends(a)?;
    let (c, s) = if fwd { head } else { tail };
    let t = (s + 3) % 4;
    let x = &d.crossings()[c];
    Some((x.arcs[t], !x.is_incoming(t)))
}

/// Default unbounded face: the face on the right of the smallest arc.
pub fn default_outer_face(d: &LinkDiagram) -> usize {
    faces(d).face_of(d.arcs()[0], false)
}

/// Checkerboard coloring with the unbounded region white, and the dot sign of every arc.
#[derive(Clone, Debug)]
pub struct RegionColoring {
    pub faces: Vec<Vec<Dart>>,
    pub unbounded: usize,
    /// Faces lying in the unbounded region, one per connected piece.
    pub outer: Vec<usize>,
    pub black: Vec<bool>,
    /// `+1` when the black region lies on the arc's left, i.e. the arc is oriented as the
    /// boundary of a black region.
    pub dot_sign: BTreeMap<ArcId, i8>,
}

impl RegionColoring {
    pub fn sign(&self, arc: ArcId) -> Option<i8> {
        self.dot_sign.get(&arc).copied()
    }
}

/// Euler check `V - E + F = 2` on every connected piece.
pub fn check_planar(d: &LinkDiagram, f: &Faces) -> Result<()> {
    for piece in 0..f.pieces {
        let v = d
            .crossings()
            .iter()
            .filter(|x| f.piece_of_arc[&x.arcs[0]] == piece)
            .count() as i64;
        let arcs: Vec<ArcId> = d.arcs().iter().copied().filter(|a| f.piece_of_arc[a] == piece).collect();
        if arcs.len() == 1 && d.is_loop(arcs[0]) {
            continue;
        }
        let e = arcs.len() as i64;
        let nf = f.piece_of_face.iter().filter(|p| **p == piece).count() as i64;
        if v - e + nf != 2 {
            return Err(Error::NonPlanar { euler: v - e + nf, expected: 2 });
        }
    }
    Ok(())
}

/// Free circles are taken counterclockwise, so their dot sign is `+1`.
pub fn checkerboard(d: &LinkDiagram, unbounded: usize) -> Result<RegionColoring> {
    let f = faces(d);
    if unbounded >= f.faces.len() {
        return Err(Error::FaceIndex(unbounded));
    }
    check_planar(d, &f)?;

    let mut outer = Vec::new();
    let mut color: Vec<Option<bool>> = alloc::vec![None; f.faces.len()];
    for piece in 0..f.pieces {
        let start = if f.piece_of_face[unbounded] == piece {
            unbounded
        } else {
            let a = *d.arcs().iter().find(|a| f.piece_of_arc[*a] == piece).expect("pieces are nonempty");
            f.face_of(a, false)
        };
        if d.is_loop(f.faces[start][0].0) && start != unbounded {
            let a = f.faces[start][0].0;
            color[f.face_of(a, true)] = Some(true);
            color[f.face_of(a, false)] = Some(false);
            outer.push(f.face_of(a, false));
            continue;
        }
        outer.push(start);
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let black = color[x].expect("queued faces are colored");
            for (a, fwd) in &f.faces[x] {
                let y = f.face_of(*a, !fwd);
                match color[y] {
                    None => {
                        color[y] = Some(!black);
                        queue.push_back(y);
                    }
                    Some(c) if c == black => {
                        return Err(Error::NonPlanar { euler: 0, expected: 2 });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let black: Vec<bool> = color.into_iter().map(|c| c.expect("every face is reached")).collect();
    let dot_sign = d
        .arcs()
        .iter()
        .map(|a| (*a, if black[f.face_of(*a, true)] { 1 } else { -1 }))
        .collect();
    Ok(RegionColoring { faces: f.faces, unbounded, outer, black, dot_sign })
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    #[test]
    fn round_unknot() {
        let d = parse_pd("").unwrap();
        let c = checkerboard(&d, default_outer_face(&d)).unwrap();
        assert_eq!(c.faces.len(), 2);
        assert_eq!(c.black.iter().filter(|b| **b).count(), 1);
        assert_eq!(c.sign(1), Some(1));
    }

    #[test]
    fn trefoil_has_five_faces() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let f = faces(&d);
        assert_eq!(f.faces.len(), 5);
        for k in 0..5 {
            let c = checkerboard(&d, k).unwrap();
            assert!(!c.black[k]);
        }
        assert_eq!(checkerboard(&d, 5).unwrap_err(), Error::FaceIndex(5));
    }

    #[test]
    fn kinks_are_planar() {
        for pd in ["X(1,1,2,2)", "X(1,2,2,3) X(3,4,4,1)"] {
            let d = parse_pd(pd).unwrap();
            assert!(checkerboard(&d, default_outer_face(&d)).is_ok(), "{}", pd);
        }
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // a consistent orientation whose rotation system has genus one
        let d = parse_pd("X[1,2,3,4] X[3,1,4,2]");
        if let Ok(d) = d {
            assert!(matches!(checkerboard(&d, 0), Err(Error::NonPlanar { .. })));
        }
    }
}
