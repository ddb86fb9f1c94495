//! Crossing-by-crossing build of the Lee complex over tangles, reducing after every crossing.
//!
//! The basepoint arc is cut open, so the diagram becomes a tangle whose two ports are the ends
//! of that arc. Objects are crossingless matchings of the current boundary points; closed
//! loops are removed at once by delooping, `O ≅ ∅{+1} ⊕ ∅{-1}`. A morphism between matchings
//! `S` and `T` is a combination of surfaces made of one disc per cycle of `S ∪ T̄`, each
//! carrying at most one dot, times a power of `T`. Composites are evaluated with neck cutting:
//! a connected surface with `b` boundary circles, `e` dots and genus `g` is
//! `Δ^(b)(X^e (2X)^g)` written on its boundary discs. Isomorphisms (identity cobordisms
//! between equal objects in equal degree) are cancelled by Gaussian elimination.
//!
//! At the end the boundary is the pair of ports, and a morphism from the arc to itself with a
//! dot and `T^t` is the coefficient `X^(1 + 2t)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Bigrading, GradedFreeComplex, Monomial};
use crate::diagram::LinkDiagram;
use crate::field::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Pairs `(a, b)` with `a < b`, sorted.
type Matching = Vec<(u32, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    mask: u64,
    t: u32,
    c: FieldElement,
}

/// Terms sorted by `(mask, t)`, all coefficients nonzero.
type Mor = Vec<Term>;

fn add_term(m: &mut Mor, mask: u64, t: u32, c: FieldElement) {
    match m.binary_search_by(|x| (x.mask, x.t).cmp(&(mask, t))) {
        Ok(k) => {
            let sum = &m[k].c + &c;
            if sum.is_zero() {
                m.remove(k);
            } else {
                m[k].c = sum;
            }
        }
        Err(k) => {
            if !c.is_zero() {
                m.insert(k, Term { mask, t, c });
            }
        }
    }
}

/// Cycles of `S ∪ T̄`, numbered by their smallest point.
struct Cycles {
    of: BTreeMap<u32, usize>,
    count: usize,
}

fn cycles(s: &Matching, t: &Matching) -> Cycles {
    let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
    for &(a, b) in s.iter().chain(t) {
        parent.entry(a).or_insert(a);
        parent.entry(b).or_insert(b);
    }
    fn root(p: &mut BTreeMap<u32, u32>, mut x: u32) -> u32 {
        while p[&x] != x {
            x = p[&x];
        }
        x
    }
    for &(a, b) in s.iter().chain(t) {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent.insert(ra.max(rb), ra.min(rb));
        }
    }
    let points: Vec<u32> = parent.keys().copied().collect();
    let mut number: BTreeMap<u32, usize> = BTreeMap::new();
    let mut of = BTreeMap::new();
    for p in points {
        let r = root(&mut parent, p);
        let n = number.len();
        let k = *number.entry(r).or_insert(n);
        of.insert(p, k);
    }
    Cycles { of, count: number.len() }
}

#[derive(Clone, Copy, Debug)]
enum Out {
    Cycle(usize),
    Src(usize),
    Tgt(usize),
}

struct Comp {
    left: u64,
    right: u64,
    genus: u32,
    outs: Vec<Out>,
}

/// A glued surface: left discs, right discs, the gluings between them and the boundary
/// circles of the result, grouped into connected components.
struct Shape {
    comps: Vec<Comp>,
}

impl Shape {
    fn build(nl: usize, nr: usize, gluings: &[(usize, usize)], outs: &[(Out, usize)]) -> Result<Shape> {
        if nl > 64 || nr > 64 {
            return Err(Error::ResourceLimit { size: nl.max(nr), cap: 64 });
        }
        let mut parent: Vec<usize> = (0..nl + nr).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in gluings {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            parent[ra] = rb;
        }
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comps: Vec<Comp> = Vec::new();
        let mut chi: Vec<i64> = Vec::new();
        for disc in 0..nl + nr {
            let r = root(&mut parent, disc);
            let k = *index.entry(r).or_insert_with(|| {
                comps.push(Comp { left: 0, right: 0, genus: 0, outs: Vec::new() });
                chi.push(0);
                comps.len() - 1
            });
            chi[k] += 1;
            if disc < nl {
                comps[k].left |= 1 << disc;
            } else {
                comps[k].right |= 1 << (disc - nl);
            }
        }
        for &(a, _) in gluings {
            chi[index[&root(&mut parent, a)]] -= 1;
        }
        for &(o, disc) in outs {
            comps[index[&root(&mut parent, disc)]].outs.push(o);
        }
        for (c, x) in comps.iter_mut().zip(chi) {
            let twice = 2 - x - c.outs.len() as i64;
            if twice < 0 || twice % 2 != 0 {
                return Err(Error::InvalidComplex("glued surface with impossible Euler characteristic".into()));
            }
            c.genus = (twice / 2) as u32;
        }
        Ok(Shape { comps })
    }

    /// Basis expansion of the glued surface, as `(cycle mask, T power, integer coefficient)`.
    /// Source loop `k` is capped according to its label `src` bit `k` (set = `X`), target loop
    /// `k` is projected onto its label.
    fn eval(&self, l: (u64, u32), r: (u64, u32), src: u64, tgt: u64) -> Vec<(u64, u32, i64)> {
        let mut acc: Vec<(u64, u32, i64)> = vec![(0, l.1 + r.1, 1)];
        for c in &self.comps {
            let e = (l.0 & c.left).count_ones() + (r.0 & c.right).count_ones() + c.genus;
            let b = c.outs.len() as u32;
            let mut forced = 0u32;
            let mut free: Vec<usize> = Vec::new();
            for o in &c.outs {
                match *o {
                    Out::Cycle(k) => free.push(k),
                    Out::Src(k) => forced += 1 - (src >> k & 1) as u32,
                    Out::Tgt(k) => forced += (tgt >> k & 1) as u32,
                }
            }
            let scale = 1i64 << c.genus;
            let mut options: Vec<(u64, u32)> = Vec::new();
            for sub in 0..1u64 << free.len() {
                let ones = forced + sub.count_ones();
                let room = (b + e) as i64 - 1 - ones as i64;
                if room < 0 || room % 2 != 0 {
                    continue;
                }
                let bits = free.iter().enumerate().filter(|(k, _)| sub >> k & 1 == 1).fold(0u64, |m, (_, &cy)| m | 1 << cy);
                options.push((bits, (room / 2) as u32));
            }
            if options.is_empty() {
                return Vec::new();
            }
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for &(m, t, x) in &acc {
                for &(bits, tp) in &options {
                    next.push((m | bits, t + tp, x * scale));
                }
            }
            acc = next;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug)]
struct Obj {
    m: usize,
    i: i32,
    j: i32,
}

struct TangleComplex {
    objs: Vec<Obj>,
    alive: Vec<bool>,
    out: Vec<BTreeMap<usize, Mor>>,
    inc: Vec<BTreeSet<usize>>,
}

impl TangleComplex {
    fn new(objs: Vec<Obj>) -> Self {
        let n = objs.len();
        TangleComplex {
            objs,
            alive: vec![true; n],
            out: (0..n).map(|_| BTreeMap::new()).collect(),
            inc: (0..n).map(|_| BTreeSet::new()).collect(),
        }
    }

    fn add(&mut self, g: usize, h: usize, mask: u64, t: u32, c: FieldElement) {
        let m = self.out[g].entry(h).or_default();
        add_term(m, mask, t, c);
        if m.is_empty() {
            self.out[g].remove(&h);
            self.inc[h].remove(&g);
        } else {
            self.inc[h].insert(g);
        }
    }

    fn remove(&mut self, g: usize) {
        self.alive[g] = false;
        for h in core::mem::take(&mut self.out[g]).into_keys() {
            self.inc[h].remove(&g);
        }
        for h in core::mem::take(&mut self.inc[g]) {
            self.out[h].remove(&g);
        }
    }
}

struct Scanner {
    field: FieldSpec,
    matchings: Vec<Matching>,
    ids: BTreeMap<Matching, usize>,
    cycles: BTreeMap<(usize, usize), Rc<Cycles>>,
    vertical: BTreeMap<(usize, usize, usize), Rc<Shape>>,
}

impl Scanner {
    fn intern(&mut self, m: Matching) -> usize {
        if let Some(&k) = self.ids.get(&m) {
            return k;
        }
        self.matchings.push(m.clone());
        self.ids.insert(m, self.matchings.len() - 1);
        self.matchings.len() - 1
    }

    fn cycles(&mut self, s: usize, t: usize) -> Rc<Cycles> {
        if let Some(c) = self.cycles.get(&(s, t)) {
            return c.clone();
        }
        let c = Rc::new(cycles(&self.matchings[s], &self.matchings[t]));
        self.cycles.insert((s, t), c.clone());
        c
    }

    /// Shape of `a ∘ b` for `b: S → M` and `a: M → T`.
    fn vertical(&mut self, s: usize, m: usize, t: usize) -> Result<Rc<Shape>> {
        if let Some(sh) = self.vertical.get(&(s, m, t)) {
            return Ok(sh.clone());
        }
        let (l, r, o) = (self.cycles(s, m), self.cycles(m, t), self.cycles(s, t));
        let gluings: Vec<(usize, usize)> =
            self.matchings[m].iter().map(|(p, _)| (l.of[p], l.count + r.of[p])).collect();
        let mut seen = vec![false; o.count];
        let mut outs = Vec::new();
        for (p, &k) in &o.of {
            if !seen[k] {
                seen[k] = true;
                outs.push((Out::Cycle(k), l.of[p]));
            }
        }
        let sh = Rc::new(Shape::build(l.count, r.count, &gluings, &outs)?);
        self.vertical.insert((s, m, t), sh.clone());
        Ok(sh)
    }

    /// `a ∘ b`.
    fn compose(&mut self, b: &Mor, a: &Mor, s: usize, m: usize, t: usize) -> Result<Mor> {
        let sh = self.vertical(s, m, t)?;
        let mut out = Mor::new();
        for x in b {
            for y in a {
                let c = &x.c * &y.c;
                for (mask, tp, k) in sh.eval((x.mask, x.t), (y.mask, y.t), 0, 0) {
                    add_term(&mut out, mask, tp, &c * &self.field.from_i64(k));
                }
            }
        }
        Ok(out)
    }

    /// Cancels every isomorphism.
    fn eliminate(&mut self, c: &mut TangleComplex) -> Result<()> {
        let mut queue: Vec<(usize, usize)> = Vec::new();
        for g in 0..c.objs.len() {
            for &h in c.out[g].keys() {
                queue.push((g, h));
            }
        }
        queue.reverse();
        while let Some((g, h)) = queue.pop() {
            if !c.alive[g] || !c.alive[h] {
                continue;
            }
            let Some(phi) = c.out[g].get(&h) else { continue };
            let (og, oh) = (c.objs[g], c.objs[h]);
            if og.m != oh.m || og.j != oh.j {
                continue;
            }
            let Some(unit) = phi.iter().find(|x| x.mask == 0 && x.t == 0) else { continue };
            let minus_inv = -unit.c.inv().expect("terms are nonzero");
            let ins: Vec<(usize, Mor)> =
                c.inc[h].iter().filter(|&&x| x != g).map(|&x| (x, c.out[x][&h].clone())).collect();
            let outs: Vec<(usize, Mor)> =
                c.out[g].iter().filter(|(&x, _)| x != h).map(|(&x, m)| (x, m.clone())).collect();
            for (g2, b) in &ins {
                for (h2, a) in &outs {
                    let comp = self.compose(b, a, c.objs[*g2].m, og.m, c.objs[*h2].m)?;
                    for term in comp {
                        c.add(*g2, *h2, term.mask, term.t, &term.c * &minus_inv);
                    }
                    if c.out[*g2].contains_key(h2) {
                        queue.push((*g2, *h2));
                    }
                }
            }
            c.remove(g);
            c.remove(h);
        }
        Ok(())
    }
}

/// Joins `m` and `x` along `glue`: the resulting matching on the unglued points and the
/// closed loops, each represented by its smallest point.
fn join(m: &Matching, x: &Matching, glue: &BTreeMap<u32, u32>) -> (Matching, Vec<u32>) {
    let mut partner: BTreeMap<u32, u32> = BTreeMap::new();
    for &(a, b) in m.iter().chain(x) {
        partner.insert(a, b);
        partner.insert(b, a);
    }
    let mut visited: BTreeSet<u32> = BTreeSet::new();
    let mut pairs = Matching::new();
    for &p in partner.keys() {
        if glue.contains_key(&p) || visited.contains(&p) {
            continue;
        }
        let mut cur = p;
        loop {
            visited.insert(cur);
            let q = partner[&cur];
            visited.insert(q);
            match glue.get(&q) {
                Some(&r) => cur = r,
                None => {
                    pairs.push((p.min(q), p.max(q)));
                    break;
                }
            }
        }
    }
    pairs.sort_unstable();
    let mut loops = Vec::new();
    for &p in partner.keys() {
        if visited.contains(&p) {
            continue;
        }
        loops.push(p);
        let mut cur = p;
        while visited.insert(cur) {
            let q = partner[&cur];
            visited.insert(q);
            cur = glue[&q];
        }
    }
    (pairs, loops)
}

/// One glued object: the matching after joining, and its loops.
struct Joined {
    m: usize,
    loops: Vec<u32>,
}

/// Shape of `φ ⊗ ψ` for `φ: M_g → M_h` on the old boundary and `ψ: x_s → x_t` on the crossing.
fn horizontal(
    sc: &mut Scanner,
    (mg, mh): (usize, usize),
    (xs, xt): (usize, usize),
    (jg, jh): (&Joined, &Joined),
    glue: &BTreeMap<u32, u32>,
) -> Result<Shape> {
    let l = sc.cycles(mg, mh);
    let r = sc.cycles(xs, xt);
    let disc = |p: u32| match l.of.get(&p) {
        Some(&k) => k,
        None => l.count + r.of[&p],
    };
    let gluings: Vec<(usize, usize)> = glue.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (disc(a), disc(b))).collect();

    let points: Vec<u32> = l.of.keys().chain(r.of.keys()).copied().collect();
    let pos: BTreeMap<u32, usize> = points.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let n = points.len();
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut join = |a: usize, b: usize| {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
    };
    for (side, ms) in [(0, [mg, xs]), (n, [mh, xt])] {
        for mm in ms {
            for &(a, b) in &sc.matchings[mm] {
                join(side + pos[&a], side + pos[&b]);
            }
        }
        for (a, b) in glue {
            join(side + pos[a], side + pos[b]);
        }
    }
    for &p in &points {
        if !glue.contains_key(&p) {
            join(pos[&p], n + pos[&p]);
        }
    }
    let o = sc.cycles(jg.m, jh.m);
    let mut outs = Vec::new();
    let mut seen = BTreeSet::new();
    for (&p, &k) in &o.of {
        if seen.insert(root(&mut parent, pos[&p])) {
            outs.push((Out::Cycle(k), disc(p)));
        }
    }
    for (k, &p) in jg.loops.iter().enumerate() {
        if seen.insert(root(&mut parent, pos[&p])) {
            outs.push((Out::Src(k), disc(p)));
        }
    }
    for (k, &p) in jh.loops.iter().enumerate() {
        if seen.insert(root(&mut parent, n + pos[&p])) {
            outs.push((Out::Tgt(k), disc(p)));
        }
    }
    Shape::build(l.count, r.count, &gluings, &outs)
}

/// Order in which crossings are added: each step takes the crossing with the most ends
/// already on the boundary.
fn crossing_order(ends: &[[u32; 4]], ports: (u32, u32)) -> Vec<usize> {
    let mut done = vec![false; ends.len()];
    let mut boundary: BTreeSet<u32> = BTreeSet::new();
    let mut order = Vec::with_capacity(ends.len());
    for _ in 0..ends.len() {
        let score = |k: usize| ends[k].iter().filter(|e| boundary.contains(&(**e ^ 1)) && **e >> 1 != ports.0 >> 1).count();
        let k = (0..ends.len()).filter(|k| !done[*k]).max_by_key(|&k| (score(k), core::cmp::Reverse(k))).expect("crossings remain");
        done[k] = true;
        order.push(k);
        for &e in &ends[k] {
            if !boundary.remove(&(e ^ 1)) || e >> 1 == ports.0 >> 1 {
                boundary.insert(e);
            }
        }
    }
    order
}

pub(super) fn build(d: &LinkDiagram, field: FieldSpec) -> Result<GradedFreeComplex> {
    field.validate()?;
    let idx = |a: u32| d.arc_index(a).expect("crossing arcs are indexed") as u32;
    let bp = idx(d.basepoint());
    let ports = (2 * bp, 2 * bp + 1);
    let ends: Vec<[u32; 4]> = d
        .crossings()
        .iter()
        .map(|c| {
            let mut e = [0u32; 4];
            for (s, slot) in e.iter_mut().enumerate() {
                *slot = 2 * idx(c.arcs[s]) + c.is_incoming(s) as u32;
            }
            e
        })
        .collect();

    let mut sc = Scanner {
        field,
        matchings: Vec::new(),
        ids: BTreeMap::new(),
        cycles: BTreeMap::new(),
        vertical: BTreeMap::new(),
    };
    let empty = sc.intern(Matching::new());
    let mut cx = TangleComplex::new(vec![Obj { m: empty, i: 0, j: 0 }]);
    let mut boundary: BTreeSet<u32> = BTreeSet::new();
    let one = field.one();
    let minus = field.from_i64(-1);

    for k in crossing_order(&ends, ports) {
        let [e0, e1, e2, e3] = ends[k];
        let mut glue: BTreeMap<u32, u32> = BTreeMap::new();
        for e in [e0, e1, e2, e3] {
            let f = e ^ 1;
            if e >> 1 != bp && (boundary.contains(&f) || ends[k].contains(&f)) {
                glue.insert(e, f);
                glue.insert(f, e);
            }
        }
        let sort = |(a, b): (u32, u32)| (a.min(b), a.max(b));
        let mut x0 = vec![sort((e0, e1)), sort((e2, e3))];
        let mut x1 = vec![sort((e0, e3)), sort((e1, e2))];
        x0.sort_unstable();
        x1.sort_unstable();
        let x = [sc.intern(x0), sc.intern(x1)];

        let alive: Vec<usize> = (0..cx.objs.len()).filter(|g| cx.alive[*g]).collect();
        let mut joined: BTreeMap<(usize, usize), (Joined, usize)> = BTreeMap::new();
        let mut objs = Vec::new();
        for &g in &alive {
            let o = cx.objs[g];
            for s in 0..2 {
                let (m, loops) = join(&sc.matchings[o.m].clone(), &sc.matchings[x[s]].clone(), &glue);
                let m = sc.intern(m);
                let start = objs.len();
                for lab in 0..1u64 << loops.len() {
                    let xs = lab.count_ones() as i32;
                    let j = o.j + s as i32 + loops.len() as i32 - 2 * xs;
                    objs.push(Obj { m, i: o.i + s as i32, j });
                }
                joined.insert((g, s), (Joined { m, loops }, start));
            }
        }
        let mut next = TangleComplex::new(objs);
        let mut shapes: BTreeMap<(usize, usize, usize, usize), Rc<Shape>> = BTreeMap::new();
        let mut shape = |sc: &mut Scanner, a: (usize, usize), b: (usize, usize), ja: &Joined, jb: &Joined| -> Result<Rc<Shape>> {
            let key = (a.0, a.1, b.0, b.1);
            if let Some(s) = shapes.get(&key) {
                return Ok(s.clone());
            }
            let s = Rc::new(horizontal(sc, a, b, (ja, jb), &glue)?);
            shapes.insert(key, s.clone());
            Ok(s)
        };
        let emit = |next: &mut TangleComplex, sh: &Shape, l: &Term, r: (u64, u32), from: (&Joined, usize), to: (&Joined, usize), sign: &FieldElement| {
            for src in 0..1u64 << from.0.loops.len() {
                for tgt in 0..1u64 << to.0.loops.len() {
                    for (mask, t, k) in sh.eval((l.mask, l.t), r, src, tgt) {
                        let c = &(&l.c * sign) * &field.from_i64(k);
                        next.add(from.1 + src as usize, to.1 + tgt as usize, mask, t, c);
                    }
                }
            }
        };
        for &g in &alive {
            let og = cx.objs[g];
            for (&h, phi) in &cx.out[g] {
                let oh = cx.objs[h];
                for s in 0..2 {
                    let (jg, sg) = &joined[&(g, s)];
                    let (jh, sh_) = &joined[&(h, s)];
                    let sh = shape(&mut sc, (og.m, oh.m), (x[s], x[s]), jg, jh)?;
                    for term in phi {
                        emit(&mut next, &sh, term, (0, 0), (jg, *sg), (jh, *sh_), &one);
                    }
                }
            }
            let (j0, s0) = &joined[&(g, 0)];
            let (j1, s1) = &joined[&(g, 1)];
            let sh = shape(&mut sc, (og.m, og.m), (x[0], x[1]), j0, j1)?;
            let sign = if og.i % 2 == 0 { &one } else { &minus };
            let id = Term { mask: 0, t: 0, c: one.clone() };
            emit(&mut next, &sh, &id, (0, 0), (j0, *s0), (j1, *s1), sign);
        }
        sc.eliminate(&mut next)?;
        cx = next;
        for e in [e0, e1, e2, e3] {
            if !glue.contains_key(&e) {
                boundary.insert(e);
            }
        }
        for e in glue.keys() {
            boundary.remove(e);
        }
    }

    // Free circles other than the basepoint each contribute a factor V.
    let free = d.loops().iter().filter(|a| **a != d.basepoint()).count();
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let alive: Vec<usize> = (0..cx.objs.len()).filter(|g| cx.alive[*g]).collect();
    let position: BTreeMap<usize, usize> = alive.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    let copies = 1usize << free;
    let mut gradings = Vec::with_capacity(alive.len() * copies);
    for lab in 0..copies {
        let xs = lab.count_ones() as i32;
        for &g in &alive {
            let o = cx.objs[g];
            gradings.push(Bigrading::new(o.i - nm, o.j + np - 2 * nm + 1 + free as i32 - 2 * xs));
        }
    }
    let mut entries = Vec::new();
    for &g in &alive {
        for (h, phi) in &cx.out[g] {
            for term in phi {
                let power = term.mask as u32 + 2 * term.t;
                for lab in 0..copies {
                    let base = lab * alive.len();
                    entries.push((base + position[&g], base + position[h], Monomial::new(term.c.clone(), power)));
                }
            }
        }
    }
    GradedFreeComplex::new(field, gradings, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{decompose_homology, gaussian_reduce};
    use crate::diagram::{connect_sum_pd, mirror, parse_pd};
    use crate::khovanov::LeeComplex;

    fn both(pd: &str) {
        let d = parse_pd(pd).unwrap();
        for d in [d.clone(), mirror(&d)] {
            for &a in d.arcs() {
                let d = d.with_basepoint(a).unwrap();
                let scan = build(&d, FieldSpec::Rational).unwrap();
                let cube = LeeComplex::build(&d, FieldSpec::Rational).unwrap().into_complex();
                assert_eq!(
                    decompose_homology(&gaussian_reduce(&scan)),
                    decompose_homology(&gaussian_reduce(&cube)),
                    "{} bp={}",
                    pd,
                    a
                );
            }
        }
    }

    #[test]
    fn unknots() {
        both("");
        both("X[1,1,2,2]");
        both("X[1,2,2,1]");
        both("X[1,1,2,2] O(3)");
    }

    #[test]
    fn knots_and_links() {
        both("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        both("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
        both("X[4,1,3,2] X[2,3,1,4]");
        both("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O(7)");
    }

    #[test]
    fn connect_sum() {
        let t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let d = connect_sum_pd(&t, &mirror(&t));
        let scan = build(&d, FieldSpec::Prime(3)).unwrap();
        let cube = LeeComplex::build(&d, FieldSpec::Prime(3)).unwrap().into_complex();
        assert_eq!(decompose_homology(&gaussian_reduce(&scan)), decompose_homology(&gaussian_reduce(&cube)));
    }
}
