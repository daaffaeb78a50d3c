//! Bounded diagrams on k labeled oriented segments: the independent oracle
//! side.  Legs are attached at positions along segments; internal structure
//! is a forest of trivalent trees (diagrams with internal loops vanish in the
//! concordance quotient, so they are never represented).  Relations: STU
//! (with the loop-kill fusion case folded in), 1T, and the cyclic relation.

use crate::diagram::{Forest, Vert};
use crate::lincomb::LinComb;
use crate::relations::{RelationKind, RelationRow, RelationSystem};
use crate::{rat, Error, Rational, Result};
use itertools::Itertools;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BVert {
    /// Univalent vertex on a skeleton segment; its position is given by the
    /// segment's leg list.
    Leg { seg: usize, nbr: usize },
    /// Trivalent internal vertex; `nbrs` in cyclic order, reversal flips the
    /// orientation sign.
    Internal { nbrs: [usize; 3] },
}

impl BVert {
    pub fn is_leg(&self) -> bool {
        matches!(self, BVert::Leg { .. })
    }

    fn replace_nbr(&mut self, old: usize, new: usize) {
        match self {
            BVert::Leg { nbr, .. } => {
                debug_assert_eq!(*nbr, old);
                *nbr = new;
            }
            BVert::Internal { nbrs } => {
                let i = nbrs.iter().position(|&n| n == old).expect("old neighbor");
                nbrs[i] = new;
            }
        }
    }
}

/// A diagram on `k` segments.  `segments[s]` lists the leg vertices along
/// segment s in skeleton order.
#[derive(Clone, Debug)]
pub struct BoundedDiagram {
    pub k: usize,
    pub verts: Vec<BVert>,
    pub segments: Vec<Vec<usize>>,
}

impl BoundedDiagram {
    pub fn empty(k: usize) -> BoundedDiagram {
        BoundedDiagram { k, verts: Vec::new(), segments: vec![Vec::new(); k] }
    }

    pub fn n_legs(&self) -> usize {
        self.verts.iter().filter(|v| v.is_leg()).count()
    }

    pub fn degree(&self) -> u32 {
        (self.verts.len() / 2) as u32
    }

    pub fn validate(&self) -> Result<()> {
        if self.segments.len() != self.k {
            return Err(Error::Structural("segment count != k".into()));
        }
        let mut seen_leg = vec![false; self.verts.len()];
        for (s, list) in self.segments.iter().enumerate() {
            for &v in list {
                match self.verts.get(v) {
                    Some(BVert::Leg { seg, .. }) if *seg == s => {}
                    _ => return Err(Error::Structural(format!("vertex {v} is not a leg of segment {s}"))),
                }
                if seen_leg[v] {
                    return Err(Error::Structural(format!("leg {v} listed twice")));
                }
                seen_leg[v] = true;
            }
        }
        for (v, vert) in self.verts.iter().enumerate() {
            let nbrs: Vec<usize> = match vert {
                BVert::Leg { nbr, .. } => {
                    if !seen_leg[v] {
                        return Err(Error::Structural(format!("leg {v} missing from its segment")));
                    }
                    vec![*nbr]
                }
                BVert::Internal { nbrs } => nbrs.to_vec(),
            };
            for n in nbrs {
                let ok = match self.verts.get(n) {
                    Some(BVert::Leg { nbr, .. }) => *nbr == v,
                    Some(BVert::Internal { nbrs }) => nbrs.contains(&v),
                    None => false,
                };
                if !ok {
                    return Err(Error::Structural(format!("asymmetric edge {v}-{n}")));
                }
            }
        }
        // internal components must be trees: per component, edges = verts - 1
        for comp in self.component_list() {
            let mut half_edges = 0usize;
            for &v in &comp {
                half_edges += match &self.verts[v] {
                    BVert::Leg { .. } => 1,
                    BVert::Internal { .. } => 3,
                };
            }
            if half_edges / 2 != comp.len() - 1 {
                return Err(Error::Structural("internal component contains a cycle".into()));
            }
        }
        Ok(())
    }

    /// (segment, position) of every leg.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.verts.len()];
        for (s, list) in self.segments.iter().enumerate() {
            for (p, &v) in list.iter().enumerate() {
                pos[v] = (s, p);
            }
        }
        pos
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            match &self.verts[v] {
                BVert::Leg { nbr, .. } => stack.push(*nbr),
                BVert::Internal { nbrs } => stack.extend(nbrs.iter().copied()),
            }
        }
        seen.into_iter().collect()
    }

    fn component_list(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.verts.len()];
        for v in 0..self.verts.len() {
            if seen[v] {
                continue;
            }
            let comp = self.component_of(v);
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Canonical code and the orientation sign of this representative
    /// relative to the canonical one.  Leg labels are all distinct, so the
    /// sign is always well defined (no AS-zero on this side; diagrams with
    /// internal loops are excluded at construction instead).
    pub fn canonical(&self) -> (String, i8) {
        let pos = self.positions();
        let mut codes = Vec::new();
        let mut parity = 0u32;
        for comp in self.component_list() {
            let root = *comp
                .iter()
                .filter(|&&v| self.verts[v].is_leg())
                .min_by_key(|&&v| pos[v])
                .expect("component has a leg");
            let (s, p) = pos[root];
            let nbr = match &self.verts[root] {
                BVert::Leg { nbr, .. } => *nbr,
                _ => unreachable!(),
            };
            let (sub, par) = self.ser(root, nbr, &pos);
            codes.push(format!("{s}.{p}>{sub}"));
            parity += par;
        }
        codes.sort();
        let sign = if parity % 2 == 0 { 1 } else { -1 };
        (format!("k{}|{}", self.k, codes.join(",")), sign)
    }

    fn ser(&self, from: usize, v: usize, pos: &[(usize, usize)]) -> (String, u32) {
        match &self.verts[v] {
            BVert::Leg { .. } => {
                let (s, p) = pos[v];
                (format!("{s}.{p}"), 0)
            }
            BVert::Internal { nbrs } => {
                let i = nbrs.iter().position(|&n| n == from).expect("incoming edge");
                let a = nbrs[(i + 1) % 3];
                let b = nbrs[(i + 2) % 3];
                let (sa, pa) = self.ser(v, a, pos);
                let (sb, pb) = self.ser(v, b, pos);
                debug_assert_ne!(sa, sb);
                if sa < sb {
                    (format!("({sa},{sb})"), pa + pb)
                } else {
                    (format!("({sb},{sa})"), pa + pb + 1)
                }
            }
        }
    }

    /// STU fusion at adjacent legs p and p+1 of a segment: join their edges
    /// at a new internal vertex attached to the skeleton by one leg.  `None`
    /// if the legs lie in the same internal component (the fused diagram
    /// would contain a loop, hence vanishes).
    pub fn fuse(&self, seg: usize, p: usize) -> Option<BoundedDiagram> {
        let x = self.segments[seg][p];
        let y = self.segments[seg][p + 1];
        if self.component_of(x).contains(&y) {
            return None;
        }
        let mut d = self.clone();
        let nx = match &d.verts[x] {
            BVert::Leg { nbr, .. } => *nbr,
            _ => unreachable!(),
        };
        let ny = match &d.verts[y] {
            BVert::Leg { nbr, .. } => *nbr,
            _ => unreachable!(),
        };
        // reuse y's slot for the new internal vertex, cyclic order
        // (skeleton edge, toward the old leg at p, toward the old leg at p+1)
        d.verts[y] = BVert::Internal { nbrs: [x, nx, ny] };
        d.verts[x] = BVert::Leg { seg, nbr: y };
        d.verts[nx].replace_nbr(x, y);
        d.segments[seg].remove(p + 1);
        Some(d)
    }

    pub fn swap_legs(&self, seg: usize, p: usize) -> BoundedDiagram {
        let mut d = self.clone();
        d.segments[seg].swap(p, p + 1);
        d
    }

    pub fn cyclic_shift(&self, seg: usize) -> BoundedDiagram {
        let mut d = self.clone();
        if let Some(last) = d.segments[seg].pop() {
            d.segments[seg].insert(0, last);
        }
        d
    }

    /// True if some component is a single chord whose two legs sit at
    /// adjacent positions of one segment.
    pub fn has_isolated_chord(&self) -> bool {
        let pos = self.positions();
        for (v, vert) in self.verts.iter().enumerate() {
            if let BVert::Leg { seg, nbr } = vert {
                if let BVert::Leg { seg: seg2, .. } = &self.verts[*nbr] {
                    if seg == seg2 && pos[v].1 + 1 == pos[*nbr].1 {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Parse a canonical code back into the canonical representative (sign +1).
pub fn parse_bounded(code: &str) -> Result<BoundedDiagram> {
    let rest = code
        .strip_prefix('k')
        .ok_or_else(|| Error::Parse(format!("missing k prefix in `{code}`")))?;
    let (kstr, comps) = rest
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("missing `|` in `{code}`")))?;
    let k: usize = kstr.parse().map_err(|_| Error::Parse(format!("bad k in `{code}`")))?;
    let mut d = BoundedDiagram::empty(k);
    let mut legs: Vec<(usize, usize, usize)> = Vec::new(); // (seg, pos, vert)
    if !comps.is_empty() {
        for comp in split_top_level(comps) {
            let (root, sub) = comp
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("component `{comp}` missing `>`")))?;
            let (rs, rp) = parse_slot(root)?;
            if rs >= k {
                return Err(Error::Parse(format!("segment {rs} out of range")));
            }
            let rv = d.verts.len();
            d.verts.push(BVert::Leg { seg: rs, nbr: usize::MAX });
            legs.push((rs, rp, rv));
            let mut chars = sub.chars().peekable();
            let child = parse_sub(&mut chars, rv, &mut d.verts, &mut legs, k)?;
            if chars.next().is_some() {
                return Err(Error::Parse(format!("trailing input in `{comp}`")));
            }
            d.verts[rv].replace_nbr(usize::MAX, child);
        }
    }
    legs.sort();
    for (seg, pos, v) in legs {
        if pos != d.segments[seg].len() {
            return Err(Error::Parse(format!("positions on segment {seg} are not dense")));
        }
        d.segments[seg].push(v);
    }
    d.validate()?;
    let (round, sign) = d.canonical();
    if round != code || sign != 1 {
        return Err(Error::Parse(format!("`{code}` is not canonical (got `{round}`)")));
    }
    Ok(d)
}

/// Split component codes at commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_slot(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once('.')
        .ok_or_else(|| Error::Parse(format!("bad leg label `{s}`")))?;
    Ok((
        a.parse().map_err(|_| Error::Parse(format!("bad segment in `{s}`")))?,
        b.parse().map_err(|_| Error::Parse(format!("bad position in `{s}`")))?,
    ))
}

fn parse_sub(
    chars: &mut std::iter::Peekable<std::str::Chars>,
    parent: usize,
    verts: &mut Vec<BVert>,
    legs: &mut Vec<(usize, usize, usize)>,
    k: usize,
) -> Result<usize> {
    if chars.peek() == Some(&'(') {
        chars.next();
        let v = verts.len();
        verts.push(BVert::Internal { nbrs: [parent, usize::MAX, usize::MAX] });
        let a = parse_sub(chars, v, verts, legs, k)?;
        if chars.next() != Some(',') {
            return Err(Error::Parse("expected `,`".into()));
        }
        let b = parse_sub(chars, v, verts, legs, k)?;
        if chars.next() != Some(')') {
            return Err(Error::Parse("expected `)`".into()));
        }
        if let BVert::Internal { nbrs } = &mut verts[v] {
            nbrs[1] = a;
            nbrs[2] = b;
        }
        Ok(v)
    } else {
        let mut tok = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_digit() || c == '.' {
                tok.push(c);
                chars.next();
            } else {
                break;
            }
        }
        let (seg, pos) = parse_slot(&tok)?;
        if seg >= k {
            return Err(Error::Parse(format!("segment {seg} out of range")));
        }
        let v = verts.len();
        verts.push(BVert::Leg { seg, nbr: parent });
        legs.push((seg, pos, v));
        Ok(v)
    }
}

fn add_diagram(lc: &mut LinComb, d: &BoundedDiagram, coeff: Rational) {
    let (code, sign) = d.canonical();
    lc.add(code, coeff * rat(sign as i64));
}

/// All distinct diagrams of degree d on k segments: internal forests with c
/// components carry d + c legs.
pub fn enumerate_bounded(k: usize, d: u32) -> Vec<String> {
    if d == 0 {
        return vec![format!("k{k}|")];
    }
    let mut out = BTreeSet::new();
    for c in 1..=d as usize {
        let legs = d as usize + c;
        for counts in compositions(legs, k) {
            // slot list in skeleton order
            let mut slots = Vec::new();
            for (s, &n) in counts.iter().enumerate() {
                for p in 0..n {
                    slots.push((s, p));
                }
            }
            for blocks in set_partitions_min2(&(0..slots.len()).collect::<Vec<_>>(), c) {
                build_from_blocks(k, &counts, &slots, &blocks, &mut out);
            }
        }
    }
    out.into_iter().collect()
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions of `items` into exactly `c` blocks, each of size at least 2.
fn set_partitions_min2(items: &[usize], c: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(items: &[usize], i: usize, c: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            if blocks.len() == c && blocks.iter().all(|b| b.len() >= 2) {
                out.push(blocks.clone());
            }
            return;
        }
        // feasibility: remaining items must be able to fill every block to 2
        let remaining = items.len() - i;
        let deficit: usize = blocks.iter().map(|b| 2usize.saturating_sub(b.len())).sum();
        let open_new = blocks.len() < c;
        if remaining < deficit + if open_new { 0 } else { 0 } {
            return;
        }
        for bi in 0..blocks.len() {
            blocks[bi].push(items[i]);
            rec(items, i + 1, c, blocks, out);
            blocks[bi].pop();
        }
        if open_new {
            blocks.push(vec![items[i]]);
            rec(items, i + 1, c, blocks, out);
            blocks.pop();
        }
    }
    rec(items, 0, c, &mut blocks, &mut out);
    out
}

/// Planted binary tree over distinct leg slots.
enum Pt {
    Slot(usize),
    Pair(Box<Pt>, Box<Pt>),
}

fn all_trees(labels: &[usize]) -> Vec<Pt> {
    if labels.len() == 1 {
        return vec![Pt::Slot(labels[0])];
    }
    let mut out = Vec::new();
    // nonempty proper subsets containing the first label go left; this hits
    // each tree once up to the AS flip, which canonicalization absorbs
    let rest = &labels[1..];
    for mask in 0..(1u32 << rest.len()) {
        let mut left = vec![labels[0]];
        let mut right = Vec::new();
        for (i, &l) in rest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(l);
            } else {
                right.push(l);
            }
        }
        if right.is_empty() {
            continue;
        }
        for lt in all_trees(&left) {
            // rebuild right each time to avoid cloning trees
            for rt in all_trees(&right) {
                out.push(Pt::Pair(Box::new(clone_pt(&lt)), Box::new(rt)));
            }
        }
    }
    out
}

fn clone_pt(t: &Pt) -> Pt {
    match t {
        Pt::Slot(s) => Pt::Slot(*s),
        Pt::Pair(a, b) => Pt::Pair(Box::new(clone_pt(a)), Box::new(clone_pt(b))),
    }
}

fn build_from_blocks(
    k: usize,
    counts: &[usize],
    slots: &[(usize, usize)],
    blocks: &[Vec<usize>],
    out: &mut BTreeSet<String>,
) {
    // tree choices per block, cartesian product
    let choices: Vec<Vec<Pt>> = blocks
        .iter()
        .map(|b| {
            if b.len() == 2 {
                vec![Pt::Slot(b[1])]
            } else {
                all_trees(&b[1..])
            }
        })
        .collect();
    let index_sets: Vec<Vec<usize>> = choices.iter().map(|c| (0..c.len()).collect()).collect();
    for pick in index_sets.iter().multi_cartesian_product() {
        let mut d = BoundedDiagram::empty(k);
        let mut slot_vert = vec![usize::MAX; slots.len()];
        for (bi, block) in blocks.iter().enumerate() {
            let root_slot = block[0];
            let rv = d.verts.len();
            d.verts.push(BVert::Leg { seg: slots[root_slot].0, nbr: usize::MAX });
            slot_vert[root_slot] = rv;
            let child = realize_pt(&choices[bi][*pick[bi]], rv, slots, &mut d.verts, &mut slot_vert);
            d.verts[rv].replace_nbr(usize::MAX, child);
        }
        for (s, &n) in counts.iter().enumerate() {
            for p in 0..n {
                let si = slots.iter().position(|&sp| sp == (s, p)).unwrap();
                d.segments[s].push(slot_vert[si]);
            }
        }
        debug_assert!(d.validate().is_ok());
        out.insert(d.canonical().0);
    }
}

fn realize_pt(
    t: &Pt,
    parent: usize,
    slots: &[(usize, usize)],
    verts: &mut Vec<BVert>,
    slot_vert: &mut [usize],
) -> usize {
    match t {
        Pt::Slot(s) => {
            let v = verts.len();
            verts.push(BVert::Leg { seg: slots[*s].0, nbr: parent });
            slot_vert[*s] = v;
            v
        }
        Pt::Pair(a, b) => {
            let v = verts.len();
            verts.push(BVert::Internal { nbrs: [parent, usize::MAX, usize::MAX] });
            let av = realize_pt(a, v, slots, verts, slot_vert);
            let bv = realize_pt(b, v, slots, verts, slot_vert);
            if let BVert::Internal { nbrs } = &mut verts[v] {
                nbrs[1] = av;
                nbrs[2] = bv;
            }
            v
        }
    }
}

/// STU rows: for each diagram T and adjacent leg pair, S - T + U where S is
/// the fused diagram (dropped when fusing closes a loop) and U swaps the two
/// legs.
pub fn stu_rows(k: usize, d: u32) -> Vec<RelationRow> {
    let mut rows = Vec::new();
    for code in enumerate_bounded(k, d) {
        let diag = parse_bounded(&code).expect("enumerated code parses");
        for seg in 0..k {
            let n = diag.segments[seg].len();
            for p in 0..n.saturating_sub(1) {
                let mut vector = LinComb::new();
                if let Some(s) = diag.fuse(seg, p) {
                    add_diagram(&mut vector, &s, rat(1));
                }
                add_diagram(&mut vector, &diag, rat(-1));
                add_diagram(&mut vector, &diag.swap_legs(seg, p), rat(1));
                if vector.is_zero() {
                    continue;
                }
                rows.push(RelationRow {
                    vector,
                    kind: RelationKind::Stu,
                    locus: format!("stu {code} s{seg} p{p}"),
                });
            }
        }
    }
    rows
}

/// 1T rows: {D: 1} for each diagram with an isolated chord.
pub fn one_t_rows(k: usize, d: u32) -> Vec<RelationRow> {
    let mut rows = Vec::new();
    for code in enumerate_bounded(k, d) {
        let diag = parse_bounded(&code).expect("enumerated code parses");
        if diag.has_isolated_chord() {
            rows.push(RelationRow {
                vector: LinComb::single(code.clone(), rat(1)),
                kind: RelationKind::OneT,
                locus: format!("1t {code}"),
            });
        }
    }
    rows
}

/// Cyclic rows: D - shift(D) for each segment, closing the skeleton.
pub fn cyclic_rows(k: usize, d: u32) -> Vec<RelationRow> {
    let mut rows = Vec::new();
    for code in enumerate_bounded(k, d) {
        let diag = parse_bounded(&code).expect("enumerated code parses");
        for seg in 0..k {
            if diag.segments[seg].len() < 2 {
                continue;
            }
            let mut vector = LinComb::new();
            add_diagram(&mut vector, &diag, rat(1));
            add_diagram(&mut vector, &diag.cyclic_shift(seg), rat(-1));
            if vector.is_zero() {
                continue;
            }
            rows.push(RelationRow {
                vector,
                kind: RelationKind::Cyclic,
                locus: format!("cyc {code} s{seg}"),
            });
        }
    }
    rows
}

/// String-link side: STU and 1T.
pub fn acsl_system(k: usize, d: u32) -> RelationSystem {
    let mut rows = stu_rows(k, d);
    rows.extend(one_t_rows(k, d));
    RelationSystem::new(enumerate_bounded(k, d), rows)
}

/// Closed-link side: STU, 1T and the cyclic relation.
pub fn acl_system(k: usize, d: u32) -> RelationSystem {
    let mut rows = stu_rows(k, d);
    rows.extend(one_t_rows(k, d));
    rows.extend(cyclic_rows(k, d));
    RelationSystem::new(enumerate_bounded(k, d), rows)
}

/// The averaging map: place the color-i leaves of a forest on segment i in
/// every possible order, with total coefficient 1 / prod_i n_i!.
pub fn chi(f: &Forest) -> Result<LinComb> {
    f.validate()?;
    let k = f.colors_bound as usize;
    // leaves grouped by color, as (component, vertex)
    let mut by_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (ci, comp) in f.components.iter().enumerate() {
        for (v, col) in comp.leaves() {
            by_color[col as usize - 1].push((ci, v));
        }
    }
    let mut denom = rat(1);
    for g in &by_color {
        for i in 1..=g.len() as i64 {
            denom *= rat(i);
        }
    }
    let coeff = rat(1) / denom;

    // all tuples of per-color position assignments
    let perm_sets: Vec<Vec<Vec<usize>>> = by_color
        .iter()
        .map(|g| (0..g.len()).permutations(g.len()).collect())
        .collect();
    let mut out = LinComb::new();
    for pick in perm_sets.iter().multi_cartesian_product() {
        let mut d = BoundedDiagram::empty(k);
        // copy components with index offsets, turning colored leaves into legs
        let mut offset = Vec::with_capacity(f.components.len());
        for comp in &f.components {
            offset.push(d.verts.len());
            let base = d.verts.len();
            for vert in &comp.verts {
                d.verts.push(match vert {
                    Vert::Leaf { color, nbr } => BVert::Leg { seg: *color as usize - 1, nbr: base + nbr },
                    Vert::Internal { nbrs } => BVert::Internal {
                        nbrs: [base + nbrs[0], base + nbrs[1], base + nbrs[2]],
                    },
                });
            }
        }
        for (color, group) in by_color.iter().enumerate() {
            let perm = pick[color];
            let mut seg = vec![usize::MAX; group.len()];
            for (li, &(ci, v)) in group.iter().enumerate() {
                seg[perm[li]] = offset[ci] + v;
            }
            d.segments[color] = seg;
        }
        debug_assert!(d.validate().is_ok());
        add_diagram(&mut out, &d, coeff.clone());
    }
    Ok(out)
}
