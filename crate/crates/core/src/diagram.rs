//! Colored unitrivalent tree components and forests, canonical forms with
//! antisymmetry signs, and enumeration of bases.
//!
//! A component is serialized from a root half-edge (we root at each leaf in
//! turn) as nested groups `(A,B)` listing the two subtrees in cyclic order
//! after the incoming edge; leaves serialize as their color numeral.  The
//! canonical code is the lexicographic minimum over all roots and all subsets
//! of orientation flips, with sign equal to the flip parity of the minimizing
//! choice.  If flip subsets of both parities reach the minimum the class is
//! its own negative and canonicalizes to ZERO.

use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

pub type Color = u32;

/// Vertex of a tree component.  `nbrs` of an internal vertex are listed in
/// cyclic order; reversal is an AS flip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vert {
    Leaf { color: Color, nbr: usize },
    Internal { nbrs: [usize; 3] },
}

impl Vert {
    pub fn is_leaf(&self) -> bool {
        matches!(self, Vert::Leaf { .. })
    }

    pub(crate) fn replace_nbr(&mut self, old: usize, new: usize) {
        match self {
            Vert::Leaf { nbr, .. } => {
                assert_eq!(*nbr, old);
                *nbr = new;
            }
            Vert::Internal { nbrs } => {
                let i = nbrs.iter().position(|&n| n == old).expect("neighbor");
                nbrs[i] = new;
            }
        }
    }
}

/// Rooted planar tree used to build components and as the working form of the
/// comb rewriting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Planted {
    Leaf(Color),
    Branch(Box<Planted>, Box<Planted>),
}

impl Planted {
    pub fn branch(l: Planted, r: Planted) -> Planted {
        Planted::Branch(Box::new(l), Box::new(r))
    }

    pub fn n_leaves(&self) -> usize {
        match self {
            Planted::Leaf(_) => 1,
            Planted::Branch(l, r) => l.n_leaves() + r.n_leaves(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TreeComponent {
    pub verts: Vec<Vert>,
}

impl TreeComponent {
    pub fn strut(a: Color, b: Color) -> TreeComponent {
        TreeComponent {
            verts: vec![Vert::Leaf { color: a, nbr: 1 }, Vert::Leaf { color: b, nbr: 0 }],
        }
    }

    /// Component rooted at a leaf of color `root_color`, with the planted
    /// tree hanging across its edge.  An internal vertex created for
    /// `Branch(l, r)` has cyclic order (incoming, l, r).
    pub fn from_planted(root_color: Color, tree: &Planted) -> TreeComponent {
        let mut verts = vec![Vert::Leaf { color: root_color, nbr: usize::MAX }];
        let top = Self::build(&mut verts, tree, 0);
        verts[0].replace_nbr(usize::MAX, top);
        TreeComponent { verts }
    }

    /// The component `cbar` over a terminal branch with leaves colored
    /// (x, y): the branch vertex has cyclic order (edge to cbar, x, y).
    pub fn branch_over(cbar: &Planted, x: Color, y: Color) -> TreeComponent {
        TreeComponent::from_planted(x, &Planted::branch(Planted::Leaf(y), cbar.clone()))
    }

    fn build(verts: &mut Vec<Vert>, tree: &Planted, parent: usize) -> usize {
        match tree {
            Planted::Leaf(c) => {
                verts.push(Vert::Leaf { color: *c, nbr: parent });
                verts.len() - 1
            }
            Planted::Branch(l, r) => {
                let v = verts.len();
                verts.push(Vert::Internal { nbrs: [parent, usize::MAX, usize::MAX] });
                let li = Self::build(verts, l, v);
                let ri = Self::build(verts, r, v);
                if let Vert::Internal { nbrs } = &mut verts[v] {
                    nbrs[1] = li;
                    nbrs[2] = ri;
                }
                v
            }
        }
    }

    pub fn n_leaves(&self) -> usize {
        self.verts.iter().filter(|v| v.is_leaf()).count()
    }

    pub fn n_internal(&self) -> usize {
        self.verts.len() - self.n_leaves()
    }

    /// degree = (|leaves| + |internals|) / 2 = |internals| + 1.
    pub fn degree(&self) -> u32 {
        ((self.n_leaves() + self.n_internal()) / 2) as u32
    }

    pub fn leaves(&self) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.verts.iter().enumerate().filter_map(|(i, v)| match v {
            Vert::Leaf { color, .. } => Some((i, *color)),
            _ => None,
        })
    }

    pub fn internals(&self) -> impl Iterator<Item = usize> + '_ {
        self.verts.iter().enumerate().filter_map(|(i, v)| match v {
            Vert::Internal { .. } => Some(i),
            _ => None,
        })
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        match &self.verts[v] {
            Vert::Leaf { nbr, .. } => vec![*nbr],
            Vert::Internal { nbrs } => nbrs.to_vec(),
        }
    }

    /// Edges (u, v) with u < v between two internal vertices.
    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, v) in self.verts.iter().enumerate() {
            if let Vert::Internal { nbrs } = v {
                for &n in nbrs {
                    if n > i && !self.verts[n].is_leaf() {
                        out.push((i, n));
                    }
                }
            }
        }
        out
    }

    /// Reverse the cyclic order at one internal vertex (an AS flip).
    pub fn flip(&mut self, v: usize) {
        if let Vert::Internal { nbrs } = &mut self.verts[v] {
            nbrs.swap(1, 2);
        } else {
            panic!("flip on a leaf");
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.verts.len();
        if n < 2 {
            return Err(Error::Structural("component needs at least one edge".into()));
        }
        for (i, v) in self.verts.iter().enumerate() {
            for nb in self.neighbors(i) {
                if nb >= n {
                    return Err(Error::Structural(format!("vertex {i} has dangling neighbor")));
                }
                if !self.neighbors(nb).contains(&i) {
                    return Err(Error::Structural(format!("adjacency of {i} and {nb} not mutual")));
                }
            }
            if let Vert::Internal { nbrs } = v {
                if nbrs[0] == nbrs[1] || nbrs[0] == nbrs[2] || nbrs[1] == nbrs[2] {
                    return Err(Error::Structural(format!("repeated edge at vertex {i}")));
                }
            }
        }
        // connected and acyclic: |E| = n - 1 and all reachable
        let n_edges: usize = (0..n).map(|i| self.neighbors(i).len()).sum::<usize>() / 2;
        if n_edges != n - 1 {
            return Err(Error::Structural("component is not a tree".into()));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for nb in self.neighbors(v) {
                if !seen[nb] {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Structural("component is disconnected".into()));
        }
        if self.n_leaves() != self.n_internal() + 2 {
            return Err(Error::Structural("leaf/internal count mismatch".into()));
        }
        Ok(())
    }

    /// View from leaf `root` inward as a planted tree.
    pub fn to_planted(&self, root: usize) -> (Color, Planted) {
        let (color, nbr) = match &self.verts[root] {
            Vert::Leaf { color, nbr } => (*color, *nbr),
            _ => panic!("root must be a leaf"),
        };
        (color, self.planted_from(root, nbr))
    }

    fn planted_from(&self, from: usize, v: usize) -> Planted {
        match &self.verts[v] {
            Vert::Leaf { color, .. } => Planted::Leaf(*color),
            Vert::Internal { nbrs } => {
                let i = nbrs.iter().position(|&n| n == from).expect("incoming edge");
                let a = nbrs[(i + 1) % 3];
                let b = nbrs[(i + 2) % 3];
                Planted::branch(self.planted_from(v, a), self.planted_from(v, b))
            }
        }
    }

    pub fn canonical(&self) -> CanonicalForm {
        let mut best: Option<(String, u8)> = None;
        for (leaf, color) in self.leaves() {
            let nbr = self.neighbors(leaf)[0];
            let (s, p) = self.ser(leaf, nbr);
            let code = format!("{color}:{s}");
            match &mut best {
                None => best = Some((code, p)),
                Some((bc, bp)) => {
                    if code < *bc {
                        *bc = code;
                        *bp = p;
                    } else if code == *bc {
                        *bp |= p;
                    }
                }
            }
        }
        let (code, parity) = best.expect("component has leaves");
        CanonicalForm::from_parity(code, parity)
    }

    /// Serialization across the directed edge from -> v, returning the
    /// minimal string over flip subsets of the subtree and the set of flip
    /// parities that reach it.
    fn ser(&self, from: usize, v: usize) -> (String, u8) {
        match &self.verts[v] {
            Vert::Leaf { color, .. } => (color.to_string(), P_EVEN),
            Vert::Internal { nbrs } => {
                let i = nbrs.iter().position(|&n| n == from).expect("incoming edge");
                let a = nbrs[(i + 1) % 3];
                let b = nbrs[(i + 2) % 3];
                let (sa, pa) = self.ser(v, a);
                let (sb, pb) = self.ser(v, b);
                match sa.cmp(&sb) {
                    std::cmp::Ordering::Less => (format!("({sa},{sb})"), parity_add(pa, pb)),
                    std::cmp::Ordering::Greater => {
                        (format!("({sb},{sa})"), parity_flip(parity_add(pa, pb)))
                    }
                    std::cmp::Ordering::Equal => (format!("({sa},{sb})"), P_EVEN | P_ODD),
                }
            }
        }
    }
}

const P_EVEN: u8 = 1;
const P_ODD: u8 = 2;

fn parity_add(a: u8, b: u8) -> u8 {
    let mut out = 0;
    if a & P_EVEN != 0 && b & P_EVEN != 0 {
        out |= P_EVEN;
    }
    if a & P_ODD != 0 && b & P_ODD != 0 {
        out |= P_EVEN;
    }
    if a & P_EVEN != 0 && b & P_ODD != 0 {
        out |= P_ODD;
    }
    if a & P_ODD != 0 && b & P_EVEN != 0 {
        out |= P_ODD;
    }
    out
}

fn parity_flip(a: u8) -> u8 {
    let mut out = 0;
    if a & P_EVEN != 0 {
        out |= P_ODD;
    }
    if a & P_ODD != 0 {
        out |= P_EVEN;
    }
    out
}

/// Canonical class of a component or forest: a code with the sign of the
/// given representative, or ZERO when the diagram equals its own negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CanonicalForm {
    Zero,
    Form { code: String, sign: i8 },
}

impl CanonicalForm {
    fn from_parity(code: String, parity: u8) -> CanonicalForm {
        match parity {
            p if p == P_EVEN | P_ODD => CanonicalForm::Zero,
            P_EVEN => CanonicalForm::Form { code, sign: 1 },
            P_ODD => CanonicalForm::Form { code, sign: -1 },
            _ => unreachable!(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CanonicalForm::Zero)
    }

    pub fn code(&self) -> Option<&str> {
        match self {
            CanonicalForm::Zero => None,
            CanonicalForm::Form { code, .. } => Some(code),
        }
    }

    pub fn sign(&self) -> Option<i8> {
        match self {
            CanonicalForm::Zero => None,
            CanonicalForm::Form { sign, .. } => Some(*sign),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::Zero => write!(f, "0"),
            CanonicalForm::Form { code, sign } => {
                write!(f, "{}{code}", if *sign < 0 { "-" } else { "" })
            }
        }
    }
}

pub const EMPTY_FOREST_CODE: &str = "∅";

#[derive(Clone, Debug)]
pub struct Forest {
    pub components: Vec<TreeComponent>,
    pub colors_bound: Color,
}

impl Forest {
    pub fn new(components: Vec<TreeComponent>, colors_bound: Color) -> Forest {
        Forest { components, colors_bound }
    }

    pub fn empty(colors_bound: Color) -> Forest {
        Forest { components: Vec::new(), colors_bound }
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree()).sum()
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.components {
            c.validate()?;
            for (_, color) in c.leaves() {
                if color < 1 || color > self.colors_bound {
                    return Err(Error::Structural(format!(
                        "color {color} out of range 1..{}",
                        self.colors_bound
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn canonical(&self) -> CanonicalForm {
        let mut codes = Vec::with_capacity(self.components.len());
        let mut sign = 1i8;
        for c in &self.components {
            match c.canonical() {
                CanonicalForm::Zero => return CanonicalForm::Zero,
                CanonicalForm::Form { code, sign: s } => {
                    codes.push(code);
                    sign *= s;
                }
            }
        }
        if codes.is_empty() {
            return CanonicalForm::Form { code: EMPTY_FOREST_CODE.to_string(), sign: 1 };
        }
        codes.sort();
        CanonicalForm::Form { code: codes.join("+"), sign }
    }

    /// m(D; i, j): number of degree-1 components with end colors {i, j}.
    pub fn strut_count(&self, i: Color, j: Color) -> usize {
        self.components
            .iter()
            .filter(|c| {
                if c.degree() != 1 {
                    return false;
                }
                let mut cols: Vec<Color> = c.leaves().map(|(_, col)| col).collect();
                cols.sort_unstable();
                let mut want = [i.min(j), i.max(j)];
                want.sort_unstable();
                cols == want
            })
            .count()
    }

    /// Relabel all leaf colors by `perm`, a bijection of 1..k given as
    /// perm[c - 1] = image of c.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<Forest> {
        let k = self.colors_bound as usize;
        if perm.len() != k {
            return Err(Error::Argument("permutation length must equal colors_bound".into()));
        }
        let mut seen = vec![false; k];
        for &p in perm {
            if p < 1 || p as usize > k || seen[p as usize - 1] {
                return Err(Error::Argument("not a permutation of 1..k".into()));
            }
            seen[p as usize - 1] = true;
        }
        let mut components = self.components.clone();
        for c in &mut components {
            for v in &mut c.verts {
                if let Vert::Leaf { color, .. } = v {
                    *color = perm[*color as usize - 1];
                }
            }
        }
        Ok(Forest { components, colors_bound: self.colors_bound })
    }
}

// ---------------------------------------------------------------------------
// parsing the interchange encoding
// ---------------------------------------------------------------------------

pub fn parse_component(code: &str) -> Result<TreeComponent> {
    let (root, rest) = code
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("component code `{code}` lacks `:`")))?;
    let root_color: Color =
        root.parse().map_err(|_| Error::Parse(format!("bad color `{root}`")))?;
    let mut chars = rest.char_indices().peekable();
    let tree = parse_subtree(rest, &mut chars)?;
    if chars.next().is_some() {
        return Err(Error::Parse(format!("trailing input in `{code}`")));
    }
    Ok(TreeComponent::from_planted(root_color, &tree))
}

fn parse_subtree(
    src: &str,
    chars: &mut std::iter::Peekable<std::str::CharIndices>,
) -> Result<Planted> {
    match chars.peek() {
        Some((_, '(')) => {
            chars.next();
            let l = parse_subtree(src, chars)?;
            match chars.next() {
                Some((_, ',')) => {}
                _ => return Err(Error::Parse(format!("expected `,` in `{src}`"))),
            }
            let r = parse_subtree(src, chars)?;
            match chars.next() {
                Some((_, ')')) => {}
                _ => return Err(Error::Parse(format!("expected `)` in `{src}`"))),
            }
            Ok(Planted::branch(l, r))
        }
        Some((_, c)) if c.is_ascii_digit() => {
            let mut n: Color = 0;
            while let Some((_, c)) = chars.peek() {
                if let Some(d) = c.to_digit(10) {
                    n = n * 10 + d;
                    chars.next();
                } else {
                    break;
                }
            }
            Ok(Planted::Leaf(n))
        }
        _ => Err(Error::Parse(format!("unexpected input in `{src}`"))),
    }
}

pub fn parse_forest(code: &str, colors_bound: Color) -> Result<Forest> {
    if code == EMPTY_FOREST_CODE {
        return Ok(Forest::empty(colors_bound));
    }
    let components = code.split('+').map(parse_component).collect::<Result<Vec<_>>>()?;
    let f = Forest::new(components, colors_bound);
    f.validate()?;
    Ok(f)
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All planted trees with `n` leaves colored from 1..=k (ordered children,
/// so shapes are overcounted; canonicalization dedupes).
pub fn planted_trees(n: usize, k: Color) -> Vec<Planted> {
    if n == 1 {
        return (1..=k).map(Planted::Leaf).collect();
    }
    let mut out = Vec::new();
    for i in 1..n {
        for l in planted_trees(i, k) {
            for r in planted_trees(n - i, k) {
                out.push(Planted::branch(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// One representative code per nonzero canonical class of degree-d tree
/// components with colors in 1..=k, sorted.
pub fn enumerate_components(d: u32, k: Color) -> Vec<String> {
    assert!(d >= 1 && k >= 1);
    let mut codes = std::collections::BTreeSet::new();
    // degree d component has d + 1 leaves: one root leaf plus a planted tree
    // with d leaves
    for tree in planted_trees(d as usize, k) {
        for root in 1..=k {
            let comp = TreeComponent::from_planted(root, &tree);
            debug_assert_eq!(comp.n_leaves(), comp.n_internal() + 2);
            if let CanonicalForm::Form { code, .. } = comp.canonical() {
                codes.insert(code);
            }
        }
    }
    codes.into_iter().collect()
}

/// All nonzero canonical forests of total degree d, as sorted codes.
pub fn enumerate_forests(d: u32, k: Color) -> Vec<String> {
    if d == 0 {
        return vec![EMPTY_FOREST_CODE.to_string()];
    }
    // global component list sorted by code, tagged with degree
    let mut comps: Vec<(String, u32)> = Vec::new();
    for deg in 1..=d {
        for code in enumerate_components(deg, k) {
            comps.push((code, deg));
        }
    }
    comps.sort();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        comps: &[(String, u32)],
        start: usize,
        remaining: u32,
        chosen: &mut Vec<usize>,
        out: &mut Vec<String>,
    ) {
        if remaining == 0 {
            let codes: Vec<&str> = chosen.iter().map(|&i| comps[i].0.as_str()).collect();
            out.push(codes.join("+"));
            return;
        }
        for i in start..comps.len() {
            if comps[i].1 <= remaining {
                chosen.push(i);
                rec(comps, i, remaining - comps[i].1, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&comps, 0, d, &mut chosen, &mut out);
    out.sort();
    out
}

/// Index of forest codes for a (k, d) slice, used as column ordering.
pub fn basis_index(codes: &[String]) -> BTreeMap<String, usize> {
    codes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(a: Color, b: Color, c: Color) -> TreeComponent {
        TreeComponent::from_planted(a, &Planted::branch(Planted::Leaf(b), Planted::Leaf(c)))
    }

    #[test]
    fn y_tree_as_sign() {
        // cyclic (1,2,3) vs (1,3,2): same code, opposite signs
        let c1 = y(1, 2, 3).canonical();
        let c2 = y(1, 3, 2).canonical();
        assert_eq!(c1.code(), c2.code());
        assert_eq!(c1.sign().unwrap(), -c2.sign().unwrap());
    }

    #[test]
    fn y_repeated_color_is_zero() {
        assert!(y(1, 1, 2).canonical().is_zero());
        assert!(y(1, 2, 1).canonical().is_zero());
        assert!(y(2, 1, 1).canonical().is_zero());
    }

    #[test]
    fn single_color_caterpillar_is_zero() {
        // caterpillars of degree 2..=4, all leaves colored 1
        for d in 2..=4usize {
            let mut tree = Planted::branch(Planted::Leaf(1), Planted::Leaf(1));
            for _ in 0..d - 2 {
                tree = Planted::branch(Planted::Leaf(1), tree);
            }
            let comp = TreeComponent::from_planted(1, &tree);
            assert_eq!(comp.degree() as usize, d);
            assert!(comp.canonical().is_zero(), "degree {d}");
        }
    }

    #[test]
    fn strut_canonical() {
        let c = TreeComponent::strut(2, 1).canonical();
        assert_eq!(c.code(), Some("1:2"));
        assert_eq!(c.sign(), Some(1));
    }

    #[test]
    fn forest_canonical_cases() {
        let k = 3;
        assert_eq!(Forest::empty(k).canonical().code(), Some(EMPTY_FOREST_CODE));
        let f = Forest::new(vec![TreeComponent::strut(1, 2), TreeComponent::strut(1, 2)], k);
        assert_eq!(f.canonical().code(), Some("1:2+1:2"));
        assert_eq!(f.canonical().sign(), Some(1));
        let f = Forest::new(vec![y(1, 1, 2), TreeComponent::strut(1, 2)], k);
        assert!(f.canonical().is_zero());
    }

    #[test]
    fn canonical_idempotent() {
        for code in enumerate_components(3, 3) {
            let comp = parse_component(&code).unwrap();
            let c = comp.canonical();
            assert_eq!(c.code(), Some(code.as_str()));
            assert_eq!(c.sign(), Some(1));
        }
    }

    #[test]
    fn flip_negates_exhaustively() {
        // AS soundness for all components of degree <= 4, k <= 3
        for k in 1..=3 {
            for d in 1..=4 {
                for code in enumerate_components(d, k) {
                    let comp = parse_component(&code).unwrap();
                    for v in comp.internals().collect::<Vec<_>>() {
                        let mut flipped = comp.clone();
                        flipped.flip(v);
                        let c = flipped.canonical();
                        assert_eq!(c.code(), Some(code.as_str()));
                        assert_eq!(c.sign(), Some(-1));
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_component_counts() {
        // d=1, k=2: struts (1,1), (1,2), (2,2)
        assert_eq!(enumerate_components(1, 2), vec!["1:1", "1:2", "2:2"]);
        // d=2, k=2: every Y repeats a color
        assert!(enumerate_components(2, 2).is_empty());
        // d=2, k=4: one Y per 3-element color subset
        assert_eq!(enumerate_components(2, 4).len(), 4);
    }

    #[test]
    fn enumerate_component_counts_vs_bruteforce() {
        // independent oracle: a degree-2 component is a Y; it is nonzero
        // exactly when its three colors are distinct, and orientation-reversal
        // identifies the two cyclic orders of a 3-set, leaving one class.
        for k in 1..=4u32 {
            let n = k as i64;
            let expect = (n * (n - 1) * (n - 2) / 6).max(0) as usize;
            assert_eq!(enumerate_components(2, k).len(), expect, "k={k}");
        }
    }

    #[test]
    fn enumerate_forest_counts() {
        assert_eq!(enumerate_forests(0, 3), vec![EMPTY_FOREST_CODE.to_string()]);
        assert_eq!(enumerate_forests(1, 3).len(), 6);
        // 21 strut pairs + Y(1,2,3)
        assert_eq!(enumerate_forests(2, 3).len(), 22);
    }

    #[test]
    fn strut_counts() {
        let f = Forest::new(
            vec![y(1, 2, 3), TreeComponent::strut(1, 2), TreeComponent::strut(1, 2)],
            3,
        );
        assert_eq!(f.strut_count(1, 2), 2);
        assert_eq!(f.strut_count(2, 1), 2);
        assert_eq!(f.strut_count(2, 3), 0);
        let f = Forest::new(vec![TreeComponent::strut(1, 1)], 1);
        assert_eq!(f.strut_count(1, 1), 1);
    }

    #[test]
    fn permute_colors_cases() {
        let f = Forest::new(vec![TreeComponent::strut(1, 2)], 3);
        let g = f.permute_colors(&[1, 3, 2]).unwrap();
        assert_eq!(g.canonical().code(), Some("1:3"));
        let id = f.permute_colors(&[1, 2, 3]).unwrap();
        assert_eq!(id.canonical(), f.canonical());
        // relabeling preserves ZERO-status
        let z = Forest::new(vec![y(1, 2, 1)], 3);
        assert!(z.permute_colors(&[2, 1, 3]).unwrap().canonical().is_zero());
    }

    #[test]
    fn color_equivariance_of_enumeration() {
        // |enumerate_components(d, k)| is invariant under relabeling: check
        // by permuting every enumerated representative and re-canonicalizing
        let perms: [[Color; 4]; 3] = [[2, 1, 3, 4], [4, 3, 2, 1], [2, 3, 4, 1]];
        for d in 1..=3u32 {
            let codes = enumerate_components(d, 4);
            for perm in &perms {
                let mut relabeled = std::collections::BTreeSet::new();
                for code in &codes {
                    let f = Forest::new(vec![parse_component(code).unwrap()], 4);
                    let g = f.permute_colors(perm).unwrap();
                    relabeled.insert(g.canonical().code().unwrap().to_string());
                }
                assert_eq!(relabeled.len(), codes.len());
            }
        }
    }

    #[test]
    fn parse_roundtrip() {
        for d in 1..=4 {
            for code in enumerate_components(d, 3) {
                let comp = parse_component(&code).unwrap();
                comp.validate().unwrap();
                assert_eq!(comp.canonical().code(), Some(code.as_str()));
            }
        }
        assert!(parse_component("1:").is_err());
        assert!(parse_component("(1,2)").is_err());
    }
}
