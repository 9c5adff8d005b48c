//! Boundary matchings and layered words, shared by the Temperley-Lieb and
//! Brauer categories.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superlinalg::Parity;

/// A boundary point of a diagram: bottom points are the source, top points
/// the target, both indexed left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Bottom(i) => write!(f, "b{i}"),
            Point::Top(j) => write!(f, "t{j}"),
        }
    }
}

impl std::str::FromStr for Point {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDiagram(format!("bad point label `{s}`"));
        let (kind, idx) = s.split_at(1.min(s.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "b" => Ok(Point::Bottom(idx)),
            "t" => Ok(Point::Top(idx)),
            _ => Err(bad()),
        }
    }
}

/// A perfect matching on `m` bottom and `n` top points.
///
/// Stored as an involution on point indices: bottom `i` is index `i`, top `j`
/// is index `m + j`. Planarity is not required here; the Temperley-Lieb
/// category checks it separately.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingDiagram {
    source: usize,
    target: usize,
    partner: Vec<u16>,
}

impl MatchingDiagram {
    pub fn from_pairs(source: usize, target: usize, pairs: &[(Point, Point)]) -> Result<Self> {
        let total = source + target;
        if total % 2 == 1 {
            return Err(Error::InvalidDiagram(format!("{source}+{target} boundary points cannot be matched")));
        }
        let index = |p: Point| -> Result<usize> {
            match p {
                Point::Bottom(i) if i < source => Ok(i),
                Point::Top(j) if j < target => Ok(source + j),
                _ => Err(Error::InvalidDiagram(format!("point {p} out of range for {source} -> {target}"))),
            }
        };
        let mut partner = vec![u16::MAX; total];
        for &(a, b) in pairs {
            let (a, b) = (index(a)?, index(b)?);
            if a == b || partner[a] != u16::MAX || partner[b] != u16::MAX {
                return Err(Error::InvalidDiagram("point used twice".into()));
            }
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        if partner.contains(&u16::MAX) {
            return Err(Error::InvalidDiagram("matching is not perfect".into()));
        }
        Ok(Self { source, target, partner })
    }

    /// Builds from the raw involution; caller guarantees validity.
    pub(crate) fn from_partner(source: usize, target: usize, partner: Vec<u16>) -> Self {
        debug_assert_eq!(partner.len(), source + target);
        debug_assert!(partner.iter().enumerate().all(|(i, &p)| partner[p as usize] as usize == i && p as usize != i));
        Self { source, target, partner }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { (i + n) as u16 } else { (i - n) as u16 }).collect();
        Self { source: n, target: n, partner }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub(crate) fn partner_raw(&self) -> &[u16] {
        &self.partner
    }

    pub fn point(&self, idx: usize) -> Point {
        if idx < self.source {
            Point::Bottom(idx)
        } else {
            Point::Top(idx - self.source)
        }
    }

    pub fn index(&self, p: Point) -> usize {
        match p {
            Point::Bottom(i) => i,
            Point::Top(j) => self.source + j,
        }
    }

    pub fn partner(&self, p: Point) -> Point {
        self.point(self.partner[self.index(p)] as usize)
    }

    /// Pairs `(p, p')` with `p < p'`, sorted.
    pub fn pairs(&self) -> Vec<(Point, Point)> {
        (0..self.partner.len())
            .filter(|&i| (self.partner[i] as usize) > i)
            .map(|i| (self.point(i), self.point(self.partner[i] as usize)))
            .collect()
    }

    /// Caps, as `(i, j)` with `i < j` bottom indices, sorted by `i`.
    pub fn caps(&self) -> Vec<(usize, usize)> {
        (0..self.source)
            .filter_map(|i| {
                let p = self.partner[i] as usize;
                (p < self.source && p > i).then_some((i, p))
            })
            .collect()
    }

    /// Cups, as `(i, j)` with `i < j` top indices, sorted by `i`.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        (0..self.target)
            .filter_map(|j| {
                let p = self.partner[self.source + j] as usize;
                (p >= self.source && p - self.source > j).then(|| (j, p - self.source))
            })
            .collect()
    }

    /// Through strands `(bottom, top)` sorted by bottom index.
    pub fn through(&self) -> Vec<(usize, usize)> {
        (0..self.source)
            .filter_map(|i| {
                let p = self.partner[i] as usize;
                (p >= self.source).then(|| (i, p - self.source))
            })
            .collect()
    }

    pub fn num_caps(&self) -> usize {
        (self.source - self.through_count()) / 2
    }

    pub fn num_cups(&self) -> usize {
        (self.target - self.through_count()) / 2
    }

    pub fn through_count(&self) -> usize {
        (0..self.source).filter(|&i| self.partner[i] as usize >= self.source).count()
    }

    /// `(#cups + #caps) mod 2`: the parity when cups and caps are odd.
    pub fn parity(&self) -> Parity {
        Parity::from_int((self.num_caps() + self.num_cups()) as i64)
    }

    /// Position of each point on the boundary circle: bottom left to right,
    /// then top right to left.
    fn cyclic_position(&self, idx: usize) -> usize {
        if idx < self.source {
            idx
        } else {
            self.source + (self.target - 1 - (idx - self.source))
        }
    }

    /// No two pairs interleave on the boundary circle.
    pub fn is_planar(&self) -> bool {
        let total = self.partner.len();
        let mut by_pos = vec![0usize; total];
        for i in 0..total {
            by_pos[self.cyclic_position(i)] = i;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &i in &by_pos {
            let p = self.partner[i] as usize;
            if stack.last() == Some(&p) {
                stack.pop();
            } else {
                stack.push(i);
            }
        }
        stack.is_empty()
    }

    /// Side-by-side juxtaposition `self ⊗ other`.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let (m1, n1, m2, n2) = (self.source, self.target, other.source, other.target);
        let (m, n) = (m1 + m2, n1 + n2);
        let map1 = |i: usize| if i < m1 { i } else { m + (i - m1) };
        let map2 = |i: usize| if i < m2 { m1 + i } else { m + n1 + (i - m2) };
        let mut partner = vec![0u16; m + n];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[map1(i)] = map1(p as usize) as u16;
        }
        for (i, &p) in other.partner.iter().enumerate() {
            partner[map2(i)] = map2(p as usize) as u16;
        }
        Self::from_partner(m, n, partner)
    }

    /// Upside-down mirror image: source and target exchange roles.
    pub fn flip(&self) -> Self {
        let (m, n) = (self.source, self.target);
        let map = |i: usize| if i < m { n + i } else { i - m };
        let mut partner = vec![0u16; m + n];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[map(i)] = map(p as usize) as u16;
        }
        Self::from_partner(n, m, partner)
    }
}

impl fmt::Display for MatchingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.partner.is_empty() {
            return write!(f, "[empty]");
        }
        let parts: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for MatchingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {}", self.source, self.target, self)
    }
}

/// Vertical composite `upper ∘ lower` of two matchings, with the number of
/// closed loops formed in the middle.
pub fn compose_matchings(upper: &MatchingDiagram, lower: &MatchingDiagram) -> Result<(MatchingDiagram, usize)> {
    if lower.target != upper.source {
        return Err(Error::ArityMismatch(format!(
            "cannot compose {}->{} after {}->{}",
            upper.source, upper.target, lower.source, lower.target
        )));
    }
    let (m, k, n) = (lower.source, lower.target, upper.target);
    let mut seen = vec![false; k];
    let mut partner = vec![0u16; m + n];
    // walk from a boundary point until the path exits on the boundary again
    let walk = |start_lower: bool, idx: usize, seen: &mut Vec<bool>| -> usize {
        let (mut in_lower, mut i) = (start_lower, idx);
        loop {
            if in_lower {
                let p = lower.partner[i] as usize;
                if p < m {
                    return p;
                }
                let mid = p - m;
                seen[mid] = true;
                in_lower = false;
                i = mid;
            } else {
                let p = upper.partner[i] as usize;
                if p >= k {
                    return m + (p - k);
                }
                seen[p] = true;
                in_lower = true;
                i = m + p;
            }
        }
    };
    for i in 0..m {
        partner[i] = walk(true, i, &mut seen) as u16;
    }
    for j in 0..n {
        partner[m + j] = walk(false, k + j, &mut seen) as u16;
    }
    let mut loops = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut mid = start;
        loop {
            seen[mid] = true;
            let p = upper.partner[mid] as usize; // stays in the middle row
            seen[p] = true;
            let q = lower.partner[m + p] as usize - m;
            if q == start {
                break;
            }
            mid = q;
        }
    }
    Ok((MatchingDiagram::from_partner(m, n, partner), loops))
}

/// The elementary generators. The crossing only exists in the Brauer category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Cap,
    Cup,
    Cross,
}

impl Generator {
    pub fn local_source(self) -> usize {
        match self {
            Generator::Cap | Generator::Cross => 2,
            Generator::Cup => 0,
        }
    }

    pub fn local_target(self) -> usize {
        match self {
            Generator::Cup | Generator::Cross => 2,
            Generator::Cap => 0,
        }
    }
}

/// One horizontal slice: `id^left ⊗ gen ⊗ id^right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Layer {
    pub left: usize,
    pub generator: Generator,
    pub right: usize,
}

impl Layer {
    pub fn new(left: usize, generator: Generator, right: usize) -> Self {
        Self { left, generator, right }
    }

    pub fn source(&self) -> usize {
        self.left + self.generator.local_source() + self.right
    }

    pub fn target(&self) -> usize {
        self.left + self.generator.local_target() + self.right
    }

    pub fn padded(&self, left: usize, right: usize) -> Self {
        Self { left: self.left + left, generator: self.generator, right: self.right + right }
    }
}

/// A vertical stack of layers, read bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayerWord {
    source: usize,
    target: usize,
    layers: Vec<Layer>,
}

impl LayerWord {
    pub fn new(source: usize, layers: Vec<Layer>) -> Result<Self> {
        let mut width = source;
        for (k, l) in layers.iter().enumerate() {
            if l.source() != width {
                return Err(Error::ArityMismatch(format!(
                    "layer {k} expects {} strands but receives {width}",
                    l.source()
                )));
            }
            width = l.target();
        }
        Ok(Self { source, target: width, layers })
    }

    pub fn identity(n: usize) -> Self {
        Self { source: n, target: n, layers: vec![] }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// `self` followed by `upper` stacked on top.
    pub fn then(&self, upper: &LayerWord) -> Result<Self> {
        if upper.source != self.target {
            return Err(Error::ArityMismatch(format!(
                "cannot stack a word with source {} on one with target {}",
                upper.source, self.target
            )));
        }
        let mut layers = self.layers.clone();
        layers.extend_from_slice(&upper.layers);
        Ok(Self { source: self.source, target: upper.target, layers })
    }

    pub fn padded(&self, left: usize, right: usize) -> Self {
        Self {
            source: self.source + left + right,
            target: self.target + left + right,
            layers: self.layers.iter().map(|l| l.padded(left, right)).collect(),
        }
    }

    pub fn count(&self, g: Generator) -> usize {
        self.layers.iter().filter(|l| l.generator == g).count()
    }
}

/// The matching a word traces out, and the number of closed loops it encloses.
pub fn trace(word: &LayerWord) -> (MatchingDiagram, usize) {
    let m = word.source;
    // Strand ends carry ids; `link[id]` is the other end of the same segment.
    // Ids `0..m` are the bottom boundary points, `m..2m` their open upper ends.
    let mut link: Vec<usize> = (0..2 * m).map(|i| if i < m { i + m } else { i - m }).collect();
    let mut cur: Vec<usize> = (m..2 * m).collect();
    let mut loops = 0;
    for l in &word.layers {
        let p = l.left;
        match l.generator {
            Generator::Cross => cur.swap(p, p + 1),
            Generator::Cup => {
                let a = link.len();
                link.push(a + 1);
                link.push(a);
                cur.splice(p..p, [a, a + 1]);
            }
            Generator::Cap => {
                let (x, y) = (cur[p], cur[p + 1]);
                cur.drain(p..p + 2);
                if link[x] == y {
                    loops += 1;
                } else {
                    let (px, py) = (link[x], link[y]);
                    link[px] = py;
                    link[py] = px;
                }
            }
        }
    }
    let n = cur.len();
    let mut boundary = vec![usize::MAX; link.len()];
    for (i, b) in boundary.iter_mut().enumerate().take(m) {
        *b = i;
    }
    for (j, &id) in cur.iter().enumerate() {
        boundary[id] = m + j;
    }
    let mut partner = vec![0u16; m + n];
    for i in 0..m {
        partner[i] = boundary[link[i]] as u16;
    }
    for (j, &id) in cur.iter().enumerate() {
        partner[m + j] = boundary[link[id]] as u16;
    }
    (MatchingDiagram::from_partner(m, n, partner), loops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn word(src: usize, layers: &[(usize, Generator, usize)]) -> LayerWord {
        LayerWord::new(src, layers.iter().map(|&(l, g, r)| Layer::new(l, g, r)).collect()).unwrap()
    }

    #[test]
    fn traces_zigzag_to_identity() {
        let (d, loops) = trace(&word(1, &[(1, Cup, 0), (0, Cap, 1)]));
        assert_eq!(d, MatchingDiagram::identity(1));
        assert_eq!(loops, 0);
    }

    #[test]
    fn traces_bubble_and_identity() {
        let (d, loops) = trace(&word(0, &[(0, Cup, 0), (0, Cap, 0)]));
        assert_eq!(d.source() + d.target(), 0);
        assert_eq!(loops, 1);
        let (d, _) = trace(&LayerWord::identity(3));
        assert_eq!(d, MatchingDiagram::identity(3));
    }

    #[test]
    fn traces_crossing() {
        let (d, _) = trace(&word(2, &[(0, Cross, 0)]));
        assert_eq!(d.partner(Point::Bottom(0)), Point::Top(1));
        assert!(!d.is_planar());
    }

    #[test]
    fn nested_caps() {
        let (d, _) = trace(&word(4, &[(1, Cap, 1), (0, Cap, 0)]));
        assert_eq!(d.caps(), vec![(0, 3), (1, 2)]);
        assert!(d.is_planar());
    }

    #[test]
    fn bad_word_rejected() {
        assert!(LayerWord::new(1, vec![Layer::new(0, Cap, 0)]).is_err());
    }

    #[test]
    fn juxtapose_and_flip() {
        let cap = MatchingDiagram::from_pairs(2, 0, &[(Point::Bottom(0), Point::Bottom(1))]).unwrap();
        let d = cap.juxtapose(&MatchingDiagram::identity(1));
        assert_eq!(d.source(), 3);
        assert_eq!(d.partner(Point::Bottom(2)), Point::Top(0));
        assert_eq!(cap.flip().cups(), vec![(0, 1)]);
        assert_eq!(d.to_string(), "[b0-b1, b2-t0]");
    }
}
