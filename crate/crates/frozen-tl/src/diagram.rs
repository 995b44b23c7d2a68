//! Crossingless matching diagrams between two columns of boundary points.
//!
//! A diagram has `n` points on the left and `m` on the right, joined by
//! non-intersecting arcs. Boundary positions run around the rectangle: left
//! points top to bottom occupy positions `0..n`, and the right point with
//! top-to-bottom index `j` occupies position `n + (m-1-j)`. With this
//! convention planarity of a matching is exactly the noncrossing condition
//! on a convex cycle, and the position order is the single source of truth
//! for serialization.
//!
//! Arcs come in three kinds: a *through* arc joins the two sides, a *left
//! return* joins two left points, and a *right return* joins two right
//! points. The number of through arcs is the *width*, the number of returns
//! the *degree*. Composition glues diagrams side by side and is zero whenever
//! the concatenation contains a closed circle or a connected component with
//! more than one return (a squiggle).

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// A boundary point, indexed top to bottom within its side.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Point {
    Left(usize),
    Right(usize),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arcs must match each of the {expected} boundary positions exactly once")]
    NotPerfectMatching { expected: usize },
    #[error("arcs ({}, {}) and ({}, {}) cross", .0.0, .0.1, .1.0, .1.1)]
    Crossing((usize, usize), (usize, usize)),
    #[error("total number of boundary points {0} is odd")]
    OddTotal(usize),
    #[error("generator index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("signature mismatch: cannot glue {left_m} right points to {right_n} left points")]
    SignatureMismatch { left_m: usize, right_n: usize },
}

#[derive(Deserialize)]
struct RawDiagram {
    n: usize,
    m: usize,
    arcs: Vec<(usize, usize)>,
}

/// A crossingless matching with `n` left and `m` right boundary points.
///
/// Arcs are stored as position pairs `(p, q)` with `p < q`, sorted by `p`.
/// The derived `Ord` is the canonical order used everywhere: lexicographic
/// on the sorted arc list within a fixed signature.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct Diagram {
    n: usize,
    m: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDiagram> for Diagram {
    type Error = DiagramError;
    fn try_from(raw: RawDiagram) -> Result<Self, DiagramError> {
        Diagram::new(raw.n, raw.m, raw.arcs)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{};{:?})", self.n, self.m, self.arcs)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .arcs
            .iter()
            .map(|&(p, q)| format!("{}-{}", self.describe(p), self.describe(q)))
            .collect();
        write!(f, "[{}->{}: {}]", self.n, self.m, pts.join(" "))
    }
}

/// Internal node labels while tracing a concatenation of two diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Node {
    OuterLeft(usize),
    Mid(usize),
    OuterRight(usize),
}

impl Diagram {
    /// Validates and builds a diagram from a list of position pairs.
    pub fn new(n: usize, m: usize, arcs: Vec<(usize, usize)>) -> Result<Self, DiagramError> {
        let total = n + m;
        if total % 2 == 1 {
            return Err(DiagramError::OddTotal(total));
        }
        let mut arcs: Vec<(usize, usize)> = arcs
            .into_iter()
            .map(|(p, q)| if p <= q { (p, q) } else { (q, p) })
            .collect();
        arcs.sort_unstable();
        if arcs.len() * 2 != total {
            return Err(DiagramError::NotPerfectMatching { expected: total });
        }
        let mut partner = vec![usize::MAX; total];
        for &(p, q) in &arcs {
            if p == q || q >= total || partner[p] != usize::MAX || partner[q] != usize::MAX {
                return Err(DiagramError::NotPerfectMatching { expected: total });
            }
            partner[p] = q;
            partner[q] = p;
        }
        // noncrossing <=> arcs close in stack order along the boundary cycle
        let mut stack: Vec<usize> = Vec::new();
        for pos in 0..total {
            if partner[pos] > pos {
                stack.push(pos);
            } else {
                let open = stack.pop().expect("matched position with empty stack");
                if open != partner[pos] {
                    return Err(DiagramError::Crossing(
                        (partner[pos], pos),
                        (open, partner[open]),
                    ));
                }
            }
        }
        Ok(Diagram { n, m, arcs })
    }

    /// The identity diagram `1_n`: n through arcs.
    pub fn identity(n: usize) -> Diagram {
        let arcs = (0..n).map(|i| (i, n + (n - 1 - i))).collect();
        Diagram { n, m: n, arcs }
    }

    /// Generator with a single right return joining right points `i-1`, `i`
    /// (top to bottom), in the hom space from `n` to `n+2` points.
    pub fn b_right(n: usize, i: usize) -> Result<Diagram, DiagramError> {
        if i < 1 || i > n + 1 {
            return Err(DiagramError::IndexOutOfRange { i, max: n + 1 });
        }
        let m = n + 2;
        let mut arcs = Vec::with_capacity(n + 1);
        arcs.push(sorted_pair(pos_right(n, m, i), pos_right(n, m, i - 1)));
        for t in 0..n {
            let target = if t < i - 1 { t } else { t + 2 };
            arcs.push(sorted_pair(t, pos_right(n, m, target)));
        }
        arcs.sort_unstable();
        Ok(Diagram { n, m, arcs })
    }

    /// Generator with a single left return joining left points `i-1`, `i`:
    /// the reflection of [`Diagram::b_right`], from `n+2` to `n` points.
    pub fn b_left(n: usize, i: usize) -> Result<Diagram, DiagramError> {
        Ok(Self::b_right(n, i)?.reflect())
    }

    pub fn n_left(&self) -> usize {
        self.n
    }

    pub fn m_right(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Classifies a boundary position.
    pub fn point_at(&self, pos: usize) -> Point {
        if pos < self.n {
            Point::Left(pos)
        } else {
            Point::Right(self.n + self.m - 1 - pos)
        }
    }

    /// Inverse of [`Diagram::point_at`].
    pub fn pos_of(&self, pt: Point) -> usize {
        match pt {
            Point::Left(i) => i,
            Point::Right(j) => pos_right(self.n, self.m, j),
        }
    }

    fn describe(&self, pos: usize) -> String {
        match self.point_at(pos) {
            Point::Left(i) => format!("L{i}"),
            Point::Right(j) => format!("R{j}"),
        }
    }

    /// Arcs as point pairs.
    pub fn arcs_as_points(&self) -> Vec<(Point, Point)> {
        self.arcs
            .iter()
            .map(|&(p, q)| (self.point_at(p), self.point_at(q)))
            .collect()
    }

    /// Number of through arcs.
    pub fn width(&self) -> usize {
        self.arcs
            .iter()
            .filter(|&&(p, q)| p < self.n && q >= self.n)
            .count()
    }

    /// Number of returns (left plus right); the grading degree.
    pub fn degree(&self) -> usize {
        self.arcs.len() - self.width()
    }

    /// Left returns as top-to-bottom index pairs, sorted.
    pub fn left_returns(&self) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .filter(|&&(_, q)| q < self.n)
            .map(|&(p, q)| (p, q))
            .collect()
    }

    /// Right returns as top-to-bottom index pairs `(i, j)` with `i < j`,
    /// sorted from top to bottom.
    pub fn right_returns(&self) -> Vec<(usize, usize)> {
        let mut rets: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(p, _)| p >= self.n)
            .map(|&(p, q)| {
                let a = self.n + self.m - 1 - q;
                let b = self.n + self.m - 1 - p;
                (a, b)
            })
            .collect();
        rets.sort_unstable();
        rets
    }

    /// Through arcs as `(left index, right index)` pairs sorted by left index.
    pub fn throughs(&self) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .filter(|&&(p, q)| p < self.n && q >= self.n)
            .map(|&(p, q)| (p, self.n + self.m - 1 - q))
            .collect()
    }

    /// Right endpoint of the through arc starting at the given left point.
    pub fn through_target(&self, left: usize) -> Option<usize> {
        self.throughs().into_iter().find(|&(l, _)| l == left).map(|(_, r)| r)
    }

    pub fn is_identity(&self) -> bool {
        self.n == self.m && self.width() == self.n
    }

    /// Mirror about a vertical axis: swaps the two sides. Involutive.
    pub fn reflect(&self) -> Diagram {
        let out = Diagram {
            n: self.m,
            m: self.n,
            arcs: Vec::new(),
        };
        let mut arcs: Vec<(usize, usize)> = self
            .arcs_as_points()
            .into_iter()
            .map(|(a, b)| {
                let flip = |pt: Point| match pt {
                    Point::Left(i) => out.pos_of(Point::Right(i)),
                    Point::Right(j) => out.pos_of(Point::Left(j)),
                };
                sorted_pair(flip(a), flip(b))
            })
            .collect();
        arcs.sort_unstable();
        Diagram {
            n: self.m,
            m: self.n,
            arcs,
        }
    }

    /// Places `self` above `other`; left and right columns concatenate top
    /// to bottom. Associative, with `stack(1_a, 1_b) = 1_{a+b}`.
    pub fn stack(&self, other: &Diagram) -> Diagram {
        let n = self.n + other.n;
        let m = self.m + other.m;
        let out = Diagram {
            n,
            m,
            arcs: Vec::new(),
        };
        let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(self.arcs.len() + other.arcs.len());
        for (a, b) in self.arcs_as_points() {
            arcs.push(sorted_pair(out.pos_of(a), out.pos_of(b)));
        }
        for (a, b) in other.arcs_as_points() {
            let shift = |pt: Point| match pt {
                Point::Left(i) => Point::Left(i + self.n),
                Point::Right(j) => Point::Right(j + self.m),
            };
            arcs.push(sorted_pair(out.pos_of(shift(a)), out.pos_of(shift(b))));
        }
        arcs.sort_unstable();
        Diagram { n, m, arcs }
    }

    /// Adds one through strand above the diagram, realizing the shift
    /// embedding of the algebra into itself.
    pub fn add_through_top(&self) -> Diagram {
        Diagram::identity(1).stack(self)
    }

    /// Glues `self`'s right boundary to `other`'s left boundary.
    ///
    /// Returns `Ok(None)` when the concatenation contains a circle or a
    /// component with two or more returns, which evaluates to zero.
    pub fn compose(&self, other: &Diagram) -> Result<Option<Diagram>, DiagramError> {
        if self.m != other.n {
            return Err(DiagramError::SignatureMismatch {
                left_m: self.m,
                right_n: other.n,
            });
        }
        let n = self.n;
        let mid = self.m;
        let s = other.m;

        // Per-point arc tables. `x_*` describe arcs of the left factor,
        // `y_*` of the right factor; `bool` marks return arcs, which carry
        // the critical points.
        let dummy = (Node::Mid(usize::MAX), false);
        let mut x_ol = vec![dummy; n];
        let mut x_mid = vec![dummy; mid];
        let mut y_mid = vec![dummy; mid];
        let mut y_or = vec![dummy; s];

        for (a, b) in self.arcs_as_points() {
            match (a, b) {
                (Point::Left(i), Point::Left(j)) => {
                    x_ol[i] = (Node::OuterLeft(j), true);
                    x_ol[j] = (Node::OuterLeft(i), true);
                }
                (Point::Left(i), Point::Right(j)) | (Point::Right(j), Point::Left(i)) => {
                    x_ol[i] = (Node::Mid(j), false);
                    x_mid[j] = (Node::OuterLeft(i), false);
                }
                (Point::Right(i), Point::Right(j)) => {
                    x_mid[i] = (Node::Mid(j), true);
                    x_mid[j] = (Node::Mid(i), true);
                }
            }
        }
        for (a, b) in other.arcs_as_points() {
            match (a, b) {
                (Point::Left(i), Point::Left(j)) => {
                    y_mid[i] = (Node::Mid(j), true);
                    y_mid[j] = (Node::Mid(i), true);
                }
                (Point::Left(i), Point::Right(j)) | (Point::Right(j), Point::Left(i)) => {
                    y_mid[i] = (Node::OuterRight(j), false);
                    y_or[j] = (Node::Mid(i), false);
                }
                (Point::Right(i), Point::Right(j)) => {
                    y_or[i] = (Node::OuterRight(j), true);
                    y_or[j] = (Node::OuterRight(i), true);
                }
            }
        }

        let out = Diagram {
            n,
            m: s,
            arcs: Vec::new(),
        };
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        let mut seen_ol = vec![false; n];
        let mut seen_or = vec![false; s];
        let mut seen_mid = vec![false; mid];

        let starts = (0..n)
            .map(Node::OuterLeft)
            .chain((0..s).map(Node::OuterRight));
        for start in starts {
            let start_pt = match start {
                Node::OuterLeft(i) => {
                    if seen_ol[i] {
                        continue;
                    }
                    seen_ol[i] = true;
                    Point::Left(i)
                }
                Node::OuterRight(j) => {
                    if seen_or[j] {
                        continue;
                    }
                    seen_or[j] = true;
                    Point::Right(j)
                }
                Node::Mid(_) => unreachable!(),
            };
            // walk the component, alternating between the two factors
            let (mut node, first_ret) = match start {
                Node::OuterLeft(i) => x_ol[i],
                Node::OuterRight(j) => y_or[j],
                Node::Mid(_) => unreachable!(),
            };
            let mut in_x = matches!(start, Node::OuterLeft(_));
            let mut criticals = usize::from(first_ret);
            let end_pt = loop {
                match node {
                    Node::Mid(j) => {
                        seen_mid[j] = true;
                        let (next, ret) = if in_x { y_mid[j] } else { x_mid[j] };
                        if ret {
                            criticals += 1;
                        }
                        if let Node::Mid(j2) = next {
                            seen_mid[j2] = true;
                        }
                        in_x = !in_x;
                        node = next;
                    }
                    Node::OuterLeft(i) => {
                        seen_ol[i] = true;
                        break Point::Left(i);
                    }
                    Node::OuterRight(j) => {
                        seen_or[j] = true;
                        break Point::Right(j);
                    }
                }
            };
            if criticals >= 2 {
                return Ok(None);
            }
            arcs.push(sorted_pair(out.pos_of(start_pt), out.pos_of(end_pt)));
        }
        if seen_mid.iter().any(|v| !v) {
            // a component never reached the outer boundary: closed circle
            return Ok(None);
        }
        arcs.sort_unstable();
        let composite = Diagram { n, m: s, arcs };
        debug_assert!(
            Diagram::new(composite.n, composite.m, composite.arcs.clone()).is_ok(),
            "composition produced an invalid diagram"
        );
        Ok(Some(composite))
    }
}

fn sorted_pair(p: usize, q: usize) -> (usize, usize) {
    if p < q {
        (p, q)
    } else {
        (q, p)
    }
}

fn pos_right(n: usize, m: usize, j: usize) -> usize {
    n + (m - 1 - j)
}

/// Composable restrictions on enumeration.
#[derive(Clone, Debug, Default)]
pub struct EnumFilter {
    pub width_eq: Option<usize>,
    pub width_le: Option<usize>,
    pub no_left_returns: bool,
    pub no_right_returns: bool,
    pub unnested_right_returns: bool,
}

impl EnumFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn no_left() -> Self {
        EnumFilter {
            no_left_returns: true,
            ..Self::default()
        }
    }

    pub fn no_right() -> Self {
        EnumFilter {
            no_right_returns: true,
            ..Self::default()
        }
    }

    /// Diagrams with no left returns and only unnested right returns.
    pub fn no_left_unnested_right() -> Self {
        EnumFilter {
            no_left_returns: true,
            unnested_right_returns: true,
            ..Self::default()
        }
    }

    pub fn width(w: usize) -> Self {
        EnumFilter {
            width_eq: Some(w),
            ..Self::default()
        }
    }

    pub fn width_at_most(w: usize) -> Self {
        EnumFilter {
            width_le: Some(w),
            ..Self::default()
        }
    }

    fn width_cap(&self) -> Option<usize> {
        match (self.width_eq, self.width_le) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, b) => b,
        }
    }
}

/// Enumerates all diagrams with `n` left and `m` right points that pass the
/// filter, in canonical order (lexicographic on sorted arc lists). Empty when
/// `n + m` is odd. Filters prune the search, so restricted families are
/// enumerated without materializing the full Catalan set.
pub fn enumerate(n: usize, m: usize, filter: &EnumFilter) -> Vec<Diagram> {
    let total = n + m;
    let mut out = Vec::new();
    if total % 2 == 1 {
        return out;
    }
    if total == 0 {
        out.push(Diagram {
            n,
            m,
            arcs: Vec::new(),
        });
        return out;
    }
    let mut matched = vec![false; total];
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(total / 2);
    // stack of currently open arcs: (end position, is right return)
    let mut open: Vec<(usize, bool)> = Vec::new();
    rec(
        n,
        m,
        filter,
        0,
        0,
        &mut matched,
        &mut arcs,
        &mut open,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn rec(
    n: usize,
    m: usize,
    filter: &EnumFilter,
    pos: usize,
    throughs: usize,
    matched: &mut Vec<bool>,
    arcs: &mut Vec<(usize, usize)>,
    open: &mut Vec<(usize, bool)>,
    out: &mut Vec<Diagram>,
) {
    let total = n + m;
    if pos == total {
        if let Some(w) = filter.width_eq {
            if throughs != w {
                return;
            }
        }
        out.push(Diagram {
            n,
            m,
            arcs: arcs.clone(),
        });
        return;
    }
    if matched[pos] {
        let popped = if open.last().map(|&(e, _)| e) == Some(pos) {
            open.pop()
        } else {
            None
        };
        rec(n, m, filter, pos + 1, throughs, matched, arcs, open, out);
        if let Some(v) = popped {
            open.push(v);
        }
        return;
    }
    // choose a partner below the innermost open arc end
    let limit = open.last().map(|&(e, _)| e).unwrap_or(total);
    let mut q = pos + 1;
    while q < limit {
        let is_left = q < n;
        let is_right = pos >= n;
        let is_through = !is_left && !is_right;
        let mut ok = true;
        if is_left && filter.no_left_returns {
            ok = false;
        }
        if is_right && filter.no_right_returns {
            ok = false;
        }
        if is_right
            && filter.unnested_right_returns
            && open.iter().any(|&(_, rr)| rr)
        {
            ok = false;
        }
        let new_throughs = throughs + usize::from(is_through);
        if let Some(cap) = filter.width_cap() {
            if new_throughs > cap {
                ok = false;
            }
        }
        if ok {
            matched[pos] = true;
            matched[q] = true;
            arcs.push((pos, q));
            open.push((q, is_right));
            rec(n, m, filter, pos + 1, new_throughs, matched, arcs, open, out);
            open.pop();
            arcs.pop();
            matched[pos] = false;
            matched[q] = false;
        }
        q += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize, arcs: &[(usize, usize)]) -> Diagram {
        Diagram::new(n, m, arcs.to_vec()).unwrap()
    }

    #[test]
    fn make_diagram_validates() {
        // smallest return
        let cap = Diagram::new(2, 0, vec![(0, 1)]).unwrap();
        assert_eq!(cap.left_returns(), vec![(0, 1)]);
        assert_eq!(cap.width(), 0);
        // identity on one strand
        let one = Diagram::new(1, 1, vec![(0, 1)]).unwrap();
        assert!(one.is_identity());
        // nested arcs are fine, interleaved arcs cross
        assert!(Diagram::new(2, 2, vec![(0, 3), (1, 2)]).is_ok());
        assert!(matches!(
            Diagram::new(2, 2, vec![(0, 2), (1, 3)]),
            Err(DiagramError::Crossing(_, _))
        ));
        assert!(matches!(
            Diagram::new(2, 1, vec![(0, 1)]),
            Err(DiagramError::OddTotal(3))
        ));
        assert!(matches!(
            Diagram::new(2, 2, vec![(0, 1), (2, 2)]),
            Err(DiagramError::NotPerfectMatching { .. })
        ));
        assert!(matches!(
            Diagram::new(2, 2, vec![(0, 1)]),
            Err(DiagramError::NotPerfectMatching { .. })
        ));
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 0..=6 {
            for m in 0..=6 {
                let count = enumerate(n, m, &EnumFilter::all()).len();
                if (n + m) % 2 == 1 {
                    assert_eq!(count, 0);
                } else {
                    assert_eq!(count, catalan[(n + m) / 2], "({n},{m})");
                }
            }
        }
    }

    #[test]
    fn enumerate_is_sorted_and_unique() {
        for (n, m) in [(3, 3), (2, 4), (0, 6), (5, 1)] {
            let all = enumerate(n, m, &EnumFilter::all());
            for w in all.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn filters_count_known_families() {
        // no-left-return diagrams from 1 to 3 points, and the unnested subset
        assert_eq!(enumerate(1, 3, &EnumFilter::no_left()).len(), 2);
        assert_eq!(enumerate(1, 3, &EnumFilter::no_left_unnested_right()).len(), 2);
        // single width-0 diagram from 2 to 2
        let w0 = enumerate(2, 2, &EnumFilter::width(0));
        assert_eq!(w0.len(), 1);
        assert_eq!(w0[0], d(2, 2, &[(0, 1), (2, 3)]));
        // the degree-one generators are exactly the width-n no-left-return diagrams
        for n in 0..5 {
            let mut expected: Vec<Diagram> =
                (1..=n + 1).map(|i| Diagram::b_right(n, i).unwrap()).collect();
            expected.sort();
            let mut filter = EnumFilter::no_left();
            filter.width_eq = Some(n);
            assert_eq!(enumerate(n, n + 2, &filter), expected);
        }
    }

    #[test]
    fn compose_identity_neutral() {
        for n in 0..=4 {
            for m in 0..=4 {
                for x in enumerate(n, m, &EnumFilter::all()) {
                    let l = Diagram::identity(n).compose(&x).unwrap().unwrap();
                    let r = x.compose(&Diagram::identity(m)).unwrap().unwrap();
                    assert_eq!(l, x);
                    assert_eq!(r, x);
                }
            }
        }
    }

    #[test]
    fn compose_circle_and_squiggle_vanish() {
        let cup = Diagram::b_right(0, 1).unwrap();
        let cap = Diagram::b_left(0, 1).unwrap();
        // cup then cap closes a circle
        assert_eq!(cup.compose(&cap).unwrap(), None);
        // adjacent-return squiggle
        let b11 = Diagram::b_right(1, 1).unwrap();
        let b12 = Diagram::b_left(1, 2).unwrap();
        assert_eq!(b11.compose(&b12).unwrap(), None);
        // cap then cup survives with one left and one right return
        let both = cap.compose(&cup).unwrap().unwrap();
        assert_eq!(both, d(2, 2, &[(0, 1), (2, 3)]));
        assert_eq!(both.degree(), 2);
    }

    #[test]
    fn compose_signature_checked() {
        let cup = Diagram::b_right(0, 1).unwrap();
        assert!(matches!(
            cup.compose(&Diagram::identity(3)),
            Err(DiagramError::SignatureMismatch { left_m: 2, right_n: 3 })
        ));
    }

    #[test]
    fn reflect_is_involutive_and_swaps_generators() {
        for n in 0..=5 {
            assert_eq!(Diagram::identity(n).reflect(), Diagram::identity(n));
            for i in 1..=n + 1 {
                assert_eq!(
                    Diagram::b_right(n, i).unwrap().reflect(),
                    Diagram::b_left(n, i).unwrap()
                );
            }
        }
        for n in 0..=5 {
            for m in 0..=(5 - n.min(5)) {
                for x in enumerate(n, m, &EnumFilter::all()) {
                    assert_eq!(x.reflect().reflect(), x);
                }
            }
        }
    }

    #[test]
    fn stack_places_first_on_top() {
        assert_eq!(
            Diagram::identity(1).stack(&Diagram::identity(1)),
            Diagram::identity(2)
        );
        let cup = Diagram::b_right(0, 1).unwrap();
        let stacked = cup.stack(&Diagram::identity(1));
        // one through strand below a right return occupying the top two
        // right points
        assert_eq!(stacked.n_left(), 1);
        assert_eq!(stacked.m_right(), 3);
        assert_eq!(stacked.right_returns(), vec![(0, 1)]);
        assert_eq!(stacked.throughs(), vec![(0, 2)]);
    }

    #[test]
    fn add_through_top_shifts() {
        for n in 0..=4 {
            assert_eq!(
                Diagram::identity(n).add_through_top(),
                Diagram::identity(n + 1)
            );
        }
        let cap = Diagram::b_left(0, 1).unwrap();
        let shifted = cap.add_through_top();
        assert_eq!(shifted.left_returns(), vec![(1, 2)]);
        assert_eq!(shifted.width(), cap.width() + 1);
    }

    #[test]
    fn b_right_shape() {
        let cup = Diagram::b_right(0, 1).unwrap();
        assert_eq!(cup.right_returns(), vec![(0, 1)]);
        for n in 0..=4 {
            for i in 1..=n + 1 {
                let b = Diagram::b_right(n, i).unwrap();
                assert_eq!(b.degree(), 1);
                assert_eq!(b.width(), n);
                assert_eq!(b.right_returns(), vec![(i - 1, i)]);
            }
            assert!(Diagram::b_right(n, 0).is_err());
            assert!(Diagram::b_right(n, n + 2).is_err());
        }
    }

    #[test]
    fn json_round_trip() {
        let x = d(2, 2, &[(0, 3), (1, 2)]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"n":2,"m":2,"arcs":[[0,3],[1,2]]}"#);
        let back: Diagram = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
        // crossing arcs are rejected on deserialize
        let bad = r#"{"n":2,"m":2,"arcs":[[0,2],[1,3]]}"#;
        assert!(serde_json::from_str::<Diagram>(bad).is_err());
    }
}
