//! Integer linear combinations of diagrams and the idempotented algebra they
//! span.
//!
//! The algebra decomposes into blocks indexed by pairs of idempotents; an
//! [`AlgebraElement`] always lives in a single block, i.e. all of its terms
//! share one `(n, m)` signature. Multiplication extends diagram composition
//! bilinearly, with vanishing compositions contributing nothing. The grading
//! degree of a diagram is its number of returns, and diagrams of width at
//! most `k` span a two-sided ideal.

use crate::diagram::{enumerate, Diagram, DiagramError, EnumFilter};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// An integer combination of diagrams sharing the signature `(n, m)`.
///
/// The zero element is the empty combination; coefficients stored are never
/// zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    m: usize,
    terms: BTreeMap<Diagram, i64>,
}

impl AlgebraElement {
    pub fn zero(n: usize, m: usize) -> Self {
        AlgebraElement {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::from_term(1, d)
    }

    pub fn from_term(coeff: i64, d: Diagram) -> Self {
        let mut el = AlgebraElement::zero(d.n_left(), d.m_right());
        el.add_term(coeff, d);
        el
    }

    /// The idempotent `1_n`.
    pub fn unit(n: usize) -> Self {
        Self::from_diagram(Diagram::identity(n))
    }

    pub fn n_left(&self) -> usize {
        self.n
    }

    pub fn m_right(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, d: &Diagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, coeff: i64, d: Diagram) {
        assert_eq!(
            (d.n_left(), d.m_right()),
            (self.n, self.m),
            "term signature must match the element"
        );
        if coeff == 0 {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!((self.n, self.m), (other.n, other.m));
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(c, d.clone());
        }
        out
    }

    pub fn scale(&self, k: i64) -> AlgebraElement {
        if k == 0 {
            return AlgebraElement::zero(self.n, self.m);
        }
        AlgebraElement {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * k)).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(-1)
    }

    /// Bilinear extension of diagram composition; compositions that close a
    /// circle or a squiggle contribute nothing.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement, DiagramError> {
        if self.m != other.n {
            return Err(DiagramError::SignatureMismatch {
                left_m: self.m,
                right_n: other.n,
            });
        }
        let mut out = AlgebraElement::zero(self.n, other.m);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some(d) = a.compose(b)? {
                    out.add_term(ca * cb, d);
                }
            }
        }
        Ok(out)
    }

    /// Mirror image; an anti-homomorphism of the algebra.
    pub fn reflect(&self) -> AlgebraElement {
        AlgebraElement {
            n: self.m,
            m: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, &c)| (d.reflect(), c))
                .collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    coeff: i64,
    diagram: Diagram,
}

#[derive(Deserialize)]
struct RawElement {
    n: usize,
    m: usize,
    terms: Vec<RawTerm>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("AlgebraElement", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        let terms: Vec<RawTerm> = self
            .terms()
            .map(|(d, c)| RawTerm {
                coeff: c,
                diagram: d.clone(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawElement::deserialize(deserializer)?;
        let mut el = AlgebraElement::zero(raw.n, raw.m);
        for t in raw.terms {
            if (t.diagram.n_left(), t.diagram.m_right()) != (raw.n, raw.m) {
                return Err(serde::de::Error::custom(
                    "term signature differs from element signature",
                ));
            }
            el.add_term(t.coeff, t.diagram);
        }
        Ok(el)
    }
}

/// Basis of the hom block from `n` to `m`: all diagrams, canonical order.
pub fn hom_basis(n: usize, m: usize) -> Vec<Diagram> {
    enumerate(n, m, &EnumFilter::all())
}

/// Basis of the degree-`g` graded piece of the block from `n` to `m`.
/// A diagram of signature `(n, m)` has degree `g` exactly when its width is
/// `(n + m)/2 - g`.
pub fn graded_component(n: usize, m: usize, degree: usize) -> Vec<Diagram> {
    if (n + m) % 2 == 1 || (n + m) / 2 < degree {
        return Vec::new();
    }
    let w = (n + m) / 2 - degree;
    if w > n.min(m) {
        return Vec::new();
    }
    enumerate(n, m, &EnumFilter::width(w))
}

/// Basis of the width-filtered piece: diagrams from `n` to `m` with at most
/// `k` through strands. These span a two-sided ideal of the algebra.
pub fn width_ideal_basis(n: usize, m: usize, k: usize) -> Vec<Diagram> {
    enumerate(n, m, &EnumFilter::width_at_most(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_are_orthogonal_idempotents() {
        for n in 0..=4 {
            for m in 0..=4 {
                if n == m {
                    let u = AlgebraElement::unit(n);
                    assert_eq!(u.multiply(&u).unwrap(), u);
                } else {
                    let prod = AlgebraElement::unit(n).multiply(&AlgebraElement::unit(m));
                    assert!(prod.is_err() || prod.unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn unit_acts_as_identity() {
        for x in hom_basis(2, 4) {
            let el = AlgebraElement::from_diagram(x.clone());
            assert_eq!(AlgebraElement::unit(2).multiply(&el).unwrap(), el);
            assert_eq!(el.multiply(&AlgebraElement::unit(4)).unwrap(), el);
        }
    }

    #[test]
    fn adjacent_generator_products_vanish() {
        // both compositions from one strand to three and back die: one closes
        // a circle, the other a squiggle
        let sum = AlgebraElement::from_diagram(Diagram::b_right(1, 1).unwrap())
            .add(&AlgebraElement::from_diagram(Diagram::b_right(1, 2).unwrap()));
        let down = AlgebraElement::from_diagram(Diagram::b_left(1, 1).unwrap());
        assert!(sum.multiply(&down).unwrap().is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let d = Diagram::identity(2);
        let mut el = AlgebraElement::from_term(3, d.clone());
        el.add_term(-3, d);
        assert!(el.is_zero());
        assert_eq!(el.num_terms(), 0);
    }

    #[test]
    fn degree_zero_and_one_components() {
        for n in 0..=5 {
            assert_eq!(graded_component(n, n, 0), vec![Diagram::identity(n)]);
            assert_eq!(graded_component(n, n + 2, 1).len(), n + 1);
            if n >= 2 {
                // no degree-one elements between equal weights
                assert!(graded_component(n, n, 1).is_empty());
            }
        }
        assert_eq!(width_ideal_basis(2, 2, 0).len(), 1);
    }

    #[test]
    fn hom_block_dimensions_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14];
        for n in 0..=4 {
            for m in 0..=4 {
                let dim = hom_basis(n, m).len();
                if (n + m) % 2 == 0 {
                    assert_eq!(dim, catalan[(n + m) / 2]);
                    let graded: usize = (0..=(n + m) / 2)
                        .map(|g| graded_component(n, m, g).len())
                        .sum();
                    assert_eq!(graded, dim);
                } else {
                    assert_eq!(dim, 0);
                }
            }
        }
    }

    #[test]
    fn element_json_schema() {
        let el = AlgebraElement::from_term(-2, Diagram::identity(1));
        let text = serde_json::to_string(&el).unwrap();
        assert_eq!(
            text,
            r#"{"n":1,"m":1,"terms":[{"coeff":-2,"diagram":{"n":1,"m":1,"arcs":[[0,1]]}}]}"#
        );
        let back: AlgebraElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, el);
    }
}
