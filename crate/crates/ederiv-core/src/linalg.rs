//! Exact row-echelon families of polynomials.
//!
//! A [`TruncatedSpace`] is a finite-dimensional window onto a subspace of
//! `K[x,y]`: rows are kept fully reduced against each other with distinct
//! lex-leading monomials, every pivot coefficient is one, and reduction
//! always eliminates against the lex-greatest pivot first, so bases and
//! membership witnesses are deterministic.

use std::collections::BTreeMap;

use crate::poly::{BiPoly, Monomial};

#[derive(Clone)]
pub struct TruncatedSpace {
    degree_bound: Option<u64>,
    rows: Vec<BiPoly>,
    pivots: BTreeMap<Monomial, usize>,
}

impl TruncatedSpace {
    pub fn new(degree_bound: Option<u64>) -> Self {
        TruncatedSpace {
            degree_bound,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn degree_bound(&self) -> Option<u64> {
        self.degree_bound
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Pivot monomials in descending lex order.
    pub fn pivot_monomials(&self) -> Vec<Monomial> {
        self.pivots.keys().rev().copied().collect()
    }

    /// Rows in descending order of their pivots.
    pub fn rows(&self) -> Vec<&BiPoly> {
        self.pivots.values().rev().map(|&i| &self.rows[i]).collect()
    }

    /// Fully reduce `f` against the basis; the result has no pivot monomial
    /// in its support.
    pub fn reduce(&self, f: &BiPoly) -> BiPoly {
        let mut rem = f.clone();
        loop {
            // eliminate against the lex-greatest pivot present in rem
            let hit = rem
                .support()
                .rev()
                .find_map(|m| self.pivots.get(m).map(|&row| (*m, row)));
            match hit {
                Some((m, row)) => {
                    let c = rem.coeff(&m).expect("monomial present").clone();
                    rem = rem.sub(&self.rows[row].scale(&c));
                }
                None => return rem,
            }
        }
    }

    /// Insert `f` into the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, f: &BiPoly) -> bool {
        let rem = self.reduce(f);
        let Some((lead, c)) = rem.leading_term() else {
            return false;
        };
        let row = rem.scale(&c.inv());
        // back-reduce existing rows so the basis stays fully reduced
        let idx = self.rows.len();
        for existing in self.rows.iter_mut() {
            if let Some(k) = existing.coeff(&lead).cloned() {
                *existing = existing.sub(&row.scale(&k));
            }
        }
        self.rows.push(row);
        self.pivots.insert(lead, idx);
        true
    }

    pub fn contains(&self, f: &BiPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Whether every row of `other` lies in this span.
    pub fn contains_space(&self, other: &TruncatedSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Equality as subspaces, by mutual containment.
    pub fn same_span(&self, other: &TruncatedSpace) -> bool {
        self.dim() == other.dim() && self.contains_space(other) && other.contains_space(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_poly;

    fn p(text: &str) -> BiPoly {
        parse_poly(text, &FieldSpec::rationals()).expect("parse")
    }

    #[test]
    fn insert_tracks_dimension() {
        let mut s = TruncatedSpace::new(None);
        assert!(s.insert(&p("x + y")));
        assert!(s.insert(&p("x - y")));
        assert!(!s.insert(&p("2*x")));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&p("y")));
        assert!(!s.contains(&p("x^2")));
    }

    #[test]
    fn reduction_is_complete() {
        let mut s = TruncatedSpace::new(None);
        s.insert(&p("x^2 + y"));
        s.insert(&p("y"));
        // x^2 = (x^2 + y) - y is in the span even though it is not a row
        assert!(s.contains(&p("x^2")));
        let rem = s.reduce(&p("x^2 + x"));
        assert_eq!(rem, p("x"));
    }

    #[test]
    fn same_span_ignores_presentation() {
        let mut a = TruncatedSpace::new(None);
        a.insert(&p("x + y"));
        a.insert(&p("y"));
        let mut b = TruncatedSpace::new(None);
        b.insert(&p("x"));
        b.insert(&p("x + 2*y"));
        assert!(a.same_span(&b));
    }
}
