//! Homogeneous polynomials in x, y, z with exact coefficients.

use std::fmt;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{count_of_degree, Monomial};

/// A homogeneous polynomial. Terms are sorted descending, coefficients are
/// nonzero and monomials distinct. The zero polynomial has no terms but keeps
/// its degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    degree: u32,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, degree: u32) -> Self {
        Self {
            field,
            degree,
            terms: Vec::new(),
        }
    }

    pub fn monomial(field: F, mono: Monomial, coeff: F::Elem) -> Self {
        let degree = mono.degree();
        let terms = if field.is_zero(&coeff) {
            Vec::new()
        } else {
            vec![(mono, coeff)]
        };
        Self {
            field,
            degree,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(field: F, terms: Vec<(Monomial, F::Elem)>) -> Result<Self> {
        let Some(degree) = terms.first().map(|(m, _)| m.degree()) else {
            return Ok(Self::zero(field, 0));
        };
        if let Some((bad, _)) = terms.iter().find(|(m, _)| m.degree() != degree) {
            return Err(Error::NotHomogeneous(format!(
                "term `{bad}` has degree {} but the first term has degree {degree}",
                bad.degree()
            )));
        }
        let mut dense = vec![field.zero(); count_of_degree(degree)];
        for (m, c) in terms {
            let i = m.index_in_degree();
            dense[i] = field.add(&dense[i], &c);
        }
        Ok(Self::from_dense(field, degree, dense))
    }

    /// Builds a polynomial from a coefficient vector indexed by
    /// [`Monomial::index_in_degree`].
    pub fn from_dense(field: F, degree: u32, dense: Vec<F::Elem>) -> Self {
        let monos = Monomial::all_of_degree(degree);
        let terms = monos
            .into_iter()
            .zip(dense)
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Self {
            field,
            degree,
            terms,
        }
    }

    pub fn to_dense(&self) -> Vec<F::Elem> {
        let mut dense = vec![self.field.zero(); count_of_degree(self.degree)];
        for (m, c) in &self.terms {
            dense[m.index_in_degree()] = c.clone();
        }
        dense
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, mono: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if subtract { other.neg() } else { other.clone() });
        }
        if self.degree != other.degree {
            return Err(Error::NotHomogeneous(format!(
                "cannot add polynomials of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((a, _)), Some((b, _))) => a.cmp(b),
                (Some(_), None) => std::cmp::Ordering::Greater,
                (None, Some(_)) => std::cmp::Ordering::Less,
                (None, None) => unreachable!(),
            };
            match take_left {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((*m, if subtract { f.neg(c) } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (m, a) = &self.terms[i];
                    let b = &other.terms[j].1;
                    let c = if subtract { f.sub(a, b) } else { f.add(a, b) };
                    if !f.is_zero(&c) {
                        out.push((*m, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Self {
            field: f,
            degree: self.degree,
            terms: out,
        })
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            field: f,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.degree);
        }
        Self {
            field: f,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        let degree = self.degree + other.degree;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f, degree);
        }
        let mut dense = vec![f.zero(); count_of_degree(degree)];
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let i = a.mul(b).index_in_degree();
                dense[i] = f.add(&dense[i], &f.mul(ca, cb));
            }
        }
        Self::from_dense(f, degree, dense)
    }

    /// Multiplication by a monomial keeps the term order.
    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Self {
            field: self.field,
            degree: self.degree + mono.degree(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if self.field.is_one(c) => self.clone(),
            Some(c) => self.scale(&self.field.inv(c)),
        }
    }

    pub fn to_machine_string(&self) -> String {
        self.render(true)
    }

    pub fn to_human_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, machine: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = self.field.signed_text(c);
            if negative {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let is_unit = mag == "1";
            if *m == Monomial::ONE {
                out.push_str(&mag);
                continue;
            }
            if !is_unit {
                out.push_str(&mag);
                if machine {
                    out.push('*');
                }
            }
            if machine {
                m.write_machine(&mut out);
            } else {
                m.write_human(&mut out);
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_machine_string())
    }
}

/// Renders generators as `matrix{{g1,g2,...}}`.
pub fn matrix_string<F: Field>(gens: &[Polynomial<F>]) -> String {
    let body: Vec<String> = gens.iter().map(|g| g.to_machine_string()).collect();
    format!("matrix{{{{{}}}}}", body.join(","))
}

/// Renders generators space separated in human form.
pub fn human_list<F: Field>(gens: &[Polynomial<F>]) -> String {
    let body: Vec<String> = gens.iter().map(|g| g.to_human_string()).collect();
    body.join(" ")
}

fn parse_err(token: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        message: message.into(),
    }
}

/// Parses one polynomial in the machine grammar, e.g. `x^2-3*y*z`.
pub fn parse_polynomial<F: Field>(text: &str, field: F) -> Result<Polynomial<F>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err(text, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos > 0 {
            return Err(parse_err(&s[pos..], "expected `+` or `-`"));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(parse_err(&s[start.saturating_sub(1)..], "missing term"));
        }
        let (mono, mut coeff) = parse_term(term, field)?;
        if negative {
            coeff = field.neg(&coeff);
        }
        terms.push((mono, coeff));
    }
    Polynomial::from_terms(field, terms)
}

fn parse_term<F: Field>(term: &str, field: F) -> Result<(Monomial, F::Elem)> {
    let mut coeff = field.one();
    let mut exp = [0u16; 3];
    for (k, factor) in term.split('*').enumerate() {
        if factor.is_empty() {
            return Err(parse_err(term, "empty factor"));
        }
        let first = factor.as_bytes()[0];
        if first.is_ascii_digit() {
            if k != 0 {
                return Err(parse_err(factor, "coefficient must come first"));
            }
            coeff = field
                .parse_literal(factor)
                .ok_or_else(|| parse_err(factor, "bad coefficient"))?;
            continue;
        }
        let var = match first {
            b'x' => 0,
            b'y' => 1,
            b'z' => 2,
            _ => return Err(parse_err(factor, "unknown symbol")),
        };
        let rest = &factor[1..];
        let e: u16 = if rest.is_empty() {
            1
        } else if let Some(digits) = rest.strip_prefix('^') {
            digits
                .parse()
                .map_err(|_| parse_err(factor, "bad exponent"))?
        } else {
            return Err(parse_err(factor, "unknown symbol"));
        };
        exp[var] += e;
    }
    if field.is_zero(&coeff) {
        return Err(parse_err(term, "zero coefficient"));
    }
    Ok((Monomial::new(exp[0], exp[1], exp[2]), coeff))
}

/// Parses `matrix{{p1,p2,...}}` into its entries.
pub fn parse_matrix<F: Field>(text: &str, field: F) -> Result<Vec<Polynomial<F>>> {
    let t = text.trim();
    let body = t
        .strip_prefix("matrix{{")
        .and_then(|r| r.strip_suffix("}}"))
        .ok_or_else(|| parse_err(t, "expected matrix{{...}}"))?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|p| parse_polynomial(p, field)).collect()
}

/// Random homogeneous form of degree `d`.
///
/// With `num_terms > 0` picks that many distinct monomials (all of them if
/// fewer exist) with random nonzero coefficients. With `num_terms == 0`
/// every monomial gets an independent uniform coefficient, resampling if the
/// result is zero.
pub fn random_homogeneous<F: Field, R: Rng + ?Sized>(
    field: F,
    d: u32,
    num_terms: usize,
    rng: &mut R,
) -> Result<Polynomial<F>> {
    if d == 0 {
        return Err(Error::Degree(0, "random forms must have positive degree".into()));
    }
    let total = count_of_degree(d);
    let mut dense = vec![field.zero(); total];
    if num_terms > 0 {
        let t = num_terms.min(total);
        for i in index::sample(rng, total, t) {
            dense[i] = field.random_nonzero(rng);
        }
    } else {
        loop {
            for c in dense.iter_mut() {
                *c = field.random(rng);
            }
            if dense.iter().any(|c| !field.is_zero(c)) {
                break;
            }
        }
    }
    Ok(Polynomial::from_dense(field, d, dense))
}

/// A homogeneous ideal given by generators. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    field: F,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(field: F, generators: Vec<Polynomial<F>>) -> Self {
        Self {
            field,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn zero(field: F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn parse(text: &str, field: F) -> Result<Self> {
        Ok(Self::new(field, parse_matrix(text, field)?))
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn p(s: &str) -> Polynomial<PrimeField> {
        parse_polynomial(s, gf3()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let f = p("x+y").mul(&p("x-y"));
        assert_eq!(f, p("x^2-y^2"));
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn additive_inverse_is_zero() {
        let f = p("x^2+y*z-z^2");
        let g = f.add(&f.scale(&gf3().from_i64(-1))).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.to_machine_string(), "0");
    }

    #[test]
    fn monomial_product() {
        let f = p("x*y").mul(&p("z^2"));
        assert_eq!(f.to_machine_string(), "x*y*z^2");
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn mismatched_degrees_rejected() {
        assert!(matches!(p("x").add(&p("y^2")), Err(Error::NotHomogeneous(_))));
        assert!(p("x").add(&Polynomial::zero(gf3(), 3)).is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("y*z").to_machine_string(), "y*z");
        assert_eq!(p("x^2-y^2").to_human_string(), "x2-y2");
        assert_eq!(p("x*y+z^2").to_human_string(), "xy+z2");
        let f5 = PrimeField::new(5).unwrap();
        let g = parse_polynomial("3*x*y^2+z^3", f5).unwrap();
        assert_eq!(g.to_machine_string(), "-2*x*y^2+z^3");
        assert_eq!(g.to_human_string(), "-2xy2+z3");
        let q = parse_polynomial("1/2*x-3*y", Rationals).unwrap();
        assert_eq!(q.to_machine_string(), "1/2*x-3*y");
    }

    #[test]
    fn parse_examples() {
        let f = p("x^2+z^2");
        assert_eq!(f.num_terms(), 2);
        let gens = parse_matrix("matrix{{z^2,y*z,x*z,x*y,x^2-y^2}}", gf3()).unwrap();
        assert_eq!(gens.len(), 5);
        assert!(matches!(
            parse_polynomial("x^2+y^3", gf3()),
            Err(Error::NotHomogeneous(_))
        ));
        match parse_polynomial("x^2+w", gf3()) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "w"),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x^^2", gf3()).is_err());
        assert!(parse_polynomial("x+", gf3()).is_err());
        assert!(parse_matrix("[x,y]", gf3()).is_err());
    }

    #[test]
    fn random_term_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_homogeneous(gf3(), 2, 1, &mut rng).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.degree(), 2);
        let f = random_homogeneous(gf3(), 2, 6, &mut rng).unwrap();
        assert_eq!(f.num_terms(), 6);
        let f = random_homogeneous(gf3(), 2, 9, &mut rng).unwrap();
        assert_eq!(f.num_terms(), 6);
        for _ in 0..50 {
            let f = random_homogeneous(gf3(), 3, 0, &mut rng).unwrap();
            assert!((1..=10).contains(&f.num_terms()));
        }
        assert!(random_homogeneous(gf3(), 0, 1, &mut rng).is_err());
    }
}
