//! Permutations on the points `0..n`.
//!
//! Composition is left-to-right: `a.compose(&b)` applies `a` first, then `b`,
//! so `(a.compose(&b)).apply(i) == b.apply(a.apply(i))`. All text I/O uses
//! 1-based cycle notation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image table, checking that it is a
    /// bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    v + 1,
                    n
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("image {} appears twice", v + 1)));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&v| v as usize).collect()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {}",
                        p + 1,
                        degree
                    )));
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated in cycle list",
                        p + 1
                    )));
                }
                used[p] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4,5)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let zero_based: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|p| {
                        if p == 0 {
                            Err(Error::Parse("points are numbered from 1".into()))
                        } else {
                            Ok(p - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_cycles(degree, &zero_based)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `x^-1 * self * x`, so that the result maps `x(p)` to `x(self(p))`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (p, &img) in self.images.iter().enumerate() {
            images[x.images[p] as usize] = x.images[img as usize];
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included as 1-cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' in {:?}", text)));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {:?}", text)))?;
        let body = &rest[1..close];
        if body.contains('(') {
            return Err(Error::Parse(format!("nested '(' in {:?}", text)));
        }
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {:?} in {:?}", t, text)))
            })
            .collect::<Result<_>>()?;
        if points.is_empty() {
            // "()" is only meaningful as the whole identity.
            if s != "()" {
                return Err(Error::Parse(format!("empty cycle in {:?}", text)));
            }
        } else {
            cycles.push(points);
        }
        rest = &rest[close + 1..];
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert!(Permutation::parse("()", 4).unwrap().is_identity());
        assert_eq!(Permutation::parse("(1 2 3)", 3).unwrap().images(), vec![1, 2, 0]);
        assert_eq!(Permutation::parse("(1 2)(3 4)", 4).unwrap().images(), vec![1, 0, 3, 2]);
        assert_eq!(
            Permutation::parse("(1,2) (3, 4)", 4).unwrap().images(),
            vec![1, 0, 3, 2]
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("(1 x)", 3), Err(Error::Parse(_))));
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(0 1)", 3).is_err());
        assert!(Permutation::parse("(1 2)()", 3).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        let ab = a.compose(&b).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1 3 2)");
    }

    #[test]
    fn arithmetic_examples() {
        let c = Permutation::parse("(1 2 3)", 3).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&c).unwrap(), c);
        assert_eq!(c.compose(&c).unwrap().to_string(), "(1 3 2)");
        assert_eq!(c.inverse().to_string(), "(1 3 2)");
        assert_eq!(c.pow(3), id);
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.order(), 3);
        assert!(matches!(
            c.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Permutation::parse("(1 2 3)", 4).unwrap();
        let x = Permutation::parse("(3 4)", 4).unwrap();
        assert_eq!(g.conjugate_by(&x).to_string(), "(1 2 4)");
        assert_eq!(g.conjugate_by(&x), x.inverse().then(&g).then(&x));
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm()) {
            let id = Permutation::identity(p.degree());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        }

        #[test]
        fn display_round_trips(p in arb_perm()) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
        }

        #[test]
        fn power_laws(p in arb_perm(), a in -7i64..7, b in -7i64..7) {
            prop_assert_eq!(p.pow(a).then(&p.pow(b)), p.pow(a + b));
            prop_assert!(p.pow(p.order() as i64).is_identity());
        }
    }
}
