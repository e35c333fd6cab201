//! Minimally transitive groups of degree pq.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::lattice::lattice;
use crate::structure::primes::{factorize, multiplicative_order, p_part};
use crate::structure::setops;

use super::mt::is_minimally_transitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkCase {
    CyclicPq,
    #[serde(rename = "P_normal_minimal_nonabelian")]
    PNormalMinimalNonabelian,
    #[serde(rename = "Q_normal_minimal_nonabelian")]
    QNormalMinimalNonabelian,
    KopylovaOrderQtp,
    KopylovaOrderQr1Pq,
    KopylovaOrderPql,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkClassification {
    pub case: SkCase,
    pub p: usize,
    pub q: usize,
    /// Name of the exponent parameter: m, r, t or l.
    pub exponent_name: Option<String>,
    pub exponent: Option<usize>,
    pub diagnostic: Option<String>,
}

impl SkClassification {
    fn new(case: SkCase, p: usize, q: usize, exp: Option<(&str, usize)>) -> Self {
        SkClassification {
            case,
            p,
            q,
            exponent_name: exp.map(|(n, _)| n.to_string()),
            exponent: exp.map(|(_, e)| e),
            diagnostic: None,
        }
    }
}

/// Splits a degree into primes (p, q) with q < p, if it is such a product.
pub fn pq_split(degree: usize) -> Option<(usize, usize)> {
    match factorize(degree).as_slice() {
        [(q, 1), (p, 1)] => Some((*p, *q)),
        _ => None,
    }
}

/// Non-abelian with every proper subgroup abelian.
pub fn is_minimal_nonabelian(g: &PermGroup) -> Result<bool> {
    let t = g.table()?;
    if setops::is_abelian(t, &ElementSet::full(g.order())) {
        return Ok(false);
    }
    let lat = lattice(g)?;
    Ok(lat.maximal().iter().all(|&m| setops::is_abelian(t, lat.set(m))))
}

/// Sylow subgroup for `p` is normal in `g`.
fn sylow_is_normal(g: &PermGroup, p: usize) -> Result<bool> {
    let lat = lattice(g)?;
    let target = p_part(g.order(), p);
    Ok((0..lat.len()).any(|i| lat.order(i) == target && lat.is_normal(i)))
}

/// Matches a minimally transitive solvable group of degree pq against the
/// cyclic and minimal non-abelian cases when q ∤ p − 1, and against the three
/// order patterns otherwise.
pub fn classify_degree_pq(g: &PermGroup) -> Result<SkClassification> {
    let (p, q) =
        pq_split(g.degree()).ok_or_else(|| Error::inapplicable("degree is not a product of two distinct primes"))?;
    let shared = Arc::new(g.clone());
    if !shared.is_transitive() {
        return Err(Error::inapplicable("group is not transitive"));
    }
    if !is_minimally_transitive(&shared)?.holds {
        return Err(Error::inapplicable("group is not minimally transitive"));
    }
    let t = shared.table()?;
    let full = ElementSet::full(shared.order());
    if !setops::is_solvable(t, &full) {
        return Err(Error::inapplicable("group is not solvable"));
    }
    let order = shared.order();
    let pp = p_part(order, p);
    let qp = p_part(order, q);

    let mut out = if (p - 1) % q != 0 {
        let m = multiplicative_order(p, q).expect("p is a unit mod q");
        let r = multiplicative_order(q, p).expect("q is a unit mod p");
        if setops::is_cyclic(t, &full) && order == p * q {
            SkClassification::new(SkCase::CyclicPq, p, q, None)
        } else if is_minimal_nonabelian(&shared)? && qp == q && pp == p.pow(m as u32) && sylow_is_normal(&shared, p)? {
            SkClassification::new(SkCase::PNormalMinimalNonabelian, p, q, Some(("m", m)))
        } else if is_minimal_nonabelian(&shared)? && pp == p && qp == q.pow(r as u32) && sylow_is_normal(&shared, q)? {
            SkClassification::new(SkCase::QNormalMinimalNonabelian, p, q, Some(("r", r)))
        } else {
            SkClassification::new(SkCase::Unclassified, p, q, None)
        }
    } else {
        let r = exponent_of(p - 1, q);
        let l = multiplicative_order(q, p).expect("q is a unit mod p");
        let t_exp = exponent_of(qp, q);
        if pp == p && t_exp > 0 && t_exp <= r {
            SkClassification::new(SkCase::KopylovaOrderQtp, p, q, Some(("t", t_exp)))
        } else if qp == q.pow(r as u32 + 1) && pp == p.pow(q as u32) {
            SkClassification::new(SkCase::KopylovaOrderQr1Pq, p, q, Some(("r", r)))
        } else if pp == p && qp == q.pow(l as u32) {
            SkClassification::new(SkCase::KopylovaOrderPql, p, q, Some(("l", l)))
        } else {
            SkClassification::new(SkCase::Unclassified, p, q, None)
        }
    };
    if out.case == SkCase::Unclassified {
        out.diagnostic = Some(format!(
            "order {} = {}^{} * {}^{} matches no case for degree {}",
            order,
            p,
            exponent_of(pp, p),
            q,
            exponent_of(qp, q),
            p * q
        ));
    }
    Ok(out)
}

/// e with n = base^e·m and base ∤ m.
fn exponent_of(mut n: usize, base: usize) -> usize {
    let mut e = 0;
    while n > 1 && n.is_multiple_of(base) {
        n /= base;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pq_split_examples() {
        assert_eq!(pq_split(15), Some((5, 3)));
        assert_eq!(pq_split(6), Some((3, 2)));
        assert_eq!(pq_split(12), None);
        assert_eq!(pq_split(7), None);
    }

    #[test]
    fn degree_15_cases() {
        let groups = catalog::degree_15_groups();
        let expected = [
            (SkCase::CyclicPq, None),
            (SkCase::PNormalMinimalNonabelian, Some(2)),
            (SkCase::QNormalMinimalNonabelian, Some(4)),
        ];
        for ((name, g), (case, exp)) in groups.iter().zip(expected) {
            let c = classify_degree_pq(g).unwrap();
            assert_eq!(c.case, case, "{}", name);
            assert_eq!(c.exponent, exp, "{}", name);
            assert_eq!((c.p, c.q), (5, 3));
        }
    }

    #[test]
    fn kopylova_patterns() {
        // S3 regular: q = 2 divides p - 1 = 2, order 2·3 = q^1 p
        let s3 = catalog::regular(&catalog::symmetric(3));
        let c = classify_degree_pq(&s3).unwrap();
        assert_eq!(c.case, SkCase::KopylovaOrderQtp);
        assert_eq!(c.exponent, Some(1));
        // C7:C3 on 21 points, regular
        let g = catalog::regular(&catalog::metacyclic(7, 2));
        let c = classify_degree_pq(&g).unwrap();
        assert_eq!(c.case, SkCase::KopylovaOrderQtp);
    }

    #[test]
    fn preconditions() {
        let s3 = catalog::symmetric(3);
        assert!(classify_degree_pq(&s3).unwrap_err().is_inapplicable());
        // D12 on 6 points contains a transitive C6
        let d12 = catalog::dihedral(6);
        assert!(classify_degree_pq(&d12).unwrap_err().is_inapplicable());
    }
}
