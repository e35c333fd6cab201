//! Named small groups used by the verification harness and the tests.

use std::sync::Arc;

use crate::error::Result;
use crate::group::{GroupRef, PermGroup};
use crate::perm::Permutation;
use crate::structure::{coset_action, SubgroupHandle};

pub struct CatalogEntry {
    pub name: String,
    pub group: GroupRef,
}

fn from_images(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructed images form a permutation")
}

fn build(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("catalog groups fit the order cap")
}

pub fn cyclic(n: usize) -> PermGroup {
    build(n, vec![from_images((0..n).map(|i| (i + 1) % n).collect())])
}

/// Dihedral group of order 2n acting on the n vertices of a polygon.
pub fn dihedral(n: usize) -> PermGroup {
    let rot = from_images((0..n).map(|i| (i + 1) % n).collect());
    let refl = from_images((0..n).map(|i| (n - i) % n).collect());
    build(n, vec![rot, refl])
}

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = vec![];
    if n > 1 {
        gens.push(from_images((0..n).map(|i| (i + 1) % n).collect()));
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("transposition"));
    }
    build(n, gens)
}

pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).expect("3-cycle"))
        .collect();
    build(n, gens)
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion() -> PermGroup {
    let i = Permutation::parse("(1 2 3 4)(5 6 7 8)", 8).expect("valid");
    let j = Permutation::parse("(1 5 3 7)(2 8 4 6)", 8).expect("valid");
    build(8, vec![i, j])
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (da, db) = (a.degree(), b.degree());
    let n = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(from_images(
            (0..n).map(|i| if i < da { g.apply(i) } else { i }).collect(),
        ));
    }
    for g in b.generators() {
        gens.push(from_images(
            (0..n).map(|i| if i < da { i } else { da + g.apply(i - da) }).collect(),
        ));
    }
    build(n, gens)
}

/// Right regular representation.
pub fn regular(g: &PermGroup) -> PermGroup {
    let n = g.order();
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            from_images(
                (0..n)
                    .map(|i| {
                        g.index_of(&g.element(i).compose(s).expect("same degree"))
                            .expect("closed")
                    })
                    .collect(),
            )
        })
        .collect();
    build(n, gens)
}

/// The group x ↦ kx + b on Z/m for b ∈ Z/m and k in the subgroup generated by `k`.
pub fn metacyclic(m: usize, k: usize) -> PermGroup {
    let shift = from_images((0..m).map(|x| (x + 1) % m).collect());
    let scale = from_images((0..m).map(|x| (k * x) % m).collect());
    build(m, vec![shift, scale])
}

/// Translations of F_p^dim together with the given matrices, acting on the
/// p^dim vectors. Vectors are numbered in base p, coordinate 0 least significant.
pub fn affine(p: usize, dim: usize, matrices: &[Vec<Vec<usize>>]) -> PermGroup {
    let n = p.pow(dim as u32);
    let decode = |x: usize| -> Vec<usize> { (0..dim).map(|i| (x / p.pow(i as u32)) % p).collect() };
    let encode = |v: &[usize]| -> usize { v.iter().enumerate().map(|(i, &c)| c * p.pow(i as u32)).sum() };
    let mut gens = Vec::new();
    for i in 0..dim {
        gens.push(from_images(
            (0..n)
                .map(|x| {
                    let mut v = decode(x);
                    v[i] = (v[i] + 1) % p;
                    encode(&v)
                })
                .collect(),
        ));
    }
    for m in matrices {
        gens.push(from_images(
            (0..n)
                .map(|x| {
                    let v = decode(x);
                    let w: Vec<usize> = m
                        .iter()
                        .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<usize>() % p)
                        .collect();
                    encode(&w)
                })
                .collect(),
        ));
    }
    build(n, gens)
}

/// Companion matrix of the monic polynomial x^d + c[d-1] x^(d-1) + … + c[0] over F_p.
pub fn companion(p: usize, coeffs: &[usize]) -> Vec<Vec<usize>> {
    let d = coeffs.len();
    (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    if c == d - 1 {
                        (p - coeffs[r] % p) % p
                    } else if r == c + 1 {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// The image of the coset action of `g` on the cosets of `a`.
pub fn coset_image(g: &GroupRef, a: &SubgroupHandle) -> Result<PermGroup> {
    let rec = coset_action(g, a)?;
    Ok((*rec.image).clone())
}

/// (C5 × C5) ⋊ C3, the affine group of F_5^2 extended by a matrix of order 3.
pub fn c5_squared_by_c3() -> PermGroup {
    affine(5, 2, &[companion(5, &[1, 1])])
}

/// C3^4 ⋊ C5, the affine group of F_3^4 extended by a matrix of order 5.
pub fn c3_fourth_by_c5() -> PermGroup {
    affine(3, 4, &[companion(3, &[1, 1, 1, 1])])
}

/// A core-free subgroup of the translation group of `affine_group` of the
/// given order, spanned by the first basis vectors.
pub fn translation_subspace(g: &GroupRef, p: usize, dim: usize) -> SubgroupHandle {
    let gens: Vec<Permutation> = g.generators()[..dim].to_vec();
    let h = SubgroupHandle::generated(g, &gens).expect("generators belong to g");
    debug_assert_eq!(h.order(), p.pow(dim as u32));
    h
}

/// The three degree-15 groups of the (5, 3) classification, as permutation groups.
pub fn degree_15_groups() -> Vec<(String, PermGroup)> {
    let c75: GroupRef = Arc::new(c5_squared_by_c3());
    let a75 = translation_subspace(&c75, 5, 1);
    let c405: GroupRef = Arc::new(c3_fourth_by_c5());
    let a405 = translation_subspace(&c405, 3, 3);
    vec![
        ("C15".to_string(), cyclic(15)),
        ("C5^2:C3".to_string(), coset_image(&c75, &a75).expect("small group")),
        ("C3^4:C5".to_string(), coset_image(&c405, &a405).expect("small group")),
    ]
}

/// Every named group in the catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 30] {
        out.push((format!("C{}", n), cyclic(n)));
    }
    for n in [3, 4, 5, 6, 7, 8, 10, 12] {
        out.push((format!("D{}", 2 * n), dihedral(n)));
    }
    let c2 = cyclic(2);
    let c3 = cyclic(3);
    let v4 = direct_product(&c2, &c2);
    out.push(("C2^2".into(), v4.clone()));
    out.push(("C2^3".into(), direct_product(&v4, &c2)));
    out.push(("C2^4".into(), direct_product(&v4, &v4)));
    out.push(("C2xC4".into(), direct_product(&c2, &cyclic(4))));
    out.push(("C4^2".into(), direct_product(&cyclic(4), &cyclic(4))));
    out.push(("C3^2".into(), direct_product(&c3, &c3)));
    out.push(("C2xC6".into(), direct_product(&c2, &cyclic(6))));
    out.push(("C3xS3".into(), direct_product(&c3, &symmetric(3))));
    out.push(("S3xS3".into(), direct_product(&symmetric(3), &symmetric(3))));
    out.push(("C2xD8".into(), direct_product(&c2, &dihedral(4))));
    out.push(("Q8".into(), quaternion()));
    out.push(("C2xQ8".into(), direct_product(&c2, &quaternion())));
    out.push(("A4".into(), alternating(4)));
    out.push(("C2xA4".into(), direct_product(&c2, &alternating(4))));
    out.push(("S4".into(), symmetric(4)));
    out.push(("C2xS4".into(), direct_product(&c2, &symmetric(4))));
    out.push(("A5".into(), alternating(5)));
    out.push(("S5".into(), symmetric(5)));
    out.push(("C7:C3".into(), metacyclic(7, 2)));
    out.push(("C5:C4".into(), metacyclic(5, 2)));
    out.push(("C7:C6".into(), metacyclic(7, 3)));
    out.push(("C9:C3".into(), metacyclic(9, 4)));
    out.push(("C9:C6".into(), metacyclic(9, 2)));
    out.push(("C11:C5".into(), metacyclic(11, 3)));
    out.push(("C13:C3".into(), metacyclic(13, 3)));
    out.push(("C13:C4".into(), metacyclic(13, 5)));
    out.push(("C3^2:C4".into(), affine(3, 2, &[vec![vec![0, 2], vec![1, 0]]])));
    out.push(("C3^2:C8".into(), affine(3, 2, &[companion(3, &[2, 2])])));
    out.push((
        "C3^2:Q8".into(),
        affine(3, 2, &[vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![1, 2]]]),
    ));
    out.push(("C2^2:C9".into(), c2_squared_by_c9()));
    out.push(("C2^3:C7".into(), affine(2, 3, &[companion(2, &[1, 1, 0])])));
    out.push(("C2^4:C5".into(), affine(2, 4, &[companion(2, &[1, 1, 1, 1])])));
    out.push(("C5^2:C3".into(), c5_squared_by_c3()));
    out.push(("C3^4:C5".into(), c3_fourth_by_c5()));
    out.into_iter()
        .map(|(name, g)| CatalogEntry {
            name,
            group: Arc::new(g),
        })
        .collect()
}

/// C2^2 ⋊ C9 with the generator of C9 acting through C3: a group with a
/// normal Sylow 2-subgroup and non-trivial Frattini subgroup.
fn c2_squared_by_c9() -> PermGroup {
    // points (v, i) for v ∈ F_2^2, i ∈ Z/9; numbered 4i + v
    let m = companion(2, &[1, 1]);
    let apply = |v: usize| -> usize {
        let (a, b) = (v & 1, (v >> 1) & 1);
        let w0 = (m[0][0] * a + m[0][1] * b) % 2;
        let w1 = (m[1][0] * a + m[1][1] * b) % 2;
        w0 | (w1 << 1)
    };
    let t = from_images((0..36).map(|x| 4 * (x / 4) + ((x % 4) ^ 1)).collect());
    let s = from_images((0..36).map(|x| 4 * ((x / 4 + 1) % 9) + apply(x % 4)).collect());
    build(36, vec![t, s])
}

pub fn catalog_up_to(max_order: usize) -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.group.order() <= max_order).collect()
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
