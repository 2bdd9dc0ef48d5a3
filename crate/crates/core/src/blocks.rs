//! Defect groups and Brauer pairs of the blocks of a group algebra.
//!
//! The Brauer homomorphism Br_Q truncates an element of kG that is fixed by
//! conjugation by Q to its coefficients on the centralizer C_G(Q); on Q-fixed
//! elements it is an algebra homomorphism onto kC_G(Q). A defect group of a
//! block with idempotent b is a maximal p-subgroup Q with Br_Q(b) ≠ 0; block
//! theory makes that maximal class unique up to conjugacy, and this module
//! checks the uniqueness instead of assuming it.
//!
//! A Brauer pair (Q, e) of the block consists of a p-subgroup Q with
//! Br_Q(b) ≠ 0 and a block idempotent e of kC_G(Q) with e·Br_Q(b) = e. Pairs
//! are listed one per G-conjugacy class: Q runs over class representatives and
//! the idempotents over N_G(Q)-orbit representatives, which classifies pairs
//! up to simultaneous conjugacy with Q held as the class representative.

use crate::algebra::{block_idempotents, Algebra, GroupAlgebra};
use crate::field::Scalar;
use crate::group::{p_subgroup_classes, Subgroup};
use crate::matrix::Subspace;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// A block of kG with its invariants.
pub struct Block {
    /// Position in the sorted block list of the algebra.
    pub index: usize,
    /// The block idempotent, in kG coordinates.
    pub idem: Vec<Scalar>,
    /// The block algebra e·kG as a subspace of kG.
    pub subspace: Subspace,
    pub dim: usize,
    pub center_dim: usize,
    /// A defect group (the least representative of its conjugacy class).
    pub defect_group: Subgroup,
    /// d with |defect group| = p^d.
    pub defect: u32,
}

/// A Brauer pair (Q, e) of a block, with e in kG coordinates (supported on
/// C_G(Q)).
pub struct BrauerPair {
    pub subgroup: Subgroup,
    pub idem: Vec<Scalar>,
}

/// Brauer homomorphism: truncate a Q-fixed element to C_G(Q).
pub fn brauer_hom(ga: &GroupAlgebra, q: &Subgroup, x: &[Scalar]) -> Result<Vec<Scalar>> {
    if !ga.is_fixed_by(q, x) {
        return Err(Error::NotSubgroupFixed);
    }
    let c = q.centralizer();
    let mut out = ga.zero_elem();
    for &g in &c.elements {
        out[g] = x[g];
    }
    Ok(out)
}

/// The defect group of a block: the unique maximal p-subgroup class with
/// nonvanishing Brauer image. Errors with `DefectAmbiguous` if the maximal
/// class fails to be unique or fails to contain the other nonvanishing
/// classes up to conjugacy.
pub fn defect_group(ga: &GroupAlgebra, idem: &[Scalar]) -> Result<(Subgroup, u32)> {
    let p = ga.field.p();
    let classes = p_subgroup_classes(&ga.group, p);
    let mut nonvanishing = Vec::new();
    for cl in &classes {
        let br = brauer_hom(ga, &cl.rep, idem)?;
        if br.iter().any(|&c| c != 0) {
            nonvanishing.push(cl);
        }
    }
    // the trivial subgroup always survives (Br_1 is the identity)
    let max_order = nonvanishing.iter().map(|cl| cl.rep.order()).max().unwrap();
    let maximal: Vec<_> = nonvanishing
        .iter()
        .filter(|cl| cl.rep.order() == max_order)
        .collect();
    if maximal.len() != 1 {
        return Err(Error::DefectAmbiguous);
    }
    let defect_class = maximal[0];
    // every nonvanishing class must embed in some conjugate of the defect group
    for cl in &nonvanishing {
        let contained = defect_class.members.iter().any(|member| {
            cl.rep
                .elements
                .iter()
                .all(|e| member.binary_search(e).is_ok())
        });
        if !contained {
            return Err(Error::DefectAmbiguous);
        }
    }
    let mut order = defect_class.rep.order();
    let mut d = 0u32;
    while order % p as usize == 0 {
        order /= p as usize;
        d += 1;
    }
    Ok((defect_class.rep.clone(), d))
}

/// All blocks of kG with their defect groups, sorted by (dim, idempotent).
pub fn block_decomposition(ga: &GroupAlgebra) -> Result<Vec<Block>> {
    let idems = block_idempotents(ga)?;
    let n = ga.group.order;
    let mut blocks = Vec::with_capacity(idems.len());
    for (index, bi) in idems.into_iter().enumerate() {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|g| ga.mul(&bi.idem, &ga.group_elem(g)))
            .collect();
        let subspace = Subspace::from_span(ga.field.clone(), n, &rows);
        assert_eq!(subspace.dim(), bi.dim, "block span must match its rank");
        let (defect_group, defect) = defect_group(ga, &bi.idem)?;
        blocks.push(Block {
            index,
            idem: bi.idem,
            subspace,
            dim: bi.dim,
            center_dim: bi.center_dim,
            defect_group,
            defect,
        });
    }
    Ok(blocks)
}

/// The Brauer pairs of a block, one per conjugacy class, sorted by
/// (|Q|, Q's elements, idempotent coefficients). The trivial pair (1, b)
/// always comes first.
pub fn brauer_pairs(ga: &GroupAlgebra, block_idem: &[Scalar]) -> Result<Vec<BrauerPair>> {
    let p = ga.field.p();
    let mut pairs: Vec<BrauerPair> = Vec::new();
    for cl in p_subgroup_classes(&ga.group, p) {
        let q = &cl.rep;
        let br = brauer_hom(ga, q, block_idem)?;
        if br.iter().all(|&c| c == 0) {
            continue;
        }
        let c = q.centralizer();
        let (c_group, embed) = c.as_group()?;
        let kc = GroupAlgebra::new(c_group, ga.field.clone());
        let c_blocks = block_idempotents(&kc)?;
        let br_c: Vec<Scalar> = embed.iter().map(|&g| br[g]).collect();
        let mut found: BTreeSet<Vec<Scalar>> = BTreeSet::new();
        for cb in &c_blocks {
            if kc.mul(&cb.idem, &br_c) == cb.idem {
                let mut e_kg = ga.zero_elem();
                for (i, &g) in embed.iter().enumerate() {
                    e_kg[g] = cb.idem[i];
                }
                found.insert(e_kg);
            }
        }
        // fuse under the normalizer of Q: orbits, least representative each
        let nq = q.normalizer();
        let mut seen: BTreeSet<Vec<Scalar>> = BTreeSet::new();
        for e in &found {
            if seen.contains(e) {
                continue;
            }
            let mut orbit: BTreeSet<Vec<Scalar>> = BTreeSet::new();
            for &nelt in &nq.elements {
                let conj = ga.conj_by(nelt, e);
                debug_assert!(
                    found.contains(&conj),
                    "normalizer conjugation must permute the pair idempotents"
                );
                orbit.insert(conj);
            }
            let rep = orbit.iter().next().unwrap().clone();
            pairs.push(BrauerPair {
                subgroup: q.clone(),
                idem: rep,
            });
            seen.extend(orbit);
        }
    }
    pairs.sort_by(|a, b| {
        (a.subgroup.order(), &a.subgroup.elements, &a.idem).cmp(&(
            b.subgroup.order(),
            &b.subgroup.elements,
            &b.idem,
        ))
    });
    Ok(pairs)
}

/// The pair module B_(Q,e) = kC_G(Q)·e·b, a subspace of the block that is
/// fixed pointwise by conjugation by Q.
pub fn brauer_pair_module(
    ga: &GroupAlgebra,
    block_idem: &[Scalar],
    pair: &BrauerPair,
) -> Result<Subspace> {
    let c = pair.subgroup.centralizer();
    let eb = ga.mul(&pair.idem, block_idem);
    let rows: Vec<Vec<Scalar>> = c
        .elements
        .iter()
        .map(|&g| ga.mul(&ga.group_elem(g), &eb))
        .collect();
    let w = Subspace::from_span(ga.field.clone(), ga.group.order, &rows);
    // every element of Q commutes with C_G(Q), with e, and with b, so the
    // module is pointwise fixed under conjugation by Q
    for row in w.basis_rows() {
        if !ga.is_fixed_by(&pair.subgroup, row) {
            return Err(Error::NotSubgroupFixed);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::{sylow, FiniteGroup, GROUP_ORDER_CAP};
    use std::path::Path;
    use std::sync::Arc;

    fn gf(p: u64, m: u32) -> FiniteField {
        FiniteField::new(p, m).unwrap()
    }

    fn catalog_group(name: &str) -> Arc<FiniteGroup> {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog");
        crate::catalog::find_group(&dir, name).unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations("s3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], GROUP_ORDER_CAP)
            .unwrap()
    }

    fn s4() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(
            "s4",
            4,
            &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            GROUP_ORDER_CAP,
        )
        .unwrap()
    }

    #[test]
    fn s3_decomposition_with_defects() {
        let ga = GroupAlgebra::new(s3(), gf(2, 2));
        let blocks = block_decomposition(&ga).unwrap();
        let summary: Vec<(usize, usize, u32)> = blocks
            .iter()
            .map(|b| (b.dim, b.center_dim, b.defect))
            .collect();
        assert_eq!(summary, vec![(2, 2, 1), (4, 1, 0)]);
        assert_eq!(blocks[0].defect_group.order(), 2);
        assert_eq!(blocks[1].defect_group.order(), 1);

        let ga = GroupAlgebra::new(s3(), gf(3, 1));
        let blocks = block_decomposition(&ga).unwrap();
        let summary: Vec<(usize, usize, u32)> = blocks
            .iter()
            .map(|b| (b.dim, b.center_dim, b.defect))
            .collect();
        assert_eq!(summary, vec![(6, 3, 1)]);
    }

    #[test]
    fn s4_decomposition_with_defects() {
        // p = 2: a single block of full defect
        let ga = GroupAlgebra::new(s4(), gf(2, 2));
        let blocks = block_decomposition(&ga).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].dim, 24);
        assert_eq!(blocks[0].center_dim, 5);
        assert_eq!(blocks[0].defect, 3);
        // p = 3: principal of defect 1 plus two defect-zero 9-dimensional blocks
        let ga = GroupAlgebra::new(s4(), gf(3, 2));
        let blocks = block_decomposition(&ga).unwrap();
        let summary: Vec<(usize, usize, u32)> = blocks
            .iter()
            .map(|b| (b.dim, b.center_dim, b.defect))
            .collect();
        assert_eq!(summary, vec![(6, 3, 1), (9, 1, 0), (9, 1, 0)]);
    }

    #[test]
    fn principal_block_has_sylow_defect_group() {
        for (group, p, m) in [
            (s3(), 2u64, 2u32),
            (s3(), 3, 1),
            (s4(), 2, 2),
            (s4(), 3, 2),
            (catalog_group("D8"), 2, 1),
            (catalog_group("Q8"), 2, 1),
            (catalog_group("C12"), 2, 2),
            (catalog_group("C12"), 3, 2),
        ] {
            let name = group.name.clone();
            let ga = GroupAlgebra::new(group, gf(p, m));
            let blocks = block_decomposition(&ga).unwrap();
            let syl = sylow(&ga.group, p);
            let principal: Vec<&Block> = blocks
                .iter()
                .filter(|b| ga.augmentation(&b.idem) != 0)
                .collect();
            assert_eq!(principal.len(), 1, "{name}: exactly one principal block");
            assert_eq!(
                principal[0].defect_group.order(),
                syl.order(),
                "{name} p={p}: principal defect group must be Sylow"
            );
        }
    }

    #[test]
    fn abelian_blocks_all_have_full_defect() {
        let ga = GroupAlgebra::new(catalog_group("C12"), gf(2, 2));
        for b in block_decomposition(&ga).unwrap() {
            assert_eq!(b.defect, 2);
        }
        let ga = GroupAlgebra::new(catalog_group("C12"), gf(3, 2));
        for b in block_decomposition(&ga).unwrap() {
            assert_eq!(b.defect, 1);
        }
    }

    #[test]
    fn brauer_hom_is_multiplicative_on_fixed_elements() {
        let ga = GroupAlgebra::new(s3(), gf(2, 2));
        let q = {
            let t = (0..6).find(|&g| ga.group.order_of(g) == 2).unwrap();
            Subgroup::generate(&ga.group, &[t])
        };
        // class sums are fixed by everything
        let sums = ga.class_sums();
        for a in &sums {
            for b in &sums {
                let lhs = brauer_hom(&ga, &q, &ga.mul(a, b)).unwrap();
                let rhs = ga.mul(
                    &brauer_hom(&ga, &q, a).unwrap(),
                    &brauer_hom(&ga, &q, b).unwrap(),
                );
                // multiplicativity holds after truncating the product again
                let rhs = brauer_hom(&ga, &q, &rhs).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // non-fixed elements are rejected
        let x = ga.group_elem((0..6).find(|&g| ga.group.order_of(g) == 3).unwrap());
        assert!(matches!(
            brauer_hom(&ga, &q, &x),
            Err(Error::NotSubgroupFixed)
        ));
    }

    #[test]
    fn s3_brauer_pairs() {
        // principal block at p=2: the trivial pair plus one pair over the
        // transposition subgroup (whose centralizer is itself)
        let ga = GroupAlgebra::new(s3(), gf(2, 2));
        let blocks = block_decomposition(&ga).unwrap();
        let principal = &blocks[0];
        let pairs = brauer_pairs(&ga, &principal.idem).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].subgroup.order(), 1);
        assert_eq!(pairs[0].idem, principal.idem);
        assert_eq!(pairs[1].subgroup.order(), 2);
        // the defect-zero block has only its trivial pair
        let pairs = brauer_pairs(&ga, &blocks[1].idem).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].subgroup.order(), 1);

        // p=3: trivial pair plus the Sylow 3-subgroup pair
        let ga = GroupAlgebra::new(s3(), gf(3, 1));
        let blocks = block_decomposition(&ga).unwrap();
        let pairs = brauer_pairs(&ga, &blocks[0].idem).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[1].subgroup.order(), 3);
    }

    #[test]
    fn pair_modules_are_q_fixed_and_inside_the_block() {
        for (group, p, m) in [(s3(), 2u64, 2u32), (s3(), 3, 1), (catalog_group("D8"), 2, 1)] {
            let ga = GroupAlgebra::new(group, gf(p, m));
            let blocks = block_decomposition(&ga).unwrap();
            for b in &blocks {
                let pairs = brauer_pairs(&ga, &b.idem).unwrap();
                for pair in &pairs {
                    let w = brauer_pair_module(&ga, &b.idem, pair).unwrap();
                    assert!(w.dim() > 0, "pair modules are nonzero");
                    for row in w.basis_rows() {
                        assert!(b.subspace.contains(row));
                    }
                }
                // the trivial pair module is the whole block
                let w0 = brauer_pair_module(&ga, &b.idem, &pairs[0]).unwrap();
                assert_eq!(w0.dim(), b.dim);
            }
        }
    }
}
