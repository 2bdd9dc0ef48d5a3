//! Property-based tests: algebraic invariants that must hold for arbitrary
//! inputs, exercised over randomly drawn small fields, matrices, and groups.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use proptest::prelude::*;

use blockhh::cohomology::{cohomology_dims, conjugation_module, trivial_resolution, KGModule};
use blockhh::resolution::RESOLUTION_CAP;
use blockhh::{
    block_idempotents, brauer_hom, Algebra, FiniteField, FiniteGroup, GroupAlgebra, Mat, Scalar,
    Subgroup, Subspace,
};

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

fn catalog_group(name: &str) -> Arc<FiniteGroup> {
    blockhh::catalog::find_group(&catalog_dir(), name).unwrap()
}

const GROUP_POOL: [&str; 9] = ["C2", "C3", "C4", "C2xC2", "C5", "S3", "C6", "D8", "Q8"];

fn arb_field() -> impl Strategy<Value = FiniteField> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 1u32..=2)
        .prop_map(|(p, m)| FiniteField::new(p, m).unwrap())
}

/// A matrix with entries drawn uniformly from the field.
fn arb_matrix() -> impl Strategy<Value = Mat> {
    (arb_field(), 1usize..=5, 1usize..=5).prop_flat_map(|(f, rows, cols)| {
        proptest::collection::vec(0u64..f.order(), rows * cols).prop_map(move |entries| {
            let mut m = Mat::zeros(f.clone(), rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, entries[r * cols + c]);
                }
            }
            m
        })
    })
}

fn arb_vectors(max_count: usize) -> impl Strategy<Value = (FiniteField, usize, Vec<Vec<Scalar>>)> {
    (arb_field(), 1usize..=5, 1usize..=max_count).prop_flat_map(|(f, ambient, count)| {
        proptest::collection::vec(
            proptest::collection::vec(0u64..f.order(), ambient),
            count,
        )
        .prop_map(move |rows| (f.clone(), ambient, rows))
    })
}

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose(m in arb_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn nullspace_is_annihilated_and_rank_nullity_holds(m in arb_matrix()) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.dim(), m.cols);
        for v in ns.basis_rows() {
            let image = m.mul_vec(v);
            prop_assert!(image.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn solve_returns_a_preimage(m in arb_matrix(), seed in proptest::collection::vec(0u64..32, 5)) {
        let f = m.field().clone();
        let x: Vec<Scalar> = (0..m.cols).map(|i| seed[i % seed.len()] % f.order()).collect();
        let b = m.mul_vec(&x);
        let solved = m.solve(&b).expect("constructed system is consistent");
        prop_assert_eq!(m.mul_vec(&solved), b);
    }

    #[test]
    fn echelon_basis_is_canonical(
        (f, ambient, rows) in arb_vectors(4),
        perm_seed in 0usize..24,
        scale_seed in 1u64..1000,
    ) {
        let space = Subspace::from_span(f.clone(), ambient, &rows);
        // present the same span in a different order with nonzero rescalings
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for i in 0..n {
            let j = (perm_seed + i * 7) % n;
            shuffled.swap(i, j);
        }
        let nonzero = 1 + (scale_seed % (f.order() - 1));
        for row in shuffled.iter_mut() {
            for c in row.iter_mut() {
                *c = f.mul(*c, nonzero);
            }
        }
        let space2 = Subspace::from_span(f, ambient, &shuffled);
        prop_assert_eq!(space, space2);
    }

    #[test]
    fn sum_and_intersection_dimensions_are_modular(
        (f, ambient, rows) in arb_vectors(6),
        split in 1usize..=5,
    ) {
        let cut = split.min(rows.len());
        let u = Subspace::from_span(f.clone(), ambient, &rows[..cut]);
        let v = Subspace::from_span(f.clone(), ambient, &rows[cut.saturating_sub(1)..]);
        let sum = u.sum(&v);
        let meet = u.intersect(&v);
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains_space(&u) && sum.contains_space(&v));
        prop_assert!(u.contains_space(&meet) && v.contains_space(&meet));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn block_idempotents_are_orthogonal_central_and_sum_to_one(
        gi in 0usize..GROUP_POOL.len(),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let m = blockhh::splitting_degree(&group, p);
        let ga = GroupAlgebra::new(group, FiniteField::new(p, m).unwrap());
        let blocks = block_idempotents(&ga).unwrap();
        let n = ga.group.order;
        let mut total = ga.zero_elem();
        for b in &blocks {
            for (t, &c) in total.iter_mut().zip(&b.idem) {
                *t = ga.field.add(*t, c);
            }
        }
        prop_assert_eq!(total, ga.unit());
        for (i, a) in blocks.iter().enumerate() {
            for (j, b) in blocks.iter().enumerate() {
                let prod = ga.mul(&a.idem, &b.idem);
                if i == j {
                    prop_assert_eq!(&prod, &a.idem);
                } else {
                    prop_assert!(prod.iter().all(|&c| c == 0));
                }
            }
            // centrality: the idempotent commutes with every group element
            for g in 0..n {
                let ge = ga.group_elem(g);
                prop_assert_eq!(ga.mul(&ge, &a.idem), ga.mul(&a.idem, &ge));
            }
        }
        let dim_sum: usize = blocks.iter().map(|b| b.dim).sum();
        prop_assert_eq!(dim_sum, n);
    }

    #[test]
    fn block_structure_is_stable_under_field_extension(
        gi in 0usize..GROUP_POOL.len(),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let m = blockhh::splitting_degree(&group, p);
        let ga1 = GroupAlgebra::new(group.clone(), FiniteField::new(p, m).unwrap());
        let ga2 = GroupAlgebra::new(group, FiniteField::new(p, 2 * m).unwrap());
        let b1 = block_idempotents(&ga1).unwrap();
        let b2 = block_idempotents(&ga2).unwrap();
        prop_assert_eq!(b1.len(), b2.len());
        let dims1: Vec<usize> = b1.iter().map(|b| b.dim).collect();
        let dims2: Vec<usize> = b2.iter().map(|b| b.dim).collect();
        prop_assert_eq!(dims1, dims2);
        let z1: Vec<usize> = b1.iter().map(|b| b.center_dim).collect();
        let z2: Vec<usize> = b2.iter().map(|b| b.center_dim).collect();
        prop_assert_eq!(z1, z2);
    }

    #[test]
    fn generated_subgroups_satisfy_lagrange_and_class_count_is_center_dim(
        gi in 0usize..GROUP_POOL.len(),
        gens in proptest::collection::vec(0usize..8, 1..=3),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let picked: Vec<usize> = gens.iter().map(|&g| g % group.order).collect();
        let sub = Subgroup::generate(&group, &picked);
        prop_assert_eq!(group.order % sub.order(), 0, "Lagrange");
        // class sums span the center: count = number of conjugacy classes,
        // and the block centers partition it at a splitting field
        let m = blockhh::splitting_degree(&group, p);
        let ga = GroupAlgebra::new(group.clone(), FiniteField::new(p, m).unwrap());
        let classes = group.conjugacy_classes();
        prop_assert_eq!(ga.class_sums().len(), classes.len());
        let blocks = block_idempotents(&ga).unwrap();
        let z_total: usize = blocks.iter().map(|b| b.center_dim).sum();
        prop_assert_eq!(z_total, classes.len());
    }

    #[test]
    fn brauer_homomorphism_is_multiplicative_on_fixed_elements(
        gi in 0usize..GROUP_POOL.len(),
        p in prop_oneof![Just(2u64), Just(3)],
        elem_seed in 0usize..64,
        coeffs in proptest::collection::vec(0u64..9, 8),
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let m = blockhh::splitting_degree(&group, p);
        let ga = GroupAlgebra::new(group.clone(), FiniteField::new(p, m).unwrap());
        // a cyclic p-subgroup: the p-part of a randomly chosen element
        let g = elem_seed % group.order;
        let ord = group.order_of(g) as u64;
        let mut ppart = 1u64;
        while ord % (ppart * p) == 0 {
            ppart *= p;
        }
        let gp = {
            // g^(ord / p-part) has order exactly p-part
            let mut acc = 0usize; // identity
            for _ in 0..(ord / ppart) {
                acc = group.mul(acc, g);
            }
            acc
        };
        let q = Subgroup::generate(&group, &[gp]);
        // random Q-fixed elements: random coefficients on Q-conjugation orbits
        let fixed_elem = |shift: usize| -> Vec<Scalar> {
            let mut x = ga.zero_elem();
            for h in 0..group.order {
                let coeff = coeffs[(h + shift) % coeffs.len()] % ga.field.order();
                // orbit sum: add coeff at every Q-conjugate of h
                let mut orbit = vec![h];
                let mut i = 0;
                while i < orbit.len() {
                    for &qe in &q.elements {
                        let c = group.conj(qe, orbit[i]);
                        if !orbit.contains(&c) {
                            orbit.push(c);
                        }
                    }
                    i += 1;
                }
                if *orbit.iter().min().unwrap() == h {
                    for &o in &orbit {
                        x[o] = ga.field.add(x[o], coeff);
                    }
                }
            }
            x
        };
        let x = fixed_elem(0);
        let y = fixed_elem(3);
        let xy = ga.mul(&x, &y);
        let br_x = brauer_hom(&ga, &q, &x).unwrap();
        let br_y = brauer_hom(&ga, &q, &y).unwrap();
        let br_xy = brauer_hom(&ga, &q, &xy).unwrap();
        prop_assert_eq!(br_xy, ga.mul(&br_x, &br_y));
    }
}

/// Block-diagonal direct sum of two modules over the same group and field.
fn direct_sum(a: &KGModule, b: &KGModule) -> KGModule {
    let field = a.field.clone();
    let n = a.group.order;
    let mats: Vec<Mat> = (0..n)
        .map(|g| {
            let ma = a.act_matrix(g);
            let mb = b.act_matrix(g);
            let mut m = Mat::zeros(field.clone(), a.dim + b.dim, a.dim + b.dim);
            m.add_scaled_block(0, 0, 1, ma);
            m.add_scaled_block(a.dim, a.dim, 1, mb);
            m
        })
        .collect();
    KGModule::new(a.group.clone(), field, mats).unwrap()
}

/// The left regular representation kG.
fn regular_module(ga: &GroupAlgebra) -> KGModule {
    let n = ga.group.order;
    let mats: Vec<Mat> = (0..n)
        .map(|g| {
            let mut m = Mat::zeros(ga.field.clone(), n, n);
            for h in 0..n {
                m.set(ga.group.mul(g, h), h, 1);
            }
            m
        })
        .collect();
    KGModule::new(ga.group.clone(), ga.field.clone(), mats).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn cohomology_is_additive_over_direct_sums(
        gi in 0usize..GROUP_POOL.len(),
        p in prop_oneof![Just(2u64), Just(3)],
        pick in 0usize..3,
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let m = blockhh::splitting_degree(&group, p);
        let ga = GroupAlgebra::new(group.clone(), FiniteField::new(p, m).unwrap());
        let res = trivial_resolution(&ga, 3, RESOLUTION_CAP).unwrap();
        let trivial = KGModule::trivial(group.clone(), ga.field.clone());
        let regular = regular_module(&ga);
        let conj = conjugation_module(&ga, &Subspace::full(ga.field.clone(), ga.group.order))
            .unwrap();
        let (a, b) = match pick {
            0 => (&trivial, &regular),
            1 => (&regular, &conj),
            _ => (&conj, &trivial),
        };
        let sum = direct_sum(a, b);
        let ha = cohomology_dims(&res, a, 2);
        let hb = cohomology_dims(&res, b, 2);
        let hsum = cohomology_dims(&res, &sum, 2);
        for i in 0..=2 {
            prop_assert_eq!(hsum[i], ha[i] + hb[i], "degree {}", i);
        }
    }

    #[test]
    fn free_modules_are_acyclic(
        gi in 0usize..GROUP_POOL.len(),
        p in prop_oneof![Just(2u64), Just(3)],
        copies in 1usize..=2,
    ) {
        let group = catalog_group(GROUP_POOL[gi]);
        let m = blockhh::splitting_degree(&group, p);
        let ga = GroupAlgebra::new(group.clone(), FiniteField::new(p, m).unwrap());
        let res = trivial_resolution(&ga, 3, RESOLUTION_CAP).unwrap();
        let regular = regular_module(&ga);
        let mut module = regular.clone();
        for _ in 1..copies {
            module = direct_sum(&module, &regular);
        }
        let h = cohomology_dims(&res, &module, 2);
        // H^0(G; kG^r) = r (fixed points are spanned by the r norm elements);
        // higher cohomology of a free module vanishes
        prop_assert_eq!(h[0], copies);
        prop_assert_eq!(h[1], 0);
        prop_assert_eq!(h[2], 0);
    }

    #[test]
    fn radical_routes_agree_on_commutative_algebras(
        n in 2usize..=6,
        p in prop_oneof![Just(2u64), Just(3)],
        m in 1u32..=2,
    ) {
        let table: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let group = FiniteGroup::from_table(&format!("c{n}"), table).unwrap();
        let ga = GroupAlgebra::new(group, FiniteField::new(p, m).unwrap());
        let fast = blockhh::algebra::radical_of_group_algebra(&ga);
        let slow = blockhh::algebra::radical_commutative(&ga);
        prop_assert_eq!(&fast, &slow);
        // every oracle-certified nilpotent lies in the radical
        let nils = blockhh::algebra::commutative_nilpotents_oracle(&ga, 100_000).unwrap();
        for v in &nils {
            prop_assert!(fast.contains(v));
        }
    }
}
