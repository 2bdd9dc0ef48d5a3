//! Cohomology of modules over group algebras, Hochschild cohomology of block
//! algebras, and transfer maps from subgroups.
//!
//! Everything is computed from a minimal free resolution of the relevant
//! cyclic module. Applying Hom_Λ(-, M) to a free resolution turns the
//! boundary `d(ε_t) = Σ_j λ_{t,j} ε_j` into the cochain differential whose
//! (t, j) block is the action of λ_{t,j} on M, and cohomology dimensions are
//! read off from the ranks of consecutive differentials.
//!
//! Hochschild cohomology of a block B of kG is computed as the group
//! cohomology of G acting on B by conjugation (for G finite these agree
//! degree by degree), and independently — as a cross-check — by resolving B
//! over the enveloping algebra B ⊗ B^op.
//!
//! Transfers: for H ≤ G, a free kG-resolution restricts to a free
//! kH-resolution (kG is free as a kH-module on right coset representatives),
//! H-cochains are recorded by their values on {t_s ε_j}, and the transfer of
//! an H-cochain φ is (tr φ)(ε_j) = Σ_{x ∈ [G/H]} x · φ(x^{-1} ε_j).

use crate::algebra::{augmentation_ideal, radical_of_group_algebra, Algebra, GroupAlgebra, StructureAlgebra};
use crate::field::{FiniteField, Scalar};
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::{Mat, Subspace};
use crate::resolution::{resolve_cyclic, Resolution};
use crate::{Error, Result};
use std::sync::Arc;

/// A module over some algebra, known through the action of algebra elements.
pub trait AlgebraModule {
    fn field(&self) -> &FiniteField;
    fn dim(&self) -> usize;
    /// Matrix of the action of the algebra element x (in algebra coordinates).
    fn act_alg_elem(&self, x: &[Scalar]) -> Mat;
}

/// A finite-dimensional kG-module: one action matrix per group element.
#[derive(Clone)]
pub struct KGModule {
    pub group: Arc<FiniteGroup>,
    pub field: FiniteField,
    pub dim: usize,
    action: Vec<Mat>,
}

/// Exhaustive action-table validation is quadratic in |G|; beyond this order
/// only the generator relations are checked.
const MODULE_VALIDATION_CAP: usize = 64;

impl KGModule {
    /// Build a module and check the action is a homomorphism (exhaustively for
    /// groups of order at most 64, on a generating set beyond that).
    pub fn new(group: Arc<FiniteGroup>, field: FiniteField, action: Vec<Mat>) -> Result<Self> {
        let n = group.order;
        assert_eq!(action.len(), n, "one action matrix per group element");
        let dim = if n > 0 { action[0].rows } else { 0 };
        for m in &action {
            assert_eq!(m.rows, dim);
            assert_eq!(m.cols, dim);
        }
        let id = Mat::identity(field.clone(), dim);
        if action[0] != id {
            return Err(Error::NotAGroup(
                "module action of the identity is not the identity matrix".into(),
            ));
        }
        let check = |g: usize, h: usize, this: &KGModule| -> bool {
            this.action[g].mul(&this.action[h]) == this.action[this.group.mul(g, h)]
        };
        let module = KGModule {
            group,
            field,
            dim,
            action,
        };
        if n <= MODULE_VALIDATION_CAP {
            for g in 0..n {
                for h in 0..n {
                    if !check(g, h, &module) {
                        return Err(Error::NotAGroup(format!(
                            "module action is not multiplicative at ({g}, {h})"
                        )));
                    }
                }
            }
        } else {
            let gens = module.group.greedy_generators();
            for &g in &gens {
                for h in 0..n {
                    if !check(g, h, &module) {
                        return Err(Error::NotAGroup(format!(
                            "module action is not multiplicative at ({g}, {h})"
                        )));
                    }
                }
            }
        }
        Ok(module)
    }

    fn new_unchecked(group: Arc<FiniteGroup>, field: FiniteField, action: Vec<Mat>) -> Self {
        let dim = action[0].rows;
        KGModule {
            group,
            field,
            dim,
            action,
        }
    }

    /// The trivial one-dimensional module.
    pub fn trivial(group: Arc<FiniteGroup>, field: FiniteField) -> Self {
        let n = group.order;
        let action = vec![Mat::identity(field.clone(), 1); n];
        KGModule::new_unchecked(group, field, action)
    }

    pub fn act_matrix(&self, g: usize) -> &Mat {
        &self.action[g]
    }

    pub fn act(&self, g: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.action[g].mul_vec(v)
    }

    /// The fixed-point subspace M^G.
    pub fn fixed_points(&self) -> Subspace {
        let gens = self.group.greedy_generators();
        if gens.is_empty() || self.dim == 0 {
            return Subspace::full(self.field.clone(), self.dim);
        }
        let mut stacked = Mat::zeros(self.field.clone(), gens.len() * self.dim, self.dim);
        for (i, &g) in gens.iter().enumerate() {
            let mut block = self.action[g].clone();
            for d in 0..self.dim {
                let cur = block.at(d, d);
                block.set(d, d, self.field.sub(cur, 1));
            }
            stacked.add_scaled_block(i * self.dim, 0, 1, &block);
        }
        stacked.nullspace()
    }

    /// Restriction along a subgroup, using the subgroup's own element indexing.
    pub fn restrict(&self, h_group: &Arc<FiniteGroup>, embed: &[usize]) -> KGModule {
        let action: Vec<Mat> = embed.iter().map(|&g| self.action[g].clone()).collect();
        KGModule::new_unchecked(h_group.clone(), self.field.clone(), action)
    }
}

impl AlgebraModule for KGModule {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn act_alg_elem(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field.clone(), self.dim, self.dim);
        for (g, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled_block(0, 0, c, &self.action[g]);
            }
        }
        m
    }
}

/// G acting by conjugation on a conjugation-stable subspace of kG (such as a
/// block), in the subspace's basis coordinates.
pub fn conjugation_module(ga: &GroupAlgebra, space: &Subspace) -> Result<KGModule> {
    let n = ga.group.order;
    let d = space.dim();
    let rows: Vec<Vec<Scalar>> = space.basis_rows().map(|r| r.to_vec()).collect();
    let mut action = Vec::with_capacity(n);
    for g in 0..n {
        let mut m = Mat::zeros(ga.field.clone(), d, d);
        for (c, row) in rows.iter().enumerate() {
            let img = ga.conj_by(g, row);
            let coords = space.coords(&img).ok_or(Error::NotSubgroupFixed)?;
            for (r, &v) in coords.iter().enumerate() {
                if v != 0 {
                    m.set(r, c, v);
                }
            }
        }
        action.push(m);
    }
    KGModule::new(ga.group.clone(), ga.field.clone(), action)
}

/// Minimal resolution of the trivial kG-module, of the given length.
pub fn trivial_resolution(ga: &GroupAlgebra, length: usize, cap: usize) -> Result<Resolution> {
    let ann = augmentation_ideal(ga);
    let rad = radical_of_group_algebra(ga);
    resolve_cyclic(ga, &ann, &rad, length, cap)
}

/// The cochain differential C^i -> C^{i+1} for Hom(P_*, M).
/// None when either side is the zero module.
pub fn delta_matrix<M: AlgebraModule>(res: &Resolution, module: &M, i: usize) -> Option<Mat> {
    let dm = module.dim();
    let r_i = *res.ranks.get(i)?;
    let r_next = *res.ranks.get(i + 1)?;
    if r_i == 0 || r_next == 0 || dm == 0 {
        return None;
    }
    let gens = &res.generators[i]; // generators of degree i+1
    let n = res.annihilator.ambient; // dim of the algebra
    let f = module.field().clone();
    let mut d = Mat::zeros(f, r_next * dm, r_i * dm);
    for (t, g) in gens.iter().enumerate() {
        for j in 0..r_i {
            let comp = &g[j * n..(j + 1) * n];
            if comp.iter().all(|&c| c == 0) {
                continue;
            }
            let block = module.act_alg_elem(comp);
            d.add_scaled_block(t * dm, j * dm, 1, &block);
        }
    }
    Some(d)
}

/// Cocycles Z^i = ker(delta^i) as a subspace of C^i = M^{r_i}.
pub fn cocycles<M: AlgebraModule>(res: &Resolution, module: &M, i: usize) -> Subspace {
    let dm = module.dim();
    let r_i = res.ranks.get(i).copied().unwrap_or(0);
    match delta_matrix(res, module, i) {
        Some(d) => d.nullspace(),
        None => Subspace::full(module.field().clone(), r_i * dm),
    }
}

/// Coboundaries B^i = im(delta^{i-1}) as a subspace of C^i.
pub fn coboundaries<M: AlgebraModule>(res: &Resolution, module: &M, i: usize) -> Subspace {
    let dm = module.dim();
    let r_i = res.ranks.get(i).copied().unwrap_or(0);
    if i == 0 {
        return Subspace::zero(module.field().clone(), r_i * dm);
    }
    match delta_matrix(res, module, i - 1) {
        Some(d) => column_space(&d),
        None => Subspace::zero(module.field().clone(), r_i * dm),
    }
}

fn column_space(m: &Mat) -> Subspace {
    let t = m.transpose();
    let rows: Vec<Vec<Scalar>> = (0..t.rows).map(|r| t.row(r).to_vec()).collect();
    Subspace::from_span(m.field().clone(), m.rows, &rows)
}

/// Dimensions of H^0 .. H^max_n of Hom(P_*, M).
///
/// For a semisimple algebra the module below the resolution is projective:
/// H^0 is the annihilator-killed subspace of M and everything higher is zero.
pub fn cohomology_dims<M: AlgebraModule>(
    res: &Resolution,
    module: &M,
    max_n: usize,
) -> Vec<usize> {
    let dm = module.dim();
    if res.semisimple {
        let ann_rows: Vec<Vec<Scalar>> =
            res.annihilator.basis_rows().map(|r| r.to_vec()).collect();
        let h0 = if ann_rows.is_empty() || dm == 0 {
            dm
        } else {
            let mut stacked = Mat::zeros(module.field().clone(), ann_rows.len() * dm, dm);
            for (i, row) in ann_rows.iter().enumerate() {
                let block = module.act_alg_elem(row);
                stacked.add_scaled_block(i * dm, 0, 1, &block);
            }
            stacked.nullspace().dim()
        };
        let mut dims = vec![0; max_n + 1];
        dims[0] = h0;
        return dims;
    }
    assert!(
        res.length() >= max_n + 1,
        "resolution too short: H^{max_n} needs length {}",
        max_n + 1
    );
    let mut dims = Vec::with_capacity(max_n + 1);
    let mut rank_prev = 0usize; // rank of delta^{i-1}
    for i in 0..=max_n {
        let c_i = res.ranks[i] * dm;
        let rank_i = delta_matrix(res, module, i).map_or(0, |d| d.rank());
        dims.push(c_i - rank_i - rank_prev);
        rank_prev = rank_i;
    }
    dims
}

/// Hochschild cohomology dimensions of a block: group cohomology of the
/// conjugation action of G on the block, over a trivial-module resolution.
pub fn hochschild_dims(
    ga: &GroupAlgebra,
    res: &Resolution,
    block: &Subspace,
    max_n: usize,
) -> Result<Vec<usize>> {
    let module = conjugation_module(ga, block)?;
    Ok(cohomology_dims(res, &module, max_n))
}

/// The block algebra acting on itself as a module over B ⊗ B^op, for the
/// independent Hochschild route.
struct EnvelopingSelfModule {
    field: FiniteField,
    bdim: usize,
    /// lmat[i]: left multiplication by basis b_i; rmat[j]: right mult by b_j.
    lmat: Vec<Mat>,
    rmat: Vec<Mat>,
}

impl AlgebraModule for EnvelopingSelfModule {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.bdim
    }

    fn act_alg_elem(&self, x: &[Scalar]) -> Mat {
        let b = self.bdim;
        let mut m = Mat::zeros(self.field.clone(), b, b);
        for i in 0..b {
            for j in 0..b {
                let c = x[i * b + j];
                if c != 0 {
                    let prod = self.lmat[i].mul(&self.rmat[j]);
                    m.add_scaled_block(0, 0, c, &prod);
                }
            }
        }
        m
    }
}

/// Default group-order cap for the enveloping-algebra oracle: the enveloping
/// algebra is dim(B)^2-dimensional, so this route is for desk-size checks.
pub const ENVELOPING_ORACLE_ORDER_CAP: usize = 12;

/// Hochschild cohomology of a block by the independent enveloping-algebra
/// route: resolve B as a cyclic module over B ⊗ B^op (generator 1_B) and take
/// Hom into B.
///
/// `idem` is the block idempotent in kG coordinates and `block` its span.
pub fn hochschild_dims_bimodule_oracle(
    ga: &GroupAlgebra,
    idem: &[Scalar],
    block: &Subspace,
    max_n: usize,
    order_cap: usize,
    res_cap: usize,
) -> Result<Vec<usize>> {
    if ga.group.order > order_cap {
        return Err(Error::CapExceeded(format!(
            "enveloping-algebra oracle is limited to groups of order {order_cap} \
             (got {})",
            ga.group.order
        )));
    }
    let f = ga.field.clone();
    let b = block.dim();
    let rows: Vec<Vec<Scalar>> = block.basis_rows().map(|r| r.to_vec()).collect();
    // products of block basis vectors, in block coordinates
    let mut bprod: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); b]; b];
    for i in 0..b {
        for j in 0..b {
            let p = ga.mul(&rows[i], &rows[j]);
            bprod[i][j] = block
                .coords(&p)
                .expect("block must be closed under multiplication");
        }
    }
    let e_b = block
        .coords(idem)
        .expect("idempotent must lie in its block");
    let outer = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut w = vec![0; b * b];
        for (r, &ur) in u.iter().enumerate() {
            if ur == 0 {
                continue;
            }
            for (s, &vs) in v.iter().enumerate() {
                if vs != 0 {
                    w[r * b + s] = f.mul(ur, vs);
                }
            }
        }
        w
    };
    // enveloping algebra: (x ⊗ y)(c ⊗ d) = xc ⊗ dy
    let mut table = Vec::with_capacity(b * b * b * b);
    for i in 0..b {
        for j in 0..b {
            for kk in 0..b {
                for l in 0..b {
                    table.push(outer(&bprod[i][kk], &bprod[l][j]));
                }
            }
        }
    }
    let unit = outer(&e_b, &e_b);
    let env = StructureAlgebra::new(f.clone(), b * b, unit, table);
    // annihilator of the generator 1_B: kernel of (x ⊗ y) -> x * 1 * y
    let mut mu = Mat::zeros(f.clone(), b, b * b);
    for i in 0..b {
        for j in 0..b {
            for (r, &v) in bprod[i][j].iter().enumerate() {
                if v != 0 {
                    mu.set(r, i * b + j, v);
                }
            }
        }
    }
    let ann = mu.nullspace();
    // radical of B: e * J(kG), in block coordinates
    let j_kg = radical_of_group_algebra(ga);
    let jb_rows: Vec<Vec<Scalar>> = j_kg
        .basis_rows()
        .map(|r| {
            block
                .coords(&ga.mul(idem, r))
                .expect("e * J(kG) lies in the block")
        })
        .collect();
    let jb = Subspace::from_span(f.clone(), b, &jb_rows);
    // J(B ⊗ B^op) = J(B) ⊗ B + B ⊗ J(B) (the field is perfect)
    let mut jenv_rows: Vec<Vec<Scalar>> = Vec::new();
    for jr in jb.basis_rows() {
        for s in 0..b {
            let mut unit_s = vec![0; b];
            unit_s[s] = 1;
            jenv_rows.push(outer(jr, &unit_s));
            jenv_rows.push(outer(&unit_s, jr));
        }
    }
    let jenv = Subspace::from_span(f.clone(), b * b, &jenv_rows);
    let res = resolve_cyclic(&env, &ann, &jenv, max_n + 1, res_cap)?;
    let module = EnvelopingSelfModule {
        field: f.clone(),
        bdim: b,
        lmat: (0..b)
            .map(|i| {
                let mut m = Mat::zeros(f.clone(), b, b);
                for c in 0..b {
                    for (r, &v) in bprod[i][c].iter().enumerate() {
                        if v != 0 {
                            m.set(r, c, v);
                        }
                    }
                }
                m
            })
            .collect(),
        rmat: (0..b)
            .map(|j| {
                let mut m = Mat::zeros(f.clone(), b, b);
                for c in 0..b {
                    for (r, &v) in bprod[c][j].iter().enumerate() {
                        if v != 0 {
                            m.set(r, c, v);
                        }
                    }
                }
                m
            })
            .collect(),
    };
    Ok(cohomology_dims(&res, &module, max_n))
}

/// Coset structure of a subgroup H ≤ G with least-element representatives.
pub struct SubgroupContext {
    pub parent: Arc<FiniteGroup>,
    pub h_group: Arc<FiniteGroup>,
    /// H's own index -> G index.
    pub embed: Vec<usize>,
    /// Right coset representatives t_s for H\G (each the least element of its
    /// coset, listed in ascending order; t_0 = identity).
    pub right_reps: Vec<usize>,
    /// G index -> s with g ∈ H t_s.
    coset_of: Vec<usize>,
    /// G index -> H-index of h with g = h t_s.
    h_part: Vec<usize>,
    /// Left coset representatives for G/H (least elements, ascending).
    pub left_reps: Vec<usize>,
}

impl SubgroupContext {
    pub fn new(parent: Arc<FiniteGroup>, sub: &Subgroup) -> Result<Self> {
        let n = parent.order;
        let (h_group, embed) = sub.as_group()?;
        let mut h_index_of = vec![None; n];
        for (i, &g) in embed.iter().enumerate() {
            h_index_of[g] = Some(i);
        }
        let mut coset_of = vec![usize::MAX; n];
        let mut right_reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let s = right_reps.len();
            right_reps.push(g);
            for &h in &embed {
                coset_of[parent.mul(h, g)] = s;
            }
        }
        let mut h_part = vec![usize::MAX; n];
        for g in 0..n {
            let t = right_reps[coset_of[g]];
            let h = parent.mul(g, parent.inv_of(t));
            h_part[g] = h_index_of[h].expect("g t^{-1} must lie in H");
        }
        let mut left_seen = vec![false; n];
        let mut left_reps = Vec::new();
        for g in 0..n {
            if left_seen[g] {
                continue;
            }
            left_reps.push(g);
            for &h in &embed {
                left_seen[parent.mul(g, h)] = true;
            }
        }
        Ok(SubgroupContext {
            parent,
            h_group,
            embed,
            right_reps,
            coset_of,
            h_part,
            left_reps,
        })
    }

    pub fn index(&self) -> usize {
        self.right_reps.len()
    }
}

/// Transfer computations for a fixed (resolution, G-module, subgroup) triple.
///
/// H-cochains on the restricted resolution are stored by their values on the
/// kH-basis {t_s ε_j}, flattened with slot (j, s) at offset (j * S + s) * dim M.
pub struct TransferSetup<'a> {
    res: &'a Resolution,
    module: &'a KGModule,
    ctx: &'a SubgroupContext,
    module_h: KGModule,
}

impl<'a> TransferSetup<'a> {
    pub fn new(res: &'a Resolution, module: &'a KGModule, ctx: &'a SubgroupContext) -> Self {
        let module_h = module.restrict(&ctx.h_group, &ctx.embed);
        TransferSetup {
            res,
            module,
            ctx,
            module_h,
        }
    }

    /// The H-cochain differential C_H^i -> C_H^{i+1}.
    fn delta_h(&self, i: usize) -> Option<Mat> {
        let dm = self.module.dim;
        let s_count = self.ctx.index();
        let r_i = *self.res.ranks.get(i)?;
        let r_next = *self.res.ranks.get(i + 1)?;
        if r_i == 0 || r_next == 0 {
            return None;
        }
        let n = self.module.group.order;
        let f = self.module.field.clone();
        let gens = &self.res.generators[i];
        let mut d = Mat::zeros(f, r_next * s_count * dm, r_i * s_count * dm);
        for (t, gen) in gens.iter().enumerate() {
            for s in 0..s_count {
                let t_s = self.ctx.right_reps[s];
                let row0 = (t * s_count + s) * dm;
                for j in 0..r_i {
                    let comp = &gen[j * n..(j + 1) * n];
                    for (g, &c) in comp.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        // t_s * g lands in coset s' with H-part h
                        let tg = self.module.group.mul(t_s, g);
                        let s_prime = self.ctx.coset_of[tg];
                        let h = self.ctx.h_part[tg];
                        let col0 = (j * s_count + s_prime) * dm;
                        d.add_scaled_block(row0, col0, c, self.module_h.act_matrix(h));
                    }
                }
            }
        }
        Some(d)
    }

    /// H-cocycles in degree i, optionally constrained to take values in a
    /// kH-stable subspace W of M.
    pub fn h_cocycles(&self, i: usize, w: Option<&Subspace>) -> Subspace {
        let dm = self.module.dim;
        let s_count = self.ctx.index();
        let r_i = self.res.ranks.get(i).copied().unwrap_or(0);
        let c_dim = r_i * s_count * dm;
        let f = self.module.field.clone();
        let delta = self.delta_h(i);
        let constraint = w.map(|w| {
            // matrix with kernel W: columns are the RREF residuals of e_c
            let mut red = Mat::zeros(f.clone(), dm, dm);
            for c in 0..dm {
                let mut e_c = vec![0; dm];
                e_c[c] = 1;
                let r = w.reduce(&e_c);
                for (row, &v) in r.iter().enumerate() {
                    if v != 0 {
                        red.set(row, c, v);
                    }
                }
            }
            red
        });
        match (delta, constraint) {
            (None, None) => Subspace::full(f, c_dim),
            (Some(d), None) => d.nullspace(),
            (delta, Some(red)) => {
                let slots = r_i * s_count;
                let extra = slots * dm;
                let drows = delta.as_ref().map_or(0, |d| d.rows);
                let mut stacked = Mat::zeros(f, drows + extra, c_dim);
                if let Some(d) = &delta {
                    stacked.add_scaled_block(0, 0, 1, d);
                }
                for slot in 0..slots {
                    stacked.add_scaled_block(drows + slot * dm, slot * dm, 1, &red);
                }
                stacked.nullspace()
            }
        }
    }

    /// Matrix of the transfer C_H^i -> C_G^i:
    /// (tr φ)(ε_j) = Σ_{x ∈ [G/H]} x · φ(x^{-1} ε_j).
    pub fn transfer_matrix(&self, i: usize) -> Mat {
        let dm = self.module.dim;
        let s_count = self.ctx.index();
        let r_i = self.res.ranks.get(i).copied().unwrap_or(0);
        let f = self.module.field.clone();
        let mut t = Mat::zeros(f, r_i * dm, r_i * s_count * dm);
        for j in 0..r_i {
            for &x in &self.ctx.left_reps {
                let xinv = self.module.group.inv_of(x);
                let s = self.ctx.coset_of[xinv];
                let h = self.ctx.h_part[xinv];
                let block = self
                    .module
                    .act_matrix(x)
                    .mul(self.module_h.act_matrix(h));
                t.add_scaled_block(j * dm, (j * s_count + s) * dm, 1, &block);
            }
        }
        t
    }

    /// Span of the transferred (optionally W-valued) H-cocycles inside C_G^i.
    pub fn transferred_cocycles(&self, i: usize, w: Option<&Subspace>) -> Subspace {
        let z_h = self.h_cocycles(i, w);
        let t = self.transfer_matrix(i);
        let rows: Vec<Vec<Scalar>> = z_h.basis_rows().map(|z| t.mul_vec(z)).collect();
        Subspace::from_span(self.module.field.clone(), t.rows, &rows)
    }
}

/// Result of checking surjectivity of a transfer in one degree, with an
/// element-level witness per cohomology basis class.
pub struct TransferSurjectivity {
    pub degree: usize,
    pub h_dim: usize,
    pub image_dim: usize,
    pub surjective: bool,
    /// Dimension of the full G-cocycle space: the witness solve targets every
    /// basis cocycle, so complete success means `witnesses == z_dim`.
    pub z_dim: usize,
    /// Number of G-cocycle basis classes for which an explicit preimage
    /// y with tr(y) ≡ b (mod coboundaries) was found and re-verified.
    pub witnesses: usize,
}

/// Dimension of the image of tr: H^i(H; M|_H) -> H^i(G; M), optionally
/// restricted to classes of H-cocycles valued in a submodule W of M.
pub fn transfer_image_dim(setup: &TransferSetup, i: usize, w: Option<&Subspace>) -> usize {
    let image = setup.transferred_cocycles(i, w);
    let b_g = coboundaries(setup.res, setup.module, i);
    image.sum(&b_g).dim() - b_g.dim()
}

/// Check that tr: H^i(H; M) -> H^i(G; M) is surjective, producing explicit
/// witnesses: for every basis cocycle b of Z^i_G, solve tr(y) = b + δ(c) with
/// y an H-cocycle, and verify the solution by direct evaluation.
pub fn transfer_surjectivity(
    setup: &TransferSetup,
    i: usize,
) -> TransferSurjectivity {
    let module = setup.module;
    let res = setup.res;
    let z_g = cocycles(res, module, i);
    let b_g = coboundaries(res, module, i);
    let h_dim = z_g.dim() - b_g.dim();
    let t = setup.transfer_matrix(i);
    let z_h = setup.h_cocycles(i, None);
    let transferred: Vec<Vec<Scalar>> = z_h.basis_rows().map(|z| t.mul_vec(z)).collect();
    let image = Subspace::from_span(module.field.clone(), t.rows, &transferred);
    let cover = image.sum(&b_g);
    let image_dim = cover.dim() - b_g.dim();
    let surjective = image_dim == h_dim;
    // element-level witnesses: solve [T z_1 .. T z_k | coboundary basis] c = b
    let mut witnesses = 0;
    if surjective {
        let zh_cols = transferred.len();
        let bg_rows: Vec<Vec<Scalar>> = b_g.basis_rows().map(|r| r.to_vec()).collect();
        let ncols = zh_cols + bg_rows.len();
        let ambient = t.rows;
        let mut m = Mat::zeros(module.field.clone(), ambient, ncols);
        for (c, v) in transferred.iter().chain(bg_rows.iter()).enumerate() {
            for (r, &val) in v.iter().enumerate() {
                if val != 0 {
                    m.set(r, c, val);
                }
            }
        }
        let zh_basis: Vec<Vec<Scalar>> = z_h.basis_rows().map(|r| r.to_vec()).collect();
        for b in z_g.basis_rows() {
            if let Some(sol) = m.solve(b) {
                // reconstruct y from the cocycle part of the solution
                let mut y = vec![0; z_h.ambient];
                for (c, zv) in zh_basis.iter().enumerate() {
                    if sol[c] != 0 {
                        for (yi, &zvi) in y.iter_mut().zip(zv) {
                            if zvi != 0 {
                                *yi = module.field.add(*yi, module.field.mul(sol[c], zvi));
                            }
                        }
                    }
                }
                // verify: tr(y) - b must be a coboundary, and y must be a cocycle
                let ty = t.mul_vec(&y);
                let diff: Vec<Scalar> = ty
                    .iter()
                    .zip(b)
                    .map(|(&a, &bb)| module.field.sub(a, bb))
                    .collect();
                if b_g.contains(&diff) && setup.h_cocycles(i, None).contains(&y) {
                    witnesses += 1;
                }
            }
        }
    }
    TransferSurjectivity {
        degree: i,
        h_dim,
        image_dim,
        surjective,
        z_dim: z_g.dim(),
        witnesses,
    }
}
