//! Group algebras, Jacobson radicals, and block idempotents.
//!
//! The radical is computed by one of three provably-correct routes:
//!
//! * semisimple shortcut — if p does not divide |G| the radical is zero;
//! * p-group shortcut — kG is local, so the radical is the augmentation ideal;
//! * commutative route — in a commutative algebra of dimension n over a field
//!   of characteristic p, the radical is the set of nilpotents, which equals
//!   the kernel of x -> x^(p^e) for p^e >= n. That map is additive and
//!   p^e-semilinear, so the kernel is found by solving a linear system in the
//!   transformed coordinates and pulling the solution back through the inverse
//!   Frobenius power;
//! * general route — the descending chain R_{-1} = A, R_i = {x in R_{i-1} :
//!   λ_{p^i}(xy) = 0 for all y in R_{i-1}}, where λ_j(z) is the coefficient of
//!   t^(n-j) in the characteristic polynomial of left multiplication by z on A.
//!   Each R_i is an ideal, the map x -> λ_{p^i}(xy) is p^i-semilinear in x on
//!   R_{i-1}, and the chain reaches the radical once p^i exceeds n.
//!
//! Block idempotents come from the center: split Z(kG)/J(Z(kG)) into
//! one-dimensional eigencomponents of the class-sum multiplication operators
//! (this requires the field to split the center — checked, not assumed, by
//! testing that x -> x^q is the identity on the quotient), normalize each
//! component to an idempotent, and lift through the radical by x -> x^(p^s):
//! if a is idempotent mod J then a^(p^s) is exactly idempotent once p^s is at
//! least the nilpotency index, because (a^2 - a)^(p^s) = (a^(p^s))^2 - a^(p^s)
//! in a commutative ring of characteristic p.

use crate::field::{FiniteField, Scalar};
use crate::group::FiniteGroup;
use crate::group::Subgroup;
use crate::matrix::{Mat, Subspace};
use crate::{Error, Result};
use std::sync::Arc;

/// A finite-dimensional associative unital algebra with a distinguished basis.
pub trait Algebra {
    fn field(&self) -> &FiniteField;
    fn dim(&self) -> usize;
    fn unit(&self) -> Vec<Scalar>;
    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar>;

    fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    fn is_commutative(&self) -> bool {
        let n = self.dim();
        for a in 0..n {
            let ua = self.basis_vec(a);
            for b in (a + 1)..n {
                let ub = self.basis_vec(b);
                if self.mul(&ua, &ub) != self.mul(&ub, &ua) {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of left multiplication by z (columns are z * basis_t).
    fn left_mult_matrix(&self, z: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field().clone(), n, n);
        for t in 0..n {
            let col = self.mul(z, &self.basis_vec(t));
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.set(r, t, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by z (columns are basis_a * z), i.e. the
    /// matrix of lambda -> lambda * z in the basis coordinates.
    fn right_mult_matrix(&self, z: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field().clone(), n, n);
        for a in 0..n {
            let col = self.mul(&self.basis_vec(a), z);
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.set(r, a, v);
                }
            }
        }
        m
    }
}

/// x^e by binary powering (e = 0 gives the unit).
pub fn pow_elem<A: Algebra + ?Sized>(alg: &A, x: &[Scalar], e: u64) -> Vec<Scalar> {
    let mut result = alg.unit();
    let mut base = x.to_vec();
    let mut e = e;
    while e != 0 {
        if e & 1 == 1 {
            result = alg.mul(&result, &base);
        }
        base = alg.mul(&base, &base);
        e >>= 1;
    }
    result
}

/// x^(p^k) by iterating the p-th power.
pub fn frobenius_power_elem<A: Algebra + ?Sized>(alg: &A, x: &[Scalar], k: u32) -> Vec<Scalar> {
    let p = alg.field().p();
    let mut y = x.to_vec();
    for _ in 0..k {
        y = pow_elem(alg, &y, p);
    }
    y
}

/// The group algebra kG with basis indexed by group elements.
pub struct GroupAlgebra {
    pub group: Arc<FiniteGroup>,
    pub field: FiniteField,
}

impl GroupAlgebra {
    pub fn new(group: Arc<FiniteGroup>, field: FiniteField) -> Self {
        GroupAlgebra { group, field }
    }

    pub fn zero_elem(&self) -> Vec<Scalar> {
        vec![0; self.group.order]
    }

    /// The basis vector of a group element.
    pub fn group_elem(&self, g: usize) -> Vec<Scalar> {
        let mut v = self.zero_elem();
        v[g] = 1;
        v
    }

    /// g x g^{-1}: a permutation of coefficients.
    pub fn conj_by(&self, g: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_elem();
        for (h, &c) in x.iter().enumerate() {
            if c != 0 {
                out[self.group.conj(g, h)] = c;
            }
        }
        out
    }

    /// Whether conjugation by every element of Q fixes x.
    pub fn is_fixed_by(&self, q: &Subgroup, x: &[Scalar]) -> bool {
        q.elements.iter().all(|&g| self.conj_by(g, x) == x)
    }

    /// Sum of coefficients (the augmentation homomorphism).
    pub fn augmentation(&self, x: &[Scalar]) -> Scalar {
        x.iter().fold(0, |acc, &c| self.field.add(acc, c))
    }

    /// Indicator vectors of the conjugacy classes, in class order.
    pub fn class_sums(&self) -> Vec<Vec<Scalar>> {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|class| {
                let mut v = self.zero_elem();
                for &g in class {
                    v[g] = 1;
                }
                v
            })
            .collect()
    }

    pub fn right_mult_matrix(&self, z: &[Scalar]) -> Mat {
        let n = self.group.order;
        let mut m = Mat::zeros(self.field.clone(), n, n);
        for (g, &c) in z.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for h in 0..n {
                let idx = self.group.mul(h, g);
                let cur = m.at(idx, h);
                m.set(idx, h, self.field.add(cur, c));
            }
        }
        m
    }
}

impl Algebra for GroupAlgebra {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.group.order
    }

    fn unit(&self) -> Vec<Scalar> {
        self.group_elem(0)
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_elem();
        for (g, &ag) in a.iter().enumerate() {
            if ag == 0 {
                continue;
            }
            for (h, &bh) in b.iter().enumerate() {
                if bh == 0 {
                    continue;
                }
                let idx = self.group.mul(g, h);
                out[idx] = self.field.add(out[idx], self.field.mul(ag, bh));
            }
        }
        out
    }

    fn is_commutative(&self) -> bool {
        self.group.is_abelian()
    }

    fn left_mult_matrix(&self, z: &[Scalar]) -> Mat {
        let n = self.group.order;
        let mut m = Mat::zeros(self.field.clone(), n, n);
        for (g, &c) in z.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for h in 0..n {
                let idx = self.group.mul(g, h);
                let cur = m.at(idx, h);
                m.set(idx, h, self.field.add(cur, c));
            }
        }
        m
    }

    fn right_mult_matrix(&self, z: &[Scalar]) -> Mat {
        GroupAlgebra::right_mult_matrix(self, z)
    }
}

/// An algebra given by explicit structure constants on a basis.
pub struct StructureAlgebra {
    pub field: FiniteField,
    pub dim: usize,
    pub unit: Vec<Scalar>,
    /// table[a * dim + b] = coordinates of u_a * u_b.
    table: Vec<Vec<Scalar>>,
}

impl StructureAlgebra {
    pub fn new(
        field: FiniteField,
        dim: usize,
        unit: Vec<Scalar>,
        table: Vec<Vec<Scalar>>,
    ) -> Self {
        assert_eq!(table.len(), dim * dim);
        assert_eq!(unit.len(), dim);
        StructureAlgebra {
            field,
            dim,
            unit,
            table,
        }
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &[Scalar] {
        &self.table[a * self.dim + b]
    }
}

impl Algebra for StructureAlgebra {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn unit(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }
}

/// The quotient A/I by a two-sided ideal, with an explicit complement basis.
pub struct QuotientAlgebra {
    pub alg: StructureAlgebra,
    ideal: Subspace,
    /// Ambient coordinates of the lifted quotient basis (standard vectors at
    /// the ideal's non-pivot columns).
    complement_cols: Vec<usize>,
    parent_dim: usize,
}

impl QuotientAlgebra {
    pub fn new<A: Algebra>(parent: &A, ideal: &Subspace) -> Self {
        let n = parent.dim();
        assert_eq!(ideal.ambient, n);
        let mut is_pivot = vec![false; n];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let complement_cols: Vec<usize> =
            (0..n).filter(|&c| !is_pivot[c]).collect();
        let k = complement_cols.len();
        let project = |x: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(x);
            complement_cols.iter().map(|&c| r[c]).collect()
        };
        let mut table = Vec::with_capacity(k * k);
        for &ca in &complement_cols {
            for &cb in &complement_cols {
                let prod = parent.mul(&parent.basis_vec(ca), &parent.basis_vec(cb));
                table.push(project(&prod));
            }
        }
        let unit = project(&parent.unit());
        QuotientAlgebra {
            alg: StructureAlgebra::new(parent.field().clone(), k, unit, table),
            ideal: ideal.clone(),
            complement_cols,
            parent_dim: n,
        }
    }

    /// Image of a parent element in quotient coordinates.
    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(x);
        self.complement_cols.iter().map(|&c| r[c]).collect()
    }

    /// The canonical lift of a quotient element (supported on complement columns).
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let mut x = vec![0; self.parent_dim];
        for (&c, &v) in self.complement_cols.iter().zip(q) {
            x[c] = v;
        }
        x
    }
}

/// Jacobson radical of an arbitrary algebra: commutative route when possible,
/// characteristic-coefficient chain otherwise.
pub fn radical<A: Algebra>(alg: &A) -> Subspace {
    if alg.is_commutative() {
        radical_commutative(alg)
    } else {
        radical_chain(alg)
    }
}

/// Radical of a group algebra, using the provable shortcuts first.
pub fn radical_of_group_algebra(ga: &GroupAlgebra) -> Subspace {
    let p = ga.field.p() as usize;
    let n = ga.group.order;
    if n % p != 0 {
        // Maschke: kG is semisimple.
        return Subspace::zero(ga.field.clone(), n);
    }
    if is_power_of(n, p) {
        // kG is local; the radical is the augmentation ideal.
        return augmentation_ideal(ga);
    }
    radical(ga)
}

/// The augmentation ideal ker(aug) = span{g - 1}: the annihilator of the
/// generator of the trivial module, and the radical of kG when G is a p-group.
pub fn augmentation_ideal(ga: &GroupAlgebra) -> Subspace {
    let n = ga.group.order;
    let f = &ga.field;
    let span: Vec<Vec<Scalar>> = (1..n)
        .map(|g| {
            let mut v = ga.zero_elem();
            v[g] = 1;
            v[0] = f.neg(1);
            v
        })
        .collect();
    Subspace::from_span(f.clone(), n, &span)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Commutative case: kernel of x -> x^(p^e) with p^e >= dim, recovered through
/// the inverse Frobenius power.
pub fn radical_commutative<A: Algebra>(alg: &A) -> Subspace {
    let f = alg.field();
    let n = alg.dim();
    let p = f.p();
    let mut e: u32 = 0;
    let mut pe: u64 = 1;
    while pe < n as u64 {
        pe *= p;
        e += 1;
    }
    // Columns: u_a^(p^e). The equation sum_a xi_a^(p^e) * col_a = 0 is linear
    // in eta_a = xi_a^(p^e).
    let mut m = Mat::zeros(f.clone(), n, n);
    for a in 0..n {
        let col = frobenius_power_elem(alg, &alg.basis_vec(a), e);
        for (r, &v) in col.iter().enumerate() {
            if v != 0 {
                m.set(r, a, v);
            }
        }
    }
    let eta_kernel = m.nullspace();
    let span: Vec<Vec<Scalar>> = eta_kernel
        .basis_rows()
        .map(|eta| eta.iter().map(|&x| f.frobenius_inv_pow(x, e)).collect())
        .collect();
    Subspace::from_span(f.clone(), n, &span)
}

/// General case: the descending chain with the charpoly-coefficient pairings.
pub fn radical_chain<A: Algebra>(alg: &A) -> Subspace {
    let f = alg.field().clone();
    let n = alg.dim();
    let p = f.p();
    // Current chain member's basis as ambient vectors.
    let mut basis: Vec<Vec<Scalar>> = (0..n).map(|i| alg.basis_vec(i)).collect();
    let mut i: u32 = 0;
    let mut pi: u64 = 1;
    while pi <= n as u64 && !basis.is_empty() {
        let r = basis.len();
        // B[t][a] = lambda_{p^i}(u_a * u_t): coefficient of t^(n - p^i) in the
        // charpoly of left multiplication on the whole algebra.
        let coeff_index = n - pi as usize;
        let mut b = Mat::zeros(f.clone(), r, r);
        for a in 0..r {
            for t in 0..r {
                let prod = alg.mul(&basis[a], &basis[t]);
                let lm = alg.left_mult_matrix(&prod);
                let cp = lm.charpoly();
                b.set(t, a, cp[coeff_index]);
            }
        }
        let eta_kernel = b.nullspace();
        let mut next: Vec<Vec<Scalar>> = Vec::with_capacity(eta_kernel.dim());
        for eta in eta_kernel.basis_rows() {
            let mut v = vec![0; n];
            for (a, &ea) in eta.iter().enumerate() {
                let xi = f.frobenius_inv_pow(ea, i);
                if xi != 0 {
                    for (vj, bj) in v.iter_mut().zip(&basis[a]) {
                        if *bj != 0 {
                            *vj = f.add(*vj, f.mul(xi, *bj));
                        }
                    }
                }
            }
            next.push(v);
        }
        let sub = Subspace::from_span(f.clone(), n, &next);
        basis = sub.basis_rows().map(|row| row.to_vec()).collect();
        i += 1;
        pi *= p;
    }
    Subspace::from_span(f.clone(), n, &basis)
}

/// Certificate that J is a two-sided ideal with J^k = 0: a sound lower-bound
/// witness that J is contained in the radical.
pub fn certify_nilpotent_ideal<A: Algebra>(alg: &A, j: &Subspace) -> bool {
    let n = alg.dim();
    // ideal property against the basis
    for a in 0..n {
        let ua = alg.basis_vec(a);
        for row in j.basis_rows() {
            if !j.contains(&alg.mul(&ua, row)) || !j.contains(&alg.mul(row, &ua)) {
                return false;
            }
        }
    }
    // nilpotency via subspace powers
    let mut current = j.clone();
    loop {
        if current.dim() == 0 {
            return true;
        }
        let mut span = Vec::new();
        for a in current.basis_rows() {
            for b in j.basis_rows() {
                span.push(alg.mul(a, b));
            }
        }
        let next = Subspace::from_span(alg.field().clone(), j.ambient, &span);
        if next.dim() >= current.dim() {
            return false; // stabilized above zero: not nilpotent
        }
        current = next;
    }
}

/// Test oracle for commutative algebras: the radical is exactly the set of
/// nilpotent elements, so enumerate the whole algebra (q^dim capped).
pub fn commutative_nilpotents_oracle<A: Algebra>(alg: &A, cap: u64) -> Result<Vec<Vec<Scalar>>> {
    assert!(alg.is_commutative());
    let f = alg.field();
    let n = alg.dim();
    let q = f.order();
    let total = q.checked_pow(n as u32).filter(|&t| t <= cap);
    let Some(total) = total else {
        return Err(Error::CapExceeded(format!(
            "enumeration of q^n = {q}^{n} elements exceeds the cap of {cap}"
        )));
    };
    let p = f.p();
    let mut e: u32 = 0;
    let mut pe: u64 = 1;
    while pe < n as u64 {
        pe *= p;
        e += 1;
    }
    let mut nilpotents = Vec::new();
    let mut counter = vec![0u64; n];
    for _ in 0..total {
        let x: Vec<Scalar> = counter.clone();
        if frobenius_power_elem(alg, &x, e).iter().all(|&c| c == 0) {
            nilpotents.push(x);
        }
        let mut i = 0;
        while i < n {
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
    Ok(nilpotents)
}

/// Least m such that GF(p^m) splits kG and the group algebras of all of G's
/// subgroups and quotients: the multiplicative order of p modulo the p'-part
/// of the exponent of G.
pub fn splitting_degree(group: &FiniteGroup, p: u64) -> u32 {
    let mut e = group.exponent();
    while e % p == 0 {
        e /= p;
    }
    if e == 1 {
        return 1;
    }
    let mut m = 1u32;
    let mut pow = p % e;
    while pow != 1 {
        pow = pow * p % e;
        m += 1;
    }
    m
}

/// A block idempotent of kG with its basic invariants.
#[derive(Clone, Debug)]
pub struct BlockIdempotent {
    /// Coefficient vector in kG.
    pub idem: Vec<Scalar>,
    /// dim_k of the block algebra e*kG.
    pub dim: usize,
    /// dim_k of the block's center e*Z(kG).
    pub center_dim: usize,
}

/// The block idempotents of kG, sorted by (dim, coefficient vector).
///
/// Fails with `FieldTooSmall` if the coefficient field does not split the
/// center of kG (detected by checking that x -> x^q is the identity on
/// Z(kG)/J(Z(kG)), which holds precisely when that quotient is a product of
/// copies of the ground field).
pub fn block_idempotents(ga: &GroupAlgebra) -> Result<Vec<BlockIdempotent>> {
    let f = &ga.field;
    let n = ga.group.order;
    let sums = ga.class_sums();
    let k = sums.len();
    let reps: Vec<usize> = ga
        .group
        .conjugacy_classes()
        .iter()
        .map(|c| c[0])
        .collect();
    // Center as a structure algebra on the class-sum basis: a product of class
    // sums is a class function, so its coordinates are read off at class reps.
    let mut table = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            let prod = ga.mul(&sums[a], &sums[b]);
            table.push(reps.iter().map(|&r| prod[r]).collect());
        }
    }
    let mut unit_z = vec![0; k];
    unit_z[0] = 1; // the identity's class is first
    let z = StructureAlgebra::new(f.clone(), k, unit_z, table);
    let j = radical_commutative(&z);
    let q = QuotientAlgebra::new(&z, &j);
    let kq = q.alg.dim;

    // Splitting check: x -> x^q must fix every basis element of Z/J.
    for i in 0..kq {
        let x = q.alg.basis_vec(i);
        let xq = frobenius_power_elem(&q.alg, &x, f.degree());
        if xq != x {
            return Err(Error::FieldTooSmall {
                p: f.p(),
                m: f.degree(),
            });
        }
    }

    // Eigenvalue candidates: the whole field when tables make that cheap,
    // otherwise the subfield the central characters actually live in.
    let candidates: Vec<Scalar> = if f.is_table_backed() {
        f.elements().collect()
    } else {
        let m0 = splitting_degree(&ga.group, f.p());
        let kdeg = gcd_u32(m0, f.degree());
        f.subfield_elements(kdeg)?
    };

    let components = eigensplit(&q.alg, &candidates);

    // Normalize each 1-dimensional component to its idempotent and lift.
    let mut s: u32 = 0;
    let mut ps: u64 = 1;
    while ps < k as u64 {
        ps *= f.p();
        s += 1;
    }
    let mut blocks = Vec::with_capacity(components.len());
    for w in &components {
        let w2 = q.alg.mul(w, w);
        let idx = w.iter().position(|&c| c != 0).expect("zero component");
        let mu = f.div(w2[idx], w[idx]);
        assert!(mu != 0, "component basis vector is nilpotent");
        let inv_mu = f.inv(mu);
        let ebar: Vec<Scalar> = w.iter().map(|&c| f.mul(inv_mu, c)).collect();
        debug_assert_eq!(q.alg.mul(&ebar, &ebar), ebar);
        // lift through the radical
        let a = q.lift(&ebar);
        let e_z = frobenius_power_elem(&z, &a, s);
        assert_eq!(z.mul(&e_z, &e_z), e_z, "lifted element must be idempotent");
        debug_assert_eq!(q.project(&e_z), ebar);
        // expand from class-sum coordinates to kG coefficients
        let mut e_kg = ga.zero_elem();
        for (c, &coef) in e_z.iter().enumerate() {
            if coef != 0 {
                for (g, &ind) in sums[c].iter().enumerate() {
                    if ind != 0 {
                        e_kg[g] = coef;
                    }
                }
            }
        }
        let dim = ga.left_mult_matrix(&e_kg).rank();
        let center_dim = z.left_mult_matrix(&e_z).rank();
        blocks.push(BlockIdempotent {
            idem: e_kg,
            dim,
            center_dim,
        });
    }
    // Invariants guaranteed by the construction; check the global ones.
    let total: usize = blocks.iter().map(|b| b.dim).sum();
    assert_eq!(total, n, "block dimensions must sum to |G|");
    blocks.sort_by(|a, b| (a.dim, &a.idem).cmp(&(b.dim, &b.idem)));
    Ok(blocks)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Split a commutative semisimple algebra (already verified split over its
/// field) into one-dimensional joint eigencomponents of the basis
/// multiplication operators. Returns one basis vector per component, in a
/// deterministic order.
fn eigensplit(alg: &StructureAlgebra, candidates: &[Scalar]) -> Vec<Vec<Scalar>> {
    let f = &alg.field;
    let n = alg.dim;
    let mut components: Vec<Subspace> = vec![Subspace::full(f.clone(), n)];
    for op in 0..n {
        if components.iter().all(|c| c.dim() <= 1) {
            break;
        }
        let m = alg.left_mult_matrix(&alg.basis_vec(op));
        let mut refined: Vec<Subspace> = Vec::with_capacity(components.len());
        for comp in &components {
            let d = comp.dim();
            if d <= 1 {
                refined.push(comp.clone());
                continue;
            }
            // Restrict the operator to the component (components are ideals of
            // the commutative algebra, hence invariant).
            let basis_rows: Vec<Vec<Scalar>> = comp.basis_rows().map(|r| r.to_vec()).collect();
            let mut restricted = Mat::zeros(f.clone(), d, d);
            for (c, row) in basis_rows.iter().enumerate() {
                let image = m.mul_vec(row);
                let coords = comp
                    .coords(&image)
                    .expect("component not invariant under multiplication");
                for (r, &v) in coords.iter().enumerate() {
                    if v != 0 {
                        restricted.set(r, c, v);
                    }
                }
            }
            let cp = restricted.charpoly();
            let mut found_dims = 0usize;
            let mut pieces: Vec<Subspace> = Vec::new();
            for &lam in candidates {
                // evaluate charpoly at lam before paying for a kernel
                let mut val = 0;
                for &c in cp.iter().rev() {
                    val = f.add(f.mul(val, lam), c);
                }
                if val != 0 {
                    continue;
                }
                let mut shifted = restricted.clone();
                for i in 0..d {
                    shifted.set(i, i, f.sub(shifted.at(i, i), lam));
                }
                let eig = shifted.nullspace();
                if eig.dim() == 0 {
                    continue;
                }
                found_dims += eig.dim();
                // map back to ambient coordinates
                let ambient_rows: Vec<Vec<Scalar>> = eig
                    .basis_rows()
                    .map(|krow| {
                        let mut v = vec![0; n];
                        for (i, &ki) in krow.iter().enumerate() {
                            if ki != 0 {
                                for (vj, bj) in v.iter_mut().zip(&basis_rows[i]) {
                                    if *bj != 0 {
                                        *vj = f.add(*vj, f.mul(ki, *bj));
                                    }
                                }
                            }
                        }
                        v
                    })
                    .collect();
                pieces.push(Subspace::from_span(f.clone(), n, &ambient_rows));
                if found_dims == d {
                    break;
                }
            }
            assert_eq!(
                found_dims, d,
                "operator must be diagonalizable over the verified splitting field"
            );
            refined.extend(pieces);
        }
        components = refined;
    }
    for c in &components {
        assert_eq!(
            c.dim(),
            1,
            "joint eigencomponents of a split commutative semisimple algebra are lines"
        );
    }
    components
        .iter()
        .map(|c| c.basis_rows().next().unwrap().to_vec())
        .collect()
}
