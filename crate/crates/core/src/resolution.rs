//! Minimal free resolutions of cyclic modules over a finite-dimensional algebra.
//!
//! A cyclic module M = Λ/ann is resolved by free modules
//!
//! ```text
//!   ... -> Λ^{r_2} -> Λ^{r_1} -> Λ -> M -> 0
//! ```
//!
//! where each syzygy Ω^{i+1} = ker(d_i) is generated minimally: a set of basis
//! vectors of Ω that is independent modulo J·Ω lifts to a minimal generating
//! set by Nakayama's lemma. The boundary d_{i+1} sends the t-th free basis
//! vector to the t-th chosen generator, so its matrix in basis coordinates is
//! assembled from right-multiplication blocks, and the next syzygy is the
//! nullspace of that matrix.
//!
//! When the algebra is semisimple the cyclic module is projective and a free
//! resolution never terminates while carrying no cohomological content, so the
//! resolution degenerates to the covering map alone and consumers read all
//! higher cohomology as zero.
//!
//! Elements of Λ^r are flattened vectors of length r * dim Λ, component j
//! occupying coordinates [j*n, (j+1)*n).

use crate::algebra::Algebra;
use crate::field::Scalar;
use crate::matrix::{Mat, Subspace};
use crate::{Error, Result};

/// Default cap on rank * dim(Λ) for any single free module in a resolution.
pub const RESOLUTION_CAP: usize = 20_000;

/// A (truncated) minimal free resolution of a cyclic module.
pub struct Resolution {
    /// True when the algebra is semisimple: the module is projective, `ranks`
    /// is just `[1]`, and all positive-degree cohomology vanishes.
    pub semisimple: bool,
    /// ranks[i] = rank of the degree-i free module, i = 0 ..= length.
    pub ranks: Vec<usize>,
    /// generators[i-1] (degree i = 1 ..= length): the images of the degree-i
    /// free basis vectors, as flattened elements of Λ^{ranks[i-1]}.
    pub generators: Vec<Vec<Vec<Scalar>>>,
    /// The annihilator of the module's generator (the first syzygy).
    pub annihilator: Subspace,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }
}

impl std::fmt::Debug for Resolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Resolution")
            .field("semisimple", &self.semisimple)
            .field("ranks", &self.ranks)
            .finish()
    }
}

/// Rows spanning J * W inside Λ^r, from a basis of J and a basis of W.
fn radical_times_submodule<A: Algebra>(
    alg: &A,
    radical: &Subspace,
    omega: &Subspace,
    r: usize,
) -> Subspace {
    let n = alg.dim();
    let f = alg.field().clone();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(radical.dim() * omega.dim());
    for t in radical.basis_rows() {
        for w in omega.basis_rows() {
            let mut tw = vec![0; r * n];
            for j in 0..r {
                let comp = &w[j * n..(j + 1) * n];
                if comp.iter().all(|&c| c == 0) {
                    continue;
                }
                let prod = alg.mul(t, comp);
                tw[j * n..(j + 1) * n].copy_from_slice(&prod);
            }
            rows.push(tw);
        }
    }
    Subspace::from_span(f, r * n, &rows)
}

/// Span of the left submodule generated by `v` inside Λ^r.
fn module_closure<A: Algebra>(alg: &A, v: &[Scalar], r: usize) -> Subspace {
    let n = alg.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for a in 0..n {
        let ua = alg.basis_vec(a);
        let mut uv = vec![0; r * n];
        for j in 0..r {
            let comp = &v[j * n..(j + 1) * n];
            if comp.iter().all(|&c| c == 0) {
                continue;
            }
            let prod = alg.mul(&ua, comp);
            uv[j * n..(j + 1) * n].copy_from_slice(&prod);
        }
        rows.push(uv);
    }
    Subspace::from_span(alg.field().clone(), r * n, &rows)
}

/// Choose a small set of module generators for `omega` inside Λ^r.
///
/// A set generates `omega` iff it spans `omega` modulo `jw` (Nakayama), but
/// the number of generators matters: each one costs a full free summand Λ in
/// the cover, and any overcount resurfaces in the next kernel and compounds
/// degree by degree. When the algebra is local (radical of codimension one,
/// as for p-group algebras) no element can cover more than one dimension of
/// the quotient, so a k-basis of omega/jw is already optimal and we take
/// basis rows directly. Otherwise one element can generate several simple
/// summands of omega/jw at once, so we grow the generated submodule greedily,
/// always adopting the candidate whose Λ-closure adds the most. The candidate
/// pool holds the reduced complement representatives together with their
/// prefix sums, since a sum of vectors from different isotypic components
/// covers all of those components with a single free generator.
fn minimal_generators<A: Algebra>(
    alg: &A,
    omega: &Subspace,
    jw: &Subspace,
    local: bool,
) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let r = omega.ambient / n;
    let f = jw.field().clone();
    if local {
        // gain per element is at most one dimension, so an echelon sweep of
        // the basis rows modulo jw is already an optimal generating set
        let mut extra: Vec<Vec<Scalar>> = Vec::new();
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for w in omega.basis_rows() {
            let mut resid = jw.reduce(w);
            for row in &extra {
                let piv = row.iter().position(|&c| c != 0).unwrap();
                if resid[piv] != 0 {
                    let c = resid[piv];
                    for (ri, &xi) in resid.iter_mut().zip(row) {
                        if xi != 0 {
                            *ri = f.sub(*ri, f.mul(c, xi));
                        }
                    }
                }
            }
            if resid.iter().any(|&c| c != 0) {
                let piv = resid.iter().position(|&c| c != 0).unwrap();
                let inv = f.inv(resid[piv]);
                for ri in resid.iter_mut() {
                    *ri = f.mul(inv, *ri);
                }
                let pos = extra
                    .iter()
                    .position(|row| row.iter().position(|&c| c != 0).unwrap() > piv)
                    .unwrap_or(extra.len());
                extra.insert(pos, resid);
                gens.push(w.to_vec());
            }
        }
        return gens;
    }
    let mut covered = jw.clone();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    loop {
        // reduced representatives of omega modulo what is covered so far
        let mut reps: Vec<Vec<Scalar>> = Vec::new();
        for w in omega.basis_rows() {
            let resid = covered.reduce(w);
            if resid.iter().any(|&c| c != 0) {
                reps.push(resid);
            }
        }
        if reps.is_empty() {
            break;
        }
        let mut pool: Vec<Vec<Scalar>> = reps.clone();
        let mut acc = vec![0; r * n];
        for rep in &reps {
            for (ai, &ri) in acc.iter_mut().zip(rep) {
                *ai = f.add(*ai, ri);
            }
            pool.push(acc.clone());
        }
        let mut best: Option<(usize, Subspace, Vec<Scalar>)> = None;
        for v in &pool {
            let grown = covered.sum(&module_closure(alg, v, r));
            let gain = grown.dim() - covered.dim();
            if gain == 0 {
                continue;
            }
            if best.as_ref().map_or(true, |(g, _, _)| gain > *g) {
                best = Some((gain, grown, v.clone()));
            }
        }
        let (_, grown, v) = best.expect("a nonzero residual must make progress");
        covered = grown;
        gens.push(v);
    }
    gens
}

/// Minimal free resolution of the cyclic module Λ/ann, truncated at `length`.
///
/// `radical` must be the Jacobson radical of the algebra and `ann` the
/// annihilator of the chosen generator (a left ideal). The cap bounds
/// rank * dim(Λ) for every free module constructed.
pub fn resolve_cyclic<A: Algebra>(
    alg: &A,
    ann: &Subspace,
    radical: &Subspace,
    length: usize,
    cap: usize,
) -> Result<Resolution> {
    let n = alg.dim();
    assert_eq!(ann.ambient, n, "annihilator must live in the algebra");
    if radical.dim() == 0 {
        return Ok(Resolution {
            semisimple: true,
            ranks: vec![1],
            generators: Vec::new(),
            annihilator: ann.clone(),
        });
    }
    let mut ranks: Vec<usize> = vec![1];
    let mut generators: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut omega = ann.clone();
    // local algebra (one simple module, one-dimensional): radical has
    // codimension one, and generator selection can take the cheap path
    let local = radical.dim() + 1 == n;
    for deg in 1..=length {
        let r_prev = *ranks.last().unwrap();
        if omega.dim() == 0 {
            // The previous module was free: the resolution has terminated.
            for _ in deg..=length {
                ranks.push(0);
                generators.push(Vec::new());
            }
            break;
        }
        let jw = radical_times_submodule(alg, radical, &omega, r_prev);
        let gens = minimal_generators(alg, &omega, &jw, local);
        let r = gens.len();
        let need = r * n;
        if need > cap {
            return Err(Error::ResolutionTooLarge {
                degree: deg,
                rank: r,
                dim: n,
                need,
                cap,
            });
        }
        ranks.push(r);
        generators.push(gens.clone());
        if deg == length {
            break;
        }
        // boundary matrix: block (j, t) is right-multiplication by gens[t]'s
        // j-th component, acting on the degree-deg free coordinates
        let mut d = Mat::zeros(alg.field().clone(), r_prev * n, r * n);
        for (t, g) in gens.iter().enumerate() {
            for j in 0..r_prev {
                let comp = &g[j * n..(j + 1) * n];
                if comp.iter().all(|&c| c == 0) {
                    continue;
                }
                let block = alg.right_mult_matrix(comp);
                d.add_scaled_block(j * n, t * n, 1, &block);
            }
        }
        omega = d.nullspace();
    }
    Ok(Resolution {
        semisimple: false,
        ranks,
        generators,
        annihilator: ann.clone(),
    })
}
