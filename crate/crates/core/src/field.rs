//! Arithmetic in GF(p^m).
//!
//! Elements are stored as `Scalar` (= `u64`) values in `0..p^m`, encoding the
//! residue polynomial `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` as the integer
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The modulus is chosen
//! deterministically: the irreducible monic polynomial of degree `m` with the
//! least integer encoding and nonzero constant term, so repeated runs (and
//! independent implementations following the same rule) agree on every scalar
//! value. For `m = 1` this picks `x + 1`; for GF(8) it picks `x^3 + x + 1`.
//!
//! Fields of order up to 2^16 get exp/log tables; larger fields fall back to
//! polynomial arithmetic (bit-packed for p = 2, digit vectors otherwise).

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// An element of a finite field, encoded as described in the module docs.
pub type Scalar = u64;

const TABLE_LIMIT: u64 = 1 << 16;
const SUBFIELD_ENUM_LIMIT: u64 = 1 << 20;
const FIELD_ORDER_LIMIT: u64 = 1 << 31;

struct Tables {
    /// exp[i] = g^i for the least primitive element g, doubled so that
    /// exp[log a + log b] needs no reduction mod q-1.
    exp: Vec<Scalar>,
    /// log[x] for x in 1..q; log[0] is a sentinel and never read.
    log: Vec<u32>,
    /// frob[x] = x^p.
    frob: Vec<Scalar>,
}

struct FieldRepr {
    p: u64,
    m: u32,
    q: u64,
    /// Modulus coefficients c_0..c_m (monic, c_m = 1).
    modulus: Vec<u64>,
    /// p^0..p^m.
    pow_p: Vec<u64>,
    /// For p = 2: the modulus as a bitmask (bit i = c_i).
    mod_mask: u64,
    tables: Option<Tables>,
}

/// A finite field GF(p^m), cheap to clone and compare.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldRepr>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m
    }
}
impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

impl FiniteField {
    /// Construct GF(p^m) with the deterministic least modulus.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeZero);
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= FIELD_ORDER_LIMIT)
                .ok_or(Error::FieldTooLarge { p, m })?;
        }
        let mut pow_p = Vec::with_capacity(m as usize + 1);
        let mut acc = 1u64;
        for _ in 0..=m {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }
        let modulus = least_irreducible(p, m);
        let mod_mask: u64 = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .map(|(i, &c)| c << i)
                .fold(0, |a, b| a | b)
        } else {
            0
        };
        let mut repr = FieldRepr {
            p,
            m,
            q,
            modulus,
            pow_p,
            mod_mask,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            repr.tables = Some(build_tables(&repr));
        }
        Ok(FiniteField(Arc::new(repr)))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree m.
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients c_0..c_m (monic).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        0
    }

    pub fn one(&self) -> Scalar {
        1
    }

    /// Embed an integer via reduction mod p (image lies in the prime field).
    pub fn from_int(&self, n: u64) -> Scalar {
        n % self.0.p
    }

    /// All field elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.0.q
    }

    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let r = &*self.0;
        debug_assert!(a < r.q && b < r.q);
        if r.p == 2 {
            return a ^ b;
        }
        if r.m == 1 {
            let s = a + b;
            return if s >= r.p { s - r.p } else { s };
        }
        let mut out = 0u64;
        let (mut av, mut bv) = (a, b);
        let mut pw = 1u64;
        while av != 0 || bv != 0 {
            let d = (av % r.p + bv % r.p) % r.p;
            out += d * pw;
            av /= r.p;
            bv /= r.p;
            pw *= r.p;
        }
        out
    }

    pub fn neg(&self, a: Scalar) -> Scalar {
        let r = &*self.0;
        if r.p == 2 {
            return a;
        }
        if r.m == 1 {
            return if a == 0 { 0 } else { r.p - a };
        }
        let mut out = 0u64;
        let mut av = a;
        let mut pw = 1u64;
        while av != 0 {
            let d = av % r.p;
            if d != 0 {
                out += (r.p - d) * pw;
            }
            av /= r.p;
            pw *= r.p;
        }
        out
    }

    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        let r = &*self.0;
        debug_assert!(a < r.q && b < r.q);
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &r.tables {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize];
        }
        mul_no_tables(r, a, b)
    }

    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero");
        let r = &*self.0;
        if let Some(t) = &r.tables {
            let l = t.log[a as usize] as u64;
            return t.exp[(r.q - 1 - l) as usize];
        }
        self.pow(a, r.q - 2)
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Scalar {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Scalar, e: u64) -> Scalar {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let e = e % (self.0.q - 1);
        let mut result = 1;
        let mut base = a;
        let mut e = e;
        while e != 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// x -> x^p.
    pub fn frobenius(&self, a: Scalar) -> Scalar {
        let r = &*self.0;
        if let Some(t) = &r.tables {
            return t.frob[a as usize];
        }
        self.pow(a, r.p)
    }

    /// x -> x^(p^k); k is reduced mod m.
    pub fn frobenius_pow(&self, a: Scalar, k: u32) -> Scalar {
        let k = k % self.0.m;
        let mut x = a;
        for _ in 0..k {
            x = self.frobenius(x);
        }
        x
    }

    /// The inverse of `frobenius_pow(_, k)`: x -> x^(p^(-k)).
    pub fn frobenius_inv_pow(&self, a: Scalar, k: u32) -> Scalar {
        let m = self.0.m;
        self.frobenius_pow(a, (m - k % m) % m)
    }

    /// Elements of the subfield GF(p^k), for k dividing m, in ascending order.
    pub fn subfield_elements(&self, k: u32) -> Result<Vec<Scalar>> {
        let r = &*self.0;
        assert!(k >= 1 && r.m % k == 0, "subfield degree must divide m");
        if r.tables.is_some() {
            return Ok(self
                .elements()
                .filter(|&x| self.frobenius_pow(x, k) == x)
                .collect());
        }
        // Large field: the map x -> x^(p^k) - x is F_p-linear; its kernel is
        // the subfield. Solve over F_p in digit coordinates.
        let sub_order = r.pow_p[k as usize];
        if sub_order > SUBFIELD_ENUM_LIMIT {
            return Err(Error::CapExceeded(format!(
                "subfield of order {sub_order} is too large to enumerate"
            )));
        }
        let m = r.m as usize;
        // Column j = digits of psi(x^j) where psi(x) = x^(p^k) - x.
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(m);
        for j in 0..m {
            let e_j = r.pow_p[j]; // the scalar encoding the monomial x^j
            let image = self.sub(self.frobenius_pow(e_j, k), e_j);
            cols.push(decode(r, image));
        }
        let kernel = fp_kernel(&cols, r.p, m);
        debug_assert_eq!(r.pow_p[kernel.len()], sub_order);
        // Enumerate all F_p-combinations of the kernel basis.
        let mut out = Vec::with_capacity(sub_order as usize);
        let dim = kernel.len();
        let mut counter = vec![0u64; dim];
        loop {
            let mut x: Scalar = 0;
            for (c, b) in counter.iter().zip(&kernel) {
                if *c != 0 {
                    x = self.add(x, self.mul(*c, *b));
                }
            }
            out.push(x);
            // increment base-p counter
            let mut i = 0;
            loop {
                if i == dim {
                    out.sort_unstable();
                    debug_assert_eq!(out.len() as u64, sub_order);
                    return Ok(out);
                }
                counter[i] += 1;
                if counter[i] < r.p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }

    /// Whether exp/log tables back this field's arithmetic.
    pub fn is_table_backed(&self) -> bool {
        self.0.tables.is_some()
    }

    /// Table-free multiplication, exposed for cross-path tests.
    #[doc(hidden)]
    pub fn mul_poly_path(&self, a: Scalar, b: Scalar) -> Scalar {
        if a == 0 || b == 0 {
            return 0;
        }
        mul_no_tables(&self.0, a, b)
    }
}

fn mul_no_tables(r: &FieldRepr, a: Scalar, b: Scalar) -> Scalar {
    if r.p == 2 {
        // Carryless multiply then reduce by the modulus bitmask.
        let mut acc: u64 = 0;
        let mut bb = b;
        let mut sh = 0u32;
        while bb != 0 {
            if bb & 1 == 1 {
                acc ^= a << sh;
            }
            bb >>= 1;
            sh += 1;
        }
        let m = r.m;
        while acc >= (1u64 << m) {
            let top = 63 - acc.leading_zeros();
            acc ^= r.mod_mask << (top - m);
        }
        return acc;
    }
    let da = decode(r, a);
    let db = decode(r, b);
    let prod = pmul(&da, &db, r.p);
    let red = pmod(&prod, &r.modulus, r.p);
    encode(r, &red)
}

fn decode(r: &FieldRepr, a: Scalar) -> Vec<u64> {
    let mut digits = vec![0u64; r.m as usize];
    let mut v = a;
    for d in digits.iter_mut() {
        *d = v % r.p;
        v /= r.p;
    }
    digits
}

fn encode(r: &FieldRepr, digits: &[u64]) -> Scalar {
    let mut out = 0u64;
    for (i, &d) in digits.iter().enumerate().take(r.m as usize) {
        out += d * r.pow_p[i];
    }
    out
}

fn build_tables(r: &FieldRepr) -> Tables {
    let q = r.q;
    let g = least_primitive_element(r);
    let n = (q - 1) as usize;
    let mut exp = vec![0u64; 2 * n];
    let mut log = vec![0u32; q as usize];
    let mut x: Scalar = 1;
    for (i, slot) in exp.iter_mut().enumerate().take(n) {
        *slot = x;
        log[x as usize] = i as u32;
        x = mul_no_tables(r, x, g);
    }
    debug_assert_eq!(x, 1, "primitive element has wrong order");
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    let mut frob = vec![0u64; q as usize];
    for a in 1..q {
        let l = (log[a as usize] as u64 * r.p) % (q - 1);
        frob[a as usize] = exp[l as usize];
    }
    Tables { exp, log, frob }
}

/// Least element of multiplicative order q-1, found by scanning encodings.
fn least_primitive_element(r: &FieldRepr) -> Scalar {
    let q = r.q;
    if q == 2 {
        return 1; // the multiplicative group is trivial
    }
    let factors = prime_factors(q - 1);
    'cand: for g in 2..q {
        for &f in &factors {
            if pow_no_tables(r, g, (q - 1) / f) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("no primitive element found (field construction is broken)")
}

fn pow_no_tables(r: &FieldRepr, a: Scalar, mut e: u64) -> Scalar {
    let mut result: Scalar = 1;
    let mut base = a;
    while e != 0 {
        if e & 1 == 1 {
            result = mul_no_tables(r, result, base);
        }
        base = mul_no_tables(r, base, base);
        e >>= 1;
    }
    result
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut i = 3u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---- dense polynomial arithmetic over GF(p), little-endian coefficients ----

fn ptrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    ptrim(&mut out);
    out
}

/// Remainder of `a` modulo a *monic* polynomial `f`.
fn pmod(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ptrim(&mut r);
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if lead != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = i + shift;
                let sub = (lead * fc) % p;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        ptrim(&mut r);
    }
    r
}

fn int_pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    base %= p;
    let mut result = 1u64;
    while e != 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ptrim(&mut x);
    ptrim(&mut y);
    while !y.is_empty() {
        // monicize y so pmod applies
        let lead = *y.last().unwrap();
        if lead != 1 {
            let inv = int_pow_mod(lead, p - 2, p);
            for c in y.iter_mut() {
                *c = *c * inv % p;
            }
        }
        let r = pmod(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn ppow_x_mod(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    // x^e mod f, binary powering
    let mut result = vec![1u64];
    let mut base = pmod(&[0, 1], f, p);
    let mut e = e;
    while e != 0 {
        if e & 1 == 1 {
            result = pmod(&pmul(&result, &base, p), f, p);
        }
        base = pmod(&pmul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        out[i] = (av + p - bv % p) % p;
    }
    ptrim(&mut out);
    out
}

/// Rabin irreducibility test for a monic polynomial of degree m over GF(p).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    for &r in &prime_factors(m as u64) {
        let e = (p as u128).pow(m / r as u32) as u64;
        let xe = ppow_x_mod(e, f, p);
        let g = pgcd(&poly_sub(&xe, &x, p), f, p);
        if g.len() != 1 {
            return false;
        }
    }
    let e = (p as u128).pow(m) as u64;
    let xe = ppow_x_mod(e, f, p);
    poly_sub(&xe, &x, p).is_empty()
}

/// The monic irreducible polynomial of degree m over GF(p) whose coefficient
/// vector has the least integer encoding sum(c_i p^i), with c_0 != 0.
fn least_irreducible(p: u64, m: u32) -> Vec<u64> {
    let pm = (p as u128).pow(m) as u64;
    for val in pm..2 * pm {
        if val % p == 0 {
            continue; // c_0 = 0: divisible by x (and x itself is excluded)
        }
        let mut digits = Vec::with_capacity(m as usize + 1);
        let mut v = val;
        while v != 0 {
            digits.push(v % p);
            v /= p;
        }
        debug_assert_eq!(digits.len(), m as usize + 1);
        if is_irreducible(&digits, p) {
            return digits;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} over GF({p}) exists")
}

/// Kernel basis over F_p of the m x m matrix whose columns are given as digit
/// vectors; each kernel vector is returned re-encoded as a field scalar.
fn fp_kernel(cols: &[Vec<u64>], p: u64, m: usize) -> Vec<Scalar> {
    // Gaussian elimination on the m x m system over F_p.
    let mut a: Vec<Vec<u64>> = (0..m)
        .map(|r| (0..m).map(|c| cols[c][r]).collect())
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..m {
        let Some(pr) = (row..m).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = int_pow_mod(a[row][col], p - 2, p);
        for c in col..m {
            a[row][c] = a[row][c] * inv % p;
        }
        for r in 0..m {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..m {
                    a[r][c] = (a[r][c] + (p - f) * a[row][c]) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
    }
    let pivot_set: Vec<usize> = pivot_col_of_row.clone();
    let mut kernel = Vec::new();
    for free in 0..m {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; m];
        v[free] = 1;
        for (r, &pc) in pivot_set.iter().enumerate() {
            v[pc] = (p - a[r][free] % p) % p;
        }
        // encode digit vector as a scalar
        let mut x: Scalar = 0;
        let mut pw = 1u64;
        for &d in &v {
            x += d * pw;
            pw *= p;
        }
        kernel.push(x);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus_of(p: u64, m: u32) -> Vec<u64> {
        FiniteField::new(p, m).unwrap().modulus().to_vec()
    }

    #[test]
    fn deterministic_moduli_match_frozen_values() {
        assert_eq!(modulus_of(2, 1), vec![1, 1]);
        assert_eq!(modulus_of(2, 2), vec![1, 1, 1]);
        assert_eq!(modulus_of(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(modulus_of(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(modulus_of(2, 6), vec![1, 1, 0, 0, 0, 0, 1]);
        assert_eq!(modulus_of(2, 8), vec![1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(modulus_of(3, 1), vec![1, 1]);
        assert_eq!(modulus_of(3, 2), vec![1, 0, 1]);
        assert_eq!(modulus_of(3, 3), vec![1, 2, 0, 1]);
        assert_eq!(modulus_of(3, 4), vec![2, 1, 0, 0, 1]);
        assert_eq!(modulus_of(5, 1), vec![1, 1]);
        assert_eq!(modulus_of(5, 2), vec![2, 0, 1]);
        assert_eq!(modulus_of(7, 1), vec![1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FiniteField::new(1, 1), Err(Error::NotPrime(1))));
        assert!(matches!(FiniteField::new(2, 0), Err(Error::DegreeZero)));
        assert!(matches!(
            FiniteField::new(2, 40),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    fn check_axioms_exhaustive(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "inv failed for {a}");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn gf8_and_gf9_satisfy_field_axioms() {
        check_axioms_exhaustive(&FiniteField::new(2, 3).unwrap());
        check_axioms_exhaustive(&FiniteField::new(3, 2).unwrap());
    }

    #[test]
    fn frobenius_is_a_field_automorphism_of_order_m() {
        for (p, m) in [(2u64, 4u32), (3, 3), (5, 2)] {
            let f = FiniteField::new(p, m).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius(a), f.pow(a, p));
                for b in f.elements().take(20) {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                }
                assert_eq!(f.frobenius_pow(a, m), a, "Frobenius^m must be identity");
                assert_eq!(f.frobenius_pow(f.frobenius_inv_pow(a, 2), 2), a);
            }
        }
    }

    #[test]
    fn table_and_poly_paths_agree() {
        for (p, m) in [(2u64, 6u32), (3, 4), (5, 2)] {
            let f = FiniteField::new(p, m).unwrap();
            assert!(f.is_table_backed());
            for a in f.elements() {
                for b in f.elements().step_by(7) {
                    assert_eq!(f.mul(a, b), f.mul_poly_path(a, b), "p={p} m={m} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn large_field_arithmetic_is_consistent() {
        // GF(2^18) exceeds the table limit, so this exercises the poly path.
        let f = FiniteField::new(2, 18).unwrap();
        assert!(!f.is_table_backed());
        let a: Scalar = 0b1011010111;
        let b: Scalar = 0b1101;
        assert_eq!(f.mul(a, f.inv(a)), 1);
        assert_eq!(f.mul(a, b), f.mul(b, a));
        assert_eq!(f.pow(a, f.order() - 1), 1);
        assert_eq!(f.frobenius_pow(a, 18), a);
    }

    #[test]
    fn subfield_enumeration_small_and_large() {
        let f16 = FiniteField::new(2, 4).unwrap();
        let sub = f16.subfield_elements(2).unwrap();
        assert_eq!(sub.len(), 4);
        assert!(sub.contains(&0) && sub.contains(&1));
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f16.mul(a, b)));
                assert!(sub.contains(&f16.add(a, b)));
            }
        }

        let f = FiniteField::new(2, 18).unwrap();
        let sub = f.subfield_elements(6).unwrap();
        assert_eq!(sub.len(), 64);
        for &a in &sub {
            assert_eq!(f.frobenius_pow(a, 6), a);
        }
        for &a in sub.iter().take(10) {
            for &b in sub.iter().take(10) {
                assert!(sub.binary_search(&f.mul(a, b)).is_ok());
            }
        }
    }

    #[test]
    fn prime_field_matches_integer_arithmetic() {
        let f = FiniteField::new(7, 1).unwrap();
        for a in 0..7u64 {
            for b in 0..7u64 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
            }
        }
    }
}
