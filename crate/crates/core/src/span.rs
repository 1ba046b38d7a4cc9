//! Linear spans of matrices: the word-span closure used for the Burnside
//! irreducibility certificate, and minimal polynomials.
//!
//! Matrices live here as flat coordinate vectors of length n^2. The span
//! builder keeps a forward-eliminated pivot list so a new candidate either
//! reduces to zero (dependent) or contributes a fresh pivot.

use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;

struct SpanBuilder<T> {
    /// (pivot index, reduced vector with 1 at the pivot).
    pivots: Vec<(usize, Vec<T>)>,
}

impl<T: Field> SpanBuilder<T> {
    fn new() -> Self {
        SpanBuilder { pivots: Vec::new() }
    }

    fn reduce(&self, v: &mut [T]) {
        for (p, row) in &self.pivots {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    let sub = f.clone() * r.clone();
                    *x = x.clone() - sub;
                }
            }
        }
    }

    /// Inserts the vector if independent; returns the reduced representative
    /// when it extended the span.
    fn insert(&mut self, mut v: Vec<T>) -> Option<Vec<T>> {
        self.reduce(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = T::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.pivots.push((p, v.clone()));
        Some(v)
    }
}

/// A reduced spanning set of the unital algebra generated by the given
/// matrices, closed under left multiplication by every generator.
pub fn matrix_algebra_closure<T: Field>(gens: &[&Matrix<T>]) -> Vec<Matrix<T>> {
    assert!(!gens.is_empty());
    let n = gens[0].rows();
    assert!(gens.iter().all(|g| g.is_square() && g.rows() == n));

    let mut span = SpanBuilder::new();
    let mut basis: Vec<Matrix<T>> = Vec::new();
    let mut queue: Vec<Matrix<T>> = Vec::new();

    let identity = Matrix::identity(n);
    if let Some(red) = span.insert(identity.flatten()) {
        let m = Matrix::new(n, n, red);
        basis.push(m.clone());
        queue.push(m);
    }
    while let Some(w) = queue.pop() {
        for g in gens {
            let prod = *g * &w;
            if let Some(red) = span.insert(prod.flatten()) {
                let m = Matrix::new(n, n, red);
                basis.push(m.clone());
                queue.push(m);
            }
        }
    }
    basis
}

/// Dimension of the unital matrix algebra generated by a and astar.
///
/// The value n^2 certifies absolute irreducibility of the pair: no common
/// invariant subspace exists over any extension field. A smaller value only
/// says the certificate failed.
pub fn generated_algebra_dimension<T: Field>(a: &Matrix<T>, astar: &Matrix<T>) -> usize {
    matrix_algebra_closure(&[a, astar]).len()
}

/// Monic minimal polynomial of a square matrix, returned as the coefficient
/// list c_0..c_k with c_k = 1 (so p(x) = sum c_i x^i).
///
/// Powers of the matrix are inserted into a span with coefficient tracking;
/// the first dependent power yields the relation.
pub fn min_poly<T: Field>(m: &Matrix<T>) -> Vec<T> {
    assert!(m.is_square());
    let n = m.rows();
    // Augmented rows: [vec(M^k) | lambda] with the invariant
    // main = sum_j lambda_j vec(M^j) over the inserted powers.
    let mut rows: Vec<(usize, Vec<T>, Vec<T>)> = Vec::new(); // (pivot, main, aug)
    let mut power: Matrix<T> = Matrix::identity(n);
    for k in 0..=n {
        let mut main = power.flatten();
        let mut aug = vec![T::zero(); n + 1];
        aug[k] = T::one();
        for (p, rmain, raug) in &rows {
            if !main[*p].is_zero() {
                let f = main[*p].clone();
                for (x, r) in main.iter_mut().zip(rmain) {
                    let sub = f.clone() * r.clone();
                    *x = x.clone() - sub;
                }
                for (x, r) in aug.iter_mut().zip(raug) {
                    let sub = f.clone() * r.clone();
                    *x = x.clone() - sub;
                }
            }
        }
        match main.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = T::one() / main[p].clone();
                for x in main.iter_mut() {
                    *x = x.clone() * inv.clone();
                }
                for x in aug.iter_mut() {
                    *x = x.clone() * inv.clone();
                }
                rows.push((p, main, aug));
            }
            None => {
                // The reduced augment expresses 0 = sum_j aug_j M^j with
                // aug_k = 1, since earlier rows have no k component.
                return aug[..=k].to_vec();
            }
        }
        power = &power * m;
    }
    unreachable!("a degree <= n relation always exists by Cayley-Hamilton");
}

/// Evaluates a polynomial given as c_0..c_k at x, exactly.
pub fn poly_eval<T: Field>(coeffs: &[T], x: &T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, c| {
        acc * x.clone() + c.clone()
    })
}

/// All rational roots of a monic rational polynomial, without multiplicity.
///
/// Clears denominators and runs the classical u/v divisor search. Works at
/// desk scale; refuses (with an error) when the constant or leading integer
/// coefficient is too large to factor by direct trial division.
pub fn rational_roots(coeffs: &[crate::Rat]) -> Result<Vec<crate::Rat>, Error> {
    use num::{BigInt, One, Signed, Zero};
    let one = BigInt::one();

    assert!(!coeffs.is_empty());
    // Clear denominators.
    let mut lcm = one.clone();
    for c in coeffs {
        lcm = num::Integer::lcm(&lcm, c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();

    let mut roots = Vec::new();
    // Strip x^s: zero is a root when the low coefficients vanish.
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(crate::Rat::zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return Ok(roots);
    }

    let c0 = ints.first().unwrap().abs();
    let cl = ints.last().unwrap().abs();
    let numerators = divisors(&c0)?;
    let denominators = divisors(&cl)?;
    for u in &numerators {
        for v in &denominators {
            for sign in [1i64, -1] {
                let cand = crate::Rat::new(u * BigInt::from(sign), v.clone());
                if poly_eval(coeffs, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Positive divisors via trial-division factoring, guarded for desk scale.
fn divisors(n: &num::BigInt) -> Result<Vec<num::BigInt>, Error> {
    use num::{BigInt, One, ToPrimitive};

    let mut m = n
        .to_u128()
        .ok_or_else(|| Error::SpectrumOutOfRange(format!("coefficient {n} too large")))?;
    if m == 0 {
        return Err(Error::SpectrumOutOfRange("zero coefficient".into()));
    }
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut p: u128 = 2;
    while p <= 1 << 20 && p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        // No factor below 2^20 remains; m is prime when below 2^40.
        if m >= 1 << 40 {
            return Err(Error::SpectrumOutOfRange(format!(
                "cofactor {m} too large to certify prime"
            )));
        }
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= BigInt::from(p);
            }
        }
        divs = next;
        if divs.len() > 100_000 {
            return Err(Error::SpectrumOutOfRange(
                "too many divisor candidates".into(),
            ));
        }
    }
    Ok(divs)
}

/// The distinct rational eigenvalues of a matrix that is diagonalizable over
/// the rationals; errors when the minimal polynomial has repeated or
/// irrational roots.
pub fn rational_spectrum(m: &crate::Mat) -> Result<Vec<crate::Rat>, Error> {
    let p = min_poly(m);
    let roots = rational_roots(&p)?;
    if roots.len() + 1 != p.len() {
        return Err(Error::NotDiagonalizable(format!(
            "minimal polynomial of degree {} has only {} distinct rational roots",
            p.len() - 1,
            roots.len()
        )));
    }
    Ok(roots)
}
