//! Direct sum decomposition over the rationals: the radical of the
//! endomorphism algebra comes from the trace form, splittings from stable
//! powers of non-nilpotent non-invertible endomorphisms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::Matrix;

use super::{hom_space, ModuleMorphism, Representation};

fn operator_trace<F: Field>(h: &ModuleMorphism<F>) -> F::Elem {
    let f = h.source().field();
    let mut t = f.zero();
    for m in h.components() {
        for i in 0..m.rows().min(m.cols()) {
            t = f.add(&t, m.get(i, i));
        }
    }
    t
}

/// Dimension of rad End(X) via the trace form; characteristic zero only.
pub fn end_radical_dim<F: Field>(x: &Representation<F>) -> Result<usize> {
    Ok(end_radical(x)?.1)
}

/// Trace-form radical of End(X): returns the endomorphism basis and the
/// radical dimension. The radical is the kernel of (f, g) -> tr(f g).
pub(crate) fn end_radical<F: Field>(
    x: &Representation<F>,
) -> Result<(Vec<ModuleMorphism<F>>, usize)> {
    if x.field().characteristic() != 0 {
        return Err(Error::UnsupportedDecomposition(
            "endomorphism radical needs characteristic zero".into(),
        ));
    }
    let f = x.field();
    let basis = hom_space(x, x);
    let n = basis.len();
    let mut gram = Matrix::zero(f, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, operator_trace(&basis[i].compose(&basis[j])));
        }
    }
    let rad_dim = gram.kernel_basis().cols();
    Ok((basis, rad_dim))
}

/// An object is indecomposable when its endomorphism algebra is local,
/// i.e. modulo its radical it is one-dimensional.
pub fn is_indecomposable<F: Field>(x: &Representation<F>) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    let (basis, rad) = end_radical(x)?;
    Ok(basis.len() - rad == 1)
}

/// Stable power of an endomorphism: squares until the rank stops dropping.
fn stable_power<F: Field>(h: &ModuleMorphism<F>) -> ModuleMorphism<F> {
    let rank = |m: &ModuleMorphism<F>| -> usize { m.components().iter().map(|c| c.rank()).sum() };
    let mut cur = h.clone();
    let mut r = rank(&cur);
    loop {
        let next = cur.compose(&cur);
        let rn = rank(&next);
        if rn == r {
            return next;
        }
        cur = next;
        r = rn;
    }
}

/// Extract a subrepresentation from per-vertex column spans of a stable
/// endomorphism (its image or kernel).
fn subrep_from_spans<F: Field>(x: &Representation<F>, spans: Vec<Matrix<F>>) -> Representation<F> {
    let mut maps = Vec::new();
    for (a, arr) in x.algebra().quiver().arrows.iter().enumerate() {
        let rhs = x.arrow_map(a).mul(&spans[arr.source]);
        let sol = spans[arr.target]
            .solve(&rhs)
            .expect("shapes agree")
            .expect("span closed under arrows");
        maps.push(sol);
    }
    Representation::new(
        x.algebra().clone(),
        spans.iter().map(|m| m.cols()).collect(),
        maps,
    )
    .expect("subrepresentation is valid")
}

/// Rational roots of the minimal polynomial of an endomorphism, found by a
/// Krylov-style dependence search followed by rational root testing.
fn rational_eigenvalue_candidates(h: &ModuleMorphism<Rationals>) -> Vec<BigRational> {
    // flatten powers of h and look for the first linear dependence
    let f = crate::field::Rationals;
    let flatten = |m: &ModuleMorphism<Rationals>| super::flatten_components(m);
    let id = ModuleMorphism::identity(h.source());
    let mut powers = vec![id.clone()];
    let mut vectors = vec![flatten(&id)];
    let dim = vectors[0].len().max(1);
    let mut minpoly: Option<Vec<BigRational>> = None;
    for _ in 0..=dim {
        let next = powers.last().unwrap().compose(h);
        let v = flatten(&next);
        // solve for v as a combination of earlier powers
        let cols = vectors.len();
        let mut sys = Matrix::zero(f, v.len(), cols);
        for (j, w) in vectors.iter().enumerate() {
            for (i, e) in w.iter().enumerate() {
                sys.set(i, j, e.clone());
            }
        }
        if let Some(sol) = sys
            .solve(&Matrix::column(f, v.clone()))
            .expect("shapes agree")
        {
            // minimal polynomial: x^k - sum sol_i x^i
            let mut coeffs: Vec<BigRational> =
                (0..cols).map(|i| -sol.get(i, 0).clone()).collect();
            coeffs.push(BigRational::one());
            minpoly = Some(coeffs);
            break;
        }
        powers.push(next);
        vectors.push(v);
    }
    let coeffs = match minpoly {
        Some(c) => c,
        None => return Vec::new(),
    };
    rational_roots(&coeffs)
}

/// Roots in Q of a polynomial with rational coefficients (low degree,
/// modest coefficients; silently incomplete for huge constant terms).
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    // scale to integer coefficients
    let mut denom_lcm = BigInt::one();
    for c in coeffs {
        let d = c.denom();
        let g = num_integer_gcd(&denom_lcm, d);
        denom_lcm = &denom_lcm / &g * d;
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    // strip trailing zero coefficients from the low end (roots at zero)
    let mut roots = Vec::new();
    let mut low = 0;
    while low < ints.len() && ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigRational::zero());
    }
    if low >= ints.len() {
        return roots;
    }
    let body = &ints[low..];
    let lead = body.last().unwrap().abs();
    let constant = body[0].abs();
    let num_divs = small_divisors(&constant);
    let den_divs = small_divisors(&lead);
    let eval = |x: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for c in body.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    };
    for p in &num_divs {
        for q in &den_divs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    if x.is_zero() {
        BigInt::one()
    } else {
        x
    }
}

/// Divisors of |n|, capped; enough for the small eigenvalues that occur in
/// endomorphism algebras at this scale.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    if n.is_zero() {
        return divs;
    }
    let cap = BigInt::from(1_000_000u64);
    let mut d = BigInt::from(2u64);
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    while &d * &d <= m && d <= cap {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m = &m / &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    for (p, e) in primes {
        let existing = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk = &pk * &p;
            for x in &existing {
                divs.push(x * &pk);
            }
        }
    }
    divs.sort();
    divs.dedup();
    divs
}

/// Split off one nontrivial direct summand, if the representation is
/// decomposable and a splitting endomorphism can be found.
fn try_split(
    x: &Representation<Rationals>,
) -> Option<(Representation<Rationals>, Representation<Rationals>)> {
    let basis = hom_space(x, x);
    let mut candidates: Vec<ModuleMorphism<Rationals>> = basis.clone();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j {
                candidates.push(basis[i].add(&basis[j]));
            }
            candidates.push(basis[i].compose(&basis[j]));
        }
    }
    let total = x.total_dim();
    for h in &candidates {
        let mut shifts = rational_eigenvalue_candidates(h);
        if !shifts.contains(&BigRational::zero()) {
            shifts.push(BigRational::zero());
        }
        for lambda in shifts {
            let g = if lambda.is_zero() {
                h.clone()
            } else {
                h.add(&ModuleMorphism::identity(x).scale(&lambda).neg())
            };
            let s = stable_power(&g);
            let rank: usize = s.components().iter().map(|c| c.rank()).sum();
            if rank == 0 || rank == total {
                continue;
            }
            let image = subrep_from_spans(x, s.components().iter().map(|m| m.image_basis()).collect());
            let kernel = subrep_from_spans(x, s.components().iter().map(|m| m.kernel_basis()).collect());
            assert_eq!(image.total_dim() + kernel.total_dim(), total);
            return Some((image, kernel));
        }
    }
    None
}

/// Search for an isomorphism X -> Y: basis elements first, then pairwise
/// sums, then small deterministic combinations.
pub fn find_isomorphism<F: Field>(
    x: &Representation<F>,
    y: &Representation<F>,
) -> Option<ModuleMorphism<F>> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(ModuleMorphism::zero(x, y));
    }
    let f = x.field();
    let basis = hom_space(x, y);
    for h in &basis {
        if h.is_iso() {
            return Some(h.clone());
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let h = basis[i].add(&basis[j]);
            if h.is_iso() {
                return Some(h);
            }
            let g = basis[i].add(&basis[j].neg());
            if g.is_iso() {
                return Some(g);
            }
        }
    }
    // small deterministic weighted combinations
    for w in 2..6i64 {
        let mut acc = ModuleMorphism::zero(x, y);
        let mut weight = 1i64;
        for h in &basis {
            acc = acc.add(&h.scale(&f.from_i64(weight)));
            weight = weight.wrapping_mul(w) % 97;
        }
        if acc.is_iso() {
            return Some(acc);
        }
    }
    None
}

/// Decompose into pairwise non-isomorphic indecomposables with
/// multiplicities. Rationals only.
pub fn decompose_indecomposables(
    x: &Representation<Rationals>,
) -> Result<Vec<(Representation<Rationals>, usize)>> {
    let mut atoms: Vec<Representation<Rationals>> = Vec::new();
    let mut stack = vec![x.clone()];
    while let Some(m) = stack.pop() {
        if m.is_zero() {
            continue;
        }
        if is_indecomposable(&m)? {
            atoms.push(m);
            continue;
        }
        match try_split(&m) {
            Some((a, b)) => {
                stack.push(a);
                stack.push(b);
            }
            None => {
                return Err(Error::DecompositionFailed(format!(
                    "no splitting endomorphism found for dims {:?}",
                    m.dims()
                )))
            }
        }
    }
    // deterministic order: by dims, then insertion
    atoms.sort_by(|a, b| (b.total_dim(), b.dims().to_vec()).cmp(&(a.total_dim(), a.dims().to_vec())));
    let mut grouped: Vec<(Representation<Rationals>, usize)> = Vec::new();
    'outer: for a in atoms {
        for (rep, mult) in grouped.iter_mut() {
            if find_isomorphism(rep, &a).is_some() {
                *mult += 1;
                continue 'outer;
            }
        }
        grouped.push((a, 1));
    }
    Ok(grouped)
}
