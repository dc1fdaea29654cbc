//! Exact character tables by Dixon's method: compute the table modulo a
//! prime p = 1 (mod exp(G)), then lift each value to Z[zeta] via the
//! discrete Fourier formula over eigenvalue multiplicities. Everything
//! stays in machine integers until the final cyclotomic lift, and the
//! finished table must still pass the full invariant gate before it is
//! returned.

use super::table::{is_prime, CharTable, Provenance, TableError};
use crate::cyclo::Cyclo;
use crate::groups::{ClassData, GroupModel};
use std::collections::BTreeMap;

const PRIME_CAP: u64 = 1_000_000;
/// The class multiplication tensor is dense, k^3 entries.
const DIXON_CLASS_CAP: usize = 128;

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    addm(a, p - b % p, p)
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
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

fn primitive_root(p: u64) -> u64 {
    let facs = prime_factors(p - 1);
    'cand: for w in 2..p {
        for q in &facs {
            if powm(w, (p - 1) / q, p) == 1 {
                continue 'cand;
            }
        }
        return w;
    }
    unreachable!("F_p^* is cyclic")
}

/// Smallest prime p = 1 mod e with p > 2 sqrt(n), bounded by PRIME_CAP.
fn dixon_prime(exponent: u32, order: usize) -> Result<u64, TableError> {
    let e = exponent as u64;
    let lower = (2.0 * (order as f64).sqrt()).floor() as u64;
    let mut p = e + 1;
    while p <= lower || !is_prime(p as u32) {
        p += e;
        if p >= PRIME_CAP {
            return Err(TableError::NoPrime { exponent, lower, cap: PRIME_CAP });
        }
    }
    Ok(p)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = invm(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for cc in 0..ncols {
                    let t = mulm(f, rows[r][cc], p);
                    rows[i][cc] = subm(rows[i][cc], t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis (RREF) of the nullspace of a square matrix.
fn kernel(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut m, p);
    let mut basis = Vec::new();
    let piv_of_col: BTreeMap<usize, usize> =
        pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
    for free in 0..n {
        if piv_of_col.contains_key(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (&c, &r) in &piv_of_col {
            v[c] = subm(0, mulm(m[r][free], 1, p), p);
        }
        basis.push(v);
    }
    rref(&mut basis, p);
    basis
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            let mut s = 0u64;
            for (a, b) in row.iter().zip(v) {
                if *a != 0 && *b != 0 {
                    s = addm(s, mulm(*a, *b, p), p);
                }
            }
            s
        })
        .collect()
}

fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut d = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            m.swap(c, pr);
            d = subm(0, d, p);
        }
        d = mulm(d, m[c][c], p);
        let inv = invm(m[c][c], p);
        for i in c + 1..n {
            if m[i][c] != 0 {
                let f = mulm(m[i][c], inv, p);
                for cc in c..n {
                    let t = mulm(f, m[c][cc], p);
                    m[i][cc] = subm(m[i][cc], t, p);
                }
            }
        }
    }
    d
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    out
}

/// Characteristic polynomial coefficients (low to high) of a square
/// matrix, by evaluating det(M - x I) at d+1 points and interpolating.
fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let d = m.len();
    let xs: Vec<u64> = (0..=d as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut shifted = m.to_vec();
            for i in 0..d {
                shifted[i][i] = subm(shifted[i][i], x, p);
            }
            det(shifted, p)
        })
        .collect();
    // Lagrange interpolation
    let mut coeffs = vec![0u64; d + 1];
    for j in 0..xs.len() {
        let mut num = vec![1u64];
        let mut den = 1u64;
        for l in 0..xs.len() {
            if l == j {
                continue;
            }
            num = poly_mul(&num, &[subm(0, xs[l], p), 1], p);
            den = mulm(den, subm(xs[j], xs[l], p), p);
        }
        let f = mulm(ys[j], invm(den, p), p);
        for (c, x) in coeffs.iter_mut().zip(num.iter()) {
            *c = addm(*c, mulm(f, *x, p), p);
        }
    }
    coeffs
}

fn poly_eval(c: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &a in c.iter().rev() {
        acc = addm(mulm(acc, x, p), a, p);
    }
    acc
}

/// Compute the character table of a generated group by Dixon's method.
pub fn dixon_table(g: &GroupModel, cd: &ClassData) -> Result<CharTable, TableError> {
    let n = g.order();
    let k = cd.num_classes();
    if k > DIXON_CLASS_CAP {
        return Err(TableError::Violation(format!(
            "{} classes exceed the dense tensor cap {}",
            k, DIXON_CLASS_CAP
        )));
    }
    let p = dixon_prime(g.exponent(), n)?;

    // class multiplication tensor a[i][j][l]: the number of ways an
    // element of class l factors as (class i) * (class j)
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for l in 0..k {
        let z = cd.reps[l];
        for x in 0..n as u32 {
            let i = cd.class_of[x as usize];
            let j = cd.class_of[g.mul(g.inv(x), z) as usize];
            a[i][j][l] += 1;
        }
    }

    // simultaneous eigenspaces of the class matrices A_i, with
    // (A_i)[j][l] = a[i][j][l]; the common eigenvectors are the vectors
    // omega_j = |C_j| chi(g_j) / chi(1) mod p
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat: Vec<Vec<u64>> =
            (0..k).map(|j| (0..k).map(|l| a[i][j][l] % p).collect()).collect();
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            // pivot columns let us read coordinates straight off an image
            let pivots: Vec<usize> = basis
                .iter()
                .map(|b| b.iter().position(|&x| x == 1).expect("rref basis"))
                .collect();
            let mut restr = vec![vec![0u64; d]; d];
            for (t, b) in basis.iter().enumerate() {
                let img = mat_vec(&mat, b, p);
                for s in 0..d {
                    restr[s][t] = img[pivots[s]];
                }
                // invariance check: the image must lie in the subspace
                let mut recon = vec![0u64; k];
                for s in 0..d {
                    for c in 0..k {
                        recon[c] = addm(recon[c], mulm(restr[s][t], basis[s][c], p), p);
                    }
                }
                if recon != img {
                    return Err(TableError::Violation(
                        "class matrix does not preserve a refinement subspace".into(),
                    ));
                }
            }
            let cp = charpoly(&restr, p);
            let mut found = 0usize;
            for lam in 0..p {
                if poly_eval(&cp, lam, p) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|r| {
                        (0..d)
                            .map(|c| {
                                if r == c {
                                    subm(restr[r][c], lam, p)
                                } else {
                                    restr[r][c]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel(&shifted, p);
                found += ker.len();
                let mut sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|v| {
                        let mut w = vec![0u64; k];
                        for (t, &c) in v.iter().enumerate() {
                            for cc in 0..k {
                                w[cc] = addm(w[cc], mulm(c, basis[t][cc], p), p);
                            }
                        }
                        w
                    })
                    .collect();
                rref(&mut sub, p);
                next.push(sub);
            }
            if found != d {
                return Err(TableError::Violation(
                    "class matrix eigenvalues do not split over the Dixon prime".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(TableError::Violation(
            "simultaneous eigenspace refinement did not reach dimension one".into(),
        ));
    }

    // normalize so the identity coordinate is 1, recover degrees, then
    // the character values mod p
    let szinv: Vec<u64> = cd.sizes.iter().map(|&s| invm(s as u64, p)).collect();
    let mut chis_modp: Vec<(u64, Vec<u64>)> = Vec::new();
    let sqrt_n = (n as f64).sqrt() as u64 + 1;
    for s in &spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(TableError::Violation(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let f = invm(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| mulm(x, f, p)).collect();
        let mut denom = 0u64;
        for i in 0..k {
            denom = addm(denom, mulm(mulm(w[i], w[cd.inverse_class[i]], p), szinv[i], p), p);
        }
        let d2 = mulm(n as u64 % p, invm(denom, p), p);
        let d = (1..=sqrt_n)
            .find(|&d| mulm(d, d, p) == d2)
            .ok_or_else(|| TableError::Violation("no degree squares to the norm".into()))?;
        let chi: Vec<u64> = (0..k).map(|i| mulm(mulm(d, w[i], p), szinv[i], p)).collect();
        chis_modp.push((d, chi));
    }

    // lift to cyclotomics: for g of order m, the value is a sum of m-th
    // roots of unity whose multiplicities fall out of a DFT over F_p
    let wgen = primitive_root(p);
    let mut rows: Vec<Vec<Cyclo>> = Vec::new();
    for (d, chi) in &chis_modp {
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let m = cd.orders[i] as u64;
            let zm = powm(wgen, (p - 1) / m, p);
            let minv = invm(m, p);
            let powclass: Vec<usize> =
                (0..m).map(|t| cd.power_class(g, i, t)).collect();
            let mut val = Cyclo::zero();
            let mut total = 0u64;
            for s in 0..m {
                let mut c = 0u64;
                for t in 0..m {
                    let e = (s * t) % m;
                    let z = powm(zm, m - e, p); // zm^{-st}
                    c = addm(c, mulm(chi[powclass[t as usize]], z, p), p);
                }
                c = mulm(c, minv, p);
                if c > *d {
                    return Err(TableError::Lift(format!(
                        "root multiplicity {} exceeds the degree {} at class {}",
                        c, d, i
                    )));
                }
                total += c;
                if c != 0 {
                    val = &val + &Cyclo::root_of_unity(m as u32, s as i64).scale_int(c as i64);
                }
            }
            if total != *d {
                return Err(TableError::Lift(format!(
                    "multiplicities at class {} sum to {} instead of the degree {}",
                    i, total, d
                )));
            }
            row.push(val);
        }
        rows.push(row);
    }

    // deterministic row order: by degree, then by the value vector
    let e = g.exponent();
    rows.sort_by_key(|row| {
        let d = row[0].as_rat().expect("degree rational");
        let keys: Vec<_> = row.iter().map(|v| v.sort_key(e)).collect();
        (d, keys)
    });

    // power maps for every prime below the largest element order
    let max_order = *cd.orders.iter().max().unwrap();
    let mut powmaps = BTreeMap::new();
    let mut q = 2u32;
    while q <= max_order {
        if is_prime(q) {
            powmaps.insert(q, (0..k).map(|i| cd.power_class(g, i, q as u64)).collect());
        }
        q += 1;
    }

    let t = CharTable {
        group: g.name.clone(),
        order: n,
        sizes: cd.sizes.clone(),
        orders: cd.orders.clone(),
        powmaps,
        rows,
        provenance: Provenance::Dixon,
    };
    t.validate()?;
    Ok(t)
}
