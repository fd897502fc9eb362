//! Brute-force oracles that share no code with the library: plain tuples,
//! permutations and integer matrices.
#![allow(dead_code)]

use std::collections::HashSet;

/// All injective maps `{0..i} → {0..j}` as image tuples.
pub fn injections(i: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for v in 0..j {
            if !cur.contains(&v) {
                cur.push(v);
                go(i, j, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(i, j, &mut Vec::new(), &mut out);
    out
}

pub fn all_words(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (0..alphabet).map(move |a| [w.clone(), vec![a]].concat()))
            .collect();
    }
    out
}

fn count_orbits<T: Clone + Eq + std::hash::Hash>(points: &[T], act: impl Fn(&T) -> Vec<T>) -> usize {
    let mut seen = HashSet::new();
    let mut count = 0;
    for p in points {
        if seen.contains(p) {
            continue;
        }
        count += 1;
        for q in act(p) {
            seen.insert(q);
        }
    }
    count
}

/// `H`-orbits on `FI_Γ(C_n)(i,j)`, `Γ = Z/n`, where `H` fixes the inclusion
/// with trivial colours. An arrow is `(f, c)`; `(σ, d)` sends it to
/// `(σ f, r ↦ d(f(r)) + c(r))`.
pub fn fi_gamma_orbit_count(n: usize, i: usize, j: usize) -> usize {
    let arrows: Vec<(Vec<usize>, Vec<usize>)> = injections(i, j)
        .into_iter()
        .flat_map(|f| all_words(i, n).into_iter().map(move |c| (f.clone(), c)))
        .collect();
    // σ fixes 0..i, d vanishes on 0..i
    let h: Vec<(Vec<usize>, Vec<usize>)> = injections(j, j)
        .into_iter()
        .filter(|s| (0..i).all(|r| s[r] == r))
        .flat_map(|s| {
            all_words(j, n)
                .into_iter()
                .filter(|d| d[..i].iter().all(|&x| x == 0))
                .map(move |d| (s.clone(), d))
        })
        .collect();
    count_orbits(&arrows, |(f, c)| {
        h.iter()
            .map(|(s, d)| {
                let g: Vec<usize> = f.iter().map(|&x| s[x]).collect();
                let e: Vec<usize> = (0..i).map(|r| (d[f[r]] + c[r]) % n).collect();
                (g, e)
            })
            .collect()
    })
}

/// `j × i` matrices over `F_q`, row-major, entries `0..q`.
pub type Mat = Vec<Vec<u32>>;

pub fn mat_mul(a: &Mat, b: &Mat, q: u32) -> Mat {
    let (n, m, k) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|r| (0..k).map(|c| (0..m).map(|t| a[r][t] * b[t][c]).sum::<u32>() % q).collect())
        .collect()
}

pub fn rank(a: &Mat, q: u32) -> usize {
    let mut m = a.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, p);
        let inv = (1..q).find(|x| x * m[r][c] % q == 1).unwrap();
        for k in 0..m.len() {
            if k != r && m[k][c] != 0 {
                let f = m[k][c] * inv % q;
                for t in 0..cols {
                    m[k][t] = (m[k][t] + q * q - f * m[r][t] % q) % q;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn matrices(rows: usize, cols: usize, q: u32) -> Vec<Mat> {
    all_words(rows * cols, q as usize)
        .into_iter()
        .map(|w| w.chunks(cols).map(|r| r.iter().map(|&x| x as u32).collect()).collect())
        .collect()
}

pub fn injective_matrices(j: usize, i: usize, q: u32) -> Vec<Mat> {
    matrices(j, i, q).into_iter().filter(|m| rank(m, q) == i).collect()
}

/// `H`-orbits on injective `j × i` matrices, `H` the stabilizer in `GL_j`
/// of the first `i` standard columns.
pub fn vi_orbit_count(q: u32, i: usize, j: usize) -> usize {
    let a0: Mat = (0..j).map(|r| (0..i).map(|c| u32::from(r == c)).collect()).collect();
    let h: Vec<Mat> = injective_matrices(j, j, q)
        .into_iter()
        .filter(|g| mat_mul(g, &a0, q) == a0)
        .collect();
    count_orbits(&injective_matrices(j, i, q), |a| h.iter().map(|g| mat_mul(g, a, q)).collect())
}

/// `|FI_Γ(i,j)| = |Γ|^i j!/(j-i)!`.
pub fn fi_gamma_count(n: usize, i: usize, j: usize) -> u128 {
    if i > j {
        return 0;
    }
    (j - i + 1..=j).map(|x| x as u128).product::<u128>() * (n as u128).pow(i as u32)
}

/// `|VI(i,j)| = ∏_{k<i} (q^j - q^k)`.
pub fn vi_count(q: u32, i: usize, j: usize) -> u128 {
    if i > j {
        return 0;
    }
    let q = q as u128;
    (0..i).map(|k| q.pow(j as u32) - q.pow(k as u32)).product()
}

/// Each VI arrow has `q^{i(j-i)}` complements of its image.
pub fn vic_count(q: u32, i: usize, j: usize) -> u128 {
    vi_count(q, i, j) * (q as u128).pow((i * j.saturating_sub(i)) as u32)
}
