//! Naive reference implementations, written without reference to the
//! library so that they can check it.

#![allow(dead_code)]

/// Every arrangement of `low..=high` twice each into `len` slots (plus one
/// zero when `len` is odd), symbol `k` placed `k` apart. Symbols are placed
/// from largest to smallest, trying every start position.
fn place_all(len: usize, low: u32, high: u32) -> Vec<Vec<u32>> {
    fn go(slots: &mut Vec<u32>, k: u32, low: u32, out: &mut Vec<Vec<u32>>) {
        if k < low {
            out.push(slots.clone());
            return;
        }
        let gap = k as usize;
        for i in 0..slots.len() {
            let j = i + gap;
            if j >= slots.len() {
                break;
            }
            if slots[i] == u32::MAX && slots[j] == u32::MAX {
                slots[i] = k;
                slots[j] = k;
                go(slots, k - 1, low, out);
                slots[i] = u32::MAX;
                slots[j] = u32::MAX;
            }
        }
    }
    let mut out = Vec::new();
    if high < low {
        return out;
    }
    let mut slots = vec![u32::MAX; len];
    go(&mut slots, high, low, &mut out);
    for s in &mut out {
        for v in s.iter_mut() {
            if *v == u32::MAX {
                *v = 0;
            }
        }
    }
    out.sort();
    out
}

/// All Langford sequences of order `m` and defect `d`, sorted.
pub fn langford_list(m: usize, d: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return Vec::new();
    }
    place_all(2 * m, d, d + m as u32 - 1)
}

/// All extended Skolem sequences of order `m`, sorted.
pub fn extended_list(m: usize, include_trivial: bool) -> Vec<Vec<u32>> {
    let len = 2 * m + 1;
    place_all(len, 1, m as u32)
        .into_iter()
        .filter(|s| include_trivial || (s[0] != 0 && s[len - 1] != 0))
        .collect()
}

fn pairs_ok(v: &[u32], low: u32, high: u32) -> bool {
    (low..=high).all(|k| {
        let pos: Vec<usize> = (0..v.len()).filter(|&i| v[i] == k).collect();
        pos.len() == 2 && pos[1] - pos[0] == k as usize
    })
}

pub fn is_langford(v: &[u32], d: u32) -> bool {
    let m = v.len() / 2;
    d >= 1
        && m >= 1
        && v.len().is_multiple_of(2)
        && v.iter().all(|&x| x >= d && x < d + m as u32)
        && pairs_ok(v, d, d + m as u32 - 1)
}

pub fn is_extended(v: &[u32]) -> bool {
    let m = v.len() / 2;
    v.len() % 2 == 1
        && v.iter().filter(|&&x| x == 0).count() == 1
        && v.iter().all(|&x| x <= m as u32)
        && pairs_ok(v, 1, m as u32)
}

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Permutations whose sums `i + p(i)` are distinct and consecutive.
pub fn sn_list(n: usize) -> Vec<Vec<u32>> {
    permutations(n)
        .into_iter()
        .filter(|p| {
            let mut sums: Vec<usize> = p
                .iter()
                .enumerate()
                .map(|(i, &x)| i + 1 + x as usize)
                .collect();
            sums.sort();
            sums.windows(2).all(|w| w[1] == w[0] + 1)
        })
        .collect()
}

pub fn kronecker(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (p, q) = (a.len(), b.len());
    let mut k = vec![vec![0; p * q]; p * q];
    for i in 0..p {
        for j in 0..p {
            for x in 0..q {
                for y in 0..q {
                    k[i * q + x][j * q + y] = a[i][j] * b[x][y];
                }
            }
        }
    }
    k
}
