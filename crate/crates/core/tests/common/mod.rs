//! Reference computations used as oracles by the integration tests.
//!
//! Everything here works on plain `i64` coefficient vectors and uses the
//! library only for the group itself (multiplication by generators and
//! lengths), never for Bruhat order or polynomials.

#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use klcat::coxeter::{CoxeterSystem, ReducedWord, Side, DEFAULT_ORDER_CAP};
use klcat::group::ElementTable;
use klcat::poly::IntPoly;

pub const SMALL_TYPES: [&str; 7] = ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3"];

pub type Poly = Vec<i64>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k] += c;
    }
    trim(out)
}

pub fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn eval(p: &[i64], t: i64) -> i64 {
    p.iter().rev().fold(0, |acc, c| acc * t + c)
}

pub fn int_poly(p: &[i64]) -> IntPoly {
    IntPoly::from_i64s(p)
}

pub fn data_file(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

pub fn full_table(ty: &str) -> ElementTable {
    let sys = CoxeterSystem::from_type_str(ty).unwrap();
    ElementTable::full(&sys, DEFAULT_ORDER_CAP).unwrap()
}

fn first_left_descent(t: &ElementTable, y: usize) -> usize {
    let rank = t.system().rank();
    (0..rank)
        .find(|&s| t.left_mul(y, s).is_some_and(|z| t.length(z) < t.length(y)))
        .expect("non-identity element has a descent")
}

/// `R_{x,y}` for all pairs, from `R_{x,y} = R_{sx,sy}` when `sx < x` and
/// `(q - 1) R_{x,sy} + q R_{sx,sy}` otherwise, for a left descent `s` of `y`.
pub fn r_table(t: &ElementTable) -> Vec<Vec<Poly>> {
    let n = t.len();
    let mut r: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
    for y in 0..n {
        r[y][y] = vec![1];
        if t.length(y) == 0 {
            continue;
        }
        let s = first_left_descent(t, y);
        let sy = t.left_mul(y, s).unwrap();
        for x in 0..n {
            if x == y || t.length(x) >= t.length(y) {
                continue;
            }
            let sx = t.left_mul(x, s).unwrap();
            r[x][y] = if t.length(sx) < t.length(x) {
                r[sx][sy].clone()
            } else {
                add(&mul(&[-1, 1], &r[x][sy]), &mul(&[0, 1], &r[sx][sy]))
            };
        }
    }
    r
}

/// `P_{x,y}` for all pairs by solving `q^(l(y)-l(x)) P(q^-1) - P(q) = sum_{x<z<=y} R_{x,z} P_{z,y}`
/// against the degree bound.
pub fn kl_table(t: &ElementTable) -> Vec<Vec<Poly>> {
    let r = r_table(t);
    let n = t.len();
    let mut p: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
    for y in 0..n {
        p[y][y] = vec![1];
        for x in (0..y).rev() {
            if r[x][y].is_empty() {
                continue;
            }
            let d = t.length(y) - t.length(x);
            let mut s: Poly = Vec::new();
            for z in x + 1..=y {
                if !r[x][z].is_empty() && !p[z][y].is_empty() {
                    s = add(&s, &mul(&r[x][z], &p[z][y]));
                }
            }
            let keep = (d - 1) / 2 + 1;
            p[x][y] = trim(s.iter().take(keep).map(|c| -c).collect());
        }
    }
    p
}

/// Elements below `y`: products of all subwords of one reduced word of `y`.
pub fn subword_interval(t: &ElementTable, y: usize) -> HashSet<usize> {
    let sys = t.system();
    let word = t.word(y).letters().to_vec();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &l)| l)
            .collect();
        let w = sys.from_word(&ReducedWord(sub)).unwrap();
        out.insert(t.index_of(&w).unwrap());
    }
    out
}

/// `a_{x,y}(t) = t^(l(y)-l(x)) P_{x,y}(t^-2)` from a KL table.
pub fn delorme(t: &ElementTable, p: &[Vec<Poly>], x: usize, y: usize) -> Poly {
    if p[x][y].is_empty() {
        return Vec::new();
    }
    let d = t.length(y) - t.length(x);
    let mut out = vec![0; d + 1];
    for (k, c) in p[x][y].iter().enumerate() {
        out[d - 2 * k] += c;
    }
    trim(out)
}

/// `sum_z a_{z,x} a_{z,y}` over every `z`.
pub fn ext_ll(t: &ElementTable, p: &[Vec<Poly>], x: usize, y: usize) -> Poly {
    (0..t.len()).fold(Vec::new(), |acc, z| {
        add(&acc, &mul(&delorme(t, p, z, x), &delorme(t, p, z, y)))
    })
}

/// Index of `w0 * x` for every `x`.
pub fn w0_times(t: &ElementTable) -> Vec<usize> {
    let top = (0..t.len()).max_by_key(|&i| t.length(i)).unwrap();
    (0..t.len())
        .map(|x| {
            let mut w = x;
            for &l in t.word(top).letters().iter().rev() {
                w = t.mul(w, l - 1, Side::Left).unwrap();
            }
            w
        })
        .collect()
}
