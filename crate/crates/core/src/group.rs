//! Indexed sets of Weyl-group elements closed under going down in Bruhat
//! order: the whole group, or a lower interval `[e, y]`.
//!
//! Elements are numbered in canonical order (length, then ShortLex-minimal
//! reduced word). Generator multiplication is tabulated; a product that
//! leaves the set is recorded as absent.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::OnceLock;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, ReducedWord, Side};

const NONE: u32 = u32::MAX;

pub struct ElementTable {
    sys: CoxeterSystem,
    elements: Vec<GroupElement>,
    words: Vec<ReducedWord>,
    index: HashMap<Box<[i32]>, u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    strata: Vec<Range<usize>>,
    bruhat: OnceLock<BruhatMatrix>,
}

impl ElementTable {
    /// The whole group.
    pub fn full(sys: &CoxeterSystem, cap: u128) -> Result<Self, CoxeterError> {
        sys.check_order(cap)?;
        let mut seen: HashMap<Box<[i32]>, ()> = HashMap::new();
        let mut elements = vec![sys.identity()];
        seen.insert(elements[0].key().into(), ());
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for s in 0..sys.rank() {
                if sys.is_descent(&w, s, Side::Right) {
                    continue;
                }
                let ws = sys.mul_right_gen(&w, s);
                if seen.insert(ws.key().into(), ()).is_none() {
                    elements.push(ws);
                }
            }
        }
        Ok(Self::finalize(sys, elements))
    }

    /// The lower Bruhat interval `[e, y]`, built from
    /// `[e, y] = [e, sy] ∪ s[e, sy]` for a left descent `s` of `y`.
    pub fn lower_interval(sys: &CoxeterSystem, y: &GroupElement) -> Self {
        let word = sys.reduced_word(y);
        let mut seen: HashMap<Box<[i32]>, ()> = HashMap::new();
        let mut elements = vec![sys.identity()];
        seen.insert(elements[0].key().into(), ());
        for &l in word.letters().iter().rev() {
            let n = elements.len();
            for k in 0..n {
                let sw = sys.mul_left_gen(&elements[k], l - 1);
                if seen.insert(sw.key().into(), ()).is_none() {
                    elements.push(sw);
                }
            }
        }
        Self::finalize(sys, elements)
    }

    fn finalize(sys: &CoxeterSystem, mut elements: Vec<GroupElement>) -> Self {
        let rank = sys.rank();
        elements.sort_by_key(GroupElement::length);
        let tmp: HashMap<&[i32], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.key(), i))
            .collect();
        let mut words: Vec<ReducedWord> = Vec::with_capacity(elements.len());
        for w in &elements {
            if w.is_identity() {
                words.push(ReducedWord::default());
                continue;
            }
            let s = (0..rank)
                .find(|&i| sys.is_descent(w, i, Side::Left))
                .expect("non-identity element has a left descent");
            let sw = sys.mul_left_gen(w, s);
            let rest = &words[tmp[sw.key()]];
            let mut letters = Vec::with_capacity(w.length());
            letters.push(s + 1);
            letters.extend_from_slice(rest.letters());
            words.push(ReducedWord(letters));
        }
        drop(tmp);
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| {
            elements[a]
                .length()
                .cmp(&elements[b].length())
                .then_with(|| words[a].cmp(&words[b]))
        });
        let mut elements_opt: Vec<Option<GroupElement>> = elements.into_iter().map(Some).collect();
        let mut words_opt: Vec<Option<ReducedWord>> = words.into_iter().map(Some).collect();
        let elements: Vec<GroupElement> = order.iter().map(|&i| elements_opt[i].take().unwrap()).collect();
        let words: Vec<ReducedWord> = order.iter().map(|&i| words_opt[i].take().unwrap()).collect();

        let index: HashMap<Box<[i32]>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.key().into(), i as u32))
            .collect();
        let mut left = vec![NONE; elements.len() * rank];
        let mut right = vec![NONE; elements.len() * rank];
        for (i, w) in elements.iter().enumerate() {
            for s in 0..rank {
                let l = sys.mul_left_gen(w, s);
                left[i * rank + s] = index.get(l.key()).copied().unwrap_or(NONE);
                let r = sys.mul_right_gen(w, s);
                right[i * rank + s] = index.get(r.key()).copied().unwrap_or(NONE);
            }
        }
        let mut strata: Vec<Range<usize>> = Vec::new();
        let mut start = 0;
        for i in 1..=elements.len() {
            if i == elements.len() || elements[i].length() != elements[start].length() {
                strata.push(start..i);
                start = i;
            }
        }
        Self {
            sys: sys.clone(),
            elements,
            words,
            index,
            left,
            right,
            strata,
            bruhat: OnceLock::new(),
        }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<GroupElement> {
        self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn word(&self, i: usize) -> &ReducedWord {
        &self.words[i]
    }

    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length()
    }

    /// Index of the maximal element (the last in canonical order).
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w.key()).map(|&i| i as usize)
    }

    pub fn index_of_word(&self, word: &ReducedWord) -> Result<Option<usize>, CoxeterError> {
        Ok(self.index_of(&self.sys.from_word(word)?))
    }

    /// `s * w` (0-based generator), if it lies in the table.
    pub fn left_mul(&self, i: usize, s: usize) -> Option<usize> {
        let v = self.left[i * self.sys.rank() + s];
        (v != NONE).then_some(v as usize)
    }

    /// `w * s` (0-based generator), if it lies in the table.
    pub fn right_mul(&self, i: usize, s: usize) -> Option<usize> {
        let v = self.right[i * self.sys.rank() + s];
        (v != NONE).then_some(v as usize)
    }

    pub fn mul(&self, i: usize, s: usize, side: Side) -> Option<usize> {
        match side {
            Side::Left => self.left_mul(i, s),
            Side::Right => self.right_mul(i, s),
        }
    }

    /// Descents always stay inside a lower ideal, so an absent product is an ascent.
    pub fn is_descent(&self, i: usize, s: usize, side: Side) -> bool {
        self.mul(i, s, side)
            .is_some_and(|j| self.length(j) < self.length(i))
    }

    pub fn descents(&self, i: usize, side: Side) -> impl Iterator<Item = usize> + '_ {
        (0..self.sys.rank()).filter(move |&s| self.is_descent(i, s, side))
    }

    /// Contiguous index ranges of equal length, by increasing length.
    pub fn strata(&self) -> &[Range<usize>] {
        &self.strata
    }

    pub fn bruhat(&self) -> &BruhatMatrix {
        self.bruhat.get_or_init(|| BruhatMatrix::build(self))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.bruhat().leq(x, y)
    }
}

/// Dense Bruhat relation: row `y` is the bit set of all `x <= y`, with
/// per-word prefix popcounts so that the position of `x` among the elements
/// below `y` is available in O(1).
pub struct BruhatMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    prefix: Vec<u32>,
    counts: Vec<u32>,
}

impl BruhatMatrix {
    fn build(table: &ElementTable) -> Self {
        let n = table.len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for y in 0..n {
            let row_start = y * words;
            bits[row_start + y / 64] |= 1 << (y % 64);
            if table.length(y) == 0 {
                continue;
            }
            let s = table
                .descents(y, Side::Left)
                .next()
                .expect("non-identity element has a left descent");
            let sy = table.left_mul(y, s).unwrap();
            // row(y) = row(sy) ∪ s·row(sy)
            let (before, after) = bits.split_at_mut(row_start);
            let src = &before[sy * words..sy * words + words];
            let dst = &mut after[..words];
            for (k, &word) in src.iter().enumerate() {
                let mut w = word;
                dst[k] |= word;
                while w != 0 {
                    let x = k * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let sx = table.left_mul(x, s).expect("s·[e, sy] lies below y");
                    dst[sx / 64] |= 1 << (sx % 64);
                }
            }
        }
        let mut prefix = vec![0u32; n * words];
        let mut counts = vec![0u32; n];
        for y in 0..n {
            let mut acc = 0u32;
            for k in 0..words {
                prefix[y * words + k] = acc;
                acc += bits[y * words + k].count_ones();
            }
            counts[y] = acc;
        }
        Self {
            n,
            words,
            bits,
            prefix,
            counts,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.words + x / 64] >> (x % 64) & 1 == 1
    }

    /// Number of elements `x <= y`.
    pub fn count_below(&self, y: usize) -> usize {
        self.counts[y] as usize
    }

    /// Position of `x` among the elements below `y` in index order.
    pub fn position(&self, x: usize, y: usize) -> Option<usize> {
        let w = self.bits[y * self.words + x / 64];
        let bit = x % 64;
        if w >> bit & 1 == 0 {
            return None;
        }
        let below = w & ((1u64 << bit) - 1);
        Some(self.prefix[y * self.words + x / 64] as usize + below.count_ones() as usize)
    }

    /// All `x <= y` in increasing index order.
    pub fn below(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.bits[y * self.words..(y + 1) * self.words]
            .iter()
            .enumerate()
            .flat_map(|(k, &word)| BitIter(word).map(move |b| k * 64 + b))
    }

    /// All `z` with `z <= a` and `z <= b`.
    pub fn below_both(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        let ra = &self.bits[a * self.words..(a + 1) * self.words];
        let rb = &self.bits[b * self.words..(b + 1) * self.words];
        ra.iter()
            .zip(rb)
            .enumerate()
            .flat_map(|(k, (&u, &v))| BitIter(u & v).map(move |b| k * 64 + b))
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
