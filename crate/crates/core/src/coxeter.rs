//! Finite Weyl groups realized on their root lattice.
//!
//! Every element is stored as the integer matrix of its action on the
//! simple-root basis, together with its inverse and its length. Columns of
//! these matrices are roots, so all entries stay small.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use thiserror::Error;

/// Enumeration-based operations refuse groups larger than this by default.
pub const DEFAULT_ORDER_CAP: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid Coxeter type {0:?}")]
    InvalidType(String),
    #[error("generator index {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderExceedsCap { order: u128, cap: u128 },
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("could not parse word {0:?}")]
    BadWord(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Dynkin type `X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self, CoxeterError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(CoxeterError::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    /// Group order, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).try_fold(1u128, |acc, i| acc.checked_mul(i));
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => fact(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            Family::D => fact(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            Family::E => Some(match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => Some(1152),
            Family::G => Some(12),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix `a_ij = <alpha_i^vee, alpha_j>` in Bourbaki numbering.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => (0..n - 1).for_each(|i| link(i, i + 1)),
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            Family::F => (0..3).for_each(|i| link(i, i + 1)),
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A product of irreducible types, written like `A2` or `A1xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    components: Vec<Component>,
}

impl CoxeterType {
    pub fn new(components: Vec<Component>) -> Result<Self, CoxeterError> {
        if components.is_empty() {
            return Err(CoxeterError::InvalidType(String::new()));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Product of the component orders, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.order()?))
            .unwrap_or(u128::MAX)
    }

    pub fn positive_root_count(&self) -> usize {
        self.components.iter().map(Component::positive_root_count).sum()
    }

    /// Block-diagonal Cartan matrix.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut out = vec![vec![0i64; n]; n];
        let mut off = 0;
        for c in &self.components {
            for (i, row) in c.cartan().into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    out[off + i][off + j] = v;
                }
            }
            off += c.rank;
        }
        out
    }
}

impl FromStr for CoxeterType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoxeterError::InvalidType(s.to_string());
        let mut comps = Vec::new();
        for part in s.trim().split(['x', 'X', '×']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(bad()),
            };
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            comps.push(Component::new(family, rank).map_err(|_| bad())?);
        }
        Self::new(comps).map_err(|_| bad())
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Left or right multiplication side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A word in the simple reflections, 1-based as in `[1, 2, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for ReducedWord {
    type Err = CoxeterError;

    /// Accepts space- and/or comma-separated indices; the empty string is the
    /// identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| CoxeterError::BadWord(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(ReducedWord)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An element of a Weyl group: its reflection-representation matrix (row
/// major, simple-root coordinates), the inverse matrix, and its length.
#[derive(Clone)]
pub struct GroupElement {
    matrix: Box<[i32]>,
    inverse: Box<[i32]>,
    length: usize,
    tag: u64,
}

impl GroupElement {
    pub fn matrix(&self) -> &[i32] {
        &self.matrix
    }

    /// Canonical hashable key: the flattened matrix.
    pub fn key(&self) -> &[i32] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    fn column_is_negative(m: &[i32], rank: usize, col: usize) -> bool {
        // a root has all coordinates of one sign
        (0..rank)
            .map(|r| m[r * rank + col])
            .find(|&v| v != 0)
            .is_some_and(|v| v < 0)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupElement")
            .field("length", &self.length)
            .field("matrix", &self.matrix)
            .finish()
    }
}

/// A finite Weyl group with its root datum.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ty: CoxeterType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    order: u128,
    generators: Vec<GroupElement>,
    tag: u64,
}

impl CoxeterSystem {
    pub fn new(ty: CoxeterType) -> Self {
        let rank = ty.rank();
        let cartan = ty.cartan();
        let tag = cartan
            .iter()
            .flatten()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, &v| {
                (h ^ (v as u64).wrapping_add(rank as u64)).wrapping_mul(0x0100_0000_01b3)
            });
        let positive_roots = Self::root_closure(rank, &cartan);
        let mut sys = Self {
            order: ty.order(),
            ty,
            rank,
            cartan,
            positive_roots,
            generators: Vec::new(),
            tag,
        };
        sys.generators = (0..rank).map(|i| sys.reflection(i)).collect();
        sys
    }

    pub fn from_type_str(s: &str) -> Result<Self, CoxeterError> {
        Ok(Self::new(s.parse()?))
    }

    fn root_closure(rank: usize, cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= pairing;
                if img.iter().all(|&v| v >= 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<_> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        roots
    }

    fn reflection(&self, i: usize) -> GroupElement {
        let n = self.rank;
        let mut m = vec![0i32; n * n];
        for k in 0..n {
            m[k * n + k] = 1;
        }
        for j in 0..n {
            m[i * n + j] -= self.cartan[i][j] as i32;
        }
        let m: Box<[i32]> = m.into();
        GroupElement {
            inverse: m.clone(),
            matrix: m,
            length: 1,
            tag: self.tag,
        }
    }

    pub fn coxeter_type(&self) -> &CoxeterType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Group cardinality (saturating).
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<&GroupElement, CoxeterError> {
        i.checked_sub(1)
            .and_then(|k| self.generators.get(k))
            .ok_or(CoxeterError::LetterOutOfRange {
                letter: i,
                rank: self.rank,
            })
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.rank;
        let mut m = vec![0i32; n * n];
        for k in 0..n {
            m[k * n + k] = 1;
        }
        let m: Box<[i32]> = m.into();
        GroupElement {
            inverse: m.clone(),
            matrix: m,
            length: 0,
            tag: self.tag,
        }
    }

    pub fn check_order(&self, cap: u128) -> Result<(), CoxeterError> {
        if self.order > cap {
            return Err(CoxeterError::OrderExceedsCap {
                order: self.order,
                cap,
            });
        }
        Ok(())
    }

    fn check(&self, w: &GroupElement) -> Result<(), CoxeterError> {
        if w.tag != self.tag || w.matrix.len() != self.rank * self.rank {
            return Err(CoxeterError::MixedSystems);
        }
        Ok(())
    }

    fn matmul(&self, a: &[i32], b: &[i32]) -> Box<[i32]> {
        let n = self.rank;
        let mut out = vec![0i32; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
        out.into()
    }

    /// Length as the number of positive roots sent to negative roots.
    pub fn inversion_count(&self, matrix: &[i32]) -> usize {
        let n = self.rank;
        self.positive_roots
            .iter()
            .filter(|beta| {
                (0..n)
                    .map(|r| (0..n).map(|c| matrix[r * n + c] as i64 * beta[c]).sum::<i64>())
                    .find(|&v| v != 0)
                    .is_some_and(|v| v < 0)
            })
            .count()
    }

    /// Product of simple reflections in word order; the length is recomputed
    /// from root inversions, so non-reduced words are fine.
    pub fn from_word(&self, word: &ReducedWord) -> Result<GroupElement, CoxeterError> {
        let mut w = self.identity();
        for &l in word.letters() {
            self.generator(l)?;
        }
        for &l in word.letters() {
            w = self.mul_right_gen(&w, l - 1);
        }
        Ok(w)
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        let matrix = self.matmul(&a.matrix, &b.matrix);
        let inverse = self.matmul(&b.inverse, &a.inverse);
        let length = self.inversion_count(&matrix);
        Ok(GroupElement {
            matrix,
            inverse,
            length,
            tag: self.tag,
        })
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: w.inverse.clone(),
            inverse: w.matrix.clone(),
            length: w.length,
            tag: w.tag,
        }
    }

    /// Whether `s_i` (0-based) is a descent of `w` on the given side.
    pub fn is_descent(&self, w: &GroupElement, i: usize, side: Side) -> bool {
        match side {
            Side::Right => GroupElement::column_is_negative(&w.matrix, self.rank, i),
            Side::Left => GroupElement::column_is_negative(&w.inverse, self.rank, i),
        }
    }

    /// Descent set as 1-based generator indices.
    pub fn descents(&self, w: &GroupElement, side: Side) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.is_descent(w, i, side))
            .map(|i| i + 1)
            .collect()
    }

    /// `s_i * w` for a 0-based generator index; only row `i` of the matrix changes.
    pub fn mul_left_gen(&self, w: &GroupElement, i: usize) -> GroupElement {
        let n = self.rank;
        let descent = self.is_descent(w, i, Side::Left);
        let mut matrix = w.matrix.clone();
        for j in 0..n {
            let mut v = w.matrix[i * n + j];
            for k in 0..n {
                v -= self.cartan[i][k] as i32 * w.matrix[k * n + j];
            }
            matrix[i * n + j] = v;
        }
        // (s w)^-1 = w^-1 s = w^-1 - (w^-1 e_i) a_i
        let mut inverse = w.inverse.clone();
        for r in 0..n {
            let wi = w.inverse[r * n + i];
            if wi == 0 {
                continue;
            }
            for j in 0..n {
                inverse[r * n + j] -= wi * self.cartan[i][j] as i32;
            }
        }
        GroupElement {
            matrix,
            inverse,
            length: if descent { w.length - 1 } else { w.length + 1 },
            tag: self.tag,
        }
    }

    /// `w * s_i` for a 0-based generator index.
    pub fn mul_right_gen(&self, w: &GroupElement, i: usize) -> GroupElement {
        let inv = self.inverse(w);
        self.inverse(&self.mul_left_gen(&inv, i))
    }

    pub fn mul_gen(&self, w: &GroupElement, i: usize, side: Side) -> GroupElement {
        match side {
            Side::Left => self.mul_left_gen(w, i),
            Side::Right => self.mul_right_gen(w, i),
        }
    }

    /// Bruhat order by the lifting recursion. Each step strips a left descent
    /// `s` of `y` and replaces `x` by `sx` when `s` is also a descent of `x`;
    /// the recursion never branches, so it runs in `O(l(y))` steps.
    pub fn bruhat_leq(&self, x: &GroupElement, y: &GroupElement) -> Result<bool, CoxeterError> {
        self.check(x)?;
        self.check(y)?;
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            if x.length > y.length {
                return Ok(false);
            }
            if y.length == 0 {
                return Ok(x.length == 0);
            }
            if x.length == 0 {
                return Ok(true);
            }
            let s = (0..self.rank)
                .find(|&i| self.is_descent(&y, i, Side::Left))
                .expect("non-identity element has a left descent");
            if self.is_descent(&x, s, Side::Left) {
                x = self.mul_left_gen(&x, s);
            }
            y = self.mul_left_gen(&y, s);
        }
    }

    /// ShortLex-minimal reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &GroupElement) -> ReducedWord {
        let mut letters = Vec::with_capacity(w.length);
        let mut w = w.clone();
        while w.length > 0 {
            let s = (0..self.rank)
                .find(|&i| self.is_descent(&w, i, Side::Left))
                .expect("non-identity element has a left descent");
            letters.push(s + 1);
            w = self.mul_left_gen(&w, s);
        }
        ReducedWord(letters)
    }

    /// The unique element of length `|positive roots|`, reached by climbing
    /// through ascents.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        while let Some(s) = (0..self.rank).find(|&i| !self.is_descent(&w, i, Side::Right)) {
            w = self.mul_right_gen(&w, s);
        }
        w
    }

    /// All elements in canonical order (length, then ShortLex reduced word).
    pub fn enumerate(&self, cap: u128) -> Result<Vec<GroupElement>, CoxeterError> {
        self.check_order(cap)?;
        Ok(crate::group::ElementTable::full(self, cap)?.into_elements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> CoxeterSystem {
        CoxeterSystem::from_type_str(t).unwrap()
    }

    fn word(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_types() {
        assert_eq!("A1xA1".parse::<CoxeterType>().unwrap().rank(), 2);
        assert_eq!("B3".parse::<CoxeterType>().unwrap().to_string(), "B3");
        for bad in ["", "E5", "F3", "G3", "A0", "Q2", "D3", "A1x", "B1"] {
            assert!(bad.parse::<CoxeterType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn build_examples() {
        let a1 = sys("A1");
        assert_eq!((a1.order(), a1.positive_roots().len()), (2, 1));
        let a2 = sys("A2");
        assert_eq!((a2.order(), a2.positive_roots().len()), (6, 3));
        let b3 = sys("B3");
        assert_eq!((b3.order(), b3.positive_roots().len()), (48, 9));
    }

    #[test]
    fn root_counts_match_known_values() {
        for t in ["A1", "A4", "B2", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8", "A2xB2"] {
            let s = sys(t);
            assert_eq!(s.positive_roots().len(), s.coxeter_type().positive_root_count(), "{t}");
            assert_eq!(s.longest_element().length(), s.positive_roots().len(), "{t}");
        }
    }

    #[test]
    fn cartan_shape() {
        for t in ["B4", "C4", "D5", "E8", "F4", "G2", "A1xG2"] {
            let s = sys(t);
            for (i, row) in s.cartan().iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(v, 2);
                    } else {
                        assert!(v <= 0);
                        assert_eq!(v == 0, s.cartan()[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn roots_sorted_by_height() {
        let s = sys("A2");
        assert_eq!(s.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn from_word_examples() {
        let a2 = sys("A2");
        assert!(a2.from_word(&word("")).unwrap().is_identity());
        assert!(a2.from_word(&word("1 1")).unwrap().is_identity());
        let w = a2.from_word(&word("1,2,1")).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w, a2.longest_element());
        assert_eq!(
            a2.from_word(&word("3")),
            Err(CoxeterError::LetterOutOfRange { letter: 3, rank: 2 })
        );
        assert!(a2.from_word(&word("0")).is_err());
    }

    #[test]
    fn multiply_examples() {
        let a2 = sys("A2");
        let s1 = a2.from_word(&word("1")).unwrap();
        let s2 = a2.from_word(&word("2")).unwrap();
        let s12 = a2.multiply(&s1, &s2).unwrap();
        assert_eq!(s12.length(), 2);
        assert_eq!(a2.multiply(&s1, &s12).unwrap(), s2);
        let w = a2.from_word(&word("1 2 1")).unwrap();
        assert!(a2.multiply(&w, &a2.inverse(&w)).unwrap().is_identity());
        let b2 = sys("B2");
        assert_eq!(
            a2.multiply(&s1, &b2.from_word(&word("1")).unwrap()),
            Err(CoxeterError::MixedSystems)
        );
    }

    #[test]
    fn generator_products_keep_inverse_in_sync() {
        let s = sys("G2");
        let mut w = s.identity();
        for &l in &[0, 1, 0, 1, 1, 0] {
            w = s.mul_left_gen(&w, l);
            let prod = s.matmul(w.matrix(), &w.inverse);
            assert_eq!(prod, s.identity().matrix.clone());
            assert_eq!(w.length(), s.inversion_count(w.matrix()));
        }
    }

    #[test]
    fn descent_examples() {
        let a2 = sys("A2");
        assert!(a2.descents(&a2.identity(), Side::Left).is_empty());
        let w0 = a2.longest_element();
        assert_eq!(a2.descents(&w0, Side::Left), vec![1, 2]);
        assert_eq!(a2.descents(&w0, Side::Right), vec![1, 2]);
        let w = a2.from_word(&word("1 2")).unwrap();
        assert_eq!(a2.descents(&w, Side::Right), vec![2]);
        assert_eq!(a2.descents(&w, Side::Left), vec![1]);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = sys("A2");
        let e = a2.identity();
        let s1 = a2.from_word(&word("1")).unwrap();
        let s2 = a2.from_word(&word("2")).unwrap();
        let s21 = a2.from_word(&word("2 1")).unwrap();
        assert!(a2.bruhat_leq(&e, &s21).unwrap());
        assert!(!a2.bruhat_leq(&s1, &s2).unwrap());
        assert!(a2.bruhat_leq(&s1, &s21).unwrap());
        assert!(!a2.bruhat_leq(&s21, &s1).unwrap());
    }

    #[test]
    fn longest_and_reduced_words() {
        let a1 = sys("A1");
        assert_eq!(a1.reduced_word(&a1.longest_element()), word("1"));
        let a2 = sys("A2");
        assert_eq!(a2.reduced_word(&a2.longest_element()), word("1 2 1"));
        assert_eq!(sys("B2").longest_element().length(), 4);
    }

    #[test]
    fn enumerate_examples() {
        let a1 = sys("A1").enumerate(DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(a1.len(), 2);
        assert!(a1[0].is_identity());
        let a2 = sys("A2").enumerate(DEFAULT_ORDER_CAP).unwrap();
        let lens: Vec<_> = a2.iter().map(GroupElement::length).collect();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(sys("A3").enumerate(DEFAULT_ORDER_CAP).unwrap().len(), 24);
        assert_eq!(
            sys("A3").enumerate(10),
            Err(CoxeterError::OrderExceedsCap { order: 24, cap: 10 })
        );
    }
}
