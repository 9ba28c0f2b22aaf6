//! The 0-Hecke monoid of a fixed size, enumerated once with its action tables.

use crate::error::{Error, Result};
use crate::perm::{check_generator, GeneratorSet, Permutation, Word};

/// Largest `N` for which the full monoid is materialized.
pub const MAX_TABLE_N: usize = 9;

/// All `N!` elements of `H_0(S_N)` in lexicographic order, with the
/// right and left generator actions tabulated.
///
/// Building this is the explicit initialization step for everything that
/// multiplies algebra elements; afterwards it is read-only and can be
/// shared between threads.
#[derive(Debug)]
pub struct HeckeMonoid {
    n: usize,
    elements: Vec<Permutation>,
    // index * (n - 1) + (i - 1)
    right: Vec<u32>,
    left: Vec<u32>,
    words: Vec<Word>,
    content: Vec<GeneratorSet>,
    left_descents: Vec<GeneratorSet>,
    right_descents: Vec<GeneratorSet>,
}

impl HeckeMonoid {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_TABLE_N).contains(&n) {
            return Err(Error::UnsupportedSize { n, min: 1, max: MAX_TABLE_N });
        }
        let elements = enumerate_lex(n);
        let gens = n - 1;
        let mut right = Vec::with_capacity(elements.len() * gens);
        let mut left = Vec::with_capacity(elements.len() * gens);
        let mut words = Vec::with_capacity(elements.len());
        let mut content = Vec::with_capacity(elements.len());
        let mut left_descents = Vec::with_capacity(elements.len());
        let mut right_descents = Vec::with_capacity(elements.len());
        for p in &elements {
            for i in 1..n {
                let mut r = p.clone();
                r.pi_right_in_place(i);
                right.push(rank(&r) as u32);
                let mut l = p.clone();
                l.pi_left_in_place(i);
                left.push(rank(&l) as u32);
            }
            let word = p.reduced_word();
            content.push(word.content());
            words.push(word);
            left_descents.push(p.left_descents());
            right_descents.push(p.right_descents());
        }
        Ok(Self { n, elements, right, left, words, content, left_descents, right_descents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N!`.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        (p.n() == self.n).then(|| rank(p))
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn longest_index(&self) -> usize {
        self.elements.len() - 1
    }

    #[inline]
    pub fn act_right(&self, index: usize, i: usize) -> usize {
        self.right[index * (self.n - 1) + i - 1] as usize
    }

    #[inline]
    pub fn act_left(&self, i: usize, index: usize) -> usize {
        self.left[index * (self.n - 1) + i - 1] as usize
    }

    /// Lexicographically minimal reduced word.
    pub fn word(&self, index: usize) -> &Word {
        &self.words[index]
    }

    pub fn length(&self, index: usize) -> usize {
        self.words[index].len()
    }

    pub fn content(&self, index: usize) -> GeneratorSet {
        self.content[index]
    }

    pub fn left_descents(&self, index: usize) -> GeneratorSet {
        self.left_descents[index]
    }

    pub fn right_descents(&self, index: usize) -> GeneratorSet {
        self.right_descents[index]
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.words[b].letters().iter().fold(a, |x, &i| self.act_right(x, i))
    }

    /// Index of `π_w` for an arbitrary (not necessarily reduced) word.
    pub fn word_index(&self, letters: &[usize]) -> Result<usize> {
        letters.iter().try_fold(self.identity_index(), |x, &i| {
            check_generator(i, self.n)?;
            Ok(self.act_right(x, i))
        })
    }

    pub fn check_generator(&self, i: usize) -> Result<()> {
        check_generator(i, self.n)
    }
}

/// Lexicographic rank of a permutation (Lehmer code).
fn rank(p: &Permutation) -> usize {
    let e = p.entries();
    let n = e.len();
    let mut r = 0;
    for a in 0..n {
        let smaller = e[a + 1..].iter().filter(|&&x| x < e[a]).count();
        r = r * (n - a) + smaller;
    }
    r
}

fn enumerate_lex(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_vec_unchecked(current.clone()));
        // next permutation in lexicographic order
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).expect("successor exists");
        current.swap(k, l);
        current[k + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_n_factorial_in_order() {
        for n in 1..=6 {
            let m = HeckeMonoid::new(n).unwrap();
            let expected: usize = (1..=n).product();
            assert_eq!(m.size(), expected);
            assert!(m.elements().windows(2).all(|w| w[0] < w[1]));
            for (k, p) in m.elements().iter().enumerate() {
                assert_eq!(m.index_of(p), Some(k));
            }
            assert_eq!(m.element(m.longest_index()), &Permutation::longest(n));
        }
    }

    #[test]
    fn tables_match_direct_actions() {
        let m = HeckeMonoid::new(4).unwrap();
        for (k, p) in m.elements().iter().enumerate() {
            for i in 1..4 {
                assert_eq!(m.element(m.act_right(k, i)), &p.apply_pi_right(i).unwrap());
                assert_eq!(m.element(m.act_left(i, k)), &p.apply_pi_left(i).unwrap());
            }
        }
    }

    #[test]
    fn products_match_permutation_products() {
        let m = HeckeMonoid::new(4).unwrap();
        for a in 0..m.size() {
            for b in 0..m.size() {
                let expected = m.element(a).monoid_product(m.element(b)).unwrap();
                assert_eq!(m.element(m.product(a, b)), &expected);
            }
        }
    }

    #[test]
    fn rejects_sizes_out_of_range() {
        assert!(HeckeMonoid::new(0).is_err());
        assert!(HeckeMonoid::new(MAX_TABLE_N + 1).is_err());
        let m = HeckeMonoid::new(3).unwrap();
        assert!(m.word_index(&[1, 3]).is_err());
        assert_eq!(m.word_index(&[1, 2, 1, 2]).unwrap(), m.longest_index());
    }
}
