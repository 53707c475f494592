use std::fmt;

use serde::{Deserialize, Serialize};

use super::Group;

/// A freely reduced word in the generators `a_1, a_2, ...` of a free group.
///
/// Letters are `(generator index, +1 | -1)` with zero-based indices;
/// rendering uses one-based names `a1, a2, ...`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn generator(index: usize) -> Self {
        FreeWord { letters: vec![(index, 1)] }
    }

    /// Builds a word from `(generator, exponent)` syllables and reduces it.
    pub fn from_syllables(syllables: &[(usize, i64)]) -> Self {
        let mut word = FreeWord::default();
        for &(g, e) in syllables {
            let sign = if e < 0 { -1 } else { 1 };
            for _ in 0..e.unsigned_abs() {
                word.push(g, sign);
            }
        }
        word
    }

    fn push(&mut self, g: usize, sign: i8) {
        match self.letters.last() {
            Some(&(h, s)) if h == g && s == -sign => {
                self.letters.pop();
            }
            _ => self.letters.push((g, sign)),
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The prefix made of the first `n` letters (a reduced word).
    pub fn prefix(&self, n: usize) -> FreeWord {
        FreeWord { letters: self.letters[..n].to_vec() }
    }

    /// Evaluates the word under the homomorphism sending `a_i` to `images[i]`.
    pub fn evaluate<G: Group>(&self, images: &[G]) -> G {
        self.letters.iter().fold(G::identity(), |acc, &(g, s)| {
            let img = if s > 0 { images[g].clone() } else { images[g].inv() };
            acc.mul(&img)
        })
    }
}

impl Group for FreeWord {
    fn identity() -> Self {
        FreeWord::default()
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for &(g, s) in &rhs.letters {
            out.push(g, s);
        }
        out
    }

    fn inv(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut syllables: Vec<(usize, i64)> = Vec::new();
        for &(g, s) in &self.letters {
            match syllables.last_mut() {
                Some((h, e)) if *h == g => *e += i64::from(s),
                _ => syllables.push((g, i64::from(s))),
            }
        }
        for (i, (g, e)) in syllables.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "a{}", g + 1)?;
            } else {
                write!(f, "a{}^{}", g + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::KleinElement;

    #[test]
    fn free_reduction() {
        let w = FreeWord::from_syllables(&[(0, 2), (1, 1), (1, -1), (0, -1)]);
        assert_eq!(w, FreeWord::generator(0));
        let u = FreeWord::from_syllables(&[(0, 1), (1, 2)]);
        assert!(u.mul(&u.inv()).is_identity());
    }

    #[test]
    fn rendering() {
        let w = FreeWord::from_syllables(&[(0, 2), (1, -1), (2, 1)]);
        assert_eq!(w.to_string(), "a1^2*a2^-1*a3");
        assert_eq!(FreeWord::identity().to_string(), "1");
    }

    #[test]
    fn evaluation_is_a_homomorphism() {
        let images = [KleinElement::x(), KleinElement::y()];
        let u = FreeWord::from_syllables(&[(1, 1), (0, 1), (1, 1)]);
        let v = FreeWord::from_syllables(&[(0, -1)]);
        assert_eq!(u.mul(&v).evaluate(&images), u.evaluate(&images).mul(&v.evaluate(&images)));
        assert!(u.mul(&v).evaluate(&images).is_identity());
    }
}
