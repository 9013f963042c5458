use alloc::vec::Vec;
use core::fmt;

use crate::algebra::odd;
use crate::{Error, Result};

/// A (p,q)-shuffle drawn as a lattice walk from (0,0) to (p,q).
///
/// A rightward step places the next entry of the left word, an upward step
/// the next entry of the right word. The identity shuffle runs through (p,0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    /// `false` = right, `true` = up.
    steps: Vec<bool>,
}

impl Walk {
    pub fn identity(p: usize, q: usize) -> Self {
        let mut steps = alloc::vec![false; p];
        steps.extend(core::iter::repeat(true).take(q));
        Walk { steps }
    }

    pub fn from_steps(steps: Vec<bool>) -> Self {
        Walk { steps }
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn p(&self) -> usize {
        self.steps.iter().filter(|s| !**s).count()
    }

    pub fn q(&self) -> usize {
        self.steps.iter().filter(|s| **s).count()
    }

    /// Every (p,q)-walk in lexicographic order with `R < U`; index 0 is the identity.
    pub fn all(p: usize, q: usize) -> Vec<Walk> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(p + q);
        fn rec(p: usize, q: usize, steps: &mut Vec<bool>, out: &mut Vec<Walk>) {
            if p == 0 && q == 0 {
                out.push(Walk { steps: steps.clone() });
                return;
            }
            if p > 0 {
                steps.push(false);
                rec(p - 1, q, steps, out);
                steps.pop();
            }
            if q > 0 {
                steps.push(true);
                rec(p, q - 1, steps, out);
                steps.pop();
            }
        }
        rec(p, q, &mut steps, &mut out);
        out
    }

    /// Lower-right corners: positions `c` (0-based) where step `c` goes right
    /// and step `c + 1` goes up.
    pub fn corners(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| !w[0] && w[1])
            .map(|(c, _)| c)
            .collect()
    }

    /// For position `c`, the number of left entries and right entries placed before it.
    pub fn counts_before(&self, c: usize) -> (usize, usize) {
        let ups = self.steps[..c].iter().filter(|s| **s).count();
        (c - ups, ups)
    }

    /// Pairs `(i, j)` (0-based) with left entry `i` placed after right entry `j`:
    /// the unit blocks under the walk.
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        for &up in &self.steps {
            if up {
                j += 1;
            } else {
                out.extend((0..j).map(|jj| (i, jj)));
                i += 1;
            }
        }
        out
    }

    /// Interleaves two sequences along the walk.
    pub fn interleave<T: Clone>(&self, xs: &[T], ys: &[T]) -> Vec<T> {
        let (mut i, mut j) = (0, 0);
        self.steps
            .iter()
            .map(|&up| {
                if up {
                    j += 1;
                    ys[j - 1].clone()
                } else {
                    i += 1;
                    xs[i - 1].clone()
                }
            })
            .collect()
    }

    /// Parity of σ(φ) = Σ over crossings of `x_weights[i] · y_weights[j]`.
    pub fn shuffle_sign(&self, x_weights: &[i64], y_weights: &[i64]) -> bool {
        let (mut i, mut j) = (0, 0);
        let mut y_sum = 0i64;
        let mut total = 0i64;
        for &up in &self.steps {
            if up {
                y_sum += y_weights[j];
                j += 1;
            } else {
                total += x_weights[i] * y_sum;
                i += 1;
            }
        }
        odd(total)
    }

    /// Parity of σ′(φ, c) for a bracket inserted at the corner `c`: `n` times
    /// the weights of the left entries placed after the slot plus the right
    /// entries placed before it.
    pub fn corner_sign(&self, c: usize, x_weights: &[i64], y_weights: &[i64], n: i64) -> bool {
        if !odd(n) {
            return false;
        }
        let (mut i, mut j) = (0, 0);
        let mut total = 0i64;
        for (pos, &up) in self.steps.iter().enumerate() {
            if up {
                if pos < c {
                    total += y_weights[j];
                }
                j += 1;
            } else {
                if pos > c + 1 {
                    total += x_weights[i];
                }
                i += 1;
            }
        }
        odd(total)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            f.write_str(if up { "U" } else { "R" })?;
        }
        Ok(())
    }
}

impl core::str::FromStr for Walk {
    type Err = Error;

    /// Parses a string of `R`/`U` steps.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                'R' | 'r' => Ok(false),
                'U' | 'u' => Ok(true),
                other => Err(Error::Selection(alloc::format!("walk step `{other}` is not R or U"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Walk::from_steps)
    }
}

/// Binomial coefficient, used for counting walks.
pub fn walk_count(p: usize, q: usize) -> usize {
    let (k, n) = (p.min(q), p + q);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn enumeration_order() {
        let walks = Walk::all(3, 2);
        assert_eq!(walks.len(), walk_count(3, 2));
        assert_eq!(walks[0], Walk::identity(3, 2));
        assert_eq!(walks[5].to_string(), "RUURR");
        assert_eq!(Walk::all(0, 0).len(), 1);
    }

    #[test]
    fn figure_one_walk() {
        let w: Walk = "RUURR".parse().unwrap();
        assert_eq!(w.crossings(), vec![(1, 0), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(w.corners(), vec![0]);
        assert_eq!(w.interleave(&["x1", "x2", "x3"], &["y1", "y2"]), vec!["x1", "y1", "y2", "x2", "x3"]);
    }

    #[test]
    fn sign_of_a_transposition() {
        let w: Walk = "UR".parse().unwrap();
        assert!(!w.shuffle_sign(&[3], &[6]));
        assert!(w.shuffle_sign(&[3], &[5]));
    }

    #[test]
    fn corner_sign_counts_entries_past_the_slot() {
        // [x1, y] then x2: x2 sits after the slot.
        let w: Walk = "RUR".parse().unwrap();
        assert!(w.corner_sign(0, &[2, 3], &[4], 3));
        assert!(!w.corner_sign(0, &[2, 3], &[4], 2));
        assert!(!w.corner_sign(0, &[3, 2], &[4], 3));
    }
}
