/// Number of points of `P^m(𝔽_q)`, i.e. `(q^{m+1} − 1)/(q − 1)`.
pub fn projective_point_count(q: u64, m: usize) -> u128 {
    let q = q as u128;
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for _ in 0..=m {
        total = total.saturating_add(term);
        term = term.saturating_mul(q);
    }
    total
}

/// Normalized points of `P^m` over a finite field given by its element list
/// (which must start with zero, then one): the leftmost nonzero coordinate
/// is 1. Points come grouped by the position of that coordinate.
pub struct ProjectivePoints<'a, E> {
    elems: &'a [E],
    len: usize,
    pivot: usize,
    digits: Vec<usize>,
    done: bool,
}

impl<'a, E: Clone> ProjectivePoints<'a, E> {
    /// Points of `P^{len-1}`, i.e. lines in a `len`-dimensional space.
    pub fn new(elems: &'a [E], len: usize) -> Self {
        ProjectivePoints {
            elems,
            len,
            pivot: 0,
            digits: vec![0; len.saturating_sub(1)],
            done: len == 0,
        }
    }
}

impl<E: Clone> Iterator for ProjectivePoints<'_, E> {
    type Item = Vec<E>;

    fn next(&mut self) -> Option<Vec<E>> {
        if self.done {
            return None;
        }
        let free = self.len - self.pivot - 1;
        let mut point = Vec::with_capacity(self.len);
        point.extend(std::iter::repeat(self.elems[0].clone()).take(self.pivot));
        point.push(self.elems[1].clone());
        point.extend(self.digits[..free].iter().map(|&d| self.elems[d].clone()));
        // odometer over the free coordinates
        let q = self.elems.len();
        let mut carry = true;
        for d in self.digits[..free].iter_mut().rev() {
            *d += 1;
            if *d < q {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            self.pivot += 1;
            if self.pivot == self.len {
                self.done = true;
            }
        }
        Some(point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_formula() {
        let f3 = [0u8, 1, 2];
        assert_eq!(ProjectivePoints::new(&f3, 3).count(), 13);
        assert_eq!(projective_point_count(3, 2), 13);
        assert_eq!(ProjectivePoints::new(&f3, 2).count(), 4);
        assert_eq!(projective_point_count(5, 2), 31);
        assert_eq!(ProjectivePoints::new(&[0u8, 1, 2, 3, 4], 3).count(), 31);
    }

    #[test]
    fn points_are_normalized_and_distinct() {
        let f3 = [0u8, 1, 2];
        let pts: Vec<_> = ProjectivePoints::new(&f3, 3).collect();
        for p in &pts {
            assert_eq!(p.iter().find(|&&c| c != 0), Some(&1));
        }
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), pts.len());
        assert_eq!(pts.last().unwrap(), &vec![0, 0, 1]);
    }
}
