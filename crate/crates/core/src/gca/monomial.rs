use std::cmp::Ordering;

/// Product of generators, stored as `(generator index, exponent)` pairs sorted
/// by index. Odd generators carry exponent 1.
///
/// Ordering is lexicographic on the expanded index sequence, so within one
/// degree `xy < xz < yz` and `x²y < xy²`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(index: u32) -> Self {
        Monomial { factors: vec![(index, 1)] }
    }

    /// Build from unsorted factors; repeated indices are merged.
    pub fn from_factors(mut factors: Vec<(u32, u32)>) -> Self {
        factors.retain(|(_, e)| *e > 0);
        factors.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (i, e) in factors {
            match merged.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => merged.push((i, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub(crate) fn from_sorted_unchecked(factors: Vec<(u32, u32)>) -> Self {
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.factors.iter().find(|(i, _)| *i == index).map_or(0, |(_, e)| *e)
    }

    pub fn contains(&self, index: u32) -> bool {
        self.exponent(index) > 0
    }

    /// Generator indices in order, repeated by exponent.
    pub fn expanded(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().flat_map(|(i, e)| std::iter::repeat_n(*i, *e as usize))
    }

    pub fn max_index(&self) -> Option<u32> {
        self.factors.last().map(|(i, _)| *i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.expanded();
        let mut b = other.expanded();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of two monomials with the Koszul sign.
///
/// `odd(i)` reports whether generator `i` has odd degree. Returns `None` when
/// an odd generator would appear twice; otherwise `(negative, product)`.
pub fn multiply_monomials(a: &Monomial, b: &Monomial, odd: impl Fn(u32) -> bool) -> Option<(bool, Monomial)> {
    if a.is_one() {
        return Some((false, b.clone()));
    }
    if b.is_one() {
        return Some((false, a.clone()));
    }
    let mut out = Vec::with_capacity(a.factors.len() + b.factors.len());
    let mut swaps = 0usize;
    // odd factors of `a` not yet passed in the merge; each odd factor of `b`
    // must move left past all of them
    let mut odd_remaining_in_a = a.factors.iter().filter(|(i, _)| odd(*i)).count();
    let (mut i, mut j) = (0, 0);
    while i < a.factors.len() || j < b.factors.len() {
        let take_a = j >= b.factors.len() || (i < a.factors.len() && a.factors[i].0 < b.factors[j].0);
        let take_b = i >= a.factors.len() || (j < b.factors.len() && b.factors[j].0 < a.factors[i].0);
        if take_a {
            if odd(a.factors[i].0) {
                odd_remaining_in_a -= 1;
            }
            out.push(a.factors[i]);
            i += 1;
        } else if take_b {
            if odd(b.factors[j].0) {
                swaps += odd_remaining_in_a;
            }
            out.push(b.factors[j]);
            j += 1;
        } else {
            let g = a.factors[i].0;
            if odd(g) {
                return None;
            }
            out.push((g, a.factors[i].1 + b.factors[j].1));
            i += 1;
            j += 1;
        }
    }
    Some((swaps % 2 == 1, Monomial::from_sorted_unchecked(out)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_odd(_: u32) -> bool {
        true
    }

    #[test]
    fn anticommutation_of_odd_generators() {
        let x = Monomial::generator(0);
        let y = Monomial::generator(1);
        let (neg_xy, xy) = multiply_monomials(&x, &y, all_odd).unwrap();
        let (neg_yx, yx) = multiply_monomials(&y, &x, all_odd).unwrap();
        assert_eq!(xy, yx);
        assert!(!neg_xy && neg_yx);
        assert!(multiply_monomials(&x, &x, all_odd).is_none());
    }

    #[test]
    fn sign_counts_transpositions() {
        // generators x1=0, y1=1, z1=2, y2=3: (x1 z1)(y1 y2) = - x1 y1 z1 y2
        let a = Monomial::from_factors(vec![(0, 1), (2, 1)]);
        let b = Monomial::from_factors(vec![(1, 1), (3, 1)]);
        let (neg, m) = multiply_monomials(&a, &b, all_odd).unwrap();
        assert!(neg);
        assert_eq!(m, Monomial::from_factors(vec![(0, 1), (1, 1), (2, 1), (3, 1)]));
    }

    #[test]
    fn even_generators_commute_and_accumulate() {
        let odd = |i: u32| i == 1;
        let u = Monomial::generator(0);
        let t = Monomial::generator(1);
        let (neg, m) = multiply_monomials(&t, &u, odd).unwrap();
        assert!(!neg);
        let (_, uu) = multiply_monomials(&u, &u, odd).unwrap();
        assert_eq!(uu.exponent(0), 2);
        assert_eq!(m, Monomial::from_factors(vec![(0, 1), (1, 1)]));
    }

    #[test]
    fn order_is_expanded_lexicographic() {
        let xy = Monomial::from_factors(vec![(0, 1), (1, 1)]);
        let xz = Monomial::from_factors(vec![(0, 1), (2, 1)]);
        let yz = Monomial::from_factors(vec![(1, 1), (2, 1)]);
        assert!(xy < xz && xz < yz);
        let x2y = Monomial::from_factors(vec![(0, 2), (1, 1)]);
        let xy2 = Monomial::from_factors(vec![(0, 1), (1, 2)]);
        assert!(x2y < xy2);
    }
}
