use smallvec::SmallVec;

/// Exponent storage; eight variables fit inline.
pub type Exponents = SmallVec<[u16; 8]>;

/// A power product `x_1^a_1 ... x_n^a_n` together with its weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: i32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u16], weights: &[i32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i32 * w)
            .sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn var(i: usize, weights: &[i32]) -> Self {
        let mut m = Monomial::one(weights.len());
        m.exps[i] = 1;
        m.degree = weights[i];
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> i32 {
        self.degree
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `true` iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[i32]) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(&exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Monomial in `nvars + extra` variables with the new variables placed first.
    pub fn prepend_vars(&self, extra: &[u16], extra_weights: &[i32]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_slice(extra);
        exps.extend_from_slice(&self.exps);
        let degree = self.degree
            + extra
                .iter()
                .zip(extra_weights)
                .map(|(&e, &w)| e as i32 * w)
                .sum::<i32>();
        Monomial { exps, degree }
    }

    /// Drops the first `k` variables; the caller guarantees they have exponent zero
    /// or weight zero.
    pub fn drop_front(&self, k: usize, weights_rest: &[i32]) -> Monomial {
        Monomial::new(&self.exps[k..], weights_rest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_weighted_dot_product() {
        let w = [1, 2, 3];
        let m = Monomial::new(&[2, 1, 1], &w);
        assert_eq!(m.degree(), 2 + 2 + 3);
        let n = Monomial::new(&[0, 1, 0], &w);
        assert_eq!(m.mul(&n).degree(), 9);
        assert_eq!(m.div(&n).unwrap().degree(), 5);
        assert!(n.div(&m).is_none());
        assert_eq!(m.lcm(&Monomial::new(&[0, 3, 0], &w), &w).exponents(), &[2, 3, 1]);
    }
}
