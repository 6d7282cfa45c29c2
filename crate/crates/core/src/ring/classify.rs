//! Annihilators, zero-divisors and the structural predicates used by the
//! domination theorems.

use alloc::vec::Vec;

use super::{Element, ElementSet, FiniteRing};

impl FiniteRing {
    /// `ann(a) = { x : ax = 0 }`.
    pub fn annihilator(&self, a: Element) -> ElementSet {
        let mut set = ElementSet::new(self.order());
        for x in self.elements() {
            if self.mul(a, x) == Element::ZERO {
                set.insert(x);
            }
        }
        set
    }

    /// `Z(R)*`, the nonzero zero-divisors.
    pub fn zero_divisors(&self) -> ElementSet {
        let mut set = ElementSet::new(self.order());
        for a in self.elements().skip(1) {
            if set.contains(a) {
                continue;
            }
            for b in self.elements().skip(1) {
                if self.mul(a, b) == Element::ZERO {
                    set.insert(a);
                    set.insert(b);
                    break;
                }
            }
        }
        set
    }

    pub fn is_domain(&self) -> bool {
        self.zero_divisors().is_empty()
    }

    pub fn is_unit(&self, a: Element) -> bool {
        self.elements().any(|x| self.mul(a, x) == self.one())
    }

    pub fn idempotents(&self) -> ElementSet {
        let mut set = ElementSet::new(self.order());
        for e in self.elements() {
            if self.mul(e, e) == e {
                set.insert(e);
            }
        }
        set
    }

    /// The principal ideal `aR`, which for an idempotent `a` is a ring with
    /// identity `a`.
    pub fn principal_ideal(&self, a: Element) -> ElementSet {
        let mut set = ElementSet::new(self.order());
        for x in self.elements() {
            set.insert(self.mul(a, x));
        }
        set
    }

    fn nonzero_zero_divisors_within(&self, set: &ElementSet) -> usize {
        let members: Vec<Element> = set.iter().filter(|&e| e != Element::ZERO).collect();
        members
            .iter()
            .filter(|&&u| members.iter().any(|&v| self.mul(u, v) == Element::ZERO))
            .count()
    }

    /// Nontrivial idempotents `e` with `|eR| = 2`, paired with `(1-e)R`.
    fn z2_splits(&self) -> impl Iterator<Item = (Element, ElementSet)> + '_ {
        let one = self.one();
        self.idempotents()
            .to_vec()
            .into_iter()
            .filter(move |&e| e != Element::ZERO && e != one)
            .filter(|&e| self.principal_ideal(e).len() == 2)
            .map(move |e| (e, self.principal_ideal(self.sub(one, e))))
    }

    /// Least idempotent `e` witnessing `R = eR x (1-e)R` with `eR = Z_2` and
    /// `(1-e)R` a domain, i.e. `R` is isomorphic to `Z_2 x D`.
    pub fn z2_times_domain(&self) -> Option<Element> {
        self.z2_splits()
            .find(|(_, rest)| self.nonzero_zero_divisors_within(rest) == 0)
            .map(|(e, _)| e)
    }

    /// Least idempotent splitting `R = Z_2 x S` with `S` of order 4 having
    /// exactly one nonzero zero-divisor, i.e. `S` is `Z_4` or `Z_2[x]/(x^2)`.
    pub fn z2_times_local_order_four(&self) -> Option<Element> {
        self.z2_splits()
            .find(|(_, rest)| rest.len() == 4 && self.nonzero_zero_divisors_within(rest) == 1)
            .map(|(e, _)| e)
    }

    /// Least `a` in `Z(R)*` with `ann(a) = Z(R)` (zero included), i.e. a
    /// witness that `Z(R)` is an annihilator ideal.
    pub fn annihilator_ideal_witness(&self) -> Option<Element> {
        let mut zero_divisors = self.zero_divisors();
        if zero_divisors.is_empty() {
            return None;
        }
        let candidates = zero_divisors.to_vec();
        zero_divisors.insert(Element::ZERO);
        candidates
            .into_iter()
            .find(|&a| self.annihilator(a) == zero_divisors)
    }
}
