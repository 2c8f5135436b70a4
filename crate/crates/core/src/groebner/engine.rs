//! Buchberger's algorithm for submodules of graded free modules.
//!
//! Pairs are selected by the normal strategy (lowest twisted degree of the
//! lcm first) and pruned with the Gebauer-Moeller criteria. Computation can
//! be truncated at a degree: for homogeneous input a basis complete through
//! degree `d` decides membership of every element of degree `<= d`.

use super::modvec::{axpy_from, MTerm, ModVec, ModuleOrder};
use crate::arith::{FieldElem, Monomial, PrimeField};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i32,
}

/// Counters for profiling and tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_pruned: usize,
}

#[derive(Clone, Debug)]
pub struct GbEngine {
    order: ModuleOrder,
    field: PrimeField,
    weights: Vec<i32>,
    basis: Vec<ModVec>,
    leads: Vec<(Monomial, usize)>,
    alive: Vec<bool>,
    single: Vec<bool>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    pending: Vec<ModVec>,
    stats: EngineStats,
}

impl GbEngine {
    pub fn new(order: ModuleOrder, field: PrimeField, weights: Vec<i32>) -> Self {
        let rank = order.rank();
        GbEngine {
            order,
            field,
            weights,
            basis: Vec::new(),
            leads: Vec::new(),
            alive: Vec::new(),
            single: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            pairs: Vec::new(),
            pending: Vec::new(),
            stats: EngineStats::default(),
        }
    }

    /// An engine seeded with a known Groebner basis; used as a reducer.
    pub fn from_basis(
        order: ModuleOrder,
        field: PrimeField,
        weights: Vec<i32>,
        basis: impl IntoIterator<Item = ModVec>,
    ) -> Self {
        let mut e = GbEngine::new(order, field, weights);
        for b in basis {
            if !b.is_zero() {
                e.insert(b.monic(&e.field));
            }
        }
        e.pairs.clear();
        e
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    /// Queues a generator; it is processed by the next [`compute`](Self::compute)
    /// call whose limit reaches its degree.
    pub fn add_generator(&mut self, v: ModVec) {
        if !v.is_zero() {
            self.pending.push(v);
        }
    }

    fn elem_degree(&self, v: &ModVec) -> i32 {
        let t = v.lead().expect("nonzero");
        self.order.degree_of(&t.mono, t.comp)
    }

    /// Runs Buchberger until every pending generator and pair of degree
    /// `<= limit` is processed (all of them when `limit` is `None`).
    pub fn compute(&mut self, limit: Option<i32>) {
        loop {
            let gen_pick = self
                .pending
                .iter()
                .enumerate()
                .map(|(k, v)| (self.elem_degree(v), k))
                .min();
            let pair_pick = self
                .pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    a.degree
                        .cmp(&b.degree)
                        .then(a.j.cmp(&b.j))
                        .then(a.i.cmp(&b.i))
                })
                .map(|(k, p)| (p.degree, k));
            let take_gen = match (gen_pick, pair_pick) {
                (None, None) => return,
                (Some((dg, _)), Some((dp, _))) => dg <= dp,
                (Some(_), None) => true,
                (None, Some(_)) => false,
            };
            let d = if take_gen { gen_pick.unwrap().0 } else { pair_pick.unwrap().0 };
            if matches!(limit, Some(l) if d > l) {
                return;
            }
            let s = if take_gen {
                self.pending.remove(gen_pick.unwrap().1)
            } else {
                let p = self.pairs.swap_remove(pair_pick.unwrap().1);
                self.stats.pairs_reduced += 1;
                self.s_poly(&p)
            };
            let h = self.normal_form(&s);
            if h.is_zero() {
                if !take_gen {
                    self.stats.zero_reductions += 1;
                }
                continue;
            }
            let h = h.monic(&self.field);
            self.insert(h);
        }
    }

    pub fn is_complete(&self) -> bool {
        self.pending.is_empty() && self.pairs.is_empty()
    }

    fn s_poly(&self, p: &Pair) -> ModVec {
        let (li, _) = &self.leads[p.i];
        let (lj, _) = &self.leads[p.j];
        let ui = p.lcm.div(li).expect("lcm");
        let uj = p.lcm.div(lj).expect("lcm");
        let gi: Vec<MTerm> = axpy_from(
            &[],
            0,
            FieldElem::ONE,
            &ui,
            &self.basis[p.i].terms,
            &self.order,
            &self.field,
        );
        let minus = self.field.neg(FieldElem::ONE);
        ModVec {
            terms: axpy_from(
                &gi,
                0,
                minus,
                &uj,
                &self.basis[p.j].terms,
                &self.order,
                &self.field,
            ),
        }
    }

    fn find_reducer(&self, t: &MTerm, skip: Option<usize>) -> Option<usize> {
        self.by_comp[t.comp]
            .iter()
            .copied()
            .find(|&k| self.alive[k] && Some(k) != skip && self.leads[k].0.divides(&t.mono))
    }

    /// Full reduction of `v` by the current basis.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        self.reduce_inner(v, None, false)
    }

    /// Only the leading term is reduced; enough for membership tests.
    pub fn top_reduce(&self, v: &ModVec) -> ModVec {
        self.reduce_inner(v, None, true)
    }

    fn reduce_inner(&self, v: &ModVec, skip: Option<usize>, top_only: bool) -> ModVec {
        let mut terms = v.terms.clone();
        let mut pos = 0;
        while pos < terms.len() {
            match self.find_reducer(&terms[pos], skip) {
                Some(k) => {
                    let t = &terms[pos];
                    let (lm, _) = &self.leads[k];
                    let u = t.mono.div(lm).expect("divides");
                    let c = self.field.neg(t.coeff);
                    terms = axpy_from(
                        &terms,
                        pos,
                        c,
                        &u,
                        &self.basis[k].terms,
                        &self.order,
                        &self.field,
                    );
                }
                None => {
                    if top_only {
                        break;
                    }
                    pos += 1;
                }
            }
        }
        ModVec { terms }
    }

    fn insert(&mut self, h: ModVec) {
        let k = self.basis.len();
        let lead = h.lead().expect("nonzero");
        let (lk, ck) = (lead.mono.clone(), lead.comp);
        let single_k = h.single_component();

        // candidate pairs with the new element
        let mut cands: Vec<(usize, Monomial, bool)> = self.by_comp[ck]
            .iter()
            .copied()
            .filter(|&i| self.alive[i])
            .map(|i| {
                let l = self.leads[i].0.lcm(&lk, &self.weights);
                let coprime = single_k && self.single[i] && self.leads[i].0.is_coprime(&lk);
                (i, l, coprime)
            })
            .collect();
        cands.reverse();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((i, l, coprime)) = cands.pop() {
            let dominated = cands.iter().any(|(_, l2, _)| l2.divides(&l))
                || kept.iter().any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l, coprime));
            } else {
                self.stats.pairs_pruned += 1;
            }
        }

        // criterion B on old pairs
        let before = self.pairs.len();
        let leads = &self.leads;
        let weights = &self.weights;
        self.pairs.retain(|p| {
            if leads[p.i].1 != ck || !lk.divides(&p.lcm) {
                return true;
            }
            let li = leads[p.i].0.lcm(&lk, weights);
            let lj = leads[p.j].0.lcm(&lk, weights);
            li == p.lcm || lj == p.lcm
        });
        self.stats.pairs_pruned += before - self.pairs.len();

        for (i, l, coprime) in kept {
            if coprime {
                self.stats.pairs_pruned += 1;
                continue;
            }
            let degree = self.order.degree_of(&l, ck);
            self.pairs.push(Pair {
                i,
                j: k,
                lcm: l,
                degree,
            });
        }

        for &i in &self.by_comp[ck] {
            if self.alive[i] && lk.divides(&self.leads[i].0) {
                self.alive[i] = false;
            }
        }
        self.by_comp[ck].retain(|&i| self.alive[i]);

        self.basis.push(h);
        self.leads.push((lk, ck));
        self.alive.push(true);
        self.single.push(single_k);
        self.by_comp[ck].push(k);
    }

    /// The current minimal basis (alive elements) in insertion order.
    pub fn basis(&self) -> impl Iterator<Item = &ModVec> {
        self.basis
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(b, _)| b)
    }

    /// Leading (monomial, component) pairs of the minimal basis.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.leads
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// The reduced Groebner basis: monic, interreduced, sorted ascending by
    /// leading term. Meaningful once the computation is complete.
    pub fn reduced_basis(&self) -> Vec<ModVec> {
        let mut out: Vec<ModVec> = (0..self.basis.len())
            .filter(|&k| self.alive[k])
            .map(|k| {
                self.reduce_inner(&self.basis[k], Some(k), false)
                    .monic(&self.field)
            })
            .collect();
        out.sort_by(|a, b| {
            let (ta, tb) = (a.lead().unwrap(), b.lead().unwrap());
            self.order.cmp_terms(ta, tb)
        });
        out
    }

    /// `true` iff `v` reduces to zero (requires completeness through `v`'s degree).
    pub fn reduces_to_zero(&self, v: &ModVec) -> bool {
        self.top_reduce(v).is_zero()
    }
}
