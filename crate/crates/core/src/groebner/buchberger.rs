//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! sugar selection strategy.

use crate::coeff::Rational;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::zpoly::{reduce, spoly, Prepared, Reducer, ZCtx, ZTerms};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State {
    ctx: ZCtx,
    order: MonomialOrder,
    polys: Vec<Reducer>,
    sugar: Vec<u64>,
    /// false once a later element's leading monomial divides this one's
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lead(&self, i: usize) -> &Monomial {
        &self.polys[i].lead
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let si = self.sugar[i] + lcm.degree() - self.lead(i).degree();
        let sj = self.sugar[j] + lcm.degree() - self.lead(j).degree();
        si.max(sj)
    }

    /// Gebauer–Möller update after adding element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lead(h).clone();
        let candidates: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.lead(g)), lh.gcd_is_one(self.lead(g))))
            .collect();

        // chain criterion among new pairs: drop (h, g) when another new
        // pair's lcm properly divides its lcm
        let survivors: Vec<&(usize, Monomial, bool)> = candidates
            .iter()
            .filter(|(_, l1, _)| {
                !candidates
                    .iter()
                    .any(|(_, l2, _)| l2 != l1 && l2.divides(l1))
            })
            .collect();
        // one pair per lcm class; a class containing a coprime pair is
        // dropped entirely (product criterion)
        let mut fresh: Vec<(usize, Monomial)> = Vec::new();
        for (g, l, _) in &survivors {
            if fresh.iter().any(|(_, l2)| l2 == l) {
                continue;
            }
            let class_coprime = survivors.iter().any(|(_, l2, c)| *c && l2 == l);
            if !class_coprime {
                fresh.push((*g, l.clone()));
            }
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(&polys[p.i].lead) != p.lcm
                && lh.lcm(&polys[p.j].lead) != p.lcm)
        });

        for (g, l) in fresh {
            let sugar = self.pair_sugar(g, h, &l);
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                sugar,
            });
        }

        for g in 0..h {
            if self.active[g] && lh.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
    }

    fn push(&mut self, mut terms: ZTerms, sugar: u64) {
        self.ctx.normalize(&mut terms);
        self.polys.push(Reducer::new(terms));
        self.sugar.push(sugar);
        self.active.push(true);
        self.update(self.polys.len() - 1);
    }

    /// Removes the pair with least sugar, ties broken by the smaller lcm
    /// and then by creation indices.
    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
                .is_lt();
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Like `select`, but only a pair whose sugar is at most `d`.
    fn select_up_to(&mut self, d: u64) -> Option<Pair> {
        match self.pairs.iter().map(|p| p.sugar).min() {
            Some(s) if s <= d => self.select(),
            _ => None,
        }
    }

    fn active_refs(&self) -> Vec<&Reducer> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Minimal, tail-reduced basis from any Gröbner basis, sorted descending.
fn interreduce(ctx: &ZCtx, mut basis: Vec<Reducer>) -> Vec<Reducer> {
    let order = ctx.order();
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    let mut minimal: Vec<Reducer> = Vec::new();
    for p in basis {
        if minimal.iter().any(|q| q.lead.divides(&p.lead)) {
            continue;
        }
        minimal.push(p);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<&Reducer> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q)
            .collect();
        // no other leading monomial divides this one, so the head survives
        let (mut terms, _) = reduce(ctx, p.terms.clone(), &others);
        ctx.normalize(&mut terms);
        out.push(Reducer::new(terms));
    }
    out.sort_by(|a, b| order.cmp(&b.lead, &a.lead));
    out
}

fn to_monic(ctx: &ZCtx, basis: &[Reducer]) -> Vec<Polynomial> {
    basis
        .iter()
        .map(|r| ctx.to_poly(&r.terms, &Rational::one()).make_monic())
        .collect()
}

fn run(ctx: ZCtx, gens: &[&Polynomial]) -> Vec<Reducer> {
    let order = ctx.order();
    let mut state = State {
        ctx,
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    // smallest generators first so they reduce the larger ones
    let mut input: Vec<&Polynomial> = gens.to_vec();
    input.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    for g in input {
        let (t, _) = state.ctx.encode(g);
        let (h, _) = reduce(&state.ctx, t, &state.active_refs());
        if !h.is_empty() {
            state.push(h, g.total_degree().unwrap());
        }
    }
    while let Some(pair) = state.select() {
        let s = spoly(&state.ctx, &state.polys[pair.i], &state.polys[pair.j]);
        let (h, _) = reduce(&state.ctx, s, &state.active_refs());
        if !h.is_empty() {
            state.push(h, pair.sugar);
        }
    }
    let active: Vec<Reducer> = state.active_refs().into_iter().cloned().collect();
    interreduce(&state.ctx, active)
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, sorted
/// descending by leading monomial. Zero generators are ignored; an empty
/// input yields an empty basis.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ctx = ZCtx::new(first.ring());
    let basis = run(ctx.clone(), &gens);
    to_monic(&ctx, &basis)
}

/// The members of a homogeneous generating set that form a minimal
/// generating set, in increasing degree. The basis is completed one degree
/// at a time; a generator is kept when it does not reduce to zero modulo
/// everything of its degree already in the ideal.
pub fn minimal_generators(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut input: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = input.first() else {
        return Vec::new();
    };
    let ctx = ZCtx::new(first.ring());
    let order = ctx.order();
    input.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    let mut state = State {
        ctx,
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut kept = Vec::new();
    let mut next = input.into_iter().peekable();
    while let Some(d) = next.peek().and_then(|g| g.total_degree()) {
        while let Some(pair) = state.select_up_to(d) {
            let s = spoly(&state.ctx, &state.polys[pair.i], &state.polys[pair.j]);
            let (h, _) = reduce(&state.ctx, s, &state.active_refs());
            if !h.is_empty() {
                state.push(h, pair.sugar);
            }
        }
        while let Some(g) = next.next_if(|g| g.total_degree() == Some(d)) {
            let (t, _) = state.ctx.encode(g);
            let (h, _) = reduce(&state.ctx, t, &state.active_refs());
            if !h.is_empty() {
                state.push(h, d);
                kept.push(g.clone());
            }
        }
    }
    kept
}

/// Turns any Gröbner basis into the reduced one.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let basis: Vec<Polynomial> = basis.into_iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = basis.first() else {
        return basis;
    };
    let prepared = Prepared::new(first.ring(), &basis);
    let reduced = interreduce(&prepared.ctx, prepared.reducers);
    to_monic(&prepared.ctx, &reduced)
}

/// Buchberger's criterion: every S-polynomial of the basis reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let prepared = Prepared::new(first.ring(), basis);
    let refs: Vec<&Reducer> = prepared.reducers.iter().collect();
    for i in 0..refs.len() {
        for j in i + 1..refs.len() {
            let s = spoly(&prepared.ctx, refs[i], refs[j]);
            if !reduce(&prepared.ctx, s, &refs).0.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Structural check of reducedness: monic, and no term of any element is
/// divisible by another element's leading monomial.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, p)| {
        p.leading_coeff().is_some_and(|c| c.is_one())
            && basis.iter().enumerate().all(|(j, q)| {
                i == j
                    || p.terms()
                        .iter()
                        .all(|(m, _)| !q.leading_monomial().unwrap().divides(m))
            })
    })
}
