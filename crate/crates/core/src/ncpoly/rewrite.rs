//! Normal ordering by leftmost adjacent-pair rewriting.

use std::collections::BTreeMap;

use super::element::{Element, Monomial};
use super::generator::Generator;
use super::preset::AlgebraPreset;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A letter of an unreduced word: a generator or a power of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Letter {
    G(Generator),
    Q(i64),
}

pub(crate) type Word = Vec<Letter>;

pub(crate) fn letters(m: &Monomial) -> impl Iterator<Item = Letter> + '_ {
    m.word().iter().map(|&g| Letter::G(g)).chain((m.qexp() != 0).then_some(Letter::Q(m.qexp())))
}

fn render_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|l| match l {
            Letter::G(g) => g.to_string(),
            Letter::Q(n) => format!("q^{n}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

enum Step {
    Done(Monomial),
    Rewrite(Vec<(Scalar, Word)>),
}

impl AlgebraPreset {
    /// Brings every monomial of `e` to sorted order.
    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        self.check_element(e)?;
        let mut pending = BTreeMap::new();
        for (m, c) in e.terms() {
            accumulate(&mut pending, letters(m).collect(), c.clone());
        }
        self.reduce(pending)
    }

    /// Normal-ordered product `a * b`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut pending = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let w: Word = letters(ma).chain(letters(mb)).collect();
                accumulate(&mut pending, w, ca * cb);
            }
        }
        self.reduce(pending)
    }

    /// `[a, b] = a b - b a` in normal form.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.multiply(a, b)? - self.multiply(b, a)?)
    }

    /// Product of any number of factors, left to right.
    pub fn product(&self, factors: &[Element]) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    fn reduce(&self, mut pending: BTreeMap<Word, Scalar>) -> Result<Element> {
        let mut out = Element::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            match self.step(&w)? {
                Step::Done(m) => out.add_term(m, &c),
                Step::Rewrite(next) => {
                    steps += 1;
                    if steps > self.step_cap() {
                        return Err(Error::NonTermination { steps, monomial: render_word(&w) });
                    }
                    for (s, nw) in next {
                        accumulate(&mut pending, nw, &c * &s);
                    }
                }
            }
        }
        Ok(out)
    }

    /// One rewrite at the leftmost out-of-order position, or the finished monomial.
    fn step(&self, w: &[Letter]) -> Result<Step> {
        let splice = |i: usize, mid: &mut dyn Iterator<Item = Letter>| -> Word {
            let mut v: Word = w[..i].to_vec();
            v.extend(mid);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        for i in 0..w.len() {
            if w[i] == Letter::Q(0) {
                let mut v = w.to_vec();
                v.remove(i);
                return Ok(Step::Rewrite(vec![(Scalar::one(), v)]));
            }
            if i + 1 == w.len() {
                break;
            }
            match (w[i], w[i + 1]) {
                (Letter::Q(a), Letter::Q(b)) => {
                    let n = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
                    let v = splice(i, &mut std::iter::once(Letter::Q(n)));
                    return Ok(Step::Rewrite(vec![(Scalar::one(), v)]));
                }
                (Letter::Q(a), Letter::G(g)) => {
                    // q^a g = g q^a + a D_g q^a
                    let mut out = vec![(Scalar::one(), splice(i, &mut [Letter::G(g), Letter::Q(a)].into_iter()))];
                    for (m, s) in self.q_shift(g)?.terms() {
                        let mut mid = letters(m).chain(std::iter::once(Letter::Q(a)));
                        out.push((s.scale_int(a), splice(i, &mut mid)));
                    }
                    return Ok(Step::Rewrite(out));
                }
                (Letter::G(hi), Letter::G(lo)) if hi > lo => {
                    // hi lo = lo hi + E
                    let mut out = vec![(Scalar::one(), splice(i, &mut [Letter::G(lo), Letter::G(hi)].into_iter()))];
                    for (m, s) in self.swap_correction(hi, lo)?.terms() {
                        out.push((s.clone(), splice(i, &mut letters(m))));
                    }
                    return Ok(Step::Rewrite(out));
                }
                _ => {}
            }
        }
        let mut word = Vec::with_capacity(w.len());
        let mut qexp = 0;
        for l in w {
            match *l {
                Letter::G(g) => word.push(g),
                Letter::Q(n) => qexp = n,
            }
        }
        Ok(Step::Done(Monomial::new(word, qexp)?))
    }
}

fn accumulate(pending: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match pending.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}
